use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;

use crate::{Error, Result};

const HERMITIAN_TOLERANCE: f64 = 1e-14;
const MAX_SWEEPS: usize = 64;

/// Dense square complex matrix stored row-major.
#[derive(Clone, PartialEq)]
pub struct CMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl fmt::Debug for CMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CMatrix {}x{} [", self.dim, self.dim)?;
        for i in 0..self.dim {
            let row: Vec<String> = (0..self.dim)
                .map(|j| {
                    let z = self[(i, j)];
                    format!("{:+.6e}{:+.6e}i", z.re, z.im)
                })
                .collect();
            writeln!(f, "  {}", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl CMatrix {
    pub fn zeros(dim: usize) -> Self {
        CMatrix {
            dim,
            data: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// Builds a matrix from `dim * dim` row-major entries.
    pub fn from_rows(dim: usize, data: Vec<Complex64>) -> Result<Self> {
        if data.len() != dim * dim {
            return Err(Error::InvalidInput(format!(
                "expected {} entries for a {dim}x{dim} matrix, got {}",
                dim * dim,
                data.len()
            )));
        }
        Ok(CMatrix { dim, data })
    }

    pub fn from_real(dim: usize, data: &[f64]) -> Result<Self> {
        Self::from_rows(dim, data.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn from_diagonal(diag: &[Complex64]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = d;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub fn column(&self, j: usize) -> Vec<Complex64> {
        (0..self.dim).map(|i| self[(i, j)]).collect()
    }

    pub fn adjoint(&self) -> CMatrix {
        let mut m = Self::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                m[(j, i)] = self[(i, j)].conj();
            }
        }
        m
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn scale(&self, s: Complex64) -> CMatrix {
        CMatrix {
            dim: self.dim,
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    /// Kronecker product `self ⊗ other`; `self` acts on the leading index.
    pub fn kron(&self, other: &CMatrix) -> CMatrix {
        let n = self.dim * other.dim;
        let mut m = Self::zeros(n);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let a = self[(i, j)];
                for k in 0..other.dim {
                    for l in 0..other.dim {
                        m[(i * other.dim + k, j * other.dim + l)] = a * other[(k, l)];
                    }
                }
            }
        }
        m
    }

    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.dim, "vector length does not match matrix");
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self[(i, j)] * v[j]).sum())
            .collect()
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &CMatrix) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Largest entry of `|U†U - I|`.
    pub fn unitarity_defect(&self) -> f64 {
        (&self.adjoint() * self).max_abs_diff(&CMatrix::identity(self.dim))
    }

    /// Determinant by Gaussian elimination with partial pivoting.
    pub fn determinant(&self) -> Complex64 {
        let n = self.dim;
        let mut a = self.data.clone();
        let mut det = Complex64::new(1.0, 0.0);
        for k in 0..n {
            let pivot = (k..n)
                .max_by(|&x, &y| a[x * n + k].norm().total_cmp(&a[y * n + k].norm()))
                .unwrap_or(k);
            if a[pivot * n + k].norm() == 0.0 {
                return Complex64::new(0.0, 0.0);
            }
            if pivot != k {
                for j in 0..n {
                    a.swap(k * n + j, pivot * n + j);
                }
                det = -det;
            }
            let akk = a[k * n + k];
            det *= akk;
            for i in k + 1..n {
                let factor = a[i * n + k] / akk;
                for j in k..n {
                    let v = a[k * n + j];
                    a[i * n + j] -= factor * v;
                }
            }
        }
        det
    }
}

impl std::ops::Index<(usize, usize)> for CMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.dim + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.dim + j]
    }
}

impl Mul for &CMatrix {
    type Output = CMatrix;
    fn mul(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in product");
        let n = self.dim;
        let mut m = CMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    m.data[i * n + j] += a * rhs[(k, j)];
                }
            }
        }
        m
    }
}

impl Add for &CMatrix {
    type Output = CMatrix;
    fn add(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.dim, rhs.dim);
        CMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &CMatrix {
    type Output = CMatrix;
    fn sub(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.dim, rhs.dim);
        CMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

/// A validated Hermitian matrix of dimension 2 or 4.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianMatrix(CMatrix);

impl HermitianMatrix {
    /// Accepts `m` when `|m_ij - conj(m_ji)| <= 1e-14 * max|m|` for every pair.
    pub fn new(m: CMatrix) -> Result<Self> {
        if m.dim != 2 && m.dim != 4 {
            return Err(Error::BadDimension(m.dim));
        }
        if m.data
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::InvalidInput("matrix has non-finite entries".into()));
        }
        let scale = m.max_abs();
        let mut worst = 0.0f64;
        for i in 0..m.dim {
            for j in i..m.dim {
                worst = worst.max((m[(i, j)] - m[(j, i)].conj()).norm());
            }
        }
        if worst > HERMITIAN_TOLERANCE * scale {
            return Err(Error::NotHermitian(worst));
        }
        Ok(HermitianMatrix(m))
    }

    pub fn from_real(dim: usize, data: &[f64]) -> Result<Self> {
        Self::new(CMatrix::from_real(dim, data)?)
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn into_inner(self) -> CMatrix {
        self.0
    }
}

impl std::ops::Index<(usize, usize)> for HermitianMatrix {
    type Output = Complex64;
    fn index(&self, idx: (usize, usize)) -> &Complex64 {
        &self.0[idx]
    }
}

/// Eigenvalues in ascending order with orthonormal eigenvectors as columns.
#[derive(Clone, Debug, PartialEq)]
pub struct Eigen {
    pub values: Vec<f64>,
    pub vectors: CMatrix,
}

impl Eigen {
    pub fn vector(&self, k: usize) -> Vec<Complex64> {
        self.vectors.column(k)
    }
}

/// Cyclic complex Jacobi diagonalisation.
///
/// Each rotation acts on one `(p, q)` pair with
/// `U_pp = c, U_pq = s, U_qp = -s e^{-iφ}, U_qq = c e^{-iφ}` where `φ` is the
/// phase of `a_pq`. Eigenvectors are normalised so that their
/// largest-modulus component is real and positive.
pub fn eig_hermitian(m: &HermitianMatrix) -> Eigen {
    let n = m.dim();
    let mut a = m.0.clone();
    let mut v = CMatrix::identity(n);
    let scale = a.max_abs();
    if scale > 0.0 {
        for _ in 0..MAX_SWEEPS {
            let off: f64 = (0..n)
                .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
                .map(|(i, j)| a[(i, j)].norm_sqr())
                .sum();
            if off.sqrt() <= 1e-18 * scale {
                break;
            }
            for p in 0..n - 1 {
                for q in p + 1..n {
                    rotate(&mut a, &mut v, p, q);
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| a[(x, x)].re.total_cmp(&a[(y, y)].re));
    let values = order.iter().map(|&k| a[(k, k)].re).collect();
    let mut vectors = CMatrix::zeros(n);
    for (col, &k) in order.iter().enumerate() {
        let mut vec = v.column(k);
        fix_phase(&mut vec);
        for (i, z) in vec.into_iter().enumerate() {
            vectors[(i, col)] = z;
        }
    }
    Eigen { values, vectors }
}

fn rotate(a: &mut CMatrix, v: &mut CMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let phase = Complex64::new(0.0, -apq.arg()).exp(); // e^{-iφ}
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let theta = (aqq - app) / (2.0 * r);
    let t = if theta.is_infinite() {
        0.0
    } else {
        let sign = if theta >= 0.0 { 1.0 } else { -1.0 };
        sign / (theta.abs() + theta.hypot(1.0))
    };
    let c = 1.0 / t.hypot(1.0);
    let s = t * c;
    if s == 0.0 {
        return;
    }
    let u_pp = Complex64::new(c, 0.0);
    let u_pq = Complex64::new(s, 0.0);
    let u_qp = phase * -s;
    let u_qq = phase * c;
    let n = a.dim;
    // A <- A U (columns p, q)
    for i in 0..n {
        let aip = a[(i, p)];
        let aiq = a[(i, q)];
        a[(i, p)] = aip * u_pp + aiq * u_qp;
        a[(i, q)] = aip * u_pq + aiq * u_qq;
        let vip = v[(i, p)];
        let viq = v[(i, q)];
        v[(i, p)] = vip * u_pp + viq * u_qp;
        v[(i, q)] = vip * u_pq + viq * u_qq;
    }
    // A <- U† A (rows p, q)
    for j in 0..n {
        let apj = a[(p, j)];
        let aqj = a[(q, j)];
        a[(p, j)] = u_pp.conj() * apj + u_qp.conj() * aqj;
        a[(q, j)] = u_pq.conj() * apj + u_qq.conj() * aqj;
    }
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);
}

fn fix_phase(vec: &mut [Complex64]) {
    let mut k = 0;
    for i in 1..vec.len() {
        if vec[i].norm() > vec[k].norm() * (1.0 + 1e-12) {
            k = i;
        }
    }
    let pivot = vec[k];
    let norm = pivot.norm();
    if norm == 0.0 {
        return;
    }
    let rot = pivot.conj() / norm;
    for z in vec.iter_mut() {
        *z *= rot;
    }
    vec[k] = Complex64::new(vec[k].re, 0.0);
}

/// `exp(-i m t)` through the eigendecomposition of `m`.
pub fn expm_hermitian(m: &HermitianMatrix, t: f64) -> CMatrix {
    let eig = eig_hermitian(m);
    let phases: Vec<Complex64> = eig
        .values
        .iter()
        .map(|&l| Complex64::new(0.0, -l * t).exp())
        .collect();
    let d = CMatrix::from_diagonal(&phases);
    &(&eig.vectors * &d) * &eig.vectors.adjoint()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn sample4() -> HermitianMatrix {
        HermitianMatrix::new(
            CMatrix::from_rows(
                4,
                vec![
                    c(1.0, 0.0),
                    c(0.3, 0.2),
                    c(0.0, -0.5),
                    c(0.1, 0.0),
                    c(0.3, -0.2),
                    c(-2.0, 0.0),
                    c(0.7, 0.1),
                    c(0.0, 0.4),
                    c(0.0, 0.5),
                    c(0.7, -0.1),
                    c(0.5, 0.0),
                    c(-0.2, 0.3),
                    c(0.1, 0.0),
                    c(0.0, -0.4),
                    c(-0.2, -0.3),
                    c(3.0, 0.0),
                ],
            )
            .unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn rejects_non_hermitian_and_bad_dimension() {
        let m = CMatrix::from_real(2, &[1.0, 2.0, 2.1, 0.0]).unwrap();
        assert_eq!(HermitianMatrix::new(m).unwrap_err().code(), "NOT_HERMITIAN");
        assert_eq!(
            HermitianMatrix::new(CMatrix::identity(3))
                .unwrap_err()
                .code(),
            "BAD_DIMENSION"
        );
        let m = CMatrix::from_rows(2, vec![c(0.0, 1.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)])
            .unwrap();
        assert!(HermitianMatrix::new(m).is_err());
    }

    #[test]
    fn diagonal_input() {
        let m = HermitianMatrix::from_real(
            4,
            &[
                3.0, 0.0, 0.0, 0.0, 0.0, -1.0, 0.0, 0.0, 0.0, 0.0, 2.0, 0.0, 0.0, 0.0, 0.0, 0.5,
            ],
        )
        .unwrap();
        let e = eig_hermitian(&m);
        assert_eq!(e.values, vec![-1.0, 0.5, 2.0, 3.0]);
        assert_eq!(
            e.vector(0),
            vec![c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]
        );
    }

    #[test]
    fn symmetric_two_level() {
        let v = 0.37;
        let e = eig_hermitian(&HermitianMatrix::from_real(2, &[0.0, v, v, 0.0]).unwrap());
        assert!((e.values[0] + v).abs() < 1e-15);
        assert!((e.values[1] - v).abs() < 1e-15);
    }

    #[test]
    fn residuals_reconstruction_and_orthonormality() {
        let m = sample4();
        let e = eig_hermitian(&m);
        let norm = m.matrix().max_abs();
        for k in 0..4 {
            let vk = e.vector(k);
            let mv = m.matrix().apply(&vk);
            let res = mv
                .iter()
                .zip(&vk)
                .map(|(a, b)| (a - b * e.values[k]).norm())
                .fold(0.0, f64::max);
            assert!(res <= 1e-12 * norm, "residual {res}");
            let big =
                vk.iter().cloned().fold(
                    c(0.0, 0.0),
                    |acc, z| if z.norm() > acc.norm() { z } else { acc },
                );
            assert!(big.im == 0.0 && big.re > 0.0);
        }
        let gram = &e.vectors.adjoint() * &e.vectors;
        assert!(gram.max_abs_diff(&CMatrix::identity(4)) < 1e-12);
        let lambda =
            CMatrix::from_diagonal(&e.values.iter().map(|&x| c(x, 0.0)).collect::<Vec<_>>());
        let rebuilt = &(&e.vectors * &lambda) * &e.vectors.adjoint();
        assert!(rebuilt.max_abs_diff(m.matrix()) < 1e-12 * norm);
        assert!(e.values.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn expm_properties() {
        let m = sample4();
        assert!(expm_hermitian(&m, 0.0).max_abs_diff(&CMatrix::identity(4)) < 1e-14);
        let u = expm_hermitian(&m, 1.7);
        assert!(u.unitarity_defect() < 1e-12);
        assert!((u.determinant().norm() - 1.0).abs() < 1e-12);
        let d = HermitianMatrix::from_real(2, &[0.4, 0.0, 0.0, -1.1]).unwrap();
        let u = expm_hermitian(&d, 2.0);
        assert!((u[(0, 0)] - c(0.0, -0.8).exp()).norm() < 1e-15);
        assert!((u[(1, 1)] - c(0.0, 2.2).exp()).norm() < 1e-15);
    }

    #[test]
    fn exchange_block_at_quarter_period() {
        // [[0, V],[V, 0]] for V t = π/2 gives [[0, -i],[-i, 0]]
        let v = 0.8;
        let m = HermitianMatrix::from_real(2, &[0.0, v, v, 0.0]).unwrap();
        let u = expm_hermitian(&m, std::f64::consts::FRAC_PI_2 / v);
        let expected = CMatrix::from_rows(
            2,
            vec![c(0.0, 0.0), c(0.0, -1.0), c(0.0, -1.0), c(0.0, 0.0)],
        )
        .unwrap();
        assert!(u.max_abs_diff(&expected) < 1e-14);
    }

    #[test]
    fn kron_and_determinant() {
        let x = CMatrix::from_real(2, &[0.0, 1.0, 1.0, 0.0]).unwrap();
        let k = x.kron(&CMatrix::identity(2));
        assert_eq!(k[(0, 2)], c(1.0, 0.0));
        assert_eq!(k[(1, 3)], c(1.0, 0.0));
        assert_eq!(k[(0, 1)], c(0.0, 0.0));
        assert!((k.determinant() - c(1.0, 0.0)).norm() < 1e-15);
        assert!((x.determinant() + c(1.0, 0.0)).norm() < 1e-15);
    }
}
