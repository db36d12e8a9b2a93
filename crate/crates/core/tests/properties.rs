use forster_core::coupling::{forster_coupling, orientation_factor, overlap, PairSpec};
use forster_core::gates::{evolve, fidelity, iswap_time, Unitary4};
use forster_core::numerics::{
    eig_hermitian, erf, expm_hermitian, integrate, CMatrix, HermitianMatrix, QuadratureSpec,
};
use forster_core::singledot::{confinement_lengths, coulomb_eh, exciton_energy, DotSpec};
use forster_core::spectrum::{eigensystem, eigensystem_from_parts, sweep, sweep_row};
use forster_core::tunneling::{effective_subspace, exact_subspace_states, TunnelParams};
use forster_core::{FieldConfig, Vec3};
use num_complex::Complex64;
use proptest::prelude::*;

fn config() -> ProptestConfig {
    ProptestConfig::with_cases(64)
}

fn tuned_pair() -> PairSpec {
    PairSpec::new(
        DotSpec::isotropic(0.00579, 0.04, 0.45, 1.1, 7.0, Vec3::Z).unwrap(),
        DotSpec::isotropic(0.03414, 0.04, 0.45, 0.394, 7.0, Vec3::Z).unwrap(),
        Vec3::new(0.0, 0.0, 7.0),
        12.0,
        0.0,
        0.0,
    )
    .unwrap()
}

fn hermitian4(re: &[f64], im: &[f64]) -> HermitianMatrix {
    let mut m = CMatrix::zeros(4);
    let mut k = 0;
    for i in 0..4 {
        m[(i, i)] = Complex64::new(re[k], 0.0);
        k += 1;
        for j in i + 1..4 {
            let z = Complex64::new(re[k], im[k]);
            m[(i, j)] = z;
            m[(j, i)] = z.conj();
            k += 1;
        }
    }
    HermitianMatrix::new(m).unwrap()
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn erf_matches_reference(x in -7.0f64..7.0) {
        let ours = erf(x);
        let reference = statrs::function::erf::erf(x);
        // statrs is accurate to roughly 1e-11 in places
        prop_assert!((ours - reference).abs() <= 1e-10, "{x}: {ours} vs {reference}");
        prop_assert_eq!(erf(-x), -ours);
    }

    #[test]
    fn quadrature_of_gaussian(a in 0.2f64..5.0, shift in -2.0f64..2.0) {
        let spec = QuadratureSpec::default();
        let q = integrate(|x| (-a * (x - shift).powi(2)).exp(), f64::NEG_INFINITY, f64::INFINITY, &spec).unwrap();
        let exact = (std::f64::consts::PI / a).sqrt();
        prop_assert!(((q.value - exact) / exact).abs() < 1e-9);
    }

    #[test]
    fn eigen_decomposition_reconstructs(re in prop::collection::vec(-3.0f64..3.0, 10), im in prop::collection::vec(-3.0f64..3.0, 10)) {
        let h = hermitian4(&re, &im);
        let eig = eig_hermitian(&h);
        prop_assert!(eig.values.windows(2).all(|w| w[0] <= w[1]));
        let mut v = CMatrix::zeros(4);
        for k in 0..4 {
            for (i, x) in eig.vector(k).into_iter().enumerate() {
                v[(i, k)] = x;
            }
        }
        prop_assert!(v.unitarity_defect() < 1e-12);
        let d = CMatrix::from_diagonal(&eig.values.iter().map(|&x| Complex64::new(x, 0.0)).collect::<Vec<_>>());
        let back = &(&v * &d) * &v.adjoint();
        prop_assert!(back.max_abs_diff(h.matrix()) < 1e-12 * h.matrix().max_abs().max(1.0));
        let u = expm_hermitian(&h, 0.37);
        prop_assert!(u.unitarity_defect() < 1e-12);
    }

    #[test]
    fn eigen_identity(dw in -5e-3f64..5e-3, v in -1.0f64..1.0, vxx in -2.0f64..2.0) {
        let eig = eigensystem_from_parts(0.0, 1.3, 1.3 - dw, v, vxx);
        prop_assert!(eig.e_minus <= eig.e_plus);
        prop_assert!((eig.e00 + eig.e11 - (eig.e_minus + eig.e_plus) - vxx * 1e-3).abs() < 1e-14 * 4.0);
        prop_assert!((eig.gap_mev() - (dw * 1e3).hypot(2.0 * v)).abs() < 1e-9);
        let n = eig.psi_minus[0].powi(2) + eig.psi_minus[1].powi(2);
        prop_assert!((n - 1.0).abs() < 1e-12);
    }

    #[test]
    fn confinement_scaling(c in 0.002f64..0.1, k in 1.5f64..20.0) {
        let a = DotSpec::isotropic(c, 0.05, 0.4, 1.0, 6.0, Vec3::Z).unwrap();
        let b = DotSpec::isotropic(c * k, 0.05, 0.4, 1.0, 6.0, Vec3::Z).unwrap();
        let (la, lb) = (confinement_lengths(&a), confinement_lengths(&b));
        prop_assert!((la.d_e.x / lb.d_e.x - k.powf(0.25)).abs() < 1e-12 * k);
        // stronger confinement binds harder
        prop_assert!(coulomb_eh(&b, 0.0, 12.0).unwrap() > coulomb_eh(&a, 0.0, 12.0).unwrap());
    }

    #[test]
    fn overlap_bounded_and_even_in_field(f in 0.0f64..1.5e7) {
        let dot = DotSpec::isotropic(0.00579, 0.04, 0.45, 1.1, 7.0, Vec3::Z).unwrap();
        let plus = overlap(&dot, &FieldConfig::along_x(f).unwrap()).unwrap();
        let minus = overlap(&dot, &FieldConfig::along_x(-f).unwrap()).unwrap();
        let zero = overlap(&dot, &FieldConfig::zero()).unwrap();
        prop_assert!(plus > 0.0 && plus <= zero && zero <= 1.0);
        prop_assert!((plus - minus).abs() < 1e-15);
    }

    #[test]
    fn exciton_energy_is_lowered_by_field(f in 1e5f64..1.5e7) {
        let dot = DotSpec::isotropic(0.03414, 0.04, 0.45, 0.394, 7.0, Vec3::Z).unwrap();
        prop_assert!(exciton_energy(&dot, f, 12.0).unwrap() < exciton_energy(&dot, 0.0, 12.0).unwrap());
        prop_assert_eq!(exciton_energy(&dot, f, 12.0).unwrap(), exciton_energy(&dot, -f, 12.0).unwrap());
    }

    #[test]
    fn coupling_inverse_cube(r in 6.0f64..40.0) {
        let pair = tuned_pair();
        let f = FieldConfig::zero();
        let base = forster_coupling(&pair, &f).unwrap();
        let moved = forster_coupling(&pair.with_separation_nm(Vec3::new(0.0, 0.0, r)).unwrap(), &f).unwrap();
        prop_assert!((moved / base - (7.0 / r).powi(3)).abs() < 1e-12);
    }

    #[test]
    fn orientation_factor_range(t in 0.0f64..std::f64::consts::PI, p in 0.0f64..std::f64::consts::TAU) {
        let r = Vec3::new(t.sin() * p.cos(), t.sin() * p.sin(), t.cos());
        let k = orientation_factor(Vec3::Z, Vec3::Z, r);
        prop_assert!((-2.0 - 1e-12..=1.0 + 1e-12).contains(&k));
        prop_assert!((k - (1.0 - 3.0 * t.cos().powi(2))).abs() < 1e-12);
    }

    #[test]
    fn evolve_is_unitary_and_periodic(v in 0.05f64..2.0, sign in prop::bool::ANY, frac in 0.0f64..1.0) {
        let v = if sign { v } else { -v };
        let t = iswap_time(v).unwrap();
        let u = evolve(v, frac * 4.0 * t);
        prop_assert!(u.matrix().unitarity_defect() < 1e-12);
        prop_assert!(Unitary4::new(u.matrix().clone()).is_ok());
        prop_assert!((u.matrix()[(0, 0)] - Complex64::new(1.0, 0.0)).norm() < 1e-14);
        prop_assert!((u.matrix()[(3, 3)] - Complex64::new(1.0, 0.0)).norm() < 1e-14);
        prop_assert!(fidelity(&evolve(v, 4.0 * t), &Unitary4::identity()) >= 1.0 - 1e-10);
    }

    #[test]
    fn effective_tunneling_second_order(ratio in 0.005f64..0.03, v_frac in 0.0f64..0.05, te_frac in 0.5f64..1.0) {
        let delta = 10.0;
        let t = ratio * delta;
        let p = TunnelParams::identical(1.2, 0.1, 25.0, 25.0 - delta, t * te_frac, t, v_frac * t).unwrap();
        let h = effective_subspace(&p).unwrap();
        let eig = eig_hermitian(&h);
        let reference = p.pair_energy(0, 0);
        let exact = exact_subspace_states(&p);
        for (e, s) in eig.values.iter().zip(exact.iter()) {
            prop_assert!((s.energy - reference - e).abs() < t.powi(3) / (delta * delta));
        }
    }
}

#[test]
#[allow(clippy::excessive_precision)]
fn erf_high_precision_points() {
    for (x, v) in [
        (0.1, 0.1124629160182848922),
        (0.901321522409495, 0.79757078639846548794),
        (2.5, 0.99959304798255504106),
        (3.5, 0.99999925690162765859),
        (5.0, 0.99999999999846254021),
    ] {
        assert!((erf(x) - v).abs() <= 1e-14, "{x}");
    }
}

#[test]
fn sweep_is_deterministic_and_matches_rows() {
    let pair = tuned_pair();
    let a = sweep(&pair, Vec3::X, 0.0, 1.5e7, 61).unwrap();
    let b = sweep(&pair, Vec3::X, 0.0, 1.5e7, 61).unwrap();
    assert_eq!(a, b);
    for row in &a {
        let single = sweep_row(&pair, &FieldConfig::along_x(row.f).unwrap()).unwrap();
        assert_eq!(*row, single);
    }
    assert_eq!(a.last().unwrap().f, 1.5e7);
}

#[test]
fn crossing_closes_without_coupling() {
    let pair = tuned_pair()
        .with_dots(
            DotSpec::isotropic(0.00579, 0.04, 0.45, 1.1, 0.0, Vec3::Z).unwrap(),
            DotSpec::isotropic(0.03414, 0.04, 0.45, 0.394, 0.0, Vec3::Z).unwrap(),
        )
        .unwrap();
    let rows = sweep(&pair, Vec3::X, 0.0, 1.5e7, 301).unwrap();
    let signs: Vec<bool> = rows.iter().map(|r| r.omega1 > r.omega2).collect();
    assert!(signs.windows(2).any(|w| w[0] != w[1]));
    let gap = rows
        .iter()
        .map(|r| r.e_plus - r.e_minus)
        .fold(f64::INFINITY, f64::min);
    assert!(gap * 1e3 < 2.0 * 0.05);
}

#[test]
fn detuning_curvature_sign() {
    let pair = tuned_pair();
    let at = |f: f64| {
        eigensystem(&pair, &FieldConfig::along_x(f).unwrap())
            .unwrap()
            .delta_omega
    };
    // the shallower dot I shifts faster, so Δω falls with |F|
    assert!(at(0.0) > at(5e6));
    assert!(at(5e6) > at(1e7));
    assert!(at(0.0) > 0.0 && at(1e7) < 0.0);
}
