use forster_core::constants::{EV, HBAR};
use forster_core::coupling::{dipole_coupling, forster_coupling, overlap, PairSpec};
use forster_core::gates::{
    cnot_sequence, concurrence, evolve, fidelity, iswap, iswap_time, TwoQubitState,
};
use forster_core::optics::{absorption_spectrum, effective_dipoles, level_rates};
use forster_core::singledot::{coulomb_eh, exciton_energy};
use forster_core::spectrum::{
    anticrossing_gap, eigensystem, field_grid, resonance_field_analytic, sweep,
};
use forster_core::tunneling::{
    effective_splitting, effective_subspace, exact_subspace_states, leakage_weights,
    pair_hamiltonian_sp, tunneling_safety, TunnelParams,
};
use forster_core::{Error, FieldConfig};

use crate::config::RunConfig;
use crate::error::CliError;
use crate::output::{Record, Report, Table, Value};

/// Command-line values that take precedence over the config file.
#[derive(Debug, Clone, Copy, Default)]
pub struct Overrides {
    pub points: Option<usize>,
    /// MV/m.
    pub fmax: Option<f64>,
}

pub const SWEEP_COLUMNS: [&str; 10] = [
    "F_V_per_m",
    "omega1_eV",
    "omega2_eV",
    "VF_meV",
    "E_minus_eV",
    "E_plus_eV",
    "a1",
    "a2",
    "gamma_minus_per_s",
    "gamma_plus_per_s",
];

fn points(cfg: &RunConfig, o: &Overrides) -> Result<usize, CliError> {
    let p = o.points.unwrap_or(cfg.points);
    if p < 2 {
        return Err(CliError::Validation {
            path: "--points".into(),
            message: "must be at least 2".into(),
        });
    }
    Ok(p)
}

fn field_stop(cfg: &RunConfig, o: &Overrides) -> Result<f64, CliError> {
    match o.fmax {
        None => Ok(cfg.field.stop),
        Some(f) if f.is_finite() && f * 1e6 > cfg.field.start => Ok(f * 1e6),
        Some(_) => Err(CliError::Validation {
            path: "--fmax".into(),
            message: "must be finite and above the sweep start".into(),
        }),
    }
}

fn columns(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

pub fn cmd_sweep(cfg: &RunConfig, o: &Overrides) -> Result<Report, CliError> {
    let pair = cfg.require_pair()?;
    let rows = sweep(
        pair,
        cfg.field.direction,
        cfg.field.start,
        field_stop(cfg, o)?,
        points(cfg, o)?,
    )?;
    Ok(Report::Table(Table {
        units: "F in V/m; omega and E in eV; VF in meV; rates in 1/s".into(),
        columns: columns(&SWEEP_COLUMNS),
        rows: rows
            .iter()
            .map(|r| {
                vec![
                    r.f,
                    r.omega1,
                    r.omega2,
                    r.v_f,
                    r.e_minus,
                    r.e_plus,
                    r.a1,
                    r.a2,
                    r.gamma_minus,
                    r.gamma_plus,
                ]
            })
            .collect(),
    }))
}

pub fn cmd_resonance(cfg: &RunConfig) -> Result<Report, CliError> {
    let pair = cfg.require_pair()?;
    let ac = anticrossing_gap(pair, cfg.field.direction)?;
    Ok(Report::Record(Record {
        units: "F in V/m; energies in meV".into(),
        entries: vec![
            ("F_res_V_per_m".into(), Value::Num(ac.resonance_field)),
            ("gap_meV".into(), Value::Num(ac.gap_mev)),
            (
                "VF_at_resonance_meV".into(),
                Value::Num(ac.v_f_at_resonance_mev),
            ),
        ],
        bare_json: true,
    }))
}

pub fn cmd_singledot(cfg: &RunConfig, o: &Overrides) -> Result<Report, CliError> {
    let pair = cfg.require_pair()?;
    let grid = field_grid(cfg.field.start, field_stop(cfg, o)?, points(cfg, o)?)?;
    let eps = pair.eps_r();
    let mut rows = Vec::with_capacity(grid.len());
    for f in grid {
        let field = FieldConfig::new(f, cfg.field.direction)?;
        let (a, b) = (pair.dot_i(), pair.dot_ii());
        rows.push(vec![
            f,
            overlap(a, &field)?,
            overlap(b, &field)?,
            exciton_energy(a, f, eps)?,
            exciton_energy(b, f, eps)?,
            coulomb_eh(a, f, eps)?,
            coulomb_eh(b, f, eps)?,
        ]);
    }
    Ok(Report::Table(Table {
        units: "F in V/m; O dimensionless; E in eV; M in meV".into(),
        columns: columns(&[
            "F_V_per_m",
            "O_I",
            "O_II",
            "E_I_eV",
            "E_II_eV",
            "Meh_I_meV",
            "Meh_II_meV",
        ]),
        rows,
    }))
}

pub fn cmd_coupling(cfg: &RunConfig, o: &Overrides) -> Result<Report, CliError> {
    let pair = cfg.require_pair()?;
    let c = &cfg.coupling;
    let n = o.points.unwrap_or(c.points);
    let grid = field_grid(c.r_min_nm, c.r_max_nm, n)?;
    let axis = pair.separation_nm().normalized()?;
    let (di, dii) = (pair.dot_i().d_cv_dir(), pair.dot_ii().d_cv_dir());
    let dipoles: Vec<(forster_core::Vec3, forster_core::Vec3)> = if c.dipoles_ea.is_empty() {
        vec![effective_dipoles(pair, &FieldConfig::zero())?]
    } else {
        c.dipoles_ea.iter().map(|&d| (di * d, dii * d)).collect()
    };
    let mut names = vec!["R_nm".to_string()];
    if c.dipoles_ea.is_empty() {
        names.push("VF_meV".into());
    } else {
        names.extend(c.dipoles_ea.iter().map(|d| format!("VF_meV_at_{d}eA")));
    }
    let mut rows = Vec::with_capacity(grid.len());
    for r in grid {
        let mut row = vec![r];
        for (p1, p2) in &dipoles {
            row.push(dipole_coupling(*p1, *p2, axis * r, pair.eps_r())?);
        }
        rows.push(row);
    }
    Ok(Report::Table(Table {
        units: "R in nm; VF in meV".into(),
        columns: names,
        rows,
    }))
}

fn omega_grid(cfg: &RunConfig, pair: &PairSpec) -> Result<Vec<f64>, CliError> {
    let opt = &cfg.optics;
    let (lo, hi) = match opt.omega_window {
        Some(w) => w,
        None => {
            let (mut lo, mut hi, mut width) = (f64::INFINITY, f64::NEG_INFINITY, 0.0f64);
            for &f in &opt.fields {
                let field = FieldConfig::new(f, cfg.field.direction)?;
                let eig = eigensystem(pair, &field)?;
                let (gm, gp) = level_rates(pair, &field)?;
                lo = lo.min(eig.e_minus - eig.e00);
                hi = hi.max(eig.e_plus - eig.e00);
                width = width.max(opt.broadening_factor * gm.max(gp) * HBAR / EV);
            }
            let pad = 25.0 * width.max(1e-6);
            (lo - pad, hi + pad)
        }
    };
    let n = opt.omega_points;
    Ok((0..n)
        .map(|i| {
            if i + 1 == n {
                hi
            } else {
                lo + (hi - lo) * i as f64 / (n - 1) as f64
            }
        })
        .collect())
}

pub fn cmd_spectrum(cfg: &RunConfig) -> Result<Report, CliError> {
    let pair = cfg.require_pair()?;
    let grid = omega_grid(cfg, pair)?;
    let opt = &cfg.optics;
    let mut rows = Vec::with_capacity(grid.len() * opt.fields.len());
    for &f in &opt.fields {
        let field = FieldConfig::new(f, cfg.field.direction)?;
        let lines = absorption_spectrum(pair, &field, &grid, opt.eta, opt.broadening_factor)?;
        let (minus, plus) = (&lines[0], &lines[1]);
        for (i, &w) in grid.iter().enumerate() {
            rows.push(vec![
                f,
                w,
                minus.alpha[i],
                plus.alpha[i],
                minus.alpha[i] + plus.alpha[i],
            ]);
        }
    }
    Ok(Report::Table(Table {
        units: "F in V/m; omega in eV; alpha in m^2".into(),
        columns: columns(&[
            "F_V_per_m",
            "omega_eV",
            "alpha_minus_m2",
            "alpha_plus_m2",
            "alpha_total_m2",
        ]),
        rows,
    }))
}

fn gate_coupling(cfg: &RunConfig) -> Result<(f64, String), CliError> {
    if let Some(v) = cfg.gates_v_f_mev {
        return Ok((v, "config".into()));
    }
    let pair = cfg.require_pair()?;
    let dir = cfg.field.direction;
    match resonance_field_analytic(pair) {
        Ok(f) => Ok((
            forster_coupling(pair, &FieldConfig::new(f, dir)?)?,
            "pair_at_resonance".into(),
        )),
        Err(Error::DegenerateDots) => Ok((
            forster_coupling(pair, &FieldConfig::zero())?,
            "pair_at_zero_field".into(),
        )),
        Err(e) => Err(e.into()),
    }
}

pub fn cmd_gates(cfg: &RunConfig) -> Result<Report, CliError> {
    let (v, source) = gate_coupling(cfg)?;
    let t = iswap_time(v)?;
    let seq = cnot_sequence(v)?;
    let mid = evolve(v, t / 2.0).apply(&TwoQubitState::basis(2));
    Ok(Report::Record(Record {
        units: "VF in meV; time in s".into(),
        entries: vec![
            ("VF_meV".into(), Value::Num(v)),
            ("VF_source".into(), Value::Text(source)),
            ("iswap_time_s".into(), Value::Num(t)),
            (
                "iswap_fidelity".into(),
                Value::Num(fidelity(&evolve(v, t), &iswap())),
            ),
            ("midpoint_concurrence".into(), Value::Num(concurrence(&mid))),
            ("cnot_fidelity".into(), Value::Num(seq.fidelity)),
            (
                "cnot_convention".into(),
                Value::Text(seq.convention.label().into()),
            ),
        ],
        bare_json: false,
    }))
}

pub fn cmd_tunneling(cfg: &RunConfig) -> Result<Report, CliError> {
    let t = cfg.tunneling.as_ref().ok_or_else(|| CliError::Validation {
        path: "tunneling".into(),
        message: "missing required section".into(),
    })?;
    let p = TunnelParams::new(t.e_e_ev, t.e_h_ev, t.m_mev, t.t_e_mev, t.t_h_mev, t.v_f_mev)?;
    let mut entries = Vec::new();
    let h = pair_hamiltonian_sp(&p);
    for i in 0..4 {
        for j in 0..4 {
            entries.push((format!("H_{i}{j}_meV"), Value::Num(h[(i, j)].re)));
        }
    }
    let safety = tunneling_safety(&p);
    entries.push(("D_h_meV".into(), Value::Num(safety.d_h)));
    entries.push(("D_e_meV".into(), Value::Num(safety.d_e)));
    entries.push(("safety_ratio".into(), Value::Num(safety.ratio)));
    entries.push(("safety_threshold".into(), Value::Num(safety.threshold)));
    entries.push(("safety_pass".into(), Value::Bool(safety.pass)));
    let w = leakage_weights(&p)?;
    entries.push(("te_over_Dh".into(), Value::Num(w.t_e_over_d_h)));
    entries.push(("th_over_Dh".into(), Value::Num(w.t_h_over_d_h)));
    entries.push(("te_over_De".into(), Value::Num(w.t_e_over_d_e)));
    entries.push(("th_over_De".into(), Value::Num(w.t_h_over_d_e)));
    let [lo, hi] = exact_subspace_states(&p);
    entries.push(("exact_E_low_meV".into(), Value::Num(lo.energy)));
    entries.push(("exact_E_high_meV".into(), Value::Num(hi.energy)));
    entries.push((
        "exact_splitting_meV".into(),
        Value::Num(hi.energy - lo.energy),
    ));
    if p.is_identical() {
        let eff = effective_subspace(&p)?;
        entries.push(("effective_diagonal_meV".into(), Value::Num(eff[(0, 0)].re)));
        entries.push((
            "effective_offdiagonal_meV".into(),
            Value::Num(eff[(0, 1)].re),
        ));
        entries.push((
            "effective_splitting_meV".into(),
            Value::Num(effective_splitting(&p)?),
        ));
    }
    Ok(Report::Record(Record {
        units: "energies in meV; ratios dimensionless".into(),
        entries,
        bare_json: false,
    }))
}
