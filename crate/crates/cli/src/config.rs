//! Run configuration. Every key carries its unit; unknown keys are rejected.

use std::path::Path;

use forster_core::coupling::PairSpec;
use forster_core::singledot::{well_depth_to_c, DotSpec};
use forster_core::Vec3;
use serde::Deserialize;
use sha2::{Digest, Sha256};

use crate::error::CliError;

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    pair: Option<RawPair>,
    field: Option<RawField>,
    sweep: Option<RawSweep>,
    optics: Option<RawOptics>,
    coupling: Option<RawCoupling>,
    tunneling: Option<RawTunneling>,
    gates: Option<RawGates>,
    output: Option<RawOutput>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
#[allow(non_snake_case)]
struct RawPair {
    dot_i: Option<RawDot>,
    dot_ii: Option<RawDot>,
    R_nm: Option<[f64; 3]>,
    eps_r: Option<f64>,
    vxx_meV: Option<f64>,
    omega0_eV: Option<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
#[allow(non_snake_case)]
struct RawDot {
    c_J_per_m2: Option<f64>,
    well_depth_meV: Option<f64>,
    well_radius_nm: Option<f64>,
    me_rel: Option<f64>,
    mh_rel: Option<f64>,
    egap_eV: Option<f64>,
    dcv_eA: Option<f64>,
    dcv_dir: Option<[f64; 3]>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
#[allow(non_snake_case)]
struct RawField {
    direction: Option<[f64; 3]>,
    start_MV_per_m: Option<f64>,
    stop_MV_per_m: Option<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSweep {
    points: Option<usize>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
#[allow(non_snake_case)]
struct RawOptics {
    eta: Option<f64>,
    broadening_factor: Option<f64>,
    fields_MV_per_m: Option<Vec<f64>>,
    omega_min_eV: Option<f64>,
    omega_max_eV: Option<f64>,
    omega_points: Option<usize>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
#[allow(non_snake_case)]
struct RawCoupling {
    R_min_nm: Option<f64>,
    R_max_nm: Option<f64>,
    points: Option<usize>,
    dipoles_eA: Option<Vec<f64>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
#[allow(non_snake_case)]
struct RawTunneling {
    e_e_eV: Option<[f64; 2]>,
    e_h_eV: Option<[f64; 2]>,
    M_meV: Option<[[f64; 2]; 2]>,
    te_meV: Option<f64>,
    th_meV: Option<f64>,
    VF_meV: Option<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
#[allow(non_snake_case)]
struct RawGates {
    VF_meV: Option<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOutput {
    format: Option<Format>,
    path: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone)]
pub struct FieldRange {
    pub direction: Vec3,
    /// V/m.
    pub start: f64,
    /// V/m.
    pub stop: f64,
}

#[derive(Debug, Clone)]
pub struct OpticsConfig {
    pub eta: f64,
    pub broadening_factor: f64,
    /// V/m.
    pub fields: Vec<f64>,
    /// eV; `None` picks a window around the lines.
    pub omega_window: Option<(f64, f64)>,
    pub omega_points: usize,
}

#[derive(Debug, Clone)]
pub struct CouplingSweep {
    pub r_min_nm: f64,
    pub r_max_nm: f64,
    pub points: usize,
    /// e·Å; empty means the pair's own effective dipoles.
    pub dipoles_ea: Vec<f64>,
}

#[derive(Debug, Clone)]
pub struct TunnelingConfig {
    pub e_e_ev: [f64; 2],
    pub e_h_ev: [f64; 2],
    pub m_mev: [[f64; 2]; 2],
    pub t_e_mev: f64,
    pub t_h_mev: f64,
    pub v_f_mev: f64,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub pair: Option<PairSpec>,
    pub field: FieldRange,
    pub points: usize,
    pub optics: OpticsConfig,
    pub coupling: CouplingSweep,
    pub tunneling: Option<TunnelingConfig>,
    pub gates_v_f_mev: Option<f64>,
    pub format: Format,
    pub output_path: Option<String>,
    /// Hex SHA-256 of the raw config bytes.
    pub sha256: String,
}

impl RunConfig {
    /// The pair, or a validation error if the config has none.
    pub fn require_pair(&self) -> Result<&PairSpec, CliError> {
        self.pair
            .as_ref()
            .ok_or_else(|| invalid("pair", "missing required section"))
    }
}

fn invalid(path: &str, message: &str) -> CliError {
    CliError::Validation {
        path: path.to_string(),
        message: message.to_string(),
    }
}

fn require<T: Copy>(value: Option<T>, path: &str) -> Result<T, CliError> {
    value.ok_or_else(|| invalid(path, "missing required field"))
}

fn positive(value: f64, path: &str) -> Result<f64, CliError> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(invalid(
            path,
            &format!("must be positive and finite, got {value}"),
        ))
    }
}

fn finite(value: f64, path: &str) -> Result<f64, CliError> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(invalid(path, "must be finite"))
    }
}

fn unit_vector(v: [f64; 3], path: &str) -> Result<Vec3, CliError> {
    Vec3(v)
        .normalized()
        .map_err(|_| invalid(path, "must be a finite non-zero vector"))
}

fn build_dot(raw: &RawDot, path: &str) -> Result<DotSpec, CliError> {
    let p = |key: &str| format!("{path}.{key}");
    let c = match (raw.c_J_per_m2, raw.well_depth_meV, raw.well_radius_nm) {
        (Some(c), None, None) => positive(c, &p("c_J_per_m2"))?,
        (None, Some(depth), Some(radius)) => {
            let depth = positive(depth, &p("well_depth_meV"))?;
            let radius = positive(radius, &p("well_radius_nm"))?;
            well_depth_to_c(depth, radius).map_err(|e| invalid(path, &e.to_string()))?
        }
        (None, Some(_), None) => {
            return Err(invalid(&p("well_radius_nm"), "missing required field"))
        }
        (None, None, Some(_)) => {
            return Err(invalid(&p("well_depth_meV"), "missing required field"))
        }
        (None, None, None) => {
            return Err(invalid(
                &p("c_J_per_m2"),
                "missing: give c_J_per_m2 or well_depth_meV with well_radius_nm",
            ))
        }
        _ => {
            return Err(invalid(
                path,
                "give either c_J_per_m2 or well_depth_meV with well_radius_nm, not both",
            ))
        }
    };
    let me = positive(require(raw.me_rel, &p("me_rel"))?, &p("me_rel"))?;
    let mh = positive(require(raw.mh_rel, &p("mh_rel"))?, &p("mh_rel"))?;
    let gap = positive(require(raw.egap_eV, &p("egap_eV"))?, &p("egap_eV"))?;
    let dcv = require(raw.dcv_eA, &p("dcv_eA"))?;
    if !(dcv.is_finite() && dcv >= 0.0) {
        return Err(invalid(&p("dcv_eA"), "must be finite and non-negative"));
    }
    let dir = unit_vector(require(raw.dcv_dir, &p("dcv_dir"))?, &p("dcv_dir"))?;
    DotSpec::isotropic(c, me, mh, gap, dcv, dir).map_err(|e| invalid(path, &e.to_string()))
}

fn build_pair(raw: &RawPair) -> Result<PairSpec, CliError> {
    let dot_i = build_dot(
        raw.dot_i
            .as_ref()
            .ok_or_else(|| invalid("pair.dot_i", "missing required section"))?,
        "pair.dot_i",
    )?;
    let dot_ii = build_dot(
        raw.dot_ii
            .as_ref()
            .ok_or_else(|| invalid("pair.dot_ii", "missing required section"))?,
        "pair.dot_ii",
    )?;
    let r = require(raw.R_nm, "pair.R_nm")?;
    if r.iter().any(|x| !x.is_finite()) || Vec3(r).norm() == 0.0 {
        return Err(invalid("pair.R_nm", "must be a finite non-zero vector"));
    }
    let eps_r = require(raw.eps_r, "pair.eps_r")?;
    if !(eps_r.is_finite() && eps_r >= 1.0) {
        return Err(invalid(
            "pair.eps_r",
            &format!("must be at least 1, got {eps_r}"),
        ));
    }
    let vxx = finite(raw.vxx_meV.unwrap_or(0.0), "pair.vxx_meV")?;
    let omega0 = finite(raw.omega0_eV.unwrap_or(0.0), "pair.omega0_eV")?;
    // separation checks are physics and surface as domain errors
    PairSpec::new(dot_i, dot_ii, Vec3(r), eps_r, vxx, omega0).map_err(CliError::Physics)
}

fn build(raw: RawConfig, sha256: String) -> Result<RunConfig, CliError> {
    let pair = raw.pair.as_ref().map(build_pair).transpose()?;

    let field = match raw.field {
        None => FieldRange {
            direction: Vec3::X,
            start: 0.0,
            stop: 1.5e7,
        },
        Some(f) => {
            let start = finite(f.start_MV_per_m.unwrap_or(0.0), "field.start_MV_per_m")?;
            let stop = finite(f.stop_MV_per_m.unwrap_or(15.0), "field.stop_MV_per_m")?;
            if stop <= start {
                return Err(invalid(
                    "field.stop_MV_per_m",
                    "must exceed field.start_MV_per_m",
                ));
            }
            FieldRange {
                direction: unit_vector(f.direction.unwrap_or([1.0, 0.0, 0.0]), "field.direction")?,
                start: start * 1e6,
                stop: stop * 1e6,
            }
        }
    };

    let points = raw.sweep.and_then(|s| s.points).unwrap_or(301);
    if points < 2 {
        return Err(invalid("sweep.points", "must be at least 2"));
    }

    let optics = {
        let o = raw.optics;
        let get = |f: fn(&RawOptics) -> Option<f64>| o.as_ref().and_then(f);
        let eta = positive(
            get(|o| o.eta).unwrap_or(forster_core::optics::DEFAULT_ETA),
            "optics.eta",
        )?;
        let broadening = get(|o| o.broadening_factor).unwrap_or(1.0);
        if !(broadening.is_finite() && broadening >= 1.0) {
            return Err(invalid("optics.broadening_factor", "must be at least 1"));
        }
        let fields = o
            .as_ref()
            .and_then(|o| o.fields_MV_per_m.clone())
            .unwrap_or_else(|| vec![0.0]);
        if fields.is_empty() || fields.iter().any(|f| !f.is_finite()) {
            return Err(invalid(
                "optics.fields_MV_per_m",
                "must be a non-empty list of finite fields",
            ));
        }
        let window = match (get(|o| o.omega_min_eV), get(|o| o.omega_max_eV)) {
            (None, None) => None,
            (Some(lo), Some(hi)) if lo.is_finite() && hi.is_finite() && lo < hi => Some((lo, hi)),
            (Some(_), Some(_)) => {
                return Err(invalid(
                    "optics.omega_max_eV",
                    "must exceed optics.omega_min_eV",
                ))
            }
            (None, Some(_)) => {
                return Err(invalid("optics.omega_min_eV", "missing required field"))
            }
            (Some(_), None) => {
                return Err(invalid("optics.omega_max_eV", "missing required field"))
            }
        };
        let omega_points = o.as_ref().and_then(|o| o.omega_points).unwrap_or(4001);
        if omega_points < 2 {
            return Err(invalid("optics.omega_points", "must be at least 2"));
        }
        OpticsConfig {
            eta,
            broadening_factor: broadening,
            fields: fields.iter().map(|f| f * 1e6).collect(),
            omega_window: window,
            omega_points,
        }
    };

    let coupling = {
        let c = raw.coupling;
        let r_min = positive(
            c.as_ref().and_then(|c| c.R_min_nm).unwrap_or(3.0),
            "coupling.R_min_nm",
        )?;
        let r_max = positive(
            c.as_ref().and_then(|c| c.R_max_nm).unwrap_or(20.0),
            "coupling.R_max_nm",
        )?;
        if r_max <= r_min {
            return Err(invalid(
                "coupling.R_max_nm",
                "must exceed coupling.R_min_nm",
            ));
        }
        let pts = c.as_ref().and_then(|c| c.points).unwrap_or(171);
        if pts < 2 {
            return Err(invalid("coupling.points", "must be at least 2"));
        }
        let dipoles = c.and_then(|c| c.dipoles_eA).unwrap_or_default();
        if dipoles.iter().any(|d| !(d.is_finite() && *d >= 0.0)) {
            return Err(invalid(
                "coupling.dipoles_eA",
                "must be finite and non-negative",
            ));
        }
        CouplingSweep {
            r_min_nm: r_min,
            r_max_nm: r_max,
            points: pts,
            dipoles_ea: dipoles,
        }
    };

    let tunneling = match raw.tunneling {
        None => None,
        Some(t) => {
            let cfg = TunnelingConfig {
                e_e_ev: require(t.e_e_eV, "tunneling.e_e_eV")?,
                e_h_ev: require(t.e_h_eV, "tunneling.e_h_eV")?,
                m_mev: require(t.M_meV, "tunneling.M_meV")?,
                t_e_mev: finite(require(t.te_meV, "tunneling.te_meV")?, "tunneling.te_meV")?,
                t_h_mev: finite(require(t.th_meV, "tunneling.th_meV")?, "tunneling.th_meV")?,
                v_f_mev: finite(t.VF_meV.unwrap_or(0.0), "tunneling.VF_meV")?,
            };
            let all = cfg
                .e_e_ev
                .iter()
                .chain(&cfg.e_h_ev)
                .chain(cfg.m_mev.iter().flatten());
            if all.into_iter().any(|x| !x.is_finite()) {
                return Err(invalid("tunneling", "energies must be finite"));
            }
            if cfg.m_mev.iter().flatten().any(|&m| m <= 0.0) {
                return Err(invalid(
                    "tunneling.M_meV",
                    "binding energies must be positive",
                ));
            }
            Some(cfg)
        }
    };

    let gates_v_f_mev = match raw.gates.and_then(|g| g.VF_meV) {
        Some(v) if !(v.is_finite() && v != 0.0) => {
            return Err(invalid("gates.VF_meV", "must be finite and non-zero"))
        }
        other => other,
    };

    let (format, output_path) = match raw.output {
        None => (Format::Csv, None),
        Some(o) => (o.format.unwrap_or(Format::Csv), o.path),
    };

    Ok(RunConfig {
        pair,
        field,
        points,
        optics,
        coupling,
        tunneling,
        gates_v_f_mev,
        format,
        output_path,
        sha256,
    })
}

/// Parse and validate configuration text.
pub fn parse_config(text: &str) -> Result<RunConfig, CliError> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    let raw: RawConfig = serde_path_to_error::deserialize(value).map_err(|e| {
        let path = e.path().to_string();
        CliError::Validation {
            path: if path == "." { "<root>".into() } else { path },
            message: e.into_inner().to_string(),
        }
    })?;
    let sha = hex::encode(Sha256::digest(text.as_bytes()));
    build(raw, sha)
}

pub fn load_config(path: &Path) -> Result<RunConfig, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    parse_config(&text)
}
