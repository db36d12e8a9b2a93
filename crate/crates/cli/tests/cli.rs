use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use forster_core::spectrum::{anticrossing_gap, sweep_row};
use forster_core::FieldConfig;
use forster_dots::commands::SWEEP_COLUMNS;
use forster_dots::load_config;

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_forster-dots")
}

fn bundled(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("configs")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(bin())
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write_config(dir: &tempfile::TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn fig4_text() -> String {
    std::fs::read_to_string(bundled("fig4.json")).unwrap()
}

/// Data rows of a CSV, skipping `#` comments and the header.
fn csv_rows(text: &str) -> (Vec<String>, Vec<Vec<f64>>) {
    let mut lines = text.lines().filter(|l| !l.starts_with('#'));
    let header = lines.next().unwrap().split(',').map(String::from).collect();
    let rows = lines
        .map(|l| l.split(',').map(|c| c.parse::<f64>().unwrap()).collect())
        .collect();
    (header, rows)
}

#[test]
fn bundled_configs_load() {
    for name in [
        "fig2.json",
        "fig3.json",
        "fig4.json",
        "fig7.json",
        "tunneling.json",
    ] {
        load_config(&bundled(name)).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
    let cfg = load_config(&bundled("fig4.json")).unwrap();
    let pair = cfg.pair.unwrap();
    assert_eq!(
        pair.dot_i()
            .mass_rel(forster_core::singledot::Particle::Electron),
        0.04
    );
    assert_eq!(
        pair.dot_i()
            .mass_rel(forster_core::singledot::Particle::Hole),
        0.45
    );
    // fig2 gives dot I by its well: 162.5 meV at 3 nm
    let cfg = load_config(&bundled("fig2.json")).unwrap();
    let c = cfg
        .pair
        .unwrap()
        .dot_i()
        .isotropic_c(forster_core::singledot::Particle::Electron)
        .unwrap();
    assert!((c - 0.00579).abs() / 0.00579 < 1e-3, "{c}");
}

#[test]
fn sweep_header_and_round_trip() {
    let out = run(&[
        "sweep",
        "--config",
        bundled("fig4.json").to_str().unwrap(),
        "--points",
        "61",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.starts_with("# forster-dots "));
    assert!(text
        .lines()
        .any(|l| l.starts_with("# config_sha256: ") && l.len() == 17 + 64));
    let (header, rows) = csv_rows(&text);
    assert_eq!(header, SWEEP_COLUMNS);
    assert_eq!(rows.len(), 61);
    let pair = load_config(&bundled("fig4.json")).unwrap().pair.unwrap();
    for row in rows {
        let r = sweep_row(&pair, &FieldConfig::along_x(row[0]).unwrap()).unwrap();
        let expect = [
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
        ];
        for (got, want) in row.iter().zip(expect) {
            assert!((got - want).abs() <= 1e-9 * want.abs(), "{got} vs {want}");
        }
    }
}

#[test]
fn sweep_minimum_matches_anticrossing() {
    let out = run(&["sweep", "--config", bundled("fig4.json").to_str().unwrap()]);
    assert!(out.status.success());
    let (_, rows) = csv_rows(&stdout(&out));
    let step = rows[1][0] - rows[0][0];
    let best = rows
        .iter()
        .min_by(|a, b| (a[5] - a[4]).total_cmp(&(b[5] - b[4])))
        .unwrap();
    let pair = load_config(&bundled("fig4.json")).unwrap().pair.unwrap();
    let ac = anticrossing_gap(&pair, forster_core::Vec3::X).unwrap();
    assert!((best[0] - ac.field).abs() <= step);
}

#[test]
fn output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for p in [&a, &b] {
        let out = run(&[
            "sweep",
            "--config",
            bundled("fig4.json").to_str().unwrap(),
            "--out",
            p.to_str().unwrap(),
        ]);
        assert!(out.status.success());
        assert!(out.stdout.is_empty());
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn resonance_is_three_field_json() {
    let out = run(&[
        "resonance",
        "--config",
        bundled("fig4.json").to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let obj = v.as_object().unwrap();
    assert_eq!(obj.len(), 3);
    let f = obj["F_res_V_per_m"].as_f64().unwrap();
    let gap = obj["gap_meV"].as_f64().unwrap();
    let vf = obj["VF_at_resonance_meV"].as_f64().unwrap();
    let pair = load_config(&bundled("fig4.json")).unwrap().pair.unwrap();
    let ac = anticrossing_gap(&pair, forster_core::Vec3::X).unwrap();
    assert!((f - ac.resonance_field).abs() <= 1e-9 * f);
    assert!((gap - ac.gap_mev).abs() <= 1e-9 * gap);
    assert!((vf - ac.v_f_at_resonance_mev).abs() <= 1e-9 * vf.abs());
}

#[test]
fn zero_coupling_crosses() {
    let dir = tempfile::tempdir().unwrap();
    let text = fig4_text().replace("\"dcv_eA\": 7.0", "\"dcv_eA\": 0.0");
    let cfg = write_config(&dir, "dark.json", &text);
    let out = run(&["sweep", "--config", cfg.to_str().unwrap()]);
    assert!(out.status.success(), "{}", stderr(&out));
    let (_, rows) = csv_rows(&stdout(&out));
    let mut sign_changes = 0;
    for w in rows.windows(2) {
        if (w[0][1] - w[0][2]).signum() != (w[1][1] - w[1][2]).signum() {
            sign_changes += 1;
        }
    }
    assert_eq!(sign_changes, 1);
    for r in &rows {
        assert_eq!(r[3], 0.0);
        // the gap is the bare detuning, so it closes at the crossing
        assert!(((r[5] - r[4]) - (r[1] - r[2]).abs()).abs() < 1e-12);
    }
}

#[test]
fn json_format_and_other_commands() {
    let fig4 = bundled("fig4.json");
    let out = run(&[
        "sweep",
        "--config",
        fig4.to_str().unwrap(),
        "--format",
        "json",
        "--points",
        "5",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 5);
    assert_eq!(v["meta"]["command"], "sweep");

    let out = run(&[
        "spectrum",
        "--config",
        bundled("fig7.json").to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let (header, rows) = csv_rows(&stdout(&out));
    assert_eq!(header[0], "F_V_per_m");
    assert_eq!(rows.len(), 5 * 4001);
    assert!(rows.iter().all(|r| r[2] >= 0.0 && r[3] >= 0.0));

    let out = run(&[
        "gates",
        "--config",
        fig4.to_str().unwrap(),
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(v["values"]["cnot_fidelity"].as_f64().unwrap() >= 1.0 - 1e-8);

    let out = run(&[
        "tunneling",
        "--config",
        bundled("tunneling.json").to_str().unwrap(),
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["values"]["safety_pass"], true);

    let out = run(&[
        "coupling",
        "--config",
        bundled("fig3.json").to_str().unwrap(),
    ]);
    let (header, rows) = csv_rows(&stdout(&out));
    assert_eq!(header.len(), 4);
    assert_eq!(rows.len(), 171);

    let out = run(&[
        "singledot",
        "--config",
        bundled("fig2.json").to_str().unwrap(),
    ]);
    let (_, rows) = csv_rows(&stdout(&out));
    assert!(rows.windows(2).all(|w| w[1][1] <= w[0][1]));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();

    let missing = write_config(
        &dir,
        "missing.json",
        &fig4_text().replace(",\n    \"eps_r\": 12", ""),
    );
    let out = run(&["sweep", "--config", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("VALIDATION_ERROR"));
    assert!(stderr(&out).contains("pair.eps_r"), "{}", stderr(&out));

    let broken = write_config(&dir, "broken.json", "{ \"pair\": ");
    let out = run(&["sweep", "--config", broken.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("PARSE_ERROR"));

    let unknown = write_config(
        &dir,
        "unknown.json",
        &fig4_text().replace("\"eps_r\": 12", "\"eps_r\": 12, \"colour\": 1"),
    );
    let out = run(&["sweep", "--config", unknown.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&[
        "sweep",
        "--config",
        bundled("fig4.json").to_str().unwrap(),
        "--fmax",
        "100",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("FIELD_OUT_OF_VALIDITY"));

    let close = write_config(
        &dir,
        "close.json",
        &fig4_text().replace("\"R_nm\": [0, 0, 7]", "\"R_nm\": [0, 0, 1]"),
    );
    let out = run(&["coupling", "--config", close.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("DIPOLE_APPROX_INVALID"));

    let out = run(&["sweep"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["frobnicate", "--config", "x"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&[
        "sweep",
        "--config",
        bundled("fig4.json").to_str().unwrap(),
        "--format",
        "xml",
    ]);
    assert_eq!(out.status.code(), Some(2));
}
