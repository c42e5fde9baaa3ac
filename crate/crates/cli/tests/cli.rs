use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use sgcloc::export::{map_from_rows, read_csv};
use sgcloc::parse_config;

fn sgcloc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sgcloc")).args(args).output().expect("spawn sgcloc")
}

fn write_config(dir: &Path, text: &str) -> String {
    let path = dir.join("run.cfg.in");
    fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn preset_run_writes_outputs_and_echoes_config() {
    let tmp = tempfile::tempdir().unwrap();
    let out_dir = tmp.path().to_str().unwrap();
    let out = sgcloc(&["run", "--preset", "fig4b", "--grid", "21", "--out-dir", out_dir]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));

    let echoed = parse_config(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(echoed.base.delta_c, 12.0);
    assert_eq!(echoed.grid.nx, 21);
    let saved = parse_config(&fs::read_to_string(tmp.path().join("fig4b.cfg")).unwrap()).unwrap();
    assert_eq!(saved, echoed);

    for name in ["fig4b.csv", "fig4b.ppm", "fig4b.peaks.txt"] {
        assert!(tmp.path().join(name).is_file(), "{name} missing");
    }
    let rows = read_csv(&fs::read(tmp.path().join("fig4b.csv")).unwrap()[..]).unwrap();
    let (grid, values) = map_from_rows(&rows).unwrap();
    assert_eq!((grid.nx, grid.ny), (21, 21));
    assert_eq!((rows[0].x, rows[0].y), (-0.5, -0.5));
    assert!(values.iter().all(|v| v.is_finite()));
    assert!(fs::read(tmp.path().join("fig4b.ppm")).unwrap().starts_with(b"P6\n21 21\n"));
}

#[test]
fn domain_and_emit_flags() {
    let tmp = tempfile::tempdir().unwrap();
    let cfg = write_config(tmp.path(), "preset = fig2a\nnx = 9\nny = 9\n");
    let out_dir = tmp.path().join("out");
    let out = sgcloc(&[
        "run",
        "--config",
        &cfg,
        "--domain",
        "half",
        "--emit",
        "csv,audit",
        "--out-dir",
        out_dir.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let echoed = parse_config(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!((echoed.grid.x_min, echoed.grid.x_max), (-0.25, 0.25));
    assert!(out_dir.join("fig2a.csv").is_file());
    assert!(out_dir.join("fig2a.audit.txt").is_file());
    assert!(!out_dir.join("fig2a.ppm").exists());
}

#[test]
fn config_errors_exit_with_one() {
    let tmp = tempfile::tempdir().unwrap();
    let out_dir = tmp.path().to_str().unwrap();
    for text in ["nx = 10\n", "colour = red\n", "theta = 1..2\n", "preset = fig7a\n"] {
        let cfg = write_config(tmp.path(), text);
        let out = sgcloc(&["run", "--config", &cfg, "--out-dir", out_dir]);
        assert_eq!(out.status.code(), Some(1), "config {text:?}");
    }
    assert_eq!(sgcloc(&["run", "--preset", "nope"]).status.code(), Some(1));
    assert_eq!(sgcloc(&["run", "--preset", "fig2a", "--grid", "4"]).status.code(), Some(1));
    assert_eq!(sgcloc(&["run", "--config", "/nonexistent/sgcloc.cfg"]).status.code(), Some(1));
    assert_eq!(sgcloc(&["run", "--domain", "quarter"]).status.code(), Some(1));
    assert_eq!(sgcloc(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(sgcloc(&["audit", "--preset", "fig2a", "--samples", "0"]).status.code(), Some(1));
}

#[test]
fn help_exits_with_zero() {
    assert_eq!(sgcloc(&["--help"]).status.code(), Some(0));
    assert_eq!(sgcloc(&["run", "--help"]).status.code(), Some(0));
}

#[test]
fn degenerate_steady_state_exits_with_two() {
    // parallel dipoles with the coupling field off leave a dark excited superposition
    let tmp = tempfile::tempdir().unwrap();
    let cfg = write_config(tmp.path(), "theta = 0\nomega0 = 0\ndelta_p = 3\ndelta_c = 3\nnx = 3\nny = 3\n");
    let out = sgcloc(&["run", "--config", &cfg, "--out-dir", tmp.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not unique"));
}

#[test]
fn audit_report_for_one_preset() {
    let out = sgcloc(&["audit", "--preset", "fig6b", "--samples", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("fig6b[")).count(), 4);
    assert!(text.contains("# max rel_error = "));
}

#[test]
fn heatmap_mirrors_about_the_anti_diagonal() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path().to_str().unwrap();
    let out = sgcloc(&["run", "--preset", "fig2a", "--grid", "31", "--emit", "heatmap", "--out-dir", dir]);
    assert_eq!(out.status.code(), Some(0));
    let bytes = fs::read(tmp.path().join("fig2a.ppm")).unwrap();
    let n = 31;
    let px = &bytes[bytes.len() - 3 * n * n..];
    let at = |r: usize, c: usize| &px[3 * (r * n + c)..3 * (r * n + c) + 3];
    for r in 0..n {
        for c in 0..n {
            assert_eq!(at(r, c), at(n - 1 - c, n - 1 - r));
        }
    }
}
