use std::io::Write;
use std::process::{Command, Output};

fn oscbath(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_oscbath")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn column(csv: &str, index: usize) -> Vec<f64> {
    csv.lines().skip(1).map(|l| l.split(',').nth(index).unwrap().parse().unwrap()).collect()
}

#[test]
fn default_sweep_has_fifty_rows() {
    let o = oscbath(&["sweep", "--gamma", "1"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let csv = stdout(&o);
    assert_eq!(csv.lines().count(), 51);
    assert!(csv.lines().skip(1).all(|l| l.ends_with(",exact_j,ohmic")));
}

#[test]
fn two_routes_give_paired_rows_that_agree() {
    let o = oscbath(&["sweep", "--gamma", "0.5", "--points", "50", "--log", "--method", "exact_j,exact_quadrature"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let csv = stdout(&o);
    assert_eq!(csv.lines().count(), 101);
    let f = column(&csv, 1);
    for pair in f.chunks(2) {
        assert!((pair[0] - pair[1]).abs() <= 1e-8 * pair[0].abs().max(1.0), "{pair:?}");
    }
}

#[test]
fn json_output_parses() {
    let o = oscbath(&["sweep", "--model", "srt", "--gamma", "1", "--tau", "0.01", "--points", "5", "--format", "json"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let rows: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 5);
    assert_eq!(rows[0]["model"], "srt");
    assert!(rows[0]["F"].as_f64().unwrap() < 0.0);
}

#[test]
fn si_units_add_a_kelvin_column() {
    let o = oscbath(&["sweep", "--gamma", "1", "--points", "3", "--units", "si", "--omega0-hz", "1e12"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let csv = stdout(&o);
    assert!(csv.starts_with("theta,F,S,U,C,method,model,T_kelvin\n"));
    let kelvin = column(&csv, 7);
    let theta = column(&csv, 0);
    // ħω₀/k for f₀ = 1 THz is about 48 K
    assert!((kelvin[0] / theta[0] - 47.992).abs() < 1e-2);
}

#[test]
fn config_file_is_read_and_flags_override_it() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "# test sweep\nmodel = qed\ngamma = 0.1\nomega_prime = 1000\npoints = 4\nformat = csv").unwrap();
    let path = file.path().to_str().unwrap();
    let o = oscbath(&["sweep", "--config", path]);
    assert!(o.status.success(), "{}", stderr(&o));
    let csv = stdout(&o);
    assert_eq!(csv.lines().count(), 5);
    assert!(csv.lines().nth(1).unwrap().ends_with(",qed"));
    let o = oscbath(&["sweep", "--config", path, "--points", "2"]);
    assert_eq!(stdout(&o).lines().count(), 3);
}

#[test]
fn bad_configuration_exits_with_two() {
    for args in [
        &["sweep", "--gamma", "-1"][..],
        &["sweep", "--model", "lorentz"],
        &["sweep", "--method", "exact_j,bogus"],
        &["sweep", "--model", "srt", "--gamma", "1", "--tau", "2"],
        &["sweep", "--theta-min", "0", "--gamma", "1"],
        &["sweep"],
        &["jfun", "-3"],
        &["jfun", "-1", "1", "--method", "lanczos"],
    ] {
        let o = oscbath(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", stderr(&o));
        assert!(stderr(&o).starts_with("error: "), "{args:?}");
    }
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "gamma = 1\ncolour = blue").unwrap();
    let o = oscbath(&["sweep", "--config", file.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));
}

#[test]
fn divergent_zero_point_exits_with_four() {
    let o = oscbath(&["zeropoint", "--model", "qed", "--gamma", "0.1", "--omega-prime", "1000"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stderr(&o).contains("QED"));
    let o = oscbath(&["zeropoint", "--model", "srt", "--gamma", "1", "--tau", "0.01"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("1.17996723592"), "{}", stdout(&o));
}

#[test]
fn jfun_reports_value_and_route() {
    let o = oscbath(&["jfun", "1"]);
    assert!(o.status.success());
    let out = stdout(&o);
    // J(1) = 1 − log √(2π)
    assert!(out.contains("J = 8.10614667953"), "{out}");
    let o = oscbath(&["jfun", "-1", "1"]);
    assert!(stdout(&o).contains("route: continuation("));
}

#[test]
fn qed_low_temperature_entropy_is_cubic() {
    let o = oscbath(&[
        "sweep",
        "--model",
        "qed",
        "--gamma",
        "0.1",
        "--omega-prime",
        "1e6",
        "--theta-min",
        "0.005",
        "--theta-max",
        "0.02",
        "--points",
        "8",
        "--log",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let csv = stdout(&o);
    let (theta, s) = (column(&csv, 0), column(&csv, 2));
    let lx: Vec<f64> = theta.iter().map(|t| t.ln()).collect();
    let ly: Vec<f64> = s.iter().map(|v| v.ln()).collect();
    let n = lx.len() as f64;
    let (mx, my) = (lx.iter().sum::<f64>() / n, ly.iter().sum::<f64>() / n);
    let slope = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum::<f64>()
        / lx.iter().map(|x| (x - mx).powi(2)).sum::<f64>();
    assert!((slope - 3.0).abs() < 0.1, "slope {slope}");
}
