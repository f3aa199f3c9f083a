use std::path::Path;
use std::process::{Command, Output};

use gw_core::scalar::int;
use gw_core::{format_rational, parse_rational, Rational, VirtualConstantTable};

fn gw(cache: Option<&Path>, args: &[&str]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_gw"));
    cmd.env_remove("GW_CACHE_DIR");
    match cache {
        Some(dir) => cmd.arg("--cache-dir").arg(dir),
        None => cmd.arg("--no-cache"),
    };
    cmd.args(args).output().expect("spawn gw")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn product_expansion(k: i64) -> Vec<Rational> {
    let mut p = vec![int(k)];
    for j in 1..k {
        let mut next = vec![int(0); p.len() + 1];
        for (i, c) in p.iter().enumerate() {
            next[i] += c * int(k - j);
            next[i + 1] += c * int(j);
        }
        p = next;
    }
    p
}

#[test]
fn degree_one_csv_rows() {
    let o = gw(None, &["vsc", "--N", "8", "--k", "9", "--dmax", "1", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("N,k,d,m,value"));
    let want = product_expansion(9);
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 9);
    for (m, line) in rows.iter().enumerate() {
        let f: Vec<&str> = line.split(',').collect();
        assert_eq!(&f[..4], &["8", "9", "1", &m.to_string()]);
        let v = parse_rational(f[4]).unwrap();
        assert_eq!(v, want[m]);
        assert_eq!(format_rational(&v), f[4]);
    }
}

#[test]
fn exit_codes() {
    assert_eq!(gw(None, &["vsc", "--N", "8", "--k", "7", "--dmax", "1"]).status.code(), Some(2));
    assert_eq!(gw(None, &["vsc", "--N", "8", "--k", "8", "--dmax", "1"]).status.code(), Some(2));
    assert_eq!(gw(None, &["vsc", "--N", "8", "--k", "9", "--dmax", "9"]).status.code(), Some(2));
    assert_eq!(
        gw(None, &["--max-degree", "9", "vsc", "--N", "5", "--k", "6", "--dmax", "9"]).status.code(),
        Some(0)
    );
    assert_eq!(gw(None, &["verify", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(gw(None, &["real", "--N", "10", "--k", "12", "--d", "0"]).status.code(), Some(2));

    let empty = gw(None, &["vsc", "--N", "8", "--k", "9", "--dmax", "0", "--format", "csv"]);
    assert_eq!(empty.status.code(), Some(0));
    assert_eq!(stdout(&empty), "N,k,d,m,value\n");
}

#[test]
fn first_real_constant() {
    let o = gw(None, &["real", "--N", "10", "--k", "12", "--d", "1", "--n", "5", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let t = VirtualConstantTable::new(10, 12).unwrap();
    let want = format_rational(&(t.get(1, 5) - t.get(1, 3)));
    assert_eq!(stdout(&o), format!("N,k,d,m,value\n10,12,1,5,{want}\n"));
}

#[test]
fn out_of_window_is_annotated_zero() {
    let o = gw(None, &["real", "--N", "10", "--k", "12", "--d", "2", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("3  0  (outside window 6..=7)"), "{text}");

    let j = gw(None, &["real", "--N", "10", "--k", "12", "--d", "2", "--n", "3,6", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_slice(&j.stdout).unwrap();
    let entries = doc["L"]["entries"].as_array().unwrap();
    assert_eq!(entries[0]["value"], "0");
    assert!(entries[0]["note"].is_string());
    assert!(entries[1].get("note").is_none());
}

#[test]
fn verify_reports() {
    let ok = gw(None, &["verify", "hi-vanishing"]);
    assert_eq!(ok.status.code(), Some(0));
    let text = stdout(&ok);
    assert!(text.lines().all(|l| l.starts_with("PASS ") || l.starts_with("hi-vanishing:")));

    let bad = gw(None, &["verify", "bignum"]);
    assert_eq!(bad.status.code(), Some(1));
    let err = String::from_utf8(bad.stderr).unwrap();
    assert!(err.contains("first failing check L^{13,14,6}_8"), "{err}");
    assert!(err.contains("/253125") && err.contains("/9375"));
}

#[test]
fn warm_cache_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["vsc", "--N", "9", "--k", "11", "--dmax", "3", "--format", "json"];
    let cold = gw(Some(dir.path()), &args);
    assert_eq!(cold.status.code(), Some(0));
    let file = dir.path().join("vsc_N9_k11.json");
    assert!(file.exists());
    let stamp = std::fs::metadata(&file).unwrap().modified().unwrap();

    let warm = gw(Some(dir.path()), &args);
    assert_eq!(warm.stdout, cold.stdout);
    assert_eq!(std::fs::metadata(&file).unwrap().modified().unwrap(), stamp);

    let narrower = gw(Some(dir.path()), &["vsc", "--N", "9", "--k", "11", "--dmax", "2", "--format", "json"]);
    let fresh = gw(None, &["vsc", "--N", "9", "--k", "11", "--dmax", "2", "--format", "json"]);
    assert_eq!(narrower.stdout, fresh.stdout);

    for args in [
        ["real", "--N", "9", "--k", "11", "--d", "2"],
        ["real", "--N", "9", "--k", "11", "--d", "1"],
    ] {
        let a = gw(Some(dir.path()), &args);
        let b = gw(Some(dir.path()), &args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn cache_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_gw"))
        .env("GW_CACHE_DIR", dir.path())
        .args(["vsc", "--N", "8", "--k", "9", "--dmax", "2"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let back = VirtualConstantTable::load(&dir.path().join("vsc_N8_k9.json")).unwrap();
    assert_eq!(back.degrees(), vec![1, 2]);

    let list = Command::new(env!("CARGO_BIN_EXE_gw"))
        .env("GW_CACHE_DIR", dir.path())
        .args(["cache", "list"])
        .output()
        .unwrap();
    assert_eq!(stdout(&list), "vsc_N8_k9.json  d = 1,2\n");
}

#[test]
fn corrupt_cache_is_an_io_failure() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("vsc_N8_k9.json"), "{not json").unwrap();
    let o = gw(Some(dir.path()), &["vsc", "--N", "8", "--k", "9", "--dmax", "1"]);
    assert_eq!(o.status.code(), Some(3));

    std::fs::write(
        dir.path().join("vsc_N8_k9.json"),
        r#"{"schema":1,"N":8,"k":10,"entries":[]}"#,
    )
    .unwrap();
    let o = gw(Some(dir.path()), &["vsc", "--N", "8", "--k", "9", "--dmax", "1"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn flat_and_correlator_commands() {
    let o = gw(None, &["flat", "--N", "8", "--k", "9", "--dmax", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["t_connection"].as_array().unwrap().len(), 7);
    assert!(!doc["flat_derivative"].as_array().unwrap().is_empty());

    let c = gw(None, &["correlator", "--N", "10", "--k", "12", "--d", "0", "--exps", "2,3,3"]);
    assert_eq!(stdout(&c), "12\n");
    let e = gw(None, &["correlator", "--N", "13", "--k", "14", "--d", "2", "--exps", "2,2,3,3", "--explain", "1"]);
    assert!(stdout(&e).starts_with("v<2,2,3,3>_2 = "));
}
