use std::fs;
use std::process::{Command, Output};

fn fourg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fourg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited")
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

#[test]
fn report_json_is_identical_across_runs_and_threads() {
    let a = fourg(&["report", "--genus", "6", "--json", "--threads", "1"]);
    let b = fourg(&["report", "--genus", "6", "--json", "--threads", "4"]);
    let c = fourg(&["--genus", "6", "--json", "--threads", "4"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(b.stdout, c.stdout);
}

#[test]
fn atlas_has_one_report_per_genus() {
    let o = fourg(&["atlas", "--range", "2..10", "--json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    let genera: Vec<u64> = v["reports"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["genus"].as_u64().unwrap())
        .collect();
    assert_eq!(genera, (2..=10).collect::<Vec<_>>());
    assert_eq!(
        v["summary"]["unlisted_sporadic_genera"],
        serde_json::json!([5])
    );
}

#[test]
fn atlas_check_passes() {
    let o = fourg(&["atlas", "--range", "2..10", "--check", "--json"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert!(String::from_utf8_lossy(&o.stderr).contains("0 violations"));
}

#[test]
fn genus_two_wiman_endpoint_has_48_automorphisms() {
    let v = json(&fourg(&["--genus", "2", "--json"]));
    let wiman = v["boundary"]["endpoints"]
        .as_array()
        .unwrap()
        .iter()
        .find(|e| e["name"] == "X_8g")
        .expect("X_8g endpoint");
    assert_eq!(wiman["aut_order"], 48);
}

#[test]
fn flags_for_genus_three() {
    let v = json(&fourg(&["--genus", "3", "--json"]));
    assert_eq!(v["flags"]["extra_uniparametric_family"], true);
    assert_eq!(v["flags"]["exceptional_surfaces"], true);
    let v = json(&fourg(&["--genus", "12", "--json", "--max-order", "0"]));
    assert_eq!(v["flags"]["extra_uniparametric_family"], false);
    assert_eq!(v["flags"]["exceptional_surfaces"], true);
}

#[test]
fn exceptional_twelve_warns_without_tables() {
    let o = fourg(&["exceptional", "--genus", "12", "--json"]);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stderr).contains("order 48"));
    assert!(!json(&o)["warnings"].as_array().unwrap().is_empty());
}

#[test]
fn exceptional_five_is_empty() {
    let v = json(&fourg(&["exceptional", "--genus", "5", "--json"]));
    assert_eq!(v["candidates"], serde_json::json!([]));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(code(&fourg(&[])), 1);
    assert_eq!(code(&fourg(&["--genus", "1"])), 1);
    assert_eq!(code(&fourg(&["--range", "9..3"])), 1);
    assert_eq!(code(&fourg(&["--no-such-flag"])), 1);
    assert_eq!(code(&fourg(&["atlas", "--genus", "3"])), 1);
    assert_eq!(code(&fourg(&["--help"])), 0);
}

#[test]
fn tables_are_ingested() {
    let dir = tempfile::tempdir().unwrap();
    // C12 as a permutation group, and C2 x C6 as a table
    fs::write(
        dir.path().join("c12.txt"),
        "perm (1 2 3 4 5 6 7 8 9 10 11 12)\n",
    )
    .unwrap();
    let mut table = String::from("order 12\n");
    for i in 0..12 {
        let row: Vec<String> = (0..12)
            .map(|j| (((i / 6 + j / 6) % 2) * 6 + (i % 6 + j % 6) % 6).to_string())
            .collect();
        table.push_str(&row.join(" "));
        table.push('\n');
    }
    fs::write(dir.path().join("c2c6.txt"), table).unwrap();
    let dir_arg = dir.path().to_str().unwrap();
    let o = fourg(&["exceptional", "--genus", "3", "--tables", dir_arg, "--json"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v = json(&o);
    assert_eq!(v["ingested_groups"], 2);
    // both duplicate built-ins, so the candidate list is unchanged
    let builtin = json(&fourg(&["exceptional", "--genus", "3", "--json"]));
    assert_eq!(v["candidates"], builtin["candidates"]);
}

#[test]
fn input_format_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("bad.txt"), "order 2\n0 1\n1 7\n").unwrap();
    let o = fourg(&[
        "exceptional",
        "--genus",
        "3",
        "--tables",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 2);

    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("c8.txt"), "perm (1 2 3 4 5 6 7 8)\n").unwrap();
    let o = fourg(&[
        "exceptional",
        "--genus",
        "3",
        "--tables",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 2, "wrong order");

    let cfg = dir.path().join("bad.toml");
    fs::write(&cfg, "genus = = 3\n").unwrap();
    assert_eq!(code(&fourg(&["--config", cfg.to_str().unwrap()])), 2);
}

#[test]
fn config_is_overridden_by_flags() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("fourg.toml");
    fs::write(&cfg, "genus = 4\nformat = \"json\"\nmax-order = 32\n").unwrap();
    let cfg = cfg.to_str().unwrap();
    let v = json(&fourg(&["--config", cfg]));
    assert_eq!(v["genus"], 4);
    let v = json(&fourg(&["--config", cfg, "--genus", "5"]));
    assert_eq!(v["genus"], 5);
    let o = fourg(&["--config", cfg, "--markdown"]);
    assert!(String::from_utf8_lossy(&o.stdout).starts_with("# Genus 4"));
}
