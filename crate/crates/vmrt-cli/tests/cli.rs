use std::process::{Command, Output};

fn vmrt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vmrt"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn vmrt_of_group_g2() {
    let o = vmrt(&["vmrt", "group-G"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("G_2/P_2, dim 5\n"));
    let c = vmrt(&["vmrt", "group-g", "--format", "canonical"]);
    assert!(stdout(&c).ends_with("o<#x\n"), "{}", stdout(&c));
}

#[test]
fn dim_of_parsed_diagram() {
    let o = vmrt(&["dim", "o-x-o(o)-o", "--format", "canonical"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("OG(2,10), dim 13\n"));
}

#[test]
fn entry_commands_in_every_format() {
    for cmd in ["kac", "zorbit", "vmrt"] {
        for fmt in ["ascii", "latex", "dot", "json", "canonical"] {
            let o = vmrt(&[cmd, "herm-CI", "--n", "3", "--format", fmt]);
            assert_eq!(o.status.code(), Some(0), "{cmd} {fmt}");
            assert!(!o.stdout.is_empty());
        }
    }
    let j = vmrt(&["vmrt", "AI", "--n", "5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&j.stdout).unwrap();
    assert_eq!(v["dimension"], 4);
    assert_eq!(v["kind"], "typeA-GPlambda");
}

#[test]
fn fold_named_pair() {
    let o = vmrt(&["fold", "o-o-x-o-o", "--pair", "A2l-1-Cl", "--format", "canonical"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().last().unwrap().contains('x'));
    let bad = vmrt(&["fold", "x-o", "--pair", "E6-F4"]);
    assert_eq!(bad.status.code(), Some(2));
    let unknown = vmrt(&["fold", "x-o", "--pair", "nope"]);
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_2_and_name_the_entry() {
    let o = vmrt(&["vmrt", "AI"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("AI") && err.contains("n"), "{err}");
    assert_eq!(vmrt(&["vmrt", "XYZ"]).status.code(), Some(2));
    assert_eq!(vmrt(&["dim", "o-"]).status.code(), Some(2));
    assert_eq!(vmrt(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(vmrt(&["vmrt", "group-G", "--format", "svg"]).status.code(), Some(2));
}

#[test]
fn verify_passes_and_is_stable() {
    let a = vmrt(&["verify", "--max-rank", "6"]);
    assert_eq!(a.status.code(), Some(0));
    let b = vmrt(&["verify", "--max-rank", "6", "--sequential"]);
    assert_eq!(a.stdout, b.stdout);
    let out = stdout(&a);
    assert!(!out.contains("FAIL"));
    assert_eq!(out.lines().filter(|l| l.contains(" criterion ")).count(), 8);
}

#[test]
fn export_atlas_is_byte_stable() {
    let dir = std::env::temp_dir();
    let p1 = dir.join(format!("vmrt-atlas-{}-1.json", std::process::id()));
    let p2 = dir.join(format!("vmrt-atlas-{}-2.json", std::process::id()));
    for p in [&p1, &p2] {
        let o = vmrt(&["export-atlas", "--max-rank", "8", "--out", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
    }
    let (a, b) = (std::fs::read(&p1).unwrap(), std::fs::read(&p2).unwrap());
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_slice(&a).unwrap();
    let entries = v["entries"].as_array().unwrap();
    assert!(entries
        .iter()
        .any(|e| e["name"] == "group-G" && e["vmrt"]["dimension"] == 5));
    assert!(entries.iter().all(|e| e.get("error").is_none()));
    let _ = std::fs::remove_file(p1);
    let _ = std::fs::remove_file(p2);
}

#[test]
fn list_respects_max_rank() {
    let small = stdout(&vmrt(&["list", "--max-rank", "2"]));
    let big = stdout(&vmrt(&["list", "--max-rank", "8"]));
    assert!(small.lines().count() < big.lines().count());
    assert!(big.contains("group-E6"));
}
