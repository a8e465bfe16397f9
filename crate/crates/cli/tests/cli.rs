use std::path::PathBuf;
use std::process::{Command, Output};

use fk_core::poset::FinitePoset;
use fk_core::table::parse_machine;
use fk_core::verify::chain_law;

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "core", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn fk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fk")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn machine_table_is_stable_and_parses() {
    let a = fk(&["homtable", "--poset", &data("d4.poset"), "--format", "machine"]);
    let b = fk(&["homtable", "d4", "--format", "machine"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let lines = parse_machine(&stdout(&a)).unwrap();
    assert_eq!(lines.len(), 121);
    let top = lines.iter().find(|l| l.y == "1234" && l.z == "4").unwrap();
    assert_eq!(top.groups.to_string(), "Z^2[1]");
}

#[test]
fn chain_five_table_follows_the_interval_law() {
    let out = fk(&["homtable", "chain:5", "--format", "machine"]);
    let p = FinitePoset::chain(5);
    let interval = |name: &str| {
        let m = p.parse_set(name).unwrap().members();
        (m[0] + 1, m[m.len() - 1] + 1)
    };
    let lines = parse_machine(&stdout(&out)).unwrap();
    assert_eq!(lines.len(), 225);
    for l in lines {
        let ((a1, b1), (a2, b2)) = (interval(&l.y), interval(&l.z));
        assert_eq!(l.groups, chain_law(a1, b1, a2, b2), "({}, {})", l.y, l.z);
    }
}

#[test]
fn resolution_of_m_has_length_one() {
    let out = fk(&["module-resolve", "d4", &data("M.mod")]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("0 → P_1234 → P_124 + P_134 + P_234 → M → 0\n"));
}

#[test]
fn ext_two_of_m_mod_two() {
    let out = fk(&["module-ext", "d4", &data("Mk.mod"), &data("P1234.mod"), "--degree", "2"]);
    assert_eq!(stdout(&out), "Ext^2 = Z/2[0]\n");
    let out = fk(&["module-ext", "d4", &data("Mk.mod"), &data("P1234.mod"), "--degree", "1"]);
    assert_eq!(stdout(&out), "Ext^1 = 0\n");
}

#[test]
fn lift_is_free_and_exact() {
    let out = fk(&["module-check", "d4refined", &data("Mprime.mod"), "--format", "machine"]);
    assert!(out.status.success());
    let s = stdout(&out);
    assert!(s.contains("exact true\n") && s.contains("free true\n"), "{s}");
}

#[test]
fn exit_codes() {
    assert_eq!(fk(&["verify-paper", "--only", "ext"]).status.code(), Some(0));
    assert_eq!(fk(&["verify-paper", "--only", "nonsense"]).status.code(), Some(2));
    assert_eq!(fk(&["module-check", "d4", "missing.mod"]).status.code(), Some(2));
    assert_eq!(fk(&["module-check", "d4refined", &data("M.mod")]).status.code(), Some(2));
    assert_eq!(fk(&["homtable", "chain:99"]).status.code(), Some(2));

    let dir = std::env::temp_dir().join(format!("fk-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let text = std::fs::read_to_string(data("M.mod")).unwrap().replace("action d[2>4]: [[-1]]", "action d[2>4]: [[1]]");
    let bad = dir.join("bad.mod");
    std::fs::write(&bad, text).unwrap();
    let out = fk(&["module-check", "d4", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    std::fs::remove_dir_all(&dir).unwrap();
}
