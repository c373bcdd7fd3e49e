use std::path::Path;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_asp-kit"))
}

fn write_file(dir: &Path, name: &str, content: &str) -> std::path::PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, content).unwrap();
    p
}

fn tmpdir(tag: &str) -> std::path::PathBuf {
    let d = std::env::temp_dir().join(format!("asp-kit-cli-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&d).unwrap();
    d
}

const K6: &str = "6 15\n0 1\n0 2\n0 3\n0 4\n0 5\n1 2\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n3 4\n3 5\n4 5\n";
const PETERSEN: &str = "10 15\n0 1\n1 2\n2 3\n3 4\n0 4\n0 5\n1 6\n2 7\n3 8\n4 9\n5 7\n7 9\n9 6\n6 8\n8 5\n";

#[test]
fn classify_exit_codes() {
    let d = tmpdir("classify");
    let k6 = write_file(&d, "k6.graph", K6);
    let pet = write_file(&d, "petersen.graph", PETERSEN);
    let bad = write_file(&d, "bad.graph", "not a header\n");

    let out = bin().arg("classify").arg(&k6).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("verdict: ASP"), "{text}");
    assert!(text.contains("SmallCase"), "{text}");

    let out = bin().arg("classify").arg(&pet).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("verdict: NonASP"), "{text}");
    assert!(text.contains("witness"), "{text}");

    let out = bin().arg("classify").arg(&bad).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 1"), "{err}");
}

#[test]
fn classify_oracle_and_json_agree() {
    let d = tmpdir("json");
    let pet = write_file(&d, "petersen.graph", PETERSEN);
    for flags in [vec!["--json"], vec!["--json", "--oracle"]] {
        let out = bin().arg("classify").arg(&pet).args(&flags).output().unwrap();
        assert_eq!(out.status.code(), Some(1));
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(v["verdict"], "NonASP");
        assert!(v["witness"]["branch_paths"].is_array());
    }
}

#[test]
fn color_k6_exception_exit_3() {
    let d = tmpdir("color");
    let k6 = write_file(&d, "k6.graph", K6);
    let out = bin().arg("color").arg(&k6).args(["--k", "5"]).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("exception"), "{text}");
    // vertex:color lines for all six vertices
    assert_eq!(text.lines().filter(|l| l.contains(':') && !l.contains("exception")).count(), 6);
}

#[test]
fn color_exact_and_not_colorable() {
    let d = tmpdir("exact");
    let k6 = write_file(&d, "k6.graph", K6);
    let out = bin().arg("color").arg(&k6).args(["--k", "5", "--exact"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1), "K6 is not 5-colorable");
    let pet = write_file(&d, "petersen.graph", PETERSEN);
    let out = bin().arg("color").arg(&pet).args(["--k", "3", "--exact"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn generate_round_trip() {
    let d = tmpdir("generate");
    let out = bin()
        .args(["generate", "wheel", "7", "--out"])
        .arg(&d)
        .output()
        .unwrap();
    assert!(out.status.success(), "{out:?}");
    let text = std::fs::read_to_string(d.join("wheel-7.graph")).unwrap();
    assert!(text.starts_with("8 14\n"), "{text}");
    // generated file classifies clean
    let out = bin().arg("classify").arg(d.join("wheel-7.graph")).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn generate_corpus_manifest() {
    let d = tmpdir("corpus");
    let out = bin()
        .args(["generate", "corpus", "--seed", "0", "--count", "5", "--out"])
        .arg(&d)
        .output()
        .unwrap();
    assert!(out.status.success(), "{out:?}");
    let manifest = std::fs::read_to_string(d.join("corpus-0-labels.txt")).unwrap();
    assert_eq!(manifest.lines().count(), 5);
    for line in manifest.lines() {
        assert!(line.contains("ASP") || line.contains("SP"), "{line}");
    }
    // determinism: a second run writes identical files
    let d2 = tmpdir("corpus2");
    bin().args(["generate", "corpus", "--seed", "0", "--count", "5", "--out"]).arg(&d2).output().unwrap();
    let a = std::fs::read_to_string(d.join("corpus-0-0000.graph")).unwrap();
    let b = std::fs::read_to_string(d2.join("corpus-0-0000.graph")).unwrap();
    assert_eq!(a, b);
}

#[test]
fn verify_small_passes() {
    let out = bin().args(["verify", "--max-n", "5", "--jobs", "1"]).output().unwrap();
    assert!(out.status.success(), "{out:?}");
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("0 mismatches"), "{text}");
}

#[test]
fn oracle_limit_env_respected() {
    let d = tmpdir("limit");
    let pet = write_file(&d, "petersen.graph", PETERSEN);
    let out = bin()
        .arg("classify")
        .arg(&pet)
        .arg("--oracle")
        .env("ASP_KIT_ORACLE_LIMIT", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2), "{out:?}");
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("limit 5"), "{err}");
}
