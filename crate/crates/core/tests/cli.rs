use std::path::Path;
use std::process::{Command, Output};

fn prodex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_prodex"))
        .args(args)
        .env_remove("PRODEX_DEFAULT_ORDER")
        .output()
        .expect("spawn prodex")
}

fn stdout_ok(args: &[&str]) -> String {
    let out = prodex(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn expand_binary_identity() {
    assert_eq!(
        stdout_ok(&["expand", "--coeffs", "1,1,1,1,1,1,1,1,1", "--order", "8"]),
        "{\"order\":8,\"exponents\":[\"-1\",\"-1\",\"0\",\"-1\",\"0\",\"0\",\"0\",\"-1\"]}\n"
    );
}

#[test]
fn expand_then_series_reproduces_input() {
    let dir = tempfile::tempdir().unwrap();
    let input = "{\"order\":6,\"coeffs\":[\"1\",\"-3\",\"4\",\"0\",\"-9\",\"12\",\"7\"]}\n";
    let f = write(dir.path(), "f.json", input);
    let expansion = stdout_ok(&["expand", "--input", &f]);
    let m = write(dir.path(), "m.json", &expansion);
    assert_eq!(stdout_ok(&["series", "--input", &m]), input);
}

#[test]
fn ghost_then_unghost_reproduces_input() {
    let dir = tempfile::tempdir().unwrap();
    let input = "{\"order\":5,\"exponents\":[\"2\",\"-1\",\"0\",\"7\",\"-3\"]}\n";
    let m = write(dir.path(), "m.json", input);
    let ghost = stdout_ok(&["ghost", "--input", &m]);
    let g = write(dir.path(), "g.json", &ghost);
    assert_eq!(stdout_ok(&["unghost", "--input", &g]), input);
}

#[test]
fn invert_twice_is_identity() {
    let dir = tempfile::tempdir().unwrap();
    let input = "{\"order\":6,\"exponents\":[\"3\",\"1\",\"-2\",\"0\",\"5\",\"1\"]}\n";
    let m = write(dir.path(), "m.json", input);
    let once = stdout_ok(&["invert", "--input", &m]);
    let n = write(dir.path(), "n.json", &once);
    assert_eq!(stdout_ok(&["invert", "--input", &n]), input);
}

#[test]
fn exit_codes() {
    assert_eq!(
        prodex(&["expand", "--coeffs", "2,1"]).status.code(),
        Some(1)
    );
    assert_eq!(
        prodex(&["expand", "--coeffs", "1,zz"]).status.code(),
        Some(1)
    );
    assert_eq!(prodex(&["nope"]).status.code(), Some(1));
    assert_eq!(
        prodex(&["--threads", "0", "partitions"]).status.code(),
        Some(1)
    );
    let out = prodex(&["unghost", "--values", "1,2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not realizable at N=2, remainder 1"));
    assert!(out.stdout.is_empty());
}

#[test]
fn malformed_input_file() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(
        dir.path(),
        "bad.json",
        "{\"order\":3,\"exponents\":[1,2,3]}",
    );
    let out = prodex(&["series", "--input", &bad]);
    assert_eq!(out.status.code(), Some(1));
    let missing = dir.path().join("missing.json");
    assert_eq!(
        prodex(&["series", "--input", missing.to_str().unwrap()])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn default_order_env_override() {
    let out = Command::new(env!("CARGO_BIN_EXE_prodex"))
        .args(["invert", "--ones", "--tilde", "--format", "plain"])
        .env("PRODEX_DEFAULT_ORDER", "4")
        .output()
        .unwrap();
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "1 1\n2 2\n3 1\n4 4\n"
    );
    let bad = Command::new(env!("CARGO_BIN_EXE_prodex"))
        .args(["invert", "--ones"])
        .env("PRODEX_DEFAULT_ORDER", "zero")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn fermat_and_check() {
    assert_eq!(
        stdout_ok(&["fermat", "--d", "1", "--p", "3"]),
        "{\"d\":\"1\",\"p\":3,\"m_p\":\"1\",\"m_2p\":\"2\",\"n_p\":\"-1\",\"n_2p\":\"-1\",\"quotient\":\"2\"}\n"
    );
    assert_eq!(
        stdout_ok(&["check", "--a", "50", "--p", "97", "--format", "plain"]),
        "a 50\np 97\nholds true\n"
    );
}

#[test]
fn wieferich_output_is_thread_independent() {
    let one = stdout_ok(&[
        "wieferich",
        "--from",
        "2",
        "--to",
        "10000",
        "--threads",
        "1",
    ]);
    let four = stdout_ok(&[
        "wieferich",
        "--from",
        "2",
        "--to",
        "10000",
        "--threads",
        "4",
    ]);
    let auto = stdout_ok(&["wieferich", "--from", "2", "--to", "10000"]);
    assert_eq!(one, four);
    assert_eq!(one, auto);
    assert_eq!(
        one,
        "{\"lo\":2,\"hi\":10000,\"primes_tested\":1229,\"hits\":[1093,3511]}\n"
    );
}

#[test]
fn partitions_via_product() {
    let out = stdout_ok(&[
        "partitions",
        "--order",
        "10",
        "--via-product",
        "--format",
        "plain",
    ]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 11);
    assert!(lines.iter().all(|l| {
        let cols: Vec<&str> = l.split(' ').collect();
        cols[1] == cols[2]
    }));
    assert_eq!(lines[10], "10 42 42");
}
