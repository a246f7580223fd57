use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bchrome(args: &[&str], stdin: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_bchrome"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin).unwrap();
    child.wait_with_output().unwrap()
}

fn tempdir(name: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("bchrome-cli-{name}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn petersen_bchrom() {
    let g6 = bchrome(&["gen", "--family", "petersen"], b"").stdout;
    let out = bchrome(&["bchrom", "-"], &g6);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(out.stdout, b"3\n");
}

#[test]
fn hoffman_singleton_color_then_verify() {
    let dir = tempdir("hs");
    let graph = dir.join("hs.g6");
    let cert = dir.join("cert.json");
    let g6 = bchrome(&["gen", "--family", "hoffman-singleton"], b"").stdout;
    std::fs::write(&graph, &g6).unwrap();
    let graph = graph.to_str().unwrap();
    let cert = cert.to_str().unwrap();

    let out = bchrome(
        &["color", graph, "--strategy", "two-bunch", "--out", cert],
        b"",
    );
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(String::from_utf8_lossy(&out.stdout).contains("k 8"));

    let out = bchrome(&["verify", graph, cert], b"");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(out.stdout, b"Accept (k = 8)\n");

    // A certificate for a different graph is rejected.
    let c5 = dir.join("c5.dimacs");
    std::fs::write(&c5, "p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n").unwrap();
    let out = bchrome(&["verify", c5.to_str().unwrap(), cert], b"");
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.starts_with(b"Reject: "));

    std::fs::write(dir.join("bad.json"), "{\"version\": 1}").unwrap();
    let out = bchrome(
        &["verify", graph, dir.join("bad.json").to_str().unwrap()],
        b"",
    );
    assert_eq!(out.status.code(), Some(3));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn out_of_scope_color_exits_2() {
    let g6 = bchrome(&["gen", "--family", "petersen"], b"").stdout;
    let out = bchrome(&["color", "-", "--strategy", "no-c6"], &g6);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("d=3 < 7"));
    let out = bchrome(&["color", "-", "--strategy", "auto", "--vertex", "0"], &g6);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn stdout_is_deterministic() {
    let g6 = bchrome(&["gen", "--family", "hoffman-singleton"], b"").stdout;
    for args in [
        &["color", "-"][..],
        &["hypcheck", "-"],
        &["info", "-", "--vertex", "3"],
    ] {
        let a = bchrome(args, &g6);
        let b = bchrome(args, &g6);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout);
    }
    let info: serde_json::Value =
        serde_json::from_slice(&bchrome(&["info", "-"], &g6).stdout).unwrap();
    assert_eq!(info["girth"], 5);
    assert_eq!(info["closed_bunch_census"]["7"], 50);
}

#[test]
fn malformed_input_exits_3() {
    let out = bchrome(&["info", "-"], b"p edge 2 1\ne 1 9\n");
    assert_eq!(out.status.code(), Some(3));
    let out = bchrome(&["bogus"], b"");
    assert_eq!(out.status.code(), Some(3));
}
