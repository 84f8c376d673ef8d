//! Helpers for driving the compiled binary; each test harness uses a subset.
#![allow(dead_code)]

use std::io::Write;
use std::process::{Command, Stdio};

use serde_json::Value;

pub struct Run {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn tachyon_env(args: &[&str], stdin: Option<&str>, envs: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_tachyon"));
    cmd.args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped());
    // Keep the ambient environment from leaking into tolerance resolution.
    cmd.env_remove("TACHYON_TOL");
    for (key, value) in envs {
        cmd.env(key, value);
    }
    let mut child = cmd.spawn().expect("spawn the tachyon binary");
    if let Some(input) = stdin {
        // A child that rejects its flags exits without draining stdin.
        if let Err(e) = child.stdin.as_mut().expect("stdin piped").write_all(input.as_bytes()) {
            assert_eq!(e.kind(), std::io::ErrorKind::BrokenPipe, "stdin write failed: {e}");
        }
    }
    drop(child.stdin.take());
    let out = child.wait_with_output().expect("wait for the binary");
    Run {
        status: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
    }
}

pub fn tachyon(args: &[&str], stdin: Option<&str>) -> Run {
    tachyon_env(args, stdin, &[])
}

pub fn json(run: &Run) -> Value {
    serde_json::from_str(&run.stdout)
        .unwrap_or_else(|e| panic!("stdout is not JSON ({e}): {}", run.stdout))
}

pub fn f(v: &Value) -> f64 {
    v.as_f64().unwrap_or_else(|| panic!("not a number: {v}"))
}

pub fn parse_csv(stdout: &str) -> Vec<(f64, f64)> {
    let mut lines = stdout.lines();
    assert_eq!(lines.next(), Some("param,P"));
    lines
        .map(|line| {
            let (a, b) = line.split_once(',').expect("two columns");
            (a.parse().unwrap(), b.parse().unwrap())
        })
        .collect()
}
