#![allow(dead_code)]

use std::path::Path;
use std::process::Command;

use schlafli_cli::{parse_report, Report};
use schlafli_core::table::TableFile;
use schlafli_core::FiniteQuandle;

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub report: Report,
}

/// Runs the binary with `--format json` and parses its report.
pub fn schlafli(args: &[&str]) -> Run {
    schlafli_in(None, args)
}

pub fn schlafli_in(dir: Option<&Path>, args: &[&str]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_schlafli"));
    cmd.arg("--format")
        .arg("json")
        .args(args)
        .env_remove("QF_BUDGET");
    if let Some(dir) = dir {
        cmd.current_dir(dir);
    }
    let out = cmd.output().expect("binary runs");
    let stdout = String::from_utf8(out.stdout).expect("utf-8 output");
    let report = parse_report(&stdout).unwrap_or_else(|e| panic!("{args:?}: {e}\n{stdout}"));
    Run {
        code: out.status.code().expect("exited"),
        stdout,
        report,
    }
}

pub fn quandle(t: &TableFile) -> FiniteQuandle {
    t.to_quandle().unwrap_or_else(|e| panic!("{}: {e}", t.name))
}
