//! Runs the documented CLI invocations against the built `sqmat` binary.

#![allow(dead_code)]

mod cases;

use std::fs;
use std::path::PathBuf;
use std::process::Command;

pub use cases::{Case, CASES};

pub fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn golden_path(name: &str) -> PathBuf {
    manifest_dir()
        .join("tests/golden")
        .join(format!("{name}.out"))
}

pub fn run(case: &Case) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_sqmat"))
        .args(case.args)
        .current_dir(manifest_dir())
        .env_remove("SQMAT_FORMAT")
        .output()
        .expect("sqmat runs");
    (
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
        String::from_utf8(out.stderr).expect("utf-8 stderr"),
        out.status.code().expect("exit code"),
    )
}

pub fn check(case: &Case, bless: bool) -> Result<(), String> {
    let (stdout, stderr, code) = run(case);
    let path = golden_path(case.name);
    if bless {
        fs::create_dir_all(path.parent().unwrap()).unwrap();
        fs::write(&path, &stdout).unwrap();
    }
    let expected = fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if stdout != expected {
        return Err(format!(
            "stdout differs\n--- expected\n{expected}--- actual\n{stdout}---"
        ));
    }
    if code != case.code {
        return Err(format!(
            "exit code {code}, expected {} (stderr: {stderr})",
            case.code
        ));
    }
    if let Some(needle) = case.stderr {
        if !stderr.contains(needle) {
            return Err(format!("stderr lacks {needle:?}: {stderr}"));
        }
    }
    Ok(())
}
