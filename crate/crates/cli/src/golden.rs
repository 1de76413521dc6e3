//! Golden-file tests: each documented invocation must reproduce its stored
//! standard output byte for byte and exit with the documented code.
//!
//! Invocations run in-process through [`run`], the same entry point the
//! binary uses. Regenerate the stored outputs with
//! `SQMAT_BLESS=1 cargo test -p sqmat-cli --lib golden`.

#[path = "../tests/support/cases.rs"]
mod cases;

use std::env;
use std::fs;
use std::path::PathBuf;
use std::sync::{Mutex, MutexGuard};

use cases::{Case, CASES};

use crate::{run, Invocation};

/// Serializes tests that read or write `SQMAT_FORMAT`.
static ENV_LOCK: Mutex<()> = Mutex::new(());

fn env_lock() -> MutexGuard<'static, ()> {
    ENV_LOCK.lock().unwrap_or_else(|e| e.into_inner())
}

fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn golden_path(name: &str) -> PathBuf {
    manifest_dir()
        .join("tests/golden")
        .join(format!("{name}.out"))
}

fn invoke(args: &[&str]) -> Invocation {
    run(std::iter::once("sqmat").chain(args.iter().copied()))
}

fn check(case: &Case, bless: bool) -> Result<(), String> {
    let inv = invoke(case.args);
    let path = golden_path(case.name);
    if bless {
        fs::write(&path, &inv.stdout).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    let expected = fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if inv.stdout != expected {
        return Err(format!(
            "stdout differs\n--- expected\n{expected}--- actual\n{}---",
            inv.stdout
        ));
    }
    if inv.code != case.code {
        return Err(format!(
            "exit code {}, expected {} (stderr: {})",
            inv.code, case.code, inv.stderr
        ));
    }
    if let Some(needle) = case.stderr {
        if !inv.stderr.contains(needle) {
            return Err(format!("stderr lacks {needle:?}: {}", inv.stderr));
        }
    }
    Ok(())
}

#[test]
fn golden_outputs_and_exit_codes() {
    let _guard = env_lock();
    env::remove_var("SQMAT_FORMAT");
    let bless = env::var_os("SQMAT_BLESS").is_some();
    let failures: Vec<String> = CASES
        .iter()
        .filter_map(|c| check(c, bless).err().map(|e| format!("[{}] {e}", c.name)))
        .collect();
    assert!(
        failures.is_empty(),
        "{} golden case(s) failed:\n{}",
        failures.len(),
        failures.join("\n")
    );
}

#[test]
fn every_golden_file_has_a_case() {
    let dir = manifest_dir().join("tests/golden");
    for entry in fs::read_dir(&dir).unwrap() {
        let path = entry.unwrap().path();
        let stem = path.file_stem().unwrap().to_str().unwrap().to_owned();
        assert!(
            CASES.iter().any(|c| c.name == stem),
            "stale golden file {}",
            path.display()
        );
    }
}

#[test]
fn every_exit_code_is_exercised() {
    for code in [0, 2, 3, 4, 5, 6] {
        assert!(
            CASES.iter().any(|c| c.code == code),
            "no case exits with {code}"
        );
    }
}

#[test]
fn format_env_var_selects_text() {
    let _guard = env_lock();
    env::set_var("SQMAT_FORMAT", "text");
    let inv = invoke(&["scalar", "sqrt", "0", "2", "0", "0"]);
    env::remove_var("SQMAT_FORMAT");
    let expected = fs::read_to_string(golden_path("scalar_sqrt_text")).unwrap();
    assert_eq!(inv.stdout, expected);
}

#[test]
fn output_flag_writes_file() {
    let _guard = env_lock();
    env::remove_var("SQMAT_FORMAT");
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("report.json");
    let data = manifest_dir().join("tests/data/solve_scalar_unique.json");
    let inv = invoke(&[
        "solve",
        data.to_str().unwrap(),
        "--output",
        target.to_str().unwrap(),
    ]);
    assert_eq!(inv.code, 0, "stderr: {}", inv.stderr);
    assert!(inv.stdout.is_empty());
    let expected = fs::read_to_string(golden_path("solve_scalar_unique")).unwrap();
    assert_eq!(fs::read_to_string(&target).unwrap(), expected);
}

#[test]
fn help_goes_to_stdout_with_success() {
    let inv = invoke(&["--help"]);
    assert_eq!(inv.code, 0);
    assert!(inv.stdout.contains("Usage"));
    assert!(inv.stderr.is_empty());
}
