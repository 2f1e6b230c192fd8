//! Golden-file runner for the `cmikit` binary.
//!
//! A case is `tests/golden/NAME.args` (one argument per line), with the
//! expected standard output in `NAME.out` and the exit code in `NAME.code`.
//! Commands run from `tests/golden`, so fixtures are named relatively.
//! Set `CMIKIT_BLESS=1` to rewrite the expectations from the current binary.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn cmikit(args: &[&str], cwd: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cmikit"))
        .args(args)
        .current_dir(cwd)
        .env("CMIKIT_COLOR", "0")
        .output()
        .expect("the cmikit binary runs")
}

pub struct Case {
    pub name: String,
    pub args: Vec<String>,
}

pub fn cases() -> Vec<Case> {
    let mut out: Vec<Case> = fs::read_dir(golden_dir())
        .expect("golden directory exists")
        .filter_map(|entry| {
            let path = entry.ok()?.path();
            if path.extension()? != "args" {
                return None;
            }
            let name = path.file_stem()?.to_str()?.to_string();
            let args = fs::read_to_string(&path)
                .ok()?
                .lines()
                .map(str::to_string)
                .collect();
            Some(Case { name, args })
        })
        .collect();
    out.sort_by(|a, b| a.name.cmp(&b.name));
    out
}

/// Runs one case; `Err` describes the first mismatch.
pub fn run_case(case: &Case) -> Result<(), String> {
    let dir = golden_dir();
    let args: Vec<&str> = case.args.iter().map(String::as_str).collect();
    let output = cmikit(&args, &dir);
    let stdout = String::from_utf8_lossy(&output.stdout).into_owned();
    let stderr = String::from_utf8_lossy(&output.stderr).into_owned();
    let code = output.status.code().unwrap_or(-1);
    let out_path = dir.join(format!("{}.out", case.name));
    let code_path = dir.join(format!("{}.code", case.name));
    if std::env::var_os("CMIKIT_BLESS").is_some() {
        fs::write(&out_path, &stdout).unwrap();
        fs::write(&code_path, format!("{code}\n")).unwrap();
    }
    let want_out = fs::read_to_string(&out_path).map_err(|e| format!("{}: {e}", out_path.display()))?;
    let want_code: i32 = fs::read_to_string(&code_path)
        .map_err(|e| format!("{}: {e}", code_path.display()))?
        .trim()
        .parse()
        .map_err(|e| format!("{}: {e}", code_path.display()))?;
    if code != want_code {
        return Err(format!("exit code {code}, expected {want_code}; stderr: {stderr}"));
    }
    if stdout != want_out {
        return Err(format!("stdout differs\n--- got\n{stdout}--- expected\n{want_out}"));
    }
    if code == 2 && stderr.trim().is_empty() {
        return Err("exit 2 without a message".into());
    }
    if case.args.iter().any(|a| a == "--json") && code != 2 {
        let value: Value = serde_json::from_str(&stdout).map_err(|e| format!("not JSON: {e}"))?;
        check_schema(&value)?;
    }
    Ok(())
}

/// The `--json` report shape: `command`, `verdict`, `canonical`, and the
/// optional `witness` and `values`.
pub fn check_schema(value: &Value) -> Result<(), String> {
    let obj = value.as_object().ok_or("report is not an object")?;
    for key in obj.keys() {
        if !["command", "verdict", "canonical", "witness", "values"].contains(&key.as_str()) {
            return Err(format!("unexpected field {key}"));
        }
    }
    if !obj.get("command").is_some_and(Value::is_string) {
        return Err("command must be a string".into());
    }
    if !obj.get("verdict").is_some_and(|v| v.is_string() || v.is_null()) {
        return Err("verdict must be a string or null".into());
    }
    let canonical = obj.get("canonical").and_then(Value::as_array).ok_or("canonical must be a list")?;
    if !canonical.iter().all(Value::is_string) {
        return Err("canonical must hold strings".into());
    }
    if let Some(w) = obj.get("witness") {
        let w = w.as_object().ok_or("witness must be an object")?;
        let strings = ["template", "direction", "step", "premise", "conclusion", "distribution"];
        for key in strings {
            if !w.get(key).is_some_and(Value::is_string) {
                return Err(format!("witness.{key} must be a string"));
            }
        }
        let pivots = w.get("pivots").and_then(Value::as_array).ok_or("witness.pivots must be a list")?;
        if !pivots.iter().all(Value::is_u64) {
            return Err("witness.pivots must hold indices".into());
        }
        if w.len() != strings.len() + 1 {
            return Err("witness has extra fields".into());
        }
    }
    Ok(())
}

/// Runs `command --out` (one of `witness`, `implies`, `equiv`), then
/// `check` on the file it wrote: the premise named in the file must come
/// back VALID and the conclusion INVALID.
pub fn witness_round_trip(command: &str, n: usize, first: &str, second: &str) -> Result<(), String> {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let n = n.to_string();
    let made = cmikit(&[command, "--n", &n, first, second, "--out", "w.pmf"], dir.path());
    let want_code = if command == "witness" { 0 } else { 1 };
    if made.status.code() != Some(want_code) {
        return Err(format!("{command} exited {:?}", made.status.code()));
    }
    let file = fs::read_to_string(dir.path().join("w.pmf")).map_err(|e| e.to_string())?;
    let comment = |key: &str| {
        file.lines()
            .find_map(|l| l.strip_prefix(&format!("# {key}: ")))
            .map(str::to_string)
            .ok_or(format!("witness file has no {key} line"))
    };
    let (premise, conclusion) = (comment("premise")?, comment("conclusion")?);
    for (statement, want) in [(&premise, (0, "VALID\n")), (&conclusion, (1, "INVALID\n"))] {
        let checked = cmikit(&["check", "--dist", "w.pmf", statement], dir.path());
        let got = (checked.status.code().unwrap_or(-1), String::from_utf8_lossy(&checked.stdout).into_owned());
        if got != (want.0, want.1.to_string()) {
            return Err(format!("check {statement} on the witness gave {got:?}"));
        }
    }
    Ok(())
}
