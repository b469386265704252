//! Helpers for driving the command line in-process.

use std::path::Path;

use serde_json::Value;

/// Runs `kegraph ARGS...` and returns its exit code.
pub fn kegraph(args: &[&str]) -> u8 {
    kegraph_cli::run_from(std::iter::once("kegraph").chain(args.iter().copied()))
}

pub fn read_json(path: &Path) -> Result<Value, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
}
