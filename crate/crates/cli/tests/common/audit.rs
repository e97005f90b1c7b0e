//! Source scan for platform trigonometry.

use std::fs;
use std::path::{Path, PathBuf};

use regex::Regex;

/// The single file allowed to call platform trigonometric functions.
pub const ALLOWED: &str = "bench.rs";

pub fn patterns() -> Vec<Regex> {
    const FNS: &str = "sin|cos|tan|asin|acos|atan|atan2|sin_cos|sinh|cosh|tanh|asinh|acosh|atanh";
    [
        format!(r"\.\s*(?:{FNS})\s*\("),
        format!(r"\bf(?:32|64)::(?:{FNS})\b"),
        r"\bconsts::(?:PI|TAU|FRAC_PI_\w+|FRAC_1_PI|FRAC_2_PI|FRAC_2_SQRT_PI)\b".to_string(),
        r"\blibm\b".to_string(),
    ]
    .iter()
    .map(|p| Regex::new(p).expect("valid pattern"))
    .collect()
}

fn rust_files(dir: &Path, out: &mut Vec<PathBuf>) {
    for entry in fs::read_dir(dir).unwrap_or_else(|e| panic!("{}: {e}", dir.display())) {
        let path = entry.expect("dir entry").path();
        if path.is_dir() {
            rust_files(&path, out);
        } else if path.extension().is_some_and(|e| e == "rs") {
            out.push(path);
        }
    }
}

/// Source roots of both crates.
pub fn roots() -> Vec<PathBuf> {
    let cli = Path::new(env!("CARGO_MANIFEST_DIR"));
    vec![cli.join("../core/src"), cli.join("src")]
}

/// `(file, line number, line)` for every non-comment line that matches.
pub fn scan_text(text: &str, patterns: &[Regex]) -> Vec<(usize, String)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, line)| {
            let code = line.split("//").next().unwrap_or("");
            patterns
                .iter()
                .any(|p| p.is_match(code))
                .then(|| (i + 1, line.trim().to_string()))
        })
        .collect()
}

/// Violations outside [`ALLOWED`], and the number of files scanned.
pub fn violations() -> (Vec<String>, usize) {
    let patterns = patterns();
    let mut files = Vec::new();
    for root in roots() {
        rust_files(&root, &mut files);
    }
    let mut found = Vec::new();
    for f in &files {
        if f.file_name().is_some_and(|n| n == ALLOWED) {
            continue;
        }
        let text = fs::read_to_string(f).expect("readable source");
        for (line, code) in scan_text(&text, &patterns) {
            found.push(format!("{}:{line}: {code}", f.display()));
        }
    }
    (found, files.len())
}

/// Matches inside the allowed file; proves the scan can see real calls.
pub fn allowed_hits() -> usize {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("src").join(ALLOWED);
    let text = fs::read_to_string(path).expect("bench source");
    scan_text(&text, &patterns()).len()
}
