//! Append-only memo file for avoidance counts.
//!
//! Each line stores one computed count as
//! `n,pattern,alternating,count,timestamp,version`. The pattern field is the
//! canonical display form and may itself contain commas, so lines are parsed
//! from both ends rather than split naively. Lookups scan the whole file and
//! return the most recent entry for a key; corrupt lines are skipped with a
//! warning instead of poisoning the rest of the file.
//!
//! The file location comes from `ALTPERM_CACHE` if set, otherwise
//! `$HOME/.altperm/counts.csv`. The cache is a pure memo: every entry must
//! reproduce exactly under recomputation, which `altperm --verify-cache`
//! checks.

use std::env;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use altperm_core::CountRecord;

/// Environment variable that overrides the cache file location.
pub const ENV_PATH: &str = "ALTPERM_CACHE";

/// One parsed cache line.
#[derive(Debug, Clone)]
pub struct CacheEntry {
    pub n: usize,
    pub pattern: String,
    pub alternating: bool,
    pub count: u64,
    pub created_at: u64,
    pub tool_version: String,
}

/// Resolves the cache file path, or `None` when neither `ALTPERM_CACHE` nor
/// `HOME` is set.
pub fn cache_path() -> Option<PathBuf> {
    if let Some(path) = env::var_os(ENV_PATH) {
        return Some(PathBuf::from(path));
    }
    env::var_os("HOME").map(|home| Path::new(&home).join(".altperm").join("counts.csv"))
}

fn parse_line(line: &str) -> Option<CacheEntry> {
    let parts: Vec<&str> = line.split(',').collect();
    if parts.len() < 6 {
        return None;
    }
    // The pattern sits between a fixed head (n) and a fixed tail
    // (alternating, count, timestamp, version); rejoin whatever is left in
    // the middle so comma-form patterns survive the round trip.
    let tail = parts.len() - 4;
    let n = parts[0].trim().parse().ok()?;
    let alternating = match parts[tail].trim() {
        "true" => true,
        "false" => false,
        _ => return None,
    };
    let count = parts[tail + 1].trim().parse().ok()?;
    let created_at = parts[tail + 2].trim().parse().ok()?;
    let tool_version = parts[tail + 3].trim();
    if tool_version.is_empty() {
        return None;
    }
    Some(CacheEntry {
        n,
        pattern: parts[1..tail].join(","),
        alternating,
        count,
        created_at,
        tool_version: tool_version.to_string(),
    })
}

/// Reads every well-formed entry, warning on stderr about lines that fail to
/// parse. A missing file is an empty cache.
pub fn load_entries(path: &Path) -> io::Result<Vec<CacheEntry>> {
    let text = match fs::read_to_string(path) {
        Ok(text) => text,
        Err(err) if err.kind() == io::ErrorKind::NotFound => return Ok(Vec::new()),
        Err(err) => return Err(err),
    };
    let mut entries = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        match parse_line(line) {
            Some(entry) => entries.push(entry),
            None => eprintln!(
                "warning: skipping corrupt cache line {} in {}",
                idx + 1,
                path.display()
            ),
        }
    }
    Ok(entries)
}

/// Returns the most recently appended count for the key, if any.
pub fn lookup(path: &Path, n: usize, pattern: &str, alternating: bool) -> io::Result<Option<u64>> {
    let entries = load_entries(path)?;
    Ok(entries
        .iter()
        .rev()
        .find(|e| e.n == n && e.pattern == pattern && e.alternating == alternating)
        .map(|e| e.count))
}

/// Appends one computed record, creating the parent directory on first use.
pub fn append(path: &Path, record: &CountRecord) -> io::Result<()> {
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            fs::create_dir_all(parent)?;
        }
    }
    let created_at = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .unwrap_or_default()
        .as_secs();
    let mut file = fs::OpenOptions::new().create(true).append(true).open(path)?;
    writeln!(
        file,
        "{},{},{},{},{},{}",
        record.n,
        record.pattern,
        record.alternating_only,
        record.count,
        created_at,
        env!("CARGO_PKG_VERSION"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_round_trip_with_comma_pattern() {
        let entry = parse_line("12,10,2,1,3,4,5,6,7,8,9,false,99,1700000000,0.1.0").unwrap();
        assert_eq!(entry.n, 12);
        assert_eq!(entry.pattern, "10,2,1,3,4,5,6,7,8,9");
        assert!(!entry.alternating);
        assert_eq!(entry.count, 99);
        assert_eq!(entry.tool_version, "0.1.0");
    }

    #[test]
    fn short_and_malformed_lines_are_rejected() {
        assert!(parse_line("4,123,true,2").is_none());
        assert!(parse_line("x,123,true,2,1700000000,0.1.0").is_none());
        assert!(parse_line("4,123,maybe,2,1700000000,0.1.0").is_none());
        assert!(parse_line("4,123,true,two,1700000000,0.1.0").is_none());
    }

    #[test]
    fn plain_pattern_line_parses() {
        let entry = parse_line("4,123,true,2,1700000000,0.1.0").unwrap();
        assert_eq!(entry.n, 4);
        assert_eq!(entry.pattern, "123");
        assert!(entry.alternating);
        assert_eq!(entry.count, 2);
    }
}
