//! Sequence cross-referencing against the OEIS.
//!
//! Two interchangeable lookup backends implement [`OeisLookup`]: an HTTP
//! client for the public search endpoint, and a fixture client that reads
//! canned responses from a directory so tests and air-gapped runs never touch
//! the network. Both feed the same response parser, and a match is scored by
//! the longest prefix of the query terms that appears contiguously in the
//! candidate sequence's data.

use std::env;
use std::fmt;
use std::fs;
use std::io;
use std::path::PathBuf;
use std::time::Duration;

use serde_json::Value;

/// Environment variable that overrides the search endpoint base URL.
pub const ENV_BASE_URL: &str = "ALTPERM_OEIS_URL";

const DEFAULT_BASE_URL: &str = "https://oeis.org";
const REQUEST_TIMEOUT: Duration = Duration::from_secs(10);

/// One candidate sequence returned by a lookup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OeisMatch {
    /// Canonical identifier such as `A000111`.
    pub sequence_id: String,
    /// Sequence name as reported by the database.
    pub name: String,
    /// Longest prefix of the query terms found contiguously in the
    /// sequence's listed data.
    pub matched_prefix_length: usize,
}

/// Failure to complete a lookup, as opposed to a lookup with no matches.
#[derive(Debug)]
pub enum OeisError {
    Network(String),
    BadResponse(String),
}

impl fmt::Display for OeisError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OeisError::Network(msg) => write!(f, "lookup failed: {msg}"),
            OeisError::BadResponse(msg) => write!(f, "unusable response: {msg}"),
        }
    }
}

impl std::error::Error for OeisError {}

/// A search backend. Implementations return every candidate with its match
/// score; callers decide the reporting threshold.
pub trait OeisLookup {
    fn search(&self, terms: &[u64]) -> Result<Vec<OeisMatch>, OeisError>;
}

/// Live client for the public search endpoint.
pub struct HttpClient {
    base_url: String,
}

impl HttpClient {
    /// Uses `ALTPERM_OEIS_URL` when set, otherwise the public site.
    pub fn from_env() -> Self {
        let base_url =
            env::var(ENV_BASE_URL).unwrap_or_else(|_| DEFAULT_BASE_URL.to_string());
        HttpClient { base_url }
    }
}

impl OeisLookup for HttpClient {
    fn search(&self, terms: &[u64]) -> Result<Vec<OeisMatch>, OeisError> {
        let query = join_terms(terms);
        let url = format!(
            "{}/search?q={}&fmt=json",
            self.base_url.trim_end_matches('/'),
            query
        );
        let client = reqwest::blocking::Client::builder()
            .timeout(REQUEST_TIMEOUT)
            .build()
            .map_err(|e| OeisError::Network(e.to_string()))?;
        let body = client
            .get(&url)
            .send()
            .and_then(|resp| resp.error_for_status())
            .and_then(|resp| resp.text())
            .map_err(|e| OeisError::Network(e.to_string()))?;
        parse_response(&body, terms)
    }
}

/// Offline client that resolves each query from a directory of canned
/// responses named after the query terms (`1_1_2_5.json` for terms
/// `1,1,2,5`). A missing file means no candidates, not a failure.
pub struct FixtureClient {
    dir: PathBuf,
}

impl FixtureClient {
    pub fn new(dir: PathBuf) -> Self {
        FixtureClient { dir }
    }

    fn fixture_path(&self, terms: &[u64]) -> PathBuf {
        let stem: Vec<String> = terms.iter().map(u64::to_string).collect();
        self.dir.join(format!("{}.json", stem.join("_")))
    }
}

impl OeisLookup for FixtureClient {
    fn search(&self, terms: &[u64]) -> Result<Vec<OeisMatch>, OeisError> {
        let path = self.fixture_path(terms);
        let body = match fs::read_to_string(&path) {
            Ok(body) => body,
            Err(err) if err.kind() == io::ErrorKind::NotFound => return Ok(Vec::new()),
            Err(err) => {
                return Err(OeisError::Network(format!(
                    "cannot read fixture {}: {err}",
                    path.display()
                )))
            }
        };
        parse_response(&body, terms)
    }
}

fn join_terms(terms: &[u64]) -> String {
    let parts: Vec<String> = terms.iter().map(u64::to_string).collect();
    parts.join(",")
}

/// Parses a search response body. Accepts either the endpoint's envelope
/// object (candidates under `"results"`) or a bare array of entries; each
/// entry carries a numeric `number`, a `name`, and comma-separated `data`.
fn parse_response(body: &str, terms: &[u64]) -> Result<Vec<OeisMatch>, OeisError> {
    let value: Value = serde_json::from_str(body)
        .map_err(|e| OeisError::BadResponse(format!("invalid JSON: {e}")))?;
    let entries = match &value {
        Value::Object(map) => match map.get("results") {
            Some(Value::Array(items)) => items.as_slice(),
            Some(Value::Null) | None => &[],
            Some(_) => {
                return Err(OeisError::BadResponse(
                    "`results` is not an array".to_string(),
                ))
            }
        },
        Value::Array(items) => items.as_slice(),
        _ => {
            return Err(OeisError::BadResponse(
                "expected an object or array at the top level".to_string(),
            ))
        }
    };

    let mut matches = Vec::new();
    for entry in entries {
        let Some(number) = entry.get("number").and_then(Value::as_u64) else {
            continue;
        };
        let name = entry
            .get("name")
            .and_then(Value::as_str)
            .unwrap_or("")
            .to_string();
        let data: Vec<String> = entry
            .get("data")
            .and_then(Value::as_str)
            .unwrap_or("")
            .split(',')
            .map(|t| t.trim().to_string())
            .filter(|t| !t.is_empty())
            .collect();
        matches.push(OeisMatch {
            sequence_id: format!("A{number:06}"),
            name,
            matched_prefix_length: matched_prefix_length(terms, &data),
        });
    }
    Ok(matches)
}

/// Length of the longest prefix of `terms` occurring as a contiguous run
/// somewhere in `data`.
fn matched_prefix_length(terms: &[u64], data: &[String]) -> usize {
    let wanted: Vec<String> = terms.iter().map(u64::to_string).collect();
    for len in (1..=wanted.len()).rev() {
        if len > data.len() {
            continue;
        }
        if data.windows(len).any(|w| w == &wanted[..len]) {
            return len;
        }
    }
    0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prefix_match_scores_contiguous_runs_only() {
        let data: Vec<String> = ["0", "1", "1", "2", "5", "14"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(matched_prefix_length(&[1, 1, 2, 5, 14], &data), 5);
        assert_eq!(matched_prefix_length(&[1, 2, 5, 99], &data), 3);
        assert_eq!(matched_prefix_length(&[7, 7], &data), 0);
        // A scattered (non-contiguous) appearance of the prefix scores as
        // far as the contiguous run reaches.
        let gappy: Vec<String> = ["1", "9", "2", "5"].iter().map(|s| s.to_string()).collect();
        assert_eq!(matched_prefix_length(&[1, 2, 5], &gappy), 1);
    }

    #[test]
    fn envelope_and_bare_array_bodies_both_parse() {
        let envelope = r#"{"results": [{"number": 108, "name": "Catalan", "data": "1,1,2,5,14"}]}"#;
        let bare = r#"[{"number": 108, "name": "Catalan", "data": "1,1,2,5,14"}]"#;
        for body in [envelope, bare] {
            let matches = parse_response(body, &[1, 2, 5]).unwrap();
            assert_eq!(matches.len(), 1);
            assert_eq!(matches[0].sequence_id, "A000108");
            assert_eq!(matches[0].matched_prefix_length, 3);
        }
    }

    #[test]
    fn null_results_mean_no_candidates() {
        let matches = parse_response(r#"{"results": null, "count": 0}"#, &[1, 2]).unwrap();
        assert!(matches.is_empty());
    }

    #[test]
    fn garbage_bodies_are_reported_not_swallowed() {
        assert!(matches!(
            parse_response("not json", &[1]),
            Err(OeisError::BadResponse(_))
        ));
        assert!(matches!(
            parse_response("3", &[1]),
            Err(OeisError::BadResponse(_))
        ));
    }

    #[test]
    fn missing_fixture_is_an_empty_result() {
        let client = FixtureClient::new(PathBuf::from("/nonexistent/fixture/dir"));
        assert_eq!(client.search(&[1, 2, 3]).unwrap(), Vec::new());
    }
}
