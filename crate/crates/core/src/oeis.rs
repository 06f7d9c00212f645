//! OEIS lookups: a bundled offline cache, optionally backed by the live
//! search endpoint.
//!
//! Configuration comes from the environment:
//!
//! * `TREEPAT_OEIS_URL`: search endpoint (default `https://oeis.org/search`);
//!   `off` or an empty value disables network lookups.
//! * `TREEPAT_OEIS_TIMEOUT`: request timeout in seconds (default 10).
//! * `TREEPAT_CACHE`: a cache file in the bundled format, consulted in
//!   addition to the bundled entries. Without it, an `oeis_cache.json` next to
//!   the running executable is used when present.

use std::path::{Path, PathBuf};
use std::time::Duration;

use num_bigint::BigInt;
use serde::Deserialize;

use crate::error::Result;

pub const DEFAULT_URL: &str = "https://oeis.org/search";
pub const DEFAULT_TIMEOUT: Duration = Duration::from_secs(10);
/// Shorter queries match too much to be useful.
pub const MIN_TERMS: usize = 6;
/// Leading query terms that may be skipped when matching cached entries,
/// since many avoidance sequences agree with an OEIS entry only from `n = 2` or so.
const MAX_SKIP: usize = 2;

const BUNDLED: &str = include_str!("../data/oeis_cache.json");

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
pub struct CacheEntry {
    pub id: String,
    #[serde(default)]
    pub name: String,
    #[serde(deserialize_with = "big_ints")]
    pub terms: Vec<BigInt>,
}

fn big_ints<'de, D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Vec<BigInt>, D::Error> {
    Vec::<serde_json::Number>::deserialize(d)?
        .iter()
        .map(|n| n.to_string().parse().map_err(serde::de::Error::custom))
        .collect()
}

#[derive(Clone, Debug, Default)]
pub struct Cache {
    entries: Vec<CacheEntry>,
}

impl Cache {
    pub fn bundled() -> Cache {
        Cache::from_json(BUNDLED).expect("bundled cache is valid")
    }

    pub fn from_json(text: &str) -> Result<Cache> {
        Ok(Cache {
            entries: serde_json::from_str(text)?,
        })
    }

    pub fn load(path: &Path) -> Result<Cache> {
        Cache::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn entries(&self) -> &[CacheEntry] {
        &self.entries
    }

    pub fn extend(&mut self, other: Cache) {
        self.entries.extend(other.entries);
    }

    /// Ids of entries containing the query (or the query minus a couple of
    /// leading terms) as a contiguous run.
    pub fn lookup(&self, query: &[BigInt]) -> Vec<String> {
        if !worth_querying(query) {
            return Vec::new();
        }
        let mut ids: Vec<String> = Vec::new();
        for e in &self.entries {
            let hit = (0..=MAX_SKIP)
                .take_while(|&s| query.len() - s >= MIN_TERMS)
                .any(|s| contains_run(&e.terms, &query[s..]));
            if hit && !ids.contains(&e.id) {
                ids.push(e.id.clone());
            }
        }
        ids
    }
}

fn worth_querying(query: &[BigInt]) -> bool {
    query.len() >= MIN_TERMS && query.iter().any(|a| *a != BigInt::default())
}

fn contains_run(hay: &[BigInt], needle: &[BigInt]) -> bool {
    needle.len() <= hay.len() && hay.windows(needle.len()).any(|w| w == needle)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Annotation {
    pub ids: Vec<String>,
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct OeisClient {
    cache: Cache,
    url: Option<String>,
    timeout: Duration,
}

impl OeisClient {
    /// Bundled cache only, no network.
    pub fn offline() -> OeisClient {
        OeisClient {
            cache: Cache::bundled(),
            url: None,
            timeout: DEFAULT_TIMEOUT,
        }
    }

    pub fn new(cache: Cache, url: Option<String>, timeout: Duration) -> OeisClient {
        OeisClient {
            cache,
            url,
            timeout,
        }
    }

    /// Configure from the environment. Problems reading an extra cache file
    /// are reported as warnings and otherwise ignored.
    pub fn from_env() -> (OeisClient, Vec<String>) {
        let mut warnings = Vec::new();
        let mut cache = Cache::bundled();
        if let Some(path) = extra_cache_path() {
            match Cache::load(&path) {
                Ok(c) => cache.extend(c),
                Err(e) => warnings.push(format!("ignoring cache {}: {e}", path.display())),
            }
        }
        let url = match std::env::var("TREEPAT_OEIS_URL") {
            Ok(u) if u.is_empty() || u == "off" => None,
            Ok(u) => Some(u),
            Err(_) => Some(DEFAULT_URL.to_string()),
        };
        let timeout = std::env::var("TREEPAT_OEIS_TIMEOUT")
            .ok()
            .and_then(|s| s.parse::<f64>().ok())
            .filter(|s| *s > 0.0)
            .map(Duration::from_secs_f64)
            .unwrap_or(DEFAULT_TIMEOUT);
        (OeisClient::new(cache, url, timeout), warnings)
    }

    pub fn cache(&self) -> &Cache {
        &self.cache
    }

    /// Cached matches first, then anything new from the search endpoint.
    /// Network trouble only produces a warning.
    pub fn annotate(&self, sequence: &[BigInt]) -> Annotation {
        let mut ids = self.cache.lookup(sequence);
        let mut warnings = Vec::new();
        if let (Some(url), true) = (&self.url, worth_querying(sequence)) {
            match search(url, sequence, self.timeout) {
                Ok(found) => {
                    for id in found {
                        if !ids.contains(&id) {
                            ids.push(id);
                        }
                    }
                }
                Err(e) => warnings.push(format!("OEIS lookup failed, using cache only: {e}")),
            }
        }
        Annotation { ids, warnings }
    }
}

fn extra_cache_path() -> Option<PathBuf> {
    if let Some(p) = std::env::var_os("TREEPAT_CACHE") {
        return Some(PathBuf::from(p));
    }
    let exe = std::env::current_exe().ok()?;
    let p = exe.parent()?.join("oeis_cache.json");
    p.exists().then_some(p)
}

/// Query the search endpoint for `sequence`, returning ids like `A000045`.
pub fn search(
    url: &str,
    sequence: &[BigInt],
    timeout: Duration,
) -> std::result::Result<Vec<String>, String> {
    let q = sequence
        .iter()
        .map(BigInt::to_string)
        .collect::<Vec<_>>()
        .join(",");
    let agent: ureq::Agent = ureq::Agent::config_builder()
        .timeout_global(Some(timeout))
        .build()
        .into();
    let body = agent
        .get(url)
        .query("q", &q)
        .query("fmt", "json")
        .call()
        .and_then(|mut r| r.body_mut().read_to_string())
        .map_err(|e| e.to_string())?;
    parse_search_response(&body).map_err(|e| format!("unexpected response: {e}"))
}

#[derive(Deserialize)]
struct Hit {
    number: u64,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Response {
    // current format: a bare array, or null when nothing matches
    Hits(Option<Vec<Hit>>),
    Wrapped { results: Option<Vec<Hit>> },
}

/// Parse a `fmt=json` search response.
pub fn parse_search_response(body: &str) -> std::result::Result<Vec<String>, serde_json::Error> {
    let hits = match serde_json::from_str::<Response>(body)? {
        Response::Hits(h) | Response::Wrapped { results: h } => h.unwrap_or_default(),
    };
    Ok(hits.iter().map(|h| format!("A{:06}", h.number)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::{Read, Write};
    use std::net::TcpListener;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn bundled_lookups() {
        let c = Cache::bundled();
        assert!(c.entries().len() >= 20);
        assert!(c
            .lookup(&ints(&[1, 1, 2, 5, 13, 34, 89, 233]))
            .contains(&"A001519".to_string()));
        assert!(c
            .lookup(&ints(&[1, 1, 2, 4, 7, 13, 24, 44, 81]))
            .contains(&"A000073".to_string()));
        assert!(c.lookup(&ints(&[0, 0, 0, 0, 0, 0])).is_empty());
        assert!(c.lookup(&ints(&[1, 1, 2, 5, 14])).is_empty());
        // matches only once the leading term is dropped
        let pell = c.lookup(&ints(&[1, 1, 2, 5, 12, 29, 70, 169]));
        assert_eq!(pell, ["A000129"]);
    }

    #[test]
    fn response_shapes() {
        let ids =
            parse_search_response(r#"[{"number": 45, "name": "Fibonacci"}, {"number": 212804}]"#)
                .unwrap();
        assert_eq!(ids, ["A000045", "A212804"]);
        let ids = parse_search_response(r#"{"count": 1, "results": [{"number": 73}]}"#).unwrap();
        assert_eq!(ids, ["A000073"]);
        assert!(parse_search_response("null").unwrap().is_empty());
        assert!(parse_search_response(r#"{"results": null}"#)
            .unwrap()
            .is_empty());
        assert!(parse_search_response("<html>").is_err());
    }

    fn serve_once(body: &'static str) -> (String, std::thread::JoinHandle<String>) {
        let listener = TcpListener::bind("127.0.0.1:0").unwrap();
        let url = format!("http://{}/search", listener.local_addr().unwrap());
        let handle = std::thread::spawn(move || {
            let (mut stream, _) = listener.accept().unwrap();
            let mut buf = [0u8; 4096];
            let n = stream.read(&mut buf).unwrap();
            let request = String::from_utf8_lossy(&buf[..n]).to_string();
            write!(
                stream,
                "HTTP/1.1 200 OK\r\nContent-Type: application/json\r\nContent-Length: {}\r\nConnection: close\r\n\r\n{}",
                body.len(),
                body
            )
            .unwrap();
            request
        });
        (url, handle)
    }

    #[test]
    fn live_search_against_local_server() {
        let (url, handle) = serve_once(r#"[{"number": 1519}, {"number": 999999}]"#);
        let client = OeisClient::new(Cache::bundled(), Some(url), Duration::from_secs(5));
        let a = client.annotate(&ints(&[1, 1, 2, 5, 13, 34, 89, 233]));
        assert_eq!(a.ids, ["A001519", "A999999"]);
        assert!(a.warnings.is_empty());
        let request = handle.join().unwrap();
        assert!(
            request.starts_with("GET /search?q=1%2C1%2C2%2C5%2C13%2C34%2C89%2C233&fmt=json"),
            "{request}"
        );
    }

    #[test]
    fn network_failure_is_a_warning() {
        // bind then drop, so nothing listens on the port
        let port = TcpListener::bind("127.0.0.1:0")
            .unwrap()
            .local_addr()
            .unwrap()
            .port();
        let url = format!("http://127.0.0.1:{port}/search");
        let client = OeisClient::new(Cache::bundled(), Some(url), Duration::from_secs(2));
        let a = client.annotate(&ints(&[1, 1, 2, 4, 7, 13, 24, 44, 81]));
        assert_eq!(a.ids, ["A000073"]);
        assert_eq!(a.warnings.len(), 1);
        let none = client.annotate(&ints(&[0, 0, 0, 0, 0, 0]));
        assert!(none.ids.is_empty() && none.warnings.is_empty());
    }

    #[test]
    fn offline_client() {
        let a = OeisClient::offline().annotate(&ints(&[1, 1, 2, 5, 14, 42, 132, 429]));
        assert!(a.ids.contains(&"A000108".to_string()));
        assert!(a.warnings.is_empty());
    }
}
