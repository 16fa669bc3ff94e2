//! OEIS b-files: parsing, and fetching through an on-disk cache.

use std::collections::HashMap;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;

use crate::error::{Error, Result};

/// Environment variable overriding the fixtures directory.
pub const FIXTURES_ENV: &str = "DOWLING_FIXTURES_DIR";

pub fn default_fixtures_dir() -> PathBuf {
    std::env::var_os(FIXTURES_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from("fixtures"))
}

/// Parses `index value` lines, skipping blank lines and `#` comments.
pub fn parse_bfile(text: &[u8]) -> Result<Vec<(i64, BigInt)>> {
    let text = std::str::from_utf8(text).map_err(|e| Error::Parse {
        line: 0,
        message: format!("not UTF-8: {e}"),
    })?;
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse {
            line: i + 1,
            message,
        };
        let mut fields = line.split_whitespace();
        let (Some(n), Some(v), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(err(format!("expected `index value`, got {line:?}")));
        };
        let n = n
            .parse::<i64>()
            .map_err(|e| err(format!("bad index {n:?}: {e}")))?;
        let v = v
            .parse::<BigInt>()
            .map_err(|e| err(format!("bad value {v:?}: {e}")))?;
        out.push((n, v));
    }
    Ok(out)
}

/// `A000110` -> `b000110.txt`.
pub fn bfile_name(oeis_id: &str) -> Result<String> {
    match oeis_id.strip_prefix('A') {
        Some(digits) if digits.len() == 6 && digits.bytes().all(|b| b.is_ascii_digit()) => {
            Ok(format!("b{digits}.txt"))
        }
        _ => Err(Error::Parse {
            line: 1,
            message: format!("not an OEIS id: {oeis_id:?}"),
        }),
    }
}

pub fn bfile_url(oeis_id: &str) -> Result<String> {
    Ok(format!(
        "https://oeis.org/{oeis_id}/{}",
        bfile_name(oeis_id)?
    ))
}

/// Something that can GET a URL.
pub trait Transport: Send + Sync {
    fn get(&self, url: &str) -> Result<Vec<u8>>;
}

pub struct HttpTransport;

impl Transport for HttpTransport {
    fn get(&self, url: &str) -> Result<Vec<u8>> {
        let resp = match ureq::get(url).call() {
            Ok(resp) => resp,
            Err(ureq::Error::Status(status, _)) => {
                return Err(Error::HttpStatus {
                    url: url.to_string(),
                    status,
                })
            }
            Err(e) => {
                return Err(Error::Network {
                    url: url.to_string(),
                    message: e.to_string(),
                })
            }
        };
        if resp.status() != 200 {
            return Err(Error::HttpStatus {
                url: url.to_string(),
                status: resp.status(),
            });
        }
        let mut body = Vec::new();
        resp.into_reader()
            .read_to_end(&mut body)
            .map_err(|e| Error::Network {
                url: url.to_string(),
                message: e.to_string(),
            })?;
        Ok(body)
    }
}

/// Reads b-files from a fixtures directory, optionally downloading and
/// caching missing ones. Concurrent requests for the same id share one
/// download.
pub struct BFileStore {
    dir: PathBuf,
    transport: Option<Box<dyn Transport>>,
    inflight: Mutex<HashMap<String, Arc<Mutex<()>>>>,
}

impl BFileStore {
    pub fn offline(dir: impl Into<PathBuf>) -> Self {
        BFileStore {
            dir: dir.into(),
            transport: None,
            inflight: Mutex::default(),
        }
    }

    pub fn online(dir: impl Into<PathBuf>, transport: Box<dyn Transport>) -> Self {
        BFileStore {
            dir: dir.into(),
            transport: Some(transport),
            inflight: Mutex::default(),
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, oeis_id: &str) -> Result<PathBuf> {
        Ok(self.dir.join(bfile_name(oeis_id)?))
    }

    pub fn fetch(&self, oeis_id: &str) -> Result<Vec<u8>> {
        let path = self.path_for(oeis_id)?;
        let slot = {
            let mut map = self.inflight.lock().unwrap_or_else(|e| e.into_inner());
            map.entry(oeis_id.to_string()).or_default().clone()
        };
        let _guard = slot.lock().unwrap_or_else(|e| e.into_inner());

        if path.is_file() {
            return Ok(fs::read(&path)?);
        }
        let Some(transport) = &self.transport else {
            return Err(Error::CacheMiss {
                id: oeis_id.to_string(),
                path: path.display().to_string(),
            });
        };
        let body = transport.get(&bfile_url(oeis_id)?)?;
        parse_bfile(&body)?;
        write_atomic(&path, &body)?;
        Ok(body)
    }
}

fn write_atomic(path: &Path, body: &[u8]) -> Result<()> {
    let dir = path.parent().unwrap_or(Path::new("."));
    fs::create_dir_all(dir)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(body)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| Error::Io(e.to_string()))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::atomic::{AtomicUsize, Ordering};

    fn pairs(v: &[(i64, i64)]) -> Vec<(i64, BigInt)> {
        v.iter().map(|&(n, a)| (n, BigInt::from(a))).collect()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(
            parse_bfile(b"0 1\n1 2\n2 5\n").unwrap(),
            pairs(&[(0, 1), (1, 2), (2, 5)])
        );
        assert_eq!(
            parse_bfile(b"# comment\n\n3 15\n").unwrap(),
            pairs(&[(3, 15)])
        );
        assert_eq!(
            parse_bfile(b"3 x\n").unwrap_err(),
            Error::Parse {
                line: 1,
                message: "bad value \"x\": invalid digit found in string".into()
            }
        );
        assert!(matches!(
            parse_bfile(b"0 1\n\n1\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_bfile(b"0 1 2\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        let big = parse_bfile(b"13 -2702763\n14 123456789012345678901234567890").unwrap();
        assert_eq!(big[0].1, BigInt::from(-2702763));
        assert_eq!(big[1].1.to_string(), "123456789012345678901234567890");
    }

    #[test]
    fn names_and_urls() {
        assert_eq!(
            bfile_url("A000110").unwrap(),
            "https://oeis.org/A000110/b000110.txt"
        );
        assert!(bfile_name("A11").is_err());
        assert!(bfile_name("B000110").is_err());
    }

    struct Fake {
        calls: AtomicUsize,
        reply: std::result::Result<&'static [u8], u16>,
    }

    impl Transport for Fake {
        fn get(&self, url: &str) -> Result<Vec<u8>> {
            self.calls.fetch_add(1, Ordering::SeqCst);
            std::thread::sleep(std::time::Duration::from_millis(20));
            match self.reply {
                Ok(body) => Ok(body.to_vec()),
                Err(0) => Err(Error::Network {
                    url: url.into(),
                    message: "unreachable".into(),
                }),
                Err(status) => Err(Error::HttpStatus {
                    url: url.into(),
                    status,
                }),
            }
        }
    }

    #[test]
    fn offline_reads_fixture_or_reports_cache_miss() {
        let dir = tempfile::tempdir().unwrap();
        let store = BFileStore::offline(dir.path());
        assert!(matches!(
            store.fetch("A000110"),
            Err(Error::CacheMiss { .. })
        ));
        fs::write(dir.path().join("b000110.txt"), b"0 1\n1 1\n2 2\n").unwrap();
        assert_eq!(store.fetch("A000110").unwrap(), b"0 1\n1 1\n2 2\n");
    }

    #[test]
    fn online_caches_once_under_concurrency() {
        let dir = tempfile::tempdir().unwrap();
        let fake = Arc::new(Fake {
            calls: AtomicUsize::new(0),
            reply: Ok(b"0 1\n1 1\n2 2\n3 5\n4 15\n"),
        });
        struct Shared(Arc<Fake>);
        impl Transport for Shared {
            fn get(&self, url: &str) -> Result<Vec<u8>> {
                self.0.get(url)
            }
        }
        let store = Arc::new(BFileStore::online(
            dir.path(),
            Box::new(Shared(fake.clone())),
        ));
        let handles: Vec<_> = (0..8)
            .map(|_| {
                let store = store.clone();
                std::thread::spawn(move || store.fetch("A000110").unwrap())
            })
            .collect();
        for h in handles {
            assert_eq!(parse_bfile(&h.join().unwrap()).unwrap().len(), 5);
        }
        assert_eq!(fake.calls.load(Ordering::SeqCst), 1);
        let names: Vec<_> = fs::read_dir(dir.path())
            .unwrap()
            .map(|e| e.unwrap().file_name())
            .collect();
        assert_eq!(names, vec![std::ffi::OsString::from("b000110.txt")]);
    }

    #[test]
    fn online_failures_are_distinct_and_not_cached() {
        let dir = tempfile::tempdir().unwrap();
        let store = BFileStore::online(
            dir.path(),
            Box::new(Fake {
                calls: AtomicUsize::new(0),
                reply: Err(404),
            }),
        );
        assert!(matches!(
            store.fetch("A000110"),
            Err(Error::HttpStatus { status: 404, .. })
        ));
        let store = BFileStore::online(
            dir.path(),
            Box::new(Fake {
                calls: AtomicUsize::new(0),
                reply: Err(0),
            }),
        );
        assert!(matches!(store.fetch("A000110"), Err(Error::Network { .. })));
        let store = BFileStore::online(
            dir.path(),
            Box::new(Fake {
                calls: AtomicUsize::new(0),
                reply: Ok(b"<html>"),
            }),
        );
        assert!(matches!(store.fetch("A000110"), Err(Error::Parse { .. })));
        assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 0);
    }
}
