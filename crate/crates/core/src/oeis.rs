//! OEIS b-file ingestion and comparison of computed sequences against them.
//!
//! A b-file is plain text: optional `#` comment lines and data lines
//! `index value`, one per line, with consecutive indices.

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Duration;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::kernels::SubpowerTable;
use crate::transforms::IntSequence;

/// `A` followed by six digits, e.g. `A131689`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ANumber(String);

impl ANumber {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// `b131689.txt`
    pub fn bfile_name(&self) -> String {
        format!("b{}.txt", &self.0[1..])
    }

    pub fn bfile_url(&self) -> String {
        format!("https://oeis.org/{}/{}", self.0, self.bfile_name())
    }
}

impl FromStr for ANumber {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let digits = s.strip_prefix('A').unwrap_or("");
        if digits.len() == 6 && digits.bytes().all(|b| b.is_ascii_digit()) {
            Ok(ANumber(s.to_string()))
        } else {
            Err(Error::MalformedANumber(s.to_string()))
        }
    }
}

impl fmt::Display for ANumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub const TRIANGLE: &str = "A131689";
pub const FUBINI: &str = "A000670";

const BUNDLED: &[(&str, &str)] = &[
    (TRIANGLE, include_str!("../data/b131689.txt")),
    (FUBINI, include_str!("../data/b000670.txt")),
];

/// Parsed b-file: `(index, value)` pairs with consecutive indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BFileRecord {
    pub source_id: Option<ANumber>,
    pub entries: Vec<(i64, BigInt)>,
}

impl BFileRecord {
    pub fn first_index(&self) -> Option<i64> {
        self.entries.first().map(|(i, _)| *i)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Parses b-file text. The source id is taken from the first A-number that
/// starts a comment line, if any.
pub fn parse_bfile(text: &[u8]) -> Result<BFileRecord> {
    let text = std::str::from_utf8(text).map_err(|e| Error::Parse {
        line: 0,
        message: format!("not UTF-8: {e}"),
    })?;
    let mut source_id = None;
    let mut entries: Vec<(i64, BigInt)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if source_id.is_none() {
                source_id = comment
                    .split_whitespace()
                    .next()
                    .and_then(|tok| tok.parse::<ANumber>().ok());
            }
            continue;
        }
        let mut tokens = line.split_whitespace();
        let (Some(index), Some(value), None) = (tokens.next(), tokens.next(), tokens.next()) else {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected `index value`, got {line:?}"),
            });
        };
        let index: i64 = index.parse().map_err(|_| Error::Parse {
            line: line_no,
            message: format!("index is not an integer: {index:?}"),
        })?;
        let value = BigInt::from_str(value).map_err(|_| Error::Parse {
            line: line_no,
            message: format!("value is not an integer: {value:?}"),
        })?;
        if let Some((prev, _)) = entries.last() {
            if index != prev + 1 {
                return Err(Error::NonContiguous {
                    line: line_no,
                    expected: prev + 1,
                    found: index,
                });
            }
        }
        entries.push((index, value));
    }
    Ok(BFileRecord { source_id, entries })
}

/// The triangle read by rows: row `m` contributes `n = 0..=m`.
pub fn flatten_triangle(table: &SubpowerTable) -> IntSequence {
    IntSequence::from_zero(table.rows().flat_map(|row| row.iter().cloned()).collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    /// Index in the b-file's numbering.
    pub index: i64,
    pub expected: BigInt,
    pub actual: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparisonReport {
    pub compared: usize,
    pub matched: usize,
    pub first_mismatch: Option<Mismatch>,
}

impl ComparisonReport {
    pub fn is_match(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Compares `seq` with `reference` position by position.
///
/// Offsets differ between OEIS entries, so the b-file's first index is
/// taken as authoritative: `seq.values[i]` is compared with the `i`-th
/// entry whatever `seq.offset` says. Only the common prefix is compared.
pub fn compare(seq: &IntSequence, reference: &BFileRecord) -> Result<ComparisonReport> {
    let compared = seq.values.len().min(reference.entries.len());
    if compared == 0 {
        return Err(Error::EmptyOverlap);
    }
    let mut matched = 0;
    let mut first_mismatch = None;
    for (actual, (index, expected)) in seq.values.iter().zip(&reference.entries) {
        if actual == expected {
            matched += 1;
        } else if first_mismatch.is_none() {
            first_mismatch = Some(Mismatch {
                index: *index,
                expected: expected.clone(),
                actual: actual.clone(),
            });
        }
    }
    Ok(ComparisonReport {
        compared,
        matched,
        first_mismatch,
    })
}

/// Where [`fetch_bfile`] looks for and stores b-files.
#[derive(Clone, Debug)]
pub struct FetchOptions {
    /// Allow an HTTP request to oeis.org.
    pub network: bool,
    pub cache_dir: PathBuf,
    pub timeout: Duration,
}

/// Environment variable naming the b-file cache directory.
pub const CACHE_DIR_ENV: &str = "SUBPOWER_CACHE_DIR";

impl Default for FetchOptions {
    fn default() -> Self {
        FetchOptions {
            network: false,
            cache_dir: default_cache_dir(),
            timeout: Duration::from_secs(30),
        }
    }
}

pub fn default_cache_dir() -> PathBuf {
    std::env::var_os(CACHE_DIR_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(".oeis-cache"))
}

/// The snapshot shipped with the crate, if there is one.
pub fn bundled_bfile(id: &ANumber) -> Option<&'static [u8]> {
    BUNDLED
        .iter()
        .find(|(name, _)| *name == id.as_str())
        .map(|(_, text)| text.as_bytes())
}

/// Returns the b-file for `id`.
///
/// With `network` set, downloads it and writes it to the cache (via a
/// temporary file and rename). Without it, reads the cache, falling back to
/// the bundled snapshot.
pub fn fetch_bfile(id: &ANumber, options: &FetchOptions) -> Result<Vec<u8>> {
    let cached = options.cache_dir.join(id.bfile_name());
    if options.network {
        let body = download(&id.bfile_url(), options.timeout)?;
        store_atomically(&options.cache_dir, &cached, &body)?;
        return Ok(body);
    }
    if cached.is_file() {
        return Ok(fs::read(&cached)?);
    }
    bundled_bfile(id)
        .map(<[u8]>::to_vec)
        .ok_or_else(|| Error::SnapshotMissing(id.to_string()))
}

fn store_atomically(dir: &Path, target: &Path, body: &[u8]) -> Result<()> {
    fs::create_dir_all(dir)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(body)?;
    tmp.persist(target).map_err(|e| Error::Io(e.error))?;
    Ok(())
}

#[cfg(feature = "fetch")]
fn download(url: &str, timeout: Duration) -> Result<Vec<u8>> {
    let agent: ureq::Agent = ureq::Agent::config_builder()
        .timeout_global(Some(timeout))
        .build()
        .into();
    let mut response = agent.get(url).call().map_err(|e| Error::Network(e.to_string()))?;
    response
        .body_mut()
        .read_to_vec()
        .map_err(|e| Error::Network(e.to_string()))
}

#[cfg(not(feature = "fetch"))]
fn download(url: &str, _timeout: Duration) -> Result<Vec<u8>> {
    Err(Error::Network(format!(
        "built without the `fetch` feature; cannot download {url}"
    )))
}
