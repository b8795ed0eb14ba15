//! Append-only on-disk memo cache.
//!
//! ```text
//! symchar-mn-cache v1
//! <shape>;<rest>=<value>#<fnv1a-64 hex of "<shape>;<rest>=<value>">
//! ```
//!
//! A file whose header or any record fails to parse or checksum is dropped
//! as a whole; nothing from it is loaded.

use std::collections::HashSet;
use std::fs::{self, OpenOptions};
use std::io::{self, Write};
use std::path::Path;

use num_bigint::BigInt;

use super::engine::{CharacterEngine, MemoKey};
use crate::error::Result;
use crate::partition::{parse_partition, Partition};

pub const CACHE_HEADER: &str = "symchar-mn-cache v1";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CacheLoad {
    /// No file at the path.
    Missing,
    /// Entries loaded into the engine.
    Loaded(usize),
    /// The file was rejected; the reason names the first bad line.
    Discarded(String),
}

fn fnv1a(data: &str) -> u64 {
    data.bytes().fold(0xcbf29ce484222325u64, |h, b| {
        (h ^ b as u64).wrapping_mul(0x100000001b3)
    })
}

fn render(key: &MemoKey, value: &BigInt) -> String {
    let rest = Partition::from_padded(key.rest.clone());
    let body = format!("{};{}={}", key.shape, rest, value);
    format!("{body}#{:016x}", fnv1a(&body))
}

fn parse_record(line: &str) -> Option<(MemoKey, BigInt)> {
    let (body, sum) = line.rsplit_once('#')?;
    if u64::from_str_radix(sum, 16).ok()? != fnv1a(body) {
        return None;
    }
    let (key, value) = body.split_once('=')?;
    let (shape, rest) = key.split_once(';')?;
    let shape = parse_partition(shape).ok()?;
    let rest = parse_partition(rest).ok()?;
    if shape.size() != rest.size() {
        return None;
    }
    let value: BigInt = value.parse().ok()?;
    Some((
        MemoKey {
            shape,
            rest: rest.parts().to_vec(),
        },
        value,
    ))
}

/// Parsed records, or the reason the file was rejected.
type Parsed = std::result::Result<Vec<(MemoKey, BigInt)>, String>;

fn read_file(path: &Path) -> io::Result<Option<Parsed>> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(None),
        Err(e) if e.kind() == io::ErrorKind::InvalidData => {
            return Ok(Some(Err("file is not utf-8".into())))
        }
        Err(e) => return Err(e),
    };
    let mut lines = text.lines();
    if lines.next() != Some(CACHE_HEADER) {
        return Ok(Some(Err("missing or unknown header".into())));
    }
    let mut records = Vec::new();
    for (idx, line) in lines.enumerate() {
        match parse_record(line) {
            Some(rec) => records.push(rec),
            None => return Ok(Some(Err(format!("bad record on line {}", idx + 2)))),
        }
    }
    Ok(Some(Ok(records)))
}

impl CharacterEngine {
    pub fn load_cache(&self, path: &Path) -> Result<CacheLoad> {
        Ok(match read_file(path)? {
            None => CacheLoad::Missing,
            Some(Err(reason)) => CacheLoad::Discarded(reason),
            Some(Ok(records)) => {
                let count = records.len();
                for (key, value) in records {
                    self.seed(key, value);
                }
                CacheLoad::Loaded(count)
            }
        })
    }

    /// Appends every memo entry not yet on disk. A missing or rejected file
    /// is rewritten from scratch. Returns the number of records written.
    pub fn save_cache(&self, path: &Path) -> Result<usize> {
        let existing = read_file(path)?;
        let (mut file, known): (fs::File, HashSet<MemoKey>) = match existing {
            Some(Ok(records)) => (
                OpenOptions::new().append(true).open(path)?,
                records.into_iter().map(|(k, _)| k).collect(),
            ),
            _ => {
                let mut f = fs::File::create(path)?;
                writeln!(f, "{CACHE_HEADER}")?;
                (f, HashSet::new())
            }
        };
        let mut entries = self.cache_entries();
        entries.sort_by(|a, b| (&a.0.shape, &a.0.rest).cmp(&(&b.0.shape, &b.0.rest)));
        let mut buf = String::new();
        let mut written = 0;
        for (key, value) in entries.iter().filter(|(k, _)| !known.contains(k)) {
            buf.push_str(&render(key, value));
            buf.push('\n');
            written += 1;
        }
        file.write_all(buf.as_bytes())?;
        Ok(written)
    }
}
