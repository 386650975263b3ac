//! Append-only verification cache: one self-contained JSON record per
//! line, keyed by (n, t, d, schema_version). Sweeps skip points already
//! recorded at the current schema version, which makes long sweeps
//! resumable. The path defaults to `./cy-cache.jsonl` and can be moved
//! with the `NAKAYAMA_CY_CACHE` environment variable.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use nakayama_cy::verify::PointOutcome;

use crate::output::SCHEMA_VERSION;

#[derive(Serialize, Deserialize, Clone, PartialEq, Debug)]
pub struct CacheRecord {
    pub schema_version: String,
    pub n: u32,
    pub t: u32,
    pub d: u64,
    pub shift_order: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub category_cydim: Option<u64>,
    pub orbit_count: usize,
    pub hom_checked: bool,
    pub ok: bool,
    pub discrepancies: Vec<String>,
}

impl CacheRecord {
    pub fn from_outcome(outcome: &PointOutcome) -> Self {
        Self {
            schema_version: SCHEMA_VERSION.to_string(),
            n: outcome.n,
            t: outcome.t,
            d: outcome.d,
            shift_order: outcome.shift_order,
            category_cydim: outcome.category_cydim,
            orbit_count: outcome.orbit_count,
            hom_checked: outcome.hom_checked,
            ok: outcome.ok(),
            discrepancies: outcome.discrepancies.clone(),
        }
    }

    pub fn key(&self) -> (u32, u32, u64) {
        (self.n, self.t, self.d)
    }
}

pub fn cache_path() -> PathBuf {
    std::env::var_os("NAKAYAMA_CY_CACHE")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from("cy-cache.jsonl"))
}

/// Loads the records at the current schema version; unparsable lines and
/// foreign versions are ignored.
pub fn load(path: &Path) -> HashMap<(u32, u32, u64), CacheRecord> {
    let mut records = HashMap::new();
    let Ok(file) = File::open(path) else {
        return records;
    };
    for line in BufReader::new(file).lines().map_while(Result::ok) {
        if let Ok(record) = serde_json::from_str::<CacheRecord>(&line) {
            if record.schema_version == SCHEMA_VERSION {
                records.insert(record.key(), record);
            }
        }
    }
    records
}

/// Serialized single-writer append handle; safe to share across the
/// sweep's worker threads.
pub struct CacheWriter {
    inner: Mutex<BufWriter<File>>,
}

impl CacheWriter {
    pub fn append_to(path: &Path) -> std::io::Result<Self> {
        let file = OpenOptions::new().create(true).append(true).open(path)?;
        Ok(Self {
            inner: Mutex::new(BufWriter::new(file)),
        })
    }

    pub fn append(&self, record: &CacheRecord) {
        let line = serde_json::to_string(record).expect("cache records serialize");
        let mut writer = self.inner.lock().expect("cache writer lock");
        writeln!(writer, "{line}").expect("cache write");
    }

    pub fn flush(&self) {
        self.inner
            .lock()
            .expect("cache writer lock")
            .flush()
            .expect("cache flush");
    }
}
