//! Append-only JSON-lines store of computed cup-lengths.
//!
//! Every record is written with a single `write` of one full line, so
//! concurrent appenders never interleave partial records. Readers take the
//! newest entry for a key whose witness still verifies.

use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use log::warn;
use serde::{Deserialize, Serialize};

use crate::cuplength::{verify_witness, Method, Witness, WitnessRecord, ZclResult};
use crate::error::{Error, Result};
use crate::ring::RingSpec;

/// Bumped whenever the search or the nonzero criterion changes; older entries are ignored.
pub const ENGINE_VERSION: &str = concat!("zcl-core/", env!("CARGO_PKG_VERSION"), "+search1");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub m: u32,
    pub s: u32,
    pub zcl: u32,
    pub method: Method,
    pub witness: WitnessRecord,
    pub engine_version: String,
    /// Milliseconds since the Unix epoch.
    pub timestamp: u64,
}

impl CacheEntry {
    pub fn from_result(result: &ZclResult, engine_version: &str) -> Self {
        CacheEntry {
            m: result.m,
            s: result.s,
            zcl: result.value,
            method: result.method,
            witness: result.witness.to_record(),
            engine_version: engine_version.to_string(),
            timestamp: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_millis() as u64)
                .unwrap_or(0),
        }
    }

    /// Rebuilds the result after re-verifying the stored witness in the ring.
    pub fn verified_result(&self, basis_limit: u64) -> Result<ZclResult> {
        let spec = RingSpec::with_limit(self.m, self.s, basis_limit)?;
        let witness = Witness::from_record(spec, &self.witness)?;
        if witness.length() != self.zcl {
            return Err(Error::Defect(format!(
                "cached zcl {} disagrees with witness length {}",
                self.zcl,
                witness.length()
            )));
        }
        if !verify_witness(&witness)? {
            return Err(Error::Defect(format!(
                "cached witness for m={}, s={} does not verify",
                self.m, self.s
            )));
        }
        Ok(ZclResult {
            m: self.m,
            s: self.s,
            value: self.zcl,
            method: self.method,
            g: self.s * self.m - self.zcl,
            witness,
        })
    }
}

#[derive(Debug, Clone)]
pub struct Cache {
    path: PathBuf,
    engine_version: String,
    basis_limit: u64,
}

impl Cache {
    pub fn new(path: impl Into<PathBuf>) -> Self {
        Cache {
            path: path.into(),
            engine_version: ENGINE_VERSION.to_string(),
            basis_limit: crate::ring::DEFAULT_BASIS_LIMIT,
        }
    }

    pub fn with_engine_version(mut self, version: impl Into<String>) -> Self {
        self.engine_version = version.into();
        self
    }

    pub fn with_basis_limit(mut self, limit: u64) -> Self {
        self.basis_limit = limit;
        self
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn put(&self, result: &ZclResult) -> Result<()> {
        let entry = CacheEntry::from_result(result, &self.engine_version);
        let mut line = serde_json::to_string(&entry)?;
        line.push('\n');
        let mut file = OpenOptions::new().create(true).append(true).open(&self.path)?;
        file.write_all(line.as_bytes())?;
        Ok(())
    }

    /// All well-formed entries, in file order. Malformed lines are skipped with a warning.
    pub fn entries(&self) -> Result<Vec<CacheEntry>> {
        let file = match File::open(&self.path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
            Err(e) => return Err(e.into()),
        };
        let mut out = Vec::new();
        for (n, line) in BufReader::new(file).lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            match serde_json::from_str::<CacheEntry>(&line) {
                Ok(entry) => out.push(entry),
                Err(e) => warn!(
                    "{}:{}: skipping corrupt cache line: {e}",
                    self.path.display(),
                    n + 1
                ),
            }
        }
        Ok(out)
    }

    /// Newest verified entry for `(m, s)` under this engine version.
    pub fn get(&self, m: u32, s: u32) -> Result<Option<ZclResult>> {
        let mut candidates: Vec<(usize, CacheEntry)> = self
            .entries()?
            .into_iter()
            .enumerate()
            .filter(|(_, e)| e.m == m && e.s == s && e.engine_version == self.engine_version)
            .collect();
        candidates.sort_by_key(|(n, e)| std::cmp::Reverse((e.timestamp, *n)));
        for (_, entry) in candidates {
            match entry.verified_result(self.basis_limit) {
                Ok(r) => return Ok(Some(r)),
                Err(e) => warn!("ignoring cache entry for m={m}, s={s}: {e}"),
            }
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cuplength::zcl_exact;

    #[test]
    fn put_then_get() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path().join("zcl.jsonl"));
        assert_eq!(cache.get(5, 3).unwrap(), None);
        let r = zcl_exact(5, 3).unwrap();
        cache.put(&r).unwrap();
        assert_eq!(cache.get(5, 3).unwrap(), Some(r));
        assert_eq!(cache.get(5, 4).unwrap(), None);
    }

    #[test]
    fn rejects_tampered_witness() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("zcl.jsonl");
        let cache = Cache::new(&path);
        let mut entry = CacheEntry::from_result(&zcl_exact(2, 3).unwrap(), ENGINE_VERSION);
        entry.witness.factors[0][2] = 5;
        entry.zcl = 8;
        std::fs::write(&path, serde_json::to_string(&entry).unwrap() + "\n").unwrap();
        assert_eq!(cache.get(2, 3).unwrap(), None);
    }

    #[test]
    fn version_mismatch_and_corrupt_lines() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("zcl.jsonl");
        let old = Cache::new(&path).with_engine_version("zcl-core/0.0.0");
        old.put(&zcl_exact(3, 3).unwrap()).unwrap();
        let cache = Cache::new(&path);
        assert_eq!(cache.get(3, 3).unwrap(), None);

        let mut f = OpenOptions::new().append(true).open(&path).unwrap();
        writeln!(f, "{{not json").unwrap();
        drop(f);
        cache.put(&zcl_exact(3, 3).unwrap()).unwrap();
        assert_eq!(cache.entries().unwrap().len(), 2);
        assert_eq!(cache.get(3, 3).unwrap().unwrap().value, 6);
    }
}
