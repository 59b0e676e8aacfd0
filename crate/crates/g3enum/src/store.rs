//! Write-once memo store with an optional on-disk cache.
//!
//! The store maps [`InvariantKey`]s to [`ExactScalar`]s. A key, once bound,
//! may never be rebound to a different value; a conflicting rebind panics,
//! because it means two derivations of the same invariant disagreed.
//!
//! The cache file holds one record per line, `key<TAB>numerator/denominator`,
//! UTF-8, sorted by key string on dump, so dumps are diffable, mergeable and
//! language-neutral. The `G3ENUM_CACHE` environment variable may point at a
//! cache path; by default the store is in-memory only.

use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::RwLock;

use crate::error::{Error, Result};
use crate::key::InvariantKey;
use crate::scalar::ExactScalar;

/// Environment variable naming the default cache path.
pub const CACHE_ENV_VAR: &str = "G3ENUM_CACHE";

#[derive(Debug, Default)]
pub struct MemoStore {
    map: RwLock<HashMap<InvariantKey, ExactScalar>>,
    path: Option<PathBuf>,
    hits: AtomicU64,
}

impl MemoStore {
    /// In-memory store with no persistence.
    pub fn new() -> Self {
        MemoStore::default()
    }

    /// Store persisted at `path`; an existing cache file is loaded eagerly.
    pub fn with_path(path: impl Into<PathBuf>) -> Result<Self> {
        let path = path.into();
        let store = MemoStore {
            path: Some(path.clone()),
            ..MemoStore::default()
        };
        if path.exists() {
            store.load_from(&path)?;
        }
        Ok(store)
    }

    /// Store configured from `G3ENUM_CACHE` if set, in-memory otherwise.
    pub fn from_env() -> Result<Self> {
        match std::env::var_os(CACHE_ENV_VAR) {
            Some(path) => Self::with_path(PathBuf::from(path)),
            None => Ok(Self::new()),
        }
    }

    pub fn len(&self) -> usize {
        self.map.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Number of lookups answered from memory so far.
    pub fn cache_hits(&self) -> u64 {
        self.hits.load(Ordering::Relaxed)
    }

    pub fn get(&self, key: &InvariantKey) -> Option<ExactScalar> {
        let found = self.map.read().unwrap().get(key).cloned();
        if found.is_some() {
            self.hits.fetch_add(1, Ordering::Relaxed);
        }
        found
    }

    /// Binds `key` to `value` and returns the stored value.
    ///
    /// Binding the same value twice is a no-op; binding a different value to
    /// an existing key panics.
    pub fn bind(&self, key: InvariantKey, value: ExactScalar) -> ExactScalar {
        let mut map = self.map.write().unwrap();
        if let Some(existing) = map.get(&key) {
            assert_eq!(
                *existing, value,
                "memo conflict for {key}: {existing} already bound, got {value}",
            );
            return existing.clone();
        }
        map.insert(key, value.clone());
        value
    }

    /// All bound keys, unordered.
    pub fn keys(&self) -> Vec<InvariantKey> {
        self.map.read().unwrap().keys().cloned().collect()
    }

    /// Writes the cache to the configured path.
    pub fn dump(&self) -> Result<()> {
        match &self.path {
            Some(path) => self.dump_to(path),
            None => Err(Error::Validation(
                "memo store has no cache path configured".into(),
            )),
        }
    }

    /// Writes one `key<TAB>numerator/denominator` line per record, sorted by
    /// key string.
    pub fn dump_to(&self, path: impl AsRef<Path>) -> Result<()> {
        let mut lines: Vec<String> = {
            let map = self.map.read().unwrap();
            map.iter()
                .map(|(k, v)| format!("{k}\t{}", v.cache_repr()))
                .collect()
        };
        lines.sort_unstable();
        let mut out = String::with_capacity(lines.iter().map(|l| l.len() + 1).sum());
        for line in lines {
            out.push_str(&line);
            out.push('\n');
        }
        let mut file = fs::File::create(path)?;
        file.write_all(out.as_bytes())?;
        Ok(())
    }

    /// Loads records from a cache file into this store; returns the record
    /// count. Values must agree with anything already bound.
    pub fn load_from(&self, path: impl AsRef<Path>) -> Result<usize> {
        let text = fs::read_to_string(path)?;
        let mut count = 0;
        for (lineno, line) in text.lines().enumerate() {
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('\t')
                .ok_or_else(|| Error::Parse(format!("cache line {}: missing tab", lineno + 1)))?;
            let key: InvariantKey = key.parse()?;
            let value: ExactScalar = value.parse()?;
            self.bind(key, value);
            count += 1;
        }
        Ok(count)
    }
}
