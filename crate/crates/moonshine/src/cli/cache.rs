//! Content-addressed disk cache for long computations.
//!
//! - Keys are sha256 digests of a kind tag, the input bytes and the parameters.
//! - Values are JSON files named `<key>.json` in the cache directory.
//! - Unreadable or corrupt entries are treated as misses.

use std::fs;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::moonshine_data::sha256_hex;

/// Environment variable overriding the cache directory.
pub const CACHE_ENV: &str = "MOONSHINE_CACHE_DIR";

/// A cache rooted at a directory.
#[derive(Clone, Debug)]
pub struct DiskCache {
    root: PathBuf,
}

impl DiskCache {
    /// Cache in `root` (created on first write).
    pub fn new(root: impl Into<PathBuf>) -> Self {
        DiskCache { root: root.into() }
    }

    /// Cache in `$MOONSHINE_CACHE_DIR`, or `moonshine-cache` under the temp directory.
    pub fn from_env() -> Self {
        match std::env::var_os(CACHE_ENV) {
            Some(dir) => Self::new(dir),
            None => Self::new(std::env::temp_dir().join("moonshine-cache")),
        }
    }

    /// Root directory.
    pub fn root(&self) -> &Path {
        &self.root
    }

    /// Digest of a kind tag, input bytes and parameters.
    pub fn key(kind: &str, inputs: &[&[u8]], params: &str) -> String {
        let mut buf = Vec::new();
        for part in std::iter::once(kind.as_bytes())
            .chain(inputs.iter().copied())
            .chain(std::iter::once(params.as_bytes()))
        {
            buf.extend_from_slice(&(part.len() as u64).to_le_bytes());
            buf.extend_from_slice(part);
        }
        sha256_hex(&buf)
    }

    fn path(&self, key: &str) -> PathBuf {
        self.root.join(format!("{key}.json"))
    }

    /// Reads a cached value.
    pub fn get<T: DeserializeOwned>(&self, key: &str) -> Option<T> {
        let text = fs::read_to_string(self.path(key)).ok()?;
        serde_json::from_str(&text).ok()
    }

    /// Writes a value; failures are ignored (the cache is an optimisation).
    pub fn put<T: Serialize>(&self, key: &str, value: &T) {
        if fs::create_dir_all(&self.root).is_err() {
            return;
        }
        if let Ok(text) = serde_json::to_string(value) {
            let tmp = self.root.join(format!("{key}.tmp{}", std::process::id()));
            if fs::write(&tmp, text).is_ok() {
                let _ = fs::rename(&tmp, self.path(key));
            }
        }
    }

    /// Returns the cached value or computes and stores it.
    pub fn get_or_compute<T, E>(&self, key: &str, f: impl FnOnce() -> Result<T, E>) -> Result<T, E>
    where
        T: Serialize + DeserializeOwned,
    {
        if let Some(v) = self.get(key) {
            return Ok(v);
        }
        let v = f()?;
        self.put(key, &v);
        Ok(v)
    }
}
