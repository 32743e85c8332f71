//! Content-addressed, versioned on-disk cache.
//!
//! Layout under the root directory:
//!
//! ```text
//! manifest.json            {"schema": 1, "version": <u32>, "hash": "sha256"}
//! ab/abcdef….json          {"version", "key", "checksum", "value"}
//! ```
//!
//! The file name is the SHA-256 of the version and the key string.  Entries
//! are written to a temporary file in the same directory and renamed into
//! place, so readers never observe a partial entry.  An entry whose version,
//! key or checksum does not match is treated as a miss.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::Result;

/// Bumped whenever a cached computation changes its output.
pub const CACHE_VERSION: u32 = 1;

const SCHEMA: u32 = 1;

#[derive(Debug, Serialize, Deserialize)]
struct Manifest {
    schema: u32,
    version: u32,
    hash: String,
}

#[derive(Debug, Serialize, Deserialize)]
struct Entry {
    version: u32,
    key: String,
    checksum: String,
    value: String,
}

#[derive(Debug, Clone)]
pub struct Cache {
    root: PathBuf,
    version: u32,
}

fn sha256_hex(parts: &[&[u8]]) -> String {
    let mut h = Sha256::new();
    for p in parts {
        h.update((p.len() as u64).to_le_bytes());
        h.update(p);
    }
    hex::encode(h.finalize())
}

impl Cache {
    pub fn open(root: impl AsRef<Path>) -> Result<Self> {
        Self::open_with_version(root, CACHE_VERSION)
    }

    pub fn open_with_version(root: impl AsRef<Path>, version: u32) -> Result<Self> {
        let root = root.as_ref().to_path_buf();
        fs::create_dir_all(&root)?;
        let cache = Self { root, version };
        let manifest = Manifest { schema: SCHEMA, version, hash: "sha256".into() };
        cache.publish(&cache.root.join("manifest.json"), &serde_json::to_vec_pretty(&manifest).expect("manifest serializes"))?;
        Ok(cache)
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    pub fn version(&self) -> u32 {
        self.version
    }

    fn entry_path(&self, key: &str) -> PathBuf {
        let digest = sha256_hex(&[&self.version.to_le_bytes(), key.as_bytes()]);
        self.root.join(&digest[..2]).join(format!("{digest}.json"))
    }

    fn publish(&self, path: &Path, bytes: &[u8]) -> Result<()> {
        let dir = path.parent().expect("entry paths have a parent");
        fs::create_dir_all(dir)?;
        let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
        tmp.write_all(bytes)?;
        tmp.as_file().sync_all()?;
        tmp.persist(path).map_err(|e| e.error)?;
        Ok(())
    }

    pub fn get(&self, key: &str) -> Option<String> {
        let bytes = fs::read(self.entry_path(key)).ok()?;
        let entry: Entry = serde_json::from_slice(&bytes).ok()?;
        let valid = entry.version == self.version
            && entry.key == key
            && entry.checksum == sha256_hex(&[entry.value.as_bytes()]);
        valid.then_some(entry.value)
    }

    pub fn put(&self, key: &str, value: &str) -> Result<()> {
        let entry = Entry {
            version: self.version,
            key: key.into(),
            checksum: sha256_hex(&[value.as_bytes()]),
            value: value.into(),
        };
        self.publish(&self.entry_path(key), &serde_json::to_vec(&entry).expect("entry serializes"))
    }

    pub fn get_json<T: DeserializeOwned>(&self, key: &str) -> Option<T> {
        serde_json::from_str(&self.get(key)?).ok()
    }

    pub fn put_json<T: Serialize>(&self, key: &str, value: &T) -> Result<()> {
        self.put(key, &serde_json::to_string(value).expect("cached values serialize"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let c = Cache::open(dir.path()).unwrap();
        assert_eq!(c.get("k"), None);
        c.put("k", "value ✓").unwrap();
        assert_eq!(c.get("k").as_deref(), Some("value ✓"));
        c.put("k", "other").unwrap();
        assert_eq!(c.get("k").as_deref(), Some("other"));
        assert!(dir.path().join("manifest.json").exists());
    }

    #[test]
    fn version_bump_misses() {
        let dir = tempfile::tempdir().unwrap();
        Cache::open_with_version(dir.path(), 1).unwrap().put("k", "v").unwrap();
        assert_eq!(Cache::open_with_version(dir.path(), 2).unwrap().get("k"), None);
        assert_eq!(Cache::open_with_version(dir.path(), 1).unwrap().get("k").as_deref(), Some("v"));
    }

    #[test]
    fn corruption_is_a_miss() {
        let dir = tempfile::tempdir().unwrap();
        let c = Cache::open(dir.path()).unwrap();
        c.put("k", "v").unwrap();
        let path = c.entry_path("k");
        let text = fs::read_to_string(&path).unwrap().replace("\"value\":\"v\"", "\"value\":\"w\"");
        fs::write(&path, text).unwrap();
        assert_eq!(c.get("k"), None);
        fs::write(&path, "{not json").unwrap();
        assert_eq!(c.get("k"), None);
    }
}
