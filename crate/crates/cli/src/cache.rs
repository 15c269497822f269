//! On-disk result cache: a plain directory of `<key>.json` files, one
//! per (version, command, parameters) triple, each holding the report's
//! results subtree. Trivially inspectable; corrupt entries are
//! recomputed and overwritten.

use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use serde_json::Value;
use sha2::{Digest, Sha256};

pub fn key(version: &str, command: &str, params: &Value) -> String {
    let mut hasher = Sha256::new();
    hasher.update(version.as_bytes());
    hasher.update(b"|");
    hasher.update(command.as_bytes());
    hasher.update(b"|");
    // compact serialization with sorted keys: stable across runs
    hasher.update(params.to_string().as_bytes());
    let digest = hasher.finalize();
    let mut hex = String::with_capacity(digest.len() * 2);
    for byte in digest {
        let _ = write!(hex, "{byte:02x}");
    }
    hex
}

fn entry_path(dir: &Path, key: &str) -> PathBuf {
    dir.join(format!("{key}.json"))
}

pub fn load(dir: &Path, key: &str) -> Option<Value> {
    let bytes = fs::read(entry_path(dir, key)).ok()?;
    serde_json::from_slice(&bytes).ok()
}

pub fn store(dir: &Path, key: &str, results: &Value) -> io::Result<()> {
    fs::create_dir_all(dir)?;
    fs::write(entry_path(dir, key), results.to_string())
}
