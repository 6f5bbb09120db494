//! On-disk memo of family members, one JSON object keyed by
//! `"(alpha,beta,n,normalization)"`. Problems with the file are reported on
//! stderr and never change a command's result.

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;

use jsob_core::algebra::ScaledPolynomial;
use jsob_core::jacobi::{jacobi_polynomial, JacobiParams, Normalization};
use jsob_core::Result;

use crate::record::PolynomialRecord;

pub struct PolyCache {
    path: Option<PathBuf>,
    entries: BTreeMap<String, PolynomialRecord>,
    dirty: bool,
}

impl PolyCache {
    pub fn disabled() -> Self {
        Self { path: None, entries: BTreeMap::new(), dirty: false }
    }

    pub fn open(path: PathBuf) -> Self {
        let entries = match fs::read_to_string(&path) {
            Ok(text) => match serde_json::from_str::<BTreeMap<String, PolynomialRecord>>(&text) {
                Ok(entries) => entries,
                Err(e) => {
                    eprintln!("warning: discarding corrupt cache {}: {e}", path.display());
                    BTreeMap::new()
                }
            },
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => BTreeMap::new(),
            Err(e) => {
                eprintln!("warning: cannot read cache {}: {e}", path.display());
                BTreeMap::new()
            }
        };
        Self { path: Some(path), entries, dirty: false }
    }

    fn cached(&self, key: &str) -> Option<ScaledPolynomial> {
        let record = self.entries.get(key)?;
        if record.cache_key() != key {
            eprintln!("warning: ignoring cache entry {key} whose fields disagree with its key");
            return None;
        }
        match record.to_scaled() {
            Ok(value) => Some(value),
            Err(e) => {
                eprintln!("warning: ignoring unreadable cache entry {key}: {e}");
                None
            }
        }
    }

    /// The requested member, from the cache when possible.
    pub fn member(&mut self, n: usize, params: &JacobiParams, norm: Normalization) -> Result<ScaledPolynomial> {
        let key = PolynomialRecord::key(params, n, norm);
        if self.path.is_some() {
            if let Some(value) = self.cached(&key) {
                return Ok(value);
            }
        }
        let value = jacobi_polynomial(n, params, norm)?;
        if self.path.is_some() {
            self.entries.insert(key, PolynomialRecord::new(params, n, norm, &value));
            self.dirty = true;
        }
        Ok(value)
    }

    pub fn save(&mut self) {
        let Some(path) = &self.path else { return };
        if !self.dirty {
            return;
        }
        let text = serde_json::to_string_pretty(&self.entries).expect("records serialize");
        let tmp = path.with_extension("tmp");
        if let Err(e) = fs::write(&tmp, text).and_then(|_| fs::rename(&tmp, path)) {
            eprintln!("warning: cannot write cache {}: {e}", path.display());
        } else {
            self.dirty = false;
        }
    }
}
