//! On-disk cache of root databases, one JSON file per key.

use std::fs;
use std::path::{Path, PathBuf};

use chebknot_core::{RootDatabase, RootMode, VERSION};

use crate::CliError;

pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    pub fn new(dir: Option<PathBuf>) -> Self {
        Cache { dir }
    }

    // the adaptive start precision changes interval widths, so it is part
    // of the key whenever it differs from the default
    fn path(&self, a: u64, b: u64, c: u64, mode: RootMode, start: Option<u64>) -> Option<PathBuf> {
        let dir = self.dir.as_ref()?;
        let mode_name = match mode {
            RootMode::Adaptive => "adaptive",
            RootMode::Certified => "certified",
        };
        let prec = match (mode, start) {
            (RootMode::Adaptive, Some(p)) => format!("-p{p}"),
            _ => String::new(),
        };
        Some(dir.join(format!(
            "roots-{a}-{b}-{c}-{mode_name}{prec}-v{VERSION}.json"
        )))
    }

    pub fn roots(
        &self,
        a: u64,
        b: u64,
        c: u64,
        mode: RootMode,
        start: Option<u64>,
    ) -> Result<RootDatabase, CliError> {
        let path = self.path(a, b, c, mode, start);
        if let Some(p) = &path {
            if let Some(db) = load(p) {
                return Ok(db);
            }
        }
        let db = chebknot_core::roots::isolate_roots_from(a, b, c, mode, start.unwrap_or(64))?;
        if let Some(p) = &path {
            store(p, &db)?;
        }
        Ok(db)
    }
}

// unreadable or stale entries are recomputed
fn load(p: &Path) -> Option<RootDatabase> {
    let text = fs::read_to_string(p).ok()?;
    serde_json::from_str(&text).ok()
}

fn store(p: &Path, db: &RootDatabase) -> Result<(), CliError> {
    if let Some(parent) = p.parent() {
        fs::create_dir_all(parent)?;
    }
    let tmp = p.with_extension("json.tmp");
    fs::write(
        &tmp,
        serde_json::to_string(db).expect("database serializes"),
    )?;
    fs::rename(&tmp, p)?;
    Ok(())
}
