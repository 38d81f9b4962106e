//! On-disk cache of C and D matrices keyed by `(N, bound, version)`.

use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::interp::{CMatrix, DMatrix, MatrixJson, TriMatrix};
use crate::partitions::Partition;

#[derive(Serialize, Deserialize)]
struct Entry {
    version: String,
    c: MatrixJson,
    d: MatrixJson,
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    pub fn new(dir: Option<PathBuf>) -> Cache {
        Cache { dir }
    }

    pub fn disabled() -> Cache {
        Cache { dir: None }
    }

    fn path(&self, n: usize, bound: &Partition) -> Option<PathBuf> {
        let parts: Vec<String> = bound.parts().iter().map(|p| p.to_string()).collect();
        let name = format!("matrices-N{n}-b{}-v{}.json", parts.join("_"), env!("CARGO_PKG_VERSION"));
        self.dir.as_ref().map(|d| d.join(name))
    }

    fn read(&self, n: usize, bound: &Partition) -> Option<(CMatrix, DMatrix)> {
        let text = std::fs::read_to_string(self.path(n, bound)?).ok()?;
        let e: Entry = serde_json::from_str(&text).ok()?;
        if e.version != env!("CARGO_PKG_VERSION") || e.c.n != n || e.c.bound != *bound {
            return None;
        }
        let c = DMatrix::try_from(&e.c).ok()?;
        let c = TriMatrix {
            n: c.n,
            bound: c.bound,
            entries: c.entries.into_iter().map(|(k, v)| v.to_laurent().ok().map(|x| (k, x))).collect::<Option<_>>()?,
        };
        let d = DMatrix::try_from(&e.d).ok()?;
        Some((c, d))
    }

    /// C and D over `bound`, read from or written to the cache directory.
    /// Unreadable entries are recomputed and overwritten.
    pub fn matrices(&self, n: usize, bound: &Partition) -> Result<(CMatrix, DMatrix)> {
        if let Some(hit) = self.read(n, bound) {
            return Ok(hit);
        }
        let c = CMatrix::build(n, bound)?;
        let d = DMatrix::build_okounkov(n, bound)?;
        if let Some(p) = self.path(n, bound) {
            if let Some(dir) = p.parent() {
                std::fs::create_dir_all(dir)?;
            }
            let e = Entry {
                version: env!("CARGO_PKG_VERSION").to_string(),
                c: MatrixJson::from(&c.to_rational()),
                d: MatrixJson::from(&d),
            };
            std::fs::write(&p, serde_json::to_string(&e)?)?;
        }
        Ok((c, d))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_through_disk() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(Some(dir.path().to_path_buf()));
        let b = part!(2, 1);
        let fresh = cache.matrices(2, &b).unwrap();
        assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
        let hit = cache.read(2, &b).unwrap();
        assert_eq!(hit, fresh);
        std::fs::write(cache.path(2, &b).unwrap(), "garbage").unwrap();
        assert_eq!(cache.matrices(2, &b).unwrap(), fresh);
    }
}
