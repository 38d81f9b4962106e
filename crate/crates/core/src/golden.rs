//! Printed reference values for `N = 2`, stored as `key = expression` lines
//! in the `golden/` directory and embedded at build time.

use std::path::Path;

use crate::error::{Error, Result};

pub const FILES: [&str; 5] = ["fpoly_n2.txt", "c_matrix_n2.txt", "d_matrix_n2.txt", "fig8_coeffs_n2.txt", "examples_n2.txt"];

const EMBEDDED: [&str; 5] = [
    include_str!("../golden/fpoly_n2.txt"),
    include_str!("../golden/c_matrix_n2.txt"),
    include_str!("../golden/d_matrix_n2.txt"),
    include_str!("../golden/fig8_coeffs_n2.txt"),
    include_str!("../golden/examples_n2.txt"),
];

#[derive(Clone, Debug, PartialEq)]
pub struct GoldenFile {
    pub name: String,
    pub entries: Vec<(String, String)>,
}

impl GoldenFile {
    pub fn parse(name: &str, text: &str) -> Result<GoldenFile> {
        let mut entries = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line
                .split_once(" = ")
                .ok_or_else(|| Error::Schema(format!("{name}:{}: expected `key = expression`", i + 1)))?;
            entries.push((k.trim().to_string(), v.trim().to_string()));
        }
        if entries.is_empty() {
            return Err(Error::Schema(format!("{name} has no entries")));
        }
        Ok(GoldenFile { name: name.to_string(), entries })
    }

    /// Splits keys of the form `inner|outer`.
    pub fn pairs(&self) -> Result<Vec<(String, String, String)>> {
        self.entries
            .iter()
            .map(|(k, v)| {
                let (a, b) = k.split_once('|').ok_or_else(|| Error::Schema(format!("{}: bad key {k:?}", self.name)))?;
                Ok((a.to_string(), b.to_string(), v.clone()))
            })
            .collect()
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Golden {
    pub fpoly: GoldenFile,
    pub c_matrix: GoldenFile,
    pub d_matrix: GoldenFile,
    pub fig8: GoldenFile,
    pub examples: GoldenFile,
}

impl Golden {
    fn from_texts(texts: [&str; 5]) -> Result<Golden> {
        let f = |i: usize| GoldenFile::parse(FILES[i], texts[i]);
        Ok(Golden { fpoly: f(0)?, c_matrix: f(1)?, d_matrix: f(2)?, fig8: f(3)?, examples: f(4)? })
    }

    pub fn builtin() -> Golden {
        Self::from_texts(EMBEDDED).expect("embedded golden data parses")
    }

    /// Reads every file from `dir`; a missing file is an error.
    pub fn load(dir: &Path) -> Result<Golden> {
        let mut texts = Vec::new();
        for f in FILES {
            let p = dir.join(f);
            texts.push(std::fs::read_to_string(&p).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?);
        }
        Self::from_texts([&texts[0], &texts[1], &texts[2], &texts[3], &texts[4]])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_parses() {
        let g = Golden::builtin();
        assert_eq!(g.fpoly.entries.len(), 10);
        assert_eq!(g.c_matrix.pairs().unwrap().len(), 100);
        assert_eq!(g.d_matrix.pairs().unwrap().len(), 25);
        assert!(g.examples.get("norm [3,2]").is_some());
        assert!(GoldenFile::parse("x", "# only a comment\n").is_err());
        assert!(Golden::load(Path::new("/nonexistent")).is_err());
    }
}
