//! Colored invariants `J_K(V(mu), q)` of a knot, normalized to 1 on the
//! unknot, as builtin families or ingested JSON.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::qring::LaurentV;

const NORMALIZATION: &str = "unknot=1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Builtin,
    Ingested,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    Unknot,
    FigureEight,
    Ingested,
}

/// `J(V_n) = sum_m prod_{j=1}^m (q^(n+1) + q^(-n-1) - q^j - q^-j)` for the
/// figure-eight knot and the `n+1`-dimensional `sl_2` module `V_n`.
pub fn figure_eight_jones(n: u32) -> LaurentV {
    let n = n as i64;
    let mut acc = LaurentV::one();
    let mut prod = LaurentV::one();
    for j in 1..=n {
        prod = prod * (LaurentV::q_pow(n + 1) + LaurentV::q_pow(-n - 1) - LaurentV::q_pow(j) - LaurentV::q_pow(-j));
        acc += &prod;
    }
    acc
}

/// The three values printed for the figure-eight knot, `V_0, V_1, V_2`.
pub fn figure_eight_printed() -> [LaurentV; 3] {
    let q = LaurentV::q_pow;
    let v1 = LaurentV::one() + q(2) + q(-2) - q(1) - q(-1);
    let a = q(3) + q(-3) - q(1) - q(-1);
    let b = q(3) + q(-3) - q(2) - q(-2);
    let v2 = LaurentV::one() + q(3) + q(-3) - q(1) - q(-1) + a * b;
    [LaurentV::one(), v1, v2]
}

#[derive(Clone, Debug, PartialEq)]
pub struct KnotTable {
    n: usize,
    name: String,
    source: Source,
    collapse: bool,
    bound: Option<Partition>,
    values: BTreeMap<Partition, LaurentV>,
}

#[derive(Serialize, Deserialize)]
struct KnotJson {
    #[serde(rename = "N")]
    n: usize,
    normalization: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    knot: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    provenance: Option<Provenance>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    bound: Option<Partition>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    gl2_collapse: bool,
    values: BTreeMap<String, LaurentV>,
}

impl KnotTable {
    /// The unknot: every color evaluates to 1.
    pub fn unknot(n: usize, bound: &Partition) -> Result<KnotTable> {
        bound.check_len(n)?;
        let values = bound.sub_partitions().into_iter().map(|m| (m, LaurentV::one())).collect();
        Ok(KnotTable {
            n,
            name: "unknot".into(),
            source: Source::Unknot,
            collapse: n == 2,
            bound: Some(bound.clone()),
            values,
        })
    }

    /// Figure-eight values for `gl_2` through `J(V(l1, l2)) = J(V_(l1 - l2))`.
    /// The generating formula is checked against the printed `V_0, V_1, V_2`.
    pub fn figure_eight(n: usize, bound: &Partition) -> Result<KnotTable> {
        if n != 2 {
            return Err(Error::InvalidArgument("figure-eight data is only available for N = 2".into()));
        }
        bound.check_len(n)?;
        for (i, want) in figure_eight_printed().iter().enumerate() {
            if figure_eight_jones(i as u32) != *want {
                return Err(Error::InvalidArgument(format!("figure-eight formula disagrees with V_{i}")));
            }
        }
        let values = bound.sub_partitions().into_iter().map(|m| (m.clone(), Self::fig8_value(&m))).collect();
        Ok(KnotTable {
            n,
            name: "fig8".into(),
            source: Source::FigureEight,
            collapse: true,
            bound: Some(bound.clone()),
            values,
        })
    }

    fn fig8_value(mu: &Partition) -> LaurentV {
        figure_eight_jones(mu.part(0) - mu.part(1))
    }

    /// Builtin knot by name: `unknot` or `fig8`.
    pub fn builtin(name: &str, n: usize, bound: &Partition) -> Result<KnotTable> {
        match name {
            "unknot" => Self::unknot(n, bound),
            "fig8" | "figure-eight" | "4_1" => Self::figure_eight(n, bound),
            _ => Err(Error::InvalidArgument(format!("unknown builtin knot {name:?}"))),
        }
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> Source {
        self.source
    }

    pub fn provenance(&self) -> Provenance {
        match self.source {
            Source::Ingested => Provenance::Ingested,
            _ => Provenance::Builtin,
        }
    }

    pub fn bound(&self) -> Option<&Partition> {
        self.bound.as_ref()
    }

    pub fn values(&self) -> &BTreeMap<Partition, LaurentV> {
        &self.values
    }

    /// `J_K(V(mu))`, generated on demand for builtin families.
    pub fn value(&self, mu: &Partition) -> Result<LaurentV> {
        mu.check_len(self.n)?;
        if let Some(v) = self.values.get(mu) {
            return Ok(v.clone());
        }
        match self.source {
            Source::Unknot => Ok(LaurentV::one()),
            Source::FigureEight => Ok(Self::fig8_value(mu)),
            Source::Ingested => Err(Error::MissingColor(mu.clone())),
        }
    }

    /// Colors `lambda` with `a_lambda(K)` possibly nonzero, when this is known
    /// exactly. The unknot is `(-1)^binom(N,2) q^(-binom(N,3)) F_empty`, so
    /// only the empty partition contributes.
    pub fn exact_support(&self) -> Option<Vec<Partition>> {
        match self.source {
            Source::Unknot => Some(vec![Partition::empty()]),
            _ => None,
        }
    }

    /// Checks normalization, part counts, coverage of the declared bound and,
    /// when declared, the `gl_2` collapse rule.
    pub fn validate(&self) -> Result<()> {
        for mu in self.values.keys() {
            mu.check_len(self.n)?;
        }
        match self.values.get(&Partition::empty()) {
            Some(v) if v.is_one() => {}
            Some(v) => return Err(Error::NotNormalized(v.clone())),
            None => return Err(Error::MissingColor(Partition::empty())),
        }
        if let Some(b) = &self.bound {
            b.check_len(self.n)?;
            for mu in b.sub_partitions() {
                if !self.values.contains_key(&mu) {
                    return Err(Error::MissingColor(mu));
                }
            }
        }
        if self.collapse {
            if self.n != 2 {
                return Err(Error::InvalidArgument("the collapse rule applies to N = 2".into()));
            }
            let mut seen: BTreeMap<u32, &LaurentV> = BTreeMap::new();
            for (mu, v) in &self.values {
                let d = mu.part(0) - mu.part(1);
                if let Some(w) = seen.insert(d, v) {
                    if w != v {
                        return Err(Error::CollapseViolation(mu.clone()));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Result<String> {
        let j = KnotJson {
            n: self.n,
            normalization: NORMALIZATION.into(),
            knot: Some(self.name.clone()),
            provenance: Some(self.provenance()),
            bound: self.bound.clone(),
            gl2_collapse: self.collapse,
            values: self.values.iter().map(|(k, v)| (k.key(), v.clone())).collect(),
        };
        Ok(serde_json::to_string_pretty(&j)?)
    }

    /// Parses and validates a table. The result is marked as ingested.
    pub fn from_json(text: &str) -> Result<KnotTable> {
        let j: KnotJson = serde_json::from_str(text)?;
        if j.normalization != NORMALIZATION {
            return Err(Error::Schema(format!("unsupported normalization {:?}", j.normalization)));
        }
        let mut values = BTreeMap::new();
        for (k, v) in j.values {
            let mu = Partition::parse(&k)?;
            if !v.is_q_polynomial() {
                return Err(Error::OddExponent(v));
            }
            values.insert(mu, v);
        }
        let t = KnotTable {
            n: j.n,
            name: j.knot.unwrap_or_else(|| "ingested".into()),
            source: Source::Ingested,
            collapse: j.gl2_collapse,
            bound: j.bound,
            values,
        };
        t.validate()?;
        Ok(t)
    }

    pub fn ingest(path: &Path) -> Result<KnotTable> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure_eight_values() {
        let t = KnotTable::figure_eight(2, &part!(3, 3)).unwrap();
        t.validate().unwrap();
        let [v0, v1, _] = figure_eight_printed();
        assert_eq!(t.value(&part!()).unwrap(), v0);
        assert_eq!(t.value(&part!(1, 1)).unwrap(), v0);
        assert_eq!(t.value(&part!(2, 1)).unwrap(), v1);
        assert_eq!(t.value(&part!(1)).unwrap(), LaurentV::from_q_dense(-2, &[1, -1, 1, -1, 1]));
        assert_eq!(t.value(&part!(7, 2)).unwrap(), figure_eight_jones(5));
        assert!(KnotTable::figure_eight(3, &part!(1)).is_err());
    }

    #[test]
    fn json_round_trip_and_validation() {
        let t = KnotTable::figure_eight(2, &part!(2, 1)).unwrap();
        let back = KnotTable::from_json(&t.to_json().unwrap()).unwrap();
        assert_eq!(back.values(), t.values());
        assert_eq!(back.provenance(), Provenance::Ingested);

        let u = KnotTable::unknot(2, &part!(2, 2)).unwrap();
        KnotTable::from_json(&u.to_json().unwrap()).unwrap();

        let text = r#"{"N":2,"normalization":"unknot=1","bound":[2,1],
            "values":{"[]":{"var":"v","coeffs":{"0":"1"}}}}"#;
        assert!(matches!(KnotTable::from_json(text), Err(Error::MissingColor(_))));
        let text = r#"{"N":2,"normalization":"unknot=1",
            "values":{"[]":{"var":"v","coeffs":{"0":"2"}}}}"#;
        assert!(matches!(KnotTable::from_json(text), Err(Error::NotNormalized(_))));
        let text = r#"{"N":1,"normalization":"unknot=1",
            "values":{"[]":{"var":"v","coeffs":{"0":"1"}},"[1,1]":{"var":"v","coeffs":{"0":"1"}}}}"#;
        assert!(matches!(KnotTable::from_json(text), Err(Error::TooManyParts { .. })));
        let text = r#"{"N":2,"normalization":"unknot=1","gl2_collapse":true,
            "values":{"[]":{"var":"v","coeffs":{"0":"1"}},"[1,1]":{"var":"v","coeffs":{"2":"1"}}}}"#;
        assert!(matches!(KnotTable::from_json(text), Err(Error::CollapseViolation(_))));
        assert!(matches!(KnotTable::from_json("{\"N\":2}"), Err(Error::Schema(_))));
    }
}
