use std::collections::BTreeMap;

use super::{OracleResult, Verdict};
use crate::error::{Error, Result};

const SHIPPED: &str = include_str!("baseline.csv");

/// Expected verdict per `(oracle id, parameter label)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Baseline {
    pub expected: BTreeMap<(String, String), Verdict>,
}

/// A result whose verdict differs from the baseline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Deviation {
    pub id: String,
    pub params: String,
    pub expected: Verdict,
    pub actual: Verdict,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BaselineReport {
    pub matched: usize,
    pub deviations: Vec<Deviation>,
    /// Results with no baseline row; reported, not failed.
    pub unlisted: Vec<(String, String)>,
}

impl BaselineReport {
    pub fn ok(&self) -> bool {
        self.deviations.is_empty()
    }
}

impl Baseline {
    /// The baseline compiled into the library.
    pub fn shipped() -> Baseline {
        Baseline::parse(SHIPPED).expect("shipped baseline parses")
    }

    /// Parses `oracle_id,family_params,verdict` lines; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Baseline> {
        let mut expected = BTreeMap::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') || line == "oracle_id,family_params,verdict" {
                continue;
            }
            let bad = |message: &str| Error::EdgeListParse { line: i + 1, message: message.to_string() };
            let mut parts = line.split(',');
            let (Some(id), Some(params), Some(v), None) = (parts.next(), parts.next(), parts.next(), parts.next())
            else {
                return Err(bad("expected `oracle_id,family_params,verdict`"));
            };
            let verdict = Verdict::from_name(v).ok_or_else(|| bad("unknown verdict"))?;
            expected.insert((id.trim().to_string(), params.trim().to_string()), verdict);
        }
        Ok(Baseline { expected })
    }

    pub fn from_results(results: &[OracleResult]) -> Baseline {
        let expected = results
            .iter()
            .map(|r| ((r.id.clone(), r.point.params_label()), r.verdict))
            .collect();
        Baseline { expected }
    }

    pub fn render(&self) -> String {
        let mut out = String::from("oracle_id,family_params,verdict\n");
        for ((id, params), v) in &self.expected {
            out.push_str(&format!("{id},{params},{v}\n"));
        }
        out
    }

    pub fn compare(&self, results: &[OracleResult]) -> BaselineReport {
        let mut report = BaselineReport::default();
        for r in results {
            let key = (r.id.clone(), r.point.params_label());
            match self.expected.get(&key) {
                Some(&v) if v == r.verdict => report.matched += 1,
                Some(&v) => report.deviations.push(Deviation {
                    id: key.0,
                    params: key.1,
                    expected: v,
                    actual: r.verdict,
                }),
                None => report.unlisted.push(key),
            }
        }
        report
    }
}
