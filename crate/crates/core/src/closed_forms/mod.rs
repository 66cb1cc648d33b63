//! Closed-form predictions per graph family, and their differential check
//! against direct evaluation.

mod baseline;
mod oracles;

pub use baseline::{Baseline, BaselineReport, Deviation};
pub use oracles::{oracles, OracleEntry};

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::{ExpPoly, Rat};
use crate::functionals::{DegreeSource, DominationConfig};
use crate::graph::{generate, FamilyKind, FamilySpec};
use crate::index::{lookup, Engine, IndexResult, IndexSpec};

/// An exact closed-form value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleValue {
    Value(Rat),
    Poly(ExpPoly),
}

impl fmt::Display for OracleValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleValue::Value(r) => write!(f, "{r}"),
            OracleValue::Poly(p) => write!(f, "{p}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Verdict {
    Confirmed,
    Discrepant,
    Error,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Confirmed => "CONFIRMED",
            Verdict::Discrepant => "DISCREPANT",
            Verdict::Error => "ERROR",
        }
    }

    pub fn from_name(s: &str) -> Option<Verdict> {
        match s.trim().to_ascii_uppercase().as_str() {
            "CONFIRMED" => Some(Verdict::Confirmed),
            "DISCREPANT" => Some(Verdict::Discrepant),
            "ERROR" => Some(Verdict::Error),
            _ => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One oracle checked at one parameter point.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleResult {
    pub id: String,
    pub point: FamilySpec,
    pub oracle: Option<OracleValue>,
    pub direct: Option<OracleValue>,
    pub verdict: Verdict,
    /// `oracle - direct` for value oracles; the polynomial difference otherwise.
    pub difference: Option<OracleValue>,
    pub error: Option<String>,
}

/// Which oracles to check and over which parameters.
#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub family: Option<FamilyKind>,
    /// Inclusive size range, see [`sweep`].
    pub range: (usize, usize),
    pub oracle: Option<String>,
    pub domination: DominationConfig,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            family: None,
            range: (3, 10),
            oracle: None,
            domination: DominationConfig::from_env(),
        }
    }
}

pub fn find_oracle(id: &str) -> Result<&'static OracleEntry> {
    oracles()
        .iter()
        .find(|o| o.id.eq_ignore_ascii_case(id.trim()))
        .ok_or_else(|| Error::UnknownOracle(id.to_string()))
}

fn signed_params(point: &FamilySpec) -> Vec<i64> {
    point.params.iter().map(|&p| p as i64).collect()
}

/// Evaluates an oracle's closed form at a parameter point.
pub fn oracle_value(entry: &OracleEntry, point: &FamilySpec) -> Result<OracleValue> {
    let params = signed_params(point);
    if point.kind != entry.family || !(entry.in_range)(&params) {
        return Err(Error::ParamsOutOfStatedRange {
            id: entry.id.to_string(),
            params: point.to_string(),
        });
    }
    Ok((entry.formula)(&params))
}

impl OracleEntry {
    pub fn index_spec(&self) -> IndexSpec {
        lookup(self.index, None).expect("oracle index names are registered")
    }

    pub fn source(&self) -> DegreeSource {
        match self.index_spec() {
            IndexSpec::Descriptor(d) => d.source,
            IndexSpec::Special(_) => DegreeSource::Plain,
        }
    }

    pub fn applies_to(&self, point: &FamilySpec) -> bool {
        point.kind == self.family && (self.in_range)(&signed_params(point))
    }
}

/// Parameter points swept for a family given the size range `lo..=hi`.
///
/// One-parameter families take `n` in the range. Regular graphs take
/// `n` in the range and every `2 <= r < n` with `nr` even. `K_{m,n}` takes
/// `n` in the range and `1 <= m <= hi`. Double stars take `q` in the range
/// and `1 <= p <= q`. Windmills take `n` in the range and `3 <= m <= hi`.
pub fn sweep(kind: FamilyKind, lo: usize, hi: usize) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    for n in lo..=hi {
        match kind {
            FamilyKind::Regular => {
                out.extend((2..n).filter(|r| n * r % 2 == 0).map(|r| FamilySpec::regular(n, r)))
            }
            FamilyKind::CompleteBipartite => {
                out.extend((1..=hi).map(|m| FamilySpec::complete_bipartite(m, n)))
            }
            FamilyKind::DoubleStar => out.extend((1..=n).map(|p| FamilySpec::double_star(p, n))),
            FamilyKind::FrenchWindmill => {
                out.extend((3..=hi).map(|m| FamilySpec::french_windmill(n, m)))
            }
            FamilyKind::Cycle
            | FamilyKind::Path
            | FamilyKind::Complete
            | FamilyKind::Star
            | FamilyKind::Wheel
            | FamilyKind::Sunflower => out.push(FamilySpec { kind, params: vec![n] }),
        }
    }
    out.retain(|s| s.validate().is_ok());
    out
}

fn as_oracle_value(r: IndexResult) -> Result<OracleValue> {
    match r {
        IndexResult::Exact(v) => Ok(OracleValue::Value(v)),
        IndexResult::Poly(p) => Ok(OracleValue::Poly(p)),
        other => Err(Error::UnsupportedEvaluation(format!(
            "inexact result {} cannot be compared exactly",
            other.render()
        ))),
    }
}

fn compare(id: &str, point: &FamilySpec, oracle: Result<OracleValue>, direct: Result<OracleValue>) -> OracleResult {
    let mut res = OracleResult {
        id: id.to_string(),
        point: point.clone(),
        oracle: None,
        direct: None,
        verdict: Verdict::Error,
        difference: None,
        error: None,
    };
    match (oracle, direct) {
        (Ok(o), Ok(d)) => {
            res.difference = match (&o, &d) {
                (OracleValue::Value(a), OracleValue::Value(b)) => Some(OracleValue::Value(a - b)),
                (OracleValue::Poly(a), OracleValue::Poly(b)) => {
                    Some(OracleValue::Poly(a.add(&b.scale(&(-1).into()))))
                }
                _ => None,
            };
            res.verdict = if o == d { Verdict::Confirmed } else { Verdict::Discrepant };
            if res.difference.is_none() {
                res.verdict = Verdict::Error;
                res.error = Some("oracle and direct value have different kinds".to_string());
            }
            res.oracle = Some(o);
            res.direct = Some(d);
        }
        (o, d) => {
            let msg = [o.as_ref().err(), d.as_ref().err()]
                .into_iter()
                .flatten()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join("; ");
            res.oracle = o.ok();
            res.direct = d.ok();
            res.error = Some(msg);
        }
    }
    res
}

/// Checks a single oracle at a single point.
pub fn verify_point(entry: &OracleEntry, point: &FamilySpec, cfg: &DominationConfig) -> OracleResult {
    let direct = generate(point).and_then(|g| {
        let engine = Engine::with_config(&g, *cfg);
        engine.evaluate_spec(&entry.index_spec()).and_then(as_oracle_value)
    });
    compare(entry.id, point, oracle_value(entry, point), direct)
}

/// Checks every selected oracle at every swept point within its stated range.
///
/// Domination oracles skip points above the solver bound. Results are sorted
/// by oracle id, then by parameter point.
pub fn verify(opts: &VerifyOptions) -> Result<Vec<OracleResult>> {
    let selected: Vec<&OracleEntry> = match &opts.oracle {
        Some(id) => vec![find_oracle(id)?],
        None => oracles().iter().collect(),
    };
    let mut by_family: BTreeMap<FamilyKind, Vec<&OracleEntry>> = BTreeMap::new();
    for o in selected {
        if opts.family.is_none_or(|f| f == o.family) {
            by_family.entry(o.family).or_default().push(o);
        }
    }
    let (lo, hi) = opts.range;
    let jobs: Vec<(FamilySpec, Vec<&OracleEntry>)> = by_family
        .iter()
        .flat_map(|(&kind, entries)| {
            sweep(kind, lo, hi).into_iter().filter_map(move |point| {
                let too_big = point.vertex_count() > opts.domination.max_vertices;
                let list: Vec<&OracleEntry> = entries
                    .iter()
                    .copied()
                    .filter(|o| o.applies_to(&point))
                    .filter(|o| !(too_big && o.source() == DegreeSource::Domination))
                    .collect();
                (!list.is_empty()).then_some((point, list))
            })
        })
        .collect();

    let threads = std::thread::available_parallelism().map_or(1, |n| n.get()).min(jobs.len().max(1));
    let chunks: Vec<Vec<OracleResult>> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..threads)
            .map(|t| {
                let jobs = &jobs;
                let cfg = opts.domination;
                s.spawn(move || {
                    let mut out = Vec::new();
                    for (point, list) in jobs.iter().skip(t).step_by(threads) {
                        out.extend(check_point(point, list, &cfg));
                    }
                    out
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("verify worker panicked")).collect()
    });
    let mut results: Vec<OracleResult> = chunks.into_iter().flatten().collect();
    results.sort_by(|a, b| a.id.cmp(&b.id).then_with(|| a.point.cmp(&b.point)));
    Ok(results)
}

fn check_point(point: &FamilySpec, list: &[&OracleEntry], cfg: &DominationConfig) -> Vec<OracleResult> {
    let graph = match generate(point) {
        Ok(g) => g,
        Err(e) => {
            return list
                .iter()
                .map(|o| compare(o.id, point, oracle_value(o, point), Err(e.clone())))
                .collect()
        }
    };
    let engine = Engine::with_config(&graph, *cfg);
    list.iter()
        .map(|o| {
            let direct = engine.evaluate_spec(&o.index_spec()).and_then(as_oracle_value);
            compare(o.id, point, oracle_value(o, point), direct)
        })
        .collect()
}

/// Oracle-level verdict: DISCREPANT if any point is, ERROR if any point errs
/// and none is discrepant.
pub fn summarize(results: &[OracleResult]) -> BTreeMap<String, (Verdict, usize)> {
    let mut out: BTreeMap<String, (Verdict, usize)> = BTreeMap::new();
    for r in results {
        let e = out.entry(r.id.clone()).or_insert((Verdict::Confirmed, 0));
        e.1 += 1;
        e.0 = match (e.0, r.verdict) {
            (Verdict::Discrepant, _) | (_, Verdict::Discrepant) => Verdict::Discrepant,
            (Verdict::Error, _) | (_, Verdict::Error) => Verdict::Error,
            _ => Verdict::Confirmed,
        };
    }
    out
}
