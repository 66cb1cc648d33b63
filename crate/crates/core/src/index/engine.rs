use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::One;

use super::descriptor::{Aggregation, Form, IndexDescriptor, Transform};
use super::registry::{IndexSpec, SpecialIndex};
use crate::error::{Error, Result};
use crate::exactnum::{format_significant, ExpPoly, Rat, SurdSum};
use crate::functionals::{self, DegreeSource, DominationConfig, FunctionalTable};
use crate::graph::Graph;

/// Polynomial with floating-point exponents, from non-integer general powers.
#[derive(Debug, Clone, PartialEq)]
pub struct ApproxPoly {
    /// `(exponent, coefficient)` in descending exponent order.
    pub terms: Vec<(f64, BigInt)>,
}

impl ApproxPoly {
    fn from_exponents(exps: Vec<f64>) -> ApproxPoly {
        let mut terms: Vec<(f64, BigInt)> = Vec::new();
        let mut sorted = exps;
        sorted.sort_by(|a, b| b.total_cmp(a));
        for e in sorted {
            match terms.last_mut() {
                Some((last, c)) if last.to_bits() == e.to_bits() => *c += 1,
                _ => terms.push((e, BigInt::one())),
            }
        }
        ApproxPoly { terms }
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(e, c)| format!("{c}*x^{}", format_significant(*e, 12)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Value of an index: exact where possible, float-tagged otherwise.
#[derive(Debug, Clone, PartialEq)]
pub enum IndexResult {
    Exact(Rat),
    Poly(ExpPoly),
    /// Sum of square roots, kept exact.
    Surd(SurdSum),
    /// Non-integer general power (relative tolerance 1e-9).
    Approx(f64),
    ApproxPoly(ApproxPoly),
}

/// Relative tolerance for float-tagged results.
pub const APPROX_REL_TOL: f64 = 1e-9;

impl IndexResult {
    /// Exact text: `num/den`, a canonical polynomial, or a surd sum.
    /// Float-tagged values are prefixed with `~`.
    pub fn render(&self) -> String {
        match self {
            IndexResult::Exact(r) => r.to_string(),
            IndexResult::Poly(p) => p.render(),
            IndexResult::Surd(s) => s.to_string(),
            IndexResult::Approx(x) => format!("~{}", format_significant(*x, 12)),
            IndexResult::ApproxPoly(p) => format!("~{}", p.render()),
        }
    }

    pub fn approx(&self) -> Option<f64> {
        match self {
            IndexResult::Exact(r) => Some(r.to_f64()),
            IndexResult::Surd(s) => Some(s.to_f64()),
            IndexResult::Approx(x) => Some(*x),
            IndexResult::Poly(_) | IndexResult::ApproxPoly(_) => None,
        }
    }

    pub fn as_exact(&self) -> Option<&Rat> {
        match self {
            IndexResult::Exact(r) => Some(r),
            _ => None,
        }
    }

    pub fn as_poly(&self) -> Option<&ExpPoly> {
        match self {
            IndexResult::Poly(p) => Some(p),
            _ => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, IndexResult::Exact(_) | IndexResult::Poly(_) | IndexResult::Surd(_))
    }
}

impl fmt::Display for IndexResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

enum Scalar {
    Exact(Rat),
    Float(f64),
}

fn transform(t: &Transform, k: Rat, edge: (usize, usize)) -> Result<Scalar> {
    let inverse_undefined = || Error::InverseUndefined(edge.0, edge.1);
    match t {
        Transform::Identity => Ok(Scalar::Exact(k)),
        Transform::Hyper => Ok(Scalar::Exact(&k * &k)),
        Transform::Inverse => k.recip().map(Scalar::Exact).map_err(|_| inverse_undefined()),
        Transform::General(a) => {
            if k.is_zero() && a.is_negative() {
                return Err(inverse_undefined());
            }
            match a.to_i64() {
                Some(e) => k.pow(e).map(Scalar::Exact),
                None => Ok(Scalar::Float(k.to_f64().powf(a.to_f64()))),
            }
        }
    }
}

/// Evaluates descriptors and special indices on one graph, caching functional tables.
pub struct Engine<'g> {
    g: &'g Graph,
    cfg: DominationConfig,
    tables: [OnceLock<Result<FunctionalTable>>; 7],
    closeness: OnceLock<Result<Vec<Rat>>>,
    cl: OnceLock<Vec<Rat>>,
}

fn slot(s: DegreeSource) -> usize {
    DegreeSource::ALL.iter().position(|x| *x == s).expect("listed source")
}

impl<'g> Engine<'g> {
    pub fn new(g: &'g Graph) -> Engine<'g> {
        Engine::with_config(g, DominationConfig::from_env())
    }

    pub fn with_config(g: &'g Graph, cfg: DominationConfig) -> Engine<'g> {
        Engine {
            g,
            cfg,
            tables: std::array::from_fn(|_| OnceLock::new()),
            closeness: OnceLock::new(),
            cl: OnceLock::new(),
        }
    }

    pub fn graph(&self) -> &Graph {
        self.g
    }

    pub fn table(&self, source: DegreeSource) -> Result<&FunctionalTable> {
        self.tables[slot(source)]
            .get_or_init(|| functionals::table(self.g, source, &self.cfg))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Endpoint values of `source` for every edge, in edge order.
    pub fn endpoint_pairs(&self, source: DegreeSource) -> Result<Vec<(Rat, Rat)>> {
        let t = self.table(source)?;
        Ok((0..self.g.edge_count()).map(|i| t.endpoint_values(self.g, i)).collect())
    }

    pub fn closeness(&self) -> Result<&[Rat]> {
        self.closeness
            .get_or_init(|| functionals::closeness(self.g))
            .as_deref()
            .map_err(Clone::clone)
    }

    pub fn cl_degree(&self) -> &[Rat] {
        self.cl.get_or_init(|| functionals::cl_degree(self.g))
    }

    pub fn evaluate_spec(&self, spec: &IndexSpec) -> Result<IndexResult> {
        match spec {
            IndexSpec::Descriptor(d) => self.evaluate(d),
            IndexSpec::Special(s) => self.special(*s),
        }
    }

    pub fn evaluate(&self, d: &IndexDescriptor) -> Result<IndexResult> {
        let pairs = self.endpoint_pairs(d.source)?;
        let mut exact = Vec::with_capacity(pairs.len());
        let mut float = Vec::new();
        for ((a, b), &edge) in pairs.iter().zip(self.g.edges()) {
            match transform(&d.transform, d.variant.apply(a, b), edge)? {
                Scalar::Exact(r) => exact.push(r),
                Scalar::Float(x) => float.push(x),
            }
        }
        if !float.is_empty() {
            return Ok(match (d.form, d.aggregation) {
                (Form::Value, Aggregation::Sum) => IndexResult::Approx(float.iter().sum()),
                (Form::Value, Aggregation::Product) => IndexResult::Approx(float.iter().product()),
                (Form::Exponential, Aggregation::Sum) => IndexResult::ApproxPoly(ApproxPoly::from_exponents(float)),
                (Form::Exponential, Aggregation::Product) => {
                    IndexResult::ApproxPoly(ApproxPoly::from_exponents(vec![float.iter().sum()]))
                }
            });
        }
        // Equal kernels are grouped so large products need one power per distinct value.
        let mut counts: BTreeMap<Rat, i64> = BTreeMap::new();
        for k in exact {
            *counts.entry(k).or_insert(0) += 1;
        }
        let sum = |counts: &BTreeMap<Rat, i64>| counts.iter().map(|(k, &c)| k * c).sum::<Rat>();
        Ok(match (d.form, d.aggregation) {
            (Form::Value, Aggregation::Sum) => IndexResult::Exact(sum(&counts)),
            (Form::Value, Aggregation::Product) => {
                IndexResult::Exact(counts.iter().map(|(k, &c)| k.pow(c)).product::<Result<Rat>>()?)
            }
            (Form::Exponential, Aggregation::Sum) => {
                IndexResult::Poly(ExpPoly::from_terms(counts.into_iter().map(|(e, c)| (BigInt::from(c), e))))
            }
            (Form::Exponential, Aggregation::Product) => IndexResult::Poly(ExpPoly::monomial(1, sum(&counts))),
        })
    }

    pub fn special(&self, which: SpecialIndex) -> Result<IndexResult> {
        let g = self.g;
        let values: Vec<Rat> = match which.basis() {
            "plain" => functionals::plain_degree(g),
            "closeness" => self.closeness()?.to_vec(),
            _ => self.cl_degree().to_vec(),
        };
        let ends = g.edges().iter().map(|&(u, v)| (&values[u], &values[v]));
        let exact = |f: &dyn Fn(&Rat, &Rat) -> Rat| -> IndexResult {
            IndexResult::Exact(g.edges().iter().map(|&(u, v)| f(&values[u], &values[v])).sum())
        };
        let int_pow = |a: &Rat, b: &Rat| -> Rat {
            let e = b.to_i64().expect("degrees are small integers");
            a.pow(e).expect("non-negative exponent")
        };
        Ok(match which {
            SpecialIndex::Rl5 => exact(&|a, b| {
                let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
                int_pow(lo, hi)
            }),
            SpecialIndex::Rl6 => exact(&|a, b| int_pow(a, b) + int_pow(b, a)),
            SpecialIndex::Rl7 | SpecialIndex::Rl13 => exact(&|a, b| a + b),
            SpecialIndex::Rl8 | SpecialIndex::Rl14 => exact(&|a, b| a * b),
            SpecialIndex::Rl9 | SpecialIndex::Rl15 => exact(&|a, b| a * a + b * b),
            SpecialIndex::Rl12 => exact(&|a, b| (a - b).abs()),
            SpecialIndex::Rl10 | SpecialIndex::Rl16 => {
                let mut s = SurdSum::zero();
                for (a, b) in ends {
                    s.add_sqrt(&Rat::one(), &(a * a + b * b));
                }
                IndexResult::Surd(s)
            }
            SpecialIndex::Rl11 | SpecialIndex::Rl17 => {
                let mut s = SurdSum::zero();
                for (a, b) in ends {
                    s.add_sqrt(&Rat::one(), &(a + b));
                }
                IndexResult::Surd(s)
            }
            SpecialIndex::HeronianRl => {
                let mut s = SurdSum::zero();
                for (a, b) in ends {
                    s.add_rational(&(a + b));
                    s.add_sqrt(&Rat::one(), &(a * b));
                }
                IndexResult::Surd(s)
            }
        })
    }
}

/// Evaluates one descriptor on `g`.
pub fn evaluate(g: &Graph, d: &IndexDescriptor) -> Result<IndexResult> {
    Engine::new(g).evaluate(d)
}

/// Evaluates one special index on `g`.
pub fn special_index(g: &Graph, which: SpecialIndex) -> Result<IndexResult> {
    Engine::new(g).special(which)
}
