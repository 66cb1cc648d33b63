use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Rat;
use crate::error::{Error, Result};

/// Sparse polynomial in `x` with exact rational exponents and integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ExpPoly {
    terms: BTreeMap<Rat, BigInt>,
}

impl ExpPoly {
    pub fn zero() -> ExpPoly {
        ExpPoly::default()
    }

    pub fn one() -> ExpPoly {
        ExpPoly::monomial(BigInt::one(), Rat::zero())
    }

    pub fn monomial(coeff: impl Into<BigInt>, exponent: Rat) -> ExpPoly {
        let mut p = ExpPoly::zero();
        p.add_term(coeff.into(), exponent);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (BigInt, Rat)>>(terms: I) -> ExpPoly {
        let mut p = ExpPoly::zero();
        for (c, e) in terms {
            p.add_term(c, e);
        }
        p
    }

    pub fn add_term(&mut self, coeff: BigInt, exponent: Rat) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exponent).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Rat, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exponent: &Rat) -> BigInt {
        self.terms.get(exponent).cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &ExpPoly) -> ExpPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(c.clone(), e.clone());
        }
        out
    }

    pub fn scale(&self, k: &BigInt) -> ExpPoly {
        ExpPoly::from_terms(self.terms.iter().map(|(e, c)| (c * k, e.clone())))
    }

    pub fn mul(&self, other: &ExpPoly) -> ExpPoly {
        let mut out = ExpPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(c1 * c2, e1 + e2);
            }
        }
        out
    }

    /// Exact value at `x`. Non-integer exponents are only evaluable at `x = 1`.
    pub fn eval(&self, x: &Rat) -> Result<Rat> {
        let mut total = Rat::zero();
        for (e, c) in &self.terms {
            let power = if x.is_one() {
                Rat::one()
            } else if let Some(k) = e.to_i64() {
                x.pow(k).map_err(|_| {
                    Error::UnsupportedEvaluation(format!("x={x} with exponent {e}"))
                })?
            } else {
                return Err(Error::UnsupportedEvaluation(format!(
                    "non-integer exponent {e} at x={x}"
                )));
            };
            total = total + power * Rat::from(c.clone());
        }
        Ok(total)
    }

    /// Value of the derivative at `x = 1`, i.e. the sum of `coeff * exponent`.
    pub fn derivative_at_one(&self) -> Rat {
        self.terms
            .iter()
            .map(|(e, c)| e * Rat::from(c.clone()))
            .sum()
    }

    /// Canonical text: descending exponents, `<coeff>*x^<num>/<den>` joined by ` + `.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                if e.denom().is_one() {
                    format!("{c}*x^{}", e.numer())
                } else {
                    format!("{c}*x^{}/{}", e.numer(), e.denom())
                }
            })
            .collect();
        parts.join(" + ")
    }

    pub fn parse(s: &str) -> Result<ExpPoly> {
        let bad = || Error::ParsePoly(s.to_string());
        let t = s.trim();
        if t == "0" {
            return Ok(ExpPoly::zero());
        }
        let mut p = ExpPoly::zero();
        for part in t.split(" + ") {
            let (c, e) = part.trim().split_once("*x^").ok_or_else(bad)?;
            let c: BigInt = c.parse().map_err(|_| bad())?;
            let e: Rat = e.parse().map_err(|_| bad())?;
            p.add_term(c, e);
        }
        Ok(p)
    }
}

impl fmt::Display for ExpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for ExpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl FromStr for ExpPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<ExpPoly> {
        ExpPoly::parse(s)
    }
}
