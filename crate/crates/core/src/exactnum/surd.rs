use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Rat;

const TRIAL_LIMIT: u64 = 100_000;

/// Exact sum `q + Σ c_k·√k` with integer radicands `k > 1` and rational `c_k`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SurdSum {
    rational: Rat,
    surds: BTreeMap<BigInt, Rat>,
}

impl SurdSum {
    pub fn zero() -> SurdSum {
        SurdSum::default()
    }

    pub fn rational_part(&self) -> &Rat {
        &self.rational
    }

    pub fn surds(&self) -> impl Iterator<Item = (&BigInt, &Rat)> {
        self.surds.iter()
    }

    pub fn is_rational(&self) -> bool {
        self.surds.is_empty()
    }

    pub fn add_rational(&mut self, q: &Rat) {
        self.rational = &self.rational + q;
    }

    /// Adds `coeff·√r` for a non-negative rational radicand `r`.
    pub fn add_sqrt(&mut self, coeff: &Rat, r: &Rat) {
        assert!(!r.is_negative(), "negative radicand {r}");
        if r.is_zero() || coeff.is_zero() {
            return;
        }
        // √(p/q) = √(p·q)/q
        let (outside, radicand) = split_square(&(r.numer() * r.denom()));
        let c = coeff * Rat::new(outside, r.denom().clone()).expect("denominator is positive");
        if radicand.is_one() {
            self.rational = &self.rational + &c;
            return;
        }
        let slot = self.surds.entry(radicand.clone()).or_insert_with(Rat::zero);
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.surds.remove(&radicand);
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.surds.iter().fold(self.rational.to_f64(), |acc, (k, c)| {
            acc + c.to_f64() * k.to_f64().unwrap_or(f64::INFINITY).sqrt()
        })
    }
}

/// Writes `n = s²·k` and returns `(s, k)`; `k` is squarefree when its prime
/// factors are below the trial limit or it is a perfect square cofactor.
fn split_square(n: &BigInt) -> (BigInt, BigInt) {
    if n.is_zero() {
        return (BigInt::zero(), BigInt::zero());
    }
    let mut rest = n.abs();
    let mut outside = BigInt::one();
    let mut p: u64 = 2;
    while p <= TRIAL_LIMIT {
        let pp = BigInt::from(p * p);
        if pp > rest {
            break;
        }
        let bp = BigInt::from(p);
        while (&rest % &pp).is_zero() {
            rest /= &pp;
            outside *= &bp;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let r = rest.sqrt();
    if &r * &r == rest {
        outside *= r;
        rest = BigInt::one();
    }
    (outside, rest)
}

impl fmt::Display for SurdSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rational)?;
        for (k, c) in &self.surds {
            write!(f, " + {c}*sqrt({k})")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SurdSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
