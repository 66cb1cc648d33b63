use std::sync::OnceLock;

use num_bigint::BigInt;

use super::OracleValue;
use crate::exactnum::{ExpPoly, Rat};
use crate::graph::FamilyKind;

/// A closed-form prediction for one index on one graph family.
#[derive(Clone)]
pub struct OracleEntry {
    /// `<index><k>[exp]/<family tag>`, e.g. `RL1/wheel`.
    pub id: &'static str,
    pub family: FamilyKind,
    /// Registry name of the index being predicted.
    pub index: &'static str,
    /// The closed form as stated.
    pub statement: &'static str,
    /// Parameter range the statement is made for.
    pub range: &'static str,
    pub in_range: fn(&[i64]) -> bool,
    pub formula: fn(&[i64]) -> OracleValue,
}

impl std::fmt::Debug for OracleEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("OracleEntry")
            .field("id", &self.id)
            .field("family", &self.family)
            .field("index", &self.index)
            .field("statement", &self.statement)
            .finish()
    }
}

fn z(v: i64) -> Rat {
    Rat::from(v)
}

fn val(r: Rat) -> OracleValue {
    OracleValue::Value(r)
}

/// `base^exp` for integer base, exact.
fn ip(base: i64, exp: i64) -> Rat {
    z(base).pow(exp).expect("non-zero base or non-negative exponent")
}

fn pw(r: &Rat, exp: i64) -> Rat {
    r.pow(exp).expect("non-zero base or non-negative exponent")
}

fn abs(r: Rat) -> Rat {
    r.abs()
}

/// Sum of `coeff·x^exp` terms; coefficients must be integers.
fn poly(terms: &[(Rat, Rat)]) -> OracleValue {
    OracleValue::Poly(ExpPoly::from_terms(terms.iter().map(|(c, e)| {
        assert!(c.is_integer(), "coefficient {c} is not an integer");
        (BigInt::clone(c.numer()), e.clone())
    })))
}

fn n_ge_2(p: &[i64]) -> bool {
    p[0] >= 2
}
fn n_ge_3(p: &[i64]) -> bool {
    p[0] >= 3
}
fn r_ge_1(p: &[i64]) -> bool {
    p[1] >= 1 && p[1] < p[0]
}
fn m_le_n(p: &[i64]) -> bool {
    1 <= p[0] && p[0] <= p[1] && p[1] >= 2
}
fn m_gt_n(p: &[i64]) -> bool {
    p[0] > p[1] && p[1] >= 2
}
fn m_eq_n(p: &[i64]) -> bool {
    p[0] == p[1] && p[1] >= 2
}
fn m_is_1(p: &[i64]) -> bool {
    p[0] == 1 && p[1] >= 2
}
fn two_le_m_le_n(p: &[i64]) -> bool {
    2 <= p[0] && p[0] <= p[1]
}
fn p_q_ge_1(p: &[i64]) -> bool {
    p[0] >= 1 && p[1] >= 1
}
fn windmill_range(p: &[i64]) -> bool {
    p[0] >= 3 && p[1] >= 3
}

macro_rules! oracle {
    ($id:literal, $fam:ident, $index:literal, $range:literal, $pred:expr, $stmt:literal, $f:expr) => {
        OracleEntry {
            id: $id,
            family: FamilyKind::$fam,
            index: $index,
            statement: $stmt,
            range: $range,
            in_range: $pred,
            formula: $f,
        }
    };
}

/// Every registered closed form, sorted by id.
pub fn oracles() -> &'static [OracleEntry] {
    static TABLE: OnceLock<Vec<OracleEntry>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = table();
        t.sort_by(|a, b| a.id.cmp(b.id));
        t
    })
}

fn sunflower_brl_1_2(n: &Rat, s: i64) -> Rat {
    let a = n * 3 + 2;
    let b = n * 3 - 3;
    let c = n * 3 - 1;
    let head = if s > 0 { n * 12 } else { n * 4 } / pw(&(n - 1), 2);
    head + n * pw(&a, 2) * (pw(&b, 2) + s * (&a * &b) + 1) / pw(&b, 2)
        + n * 16 * (z(1) / pw(&c, 2) + z(1) / pw(&b, 2) + z(s) / (&c * &b))
        + pw(n, 3) * 3 * (z(1) + z(1) / pw(&c, 2) + z(s) / &c)
        + n * pw(&c, 2) * (z(1) / (pw(n, 2) * 9) + 1 + z(s) / (n * 3))
}

fn sunflower_trl(n: &Rat, s: i64) -> Rat {
    let lead = if s > 0 { 5 } else { 3 };
    n * (z(lead) / pw(&(n - 1), 2)
        + pw(n, 2) * 27
        + z(8) / pw(&(n * 3 - 1), 2)
        + z(1) / (pw(n, 2) * 9)
        + s * (n * 6 / (n * 3 - 1) + n * 3 / (n - 1) + z(2) / ((n * 3 - 1) * (n - 1)) + 1))
}

fn windmill_drl(n: i64, m: i64, s: i64) -> Rat {
    let a = ip(n - 1, m - 1);
    let blades = z(m * n * (n - 1) * (n - 2) / 2);
    let lead = if s > 0 { 3 } else { 1 };
    z(m * (n - 1)) * (&a * &a + s * &a + 1) + blades * lead * (&a * &a)
}

fn table() -> Vec<OracleEntry> {
    vec![
        // plain degree
        oracle!("RL1/regular", Regular, "RL_1", "r-regular, n vertices", r_ge_1, "3nr^3/2",
            |p| val(z(3 * p[0]) * ip(p[1], 3) / 2)),
        oracle!("RL2/regular", Regular, "RL_2", "r-regular, n vertices", r_ge_1, "nr^3/2",
            |p| val(z(p[0]) * ip(p[1], 3) / 2)),
        oracle!("RL3/regular", Regular, "RL_3", "r-regular, n vertices", r_ge_1, "nr^3/2",
            |p| val(z(p[0]) * ip(p[1], 3) / 2)),
        oracle!("RL4/regular", Regular, "RL_4", "r-regular, n vertices", r_ge_1, "0", |_| val(z(0))),
        oracle!("RL1/cycle", Cycle, "RL_1", "n >= 3", n_ge_3, "12n", |p| val(z(12 * p[0]))),
        oracle!("RL2/cycle", Cycle, "RL_2", "n >= 3", n_ge_3, "4n", |p| val(z(4 * p[0]))),
        oracle!("RL3/cycle", Cycle, "RL_3", "n >= 3", n_ge_3, "4n", |p| val(z(4 * p[0]))),
        oracle!("RL4/cycle", Cycle, "RL_4", "n >= 3", n_ge_3, "0", |_| val(z(0))),
        oracle!("RL1/complete", Complete, "RL_1", "n >= 2", n_ge_2, "3n(n-1)^3/2",
            |p| val(z(3 * p[0]) * ip(p[0] - 1, 3) / 2)),
        oracle!("RL2/complete", Complete, "RL_2", "n >= 2", n_ge_2, "n(n-1)^3/2",
            |p| val(z(p[0]) * ip(p[0] - 1, 3) / 2)),
        oracle!("RL3/complete", Complete, "RL_3", "n >= 2", n_ge_2, "n(n-1)^3/2",
            |p| val(z(p[0]) * ip(p[0] - 1, 3) / 2)),
        oracle!("RL4/complete", Complete, "RL_4", "n >= 2", n_ge_2, "0", |_| val(z(0))),
        oracle!("RL1/path", Path, "RL_1", "n >= 3", n_ge_3, "12n-22", |p| val(z(12 * p[0] - 22))),
        oracle!("RL2/path", Path, "RL_2", "n >= 3", n_ge_3, "4n-6", |p| val(z(4 * p[0] - 6))),
        oracle!("RL3/path", Path, "RL_3", "n >= 3", n_ge_3, "4n-6", |p| val(z(4 * p[0] - 6))),
        oracle!("RL4/path", Path, "RL_4", "n >= 3", n_ge_3, "4", |_| val(z(4))),
        oracle!("RL1/bipartite", CompleteBipartite, "RL_1", "1 <= m <= n, n >= 2", m_le_n, "mn(m^2+n^2+mn)",
            |p| { let (m, n) = (z(p[0]), z(p[1])); val(&m * &n * (&m * &m + &n * &n + &m * &n)) }),
        oracle!("RL2/bipartite", CompleteBipartite, "RL_2", "1 <= m <= n, n >= 2", m_le_n, "mn(m^2+n^2-mn)",
            |p| { let (m, n) = (z(p[0]), z(p[1])); val(&m * &n * (&m * &m + &n * &n - &m * &n)) }),
        oracle!("RL3/bipartite", CompleteBipartite, "RL_3", "1 <= m <= n, n >= 2", m_le_n, "mn(m-n+mn)",
            |p| { let (m, n) = (z(p[0]), z(p[1])); val(&m * &n * (&m - &n + &m * &n)) }),
        oracle!("RL4/bipartite", CompleteBipartite, "RL_4", "1 <= m <= n, n >= 2", m_le_n, "m^2n^2|m-n|",
            |p| { let (m, n) = (z(p[0]), z(p[1])); val(&m * &m * &n * &n * abs(&m - &n)) }),
        oracle!("RL1/wheel", Wheel, "RL_1", "n >= 3", n_ge_3, "n(n^2+3n+36)",
            |p| { let n = &z(p[0]); val(n * (n * n + n * 3 + 36)) }),
        oracle!("RL2/wheel", Wheel, "RL_2", "n >= 3", n_ge_3, "n(n^2-3n+18)",
            |p| { let n = &z(p[0]); val(n * (n * n - n * 3 + 18)) }),
        oracle!("RL3/wheel", Wheel, "RL_3", "n >= 3", n_ge_3, "2n(2n+3)",
            |p| { let n = &z(p[0]); val(n * 2 * (n * 2 + 3)) }),
        oracle!("RL4/wheel", Wheel, "RL_4", "n >= 3", n_ge_3, "3n^2|n-3|",
            |p| { let n = &z(p[0]); val(n * n * 3 * abs(n - 3)) }),
        oracle!("RL1exp/wheel", Wheel, "RL_1(x)", "n >= 3", n_ge_3, "n(x^27+x^(n^2+3n+9))",
            |p| { let n = &z(p[0]); poly(&[(n.clone(), z(27)), (n.clone(), n * n + n * 3 + 9)]) }),
        oracle!("RL2exp/wheel", Wheel, "RL_2(x)", "n >= 3", n_ge_3, "nx^9(x^(n^2-3n)+1)",
            |p| { let n = &z(p[0]); poly(&[(n.clone(), n * n - n * 3 + 9), (n.clone(), z(9))]) }),
        oracle!("RL3exp/wheel", Wheel, "RL_3(x)", "n >= 3", n_ge_3, "n(x^9+x^(4n-3))",
            |p| { let n = &z(p[0]); poly(&[(n.clone(), z(9)), (n.clone(), n * 4 - 3)]) }),
        oracle!("RL4exp/wheel", Wheel, "RL_4(x)", "n >= 3", n_ge_3, "n(x^(3n|n-3|)+1)",
            |p| { let n = &z(p[0]); poly(&[(n.clone(), n * 3 * abs(n - 3)), (n.clone(), z(0))]) }),
        oracle!("RL1/sunflower", Sunflower, "RL_1", "n >= 3", n_ge_3, "n(27n^2+21n+97)",
            |p| { let n = &z(p[0]); val(n * (n * n * 27 + n * 21 + 97)) }),
        oracle!("RL2/sunflower", Sunflower, "RL_2", "n >= 3", n_ge_3, "n(27n^2-21n+49)",
            |p| { let n = &z(p[0]); val(n * (n * n * 27 - n * 21 + 49)) }),
        oracle!("RL3/sunflower", Sunflower, "RL_3", "n >= 3", n_ge_3, "n(25n+17)",
            |p| { let n = &z(p[0]); val(n * (n * 25 + 17)) }),
        oracle!("RL4/sunflower", Sunflower, "RL_4", "n >= 3", n_ge_3, "n(12n|3n-4|+6n|3n-2|+3n|3n-1|+16)",
            |p| { let n = &z(p[0]); val(n * (n * 12 * abs(n * 3 - 4) + n * 6 * abs(n * 3 - 2) + n * 3 * abs(n * 3 - 1) + 16)) }),
        oracle!("RL1exp/sunflower", Sunflower, "RL_1(x)", "n >= 3", n_ge_3,
            "n(x^48+x^(9n^2+12n+16)+x^28+x^(9n^2+6n+4)+x^(9n^2+3n+1))",
            |p| { let n = &z(p[0]); poly(&[(n.clone(), z(48)), (n.clone(), n * n * 9 + n * 12 + 16), (n.clone(), z(28)),
                (n.clone(), n * n * 9 + n * 6 + 4), (n.clone(), n * n * 9 + n * 3 + 1)]) }),
        oracle!("RL2exp/sunflower", Sunflower, "RL_2(x)", "n >= 3", n_ge_3,
            "n(x^16+x^(9n^2-12n+16)+x^12+x^(9n^2-6n+4)+x^(9n^2-3n+1))",
            |p| { let n = &z(p[0]); poly(&[(n.clone(), z(16)), (n.clone(), n * n * 9 - n * 12 + 16), (n.clone(), z(12)),
                (n.clone(), n * n * 9 - n * 6 + 4), (n.clone(), n * n * 9 - n * 3 + 1)]) }),
        oracle!("RL3exp/sunflower", Sunflower, "RL_3(x)", "n >= 3", n_ge_3, "n(x^16+x^(15n-4)+x^6+x^(9n-2)+x)",
            |p| { let n = &z(p[0]); poly(&[(n.clone(), z(16)), (n.clone(), n * 15 - 4), (n.clone(), z(6)),
                (n.clone(), n * 9 - 2), (n.clone(), z(1))]) }),
        oracle!("RL4exp/sunflower", Sunflower, "RL_4(x)", "n >= 3", n_ge_3,
            "n(x^16+x^(12n|3n-4|)+x^(6n|3n-2|)+x^(3n|3n-1|)+1)",
            |p| { let n = &z(p[0]); poly(&[(n.clone(), z(16)), (n.clone(), n * 12 * abs(n * 3 - 4)),
                (n.clone(), n * 6 * abs(n * 3 - 2)), (n.clone(), n * 3 * abs(n * 3 - 1)), (n.clone(), z(0))]) }),

        // Banhatti
        oracle!("BRL1/regular", Regular, "BRL_1", "r-regular, n vertices", r_ge_1, "6nr((r-1)/(n-r))^2",
            |p| val(z(6 * p[0] * p[1]) * pw(&(z(p[1] - 1) / z(p[0] - p[1])), 2))),
        oracle!("BRL2/regular", Regular, "BRL_2", "r-regular, n vertices", r_ge_1, "2nr((r-1)/(n-r))^2",
            |p| val(z(2 * p[0] * p[1]) * pw(&(z(p[1] - 1) / z(p[0] - p[1])), 2))),
        oracle!("BRL3/regular", Regular, "BRL_3", "r-regular, n vertices", r_ge_1, "2nr(r-1)^2/(n-r)^2",
            |p| val(z(2 * p[0] * p[1]) * ip(p[1] - 1, 2) / ip(p[0] - p[1], 2))),
        oracle!("BRL4/regular", Regular, "BRL_4", "r-regular, n vertices", r_ge_1, "2nr((r-1)/(n-r))^2",
            |p| val(z(2 * p[0] * p[1]) * pw(&(z(p[1] - 1) / z(p[0] - p[1])), 2))),
        oracle!("BRL1/cycle", Cycle, "BRL_1", "n >= 3", n_ge_3, "12n(1/(n-2))^2",
            |p| val(z(12 * p[0]) / ip(p[0] - 2, 2))),
        oracle!("BRL2/cycle", Cycle, "BRL_2", "n >= 3", n_ge_3, "4n(1/(n-2))^2",
            |p| val(z(4 * p[0]) / ip(p[0] - 2, 2))),
        oracle!("BRL3/cycle", Cycle, "BRL_3", "n >= 3", n_ge_3, "4n/(n-2)",
            |p| val(z(4 * p[0]) / z(p[0] - 2))),
        oracle!("BRL4/cycle", Cycle, "BRL_4", "n >= 3", n_ge_3, "0", |_| val(z(0))),
        oracle!("BRL1/complete", Complete, "BRL_1", "n >= 2", n_ge_2, "6n(n-1)(n-2)^2",
            |p| val(z(6 * p[0] * (p[0] - 1)) * ip(p[0] - 2, 2))),
        oracle!("BRL2/complete", Complete, "BRL_2", "n >= 2", n_ge_2, "2n(n-1)(n-2)^2",
            |p| val(z(2 * p[0] * (p[0] - 1)) * ip(p[0] - 2, 2))),
        oracle!("BRL3/complete", Complete, "BRL_3", "n >= 2", n_ge_2, "2n(n-1)(n-2)^2",
            |p| val(z(2 * p[0] * (p[0] - 1)) * ip(p[0] - 2, 2))),
        oracle!("BRL4/complete", Complete, "BRL_4", "n >= 2", n_ge_2, "0", |_| val(z(0))),
        oracle!("BRL1/path", Path, "BRL_1", "n >= 3", n_ge_3,
            "[2(n-1)^2+2(n-2)^2+2(n-1)(n-2)+12(n-1)^2(n-3)]/((n-1)^2(n-2)^2)",
            |p| { let n = &z(p[0]); let (a, b) = (n - 1, n - 2);
                val((&a * &a * 2 + &b * &b * 2 + &a * &b * 2 + &a * &a * 12 * (n - 3)) / (&a * &a * &b * &b)) }),
        oracle!("BRL2/path", Path, "BRL_2", "n >= 3", n_ge_3,
            "[2(n-1)^2+2(n-2)^2-2(n-1)(n-2)+4(n-1)^2(n-3)]/((n-1)^2(n-2)^2)",
            |p| { let n = &z(p[0]); let (a, b) = (n - 1, n - 2);
                val((&a * &a * 2 + &b * &b * 2 - &a * &b * 2 + &a * &a * 4 * (n - 3)) / (&a * &a * &b * &b)) }),
        oracle!("BRL3/path", Path, "BRL_3", "n >= 3", n_ge_3, "2|n^2-6n+10|/((n-1)(n-2)^2)",
            |p| { let n = &z(p[0]); val(abs(n * n - n * 6 + 10) * 2 / ((n - 1) * pw(&(n - 2), 2))) }),
        oracle!("BRL4/path", Path, "BRL_4", "n >= 3", n_ge_3, "4|n|/((n-1)^2(n-2)^2)",
            |p| { let n = &z(p[0]); val(abs(n.clone()) * 4 / (pw(&(n - 1), 2) * pw(&(n - 2), 2))) }),
        oracle!("BRL1/bipartite", CompleteBipartite, "BRL_1", "1 <= m <= n, n >= 2", m_le_n, "(m+n-2)^2(m^2+n^2+mn)/(mn)",
            |p| { let (m, n) = (&z(p[0]), &z(p[1])); val(pw(&(m + n - 2), 2) * (m * m + n * n + m * n) / (m * n)) }),
        oracle!("BRL2/bipartite", CompleteBipartite, "BRL_2", "1 <= m <= n, n >= 2", m_le_n, "(m+n-2)^2(m^2+n^2-mn)/(mn)",
            |p| { let (m, n) = (&z(p[0]), &z(p[1])); val(pw(&(m + n - 2), 2) * (m * m + n * n - m * n) / (m * n)) }),
        oracle!("BRL3/bipartite", CompleteBipartite, "BRL_3", "m > n >= 2", m_gt_n, "2(m+n-2)(m-1)",
            |p| val(z(2 * (p[0] + p[1] - 2) * (p[0] - 1)))),
        oracle!("BRL4/bipartite", CompleteBipartite, "BRL_4", "m > n >= 2", m_gt_n, "(m+n-2)^4|m-n|/(mn)",
            |p| { let (m, n) = (&z(p[0]), &z(p[1])); val(pw(&(m + n - 2), 4) * abs(m - n) / (m * n)) }),
        oracle!("BRL1/bipartite_nn", CompleteBipartite, "BRL_1", "m = n >= 2", m_eq_n, "12(n-1)^2",
            |p| val(ip(p[1] - 1, 2) * 12)),
        oracle!("BRL2/bipartite_nn", CompleteBipartite, "BRL_2", "m = n >= 2", m_eq_n, "(n-1)^2",
            |p| val(ip(p[1] - 1, 2))),
        oracle!("BRL3/bipartite_nn", CompleteBipartite, "BRL_3", "m = n >= 2", m_eq_n, "4(n-1)^2",
            |p| val(ip(p[1] - 1, 2) * 4)),
        oracle!("BRL4/bipartite_nn", CompleteBipartite, "BRL_4", "m = n >= 2", m_eq_n, "0", |_| val(z(0))),
        oracle!("BRL1/bipartite_1n", CompleteBipartite, "BRL_1", "m = 1, n >= 2", m_is_1, "(n-1)^2(n^2+n+1)/n",
            |p| { let n = &z(p[1]); val(pw(&(n - 1), 2) * (n * n + n + 1) / n) }),
        oracle!("BRL2/bipartite_1n", CompleteBipartite, "BRL_2", "m = 1, n >= 2", m_is_1, "(n-1)^2(n^2+1-n)/n",
            |p| { let n = &z(p[1]); val(pw(&(n - 1), 2) * (n * n + 1 - n) / n) }),
        oracle!("BRL3/bipartite_1n", CompleteBipartite, "BRL_3", "m = 1, n >= 2", m_is_1, "2(n-1)^2",
            |p| val(ip(p[1] - 1, 2) * 2)),
        oracle!("BRL4/bipartite_1n", CompleteBipartite, "BRL_4", "m = 1, n >= 2", m_is_1, "(n-1)^3|1-n|/n",
            |p| { let n = &z(p[1]); val(pw(&(n - 1), 3) * abs(1 - n) / n) }),
        oracle!("BRL1/wheel", Wheel, "BRL_1", "n >= 3", n_ge_3, "n/(n-2)^2((n+1)^2(n^2-3n+3)+48)",
            |p| { let n = &z(p[0]); val(n / pw(&(n - 2), 2) * (pw(&(n + 1), 2) * (n * n - n * 3 + 3) + 48)) }),
        oracle!("BRL2/wheel", Wheel, "BRL_2", "n >= 3", n_ge_3, "n/(n-2)^2((n+1)^2(n^2-5n+7)+16)",
            |p| { let n = &z(p[0]); val(n / pw(&(n - 2), 2) * (pw(&(n + 1), 2) * (n * n - n * 5 + 7) + 16)) }),
        oracle!("BRL3/wheel", Wheel, "BRL_3", "n >= 3", n_ge_3,
            "n/(n-2)^2[(n+1)(n-2)-(n+1)(n-2)^2+(n+1)^2+16]",
            |p| { let n = &z(p[0]); val(n / pw(&(n - 2), 2)
                * ((n + 1) * (n - 2) - (n + 1) * pw(&(n - 2), 2) + pw(&(n + 1), 2) + 16)) }),
        oracle!("BRL4/wheel", Wheel, "BRL_4", "n >= 3", n_ge_3, "n|n-1|(n+1)^3/(n-2)",
            |p| { let n = &z(p[0]); val(n * abs(n - 1) * pw(&(n + 1), 3) / (n - 2)) }),
        oracle!("BRL1exp/wheel", Wheel, "BRL_1(x)", "n >= 3", n_ge_3,
            "nx^(48/(n-2)^2)+nx^((n+1)^2(n^2-3n+3)/(n-2)^2)",
            |p| { let n = &z(p[0]); let d = pw(&(n - 2), 2);
                poly(&[(n.clone(), z(48) / &d), (n.clone(), pw(&(n + 1), 2) * (n * n - n * 3 + 3) / &d)]) }),
        oracle!("BRL2exp/wheel", Wheel, "BRL_2(x)", "n >= 3", n_ge_3,
            "nx^(16/(n-2)^2)+nx^((n+1)^2(n^2-5n+7)/(n-2)^2)",
            |p| { let n = &z(p[0]); let d = pw(&(n - 2), 2);
                poly(&[(n.clone(), z(16) / &d), (n.clone(), pw(&(n + 1), 2) * (n * n - n * 5 + 7) / &d)]) }),
        oracle!("BRL3exp/wheel", Wheel, "BRL_3(x)", "n >= 3", n_ge_3, "nx^(16/(n-2)^2)+nx^(4(n+1)/(n-2))",
            |p| { let n = &z(p[0]);
                poly(&[(n.clone(), z(16) / pw(&(n - 2), 2)), (n.clone(), (n + 1) * 4 / (n - 2))]) }),
        oracle!("BRL4exp/wheel", Wheel, "BRL_4(x)", "n >= 3", n_ge_3, "n+nx^((n+1)^3|n-3|/(n-2)^2)",
            |p| { let n = &z(p[0]);
                poly(&[(n.clone(), z(0)), (n.clone(), pw(&(n + 1), 3) * abs(n - 3) / pw(&(n - 2), 2))]) }),
        oracle!("BRL1/sunflower", Sunflower, "BRL_1", "n >= 3", n_ge_3,
            "12n/(n-1)^2+n(3n+2)^2((3n-3)^2+(3n+2)(3n-3)+1)/(3n-3)^2+16n(1/(3n-1)^2+1/(3n-3)^2+1/((3n-1)(3n-3)))+3n^3(1+1/(3n-1)^2+1/(3n-1))+n(3n-1)^2(1/(9n^2)+1+1/(3n))",
            |p| val(sunflower_brl_1_2(&z(p[0]), 1))),
        oracle!("BRL2/sunflower", Sunflower, "BRL_2", "n >= 3", n_ge_3,
            "4n/(n-1)^2+n(3n+2)^2((3n-3)^2-(3n+2)(3n-3)+1)/(3n-3)^2+16n(1/(3n-1)^2+1/(3n-3)^2-1/((3n-1)(3n-3)))+3n^3(1+1/(3n-1)^2-1/(3n-1))+n(3n-1)^2(1/(9n^2)+1-1/(3n))",
            |p| val(sunflower_brl_1_2(&z(p[0]), -1))),
        oracle!("BRL3/sunflower", Sunflower, "BRL_3", "n >= 3", n_ge_3,
            "4n/(n-1)^2+3n^2(3n+2)/(3n-3)+8n/((3n-1)(3n-3))+18n^2/(3n-1)",
            |p| { let n = &z(p[0]);
                val(n * 4 / pw(&(n - 1), 2) + n * n * 3 * (n * 3 + 2) / (n * 3 - 3)
                    + n * 8 / ((n * 3 - 1) * (n * 3 - 3)) + n * n * 18 / (n * 3 - 1)) }),
        oracle!("BRL4/sunflower", Sunflower, "BRL_4", "n >= 3", n_ge_3,
            "4n(3n+2)^2|3n-4|/(3n-3)^2+128n/((3n-1)^2(3n-3)^2)+27n^4|3n-2|/(3n-1)^2+n(3n-1)^3|1-3n|/(9n^2)",
            |p| { let n = &z(p[0]);
                val(n * 4 * pw(&(n * 3 + 2), 2) * abs(n * 3 - 4) / pw(&(n * 3 - 3), 2)
                    + n * 128 / (pw(&(n * 3 - 1), 2) * pw(&(n * 3 - 3), 2))
                    + pw(n, 4) * 27 * abs(n * 3 - 2) / pw(&(n * 3 - 1), 2)
                    + n * pw(&(n * 3 - 1), 3) * abs(1 - n * 3) / (n * n * 9)) }),

        // Revan degree
        oracle!("RRL1/regular", Regular, "RRL_1", "r-regular, n vertices", r_ge_1, "3nr^3/2",
            |p| val(z(3 * p[0]) * ip(p[1], 3) / 2)),
        oracle!("RRL2/regular", Regular, "RRL_2", "r-regular, n vertices", r_ge_1, "nr^3/2",
            |p| val(z(p[0]) * ip(p[1], 3) / 2)),
        oracle!("RRL3/regular", Regular, "RRL_3", "r-regular, n vertices", r_ge_1, "nr^3/2",
            |p| val(z(p[0]) * ip(p[1], 3) / 2)),
        oracle!("RRL4/regular", Regular, "RRL_4", "r-regular, n vertices", r_ge_1, "0", |_| val(z(0))),
        oracle!("RRL1/cycle", Cycle, "RRL_1", "n >= 3", n_ge_3, "12n", |p| val(z(12 * p[0]))),
        oracle!("RRL2/cycle", Cycle, "RRL_2", "n >= 3", n_ge_3, "4n", |p| val(z(4 * p[0]))),
        oracle!("RRL3/cycle", Cycle, "RRL_3", "n >= 3", n_ge_3, "4n", |p| val(z(4 * p[0]))),
        oracle!("RRL4/cycle", Cycle, "RRL_4", "n >= 3", n_ge_3, "0", |_| val(z(0))),
        oracle!("RRL1/complete", Complete, "RRL_1", "n >= 2", n_ge_2, "3n(n-1)^3/2",
            |p| val(z(3 * p[0]) * ip(p[0] - 1, 3) / 2)),
        oracle!("RRL2/complete", Complete, "RRL_2", "n >= 2", n_ge_2, "n(n-1)^3/2",
            |p| val(z(p[0]) * ip(p[0] - 1, 3) / 2)),
        oracle!("RRL3/complete", Complete, "RRL_3", "n >= 2", n_ge_2, "n(n-1)^3/2",
            |p| val(z(p[0]) * ip(p[0] - 1, 3) / 2)),
        oracle!("RRL4/complete", Complete, "RRL_4", "n >= 2", n_ge_2, "0", |_| val(z(0))),
        oracle!("RRL1/path", Path, "RRL_1", "n >= 3", n_ge_3, "3n+5", |p| val(z(3 * p[0] + 5))),
        oracle!("RRL2/path", Path, "RRL_2", "n >= 3", n_ge_3, "n+3", |p| val(z(p[0] + 3))),
        oracle!("RRL3/path", Path, "RRL_3", "n >= 3", n_ge_3, "n+3", |p| val(z(p[0] + 3))),
        oracle!("RRL4/path", Path, "RRL_4", "n >= 3", n_ge_3, "4", |_| val(z(4))),
        oracle!("RRL1/bipartite", CompleteBipartite, "RRL_1", "1 <= m <= n, n >= 2", m_le_n, "mn(m^2+n^2+mn)",
            |p| { let (m, n) = (&z(p[0]), &z(p[1])); val(m * n * (m * m + n * n + m * n)) }),
        oracle!("RRL2/bipartite", CompleteBipartite, "RRL_2", "1 <= m <= n, n >= 2", m_le_n, "mn(m^2+n^2-mn)",
            |p| { let (m, n) = (&z(p[0]), &z(p[1])); val(m * n * (m * m + n * n - m * n)) }),
        oracle!("RRL3/bipartite", CompleteBipartite, "RRL_3", "1 <= m <= n, n >= 2", m_le_n, "mn(n-m+mn)",
            |p| { let (m, n) = (&z(p[0]), &z(p[1])); val(m * n * (n - m + m * n)) }),
        oracle!("RRL4/bipartite", CompleteBipartite, "RRL_4", "1 <= m <= n, n >= 2", m_le_n, "m^2n^2|n-m|",
            |p| { let (m, n) = (&z(p[0]), &z(p[1])); val(m * m * n * n * abs(n - m)) }),
        oracle!("RRL1/wheel", Wheel, "RRL_1", "n >= 3", n_ge_3, "n(4n^2+3n+9)",
            |p| { let n = &z(p[0]); val(n * (n * n * 4 + n * 3 + 9)) }),
        oracle!("RRL2/wheel", Wheel, "RRL_2", "n >= 3", n_ge_3, "n(2n^2-3n+9)",
            |p| { let n = &z(p[0]); val(n * (n * n * 2 - n * 3 + 9)) }),
        oracle!("RRL3/wheel", Wheel, "RRL_3", "n >= 3", n_ge_3, "n(n^2+4n-3)",
            |p| { let n = &z(p[0]); val(n * (n * n + n * 4 - 3)) }),
        oracle!("RRL4/wheel", Wheel, "RRL_4", "n >= 3", n_ge_3, "3n^2|n-3|",
            |p| { let n = &z(p[0]); val(n * n * 3 * abs(n - 3)) }),
        oracle!("RRL1/sunflower", Sunflower, "RRL_1", "n >= 3", n_ge_3, "n(54n^2-42n+31)",
            |p| { let n = &z(p[0]); val(n * (n * n * 54 - n * 42 + 31)) }),
        oracle!("RRL2/sunflower", Sunflower, "RRL_2", "n >= 3", n_ge_3, "n(45n^2-36n+27)",
            |p| { let n = &z(p[0]); val(n * (n * n * 45 - n * 36 + 27)) }),
        oracle!("RRL3/sunflower", Sunflower, "RRL_3", "n >= 3", n_ge_3, "n(18n^2+3n+9)",
            |p| { let n = &z(p[0]); val(n * (n * n * 18 + n * 3 + 9)) }),
        oracle!("RRL4/sunflower", Sunflower, "RRL_4", "n >= 3", n_ge_3,
            "2n(3n-2)|4-3n|+6n^2(3n-2)+6n^2|2-3n|+2n(3n+1)|3n-1|",
            |p| { let n = &z(p[0]);
                val(n * 2 * (n * 3 - 2) * abs(4 - n * 3) + n * n * 6 * (n * 3 - 2)
                    + n * n * 6 * abs(2 - n * 3) + n * 2 * (n * 3 + 1) * abs(n * 3 - 1)) }),

        // domination degree
        oracle!("DRL1/complete", Complete, "DRL_1", "n >= 2", n_ge_2, "3n(n-1)/2",
            |p| val(z(3 * p[0] * (p[0] - 1)) / 2)),
        oracle!("DRL2/complete", Complete, "DRL_2", "n >= 2", n_ge_2, "n(n-1)/2",
            |p| val(z(p[0] * (p[0] - 1)) / 2)),
        oracle!("DRL3/complete", Complete, "DRL_3", "n >= 2", n_ge_2, "n(n-1)/2",
            |p| val(z(p[0] * (p[0] - 1)) / 2)),
        oracle!("DRL4/complete", Complete, "DRL_4", "n >= 2", n_ge_2, "0", |_| val(z(0))),
        oracle!("DRL1/star", Star, "DRL_1", "n >= 2", n_ge_2, "3n", |p| val(z(3 * p[0]))),
        oracle!("DRL2/star", Star, "DRL_2", "n >= 2", n_ge_2, "n", |p| val(z(p[0]))),
        oracle!("DRL3/star", Star, "DRL_3", "n >= 2", n_ge_2, "n", |p| val(z(p[0]))),
        oracle!("DRL4/star", Star, "DRL_4", "n >= 2", n_ge_2, "0", |_| val(z(0))),
        oracle!("DRL1/double_star", DoubleStar, "DRL_1", "p, q >= 1", p_q_ge_1, "12(p+q+1)",
            |p| val(z(12 * (p[0] + p[1] + 1)))),
        oracle!("DRL2/double_star", DoubleStar, "DRL_2", "p, q >= 1", p_q_ge_1, "4(p+q+1)",
            |p| val(z(4 * (p[0] + p[1] + 1)))),
        oracle!("DRL3/double_star", DoubleStar, "DRL_3", "p, q >= 1", p_q_ge_1, "4(p+q+1)",
            |p| val(z(4 * (p[0] + p[1] + 1)))),
        oracle!("DRL4/double_star", DoubleStar, "DRL_4", "p, q >= 1", p_q_ge_1, "0", |_| val(z(0))),
        oracle!("DRL1/bipartite", CompleteBipartite, "DRL_1", "2 <= m <= n", two_le_m_le_n, "mn(m^2+n^2+mn+3m+3n+3)",
            |p| { let (m, n) = (&z(p[0]), &z(p[1])); val(m * n * (m * m + n * n + m * n + m * 3 + n * 3 + 3)) }),
        oracle!("DRL2/bipartite", CompleteBipartite, "DRL_2", "2 <= m <= n", two_le_m_le_n, "mn(m^2+n^2-mn+m+n+1)",
            |p| { let (m, n) = (&z(p[0]), &z(p[1])); val(m * n * (m * m + n * n - m * n + m + n + 1)) }),
        oracle!("DRL3/bipartite", CompleteBipartite, "DRL_3", "2 <= m <= n", two_le_m_le_n, "mn(mn+2n+1)",
            |p| { let (m, n) = (&z(p[0]), &z(p[1])); val(m * n * (m * n + n * 2 + 1)) }),
        oracle!("DRL4/bipartite", CompleteBipartite, "DRL_4", "2 <= m <= n", two_le_m_le_n, "mn|n-m|(m+1)(n+1)",
            |p| { let (m, n) = (&z(p[0]), &z(p[1])); val(m * n * abs(n - m) * (m + 1) * (n + 1)) }),
        oracle!("DRL1exp/complete", Complete, "DRL_1(x)", "n >= 2", n_ge_2, "n(n-1)/2 x^3",
            |p| poly(&[(z(p[0] * (p[0] - 1) / 2), z(3))])),
        oracle!("DRL2exp/complete", Complete, "DRL_2(x)", "n >= 2", n_ge_2, "n(n-1)/2 x",
            |p| poly(&[(z(p[0] * (p[0] - 1) / 2), z(1))])),
        oracle!("DRL3exp/complete", Complete, "DRL_3(x)", "n >= 2", n_ge_2, "n(n-1)/2 x",
            |p| poly(&[(z(p[0] * (p[0] - 1) / 2), z(1))])),
        oracle!("DRL4exp/complete", Complete, "DRL_4(x)", "n >= 2", n_ge_2, "n(n-1)/2",
            |p| poly(&[(z(p[0] * (p[0] - 1) / 2), z(0))])),
        oracle!("DRL1exp/star", Star, "DRL_1(x)", "n >= 2", n_ge_2, "nx^3", |p| poly(&[(z(p[0]), z(3))])),
        oracle!("DRL2exp/star", Star, "DRL_2(x)", "n >= 2", n_ge_2, "nx", |p| poly(&[(z(p[0]), z(1))])),
        oracle!("DRL3exp/star", Star, "DRL_3(x)", "n >= 2", n_ge_2, "nx", |p| poly(&[(z(p[0]), z(1))])),
        oracle!("DRL4exp/star", Star, "DRL_4(x)", "n >= 2", n_ge_2, "n", |p| poly(&[(z(p[0]), z(0))])),
        oracle!("DRL1exp/double_star", DoubleStar, "DRL_1(x)", "p, q >= 1", p_q_ge_1, "(p+q+1)x^12",
            |p| poly(&[(z(p[0] + p[1] + 1), z(12))])),
        oracle!("DRL2exp/double_star", DoubleStar, "DRL_2(x)", "p, q >= 1", p_q_ge_1, "(p+q+1)x^4",
            |p| poly(&[(z(p[0] + p[1] + 1), z(4))])),
        oracle!("DRL1exp/bipartite", CompleteBipartite, "DRL_1(x)", "2 <= m <= n", two_le_m_le_n,
            "mnx^(m^2+n^2+mn+3m+3n+3)",
            |p| { let (m, n) = (&z(p[0]), &z(p[1])); poly(&[(m * n, m * m + n * n + m * n + m * 3 + n * 3 + 3)]) }),
        oracle!("DRL2exp/bipartite", CompleteBipartite, "DRL_2(x)", "2 <= m <= n", two_le_m_le_n,
            "mnx^(m^2+n^2-mn+m+n+1)",
            |p| { let (m, n) = (&z(p[0]), &z(p[1])); poly(&[(m * n, m * m + n * n - m * n + m + n + 1)]) }),
        oracle!("DRL1/windmill", FrenchWindmill, "DRL_1", "n >= 3, m >= 3", windmill_range,
            "m(n-1)[(n-1)^(2(m-1))+(n-1)^(m-1)+1]+3[mn(n-1)(n-2)/2](n-1)^(2(m-1))",
            |p| val(windmill_drl(p[0], p[1], 1))),
        oracle!("DRL2/windmill", FrenchWindmill, "DRL_2", "n >= 3, m >= 3", windmill_range,
            "m(n-1)[(n-1)^(2(m-1))-(n-1)^(m-1)+1]+[mn(n-1)(n-2)/2](n-1)^(2(m-1))",
            |p| val(windmill_drl(p[0], p[1], -1))),

        // temperature
        oracle!("TRL1/regular", Regular, "TRL_1", "r-regular, n vertices", r_ge_1, "3nr^3/(2(n-r)^2)",
            |p| val(z(3 * p[0]) * ip(p[1], 3) / (ip(p[0] - p[1], 2) * 2))),
        oracle!("TRL2/regular", Regular, "TRL_2", "r-regular, n vertices", r_ge_1, "nr^3/(2(n-r)^2)",
            |p| val(z(p[0]) * ip(p[1], 3) / (ip(p[0] - p[1], 2) * 2))),
        oracle!("TRL3/regular", Regular, "TRL_3", "r-regular, n vertices", r_ge_1, "3nr^3/(2(n-r)^2)",
            |p| val(z(3 * p[0]) * ip(p[1], 3) / (ip(p[0] - p[1], 2) * 2))),
        oracle!("TRL4/regular", Regular, "TRL_4", "r-regular, n vertices", r_ge_1, "0", |_| val(z(0))),
        oracle!("TRL1/cycle", Cycle, "TRL_1", "n >= 3", n_ge_3, "12n/(n-2)^2",
            |p| val(z(12 * p[0]) / ip(p[0] - 2, 2))),
        oracle!("TRL2/cycle", Cycle, "TRL_2", "n >= 3", n_ge_3, "4n/(n-2)^2",
            |p| val(z(4 * p[0]) / ip(p[0] - 2, 2))),
        oracle!("TRL3/cycle", Cycle, "TRL_3", "n >= 3", n_ge_3, "4n/(n-2)^2",
            |p| val(z(4 * p[0]) / ip(p[0] - 2, 2))),
        oracle!("TRL4/cycle", Cycle, "TRL_4", "n >= 3", n_ge_3, "0", |_| val(z(0))),
        oracle!("TRL1/complete", Complete, "TRL_1", "n >= 2", n_ge_2, "3n(n-1)^3/2",
            |p| val(z(3 * p[0]) * ip(p[0] - 1, 3) / 2)),
        oracle!("TRL2/complete", Complete, "TRL_2", "n >= 2", n_ge_2, "n(n-1)^3/2",
            |p| val(z(p[0]) * ip(p[0] - 1, 3) / 2)),
        oracle!("TRL3/complete", Complete, "TRL_3", "n >= 2", n_ge_2, "n(n-1)^3/2",
            |p| val(z(p[0]) * ip(p[0] - 1, 3) / 2)),
        oracle!("TRL4/complete", Complete, "TRL_4", "n >= 2", n_ge_2, "0", |_| val(z(0))),
        oracle!("TRL1/path", Path, "TRL_1", "n >= 3", n_ge_3,
            "2[4(n-1)^2+(n-2)^2+2(n-1)(n-2)+6(n-3)(n-1)^2]/((n-1)^2(n-2)^2)",
            |p| { let n = &z(p[0]); let (a, b) = (n - 1, n - 2);
                val((&a * &a * 4 + &b * &b + &a * &b * 2 + (n - 3) * &a * &a * 6) * 2 / (&a * &a * &b * &b)) }),
        oracle!("TRL2/path", Path, "TRL_2", "n >= 3", n_ge_3,
            "2[2(n-1)^2+(n-2)^2-2(n-1)(n-2)]/((n-1)^2(n-2)^2)",
            |p| { let n = &z(p[0]); let (a, b) = (n - 1, n - 2);
                val((&a * &a * 2 + &b * &b - &a * &b * 2) * 2 / (&a * &a * &b * &b)) }),
        oracle!("TRL3/path", Path, "TRL_3", "n >= 3", n_ge_3,
            "2[4(n-1)^2+(n-2)^2+2(n-1)(n-2)+6(n-3)(n-1)^2]/((n-1)^2(n-2)^2)",
            |p| { let n = &z(p[0]); let (a, b) = (n - 1, n - 2);
                val((&a * &a * 4 + &b * &b + &a * &b * 2 + (n - 3) * &a * &a * 6) * 2 / (&a * &a * &b * &b)) }),
        oracle!("TRL4/path", Path, "TRL_4", "n >= 3", n_ge_3,
            "2[2(n-1)^2+(n-2)^2-2(n-1)(n-2)]/((n-1)^2(n-2)^2)",
            |p| { let n = &z(p[0]); let (a, b) = (n - 1, n - 2);
                val((&a * &a * 2 + &b * &b - &a * &b * 2) * 2 / (&a * &a * &b * &b)) }),
        oracle!("TRL1/bipartite", CompleteBipartite, "TRL_1", "1 <= m <= n, n >= 2", m_le_n, "mn(m^2+n^2+mn)",
            |p| { let (m, n) = (&z(p[0]), &z(p[1])); val(m * n * (m * m + n * n + m * n)) }),
        oracle!("TRL2/bipartite", CompleteBipartite, "TRL_2", "1 <= m <= n, n >= 2", m_le_n, "mn(m^2+n^2-mn)",
            |p| { let (m, n) = (&z(p[0]), &z(p[1])); val(m * n * (m * m + n * n - m * n)) }),
        oracle!("TRL1/wheel", Wheel, "TRL_1", "n >= 3", n_ge_3, "n[36/(n-2)^2+(n+1)n^2/(n-2)]",
            |p| { let n = &z(p[0]); val(n * (z(36) / pw(&(n - 2), 2) + (n + 1) * n * n / (n - 2))) }),
        oracle!("TRL2/wheel", Wheel, "TRL_2", "n >= 3", n_ge_3, "n[18/(n-2)^2-(n-5)n^2/(n-2)]",
            |p| { let n = &z(p[0]); val(n * (z(18) / pw(&(n - 2), 2) - (n - 5) * n * n / (n - 2))) }),
        oracle!("TRL1/sunflower", Sunflower, "TRL_1", "n >= 3", n_ge_3,
            "n[5/(n-1)^2+27n^2+8/(3n-1)^2+1/(9n^2)+6n/(3n-1)+3n/(n-1)+2/((3n-1)(n-1))+1]",
            |p| val(sunflower_trl(&z(p[0]), 1))),
        oracle!("TRL2/sunflower", Sunflower, "TRL_2", "n >= 3", n_ge_3,
            "n[3/(n-1)^2+27n^2+8/(3n-1)^2+1/(9n^2)-6n/(3n-1)-3n/(n-1)-2/((3n-1)(n-1))-1]",
            |p| val(sunflower_trl(&z(p[0]), -1))),
        oracle!("TRL3/sunflower", Sunflower, "TRL_3", "n >= 3", n_ge_3,
            "n[5/(n-1)^2+27n^2+8/(3n-1)^2+1/(9n^2)+6n/(3n-1)+3n/(n-1)+2/((3n-1)(n-1))+1]",
            |p| val(sunflower_trl(&z(p[0]), 1))),
        oracle!("TRL4/sunflower", Sunflower, "TRL_4", "n >= 3", n_ge_3,
            "n[3/(n-1)^2+27n^2+8/(3n-1)^2+1/(9n^2)-6n/(3n-1)-3n/(n-1)-2/((3n-1)(n-1))-1]",
            |p| val(sunflower_trl(&z(p[0]), -1))),

        // KV functional
        oracle!("RLKV1/regular", Regular, "RLKV_1", "r-regular, n vertices", r_ge_1, "3nr^(3r)/2",
            |p| val(z(3 * p[0]) * ip(p[1], 3 * p[1]) / 2)),
        oracle!("RLKV2/regular", Regular, "RLKV_2", "r-regular, n vertices", r_ge_1, "nr^(3r)/2",
            |p| val(z(p[0]) * ip(p[1], 3 * p[1]) / 2)),
        oracle!("RLKV3/regular", Regular, "RLKV_3", "r-regular, n vertices", r_ge_1, "3nr^(2r+1)/2",
            |p| val(z(3 * p[0]) * ip(p[1], 2 * p[1] + 1) / 2)),
        oracle!("RLKV4/regular", Regular, "RLKV_4", "r-regular, n vertices", r_ge_1, "0", |_| val(z(0))),
        oracle!("RLKV1/cycle", Cycle, "RLKV_1", "n >= 3", n_ge_3, "96n", |p| val(z(96 * p[0]))),
        oracle!("RLKV2/cycle", Cycle, "RLKV_2", "n >= 3", n_ge_3, "16n", |p| val(z(16 * p[0]))),
        oracle!("RLKV3/cycle", Cycle, "RLKV_3", "n >= 3", n_ge_3, "16n", |p| val(z(16 * p[0]))),
        oracle!("RLKV4/cycle", Cycle, "RLKV_4", "n >= 3", n_ge_3, "0", |_| val(z(0))),
        oracle!("RLKV1/complete", Complete, "RLKV_1", "n >= 2", n_ge_2, "3n(n-1)^(n-1)/2",
            |p| val(z(3 * p[0]) * ip(p[0] - 1, p[0] - 1) / 2)),
        oracle!("RLKV2/complete", Complete, "RLKV_2", "n >= 2", n_ge_2, "n(n-1)^(n-1)/2",
            |p| val(z(p[0]) * ip(p[0] - 1, p[0] - 1) / 2)),
        oracle!("RLKV3/complete", Complete, "RLKV_3", "n >= 2", n_ge_2, "n(n-1)^(2(n-1)+1)/2",
            |p| val(z(p[0]) * ip(p[0] - 1, 2 * (p[0] - 1) + 1) / 2)),
        oracle!("RLKV4/complete", Complete, "RLKV_4", "n >= 2", n_ge_2, "0", |_| val(z(0))),
        oracle!("RLKV1/path", Path, "RLKV_1", "n >= 3", n_ge_3, "24(2n-5)", |p| val(z(24 * (2 * p[0] - 5)))),
        oracle!("RLKV2/path", Path, "RLKV_2", "n >= 3", n_ge_3, "8(2n-5)", |p| val(z(8 * (2 * p[0] - 5)))),
        oracle!("RLKV3/path", Path, "RLKV_3", "n >= 3", n_ge_3, "16n-40", |p| val(z(16 * p[0] - 40))),
        oracle!("RLKV4/path", Path, "RLKV_4", "n >= 3", n_ge_3, "0", |_| val(z(0))),
        oracle!("RLKV1/bipartite", CompleteBipartite, "RLKV_1", "1 <= m <= n, n >= 2", m_le_n, "mn(m^(2n)+n^(2m)+m^n n^m)",
            |p| { let (m, n) = (p[0], p[1]); val(z(m * n) * (ip(m, 2 * n) + ip(n, 2 * m) + ip(m, n) * ip(n, m))) }),
        oracle!("RLKV2/bipartite", CompleteBipartite, "RLKV_2", "1 <= m <= n, n >= 2", m_le_n, "mn(m^(2n)+n^(2m)-m^n n^m)",
            |p| { let (m, n) = (p[0], p[1]); val(z(m * n) * (ip(m, 2 * n) + ip(n, 2 * m) - ip(m, n) * ip(n, m))) }),
        oracle!("RLKV3/bipartite", CompleteBipartite, "RLKV_3", "1 <= m <= n, n >= 2", m_le_n, "mn(m^n-n^m+m^n n^m)",
            |p| { let (m, n) = (p[0], p[1]); val(z(m * n) * (ip(m, n) - ip(n, m) + ip(m, n) * ip(n, m))) }),
        oracle!("RLKV4/bipartite", CompleteBipartite, "RLKV_4", "1 <= m <= n, n >= 2", m_le_n, "|m^n-n^m| m^(n+1) n^(m+1)",
            |p| { let (m, n) = (p[0], p[1]); val(abs(ip(m, n) - ip(n, m)) * ip(m, n + 1) * ip(n, m + 1)) }),
        oracle!("RLKV1/wheel", Wheel, "RLKV_1", "n >= 3", n_ge_3, "n(324n^2+3^n(3^n+9n))",
            |p| { let n = p[0]; val(z(n) * (z(324 * n * n) + ip(3, n) * (ip(3, n) + 9 * n))) }),
        oracle!("RLKV2/wheel", Wheel, "RLKV_2", "n >= 3", n_ge_3, "n(162n^2+3^n(3^n-9n))",
            |p| { let n = p[0]; val(z(n) * (z(162 * n * n) + ip(3, n) * (ip(3, n) - 9 * n))) }),
        oracle!("RLKV3/wheel", Wheel, "RLKV_3", "n >= 3", n_ge_3, "n(81n^2+(9n+1)3^n-9n)",
            |p| { let n = p[0]; val(z(n) * (z(81 * n * n) + ip(3, n) * (9 * n + 1) - 9 * n)) }),
        oracle!("RLKV4/wheel", Wheel, "RLKV_4", "n >= 3", n_ge_3, "n|3^n-9n| 3^n 9n",
            |p| { let n = p[0]; val(z(n) * abs(ip(3, n) - 9 * n) * ip(3, n) * (9 * n)) }),
        oracle!("RLKV1/sunflower", Sunflower, "RLKV_1", "n >= 3", n_ge_3, "n[47520n^2+3*2^(6n)+111n*2^(3n)]",
            |p| { let n = p[0]; val(z(n) * (z(47520 * n * n) + ip(2, 6 * n) * 3 + ip(2, 3 * n) * (111 * n))) }),
        oracle!("RLKV2/sunflower", Sunflower, "RLKV_2", "n >= 3", n_ge_3, "n[26793n^2+3*2^(6n)-111n*2^(3n)]",
            |p| { let n = p[0]; val(z(n) * (z(26793 * n * n) + ip(2, 6 * n) * 3 - ip(2, 3 * n) * (111 * n))) }),

        // neighbourhood degree sum
        oracle!("NRL1/regular", Regular, "NRL_1", "r-regular, n vertices", r_ge_1, "3nr^3(n-1)^2/2",
            |p| val(z(3 * p[0]) * ip(p[1], 3) * ip(p[0] - 1, 2) / 2)),
        oracle!("NRL2/regular", Regular, "NRL_2", "r-regular, n vertices", r_ge_1, "nr^3(n-1)^2/2",
            |p| val(z(p[0]) * ip(p[1], 3) * ip(p[0] - 1, 2) / 2)),
        oracle!("NRL3/regular", Regular, "NRL_3", "r-regular, n vertices", r_ge_1, "nr^3(n-1)^2/2",
            |p| val(z(p[0]) * ip(p[1], 3) * ip(p[0] - 1, 2) / 2)),
        oracle!("NRL4/regular", Regular, "NRL_4", "r-regular, n vertices", r_ge_1, "0", |_| val(z(0))),
        oracle!("NRL1/cycle", Cycle, "NRL_1", "n >= 3", n_ge_3, "12n(n-1)^2",
            |p| val(z(12 * p[0]) * ip(p[0] - 1, 2))),
        oracle!("NRL2/cycle", Cycle, "NRL_2", "n >= 3", n_ge_3, "4n(n-1)^2",
            |p| val(z(4 * p[0]) * ip(p[0] - 1, 2))),
        oracle!("NRL3/cycle", Cycle, "NRL_3", "n >= 3", n_ge_3, "4n(n-1)^2",
            |p| val(z(4 * p[0]) * ip(p[0] - 1, 2))),
        oracle!("NRL4/cycle", Cycle, "NRL_4", "n >= 3", n_ge_3, "0", |_| val(z(0))),
        oracle!("NRL1/complete", Complete, "NRL_1", "n >= 2", n_ge_2, "3n(n-1)^5/2",
            |p| val(z(3 * p[0]) * ip(p[0] - 1, 5) / 2)),
        oracle!("NRL2/complete", Complete, "NRL_2", "n >= 2", n_ge_2, "n(n-1)^5/2",
            |p| val(z(p[0]) * ip(p[0] - 1, 5) / 2)),
        oracle!("NRL3/complete", Complete, "NRL_3", "n >= 2", n_ge_2, "4n(n-1)^5/2",
            |p| val(z(4 * p[0]) * ip(p[0] - 1, 5) / 2)),
        oracle!("NRL4/complete", Complete, "NRL_4", "n >= 2", n_ge_2, "0", |_| val(z(0))),
        oracle!("NRL1/path", Path, "NRL_1", "n >= 3", n_ge_3, "48n-106", |p| val(z(48 * p[0] - 106))),
        oracle!("NRL2/path", Path, "NRL_2", "n >= 3", n_ge_3, "16n-34", |p| val(z(16 * p[0] - 34))),
        oracle!("NRL3/path", Path, "NRL_3", "n >= 3", n_ge_3, "48n-106", |p| val(z(48 * p[0] - 106))),
        oracle!("NRL4/path", Path, "NRL_4", "n >= 3", n_ge_3, "16n-34", |p| val(z(16 * p[0] - 34))),
        oracle!("NRL1/bipartite", CompleteBipartite, "NRL_1", "1 <= m <= n, n >= 2", m_le_n, "3(mn)^3",
            |p| val(ip(p[0] * p[1], 3) * 3)),
        oracle!("NRL2/bipartite", CompleteBipartite, "NRL_2", "1 <= m <= n, n >= 2", m_le_n, "(mn)^3",
            |p| val(ip(p[0] * p[1], 3))),
        oracle!("NRL3/bipartite", CompleteBipartite, "NRL_3", "1 <= m <= n, n >= 2", m_le_n, "m^2n^2",
            |p| val(ip(p[0] * p[1], 2))),
        oracle!("NRL4/bipartite", CompleteBipartite, "NRL_4", "1 <= m <= n, n >= 2", m_le_n, "0", |_| val(z(0))),
        oracle!("NRL1/wheel", Wheel, "NRL_1", "n >= 3", n_ge_3, "n(16n^2+66n+144)",
            |p| { let n = &z(p[0]); val(n * (n * n * 16 + n * 66 + 144)) }),
        oracle!("NRL2/wheel", Wheel, "NRL_2", "n >= 3", n_ge_3, "n(8n^2+6n+72)",
            |p| { let n = &z(p[0]); val(n * (n * n * 8 + n * 6 + 72)) }),
        oracle!("NRL3/wheel", Wheel, "NRL_3", "n >= 3", n_ge_3, "n(4n^2+28n+42)",
            |p| { let n = &z(p[0]); val(n * (n * n * 4 + n * 28 + 42)) }),
        oracle!("NRL4/wheel", Wheel, "NRL_4", "n >= 3", n_ge_3, "6n^2|3-n|(n+6)",
            |p| { let n = &z(p[0]); val(n * n * 6 * abs(3 - n) * (n + 6)) }),
        oracle!("NRL1/sunflower", Sunflower, "NRL_1", "n >= 3", n_ge_3, "n(328n^2+406n+504)",
            |p| { let n = &z(p[0]); val(n * (n * n * 328 + n * 406 + 504)) }),
        oracle!("NRL2/sunflower", Sunflower, "NRL_2", "n >= 3", n_ge_3, "2n(4n^2+3n+36)",
            |p| { let n = &z(p[0]); val(n * 2 * (n * n * 4 + n * 3 + 36)) }),
    ]
}
