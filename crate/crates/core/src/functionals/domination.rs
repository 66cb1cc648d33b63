use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_DOMINATION_MAX: usize = 24;
const HARD_LIMIT: usize = 63;

/// Size bound for the exhaustive domination solver.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DominationConfig {
    pub max_vertices: usize,
}

impl Default for DominationConfig {
    fn default() -> Self {
        DominationConfig { max_vertices: DEFAULT_DOMINATION_MAX }
    }
}

impl DominationConfig {
    /// Reads `TOPOIDX_DOMINATION_MAX`, falling back to the default bound.
    pub fn from_env() -> DominationConfig {
        let max_vertices = std::env::var("TOPOIDX_DOMINATION_MAX")
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(DEFAULT_DOMINATION_MAX)
            .min(HARD_LIMIT);
        DominationConfig { max_vertices }
    }
}

/// `d_d(v)`: the least size of a minimal dominating set containing `v`.
///
/// Subsets are enumerated by increasing size; a set counts when it dominates
/// and no set obtained by removing one element dominates.
pub fn domination_degree(g: &Graph, cfg: &DominationConfig) -> Result<Vec<usize>> {
    let n = g.vertex_count();
    let max = cfg.max_vertices.min(HARD_LIMIT);
    if n > max {
        return Err(Error::GraphTooLarge { n, max });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let closed: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(1u64 << v, |m, &w| m | (1u64 << w)))
        .collect();
    let dominates = |s: u64| {
        let mut cover = 0u64;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            cover |= closed[v];
            rest &= rest - 1;
        }
        cover == full
    };
    let minimal = |s: u64| {
        let mut rest = s;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            if dominates(s ^ bit) {
                return false;
            }
            rest ^= bit;
        }
        true
    };

    let mut result = vec![0usize; n];
    let mut open = full;
    for k in 1..=n {
        let mut s: u64 = (1u64 << k) - 1;
        while s & !full == 0 {
            if s & open != 0 && dominates(s) && minimal(s) {
                for (v, slot) in result.iter_mut().enumerate() {
                    if s & open & (1u64 << v) != 0 {
                        *slot = k;
                    }
                }
                open &= !s;
                if open == 0 {
                    return Ok(result);
                }
            }
            s = match next_combination(s) {
                Some(t) => t,
                None => break,
            };
        }
    }
    // every vertex lies in a maximal independent set, which is minimal dominating
    unreachable!("domination degree left vertices unassigned")
}

/// Next larger integer with the same popcount.
fn next_combination(s: u64) -> Option<u64> {
    let c = s & s.wrapping_neg();
    let r = s.checked_add(c)?;
    Some((((r ^ s) >> 2) / c) | r)
}
