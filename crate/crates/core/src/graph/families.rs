use std::fmt;

use super::Graph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    Regular,
    Cycle,
    Path,
    Complete,
    CompleteBipartite,
    Star,
    DoubleStar,
    Wheel,
    Sunflower,
    FrenchWindmill,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 10] = [
        FamilyKind::Regular,
        FamilyKind::Cycle,
        FamilyKind::Path,
        FamilyKind::Complete,
        FamilyKind::CompleteBipartite,
        FamilyKind::Star,
        FamilyKind::DoubleStar,
        FamilyKind::Wheel,
        FamilyKind::Sunflower,
        FamilyKind::FrenchWindmill,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Regular => "regular",
            FamilyKind::Cycle => "cycle",
            FamilyKind::Path => "path",
            FamilyKind::Complete => "complete",
            FamilyKind::CompleteBipartite => "complete_bipartite",
            FamilyKind::Star => "star",
            FamilyKind::DoubleStar => "double_star",
            FamilyKind::Wheel => "wheel",
            FamilyKind::Sunflower => "sunflower",
            FamilyKind::FrenchWindmill => "french_windmill",
        }
    }

    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            FamilyKind::Regular => &["n", "r"],
            FamilyKind::CompleteBipartite => &["m", "n"],
            FamilyKind::DoubleStar => &["p", "q"],
            FamilyKind::FrenchWindmill => &["n", "m"],
            _ => &["n"],
        }
    }

    pub fn from_name(name: &str) -> Option<FamilyKind> {
        let key = name.to_ascii_lowercase().replace('-', "_");
        let kind = match key.as_str() {
            "regular" => FamilyKind::Regular,
            "cycle" => FamilyKind::Cycle,
            "path" => FamilyKind::Path,
            "complete" => FamilyKind::Complete,
            "complete_bipartite" | "bipartite" | "kmn" => FamilyKind::CompleteBipartite,
            "star" => FamilyKind::Star,
            "double_star" | "dstar" => FamilyKind::DoubleStar,
            "wheel" => FamilyKind::Wheel,
            "sunflower" => FamilyKind::Sunflower,
            "french_windmill" | "windmill" => FamilyKind::FrenchWindmill,
            _ => return None,
        };
        Some(kind)
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A family member: kind plus parameters in `param_names` order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub params: Vec<usize>,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, params: &[usize]) -> Result<FamilySpec> {
        let spec = FamilySpec { kind, params: params.to_vec() };
        spec.validate()?;
        Ok(spec)
    }

    pub fn parse(name: &str, params: &[usize]) -> Result<FamilySpec> {
        let kind = FamilyKind::from_name(name)
            .ok_or_else(|| Error::InvalidFamilyParams(format!("unknown family `{name}`")))?;
        FamilySpec::new(kind, params)
    }

    pub fn regular(n: usize, r: usize) -> FamilySpec {
        FamilySpec { kind: FamilyKind::Regular, params: vec![n, r] }
    }
    pub fn cycle(n: usize) -> FamilySpec {
        FamilySpec { kind: FamilyKind::Cycle, params: vec![n] }
    }
    pub fn path(n: usize) -> FamilySpec {
        FamilySpec { kind: FamilyKind::Path, params: vec![n] }
    }
    pub fn complete(n: usize) -> FamilySpec {
        FamilySpec { kind: FamilyKind::Complete, params: vec![n] }
    }
    pub fn complete_bipartite(m: usize, n: usize) -> FamilySpec {
        FamilySpec { kind: FamilyKind::CompleteBipartite, params: vec![m, n] }
    }
    pub fn star(n: usize) -> FamilySpec {
        FamilySpec { kind: FamilyKind::Star, params: vec![n] }
    }
    pub fn double_star(p: usize, q: usize) -> FamilySpec {
        FamilySpec { kind: FamilyKind::DoubleStar, params: vec![p, q] }
    }
    pub fn wheel(n: usize) -> FamilySpec {
        FamilySpec { kind: FamilyKind::Wheel, params: vec![n] }
    }
    pub fn sunflower(n: usize) -> FamilySpec {
        FamilySpec { kind: FamilyKind::Sunflower, params: vec![n] }
    }
    pub fn french_windmill(n: usize, m: usize) -> FamilySpec {
        FamilySpec { kind: FamilyKind::FrenchWindmill, params: vec![n, m] }
    }

    pub fn validate(&self) -> Result<()> {
        let names = self.kind.param_names();
        if self.params.len() != names.len() {
            return Err(Error::InvalidFamilyParams(format!(
                "{} takes {} parameter(s) ({}), got {}",
                self.kind,
                names.len(),
                names.join(", "),
                self.params.len()
            )));
        }
        let p = &self.params;
        let (ok, rule) = match self.kind {
            FamilyKind::Regular => (p[1] < p[0] && (p[0] * p[1]).is_multiple_of(2), "n*r even and r < n"),
            FamilyKind::Cycle => (p[0] >= 3, "n >= 3"),
            FamilyKind::Path => (p[0] >= 2, "n >= 2"),
            FamilyKind::Complete => (p[0] >= 1, "n >= 1"),
            FamilyKind::CompleteBipartite => (p[0] >= 1 && p[1] >= 1, "m, n >= 1"),
            FamilyKind::Star => (p[0] >= 1, "n >= 1"),
            FamilyKind::DoubleStar => (p[0] >= 1 && p[1] >= 1, "p, q >= 1"),
            FamilyKind::Wheel => (p[0] >= 3, "n >= 3"),
            FamilyKind::Sunflower => (p[0] >= 3, "n >= 3"),
            FamilyKind::FrenchWindmill => (p[0] >= 3 && p[1] >= 3, "n >= 3 and m >= 3"),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidFamilyParams(format!("{self}: requires {rule}")))
        }
    }

    /// `n=6;r=3` style parameter label.
    pub fn params_label(&self) -> String {
        self.kind
            .param_names()
            .iter()
            .zip(&self.params)
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(";")
    }

    pub fn vertex_count(&self) -> usize {
        let p = &self.params;
        match self.kind {
            FamilyKind::Regular | FamilyKind::Cycle | FamilyKind::Path | FamilyKind::Complete => p[0],
            FamilyKind::CompleteBipartite => p[0] + p[1],
            FamilyKind::Star => p[0] + 1,
            FamilyKind::DoubleStar => p[0] + p[1] + 2,
            FamilyKind::Wheel => p[0] + 1,
            FamilyKind::Sunflower => 3 * p[0] + 1,
            FamilyKind::FrenchWindmill => p[1] * (p[0] - 1) + 1,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ps: Vec<String> = self.params.iter().map(usize::to_string).collect();
        write!(f, "{}({})", self.kind, ps.join(","))
    }
}

/// Builds the family member with deterministic numbering: hub first, then rim, outer, pendant.
pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let p = &spec.params;
    let mut e = Vec::new();
    let n = spec.vertex_count();
    match spec.kind {
        FamilyKind::Regular => {
            let (n, r) = (p[0], p[1]);
            for i in 0..n {
                for j in 1..=r / 2 {
                    e.push((i, (i + j) % n));
                }
                if r % 2 == 1 {
                    e.push((i, (i + n / 2) % n));
                }
            }
        }
        FamilyKind::Cycle => {
            let n = p[0];
            e.extend((0..n).map(|i| (i, (i + 1) % n)));
        }
        FamilyKind::Path => e.extend((1..p[0]).map(|i| (i - 1, i))),
        FamilyKind::Complete => {
            for u in 0..p[0] {
                e.extend((u + 1..p[0]).map(|v| (u, v)));
            }
        }
        FamilyKind::CompleteBipartite => {
            let (a, b) = (p[0], p[1]);
            for u in 0..a {
                e.extend((0..b).map(|j| (u, a + j)));
            }
        }
        FamilyKind::Star => e.extend((1..=p[0]).map(|i| (0, i))),
        FamilyKind::DoubleStar => {
            let (a, b) = (p[0], p[1]);
            e.push((0, 1));
            e.extend((0..a).map(|i| (0, 2 + i)));
            e.extend((0..b).map(|j| (1, 2 + a + j)));
        }
        FamilyKind::Wheel => {
            let k = p[0];
            for i in 0..k {
                e.push((0, 1 + i));
                e.push((1 + i, 1 + (i + 1) % k));
            }
        }
        FamilyKind::Sunflower => {
            let k = p[0];
            for i in 0..k {
                let (rim, outer, pendant) = (1 + i, 1 + k + i, 1 + 2 * k + i);
                e.push((0, rim));
                e.push((rim, 1 + (i + 1) % k));
                e.push((rim, outer));
                e.push((outer, 0));
                e.push((pendant, 0));
            }
        }
        FamilyKind::FrenchWindmill => {
            let (k, copies) = (p[0], p[1]);
            for c in 0..copies {
                let mut vs = vec![0];
                vs.extend((0..k - 1).map(|t| 1 + c * (k - 1) + t));
                for (a, &u) in vs.iter().enumerate() {
                    e.extend(vs[a + 1..].iter().map(|&v| (u, v)));
                }
            }
        }
    }
    Graph::new(n, &e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn census(g: &Graph) -> BTreeMap<(usize, usize), usize> {
        let mut c = BTreeMap::new();
        for &(u, v) in g.edges() {
            let (a, b) = (g.degree(u), g.degree(v));
            *c.entry((a.min(b), a.max(b))).or_insert(0) += 1;
        }
        c
    }

    #[test]
    fn wheel_census() {
        let g = generate(&FamilySpec::wheel(4)).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (5, 8));
        assert_eq!(g.degree(0), 4);
        assert!((1..5).all(|v| g.degree(v) == 3));
        for k in 5..9 {
            let g = generate(&FamilySpec::wheel(k)).unwrap();
            assert_eq!(census(&g), BTreeMap::from([((3, 3), k), ((3, k), k)]));
        }
    }

    #[test]
    fn sunflower_census() {
        let g = generate(&FamilySpec::sunflower(4)).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (13, 20));
        for k in 3..9 {
            let g = generate(&FamilySpec::sunflower(k)).unwrap();
            let want = BTreeMap::from([
                ((4, 4), k),
                ((4, 3 * k), k),
                ((2, 4), k),
                ((2, 3 * k), k),
                ((1, 3 * k), k),
            ]);
            assert_eq!(census(&g), want);
        }
    }

    #[test]
    fn windmill_and_regular() {
        let g = generate(&FamilySpec::french_windmill(4, 3)).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (10, 18));
        let g = generate(&FamilySpec::regular(6, 3)).unwrap();
        assert_eq!(g.edge_count(), 9);
        assert!(g.degrees().iter().all(|&d| d == 3));
        for n in 3..12 {
            for r in 1..n {
                if n * r % 2 == 0 {
                    let g = generate(&FamilySpec::regular(n, r)).unwrap();
                    assert!(g.degrees().iter().all(|&d| d == r), "regular({n},{r})");
                }
            }
        }
    }

    #[test]
    fn double_star_shape() {
        let g = generate(&FamilySpec::double_star(2, 3)).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (7, 6));
        assert_eq!((g.degree(0), g.degree(1)), (3, 4));
    }

    #[test]
    fn rejects_bad_params() {
        assert!(matches!(generate(&FamilySpec::wheel(2)), Err(Error::InvalidFamilyParams(_))));
        assert!(generate(&FamilySpec::regular(5, 3)).is_err());
        assert!(generate(&FamilySpec::regular(4, 4)).is_err());
        assert!(FamilySpec::parse("wheel", &[3, 4]).is_err());
        assert!(FamilySpec::parse("hypercube", &[3]).is_err());
        assert!(FamilySpec::parse("windmill", &[3, 2]).is_err());
    }

    #[test]
    fn small_wheel_is_k4() {
        let w = generate(&FamilySpec::wheel(3)).unwrap();
        let k = generate(&FamilySpec::complete(4)).unwrap();
        assert_eq!(w.edges(), k.edges());
    }
}
