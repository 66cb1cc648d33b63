//! Vertex and edge-endpoint degree functionals.

mod domination;

pub use domination::{domination_degree, DominationConfig, DEFAULT_DOMINATION_MAX};

use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::Rat;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DegreeSource {
    Plain,
    Revan,
    Banhatti,
    Temperature,
    Domination,
    Kv,
    NbdSum,
}

impl DegreeSource {
    pub const ALL: [DegreeSource; 7] = [
        DegreeSource::Plain,
        DegreeSource::Banhatti,
        DegreeSource::Revan,
        DegreeSource::Domination,
        DegreeSource::Temperature,
        DegreeSource::Kv,
        DegreeSource::NbdSum,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DegreeSource::Plain => "plain",
            DegreeSource::Revan => "revan",
            DegreeSource::Banhatti => "banhatti",
            DegreeSource::Temperature => "temperature",
            DegreeSource::Domination => "domination",
            DegreeSource::Kv => "kv",
            DegreeSource::NbdSum => "nbd_sum",
        }
    }

    pub fn from_name(s: &str) -> Option<DegreeSource> {
        let key = s.to_ascii_lowercase().replace('-', "_");
        DegreeSource::ALL
            .into_iter()
            .find(|d| d.name() == key)
            .or(match key.as_str() {
                "degree" => Some(DegreeSource::Plain),
                "nbdsum" | "neighborhood" => Some(DegreeSource::NbdSum),
                _ => None,
            })
    }

    pub fn is_edge_valued(self) -> bool {
        self == DegreeSource::Banhatti
    }
}

impl fmt::Display for DegreeSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableValues {
    /// One value per vertex.
    Vertex(Vec<Rat>),
    /// One `(value at u, value at v)` pair per edge, aligned with `Graph::edges`.
    EdgeEndpoint(Vec<(Rat, Rat)>),
}

/// Exact per-vertex (or per edge-endpoint) values of one functional on one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionalTable {
    pub source: DegreeSource,
    pub fingerprint: String,
    pub values: TableValues,
}

impl FunctionalTable {
    /// Endpoint values for the `i`-th edge of the graph.
    pub fn endpoint_values(&self, g: &Graph, i: usize) -> (Rat, Rat) {
        match &self.values {
            TableValues::Vertex(v) => {
                let (a, b) = g.edges()[i];
                (v[a].clone(), v[b].clone())
            }
            TableValues::EdgeEndpoint(p) => p[i].clone(),
        }
    }

    pub fn vertex_values(&self) -> Option<&[Rat]> {
        match &self.values {
            TableValues::Vertex(v) => Some(v),
            TableValues::EdgeEndpoint(_) => None,
        }
    }

    /// Rows `(label, value)`: vertex index, or `u@u-v` for edge endpoints.
    pub fn rows(&self, g: &Graph) -> Vec<(String, Rat)> {
        match &self.values {
            TableValues::Vertex(v) => v.iter().enumerate().map(|(i, x)| (i.to_string(), x.clone())).collect(),
            TableValues::EdgeEndpoint(p) => g
                .edges()
                .iter()
                .zip(p)
                .flat_map(|(&(u, v), (bu, bv))| {
                    [(format!("{u}@{u}-{v}"), bu.clone()), (format!("{v}@{u}-{v}"), bv.clone())]
                })
                .collect(),
        }
    }
}

/// Computes the table of `source` on `g`.
pub fn table(g: &Graph, source: DegreeSource, cfg: &DominationConfig) -> Result<FunctionalTable> {
    let values = match source {
        DegreeSource::Plain => TableValues::Vertex(plain_degree(g)),
        DegreeSource::Revan => TableValues::Vertex(revan_degree(g)),
        DegreeSource::Temperature => TableValues::Vertex(temperature(g)?),
        DegreeSource::Kv => TableValues::Vertex(kv(g)),
        DegreeSource::NbdSum => TableValues::Vertex(nbd_sum(g)),
        DegreeSource::Domination => TableValues::Vertex(
            domination_degree(g, cfg)?.into_iter().map(|d| Rat::from(d as i64)).collect(),
        ),
        DegreeSource::Banhatti => TableValues::EdgeEndpoint(
            (0..g.edge_count()).map(|i| banhatti_at(g, i)).collect::<Result<_>>()?,
        ),
    };
    Ok(FunctionalTable { source, fingerprint: g.fingerprint(), values })
}

fn int(v: usize) -> Rat {
    Rat::from(v as i64)
}

pub fn plain_degree(g: &Graph) -> Vec<Rat> {
    g.degrees().into_iter().map(int).collect()
}

/// `Δ + δ − d(u)`.
pub fn revan_degree(g: &Graph) -> Vec<Rat> {
    let s = g.max_degree() + g.min_degree();
    g.degrees().into_iter().map(|d| int(s - d)).collect()
}

/// `d(u) / (n − d(u))`.
pub fn temperature(g: &Graph) -> Result<Vec<Rat>> {
    let n = g.vertex_count();
    g.degrees()
        .into_iter()
        .enumerate()
        .map(|(u, d)| {
            if d >= n {
                return Err(Error::TemperatureUndefined(u));
            }
            Rat::new(d as i64, (n - d) as i64)
        })
        .collect()
}

/// Product of neighbour degrees.
pub fn kv(g: &Graph) -> Vec<Rat> {
    (0..g.vertex_count())
        .map(|u| g.neighbors(u).iter().map(|&w| int(g.degree(w))).product())
        .collect()
}

/// Sum of neighbour degrees.
pub fn nbd_sum(g: &Graph) -> Vec<Rat> {
    (0..g.vertex_count())
        .map(|u| int(g.neighbors(u).iter().map(|&w| g.degree(w)).sum()))
        .collect()
}

/// `(B(u), B(v))` for edge `uv`, with `B(x) = (d(u) + d(v) − 2) / (n − d(x))`.
pub fn banhatti(g: &Graph, u: usize, v: usize) -> Result<(Rat, Rat)> {
    let n = g.vertex_count() as i64;
    let (du, dv) = (g.degree(u) as i64, g.degree(v) as i64);
    let de = du + dv - 2;
    let at = |d: i64| Rat::new(de, n - d).map_err(|_| Error::BanhattiUndefined(u, v));
    Ok((at(du)?, at(dv)?))
}

fn banhatti_at(g: &Graph, i: usize) -> Result<(Rat, Rat)> {
    let (u, v) = g.edges()[i];
    banhatti(g, u, v)
}

/// Closeness `c(u) = (n − 1) / Σ_v dist(u, v)`.
pub fn closeness(g: &Graph) -> Result<Vec<Rat>> {
    let n = g.vertex_count();
    (0..n)
        .map(|u| {
            let total: usize = g.connected_distances(u)?.iter().sum();
            if total == 0 {
                Ok(Rat::one())
            } else {
                Rat::new((n - 1) as i64, total as i64)
            }
        })
        .collect()
}

/// `CL(u) = max |d(u) − d(v)|` over neighbours, 0 for isolated vertices.
pub fn cl_degree(g: &Graph) -> Vec<Rat> {
    (0..g.vertex_count())
        .map(|u| {
            let du = g.degree(u);
            int(g.neighbors(u).iter().map(|&w| du.abs_diff(g.degree(w))).max().unwrap_or(0))
        })
        .collect()
}
