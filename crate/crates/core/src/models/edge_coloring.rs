//! Edge-coloring systems: k colors per edge, per-vertex weight functions of
//! the incident color counts, partition function summing the product of
//! vertex weights over all edge colorings.

use std::collections::HashMap;

use num_complex::Complex64;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::graph::Multigraph;

/// Weight table for one vertex: maps a color-count vector (how many
/// incident edges have each of the k colors) to a complex weight.
#[derive(Debug, Clone)]
pub struct VertexWeights {
    default: Option<Complex64>,
    entries: HashMap<Vec<u32>, Complex64>,
}

impl VertexWeights {
    pub fn constant(value: Complex64) -> Self {
        VertexWeights {
            default: Some(value),
            entries: HashMap::new(),
        }
    }

    pub fn with_entries(
        default: Option<Complex64>,
        entries: HashMap<Vec<u32>, Complex64>,
    ) -> Self {
        VertexWeights { default, entries }
    }

    fn lookup(&self, counts: &[u32]) -> Option<Complex64> {
        self.entries
            .get(counts)
            .copied()
            .or(self.default)
    }

    fn max_deviation(&self) -> f64 {
        let one = Complex64::new(1.0, 0.0);
        self.entries
            .values()
            .chain(self.default.iter())
            .map(|&v| (v - one).norm())
            .fold(0.0, f64::max)
    }
}

/// Edge-coloring model: k colors and one weight table, optionally
/// specialized per vertex.
#[derive(Debug, Clone)]
pub struct EdgeColoringModel {
    pub k: usize,
    base: VertexWeights,
    per_vertex: HashMap<u32, VertexWeights>,
}

#[derive(Deserialize)]
struct TableRaw {
    #[serde(default)]
    default: Option<[f64; 2]>,
    #[serde(default)]
    entries: Vec<EntryRaw>,
}

#[derive(Deserialize)]
struct EntryRaw {
    counts: Vec<u32>,
    value: [f64; 2],
}

#[derive(Deserialize)]
struct ColoringFileRaw {
    k: usize,
    #[serde(default)]
    default: Option<[f64; 2]>,
    #[serde(default)]
    entries: Vec<EntryRaw>,
    #[serde(default)]
    per_vertex: HashMap<String, TableRaw>,
}

fn table_from_raw(
    k: usize,
    default: Option<[f64; 2]>,
    entries: &[EntryRaw],
    what: &str,
) -> Result<VertexWeights> {
    let mut map = HashMap::new();
    for e in entries {
        if e.counts.len() != k {
            return Err(Error::Parse(format!(
                "{what}: count vector {:?} must have k = {k} components",
                e.counts
            )));
        }
        if map
            .insert(e.counts.clone(), Complex64::new(e.value[0], e.value[1]))
            .is_some()
        {
            return Err(Error::Parse(format!(
                "{what}: duplicate count vector {:?}",
                e.counts
            )));
        }
    }
    Ok(VertexWeights::with_entries(
        default.map(|[re, im]| Complex64::new(re, im)),
        map,
    ))
}

pub fn parse_edge_coloring_model(text: &str) -> Result<EdgeColoringModel> {
    let raw: ColoringFileRaw = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("edge-coloring model: {e}")))?;
    if raw.k == 0 {
        return Err(Error::Parse(
            "edge-coloring model: k must be at least 1".into(),
        ));
    }
    let base = table_from_raw(raw.k, raw.default, &raw.entries, "edge-coloring model")?;
    let mut per_vertex = HashMap::new();
    for (key, table) in &raw.per_vertex {
        let v: u32 = key.parse().map_err(|_| {
            Error::Parse(format!(
                "edge-coloring model: vertex key '{key}' is not an integer"
            ))
        })?;
        per_vertex.insert(
            v,
            table_from_raw(raw.k, table.default, &table.entries, &format!("vertex {key}"))?,
        );
    }
    Ok(EdgeColoringModel {
        k: raw.k,
        base,
        per_vertex,
    })
}

impl EdgeColoringModel {
    pub fn uniform(k: usize, weights: VertexWeights) -> Self {
        EdgeColoringModel {
            k,
            base: weights,
            per_vertex: HashMap::new(),
        }
    }

    /// Weight of vertex v seeing the given color counts.
    pub fn h(&self, v: u32, counts: &[u32]) -> Result<Complex64> {
        debug_assert_eq!(counts.len(), self.k);
        let table = self.per_vertex.get(&v).unwrap_or(&self.base);
        table.lookup(counts).ok_or_else(|| {
            Error::InvalidInput(format!(
                "edge-coloring model has no weight for count vector {counts:?} at vertex {v} and no default"
            ))
        })
    }

    /// Whether every vertex shares the base table.
    pub fn is_uniform(&self) -> bool {
        self.per_vertex.is_empty()
    }

    /// Engine vertex color: uniform models leave vertices interchangeable,
    /// per-vertex tables pin each vertex to itself.
    pub fn vertex_color(&self, v: u32) -> u32 {
        if self.is_uniform() {
            0
        } else {
            v
        }
    }

    pub fn max_deviation(&self) -> f64 {
        self.per_vertex
            .values()
            .chain(std::iter::once(&self.base))
            .map(|t| t.max_deviation())
            .fold(0.0, f64::max)
    }

    /// Check stored count vectors against the degree bound of a concrete
    /// graph; vectors that cannot occur are rejected early as likely typos.
    pub fn validate_for(&self, g: &Multigraph) -> Result<()> {
        let delta = g.max_degree() as u32;
        for (v, table) in self
            .per_vertex
            .iter()
            .map(|(v, t)| (Some(*v), t))
            .chain(std::iter::once((None, &self.base)))
        {
            for counts in table.entries.keys() {
                let total: u32 = counts.iter().sum();
                if total > delta {
                    return Err(Error::InvalidInput(format!(
                        "count vector {counts:?}{} sums to {total}, above the graph's maximum degree {delta}",
                        v.map(|v| format!(" (vertex {v})")).unwrap_or_default()
                    )));
                }
            }
        }
        Ok(())
    }
}
