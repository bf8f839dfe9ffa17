//! Spin systems: k states per vertex, a symmetric interaction matrix per
//! edge, partition function summing the product of matrix entries over all
//! state assignments.

use std::collections::HashMap;

use num_complex::Complex64;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::graph::Multigraph;

/// Symmetric k-by-k interaction matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinMatrix {
    k: usize,
    entries: Vec<Complex64>,
}

impl SpinMatrix {
    pub fn new(k: usize, entries: Vec<Complex64>) -> Result<Self> {
        if entries.len() != k * k {
            return Err(Error::InvalidInput(format!(
                "interaction matrix needs {}x{} entries, got {}",
                k,
                k,
                entries.len()
            )));
        }
        let m = SpinMatrix { k, entries };
        for i in 0..k {
            for j in 0..i {
                if m.get(i, j) != m.get(j, i) {
                    return Err(Error::InvalidInput(format!(
                        "interaction matrix is not symmetric at ({i},{j})"
                    )));
                }
            }
        }
        Ok(m)
    }

    pub fn all_ones(k: usize) -> Self {
        SpinMatrix {
            k,
            entries: vec![Complex64::new(1.0, 0.0); k * k],
        }
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.k + j]
    }

    /// Largest |A_ij - 1| over all entries.
    pub fn max_deviation(&self) -> f64 {
        self.entries
            .iter()
            .map(|a| (a - Complex64::new(1.0, 0.0)).norm())
            .fold(0.0, f64::max)
    }
}

/// Parsed spin model file, not yet tied to a graph.
#[derive(Debug, Clone)]
pub struct SpinModelFile {
    pub k: usize,
    pub default: SpinMatrix,
    pub edges: Vec<((u32, u32), SpinMatrix)>,
}

/// Spin model bound to a specific graph: every edge resolved to a matrix,
/// equal matrices deduplicated. The matrix id doubles as the edge color
/// the engine sees, so id assignment is deterministic (default first, then
/// first use in edge order).
#[derive(Debug, Clone)]
pub struct SpinModel {
    pub k: usize,
    matrices: Vec<SpinMatrix>,
    edge_matrix_ids: Vec<u32>,
}

#[derive(Deserialize)]
struct SpinFileRaw {
    k: usize,
    default: Vec<Vec<[f64; 2]>>,
    #[serde(default)]
    edges: HashMap<String, Vec<Vec<[f64; 2]>>>,
}

fn matrix_from_rows(k: usize, rows: &[Vec<[f64; 2]>], what: &str) -> Result<SpinMatrix> {
    if rows.len() != k || rows.iter().any(|r| r.len() != k) {
        return Err(Error::Parse(format!("{what}: expected a {k}x{k} matrix")));
    }
    let entries = rows
        .iter()
        .flatten()
        .map(|&[re, im]| Complex64::new(re, im))
        .collect();
    SpinMatrix::new(k, entries)
}

pub fn parse_spin_model(text: &str) -> Result<SpinModelFile> {
    let raw: SpinFileRaw = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("spin model: {e}")))?;
    if raw.k == 0 {
        return Err(Error::Parse("spin model: k must be at least 1".into()));
    }
    let default = matrix_from_rows(raw.k, &raw.default, "spin model default")?;
    let mut edges = Vec::new();
    for (key, rows) in &raw.edges {
        let (u, v) = key
            .split_once('-')
            .and_then(|(a, b)| Some((a.parse::<u32>().ok()?, b.parse::<u32>().ok()?)))
            .ok_or_else(|| {
                Error::Parse(format!("spin model: edge key '{key}' is not 'u-v'"))
            })?;
        let m = matrix_from_rows(raw.k, rows, &format!("spin model edge {key}"))?;
        edges.push(((u.min(v), u.max(v)), m));
    }
    edges.sort_by_key(|(e, _)| *e);
    Ok(SpinModelFile {
        k: raw.k,
        default,
        edges,
    })
}

impl SpinModelFile {
    pub fn bind(&self, g: &Multigraph) -> Result<SpinModel> {
        for &((u, v), _) in &self.edges {
            if g.multiplicity(u, v) == 0 {
                return Err(Error::InvalidInput(format!(
                    "spin model names edge {u}-{v}, which the graph does not have"
                )));
            }
        }
        let mut matrices = vec![self.default.clone()];
        let mut ids = Vec::with_capacity(g.edge_count());
        let by_pair: HashMap<(u32, u32), &SpinMatrix> =
            self.edges.iter().map(|(e, m)| (*e, m)).collect();
        for e in g.edges() {
            let m = by_pair.get(&(e.u, e.v)).copied().unwrap_or(&self.default);
            let id = match matrices.iter().position(|known| known == m) {
                Some(i) => i,
                None => {
                    matrices.push(m.clone());
                    matrices.len() - 1
                }
            };
            ids.push(id as u32);
        }
        Ok(SpinModel {
            k: self.k,
            matrices,
            edge_matrix_ids: ids,
        })
    }
}

impl SpinModel {
    /// Uniform model: one shared matrix on every edge.
    pub fn uniform(k: usize, matrix: SpinMatrix, g: &Multigraph) -> SpinModel {
        SpinModel {
            k,
            matrices: vec![matrix],
            edge_matrix_ids: vec![0; g.edge_count()],
        }
    }

    pub fn matrix(&self, id: u32) -> &SpinMatrix {
        &self.matrices[id as usize]
    }

    pub fn matrix_count(&self) -> usize {
        self.matrices.len()
    }

    pub fn edge_matrix(&self, edge_index: usize) -> &SpinMatrix {
        &self.matrices[self.edge_matrix_ids[edge_index] as usize]
    }

    pub fn edge_matrix_id(&self, edge_index: usize) -> u32 {
        self.edge_matrix_ids[edge_index]
    }

    /// Copy of the graph with each edge colored by its matrix id; this is
    /// the graph the edge-colored engine runs on.
    pub fn colored_graph(&self, g: &Multigraph) -> Multigraph {
        let mut colored = Multigraph::new(g.n());
        for (i, e) in g.edges().iter().enumerate() {
            colored
                .add_colored_edge(e.u, e.v, self.edge_matrix_ids[i])
                .expect("edge endpoints already validated");
        }
        colored
    }

    pub fn max_deviation(&self) -> f64 {
        self.matrices
            .iter()
            .map(|m| m.max_deviation())
            .fold(0.0, f64::max)
    }
}
