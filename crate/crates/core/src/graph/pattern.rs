//! Induced patterns and the census dictionary.
//!
//! A pattern is an induced piece of a host graph together with, in fragment
//! mode, a count of half edges per vertex: edge stubs that left the host
//! when the piece was cut out. Which attributes participate in isomorphism
//! is controlled by [`Flavor`], so the same data structures serve plain
//! multigraphs, vertex- or edge-colored graphs, and fragments.

use std::collections::HashMap;

use crate::budget::Budget;
use crate::error::Result;
use crate::graph::canon::{canonical_key, PatternKey};
use crate::graph::enumerate::enumerate_connected_sets_budgeted;
use crate::graph::Multigraph;

/// Which attributes isomorphism and canonical codes respect.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flavor {
    /// Structure only: adjacency with edge multiplicities and loops.
    Plain,
    /// Plain plus vertex colors.
    VertexColored,
    /// Plain plus edge colors.
    EdgeColored,
    /// Vertex colors plus per-vertex half-edge counts.
    Fragment,
}

impl Flavor {
    pub(crate) fn id(self) -> u32 {
        match self {
            Flavor::Plain => 0,
            Flavor::VertexColored => 1,
            Flavor::EdgeColored => 2,
            Flavor::Fragment => 3,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Pattern {
    pub graph: Multigraph,
    /// Half-edge count per vertex; all zeros outside fragment flavor.
    pub kappa: Vec<u32>,
}

impl Pattern {
    pub fn from_graph(g: &Multigraph) -> Pattern {
        Pattern {
            kappa: vec![0; g.n()],
            graph: g.clone(),
        }
    }

    pub fn order(&self) -> usize {
        self.graph.n()
    }

    /// Total edge count including half edges, each stub counted once.
    pub fn edge_count_with_stubs(&self) -> usize {
        self.graph.edge_count() + self.kappa.iter().map(|&k| k as usize).sum::<usize>()
    }

    pub fn is_connected(&self) -> bool {
        self.graph.is_connected()
    }

    /// Induced sub-pattern on `set` (sorted ascending). In fragment flavor
    /// every edge from `set` to the rest of this pattern becomes a half
    /// edge, on top of the half edges the vertices already carried:
    /// kappa'(s) = deg(s) - deg_sub(s) + kappa(s).
    pub fn induced(&self, set: &[u32], flavor: Flavor) -> Pattern {
        let sub = self.graph.induced(set);
        let kappa = if flavor == Flavor::Fragment {
            set.iter()
                .enumerate()
                .map(|(i, &v)| {
                    self.graph.degree(v) - sub.degree(i as u32) + self.kappa[v as usize]
                })
                .collect()
        } else {
            vec![0; set.len()]
        };
        Pattern { graph: sub, kappa }
    }
}

#[derive(Debug, Clone)]
pub struct PatternClass {
    pub key: PatternKey,
    pub pattern: Pattern,
    /// Number of vertex sets of the host inducing this class.
    pub count: u64,
}

/// Census of connected induced patterns of a host graph up to a size bound,
/// grouped by isomorphism class. Classes are ordered by (order, key), so
/// iteration order is reproducible across runs.
#[derive(Debug, Clone)]
pub struct PatternDictionary {
    pub classes: Vec<PatternClass>,
    by_key: HashMap<PatternKey, usize>,
}

impl PatternDictionary {
    pub fn index_of(&self, key: &PatternKey) -> Option<usize> {
        self.by_key.get(key).copied()
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

pub fn pattern_dictionary(
    g: &Multigraph,
    max_order: usize,
    flavor: Flavor,
    budget: &mut Budget,
) -> Result<PatternDictionary> {
    let host = Pattern::from_graph(g);
    let sets = enumerate_connected_sets_budgeted(g, max_order, budget)?;
    let mut grouped: HashMap<PatternKey, (Pattern, u64)> = HashMap::new();
    for set in &sets {
        let pat = host.induced(set, flavor);
        budget.charge(pat.order() as u64, "pattern canonicalization")?;
        let key = canonical_key(&pat, flavor);
        grouped
            .entry(key)
            .and_modify(|e| e.1 += 1)
            .or_insert((pat, 1));
    }
    let mut classes: Vec<PatternClass> = grouped
        .into_iter()
        .map(|(key, (pattern, count))| PatternClass {
            key,
            pattern,
            count,
        })
        .collect();
    classes.sort_by(|a, b| {
        (a.pattern.order(), &a.key).cmp(&(b.pattern.order(), &b.key))
    });
    let by_key = classes
        .iter()
        .enumerate()
        .map(|(i, c)| (c.key.clone(), i))
        .collect();
    Ok(PatternDictionary { classes, by_key })
}
