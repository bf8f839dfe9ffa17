//! Undirected multigraph with optional vertex and edge colors.
//!
//! Vertices are `0..n`. Loops and parallel edges are representable; models
//! that require simple or loopless graphs reject them at their own boundary.
//! A loop contributes two to its endpoint's degree.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: u32,
    pub v: u32,
    pub color: u32,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }
}

#[derive(Debug, Clone)]
pub struct Multigraph {
    n: usize,
    edges: Vec<Edge>,
    vertex_colors: Vec<u32>,
    /// Sorted distinct neighbors, self excluded.
    neighbors: Vec<Vec<u32>>,
    /// Incident edge indices; a loop appears once.
    incident: Vec<Vec<u32>>,
    degrees: Vec<u32>,
}

impl Multigraph {
    pub fn new(n: usize) -> Self {
        Multigraph {
            n,
            edges: Vec::new(),
            vertex_colors: vec![0; n],
            neighbors: vec![Vec::new(); n],
            incident: vec![Vec::new(); n],
            degrees: vec![0; n],
        }
    }

    /// Builds a graph from endpoint pairs, all colors zero.
    pub fn from_pairs(n: usize, pairs: &[(u32, u32)]) -> Result<Self> {
        let mut g = Multigraph::new(n);
        for &(u, v) in pairs {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: u32, v: u32) -> Result<()> {
        self.add_colored_edge(u, v, 0)
    }

    pub fn add_colored_edge(&mut self, u: u32, v: u32, color: u32) -> Result<()> {
        if (u as usize) >= self.n || (v as usize) >= self.n {
            return Err(Error::InvalidInput(format!(
                "edge ({u}, {v}) references a vertex outside 0..{}",
                self.n
            )));
        }
        let (a, b) = if u <= v { (u, v) } else { (v, u) };
        let idx = self.edges.len() as u32;
        self.edges.push(Edge { u: a, v: b, color });
        self.incident[a as usize].push(idx);
        if a != b {
            self.incident[b as usize].push(idx);
            self.degrees[a as usize] += 1;
            self.degrees[b as usize] += 1;
            insert_sorted(&mut self.neighbors[a as usize], b);
            insert_sorted(&mut self.neighbors[b as usize], a);
        } else {
            self.degrees[a as usize] += 2;
        }
        Ok(())
    }

    pub fn set_vertex_color(&mut self, v: u32, color: u32) -> Result<()> {
        if (v as usize) >= self.n {
            return Err(Error::InvalidInput(format!(
                "vertex {v} outside 0..{}",
                self.n
            )));
        }
        self.vertex_colors[v as usize] = color;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_color(&self, v: u32) -> u32 {
        self.vertex_colors[v as usize]
    }

    pub fn vertex_colors(&self) -> &[u32] {
        &self.vertex_colors
    }

    /// Degree with loops counted twice.
    pub fn degree(&self, v: u32) -> u32 {
        self.degrees[v as usize]
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0) as usize
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.neighbors[v as usize]
    }

    pub fn incident_edges(&self, v: u32) -> impl Iterator<Item = &Edge> {
        self.incident[v as usize]
            .iter()
            .map(move |&i| &self.edges[i as usize])
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(|e| e.is_loop())
    }

    pub fn has_parallel_edges(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.edges.iter().any(|e| !seen.insert((e.u, e.v)))
    }

    pub fn is_simple(&self) -> bool {
        !self.has_loops() && !self.has_parallel_edges()
    }

    /// Number of edges (with multiplicity) between u and v, or loops at u
    /// when u == v.
    pub fn multiplicity(&self, u: u32, v: u32) -> usize {
        let (a, b) = if u <= v { (u, v) } else { (v, u) };
        self.edges.iter().filter(|e| e.u == a && e.v == b).count()
    }

    /// Induced sub-multigraph on `set` (sorted, deduplicated, in range),
    /// relabeled to 0..set.len() in set order. Colors are inherited.
    pub fn induced(&self, set: &[u32]) -> Multigraph {
        debug_assert!(set.windows(2).all(|w| w[0] < w[1]), "set must be sorted");
        let mut local = vec![u32::MAX; self.n];
        for (i, &v) in set.iter().enumerate() {
            local[v as usize] = i as u32;
        }
        let mut g = Multigraph::new(set.len());
        for (i, &v) in set.iter().enumerate() {
            g.vertex_colors[i] = self.vertex_colors[v as usize];
        }
        for e in &self.edges {
            let lu = local[e.u as usize];
            let lv = local[e.v as usize];
            if lu != u32::MAX && lv != u32::MAX {
                g.add_colored_edge(lu, lv, e.color).expect("local index");
            }
        }
        g
    }

    /// Disjoint union; vertices of `other` are shifted by self.n.
    pub fn disjoint_union(&self, other: &Multigraph) -> Multigraph {
        let shift = self.n as u32;
        let mut g = Multigraph::new(self.n + other.n);
        g.vertex_colors[..self.n].copy_from_slice(&self.vertex_colors);
        g.vertex_colors[self.n..].copy_from_slice(&other.vertex_colors);
        for e in &self.edges {
            g.add_colored_edge(e.u, e.v, e.color).expect("in range");
        }
        for e in &other.edges {
            g.add_colored_edge(e.u + shift, e.v + shift, e.color)
                .expect("in range");
        }
        g
    }

    /// True when the whole vertex set induces one connected component.
    /// The empty graph counts as disconnected, single vertex as connected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0u32];
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &w in self.neighbors(v) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == self.n
    }

    /// Vertex sets of connected components, each sorted, ordered by minimum
    /// vertex. Isolated vertices form their own components.
    pub fn components(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start as u32];
            seen[start] = true;
            let mut stack = vec![start as u32];
            while let Some(v) = stack.pop() {
                for &w in self.neighbors(v) {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

fn insert_sorted(v: &mut Vec<u32>, x: u32) {
    if let Err(pos) = v.binary_search(&x) {
        v.insert(pos, x);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Multigraph {
        let pairs: Vec<(u32, u32)> = (1..n as u32).map(|i| (i - 1, i)).collect();
        Multigraph::from_pairs(n, &pairs).unwrap()
    }

    #[test]
    fn degrees_count_loops_twice() {
        let mut g = Multigraph::new(2);
        g.add_edge(0, 1).unwrap();
        g.add_edge(0, 0).unwrap();
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.degree(1), 1);
        assert_eq!(g.max_degree(), 3);
        assert!(g.has_loops());
        assert!(!g.has_parallel_edges());
    }

    #[test]
    fn parallel_edges_tracked_with_multiplicity() {
        let g = Multigraph::from_pairs(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.multiplicity(0, 1), 3);
        assert_eq!(g.degree(0), 3);
        assert!(g.has_parallel_edges());
        assert_eq!(g.neighbors(0), &[1]);
    }

    #[test]
    fn out_of_range_edge_rejected() {
        let mut g = Multigraph::new(2);
        assert!(g.add_edge(0, 2).is_err());
    }

    #[test]
    fn induced_keeps_internal_edges_only() {
        let g = path(4);
        let h = g.induced(&[0, 1, 3]);
        assert_eq!(h.n(), 3);
        assert_eq!(h.edge_count(), 1);
        assert_eq!(h.multiplicity(0, 1), 1);
        assert_eq!(h.degree(2), 0);
    }

    #[test]
    fn components_and_connectivity() {
        let g = path(3).disjoint_union(&Multigraph::new(1));
        assert!(!g.is_connected());
        assert_eq!(g.components(), vec![vec![0, 1, 2], vec![3]]);
        assert!(path(5).is_connected());
        assert!(!Multigraph::new(0).is_connected());
    }
}
