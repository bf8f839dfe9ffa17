//! Explicit-search isomorphism and induced-embedding counting.
//!
//! This is the slow, obviously-correct counterpart to the canonical codes in
//! `canon`: a plain backtracking search over vertex maps. The engine uses
//! canonical keys for speed; these routines exist to cross-check them and to
//! count induced copies directly in tests.

use std::collections::BTreeSet;

use crate::graph::canon::{attr_view, AttrView};
use crate::graph::pattern::{Flavor, Pattern};
use crate::graph::Multigraph;

/// Whether two connected patterns are isomorphic under the flavor.
pub fn is_isomorphic_connected(a: &Pattern, b: &Pattern, flavor: Flavor) -> bool {
    if a.order() != b.order()
        || a.graph.edge_count() != b.graph.edge_count()
        || a.order() == 0
    {
        return a.order() == b.order() && a.graph.edge_count() == b.graph.edge_count();
    }
    let av = attr_view(a, flavor);
    let bv = attr_view(b, flavor);
    if multiset(&av.vattr) != multiset(&bv.vattr)
        || multiset(&av.degree) != multiset(&bv.degree)
        || multiset(&av.loops) != multiset(&bv.loops)
    {
        return false;
    }
    let mut search = Embedding::new(&av, &bv, a, b, Mode::Bijection);
    search.run();
    search.found
}

/// Number of vertex sets S of `host` with host.induced(S, flavor)
/// isomorphic to `needle`. The needle must be connected and nonempty.
pub fn count_induced_in(needle: &Pattern, host: &Pattern, flavor: Flavor) -> u64 {
    assert!(needle.order() > 0 && needle.is_connected());
    if needle.order() > host.order() {
        return 0;
    }
    let nv = attr_view(needle, flavor);
    let hv = attr_view(host, flavor);
    let mode = if flavor == Flavor::Fragment {
        Mode::InducedFragment
    } else {
        Mode::Induced
    };
    let mut search = Embedding::new(&nv, &hv, needle, host, mode);
    search.run();
    search.images.len() as u64
}

pub fn count_induced(needle: &Pattern, host: &Multigraph, flavor: Flavor) -> u64 {
    count_induced_in(needle, &Pattern::from_graph(host), flavor)
}

fn multiset<T: Ord + Clone>(items: &[T]) -> Vec<T> {
    let mut v = items.to_vec();
    v.sort_unstable();
    v
}

#[derive(PartialEq, Eq, Clone, Copy)]
enum Mode {
    /// Full bijection, all attributes equal.
    Bijection,
    /// Injective map, induced on the image.
    Induced,
    /// Induced, with half-edge counts derived from the host rather than
    /// compared directly: a severed host edge counts toward the stub total.
    InducedFragment,
}

struct Embedding<'a> {
    needle: &'a AttrView,
    host: &'a AttrView,
    needle_kappa: &'a [u32],
    host_kappa: &'a [u32],
    mode: Mode,
    /// Needle vertices in a connected visit order, with the position of
    /// each vertex's discovery parent.
    order: Vec<usize>,
    parent: Vec<Option<usize>>,
    image: Vec<usize>,
    used: Vec<bool>,
    images: BTreeSet<Vec<u32>>,
    found: bool,
}

impl<'a> Embedding<'a> {
    fn new(
        needle: &'a AttrView,
        host: &'a AttrView,
        needle_pat: &'a Pattern,
        host_pat: &'a Pattern,
        mode: Mode,
    ) -> Self {
        let (order, parent) = bfs_order(needle);
        Embedding {
            needle,
            host,
            needle_kappa: &needle_pat.kappa,
            host_kappa: &host_pat.kappa,
            mode,
            order,
            parent,
            image: vec![usize::MAX; needle.n],
            used: vec![false; host.n],
            images: BTreeSet::new(),
            found: false,
        }
    }

    fn run(&mut self) {
        self.recurse(0);
    }

    fn recurse(&mut self, depth: usize) {
        if self.found && self.mode == Mode::Bijection {
            return;
        }
        if depth == self.order.len() {
            self.complete();
            return;
        }
        let a = self.order[depth];
        match self.parent[depth] {
            None => {
                for x in 0..self.host.n {
                    self.try_assign(a, x, depth);
                }
            }
            Some(pp) => {
                let y = self.image[self.order[pp]];
                let mut candidates: Vec<usize> =
                    self.host.adj[y].iter().map(|&(w, _)| w as usize).collect();
                candidates.dedup();
                for x in candidates {
                    self.try_assign(a, x, depth);
                }
            }
        }
    }

    fn try_assign(&mut self, a: usize, x: usize, depth: usize) {
        if self.used[x] || !self.feasible(a, x, depth) {
            return;
        }
        self.image[a] = x;
        self.used[x] = true;
        self.recurse(depth + 1);
        self.used[x] = false;
        self.image[a] = usize::MAX;
    }

    fn feasible(&self, a: usize, x: usize, depth: usize) -> bool {
        match self.mode {
            Mode::Bijection => {
                if self.needle.vattr[a] != self.host.vattr[x]
                    || self.needle.degree[a] != self.host.degree[x]
                {
                    return false;
                }
            }
            Mode::Induced => {
                if self.needle.vattr[a] != self.host.vattr[x]
                    || self.needle.degree[a] > self.host.degree[x]
                {
                    return false;
                }
            }
            Mode::InducedFragment => {
                // Colors carry over directly; stubs must balance:
                // every host edge at x not kept inside the image becomes
                // a stub, on top of stubs x already had.
                if self.needle.vattr[a].0 != self.host.vattr[x].0 {
                    return false;
                }
                let derived = self.host.degree[x] as i64 - self.needle.degree[a] as i64
                    + self.host_kappa[x] as i64;
                if derived != self.needle_kappa[a] as i64 {
                    return false;
                }
            }
        }
        if self.needle.loops[a] != self.host.loops[x] {
            return false;
        }
        for &b in self.order[..depth].iter() {
            let y = self.image[b];
            if pair_attrs(self.needle, a, b) != pair_attrs(self.host, x, y) {
                return false;
            }
        }
        true
    }

    fn complete(&mut self) {
        match self.mode {
            Mode::Bijection => self.found = true,
            _ => {
                let mut set: Vec<u32> = self.image.iter().map(|&x| x as u32).collect();
                set.sort_unstable();
                self.images.insert(set);
            }
        }
    }
}

fn pair_attrs<'v>(view: &'v AttrView, u: usize, v: usize) -> &'v [u32] {
    let key = (u.min(v) as u32, u.max(v) as u32);
    view.pairs.get(&key).map(|a| a.as_slice()).unwrap_or(&[])
}

fn bfs_order(view: &AttrView) -> (Vec<usize>, Vec<Option<usize>>) {
    let n = view.n;
    let root = (0..n).max_by_key(|&v| view.degree[v]).unwrap_or(0);
    let mut order = vec![root];
    let mut parent = vec![None];
    let mut pos = vec![usize::MAX; n];
    pos[root] = 0;
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        for &(w, _) in &view.adj[v] {
            let w = w as usize;
            if pos[w] == usize::MAX {
                pos[w] = order.len();
                order.push(w);
                parent.push(Some(head));
            }
        }
        head += 1;
    }
    (order, parent)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::canon::canonical_key;

    fn pat(n: usize, pairs: &[(u32, u32)]) -> Pattern {
        Pattern::from_graph(&Multigraph::from_pairs(n, pairs).unwrap())
    }

    #[test]
    fn path_copies_in_cycle() {
        let p3 = pat(3, &[(0, 1), (1, 2)]);
        let c4 = Multigraph::from_pairs(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(count_induced(&p3, &c4, Flavor::Plain), 4);
    }

    #[test]
    fn induced_means_induced() {
        let k4 = Multigraph::from_pairs(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
            .unwrap();
        let edge = pat(2, &[(0, 1)]);
        let p3 = pat(3, &[(0, 1), (1, 2)]);
        let k3 = pat(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(count_induced(&edge, &k4, Flavor::Plain), 6);
        // Any three vertices of K4 induce a triangle, never a path.
        assert_eq!(count_induced(&p3, &k4, Flavor::Plain), 0);
        assert_eq!(count_induced(&k3, &k4, Flavor::Plain), 4);
    }

    #[test]
    fn multiplicity_is_part_of_the_shape() {
        let single = pat(2, &[(0, 1)]);
        let host = Multigraph::from_pairs(2, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(count_induced(&single, &host, Flavor::Plain), 0);
        let double = pat(2, &[(0, 1), (0, 1)]);
        assert_eq!(count_induced(&double, &host, Flavor::Plain), 1);
    }

    #[test]
    fn fragment_counting_tracks_severed_edges() {
        let host = Multigraph::from_pairs(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let edge = Multigraph::from_pairs(2, &[(0, 1)]).unwrap();
        // Middle edge of the path: one stub at each end. Only {1,2} fits.
        let middle = Pattern {
            graph: edge.clone(),
            kappa: vec![1, 1],
        };
        assert_eq!(count_induced(&middle, &host, Flavor::Fragment), 1);
        // End edge: one stub total. {0,1} and {2,3}.
        let end = Pattern {
            graph: edge.clone(),
            kappa: vec![0, 1],
        };
        assert_eq!(count_induced(&end, &host, Flavor::Fragment), 2);
        // No stubs: no size-2 subset of a connected P4 is edge-isolated.
        let free = Pattern {
            graph: edge,
            kappa: vec![0, 0],
        };
        assert_eq!(count_induced(&free, &host, Flavor::Fragment), 0);
    }

    #[test]
    fn bijection_agrees_with_canonical_keys() {
        let cases: Vec<(usize, Vec<(u32, u32)>)> = vec![
            (4, vec![(0, 1), (1, 2), (2, 3)]),
            (4, vec![(0, 1), (0, 2), (0, 3)]),
            (4, vec![(0, 1), (1, 2), (2, 3), (3, 0)]),
            (3, vec![(0, 1), (1, 2), (0, 2)]),
            (3, vec![(0, 1), (1, 2)]),
            (2, vec![(0, 1), (0, 1)]),
            (2, vec![(0, 1)]),
        ];
        for (i, (n1, e1)) in cases.iter().enumerate() {
            for (j, (n2, e2)) in cases.iter().enumerate() {
                let a = pat(*n1, e1);
                let b = pat(*n2, e2);
                let by_search = is_isomorphic_connected(&a, &b, Flavor::Plain);
                let by_key = canonical_key(&a, Flavor::Plain) == canonical_key(&b, Flavor::Plain);
                assert_eq!(by_search, by_key, "case {i} vs {j}");
                assert_eq!(by_search, i == j, "case {i} vs {j}");
            }
        }
    }

    #[test]
    fn petersen_automorphic_relabeling() {
        let mut edges: Vec<(u32, u32)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
        edges.extend((0..5).map(|i| (i, 5 + i)));
        let a = pat(10, &edges);
        let relabeled: Vec<(u32, u32)> = edges
            .iter()
            .map(|&(u, v)| ((7 * u + 3) % 10, (7 * v + 3) % 10))
            .collect();
        let b = pat(10, &relabeled);
        assert!(is_isomorphic_connected(&a, &b, Flavor::Plain));
    }
}
