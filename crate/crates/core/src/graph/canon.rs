//! Canonical codes for patterns.
//!
//! Two patterns get the same [`PatternKey`] exactly when they are isomorphic
//! under the chosen flavor. The code is produced by color refinement plus
//! individualization: refine a vertex coloring to a fixpoint, and while some
//! color class holds more than one vertex, branch on which of its members
//! comes first. Each discrete coloring yields a serialization of the pattern;
//! the lexicographically smallest one wins. Disconnected patterns are encoded
//! per component and the component codes sorted, so the key is independent of
//! component order as well.

use std::collections::HashMap;

use crate::graph::pattern::{Flavor, Pattern};

/// Canonical code. Ordering is lexicographic on the token stream.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PatternKey(Vec<u32>);

impl PatternKey {
    pub fn tokens(&self) -> &[u32] {
        &self.0
    }
}

/// Attribute view of a pattern under a flavor: exactly the data isomorphism
/// must respect, with everything else zeroed out.
pub(crate) struct AttrView {
    pub n: usize,
    /// Per vertex: (color, half-edge count), zeroed when the flavor ignores them.
    pub vattr: Vec<(u32, u32)>,
    pub degree: Vec<u32>,
    /// Sorted loop attributes per vertex.
    pub loops: Vec<Vec<u32>>,
    /// Per vertex: one (neighbor, attr) entry per non-loop edge instance, sorted.
    pub adj: Vec<Vec<(u32, u32)>>,
    /// Non-loop edges bucketed by endpoint pair (u < v), attrs sorted.
    pub pairs: HashMap<(u32, u32), Vec<u32>>,
}

pub(crate) fn attr_view(p: &Pattern, flavor: Flavor) -> AttrView {
    let g = &p.graph;
    let n = g.n();
    let use_vcolor = matches!(flavor, Flavor::VertexColored | Flavor::Fragment);
    let use_ecolor = matches!(flavor, Flavor::EdgeColored);
    let use_kappa = matches!(flavor, Flavor::Fragment);
    let vattr = (0..n)
        .map(|v| {
            let c = if use_vcolor { g.vertex_color(v as u32) } else { 0 };
            let k = if use_kappa { p.kappa[v] } else { 0 };
            (c, k)
        })
        .collect();
    let mut loops = vec![Vec::new(); n];
    let mut adj = vec![Vec::new(); n];
    let mut pairs: HashMap<(u32, u32), Vec<u32>> = HashMap::new();
    for e in g.edges() {
        let attr = if use_ecolor { e.color } else { 0 };
        if e.u == e.v {
            loops[e.u as usize].push(attr);
        } else {
            adj[e.u as usize].push((e.v, attr));
            adj[e.v as usize].push((e.u, attr));
            pairs.entry((e.u, e.v)).or_default().push(attr);
        }
    }
    for l in &mut loops {
        l.sort_unstable();
    }
    for a in &mut adj {
        a.sort_unstable();
    }
    for v in pairs.values_mut() {
        v.sort_unstable();
    }
    let degree = (0..n).map(|v| g.degree(v as u32)).collect();
    AttrView {
        n,
        vattr,
        degree,
        loops,
        adj,
        pairs,
    }
}

/// Canonical key of a pattern under a flavor. Works for empty, connected,
/// and disconnected patterns alike.
pub fn canonical_key(p: &Pattern, flavor: Flavor) -> PatternKey {
    let comps = p.graph.components();
    let mut codes: Vec<Vec<u32>> = comps
        .iter()
        .map(|c| {
            let sub = p.induced(c, flavor);
            component_code(&attr_view(&sub, flavor))
        })
        .collect();
    codes.sort_unstable();
    let mut tokens = vec![flavor.id(), p.graph.n() as u32, codes.len() as u32];
    for code in codes {
        tokens.push(code.len() as u32);
        tokens.extend(code);
    }
    PatternKey(tokens)
}

fn component_code(view: &AttrView) -> Vec<u32> {
    let mut colors = initial_colors(view);
    refine(view, &mut colors);
    let mut best: Option<Vec<u32>> = None;
    search(view, colors, &mut best);
    best.expect("component has at least one labeling")
}

/// Replace arbitrary signatures by their rank among the distinct values.
fn rank<T: Ord + Clone>(sigs: &[T]) -> Vec<u32> {
    let mut sorted: Vec<T> = sigs.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sigs.iter()
        .map(|s| sorted.binary_search(s).unwrap() as u32)
        .collect()
}

fn initial_colors(view: &AttrView) -> Vec<u32> {
    let sigs: Vec<((u32, u32), u32, &Vec<u32>)> = (0..view.n)
        .map(|v| (view.vattr[v], view.degree[v], &view.loops[v]))
        .collect();
    rank(&sigs)
}

/// One-dimensional refinement to a fixpoint. New colors sort first by old
/// color, so the partition only ever splits and the loop terminates.
fn refine(view: &AttrView, colors: &mut Vec<u32>) {
    loop {
        let sigs: Vec<(u32, Vec<(u32, u32)>)> = (0..view.n)
            .map(|v| {
                let mut around: Vec<(u32, u32)> = view.adj[v]
                    .iter()
                    .map(|&(w, attr)| (colors[w as usize], attr))
                    .collect();
                around.sort_unstable();
                (colors[v], around)
            })
            .collect();
        let new = rank(&sigs);
        if new == *colors {
            return;
        }
        *colors = new;
    }
}

fn search(view: &AttrView, colors: Vec<u32>, best: &mut Option<Vec<u32>>) {
    let mut class_size = vec![0u32; view.n];
    for &c in &colors {
        class_size[c as usize] += 1;
    }
    let target = (0..view.n).find(|&c| class_size[c] > 1);
    let target = match target {
        None => {
            let code = encode(view, &colors);
            if best.as_ref().map_or(true, |b| code < *b) {
                *best = Some(code);
            }
            return;
        }
        Some(c) => c as u32,
    };
    let cell: Vec<usize> = (0..view.n).filter(|&v| colors[v] == target).collect();
    for &v in &cell {
        // Give v its own color class just below the rest of its cell.
        let mut split: Vec<u32> = colors.iter().map(|&c| c * 2).collect();
        for &u in &cell {
            if u != v {
                split[u] += 1;
            }
        }
        refine(view, &mut split);
        search(view, split, best);
    }
}

/// Serialize under a discrete coloring: colors[v] is v's position.
fn encode(view: &AttrView, colors: &[u32]) -> Vec<u32> {
    let n = view.n;
    let mut at = vec![0usize; n];
    for v in 0..n {
        at[colors[v] as usize] = v;
    }
    let mut out = Vec::with_capacity(4 * n);
    out.push(n as u32);
    for &v in at.iter() {
        out.push(view.vattr[v].0);
        out.push(view.vattr[v].1);
        out.push(view.loops[v].len() as u32);
        out.extend_from_slice(&view.loops[v]);
    }
    let mut pair_list: Vec<(u32, u32, &Vec<u32>)> = view
        .pairs
        .iter()
        .map(|(&(u, v), attrs)| {
            let (a, b) = (colors[u as usize], colors[v as usize]);
            (a.min(b), a.max(b), attrs)
        })
        .collect();
    pair_list.sort_unstable();
    out.push(pair_list.len() as u32);
    for (a, b, attrs) in pair_list {
        out.push(a);
        out.push(b);
        out.push(attrs.len() as u32);
        out.extend_from_slice(attrs);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Multigraph;

    fn pat(n: usize, pairs: &[(u32, u32)]) -> Pattern {
        Pattern::from_graph(&Multigraph::from_pairs(n, pairs).unwrap())
    }

    fn key(n: usize, pairs: &[(u32, u32)]) -> PatternKey {
        canonical_key(&pat(n, pairs), Flavor::Plain)
    }

    #[test]
    fn relabeling_preserves_key() {
        let a = key(4, &[(0, 1), (1, 2), (2, 3)]);
        let b = key(4, &[(3, 2), (0, 2), (0, 1)]); // same path relabeled
        assert_eq!(a, b);
    }

    #[test]
    fn distinguishes_path_from_star() {
        let path = key(4, &[(0, 1), (1, 2), (2, 3)]);
        let star = key(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_ne!(path, star);
    }

    #[test]
    fn distinguishes_regular_pairs() {
        // C6 and two triangles are both 2-regular on six vertices.
        let c6 = key(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        let kk = key(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
        assert_ne!(c6, kk);
    }

    #[test]
    fn component_order_is_irrelevant() {
        let a = key(3, &[(0, 1)]); // edge + isolated vertex 2
        let b = key(3, &[(1, 2)]); // isolated vertex 0 + edge
        assert_eq!(a, b);
    }

    #[test]
    fn multiplicity_matters_in_plain_flavor() {
        let single = key(2, &[(0, 1)]);
        let double = key(2, &[(0, 1), (0, 1)]);
        assert_ne!(single, double);
        let loopy = key(1, &[(0, 0)]);
        let bare = key(1, &[]);
        assert_ne!(loopy, bare);
    }

    #[test]
    fn vertex_colors_respected_only_when_flavored() {
        let mut g = Multigraph::from_pairs(2, &[(0, 1)]).unwrap();
        g.set_vertex_color(0, 7).unwrap();
        let colored = Pattern::from_graph(&g);
        let plain_g = pat(2, &[(0, 1)]);
        assert_eq!(
            canonical_key(&colored, Flavor::Plain),
            canonical_key(&plain_g, Flavor::Plain)
        );
        assert_ne!(
            canonical_key(&colored, Flavor::VertexColored),
            canonical_key(&plain_g, Flavor::VertexColored)
        );
        // Swapping which endpoint is colored is an isomorphism.
        let mut h = Multigraph::from_pairs(2, &[(0, 1)]).unwrap();
        h.set_vertex_color(1, 7).unwrap();
        assert_eq!(
            canonical_key(&colored, Flavor::VertexColored),
            canonical_key(&Pattern::from_graph(&h), Flavor::VertexColored)
        );
    }

    #[test]
    fn edge_colors_respected_only_when_flavored() {
        let mut g = Multigraph::new(3);
        g.add_colored_edge(0, 1, 1).unwrap();
        g.add_colored_edge(1, 2, 2).unwrap();
        let mut h = Multigraph::new(3);
        h.add_colored_edge(0, 1, 1).unwrap();
        h.add_colored_edge(1, 2, 1).unwrap();
        let gp = Pattern::from_graph(&g);
        let hp = Pattern::from_graph(&h);
        assert_eq!(
            canonical_key(&gp, Flavor::Plain),
            canonical_key(&hp, Flavor::Plain)
        );
        assert_ne!(
            canonical_key(&gp, Flavor::EdgeColored),
            canonical_key(&hp, Flavor::EdgeColored)
        );
        // Mirror image of the two-colored path is isomorphic.
        let mut m = Multigraph::new(3);
        m.add_colored_edge(0, 1, 2).unwrap();
        m.add_colored_edge(1, 2, 1).unwrap();
        assert_eq!(
            canonical_key(&gp, Flavor::EdgeColored),
            canonical_key(&Pattern::from_graph(&m), Flavor::EdgeColored)
        );
    }

    #[test]
    fn kappa_respected_only_in_fragment_flavor() {
        let base = pat(2, &[(0, 1)]);
        let stubbed = Pattern {
            graph: base.graph.clone(),
            kappa: vec![1, 0],
        };
        assert_eq!(
            canonical_key(&base, Flavor::Plain),
            canonical_key(&stubbed, Flavor::Plain)
        );
        assert_ne!(
            canonical_key(&base, Flavor::Fragment),
            canonical_key(&stubbed, Flavor::Fragment)
        );
        let mirrored = Pattern {
            graph: base.graph.clone(),
            kappa: vec![0, 1],
        };
        assert_eq!(
            canonical_key(&stubbed, Flavor::Fragment),
            canonical_key(&mirrored, Flavor::Fragment)
        );
    }

    #[test]
    fn empty_pattern_has_a_key() {
        let a = key(0, &[]);
        let b = key(0, &[]);
        assert_eq!(a, b);
    }

    #[test]
    fn petersen_vs_relabeled_petersen() {
        // Vertex-transitive and 3-regular: exercises the individualization
        // branching, not just refinement.
        let outer: Vec<(u32, u32)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        let inner: Vec<(u32, u32)> = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5)).collect();
        let spokes: Vec<(u32, u32)> = (0..5).map(|i| (i, 5 + i)).collect();
        let mut edges = outer.clone();
        edges.extend(&inner);
        edges.extend(&spokes);
        let p1 = key(10, &edges);
        // Relabel via v -> (3v + 1) mod 10.
        let relabeled: Vec<(u32, u32)> = edges
            .iter()
            .map(|&(u, v)| ((3 * u + 1) % 10, (3 * v + 1) % 10))
            .collect();
        let p2 = key(10, &relabeled);
        assert_eq!(p1, p2);
        // Petersen is triangle-free; C10 plus matching chords is a different
        // 3-regular graph on ten vertices.
        let mut other: Vec<(u32, u32)> = (0..10).map(|i| (i, (i + 1) % 10)).collect();
        other.extend((0..5).map(|i| (i, i + 5)));
        assert_ne!(p1, key(10, &other));
    }
}
