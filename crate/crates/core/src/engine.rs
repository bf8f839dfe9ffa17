//! Expansion-coefficient engine.
//!
//! For an additive graph invariant, the j-th inverse power sum of the host
//! polynomial is a linear combination of connected induced pattern counts,
//! p_j = sum over classes H of a(H, j) * ind(H, G). The a-coefficients obey
//! a Newton-style recursion over ordered subset covers of each pattern:
//!
//!   a(U, k) = -k w(U, k) - sum_{i=1..k-1} sum_{S cup T = U} w(U[S], i) a(U[T], k-i)
//!
//! where w is the model's weight and disconnected or empty patterns carry
//! zero. The engine evaluates this bottom-up over the census of connected
//! induced vertex sets, one host component at a time (the invariant is
//! additive, so components never mix). Within one pattern class the cover
//! sum is grouped by S: the inner sum over T then runs over supersets of
//! U minus S, which a superset-sum transform over the subset lattice of U
//! delivers for every S at once in 2^h * h operations per order.
//!
//! All iteration orders are fixed by construction (sets sorted, classes in
//! (order, first-set) order, fixed-order transforms), so repeated runs give
//! bit-identical output. Hash maps appear only as lookup indices, never as
//! iteration sources feeding floating-point sums.

use std::collections::HashMap;

use num_complex::Complex64;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::canon::canonical_key;
use crate::graph::pattern::{Flavor, Pattern};
use crate::graph::{Multigraph, PatternKey};
use crate::series::{coeffs_from_power_sums, power_sums_from_coeffs, PowerSums};

/// Largest component the subset engine accepts; sets are u64 bit masks.
pub const MAX_COMPONENT_VERTICES: usize = 64;

/// Which vertex subsets of a pattern can carry nonzero weight. Lets the
/// engine skip the rest without constructing patterns for them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SupportFilter {
    /// Subsets inducing no edge; a looped vertex never qualifies.
    IndependentSets,
    /// Subsets whose induced graph has minimum degree one.
    NoIsolatedVertex,
    /// Every nonempty subset.
    AllSubsets,
}

/// A partition-function family the engine can expand: a weight per
/// connected pattern plus the bookkeeping needed to bound the search.
///
/// The weights must describe a multiplicative invariant (the polynomial of
/// a disjoint union is the product of the parts); only then is the log
/// additive and the coefficient recursion closed over connected patterns.
pub trait CountingModel {
    /// Pattern attributes that matter when grouping isomorphic subsets.
    fn flavor(&self) -> Flavor;

    /// Support growth rate: patterns on more than alpha * j vertices have
    /// zero weight and zero coefficient at order j.
    fn alpha(&self) -> usize;

    /// Upper bound on the polynomial degree contributed by one connected
    /// component. Power sums beyond it are Newton tails, so the engine
    /// never runs the subset recursion past this order.
    fn degree_bound(&self, component: &Multigraph) -> usize;

    /// Which subsets can carry nonzero weight.
    fn support(&self) -> SupportFilter;

    /// Nonzero weights of a pattern as (order, value) pairs, strictly
    /// ascending in order. Must depend only on the pattern up to flavor
    /// isomorphism.
    fn weight_profile(&self, p: &Pattern) -> Vec<(usize, Complex64)>;

    /// Work estimate for one weight_profile call, in budget units.
    fn profile_cost(&self, p: &Pattern) -> u64 {
        p.order() as u64 + 1
    }
}

/// One isomorphism class of connected induced subsets of the host.
#[derive(Debug, Clone)]
pub struct SupportEntry {
    pub key: PatternKey,
    /// Pattern induced by the first set of the class.
    pub pattern: Pattern,
    /// Number of host vertex sets inducing this class.
    pub count: u64,
    /// a(H, j) for j = 1..=coeffs.len().
    pub coeffs: Vec<Complex64>,
}

/// Census of connected pattern classes with expansion coefficients,
/// ordered by (pattern order, canonical key).
#[derive(Debug, Clone)]
pub struct SupportTable {
    pub classes: Vec<SupportEntry>,
    /// Orders covered by every class's coefficient vector.
    pub order: usize,
    by_key: HashMap<PatternKey, usize>,
}

impl SupportTable {
    pub fn entry(&self, key: &PatternKey) -> Option<&SupportEntry> {
        self.by_key.get(key).map(|&i| &self.classes[i])
    }

    /// a(H, j) for j >= 1; zero for unknown classes and past the table order.
    pub fn coefficient(&self, key: &PatternKey, j: usize) -> Complex64 {
        assert!(j >= 1, "coefficient orders start at one");
        self.entry(key)
            .and_then(|e| e.coeffs.get(j - 1))
            .copied()
            .unwrap_or_default()
    }

    /// p_j = sum over classes of a(H, j) * count for j = 1..=order.
    pub fn power_sums(&self) -> PowerSums {
        let mut p = vec![Complex64::default(); self.order];
        for e in &self.classes {
            let c = e.count as f64;
            for (j, &a) in e.coeffs.iter().enumerate() {
                p[j] += a.scale(c);
            }
        }
        PowerSums::new(p)
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

/// Full class census with coefficients for orders 1..=m, merged over host
/// components (counts add; coefficients are intrinsic to the class).
pub fn compute_support_table(
    g: &Multigraph,
    model: &dyn CountingModel,
    m: usize,
    budget: &mut Budget,
) -> Result<SupportTable> {
    let mut classes: Vec<SupportEntry> = Vec::new();
    let mut by_key: HashMap<PatternKey, usize> = HashMap::new();
    for comp in g.components() {
        let cg = g.induced(&comp);
        for c in component_classes(&cg, model, m, budget)? {
            match by_key.get(&c.key) {
                Some(&i) => {
                    classes[i].count += c.count;
                    if c.coeffs.len() > classes[i].coeffs.len() {
                        classes[i].coeffs = c.coeffs;
                    }
                }
                None => {
                    by_key.insert(c.key.clone(), classes.len());
                    classes.push(SupportEntry {
                        key: c.key,
                        pattern: c.pattern,
                        count: c.count,
                        coeffs: c.coeffs,
                    });
                }
            }
        }
    }
    classes.sort_by(|a, b| (a.pattern.order(), &a.key).cmp(&(b.pattern.order(), &b.key)));
    let by_key = classes
        .iter()
        .enumerate()
        .map(|(i, c)| (c.key.clone(), i))
        .collect();
    Ok(SupportTable {
        classes,
        order: m,
        by_key,
    })
}

/// Inverse power sums p_1..p_m of the host polynomial. Per component the
/// subset recursion only runs to the model's degree bound; the remaining
/// orders follow exactly from Newton's identities, since coefficients past
/// the degree vanish.
pub fn compute_power_sums(
    g: &Multigraph,
    model: &dyn CountingModel,
    m: usize,
    budget: &mut Budget,
) -> Result<PowerSums> {
    let mut total = PowerSums::zeros(m);
    for comp in g.components() {
        let cg = g.induced(&comp);
        let mt = m.min(model.degree_bound(&cg));
        let classes = component_classes(&cg, model, mt, budget)?;
        let mut p = vec![Complex64::default(); mt];
        for c in &classes {
            let cnt = c.count as f64;
            for j in 0..mt {
                p[j] += c.coeffs[j].scale(cnt);
            }
        }
        let p = PowerSums::new(p);
        let ext = if mt < m {
            let e = coeffs_from_power_sums(&p, mt);
            power_sums_from_coeffs(&e, m)?
        } else {
            p
        };
        for j in 0..m {
            total.p[j] += ext.p[j];
        }
    }
    Ok(total)
}

struct ClassData {
    key: PatternKey,
    pattern: Pattern,
    rep_mask: u64,
    count: u64,
    coeffs: Vec<Complex64>,
}

/// Weight profiles cached by global vertex mask; the same subset shows up
/// in many enclosing patterns but its weight is computed once.
struct ProfileCache {
    arena: Vec<Vec<(usize, Complex64)>>,
    by_mask: HashMap<u64, u32>,
}

impl ProfileCache {
    fn get(
        &mut self,
        mask: u64,
        host: &Pattern,
        model: &dyn CountingModel,
        budget: &mut Budget,
    ) -> Result<u32> {
        if let Some(&idx) = self.by_mask.get(&mask) {
            return Ok(idx);
        }
        let pat = host.induced(&bit_positions(mask), model.flavor());
        budget.charge(model.profile_cost(&pat), "pattern weights")?;
        let profile = model.weight_profile(&pat);
        debug_assert!(profile.windows(2).all(|w| w[0].0 < w[1].0));
        let idx = self.arena.len() as u32;
        self.arena.push(profile);
        self.by_mask.insert(mask, idx);
        Ok(idx)
    }
}

/// Class census of one connected-or-not host component (local labels) with
/// coefficients for orders 1..=m_t, classes in (order, first-set) order.
fn component_classes(
    comp: &Multigraph,
    model: &dyn CountingModel,
    m_t: usize,
    budget: &mut Budget,
) -> Result<Vec<ClassData>> {
    let n = comp.n();
    if n > MAX_COMPONENT_VERTICES {
        return Err(Error::ResourceLimit(format!(
            "component has {n} vertices; the subset engine handles at most \
             {MAX_COMPONENT_VERTICES}"
        )));
    }
    let limit = (model.alpha() * m_t).min(n);
    let mut adj = vec![0u64; n];
    let mut looped = 0u64;
    for e in comp.edges() {
        if e.u == e.v {
            looped |= 1 << e.u;
        } else {
            adj[e.u as usize] |= 1 << e.v;
            adj[e.v as usize] |= 1 << e.u;
        }
    }

    let mut masks = connected_set_masks(&adj, limit, budget)?;
    masks.sort_unstable_by_key(|&m| (m.count_ones(), m));

    let flavor = model.flavor();
    let host = Pattern::from_graph(comp);
    let mut classes: Vec<ClassData> = Vec::new();
    let mut registry: HashMap<PatternKey, u32> = HashMap::new();
    let mut class_of: HashMap<u64, u32> = HashMap::with_capacity(masks.len());
    for &mask in &masks {
        let pat = host.induced(&bit_positions(mask), flavor);
        let h = pat.order() as u64;
        budget.charge((h + 1) * (h + 1), "pattern grouping")?;
        let key = canonical_key(&pat, flavor);
        let id = match registry.get(&key) {
            Some(&id) => {
                classes[id as usize].count += 1;
                id
            }
            None => {
                let id = classes.len() as u32;
                registry.insert(key.clone(), id);
                classes.push(ClassData {
                    key,
                    pattern: pat,
                    rep_mask: mask,
                    count: 1,
                    coeffs: Vec::new(),
                });
                id
            }
        };
        class_of.insert(mask, id);
    }

    let mut profiles = ProfileCache {
        arena: Vec::new(),
        by_mask: HashMap::new(),
    };

    for ci in 0..classes.len() {
        let rep = classes[ci].rep_mask;
        let bits = bit_positions(rep);
        let h = bits.len();
        budget.charge(
            (1u64 << h) * (h as u64 + 2) * m_t.max(1) as u64,
            "subset recursion",
        )?;

        // Connected subsets of the representative, in compact bit space.
        let cadj: Vec<u64> = bits
            .iter()
            .map(|&b| compact(adj[b as usize] & rep, &bits))
            .collect();
        let t_masks = connected_set_masks(&cadj, h, budget)?;
        let mut t_list: Vec<(u32, u32)> = Vec::with_capacity(t_masks.len());
        for &tm in &t_masks {
            let global = expand(tm, &bits);
            let cls = class_of[&global];
            t_list.push((tm as u32, cls));
        }

        // Supported subsets S, each as (compact index of U minus S, profile).
        let full = ((1u64 << h) - 1) as usize;
        let mut s_list: Vec<(u32, u32)> = Vec::new();
        let consider = |s: u64,
                            profiles: &mut ProfileCache,
                            s_list: &mut Vec<(u32, u32)>,
                            budget: &mut Budget|
         -> Result<()> {
            let pidx = profiles.get(expand(s, &bits), &host, model, budget)?;
            if !profiles.arena[pidx as usize].is_empty() {
                s_list.push(((full as u64 & !s) as u32, pidx));
            }
            Ok(())
        };
        match model.support() {
            SupportFilter::AllSubsets => {
                for s in 1..=full as u64 {
                    consider(s, &mut profiles, &mut s_list, budget)?;
                }
            }
            SupportFilter::NoIsolatedVertex => {
                'subset: for s in 1..=full as u64 {
                    let mut rest = s;
                    while rest != 0 {
                        let v = rest.trailing_zeros() as usize;
                        rest &= rest - 1;
                        if cadj[v] & s == 0 {
                            continue 'subset;
                        }
                    }
                    consider(s, &mut profiles, &mut s_list, budget)?;
                }
            }
            SupportFilter::IndependentSets => {
                let clooped = compact(looped & rep, &bits);
                let mut stack: Vec<(u64, u64)> = vec![(0, !clooped & full as u64)];
                while let Some((s, mut cand)) = stack.pop() {
                    while cand != 0 {
                        let v = cand.trailing_zeros() as usize;
                        cand &= cand - 1;
                        let bigger = s | (1 << v);
                        consider(bigger, &mut profiles, &mut s_list, budget)?;
                        stack.push((bigger, cand & !cadj[v]));
                    }
                }
                // Stack order is deterministic but not sorted; fix it.
                s_list.sort_unstable();
            }
        }

        let own = profiles.get(rep, &host, model, budget)?;
        let own_profile = &profiles.arena[own as usize];
        let mut own_by_order = vec![Complex64::default(); m_t + 1];
        for &(i, w) in own_profile {
            if i <= m_t {
                own_by_order[i] = w;
            }
        }
        let min_step = s_list
            .iter()
            .filter_map(|&(_, pidx)| profiles.arena[pidx as usize].first().map(|&(i, _)| i))
            .min()
            .unwrap_or(usize::MAX);

        let (done, rest) = classes.split_at_mut(ci);
        let cur = &mut rest[0];
        cur.coeffs = vec![Complex64::default(); m_t];
        let mut acc = vec![Complex64::default(); m_t + 1];
        let mut z = vec![Complex64::default(); full + 1];
        for j in 1..=m_t {
            cur.coeffs[j - 1] = -own_by_order[j].scale(j as f64) - acc[j];
            if min_step == usize::MAX || j + min_step > m_t {
                continue;
            }
            z.fill(Complex64::default());
            for &(tm, cls) in &t_list {
                z[tm as usize] = if cls as usize == ci {
                    cur.coeffs[j - 1]
                } else {
                    done[cls as usize].coeffs[j - 1]
                };
            }
            // z[x] becomes the sum of a(T, j) over connected T containing x.
            for b in 0..h {
                let bit = 1usize << b;
                for idx in 0..=full {
                    if idx & bit == 0 {
                        let upper = z[idx | bit];
                        z[idx] += upper;
                    }
                }
            }
            for &(x_idx, pidx) in &s_list {
                let zx = z[x_idx as usize];
                for &(i, w) in &profiles.arena[pidx as usize] {
                    if j + i <= m_t {
                        acc[j + i] += w * zx;
                    }
                }
            }
        }
    }
    Ok(classes)
}

/// All nonempty sets that are connected in the mask adjacency and have at
/// most max_size bits, each exactly once. A set is first reached from its
/// minimum vertex, then grown one neighbor at a time; a vertex declined at
/// some branch stays banned in all later branches of the same parent, which
/// is what makes the walk duplicate-free.
fn connected_set_masks(adj: &[u64], max_size: usize, budget: &mut Budget) -> Result<Vec<u64>> {
    #[allow(clippy::too_many_arguments)]
    fn grow(
        adj: &[u64],
        set: u64,
        size: usize,
        nbrs: u64,
        banned: u64,
        max_size: usize,
        out: &mut Vec<u64>,
        budget: &mut Budget,
    ) -> Result<()> {
        budget.charge(1, "connected-set enumeration")?;
        out.push(set);
        if size == max_size {
            return Ok(());
        }
        let mut banned = banned;
        let mut cand = nbrs & !set & !banned;
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            let bit = 1u64 << v;
            cand &= cand - 1;
            grow(
                adj,
                set | bit,
                size + 1,
                nbrs | adj[v],
                banned,
                max_size,
                out,
                budget,
            )?;
            banned |= bit;
        }
        Ok(())
    }

    let mut out = Vec::new();
    if max_size == 0 {
        return Ok(out);
    }
    for r in 0..adj.len() {
        let below = (1u64 << r) - 1;
        grow(
            adj,
            1u64 << r,
            1,
            adj[r],
            below,
            max_size,
            &mut out,
            budget,
        )?;
    }
    Ok(out)
}

fn bit_positions(mask: u64) -> Vec<u32> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut rest = mask;
    while rest != 0 {
        out.push(rest.trailing_zeros());
        rest &= rest - 1;
    }
    out
}

/// Project a subset of the representative onto its compact bit space.
fn compact(mask: u64, bits: &[u32]) -> u64 {
    let mut idx = 0u64;
    for (i, &b) in bits.iter().enumerate() {
        idx |= (mask >> b & 1) << i;
    }
    idx
}

/// Inverse of compact.
fn expand(idx: u64, bits: &[u32]) -> u64 {
    let mut mask = 0u64;
    for (i, &b) in bits.iter().enumerate() {
        mask |= (idx >> i & 1) << b;
    }
    mask
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::enumerate::enumerate_connected_sets;

    /// Independence polynomial with unit activities: weight one on every
    /// edgeless pattern, at order |V|.
    struct UnitIndependence;

    impl CountingModel for UnitIndependence {
        fn flavor(&self) -> Flavor {
            Flavor::Plain
        }
        fn alpha(&self) -> usize {
            1
        }
        fn degree_bound(&self, component: &Multigraph) -> usize {
            component.n()
        }
        fn support(&self) -> SupportFilter {
            SupportFilter::IndependentSets
        }
        fn weight_profile(&self, p: &Pattern) -> Vec<(usize, Complex64)> {
            if p.graph.edge_count() == 0 {
                vec![(p.order(), Complex64::new(1.0, 0.0))]
            } else {
                Vec::new()
            }
        }
    }

    /// Z = (1 + z)^n: every i-vertex subset carries weight one, edges
    /// ignored. Exercises the all-subsets path, including disconnected
    /// weighted subsets.
    struct Binomial;

    impl CountingModel for Binomial {
        fn flavor(&self) -> Flavor {
            Flavor::Plain
        }
        fn alpha(&self) -> usize {
            1
        }
        fn degree_bound(&self, component: &Multigraph) -> usize {
            component.n()
        }
        fn support(&self) -> SupportFilter {
            SupportFilter::AllSubsets
        }
        fn weight_profile(&self, p: &Pattern) -> Vec<(usize, Complex64)> {
            vec![(p.order(), Complex64::new(1.0, 0.0))]
        }
    }

    /// Z = (1 + w z)^|E|: the weight of a pattern at order i counts its
    /// edge subsets of size i covering every vertex, scaled by w^i.
    /// Exercises the no-isolated-vertex path and multi-entry profiles.
    struct EdgeSubsets {
        w: Complex64,
    }

    impl CountingModel for EdgeSubsets {
        fn flavor(&self) -> Flavor {
            Flavor::Plain
        }
        fn alpha(&self) -> usize {
            2
        }
        fn degree_bound(&self, component: &Multigraph) -> usize {
            component.edge_count()
        }
        fn support(&self) -> SupportFilter {
            SupportFilter::NoIsolatedVertex
        }
        fn weight_profile(&self, p: &Pattern) -> Vec<(usize, Complex64)> {
            let edges = p.graph.edges();
            let n = p.order();
            let full: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };
            let mut by_size = vec![Complex64::default(); edges.len() + 1];
            for f in 0..(1u64 << edges.len()) {
                let mut covered = 0u64;
                for (i, e) in edges.iter().enumerate() {
                    if f >> i & 1 == 1 {
                        covered |= (1 << e.u) | (1 << e.v);
                    }
                }
                if covered == full {
                    by_size[f.count_ones() as usize] += self.w.powu(f.count_ones());
                }
            }
            by_size
                .into_iter()
                .enumerate()
                .skip(1)
                .filter(|(_, v)| v.norm() != 0.0)
                .map(|(i, v)| (i, v))
                .collect()
        }
        fn profile_cost(&self, p: &Pattern) -> u64 {
            (1u64 << p.graph.edge_count().min(40)) * (p.graph.edge_count() as u64 + 1)
        }
    }

    fn triangle() -> Multigraph {
        Multigraph::from_pairs(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn path(n: usize) -> Multigraph {
        let pairs: Vec<(u32, u32)> = (1..n as u32).map(|i| (i - 1, i)).collect();
        Multigraph::from_pairs(n, &pairs).unwrap()
    }

    fn real_close(got: Complex64, want: f64) -> bool {
        (got - Complex64::new(want, 0.0)).norm() < 1e-9
    }

    fn key_of(g: &Multigraph) -> PatternKey {
        canonical_key(&Pattern::from_graph(g), Flavor::Plain)
    }

    #[test]
    fn single_vertex_coefficient_is_minus_one() {
        let g = Multigraph::new(1);
        let table =
            compute_support_table(&g, &UnitIndependence, 1, &mut Budget::unlimited()).unwrap();
        assert_eq!(table.len(), 1);
        assert!(real_close(table.coefficient(&key_of(&g), 1), -1.0));
    }

    #[test]
    fn triangle_power_sums_match_closed_form() {
        // Z(C3) = 1 + 3z has its root at -1/3, so p_j = (-3)^j.
        let p = compute_power_sums(&triangle(), &UnitIndependence, 3, &mut Budget::unlimited())
            .unwrap();
        assert!(real_close(p.order(1), -3.0));
        assert!(real_close(p.order(2), 9.0));
        assert!(real_close(p.order(3), -27.0));
    }

    #[test]
    fn triangle_table_census() {
        let table =
            compute_support_table(&triangle(), &UnitIndependence, 3, &mut Budget::unlimited())
                .unwrap();
        let shape: Vec<(usize, u64)> = table
            .classes
            .iter()
            .map(|c| (c.pattern.order(), c.count))
            .collect();
        assert_eq!(shape, vec![(1, 3), (2, 3), (3, 1)]);
        let p = table.power_sums();
        assert!(real_close(p.order(2), 9.0));
    }

    #[test]
    fn path_coefficients_hand_checked() {
        // For unit independence: a(K1) = (-1)^j, a(K2, .) = [0, 2, -6],
        // a(P3, .) = [0, 0, -3].
        let g = path(3);
        let table = compute_support_table(&g, &UnitIndependence, 3, &mut Budget::unlimited())
            .unwrap();
        let k1 = key_of(&Multigraph::new(1));
        let k2 = key_of(&path(2));
        let p3 = key_of(&g);
        for (j, want) in [(1, -1.0), (2, 1.0), (3, -1.0)] {
            assert!(real_close(table.coefficient(&k1, j), want));
        }
        for (j, want) in [(1, 0.0), (2, 2.0), (3, -6.0)] {
            assert!(real_close(table.coefficient(&k2, j), want));
        }
        for (j, want) in [(1, 0.0), (2, 0.0), (3, -3.0)] {
            assert!(real_close(table.coefficient(&p3, j), want));
        }
        // Z(P3) = 1 + 3z + z^2; inverse roots sum to -3, their squares to 7.
        let p = table.power_sums();
        assert!(real_close(p.order(1), -3.0));
        assert!(real_close(p.order(2), 7.0));
        assert!(real_close(p.order(3), -18.0));
    }

    #[test]
    fn disjoint_union_adds_power_sums() {
        let k2 = path(2);
        let twice = k2.disjoint_union(&k2);
        let single =
            compute_power_sums(&k2, &UnitIndependence, 2, &mut Budget::unlimited()).unwrap();
        let both =
            compute_power_sums(&twice, &UnitIndependence, 2, &mut Budget::unlimited()).unwrap();
        assert!(real_close(both.order(1), -4.0));
        assert!(real_close(both.order(2), 8.0));
        for j in 1..=2 {
            assert!((both.order(j) - single.order(j).scale(2.0)).norm() < 1e-12);
        }
        // Class counts merge across components.
        let table =
            compute_support_table(&twice, &UnitIndependence, 2, &mut Budget::unlimited()).unwrap();
        let shape: Vec<(usize, u64)> = table
            .classes
            .iter()
            .map(|c| (c.pattern.order(), c.count))
            .collect();
        assert_eq!(shape, vec![(1, 4), (2, 2)]);
    }

    #[test]
    fn binomial_model_all_subsets_path() {
        // Z = (1+z)^3 on P3: p_j = 3 (-1)^j, and every pattern bigger than
        // one vertex must come out with zero coefficient.
        let table =
            compute_support_table(&path(3), &Binomial, 3, &mut Budget::unlimited()).unwrap();
        let p = table.power_sums();
        assert!(real_close(p.order(1), -3.0));
        assert!(real_close(p.order(2), 3.0));
        assert!(real_close(p.order(3), -3.0));
        for e in &table.classes {
            if e.pattern.order() > 1 {
                for &a in &e.coeffs {
                    assert!(a.norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn edge_subsets_model_no_isolated_path() {
        // Z = (1 + 2z)^3 on the triangle: p_j = 3 (-2)^j.
        let model = EdgeSubsets {
            w: Complex64::new(2.0, 0.0),
        };
        let p = compute_power_sums(&triangle(), &model, 3, &mut Budget::unlimited()).unwrap();
        assert!(real_close(p.order(1), -6.0));
        assert!(real_close(p.order(2), 12.0));
        assert!(real_close(p.order(3), -24.0));
        // Same polynomial on P4, which has three edges as well but a
        // different pattern census.
        let p = compute_power_sums(&path(4), &model, 3, &mut Budget::unlimited()).unwrap();
        assert!(real_close(p.order(1), -6.0));
        assert!(real_close(p.order(2), 12.0));
        assert!(real_close(p.order(3), -24.0));
    }

    #[test]
    fn empty_and_edgeless_hosts() {
        let empty = Multigraph::new(0);
        let p = compute_power_sums(&empty, &UnitIndependence, 4, &mut Budget::unlimited())
            .unwrap();
        assert!(p.p.iter().all(|c| c.norm() == 0.0));
        let table =
            compute_support_table(&empty, &UnitIndependence, 4, &mut Budget::unlimited()).unwrap();
        assert!(table.is_empty());
        // Three isolated vertices: Z = (1 + z)^3, p_j = 3 (-1)^j.
        let dust = Multigraph::new(3);
        let p = compute_power_sums(&dust, &UnitIndependence, 3, &mut Budget::unlimited()).unwrap();
        assert!(real_close(p.order(1), -3.0));
        assert!(real_close(p.order(2), 3.0));
        assert!(real_close(p.order(3), -3.0));
    }

    #[test]
    fn degree_capped_run_extends_exactly() {
        // P4 independence polynomial has degree 2 < 8; the capped run plus
        // Newton extension must match the full recursion at every order.
        let g = path(4);
        let full = compute_support_table(&g, &UnitIndependence, 8, &mut Budget::unlimited())
            .unwrap()
            .power_sums();
        let capped =
            compute_power_sums(&g, &UnitIndependence, 8, &mut Budget::unlimited()).unwrap();
        for j in 1..=8 {
            assert!(
                (full.order(j) - capped.order(j)).norm() < 1e-9,
                "order {j}: {} vs {}",
                full.order(j),
                capped.order(j)
            );
        }
    }

    #[test]
    fn loops_block_independence_support() {
        // A loop at one end of K2: only the loopless vertex is independent,
        // Z = 1 + z.
        let mut g = Multigraph::from_pairs(2, &[(0, 1)]).unwrap();
        g.add_edge(0, 0).unwrap();
        let p = compute_power_sums(&g, &UnitIndependence, 2, &mut Budget::unlimited()).unwrap();
        assert!(real_close(p.order(1), -1.0));
        assert!(real_close(p.order(2), 1.0));
    }

    #[test]
    fn mask_enumerator_matches_reference() {
        for (g, k) in [
            (path(6), 6),
            (triangle(), 3),
            (Multigraph::from_pairs(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 3)]).unwrap(), 4),
        ] {
            let mut adj = vec![0u64; g.n()];
            for e in g.edges() {
                if e.u != e.v {
                    adj[e.u as usize] |= 1 << e.v;
                    adj[e.v as usize] |= 1 << e.u;
                }
            }
            let mut masks =
                connected_set_masks(&adj, k, &mut Budget::unlimited()).unwrap();
            masks.sort_unstable();
            let reference: Vec<u64> = enumerate_connected_sets(&g, k)
                .into_iter()
                .map(|s| s.into_iter().fold(0u64, |m, v| m | 1 << v))
                .collect();
            let mut reference = reference;
            reference.sort_unstable();
            assert_eq!(masks, reference);
        }
    }

    #[test]
    fn runs_are_bit_identical() {
        let g = Multigraph::from_pairs(
            7,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 0), (1, 4), (2, 5)],
        )
        .unwrap();
        let a = compute_power_sums(&g, &UnitIndependence, 7, &mut Budget::unlimited()).unwrap();
        let b = compute_power_sums(&g, &UnitIndependence, 7, &mut Budget::unlimited()).unwrap();
        for j in 1..=7 {
            assert_eq!(a.order(j).re.to_bits(), b.order(j).re.to_bits());
            assert_eq!(a.order(j).im.to_bits(), b.order(j).im.to_bits());
        }
    }

    #[test]
    fn oversized_component_is_rejected() {
        let pairs: Vec<(u32, u32)> = (1..70).map(|i| (i - 1, i)).collect();
        let g = Multigraph::from_pairs(70, &pairs).unwrap();
        let err = compute_power_sums(&g, &UnitIndependence, 2, &mut Budget::unlimited())
            .unwrap_err();
        assert!(matches!(err, Error::ResourceLimit(_)));
    }

    #[test]
    fn exhausted_budget_trips() {
        let mut tiny = Budget::new(50);
        let err = compute_power_sums(&path(6), &UnitIndependence, 6, &mut tiny).unwrap_err();
        assert!(matches!(err, Error::ResourceLimit(_)));
    }
}
