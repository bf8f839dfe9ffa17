//! Brute-force exact evaluators.
//!
//! Everything here is deliberately naive: direct enumeration over subsets,
//! assignments, or colorings, sharing no code with the engine pipeline it
//! validates. Size caps keep each call comfortably under test timeouts.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::graph::canon::canonical_key;
use crate::graph::pattern::{Flavor, Pattern};
use crate::graph::Multigraph;
use crate::models::edge_coloring::EdgeColoringModel;
use crate::models::spin::SpinModel;
use crate::series::PowerSums;

/// Enumeration limits; one place to loosen when hardware allows.
#[derive(Debug, Clone)]
pub struct OracleCaps {
    pub independence_vertices: usize,
    pub tutte_edges: usize,
    pub spin_assignments: f64,
    pub coloring_assignments: f64,
    pub roots_degree: usize,
}

impl Default for OracleCaps {
    fn default() -> Self {
        OracleCaps {
            independence_vertices: 25,
            tutte_edges: 22,
            spin_assignments: (1u64 << 20) as f64,
            coloring_assignments: (1u64 << 20) as f64,
            roots_degree: 12,
        }
    }
}

/// Full coefficient vector of an exactly computed graph polynomial.
#[derive(Debug, Clone)]
pub struct ExactPolynomial {
    pub coeffs: Vec<Complex64>,
}

impl ExactPolynomial {
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::default();
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    pub fn to_prefix(&self) -> crate::series::PolynomialPrefix {
        crate::series::PolynomialPrefix::new(self.coeffs.clone())
    }
}

fn cap_check(actual: f64, cap: f64, what: &str) -> Result<()> {
    if actual > cap {
        return Err(Error::ResourceLimit(format!(
            "oracle {what} enumeration of {actual:.0} exceeds the cap of {cap:.0}"
        )));
    }
    Ok(())
}

/// Visit every independent set of g (as a vertex bitmask), including the
/// empty one. A vertex with a loop is adjacent to itself and never joins.
fn for_each_independent_set(g: &Multigraph, mut f: impl FnMut(u32)) {
    let n = g.n();
    let mut closed = vec![0u32; n];
    for e in g.edges() {
        closed[e.u as usize] |= 1 << e.v;
        closed[e.v as usize] |= 1 << e.u;
    }
    // Depth-first over vertices; a prefix is extended only while it stays
    // independent, so the walk is output-linear per level.
    fn rec(v: usize, n: usize, chosen: u32, closed: &[u32], f: &mut impl FnMut(u32)) {
        if v == n {
            f(chosen);
            return;
        }
        rec(v + 1, n, chosen, closed, f);
        let bit = 1u32 << v;
        if closed[v] & (chosen | bit) == 0 {
            rec(v + 1, n, chosen | bit, closed, f);
        }
    }
    rec(0, n, 0, &closed, &mut f);
}

/// Number of independent sets per size.
pub fn exact_independence_coeffs(g: &Multigraph) -> Result<ExactPolynomial> {
    let caps = OracleCaps::default();
    if g.n() > caps.independence_vertices {
        return Err(Error::ResourceLimit(format!(
            "oracle independence cap is {} vertices, graph has {}",
            caps.independence_vertices,
            g.n()
        )));
    }
    let mut by_size = vec![0u64; g.n() + 1];
    for_each_independent_set(g, |mask| by_size[mask.count_ones() as usize] += 1);
    while by_size.len() > 1 && *by_size.last().unwrap() == 0 {
        by_size.pop();
    }
    Ok(ExactPolynomial {
        coeffs: by_size
            .into_iter()
            .map(|c| Complex64::new(c as f64, 0.0))
            .collect(),
    })
}

pub fn exact_independence(g: &Multigraph, lambda: Complex64) -> Result<Complex64> {
    Ok(exact_independence_coeffs(g)?.eval(lambda))
}

/// Independent sets of even cardinality only.
pub fn exact_independence_even(g: &Multigraph, lambda: f64) -> Result<Complex64> {
    let coeffs = exact_independence_coeffs(g)?;
    let z = Complex64::new(lambda, 0.0);
    Ok((coeffs.eval(z) + coeffs.eval(-z)) / 2.0)
}

/// Multivariate sum: each independent set contributes the product of its
/// members' activities.
pub fn exact_independence_multivariate(g: &Multigraph, z: &[Complex64]) -> Result<Complex64> {
    assert_eq!(z.len(), g.n());
    let caps = OracleCaps::default();
    if g.n() > caps.independence_vertices {
        return Err(Error::ResourceLimit(format!(
            "oracle independence cap is {} vertices, graph has {}",
            caps.independence_vertices,
            g.n()
        )));
    }
    let mut total = Complex64::default();
    for_each_independent_set(g, |mask| {
        let mut term = Complex64::new(1.0, 0.0);
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            term *= z[v];
        }
        total += term;
    });
    Ok(total)
}

/// Edge-subset expansion: sum over A of q^(components of A) w^|A|.
pub fn exact_tutte(g: &Multigraph, q: Complex64, w: Complex64) -> Result<Complex64> {
    let grouped = tutte_by_rank(g, w)?;
    let mut total = Complex64::default();
    for (rank, coeff) in grouped.iter().enumerate() {
        // rank = n - components, so the q power is n - rank.
        total += coeff * q.powu((g.n() - rank) as u32);
    }
    Ok(total)
}

/// Coefficients of z^(n - components(A)), i.e. of the polynomial
/// z^n Z_T(1/z, w) whose constant term is 1 on loopless graphs.
pub fn exact_tutte_inverted_coeffs(g: &Multigraph, w: Complex64) -> Result<ExactPolynomial> {
    let mut coeffs = tutte_by_rank(g, w)?;
    while coeffs.len() > 1 && coeffs.last().unwrap().norm() == 0.0 {
        coeffs.pop();
    }
    Ok(ExactPolynomial { coeffs })
}

fn tutte_by_rank(g: &Multigraph, w: Complex64) -> Result<Vec<Complex64>> {
    let caps = OracleCaps::default();
    let en = g.edge_count();
    if en > caps.tutte_edges {
        return Err(Error::ResourceLimit(format!(
            "oracle edge-subset cap is {} edges, graph has {en}",
            caps.tutte_edges
        )));
    }
    let n = g.n();
    let mut w_pow = vec![Complex64::new(1.0, 0.0); en + 1];
    for i in 1..=en {
        w_pow[i] = w_pow[i - 1] * w;
    }
    let mut out = vec![Complex64::default(); n + 1];
    let mut parent = vec![0u32; n];
    for mask in 0u64..(1u64 << en) {
        for (v, p) in parent.iter_mut().enumerate() {
            *p = v as u32;
        }
        let mut comps = n as u32;
        let mut rest = mask;
        while rest != 0 {
            let e = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let edge = &g.edges()[e];
            let (mut a, mut b) = (edge.u, edge.v);
            while parent[a as usize] != a {
                a = parent[a as usize];
            }
            while parent[b as usize] != b {
                b = parent[b as usize];
            }
            if a != b {
                parent[a as usize] = b;
                comps -= 1;
            }
        }
        out[n - comps as usize] += w_pow[mask.count_ones() as usize];
    }
    Ok(out)
}

/// Direct sum over all k^n state assignments of the product of per-edge
/// matrix entries.
pub fn exact_spin(g: &Multigraph, model: &SpinModel) -> Result<Complex64> {
    let caps = OracleCaps::default();
    cap_check(
        (model.k as f64).powi(g.n() as i32),
        caps.spin_assignments,
        "spin",
    )?;
    let mut total = Complex64::default();
    for_each_assignment(model.k, g.n(), |phi| {
        let mut term = Complex64::new(1.0, 0.0);
        for (i, e) in g.edges().iter().enumerate() {
            term *= model
                .edge_matrix(i)
                .get(phi[e.u as usize], phi[e.v as usize]);
        }
        total += term;
    });
    Ok(total)
}

/// Coefficients of the normalized spin series: expand each edge factor as
/// 1 + z(A - 1) per assignment, multiply, sum, divide by k^n. The z^i
/// coefficient collects exactly the i-edge subsets.
pub fn exact_spin_q_coeffs(g: &Multigraph, model: &SpinModel) -> Result<ExactPolynomial> {
    let caps = OracleCaps::default();
    cap_check(
        (model.k as f64).powi(g.n() as i32),
        caps.spin_assignments,
        "spin",
    )?;
    let one = Complex64::new(1.0, 0.0);
    let mut sum = vec![Complex64::default(); g.edge_count() + 1];
    for_each_assignment(model.k, g.n(), |phi| {
        let mut poly = vec![Complex64::default(); g.edge_count() + 1];
        poly[0] = one;
        let mut deg = 0;
        for (i, e) in g.edges().iter().enumerate() {
            let dev = model
                .edge_matrix(i)
                .get(phi[e.u as usize], phi[e.v as usize])
                - one;
            deg += 1;
            for j in (1..=deg).rev() {
                let lower = poly[j - 1];
                poly[j] += lower * dev;
            }
        }
        for (s, p) in sum.iter_mut().zip(&poly) {
            *s += p;
        }
    });
    let scale = (model.k as f64).powi(-(g.n() as i32));
    Ok(ExactPolynomial {
        coeffs: sum.into_iter().map(|c| c * scale).collect(),
    })
}

/// Direct sum over all k^|E| edge colorings of the product of per-vertex
/// weights of incident color counts. A loop shows its color to its vertex
/// twice.
pub fn exact_edge_coloring(g: &Multigraph, model: &EdgeColoringModel) -> Result<Complex64> {
    let caps = OracleCaps::default();
    cap_check(
        (model.k as f64).powi(g.edge_count() as i32),
        caps.coloring_assignments,
        "edge-coloring",
    )?;
    let mut total = Complex64::default();
    let mut err = None;
    for_each_assignment(model.k, g.edge_count(), |phi| {
        if err.is_some() {
            return;
        }
        let mut counts = vec![vec![0u32; model.k]; g.n()];
        for (i, e) in g.edges().iter().enumerate() {
            counts[e.u as usize][phi[i]] += 1;
            counts[e.v as usize][phi[i]] += 1;
        }
        let mut term = Complex64::new(1.0, 0.0);
        for v in 0..g.n() {
            match model.h(v as u32, &counts[v]) {
                Ok(h) => term *= h,
                Err(e) => {
                    err = Some(e);
                    return;
                }
            }
        }
        total += term;
    });
    match err {
        Some(e) => Err(e),
        None => Ok(total),
    }
}

/// Coefficients of the normalized edge-coloring series: expand each vertex
/// factor as 1 + z(h - 1) per coloring, multiply, sum, divide by k^|E|.
pub fn exact_edge_q_coeffs(
    g: &Multigraph,
    model: &EdgeColoringModel,
) -> Result<ExactPolynomial> {
    let caps = OracleCaps::default();
    cap_check(
        (model.k as f64).powi(g.edge_count() as i32),
        caps.coloring_assignments,
        "edge-coloring",
    )?;
    let one = Complex64::new(1.0, 0.0);
    let mut sum = vec![Complex64::default(); g.n() + 1];
    let mut err = None;
    for_each_assignment(model.k, g.edge_count(), |phi| {
        if err.is_some() {
            return;
        }
        let mut counts = vec![vec![0u32; model.k]; g.n()];
        for (i, e) in g.edges().iter().enumerate() {
            counts[e.u as usize][phi[i]] += 1;
            counts[e.v as usize][phi[i]] += 1;
        }
        let mut poly = vec![Complex64::default(); g.n() + 1];
        poly[0] = one;
        for v in 0..g.n() {
            let dev = match model.h(v as u32, &counts[v]) {
                Ok(h) => h - one,
                Err(e) => {
                    err = Some(e);
                    return;
                }
            };
            for j in (1..=v + 1).rev() {
                let lower = poly[j - 1];
                poly[j] += lower * dev;
            }
        }
        for (s, p) in sum.iter_mut().zip(&poly) {
            *s += p;
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    let scale = (model.k as f64).powi(-(g.edge_count() as i32));
    Ok(ExactPolynomial {
        coeffs: sum.into_iter().map(|c| c * scale).collect(),
    })
}

fn for_each_assignment(k: usize, len: usize, mut f: impl FnMut(&[usize])) {
    let mut phi = vec![0usize; len];
    loop {
        f(&phi);
        let mut i = 0;
        loop {
            if i == len {
                return;
            }
            phi[i] += 1;
            if phi[i] < k {
                break;
            }
            phi[i] = 0;
            i += 1;
        }
    }
}

/// Inverse power sums by explicit root finding (simultaneous-iteration
/// solver), independent of the Newton-identity path it cross-checks.
pub fn power_sums_from_roots(poly: &ExactPolynomial) -> Result<PowerSums> {
    let caps = OracleCaps::default();
    let coeffs = &poly.coeffs;
    let d = poly.degree();
    if d > caps.roots_degree {
        return Err(Error::ResourceLimit(format!(
            "root-finding oracle caps the degree at {}, polynomial has {d}",
            caps.roots_degree
        )));
    }
    if d == 0 {
        return Ok(PowerSums::zeros(0));
    }
    let scale = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
    if coeffs[0].norm() < 1e-12 * scale || coeffs[d].norm() == 0.0 {
        return Err(Error::InvalidInput(
            "root-finding needs nonzero constant and leading coefficients".into(),
        ));
    }
    // Reverse the polynomial: its roots are the reciprocals of the original
    // roots, so plain power sums of them are the inverse power sums we want.
    let lead = coeffs[0];
    let monic: Vec<Complex64> = (0..=d).map(|i| coeffs[d - i] / lead).collect();
    let eval = |x: Complex64| {
        let mut acc = Complex64::new(1.0, 0.0);
        for c in monic[..d].iter().rev() {
            acc = acc * x + c;
        }
        acc
    };
    let mut roots: Vec<Complex64> = (0..d)
        .map(|i| Complex64::new(0.4, 0.9).powu(i as u32 + 1))
        .collect();
    for _ in 0..500 {
        let mut moved: f64 = 0.0;
        for i in 0..d {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..d {
                if j != i {
                    denom *= roots[i] - roots[j];
                }
            }
            let step = eval(roots[i]) / denom;
            roots[i] -= step;
            moved = moved.max(step.norm());
        }
        if moved < 1e-14 {
            break;
        }
    }
    let p = (1..=d)
        .map(|j| roots.iter().map(|r| r.powu(j as u32)).sum())
        .collect();
    Ok(PowerSums::new(p))
}

/// All connected simple graphs with at most max_n vertices and maximum
/// degree at most max_degree, one representative per isomorphism class,
/// built by growing one vertex at a time and deduplicating canonically.
pub fn connected_catalog(max_n: usize, max_degree: u32) -> Vec<Multigraph> {
    let mut level: Vec<Multigraph> = vec![Multigraph::new(1)];
    let mut result: Vec<Multigraph> = vec![Multigraph::new(1)];
    for n in 2..=max_n {
        let mut next = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for base in &level {
            let open: Vec<u32> = (0..(n - 1) as u32)
                .filter(|&v| base.degree(v) < max_degree)
                .collect();
            for mask in 0u32..(1 << open.len()) {
                if mask.count_ones() > max_degree {
                    continue;
                }
                let mut g = Multigraph::new(n);
                for e in base.edges() {
                    g.add_edge(e.u, e.v).unwrap();
                }
                let mut rest = mask;
                while rest != 0 {
                    let i = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    g.add_edge(open[i], (n - 1) as u32).unwrap();
                }
                let key = canonical_key(&Pattern::from_graph(&g), Flavor::Plain);
                if seen.insert(key) {
                    next.push(g);
                }
            }
        }
        result.extend(next.iter().filter(|g| g.is_connected()).cloned());
        level = next;
    }
    result
}
