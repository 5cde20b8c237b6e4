//! Weighted dual graphs: vertices carry a genus and a self-intersection
//! weight, edges are unordered pairs (loops and multi-edges allowed), arrows
//! mark strict transforms.

mod serial;

pub use serial::{from_json, to_dot, to_json, JSON_SCHEMA};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub genus: u64,
    pub weight: BigInt,
    pub label: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct WeightedDualGraph {
    vertices: Vec<Vertex>,
    /// Stored with `i <= j`.
    edges: Vec<(usize, usize)>,
    arrows: Vec<usize>,
}

/// Integer coefficients of a divisor, one per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cycle {
    pub coefficients: Vec<BigInt>,
}

impl WeightedDualGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, weight: BigInt, genus: u64, label: Option<String>) -> Result<usize> {
        if let Some(l) = &label {
            if self.vertices.iter().any(|v| v.label.as_ref() == Some(l)) {
                return Err(Error::Domain(format!("duplicate vertex label {l}")));
            }
        }
        self.vertices.push(Vertex { genus, weight, label });
        Ok(self.vertices.len() - 1)
    }

    fn check(&self, v: usize) -> Result<()> {
        if v < self.vertices.len() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        self.check(a)?;
        self.check(b)?;
        self.edges.push((a.min(b), a.max(b)));
        Ok(())
    }

    pub fn add_arrow(&mut self, v: usize) -> Result<()> {
        self.check(v)?;
        self.arrows.push(v);
        Ok(())
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex(&self, v: usize) -> Result<&Vertex> {
        self.vertices.get(v).ok_or(Error::UnknownVertex(v))
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.label.as_deref() == Some(label))
    }

    /// Edge endpoints at `v`; a loop contributes 2. Arrows do not count.
    pub fn valency(&self, v: usize) -> Result<usize> {
        self.check(v)?;
        Ok(self
            .edges
            .iter()
            .map(|&(a, b)| usize::from(a == v) + usize::from(b == v))
            .sum())
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return false;
        }
        let mut seen = vec![false; self.vertices.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(a, b) in &self.edges {
                let other = if a == v {
                    b
                } else if b == v {
                    a
                } else {
                    continue;
                };
                if !seen[other] {
                    seen[other] = true;
                    stack.push(other);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// The same graph with every arrow removed.
    pub fn without_arrows(&self) -> Self {
        Self {
            vertices: self.vertices.clone(),
            edges: self.edges.clone(),
            arrows: Vec::new(),
        }
    }

    /// Edges sorted, arrows sorted: a canonical form for comparisons.
    pub fn normalized(&self) -> Self {
        let mut g = self.clone();
        g.edges.sort_unstable();
        g.arrows.sort_unstable();
        g
    }
}

/// Diagonal: weights. Off-diagonal: number of edges joining the two vertices.
/// Loops are left out.
pub fn intersection_matrix(g: &WeightedDualGraph) -> Vec<Vec<BigInt>> {
    let n = g.len();
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for (i, v) in g.vertices.iter().enumerate() {
        m[i][i] = v.weight.clone();
    }
    for &(a, b) in &g.edges {
        if a != b {
            m[a][b] += 1;
            m[b][a] += 1;
        }
    }
    m
}

/// Leading principal minors `d_1..d_n` by fraction-free (Bareiss) elimination.
/// Stops early at the first zero minor, whose sign is then undefined.
pub fn leading_minors(m: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = m.len();
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut minors = Vec::with_capacity(n);
    let mut prev = BigInt::from(1);
    for k in 0..n {
        // a[k][k] now holds the (k+1)-th leading minor.
        let pivot = a[k][k].clone();
        minors.push(pivot.clone());
        if pivot.is_zero() {
            break;
        }
        for i in k + 1..n {
            let coupled = !a[i][k].is_zero();
            for j in k + 1..n {
                // Zero entries of uncoupled rows stay zero; dual graphs are sparse.
                if !coupled && a[i][j].is_zero() {
                    continue;
                }
                let v = (&pivot * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = pivot;
    }
    minors
}

/// Negative definiteness by the signs `(-1)^k` of the leading minors.
pub fn is_contractible(g: &WeightedDualGraph) -> bool {
    let minors = leading_minors(&intersection_matrix(g));
    minors.len() == g.len()
        && minors
            .iter()
            .enumerate()
            .all(|(k, d)| if k % 2 == 0 { d.is_negative() } else { d.is_positive() })
}

/// `Z · E_i` for the cycle `Z`.
pub fn cycle_dot(m: &[Vec<BigInt>], z: &[BigInt], i: usize) -> BigInt {
    z.iter().zip(m.iter()).map(|(zj, row)| zj * &row[i]).sum()
}

/// Minimal cycle `Z >= Σ E_k` with `Z · E_k <= 0` for all `k`, grown from
/// `Σ E_k` by adding `E_i` while `Z · E_i > 0`.
pub fn fundamental_cycle(g: &WeightedDualGraph) -> Result<Cycle> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !is_contractible(g) {
        return Err(Error::NotContractible);
    }
    let m = intersection_matrix(g);
    let mut z = vec![BigInt::from(1); g.len()];
    while let Some(i) = (0..g.len()).find(|&i| cycle_dot(&m, &z, i).is_positive()) {
        z[i] += 1;
    }
    Ok(Cycle { coefficients: z })
}

/// `ẽ_v = e_v − δ_v`.
pub fn euler_normalized(g: &WeightedDualGraph, v: usize) -> Result<BigInt> {
    let valency = g.valency(v)?;
    Ok(&g.vertex(v)?.weight - valency)
}

/// Genus-0 unlabeled path `E_1 - E_2 - ... - E_n`.
pub fn chain(weights: &[BigInt]) -> WeightedDualGraph {
    let mut g = WeightedDualGraph::new();
    for (i, w) in weights.iter().enumerate() {
        g.add_vertex(w.clone(), 0, None).expect("unlabeled");
        if i > 0 {
            g.add_edge(i - 1, i).expect("known vertices");
        }
    }
    g
}

/// Genus-0 unlabeled cycle of vertices; length 1 gives a loop, length 2 a
/// double edge.
pub fn cycle_graph(weights: &[BigInt]) -> WeightedDualGraph {
    let mut g = chain(weights);
    let n = weights.len();
    if n > 0 {
        g.add_edge(n - 1, 0).expect("known vertices");
    }
    g
}
