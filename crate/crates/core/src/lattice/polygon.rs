use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{integral_length, standard_from_nf, ConeNf, LatticeVector};
use crate::cf::expand_hj;
use crate::error::Result;

/// The integral points `A_0..A_{r+1}` of `P(σ)` in the standard frame
/// (`A_0 = (1,0)`, `A_1 = (1,1)`, `A_{r+1} = (p-q, p)`), the weights
/// `α_1..α_r` with `A_{n-1} + A_{n+1} = α_n·A_n`, and the vertex positions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConePolygon {
    pub cone: ConeNf,
    pub points: Vec<LatticeVector>,
    pub weights: Vec<BigInt>,
    pub vertex_indices: Vec<usize>,
}

impl ConePolygon {
    /// `r`, the number of interior points.
    pub fn r(&self) -> usize {
        self.weights.len()
    }

    pub fn vertices(&self) -> Vec<&LatticeVector> {
        self.vertex_indices.iter().map(|i| &self.points[*i]).collect()
    }

    /// Points in normal-form coordinates, `A_0 = (1,0)`, `A_1 = (0,1)`.
    pub fn nf_points(&self) -> Vec<LatticeVector> {
        let to_nf = standard_from_nf().inverse();
        self.points.iter().map(|a| to_nf.apply(a)).collect()
    }

    /// Integral lengths of the compact edges between consecutive vertices.
    pub fn edge_lengths(&self) -> Vec<BigInt> {
        self.vertex_indices
            .windows(2)
            .map(|w| integral_length(&self.points[w[0]], &self.points[w[1]]).expect("distinct vertices"))
            .collect()
    }
}

fn vertex_indices_from_weights(weights: &[BigInt]) -> Vec<usize> {
    let three = BigInt::from(3);
    let mut idx = vec![0];
    idx.extend(weights.iter().enumerate().filter(|(_, a)| **a >= three).map(|(n, _)| n + 1));
    idx.push(weights.len() + 1);
    idx
}

/// `P(σ)` generated from the HJ expansion of `p/q` by `A_{n+1} = α_n·A_n − A_{n-1}`.
pub fn polygon(c: &ConeNf) -> Result<ConePolygon> {
    let weights = expand_hj(&c.lambda()?).into_terms();
    let mut points = vec![LatticeVector::new(1, 0), LatticeVector::new(1, 1)];
    for (n, alpha) in weights.iter().enumerate() {
        let next = &points[n + 1].scale(alpha) - &points[n];
        points.push(next);
    }
    debug_assert_eq!(points.last().unwrap(), &LatticeVector::new(c.p() - c.q(), c.p().clone()));
    let vertex_indices = vertex_indices_from_weights(&weights);
    Ok(ConePolygon {
        cone: c.clone(),
        points,
        weights,
        vertex_indices,
    })
}

/// `P(σ)` by brute force: enumerate the lattice points of the triangle
/// `O A_- A_+` (without `O`), take the boundary chain of their convex hull
/// facing the origin, and fill in the lattice points on each edge.
pub fn hull_oracle(c: &ConeNf) -> Result<ConePolygon> {
    c.require_singular()?;
    let (p, q) = (c.p(), c.q());
    let top = LatticeVector::new(p - q, p.clone());

    // Row y: p·x >= (p-q)·y (inside the cone) and p·(x-1) <= (p-q-1)·y (origin side of [A_- A_+]).
    let mut cloud = Vec::new();
    let mut y = BigInt::zero();
    while &y <= p {
        let lo = (&y * (p - q)).div_ceil(p);
        let hi = BigInt::one() + (&y * (p - q - 1u32)).div_floor(p);
        let mut x = lo;
        while x <= hi {
            if !(x.is_zero() && y.is_zero()) {
                cloud.push(LatticeVector::new(x.clone(), y.clone()));
            }
            x += 1;
        }
        y += 1;
    }
    // Rows ascending, x ascending within a row.
    cloud.sort_by(|a, b| (&a.y, &a.x).cmp(&(&b.y, &b.x)));

    // Monotone chain keeping only strict clockwise turns: the left boundary.
    let mut chain: Vec<LatticeVector> = Vec::new();
    for pt in cloud {
        while chain.len() >= 2 {
            let n = chain.len();
            let turn = (&chain[n - 1] - &chain[n - 2]).det(&(&pt - &chain[n - 1]));
            if turn.is_negative() {
                break;
            }
            chain.pop();
        }
        chain.push(pt);
    }
    debug_assert_eq!(chain.first(), Some(&LatticeVector::new(1, 0)));
    debug_assert_eq!(chain.last(), Some(&top));

    let mut points = vec![chain[0].clone()];
    let mut vertex_indices = vec![0];
    for w in chain.windows(2) {
        let d = &w[1] - &w[0];
        let g = d.gcd();
        let step = LatticeVector::new(&d.x / &g, &d.y / &g);
        let mut k = BigInt::one();
        while k <= g {
            points.push(&w[0] + &step.scale(&k));
            k += 1;
        }
        vertex_indices.push(points.len() - 1);
    }

    let weights = (1..points.len() - 1)
        .map(|n| {
            let (prev, cur, next) = (&points[n - 1], &points[n], &points[n + 1]);
            prev.det(next) / prev.det(cur)
        })
        .collect();
    Ok(ConePolygon {
        cone: c.clone(),
        points,
        weights,
        vertex_indices,
    })
}
