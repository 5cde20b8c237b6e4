//! Zigzag diagrams `ZZ(λ)` for rational `λ > 1`.
//!
//! The right curve is `P(σ)`: `V_0 = A_-`, interior vertices `V_1..V_s`, then
//! `A_+`. The left curve is `P(σ')`: `V_0' = A_-'`, points `V_1'..V_{s+1}'`,
//! then `A_+`. The zigzag line runs `V_0, V_1', V_1, V_2', ..., V_s, V_{s+1}'`.

mod render;

pub use render::{render, RenderFormat};

use num_bigint::BigInt;
use num_traits::One;

use crate::cf::{canonicalize_e, expand_hj, hj_blocks, involute, CfExpansion, CfKind, HjBlocks, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Reading {
    /// HJ expansion of `λ`, along the right curve.
    HjLambda,
    /// HJ expansion of `λ/(λ-1)`, along the left curve.
    HjInvolute,
    /// E expansion of `λ/(λ-1)`, alternating edge lengths right/left.
    EInvolute,
    /// E expansion of `λ`, the same reading done from the left curve.
    ELambda,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ZigzagDiagram {
    lambda: Rational,
    /// Lengths of `[V_0 V_1], ..., [V_s A_+]`: `m_1+1, ..., m_{s+1}+1`.
    pub right_edges: Vec<BigInt>,
    /// Weights of `V_1..V_s`: `n_1+3, ..., n_s+3`.
    pub right_weights: Vec<BigInt>,
    /// Lengths of `[V_0' V_1'], [V_1' V_2'], ..., [V_{s+1}' A_+]`.
    pub left_edges: Vec<BigInt>,
    /// Weights of `V_1'..V_{s+1}'`.
    pub left_weights: Vec<BigInt>,
    /// Whether `V_1'` is a vertex of `P(σ')`.
    pub first_left_is_vertex: bool,
    /// Whether `V_{s+1}'` is a vertex of `P(σ')`.
    pub last_left_is_vertex: bool,
}

/// Weight of `V_j'` from its opposite edge `[V_{j-1} V_j]` (with `V_0 = A_-`
/// and `V_{s+1} = A_+`): the length plus the endpoints other than `A_-`, `A_+`.
fn opposite_weight(length: &BigInt, j: usize, s: usize) -> BigInt {
    let counted = usize::from(j > 1) + usize::from(j <= s);
    length + counted
}

pub fn build(lambda: &Rational) -> Result<ZigzagDiagram> {
    if *lambda <= Rational::one() {
        return Err(Error::Domain(format!("zigzag diagrams need λ > 1, got {lambda}")));
    }
    let blocks = hj_blocks(expand_hj(lambda).terms())?;
    let s = blocks.s();
    let right_edges: Vec<BigInt> = blocks.twos.iter().map(|m| BigInt::from(m + 1)).collect();
    let right_weights: Vec<BigInt> = blocks.tops.iter().map(|n| n + 3).collect();

    let mut left_edges = vec![BigInt::one()];
    left_edges.extend(blocks.tops.iter().map(|n| n + 1));
    left_edges.push(BigInt::one());
    let left_weights: Vec<BigInt> = (1..=s + 1).map(|j| opposite_weight(&right_edges[j - 1], j, s)).collect();

    let three = BigInt::from(3);
    Ok(ZigzagDiagram {
        lambda: lambda.clone(),
        first_left_is_vertex: left_weights[0] >= three,
        last_left_is_vertex: left_weights[s] >= three,
        right_edges,
        right_weights,
        left_edges,
        left_weights,
    })
}

/// HJ sequence along a curve: each point weight, separated by `(2)^{l-1}` for
/// every edge of length `l` between consecutive points.
fn curve_sequence(weights: &[BigInt], between: &[BigInt]) -> Vec<BigInt> {
    let two = BigInt::from(2);
    let mut out = Vec::new();
    let twos = |l: &BigInt| -> usize { crate::cf::run_length(&(l - 1)).expect("diagram edge lengths are small") };
    for (i, w) in weights.iter().enumerate() {
        out.push(w.clone());
        if let Some(l) = between.get(i) {
            out.extend(std::iter::repeat_n(two.clone(), twos(l)));
        }
    }
    out
}

/// E reading of a curve in block form: `[m_1+1, n_1+1, ..., n_s+1, m_{s+1}+1]`.
fn cf3(blocks: &HjBlocks) -> Vec<BigInt> {
    let mut out = Vec::new();
    for (j, m) in blocks.twos.iter().enumerate() {
        out.push(BigInt::from(m + 1));
        if let Some(n) = blocks.tops.get(j) {
            out.push(n + 1);
        }
    }
    canonicalize_e(out)
}

impl ZigzagDiagram {
    pub fn lambda(&self) -> &Rational {
        &self.lambda
    }

    /// Number of interior vertices of `P(σ)`.
    pub fn s(&self) -> usize {
        self.right_weights.len()
    }

    fn right_blocks(&self) -> HjBlocks {
        HjBlocks {
            twos: self.right_edges.iter().map(|l| crate::cf::run_length(&(l - 1)).unwrap()).collect(),
            tops: self.right_weights.iter().map(|w| w - 3).collect(),
        }
    }

    fn right_sequence(&self) -> Vec<BigInt> {
        self.right_blocks().to_terms()
    }

    /// Points `V_1'..V_{s+1}'` and the lattice points between them.
    fn left_sequence(&self) -> Vec<BigInt> {
        let inner = &self.left_edges[1..self.left_edges.len() - 1];
        curve_sequence(&self.left_weights, inner)
    }

    pub fn read(&self, which: Reading) -> CfExpansion {
        let (kind, terms) = match which {
            Reading::HjLambda => (CfKind::Hj, self.right_sequence()),
            Reading::HjInvolute => (CfKind::Hj, self.left_sequence()),
            Reading::EInvolute => {
                // Alternate right edges with the inner left edges.
                let mut out = Vec::new();
                for (j, l) in self.right_edges.iter().enumerate() {
                    out.push(l.clone());
                    if j < self.s() {
                        out.push(self.left_edges[j + 1].clone());
                    }
                }
                (CfKind::E, canonicalize_e(out))
            }
            Reading::ELambda => {
                let blocks = hj_blocks(&self.left_sequence()).expect("left curve weights are >= 2");
                (CfKind::E, cf3(&blocks))
            }
        };
        CfExpansion::new(kind, terms).expect("diagram readings satisfy the term restrictions")
    }

    /// The vertex/opposite-edge rule on both curves.
    pub fn rule_holds(&self) -> bool {
        let s = self.s();
        let right_ok = (1..=s).all(|j| self.right_weights[j - 1] == &self.left_edges[j] + 2);
        let left_ok = (1..=s + 1).all(|j| self.left_weights[j - 1] == opposite_weight(&self.right_edges[j - 1], j, s));
        let ends_ok = self.left_edges.first().is_some_and(One::is_one) && self.left_edges.last().is_some_and(One::is_one);
        right_ok && left_ok && ends_ok
    }

    /// `λ/(λ-1)`.
    pub fn involute_lambda(&self) -> Rational {
        involute(&self.lambda).expect("λ > 1")
    }
}
