//! Cyclic weight sequences along the boundary of an irrational cone with
//! periodic HJ expansion.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cf::{continuant, format_terms, run_length, Sign};
use crate::error::{Error, Result};

/// Row-major 2×2 integer matrix.
pub type Matrix2 = [[BigInt; 2]; 2];

/// A cyclic sequence of weights, all `>= 2` and not all equal to 2, stored in
/// its lexicographically smallest rotation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CuspCycle {
    weights: Vec<BigInt>,
}

fn min_rotation(w: &[BigInt]) -> Vec<BigInt> {
    (0..w.len())
        .map(|k| [&w[k..], &w[..k]].concat())
        .min()
        .unwrap_or_default()
}

impl CuspCycle {
    pub fn new(weights: Vec<BigInt>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidCycle("empty cycle".into()));
        }
        let two = BigInt::from(2);
        if let Some(w) = weights.iter().find(|w| **w < two) {
            return Err(Error::InvalidCycle(format!("weight {w} is below 2")));
        }
        if weights.iter().all(|w| *w == two) {
            return Err(Error::InvalidCycle("all weights equal 2".into()));
        }
        Ok(Self {
            weights: min_rotation(&weights),
        })
    }

    pub fn from_i64(weights: &[i64]) -> Result<Self> {
        Self::new(weights.iter().copied().map(BigInt::from).collect())
    }

    pub fn weights(&self) -> &[BigInt] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl fmt::Display for CuspCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner = format_terms(&self.weights);
        write!(f, "({})", &inner[1..inner.len() - 1])
    }
}

fn mul(a: &Matrix2, b: &Matrix2) -> Matrix2 {
    let entry = |i: usize, j: usize| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
    [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]]
}

/// `Π M(α)` over one period, `M(α) = [[0,-1],[1,α]]`.
pub fn cusp_monodromy(c: &CuspCycle) -> Matrix2 {
    let identity = [[BigInt::one(), BigInt::zero()], [BigInt::zero(), BigInt::one()]];
    c.weights.iter().fold(identity, |acc, a| {
        let m = [[BigInt::zero(), -BigInt::one()], [BigInt::one(), a.clone()]];
        mul(&acc, &m)
    })
}

/// `Z^-(α_1..α_r) - Z^-(α_2..α_{r-1})`.
pub fn cusp_trace_formula(c: &CuspCycle) -> Result<BigInt> {
    let w = &c.weights;
    if w.len() < 2 {
        return Err(Error::CycleTooShort);
    }
    Ok(continuant(Sign::Minus, w) - continuant(Sign::Minus, &w[1..w.len() - 1]))
}

/// Replaces each cyclic block `((2)^m, n+3)` by `(m+3, (2)^n)`.
pub fn cusp_dual(c: &CuspCycle) -> Result<CuspCycle> {
    let w = &c.weights;
    let three = BigInt::from(3);
    let two = BigInt::from(2);
    // Rotate so the cycle ends with an entry >= 3 and every block is closed.
    let k = w.iter().rposition(|a| *a >= three).expect("cycle has an entry >= 3");
    let rotated = [&w[k + 1..], &w[..=k]].concat();

    let mut out = Vec::new();
    let mut twos = 0usize;
    for a in &rotated {
        if *a == two {
            twos += 1;
            continue;
        }
        out.push(BigInt::from(twos + 3));
        let n = run_length(&(a - 3))?;
        out.extend(std::iter::repeat_n(two.clone(), n));
        twos = 0;
    }
    CuspCycle::new(out)
}
