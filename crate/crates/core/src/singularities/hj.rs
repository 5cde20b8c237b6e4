use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::check_pq;
use crate::cf::{expand_hj, Rational};
use crate::error::{Error, Result};
use crate::graphs::{chain, WeightedDualGraph};
use crate::lattice::{integral_length, polygon, ConeNf};

/// The cyclic quotient singularity `A_{p,q}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HjType {
    p: BigInt,
    q: BigInt,
}

impl HjType {
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        let (p, q) = (p.into(), q.into());
        check_pq(&p, &q, "a Hirzebruch-Jung type")?;
        Ok(Self { p, q })
    }

    /// `A_n = A_{n+1,n}`.
    pub fn a_n(n: impl Into<BigInt>) -> Result<Self> {
        let n = n.into();
        Self::new(&n + 1, n)
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn cone(&self) -> ConeNf {
        ConeNf::new(self.p.clone(), self.q.clone()).expect("validated type")
    }

    /// `α_1..α_r` with `p/q = [α_1..α_r]^-`.
    pub fn alphas(&self) -> Vec<BigInt> {
        expand_hj(&Rational::new(self.p.clone(), self.q.clone())).into_terms()
    }

    /// `Some(n)` when the type is `A_n`.
    pub fn as_a_n(&self) -> Option<&BigInt> {
        (&self.p - &self.q == BigInt::one()).then_some(&self.q)
    }
}

impl fmt::Display for HjType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_a_n() {
            Some(n) => write!(f, "A{n}"),
            None => write!(f, "A({},{})", self.p, self.q),
        }
    }
}

/// The minimal resolution: a chain with weights `-α_1..-α_r`.
pub fn hj_resolution(t: &HjType) -> WeightedDualGraph {
    let weights: Vec<BigInt> = t.alphas().into_iter().map(|a| -a).collect();
    chain(&weights)
}

/// `3 + Σ(α_i - 2)`.
pub fn embdim(t: &HjType) -> BigInt {
    t.alphas().iter().fold(BigInt::from(3), |acc, a| acc + a - 2)
}

/// Largest `p` accepted by [`embdim_oracle`]; its box has `(2p+1)^2` points.
pub const EMBDIM_ORACLE_MAX_P: u64 = 2_000;

/// Counts the minimal generators of the semigroup of lattice points of the
/// dual cone by brute force.
///
/// In coordinates dual to the normal form, `σ̌ = {(a,b) : a >= 0, p·b >= q·a}`.
/// Every semigroup element has nonnegative coordinates, so any decomposition
/// of a point in the box `[0,2p]^2` stays inside the box, and the box holds
/// all generators.
pub fn embdim_oracle(t: &HjType) -> Result<BigInt> {
    let side = t
        .p
        .to_u64()
        .filter(|p| *p <= EMBDIM_ORACLE_MAX_P)
        .ok_or_else(|| Error::TooLarge(format!("embdim oracle box for p = {}", t.p)))?
        * 2;
    let (p, q) = (&t.p, &t.q);
    let inside = |a: &BigInt, b: &BigInt| !a.is_negative() && p * b >= q * a;

    // Lexicographic order visits every proper summand of a point before the
    // point itself. A point is decomposable iff it is a generator plus a
    // nonzero semigroup element.
    let mut generators: Vec<(BigInt, BigInt)> = Vec::new();
    for a in 0..=side {
        let a = BigInt::from(a);
        for b in 0..=side {
            let b = BigInt::from(b);
            if (a.is_zero() && b.is_zero()) || !inside(&a, &b) {
                continue;
            }
            let decomposable = generators
                .iter()
                .rev()
                .any(|(ga, gb)| inside(&(&a - ga), &(&b - gb)));
            if !decomposable {
                generators.push((a.clone(), b));
            }
        }
    }
    Ok(BigInt::from(generators.len()))
}

/// One singular point of the blow-up of the origin, or a smooth gap.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BlowupType {
    Smooth,
    Singular(HjType),
}

impl fmt::Display for BlowupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlowupType::Smooth => f.write_str("smooth"),
            BlowupType::Singular(t) => t.fmt(f),
        }
    }
}

/// Types of the cones between consecutive rays through `A_1, V_1..V_s, A_r`.
///
/// A segment of `P(σ)` of integral length `l` has `l - 1` interior points,
/// each of weight 2, so its cone is `A_{l-1}` (smooth when `l = 1`).
pub fn blowup_types(t: &HjType) -> Result<Vec<BlowupType>> {
    let poly = polygon(&t.cone())?;
    let r = poly.r();
    let mut rays = vec![1];
    rays.extend(poly.vertex_indices.iter().copied().filter(|&i| i != 0 && i != r + 1));
    rays.push(r);
    rays.dedup();

    rays.windows(2)
        .map(|w| {
            let l = integral_length(&poly.points[w[0]], &poly.points[w[1]])?;
            Ok(if l.is_one() {
                BlowupType::Smooth
            } else {
                BlowupType::Singular(HjType::a_n(l - 1)?)
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cf::to_terms;
    use crate::graphs::is_contractible;

    fn t(p: i64, q: i64) -> HjType {
        HjType::new(p, q).unwrap()
    }

    #[test]
    fn type_validation() {
        assert!(HjType::new(11, 0).is_err());
        assert!(HjType::new(11, 11).is_err());
        assert!(HjType::new(12, 8).is_err());
        assert_eq!(t(4, 3).to_string(), "A3");
        assert_eq!(t(11, 7).to_string(), "A(11,7)");
    }

    #[test]
    fn resolution_chains() {
        assert_eq!(hj_resolution(&t(11, 7)), chain(&to_terms(&[-2, -3, -2, -2])));
        assert_eq!(hj_resolution(&t(2, 1)), chain(&to_terms(&[-2])));
        for n in 1..12 {
            assert_eq!(hj_resolution(&HjType::a_n(n).unwrap()), chain(&vec![BigInt::from(-2); n as usize]));
        }
        assert!(is_contractible(&hj_resolution(&t(97, 35))));
    }

    #[test]
    fn embdim_examples() {
        assert_eq!(embdim(&t(11, 7)), BigInt::from(4));
        assert_eq!(embdim(&t(11, 4)), BigInt::from(6));
        assert_eq!(embdim(&t(2, 1)), BigInt::from(3));
        for (p, q) in [(11, 7), (11, 4), (2, 1), (7, 1), (7, 6), (13, 5)] {
            assert_eq!(embdim_oracle(&t(p, q)).unwrap(), embdim(&t(p, q)), "{p}/{q}");
        }
    }

    #[test]
    fn blowup_examples() {
        use BlowupType::*;
        assert_eq!(blowup_types(&t(11, 7)).unwrap(), vec![Smooth, Singular(t(2, 1))]);
        assert_eq!(blowup_types(&t(2, 1)).unwrap(), vec![]);
        assert_eq!(blowup_types(&t(3, 1)).unwrap(), vec![]);
        assert_eq!(blowup_types(&t(3, 2)).unwrap(), vec![Smooth]);
        for n in 3..=20 {
            assert_eq!(blowup_types(&HjType::a_n(n).unwrap()).unwrap(), vec![Singular(HjType::a_n(n - 2).unwrap())]);
        }
    }
}
