use std::fmt;

use num_bigint::BigInt;

use super::check_pq;
use crate::cf::inverse_mod;
use crate::error::Result;

/// The lens space `L(p,q)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LensSpace {
    p: BigInt,
    q: BigInt,
}

impl LensSpace {
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        let (p, q) = (p.into(), q.into());
        check_pq(&p, &q, "a lens space")?;
        Ok(Self { p, q })
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }
}

impl fmt::Display for LensSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.p, self.q)
    }
}

/// `L(p,q) ≅ L(p',q')` preserving orientation iff `p = p'` and `q' ∈ {q, q̄}`.
pub fn lens_oriented_equal(a: &LensSpace, b: &LensSpace) -> bool {
    if a.p != b.p {
        return false;
    }
    b.q == a.q || inverse_mod(&a.q, &a.p).is_some_and(|qbar| qbar == b.q)
}

/// The same manifold with the opposite orientation, `L(p, p-q)`.
pub fn lens_reverse(a: &LensSpace) -> LensSpace {
    LensSpace {
        p: a.p.clone(),
        q: &a.p - &a.q,
    }
}

/// Equality by an orientation-reversing diffeomorphism.
pub fn lens_reversing_equal(a: &LensSpace, b: &LensSpace) -> bool {
    lens_oriented_equal(a, &lens_reverse(b))
}
