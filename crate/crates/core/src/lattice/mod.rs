//! Plane lattice geometry: primitive vectors, unimodular maps, normal forms of
//! rational cones, the boundary polygon `P(σ)` and its dual.
//!
//! Orientation is fixed once for the whole module: a cone `cone(u_-, u_+)` is
//! oriented by turning from `u_-` towards `u_+` inside the cone. Normal-form
//! coordinates are coordinates in the basis `(A_0, A_1)` of that orientation,
//! where `A_0` is the primitive vector on `u_-`; in them `u_+ = (-q, p)`.

mod duality;
mod klein;
mod polygon;

pub use duality::{dual_cone, duality_map, supplementary, supplementary_frame, DualityPair, DualityReport, EdgeRef};
pub use klein::klein_quotients;
pub use polygon::{hull_oracle, polygon, ConePolygon};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::cf::Rational;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector {
    pub x: BigInt,
    pub y: BigInt,
}

impl LatticeVector {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        Self { x: x.into(), y: y.into() }
    }

    pub fn zero() -> Self {
        Self::new(0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// `det(self, other) = self.x·other.y − self.y·other.x`.
    pub fn det(&self, other: &LatticeVector) -> BigInt {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn gcd(&self) -> BigInt {
        self.x.gcd(&self.y)
    }

    pub fn scale(&self, k: &BigInt) -> LatticeVector {
        LatticeVector::new(&self.x * k, &self.y * k)
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl Add for &LatticeVector {
    type Output = LatticeVector;
    fn add(self, rhs: &LatticeVector) -> LatticeVector {
        LatticeVector::new(&self.x + &rhs.x, &self.y + &rhs.y)
    }
}

impl Sub for &LatticeVector {
    type Output = LatticeVector;
    fn sub(self, rhs: &LatticeVector) -> LatticeVector {
        LatticeVector::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

impl Neg for &LatticeVector {
    type Output = LatticeVector;
    fn neg(self) -> LatticeVector {
        LatticeVector::new(-&self.x, -&self.y)
    }
}

impl Mul<&LatticeVector> for &BigInt {
    type Output = LatticeVector;
    fn mul(self, rhs: &LatticeVector) -> LatticeVector {
        rhs.scale(self)
    }
}

/// Integer 2×2 matrix of determinant ±1 acting on column vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnimodularMap {
    m: [[BigInt; 2]; 2],
}

impl UnimodularMap {
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Result<Self> {
        let map = Self { m: [[a, b], [c, d]] };
        let det = map.det();
        if det.abs().is_one() {
            Ok(map)
        } else {
            Err(Error::Domain(format!("matrix has determinant {det}, expected ±1")))
        }
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        Self::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn identity() -> Self {
        Self::from_i64(1, 0, 0, 1).unwrap()
    }

    /// The matrix whose columns are `c0` and `c1`.
    pub fn from_columns(c0: &LatticeVector, c1: &LatticeVector) -> Result<Self> {
        Self::new(c0.x.clone(), c1.x.clone(), c0.y.clone(), c1.y.clone())
    }

    pub fn matrix(&self) -> &[[BigInt; 2]; 2] {
        &self.m
    }

    pub fn det(&self) -> BigInt {
        &self.m[0][0] * &self.m[1][1] - &self.m[0][1] * &self.m[1][0]
    }

    pub fn apply(&self, v: &LatticeVector) -> LatticeVector {
        LatticeVector::new(
            &self.m[0][0] * &v.x + &self.m[0][1] * &v.y,
            &self.m[1][0] * &v.x + &self.m[1][1] * &v.y,
        )
    }

    pub fn inverse(&self) -> Self {
        let det = self.det();
        let [[a, b], [c, d]] = &self.m;
        // det is ±1, so multiplying by it is dividing by it.
        Self {
            m: [[d * &det, -(b * &det)], [-(c * &det), a * &det]],
        }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &UnimodularMap) -> Self {
        let col0 = self.apply(&LatticeVector::new(other.m[0][0].clone(), other.m[1][0].clone()));
        let col1 = self.apply(&LatticeVector::new(other.m[0][1].clone(), other.m[1][1].clone()));
        Self::from_columns(&col0, &col1).expect("product of unimodular maps")
    }
}

/// Normal form `(p, q)` of a rational strictly convex cone; `(1, 0)` is the
/// regular cone, otherwise `0 < q < p` and the cone has type `p/q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConeNf {
    p: BigInt,
    q: BigInt,
}

impl ConeNf {
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        let (p, q) = (p.into(), q.into());
        if q.is_negative() || q >= p || !p.gcd(&q).is_one() {
            return Err(Error::Domain(format!("cone normal form needs 0 <= q < p coprime, got p={p}, q={q}")));
        }
        Ok(Self { p, q })
    }

    pub fn regular() -> Self {
        Self { p: BigInt::one(), q: BigInt::zero() }
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn is_regular(&self) -> bool {
        self.p.is_one()
    }

    /// The type `λ = p/q > 1`.
    pub fn lambda(&self) -> Result<Rational> {
        self.require_singular()?;
        Ok(Rational::new(self.p.clone(), self.q.clone()))
    }

    pub(crate) fn require_singular(&self) -> Result<()> {
        if self.is_regular() {
            Err(Error::RegularCone)
        } else {
            Ok(())
        }
    }

    /// `u_+` in normal-form coordinates.
    pub fn u_plus(&self) -> LatticeVector {
        LatticeVector::new(-&self.q, self.p.clone())
    }
}

impl fmt::Display for ConeNf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

/// Standard drawing frame: `A_0 = (1,0)`, `A_1 = (1,1)`, so that
/// `u_+ = (p - q, p)`. Maps normal-form coordinates to this frame.
pub fn standard_from_nf() -> UnimodularMap {
    UnimodularMap::from_i64(1, 1, 0, 1).unwrap()
}

pub fn primitive(v: &LatticeVector) -> Result<LatticeVector> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let g = v.gcd();
    Ok(LatticeVector::new(&v.x / &g, &v.y / &g))
}

/// Number of unit lattice steps on the segment `[a, b]`.
pub fn integral_length(a: &LatticeVector, b: &LatticeVector) -> Result<BigInt> {
    let d = b - a;
    if d.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(d.gcd())
}

/// Normal form of `cone(u_minus, u_plus)` and the map to normal-form
/// coordinates, sending `u_minus ↦ (1, 0)` and `u_plus ↦ (-q, p)` up to
/// positive scaling.
pub fn cone_normal_form(u_minus: &LatticeVector, u_plus: &LatticeVector) -> Result<(ConeNf, UnimodularMap)> {
    let a0 = primitive(u_minus)?;
    let up = primitive(u_plus)?;
    let cross = a0.det(&up);
    if cross.is_zero() {
        return Err(Error::DegenerateCone);
    }
    // w0 with det(a0, w0) = 1 from Bézout: a0.x·s + a0.y·t = 1, w0 = (-t, s).
    let egcd = a0.x.extended_gcd(&a0.y);
    let mut w = LatticeVector::new(-egcd.y, egcd.x);
    debug_assert!(a0.det(&w).is_one());
    let d: BigInt = if cross.is_positive() { BigInt::one() } else { -BigInt::one() };
    w = w.scale(&d);
    // up = alpha·a0 + beta·w with beta > 0.
    let beta = &cross * &d;
    let alpha = up.det(&w) * &d;
    let p = beta;
    let q = (-&alpha).mod_floor(&p);
    let k = (&alpha + &q) / &p;
    let a1 = &w + &a0.scale(&k);
    let to_nf = UnimodularMap::from_columns(&a0, &a1)?.inverse();
    debug_assert_eq!(to_nf.apply(&up), LatticeVector::new(-&q, p.clone()));
    Ok((ConeNf { p, q }, to_nf))
}
