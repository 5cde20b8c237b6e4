//! Exact continued-fraction algebra.
//!
//! Two calculi live side by side: Euclidean (E) continued fractions
//! `x1 + 1/(x2 + 1/(...))` and Hirzebruch-Jung (HJ) continued fractions
//! `x1 - 1/(x2 - 1/(...))`. Everything is computed over arbitrary-precision
//! integers; continuants grow exponentially in the length of the sequence.

mod convert;
mod involution;

pub use convert::{e_to_hj, e_to_hj_periodic, hj_to_e, PeriodicCf};
pub use involution::{
    hj_blocks, involute, involute_e, involute_hj, reverse_hj, staircase, staircase_dual,
    HjBlocks, Staircase,
};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Reduced fraction of big integers with a positive denominator.
pub type Rational = BigRational;

/// Selects the `+` (Euclidean) or `-` (Hirzebruch-Jung) continuant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CfKind {
    /// Euclidean: partial quotients after the first are `>= 1`.
    E,
    /// Hirzebruch-Jung: partial quotients after the first are `>= 2`.
    Hj,
}

impl CfKind {
    pub fn sign(self) -> Sign {
        match self {
            CfKind::E => Sign::Plus,
            CfKind::Hj => Sign::Minus,
        }
    }

    /// Smallest admissible value of every partial quotient except the first.
    pub fn min_tail_term(self) -> i64 {
        match self {
            CfKind::E => 1,
            CfKind::Hj => 2,
        }
    }
}

/// A finite continued fraction whose terms satisfy the restriction of its kind.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CfExpansion {
    kind: CfKind,
    terms: Vec<BigInt>,
}

impl CfExpansion {
    pub fn new(kind: CfKind, terms: Vec<BigInt>) -> Result<Self> {
        check_terms(kind, &terms)?;
        Ok(Self { kind, terms })
    }

    pub fn e(terms: Vec<BigInt>) -> Result<Self> {
        Self::new(CfKind::E, terms)
    }

    pub fn hj(terms: Vec<BigInt>) -> Result<Self> {
        Self::new(CfKind::Hj, terms)
    }

    pub fn kind(&self) -> CfKind {
        self.kind
    }

    pub fn terms(&self) -> &[BigInt] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<BigInt> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// E expansions are canonical when they do not end in 1 (except `[1]`);
    /// finite HJ expansions are always canonical.
    pub fn is_canonical(&self) -> bool {
        match self.kind {
            CfKind::E => self.terms.len() < 2 || !self.terms.last().unwrap().is_one(),
            CfKind::Hj => true,
        }
    }
}

impl std::fmt::Display for CfExpansion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&format_terms(&self.terms))
    }
}

pub(crate) fn check_terms(kind: CfKind, terms: &[BigInt]) -> Result<()> {
    if terms.is_empty() {
        return Err(Error::InvalidSequence("empty sequence".into()));
    }
    let min = BigInt::from(kind.min_tail_term());
    if let Some((i, t)) = terms.iter().enumerate().skip(1).find(|(_, t)| **t < min) {
        return Err(Error::InvalidSequence(format!(
            "term {} at position {} is below {} for a {:?} continued fraction",
            t,
            i + 1,
            min,
            kind
        )));
    }
    Ok(())
}

/// The continuant `Z±(x1..xn)`: `Z(∅) = 1`, `Z(x) = x`,
/// `Z(x1..xn) = x1·Z(x2..xn) ± Z(x3..xn)`.
pub fn continuant(sign: Sign, terms: &[BigInt]) -> BigInt {
    // Fold from the right: (Z(x_{i+1}..), Z(x_{i+2}..)) starts as (Z(∅), 0).
    let mut next = BigInt::one();
    let mut after = BigInt::zero();
    for x in terms.iter().rev() {
        let cur = match sign {
            Sign::Plus => x * &next + &after,
            Sign::Minus => x * &next - &after,
        };
        after = std::mem::replace(&mut next, cur);
    }
    next
}

/// Value of a finite continued fraction as a reduced rational.
pub fn eval(cf: &CfExpansion) -> Result<Rational> {
    eval_terms(cf.kind.sign(), &cf.terms)
}

pub(crate) fn eval_terms(sign: Sign, terms: &[BigInt]) -> Result<Rational> {
    let (last, rest) = terms
        .split_last()
        .ok_or_else(|| Error::InvalidSequence("empty sequence".into()))?;
    let mut acc = Rational::from_integer(last.clone());
    for x in rest.iter().rev() {
        if acc.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let x = Rational::from_integer(x.clone());
        acc = match sign {
            Sign::Plus => x + acc.recip(),
            Sign::Minus => x - acc.recip(),
        };
    }
    Ok(acc)
}

/// Canonical E expansion by the floor-based Euclidean algorithm.
pub fn expand_e(x: &Rational) -> CfExpansion {
    let mut terms = Vec::new();
    let mut num = x.numer().clone();
    let mut den = x.denom().clone();
    loop {
        let (quo, rem) = num.div_mod_floor(&den);
        terms.push(quo);
        if rem.is_zero() {
            break;
        }
        num = std::mem::replace(&mut den, rem);
    }
    CfExpansion {
        kind: CfKind::E,
        terms,
    }
}

/// Canonical HJ expansion by the ceiling recursion `α = ⌈x⌉`, `x ← 1/(α − x)`.
pub fn expand_hj(x: &Rational) -> CfExpansion {
    let mut terms = Vec::new();
    let mut num = x.numer().clone();
    let mut den = x.denom().clone();
    loop {
        let quo = num.div_ceil(&den);
        // α − num/den = (α·den − num)/den, so the next value is den/(α·den − num).
        let gap = &quo * &den - &num;
        terms.push(quo);
        if gap.is_zero() {
            break;
        }
        num = std::mem::replace(&mut den, gap);
    }
    CfExpansion {
        kind: CfKind::Hj,
        terms,
    }
}

/// Rewrites a trailing 1 of an E sequence using `[.., a, 1] = [.., a + 1]`.
pub fn canonicalize_e(mut terms: Vec<BigInt>) -> Vec<BigInt> {
    while terms.len() >= 2 && terms.last().is_some_and(One::is_one) {
        terms.pop();
        *terms.last_mut().unwrap() += 1;
    }
    terms
}

/// Inverse of `q` modulo `p`, normalized into `[0, p)`.
pub fn inverse_mod(q: &BigInt, p: &BigInt) -> Option<BigInt> {
    if !p.is_positive() {
        return None;
    }
    let egcd = q.extended_gcd(p);
    if !egcd.gcd.is_one() {
        return None;
    }
    Some(egcd.x.mod_floor(p))
}

pub fn to_terms(values: &[i64]) -> Vec<BigInt> {
    values.iter().copied().map(BigInt::from).collect()
}

/// `[a,b,c]` with no spaces.
pub fn format_terms(terms: &[BigInt]) -> String {
    let inner: Vec<String> = terms.iter().map(ToString::to_string).collect();
    format!("[{}]", inner.join(","))
}

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Largest run of repeated terms we are willing to write out explicitly.
pub(crate) const MAX_RUN: u64 = 1 << 24;

/// Converts a repetition count such as `a - 1` in `(2)^{a-1}` to a usize.
pub(crate) fn run_length(count: &BigInt) -> Result<usize> {
    use num_traits::ToPrimitive;
    if count.is_negative() {
        return Err(Error::InvalidSequence(format!("negative repetition count {count}")));
    }
    match count.to_u64() {
        Some(n) if n <= MAX_RUN => Ok(n as usize),
        _ => Err(Error::TooLarge(format!("run of {count} repeated terms"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    /// Textbook recursion, kept separate from the iterative fold.
    fn continuant_naive(sign: Sign, xs: &[i64]) -> i64 {
        match xs.len() {
            0 => 1,
            1 => xs[0],
            _ => {
                let head = xs[0] * continuant_naive(sign, &xs[1..]);
                match sign {
                    Sign::Plus => head + continuant_naive(sign, &xs[2..]),
                    Sign::Minus => head - continuant_naive(sign, &xs[2..]),
                }
            }
        }
    }

    #[test]
    fn continuant_examples() {
        assert_eq!(continuant(Sign::Minus, &[]), big(1));
        assert_eq!(continuant(Sign::Plus, &[]), big(1));
        assert_eq!(continuant(Sign::Minus, &to_terms(&[7])), big(7));
        assert_eq!(continuant_naive(Sign::Minus, &[2, 3, 2, 2]), 11);
        assert_eq!(continuant(Sign::Minus, &to_terms(&[2, 3, 2, 2])), big(11));
        assert_eq!(continuant_naive(Sign::Plus, &[1, 1, 1, 3]), 11);
        assert_eq!(continuant(Sign::Plus, &to_terms(&[1, 1, 1, 3])), big(11));
    }

    #[test]
    fn continuant_matches_naive_recursion() {
        let samples: [&[i64]; 5] = [&[3], &[1, 4], &[2, 2, 2], &[5, 1, 3, 7, 2], &[-3, 2, 9, 1]];
        for xs in samples {
            for sign in [Sign::Plus, Sign::Minus] {
                assert_eq!(continuant(sign, &to_terms(xs)), big(continuant_naive(sign, xs)));
            }
        }
    }

    #[test]
    fn eval_examples() {
        let hj = CfExpansion::hj(to_terms(&[2, 3, 2, 2])).unwrap();
        assert_eq!(eval(&hj).unwrap(), rational(11, 7));
        let e = CfExpansion::e(to_terms(&[5])).unwrap();
        assert_eq!(eval(&e).unwrap(), rational(5, 1));
        let e = CfExpansion::e(to_terms(&[2, 1, 3])).unwrap();
        assert_eq!(eval(&e).unwrap(), rational(11, 4));
    }

    #[test]
    fn eval_detects_zero_tail() {
        // The tail [1, 1]^- is 1 - 1 = 0.
        let err = eval_terms(Sign::Minus, &to_terms(&[3, 1, 1])).unwrap_err();
        assert_eq!(err, Error::DivisionByZero);
    }

    #[test]
    fn restrictions_are_enforced() {
        assert!(CfExpansion::e(to_terms(&[-4, 1, 1])).is_ok());
        assert!(matches!(
            CfExpansion::e(to_terms(&[2, 0, 3])),
            Err(Error::InvalidSequence(_))
        ));
        assert!(matches!(
            CfExpansion::hj(to_terms(&[2, 1])),
            Err(Error::InvalidSequence(_))
        ));
        assert!(CfExpansion::hj(vec![]).is_err());
    }

    #[test]
    fn expand_examples() {
        assert_eq!(expand_e(&rational(11, 7)).terms(), to_terms(&[1, 1, 1, 3]));
        assert_eq!(expand_e(&rational(2, 1)).terms(), to_terms(&[2]));
        assert_eq!(expand_e(&rational(11, 4)).terms(), to_terms(&[2, 1, 3]));
        assert_eq!(expand_e(&rational(1, 1)).terms(), to_terms(&[1]));
        assert_eq!(expand_hj(&rational(11, 7)).terms(), to_terms(&[2, 3, 2, 2]));
        assert_eq!(expand_hj(&rational(11, 4)).terms(), to_terms(&[3, 4]));
        assert_eq!(expand_hj(&rational(3, 1)).terms(), to_terms(&[3]));
    }

    #[test]
    fn expand_handles_negative_values() {
        let x = rational(-7, 3);
        let e = expand_e(&x);
        assert_eq!(e.terms(), to_terms(&[-3, 1, 2]));
        assert_eq!(eval(&e).unwrap(), x);
        let hj = expand_hj(&x);
        assert_eq!(hj.terms(), to_terms(&[-2, 3]));
        assert_eq!(eval(&hj).unwrap(), x);
    }

    #[test]
    fn expansions_round_trip_small_range() {
        for p in 1..=60i64 {
            for q in 1..=60i64 {
                let x = rational(p, q);
                let e = expand_e(&x);
                assert!(e.is_canonical());
                assert_eq!(eval(&e).unwrap(), x);
                assert_eq!(eval(&expand_hj(&x)).unwrap(), x);
            }
        }
    }

    #[test]
    fn canonicalize_removes_trailing_ones() {
        assert_eq!(canonicalize_e(to_terms(&[1, 1, 1, 2, 1])), to_terms(&[1, 1, 1, 3]));
        assert_eq!(canonicalize_e(to_terms(&[1, 1])), to_terms(&[2]));
        assert_eq!(canonicalize_e(to_terms(&[1])), to_terms(&[1]));
    }

    #[test]
    fn inverse_mod_examples() {
        assert_eq!(inverse_mod(&big(7), &big(11)), Some(big(8)));
        assert_eq!(inverse_mod(&big(4), &big(11)), Some(big(3)));
        assert_eq!(inverse_mod(&big(6), &big(9)), None);
    }

    #[test]
    fn format_terms_is_compact() {
        assert_eq!(format_terms(&to_terms(&[2, 3, 2, 2])), "[2,3,2,2]");
        assert_eq!(format_terms(&[]), "[]");
    }
}
