//! Conversions between E and HJ sequences, finite and eventually periodic.

use num_bigint::BigInt;
use num_traits::One;

use super::{check_terms, run_length, CfKind};
use crate::error::{Error, Result};

/// Pushes `(2)^{a-1}` followed by `b + shift` (the pair rule of the conversion).
fn push_pair(out: &mut Vec<BigInt>, a: &BigInt, b: Option<(&BigInt, i64)>) -> Result<()> {
    let twos = run_length(&(a - 1))?;
    out.extend(std::iter::repeat_n(BigInt::from(2), twos));
    if let Some((b, shift)) = b {
        out.push(b + shift);
    }
    Ok(())
}

/// Rewrites an E sequence `[a_1..a_n]^+` as an HJ sequence with the same value:
/// `[a_1+1, (2)^{a_2-1}, a_3+2, (2)^{a_4-1}, ...]^-`, the last odd term
/// contributing `a_n+1`.
pub fn e_to_hj(terms: &[BigInt]) -> Result<Vec<BigInt>> {
    check_terms(CfKind::E, terms)?;
    if terms.len() == 1 {
        return Ok(terms.to_vec());
    }
    let mut out = vec![&terms[0] + 1];
    let mut i = 1;
    while i < terms.len() {
        let next = match terms.get(i + 1) {
            Some(b) if i + 2 == terms.len() => Some((b, 1)),
            Some(b) => Some((b, 2)),
            None => None,
        };
        push_pair(&mut out, &terms[i], next)?;
        i += 2;
    }
    Ok(out)
}

/// Inverse of [`e_to_hj`]; the result is a canonical E sequence.
pub fn hj_to_e(terms: &[BigInt]) -> Result<Vec<BigInt>> {
    check_terms(CfKind::Hj, terms)?;
    if terms.len() == 1 {
        return Ok(terms.to_vec());
    }
    let two = BigInt::from(2);
    let mut out = vec![&terms[0] - 1];
    let mut i = 1;
    while i < terms.len() {
        let run = terms[i..].iter().take_while(|t| **t == two).count();
        out.push(BigInt::from(run + 1));
        i += run;
        if i < terms.len() {
            let shift = if i + 1 == terms.len() { 1 } else { 2 };
            out.push(&terms[i] - shift);
            i += 1;
        }
    }
    Ok(out)
}

/// An eventually periodic sequence of partial quotients, kept in normal form:
/// primitive period, then shortest preperiod.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PeriodicCf {
    kind: CfKind,
    preperiod: Vec<BigInt>,
    period: Vec<BigInt>,
}

impl PeriodicCf {
    pub fn new(kind: CfKind, preperiod: Vec<BigInt>, period: Vec<BigInt>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::InvalidSequence("empty period".into()));
        }
        let min = BigInt::from(kind.min_tail_term());
        let tail = preperiod.iter().skip(1).chain(period.iter());
        if let Some(t) = tail.clone().find(|t| **t < min) {
            return Err(Error::InvalidSequence(format!(
                "term {t} is below {min} for a {kind:?} continued fraction"
            )));
        }
        if kind == CfKind::Hj && period.iter().all(|t| *t == min) {
            return Err(Error::InvalidSequence(
                "an HJ period made only of 2s is not a canonical expansion".into(),
            ));
        }
        let mut cf = Self {
            kind,
            preperiod,
            period,
        };
        cf.normalize();
        Ok(cf)
    }

    fn normalize(&mut self) {
        let n = self.period.len();
        if let Some(d) = (1..n).find(|d| n % d == 0 && self.period.chunks(*d).all(|c| c == &self.period[..*d])) {
            self.period.truncate(d);
        }
        while self.preperiod.last().is_some() && self.preperiod.last() == self.period.last() {
            self.preperiod.pop();
            self.period.rotate_right(1);
        }
    }

    pub fn kind(&self) -> CfKind {
        self.kind
    }

    pub fn preperiod(&self) -> &[BigInt] {
        &self.preperiod
    }

    pub fn period(&self) -> &[BigInt] {
        &self.period
    }

    /// The `i`-th partial quotient of the stream, counting from 0.
    pub fn term(&self, i: usize) -> &BigInt {
        match self.preperiod.get(i) {
            Some(t) => t,
            None => &self.period[(i - self.preperiod.len()) % self.period.len()],
        }
    }

    pub fn prefix(&self, len: usize) -> Vec<BigInt> {
        (0..len).map(|i| self.term(i).clone()).collect()
    }
}

/// Periodic version of [`e_to_hj`]. The E stream is unrolled until the
/// preperiod has odd length and the period even length, so that the pair rule
/// maps whole periods onto whole periods.
pub fn e_to_hj_periodic(x: &PeriodicCf) -> Result<PeriodicCf> {
    if x.kind != CfKind::E {
        return Err(Error::InvalidSequence("expected an E-kind periodic sequence".into()));
    }
    let mut head = x.preperiod.len().max(1);
    if head % 2 == 0 {
        head += 1;
    }
    let mut period_len = x.period.len();
    if period_len % 2 == 1 {
        period_len *= 2;
    }
    let pairs = |from: usize, to: usize| -> Result<Vec<BigInt>> {
        let mut out = Vec::new();
        for i in (from..to).step_by(2) {
            push_pair(&mut out, x.term(i), Some((x.term(i + 1), 2)))?;
        }
        Ok(out)
    };
    let mut preperiod = vec![x.term(0) + BigInt::one()];
    preperiod.extend(pairs(1, head)?);
    let period = pairs(head, head + period_len)?;
    PeriodicCf::new(CfKind::Hj, preperiod, period)
}

#[cfg(test)]
mod tests {
    use super::super::{eval_terms, to_terms, Sign};
    use super::*;

    #[test]
    fn e_to_hj_examples() {
        assert_eq!(e_to_hj(&to_terms(&[1, 1, 1, 3])).unwrap(), to_terms(&[2, 3, 2, 2]));
        assert_eq!(e_to_hj(&to_terms(&[7])).unwrap(), to_terms(&[7]));
        assert_eq!(e_to_hj(&to_terms(&[2, 1, 3])).unwrap(), to_terms(&[3, 4]));
        assert_eq!(e_to_hj(&to_terms(&[3, 1])).unwrap(), to_terms(&[4]));
    }

    #[test]
    fn hj_to_e_examples() {
        assert_eq!(hj_to_e(&to_terms(&[2, 3, 2, 2])).unwrap(), to_terms(&[1, 1, 1, 3]));
        assert_eq!(hj_to_e(&to_terms(&[7])).unwrap(), to_terms(&[7]));
        assert_eq!(hj_to_e(&to_terms(&[3, 4])).unwrap(), to_terms(&[2, 1, 3]));
        assert_eq!(hj_to_e(&to_terms(&[5, 3])).unwrap(), to_terms(&[4, 1, 2]));
    }

    #[test]
    fn conversions_reject_bad_terms() {
        assert!(e_to_hj(&to_terms(&[1, 0])).is_err());
        assert!(hj_to_e(&to_terms(&[3, 1])).is_err());
        assert!(hj_to_e(&[]).is_err());
    }

    #[test]
    fn conversions_preserve_value() {
        let samples: [&[i64]; 5] = [&[1, 2], &[4, 1, 1, 5], &[-2, 3, 1, 2], &[1, 5, 2, 1, 7], &[0, 1, 2]];
        for xs in samples {
            let e = to_terms(xs);
            let hj = e_to_hj(&e).unwrap();
            assert_eq!(eval_terms(Sign::Plus, &e).unwrap(), eval_terms(Sign::Minus, &hj).unwrap());
        }
    }

    #[test]
    fn periodic_normalization() {
        let a = PeriodicCf::new(CfKind::E, vec![], to_terms(&[1, 1])).unwrap();
        assert_eq!(a.period(), to_terms(&[1]));
        let b = PeriodicCf::new(CfKind::E, to_terms(&[3, 1, 2]), to_terms(&[1, 2])).unwrap();
        assert_eq!(b.preperiod(), to_terms(&[3]));
        assert_eq!(b.period(), to_terms(&[1, 2]));
        assert_eq!(b.prefix(5), to_terms(&[3, 1, 2, 1, 2]));
        assert!(PeriodicCf::new(CfKind::E, vec![], vec![]).is_err());
        assert!(PeriodicCf::new(CfKind::Hj, to_terms(&[3]), to_terms(&[2, 2])).is_err());
        assert!(PeriodicCf::new(CfKind::E, to_terms(&[3, 0]), to_terms(&[2])).is_err());
    }

    #[test]
    fn periodic_golden_stream() {
        let ones = PeriodicCf::new(CfKind::E, vec![], to_terms(&[1])).unwrap();
        let hj = e_to_hj_periodic(&ones).unwrap();
        assert_eq!(hj.preperiod(), to_terms(&[2]));
        assert_eq!(hj.period(), to_terms(&[3]));
        let doubled = PeriodicCf::new(CfKind::E, vec![], to_terms(&[1, 1])).unwrap();
        assert_eq!(e_to_hj_periodic(&doubled).unwrap(), hj);
    }

    #[test]
    fn periodic_matches_truncation() {
        let cases: [(&[i64], &[i64]); 5] = [
            (&[], &[1]),
            (&[2], &[2]),
            (&[1, 4], &[2, 1, 3]),
            (&[5, 1, 1], &[1, 2]),
            (&[], &[3, 1, 4, 1, 5]),
        ];
        for (pre, per) in cases {
            let e = PeriodicCf::new(CfKind::E, to_terms(pre), to_terms(per)).unwrap();
            let hj = e_to_hj_periodic(&e).unwrap();
            // An odd-length E prefix converts to the HJ stream except for its last term.
            let finite = e_to_hj(&e.prefix(41)).unwrap();
            let n = finite.len() - 1;
            assert_eq!(finite[..n], hj.prefix(n)[..], "pre {pre:?} per {per:?}");
        }
    }

    #[test]
    fn periodic_rejects_hj_input() {
        let hj = PeriodicCf::new(CfKind::Hj, vec![], to_terms(&[3])).unwrap();
        assert!(e_to_hj_periodic(&hj).is_err());
    }
}
