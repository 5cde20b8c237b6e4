//! The involution `λ ↦ λ/(λ-1)` of `(1, ∞)` on values, E sequences and HJ
//! sequences, Riemenschneider staircases, and reversal of HJ sequences.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use super::{canonicalize_e, check_terms, eval_terms, expand_hj, inverse_mod, run_length, CfKind, Rational, Sign};
use crate::error::{Error, Result};

pub fn involute(x: &Rational) -> Result<Rational> {
    let one = Rational::one();
    if *x <= one {
        return Err(Error::Domain(format!("involution needs λ > 1, got {x}")));
    }
    Ok(x / (x - one))
}

/// Involution on canonical E sequences of numbers `λ > 1`.
pub fn involute_e(terms: &[BigInt]) -> Result<Vec<BigInt>> {
    check_terms(CfKind::E, terms)?;
    let a1 = &terms[0];
    if a1 < &BigInt::one() || (a1.is_one() && terms.len() == 1) {
        return Err(Error::InvalidSequence(format!(
            "{} does not expand a number greater than 1",
            super::format_terms(terms)
        )));
    }
    let mut out = Vec::with_capacity(terms.len() + 1);
    if a1.is_one() {
        out.push(&terms[1] + 1);
        out.extend_from_slice(&terms[2..]);
    } else {
        out.push(BigInt::one());
        out.push(a1 - 1);
        out.extend_from_slice(&terms[1..]);
    }
    Ok(canonicalize_e(out))
}

/// Block form `[(2)^{m_1}, n_1+3, (2)^{m_2}, ..., n_s+3, (2)^{m_{s+1}}]` of an
/// HJ sequence with all terms `>= 2`. Empty runs of 2s are kept, so
/// `twos.len() == tops.len() + 1` always.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HjBlocks {
    /// `m_1, ..., m_{s+1}`.
    pub twos: Vec<usize>,
    /// `n_1, ..., n_s`.
    pub tops: Vec<BigInt>,
}

impl HjBlocks {
    /// `s`, the number of terms `>= 3`.
    pub fn s(&self) -> usize {
        self.tops.len()
    }

    pub fn to_terms(&self) -> Vec<BigInt> {
        let mut out = Vec::new();
        for (i, m) in self.twos.iter().enumerate() {
            out.extend(std::iter::repeat_n(BigInt::from(2), *m));
            if let Some(n) = self.tops.get(i) {
                out.push(n + 3);
            }
        }
        out
    }
}

fn check_all_at_least_two(terms: &[BigInt]) -> Result<()> {
    if terms.is_empty() {
        return Err(Error::InvalidSequence("empty sequence".into()));
    }
    let two = BigInt::from(2);
    match terms.iter().find(|t| **t < two) {
        Some(t) => Err(Error::InvalidSequence(format!("term {t} is below 2"))),
        None => Ok(()),
    }
}

/// Greedy left-to-right block decomposition.
pub fn hj_blocks(terms: &[BigInt]) -> Result<HjBlocks> {
    check_all_at_least_two(terms)?;
    let two = BigInt::from(2);
    let mut twos = Vec::new();
    let mut tops = Vec::new();
    let mut run = 0;
    for t in terms {
        if *t == two {
            run += 1;
        } else {
            twos.push(run);
            tops.push(t - 3);
            run = 0;
        }
    }
    twos.push(run);
    Ok(HjBlocks { twos, tops })
}

/// Involution on HJ sequences (all terms `>= 2`):
/// `[(2)^{m_1}, n_1+3, ..., (2)^{m_{s+1}}] ↦ [m_1+2, (2)^{n_1}, m_2+3, ..., (2)^{n_s}, m_{s+1}+2]`.
/// With `s = 0`, `[(2)^m] = (m+1)/m` goes to `[m+1]`.
pub fn involute_hj(terms: &[BigInt]) -> Result<Vec<BigInt>> {
    let blocks = hj_blocks(terms)?;
    let s = blocks.s();
    if s == 0 {
        return Ok(vec![BigInt::from(blocks.twos[0] + 1)]);
    }
    let mut out = Vec::new();
    for (j, m) in blocks.twos.iter().enumerate() {
        let shift = if j == 0 || j == s { 2 } else { 3 };
        out.push(BigInt::from(m + shift));
        if let Some(n) = blocks.tops.get(j) {
            out.extend(std::iter::repeat_n(BigInt::from(2), run_length(n)?));
        }
    }
    Ok(out)
}

/// Point diagram of an HJ sequence: row `k` holds `α_k - 1` points and starts
/// in the column where row `k-1` ends.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Staircase {
    rows: Vec<usize>,
}

impl Staircase {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.is_empty() || rows.contains(&0) {
            return Err(Error::InvalidSequence("staircase rows must be nonempty and positive".into()));
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// First column of each row.
    fn starts(&self) -> Vec<usize> {
        let mut col = 0;
        self.rows
            .iter()
            .map(|r| {
                let start = col;
                col += r - 1;
                start
            })
            .collect()
    }

    /// Number of points in each column, left to right.
    pub fn columns(&self) -> Vec<usize> {
        let starts = self.starts();
        let width = starts.last().unwrap() + self.rows.last().unwrap();
        let mut cols = vec![0; width];
        for (start, r) in starts.iter().zip(&self.rows) {
            for c in &mut cols[*start..start + r] {
                *c += 1;
            }
        }
        cols
    }

    /// One line per row, `*` for a point.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (start, r) in self.starts().iter().zip(&self.rows) {
            let line = format!("{}{}", "  ".repeat(*start), vec!["*"; *r].join(" "));
            out.push_str(&line);
            out.push('\n');
        }
        out
    }
}

pub fn staircase(terms: &[BigInt]) -> Result<Staircase> {
    check_all_at_least_two(terms)?;
    let rows = terms
        .iter()
        .map(|t| run_length(&(t - 1)))
        .collect::<Result<Vec<_>>>()?;
    Staircase::new(rows)
}

/// Reads the column counts `β_k - 1` and returns `(β_k)`.
pub fn staircase_dual(s: &Staircase) -> Vec<BigInt> {
    s.columns().into_iter().map(|c| BigInt::from(c + 1)).collect()
}

/// Reverses the HJ expansion of `p/q`; the result evaluates to `p/q̄` with
/// `q·q̄ ≡ 1 (mod p)`.
pub fn reverse_hj(p: &BigInt, q: &BigInt) -> Result<(Vec<BigInt>, Rational)> {
    if !q.is_positive() || q >= p || !p.gcd(q).is_one() {
        return Err(Error::Domain(format!("reversal needs 0 < q < p coprime, got p={p}, q={q}")));
    }
    let mut terms = expand_hj(&Rational::new(p.clone(), q.clone())).into_terms();
    terms.reverse();
    let value = eval_terms(Sign::Minus, &terms)?;
    debug_assert_eq!(Some(value.denom().clone()), inverse_mod(q, p));
    Ok((terms, value))
}

#[cfg(test)]
mod tests {
    use super::super::{expand_e, rational, to_terms};
    use super::*;

    #[test]
    fn involute_values() {
        assert_eq!(involute(&rational(11, 7)).unwrap(), rational(11, 4));
        assert_eq!(involute(&rational(2, 1)).unwrap(), rational(2, 1));
        assert_eq!(involute(&rational(11, 4)).unwrap(), rational(11, 7));
        assert!(matches!(involute(&rational(1, 1)), Err(Error::Domain(_))));
        assert!(involute(&rational(-3, 2)).is_err());
    }

    #[test]
    fn involute_e_examples() {
        assert_eq!(involute_e(&to_terms(&[1, 1, 1, 3])).unwrap(), to_terms(&[2, 1, 3]));
        assert_eq!(involute_e(&to_terms(&[2])).unwrap(), to_terms(&[2]));
        assert_eq!(involute_e(&to_terms(&[2, 1, 3])).unwrap(), to_terms(&[1, 1, 1, 3]));
        assert!(involute_e(&to_terms(&[1])).is_err());
        assert!(involute_e(&to_terms(&[0, 3])).is_err());
    }

    #[test]
    fn blocks_keep_empty_runs() {
        let b = hj_blocks(&to_terms(&[2, 3, 2, 2])).unwrap();
        assert_eq!(b.twos, vec![1, 2]);
        assert_eq!(b.tops, to_terms(&[0]));
        let b = hj_blocks(&to_terms(&[3, 4])).unwrap();
        assert_eq!(b.twos, vec![0, 0, 0]);
        assert_eq!(b.tops, to_terms(&[0, 1]));
        assert_eq!(b.to_terms(), to_terms(&[3, 4]));
        assert!(hj_blocks(&to_terms(&[3, 1])).is_err());
    }

    #[test]
    fn involute_hj_examples() {
        assert_eq!(involute_hj(&to_terms(&[2, 3, 2, 2])).unwrap(), to_terms(&[3, 4]));
        assert_eq!(involute_hj(&to_terms(&[3, 4])).unwrap(), to_terms(&[2, 3, 2, 2]));
        assert_eq!(involute_hj(&to_terms(&[2])).unwrap(), to_terms(&[2]));
        assert_eq!(involute_hj(&to_terms(&[2, 2, 2])).unwrap(), to_terms(&[4]));
        assert_eq!(involute_hj(&to_terms(&[5])).unwrap(), to_terms(&[2, 2, 2, 2]));
    }

    #[test]
    fn staircase_examples() {
        let s = staircase(&to_terms(&[2, 3, 2, 2])).unwrap();
        assert_eq!(s.rows(), &[1, 2, 1, 1]);
        assert_eq!(staircase_dual(&s), to_terms(&[3, 4]));
        let s = staircase(&to_terms(&[2])).unwrap();
        assert_eq!(s.rows(), &[1]);
        assert_eq!(staircase_dual(&s), to_terms(&[2]));
        let s = staircase(&to_terms(&[3, 4])).unwrap();
        assert_eq!(s.rows(), &[2, 3]);
        assert_eq!(staircase_dual(&s), to_terms(&[2, 3, 2, 2]));
        assert!(staircase(&to_terms(&[1, 3])).is_err());
        assert!(Staircase::new(vec![2, 0]).is_err());
    }

    #[test]
    fn staircase_render() {
        let s = staircase(&to_terms(&[2, 3, 2, 2])).unwrap();
        assert_eq!(s.render(), "*\n* *\n  *\n  *\n");
    }

    #[test]
    fn reverse_examples() {
        let (terms, value) = reverse_hj(&BigInt::from(11), &BigInt::from(7)).unwrap();
        assert_eq!(terms, to_terms(&[2, 2, 3, 2]));
        assert_eq!(value, rational(11, 8));
        let (terms, value) = reverse_hj(&BigInt::from(11), &BigInt::from(4)).unwrap();
        assert_eq!(terms, to_terms(&[4, 3]));
        assert_eq!(value, rational(11, 3));
        for n in 1..20 {
            let (terms, value) = reverse_hj(&BigInt::from(n + 1), &BigInt::from(n)).unwrap();
            assert_eq!(terms, vec![BigInt::from(2); n as usize]);
            assert_eq!(value, rational(n + 1, n));
        }
        assert!(reverse_hj(&BigInt::from(6), &BigInt::from(4)).is_err());
        assert!(reverse_hj(&BigInt::from(5), &BigInt::from(5)).is_err());
    }

    #[test]
    fn all_involutions_agree_small_range() {
        for p in 2..=80i64 {
            for q in 1..p {
                if num_integer::gcd(p, q) != 1 {
                    continue;
                }
                let lambda = rational(p, q);
                if lambda == rational(2, 1) || lambda <= rational(1, 1) {
                    continue;
                }
                let mu = involute(&lambda).unwrap();
                let e = expand_e(&lambda).into_terms();
                let hj = expand_hj(&lambda).into_terms();
                assert_eq!(involute_e(&e).unwrap(), expand_e(&mu).into_terms());
                assert_eq!(involute_hj(&hj).unwrap(), expand_hj(&mu).into_terms());
                assert_eq!(staircase_dual(&staircase(&hj).unwrap()), expand_hj(&mu).into_terms());
            }
        }
    }
}
