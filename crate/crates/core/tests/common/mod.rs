//! Helpers shared by the integration tests, including oracles that do not go
//! through the library's own algorithms.
#![allow(dead_code)]

use std::collections::HashMap;

use lattice_cf::singularities::CuspCycle;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Reduced pairs `(p, q)` with `1 <= q < p <= max_p`.
pub fn reduced_pairs(max_p: i64) -> impl Iterator<Item = (i64, i64)> {
    (2..=max_p).flat_map(|p| (1..p).filter(move |q| p.gcd(q) == 1).map(move |q| (p, q)))
}

/// `(P + √D)/Q` with `Q | D - P²` and `D` not a square.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Quadratic {
    p: BigInt,
    q: BigInt,
}

struct Field {
    d: BigInt,
    root: BigInt,
}

impl Field {
    fn new(d: BigInt) -> Self {
        let root = d.sqrt();
        assert!(&root * &root != d, "{d} is a square");
        Self { d, root }
    }

    fn floor(&self, x: &Quadratic) -> BigInt {
        // P + √D lies strictly between P + root and P + root + 1.
        if x.q.is_positive() {
            (&x.p + &self.root).div_floor(&x.q)
        } else {
            (&x.p + &self.root + 1u32).div_floor(&x.q)
        }
    }

    /// `1/(x - k)` for an integer `k`.
    fn invert_shifted(&self, x: &Quadratic, k: &BigInt) -> Quadratic {
        let p1 = &x.p - k * &x.q;
        let num = &self.d - &p1 * &p1;
        assert!(num.is_multiple_of(&x.q));
        Quadratic { p: -p1, q: num / &x.q }
    }

    /// One HJ step: `α = ⌈x⌉` and `1/(α - x)`.
    fn hj_step(&self, x: &Quadratic) -> (BigInt, Quadratic) {
        let alpha = self.floor(x) + 1;
        // 1/(α - x) = -1/(x - α), and -(P + √D)/Q = (P + √D)/(-Q).
        let y = self.invert_shifted(x, &alpha);
        (alpha, Quadratic { p: y.p, q: -y.q })
    }
}

/// Takes the expanding fixed point `λ > 1` of the product of
/// `[[α,-1],[1,0]]` over the cycle (so `λ = [α_1, α_2, ...]^-` repeating the
/// cycle), passes to `λ/(λ-1)` and reads off the period of its HJ expansion.
pub fn hyperbolic_supplementary_period(c: &CuspCycle) -> CuspCycle {
    let mut m = [[BigInt::one(), BigInt::zero()], [BigInt::zero(), BigInt::one()]];
    for a in c.weights() {
        let f = [[a.clone(), -BigInt::one()], [BigInt::one(), BigInt::zero()]];
        let e = |i: usize, j: usize| &m[i][0] * &f[0][j] + &m[i][1] * &f[1][j];
        m = [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]];
    }
    let [[a, b], [cc, d]] = m;
    // c·x² + (d - a)·x - b = 0.
    let diff = &a - &d;
    let field = Field::new(&diff * &diff + 4 * &b * &cc);
    let lambda = Quadratic { p: diff, q: 2 * &cc };
    assert!(field.floor(&lambda) >= BigInt::one());

    // λ/(λ-1) = 1 + 1/(λ-1).
    let y = field.invert_shifted(&lambda, &BigInt::one());
    let mut x = Quadratic { p: &y.p + &y.q, q: y.q };

    let mut seen: HashMap<Quadratic, usize> = HashMap::new();
    let mut terms = Vec::new();
    for step in 0..100_000 {
        if let Some(&start) = seen.get(&x) {
            return CuspCycle::new(terms[start..].to_vec()).expect("periodic part is a valid cycle");
        }
        seen.insert(x.clone(), step);
        let (alpha, next) = field.hj_step(&x);
        terms.push(alpha);
        x = next;
    }
    panic!("no period found for {c}");
}

/// Compares `actual` with `tests/golden/<name>`. Set `UPDATE_GOLDEN=1` to
/// rewrite the file instead.
pub fn golden(name: &str, actual: &str) {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("reading {}: {e}", path.display()));
    assert_eq!(actual, expected, "output differs from {}", path.display());
}
