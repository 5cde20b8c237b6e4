//! Embedded resolution of the plane curve `x^p = y^q`, read off the zigzag
//! diagram of `p/(p-q)`, and a blow-up simulator to check it against.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::check_pq;
use crate::cf::{run_length, Rational};
use crate::error::{Error, Result};
use crate::graphs::WeightedDualGraph;
use crate::zigzag;

/// Dual graph of the total transform: exceptional curves labeled `E1..EN` in
/// blow-up order, and one arrow for the strict transform.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CurveResolution {
    graph: WeightedDualGraph,
}

impl CurveResolution {
    /// Checks: one arrow, on the unique vertex of weight -1; labels are
    /// exactly `E1..EN`.
    pub fn new(graph: WeightedDualGraph) -> Result<Self> {
        let bad = |msg: &str| Err(Error::Domain(format!("not a curve resolution: {msg}")));
        let graph = graph.normalized();
        if graph.arrows().len() != 1 {
            return bad("expected exactly one arrow");
        }
        let minus_one = -BigInt::one();
        let ones: Vec<usize> = (0..graph.len()).filter(|&v| graph.vertices()[v].weight == minus_one).collect();
        if ones != graph.arrows() {
            return bad("the arrow must sit on the only vertex of weight -1");
        }
        let mut labels: Vec<usize> = Vec::with_capacity(graph.len());
        for v in graph.vertices() {
            match v.label.as_deref().and_then(|l| l.strip_prefix('E')).and_then(|k| k.parse().ok()) {
                Some(k) => labels.push(k),
                None => return bad("every vertex needs a label E<k>"),
            }
        }
        labels.sort_unstable();
        if labels != (1..=graph.len()).collect::<Vec<_>>() {
            return bad("labels must be E1..EN");
        }
        Ok(Self { graph })
    }

    pub fn graph(&self) -> &WeightedDualGraph {
        &self.graph
    }

    pub fn into_graph(self) -> WeightedDualGraph {
        self.graph
    }

    /// The exceptional divisor alone.
    pub fn exceptional_part(&self) -> WeightedDualGraph {
        self.graph.without_arrows()
    }

    pub fn vertex_of(&self, label: &str) -> Option<usize> {
        self.graph.find_label(label)
    }
}

fn check_curve(p: &BigInt, q: &BigInt) -> Result<()> {
    check_pq(p, q, "a singular monomial curve")?;
    if q.is_one() {
        return Err(Error::Domain("q = 1 gives a smooth curve; need 2 <= q < p".into()));
    }
    Ok(())
}

fn label(k: usize) -> Option<String> {
    Some(format!("E{k}"))
}

/// A point of one of the two curves of the diagram, before negation.
struct Point {
    weight: BigInt,
}

/// `(l-1)` points of weight 2 followed by the endpoint.
fn segment(length: &BigInt, end_weight: BigInt) -> Result<Vec<Point>> {
    let inner = run_length(&(length - 1))?;
    let mut out: Vec<Point> = (0..inner).map(|_| Point { weight: BigInt::from(2) }).collect();
    out.push(Point { weight: end_weight });
    Ok(out)
}

/// The graph of the minimal embedded resolution of `x^p = y^q`, from
/// `ZZ(p/(p-q))`.
///
/// Right curve points after `A_-` and left curve points after `V_1'` are kept,
/// with weight-2 points inserted along every edge and `A_+` given weight 1.
/// Weights are negated. Labels go right `(A_-, V_1]`, left `(V_1', V_2']`,
/// right `(V_1, V_2]`, and so on, ending at `A_+`, which carries the arrow.
pub fn resolve_monomial(p: &BigInt, q: &BigInt) -> Result<CurveResolution> {
    check_curve(p, q)?;
    let d = zigzag::build(&Rational::new(p.clone(), p - q))?;
    let s = d.s();

    // right[j] = points of (V_j, V_{j+1}], with V_{s+1} = A_+.
    let right: Vec<Vec<Point>> = (0..=s)
        .map(|j| {
            let end = if j < s { d.right_weights[j].clone() } else { BigInt::one() };
            segment(&d.right_edges[j], end)
        })
        .collect::<Result<_>>()?;
    // left[j-1] = points of (V_j', V_{j+1}'] for j = 1..s.
    let left: Vec<Vec<Point>> = (1..=s)
        .map(|j| segment(&d.left_edges[j], d.left_weights[j].clone()))
        .collect::<Result<_>>()?;

    let mut g = WeightedDualGraph::new();
    let mut right_ids: Vec<usize> = Vec::new();
    let mut left_ids: Vec<usize> = Vec::new();
    let add = |g: &mut WeightedDualGraph, pts: &[Point], ids: &mut Vec<usize>| -> Result<()> {
        for pt in pts {
            let k = g.len() + 1;
            ids.push(g.add_vertex(-&pt.weight, 0, label(k))?);
        }
        Ok(())
    };
    for j in 0..=s {
        add(&mut g, &right[j], &mut right_ids)?;
        if j < s {
            add(&mut g, &left[j], &mut left_ids)?;
        }
    }
    let apex = *right_ids.last().expect("A_+ is always present");
    for w in right_ids.windows(2) {
        g.add_edge(w[0], w[1])?;
    }
    left_ids.push(apex);
    for w in left_ids.windows(2) {
        g.add_edge(w[0], w[1])?;
    }
    g.add_arrow(apex)?;
    CurveResolution::new(g)
}

/// The curve or line through the current infinitely near point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Line {
    /// A coordinate line that is not part of the total transform.
    Axis,
    Exceptional(usize),
}

/// Blows up the point carried by the strict transform until the total
/// transform has normal crossings.
///
/// In local coordinates `(u,v)` the strict transform is `(t^a, t^b)`, starting
/// from `(q,p)`. Blowing up in the chart where the lower exponent survives
/// gives `(a, b-a)` or `(a-b, b)`; the new exceptional curve replaces the
/// coordinate line whose exponent dropped to the other side.
pub fn blowup_oracle(p: &BigInt, q: &BigInt) -> Result<CurveResolution> {
    check_curve(p, q)?;
    let mut a = q.clone();
    let mut b = p.clone();
    // (u = 0, v = 0) through the current point.
    let mut lines = (Line::Axis, Line::Axis);
    let mut weights: Vec<BigInt> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    // The total number of blow-ups is the sum of the Euclid quotients of p/q.
    let budget = run_length(&euclid_sum(p, q))?;

    let arrow = loop {
        if weights.len() >= budget {
            return Err(Error::Domain(format!("blow-up simulation for {p}/{q} did not terminate")));
        }
        let e = weights.len();
        weights.push(-BigInt::one());
        let through: Vec<usize> = [lines.0, lines.1]
            .into_iter()
            .filter_map(|l| match l {
                Line::Exceptional(k) => Some(k),
                Line::Axis => None,
            })
            .collect();
        for &k in &through {
            weights[k] -= 1;
            edges.push((k, e));
        }
        if let [x, y] = through[..] {
            let pos = edges
                .iter()
                .position(|&(i, j)| (i, j) == (x.min(y), x.max(y)))
                .expect("two exceptional curves through a point meet there");
            edges.remove(pos);
        }

        if a == b {
            // Smooth and transverse to both lines: after this blow-up it
            // meets only the new curve, transversally.
            debug_assert!(a.is_one());
            break e;
        }
        if a < b {
            b -= &a;
            lines = (Line::Exceptional(e), lines.1);
        } else {
            a -= &b;
            lines = (lines.0, Line::Exceptional(e));
        }
        if let Some(k) = normal_crossing_at(&a, &b, lines) {
            break k;
        }
    };

    let mut g = WeightedDualGraph::new();
    for (k, w) in weights.into_iter().enumerate() {
        g.add_vertex(w, 0, label(k + 1))?;
    }
    for (i, j) in edges {
        g.add_edge(i, j)?;
    }
    g.add_arrow(arrow)?;
    CurveResolution::new(g)
}

/// If the strict transform `(t^a, t^b)` is smooth, meets exactly one
/// exceptional curve here, and crosses it transversally, that curve.
fn normal_crossing_at(a: &BigInt, b: &BigInt, lines: (Line, Line)) -> Option<usize> {
    match lines {
        (Line::Exceptional(k), Line::Axis) if a.is_one() => Some(k),
        (Line::Axis, Line::Exceptional(k)) if b.is_one() => Some(k),
        _ => None,
    }
}

fn euclid_sum(p: &BigInt, q: &BigInt) -> BigInt {
    let (mut x, mut y) = (p.clone(), q.clone());
    let mut total = BigInt::zero();
    while y.is_positive() {
        let (quo, rem) = x.div_mod_floor(&y);
        total += quo;
        x = std::mem::replace(&mut y, rem);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::is_contractible;

    fn both(p: i64, q: i64) -> (CurveResolution, CurveResolution) {
        let (p, q) = (BigInt::from(p), BigInt::from(q));
        (resolve_monomial(&p, &q).unwrap(), blowup_oracle(&p, &q).unwrap())
    }

    fn summary(c: &CurveResolution) -> (Vec<i64>, Vec<(usize, usize)>, Vec<usize>) {
        let g = c.graph();
        let w = g.vertices().iter().map(|v| i64::try_from(&v.weight).unwrap()).collect();
        (w, g.edges().to_vec(), g.arrows().to_vec())
    }

    #[test]
    fn ordinary_cusp() {
        let (z, o) = both(3, 2);
        assert_eq!(summary(&z), (vec![-3, -2, -1], vec![(0, 2), (1, 2)], vec![2]));
        assert_eq!(z, o);
    }

    #[test]
    fn five_two() {
        let (z, o) = both(5, 2);
        assert_eq!(summary(&z), (vec![-2, -3, -2, -1], vec![(0, 1), (1, 3), (2, 3)], vec![3]));
        assert_eq!(z, o);
    }

    #[test]
    fn eleven_four() {
        let (z, o) = both(11, 4);
        assert_eq!(z.graph().len(), 6);
        assert_eq!(z.vertex_of("E6"), Some(z.graph().arrows()[0]));
        assert_eq!(z, o);
        assert!(is_contractible(&z.exceptional_part()));
    }

    #[test]
    fn rejects_smooth_and_invalid() {
        let r = |p: i64, q: i64| resolve_monomial(&BigInt::from(p), &BigInt::from(q));
        assert!(r(5, 1).is_err());
        assert!(r(6, 4).is_err());
        assert!(r(4, 5).is_err());
        assert!(blowup_oracle(&BigInt::from(7), &BigInt::from(1)).is_err());
    }

    #[test]
    fn small_sweep() {
        for p in 3..=25i64 {
            for q in 2..p {
                if p.gcd(&q) == 1 {
                    let (z, o) = both(p, q);
                    assert_eq!(z, o, "{p}/{q}");
                    assert_eq!(BigInt::from(z.graph().len()), euclid_sum(&p.into(), &q.into()));
                }
            }
        }
    }
}
