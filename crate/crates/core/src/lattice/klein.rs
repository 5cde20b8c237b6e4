//! Klein's picture of the E expansion: the hull edges of the lattice points
//! on either side of the line of slope `λ = p/q` in the first quadrant.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use super::{cone_normal_form, integral_length, polygon, standard_from_nf, LatticeVector};
use crate::error::{Error, Result};

/// Vertices of `P(cone(u_minus, u_plus))` in the original coordinates, from
/// the primitive vector on `u_minus` to the one on `u_plus`.
fn hull_vertices(u_minus: &LatticeVector, u_plus: &LatticeVector) -> Result<Vec<LatticeVector>> {
    let (nf, to_nf) = cone_normal_form(u_minus, u_plus)?;
    let back = to_nf.inverse();
    if nf.is_regular() {
        return Ok(vec![back.apply(&LatticeVector::new(1, 0)), back.apply(&nf.u_plus())]);
    }
    let poly = polygon(&nf)?;
    let from_standard = back.compose(&standard_from_nf().inverse());
    Ok(poly.vertices().into_iter().map(|v| from_standard.apply(v)).collect())
}

/// E partial quotients of `p/q` read off as integral lengths of hull edges,
/// alternating between `σ_x = cone((1,0),(q,p))` and `σ_y = cone((0,1),(q,p))`
/// and starting with the edge from `(1,0)` to `(1,a_1)`.
pub fn klein_quotients(p: &BigInt, q: &BigInt) -> Result<Vec<BigInt>> {
    if !q.is_positive() || q >= p || !p.gcd(q).is_one() {
        return Err(Error::Domain(format!("need 1 <= q < p coprime, got p={p}, q={q}")));
    }
    let end = LatticeVector::new(q.clone(), p.clone());
    let x_side = hull_vertices(&LatticeVector::new(1, 0), &end)?;
    let y_side = hull_vertices(&LatticeVector::new(0, 1), &end)?;
    let mut edges = [x_side.windows(2), y_side.windows(2)];
    let mut out = Vec::new();
    for turn in 0.. {
        let edge = edges[turn % 2]
            .next()
            .ok_or_else(|| Error::Domain("hull edges ran out before reaching (q,p)".into()))?;
        out.push(integral_length(&edge[0], &edge[1])?);
        if edge[1] == end {
            break;
        }
    }
    Ok(out)
}
