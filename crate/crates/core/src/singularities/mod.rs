//! Invariants of Hirzebruch-Jung singularities, lens spaces, cusp cycles and
//! plane monomial curves, computed from the continued-fraction and polygon
//! machinery.

mod curve;
mod cusp;
mod hj;
mod lens;

pub use curve::{blowup_oracle, resolve_monomial, CurveResolution};
pub use cusp::{cusp_dual, cusp_monodromy, cusp_trace_formula, CuspCycle, Matrix2};
pub use hj::{blowup_types, embdim, embdim_oracle, hj_resolution, BlowupType, HjType};
pub use lens::{lens_oriented_equal, lens_reverse, lens_reversing_equal, LensSpace};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};

/// `1 <= q < p` and `gcd(p, q) = 1`.
pub(crate) fn check_pq(p: &BigInt, q: &BigInt, what: &str) -> Result<()> {
    if !(q >= &BigInt::one() && q < p) {
        return Err(Error::Domain(format!("{what} needs 1 <= q < p, got p={p}, q={q}")));
    }
    if !p.gcd(q).is_one() {
        return Err(Error::Domain(format!("{what} needs gcd(p,q) = 1, got p={p}, q={q}")));
    }
    Ok(())
}
