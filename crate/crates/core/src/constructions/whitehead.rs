//! Positive Whitehead doubles.
//!
//! The 0-framed push-off is cut on its top pair and reconnected through a
//! clasp `L2 X1 X3 R2`: the right cusp joins the incoming knot and companion
//! strands, so the companion is traversed backwards, and the new left cusp
//! hooks through them, giving two crossings that are positive for the
//! anti-parallel orientation. Relative to the two-component push-off this
//! adds two to the writhe and one right cusp, so
//! `tb(Wh(K)) = tb(K) + tb(K_0) + 1`.

use crate::error::{Error, Result};
use crate::front::{FrontEvent, OrientedFront};

use super::pushoff::push_off_with;

use FrontEvent as E;

pub(crate) fn clasp() -> [FrontEvent; 4] {
    [E::left(2), E::crossing(1), E::crossing(3), E::right(2)]
}

/// One positive Whitehead double.
pub fn whitehead_double_once(of: &OrientedFront) -> Result<OrientedFront> {
    let p = push_off_with(of, 0, &clasp())?;
    let out = p.front.into_diagram().orient_default();
    if !out.is_knot() {
        return Err(Error::Internal(format!(
            "clasp left {} components",
            out.component_count()
        )));
    }
    Ok(out)
}

/// `n`-fold iterated positive Whitehead double.
pub fn whitehead_double(of: &OrientedFront, n: usize) -> Result<OrientedFront> {
    if !of.is_knot() {
        return Err(Error::NotAKnot(of.component_count()));
    }
    let mut cur = of.clone();
    for _ in 0..n {
        cur = whitehead_double_once(&cur)?;
    }
    Ok(cur)
}
