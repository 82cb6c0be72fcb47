//! Framed Legendrian push-offs.
//!
//! The doubled word is the vertical translate of the front: every strand
//! `p` becomes the pair `2p - 1` (the knot) above `2p` (the companion).
//!
//! | original | doubled |
//! |----------|---------|
//! | `L(i)` | `L(2i-1) L(2i+1) X(2i)` |
//! | `R(i)` | `X(2i) R(2i+1) R(2i-1)` |
//! | `X(i)` | `X(2i) X(2i-1) X(2i+1) X(2i)` |
//!
//! Each crossing block contributes the original sign twice to the
//! inter-component count and each cusp contributes one negative crossing, so
//! the plain double links the two copies `bb - c = tb` times. The framing is
//! then corrected on the top pair just before the doubled final cusp: a
//! positive full twist `X1 X1` raises the linking number by one at no cost,
//! and a left full twist `L1 X2 R3 L3 X2 R1`, two companion zigzags through
//! the knot strand, lowers it by one at the price of two stabilizations.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::front::{EventKind, FrontDiagram, FrontEvent, OrientedFront};
use crate::invariants;

use FrontEvent as E;

/// Which branch of the framing argument a push-off falls under, with
/// `bb` and `tb` measured relative to the target framing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PushOffCase {
    /// `bb - r <= 0`: only positive twists are needed.
    BlackboardNonPositive,
    /// `tb - r <= 0 < bb - r`: the negative half twists fit at the cusps.
    AbsorbedAtCusps,
    /// `tb - r > 0`: leftover negative twists cost one stabilization each.
    LeftoverTwists,
}

#[derive(Debug, Clone)]
pub struct PushOffResult {
    pub front: OrientedFront,
    pub knot_index: usize,
    pub companion_index: usize,
    pub framing: i64,
    /// left full twists realized by companion zigzag pairs, `max(0, tb - r)`
    pub stab_count: usize,
    /// positive full twists, `max(0, r - tb)`
    pub positive_twists: usize,
    pub case: PushOffCase,
}

/// Doubled word with `extra` spliced in before the block of the final
/// event. Returns the events and the slice right after the first block.
pub(crate) fn doubled_word(d: &FrontDiagram, extra: &[FrontEvent]) -> (Vec<FrontEvent>, usize) {
    let events = d.events();
    let mut out = Vec::with_capacity(4 * events.len() + extra.len());
    let mut first_slice = 0;
    for (idx, ev) in events.iter().enumerate() {
        if idx + 1 == events.len() {
            out.extend_from_slice(extra);
        }
        let i = ev.position;
        match ev.kind {
            EventKind::LeftCusp => {
                out.extend([E::left(2 * i - 1), E::left(2 * i + 1), E::crossing(2 * i)])
            }
            EventKind::RightCusp => {
                out.extend([E::crossing(2 * i), E::right(2 * i + 1), E::right(2 * i - 1)])
            }
            EventKind::Crossing => out.extend([
                E::crossing(2 * i),
                E::crossing(2 * i - 1),
                E::crossing(2 * i + 1),
                E::crossing(2 * i),
            ]),
        }
        if idx == 0 {
            first_slice = out.len();
        }
    }
    (out, first_slice)
}

pub(crate) fn positive_full_twist() -> [FrontEvent; 2] {
    [E::crossing(1), E::crossing(1)]
}

pub(crate) fn left_full_twist() -> [FrontEvent; 6] {
    [
        E::left(1),
        E::crossing(2),
        E::right(3),
        E::left(3),
        E::crossing(2),
        E::right(1),
    ]
}

/// The framing-`r` push-off of a knot: a two-component front with
/// `lk(K, K_r) = r` and `tb(K_r) - r = -|tb(K) - r|`.
pub fn push_off(of: &OrientedFront, r: i64) -> Result<PushOffResult> {
    push_off_with(of, r, &[])
}

/// Push-off with `tail` inserted on the top pair after the framing twists.
pub(crate) fn push_off_with(
    of: &OrientedFront,
    r: i64,
    tail: &[FrontEvent],
) -> Result<PushOffResult> {
    if !of.is_knot() {
        return Err(Error::NotAKnot(of.component_count()));
    }
    let inv = invariants::report(of)?;
    let k = inv.component(0);
    let (bb, tb) = (k.bb - r, k.tb - r);
    let case = if bb <= 0 {
        PushOffCase::BlackboardNonPositive
    } else if tb <= 0 {
        PushOffCase::AbsorbedAtCusps
    } else {
        PushOffCase::LeftoverTwists
    };
    let positive_twists = (-tb).max(0) as usize;
    let stab_count = tb.max(0) as usize;

    let mut extra = Vec::with_capacity(2 * positive_twists + 6 * stab_count + tail.len());
    for _ in 0..positive_twists {
        extra.extend(positive_full_twist());
    }
    for _ in 0..stab_count {
        extra.extend(left_full_twist());
    }
    extra.extend_from_slice(tail);

    let (word, slice) = doubled_word(of.diagram(), &extra);
    let diagram = FrontDiagram::new(word)?;
    let dir = of.direction_at(1, 1);
    let front = OrientedFront::with_directions(diagram, [((slice, 1), dir), ((slice, 2), dir)]);
    let knot_index = front.component_at(slice, 1);
    let companion_index = front.component_at(slice, 2);
    Ok(PushOffResult {
        front,
        knot_index,
        companion_index,
        framing: r,
        stab_count,
        positive_twists,
        case,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{linking, tb};
    use crate::io::parse_front;

    fn knot(s: &str) -> OrientedFront {
        parse_front(s).unwrap().orient_default()
    }

    fn check(of: &OrientedFront, r: i64) -> PushOffResult {
        let p = push_off(of, r).unwrap();
        let t = tb(of, 0).unwrap();
        let f = &p.front;
        assert_eq!(f.component_count(), 2);
        assert_eq!(linking(f, p.knot_index, p.companion_index).unwrap(), r);
        assert_eq!(tb(f, p.companion_index).unwrap() - r, -(t - r).abs());
        assert_eq!(tb(f, p.knot_index).unwrap(), t);
        p
    }

    #[test]
    fn plain_double_links_tb_times() {
        for w in ["L1 R1", "L1 L3 X2 X2 X2 R3 R1", "L1 X1 R1"] {
            let of = knot(w);
            let (word, _) = doubled_word(of.diagram(), &[]);
            let d = FrontDiagram::new(word).unwrap().orient_default();
            assert_eq!(linking(&d, 0, 1).unwrap(), tb(&of, 0).unwrap(), "{w}");
        }
    }

    #[test]
    fn unknot_zero_framing() {
        let p = check(&knot("L1 R1"), 0);
        assert_eq!(p.case, PushOffCase::BlackboardNonPositive);
        assert_eq!(p.stab_count, 0);
        assert_eq!(p.positive_twists, 1);
    }

    #[test]
    fn trefoil_framings() {
        let of = knot("L1 L3 X2 X2 X2 R3 R1");
        let p = check(&of, 0);
        assert_eq!(p.case, PushOffCase::LeftoverTwists);
        assert_eq!(p.stab_count, 1);
        assert_eq!(tb(&p.front, p.companion_index).unwrap(), -1);
        let p = check(&of, 1);
        assert_eq!(p.stab_count, 0);
        assert_eq!(p.case, PushOffCase::AbsorbedAtCusps);
        for r in -3..=3 {
            check(&of, r);
        }
    }

    #[test]
    fn knot_strand_projects_to_original() {
        let of = knot("L1 L3 X2 X2 X2 R3 R1");
        let p = push_off(&of, -2).unwrap();
        assert_eq!(
            p.front.project_component(p.knot_index).unwrap(),
            *of.diagram()
        );
    }

    #[test]
    fn reversed_input_keeps_framing() {
        let of = knot("L1 L3 X2 X2 X2 R3 R1").reversed();
        check(&of, 0);
        check(&of, 2);
    }

    #[test]
    fn links_are_rejected() {
        assert_eq!(
            push_off(&knot("L1 L1 R1 R1"), 0).unwrap_err(),
            Error::NotAKnot(2)
        );
    }
}
