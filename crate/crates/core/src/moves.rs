//! Local rewrites of front words.
//!
//! Every move replaces a short window of events. Insertion-type moves
//! (`Apply` of `FrontR1` and `Stabilize`) use `site` as the slice where the
//! new events go (they are inserted before event `site`); every other move
//! uses `site` as the index of the first event of the window it matches.
//!
//! Window schemas, with `p` the strand position carried by the instance:
//!
//! | move | simple form | rewritten form |
//! |------|-------------|----------------|
//! | `FrontR1` `Below` | strand `p` | `L(p+1) X(p) R(p+1)` |
//! | `FrontR1` `Above` | strand `p` | `L(p) X(p+1) R(p)` |
//! | `FrontR2` `LeftAbove` | `L(p+1)` | `L(p) X(p+1) X(p)` |
//! | `FrontR2` `LeftBelow` | `L(p)` | `L(p+1) X(p) X(p+1)` |
//! | `FrontR2` `RightAbove` | `R(p+1)` | `X(p) X(p+1) R(p)` |
//! | `FrontR2` `RightBelow` | `R(p)` | `X(p+1) X(p) R(p+1)` |
//! | `FrontR3` | `X(p) X(p+1) X(p)` | `X(p+1) X(p) X(p+1)` |
//! | `Stabilize` `Down` | strand `p` | `L(p+1) R(p)` |
//! | `Stabilize` `Up` | strand `p` | `L(p) R(p+1)` |
//!
//! `Apply` goes from the simple form to the rewritten one, `Undo` back.
//! `Commute` swaps two adjacent events whose strands are disjoint and is its
//! own inverse.

use std::fmt;
use std::ops::Range;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::front::{EventKind, FrontDiagram, FrontEvent, OrientedFront};
use crate::invariants;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum MoveKind {
    Commute,
    /// swallowtail kink
    FrontR1,
    /// strand passing a cusp
    FrontR2,
    /// triple point
    FrontR3,
    Stabilize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Variant {
    None,
    Below,
    Above,
    LeftAbove,
    LeftBelow,
    RightAbove,
    RightBelow,
    Down,
    Up,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sense {
    Apply,
    Undo,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MoveInstance {
    pub kind: MoveKind,
    pub site: usize,
    pub position: usize,
    pub variant: Variant,
    pub sense: Sense,
}

impl MoveInstance {
    /// The instance that reverts this one on the rewritten word.
    pub fn inverse(&self) -> Self {
        let sense = match (self.kind, self.sense) {
            (MoveKind::Commute, s) => s,
            (_, Sense::Apply) => Sense::Undo,
            (_, Sense::Undo) => Sense::Apply,
        };
        Self { sense, ..*self }
    }

    pub fn stabilization(site: usize, position: usize, variant: Variant) -> Self {
        Self {
            kind: MoveKind::Stabilize,
            site,
            position,
            variant,
            sense: Sense::Apply,
        }
    }
}

impl fmt::Display for MoveInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:?}/{:?}/{:?} at {} strand {}",
            self.kind, self.variant, self.sense, self.site, self.position
        )
    }
}

use FrontEvent as E;

/// Up to three events, stored inline.
#[derive(Debug, Clone, Copy)]
struct Window {
    buf: [FrontEvent; 3],
    len: usize,
}

impl Window {
    fn of(events: &[FrontEvent]) -> Self {
        let mut buf = [E::crossing(1); 3];
        buf[..events.len()].copy_from_slice(events);
        Self {
            buf,
            len: events.len(),
        }
    }

    fn as_slice(&self) -> &[FrontEvent] {
        &self.buf[..self.len]
    }
}

/// Simple and rewritten forms of a move at strand `p`; both empty when the
/// variant does not belong to the kind.
fn pattern(kind: MoveKind, variant: Variant, p: usize) -> (Window, Window) {
    let w = Window::of;
    match (kind, variant) {
        (MoveKind::FrontR1, Variant::Below) => (
            w(&[]),
            w(&[E::left(p + 1), E::crossing(p), E::right(p + 1)]),
        ),
        (MoveKind::FrontR1, Variant::Above) => {
            (w(&[]), w(&[E::left(p), E::crossing(p + 1), E::right(p)]))
        }
        (MoveKind::FrontR2, Variant::LeftAbove) => (
            w(&[E::left(p + 1)]),
            w(&[E::left(p), E::crossing(p + 1), E::crossing(p)]),
        ),
        (MoveKind::FrontR2, Variant::LeftBelow) => (
            w(&[E::left(p)]),
            w(&[E::left(p + 1), E::crossing(p), E::crossing(p + 1)]),
        ),
        (MoveKind::FrontR2, Variant::RightAbove) => (
            w(&[E::right(p + 1)]),
            w(&[E::crossing(p), E::crossing(p + 1), E::right(p)]),
        ),
        (MoveKind::FrontR2, Variant::RightBelow) => (
            w(&[E::right(p)]),
            w(&[E::crossing(p + 1), E::crossing(p), E::right(p + 1)]),
        ),
        (MoveKind::FrontR3, _) => (
            w(&[E::crossing(p), E::crossing(p + 1), E::crossing(p)]),
            w(&[E::crossing(p + 1), E::crossing(p), E::crossing(p + 1)]),
        ),
        (MoveKind::Stabilize, Variant::Down) => (w(&[]), w(&[E::left(p + 1), E::right(p)])),
        (MoveKind::Stabilize, Variant::Up) => (w(&[]), w(&[E::left(p), E::right(p + 1)])),
        _ => (w(&[]), w(&[])),
    }
}

/// Footprint of an event on the slice after it, in doubled coordinates:
/// strand `k` sits at `2k`, the gap above strand `k` at `2k - 1`.
fn footprint_after(e: FrontEvent) -> (usize, usize) {
    let i = e.position;
    match e.kind {
        EventKind::RightCusp => (2 * i - 1, 2 * i - 1),
        _ => (2 * i, 2 * i + 2),
    }
}

fn footprint_before(e: FrontEvent) -> (usize, usize) {
    let i = e.position;
    match e.kind {
        EventKind::LeftCusp => (2 * i - 1, 2 * i - 1),
        _ => (2 * i, 2 * i + 2),
    }
}

fn disjoint(a: (usize, usize), b: (usize, usize)) -> bool {
    a.1 < b.0 || b.1 < a.0
}

/// Swaps two adjacent events acting on disjoint strands, shifting positions.
fn commuted(e1: FrontEvent, e2: FrontEvent) -> Option<(FrontEvent, FrontEvent)> {
    let (f1, f2) = (footprint_after(e1), footprint_before(e2));
    if !disjoint(f1, f2) {
        return None;
    }
    let (n2, n1) = if f2.1 < f1.0 {
        // e2 sits above e1
        let shifted = (e1.position as isize + e2.delta()) as usize;
        (
            e2,
            FrontEvent {
                position: shifted,
                ..e1
            },
        )
    } else {
        let shifted = e2.position as isize - e1.delta();
        if shifted < 1 {
            return None;
        }
        (
            FrontEvent {
                position: shifted as usize,
                ..e2
            },
            e1,
        )
    };
    // the swapped pair must be disjoint too, so that commuting is an involution
    disjoint(footprint_after(n2), footprint_before(n1)).then_some((n2, n1))
}

/// Events replaced by `m` and their replacement, if `m` applies to `d`.
fn rewrite(d: &FrontDiagram, m: &MoveInstance) -> Option<(Range<usize>, Window)> {
    let ev = d.events();
    let n = ev.len();
    let p = m.position;
    match (m.kind, m.sense) {
        (MoveKind::Commute, _) => {
            let w = m.site;
            if w + 1 >= n {
                return None;
            }
            let (a, b) = commuted(ev[w], ev[w + 1])?;
            Some((w..w + 2, Window::of(&[a, b])))
        }
        (MoveKind::FrontR1 | MoveKind::Stabilize, Sense::Apply) => {
            let t = m.site;
            if t == 0 || t >= n || p == 0 || p > d.strands_at(t) {
                return None;
            }
            let (_, ins) = pattern(m.kind, m.variant, p);
            if ins.len == 0 {
                return None;
            }
            Some((t..t, ins))
        }
        (_, sense) => {
            if p == 0 {
                return None;
            }
            let (simple, complex) = pattern(m.kind, m.variant, p);
            if complex.len == 0 {
                return None;
            }
            let (from, to) = match sense {
                Sense::Apply => (simple, complex),
                Sense::Undo => (complex, simple),
            };
            let w = m.site;
            if w + from.len > n || ev[w..w + from.len] != *from.as_slice() {
                return None;
            }
            // R2 needs the passing strand to exist next to the cusp
            if m.kind == MoveKind::FrontR2 && sense == Sense::Apply {
                let ok = match m.variant {
                    Variant::LeftBelow => p + 2 <= d.strands_at(w + 1),
                    Variant::RightBelow => p + 2 <= d.strands_at(w),
                    _ => true,
                };
                if !ok {
                    return None;
                }
            }
            Some((w..w + from.len, to))
        }
    }
}

fn splice(d: &FrontDiagram, range: Range<usize>, with: &[FrontEvent]) -> Result<FrontDiagram> {
    let mut events = d.events().to_vec();
    events.splice(range, with.iter().copied());
    FrontDiagram::new(events)
}

pub fn is_applicable(d: &FrontDiagram, m: &MoveInstance) -> bool {
    rewrite(d, m).is_some()
}

/// Every applicable move, ordered by kind, sense, site, position, variant.
pub fn applicable_moves(d: &FrontDiagram) -> Vec<MoveInstance> {
    let mut out = Vec::new();
    for class in ALL_CLASSES {
        push_class(d, class, &mut out);
    }
    out
}

const ALL_CLASSES: [(MoveKind, Sense); 9] = [
    (MoveKind::Commute, Sense::Apply),
    (MoveKind::FrontR1, Sense::Apply),
    (MoveKind::FrontR1, Sense::Undo),
    (MoveKind::FrontR2, Sense::Apply),
    (MoveKind::FrontR2, Sense::Undo),
    (MoveKind::FrontR3, Sense::Apply),
    (MoveKind::FrontR3, Sense::Undo),
    (MoveKind::Stabilize, Sense::Apply),
    (MoveKind::Stabilize, Sense::Undo),
];

fn variants(kind: MoveKind) -> &'static [Variant] {
    match kind {
        MoveKind::Commute | MoveKind::FrontR3 => &[Variant::None],
        MoveKind::FrontR1 => &[Variant::Below, Variant::Above],
        MoveKind::FrontR2 => &[
            Variant::LeftAbove,
            Variant::LeftBelow,
            Variant::RightAbove,
            Variant::RightBelow,
        ],
        MoveKind::Stabilize => &[Variant::Down, Variant::Up],
    }
}

fn push_class(d: &FrontDiagram, (kind, sense): (MoveKind, Sense), out: &mut Vec<MoveInstance>) {
    let n = d.len();
    let ev = d.events();
    let mut push = |site, position, variant| {
        let m = MoveInstance {
            kind,
            site,
            position,
            variant,
            sense,
        };
        if rewrite(d, &m).is_some() {
            out.push(m);
        }
    };
    match (kind, sense) {
        (MoveKind::Commute, _) => {
            for w in 0..n.saturating_sub(1) {
                push(w, 0, Variant::None);
            }
        }
        (MoveKind::FrontR1 | MoveKind::Stabilize, Sense::Apply) => {
            // every strand of every inner slice is a site
            for t in 1..n {
                for p in 1..=d.strands_at(t) {
                    for &variant in variants(kind) {
                        out.push(MoveInstance {
                            kind,
                            site: t,
                            position: p,
                            variant,
                            sense,
                        });
                    }
                }
            }
        }
        _ => {
            // the window's first event pins down p up to the variant offset
            for (w, e) in ev.iter().enumerate() {
                let q = e.position;
                for &v in variants(kind) {
                    for p in [q.saturating_sub(1), q] {
                        if p >= 1 {
                            push(w, p, v);
                        }
                    }
                }
            }
        }
    }
    out.dedup();
}

/// Applies `m`, re-validating the result.
pub fn apply_move(d: &FrontDiagram, m: &MoveInstance) -> Result<FrontDiagram> {
    Ok(apply_move_oriented(&d.orient_default(), m)?.into_diagram())
}

/// Applies `m` and carries the orientation of every component across.
///
/// In debug builds the invariants of the result are checked against the
/// input: unchanged for every move except `Stabilize`, which lowers tb by
/// one (raises it when undone) and shifts rot by one on its component.
pub fn apply_move_oriented(of: &OrientedFront, m: &MoveInstance) -> Result<OrientedFront> {
    apply_move_tracked(of, m).map(|(out, _)| out)
}

/// [`apply_move_oriented`] that also returns where each old component went.
pub fn apply_move_tracked(
    of: &OrientedFront,
    m: &MoveInstance,
) -> Result<(OrientedFront, Vec<usize>)> {
    let d = of.diagram();
    let (range, with) = rewrite(d, m).ok_or_else(|| Error::InapplicableMove(m.to_string()))?;
    let new_len = with.len;
    let next = splice(d, range.clone(), with.as_slice())?;
    let (out, map) = transport(of, next, range, new_len);
    debug_assert!(
        check_postconditions(of, &out, &map, m),
        "invariant postcondition violated by {m}"
    );
    Ok((out, map))
}

/// Orients `next` to agree with `of` outside the rewritten window. Returns
/// the new front and the old-to-new component map.
fn transport(
    of: &OrientedFront,
    next: FrontDiagram,
    range: Range<usize>,
    new_len: usize,
) -> (OrientedFront, Vec<usize>) {
    let old = of.diagram();
    let shift = new_len as isize - range.len() as isize;
    let default = next.orient_default();
    let mut flips: Vec<Option<bool>> = vec![None; default.component_count()];
    let mut map = vec![usize::MAX; of.component_count()];
    let mut missing = flips.len();
    let slices = (1..=range.start).chain(range.end..old.len());
    for k in slices {
        let nk = if k <= range.start {
            k
        } else {
            (k as isize + shift) as usize
        };
        for pos in 1..=old.strands_at(k) {
            let c = default.component_at(nk, pos);
            map[of.component_at(k, pos)] = c;
            if flips[c].is_none() {
                flips[c] = Some(default.direction_at(nk, pos) != of.direction_at(k, pos));
                missing -= 1;
            }
        }
        if missing == 0 && map.iter().all(|&c| c != usize::MAX) {
            break;
        }
    }
    let flips: Vec<bool> = flips.into_iter().map(|f| f.unwrap_or(false)).collect();
    (default.with_flips(&flips), map)
}

fn check_postconditions(
    before: &OrientedFront,
    after: &OrientedFront,
    map: &[usize],
    m: &MoveInstance,
) -> bool {
    let (Ok(a), Ok(b)) = (invariants::report(before), invariants::report(after)) else {
        return false;
    };
    if a.components.len() != b.components.len() || map.contains(&usize::MAX) {
        return false;
    }
    let touched = (m.kind == MoveKind::Stabilize).then(|| before.component_at(m.site, m.position));
    for (j, cj) in a.components.iter().enumerate() {
        let cb = &b.components[map[j]];
        if Some(j) == touched {
            let dtb = if m.sense == Sense::Apply { -1 } else { 1 };
            if cb.tb - cj.tb != dtb || (cb.rot - cj.rot).abs() != 1 {
                return false;
            }
        } else if (cb.tb, cb.rot) != (cj.tb, cj.rot) {
            return false;
        }
        for (k, &l) in a.linking[j].iter().enumerate() {
            if b.linking[map[j]][map[k]] != l {
                return false;
            }
        }
    }
    true
}

/// Result of a randomized move campaign.
#[derive(Debug, Clone)]
pub struct FuzzOutcome {
    pub front: OrientedFront,
    pub applied: usize,
    /// steps where no move of any enabled kind applied
    pub skipped: usize,
    /// stabilizations applied minus stabilizations undone
    pub net_stabilizations: i64,
    /// stabilizations applied or undone
    pub stabilizations_drawn: usize,
    /// input component index to output component index
    pub component_map: Vec<usize>,
}

impl FuzzOutcome {
    /// Compares the invariants of `input` with those of the output, matched
    /// through `component_map`. Linking numbers must agree exactly; so must
    /// every (tb, rot) pair when no stabilization was drawn. Otherwise the
    /// total tb must drop by the net stabilization count, and each
    /// component's rot must move by the parity of its tb change.
    pub fn invariance_holds(&self, input: &OrientedFront) -> Result<bool> {
        let a = invariants::report(input)?;
        let b = invariants::report(&self.front)?;
        let map = &self.component_map;
        for (j, row) in a.linking.iter().enumerate() {
            for (k, &l) in row.iter().enumerate() {
                if b.linking[map[j]][map[k]] != l {
                    return Ok(false);
                }
            }
        }
        let pairs = a.components.iter().map(|c| (c, b.component(map[c.index])));
        if self.stabilizations_drawn == 0 {
            return Ok(pairs
                .into_iter()
                .all(|(x, y)| (x.tb, x.rot) == (y.tb, y.rot)));
        }
        let mut drop = 0;
        for (x, y) in pairs {
            let (dtb, drot) = (x.tb - y.tb, x.rot - y.rot);
            if (dtb - drot) % 2 != 0 {
                return Ok(false);
            }
            drop += dtb;
        }
        Ok(drop == self.net_stabilizations)
    }
}

fn is_insertion(kind: MoveKind, sense: Sense) -> bool {
    matches!(kind, MoveKind::FrontR1 | MoveKind::Stabilize) && sense == Sense::Apply
}

/// The sites of one move class, listed or, for insertion moves, counted.
enum Sites {
    Listed(Vec<MoveInstance>),
    /// every (slice, strand, variant) triple, in enumeration order
    Inserted {
        kind: MoveKind,
        total: usize,
    },
}

impl Sites {
    fn count(&self) -> usize {
        match self {
            Sites::Listed(v) => v.len(),
            Sites::Inserted { total, .. } => *total,
        }
    }

    /// The `idx`-th site, in the order [`applicable_moves`] lists them.
    fn nth(&self, d: &FrontDiagram, mut idx: usize) -> MoveInstance {
        match self {
            Sites::Listed(v) => v[idx],
            &Sites::Inserted { kind, .. } => {
                let vs = variants(kind);
                for t in 1..d.len() {
                    let here = d.strands_at(t) * vs.len();
                    if idx < here {
                        return MoveInstance {
                            kind,
                            site: t,
                            position: idx / vs.len() + 1,
                            variant: vs[idx % vs.len()],
                            sense: Sense::Apply,
                        };
                    }
                    idx -= here;
                }
                unreachable!("site index beyond the count")
            }
        }
    }
}

/// Applies `steps` random moves, seeded.
///
/// Each step first picks a (kind, sense) class uniformly among the classes
/// that have at least one applicable site, then a site uniformly within the
/// class. `Stabilize` is only drawn when `allow_stab` is set.
pub fn fuzz(of: &OrientedFront, steps: usize, seed: u64, allow_stab: bool) -> FuzzOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cur = of.clone();
    let mut outcome = FuzzOutcome {
        front: of.clone(),
        applied: 0,
        skipped: 0,
        net_stabilizations: 0,
        stabilizations_drawn: 0,
        component_map: (0..of.component_count()).collect(),
    };
    for _ in 0..steps {
        let d = cur.diagram();
        let mut classes: Vec<Sites> = Vec::new();
        for class @ (kind, sense) in ALL_CLASSES {
            if kind == MoveKind::Stabilize && !allow_stab {
                continue;
            }
            let sites = if is_insertion(kind, sense) {
                let total =
                    (1..d.len()).map(|t| d.strands_at(t)).sum::<usize>() * variants(kind).len();
                Sites::Inserted { kind, total }
            } else {
                let mut listed = Vec::new();
                push_class(d, class, &mut listed);
                Sites::Listed(listed)
            };
            if sites.count() > 0 {
                classes.push(sites);
            }
        }
        let Some(sites) = classes.choose(&mut rng) else {
            outcome.skipped += 1;
            continue;
        };
        let m = sites.nth(d, rng.gen_range(0..sites.count()));
        let (next, map) = apply_move_tracked(&cur, &m).expect("enumerated move applies");
        cur = next;
        for c in outcome.component_map.iter_mut() {
            *c = map[*c];
        }
        outcome.applied += 1;
        if m.kind == MoveKind::Stabilize {
            outcome.stabilizations_drawn += 1;
            outcome.net_stabilizations += if m.sense == Sense::Apply { 1 } else { -1 };
        }
    }
    outcome.front = cur;
    outcome
}
