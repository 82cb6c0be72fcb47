//! Event-word model of closed Legendrian fronts.
//!
//! A front is read left to right as a word of generic events. Strands in a
//! vertical slice are numbered from the top starting at 1. A left cusp at
//! position `i` opens two new strands at `i` and `i + 1`; a right cusp at `i`
//! joins strands `i` and `i + 1`; a crossing at `i` swaps them. Over/under
//! information is never stored: at a crossing the strand descending from
//! upper-left to lower-right is in front.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EventKind {
    LeftCusp,
    RightCusp,
    Crossing,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FrontEvent {
    pub kind: EventKind,
    /// 1-based index of the upper strand involved.
    pub position: usize,
}

impl FrontEvent {
    pub const fn left(position: usize) -> Self {
        Self {
            kind: EventKind::LeftCusp,
            position,
        }
    }

    pub const fn right(position: usize) -> Self {
        Self {
            kind: EventKind::RightCusp,
            position,
        }
    }

    pub const fn crossing(position: usize) -> Self {
        Self {
            kind: EventKind::Crossing,
            position,
        }
    }

    /// Change in strand count caused by the event.
    pub fn delta(&self) -> isize {
        match self.kind {
            EventKind::LeftCusp => 2,
            EventKind::RightCusp => -2,
            EventKind::Crossing => 0,
        }
    }

    fn fits(&self, strands: usize) -> bool {
        let i = self.position;
        match self.kind {
            EventKind::LeftCusp => i >= 1 && i <= strands + 1,
            EventKind::RightCusp | EventKind::Crossing => i >= 1 && i < strands,
        }
    }
}

impl fmt::Display for FrontEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.kind {
            EventKind::LeftCusp => 'L',
            EventKind::RightCusp => 'R',
            EventKind::Crossing => 'X',
        };
        write!(f, "{tag}{}", self.position)
    }
}

/// Horizontal traversal direction of a strand segment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    Rightward,
    Leftward,
}

impl Direction {
    pub fn reversed(self) -> Self {
        match self {
            Direction::Rightward => Direction::Leftward,
            Direction::Leftward => Direction::Rightward,
        }
    }

    /// +1 for rightward, -1 for leftward.
    pub fn sign(self) -> i64 {
        match self {
            Direction::Rightward => 1,
            Direction::Leftward => -1,
        }
    }
}

/// A validated closed front.
///
/// Slice `k` lies between event `k - 1` and event `k`; slices `0` and `len()`
/// are empty. The strand at 1-based position `p` of slice `k` is a *segment*.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FrontDiagram {
    events: Vec<FrontEvent>,
    profile: Vec<usize>,
    offsets: Vec<usize>,
}

/// Checks the positional rules and computes the strand-count profile.
pub fn validate(word: &[FrontEvent]) -> Result<FrontDiagram> {
    FrontDiagram::new(word.to_vec())
}

impl FrontDiagram {
    pub fn new(events: Vec<FrontEvent>) -> Result<Self> {
        if events.is_empty() {
            return Err(Error::EmptyWord);
        }
        let mut profile = Vec::with_capacity(events.len() + 1);
        let mut strands = 0usize;
        profile.push(0);
        for (index, ev) in events.iter().enumerate() {
            if !ev.fits(strands) {
                return Err(Error::PositionOutOfRange {
                    index: index + 1,
                    event: ev.to_string(),
                    strands,
                });
            }
            strands = (strands as isize + ev.delta()) as usize;
            profile.push(strands);
        }
        if strands != 0 {
            return Err(Error::UnbalancedClosure { strands });
        }
        let mut offsets = Vec::with_capacity(profile.len() + 1);
        let mut acc = 0;
        for &s in &profile {
            offsets.push(acc);
            acc += s;
        }
        offsets.push(acc);
        Ok(Self {
            events,
            profile,
            offsets,
        })
    }

    pub fn events(&self) -> &[FrontEvent] {
        &self.events
    }

    pub fn into_events(self) -> Vec<FrontEvent> {
        self.events
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Strand counts s_0 = 0, s_1, ..., s_N = 0.
    pub fn profile(&self) -> &[usize] {
        &self.profile
    }

    pub fn strands_at(&self, slice: usize) -> usize {
        self.profile[slice]
    }

    pub fn max_strands(&self) -> usize {
        self.profile.iter().copied().max().unwrap_or(0)
    }

    pub fn count(&self, kind: EventKind) -> usize {
        self.events.iter().filter(|e| e.kind == kind).count()
    }

    pub fn segment_count(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    /// Segment id of the 0-based position `p` in slice `k`.
    pub(crate) fn seg(&self, k: usize, p: usize) -> usize {
        debug_assert!(p < self.profile[k]);
        self.offsets[k] + p
    }

    /// Where the segment leaves through the right side of its slice.
    fn right_link(&self, k: usize, p: usize) -> Link {
        let ev = self.events[k];
        let i = ev.position - 1;
        match ev.kind {
            EventKind::LeftCusp => Link::Seg((k + 1, if p < i { p } else { p + 2 })),
            EventKind::RightCusp => {
                if p < i {
                    Link::Seg((k + 1, p))
                } else if p == i {
                    Link::Cusp((k, i + 1))
                } else if p == i + 1 {
                    Link::Cusp((k, i))
                } else {
                    Link::Seg((k + 1, p - 2))
                }
            }
            EventKind::Crossing => {
                let q = if p == i {
                    i + 1
                } else if p == i + 1 {
                    i
                } else {
                    p
                };
                Link::Seg((k + 1, q))
            }
        }
    }

    /// Where the segment leaves through the left side of its slice.
    fn left_link(&self, k: usize, p: usize) -> Link {
        let ev = self.events[k - 1];
        let i = ev.position - 1;
        match ev.kind {
            EventKind::LeftCusp => {
                if p < i {
                    Link::Seg((k - 1, p))
                } else if p == i {
                    Link::Cusp((k, i + 1))
                } else if p == i + 1 {
                    Link::Cusp((k, i))
                } else {
                    Link::Seg((k - 1, p - 2))
                }
            }
            EventKind::RightCusp => Link::Seg((k - 1, if p < i { p } else { p + 2 })),
            EventKind::Crossing => {
                let q = if p == i {
                    i + 1
                } else if p == i + 1 {
                    i
                } else {
                    p
                };
                Link::Seg((k - 1, q))
            }
        }
    }

    /// One traversal step from the segment at slice `k`, 0-based position `p`,
    /// moving in `dir`.
    fn step(
        &self,
        (k, p): (usize, usize),
        dir: Direction,
    ) -> ((usize, usize), Direction, Option<Visit>) {
        match dir {
            Direction::Rightward => {
                let ev = self.events[k];
                let i = ev.position - 1;
                let involved = ev.kind != EventKind::LeftCusp && (p == i || p == i + 1);
                match self.right_link(k, p) {
                    Link::Seg(next) => {
                        let visit = involved.then_some(Visit {
                            event: k,
                            role: if p == i { Role::Over } else { Role::Under },
                        });
                        (next, dir, visit)
                    }
                    Link::Cusp(other) => (
                        other,
                        Direction::Leftward,
                        Some(Visit {
                            event: k,
                            role: Role::Cusp,
                        }),
                    ),
                }
            }
            Direction::Leftward => {
                let ev = self.events[k - 1];
                let i = ev.position - 1;
                let involved = ev.kind != EventKind::RightCusp && (p == i || p == i + 1);
                match self.left_link(k, p) {
                    Link::Seg(prev) => {
                        // on the left of a crossing, position i is the descending strand
                        let visit = involved.then(|| Visit {
                            event: k - 1,
                            role: if p == i + 1 { Role::Over } else { Role::Under },
                        });
                        (prev, dir, visit)
                    }
                    Link::Cusp(other) => (
                        other,
                        Direction::Rightward,
                        Some(Visit {
                            event: k - 1,
                            role: Role::Cusp,
                        }),
                    ),
                }
            }
        }
    }

    fn trace(&self) -> Tracing {
        let total = self.segment_count();
        let mut component_of = vec![usize::MAX; total];
        let mut direction = vec![Direction::Rightward; total];
        let mut components = Vec::new();
        for (k, ev) in self.events.iter().enumerate() {
            if ev.kind != EventKind::LeftCusp {
                continue;
            }
            let start = (k + 1, ev.position - 1);
            if component_of[self.seg(start.0, start.1)] != usize::MAX {
                continue;
            }
            let id = components.len();
            let mut visits = Vec::new();
            let (mut at, mut dir) = (start, Direction::Rightward);
            loop {
                let seg = self.seg(at.0, at.1);
                component_of[seg] = id;
                direction[seg] = dir;
                let (next, next_dir, visit) = self.step(at, dir);
                visits.extend(visit);
                at = next;
                dir = next_dir;
                if at == start && dir == Direction::Rightward {
                    break;
                }
            }
            components.push(Component {
                first_event: k,
                visits,
            });
        }
        debug_assert!(component_of.iter().all(|&c| c != usize::MAX));
        Tracing {
            component_of,
            direction,
            components,
        }
    }

    /// Partitions the segments into components ordered by their first event.
    pub fn trace_components(&self) -> Vec<Component> {
        self.trace().components
    }

    pub fn component_count(&self) -> usize {
        self.trace().components.len()
    }

    /// Orientation with every component's upper strand at its first left cusp
    /// running rightward.
    pub fn orient_default(&self) -> OrientedFront {
        OrientedFront::from_tracing(self.clone(), self.trace(), &[])
    }

    /// `flips[k]` reverses component `k` relative to the default; missing
    /// entries count as unset.
    pub fn orient(&self, flips: &[bool]) -> OrientedFront {
        OrientedFront::from_tracing(self.clone(), self.trace(), flips)
    }

    pub fn word(&self) -> String {
        self.events
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for FrontDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word())
    }
}

#[derive(Debug, Clone, Copy)]
enum Link {
    Seg((usize, usize)),
    Cusp((usize, usize)),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Role {
    Cusp,
    Over,
    Under,
}

/// Passage of a component through an event.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Visit {
    pub event: usize,
    pub role: Role,
}

/// A traced component: its first (left cusp) event and the cyclic sequence
/// of events it passes through, in traversal order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub first_event: usize,
    pub visits: Vec<Visit>,
}

struct Tracing {
    component_of: Vec<usize>,
    direction: Vec<Direction>,
    components: Vec<Component>,
}

/// A front with a coherent traversal direction on every component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedFront {
    diagram: FrontDiagram,
    component_of: Vec<usize>,
    direction: Vec<Direction>,
    components: Vec<Component>,
    flips: Vec<bool>,
}

impl OrientedFront {
    fn from_tracing(diagram: FrontDiagram, t: Tracing, flips: &[bool]) -> Self {
        let flips: Vec<bool> = (0..t.components.len())
            .map(|k| flips.get(k).copied().unwrap_or(false))
            .collect();
        let mut direction = t.direction;
        for (seg, dir) in direction.iter_mut().enumerate() {
            if flips[t.component_of[seg]] {
                *dir = dir.reversed();
            }
        }
        let mut components = t.components;
        for (c, flipped) in components.iter_mut().zip(&flips) {
            if *flipped {
                c.visits.reverse();
            }
        }
        Self {
            diagram,
            component_of: t.component_of,
            direction,
            components,
            flips,
        }
    }

    pub fn diagram(&self) -> &FrontDiagram {
        &self.diagram
    }

    pub fn into_diagram(self) -> FrontDiagram {
        self.diagram
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// Orientation bits relative to the default orientation.
    pub fn flips(&self) -> &[bool] {
        &self.flips
    }

    pub fn is_knot(&self) -> bool {
        self.components.len() == 1
    }

    pub fn check_component(&self, k: usize) -> Result<()> {
        if k < self.components.len() {
            Ok(())
        } else {
            Err(Error::UnknownComponent {
                index: k,
                count: self.components.len(),
            })
        }
    }

    /// Component of the strand at 1-based `position` in `slice`.
    pub fn component_at(&self, slice: usize, position: usize) -> usize {
        self.component_of[self.diagram.seg(slice, position - 1)]
    }

    /// Direction of the strand at 1-based `position` in `slice`.
    pub fn direction_at(&self, slice: usize, position: usize) -> Direction {
        self.direction[self.diagram.seg(slice, position - 1)]
    }

    /// Same diagram with component `k` reversed.
    pub fn flipped(&self, k: usize) -> Result<Self> {
        self.check_component(k)?;
        let mut flips = self.flips.clone();
        flips[k] = !flips[k];
        Ok(self.clone().with_flips(&flips))
    }

    /// Same diagram with every component reversed.
    pub fn reversed(&self) -> Self {
        let flips: Vec<bool> = self.flips.iter().map(|f| !f).collect();
        self.clone().with_flips(&flips)
    }

    /// Sets the orientation bits (relative to the default) without
    /// re-tracing; missing entries count as unset.
    pub(crate) fn with_flips(mut self, flips: &[bool]) -> Self {
        let target: Vec<bool> = (0..self.components.len())
            .map(|k| flips.get(k).copied().unwrap_or(false))
            .collect();
        let toggle: Vec<bool> = target
            .iter()
            .zip(&self.flips)
            .map(|(a, b)| a != b)
            .collect();
        if toggle.iter().any(|&t| t) {
            for (dir, &c) in self.direction.iter_mut().zip(&self.component_of) {
                if toggle[c] {
                    *dir = dir.reversed();
                }
            }
            for (comp, &t) in self.components.iter_mut().zip(&toggle) {
                if t {
                    comp.visits.reverse();
                }
            }
        }
        self.flips = target;
        self
    }

    /// Re-orients so that each listed strand has the given direction.
    /// Components without an entry keep the default orientation.
    pub fn with_directions(
        diagram: FrontDiagram,
        anchors: impl IntoIterator<Item = ((usize, usize), Direction)>,
    ) -> Self {
        let default = diagram.orient_default();
        let mut flips = vec![false; default.component_count()];
        for ((slice, pos), dir) in anchors {
            let c = default.component_at(slice, pos);
            flips[c] = default.direction_at(slice, pos) != dir;
        }
        default.with_flips(&flips)
    }

    /// The front of component `k` alone: events touching only `k`, with
    /// positions renumbered among its own strands. Crossings with other
    /// components are dropped.
    pub fn project_component(&self, k: usize) -> Result<FrontDiagram> {
        self.check_component(k)?;
        let d = &self.diagram;
        let mut out = Vec::new();
        for (idx, ev) in d.events().iter().enumerate() {
            let i = ev.position - 1;
            // rank among component-k strands in the slice where the event's
            // strands live
            let (slice, involved) = match ev.kind {
                EventKind::LeftCusp => (idx + 1, [i, i + 1]),
                _ => (idx, [i, i + 1]),
            };
            let a = self.component_of[d.seg(slice, involved[0])];
            let b = self.component_of[d.seg(slice, involved[1])];
            if a != k || b != k {
                continue;
            }
            let rank = (0..i)
                .filter(|&p| self.component_of[d.seg(slice, p)] == k)
                .count();
            out.push(FrontEvent {
                kind: ev.kind,
                position: rank + 1,
            });
        }
        FrontDiagram::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> Vec<FrontEvent> {
        s.split_whitespace()
            .map(|t| {
                let p: usize = t[1..].parse().unwrap();
                match &t[..1] {
                    "L" => FrontEvent::left(p),
                    "R" => FrontEvent::right(p),
                    _ => FrontEvent::crossing(p),
                }
            })
            .collect()
    }

    #[test]
    fn minimal_front_profile() {
        let d = validate(&word("L1 R1")).unwrap();
        assert_eq!(d.profile(), &[0, 2, 0]);
    }

    #[test]
    fn crossing_between_cusp_branches_is_accepted() {
        let d = validate(&word("L1 X1 R1")).unwrap();
        assert_eq!(d.profile(), &[0, 2, 2, 0]);
    }

    #[test]
    fn out_of_range_reports_event_index() {
        assert_eq!(
            validate(&word("L1 R2")),
            Err(Error::PositionOutOfRange {
                index: 2,
                event: "R2".into(),
                strands: 2
            })
        );
        assert!(matches!(
            validate(&word("L1 R3")),
            Err(Error::PositionOutOfRange { index: 2, .. })
        ));
        assert!(matches!(
            validate(&word("X1")),
            Err(Error::PositionOutOfRange { index: 1, .. })
        ));
    }

    #[test]
    fn empty_and_open_words_are_rejected() {
        assert_eq!(validate(&[]), Err(Error::EmptyWord));
        assert_eq!(
            validate(&word("L1 L1 R1")),
            Err(Error::UnbalancedClosure { strands: 2 })
        );
    }

    #[test]
    fn component_counts() {
        assert_eq!(validate(&word("L1 R1")).unwrap().component_count(), 1);
        assert_eq!(validate(&word("L1 L1 R1 R1")).unwrap().component_count(), 2);
        assert_eq!(
            validate(&word("L1 L3 X2 X2 X2 R3 R1"))
                .unwrap()
                .component_count(),
            1
        );
        // a cusp nested inside another, its two branches twisted: still two circles
        assert_eq!(
            validate(&word("L1 L2 X2 X2 X2 R2 R1"))
                .unwrap()
                .component_count(),
            2
        );
        assert_eq!(
            validate(&word("L1 L3 X2 X2 R3 R1"))
                .unwrap()
                .component_count(),
            2
        );
    }

    #[test]
    fn components_sorted_by_first_event() {
        let d = validate(&word("L1 L3 X2 X2 R3 R1 L1 R1")).unwrap();
        let firsts: Vec<_> = d.trace_components().iter().map(|c| c.first_event).collect();
        assert_eq!(firsts, vec![0, 1, 6]);
    }

    #[test]
    fn default_orientation_of_unknot() {
        let o = validate(&word("L1 R1")).unwrap().orient_default();
        assert_eq!(o.direction_at(1, 1), Direction::Rightward);
        assert_eq!(o.direction_at(1, 2), Direction::Leftward);
        let f = o.flipped(0).unwrap();
        assert_eq!(f.direction_at(1, 1), Direction::Leftward);
        assert_eq!(f.direction_at(1, 2), Direction::Rightward);
    }

    #[test]
    fn four_orientations_of_two_circles() {
        let d = validate(&word("L1 L1 R1 R1")).unwrap();
        let mut seen = std::collections::BTreeSet::new();
        for bits in 0..4u8 {
            let o = d.orient(&[bits & 1 != 0, bits & 2 != 0]);
            let dirs: Vec<_> = (1..=4).map(|p| o.direction_at(2, p).sign()).collect();
            seen.insert(dirs);
        }
        assert_eq!(seen.len(), 4);
    }

    #[test]
    fn trefoil_visits_every_crossing_twice() {
        let d = validate(&word("L1 L3 X2 X2 X2 R3 R1")).unwrap();
        let comps = d.trace_components();
        let c = &comps[0];
        assert_eq!(c.visits.len(), 4 + 6);
        for e in 2..5 {
            let roles: Vec<_> = c
                .visits
                .iter()
                .filter(|v| v.event == e)
                .map(|v| v.role)
                .collect();
            assert_eq!(roles.len(), 2);
            assert!(roles.contains(&Role::Over) && roles.contains(&Role::Under));
        }
    }

    #[test]
    fn segments_are_numbered_densely() {
        let d = validate(&word("L1 L3 X2 X2 R3 R1 L1 R1")).unwrap();
        let mut seen = vec![false; d.segment_count()];
        for k in 0..=d.len() {
            for p in 0..d.strands_at(k) {
                assert!(!std::mem::replace(&mut seen[d.seg(k, p)], true));
            }
        }
        assert!(seen.iter().all(|&s| s));
    }

    #[test]
    fn projection_drops_other_components() {
        let d = validate(&word("L1 L3 X2 X2 R3 R1")).unwrap();
        let o = d.orient_default();
        assert_eq!(o.project_component(0).unwrap().word(), "L1 R1");
        assert_eq!(o.project_component(1).unwrap().word(), "L1 R1");
    }
}
