//! Fronts from grid diagrams.
//!
//! The grid is turned clockwise by roughly 45 degrees with the linear map
//! `(x, y) -> (u, v) = (x + λy, y - x)`, `λ = (N + 1) / N` for `N` larger
//! than the grid. Horizontal segments become descending lines and vertical
//! ones ascending lines, so the grid's horizontal-over crossings are exactly
//! the front's slope-determined crossings. The slight shear puts every grid
//! point at its own `u`, making the sweep generic. A marker whose two
//! segments both leave towards larger `u` becomes a left cusp, one whose
//! segments both arrive from smaller `u` a right cusp; the remaining
//! markers are smooth bends.

use crate::front::{Direction, FrontDiagram, FrontEvent, OrientedFront};
use crate::grid::GridDiagram;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Segment {
    /// row, traversed O to X
    Horizontal(usize),
    /// column, traversed X to O
    Vertical(usize),
}

enum Kind {
    /// opens `upper` above `lower`
    Open {
        upper: Segment,
        lower: Segment,
    },
    Close {
        upper: Segment,
    },
    Bend {
        from: Segment,
        to: Segment,
    },
    Cross {
        upper: Segment,
    },
}

struct Sweep {
    n: i64,
}

impl Sweep {
    /// `N u` for grid point `(c, r)`.
    fn u(&self, c: usize, r: usize) -> i64 {
        self.n * c as i64 + (self.n + 1) * r as i64
    }

    /// `N (N + 1) v` of `seg` at scaled abscissa `u`.
    fn height(&self, seg: Segment, u: i64) -> i64 {
        let n = self.n;
        match seg {
            Segment::Horizontal(r) => (n + 1) * (r as i64 * (2 * n + 1) - u),
            Segment::Vertical(c) => n * (u - n * c as i64) - n * (n + 1) * c as i64,
        }
    }

    fn point_height(&self, c: usize, r: usize) -> i64 {
        self.n * (self.n + 1) * (r as i64 - c as i64)
    }
}

fn spans(a: usize, b: usize, v: usize) -> bool {
    a.min(b) < v && v < a.max(b)
}

/// Legendrian front of the grid's closure, oriented like the grid.
pub fn legendrianize(g: &GridDiagram) -> OrientedFront {
    let n = g.size();
    let sweep = Sweep { n: n as i64 + 1 };
    let mut events: Vec<(i64, usize, usize, Kind)> = Vec::new();
    for c in 0..n {
        for r in 0..n {
            let (v, h) = (Segment::Vertical(c), Segment::Horizontal(r));
            let kind = if g.x_row(c) == r || g.o_row(c) == r {
                let other_row = if g.x_row(c) == r {
                    g.o_row(c)
                } else {
                    g.x_row(c)
                };
                let other_col = if g.x_col(r) == c {
                    g.o_col(r)
                } else {
                    g.x_col(r)
                };
                match (other_row > r, other_col > c) {
                    (true, true) => Kind::Open { upper: v, lower: h },
                    (false, false) => Kind::Close { upper: h },
                    (true, false) => Kind::Bend { from: h, to: v },
                    (false, true) => Kind::Bend { from: v, to: h },
                }
            } else if spans(g.x_row(c), g.o_row(c), r) && spans(g.o_col(r), g.x_col(r), c) {
                Kind::Cross { upper: h }
            } else {
                continue;
            };
            events.push((sweep.u(c, r), c, r, kind));
        }
    }
    events.sort_by_key(|e| e.0);

    let mut active: Vec<Segment> = Vec::new();
    let mut word = Vec::new();
    let index = |active: &[Segment], s: Segment| {
        active
            .iter()
            .position(|&a| a == s)
            .expect("segment is active")
    };
    for (u, c, r, kind) in &events {
        match *kind {
            Kind::Open { upper, lower } => {
                let h = sweep.point_height(*c, *r);
                let i = active.iter().filter(|&&s| sweep.height(s, *u) > h).count();
                active.splice(i..i, [upper, lower]);
                word.push(FrontEvent::left(i + 1));
            }
            Kind::Close { upper } => {
                let i = index(&active, upper);
                active.drain(i..i + 2);
                word.push(FrontEvent::right(i + 1));
            }
            Kind::Bend { from, to } => {
                let i = index(&active, from);
                active[i] = to;
            }
            Kind::Cross { upper } => {
                let i = index(&active, upper);
                active.swap(i, i + 1);
                word.push(FrontEvent::crossing(i + 1));
            }
        }
    }

    // Replay to anchor each component to the grid orientation.
    let rightward = |s: Segment| match s {
        Segment::Horizontal(r) => g.x_col(r) > g.o_col(r),
        Segment::Vertical(c) => g.o_row(c) > g.x_row(c),
    };
    let mut anchors = Vec::new();
    let mut slice = 0;
    active.clear();
    for (u, c, r, kind) in &events {
        match *kind {
            Kind::Open { upper, lower } => {
                let h = sweep.point_height(*c, *r);
                let i = active.iter().filter(|&&s| sweep.height(s, *u) > h).count();
                active.splice(i..i, [upper, lower]);
                slice += 1;
                let dir = if rightward(upper) {
                    Direction::Rightward
                } else {
                    Direction::Leftward
                };
                anchors.push(((slice, i + 1), dir));
            }
            Kind::Close { upper } => {
                let i = index(&active, upper);
                active.drain(i..i + 2);
                slice += 1;
            }
            Kind::Bend { from, to } => {
                let i = index(&active, from);
                active[i] = to;
            }
            Kind::Cross { upper } => {
                let i = index(&active, upper);
                active.swap(i, i + 1);
                slice += 1;
            }
        }
    }
    let diagram = FrontDiagram::new(word).expect("sweep of a grid is a closed front");
    OrientedFront::with_directions(diagram, anchors)
}
