//! Export of an oriented front to an ordinary knot-diagram code.
//!
//! Every crossing gets an explicit over/under assignment and sign, a PD
//! quadruple and a place in each component's Gauss sequence. PD quadruples
//! follow the usual convention: start at the incoming under-edge and go
//! counterclockwise. Edge labels are assigned per component in traversal
//! order: the edge leaving the `t`-th crossing passage of a component with
//! base label `b` is `b + t`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::front::{Direction, EventKind, OrientedFront, Role};

/// One strand through a crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrandRef {
    pub component: usize,
    /// index of this passage in the component's Gauss sequence
    pub passage: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingRecord {
    /// index of the crossing event in the front word
    pub event: usize,
    pub over: StrandRef,
    pub under: StrandRef,
    pub sign: i8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaussEntry {
    pub crossing: usize,
    pub over: bool,
}

/// Planar diagram code with orientation data.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct GenericCode {
    pub crossings: Vec<CrossingRecord>,
    /// Per component, crossing passages in traversal order. Components
    /// without crossings have an empty sequence.
    pub gauss: Vec<Vec<GaussEntry>>,
    /// Per crossing: [incoming under, next ccw, outgoing under, next ccw].
    pub pd: Vec<[usize; 4]>,
}

impl GenericCode {
    pub fn crossing_count(&self) -> usize {
        self.pd.len()
    }

    pub fn component_count(&self) -> usize {
        self.gauss.len()
    }

    /// Components with no crossing passages.
    pub fn free_loops(&self) -> usize {
        self.gauss.iter().filter(|g| g.is_empty()).count()
    }

    /// Label of the first edge of each component.
    pub fn edge_bases(&self) -> Vec<usize> {
        let mut bases = Vec::with_capacity(self.gauss.len());
        let mut acc = 0;
        for g in &self.gauss {
            bases.push(acc);
            acc += g.len();
        }
        bases
    }
}

impl fmt::Display for GenericCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let xs: Vec<String> = self
            .pd
            .iter()
            .map(|[a, b, c, d]| format!("X[{a},{b},{c},{d}]"))
            .collect();
        write!(f, "PD[{}]", xs.join(", "))
    }
}

/// Exports the front with over-strand = the strand descending left to right
/// and sign = product of the two strands' horizontal directions.
pub fn to_generic_code(of: &OrientedFront) -> GenericCode {
    let d = of.diagram();
    let mut crossing_index = vec![usize::MAX; d.len()];
    let mut next = 0;
    for (e, ev) in d.events().iter().enumerate() {
        if ev.kind == EventKind::Crossing {
            crossing_index[e] = next;
            next += 1;
        }
    }
    let n = next;

    let mut gauss = Vec::with_capacity(of.component_count());
    // (component, passage) of the over and under passages per crossing
    let mut over = vec![None; n];
    let mut under = vec![None; n];
    for (ci, comp) in of.components().iter().enumerate() {
        let mut seq = Vec::new();
        for v in &comp.visits {
            let is_over = match v.role {
                Role::Cusp => continue,
                Role::Over => true,
                Role::Under => false,
            };
            let x = crossing_index[v.event];
            let r = StrandRef {
                component: ci,
                passage: seq.len(),
            };
            if is_over {
                over[x] = Some(r);
            } else {
                under[x] = Some(r);
            }
            seq.push(GaussEntry {
                crossing: x,
                over: is_over,
            });
        }
        gauss.push(seq);
    }

    let mut bases = Vec::with_capacity(gauss.len());
    let mut acc = 0;
    for g in &gauss {
        bases.push(acc);
        acc += g.len();
    }
    let edge_in = |r: StrandRef| {
        let m = gauss[r.component].len();
        bases[r.component] + (r.passage + m - 1) % m
    };
    let edge_out = |r: StrandRef| bases[r.component] + r.passage;

    let mut crossings = Vec::with_capacity(n);
    let mut pd = Vec::with_capacity(n);
    for (e, ev) in d.events().iter().enumerate() {
        if ev.kind != EventKind::Crossing {
            continue;
        }
        let x = crossing_index[e];
        let (o, u) = (
            over[x].expect("over passage"),
            under[x].expect("under passage"),
        );
        let i = ev.position;
        let d_over = of.direction_at(e, i);
        let d_under = of.direction_at(e, i + 1);
        let sign = (d_over.sign() * d_under.sign()) as i8;
        crossings.push(CrossingRecord {
            event: e,
            over: o,
            under: u,
            sign,
        });

        // Edge at each corner of the crossing. The over strand joins
        // upper-left and lower-right, the under strand lower-left and
        // upper-right.
        let (ul, lr) = match d_over {
            Direction::Rightward => (edge_in(o), edge_out(o)),
            Direction::Leftward => (edge_out(o), edge_in(o)),
        };
        let (ll, ur) = match d_under {
            Direction::Rightward => (edge_in(u), edge_out(u)),
            Direction::Leftward => (edge_out(u), edge_in(u)),
        };
        // counterclockwise corner order: UR, UL, LL, LR
        pd.push(match d_under {
            Direction::Rightward => [ll, lr, ur, ul],
            Direction::Leftward => [ur, ul, ll, lr],
        });
    }

    GenericCode {
        crossings,
        gauss,
        pd,
    }
}
