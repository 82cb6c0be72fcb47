//! Classical invariants of oriented fronts: blackboard writhe, cusp counts,
//! Thurston-Bennequin number, rotation number and linking numbers.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::front::{Direction, EventKind, OrientedFront};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CuspCounts {
    pub right: i64,
    pub down: i64,
    pub up: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentInvariants {
    pub index: usize,
    /// blackboard framing: signed count of self-crossings
    pub bb: i64,
    pub right_cusps: i64,
    pub down_cusps: i64,
    pub up_cusps: i64,
    pub tb: i64,
    pub rot: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub components: Vec<ComponentInvariants>,
    /// symmetric, zero diagonal
    pub linking: Vec<Vec<i64>>,
}

impl InvariantReport {
    pub fn component(&self, k: usize) -> &ComponentInvariants {
        &self.components[k]
    }
}

/// Raw per-event tallies shared by every invariant.
struct Tally {
    writhe: Vec<i64>,
    cusps: Vec<CuspCounts>,
    // doubled linking numbers
    inter: Vec<Vec<i64>>,
}

fn tally(of: &OrientedFront) -> Tally {
    let n = of.component_count();
    let mut t = Tally {
        writhe: vec![0; n],
        cusps: vec![
            CuspCounts {
                right: 0,
                down: 0,
                up: 0
            };
            n
        ],
        inter: vec![vec![0; n]; n],
    };
    for (e, ev) in of.diagram().events().iter().enumerate() {
        let i = ev.position;
        match ev.kind {
            EventKind::Crossing => {
                let (co, cu) = (of.component_at(e, i), of.component_at(e, i + 1));
                let sign = of.direction_at(e, i).sign() * of.direction_at(e, i + 1).sign();
                if co == cu {
                    t.writhe[co] += sign;
                } else {
                    t.inter[co][cu] += sign;
                    t.inter[cu][co] += sign;
                }
            }
            EventKind::RightCusp => {
                // entering from the upper branch means moving downward
                let c = of.component_at(e, i);
                t.cusps[c].right += 1;
                match of.direction_at(e, i) {
                    Direction::Rightward => t.cusps[c].down += 1,
                    Direction::Leftward => t.cusps[c].up += 1,
                }
            }
            EventKind::LeftCusp => {
                let c = of.component_at(e + 1, i);
                match of.direction_at(e + 1, i) {
                    Direction::Leftward => t.cusps[c].down += 1,
                    Direction::Rightward => t.cusps[c].up += 1,
                }
            }
        }
    }
    t
}

fn rot_of(c: &CuspCounts, k: usize) -> Result<i64> {
    let diff = c.down - c.up;
    if diff % 2 != 0 {
        return Err(Error::Internal(format!(
            "component {k} has {} down and {} up cusps",
            c.down, c.up
        )));
    }
    Ok(diff / 2)
}

pub fn writhe(of: &OrientedFront, k: usize) -> Result<i64> {
    of.check_component(k)?;
    Ok(tally(of).writhe[k])
}

pub fn cusp_counts(of: &OrientedFront, k: usize) -> Result<CuspCounts> {
    of.check_component(k)?;
    Ok(tally(of).cusps[k])
}

/// tb = bb - (number of right cusps).
pub fn tb(of: &OrientedFront, k: usize) -> Result<i64> {
    of.check_component(k)?;
    let t = tally(of);
    Ok(t.writhe[k] - t.cusps[k].right)
}

/// rot = (down cusps - up cusps) / 2.
pub fn rot(of: &OrientedFront, k: usize) -> Result<i64> {
    of.check_component(k)?;
    rot_of(&tally(of).cusps[k], k)
}

pub fn linking(of: &OrientedFront, j: usize, k: usize) -> Result<i64> {
    of.check_component(j)?;
    of.check_component(k)?;
    if j == k {
        return Err(Error::SameComponent(j));
    }
    let doubled = tally(of).inter[j][k];
    if doubled % 2 != 0 {
        return Err(Error::Internal(format!(
            "odd inter-component crossing count between {j} and {k}"
        )));
    }
    Ok(doubled / 2)
}

pub fn report(of: &OrientedFront) -> Result<InvariantReport> {
    let t = tally(of);
    let mut components = Vec::with_capacity(t.writhe.len());
    for (k, (&bb, cusps)) in t.writhe.iter().zip(&t.cusps).enumerate() {
        components.push(ComponentInvariants {
            index: k,
            bb,
            right_cusps: cusps.right,
            down_cusps: cusps.down,
            up_cusps: cusps.up,
            tb: bb - cusps.right,
            rot: rot_of(cusps, k)?,
        });
    }
    let mut linking = t.inter;
    for (j, row) in linking.iter_mut().enumerate() {
        for (k, v) in row.iter_mut().enumerate() {
            if *v % 2 != 0 {
                return Err(Error::Internal(format!(
                    "odd inter-component crossing count between {j} and {k}"
                )));
            }
            *v /= 2;
        }
    }
    Ok(InvariantReport {
        components,
        linking,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse_front;

    fn oriented(s: &str) -> OrientedFront {
        parse_front(s).unwrap().orient_default()
    }

    #[test]
    fn standard_unknot() {
        let o = oriented("L1 R1");
        assert_eq!(writhe(&o, 0), Ok(0));
        assert_eq!(
            cusp_counts(&o, 0),
            Ok(CuspCounts {
                right: 1,
                down: 1,
                up: 1
            })
        );
        assert_eq!(tb(&o, 0), Ok(-1));
        assert_eq!(rot(&o, 0), Ok(0));
    }

    #[test]
    fn trefoil() {
        let o = oriented("L1 L3 X2 X2 X2 R3 R1");
        assert_eq!(writhe(&o, 0), Ok(3));
        assert_eq!(
            cusp_counts(&o, 0),
            Ok(CuspCounts {
                right: 2,
                down: 2,
                up: 2
            })
        );
        assert_eq!(tb(&o, 0), Ok(1));
        assert_eq!(rot(&o, 0), Ok(0));
    }

    #[test]
    fn fish_is_a_stabilized_unknot() {
        let o = oriented("L1 X1 R1");
        assert_eq!(writhe(&o, 0), Ok(-1));
        assert_eq!(tb(&o, 0), Ok(-2));
        assert_eq!(rot(&o, 0).unwrap().abs(), 1);
    }

    #[test]
    fn unknown_component_and_same_component() {
        let o = oriented("L1 R1");
        assert_eq!(
            tb(&o, 1),
            Err(Error::UnknownComponent { index: 1, count: 1 })
        );
        let two = oriented("L1 L1 R1 R1");
        assert_eq!(linking(&two, 0, 0), Err(Error::SameComponent(0)));
        assert_eq!(linking(&two, 0, 1), Ok(0));
    }

    #[test]
    fn hopf_link_linking_is_symmetric_and_flips_with_orientation() {
        let o = oriented("L1 L3 X2 X2 R3 R1");
        let lk = linking(&o, 0, 1).unwrap();
        assert_eq!(lk.abs(), 1);
        assert_eq!(linking(&o, 1, 0), Ok(lk));
        let f = o.flipped(1).unwrap();
        assert_eq!(linking(&f, 0, 1), Ok(-lk));
        let r = report(&o).unwrap();
        assert_eq!(r.linking[0][0], 0);
        assert_eq!(r.linking[0][1], r.linking[1][0]);
    }

    #[test]
    fn reversal_keeps_tb_and_negates_rot() {
        let o = oriented("L1 L2 R1 R1");
        let f = o.flipped(0).unwrap();
        assert_eq!(tb(&o, 0), tb(&f, 0));
        assert_eq!(rot(&o, 0).unwrap(), -rot(&f, 0).unwrap());
        assert_eq!(rot(&o, 0).unwrap().abs(), 1);
    }
}
