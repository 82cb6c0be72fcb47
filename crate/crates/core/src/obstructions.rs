//! Obstructions read off classical invariants.
//!
//! For a Legendrian knot bounding a connected oriented surface `F` with one
//! boundary circle, framed by `f`, inside a Stein domain, the slice-Bennequin
//! inequality `-χ(F) >= (tb - f) + |rot|` holds. With `χ(F) = 1 - 2g` it
//! bounds the genus from below, and with `F` a disk and `f = 0` it rules out
//! sliceness whenever `tb + |rot| >= 0`. A 2-handle attached along a
//! Legendrian knot extends the Stein structure when its framing is
//! `tb - 1`; smaller framings are reached by stabilizing first.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::front::OrientedFront;
use crate::invariants;
use crate::moves::{apply_move_oriented, MoveInstance, Variant};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SliceVerdict {
    NotSlice,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GenusBound {
    pub component: usize,
    pub framing: i64,
    pub tb: i64,
    pub rot: i64,
    /// lower bound on the genus of a framed surface bounded by the component
    pub bound: i64,
    pub slice_verdict: SliceVerdict,
}

/// `max(0, ceil((tb - f + |rot| + 1) / 2))`, from `2g - 1 >= tb - f + |rot|`.
pub fn genus_lower_bound(tb: i64, rot: i64, f: i64) -> i64 {
    let excess = tb - f + rot.abs() + 1;
    (excess + 1).div_euclid(2).max(0)
}

/// `NotSlice` exactly when `f = 0` and a disk (`-χ = -1`) would violate
/// `-χ >= tb - f + |rot|`, i.e. when `tb + |rot| >= 0`.
pub fn slice_verdict(tb: i64, rot: i64, f: i64) -> SliceVerdict {
    if f == 0 && tb + rot.abs() >= 0 {
        SliceVerdict::NotSlice
    } else {
        SliceVerdict::Inconclusive
    }
}

pub fn genus_bound(of: &OrientedFront, k: usize, f: i64) -> Result<GenusBound> {
    let tb = invariants::tb(of, k)?;
    let rot = invariants::rot(of, k)?;
    Ok(GenusBound {
        component: k,
        framing: f,
        tb,
        rot,
        bound: genus_lower_bound(tb, rot, f),
        slice_verdict: slice_verdict(tb, rot, f),
    })
}

/// The inequality instance for a slice disk: `-χ(D²) = -1 >= tb + |rot|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SliceCertificate {
    pub verdict: SliceVerdict,
    pub tb: i64,
    pub rot: i64,
    /// `-χ` of a disk
    pub lhs: i64,
    /// `tb + |rot|`
    pub rhs: i64,
    /// whether a slice disk would satisfy the inequality
    pub inequality_holds: bool,
}

/// One-sided: `NotSlice` when a slice disk would violate the inequality,
/// `Inconclusive` otherwise. Never asserts sliceness.
pub fn slice_check(of: &OrientedFront) -> Result<SliceCertificate> {
    if !of.is_knot() {
        return Err(Error::NotAKnot(of.component_count()));
    }
    let g = genus_bound(of, 0, 0)?;
    let rhs = g.tb + g.rot.abs();
    Ok(SliceCertificate {
        verdict: g.slice_verdict,
        tb: g.tb,
        rot: g.rot,
        lhs: -1,
        rhs,
        inequality_holds: -1 >= rhs,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum HandleStatus {
    /// framing equals `tb - 1`
    ExactStein,
    /// framing is `k` below `tb - 1`; the listed stabilizations, applied in
    /// order, reach `tb - 1`
    SteinAfterStabilizations { k: usize, sites: Vec<MoveInstance> },
    /// framing exceeds `tb - 1` by `deficit`
    NotCertified { deficit: i64 },
}

impl HandleStatus {
    /// Status from the tb and framing alone, without stabilization sites.
    pub fn classify(tb: i64, f: i64) -> Self {
        let slack = f - (tb - 1);
        match slack {
            0 => HandleStatus::ExactStein,
            s if s < 0 => HandleStatus::SteinAfterStabilizations {
                k: (-s) as usize,
                sites: vec![],
            },
            s => HandleStatus::NotCertified { deficit: s },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HandleReport {
    pub component: usize,
    pub framing: i64,
    pub tb: i64,
    pub status: HandleStatus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SteinReport {
    pub handles: Vec<HandleReport>,
    /// no handle is `NotCertified`
    pub certified: bool,
}

/// `k` stabilizations of component `c`, each placed on the upper branch of
/// the component's first left cusp. Returns the sites and the result.
pub fn stabilize_component(
    of: &OrientedFront,
    c: usize,
    k: usize,
) -> Result<(Vec<MoveInstance>, OrientedFront)> {
    of.check_component(c)?;
    let mut cur = of.clone();
    let mut sites = Vec::with_capacity(k);
    for _ in 0..k {
        let first = cur.components()[c].first_event;
        let position = cur.diagram().events()[first].position;
        let m = MoveInstance::stabilization(first + 1, position, Variant::Down);
        cur = apply_move_oriented(&cur, &m)?;
        sites.push(m);
    }
    Ok((sites, cur))
}

/// Classifies each `(component, framing)` 2-handle.
pub fn stein_check(of: &OrientedFront, handles: &[(usize, i64)]) -> Result<SteinReport> {
    let mut seen = BTreeSet::new();
    for &(c, _) in handles {
        of.check_component(c)?;
        if !seen.insert(c) {
            return Err(Error::DuplicateHandle(c));
        }
    }
    let mut out = Vec::with_capacity(handles.len());
    for &(c, f) in handles {
        let tb = invariants::tb(of, c)?;
        let status = match HandleStatus::classify(tb, f) {
            HandleStatus::SteinAfterStabilizations { k, .. } => {
                let (sites, stabilized) = stabilize_component(of, c, k)?;
                let after = invariants::tb(&stabilized, c)?;
                if HandleStatus::classify(after, f) != HandleStatus::ExactStein {
                    return Err(Error::Internal(format!(
                        "{k} stabilizations left component {c} at tb {after}"
                    )));
                }
                HandleStatus::SteinAfterStabilizations { k, sites }
            }
            s => s,
        };
        out.push(HandleReport {
            component: c,
            framing: f,
            tb,
            status,
        });
    }
    let certified = out
        .iter()
        .all(|h| !matches!(h.status, HandleStatus::NotCertified { .. }));
    Ok(SteinReport {
        handles: out,
        certified,
    })
}
