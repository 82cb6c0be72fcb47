mod common;

use common::{front, small_knots};
use legfront::invariants::{rot, tb};
use legfront::moves::{apply_move_oriented, MoveKind};
use legfront::obstructions::{
    genus_bound, genus_lower_bound, slice_check, slice_verdict, stabilize_component, stein_check,
    HandleStatus, SliceVerdict,
};

/// Smallest g >= 0 with `2g - 1 >= tb - f + |rot|`, by search.
fn smallest_genus(tb: i64, rot: i64, f: i64) -> i64 {
    (0..).find(|g| 2 * g > tb - f + rot.abs()).unwrap()
}

#[test]
fn genus_bound_matches_direct_search() {
    for t in -8..=8 {
        for r in -5..=5 {
            for f in -6..=6 {
                assert_eq!(
                    genus_lower_bound(t, r, f),
                    smallest_genus(t, r, f),
                    "{t} {r} {f}"
                );
            }
        }
    }
}

#[test]
fn corpus_knots_genus_and_slice_agree() {
    for (name, of) in small_knots() {
        let (t, r) = (tb(&of, 0).unwrap(), rot(&of, 0).unwrap());
        let c = slice_check(&of).unwrap();
        assert_eq!((c.tb, c.rot, c.rhs), (t, r, t + r.abs()), "{name}");
        assert_eq!(
            c.inequality_holds,
            c.verdict == SliceVerdict::Inconclusive,
            "{name}"
        );
        for f in -4..=4 {
            let g = genus_bound(&of, 0, f).unwrap();
            assert_eq!(g.bound, smallest_genus(t, r, f), "{name} f={f}");
            assert_eq!(g.slice_verdict, slice_verdict(t, r, f), "{name} f={f}");
        }
    }
}

#[test]
fn disk_saturates_the_inequality_for_the_unknot() {
    let g = genus_bound(&front("unknot"), 0, 0).unwrap();
    assert_eq!((g.bound, g.slice_verdict), (0, SliceVerdict::Inconclusive));
    assert_eq!(slice_check(&front("unknot")).unwrap().rhs, -1);
}

#[test]
fn zero_tb_zero_rot_pattern() {
    // tb + rot is odd for a knot, so the pattern is checked on the triple
    // itself and on the nearest realizable front.
    assert_eq!(slice_verdict(0, 0, 0), SliceVerdict::NotSlice);
    assert_eq!(genus_lower_bound(0, 0, 0), 1);
    let of = front("trefoil_stab");
    assert_eq!(tb(&of, 0).unwrap(), 0);
    assert_eq!(slice_check(&of).unwrap().verdict, SliceVerdict::NotSlice);
}

#[test]
fn stein_statuses_are_exhaustive() {
    for (name, of) in small_knots() {
        let t = tb(&of, 0).unwrap();
        for f in t - 5..=t + 5 {
            let r = stein_check(&of, &[(0, f)]).unwrap();
            let h = &r.handles[0];
            assert_eq!((h.tb, h.framing), (t, f));
            match &h.status {
                HandleStatus::ExactStein => assert_eq!(f, t - 1, "{name}"),
                HandleStatus::NotCertified { deficit } => {
                    assert!(f > t - 1, "{name}");
                    assert_eq!(*deficit, f - t + 1, "{name}");
                    assert!(!r.certified);
                }
                HandleStatus::SteinAfterStabilizations { k, sites } => {
                    assert_eq!(*k as i64, t - 1 - f, "{name}");
                    assert_eq!(sites.len(), *k);
                    // replaying the listed sites reaches the framing exactly
                    let mut cur = of.clone();
                    for m in sites {
                        assert_eq!(m.kind, MoveKind::Stabilize);
                        cur = apply_move_oriented(&cur, m).unwrap();
                    }
                    assert_eq!(tb(&cur, 0).unwrap() - 1, f, "{name}");
                }
            }
        }
    }
}

#[test]
fn one_stabilization_moves_the_threshold_by_one() {
    for (name, of) in small_knots() {
        let t = tb(&of, 0).unwrap();
        let (_, once) = stabilize_component(&of, 0, 1).unwrap();
        assert_eq!(tb(&once, 0).unwrap(), t - 1, "{name}");
        assert_eq!(
            (rot(&once, 0).unwrap() - rot(&of, 0).unwrap()).abs(),
            1,
            "{name}"
        );
        let exact = |o| {
            stein_check(o, &[(0, t - 2)]).unwrap().handles[0]
                .status
                .clone()
        };
        assert_eq!(exact(&once), HandleStatus::ExactStein, "{name}");
        assert!(matches!(
            stein_check(&once, &[(0, t - 1)]).unwrap().handles[0].status,
            HandleStatus::NotCertified { deficit: 1 }
        ));
    }
}

#[test]
fn links_get_one_handle_per_component() {
    let of = front("hopf");
    let r = stein_check(&of, &[(0, -2), (1, -3)]).unwrap();
    assert_eq!(r.handles.len(), 2);
    assert!(r.certified);
    assert!(slice_check(&of).is_err());
}
