mod common;

use common::{front, grid, small_knots, TABLE_FIGURE_EIGHT, TABLE_TREFOIL};
use legfront::constructions::{
    legendrianize, push_off, whitehead_double, whitehead_double_once, PushOffCase,
};
use legfront::invariants::{linking, report, tb};
use legfront::moves::fuzz;
use legfront::oracles::{
    grid_to_code, kauffman_bracket, oracle_linking, BracketPolynomial, MAX_BRACKET_CROSSINGS,
};
use legfront::{to_generic_code, GenericCode, OrientedFront};

fn bracket_of(of: &OrientedFront) -> BracketPolynomial {
    kauffman_bracket(&to_generic_code(of), MAX_BRACKET_CROSSINGS).unwrap()
}

fn loop_value() -> BracketPolynomial {
    BracketPolynomial::from_terms([(2, -1), (-2, -1)])
}

#[test]
fn push_off_framing_law_across_corpus() {
    for (name, of) in small_knots() {
        let t = tb(&of, 0).unwrap();
        for r in -3..=3 {
            let p = push_off(&of, r).unwrap();
            let f = &p.front;
            assert_eq!(f.component_count(), 2, "{name} r={r}");
            assert_eq!(
                linking(f, p.knot_index, p.companion_index).unwrap(),
                r,
                "{name} r={r}"
            );
            assert_eq!(
                tb(f, p.companion_index).unwrap() - r,
                -(t - r).abs(),
                "{name} r={r}"
            );
            assert_eq!(p.stab_count as i64, (t - r).max(0), "{name} r={r}");
            // the knot strand is untouched
            assert_eq!(
                f.project_component(p.knot_index).unwrap(),
                *of.diagram(),
                "{name}"
            );
            // independent linking count on the export
            let code = to_generic_code(f);
            assert_eq!(
                oracle_linking(&code, p.knot_index, p.companion_index).unwrap(),
                r,
                "{name} r={r}"
            );
        }
    }
}

#[test]
fn push_off_cases_are_all_reached() {
    let case = |name: &str| push_off(&front(name), 0).unwrap().case;
    assert_eq!(case("unknot"), PushOffCase::BlackboardNonPositive);
    assert_eq!(case("trefoil_stab"), PushOffCase::AbsorbedAtCusps);
    assert_eq!(case("trefoil"), PushOffCase::LeftoverTwists);
}

#[test]
fn companion_has_the_knot_type_of_the_knot() {
    for name in ["trefoil", "figure_eight", "left_trefoil"] {
        let of = front(name);
        let p = push_off(&of, 0).unwrap();
        let companion = p
            .front
            .project_component(p.companion_index)
            .unwrap()
            .orient_default();
        assert_eq!(bracket_of(&companion), bracket_of(&of), "{name}");
    }
}

#[test]
fn whitehead_recurrence_across_corpus() {
    for (name, of) in small_knots() {
        let t = tb(&of, 0).unwrap();
        let wh = whitehead_double_once(&of).unwrap();
        assert!(wh.is_knot(), "{name}");
        assert_eq!(tb(&wh, 0).unwrap(), t - t.abs() + 1, "{name}");
    }
}

#[test]
fn iterated_doubles_of_non_negative_tb_knots_have_tb_one() {
    for name in ["trefoil", "trefoil_stab", "bb5_c4", "torus_2_5"] {
        let mut cur = front(name);
        assert!(tb(&cur, 0).unwrap() >= 0);
        for n in 1..=4 {
            cur = whitehead_double_once(&cur).unwrap();
            assert_eq!(tb(&cur, 0).unwrap(), 1, "{name} n={n}");
        }
    }
    assert_eq!(
        tb(&whitehead_double(&front("unknot"), 1).unwrap(), 0).unwrap(),
        -1
    );
}

#[test]
fn stored_wh3_matches_construction() {
    let built = whitehead_double(&front("trefoil"), 3).unwrap();
    assert_eq!(*built.diagram(), *front("wh3_trefoil").diagram());
}

#[test]
fn legendrianized_grids_have_the_right_knot_type() {
    let unknot = BracketPolynomial::one();
    let trefoil =
        kauffman_bracket(&GenericCode::from_knot_pd(&TABLE_TREFOIL).unwrap(), 12).unwrap();
    let eight =
        kauffman_bracket(&GenericCode::from_knot_pd(&TABLE_FIGURE_EIGHT).unwrap(), 12).unwrap();
    for (name, expected) in [
        ("unknot", unknot),
        ("trefoil", trefoil),
        ("figure_eight", eight),
    ] {
        let g = grid(name);
        let of = legendrianize(&g);
        assert!(of.is_knot(), "{name}");
        assert_eq!(bracket_of(&of), expected, "{name} front");
        assert_eq!(
            kauffman_bracket(&grid_to_code(&g), 12).unwrap(),
            expected,
            "{name} grid"
        );
    }
    assert_eq!(tb(&legendrianize(&grid("unknot")), 0).unwrap(), -1);
    assert!([1, -6].contains(&tb(&legendrianize(&grid("trefoil")), 0).unwrap()));
}

#[test]
fn legendrianize_then_fuzz_keeps_invariants() {
    for name in ["unknot", "trefoil", "figure_eight"] {
        let of = legendrianize(&grid(name));
        let out = fuzz(&of, 500, 3, false);
        assert!(out.invariance_holds(&of).unwrap(), "{name}");
        let classical = |r: legfront::invariants::InvariantReport| {
            let tr: Vec<_> = r.components.iter().map(|c| (c.tb, c.rot)).collect();
            (tr, r.linking)
        };
        assert_eq!(
            classical(report(&out.front).unwrap()),
            classical(report(&of).unwrap()),
            "{name}"
        );
    }
}

#[test]
fn split_union_bracket_multiplies_by_the_loop_value() {
    let split = front("trefoil_and_unknot");
    let trefoil = bracket_of(&front("trefoil"));
    assert_eq!(bracket_of(&split), &trefoil * &loop_value());
    assert_eq!(bracket_of(&front("unlink3")), loop_value().pow(2));
}

#[test]
fn distinguishes_knot_types() {
    let t = bracket_of(&front("trefoil"));
    assert_ne!(t, BracketPolynomial::one());
    assert_eq!(bracket_of(&front("trefoil_r3")), t);
    assert_eq!(bracket_of(&front("left_trefoil")), t.mirrored());
    assert_eq!(bracket_of(&front("unknot_r3")), BracketPolynomial::one());
    assert_eq!(bracket_of(&front("unknot_fish")), BracketPolynomial::one());
}
