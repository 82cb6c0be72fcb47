#![allow(dead_code)]

use std::fs;
use std::path::PathBuf;

use legfront::front::EventKind;
use legfront::{parse_front, parse_grid, FrontDiagram, FrontEvent, GridDiagram, OrientedFront};
use proptest::prelude::*;

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

/// Every front in the corpus, sorted by file name.
pub fn corpus() -> Vec<(String, FrontDiagram)> {
    let mut files: Vec<_> = fs::read_dir(corpus_dir())
        .expect("corpus directory")
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "front"))
        .collect();
    files.sort();
    files
        .into_iter()
        .map(|p| {
            let name = p.file_stem().unwrap().to_string_lossy().into_owned();
            let d = parse_front(&fs::read_to_string(&p).unwrap())
                .unwrap_or_else(|e| panic!("{}: {e}", p.display()));
            (name, d)
        })
        .collect()
}

pub fn front(name: &str) -> OrientedFront {
    let p = corpus_dir().join(format!("{name}.front"));
    parse_front(&fs::read_to_string(p).unwrap())
        .unwrap()
        .orient_default()
}

pub fn grid(name: &str) -> GridDiagram {
    let p = corpus_dir().join("grids").join(format!("{name}.grid"));
    parse_grid(&fs::read_to_string(p).unwrap()).unwrap()
}

/// Corpus knots small enough for repeated constructions.
pub fn small_knots() -> Vec<(String, OrientedFront)> {
    corpus()
        .into_iter()
        .map(|(n, d)| (n, d.orient_default()))
        .filter(|(_, of)| of.is_knot() && of.diagram().len() <= 40)
        .collect()
}

pub const TABLE_TREFOIL: [[usize; 4]; 3] = [[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]];
pub const TABLE_FIGURE_EIGHT: [[usize; 4]; 4] =
    [[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]];

/// Builds a closed word from arbitrary choices: each choice adds one event
/// that fits the current strand count, and the word is closed off with
/// `R1` events at the end.
pub fn word_from_choices(choices: &[(u8, u8)], max_strands: usize) -> FrontDiagram {
    let mut events = Vec::new();
    let mut s = 0usize;
    for &(kind, pos) in choices {
        let pos = pos as usize;
        let ev = if s == 0 {
            FrontEvent::left(1)
        } else {
            match kind % 3 {
                0 if s + 2 <= max_strands => FrontEvent::left(1 + pos % (s + 1)),
                1 => FrontEvent::right(1 + pos % (s - 1)),
                _ => FrontEvent::crossing(1 + pos % (s - 1)),
            }
        };
        s = (s as isize + ev.delta()) as usize;
        events.push(ev);
    }
    if events.is_empty() {
        events.push(FrontEvent::left(1));
        s = 2;
    }
    while s > 0 {
        events.push(FrontEvent::right(1));
        s -= 2;
    }
    FrontDiagram::new(events).expect("builder keeps words valid")
}

pub fn arb_front() -> impl Strategy<Value = FrontDiagram> {
    prop::collection::vec((any::<u8>(), any::<u8>()), 0..24).prop_map(|c| word_from_choices(&c, 8))
}

pub fn arb_knot() -> impl Strategy<Value = OrientedFront> {
    arb_front()
        .prop_map(|d| d.orient_default())
        .prop_filter("knot", |of| of.is_knot())
}

pub fn crossings(d: &FrontDiagram) -> usize {
    d.count(EventKind::Crossing)
}
