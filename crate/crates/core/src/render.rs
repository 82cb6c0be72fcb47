//! ASCII and SVG pictures of fronts.
//!
//! Both formats share one layout: event `j` owns the column between
//! `x = j·w` and `x = (j+1)·w`, and the strand at position `p` sits at
//! height `y = 2·s·p` (growing downwards). Strands passing through a column
//! are straight pieces spanning it. A cusp tip sits in the middle of its
//! column at `y = 2·s·i - s`, between the two strands it joins; its branches
//! span the right half (left cusp) or left half (right cusp) of the column,
//! so neighbouring cusps never share a point. At a crossing the descending
//! piece is the over-strand and is drawn unbroken.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::front::{EventKind, OrientedFront};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RenderFormat {
    Ascii,
    Svg,
}

/// Smallest column width that leaves room for a cusp tip inside a column.
pub const MIN_COLUMN_WIDTH: usize = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RenderSpec {
    pub format: RenderFormat,
    /// characters (ASCII) or pixels (SVG) per event
    pub column_width: usize,
    /// half the vertical distance between adjacent strands, in rows or pixels
    pub strand_spacing: usize,
    pub label_components: bool,
    pub label_events: bool,
}

impl RenderSpec {
    pub fn new(
        format: RenderFormat,
        column_width: usize,
        strand_spacing: usize,
        label_components: bool,
        label_events: bool,
    ) -> Result<Self> {
        if column_width < MIN_COLUMN_WIDTH {
            return Err(Error::InvalidRenderSpec(format!(
                "column width must be at least {MIN_COLUMN_WIDTH}"
            )));
        }
        if strand_spacing == 0 {
            return Err(Error::InvalidRenderSpec(
                "strand spacing must be positive".into(),
            ));
        }
        Ok(Self {
            format,
            column_width,
            strand_spacing,
            label_components,
            label_events,
        })
    }

    pub fn ascii() -> Self {
        Self {
            format: RenderFormat::Ascii,
            column_width: 6,
            strand_spacing: 1,
            label_components: false,
            label_events: false,
        }
    }

    pub fn svg() -> Self {
        Self {
            format: RenderFormat::Svg,
            column_width: 40,
            strand_spacing: 10,
            label_components: false,
            label_events: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PieceRole {
    Plain,
    CuspBranch,
    Over,
    Under,
}

/// A straight piece of strand from `(x0, y0)` to `(x1, y1)` inside one
/// column, with `x0 < x1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Piece {
    pub column: usize,
    pub x0: i64,
    pub y0: i64,
    pub x1: i64,
    pub y1: i64,
    pub component: usize,
    pub role: PieceRole,
}

impl Piece {
    /// Height at `x` as the fraction `(numerator, denominator)`.
    fn height_at(&self, x: i64) -> (i64, i64) {
        let den = self.x1 - self.x0;
        (self.y0 * den + (self.y1 - self.y0) * (x - self.x0), den)
    }
}

/// A cusp tip.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Tip {
    pub x: i64,
    pub y: i64,
    pub is_left: bool,
    pub component: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layout {
    pub columns: usize,
    pub column_width: i64,
    pub spacing: i64,
    pub height: i64,
    pub pieces: Vec<Piece>,
    pub cusps: Vec<Tip>,
    /// tip of each component's first left cusp
    pub component_anchors: Vec<(i64, i64)>,
}

/// Lays out a front with column width `w` (raised to [`MIN_COLUMN_WIDTH`]
/// if smaller) and strand spacing `s` (raised to 1).
pub fn layout(of: &OrientedFront, w: usize, s: usize) -> Layout {
    let d = of.diagram();
    let w = w.max(MIN_COLUMN_WIDTH) as i64;
    let s = s.max(1) as i64;
    let y = |p: usize| 2 * s * p as i64;
    let mut pieces = Vec::new();
    let mut cusps = Vec::new();
    for (j, ev) in d.events().iter().enumerate() {
        let i = ev.position;
        let left = d.strands_at(j);
        let (start, mid, end) = (j as i64 * w, j as i64 * w + w / 2, (j as i64 + 1) * w);
        let mut plain = |from: usize, to: usize, at: usize| {
            pieces.push(Piece {
                column: j,
                x0: start,
                y0: y(from),
                x1: end,
                y1: y(to),
                component: of.component_at(j, at),
                role: PieceRole::Plain,
            })
        };
        match ev.kind {
            EventKind::Crossing => {
                for p in (1..=left).filter(|&p| p != i && p != i + 1) {
                    plain(p, p, p);
                }
                pieces.push(Piece {
                    column: j,
                    x0: start,
                    y0: y(i + 1),
                    x1: end,
                    y1: y(i),
                    component: of.component_at(j, i + 1),
                    role: PieceRole::Under,
                });
                pieces.push(Piece {
                    column: j,
                    x0: start,
                    y0: y(i),
                    x1: end,
                    y1: y(i + 1),
                    component: of.component_at(j, i),
                    role: PieceRole::Over,
                });
            }
            EventKind::LeftCusp => {
                for p in 1..=left {
                    plain(p, if p < i { p } else { p + 2 }, p);
                }
                let c = of.component_at(j + 1, i);
                let tip = y(i) - s;
                for to in [i, i + 1] {
                    pieces.push(Piece {
                        column: j,
                        x0: mid,
                        y0: tip,
                        x1: end,
                        y1: y(to),
                        component: c,
                        role: PieceRole::CuspBranch,
                    });
                }
                cusps.push(Tip {
                    x: mid,
                    y: tip,
                    is_left: true,
                    component: c,
                });
            }
            EventKind::RightCusp => {
                for p in (1..=left).filter(|&p| p != i && p != i + 1) {
                    plain(p, if p < i { p } else { p - 2 }, p);
                }
                let c = of.component_at(j, i);
                let tip = y(i) - s;
                for from in [i, i + 1] {
                    pieces.push(Piece {
                        column: j,
                        x0: start,
                        y0: y(from),
                        x1: mid,
                        y1: tip,
                        component: c,
                        role: PieceRole::CuspBranch,
                    });
                }
                cusps.push(Tip {
                    x: mid,
                    y: tip,
                    is_left: false,
                    component: c,
                });
            }
        }
    }
    let component_anchors = of
        .components()
        .iter()
        .map(|c| {
            let ev = d.events()[c.first_event];
            (c.first_event as i64 * w + w / 2, y(ev.position) - s)
        })
        .collect();
    Layout {
        columns: d.len(),
        column_width: w,
        spacing: s,
        height: y(d.max_strands()) + s,
        pieces,
        cusps,
        component_anchors,
    }
}

impl Layout {
    /// Checks that pieces in a column never touch, apart from the two
    /// branches at a cusp tip and the two pieces of a crossing, and that no
    /// two cusp tips coincide.
    pub fn check_overlaps(&self) -> Result<()> {
        let mut tips: Vec<(i64, i64)> = self.cusps.iter().map(|t| (t.x, t.y)).collect();
        tips.sort_unstable();
        if let Some(w) = tips.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Internal(format!("two cusp tips at {:?}", w[0])));
        }
        for group in self.pieces.chunk_by(|a, b| a.column == b.column) {
            for (a, pa) in group.iter().enumerate() {
                for pb in &group[a + 1..] {
                    let exempt = pa.role != PieceRole::Plain
                        && pb.role != PieceRole::Plain
                        && (pa.role == PieceRole::CuspBranch) == (pb.role == PieceRole::CuspBranch);
                    let (lo, hi) = (pa.x0.max(pb.x0), pa.x1.min(pb.x1));
                    if exempt || lo > hi {
                        continue;
                    }
                    let gap = |x: i64| {
                        let ((na, da), (nb, db)) = (pa.height_at(x), pb.height_at(x));
                        (na * db - nb * da).signum()
                    };
                    let (g0, g1) = (gap(lo), gap(hi));
                    if g0 == 0 || g1 == 0 || g0 != g1 {
                        return Err(Error::Internal(format!(
                            "pieces overlap in column {}: {pa:?} and {pb:?}",
                            pa.column
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

pub fn render(of: &OrientedFront, spec: &RenderSpec) -> String {
    let lay = layout(of, spec.column_width, spec.strand_spacing);
    debug_assert!(lay.check_overlaps().is_ok(), "{:?}", lay.check_overlaps());
    match spec.format {
        RenderFormat::Ascii => ascii(&lay, spec),
        RenderFormat::Svg => svg(&lay, spec),
    }
}

fn component_tag(c: usize) -> char {
    std::char::from_digit((c % 36) as u32, 36).unwrap()
}

fn ascii(lay: &Layout, spec: &RenderSpec) -> String {
    let margin = 2usize;
    let w = lay.column_width;
    let width = margin + (lay.columns as i64 * w) as usize + 2;
    let rows = (lay.height + lay.spacing) as usize + 1;
    let mut grid = vec![vec![' '; width]; rows];
    let cell = |x: i64| margin + x as usize;

    let draw = |p: &Piece, grid: &mut Vec<Vec<char>>| {
        let span = p.x1 - p.x0;
        // row of the piece at x0 + t / 2, rounding half up
        let row2 = |t: i64| (2 * p.y0 * span + (p.y1 - p.y0) * t + span).div_euclid(2 * span);
        let slope = if p.y1 > p.y0 { '\\' } else { '/' };
        for dx in 0..=span {
            let row = row2(2 * dx);
            let (before, after) = (row2((2 * dx - 1).max(0)), row2((2 * dx + 1).min(2 * span)));
            let ch = if before == after { '-' } else { slope };
            grid[row as usize][cell(p.x0 + dx)] = ch;
        }
    };
    // unders first so that overs stay continuous
    for p in lay.pieces.iter().filter(|p| p.role == PieceRole::Under) {
        draw(p, &mut grid);
    }
    for p in lay.pieces.iter().filter(|p| p.role != PieceRole::Under) {
        draw(p, &mut grid);
    }
    for t in &lay.cusps {
        grid[t.y as usize][cell(t.x)] = if t.is_left { '<' } else { '>' };
    }
    if spec.label_components {
        for (c, &(x, y)) in lay.component_anchors.iter().enumerate() {
            grid[y as usize][cell(x) - 1] = component_tag(c);
        }
    }
    let mut out = String::new();
    if spec.label_events {
        let mut line = vec![' '; width];
        for j in 0..lay.columns {
            let label = j.to_string();
            let x = cell(j as i64 * w + w / 2);
            for (k, ch) in label.chars().enumerate() {
                if x + k < width {
                    line[x + k] = ch;
                }
            }
        }
        out.push_str(line.iter().collect::<String>().trim_end());
        out.push('\n');
    }
    for row in grid.iter().skip(lay.spacing as usize) {
        out.push_str(row.iter().collect::<String>().trim_end());
        out.push('\n');
    }
    while out.ends_with("\n\n") {
        out.pop();
    }
    out
}

const PALETTE: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf",
];

fn svg(lay: &Layout, spec: &RenderSpec) -> String {
    let margin = 20i64;
    let w = lay.column_width;
    let width = 2 * margin + lay.columns as i64 * w;
    let height = 2 * margin + lay.height;
    let top = if spec.label_events {
        margin + 10
    } else {
        margin
    };
    let height = height + (top - margin);
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(
        out,
        r#"<g fill="none" stroke-width="2" stroke-linecap="round">"#
    );
    let gap = 2 * lay.spacing / 3;
    for p in &lay.pieces {
        let (x0, x1) = (margin + p.x0, margin + p.x1);
        let (y0, y1) = (top + p.y0, top + p.y1);
        let color = PALETTE[p.component % PALETTE.len()];
        if p.role == PieceRole::Under {
            // leave a gap around the crossing point, whose height is midway
            let (xm, ym) = (x0 + x1, y0 + y1);
            let dx = (x1 - x0) * gap / (2 * lay.spacing);
            let _ = writeln!(
                out,
                r#"<path stroke="{color}" d="M {x0} {y0} L {} {} M {} {} L {x1} {y1}"/>"#,
                half(xm - dx),
                half(ym + gap),
                half(xm + dx),
                half(ym - gap),
            );
        } else {
            let _ = writeln!(
                out,
                r#"<path stroke="{color}" d="M {x0} {y0} L {x1} {y1}"/>"#
            );
        }
    }
    let _ = writeln!(out, "</g>");
    if spec.label_components || spec.label_events {
        let _ = writeln!(out, r#"<g font-family="monospace" font-size="10">"#);
        if spec.label_components {
            for (c, &(x, y)) in lay.component_anchors.iter().enumerate() {
                let _ = writeln!(
                    out,
                    r#"<text x="{}" y="{}" text-anchor="end">{c}</text>"#,
                    margin + x - 4,
                    top + y + 3
                );
            }
        }
        if spec.label_events {
            for j in 0..lay.columns {
                let _ = writeln!(
                    out,
                    r#"<text x="{}" y="{}" text-anchor="middle">{j}</text>"#,
                    margin + j as i64 * w + w / 2,
                    margin
                );
            }
        }
        let _ = writeln!(out, "</g>");
    }
    let _ = writeln!(out, "</svg>");
    out
}

/// Formats `v / 2` exactly.
fn half(v: i64) -> String {
    if v % 2 == 0 {
        (v / 2).to_string()
    } else {
        format!("{}.5", v.div_euclid(2))
    }
}
