//! Text formats.
//!
//! Front files hold whitespace-separated `L<i>`, `R<i>`, `X<i>` tokens with
//! `#` comments running to end of line. Grid files hold `grid <n>`, then
//! `X: ...` and `O: ...` rows.

use crate::error::{Error, Result};
use crate::front::{FrontDiagram, FrontEvent};
use crate::grid::GridDiagram;

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Whitespace-separated tokens with 1-based line and column.
fn tokens(text: &str) -> impl Iterator<Item = (usize, usize, &str)> {
    text.lines().enumerate().flat_map(|(ln, line)| {
        let body = strip_comment(line);
        let mut out = Vec::new();
        let mut start = None;
        for (i, ch) in body.char_indices() {
            if ch.is_whitespace() {
                if let Some(s) = start.take() {
                    out.push((ln + 1, s + 1, &body[s..i]));
                }
            } else if start.is_none() {
                start = Some(i);
            }
        }
        if let Some(s) = start {
            out.push((ln + 1, s + 1, &body[s..]));
        }
        out
    })
}

fn syntax(line: usize, col: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        col,
        message: message.into(),
    }
}

pub fn parse_event(token: &str) -> Option<FrontEvent> {
    let mut chars = token.chars();
    let tag = chars.next()?;
    let rest = chars.as_str();
    if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let position: usize = rest.parse().ok()?;
    match tag {
        'L' => Some(FrontEvent::left(position)),
        'R' => Some(FrontEvent::right(position)),
        'X' => Some(FrontEvent::crossing(position)),
        _ => None,
    }
}

/// Parses and validates a front word.
pub fn parse_front(text: &str) -> Result<FrontDiagram> {
    let mut events = Vec::new();
    for (line, col, tok) in tokens(text) {
        let ev = parse_event(tok)
            .ok_or_else(|| syntax(line, col, format!("unexpected token `{tok}`")))?;
        events.push(ev);
    }
    FrontDiagram::new(events)
}

pub fn serialize_front(d: &FrontDiagram) -> String {
    let mut s = d.word();
    s.push('\n');
    s
}

pub fn parse_grid(text: &str) -> Result<GridDiagram> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, strip_comment(l).trim()))
        .filter(|(_, l)| !l.is_empty());

    let (ln, header) = lines
        .next()
        .ok_or_else(|| syntax(1, 1, "missing `grid <n>` header"))?;
    let n: usize = header
        .strip_prefix("grid")
        .map(str::trim)
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| syntax(ln, 1, "expected `grid <n>`"))?;

    let mut row = |tag: &str| -> Result<Vec<usize>> {
        let (ln, l) = lines
            .next()
            .ok_or_else(|| syntax(ln + 1, 1, format!("missing `{tag}:` line")))?;
        let body = l
            .strip_prefix(tag)
            .and_then(|s| s.trim_start().strip_prefix(':'))
            .ok_or_else(|| syntax(ln, 1, format!("expected `{tag}:`")))?;
        let values = body
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| syntax(ln, 1, format!("bad row number `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        if values.len() != n {
            return Err(syntax(
                ln,
                1,
                format!("`{tag}:` has {} entries, expected {n}", values.len()),
            ));
        }
        Ok(values)
    };
    let xs = row("X")?;
    let os = row("O")?;
    GridDiagram::new(&xs, &os)
}

pub fn serialize_grid(g: &GridDiagram) -> String {
    let join = |v: Vec<usize>| {
        v.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    };
    format!(
        "grid {}\nX: {}\nO: {}\n",
        g.size(),
        join(g.x_rows()),
        join(g.o_rows())
    )
}
