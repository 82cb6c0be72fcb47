//! Brute-force cross-checks that share no code with the main computation
//! path: signs read off PD cyclic order, a Kauffman bracket state sum, and a
//! direct grid-to-PD conversion.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul};

use crate::code::{CrossingRecord, GaussEntry, GenericCode, StrandRef};
use crate::error::{Error, Result};
use crate::grid::GridDiagram;

/// Default crossing cap for the state sum (4096 states).
pub const MAX_BRACKET_CROSSINGS: usize = 12;

/// Laurent polynomial in A with integer coefficients, no zero terms.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BracketPolynomial {
    terms: BTreeMap<i32, i64>,
}

impl BracketPolynomial {
    pub fn monomial(coeff: i64, exp: i32) -> Self {
        let mut p = Self::default();
        p.add_term(exp, coeff);
        p
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i32, i64)>) -> Self {
        let mut p = Self::default();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exp: i32, coeff: i64) {
        let c = self.terms.entry(exp).or_insert(0);
        *c += coeff;
        if *c == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Substitutes A -> A^-1, which mirrors the diagram.
    pub fn mirrored(&self) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (-e, c)))
    }
}

impl Add for &BracketPolynomial {
    type Output = BracketPolynomial;
    fn add(self, rhs: &BracketPolynomial) -> BracketPolynomial {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c);
        }
        out
    }
}

impl Mul for &BracketPolynomial {
    type Output = BracketPolynomial;
    fn mul(self, rhs: &BracketPolynomial) -> BracketPolynomial {
        let mut out = BracketPolynomial::default();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for BracketPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms().rev() {
            let (sign, mag) = if c < 0 { ("-", -c) } else { ("+", c) };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (mag, e) {
                (m, 0) => write!(f, "{m}")?,
                (1, e) => write!(f, "A^{e}")?,
                (m, e) => write!(f, "{m}A^{e}")?,
            }
        }
        Ok(())
    }
}

/// Incoming/outgoing edge labels of every passage, plus the over and under
/// passage of every crossing.
struct Passages {
    over: Vec<(usize, usize)>,
    under: Vec<(usize, usize)>,
    components: Vec<(Option<usize>, Option<usize>)>,
}

fn passages(code: &GenericCode) -> Result<Passages> {
    let n = code.pd.len();
    let mut over = vec![None; n];
    let mut under = vec![None; n];
    let mut components = vec![(None, None); n];
    let mut base = 0;
    for (ci, seq) in code.gauss.iter().enumerate() {
        let m = seq.len();
        for (t, g) in seq.iter().enumerate() {
            if g.crossing >= n {
                return Err(Error::MalformedCode(format!(
                    "component {ci} visits unknown crossing {}",
                    g.crossing
                )));
            }
            let edges = (base + (t + m - 1) % m, base + t);
            let slot = if g.over {
                &mut over[g.crossing]
            } else {
                &mut under[g.crossing]
            };
            if slot.replace(edges).is_some() {
                return Err(Error::MalformedCode(format!(
                    "crossing {} visited twice as {}",
                    g.crossing,
                    if g.over { "over" } else { "under" }
                )));
            }
            if g.over {
                components[g.crossing].0 = Some(ci);
            } else {
                components[g.crossing].1 = Some(ci);
            }
        }
        base += m;
    }
    let unwrap = |v: Vec<Option<(usize, usize)>>, what: &str| {
        v.into_iter()
            .enumerate()
            .map(|(x, e)| {
                e.ok_or_else(|| Error::MalformedCode(format!("crossing {x} has no {what} passage")))
            })
            .collect::<Result<Vec<_>>>()
    };
    Ok(Passages {
        over: unwrap(over, "over")?,
        under: unwrap(under, "under")?,
        components,
    })
}

/// Sign of every crossing, read from the PD cyclic order: positive exactly
/// when the slot after the incoming under-edge holds the outgoing over-edge.
fn signs(code: &GenericCode, ps: &Passages) -> Result<Vec<i64>> {
    code.pd
        .iter()
        .enumerate()
        .map(|(x, q)| {
            let (u_in, u_out) = ps.under[x];
            let (o_in, o_out) = ps.over[x];
            if q[0] != u_in || q[2] != u_out {
                return Err(Error::MalformedCode(format!(
                    "crossing {x}: under edges {u_in}->{u_out} disagree with PD {q:?}"
                )));
            }
            if q[1] == o_out && q[3] == o_in {
                Ok(1)
            } else if q[1] == o_in && q[3] == o_out {
                Ok(-1)
            } else {
                Err(Error::MalformedCode(format!(
                    "crossing {x}: over edges {o_in}->{o_out} disagree with PD {q:?}"
                )))
            }
        })
        .collect()
}

/// Total signed crossing count.
pub fn oracle_writhe(code: &GenericCode) -> Result<i64> {
    let ps = passages(code)?;
    Ok(signs(code, &ps)?.iter().sum())
}

/// Signed count of self-crossings of component `k`.
pub fn oracle_component_writhe(code: &GenericCode, k: usize) -> Result<i64> {
    let ps = passages(code)?;
    let s = signs(code, &ps)?;
    Ok(ps
        .components
        .iter()
        .zip(&s)
        .filter(|((o, u), _)| *o == Some(k) && *u == Some(k))
        .map(|(_, s)| s)
        .sum())
}

pub fn oracle_linking(code: &GenericCode, j: usize, k: usize) -> Result<i64> {
    if j == k {
        return Err(Error::SameComponent(j));
    }
    let ps = passages(code)?;
    let s = signs(code, &ps)?;
    let total: i64 = ps
        .components
        .iter()
        .zip(&s)
        .filter(|((o, u), _)| (*o == Some(j) && *u == Some(k)) || (*o == Some(k) && *u == Some(j)))
        .map(|(_, s)| s)
        .sum();
    if total % 2 != 0 {
        return Err(Error::MalformedCode(format!(
            "odd crossing sum between components {j} and {k}"
        )));
    }
    Ok(total / 2)
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Writhe-normalized Kauffman bracket, `(-A^3)^(-w) <D>` with `<O> = 1`.
///
/// The A-smoothing of `X[a,b,c,d]` joins `a` with `b` and `c` with `d`.
pub fn kauffman_bracket(code: &GenericCode, max_crossings: usize) -> Result<BracketPolynomial> {
    let n = code.pd.len();
    if n > max_crossings {
        return Err(Error::TooLarge {
            crossings: n,
            limit: max_crossings,
        });
    }
    let w = oracle_writhe(code)?;
    let edges: usize = code.gauss.iter().map(Vec::len).sum();
    let free = code.free_loops();
    let loop_value = BracketPolynomial::from_terms([(2, -1), (-2, -1)]);
    let max_loops = edges + free;
    let loop_powers: Vec<BracketPolynomial> =
        (0..=max_loops).map(|k| loop_value.pow(k as u32)).collect();

    let mut sum = BracketPolynomial::default();
    let mut parent = vec![0; edges];
    for state in 0u32..(1u32 << n) {
        for (i, p) in parent.iter_mut().enumerate() {
            *p = i;
        }
        for (x, &[a, b, c, d]) in code.pd.iter().enumerate() {
            let pairs = if state & (1 << x) == 0 {
                [(a, b), (c, d)]
            } else {
                [(a, d), (b, c)]
            };
            for (u, v) in pairs {
                let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                parent[ru] = rv;
            }
        }
        let loops = (0..edges).filter(|&e| find(&mut parent, e) == e).count() + free;
        let b_count = state.count_ones() as i32;
        let a_count = n as i32 - b_count;
        let term = &BracketPolynomial::monomial(1, a_count - b_count)
            * &loop_powers[loops.saturating_sub(1)];
        sum = &sum + &term;
    }
    let sign = if w % 2 == 0 { 1 } else { -1 };
    let normalizer = BracketPolynomial::monomial(sign, -3 * w as i32);
    Ok(&sum * &normalizer)
}

impl GenericCode {
    /// Builds a one-component code from a PD list whose edges are labelled
    /// 1..2n consecutively along the knot, as in standard knot tables.
    pub fn from_knot_pd(pd: &[[usize; 4]]) -> Result<Self> {
        let n = pd.len();
        let m = 2 * n;
        if n == 0 {
            return Ok(Self {
                crossings: vec![],
                gauss: vec![vec![]],
                pd: vec![],
            });
        }
        let succ = |e: usize| e % m + 1;
        // passage indexed by its incoming edge
        let mut by_in: Vec<Option<(usize, bool)>> = vec![None; m + 1];
        for (x, &[a, b, c, d]) in pd.iter().enumerate() {
            if [a, b, c, d].iter().any(|&e| e == 0 || e > m) || succ(a) != c {
                return Err(Error::MalformedCode(format!("crossing {x}: {:?}", pd[x])));
            }
            let over_in = if succ(b) == d {
                b
            } else if succ(d) == b {
                d
            } else {
                return Err(Error::MalformedCode(format!("crossing {x}: {:?}", pd[x])));
            };
            for (e, over) in [(a, false), (over_in, true)] {
                if by_in[e].replace((x, over)).is_some() {
                    return Err(Error::MalformedCode(format!("edge {e} enters twice")));
                }
            }
        }
        let mut gauss = Vec::with_capacity(m);
        let mut over_ref = vec![None; n];
        let mut under_ref = vec![None; n];
        for (e, slot) in by_in.iter().enumerate().skip(1) {
            let (x, over) =
                slot.ok_or_else(|| Error::MalformedCode(format!("edge {e} never enters")))?;
            let r = StrandRef {
                component: 0,
                passage: gauss.len(),
            };
            if over {
                over_ref[x] = Some(r);
            } else {
                under_ref[x] = Some(r);
            }
            gauss.push(GaussEntry { crossing: x, over });
        }
        // table label e enters passage e - 1, whose incoming edge is e - 2 here
        let relabel = |e: usize| (e + m - 2) % m;
        let pd: Vec<[usize; 4]> = pd.iter().map(|q| q.map(relabel)).collect();
        let mut code = Self {
            crossings: vec![],
            gauss: vec![gauss],
            pd,
        };
        let ps = passages(&code)?;
        let s = signs(&code, &ps)?;
        code.crossings = (0..n)
            .map(|x| CrossingRecord {
                event: x,
                over: over_ref[x].unwrap(),
                under: under_ref[x].unwrap(),
                sign: s[x] as i8,
            })
            .collect();
        Ok(code)
    }
}

#[derive(Clone, Copy)]
enum Heading {
    North,
    South,
    East,
    West,
}

/// PD code of a grid diagram's closure with horizontal segments over
/// vertical ones, oriented X to O along columns and O to X along rows.
pub fn grid_to_code(g: &GridDiagram) -> GenericCode {
    let n = g.size();
    let spans = |a: usize, b: usize, v: usize| a.min(b) < v && v < a.max(b);
    let mut ids: HashMap<(usize, usize), usize> = HashMap::new();
    let mut seen_col = vec![false; n];
    let mut gauss: Vec<Vec<GaussEntry>> = Vec::new();
    // per crossing: (component, passage, heading) for over and under
    let mut over: Vec<(usize, usize, Heading)> = Vec::new();
    let mut under: Vec<(usize, usize, Heading)> = Vec::new();

    for start in 0..n {
        if seen_col[start] {
            continue;
        }
        let ci = gauss.len();
        let mut seq = Vec::new();
        let mut col = start;
        loop {
            seen_col[col] = true;
            // vertical run X -> O in this column
            let (r0, r1) = (g.x_row(col), g.o_row(col));
            let heading = if r1 > r0 {
                Heading::North
            } else {
                Heading::South
            };
            let rows: Vec<usize> = if r1 > r0 {
                (r0 + 1..r1).collect()
            } else {
                (r1 + 1..r0).rev().collect()
            };
            for r in rows {
                if spans(g.o_col(r), g.x_col(r), col) {
                    let next = ids.len();
                    let x = *ids.entry((col, r)).or_insert(next);
                    if x == under.len() {
                        under.push((0, 0, Heading::North));
                        over.push((0, 0, Heading::East));
                    }
                    under[x] = (ci, seq.len(), heading);
                    seq.push(GaussEntry {
                        crossing: x,
                        over: false,
                    });
                }
            }
            // horizontal run O -> X in row r1
            let (c0, c1) = (col, g.x_col(r1));
            let heading = if c1 > c0 {
                Heading::East
            } else {
                Heading::West
            };
            let cols: Vec<usize> = if c1 > c0 {
                (c0 + 1..c1).collect()
            } else {
                (c1 + 1..c0).rev().collect()
            };
            for c in cols {
                if spans(g.x_row(c), g.o_row(c), r1) {
                    let next = ids.len();
                    let x = *ids.entry((c, r1)).or_insert(next);
                    if x == over.len() {
                        under.push((0, 0, Heading::North));
                        over.push((0, 0, Heading::East));
                    }
                    over[x] = (ci, seq.len(), heading);
                    seq.push(GaussEntry {
                        crossing: x,
                        over: true,
                    });
                }
            }
            col = c1;
            if col == start {
                break;
            }
        }
        gauss.push(seq);
    }

    let mut bases = Vec::new();
    let mut acc = 0;
    for s in &gauss {
        bases.push(acc);
        acc += s.len();
    }
    let edge_in = |c: usize, t: usize| bases[c] + (t + gauss[c].len() - 1) % gauss[c].len();
    let edge_out = |c: usize, t: usize| bases[c] + t;

    let mut pd = Vec::with_capacity(over.len());
    let mut crossings = Vec::with_capacity(over.len());
    for x in 0..over.len() {
        let (oc, ot, oh) = over[x];
        let (uc, ut, uh) = under[x];
        let (east, west) = match oh {
            Heading::East => (edge_out(oc, ot), edge_in(oc, ot)),
            _ => (edge_in(oc, ot), edge_out(oc, ot)),
        };
        let (u_in, u_out) = (edge_in(uc, ut), edge_out(uc, ut));
        // counterclockwise from the incoming under-edge
        let (q, sign) = match uh {
            Heading::North => (
                [u_in, east, u_out, west],
                if matches!(oh, Heading::East) { 1 } else { -1 },
            ),
            _ => (
                [u_in, west, u_out, east],
                if matches!(oh, Heading::West) { 1 } else { -1 },
            ),
        };
        pd.push(q);
        crossings.push(CrossingRecord {
            event: x,
            over: StrandRef {
                component: oc,
                passage: ot,
            },
            under: StrandRef {
                component: uc,
                passage: ut,
            },
            sign,
        });
    }
    GenericCode {
        crossings,
        gauss,
        pd,
    }
}
