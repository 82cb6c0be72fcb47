use crate::error::{Error, Result};

/// Rectangular (grid) diagram of size `n`.
///
/// Column `i` (0-based) holds an X marker in row `xs[i]` and an O marker in
/// row `os[i]`; rows are numbered from the bottom. Columns are traversed from
/// X to O, rows from O to X, and horizontal segments pass over vertical ones.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GridDiagram {
    xs: Vec<usize>,
    os: Vec<usize>,
}

fn is_permutation(v: &[usize]) -> bool {
    let mut seen = vec![false; v.len()];
    for &x in v {
        if x >= v.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

impl GridDiagram {
    /// Builds a grid from 1-based row lists, as written in grid files.
    pub fn new(xs: &[usize], os: &[usize]) -> Result<Self> {
        let n = xs.len();
        if n < 2 {
            return Err(Error::InvalidGrid(format!("size {n} is below 2")));
        }
        if os.len() != n {
            return Err(Error::InvalidGrid(format!(
                "X row has {n} entries, O row has {}",
                os.len()
            )));
        }
        if xs.iter().chain(os).any(|&r| r == 0) {
            return Err(Error::InvalidGrid("rows are numbered from 1".into()));
        }
        let xs: Vec<usize> = xs.iter().map(|r| r - 1).collect();
        let os: Vec<usize> = os.iter().map(|r| r - 1).collect();
        if !is_permutation(&xs) || !is_permutation(&os) {
            return Err(Error::InvalidGrid(
                "X and O rows must each be permutations of 1..n".into(),
            ));
        }
        if let Some(c) = (0..n).find(|&c| xs[c] == os[c]) {
            return Err(Error::InvalidGrid(format!(
                "column {} holds both markers",
                c + 1
            )));
        }
        Ok(Self { xs, os })
    }

    pub fn size(&self) -> usize {
        self.xs.len()
    }

    /// 0-based row of the X marker in 0-based column `c`.
    pub fn x_row(&self, c: usize) -> usize {
        self.xs[c]
    }

    pub fn o_row(&self, c: usize) -> usize {
        self.os[c]
    }

    /// Column of the X marker in row `r`.
    pub fn x_col(&self, r: usize) -> usize {
        self.xs.iter().position(|&x| x == r).unwrap()
    }

    pub fn o_col(&self, r: usize) -> usize {
        self.os.iter().position(|&o| o == r).unwrap()
    }

    /// 1-based rows, the file representation.
    pub fn x_rows(&self) -> Vec<usize> {
        self.xs.iter().map(|r| r + 1).collect()
    }

    pub fn o_rows(&self) -> Vec<usize> {
        self.os.iter().map(|r| r + 1).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_shared_cells() {
        assert!(matches!(
            GridDiagram::new(&[1, 2], &[1, 2]),
            Err(Error::InvalidGrid(_))
        ));
        assert!(GridDiagram::new(&[2, 1], &[1, 2]).is_ok());
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(GridDiagram::new(&[2, 2, 1], &[1, 3, 2]).is_err());
        assert!(GridDiagram::new(&[1], &[1]).is_err());
        assert!(GridDiagram::new(&[2, 3], &[1, 2]).is_err());
    }
}
