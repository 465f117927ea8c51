//! The `Z^m ⊕ Z^n` grading shared by monomials and bitableaux.

use std::fmt;

/// Row multiplicities followed by column multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bidegree {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl Bidegree {
    pub fn new(rows: Vec<usize>, cols: Vec<usize>) -> Self {
        Self { rows, cols }
    }

    pub fn zero(m: usize, n: usize) -> Self {
        Self { rows: vec![0; m], cols: vec![0; n] }
    }

    pub fn m(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.cols.len()
    }

    pub fn row_total(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn col_total(&self) -> usize {
        self.cols.iter().sum()
    }

    /// Total degree, or `None` when the row and column sums disagree.
    pub fn total(&self) -> Option<usize> {
        let r = self.row_total();
        (r == self.col_total()).then_some(r)
    }

    pub fn dominates(&self, other: &Bidegree) -> bool {
        self.rows.iter().zip(&other.rows).all(|(a, b)| a >= b) && self.cols.iter().zip(&other.cols).all(|(a, b)| a >= b)
    }

    pub fn checked_sub(&self, other: &Bidegree) -> Option<Bidegree> {
        if !self.dominates(other) {
            return None;
        }
        Some(Bidegree {
            rows: self.rows.iter().zip(&other.rows).map(|(a, b)| a - b).collect(),
            cols: self.cols.iter().zip(&other.cols).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn add(&self, other: &Bidegree) -> Bidegree {
        Bidegree {
            rows: self.rows.iter().zip(&other.rows).map(|(a, b)| a + b).collect(),
            cols: self.cols.iter().zip(&other.cols).map(|(a, b)| a + b).collect(),
        }
    }

    /// All bidegrees on an `m × n` matrix with equal row and column sum `d`.
    pub fn all_of_total(m: usize, n: usize, d: usize) -> Vec<Bidegree> {
        let rows = compositions(d, m);
        let cols = compositions(d, n);
        let mut out = Vec::with_capacity(rows.len() * cols.len());
        for r in &rows {
            for c in &cols {
                out.push(Bidegree::new(r.clone(), c.clone()));
            }
        }
        out
    }

    /// All bidegrees of total degree `0..=max_total`, by increasing total degree.
    pub fn all_up_to(m: usize, n: usize, max_total: usize) -> Vec<Bidegree> {
        (0..=max_total).flat_map(|d| Self::all_of_total(m, n, d)).collect()
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "({};{})", join(&self.rows), join(&self.cols))
    }
}

/// Weak compositions of `total` into `parts` nonnegative summands, in lexicographically
/// decreasing order.
pub fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn rec(total: usize, parts: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in (0..=total).rev() {
            prefix.push(first);
            rec(total - first, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(total, parts, &mut Vec::with_capacity(parts), &mut out);
    out
}
