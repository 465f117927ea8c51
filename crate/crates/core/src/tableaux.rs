//! Minors, shapes and bitableaux.
//!
//! A minor `[a_1 .. a_t | b_1 .. b_t]` is the determinant of the submatrix of the generic
//! `m × n` matrix on rows `a` and columns `b`. A bitableau is a product of minors with
//! weakly decreasing sizes; it is drawn as a pair of tableaux, the row indices on the left
//! and the column indices on the right.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::grading::Bidegree;

/// Default upper limit on the number of bitableaux produced by a single enumeration.
pub const DEFAULT_ENUM_CAP: usize = 1_000_000;

/// A weakly decreasing sequence of positive part sizes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Shape(Vec<usize>);

impl Shape {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(parts));
        }
        Ok(Shape(parts))
    }

    pub fn empty() -> Self {
        Shape(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of parts `v`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// `s_i`, with `s_i = 0` past the last part. Rows are 1-based.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// The conjugate shape `s'_j = #{i : s_i >= j}`.
    pub fn transpose(&self) -> Shape {
        let width = self.0.first().copied().unwrap_or(0);
        Shape((1..=width).map(|j| self.0.iter().filter(|&&s| s >= j).count()).collect())
    }

    /// The distinct parts `t_1 > .. > t_u` paired with `e_i = max{j : s_j = t_i}`.
    pub fn distinct_parts(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for (j, &s) in self.0.iter().enumerate() {
            match out.last_mut() {
                Some((t, e)) if *t == s => *e = j + 1,
                _ => out.push((s, j + 1)),
            }
        }
        out
    }

    /// Shape with `count` parts all equal to `part`.
    pub fn rectangle(part: usize, count: usize) -> Shape {
        Shape(vec![part; count])
    }

    pub fn check_ambient(&self, m: usize, n: usize) -> Result<()> {
        let bound = m.min(n);
        match self.0.iter().find(|&&s| s > bound) {
            Some(&part) => Err(Error::ShapeExceedsAmbient { part, bound }),
            None => Ok(()),
        }
    }

    /// All shapes with total `d` and parts at most `max_part`, in decreasing lexicographic order.
    pub fn partitions(d: usize, max_part: usize) -> Vec<Shape> {
        fn rec(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Shape>) {
            if rest == 0 {
                out.push(Shape(prefix.clone()));
                return;
            }
            for p in (1..=max.min(rest)).rev() {
                prefix.push(p);
                rec(rest - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(d, max_part, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Shape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Shape::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|e| Error::Parse(format!("shape part {p:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Shape::new(parts)
    }
}

/// A minor `[rows | cols]`, possibly empty (the constant 1).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Minor {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

fn check_increasing(v: &[usize], bound: Option<usize>) -> Result<()> {
    if v.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::NonIncreasingIndices(v.to_vec()));
    }
    for &index in v {
        if index == 0 || bound.is_some_and(|b| index > b) {
            return Err(Error::IndexOutOfRange { index, bound: bound.unwrap_or(usize::MAX) });
        }
    }
    Ok(())
}

impl Minor {
    /// A minor with 1-based strictly increasing indices and no ambient bound.
    pub fn new(rows: Vec<usize>, cols: Vec<usize>) -> Result<Self> {
        check_increasing(&rows, None)?;
        check_increasing(&cols, None)?;
        if rows.len() != cols.len() {
            return Err(Error::LengthMismatch { rows: rows.len(), cols: cols.len() });
        }
        Ok(Minor { rows, cols })
    }

    pub fn empty() -> Self {
        Minor { rows: Vec::new(), cols: Vec::new() }
    }

    /// The row-initial minor `[1 .. s | cols]`.
    pub fn row_initial(cols: Vec<usize>) -> Result<Self> {
        Minor::new((1..=cols.len()).collect(), cols)
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn fits(&self, m: usize, n: usize) -> bool {
        self.rows.last().is_none_or(|&r| r <= m) && self.cols.last().is_none_or(|&c| c <= n)
    }

    /// `self ≤ other` in the order controlling standardness: `self` is at least as large
    /// and is componentwise bounded by `other` on both index lists.
    pub fn leq(&self, other: &Minor) -> bool {
        self.size() >= other.size()
            && (0..other.size()).all(|i| self.rows[i] <= other.rows[i] && self.cols[i] <= other.cols[i])
    }

    /// Whether the first `s` row indices are `1, 2, .., s`.
    pub fn starts_row_initial(&self, s: usize) -> bool {
        self.size() >= s && self.rows[..s].iter().enumerate().all(|(j, &a)| a == j + 1)
    }
}

/// Validated construction inside an `m × n` matrix.
pub fn make_minor(rows: Vec<usize>, cols: Vec<usize>, m: usize, n: usize) -> Result<Minor> {
    check_increasing(&rows, Some(m))?;
    check_increasing(&cols, Some(n))?;
    Minor::new(rows, cols)
}

pub fn minor_leq(a: &Minor, b: &Minor) -> bool {
    a.leq(b)
}

impl Ord for Minor {
    fn cmp(&self, other: &Self) -> Ordering {
        other.size().cmp(&self.size()).then_with(|| self.rows.cmp(&other.rows)).then_with(|| self.cols.cmp(&other.cols))
    }
}

impl PartialOrd for Minor {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn join(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

impl fmt::Display for Minor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}|{}]", join(&self.rows), join(&self.cols))
    }
}

fn parse_indices(s: &str) -> Result<Vec<usize>> {
    s.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|e| Error::Parse(format!("index {t:?}: {e}"))))
        .collect()
}

impl FromStr for Minor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("minor must be bracketed: {s:?}")))?;
        let (rows, cols) = inner.split_once('|').ok_or_else(|| Error::Parse(format!("minor lacks '|': {s:?}")))?;
        Minor::new(parse_indices(rows)?, parse_indices(cols)?)
    }
}

/// A product of minors `δ_1 ⋯ δ_w` with `|δ_1| ≥ .. ≥ |δ_w|`.
///
/// Empty factors are dropped on construction; use [`Bitableau::padded`] to view the
/// product with trailing `[|]` factors. Factors of equal size keep their given order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Bitableau {
    factors: Vec<Minor>,
}

impl Bitableau {
    pub fn new(mut factors: Vec<Minor>) -> Self {
        factors.retain(|f| !f.is_empty());
        factors.sort_by_key(|f| std::cmp::Reverse(f.size()));
        Bitableau { factors }
    }

    pub fn empty() -> Self {
        Bitableau::default()
    }

    /// Build from left and right tableaux given row by row.
    pub fn from_tableaux(left: &[Vec<usize>], right: &[Vec<usize>]) -> Result<Self> {
        if left.len() != right.len() {
            return Err(Error::LengthMismatch { rows: left.len(), cols: right.len() });
        }
        let factors =
            left.iter().zip(right).map(|(l, r)| Minor::new(l.clone(), r.clone())).collect::<Result<Vec<_>>>()?;
        Ok(Bitableau::new(factors))
    }

    pub fn factors(&self) -> &[Minor] {
        &self.factors
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// The factors followed by empty minors up to length `w`.
    pub fn padded(&self, w: usize) -> Vec<Minor> {
        let mut out = self.factors.clone();
        while out.len() < w {
            out.push(Minor::empty());
        }
        out
    }

    pub fn shape(&self) -> Shape {
        Shape(self.factors.iter().map(Minor::size).collect())
    }

    /// Number of boxes, which is the total degree of the product.
    pub fn degree(&self) -> usize {
        self.factors.iter().map(Minor::size).sum()
    }

    pub fn fits(&self, m: usize, n: usize) -> bool {
        self.factors.iter().all(|f| f.fits(m, n))
    }

    /// Row and column multiplicities, the content of the bitableau.
    pub fn content(&self, m: usize, n: usize) -> Bidegree {
        let mut d = Bidegree::zero(m, n);
        for f in &self.factors {
            for &a in f.rows() {
                d.rows[a - 1] += 1;
            }
            for &b in f.cols() {
                d.cols[b - 1] += 1;
            }
        }
        d
    }

    pub fn left_tableau(&self) -> Vec<Vec<usize>> {
        self.factors.iter().map(|f| f.rows.clone()).collect()
    }

    pub fn right_tableau(&self) -> Vec<Vec<usize>> {
        self.factors.iter().map(|f| f.cols.clone()).collect()
    }

    pub fn is_standard(&self) -> bool {
        self.factors.windows(2).all(|w| w[0].leq(&w[1]))
    }

    /// Whether for `i = 1..v` the `i`-th factor begins with rows `1..s_i`.
    pub fn contains_superstandard(&self, shape: &Shape) -> bool {
        self.factors.len() >= shape.len()
            && shape.parts().iter().zip(&self.factors).all(|(&s, f)| f.starts_row_initial(s))
    }

    /// Whether every factor is row-initial with sizes given by `shape` exactly.
    pub fn is_row_superstandard_of(&self, shape: &Shape) -> bool {
        self.shape() == *shape && self.factors.iter().all(|f| f.starts_row_initial(f.size()))
    }
}

pub fn is_standard(d: &Bitableau) -> bool {
    d.is_standard()
}

pub fn contains_superstandard(sigma: &Bitableau, shape: &Shape, m: usize, n: usize) -> Result<bool> {
    shape.check_ambient(m, n)?;
    Ok(sigma.contains_superstandard(shape))
}

impl fmt::Display for Bitableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("[|]");
        }
        let parts: Vec<String> = self.factors.iter().map(|m| m.to_string()).collect();
        f.write_str(&parts.join("*"))
    }
}

impl FromStr for Bitableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(Bitableau::empty());
        }
        let factors = s.split('*').map(str::parse::<Minor>).collect::<Result<Vec<_>>>()?;
        Ok(Bitableau::new(factors))
    }
}

/// Row-strict, column-weak fillings of `shape` whose entry `k` occurs `content[k-1]` times.
pub fn fillings(shape: &[usize], content: &[usize]) -> Vec<Vec<Vec<usize>>> {
    struct Search<'a> {
        shape: &'a [usize],
        remaining: Vec<usize>,
        grid: Vec<Vec<usize>>,
        out: Vec<Vec<Vec<usize>>>,
    }
    impl Search<'_> {
        fn go(&mut self, row: usize, col: usize) {
            if row == self.shape.len() {
                self.out.push(self.grid.clone());
                return;
            }
            if col == self.shape[row] {
                self.go(row + 1, 0);
                return;
            }
            let lo_left = if col > 0 { self.grid[row][col - 1] + 1 } else { 1 };
            let lo_up = if row > 0 { self.grid[row - 1][col] } else { 1 };
            let lo = lo_left.max(lo_up);
            // room for the rest of the row, which must strictly increase
            let need = self.shape[row] - col - 1;
            let hi = self.remaining.len().saturating_sub(need);
            for v in lo..=hi {
                if self.remaining[v - 1] == 0 {
                    continue;
                }
                self.remaining[v - 1] -= 1;
                self.grid[row].push(v);
                self.go(row, col + 1);
                self.grid[row].pop();
                self.remaining[v - 1] += 1;
            }
        }
    }
    if shape.iter().sum::<usize>() != content.iter().sum::<usize>() {
        return Vec::new();
    }
    let mut search =
        Search { shape, remaining: content.to_vec(), grid: vec![Vec::new(); shape.len()], out: Vec::new() };
    search.go(0, 0);
    search.out
}

/// All standard bitableaux on an `m × n` matrix with the given content.
pub fn enumerate_standard(m: usize, n: usize, bidegree: &Bidegree, cap: usize) -> Result<Vec<Bitableau>> {
    let Some(d) = bidegree.total() else {
        return Ok(Vec::new());
    };
    let mut out = Vec::new();
    for shape in Shape::partitions(d, m.min(n)) {
        let lefts = fillings(shape.parts(), &bidegree.rows);
        if lefts.is_empty() {
            continue;
        }
        let rights = fillings(shape.parts(), &bidegree.cols);
        if out.len() + lefts.len() * rights.len() > cap {
            return Err(Error::DegreeBoundExceeded { cap });
        }
        for l in &lefts {
            for r in &rights {
                out.push(Bitableau::from_tableaux(l, r)?);
            }
        }
    }
    out.sort();
    Ok(out)
}

/// All minors of an `m × n` matrix, including the empty one.
pub fn all_minors(m: usize, n: usize) -> Vec<Minor> {
    let mut out = Vec::new();
    for t in 0..=m.min(n) {
        for rows in subsets(m, t) {
            for cols in subsets(n, t) {
                out.push(Minor { rows: rows.clone(), cols });
            }
        }
    }
    out
}

/// Strictly increasing `t`-subsets of `1..=n` in lexicographic order.
pub fn subsets(n: usize, t: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, t: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == t {
            out.push(prefix.clone());
            return;
        }
        for x in start..=n {
            if n - x + 1 < t - prefix.len() {
                break;
            }
            prefix.push(x);
            rec(x + 1, n, t, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, t, &mut Vec::new(), &mut out);
    out
}

/// All row-superstandard products `[1..s_1|c_1]⋯[1..s_v|c_v]` of the given shape, with
/// every choice of column sets and no standardness filter.
pub fn row_superstandard(n: usize, shape: &Shape) -> Vec<Bitableau> {
    let mut acc: Vec<Vec<Minor>> = vec![Vec::new()];
    for &s in shape.parts() {
        let choices = subsets(n, s);
        let mut next = Vec::with_capacity(acc.len() * choices.len());
        for prefix in &acc {
            for cols in &choices {
                let mut p = prefix.clone();
                p.push(Minor { rows: (1..=s).collect(), cols: cols.clone() });
                next.push(p);
            }
        }
        acc = next;
    }
    acc.into_iter().map(Bitableau::new).collect()
}
