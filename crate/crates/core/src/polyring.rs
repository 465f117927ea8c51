//! Sparse polynomials in the entries `x_ij` of the generic matrix.
//!
//! Monomials are ordered by the lexicographic order with variable priority
//! `x_11 > x_12 > .. > x_1n > x_21 > .. > x_mn`. Under this order the leading monomial of
//! every minor with increasing indices is the product of its main diagonal, so it serves
//! as the diagonal order throughout the crate.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::grading::{compositions, Bidegree};
use crate::tableaux::{Bitableau, Minor};

pub type Rational = num_rational::BigRational;

/// A variable `x_ij`, 1-based.
pub type Var = (usize, usize);

/// A monomial in the `x_ij`, stored as variables in increasing `(i, j)` order with
/// positive exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Vec<(Var, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(i: usize, j: usize) -> Self {
        Monomial { exps: vec![((i, j), 1)] }
    }

    pub fn from_pairs<I: IntoIterator<Item = (Var, u32)>>(pairs: I) -> Self {
        let mut map: BTreeMap<Var, u32> = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_default() += e;
        }
        Monomial { exps: map.into_iter().filter(|&(_, e)| e > 0).collect() }
    }

    pub fn from_vars<I: IntoIterator<Item = Var>>(vars: I) -> Self {
        Self::from_pairs(vars.into_iter().map(|v| (v, 1)))
    }

    /// Monomial with exponent matrix `rows` (row-major, `m × n`).
    pub fn from_matrix(matrix: &[Vec<u32>]) -> Self {
        let mut exps = Vec::new();
        for (i, row) in matrix.iter().enumerate() {
            for (j, &e) in row.iter().enumerate() {
                if e > 0 {
                    exps.push(((i + 1, j + 1), e));
                }
            }
        }
        Monomial { exps }
    }

    pub fn exponents(&self) -> &[(Var, u32)] {
        &self.exps
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.exps.binary_search_by(|(w, _)| w.cmp(&v)).map_or(0, |k| self.exps[k].1)
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.exps.iter().map(|&(_, e)| e as usize).sum()
    }

    pub fn bidegree(&self, m: usize, n: usize) -> Bidegree {
        let mut d = Bidegree::zero(m, n);
        for &((i, j), e) in &self.exps {
            d.rows[i - 1] += e as usize;
            d.cols[j - 1] += e as usize;
        }
        d
    }

    pub fn fits(&self, m: usize, n: usize) -> bool {
        self.exps.iter().all(|&((i, j), _)| i <= m && j <= n)
    }

    /// Variables with multiplicity, in increasing `(i, j)` order.
    pub fn factors(&self) -> Vec<Var> {
        self.exps.iter().flat_map(|&(v, e)| std::iter::repeat_n(v, e as usize)).collect()
    }

    fn merge(&self, other: &Monomial, f: impl Fn(u32, u32) -> u32) -> Monomial {
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut a, mut b) = (self.exps.iter().peekable(), other.exps.iter().peekable());
        loop {
            let next = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(&&(va, ea)), None) => {
                    a.next();
                    (va, f(ea, 0))
                }
                (None, Some(&&(vb, eb))) => {
                    b.next();
                    (vb, f(0, eb))
                }
                (Some(&&(va, ea)), Some(&&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => {
                        a.next();
                        (va, f(ea, 0))
                    }
                    Ordering::Greater => {
                        b.next();
                        (vb, f(0, eb))
                    }
                    Ordering::Equal => {
                        a.next();
                        b.next();
                        (va, f(ea, eb))
                    }
                },
            };
            if next.1 > 0 {
                exps.push(next);
            }
        }
        Monomial { exps }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.merge(other, u32::max)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        self.merge(other, u32::min)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().all(|&(v, e)| other.exponent(v) >= e)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        self.divides(other).then(|| other.merge(self, |a, b| a - b))
    }

    pub fn pow(&self, k: u32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial { exps: self.exps.iter().map(|&(v, e)| (v, e * k)).collect() }
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&(_, e)| e == 1)
    }
}

impl Mul for &Monomial {
    type Output = Monomial;

    fn mul(self, rhs: &Monomial) -> Monomial {
        self.merge(rhs, |a, b| a + b)
    }
}

impl Ord for Monomial {
    /// Lexicographic with `x_11` the most significant variable.
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.exps.iter();
        let mut b = other.exps.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => {
                    if va != vb {
                        return vb.cmp(&va);
                    }
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                }
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .exps
            .iter()
            .map(|&((i, j), e)| if e == 1 { format!("x[{i},{j}]") } else { format!("x[{i},{j}]^{e}") })
            .collect();
        f.write_str(&parts.join("*"))
    }
}

impl FromStr for Monomial {
    type Err = Error;

    /// Accepts `x[i,j]^e` factors joined by `*`, and the compact `x11^2*x23` form for
    /// single-digit indices.
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() || s == "1" {
            return Ok(Monomial::one());
        }
        let bad = |t: &str| Error::Parse(format!("bad monomial factor {t:?}"));
        let mut pairs = Vec::new();
        for tok in s.split('*') {
            let (base, exp) = match tok.split_once('^') {
                Some((b, e)) => (b, e.parse::<u32>().map_err(|_| bad(tok))?),
                None => (tok, 1),
            };
            let body = base.strip_prefix('x').ok_or_else(|| bad(tok))?;
            let (i, j) = if let Some(inner) = body.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
                let (i, j) = inner.split_once(',').ok_or_else(|| bad(tok))?;
                (i.parse::<usize>().map_err(|_| bad(tok))?, j.parse::<usize>().map_err(|_| bad(tok))?)
            } else {
                let digits: Vec<usize> = body
                    .chars()
                    .map(|c| c.to_digit(10).map(|d| d as usize))
                    .collect::<Option<_>>()
                    .ok_or_else(|| bad(tok))?;
                match digits[..] {
                    [i, j] => (i, j),
                    _ => return Err(bad(tok)),
                }
            };
            if i == 0 || j == 0 {
                return Err(bad(tok));
            }
            pairs.push(((i, j), exp));
        }
        Ok(Monomial::from_pairs(pairs))
    }
}

pub fn bidegree(mono: &Monomial, m: usize, n: usize) -> Bidegree {
    mono.bidegree(m, n)
}

/// All monomials of the given bidegree, that is, all nonnegative integer matrices with
/// the prescribed row and column sums. Sorted increasingly in the monomial order.
pub fn monomials_of_bidegree(b: &Bidegree) -> Vec<Monomial> {
    fn rec(row: usize, b: &Bidegree, cols_left: &mut Vec<usize>, acc: &mut Vec<Vec<u32>>, out: &mut Vec<Monomial>) {
        let m = b.m();
        if row == m {
            if cols_left.iter().all(|&c| c == 0) {
                out.push(Monomial::from_matrix(acc));
            }
            return;
        }
        if row + 1 == m {
            if cols_left.iter().sum::<usize>() == b.rows[row] {
                acc.push(cols_left.iter().map(|&c| c as u32).collect());
                out.push(Monomial::from_matrix(acc));
                acc.pop();
            }
            return;
        }
        for comp in compositions(b.rows[row], b.n()) {
            if comp.iter().zip(cols_left.iter()).all(|(x, c)| x <= c) {
                for (c, x) in cols_left.iter_mut().zip(&comp) {
                    *c -= x;
                }
                acc.push(comp.iter().map(|&x| x as u32).collect());
                rec(row + 1, b, cols_left, acc, out);
                acc.pop();
                for (c, x) in cols_left.iter_mut().zip(&comp) {
                    *c += x;
                }
            }
        }
    }
    let mut out = Vec::new();
    if b.total().is_none() {
        return out;
    }
    if b.m() == 0 || b.n() == 0 {
        if b.row_total() == 0 {
            out.push(Monomial::one());
        }
        return out;
    }
    rec(0, b, &mut b.cols.clone(), &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// All monomials of total degree `d` in the variables of an `m × n` matrix.
pub fn monomials_of_degree(m: usize, n: usize, d: usize) -> Vec<Monomial> {
    let vars: Vec<Var> = (1..=m).flat_map(|i| (1..=n).map(move |j| (i, j))).collect();
    compositions(d, vars.len())
        .into_iter()
        .map(|c| Monomial::from_pairs(vars.iter().copied().zip(c.into_iter().map(|e| e as u32))))
        .collect()
}

/// Number of nonnegative integer matrices with the given margins.
pub fn count_monomials(b: &Bidegree) -> u64 {
    fn rec(row: usize, rows: &[usize], cols: &mut [usize], memo: &mut BTreeMap<(usize, Vec<usize>), u64>) -> u64 {
        if row + 1 >= rows.len() {
            return if row == rows.len() {
                u64::from(cols.iter().all(|&c| c == 0))
            } else {
                u64::from(cols.iter().sum::<usize>() == rows[row])
            };
        }
        let key = (row, cols.to_vec());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let mut total = 0;
        for comp in compositions(rows[row], cols.len()) {
            if comp.iter().zip(cols.iter()).all(|(x, c)| x <= c) {
                for (c, x) in cols.iter_mut().zip(&comp) {
                    *c -= x;
                }
                total += rec(row + 1, rows, cols, memo);
                for (c, x) in cols.iter_mut().zip(&comp) {
                    *c += x;
                }
            }
        }
        memo.insert(key, total);
        total
    }
    if b.total().is_none() {
        return 0;
    }
    if b.m() == 0 || b.n() == 0 {
        return u64::from(b.row_total() == 0);
    }
    rec(0, &b.rows, &mut b.cols.clone(), &mut BTreeMap::new())
}

/// A polynomial with exact rational coefficients; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Self::monomial(Monomial::one(), Rational::one())
    }

    pub fn monomial(mono: Monomial, coeff: Rational) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(mono, coeff);
        p
    }

    pub fn add_term(&mut self, mono: Monomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mono: &Monomial) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_monomial(&self) -> Result<&Monomial> {
        self.leading_term().map(|(m, _)| m).ok_or(Error::ZeroPolynomial)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn mul_monomial(&self, w: &Monomial) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(m, a)| (m * w, a.clone())).collect() }
    }

    /// Whether every term has the same bidegree.
    pub fn is_homogeneous(&self, m: usize, n: usize) -> bool {
        let mut degs = self.terms.keys().map(|t| t.bidegree(m, n));
        match degs.next() {
            None => true,
            Some(first) => degs.all(|d| d == first),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }
}

pub fn leading_monomial(p: &Polynomial) -> Result<Monomial> {
    p.leading_monomial().cloned()
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma * mb, ca * cb);
            }
        }
        out
    }
}

fn write_coeff_term(f: &mut fmt::Formatter<'_>, c: &Rational, m: &Monomial) -> fmt::Result {
    let abs = c.abs();
    if m.is_one() {
        write!(f, "{abs}")
    } else if abs.is_one() {
        write!(f, "{m}")
    } else {
        write!(f, "{abs}*{m}")
    }
}

impl fmt::Display for Polynomial {
    /// Terms in descending monomial order, joined by ` + ` and ` - `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            write_coeff_term(f, c, m)?;
        }
        Ok(())
    }
}

/// Permutations of `0..t` paired with their signs, by Heap's algorithm.
pub fn signed_permutations(t: usize) -> Vec<(Vec<usize>, i64)> {
    let mut perm: Vec<usize> = (0..t).collect();
    let mut out = vec![(perm.clone(), 1)];
    let mut c = vec![0usize; t];
    let mut sign = 1;
    let mut i = 0;
    while i < t {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            sign = -sign;
            out.push((perm.clone(), sign));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// The Leibniz expansion of a minor.
pub fn expand_minor(minor: &Minor) -> Polynomial {
    let t = minor.size();
    let mut p = Polynomial::zero();
    for (perm, sign) in signed_permutations(t) {
        let mono = Monomial::from_vars((0..t).map(|k| (minor.rows()[k], minor.cols()[perm[k]])));
        p.add_term(mono, Rational::from_integer(BigInt::from(sign)));
    }
    p
}

/// The polynomial value of a product of minors.
pub fn expand_bitableau(d: &Bitableau) -> Polynomial {
    d.factors().iter().fold(Polynomial::one(), |acc, f| &acc * &expand_minor(f))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(s: &str) -> Monomial {
        s.parse().unwrap()
    }

    #[test]
    fn two_by_two_determinant() {
        let p = expand_bitableau(&"[1 2|1 2]".parse().unwrap());
        assert_eq!(p.to_string(), "x[1,1]*x[2,2] - x[1,2]*x[2,1]");
        assert_eq!(leading_monomial(&p).unwrap(), mono("x11*x22"));
        assert_eq!(expand_bitableau(&Bitableau::empty()), Polynomial::one());
    }

    #[test]
    fn three_rowed_minor_leads_with_diagonal() {
        let p = expand_bitableau(&"[1 2 3|1 2 3]".parse().unwrap());
        assert_eq!(p.len(), 6);
        assert_eq!(leading_monomial(&p).unwrap(), mono("x11*x22*x33"));
    }

    #[test]
    fn plucker_relation_by_expansion() {
        let lhs = expand_bitableau(&"[1 2|2 3]*[1 2|1 4]".parse().unwrap());
        let a = expand_bitableau(&"[1 2|1 3]*[1 2|2 4]".parse().unwrap());
        let b = expand_bitableau(&"[1 2|1 2]*[1 2|3 4]".parse().unwrap());
        assert_eq!(lhs, &a - &b);
    }

    #[test]
    fn leading_monomial_of_zero_fails() {
        assert_eq!(leading_monomial(&Polynomial::zero()), Err(Error::ZeroPolynomial));
        let single = Polynomial::monomial(mono("x12^2"), Rational::one());
        assert_eq!(leading_monomial(&single).unwrap(), mono("x12^2"));
    }

    #[test]
    fn bidegree_examples() {
        assert_eq!(bidegree(&mono("x11*x22"), 2, 2), Bidegree::new(vec![1, 1], vec![1, 1]));
        assert_eq!(bidegree(&mono("x11^2*x12"), 2, 2), Bidegree::new(vec![3, 0], vec![2, 1]));
    }

    #[test]
    fn monomial_text_round_trip() {
        let m = mono("x[1,1]^2*x[2,3]");
        assert_eq!(m.to_string(), "x[1,1]^2*x[2,3]");
        assert_eq!(mono("1"), Monomial::one());
        assert_eq!(Monomial::one().to_string(), "1");
        assert!("y11".parse::<Monomial>().is_err());
    }

    #[test]
    fn lex_order_prefers_earlier_variables() {
        assert!(mono("x11") > mono("x12^5"));
        assert!(mono("x11*x23") > mono("x11*x32"));
        assert!(mono("x12") > Monomial::one());
    }

    #[test]
    fn monomial_counts_match_enumeration() {
        for b in Bidegree::all_up_to(3, 2, 4) {
            assert_eq!(count_monomials(&b), monomials_of_bidegree(&b).len() as u64, "{b}");
        }
        assert_eq!(monomials_of_degree(2, 2, 2).len(), 10);
    }

    #[test]
    fn lcm_gcd_division() {
        let a = mono("x11^2*x12");
        let b = mono("x12^3*x22");
        assert_eq!(a.lcm(&b), mono("x11^2*x12^3*x22"));
        assert_eq!(a.gcd(&b), mono("x12"));
        assert_eq!(mono("x12").quotient_of(&b), Some(mono("x12^2*x22")));
        assert_eq!(a.quotient_of(&b), None);
    }
}
