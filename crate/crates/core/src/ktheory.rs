//! Multigraded Hilbert series and K-polynomials over `Z^m ⊕ Z^n`, where `u_i` tracks row
//! degrees and `v_j` column degrees, and their expansion in Schur polynomials of the `v`.
//!
//! `σ_S` here is the content generating function of fillings of `S` with strictly increasing
//! rows and weakly increasing columns, i.e. the classical Schur polynomial of the transpose.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::grading::{compositions, Bidegree};
use crate::ideals::MonomialIdeal;
use crate::polyring::{count_monomials, Monomial};
use crate::report::{Report, ReportLine};
use crate::tableaux::{fillings, Shape};

/// Default limit on the number of generators in a Taylor sum.
pub const DEFAULT_GEN_CAP: usize = 20;

/// Exponent vectors in the `u` and `v`, with trailing zeros dropped.
pub type Exponent = (Vec<i64>, Vec<i64>);

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn add_vecs(a: &[i64], b: &[i64]) -> Vec<i64> {
    let len = a.len().max(b.len());
    let at = |v: &[i64], i: usize| v.get(i).copied().unwrap_or(0);
    trim((0..len).map(|i| at(a, i) + at(b, i)).collect())
}

/// An integer Laurent polynomial in `u_1, u_2, …` and `v_1, v_2, …`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPolynomial {
    terms: BTreeMap<Exponent, i64>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(&[], &[], 1)
    }

    pub fn term(u: &[i64], v: &[i64], c: i64) -> Self {
        let mut p = Self::zero();
        p.add_term((trim(u.to_vec()), trim(v.to_vec())), c);
        p
    }

    /// `u^{row sums} v^{column sums}` of a monomial.
    pub fn from_monomial(w: &Monomial, m: usize, n: usize, c: i64) -> Self {
        let b = w.bidegree(m, n);
        let cast = |v: &[usize]| v.iter().map(|&x| x as i64).collect::<Vec<_>>();
        Self::term(&cast(&b.rows), &cast(&b.cols), c)
    }

    fn add_term(&mut self, e: Exponent, c: i64) {
        if c == 0 {
            return;
        }
        let slot = self.terms.entry(e.clone()).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &i64)> {
        self.terms.iter()
    }

    pub fn coeff(&self, u: &[i64], v: &[i64]) -> i64 {
        self.terms.get(&(trim(u.to_vec()), trim(v.to_vec()))).copied().unwrap_or(0)
    }

    pub fn scale(&self, c: i64) -> Self {
        let mut out = Self::zero();
        for (e, x) in &self.terms {
            out.add_term(e.clone(), x * c);
        }
        out
    }

    /// Whether the polynomial is unchanged by every permutation of `v_1, …, v_n`.
    pub fn is_symmetric_in_v(&self, n: usize) -> bool {
        (1..n).all(|j| {
            let mut swapped = Self::zero();
            for ((u, v), c) in &self.terms {
                let mut v = v.clone();
                v.resize(n.max(v.len()), 0);
                v.swap(j - 1, j);
                swapped.add_term((u.clone(), trim(v)), *c);
            }
            swapped == *self
        })
    }

    /// The largest `v` exponent in lexicographic order with its coefficient in the `u`.
    fn leading_v(&self) -> Option<(Vec<i64>, LaurentPolynomial)> {
        let lead = self.terms.keys().map(|(_, v)| v).max()?.clone();
        let mut coeff = Self::zero();
        for ((u, v), c) in &self.terms {
            if *v == lead {
                coeff.add_term((u.clone(), Vec::new()), *c);
            }
        }
        Some((lead, coeff))
    }

    /// Terms of lowest total `u` degree.
    pub fn lowest_u_terms(&self) -> Vec<(Exponent, i64)> {
        let deg = |e: &Exponent| e.0.iter().sum::<i64>();
        let Some(low) = self.terms.keys().map(deg).min() else {
            return Vec::new();
        };
        self.terms.iter().filter(|(e, _)| deg(e) == low).map(|(e, c)| (e.clone(), *c)).collect()
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), *c);
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn neg(self) -> LaurentPolynomial {
        self.scale(-1)
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for ((u1, v1), c1) in &self.terms {
            for ((u2, v2), c2) in &rhs.terms {
                out.add_term((add_vecs(u1, u2), add_vecs(v1, v2)), c1 * c2);
            }
        }
        out
    }
}

fn write_factors(f: &mut fmt::Formatter<'_>, name: &str, exps: &[i64], first: &mut bool) -> fmt::Result {
    for (i, &e) in exps.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !*first {
            f.write_str("*")?;
        }
        *first = false;
        if e == 1 {
            write!(f, "{name}[{}]", i + 1)?;
        } else {
            write!(f, "{name}[{}]^{e}", i + 1)?;
        }
    }
    Ok(())
}

/// Terms as `+c*u[i]^e*v[j]` by increasing total degree, unit coefficients elided.
fn write_signed_terms(f: &mut fmt::Formatter<'_>, p: &LaurentPolynomial) -> fmt::Result {
    if p.is_zero() {
        return f.write_str("0");
    }
    let mut keys: Vec<&Exponent> = p.terms.keys().collect();
    keys.sort_by(|a, b| {
        let deg = |e: &Exponent| e.0.iter().sum::<i64>() + e.1.iter().sum::<i64>();
        deg(a).cmp(&deg(b)).then_with(|| b.cmp(a))
    });
    for (k, e) in keys.into_iter().enumerate() {
        let c = p.terms[e];
        if k > 0 {
            f.write_str(" ")?;
        }
        f.write_str(if c < 0 { "-" } else { "+" })?;
        let constant = e.0.is_empty() && e.1.is_empty();
        if c.abs() != 1 || constant {
            write!(f, "{}", c.abs())?;
            if !constant {
                f.write_str("*")?;
            }
        }
        let mut first = true;
        write_factors(f, "u", &e.0, &mut first)?;
        write_factors(f, "v", &e.1, &mut first)?;
    }
    Ok(())
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_signed_terms(f, self)
    }
}

/// `σ_S(v_1, …, v_n)`.
pub fn schur_poly(shape: &Shape, n: usize) -> Result<LaurentPolynomial> {
    if let Some(&part) = shape.parts().iter().find(|&&p| p > n) {
        return Err(Error::ShapeTooWide { part, n });
    }
    let mut out = LaurentPolynomial::zero();
    for content in compositions(shape.total(), n) {
        let count = fillings(shape.parts(), &content).len() as i64;
        let v: Vec<i64> = content.iter().map(|&c| c as i64).collect();
        out.add_term((Vec::new(), trim(v)), count);
    }
    Ok(out)
}

/// `K(R/I; u, v)` from the Taylor resolution: the alternating sum over subsets of
/// generators of `u^a v^b` for their lcm, with subsets sharing an lcm merged as they arise.
pub fn k_polynomial(ideal: &MonomialIdeal, cap: usize) -> Result<LaurentPolynomial> {
    let (m, n) = ideal.ambient();
    if m < n {
        return Err(Error::DimensionOrder { m, n });
    }
    let count = ideal.generators().len();
    if count > cap {
        return Err(Error::TooManyGenerators { count, cap });
    }
    let mut sums: BTreeMap<Monomial, i64> = BTreeMap::new();
    sums.insert(Monomial::one(), 1);
    for g in ideal.generators() {
        let mut next = sums.clone();
        for (l, c) in &sums {
            *next.entry(l.lcm(g)).or_insert(0) -= c;
        }
        next.retain(|_, c| *c != 0);
        sums = next;
    }
    let mut out = LaurentPolynomial::zero();
    for (l, c) in &sums {
        out = &out + &LaurentPolynomial::from_monomial(l, m, n, *c);
    }
    Ok(out)
}

/// `K(I; u, v) = 1 - K(R/I; u, v)`.
pub fn k_polynomial_of_ideal(ideal: &MonomialIdeal, cap: usize) -> Result<LaurentPolynomial> {
    Ok(&LaurentPolynomial::one() - &k_polynomial(ideal, cap)?)
}

/// A combination `Σ c_S(u) σ_S(v)` in `n` variables `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurExpansion {
    pub n: usize,
    pub terms: BTreeMap<Shape, LaurentPolynomial>,
}

impl SchurExpansion {
    pub fn reassemble(&self) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (s, c) in &self.terms {
            let sigma = schur_poly(s, self.n).expect("shapes of an expansion fit in n variables");
            out = &out + &(c * &sigma);
        }
        out
    }

    /// The largest number of parts among the shapes that occur.
    pub fn max_length(&self) -> usize {
        self.terms.keys().map(|s| s.len()).max().unwrap_or(0)
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (s, c) in &self.terms {
            if s.is_empty() {
                f.write_str("shape (): ")?;
            } else {
                write!(f, "shape {s}: ")?;
            }
            write_signed_terms(f, c)?;
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Expands a polynomial symmetric in `v_1, …, v_n` by repeatedly removing the Schur
/// polynomial whose leading `v` monomial is the lexicographically largest one present.
pub fn schur_expand(k: &LaurentPolynomial, n: usize) -> Result<SchurExpansion> {
    if !k.is_symmetric_in_v(n) {
        return Err(Error::NotSymmetric);
    }
    let mut rest = k.clone();
    let mut terms = BTreeMap::new();
    while let Some((lambda, coeff)) = rest.leading_v() {
        if lambda.iter().any(|&e| e < 0) {
            return Err(Error::NegativeExponent);
        }
        // σ_S leads with v^{S'}, so the shape is the transpose of the exponent
        let lambda = Shape::new(lambda.iter().map(|&e| e as usize).collect())?;
        let shape = lambda.transpose();
        let sigma = schur_poly(&shape, n)?;
        rest = &rest - &(&coeff * &sigma);
        terms.insert(shape, coeff);
    }
    Ok(SchurExpansion { n, terms })
}

/// Checks in every bidegree of total degree at most `bound` that the coefficient of
/// `K(R/I) / ∏ (1 - u_i v_j)` equals the number of monomials of that bidegree outside `I`.
/// Only mismatching bidegrees get a line.
pub fn check_hilbert(ideal: &MonomialIdeal, bound: usize, cap: usize, exec: Exec) -> Result<Report> {
    let (m, n) = ideal.ambient();
    let k = k_polynomial(ideal, cap)?;
    let terms: Vec<(Bidegree, i64)> = k
        .terms()
        .map(|((u, v), c)| {
            let mut rows: Vec<usize> = u.iter().map(|&e| e as usize).collect();
            let mut cols: Vec<usize> = v.iter().map(|&e| e as usize).collect();
            rows.resize(m, 0);
            cols.resize(n, 0);
            (Bidegree::new(rows, cols), *c)
        })
        .collect();
    let bidegrees = Bidegree::all_up_to(m, n, bound);
    let mut report = Report::new(format!("hilbert m={m} n={n} max_degree={bound}"));
    report.checked = bidegrees.len();
    let lines = exec.map(&bidegrees, |b| {
        let series: i64 =
            terms.iter().filter_map(|(t, c)| b.checked_sub(t).map(|rest| c * count_monomials(&rest) as i64)).sum();
        let direct = count_monomials(b) as i64 - ideal.piece(b).len() as i64;
        (series != direct)
            .then(|| ReportLine::new(b.to_string(), false).field("dim_lhs", series).field("dim_rhs", direct))
    });
    for line in lines.into_iter().flatten() {
        report.push(line);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::diagonal_ideal;

    fn shape(s: &str) -> Shape {
        s.parse().unwrap()
    }

    #[test]
    fn schur_polynomials() {
        assert_eq!(schur_poly(&shape("1"), 3).unwrap().to_string(), "+v[1] +v[2] +v[3]");
        assert_eq!(schur_poly(&shape("3,3"), 3).unwrap(), LaurentPolynomial::term(&[], &[2, 2, 2], 1));
        let s21 = schur_poly(&shape("2,1"), 3).unwrap();
        assert_eq!(s21.terms().map(|(_, c)| c).sum::<i64>(), 8);
        assert_eq!(s21.coeff(&[], &[1, 1, 1]), 2);
        assert_eq!(s21.coeff(&[], &[2, 1]), 1);
        assert!(matches!(schur_poly(&shape("4"), 3), Err(Error::ShapeTooWide { part: 4, n: 3 })));
    }

    #[test]
    fn principal_k_polynomial() {
        let i = MonomialIdeal::new(1, 1, ["x11".parse().unwrap()]);
        assert_eq!(k_polynomial(&i, DEFAULT_GEN_CAP).unwrap().to_string(), "+1 -u[1]*v[1]");
        let j = diagonal_ideal(2, 2, &shape("2,2")).unwrap();
        assert_eq!(k_polynomial_of_ideal(&j, DEFAULT_GEN_CAP).unwrap(), LaurentPolynomial::term(&[2, 2], &[2, 2], 1));
        let wide = MonomialIdeal::new(2, 3, ["x11".parse().unwrap()]);
        assert!(matches!(k_polynomial(&wide, 20), Err(Error::DimensionOrder { m: 2, n: 3 })));
    }

    #[test]
    fn two_one_example() {
        let j = diagonal_ideal(3, 3, &shape("2,1")).unwrap();
        let k = k_polynomial_of_ideal(&j, DEFAULT_GEN_CAP).unwrap();
        let e = schur_expand(&k, 3).unwrap();
        assert_eq!(
            e.to_string(),
            "shape 2,1: +u[1]^2*u[2]\n\
             shape 2,2: -u[1]^3*u[2]\n\
             shape 3,1: -u[1]^3*u[2] -u[1]^2*u[2]^2\n\
             shape 3,2: +u[1]^4*u[2] +u[1]^3*u[2]^2\n\
             shape 3,3: -u[1]^4*u[2]^2\n"
        );
        assert_eq!(e.reassemble(), k);
        assert!(e.max_length() <= shape("2,1").transpose().part(1));
    }

    #[test]
    fn expansion_of_basis_elements() {
        assert_eq!(schur_expand(&LaurentPolynomial::one(), 3).unwrap().terms.len(), 1);
        let s = schur_poly(&shape("2,1"), 3).unwrap();
        let e = schur_expand(&s, 3).unwrap();
        assert_eq!(e.terms.keys().collect::<Vec<_>>(), vec![&shape("2,1")]);
        assert_eq!(schur_expand(&LaurentPolynomial::term(&[], &[1], 1), 2), Err(Error::NotSymmetric));
    }

    #[test]
    fn hilbert_counts() {
        let j1 = diagonal_ideal(2, 2, &shape("1")).unwrap();
        assert!(check_hilbert(&j1, 3, DEFAULT_GEN_CAP, Exec::Sequential).unwrap().passed());
        assert!(check_hilbert(&MonomialIdeal::zero(2, 2), 3, DEFAULT_GEN_CAP, Exec::Sequential).unwrap().passed());
        let j = diagonal_ideal(3, 3, &shape("2,1")).unwrap();
        assert!(check_hilbert(&j, 4, DEFAULT_GEN_CAP, Exec::Sequential).unwrap().passed());
    }
}
