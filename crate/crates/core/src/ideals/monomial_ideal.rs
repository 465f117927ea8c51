use std::fmt;

use crate::error::{Error, Result};
use crate::grading::Bidegree;
use crate::polyring::{monomials_of_bidegree, Monomial};

/// A monomial ideal in the entries of an `m × n` matrix, kept as its minimal generators
/// sorted in decreasing monomial order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    m: usize,
    n: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(m: usize, n: usize, gens: impl IntoIterator<Item = Monomial>) -> Self {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        all.sort_by_key(|g| g.degree());
        all.dedup();
        let mut min: Vec<Monomial> = Vec::with_capacity(all.len());
        for g in all {
            if !min.iter().any(|h| h.divides(&g)) {
                min.push(g);
            }
        }
        min.sort_by(|a, b| b.cmp(a));
        MonomialIdeal { m, n, gens: min }
    }

    pub fn zero(m: usize, n: usize) -> Self {
        MonomialIdeal { m, n, gens: Vec::new() }
    }

    pub fn unit(m: usize, n: usize) -> Self {
        MonomialIdeal { m, n, gens: vec![Monomial::one()] }
    }

    pub fn ambient(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    fn check_ambient(&self, other: &MonomialIdeal) -> Result<()> {
        if self.ambient() != other.ambient() {
            return Err(Error::AmbientMismatch(self.ambient(), other.ambient()));
        }
        Ok(())
    }

    pub fn contains(&self, w: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(w))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other)?;
        let gens = self.gens.iter().flat_map(|a| other.gens.iter().map(move |b| a * b));
        Ok(MonomialIdeal::new(self.m, self.n, gens))
    }

    /// Intersection, generated by the pairwise lcms of generators.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other)?;
        let gens = self.gens.iter().flat_map(|a| other.gens.iter().map(move |b| a.lcm(b)));
        Ok(MonomialIdeal::new(self.m, self.n, gens))
    }

    pub fn power(&self, k: u32) -> MonomialIdeal {
        (0..k).fold(MonomialIdeal::unit(self.m, self.n), |acc, _| acc.product(self).expect("same ambient"))
    }

    /// Generators of degree at most `bound`; these determine the ideal up to that degree.
    pub fn truncate(&self, bound: usize) -> MonomialIdeal {
        MonomialIdeal {
            m: self.m,
            n: self.n,
            gens: self.gens.iter().filter(|g| g.degree() <= bound).cloned().collect(),
        }
    }

    /// Whether both ideals contain the same monomials of degree at most `bound`.
    pub fn equal_up_to(&self, other: &MonomialIdeal, bound: usize) -> bool {
        self.ambient() == other.ambient()
            && self.gens.iter().filter(|g| g.degree() <= bound).all(|g| other.contains(g))
            && other.gens.iter().filter(|g| g.degree() <= bound).all(|g| self.contains(g))
    }

    /// The monomials of bidegree `b` lying in the ideal, in increasing monomial order.
    pub fn piece(&self, b: &Bidegree) -> Vec<Monomial> {
        if self.gens.is_empty() {
            return Vec::new();
        }
        monomials_of_bidegree(b).into_iter().filter(|w| self.contains(w)).collect()
    }

    pub fn lcm_of_generators(&self) -> Monomial {
        self.gens.iter().fold(Monomial::one(), |acc, g| acc.lcm(g))
    }

    /// The common total degree of the generators, if there is one.
    pub fn generating_degree(&self) -> Option<usize> {
        let d = self.gens.first()?.degree();
        self.gens.iter().all(|g| g.degree() == d).then_some(d)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", gens.join(", "))
    }
}

/// Monomial-ideal operations selectable by name.
#[derive(Debug, Clone)]
pub enum MonIdealOp<'a> {
    Product(&'a MonomialIdeal, &'a MonomialIdeal),
    Intersect(&'a MonomialIdeal, &'a MonomialIdeal),
    Power(&'a MonomialIdeal, u32),
    Member(&'a Monomial, &'a MonomialIdeal),
    EqualUpTo(&'a MonomialIdeal, &'a MonomialIdeal, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonIdealValue {
    Ideal(MonomialIdeal),
    Bool(bool),
}

pub fn monideal_ops(op: MonIdealOp<'_>) -> Result<MonIdealValue> {
    Ok(match op {
        MonIdealOp::Product(a, b) => MonIdealValue::Ideal(a.product(b)?),
        MonIdealOp::Intersect(a, b) => MonIdealValue::Ideal(a.intersect(b)?),
        MonIdealOp::Power(a, k) => MonIdealValue::Ideal(a.power(k)),
        MonIdealOp::Member(w, a) => MonIdealValue::Bool(a.contains(w)),
        MonIdealOp::EqualUpTo(a, b, d) => MonIdealValue::Bool(a.equal_up_to(b, d)),
    })
}
