//! Exact sparse linear algebra: fields, sparse vectors keyed by an ordered index, and
//! incremental echelon forms whose pivots are the leading (largest) keys.

use std::collections::BTreeMap;
use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::polyring::{Monomial, Polynomial, Rational};

pub trait Field: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; callers never pass zero.
    fn inv(&self) -> Self;
    fn from_rational(r: &Rational) -> Self;
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
    fn inv(&self) -> Self {
        self.recip()
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
}

/// The prime field of order `2^61 - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp(u64);

impl Fp {
    pub const P: u64 = (1 << 61) - 1;

    pub fn new(x: u64) -> Self {
        Fp(x % Self::P)
    }

    pub fn from_i64(x: i64) -> Self {
        let r = x.rem_euclid(Self::P as i64);
        Fp(r as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn reduce128(x: u128) -> u64 {
        let p = Self::P as u128;
        let lo = x & p;
        let hi = x >> 61;
        let mut r = lo + hi;
        while r >= p {
            r -= p;
        }
        r as u64
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = Field::mul(&acc, &base);
            }
            base = Field::mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    fn from_bigint(x: &BigInt) -> Self {
        let p = BigInt::from(Self::P);
        let r = x.mod_floor(&p);
        Fp(r.to_u64().expect("residue fits in u64"))
    }
}

impl Field for Fp {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, rhs: &Self) -> Self {
        let s = self.0 + rhs.0;
        Fp(if s >= Self::P { s - Self::P } else { s })
    }
    fn sub(&self, rhs: &Self) -> Self {
        Fp(if self.0 >= rhs.0 { self.0 - rhs.0 } else { self.0 + Self::P - rhs.0 })
    }
    fn mul(&self, rhs: &Self) -> Self {
        Fp(Self::reduce128(self.0 as u128 * rhs.0 as u128))
    }
    fn neg(&self) -> Self {
        Fp(if self.0 == 0 { 0 } else { Self::P - self.0 })
    }
    fn inv(&self) -> Self {
        debug_assert!(self.0 != 0);
        self.pow(Self::P - 2)
    }
    fn from_rational(r: &Rational) -> Self {
        Self::from_bigint(r.numer()).mul(&Self::from_bigint(r.denom()).inv())
    }
}

/// A sparse vector stored as `(key, coefficient)` pairs in increasing key order.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseVec<K, F> {
    entries: Vec<(K, F)>,
}

impl<K: Ord + Clone, F: Field> SparseVec<K, F> {
    pub fn zero() -> Self {
        SparseVec { entries: Vec::new() }
    }

    /// Builds from arbitrary pairs, summing duplicates and dropping zeros.
    pub fn from_pairs<I: IntoIterator<Item = (K, F)>>(pairs: I) -> Self {
        let mut map: BTreeMap<K, F> = BTreeMap::new();
        for (k, c) in pairs {
            let e = map.entry(k).or_insert_with(F::zero);
            *e = e.add(&c);
        }
        SparseVec { entries: map.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn unit(k: K) -> Self {
        SparseVec { entries: vec![(k, F::one())] }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(K, F)] {
        &self.entries
    }

    pub fn leading(&self) -> Option<&(K, F)> {
        self.entries.last()
    }

    pub fn get(&self, k: &K) -> Option<&F> {
        self.entries.binary_search_by(|(x, _)| x.cmp(k)).ok().map(|i| &self.entries[i].1)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        SparseVec { entries: self.entries.iter().map(|(k, x)| (k.clone(), x.mul(c))).collect() }
    }

    /// `self + c * other`.
    pub fn axpy(&self, c: &F, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.entries, &other.entries);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => std::cmp::Ordering::Less,
                (None, _) => std::cmp::Ordering::Greater,
            };
            match ord {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    let v = b[j].1.mul(c);
                    if !v.is_zero() {
                        out.push((b[j].0.clone(), v));
                    }
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let v = a[i].1.add(&b[j].1.mul(c));
                    if !v.is_zero() {
                        out.push((a[i].0.clone(), v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        SparseVec { entries: out }
    }

    /// Applies an order-preserving, injective key map without re-sorting.
    pub fn map_keys_monotone<K2: Ord + Clone>(&self, f: impl Fn(&K) -> K2) -> SparseVec<K2, F> {
        let entries: Vec<(K2, F)> = self.entries.iter().map(|(k, c)| (f(k), c.clone())).collect();
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        SparseVec { entries }
    }

    pub fn map_keys<K2: Ord + Clone>(&self, f: impl Fn(&K) -> K2) -> SparseVec<K2, F> {
        SparseVec::from_pairs(self.entries.iter().map(|(k, c)| (f(k), c.clone())))
    }
}

/// Converts a rational polynomial into a vector over `F` keyed by monomials.
pub fn poly_to_vec<F: Field>(p: &Polynomial) -> SparseVec<Monomial, F> {
    SparseVec {
        entries: p.terms().map(|(m, c)| (m.clone(), F::from_rational(c))).filter(|(_, c)| !c.is_zero()).collect(),
    }
}

pub fn vec_to_poly(v: &SparseVec<Monomial, Rational>) -> Polynomial {
    let mut p = Polynomial::zero();
    for (m, c) in v.entries() {
        p.add_term(m.clone(), c.clone());
    }
    p
}

/// An echelon basis in which every row has leading coefficient one and the leading keys
/// are pairwise distinct.
#[derive(Debug, Clone)]
pub struct Echelon<K, F> {
    rows: BTreeMap<K, SparseVec<K, F>>,
}

impl<K: Ord + Clone, F: Field> Default for Echelon<K, F> {
    fn default() -> Self {
        Echelon { rows: BTreeMap::new() }
    }
}

impl<K: Ord + Clone, F: Field> Echelon<K, F> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.keys()
    }

    pub fn rows(&self) -> impl Iterator<Item = &SparseVec<K, F>> {
        self.rows.values()
    }

    /// Cancels leading entries against pivots until the leading key is not a pivot.
    /// The result is zero exactly when `v` lies in the span.
    pub fn head_reduce(&self, mut v: SparseVec<K, F>) -> SparseVec<K, F> {
        while let Some((k, c)) = v.leading() {
            match self.rows.get(k) {
                Some(row) => {
                    let c = c.neg();
                    v = v.axpy(&c, row);
                }
                None => break,
            }
        }
        v
    }

    pub fn contains(&self, v: &SparseVec<K, F>) -> bool {
        self.head_reduce(v.clone()).is_zero()
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: SparseVec<K, F>) -> bool {
        let r = self.head_reduce(v);
        match r.leading() {
            None => false,
            Some((k, c)) => {
                let k = k.clone();
                let inv = c.inv();
                self.rows.insert(k, r.scale(&inv));
                true
            }
        }
    }

    pub fn into_rows(self) -> Vec<SparseVec<K, F>> {
        self.rows.into_values().collect()
    }
}

type TrackedRow<K, F> = (SparseVec<K, F>, SparseVec<usize, F>);

/// Echelon form that remembers how each row was combined from the inserted vectors, so
/// that membership tests also return coordinates.
#[derive(Debug, Clone)]
pub struct TrackedEchelon<K, F> {
    /// Pivot -> (row, combination of inserted vectors).
    rows: BTreeMap<K, TrackedRow<K, F>>,
    inserted: usize,
}

impl<K: Ord + Clone, F: Field> Default for TrackedEchelon<K, F> {
    fn default() -> Self {
        TrackedEchelon { rows: BTreeMap::new(), inserted: 0 }
    }
}

impl<K: Ord + Clone, F: Field> TrackedEchelon<K, F> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut v: SparseVec<K, F>, mut combo: SparseVec<usize, F>) -> (SparseVec<K, F>, SparseVec<usize, F>) {
        while let Some((k, c)) = v.leading() {
            match self.rows.get(k) {
                Some((row, rc)) => {
                    let c = c.neg();
                    v = v.axpy(&c, row);
                    combo = combo.axpy(&c, rc);
                }
                None => break,
            }
        }
        (v, combo)
    }

    /// Inserts the next vector, labelled by its insertion index. Returns whether it was
    /// independent of the previous ones.
    pub fn insert(&mut self, v: SparseVec<K, F>) -> bool {
        let id = self.inserted;
        self.inserted += 1;
        let (r, combo) = self.reduce(v, SparseVec::unit(id));
        match r.leading() {
            None => false,
            Some((k, c)) => {
                let k = k.clone();
                let inv = c.inv();
                self.rows.insert(k, (r.scale(&inv), combo.scale(&inv)));
                true
            }
        }
    }

    /// Coordinates of `v` in terms of the inserted vectors, or `None` if `v` is outside
    /// the span.
    pub fn solve(&self, v: &SparseVec<K, F>) -> Option<SparseVec<usize, F>> {
        let (r, combo) = self.reduce(v.clone(), SparseVec::zero());
        r.is_zero().then(|| combo.scale(&F::one().neg()))
    }
}

/// Block-tagged key used by the Zassenhaus intersection; left keys dominate right ones.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum Block<K> {
    Right(K),
    Left(K),
}

/// A basis of `span(a) ∩ span(b)` by the Zassenhaus algorithm.
pub fn intersect<K: Ord + Clone, F: Field>(a: &[SparseVec<K, F>], b: &[SparseVec<K, F>]) -> Vec<SparseVec<K, F>> {
    let mut ech: Echelon<Block<K>, F> = Echelon::new();
    for u in a {
        let left = u.map_keys(|k| Block::Left(k.clone()));
        let right = u.map_keys(|k| Block::Right(k.clone()));
        ech.insert(left.axpy(&F::one(), &right));
    }
    for w in b {
        ech.insert(w.map_keys(|k| Block::Left(k.clone())));
    }
    ech.into_rows()
        .into_iter()
        .filter(|r| matches!(r.leading(), Some((Block::Right(_), _))))
        .map(|r| {
            SparseVec::from_pairs(r.entries().iter().filter_map(|(k, c)| match k {
                Block::Right(k) => Some((k.clone(), c.clone())),
                Block::Left(_) => None,
            }))
        })
        .collect()
}

/// Rank of a matrix given as rows of `(column, value)` pairs.
pub fn rank<F: Field>(rows: impl IntoIterator<Item = SparseVec<usize, F>>) -> usize {
    let mut e: Echelon<usize, F> = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}
