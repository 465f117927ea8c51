//! Graded pieces of ideals generated by bihomogeneous polynomials, computed by
//! incremental Gaussian elimination in a single bidegree at a time.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::grading::Bidegree;
use crate::linalg::{poly_to_vec, Echelon, Field, SparseVec};
use crate::polyring::{count_monomials, monomials_of_bidegree, Monomial, Polynomial};

/// Default limit on the number of spanning vectors tried in one graded piece.
pub const DEFAULT_DIM_CAP: usize = 200_000;

/// Bihomogeneous generators of an ideal, pre-converted to sparse vectors over `F`.
#[derive(Debug, Clone)]
pub struct Generators<F> {
    m: usize,
    n: usize,
    items: Vec<(Bidegree, SparseVec<Monomial, F>)>,
}

impl<F: Field> Generators<F> {
    pub fn new(m: usize, n: usize, polys: &[Polynomial]) -> Self {
        let items = polys
            .iter()
            .filter(|p| !p.is_zero())
            .map(|p| {
                let (lead, _) = p.leading_term().expect("nonzero");
                debug_assert!(p.is_homogeneous(m, n), "generator {p} is not bihomogeneous");
                (lead.bidegree(m, n), poly_to_vec(p))
            })
            .collect();
        Generators { m, n, items }
    }

    pub fn ambient(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }
}

/// An echelon basis of one graded piece; leading coefficients are one and leading
/// monomials are distinct.
#[derive(Debug, Clone)]
pub struct GradedPiece<F> {
    pub bidegree: Bidegree,
    echelon: Echelon<Monomial, F>,
}

impl<F: Field> GradedPiece<F> {
    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    /// The leading monomials of the basis, which span the initial space of the piece.
    pub fn initial_monomials(&self) -> BTreeSet<Monomial> {
        self.echelon.pivots().cloned().collect()
    }

    pub fn basis(&self) -> impl Iterator<Item = &SparseVec<Monomial, F>> {
        self.echelon.rows()
    }

    pub fn contains(&self, v: &SparseVec<Monomial, F>) -> bool {
        self.echelon.contains(v)
    }

    pub fn contains_poly(&self, p: &Polynomial) -> bool {
        self.contains(&poly_to_vec(p))
    }
}

fn shift<F: Field>(v: &SparseVec<Monomial, F>, w: &Monomial) -> SparseVec<Monomial, F> {
    // multiplication by a monomial preserves the monomial order, hence the key order
    v.map_keys_monotone(|k| k * w)
}

/// The span of `g · w` over generators `g` and monomials `w` with `deg(g·w) = bidegree`.
pub fn graded_piece<F: Field>(gens: &Generators<F>, bidegree: &Bidegree, cap: usize) -> Result<GradedPiece<F>> {
    let full = count_monomials(bidegree) as usize;
    let mut echelon = Echelon::new();
    let mut tried = 0usize;
    'outer: for (deg, v) in &gens.items {
        let Some(rest) = bidegree.checked_sub(deg) else {
            continue;
        };
        for w in monomials_of_bidegree(&rest) {
            tried += 1;
            if tried > cap {
                return Err(Error::DegreeBoundExceeded { cap });
            }
            echelon.insert(shift(v, &w));
            if echelon.rank() == full {
                break 'outer;
            }
        }
    }
    Ok(GradedPiece { bidegree: bidegree.clone(), echelon })
}

/// The monomials spanning the initial space of the graded piece.
pub fn initial_space<F: Field>(gens: &Generators<F>, bidegree: &Bidegree, cap: usize) -> Result<BTreeSet<Monomial>> {
    Ok(graded_piece(gens, bidegree, cap)?.initial_monomials())
}
