//! The Knuth–Robinson–Schensted correspondence between standard bitableaux and monomials,
//! with row marks tracking a superstandard subtableau.
//!
//! Deletion removes the box holding the largest right entry `r` (the lowest such box when
//! there are ties) and pushes the removed left entry upwards: in each higher row it
//! replaces the largest entry not exceeding it, and the replaced entry moves on. The entry
//! leaving the first row is `ℓ`, and the step contributes the factor `x_{ℓ r}`.
//!
//! Row marks: a left box `(i, j)` belongs to the superstandard region of shape `S` when
//! `a_ij = j` and `j ≤ s_i`. A step is marked with `i` when such a box is the pivot or
//! receives a strictly larger entry during the push-out; otherwise the mark is 0. At most
//! one box can qualify in a single step, which is asserted.

use std::fmt;

use crate::error::{Error, Result};
use crate::polyring::Monomial;
use crate::tableaux::{Bitableau, Minor, Shape};

/// One column `(ℓ, r, ρ)` of a KRS array.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct KrsColumn {
    pub ell: usize,
    pub r: usize,
    pub rho: usize,
}

/// Result of a single deletion step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KrsStep {
    pub sigma: Bitableau,
    pub ell: usize,
    pub r: usize,
    pub rho: usize,
}

/// The three-row array of a full deletion run, columns listed left to right.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct KrsArray {
    columns: Vec<KrsColumn>,
}

impl KrsArray {
    /// Wraps columns after checking that second components weakly increase and that
    /// ties have weakly decreasing first components.
    pub fn new(columns: Vec<KrsColumn>) -> Self {
        assert!(
            columns.windows(2).all(|w| w[0].r < w[1].r || (w[0].r == w[1].r && w[0].ell >= w[1].ell)),
            "KRS array violates the monotonicity property: {columns:?}"
        );
        KrsArray { columns }
    }

    pub fn columns(&self) -> &[KrsColumn] {
        &self.columns
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn ells(&self) -> Vec<usize> {
        self.columns.iter().map(|c| c.ell).collect()
    }

    pub fn rs(&self) -> Vec<usize> {
        self.columns.iter().map(|c| c.r).collect()
    }

    pub fn rhos(&self) -> Vec<usize> {
        self.columns.iter().map(|c| c.rho).collect()
    }

    pub fn monomial(&self) -> Monomial {
        Monomial::from_vars(self.columns.iter().map(|c| (c.ell, c.r)))
    }

    /// Columns carrying row mark `k`.
    pub fn marked(&self, k: usize) -> Vec<KrsColumn> {
        self.columns.iter().copied().filter(|c| c.rho == k).collect()
    }
}

impl fmt::Display for KrsArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = [self.ells(), self.rs(), self.rhos()];
        let width = rows.iter().flatten().map(|x| x.to_string().len()).max().unwrap_or(1);
        for (k, row) in rows.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>width$}")).collect();
            f.write_str(&cells.join(" "))?;
            if k < 2 {
                f.write_str("\n")?;
            }
        }
        Ok(())
    }
}

/// The product of the main diagonals of all factors.
pub fn diag(d: &Bitableau) -> Monomial {
    Monomial::from_vars(d.factors().iter().flat_map(|f| f.rows().iter().copied().zip(f.cols().iter().copied())))
}

fn delete_step(left: &mut Vec<Vec<usize>>, right: &mut Vec<Vec<usize>>, shape: &Shape) -> KrsColumn {
    let r = right.iter().filter_map(|row| row.last().copied()).max().expect("non-empty tableau");
    // lowest row whose last entry is r
    let p = right.iter().rposition(|row| row.last() == Some(&r)).expect("pivot row");
    right[p].pop();
    let q = left[p].len();
    let mut carry = left[p].pop().expect("left and right tableaux share a shape");
    let in_region = |row: usize, col: usize, entry: usize| entry == col && col <= shape.part(row);

    let mut marks = Vec::new();
    if in_region(p + 1, q, carry) {
        marks.push(p + 1);
    }
    for k in (0..p).rev() {
        let row = &mut left[k];
        let idx = row.iter().rposition(|&a| a <= carry).expect("column-weak tableau has an entry to push out");
        let old = row[idx];
        row[idx] = carry;
        if carry > old && in_region(k + 1, idx + 1, old) {
            marks.push(k + 1);
        }
        carry = old;
    }
    if left[p].is_empty() {
        left.pop();
        right.pop();
    }
    assert!(marks.len() <= 1, "more than one row mark in a single step: {marks:?}");
    KrsColumn { ell: carry, r, rho: marks.first().copied().unwrap_or(0) }
}

/// One deletion step with row marks relative to `shape`.
pub fn krs_step(sigma: &Bitableau, shape: &Shape) -> Result<KrsStep> {
    if sigma.is_empty() {
        return Err(Error::EmptyTableau);
    }
    if !sigma.is_standard() {
        return Err(Error::NotStandard);
    }
    let mut left = sigma.left_tableau();
    let mut right = sigma.right_tableau();
    let col = delete_step(&mut left, &mut right, shape);
    Ok(KrsStep { sigma: Bitableau::from_tableaux(&left, &right)?, ell: col.ell, r: col.r, rho: col.rho })
}

/// The full three-row array of a standard bitableau.
pub fn krs_array(sigma: &Bitableau, shape: &Shape) -> Result<KrsArray> {
    if !sigma.is_standard() {
        return Err(Error::NotStandard);
    }
    let mut left = sigma.left_tableau();
    let mut right = sigma.right_tableau();
    let mut cols = Vec::with_capacity(sigma.degree());
    while !left.is_empty() {
        cols.push(delete_step(&mut left, &mut right, shape));
    }
    cols.reverse();
    Ok(KrsArray::new(cols))
}

/// The KRS monomial of a standard bitableau.
pub fn krs(sigma: &Bitableau) -> Result<Monomial> {
    Ok(krs_array(sigma, &Shape::empty())?.monomial())
}

/// The standard bitableau whose KRS image is `mono`.
pub fn krs_insert(mono: &Monomial) -> Bitableau {
    let mut pairs = mono.factors();
    // increasing column, and decreasing row among equal columns
    pairs.sort_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)));
    let mut left: Vec<Vec<usize>> = Vec::new();
    let mut right: Vec<Vec<usize>> = Vec::new();
    for (ell, r) in pairs {
        let mut carry = ell;
        let mut row = 0;
        loop {
            if row == left.len() {
                left.push(vec![carry]);
                right.push(vec![r]);
                break;
            }
            match left[row].iter().position(|&a| a >= carry) {
                Some(idx) => {
                    std::mem::swap(&mut left[row][idx], &mut carry);
                    row += 1;
                }
                None => {
                    left[row].push(carry);
                    right[row].push(r);
                    break;
                }
            }
        }
    }
    Bitableau::from_tableaux(&left, &right).expect("insertion keeps rows strictly increasing")
}

/// A row-superstandard bitableau of shape `shape` whose diagonal divides `krs(sigma)`,
/// assembled from the columns of the KRS array carrying each row mark.
pub fn extract_witness(sigma: &Bitableau, shape: &Shape) -> Result<Bitableau> {
    if !sigma.is_standard() {
        return Err(Error::NotStandard);
    }
    if !sigma.contains_superstandard(shape) {
        return Err(Error::WitnessPreconditionFailed);
    }
    let array = krs_array(sigma, shape)?;
    let mut factors = Vec::with_capacity(shape.len());
    for (k, &s) in shape.parts().iter().enumerate() {
        let cols = array.marked(k + 1);
        let rows: Vec<usize> = cols.iter().map(|c| c.ell).collect();
        let right: Vec<usize> = cols.iter().map(|c| c.r).collect();
        assert_eq!(rows, (1..=s).collect::<Vec<_>>(), "row mark {} does not produce 1..{s}", k + 1);
        factors.push(Minor::new(rows, right).expect("marked second components strictly increase"));
    }
    Ok(Bitableau::new(factors))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bt(s: &str) -> Bitableau {
        s.parse().unwrap()
    }

    fn figure() -> Bitableau {
        bt("[1 2 3|1 2 3]*[1 2 4|2 3 4]*[2|4]")
    }

    #[test]
    fn diag_examples() {
        assert_eq!(diag(&bt("[1 2|1 3]")), "x11*x23".parse().unwrap());
        assert_eq!(diag(&bt("[1 2 3|1 2 4]*[1 2|2 3]")), "x11*x22*x34*x12*x23".parse().unwrap());
        assert_eq!(diag(&Bitableau::empty()), Monomial::one());
    }

    #[test]
    fn first_deletion_of_the_worked_example() {
        let step = krs_step(&figure(), &"3,2".parse().unwrap()).unwrap();
        assert_eq!((step.ell, step.r, step.rho), (2, 4, 0));
        assert_eq!(step.sigma, bt("[1 2 3|1 2 3]*[1 2 4|2 3 4]"));
    }

    #[test]
    fn trivial_steps() {
        let step = krs_step(&bt("[1|1]"), &"1".parse().unwrap()).unwrap();
        assert_eq!((step.sigma.is_empty(), step.ell, step.r, step.rho), (true, 1, 1, 1));
        let step = krs_step(&bt("[2|3]"), &Shape::empty()).unwrap();
        assert_eq!((step.sigma.is_empty(), step.ell, step.r, step.rho), (true, 2, 3, 0));
        assert_eq!(krs_step(&Bitableau::empty(), &Shape::empty()), Err(Error::EmptyTableau));
    }

    #[test]
    fn worked_example_array() {
        let a = krs_array(&figure(), &"3,2".parse().unwrap()).unwrap();
        assert_eq!(a.ells(), vec![1, 2, 1, 4, 2, 3, 2]);
        assert_eq!(a.rs(), vec![1, 2, 2, 3, 3, 4, 4]);
        assert_eq!(a.rhos(), vec![1, 1, 2, 0, 2, 1, 0]);
        assert_eq!(a.to_string(), "1 2 1 4 2 3 2\n1 2 2 3 3 4 4\n1 1 2 0 2 1 0");
        assert!(krs_array(&Bitableau::empty(), &Shape::empty()).unwrap().is_empty());
    }

    #[test]
    fn worked_example_monomial_and_inverse() {
        // the product of x_{ℓ r} over the array columns; note x43, not x44
        let w: Monomial = "x11*x22*x12*x43*x23*x34*x24".parse().unwrap();
        assert_eq!(krs(&figure()).unwrap(), w);
        assert_eq!(krs_insert(&w), figure());
        assert_eq!(krs_insert(&Monomial::one()), Bitableau::empty());
    }

    #[test]
    fn superstandard_images_are_diagonals() {
        let s = bt("[1 2|1 3]*[1|2]");
        assert_eq!(krs(&s).unwrap(), "x11*x23*x12".parse().unwrap());
        assert_eq!(krs(&bt("[1|1]")).unwrap(), Monomial::var(1, 1));
    }

    #[test]
    fn witness_of_worked_example() {
        let t = extract_witness(&figure(), &"3,2".parse().unwrap()).unwrap();
        assert_eq!(t, bt("[1 2 3|1 2 4]*[1 2|2 3]"));
        assert_eq!(diag(&t), "x11*x22*x34*x12*x23".parse().unwrap());
        assert_eq!(extract_witness(&figure(), &Shape::empty()).unwrap(), Bitableau::empty());
        assert_eq!(extract_witness(&figure(), &"3,3".parse().unwrap()), Err(Error::WitnessPreconditionFailed));
    }

    #[test]
    fn non_standard_input_is_rejected() {
        let d = bt("[1 2|2 3]*[1 2|1 4]");
        assert_eq!(krs(&d), Err(Error::NotStandard));
    }

    #[test]
    fn two_by_two_inverse_pairs_the_other_basis_element() {
        let a = krs_insert(&"x12*x21".parse().unwrap());
        let b = krs_insert(&"x11*x22".parse().unwrap());
        assert_ne!(a, b);
        let mut got = vec![a, b];
        got.sort();
        assert_eq!(got, vec![bt("[1 2|1 2]"), bt("[1|1]*[2|2]")]);
    }
}
