//! Multigraded Betti numbers of monomial ideals from the upper Koszul simplicial complex
//! `K^b = {F ⊆ supp(b) squarefree : x^{b-F} ∈ I}`, with `β_{i,b} = dim H̃_{i-1}(K^b)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::MonomialIdeal;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::linalg::{rank, SparseVec};
use crate::polyring::{Monomial, Rational, Var};
use crate::report::{Report, ReportLine};

/// Limit on the number of lcm-lattice elements examined.
const LATTICE_CAP: usize = 1_000_000;

/// Nonzero multigraded Betti numbers, plus their totals by homological and total degree.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BettiTable {
    pub multigraded: Vec<(usize, Monomial, usize)>,
}

impl BettiTable {
    /// `(i, |b|) ↦ Σ β_{i,b}`.
    pub fn graded(&self) -> BTreeMap<(usize, usize), usize> {
        let mut out = BTreeMap::new();
        for (i, b, beta) in &self.multigraded {
            *out.entry((*i, b.degree())).or_insert(0) += beta;
        }
        out
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for ((i, d), beta) in self.graded() {
            writeln!(f, "beta_{i},{d} = {beta}")?;
        }
        Ok(())
    }
}

/// The lcms of nonempty subsets of generators with total degree at most `bound`.
fn lcm_lattice(ideal: &MonomialIdeal, bound: usize) -> Result<BTreeSet<Monomial>> {
    let gens: Vec<&Monomial> = ideal.generators().iter().filter(|g| g.degree() <= bound).collect();
    let mut all: BTreeSet<Monomial> = gens.iter().map(|&g| g.clone()).collect();
    let mut frontier: Vec<Monomial> = all.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for l in &frontier {
            for g in &gens {
                let k = l.lcm(g);
                if k.degree() <= bound && !all.contains(&k) {
                    all.insert(k.clone());
                    next.push(k);
                    if all.len() > LATTICE_CAP {
                        return Err(Error::DegreeBoundExceeded { cap: LATTICE_CAP });
                    }
                }
            }
        }
        frontier = next;
    }
    Ok(all)
}

/// Reduced Betti numbers `β_{i,b}` for all `i`, as `(i, β)` with `β > 0`.
fn koszul_betti(ideal: &MonomialIdeal, b: &Monomial) -> Vec<(usize, usize)> {
    if !ideal.contains(b) {
        return Vec::new();
    }
    let support: Vec<Var> = b.factors().into_iter().collect::<BTreeSet<_>>().into_iter().collect();
    let k = support.len();
    // faces as bitmasks over the support, grouped by cardinality
    let mut faces: Vec<Vec<u32>> = vec![Vec::new(); k + 1];
    for mask in 0u32..(1 << k) {
        let f = Monomial::from_vars((0..k).filter(|&i| mask & (1 << i) != 0).map(|i| support[i]));
        let rest = f.quotient_of(b).expect("faces lie in the support");
        if ideal.contains(&rest) {
            faces[mask.count_ones() as usize].push(mask);
        }
    }
    let index: Vec<BTreeMap<u32, usize>> =
        faces.iter().map(|fs| fs.iter().enumerate().map(|(i, &f)| (f, i)).collect()).collect();
    // rank of the boundary from faces of cardinality c to cardinality c - 1
    let boundary_rank = |c: usize| -> usize {
        if c == 0 || c > k || faces[c].is_empty() {
            return 0;
        }
        rank(faces[c].iter().map(|&f| {
            let mut sign = 1i64;
            let mut entries = Vec::new();
            for i in 0..k {
                if f & (1 << i) != 0 {
                    let g = f & !(1 << i);
                    entries.push((index[c - 1][&g], Rational::from_integer(sign.into())));
                    sign = -sign;
                }
            }
            SparseVec::from_pairs(entries)
        }))
    };
    let ranks: Vec<usize> = (0..=k + 1).map(boundary_rank).collect();
    let mut out = Vec::new();
    for c in 0..=k {
        // reduced homology in dimension c - 1 contributes to β_c
        let h = faces[c].len() - ranks[c] - ranks[c + 1];
        if h > 0 {
            out.push((c, h));
        }
    }
    out
}

/// Nonzero multigraded Betti numbers of `ideal` in multidegrees of total degree at most
/// `bound`. Only lcms of generators can carry them.
pub fn betti_numbers(ideal: &MonomialIdeal, bound: usize, exec: Exec) -> Result<BettiTable> {
    let lattice: Vec<Monomial> = lcm_lattice(ideal, bound)?.into_iter().collect();
    let per = exec.map(&lattice, |b| koszul_betti(ideal, b));
    let mut multigraded = Vec::new();
    for (b, betas) in lattice.into_iter().zip(per) {
        for (i, beta) in betas {
            multigraded.push((i, b.clone(), beta));
        }
    }
    multigraded.sort_by(|x, y| (x.0, x.1.degree(), &x.1).cmp(&(y.0, y.1.degree(), &y.1)));
    Ok(BettiTable { multigraded })
}

/// Checks that an ideal generated in degree `g` has every nonzero `β_{i,b}` with
/// `|b| ≤ bound` on the linear strand `|b| = g + i`.
pub fn betti_linear_check(ideal: &MonomialIdeal, bound: usize, exec: Exec) -> Result<Report> {
    let g = ideal.generating_degree().ok_or(Error::NotEquigenerated)?;
    let table = betti_numbers(ideal, bound, exec)?;
    let mut report = Report::new(format!("betti generating_degree={g} max_degree={bound}"));
    report.checked = table.multigraded.len();
    for ((i, d), beta) in table.graded() {
        report.push(
            ReportLine::new(format!("beta_{i},{d}"), d == g + i).field("beta", beta).field("expected_degree", g + i),
        );
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(m: usize, n: usize, gens: &[&str]) -> MonomialIdeal {
        MonomialIdeal::new(m, n, gens.iter().map(|g| g.parse().unwrap()))
    }

    #[test]
    fn two_variables() {
        let i = ideal(1, 2, &["x11", "x12"]);
        let t = betti_numbers(&i, 4, Exec::Sequential).unwrap();
        assert_eq!(t.graded(), [((0, 1), 2), ((1, 2), 1)].into_iter().collect());
        assert!(betti_linear_check(&i, 4, Exec::Sequential).unwrap().passed());
    }

    #[test]
    fn non_linear_and_mixed_degrees() {
        let i = ideal(2, 2, &["x11*x12", "x21*x22"]);
        let r = betti_linear_check(&i, 4, Exec::Sequential).unwrap();
        assert!(!r.passed());
        assert_eq!(
            betti_linear_check(&ideal(2, 2, &["x11", "x22^2"]), 4, Exec::Sequential).unwrap_err(),
            Error::NotEquigenerated
        );
    }

    #[test]
    fn squared_maximal_ideal_of_two_variables() {
        // (x, y)^2 = (x^2, xy, y^2) has Betti numbers 3, 2 on the linear strand
        let i = ideal(1, 2, &["x11^2", "x11*x12", "x12^2"]);
        let t = betti_numbers(&i, 6, Exec::Sequential).unwrap();
        assert_eq!(t.graded(), [((0, 2), 3), ((1, 3), 2)].into_iter().collect());
    }
}
