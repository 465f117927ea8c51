//! Degree-by-degree verification sweeps over the ideals `J_S`.

use std::collections::{BTreeMap, BTreeSet};

use super::graded::{graded_piece, Generators, GradedPiece};
use super::{diagonal_ideal, generators_js, Arith, MonomialIdeal, SweepOptions};
use crate::error::Result;
use crate::grading::Bidegree;
use crate::linalg::{intersect, poly_to_vec, Field, Fp};
use crate::polyring::{expand_bitableau, Monomial, Polynomial, Rational};
use crate::report::{Report, ReportLine};
use crate::tableaux::{enumerate_standard, Bitableau, Minor, Shape};

/// Generator polynomials of `J_S`, one per product of minors up to reordering of factors.
fn js_generators<F: Field>(m: usize, n: usize, shape: &Shape) -> Result<Generators<F>> {
    let mut seen: BTreeSet<Vec<Minor>> = BTreeSet::new();
    let mut polys: Vec<Polynomial> = Vec::new();
    for g in generators_js(m, n, shape)? {
        let mut key = g.factors().to_vec();
        key.sort();
        if seen.insert(key) {
            polys.push(expand_bitableau(&g));
        }
    }
    Ok(Generators::new(m, n, &polys))
}

/// Every homogeneous element of `J_S` has row content at least `S'` componentwise, so
/// bidegrees failing this carry the zero piece for `J_S` and for all ideals containing it
/// that are compared with it here.
fn supports(b: &Bidegree, shape: &Shape) -> bool {
    let t = shape.transpose();
    t.parts().len() <= b.rows.len() && t.parts().iter().zip(&b.rows).all(|(s, r)| r >= s)
}

fn relevant(m: usize, n: usize, shape: &Shape, max_degree: usize) -> (usize, Vec<Bidegree>) {
    let all = Bidegree::all_up_to(m, n, max_degree);
    let total = all.len();
    (total, all.into_iter().filter(|b| supports(b, shape)).collect())
}

fn pieces<F: Field>(gens: &Generators<F>, bidegrees: &[Bidegree], opts: &SweepOptions) -> Result<Vec<GradedPiece<F>>> {
    opts.exec.map(bidegrees, |b| graded_piece(gens, b, opts.cap_dim)).into_iter().collect()
}

fn initial_ideal_in<F: Field>(m: usize, n: usize, shape: &Shape, opts: &SweepOptions) -> Result<MonomialIdeal> {
    let gens = js_generators::<F>(m, n, shape)?;
    let (_, bidegrees) = relevant(m, n, shape, opts.max_degree);
    let ps = pieces(&gens, &bidegrees, opts)?;
    Ok(MonomialIdeal::new(m, n, ps.iter().flat_map(|p| p.initial_monomials())))
}

/// The initial ideal of `J_S` computed by elimination in every bidegree up to
/// `opts.max_degree`; its generators are correct up to that degree.
pub fn initial_ideal(m: usize, n: usize, shape: &Shape, opts: &SweepOptions) -> Result<MonomialIdeal> {
    match opts.arith {
        Arith::Rational => initial_ideal_in::<Rational>(m, n, shape, opts),
        Arith::Modular => initial_ideal_in::<Fp>(m, n, shape, opts),
    }
}

struct Memo<'a> {
    m: usize,
    n: usize,
    opts: &'a SweepOptions,
    cache: BTreeMap<Vec<usize>, MonomialIdeal>,
}

impl Memo<'_> {
    fn get(&mut self, shape: &Shape) -> Result<MonomialIdeal> {
        if let Some(i) = self.cache.get(shape.parts()) {
            return Ok(i.clone());
        }
        let i = initial_ideal(self.m, self.n, shape, self.opts)?;
        self.cache.insert(shape.parts().to_vec(), i.clone());
        Ok(i)
    }
}

fn truncated_product(a: &MonomialIdeal, b: &MonomialIdeal, bound: usize) -> Result<MonomialIdeal> {
    Ok(a.truncate(bound).product(&b.truncate(bound))?.truncate(bound))
}

fn truncated_intersection(ideals: &[MonomialIdeal], bound: usize) -> Result<MonomialIdeal> {
    let (m, n) = ideals[0].ambient();
    ideals.iter().try_fold(MonomialIdeal::unit(m, n), |acc, i| Ok(acc.intersect(&i.truncate(bound))?.truncate(bound)))
}

fn grobner_in<F: Field>(m: usize, n: usize, shape: &Shape, opts: &SweepOptions) -> Result<Report> {
    let bound = opts.max_degree;
    let mut report = Report::new(format!("groebner m={m} n={n} shape={shape} max_degree={bound}"));
    let gens = js_generators::<F>(m, n, shape)?;
    let diag = diagonal_ideal(m, n, shape)?;
    let (total, bidegrees) = relevant(m, n, shape, bound);
    report.checked = total;

    let outcomes = opts.exec.map(&bidegrees, |b| -> Result<(BTreeSet<Monomial>, BTreeSet<Monomial>)> {
        let lhs = graded_piece(&gens, b, opts.cap_dim)?.initial_monomials();
        let rhs: BTreeSet<Monomial> = diag.piece(b).into_iter().collect();
        Ok((lhs, rhs))
    });
    let mut initial: Vec<Monomial> = Vec::new();
    for (b, outcome) in bidegrees.iter().zip(outcomes) {
        let (lhs, rhs) = outcome?;
        if lhs.is_empty() && rhs.is_empty() {
            continue;
        }
        report.push(ReportLine::new(b.to_string(), lhs == rhs).field("dim_lhs", lhs.len()).field("dim_rhs", rhs.len()));
        initial.extend(lhs);
    }
    let ini = MonomialIdeal::new(m, n, initial);
    report.push(
        ReportLine::new("generated_by_diagonals", ini.equal_up_to(&diag, bound))
            .field("ini", ini.truncate(bound))
            .field("diag", diag.truncate(bound)),
    );

    let mut memo = Memo { m, n, opts, cache: BTreeMap::new() };
    memo.cache.insert(shape.parts().to_vec(), ini.clone());

    let mut product = MonomialIdeal::unit(m, n);
    for &s in shape.parts() {
        product = truncated_product(&product, &memo.get(&Shape::rectangle(s, 1))?, bound)?;
    }
    report.push(ReportLine::new("product_of_initials", product.equal_up_to(&ini, bound)).field("product", &product));

    let parts = shape.distinct_parts();
    let mut of_powers = Vec::new();
    let mut powers_of = Vec::new();
    for &(t, e) in &parts {
        of_powers.push(memo.get(&Shape::rectangle(t, e))?);
        let single = memo.get(&Shape::rectangle(t, 1))?.truncate(bound);
        let mut p = MonomialIdeal::unit(m, n);
        for _ in 0..e {
            p = truncated_product(&p, &single, bound)?;
        }
        powers_of.push(p);
    }
    if !parts.is_empty() {
        let a = truncated_intersection(&of_powers, bound)?;
        let b = truncated_intersection(&powers_of, bound)?;
        report.push(
            ReportLine::new("intersection_of_initial_powers", a.equal_up_to(&ini, bound)).field("intersection", &a),
        );
        report.push(
            ReportLine::new("intersection_of_powers_of_initials", b.equal_up_to(&ini, bound)).field("intersection", &b),
        );
    }
    Ok(report)
}

/// Checks in every bidegree of total degree at most `opts.max_degree` that the diagonals of
/// the row-superstandard generators span the initial space of `J_S`, and that the truncated
/// initial ideal equals the product `∏ ini(J_{s_i})` and both intersections
/// `⋂ ini(J_{t_i}^{e_i})` and `⋂ ini(J_{t_i})^{e_i}`.
pub fn check_grobner_js(m: usize, n: usize, shape: &Shape, opts: &SweepOptions) -> Result<Report> {
    match opts.arith {
        Arith::Rational => grobner_in::<Rational>(m, n, shape, opts),
        Arith::Modular => grobner_in::<Fp>(m, n, shape, opts),
    }
}

fn standard_basis_in<F: Field>(m: usize, n: usize, shape: &Shape, opts: &SweepOptions) -> Result<Report> {
    let bound = opts.max_degree;
    let mut report = Report::new(format!("standard-basis m={m} n={n} shape={shape} max_degree={bound}"));
    let gens = js_generators::<F>(m, n, shape)?;
    let (total, bidegrees) = relevant(m, n, shape, bound);
    report.checked = total;

    let outcomes = opts.exec.map(&bidegrees, |b| -> Result<Option<ReportLine>> {
        let piece = graded_piece(&gens, b, opts.cap_dim)?;
        let standard = enumerate_standard(m, n, b, opts.cap_enum)?;
        let mut in_piece = BTreeSet::new();
        let mut containing = BTreeSet::new();
        for sigma in &standard {
            if piece.contains(&poly_to_vec(&expand_bitableau(sigma))) {
                in_piece.insert(sigma);
            }
            if sigma.contains_superstandard(shape) {
                containing.insert(sigma);
            }
        }
        if piece.dim() == 0 && in_piece.is_empty() && containing.is_empty() {
            return Ok(None);
        }
        let mut line = ReportLine::new(b.to_string(), in_piece == containing && piece.dim() == containing.len())
            .field("dim_lhs", piece.dim())
            .field("dim_rhs", containing.len());
        if let Some(s) = in_piece.symmetric_difference(&containing).next() {
            line = line.field("differs_at", s);
        }
        Ok(Some(line))
    });
    for line in outcomes {
        if let Some(line) = line? {
            report.push(line);
        }
    }
    Ok(report)
}

/// Checks that, among standard bitableaux of each bidegree, those lying in `J_S` are exactly
/// those containing a superstandard subtableau of shape `S`, and that they span the piece.
pub fn check_standard_basis(m: usize, n: usize, shape: &Shape, opts: &SweepOptions) -> Result<Report> {
    match opts.arith {
        Arith::Rational => standard_basis_in::<Rational>(m, n, shape, opts),
        Arith::Modular => standard_basis_in::<Fp>(m, n, shape, opts),
    }
}

fn piece_rows<F: Field>(piece: &GradedPiece<F>) -> Vec<crate::linalg::SparseVec<Monomial, F>> {
    piece.basis().cloned().collect()
}

fn primary_in<F: Field>(m: usize, n: usize, shape: &Shape, opts: &SweepOptions) -> Result<Report> {
    let bound = opts.max_degree;
    let parts = shape.distinct_parts();
    let desc: Vec<String> = parts.iter().map(|(t, e)| format!("J_{t}^{e}")).collect();
    let mut report =
        Report::new(format!("primary m={m} n={n} shape={shape} max_degree={bound} components={}", desc.join(",")));
    let gens = js_generators::<F>(m, n, shape)?;
    let comps: Vec<(Shape, Generators<F>)> = parts
        .iter()
        .map(|&(t, e)| {
            let s = Shape::rectangle(t, e);
            js_generators::<F>(m, n, &s).map(|g| (s, g))
        })
        .collect::<Result<_>>()?;
    let (total, bidegrees) = relevant(m, n, shape, bound);
    report.checked = total;

    let outcomes = opts.exec.map(&bidegrees, |b| -> Result<Option<ReportLine>> {
        let piece = graded_piece(&gens, b, opts.cap_dim)?;
        let comp_pieces: Vec<GradedPiece<F>> =
            comps.iter().map(|(_, g)| graded_piece(g, b, opts.cap_dim)).collect::<Result<_>>()?;
        let contained = comp_pieces.iter().all(|q| piece.basis().all(|v| q.contains(v)));
        let mut meet = piece_rows(&comp_pieces[0]);
        for q in &comp_pieces[1..] {
            if meet.is_empty() {
                break;
            }
            meet = intersect(&meet, &piece_rows(q));
        }
        if piece.dim() == 0 && meet.is_empty() {
            return Ok(None);
        }
        Ok(Some(
            ReportLine::new(b.to_string(), contained && meet.len() == piece.dim())
                .field("dim_lhs", piece.dim())
                .field("dim_rhs", meet.len())
                .field("contained", contained),
        ))
    });
    for line in outcomes {
        if let Some(line) = line? {
            report.push(line);
        }
    }

    if comps.len() > 1 {
        for (i, &(t, e)) in parts.iter().enumerate() {
            match irredundancy_witness(m, n, &comps, i, opts)? {
                Some(w) => report.push(ReportLine::new(format!("irredundant J_{t}^{e}"), true).field("witness", w)),
                None => {
                    report.note(format!("irredundancy of J_{t}^{e}: no witness up to degree {bound} (inconclusive)"))
                }
            }
        }
    }
    Ok(report)
}

/// A standard bitableau in every component except the `i`-th, confirmed by linear
/// membership. Candidates come from the superstandard-containment test.
fn irredundancy_witness<F: Field>(
    m: usize,
    n: usize,
    comps: &[(Shape, Generators<F>)],
    i: usize,
    opts: &SweepOptions,
) -> Result<Option<Bitableau>> {
    let mut others = Vec::new();
    for (j, (s, _)) in comps.iter().enumerate() {
        if j != i {
            others.extend_from_slice(s.parts());
        }
    }
    others.sort_unstable_by(|a, b| b.cmp(a));
    let others = Shape::new(others)?;
    for d in 0..=opts.max_degree {
        for b in Bidegree::all_of_total(m, n, d) {
            if !supports(&b, &others) {
                continue;
            }
            let candidates: Vec<Bitableau> = enumerate_standard(m, n, &b, opts.cap_enum)?
                .into_iter()
                .filter(|sigma| comps.iter().enumerate().all(|(j, (s, _))| sigma.contains_superstandard(s) == (j != i)))
                .collect();
            if candidates.is_empty() {
                continue;
            }
            let pieces: Vec<GradedPiece<F>> =
                comps.iter().map(|(_, g)| graded_piece(g, &b, opts.cap_dim)).collect::<Result<_>>()?;
            for sigma in candidates {
                let v = poly_to_vec(&expand_bitableau(&sigma));
                if pieces.iter().enumerate().all(|(j, p)| p.contains(&v) == (j != i)) {
                    return Ok(Some(sigma));
                }
            }
        }
    }
    Ok(None)
}

/// Checks `J_S = ⋂ J_{t_i}^{e_i}` on every graded piece up to `opts.max_degree`, where the
/// `t_i` are the distinct parts of `S` and `e_i` the last position of `t_i`, and looks for
/// standard bitableaux showing that no component can be dropped.
pub fn check_primary(m: usize, n: usize, shape: &Shape, opts: &SweepOptions) -> Result<Report> {
    match opts.arith {
        Arith::Rational => primary_in::<Rational>(m, n, shape, opts),
        Arith::Modular => primary_in::<Fp>(m, n, shape, opts),
    }
}
