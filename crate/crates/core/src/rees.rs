//! The lattice `𝒜` of row-initial minors `[a_1 … a_s] = [1..s | a_1 … a_s]`, the toric
//! presentation of the multi-Rees algebra of `J_1, …, J_m` through the map
//! `Φ(p_a) = diag[a] · y_s`, and the lifting of Hibi relations through straightening.

use std::cmp::{Ordering, Reverse};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::ideals::straighten;
use crate::krs::diag;
use crate::polyring::{expand_bitableau, expand_minor, leading_monomial, monomials_of_degree, Monomial, Polynomial};
use crate::report::{Report, ReportLine};
use crate::tableaux::{subsets, Bitableau, Minor};

/// The column set of a row-initial minor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeElement {
    cols: Vec<usize>,
}

impl LatticeElement {
    pub fn new(cols: Vec<usize>) -> Result<Self> {
        if cols.is_empty() {
            return Err(Error::Parse("lattice elements are nonempty".into()));
        }
        Minor::row_initial(cols.clone())?;
        Ok(LatticeElement { cols })
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn size(&self) -> usize {
        self.cols.len()
    }

    pub fn minor(&self) -> Minor {
        Minor::row_initial(self.cols.clone()).expect("validated on construction")
    }

    /// The order inherited from minors: `a ≤ b` iff `|a| ≥ |b|` and `a_i ≤ b_i` for `i ≤ |b|`.
    pub fn leq(&self, other: &LatticeElement) -> bool {
        self.size() >= other.size() && self.cols.iter().zip(&other.cols).all(|(a, b)| a <= b)
    }

    pub fn comparable(&self, other: &LatticeElement) -> bool {
        self.leq(other) || other.leq(self)
    }

    /// `diag[a] = x_{1 a_1} ⋯ x_{s a_s}`.
    pub fn diag(&self) -> Monomial {
        Monomial::from_vars(self.cols.iter().enumerate().map(|(i, &c)| (i + 1, c)))
    }

    /// Position in the fixed linear extension of `𝒜`: larger size first, then colex.
    fn extension_key(&self) -> (Reverse<usize>, Vec<usize>) {
        (Reverse(self.size()), self.cols.iter().rev().copied().collect())
    }
}

impl fmt::Display for LatticeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols: Vec<String> = self.cols.iter().map(|c| c.to_string()).collect();
        write!(f, "p[{}]", cols.join(","))
    }
}

impl FromStr for LatticeElement {
    type Err = Error;

    /// Accepts `2,3`, `2 3`, `[2 3]` and `p[2,3]`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('p').trim_start_matches('[').trim_end_matches(']');
        let cols = t
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|w| !w.is_empty())
            .map(|w| w.parse::<usize>().map_err(|_| Error::Parse(s.to_string())))
            .collect::<Result<Vec<_>>>()?;
        LatticeElement::new(cols)
    }
}

/// All elements of `𝒜` for an `m × n` matrix, in the fixed linear extension.
pub fn lattice(m: usize, n: usize) -> Vec<LatticeElement> {
    let mut out: Vec<LatticeElement> =
        (1..=m.min(n)).flat_map(|s| subsets(n, s)).map(|cols| LatticeElement { cols }).collect();
    out.sort_by_key(|a| a.extension_key());
    out
}

fn ordered(a: &LatticeElement, b: &LatticeElement) -> (LatticeElement, LatticeElement) {
    if b.size() <= a.size() {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    }
}

pub fn lattice_meet(a: &LatticeElement, b: &LatticeElement) -> LatticeElement {
    let (a, b) = ordered(a, b);
    let r = b.size();
    let mut cols: Vec<usize> = a.cols[..r].iter().zip(&b.cols).map(|(x, y)| *x.min(y)).collect();
    cols.extend_from_slice(&a.cols[r..]);
    assert!(cols.windows(2).all(|w| w[0] < w[1]), "meet must be strictly increasing");
    LatticeElement { cols }
}

pub fn lattice_join(a: &LatticeElement, b: &LatticeElement) -> LatticeElement {
    let (a, b) = ordered(a, b);
    let cols: Vec<usize> = a.cols.iter().zip(&b.cols).map(|(x, y)| *x.max(y)).collect();
    assert!(cols.windows(2).all(|w| w[0] < w[1]), "join must be strictly increasing");
    LatticeElement { cols }
}

/// A monomial `u · p_{a_1} ⋯ p_{a_e}` of the presentation ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PMonomial {
    pub x: Monomial,
    /// Sorted along the linear extension of `𝒜`.
    p: Vec<LatticeElement>,
}

impl PMonomial {
    pub fn new(x: Monomial, mut p: Vec<LatticeElement>) -> Self {
        p.sort_by_key(|a| a.extension_key());
        PMonomial { x, p }
    }

    pub fn p_part(&self) -> &[LatticeElement] {
        &self.p
    }

    pub fn p_degree(&self) -> usize {
        self.p.len()
    }

    /// `(deg u, #p of size 1, …, #p of size m)`.
    pub fn multidegree(&self, m: usize) -> (usize, Vec<usize>) {
        let mut sizes = vec![0; m];
        for a in &self.p {
            sizes[a.size() - 1] += 1;
        }
        (self.x.degree(), sizes)
    }

    pub fn divides(&self, other: &PMonomial) -> bool {
        if !self.x.divides(&other.x) {
            return false;
        }
        let mut rest = other.p.clone();
        self.p.iter().all(|a| match rest.iter().position(|b| b == a) {
            Some(i) => {
                rest.remove(i);
                true
            }
            None => false,
        })
    }

    fn p_exponents(&self) -> BTreeMap<(Reverse<usize>, Vec<usize>), u32> {
        let mut out = BTreeMap::new();
        for a in &self.p {
            *out.entry(a.extension_key()).or_insert(0) += 1;
        }
        out
    }

    pub fn is_squarefree_in_p(&self) -> bool {
        self.p_exponents().values().all(|&e| e == 1)
    }
}

impl fmt::Display for PMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if !self.x.is_one() || self.p.is_empty() {
            parts.push(self.x.to_string());
        }
        // larger minors first, as in the usual way of writing these relations
        let mut p = self.p.clone();
        p.sort_by(|a, b| b.size().cmp(&a.size()).then_with(|| a.cols.cmp(&b.cols)));
        parts.extend(p.iter().map(|a| a.to_string()));
        f.write_str(&parts.join("*"))
    }
}

/// Reverse lexicographic order on the presentation ring, graded by total degree, where the
/// `p_a` are the smallest variables ordered by the linear extension of `𝒜` and the `x_ij`
/// come above them in the diagonal order.
pub fn revlex_cmp(u: &PMonomial, w: &PMonomial) -> Ordering {
    let du = u.x.degree() + u.p.len();
    let dw = w.x.degree() + w.p.len();
    if du != dw {
        return du.cmp(&dw);
    }
    let (pu, pw) = (u.p_exponents(), w.p_exponents());
    let keys: BTreeSet<_> = pu.keys().chain(pw.keys()).cloned().collect();
    // the smallest variable is the one earliest in the extension
    for k in keys.iter() {
        let (a, b) = (pu.get(k).copied().unwrap_or(0), pw.get(k).copied().unwrap_or(0));
        if a != b {
            return b.cmp(&a);
        }
    }
    let vars: BTreeSet<_> = u.x.exponents().iter().chain(w.x.exponents()).map(|(v, _)| *v).collect();
    // in the diagonal order the largest key is the smallest variable
    for v in vars.iter().rev() {
        let (a, b) = (u.x.exponent(*v), w.x.exponent(*v));
        if a != b {
            return b.cmp(&a);
        }
    }
    Ordering::Equal
}

/// `plus - minus`, where `plus` is the initial term.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Binomial {
    pub plus: PMonomial,
    pub minus: PMonomial,
}

impl Binomial {
    pub fn underlined(&self) -> &PMonomial {
        &self.plus
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", self.plus, self.minus)
    }
}

/// `p_a p_b - p_{a∧b} p_{a∨b}` for every unordered incomparable pair.
pub fn hibi_relations(m: usize, n: usize) -> Vec<Binomial> {
    let l = lattice(m, n);
    let mut out = Vec::new();
    for (i, a) in l.iter().enumerate() {
        for b in &l[i + 1..] {
            if !a.comparable(b) {
                out.push(Binomial {
                    plus: PMonomial::new(Monomial::one(), vec![a.clone(), b.clone()]),
                    minus: PMonomial::new(Monomial::one(), vec![lattice_meet(a, b), lattice_join(a, b)]),
                });
            }
        }
    }
    out
}

/// `x_{ij} p_a - x_{i a_i} p_b` with `a_{i-1} < j < a_i` and `b = a ∖ {a_i} ∪ {j}`.
pub fn degree_one_relations(m: usize, n: usize) -> Vec<Binomial> {
    let mut out = Vec::new();
    for a in lattice(m, n) {
        for i in 1..=a.size() {
            let lo = if i == 1 { 0 } else { a.cols[i - 2] };
            let ai = a.cols[i - 1];
            for j in lo + 1..ai {
                let mut cols = a.cols.clone();
                cols[i - 1] = j;
                out.push(Binomial {
                    plus: PMonomial::new(Monomial::var(i, j), vec![a.clone()]),
                    minus: PMonomial::new(Monomial::var(i, ai), vec![LatticeElement { cols }]),
                });
            }
        }
    }
    out
}

/// The degree-one relations followed by the Hibi relations.
pub fn kernel_generators(m: usize, n: usize) -> Vec<Binomial> {
    let mut g = degree_one_relations(m, n);
    g.extend(hibi_relations(m, n));
    g
}

/// A monomial `w · y_1^{e_1} ⋯ y_m^{e_m}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct XyMonomial {
    pub x: Monomial,
    pub y: Vec<u32>,
}

impl fmt::Display for XyMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.x)?;
        for (i, e) in self.y.iter().enumerate() {
            match e {
                0 => {}
                1 => write!(f, "*y[{}]", i + 1)?,
                e => write!(f, "*y[{}]^{e}", i + 1)?,
            }
        }
        Ok(())
    }
}

fn y_exponents(pm: &PMonomial, m: usize) -> Vec<u32> {
    let mut y = vec![0; m];
    for a in &pm.p {
        y[a.size() - 1] += 1;
    }
    y
}

/// `Φ(p_a) = diag[a] · y_{|a|}`.
pub fn phi_eval(pm: &PMonomial, m: usize) -> XyMonomial {
    let x = pm.p.iter().fold(pm.x.clone(), |acc, a| &acc * &a.diag());
    XyMonomial { x, y: y_exponents(pm, m) }
}

/// `Ψ(p_a) = [a] · y_{|a|}`; the `y` part of the image is a single monomial.
pub fn psi_eval(pm: &PMonomial, m: usize) -> (Polynomial, Vec<u32>) {
    let x = pm.p.iter().fold(Polynomial::monomial(pm.x.clone(), One::one()), |acc, a| &acc * &expand_minor(&a.minor()));
    (x, y_exponents(pm, m))
}

/// All multisets of `e` elements of `items`, as sorted index lists.
fn multisets(count: usize, e: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, count: usize, e: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == e {
            out.push(prefix.clone());
            return;
        }
        for i in start..count {
            prefix.push(i);
            rec(i, count, e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, count, e, &mut Vec::new(), &mut out);
    out
}

/// The normal form conditions: the `p_a` form a chain, and no `x_ij` in `u` has
/// `a_{k,i-1} < j < a_{k,i}` for any factor `a_k` (with `a_{k,0} = 0`).
pub fn is_normal_form(pm: &PMonomial) -> bool {
    let chain = pm.p.windows(2).all(|w| w[0].leq(&w[1]));
    let x_ok = pm.x.exponents().iter().all(|&((i, j), _)| {
        pm.p.iter().all(|a| {
            if i > a.size() {
                return true;
            }
            let lo = if i == 1 { 0 } else { a.cols[i - 2] };
            j >= a.cols[i - 1] || j <= lo
        })
    });
    chain && x_ok
}

/// Verifies the kernel generators: each lies in `Ker Φ`; and in every multidegree with
/// p-degree at most `max_p` and x-degree at most `max_x`, each image monomial of `Φ` has
/// exactly one preimage not divisible by an underlined term, and that preimage is in
/// normal form. Counts agreeing certify the Gröbner basis property up to the bound.
pub fn check_kernel(m: usize, n: usize, max_p: usize, max_x: usize, exec: Exec) -> Result<Report> {
    let gens = kernel_generators(m, n);
    let mut report = Report::new(format!("kernel m={m} n={n} max_p_degree={max_p} max_x_degree={max_x}"));
    let in_kernel = gens.iter().filter(|g| phi_eval(&g.plus, m) != phi_eval(&g.minus, m)).count();
    report.push(
        ReportLine::new("generators_in_kernel", in_kernel == 0)
            .field("generators", gens.len())
            .field("outside", in_kernel),
    );
    let quadratic = gens.iter().all(|g| {
        g.plus.p_degree() <= 2
            && g.minus.p_degree() <= 2
            && g.plus.is_squarefree_in_p()
            && revlex_cmp(&g.plus, &g.minus) == Ordering::Greater
    });
    report.push(ReportLine::new("quadratic_squarefree_initial", quadratic));

    let l = lattice(m, n);
    let underlined: Vec<&PMonomial> = gens.iter().map(|g| g.underlined()).collect();
    let mut jobs: Vec<(usize, usize)> = Vec::new();
    for e in 0..=max_p {
        for dx in 0..=max_x {
            jobs.push((e, dx));
        }
    }
    let per = exec.map(&jobs, |&(e, dx)| {
        let xs = monomials_of_degree(m, n, dx);
        // multidegree -> image -> (standard preimages, all in normal form)
        let mut by_degree: BTreeMap<Vec<usize>, BTreeMap<XyMonomial, (usize, bool)>> = BTreeMap::new();
        for ps in multisets(l.len(), e) {
            let p: Vec<LatticeElement> = ps.iter().map(|&i| l[i].clone()).collect();
            for x in &xs {
                let pm = PMonomial::new(x.clone(), p.clone());
                let standard = !underlined.iter().any(|u| u.divides(&pm));
                let (_, sizes) = pm.multidegree(m);
                let slot = by_degree.entry(sizes).or_default().entry(phi_eval(&pm, m)).or_insert((0, true));
                if standard {
                    slot.0 += 1;
                    slot.1 &= is_normal_form(&pm);
                }
            }
        }
        by_degree
            .into_iter()
            .map(|(sizes, images)| {
                let standard: usize = images.values().map(|s| s.0).sum();
                let unique = images.values().all(|s| s.0 == 1);
                let normal = images.values().all(|s| s.1);
                let sizes: Vec<String> = sizes.iter().map(|s| s.to_string()).collect();
                ReportLine::new(format!("x={dx} p=({})", sizes.join(",")), unique && normal)
                    .field("standard", standard)
                    .field("images", images.len())
                    .field("normal_form", normal)
            })
            .collect::<Vec<_>>()
    });
    for lines in per {
        report.checked += lines.len();
        for line in lines {
            report.push(line);
        }
    }
    Ok(report)
}

/// Straightens `[a][b]` for an incomparable pair and checks that `[a∧b][a∨b]` occurs and
/// that every other standard summand has a strictly smaller leading monomial than `[a][b]`.
pub fn check_lift(a: &LatticeElement, b: &LatticeElement) -> Result<Report> {
    if a.comparable(b) {
        return Err(Error::ComparablePair(a.to_string(), b.to_string()));
    }
    let meet = lattice_meet(a, b);
    let join = lattice_join(a, b);
    let product = Bitableau::new(vec![a.minor(), b.minor()]);
    let target = Bitableau::new(vec![meet.minor(), join.minor()]);
    let lead = leading_monomial(&expand_bitableau(&product))?;
    let rep = straighten(&product);
    let coeff = rep.coeff(&target);

    let mut report = Report::new(format!("lift {a}*{b} -> {meet}*{join}"));
    report.checked = rep.terms.len();
    report.push(
        ReportLine::new("meet_join_summand", !coeff.is_zero())
            .field("coefficient", &coeff)
            .field("leading", &lead)
            .field("diag", diag(&target)),
    );
    if !coeff.is_zero() && !coeff.is_one() {
        report.note(format!("meet-join coefficient is {coeff}, not 1"));
    }
    for (sigma, c) in &rep.terms {
        if *sigma == target {
            continue;
        }
        let l = leading_monomial(&expand_bitableau(sigma))?;
        report.push(ReportLine::new(sigma.to_string(), l < lead).field("coefficient", c).field("leading", l));
    }
    Ok(report)
}

/// `check_lift` over every incomparable pair of `𝒜`, one line per pair.
pub fn check_all_lifts(m: usize, n: usize, exec: Exec) -> Result<Report> {
    let hibi = hibi_relations(m, n);
    let mut report = Report::new(format!("lifts m={m} n={n}"));
    for (h, r) in hibi.iter().zip(exec.map(&hibi, |h| check_lift(&h.plus.p[0], &h.plus.p[1]))) {
        let r = r?;
        let coeff = r.lines[0].fields[0].1.clone();
        report.push(
            ReportLine::new(h.plus.to_string(), r.passed()).field("coefficient", coeff).field("summands", r.checked),
        );
        report.notes.extend(r.notes);
        report.checked += 1;
    }
    Ok(report)
}
