use std::collections::BTreeSet;

use bitableau::grading::Bidegree;
use bitableau::ideals::{diagonal_ideal, initial_space, js_polynomials, straighten, Generators, DEFAULT_DIM_CAP};
use bitableau::krs::{diag, krs};
use bitableau::ktheory::{k_polynomial_of_ideal, schur_expand, schur_poly, DEFAULT_GEN_CAP};
use bitableau::polyring::{expand_bitableau, expand_minor, leading_monomial, Monomial, Polynomial, Rational};
use bitableau::rees::{lattice, lattice_join, lattice_meet};
use bitableau::tableaux::{all_minors, enumerate_standard, Bitableau, Minor, Shape, DEFAULT_ENUM_CAP};
use num_traits::{One, Zero};
use proptest::prelude::*;

#[test]
fn minor_order_is_a_partial_order() {
    let minors = all_minors(4, 4);
    for a in &minors {
        assert!(a.leq(a));
        for b in &minors {
            if a.leq(b) && b.leq(a) {
                assert_eq!(a, b);
            }
            if a.leq(b) {
                for c in &minors {
                    if b.leq(c) {
                        assert!(a.leq(c), "{a} {b} {c}");
                    }
                }
            }
        }
    }
}

#[test]
fn minors_lead_with_their_diagonal() {
    for minor in all_minors(5, 5) {
        let t = Bitableau::new(vec![minor.clone()]);
        assert_eq!(leading_monomial(&expand_minor(&minor)).unwrap(), diag(&t), "{minor}");
    }
}

#[test]
fn lattice_is_distributive() {
    for n in 1..=5 {
        let l = lattice(4, n);
        for a in &l {
            for b in &l {
                let meet = lattice_meet(a, b);
                let join = lattice_join(a, b);
                assert!(meet.leq(a) && meet.leq(b) && a.leq(&join) && b.leq(&join));
                assert_eq!(lattice_meet(a, &lattice_join(a, b)), *a);
                for c in &l {
                    // the meet is the greatest lower bound
                    if c.leq(a) && c.leq(b) {
                        assert!(c.leq(&meet));
                    }
                    assert_eq!(
                        lattice_meet(a, &lattice_join(b, c)),
                        lattice_join(&lattice_meet(a, b), &lattice_meet(a, c)),
                        "{a} {b} {c}"
                    );
                }
            }
        }
    }
}

#[test]
fn initial_spaces_are_krs_images_of_the_standard_basis() {
    let shape: Shape = "2,1".parse().unwrap();
    let gens: Generators<Rational> = Generators::new(3, 3, &js_polynomials(3, 3, &shape).unwrap());
    for b in Bidegree::all_up_to(3, 3, 5) {
        let ini = initial_space(&gens, &b, DEFAULT_DIM_CAP).unwrap();
        let images: BTreeSet<Monomial> = enumerate_standard(3, 3, &b, DEFAULT_ENUM_CAP)
            .unwrap()
            .iter()
            .filter(|s| s.contains_superstandard(&shape))
            .map(|s| krs(s).unwrap())
            .collect();
        assert_eq!(ini, images, "{b}");
    }
}

#[test]
fn k_polynomial_leads_with_the_transpose() {
    for s in ["1", "2", "2,1", "2,2", "3,2", "3,1,1", "3,3,2"] {
        let shape: Shape = s.parse().unwrap();
        let ideal = diagonal_ideal(3, 3, &shape).unwrap();
        let t = shape.transpose();
        assert_eq!(ideal.lcm_of_generators().exponent((1, 1)) as usize, t.part(1), "{s}");
        let k = k_polynomial_of_ideal(&ideal, DEFAULT_GEN_CAP).unwrap();
        let u: Vec<i64> = t.parts().iter().map(|&p| p as i64).collect();
        let low = k.lowest_u_terms();
        assert!(low.iter().all(|((eu, _), _)| *eu == u), "{s}: {low:?}");
        let e = schur_expand(&k, 3).unwrap();
        assert!(e.max_length() <= t.part(1), "{s}");
        assert_eq!(e.reassemble(), k);
    }
}

fn rational_det(mut a: Vec<Vec<Rational>>) -> Rational {
    let n = a.len();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= a[c][c].clone();
        for r in c + 1..n {
            let f = &a[r][c] / &a[c][c];
            let (top, bottom) = a.split_at_mut(r);
            for (x, y) in bottom[0][c..].iter_mut().zip(&top[c][c..]) {
                *x -= &f * y;
            }
        }
    }
    det
}

#[test]
fn schur_polynomials_match_the_bialternant_of_the_transpose() {
    let n = 3;
    let point: Vec<Rational> = [2, 3, 7].iter().map(|&x| Rational::from_integer(x.into())).collect();
    let pow = |x: &Rational, e: usize| (0..e).fold(Rational::one(), |acc, _| acc * x);
    let vandermonde = rational_det((0..n).map(|i| (0..n).map(|j| pow(&point[i], n - 1 - j)).collect()).collect());
    for d in 1..=9 {
        for shape in Shape::partitions(d, 3).into_iter().filter(|s| s.len() <= 3) {
            let sigma = schur_poly(&shape, n).unwrap();
            let value = sigma.terms().fold(Rational::zero(), |acc, ((_, v), c)| {
                let mono = v.iter().enumerate().fold(Rational::one(), |m, (j, &e)| m * pow(&point[j], e as usize));
                acc + mono * Rational::from_integer((*c).into())
            });
            let mu = shape.transpose();
            let alt = rational_det(
                (0..n).map(|i| (0..n).map(|j| pow(&point[i], mu.part(j + 1) + n - 1 - j)).collect()).collect(),
            );
            assert_eq!(value, alt / &vandermonde, "{shape}");
        }
    }
}

fn minor_strategy(m: usize, n: usize) -> impl Strategy<Value = Minor> {
    let all = all_minors(m, n);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

fn monomial_strategy() -> impl Strategy<Value = Monomial> {
    proptest::collection::vec(0u32..3, 9)
        .prop_map(|e| Monomial::from_matrix(&e.chunks(3).map(|r| r.to_vec()).collect::<Vec<_>>()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn monomial_order_is_multiplicative(a in monomial_strategy(), b in monomial_strategy(), c in monomial_strategy()) {
        prop_assert!(Monomial::one() <= a);
        if a < b {
            prop_assert!(&a * &c < &b * &c);
        }
        prop_assert_eq!(a.cmp(&b), b.cmp(&a).reverse());
    }

    #[test]
    fn leading_monomials_multiply(x in minor_strategy(3, 4), y in minor_strategy(3, 4)) {
        let p = expand_minor(&x);
        let q = expand_minor(&y);
        let pq: Polynomial = &p * &q;
        prop_assert_eq!(leading_monomial(&pq).unwrap(), &leading_monomial(&p).unwrap() * &leading_monomial(&q).unwrap());
        prop_assert!(pq.is_homogeneous(3, 4));
    }

    #[test]
    fn straightening_is_integral_and_exact(x in minor_strategy(3, 4), y in minor_strategy(3, 4)) {
        let d = Bitableau::new(vec![x, y]);
        let rep = straighten(&d);
        prop_assert!(rep.is_integral());
        let mut sum = Polynomial::zero();
        for (sigma, c) in &rep.terms {
            prop_assert!(sigma.is_standard());
            prop_assert_eq!(sigma.content(3, 4), d.content(3, 4));
            sum = &sum + &expand_bitableau(sigma).scale(c);
        }
        prop_assert_eq!(sum, expand_bitableau(&d));
    }
}
