use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::linalg::{poly_to_vec, TrackedEchelon};
use crate::polyring::{expand_bitableau, Rational};
use crate::tableaux::{enumerate_standard, Bitableau, DEFAULT_ENUM_CAP};

/// Coefficients of a polynomial in the basis of standard bitableaux.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StandardRepresentation {
    pub terms: BTreeMap<Bitableau, Rational>,
}

impl StandardRepresentation {
    pub fn coeff(&self, sigma: &Bitableau) -> Rational {
        self.terms.get(sigma).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }
}

impl fmt::Display for StandardRepresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (sigma, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{sign}{}*{sigma}", c.abs())?;
        }
        Ok(())
    }
}

/// The unique representation of a product of minors as a combination of standard
/// bitableaux of the same content, found by solving against their expansions.
pub fn straighten(d: &Bitableau) -> StandardRepresentation {
    if d.is_standard() {
        let mut terms = BTreeMap::new();
        terms.insert(d.clone(), Rational::from_integer(1.into()));
        return StandardRepresentation { terms };
    }
    let m = d.factors().iter().flat_map(|f| f.rows().last()).copied().max().unwrap_or(0);
    let n = d.factors().iter().flat_map(|f| f.cols().last()).copied().max().unwrap_or(0);
    let content = d.content(m, n);
    let basis = enumerate_standard(m, n, &content, DEFAULT_ENUM_CAP)
        .expect("standard bitableaux of one content stay far below the enumeration cap");
    let mut ech: TrackedEchelon<_, Rational> = TrackedEchelon::new();
    for sigma in &basis {
        let independent = ech.insert(poly_to_vec(&expand_bitableau(sigma)));
        assert!(independent, "standard bitableaux must be linearly independent");
    }
    let coords = ech.solve(&poly_to_vec(&expand_bitableau(d))).expect("standard bitableaux span every graded piece");
    StandardRepresentation { terms: coords.entries().iter().map(|(i, c)| (basis[*i].clone(), c.clone())).collect() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::Polynomial;

    fn bt(s: &str) -> Bitableau {
        s.parse().unwrap()
    }

    fn q(x: i64) -> Rational {
        Rational::from_integer(x.into())
    }

    fn reassemble(rep: &StandardRepresentation) -> Polynomial {
        rep.terms.iter().fold(Polynomial::zero(), |acc, (s, c)| &acc + &expand_bitableau(s).scale(c))
    }

    #[test]
    fn standard_input_is_fixed() {
        let s = bt("[1 2|1 2]*[1|1]");
        let rep = straighten(&s);
        assert_eq!(rep.terms.len(), 1);
        assert_eq!(rep.coeff(&s), q(1));
    }

    #[test]
    fn plucker_straightening() {
        let rep = straighten(&bt("[1 2|2 3]*[1 2|1 4]"));
        assert_eq!(rep.terms.len(), 2);
        assert_eq!(rep.coeff(&bt("[1 2|1 3]*[1 2|2 4]")), q(1));
        assert_eq!(rep.coeff(&bt("[1 2|1 2]*[1 2|3 4]")), q(-1));
    }

    #[test]
    fn degree_two_straightening_respects_the_order_bounds() {
        let d = bt("[1|2]*[2|1]");
        let rep = straighten(&d);
        assert!(rep.is_integral());
        assert_eq!(reassemble(&rep), expand_bitableau(&d));
        let first = &d.factors()[0];
        let second = &d.factors()[1];
        for sigma in rep.terms.keys() {
            let eps = &sigma.factors()[0];
            assert!(eps.leq(first) && eps != first, "{sigma}");
            if let Some(eta) = sigma.factors().get(1) {
                assert!(second.leq(eta) && second != eta, "{sigma}");
            }
        }
    }
}
