//! The ideals `J_S`, their graded pieces and initial ideals, and the verification sweeps
//! built on them.
//!
//! `J_t` is generated by the `t`-minors of the first `t` rows; `J_S` is the product
//! `J_{s_1} ⋯ J_{s_v}`, generated as a vector space (after multiplying by monomials) by the
//! row-superstandard bitableaux of shape `S`. Every identity is checked one bidegree at a
//! time since all generators are bihomogeneous.

mod betti;
mod checks;
mod graded;
mod monomial_ideal;
mod straighten;

pub use betti::{betti_linear_check, betti_numbers, BettiTable};
pub use checks::{check_grobner_js, check_primary, check_standard_basis, initial_ideal};
pub use graded::{graded_piece, initial_space, Generators, GradedPiece, DEFAULT_DIM_CAP};
pub use monomial_ideal::{monideal_ops, MonIdealOp, MonIdealValue, MonomialIdeal};
pub use straighten::{straighten, StandardRepresentation};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::krs::diag;
use crate::polyring::{expand_bitableau, Polynomial};
use crate::tableaux::{row_superstandard, Bitableau, Shape, DEFAULT_ENUM_CAP};

/// Which exact field the sweeps eliminate over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Arith {
    /// Arbitrary-precision rationals.
    #[default]
    Rational,
    /// The prime field `F_p`, `p = 2^61 - 1`; every identity checked here holds over any
    /// field, so this is an equally valid certificate.
    Modular,
}

/// Limits and execution settings shared by the sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepOptions {
    /// Largest total degree examined.
    pub max_degree: usize,
    pub cap_enum: usize,
    pub cap_dim: usize,
    pub exec: Exec,
    pub arith: Arith,
}

impl SweepOptions {
    /// Defaults with the degree bound `Σ s_i + 2`.
    pub fn for_shape(shape: &Shape) -> Self {
        SweepOptions { max_degree: shape.total() + 2, ..Default::default() }
    }

    pub fn with_max_degree(mut self, d: usize) -> Self {
        self.max_degree = d;
        self
    }

    pub fn with_exec(mut self, exec: Exec) -> Self {
        self.exec = exec;
        self
    }

    pub fn with_arith(mut self, arith: Arith) -> Self {
        self.arith = arith;
        self
    }
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            max_degree: 4,
            cap_enum: DEFAULT_ENUM_CAP,
            cap_dim: DEFAULT_DIM_CAP,
            exec: Exec::default(),
            arith: Arith::default(),
        }
    }
}

/// The row-superstandard generators `[1..s_1|c_1] ⋯ [1..s_v|c_v]` of `J_S`, over all
/// column choices. A part larger than `n` makes `J_S = 0`, giving no generators.
pub fn generators_js(m: usize, n: usize, shape: &Shape) -> Result<Vec<Bitableau>> {
    if shape.parts().iter().any(|&s| s > m) {
        return Err(Error::InvalidShape(shape.parts().to_vec()));
    }
    if shape.parts().iter().any(|&s| s > n) {
        return Ok(Vec::new());
    }
    let mut gens = row_superstandard(n, shape);
    gens.sort();
    Ok(gens)
}

pub fn js_polynomials(m: usize, n: usize, shape: &Shape) -> Result<Vec<Polynomial>> {
    Ok(generators_js(m, n, shape)?.iter().map(expand_bitableau).collect())
}

/// The monomial ideal generated by the diagonals of the row-superstandard generators.
pub fn diagonal_ideal(m: usize, n: usize, shape: &Shape) -> Result<MonomialIdeal> {
    Ok(MonomialIdeal::new(m, n, generators_js(m, n, shape)?.iter().map(diag)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_counts() {
        assert_eq!(generators_js(3, 3, &"2,1".parse().unwrap()).unwrap().len(), 9);
        assert_eq!(
            generators_js(2, 2, &"2".parse().unwrap()).unwrap(),
            vec!["[1 2|1 2]".parse::<Bitableau>().unwrap()]
        );
        assert!(generators_js(2, 1, &"2".parse().unwrap()).unwrap().is_empty());
        assert!(generators_js(1, 3, &"2".parse().unwrap()).is_err());
    }

    #[test]
    fn diagonal_ideal_of_two_one() {
        let d = diagonal_ideal(3, 3, &"2,1".parse().unwrap()).unwrap();
        assert_eq!(d.generators().len(), 8);
        assert_eq!(d.lcm_of_generators(), "x11^2*x12^2*x22*x13*x23".parse().unwrap());
    }
}
