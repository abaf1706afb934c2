//! Polynomial factorization over Q and over number fields.
//!
//! The rational pipeline is classical Zassenhaus: reduce to a monic
//! squarefree integer polynomial, factor it modulo several good primes,
//! intersect the achievable factor-degree sets for a cheap irreducibility
//! certificate, Hensel-lift the factorization at the prime with the fewest
//! modular factors past the Landau-Mignotte coefficient bound, and recombine
//! modular factors by subsets of increasing cardinality. Searching subsets in
//! that order proves each extracted factor irreducible, so a completed sweep
//! yields certified irreducible factors without a separate proof step.
//!
//! Degree-bounded factorization stops the subset search at a degree cap and
//! returns the unsplit remainder as an explicit cofactor, tagged either
//! certified-irreducible (when the degree-set certificate collapses) or
//! unresolved with the surviving candidate degrees. Division polynomials of
//! large order get their small-degree factors this way in seconds where a
//! full factorization would recombine for hours.
//!
//! Factorization over a number field K reduces to Q by Trager's method: for
//! a squarefree f in K[x], shift x by s*theta until the norm
//! N(x) = Res_y(m(y), f(x - s*y)) is squarefree, factor N over Q, and pull
//! each rational factor back through a gcd over K. Norms are computed by
//! evaluation and interpolation so that only integer resultants of
//! univariate polynomials ever appear.

mod hensel;
mod overq;
mod trager;

pub use overq::{
    factor_over_q, factor_over_q_bounded, is_irreducible_over_q, possible_factor_degrees,
};
pub use trager::{
    cmp_nf_poly, factor_over_nf, roots_in_field, roots_in_field_bounded, roots_in_field_nf,
};

use crate::poly::{Coeff, FieldCoeff, UniPoly};

/// What is known about an unsplit cofactor from a degree-bounded run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CofactorStatus {
    /// Degree-set analysis across several primes rules out every proper
    /// factorization, so the cofactor is irreducible over the base field.
    CertifiedIrreducible,
    /// The cofactor may factor further; any irreducible factor must have one
    /// of these degrees (sorted, proper divisor degrees only).
    Unresolved { possible_degrees: Vec<usize> },
}

/// A factorization unit * prod factors^mult * cofactor of the input.
///
/// Factors are monic and, for complete runs, irreducible; `cofactor` is only
/// present for degree-bounded runs that stopped early (or when a recombination
/// budget was exhausted, which the test suite treats as a failure).
#[derive(Clone)]
pub struct Factorization<C: Coeff> {
    pub unit: C,
    pub factors: Vec<(UniPoly<C>, u32)>,
    pub cofactor: Option<(UniPoly<C>, CofactorStatus)>,
}

impl<C: Coeff + std::fmt::Display> std::fmt::Debug for Factorization<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({})", self.unit)?;
        for (g, e) in &self.factors {
            write!(f, " * ({})^{}", g, e)?;
        }
        if let Some((c, status)) = &self.cofactor {
            write!(f, " * [cofactor deg {} {:?}]", c.degree(), status)?;
        }
        Ok(())
    }
}

impl<C: FieldCoeff> Factorization<C> {
    /// True when the factor list is proven complete (no cofactor).
    pub fn is_complete(&self) -> bool {
        self.cofactor.is_none()
    }

    /// Multiply everything back together; used by tests to check the
    /// reconstruction is bit-exact.
    pub fn product(&self) -> UniPoly<C> {
        let mut acc = UniPoly::constant(self.unit.clone());
        for (f, e) in &self.factors {
            acc = acc.mul(&f.pow(*e as usize));
        }
        if let Some((c, _)) = &self.cofactor {
            acc = acc.mul(c);
        }
        acc
    }

    /// Degrees of the irreducible factors, multiplicity expanded, sorted
    /// ascending. The cofactor, if any, is not included.
    pub fn degree_pattern(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (f, e) in &self.factors {
            for _ in 0..*e {
                out.push(f.degree());
            }
        }
        out.sort_unstable();
        out
    }

    /// Total number of irreducible factors counted with multiplicity.
    pub fn factor_count(&self) -> u32 {
        self.factors.iter().map(|(_, e)| e).sum()
    }
}
