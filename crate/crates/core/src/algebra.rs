//! Quotient algebras Q[x]/(f) without a field assumption.
//!
//! Evaluating the multiplication-by-k maps at a torsion abscissa alpha
//! means computing phi_k(alpha) / psi_k(alpha)^2 where alpha is a root of
//! some factor f of a division polynomial. All of that is plain
//! arithmetic in A = Q[x]/(f): addition and multiplication reduce mod f,
//! and inversion runs the extended Euclidean algorithm, succeeding
//! exactly when the element is coprime to f. Working in A sidesteps
//! naming the splitting field of f, and a zero-divisor error is
//! informative rather than fatal: it exhibits a nontrivial factor of f.
//!
//! Elements implement the generic coefficient traits, so polynomials
//! with coefficients in A (a kernel polynomial in a new variable, say)
//! reuse the univariate machinery unchanged.

use std::sync::Arc;

use crate::poly::{Coeff, FieldCoeff, UniPoly};
use crate::rational::Rat;

#[derive(Clone)]
pub struct QuotientRing(Arc<QInner>);

struct QInner {
    modulus: UniPoly<Rat>,
}

/// An element of Q[x]/(f), stored as its reduced representative.
#[derive(Clone)]
pub struct AlgElem {
    ring: QuotientRing,
    rep: UniPoly<Rat>,
}

impl QuotientRing {
    /// Quotient by a nonconstant polynomial, made monic first.
    pub fn new(modulus: &UniPoly<Rat>) -> Self {
        assert!(modulus.deg().map_or(false, |d| d >= 1), "modulus must be nonconstant");
        QuotientRing(Arc::new(QInner { modulus: modulus.monic() }))
    }

    pub fn modulus(&self) -> &UniPoly<Rat> {
        &self.0.modulus
    }

    /// Dimension of the algebra as a Q-vector space.
    pub fn dim(&self) -> usize {
        self.0.modulus.degree()
    }

    pub fn elem(&self, p: &UniPoly<Rat>) -> AlgElem {
        AlgElem { ring: self.clone(), rep: p.rem(&self.0.modulus) }
    }

    pub fn from_rat(&self, r: Rat) -> AlgElem {
        self.elem(&UniPoly::constant(r))
    }

    pub fn zero(&self) -> AlgElem {
        AlgElem { ring: self.clone(), rep: UniPoly::zero(&Rat::zero()) }
    }

    pub fn one(&self) -> AlgElem {
        self.from_rat(Rat::one())
    }

    /// The residue class of x.
    pub fn generator(&self) -> AlgElem {
        self.elem(&UniPoly::x(&Rat::zero()))
    }

    fn same_ring(&self, other: &QuotientRing) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.modulus == other.0.modulus
    }
}

impl AlgElem {
    pub fn ring(&self) -> &QuotientRing {
        &self.ring
    }

    pub fn rep(&self) -> &UniPoly<Rat> {
        &self.rep
    }

    /// The rational value if the element is constant.
    pub fn as_rat(&self) -> Option<Rat> {
        match self.rep.deg() {
            None => Some(Rat::zero()),
            Some(0) => Some(self.rep.coeff(0)),
            _ => None,
        }
    }

    /// Inverse when the element is coprime to the modulus; a zero-divisor
    /// error otherwise.
    pub fn inverse(&self) -> crate::Result<AlgElem> {
        if Coeff::is_zero(self) {
            return Err(crate::Error::DivisionByZero);
        }
        let (g, s, _) = self.rep.ext_gcd(&self.ring.0.modulus);
        if g.deg() != Some(0) {
            return Err(crate::Error::ZeroDivisor);
        }
        let ginv = g.coeff(0).inv_c()?;
        Ok(self.ring.elem(&s.mul_scalar(&ginv)))
    }
}

impl PartialEq for AlgElem {
    fn eq(&self, other: &Self) -> bool {
        debug_assert!(self.ring.same_ring(&other.ring), "elements of different quotients");
        self.rep == other.rep
    }
}

impl Coeff for AlgElem {
    fn zero_like(&self) -> Self {
        self.ring.zero()
    }

    fn one_like(&self) -> Self {
        self.ring.one()
    }

    fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    fn add_c(&self, rhs: &Self) -> Self {
        debug_assert!(self.ring.same_ring(&rhs.ring));
        AlgElem { ring: self.ring.clone(), rep: self.rep.add(&rhs.rep) }
    }

    fn sub_c(&self, rhs: &Self) -> Self {
        debug_assert!(self.ring.same_ring(&rhs.ring));
        AlgElem { ring: self.ring.clone(), rep: self.rep.sub(&rhs.rep) }
    }

    fn mul_c(&self, rhs: &Self) -> Self {
        debug_assert!(self.ring.same_ring(&rhs.ring));
        self.ring.elem(&self.rep.mul(&rhs.rep))
    }

    fn neg_c(&self) -> Self {
        AlgElem { ring: self.ring.clone(), rep: self.rep.neg() }
    }

    fn mul_usize(&self, n: usize) -> Self {
        let scale = Rat::from_int(n as i64);
        AlgElem { ring: self.ring.clone(), rep: self.rep.mul_scalar(&scale) }
    }
}

impl FieldCoeff for AlgElem {
    fn inv_c(&self) -> crate::Result<Self> {
        self.inverse()
    }
}

impl std::fmt::Display for AlgElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.rep)
    }
}

impl std::fmt::Debug for AlgElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.rep)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> UniPoly<Rat> {
        UniPoly::x(&Rat::zero())
    }

    #[test]
    fn field_case_inverts_everything_nonzero() {
        let m = x().mul(&x()).sub(&UniPoly::constant(Rat::from_int(2)));
        let a = QuotientRing::new(&m);
        let s = a.generator();
        let inv = s.inverse().unwrap();
        assert_eq!(s.mul_c(&inv), a.one());
        // 1/sqrt2 = sqrt2/2.
        assert_eq!(inv, a.elem(&x().mul_scalar(&Rat::new(1, 2))));
    }

    #[test]
    fn zero_divisors_are_detected() {
        let m = x().mul(&x()).sub(&UniPoly::constant(Rat::from_int(1)));
        let a = QuotientRing::new(&m);
        let bad = a.elem(&x().sub(&UniPoly::constant(Rat::from_int(1))));
        match bad.inverse() {
            Err(crate::Error::ZeroDivisor) => {}
            other => panic!("expected zero divisor, got {:?}", other.map(|_| ())),
        }
        // x itself is a unit mod x^2 - 1.
        let u = a.generator();
        assert_eq!(u.mul_c(&u.inverse().unwrap()), a.one());
    }

    #[test]
    fn polynomials_over_the_algebra() {
        // Over Q[a]/(a^2 - a - 1), (X - a)(X - (1 - a)) should collapse to
        // the rational polynomial X^2 - X - 1.
        let m = x().mul(&x()).sub(&x()).sub(&UniPoly::constant(Rat::from_int(1)));
        let a = QuotientRing::new(&m);
        let alpha = a.generator();
        let beta = a.one().sub_c(&alpha);
        let xx = UniPoly::x(&a.zero());
        let prod = xx
            .sub(&UniPoly::constant(alpha))
            .mul(&xx.sub(&UniPoly::constant(beta)));
        assert_eq!(prod.degree(), 2);
        let c1 = prod.coeff(1).as_rat().unwrap();
        let c0 = prod.coeff(0).as_rat().unwrap();
        assert_eq!(c1, Rat::from_int(-1));
        assert_eq!(c0, Rat::from_int(-1));
    }
}
