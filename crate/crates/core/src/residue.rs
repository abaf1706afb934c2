//! Residue fields of number fields at unramified rational primes.
//!
//! A prime p is usable for a field K = Q[a]/(m) when m stays p-integral and
//! squarefree mod p; each irreducible factor g of m mod p then names a prime
//! of K above p with residue field F_{p^deg g}, the generator mapping to the
//! class of x. Reduction of an element demands p-integral coordinates and
//! fails with [`crate::Error::BadPrime`] otherwise, which is how callers
//! discover that a denominator meets p.
//!
//! Elements are tiny F_p polynomials reduced mod the factor; inversion goes
//! through a^(q-2), cheap at the sizes used for point counting (q stays in
//! the tens of thousands).

use crate::arith::{invmod, mulmod};
use crate::poly::Coeff;
use crate::numfield::{NfElem, NumberField};
use crate::rational::Rat;
use crate::zpoly::ZPoly;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::ToPrimitive;
use std::fmt;
use std::sync::Arc;

struct RInner {
    p: u64,
    /// Monic irreducible modulus over F_p; its degree is the residue degree.
    modulus: ZPoly,
}

/// A finite field F_{p^f} arising as a residue field.
#[derive(Clone)]
pub struct ResidueField(Arc<RInner>);

impl PartialEq for ResidueField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.modulus == other.0.modulus)
    }
}

impl Eq for ResidueField {}

/// r mod p for a p-integral rational.
pub fn rat_mod_p(r: &Rat, p: u64) -> crate::Result<u64> {
    let pb = BigInt::from(p);
    let den = r.denom().mod_floor(&pb);
    if num_traits::Zero::is_zero(&den) {
        return Err(crate::Error::BadPrime(BigInt::from(p)));
    }
    let num = r.numer().mod_floor(&pb);
    let n = num.to_u64().expect("mod_floor stays below p");
    let d = den.to_u64().expect("mod_floor stays below p");
    Ok(mulmod(n, invmod(d, p), p))
}

impl ResidueField {
    /// The prime field F_p, generator reducing to 0.
    pub fn prime(p: u64) -> Self {
        ResidueField(Arc::new(RInner { p, modulus: ZPoly::x(p) }))
    }

    /// All residue fields of K above p, sorted by residue degree then by
    /// modulus coefficients. Fails when p divides a denominator of the
    /// defining polynomial or ramifies.
    pub fn of_number_field(k: &NumberField, p: u64, seed: u64) -> crate::Result<Vec<ResidueField>> {
        let m = k.min_poly();
        let mut coeffs = Vec::with_capacity(k.degree() + 1);
        for i in 0..=k.degree() {
            coeffs.push(rat_mod_p(&m.coeff(i), p)?);
        }
        let mbar = ZPoly::new(p, &coeffs);
        if mbar.deg() != Some(k.degree()) {
            return Err(crate::Error::BadPrime(BigInt::from(p)));
        }
        if !mbar.is_squarefree() {
            return Err(crate::Error::BadPrime(BigInt::from(p)));
        }
        if p == 2 {
            // The factorizer's splitting step wants odd p; degree-sorted
            // full factorization is only needed for odd primes anyway.
            return Err(crate::Error::BadPrime(BigInt::from(p)));
        }
        let (_, factors) = mbar.factor_squarefree(seed);
        Ok(factors
            .into_iter()
            .map(|g| ResidueField(Arc::new(RInner { p, modulus: g })))
            .collect())
    }

    pub fn char(&self) -> u64 {
        self.0.p
    }

    /// Residue degree f.
    pub fn residue_degree(&self) -> usize {
        self.0.modulus.degree()
    }

    /// Field size p^f; panics if it overflows u64.
    pub fn size(&self) -> u64 {
        self.0
            .p
            .checked_pow(self.residue_degree() as u32)
            .expect("residue field size overflows u64")
    }

    pub fn modulus(&self) -> &ZPoly {
        &self.0.modulus
    }

    pub fn zero(&self) -> FqEl {
        FqEl { field: self.clone(), rep: ZPoly::zero(self.0.p) }
    }

    pub fn one(&self) -> FqEl {
        FqEl { field: self.clone(), rep: ZPoly::one(self.0.p) }
    }

    pub fn from_u64(&self, c: u64) -> FqEl {
        FqEl { field: self.clone(), rep: ZPoly::new(self.0.p, &[c]) }
    }

    /// Image of the number field generator.
    pub fn generator_image(&self) -> FqEl {
        let x = ZPoly::x(self.0.p).rem(&self.0.modulus);
        FqEl { field: self.clone(), rep: x }
    }

    pub fn reduce_rat(&self, r: &Rat) -> crate::Result<FqEl> {
        Ok(self.from_u64(rat_mod_p(r, self.0.p)?))
    }

    /// Reduce a number field element along generator -> class of x.
    pub fn reduce(&self, x: &NfElem) -> crate::Result<FqEl> {
        let p = self.0.p;
        let mut coeffs = Vec::with_capacity(x.coords().len());
        for c in x.coords() {
            coeffs.push(rat_mod_p(c, p)?);
        }
        let rep = ZPoly::new(p, &coeffs).rem(&self.0.modulus);
        Ok(FqEl { field: self.clone(), rep })
    }

    /// Every element of the field; q iterations of small vectors.
    pub fn elements(&self) -> Vec<FqEl> {
        let p = self.0.p;
        let f = self.residue_degree();
        let q = self.size();
        let mut out = Vec::with_capacity(q as usize);
        let mut idx = vec![0u64; f];
        loop {
            out.push(FqEl {
                field: self.clone(),
                rep: ZPoly::new(p, &idx),
            });
            let mut carry = 0usize;
            loop {
                idx[carry] += 1;
                if idx[carry] < p {
                    break;
                }
                idx[carry] = 0;
                carry += 1;
                if carry == f {
                    return out;
                }
            }
        }
    }
}

impl fmt::Display for ResidueField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.residue_degree();
        if d == 1 {
            write!(f, "F_{}", self.0.p)
        } else {
            write!(f, "F_{{{}^{}}}", self.0.p, d)
        }
    }
}

impl fmt::Debug for ResidueField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An element of a residue field.
#[derive(Clone)]
pub struct FqEl {
    field: ResidueField,
    rep: ZPoly,
}

impl FqEl {
    pub fn field(&self) -> &ResidueField {
        &self.field
    }

    fn check(&self, rhs: &Self) {
        assert!(self.field == rhs.field, "elements of different residue fields");
    }

    /// The element as a prime-field value when it lies in F_p.
    pub fn as_prime_u64(&self) -> Option<u64> {
        match self.rep.deg() {
            None => Some(0),
            Some(0) => Some(self.rep.coeff(0)),
            _ => None,
        }
    }

    pub fn pow(&self, e: u64) -> Self {
        FqEl {
            field: self.field.clone(),
            rep: self.rep.powmod_poly(e, &self.field.0.modulus),
        }
    }

    pub fn pow_big(&self, e: &BigUint) -> Self {
        FqEl {
            field: self.field.clone(),
            rep: self.rep.powmod_poly_big(e, &self.field.0.modulus),
        }
    }

    /// Frobenius x -> x^p.
    pub fn frobenius(&self) -> Self {
        self.pow(self.field.0.p)
    }

    /// Quadratic character for odd q: 1 on nonzero squares, -1 on
    /// nonsquares, 0 at zero.
    pub fn quadratic_character(&self) -> i8 {
        let q = self.field.size();
        assert!(q % 2 == 1, "quadratic character needs odd field size");
        if self.rep.is_zero() {
            return 0;
        }
        let s = self.pow((q - 1) / 2);
        if s.rep == ZPoly::one(self.field.0.p) {
            1
        } else {
            -1
        }
    }

    /// Absolute trace to F_p: sum of the f Frobenius images, landing in F_p.
    pub fn absolute_trace(&self) -> u64 {
        let f = self.field.residue_degree();
        let mut acc = self.clone();
        let mut frob = self.clone();
        for _ in 1..f {
            frob = frob.frobenius();
            acc = acc.add_c(&frob);
        }
        acc.as_prime_u64().expect("trace lies in the prime field")
    }
}

impl PartialEq for FqEl {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.rep == other.rep
    }
}

impl Eq for FqEl {}

impl crate::poly::Coeff for FqEl {
    fn zero_like(&self) -> Self {
        self.field.zero()
    }

    fn one_like(&self) -> Self {
        self.field.one()
    }

    fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    fn add_c(&self, rhs: &Self) -> Self {
        self.check(rhs);
        FqEl { field: self.field.clone(), rep: self.rep.add(&rhs.rep) }
    }

    fn sub_c(&self, rhs: &Self) -> Self {
        self.check(rhs);
        FqEl { field: self.field.clone(), rep: self.rep.sub(&rhs.rep) }
    }

    fn mul_c(&self, rhs: &Self) -> Self {
        self.check(rhs);
        FqEl {
            field: self.field.clone(),
            rep: self.rep.mul(&rhs.rep).rem(&self.field.0.modulus),
        }
    }

    fn neg_c(&self) -> Self {
        FqEl { field: self.field.clone(), rep: self.rep.neg() }
    }
}

impl crate::poly::FieldCoeff for FqEl {
    fn inv_c(&self) -> crate::Result<Self> {
        if self.rep.is_zero() {
            return Err(crate::Error::DivisionByZero);
        }
        let q = self.field.size();
        Ok(self.pow(q - 2))
    }
}

impl fmt::Display for FqEl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_prime_u64() {
            Some(c) => write!(f, "{c}"),
            None => {
                let mut first = true;
                for (i, &c) in self.rep.coeffs().iter().enumerate().rev() {
                    if c == 0 {
                        continue;
                    }
                    if !first {
                        write!(f, " + ")?;
                    }
                    first = false;
                    match i {
                        0 => write!(f, "{c}")?,
                        1 if c == 1 => write!(f, "t")?,
                        1 => write!(f, "{c}*t")?,
                        _ if c == 1 => write!(f, "t^{i}")?,
                        _ => write!(f, "{c}*t^{i}")?,
                    }
                }
                Ok(())
            }
        }
    }
}

impl fmt::Debug for FqEl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{Coeff, FieldCoeff, UniPoly};

    #[test]
    fn rational_reduction() {
        assert_eq!(rat_mod_p(&Rat::new(1, 2), 7).unwrap(), 4);
        assert_eq!(rat_mod_p(&Rat::new(-3, 5), 7).unwrap(), mulmod(4, invmod(5, 7), 7));
        assert!(matches!(
            rat_mod_p(&Rat::new(1, 14), 7),
            Err(crate::Error::BadPrime(_))
        ));
    }

    #[test]
    fn prime_field_ops() {
        let f7 = ResidueField::prime(7);
        let a = f7.from_u64(3);
        let b = f7.from_u64(5);
        assert_eq!(a.mul_c(&b), f7.from_u64(1));
        assert_eq!(a.inv_c().unwrap(), b);
        assert_eq!(a.quadratic_character(), -1);
        assert_eq!(f7.from_u64(2).quadratic_character(), 1);
        assert_eq!(f7.from_u64(0).quadratic_character(), 0);
        assert_eq!(f7.elements().len(), 7);
    }

    #[test]
    fn split_and_inert_primes_of_quadratic_field() {
        let k = NumberField::quadratic(&Rat::from_int(-1)).unwrap();
        // 13 = 1 mod 4 splits; 7 = 3 mod 4 is inert; 2 ramifies.
        let split = ResidueField::of_number_field(&k, 13, 1).unwrap();
        assert_eq!(split.len(), 2);
        assert!(split.iter().all(|r| r.residue_degree() == 1));
        let inert = ResidueField::of_number_field(&k, 7, 1).unwrap();
        assert_eq!(inert.len(), 1);
        assert_eq!(inert[0].residue_degree(), 2);
        assert_eq!(inert[0].size(), 49);
        assert!(ResidueField::of_number_field(&k, 2, 1).is_err());
        // The generator image squares to -1 in every residue field.
        for r in split.iter().chain(inert.iter()) {
            let i = r.generator_image();
            assert_eq!(i.mul_c(&i), r.from_u64(r.char() - 1));
        }
    }

    #[test]
    fn quartic_field_elements_and_traces() {
        let k = NumberField::quadratic(&Rat::from_int(3)).unwrap();
        let inert = ResidueField::of_number_field(&k, 5, 1).unwrap();
        // 3 is a nonresidue mod 5, so 5 is inert: F_25.
        assert_eq!(inert.len(), 1);
        let f25 = &inert[0];
        assert_eq!(f25.size(), 25);
        let els = f25.elements();
        assert_eq!(els.len(), 25);
        // Every nonzero element satisfies x^24 = 1.
        for e in &els {
            if !Coeff::is_zero(e) {
                assert_eq!(e.pow(24), f25.one());
                assert_eq!(e.mul_c(&e.inv_c().unwrap()), f25.one());
            }
        }
        // Traces land in F_5 and are balanced: each value hit 5 times.
        let mut counts = [0usize; 5];
        for e in &els {
            counts[e.absolute_trace() as usize] += 1;
        }
        assert_eq!(counts, [5, 5, 5, 5, 5]);
    }

    #[test]
    fn reduce_field_elements() {
        let k = NumberField::new(&UniPoly::from_i64(&[1, 3, -3, -4, 1, 1])).unwrap();
        // 23 = 1 mod 11 splits completely in the real 11th cyclotomic
        // subfield; all five residue degrees are 1.
        let fields = ResidueField::of_number_field(&k, 23, 1).unwrap();
        assert_eq!(fields.len(), 5);
        for r in &fields {
            assert_eq!(r.residue_degree(), 1);
            let th = r.generator_image();
            // The reduced generator is a root of the defining polynomial.
            let mut acc = r.zero();
            for c in k.min_poly().coeffs().iter().rev() {
                acc = acc.mul_c(&th).add_c(&r.reduce_rat(c).unwrap());
            }
            assert!(Coeff::is_zero(&acc));
            // Reduction is a ring homomorphism on a sample.
            let x = k.elem(&[Rat::new(1, 2), Rat::from_int(3)]);
            let y = k.generator().mul_c(&k.generator());
            let lhs = r.reduce(&x.mul_c(&y)).unwrap();
            let rhs = r.reduce(&x).unwrap().mul_c(&r.reduce(&y).unwrap());
            assert_eq!(lhs, rhs);
        }
    }
}
