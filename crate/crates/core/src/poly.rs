//! Dense univariate polynomials over an arbitrary coefficient ring.
//!
//! Coefficients implement [`Coeff`] (ring operations) or [`FieldCoeff`]
//! (adds inversion). Elements of a number field or residue field carry their
//! parent field inside themselves, so a polynomial needs no separate ring
//! handle; the `ctx` element (a stashed zero) lets even the zero polynomial
//! produce coefficients of the right parent.
//!
//! Polynomials are kept trimmed: the coefficient vector never ends in zero,
//! and the zero polynomial has an empty vector. Degrees use `Option<usize>`
//! with `None` for the zero polynomial.
//!
//! Integer-coefficient resultants run through the subresultant remainder
//! sequence, which divides out the predictable common factors after each
//! pseudo-division and so keeps coefficient growth polynomial instead of
//! exponential.

use crate::rational::Rat;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Commutative ring element usable as a polynomial coefficient.
pub trait Coeff: Clone + PartialEq + fmt::Debug {
    /// The zero of the same parent structure as `self`.
    fn zero_like(&self) -> Self;
    /// The one of the same parent structure as `self`.
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add_c(&self, rhs: &Self) -> Self;
    fn sub_c(&self, rhs: &Self) -> Self;
    fn mul_c(&self, rhs: &Self) -> Self;
    fn neg_c(&self) -> Self;

    /// n * self via double-and-add; rings need no integer embedding for this.
    fn mul_usize(&self, n: usize) -> Self {
        let mut acc = self.zero_like();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.add_c(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.add_c(&base);
            }
        }
        acc
    }
}

/// Field element: adds exact inversion.
pub trait FieldCoeff: Coeff {
    fn inv_c(&self) -> crate::Result<Self>;

    fn div_c(&self, rhs: &Self) -> Self {
        self.mul_c(&rhs.inv_c().expect("division by zero coefficient"))
    }
}

impl Coeff for Rat {
    fn zero_like(&self) -> Self {
        Rat::zero()
    }
    fn one_like(&self) -> Self {
        Rat::one()
    }
    fn is_zero(&self) -> bool {
        Rat::is_zero(self)
    }
    fn add_c(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_c(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_c(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_c(&self) -> Self {
        -self
    }
}

impl FieldCoeff for Rat {
    fn inv_c(&self) -> crate::Result<Self> {
        self.recip()
    }
}

impl Coeff for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_c(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_c(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_c(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_c(&self) -> Self {
        -self
    }
}

/// A dense univariate polynomial.
#[derive(Clone, PartialEq)]
pub struct UniPoly<C: Coeff> {
    ctx: C,
    coeffs: Vec<C>,
}

impl<C: Coeff> UniPoly<C> {
    /// Build from ascending coefficients `[a0, a1, ...]`; the vector must be
    /// nonempty so the parent structure can be inferred.
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "from_coeffs needs at least one coefficient");
        let ctx = coeffs[0].zero_like();
        let mut p = UniPoly { ctx, coeffs };
        p.trim();
        p
    }

    /// The zero polynomial over the parent of `ctx`.
    pub fn zero(ctx: &C) -> Self {
        UniPoly { ctx: ctx.zero_like(), coeffs: Vec::new() }
    }

    pub fn constant(c: C) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn one(ctx: &C) -> Self {
        Self::constant(ctx.one_like())
    }

    /// c * x^k.
    pub fn monomial(c: C, k: usize) -> Self {
        let ctx = c.zero_like();
        let mut coeffs = vec![ctx.clone(); k];
        coeffs.push(c);
        let mut p = UniPoly { ctx, coeffs };
        p.trim();
        p
    }

    /// The variable x over the parent of `ctx`.
    pub fn x(ctx: &C) -> Self {
        Self::monomial(ctx.one_like(), 1)
    }

    fn trim(&mut self) {
        while self.coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            self.coeffs.pop();
        }
    }

    /// A zero coefficient of the parent ring (context element).
    pub fn ctx(&self) -> &C {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree of a polynomial known to be nonzero.
    pub fn degree(&self) -> usize {
        self.deg().expect("degree of zero polynomial")
    }

    pub fn lead(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.lead().map(|c| c == &c.one_like()).unwrap_or(false)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Coefficient of x^k (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.ctx.clone())
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.add_c(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        let mut p = UniPoly { ctx: self.ctx.clone(), coeffs };
        p.trim();
        p
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.sub_c(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.neg_c(),
                (None, None) => unreachable!(),
            });
        }
        let mut p = UniPoly { ctx: self.ctx.clone(), coeffs };
        p.trim();
        p
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(|c| c.neg_c()).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(&self.ctx);
        }
        let mut coeffs = vec![self.ctx.clone(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add_c(&a.mul_c(b));
            }
        }
        let mut p = UniPoly { ctx: self.ctx.clone(), coeffs };
        p.trim();
        p
    }

    pub fn mul_scalar(&self, s: &C) -> Self {
        if s.is_zero() {
            return Self::zero(&self.ctx);
        }
        let mut p = UniPoly {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(|c| c.mul_c(s)).collect(),
        };
        p.trim();
        p
    }

    /// Multiply by x^k.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.ctx.clone(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { ctx: self.ctx.clone(), coeffs }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one(&self.ctx);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn eval(&self, x: &C) -> C {
        let mut acc = self.ctx.clone();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_c(x).add_c(c);
        }
        acc
    }

    /// Substitute another polynomial for the variable.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Self::zero(&self.ctx);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&Self::constant(c.clone()));
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero(&self.ctx);
        }
        let coeffs: Vec<C> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul_usize(i))
            .collect();
        let mut p = UniPoly { ctx: self.ctx.clone(), coeffs };
        p.trim();
        p
    }
}

impl<C: FieldCoeff> UniPoly<C> {
    /// Monic normalization: divide by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.lead() {
            None => self.clone(),
            Some(l) => {
                let inv = l.inv_c().expect("leading coefficient not invertible");
                self.mul_scalar(&inv)
            }
        }
    }

    /// Euclidean division: (quotient, remainder).
    pub fn divrem(&self, rhs: &Self) -> (Self, Self) {
        assert!(!rhs.is_zero(), "division by zero polynomial");
        if self.is_zero() || self.degree() < rhs.degree() {
            return (Self::zero(&self.ctx), self.clone());
        }
        let dn = self.degree();
        let dd = rhs.degree();
        let lead_inv = rhs.lead().unwrap().inv_c().expect("zero lead");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.ctx.clone(); dn - dd + 1];
        for k in (0..=dn - dd).rev() {
            if rem[k + dd].is_zero() {
                continue;
            }
            let q = rem[k + dd].mul_c(&lead_inv);
            for (j, b) in rhs.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].sub_c(&q.mul_c(b));
            }
            quot[k] = q;
        }
        let mut qp = UniPoly { ctx: self.ctx.clone(), coeffs: quot };
        qp.trim();
        let mut rp = UniPoly { ctx: self.ctx.clone(), coeffs: rem };
        rp.trim();
        debug_assert!(rp.is_zero() || rp.degree() < rhs.degree());
        (qp, rp)
    }

    pub fn rem(&self, rhs: &Self) -> Self {
        self.divrem(rhs).1
    }

    /// Exact division over a field; panics if the remainder is nonzero.
    pub fn div_exact(&self, rhs: &Self) -> Self {
        let (q, r) = self.divrem(rhs);
        assert!(r.is_zero(), "division was not exact");
        q
    }

    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.divrem(self).1.is_zero()
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns (g, s, t) with g monic and s*self + t*rhs = g.
    pub fn ext_gcd(&self, rhs: &Self) -> (Self, Self, Self) {
        let mut r0 = self.clone();
        let mut r1 = rhs.clone();
        let mut s0 = Self::one(&self.ctx);
        let mut s1 = Self::zero(&self.ctx);
        let mut t0 = Self::zero(&self.ctx);
        let mut t1 = Self::one(&self.ctx);
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if let Some(l) = r0.lead() {
            let inv = l.inv_c().expect("zero lead");
            return (r0.mul_scalar(&inv), s0.mul_scalar(&inv), t0.mul_scalar(&inv));
        }
        (r0, s0, t0)
    }

    /// Largest squarefree divisor, monic (characteristic-0 fields).
    pub fn squarefree_part(&self) -> Self {
        if self.is_zero() || self.degree() == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_exact(&g).monic()
    }

    /// Yun's squarefree decomposition: returns pairs `(g, i)` with
    /// self = lead * prod g^i, each g monic squarefree of positive degree,
    /// pairwise coprime. Valid over characteristic-0 coefficient fields.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, u32)> {
        assert!(!self.is_zero(), "squarefree decomposition of zero");
        let f = self.monic();
        if f.degree() == 0 {
            return Vec::new();
        }
        let fd = f.derivative();
        let a0 = f.gcd(&fd);
        let mut b = f.div_exact(&a0);
        let mut c = fd.div_exact(&a0);
        let mut out = Vec::new();
        let mut i = 1u32;
        loop {
            let d = c.sub(&b.derivative());
            if d.is_zero() {
                if b.degree() > 0 {
                    out.push((b.monic(), i));
                }
                break;
            }
            let g = b.gcd(&d);
            if g.degree() > 0 {
                out.push((g.clone(), i));
            }
            b = b.div_exact(&g);
            c = d.div_exact(&g);
            i += 1;
            if b.degree() == 0 {
                break;
            }
        }
        out
    }
}

// ---------------------------------------------------------------------------
// Rational coefficients: content, integer models, resultants, interpolation.
// ---------------------------------------------------------------------------

impl UniPoly<Rat> {
    /// Convenience constructor from small integers, ascending.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Rat::from_int(c)).collect())
    }

    /// Content: the positive rational c such that self/c is a primitive
    /// integer polynomial. Content of zero is zero.
    pub fn content(&self) -> Rat {
        use num_integer::Integer as _;
        if self.is_zero() {
            return Rat::zero();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        Rat::new(num_gcd, den_lcm)
    }

    /// Write self = scale * P with P a primitive integer polynomial having
    /// positive leading coefficient; returns (P, scale).
    pub fn primitive_int(&self) -> (UniPoly<BigInt>, Rat) {
        assert!(!self.is_zero(), "primitive part of zero");
        let mut scale = self.content();
        if self.lead().unwrap().is_negative() {
            scale = -scale;
        }
        let inv = scale.recip().unwrap();
        let coeffs: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| {
                let r = c * &inv;
                assert!(r.is_integer());
                r.numer().clone()
            })
            .collect();
        (UniPoly::from_coeffs(coeffs), scale)
    }

    /// Resultant of two rational polynomials.
    pub fn resultant(&self, rhs: &Self) -> Rat {
        if self.is_zero() || rhs.is_zero() {
            return Rat::zero();
        }
        if self.degree() == 0 {
            return self.lead().unwrap().pow(rhs.degree() as i32);
        }
        if rhs.degree() == 0 {
            return rhs.lead().unwrap().pow(self.degree() as i32);
        }
        let (a, ca) = self.primitive_int();
        let (b, cb) = rhs.primitive_int();
        let r = resultant_subresultant(&a, &b);
        // Res(c*f, g) = c^deg(g) * Res(f, g) and symmetrically.
        let adj = ca.pow(rhs.degree() as i32) * cb.pow(self.degree() as i32);
        Rat::from_int(r) * adj
    }

    /// Discriminant: (-1)^(n(n-1)/2) * Res(f, f') / lead.
    pub fn discriminant(&self) -> Rat {
        let n = self.degree();
        assert!(n >= 1, "discriminant needs positive degree");
        let r = self.resultant(&self.derivative());
        let sign = if (n * (n - 1) / 2) % 2 == 0 { Rat::one() } else { -Rat::one() };
        sign * r / self.lead().unwrap().clone()
    }

    /// Lagrange interpolation through distinct rational nodes.
    pub fn interpolate(points: &[(Rat, Rat)]) -> Self {
        assert!(!points.is_empty());
        let zero = Rat::zero();
        let mut acc = UniPoly::zero(&zero);
        for (i, (xi, yi)) in points.iter().enumerate() {
            if yi.is_zero() {
                continue;
            }
            let mut term = UniPoly::constant(yi.clone());
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                let denom = xi - xj;
                assert!(!denom.is_zero(), "repeated interpolation node");
                let dinv = denom.recip().unwrap();
                // (x - xj) / (xi - xj)
                term = term.mul(&UniPoly::from_coeffs(vec![-xj * &dinv, dinv]));
            }
            acc = acc.add(&term);
        }
        acc
    }
}

impl UniPoly<BigInt> {
    /// Largest absolute value among the coefficients.
    pub fn max_coeff_abs(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    /// View with rational coefficients.
    pub fn to_rat(&self) -> UniPoly<Rat> {
        if self.is_zero() {
            return UniPoly::zero(&Rat::zero());
        }
        UniPoly::from_coeffs(self.coeffs.iter().map(|c| Rat::from_int(c.clone())).collect())
    }

    /// Positive gcd of the coefficients.
    pub fn content_int(&self) -> BigInt {
        use num_integer::Integer as _;
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// Trial exact division over Z; `None` when the quotient does not exist
    /// in Z[x].
    pub fn try_div_int(&self, rhs: &Self) -> Option<Self> {
        assert!(!rhs.is_zero());
        if self.is_zero() {
            return Some(self.clone());
        }
        if self.degree() < rhs.degree() {
            return None;
        }
        let dn = self.degree();
        let dd = rhs.degree();
        let lead = rhs.lead().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); dn - dd + 1];
        for k in (0..=dn - dd).rev() {
            let c = rem[k + dd].clone();
            if Zero::is_zero(&c) {
                continue;
            }
            let q = &c / lead;
            if &q * lead != c {
                return None;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(&q * b);
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !Zero::is_zero(c)) {
            return None;
        }
        Some(UniPoly::from_coeffs(quot))
    }
}

/// Pseudo-remainder over Z: returns R with lc(b)^(deg a - deg b + 1) * a
/// = q*b + R and deg R < deg b. Requires deg a >= deg b >= 1.
fn pseudo_rem(a: &UniPoly<BigInt>, b: &UniPoly<BigInt>) -> UniPoly<BigInt> {
    let da = a.degree();
    let db = b.degree();
    assert!(da >= db && db >= 1);
    let lb = b.lead().unwrap().clone();
    let mut rem: Vec<BigInt> = a.coeffs().to_vec();
    for k in (0..=da - db).rev() {
        let q = rem[k + db].clone();
        for c in rem.iter_mut() {
            *c = &*c * &lb;
        }
        for (j, bc) in b.coeffs().iter().enumerate() {
            rem[k + j] = &rem[k + j] - &(&q * bc);
        }
        debug_assert!(Zero::is_zero(&rem[k + db]));
    }
    rem.truncate(db);
    UniPoly::from_coeffs(rem)
}

/// Divide every coefficient by d, asserting exactness in debug builds.
fn div_coeffs_exact(p: &UniPoly<BigInt>, d: &BigInt) -> UniPoly<BigInt> {
    if p.is_zero() {
        return p.clone();
    }
    let coeffs: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| {
            let q = c / d;
            debug_assert_eq!(&(&q * d), c, "subresultant division not exact");
            q
        })
        .collect();
    UniPoly::from_coeffs(coeffs)
}

fn exact_quot(num: BigInt, den: &BigInt) -> BigInt {
    let q = &num / den;
    debug_assert_eq!(&q * den, num);
    q
}

/// Resultant of two integer polynomials of degree >= 1 by the subresultant
/// polynomial remainder sequence.
fn resultant_subresultant(f: &UniPoly<BigInt>, g: &UniPoly<BigInt>) -> BigInt {
    let mut a = f.clone();
    let mut b = g.clone();
    let mut sign = 1i8;
    if a.degree() < b.degree() {
        if a.degree() % 2 == 1 && b.degree() % 2 == 1 {
            sign = -sign;
        }
        std::mem::swap(&mut a, &mut b);
    }
    let mut gc = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let da = a.degree();
        let db = b.degree();
        let delta = (da - db) as u32;
        if da % 2 == 1 && db % 2 == 1 {
            sign = -sign;
        }
        let r = pseudo_rem(&a, &b);
        a = b;
        if r.is_zero() {
            return BigInt::zero();
        }
        let divisor = &gc * h.pow(delta);
        b = div_coeffs_exact(&r, &divisor);
        gc = a.lead().unwrap().clone();
        h = match delta {
            0 => h,
            1 => gc.clone(),
            _ => exact_quot(gc.pow(delta), &h.pow(delta - 1)),
        };
        if b.degree() == 0 {
            let da = a.degree();
            let num = b.lead().unwrap().pow(da as u32);
            let hfin = match da {
                0 => unreachable!("remainder sequence left two constants"),
                1 => num,
                _ => exact_quot(num, &h.pow((da - 1) as u32)),
            };
            return if sign < 0 { -hfin } else { hfin };
        }
    }
}

impl<C: Coeff + fmt::Display> fmt::Display for UniPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let s = c.to_string();
            let (sign, mag) = match s.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", s),
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            let wrapped = if mag.contains('/') || mag.contains(' ') || mag.contains('+') {
                format!("({mag})")
            } else {
                mag
            };
            let unit = wrapped == "1";
            match i {
                0 => write!(f, "{wrapped}")?,
                1 if unit => write!(f, "x")?,
                1 => write!(f, "{wrapped}*x")?,
                _ if unit => write!(f, "x^{i}")?,
                _ => write!(f, "{wrapped}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl<C: Coeff + fmt::Display> fmt::Debug for UniPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> UniPoly<Rat> {
        UniPoly::from_i64(coeffs)
    }

    #[test]
    fn arithmetic_basics() {
        let f = p(&[1, 2, 1]);
        let g = p(&[1, 1]);
        assert_eq!(g.mul(&g), f);
        assert!(f.sub(&f).is_zero());
        assert_eq!(f.eval(&Rat::from_int(2)), Rat::from_int(9));
        assert_eq!(f.derivative(), p(&[2, 2]));
        assert_eq!(p(&[0, 0, 0, 5]).derivative(), p(&[0, 0, 15]));
        assert_eq!(g.pow(3), p(&[1, 3, 3, 1]));
        assert_eq!(p(&[1, 1]).compose(&p(&[0, 0, 1])), p(&[1, 0, 1]));
    }

    #[test]
    fn division() {
        let f = p(&[-1, 0, 0, 0, 0, 1]);
        let g = p(&[-1, 1]);
        let (q, r) = f.divrem(&g);
        assert!(r.is_zero());
        assert_eq!(q, p(&[1, 1, 1, 1, 1]));
        let d = p(&[1, 1, 1]);
        let (q2, r2) = f.divrem(&d);
        assert_eq!(q2.mul(&d).add(&r2), f);
        assert!(r2.degree() < d.degree());
    }

    #[test]
    fn gcds() {
        let f = p(&[-1, 0, 1]);
        let g = p(&[1, 2, 1]);
        assert_eq!(f.gcd(&g), p(&[1, 1]));
        let (d, s, t) = f.ext_gcd(&g);
        assert_eq!(d, p(&[1, 1]));
        assert_eq!(s.mul(&f).add(&t.mul(&g)), d);
        let (d2, s2, t2) = p(&[-2, 1]).ext_gcd(&p(&[1, 0, 1]));
        assert_eq!(d2, p(&[1]));
        assert_eq!(s2.mul(&p(&[-2, 1])).add(&t2.mul(&p(&[1, 0, 1]))), d2);
    }

    #[test]
    fn squarefree() {
        let f = p(&[0, 0, 1]).mul(&p(&[-1, 1]).pow(3)).mul(&p(&[1, 0, 1]));
        let dec = f.squarefree_decomposition();
        assert_eq!(dec.len(), 3);
        assert_eq!(dec[0], (p(&[1, 0, 1]), 1));
        assert_eq!(dec[1], (p(&[0, 1]), 2));
        assert_eq!(dec[2], (p(&[-1, 1]), 3));
        let mut rebuilt = UniPoly::one(&Rat::zero());
        for (g, e) in &dec {
            rebuilt = rebuilt.mul(&g.pow(*e as usize));
        }
        assert_eq!(rebuilt, f.monic());
        assert_eq!(
            f.squarefree_part(),
            p(&[0, 1]).mul(&p(&[-1, 1])).mul(&p(&[1, 0, 1]))
        );
    }

    #[test]
    fn content_primitive() {
        let f = UniPoly::from_coeffs(vec![Rat::new(-2, 3), Rat::new(4, 3), Rat::new(-2, 1)]);
        let (prim, scale) = f.primitive_int();
        assert_eq!(scale, Rat::new(-2, 3));
        assert_eq!(
            prim.coeffs(),
            &[BigInt::from(1), BigInt::from(-2), BigInt::from(3)]
        );
        assert_eq!(prim.to_rat().mul_scalar(&scale), f);
    }

    #[test]
    fn trial_division_int() {
        let f = UniPoly::from_coeffs(vec![BigInt::from(-2), BigInt::from(1)]);
        let g = UniPoly::from_coeffs(vec![BigInt::from(3), BigInt::from(1)]);
        let prod = f.mul(&g);
        assert_eq!(prod.try_div_int(&f), Some(g.clone()));
        assert_eq!(prod.try_div_int(&g), Some(f.clone()));
        let h = UniPoly::from_coeffs(vec![BigInt::from(1), BigInt::from(1)]);
        assert_eq!(prod.try_div_int(&h), None);
        let two_x = UniPoly::from_coeffs(vec![BigInt::from(0), BigInt::from(2)]);
        assert_eq!(f.mul(&g).try_div_int(&two_x), None);
    }

    #[test]
    fn resultants() {
        let f = p(&[-1, 0, 1]);
        let g = p(&[-4, 0, 1]);
        assert_eq!(f.resultant(&g), Rat::from_int(9));
        assert_eq!(f.discriminant(), Rat::from_int(4));
        assert_eq!(p(&[0, -1, 0, 1]).discriminant(), Rat::from_int(4));
        assert_eq!(p(&[-7, 0, 0, 1]).discriminant(), Rat::from_int(-27 * 49));
        assert!(p(&[-1, 1])
            .mul(&p(&[5, 3, 1]))
            .resultant(&p(&[-1, 0, 1]))
            .is_zero());
        // Swap symmetry: Res(g, f) = (-1)^(deg f * deg g) Res(f, g).
        let a = p(&[3, 1, 0, 2]);
        let b = p(&[-2, 5, 1]);
        assert_eq!(a.resultant(&b), b.resultant(&a));
        let c = p(&[1, 2, 0, 0, 0, 1]);
        let d = p(&[4, 0, 0, 3]);
        assert_eq!(c.resultant(&d), -d.resultant(&c));
        // Multiplicativity: Res(fg, h) = Res(f, h) Res(g, h).
        let h = p(&[1, 1, 1]);
        assert_eq!(a.mul(&b).resultant(&h), a.resultant(&h) * b.resultant(&h));
        // Scaling: Res(c f, g) = c^deg g Res(f, g).
        let scaled = a.mul_scalar(&Rat::new(3, 7));
        assert_eq!(scaled.resultant(&b), Rat::new(3, 7).pow(2) * a.resultant(&b));
    }

    #[test]
    fn interpolation() {
        let f = p(&[1, -1, 3]);
        let pts: Vec<(Rat, Rat)> = (-2..2)
            .map(|x| (Rat::from_int(x), f.eval(&Rat::from_int(x))))
            .collect();
        assert_eq!(UniPoly::interpolate(&pts), f);
        let single = [(Rat::from_int(5), Rat::from_int(7))];
        assert_eq!(UniPoly::interpolate(&single), p(&[7]));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-1, 0, 1]).to_string(), "x^2 - 1");
        assert_eq!(p(&[0, -29, 0, 5]).to_string(), "5*x^3 - 29*x");
        let f = UniPoly::from_coeffs(vec![Rat::new(-29, 5), Rat::one(), Rat::one()]);
        assert_eq!(f.to_string(), "x^2 + x - (29/5)");
        assert_eq!(UniPoly::<Rat>::zero(&Rat::zero()).to_string(), "0");
    }
}
