//! Number fields Q[a]/(m) of small degree and their elements.
//!
//! A field is handed around as a cheap clone of a shared inner record
//! holding the monic minimal polynomial together with a reduction table for
//! the generator powers a^n .. a^(2n-2), so multiplication folds a
//! convolution through table lookups instead of polynomial division.
//!
//! Elements store their field handle, which is what lets them act as plain
//! [`Coeff`]/[`FieldCoeff`] coefficients inside generic polynomials: the
//! parent travels with the value. Mixing parents is a programming error and
//! panics.
//!
//! Degrees are capped at a small constant: every field this crate touches
//! has degree at most eight (quintics from 11-division kernels, their
//! quadratic twists handled separately, and composita assembled elsewhere).

use crate::poly::{Coeff, FieldCoeff, UniPoly};
use crate::rational::Rat;
use std::fmt;
use std::sync::Arc;

/// Hard cap on field degree; everything here lives in tiny degree.
pub const DEGREE_CAP: usize = 8;

struct Inner {
    /// Monic irreducible polynomial over Q defining the field.
    min_poly: UniPoly<Rat>,
    deg: usize,
    /// powers[i] = coordinates of a^(deg+i), for i in 0..deg-1.
    powers: Vec<Vec<Rat>>,
}

/// A number field presentation Q[a]/(m); clones share the same inner record.
#[derive(Clone)]
pub struct NumberField(Arc<Inner>);

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.min_poly == other.0.min_poly
    }
}

impl Eq for NumberField {}

impl NumberField {
    /// Build from a defining polynomial, normalized monic. The polynomial
    /// must be irreducible over Q; this is verified and costs a rational
    /// factorization, so hold on to the handle rather than rebuilding.
    pub fn new(defining: &UniPoly<Rat>) -> crate::Result<Self> {
        let m = defining.monic();
        let deg = match m.deg() {
            None | Some(0) => return Err(crate::Error::ReduciblePolynomial),
            Some(d) => d,
        };
        if deg > DEGREE_CAP {
            return Err(crate::Error::DegreeCap(deg, DEGREE_CAP));
        }
        if deg > 1 && !crate::factor::is_irreducible_over_q(&m) {
            return Err(crate::Error::ReduciblePolynomial);
        }
        Ok(Self::new_unchecked(m))
    }

    /// Build without the irreducibility check; callers must know the
    /// polynomial is irreducible (for instance a factor just produced by the
    /// factorizer).
    pub(crate) fn new_unchecked(monic: UniPoly<Rat>) -> Self {
        let deg = monic.degree();
        debug_assert!(monic.is_monic() && deg >= 1 && deg <= DEGREE_CAP);
        // Reduction table: a^deg = -(lower coefficients), then multiply up.
        let mut powers: Vec<Vec<Rat>> = Vec::with_capacity(deg.saturating_sub(1));
        if deg >= 1 {
            let first: Vec<Rat> = (0..deg).map(|j| -monic.coeff(j)).collect();
            let mut cur = first;
            for _ in 0..deg.saturating_sub(1) {
                powers.push(cur.clone());
                // Multiply cur by a: shift, then reduce the overflow term.
                let top = cur[deg - 1].clone();
                let mut next = vec![Rat::zero(); deg];
                for j in (1..deg).rev() {
                    next[j] = cur[j - 1].clone();
                }
                for (j, next_j) in next.iter_mut().enumerate() {
                    *next_j = &*next_j + &(&top * &powers[0][j]);
                }
                cur = next;
            }
        }
        NumberField(Arc::new(Inner { min_poly: monic, deg, powers }))
    }

    /// The rationals presented as a degree-1 field (generator 0).
    pub fn rationals() -> Self {
        Self::new_unchecked(UniPoly::from_i64(&[0, 1]))
    }

    /// Q(sqrt(d)) for the squarefree kernel of a nonsquare d.
    pub fn quadratic(d: &Rat) -> crate::Result<Self> {
        if d.is_zero() || d.is_square() {
            return Err(crate::Error::ReduciblePolynomial);
        }
        let d0 = Rat::from_int(d.squarefree_kernel());
        Ok(Self::new_unchecked(UniPoly::from_coeffs(vec![
            -d0,
            Rat::zero(),
            Rat::one(),
        ])))
    }

    pub fn degree(&self) -> usize {
        self.0.deg
    }

    pub fn min_poly(&self) -> &UniPoly<Rat> {
        &self.0.min_poly
    }

    pub fn is_rationals(&self) -> bool {
        self.0.deg == 1
    }

    pub fn zero(&self) -> NfElem {
        NfElem {
            field: self.clone(),
            coords: vec![Rat::zero(); self.0.deg],
        }
    }

    pub fn one(&self) -> NfElem {
        self.from_rat(Rat::one())
    }

    /// The class of the variable a.
    pub fn generator(&self) -> NfElem {
        if self.0.deg == 1 {
            // a = -m(0) for the linear presentation x - c.
            return self.from_rat(-self.0.min_poly.coeff(0));
        }
        let mut coords = vec![Rat::zero(); self.0.deg];
        coords[1] = Rat::one();
        NfElem { field: self.clone(), coords }
    }

    pub fn from_rat(&self, r: Rat) -> NfElem {
        let mut coords = vec![Rat::zero(); self.0.deg];
        coords[0] = r;
        NfElem { field: self.clone(), coords }
    }

    pub fn from_int(&self, n: i64) -> NfElem {
        self.from_rat(Rat::from_int(n))
    }

    /// Coefficientwise embedding of a rational polynomial.
    pub fn embed_poly(&self, f: &crate::poly::UniPoly<Rat>) -> crate::poly::UniPoly<NfElem> {
        let coeffs: Vec<NfElem> =
            f.coeffs().iter().map(|c| self.from_rat(c.clone())).collect();
        crate::poly::UniPoly::from_coeffs(coeffs)
    }

    /// Element from coordinates in the power basis (ascending, padded).
    pub fn elem(&self, coords: &[Rat]) -> NfElem {
        assert!(coords.len() <= self.0.deg, "coordinate vector too long");
        let mut c = coords.to_vec();
        c.resize(self.0.deg, Rat::zero());
        NfElem { field: self.clone(), coords: c }
    }

    /// Evaluate a rational polynomial at the generator.
    pub fn eval_at_generator(&self, f: &UniPoly<Rat>) -> NfElem {
        let g = self.generator();
        let mut acc = self.zero();
        for c in f.coeffs().iter().rev() {
            acc = acc.mul_c(&g).add_c(&self.from_rat(c.clone()));
        }
        acc
    }

    /// Whether `other` presents an isomorphic field: equal degree and the
    /// other defining polynomial acquires a root here.
    pub fn is_isomorphic(&self, other: &NumberField) -> bool {
        if self.0.deg != other.0.deg {
            return false;
        }
        if self == other {
            return true;
        }
        !crate::factor::roots_in_field(&other.0.min_poly, self).is_empty()
    }
}

impl fmt::Display for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rationals() {
            return write!(f, "Q");
        }
        let s = self.0.min_poly.to_string().replace('x', "a");
        write!(f, "Q[a]/({s})")
    }
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An element of a number field, in power-basis coordinates.
#[derive(Clone)]
pub struct NfElem {
    field: NumberField,
    coords: Vec<Rat>,
}

impl NfElem {
    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    /// The element as a rational when it lies in the prime field.
    pub fn as_rat(&self) -> Option<Rat> {
        if self.coords[1..].iter().all(|c| c.is_zero()) {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    pub fn is_rational(&self) -> bool {
        self.coords[1..].iter().all(|c| c.is_zero())
    }

    fn check(&self, rhs: &Self) {
        assert!(
            self.field == rhs.field,
            "elements of different number fields"
        );
    }

    /// View as a rational polynomial in the generator.
    pub fn to_poly(&self) -> UniPoly<Rat> {
        if self.coords.iter().all(|c| c.is_zero()) {
            return UniPoly::zero(&Rat::zero());
        }
        UniPoly::from_coeffs(self.coords.clone())
    }

    /// Field norm: the product of the images under all embeddings.
    pub fn norm(&self) -> Rat {
        let g = self.to_poly();
        if g.is_zero() {
            return Rat::zero();
        }
        // Monic minimal polynomial makes Res(m, g) = prod g(root).
        self.field.0.min_poly.resultant(&g)
    }

    /// Minimal polynomial over Q, monic.
    pub fn minimal_polynomial(&self) -> UniPoly<Rat> {
        let n = self.field.0.deg;
        // Powers of self as coordinate columns.
        let mut pows: Vec<Vec<Rat>> = Vec::with_capacity(n + 1);
        let mut cur = self.field.one();
        for _ in 0..=n {
            pows.push(cur.coords.clone());
            cur = cur.mul_c(self);
        }
        for k in 1..=n {
            if let Some(sol) = solve_linear(&pows[..k], &pows[k], n) {
                // self^k = sum sol[i] self^i, so the minimal polynomial is
                // x^k - sum sol[i] x^i.
                let mut coeffs = sol.iter().map(|c| -c).collect::<Vec<_>>();
                coeffs.push(Rat::one());
                let m = UniPoly::from_coeffs(coeffs);
                debug_assert!(m.is_monic() && m.degree() == k);
                return m;
            }
        }
        unreachable!("an element always satisfies a degree <= n relation")
    }

    /// Square root within the field, when one exists.
    pub fn sqrt_in_field(&self) -> Option<NfElem> {
        if self.coords.iter().all(|c| c.is_zero()) {
            return Some(self.clone());
        }
        if let Some(r) = self.as_rat() {
            if let Some(s) = r.sqrt_exact() {
                return Some(self.field.from_rat(s));
            }
            if self.field.is_rationals() {
                return None;
            }
        }
        // Roots of x^2 - self over the field.
        let x2 = UniPoly::from_coeffs(vec![
            self.neg_c(),
            self.field.zero(),
            self.field.one(),
        ]);
        crate::factor::roots_in_field_nf(&x2, &self.field).into_iter().next()
    }

    pub fn is_square(&self) -> bool {
        self.sqrt_in_field().is_some()
    }
}

/// Solve sum x_i cols[i] = target over Q by Gaussian elimination; columns
/// have length dim. Returns None when inconsistent.
fn solve_linear(cols: &[Vec<Rat>], target: &[Rat], dim: usize) -> Option<Vec<Rat>> {
    let k = cols.len();
    // Augmented matrix rows: dim rows, k+1 columns.
    let mut m: Vec<Vec<Rat>> = (0..dim)
        .map(|r| {
            let mut row: Vec<Rat> = cols.iter().map(|c| c[r].clone()).collect();
            row.push(target[r].clone());
            row
        })
        .collect();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; k];
    let mut row = 0usize;
    for col in 0..k {
        let Some(pr) = (row..dim).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, pr);
        let inv = m[row][col].recip().unwrap();
        for j in col..=k {
            m[row][j] = &m[row][j] * &inv;
        }
        for r in 0..dim {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for j in col..=k {
                    m[r][j] = &m[r][j] - &(&f * &m[row][j]);
                }
            }
        }
        pivot_of_col[col] = Some(row);
        row += 1;
        if row == dim {
            break;
        }
    }
    // Inconsistent when a zero row has nonzero augment.
    for r in 0..dim {
        if m[r][..k].iter().all(|c| c.is_zero()) && !m[r][k].is_zero() {
            return None;
        }
    }
    let mut sol = vec![Rat::zero(); k];
    for (col, pivot) in pivot_of_col.iter().enumerate() {
        if let Some(r) = pivot {
            sol[col] = m[*r][k].clone();
        }
    }
    // Verify (free columns were set to zero; the system may still demand
    // them, so check the candidate).
    for r in 0..dim {
        let mut acc = Rat::zero();
        for (i, c) in cols.iter().enumerate() {
            acc = &acc + &(&sol[i] * &c[r]);
        }
        if acc != target[r] {
            return None;
        }
    }
    Some(sol)
}

impl PartialEq for NfElem {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coords == other.coords
    }
}

impl Coeff for NfElem {
    fn zero_like(&self) -> Self {
        self.field.zero()
    }

    fn one_like(&self) -> Self {
        self.field.one()
    }

    fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    fn add_c(&self, rhs: &Self) -> Self {
        self.check(rhs);
        NfElem {
            field: self.field.clone(),
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    fn sub_c(&self, rhs: &Self) -> Self {
        self.check(rhs);
        NfElem {
            field: self.field.clone(),
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    fn mul_c(&self, rhs: &Self) -> Self {
        self.check(rhs);
        let n = self.field.0.deg;
        if n == 1 {
            return NfElem {
                field: self.field.clone(),
                coords: vec![&self.coords[0] * &rhs.coords[0]],
            };
        }
        let mut conv = vec![Rat::zero(); 2 * n - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                conv[i + j] = &conv[i + j] + &(a * b);
            }
        }
        let mut coords: Vec<Rat> = conv[..n].to_vec();
        for (i, c) in conv.iter().enumerate().skip(n) {
            if c.is_zero() {
                continue;
            }
            let table = &self.field.0.powers[i - n];
            for (j, t) in table.iter().enumerate() {
                if !t.is_zero() {
                    coords[j] = &coords[j] + &(c * t);
                }
            }
        }
        NfElem { field: self.field.clone(), coords }
    }

    fn neg_c(&self) -> Self {
        NfElem {
            field: self.field.clone(),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

impl FieldCoeff for NfElem {
    fn inv_c(&self) -> crate::Result<Self> {
        if Coeff::is_zero(self) {
            return Err(crate::Error::DivisionByZero);
        }
        if let Some(r) = self.as_rat() {
            return Ok(self.field.from_rat(r.recip()?));
        }
        let g = self.to_poly();
        let (d, s, _) = g.ext_gcd(&self.field.0.min_poly);
        debug_assert!(d.is_constant(), "defining polynomial not irreducible");
        let red = s.rem(&self.field.0.min_poly);
        // ext_gcd already normalized the gcd to 1, so s itself is the inverse.
        let coords: Vec<Rat> = (0..self.field.0.deg).map(|i| red.coeff(i)).collect();
        Ok(NfElem { field: self.field.clone(), coords })
    }
}

impl fmt::Display for NfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if Coeff::is_zero(self) {
            return write!(f, "0");
        }
        let s = self.to_poly().to_string().replace('x', "a");
        write!(f, "{s}")
    }
}

impl fmt::Debug for NfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sqrt2() -> NumberField {
        NumberField::new(&UniPoly::from_i64(&[-2, 0, 1])).unwrap()
    }

    fn zeta11_real() -> NumberField {
        // Minimal polynomial of the trace generator of the real degree-5
        // subfield of the 11th cyclotomic field.
        NumberField::new(&UniPoly::from_i64(&[1, 3, -3, -4, 1, 1])).unwrap()
    }

    #[test]
    fn basic_arithmetic() {
        let k = sqrt2();
        let a = k.generator();
        let two = a.mul_c(&a);
        assert_eq!(two, k.from_int(2));
        let x = k.elem(&[Rat::from_int(1), Rat::from_int(1)]); // 1 + sqrt 2
        let y = x.mul_c(&x); // 3 + 2 sqrt 2
        assert_eq!(y, k.elem(&[Rat::from_int(3), Rat::from_int(2)]));
        let inv = x.inv_c().unwrap(); // 1/(1+s2) = s2 - 1
        assert_eq!(inv, k.elem(&[Rat::from_int(-1), Rat::from_int(1)]));
        assert_eq!(x.mul_c(&inv), k.one());
    }

    #[test]
    fn rationals_as_field() {
        let q = NumberField::rationals();
        assert!(q.is_rationals());
        let x = q.from_rat(Rat::new(3, 4));
        let y = q.from_rat(Rat::new(-1, 2));
        assert_eq!(x.mul_c(&y), q.from_rat(Rat::new(-3, 8)));
        assert_eq!(x.inv_c().unwrap(), q.from_rat(Rat::new(4, 3)));
        assert_eq!(q.generator(), q.zero());
    }

    #[test]
    fn norms_and_minimal_polynomials() {
        let k = sqrt2();
        let x = k.elem(&[Rat::from_int(1), Rat::from_int(1)]);
        // Norm(1 + sqrt2) = (1+s2)(1-s2) = -1.
        assert_eq!(x.norm(), Rat::from_int(-1));
        assert_eq!(x.minimal_polynomial(), UniPoly::from_i64(&[-1, -2, 1]));
        // A rational element has a linear minimal polynomial and norm r^deg.
        let r = k.from_rat(Rat::new(2, 3));
        assert_eq!(r.minimal_polynomial(), UniPoly::from_coeffs(vec![
            Rat::new(-2, 3),
            Rat::one(),
        ]));
        assert_eq!(r.norm(), Rat::new(4, 9));
    }

    #[test]
    fn quintic_field() {
        let k = zeta11_real();
        assert_eq!(k.degree(), 5);
        let a = k.generator();
        // The generator's minimal polynomial is the defining one.
        assert_eq!(&a.minimal_polynomial(), k.min_poly());
        // Sanity: (a^3) * (a^2) = a^5 reduced, matches eval of x^5 mod m.
        let a5 = a.mul_c(&a).mul_c(&a).mul_c(&a).mul_c(&a);
        let m = k.min_poly();
        let red = UniPoly::monomial(Rat::one(), 5).rem(m);
        assert_eq!(a5, k.eval_at_generator(&red));
        let inv = a.inv_c().unwrap();
        assert_eq!(inv.mul_c(&a), k.one());
    }

    #[test]
    fn quadratic_constructor() {
        let k = NumberField::quadratic(&Rat::from_int(12)).unwrap();
        // 12 reduces to squarefree kernel 3.
        assert_eq!(k.min_poly(), &UniPoly::from_i64(&[-3, 0, 1]));
        assert!(NumberField::quadratic(&Rat::from_int(9)).is_err());
        assert!(NumberField::quadratic(&Rat::zero()).is_err());
        let km = NumberField::quadratic(&Rat::from_int(-3)).unwrap();
        let g = km.generator();
        assert_eq!(g.mul_c(&g), km.from_int(-3));
    }

    #[test]
    fn field_mismatch_panics() {
        let r = std::panic::catch_unwind(|| {
            let k1 = sqrt2();
            let k2 = NumberField::quadratic(&Rat::from_int(3)).unwrap();
            let _ = k1.generator().add_c(&k2.generator());
        });
        assert!(r.is_err());
    }

    #[test]
    fn linear_solver() {
        let cols = vec![
            vec![Rat::from_int(1), Rat::from_int(0)],
            vec![Rat::from_int(1), Rat::from_int(1)],
        ];
        let sol = solve_linear(&cols, &[Rat::from_int(3), Rat::from_int(2)], 2).unwrap();
        assert_eq!(sol, vec![Rat::from_int(1), Rat::from_int(2)]);
        assert!(solve_linear(&cols[..1], &[Rat::from_int(0), Rat::from_int(1)], 2).is_none());
    }
}
