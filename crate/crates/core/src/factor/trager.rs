//! Factorization over a number field K = Q(theta) by Trager's norm method,
//! plus root finding in K for rational and K-coefficient polynomials.

use std::cmp::Ordering;

use super::{overq, Factorization};
use crate::numfield::{NfElem, NumberField};
use crate::poly::{Coeff, UniPoly};
use crate::rational::Rat;

/// Deterministic order on K-coefficient polynomials: degree first, then
/// coefficients from the top down by coordinate vectors.
pub fn cmp_nf_poly(a: &UniPoly<NfElem>, b: &UniPoly<NfElem>) -> Ordering {
    match a.deg().cmp(&b.deg()) {
        Ordering::Equal => {}
        o => return o,
    }
    let n = a.coeffs().len();
    for k in (0..n).rev() {
        match a.coeff(k).coords().cmp(b.coeff(k).coords()) {
            Ordering::Equal => {}
            o => return o,
        }
    }
    Ordering::Equal
}

fn cmp_nf(a: &NfElem, b: &NfElem) -> Ordering {
    a.coords().cmp(b.coords())
}

fn lift_q_poly(f: &UniPoly<Rat>, k: &NumberField) -> UniPoly<NfElem> {
    if f.is_zero() {
        return UniPoly::zero(&k.zero());
    }
    UniPoly::from_coeffs(f.coeffs().iter().map(|c| k.from_rat(c.clone())).collect())
}

fn lower_nf_poly(f: &UniPoly<NfElem>) -> UniPoly<Rat> {
    if f.is_zero() {
        return UniPoly::zero(&Rat::from_int(0));
    }
    UniPoly::from_coeffs(
        f.coeffs()
            .iter()
            .map(|c| c.as_rat().expect("coefficient not rational"))
            .collect(),
    )
}

/// The norm of a(x - s*theta) from K[x] down to Q[x], computed by
/// evaluation and interpolation: at each sample point x0 the norm value is
/// Res_y(m(y), a-hat(x0, y)) where a-hat substitutes y for theta.
fn shifted_norm(a: &UniPoly<NfElem>, k: &NumberField, s: i64) -> UniPoly<Rat> {
    let n = a.degree();
    let d = k.degree();
    let nd = n * d;
    let m = k.min_poly();
    let mut points = Vec::with_capacity(nd + 1);
    let mut t: i64 = 0;
    while points.len() < nd + 1 {
        let x0 = t;
        t = if t > 0 { -t } else { -t + 1 };
        // h(y) = sum_i a_i(y) (x0 - s y)^i by Horner in the outer variable.
        let base = UniPoly::from_coeffs(vec![Rat::from_int(x0), Rat::from_int(-s)]);
        let mut h = UniPoly::zero(&Rat::from_int(0));
        for i in (0..=n).rev() {
            h = h.mul(&base).add(&a.coeff(i).to_poly());
        }
        let val = m.resultant(&h);
        points.push((Rat::from_int(x0), val));
    }
    let norm = UniPoly::interpolate(&points);
    assert!(
        norm.deg() == Some(nd) && norm.is_monic(),
        "norm of a monic polynomial must be monic of degree {}",
        nd
    );
    norm
}

/// Factor a monic squarefree polynomial over K into monic irreducibles.
fn trager_squarefree(a: &UniPoly<NfElem>, k: &NumberField, seed: u64) -> Vec<UniPoly<NfElem>> {
    debug_assert!(a.is_monic());
    if a.degree() == 1 {
        return vec![a.clone()];
    }
    let mut shift: i64 = 1;
    loop {
        assert!(shift.abs() <= 60, "no squarefree shifted norm found");
        let norm = shifted_norm(a, k, shift);
        if norm.gcd(&norm.derivative()).degree() > 0 {
            shift = if shift > 0 { -shift } else { -shift + 1 };
            continue;
        }
        let fact = overq::factor_over_q(&norm, seed);
        assert!(fact.is_complete(), "norm factorization left a cofactor");
        let theta_s = k.generator().mul_c(&k.from_rat(Rat::from_int(shift)));
        let inner = UniPoly::from_coeffs(vec![theta_s, k.one()]);
        let mut out = Vec::new();
        let mut total = 0usize;
        for (ni, e) in &fact.factors {
            debug_assert_eq!(*e, 1);
            let pulled = lift_q_poly(ni, k).compose(&inner);
            let g = a.gcd(&pulled);
            assert!(g.degree() >= 1, "norm factor pulled back to a unit");
            total += g.degree();
            out.push(g);
        }
        assert_eq!(total, a.degree(), "pulled-back factors do not cover the input");
        return out;
    }
}

/// Complete factorization over the number field carried by the
/// coefficients. Over Q itself this delegates to the rational machinery.
pub fn factor_over_nf(f: &UniPoly<NfElem>, seed: u64) -> Factorization<NfElem> {
    assert!(!f.is_zero(), "factoring the zero polynomial");
    let k = f.ctx().field().clone();
    if k.is_rationals() {
        let fact = overq::factor_over_q(&lower_nf_poly(f), seed);
        assert!(fact.is_complete());
        return Factorization {
            unit: k.from_rat(fact.unit),
            factors: fact
                .factors
                .iter()
                .map(|(g, e)| (lift_q_poly(g, &k), *e))
                .collect(),
            cofactor: None,
        };
    }
    let unit = f.lead().unwrap().clone();
    if f.is_constant() {
        return Factorization { unit, factors: Vec::new(), cofactor: None };
    }
    let fm = f.monic();
    let mut factors: Vec<(UniPoly<NfElem>, u32)> = Vec::new();
    for (piece, e) in fm.squarefree_decomposition() {
        if piece.degree() == 0 {
            continue;
        }
        for g in trager_squarefree(&piece, &k, seed) {
            factors.push((g, e));
        }
    }
    factors.sort_by(|a, b| cmp_nf_poly(&a.0, &b.0));
    Factorization { unit, factors, cofactor: None }
}

/// Roots in K of a polynomial with rational coefficients.
///
/// The polynomial is factored over Q first; only irreducible factors whose
/// degree divides [K:Q] can contribute roots, and each is pushed through
/// Trager separately. This keeps norm degrees at deg(factor) * [K:Q], which
/// matters when f is a large division polynomial but K is small.
pub fn roots_in_field(f: &UniPoly<Rat>, k: &NumberField) -> Vec<NfElem> {
    assert!(!f.is_zero(), "roots of the zero polynomial");
    if f.is_constant() {
        return Vec::new();
    }
    let fact = overq::factor_over_q(f, 0x00f1e1d);
    assert!(fact.is_complete(), "rational factorization left a cofactor");
    let mut out = roots_from_q_factors(fact.factors.iter().map(|(g, _)| g), k);
    out.sort_by(cmp_nf);
    out
}

fn roots_from_q_factors<'a, I>(factors: I, k: &NumberField) -> Vec<NfElem>
where
    I: IntoIterator<Item = &'a UniPoly<Rat>>,
{
    let d = k.degree();
    let mut out = Vec::new();
    for g in factors {
        let dg = g.degree();
        if dg == 0 || d % dg != 0 {
            continue;
        }
        if dg == 1 {
            out.push(k.from_rat(-g.coeff(0)));
            continue;
        }
        for h in trager_squarefree(&lift_q_poly(g, k), k, 0x00f1e1d) {
            if h.degree() == 1 {
                out.push(h.coeff(0).neg_c());
            }
        }
    }
    out
}

/// Roots in K of a rational polynomial far too large to factor fully:
/// only factors of degree up to [K:Q] are hunted. Sound as long as the
/// capped factorization can certify that no factor of degree dividing
/// [K:Q] hides in its cofactor; otherwise an error is returned rather
/// than an incomplete root list.
pub fn roots_in_field_bounded(
    f: &UniPoly<Rat>,
    k: &NumberField,
    seed: u64,
) -> crate::Result<Vec<NfElem>> {
    assert!(!f.is_zero(), "roots of the zero polynomial");
    if f.is_constant() {
        return Ok(Vec::new());
    }
    let d = k.degree();
    let fact = overq::factor_over_q_bounded(f, d, seed);
    if let Some((cof, status)) = &fact.cofactor {
        match status {
            super::CofactorStatus::CertifiedIrreducible => {
                // An irreducible cofactor has degree above the cap, hence
                // above [K:Q], so it contributes no roots.
                debug_assert!(cof.degree() > d);
            }
            super::CofactorStatus::Unresolved { possible_degrees } => {
                if possible_degrees.iter().any(|&dd| dd <= d && d % dd == 0) {
                    return Err(crate::Error::Unsupported(
                        "bounded factorization could not exclude small factors".into(),
                    ));
                }
            }
        }
    }
    let mut out = roots_from_q_factors(fact.factors.iter().map(|(g, _)| g), k);
    out.sort_by(cmp_nf);
    Ok(out)
}

/// Roots in K of a polynomial with coefficients in K.
pub fn roots_in_field_nf(f: &UniPoly<NfElem>, k: &NumberField) -> Vec<NfElem> {
    assert!(!f.is_zero(), "roots of the zero polynomial");
    if f.is_constant() {
        return Vec::new();
    }
    if f.coeffs().iter().all(|c| c.is_rational()) {
        return roots_in_field(&lower_nf_poly(f), k);
    }
    let fact = factor_over_nf(f, 0x00ab1e);
    let mut out = Vec::new();
    for (g, _) in &fact.factors {
        if g.degree() == 1 {
            out.push(g.coeff(0).neg_c());
        }
    }
    out.sort_by(cmp_nf);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quad(d: i64) -> NumberField {
        NumberField::quadratic(&Rat::from_int(d)).unwrap()
    }

    #[test]
    fn rational_poly_roots_in_quadratic_field() {
        // x^2 - 5 has both roots in Q(sqrt5), none in Q(sqrt2).
        let f = UniPoly::from_i64(&[-5, 0, 1]);
        let k5 = quad(5);
        let roots = roots_in_field(&f, &k5);
        assert_eq!(roots.len(), 2);
        let g = k5.generator();
        assert!(roots.contains(&g) && roots.contains(&g.neg_c()));
        assert!(roots_in_field(&f, &quad(2)).is_empty());
    }

    #[test]
    fn mixed_split_over_quadratic() {
        // (x^2-2)(x^2-3)(x-7) over Q(sqrt2): roots are +-sqrt2 and 7.
        let f = UniPoly::from_i64(&[-2, 0, 1])
            .mul(&UniPoly::from_i64(&[-3, 0, 1]))
            .mul(&UniPoly::from_i64(&[-7, 1]));
        let k = quad(2);
        let roots = roots_in_field(&f, &k);
        assert_eq!(roots.len(), 3);
        for r in &roots {
            assert!(lift_q_poly(&f, &k).eval(r).is_zero());
        }
    }

    #[test]
    fn factor_over_quadratic_field() {
        // x^4 - x^2 - 2 = (x^2+1)(x^2-2); over Q(i) the first splits.
        let f = UniPoly::from_i64(&[-2, 0, -1, 0, 1]);
        let k = quad(-1);
        let fact = factor_over_nf(&lift_q_poly(&f, &k), 3);
        let degs: Vec<usize> = fact.factors.iter().map(|(g, _)| g.degree()).collect();
        assert_eq!(degs, vec![1, 1, 2]);
        assert_eq!(fact.product(), lift_q_poly(&f, &k));
    }

    #[test]
    fn cyclotomic_quintic_splits_in_its_own_field() {
        // The real cyclotomic quintic for level 11 splits completely in the
        // field it generates.
        let f = UniPoly::from_i64(&[1, 3, -3, -4, 1, 1]);
        let k = NumberField::new(&f).unwrap();
        let roots = roots_in_field(&f, &k);
        assert_eq!(roots.len(), 5);
        for r in &roots {
            assert!(lift_q_poly(&f, &k).eval(r).is_zero());
        }
    }

    #[test]
    fn nf_coefficient_roots() {
        // Over K = Q(sqrt2): x^2 - (3 + 2 sqrt2) = (x - (1+sqrt2))(x + (1+sqrt2)).
        let k = quad(2);
        let s = k.generator();
        let a = k.from_rat(Rat::from_int(1)).add_c(&s);
        let target = a.mul_c(&a);
        let f = UniPoly::from_coeffs(vec![target.neg_c(), k.zero(), k.one()]);
        let roots = roots_in_field_nf(&f, &k);
        assert_eq!(roots.len(), 2);
        assert!(roots.contains(&a) && roots.contains(&a.neg_c()));
    }

    #[test]
    fn repeated_nf_factors() {
        // (x - sqrt2)^2 (x - 3) over Q(sqrt2).
        let k = quad(2);
        let s = k.generator();
        let lin = UniPoly::from_coeffs(vec![s.neg_c(), k.one()]);
        let other = UniPoly::from_coeffs(vec![k.from_rat(Rat::from_int(-3)), k.one()]);
        let f = lin.mul(&lin).mul(&other);
        let fact = factor_over_nf(&f, 9);
        let shape: Vec<(usize, u32)> =
            fact.factors.iter().map(|(g, e)| (g.degree(), *e)).collect();
        assert!(shape.contains(&(1, 2)) && shape.contains(&(1, 1)));
        assert_eq!(fact.product(), f);
    }
}
