//! Multifactor Hensel lifting.
//!
//! Lifts a monic squarefree factorization f = f1 ... fr (mod p) to a
//! factorization mod p^(2^j) by a balanced product tree: each node lifts the
//! pair (g, h) = (product of left half, product of right half) with a
//! quadratically convergent step that also updates the Bezout pair, then
//! recurses into the halves. All factors stay monic, so divisions along the
//! way are exact over Z/m and the stored residues in [0, m) trim to the
//! correct degrees automatically.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::poly::UniPoly;
use crate::zpoly::ZPoly;

pub(crate) struct Lifted {
    pub modulus: BigInt,
    pub factors: Vec<UniPoly<BigInt>>,
}

fn mk(coeffs: Vec<BigInt>) -> UniPoly<BigInt> {
    if coeffs.is_empty() {
        UniPoly::zero(&BigInt::zero())
    } else {
        UniPoly::from_coeffs(coeffs)
    }
}

fn zp_to_big(f: &ZPoly) -> UniPoly<BigInt> {
    mk(f.coeffs().iter().map(|&c| BigInt::from(c)).collect())
}

/// Reduce all coefficients into [0, m).
fn pmod(f: &UniPoly<BigInt>, m: &BigInt) -> UniPoly<BigInt> {
    mk(f.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

fn pmul(a: &UniPoly<BigInt>, b: &UniPoly<BigInt>, m: &BigInt) -> UniPoly<BigInt> {
    pmod(&a.mul(b), m)
}

fn psub(a: &UniPoly<BigInt>, b: &UniPoly<BigInt>, m: &BigInt) -> UniPoly<BigInt> {
    pmod(&a.sub(b), m)
}

fn padd(a: &UniPoly<BigInt>, b: &UniPoly<BigInt>, m: &BigInt) -> UniPoly<BigInt> {
    pmod(&a.add(b), m)
}

/// Division with remainder by a monic divisor, coefficients in Z/m.
fn divrem_monic(
    a: &UniPoly<BigInt>,
    h: &UniPoly<BigInt>,
    m: &BigInt,
) -> (UniPoly<BigInt>, UniPoly<BigInt>) {
    debug_assert!(h.is_monic());
    let dh = h.degree();
    let mut rem: Vec<BigInt> = a.coeffs().to_vec();
    if rem.len() <= dh {
        return (UniPoly::zero(&BigInt::zero()), mk(rem));
    }
    let mut quo = vec![BigInt::zero(); rem.len() - dh];
    for i in (0..quo.len()).rev() {
        let c = rem[i + dh].mod_floor(m);
        if !c.is_zero() {
            for (j, hj) in h.coeffs().iter().enumerate() {
                let t = (&rem[i + j] - &c * hj).mod_floor(m);
                rem[i + j] = t;
            }
        }
        quo[i] = c;
    }
    rem.truncate(dh);
    (mk(quo), mk(rem))
}

/// One quadratic Hensel step: from f = g h (mod m), s g + t h = 1 (mod m)
/// with h monic, produce the same data mod m^2.
#[allow(clippy::type_complexity)]
fn hensel_step(
    f: &UniPoly<BigInt>,
    g: &UniPoly<BigInt>,
    h: &UniPoly<BigInt>,
    s: &UniPoly<BigInt>,
    t: &UniPoly<BigInt>,
    m2: &BigInt,
) -> (UniPoly<BigInt>, UniPoly<BigInt>, UniPoly<BigInt>, UniPoly<BigInt>) {
    let fm = pmod(f, m2);
    let e = psub(&fm, &pmul(g, h, m2), m2);
    let (q, r) = divrem_monic(&pmul(s, &e, m2), h, m2);
    let gs = pmod(&g.add(&pmul(t, &e, m2)).add(&pmul(&q, g, m2)), m2);
    let hs = padd(h, &r, m2);
    debug_assert!(hs.is_monic() && hs.degree() == h.degree());

    let one = UniPoly::one(&BigInt::zero());
    let b = psub(&padd(&pmul(s, &gs, m2), &pmul(t, &hs, m2), m2), &one, m2);
    let (c, d) = divrem_monic(&pmul(s, &b, m2), &hs, m2);
    let ss = psub(s, &d, m2);
    let ts = psub(t, &padd(&pmul(t, &b, m2), &pmul(&c, &gs, m2), m2), m2);
    (gs, hs, ss, ts)
}

/// Lift the pair (g0, h0) with f = g0 h0 (mod p) up to the target modulus,
/// which must be p^(2^j) for some j.
fn lift_pair(
    f: &UniPoly<BigInt>,
    g0: &ZPoly,
    h0: &ZPoly,
    s0: &ZPoly,
    t0: &ZPoly,
    p: u64,
    target: &BigInt,
) -> (UniPoly<BigInt>, UniPoly<BigInt>) {
    let mut m = BigInt::from(p);
    let mut g = zp_to_big(g0);
    let mut h = zp_to_big(h0);
    let mut s = zp_to_big(s0);
    let mut t = zp_to_big(t0);
    while &m < target {
        let m2 = &m * &m;
        let (gs, hs, ss, ts) = hensel_step(f, &g, &h, &s, &t, &m2);
        g = gs;
        h = hs;
        s = ss;
        t = ts;
        m = m2;
    }
    debug_assert_eq!(&m, target);
    (g, h)
}

fn lift_node(
    f: &UniPoly<BigInt>,
    parts: &[ZPoly],
    p: u64,
    target: &BigInt,
    out: &mut Vec<UniPoly<BigInt>>,
) {
    if parts.len() == 1 {
        debug_assert_eq!(f.degree(), parts[0].degree());
        out.push(f.clone());
        return;
    }
    let mid = parts.len() / 2;
    let (lp, rp) = parts.split_at(mid);
    let mut g0 = ZPoly::one(p);
    for q in lp {
        g0 = g0.mul(q);
    }
    let mut h0 = ZPoly::one(p);
    for q in rp {
        h0 = h0.mul(q);
    }
    let (d, s0, t0) = g0.ext_gcd(&h0);
    assert_eq!(d.deg(), Some(0), "modular factors are not pairwise coprime");
    let (g, h) = lift_pair(f, &g0, &h0, &s0, &t0, p, target);
    lift_node(&g, lp, p, target, out);
    lift_node(&h, rp, p, target, out);
}

/// Lift the monic factorization `parts` of `f` mod p to modulus p^(2^j),
/// where j is minimal with p^(2^j) >= need.
pub(crate) fn lift_factorization(
    f: &UniPoly<BigInt>,
    parts: &[ZPoly],
    p: u64,
    need: &BigInt,
) -> Lifted {
    assert!(f.is_monic());
    assert!(!parts.is_empty());
    let mut modulus = BigInt::from(p);
    while &modulus < need {
        modulus = &modulus * &modulus;
    }
    let mut factors = Vec::with_capacity(parts.len());
    lift_node(&pmod(f, &modulus), parts, p, &modulus, &mut factors);
    Lifted { modulus, factors }
}

/// Symmetric representative: map each coefficient c in [0, m) to the
/// integer of least absolute value congruent to it.
pub(crate) fn symmetric(f: &UniPoly<BigInt>, m: &BigInt) -> UniPoly<BigInt> {
    let half = m / 2;
    mk(f.coeffs()
        .iter()
        .map(|c| {
            let c = c.mod_floor(m);
            if c > half {
                c - m
            } else {
                c
            }
        })
        .collect())
}

pub(crate) fn symmetric_scalar(c: &BigInt, m: &BigInt) -> BigInt {
    let half = m / 2;
    let c = c.mod_floor(m);
    if c > half {
        c - m
    } else {
        c
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_poly(coeffs: &[i64]) -> UniPoly<BigInt> {
        mk(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn lifts_a_quartic_past_its_coefficients() {
        // (x^2 + 5x + 1)(x^2 - 3x + 7) with factors recombined mod 11.
        let f = int_poly(&[7, 32, -7, 2, 1]);
        let p = 11u64;
        let f1 = ZPoly::from_signed(p, &[1, 5, 1]);
        let f2 = ZPoly::from_signed(p, &[7, -3, 1]);
        let need = BigInt::from(1_000_000u64);
        let lifted = lift_factorization(&f, &[f1, f2], p, &need);
        assert!(lifted.modulus >= need);
        assert_eq!(lifted.factors.len(), 2);
        let g = symmetric(&lifted.factors[0], &lifted.modulus);
        let h = symmetric(&lifted.factors[1], &lifted.modulus);
        let mut got = vec![g, h];
        got.sort_by_key(|q| q.coeff(1).clone());
        assert_eq!(got[1], int_poly(&[1, 5, 1]));
        assert_eq!(got[0], int_poly(&[7, -3, 1]));
    }

    #[test]
    fn lifts_many_linear_factors() {
        // f = (x-1)(x-2)(x-3)(x-4)(x-5) mod 7 lifted far enough to read the
        // integer factors back off.
        let roots = [1i64, 2, 3, 4, 5];
        let mut f = int_poly(&[1]);
        for &r in &roots {
            f = f.mul(&int_poly(&[-r, 1]));
        }
        let p = 7u64;
        let parts: Vec<ZPoly> = roots
            .iter()
            .map(|&r| ZPoly::from_signed(p, &[-r, 1]))
            .collect();
        let lifted = lift_factorization(&f, &parts, p, &BigInt::from(10_000u64));
        let mut recovered: Vec<i64> = lifted
            .factors
            .iter()
            .map(|q| {
                let s = symmetric(q, &lifted.modulus);
                let c: BigInt = -s.coeff(0);
                i64::try_from(&c).unwrap()
            })
            .collect();
        recovered.sort_unstable();
        assert_eq!(recovered, roots);
        let prod = lifted
            .factors
            .iter()
            .fold(int_poly(&[1]), |acc, q| pmul(&acc, q, &lifted.modulus));
        assert_eq!(prod, pmod(&f, &lifted.modulus));
    }
}
