//! Torsion subgroups of elliptic curves over number fields.
//!
//! The computation runs in two sound phases. First, a multiplicative
//! bound: for good unramified primes p of K and residue fields F_q of
//! affordable size, the prime-to-p part of the torsion injects into
//! E(F_q), so for each prime l the l-part of |E(K)_tors| is bounded by
//! the minimum l-valuation of |E(F_q)| over sampled primes p != l.
//! Sampling continues until the combined bound is stable across a window
//! of consecutive usable primes.
//!
//! Second, exact determination: for each l dividing the bound, the
//! abscissas of points of exact order l^j are the roots in K of the
//! primitive l^j-division polynomial, and each abscissa contributes the
//! two points (x, y), (x, -y - a1 x - a3) when the y-quadratic splits
//! over K (one point when it degenerates, which happens exactly at
//! 2-torsion). The counts N_j of points of order dividing l^j force the
//! invariants through the filtration jumps: in Z/l^u x Z/l^v the jump
//! v_l(N_j) - v_l(N_{j-1}) is 2 for j <= u and 1 for u < j <= v. The
//! search stops at the first level with no new points, which is closed
//! because a point of order l^{j+1} would produce one of exact order l^j
//! by multiplication.
//!
//! Everything ends with a Weil pairing sanity check: invariants (m, n)
//! with m >= 3 require the m-th cyclotomic polynomial to have a root in
//! K, and a violation is reported as an internal error rather than
//! silently returned.

use num_integer::Integer;

use crate::arith::factor_u64;
use crate::elliptic::Curve;
use crate::factor::{roots_in_field, roots_in_field_bounded, roots_in_field_nf};
use crate::numfield::{NfElem, NumberField};
use crate::poly::{Coeff, UniPoly};
use crate::rational::Rat;
use crate::residue::ResidueField;

/// Controls for the reduction-based bound phase.
#[derive(Clone, Debug)]
pub struct TorsionParams {
    /// Rational primes are sampled up to this limit.
    pub max_prime: u64,
    /// Stop once the bound survives this many consecutive usable primes.
    pub stable_window: usize,
    /// Residue fields larger than this are skipped, not counted.
    pub max_field_size: u64,
}

impl Default for TorsionParams {
    fn default() -> Self {
        TorsionParams { max_prime: 600, stable_window: 8, max_field_size: 100_000 }
    }
}

/// Invariants (m, n) with m | n of the group Z/m x Z/n.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TorsionStructure {
    pub m: u64,
    pub n: u64,
}

impl TorsionStructure {
    pub fn order(&self) -> u64 {
        self.m * self.n
    }

    pub fn is_trivial(&self) -> bool {
        self.m == 1 && self.n == 1
    }
}

impl std::fmt::Display for TorsionStructure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match (self.m, self.n) {
            (1, 1) => write!(f, "trivial"),
            (1, n) => write!(f, "Z/{}", n),
            (m, n) => write!(f, "Z/{} x Z/{}", m, n),
        }
    }
}

fn val(mut n: u64, l: u64) -> u32 {
    let mut v = 0;
    while n % l == 0 {
        n /= l;
        v += 1;
    }
    v
}

/// Per-prime gcds of residue point counts: pairs (p, gcd of |E(F_q)| over
/// the usable residue fields above p).
fn residue_count_gcds(
    e: &Curve<NfElem>,
    k: &NumberField,
    params: &TorsionParams,
    seed: u64,
) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    let mut stable = 0usize;
    let mut last_bound = 0u64;
    for p in crate::arith::Primes::new() {
        if p > params.max_prime {
            break;
        }
        if p == 2 {
            continue;
        }
        let rfs = match ResidueField::of_number_field(k, p, seed) {
            Ok(r) => r,
            Err(_) => continue,
        };
        let mut counts = Vec::new();
        let mut bad = false;
        for rf in &rfs {
            if rf.size() > params.max_field_size {
                continue;
            }
            match e.reduce_at(rf) {
                Ok(ep) => counts.push(ep.count_points()),
                Err(_) => {
                    bad = true;
                    break;
                }
            }
        }
        if bad || counts.is_empty() {
            continue;
        }
        let g = counts.into_iter().fold(0u64, |a, b| a.gcd(&b));
        out.push((p, g));
        let bound = combine_bound(&out);
        if bound == last_bound && bound > 0 {
            stable += 1;
            if stable >= params.stable_window && out.len() >= 3 {
                break;
            }
        } else {
            stable = 0;
            last_bound = bound;
        }
    }
    out
}

/// Combine per-prime gcds into a single multiplicative torsion bound,
/// discounting each l at the one sampled prime that may sit above l.
fn combine_bound(per_char: &[(u64, u64)]) -> u64 {
    if per_char.len() < 3 {
        return 0;
    }
    let mut candidates: Vec<u64> = Vec::new();
    for i in 0..3 {
        for j in (i + 1)..3 {
            let g = per_char[i].1.gcd(&per_char[j].1);
            for (l, _) in factor_u64(g) {
                if !candidates.contains(&l) {
                    candidates.push(l);
                }
            }
        }
    }
    let mut bound = 1u64;
    for l in candidates {
        let mut vmin = u32::MAX;
        for &(p, n) in per_char {
            if p == l {
                continue;
            }
            vmin = vmin.min(val(n, l));
        }
        if vmin != u32::MAX {
            bound *= l.pow(vmin);
        }
    }
    bound
}

/// A multiplicative upper bound for |E(K)_tors|.
pub fn torsion_multiplicative_bound(
    e: &Curve<NfElem>,
    k: &NumberField,
    params: &TorsionParams,
    seed: u64,
) -> crate::Result<u64> {
    let per_char = residue_count_gcds(e, k, params, seed);
    if per_char.len() < 3 {
        return Err(crate::Error::Unsupported(
            "too few usable primes for a torsion bound".into(),
        ));
    }
    Ok(combine_bound(&per_char))
}

/// The curve's coefficients as rationals, when K happens to act as a
/// field of constants for it.
fn rational_model(e: &Curve<NfElem>) -> Option<Curve<Rat>> {
    let a = e.a_invariants();
    let vals: Option<Vec<Rat>> = a.iter().map(|c| c.as_rat()).collect();
    let v = vals?;
    Curve::new([v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone(), v[4].clone()]).ok()
}

/// Degree threshold above which rational division polynomials are sent
/// through the degree-capped factorizer instead of the full one.
const BOUNDED_ROOTS_DEGREE: usize = 90;

/// Number of K-points of exact order n on e.
fn exact_order_count(
    e: &Curve<NfElem>,
    k: &NumberField,
    eq: &Option<Curve<Rat>>,
    n: usize,
    seed: u64,
) -> crate::Result<u64> {
    let roots: Vec<NfElem> = match eq {
        Some(eq) => {
            let mut dp = crate::divpoly::DivPolys::new(eq);
            let prim = dp.primitive_part(n);
            if prim.degree() > BOUNDED_ROOTS_DEGREE {
                roots_in_field_bounded(&prim, k, seed)?
            } else {
                roots_in_field(&prim, k)
            }
        }
        None => {
            let mut dp = crate::divpoly::DivPolys::new(e);
            let prim = dp.primitive_part(n);
            roots_in_field_nf(&prim, k)
        }
    };
    let bpoly = e.two_torsion_cubic();
    let mut count = 0u64;
    for x in &roots {
        let disc = bpoly.eval(x);
        if Coeff::is_zero(&disc) {
            count += 1;
        } else if disc.sqrt_in_field().is_some() {
            count += 2;
        }
    }
    Ok(count)
}

fn cyclotomic_poly(m: u64) -> UniPoly<Rat> {
    let coeffs: &[i64] = match m {
        3 => &[1, 1, 1],
        4 => &[1, 0, 1],
        5 => &[1, 1, 1, 1, 1],
        6 => &[1, -1, 1],
        7 => &[1, 1, 1, 1, 1, 1, 1],
        8 => &[1, 0, 0, 0, 1],
        9 => &[1, 0, 0, 1, 0, 0, 1],
        10 => &[1, -1, 1, -1, 1],
        12 => &[1, 0, -1, 0, 1],
        _ => panic!("cyclotomic polynomial {} not tabulated", m),
    };
    UniPoly::from_i64(coeffs)
}

/// The full torsion subgroup E(K)_tors as invariants (m, n), m | n.
pub fn torsion_subgroup(
    e: &Curve<NfElem>,
    k: &NumberField,
    seed: u64,
) -> crate::Result<TorsionStructure> {
    torsion_subgroup_with(e, k, &TorsionParams::default(), seed)
}

pub fn torsion_subgroup_with(
    e: &Curve<NfElem>,
    k: &NumberField,
    params: &TorsionParams,
    seed: u64,
) -> crate::Result<TorsionStructure> {
    let bound = torsion_multiplicative_bound(e, k, params, seed)?;
    let eq = rational_model(e);
    let mut m = 1u64;
    let mut n = 1u64;
    for (l, va) in factor_u64(bound) {
        let mut nj: u64 = 1;
        let mut prev_r: u32 = 0;
        let mut prev_jump: u32 = 2;
        let mut u_l: u32 = 0;
        let mut v_l: u32 = 0;
        for j in 1..=va {
            let cnt = exact_order_count(e, k, &eq, (l as usize).pow(j), seed)?;
            if cnt == 0 {
                break;
            }
            nj += cnt;
            let r = val(nj, l);
            assert_eq!(
                nj,
                l.pow(r),
                "points of order dividing {}^{} do not form an l-group",
                l,
                j
            );
            let jump = r - prev_r;
            assert!(jump >= 1 && jump <= 2, "filtration jump out of range");
            assert!(jump <= prev_jump, "filtration jumps must not increase");
            if jump == 2 {
                u_l = j;
            }
            v_l = j;
            prev_r = r;
            prev_jump = jump;
        }
        assert!(u_l + v_l <= va, "structure exceeds the multiplicative bound");
        m *= l.pow(u_l);
        n *= l.pow(v_l);
    }
    let t = TorsionStructure { m, n };
    if t.m >= 3 {
        let phi = cyclotomic_poly(t.m);
        if roots_in_field(&phi, k).is_empty() {
            return Err(crate::Error::Internal(format!(
                "invariants ({}, {}) contradict the Weil pairing over this field",
                t.m, t.n
            )));
        }
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn over_q(ai: &[i64; 5]) -> (Curve<NfElem>, NumberField) {
        let k = NumberField::rationals();
        let e = Curve::from_ainvs(ai).unwrap().base_change(&k);
        (e, k)
    }

    fn over_quad(ai: &[i64; 5], d: i64) -> (Curve<NfElem>, NumberField) {
        let k = NumberField::quadratic(&Rat::from_int(d)).unwrap();
        let e = Curve::from_ainvs(ai).unwrap().base_change(&k);
        (e, k)
    }

    #[test]
    fn rational_five_torsion() {
        let (e, k) = over_q(&[0, -1, -1, 0, 0]);
        let t = torsion_subgroup(&e, &k, 1).unwrap();
        assert_eq!(t, TorsionStructure { m: 1, n: 5 });
        assert_eq!(t.to_string(), "Z/5");
    }

    #[test]
    fn rational_torsion_of_a_rank_one_curve_is_trivial() {
        let (e, k) = over_q(&[0, 0, 1, -1, 0]);
        let t = torsion_subgroup(&e, &k, 1).unwrap();
        assert!(t.is_trivial());
    }

    #[test]
    fn torsion_growth_in_the_two_cm_quadratics() {
        // The same conductor-14 curve grows different torsion over the
        // two imaginary quadratic fields of its CM-adjacent primes.
        let (e3, k3) = over_quad(&[1, 0, 1, 4, -6], -3);
        assert_eq!(
            torsion_subgroup(&e3, &k3, 1).unwrap(),
            TorsionStructure { m: 3, n: 6 }
        );
        let (e7, k7) = over_quad(&[1, 0, 1, 4, -6], -7);
        assert_eq!(
            torsion_subgroup(&e7, &k7, 1).unwrap(),
            TorsionStructure { m: 2, n: 6 }
        );
    }

    #[test]
    fn four_by_four_over_the_gaussian_field() {
        let (e, k) = over_quad(&[1, 1, 1, -10, -10], -1);
        let t = torsion_subgroup(&e, &k, 1).unwrap();
        assert_eq!(t, TorsionStructure { m: 4, n: 4 });
    }

    #[test]
    fn rational_part_of_the_same_curves() {
        // Sanity: over Q the same curves have the classical torsion.
        let (e14, k) = over_q(&[1, 0, 1, 4, -6]);
        assert_eq!(torsion_subgroup(&e14, &k, 1).unwrap().order(), 6);
        let (e15, k) = over_q(&[1, 1, 1, -10, -10]);
        assert_eq!(torsion_subgroup(&e15, &k, 1).unwrap().order(), 8);
    }

    #[test]
    fn bound_is_a_multiple_of_the_torsion_order() {
        let (e, k) = over_quad(&[1, 0, 1, 4, -6], -3);
        let b = torsion_multiplicative_bound(&e, &k, &TorsionParams::default(), 1).unwrap();
        assert_eq!(b % 18, 0, "Z/3 x Z/6 has 18 points");
    }
}
