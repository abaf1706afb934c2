//! Factorization over Q by degree-set certificates, Hensel lifting and
//! subset recombination.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::hensel;
use super::{CofactorStatus, Factorization};
use crate::arith::Primes;
use crate::poly::UniPoly;
use crate::rational::Rat;
use crate::zpoly::ZPoly;

/// Primes used for the degree-set certificate.
const DEGREE_SET_PRIMES: usize = 5;
/// How many primes to scan before concluding a polynomial has no good prime
/// (which cannot happen for a squarefree input of the sizes we handle).
const GOOD_PRIME_SCAN: usize = 5000;
/// Candidate subsets examined before recombination gives up and reports an
/// unresolved cofactor.
const RECOMBINATION_BUDGET: u64 = 1 << 22;

/// Complete factorization over Q into monic irreducible factors.
pub fn factor_over_q(f: &UniPoly<Rat>, seed: u64) -> Factorization<Rat> {
    factor_impl(f, None, seed)
}

/// Find every irreducible factor of degree at most `bound`; anything left
/// over is returned as a cofactor with a degree-set verdict attached.
pub fn factor_over_q_bounded(f: &UniPoly<Rat>, bound: usize, seed: u64) -> Factorization<Rat> {
    factor_impl(f, Some(bound), seed)
}

fn factor_impl(f: &UniPoly<Rat>, bound: Option<usize>, seed: u64) -> Factorization<Rat> {
    assert!(!f.is_zero(), "factoring the zero polynomial");
    let unit = f.lead().unwrap().clone();
    if f.is_constant() {
        return Factorization { unit, factors: Vec::new(), cofactor: None };
    }
    let fm = f.monic();
    let (g_int, _) = fm.primitive_int();
    // A single good prime proves squarefreeness, skipping the rational gcd
    // in Yun's algorithm, which is expensive at division-polynomial sizes.
    let pieces: Vec<(UniPoly<Rat>, u32)> = if has_squarefree_reduction(&g_int) {
        vec![(fm.clone(), 1)]
    } else {
        fm.squarefree_decomposition()
    };

    let mut factors: Vec<(UniPoly<Rat>, u32)> = Vec::new();
    let mut cof: Option<(UniPoly<Rat>, CofactorStatus)> = None;
    for (piece, mult) in pieces {
        if piece.degree() == 0 {
            continue;
        }
        let (found, leftover) = factor_squarefree_monic(&piece, bound, seed);
        for g in found {
            push_factor(&mut factors, g, mult);
        }
        if let Some((c, status)) = leftover {
            merge_cofactor(&mut cof, c, mult, status);
        }
    }
    factors.sort_by(|a, b| cmp_rat_poly(&a.0, &b.0));
    Factorization { unit, factors, cofactor: cof }
}

fn push_factor(list: &mut Vec<(UniPoly<Rat>, u32)>, g: UniPoly<Rat>, mult: u32) {
    for (h, e) in list.iter_mut() {
        if *h == g {
            *e += mult;
            return;
        }
    }
    list.push((g, mult));
}

fn merge_cofactor(
    slot: &mut Option<(UniPoly<Rat>, CofactorStatus)>,
    c: UniPoly<Rat>,
    mult: u32,
    status: CofactorStatus,
) {
    let poly = c.pow(mult as usize);
    match slot.take() {
        None if mult == 1 => *slot = Some((poly, status)),
        None => {
            // A repeated cofactor is certainly not irreducible; report every
            // proper degree as possible rather than pretend to know more.
            let degs = (1..poly.degree()).collect();
            *slot = Some((poly, CofactorStatus::Unresolved { possible_degrees: degs }));
        }
        Some((prev, _)) => {
            let merged = prev.mul(&poly);
            let degs = (1..merged.degree()).collect();
            *slot = Some((merged, CofactorStatus::Unresolved { possible_degrees: degs }));
        }
    }
}

/// Deterministic order on rational polynomials: by degree, then by
/// coefficients from the top down.
pub(crate) fn cmp_rat_poly(a: &UniPoly<Rat>, b: &UniPoly<Rat>) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    match a.deg().cmp(&b.deg()) {
        Ordering::Equal => {}
        o => return o,
    }
    let n = a.coeffs().len();
    for k in (0..n).rev() {
        match a.coeff(k).cmp(&b.coeff(k)) {
            Ordering::Equal => {}
            o => return o,
        }
    }
    Ordering::Equal
}

fn reduce_mod(g: &UniPoly<BigInt>, p: u64) -> ZPoly {
    let coeffs: Vec<u64> = g
        .coeffs()
        .iter()
        .map(|c| {
            let r = c.mod_floor(&BigInt::from(p));
            u64::try_from(&r).unwrap()
        })
        .collect();
    ZPoly::new(p, &coeffs)
}

/// True when some small odd prime not dividing the leading coefficient
/// leaves the reduction squarefree (a proof of squarefreeness over Q).
fn has_squarefree_reduction(g: &UniPoly<BigInt>) -> bool {
    good_primes(g, 1, 60).len() == 1
}

/// Odd primes p with p not dividing lc(g) and g mod p squarefree.
fn good_primes(g: &UniPoly<BigInt>, want: usize, scan: usize) -> Vec<u64> {
    let lc = g.lead().expect("good primes of zero polynomial");
    let mut out = Vec::new();
    for (tried, p) in Primes::from(3).enumerate() {
        if tried >= scan || out.len() >= want {
            break;
        }
        if (lc % BigInt::from(p)).is_zero() {
            continue;
        }
        if reduce_mod(g, p).is_squarefree() {
            out.push(p);
        }
    }
    out
}

/// Degree multiset of the irreducible factors of g mod p, from
/// distinct-degree factorization alone (no splitting needed).
fn modular_degree_multiset(g: &ZPoly) -> Vec<usize> {
    let mut out = Vec::new();
    for (d, block) in g.monic().distinct_degree() {
        for _ in 0..block.degree() / d {
            out.push(d);
        }
    }
    out.sort_unstable();
    out
}

fn subset_sum_bits(degs: &[usize]) -> BigUint {
    let mut bits = BigUint::one();
    for &d in degs {
        bits = &bits | (&bits << d);
    }
    bits
}

/// Degrees d such that a factor of degree d over Q is consistent with the
/// factorization of g modulo each of several good primes. Always contains 0
/// and deg g; equality with {0, deg g} proves irreducibility. For an input
/// where no good prime is found the full range is returned (no information).
pub fn possible_factor_degrees(f: &UniPoly<Rat>, primes: usize) -> BTreeSet<usize> {
    let n = f.degree();
    let (g, _) = f.monic().primitive_int();
    let ps = good_primes(&g, primes, GOOD_PRIME_SCAN);
    if ps.is_empty() {
        return (0..=n).collect();
    }
    let mut bits: Option<BigUint> = None;
    for p in ps {
        let degs = modular_degree_multiset(&reduce_mod(&g, p));
        let b = subset_sum_bits(&degs);
        bits = Some(match bits {
            None => b,
            Some(prev) => prev & b,
        });
    }
    let bits = bits.unwrap();
    (0..=n).filter(|&d| bits.bit(d as u64)).collect()
}

/// Irreducibility over Q. Fast path is the degree-set certificate; the
/// slow path is a full factorization.
pub fn is_irreducible_over_q(f: &UniPoly<Rat>) -> bool {
    match f.deg() {
        None | Some(0) => return false,
        Some(1) => return true,
        _ => {}
    }
    let n = f.degree();
    let fm = f.monic();
    let (g, _) = fm.primitive_int();
    if !has_squarefree_reduction(&g) && fm.gcd(&fm.derivative()).degree() > 0 {
        return false;
    }
    let degs = possible_factor_degrees(f, DEGREE_SET_PRIMES);
    if degs.len() == 2 {
        debug_assert!(degs.contains(&0) && degs.contains(&n));
        return true;
    }
    let fact = factor_over_q(f, 0x1dea);
    fact.cofactor.is_none() && fact.factor_count() == 1
}

/// b^(n-1) g(x/b): the monic integer polynomial whose factorization mirrors
/// that of g (roots scale by b).
fn monicize(g: &UniPoly<BigInt>) -> (UniPoly<BigInt>, BigInt) {
    let b = g.lead().unwrap().clone();
    if b.is_one() {
        return (g.clone(), b);
    }
    let n = g.degree();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut pw = BigInt::one();
    for i in (0..n).rev() {
        coeffs[i] = g.coeff(i) * &pw;
        pw *= &b;
    }
    (UniPoly::from_coeffs(coeffs), b)
}

/// Inverse of `monicize` on a monic factor: h(b x), made monic over Q.
fn unscale(h: &UniPoly<BigInt>, b: &BigInt) -> UniPoly<Rat> {
    if b.is_one() {
        return h.to_rat();
    }
    let mut pw = BigInt::one();
    let coeffs: Vec<BigInt> = h
        .coeffs()
        .iter()
        .map(|c| {
            let v = c * &pw;
            pw *= b;
            v
        })
        .collect();
    UniPoly::from_coeffs(coeffs).to_rat().monic()
}

/// Landau-Mignotte: any factor over Z of g with degree at most m has all
/// coefficients bounded by binom(m, m/2) * ||g||_2 (g monic).
fn mignotte_bound(g: &UniPoly<BigInt>, m: usize) -> BigInt {
    let mut binom = BigInt::one();
    for k in 0..m / 2 {
        binom = binom * BigInt::from(m - k) / BigInt::from(k + 1);
    }
    let norm2: BigInt = g.coeffs().iter().map(|c| c * c).sum();
    binom * (norm2.sqrt() + 1)
}

struct Combos {
    idx: Vec<usize>,
    n: usize,
    fresh: bool,
}

impl Combos {
    fn new(n: usize, c: usize) -> Self {
        Combos { idx: (0..c).collect(), n, fresh: true }
    }

    fn next(&mut self) -> Option<&[usize]> {
        let c = self.idx.len();
        if c > self.n {
            return None;
        }
        if self.fresh {
            self.fresh = false;
            return Some(&self.idx);
        }
        // Advance to the next c-subset of {0..n} in lexicographic order.
        let mut i = c;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if self.idx[i] < self.n - (c - i) {
                self.idx[i] += 1;
                for j in i + 1..c {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                return Some(&self.idx);
            }
        }
    }
}

struct PoolEntry {
    lifted: UniPoly<BigInt>,
    deg: usize,
    constant: BigInt,
}

/// Factor a monic squarefree integer polynomial. Returns the monic
/// irreducible integer factors found and, if the degree cap or budget
/// stopped the search, the monic cofactor with its status.
fn factor_monic_int(
    gm: &UniPoly<BigInt>,
    bound: Option<usize>,
    seed: u64,
) -> (Vec<UniPoly<BigInt>>, Option<(UniPoly<BigInt>, CofactorStatus)>) {
    let n = gm.degree();
    if n == 1 {
        return (vec![gm.clone()], None);
    }
    if gm.coeff(0).is_zero() {
        // x divides; squarefreeness means exactly once.
        let shifted = UniPoly::from_coeffs(gm.coeffs()[1..].to_vec());
        let x = UniPoly::from_coeffs(vec![BigInt::zero(), BigInt::one()]);
        if shifted.degree() == 0 {
            return (vec![x], None);
        }
        let (mut fs, cof) = factor_monic_int(&shifted, bound, seed);
        fs.push(x);
        return (fs, cof);
    }

    let ps = good_primes(gm, DEGREE_SET_PRIMES, GOOD_PRIME_SCAN);
    assert!(!ps.is_empty(), "squarefree polynomial with no good prime below the scan limit");
    let mut bits: Option<BigUint> = None;
    let mut base: Option<(u64, Vec<usize>)> = None;
    for &p in &ps {
        let degs = modular_degree_multiset(&reduce_mod(gm, p));
        let better = match &base {
            None => true,
            Some((_, prev)) => degs.len() < prev.len(),
        };
        if better {
            base = Some((p, degs.clone()));
        }
        let b = subset_sum_bits(&degs);
        bits = Some(match bits {
            None => b,
            Some(prev) => prev & b,
        });
    }
    let bits = bits.unwrap();
    let degree_ok = |d: usize| bits.bit(d as u64);
    if (1..n).all(|d| !degree_ok(d)) {
        return (vec![gm.clone()], None);
    }

    let (p, _) = base.unwrap();
    let (lead, parts) = reduce_mod(gm, p).factor_squarefree(seed ^ 0x5eed_f00d);
    debug_assert_eq!(lead, 1);
    let allowed_cap = bound.map(|b| b.min(n - 1)).unwrap_or(n / 2).max(1);
    let bnd = mignotte_bound(gm, allowed_cap);
    let need = BigInt::from(2) * &bnd + 1;
    let lifted = hensel::lift_factorization(gm, &parts, p, &need);
    let modulus = lifted.modulus;

    let mut pool: Vec<PoolEntry> = lifted
        .factors
        .into_iter()
        .map(|f| {
            let deg = f.degree();
            let constant = f.coeff(0);
            PoolEntry { lifted: f, deg, constant }
        })
        .collect();

    let mut found: Vec<UniPoly<BigInt>> = Vec::new();
    let mut current = gm.clone();
    let mut budget = RECOMBINATION_BUDGET;
    let mut card = 1usize;
    let mut exhausted = false;

    'outer: while card <= pool.len() {
        let cap = match bound {
            Some(b) => b.min(n - 1),
            None => current.degree() / 2,
        };
        let mut combos = Combos::new(pool.len(), card);
        let mut hit: Option<(Vec<usize>, UniPoly<BigInt>)> = None;
        while let Some(subset) = combos.next() {
            let dsum: usize = subset.iter().map(|&i| pool[i].deg).sum();
            if dsum == 0 || dsum > cap || !degree_ok(dsum) {
                continue;
            }
            if budget == 0 {
                exhausted = true;
                break 'outer;
            }
            budget -= 1;
            let mut cprod = BigInt::one();
            for &i in subset {
                cprod = (cprod * &pool[i].constant).mod_floor(&modulus);
            }
            let cprod = hensel::symmetric_scalar(&cprod, &modulus);
            if cprod.is_zero() || !(current.coeff(0) % &cprod).is_zero() {
                continue;
            }
            let mut prod = UniPoly::one(&BigInt::zero());
            for &i in subset {
                prod = prod.mul(&pool[i].lifted);
                prod = UniPoly::from_coeffs(
                    prod.coeffs().iter().map(|c| c.mod_floor(&modulus)).collect(),
                );
            }
            let cand = hensel::symmetric(&prod, &modulus);
            if cand.max_coeff_abs() > bnd {
                continue;
            }
            if let Some(q) = current.try_div_int(&cand) {
                current = q;
                hit = Some((subset.to_vec(), cand));
                break;
            }
        }
        match hit {
            Some((subset, cand)) => {
                let mut keep = Vec::with_capacity(pool.len() - subset.len());
                for (i, entry) in pool.into_iter().enumerate() {
                    if !subset.contains(&i) {
                        keep.push(entry);
                    }
                }
                pool = keep;
                found.push(cand);
                // Stay at the same cardinality; smaller subsets of the
                // remaining pool were already covered at earlier rounds.
            }
            None => card += 1,
        }
    }

    if current.degree() == 0 {
        debug_assert!(current.is_monic());
        return (found, None);
    }
    let remaining_cap = match bound {
        Some(b) => b.min(n - 1),
        None => usize::MAX,
    };
    if !exhausted && remaining_cap >= current.degree() / 2 {
        // Every possible proper factor of the leftover was tried.
        found.push(current);
        return (found, None);
    }
    let status = cofactor_status(&current);
    (found, Some((current, status)))
}

fn cofactor_status(c: &UniPoly<BigInt>) -> CofactorStatus {
    let degs = possible_factor_degrees(&c.to_rat(), DEGREE_SET_PRIMES);
    let proper: Vec<usize> = degs.iter().copied().filter(|&d| d > 0 && d < c.degree()).collect();
    if proper.is_empty() {
        CofactorStatus::CertifiedIrreducible
    } else {
        CofactorStatus::Unresolved { possible_degrees: proper }
    }
}

/// Factor a monic squarefree rational polynomial; returns monic rational
/// irreducible factors plus an optional cofactor.
fn factor_squarefree_monic(
    g: &UniPoly<Rat>,
    bound: Option<usize>,
    seed: u64,
) -> (Vec<UniPoly<Rat>>, Option<(UniPoly<Rat>, CofactorStatus)>) {
    debug_assert!(g.is_monic());
    if g.degree() == 1 {
        return (vec![g.clone()], None);
    }
    let (g_int, _) = g.primitive_int();
    let (gm, b) = monicize(&g_int);
    let (int_factors, leftover) = factor_monic_int(&gm, bound, seed);
    let factors = int_factors.iter().map(|h| unscale(h, &b)).collect();
    let cof = leftover.map(|(c, status)| (unscale(&c, &b), status));
    (factors, cof)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> UniPoly<Rat> {
        UniPoly::from_i64(c)
    }

    #[test]
    fn small_products_come_back_exactly() {
        // (x^2+1)(x^2-2)(x-3) scaled by 6.
        let f = poly(&[1, 0, 1])
            .mul(&poly(&[-2, 0, 1]))
            .mul(&poly(&[-3, 1]))
            .mul_scalar(&Rat::from_int(6));
        let fact = factor_over_q(&f, 1);
        assert!(fact.is_complete());
        assert_eq!(fact.degree_pattern(), vec![1, 2, 2]);
        assert_eq!(fact.unit, Rat::from_int(6));
        assert_eq!(fact.product(), f);
    }

    #[test]
    fn cyclotomic_splitting_structure() {
        // x^12 - 1 = prod of Phi_d over d | 12: degrees 1,1,2,2,2,4.
        let mut c = vec![0i64; 13];
        c[0] = -1;
        c[12] = 1;
        let fact = factor_over_q(&poly(&c), 7);
        assert!(fact.is_complete());
        assert_eq!(fact.degree_pattern(), vec![1, 1, 2, 2, 2, 4]);
        assert_eq!(fact.product(), poly(&c));
    }

    #[test]
    fn repeated_factors_get_multiplicities() {
        // (x+1)^2 (x^2+x+1)^3
        let f = poly(&[1, 1]).pow(2).mul(&poly(&[1, 1, 1]).pow(3));
        let fact = factor_over_q(&f, 2);
        assert!(fact.is_complete());
        let mults: Vec<(usize, u32)> =
            fact.factors.iter().map(|(g, e)| (g.degree(), *e)).collect();
        assert_eq!(mults, vec![(1, 2), (2, 3)]);
        assert_eq!(fact.product(), f);
    }

    #[test]
    fn swinnerton_dyer_needs_recombination() {
        // Minimal polynomial of sqrt2 + sqrt3: x^4 - 10x^2 + 1, irreducible
        // over Q but split into quadratics mod every prime. The degree-set
        // certificate alone cannot settle it, so this exercises the full
        // lift-and-recombine path.
        let f = poly(&[1, 0, -10, 0, 1]);
        let degs = possible_factor_degrees(&f, DEGREE_SET_PRIMES);
        assert!(degs.contains(&2), "degree sets alone should not settle this one");
        let fact = factor_over_q(&f, 3);
        assert!(fact.is_complete());
        assert_eq!(fact.degree_pattern(), vec![4]);
        assert!(is_irreducible_over_q(&f));
    }

    #[test]
    fn non_monic_non_primitive_inputs() {
        // 15/7 (2x+1)(3x-5) has unit 90/7 once factors are monic.
        let f = poly(&[1, 2]).mul(&poly(&[-5, 3])).mul_scalar(&Rat::new(15, 7));
        let fact = factor_over_q(&f, 5);
        assert!(fact.is_complete());
        assert_eq!(fact.degree_pattern(), vec![1, 1]);
        assert_eq!(fact.product(), f);
        for (g, _) in &fact.factors {
            assert!(g.is_monic());
        }
    }

    #[test]
    fn bounded_mode_reports_certified_cofactor() {
        // (x-2)(x^4+x^3+x^2+x+1) with bound 1: the quartic remains and its
        // irreducibility is certified by degree sets.
        let phi5 = poly(&[1, 1, 1, 1, 1]);
        let f = poly(&[-2, 1]).mul(&phi5);
        let fact = factor_over_q_bounded(&f, 1, 11);
        assert_eq!(fact.degree_pattern(), vec![1]);
        assert_eq!(fact.product(), f);
        let (c, status) = fact.cofactor.expect("quartic cofactor");
        assert_eq!(c, phi5);
        assert_eq!(status, CofactorStatus::CertifiedIrreducible);
    }

    #[test]
    fn bounded_mode_unresolved_when_degrees_survive(){
        // Product of the two Swinnerton-Dyer-style quartics for {2,3} and
        // {2,5}: bound 2 finds nothing and mod-p degree sets cannot rule out
        // quartic-times-quartic splitting into smaller pieces.
        let f = poly(&[1, 0, -10, 0, 1]).mul(&poly(&[9, 0, -14, 0, 1]));
        let fact = factor_over_q_bounded(&f, 2, 13);
        assert!(fact.degree_pattern().is_empty());
        let (c, status) = fact.cofactor.expect("everything unsplit");
        assert_eq!(c.degree(), 8);
        match status {
            CofactorStatus::Unresolved { possible_degrees } => {
                assert!(possible_degrees.contains(&4));
            }
            CofactorStatus::CertifiedIrreducible => panic!("octic is reducible"),
        }
    }

    #[test]
    fn irreducibility_of_weil_style_polynomials() {
        assert!(is_irreducible_over_q(&poly(&[1, 3, -3, -4, 1, 1])));
        assert!(is_irreducible_over_q(&poly(&[-1, -2, 1, 1])));
        assert!(!is_irreducible_over_q(&poly(&[1, 2, 1])));
        assert!(!is_irreducible_over_q(&poly(&[2])));
        assert!(is_irreducible_over_q(&poly(&[5, 10, 1])));
    }

    #[test]
    fn linear_times_big_cyclotomic() {
        // x^23 - 1: degrees 1 and 22.
        let mut c = vec![0i64; 24];
        c[0] = -1;
        c[23] = 1;
        let fact = factor_over_q(&poly(&c), 17);
        assert!(fact.is_complete());
        assert_eq!(fact.degree_pattern(), vec![1, 22]);
    }

    #[test]
    fn zero_constant_term_strips_cleanly() {
        // x^3 (x^2 + 3) -> x with multiplicity 3 requires the squarefree
        // machinery plus the x-stripping path.
        let f = poly(&[0, 0, 0, 3, 0, 1]);
        let fact = factor_over_q(&f, 23);
        assert!(fact.is_complete());
        assert_eq!(fact.degree_pattern(), vec![1, 1, 1, 2]);
        assert_eq!(fact.product(), f);
    }
}
