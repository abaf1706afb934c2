//! Fast univariate polynomials over F_p for word-sized primes.
//!
//! Coefficients live in `Vec<u64>` with p < 2^31, so schoolbook products fit
//! comfortably in u128 accumulators. This module is the inner loop of
//! rational polynomial factorization (distinct-degree and equal-degree
//! splitting happen here before Hensel lifting) and of the modular
//! squarefreeness and smallest-factor-degree probes on division polynomials,
//! whose degrees reach a few thousand.
//!
//! Equal-degree splitting follows Cantor and Zassenhaus: for odd p, a random
//! t gives gcd(f, t^((p^d-1)/2) - 1) a nontrivial factor with probability
//! about 1/2. Randomness is drawn from a stream cipher seeded by the caller's
//! seed together with p and a hash of the operand, so runs are reproducible.

use crate::arith::{invmod, is_prime_u64, mulmod};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha20Rng;

/// A polynomial over F_p, trimmed, carrying its modulus.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZPoly {
    p: u64,
    coeffs: Vec<u64>,
}

const P_LIMIT: u64 = 1 << 31;

impl ZPoly {
    /// Build from ascending coefficients, reducing mod p.
    pub fn new(p: u64, coeffs: &[u64]) -> Self {
        assert!(p >= 2 && p < P_LIMIT && is_prime_u64(p), "modulus must be a prime below 2^31");
        let mut z = ZPoly { p, coeffs: coeffs.iter().map(|&c| c % p).collect() };
        z.trim();
        z
    }

    pub fn from_signed(p: u64, coeffs: &[i64]) -> Self {
        assert!(p >= 2 && p < P_LIMIT && is_prime_u64(p));
        let m = p as i64;
        let mut z = ZPoly {
            p,
            coeffs: coeffs.iter().map(|&c| (c.rem_euclid(m)) as u64).collect(),
        };
        z.trim();
        z
    }

    pub fn zero(p: u64) -> Self {
        Self::new(p, &[])
    }

    pub fn one(p: u64) -> Self {
        Self::new(p, &[1])
    }

    pub fn x(p: u64) -> Self {
        Self::new(p, &[0, 1])
    }

    pub fn monomial(p: u64, c: u64, k: usize) -> Self {
        let mut coeffs = vec![0u64; k + 1];
        coeffs[k] = c;
        Self::new(p, &coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> u64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn degree(&self) -> usize {
        self.deg().expect("degree of zero polynomial")
    }

    pub fn lead(&self) -> u64 {
        *self.coeffs.last().expect("lead of zero polynomial")
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    fn check(&self, rhs: &Self) {
        debug_assert_eq!(self.p, rhs.p, "mixed moduli");
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.check(rhs);
        let p = self.p;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeff(i);
            let b = rhs.coeff(i);
            let mut s = a + b;
            if s >= p {
                s -= p;
            }
            coeffs.push(s);
        }
        let mut z = ZPoly { p, coeffs };
        z.trim();
        z
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.check(rhs);
        let p = self.p;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeff(i);
            let b = rhs.coeff(i);
            coeffs.push(if a >= b { a - b } else { a + p - b });
        }
        let mut z = ZPoly { p, coeffs };
        z.trim();
        z
    }

    pub fn neg(&self) -> Self {
        let p = self.p;
        ZPoly {
            p,
            coeffs: self.coeffs.iter().map(|&c| if c == 0 { 0 } else { p - c }).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.check(rhs);
        let p = self.p;
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(p);
        }
        let n = self.coeffs.len();
        let m = rhs.coeffs.len();
        let mut out = vec![0u64; n + m - 1];
        // Accumulate in u128: terms are < 2^62 and fewer than 2^13 of them
        // in practice, far from overflow.
        for k in 0..out.len() {
            let lo = k.saturating_sub(m - 1);
            let hi = k.min(n - 1);
            let mut acc: u128 = 0;
            for i in lo..=hi {
                acc += (self.coeffs[i] as u128) * (rhs.coeffs[k - i] as u128);
            }
            out[k] = (acc % p as u128) as u64;
        }
        let mut z = ZPoly { p, coeffs: out };
        z.trim();
        z
    }

    pub fn mul_scalar(&self, s: u64) -> Self {
        let p = self.p;
        let s = s % p;
        if s == 0 {
            return Self::zero(p);
        }
        ZPoly {
            p,
            coeffs: self.coeffs.iter().map(|&c| mulmod(c, s, p)).collect(),
        }
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        self.mul_scalar(invmod(self.lead(), self.p))
    }

    pub fn divrem(&self, rhs: &Self) -> (Self, Self) {
        self.check(rhs);
        assert!(!rhs.is_zero(), "division by zero polynomial");
        let p = self.p;
        if self.is_zero() || self.degree() < rhs.degree() {
            return (Self::zero(p), self.clone());
        }
        let dn = self.degree();
        let dd = rhs.degree();
        let linv = invmod(rhs.lead(), p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; dn - dd + 1];
        for k in (0..=dn - dd).rev() {
            let c = rem[k + dd];
            if c == 0 {
                continue;
            }
            let q = mulmod(c, linv, p);
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                let t = mulmod(q, b, p);
                let r = &mut rem[k + j];
                *r = if *r >= t { *r - t } else { *r + p - t };
            }
            quot[k] = q;
        }
        let mut qp = ZPoly { p, coeffs: quot };
        qp.trim();
        let mut rp = ZPoly { p, coeffs: rem };
        rp.trim();
        (qp, rp)
    }

    pub fn rem(&self, rhs: &Self) -> Self {
        self.divrem(rhs).1
    }

    pub fn div_exact(&self, rhs: &Self) -> Self {
        let (q, r) = self.divrem(rhs);
        assert!(r.is_zero(), "division was not exact");
        q
    }

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

    /// Extended gcd: (g, s, t) with g monic and s*self + t*rhs = g.
    pub fn ext_gcd(&self, rhs: &Self) -> (Self, Self, Self) {
        let p = self.p;
        let mut r0 = self.clone();
        let mut r1 = rhs.clone();
        let mut s0 = Self::one(p);
        let mut s1 = Self::zero(p);
        let mut t0 = Self::zero(p);
        let mut t1 = Self::one(p);
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
        if !r0.is_zero() && !r0.is_monic() {
            let inv = invmod(r0.lead(), p);
            r0 = r0.mul_scalar(inv);
            s0 = s0.mul_scalar(inv);
            t0 = t0.mul_scalar(inv);
        }
        (r0, s0, t0)
    }

    pub fn derivative(&self) -> Self {
        let p = self.p;
        if self.coeffs.len() <= 1 {
            return Self::zero(p);
        }
        let coeffs: Vec<u64> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mulmod((i as u64) % p, c, p))
            .collect();
        let mut z = ZPoly { p, coeffs };
        z.trim();
        z
    }

    pub fn eval(&self, x: u64) -> u64 {
        let p = self.p;
        let x = x % p;
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = (mulmod(acc, x, p) + c) % p;
        }
        acc
    }

    /// True when gcd(f, f') = 1; zero polynomials and constants count as
    /// squarefree here.
    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() || self.degree() == 0 {
            return true;
        }
        let d = self.derivative();
        if d.is_zero() {
            // A p-th power, certainly not squarefree for positive degree.
            return false;
        }
        self.gcd(&d).degree() == 0
    }

    /// self^e mod m by square-and-multiply.
    pub fn powmod_poly(&self, e: u64, m: &Self) -> Self {
        let mut acc = Self::one(self.p);
        let mut base = self.rem(m);
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).rem(m);
            }
        }
        acc
    }

    /// self^e mod m for exponents beyond u64.
    pub fn powmod_poly_big(&self, e: &num_bigint::BigUint, m: &Self) -> Self {
        let mut acc = Self::one(self.p);
        let base = self.rem(m);
        for i in (0..e.bits()).rev() {
            acc = acc.mul(&acc).rem(m);
            if e.bit(i) {
                acc = acc.mul(&base).rem(m);
            }
        }
        acc
    }

    /// Roots in F_p with multiplicity forgotten.
    ///
    /// Uses gcd with x^p - x, so the input need not be squarefree; the
    /// result is sorted.
    pub fn roots(&self, seed: u64) -> Vec<u64> {
        assert!(!self.is_zero(), "roots of zero polynomial");
        let p = self.p;
        if self.degree() == 0 {
            return Vec::new();
        }
        let xp = Self::x(p).powmod_poly(p, self);
        let lin = xp.sub(&Self::x(p).rem(self));
        let mut g = self.gcd(&lin);
        // Degree-1 moduli make x^p mod f constant; handle directly.
        if self.degree() == 1 {
            let a = self.coeff(1);
            let b = self.coeff(0);
            return vec![mulmod(if b == 0 { 0 } else { p - b }, invmod(a, p), p)];
        }
        if g.is_zero() || g.degree() == 0 {
            return Vec::new();
        }
        g = g.monic();
        let mut out = Vec::new();
        split_to_roots(&g, &mut out, &mut rng_for(seed, p, &g));
        out.sort_unstable();
        out
    }

    /// Smallest degree of an irreducible factor, probing degrees 1..=bound
    /// by distinct-degree steps; `None` when every factor has larger degree.
    /// The input must be squarefree.
    pub fn min_factor_degree(&self, bound: usize) -> Option<usize> {
        assert!(self.is_squarefree(), "distinct-degree probe needs squarefree input");
        let f = self.monic();
        if f.degree() == 0 {
            return None;
        }
        let p = self.p;
        let mut h = Self::x(p).powmod_poly(p, &f);
        let x = Self::x(p).rem(&f);
        for d in 1..=bound.min(f.degree()) {
            let g = f.gcd(&h.sub(&x));
            if g.degree() > 0 {
                return Some(d);
            }
            if d < bound {
                h = h.powmod_poly(p, &f);
            }
        }
        None
    }

    /// Distinct-degree decomposition of a squarefree monic polynomial:
    /// returns (d, product of all irreducible factors of degree d) with
    /// ascending d, products of positive degree only.
    pub fn distinct_degree(&self) -> Vec<(usize, ZPoly)> {
        assert!(self.is_monic(), "distinct-degree needs monic input");
        assert!(self.is_squarefree(), "distinct-degree needs squarefree input");
        let p = self.p;
        let mut f = self.clone();
        let mut out = Vec::new();
        if f.degree() == 0 {
            return out;
        }
        let mut h = Self::x(p).powmod_poly(p, &f);
        let mut d = 0usize;
        while f.degree() > 0 {
            d += 1;
            if f.degree() < 2 * d {
                // What remains is a single irreducible factor.
                out.push((f.degree(), f.clone()));
                break;
            }
            let x = Self::x(p).rem(&f);
            let g = f.gcd(&h.sub(&x));
            if g.degree() > 0 {
                f = f.div_exact(&g);
                out.push((d, g));
                h = h.rem(&f);
            }
            if f.degree() > 0 {
                h = h.powmod_poly(p, &f);
            }
        }
        out
    }

    /// Split a product of distinct irreducible factors, all of degree d,
    /// into those factors (odd p only). Deterministic given the seed.
    pub fn equal_degree_split(&self, d: usize, seed: u64) -> Vec<ZPoly> {
        assert!(self.p > 2, "equal-degree splitting implemented for odd p");
        assert!(self.is_monic());
        let r = self.degree() / d;
        assert_eq!(self.degree(), r * d, "degree must be a multiple of d");
        if r == 1 {
            return vec![self.clone()];
        }
        let mut out = Vec::with_capacity(r);
        let mut rng = rng_for(seed, self.p, self);
        edf_recurse(self, d, &mut out, &mut rng);
        out.sort_by(|a, b| a.coeffs.cmp(&b.coeffs));
        out
    }

    /// Full factorization of a squarefree polynomial into monic irreducibles
    /// plus the unit leading coefficient; factors sorted. Odd p only.
    pub fn factor_squarefree(&self, seed: u64) -> (u64, Vec<ZPoly>) {
        assert!(!self.is_zero());
        let lead = self.lead();
        let f = self.monic();
        if f.degree() == 0 {
            return (lead, Vec::new());
        }
        let mut factors = Vec::new();
        for (d, block) in f.distinct_degree() {
            factors.extend(block.equal_degree_split(d, seed));
        }
        factors.sort_by(|a, b| (a.degree(), &a.coeffs).cmp(&(b.degree(), &b.coeffs)));
        (lead, factors)
    }
}

fn rng_for(seed: u64, p: u64, f: &ZPoly) -> ChaCha20Rng {
    // FNV-1a over the coefficients keeps the stream tied to the operand.
    let mut h: u64 = 0xcbf29ce484222325;
    for &c in f.coeffs() {
        h ^= c;
        h = h.wrapping_mul(0x100000001b3);
    }
    let mut key = [0u8; 32];
    key[0..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&p.to_le_bytes());
    key[16..24].copy_from_slice(&h.to_le_bytes());
    key[24..32].copy_from_slice(&(f.coeffs().len() as u64).to_le_bytes());
    ChaCha20Rng::from_seed(key)
}

/// Cantor-Zassenhaus recursion on a monic squarefree product of
/// irreducibles of equal degree d.
fn edf_recurse(f: &ZPoly, d: usize, out: &mut Vec<ZPoly>, rng: &mut ChaCha20Rng) {
    if f.degree() == d {
        out.push(f.clone());
        return;
    }
    let p = f.modulus();
    // (p^d - 1)/2 exceeds u64 once d * log2(p) reaches 64, so keep the
    // exponent big.
    let e: num_bigint::BigUint = (num_bigint::BigUint::from(p).pow(d as u32) - 1u32) >> 1;
    loop {
        let t = random_poly_below(p, f.degree(), rng);
        if t.is_zero() || t.degree() == 0 {
            continue;
        }
        let g0 = f.gcd(&t);
        if g0.degree() > 0 && g0.degree() < f.degree() {
            edf_recurse(&g0, d, out, rng);
            edf_recurse(&f.div_exact(&g0), d, out, rng);
            return;
        }
        let s = t.powmod_poly_big(&e, f);
        let s1 = s.sub(&ZPoly::one(p));
        let g = f.gcd(&s1);
        if g.degree() > 0 && g.degree() < f.degree() {
            edf_recurse(&g, d, out, rng);
            edf_recurse(&f.div_exact(&g), d, out, rng);
            return;
        }
    }
}

fn random_poly_below(p: u64, deg_bound: usize, rng: &mut ChaCha20Rng) -> ZPoly {
    let len = deg_bound.max(2);
    let coeffs: Vec<u64> = (0..len).map(|_| rng.gen_range(0..p)).collect();
    ZPoly::new(p, &coeffs)
}

/// Split a monic product of distinct linear factors into its roots.
fn split_to_roots(g: &ZPoly, out: &mut Vec<u64>, rng: &mut ChaCha20Rng) {
    let p = g.modulus();
    if g.degree() == 1 {
        let b = g.coeff(0);
        out.push(if b == 0 { 0 } else { p - b });
        return;
    }
    if p == 2 {
        // Only candidates are 0 and 1.
        for r in 0..2u64 {
            if g.eval(r) == 0 {
                out.push(r);
            }
        }
        return;
    }
    let e = (p - 1) / 2;
    loop {
        let a = rng.gen_range(0..p);
        // gcd(g, (x+a)^((p-1)/2) - 1) separates roots by quadratic character
        // of r + a.
        let shifted = ZPoly::new(p, &[a, 1]);
        if g.eval((p - a) % p) == 0 {
            // -a is a root; peel it off directly to keep the split moving.
            let rest = g.div_exact(&shifted);
            out.push((p - a) % p);
            if rest.degree() >= 1 {
                split_to_roots(&rest, out, rng);
            }
            return;
        }
        let s = shifted.powmod_poly(e, g);
        let s1 = s.sub(&ZPoly::one(p));
        let h = g.gcd(&s1);
        if h.degree() > 0 && h.degree() < g.degree() {
            split_to_roots(&h, out, rng);
            split_to_roots(&g.div_exact(&h), out, rng);
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let p = 101;
        let f = ZPoly::from_signed(p, &[-1, 0, 1]);
        let g = ZPoly::from_signed(p, &[1, 1]);
        assert_eq!(f.rem(&g), ZPoly::zero(p));
        assert_eq!(g.mul(&g), ZPoly::from_signed(p, &[1, 2, 1]));
        let (q, r) = f.divrem(&g);
        assert_eq!(q.mul(&g).add(&r), f);
        assert_eq!(f.eval(10), 99 % p);
        assert_eq!(f.derivative(), ZPoly::from_signed(p, &[0, 2]));
    }

    #[test]
    fn gcd_and_squarefree() {
        let p = 97;
        let f = ZPoly::from_signed(p, &[-1, 1]); // x - 1
        let g = f.mul(&f).mul(&ZPoly::from_signed(p, &[2, 1]));
        assert_eq!(g.gcd(&g.derivative()), f);
        assert!(!g.is_squarefree());
        assert!(ZPoly::from_signed(p, &[-2, 0, 1]).is_squarefree());
        // x^97 - x is a p-th power trap for naive checks: derivative -1.
        let mut xs = vec![0i64; 98];
        xs[1] = -1;
        xs[97] = 1;
        assert!(ZPoly::from_signed(p, &xs).is_squarefree());
    }

    #[test]
    fn roots_basic() {
        let p = 10007;
        // (x - 3)(x - 5)^2 (x^2 + 1); -1 is a QR mod 10007? Roots found
        // must at least contain 3 and 5; the quadratic part contributes
        // roots exactly when -1 is a square mod p.
        let f = ZPoly::from_signed(p, &[-3, 1])
            .mul(&ZPoly::from_signed(p, &[-5, 1]))
            .mul(&ZPoly::from_signed(p, &[-5, 1]))
            .mul(&ZPoly::from_signed(p, &[1, 0, 1]));
        let mut expected = vec![3u64, 5u64];
        let minus_one_sqrt: Vec<u64> = (1..p)
            .filter(|&t| mulmod(t, t, p) == p - 1)
            .collect();
        expected.extend(minus_one_sqrt);
        expected.sort_unstable();
        assert_eq!(f.roots(42), expected);
        assert_eq!(ZPoly::from_signed(p, &[1, 0, 0, 1]).roots(1), vec![p - 1]);
        assert!(ZPoly::one(p).roots(0).is_empty());
    }

    #[test]
    fn distinct_degree_blocks() {
        let p = 31;
        // x^2 + 1 irreducible mod 31 (31 = 3 mod 4); x^3 - 2: 2 is not a
        // cube mod 31? 31 = 1 mod 3 so cubes are a third of units; pick the
        // factorization from the algorithm and verify by multiplication.
        let f = ZPoly::from_signed(p, &[1, 0, 1])
            .mul(&ZPoly::from_signed(p, &[-1, 1]))
            .mul(&ZPoly::from_signed(p, &[-2, 1]))
            .monic();
        let dd = f.distinct_degree();
        let mut total = ZPoly::one(p);
        for (d, block) in &dd {
            assert_eq!(block.degree() % d, 0);
            total = total.mul(block);
        }
        assert_eq!(total, f);
        assert_eq!(dd[0].0, 1);
        assert_eq!(dd[0].1.degree(), 2);
    }

    #[test]
    fn equal_degree_splitting() {
        let p = 1009;
        // Collect the first three monic irreducible quadratics x^2 + x + c.
        let mut parts = Vec::new();
        for c in 0..p {
            let q = ZPoly::new(p, &[c, 1, 1]);
            if q.roots(9).is_empty() {
                parts.push(q);
                if parts.len() == 3 {
                    break;
                }
            }
        }
        assert_eq!(parts.len(), 3);
        let mut prod = ZPoly::one(p);
        for q in &parts {
            prod = prod.mul(q);
        }
        let split = prod.equal_degree_split(2, 1234);
        assert_eq!(split.len(), 3);
        let mut sorted: Vec<ZPoly> = parts.clone();
        sorted.sort_by(|a, b| a.coeffs().to_vec().cmp(&b.coeffs().to_vec()));
        assert_eq!(split, sorted);
        // Determinism.
        assert_eq!(prod.equal_degree_split(2, 1234), split);
    }

    #[test]
    fn factor_random_product() {
        let p = 499;
        let fs = [
            ZPoly::from_signed(p, &[1, 1]),
            ZPoly::from_signed(p, &[3, 1]),
            ZPoly::from_signed(p, &[1, 0, 0, 2]).monic(),
        ];
        let mut prod = ZPoly::one(p).mul_scalar(5);
        for f in &fs {
            prod = prod.mul(f);
        }
        let (lead, factors) = prod.factor_squarefree(7);
        assert_eq!(lead, 5);
        let mut rebuilt = ZPoly::one(p).mul_scalar(lead);
        for f in &factors {
            assert!(f.is_monic());
            rebuilt = rebuilt.mul(f);
        }
        assert_eq!(rebuilt, prod);
    }

    #[test]
    fn min_factor_degree_probe() {
        let p = 11;
        // x^2 + 1 mod 11: -1 nonresidue (11 = 3 mod 4), irreducible.
        let f = ZPoly::from_signed(p, &[1, 0, 1]);
        assert_eq!(f.min_factor_degree(1), None);
        assert_eq!(f.min_factor_degree(2), Some(2));
        let g = f.mul(&ZPoly::from_signed(p, &[-1, 1]));
        assert_eq!(g.min_factor_degree(3), Some(1));
        // Degree-4 irreducible: x^4 + x + 2 mod 11? Verify via the probe
        // finding nothing below 4 and the full split finding one factor.
        let h = ZPoly::from_signed(p, &[2, 1, 0, 0, 1]);
        match h.min_factor_degree(4) {
            Some(4) => {
                let (_, fs) = h.factor_squarefree(3);
                assert_eq!(fs.len(), 1);
            }
            Some(d) => {
                let (_, fs) = h.factor_squarefree(3);
                assert_eq!(fs.iter().map(|f| f.degree()).min(), Some(d));
            }
            None => panic!("degree-4 polynomial must have a factor of degree <= 4"),
        }
    }

    #[test]
    fn frobenius_power() {
        let p = 13;
        let m = ZPoly::from_signed(p, &[2, 0, 1]); // x^2 + 2
        let xp = ZPoly::x(p).powmod_poly(p, &m);
        // x^13 = x * (x^2)^6 = x * (-2)^6 = 64 x = 12 x mod (x^2+2, 13).
        assert_eq!(xp, ZPoly::from_signed(p, &[0, 64]));
    }
}
