//! Division polynomials and their primitive parts.
//!
//! On y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6, write
//! w = 2y + a1 x + a3, so that w^2 = B(x) = 4x^3 + b2 x^2 + 2 b4 x + b6.
//! The n-th division polynomial splits as psi_n = g_n * w^{e_n} with
//! e_n = 1 exactly when n is even, and g_n a polynomial in x alone:
//!
//!   g_0 = 0, g_1 = g_2 = 1,
//!   g_3 = 3x^4 + b2 x^3 + 3 b4 x^2 + 3 b6 x + b8,
//!   g_4 = 2x^6 + b2 x^5 + 5 b4 x^4 + 10 b6 x^3 + 10 b8 x^2
//!         + (b2 b8 - b4 b6) x + (b4 b8 - b6^2).
//!
//! Substituting the parity of each psi into the doubling identities gives
//! recurrences entirely in the g's. For n = 2m + 1:
//!
//!   m even:  g_n = B^2 g_{m+2} g_m^3 - g_{m-1} g_{m+1}^3
//!   m odd:   g_n = g_{m+2} g_m^3 - B^2 g_{m-1} g_{m+1}^3
//!
//! and for n = 2m, uniformly in the parity of m:
//!
//!   g_n = g_m (g_{m+2} g_{m-1}^2 - g_{m-2} g_{m+1}^2).
//!
//! The multiplication-by-n map reads x(nP) = phi_n(x) / psi_n(x)^2 with
//!
//!   phi_n = x g_n^2 - B g_{n+1} g_{n-1}      (n odd)
//!   phi_n = x B g_n^2 - g_{n+1} g_{n-1}      (n even)
//!
//! and psi_n^2 = g_n^2 B^{e_n} is again a polynomial in x of degree
//! n^2 - 1, while phi_n is monic of degree n^2.
//!
//! `x_poly(n)` = g_n (n odd) or g_n B (n even) vanishes exactly at the
//! x-coordinates of the nonzero n-torsion, each once; `primitive_part(n)`
//! divides out the lower levels, leaving the x-coordinates of the points
//! of exact order n. All divisions are performed exactly and assert a
//! zero remainder.
//!
//! A parallel fixed-prime variant of the g recurrence runs over F_p for
//! word-sized p, cheap enough to probe factor degree lower bounds of
//! division polynomials far too large to expand over Q.

use crate::elliptic::{Curve, Point};
use crate::poly::{Coeff, FieldCoeff, UniPoly};
use crate::rational::Rat;
use crate::residue::rat_mod_p;
use crate::zpoly::ZPoly;
use std::collections::BTreeMap;

/// Cache of division polynomial data for one curve.
pub struct DivPolys<C: FieldCoeff> {
    b: UniPoly<C>,
    g: Vec<UniPoly<C>>,
    prim: BTreeMap<usize, UniPoly<C>>,
}

fn small<C: Coeff>(ctx: &C, n: i64) -> C {
    let mag = ctx.one_like().mul_usize(n.unsigned_abs() as usize);
    if n < 0 {
        mag.neg_c()
    } else {
        mag
    }
}

impl<C: FieldCoeff> DivPolys<C> {
    pub fn new(e: &Curve<C>) -> Self {
        let ctx = e.b2().zero_like();
        let b2 = e.b2().clone();
        let b4 = e.b4().clone();
        let b6 = e.b6().clone();
        let b8 = e.b8().clone();
        let b = e.two_torsion_cubic();
        let one = UniPoly::one(&ctx);
        let g3 = UniPoly::from_coeffs(vec![
            b8.clone(),
            small(&ctx, 3).mul_c(&b6),
            small(&ctx, 3).mul_c(&b4),
            b2.clone(),
            small(&ctx, 3),
        ]);
        let g4 = UniPoly::from_coeffs(vec![
            b4.mul_c(&b8).sub_c(&b6.mul_c(&b6)),
            b2.mul_c(&b8).sub_c(&b4.mul_c(&b6)),
            small(&ctx, 10).mul_c(&b8),
            small(&ctx, 10).mul_c(&b6),
            small(&ctx, 5).mul_c(&b4),
            b2.clone(),
            small(&ctx, 2),
        ]);
        let g = vec![UniPoly::zero(&ctx), one.clone(), one, g3, g4];
        DivPolys { b, g, prim: BTreeMap::new() }
    }

    /// The completed square B(x) = 4x^3 + b2 x^2 + 2 b4 x + b6.
    pub fn b_poly(&self) -> &UniPoly<C> {
        &self.b
    }

    fn extend_to(&mut self, n: usize) {
        while self.g.len() <= n {
            let k = self.g.len();
            let gk = if k % 2 == 1 {
                let m = (k - 1) / 2;
                let cube = |p: &UniPoly<C>| p.mul(p).mul(p);
                let bb = self.b.mul(&self.b);
                let lhs = self.g[m + 2].mul(&cube(&self.g[m]));
                let rhs = self.g[m - 1].mul(&cube(&self.g[m + 1]));
                if m % 2 == 0 {
                    bb.mul(&lhs).sub(&rhs)
                } else {
                    lhs.sub(&bb.mul(&rhs))
                }
            } else {
                let m = k / 2;
                let sq = |p: &UniPoly<C>| p.mul(p);
                let inner = self.g[m + 2]
                    .mul(&sq(&self.g[m - 1]))
                    .sub(&self.g[m - 2].mul(&sq(&self.g[m + 1])));
                self.g[m].mul(&inner)
            };
            self.g.push(gk);
        }
    }

    /// The x-part g_n of psi_n.
    pub fn g(&mut self, n: usize) -> UniPoly<C> {
        self.extend_to(n);
        self.g[n].clone()
    }

    /// Vanishes exactly at the x-coordinates of nonzero n-torsion points.
    pub fn x_poly(&mut self, n: usize) -> UniPoly<C> {
        let g = self.g(n);
        if n % 2 == 0 {
            g.mul(&self.b)
        } else {
            g
        }
    }

    /// psi_n^2 as a polynomial in x, of degree n^2 - 1.
    pub fn psi_squared(&mut self, n: usize) -> UniPoly<C> {
        let g = self.g(n);
        let g2 = g.mul(&g);
        if n % 2 == 0 {
            g2.mul(&self.b)
        } else {
            g2
        }
    }

    /// The numerator phi_n of x(nP); monic of degree n^2.
    pub fn phi(&mut self, n: usize) -> UniPoly<C> {
        assert!(n >= 1);
        self.extend_to(n + 1);
        let ctx = self.b.coeff(0).zero_like();
        let x = UniPoly::x(&ctx);
        let g2 = self.g[n].mul(&self.g[n]);
        let cross = self.g[n + 1].mul(&self.g[n - 1]);
        if n % 2 == 1 {
            x.mul(&g2).sub(&self.b.mul(&cross))
        } else {
            x.mul(&self.b).mul(&g2).sub(&cross)
        }
    }

    /// Vanishes exactly at the x-coordinates of points of exact order n.
    pub fn primitive_part(&mut self, n: usize) -> UniPoly<C> {
        if let Some(p) = self.prim.get(&n) {
            return p.clone();
        }
        let ctx = self.b.coeff(0).zero_like();
        let result = if n == 1 {
            UniPoly::one(&ctx)
        } else {
            let mut quot = self.x_poly(n);
            for d in 1..n {
                if n % d == 0 {
                    let pd = self.primitive_part(d);
                    quot = quot.div_exact(&pd);
                }
            }
            quot
        };
        self.prim.insert(n, result.clone());
        result
    }
}

/// b-invariants of a rational curve reduced mod p, as [b2, b4, b6, b8].
pub fn reduce_b_invariants(e: &Curve<Rat>, p: u64) -> crate::Result<[u64; 4]> {
    Ok([
        rat_mod_p(e.b2(), p)?,
        rat_mod_p(e.b4(), p)?,
        rat_mod_p(e.b6(), p)?,
        rat_mod_p(e.b8(), p)?,
    ])
}

/// The x-part g_n of psi_n over F_p, from b-invariants mod p.
///
/// Same recurrences as the rational version, but over word-sized residues,
/// so g_n for n in the hundreds stays affordable.
pub fn division_poly_g_zp(p: u64, b: &[u64; 4], n: usize) -> ZPoly {
    let [b2, b4, b6, b8] = *b;
    let bp = ZPoly::new(p, &[b6, (2 * (b4 % p)) % p, b2, 4 % p]);
    let mut g: Vec<ZPoly> = vec![
        ZPoly::zero(p),
        ZPoly::one(p),
        ZPoly::one(p),
        ZPoly::new(p, &[b8, (3 * (b6 % p)) % p, (3 * (b4 % p)) % p, b2, 3 % p]),
        ZPoly::new(
            p,
            &[
                sub_mod(mul_mod(b4, b8, p), mul_mod(b6, b6, p), p),
                sub_mod(mul_mod(b2, b8, p), mul_mod(b4, b6, p), p),
                (10 * (b8 % p)) % p,
                (10 * (b6 % p)) % p,
                (5 * (b4 % p)) % p,
                b2,
                2 % p,
            ],
        ),
    ];
    while g.len() <= n {
        let k = g.len();
        let gk = if k % 2 == 1 {
            let m = (k - 1) / 2;
            let cube = |q: &ZPoly| q.mul(q).mul(q);
            let bb = bp.mul(&bp);
            let lhs = g[m + 2].mul(&cube(&g[m]));
            let rhs = g[m - 1].mul(&cube(&g[m + 1]));
            if m % 2 == 0 {
                bb.mul(&lhs).sub(&rhs)
            } else {
                lhs.sub(&bb.mul(&rhs))
            }
        } else {
            let m = k / 2;
            let sq = |q: &ZPoly| q.mul(q);
            let inner = g[m + 2].mul(&sq(&g[m - 1])).sub(&g[m - 2].mul(&sq(&g[m + 1])));
            g[m].mul(&inner)
        };
        g.push(gk);
    }
    g.swap_remove(n)
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    crate::arith::mulmod(a % p, b % p, p)
}

fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    (a % p + p - b % p) % p
}

/// x-coordinates of nonzero n-torsion over F_p as a ZPoly: g_n, times B
/// for even n.
pub fn division_x_poly_zp(p: u64, b: &[u64; 4], n: usize) -> ZPoly {
    let g = division_poly_g_zp(p, b, n);
    if n % 2 == 0 {
        let bp = ZPoly::new(p, &[b[2], (2 * (b[1] % p)) % p, b[0], 4 % p]);
        g.mul(&bp)
    } else {
        g
    }
}

/// All points of a curve over a word-sized prime field, by brute search.
pub fn all_points_mod_p(e: &Curve<crate::residue::FqEl>) -> Vec<Point<crate::residue::FqEl>> {
    let rf = e.b2().field().clone();
    let mut pts = vec![Point::Infinity];
    for x in rf.elements() {
        for y in rf.elements() {
            if e.is_on_curve(&x, &y) {
                pts.push(Point::Affine(x.clone(), y));
            }
        }
    }
    pts
}
