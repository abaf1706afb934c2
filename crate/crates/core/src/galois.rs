//! Certification of mod-l Galois image surjectivity, and of its failure.
//!
//! For a non-CM curve over Q and an odd prime l, surjectivity of the
//! mod-l representation follows from exhibiting Frobenius elements whose
//! characteristic polynomials leave no room for a proper subgroup. With
//! t = a_p and d = p (mod l), the witnesses are:
//!
//!   (i)   t != 0 and t^2 - 4d a nonzero nonsquare mod l
//!         (rules out Borel and the split Cartan normalizer);
//!   (ii)  t != 0 and t^2 - 4d a nonzero square mod l
//!         (rules out the nonsplit Cartan normalizer);
//!   (iii) u = t^2/d with u not in {0, 1, 2, 4} and u^2 - 3u + 1 != 0
//!         (rules out the exceptional projective images, whose element
//!         orders modulo scalars stay in {1, 2, 3, 4, 5}).
//!
//! The plain trace conditions t != 0 in (i) and (ii) are not decorative:
//! an element of trace zero lies in every Cartan normalizer's outer
//! coset, so a witness with t = 0 would exclude nothing. Determinant
//! surjectivity, the remaining hypothesis, is automatic for Galois images
//! over Q by the Weil pairing.
//!
//! The prime l = 3 needs its own route. Characteristic polynomials are
//! powerless there: the Sylow 2-subgroup of GL_2(F_3), the normalizer of
//! a nonsplit Cartan, already realizes all six (trace, det) pairs of the
//! full group, and any split pair of distinct eigenvalues sums to
//! 1 + 2 = 0, so condition (ii) is satisfied by no element at all. In
//! its place: witness (i) forces an element of order 8 (irreducible
//! characteristic polynomial with nonzero trace), and irreducibility of
//! the cubic resolvent of the 3-division quartic forces the image order
//! to be divisible by 3. Together with surjective determinant this pins
//! the image: its order is a multiple of 24, and the unique index-2
//! subgroup SL_2(F_3) has no element of order 8.
//!
//! The test suite verifies both criteria exhaustively against the
//! subgroup lattice of GL_2(F_3) and GL_2(F_5) (and GL_2(F_7) behind an
//! ignore flag for its runtime), including achievability on the full
//! group, and the order dictionary behind (iii) element by element for
//! every l up to 13.
//!
//! Failure of surjectivity is certified constructively: a rational
//! l-isogeny kernel (from the cyclic kernel machinery) places the image
//! in a Borel subgroup. For l = 2 the image is the Galois group of the
//! 2-division cubic, classified by irreducibility and the square class
//! of its discriminant. A prime with neither a surjectivity proof nor a
//! kernel certificate at the sampling bound is reported as nonsurjective
//! without certification.

use std::collections::BTreeMap;

use crate::elliptic::Curve;
use crate::isogeny::cyclic_kernel_polys;
use crate::poly::{Coeff, FieldCoeff};
use crate::rational::Rat;
use crate::residue::ResidueField;

/// What is known about one mod-l image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ImageVerdict {
    /// Witness primes for conditions (i), (ii), (iii). At l = 3 only the
    /// first entry is a prime; the other half of the certificate is the
    /// irreducible resolvent of the division quartic, not a prime.
    Surjective([u64; 3]),
    /// A constructive obstruction: a rational l-isogeny kernel
    /// polynomial (Borel image), a 2-division cubic that is reducible
    /// or abelian (l = 2), or a reducible 3-division resolvent placing
    /// the mod-3 image inside a Sylow 2-subgroup.
    NonsurjectiveCertified,
    /// No surjectivity witness below the bound and no obstruction found.
    NonsurjectiveUncertified,
}

impl ImageVerdict {
    pub fn is_surjective(&self) -> bool {
        matches!(self, ImageVerdict::Surjective(_))
    }
}

/// Traces of Frobenius (p, a_p) at odd good primes p <= bound, in order.
pub fn frobenius_traces(e: &Curve<Rat>, bound: u64) -> Vec<(u64, i64)> {
    let mut out = Vec::new();
    for p in crate::arith::Primes::new() {
        if p > bound {
            break;
        }
        if p == 2 {
            continue;
        }
        let rf = ResidueField::prime(p);
        if let Ok(ep) = e.reduce_at(&rf) {
            out.push((p, ep.trace_of_frobenius()));
        }
    }
    out
}

fn legendre(mut a: i64, l: u64) -> i8 {
    let li = l as i64;
    a %= li;
    if a < 0 {
        a += li;
    }
    if a == 0 {
        return 0;
    }
    let mut r: u64 = 1;
    let mut base = a as u64 % l;
    let mut exp = (l - 1) / 2;
    while exp > 0 {
        if exp & 1 == 1 {
            r = r * base % l;
        }
        base = base * base % l;
        exp >>= 1;
    }
    if r == 1 {
        1
    } else {
        -1
    }
}

fn inv_mod(a: u64, l: u64) -> u64 {
    // l prime, a nonzero mod l.
    let mut r: u64 = 1;
    let mut base = a % l;
    let mut exp = l - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            r = r * base % l;
        }
        base = base * base % l;
        exp >>= 1;
    }
    r
}

/// The three witness flags a single Frobenius trace sets at l.
fn witnesses(p: u64, ap: i64, l: u64) -> [bool; 3] {
    let li = l as i64;
    let t = ap.rem_euclid(li) as u64;
    let d = p % l;
    if d == 0 {
        return [false; 3];
    }
    let disc = (t * t % l + 4 * l - 4 * d % l) % l;
    let chi = legendre(disc as i64, l);
    let tz = t == 0;
    let wi = !tz && chi == -1;
    let wii = !tz && chi == 1;
    let u = t * t % l * inv_mod(d, l) % l;
    let wiii = !matches!(u, 0 | 1 | 2 | 4) && (u * u + 3 * l - 3 * u + 1) % l != 0;
    [wi, wii, wiii]
}

/// Galois type of the 2-division field, read off the 2-torsion cubic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwoDivisionType {
    /// Irreducible cubic, nonsquare discriminant: full image S3.
    S3,
    /// Irreducible cubic, square discriminant: cyclic cubic image.
    C3,
    /// Exactly one rational 2-torsion point.
    C2,
    /// Full rational 2-torsion.
    Trivial,
}

pub fn two_division_type(e: &Curve<Rat>, seed: u64) -> TwoDivisionType {
    let b = e.two_torsion_cubic();
    let fact = crate::factor::factor_over_q(&b, seed);
    assert!(fact.is_complete());
    let rational_roots: usize = fact
        .factors
        .iter()
        .filter(|(g, _)| g.degree() == 1)
        .count();
    match rational_roots {
        3 => TwoDivisionType::Trivial,
        1 => TwoDivisionType::C2,
        0 => {
            if b.discriminant().is_square() {
                TwoDivisionType::C3
            } else {
                TwoDivisionType::S3
            }
        }
        _ => unreachable!("a 2-torsion cubic cannot have exactly two rational roots"),
    }
}

/// The cubic resolvent of the 3-division quartic. Its roots are the
/// pair sums x1 x2 + x3 x4 of products of 3-torsion abscissas, so its
/// irreducibility over Q says exactly that the image order is divisible
/// by 3 (the quartic's Galois group is S4 or A4 rather than a 2-group).
pub fn three_division_resolvent(e: &Curve<Rat>) -> crate::poly::UniPoly<Rat> {
    let mut dp = crate::divpoly::DivPolys::new(e);
    let quartic = dp.g(3).clone();
    assert_eq!(quartic.degree(), 4);
    let lead = quartic.coeff(4);
    let p = quartic.coeff(3).div_c(&lead);
    let q = quartic.coeff(2).div_c(&lead);
    let r = quartic.coeff(1).div_c(&lead);
    let s = quartic.coeff(0).div_c(&lead);
    let four = Rat::from_int(4);
    let c0 = (p.mul_c(&p).mul_c(&s).add_c(&r.mul_c(&r)))
        .sub_c(&four.mul_c(&q).mul_c(&s))
        .neg_c();
    let c1 = p.mul_c(&r).sub_c(&four.mul_c(&s));
    let c2 = q.neg_c();
    let res = crate::poly::UniPoly::from_coeffs(vec![c0, c1, c2, Rat::from_int(1)]);
    assert!(
        !res.discriminant().is_zero(),
        "separable quartic, separable resolvent"
    );
    res
}

fn image_order_divisible_by_three(e: &Curve<Rat>, seed: u64) -> bool {
    let res = three_division_resolvent(e);
    let fact = crate::factor::factor_over_q(&res, seed);
    assert!(fact.is_complete());
    fact.factors.len() == 1 && fact.factors[0].0.degree() == 3
}

/// Verdicts for every prime l <= l_max, using Frobenius traces at good
/// primes up to trace_bound.
pub fn mod_l_images(
    e: &Curve<Rat>,
    l_max: u64,
    trace_bound: u64,
    seed: u64,
) -> BTreeMap<u64, ImageVerdict> {
    let mut verdicts: BTreeMap<u64, ImageVerdict> = BTreeMap::new();
    let ells: Vec<u64> = crate::arith::Primes::new()
        .take_while(|&l| l <= l_max)
        .collect();
    // l = 2 from the cubic.
    if ells.contains(&2) {
        let v = match two_division_type(e, seed) {
            TwoDivisionType::S3 => ImageVerdict::Surjective([0, 0, 0]),
            _ => ImageVerdict::NonsurjectiveCertified,
        };
        verdicts.insert(2, v);
    }
    let odd: Vec<u64> = ells.iter().copied().filter(|&l| l > 2).collect();
    // At l = 3 the trace witness (i) must be paired with the resolvent
    // certificate; (ii) and (iii) are unsatisfiable mod 3.
    let three_div_by_three = odd
        .contains(&3)
        .then(|| image_order_divisible_by_three(e, seed));
    let mut flags: BTreeMap<u64, [u64; 3]> = odd.iter().map(|&l| (l, [0u64; 3])).collect();
    let mut unresolved = odd.len();
    if three_div_by_three == Some(false) {
        // The mod-3 image lies in a Sylow 2-subgroup.
        verdicts.insert(3, ImageVerdict::NonsurjectiveCertified);
        unresolved -= 1;
    }
    for p in crate::arith::Primes::new() {
        if p > trace_bound || unresolved == 0 {
            break;
        }
        if p == 2 {
            continue;
        }
        let rf = ResidueField::prime(p);
        let ep = match e.reduce_at(&rf) {
            Ok(ep) => ep,
            Err(_) => continue,
        };
        let ap = ep.trace_of_frobenius();
        for &l in &odd {
            if verdicts.contains_key(&l) || p % l == 0 {
                continue;
            }
            let w = witnesses(p, ap, l);
            let f = flags.get_mut(&l).unwrap();
            for i in 0..3 {
                if w[i] && f[i] == 0 {
                    f[i] = p;
                }
            }
            let done = if l == 3 {
                f[0] != 0 && three_div_by_three == Some(true)
            } else {
                f[0] != 0 && f[1] != 0 && f[2] != 0
            };
            if done {
                verdicts.insert(l, ImageVerdict::Surjective(*f));
                unresolved -= 1;
            }
        }
    }
    for &l in &odd {
        if verdicts.contains_key(&l) {
            continue;
        }
        let kernels = cyclic_kernel_polys(e, l as usize, seed).unwrap_or_default();
        let v = if kernels.is_empty() {
            ImageVerdict::NonsurjectiveUncertified
        } else {
            ImageVerdict::NonsurjectiveCertified
        };
        verdicts.insert(l, v);
    }
    verdicts
}

/// The primes l <= l_max whose mod-l image is not all of GL_2(F_l).
pub fn nonsurjective_primes(e: &Curve<Rat>, l_max: u64, trace_bound: u64, seed: u64) -> Vec<u64> {
    mod_l_images(e, l_max, trace_bound, seed)
        .into_iter()
        .filter(|(_, v)| !v.is_surjective())
        .map(|(l, _)| l)
        .collect()
}

/// j-invariants of rational CM curves, with their CM discriminants.
pub fn cm_discriminant_for_j(j: &Rat) -> Option<i64> {
    const TABLE: [(i64, i64); 13] = [
        (-3, 0),
        (-4, 1728),
        (-7, -3375),
        (-8, 8000),
        (-11, -32768),
        (-12, 54000),
        (-16, 287496),
        (-19, -884736),
        (-27, -12288000),
        (-28, 16581375),
        (-43, -884736000),
        (-67, -147197952000),
        (-163, -262537412640768000),
    ];
    if !j.is_integer() {
        return None;
    }
    TABLE
        .iter()
        .find(|(_, jv)| *j == Rat::from_int(*jv))
        .map(|(d, _)| *d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projective_order_dictionary_behind_condition_three() {
        // For every l <= 13 and every g in GL_2(F_l), the projective
        // order of g relates to u = tr^2/det exactly as condition (iii)
        // assumes: u = 4 for orders 1 (and unipotents of order l), u = 0
        // for order 2, u = 1 for 3, u = 2 for 4, u^2 - 3u + 1 = 0 for 5,
        // u = 3 for 6. Hence (iii) forces projective order outside
        // {1, 2, 3, 4, 5}, which no exceptional image contains.
        for l in [3u64, 5, 7, 11, 13] {
            for g in gl2_elements(l) {
                let det = (g[0] * g[3] % l + l * l - g[1] * g[2] % l) % l;
                let tr = (g[0] + g[3]) % l;
                let u = tr * tr % l * inv_mod(det, l) % l;
                let ord = projective_order(&g, l);
                let expected_excluded = matches!(ord, 1 | 2 | 3 | 4 | 5);
                let excluded_by_u =
                    matches!(u, 0 | 1 | 2 | 4) || (u * u + 3 * l - 3 * u + 1) % l == 0;
                // (iii) may exclude more than the exceptional orders
                // (order l unipotents also have u = 4); it must never
                // exclude less.
                if expected_excluded {
                    assert!(excluded_by_u, "l={} g={:?} ord={} u={}", l, g, ord, u);
                }
            }
        }
    }

    fn gl2_elements(l: u64) -> Vec<[u64; 4]> {
        let mut out = Vec::new();
        for a in 0..l {
            for b in 0..l {
                for c in 0..l {
                    for d in 0..l {
                        if (a * d % l + l - b * c % l) % l != 0 {
                            out.push([a, b, c, d]);
                        }
                    }
                }
            }
        }
        out
    }

    fn mat_mul(x: &[u64; 4], y: &[u64; 4], l: u64) -> [u64; 4] {
        [
            (x[0] * y[0] + x[1] * y[2]) % l,
            (x[0] * y[1] + x[1] * y[3]) % l,
            (x[2] * y[0] + x[3] * y[2]) % l,
            (x[2] * y[1] + x[3] * y[3]) % l,
        ]
    }

    fn projective_order(g: &[u64; 4], l: u64) -> u64 {
        let id = [1, 0, 0, 1];
        let mut acc = *g;
        let mut k = 1;
        loop {
            // Scalar matrices are the projective identity.
            if acc[1] == 0 && acc[2] == 0 && acc[0] == acc[3] {
                return k;
            }
            acc = mat_mul(&acc, g, l);
            k += 1;
            assert!(k <= l * l * l, "order search runaway");
            let _ = id;
        }
    }

    struct Lattice {
        n: usize,
        mul: Vec<u16>,
        conj: Vec<u16>,
        dets: Vec<u64>,
        wit: Vec<[bool; 3]>,
        l: u64,
    }

    fn build_lattice(l: u64) -> Lattice {
        let els = gl2_elements(l);
        let n = els.len();
        let index: std::collections::HashMap<[u64; 4], u16> = els
            .iter()
            .enumerate()
            .map(|(i, g)| (*g, i as u16))
            .collect();
        let mut mul = vec![0u16; n * n];
        for i in 0..n {
            for j in 0..n {
                mul[i * n + j] = index[&mat_mul(&els[i], &els[j], l)];
            }
        }
        // conj[g * n + i] = g^-1 * e_i * g.
        let mut conj = vec![0u16; n * n];
        for gi in 0..n {
            let g = els[gi];
            let ginv = els
                .iter()
                .position(|h| mat_mul(&g, h, l) == [1, 0, 0, 1])
                .unwrap();
            for i in 0..n {
                let t = mat_mul(&els[ginv], &els[i], l);
                conj[gi * n + i] = index[&mat_mul(&t, &els[gi], l)];
            }
        }
        let dets: Vec<u64> = els
            .iter()
            .map(|g| (g[0] * g[3] % l + l * l - g[1] * g[2] % l) % l)
            .collect();
        let wit: Vec<[bool; 3]> = els
            .iter()
            .map(|g| {
                let det = (g[0] * g[3] % l + l * l - g[1] * g[2] % l) % l;
                let tr = (g[0] + g[3]) % l;
                let disc = (tr * tr % l + 4 * l - 4 * det % l) % l;
                let chi = legendre(disc as i64, l);
                let u = tr * tr % l * inv_mod(det, l) % l;
                [
                    tr != 0 && chi == -1,
                    tr != 0 && chi == 1,
                    !matches!(u, 0 | 1 | 2 | 4) && (u * u + 3 * l - 3 * u + 1) % l != 0,
                ]
            })
            .collect();
        Lattice { n, mul, conj, dets, wit, l }
    }

    type Bits = Vec<u64>;

    fn bit_set(b: &mut Bits, i: usize) {
        b[i / 64] |= 1 << (i % 64);
    }

    fn bit_get(b: &Bits, i: usize) -> bool {
        b[i / 64] >> (i % 64) & 1 == 1
    }

    /// Closure of a generating set; stops early (returning None) once the
    /// subgroup must be everything (size exceeding half the group).
    fn closure(lat: &Lattice, gens: &[u16]) -> Option<(Bits, Vec<u16>)> {
        let words = lat.n.div_ceil(64);
        let mut bits = vec![0u64; words];
        let mut list: Vec<u16> = Vec::new();
        // The identity is the i with e_i * e_0 = e_0.
        let mut identity = 0u16;
        for i in 0..lat.n {
            if lat.mul[i * lat.n] == 0 {
                identity = i as u16;
                break;
            }
        }
        bit_set(&mut bits, identity as usize);
        list.push(identity);
        let mut queue: Vec<u16> = gens.to_vec();
        for &g in gens {
            if !bit_get(&bits, g as usize) {
                bit_set(&mut bits, g as usize);
                list.push(g);
            }
        }
        while let Some(g) = queue.pop() {
            let mut i = 0;
            while i < list.len() {
                let h = list[i];
                for prod in [
                    lat.mul[g as usize * lat.n + h as usize],
                    lat.mul[h as usize * lat.n + g as usize],
                ] {
                    if !bit_get(&bits, prod as usize) {
                        bit_set(&mut bits, prod as usize);
                        list.push(prod);
                        queue.push(prod);
                        if list.len() > lat.n / 2 {
                            return None;
                        }
                    }
                }
                i += 1;
            }
        }
        Some((bits, list))
    }

    fn canonical(lat: &Lattice, list: &[u16]) -> Bits {
        let words = lat.n.div_ceil(64);
        let mut best: Option<Bits> = None;
        for g in 0..lat.n {
            let mut bits = vec![0u64; words];
            for &h in list {
                bit_set(&mut bits, lat.conj[g * lat.n + h as usize] as usize);
            }
            if best.as_ref().map_or(true, |b| bits < *b) {
                best = Some(bits);
            }
        }
        best.unwrap()
    }

    /// The subgroup-level criterion: at l = 3 an order-8 element
    /// (witness (i)) plus order divisible by 3; otherwise all three
    /// trace witnesses.
    fn criterion_satisfied(l: u64, order: usize, w: [bool; 3]) -> bool {
        if l == 3 {
            w[0] && order % 3 == 0
        } else {
            w[0] && w[1] && w[2]
        }
    }

    /// Exhaustive subgroup-lattice verification of the surjectivity
    /// criterion at l: the full group satisfies it (achievability), and
    /// no proper subgroup with surjective determinant does.
    fn verify_criterion(l: u64) {
        let lat = build_lattice(l);
        let mut wfull = [false; 3];
        for i in 0..lat.n {
            for k in 0..3 {
                wfull[k] |= lat.wit[i][k];
            }
        }
        assert!(
            criterion_satisfied(l, lat.n, wfull),
            "criterion unachievable on the full group at l = {}",
            l
        );
        let mut seen: std::collections::HashSet<Bits> = std::collections::HashSet::new();
        let trivial = closure(&lat, &[]).unwrap();
        let mut work: Vec<Vec<u16>> = vec![trivial.1.clone()];
        seen.insert(canonical(&lat, &trivial.1));
        while let Some(list) = work.pop() {
            // Extend by one element from each coset not already inside.
            let words = lat.n.div_ceil(64);
            let mut covered = vec![0u64; words];
            for &h in &list {
                bit_set(&mut covered, h as usize);
            }
            for g in 0..lat.n as u16 {
                if bit_get(&covered, g as usize) {
                    continue;
                }
                let mut gens = list.clone();
                gens.push(g);
                match closure(&lat, &gens) {
                    None => {
                        // Extension generates the full group: nothing to
                        // check, the criterion only concerns proper ones.
                        for &h in &list {
                            let c = lat.mul[h as usize * lat.n + g as usize];
                            bit_set(&mut covered, c as usize);
                        }
                    }
                    Some((_, sublist)) => {
                        for &h in &list {
                            let c = lat.mul[h as usize * lat.n + g as usize];
                            bit_set(&mut covered, c as usize);
                        }
                        if sublist.len() == lat.n {
                            continue;
                        }
                        let key = canonical(&lat, &sublist);
                        if seen.insert(key) {
                            // Check the criterion on this proper subgroup.
                            let mut det_seen: std::collections::HashSet<u64> =
                                std::collections::HashSet::new();
                            let mut w = [false; 3];
                            for &h in &sublist {
                                det_seen.insert(lat.dets[h as usize]);
                                for i in 0..3 {
                                    w[i] |= lat.wit[h as usize][i];
                                }
                            }
                            let det_full = det_seen.len() as u64 == lat.l - 1;
                            assert!(
                                !(det_full && criterion_satisfied(l, sublist.len(), w)),
                                "proper subgroup of order {} defeats the criterion at l = {}",
                                sublist.len(),
                                l
                            );
                            work.push(sublist);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn criterion_is_sound_for_l_three() {
        verify_criterion(3);
    }

    #[test]
    fn criterion_is_sound_for_l_five() {
        verify_criterion(5);
    }

    #[test]
    #[ignore = "minutes of lattice enumeration; run with --ignored"]
    fn criterion_is_sound_for_l_seven() {
        verify_criterion(7);
    }

    #[test]
    fn surjective_everywhere_example() {
        // Conductor 37, rank 1: image surjective at every small prime.
        let e = Curve::from_ainvs(&[0, 0, 1, -1, 0]).unwrap();
        let ns = nonsurjective_primes(&e, 13, 2000, 1);
        assert!(ns.is_empty(), "got {:?}", ns);
    }

    #[test]
    fn borel_at_five_for_conductor_eleven() {
        let e = Curve::from_ainvs(&[0, -1, 1, -10, -20]).unwrap();
        let images = mod_l_images(&e, 13, 2000, 1);
        assert_eq!(images[&5], ImageVerdict::NonsurjectiveCertified);
        for l in [2u64, 3, 7, 11, 13] {
            assert!(images[&l].is_surjective(), "l = {}", l);
        }
    }

    #[test]
    fn two_and_three_for_a_torsion_rich_curve() {
        // Conductor 14 with a rational 6-torsion point: reducible at 2, 3.
        let e = Curve::from_ainvs(&[1, 0, 1, 4, -6]).unwrap();
        let ns = nonsurjective_primes(&e, 13, 2000, 1);
        assert_eq!(ns, vec![2, 3]);
    }

    #[test]
    fn cm_curve_certified_at_three_without_an_isogeny() {
        // CM by discriminant -7, conductor 49: 3 is inert in the CM
        // field, so the mod-3 image sits in a nonsplit Cartan
        // normalizer. That is a 2-group, caught by the resolvent
        // certificate; no 3-isogeny exists to catch it otherwise.
        let e = Curve::from_ainvs(&[1, -1, 0, -2, -1]).unwrap();
        assert!(!image_order_divisible_by_three(&e, 1));
        let images = mod_l_images(&e, 3, 500, 1);
        assert_eq!(images[&3], ImageVerdict::NonsurjectiveCertified);
    }

    #[test]
    fn two_division_types() {
        assert_eq!(
            two_division_type(&Curve::from_ainvs(&[0, 0, 1, -1, 0]).unwrap(), 1),
            TwoDivisionType::S3
        );
        // Full 2-torsion: y^2 = x(x-1)(x+1).
        assert_eq!(
            two_division_type(&Curve::from_ainvs(&[0, 0, 0, -1, 0]).unwrap(), 1),
            TwoDivisionType::Trivial
        );
        // One rational 2-torsion point.
        assert_eq!(
            two_division_type(&Curve::from_ainvs(&[0, 1, 0, 4, 4]).unwrap(), 1),
            TwoDivisionType::C2
        );
        // x^3 - 3x - 1 has square discriminant 81: cyclic cubic.
        assert_eq!(
            two_division_type(&Curve::from_ainvs(&[0, 0, 0, -3, -1]).unwrap(), 1),
            TwoDivisionType::C3
        );
    }

    #[test]
    fn cm_lookup() {
        assert_eq!(cm_discriminant_for_j(&Rat::from_int(-32768)), Some(-11));
        assert_eq!(cm_discriminant_for_j(&Rat::from_int(1728)), Some(-4));
        assert_eq!(cm_discriminant_for_j(&Rat::new(-4096, 11)), None);
    }
}
