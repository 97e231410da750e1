//! Multivariate polynomial gcd over the integers.
//!
//! The common case (coprime inputs) is settled by a modular degree test.
//! Otherwise the heuristic gcd (evaluation at a large integer, recursive gcd,
//! ξ-adic reconstruction, verification by exact division) is tried, with a
//! primitive polynomial remainder sequence as the fallback.

use super::poly::{Mono, Poly, Var, NVARS};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

const PRIME: u64 = (1 << 61) - 1;
const POINT: [u64; NVARS] = [
    1_234_567_891_011,
    987_654_321_123,
    555_555_555_557,
    314_159_265_358,
];
const HEURISTIC_BIT_LIMIT: u64 = 40_000;

/// Greatest common divisor with positive leading coefficient (`gcd(0,0) = 0`).
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.clone().normalize_sign();
    }
    if b.is_zero() {
        return a.clone().normalize_sign();
    }
    let ca = a.content();
    let cb = b.content();
    let ic = ca.gcd(&cb);
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let mc = ma.meet(&mb);
    let scale = Poly::monomial(mc, ic);
    let a1 = a.div_int(&ca).div_mono(&ma);
    let b1 = b.div_int(&cb).div_mono(&mb);
    if a1.is_constant() || b1.is_constant() {
        return scale;
    }
    if a1 == b1 || a1 == b1.neg() {
        return a1.normalize_sign().mul(&scale);
    }
    if coprime_by_images(&a1, &b1) {
        return scale;
    }
    let vars = union_vars(&a1, &b1);
    let g = heuristic(&a1, &b1, &vars).unwrap_or_else(|| prs(&a1, &b1));
    g.normalize_sign().mul(&scale)
}

fn union_vars(a: &Poly, b: &Poly) -> Vec<Var> {
    let va = a.vars();
    let vb = b.vars();
    Var::ALL
        .iter()
        .copied()
        .filter(|v| va.contains(v) || vb.contains(v))
        .collect()
}

/// Sound test for `gcd(a,b) = 1` on primitive inputs without monomial content.
///
/// For every variable shared by both inputs, the images modulo a prime with
/// all other variables fixed must have a constant univariate gcd while the
/// leading coefficients survive. `false` means "unknown".
fn coprime_by_images(a: &Poly, b: &Poly) -> bool {
    let va = a.vars();
    let vb = b.vars();
    for v in Var::ALL {
        if !(va.contains(&v) && vb.contains(&v)) {
            continue;
        }
        let ia = univariate_image(a, v);
        let ib = univariate_image(b, v);
        let (Some(ia), Some(ib)) = (ia, ib) else {
            return false;
        };
        if uni_gcd_degree(ia, ib) > 0 {
            return false;
        }
    }
    true
}

fn univariate_image(a: &Poly, v: Var) -> Option<Vec<u64>> {
    let cs = a.coeffs_in(v);
    let img: Vec<u64> = cs.iter().map(|c| c.eval_mod(&POINT, PRIME)).collect();
    if *img.last().unwrap() == 0 {
        None
    } else {
        Some(img)
    }
}

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn submod(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + PRIME - b
    }
}

fn invmod(a: u64) -> u64 {
    super::poly::pow_mod(a, PRIME - 2, PRIME)
}

fn trim(v: &mut Vec<u64>) {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
}

fn uni_gcd_degree(mut a: Vec<u64>, mut b: Vec<u64>) -> usize {
    trim(&mut a);
    trim(&mut b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        if b.len() == 1 && b[0] == 0 {
            return a.len() - 1;
        }
        if b.len() == 1 {
            return 0;
        }
        let inv = invmod(*b.last().unwrap());
        while a.len() >= b.len() && !(a.len() == 1 && a[0] == 0) {
            let shift = a.len() - b.len();
            let f = mulmod(*a.last().unwrap(), inv);
            for i in 0..b.len() {
                a[i + shift] = submod(a[i + shift], mulmod(f, b[i]));
            }
            a.pop();
            trim(&mut a);
            if a.is_empty() {
                a.push(0);
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
}

/// Heuristic gcd; returns the full gcd (integer content included) or `None`.
fn heuristic(a: &Poly, b: &Poly, vars: &[Var]) -> Option<Poly> {
    if let (Some(x), Some(y)) = (a.constant_value(), b.constant_value()) {
        return Some(Poly::constant(x.gcd(&y)));
    }
    let ca = a.content();
    let cb = b.content();
    let ic = ca.gcd(&cb);
    let a = a.div_int(&ca);
    let b = b.div_int(&cb);
    if a.is_constant() || b.is_constant() {
        return Some(Poly::constant(ic));
    }
    let Some((&x, rest)) = vars.split_last() else {
        return Some(Poly::constant(ic));
    };
    let da = a.degree_in(x) as u64;
    let db = b.degree_in(x) as u64;
    if da == 0 && db == 0 {
        return heuristic(&a, &b, rest).map(|g| g.scale(&ic));
    }
    let norm = a.max_norm().min(b.max_norm());
    let mut xi: BigInt = norm * 2 + 29;
    for _ in 0..6 {
        if xi.bits() * da.max(db) > HEURISTIC_BIT_LIMIT {
            return None;
        }
        let ae = a.eval_int(x, &xi);
        let be = b.eval_int(x, &xi);
        if !ae.is_zero() && !be.is_zero() {
            if let Some(gamma) = heuristic(&ae, &be, rest) {
                let g = genpoly(gamma, &xi, x);
                if !g.is_zero() {
                    let c = g.content();
                    let g = g.div_int(&c).normalize_sign();
                    if a.div_exact(&g).is_some() && b.div_exact(&g).is_some() {
                        return Some(g.scale(&ic));
                    }
                }
            }
        }
        xi = xi * 73794 / 27011;
    }
    None
}

/// ξ-adic reconstruction with symmetric remainders.
fn genpoly(mut gamma: Poly, xi: &BigInt, x: Var) -> Poly {
    let half: BigInt = xi / 2;
    let mut terms: Vec<(Mono, BigInt)> = Vec::new();
    let mut e = 0u32;
    while !gamma.is_zero() {
        let mut digit: Vec<(Mono, BigInt)> = Vec::new();
        for (m, c) in gamma.terms() {
            let mut r = c.mod_floor(xi);
            if r > half {
                r -= xi;
            }
            if !r.is_zero() {
                digit.push((*m, r));
            }
        }
        let dpoly = Poly::from_terms(digit.iter().cloned());
        for (m, c) in digit {
            let mut mm = m;
            mm.0[x.index()] += e;
            terms.push((mm, c));
        }
        gamma = gamma.sub(&dpoly).div_int(xi);
        e += 1;
        if e > 10_000 {
            break;
        }
    }
    Poly::from_terms(terms)
}

/// Primitive remainder sequence; slow but always correct.
fn prs(a: &Poly, b: &Poly) -> Poly {
    let vars = union_vars(a, b);
    let Some(&x) = vars.iter().find(|&&v| a.degree_in(v) > 0 && b.degree_in(v) > 0) else {
        // No shared main variable: the gcd lives in the coefficient ring.
        return content_gcd_all(a, b, &vars);
    };
    let ca = content_in(a, x);
    let cb = content_in(b, x);
    let cont = gcd(&ca, &cb);
    let mut r0 = a.div_exact(&ca).expect("content divides");
    let mut r1 = b.div_exact(&cb).expect("content divides");
    if r0.degree_in(x) < r1.degree_in(x) {
        std::mem::swap(&mut r0, &mut r1);
    }
    loop {
        let r = prem(&r0, &r1, x);
        if r.is_zero() {
            break;
        }
        if r.degree_in(x) == 0 {
            return cont;
        }
        let c = content_in(&r, x);
        r0 = r1;
        r1 = r.div_exact(&c).expect("content divides");
    }
    let c = content_in(&r1, x);
    r1.div_exact(&c).expect("content divides").mul(&cont)
}

fn content_gcd_all(a: &Poly, b: &Poly, vars: &[Var]) -> Poly {
    let mut g = Poly::zero();
    let mut acc = vec![a.clone(), b.clone()];
    for &v in vars {
        let mut next = Vec::new();
        for p in &acc {
            if p.degree_in(v) > 0 {
                next.extend(p.coeffs_in(v).into_iter().filter(|c| !c.is_zero()));
            } else {
                next.push(p.clone());
            }
        }
        acc = next;
    }
    for p in acc {
        g = gcd(&g, &p);
    }
    g
}

fn content_in(a: &Poly, x: Var) -> Poly {
    let mut g = Poly::zero();
    for c in a.coeffs_in(x) {
        if c.is_zero() {
            continue;
        }
        g = gcd(&g, &c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn prem(a: &Poly, b: &Poly, x: Var) -> Poly {
    let db = b.degree_in(x);
    let bc = b.coeffs_in(x);
    let lcb = bc[db as usize].clone();
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(x) >= db {
        let dr = r.degree_in(x);
        let lcr = r.coeffs_in(x)[dr as usize].clone();
        let shift = Poly::monomial(Mono::var(x, dr - db), BigInt::one());
        r = r.mul(&lcb).sub(&lcr.mul(&shift).mul(b));
    }
    r
}

#[allow(dead_code)]
pub(crate) fn gcd_by_remainder_sequence(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() || b.is_zero() {
        return gcd(a, b);
    }
    let ca = a.content();
    let cb = b.content();
    let ic = ca.gcd(&cb);
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let scale = Poly::monomial(ma.meet(&mb), ic);
    let a1 = a.div_int(&ca).div_mono(&ma);
    let b1 = b.div_int(&cb).div_mono(&mb);
    if a1.is_constant() || b1.is_constant() {
        return scale;
    }
    prs(&a1, &b1).normalize_sign().mul(&scale)
}
