//! Sparse multivariate polynomials with big-integer coefficients.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

/// Number of parameters carried by every polynomial.
pub const NVARS: usize = 4;

/// The parameters of the coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Q,
    T,
    Alpha,
    U,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::Q, Var::T, Var::Alpha, Var::U];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::T => "t",
            Var::Alpha => "a",
            Var::U => "u",
        }
    }
}

/// Exponent vector. Ordered graded-lexicographically with `q > t > a > u`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Mono(pub [u32; NVARS]);

impl Mono {
    pub fn one() -> Self {
        Mono([0; NVARS])
    }

    pub fn var(v: Var, e: u32) -> Self {
        let mut m = [0; NVARS];
        m[v.index()] = e;
        Mono(m)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    pub fn mul(&self, o: &Mono) -> Mono {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(o.0.iter()) {
            *a += b;
        }
        Mono(m)
    }

    pub fn divides(&self, o: &Mono) -> bool {
        self.0.iter().zip(o.0.iter()).all(|(a, b)| a <= b)
    }

    /// `o / self`, assuming divisibility.
    pub fn div_into(&self, o: &Mono) -> Mono {
        let mut m = o.0;
        for (a, b) in m.iter_mut().zip(self.0.iter()) {
            *a -= b;
        }
        Mono(m)
    }

    pub fn meet(&self, o: &Mono) -> Mono {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(o.0.iter()) {
            *a = (*a).min(*b);
        }
        Mono(m)
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in `q, t, a, u` over the integers.
///
/// Terms are stored with nonzero coefficients, sorted by decreasing monomial,
/// so the first term is the leading term.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Mono, BigInt)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly {
                terms: vec![(Mono::one(), c)],
            }
        }
    }

    pub fn from_i64(c: i64) -> Self {
        Self::constant(BigInt::from(c))
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(Mono::var(v, 1), BigInt::one())
    }

    pub fn monomial(m: Mono, c: BigInt) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    /// Builds a polynomial from arbitrary (possibly repeated) terms.
    pub fn from_terms(terms: impl IntoIterator<Item = (Mono, BigInt)>) -> Self {
        let mut acc: HashMap<Mono, BigInt> = HashMap::new();
        for (m, c) in terms {
            *acc.entry(m).or_insert_with(BigInt::zero) += c;
        }
        Self::from_map(acc)
    }

    fn from_map(acc: HashMap<Mono, BigInt>) -> Self {
        let mut terms: Vec<(Mono, BigInt)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by_key(|t| std::cmp::Reverse(t.0));
        Poly { terms }
    }

    pub fn terms(&self) -> &[(Mono, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn constant_value(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 if self.terms[0].0.is_one() => Some(self.terms[0].1.clone()),
            _ => None,
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(Mono, BigInt)> {
        self.terms.first()
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.terms.first().map(|t| t.1.clone()).unwrap_or_else(BigInt::zero)
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.iter().map(|(m, _)| m.exp(v)).max().unwrap_or(0)
    }

    pub fn min_degree_in(&self, v: Var) -> u32 {
        self.terms.iter().map(|(m, _)| m.exp(v)).min().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.first().map(|t| t.0.degree()).unwrap_or(0)
    }

    pub fn vars(&self) -> Vec<Var> {
        Var::ALL
            .iter()
            .copied()
            .filter(|&v| self.terms.iter().any(|(m, _)| m.exp(v) > 0))
            .collect()
    }

    pub fn max_norm(&self) -> BigInt {
        self.terms
            .iter()
            .map(|(_, c)| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    /// Gcd of the integer coefficients (nonnegative).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Mono {
        let mut it = self.terms.iter();
        match it.next() {
            None => Mono::one(),
            Some((m0, _)) => it.fold(*m0, |acc, (m, _)| acc.meet(m)),
        }
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        self.merge(o, false)
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.merge(o, true)
    }

    fn merge(&self, o: &Poly, negate: bool) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &o.terms;
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0, c));
        }
        Poly { terms: out }
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        if o.terms.len() == 1 {
            return self.mul_term(&o.terms[0].0, &o.terms[0].1);
        }
        if self.terms.len() == 1 {
            return o.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        let mut acc: HashMap<Mono, BigInt> = HashMap::with_capacity(self.terms.len() * o.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                let m = ma.mul(mb);
                let p = ca * cb;
                match acc.get_mut(&m) {
                    Some(e) => *e += p,
                    None => {
                        acc.insert(m, p);
                    }
                }
            }
        }
        Self::from_map(acc)
    }

    pub fn mul_term(&self, m: &Mono, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(mm, cc)| (mm.mul(m), cc * c)).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        self.mul_term(&Mono::one(), c)
    }

    /// Exact division of every coefficient by an integer.
    pub fn div_int(&self, c: &BigInt) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, cc)| (*m, cc / c)).collect(),
        }
    }

    /// Divides by a monomial known to divide every term.
    pub fn div_mono(&self, m: &Mono) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(mm, c)| (m.div_into(mm), c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self` over the integers.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if d.terms.len() == 1 {
            let (dm, dc) = &d.terms[0];
            let mut out = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                if !dm.divides(m) {
                    return None;
                }
                let (qt, r) = c.div_rem(dc);
                if !r.is_zero() {
                    return None;
                }
                out.push((dm.div_into(m), qt));
            }
            return Some(Poly { terms: out });
        }
        for v in Var::ALL {
            if d.degree_in(v) > self.degree_in(v) || d.min_degree_in(v) > self.min_degree_in(v) {
                return None;
            }
        }
        let (dm, dc) = d.terms[0].clone();
        let mut rem: std::collections::BTreeMap<std::cmp::Reverse<Mono>, BigInt> = self
            .terms
            .iter()
            .map(|(m, c)| (std::cmp::Reverse(*m), c.clone()))
            .collect();
        let mut quot: Vec<(Mono, BigInt)> = Vec::new();
        while let Some((std::cmp::Reverse(m), c)) = rem.pop_first() {
            if !dm.divides(&m) {
                return None;
            }
            let (qc, r) = c.div_rem(&dc);
            if !r.is_zero() {
                return None;
            }
            let qm = dm.div_into(&m);
            for (tm, tc) in &d.terms[1..] {
                let key = std::cmp::Reverse(tm.mul(&qm));
                let delta = tc * &qc;
                match rem.get_mut(&key) {
                    Some(e) => {
                        *e -= delta;
                        if e.is_zero() {
                            rem.remove(&key);
                        }
                    }
                    None => {
                        rem.insert(key, -delta);
                    }
                }
            }
            quot.push((qm, qc));
        }
        Some(Poly { terms: quot })
    }

    /// Substitutes an integer for one variable.
    pub fn eval_int(&self, v: Var, x: &BigInt) -> Poly {
        let maxd = self.degree_in(v) as usize;
        let mut powers = Vec::with_capacity(maxd + 1);
        powers.push(BigInt::one());
        for i in 1..=maxd {
            let p = &powers[i - 1] * x;
            powers.push(p);
        }
        let mut acc: HashMap<Mono, BigInt> = HashMap::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let e = m.exp(v) as usize;
            let mut mm = *m;
            mm.0[v.index()] = 0;
            *acc.entry(mm).or_insert_with(BigInt::zero) += c * &powers[e];
        }
        Self::from_map(acc)
    }

    /// Coefficients with respect to `v`, indexed by the exponent of `v`.
    pub fn coeffs_in(&self, v: Var) -> Vec<Poly> {
        let d = self.degree_in(v) as usize;
        let mut buckets: Vec<Vec<(Mono, BigInt)>> = vec![Vec::new(); d + 1];
        for (m, c) in &self.terms {
            let e = m.exp(v) as usize;
            let mut mm = *m;
            mm.0[v.index()] = 0;
            buckets[e].push((mm, c.clone()));
        }
        buckets.into_iter().map(Poly::from_terms).collect()
    }

    /// Inverse of [`Poly::coeffs_in`].
    pub fn from_coeffs_in(v: Var, coeffs: &[Poly]) -> Poly {
        let mut terms = Vec::new();
        for (e, c) in coeffs.iter().enumerate() {
            for (m, k) in &c.terms {
                let mut mm = *m;
                mm.0[v.index()] += e as u32;
                terms.push((mm, k.clone()));
            }
        }
        Poly::from_terms(terms)
    }

    /// Replaces every exponent of the listed variables by `r` times itself.
    pub fn dilate(&self, vars: &[Var], r: u32) -> Poly {
        let mut terms: Vec<(Mono, BigInt)> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut mm = *m;
                for v in vars {
                    mm.0[v.index()] *= r;
                }
                (mm, c.clone())
            })
            .collect();
        terms.sort_unstable_by_key(|t| std::cmp::Reverse(t.0));
        Poly { terms }
    }

    /// Value modulo a word-sized prime at a point given per variable.
    pub fn eval_mod(&self, point: &[u64; NVARS], p: u64) -> u64 {
        let pb = BigInt::from(p);
        let mut acc: u128 = 0;
        for (m, c) in &self.terms {
            let cm = c.mod_floor(&pb);
            let mut val: u128 = cm.iter_u64_digits().next().unwrap_or(0) as u128;
            for v in 0..NVARS {
                let e = m.0[v];
                if e > 0 {
                    val = val * pow_mod(point[v], e as u64, p) as u128 % p as u128;
                }
            }
            acc = (acc + val) % p as u128;
        }
        acc as u64
    }

    /// Sign-normalized copy: leading coefficient positive.
    pub fn normalize_sign(self) -> Poly {
        if self.leading_coeff().is_negative() {
            self.neg()
        } else {
            self
        }
    }

    /// Writes the polynomial with terms in increasing graded-lexicographic order.
    fn write(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(abs.to_string());
            }
            for v in Var::ALL {
                let e = m.exp(v);
                if e == 1 {
                    factors.push(v.name().to_string());
                } else if e > 1 {
                    factors.push(format!("{}^{}", v.name(), e));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }

    /// True when the written form needs parentheses as a factor.
    pub(crate) fn needs_parens(&self) -> bool {
        self.terms.len() > 1
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f)
    }
}

pub(crate) fn pow_mod(b: u64, mut e: u64, p: u64) -> u64 {
    let mut r: u128 = 1;
    let mut b = (b % p) as u128;
    let p = p as u128;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Poly {
        Poly::var(Var::Q)
    }
    fn t() -> Poly {
        Poly::var(Var::T)
    }

    #[test]
    fn graded_lex_puts_q_before_t() {
        assert!(Mono::var(Var::Q, 1) > Mono::var(Var::T, 1));
        assert!(Mono::var(Var::T, 2) > Mono::var(Var::Q, 1));
    }

    #[test]
    fn exact_division_recovers_factor() {
        let a = Poly::one().sub(&q().mul(&t()));
        let b = Poly::one().add(&q()).add(&t().pow(3));
        let prod = a.mul(&b);
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(prod.div_exact(&b), Some(a));
        assert_eq!(b.div_exact(&q()), None);
    }

    #[test]
    fn display_is_increasing() {
        let p = q().add(&q().pow(2)).sub(&Poly::one());
        assert_eq!(p.to_string(), "-1+q+q^2");
    }
}
