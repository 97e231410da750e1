//! Reduced rational functions in `q, t, a, u`.

use super::gcd::gcd;
use super::poly::{Mono, Poly, Var};
use super::CoeffError;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// An element of ℚ(q,t,a,u) kept as `num/den` with `gcd(num,den) = 1` and a
/// denominator whose graded-lex leading coefficient is positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        RatFunc {
            num: Poly::from_i64(c),
            den: Poly::one(),
        }
    }

    pub fn from_bigint(c: BigInt) -> Self {
        RatFunc {
            num: Poly::constant(c),
            den: Poly::one(),
        }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        // BigRational is already reduced with a positive denominator.
        RatFunc {
            num: Poly::constant(r.numer().clone()),
            den: Poly::constant(r.denom().clone()),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn var(v: Var) -> Self {
        Self::from_poly(Poly::var(v))
    }

    pub fn q() -> Self {
        Self::var(Var::Q)
    }

    pub fn t() -> Self {
        Self::var(Var::T)
    }

    pub fn alpha() -> Self {
        Self::var(Var::Alpha)
    }

    pub fn u() -> Self {
        Self::var(Var::U)
    }

    /// `q^i t^j` for possibly negative exponents.
    pub fn qt_power(i: i64, j: i64) -> Self {
        Self::q().powi(i).mul(&Self::t().powi(j))
    }

    /// Builds and reduces `num/den`.
    pub fn new(num: Poly, den: Poly) -> Result<Self, CoeffError> {
        if den.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        Self::fix_sign(num, den)
    }

    fn fix_sign(num: Poly, den: Poly) -> Self {
        if den.leading_coeff().is_negative() {
            RatFunc {
                num: num.neg(),
                den: den.neg(),
            }
        } else {
            RatFunc { num, den }
        }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Rational constant value, if the function is constant.
    pub fn to_rational(&self) -> Option<BigRational> {
        let n = self.num.constant_value()?;
        let d = self.den.constant_value()?;
        Some(BigRational::new(n, d))
    }

    pub fn to_i64(&self) -> Option<i64> {
        let r = self.to_rational()?;
        if r.is_integer() {
            r.to_integer().to_i64()
        } else {
            None
        }
    }

    /// True for polynomials whose coefficients are all nonnegative integers.
    pub fn is_nonneg_polynomial(&self) -> bool {
        self.den.is_one() && self.num.terms().iter().all(|(_, c)| !c.is_negative())
    }

    /// True for Laurent polynomials (monomial denominator) with nonnegative integer coefficients.
    pub fn is_nonneg_laurent(&self) -> bool {
        self.den.is_monomial()
            && self.den.leading_coeff().is_one()
            && self.num.terms().iter().all(|(_, c)| !c.is_negative())
    }

    /// True when the function is a Laurent polynomial with integer coefficients.
    pub fn is_laurent(&self) -> bool {
        self.den.is_monomial() && self.den.leading_coeff().is_one()
    }

    /// Nonnegative up to an overall sign (in a Laurent-polynomial sense).
    pub fn is_signed_nonneg_laurent(&self) -> bool {
        self.is_nonneg_laurent() || self.neg().is_nonneg_laurent()
    }

    pub fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.add_impl(o, false)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add_impl(o, true)
    }

    fn add_impl(&self, o: &Self, negate: bool) -> Self {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { o.neg() } else { o.clone() };
        }
        let on = if negate { o.num.neg() } else { o.num.clone() };
        if self.den == o.den {
            let n = self.num.add(&on);
            if self.den.is_one() {
                return Self::from_poly(n);
            }
            return Self::reduce(n, self.den.clone());
        }
        if self.den.is_one() {
            return RatFunc {
                num: self.num.mul(&o.den).add(&on),
                den: o.den.clone(),
            };
        }
        if o.den.is_one() {
            return RatFunc {
                num: self.num.add(&on.mul(&self.den)),
                den: self.den.clone(),
            };
        }
        let g = gcd(&self.den, &o.den);
        if g.is_one() {
            let n = self.num.mul(&o.den).add(&on.mul(&self.den));
            let d = self.den.mul(&o.den);
            return Self::fix_sign(n, d);
        }
        let b1 = self.den.div_exact(&g).expect("gcd divides");
        let d1 = o.den.div_exact(&g).expect("gcd divides");
        let t = self.num.mul(&d1).add(&on.mul(&b1));
        if t.is_zero() {
            return Self::zero();
        }
        let g2 = gcd(&t, &g);
        if g2.is_one() {
            return Self::fix_sign(t, b1.mul(&o.den));
        }
        let n = t.div_exact(&g2).expect("gcd divides");
        let d = b1.mul(&o.den.div_exact(&g2).expect("gcd divides"));
        Self::fix_sign(n, d)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if self.is_polynomial() && o.is_polynomial() {
            return Self::from_poly(self.num.mul(&o.num));
        }
        if let Some(c) = self.constant_int() {
            return o.scale_int(&c);
        }
        if let Some(c) = o.constant_int() {
            return self.scale_int(&c);
        }
        let g1 = gcd(&self.num, &o.den);
        let g2 = gcd(&o.num, &self.den);
        let (a, d) = if g1.is_one() {
            (self.num.clone(), o.den.clone())
        } else {
            (self.num.div_exact(&g1).unwrap(), o.den.div_exact(&g1).unwrap())
        };
        let (c, b) = if g2.is_one() {
            (o.num.clone(), self.den.clone())
        } else {
            (o.num.div_exact(&g2).unwrap(), self.den.div_exact(&g2).unwrap())
        };
        Self::fix_sign(a.mul(&c), b.mul(&d))
    }

    fn constant_int(&self) -> Option<BigInt> {
        if self.den.is_one() {
            self.num.constant_value()
        } else {
            None
        }
    }

    /// Multiplication by an integer.
    pub fn scale_int(&self, c: &BigInt) -> Self {
        if c.is_zero() || self.is_zero() {
            return Self::zero();
        }
        let dc = self.den.content();
        let g = dc.gcd(c);
        if g.is_one() {
            Self::fix_sign(self.num.scale(c), self.den.clone())
        } else {
            Self::fix_sign(self.num.scale(&(c / &g)), self.den.div_int(&g))
        }
    }

    /// Multiplication by a rational number.
    pub fn scale_rational(&self, r: &BigRational) -> Self {
        if r.is_zero() || self.is_zero() {
            return Self::zero();
        }
        let a = self.scale_int(r.numer());
        if r.denom().is_one() {
            return a;
        }
        let nc = a.num.content();
        let g = nc.gcd(r.denom());
        let rest = r.denom() / &g;
        Self::fix_sign(a.num.div_int(&g), a.den.scale(&rest))
    }

    pub fn inv(&self) -> Result<Self, CoeffError> {
        if self.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::fix_sign(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &Self) -> Result<Self, CoeffError> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, e: u32) -> Self {
        RatFunc {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
        .normalized_sign()
    }

    /// Integer power; negative exponents of zero panic.
    pub fn powi(&self, e: i64) -> Self {
        if e >= 0 {
            self.pow(e as u32)
        } else {
            self.inv().expect("negative power of zero").pow((-e) as u32)
        }
    }

    fn normalized_sign(self) -> Self {
        Self::fix_sign(self.num, self.den)
    }

    /// Plethystic power: `q ↦ q^r`, `t ↦ t^r`, `u ↦ u^r`; `a` is inert.
    pub fn pleth_power(&self, r: u32) -> Self {
        if r == 1 {
            return self.clone();
        }
        let vars = [Var::Q, Var::T, Var::U];
        Self::fix_sign(self.num.dilate(&vars, r), self.den.dilate(&vars, r))
    }

    /// Substitutes the given values for parameters; others are preserved.
    pub fn substitute(&self, bindings: &[(Var, RatFunc)]) -> Result<Self, CoeffError> {
        if bindings.is_empty() {
            return Ok(self.clone());
        }
        let relevant: Vec<&(Var, RatFunc)> = bindings
            .iter()
            .filter(|(v, _)| self.num.degree_in(*v) > 0 || self.den.degree_in(*v) > 0)
            .collect();
        if relevant.is_empty() {
            return Ok(self.clone());
        }
        // Homogenize: clear binding denominators with a shared power so the
        // result is a single quotient of polynomials.
        let mut tops: HashMap<Var, u32> = HashMap::new();
        for (v, _) in &relevant {
            tops.insert(*v, self.num.degree_in(*v).max(self.den.degree_in(*v)));
        }
        let n = subst_poly(&self.num, &relevant, &tops);
        let d = subst_poly(&self.den, &relevant, &tops);
        if d.is_zero() {
            return Err(CoeffError::Pole(format!(
                "denominator {} vanishes under the substitution",
                self.den
            )));
        }
        Ok(Self::reduce(n, d))
    }

    /// Convenience wrapper for substituting integers.
    pub fn substitute_ints(&self, bindings: &[(Var, i64)]) -> Result<Self, CoeffError> {
        let b: Vec<(Var, RatFunc)> = bindings.iter().map(|(v, c)| (*v, RatFunc::from_int(*c))).collect();
        self.substitute(&b)
    }

    /// Swaps the roles of `q` and `t`.
    pub fn swap_qt(&self) -> Self {
        let f = |p: &Poly| {
            Poly::from_terms(p.terms().iter().map(|(m, c)| {
                let mut mm = *m;
                mm.0.swap(Var::Q.index(), Var::T.index());
                (mm, c.clone())
            }))
        };
        Self::fix_sign(f(&self.num), f(&self.den))
    }

    /// Value at `q = t = 1` (other parameters preserved).
    pub fn at_one(&self) -> Result<Self, CoeffError> {
        self.substitute_ints(&[(Var::Q, 1), (Var::T, 1)])
    }

    /// Parses the textual form produced by `Display`.
    pub fn parse(s: &str) -> Result<Self, CoeffError> {
        super::parse::parse(s)
    }
}

fn subst_poly(p: &Poly, bindings: &[&(Var, RatFunc)], tops: &HashMap<Var, u32>) -> Poly {
    // For binding v = n_v/d_v, each term c·Π v^e becomes c·Π n_v^e d_v^(top_v − e).
    let mut cache: HashMap<(Var, u32, u32), Poly> = HashMap::new();
    let mut acc = Poly::zero();
    for (m, c) in p.terms() {
        let mut rest = *m;
        let mut term = Poly::one();
        for (v, val) in bindings {
            let e = m.exp(*v);
            rest.0[v.index()] = 0;
            let top = tops[v];
            let key = (*v, e, top);
            let factor = cache
                .entry(key)
                .or_insert_with(|| val.num.pow(e).mul(&val.den.pow(top - e)))
                .clone();
            term = term.mul(&factor);
        }
        acc = acc.add(&term.mul_term(&rest, c));
    }
    acc
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let num = if self.num.needs_parens() {
            format!("({})", self.num)
        } else {
            self.num.to_string()
        };
        // A product in the denominator must be grouped to survive left-associative parsing.
        let bare_den = !self.den.needs_parens()
            && (self.den.is_constant()
                || (self.den.leading_coeff().is_one() && self.den.vars().len() == 1));
        if bare_den {
            write!(f, "{}/{}", num, self.den)
        } else {
            write!(f, "{}/({})", num, self.den)
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc::neg(&self)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $m(self, o: &RatFunc) -> RatFunc {
                RatFunc::$m(self, o)
            }
        }
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, o: RatFunc) -> RatFunc {
                RatFunc::$m(&self, &o)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, o: &RatFunc) -> RatFunc {
                RatFunc::$m(&self, o)
            }
        }
    };
}
forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl From<i64> for RatFunc {
    fn from(c: i64) -> Self {
        RatFunc::from_int(c)
    }
}

impl std::iter::Sum for RatFunc {
    fn sum<I: Iterator<Item = RatFunc>>(iter: I) -> Self {
        iter.fold(RatFunc::zero(), |a, b| a.add(&b))
    }
}

impl std::iter::Product for RatFunc {
    fn product<I: Iterator<Item = RatFunc>>(iter: I) -> Self {
        iter.fold(RatFunc::one(), |a, b| a.mul(&b))
    }
}

/// `1 - c·q^i t^j` for `i, j ≥ 0`.
pub fn one_minus(c: i64, i: u32, j: u32) -> RatFunc {
    let mut m = Mono::one();
    m.0[Var::Q.index()] = i;
    m.0[Var::T.index()] = j;
    RatFunc::from_poly(Poly::one().sub(&Poly::monomial(m, BigInt::from(c))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(s: &str) -> RatFunc {
        RatFunc::parse(s).unwrap()
    }

    #[test]
    fn cancellation() {
        assert_eq!(rf("q/(1-t)") * rf("(1-t)/1"), rf("q"));
        assert_eq!(rf("1-q^2").div(&rf("1-q")).unwrap(), rf("1+q"));
    }

    #[test]
    fn sum_with_common_denominator() {
        let a = rf("(1-t)*(1+q)/(1-q*t)");
        let b = rf("(1-t)/(1-q*t)");
        assert_eq!(a + b, rf("(1-t)*(2+q)/(1-q*t)"));
    }

    #[test]
    fn sign_normalization() {
        let a = rf("1/(1-q)");
        assert_eq!(a.to_string(), "-1/(-1+q)");
        assert_eq!(rf("-1/(-1+q)"), a);
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(rf("q").div(&RatFunc::zero()), Err(CoeffError::DivisionByZero));
    }

    #[test]
    fn substitution_and_poles() {
        let f = rf("(1-t)*(1+q)/(1-q*t)");
        assert_eq!(f.substitute_ints(&[(Var::Q, 0)]).unwrap(), rf("1-t"));
        let g = rf("q*(1-t)/(1-q*t)");
        let h = g
            .substitute(&[(Var::Q, rf("q^2")), (Var::T, rf("t^2"))])
            .unwrap();
        assert_eq!(h, rf("q^2*(1-t^2)/(1-q^2*t^2)"));
        assert_eq!(h, g.pleth_power(2));
        assert!(matches!(
            rf("1/(1-q)").substitute_ints(&[(Var::Q, 1)]),
            Err(CoeffError::Pole(_))
        ));
    }

    #[test]
    fn inverse_substitution() {
        let g = rf("q*(1-t)/(1-q*t)");
        let h = g.substitute(&[(Var::Q, rf("1/q"))]).unwrap();
        assert_eq!(h, rf("(1-t)/(q-t)"));
        assert_eq!(h.substitute_ints(&[(Var::Q, 0)]).unwrap(), rf("(t-1)/t"));
    }
}
