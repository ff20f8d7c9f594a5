//! Exact arithmetic in the rational function field ℚ(q).
//!
//! [`LaurentPoly`] is the workhorse: almost every coefficient met in practice
//! is a Laurent polynomial, usually a single signed power of `q`. [`Scalar`]
//! wraps a normalized fraction of two of them so that inverses always exist.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

/// Arbitrary precision rational numbers used for all coefficients.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero in Q(q)")]
    DivisionByZero,
    #[error("cannot parse rational coefficient {0:?}")]
    BadCoefficient(String),
}

fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Finite sum `Σ c_e q^e` with rational coefficients and integer exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::q_pow(0)
    }

    /// The monomial `q^e`.
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(e, Rational::one())
    }

    pub fn monomial(e: i64, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, c)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(rat(n))
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, merging repeats.
    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn from_int_terms(pairs: &[(i64, i64)]) -> Self {
        Self::from_terms(pairs.iter().map(|&(e, c)| (e, rat(c))))
    }

    pub fn add_term(&mut self, e: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Rational)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: i64) -> Rational {
        self.terms.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// `Some((e, c))` when the polynomial is the single term `c q^e`.
    pub fn as_monomial(&self) -> Option<(i64, &Rational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (*e, c))
        } else {
            None
        }
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.values().next_back()
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// The substitution `q ↦ q^{-1}`.
    pub fn bar(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Value at `q = 1`.
    pub fn eval_one(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, c| acc + c)
    }

    /// Coefficients as a dense vector, lowest exponent first, after dividing
    /// out the smallest power of `q`.
    fn dense(&self) -> Vec<Rational> {
        let (lo, hi) = match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return Vec::new(),
        };
        let mut v = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            v[(e - lo) as usize] = c.clone();
        }
        v
    }

    fn from_dense(v: &[Rational]) -> Self {
        Self::from_terms(v.iter().enumerate().map(|(i, c)| (i as i64, c.clone())))
    }
}

fn trim(v: &mut Vec<Rational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Quotient and remainder of dense polynomials over ℚ.
fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lb = &b[db];
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut quo = vec![Rational::zero(); r.len() - db];
    while r.len() > db && !r.is_empty() {
        let shift = r.len() - 1 - db;
        let f = &r[r.len() - 1] / lb;
        for (i, c) in b.iter().enumerate() {
            r[i + shift] -= &f * c;
        }
        quo[shift] = f;
        r.pop();
        trim(&mut r);
    }
    (quo, r)
}

/// Monic greatest common divisor of two nonzero dense polynomials.
fn poly_gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = poly_divrem(&x, &y);
        x = y;
        y = r;
    }
    let lc = x.last().cloned().unwrap_or_else(Rational::one);
    x.iter().map(|c| c / &lc).collect()
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut r = self.clone();
        r += rhs;
        r
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut r = self.clone();
        r -= rhs;
        r
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut r = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                r.add_term(e1 + e2, c1 * c2);
            }
        }
        r
    }
}

macro_rules! forward_owned {
    ($t:ty, $tr:ident, $m:ident) => {
        impl $tr<$t> for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&$t> for $t {
            type Output = $t;
            fn $m(self, rhs: &$t) -> $t {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(LaurentPoly, Add, add);
forward_owned!(LaurentPoly, Sub, sub);
forward_owned!(LaurentPoly, Mul, mul);

fn fmt_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mon = match *e {
                0 => String::new(),
                1 => "q".to_string(),
                e => format!("q^{e}"),
            };
            if mon.is_empty() {
                write!(f, "{}", fmt_rational(&a))?;
            } else if a.is_one() {
                write!(f, "{mon}")?;
            } else {
                write!(f, "{}*{mon}", fmt_rational(&a))?;
            }
        }
        Ok(())
    }
}

pub(crate) fn parse_rational(s: &str) -> Result<Rational, ScalarError> {
    let bad = || ScalarError::BadCoefficient(s.to_string());
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(
            BigInt::from_str(s).map_err(|_| bad())?,
        )),
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    exp: i64,
    c: String,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            seq.serialize_element(&TermRepr {
                exp: *e,
                c: format!("{}/{}", c.numer(), c.denom()),
            })?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Vec::<TermRepr>::deserialize(d)?;
        let mut p = LaurentPoly::zero();
        for t in raw {
            p.add_term(t.exp, parse_rational(&t.c).map_err(de::Error::custom)?);
        }
        Ok(p)
    }
}

/// An element of ℚ(q) in canonical form.
///
/// The denominator is a polynomial in `q` (no negative powers) with constant
/// term nonzero and leading coefficient 1, coprime to the numerator. Equality
/// of fractions is therefore equality of the stored fields.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Scalar {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Default for Scalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl Scalar {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if let Some((k, c)) = den.as_monomial() {
            let inv = c.recip();
            return Self {
                num: num.shift(-k).scale(&inv),
                den: LaurentPoly::one(),
            };
        }
        let a = num.min_exp().unwrap_or(0);
        let b = den.min_exp().unwrap_or(0);
        let n = num.dense();
        let d = den.dense();
        let g = poly_gcd(&n, &d);
        let (mut n, _) = poly_divrem(&n, &g);
        let (mut d, _) = poly_divrem(&d, &g);
        trim(&mut n);
        trim(&mut d);
        let lc = d.last().cloned().unwrap_or_else(Rational::one);
        let n: Vec<Rational> = n.iter().map(|c| c / &lc).collect();
        let d: Vec<Rational> = d.iter().map(|c| c / &lc).collect();
        Self {
            num: LaurentPoly::from_dense(&n).shift(a - b),
            den: LaurentPoly::from_dense(&d),
        }
    }

    pub fn zero() -> Self {
        Self {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::q_pow(0)
    }

    pub fn q_pow(e: i64) -> Self {
        LaurentPoly::q_pow(e).into()
    }

    /// `sign · q^e` for `sign ∈ {1, -1}`.
    pub fn signed_q_pow(sign: i64, e: i64) -> Self {
        LaurentPoly::monomial(e, rat(sign)).into()
    }

    pub fn from_int(n: i64) -> Self {
        LaurentPoly::from_int(n).into()
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The Laurent polynomial this scalar equals, if it is one.
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    /// `Some((sign, e))` when the scalar is `±q^e`.
    pub fn as_signed_monomial(&self) -> Option<(i64, i64)> {
        let (e, c) = self.as_laurent()?.as_monomial()?;
        if c.is_one() {
            Some((1, e))
        } else if (-c).is_one() {
            Some((-1, e))
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Self, ScalarError> {
        if rhs.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(self * &rhs.inv()?)
    }

    /// The substitution `q ↦ q^{-1}`.
    pub fn bar(&self) -> Self {
        if self.den.is_one() {
            return self.num.bar().into();
        }
        Self::normalize(self.num.bar(), self.den.bar())
    }

    /// Multiplication by `q^k`, cheap on the Laurent fast path.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            num: self.num.shift(k),
            den: self.den.clone(),
        }
    }
}

impl From<LaurentPoly> for Scalar {
    fn from(p: LaurentPoly) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return num.into();
            }
            return Scalar::normalize(num, self.den.clone());
        }
        Scalar::normalize(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.den.is_one() && rhs.den.is_one() {
            return (&self.num * &rhs.num).into();
        }
        Scalar::normalize(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

forward_owned!(Scalar, Add, add);
forward_owned!(Scalar, Sub, sub);
forward_owned!(Scalar, Mul, mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        if self.den.is_one() && rhs.den.is_one() {
            self.num += &rhs.num;
        } else {
            *self = &*self + rhs;
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self += &(-rhs);
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[derive(Deserialize)]
struct ScalarRepr {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = ScalarRepr::deserialize(d)?;
        Scalar::new(r.num, r.den).map_err(de::Error::custom)
    }
}

/// The quantum integer `[m] = q^{m-1} + q^{m-3} + … + q^{1-m}` as a polynomial.
pub fn qint_poly(m: i64) -> LaurentPoly {
    let p = LaurentPoly::from_int_terms(
        &(0..m.abs())
            .map(|t| (m.abs() - 1 - 2 * t, 1))
            .collect::<Vec<_>>(),
    );
    if m < 0 {
        -p
    } else {
        p
    }
}

/// The quantum integer `[m] = (q^m - q^{-m}) / (q - q^{-1})`.
pub fn qint(m: i64) -> Scalar {
    qint_poly(m).into()
}

/// Syntactic `q`-bracket `q^a + q^b`, common in the relation checks.
pub fn q_sum(exps: &[i64]) -> Scalar {
    LaurentPoly::from_int_terms(&exps.iter().map(|&e| (e, 1)).collect::<Vec<_>>()).into()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Scalar {
        Scalar::q_pow(1)
    }

    #[test]
    fn quantum_integers() {
        assert_eq!(qint(2), q_sum(&[1, -1]));
        assert!(qint(0).is_zero());
        assert!(qint(1).is_one());
        assert_eq!(qint(-3), -qint(3));
        for m in -6..=6 {
            assert_eq!(qint(m).bar(), qint(m));
        }
    }

    #[test]
    fn qint_product_expands() {
        let lhs = &qint(2) * &qint(2);
        assert_eq!(lhs, &qint(3) + &qint(1));
        assert_eq!(
            lhs,
            LaurentPoly::from_int_terms(&[(2, 1), (0, 2), (-2, 1)]).into()
        );
    }

    #[test]
    fn inverses_and_fractions() {
        let x = &q() - &Scalar::q_pow(-1);
        assert!((&x * &x.inv().unwrap()).is_one());
        assert!((&q() * &Scalar::q_pow(-1)).is_one());
        assert_eq!(Scalar::zero().inv(), Err(ScalarError::DivisionByZero));
        // (q^2 - 1) / (q - 1) = q + 1
        let num = LaurentPoly::from_int_terms(&[(2, 1), (0, -1)]);
        let den = LaurentPoly::from_int_terms(&[(1, 1), (0, -1)]);
        let s = Scalar::new(num, den).unwrap();
        assert_eq!(s, q_sum(&[1, 0]));
        // (q^2 - q^{-2}) / (q - q^{-1}) = [2]
        let s = (&Scalar::q_pow(2) - &Scalar::q_pow(-2))
            .checked_div(&x)
            .unwrap();
        assert_eq!(s, qint(2));
    }

    #[test]
    fn canonical_denominator() {
        let den = LaurentPoly::from_int_terms(&[(3, -2), (1, 4)]);
        let s = Scalar::new(LaurentPoly::from_int(1), den).unwrap();
        assert_eq!(s.den().min_exp(), Some(0));
        assert!(s.den().leading_coeff().unwrap().is_one());
        assert_eq!(s.bar().bar(), s);
    }

    #[test]
    fn json_shape() {
        let s = Scalar::from(LaurentPoly::from_terms([
            (-1, Rational::new(BigInt::from(1), BigInt::from(2))),
            (3, rat(-2)),
        ]));
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(
            j,
            r#"{"num":[{"exp":-1,"c":"1/2"},{"exp":3,"c":"-2/1"}],"den":[{"exp":0,"c":"1/1"}]}"#
        );
        let back: Scalar = serde_json::from_str(&j).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn display() {
        assert_eq!(qint(3).to_string(), "q^2 + 1 + q^-2");
        assert_eq!(Scalar::signed_q_pow(-1, 1).to_string(), "-q");
    }
}
