//! Exact scalars: rationals and elements `a + b·√r` of a single quadratic
//! extension of the rationals.
//!
//! A [`Scalar`] is kept in canonical form at all times: the radicand is a
//! square-free integer `≥ 2`, and it is dropped entirely when the surd
//! coefficient is zero. Equality and hashing are therefore structural.
//! Arithmetic never leaves `Q(√r)`: combining two different radicands is an
//! error rather than a silent move into a larger field.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

fn small(q: &Rational) -> Option<(i128, i128)> {
    Some((q.numer().to_i64()?.into(), q.denom().to_i64()?.into()))
}

/// `n/d` from 128-bit parts, `d > 0`.
fn reduced(n: i128, d: i128) -> Rational {
    let g = n.gcd(&d);
    Rational::new_raw(BigInt::from(n / g), BigInt::from(d / g))
}

// Word-sized operands skip the bignum gcd; products of two i64 fit in i128.
fn rat_add(a: &Rational, b: &Rational) -> Rational {
    match (small(a), small(b)) {
        (Some((an, ad)), Some((bn, bd))) if ad == bd => reduced(an + bn, ad),
        (Some((an, ad)), Some((bn, bd))) => match (an * bd).checked_add(bn * ad) {
            Some(n) => reduced(n, ad * bd),
            None => a + b,
        },
        _ => a + b,
    }
}

fn rat_sub(a: &Rational, b: &Rational) -> Rational {
    match small(b) {
        Some((bn, bd)) => rat_add(a, &Rational::new_raw(BigInt::from(-bn), BigInt::from(bd))),
        None => a - b,
    }
}

fn rat_mul(a: &Rational, b: &Rational) -> Rational {
    match (small(a), small(b)) {
        (Some((an, ad)), Some((bn, bd))) => reduced(an * bn, ad * bd),
        _ => a * b,
    }
}

/// Outcome of an exact sign test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    fn of_rational(q: &Rational) -> Sign {
        if q.is_zero() {
            Sign::Zero
        } else if q.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

/// The arithmetic operations exposed through [`Scalar::arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Inv,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Surd {
    // never zero
    coefficient: Rational,
    // square-free, at least 2
    radicand: BigUint,
}

/// An exact value `rational_part + surd_coefficient·√radicand`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    rational: Rational,
    surd: Option<Surd>,
}

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            rational: Rational::zero(),
            surd: None,
        }
    }

    pub fn one() -> Self {
        Scalar::int(1)
    }

    pub fn int(n: i64) -> Self {
        Scalar::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    /// `numer/denom`; panics if `denom` is zero.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        Scalar::from_rational(rational(numer, denom))
    }

    pub fn from_rational(q: Rational) -> Self {
        Scalar {
            rational: q,
            surd: None,
        }
    }

    /// Builds `a + b·√r`, extracting square factors from `r` so the result is
    /// canonical. `r = 0` or a perfect square collapses to a rational.
    pub fn with_surd(a: Rational, b: Rational, radicand: BigUint) -> Self {
        let (outer, free) = square_free_split(&radicand);
        let b = b * Rational::from_integer(BigInt::from(outer));
        if b.is_zero() || free.is_zero() {
            return Scalar::from_rational(a);
        }
        if free.is_one() {
            return Scalar::from_rational(a + b);
        }
        Scalar {
            rational: a,
            surd: Some(Surd {
                coefficient: b,
                radicand: free,
            }),
        }
    }

    pub fn rational_part(&self) -> &Rational {
        &self.rational
    }

    /// Zero when the value is rational.
    pub fn surd_coefficient(&self) -> Rational {
        self.surd
            .as_ref()
            .map_or_else(Rational::zero, |s| s.coefficient.clone())
    }

    pub fn radicand(&self) -> Option<&BigUint> {
        self.surd.as_ref().map(|s| &s.radicand)
    }

    pub fn is_zero(&self) -> bool {
        self.surd.is_none() && self.rational.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.surd.is_none() && self.rational.is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.surd.is_none()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self.surd {
            None => Some(&self.rational),
            Some(_) => None,
        }
    }

    /// Radicand shared by `self` and `other`, or an error if they differ.
    fn common_radicand(&self, other: &Scalar) -> Result<Option<BigUint>> {
        match (&self.surd, &other.surd) {
            (Some(a), Some(b)) if a.radicand != b.radicand => Err(Error::MixedRadicands(
                a.radicand.clone(),
                b.radicand.clone(),
            )),
            (Some(a), _) => Ok(Some(a.radicand.clone())),
            (None, Some(b)) => Ok(Some(b.radicand.clone())),
            (None, None) => Ok(None),
        }
    }

    fn assemble(a: Rational, b: Rational, radicand: Option<BigUint>) -> Self {
        match radicand {
            Some(r) if !b.is_zero() => Scalar {
                rational: a,
                surd: Some(Surd {
                    coefficient: b,
                    radicand: r,
                }),
            },
            _ => Scalar::from_rational(a),
        }
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.surd.is_none() && other.surd.is_none() {
            return Ok(Scalar::from_rational(rat_add(
                &self.rational,
                &other.rational,
            )));
        }
        let r = self.common_radicand(other)?;
        Ok(Scalar::assemble(
            &self.rational + &other.rational,
            self.surd_coefficient() + other.surd_coefficient(),
            r,
        ))
    }

    pub fn sub(&self, other: &Scalar) -> Result<Scalar> {
        if self.surd.is_none() && other.surd.is_none() {
            return Ok(Scalar::from_rational(rat_sub(
                &self.rational,
                &other.rational,
            )));
        }
        let r = self.common_radicand(other)?;
        Ok(Scalar::assemble(
            &self.rational - &other.rational,
            self.surd_coefficient() - other.surd_coefficient(),
            r,
        ))
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar> {
        if self.is_zero() || other.is_zero() {
            return Ok(Scalar::zero());
        }
        if self.is_one() {
            return Ok(other.clone());
        }
        if other.is_one() {
            return Ok(self.clone());
        }
        match (&self.surd, &other.surd) {
            (None, None) => Ok(Scalar::from_rational(rat_mul(
                &self.rational,
                &other.rational,
            ))),
            (None, Some(s)) => Ok(Scalar::assemble(
                &self.rational * &other.rational,
                &self.rational * &s.coefficient,
                Some(s.radicand.clone()),
            )),
            (Some(s), None) => Ok(Scalar::assemble(
                &self.rational * &other.rational,
                &s.coefficient * &other.rational,
                Some(s.radicand.clone()),
            )),
            (Some(x), Some(y)) => {
                if x.radicand != y.radicand {
                    return Err(Error::MixedRadicands(
                        x.radicand.clone(),
                        y.radicand.clone(),
                    ));
                }
                let r = Rational::from_integer(BigInt::from(x.radicand.clone()));
                let a = &self.rational * &other.rational + &x.coefficient * &y.coefficient * r;
                let b = &self.rational * &y.coefficient + &x.coefficient * &other.rational;
                Ok(Scalar::assemble(a, b, Some(x.radicand.clone())))
            }
        }
    }

    pub fn neg(&self) -> Scalar {
        Scalar {
            rational: -&self.rational,
            surd: self.surd.as_ref().map(|s| Surd {
                coefficient: -&s.coefficient,
                radicand: s.radicand.clone(),
            }),
        }
    }

    /// Algebraic conjugate `a − b·√r`.
    pub fn conjugate(&self) -> Scalar {
        Scalar {
            rational: self.rational.clone(),
            surd: self.surd.as_ref().map(|s| Surd {
                coefficient: -&s.coefficient,
                radicand: s.radicand.clone(),
            }),
        }
    }

    /// Field norm `a² − b²·r`; zero only for zero.
    pub fn norm(&self) -> Rational {
        match &self.surd {
            None => &self.rational * &self.rational,
            Some(s) => {
                let r = Rational::from_integer(BigInt::from(s.radicand.clone()));
                &self.rational * &self.rational - &s.coefficient * &s.coefficient * r
            }
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match &self.surd {
            None => Ok(Scalar::from_rational(self.rational.recip())),
            Some(s) => {
                let n = self.norm();
                Ok(Scalar::assemble(
                    &self.rational / &n,
                    -(&s.coefficient / &n),
                    Some(s.radicand.clone()),
                ))
            }
        }
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.surd.is_none() && other.surd.is_none() {
            return Ok(Scalar::from_rational(&self.rational / &other.rational));
        }
        self.common_radicand(other)?;
        self.mul(&other.inv()?)
    }

    /// Dispatches one of the six field operations. Binary operations require
    /// `y`; unary ones ignore it.
    pub fn arith(op: ArithOp, x: &Scalar, y: Option<&Scalar>) -> Result<Scalar> {
        let rhs = || y.ok_or_else(|| Error::InvalidConfig(format!("{op:?} needs two operands")));
        match op {
            ArithOp::Add => x.add(rhs()?),
            ArithOp::Sub => x.sub(rhs()?),
            ArithOp::Mul => x.mul(rhs()?),
            ArithOp::Div => x.div(rhs()?),
            ArithOp::Neg => Ok(x.neg()),
            ArithOp::Inv => x.inv(),
        }
    }

    pub fn square(&self) -> Scalar {
        self.mul(self).expect("a scalar shares its own radicand")
    }

    /// Exact sign without any floating-point approximation.
    pub fn sign(&self) -> Sign {
        let a = Sign::of_rational(&self.rational);
        let s = match &self.surd {
            None => return a,
            Some(s) => s,
        };
        let b = Sign::of_rational(&s.coefficient);
        match (a, b) {
            (Sign::Zero, b) => b,
            (a, b) if a == b => a,
            (a, _) => {
                // opposite signs: the larger magnitude wins
                let r = Rational::from_integer(BigInt::from(s.radicand.clone()));
                let a2 = &self.rational * &self.rational;
                let b2r = &s.coefficient * &s.coefficient * r;
                match a2.cmp(&b2r) {
                    Ordering::Greater => a,
                    Ordering::Less => {
                        if a == Sign::Positive {
                            Sign::Negative
                        } else {
                            Sign::Positive
                        }
                    }
                    // a² = b²r is impossible for square-free r ≥ 2 and b ≠ 0
                    Ordering::Equal => unreachable!("non-canonical surd"),
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() == Sign::Positive
    }

    pub fn is_negative(&self) -> bool {
        self.sign() == Sign::Negative
    }

    pub fn abs(&self) -> Scalar {
        if self.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Exact comparison; fails only on mixed radicands.
    pub fn try_cmp(&self, other: &Scalar) -> Result<Ordering> {
        Ok(match self.sub(other)?.sign() {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        })
    }

    /// Nearest `f64`, for diagnostics only.
    pub fn to_f64(&self) -> f64 {
        let a = self.rational.to_f64().unwrap_or(f64::NAN);
        match &self.surd {
            None => a,
            Some(s) => {
                let b = s.coefficient.to_f64().unwrap_or(f64::NAN);
                let r = s.radicand.to_f64().unwrap_or(f64::NAN);
                a + b * r.sqrt()
            }
        }
    }

    /// Square root of a rational; the result is rational when possible and a
    /// canonical surd otherwise.
    pub fn sqrt(x: &Rational) -> Result<Scalar> {
        if x.is_negative() {
            return Err(Error::NegativeRadicand(x.to_string()));
        }
        // √(p/q) = √(p·q)/q
        let p = x.numer().magnitude().clone();
        let q = x.denom().magnitude().clone();
        let coefficient = Rational::new(BigInt::one(), BigInt::from(q.clone()));
        Ok(Scalar::with_surd(Rational::zero(), coefficient, p * q))
    }

    /// Square root of a scalar. Rationals go through [`Scalar::sqrt`]; for
    /// `a + b√r` a root `p + q√r` inside the same field is searched for and
    /// [`Error::NotRepresentable`] is returned when none exists.
    pub fn sqrt_scalar(x: &Scalar) -> Result<Scalar> {
        let s = match &x.surd {
            None => return Scalar::sqrt(&x.rational),
            Some(s) => s,
        };
        if x.is_negative() {
            return Err(Error::NegativeRadicand(x.to_string()));
        }
        // (p + q√r)² = p² + q²r + 2pq√r, so p² solves y² − a·y + b²r/4 = 0
        let r = Rational::from_integer(BigInt::from(s.radicand.clone()));
        let a = &x.rational;
        let b = &s.coefficient;
        let disc = a * a - b * b * &r;
        if disc.is_negative() {
            return Err(Error::NotRepresentable(x.to_string()));
        }
        let disc_root = match Scalar::sqrt(&disc)?.as_rational() {
            Some(d) => d.clone(),
            None => return Err(Error::NotRepresentable(x.to_string())),
        };
        let two = Rational::from_integer(BigInt::from(2));
        for p2 in [(a + &disc_root) / &two, (a - &disc_root) / &two] {
            if p2.is_negative() || p2.is_zero() {
                continue;
            }
            if let Some(p) = Scalar::sqrt(&p2)?.as_rational() {
                let q = b / (&two * p);
                let root = Scalar::assemble(p.clone(), q, Some(s.radicand.clone()));
                let root = root.abs();
                if root.square() == *x {
                    return Ok(root);
                }
            }
        }
        Err(Error::NotRepresentable(x.to_string()))
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl From<Rational> for Scalar {
    fn from(q: Rational) -> Self {
        Scalar::from_rational(q)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.surd {
            None => write!(f, "{}", self.rational),
            Some(s) => write!(
                f,
                "{}+{}*sqrt({})",
                self.rational, s.coefficient, s.radicand
            ),
        }
    }
}

fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (numer, denom) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let valid = |s: &str, allow_sign: bool| {
        let digits = if allow_sign {
            s.strip_prefix('-').unwrap_or(s)
        } else {
            s
        };
        !digits.is_empty() && digits.bytes().all(|c| c.is_ascii_digit())
    };
    if !valid(numer, true) || !valid(denom, false) {
        return None;
    }
    let n = BigInt::from_str(numer).ok()?;
    let d = BigInt::from_str(denom).ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

impl FromStr for Scalar {
    type Err = Error;

    /// Accepts `p`, `p/q`, and `a+b*sqrt(r)`.
    fn from_str(text: &str) -> Result<Scalar> {
        let bad = || Error::ParseScalar(text.to_string());
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let Some(body) = t.strip_suffix(')') else {
            return parse_rational(&t)
                .map(Scalar::from_rational)
                .ok_or_else(bad);
        };
        let (head, radicand) = body.split_once("*sqrt(").ok_or_else(bad)?;
        // the separating '+' is the first one after a possible leading sign
        let split = head[1..].find('+').map(|i| i + 1).ok_or_else(bad)?;
        let a = parse_rational(&head[..split]).ok_or_else(bad)?;
        let b = parse_rational(&head[split + 1..]).ok_or_else(bad)?;
        if radicand.is_empty() || !radicand.bytes().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let r = BigUint::from_str(radicand).map_err(|_| bad())?;
        Ok(Scalar::with_surd(a, b, r))
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Splits `n` as `outer² · free` with `free` square-free.
///
/// Trial division only runs up to the cube root of the unfactored part: once
/// no prime below `d` divides a cofactor `m < d³`, `m` has at most two prime
/// factors, so it is square-free unless it is a perfect square.
pub fn square_free_split(n: &BigUint) -> (BigUint, BigUint) {
    if n.is_zero() {
        return (BigUint::zero(), BigUint::zero());
    }
    let root = n.sqrt();
    if &root * &root == *n {
        return (root, BigUint::one());
    }
    let mut rest = n.clone();
    let mut outer = BigUint::one();
    let mut free = BigUint::one();
    let mut d = BigUint::from(2u32);
    while &d * &d * &d <= rest {
        let mut exp = 0u32;
        while (&rest % &d).is_zero() {
            rest /= &d;
            exp += 1;
        }
        for _ in 0..exp / 2 {
            outer *= &d;
        }
        if exp % 2 == 1 {
            free *= &d;
        }
        d += if d == BigUint::from(2u32) { 1u32 } else { 2u32 };
    }
    let root = rest.sqrt();
    if &root * &root == rest {
        outer *= root;
    } else {
        free *= rest;
    }
    (outer, free)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    fn sqrt2() -> Scalar {
        Scalar::with_surd(Rational::zero(), Rational::one(), BigUint::from(2u32))
    }

    #[test]
    fn rational_addition() {
        assert_eq!(s("1/2").add(&s("1/3")).unwrap(), s("5/6"));
    }

    #[test]
    fn difference_of_squares() {
        let a = Scalar::one().add(&sqrt2()).unwrap();
        let b = Scalar::one().sub(&sqrt2()).unwrap();
        let p = a.mul(&b).unwrap();
        assert_eq!(p, Scalar::int(-1));
        assert!(p.is_rational());
    }

    #[test]
    fn inverse_of_zero() {
        assert_eq!(Scalar::zero().inv(), Err(Error::DivisionByZero));
        assert_eq!(
            Scalar::one().div(&Scalar::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn surd_inverse() {
        let x = s("1+1*sqrt(2)");
        // 1/(1+√2) = √2 − 1
        assert_eq!(x.inv().unwrap(), s("-1+1*sqrt(2)"));
        assert_eq!(x.mul(&x.inv().unwrap()).unwrap(), Scalar::one());
    }

    #[test]
    fn mixed_radicands_rejected() {
        let r2 = s("0+1*sqrt(2)");
        let r3 = s("0+1*sqrt(3)");
        assert!(matches!(r2.add(&r3), Err(Error::MixedRadicands(_, _))));
        assert!(matches!(r2.mul(&r3), Err(Error::MixedRadicands(_, _))));
        assert!(matches!(r2.div(&r3), Err(Error::MixedRadicands(_, _))));
        // rationals mix freely with either field
        assert!(r2.add(&Scalar::int(3)).is_ok());
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(Scalar::sqrt(&rational(9, 4)).unwrap(), s("3/2"));
        let r8 = Scalar::sqrt(&rational(8, 1)).unwrap();
        assert_eq!(r8.rational_part(), &Rational::zero());
        assert_eq!(r8.surd_coefficient(), rational(2, 1));
        assert_eq!(r8.radicand(), Some(&BigUint::from(2u32)));
        assert!(matches!(
            Scalar::sqrt(&rational(-1, 1)),
            Err(Error::NegativeRadicand(_))
        ));
        // √(1/2) = √2/2
        assert_eq!(Scalar::sqrt(&rational(1, 2)).unwrap(), s("0+1/2*sqrt(2)"));
    }

    #[test]
    fn sqrt_of_surd_denests_when_possible() {
        // (1 + √2)² = 3 + 2√2
        assert_eq!(
            Scalar::sqrt_scalar(&s("3+2*sqrt(2)")).unwrap(),
            s("1+1*sqrt(2)")
        );
        assert!(matches!(
            Scalar::sqrt_scalar(&s("1+1*sqrt(2)")),
            Err(Error::NotRepresentable(_))
        ));
    }

    #[test]
    fn sign_examples() {
        assert_eq!(Scalar::zero().sign(), Sign::Zero);
        assert_eq!(s("3/2").sign(), Sign::Positive);
        let x = s("1+-1*sqrt(2)");
        assert_eq!(x.sign(), Sign::Negative);
        assert!(x.to_f64() < 0.0);
        assert_eq!(s("-1+1*sqrt(2)").sign(), Sign::Positive);
        assert_eq!(s("2+-1*sqrt(3)").sign(), Sign::Positive);
        assert_eq!(s("-2+1*sqrt(3)").sign(), Sign::Negative);
    }

    #[test]
    fn canonical_text() {
        assert_eq!(s("6/8").to_string(), "3/4");
        assert_eq!(s("0+2*sqrt(8)").to_string(), "0+4*sqrt(2)");
        assert_eq!(s("1+0*sqrt(5)").to_string(), "1");
        assert_eq!(s("1+1*sqrt(4)").to_string(), "3");
        assert_eq!(s("-1/2+-3*sqrt(7)").to_string(), "-1/2+-3*sqrt(7)");
        for bad in ["", "1/0", "abc", "1+sqrt(2)", "1+2*sqrt(-2)", "1/-2", "--1"] {
            assert!(bad.parse::<Scalar>().is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn square_free_split_small() {
        for n in 1u32..2000 {
            let (outer, free) = square_free_split(&BigUint::from(n));
            assert_eq!(&outer * &outer * &free, BigUint::from(n));
            let f: u32 = free.try_into().unwrap();
            for p in 2..=f {
                if p * p > f {
                    break;
                }
                assert_ne!(f % (p * p), 0, "{n}: {f} not square-free");
            }
        }
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-50i64..50, 1i64..20).prop_map(|(n, d)| rational(n, d))
    }

    fn arb_surd() -> impl Strategy<Value = Scalar> {
        (arb_rational(), arb_rational())
            .prop_map(|(a, b)| Scalar::with_surd(a, b, BigUint::from(3u32)))
    }

    proptest! {
        #[test]
        fn field_axioms(x in arb_surd(), y in arb_surd(), z in arb_surd()) {
            prop_assert_eq!(x.add(&y)?.add(&z)?, x.add(&y.add(&z)?)?);
            prop_assert_eq!(x.mul(&y)?.mul(&z)?, x.mul(&y.mul(&z)?)?);
            prop_assert_eq!(x.mul(&y.add(&z)?)?, x.mul(&y)?.add(&x.mul(&z)?)?);
            prop_assert_eq!(x.add(&y)?, y.add(&x)?);
            prop_assert_eq!(x.sub(&x)?, Scalar::zero());
            if !x.is_zero() {
                prop_assert_eq!(x.mul(&x.inv()?)?, Scalar::one());
                prop_assert_eq!(y.div(&x)?.mul(&x)?, y);
            }
        }

        #[test]
        fn sqrt_squares_back(n in 0i64..10_000, d in 1i64..500) {
            let q = rational(n, d);
            let root = Scalar::sqrt(&q)?;
            prop_assert_eq!(root.square(), Scalar::from_rational(q));
            prop_assert!(root.sign() != Sign::Negative);
        }

        #[test]
        fn sign_agrees_with_products(x in arb_surd(), y in arb_surd()) {
            if x.is_positive() && y.is_positive() {
                prop_assert!(x.mul(&y)?.is_positive());
            }
            prop_assert!(x.square().sign() != Sign::Negative);
            let approx = x.to_f64();
            if approx.abs() > 1e-9 {
                prop_assert_eq!(x.is_positive(), approx > 0.0);
            }
        }

        #[test]
        fn word_sized_paths_match_bignum(
            an in any::<i64>(), ad in 1..=i64::MAX, bn in any::<i64>(), bd in 1..=i64::MAX,
        ) {
            let a = Rational::new(an.into(), ad.into());
            let b = Rational::new(bn.into(), bd.into());
            prop_assert_eq!(rat_add(&a, &b), &a + &b);
            prop_assert_eq!(rat_sub(&a, &b), &a - &b);
            prop_assert_eq!(rat_mul(&a, &b), &a * &b);
            let big = &a * Rational::from_integer(BigInt::from(u64::MAX));
            prop_assert_eq!(rat_add(&big, &b), &big + &b);
            prop_assert_eq!(rat_mul(&b, &big), &b * &big);
        }

        #[test]
        fn text_round_trip(x in arb_surd()) {
            let text = x.to_string();
            let back: Scalar = text.parse()?;
            prop_assert_eq!(&back, &x);
            prop_assert_eq!(back.to_string(), text);
        }
    }
}
