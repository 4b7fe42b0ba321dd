//! Exact scalar rings.
//!
//! Three scalar types are shipped:
//!
//! * [`Rational`] — arbitrary-precision rationals in canonical form,
//! * [`NeutrosophicScalar`] — the ring `Q(I)` of values `a + bI` where the
//!   indeterminacy satisfies `I^2 = I`,
//! * [`FuzzyNeutroValue`] — the value lattice `[0,1] ∪ {tI | t ∈ (0,1]}`
//!   composed by min/max with the indeterminacy absorption rules.
//!
//! Every value is immutable and every operation is a pure function.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Anything that can sit in a matrix entry: cloneable, comparable,
/// displayable, with a zero test. All three shipped scalar types implement
/// this; only the two ring scalars implement [`Ring`] on top.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn is_zero(&self) -> bool;
}

/// Ring operations needed by generic matrix arithmetic.
///
/// `Rational` and `NeutrosophicScalar` implement this; the fuzzy lattice does
/// not (it has no additive structure).
pub trait Ring:
    Scalar + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
}

// ---------------------------------------------------------------------------
// Rational
// ---------------------------------------------------------------------------

/// An exact rational number, always in canonical form: positive denominator,
/// gcd(|numerator|, denominator) = 1. Arithmetic never rounds.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Rational {
        assert!(den != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_int(n: i64) -> Rational {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_big(r: BigRational) -> Rational {
        Rational(r)
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Rational {
        Rational(self.0.abs())
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn recip(&self) -> Option<Rational> {
        if self.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    /// Parses the rational token grammar: `-?digits(/digits)?` or the exact
    /// decimal form `-?digits.digits`. No whitespace inside a token.
    pub fn parse(token: &str) -> Result<Rational, String> {
        let bad = || format!("invalid rational token `{}`", token);
        let (neg, body) = match token.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, token),
        };
        if body.is_empty() {
            return Err(bad());
        }
        let value = if let Some((int_part, frac_part)) = body.split_once('.') {
            if int_part.is_empty()
                || frac_part.is_empty()
                || !all_digits(int_part)
                || !all_digits(frac_part)
            {
                return Err(bad());
            }
            let digits: String = format!("{}{}", int_part, frac_part);
            let numer: BigInt = digits.parse().map_err(|_| bad())?;
            let denom = BigInt::from(10u32).pow(frac_part.len() as u32);
            BigRational::new(numer, denom)
        } else if let Some((num, den)) = body.split_once('/') {
            if num.is_empty() || den.is_empty() || !all_digits(num) || !all_digits(den) {
                return Err(bad());
            }
            let numer: BigInt = num.parse().map_err(|_| bad())?;
            let denom: BigInt = den.parse().map_err(|_| bad())?;
            if denom.is_zero() {
                return Err(format!("zero denominator in `{}`", token));
            }
            BigRational::new(numer, denom)
        } else {
            if !all_digits(body) {
                return Err(bad());
            }
            BigRational::from_integer(body.parse().map_err(|_| bad())?)
        };
        Ok(Rational(if neg { -value } else { value }))
    }
}

fn all_digits(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
}

impl Scalar for Rational {
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl Ring for Rational {
    fn zero() -> Rational {
        Rational(BigRational::zero())
    }
    fn one() -> Rational {
        Rational(BigRational::one())
    }
}

impl fmt::Display for Rational {
    /// Canonical form: `p/q`, or just `p` when the denominator is 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl serde::Serialize for Rational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

macro_rules! forward_binop {
    ($t:ty, $trait:ident, $method:ident) => {
        impl $trait<$t> for $t {
            type Output = $t;
            fn $method(self, rhs: $t) -> $t {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&$t> for $t {
            type Output = $t;
            fn $method(self, rhs: &$t) -> $t {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<$t> for &$t {
            type Output = $t;
            fn $method(self, rhs: $t) -> $t {
                $trait::$method(self, &rhs)
            }
        }
    };
}

impl Add<&Rational> for &Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        Rational(&self.0 + &rhs.0)
    }
}
impl Sub<&Rational> for &Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        Rational(&self.0 - &rhs.0)
    }
}
impl Mul<&Rational> for &Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        Rational(&self.0 * &rhs.0)
    }
}
impl Div<&Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.0.is_zero(), "division by zero rational");
        Rational(&self.0 / &rhs.0)
    }
}
forward_binop!(Rational, Add, add);
forward_binop!(Rational, Sub, sub);
forward_binop!(Rational, Mul, mul);
forward_binop!(Rational, Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}
impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

/// Shorthand for integer-valued rationals in tests and examples.
pub fn rat(n: i64) -> Rational {
    Rational::from_int(n)
}

/// Shorthand for `n/d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

// ---------------------------------------------------------------------------
// NeutrosophicScalar
// ---------------------------------------------------------------------------

/// A neutrosophic scalar `a + bI` over exact rationals, with `I^2 = I`.
///
/// Multiplication follows from the defining relation:
/// `(a+bI)(c+dI) = ac + (ad+bc+bd)I`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NeutrosophicScalar {
    real: Rational,
    indet: Rational,
}

impl NeutrosophicScalar {
    pub fn new(real: Rational, indet: Rational) -> NeutrosophicScalar {
        NeutrosophicScalar { real, indet }
    }

    pub fn from_real(real: Rational) -> NeutrosophicScalar {
        NeutrosophicScalar::new(real, Rational::zero())
    }

    /// The pure indeterminacy `I`.
    pub fn i() -> NeutrosophicScalar {
        NeutrosophicScalar::new(Rational::zero(), Rational::one())
    }

    pub fn real_part(&self) -> &Rational {
        &self.real
    }

    pub fn indeterminate_part(&self) -> &Rational {
        &self.indet
    }

    pub fn has_indeterminacy(&self) -> bool {
        !self.indet.is_zero()
    }

    /// Evaluation homomorphism sending `I -> 0`.
    pub fn eval_at_zero(&self) -> Rational {
        self.real.clone()
    }

    /// Evaluation homomorphism sending `I -> 1`.
    pub fn eval_at_one(&self) -> Rational {
        &self.real + &self.indet
    }

    /// Parses `a`, `bI`, `a+bI`, `a-bI`; a bare `I` means `1I`.
    pub fn parse(token: &str) -> Result<NeutrosophicScalar, String> {
        if let Some(body) = token.strip_suffix('I') {
            if body.is_empty() {
                return Ok(NeutrosophicScalar::i());
            }
            if body == "-" {
                return Ok(NeutrosophicScalar::new(Rational::zero(), rat(-1)));
            }
            // A sign at position > 0 that follows a digit splits `a±bI`;
            // rational bodies only contain digits, `.` and `/` internally.
            let bytes = body.as_bytes();
            let split = (1..bytes.len()).rfind(|&i| {
                (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1].is_ascii_digit()
            });
            match split {
                Some(i) => {
                    let real = Rational::parse(&body[..i])?;
                    let coeff = &body[i..];
                    let indet = match coeff {
                        "+" => Rational::one(),
                        "-" => rat(-1),
                        _ => {
                            let sign = if coeff.starts_with('-') { -1 } else { 1 };
                            rat(sign) * Rational::parse(&coeff[1..])?
                        }
                    };
                    Ok(NeutrosophicScalar::new(real, indet))
                }
                None => Ok(NeutrosophicScalar::new(
                    Rational::zero(),
                    Rational::parse(body)?,
                )),
            }
        } else {
            Ok(NeutrosophicScalar::from_real(Rational::parse(token)?))
        }
    }
}

impl Scalar for NeutrosophicScalar {
    fn is_zero(&self) -> bool {
        self.real.is_zero() && self.indet.is_zero()
    }
}

impl Ring for NeutrosophicScalar {
    fn zero() -> NeutrosophicScalar {
        NeutrosophicScalar::from_real(Rational::zero())
    }
    fn one() -> NeutrosophicScalar {
        NeutrosophicScalar::from_real(Rational::one())
    }
}

impl fmt::Display for NeutrosophicScalar {
    /// Canonical form with normalized signs: `a`, `bI`, `a+bI` or `a-bI`,
    /// where a unit coefficient is written as a bare `I`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn coeff(f: &mut fmt::Formatter<'_>, b: &Rational) -> fmt::Result {
            if b.abs() == Rational::one() {
                write!(f, "I")
            } else {
                write!(f, "{}I", b.abs())
            }
        }
        if self.indet.is_zero() {
            return write!(f, "{}", self.real);
        }
        if self.real.is_zero() {
            if self.indet.is_negative() {
                write!(f, "-")?;
            }
            return coeff(f, &self.indet);
        }
        write!(f, "{}", self.real)?;
        write!(f, "{}", if self.indet.is_negative() { "-" } else { "+" })?;
        coeff(f, &self.indet)
    }
}

impl fmt::Debug for NeutrosophicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl serde::Serialize for NeutrosophicScalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl Add<&NeutrosophicScalar> for &NeutrosophicScalar {
    type Output = NeutrosophicScalar;
    fn add(self, rhs: &NeutrosophicScalar) -> NeutrosophicScalar {
        NeutrosophicScalar::new(&self.real + &rhs.real, &self.indet + &rhs.indet)
    }
}
impl Sub<&NeutrosophicScalar> for &NeutrosophicScalar {
    type Output = NeutrosophicScalar;
    fn sub(self, rhs: &NeutrosophicScalar) -> NeutrosophicScalar {
        NeutrosophicScalar::new(&self.real - &rhs.real, &self.indet - &rhs.indet)
    }
}
impl Mul<&NeutrosophicScalar> for &NeutrosophicScalar {
    type Output = NeutrosophicScalar;
    fn mul(self, rhs: &NeutrosophicScalar) -> NeutrosophicScalar {
        // (a+bI)(c+dI) = ac + (ad+bc+bd)I, forced by I^2 = I.
        let (a, b, c, d) = (&self.real, &self.indet, &rhs.real, &rhs.indet);
        NeutrosophicScalar::new(a * c, &(&(a * d) + &(b * c)) + &(b * d))
    }
}
forward_binop!(NeutrosophicScalar, Add, add);
forward_binop!(NeutrosophicScalar, Sub, sub);
forward_binop!(NeutrosophicScalar, Mul, mul);

impl Neg for NeutrosophicScalar {
    type Output = NeutrosophicScalar;
    fn neg(self) -> NeutrosophicScalar {
        NeutrosophicScalar::new(-self.real, -self.indet)
    }
}
impl Neg for &NeutrosophicScalar {
    type Output = NeutrosophicScalar;
    fn neg(self) -> NeutrosophicScalar {
        NeutrosophicScalar::new(-&self.real, -&self.indet)
    }
}

// ---------------------------------------------------------------------------
// FuzzyNeutroValue
// ---------------------------------------------------------------------------

/// A value of the fuzzy neutrosophic set `N_s = [0,1] ∪ {tI | t ∈ (0,1]}`.
///
/// The pure indeterminacy `I` is `Indeterminate` with magnitude 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum FuzzyNeutroValue {
    Real(Rational),
    Indeterminate(Rational),
}

impl FuzzyNeutroValue {
    pub fn real(r: Rational) -> Result<FuzzyNeutroValue, String> {
        if r.is_negative() || r > Rational::one() {
            Err(format!("fuzzy value {} outside [0,1]", r))
        } else {
            Ok(FuzzyNeutroValue::Real(r))
        }
    }

    pub fn indeterminate(t: Rational) -> Result<FuzzyNeutroValue, String> {
        if t <= Rational::zero() || t > Rational::one() {
            Err(format!("indeterminate magnitude {} outside (0,1]", t))
        } else {
            Ok(FuzzyNeutroValue::Indeterminate(t))
        }
    }

    /// The pure indeterminacy `I`.
    pub fn i() -> FuzzyNeutroValue {
        FuzzyNeutroValue::Indeterminate(Rational::one())
    }

    pub fn zero() -> FuzzyNeutroValue {
        FuzzyNeutroValue::Real(Rational::zero())
    }

    pub fn one() -> FuzzyNeutroValue {
        FuzzyNeutroValue::Real(Rational::one())
    }

    pub fn is_indeterminate(&self) -> bool {
        matches!(self, FuzzyNeutroValue::Indeterminate(_))
    }

    /// Minimum with the absorption rules of the composition map:
    /// `min(0, tI) = 0`, otherwise a real against an indeterminate yields the
    /// indeterminate; two indeterminates compare by magnitude.
    pub fn min(&self, other: &FuzzyNeutroValue) -> FuzzyNeutroValue {
        use FuzzyNeutroValue::*;
        match (self, other) {
            (Real(p), Real(q)) => Real(p.clone().min(q.clone())),
            (Indeterminate(t), Indeterminate(s)) => Indeterminate(t.clone().min(s.clone())),
            (Real(p), Indeterminate(t)) | (Indeterminate(t), Real(p)) => {
                if p.is_zero() {
                    Real(Rational::zero())
                } else {
                    Indeterminate(t.clone())
                }
            }
        }
    }

    /// Maximum with the absorption rules: `max(1, tI) = I` (pure), otherwise
    /// a real against an indeterminate yields the indeterminate; two
    /// indeterminates compare by magnitude.
    pub fn max(&self, other: &FuzzyNeutroValue) -> FuzzyNeutroValue {
        use FuzzyNeutroValue::*;
        match (self, other) {
            (Real(p), Real(q)) => Real(p.clone().max(q.clone())),
            (Indeterminate(t), Indeterminate(s)) => Indeterminate(t.clone().max(s.clone())),
            (Real(p), Indeterminate(t)) | (Indeterminate(t), Real(p)) => {
                if *p == Rational::one() {
                    FuzzyNeutroValue::i()
                } else {
                    Indeterminate(t.clone())
                }
            }
        }
    }

    /// The ring view: `Real r -> r + 0I`, `tI -> 0 + tI`.
    pub fn to_neutrosophic(&self) -> NeutrosophicScalar {
        match self {
            FuzzyNeutroValue::Real(r) => NeutrosophicScalar::from_real(r.clone()),
            FuzzyNeutroValue::Indeterminate(t) => {
                NeutrosophicScalar::new(Rational::zero(), t.clone())
            }
        }
    }

    /// Converts a ring scalar into the lattice, when it lies in `N_s`.
    pub fn from_neutrosophic(n: &NeutrosophicScalar) -> Result<FuzzyNeutroValue, String> {
        if n.indeterminate_part().is_zero() {
            FuzzyNeutroValue::real(n.real_part().clone())
        } else if n.real_part().is_zero() {
            FuzzyNeutroValue::indeterminate(n.indeterminate_part().clone())
        } else {
            Err(format!("{} is not in N_s", n))
        }
    }

    /// Parses `0.3`, `3/10`, `I`, `0.2I`.
    pub fn parse(token: &str) -> Result<FuzzyNeutroValue, String> {
        if token == "I" {
            return Ok(FuzzyNeutroValue::i());
        }
        if let Some(body) = token.strip_suffix('I') {
            FuzzyNeutroValue::indeterminate(Rational::parse(body)?)
        } else {
            FuzzyNeutroValue::real(Rational::parse(token)?)
        }
    }
}

impl Scalar for FuzzyNeutroValue {
    fn is_zero(&self) -> bool {
        matches!(self, FuzzyNeutroValue::Real(r) if r.is_zero())
    }
}

impl fmt::Display for FuzzyNeutroValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FuzzyNeutroValue::Real(r) => write!(f, "{}", r),
            FuzzyNeutroValue::Indeterminate(t) => {
                if *t == Rational::one() {
                    write!(f, "I")
                } else {
                    write!(f, "{}I", t)
                }
            }
        }
    }
}

impl fmt::Debug for FuzzyNeutroValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl serde::Serialize for FuzzyNeutroValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ns(a: i64, b: i64) -> NeutrosophicScalar {
        NeutrosophicScalar::new(rat(a), rat(b))
    }

    #[test]
    fn neutro_add_examples() {
        // I + I = 2I
        assert_eq!(&ns(0, 1) + &ns(0, 1), ns(0, 2));
        assert_eq!(&ns(2, 0) + &ns(0, 3), ns(2, 3));
        assert_eq!(&ns(1, -1) + &ns(-1, 1), NeutrosophicScalar::zero());
    }

    #[test]
    fn neutro_mul_examples() {
        // I * I = I^2 = I
        assert_eq!(&ns(0, 1) * &ns(0, 1), ns(0, 1));
        // (-I)(3I) = -3I
        assert_eq!(&ns(0, -1) * &ns(0, 3), ns(0, -3));
        // (1+I)(1+I) = 1+3I
        assert_eq!(&ns(1, 1) * &ns(1, 1), ns(1, 3));
    }

    #[test]
    fn neutro_ring_laws_on_generated_set() {
        let mut values = Vec::new();
        for a in -2..=2 {
            for b in -2..=2 {
                values.push(ns(a, b));
            }
        }
        for x in &values {
            for y in &values {
                assert_eq!(x * y, y * x);
                assert_eq!(x + y, y + x);
                for z in &values {
                    assert_eq!(&(x + y) + z, x + &(y + z));
                    assert_eq!(&(x * y) * z, x * &(y * z));
                    assert_eq!(x * &(y + z), &(x * y) + &(x * z));
                }
            }
        }
    }

    #[test]
    fn evaluation_homomorphisms() {
        let values: Vec<_> = (-2..=2)
            .flat_map(|a| (-2..=2).map(move |b| ns(a, b)))
            .collect();
        for x in &values {
            for y in &values {
                let sum = x + y;
                let prod = x * y;
                assert_eq!(sum.eval_at_zero(), x.eval_at_zero() + y.eval_at_zero());
                assert_eq!(sum.eval_at_one(), x.eval_at_one() + y.eval_at_one());
                assert_eq!(prod.eval_at_zero(), x.eval_at_zero() * y.eval_at_zero());
                assert_eq!(prod.eval_at_one(), x.eval_at_one() * y.eval_at_one());
            }
        }
    }

    #[test]
    fn fuzzy_min_absorption() {
        let i = FuzzyNeutroValue::i();
        let zero = FuzzyNeutroValue::zero();
        let p3 = FuzzyNeutroValue::real(ratio(3, 10)).unwrap();
        assert_eq!(zero.min(&i), zero);
        assert_eq!(p3.min(&i), i);
        let p1 = FuzzyNeutroValue::real(ratio(1, 10)).unwrap();
        let p4 = FuzzyNeutroValue::real(ratio(4, 10)).unwrap();
        assert_eq!(p1.min(&p4), p1);
    }

    #[test]
    fn fuzzy_max_absorption() {
        let i = FuzzyNeutroValue::i();
        let one = FuzzyNeutroValue::one();
        let p2 = FuzzyNeutroValue::real(ratio(2, 10)).unwrap();
        assert_eq!(one.max(&i), i);
        assert_eq!(p2.max(&i), i);
        let p1 = FuzzyNeutroValue::real(ratio(1, 10)).unwrap();
        let p4 = FuzzyNeutroValue::real(ratio(4, 10)).unwrap();
        assert_eq!(p1.max(&p4), p4);
    }

    #[test]
    fn fuzzy_graded_rules() {
        let t2 = FuzzyNeutroValue::indeterminate(ratio(2, 10)).unwrap();
        let t7 = FuzzyNeutroValue::indeterminate(ratio(7, 10)).unwrap();
        assert_eq!(t2.min(&t7), t2);
        assert_eq!(t2.max(&t7), t7);
        let p5 = FuzzyNeutroValue::real(ratio(5, 10)).unwrap();
        assert_eq!(p5.min(&t2), t2);
        assert_eq!(p5.max(&t2), t2);
        // edges: min(tI, 0) = 0 and max(tI, 1) = pure I
        assert_eq!(t7.min(&FuzzyNeutroValue::zero()), FuzzyNeutroValue::zero());
        assert_eq!(t7.max(&FuzzyNeutroValue::one()), FuzzyNeutroValue::i());
    }

    #[test]
    fn fuzzy_lattice_laws_on_carrier() {
        // commutativity, idempotence, and associativity checked by
        // exhaustive enumeration over {0, 0.5, 1, I}.
        let carrier = [
            FuzzyNeutroValue::zero(),
            FuzzyNeutroValue::real(ratio(1, 2)).unwrap(),
            FuzzyNeutroValue::one(),
            FuzzyNeutroValue::i(),
        ];
        for x in &carrier {
            assert_eq!(x.min(x), *x);
            assert_eq!(x.max(x), *x);
            for y in &carrier {
                assert_eq!(x.min(y), y.min(x));
                assert_eq!(x.max(y), y.max(x));
                for z in &carrier {
                    assert_eq!(x.min(&y.min(z)), x.min(y).min(z));
                    assert_eq!(x.max(&y.max(z)), x.max(y).max(z));
                }
            }
        }
    }

    #[test]
    fn rational_parse_and_format() {
        assert_eq!(Rational::parse("-3/6").unwrap(), ratio(-1, 2));
        assert_eq!(Rational::parse("0.25").unwrap(), ratio(1, 4));
        assert_eq!(Rational::parse("-0.3").unwrap(), ratio(-3, 10));
        assert_eq!(Rational::parse("7").unwrap().to_string(), "7");
        assert_eq!(ratio(-1, 2).to_string(), "-1/2");
        assert!(Rational::parse("1/0").is_err());
        assert!(Rational::parse("2.").is_err());
        assert!(Rational::parse(".5").is_err());
        assert!(Rational::parse("").is_err());
    }

    #[test]
    fn neutro_parse_and_format() {
        assert_eq!(NeutrosophicScalar::parse("I").unwrap(), ns(0, 1));
        assert_eq!(NeutrosophicScalar::parse("-I").unwrap(), ns(0, -1));
        assert_eq!(NeutrosophicScalar::parse("2+3I").unwrap(), ns(2, 3));
        assert_eq!(NeutrosophicScalar::parse("2-3I").unwrap(), ns(2, -3));
        assert!(NeutrosophicScalar::parse("-6I+2").is_err());
        assert_eq!(
            NeutrosophicScalar::parse("-1/2-3/4I").unwrap(),
            NeutrosophicScalar::new(ratio(-1, 2), ratio(-3, 4))
        );
        assert_eq!(ns(2, -6).to_string(), "2-6I");
        assert_eq!(ns(0, -1).to_string(), "-I");
        assert_eq!(ns(2, 1).to_string(), "2+I");
        assert_eq!(ns(-3, 0).to_string(), "-3");
        assert_eq!(
            NeutrosophicScalar::parse("0.5I").unwrap().to_string(),
            "1/2I"
        );
    }

    #[test]
    fn fuzzy_parse_and_format() {
        assert_eq!(FuzzyNeutroValue::parse("I").unwrap(), FuzzyNeutroValue::i());
        assert_eq!(FuzzyNeutroValue::parse("0.2I").unwrap().to_string(), "1/5I");
        assert_eq!(FuzzyNeutroValue::parse("0.3").unwrap().to_string(), "3/10");
        assert!(FuzzyNeutroValue::parse("1.5").is_err());
        assert!(FuzzyNeutroValue::parse("0I").is_err());
        assert!(FuzzyNeutroValue::parse("-0.1").is_err());
    }
}
