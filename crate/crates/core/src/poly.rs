//! Exact univariate polynomials over the rationals.
//!
//! Coefficients are stored ascending. The zero polynomial has an empty
//! coefficient list. Root finding is exact: square-free reduction followed by
//! the rational root theorem, with multiplicities recovered by deflation.
//! Factors irreducible over Q are reported as an unfactored residual, never
//! approximated.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::matrix::Matrix;
use crate::scalar::{Rational, Ring, Scalar};

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rational>, // ascending, no trailing zeros
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Polynomial {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Polynomial {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Polynomial {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Polynomial {
        Polynomial::new(vec![c])
    }

    pub fn x() -> Polynomial {
        Polynomial::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn from_i64(coeffs: &[i64]) -> Polynomial {
        Polynomial::new(coeffs.iter().map(|&c| Rational::from_int(c)).collect())
    }

    /// The monic product of `(x - r)` over the given roots.
    pub fn from_roots(roots: &[Rational]) -> Polynomial {
        let mut p = Polynomial::one();
        for r in roots {
            p = p.mul(&Polynomial::new(vec![-r.clone(), Rational::one()]));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == Rational::one()
    }

    /// Degree; the zero polynomial reports degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Rational::one()
    }

    pub fn add(&self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }

    pub fn sub(&self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Polynomial::new(out)
    }

    pub fn scale(&self, s: &Rational) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Polynomial) -> (Polynomial, Polynomial) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let mut rem = self.coeffs.clone();
        let dlen = divisor.coeffs.len();
        if rem.len() < dlen {
            return (Polynomial::zero(), self.clone());
        }
        let lead = divisor.leading();
        let mut quot = vec![Rational::zero(); rem.len() - dlen + 1];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + dlen - 1] / &lead;
            if q.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = &rem[k + i] - &(&q * d);
            }
            quot[k] = q;
        }
        (Polynomial::new(quot), Polynomial::new(rem))
    }

    pub fn divides(&self, other: &Polynomial) -> bool {
        other.div_rem(self).1.is_zero()
    }

    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| Rational::from_int(k as i64) * c)
                .collect(),
        )
    }

    pub fn monic(&self) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        self.scale(&self.leading().recip().unwrap())
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        if a.is_zero() {
            Polynomial::zero()
        } else {
            a.monic()
        }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Evaluates the polynomial at a square matrix (Horner).
    pub fn eval_matrix(&self, a: &Matrix<Rational>) -> Matrix<Rational> {
        assert!(a.is_square());
        let n = a.rows();
        let mut acc = Matrix::zero(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(a).unwrap();
            for i in 0..n {
                acc.set(i, i, acc.get(i, i) + c);
            }
        }
        acc
    }

    /// The square-free part `p / gcd(p, p')`, monic.
    pub fn square_free_part(&self) -> Polynomial {
        if self.degree() == 0 {
            return Polynomial::one();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            return self.monic();
        }
        self.div_rem(&g).0.monic()
    }

    /// True iff the polynomial factors into linear terms over Q.
    pub fn splits_over_q(&self) -> bool {
        let (roots, residual) = self.rational_roots();
        let _ = roots;
        residual.degree() == 0
    }

    /// All rational roots with multiplicities, plus the monic residual factor
    /// with no rational roots (the constant 1 when the polynomial splits).
    ///
    /// Roots are returned in ascending order.
    pub fn rational_roots(&self) -> (Vec<(Rational, usize)>, Polynomial) {
        assert!(!self.is_zero(), "roots of the zero polynomial");
        if self.degree() == 0 {
            return (Vec::new(), Polynomial::one());
        }
        let mut candidates = Vec::new();
        let sqfree = self.square_free_part();
        // Root 0 shows up as a zero constant term.
        if sqfree.coeff(0).is_zero() {
            candidates.push(Rational::zero());
        }
        let (nums, dens) = integer_candidates(&sqfree);
        for n in &nums {
            for d in &dens {
                let c = Rational::from_big(num_rational::BigRational::new(n.clone(), d.clone()));
                candidates.push(c.clone());
                candidates.push(-c);
            }
        }
        candidates.sort();
        candidates.dedup();
        let mut roots = Vec::new();
        let mut residual = self.monic();
        for c in candidates {
            if !sqfree.eval(&c).is_zero() {
                continue;
            }
            let linear = Polynomial::new(vec![-c.clone(), Rational::one()]);
            let mut mult = 0;
            loop {
                let (q, r) = residual.div_rem(&linear);
                if !r.is_zero() {
                    break;
                }
                residual = q;
                mult += 1;
            }
            debug_assert!(mult > 0);
            roots.push((c, mult));
        }
        (roots, residual.monic())
    }
}

/// Numerator/denominator candidates for the rational root theorem: divisors
/// of the cleared constant term and of the cleared leading coefficient.
fn integer_candidates(p: &Polynomial) -> (Vec<BigInt>, Vec<BigInt>) {
    // Clear denominators to a primitive integer polynomial.
    let mut lcm = BigInt::one();
    for c in p.coeffs() {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let constant = ints
        .iter()
        .find(|c| !c.is_zero())
        .cloned()
        .unwrap_or_else(BigInt::one);
    let leading = ints.last().cloned().unwrap_or_else(BigInt::one);
    (divisors(&constant.abs()), divisors(&leading.abs()))
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    let mut divs = Vec::new();
    let mut i = BigInt::one();
    loop {
        let i_sq = &i * &i;
        if i_sq > *n {
            break;
        }
        if (n % &i).is_zero() {
            divs.push(i.clone());
            let other = n / &i;
            if other != i {
                divs.push(other);
            }
        }
        i += 1;
    }
    divs
}

impl fmt::Display for Polynomial {
    /// Ascending canonical form, e.g. `-4 + 8*x - 5*x^2 + x^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = mag == Rational::one();
            match k {
                0 => write!(f, "{}", mag)?,
                1 => {
                    if unit {
                        write!(f, "x")?
                    } else {
                        write!(f, "{}*x", mag)?
                    }
                }
                _ => {
                    if unit {
                        write!(f, "x^{}", k)?
                    } else {
                        write!(f, "{}*x^{}", mag, k)?
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl serde::Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// An ordered pair of polynomials; characteristic and minimal bipolynomials
/// are monic with degrees matching the component orders.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct BiPolynomial {
    pub first: Polynomial,
    pub second: Polynomial,
}

impl BiPolynomial {
    pub fn new(first: Polynomial, second: Polynomial) -> BiPolynomial {
        BiPolynomial { first, second }
    }
}

impl fmt::Display for BiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) ∪ ({})", self.first, self.second)
    }
}
