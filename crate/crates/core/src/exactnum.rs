//! Exact scalars: arbitrary-precision rationals and quaternions over them.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid rational literal `{0}`")]
    Invalid(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// Builds a rational from a small integer.
pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Builds `num/den` from small integers. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p"` or `"p/q"` with optional leading sign. Floating-point
/// notation is rejected.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let t = s.trim();
    if t.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let parse_int = |part: &str| -> Result<BigInt, ParseRationalError> {
        let part = part.trim();
        let digits = part.strip_prefix(['+', '-']).unwrap_or(part);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(ParseRationalError::Invalid(s.to_string()));
        }
        part.parse::<BigInt>()
            .map_err(|_| ParseRationalError::Invalid(s.to_string()))
    };
    match t.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(t)?)),
        Some((n, d)) => {
            let num = parse_int(n)?;
            let den = parse_int(d)?;
            if den.is_zero() {
                return Err(ParseRationalError::ZeroDenominator(s.to_string()));
            }
            Ok(Rational::new(num, den))
        }
    }
}

/// Formats as `"p"` for integers and `"p/q"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Levi-Civita symbol on quaternionic indices 1..=3 as a machine integer.
pub fn levi_civita(alpha: usize, beta: usize, gamma: usize) -> i32 {
    debug_assert!((1..=3).contains(&alpha) && (1..=3).contains(&beta) && (1..=3).contains(&gamma));
    match (alpha, beta, gamma) {
        (1, 2, 3) | (2, 3, 1) | (3, 1, 2) => 1,
        (2, 1, 3) | (1, 3, 2) | (3, 2, 1) => -1,
        _ => 0,
    }
}

/// Levi-Civita symbol with `ε₁₂₃ = 1`.
pub fn epsilon(alpha: usize, beta: usize, gamma: usize) -> Rational {
    int(levi_civita(alpha, beta, gamma) as i64)
}

/// The index completing `{alpha, beta}` to `{1, 2, 3}`; requires `alpha != beta`.
pub fn third_index(alpha: usize, beta: usize) -> usize {
    debug_assert!(alpha != beta);
    6 - alpha - beta
}

/// Quaternion `re + im1·i₁ + im2·i₂ + im3·i₃` with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Quaternion {
    pub re: Rational,
    pub im1: Rational,
    pub im2: Rational,
    pub im3: Rational,
}

impl Quaternion {
    pub fn new(re: Rational, im1: Rational, im2: Rational, im3: Rational) -> Self {
        Self { re, im1, im2, im3 }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::real(Rational::one())
    }

    pub fn real(re: Rational) -> Self {
        Self { re, ..Self::default() }
    }

    /// The imaginary unit `i_alpha`, `alpha ∈ {1, 2, 3}`.
    pub fn unit(alpha: usize) -> Self {
        Self::zero().with_imag(alpha, Rational::one())
    }

    /// `coeff · i_alpha`.
    pub fn pure(alpha: usize, coeff: Rational) -> Self {
        Self::zero().with_imag(alpha, coeff)
    }

    fn with_imag(mut self, alpha: usize, v: Rational) -> Self {
        match alpha {
            1 => self.im1 = v,
            2 => self.im2 = v,
            3 => self.im3 = v,
            _ => panic!("quaternionic index {alpha} out of range 1..=3"),
        }
        self
    }

    /// Imaginary coefficient along `i_alpha`.
    pub fn imag(&self, alpha: usize) -> &Rational {
        match alpha {
            1 => &self.im1,
            2 => &self.im2,
            3 => &self.im3,
            _ => panic!("quaternionic index {alpha} out of range 1..=3"),
        }
    }

    pub fn conj(&self) -> Self {
        Self {
            re: self.re.clone(),
            im1: -&self.im1,
            im2: -&self.im2,
            im3: -&self.im3,
        }
    }

    /// `re² + im1² + im2² + im3²`, equal to the real part of `q · conj(q)`.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im1 * &self.im1 + &self.im2 * &self.im2 + &self.im3 * &self.im3
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im1.is_zero() && self.im2.is_zero() && self.im3.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im1.is_zero() && self.im2.is_zero() && self.im3.is_zero()
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self {
            re: &self.re * k,
            im1: &self.im1 * k,
            im2: &self.im2 * k,
            im3: &self.im3 * k,
        }
    }
}

/// Quaternion product following `i_α i_β = −δ_αβ + Σ_γ ε_αβγ i_γ`.
pub fn quat_mul(a: &Quaternion, b: &Quaternion) -> Quaternion {
    Quaternion {
        re: &a.re * &b.re - &a.im1 * &b.im1 - &a.im2 * &b.im2 - &a.im3 * &b.im3,
        im1: &a.re * &b.im1 + &a.im1 * &b.re + &a.im2 * &b.im3 - &a.im3 * &b.im2,
        im2: &a.re * &b.im2 - &a.im1 * &b.im3 + &a.im2 * &b.re + &a.im3 * &b.im1,
        im3: &a.re * &b.im3 + &a.im1 * &b.im2 - &a.im2 * &b.im1 + &a.im3 * &b.re,
    }
}

impl Add for &Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: &Quaternion) -> Quaternion {
        Quaternion {
            re: &self.re + &rhs.re,
            im1: &self.im1 + &rhs.im1,
            im2: &self.im2 + &rhs.im2,
            im3: &self.im3 + &rhs.im3,
        }
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: Quaternion) -> Quaternion {
        &self + &rhs
    }
}

impl AddAssign<&Quaternion> for Quaternion {
    fn add_assign(&mut self, rhs: &Quaternion) {
        self.re += &rhs.re;
        self.im1 += &rhs.im1;
        self.im2 += &rhs.im2;
        self.im3 += &rhs.im3;
    }
}

impl Sub for &Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: &Quaternion) -> Quaternion {
        Quaternion {
            re: &self.re - &rhs.re,
            im1: &self.im1 - &rhs.im1,
            im2: &self.im2 - &rhs.im2,
            im3: &self.im3 - &rhs.im3,
        }
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: Quaternion) -> Quaternion {
        &self - &rhs
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion {
            re: -&self.re,
            im1: -&self.im1,
            im2: -&self.im2,
            im3: -&self.im3,
        }
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        -&self
    }
}

impl Mul for &Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: &Quaternion) -> Quaternion {
        quat_mul(self, rhs)
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: Quaternion) -> Quaternion {
        quat_mul(&self, &rhs)
    }
}

impl fmt::Display for Quaternion {
    /// Always prints all four slots: `a+bi+cj+dk`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.re)?;
        for (c, unit) in [(&self.im1, 'i'), (&self.im2, 'j'), (&self.im3, 'k')] {
            if c.is_negative() {
                write!(f, "-{}{}", -c, unit)?;
            } else {
                write!(f, "+{}{}", c, unit)?;
            }
        }
        Ok(())
    }
}
