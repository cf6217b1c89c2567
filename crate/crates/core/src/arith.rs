//! Exact arithmetic: arbitrary-precision integers, rationals, and the real
//! quadratic field `Q(√14)`.
//!
//! Every closed form in this crate evaluates inside `Q(√14)`; the element
//! `a + b√14` is stored as a pair of canonical rationals, so equality is
//! structural. No floating point enters this module.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use num_bigint::BigInt;
/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for the rational `n/d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// An element `a + b√14` of the real quadratic field `Q(√14)`.
///
/// The representation is unique because `√14` is irrational: two elements are
/// equal iff both coordinates are. Values are immutable; all operations are
/// pure functions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadNumber {
    pub a: Rational,
    pub b: Rational,
}

impl QuadNumber {
    pub fn new(a: Rational, b: Rational) -> Self {
        QuadNumber { a, b }
    }

    /// Embeds a rational into the field.
    pub fn from_rational(a: Rational) -> Self {
        QuadNumber { a, b: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat(n))
    }

    /// The element `p + q√14` with integer coordinates.
    pub fn from_pair(p: i64, q: i64) -> Self {
        QuadNumber { a: rat(p), b: rat(q) }
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The generator `√14` itself.
    pub fn sqrt14() -> Self {
        Self::from_pair(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Field conjugation `a + b√14 ↦ a − b√14`; a ring homomorphism.
    pub fn conjugate(&self) -> Self {
        QuadNumber { a: self.a.clone(), b: -self.b.clone() }
    }

    /// The field norm `a² − 14b²`; multiplicative, and zero only at zero.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - rat(14) * &self.b * &self.b
    }

    /// Multiplicative inverse via conjugate over norm.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        Ok(QuadNumber {
            a: &self.a / &n,
            b: -&self.b / &n,
        })
    }

    /// Exact non-negative power by repeated multiplication; `x⁰ = 1`.
    pub fn pow(&self, k: u32) -> Self {
        let mut acc = QuadNumber::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Signed power; negative exponents go through the inverse.
    pub fn powi(&self, k: i64) -> Result<Self> {
        if k >= 0 {
            Ok(self.pow(k as u32))
        } else {
            Ok(self.inv()?.pow((-k) as u32))
        }
    }

    /// Extracts the rational value of an element with no `√14` part.
    ///
    /// A nonzero `b` signals a formula transcription bug upstream, not a
    /// recoverable condition for the caller.
    pub fn to_rational(&self) -> Result<Rational> {
        if self.b.is_zero() {
            Ok(self.a.clone())
        } else {
            Err(Error::NotRational(self.to_string()))
        }
    }

    /// Extracts an exact integer value; errors when the element is not one.
    pub fn to_bigint(&self) -> Result<BigInt> {
        let r = self.to_rational()?;
        if r.is_integer() {
            Ok(r.to_integer())
        } else {
            Err(Error::NotRational(self.to_string()))
        }
    }

    /// Approximate value as `f64`; display/diagnostics only.
    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.a) + rational_to_f64(&self.b) * 14f64.sqrt()
    }
}

/// The pair `(15 + 4√14, 15 − 4√14)`: the roots of `t² − 30t + 1`, which is
/// the characteristic polynomial of the second-layer minor recurrences. Both
/// have norm 1, so they are units and inverses of each other.
pub fn recurrence_roots() -> (QuadNumber, QuadNumber) {
    (QuadNumber::from_pair(15, 4), QuadNumber::from_pair(15, -4))
}

/// Rounds a rational to `f64` through a high-precision fixed-point scaling.
pub fn rational_to_f64(r: &Rational) -> f64 {
    // Scale by 2^80 so the integer division keeps ample precision even when
    // numerator and denominator are hundreds of bits.
    let shift = 80u32;
    let scaled = (r.numer() << shift) / r.denom();
    let (sign, mag) = match scaled.sign() {
        num_bigint::Sign::Minus => (-1.0, -scaled),
        _ => (1.0, scaled),
    };
    let mut value = 0.0f64;
    for digit in mag.magnitude().to_u64_digits().iter().rev() {
        value = value * 1.8446744073709552e19 + *digit as f64;
    }
    sign * value / 2f64.powi(shift as i32)
}

impl fmt::Display for QuadNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            return write!(f, "{}√14", self.b);
        }
        if self.b.is_negative() {
            write!(f, "{} - {}√14", self.a, -self.b.clone())
        } else {
            write!(f, "{} + {}√14", self.a, self.b)
        }
    }
}

impl fmt::Debug for QuadNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &QuadNumber {
    type Output = QuadNumber;
    fn add(self, rhs: &QuadNumber) -> QuadNumber {
        QuadNumber {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl Sub for &QuadNumber {
    type Output = QuadNumber;
    fn sub(self, rhs: &QuadNumber) -> QuadNumber {
        QuadNumber {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl Mul for &QuadNumber {
    type Output = QuadNumber;
    fn mul(self, rhs: &QuadNumber) -> QuadNumber {
        // (a₁ + b₁√14)(a₂ + b₂√14) = (a₁a₂ + 14 b₁b₂) + (a₁b₂ + a₂b₁)√14
        QuadNumber {
            a: &self.a * &rhs.a + rat(14) * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &rhs.a * &self.b,
        }
    }
}

impl Neg for &QuadNumber {
    type Output = QuadNumber;
    fn neg(self) -> QuadNumber {
        QuadNumber {
            a: -self.a.clone(),
            b: -self.b.clone(),
        }
    }
}

impl Div for &QuadNumber {
    type Output = QuadNumber;
    /// Panics on a zero divisor; use [`QuadNumber::inv`] for a fallible route.
    #[allow(clippy::suspicious_arithmetic_impl)] // division is multiplication by the inverse
    fn div(self, rhs: &QuadNumber) -> QuadNumber {
        let inv = rhs.inv().expect("division by zero QuadNumber");
        self * &inv
    }
}

macro_rules! forward_value_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for QuadNumber {
            type Output = QuadNumber;
            fn $method(self, rhs: QuadNumber) -> QuadNumber {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_value_binop!(Add, add);
forward_value_binop!(Sub, sub);
forward_value_binop!(Mul, mul);
forward_value_binop!(Div, div);

impl Neg for QuadNumber {
    type Output = QuadNumber;
    fn neg(self) -> QuadNumber {
        -&self
    }
}

impl One for QuadNumber {
    fn one() -> Self {
        QuadNumber::one()
    }
}

impl Zero for QuadNumber {
    fn zero() -> Self {
        QuadNumber::zero()
    }
    fn is_zero(&self) -> bool {
        QuadNumber::is_zero(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_a() -> QuadNumber {
        recurrence_roots().0
    }

    fn unit_b() -> QuadNumber {
        recurrence_roots().1
    }

    #[test]
    fn product_of_roots_is_one() {
        assert_eq!(&unit_a() * &unit_b(), QuadNumber::one());
    }

    #[test]
    fn sum_of_roots_is_thirty() {
        assert_eq!(&unit_a() + &unit_b(), QuadNumber::from_int(30));
    }

    #[test]
    fn multiplying_by_one_is_identity() {
        assert_eq!(&unit_a() * &QuadNumber::one(), unit_a());
    }

    #[test]
    fn square_of_root_a() {
        // (15 + 4√14)² = 449 + 120√14
        assert_eq!(&unit_a() * &unit_a(), QuadNumber::from_pair(449, 120));
        assert_eq!(unit_a().pow(2), QuadNumber::from_pair(449, 120));
    }

    #[test]
    fn zeroth_power_is_one() {
        assert_eq!(unit_a().pow(0), QuadNumber::one());
    }

    #[test]
    fn powers_of_root_pair_cancel() {
        for k in 0..=50 {
            assert_eq!(&unit_a().pow(k) * &unit_b().pow(k), QuadNumber::one());
        }
    }

    #[test]
    fn conjugate_swaps_roots() {
        assert_eq!(unit_a().conjugate(), unit_b());
        assert_eq!(QuadNumber::one().conjugate(), QuadNumber::one());
    }

    #[test]
    fn negative_power_matches_inverse() {
        let a = unit_a();
        assert_eq!(a.powi(-3).unwrap(), unit_b().pow(3));
    }

    #[test]
    fn to_rational_accepts_pure_rationals() {
        assert_eq!(QuadNumber::from_int(183).to_rational().unwrap(), rat(183));
        assert_eq!(QuadNumber::from_int(62).to_bigint().unwrap(), BigInt::from(62));
    }

    #[test]
    fn to_rational_rejects_irrationals() {
        let x = QuadNumber::from_pair(1, 1);
        assert!(matches!(x.to_rational(), Err(Error::NotRational(_))));
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert_eq!(QuadNumber::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn division_by_sqrt14() {
        // 1/(2√14) = √14/28, the multiplier used by every closed-form evaluation.
        let two_sqrt14 = QuadNumber::from_pair(0, 2);
        let inv = two_sqrt14.inv().unwrap();
        assert_eq!(inv, QuadNumber::new(rat(0), ratio(1, 28)));
    }

    #[test]
    fn rational_to_f64_is_accurate() {
        assert_eq!(rational_to_f64(&ratio(1, 2)), 0.5);
        let kf1 = ratio(2155, 31);
        assert!((rational_to_f64(&kf1) - 69.51612903225806).abs() < 1e-12);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_rational() -> impl Strategy<Value = Rational> {
            (-200i64..=200, 1i64..=40).prop_map(|(n, d)| ratio(n, d))
        }

        fn arb_quad() -> impl Strategy<Value = QuadNumber> {
            (arb_rational(), arb_rational()).prop_map(|(a, b)| QuadNumber::new(a, b))
        }

        proptest! {
            #[test]
            fn mul_is_associative(x in arb_quad(), y in arb_quad(), z in arb_quad()) {
                prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            }

            #[test]
            fn mul_distributes_over_add(x in arb_quad(), y in arb_quad(), z in arb_quad()) {
                prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            }

            #[test]
            fn mul_is_commutative(x in arb_quad(), y in arb_quad()) {
                prop_assert_eq!(&x * &y, &y * &x);
            }

            #[test]
            fn inverse_cancels(x in arb_quad()) {
                prop_assume!(!x.is_zero());
                prop_assert_eq!(&x * &x.inv().unwrap(), QuadNumber::one());
            }

            #[test]
            fn norm_is_multiplicative(x in arb_quad(), y in arb_quad()) {
                prop_assert_eq!((&x * &y).norm(), x.norm() * y.norm());
            }

            #[test]
            fn conjugation_is_a_ring_homomorphism(x in arb_quad(), y in arb_quad()) {
                prop_assert_eq!((&x * &y).conjugate(), &x.conjugate() * &y.conjugate());
                prop_assert_eq!((&x + &y).conjugate(), &x.conjugate() + &y.conjugate());
            }
        }
    }
}
