//! Exact coefficient fields.
//!
//! Everything above this module is generic over [`Field`]. Two families are
//! provided: arbitrary-precision rationals ([`Rational`]) and prime fields
//! [`Fp<P>`] with the modulus fixed at compile time.

use std::fmt::{self, Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, Zero};

/// Arbitrary-precision rational numbers.
pub type Rational = BigRational;

/// A field with exact arithmetic.
///
/// Division by zero panics, matching the behaviour of the underlying
/// `num` types; linear algebra routines never divide by a zero pivot.
pub trait Field:
    Num + Neg<Output = Self> + Clone + Debug + Display + Send + Sync + 'static
{
    /// Image of an integer under the canonical ring map `Z -> F`.
    fn from_i64(value: i64) -> Self;

    /// Characteristic of the field (0 for the rationals).
    fn characteristic() -> u64;

    /// Short name used in reports, e.g. `"Q"` or `"F_7"`.
    fn name() -> String {
        match Self::characteristic() {
            0 => "Q".to_string(),
            p => format!("F_{p}"),
        }
    }
}

impl Field for BigRational {
    fn from_i64(value: i64) -> Self {
        BigRational::from_integer(BigInt::from(value))
    }

    fn characteristic() -> u64 {
        0
    }
}

/// Deterministic trial-division primality test.
pub const fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d <= n / d {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Element of the prime field `Z/P`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    const PRIME_MODULUS: () = assert!(
        is_prime(P) && P < (1 << 62),
        "Fp modulus must be a prime below 2^62"
    );

    pub fn new(value: u64) -> Self {
        #[allow(clippy::let_unit_value)]
        let _ = Self::PRIME_MODULUS;
        Fp(value % P)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn pow(self, mut exp: u64) -> Self {
        let mut base = self;
        let mut acc = Fp::new(1);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inverse(self) -> Self {
        assert!(self.0 != 0, "division by zero in F_{P}");
        self.pow(P - 2)
    }
}

impl<const P: u64> Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Symmetric representative reads better for boundary coefficients.
        if self.0 > P / 2 {
            write!(f, "-{}", P - self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let s = self.0 + rhs.0;
        Fp(if s >= P { s - P } else { s })
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp(if self.0 >= rhs.0 { self.0 - rhs.0 } else { self.0 + P - rhs.0 })
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inverse()
    }
}

impl<const P: u64> Rem for Fp<P> {
    type Output = Self;
    /// Every nonzero element divides every other, so the remainder is zero.
    fn rem(self, rhs: Self) -> Self {
        assert!(rhs.0 != 0, "remainder by zero in F_{P}");
        Fp(0)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp(if self.0 == 0 { 0 } else { P - self.0 })
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp::new(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp::new(1)
    }
}

impl<const P: u64> Num for Fp<P> {
    type FromStrRadixErr = std::num::ParseIntError;

    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        let v = i64::from_str_radix(s, radix)?;
        Ok(Self::from_i64(v))
    }
}

impl<const P: u64> Field for Fp<P> {
    fn from_i64(value: i64) -> Self {
        let m = value.rem_euclid(P as i64) as u64;
        Fp::new(m)
    }

    fn characteristic() -> u64 {
        P
    }
}

pub type F2 = Fp<2>;
pub type F3 = Fp<3>;
pub type F5 = Fp<5>;
pub type F7 = Fp<7>;
pub type F101 = Fp<101>;
pub type F32003 = Fp<32003>;
pub type F65521 = Fp<65521>;
pub type F2147483647 = Fp<2147483647>;

/// Which coefficient field a computation runs over, chosen at run time.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldChoice {
    Rational,
    Prime(u64),
}

/// Primes for which a concrete `Fp<P>` instantiation is compiled in.
pub const SUPPORTED_PRIMES: &[u64] = &[
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89,
    97, 101, 32003, 65521, 2147483647,
];

impl FieldChoice {
    /// Parses `q` or `p=<prime>`.
    pub fn parse(spec: &str) -> Result<Self, crate::Error> {
        let s = spec.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(FieldChoice::Rational);
        }
        let Some(rest) = s.strip_prefix("p=") else {
            return Err(crate::Error::Input(format!(
                "field must be `q` or `p=<prime>`, got `{spec}`"
            )));
        };
        let p: u64 = rest
            .parse()
            .map_err(|_| crate::Error::Input(format!("invalid modulus `{rest}`")))?;
        if !is_prime(p) {
            return Err(crate::Error::Input(format!(
                "modulus {p} is not prime; rank and nullity need a field"
            )));
        }
        if !SUPPORTED_PRIMES.contains(&p) {
            return Err(crate::Error::Input(format!(
                "prime {p} is not compiled in; supported primes: {SUPPORTED_PRIMES:?}"
            )));
        }
        Ok(FieldChoice::Prime(p))
    }

    pub fn name(&self) -> String {
        match self {
            FieldChoice::Rational => "Q".to_string(),
            FieldChoice::Prime(p) => format!("F_{p}"),
        }
    }
}

/// Runs `$body` with the type alias `$F` bound to the field selected by
/// `$choice` (a [`FieldChoice`]).
#[macro_export]
macro_rules! with_field {
    ($choice:expr, $F:ident => $body:expr) => {{
        match $choice {
            $crate::field::FieldChoice::Rational => {
                type $F = $crate::field::Rational;
                $body
            }
            $crate::field::FieldChoice::Prime(p) => $crate::with_field!(@prime p, $F => $body;
                2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73,
                79, 83, 89, 97, 101, 32003, 65521, 2147483647),
        }
    }};
    (@prime $p:ident, $F:ident => $body:expr; $($q:literal),*) => {{
        match $p {
            $( $q => {
                type $F = $crate::field::Fp<$q>;
                $body
            } )*
            other => panic!("prime {other} is not compiled in"),
        }
    }};
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let a = F7::from_i64(3);
        let b = F7::from_i64(-2);
        assert_eq!(b.value(), 5);
        assert_eq!((a + b).value(), 1);
        assert_eq!((a - b).value(), 5);
        assert_eq!((a * b).value(), 1);
        assert_eq!(a / a, F7::one());
        assert_eq!((a * a.inverse()).value(), 1);
        assert_eq!(-F7::zero(), F7::zero());
    }

    #[test]
    fn every_nonzero_element_is_invertible() {
        for v in 1..101 {
            let x = F101::new(v);
            assert_eq!(x * x.inverse(), F101::one());
        }
    }

    #[test]
    #[should_panic]
    fn division_by_zero_is_rejected() {
        let _ = F5::one() / F5::zero();
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(is_prime(2147483647));
        assert!(!is_prime(65535));
        for &p in SUPPORTED_PRIMES {
            assert!(is_prime(p), "{p}");
        }
    }

    #[test]
    fn field_choice_parsing() {
        assert_eq!(FieldChoice::parse("q").unwrap(), FieldChoice::Rational);
        assert_eq!(FieldChoice::parse("p=7").unwrap(), FieldChoice::Prime(7));
        assert!(FieldChoice::parse("p=9").is_err());
        assert!(FieldChoice::parse("p=1").is_err());
        assert!(FieldChoice::parse("r").is_err());
    }

    #[test]
    fn dispatch_macro_selects_characteristic() {
        let c = with_field!(FieldChoice::Prime(13), F => F::characteristic());
        assert_eq!(c, 13);
        let c = with_field!(FieldChoice::Rational, F => F::characteristic());
        assert_eq!(c, 0);
    }
}
