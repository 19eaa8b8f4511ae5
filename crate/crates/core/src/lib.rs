//! Exact-arithmetic toolkit for initial degrees of symbolic powers of
//! point configurations in projective space.
//!
//! The crate is organized around a small exact linear-algebra kernel
//! ([`linalg`]), projective point configurations ([`points`]), the
//! derivative-conditions matrix and graded pieces of symbolic powers
//! ([`interp`]), asymptotic invariants and conjecture instance checks
//! ([`asymptotics`]), and a self-contained monomial-ideal engine
//! ([`monomial`]) that doubles as an independent oracle for
//! coordinate-point configurations.
//!
//! All arithmetic is exact: coordinates, matrix entries, and every
//! reported ratio are arbitrary-precision rationals.

pub mod asymptotics;
pub mod error;
pub mod interp;
pub mod linalg;
pub mod monomial;
pub mod multiindex;
pub mod points;

pub use error::Error;

/// Arbitrary-precision rational; reduced, denominator always positive.
pub type Rational = num_rational::BigRational;
/// Arbitrary-precision integer.
pub type Integer = num_bigint::BigInt;

/// binom(n, k) as a machine integer; panics on overflow (arguments in
/// this crate stay far below that).
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    usize::try_from(acc).expect("binomial overflow")
}

#[cfg(test)]
mod tests {
    use super::binomial;

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(4, 0), 1);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(6, 3), 20);
    }
}
