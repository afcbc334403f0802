//! The conventional algorithms each sutra procedure is checked against:
//! schoolbook long division, polynomial long division and Euclid's
//! algorithm.

use num_traits::{One, ToPrimitive, Zero};

use crate::polynomial::{Polynomial, Rational};
use crate::{Natural, RepeatingDecimal, Result, SutraError};

/// The repeating period of `1/denominator` by long division, for a
/// denominator above 1 coprime to 10 (so the decimal is purely recurring).
///
/// ```
/// use sutra::{oracle::long_division_period, Natural};
/// assert_eq!(long_division_period(&Natural::from(13u32)).unwrap().digit_string(), "076923");
/// ```
pub fn long_division_period(denominator: &Natural) -> Result<RepeatingDecimal> {
    use num_integer::Integer;
    let ten = Natural::from(10u32);
    if denominator <= &Natural::one() || !denominator.gcd(&ten).is_one() {
        return Err(SutraError::InvalidInput(format!(
            "1/{denominator} is not purely recurring"
        )));
    }
    let mut digits = Vec::new();
    let mut remainder = Natural::one();
    loop {
        let (digit, rest) = (remainder * 10u32).div_rem(denominator);
        digits.push(digit.to_u8().expect("a decimal digit"));
        remainder = rest;
        if remainder.is_one() {
            return RepeatingDecimal::new(digits);
        }
    }
}

/// Quotient and remainder of polynomials in `x` by long division.
///
/// ```
/// use sutra::{oracle::long_divide, Polynomial};
/// let p: Polynomial = "x^3+7x^2+6x+5".parse().unwrap();
/// let (q, r) = long_divide(&p, &"x-2".parse().unwrap()).unwrap();
/// assert_eq!((q.to_string(), r.to_string()), ("x^2+9x+24".into(), "53".into()));
/// ```
pub fn long_divide(
    dividend: &Polynomial,
    divisor: &Polynomial,
) -> Result<(Polynomial, Polynomial)> {
    let (Some(mut rest), Some(d)) = (dividend.univariate(), divisor.univariate()) else {
        return Err(SutraError::InvalidInput(
            "long division needs polynomials in x".into(),
        ));
    };
    if divisor.is_zero() {
        return Err(SutraError::ZeroPolynomial);
    }
    let dd = d.len() - 1;
    let lead = d[dd].clone();
    let mut quotient = vec![Rational::zero(); rest.len().saturating_sub(dd).max(1)];
    for k in (dd..rest.len()).rev() {
        let q = &rest[k] / &lead;
        for (j, c) in d.iter().enumerate() {
            rest[k - dd + j] -= &q * c;
        }
        quotient[k - dd] = q;
    }
    rest.truncate(dd.max(1));
    Ok((
        Polynomial::from_ascending(&quotient),
        Polynomial::from_ascending(&rest),
    ))
}

/// Greatest common divisor of polynomials in `x` by Euclid's algorithm,
/// made monic (zero only if both inputs are zero).
pub fn euclid_gcd(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_zero() {
        let (_, r) = long_divide(&a, &b)?;
        a = b;
        b = r;
    }
    if a.is_zero() {
        return Ok(a);
    }
    let lead = a.leading_coeff();
    Ok(a.scale(&lead.recip()))
}
