//! Recurring decimals of unit fractions: the Ekadhika procedure for
//! denominators ending in 9 and the Sesanya remainder procedure for any
//! denominator coprime to 10.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::{Natural, Result, SutraError};

/// One full period of a purely recurring decimal `0.(digits)`.
///
/// ```
/// use sutra::RepeatingDecimal;
/// let d = RepeatingDecimal::new(vec![1, 4, 2, 8, 5, 7]).unwrap();
/// assert_eq!(d.to_string(), "0.(142857)");
/// assert_eq!(d.period(), 6);
/// ```
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RepeatingDecimal {
    digits: Vec<u8>,
}

impl RepeatingDecimal {
    /// Wraps a non-empty list of decimal digits.
    pub fn new(digits: Vec<u8>) -> Result<Self> {
        if digits.is_empty() || digits.iter().any(|&d| d > 9) {
            return Err(SutraError::InvalidInput(
                "a period is a non-empty list of decimal digits".into(),
            ));
        }
        Ok(RepeatingDecimal { digits })
    }

    /// The digits of one period.
    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    /// The digits of one period as text, leading zeros kept.
    pub fn digit_string(&self) -> String {
        self.digits.iter().map(|d| char::from(b'0' + d)).collect()
    }

    /// Length of the period.
    pub fn period(&self) -> usize {
        self.digits.len()
    }
}

impl fmt::Display for RepeatingDecimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "0.({})", self.digit_string())
    }
}

/// The two Ekadhika workings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EkadhikaMethod {
    /// Start from the last digit 1 and multiply leftwards by the
    /// multiplier, carrying as usual.
    Multiply,
    /// Start from the first digit and divide rightwards by the multiplier,
    /// prefixing each remainder to the previous quotient digit.
    Divide,
}

/// A recurring decimal with the working that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    /// "One more than the previous one" (Ekadhika) or the last-digit
    /// multiplier (Sesanya).
    pub multiplier: Natural,
    /// Per digit, in the order produced: the digit and the carry
    /// (multiplying) or remainder (dividing, Sesanya) that accompanies it.
    pub steps: Vec<(u8, Natural)>,
    /// The period.
    pub decimal: RepeatingDecimal,
}

/// Expands `1/denominator` for a denominator ending in 9 using the
/// Ekadhika multiplier `(denominator − 9)/10 + 1`.
///
/// ```
/// use sutra::{recurring::{ekadhika_expand, EkadhikaMethod}, Natural};
/// let e = ekadhika_expand(&Natural::from(19u32), EkadhikaMethod::Multiply).unwrap();
/// assert_eq!(e.multiplier, Natural::from(2u32));
/// assert_eq!(e.decimal.digit_string(), "052631578947368421");
/// ```
pub fn ekadhika_expand(denominator: &Natural, method: EkadhikaMethod) -> Result<Expansion> {
    let ten = Natural::from(10u32);
    if denominator % &ten != Natural::from(9u32) {
        return Err(SutraError::InvalidInput(format!(
            "Ekadhika needs a denominator ending in 9, got {denominator}"
        )));
    }
    let multiplier = denominator / &ten + 1u32;
    let steps = match method {
        EkadhikaMethod::Multiply => ekadhika_multiply(&multiplier),
        EkadhikaMethod::Divide => ekadhika_divide(&multiplier),
    };
    let mut digits: Vec<u8> = steps.iter().map(|(d, _)| *d).collect();
    if method == EkadhikaMethod::Multiply {
        digits.reverse();
    }
    Ok(Expansion {
        multiplier,
        steps,
        decimal: RepeatingDecimal { digits },
    })
}

/// Right to left: the period ends in 1; each digit times the multiplier,
/// plus the carry, gives the next digit to the left. The period is complete
/// when digit 1 with no carry comes round again.
fn ekadhika_multiply(multiplier: &Natural) -> Vec<(u8, Natural)> {
    let start = (1u8, Natural::zero());
    let mut steps = vec![start.clone()];
    loop {
        let (digit, carry) = steps.last().expect("non-empty");
        let value = multiplier * Natural::from(*digit) + carry;
        let (next_carry, next_digit) = value.div_rem(&Natural::from(10u32));
        let next = (to_digit(&next_digit), next_carry);
        if next == start {
            return steps;
        }
        steps.push(next);
    }
}

/// Left to right: divide 1 by the multiplier; each remainder, prefixed to
/// the quotient digit just written, is the next dividend. The period is
/// complete when the dividend returns to 1.
fn ekadhika_divide(multiplier: &Natural) -> Vec<(u8, Natural)> {
    let mut steps = Vec::new();
    let mut dividend = Natural::one();
    loop {
        let (quotient, remainder) = dividend.div_rem(multiplier);
        let digit = to_digit(&quotient);
        dividend = &remainder * 10u32 + digit;
        steps.push((digit, remainder));
        if dividend.is_one() {
            return steps;
        }
    }
}

/// Expands `1/denominator` from the remainders `r_k = 10^k mod d`: each
/// digit is the last digit of `r_k · m`, where `m` is the multiplier with
/// `m · d ≡ 9 (mod 10)` — the denominator itself when it ends in 3 or 7.
///
/// ```
/// use sutra::{recurring::sesanya_expand, Natural};
/// let e = sesanya_expand(&Natural::from(7u32)).unwrap();
/// let remainders: Vec<u32> = e.steps.iter().map(|(_, r)| r.try_into().unwrap()).collect();
/// assert_eq!(remainders, [3, 2, 6, 4, 5, 1]);
/// assert_eq!(e.decimal.digit_string(), "142857");
/// ```
pub fn sesanya_expand(denominator: &Natural) -> Result<Expansion> {
    let ten = Natural::from(10u32);
    if denominator <= &Natural::one() || !denominator.gcd(&ten).is_one() {
        return Err(SutraError::InvalidInput(format!(
            "Sesanya needs a denominator above 1 coprime to 10, got {denominator}"
        )));
    }
    let multiplier = Natural::from(match to_digit(&(denominator % &ten)) {
        1 => 9u32,
        3 => 3,
        7 => 7,
        _ => 1,
    });
    let mut steps = Vec::new();
    let mut remainder = Natural::one();
    loop {
        remainder = remainder * 10u32 % denominator;
        let digit = to_digit(&(&remainder * &multiplier % &ten));
        steps.push((digit, remainder.clone()));
        if remainder.is_one() {
            break;
        }
    }
    let digits = steps.iter().map(|(d, _)| *d).collect();
    Ok(Expansion {
        multiplier,
        steps,
        decimal: RepeatingDecimal { digits },
    })
}

fn to_digit(n: &Natural) -> u8 {
    n.to_u8()
        .filter(|d| *d < 10)
        .expect("a single decimal digit")
}
