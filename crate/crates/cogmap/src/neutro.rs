//! Neutrosophic scalars `a + bI` with `I² = I`, and the tri-state node values
//! `{0, 1, I}`.
//!
//! All arithmetic is exact over arbitrary-precision rationals, so values
//! produced during propagation compare bit-exactly against hand-worked
//! traces. The textual grammar is `[real][(+|-)[coef]I]`, e.g. `-1`, `0.7`,
//! `I`, `-1+I`, `0.3+0.2I`; rendering and parsing round-trip losslessly.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact rational numbers used throughout the crate.
pub type Rational = num_rational::BigRational;

/// A neutrosophic number `real + indet·I` where `I² = I`.
///
/// Equality is componentwise. The total order is lexicographic on
/// `(real, indet)`; it is the order used by max-min composition over
/// neutrosophic fuzzy values (see [`NeutroValue::cmp`]).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct NeutroValue {
    real: Rational,
    indet: Rational,
}

/// The value of a node in a neutrosophic map: OFF (`0`), ON (`1`) or
/// indeterminate (`I`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TriState {
    /// The node has no effect.
    Off,
    /// The node is switched on.
    On,
    /// The node's state cannot be determined.
    Indet,
}

/// Failure to parse a scalar from text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("malformed neutrosophic scalar `{text}`: {reason}")]
pub struct ParseScalarError {
    /// The offending input.
    pub text: String,
    /// What was wrong with it.
    pub reason: &'static str,
}

impl NeutroValue {
    /// Builds `real + indet·I`.
    pub fn new(real: Rational, indet: Rational) -> Self {
        Self { real, indet }
    }

    /// The purely real value `n`.
    pub fn from_integer(n: i64) -> Self {
        Self::new(Rational::from_integer(BigInt::from(n)), Rational::zero())
    }

    /// The purely real value `r`.
    pub fn from_real(r: Rational) -> Self {
        Self::new(r, Rational::zero())
    }

    /// The indeterminate `I` itself (`0 + 1I`).
    pub fn i() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    /// Real component `a` of `a + bI`.
    pub fn real(&self) -> &Rational {
        &self.real
    }

    /// Coefficient `b` of `I` in `a + bI`.
    pub fn indet(&self) -> &Rational {
        &self.indet
    }

    /// True when the value carries no `I` term.
    pub fn is_real(&self) -> bool {
        self.indet.is_zero()
    }

    /// True when both components are integers.
    pub fn has_integer_components(&self) -> bool {
        self.real.is_integer() && self.indet.is_integer()
    }

    /// True when `real ∈ [0,1]` and `indet ∈ [0,1]`, i.e. the value lies in
    /// the neutrosophic fuzzy interval `N_I`.
    pub fn in_unit_closure(&self) -> bool {
        in_unit(&self.real) && in_unit(&self.indet)
    }

    /// Scales both components by a rational factor.
    pub fn scale(&self, factor: &Rational) -> Self {
        Self::new(&self.real * factor, &self.indet * factor)
    }

    /// Maps an accumulated propagation value to a node state.
    ///
    /// The real part dominates: a positive real part switches the node ON
    /// and a negative one switches it OFF, whatever the `I` coefficient. Only
    /// a zero real part with a positive `I` coefficient leaves the node
    /// indeterminate.
    ///
    /// ```
    /// use cogmap::{NeutroValue, TriState};
    /// let v: NeutroValue = "2+I".parse().unwrap();
    /// assert_eq!(v.threshold(), TriState::On);
    /// let v: NeutroValue = "-1+I".parse().unwrap();
    /// assert_eq!(v.threshold(), TriState::Off);
    /// assert_eq!(NeutroValue::i().threshold(), TriState::Indet);
    /// ```
    pub fn threshold(&self) -> TriState {
        match self.real.cmp(&Rational::zero()) {
            Ordering::Greater => TriState::On,
            Ordering::Less => TriState::Off,
            Ordering::Equal if self.indet.is_positive() => TriState::Indet,
            Ordering::Equal => TriState::Off,
        }
    }
}

fn in_unit(r: &Rational) -> bool {
    !r.is_negative() && *r <= Rational::one()
}

impl From<TriState> for NeutroValue {
    fn from(state: TriState) -> Self {
        match state {
            TriState::Off => Self::zero(),
            TriState::On => Self::one(),
            TriState::Indet => Self::i(),
        }
    }
}

impl From<i64> for NeutroValue {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<Rational> for NeutroValue {
    fn from(r: Rational) -> Self {
        Self::from_real(r)
    }
}

impl Add for NeutroValue {
    type Output = NeutroValue;
    fn add(self, rhs: NeutroValue) -> NeutroValue {
        NeutroValue::new(self.real + rhs.real, self.indet + rhs.indet)
    }
}

impl<'a> Add<&'a NeutroValue> for &'a NeutroValue {
    type Output = NeutroValue;
    fn add(self, rhs: &NeutroValue) -> NeutroValue {
        NeutroValue::new(&self.real + &rhs.real, &self.indet + &rhs.indet)
    }
}

impl AddAssign<&NeutroValue> for NeutroValue {
    fn add_assign(&mut self, rhs: &NeutroValue) {
        self.real += &rhs.real;
        self.indet += &rhs.indet;
    }
}

impl Neg for NeutroValue {
    type Output = NeutroValue;
    fn neg(self) -> NeutroValue {
        NeutroValue::new(-self.real, -self.indet)
    }
}

impl Sub for NeutroValue {
    type Output = NeutroValue;
    fn sub(self, rhs: NeutroValue) -> NeutroValue {
        self + (-rhs)
    }
}

impl<'a> Mul<&'a NeutroValue> for &'a NeutroValue {
    type Output = NeutroValue;
    /// `(a + bI)(c + dI) = ac + (ad + bc + bd)I`, using `I² = I`.
    fn mul(self, rhs: &NeutroValue) -> NeutroValue {
        let real = &self.real * &rhs.real;
        let indet = &self.real * &rhs.indet + &self.indet * &rhs.real + &self.indet * &rhs.indet;
        NeutroValue::new(real, indet)
    }
}

impl Mul for NeutroValue {
    type Output = NeutroValue;
    fn mul(self, rhs: NeutroValue) -> NeutroValue {
        &self * &rhs
    }
}

impl Zero for NeutroValue {
    fn zero() -> Self {
        Self::new(Rational::zero(), Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.real.is_zero() && self.indet.is_zero()
    }
}

impl One for NeutroValue {
    fn one() -> Self {
        Self::new(Rational::one(), Rational::zero())
    }
}

impl PartialOrd for NeutroValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for NeutroValue {
    /// Lexicographic on `(real, indet)`: the real part decides and the `I`
    /// coefficient breaks ties. This mirrors the real-dominant threshold and
    /// makes `I < 0.1`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.real
            .cmp(&other.real)
            .then_with(|| self.indet.cmp(&other.indet))
    }
}

/// Renders a rational as an exact decimal when its expansion terminates and
/// as `p/q` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        return r.numer().to_string();
    }
    let mut den = r.denom().clone();
    let two = BigInt::from(2);
    let five = BigInt::from(5);
    let ten = BigInt::from(10);
    let (mut twos, mut fives) = (0u32, 0u32);
    while (&den % &two).is_zero() {
        den /= &two;
        twos += 1;
    }
    while (&den % &five).is_zero() {
        den /= &five;
        fives += 1;
    }
    if !den.is_one() {
        return format!("{}/{}", r.numer(), r.denom());
    }
    let places = twos.max(fives);
    let scaled =
        (r * Rational::from_integer(num_traits::pow(ten.clone(), places as usize))).to_integer();
    let negative = scaled.is_negative();
    let digits = scaled.abs().to_string();
    let places = places as usize;
    let padded = if digits.len() <= places {
        format!("{}{}", "0".repeat(places + 1 - digits.len()), digits)
    } else {
        digits
    };
    let (int_part, frac_part) = padded.split_at(padded.len() - places);
    format!(
        "{}{}.{}",
        if negative { "-" } else { "" },
        int_part,
        frac_part
    )
}

/// Parses `12`, `-0.75`, `3/4` into an exact rational.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let (negative, body) = match text.as_bytes().first()? {
        b'-' => (true, &text[1..]),
        b'+' => (false, &text[1..]),
        _ => (false, text),
    };
    let value = if let Some((num, den)) = body.split_once('/') {
        let num = parse_digits(num)?;
        let den = parse_digits(den)?;
        if den.is_zero() {
            return None;
        }
        Rational::new(num, den)
    } else if let Some((int_part, frac_part)) = body.split_once('.') {
        if int_part.is_empty() && frac_part.is_empty() {
            return None;
        }
        let int_value = if int_part.is_empty() {
            BigInt::zero()
        } else {
            parse_digits(int_part)?
        };
        let frac_value = if frac_part.is_empty() {
            BigInt::zero()
        } else {
            parse_digits(frac_part)?
        };
        let scale = num_traits::pow(BigInt::from(10), frac_part.len());
        Rational::new(int_value * &scale + frac_value, scale)
    } else {
        Rational::from_integer(parse_digits(body)?)
    };
    Some(if negative { -value } else { value })
}

fn parse_digits(text: &str) -> Option<BigInt> {
    if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    text.parse().ok()
}

impl fmt::Display for NeutroValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let indet_term = |coef: &Rational| -> String {
            if coef.is_one() {
                "I".to_string()
            } else if (-coef).is_one() {
                "-I".to_string()
            } else {
                format!("{}I", format_rational(coef))
            }
        };
        match (self.real.is_zero(), self.indet.is_zero()) {
            (_, true) => f.write_str(&format_rational(&self.real)),
            (true, false) => f.write_str(&indet_term(&self.indet)),
            (false, false) => {
                let term = indet_term(&self.indet);
                let sign = if term.starts_with('-') { "" } else { "+" };
                write!(f, "{}{}{}", format_rational(&self.real), sign, term)
            }
        }
    }
}

impl FromStr for NeutroValue {
    type Err = ParseScalarError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let fail = |reason| ParseScalarError {
            text: text.to_string(),
            reason,
        };
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(fail("empty"));
        }
        let Some(body) = s.strip_suffix('I') else {
            let real = parse_rational(&s).ok_or_else(|| fail("expected a number"))?;
            return Ok(Self::from_real(real));
        };
        // Split `real ± coef` at the last sign that is not the leading one.
        let split = body
            .char_indices()
            .filter(|&(i, c)| i > 0 && (c == '+' || c == '-'))
            .map(|(i, _)| i)
            .next_back();
        let (real_text, coef_text) = match split {
            Some(i) => (&body[..i], &body[i..]),
            None => ("", body),
        };
        let real = if real_text.is_empty() {
            Rational::zero()
        } else {
            parse_rational(real_text).ok_or_else(|| fail("malformed real part"))?
        };
        let indet = match coef_text {
            "" | "+" => Rational::one(),
            "-" => -Rational::one(),
            other => parse_rational(other).ok_or_else(|| fail("malformed coefficient of I"))?,
        };
        Ok(Self::new(real, indet))
    }
}

impl TriState {
    /// Interprets a crisp bit (`0`/`1`) as a node state.
    pub fn from_bit(bit: u8) -> Option<Self> {
        match bit {
            0 => Some(TriState::Off),
            1 => Some(TriState::On),
            _ => None,
        }
    }

    /// The symbol `0`, `1` or `I`.
    pub fn symbol(self) -> &'static str {
        match self {
            TriState::Off => "0",
            TriState::On => "1",
            TriState::Indet => "I",
        }
    }
}

impl fmt::Display for TriState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for TriState {
    type Err = ParseScalarError;
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        match text.trim() {
            "0" => Ok(TriState::Off),
            "1" => Ok(TriState::On),
            "I" => Ok(TriState::Indet),
            _ => Err(ParseScalarError {
                text: text.to_string(),
                reason: "expected 0, 1 or I",
            }),
        }
    }
}
