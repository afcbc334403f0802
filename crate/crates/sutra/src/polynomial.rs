//! Exact polynomials in up to three variables `x`, `y`, `z` with rational
//! coefficients, and their textual syntax.
//!
//! The syntax is the one written by hand: `2x^2+5x+2`, `x^3+7x^2+6x+5`,
//! `2x^2+7xy+6y^2+11yz+7zx+3z^2`, `1/2x-3`. Variables in a term may come in
//! any order and whitespace is ignored. Printing lists terms by descending
//! total degree, then lexicographically with `x > y > z`, so
//! `parse(print(p)) == p` for every polynomial.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact rational number.
pub type Rational = BigRational;

/// The integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// The fraction `n/d`; panics if `d` is zero.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// A polynomial variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    /// `x`
    X,
    /// `y`
    Y,
    /// `z`
    Z,
}

impl Var {
    /// All variables, in printing order.
    pub const ALL: [Var; 3] = [Var::X, Var::Y, Var::Z];

    fn index(self) -> usize {
        self as usize
    }

    fn symbol(self) -> char {
        ['x', 'y', 'z'][self.index()]
    }

    fn from_symbol(c: char) -> Option<Var> {
        match c {
            'x' => Some(Var::X),
            'y' => Some(Var::Y),
            'z' => Some(Var::Z),
            _ => None,
        }
    }
}

/// Exponents of `x`, `y`, `z`. Ordered by total degree, then
/// lexicographically, so the largest monomial is the leading one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub [u32; 3]);

impl Monomial {
    /// The constant monomial `1`.
    pub const ONE: Monomial = Monomial([0, 0, 0]);

    /// Total degree.
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `v^power`.
    pub fn power(v: Var, power: u32) -> Monomial {
        let mut e = [0; 3];
        e[v.index()] = power;
        Monomial(e)
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial([
            self.0[0] + other.0[0],
            self.0[1] + other.0[1],
            self.0[2] + other.0[2],
        ])
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.degree(), self.0).cmp(&(other.degree(), other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in Var::ALL {
            match self.0[v.index()] {
                0 => {}
                1 => write!(f, "{}", v.symbol())?,
                e => write!(f, "{}^{e}", v.symbol())?,
            }
        }
        Ok(())
    }
}

/// A polynomial with exact rational coefficients; zero coefficients are
/// never stored.
///
/// ```
/// use sutra::Polynomial;
/// let p: Polynomial = "x+2".parse().unwrap();
/// let q: Polynomial = "2x+1".parse().unwrap();
/// assert_eq!((&p * &q).to_string(), "2x^2+5x+2");
/// ```
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Polynomial::default()
    }

    /// The constant `c`.
    pub fn constant(c: Rational) -> Self {
        Polynomial::from_terms([(Monomial::ONE, c)])
    }

    /// The integer constant `n`.
    pub fn int(n: i64) -> Self {
        Polynomial::constant(int(n))
    }

    /// The polynomial `v`.
    pub fn var(v: Var) -> Self {
        Polynomial::from_terms([(Monomial::power(v, 1), Rational::one())])
    }

    /// Sums the given terms, dropping zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// The univariate polynomial in `x` with coefficients listed from the
    /// constant term upwards.
    ///
    /// ```
    /// use sutra::{Polynomial, Rational};
    /// let coeffs = [5, 6, 7, 1].map(|c| Rational::from_integer(c.into()));
    /// assert_eq!(Polynomial::from_ascending(&coeffs).to_string(), "x^3+7x^2+6x+5");
    /// ```
    pub fn from_ascending(coeffs: &[Rational]) -> Self {
        Polynomial::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| (Monomial::power(Var::X, k as u32), c.clone())),
        )
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms from the leading monomial down.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    /// Coefficient of `m` (zero if absent).
    pub fn coeff(&self, m: Monomial) -> Rational {
        self.terms.get(&m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Highest power of `v` that occurs.
    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.0[v.index()]).max().unwrap_or(0)
    }

    /// Variables that occur.
    pub fn variables(&self) -> Vec<Var> {
        Var::ALL
            .into_iter()
            .filter(|&v| self.degree_in(v) > 0)
            .collect()
    }

    /// True if every term has the same total degree.
    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            Some(d) => degrees.all(|e| e == d),
            None => true,
        }
    }

    /// Coefficient of the leading monomial (zero for the zero polynomial).
    pub fn leading_coeff(&self) -> Rational {
        self.terms
            .values()
            .next_back()
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Coefficients of a polynomial in `x` alone, constant term first;
    /// `None` if `y` or `z` occurs.
    pub fn univariate(&self) -> Option<Vec<Rational>> {
        if self.degree_in(Var::Y) > 0 || self.degree_in(Var::Z) > 0 {
            return None;
        }
        let mut coeffs = vec![Rational::zero(); self.degree_in(Var::X) as usize + 1];
        for (m, c) in &self.terms {
            coeffs[m.0[0] as usize] = c.clone();
        }
        Some(coeffs)
    }

    /// Value at the given point.
    pub fn eval(&self, x: &Rational, y: &Rational, z: &Rational) -> Rational {
        let point = [x, y, z];
        self.terms
            .iter()
            .map(|(m, c)| {
                m.0.iter().zip(point).fold(c.clone(), |acc, (&e, v)| {
                    acc * num_traits::pow(v.clone(), e as usize)
                })
            })
            .sum()
    }

    /// Value at `x` for a polynomial in `x`.
    pub fn eval_x(&self, x: &Rational) -> Rational {
        self.eval(x, &Rational::zero(), &Rational::zero())
    }

    /// The coefficient sum `S_c`: the value with every variable set to 1.
    ///
    /// ```
    /// use sutra::Polynomial;
    /// let p: Polynomial = "x^2+16x+63".parse().unwrap();
    /// assert_eq!(p.coefficient_sum(), sutra::polynomial::int(80));
    /// ```
    pub fn coefficient_sum(&self) -> Rational {
        self.terms.values().cloned().sum()
    }

    /// Multiplies every coefficient by `k`.
    pub fn scale(&self, k: &Rational) -> Polynomial {
        Polynomial::from_terms(self.terms.iter().map(|(m, c)| (*m, c * k)))
    }

    /// Multiplies by `v^power`.
    pub fn shift(&self, v: Var, power: u32) -> Polynomial {
        let by = Monomial::power(v, power);
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.times(&by), c.clone()))
                .collect(),
        }
    }

    /// Divides by the highest power of each variable dividing every term.
    pub fn strip_monomial_content(&self) -> Polynomial {
        let mut common = [u32::MAX; 3];
        for m in self.terms.keys() {
            for (c, e) in common.iter_mut().zip(m.0) {
                *c = (*c).min(e);
            }
        }
        if self.is_zero() {
            return self.clone();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    (
                        Monomial([m.0[0] - common[0], m.0[1] - common[1], m.0[2] - common[2]]),
                        c.clone(),
                    )
                })
                .collect(),
        }
    }

    /// Splits into `content · primitive`, where the primitive part has
    /// coprime integer coefficients and a positive leading coefficient.
    ///
    /// ```
    /// use sutra::Polynomial;
    /// let p: Polynomial = "-6x-9".parse().unwrap();
    /// let (content, primitive) = p.primitive();
    /// assert_eq!(primitive.to_string(), "2x+3");
    /// assert_eq!(content, sutra::polynomial::int(-3));
    /// ```
    pub fn primitive(&self) -> (Rational, Polynomial) {
        if self.is_zero() {
            return (Rational::one(), self.clone());
        }
        let denom_lcm = self
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let numer_gcd = self.terms.values().fold(BigInt::zero(), |acc, c| {
            acc.gcd(&(c * &denom_lcm).to_integer())
        });
        let mut content = Rational::new(numer_gcd, denom_lcm);
        if self.leading_coeff().is_negative() {
            content = -content;
        }
        let primitive = self.scale(&content.recip());
        (content, primitive)
    }

    /// Exchanges two variables.
    pub fn swap(&self, a: Var, b: Var) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.0;
                    e.swap(a.index(), b.index());
                    (Monomial(e), c.clone())
                })
                .collect(),
        }
    }

    /// Replaces `x`, `y`, `z` simultaneously by the given polynomials.
    ///
    /// ```
    /// use sutra::Polynomial;
    /// let p: Polynomial = "xy".parse().unwrap();
    /// let images = ["x".parse().unwrap(), "y+x".parse().unwrap(), "z".parse().unwrap()];
    /// assert_eq!(p.substitute(&images).to_string(), "x^2+xy");
    /// ```
    pub fn substitute(&self, images: &[Polynomial; 3]) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(c.clone());
            for (image, &e) in images.iter().zip(&m.0) {
                for _ in 0..e {
                    term = &term * image;
                }
            }
            out = &out + &term;
        }
        out
    }

    /// Sets `v` to zero.
    pub fn drop_var(&self, v: Var) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.0[v.index()] == 0)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }
}

impl From<Rational> for Polynomial {
    fn from(c: Rational) -> Self {
        Polynomial::constant(c)
    }
}

impl From<Var> for Polynomial {
    fn from(v: Var) -> Self {
        Polynomial::var(v)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut sum = self.clone();
        for (m, c) in &rhs.terms {
            sum.add_term(*m, c.clone());
        }
        sum
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut product = Polynomial::zero();
        for (m, c) in &self.terms {
            for (n, d) in &rhs.terms {
                product.add_term(m.times(n), c * d);
            }
        }
        product
    }
}

macro_rules! owned_ops {
    ($($trait:ident $method:ident),*) => {$(
        impl $trait for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let magnitude = c.abs();
            match (c.is_negative(), k) {
                (true, _) => f.write_str("-")?,
                (false, 0) => {}
                (false, _) => f.write_str("+")?,
            }
            if *m == Monomial::ONE || !magnitude.is_one() {
                write!(f, "{magnitude}")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

/// Why a polynomial could not be parsed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse polynomial at byte {position}: {reason}")]
pub struct ParsePolynomialError {
    /// Byte offset (whitespace removed) where parsing stopped.
    pub position: usize,
    /// What was expected.
    pub reason: &'static str,
}

impl FromStr for Polynomial {
    type Err = ParsePolynomialError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut parser = Parser { chars, pos: 0 };
        parser.polynomial()
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn fail<T>(&self, reason: &'static str) -> Result<T, ParsePolynomialError> {
        Err(ParsePolynomialError {
            position: self.pos,
            reason,
        })
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn polynomial(&mut self) -> Result<Polynomial, ParsePolynomialError> {
        if self.chars.is_empty() {
            return self.fail("empty input");
        }
        let mut p = Polynomial::zero();
        let mut negative = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        loop {
            let (m, c) = self.term()?;
            p.add_term(m, if negative { -c } else { c });
            match self.peek() {
                None => return Ok(p),
                Some('+') => negative = false,
                Some('-') => negative = true,
                Some(_) => return self.fail("expected '+' or '-'"),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<(Monomial, Rational), ParsePolynomialError> {
        let start = self.pos;
        let coeff = match self.integer() {
            Some(n) if self.eat('/') => match self.integer() {
                Some(d) if !d.is_zero() => Rational::new(n, d),
                _ => return self.fail("expected a nonzero denominator"),
            },
            Some(n) => Rational::from_integer(n),
            None => Rational::one(),
        };
        self.eat('*');
        let mut exponents = [0u32; 3];
        while let Some(v) = self.peek().and_then(Var::from_symbol) {
            self.pos += 1;
            let power = if self.eat('^') {
                match self.integer().and_then(|e| u32::try_from(e).ok()) {
                    Some(e) => e,
                    None => return self.fail("expected an exponent"),
                }
            } else {
                1
            };
            exponents[v.index()] += power;
        }
        if self.pos == start {
            return self.fail("expected a term");
        }
        Ok((Monomial(exponents), coeff))
    }

    fn integer(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits.parse().ok()
    }
}
