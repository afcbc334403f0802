//! Multiplication shortcuts on natural numbers. Each returns its working
//! alongside the product; the product always equals the ordinary one.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, ToPrimitive, Zero};

use crate::{Natural, Result, SutraError};

/// Working of a Nikhilam ("all from 9 and the last from 10") product:
/// `(x − dy) · base + dx · dy`, with `dx = base − x` and `dy = base − y`.
///
/// Deficiencies are negative for operands above the base (a surplus), and
/// the right part may be negative or exceed the base; carrying the right
/// part into the left restores ordinary digits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NikhilamWorking {
    /// Working base, a power of 10.
    pub base: Natural,
    /// `base − x` and `base − y`.
    pub deficiencies: (BigInt, BigInt),
    /// Cross-subtraction `x − dy` (equivalently `y − dx`).
    pub left: BigInt,
    /// Product of the deficiencies.
    pub right: BigInt,
    /// `left · base + right`.
    pub product: Natural,
}

impl fmt::Display for NikhilamWorking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (dx, dy) = &self.deficiencies;
        writeln!(f, "base {}; deficiencies {dx}, {dy}", self.base)?;
        writeln!(f, "left: cross-subtract = {}", self.left)?;
        writeln!(f, "right: {dx} × {dy} = {}", self.right)?;
        write!(f, "{} / {} = {}", self.left, self.right, self.product)
    }
}

/// Multiplies near a power-of-10 base by its deficiencies.
///
/// ```
/// use sutra::{multiply::nikhilam_multiply, Natural};
/// let n = |v: u32| Natural::from(v);
/// assert_eq!(nikhilam_multiply(&n(9), &n(7), &n(10)).unwrap().product, n(63));
/// assert_eq!(nikhilam_multiply(&n(88), &n(98), &n(100)).unwrap().product, n(8624));
/// ```
pub fn nikhilam_multiply(x: &Natural, y: &Natural, base: &Natural) -> Result<NikhilamWorking> {
    check_base(base)?;
    let b = BigInt::from(base.clone());
    let (xi, yi) = (BigInt::from(x.clone()), BigInt::from(y.clone()));
    let (dx, dy) = (&b - &xi, &b - &yi);
    let left = &xi - &dy;
    let right = &dx * &dy;
    let product = natural(&left * &b + &right);
    Ok(NikhilamWorking {
        base: base.clone(),
        deficiencies: (dx, dy),
        left,
        right,
        product,
    })
}

/// Squares near a power-of-10 base: `(x − d) · base + d²` with
/// `d = base − x`.
///
/// ```
/// use sutra::{multiply::nikhilam_square, Natural};
/// let n = |v: u32| Natural::from(v);
/// assert_eq!(nikhilam_square(&n(96), &n(100)).unwrap().product, n(9216));
/// ```
pub fn nikhilam_square(x: &Natural, base: &Natural) -> Result<NikhilamWorking> {
    nikhilam_multiply(x, x, base)
}

fn check_base(base: &Natural) -> Result<()> {
    let mut b = base.clone();
    let ten = Natural::from(10u32);
    while !b.is_zero() && (&b % &ten).is_zero() {
        b /= &ten;
    }
    if base > &Natural::one() && b.is_one() {
        Ok(())
    } else {
        Err(SutraError::InvalidInput(format!(
            "the working base must be a power of 10 above 1, got {base}"
        )))
    }
}

fn natural(n: BigInt) -> Natural {
    n.to_biguint()
        .expect("the product of naturals is non-negative")
}

/// Working of a square of a number ending in 5: `t(t+1) / 25`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndingIn5Working {
    /// The number without its last digit.
    pub tens: Natural,
    /// `t · (t + 1)`, "one more than the previous one" times the previous.
    pub left: Natural,
    /// `left · 100 + 25`.
    pub product: Natural,
}

impl fmt::Display for EndingIn5Working {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = &self.tens;
        write!(f, "{t} × {} / 25 = {}", t + 1u32, self.product)
    }
}

/// Squares a number ending in 5.
///
/// ```
/// use sutra::{multiply::square_ending_5, Natural};
/// assert_eq!(square_ending_5(&Natural::from(15u32)).unwrap().product, Natural::from(225u32));
/// assert!(square_ending_5(&Natural::from(14u32)).is_err());
/// ```
pub fn square_ending_5(x: &Natural) -> Result<EndingIn5Working> {
    let (tens, last) = x.div_rem(&Natural::from(10u32));
    if last != Natural::from(5u32) {
        return Err(SutraError::InvalidInput(format!("{x} does not end in 5")));
    }
    let left = &tens * (&tens + 1u32);
    let product = &left * 100u32 + 25u32;
    Ok(EndingIn5Working {
        tens,
        left,
        product,
    })
}

/// Working of a product by a multiplier of nines (Ekanyuna): with the
/// multiplicand split after its last `k` digits into `L | r`, the left
/// part is `x − (L + 1)` and the right part `10^k − r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EkanyunaWorking {
    /// Number of nines.
    pub nines: u32,
    /// `x − (L + 1)`; negative only for `x = 0`.
    pub left: BigInt,
    /// `10^k − r`, which equals `10^k` when `r = 0` and carries.
    pub right: Natural,
    /// `left · 10^k + right`.
    pub product: Natural,
}

impl fmt::Display for EkanyunaWorking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} / {} = {}", self.left, self.right, self.product)
    }
}

/// Multiplies by `10^k − 1`.
///
/// ```
/// use sutra::{multiply::ekanyuna_multiply, Natural};
/// let n = |v: u32| Natural::from(v);
/// let w = ekanyuna_multiply(&n(43), &n(9)).unwrap();
/// assert_eq!(w.to_string(), "38 / 7 = 387");
/// assert_eq!(ekanyuna_multiply(&n(76), &n(99)).unwrap().product, n(7524));
/// ```
pub fn ekanyuna_multiply(x: &Natural, nines: &Natural) -> Result<EkanyunaWorking> {
    let digits = nines.to_string();
    if !digits.bytes().all(|b| b == b'9') {
        return Err(SutraError::InvalidInput(format!(
            "the multiplier must consist entirely of nines, got {nines}"
        )));
    }
    let k = digits.len() as u32;
    let power = Natural::from(10u32).pow(k);
    let (excess, r) = x.div_rem(&power);
    let left = BigInt::from(x.clone()) - BigInt::from(excess) - 1;
    let right = &power - r;
    let product = natural(&left * BigInt::from(power) + BigInt::from(right.clone()));
    Ok(EkanyunaWorking {
        nines: k,
        left,
        right,
        product,
    })
}

/// Working of a vertical-and-crosswise (Urdhva) product: the column sums
/// of digit products, least significant first, before carrying.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UrdhvaWorking {
    /// `Σ xᵢ·yⱼ` over `i + j = k`, for each column `k`.
    pub columns: Vec<Natural>,
    /// The columns with carries propagated.
    pub product: Natural,
}

impl fmt::Display for UrdhvaWorking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let columns: Vec<String> = self.columns.iter().rev().map(Natural::to_string).collect();
        write!(f, "{} = {}", columns.join(" / "), self.product)
    }
}

/// Multiplies digit columns vertically and crosswise, then carries.
///
/// ```
/// use sutra::{multiply::urdhva_multiply, Natural};
/// let w = urdhva_multiply(&Natural::from(12u32), &Natural::from(13u32));
/// assert_eq!(w.to_string(), "1 / 5 / 6 = 156");
/// ```
pub fn urdhva_multiply(x: &Natural, y: &Natural) -> UrdhvaWorking {
    let xs = x.to_radix_le(10);
    let ys = y.to_radix_le(10);
    let mut columns = vec![Natural::zero(); xs.len() + ys.len() - 1];
    for (i, a) in xs.iter().enumerate() {
        for (j, b) in ys.iter().enumerate() {
            columns[i + j] += u32::from(a * b);
        }
    }
    let mut product = Natural::zero();
    let mut carry = Natural::zero();
    let mut place = Natural::one();
    for column in &columns {
        let (up, digit) = (column + &carry).div_rem(&Natural::from(10u32));
        product += digit * &place;
        place *= 10u32;
        carry = up;
    }
    product += carry * place;
    UrdhvaWorking { columns, product }
}

/// Working of "the first by the first and the last by the last":
/// `(f₁·f₂ + u) / u²` for two-digit numbers with leading digits summing
/// to 10 and a common last digit `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FirstByFirstWorking {
    /// `f₁ · f₂ + u`.
    pub left: u32,
    /// `u²`, written as two digits.
    pub right: u32,
    /// `left · 100 + right`.
    pub product: Natural,
}

impl fmt::Display for FirstByFirstWorking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} / {:02} = {}", self.left, self.right, self.product)
    }
}

/// Multiplies two two-digit numbers whose leading digits sum to 10 and
/// whose last digits agree; any other pair is refused rather than given a
/// wrong product.
///
/// ```
/// use sutra::{multiply::first_by_first_last_by_last, Natural, SutraError};
/// let n = |v: u32| Natural::from(v);
/// assert_eq!(first_by_first_last_by_last(&n(27), &n(87)).unwrap().product, n(2349));
/// assert!(matches!(first_by_first_last_by_last(&n(47), &n(97)), Err(SutraError::NotApplicable(_))));
/// ```
pub fn first_by_first_last_by_last(x: &Natural, y: &Natural) -> Result<FirstByFirstWorking> {
    let two_digit = |n: &Natural| n.to_u32().filter(|v| (10..100).contains(v));
    let (Some(a), Some(b)) = (two_digit(x), two_digit(y)) else {
        return Err(SutraError::InvalidInput(format!(
            "both operands must have two digits, got {x} and {y}"
        )));
    };
    let (f1, u1) = a.div_rem(&10);
    let (f2, u2) = b.div_rem(&10);
    if f1 + f2 != 10 || u1 != u2 {
        return Err(SutraError::NotApplicable(format!(
            "{a} × {b}: the first digits must sum to 10 and the last digits agree"
        )));
    }
    let left = f1 * f2 + u1;
    let right = u1 * u1;
    Ok(FirstByFirstWorking {
        left,
        right,
        product: Natural::from(left * 100 + right),
    })
}
