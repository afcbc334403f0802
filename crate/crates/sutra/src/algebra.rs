//! Algebraic sutras: division by transposition (Paravartya), proportional
//! factoring (Anurupyena), elimination and retention (Lopana-sthapana),
//! the ultimate-and-twice-the-penultimate rule (Sopantya) and the
//! coefficient-sum check (Gunita-samuccaya).

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::oracle::long_divide;
use crate::polynomial::{int, Monomial, Polynomial, Rational, Var};
use crate::{Result, SutraError};

/// Working of a division by `x − c`: the divisor's constant is transposed
/// to `c`, and each quotient coefficient is the dividend coefficient plus
/// `c` times the previous one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParavartyaWorking {
    /// The transposed constant `c`.
    pub transposed: Rational,
    /// Running values from the leading coefficient down; the last one is
    /// the remainder.
    pub row: Vec<Rational>,
    /// The quotient.
    pub quotient: Polynomial,
    /// The (constant) remainder.
    pub remainder: Rational,
}

impl fmt::Display for ParavartyaWorking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row: Vec<String> = self.row.iter().map(Rational::to_string).collect();
        writeln!(f, "transpose: {}", self.transposed)?;
        writeln!(f, "row: {}", row.join(" "))?;
        write!(f, "Q = {}, R = {}", self.quotient, self.remainder)
    }
}

/// Divides a polynomial in `x` by the monic linear `x − c`.
///
/// ```
/// use sutra::{algebra::paravartya_divide, Polynomial};
/// let p: Polynomial = "x^3+7x^2+6x+5".parse().unwrap();
/// let w = paravartya_divide(&p, &"x-2".parse().unwrap()).unwrap();
/// assert_eq!(w.quotient.to_string(), "x^2+9x+24");
/// assert_eq!(w.remainder, sutra::polynomial::int(53));
/// ```
pub fn paravartya_divide(dividend: &Polynomial, divisor: &Polynomial) -> Result<ParavartyaWorking> {
    let coeffs = dividend
        .univariate()
        .ok_or_else(|| SutraError::InvalidInput(format!("{dividend} is not a polynomial in x")))?;
    let transposed = match divisor.univariate().as_deref() {
        Some([c, one]) if one.is_one() => -c,
        _ => {
            return Err(SutraError::InvalidInput(format!(
                "the divisor must be monic linear x − c, got {divisor}"
            )))
        }
    };
    let mut row: Vec<Rational> = Vec::with_capacity(coeffs.len());
    for a in coeffs.iter().rev() {
        let carried = row
            .last()
            .map(|prev| prev * &transposed)
            .unwrap_or_else(Rational::zero);
        row.push(a + carried);
    }
    let remainder = row.last().cloned().unwrap_or_else(Rational::zero);
    let quotient: Vec<Rational> = row[..row.len() - 1].iter().rev().cloned().collect();
    Ok(ParavartyaWorking {
        transposed,
        quotient: Polynomial::from_ascending(&quotient),
        row,
        remainder,
    })
}

/// A quadratic split into two linear factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    /// The factored polynomial.
    pub input: Polynomial,
    /// The two factors; their product is the input.
    pub factors: (Polynomial, Polynomial),
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} = ({})({})",
            self.input, self.factors.0, self.factors.1
        )
    }
}

/// Working of a proportional split of `ax² + bx + c`: the middle
/// coefficient splits as `b = p + q` with `a : p = q : c`, so the first
/// factor is `ax + p` reduced to lowest terms, and the second follows by
/// "the first by the first and the last by the last".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnurupyenaWorking {
    /// The split `(p, q)` of the middle coefficient.
    pub split: (Rational, Rational),
    /// The resulting factors.
    pub factorization: Factorization,
}

impl fmt::Display for AnurupyenaWorking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (p, q) = &self.split;
        writeln!(f, "split {} = {p} + {q}", p + q)?;
        write!(f, "{}", self.factorization)
    }
}

/// Factors `ax² + bx + c` over the rationals.
///
/// ```
/// use sutra::{algebra::anurupyena_factor, polynomial::int};
/// let w = anurupyena_factor(&int(2), &int(5), &int(2)).unwrap();
/// assert_eq!(w.factorization.to_string(), "2x^2+5x+2 = (x+2)(2x+1)");
/// ```
pub fn anurupyena_factor(a: &Rational, b: &Rational, c: &Rational) -> Result<AnurupyenaWorking> {
    if a.is_zero() {
        return Err(SutraError::InvalidInput(
            "the x² coefficient must be nonzero".into(),
        ));
    }
    let input = Polynomial::from_ascending(&[c.clone(), b.clone(), a.clone()]);
    // p and q are the roots of t² − bt + ac.
    let root = rational_sqrt(&(b * b - int(4) * a * c))
        .ok_or_else(|| SutraError::NotFactorable(format!("{input} has no rational split")))?;
    let p = (b + &root) / int(2);
    let q = b - &p;
    let (_, first) = Polynomial::from_ascending(&[p.clone(), a.clone()]).primitive();
    let (second, rest) = long_divide(&input, &first)?;
    debug_assert!(rest.is_zero());
    Ok(AnurupyenaWorking {
        split: (p, q),
        factorization: verified(input, first, second)?,
    })
}

fn verified(input: Polynomial, first: Polynomial, second: Polynomial) -> Result<Factorization> {
    if &first * &second != input {
        return Err(SutraError::NotFactorable(format!(
            "({first})({second}) ≠ {input}"
        )));
    }
    Ok(Factorization {
        input,
        factors: (first, second),
    })
}

/// The rational square root of `r`, if it has one.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let exact = |n: &BigInt| Some(n.sqrt()).filter(|s| s * s == *n);
    Some(Rational::new(exact(r.numer())?, exact(r.denom())?))
}

/// Working of a highest common factor found by alternately eliminating
/// the highest and the lowest powers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LopanaHcfWorking {
    /// The successive pairs, each reduced to primitive form with any power
    /// of `x` not common to both inputs removed.
    pub pairs: Vec<(Polynomial, Polynomial)>,
    /// The common factor, primitive with a positive leading coefficient.
    pub hcf: Polynomial,
}

impl fmt::Display for LopanaHcfWorking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, b) in &self.pairs {
            writeln!(f, "{a} ; {b}")?;
        }
        write!(f, "HCF = {}", self.hcf)
    }
}

/// Highest common factor of two polynomials in `x`.
///
/// When the two have equal degree, one combination removes the highest
/// power and another the lowest; the pair of results (with numeric and
/// `x`-power content stripped) has the same common factor. When the
/// degrees differ, or the two combinations are dependent, the higher
/// polynomial is reduced against the lower one instead. The loop ends
/// when one side vanishes.
///
/// ```
/// use sutra::{algebra::lopana_hcf, Polynomial};
/// let p: Polynomial = "x^2+7x+6".parse().unwrap();
/// let q: Polynomial = "x^2-5x-6".parse().unwrap();
/// assert_eq!(lopana_hcf(&p, &q).unwrap().hcf.to_string(), "x+1");
/// ```
pub fn lopana_hcf(p: &Polynomial, q: &Polynomial) -> Result<LopanaHcfWorking> {
    if p.is_zero() || q.is_zero() {
        return Err(SutraError::ZeroPolynomial);
    }
    let low = |r: &Polynomial| -> Result<u32> {
        let coeffs = r
            .univariate()
            .ok_or_else(|| SutraError::InvalidInput(format!("{r} is not a polynomial in x")))?;
        Ok(coeffs.iter().position(|c| !c.is_zero()).expect("nonzero") as u32)
    };
    let common_power = low(p)?.min(low(q)?);
    let strip = |r: &Polynomial| r.strip_monomial_content().primitive().1;
    let (mut a, mut b) = (strip(p), strip(q));
    let mut pairs = Vec::new();
    let hcf = loop {
        pairs.push((a.clone(), b.clone()));
        if b.is_zero() {
            break a;
        }
        if a.is_zero() {
            break b;
        }
        let (da, db) = (degree(&a), degree(&b));
        if da == 0 || db == 0 {
            break Polynomial::int(1);
        }
        if da < db {
            std::mem::swap(&mut a, &mut b);
        }
        let (la, lb) = (a.leading_coeff(), b.leading_coeff());
        let top = &a.scale(&lb) - &b.shift(Var::X, da.abs_diff(db)).scale(&la);
        if da == db {
            let (ta, tb) = (a.coeff(Monomial::ONE), b.coeff(Monomial::ONE));
            if &la * &tb != &lb * &ta {
                let bottom = &a.scale(&tb) - &b.scale(&ta);
                (a, b) = (strip(&top), strip(&bottom));
                continue;
            }
        }
        (a, b) = (b, strip(&top));
    };
    Ok(LopanaHcfWorking {
        pairs,
        hcf: hcf.shift(Var::X, common_power),
    })
}

fn degree(p: &Polynomial) -> u32 {
    p.degree().unwrap_or(0)
}

/// Working of a factorization of a homogeneous quadratic in `x, y, z`:
/// eliminating `z` and then `y` leaves two binary quadratics whose factors
/// are merged through their shared `x` terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LopanaFactorWorking {
    /// The input with `z = 0`, and the factors it inherits.
    pub without_z: Factorization,
    /// The input with `y = 0`, and the factors it inherits.
    pub without_y: Factorization,
    /// The merged factorization.
    pub factorization: Factorization,
}

impl fmt::Display for LopanaFactorWorking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "z = 0: {}", self.without_z)?;
        writeln!(f, "y = 0: {}", self.without_y)?;
        write!(f, "{}", self.factorization)
    }
}

/// Factors a homogeneous quadratic in `x, y, z` into two linear forms.
///
/// ```
/// use sutra::{algebra::lopana_factor3, Polynomial};
/// let q: Polynomial = "2x^2+7xy+6y^2+11yz+7zx+3z^2".parse().unwrap();
/// let (f, g) = lopana_factor3(&q).unwrap().factorization.factors;
/// assert_eq!((f.to_string(), g.to_string()), ("x+2y+3z".into(), "2x+3y+z".into()));
/// ```
pub fn lopana_factor3(q: &Polynomial) -> Result<LopanaFactorWorking> {
    if q.is_zero() {
        return Err(SutraError::ZeroPolynomial);
    }
    if q.degree() != Some(2) || !q.is_homogeneous() {
        return Err(SutraError::InvalidInput(format!(
            "{q} is not a homogeneous quadratic"
        )));
    }
    let v = |s: Var| Polynomial::var(s);
    let x_plus = |s: Var| &v(s) + &v(Var::X);
    let x_minus = |s: Var| &v(s) - &v(Var::X);
    let identity = [v(Var::X), v(Var::Y), v(Var::Z)];
    // Changes of variable (forward, inverse) that bring an x² term in.
    let changes = [
        (identity.clone(), identity.clone()),
        (
            [v(Var::Y), v(Var::X), v(Var::Z)],
            [v(Var::Y), v(Var::X), v(Var::Z)],
        ),
        (
            [v(Var::Z), v(Var::Y), v(Var::X)],
            [v(Var::Z), v(Var::Y), v(Var::X)],
        ),
        (
            [v(Var::X), x_plus(Var::Y), v(Var::Z)],
            [v(Var::X), x_minus(Var::Y), v(Var::Z)],
        ),
        (
            [v(Var::X), v(Var::Y), x_plus(Var::Z)],
            [v(Var::X), v(Var::Y), x_minus(Var::Z)],
        ),
        (
            [v(Var::X), x_plus(Var::Y), x_plus(Var::Z)],
            [v(Var::X), x_minus(Var::Y), x_minus(Var::Z)],
        ),
    ];
    let x2 = Monomial::power(Var::X, 2);
    let (changed, inverse) = changes
        .iter()
        .map(|(forward, inverse)| (q.substitute(forward), inverse))
        .find(|(changed, _)| !changed.coeff(x2).is_zero())
        .expect("a nonzero quadratic gains an x² term under one of the changes");
    let (l1, l2) = split_forms(&changed)
        .ok_or_else(|| SutraError::NotFactorable(format!("{q} has no rational linear factors")))?;
    let (_, f1) = l1.substitute(inverse).primitive();
    let (_, f2) = l2.substitute(inverse).primitive();
    let mut factors = [f1, f2];
    factors.sort_by_key(|f| Var::ALL.map(|s| f.coeff(Monomial::power(s, 1))));
    let [first, second] = factors;
    let scale = q.leading_coeff() / (&first * &second).leading_coeff();
    let second = second.scale(&scale);
    let restrict = |drop: Var| Factorization {
        input: q.drop_var(drop),
        factors: (first.drop_var(drop), second.drop_var(drop)),
    };
    Ok(LopanaFactorWorking {
        without_z: restrict(Var::Z),
        without_y: restrict(Var::Y),
        factorization: verified(q.clone(), first.clone(), second.clone())?,
    })
}

/// With `a ≠ 0`: `ax² + dxy + by² = a(x − σ₁y)(x − σ₂y)` and
/// `ax² + fxz + cz² = a(x − ρ₁z)(x − ρ₂z)`; try both ways of pairing the
/// `y` and `z` parts behind a common `x`.
fn split_forms(q: &Polynomial) -> Option<(Polynomial, Polynomial)> {
    let m = |e: [u32; 3]| q.coeff(Monomial(e));
    let a = m([2, 0, 0]);
    let roots = |lin: Rational, sq: Rational| -> Option<(Rational, Rational)> {
        let root = rational_sqrt(&(&lin * &lin - int(4) * &a * sq))?;
        let two_a = int(2) * &a;
        Some(((-&lin + &root) / &two_a, (-lin - root) / two_a))
    };
    let (s1, s2) = roots(m([1, 1, 0]), m([0, 2, 0]))?;
    let (r1, r2) = roots(m([1, 0, 1]), m([0, 0, 2]))?;
    let form = |s: &Rational, r: &Rational| {
        Polynomial::from_terms([
            (Monomial::power(Var::X, 1), Rational::one()),
            (Monomial::power(Var::Y, 1), -s),
            (Monomial::power(Var::Z, 1), -r),
        ])
    };
    [(r1.clone(), r2.clone()), (r2, r1)]
        .into_iter()
        .find_map(|(ra, rb)| {
            let (l1, l2) = (form(&s1, &ra), form(&s2, &rb));
            ((&l1 * &l2).scale(&a) == *q).then_some((l1, l2))
        })
}

/// Working of the equation `1/(AB) + 1/(AC) = 1/(AD) + 1/(BC)` with
/// `A, B, C, D = x + c, x + c + d, x + c + 2d, x + c + 3d`: the ultimate
/// plus twice the penultimate vanishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SopantyaWorking {
    /// `L + 2P = (x + c + 3d) + 2(x + c + 2d)`.
    pub linear: Polynomial,
    /// The root of `L + 2P = 0`.
    pub root: Rational,
}

impl fmt::Display for SopantyaWorking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L + 2P = {} = 0, x = {}", self.linear, self.root)
    }
}

/// Solves the arithmetic-progression fraction equation with first factor
/// `x + c` and common difference `d`; the root is checked by substitution.
///
/// ```
/// use sutra::{algebra::sopantya_solve, polynomial::{int, ratio}};
/// let w = sopantya_solve(&int(2), &int(1)).unwrap();
/// assert_eq!(w.linear.to_string(), "3x+13");
/// assert_eq!(w.root, ratio(-13, 3));
/// ```
pub fn sopantya_solve(c: &Rational, d: &Rational) -> Result<SopantyaWorking> {
    if d.is_zero() {
        return Err(SutraError::InvalidInput(
            "the common difference must be nonzero".into(),
        ));
    }
    let factor = |k: i64| Polynomial::from_ascending(&[c + int(k) * d, Rational::one()]);
    let linear = &factor(3) + &factor(2).scale(&int(2));
    let coeffs = linear.univariate().expect("linear in x");
    let root = -&coeffs[0] / &coeffs[1];
    let [a, b, cc, dd] = [0, 1, 2, 3].map(|k| factor(k).eval_x(&root));
    if [&a, &b, &cc, &dd].iter().any(|v| v.is_zero()) {
        return Err(SutraError::DivisionByZero(format!("x = {root} is a pole")));
    }
    let lhs = (&a * &b).recip() + (&a * &cc).recip();
    let rhs = (&a * &dd).recip() + (&b * &cc).recip();
    if lhs != rhs {
        return Err(SutraError::NotApplicable(format!(
            "x = {root} does not satisfy the equation"
        )));
    }
    Ok(SopantyaWorking { linear, root })
}

/// Outcome of the coefficient-sum check of a claimed factorization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GunitaCheck {
    /// `S_c` of each factor.
    pub factor_sums: Vec<Rational>,
    /// `S_c` of the product.
    pub product_sum: Rational,
    /// The product of the factor sums equals the product's sum.
    pub sums_agree: bool,
    /// The factors multiply out to the product.
    pub expansion_agrees: bool,
}

impl GunitaCheck {
    /// Both checks pass.
    pub fn holds(&self) -> bool {
        self.sums_agree && self.expansion_agrees
    }
}

impl fmt::Display for GunitaCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sums: Vec<String> = self.factor_sums.iter().map(|s| s.to_string()).collect();
        write!(
            f,
            "{} = {}: {}",
            sums.join(" × "),
            self.product_sum,
            self.holds()
        )
    }
}

/// Checks `S_c(product) = Π S_c(factor)` together with the expansion.
///
/// ```
/// use sutra::{algebra::gunita_check, Polynomial};
/// let p = |s: &str| s.parse::<Polynomial>().unwrap();
/// let check = gunita_check(&[p("x+7"), p("x+9")], &p("x^2+16x+63"));
/// assert!(check.holds());
/// assert_eq!(check.to_string(), "8 × 10 = 80: true");
/// ```
pub fn gunita_check(factors: &[Polynomial], product: &Polynomial) -> GunitaCheck {
    let factor_sums: Vec<Rational> = factors.iter().map(Polynomial::coefficient_sum).collect();
    let product_sum = product.coefficient_sum();
    let sums_agree = factor_sums.iter().cloned().product::<Rational>() == product_sum;
    let expansion = factors.iter().fold(Polynomial::int(1), |acc, f| &acc * f);
    GunitaCheck {
        factor_sums,
        product_sum,
        sums_agree,
        expansion_agrees: expansion == *product,
    }
}

/// Working of a quadratic quotient of a cubic by a known linear factor:
/// first coefficient by first, last by last, and the middle one from the
/// coefficient sums.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GunitaFill {
    /// `S_c(product) / S_c(factor)`.
    pub quotient_sum: Rational,
    /// The quotient quadratic.
    pub quotient: Polynomial,
}

impl fmt::Display for GunitaFill {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S_c(Q) = {}, Q = {}", self.quotient_sum, self.quotient)
    }
}

/// Completes the quotient of a cubic by a known linear factor in `x`.
///
/// ```
/// use sutra::{algebra::gunita_fill_middle, Polynomial};
/// let p = |s: &str| s.parse::<Polynomial>().unwrap();
/// let fill = gunita_fill_middle(&p("x+1"), &p("x^3+6x^2+11x+6")).unwrap();
/// assert_eq!(fill.quotient.to_string(), "x^2+5x+6");
/// ```
pub fn gunita_fill_middle(known_factor: &Polynomial, product: &Polynomial) -> Result<GunitaFill> {
    let (Some(f), Some(p)) = (known_factor.univariate(), product.univariate()) else {
        return Err(SutraError::InvalidInput(
            "factor and product must be polynomials in x".into(),
        ));
    };
    if f.len() != 2 || f[1].is_zero() || p.len() != 4 || p[3].is_zero() {
        return Err(SutraError::InvalidInput(format!(
            "need a linear factor of a cubic, got {known_factor} and {product}"
        )));
    }
    let factor_sum = known_factor.coefficient_sum();
    if factor_sum.is_zero() {
        return Err(SutraError::DivisionByZero(format!(
            "S_c({known_factor}) = 0"
        )));
    }
    if f[0].is_zero() {
        return Err(SutraError::DivisionByZero(format!(
            "{known_factor} has no constant term"
        )));
    }
    let first = &p[3] / &f[1];
    let last = &p[0] / &f[0];
    let quotient_sum = product.coefficient_sum() / factor_sum;
    let middle = &quotient_sum - (&first + &last);
    let quotient = Polynomial::from_ascending(&[last, middle, first]);
    if &quotient * known_factor != *product {
        return Err(SutraError::NotApplicable(format!(
            "{known_factor} does not divide {product}"
        )));
    }
    Ok(GunitaFill {
        quotient_sum,
        quotient,
    })
}
