//! The `sutra` subcommands: print a procedure's working and result, and
//! with `--verify` the conventional answer beside it.

use std::fmt::{Display, Write as _};

use clap::{Subcommand, ValueEnum};
use cogmap::neutro::parse_rational;
use sutra::algebra::{
    anurupyena_factor, gunita_check, gunita_fill_middle, lopana_factor3, lopana_hcf,
    paravartya_divide, sopantya_solve,
};
use sutra::multiply::{
    ekanyuna_multiply, first_by_first_last_by_last, nikhilam_multiply, square_ending_5,
    urdhva_multiply,
};
use sutra::oracle::{euclid_gcd, long_divide, long_division_period};
use sutra::recurring::{ekadhika_expand, sesanya_expand, EkadhikaMethod, Expansion};
use sutra::{Natural, Polynomial, Rational, SutraError};

use crate::Failure;

#[derive(Subcommand)]
pub(crate) enum Procedure {
    /// Recurring decimal of 1/d for d ending in 9.
    Ekadhika {
        /// Denominator.
        denominator: String,
        /// Which working to show.
        #[arg(long, value_enum, default_value_t = MethodArg::Multiply)]
        method: MethodArg,
    },
    /// Product near a power-of-10 base (square if one operand is given).
    Nikhilam {
        /// Multiplicand.
        x: String,
        /// Multiplier; defaults to the multiplicand.
        y: Option<String>,
        /// Working base; defaults to the smallest power of 10 not below the operands.
        #[arg(long)]
        base: Option<String>,
    },
    /// Vertical and crosswise product.
    Urdhva {
        /// Multiplicand.
        x: String,
        /// Multiplier.
        y: String,
    },
    /// Square of a number ending in 5.
    Square5 {
        /// Number ending in 5.
        x: String,
    },
    /// Product by a multiplier of nines.
    Ekanyuna {
        /// Multiplicand.
        x: String,
        /// 9, 99, 999, …
        nines: String,
    },
    /// Two-digit product by "first by first, last by last".
    Firstlast {
        /// Multiplicand.
        x: String,
        /// Multiplier.
        y: String,
    },
    /// Division by x − c.
    Paravartya {
        /// Dividend polynomial in x.
        dividend: String,
        /// Monic linear divisor.
        divisor: String,
    },
    /// Factor ax² + bx + c by a proportional split.
    Factorq {
        /// x² coefficient.
        a: String,
        /// x coefficient.
        b: String,
        /// Constant.
        c: String,
    },
    /// Highest common factor by alternate elimination.
    Hcf {
        /// First polynomial in x.
        p: String,
        /// Second polynomial in x.
        q: String,
    },
    /// Factor a homogeneous quadratic in x, y, z.
    Factor3 {
        /// The quadratic.
        q: String,
    },
    /// Recurring decimal of 1/d from its remainders.
    Sesanya {
        /// Denominator coprime to 10.
        denominator: String,
    },
    /// Solve 1/(AB) + 1/(AC) = 1/(AD) + 1/(BC) for A = x + c in steps of d.
    Sopantya {
        /// Constant of the first factor.
        #[arg(allow_hyphen_values = true)]
        c: String,
        /// Common difference.
        #[arg(allow_hyphen_values = true)]
        d: String,
    },
    /// Coefficient-sum check of a factorization, or completion of a quotient.
    Gunita {
        /// The product polynomial.
        product: String,
        /// Its factors (one known factor with --fill).
        #[arg(required = true)]
        factors: Vec<String>,
        /// Find the quadratic quotient of a cubic by the single given factor.
        #[arg(long)]
        fill: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
pub(crate) enum MethodArg {
    Multiply,
    Divide,
}

pub(crate) fn run(procedure: &Procedure, verify: bool) -> Result<String, Failure> {
    let mut out = String::new();
    let check =
        |out: &mut String, result: &dyn Display, oracle: &dyn Display| -> Result<(), Failure> {
            if !verify {
                return Ok(());
            }
            let (r, o) = (result.to_string(), oracle.to_string());
            let verdict = if r == o { "agrees" } else { "DISAGREES" };
            let _ = writeln!(out, "oracle: {o} ({verdict})");
            if r == o {
                Ok(())
            } else {
                Err(Failure::Invalid(format!(
                    "{out}procedure gave {r}, conventional answer {o}"
                )))
            }
        };
    match procedure {
        Procedure::Ekadhika {
            denominator,
            method,
        } => {
            let d = natural(denominator)?;
            let method = match method {
                MethodArg::Multiply => EkadhikaMethod::Multiply,
                MethodArg::Divide => EkadhikaMethod::Divide,
            };
            let e = ekadhika_expand(&d, method).map_err(refused)?;
            let _ = writeln!(out, "multiplier {}", e.multiplier);
            expansion(&mut out, &e);
            check(&mut out, &e.decimal.digit_string(), &oracle_period(&d)?)?;
        }
        Procedure::Sesanya { denominator } => {
            let d = natural(denominator)?;
            let e = sesanya_expand(&d).map_err(refused)?;
            let remainders: Vec<String> = e.steps.iter().map(|(_, r)| r.to_string()).collect();
            let _ = writeln!(
                out,
                "remainders {} × {}",
                remainders.join(" "),
                e.multiplier
            );
            expansion(&mut out, &e);
            check(&mut out, &e.decimal.digit_string(), &oracle_period(&d)?)?;
        }
        Procedure::Nikhilam { x, y, base } => {
            let x = natural(x)?;
            let y = y
                .as_deref()
                .map(natural)
                .transpose()?
                .unwrap_or_else(|| x.clone());
            let base = match base {
                Some(b) => natural(b)?,
                None => default_base(&x, &y),
            };
            let w = nikhilam_multiply(&x, &y, &base).map_err(refused)?;
            let _ = writeln!(out, "{w}");
            check(&mut out, &w.product, &(&x * &y))?;
        }
        Procedure::Urdhva { x, y } => {
            let (x, y) = (natural(x)?, natural(y)?);
            let w = urdhva_multiply(&x, &y);
            let _ = writeln!(out, "{w}");
            check(&mut out, &w.product, &(&x * &y))?;
        }
        Procedure::Square5 { x } => {
            let x = natural(x)?;
            let w = square_ending_5(&x).map_err(refused)?;
            let _ = writeln!(out, "{w}");
            check(&mut out, &w.product, &(&x * &x))?;
        }
        Procedure::Ekanyuna { x, nines } => {
            let (x, nines) = (natural(x)?, natural(nines)?);
            let w = ekanyuna_multiply(&x, &nines).map_err(refused)?;
            let _ = writeln!(out, "{w}");
            check(&mut out, &w.product, &(&x * &nines))?;
        }
        Procedure::Firstlast { x, y } => {
            let (x, y) = (natural(x)?, natural(y)?);
            match first_by_first_last_by_last(&x, &y) {
                Ok(w) => {
                    let _ = writeln!(out, "{w}");
                    check(&mut out, &w.product, &(&x * &y))?;
                }
                Err(SutraError::NotApplicable(reason)) => {
                    let _ = writeln!(out, "NOT_APPLICABLE: {reason}");
                    let _ = writeln!(out, "conventional product {}", &x * &y);
                    return Err(Failure::Request(out.trim_end().to_string()));
                }
                Err(e) => return Err(refused(e)),
            }
        }
        Procedure::Paravartya { dividend, divisor } => {
            let (p, d) = (polynomial(dividend)?, polynomial(divisor)?);
            let w = paravartya_divide(&p, &d).map_err(refused)?;
            let _ = writeln!(out, "{w}");
            let (q, r) = long_divide(&p, &d).map_err(refused)?;
            let result = format!("Q = {}, R = {}", w.quotient, w.remainder);
            check(&mut out, &result, &format!("Q = {q}, R = {r}"))?;
        }
        Procedure::Factorq { a, b, c } => {
            let (a, b, c) = (rational(a)?, rational(b)?, rational(c)?);
            let w = anurupyena_factor(&a, &b, &c).map_err(refused)?;
            let _ = writeln!(out, "{w}");
            let (f, g) = &w.factorization.factors;
            check(&mut out, &(f * g), &w.factorization.input)?;
        }
        Procedure::Hcf { p, q } => {
            let (p, q) = (polynomial(p)?, polynomial(q)?);
            let w = lopana_hcf(&p, &q).map_err(refused)?;
            let _ = writeln!(out, "{w}");
            let monic = |h: &Polynomial| h.scale(&h.leading_coeff().recip());
            check(
                &mut out,
                &monic(&w.hcf),
                &euclid_gcd(&p, &q).map_err(refused)?,
            )?;
        }
        Procedure::Factor3 { q } => {
            let q = polynomial(q)?;
            let w = lopana_factor3(&q).map_err(refused)?;
            let _ = writeln!(out, "{w}");
            let (f, g) = &w.factorization.factors;
            check(&mut out, &(f * g), &q)?;
        }
        Procedure::Sopantya { c, d } => {
            let (c, d) = (rational(c)?, rational(d)?);
            let w = sopantya_solve(&c, &d).map_err(refused)?;
            let _ = writeln!(out, "{w}");
            check(&mut out, &w.root, &cleared_root(&c, &d))?;
        }
        Procedure::Gunita {
            product,
            factors,
            fill,
        } => {
            let product = polynomial(product)?;
            let factors = factors
                .iter()
                .map(|f| polynomial(f))
                .collect::<Result<Vec<_>, _>>()?;
            if *fill {
                let [factor] = factors.as_slice() else {
                    return Err(Failure::Request(
                        "--fill takes exactly one known factor".into(),
                    ));
                };
                let w = gunita_fill_middle(factor, &product).map_err(refused)?;
                let _ = writeln!(out, "{w}");
                let (q, _) = long_divide(&product, factor).map_err(refused)?;
                check(&mut out, &w.quotient, &q)?;
            } else {
                let c = gunita_check(&factors, &product);
                let _ = writeln!(out, "{c}");
                let expansion = factors.iter().fold(Polynomial::int(1), |acc, f| &acc * f);
                check(&mut out, &c.holds(), &(expansion == product))?;
            }
        }
    }
    Ok(out)
}

fn expansion(out: &mut String, e: &Expansion) {
    let _ = writeln!(
        out,
        "{} (period {})",
        e.decimal.digit_string(),
        e.decimal.period()
    );
}

fn oracle_period(d: &Natural) -> Result<String, Failure> {
    Ok(long_division_period(d).map_err(refused)?.digit_string())
}

fn default_base(x: &Natural, y: &Natural) -> Natural {
    let mut base = Natural::from(10u32);
    while &base < x.max(y) {
        base *= 10u32;
    }
    base
}

/// Clears denominators of the progression equation and solves the linear
/// remainder `(B + C)·D − (B·C + A·D) = 0`.
fn cleared_root(c: &Rational, d: &Rational) -> Rational {
    let x = Polynomial::var(sutra::Var::X);
    let term = |k: i64| &x + &Polynomial::constant(c + Rational::from_integer(k.into()) * d);
    let (a, b, cc, dd) = (term(0), term(1), term(2), term(3));
    let cleared = &(&(&b + &cc) * &dd) - &(&(&b * &cc) + &(&a * &dd));
    let coeffs = cleared.univariate().expect("polynomial in x");
    -&coeffs[0] / &coeffs[1]
}

fn refused(e: SutraError) -> Failure {
    Failure::Request(e.to_string())
}

fn natural(text: &str) -> Result<Natural, Failure> {
    text.trim()
        .parse()
        .map_err(|_| Failure::Request(format!("{text:?} is not a natural number")))
}

fn rational(text: &str) -> Result<Rational, Failure> {
    parse_rational(text.trim()).ok_or_else(|| Failure::Request(format!("{text:?} is not a number")))
}

fn polynomial(text: &str) -> Result<Polynomial, Failure> {
    text.parse()
        .map_err(|e| Failure::Request(format!("{text:?}: {e}")))
}
