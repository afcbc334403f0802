//! Crisp inference on fuzzy cognitive maps (FCMs) and fuzzy relational maps
//! (FRMs): propagate a `{0,1}` state through the signed matrix, threshold,
//! re-clamp the seeded nodes, and repeat until a state recurs.
//!
//! Node indices in this API are 0-based; error messages report them 1-based.

use num_bigint::BigInt;

use crate::matrix::Matrix;
use crate::neutro::Rational;
use crate::pattern::{
    run_to_recurrence, state_bound, EngineError, HiddenPattern, Pair, PairRaw, Side,
};

/// A `{0,1}` state vector.
pub type CrispState = Vec<u8>;

/// Thresholds a raw vector (`> 0 → 1`, `≤ 0 → 0`) and then forces every
/// clamped index to 1.
///
/// ```
/// use cogmap::crisp::threshold_update;
/// assert_eq!(threshold_update(&[0, 0, -1, 0, 1], &[0]).unwrap(), vec![1, 0, 0, 0, 1]);
/// assert_eq!(threshold_update(&[0, 0, 0], &[1]).unwrap(), vec![0, 1, 0]);
/// ```
pub fn threshold_update(raw: &[i64], clamp: &[usize]) -> Result<CrispState, EngineError> {
    let mut state: CrispState = raw.iter().map(|&x| u8::from(x > 0)).collect();
    for &i in clamp {
        *state.get_mut(i).ok_or(EngineError::IndexOutOfRange {
            index: i + 1,
            len: raw.len(),
        })? = 1;
    }
    Ok(state)
}

/// One FCM pass: returns the raw product `A·E` and its thresholded, clamped
/// image.
pub fn fcm_step(
    e: &Matrix<i64>,
    a: &[u8],
    clamp: &[usize],
) -> Result<(Vec<i64>, CrispState), EngineError> {
    require_square(e)?;
    require_len("state", a.len(), e.rows())?;
    let raw = forward(e, a);
    let next = threshold_update(&raw, clamp)?;
    Ok((raw, next))
}

/// Runs an FCM from `seed` to its hidden pattern, clamping the seed's ON
/// nodes at every step.
///
/// ```
/// use cogmap::{crisp::fcm_infer, Classification, Matrix};
/// let e = Matrix::from_rows(vec![
///     vec![0, 0, -1, 0, 1],
///     vec![0, 0, 0, -1, 0],
///     vec![0, -1, 0, 0, -1],
///     vec![-1, 1, 0, 0, 0],
///     vec![0, 0, 0, 1, 0],
/// ]).unwrap();
/// let p = fcm_infer(&e, &[1, 0, 0, 0, 0]).unwrap();
/// assert_eq!(p.classification, Classification::LimitCycle);
/// assert_eq!(p.period, 4);
/// assert_eq!(p.states[0], vec![1, 0, 0, 0, 1]);
/// ```
pub fn fcm_infer(
    e: &Matrix<i64>,
    seed: &[u8],
) -> Result<HiddenPattern<CrispState, Vec<i64>>, EngineError> {
    fcm_infer_capped(e, seed, state_bound(2, e.rows()))
}

/// [`fcm_infer`] with an explicit step cap.
pub fn fcm_infer_capped(
    e: &Matrix<i64>,
    seed: &[u8],
    cap: usize,
) -> Result<HiddenPattern<CrispState, Vec<i64>>, EngineError> {
    require_square(e)?;
    let clamp = crisp_seed(seed, e.rows(), "seed")?;
    run_to_recurrence(seed.to_vec(), cap, |a| {
        let raw = forward(e, a);
        let next = threshold_update(&raw, &clamp).expect("clamp indices validated");
        (raw, next)
    })
}

/// Runs an FRM from a seed on `side` to its fixed binary pair or limit
/// cycle.
///
/// Each round maps the seeded side across the matrix (`A·E` from the domain,
/// `B·Eᵀ` from the range), thresholds, maps back, thresholds, and clamps the
/// seed's ON nodes on the seeded side only. Recurrence is detected on the
/// (domain, range) pair; the seed pair pairs the seed with an all-zero
/// vector on the opposite side.
pub fn frm_infer(
    e: &Matrix<i64>,
    seed: &[u8],
    side: Side,
) -> Result<HiddenPattern<Pair<u8>, PairRaw<i64>>, EngineError> {
    frm_infer_capped(e, seed, side, state_bound(2, e.rows() + e.cols()))
}

/// [`frm_infer`] with an explicit round cap.
pub fn frm_infer_capped(
    e: &Matrix<i64>,
    seed: &[u8],
    side: Side,
    cap: usize,
) -> Result<HiddenPattern<Pair<u8>, PairRaw<i64>>, EngineError> {
    let seed_len = match side {
        Side::Domain => e.rows(),
        Side::Range => e.cols(),
    };
    let clamp = crisp_seed(seed, seed_len, "seed")?;
    let start = match side {
        Side::Domain => Pair {
            domain: seed.to_vec(),
            range: vec![0; e.cols()],
        },
        Side::Range => Pair {
            domain: vec![0; e.rows()],
            range: seed.to_vec(),
        },
    };
    run_to_recurrence(start, cap, |pair| match side {
        Side::Domain => {
            let range_raw = forward(e, &pair.domain);
            let range = threshold_update(&range_raw, &[]).expect("no clamp");
            let domain_raw = backward(e, &range);
            let domain = threshold_update(&domain_raw, &clamp).expect("clamp validated");
            let raw = PairRaw {
                domain: domain_raw,
                range: range_raw,
            };
            (raw, Pair { domain, range })
        }
        Side::Range => {
            let domain_raw = backward(e, &pair.range);
            let domain = threshold_update(&domain_raw, &[]).expect("no clamp");
            let range_raw = forward(e, &domain);
            let range = threshold_update(&range_raw, &clamp).expect("clamp validated");
            let raw = PairRaw {
                domain: domain_raw,
                range: range_raw,
            };
            (raw, Pair { domain, range })
        }
    })
}

/// Sums the adjacency matrices of several experts' FCMs into the combined
/// FCM.
///
/// ```
/// use cogmap::{crisp::fcm_combine, Matrix};
/// let a = Matrix::from_rows(vec![vec![0, 1], vec![-1, 0]]).unwrap();
/// let b = Matrix::from_rows(vec![vec![0, -1], vec![-1, 0]]).unwrap();
/// assert_eq!(fcm_combine(&[a, b]).unwrap().to_rows(), vec![vec![0, 0], vec![-2, 0]]);
/// ```
pub fn fcm_combine(matrices: &[Matrix<i64>]) -> Result<Matrix<i64>, EngineError> {
    if let Some(first) = matrices.first() {
        require_square(first)?;
    }
    frm_combine(matrices)
}

/// Sums the relational matrices of several experts' FRMs.
pub fn frm_combine(matrices: &[Matrix<i64>]) -> Result<Matrix<i64>, EngineError> {
    let first = require_same_shape(matrices)?;
    Ok(Matrix::from_fn(first.rows(), first.cols(), |i, j| {
        matrices.iter().map(|m| m[(i, j)]).sum()
    }))
}

/// Divides the combined matrix by the number of experts, producing a fuzzy
/// matrix with entries in `[0, 1]`.
///
/// Fails if any summed entry is negative, since the quotient would leave the
/// unit interval.
pub fn fcm_average(matrices: &[Matrix<i64>]) -> Result<Matrix<Rational>, EngineError> {
    let sum = frm_combine(matrices)?;
    let count = BigInt::from(matrices.len());
    for i in 0..sum.rows() {
        for j in 0..sum.cols() {
            if sum[(i, j)] < 0 {
                return Err(EngineError::NegativeAggregate {
                    row: i + 1,
                    col: j + 1,
                    value: sum[(i, j)].to_string(),
                });
            }
        }
    }
    Ok(sum.map(|&x| Rational::new(BigInt::from(x), count.clone())))
}

/// `A·E`: component `j` is `Σᵢ aᵢ·eᵢⱼ`.
fn forward(e: &Matrix<i64>, a: &[u8]) -> Vec<i64> {
    let mut out = vec![0i64; e.cols()];
    for (i, row) in e.iter_rows().enumerate() {
        if a[i] != 0 {
            for (o, &x) in out.iter_mut().zip(row) {
                *o += i64::from(a[i]) * x;
            }
        }
    }
    out
}

/// `B·Eᵀ`: component `i` is `Σⱼ bⱼ·eᵢⱼ`.
fn backward(e: &Matrix<i64>, b: &[u8]) -> Vec<i64> {
    e.iter_rows()
        .map(|row| row.iter().zip(b).map(|(&x, &bj)| x * i64::from(bj)).sum())
        .collect()
}

/// Validates a crisp seed and returns its ON indices.
pub(crate) fn crisp_seed(
    seed: &[u8],
    len: usize,
    what: &'static str,
) -> Result<Vec<usize>, EngineError> {
    require_len(what, seed.len(), len)?;
    if let Some(i) = seed.iter().position(|&b| b > 1) {
        return Err(EngineError::NonCrispSeed { index: i + 1 });
    }
    let on: Vec<usize> = (0..len).filter(|&i| seed[i] == 1).collect();
    if on.is_empty() {
        return Err(EngineError::EmptySeed);
    }
    Ok(on)
}

pub(crate) fn require_len(
    what: &'static str,
    found: usize,
    expected: usize,
) -> Result<(), EngineError> {
    if found == expected {
        Ok(())
    } else {
        Err(EngineError::Dimension {
            what,
            expected,
            found,
        })
    }
}

pub(crate) fn require_square<T>(m: &Matrix<T>) -> Result<(), EngineError> {
    if m.is_square() {
        Ok(())
    } else {
        Err(EngineError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        })
    }
}

pub(crate) fn require_same_shape<T>(matrices: &[Matrix<T>]) -> Result<&Matrix<T>, EngineError> {
    let first = matrices.first().ok_or(EngineError::NoMatrices)?;
    for (k, m) in matrices.iter().enumerate() {
        if m.shape() != first.shape() {
            return Err(EngineError::ShapeMismatch {
                index: k + 1,
                expected: first.shape(),
                found: m.shape(),
            });
        }
    }
    Ok(first)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: Vec<Vec<i64>>) -> Matrix<i64> {
        Matrix::from_rows(rows).unwrap()
    }

    #[test]
    fn threshold_examples() {
        assert_eq!(
            threshold_update(&[-1, 1, -1, 1, 1], &[0]).unwrap(),
            vec![1, 1, 0, 1, 1]
        );
        assert_eq!(
            threshold_update(&[1], &[3]),
            Err(EngineError::IndexOutOfRange { index: 4, len: 1 })
        );
    }

    #[test]
    fn zero_matrix_keeps_clamped_seed() {
        let z = m(vec![vec![0; 3]; 3]);
        let (raw, next) = fcm_step(&z, &[1, 0, 1], &[0, 2]).unwrap();
        assert_eq!(raw, vec![0, 0, 0]);
        assert_eq!(next, vec![1, 0, 1]);
        let p = fcm_infer(&z, &[0, 1, 0]).unwrap();
        assert_eq!(p.fixed_point(), Some(&vec![0, 1, 0]));
    }

    #[test]
    fn seed_validation() {
        let z = m(vec![vec![0; 2]; 2]);
        assert_eq!(fcm_infer(&z, &[0, 0]), Err(EngineError::EmptySeed));
        assert_eq!(
            fcm_infer(&z, &[0, 2]),
            Err(EngineError::NonCrispSeed { index: 2 })
        );
        assert!(matches!(
            fcm_infer(&z, &[1]),
            Err(EngineError::Dimension { .. })
        ));
        let rect = m(vec![vec![0; 3]; 2]);
        assert!(matches!(
            fcm_infer(&rect, &[1, 0]),
            Err(EngineError::NotSquare { .. })
        ));
    }

    #[test]
    fn frm_zero_matrix_gives_seed_only_pair() {
        let z = m(vec![vec![0; 2]; 3]);
        let p = frm_infer(&z, &[0, 1], Side::Range).unwrap();
        let fixed = p.fixed_point().unwrap();
        assert_eq!(fixed.domain, vec![0, 0, 0]);
        assert_eq!(fixed.range, vec![0, 1]);
    }

    #[test]
    fn combine_and_average() {
        let a = m(vec![vec![0, 1], vec![1, 0]]);
        let b = m(vec![vec![0, -1], vec![1, 0]]);
        assert_eq!(fcm_combine(std::slice::from_ref(&a)).unwrap(), a);
        assert_eq!(
            fcm_combine(&[a.clone(), b.clone()]).unwrap().to_rows(),
            vec![vec![0, 0], vec![2, 0]]
        );
        let avg = fcm_average(&[a.clone(), a.clone()]).unwrap();
        assert_eq!(avg[(0, 1)], Rational::from_integer(1.into()));
        let neg = m(vec![vec![0, -1], vec![0, 0]]);
        assert!(matches!(
            fcm_average(&[neg]),
            Err(EngineError::NegativeAggregate { row: 1, col: 2, .. })
        ));
        let c = m(vec![vec![0; 3]; 2]);
        assert!(matches!(
            frm_combine(&[a, c]),
            Err(EngineError::ShapeMismatch { index: 2, .. })
        ));
        assert_eq!(frm_combine(&[]), Err(EngineError::NoMatrices));
    }
}
