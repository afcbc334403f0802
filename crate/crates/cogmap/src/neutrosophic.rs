//! Inference on neutrosophic cognitive maps (NCMs) and neutrosophic
//! relational maps (NRMs), whose edges may be the indeterminate `I` and
//! whose nodes take the values `{0, 1, I}`.
//!
//! Propagation is exact: an indeterminate node contributes the scalar `I`,
//! so accumulated values are `a + bI` with integer `a, b`. Thresholding is
//! real-part dominant (see [`NeutroValue::threshold`]), and seeded nodes are
//! clamped ON after every step.

use num_traits::Zero;

use crate::crisp::{require_len, require_same_shape, require_square};
use crate::matrix::Matrix;
use crate::neutro::{NeutroValue, TriState};
use crate::pattern::{
    run_to_recurrence, state_bound, EngineError, HiddenPattern, Pair, PairRaw, Side,
};

/// A `{0, 1, I}` state vector.
pub type NeutroState = Vec<TriState>;

/// Raw image `A·N(E)`: component `j` is `Σᵢ aᵢ·nᵢⱼ` with `I` standing for
/// indeterminate nodes.
///
/// ```
/// use cogmap::{neutrosophic::ncm_propagate, Matrix, NeutroValue, TriState::*};
/// let n: Matrix<NeutroValue> = Matrix::from_rows(vec![
///     vec!["1".parse().unwrap(), "I".parse().unwrap()],
///     vec!["I".parse().unwrap(), "-1".parse().unwrap()],
/// ]).unwrap();
/// let raw = ncm_propagate(&[On, Indet], &n).unwrap();
/// assert_eq!(raw[0].to_string(), "1+I");
/// assert_eq!(raw[1].to_string(), "0"); // 1·I + I·(-1)
/// ```
pub fn ncm_propagate(
    a: &[TriState],
    n: &Matrix<NeutroValue>,
) -> Result<Vec<NeutroValue>, EngineError> {
    require_len("state", a.len(), n.rows())?;
    Ok(forward(n, a))
}

/// Thresholds a raw neutrosophic vector and clamps the given indices ON.
pub fn neutro_threshold_update(
    raw: &[NeutroValue],
    clamp: &[usize],
) -> Result<NeutroState, EngineError> {
    let mut state: NeutroState = raw.iter().map(NeutroValue::threshold).collect();
    for &i in clamp {
        *state.get_mut(i).ok_or(EngineError::IndexOutOfRange {
            index: i + 1,
            len: raw.len(),
        })? = TriState::On;
    }
    Ok(state)
}

/// Runs an NCM from a crisp seed to its hidden pattern.
pub fn ncm_infer(
    n: &Matrix<NeutroValue>,
    seed: &[TriState],
) -> Result<HiddenPattern<NeutroState, Vec<NeutroValue>>, EngineError> {
    ncm_infer_capped(n, seed, state_bound(3, n.rows()))
}

/// [`ncm_infer`] with an explicit step cap.
pub fn ncm_infer_capped(
    n: &Matrix<NeutroValue>,
    seed: &[TriState],
    cap: usize,
) -> Result<HiddenPattern<NeutroState, Vec<NeutroValue>>, EngineError> {
    require_square(n)?;
    let clamp = crisp_seed(seed, n.rows())?;
    run_to_recurrence(seed.to_vec(), cap, |a| {
        let raw = forward(n, a);
        let next = neutro_threshold_update(&raw, &clamp).expect("clamp validated");
        (raw, next)
    })
}

/// Runs an NRM from a crisp seed on `side`, alternating `A·N(E)` and
/// `B·N(E)ᵀ` and clamping only the seeded side.
pub fn nrm_infer(
    n: &Matrix<NeutroValue>,
    seed: &[TriState],
    side: Side,
) -> Result<HiddenPattern<Pair<TriState>, PairRaw<NeutroValue>>, EngineError> {
    nrm_infer_capped(n, seed, side, state_bound(3, n.rows() + n.cols()))
}

/// [`nrm_infer`] with an explicit round cap.
pub fn nrm_infer_capped(
    n: &Matrix<NeutroValue>,
    seed: &[TriState],
    side: Side,
    cap: usize,
) -> Result<HiddenPattern<Pair<TriState>, PairRaw<NeutroValue>>, EngineError> {
    let seed_len = match side {
        Side::Domain => n.rows(),
        Side::Range => n.cols(),
    };
    let clamp = crisp_seed(seed, seed_len)?;
    let start = match side {
        Side::Domain => Pair {
            domain: seed.to_vec(),
            range: vec![TriState::Off; n.cols()],
        },
        Side::Range => Pair {
            domain: vec![TriState::Off; n.rows()],
            range: seed.to_vec(),
        },
    };
    run_to_recurrence(start, cap, |pair| match side {
        Side::Domain => {
            let range_raw = forward(n, &pair.domain);
            let range = neutro_threshold_update(&range_raw, &[]).expect("no clamp");
            let domain_raw = backward(n, &range);
            let domain = neutro_threshold_update(&domain_raw, &clamp).expect("clamp validated");
            let raw = PairRaw {
                domain: domain_raw,
                range: range_raw,
            };
            (raw, Pair { domain, range })
        }
        Side::Range => {
            let domain_raw = backward(n, &pair.range);
            let domain = neutro_threshold_update(&domain_raw, &[]).expect("no clamp");
            let range_raw = forward(n, &domain);
            let range = neutro_threshold_update(&range_raw, &clamp).expect("clamp validated");
            let raw = PairRaw {
                domain: domain_raw,
                range: range_raw,
            };
            (raw, Pair { domain, range })
        }
    })
}

/// Sums several experts' neutrosophic matrices entrywise.
///
/// ```
/// use cogmap::{neutrosophic::ncm_combine, Matrix, NeutroValue};
/// let a: Matrix<NeutroValue> = Matrix::from_rows(vec![vec!["I".parse().unwrap()]]).unwrap();
/// let sum = ncm_combine(&[a.clone(), a]).unwrap();
/// assert_eq!(sum[(0, 0)].to_string(), "2I");
/// ```
pub fn ncm_combine(matrices: &[Matrix<NeutroValue>]) -> Result<Matrix<NeutroValue>, EngineError> {
    let first = require_same_shape(matrices)?;
    Ok(Matrix::from_fn(first.rows(), first.cols(), |i, j| {
        matrices
            .iter()
            .fold(NeutroValue::zero(), |acc, m| acc + m[(i, j)].clone())
    }))
}

fn forward(n: &Matrix<NeutroValue>, a: &[TriState]) -> Vec<NeutroValue> {
    let mut out = vec![NeutroValue::zero(); n.cols()];
    for (i, row) in n.iter_rows().enumerate() {
        if a[i] == TriState::Off {
            continue;
        }
        let ai = NeutroValue::from(a[i]);
        for (o, x) in out.iter_mut().zip(row) {
            *o += &(&ai * x);
        }
    }
    out
}

fn backward(n: &Matrix<NeutroValue>, b: &[TriState]) -> Vec<NeutroValue> {
    n.iter_rows()
        .map(|row| {
            row.iter()
                .zip(b)
                .filter(|(_, &bj)| bj != TriState::Off)
                .fold(NeutroValue::zero(), |acc, (x, &bj)| {
                    acc + x * &NeutroValue::from(bj)
                })
        })
        .collect()
}

fn crisp_seed(seed: &[TriState], len: usize) -> Result<Vec<usize>, EngineError> {
    require_len("seed", seed.len(), len)?;
    if let Some(i) = seed.iter().position(|&s| s == TriState::Indet) {
        return Err(EngineError::NonCrispSeed { index: i + 1 });
    }
    let on: Vec<usize> = (0..len).filter(|&i| seed[i] == TriState::On).collect();
    if on.is_empty() {
        return Err(EngineError::EmptySeed);
    }
    Ok(on)
}
