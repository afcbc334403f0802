//! Randomized property suites. Each suite runs at least 1000 cases and
//! compares the engines against the independent oracles in `common`.

mod common;

use std::collections::HashMap;

use cogmap::crisp::{fcm_combine, fcm_infer, frm_infer, threshold_update};
use cogmap::fuzzy::{fuzzy_infer, maxmin_forward, value_set, FuzzyPattern, Mode};
use cogmap::neutrosophic::{
    ncm_combine, ncm_infer, ncm_propagate, neutro_threshold_update, nrm_infer,
};
use cogmap::{Classification, Matrix, NeutroValue, Rational, Side, TriState};
use proptest::prelude::*;

const CASES: u32 = 1000;

fn config() -> ProptestConfig {
    ProptestConfig::with_cases(CASES)
}

/// Square matrix over `{-1, 0, 1}` with zero diagonal, `1 ≤ n ≤ max`.
fn signed_square(max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(-1i64..=1, n), n).prop_map(|mut rows| {
            for (i, row) in rows.iter_mut().enumerate() {
                row[i] = 0;
            }
            rows
        })
    })
}

/// Square matrix over `{-1, 0, 1, I}` with zero diagonal, `1 ≤ n ≤ max`.
fn neutro_square(max: usize) -> impl Strategy<Value = Vec<Vec<common::Nv>>> {
    (1..=max).prop_flat_map(neutro_square_of)
}

/// `n × n` matrix over `{-1, 0, 1, I}` (drawn as codes `0..4`) with zero
/// diagonal.
fn neutro_square_of(n: usize) -> impl Strategy<Value = Vec<Vec<common::Nv>>> {
    prop::collection::vec(prop::collection::vec(0u8..4, n), n).prop_map(|rows| {
        rows.iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, &c)| match (i == j, c) {
                        (true, _) | (_, 0) => (0, 0),
                        (_, 1) => (1, 0),
                        (_, 2) => (-1, 0),
                        _ => (0, 1),
                    })
                    .collect()
            })
            .collect()
    })
}

fn to_neutro(rows: &[Vec<common::Nv>]) -> Matrix<NeutroValue> {
    Matrix::from_rows(
        rows.iter()
            .map(|row| row.iter().map(|&(a, b)| nv(a, b)).collect())
            .collect(),
    )
    .unwrap()
}

fn nv(real: i64, indet: i64) -> NeutroValue {
    NeutroValue::new(
        Rational::from_integer(real.into()),
        Rational::from_integer(indet.into()),
    )
}

fn tri_code(t: TriState) -> u8 {
    match t {
        TriState::Off => 0,
        TriState::On => 1,
        TriState::Indet => 2,
    }
}

fn on_indices(seed: &[u8]) -> Vec<usize> {
    (0..seed.len()).filter(|&i| seed[i] == 1).collect()
}

fn tenth(t: u32) -> Rational {
    Rational::new(t.into(), 10.into())
}

fn tenths_of(v: &[Rational]) -> Vec<u32> {
    v.iter()
        .map(|x| u32::try_from((x * Rational::from_integer(10.into())).to_integer()).unwrap())
        .collect()
}

proptest! {
    #![proptest_config(config())]

    /// For every nonzero seed, the recurring set equals the one found by
    /// tabulating the full step function over all 2ⁿ states.
    #[test]
    fn fcm_matches_brute_force(rows in signed_square(6)) {
        let n = rows.len();
        let e = Matrix::from_rows(rows.clone()).unwrap();
        for seed in common::all_crisp(n).into_iter().filter(|s| s.contains(&1)) {
            let clamp = on_indices(&seed);
            let table: HashMap<Vec<u8>, Vec<u8>> = common::all_crisp(n)
                .into_iter()
                .map(|s| {
                    let next = common::fcm_step(&rows, &s, &clamp);
                    (s, next)
                })
                .collect();
            let oracle = common::recurring(seed.clone(), |s| table[s].clone());
            let p = fcm_infer(&e, &seed).unwrap();
            prop_assert_eq!(&p.states, &oracle);
            prop_assert!(p.iterations() <= (1 << n) + 1);
            for state in &p.trace {
                prop_assert!(clamp.iter().all(|&c| state[c] == 1));
            }
            let last = &p.states[p.period - 1];
            let image = common::fcm_step(&rows, last, &clamp);
            prop_assert_eq!(&image, &p.states[0]);
            prop_assert_eq!(p.classification == Classification::FixedPoint, common::fcm_step(&rows, &p.states[0], &clamp) == p.states[0]);
        }
    }

    /// Relational maps agree with a direct simulation of the alternating
    /// update.
    #[test]
    fn frm_matches_direct_simulation(
        (rows, seed_bits) in (1usize..=5, 1usize..=5).prop_flat_map(|(n, m)| (
            prop::collection::vec(prop::collection::vec(-1i64..=1, m), n),
            prop::collection::vec(0u8..=1, n),
        ))
    ) {
        prop_assume!(seed_bits.contains(&1));
        let (n, m) = (rows.len(), rows[0].len());
        let clamp = on_indices(&seed_bits);
        let oracle = common::recurring((seed_bits.clone(), vec![0u8; m]), |(a, _)| {
            let b: Vec<u8> = (0..m)
                .map(|j| u8::from((0..n).map(|i| i64::from(a[i]) * rows[i][j]).sum::<i64>() > 0))
                .collect();
            let mut back: Vec<u8> = (0..n)
                .map(|i| u8::from((0..m).map(|j| rows[i][j] * i64::from(b[j])).sum::<i64>() > 0))
                .collect();
            for &c in &clamp {
                back[c] = 1;
            }
            (back, b)
        });
        let e = Matrix::from_rows(rows.clone()).unwrap();
        let p = frm_infer(&e, &seed_bits, Side::Domain).unwrap();
        let got: Vec<(Vec<u8>, Vec<u8>)> = p.states.iter().map(|s| (s.domain.clone(), s.range.clone())).collect();
        prop_assert_eq!(got, oracle);
    }

    /// Without indeterminate entries an NCM behaves exactly like an FCM.
    #[test]
    fn ncm_degenerates_to_fcm(rows in signed_square(6), pick in any::<u64>()) {
        let n = rows.len();
        let mut seed: Vec<u8> = (0..n).map(|i| ((pick >> i) & 1) as u8).collect();
        if !seed.contains(&1) {
            seed[0] = 1;
        }
        let e = Matrix::from_rows(rows.clone()).unwrap();
        let crisp = fcm_infer(&e, &seed).unwrap();
        let tri: Vec<TriState> = seed.iter().map(|&b| TriState::from_bit(b).unwrap()).collect();
        let neutro = ncm_infer(&e.map(|&x| NeutroValue::from_integer(x)), &tri).unwrap();
        let lifted: Vec<Vec<TriState>> = crisp
            .states
            .iter()
            .map(|s| s.iter().map(|&b| TriState::from_bit(b).unwrap()).collect())
            .collect();
        prop_assert_eq!(neutro.states, lifted);
        prop_assert_eq!(neutro.classification, crisp.classification);
        prop_assert_eq!(neutro.trace.len(), crisp.trace.len());
    }

    /// For n ≤ 4, NCM runs agree with a full tabulation over all 3ⁿ
    /// tri-state vectors, for every crisp seed.
    #[test]
    fn ncm_matches_brute_force(rows in neutro_square(4)) {
        let n = rows.len();
        let m = to_neutro(&rows);
        for seed in common::all_crisp(n).into_iter().filter(|s| s.contains(&1)) {
            let clamp = on_indices(&seed);
            let table: HashMap<Vec<u8>, Vec<u8>> = common::all_tri(n)
                .into_iter()
                .map(|s| {
                    let next = common::ncm_step(&rows, &s, &clamp);
                    (s, next)
                })
                .collect();
            let oracle = common::recurring(seed.clone(), |s| table[s].clone());
            let tri: Vec<TriState> = seed.iter().map(|&b| TriState::from_bit(b).unwrap()).collect();
            let p = ncm_infer(&m, &tri).unwrap();
            let got: Vec<Vec<u8>> = p.states.iter().map(|s| s.iter().map(|&t| tri_code(t)).collect()).collect();
            prop_assert_eq!(got, oracle);
            prop_assert!(p.iterations() <= 3usize.pow(n as u32) + 1);
            for state in &p.trace {
                prop_assert!(clamp.iter().all(|&c| state[c] == TriState::On));
            }
        }
    }

    /// NRM runs terminate and keep the seeded side clamped.
    #[test]
    fn nrm_keeps_seeded_side_clamped(
        (rows, seed_bits) in (1usize..=4, 1usize..=4).prop_flat_map(|(n, m)| (
            prop::collection::vec(prop::collection::vec(0u8..4, n), m),
            prop::collection::vec(0u8..=1, m),
        ))
    ) {
        prop_assume!(seed_bits.contains(&1));
        let m = Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&c| match c {
                    0 => NeutroValue::from_integer(0),
                    1 => NeutroValue::from_integer(1),
                    2 => NeutroValue::from_integer(-1),
                    _ => NeutroValue::i(),
                }).collect())
                .collect(),
        ).unwrap();
        let seed: Vec<TriState> = seed_bits.iter().map(|&b| TriState::from_bit(b).unwrap()).collect();
        let p = nrm_infer(&m, &seed, Side::Domain).unwrap();
        for state in &p.trace {
            for (i, &b) in seed_bits.iter().enumerate() {
                if b == 1 {
                    prop_assert_eq!(state.domain[i], TriState::On);
                }
            }
        }
    }

    /// Propagation is additive in the matrix.
    #[test]
    fn ncm_propagation_is_linear(
        (a, b, state) in (1usize..=5).prop_flat_map(|n| (
            neutro_square_of(n),
            neutro_square_of(n),
            prop::collection::vec(0u8..3, n),
        ))
    ) {
        let (ma, mb) = (to_neutro(&a), to_neutro(&b));
        let sum = ncm_combine(&[ma.clone(), mb.clone()]).unwrap();
        let tri: Vec<TriState> = state.iter().map(|&c| match c { 0 => TriState::Off, 1 => TriState::On, _ => TriState::Indet }).collect();
        let left = ncm_propagate(&tri, &sum).unwrap();
        let pa = ncm_propagate(&tri, &ma).unwrap();
        let pb = ncm_propagate(&tri, &mb).unwrap();
        let right: Vec<NeutroValue> = pa.into_iter().zip(pb).map(|(x, y)| x + y).collect();
        prop_assert_eq!(left, right);
    }

    /// Thresholding its own output (with the same clamp) changes nothing.
    #[test]
    fn threshold_is_idempotent(raw in prop::collection::vec(-5i64..=5, 1..8), clamp_bits in any::<u8>()) {
        let clamp: Vec<usize> = (0..raw.len()).filter(|&i| (clamp_bits >> i) & 1 == 1).collect();
        let once = threshold_update(&raw, &clamp).unwrap();
        let as_raw: Vec<i64> = once.iter().map(|&b| i64::from(b)).collect();
        prop_assert_eq!(threshold_update(&as_raw, &clamp).unwrap(), once.clone());

        let nraw: Vec<NeutroValue> = raw.iter().enumerate().map(|(i, &x)| nv(x, raw[(i + 1) % raw.len()])).collect();
        let tri = neutro_threshold_update(&nraw, &clamp).unwrap();
        let back: Vec<NeutroValue> = tri.iter().map(|&t| NeutroValue::from(t)).collect();
        prop_assert_eq!(neutro_threshold_update(&back, &clamp).unwrap(), tri);
    }

    /// Combining is commutative and associative.
    #[test]
    fn combine_is_commutative_and_associative(
        (a, b, c) in (1usize..=5).prop_flat_map(|n| {
            let m = || prop::collection::vec(prop::collection::vec(-3i64..=3, n), n);
            (m(), m(), m())
        })
    ) {
        let zero_diag = |mut rows: Vec<Vec<i64>>| {
            for (i, r) in rows.iter_mut().enumerate() { r[i] = 0; }
            Matrix::from_rows(rows).unwrap()
        };
        let (a, b, c) = (zero_diag(a), zero_diag(b), zero_diag(c));
        prop_assert_eq!(fcm_combine(&[a.clone(), b.clone()]).unwrap(), fcm_combine(&[b.clone(), a.clone()]).unwrap());
        let ab_c = fcm_combine(&[fcm_combine(&[a.clone(), b.clone()]).unwrap(), c.clone()]).unwrap();
        let a_bc = fcm_combine(&[a.clone(), fcm_combine(&[b.clone(), c.clone()]).unwrap()]).unwrap();
        prop_assert_eq!(&ab_c, &a_bc);
        prop_assert_eq!(&ab_c, &fcm_combine(&[a.clone(), b.clone(), c.clone()]).unwrap());

        let lift = |m: &Matrix<i64>| m.map(|&x| nv(x, x.abs()));
        let (na, nb, nc) = (lift(&a), lift(&b), lift(&c));
        prop_assert_eq!(ncm_combine(&[na.clone(), nb.clone()]).unwrap(), ncm_combine(&[nb.clone(), na.clone()]).unwrap());
        let l = ncm_combine(&[ncm_combine(&[na.clone(), nb.clone()]).unwrap(), nc.clone()]).unwrap();
        let r = ncm_combine(&[na, ncm_combine(&[nb, nc]).unwrap()]).unwrap();
        prop_assert_eq!(l, r);
    }

    /// Every iterate draws its components from the matrix entries, the seed
    /// and zero, and the run stops within the documented cap.
    #[test]
    fn fuzzy_values_stay_closed(
        (rows, seed) in (1usize..=5, 1usize..=5).prop_flat_map(|(n, m)| (
            prop::collection::vec(prop::collection::vec(0u32..=10, m), n),
            prop::collection::vec(0u32..=10, n),
        )),
        bipartite in any::<bool>(),
    ) {
        let (n, m) = (rows.len(), rows[0].len());
        let matrix = Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&t| tenth(t)).collect()).collect()).unwrap();
        let seed: Vec<Rational> = seed.iter().map(|&t| tenth(t)).collect();
        let values = value_set(&matrix, &seed);
        let mode = if bipartite || n != m { Mode::Bipartite(Side::Domain) } else { Mode::Monopartite };
        let len = if bipartite || n != m { n + m } else { n };
        let cap = (values.len() + 1).saturating_pow(len as u32).saturating_add(1);
        match fuzzy_infer(&matrix, &seed, mode).unwrap() {
            FuzzyPattern::Monopartite(p) => {
                prop_assert!(p.iterations() <= cap);
                prop_assert!(p.trace.iter().flatten().all(|x| values.contains(x)));
            }
            FuzzyPattern::Bipartite(p) => {
                prop_assert!(p.iterations() <= cap);
                prop_assert!(p.trace.iter().all(|s| s.domain.iter().chain(&s.range).all(|x| values.contains(x))));
            }
        }
    }

    /// Random 4×4 matrices over {0, 0.3, 0.7, 1}: recurring sets match a
    /// brute-force tabulation of the forward map.
    #[test]
    fn maxmin_matches_brute_force(
        cells in prop::collection::vec(prop::sample::select(vec![0u32, 3, 7, 10]), 16),
        node in 0usize..4,
    ) {
        let rows: Vec<Vec<u32>> = cells.chunks(4).map(<[u32]>::to_vec).collect();
        let matrix = Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&t| tenth(t)).collect()).collect()).unwrap();
        let mut seed = vec![0u32; 4];
        seed[node] = 10;
        let domain = [0u32, 3, 7, 10];
        let mut table = HashMap::new();
        for k in 0..256usize {
            let state: Vec<u32> = (0..4).map(|i| domain[(k >> (2 * i)) & 3]).collect();
            let next = common::maxmin_step(&rows, &state);
            table.insert(state, next);
        }
        let oracle = common::recurring(seed.clone(), |s| table[s].clone());
        let seed_r: Vec<Rational> = seed.iter().map(|&t| tenth(t)).collect();
        let FuzzyPattern::Monopartite(p) = fuzzy_infer(&matrix, &seed_r, Mode::Monopartite).unwrap() else {
            unreachable!("square matrices run monopartite")
        };
        let got: Vec<Vec<u32>> = p.states.iter().map(|s| tenths_of(s)).collect();
        prop_assert_eq!(got, oracle);
    }

    /// Max-min composition is monotone in the state and in the matrix.
    #[test]
    fn maxmin_is_monotone(
        (rows, grow, b, lift) in (1usize..=5, 1usize..=5).prop_flat_map(|(n, m)| (
            prop::collection::vec(prop::collection::vec(0u32..=10, m), n),
            prop::collection::vec(prop::collection::vec(0u32..=10, m), n),
            prop::collection::vec(0u32..=10, n),
            prop::collection::vec(0u32..=10, n),
        ))
    ) {
        let bigger: Vec<Vec<u32>> = rows.iter().zip(&grow).map(|(r, g)| r.iter().zip(g).map(|(&x, &y)| x.max(y)).collect()).collect();
        let to_m = |rows: &Vec<Vec<u32>>| Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&t| tenth(t)).collect()).collect()).unwrap();
        let (m, m2) = (to_m(&rows), to_m(&bigger));
        let small: Vec<Rational> = b.iter().map(|&t| tenth(t)).collect();
        let large: Vec<Rational> = b.iter().zip(&lift).map(|(&x, &y)| tenth(x.max(y))).collect();
        let f_small = maxmin_forward(&small, &m).unwrap();
        let f_large = maxmin_forward(&large, &m).unwrap();
        let f_grown = maxmin_forward(&small, &m2).unwrap();
        prop_assert!(f_small.iter().zip(&f_large).all(|(x, y)| x <= y));
        prop_assert!(f_small.iter().zip(&f_grown).all(|(x, y)| x <= y));
    }

    /// A fuzzy-neutrosophic run without `I` parts equals the real run.
    #[test]
    fn neutro_fuzzy_degenerates_to_fuzzy(
        cells in prop::collection::vec(0u32..=10, 16),
        node in 0usize..4,
    ) {
        let m = Matrix::from_rows(cells.chunks(4).map(|r| r.iter().map(|&t| tenth(t)).collect()).collect()).unwrap();
        let mut seed = vec![tenth(0); 4];
        seed[node] = tenth(10);
        let real = fuzzy_infer(&m, &seed, Mode::Monopartite).unwrap();
        let nm = m.map(|x| NeutroValue::from_real(x.clone()));
        let nseed: Vec<NeutroValue> = seed.iter().map(|x| NeutroValue::from_real(x.clone())).collect();
        let neutro = fuzzy_infer(&nm, &nseed, Mode::Monopartite).unwrap();
        let (FuzzyPattern::Monopartite(r), FuzzyPattern::Monopartite(n)) = (real, neutro) else {
            unreachable!("square matrices run monopartite")
        };
        let lifted: Vec<Vec<NeutroValue>> = r.trace.iter().map(|s| s.iter().map(|x| NeutroValue::from_real(x.clone())).collect()).collect();
        prop_assert_eq!(n.trace, lifted);
        prop_assert_eq!(n.classification, r.classification);
    }

    /// The scalar grammar round-trips losslessly.
    #[test]
    fn scalar_text_round_trips(a in -1000i64..1000, b in 1i64..200, c in -1000i64..1000, d in 1i64..200) {
        let v = NeutroValue::new(Rational::new(a.into(), b.into()), Rational::new(c.into(), d.into()));
        let text = v.to_string();
        prop_assert_eq!(text.parse::<NeutroValue>().unwrap(), v);
    }
}
