//! Independent reference implementations used as test oracles.
//!
//! These deliberately share no code with the library: plain integers stand
//! in for rationals (values are stored in tenths) and `(real, indet)` pairs
//! of `i64` stand in for neutrosophic values.

#![allow(dead_code)]

use std::collections::HashMap;

/// Follows `step` from `start` and returns the recurring states in visit
/// order.
pub fn recurring<S: Clone + Eq + std::hash::Hash>(start: S, step: impl Fn(&S) -> S) -> Vec<S> {
    let mut seen = HashMap::new();
    let mut trace = vec![start.clone()];
    seen.insert(start, 0usize);
    loop {
        let next = step(trace.last().unwrap());
        if let Some(&i) = seen.get(&next) {
            return trace[i..].to_vec();
        }
        seen.insert(next.clone(), trace.len());
        trace.push(next);
    }
}

/// Crisp FCM step: threshold `> 0`, then clamp.
pub fn fcm_step(e: &[Vec<i64>], a: &[u8], clamp: &[usize]) -> Vec<u8> {
    let n = e.len();
    let mut out: Vec<u8> = (0..n)
        .map(|j| {
            let s: i64 = (0..n).map(|i| i64::from(a[i]) * e[i][j]).sum();
            u8::from(s > 0)
        })
        .collect();
    for &c in clamp {
        out[c] = 1;
    }
    out
}

/// Every `{0,1}` vector of length `n`, in binary counting order.
pub fn all_crisp(n: usize) -> Vec<Vec<u8>> {
    (0..1u32 << n)
        .map(|bits| (0..n).map(|i| ((bits >> i) & 1) as u8).collect())
        .collect()
}

/// Neutrosophic value as `(real, indet)`.
pub type Nv = (i64, i64);

pub fn nv_mul(x: Nv, y: Nv) -> Nv {
    (x.0 * y.0, x.0 * y.1 + x.1 * y.0 + x.1 * y.1)
}

/// Tri-state encoded as 0 = OFF, 1 = ON, 2 = INDET.
pub fn tri_value(t: u8) -> Nv {
    match t {
        0 => (0, 0),
        1 => (1, 0),
        _ => (0, 1),
    }
}

pub fn nv_threshold(v: Nv) -> u8 {
    if v.0 > 0 {
        1
    } else if v.0 < 0 {
        0
    } else if v.1 > 0 {
        2
    } else {
        0
    }
}

pub fn ncm_step(n: &[Vec<Nv>], a: &[u8], clamp: &[usize]) -> Vec<u8> {
    let len = n.len();
    let mut out: Vec<u8> = (0..len)
        .map(|j| {
            let s = (0..len).fold((0, 0), |acc, i| {
                let p = nv_mul(tri_value(a[i]), n[i][j]);
                (acc.0 + p.0, acc.1 + p.1)
            });
            nv_threshold(s)
        })
        .collect();
    for &c in clamp {
        out[c] = 1;
    }
    out
}

/// Every tri-state vector of length `n`.
pub fn all_tri(n: usize) -> Vec<Vec<u8>> {
    (0..3u32.pow(n as u32))
        .map(|mut k| {
            (0..n)
                .map(|_| {
                    let d = (k % 3) as u8;
                    k /= 3;
                    d
                })
                .collect()
        })
        .collect()
}

/// Max-min forward step over values held in tenths.
pub fn maxmin_step(m: &[Vec<u32>], x: &[u32]) -> Vec<u32> {
    (0..m[0].len())
        .map(|k| (0..m.len()).map(|i| x[i].min(m[i][k])).max().unwrap_or(0))
        .collect()
}

/// Max-min backward step over values held in tenths.
pub fn maxmin_back(m: &[Vec<u32>], a: &[u32]) -> Vec<u32> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(a)
                .map(|(&x, &y)| x.min(y))
                .max()
                .unwrap_or(0)
        })
        .collect()
}

/// Parses a one-decimal value into tenths.
pub fn tenths(s: &str) -> u32 {
    let f: f64 = s.parse().unwrap();
    (f * 10.0).round() as u32
}
