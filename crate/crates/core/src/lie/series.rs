//! Hilbert series from clique counts, and Lie dimensions from enveloping
//! algebra dimensions by PBW inversion.

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::flag::FlagComplex;
use crate::graph::Graph;

use super::{check_top, GradedDims};

fn overflow(what: &str) -> Error {
    Error::CapExceeded(format!("{what} overflows 128-bit arithmetic"))
}

/// Coefficients of `1 / Σ_r (−1)^r c_r t^r` through `t^{w_max}`, where `c_r`
/// counts cliques of size `r` (`c_0 = 1`).
pub fn clique_series_dims(g: &Graph, w_max: usize, limits: &Limits) -> Result<GradedDims> {
    check_top(w_max, limits)?;
    let counts = FlagComplex::build(g, limits)?.clique_counts();
    let mut u: Vec<i128> = vec![1];
    for n in 1..=w_max {
        let mut acc: i128 = 0;
        for r in 1..=n.min(counts.len() - 1) {
            let term = (counts[r] as i128).checked_mul(u[n - r]).ok_or_else(|| overflow("clique series"))?;
            acc = if r % 2 == 1 { acc.checked_add(term) } else { acc.checked_sub(term) }
                .ok_or_else(|| overflow("clique series"))?;
        }
        u.push(acc);
    }
    let dims = u
        .into_iter()
        .map(|v| u64::try_from(v).map_err(|_| Error::Inconsistent(format!("clique series coefficient {v}"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(GradedDims::new(0, dims))
}

fn mobius(mut n: u64) -> i128 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

fn divisors(n: usize) -> impl Iterator<Item = usize> {
    (1..=n).filter(move |d| n % d == 0)
}

/// Number of aperiodic necklaces of length `n` over `k` letters.
pub fn necklace_count(k: u64, n: usize) -> u64 {
    let total: i128 = divisors(n)
        .map(|d| mobius(d as u64) * (k as i128).pow((n / d) as u32))
        .sum();
    (total / n as i128) as u64
}

/// Solves `∏_{r≥1} (1 − t^r)^{−l_r} = Σ u_n t^n` for `l_1 ..= l_{w_max}`.
pub fn lie_dims_pbw_inversion(ul: &GradedDims, w_max: usize) -> Result<GradedDims> {
    if ul.start != 0 || ul.get(0) != Some(1) {
        return Err(Error::NotPbwSeries("weight 0 dimension must be 1".into()));
    }
    if ul.cutoff() < w_max {
        return Err(Error::Precondition(format!(
            "series known through weight {}, {w_max} requested",
            ul.cutoff()
        )));
    }
    let u: Vec<i128> = ul.dims.iter().map(|&d| d as i128).collect();
    // b_n = Σ_{d | n} d·l_d, from n·u_n = Σ_{k=1}^n b_k u_{n−k}
    let mut b: Vec<i128> = vec![0];
    for n in 1..=w_max {
        let mut acc = (n as i128).checked_mul(u[n]).ok_or_else(|| overflow("PBW inversion"))?;
        for k in 1..n {
            let t = b[k].checked_mul(u[n - k]).ok_or_else(|| overflow("PBW inversion"))?;
            acc = acc.checked_sub(t).ok_or_else(|| overflow("PBW inversion"))?;
        }
        b.push(acc);
    }
    let mut l = Vec::with_capacity(w_max);
    for n in 1..=w_max {
        let s: i128 = divisors(n).map(|d| mobius((n / d) as u64) * b[d]).sum();
        if s % n as i128 != 0 {
            return Err(Error::NotPbwSeries(format!("l_{n} = {s}/{n} is not an integer")));
        }
        let v = s / n as i128;
        if v < 0 {
            return Err(Error::NotPbwSeries(format!("l_{n} = {v} is negative")));
        }
        l.push(v as u64);
    }
    Ok(GradedDims::new(1, l))
}
