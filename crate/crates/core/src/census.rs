//! Square-free values of `g_{a,b}(m, n) = (9bm² + (4a + 27b)n²)(m² + 3n²)`
//! below `X`, a proxy for the number of sextic conductors below `X` coming
//! from the family `E_{a,b}`, and the exponent of their growth.
//!
//! Values are counted with multiplicity one; the proxy ignores factors of
//! `6ab`.

use std::collections::BTreeMap;
use std::time::Instant;

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::squarefree_batch;
use crate::Error;

/// Largest accepted limit; `g` and the loop bounds stay inside `u64`/`i128`.
pub const MAX_LIMIT: u64 = 10_000_000_000;

/// A conductor value and the smallest `(m, n)` attaining it.
pub type Witnessed = BTreeMap<u64, (u64, u64)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusConfig {
    pub a: i64,
    pub b: i64,
    pub limit: u64,
    /// Increasing checkpoints `≤ limit`; empty means `[limit]`.
    pub grid: Vec<u64>,
    /// Thread count; `None` uses rayon's default, `Some(1)` runs serially.
    pub workers: Option<usize>,
}

/// The two coefficients of the quadratic factor, checked to be definite of
/// the same sign, as absolute values.
fn form(a: i64, b: i64) -> Result<(u64, u64), Error> {
    let p = 9 * b as i128;
    let q = 4 * a as i128 + 27 * b as i128;
    if p == 0 || q == 0 || (p > 0) != (q > 0) {
        return Err(Error::InvalidInput(format!(
            "9b = {p} and 4a + 27b = {q} must be nonzero of one sign (definite form)"
        )));
    }
    Ok((p.unsigned_abs() as u64, q.unsigned_abs() as u64))
}

fn check_limit(limit: u64) -> Result<(), Error> {
    if limit < 100 {
        return Err(Error::InvalidInput(format!("limit {limit} is below 100")));
    }
    if limit > MAX_LIMIT {
        return Err(Error::LimitTooLarge(limit));
    }
    Ok(())
}

/// `|g(m, n)|` for the definite form, or `None` past `limit`.
fn g_value(p: u64, q: u64, m: u64, n: u64, limit: u64) -> Option<u64> {
    let quad = p as u128 * (m * m) as u128 + q as u128 * (n * n) as u128;
    let cubic = (m * m + 3 * n * n) as u128;
    let g = quad * cubic;
    (g < limit as u128).then_some(g as u64)
}

/// Largest `k` with `c·k⁴ < limit`: since `|g| ≥ min(p, q)·max(m, n)⁴`,
/// no pair outside `1 ≤ m, n ≤ k` has `|g| < limit`.
fn loop_bound(c: u64, limit: u64) -> u64 {
    let mut k = ((limit as f64 / c as f64).powf(0.25)) as u64 + 1;
    while k > 0 && (c as u128) * (k as u128).pow(4) >= limit as u128 {
        k -= 1;
    }
    k
}

/// Square-free values from one `m`, with witnesses.
fn stripe(p: u64, q: u64, m: u64, limit: u64, n_max: u64) -> Vec<(u64, (u64, u64))> {
    let mut vals = Vec::new();
    for n in 1..=n_max {
        let Some(g) = g_value(p, q, m, n, limit) else { break };
        if m.gcd(&n) == 1 {
            vals.push((g, (m, n)));
        }
    }
    let flags = squarefree_batch(&vals.iter().map(|v| v.0).collect::<Vec<_>>());
    vals.into_iter().zip(flags).filter_map(|(v, ok)| ok.then_some(v)).collect()
}

fn merge(mut acc: Witnessed, part: Vec<(u64, (u64, u64))>) -> Witnessed {
    for (g, w) in part {
        acc.entry(g).and_modify(|cur| *cur = (*cur).min(w)).or_insert(w);
    }
    acc
}

/// Enumeration bounds used for a limit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub m_max: u64,
    pub n_max: u64,
}

fn bounds(p: u64, q: u64, limit: u64) -> Bounds {
    let k = loop_bound(p.min(q), limit);
    Bounds { m_max: k, n_max: k }
}

/// Distinct square-free `|g_{a,b}(m, n)| < limit` over coprime `m, n ≥ 1`,
/// each with its smallest witness. Stripes in `m` run in parallel.
///
/// ```
/// use sextic::census::enumerate_conductors;
/// let vals = enumerate_conductors(1, 1, 500).unwrap();
/// assert_eq!(vals.get(&469), Some(&(2, 1)));
/// ```
pub fn enumerate_conductors(a: i64, b: i64, limit: u64) -> Result<Witnessed, Error> {
    check_limit(limit)?;
    let (p, q) = form(a, b)?;
    let bd = bounds(p, q, limit);
    Ok((1..=bd.m_max)
        .into_par_iter()
        .map(|m| stripe(p, q, m, limit, bd.n_max))
        .fold(Witnessed::new, merge)
        .reduce(Witnessed::new, |x, y| merge(x, y.into_iter().collect())))
}

/// Single-threaded [`enumerate_conductors`].
pub fn enumerate_conductors_serial(a: i64, b: i64, limit: u64) -> Result<Witnessed, Error> {
    check_limit(limit)?;
    let (p, q) = form(a, b)?;
    let bd = bounds(p, q, limit);
    Ok((1..=bd.m_max).fold(Witnessed::new(), |acc, m| merge(acc, stripe(p, q, m, limit, bd.n_max))))
}

/// Least-squares slope of `ln V` against `ln X`.
pub fn growth_fit(points: &[(u64, u64)]) -> Result<f64, Error> {
    let pts: Vec<(f64, f64)> =
        points.iter().filter(|(_, v)| *v > 0).map(|&(x, v)| ((x as f64).ln(), (v as f64).ln())).collect();
    if pts.len() < 3 {
        return Err(Error::InsufficientData(format!("{} checkpoints with nonzero counts, need 3", pts.len())));
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    if sxx == 0.0 {
        return Err(Error::InsufficientData("checkpoints are not distinct".into()));
    }
    Ok(sxy / sxx)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Checkpoint {
    #[serde(rename = "X")]
    pub x: u64,
    pub count: u64,
    /// Slope over the checkpoints up to this one, once there are three.
    pub slope_so_far: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CensusReport {
    pub a: i64,
    pub b: i64,
    pub limit: u64,
    pub checkpoints: Vec<Checkpoint>,
    pub slope: Option<f64>,
    pub bounds: Bounds,
    pub distinct_values: usize,
    pub workers: usize,
    pub wall_time_ms: u128,
    pub caveat: &'static str,
}

const CAVEAT: &str = "counts distinct square-free values of g_{a,b}; field conductors may differ by factors dividing 6ab";

/// Run the census and count at each checkpoint.
pub fn run_census(cfg: &CensusConfig) -> Result<(CensusReport, Witnessed), Error> {
    let grid = if cfg.grid.is_empty() { vec![cfg.limit] } else { cfg.grid.clone() };
    if grid.windows(2).any(|w| w[0] >= w[1]) || grid.iter().any(|&x| x > cfg.limit) {
        return Err(Error::InvalidInput("checkpoints must increase and not exceed the limit".into()));
    }
    let (p, q) = form(cfg.a, cfg.b)?;
    let start = Instant::now();
    let (values, workers) = match cfg.workers {
        Some(1) => (enumerate_conductors_serial(cfg.a, cfg.b, cfg.limit)?, 1),
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build()
                .map_err(|e| Error::InvalidInput(format!("thread pool: {e}")))?;
            (pool.install(|| enumerate_conductors(cfg.a, cfg.b, cfg.limit))?, k)
        }
        None => (enumerate_conductors(cfg.a, cfg.b, cfg.limit)?, rayon::current_num_threads()),
    };
    let mut checkpoints: Vec<Checkpoint> = Vec::new();
    let mut pts = Vec::new();
    for &x in &grid {
        let count = values.range(..x).count() as u64;
        pts.push((x, count));
        checkpoints.push(Checkpoint { x, count, slope_so_far: growth_fit(&pts).ok() });
    }
    let report = CensusReport {
        a: cfg.a,
        b: cfg.b,
        limit: cfg.limit,
        slope: growth_fit(&pts).ok(),
        checkpoints,
        bounds: bounds(p, q, cfg.limit),
        distinct_values: values.len(),
        workers,
        wall_time_ms: start.elapsed().as_millis(),
        caveat: CAVEAT,
    };
    Ok((report, values))
}
