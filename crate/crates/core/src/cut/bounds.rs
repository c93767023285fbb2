//! Exact values of the max-cut lower bounds and the auxiliary functions used
//! to turn them into the `n²/9` deletion bound.
//!
//! The `*_holds` functions compare in cross-multiplied integer form so that
//! equality cases are decided exactly.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{int, ratio, zero, Rational};
use num_traits::{Signed, Zero};

/// `3·cut ≥ 2·(e − e(X))`.
pub fn four_partite_holds(cut: usize, e: usize, e_x: usize) -> bool {
    3 * cut as u128 >= 2 * (e as u128 - e_x as u128)
}

/// `e·codegree_sum ≥ 9m`.
pub fn codegree_holds(e: usize, codegree_sum: usize, m: u64) -> bool {
    e as u128 * codegree_sum as u128 >= 9 * m as u128
}

/// `n²·cut ≥ 4e² − 6mn`.
pub fn neighborhood_holds(n: usize, e: usize, m: u64, cut: usize) -> bool {
    let (n, e, m, cut) = (n as i128, e as i128, m as i128, cut as i128);
    n * n * cut >= 4 * e * e - 6 * m * n
}

/// `7n²·cut ≥ 2en² + 8e²`.
pub fn k4free_holds(n: usize, e: usize, cut: usize) -> bool {
    let (n, e, cut) = (n as u128, e as u128, cut as u128);
    7 * n * n * cut >= 2 * e * n * n + 8 * e * e
}

/// `9·deletions ≤ n²`.
pub fn within_n2_over_9(n: usize, deletions: usize) -> bool {
    9 * deletions as u128 <= (n as u128) * (n as u128)
}

pub fn four_partite_bound(e: usize, e_x: usize) -> Rational {
    ratio(2, 3) * int(e as i64 - e_x as i64)
}

/// `9m/e`; `None` when `e = 0`.
pub fn codegree_bound(e: usize, m: u64) -> Option<Rational> {
    (e > 0).then(|| int(9 * m) / int(e))
}

/// `4e²/n² − 6m/n`; zero for `n = 0`.
pub fn neighborhood_bound(n: usize, e: usize, m: u64) -> Rational {
    if n == 0 {
        return zero();
    }
    let (n, e) = (int(n), int(e));
    int(4) * &e * &e / (&n * &n) - int(6 * m) / n
}

/// `2e/7 + 8e²/(7n²)`; zero for `n = 0`.
pub fn k4free_bound(n: usize, e: usize) -> Rational {
    if n == 0 {
        return zero();
    }
    let (n, e) = (int(n), int(e));
    ratio(2, 7) * &e + ratio(8, 7) * &e * &e / (&n * &n)
}

/// `(1/n)Σd²(v) − (2/n)Σe_v`, the average neighborhood cut.
pub fn rhs_a(g: &Graph) -> Rational {
    if g.n() == 0 {
        return zero();
    }
    let stats = g.all_local_stats();
    let sum_d2: u128 = stats.iter().map(|s| (s.degree as u128).pow(2)).sum();
    let sum_ev: u128 = stats.iter().map(|s| s.ev as u128).sum();
    (int(sum_d2) - int(2 * sum_ev)) / int(g.n())
}

/// `e/2 + (1/n)Σ(4e_v²/d²(v) − e_v/2)`, the average refined cut guarantee.
/// Isolated vertices contribute zero.
pub fn rhs_b(g: &Graph) -> Rational {
    if g.n() == 0 {
        return zero();
    }
    let mut sum = zero();
    for s in g.all_local_stats() {
        if s.degree == 0 {
            continue;
        }
        let (ev, d) = (int(s.ev), int(s.degree));
        sum += int(4) * &ev * &ev / (&d * &d) - ev / int(2);
    }
    int(g.edge_count()) / int(2) + sum / int(g.n())
}

/// `(1/(1+a))·rhs_a + (a/(1+a))·rhs_b`, a lower bound on the max cut of a
/// K4-free graph for every `a > 0`. At `a = 4/3` the weights are 3/7 and 4/7.
pub fn combined_lower_bound(g: &Graph, a: &Rational) -> Result<Rational> {
    if !a.is_positive() {
        return Err(Error::input("combination parameter must be positive"));
    }
    g.require_k4_free()?;
    let one = int(1);
    let denom = &one + a;
    Ok(rhs_a(g) / &denom + a * rhs_b(g) / denom)
}

/// `t/18 + (2/9)(5/2 − t − 1/t)²`.
pub fn technical_f(t: &Rational) -> Result<Rational> {
    if t.is_zero() {
        return Err(Error::input("f is undefined at t = 0"));
    }
    let inner = ratio(5, 2) - t - t.recip();
    Ok(t / int(18) + ratio(2, 9) * &inner * &inner)
}

/// `4t³ − 11t² + 9t − 2`.
///
/// Defined everywhere; the zero check mirrors `technical_f` since the two are
/// only meaningful together.
pub fn technical_g(t: &Rational) -> Result<Rational> {
    if t.is_zero() {
        return Err(Error::input("g is only used for t != 0"));
    }
    let t2 = t * t;
    Ok(int(4) * &t2 * t - int(11) * &t2 + int(9) * t - int(2))
}

/// Checks `f(t) − 1/9 = (t − 2)·g(t) / (18t²)` exactly.
pub fn technical_identity_holds(t: &Rational) -> Result<bool> {
    let lhs = technical_f(t)? - ratio(1, 9);
    let rhs = (t - int(2)) * technical_g(t)? / (int(18) * t * t);
    Ok(lhs == rhs)
}

/// `5s/7 − 8s²/7` at edge density `s = e/n²`: the deletion rate guaranteed
/// by the K4-free cut bound, at most `3/28` for `s ≤ 1/4`.
pub fn sparse_deletion_rate(s: &Rational) -> Rational {
    ratio(5, 7) * s - ratio(8, 7) * s * s
}

/// Conjectured worst-case deletion constant for K_r-free graphs:
/// `(r−2)²/(4(r−1)²)` for even `r`, `(r−3)/(4(r−1))` for odd `r`.
pub fn kr_conjectured_constant(r: u64) -> Result<Rational> {
    if r < 4 {
        return Err(Error::input("r must be at least 4"));
    }
    let r = r as i64;
    Ok(if r % 2 == 0 {
        ratio((r - 2) * (r - 2), 4 * (r - 1) * (r - 1))
    } else {
        ratio(r - 3, 4 * (r - 1))
    })
}
