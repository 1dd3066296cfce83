//! Closed-form independence-number bounds and the constants behind them.
//!
//! All logarithms are natural. The constants `c_s'` and `c_s` are derived
//! from three inequalities that the clique-order induction needs for every
//! `s >= 3`, starting from a base constant `c_2` for the Turán case:
//!
//! 1. `c_s' < s^(-2/(s-1))`
//! 2. `c_s' <= c_{s-1} * (1/c_s' - s^(2/(s-1)))^(1/(s-2))`
//! 3. `c_s < c_s' * 2^(-2(s+1)/(s(s-1)))`
//!
//! Every constant is taken as [`SAFETY`] times its boundary value, and the
//! three inequalities are re-checked numerically on the rounded values.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::fmt;

use crate::error::{Error, Result};

/// Factor applied when extracting a constant from an inequality boundary.
pub const SAFETY: f64 = 0.99;

/// Exact `binomial(n, k)` if it fits in 64 bits.
pub fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

/// `binomial(n, k)` as a float; exact while it fits in 64 bits.
pub fn binomial_f64(n: u64, k: u64) -> f64 {
    match binomial(n, k) {
        Some(b) => b as f64,
        None => {
            let k = k.min(n - k);
            (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
        }
    }
}

/// Constants for one clique order `s >= 3`.
#[derive(Clone, Debug, PartialEq)]
pub struct OrderConstants {
    pub s: usize,
    /// Root of inequality 2 at equality, before the safety factor.
    pub cs_prime_boundary: f64,
    pub cs_prime: f64,
    pub cs: f64,
    /// Slack in inequalities 1, 2 and 3; all strictly positive.
    pub residuals: [f64; 3],
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConstantChain {
    pub s_max: usize,
    pub c2: f64,
    /// Entries for `s = 3..=s_max`, in order.
    pub orders: Vec<OrderConstants>,
    /// Triangle-case density cutoff `delta` solved from `c_3`, when `s_max >= 3`.
    pub delta3: Option<f64>,
}

impl ConstantChain {
    /// Final constant `c_s` (`c_2` for `s = 2`).
    pub fn cs(&self, s: usize) -> Option<f64> {
        match s {
            2 => Some(self.c2),
            _ => self.order(s).map(|o| o.cs),
        }
    }

    pub fn cs_prime(&self, s: usize) -> Option<f64> {
        self.order(s).map(|o| o.cs_prime)
    }

    pub fn order(&self, s: usize) -> Option<&OrderConstants> {
        if s < 3 {
            return None;
        }
        self.orders.get(s - 3)
    }
}

fn eq1_limit(s: usize) -> f64 {
    (s as f64).powf(-2.0 / (s as f64 - 1.0))
}

fn eq2_rhs(s: usize, c_prev: f64, x: f64) -> f64 {
    let inner = 1.0 / x - (s as f64).powf(2.0 / (s as f64 - 1.0));
    if inner <= 0.0 {
        return 0.0;
    }
    c_prev * inner.powf(1.0 / (s as f64 - 2.0))
}

fn eq3_factor(s: usize) -> f64 {
    let s = s as f64;
    2f64.powf(-2.0 * (s + 1.0) / (s * (s - 1.0)))
}

/// Bisection for a root of a function that is positive at `lo` and
/// non-positive at `hi`, iterated until the bracket stops shrinking.
fn bisect(mut lo: f64, mut hi: f64, f: impl Fn(f64) -> f64) -> f64 {
    for _ in 0..400 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Derives `c_s'` and `c_s` for every `s` in `3..=s_max` from the base `c2`.
///
/// `s_max = 2` yields a chain holding only `c2`.
pub fn solve_constant_chain(s_max: usize, c2: f64) -> Result<ConstantChain> {
    if s_max < 2 {
        return Err(Error::arg(format!("s_max = {s_max} must be at least 2")));
    }
    if !(c2 > 0.0 && c2 <= 1.0 / 3.0) {
        return Err(Error::arg(format!("base constant c2 = {c2} must lie in (0, 1/3]")));
    }
    let mut orders = Vec::new();
    let mut c_prev = c2;
    for s in 3..=s_max {
        let hi = eq1_limit(s);
        // Inequality 2 as f(x) >= 0: positive near 0, negative at `hi`, decreasing.
        let f = |x: f64| eq2_rhs(s, c_prev, x) - x;
        let lo = hi * 1e-12;
        if !(f(lo) > 0.0 && f(hi) <= 0.0) {
            return Err(Error::Infeasible {
                s,
                reason: format!("inequality 2 has no sign change on ({lo:e}, {hi})"),
            });
        }
        let boundary = bisect(lo, hi, f);
        let cs_prime = SAFETY * boundary;
        let cs = SAFETY * cs_prime * eq3_factor(s);
        let residuals = [
            hi - cs_prime,
            eq2_rhs(s, c_prev, cs_prime) - cs_prime,
            cs_prime * eq3_factor(s) - cs,
        ];
        if residuals.iter().any(|&r| !(r > 0.0)) || cs <= 0.0 {
            return Err(Error::Infeasible {
                s,
                reason: format!("residuals {residuals:?} not all positive"),
            });
        }
        orders.push(OrderConstants {
            s,
            cs_prime_boundary: boundary,
            cs_prime,
            cs,
            residuals,
        });
        c_prev = cs;
    }
    let delta3 = match orders.first() {
        Some(o) => Some(solve_delta(o.cs)?.delta),
        None => None,
    };
    Ok(ConstantChain {
        s_max,
        c2,
        orders,
        delta3,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regime {
    SmallT,
    LargeT,
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regime::SmallT => "small_t",
            Regime::LargeT => "large_t",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundNote {
    /// The formula's logarithm was non-positive; the value was set to 0.
    Degenerate,
    /// `t = 0` in the triangle-aware bound: the triangle-free form was used.
    TriangleFreeLimit,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundValue {
    pub value: f64,
    pub regime: Option<Regime>,
    pub note: Option<BoundNote>,
}

/// Clique-count threshold `n^(s/2)` separating the two general regimes.
pub fn theorem1_threshold(n: usize, s: usize) -> f64 {
    (n as f64).powf(s as f64 / 2.0)
}

/// Triangle threshold `n^(3/2) sqrt(log n)`.
pub fn theorem2_threshold(n: usize) -> f64 {
    let n = n as f64;
    n.powf(1.5) * n.ln().sqrt()
}

/// General bound: `c_s n^(1/(s-1))` for `t <= n^(s/2)`, otherwise
/// `c_s (n^s / t)^(1/binomial(s, 2))`.
pub fn theorem1_bound(n: usize, s: usize, t: u64, chain: &ConstantChain) -> Result<BoundValue> {
    if s < 2 {
        return Err(Error::arg(format!("clique order s = {s} must be at least 2")));
    }
    let cs = chain
        .cs(s)
        .ok_or_else(|| Error::arg(format!("constant chain covers s <= {}, got s = {s}", chain.s_max)))?;
    if t as f64 > binomial_f64(n as u64, s as u64) {
        return Err(Error::arg(format!("t = {t} exceeds binomial({n}, {s})")));
    }
    let nf = n as f64;
    let sf = s as f64;
    if (t as f64) <= theorem1_threshold(n, s) {
        Ok(BoundValue {
            value: cs * nf.powf(1.0 / (sf - 1.0)),
            regime: Some(Regime::SmallT),
            note: None,
        })
    } else {
        let pairs = sf * (sf - 1.0) / 2.0;
        // (n^s / t)^(1/pairs) evaluated in log space to stay finite for large n.
        let log_ratio = sf * nf.ln() - (t as f64).ln();
        Ok(BoundValue {
            value: cs * (log_ratio / pairs).exp(),
            regime: Some(Regime::LargeT),
            note: None,
        })
    }
}

/// Triangle bound: `c sqrt(n log n)` for `t <= n^(3/2) sqrt(log n)`, otherwise
/// `c (n / t^(1/3)) (log(n / t^(1/3)))^(2/3)`.
pub fn theorem2_bound(n: usize, t: u64, c: f64) -> Result<BoundValue> {
    if n <= 1 {
        return Err(Error::arg(format!("n = {n} must exceed 1")));
    }
    if !(c > 0.0) {
        return Err(Error::arg(format!("constant c = {c} must be positive")));
    }
    if t as f64 > binomial_f64(n as u64, 3) {
        return Err(Error::arg(format!("t = {t} exceeds binomial({n}, 3)")));
    }
    let nf = n as f64;
    if (t as f64) <= theorem2_threshold(n) {
        return Ok(BoundValue {
            value: c * (nf * nf.ln()).sqrt(),
            regime: Some(Regime::SmallT),
            note: None,
        });
    }
    let ratio = nf / (t as f64).cbrt();
    if ratio <= 1.0 {
        return Ok(BoundValue {
            value: 0.0,
            regime: Some(Regime::LargeT),
            note: Some(BoundNote::Degenerate),
        });
    }
    Ok(BoundValue {
        value: c * ratio * ratio.ln().powf(2.0 / 3.0),
        regime: Some(Regime::LargeT),
        note: None,
    })
}

/// Triangle-aware bound `(c n / d) (log d - log(t / n) / 2)`.
///
/// At `t = 0` the triangle-free form `(c n / d) log d` is returned and
/// flagged. The value may be negative when `t` is much larger than `n d^2`.
pub fn aks_bound(n: usize, d: f64, t: u64, c: f64) -> Result<BoundValue> {
    if n == 0 {
        return Err(Error::arg("n must be at least 1"));
    }
    if !(d > 1.0) {
        return Err(Error::arg(format!("average degree d = {d} must exceed 1")));
    }
    let scale = c * n as f64 / d;
    if t == 0 {
        return Ok(BoundValue {
            value: scale * d.ln(),
            regime: None,
            note: Some(BoundNote::TriangleFreeLimit),
        });
    }
    Ok(BoundValue {
        value: scale * (d.ln() - 0.5 * (t as f64 / n as f64).ln()),
        regime: None,
        note: None,
    })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DeltaSolution {
    pub delta: f64,
    /// `|LHS - 1|` at the returned root.
    pub residual: f64,
}

/// Left-hand side `(c / delta^(1/3)) (log(1 / delta^(1/3)))^(2/3)`.
pub fn delta_equation_lhs(c: f64, delta: f64) -> f64 {
    let u = delta.cbrt().recip();
    c * u * u.ln().powf(2.0 / 3.0)
}

/// Solves `(c / delta^(1/3)) (log(1 / delta^(1/3)))^(2/3) = 1` for `delta` in `(0, 1)`.
///
/// Bisection runs on `u = delta^(-1/3)`, where the left side is
/// `c u (log u)^(2/3)`, increasing from 0 at `u = 1`.
pub fn solve_delta(c: f64) -> Result<DeltaSolution> {
    if !(c > 0.0 && c < 1.0) {
        return Err(Error::arg(format!("constant c = {c} must lie in (0, 1)")));
    }
    let g = |u: f64| c * u * u.ln().powf(2.0 / 3.0) - 1.0;
    let lo = 1.0;
    let mut hi = 2.0;
    while g(hi) <= 0.0 {
        hi *= 2.0;
        if !hi.is_finite() {
            return Err(Error::NoBracket(format!("delta equation for c = {c}")));
        }
    }
    if g(lo) >= 0.0 {
        return Err(Error::NoBracket(format!("delta equation for c = {c}")));
    }
    let u = bisect(lo, hi, |u| -g(u));
    let delta = u.powi(3).recip();
    Ok(DeltaSolution {
        delta,
        residual: (delta_equation_lhs(c, delta) - 1.0).abs(),
    })
}

/// Solves `t = n^(3/2) lambda^(3/2) sqrt(log(n / t^(1/3)))` for the blowup
/// size `lambda`. The log term depends only on `n` and `t`, so this is explicit.
pub fn solve_lambda(n: usize, t: f64) -> Result<f64> {
    let nf = n as f64;
    let ratio = nf / t.cbrt();
    if !(ratio > 1.0) {
        return Err(Error::arg(format!("n / t^(1/3) = {ratio} must exceed 1")));
    }
    if !(t > 0.0) {
        return Err(Error::arg(format!("t = {t} must be positive")));
    }
    Ok((t / (nf.powf(1.5) * ratio.ln().sqrt())).powf(2.0 / 3.0))
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    pub n: usize,
    pub s: usize,
    pub t: u64,
    pub regime: Regime,
    pub theorem1: f64,
    /// Triangle bound, `s = 3` only.
    pub theorem2: Option<BoundValue>,
    /// Triangle-aware bound, when `s = 3` and `d > 1`.
    pub aks: Option<BoundValue>,
    pub chain: ConstantChain,
}

/// Evaluates every bound that applies to `(n, s, t)`. `c_t2` and `c_aks` are
/// the constants of the triangle bounds, which the caller supplies.
pub fn bound_report(
    n: usize,
    s: usize,
    t: u64,
    d_avg: f64,
    chain: &ConstantChain,
    c_t2: f64,
    c_aks: f64,
) -> Result<BoundReport> {
    let t1 = theorem1_bound(n, s, t, chain)?;
    let (theorem2, aks) = if s == 3 && n > 1 {
        let t2 = theorem2_bound(n, t, c_t2)?;
        let aks = if d_avg > 1.0 {
            Some(aks_bound(n, d_avg, t, c_aks)?)
        } else {
            None
        };
        (Some(t2), aks)
    } else {
        (None, None)
    };
    Ok(BoundReport {
        n,
        s,
        t,
        regime: if s == 3 {
            theorem2.map(|b| b.regime.expect("regime")).unwrap_or(Regime::SmallT)
        } else {
            t1.regime.expect("regime")
        },
        theorem1: t1.value,
        theorem2,
        aks,
        chain: chain.clone(),
    })
}
