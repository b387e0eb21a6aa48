//! The zeta function of a Lucas sequence: zeta_U(s) = sum_{n>=1} U_n^{-s},
//! its analytic continuation, and its pole structure.
//!
//! Writing U_n = (a^n - b^n)/(a - b) and expanding the binomial series of
//! (1 - (b/a)^n)^{-s} term by term turns the defining sum into
//!
//!   zeta_U(s) = D^{s/2} sum_{k>=0} binom(-s, k) (-1)^k q_k / (1 - q_k),
//!   q_k = a^{-s-k} b^k,
//!
//! where D = P^2 - 4Q. Each k-term is geometric in n re-summed in closed
//! form, the k-series converges for every complex s (geometric decay of
//! q_k beats the polynomial growth of the binomial), and the right side
//! is the analytic continuation. Its poles are simple and sit on the
//! lattice
//!
//!   s_{k,n} = -k (1 - rho) + (2n + l_{Q,k}) pi i / log a,
//!
//! with residue D^{s/2} binom(-s, k) (-1)^k / log a evaluated there; the
//! residue factor vanishes (no pole, a removable point) whenever -s_{k,n}
//! is one of the integers 0, 1, ..., k-1. At such a removable point the
//! k-term is 0 * infinity and has the finite limit
//!
//!   (-1)^l l! (k - l - 1)! / (k! log a),   s_{k,n} = -l,
//!
//! which the evaluator substitutes when the argument lands there.

use crate::config::EvalConfig;
use crate::error::{Error, Result};
use crate::lucas::{classify_ratio, set_b, LucasParams, RatioClass, RatioClassification};
use crate::special::{binom_general, harmonic, principal_power};
use num_complex::Complex64;
use std::f64::consts::PI;

/// A rectangle in the s-plane.
#[derive(Debug, Clone, Copy)]
pub struct Region {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
}

/// Where a pole in a pole map came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PoleOrigin {
    /// A negative-integer pole -l of the z-dependent continuation.
    NegInt { l: u32 },
    /// The lattice point s_{k,n} of the plain zeta function.
    Lattice { k: u32, n: i64 },
    /// The shifted lattice point s_{l,k,n} = -l + s_{k,n} of the
    /// z-dependent continuation.
    ShiftedLattice { l: u32, k: u32, n: i64 },
}

/// A pole location with its residue and the indices that generated it
/// (several indices when distinct lattice points coincide).
#[derive(Debug, Clone)]
pub struct PoleSpec {
    pub location: Complex64,
    pub residue: Complex64,
    pub origins: Vec<PoleOrigin>,
}

/// Parameter regime for the negative-integer pole classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QRegime {
    /// Q = 1 (so rho = -1 exactly).
    UnitPositive,
    /// Q = -1 (so rho = -1 exactly).
    UnitNegative,
    /// Q > 0, Q != 1.
    Positive,
    /// Q < 0, Q != -1.
    Negative,
}

/// A negative integer -l at which zeta_U has a (simple) pole, together
/// with the colliding lattice index k and the parameter regime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NegIntPole {
    pub l: u32,
    pub k: u32,
    pub regime: QRegime,
}

/// Brute-force Dirichlet series, valid for Re(s) >= cfg.sigma_min.
pub fn zeta_direct(params: &LucasParams, s: Complex64, cfg: &EvalConfig) -> Result<Complex64> {
    let sigma = s.re;
    if sigma < cfg.sigma_min {
        return Err(Error::Domain(format!(
            "direct series needs Re(s) >= {}, got Re(s) = {sigma}",
            cfg.sigma_min
        )));
    }
    let ratio = (-sigma * params.log_a).exp(); // asymptotic term ratio a^{-sigma}
    let mut acc = Complex64::new(0.0, 0.0);
    let (mut prev, mut cur) = (0.0f64, 1.0f64);
    let mut n = 1u32;
    loop {
        let term = principal_power(Complex64::new(cur, 0.0), -s)?;
        acc += term;
        // geometric tail bound once the term ratio has settled
        if n >= 8 {
            let tail = term.norm() * ratio / (1.0 - ratio);
            if tail <= cfg.eps_series * acc.norm().max(1e-30) {
                return Ok(acc);
            }
        }
        let next = params.p * cur - params.q * prev;
        prev = cur;
        cur = next;
        n += 1;
        if !cur.is_finite() || n > params.max_index() {
            return Err(Error::NonConvergence {
                context: "direct zeta series (Re(s) too small for f64 range)",
            });
        }
    }
}

/// Analytic continuation of zeta_U to the whole s-plane.
///
/// Arguments closer than cfg.delta_pole to a genuine pole are rejected
/// with [`Error::NearPole`]; removable lattice points (vanishing
/// binomial factor) are evaluated by their finite limit.
pub fn zeta_continued(params: &LucasParams, s: Complex64, cfg: &EvalConfig) -> Result<Complex64> {
    let log_a = params.log_a;
    let ln_abs_b = params.b.abs().ln();
    let sign_b: f64 = if params.b < 0.0 { -1.0 } else { 1.0 };

    // When s sits at (or near) a negative integer -l, removable 0*inf
    // collisions can occur out at k ~ l/(1 - rho); do not stop the sum
    // before passing them.
    let mut k_floor = 4u32;
    let re_round = (-s.re).round();
    if re_round >= 0.0 && (s + Complex64::new(re_round, 0.0)).norm() < 1e-6 && params.rho < 1.0 {
        let bound = (re_round / (1.0 - params.rho)).ceil() as u32 + 2;
        k_floor = k_floor.max(bound);
    }

    let mut acc = Complex64::new(0.0, 0.0);
    let mut binom = Complex64::new(1.0, 0.0); // binom(-s, k), updated per k
    let mut small_run = 0u32;
    for k in 0..=cfg.k_max {
        if k > 0 {
            binom *= (-s - (k - 1) as f64) / k as f64;
        }
        let exponent = -(s + k as f64) * log_a + Complex64::new(k as f64 * ln_abs_b, 0.0);
        let q = exponent.exp() * sign_b.powi(k as i32);
        let one_minus = Complex64::new(1.0, 0.0) - q;
        let dist = if q.norm() > 0.25 && q.norm() < 4.0 {
            q.ln().norm() / log_a // distance to the nearest lattice point
        } else {
            f64::INFINITY
        };
        let term = if dist >= cfg.delta_pole {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            binom * sign * q / one_minus
        } else {
            // s is near the lattice point s* of index k
            let s_star = s + q.ln() / log_a;
            let l_star = (-s_star.re).round();
            let removable = l_star >= 0.0
                && (l_star as u32 as i64) < k as i64
                && (s_star + Complex64::new(l_star, 0.0)).norm() < 1e-9;
            if !removable {
                return Err(Error::NearPole { s, distance: dist });
            }
            let l = l_star as u32;
            if (s - s_star).norm() < 1e-8 {
                // finite limit of the 0 * inf collision
                let l_fact: f64 = (1..=l).map(f64::from).product();
                let gap_fact: f64 = (1..=(k - l - 1)).map(f64::from).product();
                let k_fact: f64 = (1..=k).map(f64::from).product();
                let sign = if l % 2 == 0 { 1.0 } else { -1.0 };
                Complex64::new(sign * l_fact * gap_fact / (k_fact * log_a), 0.0)
            } else {
                // inside the removable zone but off-centre: the direct
                // quotient is still accurate to ~1e-16/|s - s*|
                let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                binom * sign * q / one_minus
            }
        };
        acc += term;
        if k >= k_floor {
            if term.norm() <= cfg.eps_series * acc.norm().max(1e-30) {
                small_run += 1;
                if small_run >= 3 {
                    break;
                }
            } else {
                small_run = 0;
            }
        }
        if k == cfg.k_max {
            return Err(Error::NonConvergence {
                context: "zeta continuation k-series",
            });
        }
    }
    let prefactor = (0.5 * s * params.d.ln()).exp();
    Ok(prefactor * acc)
}

/// Residue and constant term of the Laurent expansion at s = 0:
/// zeta_U(s) = 1/(s log a) + (log D / log a - 1)/2 + O(s).
pub fn laurent_at_zero(params: &LucasParams) -> (f64, f64) {
    let residue = 1.0 / params.log_a;
    let constant = 0.5 * (params.d.ln() / params.log_a - 1.0);
    (residue, constant)
}

/// All poles of zeta_U inside `region`, sorted by (Re, Im).
///
/// Every pole is simple. Removable lattice points (vanishing residue
/// factor) are omitted.
pub fn zeta_poles(
    params: &LucasParams,
    region: &Region,
    cfg: &EvalConfig,
) -> Result<Vec<PoleSpec>> {
    if region.re_min > region.re_max || region.im_min > region.im_max {
        return Err(Error::Domain("empty pole-search region".into()));
    }
    let gap = 1.0 - params.rho; // > 0
    let k_hi = if region.re_min >= 0.0 {
        0
    } else {
        (-region.re_min / gap).floor() as u64
    };
    if k_hi > cfg.k_max as u64 {
        return Err(Error::Domain(format!(
            "region needs lattice index k up to {k_hi}, cap is {}",
            cfg.k_max
        )));
    }
    let class = classify_ratio(params, cfg);
    let mut poles = Vec::new();
    for k in 0..=(k_hi as u32) {
        // snap -k(1 - rho) to the exact rational when one is known
        let re = match class.class {
            RatioClass::Rational { num, den } => {
                -((k as u64 * (num + den) as u64) as f64) / den as f64
            }
            RatioClass::PresumedIrrational => -(k as f64) * gap,
        };
        if re < region.re_min - 1e-12 || re > region.re_max + 1e-12 {
            continue;
        }
        let l = params.l_index(k) as i64;
        // (2n + l) pi / log a in [im_min, im_max]
        let lo = (region.im_min * params.log_a / PI - l as f64) / 2.0;
        let hi = (region.im_max * params.log_a / PI - l as f64) / 2.0;
        let n_lo = lo.ceil() as i64;
        let n_hi = hi.floor() as i64;
        if n_lo.abs().max(n_hi.abs()) > cfg.n_max as i64 {
            return Err(Error::Domain(format!(
                "region needs lattice index |n| beyond the cap {}",
                cfg.n_max
            )));
        }
        for n in n_lo..=n_hi {
            // removable when -s is an integer in {0, ..., k-1}
            if 2 * n + l == 0 {
                let l_cand = (k as f64 * gap).round();
                if (k as f64 * gap - l_cand).abs() < 1e-9 && (l_cand as i64) < k as i64 {
                    continue;
                }
            }
            let location = Complex64::new(re, (2 * n + l) as f64 * PI / params.log_a);
            let binom = binom_general(-location, k);
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            let prefactor = (0.5 * location * params.d.ln()).exp();
            let residue = prefactor * binom * sign / params.log_a;
            poles.push(PoleSpec {
                location,
                residue,
                origins: vec![PoleOrigin::Lattice { k, n }],
            });
        }
    }
    poles.sort_by(|x, y| {
        (x.location.re, x.location.im)
            .partial_cmp(&(y.location.re, y.location.im))
            .unwrap()
    });
    Ok(poles)
}

/// The negative integers -l (l <= l_max) at which zeta_U has a pole,
/// labelled with the colliding k and the parameter regime. Sequences
/// whose exponent ratio is (presumed) irrational have none.
pub fn classify_neg_int_poles(
    params: &LucasParams,
    class: &RatioClassification,
    l_max: u32,
) -> Vec<NegIntPole> {
    let regime = if (params.q - 1.0).abs() < 1e-12 {
        QRegime::UnitPositive
    } else if (params.q + 1.0).abs() < 1e-12 {
        QRegime::UnitNegative
    } else if params.q > 0.0 {
        QRegime::Positive
    } else {
        QRegime::Negative
    };
    set_b(params, class, l_max)
        .into_iter()
        .map(|(l, k)| NegIntPole { l, k, regime })
        .collect()
}

/// Residue of zeta_U at the negative-integer pole -l:
/// D^{-l/2} binom(l, k) (-1)^k / log a with k the colliding index.
pub fn residue_at_neg_int(params: &LucasParams, l: u32, k: u32) -> f64 {
    let binom: f64 = {
        let mut acc = 1.0f64;
        for j in 0..k {
            acc *= (l - j) as f64 / (j + 1) as f64;
        }
        acc
    };
    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
    params.d.powf(-0.5 * l as f64) * binom * sign / params.log_a
}

/// Constant term of the Laurent expansion of zeta_U at a negative-integer
/// pole -l. Errs when -l is not a pole.
///
/// The singular k-term contributes
/// R [ (log D - log a)/2 - H_l + H_{l-k} ] with R the residue; the other
/// finitely many k-terms are evaluated directly.
pub fn constant_term_at_neg_pole(params: &LucasParams, l: u32, cfg: &EvalConfig) -> Result<f64> {
    let class = classify_ratio(params, cfg);
    let pair = set_b(params, &class, l)
        .into_iter()
        .find(|&(ll, _)| ll == l)
        .ok_or_else(|| Error::Domain(format!("zeta has no pole at -{l} for these parameters")))?;
    let k0 = pair.1;
    let residue = residue_at_neg_int(params, l, k0);
    let mut ct = residue * (0.5 * (params.d.ln() - params.log_a) - harmonic(l) + harmonic(l - k0));
    // remaining k-terms of the continuation at s = -l (binomial kills k > l)
    let d_pref = params.d.powf(-0.5 * l as f64);
    for k in 0..=l {
        if k == k0 {
            continue;
        }
        let q = params.a.powi(l as i32 - k as i32) * params.b.powi(k as i32);
        let binom: f64 = {
            let mut acc = 1.0f64;
            for j in 0..k {
                acc *= (l - j) as f64 / (j + 1) as f64;
            }
            acc
        };
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        ct += d_pref * binom * sign * q / (1.0 - q);
    }
    Ok(ct)
}
