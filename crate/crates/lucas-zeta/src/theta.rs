//! The theta function theta(t) = sum_{n>=0} exp(-U_n t) of a Lucas
//! sequence and its asymptotic expansion as t -> 0+.
//!
//! Mellin inversion of Gamma(s) zeta_U(s) and a contour shift past
//! Re(s) = -2m collect one term per pole:
//!
//! * the double pole at s = 0 gives -log t / log a plus a constant,
//!   which after adding the n = 0 term of the theta sum itself equals
//!   (log D + log a - 2 gamma) / (2 log a);
//! * each lattice pole s_{k,n} off the non-positive integers gives an
//!   oscillatory term; with w = rho k + (2n + l_{Q,k}) pi i / log a the
//!   identity binom(-s, k) (-1)^k Gamma(s) = Gamma(w) / k! at s = s_{k,n}
//!   condenses its amplitude to
//!   C(k) D^{n pi i / log a} Gamma(w),
//!   C(k) = D^{(k/2)(rho - 1) + l pi i / (2 log a)} / (k! log a),
//!   attached to t^{k(1 - rho) - l pi i / log a} t^{-2 n pi i / log a};
//! * each Gamma pole -l at which zeta_U is regular gives
//!   e(l) t^l with e(l) = (-1)^l zeta_U(-l) / l!;
//! * each coincidence (l, k) of a Gamma pole with a lattice pole gives
//!   (d(l) - d~(l) log t) t^l with
//!   d~(l) = (-1)^{l+k} D^{-l/2} binom(l, k) / (l! log a) and
//!   d(l) = ((-1)^l / l!) (C_l + R_l (H_l - gamma)), where R_l and C_l
//!   are the residue and Laurent constant term of zeta_U at -l.
//!
//! Truncating after the families with t-exponent k(1 - rho) <= 2m and the
//! powers t^l, l <= 2m, leaves a remainder O(t^{2m + c0}) whose certified
//! exponent is reported in the expansion.

use crate::config::EvalConfig;
use crate::error::{Error, Result};
use crate::lucas::{classify_ratio, in_set_a, set_b, LucasParams};
use crate::special::{gamma, harmonic, EULER_GAMMA};
use crate::zeta::{constant_term_at_neg_pole, residue_at_neg_int, zeta_continued};
use num_complex::Complex64;
use std::f64::consts::PI;

/// One oscillatory family: t^{re_exp} times a Fourier series in log t.
/// Each term is (2n + l, amplitude), contributing
/// amplitude * exp(-i (2n + l) pi log t / log a).
#[derive(Debug, Clone)]
pub struct OscFamily {
    pub k: u32,
    /// k (1 - rho), the real part of the t-exponent.
    pub re_exp: f64,
    /// (frequency index 2n + l, complex amplitude) pairs.
    pub terms: Vec<(i64, Complex64)>,
}

/// One power term (coeff - log_coeff * log t) t^l; log_coeff is zero
/// unless -l is a pole of zeta_U.
#[derive(Debug, Clone, Copy)]
pub struct PolyTerm {
    pub l: u32,
    pub coeff: f64,
    pub log_coeff: f64,
}

/// The truncated small-t expansion of theta.
#[derive(Debug, Clone)]
pub struct ThetaExpansion {
    /// Truncation order m (families up to t^{2m}, powers up to t^{2m}).
    pub order: u32,
    /// The constant (log D + log a - 2 gamma) / (2 log a).
    pub constant: f64,
    /// log a, fixing the -log t / log a term and all phases.
    pub log_a: f64,
    pub families: Vec<OscFamily>,
    pub poly: Vec<PolyTerm>,
    /// Certified decay order of theta(t) minus this expansion: the
    /// remainder is O(t^remainder_exponent) as t -> 0+.
    pub remainder_exponent: f64,
}

/// Direct evaluation of theta(t) = sum_{n>=0} exp(-U_n t) for t > 0.
/// Under `cfg.u0_one` the n = 0 term uses U_0 = 1 instead of U_0 = 0.
pub fn theta_direct(params: &LucasParams, t: f64, cfg: &EvalConfig) -> Result<f64> {
    if !(t > 0.0) {
        return Err(Error::Domain(format!("theta needs t > 0, got {t}")));
    }
    let mut acc = if cfg.u0_one { (-t).exp() } else { 1.0 };
    let (mut prev, mut cur) = (0.0f64, 1.0f64);
    let mut n = 1u32;
    loop {
        let term = (-cur * t).exp();
        acc += term;
        if cur * t > 745.0 || term < cfg.eps_series * acc {
            return Ok(acc);
        }
        let next = params.p * cur - params.q * prev;
        prev = cur;
        cur = next;
        n += 1;
        if !cur.is_finite() || n > params.max_index() {
            return Err(Error::NonConvergence {
                context: "theta series (t too small for f64 range)",
            });
        }
    }
}

/// Builds the order-m expansion of theta around t = 0.
pub fn build_expansion(params: &LucasParams, m: u32, cfg: &EvalConfig) -> Result<ThetaExpansion> {
    let log_a = params.log_a;
    let ln_d = params.d.ln();
    let gap = 1.0 - params.rho;
    let class = classify_ratio(params, cfg);
    let m_families = (2.0 * m as f64 / gap).floor() as u64;
    if m_families > cfg.k_max as u64 {
        return Err(Error::Domain(format!(
            "order {m} needs {m_families} oscillatory families, cap is {}",
            cfg.k_max
        )));
    }
    let m_families = m_families as u32;

    let constant = (ln_d + log_a - 2.0 * EULER_GAMMA) / (2.0 * log_a);

    // oscillatory families k = 0 .. M
    let amp_floor = 1e-18;
    let mut families = Vec::with_capacity(m_families as usize + 1);
    for k in 0..=m_families {
        let l = params.l_index(k);
        let k_fact: f64 = (1..=k).map(f64::from).product::<f64>().max(1.0);
        // C(k) = D^{(k/2)(rho-1)} e^{i l pi ln D / (2 log a)} / (k! log a)
        let c_mag = params.d.powf(0.5 * k as f64 * (params.rho - 1.0)) / (k_fact * log_a);
        let c_phase = l as f64 * PI * ln_d / (2.0 * log_a);
        let c_k = c_mag * Complex64::new(c_phase.cos(), c_phase.sin());
        let mut terms = Vec::new();
        let mut push_term = |n: i64| -> Result<bool> {
            if !in_set_a(params, &class, k, n) {
                return Ok(true); // excluded, but keep scanning
            }
            let w = Complex64::new(
                params.rho * k as f64,
                (2 * n + l as i64) as f64 * PI / log_a,
            );
            let d_phase = n as f64 * PI * ln_d / log_a;
            let amp = c_k * Complex64::new(d_phase.cos(), d_phase.sin()) * gamma(w)?;
            if amp.norm() < amp_floor {
                return Ok(false);
            }
            terms.push((2 * n + l as i64, amp));
            Ok(true)
        };
        // walk outward from the symmetry centre n ~ -l/2 in both directions
        let centre = -((l as i64) / 2);
        let mut n = centre;
        let mut misses = 0u32;
        while misses < 2 && n <= centre + cfg.n_max as i64 {
            if !push_term(n)? {
                misses += 1;
            } else {
                misses = 0;
            }
            n += 1;
        }
        let mut n = centre - 1;
        let mut misses = 0u32;
        while misses < 2 && n >= centre - cfg.n_max as i64 {
            if !push_term(n)? {
                misses += 1;
            } else {
                misses = 0;
            }
            n -= 1;
        }
        terms.sort_by_key(|&(f, _)| f);
        families.push(OscFamily {
            k,
            re_exp: k as f64 * gap,
            terms,
        });
    }

    // power terms l = 1 .. 2m
    let b_pairs = set_b(params, &class, 2 * m);
    let mut poly = Vec::new();
    for l in 1..=(2 * m) {
        if let Some(&(_, k)) = b_pairs.iter().find(|&&(ll, _)| ll == l) {
            let residue = residue_at_neg_int(params, l, k);
            let ct = constant_term_at_neg_pole(params, l, cfg)?;
            let l_fact: f64 = (1..=l).map(f64::from).product();
            let sign = if l % 2 == 0 { 1.0 } else { -1.0 };
            let d_coeff = sign / l_fact * (ct + residue * (harmonic(l) - EULER_GAMMA));
            let d_log = sign / l_fact * residue;
            poly.push(PolyTerm {
                l,
                coeff: d_coeff,
                log_coeff: d_log,
            });
        } else {
            let z = zeta_continued(params, Complex64::new(-(l as f64), 0.0), cfg)?;
            let l_fact: f64 = (1..=l).map(f64::from).product();
            let sign = if l % 2 == 0 { 1.0 } else { -1.0 };
            poly.push(PolyTerm {
                l,
                coeff: sign * z.re / l_fact,
                log_coeff: 0.0,
            });
        }
    }

    // next omitted exponent: the (M+1)-st family or the power t^{2m+1}
    let c0 = (((m_families + 1) as f64) * gap - 2.0 * m as f64).min(1.0);
    Ok(ThetaExpansion {
        order: m,
        constant,
        log_a,
        families,
        poly,
        remainder_exponent: 2.0 * m as f64 + c0,
    })
}

/// Evaluates the expansion at t > 0.
pub fn eval_expansion(expansion: &ThetaExpansion, t: f64) -> Result<f64> {
    if !(t > 0.0) {
        return Err(Error::Domain(format!(
            "expansion defined for t > 0, got {t}"
        )));
    }
    let ln_t = t.ln();
    let mut acc = Complex64::new(expansion.constant - ln_t / expansion.log_a, 0.0);
    let u = PI * ln_t / expansion.log_a;
    for fam in &expansion.families {
        let scale = t.powf(fam.re_exp);
        let mut osc = Complex64::new(0.0, 0.0);
        for &(freq, amp) in &fam.terms {
            let phase = -(freq as f64) * u;
            osc += amp * Complex64::new(phase.cos(), phase.sin());
        }
        acc += scale * osc;
    }
    for p in &expansion.poly {
        acc += t.powi(p.l as i32) * (p.coeff - p.log_coeff * ln_t);
    }
    Ok(acc.re)
}

/// Least-squares slope of log |theta(t) - expansion(t)| against log t on a
/// geometric grid of `samples` points in [t_lo, t_hi]. A slope close to
/// the expansion's `remainder_exponent` confirms the claimed decay order.
pub fn expansion_error_order(
    params: &LucasParams,
    expansion: &ThetaExpansion,
    t_lo: f64,
    t_hi: f64,
    samples: u32,
    cfg: &EvalConfig,
) -> Result<f64> {
    if !(t_lo > 0.0 && t_hi > t_lo) {
        return Err(Error::Domain(format!(
            "need 0 < t_lo < t_hi, got [{t_lo}, {t_hi}]"
        )));
    }
    if samples < 2 {
        return Err(Error::DegenerateFit);
    }
    let ratio = (t_hi / t_lo).powf(1.0 / (samples - 1) as f64);
    let mut points = Vec::new();
    let mut t = t_lo;
    for _ in 0..samples {
        let residual = theta_direct(params, t, cfg)? - eval_expansion(expansion, t)?;
        if residual != 0.0 && residual.is_finite() {
            points.push((t.ln(), residual.abs().ln()));
        }
        t *= ratio;
    }
    if points.len() < 2 {
        return Err(Error::DegenerateFit);
    }
    let n = points.len() as f64;
    let mean_x: f64 = points.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y: f64 = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = points.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    if sxx == 0.0 {
        return Err(Error::DegenerateFit);
    }
    Ok(sxy / sxx)
}
