//! Independent evaluation routes used to cross-check the main
//! implementations: brute-force sums through `num_complex::powc` (a
//! different power/branch code path than `special::principal_power`),
//! a binomial-tail continuation of the shifted zeta that bypasses the
//! Mellin-split machinery entirely, and Cauchy-integral extractors for
//! residues and Laurent coefficients.

use crate::config::EvalConfig;
use crate::error::{Error, Result};
use crate::hurwitz::hurwitz_continued;
use crate::lucas::LucasParams;
use crate::quad::cauchy_coefficient;
use crate::zeta::zeta_continued;
use num_complex::Complex64;

/// Brute-force sum_{n>=1} U_n^{-s} via `powc`, Re(s) >= cfg.sigma_min.
pub fn brute_zeta(params: &LucasParams, s: Complex64, cfg: &EvalConfig) -> Result<Complex64> {
    if s.re < cfg.sigma_min {
        return Err(Error::Domain(format!(
            "brute series needs Re(s) >= {}, got Re(s) = {}",
            cfg.sigma_min, s.re
        )));
    }
    let mut acc = Complex64::new(0.0, 0.0);
    let ratio = (-s.re * params.log_a).exp();
    let (mut prev, mut cur) = (0.0f64, 1.0f64);
    for n in 1..=params.max_index() {
        let term = Complex64::new(cur, 0.0).powc(-s);
        acc += term;
        if n >= 8 && term.norm() * ratio / (1.0 - ratio) <= cfg.eps_series * acc.norm() {
            return Ok(acc);
        }
        let next = params.p * cur - params.q * prev;
        prev = cur;
        cur = next;
        if !cur.is_finite() {
            break;
        }
    }
    Err(Error::NonConvergence {
        context: "brute zeta series",
    })
}

/// Brute-force sum_{n>=0} (z + U_n)^{-s} via `powc`.
pub fn brute_hurwitz(
    params: &LucasParams,
    s: Complex64,
    z: Complex64,
    cfg: &EvalConfig,
) -> Result<Complex64> {
    if z.re <= 0.0 {
        return Err(Error::Domain(format!(
            "shift z must satisfy Re(z) > 0, got {z}"
        )));
    }
    if s.re < cfg.sigma_min {
        return Err(Error::Domain(format!(
            "brute series needs Re(s) >= {}, got Re(s) = {}",
            cfg.sigma_min, s.re
        )));
    }
    let u0 = if cfg.u0_one { 1.0 } else { 0.0 };
    let mut acc = (z + u0).powc(-s);
    let ratio = (-s.re * params.log_a).exp();
    let (mut prev, mut cur) = (0.0f64, 1.0f64);
    for n in 1..=params.max_index() {
        let term = (z + cur).powc(-s);
        acc += term;
        if n >= 8 && term.norm() * ratio / (1.0 - ratio) <= cfg.eps_series * acc.norm() {
            return Ok(acc);
        }
        let next = params.p * cur - params.q * prev;
        prev = cur;
        cur = next;
        if !cur.is_finite() {
            break;
        }
    }
    Err(Error::NonConvergence {
        context: "brute shifted series",
    })
}

/// Tail sum T_N(w) = sum_{n>=N} U_n^{-w}. For Re(w) above the direct
/// threshold the series is summed as it stands; otherwise it is taken as
/// zeta_U(w) minus the finite head, which stays stable exactly because
/// every retained term is then O(1).
fn tail_sum(
    params: &LucasParams,
    w: Complex64,
    n_from: u32,
    cfg: &EvalConfig,
) -> Result<Complex64> {
    if n_from == 0 {
        return Err(Error::Domain("tail must start at n >= 1".into()));
    }
    if w.re > cfg.sigma_min {
        let ratio = (-w.re * params.log_a).exp();
        let mut acc = Complex64::new(0.0, 0.0);
        let mut prev = params.u(n_from - 1)?;
        let mut cur = params.u(n_from)?;
        let mut n = n_from;
        loop {
            let term = Complex64::new(cur, 0.0).powc(-w);
            acc += term;
            if n >= n_from + 4 {
                let bound = term.norm() * ratio / (1.0 - ratio);
                if bound <= cfg.eps_series * acc.norm().max(1e-30) {
                    return Ok(acc);
                }
            }
            let next = params.p * cur - params.q * prev;
            prev = cur;
            cur = next;
            n += 1;
            if !cur.is_finite() || n > params.max_index() {
                break;
            }
        }
        // fall through to the continued route when f64 range runs out
    }
    let mut head = Complex64::new(0.0, 0.0);
    for n in 1..n_from {
        head += Complex64::new(params.u(n)?, 0.0).powc(-w);
    }
    Ok(zeta_continued(params, w, cfg)? - head)
}

/// Binomial-tail continuation of the shifted zeta: the head keeps the
/// terms with U_n <= 2(|z| + 1), the rest expands in powers of z / U_n
/// and re-sums each power as a tail of the plain zeta. Valid wherever
/// the plain continuation is pole-free at s, s+1, s+2, ...
pub fn hurwitz_binomial(
    params: &LucasParams,
    s: Complex64,
    z: Complex64,
    cfg: &EvalConfig,
) -> Result<Complex64> {
    if z.re <= 0.0 {
        return Err(Error::Domain(format!(
            "shift z must satisfy Re(z) > 0, got {z}"
        )));
    }
    let cut = 2.0 * (z.norm() + 1.0);
    let mut n_split = 1u32;
    while params.u(n_split)? < cut {
        n_split += 1;
        if n_split > params.max_index() {
            return Err(Error::NonConvergence {
                context: "binomial-tail head",
            });
        }
    }
    let u0 = if cfg.u0_one { 1.0 } else { 0.0 };
    let mut acc = (z + u0).powc(-s);
    for n in 1..n_split {
        acc += (z + params.u(n)?).powc(-s);
    }
    let u_split = params.u(n_split)?;
    let mut binom = Complex64::new(1.0, 0.0);
    let mut z_pow = Complex64::new(1.0, 0.0);
    for j in 0..cfg.q_max {
        if j > 0 {
            binom *= (-s - (j - 1) as f64) / j as f64;
            z_pow *= z;
        }
        let term = binom * z_pow * tail_sum(params, s + j as f64, n_split, cfg)?;
        acc += term;
        let scale = (z.norm() / u_split).powi(j as i32);
        if j >= 6 && term.norm() <= cfg.eps_series * acc.norm().max(1e-30) && scale < 1e-12 {
            return Ok(acc);
        }
        if j >= 6 && term.norm() <= 1e-16 * acc.norm().max(1e-30) {
            return Ok(acc);
        }
    }
    Err(Error::NonConvergence {
        context: "binomial tail expansion",
    })
}

/// Laurent coefficient of the continued plain zeta around `center`.
pub fn zeta_laurent_coefficient(
    params: &LucasParams,
    center: Complex64,
    radius: f64,
    order: i32,
    tol: f64,
    cfg: &EvalConfig,
) -> Result<Complex64> {
    cauchy_coefficient(
        |s| zeta_continued(params, s, cfg),
        center,
        radius,
        order,
        tol,
    )
}

/// Residue of the continued plain zeta at `center` by contour integral.
pub fn zeta_residue_contour(
    params: &LucasParams,
    center: Complex64,
    radius: f64,
    tol: f64,
    cfg: &EvalConfig,
) -> Result<Complex64> {
    zeta_laurent_coefficient(params, center, radius, -1, tol, cfg)
}

/// Residue of the continued shifted zeta at `center` by contour
/// integral; `m` pins the expansion order of the evaluations.
pub fn hurwitz_residue_contour(
    params: &LucasParams,
    center: Complex64,
    radius: f64,
    z: Complex64,
    m: Option<u32>,
    tol: f64,
    cfg: &EvalConfig,
) -> Result<Complex64> {
    cauchy_coefficient(
        |s| hurwitz_continued(params, s, z, m, cfg),
        center,
        radius,
        -1,
        tol,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hurwitz::{hurwitz_direct, hurwitz_residue_at_neg_int};
    use crate::zeta::{laurent_at_zero, zeta_direct};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn brute_routes_agree_with_main_series() {
        let cfg = EvalConfig::default();
        let seqs = [
            LucasParams::fibonacci(),
            LucasParams::pell(),
            LucasParams::jacobsthal(),
            LucasParams::new(2.0, -8.0).unwrap(),
        ];
        for params in &seqs {
            for s in [c(2.0, 0.0), c(1.5, 2.0), c(0.5, -3.0)] {
                let a = zeta_direct(params, s, &cfg).unwrap();
                let b = brute_zeta(params, s, &cfg).unwrap();
                assert!((a - b).norm() <= 1e-12 * a.norm().max(1.0));
            }
            for (s, z) in [(c(2.0, 0.0), c(1.0, 0.0)), (c(0.8, 1.0), c(2.0, 1.0))] {
                let a = hurwitz_direct(params, s, z, &cfg).unwrap();
                let b = brute_hurwitz(params, s, z, &cfg).unwrap();
                assert!((a - b).norm() <= 1e-12 * a.norm().max(1.0));
            }
        }
    }

    #[test]
    fn binomial_tail_matches_direct_sum_on_the_right() {
        let cfg = EvalConfig::default();
        for params in [
            LucasParams::fibonacci(),
            LucasParams::jacobsthal(),
            LucasParams::pell(),
        ] {
            for (s, z) in [
                (c(2.0, 0.0), c(1.0, 0.0)),
                (c(0.7, 1.0), c(2.0, 1.0)),
                (c(1.2, -2.0), c(0.5, 0.0)),
            ] {
                let direct = hurwitz_direct(&params, s, z, &cfg).unwrap();
                let binom = hurwitz_binomial(&params, s, z, &cfg).unwrap();
                assert!(
                    (direct - binom).norm() <= 1e-9 * direct.norm().max(1.0),
                    "P={}, Q={}, s={s}, z={z}: {direct} vs {binom}",
                    params.p,
                    params.q
                );
            }
        }
    }

    #[test]
    fn binomial_tail_continues_to_the_left() {
        let cfg = EvalConfig::default();
        let fib = LucasParams::fibonacci();
        let got = hurwitz_binomial(&fib, c(-0.5, 0.0), c(1.0, 0.0), &cfg).unwrap();
        assert!(
            (got - c(0.40825722911701445, 0.0)).norm() < 1e-9,
            "binomial route at s = -1/2: {got}"
        );
        let mellin = hurwitz_continued(&fib, c(-0.5, 0.0), c(1.0, 0.0), None, &cfg).unwrap();
        assert!((got - mellin).norm() < 1e-8);
    }

    #[test]
    fn contour_extraction_recovers_known_laurent_data() {
        let cfg = EvalConfig::default();
        let fib = LucasParams::fibonacci();
        let (residue, constant) = laurent_at_zero(&fib);
        let got = zeta_residue_contour(&fib, c(0.0, 0.0), 0.25, 1e-9, &cfg).unwrap();
        assert!((got - residue).norm() < 1e-9, "residue at 0: {got}");
        let got = zeta_laurent_coefficient(&fib, c(0.0, 0.0), 0.25, 0, 1e-9, &cfg).unwrap();
        assert!((got - constant).norm() < 1e-9, "constant term at 0: {got}");
    }

    #[test]
    fn contour_extraction_recovers_shifted_residue() {
        let cfg = EvalConfig::default();
        let fib = LucasParams::fibonacci();
        let z = c(1.0, 0.0);
        let closed = hurwitz_residue_at_neg_int(&fib, 0, z, &cfg).unwrap();
        let got = hurwitz_residue_contour(&fib, c(0.0, 0.0), 0.3, z, None, 1e-7, &cfg).unwrap();
        assert!(
            (got - closed).norm() < 1e-7,
            "shifted residue at 0: {got} vs {closed}"
        );
    }
}
