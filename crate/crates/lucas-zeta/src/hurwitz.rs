//! The shifted zeta function zeta_U(s, z) = sum_{n>=0} (z + U_n)^{-s}
//! (Re z > 0), its analytic continuation, and its pole structure.
//!
//! Continuation strategy: Gamma(s) zeta_U(s, z) is the Mellin transform
//! of theta(t) e^{-zt}. Splitting theta into its order-m expansion alpha
//! plus remainder gives
//!
//!   zeta_U(s, z) = (1/Gamma(s)) int_0^inf (theta - alpha) e^{-zt} t^{s-1} dt
//!                + I1 - I2 + I3 + I4 - I5,
//!
//! where the alpha pieces integrate in closed form:
//!   I1 = const z^{-s},
//!   I2 = (psi(s) - Ln z) / (log a * z^s),
//!   I3 = sum over oscillatory terms of
//!        amp Gamma(s + mu) z^{-s-mu} / Gamma(s),
//!        mu = k (1 - rho) - (2n + l) pi i / log a,
//!   I4 = sum of coeff(l) (s)_l z^{-s-l} over power terms,
//!   I5 = sum of d~(l) (s)_l (psi(s + l) - Ln z) z^{-s-l} over the
//!        double-pole terms.
//!
//! The remainder integral converges for Re(s) > -(2m + c0), so m is
//! chosen from Re(s) unless the caller pins it. The continuation has
//! simple poles at every non-positive integer -l, with residue
//!
//!   z^l / log a + sum_{(j,k) in B, j <= l} d~(j) (-l)_j z^{l-j},
//!
//! and at the shifted lattice points -l - k(1 - rho) + (2n + l_{Q,k}) pi
//! i / log a (n in A(k)), with residue
//!
//!   C(k) D^{n pi i / log a} (-1)^l z^l / l! * prod_{j=1}^{l+k} (w - j),
//!   w = rho k + (2n + l_{Q,k}) pi i / log a;
//!
//! residues of coinciding lattice points add.

use crate::config::EvalConfig;
use crate::error::{Error, Result};
use crate::lucas::{classify_ratio, in_set_a, set_b, LucasParams};
use crate::quad::{integrate_interval, integrate_tail};
use crate::special::{digamma, gamma, pochhammer, principal_power};
use crate::theta::{build_expansion, eval_expansion, theta_direct};
use crate::zeta::{PoleOrigin, PoleSpec, Region};
use num_complex::Complex64;
use std::f64::consts::PI;

fn factorial(n: u32) -> f64 {
    (1..=n).map(f64::from).product::<f64>().max(1.0)
}

fn validate_z(z: Complex64) -> Result<()> {
    if z.re <= 0.0 {
        return Err(Error::Domain(format!(
            "shift z must satisfy Re(z) > 0, got {z}"
        )));
    }
    Ok(())
}

/// Distance from s to the nearest non-positive integer, if any is close.
fn nonpositive_integer_distance(s: Complex64) -> Option<f64> {
    let r = s.re.round();
    if r > 0.5 {
        return None;
    }
    Some((s - Complex64::new(r.min(0.0), 0.0)).norm())
}

/// Brute-force series sum_{n>=0} (z + U_n)^{-s}, Re(s) >= cfg.sigma_min.
/// Under `cfg.u0_one` the n = 0 term uses U_0 = 1.
pub fn hurwitz_direct(
    params: &LucasParams,
    s: Complex64,
    z: Complex64,
    cfg: &EvalConfig,
) -> Result<Complex64> {
    validate_z(z)?;
    if s.re < cfg.sigma_min {
        return Err(Error::Domain(format!(
            "direct series needs Re(s) >= {}, got Re(s) = {}",
            cfg.sigma_min, s.re
        )));
    }
    let u0 = if cfg.u0_one { 1.0 } else { 0.0 };
    let mut acc = principal_power(z + u0, -s)?;
    let ratio = (-s.re * params.log_a).exp();
    let (mut prev, mut cur) = (0.0f64, 1.0f64);
    let mut n = 1u32;
    loop {
        let term = principal_power(z + cur, -s)?;
        acc += term;
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
                context: "direct shifted series (Re(s) too small for f64 range)",
            });
        }
    }
}

/// Analytic continuation of zeta_U(s, z) to the half-plane
/// Re(s) > -(2m + c0). With `m = None` the order is chosen from Re(s)
/// (at least cfg.m_default); pass an explicit m to push the accuracy of
/// the remainder integral, e.g. for contour integration near a pole.
pub fn hurwitz_continued(
    params: &LucasParams,
    s: Complex64,
    z: Complex64,
    m: Option<u32>,
    cfg: &EvalConfig,
) -> Result<Complex64> {
    validate_z(z)?;
    let m = match m {
        Some(m) => m,
        None => {
            // smallest m with 2m + c0 - 0.5 > -Re(s)
            let needed = ((0.5 - cfg.c0 - s.re) / 2.0).floor() as i64 + 1;
            needed.max(cfg.m_default as i64) as u32
        }
    };
    if m > 48 {
        return Err(Error::Domain(format!(
            "continuation order m = {m} out of range (Re(s) too negative)"
        )));
    }
    // genuine poles: s at a non-positive integer
    if let Some(dist) = nonpositive_integer_distance(s) {
        if dist < cfg.delta_pole {
            return Err(Error::NearPole { s, distance: dist });
        }
    }

    let expansion = build_expansion(params, m, cfg)?;
    if (2.0 * m as f64).max(expansion.remainder_exponent) + s.re <= 0.05 {
        return Err(Error::Domain(format!(
            "order m = {m} only reaches Re(s) > {:.3}, got Re(s) = {}",
            -expansion.remainder_exponent, s.re
        )));
    }

    let mut inner_cfg = *cfg;
    inner_cfg.u0_one = false; // expansion constants assume U_0 = 0

    // The remainder theta - alpha is computed by cancellation, so its
    // samples carry absolute noise of order 1e-15 |theta|. Walk down in
    // decades to the crossover where that noise takes over; below it the
    // integrand is amplified noise and integration would diverge for
    // Re(s) < 0. The skipped mass is covered by the certified power law
    // |theta - alpha| <= g(t_cut) (t / t_cut)^p.
    let p = expansion.remainder_exponent;
    let mut t_cut = 1e-16;
    let mut g_cut = 0.0f64;
    for d in 1..=16 {
        let t = 10.0f64.powi(-d);
        let theta_val = theta_direct(params, t, &inner_cfg)?;
        let g = (theta_val - eval_expansion(&expansion, t)?).abs();
        let noise = 1e-15 * theta_val.abs().max(1.0);
        if g <= 10.0 * noise {
            if d == 1 {
                t_cut = t;
                g_cut = g.max(noise);
            }
            break;
        }
        t_cut = t;
        g_cut = g;
    }

    // remainder integral over [t_cut, 1] and [1, inf)
    let integrand = |t: f64| -> Result<Complex64> {
        let r = theta_direct(params, t, &inner_cfg)? - eval_expansion(&expansion, t)?;
        let power = principal_power(Complex64::new(t, 0.0), s - 1.0)?;
        Ok(r * (-z * t).exp() * power)
    };
    let skipped_bound = 2.0 * g_cut * t_cut.powf(s.re) / (p + s.re);
    if !skipped_bound.is_finite() || skipped_bound > 1e-2 {
        return Err(Error::NonConvergence {
            context: "remainder integral is noise-dominated at this order (raise m)",
        });
    }
    let unit = integrate_interval(integrand, t_cut, 1.0, cfg.eps_quad)?;
    let tail = integrate_tail(integrand, 1.0, z.re, cfg.eps_quad)?;
    let gamma_s = gamma(s)?;
    let mut total = (unit.value + tail.value) / gamma_s;

    // I1 and I2
    let z_pow_neg_s = principal_power(z, -s)?;
    total += expansion.constant * z_pow_neg_s;
    total -= (digamma(s)? - z.ln()) * z_pow_neg_s / params.log_a;

    // I3: oscillatory contributions
    for fam in &expansion.families {
        for &(freq, amp) in &fam.terms {
            let mu = Complex64::new(fam.re_exp, -(freq as f64) * PI / params.log_a);
            let arg = s + mu;
            if let Some(dist) = nonpositive_integer_distance(arg) {
                if dist < cfg.delta_pole {
                    return Err(Error::NearPole { s, distance: dist });
                }
            }
            total += amp * gamma(arg)? * principal_power(z, -arg)? / gamma_s;
        }
    }

    // I4 and I5: power terms
    for p in &expansion.poly {
        let shifted = s + p.l as f64;
        let weight = pochhammer(s, p.l) * principal_power(z, -shifted)?;
        total += p.coeff * weight;
        if p.log_coeff != 0.0 {
            if let Some(dist) = nonpositive_integer_distance(shifted) {
                if dist < cfg.delta_pole {
                    return Err(Error::NearPole { s, distance: dist });
                }
            }
            total -= p.log_coeff * weight * (digamma(shifted)? - z.ln());
        }
    }

    if cfg.u0_one {
        total += principal_power(z + 1.0, -s)? - z_pow_neg_s;
    }
    Ok(total)
}

/// Residue of zeta_U(s, z) at the non-positive integer s = -l:
/// z^l / log a plus the collision corrections from set B.
pub fn hurwitz_residue_at_neg_int(
    params: &LucasParams,
    l: u32,
    z: Complex64,
    cfg: &EvalConfig,
) -> Result<Complex64> {
    validate_z(z)?;
    let class = classify_ratio(params, cfg);
    let mut res = principal_power(z, Complex64::new(l as f64, 0.0))? / params.log_a;
    for (j, k) in set_b(params, &class, l) {
        // d~(j) = (-1)^{j+k} D^{-j/2} binom(j, k) / (j! log a)
        let binom: f64 = {
            let mut acc = 1.0f64;
            for i in 0..k {
                acc *= (j - i) as f64 / (i + 1) as f64;
            }
            acc
        };
        let sign = if (j + k) % 2 == 0 { 1.0 } else { -1.0 };
        let d_tilde = sign * params.d.powf(-0.5 * j as f64) * binom / (factorial(j) * params.log_a);
        let falling = pochhammer(Complex64::new(-(l as f64), 0.0), j);
        res += d_tilde * falling * principal_power(z, Complex64::new((l - j) as f64, 0.0))?;
    }
    Ok(res)
}

/// Residue contribution of the single shifted lattice point
/// s = -l - k(1 - rho) + (2n + l_{Q,k}) pi i / log a (n must lie in A(k);
/// coinciding points contribute additively and are aggregated by
/// [`hurwitz_poles`]).
pub fn hurwitz_residue_at_lattice(
    params: &LucasParams,
    l: u32,
    k: u32,
    n: i64,
    z: Complex64,
    cfg: &EvalConfig,
) -> Result<Complex64> {
    validate_z(z)?;
    let class = classify_ratio(params, cfg);
    if !in_set_a(params, &class, k, n) {
        return Err(Error::IndexNotAdmissible { k, n });
    }
    let lq = params.l_index(k);
    let log_a = params.log_a;
    let ln_d = params.d.ln();
    let w = Complex64::new(
        params.rho * k as f64,
        (2 * n + lq as i64) as f64 * PI / log_a,
    );
    // C(k) = D^{(k/2)(rho-1)} e^{i lq pi ln D / (2 log a)} / (k! log a)
    let c_mag = params.d.powf(0.5 * k as f64 * (params.rho - 1.0)) / (factorial(k) * log_a);
    let c_phase = lq as f64 * PI * ln_d / (2.0 * log_a);
    let c_k = c_mag * Complex64::new(c_phase.cos(), c_phase.sin());
    let d_phase = n as f64 * PI * ln_d / log_a;
    let d_factor = Complex64::new(d_phase.cos(), d_phase.sin());
    let mut product = Complex64::new(1.0, 0.0);
    for j in 1..=(l + k) {
        product *= w - j as f64;
    }
    let sign = if l % 2 == 0 { 1.0 } else { -1.0 };
    let z_pow = principal_power(z, Complex64::new(l as f64, 0.0))?;
    Ok(c_k * d_factor * sign * z_pow * product / factorial(l))
}

/// All poles of zeta_U(., z) in `region`, with residues of coinciding
/// lattice points merged, sorted by (Re, Im). Aggregates whose residues
/// cancel below 1e-14 of their parts are dropped.
pub fn hurwitz_poles(
    params: &LucasParams,
    region: &Region,
    z: Complex64,
    cfg: &EvalConfig,
) -> Result<Vec<PoleSpec>> {
    validate_z(z)?;
    if region.re_min > region.re_max || region.im_min > region.im_max {
        return Err(Error::Domain("empty pole-search region".into()));
    }
    let class = classify_ratio(params, cfg);
    let gap = 1.0 - params.rho;
    let mut poles: Vec<(PoleSpec, f64)> = Vec::new(); // with sum of |parts|

    let mut add = |location: Complex64, residue: Complex64, origin: PoleOrigin| {
        for (p, parts) in poles.iter_mut() {
            if (p.location - location).norm() < 1e-9 {
                p.residue += residue;
                p.origins.push(origin);
                *parts += residue.norm();
                return;
            }
        }
        poles.push((
            PoleSpec {
                location,
                residue,
                origins: vec![origin],
            },
            residue.norm(),
        ));
    };

    // non-positive integer poles
    if region.im_min <= 0.0 && region.im_max >= 0.0 {
        let l_lo = (-region.re_max).ceil().max(0.0) as i64;
        let l_hi = (-region.re_min).floor() as i64;
        for l in l_lo..=l_hi.max(l_lo - 1) {
            if l < 0 {
                continue;
            }
            let location = Complex64::new(-(l as f64), 0.0);
            if location.re < region.re_min - 1e-12 || location.re > region.re_max + 1e-12 {
                continue;
            }
            let residue = hurwitz_residue_at_neg_int(params, l as u32, z, cfg)?;
            add(location, residue, PoleOrigin::NegInt { l: l as u32 });
        }
    }

    // shifted lattice poles
    let k_hi = (-region.re_min / gap).floor().max(0.0) as u64;
    if k_hi > cfg.k_max as u64 {
        return Err(Error::Domain(format!(
            "region needs lattice index k up to {k_hi}, cap is {}",
            cfg.k_max
        )));
    }
    for k in 0..=(k_hi as u32) {
        // snap -k(1 - rho) to the exact rational when one is known
        let re_k = match class.class {
            crate::lucas::RatioClass::Rational { num, den } => {
                -((k as u64 * (num + den) as u64) as f64) / den as f64
            }
            crate::lucas::RatioClass::PresumedIrrational => -(k as f64) * gap,
        };
        if re_k < region.re_min - 1e-12 {
            continue;
        }
        let lq = params.l_index(k) as i64;
        let lo = (region.im_min * params.log_a / PI - lq as f64) / 2.0;
        let hi = (region.im_max * params.log_a / PI - lq as f64) / 2.0;
        let n_lo = lo.ceil() as i64;
        let n_hi = hi.floor() as i64;
        if n_lo.abs().max(n_hi.abs()) > cfg.n_max as i64 {
            return Err(Error::Domain(format!(
                "region needs lattice index |n| beyond the cap {}",
                cfg.n_max
            )));
        }
        for n in n_lo..=n_hi {
            if !in_set_a(params, &class, k, n) {
                continue;
            }
            let im = (2 * n + lq) as f64 * PI / params.log_a;
            let l_hi_shift = (re_k - region.re_min).floor() as i64;
            for l in 0..=l_hi_shift.max(0) {
                let re = re_k - l as f64;
                if re < region.re_min - 1e-12 || re > region.re_max + 1e-12 {
                    continue;
                }
                let location = Complex64::new(re, im);
                let residue = hurwitz_residue_at_lattice(params, l as u32, k, n, z, cfg)?;
                add(
                    location,
                    residue,
                    PoleOrigin::ShiftedLattice { l: l as u32, k, n },
                );
            }
        }
    }

    let mut out: Vec<PoleSpec> = poles
        .into_iter()
        .filter(|(p, parts)| p.residue.norm() > 1e-14 * parts.max(1e-300))
        .map(|(p, _)| p)
        .collect();
    out.sort_by(|x, y| {
        (x.location.re, x.location.im)
            .partial_cmp(&(y.location.re, y.location.im))
            .unwrap()
    });
    Ok(out)
}

/// Closed-form residue of the geometric-sum shifted zeta (ratio r > 1)
/// at the non-positive integer -l: (z - 1/(r-1))^l / log r.
pub fn geometric_neg_residue(ratio: f64, l: u32, z: Complex64) -> Result<Complex64> {
    if !(ratio > 1.0) {
        return Err(Error::Domain(format!(
            "geometric-sum ratio must exceed 1, got {ratio}"
        )));
    }
    validate_z(z)?;
    let shifted = z - 1.0 / (ratio - 1.0);
    let mut acc = Complex64::new(1.0, 0.0);
    for _ in 0..l {
        acc *= shifted;
    }
    Ok(acc / ratio.ln())
}

/// Closed-form aggregated residue of the geometric-sum shifted zeta at
/// s = -m + 2 n pi i / log r (n != 0): all lattice pairs (l, k) with
/// l + k = m coincide there and their residues sum to
///
///   D^{n pi i / log r} (1/(r-1) - z)^m / (m! log r) *
///   prod_{j=1}^m (w - j),   w = 2 n pi i / log r.
pub fn geometric_lattice_residue(ratio: f64, m: u32, n: i64, z: Complex64) -> Result<Complex64> {
    if !(ratio > 1.0) {
        return Err(Error::Domain(format!(
            "geometric-sum ratio must exceed 1, got {ratio}"
        )));
    }
    if n == 0 {
        return Err(Error::IndexNotAdmissible { k: m, n });
    }
    validate_z(z)?;
    let log_r = ratio.ln();
    let w = Complex64::new(0.0, 2.0 * n as f64 * PI / log_r);
    let mut product = Complex64::new(1.0, 0.0);
    for j in 1..=m {
        product *= w - j as f64;
    }
    let base = Complex64::new(1.0 / (ratio - 1.0), 0.0) - z;
    let mut base_pow = Complex64::new(1.0, 0.0);
    for _ in 0..m {
        base_pow *= base;
    }
    // D = (r-1)^2, so D^{n pi i / log r} = e^{2 n pi i ln(r-1) / log r}
    let phase = 2.0 * n as f64 * PI * (ratio - 1.0).ln() / log_r;
    let d_factor = Complex64::new(phase.cos(), phase.sin());
    Ok(d_factor * base_pow * product / (factorial(m) * log_r))
}

/// The degenerate Q = 0 family U_n = a^{n-1} (pure powers of a > 1),
/// whose zeta and shifted zeta have fully explicit continuations used as
/// an independent cross-check suite. Sums run over n >= 1.
#[derive(Debug, Clone, Copy)]
pub struct GeometricPowers {
    pub a: f64,
    pub log_a: f64,
}

impl GeometricPowers {
    pub fn new(a: f64) -> Result<Self> {
        if !(a > 1.0) {
            return Err(Error::Domain(format!(
                "pure-power base must exceed 1, got {a}"
            )));
        }
        Ok(GeometricPowers { a, log_a: a.ln() })
    }

    /// U_n = a^{n-1} for n >= 1.
    pub fn u(&self, n: u32) -> f64 {
        self.a.powi(n as i32 - 1)
    }

    /// Closed form sum_{n>=1} U_n^{-s} = 1 / (1 - a^{-s}), all s off the
    /// lattice 2 k pi i / log a.
    pub fn zeta_closed(&self, s: Complex64, cfg: &EvalConfig) -> Result<Complex64> {
        let q = (-s * self.log_a).exp();
        let dist = if q.norm() > 0.25 && q.norm() < 4.0 {
            q.ln().norm() / self.log_a
        } else {
            f64::INFINITY
        };
        if dist < cfg.delta_pole {
            return Err(Error::NearPole { s, distance: dist });
        }
        Ok(1.0 / (Complex64::new(1.0, 0.0) - q))
    }

    /// Direct series, Re(s) >= cfg.sigma_min.
    pub fn zeta_direct(&self, s: Complex64, cfg: &EvalConfig) -> Result<Complex64> {
        if s.re < cfg.sigma_min {
            return Err(Error::Domain(format!(
                "direct series needs Re(s) >= {}, got Re(s) = {}",
                cfg.sigma_min, s.re
            )));
        }
        let mut acc = Complex64::new(0.0, 0.0);
        let ratio = (-s.re * self.log_a).exp();
        for n in 1..=100_000u32 {
            let term = principal_power(Complex64::new(self.u(n), 0.0), -s)?;
            acc += term;
            if n >= 4 && term.norm() * ratio / (1.0 - ratio) <= cfg.eps_series * acc.norm() {
                return Ok(acc);
            }
        }
        Err(Error::NonConvergence {
            context: "pure-power zeta series",
        })
    }

    /// Direct shifted series sum_{n>=1} (z + a^{n-1})^{-s}.
    pub fn hurwitz_direct(
        &self,
        s: Complex64,
        z: Complex64,
        cfg: &EvalConfig,
    ) -> Result<Complex64> {
        validate_z(z)?;
        if s.re < cfg.sigma_min {
            return Err(Error::Domain(format!(
                "direct series needs Re(s) >= {}, got Re(s) = {}",
                cfg.sigma_min, s.re
            )));
        }
        let mut acc = Complex64::new(0.0, 0.0);
        let ratio = (-s.re * self.log_a).exp();
        for n in 1..=100_000u32 {
            let term = principal_power(z + self.u(n), -s)?;
            acc += term;
            if n >= 8 && term.norm() * ratio / (1.0 - ratio) <= cfg.eps_series * acc.norm() {
                return Ok(acc);
            }
        }
        Err(Error::NonConvergence {
            context: "pure-power shifted series",
        })
    }

    /// Analytic continuation of the shifted series by a binomial tail:
    /// the head keeps n < N, the tail expands (z + a^{n-1})^{-s} in powers
    /// of z a^{-(n-1)} and re-sums each power as the closed geometric form
    /// T(w) = a^{-J w} / (1 - a^{-w}), J the first tail exponent.
    pub fn hurwitz_binomial(
        &self,
        s: Complex64,
        z: Complex64,
        cfg: &EvalConfig,
    ) -> Result<Complex64> {
        validate_z(z)?;
        // head until a^{n-1} >= 2 (|z| + 1)
        let cut = 2.0 * (z.norm() + 1.0);
        let j_start = (cut.ln() / self.log_a).ceil().max(1.0) as u32;
        let mut acc = Complex64::new(0.0, 0.0);
        for n in 1..=j_start {
            acc += principal_power(z + self.u(n), -s)?;
        }
        // tail: sum_{j >= J} (z + a^j)^{-s}, J = j_start
        let j_big = j_start as f64;
        let mut binom = Complex64::new(1.0, 0.0);
        let mut z_pow = Complex64::new(1.0, 0.0);
        for m in 0..cfg.k_max {
            if m > 0 {
                binom *= (-s - (m - 1) as f64) / m as f64;
                z_pow *= z;
            }
            let w = s + m as f64;
            let q = (-w * self.log_a).exp();
            let dist = if q.norm() > 0.25 && q.norm() < 4.0 {
                q.ln().norm() / self.log_a
            } else {
                f64::INFINITY
            };
            if dist < cfg.delta_pole {
                return Err(Error::NearPole { s, distance: dist });
            }
            let t_closed = (-w * j_big * self.log_a).exp() / (Complex64::new(1.0, 0.0) - q);
            let term = binom * z_pow * t_closed;
            acc += term;
            if m >= 4 && term.norm() <= cfg.eps_series * acc.norm().max(1e-30) {
                return Ok(acc);
            }
        }
        Err(Error::NonConvergence {
            context: "pure-power binomial tail",
        })
    }

    /// Residue of the continued shifted series at s = -l + 2 k pi i/log a:
    /// (-z)^l / (l! log a) * prod_{j=1}^l (2 k pi i / log a - j);
    /// k = 0 reduces to z^l / log a.
    pub fn residue_at_lattice(&self, l: u32, k: i64, z: Complex64) -> Result<Complex64> {
        validate_z(z)?;
        let w = Complex64::new(0.0, 2.0 * k as f64 * PI / self.log_a);
        let mut product = Complex64::new(1.0, 0.0);
        for j in 1..=l {
            product *= w - j as f64;
        }
        let mut neg_z_pow = Complex64::new(1.0, 0.0);
        for _ in 0..l {
            neg_z_pow *= -z;
        }
        Ok(neg_z_pow * product / (factorial(l) * self.log_a))
    }
}
