//! Complex special functions: principal powers, gamma, digamma,
//! Pochhammer symbols, generalized binomials, harmonic numbers and the
//! four-index multinomial used by the Fibonacci residue closed form.
//!
//! Gamma uses a fixed-coefficient Lanczos approximation (g = 607/128,
//! 15 terms) valid for Re(s) >= 0.5, extended by the reflection formula
//! Gamma(s) Gamma(1-s) = pi / sin(pi s). Relative accuracy is ~1e-13
//! across |s| <= 50, which every caller in this crate tolerates.
//!
//! Digamma raises the argument by the recurrence psi(s) = psi(s+1) - 1/s
//! until Re(s) >= 10, then applies the asymptotic series
//! psi(s) ~ ln s - 1/(2s) - sum B_{2n} / (2n s^{2n}).

use crate::error::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Pole guard: arguments within this distance of a non-positive integer
/// are rejected rather than evaluated.
pub const EPS_POLE: f64 = 1e-8;

const LANCZOS_G: f64 = 4.7421875; // 607/128
const LANCZOS_C: [f64; 15] = [
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
];

/// Euler-Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.5772156649015328606;

fn near_nonpositive_integer(s: Complex64) -> bool {
    if s.re > 0.5 {
        return false;
    }
    let nearest = s.re.round();
    nearest <= 0.0 && (s - Complex64::new(nearest, 0.0)).norm() < EPS_POLE
}

/// Principal power base^exponent, base cut along (-inf, 0].
///
/// Hand-rolled through ln/atan2/exp so the brute-force oracles can use an
/// independent power routine.
pub fn principal_power(base: Complex64, exponent: Complex64) -> Result<Complex64> {
    if base.im == 0.0 && base.re <= 0.0 {
        return Err(Error::Domain(format!(
            "principal power undefined on the cut (-inf, 0]: base = {base}"
        )));
    }
    if exponent == Complex64::new(0.0, 0.0) {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let log_r = base.norm().ln();
    let theta = base.im.atan2(base.re); // in (-pi, pi) off the cut
    let w = exponent * Complex64::new(log_r, theta);
    let mag = w.re.exp();
    Ok(Complex64::new(mag * w.im.cos(), mag * w.im.sin()))
}

/// Gamma function on the complex plane, poles at 0, -1, -2, ... rejected.
pub fn gamma(s: Complex64) -> Result<Complex64> {
    if near_nonpositive_integer(s) {
        return Err(Error::GammaPole { s });
    }
    if s.re < 0.5 {
        // Reflection: Gamma(s) = pi / (sin(pi s) Gamma(1 - s)).
        let sin_pi_s = (PI * s).sin();
        let g = gamma(Complex64::new(1.0, 0.0) - s)?;
        return Ok(PI / (sin_pi_s * g));
    }
    let z = s - 1.0;
    let mut acc = Complex64::new(LANCZOS_C[0], 0.0);
    for (i, c) in LANCZOS_C.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    // t stays right of the cut: Re(t) >= 0.5 - 1 + g + 0.5 > 4.
    let p = (t.ln() * (z + 0.5) - t).exp();
    Ok((2.0 * PI).sqrt() * p * acc)
}

/// Digamma function psi = Gamma'/Gamma, poles at 0, -1, -2, ... rejected.
pub fn digamma(s: Complex64) -> Result<Complex64> {
    if near_nonpositive_integer(s) {
        return Err(Error::GammaPole { s });
    }
    let mut acc = Complex64::new(0.0, 0.0);
    let mut w = s;
    while w.re < 10.0 {
        acc -= 1.0 / w;
        w += 1.0;
    }
    // Asymptotic series, |w| >= 10: next omitted term is ~4e-17.
    // Coefficients are B_{2n}/(2n).
    const TAIL: [f64; 7] = [
        1.0 / 12.0,
        -1.0 / 120.0,
        1.0 / 252.0,
        -1.0 / 240.0,
        1.0 / 132.0,
        -691.0 / 32760.0,
        1.0 / 12.0,
    ];
    let inv2 = 1.0 / (w * w);
    let mut series = Complex64::new(0.0, 0.0);
    let mut power = inv2;
    for c in TAIL {
        series += c * power;
        power *= inv2;
    }
    Ok(acc + w.ln() - 0.5 / w - series)
}

/// Rising factorial (s)_k = s (s+1) ... (s+k-1); empty product for k = 0.
pub fn pochhammer(s: Complex64, k: u32) -> Complex64 {
    let mut acc = Complex64::new(1.0, 0.0);
    for j in 0..k {
        acc *= s + j as f64;
    }
    acc
}

/// Generalized binomial binom(s, k) = s (s-1) ... (s-k+1) / k!.
///
/// Computed as a running product of (s - j)/(j + 1) so it neither
/// overflows for large k nor loses the exact zero when s is an integer
/// in {0, ..., k-1}.
pub fn binom_general(s: Complex64, k: u32) -> Complex64 {
    let mut acc = Complex64::new(1.0, 0.0);
    for j in 0..k {
        acc *= (s - j as f64) / (j + 1) as f64;
    }
    acc
}

/// Harmonic number H_n = 1 + 1/2 + ... + 1/n, H_0 = 0.
pub fn harmonic(n: u32) -> f64 {
    (1..=n).map(|j| 1.0 / j as f64).sum()
}

/// Multinomial l! / ((2j)! (2j)! (l - 4j)!), defined for 4j <= l.
///
/// Computed as binom(l, 4j) * binom(4j, 2j) to stay inside exact-integer
/// f64 range for every l <= 60 used in practice.
pub fn multinomial(l: u32, j: u32) -> Result<f64> {
    if 4 * j > l {
        return Err(Error::Domain(format!(
            "multinomial requires 4j <= l, got l = {l}, j = {j}"
        )));
    }
    fn binom_u(n: u32, k: u32) -> f64 {
        let mut acc = 1.0f64;
        for i in 0..k {
            acc *= (n - i) as f64 / (i + 1) as f64;
        }
        acc
    }
    Ok(binom_u(l, 4 * j) * binom_u(4 * j, 2 * j))
}
