//! Reduced-scale self-check suites behind the `verify` subcommand.
//!
//! Each suite reruns a slice of the cross-validation done by the
//! integration tests: independent evaluation routes (direct summation,
//! meromorphic continuation, closed forms, contour integrals) must agree
//! to stated tolerances on fixed sample points. The suites are small
//! enough to finish in well under a second each.

use lucas_zeta::hurwitz::{
    geometric_lattice_residue, geometric_neg_residue, hurwitz_continued, hurwitz_direct,
    hurwitz_poles, hurwitz_residue_at_neg_int, GeometricPowers,
};
use lucas_zeta::lucas::{classify_ratio, LucasParams};
use lucas_zeta::oracle::zeta_residue_contour;
use lucas_zeta::special::multinomial;
use lucas_zeta::theta::{build_expansion, expansion_error_order};
use lucas_zeta::zeta::{
    classify_neg_int_poles, laurent_at_zero, residue_at_neg_int, zeta_continued, zeta_direct,
    Region,
};
use lucas_zeta::EvalConfig;
use num_complex::Complex64;
use std::f64::consts::PI;

use crate::Suite;

/// Outcome of one named check.
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Builds a check from a worst observed deviation against an upper bound.
fn bounded(name: &str, worst: Result<f64, lucas_zeta::Error>, bound: f64) -> Check {
    match worst {
        Ok(worst) => Check {
            name: name.into(),
            passed: worst <= bound,
            detail: format!("worst {worst:.2e}, bound {bound:.0e}"),
        },
        Err(e) => Check {
            name: name.into(),
            passed: false,
            detail: format!("evaluation failed: {e}"),
        },
    }
}

/// Builds a check from a measured slope against a lower bound.
fn slope_at_least(name: &str, slope: Result<f64, lucas_zeta::Error>, bound: f64) -> Check {
    match slope {
        Ok(slope) => Check {
            name: name.into(),
            passed: slope >= bound,
            detail: format!("slope {slope:.2}, need >= {bound:.2}"),
        },
        Err(e) => Check {
            name: name.into(),
            passed: false,
            detail: format!("evaluation failed: {e}"),
        },
    }
}

fn presets() -> Vec<(&'static str, LucasParams)> {
    vec![
        ("fibonacci", LucasParams::fibonacci()),
        ("pell", LucasParams::pell()),
        ("jacobsthal", LucasParams::jacobsthal()),
        (
            "geomsum:2",
            LucasParams::geometric_sum(2.0).expect("ratio 2 is admissible"),
        ),
    ]
}

pub fn run(suite: Suite, cfg: &EvalConfig) -> Vec<Check> {
    let mut checks = Vec::new();
    if matches!(suite, Suite::Overlap | Suite::All) {
        suite_overlap(cfg, &mut checks);
    }
    if matches!(suite, Suite::Residues | Suite::All) {
        suite_residues(cfg, &mut checks);
    }
    if matches!(suite, Suite::ThetaOrder | Suite::All) {
        suite_theta_order(cfg, &mut checks);
    }
    if matches!(suite, Suite::Examples | Suite::All) {
        suite_examples(cfg, &mut checks);
    }
    checks
}

/// Direct summation and the continuation must agree where both converge.
fn suite_overlap(cfg: &EvalConfig, checks: &mut Vec<Check>) {
    for (label, params) in presets() {
        let worst = (|| {
            let mut worst = 0.0f64;
            for re in [0.75, 2.0] {
                for im in [0.0, 2.0] {
                    let s = c(re, im);
                    let direct = zeta_direct(&params, s, cfg)?;
                    let continued = zeta_continued(&params, s, cfg)?;
                    worst = worst.max((direct - continued).norm() / (1.0 + direct.norm()));
                }
            }
            Ok(worst)
        })();
        checks.push(bounded(&format!("overlap/zeta {label}"), worst, 1e-8));
    }
    for (label, params) in presets() {
        let worst = (|| {
            let mut worst = 0.0f64;
            let s = c(1.5, 0.0);
            for z in [c(1.0, 0.0), c(2.0, 1.0)] {
                let direct = hurwitz_direct(&params, s, z, cfg)?;
                let continued = hurwitz_continued(&params, s, z, None, cfg)?;
                worst = worst.max((direct - continued).norm() / (1.0 + direct.norm()));
            }
            Ok(worst)
        })();
        checks.push(bounded(&format!("overlap/hurwitz {label}"), worst, 1e-6));
    }
}

/// Residues from closed forms must match contour integrals around the
/// poles, evaluated on the continuation alone.
fn suite_residues(cfg: &EvalConfig, checks: &mut Vec<Check>) {
    // residue at s = 0 is 1 / log a
    let fib = LucasParams::fibonacci();
    let at_zero = zeta_residue_contour(&fib, c(0.0, 0.0), 0.3, 1e-9, cfg)
        .map(|r| (r - laurent_at_zero(&fib).0).norm());
    checks.push(bounded("residues/zeta fibonacci s=0", at_zero, 1e-6));

    // negative-integer poles, with the colliding index k taken from the
    // lattice classification
    for (label, params) in [
        ("fibonacci", LucasParams::fibonacci()),
        ("jacobsthal", LucasParams::jacobsthal()),
        (
            "geomsum:2",
            LucasParams::geometric_sum(2.0).expect("ratio 2 is admissible"),
        ),
    ] {
        let class = classify_ratio(&params, cfg);
        let pole = classify_neg_int_poles(&params, &class, 12)
            .into_iter()
            .next();
        let worst = match pole {
            Some(pole) => zeta_residue_contour(&params, c(-(pole.l as f64), 0.0), 0.3, 1e-9, cfg)
                .map(|r| (r - residue_at_neg_int(&params, pole.l, pole.k)).norm()),
            None => Err(lucas_zeta::Error::Domain(
                "no negative-integer pole found".into(),
            )),
        };
        checks.push(bounded(
            &format!("residues/zeta {label} first negative pole"),
            worst,
            1e-6,
        ));
    }

    // shifted zeta: generic residue algebra vs the geometric closed form
    let worst = hurwitz_residue_at_neg_int(
        &LucasParams::geometric_sum(2.0).expect("ratio 2 is admissible"),
        2,
        c(2.0, 0.0),
        cfg,
    )
    .and_then(|generic| {
        let closed = geometric_neg_residue(2.0, 2, c(2.0, 0.0))?;
        Ok((generic - closed).norm() / (1.0 + closed.norm()))
    });
    checks.push(bounded("residues/hurwitz geomsum:2 at -2", worst, 1e-12));
}

/// The theta remainder theta_U - alpha_m must vanish like t^(2m + c0 - 1/2)
/// up to oscillation: fitted log-log slopes clear 2m + 0.3.
fn suite_theta_order(cfg: &EvalConfig, checks: &mut Vec<Check>) {
    let fib = LucasParams::fibonacci();
    for (m, t_lo) in [(1u32, 1e-3), (2u32, 1e-2)] {
        let slope = build_expansion(&fib, m, cfg)
            .and_then(|exp| expansion_error_order(&fib, &exp, t_lo, 1e-1, 25, cfg));
        checks.push(slope_at_least(
            &format!("theta-order/fibonacci m={m}"),
            slope,
            2.0 * m as f64 + 0.3,
        ));
    }
}

/// Named sequences where everything is known in closed form.
fn suite_examples(cfg: &EvalConfig, checks: &mut Vec<Check>) {
    // zeta_F(-1) = -1
    let fib = LucasParams::fibonacci();
    let worst = zeta_continued(&fib, c(-1.0, 0.0), cfg).map(|v| (v - c(-1.0, 0.0)).norm());
    checks.push(bounded("examples/fibonacci zeta(-1) = -1", worst, 1e-10));

    // geometric sums: generic residue algebra vs (z - 1/(r-1))^l / log r
    let geo = LucasParams::geometric_sum(2.0).expect("ratio 2 is admissible");
    let worst = (|| {
        let mut worst = 0.0f64;
        for l in 0..=6u32 {
            for z in [c(1.0, 0.0), c(2.0, 0.0)] {
                let generic = hurwitz_residue_at_neg_int(&geo, l, z, cfg)?;
                let closed = geometric_neg_residue(2.0, l, z)?;
                worst = worst.max((generic - closed).norm() / (1.0 + closed.norm()));
            }
        }
        Ok(worst)
    })();
    checks.push(bounded(
        "examples/geomsum:2 negative-integer residues",
        worst,
        1e-12,
    ));

    // fibonacci: generic residue algebra vs the multinomial closed form
    // res(-l) = (1/log phi) sum_j multinomial(l; l-4j, 2j, 2j) 5^{-2j} z^{l-4j}
    let worst = (|| {
        let mut worst = 0.0f64;
        for l in 0..=6u32 {
            for z in [c(1.0, 0.0), c(1.0, 1.0)] {
                let generic = hurwitz_residue_at_neg_int(&fib, l, z, cfg)?;
                let mut closed = Complex64::new(0.0, 0.0);
                let mut j = 0u32;
                while 4 * j <= l {
                    let coeff = multinomial(l, j)? * 5.0f64.powi(-2 * (j as i32));
                    closed += coeff * z.powi((l - 4 * j) as i32);
                    j += 1;
                }
                closed /= fib.log_a;
                worst = worst.max((generic - closed).norm() / (1.0 + closed.norm()));
            }
        }
        Ok(worst)
    })();
    checks.push(bounded(
        "examples/fibonacci multinomial residues",
        worst,
        1e-12,
    ));

    // geometric sums: aggregated lattice residues at -m + 2 pi i / log 2
    let worst = (|| {
        let mut worst = 0.0f64;
        let z = c(1.5, 0.0);
        let im = 2.0 * PI / 2.0f64.ln();
        for m in 0..=1u32 {
            let region = Region {
                re_min: -(m as f64) - 0.25,
                re_max: -(m as f64) + 0.25,
                im_min: im - 0.25,
                im_max: im + 0.25,
            };
            let poles = hurwitz_poles(&geo, &region, z, cfg)?;
            if poles.len() != 1 {
                return Err(lucas_zeta::Error::Domain(format!(
                    "expected one aggregated pole, found {}",
                    poles.len()
                )));
            }
            let closed = geometric_lattice_residue(2.0, m, 1, z)?;
            worst = worst.max((poles[0].residue - closed).norm() / (1.0 + closed.norm()));
        }
        Ok(worst)
    })();
    checks.push(bounded("examples/geomsum:2 lattice residues", worst, 1e-10));

    // pure powers: closed form vs direct summation
    let q0 = GeometricPowers::new(2.0).expect("base 2 exceeds 1");
    let worst = (|| {
        let mut worst = 0.0f64;
        for s in [c(2.0, 0.0), c(1.0, 2.0)] {
            let closed = q0.zeta_closed(s, cfg)?;
            let direct = q0.zeta_direct(s, cfg)?;
            worst = worst.max((closed - direct).norm());
        }
        Ok(worst)
    })();
    checks.push(bounded("examples/q0:2 closed vs direct", worst, 1e-10));
}
