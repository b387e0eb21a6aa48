//! Evaluation configuration: every tolerance and cap used by the crate,
//! in one place with documented defaults.

/// Tunable tolerances and caps threaded through all evaluators.
#[derive(Debug, Clone, Copy)]
pub struct EvalConfig {
    /// Relative cutoff for series termination.
    pub eps_series: f64,
    /// Absolute tolerance requested from adaptive quadrature.
    pub eps_quad: f64,
    /// Acceptance window for continued-fraction rational detection.
    pub eps_rat: f64,
    /// Largest denominator tried when classifying the root ratio.
    pub q_max: u32,
    /// Cap on continuation terms (index k).
    pub k_max: u32,
    /// Cap on lattice indices |n| in amplitude tables.
    pub n_max: u32,
    /// Guard distance to poles; evaluation closer than this errors out.
    pub delta_pole: f64,
    /// Default expansion order for the theta asymptotic series.
    pub m_default: u32,
    /// Fractional offset of the truncation line (nudged off poles).
    pub c0: f64,
    /// Smallest Re(s) accepted by direct summation.
    pub sigma_min: f64,
    /// Start the sequence at 1 instead of 0 (alternative convention).
    ///
    /// The default convention U_0 = 0 is the one consistent with the
    /// continuation identities; setting this demonstrates how the
    /// alternative shifts theta by e^{-t} - 1 and every Hurwitz value by
    /// (z+1)^{-s} - z^{-s} while leaving poles and residues unchanged.
    pub u0_one: bool,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig {
            eps_series: 1e-14,
            eps_quad: 1e-10,
            eps_rat: 1e-10,
            q_max: 64,
            k_max: 200,
            n_max: 200,
            delta_pole: 1e-6,
            m_default: 2,
            c0: 0.5,
            sigma_min: 0.05,
            u0_one: false,
        }
    }
}

impl EvalConfig {
    /// Apply a single `key=value` override; unknown keys are rejected.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), String> {
        fn parse_f64(v: &str) -> Result<f64, String> {
            v.parse::<f64>()
                .map_err(|e| format!("bad float {v:?}: {e}"))
        }
        fn parse_u32(v: &str) -> Result<u32, String> {
            v.parse::<u32>()
                .map_err(|e| format!("bad integer {v:?}: {e}"))
        }
        match key {
            "eps_series" => self.eps_series = parse_f64(value)?,
            "eps_quad" => self.eps_quad = parse_f64(value)?,
            "eps_rat" => self.eps_rat = parse_f64(value)?,
            "q_max" => self.q_max = parse_u32(value)?,
            "k_max" => self.k_max = parse_u32(value)?,
            "n_max" => self.n_max = parse_u32(value)?,
            "delta_pole" => self.delta_pole = parse_f64(value)?,
            "m_default" => self.m_default = parse_u32(value)?,
            "c0" => self.c0 = parse_f64(value)?,
            "sigma_min" => self.sigma_min = parse_f64(value)?,
            "u0_one" => {
                self.u0_one = value
                    .parse::<bool>()
                    .map_err(|e| format!("bad bool {value:?}: {e}"))?
            }
            _ => return Err(format!("unknown config key {key:?}")),
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_documented_values() {
        let c = EvalConfig::default();
        assert_eq!(c.eps_series, 1e-14);
        assert_eq!(c.eps_quad, 1e-10);
        assert_eq!(c.eps_rat, 1e-10);
        assert_eq!(c.q_max, 64);
        assert_eq!(c.k_max, 200);
        assert_eq!(c.n_max, 200);
        assert_eq!(c.delta_pole, 1e-6);
        assert_eq!(c.m_default, 2);
        assert_eq!(c.c0, 0.5);
        assert_eq!(c.sigma_min, 0.05);
        assert!(!c.u0_one);
    }

    #[test]
    fn set_overrides_and_rejects_unknown_keys() {
        let mut c = EvalConfig::default();
        c.set("eps_quad", "1e-12").unwrap();
        c.set("q_max", "32").unwrap();
        c.set("u0_one", "true").unwrap();
        assert_eq!(c.eps_quad, 1e-12);
        assert_eq!(c.q_max, 32);
        assert!(c.u0_one);
        assert!(c.set("nope", "1").is_err());
        assert!(c.set("eps_quad", "abc").is_err());
    }
}
