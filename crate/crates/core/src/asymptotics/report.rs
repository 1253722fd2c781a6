use std::fmt;

use serde::{Deserialize, Serialize};

use super::{
    branching_coeffs, c_star, c_tilde, core_fractions, core_plus_fraction,
    orientable_fraction_limit, xi_star, xi_tilde,
};
use crate::error::Result;

/// All limit quantities at one `q`, and optionally one `c`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThresholdReport {
    pub q: f64,
    pub c: Option<f64>,
    /// Only defined for `q > 1/2`.
    pub xi_star: Option<f64>,
    pub c_star: f64,
    pub c_tilde: f64,
    pub xi_tilde: Option<f64>,
    pub core_n1_frac: Option<f64>,
    pub core_n2_frac: Option<f64>,
    pub core_halfedge_frac: Option<f64>,
    pub core_plus_frac: Option<f64>,
    pub orientable_limit: Option<f64>,
    /// Set when `c` sits exactly on the core threshold for `q > 1/2`, where
    /// the reported core is the one just above it.
    pub at_core_threshold: bool,
    pub p12: Option<f64>,
    pub p23: Option<f64>,
}

impl ThresholdReport {
    pub fn new(q: f64, c: Option<f64>) -> Result<Self> {
        let c_star = c_star(q)?;
        let c_tilde = c_tilde(q)?;
        let mut report = ThresholdReport {
            q,
            c,
            xi_star: if q > 0.5 { Some(xi_star(q)?) } else { None },
            c_star,
            c_tilde,
            xi_tilde: None,
            core_n1_frac: None,
            core_n2_frac: None,
            core_halfedge_frac: None,
            core_plus_frac: None,
            orientable_limit: None,
            at_core_threshold: false,
            p12: None,
            p23: None,
        };
        if let Some(c) = c {
            let xi = xi_tilde(q, c)?;
            let core = core_fractions(q, c)?;
            report.xi_tilde = Some(xi);
            report.core_n1_frac = Some(core.n1);
            report.core_n2_frac = Some(core.n2);
            report.core_halfedge_frac = Some(core.half_edges);
            report.core_plus_frac = Some(core_plus_fraction(q, c)?);
            report.orientable_limit = Some(orientable_fraction_limit(q, c)?);
            report.at_core_threshold = q > 0.5 && c == c_tilde;
            if xi > 0.0 {
                let (p12, p23) = branching_coeffs(q, c)?;
                report.p12 = Some(p12);
                report.p23 = Some(p23);
            }
        }
        Ok(report)
    }

    /// Single-line JSON record.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

impl fmt::Display for ThresholdReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut row = |name: &str, value: Option<f64>| -> fmt::Result {
            match value {
                Some(v) => writeln!(f, "{name:<20}{v:.10}"),
                None => writeln!(f, "{name:<20}-"),
            }
        };
        row("q", Some(self.q))?;
        row("xi_star", self.xi_star)?;
        row("c_star", Some(self.c_star))?;
        row("c_tilde", Some(self.c_tilde))?;
        if self.c.is_none() {
            return Ok(());
        }
        row("c", self.c)?;
        row("xi_tilde", self.xi_tilde)?;
        row("core_n1_frac", self.core_n1_frac)?;
        row("core_n2_frac", self.core_n2_frac)?;
        row("core_halfedge_frac", self.core_halfedge_frac)?;
        row("core_plus_frac", self.core_plus_frac)?;
        row("orientable_limit", self.orientable_limit)?;
        row("p12", self.p12)?;
        row("p23", self.p23)?;
        if self.at_core_threshold {
            writeln!(
                f,
                "note: c equals c_tilde; core values are the ones just above it"
            )?;
        }
        Ok(())
    }
}
