//! Flat `key=value` rendering of uncertainty-principle results.
//!
//! Floats use shortest round-trip digits (scientific notation outside
//! `[1e-4, 1e16)`), `inf` marks an infinite value, and `overflow` stands
//! in for a Gaussian weight that does not fit in binary64 on the sampled
//! window.

use std::fmt::Write as _;

use hqft_core::{NestedSeries, Regime, UpReport, WindowValue};

struct Num(f64);

impl std::fmt::Display for Num {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let a = self.0.abs();
        if a == 0.0 || !a.is_finite() || (1e-4..1e16).contains(&a) {
            write!(f, "{}", self.0)
        } else {
            write!(f, "{:e}", self.0)
        }
    }
}

struct Block(String);

impl Block {
    fn kv(&mut self, key: &str, value: impl std::fmt::Display) {
        writeln!(self.0, "{key}={value}").unwrap();
    }

    fn num(&mut self, key: &str, value: f64) {
        self.kv(key, Num(value));
    }

    fn window(&mut self, prefix: &str, w: &WindowValue) {
        self.num(prefix, w.value);
        self.num(&format!("{prefix}_tail"), w.tail_estimate);
        self.kv(&format!("{prefix}_divergent"), w.divergent);
    }
}

pub fn classification(alpha: f64, beta: f64, regime: Regime) -> String {
    let mut b = Block(String::new());
    b.num("alpha", alpha);
    b.num("beta", beta);
    b.num("alpha_beta", alpha * beta);
    b.kv("regime", regime);
    b.kv("conclusion", regime.conclusion());
    b.0
}

/// The report block; `signal` names the input when known.
pub fn render(report: &UpReport, nested: Option<&NestedSeries>, signal: Option<&str>) -> String {
    let mut b = Block(String::new());
    let p = &report.params;
    if let Some(s) = signal {
        b.kv("signal", s);
    }
    b.num("alpha", p.alpha);
    b.num("beta", p.beta);
    b.num("rho", p.rho);
    b.num("p", p.p);
    b.num("q", p.q);
    b.kv("regime", report.regime);
    b.kv("conclusion", report.regime.conclusion());
    b.num("miyachi_value", report.miyachi.value);
    b.num("tail_estimate", report.miyachi.tail_estimate);
    b.kv("miyachi_divergent", report.miyachi.divergent);
    match &report.hardy {
        Ok(h) => {
            b.num("hardy_sup_spatial", h.c_spatial);
            b.num("hardy_sup_frequency", h.c_frequency);
            b.kv("hardy_spatial_growing", h.spatial_growing);
            b.kv("hardy_frequency_growing", h.frequency_growing);
        }
        Err(_) => {
            b.kv("hardy_sup_spatial", "overflow");
            b.kv("hardy_sup_frequency", "overflow");
        }
    }
    match &report.cowling_price {
        Ok(cp) => {
            b.window("cp_spatial", &cp.spatial);
            b.window("cp_frequency", &cp.frequency);
        }
        Err(_) => {
            b.kv("cp_spatial", "overflow");
            b.kv("cp_frequency", "overflow");
        }
    }
    if let Some(series) = nested {
        b.kv("nested_levels", series.points.len());
        for (i, pt) in series.points.iter().enumerate() {
            b.num(&format!("nested_extent_{i}"), pt.extent);
            b.num(&format!("nested_value_{i}"), pt.value.value);
            b.kv(&format!("nested_divergent_{i}"), pt.value.divergent);
        }
        b.kv("nested_verdict", series.verdict.as_str());
    }
    b.0
}

/// Two-column `extent value` text for plotting.
pub fn plot_data(series: &NestedSeries) -> String {
    let mut out = String::from("# extent miyachi_value\n");
    for pt in &series.points {
        writeln!(out, "{} {}", Num(pt.extent), Num(pt.value.value)).unwrap();
    }
    out
}
