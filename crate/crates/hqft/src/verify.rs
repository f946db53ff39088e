//! Built-in invariant suites behind `hqft verify`.
//!
//! Every suite runs fixed signals (random ones from a seeded generator) and
//! reports the largest residual per check next to its tolerance.

use std::f64::consts::PI;
use std::fmt;

use hqft_core::{
    check_scaling, iqft, qft_direct, qft_fast, verify_envelope, AnalyticSignal, Grid2D, Polynomial2, QField, Quaternion,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SUITES: [&str; 6] = ["inverse", "scaling", "gaussian", "envelope", "oracle", "transfer"];

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub label: String,
    pub residual: f64,
    pub tolerance: f64,
}

impl Check {
    fn new(label: impl Into<String>, residual: f64, tolerance: f64) -> Self {
        Check { label: label.into(), residual, tolerance }
    }

    pub fn passed(&self) -> bool {
        // NaN fails
        self.residual <= self.tolerance
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn max_residual(&self) -> f64 {
        self.checks.iter().map(|c| c.residual).fold(0.0, f64::max)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = if c.passed() { "ok" } else { "FAIL" };
            writeln!(f, "{} {}: residual={:.3e} tol={:.0e} {tag}", self.suite, c.label, c.residual, c.tolerance)?;
        }
        let tag = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(f, "{}: max_residual={:.3e} {tag}", self.suite, self.max_residual())
    }
}

#[derive(Debug, thiserror::Error)]
#[error("unknown suite `{0}` (expected one of inverse, scaling, gaussian, envelope, oracle, transfer, all)")]
pub struct UnknownSuite(pub String);

/// Runs one suite by name, or all of them for `all`.
pub fn run(name: &str) -> Result<Vec<SuiteReport>, UnknownSuite> {
    if name == "all" {
        return Ok(SUITES.iter().map(|s| run_one(s).expect("known suite")).collect());
    }
    run_one(name).map(|r| vec![r])
}

fn run_one(name: &str) -> Result<SuiteReport, UnknownSuite> {
    let (suite, checks) = match name {
        "inverse" => ("inverse", inverse()),
        "scaling" => ("scaling", scaling()),
        "gaussian" => ("gaussian", gaussian()),
        "envelope" => ("envelope", envelope()),
        "oracle" => ("oracle", oracle()),
        "transfer" => ("transfer", transfer()),
        other => return Err(UnknownSuite(other.to_string())),
    };
    Ok(SuiteReport { suite, checks })
}

fn random_field(grid: Grid2D, rng: &mut ChaCha8Rng) -> QField {
    let values = (0..grid.len()).map(|_| Quaternion::from_array([(); 4].map(|_| rng.gen_range(-1.0..=1.0)))).collect();
    QField::new(grid, values).expect("finite samples")
}

fn diff<D: hqft_core::Domain>(a: &hqft_core::Samples<D>, b: &hqft_core::Samples<D>) -> f64 {
    a.max_abs_diff(b).expect("same grid")
}

fn inverse() -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut checks = Vec::new();
    for (n1, n2, h1, h2) in [(32, 32, 0.2, 0.3), (24, 40, 0.25, 0.1)] {
        let grid = Grid2D::new(n1, n2, h1, h2).unwrap();
        let f = random_field(grid, &mut rng);
        let back = iqft(&qft_fast(&f).unwrap()).unwrap();
        checks.push(Check::new(format!("random {n1}x{n2} round trip"), diff(&back, &f), 1e-8));
    }
    let grid = Grid2D::self_dual(64).unwrap();
    let g = AnalyticSignal::hermite(2, 1, 0.5).unwrap().sample(&grid).unwrap();
    checks.push(Check::new("hermite(2,1) round trip", diff(&iqft(&qft_fast(&g).unwrap()).unwrap(), &g), 1e-8));
    checks
}

fn scaling() -> Vec<Check> {
    let grid = Grid2D::with_extent(128, 4.0).unwrap();
    let cases = [
        ("critical gaussian", AnalyticSignal::gaussian(Quaternion::ONE, PI, PI).unwrap()),
        ("gaussian q=1+i+j+k", AnalyticSignal::gaussian(Quaternion::new(1.0, 1.0, 1.0, 1.0), 2.0, 5.0).unwrap()),
        ("hermite(1,2)", AnalyticSignal::hermite(1, 2, 0.5).unwrap()),
    ];
    cases
        .into_iter()
        .map(|(label, s)| {
            let r = check_scaling(&s.sample(&grid).unwrap(), 2.0).unwrap();
            Check::new(format!("{label} factor 2"), r.residual, 1e-6)
        })
        .collect()
}

fn gaussian() -> Vec<Check> {
    let grid = Grid2D::with_extent(128, 4.0).unwrap();
    let mut checks = Vec::new();
    for (a1, a2, label) in [(PI, PI, "(pi,pi)"), (PI / 2.0, 2.0 * PI, "(pi/2,2pi)"), (2.0, 5.0, "(2,5)")] {
        for (q, qname) in
            [(Quaternion::ONE, "1"), (Quaternion::I, "i"), (Quaternion::new(1.0, 1.0, 1.0, 1.0), "1+i+j+k")]
        {
            let g = AnalyticSignal::gaussian(q, a1, a2).unwrap();
            let discrete = qft_fast(&g.sample(&grid).unwrap()).unwrap();
            let exact = g.sample_spectrum(&grid).unwrap();
            checks.push(Check::new(format!("alpha={label} q={qname}"), diff(&discrete, &exact), 1e-6));
        }
    }
    checks
}

type Terms = &'static [(u32, u32, f64)];

fn envelope() -> Vec<Check> {
    let grid = Grid2D::self_dual(128).unwrap();
    let polys: [(&str, Terms); 4] = [
        ("x1", &[(1, 0, 1.0)]),
        ("x1 x2", &[(1, 1, 1.0)]),
        ("x1^2 + x2^2 - 0.3", &[(2, 0, 1.0), (0, 2, 1.0), (0, 0, -0.3)]),
        ("x1^3", &[(3, 0, 1.0)]),
    ];
    let mut checks = Vec::new();
    for (label, terms) in polys {
        let poly = Polynomial2::from_terms(terms).unwrap();
        checks.push(envelope_check(label, AnalyticSignal::poly_gaussian(poly, 1.0).unwrap(), &grid));
    }
    checks.push(envelope_check("hermite(1,1) gamma=0.5", AnalyticSignal::hermite(1, 1, 0.5).unwrap(), &grid));
    checks
}

fn envelope_check(label: &str, s: AnalyticSignal, grid: &Grid2D) -> Check {
    let env = s.envelope();
    let spec = qft_fast(&s.sample(grid).unwrap()).unwrap();
    let residual = verify_envelope(&spec, env.rate, env.degree).map_or(f64::INFINITY, |fit| fit.relative_error);
    Check::new(format!("{label} rate"), residual, 0.02)
}

fn oracle() -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    [(8, 8, 0.5, 0.5), (16, 16, 0.25, 0.25), (12, 20, 0.3, 0.2), (32, 32, 0.125, 0.125)]
        .into_iter()
        .map(|(n1, n2, h1, h2)| {
            let f = random_field(Grid2D::new(n1, n2, h1, h2).unwrap(), &mut rng);
            Check::new(format!("fast vs direct {n1}x{n2}"), diff(&qft_fast(&f).unwrap(), &qft_direct(&f)), 1e-10)
        })
        .collect()
}

type Rule = (&'static str, Quaternion, fn(Quaternion) -> Quaternion);

fn transfer() -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let grid = Grid2D::new(16, 12, 0.25, 0.3).unwrap();
    let g: Vec<f64> = (0..grid.len()).map(|_| rng.gen_range(-1.0..=1.0)).collect();
    let times = |u: Quaternion| QField::new(grid, g.iter().map(|&v| u * v).collect()).unwrap();
    let base = qft_direct(&times(Quaternion::ONE));
    let rules: [Rule; 3] = [
        ("F{i g} = i F{g}", Quaternion::I, |q| Quaternion::I * q),
        ("F{j g} = F{g} j", Quaternion::J, |q| q * Quaternion::J),
        ("F{k g} = i F{g} j", Quaternion::K, |q| Quaternion::I * q * Quaternion::J),
    ];
    rules
        .into_iter()
        .map(|(label, unit, rule)| {
            let lhs = qft_direct(&times(unit));
            let rhs = base.map(rule).unwrap();
            Check::new(label, diff(&lhs, &rhs), 1e-12)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes() {
        for r in run("all").unwrap() {
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn unknown_suite() {
        assert_eq!(run("fourier").unwrap_err().0, "fourier");
    }

    #[test]
    fn failing_check_is_reported() {
        let r = SuiteReport { suite: "x", checks: vec![Check::new("a", 1.0, 0.5), Check::new("b", f64::NAN, 1.0)] };
        assert!(!r.passed());
        assert!(!r.checks[1].passed());
        assert!(r.to_string().contains("a: residual=1.000e0 tol=5e-1 FAIL"));
    }
}
