//! The full analysis pipeline and its JSON and text renderings.

use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::cohomology::{
    brute_force_all, closed_form_h, default_window, predicted_dims, surface_brute_force_all, surface_closed_form_h,
    GradedDims, Grading, ModuleDescription, SurfaceError, Window,
};
use crate::graded::GradedError;
use crate::homology::{
    closed_form_homology, form_window, homology_dims_all, surface_closed_form_homology, surface_homology_all,
};
use crate::milnor::{check_isolated, GateRejection, MilnorData};
use crate::poisson::PoissonStructure;
use crate::poly::WeightSystem;
use crate::verify::{Suite, SuiteReport, Verifier, VerifyError};

/// Exit code for a successful run.
pub const EXIT_OK: i32 = 0;
/// Exit code for unparsable or invalid input.
pub const EXIT_INVALID: i32 = 2;
/// Exit code when the isolated-singularity gate rejects `phi`.
pub const EXIT_REJECTED: i32 = 3;
/// Exit code for a verification mismatch.
pub const EXIT_MISMATCH: i32 = 4;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReportError {
    #[error(transparent)]
    Graded(#[from] GradedError),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
}

#[derive(Clone, Debug, Serialize)]
pub struct Input {
    pub phi: String,
    pub weights: [i64; 3],
    pub window: Window,
    pub form_window: Window,
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Gate {
    pub accepted: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rejection: Option<GateRejection>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BasisElement {
    pub monomial: String,
    pub degree: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct MilnorSummary {
    pub degree: i64,
    pub weight_sum: i64,
    pub n_w: i64,
    pub socle_bound: i64,
    pub mu: usize,
    pub graded_dims: Vec<[i64; 2]>,
    pub basis_u: Vec<BasisElement>,
}

impl MilnorSummary {
    pub fn new(p: &PoissonStructure, m: &MilnorData) -> Self {
        MilnorSummary {
            degree: m.degree(),
            weight_sum: m.weights().weight_sum(),
            n_w: p.n_w(),
            socle_bound: m.socle_bound(),
            mu: m.mu(),
            graded_dims: m.graded_dims().iter().map(|(i, n)| [*i, *n as i64]).collect(),
            basis_u: m
                .basis_u()
                .iter()
                .map(|(u, deg)| BasisElement {
                    monomial: u.to_string(),
                    degree: *deg,
                })
                .collect(),
        }
    }
}

/// One (co)homology space: closed form, its prediction, and the brute-force count.
#[derive(Clone, Debug, Serialize)]
pub struct SpaceReport {
    pub space: String,
    pub grading: Grading,
    pub description: ModuleDescription,
    pub predicted: GradedDims,
    pub brute_force: GradedDims,
    #[serde(rename = "match")]
    pub matches: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<i64>,
}

impl SpaceReport {
    fn new(description: ModuleDescription, window: Window, brute_force: GradedDims) -> Self {
        let predicted = predicted_dims(&description, window);
        let first_mismatch = brute_force.first_mismatch(&predicted);
        SpaceReport {
            space: description.space.clone(),
            grading: description.grading,
            description,
            predicted,
            brute_force,
            matches: first_mismatch.is_none(),
            first_mismatch,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Spaces {
    pub ambient: Vec<SpaceReport>,
    pub surface: Vec<SpaceReport>,
}

#[derive(Clone, Debug, Serialize)]
pub struct InvariantsSummary {
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Conventions {
    pub bracket: &'static str,
    pub coboundary: &'static str,
    pub boundary: &'static str,
    pub derivation_grading: &'static str,
    pub form_grading: &'static str,
    pub two_form_basis: &'static str,
    pub dims: &'static str,
    pub representatives: &'static str,
}

pub const CONVENTIONS: Conventions = Conventions {
    bracket: "{f,g} = grad phi . (grad f x grad g)",
    coboundary: "delta^0 f = grad f x grad phi; delta^1 F = -grad(F . grad phi) + Div(F) grad phi; delta^2 F = -grad phi . curl F",
    boundary: "delta_k = (-1)^k delta^(3-k) under Omega^k = X^(3-k)",
    derivation_grading: "component j of a derivation has polynomial degree i + w_j; a bivector component (j) has i + |w| - w_j; a trivector has i + |w|",
    form_grading: "component j of a 1-form has degree w(f_j) + w_j; a 3-form f dx^dy^dz has w(f) + |w|; form degree = derivation degree + |w|",
    two_form_basis: "(dy^dz, dz^dx, dx^dy)",
    dims: "sorted [degree, dim] pairs over the window",
    representatives: "generators depend on the choice of the u_j; dims do not",
};

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub input: Input,
    pub gate: Gate,
    pub invariants_summary: InvariantsSummary,
    pub milnor: Option<MilnorSummary>,
    pub cohomology: Option<Spaces>,
    pub homology: Option<Spaces>,
    pub conventions: Conventions,
}

/// Where a verification first disagrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub space: String,
    pub degree: Option<i64>,
    pub detail: String,
}

impl AnalysisReport {
    pub fn first_mismatch(&self) -> Option<Mismatch> {
        for spaces in [&self.cohomology, &self.homology].into_iter().flatten() {
            for s in spaces.ambient.iter().chain(&spaces.surface) {
                if let Some(i) = s.first_mismatch {
                    return Some(Mismatch {
                        space: s.space.clone(),
                        degree: Some(i),
                        detail: format!("brute force {} but predicted {}", s.brute_force.get(i), s.predicted.get(i)),
                    });
                }
            }
        }
        for suite in &self.invariants_summary.suites {
            if let Some(c) = suite.first_failure() {
                return Some(Mismatch {
                    space: c.space.clone().unwrap_or_else(|| suite.suite.to_string()),
                    degree: c.degree,
                    detail: format!("{}: {}", c.name, c.detail.clone().unwrap_or_default()),
                });
            }
        }
        None
    }

    pub fn exit_code(&self) -> i32 {
        if !self.gate.accepted {
            EXIT_REJECTED
        } else if self.first_mismatch().is_some() {
            EXIT_MISMATCH
        } else {
            EXIT_OK
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let i = &self.input;
        let w = i.weights;
        let _ = writeln!(out, "phi: {}", i.phi);
        let _ = writeln!(out, "weights: {},{},{}", w[0], w[1], w[2]);
        let _ = writeln!(out, "window: [{}, {}]", i.window.min, i.window.max);
        let _ = writeln!(out, "form window: [{}, {}]", i.form_window.min, i.form_window.max);
        let _ = writeln!(out, "seed: {}", i.seed);
        match &self.gate.rejection {
            None => {
                let _ = writeln!(out, "gate: accepted");
            }
            Some(r) => {
                let _ = writeln!(out, "gate: rejected: {r}");
            }
        }
        if let Some(m) = &self.milnor {
            let _ = writeln!(
                out,
                "d = {}, |w| = {}, N = {}, socle bound = {}, mu = {}",
                m.degree, m.weight_sum, m.n_w, m.socle_bound, m.mu
            );
            let _ = writeln!(out, "milnor dims: {}", pairs_text(&m.graded_dims));
            let basis: Vec<String> = m.basis_u.iter().map(|b| format!("{} ({})", b.monomial, b.degree)).collect();
            let _ = writeln!(out, "basis u: {}", basis.join(", "));
        }
        for (title, spaces) in [("cohomology", &self.cohomology), ("homology", &self.homology)] {
            let Some(spaces) = spaces else { continue };
            for (side, list) in [("ambient", &spaces.ambient), ("surface", &spaces.surface)] {
                let _ = writeln!(out, "{title} {side}");
                for s in list {
                    let status = if s.matches { "match" } else { "MISMATCH" };
                    let _ = writeln!(
                        out,
                        "  {}: {}, total {}, dims {}",
                        s.space,
                        status,
                        s.brute_force.total(),
                        pairs_text(&s.brute_force.pairs())
                    );
                    for g in &s.description.generators {
                        let _ = writeln!(out, "    {} in degree {}", g.label, g.degree);
                    }
                }
            }
        }
        for suite in &self.invariants_summary.suites {
            let _ = writeln!(out, "suite {}: {}", suite.suite, pass_text(suite.passed));
            for c in &suite.checks {
                let _ = writeln!(out, "  {}: {} ({} cases)", c.name, pass_text(c.passed), c.cases);
                if let Some(d) = &c.detail {
                    let _ = writeln!(out, "    {d}");
                }
            }
        }
        if let Some(m) = self.first_mismatch() {
            let _ = writeln!(out, "first mismatch: {} at degree {}", m.space, degree_text(m.degree));
        }
        out
    }
}

fn pass_text(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "FAIL"
    }
}

fn degree_text(d: Option<i64>) -> String {
    d.map_or_else(|| "-".to_string(), |d| d.to_string())
}

/// `[[0,1],[2,3]]` as `0:1 2:3`.
pub fn pairs_text(pairs: &[[i64; 2]]) -> String {
    let v: Vec<String> = pairs.iter().map(|[i, n]| format!("{i}:{n}")).collect();
    v.join(" ")
}

/// Options for [`analyze`].
#[derive(Clone, Copy, Debug, Default)]
pub struct AnalyzeOptions {
    pub min_degree: Option<i64>,
    pub max_degree: Option<i64>,
    pub seed: u64,
}

/// The derivation degree window after applying overrides.
pub fn resolve_window(p: &PoissonStructure, min: Option<i64>, max: Option<i64>) -> Window {
    let w = default_window(p);
    Window::new(min.unwrap_or(w.min), max.unwrap_or(w.max))
}

/// Runs the gate, the brute-force and closed-form computations, and every suite.
///
/// For a rejected `phi` only the suites that make sense without an isolated
/// singularity are run.
pub fn analyze(
    p: &PoissonStructure,
    phi_text: &str,
    opts: AnalyzeOptions,
) -> Result<AnalysisReport, ReportError> {
    let w: &WeightSystem = p.weights();
    let window = resolve_window(p, opts.min_degree, opts.max_degree);
    let fw = form_window(p, window);
    let input = Input {
        phi: phi_text.to_string(),
        weights: w.weights(),
        window,
        form_window: fw,
        seed: opts.seed,
    };
    let gate = check_isolated(p.phi(), w);
    let m = gate.as_ref().ok();
    let verifier = Verifier::new(p, m, window, opts.seed);
    let suites = Suite::ALL
        .into_iter()
        .filter(|s| m.is_some() || !s.needs_gate())
        .map(|s| verifier.run(s))
        .collect::<Result<Vec<_>, _>>()?;
    let invariants_summary = InvariantsSummary {
        passed: suites.iter().all(|s| s.passed),
        suites,
    };
    let (milnor, cohomology, homology) = match m {
        None => (None, None, None),
        Some(m) => {
            let co_a = brute_force_all(p, window)?;
            let co_s = surface_brute_force_all(p, window)?;
            let ho_a = homology_dims_all(p, fw)?;
            let ho_s = surface_homology_all(p, fw)?;
            let spaces = |brute: Vec<GradedDims>, win: Window, f: &dyn Fn(usize) -> ModuleDescription| {
                brute
                    .into_iter()
                    .enumerate()
                    .map(|(k, b)| SpaceReport::new(f(k), win, b))
                    .collect::<Vec<_>>()
            };
            let cohomology = Spaces {
                ambient: spaces(co_a, window, &|k| closed_form_h(p, m, k)),
                surface: spaces(co_s, window, &|k| surface_closed_form_h(p, m, k)),
            };
            let homology = Spaces {
                ambient: spaces(ho_a, fw, &|k| closed_form_homology(p, m, k)),
                surface: spaces(ho_s, fw, &|k| surface_closed_form_homology(p, m, k)),
            };
            (Some(MilnorSummary::new(p, m)), Some(cohomology), Some(homology))
        }
    };
    Ok(AnalysisReport {
        input,
        gate: Gate {
            accepted: gate.is_ok(),
            rejection: gate.err(),
        },
        invariants_summary,
        milnor,
        cohomology,
        homology,
        conventions: CONVENTIONS,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::poly;

    #[test]
    fn quadric_report_matches_and_is_stable() {
        let p = PoissonStructure::new(poly("x^2+y^2+z^2"), WeightSystem::standard()).unwrap();
        let a = analyze(&p, "x^2+y^2+z^2", AnalyzeOptions::default()).unwrap();
        let b = analyze(&p, "x^2+y^2+z^2", AnalyzeOptions::default()).unwrap();
        assert_eq!(a.exit_code(), EXIT_OK, "{:?}", a.first_mismatch());
        assert_eq!(a.to_json(), b.to_json());
        let v: serde_json::Value = serde_json::from_str(&a.to_json()).unwrap();
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys.len(), 7);
        assert_eq!(v["milnor"]["mu"], 1);
        assert_eq!(v["homology"]["surface"][2]["brute_force"]["total"], 1);
    }

    #[test]
    fn rejected_phi_exits_three() {
        let p = PoissonStructure::new(poly("x*y*z"), WeightSystem::standard()).unwrap();
        let r = analyze(&p, "x*y*z", AnalyzeOptions::default()).unwrap();
        assert_eq!(r.exit_code(), EXIT_REJECTED);
        assert!(r.milnor.is_none());
        assert!(r.to_text().contains("gate: rejected"));
    }
}
