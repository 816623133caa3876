//! Analysis reports: one structure for every command, rendered either as
//! human-readable text or as deterministic JSON.

use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

use symlat_core::fixedpoints::{Invariance, SymDimReport, Verdict};
use symlat_core::lattice::{OrbitCover, OrbitDecomposition, Sublattice};
use symlat_core::solutions::AllSymmetric;
use symlat_core::windows::Membership;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ViolationOut {
    pub element: usize,
    pub generator: usize,
    pub searched_pad: i64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InvarianceOut {
    pub invariant: bool,
    pub violations: Vec<ViolationOut>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SymDimEntryOut {
    pub label: String,
    pub radius: i64,
    pub window_points: usize,
    pub dim_window: usize,
    pub dim_window_fixed: usize,
    pub dim_submodule: usize,
    pub dim_submodule_fixed: usize,
    pub quotient_dim: usize,
    pub pad_used: i64,
    pub pad_stable: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SymDimOut {
    pub windows: Vec<SymDimEntryOut>,
    /// "stabilized", "growing", or "inconclusive".
    pub verdict: String,
    pub stable_dimension: Option<usize>,
    /// True when the module is all of the ambient free module.
    pub improper: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SolutionOut {
    /// Nonzero values as (component, point, scalar) triples.
    pub values: Vec<(usize, Vec<i64>, String)>,
    /// One-variable scalar functions rendered as a marked sequence.
    pub sequence: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SolutionsOut {
    pub sample_radius: i64,
    pub window_points: usize,
    pub dim_all: usize,
    pub dim_symmetric: usize,
    pub symmetric_basis: Vec<SolutionOut>,
    pub basis_digest: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SublatticeOut {
    pub basis: Vec<Vec<i64>>,
    pub rank: usize,
    pub full_rank: bool,
    /// Subgroup index in the exponent lattice, when full rank.
    pub index: Option<i64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OrbitOut {
    pub representative: Vec<i64>,
    pub size: usize,
    pub points: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CoverOut {
    pub covered: bool,
    pub failing_orbit: Option<usize>,
    pub failing_component: Option<usize>,
    pub failing_representative: Option<Vec<i64>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OrbitsOut {
    pub sample_radius: i64,
    pub count: usize,
    pub orbits: Vec<OrbitOut>,
    pub excluded: Vec<Vec<i64>>,
    pub cover: CoverOut,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AllSymmetricOut {
    pub holds: bool,
    pub counterexample_element: Option<usize>,
    pub counterexample_component: Option<usize>,
    pub counterexample_point: Option<Vec<i64>>,
}

/// Everything a run can produce; sections are filled per command.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub problem: String,
    pub command: String,
    pub n: usize,
    pub k: usize,
    pub conductor: u32,
    pub group_order: usize,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invariance: Option<InvarianceOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub symmetric_dimension: Option<SymDimOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solutions: Option<SolutionsOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sublattice: Option<SublatticeOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orbits: Option<OrbitsOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub all_symmetric: Option<AllSymmetricOut>,
}

impl Report {
    pub fn new(problem: &str, command: &str, n: usize, k: usize, conductor: u32, group_order: usize) -> Report {
        Report {
            problem: problem.to_string(),
            command: command.to_string(),
            n,
            k,
            conductor,
            group_order,
            notes: vec![],
            invariance: None,
            symmetric_dimension: None,
            solutions: None,
            sublattice: None,
            orbits: None,
            all_symmetric: None,
        }
    }

    pub fn machine(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "problem {} (n={}, k={}, conductor={}), group order {}",
            self.problem, self.n, self.k, self.conductor, self.group_order
        );
        for note in &self.notes {
            let _ = writeln!(out, "note: {note}");
        }
        if let Some(inv) = &self.invariance {
            if inv.invariant {
                let _ = writeln!(out, "invariance: every generator image stays in the module");
            } else {
                let _ = writeln!(out, "invariance: VIOLATED");
                for v in &inv.violations {
                    let _ = writeln!(
                        out,
                        "  element {} sends generator {} outside the module (searched pad {})",
                        v.element, v.generator, v.searched_pad
                    );
                }
            }
        }
        if let Some(sd) = &self.symmetric_dimension {
            let _ = writeln!(out, "symmetric dimension:");
            for e in &sd.windows {
                let _ = writeln!(
                    out,
                    "  {}: radius {}, dim W {} (fixed {}), dim P_w {} (fixed {}), quotient {} [pad {}{}]",
                    e.label,
                    e.radius,
                    e.dim_window,
                    e.dim_window_fixed,
                    e.dim_submodule,
                    e.dim_submodule_fixed,
                    e.quotient_dim,
                    e.pad_used,
                    if e.pad_stable { ", stable" } else { ", NOT stable" },
                );
            }
            let verdict = match (&sd.verdict[..], sd.stable_dimension) {
                ("stabilized", Some(d)) => format!("stabilized at {d}"),
                (v, _) => v.to_string(),
            };
            let _ = writeln!(out, "  verdict: {verdict}");
            if sd.improper {
                let _ = writeln!(out, "  (the module is the whole space; quotients vanish)");
            }
        }
        if let Some(sol) = &self.solutions {
            let _ = writeln!(
                out,
                "solutions on the radius-{} sample window ({} points): all {}, symmetric {}",
                sol.sample_radius, sol.window_points, sol.dim_all, sol.dim_symmetric
            );
            for (i, f) in sol.symmetric_basis.iter().enumerate() {
                match &f.sequence {
                    Some(seq) => {
                        let _ = writeln!(out, "  f{i}: {seq}");
                    }
                    None => {
                        let rendered: Vec<String> = f
                            .values
                            .iter()
                            .map(|(c, x, v)| format!("f{c}{x:?} = {v}"))
                            .collect();
                        let _ = writeln!(out, "  f{i}: {}", rendered.join(", "));
                    }
                }
            }
            let _ = writeln!(out, "  basis digest: {}", sol.basis_digest);
        }
        if let Some(s) = &self.sublattice {
            let basis: Vec<String> = s.basis.iter().map(|b| format!("{b:?}")).collect();
            let _ = writeln!(
                out,
                "invariant sublattice: rank {}, basis [{}]{}",
                s.rank,
                basis.join(", "),
                match s.index {
                    Some(ix) => format!(", index {ix}"),
                    None => ", not full rank".to_string(),
                }
            );
        }
        if let Some(o) = &self.orbits {
            let _ = writeln!(
                out,
                "orbits on the radius-{} sample window: {}",
                o.sample_radius, o.count
            );
            for orbit in &o.orbits {
                let _ = writeln!(
                    out,
                    "  orbit of {:?}: size {}",
                    orbit.representative, orbit.size
                );
            }
            if !o.excluded.is_empty() {
                let excluded: Vec<String> = o.excluded.iter().map(|x| format!("{x:?}")).collect();
                let _ = writeln!(out, "  excluded representatives: {}", excluded.join(", "));
            }
            if o.cover.covered {
                let _ = writeln!(out, "  cover: every non-excluded orbit sum is reachable");
            } else {
                let _ = writeln!(
                    out,
                    "  cover: FAILS at orbit {} (component {}, representative {:?})",
                    o.cover.failing_orbit.unwrap_or_default(),
                    o.cover.failing_component.unwrap_or_default(),
                    o.cover.failing_representative.clone().unwrap_or_default()
                );
            }
        }
        if let Some(a) = &self.all_symmetric {
            if a.holds {
                let _ = writeln!(out, "all sampled solutions are symmetric");
            } else {
                let _ = writeln!(
                    out,
                    "not all solutions are symmetric: element {} moves the monomial at {:?} (component {})",
                    a.counterexample_element.unwrap_or_default(),
                    a.counterexample_point.clone().unwrap_or_default(),
                    a.counterexample_component.unwrap_or_default()
                );
            }
        }
        out
    }
}

pub fn invariance_out(invariance: &Invariance) -> InvarianceOut {
    match invariance {
        Invariance::Invariant => InvarianceOut {
            invariant: true,
            violations: vec![],
        },
        Invariance::Violations(vs) => InvarianceOut {
            invariant: false,
            violations: vs
                .iter()
                .map(|v| ViolationOut {
                    element: v.element_index,
                    generator: v.generator_index,
                    searched_pad: match v.membership {
                        Membership::In(p) | Membership::NotFoundUpTo(p) => p,
                    },
                })
                .collect(),
        },
    }
}

pub fn symdim_out(report: &SymDimReport, radii: &[i64]) -> SymDimOut {
    let windows = report
        .entries
        .iter()
        .zip(radii)
        .map(|(e, &radius)| SymDimEntryOut {
            label: e.label.clone(),
            radius,
            window_points: e.window_points,
            dim_window: e.dim_window,
            dim_window_fixed: e.dim_window_fixed,
            dim_submodule: e.dim_submodule,
            dim_submodule_fixed: e.dim_submodule_fixed,
            quotient_dim: e.quotient_dim,
            pad_used: e.pad_used,
            pad_stable: e.pad_stable,
        })
        .collect();
    let (verdict, stable_dimension) = match report.verdict {
        Verdict::Stabilized(d) => ("stabilized".to_string(), Some(d)),
        Verdict::Growing => ("growing".to_string(), None),
        Verdict::Inconclusive => ("inconclusive".to_string(), None),
    };
    SymDimOut {
        windows,
        verdict,
        stable_dimension,
        improper: report.improper,
    }
}

pub fn sublattice_out(s: &Sublattice, index: Option<i64>) -> SublatticeOut {
    SublatticeOut {
        basis: s.basis().to_vec(),
        rank: s.rank(),
        full_rank: s.is_full_rank(),
        index,
    }
}

pub fn orbits_out(
    decomposition: &OrbitDecomposition,
    sample_radius: i64,
    excluded: &[Vec<i64>],
    cover: &OrbitCover,
) -> OrbitsOut {
    let orbits = decomposition
        .orbits()
        .iter()
        .map(|o| OrbitOut {
            representative: o[0].0.clone(),
            size: o.len(),
            points: o.iter().map(|x| x.0.clone()).collect(),
        })
        .collect();
    let cover = match cover {
        OrbitCover::Covered => CoverOut {
            covered: true,
            failing_orbit: None,
            failing_component: None,
            failing_representative: None,
        },
        OrbitCover::NotCovered {
            orbit_index,
            component,
            representative,
        } => CoverOut {
            covered: false,
            failing_orbit: Some(*orbit_index),
            failing_component: Some(*component),
            failing_representative: Some(representative.0.clone()),
        },
    };
    OrbitsOut {
        sample_radius,
        count: decomposition.len(),
        orbits,
        excluded: excluded.to_vec(),
        cover,
    }
}

pub fn all_symmetric_out(verdict: &AllSymmetric) -> AllSymmetricOut {
    match verdict {
        AllSymmetric::Holds => AllSymmetricOut {
            holds: true,
            counterexample_element: None,
            counterexample_component: None,
            counterexample_point: None,
        },
        AllSymmetric::Counterexample {
            element_index,
            component,
            point,
        } => AllSymmetricOut {
            holds: false,
            counterexample_element: Some(*element_index),
            counterexample_component: Some(*component),
            counterexample_point: Some(point.0.clone()),
        },
    }
}
