//! Command execution: each command fills its section of the report.

use symlat_core::error::Error as CoreError;
use symlat_core::fixedpoints::{invariance_check, symmetric_dimension};
use symlat_core::lattice::{
    invariant_sublattice, orbit_decomposition, orbit_projection_check, sublattice_index,
};
use symlat_core::oracle::canonical_digest;
use symlat_core::scalars::Cyclotomic;
use symlat_core::solutions::{
    all_solutions_symmetric_check, render_sequence, solution_space_on_window,
    symmetric_solution_basis,
};
use symlat_core::windows::orbit_close;

use crate::problem::ProblemSpec;
use crate::report::{
    all_symmetric_out, invariance_out, orbits_out, sublattice_out, symdim_out, Report,
    SolutionOut, SolutionsOut,
};
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CommandKind {
    CheckInvariance,
    Symdim,
    Solve,
    Sublattice,
    Orbits,
    AllSymmetric,
    Full,
}

impl CommandKind {
    pub fn name(&self) -> &'static str {
        match self {
            CommandKind::CheckInvariance => "check-invariance",
            CommandKind::Symdim => "symdim",
            CommandKind::Solve => "solve",
            CommandKind::Sublattice => "sublattice",
            CommandKind::Orbits => "orbits",
            CommandKind::AllSymmetric => "all-symmetric",
            CommandKind::Full => "full",
        }
    }
}

pub struct RunOutput {
    pub report: Report,
    pub exit_code: i32,
}

/// Run one command against a resolved problem.
pub fn execute(kind: CommandKind, spec: &ProblemSpec, label: &str) -> Result<RunOutput, CliError> {
    let mut report = Report::new(
        label,
        kind.name(),
        spec.n,
        spec.k,
        spec.conductor,
        spec.group.order(),
    );
    let mut exit_code = 0;
    match kind {
        CommandKind::CheckInvariance => add_invariance(spec, &mut report)?,
        CommandKind::Symdim => add_symdim(spec, &mut report)?,
        CommandKind::Solve => add_solutions(spec, &mut report)?,
        CommandKind::Sublattice => add_sublattice(spec, &mut report, &mut exit_code)?,
        CommandKind::Orbits => add_orbits(spec, &mut report)?,
        CommandKind::AllSymmetric => add_all_symmetric(spec, &mut report)?,
        CommandKind::Full => {
            add_invariance(spec, &mut report)?;
            add_symdim(spec, &mut report)?;
            add_solutions(spec, &mut report)?;
            add_sublattice(spec, &mut report, &mut exit_code)?;
            add_orbits(spec, &mut report)?;
            add_all_symmetric(spec, &mut report)?;
        }
    }
    Ok(RunOutput { report, exit_code })
}

fn add_invariance(spec: &ProblemSpec, report: &mut Report) -> Result<(), CliError> {
    let verdict = invariance_check(&spec.presentation, &spec.group, spec.membership_pad)?;
    report.invariance = Some(invariance_out(&verdict));
    Ok(())
}

fn add_symdim(spec: &ProblemSpec, report: &mut Report) -> Result<(), CliError> {
    let result = symmetric_dimension(
        &spec.presentation,
        &spec.group,
        &spec.windows(),
        &spec.pads,
        spec.stability_runs,
    )?;
    report.symmetric_dimension = Some(symdim_out(&result, &spec.radii));
    Ok(())
}

fn add_solutions(spec: &ProblemSpec, report: &mut Report) -> Result<(), CliError> {
    let w = orbit_close(&spec.sample_window(), &spec.group);
    let all = solution_space_on_window(&spec.presentation, &w, &spec.pads)?;
    let symmetric = symmetric_solution_basis(&spec.presentation, &spec.group, &w, &spec.pads)?;
    let rows: Vec<Vec<Cyclotomic>> = symmetric.iter().map(|f| f.values().to_vec()).collect();
    let symmetric_basis = symmetric
        .iter()
        .map(|f| SolutionOut {
            values: f.triples(),
            sequence: render_sequence(f),
        })
        .collect();
    report.solutions = Some(SolutionsOut {
        sample_radius: spec.sample_radius,
        window_points: w.len(),
        dim_all: all.len(),
        dim_symmetric: symmetric.len(),
        symmetric_basis,
        basis_digest: canonical_digest(&rows),
    });
    Ok(())
}

fn add_sublattice(
    spec: &ProblemSpec,
    report: &mut Report,
    exit_code: &mut i32,
) -> Result<(), CliError> {
    match invariant_sublattice(&spec.group) {
        Ok(s) => {
            let index = if s.is_full_rank() {
                let ix = sublattice_index(&s)?;
                Some(i64::try_from(ix).map_err(|_| {
                    CliError::Input("sublattice index exceeds the reportable range".into())
                })?)
            } else {
                None
            };
            report.sublattice = Some(sublattice_out(&s, index));
        }
        Err(CoreError::NonTorsionCoefficient) => {
            report.notes.push(
                "a scaling coefficient is not a root of unity; no invariant sublattice exists"
                    .into(),
            );
            *exit_code = 3;
        }
        Err(e) => return Err(CliError::Math(e)),
    }
    Ok(())
}

fn add_orbits(spec: &ProblemSpec, report: &mut Report) -> Result<(), CliError> {
    let w = orbit_close(&spec.sample_window(), &spec.group);
    let decomposition = orbit_decomposition(&spec.group, &w)?;
    let pad = *spec.pads.iter().max().expect("pads are validated nonempty");
    let cover = orbit_projection_check(
        &spec.presentation,
        &spec.group,
        &w,
        &spec.excluded_orbits,
        pad,
    )?;
    let excluded: Vec<Vec<i64>> = spec.excluded_orbits.iter().map(|x| x.0.clone()).collect();
    report.orbits = Some(orbits_out(
        &decomposition,
        spec.sample_radius,
        &excluded,
        &cover,
    ));
    Ok(())
}

fn add_all_symmetric(spec: &ProblemSpec, report: &mut Report) -> Result<(), CliError> {
    let verdict = all_solutions_symmetric_check(
        &spec.presentation,
        &spec.group,
        &spec.sample_window(),
        spec.membership_pad,
    )?;
    report.all_symmetric = Some(all_symmetric_out(&verdict));
    Ok(())
}
