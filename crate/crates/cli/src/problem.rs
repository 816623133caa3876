//! Problem files: a TOML description of a system, its symmetry group, and
//! the analysis schedule, resolved into core types.

use serde::{Deserialize, Serialize};

use symlat_core::group::{generate_group, AutElement, GroupTable, DEFAULT_MAX_ORDER};
use symlat_core::laurent::{parse_vector, Exponent, ModulePresentation};
use symlat_core::scalars::parse_scalar;
use symlat_core::windows::{ball_window, Norm, Window};

use crate::CliError;

fn default_norm() -> String {
    "linf".to_string()
}

fn default_stability_runs() -> usize {
    2
}

/// One group generator: scaling coefficients (one scalar expression per
/// variable) and a unimodular integer substitution matrix.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupGeneratorFile {
    pub r: Vec<String>,
    pub m: Vec<Vec<i64>>,
}

/// Window and pad schedule for the stabilized computations.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ScheduleFile {
    /// Window radii, analyzed in order.
    pub radii: Vec<i64>,
    /// Ball shape: "l1" or "linf".
    #[serde(default = "default_norm")]
    pub norm: String,
    /// Pads tried (in order) until the windowed span stabilizes.
    pub pads: Vec<i64>,
    /// How many trailing windows must agree for a stabilized verdict.
    #[serde(default = "default_stability_runs")]
    pub stability_runs: usize,
}

/// Optional knobs for the sampled checks.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct ChecksFile {
    /// Radius of the sample window for solution bases, orbit listings,
    /// and the all-solutions-symmetric criterion.
    #[serde(default)]
    pub sample_radius: Option<i64>,
    /// Pad limit for membership searches.
    #[serde(default)]
    pub membership_pad: Option<i64>,
    /// Orbit representatives whose coordinates are left free in the orbit
    /// projection check.
    #[serde(default)]
    pub excluded_orbits: Option<Vec<Vec<i64>>>,
}

/// The on-disk problem description.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ProblemFile {
    /// Number of independent shift variables.
    pub n: usize,
    /// Rank of the free module the system lives in.
    pub k: usize,
    /// Cyclotomic conductor for all scalars in the file.
    pub conductor: u32,
    /// Generators of the equation submodule, one expression per line.
    pub module_generators: Vec<String>,
    /// Generators of the symmetry group.
    pub group_generators: Vec<GroupGeneratorFile>,
    /// Safety cap for group enumeration.
    #[serde(default)]
    pub max_group_order: Option<usize>,
    pub schedule: ScheduleFile,
    #[serde(default)]
    pub checks: ChecksFile,
}

/// Command-line overrides applied on top of the file's schedule.
#[derive(Clone, Copy, Debug, Default)]
pub struct Overrides {
    pub window_max: Option<i64>,
    pub pad_max: Option<i64>,
    pub stability_runs: Option<usize>,
}

/// A fully resolved problem, ready to run.
#[derive(Clone, Debug)]
pub struct ProblemSpec {
    pub n: usize,
    pub k: usize,
    pub conductor: u32,
    pub presentation: ModulePresentation,
    pub group: GroupTable,
    pub norm: Norm,
    pub radii: Vec<i64>,
    pub pads: Vec<i64>,
    pub stability_runs: usize,
    pub sample_radius: i64,
    pub membership_pad: i64,
    pub excluded_orbits: Vec<Exponent>,
}

impl ProblemFile {
    pub fn from_toml(text: &str) -> Result<ProblemFile, CliError> {
        toml::from_str(text).map_err(|e| CliError::Input(format!("invalid problem file: {e}")))
    }

    pub fn to_toml_string(&self) -> Result<String, CliError> {
        toml::to_string_pretty(self)
            .map_err(|e| CliError::Input(format!("cannot serialize problem: {e}")))
    }

    /// Validate and convert into core types, applying overrides.
    pub fn resolve(&self, overrides: &Overrides) -> Result<ProblemSpec, CliError> {
        let input = |msg: String| CliError::Input(msg);
        if self.n == 0 {
            return Err(input("n must be at least 1".into()));
        }
        if self.k == 0 {
            return Err(input("k must be at least 1".into()));
        }
        if self.conductor == 0 {
            return Err(input("conductor must be at least 1".into()));
        }
        if self.module_generators.is_empty() {
            return Err(input("at least one module generator is required".into()));
        }

        let vectors = self
            .module_generators
            .iter()
            .map(|s| parse_vector(self.n, self.k, self.conductor, s))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| input(format!("bad module generator: {e}")))?;
        let presentation = ModulePresentation::new(self.n, self.k, self.conductor, vectors)
            .map_err(|e| input(format!("bad module presentation: {e}")))?;

        let mut generators = vec![];
        for (i, g) in self.group_generators.iter().enumerate() {
            if g.r.len() != self.n {
                return Err(input(format!(
                    "group generator {i}: expected {} scaling coefficients, found {}",
                    self.n,
                    g.r.len()
                )));
            }
            let r = g
                .r
                .iter()
                .map(|s| parse_scalar(self.conductor, s))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| input(format!("group generator {i}: {e}")))?;
            let element = AutElement::new(r, g.m.clone())
                .map_err(|e| input(format!("group generator {i}: {e}")))?;
            generators.push(element);
        }
        let max_order = self.max_group_order.unwrap_or(DEFAULT_MAX_ORDER);
        let group = if generators.is_empty() {
            generate_group(&[AutElement::identity(self.n, self.conductor)], max_order)
                .map_err(CliError::Math)?
        } else {
            generate_group(&generators, max_order).map_err(CliError::Math)?
        };

        let norm = Norm::parse(&self.schedule.norm)
            .map_err(|e| input(format!("schedule: {e}")))?;
        let mut radii = self.schedule.radii.clone();
        if let Some(cap) = overrides.window_max {
            radii.retain(|&r| r <= cap);
        }
        if radii.is_empty() {
            return Err(input("schedule needs at least one window radius".into()));
        }
        if radii.iter().any(|&r| r < 0) {
            return Err(input("window radii must be nonnegative".into()));
        }
        let mut pads = self.schedule.pads.clone();
        if let Some(cap) = overrides.pad_max {
            pads.retain(|&p| p <= cap);
        }
        if pads.is_empty() {
            return Err(input("schedule needs at least one pad".into()));
        }
        if pads.iter().any(|&p| p < 0) {
            return Err(input("pads must be nonnegative".into()));
        }
        let stability_runs = overrides
            .stability_runs
            .unwrap_or(self.schedule.stability_runs);
        if stability_runs < 2 {
            return Err(input("stability_runs must be at least 2".into()));
        }

        let sample_radius = self.checks.sample_radius.unwrap_or(2);
        if sample_radius < 0 {
            return Err(input("sample_radius must be nonnegative".into()));
        }
        let membership_pad = self.checks.membership_pad.unwrap_or(6);
        if membership_pad < 0 {
            return Err(input("membership_pad must be nonnegative".into()));
        }
        let mut excluded_orbits = vec![];
        for (i, point) in self
            .checks
            .excluded_orbits
            .clone()
            .unwrap_or_default()
            .into_iter()
            .enumerate()
        {
            if point.len() != self.n {
                return Err(input(format!(
                    "excluded orbit {i}: expected {} coordinates, found {}",
                    self.n,
                    point.len()
                )));
            }
            excluded_orbits.push(Exponent(point));
        }

        Ok(ProblemSpec {
            n: self.n,
            k: self.k,
            conductor: self.conductor,
            presentation,
            group,
            norm,
            radii,
            pads,
            stability_runs,
            sample_radius,
            membership_pad,
            excluded_orbits,
        })
    }
}

impl ProblemSpec {
    /// Windows of the schedule, in order.
    pub fn windows(&self) -> Vec<Window> {
        self.radii
            .iter()
            .map(|&r| ball_window(self.n, r, self.norm))
            .collect()
    }

    /// The sample window used by solution, orbit, and symmetry checks.
    pub fn sample_window(&self) -> Window {
        ball_window(self.n, self.sample_radius, self.norm)
    }
}
