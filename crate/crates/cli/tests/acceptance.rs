//! End-to-end acceptance checks: one test per shipped criterion, each
//! printing a `[acceptance]` line when it passes.
//!
//! The first half exercises the library against closed-form dimension
//! counts for the bundled problem families; the second half cross-checks
//! every pipeline against the independent brute-force oracles (on the
//! bundled problems and on a few hundred randomized small instances) and
//! drives the installed binary to pin exit codes and byte determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

use symlat_cli::problem::{Overrides, ProblemFile, ProblemSpec};
use symlat_core::fixedpoints::{
    character, fixed_dim_by_character, quotient_fixed_dim_via_projector, reynolds_fixed_space,
    symmetric_dimension, Verdict,
};
use symlat_core::group::{apply_to_vector, generate_group, AutElement, GroupTable};
use symlat_core::lattice::{invariant_sublattice, sublattice_index};
use symlat_core::laurent::{parse_vector, Exponent, LaurentPoly, ModulePresentation, ModuleVector};
use symlat_core::oracle::{brute_fixed_dim, brute_symmetric_solutions, canonical_digest};
use symlat_core::scalars::{rational, Cyclotomic};
use symlat_core::solutions::{
    all_solutions_symmetric_check, render_sequence, solution_space_on_window,
    symmetric_solution_basis, AllSymmetric,
};
use symlat_core::windows::{
    ball_window, orbit_close, stabilize_submodule_window, Norm, SubspaceBasis, Window, WindowBasis,
};

fn pass(number: u32, what: &str) {
    println!("[acceptance] criterion {number} ({what}): PASS");
}

fn problem_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../problems")
        .join(name)
}

fn load_spec(name: &str) -> ProblemSpec {
    let text = std::fs::read_to_string(problem_path(name)).expect("bundled problem file");
    ProblemFile::from_toml(&text)
        .and_then(|f| f.resolve(&Overrides::default()))
        .expect("bundled problem file resolves")
}

fn run_cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symlat"))
        .args(args)
        .output()
        .expect("spawn bundled binary")
}

/// The seven bundled problems whose systems are invariant under their group.
const INVARIANT_PROBLEMS: [&str; 7] = [
    "reflection-sum.toml",
    "reflection-difference.toml",
    "sign-scaling-sum.toml",
    "scaling-order-2.toml",
    "scaling-order-3.toml",
    "scaling-order-5.toml",
    "swap-cross-difference.toml",
];

/// Every bundled problem, including the two negative cases.
const ALL_PROBLEMS: [&str; 9] = [
    "reflection-sum.toml",
    "reflection-difference.toml",
    "sign-scaling-sum.toml",
    "scaling-order-2.toml",
    "scaling-order-3.toml",
    "scaling-order-5.toml",
    "swap-cross-difference.toml",
    "neg-noninvariant.toml",
    "neg-nontorsion.toml",
];

fn reflections() -> GroupTable {
    let g = AutElement::new(vec![Cyclotomic::one(1)], vec![vec![-1]]).unwrap();
    generate_group(&[g], 10).unwrap()
}

fn pres1(conductor: u32, gens: &[&str]) -> ModulePresentation {
    let vectors = gens
        .iter()
        .map(|g| parse_vector(1, 1, conductor, g).unwrap())
        .collect();
    ModulePresentation::new(1, 1, conductor, vectors).unwrap()
}

fn sole_non_identity(group: &GroupTable) -> &AutElement {
    assert_eq!(group.order(), 2);
    group.element(1 - group.identity_index())
}

/// Criterion 1: the reflection group on `Z` with the two-sided sum
/// operator.  Window and kernel dimensions, characters, fixed dimensions,
/// the stabilized symmetric dimension, and the rendered alternating basis
/// function must all land on their closed forms.
#[test]
fn criterion_01_reflection_sum_operator_counts() {
    let group = reflections();
    let tau = sole_non_identity(&group);
    let p = pres1(1, &["s1^1 + s1^-1"]);
    let pads = [2, 3];

    let mut windows = vec![];
    for i in 1..=6i64 {
        let w = ball_window(1, i, Norm::Linf);
        let wb = WindowBasis::new(w.clone(), 1);
        assert_eq!(wb.len() as i64, 2 * i + 1, "dim W_{i}");
        let full = SubspaceBasis::full(wb, 1);
        let (p_w, _, stable) = stabilize_submodule_window(&p, &w, &pads).unwrap();
        assert!(stable, "kernel span stabilizes on W_{i}");
        assert_eq!(p_w.dim() as i64, 2 * i - 1, "dim I_{i}");

        let one = Cyclotomic::from_integer(1, 1);
        assert_eq!(character(tau, &full).unwrap(), one, "character on W_{i}");
        assert_eq!(character(tau, &p_w).unwrap(), one, "character on I_{i}");

        let w_fixed = fixed_dim_by_character(&group, &full).unwrap();
        let i_fixed = fixed_dim_by_character(&group, &p_w).unwrap();
        assert_eq!(w_fixed as i64, i + 1, "dim W_{i} fixed");
        assert_eq!(i_fixed as i64, i, "dim I_{i} fixed");
        assert_eq!(w_fixed - i_fixed, 1, "quotient at radius {i}");
        windows.push(w);
    }

    let report = symmetric_dimension(&p, &group, &windows, &pads, 2).unwrap();
    assert_eq!(report.verdict, Verdict::Stabilized(1));
    assert!(report.entries.iter().all(|e| e.quotient_dim == 1));

    let sample = ball_window(1, 4, Norm::Linf);
    let basis = symmetric_solution_basis(&p, &group, &sample, &pads).unwrap();
    assert_eq!(basis.len(), 1);
    let seq = render_sequence(&basis[0]).unwrap();
    assert_eq!(seq, "1, 0, -1, 0, 1\u{302}, 0, -1, 0, 1");
    assert!(seq.contains("0, -1, 0, 1\u{302}, 0, -1, 0"));
    assert_eq!(solution_space_on_window(&p, &sample, &pads).unwrap().len(), 2);

    pass(1, "reflection group, two-sided sum");
}

/// Criterion 2: same group, two-sided difference operator.  The sign
/// character flips, the quotient stabilizes at two, and the canonical
/// symmetric basis is the even/odd indicator pair.
#[test]
fn criterion_02_reflection_difference_operator_counts() {
    let group = reflections();
    let tau = sole_non_identity(&group);
    let p = pres1(1, &["s1^1 + -1*s1^-1"]);
    let pads = [2, 3];

    let mut windows = vec![];
    for i in 1..=6i64 {
        let w = ball_window(1, i, Norm::Linf);
        let (p_w, _, stable) = stabilize_submodule_window(&p, &w, &pads).unwrap();
        assert!(stable);
        assert_eq!(
            character(tau, &p_w).unwrap(),
            Cyclotomic::from_integer(1, -1),
            "sign character on J_{i}"
        );
        assert_eq!(fixed_dim_by_character(&group, &p_w).unwrap() as i64, i - 1);
        let full = SubspaceBasis::full(WindowBasis::new(w.clone(), 1), 1);
        let quotient = fixed_dim_by_character(&group, &full).unwrap()
            - fixed_dim_by_character(&group, &p_w).unwrap();
        assert_eq!(quotient, 2, "quotient at radius {i}");
        windows.push(w);
    }

    let report = symmetric_dimension(&p, &group, &windows, &pads, 2).unwrap();
    assert_eq!(report.verdict, Verdict::Stabilized(2));

    let sample = ball_window(1, 4, Norm::Linf);
    let basis = symmetric_solution_basis(&p, &group, &sample, &pads).unwrap();
    let sequences: Vec<String> = basis.iter().map(|f| render_sequence(f).unwrap()).collect();
    assert_eq!(
        sequences,
        vec![
            "1, 0, 1, 0, 1\u{302}, 0, 1, 0, 1".to_string(),
            "0, 1, 0, 1, 0\u{302}, 1, 0, 1, 0".to_string(),
        ]
    );

    assert_eq!(
        all_solutions_symmetric_check(&p, &group, &ball_window(1, 2, Norm::Linf), 6).unwrap(),
        AllSymmetric::Holds
    );

    pass(2, "reflection group, two-sided difference");
}

/// Criterion 3: scaling groups of order `d` acting on the kernel of
/// `1 - shift^d`.  One symmetric solution (the indicator of `dZ`), an
/// invariant sublattice of index `d`, and the full quotient dimension `d`
/// splitting as `d / |G|` symmetric dimensions.
#[test]
fn criterion_03_scaling_groups_split_quotients() {
    for d in [2i64, 3, 5] {
        let spec = load_spec(&format!("scaling-order-{d}.toml"));
        assert_eq!(spec.group.order() as i64, d);

        let report = symmetric_dimension(
            &spec.presentation,
            &spec.group,
            &spec.windows(),
            &spec.pads,
            spec.stability_runs,
        )
        .unwrap();
        assert_eq!(report.verdict, Verdict::Stabilized(1), "d = {d}");
        for entry in &report.entries {
            let full_quotient = (entry.dim_window - entry.dim_submodule) as i64;
            assert_eq!(full_quotient, d, "full quotient at {}", entry.label);
            assert_eq!(
                entry.quotient_dim as i64,
                full_quotient / d,
                "symmetric share at {}",
                entry.label
            );
        }

        let sample = spec.sample_window();
        let basis =
            symmetric_solution_basis(&spec.presentation, &spec.group, &sample, &spec.pads).unwrap();
        assert_eq!(basis.len(), 1, "one symmetric solution for d = {d}");
        for x in sample.points() {
            let v = basis[0].value(0, x).unwrap();
            if x.0[0].rem_euclid(d) == 0 {
                assert!(v.is_one(), "indicator is 1 on {}Z at {:?}", d, x);
            } else {
                assert!(v.is_zero(), "indicator vanishes off {}Z at {:?}", d, x);
            }
        }

        let s = invariant_sublattice(&spec.group).unwrap();
        assert_eq!(s.basis(), &[vec![d]]);
        assert_eq!(sublattice_index(&s).unwrap(), d as i128);
        assert_eq!(sublattice_index(&s).unwrap(), spec.group.order() as i128);
    }
    pass(3, "scaling groups of order 2, 3, 5");
}

/// Criterion 4: the coordinate swap on `Z^2` with the cross difference
/// operator.  All window/kernel dimensions, swap characters, and fixed
/// dimensions follow the closed forms, the quotient grows as `2r + 1`,
/// and every solution is symmetric.
#[test]
fn criterion_04_swap_cross_difference_growth() {
    let spec = load_spec("swap-cross-difference.toml");
    let group = &spec.group;
    let p = &spec.presentation;
    let tau = sole_non_identity(group);
    let pads = [2, 3];

    // Closed forms, split by radius parity: radius 2i gives swap character
    // 2i+1 on the window and -2i on the kernel span; radius 2i+1 gives
    // 2i+1 and -2i-2.
    let chi_w = |r: i64| if r % 2 == 0 { r + 1 } else { r };
    let chi_i = |r: i64| if r % 2 == 0 { -r } else { -r - 1 };

    for r in 1..=5i64 {
        let w = ball_window(2, r, Norm::L1);
        let wb = WindowBasis::new(w.clone(), 1);
        let dim_w = 2 * r * r + 2 * r + 1;
        assert_eq!(wb.len() as i64, dim_w, "dim W at radius {r}");
        let full = SubspaceBasis::full(wb, 1);
        let (p_w, _, _) = stabilize_submodule_window(p, &w, &pads).unwrap();
        let dim_i = 2 * r * r;
        assert_eq!(p_w.dim() as i64, dim_i, "dim I at radius {r}");

        assert_eq!(
            character(tau, &full).unwrap(),
            Cyclotomic::from_integer(1, chi_w(r)),
            "swap character on W at radius {r}"
        );
        assert_eq!(
            character(tau, &p_w).unwrap(),
            Cyclotomic::from_integer(1, chi_i(r)),
            "swap character on I at radius {r}"
        );

        let w_fixed = fixed_dim_by_character(group, &full).unwrap() as i64;
        let i_fixed = fixed_dim_by_character(group, &p_w).unwrap() as i64;
        assert_eq!(w_fixed, (dim_w + chi_w(r)) / 2, "dim W fixed at radius {r}");
        assert_eq!(i_fixed, (dim_i + chi_i(r)) / 2, "dim I fixed at radius {r}");
        assert_eq!(w_fixed - i_fixed, 2 * r + 1, "quotient at radius {r}");
    }

    let report =
        symmetric_dimension(p, group, &spec.windows(), &spec.pads, spec.stability_runs).unwrap();
    assert_eq!(report.verdict, Verdict::Growing);
    for (r, entry) in (1..=5i64).zip(&report.entries) {
        assert_eq!(entry.quotient_dim as i64, 2 * r + 1);
    }

    assert_eq!(
        all_solutions_symmetric_check(p, group, &ball_window(2, 2, Norm::L1), 4).unwrap(),
        AllSymmetric::Holds
    );

    pass(4, "swap on Z^2, cross difference");
}

/// Criterion 5: the order-two scaling `shift -> -shift` with the two-sided
/// sum operator.  Symmetric solutions are supported on the even sublattice,
/// which is exactly the invariant sublattice of index 2.
#[test]
fn criterion_05_sign_scaling_even_support() {
    let spec = load_spec("sign-scaling-sum.toml");
    let sample = spec.sample_window();
    let basis =
        symmetric_solution_basis(&spec.presentation, &spec.group, &sample, &spec.pads).unwrap();
    assert_eq!(basis.len(), 1);
    for f in &basis {
        for x in sample.points() {
            if x.0[0].rem_euclid(2) == 1 {
                assert!(
                    f.value(0, x).unwrap().is_zero(),
                    "symmetric solution vanishes at odd point {:?}",
                    x
                );
            }
        }
    }

    let s = invariant_sublattice(&spec.group).unwrap();
    assert_eq!(s.basis(), &[vec![2]]);
    assert_eq!(sublattice_index(&s).unwrap(), 2);

    pass(5, "sign scaling, even support");
}

/// Criterion 6: every bundled proper invariant system admits at least one
/// symmetric solution on every scheduled window.
#[test]
fn criterion_06_proper_invariant_systems_have_symmetric_solutions() {
    for name in INVARIANT_PROBLEMS {
        let spec = load_spec(name);
        let report = symmetric_dimension(
            &spec.presentation,
            &spec.group,
            &spec.windows(),
            &spec.pads,
            spec.stability_runs,
        )
        .unwrap();
        assert!(!report.improper, "{name} presents a proper submodule");
        for entry in &report.entries {
            assert!(
                entry.quotient_dim >= 1,
                "{name} has a symmetric solution on {}",
                entry.label
            );
        }
    }
    pass(6, "proper invariant systems stay solvable");
}

// ---------------------------------------------------------------------------
// Randomized cross-checks: a deterministic generator for small invariant
// instances, shared by criteria 7 and 8.
// ---------------------------------------------------------------------------

/// SplitMix64: deterministic, seedable, no external dependency.
struct Rng(u64);

impl Rng {
    fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }
}

fn aut(r: Vec<Cyclotomic>, m: Vec<Vec<i64>>) -> AutElement {
    AutElement::new(r, m).unwrap()
}

fn root(conductor: u32, j: i64) -> Cyclotomic {
    Cyclotomic::root_of_unity(conductor, j)
}

/// Small groups on `Z`: reflections, scalings of order up to 6, and their
/// twists.  Every matrix is a signed permutation, so norm balls stay closed.
fn line_groups() -> Vec<GroupTable> {
    let cases: Vec<(u32, Vec<AutElement>)> = vec![
        (1, vec![aut(vec![Cyclotomic::one(1)], vec![vec![-1]])]),
        (2, vec![aut(vec![root(2, 1)], vec![vec![1]])]),
        (3, vec![aut(vec![root(3, 1)], vec![vec![1]])]),
        (4, vec![aut(vec![root(4, 1)], vec![vec![1]])]),
        (6, vec![aut(vec![root(6, 1)], vec![vec![1]])]),
        (12, vec![aut(vec![root(12, 2)], vec![vec![1]])]),
        (4, vec![aut(vec![root(4, 1)], vec![vec![-1]])]),
        (
            2,
            vec![
                aut(vec![Cyclotomic::one(2)], vec![vec![-1]]),
                aut(vec![root(2, 1)], vec![vec![1]]),
            ],
        ),
    ];
    cases
        .into_iter()
        .map(|(_, gens)| generate_group(&gens, 16).unwrap())
        .collect()
}

/// Small groups on `Z^2` built from signed permutation matrices and root
/// scalings, with orders from 2 to 8.
fn plane_groups() -> Vec<GroupTable> {
    let swap = vec![vec![0, 1], vec![1, 0]];
    let rot = vec![vec![0, -1], vec![1, 0]];
    let flip = vec![vec![-1, 0], vec![0, -1]];
    let id = vec![vec![1, 0], vec![0, 1]];
    let one = |c: u32| vec![Cyclotomic::one(c); 2];
    let cases: Vec<Vec<AutElement>> = vec![
        vec![aut(one(1), swap.clone())],
        vec![aut(one(1), flip.clone())],
        vec![aut(one(1), rot.clone())],
        vec![aut(one(1), swap.clone()), aut(one(1), flip.clone())],
        vec![aut(one(1), rot.clone()), aut(one(1), swap.clone())],
        vec![aut(vec![root(3, 1), root(3, 2)], id.clone())],
        vec![aut(vec![root(4, 1), root(4, 3)], swap.clone())],
        vec![
            aut(vec![root(2, 1), root(2, 1)], id.clone()),
            aut(one(2), swap.clone()),
        ],
    ];
    cases
        .into_iter()
        .map(|gens| generate_group(&gens, 16).unwrap())
        .collect()
}

fn random_coefficient(rng: &mut Rng, conductor: u32) -> Cyclotomic {
    let pool = if conductor == 1 { 4 } else { 6 };
    match rng.below(pool) {
        0 => Cyclotomic::from_integer(conductor, 1),
        1 => Cyclotomic::from_integer(conductor, -1),
        2 => Cyclotomic::from_integer(conductor, 2),
        3 => Cyclotomic::from_rational(conductor, rational(1, 2)),
        4 => root(conductor, 1),
        _ => root(conductor, 1)
            .add(&Cyclotomic::one(conductor))
            .unwrap(),
    }
}

fn random_poly(rng: &mut Rng, n: usize, conductor: u32) -> LaurentPoly {
    let terms = 1 + rng.below(3);
    let spread = if n == 1 { 2i64 } else { 1 };
    let mut collected = vec![];
    for _ in 0..terms {
        let e = Exponent(
            (0..n)
                .map(|_| rng.below((2 * spread + 1) as usize) as i64 - spread)
                .collect(),
        );
        collected.push((e, random_coefficient(rng, conductor)));
    }
    LaurentPoly::from_terms(n, conductor, collected).unwrap()
}

/// A presentation made invariant by construction: random seed vectors,
/// closed under the whole group action.
fn symmetrized_presentation(
    rng: &mut Rng,
    group: &GroupTable,
    n: usize,
    k: usize,
) -> ModulePresentation {
    let conductor = group.conductor();
    let seeds = 1 + rng.below(2);
    let mut generators = vec![];
    for _ in 0..seeds {
        let entries: Vec<LaurentPoly> = (0..k).map(|_| random_poly(rng, n, conductor)).collect();
        let v = ModuleVector::new(entries).unwrap();
        for g in group.elements() {
            generators.push(apply_to_vector(g, &v).unwrap());
        }
    }
    ModulePresentation::new(n, k, conductor, generators).unwrap()
}

/// One cross-checked instance: the three full-space fixed-dimension routes
/// must agree, and the three symmetric-solution routes (joint annihilator,
/// character quotient, brute-force dual) must agree including digests.
/// Returns the number of character evaluations that produced an integer.
fn cross_check(
    p: &ModulePresentation,
    group: &GroupTable,
    w: &Window,
    pads: &[i64],
) -> usize {
    let w = orbit_close(w, group);
    let wb = WindowBasis::new(w.clone(), p.k());
    let full = SubspaceBasis::full(wb.clone(), p.conductor());

    let by_character = fixed_dim_by_character(group, &full).unwrap();
    let by_reynolds = reynolds_fixed_space(group, &full).unwrap().dim();
    let by_brute = brute_fixed_dim(group, &wb).unwrap();
    assert_eq!(by_character, by_reynolds, "character vs averaging");
    assert_eq!(by_character, by_brute, "character vs stacked kernels");

    let (p_w, pad_used, _) = stabilize_submodule_window(p, &w, pads).unwrap();
    let sub_fixed = fixed_dim_by_character(group, &p_w).unwrap();
    let quotient = by_character - sub_fixed;
    assert_eq!(
        quotient,
        quotient_fixed_dim_via_projector(group, &p_w).unwrap(),
        "character difference vs quotient projector"
    );

    let primal = symmetric_solution_basis(p, group, &w, pads).unwrap();
    let brute = brute_symmetric_solutions(p, group, &w, pad_used).unwrap();
    assert_eq!(primal.len(), quotient, "solution basis vs quotient");
    assert_eq!(primal.len(), brute.dimension, "solution basis vs brute dual");
    let rows: Vec<Vec<Cyclotomic>> = primal.iter().map(|f| f.values().to_vec()).collect();
    assert_eq!(
        canonical_digest(&rows),
        brute.basis_hash,
        "canonical bases differ between the two solution routes"
    );

    // character, reynolds-implied, subspace, projector
    4
}

/// Criterion 7: route agreement on every bundled invariant problem and on
/// at least one hundred randomized small instances.
#[test]
fn criterion_07_routes_agree_everywhere() {
    for name in INVARIANT_PROBLEMS {
        let spec = load_spec(name);
        for w in spec.windows() {
            cross_check(&spec.presentation, &spec.group, &w, &spec.pads);
        }
    }

    let mut rng = Rng(0x5EED_CAFE);
    let line = line_groups();
    let plane = plane_groups();
    let mut checked = 0usize;

    for _ in 0..78 {
        let group = &line[rng.below(line.len())];
        let k = if rng.below(4) == 0 { 2 } else { 1 };
        let p = symmetrized_presentation(&mut rng, group, 1, k);
        let radius = 1 + rng.below(4) as i64;
        let w = ball_window(1, radius, Norm::Linf);
        cross_check(&p, group, &w, &[2, 3, 4]);
        checked += 1;
    }
    for _ in 0..32 {
        let group = &plane[rng.below(plane.len())];
        let p = symmetrized_presentation(&mut rng, group, 2, 1);
        let radius = 1 + rng.below(2) as i64;
        let norm = if rng.below(2) == 0 { Norm::L1 } else { Norm::Linf };
        let w = ball_window(2, radius, norm);
        cross_check(&p, group, &w, &[2, 3]);
        checked += 1;
    }

    assert!(checked >= 100, "at least one hundred randomized instances");
    pass(7, "all routes agree, bundled and randomized");
}

/// Criterion 8: every character-averaged dimension encountered across the
/// bundled problems and a randomized sweep is a nonnegative integer — the
/// computations return `Ok(usize)` and never an integrality error.
#[test]
fn criterion_08_character_averages_are_integers() {
    let mut evaluations = 0usize;

    for name in INVARIANT_PROBLEMS {
        let spec = load_spec(name);
        for w in spec.windows() {
            let w = orbit_close(&w, &spec.group);
            let full = SubspaceBasis::full(WindowBasis::new(w.clone(), spec.k), spec.conductor);
            let (p_w, _, _) =
                stabilize_submodule_window(&spec.presentation, &w, &spec.pads).unwrap();
            let a = fixed_dim_by_character(&spec.group, &full)
                .expect("window character average is integral");
            let b = fixed_dim_by_character(&spec.group, &p_w)
                .expect("submodule character average is integral");
            assert!(b <= a, "fixed subspace fits inside the fixed window");
            evaluations += 2;
        }
    }

    let mut rng = Rng(0xA11_0F_1);
    for group in line_groups().iter().chain(plane_groups().iter()) {
        let n = group.n();
        let radius = if n == 1 { 3 } else { 2 };
        let w = orbit_close(&ball_window(n, radius, Norm::Linf), group);
        let full = SubspaceBasis::full(WindowBasis::new(w.clone(), 1), group.conductor());
        fixed_dim_by_character(group, &full).expect("full window average is integral");
        let p = symmetrized_presentation(&mut rng, group, n, 1);
        let (p_w, _, _) = stabilize_submodule_window(&p, &w, &[2, 3]).unwrap();
        fixed_dim_by_character(group, &p_w).expect("submodule average is integral");
        evaluations += 2;
    }

    assert!(evaluations >= 40);
    pass(8, "character averages are nonnegative integers");
}

/// Criterion 9: the binary reports a non-invariant system as a clean
/// verdict (exit 0 with violations) and a non-torsion scaling as exit 3
/// with an explanatory note.
#[test]
fn criterion_09_binary_flags_negative_cases() {
    let path = problem_path("neg-noninvariant.toml");
    let out = run_cli(&[
        "check-invariance",
        path.to_str().unwrap(),
        "--format",
        "machine",
    ]);
    assert_eq!(out.status.code(), Some(0), "verdict reporting is not an error");
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["invariance"]["invariant"], serde_json::json!(false));
    assert!(
        !v["invariance"]["violations"].as_array().unwrap().is_empty(),
        "violations are listed"
    );

    let path = problem_path("neg-nontorsion.toml");
    let out = run_cli(&["sublattice", path.to_str().unwrap(), "--format", "machine"]);
    assert_eq!(out.status.code(), Some(3), "non-torsion scaling exits 3");
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v.get("sublattice").is_none(), "no sublattice is reported");
    let notes = v["notes"].as_array().unwrap();
    assert!(
        notes.iter().any(|n| n.as_str().unwrap().contains("root of unity")),
        "the note explains the failure"
    );

    pass(9, "binary exit codes for negative cases");
}

/// Criterion 10: machine-format output is byte-identical across repeat
/// runs, for every bundled problem (including the failing ones, whose
/// stderr and exit codes must also repeat exactly).
#[test]
fn criterion_10_machine_output_is_deterministic() {
    for name in ALL_PROBLEMS {
        let path = problem_path(name);
        let args = ["full", path.to_str().unwrap(), "--format", "machine"];
        let first = run_cli(&args);
        let second = run_cli(&args);
        assert_eq!(
            first.status.code(),
            second.status.code(),
            "{name}: exit codes repeat"
        );
        assert_eq!(first.stdout, second.stdout, "{name}: stdout repeats");
        assert_eq!(first.stderr, second.stderr, "{name}: stderr repeats");
    }
    pass(10, "machine output byte-determinism");
}
