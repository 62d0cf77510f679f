//! Seeded randomized campaigns, named scenarios, and margin mining.
//!
//! A campaign is fully determined by its config: every trial derives its own
//! generator from `(seed, dim, trial index)`, so results are identical
//! across replays and thread counts. Proved checks must come back with zero
//! violations (that is the build's standing regression gate); probe checks
//! report margins, and any negative margin serializes the instance for
//! standalone replay.

use std::collections::BTreeMap;

use num_traits::{One, Signed};
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bodies::{
    construct, cross_polytope, random_symmetric_polytope, segment, zonotope, BodySpec, PRNG_NAME,
};
use crate::checks::{
    check_corollary_1_6, check_corollary_3_3, check_est_chain, check_holder, check_invariance,
    check_lemma_3_1, check_logbm_conjecture, check_minkowski_first, check_minkowski_second,
    check_prop_6_1, check_prop_6_2_pair, check_theorem_1_4, check_theorem_1_5, check_theorem_1_7,
    check_zonotope_decomposition, demo_false_inequality, CheckCtx, CheckId,
};
use crate::error::LabError;
use crate::linalg::{Matrix, Vector};
use crate::polytope::Polytope;
use crate::rat::{rat, rat_int, Rat};
use crate::report::{CheckKind, CheckReport, Mode, Tolerances};
use crate::seminorm::SemiNorm;

/// Margin below which a probe instance is flagged for exact re-examination.
pub const NEAR_EQUALITY_MARGIN: f64 = 1e-6;

/// Where the second body of a trial comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum MSource {
    RandomPolytope,
    Zonotope,
    CrossPolytope,
    ScaledK,
    Segment,
}

/// Which random semi-norms a trial draws.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum NormFamily {
    Max { size: usize },
    Sum { size: usize },
    /// Alternates between max- and sum-form.
    Mixed { size: usize },
}

fn default_point_budget() -> usize {
    8
}
fn default_coord_bound() -> i64 {
    5
}
fn default_norm_family() -> NormFamily {
    NormFamily::Mixed { size: 2 }
}
fn default_m_source() -> MSource {
    MSource::RandomPolytope
}
fn default_mode() -> Mode {
    Mode::Exact
}

/// Full description of a campaign; replayable.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct CampaignConfig {
    pub dims: Vec<usize>,
    pub trials_per_dim: usize,
    #[serde(default = "default_point_budget")]
    pub point_budget: usize,
    #[serde(default = "default_coord_bound")]
    pub coord_bound: i64,
    pub seed: u64,
    /// Checker names (`theorem_1_4`, `est_chain`/`est-chain`, ...).
    pub checks: Vec<String>,
    #[serde(default = "default_mode")]
    pub mode: Mode,
    #[serde(default)]
    pub tolerances: Tolerances,
    #[serde(default = "default_norm_family")]
    pub norm_family: NormFamily,
    #[serde(default = "default_m_source")]
    pub m_source: MSource,
}

impl CampaignConfig {
    pub fn from_json(s: &str) -> Result<CampaignConfig, LabError> {
        serde_json::from_str(s).map_err(|e| LabError::Parse(format!("campaign config: {e}")))
    }

    pub fn check_ids(&self) -> Result<Vec<CheckId>, LabError> {
        self.checks
            .iter()
            .map(|name| {
                CheckId::parse(name)
                    .ok_or_else(|| LabError::Parse(format!("checks: unknown check '{name}'")))
            })
            .collect()
    }

    pub fn validate(&self) -> Result<Vec<CheckId>, LabError> {
        let ids = self.check_ids()?;
        if self.dims.is_empty() || self.trials_per_dim == 0 {
            return Err(LabError::Parse(
                "dims and trialsPerDim must be nonempty/nonzero".into(),
            ));
        }
        for &d in &self.dims {
            if d < 2 {
                return Err(LabError::Parse("dims: entries must be at least 2".into()));
            }
            for id in &ids {
                if d < id.min_dim() {
                    return Err(LabError::Parse(format!(
                        "checks: {} needs dimension at least {}, but dims contains {d}",
                        id.name(),
                        id.min_dim()
                    )));
                }
            }
        }
        if self.point_budget < *self.dims.iter().max().unwrap() {
            return Err(LabError::Parse(
                "pointBudget must be at least the largest dimension".into(),
            ));
        }
        if self.coord_bound < 1 {
            return Err(LabError::Parse("coordBound must be at least 1".into()));
        }
        if ids.contains(&CheckId::EstChain) && self.m_source == MSource::Segment {
            return Err(LabError::Parse(
                "checks: est_chain needs a full-dimensional M; mSource 'segment' cannot supply one"
                    .into(),
            ));
        }
        Ok(ids)
    }

    pub fn ctx(&self) -> CheckCtx {
        CheckCtx {
            mode: self.mode,
            tol: self.tolerances,
        }
    }
}

/// Aggregate results for one check across a campaign.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckStats {
    pub trials: usize,
    /// `holds = false` verdicts. Zero for every proved check in a correct
    /// build; probe verdicts land here as data.
    pub violations: usize,
    /// Proved statements that failed or exact routes that disagreed.
    pub internal_inconsistencies: usize,
    pub equality_count: usize,
    /// Minimum relative margin seen (float rendering of exact values).
    pub min_relative_margin: Option<f64>,
}

/// A serialized probe instance with a negative margin, sufficient to replay
/// the check bit-for-bit.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CandidateInstance {
    pub check: String,
    pub dim: usize,
    pub trial: usize,
    pub seed: u64,
    pub k: BodySpec,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<BodySpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub args: BTreeMap<String, String>,
    pub lhs: String,
    pub rhs: String,
    pub relative_margin: String,
}

/// Campaign outcome. `wall_time_ms` is observational and excluded from the
/// serialized form so identical configs produce identical bytes; report
/// writers put it in their header instead.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CampaignSummary {
    pub prng: String,
    pub seed: u64,
    pub per_check: BTreeMap<String, CheckStats>,
    pub counterexample_candidates: Vec<CandidateInstance>,
    #[serde(skip)]
    pub wall_time_ms: u128,
}

/// Deterministic per-trial seed: a splitmix64-style mix of the campaign
/// seed, the dimension, and the trial index.
fn trial_seed(seed: u64, dim: usize, trial: usize) -> u64 {
    let mut x = seed
        ^ (dim as u64).wrapping_mul(0x9e3779b97f4a7c15)
        ^ (trial as u64).wrapping_mul(0xbf58476d1ce4e5b9);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d049bb133111eb);
    x ^ (x >> 31)
}

fn random_nonzero_vector(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> Vector {
    loop {
        let v = Vector::from_ints(
            &(0..n)
                .map(|_| rng.random_range(-bound..=bound))
                .collect::<Vec<_>>(),
        );
        if !v.is_zero() {
            return v;
        }
    }
}

fn random_norm(rng: &mut ChaCha8Rng, family: NormFamily, n: usize, bound: i64, trial: usize) -> SemiNorm {
    let (max_form, size) = match family {
        NormFamily::Max { size } => (true, size),
        NormFamily::Sum { size } => (false, size),
        NormFamily::Mixed { size } => (trial.is_multiple_of(2), size),
    };
    let size = size.max(1);
    if max_form {
        SemiNorm::Max {
            vectors: (0..size)
                .map(|_| random_nonzero_vector(rng, n, bound))
                .collect(),
        }
    } else {
        SemiNorm::Sum {
            terms: (0..size)
                .map(|_| {
                    let alpha = rat(rng.random_range(1..=4), rng.random_range(1..=3));
                    (alpha, random_nonzero_vector(rng, n, bound))
                })
                .collect(),
        }
    }
}

/// Everything a trial might need, generated in a fixed order so the checks
/// list never influences the instances.
struct TrialInstance {
    dim: usize,
    trial: usize,
    seed: u64,
    k: Polytope,
    m: Polytope,
    u: Vector,
    v: Vector,
    w: Vector,
    norm: SemiNorm,
    generators: Vec<Vector>,
    axes: (usize, usize),
    t_list: Vec<Rat>,
}

fn generate_trial(
    config: &CampaignConfig,
    dim: usize,
    trial: usize,
) -> Result<TrialInstance, LabError> {
    let seed = trial_seed(config.seed, dim, trial);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = random_symmetric_polytope(dim, config.point_budget, rng.next_u64(), config.coord_bound)?;
    let u = random_nonzero_vector(&mut rng, dim, config.coord_bound);
    let v = random_nonzero_vector(&mut rng, dim, config.coord_bound);
    let w = loop {
        let cand = random_nonzero_vector(&mut rng, dim, config.coord_bound);
        if Matrix::from_row_vectors(&[v.clone(), cand.clone()]).rank() == 2 {
            break cand;
        }
    };
    let norm = random_norm(&mut rng, config.norm_family, dim, config.coord_bound, trial);
    let m = match config.m_source {
        MSource::RandomPolytope => random_symmetric_polytope(
            dim,
            config.point_budget,
            rng.next_u64(),
            config.coord_bound,
        )?,
        MSource::Zonotope => {
            // redraw until full-dimensional, mirroring the random-hull retry
            let mut attempts = 0;
            loop {
                let count = rng.random_range(dim..=dim + 1);
                let gens: Vec<Vector> = (0..count)
                    .map(|_| random_nonzero_vector(&mut rng, dim, config.coord_bound))
                    .collect();
                let z = zonotope(&gens)?;
                if z.is_full_dim() {
                    break z;
                }
                attempts += 1;
                if attempts >= crate::bodies::RANDOM_BODY_RETRY_LIMIT {
                    return Err(LabError::RetryExhausted(attempts));
                }
            }
        }
        MSource::CrossPolytope => cross_polytope(dim)?,
        MSource::ScaledK => {
            let lambda = rat(rng.random_range(1..=5), rng.random_range(1..=5));
            k.scale(&lambda)
        }
        MSource::Segment => segment(&random_nonzero_vector(&mut rng, dim, config.coord_bound))?,
    };
    let mut generators = vec![random_nonzero_vector(&mut rng, dim, config.coord_bound)];
    while generators.len() < 2 {
        let cand = random_nonzero_vector(&mut rng, dim, config.coord_bound);
        if !cand.is_parallel(&generators[0]) {
            generators.push(cand);
        }
    }
    let axes = if dim >= 3 {
        let i = rng.random_range(1..=dim);
        let j = loop {
            let j = rng.random_range(1..=dim);
            if j != i {
                break j;
            }
        };
        (i, j)
    } else {
        (1, 2)
    };
    Ok(TrialInstance {
        dim,
        trial,
        seed,
        k,
        m,
        u,
        v,
        w,
        norm,
        generators,
        axes,
        t_list: vec![rat_int(1), rat_int(2), rat_int(3)],
    })
}

fn run_check(
    id: CheckId,
    inst: &TrialInstance,
    ctx: CheckCtx,
) -> Result<CheckReport, LabError> {
    match id {
        CheckId::Theorem14 => check_theorem_1_4(&inst.k, &inst.norm, ctx),
        CheckId::Theorem17 => check_theorem_1_7(&inst.k, &inst.v, ctx),
        CheckId::Lemma31 => check_lemma_3_1(&inst.k, &inst.u, ctx),
        CheckId::Corollary33 => check_corollary_3_3(&inst.k, &inst.u, &inst.v, ctx),
        CheckId::Theorem15 => check_theorem_1_5(&inst.k, &inst.norm, ctx),
        CheckId::Corollary16 => check_corollary_1_6(&inst.k, &inst.m, ctx),
        CheckId::MinkowskiSecond => check_minkowski_second(&inst.k, &inst.m, ctx),
        CheckId::MinkowskiFirst => check_minkowski_first(&inst.k, &inst.m, ctx),
        CheckId::Holder => check_holder(&inst.k, &inst.m, ctx),
        CheckId::EstChain => check_est_chain(&inst.k, &inst.m, ctx),
        CheckId::Invariance => check_invariance(&inst.k, &inst.m, &inst.t_list, ctx),
        CheckId::LogbmConjecture => check_logbm_conjecture(&inst.k, &inst.m, ctx),
        CheckId::Prop61 => check_prop_6_1(&inst.k, inst.axes.0, inst.axes.1, ctx),
        CheckId::Prop62Pair => check_prop_6_2_pair(&inst.k, &inst.v, &inst.w, ctx),
        CheckId::ZonotopeDecomposition => {
            check_zonotope_decomposition(&inst.k, &inst.generators, ctx)
        }
        CheckId::FalseInequality => demo_false_inequality(inst.dim, ctx),
    }
}

struct TrialOutcome {
    dim: usize,
    trial: usize,
    seed: u64,
    results: Vec<(CheckId, Result<CheckReport, LabError>, Option<CandidateInstance>)>,
}

fn candidate_from(
    id: CheckId,
    inst: &TrialInstance,
    report: &CheckReport,
) -> CandidateInstance {
    let mut args = BTreeMap::new();
    match id {
        CheckId::Prop61 => {
            args.insert("i".into(), inst.axes.0.to_string());
            args.insert("j".into(), inst.axes.1.to_string());
        }
        CheckId::Prop62Pair => {
            args.insert("v".into(), inst.v.render().join(","));
            args.insert("w".into(), inst.w.render().join(","));
        }
        _ => {}
    }
    let m = match id {
        CheckId::LogbmConjecture => Some(BodySpec::from_polytope(&inst.m)),
        CheckId::Prop61 => None,
        _ => None,
    };
    CandidateInstance {
        check: id.name().into(),
        dim: inst.dim,
        trial: inst.trial,
        seed: inst.seed,
        k: BodySpec::from_polytope(&inst.k),
        m,
        args,
        lhs: report.lhs.render(),
        rhs: report.rhs.render(),
        relative_margin: report.relative_margin.render(),
    }
}

/// Runs the configured checks over the seeded trial stream. Deterministic
/// for a fixed config regardless of thread count. Any internal
/// inconsistency aborts with the offending serialized instance.
pub fn run_campaign(config: &CampaignConfig) -> Result<CampaignSummary, LabError> {
    let ids = config.validate()?;
    let ctx = config.ctx();
    let start = std::time::Instant::now();

    let mut keys = Vec::new();
    for &dim in &config.dims {
        for trial in 0..config.trials_per_dim {
            keys.push((dim, trial));
        }
    }

    let outcomes: Vec<Result<TrialOutcome, LabError>> = keys
        .par_iter()
        .map(|&(dim, trial)| {
            let inst = generate_trial(config, dim, trial)?;
            let results = ids
                .iter()
                .map(|&id| {
                    let res = run_check(id, &inst, ctx).map_err(|e| match e {
                        // attach the serialized instance to inconsistencies
                        LabError::InternalInconsistency { check, message } => {
                            LabError::InternalInconsistency {
                                check,
                                message: format!(
                                    "{message}; instance K = {}, M = {}",
                                    BodySpec::from_polytope(&inst.k).to_json(),
                                    BodySpec::from_polytope(&inst.m).to_json()
                                ),
                            }
                        }
                        other => other,
                    });
                    let candidate = match &res {
                        Ok(report)
                            if id.kind() == CheckKind::Probe
                                && !report.holds
                                && id != CheckId::FalseInequality =>
                        {
                            Some(candidate_from(id, &inst, report))
                        }
                        _ => None,
                    };
                    (id, res, candidate)
                })
                .collect();
            Ok(TrialOutcome {
                dim,
                trial,
                seed: inst.seed,
                results,
            })
        })
        .collect();

    let mut per_check: BTreeMap<String, CheckStats> = BTreeMap::new();
    let mut candidates = Vec::new();
    let mut first_inconsistency: Option<String> = None;
    for outcome in outcomes {
        let outcome = outcome?;
        for (id, res, candidate) in outcome.results {
            let stats = per_check.entry(id.name().to_string()).or_default();
            stats.trials += 1;
            match res {
                Ok(report) => {
                    if !report.holds {
                        stats.violations += 1;
                    }
                    if report.equality {
                        stats.equality_count += 1;
                    }
                    let margin = report.relative_margin.to_f64();
                    stats.min_relative_margin = Some(match stats.min_relative_margin {
                        Some(m) if m <= margin => m,
                        _ => margin,
                    });
                    if let Some(c) = candidate {
                        candidates.push(c);
                    }
                }
                Err(LabError::InternalInconsistency { check, message }) => {
                    stats.internal_inconsistencies += 1;
                    if first_inconsistency.is_none() {
                        first_inconsistency = Some(format!(
                            "{check}: {message} [dim={}, trial={}, trialSeed={}]",
                            outcome.dim, outcome.trial, outcome.seed
                        ));
                    }
                }
                Err(other) => return Err(other),
            }
        }
    }
    if let Some(msg) = first_inconsistency {
        return Err(LabError::inconsistency("run_campaign", msg));
    }
    Ok(CampaignSummary {
        prng: PRNG_NAME.into(),
        seed: config.seed,
        per_check,
        counterexample_candidates: candidates,
        wall_time_ms: start.elapsed().as_millis(),
    })
}

/// Re-runs a serialized candidate standalone in exact mode, returning the
/// fresh report. The audit property: lhs, rhs, and margin reproduce
/// verbatim.
pub fn replay_candidate(c: &CandidateInstance) -> Result<CheckReport, LabError> {
    let id = CheckId::parse(&c.check)
        .ok_or_else(|| LabError::Parse(format!("unknown check '{}'", c.check)))?;
    let k = construct(&c.k)?;
    let ctx = CheckCtx::exact();
    match id {
        CheckId::LogbmConjecture => {
            let m = construct(
                c.m.as_ref()
                    .ok_or_else(|| LabError::Parse("candidate is missing M".into()))?,
            )?;
            check_logbm_conjecture(&k, &m, ctx)
        }
        CheckId::Prop61 => {
            let parse_axis = |key: &str| -> Result<usize, LabError> {
                c.args
                    .get(key)
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| LabError::Parse(format!("candidate is missing axis '{key}'")))
            };
            check_prop_6_1(&k, parse_axis("i")?, parse_axis("j")?, ctx)
        }
        CheckId::Prop62Pair => {
            let parse_vec = |key: &str| -> Result<Vector, LabError> {
                let s = c
                    .args
                    .get(key)
                    .ok_or_else(|| LabError::Parse(format!("candidate is missing '{key}'")))?;
                Vector::parse(&s.split(',').map(str::to_string).collect::<Vec<_>>())
            };
            check_prop_6_2_pair(&k, &parse_vec("v")?, &parse_vec("w")?, ctx)
        }
        other => Err(LabError::Parse(format!(
            "check '{}' does not produce candidates",
            other.name()
        ))),
    }
}

// ---------------------------------------------------------------------------
// hexagon scenario
// ---------------------------------------------------------------------------

/// One grid point of the hexagon-prism scenario.
#[derive(Clone, Debug)]
pub struct HexagonRow {
    pub epsilon: Rat,
    pub aggregate: CheckReport,
    pub pairwise: CheckReport,
}

#[derive(Clone, Debug)]
pub struct HexagonScenario {
    pub rows: Vec<HexagonRow>,
    /// Grid points where the aggregate holds but the pairwise bound fails.
    pub split_epsilons: Vec<Rat>,
    /// False when no grid point exhibits the split (scenario inconclusive).
    pub conclusive: bool,
}

/// Symmetric hexagon `H_ε`: the square `[-1,1]²` with the corners `(1,1)`
/// and `(-1,-1)` chamfered by `ε`. Vertices
/// `±(1, 1-ε), ±(1-ε, 1), ±(-1, 1)`; `ε = 0` degenerates to the square.
pub fn hexagon(epsilon: &Rat) -> Result<Polytope, LabError> {
    if epsilon.is_negative() || *epsilon >= rat_int(2) {
        return Err(LabError::DegenerateInput(
            "hexagon parameter must lie in [0, 2)".into(),
        ));
    }
    let one = Rat::one();
    let c = &one - epsilon;
    let pts = [
        Vector::new(vec![one.clone(), c.clone()]),
        Vector::new(vec![c.clone(), one.clone()]),
        Vector::new(vec![-one.clone(), one.clone()]),
    ];
    let mut all = Vec::new();
    for p in pts {
        all.push(p.neg());
        all.push(p);
    }
    Polytope::convex_hull(&all)
}

/// The prism `H_ε × [-1, 1]` in ℝ³.
pub fn hexagon_prism(epsilon: &Rat) -> Result<Polytope, LabError> {
    let hex = hexagon(epsilon)?;
    let mut pts = Vec::new();
    for v in hex.vertices() {
        for z in [rat_int(1), rat_int(-1)] {
            let mut coords = v.coords().to_vec();
            coords.push(z);
            pts.push(Vector::new(coords));
        }
    }
    Polytope::convex_hull(&pts)
}

/// Scans hexagon prisms `H_ε × [-1,1]` over an ε grid, evaluating the
/// two-direction aggregate probe and the pairwise bound for `(e₁, e₂)`.
/// The expected qualitative split: the aggregate holds on the whole grid
/// while the pairwise bound fails for every ε > 0.
pub fn hexagon_scenario(ctx: CheckCtx) -> Result<HexagonScenario, LabError> {
    let grid = [rat_int(0), rat(1, 10), rat(1, 5), rat(1, 3)];
    let mut rows = Vec::new();
    let mut split = Vec::new();
    for epsilon in grid {
        let k = hexagon_prism(&epsilon)?;
        let aggregate = check_prop_6_1(&k, 1, 2, ctx)?;
        let pairwise = check_prop_6_2_pair(
            &k,
            &Vector::unit(3, 0),
            &Vector::unit(3, 1),
            ctx,
        )?;
        if aggregate.holds && !pairwise.holds {
            split.push(epsilon.clone());
        }
        rows.push(HexagonRow {
            epsilon,
            aggregate,
            pairwise,
        });
    }
    let conclusive = !split.is_empty();
    Ok(HexagonScenario {
        rows,
        split_epsilons: split,
        conclusive,
    })
}

// ---------------------------------------------------------------------------
// margin study
// ---------------------------------------------------------------------------

/// One probe instance with its slack.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct MarginRow {
    pub check: String,
    pub dim: usize,
    pub trial: usize,
    pub relative_margin: f64,
    pub relative_margin_exact: String,
    pub equality: bool,
    /// Within [`NEAR_EQUALITY_MARGIN`] of equality without reaching it.
    pub near_equality: bool,
}

/// Runs the probe checks of the config and lists per-instance margins in
/// ascending order, to surface near-equality instances.
pub fn margin_study(config: &CampaignConfig) -> Result<Vec<MarginRow>, LabError> {
    let ids: Vec<CheckId> = config
        .validate()?
        .into_iter()
        .filter(|id| id.kind() == CheckKind::Probe)
        .collect();
    if ids.is_empty() {
        return Err(LabError::Parse(
            "margin study needs at least one probe check".into(),
        ));
    }
    let ctx = config.ctx();
    let mut keys = Vec::new();
    for &dim in &config.dims {
        for trial in 0..config.trials_per_dim {
            keys.push((dim, trial));
        }
    }
    let rows: Vec<Result<Vec<MarginRow>, LabError>> = keys
        .par_iter()
        .map(|&(dim, trial)| {
            let inst = generate_trial(config, dim, trial)?;
            ids.iter()
                .map(|&id| {
                    let report = run_check(id, &inst, ctx)?;
                    let margin = report.relative_margin.to_f64();
                    Ok(MarginRow {
                        check: id.name().into(),
                        dim,
                        trial,
                        relative_margin: margin,
                        relative_margin_exact: report.relative_margin.render(),
                        equality: report.equality,
                        near_equality: !report.equality && margin.abs() < NEAR_EQUALITY_MARGIN,
                    })
                })
                .collect()
        })
        .collect();
    let mut flat = Vec::new();
    for r in rows {
        flat.extend(r?);
    }
    flat.sort_by(|a, b| {
        a.relative_margin
            .partial_cmp(&b.relative_margin)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(a.check.cmp(&b.check))
            .then(a.dim.cmp(&b.dim))
            .then(a.trial.cmp(&b.trial))
    });
    Ok(flat)
}
