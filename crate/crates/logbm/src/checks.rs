//! One checker per inequality or identity.
//!
//! Checkers split at the type level into two families:
//!
//! * **Proved** statements must hold on every valid input. A false verdict
//!   (or a disagreement between two exact routes) returns
//!   [`LabError::InternalInconsistency`]; it is never a finding.
//! * **Probe** statements are conjectural or conditional. Their verdicts are
//!   data: a negative margin flags a counterexample candidate and serializes
//!   the instance for replay, and the run still succeeds.
//!
//! Equality flags of the proved inequalities are cross-validated against
//! purely combinatorial detectors on merged facet normals (cylinder and
//! collinearity structure); in exact mode a disagreement is an internal
//! inconsistency.

use num_traits::{One, Signed, Zero};

use crate::bodies::{cross_polytope, segment, square2d, zonotope};
use crate::error::LabError;
use crate::functionals::{
    cauchy_projection, first_mixed_volume, logbm_gap, mixed_volume_pair, mixed_volumes,
    surface_linear, surface_quadratic, weighted_surface_quadratic,
};
use crate::linalg::{Matrix, Vector};
use crate::polytope::{require_symmetric_body, Polytope};
use crate::projection::{central_section_volume, complement_basis, subspace_projection_volume};
use crate::radical::Radical;
use crate::rat::{pow_rat, rat_int, rat_to_f64, render_rat, Rat};
use crate::report::{CheckKind, CheckReport, Mode, Tolerances, Value};
use crate::seminorm::SemiNorm;
use crate::BodySpec;

/// How a checker decides and reports.
#[derive(Clone, Copy, Debug)]
pub struct CheckCtx {
    pub mode: Mode,
    pub tol: Tolerances,
}

impl Default for CheckCtx {
    fn default() -> Self {
        CheckCtx {
            mode: Mode::Exact,
            tol: Tolerances::default(),
        }
    }
}

impl CheckCtx {
    pub fn exact() -> Self {
        Self::default()
    }

    pub fn float(tol: Tolerances) -> Self {
        CheckCtx {
            mode: Mode::Float,
            tol,
        }
    }
}

/// Identifiers of every registered checker (campaign and CLI facing names).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckId {
    Theorem14,
    Theorem17,
    Lemma31,
    Corollary33,
    Theorem15,
    Corollary16,
    MinkowskiSecond,
    MinkowskiFirst,
    Holder,
    EstChain,
    Invariance,
    LogbmConjecture,
    Prop61,
    Prop62Pair,
    ZonotopeDecomposition,
    FalseInequality,
}

impl CheckId {
    pub const ALL: [CheckId; 16] = [
        CheckId::Theorem14,
        CheckId::Theorem17,
        CheckId::Lemma31,
        CheckId::Corollary33,
        CheckId::Theorem15,
        CheckId::Corollary16,
        CheckId::MinkowskiSecond,
        CheckId::MinkowskiFirst,
        CheckId::Holder,
        CheckId::EstChain,
        CheckId::Invariance,
        CheckId::LogbmConjecture,
        CheckId::Prop61,
        CheckId::Prop62Pair,
        CheckId::ZonotopeDecomposition,
        CheckId::FalseInequality,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            CheckId::Theorem14 => "theorem_1_4",
            CheckId::Theorem17 => "theorem_1_7",
            CheckId::Lemma31 => "lemma_3_1",
            CheckId::Corollary33 => "corollary_3_3",
            CheckId::Theorem15 => "theorem_1_5",
            CheckId::Corollary16 => "corollary_1_6",
            CheckId::MinkowskiSecond => "minkowski_second",
            CheckId::MinkowskiFirst => "minkowski_first",
            CheckId::Holder => "holder",
            CheckId::EstChain => "est_chain",
            CheckId::Invariance => "invariance",
            CheckId::LogbmConjecture => "logbm_conjecture",
            CheckId::Prop61 => "prop_6_1",
            CheckId::Prop62Pair => "prop_6_2_pair",
            CheckId::ZonotopeDecomposition => "zonotope_decomposition",
            CheckId::FalseInequality => "false_inequality",
        }
    }

    /// Accepts both `snake_case` and `kebab-case` spellings.
    pub fn parse(s: &str) -> Option<CheckId> {
        let norm = s.trim().replace('-', "_");
        CheckId::ALL.iter().copied().find(|c| c.name() == norm)
    }

    pub fn kind(&self) -> CheckKind {
        match self {
            CheckId::LogbmConjecture
            | CheckId::Prop61
            | CheckId::Prop62Pair
            | CheckId::FalseInequality => CheckKind::Probe,
            _ => CheckKind::Proved,
        }
    }

    /// Smallest ambient dimension the checker is defined for.
    pub fn min_dim(&self) -> usize {
        match self {
            CheckId::Prop61 | CheckId::Prop62Pair | CheckId::ZonotopeDecomposition => 3,
            _ => 2,
        }
    }
}

fn ensure_holds(report: &CheckReport) -> Result<(), LabError> {
    if report.holds {
        Ok(())
    } else {
        Err(LabError::inconsistency(
            &report.check_name,
            format!(
                "proved inequality failed: lhs = {}, rhs = {}",
                report.lhs.render(),
                report.rhs.render()
            ),
        ))
    }
}

/// Records the structural equality verdict and, in exact mode, enforces
/// agreement with the numeric flag.
fn cross_validate_equality(
    report: &mut CheckReport,
    structural: bool,
    what: &str,
) -> Result<(), LabError> {
    report.detail("structuralEquality", if structural { "true" } else { "false" });
    report.detail("structuralDetector", what);
    if report.mode == Mode::Exact && report.equality != structural {
        return Err(LabError::inconsistency(
            &report.check_name,
            format!(
                "numeric equality ({}) disagrees with structural detector ({structural}): {what}",
                report.equality
            ),
        ));
    }
    Ok(())
}

fn attach_instance(report: &mut CheckReport, k: &Polytope, m: Option<&Polytope>) {
    report.detail("instanceK", BodySpec::from_polytope(k).to_json());
    if let Some(m) = m {
        report.detail("instanceM", BodySpec::from_polytope(m).to_json());
    }
}

fn flag_candidate(report: &mut CheckReport, k: &Polytope, m: Option<&Polytope>) {
    if !report.holds {
        report.detail("counterexampleCandidate", "true");
        attach_instance(report, k, m);
    }
}

// ---------------------------------------------------------------------------
// cylinder structure detectors (combinatorial, on merged facet normals)
// ---------------------------------------------------------------------------

/// `K = C + [-v', v']` with `v' ∥ v`: exactly one antipodal merged-normal
/// line is non-orthogonal to `v` (the caps; every side normal kills the
/// axis direction).
pub fn cylinder_axis_parallel(k: &Polytope, v: &Vector) -> bool {
    if v.is_zero() {
        return false;
    }
    k.normal_lines()
        .iter()
        .filter(|d| !d.dot(v).is_zero())
        .count()
        == 1
}

/// `K = C + [-w, w]` with the base `C ⊂ u^⊥`: some merged-normal line is
/// parallel to `u` (the caps), and the remaining lines annihilate a single
/// direction `w` with `⟨w, u⟩ ≠ 0`.
pub fn cylinder_base_orthogonal(k: &Polytope, u: &Vector) -> bool {
    if u.is_zero() {
        return false;
    }
    let u_dir = u.canonical_direction();
    let lines = k.normal_lines();
    if !lines.contains(&u_dir) {
        return false;
    }
    let rest: Vec<Vector> = lines.into_iter().filter(|d| *d != u_dir).collect();
    if rest.is_empty() {
        // only the cap pair: a slab, which is not a bounded body; full-dim
        // polytopes always have spanning normals, so this cannot happen.
        return false;
    }
    let kernel = Matrix::from_row_vectors(&rest).kernel_basis();
    kernel.len() == 1 && !kernel[0].dot(u).is_zero()
}

// ---------------------------------------------------------------------------
// proved checkers
// ---------------------------------------------------------------------------

/// Semi-norm surface inequality:
/// `Σ ‖a‖²/s ≤ (Σ ‖a‖)² / |K|`, with equality exactly for rank-one
/// semi-norms on cylinders with a parallel axis.
pub fn check_theorem_1_4(
    k: &Polytope,
    n: &SemiNorm,
    ctx: CheckCtx,
) -> Result<CheckReport, LabError> {
    let quad = surface_quadratic(k, n)?;
    let lin = surface_linear(k, n)?;
    let rhs = &lin * &lin / k.volume();
    let mut report = CheckReport::from_sides(
        CheckId::Theorem14.name(),
        CheckKind::Proved,
        ctx.mode,
        ctx.tol,
        Radical::from_rat(quad),
        Radical::from_rat(rhs),
    );
    report.detail("facetPieces", k.facets().len().to_string());
    let structural = if n.is_zero() {
        report.detail("normRank", "zero");
        true
    } else {
        match n.rank_one_direction() {
            Some(dir) => {
                report.detail("normRank", "one");
                report.detail("normDirection", format!("{dir:?}"));
                cylinder_axis_parallel(k, &dir)
            }
            None => {
                report.detail("normRank", ">1");
                false
            }
        }
    };
    cross_validate_equality(&mut report, structural, "rank-one norm on a parallel cylinder")?;
    ensure_holds(&report)?;
    Ok(report)
}

/// Segment speed: `V₂(K, [-v,v]) = 0` and the full local inequality for
/// `M = [-v, v]`, equality exactly on cylinders with axis parallel to `v`.
pub fn check_theorem_1_7(
    k: &Polytope,
    v: &Vector,
    ctx: CheckCtx,
) -> Result<CheckReport, LabError> {
    if v.is_zero() {
        return Err(LabError::ZeroVector("segment direction".into()));
    }
    let m = segment(v)?;
    let parts = logbm_gap(k, &m)?;
    if !parts.v2.is_zero() {
        return Err(LabError::inconsistency(
            CheckId::Theorem17.name(),
            format!("V2(K, segment) = {} != 0", render_rat(&parts.v2)),
        ));
    }
    let mut report = CheckReport::from_sides(
        CheckId::Theorem17.name(),
        CheckKind::Proved,
        ctx.mode,
        ctx.tol,
        Radical::from_rat(parts.lhs),
        Radical::from_rat(parts.rhs),
    );
    report.detail("segment", format!("{:?}", v.canonical_direction()));
    let structural = cylinder_axis_parallel(k, v);
    if structural {
        report.detail("cylinderAxis", format!("{:?}", v.canonical_direction()));
    }
    cross_validate_equality(&mut report, structural, "cylinder with axis parallel to v")?;
    ensure_holds(&report)?;
    Ok(report)
}

/// Invariance of the gap under `M → M + tK` (exact for every listed `t`).
pub fn check_invariance(
    k: &Polytope,
    m: &Polytope,
    t_list: &[Rat],
    ctx: CheckCtx,
) -> Result<CheckReport, LabError> {
    let base = logbm_gap(k, m)?;
    let mut details = Vec::new();
    for t in t_list {
        if t.is_negative() {
            return Err(LabError::DegenerateInput("t must be nonnegative".into()));
        }
        let shifted = m.minkowski_sum(&k.scale(t))?;
        let parts = logbm_gap(k, &shifted)?;
        if parts.gap != base.gap {
            return Err(LabError::inconsistency(
                CheckId::Invariance.name(),
                format!(
                    "gap(K, M + {}K) = {} but gap(K, M) = {}",
                    render_rat(t),
                    render_rat(&parts.gap),
                    render_rat(&base.gap)
                ),
            ));
        }
        details.push(format!("t={}: gap={}", render_rat(t), render_rat(&parts.gap)));
    }
    let mut report = CheckReport::from_sides(
        CheckId::Invariance.name(),
        CheckKind::Proved,
        ctx.mode,
        ctx.tol,
        Radical::from_rat(base.gap.clone()),
        Radical::from_rat(base.gap),
    );
    report.detail("shifts", details.join("; "));
    Ok(report)
}

/// Section bound `1/h_K(û) ≤ 2|K ∩ u^⊥| / |K|`, equality exactly on
/// cylinders with base orthogonal to `u`.
pub fn check_lemma_3_1(
    k: &Polytope,
    u: &Vector,
    ctx: CheckCtx,
) -> Result<CheckReport, LabError> {
    if u.is_zero() {
        return Err(LabError::ZeroVector("section direction".into()));
    }
    require_symmetric_body(k, "K")?;
    let h = k.support(u);
    // 1/h_K(u/|u|) = |u|/h_K(u)
    let lhs = Radical::sqrt_of(u.norm_sq()).mul_rat(&h.recip());
    let section = central_section_volume(k, u)?;
    let rhs = section.mul_rat(&(rat_int(2) / k.volume()));
    let mut report = CheckReport::from_sides(
        CheckId::Lemma31.name(),
        CheckKind::Proved,
        ctx.mode,
        ctx.tol,
        lhs,
        rhs,
    );
    let structural = cylinder_base_orthogonal(k, u);
    cross_validate_equality(&mut report, structural, "cylinder with base orthogonal to u")?;
    ensure_holds(&report)?;
    Ok(report)
}

/// Pointwise bound `|⟨u,v⟩|/h_K(u) ≤ (Σ_f |⟨a_f, v⟩|)/|K|`; both sides are
/// 0-homogeneous in `u` and 1-homogeneous in `v`, so raw rational arguments
/// evaluate exactly. Equality: cylinder with axis parallel to `v` and base
/// orthogonal to `u`.
pub fn check_corollary_3_3(
    k: &Polytope,
    u: &Vector,
    v: &Vector,
    ctx: CheckCtx,
) -> Result<CheckReport, LabError> {
    if u.is_zero() || v.is_zero() {
        return Err(LabError::ZeroVector("direction arguments".into()));
    }
    require_symmetric_body(k, "K")?;
    let mut uv = u.dot(v);
    if uv.is_negative() {
        uv = -uv;
    }
    let lhs = uv / k.support(u);
    let rhs = cauchy_projection(k, v)? * rat_int(2) / k.volume();
    let mut report = CheckReport::from_sides(
        CheckId::Corollary33.name(),
        CheckKind::Proved,
        ctx.mode,
        ctx.tol,
        Radical::from_rat(lhs),
        Radical::from_rat(rhs),
    );
    let non_orthogonal: Vec<Vector> = k
        .normal_lines()
        .into_iter()
        .filter(|d| !d.dot(v).is_zero())
        .collect();
    let structural = non_orthogonal.len() == 1 && non_orthogonal[0] == u.canonical_direction();
    cross_validate_equality(
        &mut report,
        structural,
        "cylinder with axis parallel to v and base orthogonal to u",
    )?;
    ensure_holds(&report)?;
    Ok(report)
}

/// Poincaré-weighted surface bound, checked through the external
/// Payne-Weinberger estimate `C_poin(K) ≤ diam(K)/π` (float mode): the
/// implied inequality `Σ‖a‖²/s ≤ (2·diam/(π·r))·(Σ‖a‖)²/|K|`. The factor is
/// reported so callers can compare with 1; the true Poincaré constant is
/// never computed, so this check never certifies sharpness.
pub fn check_theorem_1_5(
    k: &Polytope,
    n: &SemiNorm,
    ctx: CheckCtx,
) -> Result<CheckReport, LabError> {
    let quad = surface_quadratic(k, n)?;
    let lin = surface_linear(k, n)?;
    let base_rhs = &lin * &lin / k.volume();
    let diam = rat_to_f64(&k.diameter_sq()).sqrt();
    let inradius = rat_to_f64(&k.inradius_sq()?).sqrt();
    let poincare_bound = diam / std::f64::consts::PI;
    let factor = 2.0 * poincare_bound / inradius;
    let lhs_f = rat_to_f64(&quad);
    let rhs_f = factor * rat_to_f64(&base_rhs);
    let holds = lhs_f <= rhs_f + ctx.tol.inequality * rhs_f.abs();
    let equality = (rhs_f - lhs_f).abs() <= ctx.tol.identity * rhs_f.abs();
    let mut report = CheckReport {
        check_name: CheckId::Theorem15.name().into(),
        kind: CheckKind::Proved,
        mode: Mode::Float,
        lhs: Value::Float(lhs_f),
        rhs: Value::Float(rhs_f),
        holds,
        equality,
        relative_margin: Value::Float(if rhs_f == 0.0 {
            0.0
        } else {
            (rhs_f - lhs_f) / rhs_f
        }),
        details: Default::default(),
    };
    report.detail(
        "poincareBound",
        "diam/pi (Payne-Weinberger upper bound, external to the surface inequality)",
    );
    report.detail("factor", format!("{factor}"));
    report.detail("tolerances", format!("inequality={}", ctx.tol.inequality));
    ensure_holds(&report)?;
    Ok(report)
}

/// Combined factor bound: exactly
/// `n(n-1)V₂ + Σ h_M²/s ≤ ((2n-1)/n)·n²V₁²/|K|`, plus the float factor
/// `(n-1)/n + min(1, 2·(diam/π)/r)` reported and checked at tolerance.
pub fn check_corollary_1_6(
    k: &Polytope,
    m: &Polytope,
    ctx: CheckCtx,
) -> Result<CheckReport, LabError> {
    let parts = logbm_gap(k, m)?;
    let n = rat_int(k.dim() as i64);
    let factor = (rat_int(2) * &n - Rat::one()) / &n;
    let rhs = &factor * &parts.rhs;
    let mut report = CheckReport::from_sides(
        CheckId::Corollary16.name(),
        CheckKind::Proved,
        ctx.mode,
        ctx.tol,
        Radical::from_rat(parts.lhs.clone()),
        Radical::from_rat(rhs),
    );
    report.detail("exactFactor", render_rat(&factor));
    // float side: the Poincaré-route factor via diam/pi
    let diam = rat_to_f64(&k.diameter_sq()).sqrt();
    let inradius = rat_to_f64(&k.inradius_sq()?).sqrt();
    let poincare_term = (2.0 * diam / std::f64::consts::PI / inradius).min(1.0);
    let nf = k.dim() as f64;
    let float_factor = (nf - 1.0) / nf + poincare_term;
    let float_rhs = float_factor * rat_to_f64(&parts.rhs);
    let lhs_f = rat_to_f64(&parts.lhs);
    let float_holds = lhs_f <= float_rhs + ctx.tol.inequality * float_rhs.abs();
    report.detail("floatFactor", format!("{float_factor}"));
    report.detail("floatHolds", if float_holds { "true" } else { "false" });
    report.detail(
        "poincareBound",
        "diam/pi (Payne-Weinberger upper bound, external to the surface inequality)",
    );
    if !float_holds {
        return Err(LabError::inconsistency(
            CheckId::Corollary16.name(),
            "float-factor inequality failed",
        ));
    }
    ensure_holds(&report)?;
    Ok(report)
}

/// Minkowski's second inequality `V₂ ≤ V₁²/|K|`, exact.
pub fn check_minkowski_second(
    k: &Polytope,
    m: &Polytope,
    ctx: CheckCtx,
) -> Result<CheckReport, LabError> {
    require_symmetric_body(k, "K")?;
    let mv = mixed_volumes(k, m)?;
    let rhs = mv.v(1) * mv.v(1) / k.volume();
    let report = CheckReport::from_sides(
        CheckId::MinkowskiSecond.name(),
        CheckKind::Proved,
        ctx.mode,
        ctx.tol,
        Radical::from_rat(mv.v(2).clone()),
        Radical::from_rat(rhs),
    );
    ensure_holds(&report)?;
    Ok(report)
}

/// Minkowski's first inequality in n-th power form:
/// `|K|^{n-1}·|M| ≤ V₁(K, M)^n`, exact (trivial for lower-dimensional `M`).
pub fn check_minkowski_first(
    k: &Polytope,
    m: &Polytope,
    ctx: CheckCtx,
) -> Result<CheckReport, LabError> {
    let n = k.dim();
    let v1 = first_mixed_volume(k, m)?;
    let lhs = pow_rat(k.volume(), n as u32 - 1) * m.volume();
    let rhs = pow_rat(&v1, n as u32);
    let report = CheckReport::from_sides(
        CheckId::MinkowskiFirst.name(),
        CheckKind::Proved,
        ctx.mode,
        ctx.tol,
        Radical::from_rat(lhs),
        Radical::from_rat(rhs),
    );
    ensure_holds(&report)?;
    Ok(report)
}

/// Cauchy-Schwarz route: `n·V₁²/|K| ≤ Σ h_M(a)²/s`, exact.
pub fn check_holder(
    k: &Polytope,
    m: &Polytope,
    ctx: CheckCtx,
) -> Result<CheckReport, LabError> {
    let n = rat_int(k.dim() as i64);
    let v1 = first_mixed_volume(k, m)?;
    let lhs = &n * &v1 * &v1 / k.volume();
    let rhs = weighted_surface_quadratic(k, m)?;
    let report = CheckReport::from_sides(
        CheckId::Holder.name(),
        CheckKind::Proved,
        ctx.mode,
        ctx.tol,
        Radical::from_rat(lhs),
        Radical::from_rat(rhs),
    );
    ensure_holds(&report)?;
    Ok(report)
}

/// Containment chain at the inscribed position `λ*M ⊆ K`:
/// (est1) `Σ h_{λ*M}²/s ≤ Σ h_{λ*M}` and
/// (est2) `|K|^{n-1}|λ*M| ≤ V₁(K, λ*M)^n`, both exact; reports the achieved
/// volume ratio `(|K|/|λ*M|)^{1/n}` next to the `√n·log n` benchmark.
pub fn check_est_chain(
    k: &Polytope,
    m: &Polytope,
    ctx: CheckCtx,
) -> Result<CheckReport, LabError> {
    require_symmetric_body(k, "K")?;
    if !m.is_full_dim() || !m.is_symmetric() {
        return Err(LabError::DegenerateInput(
            "M must be a full-dimensional symmetric body".into(),
        ));
    }
    let lambda = Polytope::max_inscribed_scaling(m, k)?;
    let tm = m.scale(&lambda);
    let n = k.dim();

    let est1_lhs = weighted_surface_quadratic(k, &tm)?;
    let est1_rhs: Rat = k
        .facets()
        .iter()
        .map(|f| tm.support(&f.area_vector))
        .sum();
    let mut report = CheckReport::from_sides(
        CheckId::EstChain.name(),
        CheckKind::Proved,
        ctx.mode,
        ctx.tol,
        Radical::from_rat(est1_lhs),
        Radical::from_rat(est1_rhs.clone()),
    );
    ensure_holds(&report)?;

    let v1 = &est1_rhs / rat_int(n as i64);
    let est2_lhs = pow_rat(k.volume(), n as u32 - 1) * tm.volume();
    let est2_rhs = pow_rat(&v1, n as u32);
    if est2_lhs > est2_rhs {
        return Err(LabError::inconsistency(
            CheckId::EstChain.name(),
            format!(
                "Minkowski-first link failed at the inscribed position: {} > {}",
                render_rat(&est2_lhs),
                render_rat(&est2_rhs)
            ),
        ));
    }
    report.detail("est2", format!("{} <= {}", render_rat(&est2_lhs), render_rat(&est2_rhs)));
    report.detail("lambda", render_rat(&lambda));
    let ratio = (rat_to_f64(k.volume()) / rat_to_f64(tm.volume())).powf(1.0 / n as f64);
    report.detail("volumeRatioRoot", format!("{ratio}"));
    report.detail(
        "benchmarkSqrtNLogN",
        format!("{}", (n as f64).sqrt() * (n as f64).ln()),
    );
    Ok(report)
}

/// Zonotope multilinearity: the aggregation
/// `n(n-1)V₂(K, Z) = Σ_{i<j} 2·n(n-1)·V(K[n-2], S_i, S_j)` is asserted
/// exactly; the per-pair identity against
/// `4·|v_i ∧ v_j|·|K|span(v_i,v_j)^⊥|` is evaluated exactly and reported
/// (normalization recorded, never asserted).
pub fn check_zonotope_decomposition(
    k: &Polytope,
    generators: &[Vector],
    ctx: CheckCtx,
) -> Result<CheckReport, LabError> {
    require_symmetric_body(k, "K")?;
    if k.dim() < 3 {
        return Err(LabError::DegenerateInput(
            "zonotope decomposition needs dimension at least 3".into(),
        ));
    }
    if generators.is_empty() {
        return Err(LabError::DegenerateInput("no generators".into()));
    }
    if generators.iter().any(Vector::is_zero) {
        return Err(LabError::ZeroVector("zonotope generator".into()));
    }
    let n = k.dim();
    let nn1 = rat_int((n * (n - 1)) as i64);
    let z = zonotope(generators)?;
    let agg_lhs = &nn1 * mixed_volumes(k, &z)?.v(2);

    let mut agg_rhs = Rat::zero();
    let mut pair_notes = Vec::new();
    let mut pair_mismatch = false;
    for i in 0..generators.len() {
        for j in i + 1..generators.len() {
            let vi = &generators[i];
            let vj = &generators[j];
            if Matrix::from_row_vectors(&[vi.clone(), vj.clone()]).rank() != 2 {
                return Err(LabError::DegenerateInput(format!(
                    "generators {i} and {j} are parallel"
                )));
            }
            let pair = mixed_volume_pair(k, &segment(vi)?, &segment(vj)?)?;
            agg_rhs += rat_int(2) * &nn1 * &pair;
            // pairwise identity: n(n-1)·pair = 4·|v_i ∧ v_j|·|K|span^⊥|
            let gram_det = Matrix::from_rows(vec![
                vec![vi.norm_sq(), vi.dot(vj)],
                vec![vi.dot(vj), vj.norm_sq()],
            ])
            .det();
            let wedge = Radical::sqrt_of(gram_det);
            let proj = subspace_projection_volume(k, &complement_basis(&[vi.clone(), vj.clone()])?)?;
            let pair_rhs = wedge.mul(&proj).mul_rat(&rat_int(4));
            let pair_lhs = Radical::from_rat(&nn1 * &pair);
            let matches = pair_lhs.cmp_exact(&pair_rhs) == std::cmp::Ordering::Equal;
            if !matches {
                pair_mismatch = true;
            }
            pair_notes.push(format!(
                "({i},{j}): n(n-1)V(K[n-2],S_i,S_j)={} vs 4|v_i^v_j||K|span^perp|={}{}",
                pair_lhs.render(),
                pair_rhs.render(),
                if matches { "" } else { " MISMATCH" }
            ));
        }
    }
    if agg_lhs != agg_rhs {
        return Err(LabError::inconsistency(
            CheckId::ZonotopeDecomposition.name(),
            format!(
                "aggregation failed: n(n-1)V2(K,Z) = {} but pair sum = {}",
                render_rat(&agg_lhs),
                render_rat(&agg_rhs)
            ),
        ));
    }
    let mut report = CheckReport::from_sides(
        CheckId::ZonotopeDecomposition.name(),
        CheckKind::Proved,
        ctx.mode,
        ctx.tol,
        Radical::from_rat(agg_lhs),
        Radical::from_rat(agg_rhs),
    );
    report.detail("pairs", pair_notes.join(" | "));
    report.detail(
        "pairwiseNormalization",
        "wedge-content factor |v_i ^ v_j| on the projection side",
    );
    report.detail("pairwiseMismatch", if pair_mismatch { "true" } else { "false" });
    Ok(report)
}

// ---------------------------------------------------------------------------
// probe checkers
// ---------------------------------------------------------------------------

/// The open local inequality for a general pair `(K, M)`: the gap sign is
/// reported, never asserted. Minkowski's second and first inequalities are
/// asserted as side checks. A negative gap serializes the instance.
pub fn check_logbm_conjecture(
    k: &Polytope,
    m: &Polytope,
    ctx: CheckCtx,
) -> Result<CheckReport, LabError> {
    let parts = logbm_gap(k, m)?;
    let n = k.dim();
    // proved side checks
    let mv2_rhs = &parts.v1 * &parts.v1 / k.volume();
    if parts.v2 > mv2_rhs {
        return Err(LabError::inconsistency(
            CheckId::LogbmConjecture.name(),
            "Minkowski second inequality failed",
        ));
    }
    if pow_rat(k.volume(), n as u32 - 1) * m.volume() > pow_rat(&parts.v1, n as u32) {
        return Err(LabError::inconsistency(
            CheckId::LogbmConjecture.name(),
            "Minkowski first inequality failed",
        ));
    }
    let mut report = CheckReport::from_sides(
        CheckId::LogbmConjecture.name(),
        CheckKind::Probe,
        ctx.mode,
        ctx.tol,
        Radical::from_rat(parts.lhs),
        Radical::from_rat(parts.rhs),
    );
    report.detail("v1", render_rat(&parts.v1));
    report.detail("v2", render_rat(&parts.v2));
    flag_candidate(&mut report, k, Some(m));
    Ok(report)
}

/// Two-direction localization for the coordinate square
/// `M = [-e_i,e_i] + [-e_j,e_j]` (1-based axes):
/// the identity `n(n-1)V₂(K, M) = 8·|K|span(e_i,e_j)^⊥|` is asserted, the
/// squared-projection inequality is probed.
pub fn check_prop_6_1(
    k: &Polytope,
    i: usize,
    j: usize,
    ctx: CheckCtx,
) -> Result<CheckReport, LabError> {
    require_symmetric_body(k, "K")?;
    let n = k.dim();
    if n < 3 {
        return Err(LabError::DegenerateInput(
            "the coordinate-square probe needs dimension at least 3".into(),
        ));
    }
    let m = square2d(n, i, j)?;
    let parts = logbm_gap(k, &m)?;

    let ei = Vector::unit(n, i - 1);
    let ej = Vector::unit(n, j - 1);
    let span_perp = complement_basis(&[ei.clone(), ej.clone()])?;
    let proj = subspace_projection_volume(k, &span_perp)?
        .as_rat()
        .ok_or_else(|| {
            LabError::inconsistency(CheckId::Prop61.name(), "coordinate projection must be rational")
        })?;
    let airplane_lhs = rat_int((n * (n - 1)) as i64) * &parts.v2;
    let airplane_rhs = rat_int(8) * &proj;
    if airplane_lhs != airplane_rhs {
        return Err(LabError::inconsistency(
            CheckId::Prop61.name(),
            format!(
                "square identity failed: n(n-1)V2 = {} but 8|K|span^perp| = {}",
                render_rat(&airplane_lhs),
                render_rat(&airplane_rhs)
            ),
        ));
    }

    // probe route, written in projection form
    let facet_term: Rat = k
        .facets()
        .iter()
        .map(|f| {
            let mut ai = f.area_vector.coord(i - 1).clone();
            if ai.is_negative() {
                ai = -ai;
            }
            let mut aj = f.area_vector.coord(j - 1).clone();
            if aj.is_negative() {
                aj = -aj;
            }
            let s = &ai + &aj;
            &s * &s / &f.support_value
        })
        .sum();
    let lhs = &airplane_rhs + &facet_term;
    let pi = cauchy_projection(k, &ei)?;
    let pj = cauchy_projection(k, &ej)?;
    let sum = &pi + &pj;
    let rhs = rat_int(4) * &sum * &sum / k.volume();
    // dual route: the projection form must match the mixed-volume form
    if lhs != parts.lhs || rhs != parts.rhs {
        return Err(LabError::inconsistency(
            CheckId::Prop61.name(),
            "projection route disagrees with the mixed-volume route",
        ));
    }
    let mut report = CheckReport::from_sides(
        CheckId::Prop61.name(),
        CheckKind::Probe,
        ctx.mode,
        ctx.tol,
        Radical::from_rat(lhs),
        Radical::from_rat(rhs),
    );
    report.detail("squareIdentity", format!("{} = {}", render_rat(&airplane_lhs), render_rat(&airplane_rhs)));
    report.detail("axes", format!("({i},{j})"));
    flag_candidate(&mut report, k, Some(&m));
    Ok(report)
}

/// Pairwise two-direction hypothesis for unit-normalized independent
/// directions, with absolute values on the cross term (the reading the
/// zonotope expansion produces). Exact when every term stays commensurable
/// (coordinate-aligned data), float otherwise. Reported, never asserted;
/// the record carries both the proof-consistent constant
/// `4|K|v̂^⊥||K|ŵ^⊥|/|K|` (primary verdict) and the halved displayed
/// constant, plus the signed (no absolute value) reading of the cross term.
pub fn check_prop_6_2_pair(
    k: &Polytope,
    v: &Vector,
    w: &Vector,
    ctx: CheckCtx,
) -> Result<CheckReport, LabError> {
    require_symmetric_body(k, "K")?;
    if k.dim() < 3 {
        return Err(LabError::DegenerateInput(
            "the pairwise probe needs dimension at least 3".into(),
        ));
    }
    if v.is_zero() || w.is_zero() {
        return Err(LabError::ZeroVector("pair directions".into()));
    }
    if Matrix::from_row_vectors(&[v.clone(), w.clone()]).rank() != 2 {
        return Err(LabError::DegenerateInput("pair directions are parallel".into()));
    }
    let proj_pair = subspace_projection_volume(k, &complement_basis(&[v.clone(), w.clone()])?)?;
    let mut facet_abs = Rat::zero();
    let mut facet_signed = Rat::zero();
    for f in k.facets() {
        let dv = f.area_vector.dot(v);
        let dw = f.area_vector.dot(w);
        let prod = &dv * &dw;
        facet_signed += &prod / &f.support_value;
        let abs_prod = if prod.is_negative() { -prod } else { prod };
        facet_abs += abs_prod / &f.support_value;
    }
    let inv_norms = Radical::sqrt_of(v.norm_sq() * w.norm_sq()).recip();
    let facet_term = inv_norms.mul_rat(&facet_abs);
    let lhs_first = proj_pair.mul_rat(&rat_int(4));
    let proj_v = Radical::sqrt_of(v.norm_sq())
        .recip()
        .mul_rat(&cauchy_projection(k, v)?);
    let proj_w = Radical::sqrt_of(w.norm_sq())
        .recip()
        .mul_rat(&cauchy_projection(k, w)?);
    let rhs = proj_v
        .mul(&proj_w)
        .mul_rat(&(rat_int(4) / k.volume()));

    let mut report = match lhs_first.try_add(&facet_term) {
        Some(lhs) => CheckReport::from_sides(
            CheckId::Prop62Pair.name(),
            CheckKind::Probe,
            ctx.mode,
            ctx.tol,
            lhs,
            rhs.clone(),
        ),
        None => {
            // incommensurable radicals: float mode with the declared tolerance
            let lhs_f = lhs_first.to_f64() + facet_term.to_f64();
            let rhs_f = rhs.to_f64();
            let holds = lhs_f <= rhs_f + ctx.tol.inequality * rhs_f.abs();
            let equality = (rhs_f - lhs_f).abs() <= ctx.tol.identity * rhs_f.abs();
            let mut r = CheckReport {
                check_name: CheckId::Prop62Pair.name().into(),
                kind: CheckKind::Probe,
                mode: Mode::Float,
                lhs: Value::Float(lhs_f),
                rhs: Value::Float(rhs_f),
                holds,
                equality,
                relative_margin: Value::Float(if rhs_f == 0.0 {
                    0.0
                } else {
                    (rhs_f - lhs_f) / rhs_f
                }),
                details: Default::default(),
            };
            r.detail("floatFallback", "incommensurable radical terms");
            r.detail("tolerances", format!("inequality={}", ctx.tol.inequality));
            r
        }
    };
    report.detail(
        "rhsConstant",
        "4|K|v^perp||K|w^perp|/|K| (consistent with the zonotope aggregation)",
    );
    let rhs_displayed = rhs.mul_rat(&crate::rat::rat(1, 2));
    report.detail("rhsHalvedConstant", rhs_displayed.render());
    let lhs_f = report.lhs.to_f64();
    report.detail(
        "holdsWithHalvedConstant",
        if lhs_f <= rhs_displayed.to_f64() + ctx.tol.inequality * rhs_displayed.to_f64().abs() {
            "true"
        } else {
            "false"
        },
    );
    report.detail("crossTermSigned", render_rat(&facet_signed));
    report.detail("crossTermAbsolute", render_rat(&facet_abs));
    flag_candidate(&mut report, k, None);
    Ok(report)
}

/// Cube identities for a coordinate box `B_φ` with half-sides `φ > 0`:
///
/// * `rem3`: `n(n-1)·V₂(B_∞ⁿ, B_φ) = 2·2ⁿ·Σ_{i<j} φ_i φ_j` exactly (the
///   pair sum runs over unordered pairs; the `n = 2, φ = (1,1)` case pins
///   the constant at 8);
/// * `rem2`: `V₂(B_∞ⁿ, M) ≤ V₂(B_∞ⁿ, B_φ)` for `M = conv(±φ_i e_i) ⊆ B_φ`
///   (monotonicity);
/// * `rem1`: `n(n-1)V₂(B_∞ⁿ, M) + 2·2^{n-1} Σ φ_i² ≤ 2ⁿ (Σ φ_i)²` for that
///   `M`, with exact equality when `M = B_φ` itself.
///
/// All four are proved statements; any failure is an internal
/// inconsistency.
pub fn demo_cube_remark(
    phi: &[Rat],
    ctx: CheckCtx,
) -> Result<Vec<CheckReport>, LabError> {
    let n = phi.len();
    if n < 2 {
        return Err(LabError::DegenerateInput(
            "the cube identities need dimension at least 2".into(),
        ));
    }
    if phi.iter().any(|p| !p.is_positive()) {
        return Err(LabError::DegenerateInput("half-sides must be positive".into()));
    }
    let k = crate::bodies::cube(n);
    let b_phi = crate::bodies::box_body(phi);
    let nn1 = rat_int((n * (n - 1)) as i64);
    let two_n = pow_rat(&rat_int(2), n as u32);

    // rem3: second mixed volume of the box against the cube, in closed form
    let v2_box = mixed_volumes(&k, &b_phi)?.v(2).clone();
    let mut pair_sum = Rat::zero();
    for i in 0..n {
        for j in i + 1..n {
            pair_sum += &phi[i] * &phi[j];
        }
    }
    let rem3_lhs = &nn1 * &v2_box;
    let rem3_rhs = rat_int(2) * &two_n * &pair_sum;
    let rem3 = CheckReport::from_sides(
        "cube_remark_rem3",
        CheckKind::Proved,
        ctx.mode,
        ctx.tol,
        Radical::from_rat(rem3_lhs.clone()),
        Radical::from_rat(rem3_rhs.clone()),
    );
    if rem3_lhs != rem3_rhs {
        return Err(LabError::inconsistency(
            "cube_remark_rem3",
            format!(
                "{} != {}",
                render_rat(&rem3_lhs),
                render_rat(&rem3_rhs)
            ),
        ));
    }

    // rem2: monotonicity against the inscribed cross-polytope
    let mut cross_points = Vec::with_capacity(2 * n);
    for (i, p) in phi.iter().enumerate() {
        let v = Vector::unit(n, i).scale(p);
        cross_points.push(v.neg());
        cross_points.push(v);
    }
    let m = Polytope::from_points(&cross_points)?;
    let v2_m = mixed_volumes(&k, &m)?.v(2).clone();
    let rem2 = CheckReport::from_sides(
        "cube_remark_rem2",
        CheckKind::Proved,
        ctx.mode,
        ctx.tol,
        Radical::from_rat(v2_m.clone()),
        Radical::from_rat(v2_box),
    );
    ensure_holds(&rem2)?;

    // rem1 for M: the support values at the coordinate directions are φ_i
    let phi_sum: Rat = phi.iter().cloned().sum();
    let phi_sq_sum: Rat = phi.iter().map(|p| p * p).sum();
    let rem1_lhs = &nn1 * &v2_m + rat_int(2) * pow_rat(&rat_int(2), n as u32 - 1) * &phi_sq_sum;
    let rem1_rhs = &two_n * &phi_sum * &phi_sum;
    let rem1 = CheckReport::from_sides(
        "cube_remark_rem1",
        CheckKind::Proved,
        ctx.mode,
        ctx.tol,
        Radical::from_rat(rem1_lhs),
        Radical::from_rat(rem1_rhs.clone()),
    );
    ensure_holds(&rem1)?;

    // rem1 at M = B_φ: exact equality
    let rem1_box_lhs = &rem3_lhs + rat_int(2) * pow_rat(&rat_int(2), n as u32 - 1) * &phi_sq_sum;
    let mut rem1_box = CheckReport::from_sides(
        "cube_remark_rem1_box",
        CheckKind::Proved,
        ctx.mode,
        ctx.tol,
        Radical::from_rat(rem1_box_lhs),
        Radical::from_rat(rem1_rhs),
    );
    rem1_box.detail("expectedEquality", "true");
    if ctx.mode == Mode::Exact && !rem1_box.equality {
        return Err(LabError::inconsistency(
            "cube_remark_rem1_box",
            "equality case failed at M = B_phi",
        ));
    }
    ensure_holds(&rem1_box)?;

    Ok(vec![rem3, rem2, rem1, rem1_box])
}

/// The indicator-speed failure demo on the cross-polytope: with `f = 1` on
/// one antipodal facet pair and `0` elsewhere, the unrestricted inequality
/// reduces to `2 ≤ 4n/2^n`, which fails for every `n > 2`. The violation is
/// asserted for `n ≥ 3`; `n = 2` is the equality boundary.
pub fn demo_false_inequality(n: usize, ctx: CheckCtx) -> Result<CheckReport, LabError> {
    if n < 2 {
        return Err(LabError::DegenerateInput(
            "the failure demo needs dimension at least 2".into(),
        ));
    }
    let k = cross_polytope(n)?;
    let marker = k.facets()[0].area_vector.canonical_direction();
    let mut quad = Rat::zero();
    let mut lin = Radical::zero();
    for f in k.facets() {
        if f.area_vector.canonical_direction() == marker {
            quad += f.area_vector.norm_sq() / &f.support_value;
            lin = lin
                .try_add(&Radical::sqrt_of(f.area_vector.norm_sq()))
                .expect("parallel area vectors are commensurable");
        }
    }
    let rhs_raw = lin.square() / k.volume();
    // normalize by the common per-facet factor ‖a₀‖²/s₀ so the sides read
    // as the reduced form (lhs = number of marked pieces)
    let f0 = &k.facets()[0];
    let unit = f0.area_vector.norm_sq() / &f0.support_value;
    let lhs = quad / &unit;
    let rhs = rhs_raw / &unit;
    let mut report = CheckReport::from_sides(
        CheckId::FalseInequality.name(),
        CheckKind::Probe,
        ctx.mode,
        ctx.tol,
        Radical::from_rat(lhs),
        Radical::from_rat(rhs),
    );
    report.detail("speed", "indicator of one antipodal facet pair (not a semi-norm)");
    report.detail("expectedViolation", if n > 2 { "true" } else { "false" });
    if n > 2 && report.holds {
        return Err(LabError::inconsistency(
            CheckId::FalseInequality.name(),
            "the indicator speed failed to violate the unrestricted inequality",
        ));
    }
    if n == 2 && !report.holds {
        return Err(LabError::inconsistency(
            CheckId::FalseInequality.name(),
            "the n = 2 boundary case must hold with equality",
        ));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bodies::{box_body, cube, random_symmetric_polytope};
    use crate::rat::rat;

    fn v(coords: &[i64]) -> Vector {
        Vector::from_ints(coords)
    }

    fn ctx() -> CheckCtx {
        CheckCtx::exact()
    }

    #[test]
    fn theorem_1_4_square_equality_and_strictness() {
        let k = cube(2);
        let r = check_theorem_1_4(&k, &SemiNorm::linear(v(&[1, 0])), ctx()).unwrap();
        assert_eq!(r.lhs, Value::Rat(rat_int(4)));
        assert_eq!(r.rhs, Value::Rat(rat_int(4)));
        assert!(r.holds && r.equality);

        let b1 = cross_polytope(2).unwrap();
        let r = check_theorem_1_4(&b1, &SemiNorm::linear(v(&[1, 0])), ctx()).unwrap();
        assert_eq!(r.lhs, Value::Rat(rat_int(4)));
        assert_eq!(r.rhs, Value::Rat(rat_int(8)));
        assert!(r.holds && !r.equality);

        let max2 = SemiNorm::Max {
            vectors: vec![v(&[1, 0]), v(&[0, 1])],
        };
        let r = check_theorem_1_4(&k, &max2, ctx()).unwrap();
        assert!(r.holds && !r.equality);

        // zero semi-norm: trivial equality
        let r = check_theorem_1_4(&k, &SemiNorm::Max { vectors: vec![v(&[0, 0])] }, ctx()).unwrap();
        assert!(r.holds && r.equality);
    }

    #[test]
    fn theorem_1_7_cylinder_equality_cases() {
        // B₁² is a cylinder with axis (1,1)
        let b1 = cross_polytope(2).unwrap();
        let r = check_theorem_1_7(&b1, &v(&[1, 1]), ctx()).unwrap();
        assert_eq!(r.lhs, Value::Rat(rat_int(8)));
        assert_eq!(r.rhs, Value::Rat(rat_int(8)));
        assert!(r.equality);

        // the cube is a cylinder over e₁
        let r = check_theorem_1_7(&cube(3), &v(&[1, 0, 0]), ctx()).unwrap();
        assert!(r.equality);

        // B₁³ is not a cylinder over e₁
        let r = check_theorem_1_7(&cross_polytope(3).unwrap(), &v(&[1, 0, 0]), ctx()).unwrap();
        assert!(r.holds && !r.equality);

        // axis scaling does not matter: [-2,2]x[-1,1] with v = e₁
        let wide = box_body(&[rat_int(2), rat_int(1)]);
        let r = check_theorem_1_7(&wide, &v(&[1, 0]), ctx()).unwrap();
        assert!(r.equality);
    }

    #[test]
    fn logbm_probe_examples() {
        let k = cube(3);
        let r = check_logbm_conjecture(&k, &k, ctx()).unwrap();
        assert!(r.holds && r.equality);

        let z = zonotope(&[v(&[1, 0, 0]), v(&[0, 1, 0])]).unwrap();
        let r = check_logbm_conjecture(&k, &z, ctx()).unwrap();
        assert_eq!(r.lhs, Value::Rat(rat_int(32)));
        assert_eq!(r.rhs, Value::Rat(rat_int(32)));
        assert!(r.equality);

        let r = check_logbm_conjecture(&cross_polytope(3).unwrap(), &cube(3), ctx()).unwrap();
        assert!(r.holds);
        assert!(!r.details.contains_key("counterexampleCandidate"));
    }

    #[test]
    fn invariance_examples() {
        let k = cube(2);
        let seg = segment(&v(&[1, 0])).unwrap();
        let r = check_invariance(&k, &seg, &[rat_int(1)], ctx()).unwrap();
        assert!(r.holds && r.equality);
        let b1 = cross_polytope(2).unwrap();
        let r = check_invariance(&b1, &cube(2), &[rat_int(2)], ctx()).unwrap();
        assert!(r.holds);
        let r = check_invariance(&k, &seg, &[rat_int(0)], ctx()).unwrap();
        assert!(r.holds);
    }

    #[test]
    fn lemma_3_1_examples() {
        let k = cube(2);
        let r = check_lemma_3_1(&k, &v(&[1, 0]), ctx()).unwrap();
        assert!(r.holds && r.equality);

        let b1 = cross_polytope(2).unwrap();
        let r = check_lemma_3_1(&b1, &v(&[1, 0]), ctx()).unwrap();
        assert!(r.holds && !r.equality);
        assert_eq!(r.lhs, Value::Rat(rat_int(1)));
        assert_eq!(r.rhs, Value::Rat(rat_int(2)));

        // diagonal direction on the square: 1/√2 < √2
        let r = check_lemma_3_1(&k, &v(&[1, 1]), ctx()).unwrap();
        assert!(r.holds && !r.equality);
        assert_eq!(r.lhs.render(), "1/2*sqrt(2)");
        assert_eq!(r.rhs.render(), "1*sqrt(2)");
    }

    #[test]
    fn corollary_3_3_examples() {
        let k = cube(2);
        let r = check_corollary_3_3(&k, &v(&[1, 0]), &v(&[1, 0]), ctx()).unwrap();
        assert!(r.holds && r.equality);
        let r = check_corollary_3_3(&k, &v(&[1, 0]), &v(&[0, 1]), ctx()).unwrap();
        assert!(r.holds && !r.equality);
        let b1 = cross_polytope(2).unwrap();
        let r = check_corollary_3_3(&b1, &v(&[1, 1]), &v(&[1, 0]), ctx()).unwrap();
        assert_eq!(r.lhs, Value::Rat(rat_int(1)));
        assert_eq!(r.rhs, Value::Rat(rat_int(2)));
        assert!(r.holds && !r.equality);
    }

    #[test]
    fn theorem_1_5_factor() {
        let k = cube(2);
        let r = check_theorem_1_5(&k, &SemiNorm::linear(v(&[1, 0])), ctx()).unwrap();
        assert!(r.holds);
        let factor: f64 = r.details["factor"].parse().unwrap();
        assert!((factor - 4.0 * 2f64.sqrt() / std::f64::consts::PI).abs() < 1e-12);

        let wide = box_body(&[rat_int(10), rat_int(1)]);
        let r = check_theorem_1_5(&wide, &SemiNorm::linear(v(&[1, 0])), ctx()).unwrap();
        assert!(r.holds);

        let r = check_theorem_1_5(&k, &SemiNorm::Max { vectors: vec![v(&[0, 0])] }, ctx()).unwrap();
        assert!(r.holds && r.equality);
    }

    #[test]
    fn corollary_1_6_examples() {
        let k = cube(2);
        let r = check_corollary_1_6(&k, &k, ctx()).unwrap();
        assert!(r.holds && !r.equality);
        let seg = segment(&v(&[1, 0])).unwrap();
        let r = check_corollary_1_6(&k, &seg, ctx()).unwrap();
        assert_eq!(r.lhs, Value::Rat(rat_int(4)));
        assert_eq!(r.rhs, Value::Rat(rat_int(6)));
        let r = check_corollary_1_6(&cross_polytope(3).unwrap(), &cube(3), ctx()).unwrap();
        assert!(r.holds);
    }

    #[test]
    fn est_chain_examples() {
        let k = cube(2);
        let r = check_est_chain(&k, &k, ctx()).unwrap();
        assert!(r.holds && r.equality);
        assert_eq!(r.details["lambda"], "1");

        let b1 = cross_polytope(2).unwrap();
        let r = check_est_chain(&cube(2), &b1, ctx()).unwrap();
        assert_eq!(r.details["lambda"], "1");
        assert!(r.holds);

        let r = check_est_chain(&b1, &cube(2), ctx()).unwrap();
        assert_eq!(r.details["lambda"], "1/2");
        assert!(r.holds);
    }

    #[test]
    fn prop_6_1_cube_equality() {
        let r = check_prop_6_1(&cube(3), 1, 2, ctx()).unwrap();
        assert_eq!(r.lhs, Value::Rat(rat_int(32)));
        assert_eq!(r.rhs, Value::Rat(rat_int(32)));
        assert!(r.holds && r.equality);
        assert_eq!(r.details["squareIdentity"], "16 = 16");

        let r = check_prop_6_1(&cross_polytope(3).unwrap(), 1, 2, ctx()).unwrap();
        assert!(r.holds);

        // prism over the planar cross-polytope, axis e₃
        let base = Polytope::from_points(&[
            v(&[1, 0, 0]),
            v(&[-1, 0, 0]),
            v(&[0, 1, 0]),
            v(&[0, -1, 0]),
        ])
        .unwrap();
        let prism = base
            .minkowski_sum(&segment(&v(&[0, 0, 1])).unwrap())
            .unwrap();
        let r = check_prop_6_1(&prism, 1, 2, ctx()).unwrap();
        assert!(r.holds);

        assert!(check_prop_6_1(&cube(3), 1, 1, ctx()).is_err());
    }

    #[test]
    fn prop_6_2_pair_cube_is_exact_and_fails_displayed_constant() {
        let k = cube(3);
        let r = check_prop_6_2_pair(&k, &v(&[1, 0, 0]), &v(&[0, 1, 0]), ctx()).unwrap();
        // coordinate-aligned: exact, and at equality with the aggregation-
        // consistent constant (8 = 8)
        assert_eq!(r.mode, Mode::Exact);
        assert_eq!(r.lhs, Value::Rat(rat_int(8)));
        assert_eq!(r.rhs, Value::Rat(rat_int(8)));
        assert!(r.holds && r.equality);
        assert_eq!(r.details["holdsWithHalvedConstant"], "false");
        assert_eq!(r.details["crossTermAbsolute"], "0");

        assert!(check_prop_6_2_pair(&k, &v(&[1, 0, 0]), &v(&[2, 0, 0]), ctx()).is_err());

        // generic directions fall back to float
        let r = check_prop_6_2_pair(&k, &v(&[1, 1, 0]), &v(&[0, 1, 1]), ctx()).unwrap();
        assert_eq!(r.mode, Mode::Float);
    }

    #[test]
    fn zonotope_decomposition_examples() {
        let k = cube(3);
        let r =
            check_zonotope_decomposition(&k, &[v(&[1, 0, 0]), v(&[0, 1, 0])], ctx()).unwrap();
        assert_eq!(r.lhs, Value::Rat(rat_int(16)));
        assert!(r.holds && r.equality);
        assert_eq!(r.details["pairwiseMismatch"], "false");

        // single generator: empty pair sum, V2 = 0
        let r = check_zonotope_decomposition(&k, &[v(&[1, 0, 0])], ctx()).unwrap();
        assert_eq!(r.lhs, Value::Rat(rat_int(0)));

        let b1 = cross_polytope(3).unwrap();
        let r = check_zonotope_decomposition(
            &b1,
            &[v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1])],
            ctx(),
        )
        .unwrap();
        assert!(r.holds);
        assert_eq!(r.details["pairwiseMismatch"], "false");

        assert!(
            check_zonotope_decomposition(&k, &[v(&[1, 0, 0]), v(&[-1, 0, 0])], ctx()).is_err()
        );
    }

    #[test]
    fn cube_remark_identities() {
        // n = 2, φ = (1,1): the pair-sum constant is pinned by the second
        // derivative of 4(1+t)², which is 8.
        let reports = demo_cube_remark(&[rat_int(1), rat_int(1)], ctx()).unwrap();
        assert_eq!(reports[0].check_name, "cube_remark_rem3");
        assert_eq!(reports[0].lhs, Value::Rat(rat_int(8)));
        assert_eq!(reports[0].rhs, Value::Rat(rat_int(8)));
        assert!(reports.iter().all(|r| r.holds));
        assert!(reports[3].equality);

        for phi in [
            vec![rat(1, 2), rat_int(3)],
            vec![rat_int(1), rat(2, 3), rat(5, 2)],
            vec![rat(1, 3), rat_int(2), rat_int(1), rat(7, 4)],
        ] {
            let reports = demo_cube_remark(&phi, ctx()).unwrap();
            assert!(reports.iter().all(|r| r.holds));
            assert!(reports[0].equality, "rem3 must be an identity");
            assert!(reports[3].equality, "rem1 at B_phi must be equality");
        }

        assert!(demo_cube_remark(&[rat_int(1)], ctx()).is_err());
        assert!(demo_cube_remark(&[rat_int(1), rat_int(0)], ctx()).is_err());
    }

    #[test]
    fn false_inequality_demo() {
        let r = demo_false_inequality(3, ctx()).unwrap();
        assert_eq!(r.lhs, Value::Rat(rat_int(2)));
        assert_eq!(r.rhs, Value::Rat(rat(3, 2)));
        assert!(!r.holds);

        let r = demo_false_inequality(4, ctx()).unwrap();
        assert_eq!(r.lhs, Value::Rat(rat_int(2)));
        assert_eq!(r.rhs, Value::Rat(rat_int(1)));
        assert!(!r.holds);

        let r = demo_false_inequality(2, ctx()).unwrap();
        assert_eq!(r.lhs, Value::Rat(rat_int(2)));
        assert_eq!(r.rhs, Value::Rat(rat_int(2)));
        assert!(r.holds && r.equality);
    }

    #[test]
    fn random_bodies_pass_proved_checks() {
        for seed in 0..5u64 {
            let k = random_symmetric_polytope(3, 8, 100 + seed, 6).unwrap();
            check_theorem_1_4(
                &k,
                &SemiNorm::Max {
                    vectors: vec![v(&[1, 2, 0]), v(&[0, 1, -1])],
                },
                ctx(),
            )
            .unwrap();
            check_theorem_1_7(&k, &v(&[1, 1, -1]), ctx()).unwrap();
            check_lemma_3_1(&k, &v(&[2, -1, 1]), ctx()).unwrap();
            check_corollary_3_3(&k, &v(&[1, 0, 1]), &v(&[1, 1, 1]), ctx()).unwrap();
            check_prop_6_1(&k, 1, 3, ctx()).unwrap();
        }
    }

    #[test]
    fn larger_random_body_passes_the_surface_inequality() {
        // a denser random hull (20 base points, coordinates up to 10)
        let k = random_symmetric_polytope(3, 20, 1, 10).unwrap();
        let r = check_theorem_1_4(
            &k,
            &SemiNorm::Max {
                vectors: vec![v(&[1, 0, 0]), v(&[1, -2, 3])],
            },
            ctx(),
        )
        .unwrap();
        assert!(r.holds);
    }

    #[test]
    fn check_id_registry() {
        assert_eq!(CheckId::parse("theorem_1_4"), Some(CheckId::Theorem14));
        assert_eq!(CheckId::parse("est-chain"), Some(CheckId::EstChain));
        assert_eq!(CheckId::parse("nope"), None);
        assert_eq!(CheckId::Theorem14.kind(), CheckKind::Proved);
        assert_eq!(CheckId::LogbmConjecture.kind(), CheckKind::Probe);
        for id in CheckId::ALL {
            assert_eq!(CheckId::parse(id.name()), Some(id));
        }
    }
}
