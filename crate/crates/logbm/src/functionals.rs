//! Scalar functionals over facet data: semi-norm surface sums, Cauchy
//! projections, mixed volumes, and the local log-Brunn-Minkowski gap.
//!
//! On a polytope with facet pieces `(a_i, s_i)` the boundary integrals of
//! Brunn-Minkowski theory are finite sums. With `a = F·u` and `s = F·h`:
//!
//! * `∫ ‖n_x‖ dH     = Σ F_i ‖u_i‖       = Σ ‖a_i‖` (1-homogeneous ‖·‖),
//! * `∫ ‖n_x‖²/⟨x,n⟩ = Σ F_i ‖u_i‖²/h_i  = Σ ‖a_i‖²/s_i`,
//!
//! so semi-norm surface integrals are rational in the facet data with no
//! square roots anywhere. Both sums are invariant under splitting a facet
//! into coplanar pieces.
//!
//! Mixed volumes come from the volume polynomial: `|K + tM|` is a polynomial
//! of degree ≤ n in `t ≥ 0`, sampled exactly at `t = 0..n` and fitted by an
//! exact Vandermonde solve. With coefficients `c_k`,
//! `V_k(K, M) = c_k / C(n, k)`; in particular `c_0 = |K|` and `c_n = |M|`
//! (`0` when `M` is lower-dimensional). Those identities, a degree check at
//! an extra sample point, and nonnegativity are verified on every call as a
//! guard against hull bugs.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::LabError;
use crate::linalg::{Matrix, Vector};
use crate::polytope::{require_symmetric_body, Polytope};
use crate::rat::{pow_rat, rat_int, render_rat, Rat};
use crate::seminorm::SemiNorm;

/// `Σ_f ‖a_f‖` — the boundary integral of the semi-norm of the unit normal.
pub fn surface_linear(k: &Polytope, n: &SemiNorm) -> Result<Rat, LabError> {
    require_symmetric_body(k, "K")?;
    Ok(k.facets()
        .iter()
        .map(|f| n.eval(&f.area_vector))
        .sum())
}

/// `Σ_f ‖a_f‖²/s_f` — the boundary integral of `‖n_x‖²/⟨x, n_x⟩`.
pub fn surface_quadratic(k: &Polytope, n: &SemiNorm) -> Result<Rat, LabError> {
    require_symmetric_body(k, "K")?;
    Ok(k.facets()
        .iter()
        .map(|f| {
            let val = n.eval(&f.area_vector);
            &val * &val / &f.support_value
        })
        .sum())
}

/// `Σ_f h_M(a_f)²/s_f` with the support function of `M` as the speed.
pub fn weighted_surface_quadratic(k: &Polytope, m: &Polytope) -> Result<Rat, LabError> {
    require_symmetric_body(k, "K")?;
    Ok(k.facets()
        .iter()
        .map(|f| {
            let val = m.support(&f.area_vector);
            &val * &val / &f.support_value
        })
        .sum())
}

/// `(1/2) Σ_f |⟨a_f, v⟩| = |v| · |K|(v/|v|)^⊥|`, purely rational. Callers
/// wanting the geometric shadow content divide by `|v|`.
pub fn cauchy_projection(k: &Polytope, v: &Vector) -> Result<Rat, LabError> {
    if v.is_zero() {
        return Err(LabError::ZeroVector("projection direction".into()));
    }
    require_symmetric_body(k, "K")?;
    let sum: Rat = k
        .facets()
        .iter()
        .map(|f| {
            let d = f.area_vector.dot(v);
            if d.is_negative() {
                -d
            } else {
                d
            }
        })
        .sum();
    Ok(sum / rat_int(2))
}

/// The exact mixed-volume vector `V_0..V_n` of a pair `(K, M)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedVolumes {
    values: Vec<Rat>,
}

impl MixedVolumes {
    pub fn ambient_dim(&self) -> usize {
        self.values.len() - 1
    }

    /// `V_k(K, M)`.
    pub fn v(&self, k: usize) -> &Rat {
        &self.values[k]
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }
}

fn binomial(n: usize, k: usize) -> Rat {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    Rat::new(num, den)
}

/// Exact degree-`(ts.len()-1)` polynomial through the sample points.
fn fit_polynomial(ts: &[Rat], ys: &[Rat]) -> Result<Vec<Rat>, LabError> {
    let rows = ts
        .iter()
        .map(|t| (0..ts.len()).map(|k| pow_rat(t, k as u32)).collect())
        .collect();
    let vandermonde = Matrix::from_rows(rows);
    let solution = vandermonde.solve(&Vector::new(ys.to_vec()))?;
    Ok(solution.coords().to_vec())
}

fn eval_polynomial(coeffs: &[Rat], t: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for c in coeffs.iter().rev() {
        acc = acc * t + c;
    }
    acc
}

/// `V_0..V_n` of `(K, M)` by exact interpolation of `t ↦ |K + tM|`.
///
/// `M` may be lower-dimensional (then `V_n = 0`). The fit is cross-checked:
/// constant term `|K|`, leading term `|M|` or `0`, an extra sample at
/// `t = n+1`, and nonnegativity of every `V_k`.
pub fn mixed_volumes(k: &Polytope, m: &Polytope) -> Result<MixedVolumes, LabError> {
    if !k.is_full_dim() {
        return Err(LabError::DegenerateInput(
            "mixed volumes need a full-dimensional K".into(),
        ));
    }
    if !m.is_symmetric() {
        return Err(LabError::DegenerateInput("M must be origin-symmetric".into()));
    }
    let n = k.dim();
    let mut ts = Vec::with_capacity(n + 1);
    let mut ys = Vec::with_capacity(n + 1);
    for t in 0..=n {
        let t_rat = rat_int(t as i64);
        let vol = if t == 0 {
            k.volume().clone()
        } else {
            k.minkowski_sum(&m.scale(&t_rat))?.volume().clone()
        };
        ts.push(t_rat);
        ys.push(vol);
    }
    let coeffs = fit_polynomial(&ts, &ys)?;

    let inconsistent = |msg: String| LabError::inconsistency("mixed_volumes", msg);
    if coeffs[0] != *k.volume() {
        return Err(inconsistent(format!(
            "constant term {} != |K| = {}",
            render_rat(&coeffs[0]),
            render_rat(k.volume())
        )));
    }
    if coeffs[n] != *m.volume() {
        return Err(inconsistent(format!(
            "leading term {} != |M| = {}",
            render_rat(&coeffs[n]),
            render_rat(m.volume())
        )));
    }
    // Degree guard: the volume polynomial must reproduce one more sample.
    let extra_t = rat_int(n as i64 + 1);
    let extra = k.minkowski_sum(&m.scale(&extra_t))?.volume().clone();
    if eval_polynomial(&coeffs, &extra_t) != extra {
        return Err(inconsistent(format!(
            "degree check failed at t = {}",
            n + 1
        )));
    }
    let values: Vec<Rat> = coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| c / binomial(n, i))
        .collect();
    if let Some(bad) = values.iter().find(|v| v.is_negative()) {
        return Err(inconsistent(format!(
            "negative mixed volume {}",
            render_rat(bad)
        )));
    }
    Ok(MixedVolumes { values })
}

/// `V_1(K, M)` alone, via the boundary representation
/// `n·V_1(K, M) = Σ_f h_M(a_f)` — no polynomial fit needed.
pub fn first_mixed_volume(k: &Polytope, m: &Polytope) -> Result<Rat, LabError> {
    require_symmetric_body(k, "K")?;
    if !m.is_symmetric() {
        return Err(LabError::DegenerateInput("M must be origin-symmetric".into()));
    }
    let sum: Rat = k
        .facets()
        .iter()
        .map(|f| m.support(&f.area_vector))
        .sum();
    Ok(sum / rat_int(k.dim() as i64))
}

/// `V(K[n-2], M1, M2)` by polarization:
/// `(V_2(K, M1+M2) - V_2(K, M1) - V_2(K, M2)) / 2`.
pub fn mixed_volume_pair(
    k: &Polytope,
    m1: &Polytope,
    m2: &Polytope,
) -> Result<Rat, LabError> {
    let sum = m1.minkowski_sum(m2)?;
    let v_sum = mixed_volumes(k, &sum)?.v(2).clone();
    let v1 = mixed_volumes(k, m1)?.v(2).clone();
    let v2 = mixed_volumes(k, m2)?.v(2).clone();
    Ok((v_sum - v1 - v2) / rat_int(2))
}

/// Both sides of the local log-Brunn-Minkowski inequality for `(K, M)`:
/// `lhs = n(n-1)V_2 + Σ h_M(a)²/s`, `rhs = n²V_1²/|K|`, `gap = rhs - lhs`.
#[derive(Clone, Debug)]
pub struct LogBmGap {
    pub lhs: Rat,
    pub rhs: Rat,
    pub gap: Rat,
    pub v1: Rat,
    pub v2: Rat,
    pub weighted_quadratic: Rat,
}

impl LogBmGap {
    /// `(rhs - lhs)/rhs`, the scale-invariant slack; 0 when `rhs = 0`
    /// (which forces `M = {0}` and a zero gap).
    pub fn relative_margin(&self) -> Rat {
        if self.rhs.is_zero() {
            Rat::zero()
        } else {
            &self.gap / &self.rhs
        }
    }
}

/// Evaluates the local log-Brunn-Minkowski functional exactly.
///
/// Cross-checks the two exact routes to `V_1`: the polynomial fit against
/// the boundary sum `n·V_1 = Σ_f h_M(a_f)`.
pub fn logbm_gap(k: &Polytope, m: &Polytope) -> Result<LogBmGap, LabError> {
    require_symmetric_body(k, "K")?;
    if !m.is_symmetric() {
        return Err(LabError::DegenerateInput("M must be origin-symmetric".into()));
    }
    let n = rat_int(k.dim() as i64);
    let mv = mixed_volumes(k, m)?;
    let v1 = mv.v(1).clone();
    let v2 = mv.v(2).clone();
    let boundary_v1: Rat = k
        .facets()
        .iter()
        .map(|f| m.support(&f.area_vector))
        .sum();
    if &n * &v1 != boundary_v1 {
        return Err(LabError::inconsistency(
            "logbm_gap",
            format!(
                "first mixed volume mismatch: fit gives {}, boundary sum gives {}",
                render_rat(&v1),
                render_rat(&(boundary_v1 / &n))
            ),
        ));
    }
    let wsq = weighted_surface_quadratic(k, m)?;
    let lhs = &n * (&n - Rat::one()) * &v2 + &wsq;
    let rhs = &n * &n * &v1 * &v1 / k.volume();
    let gap = &rhs - &lhs;
    Ok(LogBmGap {
        lhs,
        rhs,
        gap,
        v1,
        v2,
        weighted_quadratic: wsq,
    })
}

/// `Σ h_M(a)²/s - n·V_1²/|K|`; nonnegative for every symmetric pair.
pub fn holder_gap(k: &Polytope, m: &Polytope) -> Result<Rat, LabError> {
    let parts = logbm_gap(k, m)?;
    let n = rat_int(k.dim() as i64);
    Ok(&parts.weighted_quadratic - &n * &parts.v1 * &parts.v1 / k.volume())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bodies::{box_body, cross_polytope, cube, segment, square2d, zonotope};
    use crate::rat::rat;

    fn v(coords: &[i64]) -> Vector {
        Vector::from_ints(coords)
    }

    fn e(dim: usize, axis: usize) -> Vector {
        Vector::unit(dim, axis)
    }

    #[test]
    fn surface_sums_on_the_square() {
        let k = cube(2);
        let n1 = SemiNorm::linear(e(2, 0));
        assert_eq!(surface_linear(&k, &n1).unwrap(), rat_int(4));
        assert_eq!(surface_quadratic(&k, &n1).unwrap(), rat_int(4));

        // ‖x‖ = |x₁| + |x₂|: every area vector has norm 2
        let l1 = SemiNorm::Sum {
            terms: vec![(Rat::one(), e(2, 0)), (Rat::one(), e(2, 1))],
        };
        // independent oracle: the square's facet data written out literally
        let facet_data = [
            (v(&[2, 0]), rat_int(2)),
            (v(&[-2, 0]), rat_int(2)),
            (v(&[0, 2]), rat_int(2)),
            (v(&[0, -2]), rat_int(2)),
        ];
        let oracle_linear: Rat = facet_data.iter().map(|(a, _)| l1.eval(a)).sum();
        let oracle_quadratic: Rat = facet_data
            .iter()
            .map(|(a, s)| {
                let val = l1.eval(a);
                &val * &val / s
            })
            .sum();
        assert_eq!(oracle_linear, rat_int(8));
        assert_eq!(oracle_quadratic, rat_int(8));
        assert_eq!(surface_linear(&k, &l1).unwrap(), oracle_linear);
        assert_eq!(surface_quadratic(&k, &l1).unwrap(), oracle_quadratic);

        let zero = SemiNorm::Max { vectors: vec![v(&[0, 0])] };
        assert_eq!(surface_linear(&k, &zero).unwrap(), rat_int(0));
    }

    #[test]
    fn surface_quadratic_on_the_cross_polytope() {
        let k = cross_polytope(2).unwrap();
        let n1 = SemiNorm::linear(e(2, 0));
        // four area vectors (±1, ±1), s = 1, each contributes 1
        assert_eq!(surface_quadratic(&k, &n1).unwrap(), rat_int(4));
        assert_eq!(surface_linear(&k, &n1).unwrap(), rat_int(4));
    }

    #[test]
    fn weighted_quadratic_examples() {
        let k = cube(2);
        // M = K: Σ s = n|K|
        assert_eq!(
            weighted_surface_quadratic(&k, &k).unwrap(),
            rat_int(8)
        );
        let seg = segment(&e(2, 0)).unwrap();
        assert_eq!(weighted_surface_quadratic(&k, &seg).unwrap(), rat_int(4));
        let origin = Polytope::point(Vector::zero(2));
        assert_eq!(
            weighted_surface_quadratic(&k, &origin).unwrap(),
            rat_int(0)
        );
    }

    #[test]
    fn cauchy_projection_values() {
        let c3 = cube(3);
        assert_eq!(cauchy_projection(&c3, &e(3, 0)).unwrap(), rat_int(4));
        assert_eq!(
            cauchy_projection(&cube(2), &v(&[1, 1])).unwrap(),
            rat_int(4)
        );
        assert_eq!(
            cauchy_projection(&cross_polytope(2).unwrap(), &e(2, 0)).unwrap(),
            rat_int(2)
        );
        assert!(matches!(
            cauchy_projection(&c3, &Vector::zero(3)),
            Err(LabError::ZeroVector(_))
        ));
    }

    #[test]
    fn mixed_volumes_of_cube_with_itself() {
        let k = cube(2);
        let mv = mixed_volumes(&k, &k).unwrap();
        assert_eq!(mv.values(), &[rat_int(4), rat_int(4), rat_int(4)]);
    }

    #[test]
    fn segment_annihilates_second_mixed_volume() {
        let k = cube(2);
        let seg = segment(&e(2, 0)).unwrap();
        let mv = mixed_volumes(&k, &seg).unwrap();
        assert_eq!(mv.v(1), &rat_int(2));
        assert_eq!(mv.v(2), &rat_int(0));
    }

    #[test]
    fn square2d_mixed_volume_in_the_cube() {
        // |cube³ + t·square2d| = 2(2+2t)² = 8 + 16t + 8t², so
        // c₂ = 8 and V₂ = 8/3, n(n-1)V₂ = 16.
        let k = cube(3);
        let m = square2d(3, 1, 2).unwrap();
        let mv = mixed_volumes(&k, &m).unwrap();
        assert_eq!(mv.v(2), &rat(8, 3));
        assert_eq!(mv.v(3), &rat_int(0));
        assert_eq!(rat_int(6) * mv.v(2), rat_int(16));
    }

    #[test]
    fn pair_polarization() {
        let k = cube(3);
        let s1 = segment(&e(3, 0)).unwrap();
        let s2 = segment(&e(3, 1)).unwrap();
        // V(K, S₁, S₂) = V₂(K, S₁₂)/2 = (8/3)/2 = 4/3, and
        // n(n-1)·4/3 = 8 = 4·|K|span(e₁,e₂)^⊥| = 4·2.
        assert_eq!(mixed_volume_pair(&k, &s1, &s2).unwrap(), rat(4, 3));
        // diagonal: pair(M, M) = V₂(K, M)
        let m = cross_polytope(3).unwrap();
        let direct = mixed_volumes(&k, &m).unwrap().v(2).clone();
        assert_eq!(mixed_volume_pair(&k, &m, &m).unwrap(), direct);
        // M₂ = {0}
        let origin = Polytope::point(Vector::zero(3));
        assert_eq!(
            mixed_volume_pair(&k, &s1, &origin).unwrap(),
            rat_int(0)
        );
    }

    #[test]
    fn logbm_gap_examples() {
        // M = K: gap is exactly 0
        let k = cube(2);
        let parts = logbm_gap(&k, &k).unwrap();
        assert_eq!(parts.lhs, rat_int(16));
        assert_eq!(parts.rhs, rat_int(16));
        assert!(parts.gap.is_zero());

        // K = square, M = [-e₁, e₁]: lhs = rhs = 4
        let seg = segment(&e(2, 0)).unwrap();
        let parts = logbm_gap(&k, &seg).unwrap();
        assert_eq!(parts.lhs, rat_int(4));
        assert_eq!(parts.rhs, rat_int(4));
        assert!(parts.gap.is_zero());

        // K = square, M = box(1,1) = K again via the box constructor
        let parts = logbm_gap(&k, &box_body(&[rat_int(1), rat_int(1)])).unwrap();
        assert_eq!(parts.lhs, rat_int(16));
        assert_eq!(parts.rhs, rat_int(16));

        // M = {0}: all zero by convention
        let parts = logbm_gap(&k, &Polytope::point(Vector::zero(2))).unwrap();
        assert!(parts.gap.is_zero() && parts.rhs.is_zero());
        assert!(parts.relative_margin().is_zero());
    }

    #[test]
    fn holder_gap_examples() {
        let k = cube(2);
        assert_eq!(holder_gap(&k, &k).unwrap(), rat_int(0));
        let seg = segment(&e(2, 0)).unwrap();
        assert_eq!(holder_gap(&k, &seg).unwrap(), rat_int(2));
        // M = αK for rational α > 0
        let scaled = k.scale(&rat(3, 7));
        assert_eq!(holder_gap(&k, &scaled).unwrap(), rat_int(0));
    }

    #[test]
    fn claim_invariance_hand_example() {
        // K = square, M = [-e₁,e₁], t = 1: V₁ = 6, V₂ = 8, Σh² /s = 20,
        // lhs = rhs = 36.
        let k = cube(2);
        let m_shift = segment(&e(2, 0))
            .unwrap()
            .minkowski_sum(&k)
            .unwrap();
        let mv = mixed_volumes(&k, &m_shift).unwrap();
        assert_eq!(mv.v(1), &rat_int(6));
        assert_eq!(mv.v(2), &rat_int(8));
        assert_eq!(
            weighted_surface_quadratic(&k, &m_shift).unwrap(),
            rat_int(20)
        );
        let parts = logbm_gap(&k, &m_shift).unwrap();
        assert_eq!(parts.lhs, rat_int(36));
        assert_eq!(parts.rhs, rat_int(36));
    }

    #[test]
    fn mixed_volume_degree_homogeneity() {
        let k = cube(2);
        let m = zonotope(&[v(&[1, 1]), v(&[1, -2])]).unwrap();
        let lam = rat(3, 2);
        let base = mixed_volumes(&k, &m).unwrap();
        let scaled_m = mixed_volumes(&k, &m.scale(&lam)).unwrap();
        let scaled_k = mixed_volumes(&k.scale(&lam), &m).unwrap();
        let n = 2;
        for j in 0..=n {
            assert_eq!(scaled_m.v(j), &(pow_rat(&lam, j as u32) * base.v(j)));
            assert_eq!(
                scaled_k.v(j),
                &(pow_rat(&lam, (n - j) as u32) * base.v(j))
            );
        }
    }

    #[test]
    fn triangulation_invariance_of_surface_sums() {
        let k = cube(2);
        let split = k.with_split_facet(1, &rat(2, 5));
        let l1 = SemiNorm::Sum {
            terms: vec![(Rat::one(), e(2, 0)), (rat(1, 3), e(2, 1))],
        };
        assert_eq!(
            surface_linear(&k, &l1).unwrap(),
            surface_linear(&split, &l1).unwrap()
        );
        assert_eq!(
            surface_quadratic(&k, &l1).unwrap(),
            surface_quadratic(&split, &l1).unwrap()
        );
        let m = cross_polytope(2).unwrap();
        assert_eq!(
            weighted_surface_quadratic(&k, &m).unwrap(),
            weighted_surface_quadratic(&split, &m).unwrap()
        );
        assert_eq!(
            cauchy_projection(&k, &v(&[1, 2])).unwrap(),
            cauchy_projection(&split, &v(&[1, 2])).unwrap()
        );
    }
}
