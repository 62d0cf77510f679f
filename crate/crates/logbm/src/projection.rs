//! Exact projection and section volumes.
//!
//! Both reduce to a hull computation in coordinates of a rational basis `B`
//! of the target subspace, followed by the Gram correction: the Hausdorff
//! content equals the coordinate volume times `√(det BᵀB)`. Coordinate-
//! aligned bases have Gram determinant 1, so those volumes stay rational.

use num_traits::{One, Signed, Zero};

use crate::error::LabError;
use crate::linalg::{Matrix, Vector};
use crate::polytope::Polytope;
use crate::radical::Radical;
use crate::rat::Rat;

fn gram(basis: &[Vector]) -> Matrix {
    Matrix::from_rows(
        basis
            .iter()
            .map(|a| basis.iter().map(|b| a.dot(b)).collect())
            .collect(),
    )
}

/// Exact coordinates of `points` in the basis `B` via the normal equations
/// `(BᵀB)·c = Bᵀx`, then the volume of their hull in those coordinates.
fn coordinate_hull_volume(points: &[Vector], basis: &[Vector]) -> Result<Rat, LabError> {
    let g = gram(basis);
    let coords: Vec<Vector> = points
        .iter()
        .map(|p| {
            let rhs = Vector::new(basis.iter().map(|b| b.dot(p)).collect());
            g.solve(&rhs)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let hull = Polytope::from_points(&coords)?;
    Ok(hull.volume().clone())
}

/// `|P|H|` where `H = span(basis)`: the Hausdorff content of the orthogonal
/// projection of `P` onto `H`, as an exact `q·√g`.
pub fn subspace_projection_volume(
    p: &Polytope,
    basis: &[Vector],
) -> Result<Radical, LabError> {
    if basis.is_empty() {
        return Err(LabError::DegenerateInput("empty projection basis".into()));
    }
    let g = gram(basis);
    let det = g.det();
    if det.is_zero() {
        return Err(LabError::DegenerateInput(
            "projection basis is linearly dependent".into(),
        ));
    }
    // Projected coordinates coincide with the normal-equation coordinates of
    // the original vertices: projection does not change ⟨b, x⟩ for b ∈ H.
    let vol = coordinate_hull_volume(p.vertices(), basis)?;
    Ok(Radical::sqrt_of(det).mul_rat(&vol))
}

/// `|K ∩ u^⊥|` for a symmetric full-dimensional `K`: exact content of the
/// central hyperplane section orthogonal to `u`.
pub fn central_section_volume(p: &Polytope, u: &Vector) -> Result<Radical, LabError> {
    if u.is_zero() {
        return Err(LabError::ZeroVector("section direction".into()));
    }
    if !p.is_full_dim() {
        return Err(LabError::DegenerateInput(
            "section needs a full-dimensional body".into(),
        ));
    }
    // Candidate points: vertices on the hyperplane, plus every crossing of a
    // vertex pair. Every vertex of the section is of this form, and every
    // candidate lies in the section, so their hull is the section.
    let mut candidates: Vec<Vector> = Vec::new();
    let heights: Vec<Rat> = p.vertices().iter().map(|v| u.dot(v)).collect();
    for (i, v) in p.vertices().iter().enumerate() {
        if heights[i].is_zero() {
            candidates.push(v.clone());
        }
        for (j, w) in p.vertices().iter().enumerate().skip(i + 1) {
            if (heights[i].is_positive() && heights[j].is_negative())
                || (heights[i].is_negative() && heights[j].is_positive())
            {
                let t = &heights[i] / (&heights[i] - &heights[j]);
                candidates.push(v.add(&w.sub(v).scale(&t)));
            }
        }
    }
    let basis = orthogonal_complement_basis(u);
    if basis.is_empty() {
        // n = 1: the section is the origin, a single point of 0-content 1.
        return Ok(Radical::from_rat(Rat::one()));
    }
    let vol = coordinate_hull_volume(&candidates, &basis)?;
    Ok(Radical::sqrt_of(gram(&basis).det()).mul_rat(&vol))
}

/// Rational basis of `u^⊥` for `u ≠ 0`: for the pivot coordinate `p` of `u`,
/// the vectors `u_p·e_i − u_i·e_p` over `i ≠ p`.
pub fn orthogonal_complement_basis(u: &Vector) -> Vec<Vector> {
    let n = u.dim();
    let pivot = u
        .coords()
        .iter()
        .position(|c| !c.is_zero())
        .expect("nonzero vector");
    let mut basis = Vec::with_capacity(n - 1);
    for i in 0..n {
        if i == pivot {
            continue;
        }
        let b = Vector::unit(n, i)
            .scale(u.coord(pivot))
            .sub(&Vector::unit(n, pivot).scale(u.coord(i)));
        basis.push(b);
    }
    basis
}

/// Rational basis of `span(vs)^⊥`: the kernel of the matrix with rows `vs`.
pub fn complement_basis(vs: &[Vector]) -> Result<Vec<Vector>, LabError> {
    let m = Matrix::from_row_vectors(vs);
    if m.rank() != vs.len() {
        return Err(LabError::DegenerateInput(
            "complement basis of dependent vectors".into(),
        ));
    }
    Ok(m.kernel_basis())
}
