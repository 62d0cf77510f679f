//! Exact polytope kernel: hulls, facet data, volumes, Minkowski sums.
//!
//! A full-dimensional polytope carries its boundary as *facet pieces*, each a
//! pair `(a, s)` where `a` is the area vector (facet content times outward
//! unit normal, always rational for rational vertices) and
//! `s = ⟨x, a⟩` for any point `x` of the piece. Every surface functional in
//! this crate is a sum of terms built from `(a, s)`, and all of them are
//! invariant under splitting a facet into coplanar pieces, so the kernel
//! never needs to merge the triangulated pieces the hull produces. Detectors
//! that count distinct normals merge on demand via [`Polytope::merged_facets`].
//!
//! The hull is incremental insertion with exact orientation predicates:
//! a point strictly beyond a facet hyperplane violates it, a point on the
//! hyperplane does not. Deterministic (input order), exact, desk scale.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::LabError;
use crate::linalg::{affine_basis_indices, Matrix, Vector};
use crate::rat::{pow_rat, rat_int, Rat};

/// One boundary piece: area vector `a = F·u` and support value `s = F·h_K(u)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    pub area_vector: Vector,
    pub support_value: Rat,
}

/// A convex polytope given by its extreme points. Full-dimensional bodies
/// also carry facet pieces and their exact volume; lower-dimensional vertex
/// lists (segments, planar squares used as second arguments) carry neither.
#[derive(Clone, Debug)]
pub struct Polytope {
    dim: usize,
    vertices: Vec<Vector>,
    facets: Vec<Facet>,
    volume: Rat,
    symmetric: bool,
}

// --- integer hull internals ---------------------------------------------
//
// Hull inputs are scaled to a common denominator once; the whole incremental
// construction then runs on exact integer coordinates (no per-operation gcd
// normalization), and the facet data is divided back out at the end. For a
// scaling factor `L`, the hull of `L·points` has area vectors `L^{n-1}`
// times and support values `L^n` times those of the hull of `points`.
//
// Desk-scale coordinates fit in `i128` with a provable margin (the largest
// intermediates are products of two Bareiss minors), which avoids big-int
// allocation in the hot loops; larger inputs fall back to `BigInt`. Both
// paths are exact.

/// Exact integer scalar for hull arithmetic.
trait HullInt: Clone + Ord {
    fn zero_val() -> Self;
    fn one_val() -> Self;
    fn is_zero_val(&self) -> bool;
    fn neg_val(&self) -> Self;
    fn add_val(&self, other: &Self) -> Self;
    fn sub_val(&self, other: &Self) -> Self;
    fn mul_val(&self, other: &Self) -> Self;
    /// Exact division (Bareiss divisions always divide evenly).
    fn div_exact(&self, other: &Self) -> Self;
    fn to_bigint(&self) -> BigInt;
}

impl HullInt for i128 {
    fn zero_val() -> Self {
        0
    }
    fn one_val() -> Self {
        1
    }
    fn is_zero_val(&self) -> bool {
        *self == 0
    }
    fn neg_val(&self) -> Self {
        -self
    }
    fn add_val(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_val(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_val(&self, other: &Self) -> Self {
        self * other
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl HullInt for BigInt {
    fn zero_val() -> Self {
        BigInt::ZERO
    }
    fn one_val() -> Self {
        One::one()
    }
    fn is_zero_val(&self) -> bool {
        Zero::is_zero(self)
    }
    fn neg_val(&self) -> Self {
        -self
    }
    fn add_val(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_val(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_val(&self, other: &Self) -> Self {
        self * other
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

fn int_dot<T: HullInt>(a: &[T], b: &[T]) -> T {
    let mut acc = T::zero_val();
    for (x, y) in a.iter().zip(b) {
        acc = acc.add_val(&x.mul_val(y));
    }
    acc
}

/// Exact integer determinant by fraction-free (Bareiss) elimination.
fn int_det<T: HullInt>(mut a: Vec<Vec<T>>) -> T {
    let n = a.len();
    if n == 0 {
        return T::one_val();
    }
    let mut negate = false;
    let mut prev = T::one_val();
    for k in 0..n - 1 {
        if a[k][k].is_zero_val() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero_val()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return T::zero_val(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].mul_val(&a[k][k]).sub_val(&a[i][k].mul_val(&a[k][j]));
                a[i][j] = num.div_exact(&prev);
            }
            a[i][k] = T::zero_val();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        det.neg_val()
    } else {
        det
    }
}

/// Rank of an integer matrix by fraction-free elimination.
fn int_rank<T: HullInt>(rows: &[Vec<T>]) -> usize {
    let mut a: Vec<Vec<T>> = rows.to_vec();
    let m = a.len();
    if m == 0 {
        return 0;
    }
    let n = a[0].len();
    let mut rank = 0;
    let mut prev = T::one_val();
    for col in 0..n {
        if rank == m {
            break;
        }
        let pivot = match (rank..m).find(|&r| !a[r][col].is_zero_val()) {
            Some(p) => p,
            None => continue,
        };
        a.swap(pivot, rank);
        for i in rank + 1..m {
            for j in col + 1..n {
                let num = a[i][j]
                    .mul_val(&a[rank][col])
                    .sub_val(&a[i][col].mul_val(&a[rank][j]));
                a[i][j] = num.div_exact(&prev);
            }
            a[i][col] = T::zero_val();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Generalized cross product of `dim - 1` integer edge vectors in ℝ^dim:
/// signed minors, orthogonal to every edge, length `(dim-1)!` times the
/// simplex content.
fn int_cross<T: HullInt>(dim: usize, edges: &[Vec<T>]) -> Vec<T> {
    debug_assert_eq!(edges.len(), dim - 1);
    let mut coords = Vec::with_capacity(dim);
    for skip in 0..dim {
        let rows: Vec<Vec<T>> = edges
            .iter()
            .map(|e| {
                e.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != skip)
                    .map(|(_, c)| c.clone())
                    .collect()
            })
            .collect();
        let minor = int_det(rows);
        coords.push(if skip % 2 == 0 { minor } else { minor.neg_val() });
    }
    coords
}

/// Greedy affine basis over integer points, scanning in input order.
fn int_affine_basis<T: HullInt>(points: &[Vec<T>]) -> Vec<usize> {
    if points.is_empty() {
        return Vec::new();
    }
    let dim = points[0].len();
    let mut chosen = vec![0usize];
    let base = &points[0];
    let mut edges: Vec<Vec<T>> = Vec::new();
    for (i, p) in points.iter().enumerate().skip(1) {
        let candidate: Vec<T> = p.iter().zip(base).map(|(a, b)| a.sub_val(b)).collect();
        if candidate.iter().all(HullInt::is_zero_val) {
            continue;
        }
        edges.push(candidate);
        if int_rank(&edges) == edges.len() {
            chosen.push(i);
            if edges.len() == dim {
                break;
            }
        } else {
            edges.pop();
        }
    }
    chosen
}

fn factorial(k: usize) -> Rat {
    let mut f = BigInt::one();
    for i in 2..=k {
        f *= BigInt::from(i);
    }
    Rat::from_integer(f)
}

/// Internal facet record during hull construction: vertex indices into the
/// point list, plus the unscaled integer outward normal and its offset
/// (`⟨normal, x⟩ = offset` on the facet, `< offset` inside).
struct FacetRec<T> {
    verts: Vec<usize>,
    normal: Vec<T>,
    offset: T,
}

fn make_facet_rec<T: HullInt>(
    dim: usize,
    points: &[Vec<T>],
    verts: Vec<usize>,
    interior_sum: &[T],
    interior_weight: &T,
) -> Result<FacetRec<T>, LabError> {
    let base = &points[verts[0]];
    let edges: Vec<Vec<T>> = verts[1..]
        .iter()
        .map(|&i| points[i].iter().zip(base).map(|(a, b)| a.sub_val(b)).collect())
        .collect();
    let mut normal = int_cross(dim, &edges);
    if normal.iter().all(HullInt::is_zero_val) {
        return Err(LabError::inconsistency(
            "convex_hull",
            "degenerate facet simplex",
        ));
    }
    let mut offset = int_dot(&normal, base);
    // interior test without division: compare ⟨N, Σ interior⟩ against
    // weight·offset, where Σ interior is `weight` times the reference point
    let inner = int_dot(&normal, interior_sum);
    let scaled_offset = offset.mul_val(interior_weight);
    match inner.cmp(&scaled_offset) {
        std::cmp::Ordering::Less => {}
        std::cmp::Ordering::Greater => {
            for c in &mut normal {
                *c = c.neg_val();
            }
            offset = offset.neg_val();
        }
        std::cmp::Ordering::Equal => {
            return Err(LabError::inconsistency(
                "convex_hull",
                "interior reference point lies on a facet hyperplane",
            ));
        }
    }
    Ok(FacetRec {
        verts,
        normal,
        offset,
    })
}

struct HullData {
    vertex_indices: Vec<usize>,
    facets: Vec<Facet>,
    volume: Rat,
}

/// The scalar-generic hull: integer points in, facet records and extreme
/// vertex indices out.
fn hull_core<T: HullInt>(
    dim: usize,
    ipoints: &[Vec<T>],
) -> Result<(Vec<usize>, Vec<FacetRec<T>>), LabError> {
    let simplex = int_affine_basis(ipoints);
    if simplex.len() != dim + 1 {
        return Err(LabError::DegenerateInput(format!(
            "affine hull has dimension {} < {}",
            simplex.len().saturating_sub(1),
            dim
        )));
    }

    // Fixed interior reference: the (unnormalized) vertex sum of the initial
    // simplex, weight dim+1. It stays interior as the hull grows.
    let mut interior_sum = vec![T::zero_val(); dim];
    for &i in &simplex {
        for (acc, c) in interior_sum.iter_mut().zip(&ipoints[i]) {
            *acc = acc.add_val(c);
        }
    }
    let mut weight = T::zero_val();
    for _ in 0..=dim {
        weight = weight.add_val(&T::one_val());
    }

    let mut facets: Vec<FacetRec<T>> = Vec::new();
    for skip in 0..simplex.len() {
        let verts: Vec<usize> = simplex
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != skip)
            .map(|(_, &i)| i)
            .collect();
        facets.push(make_facet_rec(dim, ipoints, verts, &interior_sum, &weight)?);
    }

    let in_simplex: HashSet<usize> = simplex.iter().copied().collect();
    for (pi, p) in ipoints.iter().enumerate() {
        if in_simplex.contains(&pi) {
            continue;
        }
        let visible: Vec<usize> = facets
            .iter()
            .enumerate()
            .filter(|(_, f)| int_dot(&f.normal, p) > f.offset)
            .map(|(k, _)| k)
            .collect();
        if visible.is_empty() {
            continue;
        }
        // A ridge of the visible region borders the horizon iff exactly one
        // visible facet contains it (its other owner is invisible).
        let mut ridge_count: HashMap<Vec<usize>, usize> = HashMap::new();
        for &fi in &visible {
            let verts = &facets[fi].verts;
            for skip in 0..verts.len() {
                let mut ridge: Vec<usize> = verts
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| *k != skip)
                    .map(|(_, &v)| v)
                    .collect();
                ridge.sort_unstable();
                *ridge_count.entry(ridge).or_insert(0) += 1;
            }
        }
        let mut horizon: Vec<Vec<usize>> = ridge_count
            .into_iter()
            .filter(|(_, c)| *c == 1)
            .map(|(r, _)| r)
            .collect();
        horizon.sort_unstable();

        let visible_set: HashSet<usize> = visible.into_iter().collect();
        let mut kept: Vec<FacetRec<T>> = Vec::with_capacity(facets.len());
        for (k, f) in facets.into_iter().enumerate() {
            if !visible_set.contains(&k) {
                kept.push(f);
            }
        }
        facets = kept;
        for ridge in horizon {
            let mut verts = ridge;
            verts.push(pi);
            facets.push(make_facet_rec(dim, ipoints, verts, &interior_sum, &weight)?);
        }
    }

    // Extreme points: a boundary point is a vertex iff its active facet
    // normals span ℝ^dim. Normal entries are already (dim-1)-minors, so the
    // rank elimination squares them; it runs in arbitrary precision.
    let mut used: Vec<usize> = facets.iter().flat_map(|f| f.verts.clone()).collect();
    used.sort_unstable();
    used.dedup();
    let mut vertex_indices = Vec::new();
    for &vi in &used {
        let active: Vec<Vec<BigInt>> = facets
            .iter()
            .filter(|f| int_dot(&f.normal, &ipoints[vi]) == f.offset)
            .map(|f| f.normal.iter().map(HullInt::to_bigint).collect())
            .collect();
        if int_rank(&active) == dim {
            vertex_indices.push(vi);
        }
    }
    Ok((vertex_indices, facets))
}

/// Largest coordinate magnitude for which the `i128` path cannot overflow:
/// hull intermediates are bounded by products of two `(dim-1)`-minors, so we
/// need `((dim-1)!·c^(dim-1))² · dim · c²` within `i128`. The thresholds
/// below leave a factor ≥ 16 of headroom.
fn i128_coordinate_budget(dim: usize) -> Option<i128> {
    match dim {
        1 => Some(1 << 60),
        2 => Some(1 << 30),
        3 => Some(1 << 18),
        4 => Some(1 << 12),
        5 => Some(1 << 9),
        6 => Some(1 << 7),
        _ => None,
    }
}

/// Incremental convex hull of a full-dimensional point set in ℝ^dim.
fn hull_full_dim(dim: usize, points: &[Vector]) -> Result<HullData, LabError> {
    // scale to integer coordinates
    let mut denom_lcm = BigInt::one();
    for p in points {
        for c in p.coords() {
            denom_lcm = num_integer::lcm(denom_lcm, c.denom().clone());
        }
    }
    let ipoints: Vec<Vec<BigInt>> = points
        .iter()
        .map(|p| {
            p.coords()
                .iter()
                .map(|c| c.numer() * (&denom_lcm / c.denom()))
                .collect()
        })
        .collect();

    // choose the scalar: i128 when every coordinate fits the overflow
    // budget for this dimension, arbitrary precision otherwise
    let narrow: Option<Vec<Vec<i128>>> = i128_coordinate_budget(dim).and_then(|budget| {
        let mut out = Vec::with_capacity(ipoints.len());
        for p in &ipoints {
            let mut row = Vec::with_capacity(dim);
            for c in p {
                let v = i128::try_from(c).ok()?;
                if v.abs() > budget {
                    return None;
                }
                row.push(v);
            }
            out.push(row);
        }
        Some(out)
    });

    let (vertex_indices, facets) = match &narrow {
        Some(small) => {
            let (idx, facets) = hull_core(dim, small)?;
            let facets = facets
                .into_iter()
                .map(|f| FacetRec {
                    verts: f.verts,
                    normal: f.normal.iter().map(|c| c.to_bigint()).collect(),
                    offset: f.offset.to_bigint(),
                })
                .collect::<Vec<FacetRec<BigInt>>>();
            (idx, facets)
        }
        None => hull_core(dim, &ipoints)?,
    };

    // unscale: the integer hull describes denom_lcm · P
    let mut area_div = factorial(dim - 1);
    for _ in 1..dim {
        area_div *= Rat::from_integer(denom_lcm.clone());
    }
    let support_div = &area_div * Rat::from_integer(denom_lcm.clone());
    let mut offset_total = BigInt::ZERO;
    let mut surface_sum = vec![BigInt::ZERO; dim];
    let mut out_facets = Vec::with_capacity(facets.len());
    for f in &facets {
        for (acc, c) in surface_sum.iter_mut().zip(&f.normal) {
            *acc += c;
        }
        offset_total += &f.offset;
        out_facets.push(Facet {
            area_vector: Vector::new(
                f.normal
                    .iter()
                    .map(|c| Rat::from_integer(c.clone()) / &area_div)
                    .collect(),
            ),
            support_value: Rat::from_integer(f.offset.clone()) / &support_div,
        });
    }
    let volume =
        Rat::from_integer(offset_total) / (&support_div * rat_int(dim as i64));

    if !surface_sum.iter().all(Zero::is_zero) {
        return Err(LabError::inconsistency(
            "convex_hull",
            "facet area vectors do not sum to zero",
        ));
    }
    if !volume.is_positive() {
        return Err(LabError::inconsistency(
            "convex_hull",
            "nonpositive hull volume",
        ));
    }

    Ok(HullData {
        vertex_indices,
        facets: out_facets,
        volume,
    })
}

fn dedupe(points: &[Vector]) -> Vec<Vector> {
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(points.len());
    for p in points {
        if seen.insert(p.clone()) {
            out.push(p.clone());
        }
    }
    out
}

fn closed_under_negation(vertices: &[Vector]) -> bool {
    let set: HashSet<&Vector> = vertices.iter().collect();
    vertices.iter().all(|v| set.contains(&v.neg()))
}

impl Polytope {
    /// Convex hull of a full-dimensional point set. Errors with
    /// `DegenerateInput` when the affine hull is a proper subspace.
    pub fn convex_hull(points: &[Vector]) -> Result<Polytope, LabError> {
        let points = dedupe(points);
        let dim = points
            .first()
            .map(Vector::dim)
            .ok_or_else(|| LabError::DegenerateInput("no points".into()))?;
        if points.len() < dim + 1 {
            return Err(LabError::DegenerateInput(format!(
                "need at least {} points in dimension {dim}, got {}",
                dim + 1,
                points.len()
            )));
        }
        let hull = hull_full_dim(dim, &points)?;
        let vertices: Vec<Vector> = hull.vertex_indices.iter().map(|&i| points[i].clone()).collect();
        let symmetric = closed_under_negation(&vertices);
        Ok(Polytope {
            dim,
            vertices,
            facets: hull.facets,
            volume: hull.volume,
            symmetric,
        })
    }

    /// Hull of an arbitrary point set; lower-dimensional sets are kept as
    /// extreme-point lists with no facet data and volume 0.
    pub fn from_points(points: &[Vector]) -> Result<Polytope, LabError> {
        let points = dedupe(points);
        let dim = points
            .first()
            .map(Vector::dim)
            .ok_or_else(|| LabError::DegenerateInput("no points".into()))?;
        let basis_idx = affine_basis_indices(&points);
        let rank = basis_idx.len().saturating_sub(1);
        if rank == dim {
            return Polytope::convex_hull(&points);
        }
        if rank == 0 {
            let symmetric = points[0].is_zero();
            return Ok(Polytope {
                dim,
                vertices: vec![points[0].clone()],
                facets: Vec::new(),
                volume: Rat::zero(),
                symmetric,
            });
        }
        // Affine-invariant extreme points: hull in affine coordinates of the
        // point set's own span.
        let base = points[basis_idx[0]].clone();
        let edges: Vec<Vector> = basis_idx[1..]
            .iter()
            .map(|&i| points[i].sub(&base))
            .collect();
        let gram = Matrix::from_rows(
            edges
                .iter()
                .map(|a| edges.iter().map(|b| a.dot(b)).collect())
                .collect(),
        );
        let coords: Vec<Vector> = points
            .iter()
            .map(|p| {
                let d = p.sub(&base);
                let rhs = Vector::new(edges.iter().map(|e| e.dot(&d)).collect());
                gram.solve(&rhs).expect("Gram matrix of independent edges")
            })
            .collect();
        let hull = hull_full_dim(rank, &coords)?;
        let vertices: Vec<Vector> = hull.vertex_indices.iter().map(|&i| points[i].clone()).collect();
        let symmetric = closed_under_negation(&vertices);
        Ok(Polytope {
            dim,
            vertices,
            facets: Vec::new(),
            volume: Rat::zero(),
            symmetric,
        })
    }

    /// Single-point body `{p}`.
    pub fn point(p: Vector) -> Polytope {
        let symmetric = p.is_zero();
        Polytope {
            dim: p.dim(),
            vertices: vec![p],
            facets: Vec::new(),
            volume: Rat::zero(),
            symmetric,
        }
    }

    /// Trusted constructor for bodies whose facet data is known in closed
    /// form (boxes). Callers must uphold the facet invariants.
    pub(crate) fn from_parts(
        dim: usize,
        vertices: Vec<Vector>,
        facets: Vec<Facet>,
        volume: Rat,
    ) -> Polytope {
        let symmetric = closed_under_negation(&vertices);
        Polytope {
            dim,
            vertices,
            facets,
            volume,
            symmetric,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vector] {
        &self.vertices
    }

    /// Facet pieces; empty for lower-dimensional bodies.
    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn volume(&self) -> &Rat {
        &self.volume
    }

    pub fn is_full_dim(&self) -> bool {
        !self.facets.is_empty()
    }

    /// Vertex set closed under negation.
    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    /// `h_P(u) = max_v ⟨u, v⟩` over the vertices.
    pub fn support(&self, u: &Vector) -> Rat {
        debug_assert_eq!(u.dim(), self.dim);
        self.vertices
            .iter()
            .map(|v| u.dot(v))
            .max()
            .expect("polytope has vertices")
    }

    /// Hull of all pairwise vertex sums. Degenerate results are allowed.
    pub fn minkowski_sum(&self, other: &Polytope) -> Result<Polytope, LabError> {
        debug_assert_eq!(self.dim, other.dim);
        let mut sums = Vec::with_capacity(self.vertices.len() * other.vertices.len());
        for a in &self.vertices {
            for b in &other.vertices {
                sums.push(a.add(b));
            }
        }
        Polytope::from_points(&sums)
    }

    /// Image under an invertible rational matrix.
    pub fn linear_image(&self, t: &Matrix) -> Result<Polytope, LabError> {
        if t.nrows() != self.dim || t.ncols() != self.dim {
            return Err(LabError::DegenerateInput(format!(
                "matrix must be {0}x{0}",
                self.dim
            )));
        }
        if t.det().is_zero() {
            return Err(LabError::SingularMatrix);
        }
        let mapped: Vec<Vector> = self.vertices.iter().map(|v| t.mul_vec(v)).collect();
        Polytope::from_points(&mapped)
    }

    /// Dilation by `λ ≥ 0`; `λ = 0` collapses to the origin.
    pub fn scale(&self, lambda: &Rat) -> Polytope {
        assert!(!lambda.is_negative(), "negative scaling");
        if lambda.is_zero() {
            return Polytope::point(Vector::zero(self.dim));
        }
        let n = self.dim as i64;
        let area_scale = pow_rat(lambda, n as u32 - 1);
        let support_scale = pow_rat(lambda, n as u32);
        Polytope {
            dim: self.dim,
            vertices: self.vertices.iter().map(|v| v.scale(lambda)).collect(),
            facets: self
                .facets
                .iter()
                .map(|f| Facet {
                    area_vector: f.area_vector.scale(&area_scale),
                    support_value: &f.support_value * &support_scale,
                })
                .collect(),
            volume: &self.volume * &support_scale,
            symmetric: self.symmetric,
        }
    }

    /// Squared inradius of a symmetric body: min over facets of `s²/|a|²`.
    pub fn inradius_sq(&self) -> Result<Rat, LabError> {
        if !self.is_full_dim() {
            return Err(LabError::DegenerateInput(
                "inradius needs a full-dimensional body".into(),
            ));
        }
        self.facets
            .iter()
            .map(|f| {
                let s2 = &f.support_value * &f.support_value;
                s2 / f.area_vector.norm_sq()
            })
            .min()
            .ok_or_else(|| LabError::DegenerateInput("no facets".into()))
    }

    /// Squared diameter: max over vertex pairs of `|p - q|²`.
    pub fn diameter_sq(&self) -> Rat {
        let mut best = Rat::zero();
        for (i, p) in self.vertices.iter().enumerate() {
            for q in &self.vertices[i + 1..] {
                let d = p.sub(q).norm_sq();
                if d > best {
                    best = d;
                }
            }
        }
        best
    }

    /// Largest `λ` with `λ·M ⊆ K`:
    /// `min { s_f / ⟨m, a_f⟩ : facet f of K, vertex m of M, ⟨m, a_f⟩ > 0 }`.
    pub fn max_inscribed_scaling(m: &Polytope, k: &Polytope) -> Result<Rat, LabError> {
        if !k.is_full_dim() {
            return Err(LabError::DegenerateInput(
                "containment target must be full-dimensional".into(),
            ));
        }
        let mut best: Option<Rat> = None;
        for f in &k.facets {
            for v in &m.vertices {
                let d = v.dot(&f.area_vector);
                if d.is_positive() {
                    let lam = &f.support_value / &d;
                    best = Some(match best {
                        Some(b) if b <= lam => b,
                        _ => lam,
                    });
                }
            }
        }
        best.ok_or(LabError::Unbounded)
    }

    /// Facet pieces merged by supporting hyperplane: pieces sharing an
    /// oriented normal direction and offset collapse into one facet with
    /// summed area vector and support value. This is what the equality-case
    /// detectors count; functionals never need it.
    pub fn merged_facets(&self) -> Vec<Facet> {
        let mut groups: Vec<((Vector, Rat), Facet)> = Vec::new();
        for f in &self.facets {
            let prim = f.area_vector.primitive_signed();
            // piece scale α with a = α·prim; hyperplane offset h = s/α
            let pivot = prim
                .coords()
                .iter()
                .position(|c| !c.is_zero())
                .expect("nonzero area vector");
            let alpha = f.area_vector.coord(pivot) / prim.coord(pivot);
            let offset = &f.support_value / &alpha;
            let key = (prim, offset);
            match groups.iter_mut().find(|(k, _)| *k == key) {
                Some((_, merged)) => {
                    merged.area_vector = merged.area_vector.add(&f.area_vector);
                    merged.support_value = &merged.support_value + &f.support_value;
                }
                None => groups.push((key, f.clone())),
            }
        }
        groups.into_iter().map(|(_, f)| f).collect()
    }

    /// Distinct normal lines (unsigned canonical directions) of the facets.
    pub fn normal_lines(&self) -> Vec<Vector> {
        let mut lines: Vec<Vector> = Vec::new();
        for f in &self.facets {
            let d = f.area_vector.canonical_direction();
            if !lines.contains(&d) {
                lines.push(d);
            }
        }
        lines
    }

    /// Splits facet piece `i` into two coplanar pieces (test support for the
    /// triangulation-invariance property).
    #[doc(hidden)]
    pub fn with_split_facet(&self, i: usize, t: &Rat) -> Polytope {
        assert!(t.is_positive() && *t < Rat::one());
        let mut facets = self.facets.clone();
        let f = facets.remove(i);
        facets.push(Facet {
            area_vector: f.area_vector.scale(t),
            support_value: &f.support_value * t,
        });
        let rest = Rat::one() - t;
        facets.push(Facet {
            area_vector: f.area_vector.scale(&rest),
            support_value: &f.support_value * &rest,
        });
        Polytope {
            dim: self.dim,
            vertices: self.vertices.clone(),
            facets,
            volume: self.volume.clone(),
            symmetric: self.symmetric,
        }
    }
}

/// Validates the standing preconditions for a body in the K position:
/// full-dimensional, origin-symmetric, origin strictly inside.
pub fn require_symmetric_body(k: &Polytope, what: &str) -> Result<(), LabError> {
    if !k.is_full_dim() {
        return Err(LabError::DegenerateInput(format!(
            "{what} must be full-dimensional"
        )));
    }
    if !k.is_symmetric() {
        return Err(LabError::DegenerateInput(format!(
            "{what} must be origin-symmetric"
        )));
    }
    if k.facets()
        .iter()
        .any(|f| !f.support_value.is_positive())
    {
        return Err(LabError::DegenerateInput(format!(
            "{what} must contain the origin in its interior"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn v(coords: &[i64]) -> Vector {
        Vector::from_ints(coords)
    }

    fn square() -> Polytope {
        Polytope::convex_hull(&[v(&[1, 1]), v(&[1, -1]), v(&[-1, 1]), v(&[-1, -1])]).unwrap()
    }

    fn cross2() -> Polytope {
        Polytope::convex_hull(&[v(&[1, 0]), v(&[-1, 0]), v(&[0, 1]), v(&[0, -1])]).unwrap()
    }

    #[test]
    fn square_hull() {
        let p = square();
        assert_eq!(p.volume(), &rat_int(4));
        assert_eq!(p.vertices().len(), 4);
        assert_eq!(p.facets().len(), 4);
        let mut areas: Vec<Vector> = p.facets().iter().map(|f| f.area_vector.clone()).collect();
        areas.sort_by_key(|a| a.render());
        for f in p.facets() {
            assert_eq!(f.support_value, rat_int(2));
        }
        let expected: HashSet<Vector> = [v(&[2, 0]), v(&[-2, 0]), v(&[0, 2]), v(&[0, -2])]
            .into_iter()
            .collect();
        assert_eq!(areas.into_iter().collect::<HashSet<_>>(), expected);
    }

    #[test]
    fn cross_polytope_2d_hull() {
        let p = cross2();
        assert_eq!(p.volume(), &rat_int(2));
        assert_eq!(p.facets().len(), 4);
        let expected: HashSet<Vector> = [v(&[1, 1]), v(&[1, -1]), v(&[-1, 1]), v(&[-1, -1])]
            .into_iter()
            .collect();
        let got: HashSet<Vector> = p.facets().iter().map(|f| f.area_vector.clone()).collect();
        assert_eq!(got, expected);
        for f in p.facets() {
            assert_eq!(f.support_value, rat_int(1));
        }
    }

    #[test]
    fn interior_points_are_not_vertices() {
        let mut pts = vec![
            v(&[1, 1, 1]),
            v(&[1, 1, -1]),
            v(&[1, -1, 1]),
            v(&[1, -1, -1]),
            v(&[-1, 1, 1]),
            v(&[-1, 1, -1]),
            v(&[-1, -1, 1]),
            v(&[-1, -1, -1]),
        ];
        pts.push(v(&[0, 0, 0]));
        let p = Polytope::convex_hull(&pts).unwrap();
        assert_eq!(p.vertices().len(), 8);
        assert!(!p.vertices().contains(&v(&[0, 0, 0])));
        assert_eq!(p.volume(), &rat_int(8));
    }

    #[test]
    fn boundary_non_extreme_points_are_dropped() {
        // midpoints of edges are on the hull but not extreme
        let p = Polytope::convex_hull(&[
            v(&[1, 1]),
            v(&[1, -1]),
            v(&[-1, 1]),
            v(&[-1, -1]),
            v(&[1, 0]),
            v(&[0, 1]),
        ])
        .unwrap();
        assert_eq!(p.vertices().len(), 4);
        assert_eq!(p.volume(), &rat_int(4));
    }

    #[test]
    fn collinear_input_rejected() {
        let err = Polytope::convex_hull(&[v(&[0, 0]), v(&[1, 1]), v(&[2, 2])]).unwrap_err();
        assert!(matches!(err, LabError::DegenerateInput(_)));
    }

    #[test]
    fn b1_3_facet_data() {
        let p = Polytope::convex_hull(&[
            v(&[1, 0, 0]),
            v(&[-1, 0, 0]),
            v(&[0, 1, 0]),
            v(&[0, -1, 0]),
            v(&[0, 0, 1]),
            v(&[0, 0, -1]),
        ])
        .unwrap();
        assert_eq!(p.volume(), &rat(4, 3));
        assert_eq!(p.facets().len(), 8);
        for f in p.facets() {
            assert_eq!(f.support_value, rat(1, 2));
            for c in f.area_vector.coords() {
                assert!(c == &rat(1, 2) || c == &rat(-1, 2));
            }
        }
    }

    #[test]
    fn support_function() {
        assert_eq!(square().support(&v(&[3, 4])), rat_int(7));
        assert_eq!(cross2().support(&v(&[3, 4])), rat_int(4));
        assert_eq!(square().support(&v(&[0, 0])), rat_int(0));
    }

    #[test]
    fn minkowski_sum_examples() {
        // square + horizontal segment = 4x2 box
        let seg = Polytope::from_points(&[v(&[1, 0]), v(&[-1, 0])]).unwrap();
        let sum = square().minkowski_sum(&seg).unwrap();
        assert_eq!(sum.volume(), &rat_int(8));
        assert_eq!(sum.support(&v(&[1, 0])), rat_int(2));
        assert_eq!(sum.support(&v(&[0, 1])), rat_int(1));

        // square + diagonal segment: hexagon of area 12
        let diag = Polytope::from_points(&[v(&[1, 1]), v(&[-1, -1])]).unwrap();
        let sum = square().minkowski_sum(&diag).unwrap();
        assert_eq!(sum.volume(), &rat_int(12));

        // P + {0} = P
        let zero = Polytope::point(Vector::zero(2));
        let sum = square().minkowski_sum(&zero).unwrap();
        assert_eq!(sum.volume(), square().volume());

        // cross-polytope as a cylinder: C + [-v, v] with v = (1/2, 1/2)
        let base = Polytope::from_points(&[
            Vector::new(vec![rat(1, 2), rat(-1, 2)]),
            Vector::new(vec![rat(-1, 2), rat(1, 2)]),
        ])
        .unwrap();
        let axis = Polytope::from_points(&[
            Vector::new(vec![rat(1, 2), rat(1, 2)]),
            Vector::new(vec![rat(-1, 2), rat(-1, 2)]),
        ])
        .unwrap();
        let sum = base.minkowski_sum(&axis).unwrap();
        assert_eq!(sum.volume(), &rat_int(2));
        assert_eq!(sum.vertices().len(), 4);
        assert_eq!(sum.support(&v(&[1, 0])), rat_int(1));
    }

    #[test]
    fn degenerate_sum_of_parallel_segments() {
        let seg = Polytope::from_points(&[v(&[1, 1]), v(&[-1, -1])]).unwrap();
        let sum = seg.minkowski_sum(&seg).unwrap();
        assert!(!sum.is_full_dim());
        assert_eq!(sum.vertices().len(), 2);
        assert!(sum.vertices().contains(&v(&[2, 2])));
    }

    #[test]
    fn linear_images() {
        let t = Matrix::from_rows(vec![
            vec![rat_int(2), rat_int(0)],
            vec![rat_int(0), rat(1, 2)],
        ]);
        let p = square().linear_image(&t).unwrap();
        assert_eq!(p.volume(), &rat_int(4));

        let rot = Matrix::from_rows(vec![
            vec![rat_int(0), rat_int(-1)],
            vec![rat_int(1), rat_int(0)],
        ]);
        let c = cross2().linear_image(&rot).unwrap();
        assert_eq!(c.volume(), &rat_int(2));
        assert_eq!(c.support(&v(&[1, 0])), rat_int(1));

        let shear = Matrix::from_rows(vec![
            vec![rat_int(1), rat_int(1)],
            vec![rat_int(0), rat_int(1)],
        ]);
        let p = square().linear_image(&shear).unwrap();
        assert_eq!(p.volume(), &rat_int(4));

        let sing = Matrix::from_rows(vec![
            vec![rat_int(1), rat_int(1)],
            vec![rat_int(1), rat_int(1)],
        ]);
        assert!(matches!(
            square().linear_image(&sing),
            Err(LabError::SingularMatrix)
        ));
    }

    #[test]
    fn metric_quantities() {
        assert_eq!(square().inradius_sq().unwrap(), rat_int(1));
        assert_eq!(cross2().inradius_sq().unwrap(), rat(1, 2));
        assert_eq!(square().diameter_sq(), rat_int(8));
        assert_eq!(cross2().diameter_sq(), rat_int(4));

        // box [-2,2]x[-1,1]: inradius 1, diameter^2 20
        let seg = Polytope::from_points(&[v(&[1, 0]), v(&[-1, 0])]).unwrap();
        let box22 = square().minkowski_sum(&seg).unwrap();
        assert_eq!(box22.inradius_sq().unwrap(), rat_int(1));
        assert_eq!(box22.diameter_sq(), rat_int(20));
    }

    #[test]
    fn inscribed_scaling() {
        assert_eq!(
            Polytope::max_inscribed_scaling(&cross2(), &square()).unwrap(),
            rat_int(1)
        );
        assert_eq!(
            Polytope::max_inscribed_scaling(&square(), &cross2()).unwrap(),
            rat(1, 2)
        );
        assert_eq!(
            Polytope::max_inscribed_scaling(&square(), &square()).unwrap(),
            rat_int(1)
        );
        let origin = Polytope::point(Vector::zero(2));
        assert!(matches!(
            Polytope::max_inscribed_scaling(&origin, &square()),
            Err(LabError::Unbounded)
        ));
    }

    #[test]
    fn merged_facets_and_normal_lines() {
        // 3-cube: 6 merged facets from 12 triangulated pieces, 3 normal lines
        let cube3 = Polytope::convex_hull(
            &(0..8)
                .map(|k| {
                    v(&[
                        if k & 1 == 0 { 1 } else { -1 },
                        if k & 2 == 0 { 1 } else { -1 },
                        if k & 4 == 0 { 1 } else { -1 },
                    ])
                })
                .collect::<Vec<_>>(),
        )
        .unwrap();
        let merged = cube3.merged_facets();
        assert_eq!(merged.len(), 6);
        for f in &merged {
            assert_eq!(f.support_value, rat_int(4));
        }
        assert_eq!(cube3.normal_lines().len(), 3);
    }

    #[test]
    fn split_facet_preserves_surface_sums(){
        let p = square();
        let split = p.with_split_facet(0, &rat(1, 3));
        assert_eq!(split.facets().len(), p.facets().len() + 1);
        let total =
            |q: &Polytope| q.facets().iter().fold(Rat::zero(), |acc, f| acc + &f.support_value);
        assert_eq!(total(&p), total(&split));
        assert_eq!(split.merged_facets().len(), 4);
    }

    #[test]
    fn hull_idempotence() {
        let p = cross2();
        let q = Polytope::convex_hull(p.vertices()).unwrap();
        assert_eq!(p.volume(), q.volume());
        assert_eq!(p.vertices().len(), q.vertices().len());
    }

    #[test]
    fn one_dimensional_hull() {
        let p = Polytope::convex_hull(&[v(&[3]), v(&[-2]), v(&[1])]).unwrap();
        assert_eq!(p.volume(), &rat_int(5));
        assert_eq!(p.vertices().len(), 2);
        assert_eq!(p.facets().len(), 2);
    }

    #[test]
    fn symmetry_detection() {
        assert!(square().is_symmetric());
        let asym = Polytope::convex_hull(&[v(&[0, 0]), v(&[1, 0]), v(&[0, 1])]).unwrap();
        assert!(!asym.is_symmetric());
    }
}
