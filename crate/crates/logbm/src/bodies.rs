//! Constructors for the named bodies and the textual body-spec format.
//!
//! A body spec is a tree of tagged records; every number is a rational
//! rendered as `"p/q"` or an integer string. Example:
//!
//! ```json
//! {"kind":"cylinder",
//!  "base":{"kind":"vertices","points":[["0","1"],["0","-1"]]},
//!  "axis":["1","0"]}
//! ```
//!
//! Resolution is deterministic, and every constructed body is
//! origin-symmetric. Lower-dimensional bodies (segments, planar squares,
//! flat zonotopes) are legal: they resolve to vertex lists and are consumed
//! through support evaluation and Minkowski sums only.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::LabError;
use crate::linalg::{Matrix, Vector};
use crate::polytope::{Facet, Polytope};
use crate::rat::{parse_rat, rat_int, Rat};
use num_traits::{One, Signed};

/// Declarative body description, shared between the CLI and the harness's
/// serialized counterexample instances.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase", deny_unknown_fields)]
pub enum BodySpec {
    /// Convex hull of an explicit symmetric point list.
    #[serde(rename_all = "camelCase")]
    Vertices { points: Vec<Vec<String>> },
    /// `[-1,1]^dim`.
    #[serde(rename_all = "camelCase")]
    Cube { dim: usize },
    /// Coordinate box with half-sides `φ_i`.
    #[serde(rename_all = "camelCase")]
    Box { half_sides: Vec<String> },
    /// `conv(±e_1, ..., ±e_dim)`.
    #[serde(rename_all = "camelCase")]
    CrossPolytope { dim: usize },
    /// Segment `[-v, v]`.
    #[serde(rename_all = "camelCase")]
    Segment { v: Vec<String> },
    /// `[-e_i, e_i] + [-e_j, e_j]` inside ℝ^dim (1-based axes).
    #[serde(rename_all = "camelCase")]
    Square2d { dim: usize, i: usize, j: usize },
    /// `Σ [-v_k, v_k]` over the generator list.
    #[serde(rename_all = "camelCase")]
    Zonotope { generators: Vec<Vec<String>> },
    /// `base + [-axis, axis]`.
    #[serde(rename_all = "camelCase")]
    Cylinder { base: Box<BodySpec>, axis: Vec<String> },
    /// Image of a body under an invertible matrix.
    #[serde(rename_all = "camelCase")]
    LinearImage {
        body: Box<BodySpec>,
        matrix: Vec<Vec<String>>,
    },
    /// Minkowski sum of the operands.
    #[serde(rename_all = "camelCase")]
    MinkowskiSum { operands: Vec<BodySpec> },
}

impl BodySpec {
    /// Spec capturing an already-built body verbatim (used when serializing
    /// counterexample candidates for replay).
    pub fn from_polytope(p: &Polytope) -> BodySpec {
        BodySpec::Vertices {
            points: p.vertices().iter().map(Vector::render).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("body specs serialize")
    }

    pub fn from_json(s: &str) -> Result<BodySpec, LabError> {
        serde_json::from_str(s).map_err(|e| LabError::Parse(format!("body spec: {e}")))
    }
}

fn parse_vector(coords: &[String], field: &str) -> Result<Vector, LabError> {
    Vector::parse(coords).map_err(|e| e.in_field(field))
}

/// `[-1,1]^n`.
pub fn cube(n: usize) -> Polytope {
    box_body(&vec![Rat::one(); n])
}

/// Coordinate box with half-sides `φ`; facet data in closed form.
pub fn box_body(half_sides: &[Rat]) -> Polytope {
    let n = half_sides.len();
    assert!(n >= 1, "box needs a dimension");
    assert!(
        half_sides.iter().all(|p| p.is_positive()),
        "box half-sides must be positive"
    );
    let mut vertices = Vec::with_capacity(1 << n);
    for mask in 0..1u32 << n {
        vertices.push(Vector::new(
            (0..n)
                .map(|i| {
                    if mask >> i & 1 == 0 {
                        half_sides[i].clone()
                    } else {
                        -half_sides[i].clone()
                    }
                })
                .collect(),
        ));
    }
    let mut volume = Rat::one();
    for p in half_sides {
        volume *= p * rat_int(2);
    }
    let mut facets = Vec::with_capacity(2 * n);
    for (i, phi) in half_sides.iter().enumerate() {
        let content = &volume / (phi * rat_int(2));
        for sign in [Rat::one(), -Rat::one()] {
            facets.push(Facet {
                area_vector: Vector::unit(n, i).scale(&(&content * &sign)),
                support_value: &content * phi,
            });
        }
    }
    Polytope::from_parts(n, vertices, facets, volume)
}

/// `conv(±e_1, ..., ±e_n)`.
pub fn cross_polytope(n: usize) -> Result<Polytope, LabError> {
    let mut pts = Vec::with_capacity(2 * n);
    for i in 0..n {
        pts.push(Vector::unit(n, i));
        pts.push(Vector::unit(n, i).neg());
    }
    Polytope::convex_hull(&pts)
}

/// The segment `[-v, v]`.
pub fn segment(v: &Vector) -> Result<Polytope, LabError> {
    if v.is_zero() {
        return Err(LabError::ZeroVector("segment generator".into()));
    }
    Polytope::from_points(&[v.clone(), v.neg()])
}

/// `[-e_i, e_i] + [-e_j, e_j]` in ℝ^n, 1-based axes.
pub fn square2d(n: usize, i: usize, j: usize) -> Result<Polytope, LabError> {
    if i == j || i == 0 || j == 0 || i > n || j > n {
        return Err(LabError::DegenerateInput(format!(
            "square2d axes must be distinct 1-based indices within dimension {n}, got ({i}, {j})"
        )));
    }
    let ei = Vector::unit(n, i - 1);
    let ej = Vector::unit(n, j - 1);
    Polytope::from_points(&[
        ei.add(&ej),
        ei.sub(&ej),
        ei.neg().add(&ej),
        ei.neg().sub(&ej),
    ])
}

/// `Σ [-v_k, v_k]` by iterated Minkowski sums.
pub fn zonotope(generators: &[Vector]) -> Result<Polytope, LabError> {
    let mut acc: Option<Polytope> = None;
    for g in generators {
        let seg = segment(g)?;
        acc = Some(match acc {
            None => seg,
            Some(z) => z.minkowski_sum(&seg)?,
        });
    }
    acc.ok_or_else(|| LabError::DegenerateInput("zonotope needs generators".into()))
}

/// Resolves a body spec to a polytope.
pub fn construct(spec: &BodySpec) -> Result<Polytope, LabError> {
    match spec {
        BodySpec::Vertices { points } => {
            if points.is_empty() {
                return Err(LabError::DegenerateInput("vertices: empty point list".into()));
            }
            let pts = points
                .iter()
                .enumerate()
                .map(|(k, p)| parse_vector(p, &format!("points[{k}]")))
                .collect::<Result<Vec<_>, _>>()?;
            let dim = pts[0].dim();
            if pts.iter().any(|p| p.dim() != dim) {
                return Err(LabError::Parse("points: inconsistent dimensions".into()));
            }
            let body = Polytope::from_points(&pts)?;
            if !body.is_symmetric() {
                return Err(LabError::DegenerateInput(
                    "points: vertex set is not closed under negation".into(),
                ));
            }
            Ok(body)
        }
        BodySpec::Cube { dim } => {
            if *dim == 0 {
                return Err(LabError::DegenerateInput("dim: must be at least 1".into()));
            }
            Ok(cube(*dim))
        }
        BodySpec::Box { half_sides } => {
            let phi = half_sides
                .iter()
                .map(|s| parse_rat(s).map_err(|e| e.in_field("halfSides")))
                .collect::<Result<Vec<_>, _>>()?;
            if phi.is_empty() {
                return Err(LabError::DegenerateInput("halfSides: empty".into()));
            }
            if phi.iter().any(|p| !p.is_positive()) {
                return Err(LabError::DegenerateInput(
                    "halfSides: entries must be positive".into(),
                ));
            }
            Ok(box_body(&phi))
        }
        BodySpec::CrossPolytope { dim } => {
            if *dim == 0 {
                return Err(LabError::DegenerateInput("dim: must be at least 1".into()));
            }
            cross_polytope(*dim)
        }
        BodySpec::Segment { v } => segment(&parse_vector(v, "v")?),
        BodySpec::Square2d { dim, i, j } => square2d(*dim, *i, *j),
        BodySpec::Zonotope { generators } => {
            let gens = generators
                .iter()
                .enumerate()
                .map(|(k, g)| parse_vector(g, &format!("generators[{k}]")))
                .collect::<Result<Vec<_>, _>>()?;
            zonotope(&gens)
        }
        BodySpec::Cylinder { base, axis } => {
            let base = construct(base).map_err(|e| e.in_field("base"))?;
            let axis = parse_vector(axis, "axis")?;
            base.minkowski_sum(&segment(&axis)?)
        }
        BodySpec::LinearImage { body, matrix } => {
            let body = construct(body).map_err(|e| e.in_field("body"))?;
            let t = Matrix::parse(matrix).map_err(|e| e.in_field("matrix"))?;
            body.linear_image(&t)
        }
        BodySpec::MinkowskiSum { operands } => {
            let mut acc: Option<Polytope> = None;
            for (k, op) in operands.iter().enumerate() {
                let body = construct(op).map_err(|e| e.in_field(&format!("operands[{k}]")))?;
                acc = Some(match acc {
                    None => body,
                    Some(a) => a.minkowski_sum(&body)?,
                });
            }
            acc.ok_or_else(|| LabError::DegenerateInput("operands: empty".into()))
        }
    }
}

/// Retry budget for random full-dimensional hulls.
pub const RANDOM_BODY_RETRY_LIMIT: usize = 32;

/// PRNG identifier recorded in reports for reproducibility.
pub const PRNG_NAME: &str = "ChaCha8(seed_from_u64)";

/// Deterministic random symmetric polytope: `k` integer points with
/// coordinates in `[-coord_bound, coord_bound]`, hull of `±points`, redrawn
/// until full-dimensional.
pub fn random_symmetric_polytope(
    n: usize,
    k: usize,
    seed: u64,
    coord_bound: i64,
) -> Result<Polytope, LabError> {
    assert!(n >= 1 && coord_bound >= 1);
    assert!(k >= n, "need at least n points");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_BODY_RETRY_LIMIT {
        let mut pts = Vec::with_capacity(2 * k);
        for _ in 0..k {
            let p = loop {
                let cand = Vector::from_ints(
                    &(0..n)
                        .map(|_| rng.random_range(-coord_bound..=coord_bound))
                        .collect::<Vec<_>>(),
                );
                if !cand.is_zero() {
                    break cand;
                }
            };
            pts.push(p.neg());
            pts.push(p);
        }
        match Polytope::convex_hull(&pts) {
            Ok(body) => return Ok(body),
            Err(LabError::DegenerateInput(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(LabError::RetryExhausted(RANDOM_BODY_RETRY_LIMIT))
}
