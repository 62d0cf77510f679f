//! Semi-norms on ℝⁿ in the two shapes surface functionals need.
//!
//! A max-form semi-norm `‖x‖ = max_v |⟨x, v⟩|` over a finite set Ω is the
//! support function of `conv(±Ω)`; a sum-form `‖x‖ = Σ α_i |⟨x, v_i⟩|`
//! (α_i ≥ 0) is the support function of a zonotope. Both evaluate exactly on
//! rational input.

use serde::{Deserialize, Serialize};

use crate::error::LabError;
use crate::linalg::Vector;
use crate::rat::{parse_rat, render_rat, Rat};
use num_traits::{Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SemiNorm {
    /// `‖x‖ = max_{v ∈ Ω} |⟨x, v⟩|`.
    Max { vectors: Vec<Vector> },
    /// `‖x‖ = Σ α_i |⟨x, v_i⟩|` with `α_i ≥ 0`.
    Sum { terms: Vec<(Rat, Vector)> },
}

fn abs(r: Rat) -> Rat {
    if r.is_negative() {
        -r
    } else {
        r
    }
}

impl SemiNorm {
    /// `|⟨·, v⟩|`.
    pub fn linear(v: Vector) -> SemiNorm {
        SemiNorm::Max { vectors: vec![v] }
    }

    pub fn dim(&self) -> Option<usize> {
        match self {
            SemiNorm::Max { vectors } => vectors.first().map(Vector::dim),
            SemiNorm::Sum { terms } => terms.first().map(|(_, v)| v.dim()),
        }
    }

    pub fn eval(&self, x: &Vector) -> Rat {
        match self {
            SemiNorm::Max { vectors } => vectors
                .iter()
                .map(|v| abs(v.dot(x)))
                .max()
                .unwrap_or_else(Rat::zero),
            SemiNorm::Sum { terms } => terms
                .iter()
                .map(|(alpha, v)| alpha * abs(v.dot(x)))
                .sum(),
        }
    }

    /// True when the semi-norm is identically zero (no effective generator).
    pub fn is_zero(&self) -> bool {
        match self {
            SemiNorm::Max { vectors } => vectors.iter().all(Vector::is_zero),
            SemiNorm::Sum { terms } => {
                terms.iter().all(|(a, v)| a.is_zero() || v.is_zero())
            }
        }
    }

    /// When every effective generator lies on one line: the canonical
    /// direction of that line. `None` for the zero semi-norm or when the
    /// generators span more than a line. Rank-one semi-norms are exactly
    /// `c·|⟨·, w⟩|`, the equality shape of the surface-quadratic inequality.
    pub fn rank_one_direction(&self) -> Option<Vector> {
        let gens: Vec<&Vector> = match self {
            SemiNorm::Max { vectors } => vectors.iter().filter(|v| !v.is_zero()).collect(),
            SemiNorm::Sum { terms } => terms
                .iter()
                .filter(|(a, v)| a.is_positive() && !v.is_zero())
                .map(|(_, v)| v)
                .collect(),
        };
        let first = gens.first()?;
        let dir = first.canonical_direction();
        gens.iter()
            .all(|g| g.canonical_direction() == dir)
            .then_some(dir)
    }
}

/// Textual form, shared with the CLI: `{"form":"max","vectors":[...]}` or
/// `{"form":"sum","terms":[{"alpha":"1","v":[...]}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "form", rename_all = "camelCase", deny_unknown_fields)]
pub enum NormSpec {
    #[serde(rename_all = "camelCase")]
    Max { vectors: Vec<Vec<String>> },
    #[serde(rename_all = "camelCase")]
    Sum { terms: Vec<NormTerm> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NormTerm {
    pub alpha: String,
    pub v: Vec<String>,
}

impl NormSpec {
    pub fn from_json(s: &str) -> Result<NormSpec, LabError> {
        serde_json::from_str(s).map_err(|e| LabError::Parse(format!("norm spec: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("norm specs serialize")
    }

    pub fn resolve(&self) -> Result<SemiNorm, LabError> {
        match self {
            NormSpec::Max { vectors } => {
                let vectors = vectors
                    .iter()
                    .enumerate()
                    .map(|(k, v)| Vector::parse(v).map_err(|e| e.in_field(&format!("vectors[{k}]"))))
                    .collect::<Result<Vec<_>, _>>()?;
                if vectors.is_empty() {
                    return Err(LabError::Parse("vectors: empty".into()));
                }
                Ok(SemiNorm::Max { vectors })
            }
            NormSpec::Sum { terms } => {
                let terms = terms
                    .iter()
                    .enumerate()
                    .map(|(k, t)| {
                        let alpha =
                            parse_rat(&t.alpha).map_err(|e| e.in_field(&format!("terms[{k}].alpha")))?;
                        if alpha.is_negative() {
                            return Err(LabError::Parse(format!(
                                "terms[{k}].alpha: must be nonnegative"
                            )));
                        }
                        let v = Vector::parse(&t.v)
                            .map_err(|e| e.in_field(&format!("terms[{k}].v")))?;
                        Ok((alpha, v))
                    })
                    .collect::<Result<Vec<_>, LabError>>()?;
                if terms.is_empty() {
                    return Err(LabError::Parse("terms: empty".into()));
                }
                Ok(SemiNorm::Sum { terms })
            }
        }
    }

    pub fn from_norm(n: &SemiNorm) -> NormSpec {
        match n {
            SemiNorm::Max { vectors } => NormSpec::Max {
                vectors: vectors.iter().map(Vector::render).collect(),
            },
            SemiNorm::Sum { terms } => NormSpec::Sum {
                terms: terms
                    .iter()
                    .map(|(a, v)| NormTerm {
                        alpha: render_rat(a),
                        v: v.render(),
                    })
                    .collect(),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    fn v(coords: &[i64]) -> Vector {
        Vector::from_ints(coords)
    }

    #[test]
    fn evaluation() {
        let n = SemiNorm::Max { vectors: vec![v(&[1, 0])] };
        assert_eq!(n.eval(&v(&[3, -4])), rat_int(3));

        let n = SemiNorm::Sum {
            terms: vec![(rat_int(1), v(&[1, 0])), (rat_int(1), v(&[0, 1]))],
        };
        assert_eq!(n.eval(&v(&[3, -4])), rat_int(7));

        let n = SemiNorm::Max {
            vectors: vec![v(&[1, 1]), v(&[1, -1])],
        };
        assert_eq!(n.eval(&v(&[2, 1])), rat_int(3));
    }

    #[test]
    fn homogeneity() {
        let n = SemiNorm::Sum {
            terms: vec![(rat(1, 2), v(&[1, 2])), (rat_int(2), v(&[3, -1]))],
        };
        let x = v(&[5, 7]);
        let lam = rat(-7, 3);
        let scaled = n.eval(&x.scale(&lam));
        assert_eq!(scaled, n.eval(&x) * rat(7, 3));
    }

    #[test]
    fn rank_one_detection() {
        let n = SemiNorm::Max {
            vectors: vec![v(&[1, 1]), v(&[-2, -2]), v(&[0, 0])],
        };
        assert_eq!(n.rank_one_direction(), Some(v(&[1, 1])));
        let n = SemiNorm::Max {
            vectors: vec![v(&[1, 0]), v(&[0, 1])],
        };
        assert_eq!(n.rank_one_direction(), None);
        let zero = SemiNorm::Max { vectors: vec![v(&[0, 0])] };
        assert!(zero.is_zero());
        assert_eq!(zero.rank_one_direction(), None);
        let n = SemiNorm::Sum {
            terms: vec![(rat_int(0), v(&[1, 0])), (rat_int(1), v(&[2, 4]))],
        };
        assert_eq!(n.rank_one_direction(), Some(v(&[1, 2])));
    }

    #[test]
    fn spec_roundtrip() {
        let n = SemiNorm::Sum {
            terms: vec![(rat(1, 2), v(&[1, -3]))],
        };
        let spec = NormSpec::from_norm(&n);
        let back = NormSpec::from_json(&spec.to_json()).unwrap().resolve().unwrap();
        assert_eq!(n, back);
        assert!(NormSpec::from_json(r#"{"form":"max","vectors":[["1/0"]]}"#)
            .unwrap()
            .resolve()
            .is_err());
    }
}
