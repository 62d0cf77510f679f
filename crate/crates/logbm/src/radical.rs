//! Exact values of the form `q·√g`.
//!
//! Lower-dimensional volumes of rational polytopes (projections, central
//! sections) live in `ℚ·√ℕ`: a rational times the square root of an integer.
//! This module keeps such values exact. Canonically `g` is a nonnegative
//! integer with square factors folded into `q`, and the zero value is
//! `q = 0, g = 1`.
//!
//! Exactness never depends on `g` being fully squarefree:
//! * comparison works by sign analysis plus squaring,
//! * addition detects commensurability by testing whether `g₁·g₂` is a
//!   perfect square (exact for any magnitudes),
//! * products of canonical radicals canonicalize via a gcd split, with no
//!   factoring.
//!
//! Canonicalization itself strips square factors by trial division up to
//! 1000 and then folds a perfect-square remainder. Any radicand whose
//! remaining cofactor is below 10⁹ is therefore provably squarefree; larger
//! radicands (far beyond desk scale) may keep a hidden square factor, which
//! affects display only.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::rat::{rat_to_f64, render_rat, Rat};

/// An exact `q·√g` with rational `q` and integer radicand `g ≥ 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Radical {
    q: Rat,
    g: BigUint,
}

const TRIAL_DIVISION_BOUND: u64 = 1000;

/// Splits `m = s²·f` with `f` free of square factors below the trial bound,
/// returning `(s, f)`.
fn split_square_part(mut m: BigUint) -> (BigUint, BigUint) {
    let mut square_root_part = BigUint::one();
    if m.is_zero() {
        return (square_root_part, m);
    }
    let mut d = 2u64;
    while d <= TRIAL_DIVISION_BOUND {
        let dd = BigUint::from(d) * BigUint::from(d);
        if dd > m {
            break;
        }
        loop {
            let (quot, rem) = m.div_rem(&dd);
            if rem.is_zero() {
                m = quot;
                square_root_part *= BigUint::from(d);
            } else {
                break;
            }
        }
        d += 1;
    }
    // Whatever is left has no square divisor ≤ 1000²; a perfect-square
    // remainder is the only square factor still possible at desk scale.
    let root = m.sqrt();
    if &root * &root == m {
        square_root_part *= root;
        m = BigUint::one();
    }
    (square_root_part, m)
}

fn is_perfect_square(m: &BigUint) -> Option<BigUint> {
    let root = m.sqrt();
    if &(&root * &root) == m {
        Some(root)
    } else {
        None
    }
}

impl Radical {
    /// Builds `q·√g` from a rational radicand `g ≥ 0` and canonicalizes.
    pub fn new(q: Rat, g: Rat) -> Self {
        assert!(!g.is_negative(), "negative radicand");
        if q.is_zero() || g.is_zero() {
            return Radical::zero();
        }
        // q·√(a/b) = (q/b)·√(a·b)
        let a = g.numer().to_biguint().expect("nonnegative");
        let b = g.denom().to_biguint().expect("positive");
        let radicand = &a * &b;
        let q = q / Rat::from_integer(BigInt::from(b));
        let (s, f) = split_square_part(radicand);
        let q = q * Rat::from_integer(BigInt::from(s));
        if f.is_one() {
            Radical { q, g: BigUint::one() }
        } else {
            Radical { q, g: f }
        }
    }

    pub fn zero() -> Self {
        Radical {
            q: Rat::zero(),
            g: BigUint::one(),
        }
    }

    /// Embeds a rational as `q·√1`.
    pub fn from_rat(q: Rat) -> Self {
        if q.is_zero() {
            return Radical::zero();
        }
        Radical { q, g: BigUint::one() }
    }

    /// `√g` for a rational `g ≥ 0`.
    pub fn sqrt_of(g: Rat) -> Self {
        Radical::new(Rat::one(), g)
    }

    pub fn is_zero(&self) -> bool {
        self.q.is_zero()
    }

    /// True when the value is rational (canonical radicand 1 or zero).
    pub fn is_rational(&self) -> bool {
        self.g.is_one()
    }

    /// The rational part `q` of the canonical form.
    pub fn coefficient(&self) -> &Rat {
        &self.q
    }

    /// The integer radicand `g` of the canonical form.
    pub fn radicand(&self) -> &BigUint {
        &self.g
    }

    /// Returns the exact rational value when there is one.
    pub fn as_rat(&self) -> Option<Rat> {
        self.is_rational().then(|| self.q.clone())
    }

    /// The exact square of the value, always rational.
    pub fn square(&self) -> Rat {
        &self.q * &self.q * Rat::from_integer(BigInt::from(self.g.clone()))
    }

    pub fn mul(&self, other: &Radical) -> Radical {
        if self.is_zero() || other.is_zero() {
            return Radical::zero();
        }
        // √(ga)·√(gb) = g·√(ab) with a,b coprime, so the product of canonical
        // radicands canonicalizes by the gcd split alone.
        let common = self.g.gcd(&other.g);
        let a = &self.g / &common;
        let b = &other.g / &common;
        let q = &self.q * &other.q * Rat::from_integer(BigInt::from(common));
        let g = a * b;
        Radical { q, g }
    }

    pub fn mul_rat(&self, r: &Rat) -> Radical {
        if r.is_zero() || self.is_zero() {
            return Radical::zero();
        }
        Radical {
            q: &self.q * r,
            g: self.g.clone(),
        }
    }

    pub fn recip(&self) -> Radical {
        assert!(!self.is_zero(), "division by zero radical");
        // 1/(q·√g) = (1/(q·g))·√g
        Radical {
            q: (&self.q * Rat::from_integer(BigInt::from(self.g.clone()))).recip(),
            g: self.g.clone(),
        }
    }

    pub fn neg(&self) -> Radical {
        Radical {
            q: -self.q.clone(),
            g: self.g.clone(),
        }
    }

    /// Exact sum when the two radicands are commensurable (`g₁·g₂` a perfect
    /// square); `None` otherwise, and callers fall back to float mode.
    pub fn try_add(&self, other: &Radical) -> Option<Radical> {
        if self.is_zero() {
            return Some(other.clone());
        }
        if other.is_zero() {
            return Some(self.clone());
        }
        if self.g == other.g {
            let q = &self.q + &other.q;
            return Some(if q.is_zero() {
                Radical::zero()
            } else {
                Radical {
                    q,
                    g: self.g.clone(),
                }
            });
        }
        // √g₁ = (s/g₂)·√g₂ when g₁·g₂ = s².
        let s = is_perfect_square(&(&self.g * &other.g))?;
        let scale = Rat::new(BigInt::from(s), BigInt::from(other.g.clone()));
        let q = &self.q * scale + &other.q;
        Some(if q.is_zero() {
            Radical::zero()
        } else {
            Radical {
                q,
                g: other.g.clone(),
            }
        })
    }

    pub fn sign(&self) -> Ordering {
        if self.q.is_zero() {
            Ordering::Equal
        } else if self.q.is_positive() {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    /// Exact total order via sign analysis and squaring.
    pub fn cmp_exact(&self, other: &Radical) -> Ordering {
        let sa = self.sign();
        let sb = other.sign();
        if sa != sb {
            return sa.cmp(&sb);
        }
        match sa {
            Ordering::Equal => Ordering::Equal,
            Ordering::Greater => self.square().cmp(&other.square()),
            Ordering::Less => other.square().cmp(&self.square()),
        }
    }

    pub fn cmp_rat(&self, r: &Rat) -> Ordering {
        self.cmp_exact(&Radical::from_rat(r.clone()))
    }

    pub fn to_f64(&self) -> f64 {
        rat_to_f64(&self.q) * self.g.to_f64().unwrap_or(f64::INFINITY).sqrt()
    }

    /// Report form: `"p/q"` when rational, `"p/q*sqrt(g)"` otherwise.
    pub fn render(&self) -> String {
        if self.is_rational() {
            render_rat(&self.q)
        } else {
            format!("{}*sqrt({})", render_rat(&self.q), self.g)
        }
    }
}

impl fmt::Debug for Radical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Display for Radical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl From<Rat> for Radical {
    fn from(q: Rat) -> Self {
        Radical::from_rat(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    #[test]
    fn canonical_form_folds_squares() {
        // √8 = 2√2
        let r = Radical::sqrt_of(rat_int(8));
        assert_eq!(r.coefficient(), &rat_int(2));
        assert_eq!(r.radicand(), &BigUint::from(2u32));
        // √(9/4) = 3/2
        let r = Radical::sqrt_of(rat(9, 4));
        assert_eq!(r.as_rat(), Some(rat(3, 2)));
        // √(1/2) = (1/2)√2
        let r = Radical::sqrt_of(rat(1, 2));
        assert_eq!(r.coefficient(), &rat(1, 2));
        assert_eq!(r.radicand(), &BigUint::from(2u32));
    }

    #[test]
    fn zero_is_canonical() {
        assert!(Radical::new(rat_int(0), rat_int(7)).is_zero());
        assert!(Radical::new(rat_int(5), rat_int(0)).is_zero());
        assert_eq!(Radical::zero(), Radical::new(rat_int(3), rat_int(0)));
    }

    #[test]
    fn products_canonicalize_without_factoring() {
        // √6·√10 = 2√15
        let p = Radical::sqrt_of(rat_int(6)).mul(&Radical::sqrt_of(rat_int(10)));
        assert_eq!(p.coefficient(), &rat_int(2));
        assert_eq!(p.radicand(), &BigUint::from(15u32));
        // √2·√2 = 2
        let p = Radical::sqrt_of(rat_int(2)).mul(&Radical::sqrt_of(rat_int(2)));
        assert_eq!(p.as_rat(), Some(rat_int(2)));
    }

    #[test]
    fn commensurable_sums_are_exact() {
        // √2 + √8 = 3√2
        let sum = Radical::sqrt_of(rat_int(2))
            .try_add(&Radical::sqrt_of(rat_int(8)))
            .unwrap();
        assert_eq!(sum, Radical::new(rat_int(3), rat_int(2)));
        // √2 + √3: incommensurable
        assert!(Radical::sqrt_of(rat_int(2))
            .try_add(&Radical::sqrt_of(rat_int(3)))
            .is_none());
        // √2 - √2 = 0
        let z = Radical::sqrt_of(rat_int(2))
            .try_add(&Radical::sqrt_of(rat_int(2)).neg())
            .unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn exact_comparison() {
        // 1/√2 < √2
        let lhs = Radical::sqrt_of(rat_int(2)).recip();
        let rhs = Radical::sqrt_of(rat_int(2));
        assert_eq!(lhs.cmp_exact(&rhs), Ordering::Less);
        // 3 < 2√3 (9 < 12)
        assert_eq!(
            Radical::from_rat(rat_int(3)).cmp_exact(&Radical::new(rat_int(2), rat_int(3))),
            Ordering::Less
        );
        // -2√2 < -√2
        assert_eq!(
            Radical::new(rat_int(-2), rat_int(2)).cmp_exact(&Radical::new(rat_int(-1), rat_int(2))),
            Ordering::Less
        );
        // 2√2 = √8
        assert_eq!(
            Radical::new(rat_int(2), rat_int(2)).cmp_exact(&Radical::sqrt_of(rat_int(8))),
            Ordering::Equal
        );
    }

    #[test]
    fn recip_squares_back() {
        let r = Radical::new(rat(3, 2), rat_int(5));
        let prod = r.mul(&r.recip());
        assert_eq!(prod.as_rat(), Some(rat_int(1)));
    }

    #[test]
    fn rendering() {
        assert_eq!(Radical::new(rat_int(2), rat_int(2)).render(), "2*sqrt(2)");
        assert_eq!(Radical::sqrt_of(rat_int(4)).render(), "2");
        assert_eq!(Radical::zero().render(), "0");
        assert_eq!(Radical::new(rat(-1, 2), rat_int(3)).render(), "-1/2*sqrt(3)");
    }
}
