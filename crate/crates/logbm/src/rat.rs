//! Exact rational scalars.
//!
//! Every quantity the kernel produces is an arbitrary-precision rational in
//! canonical reduced form (this is what `num_rational::BigRational` maintains:
//! coprime numerator/denominator, positive denominator). Values serialize as
//! `"p/q"`, or just `"p"` when the denominator is 1, so reports stay diffable.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::LabError;

/// Canonical exact scalar: an arbitrary-precision rational.
pub type Rat = BigRational;

/// Shorthand for small rational constants.
pub fn rat(num: i64, den: i64) -> Rat {
    assert!(den != 0, "zero denominator");
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for small integer constants.
pub fn rat_int(num: i64) -> Rat {
    Rat::from_integer(BigInt::from(num))
}

/// Parses `"p/q"` or `"p"` with optional sign. Rejects zero denominators.
pub fn parse_rat(s: &str) -> Result<Rat, LabError> {
    let s = s.trim();
    let bad = |_| LabError::Parse(format!("invalid rational '{s}'"));
    match s.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().map_err(bad)?;
            let den: BigInt = den.trim().parse().map_err(bad)?;
            if den.is_zero() {
                return Err(LabError::Parse(format!(
                    "invalid rational '{s}': zero denominator"
                )));
            }
            Ok(Rat::new(num, den))
        }
        None => {
            let num: BigInt = s.parse().map_err(bad)?;
            Ok(Rat::from_integer(num))
        }
    }
}

/// Renders in the `"p/q"` report form (`"p"` for integers).
pub fn render_rat(r: &Rat) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Small exact integer power.
pub fn pow_rat(r: &Rat, k: u32) -> Rat {
    let mut out = Rat::from_integer(BigInt::from(1));
    for _ in 0..k {
        out *= r;
    }
    out
}

/// Nearest-f64 rendering for float-mode decisions and human-facing margins.
pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Out-of-range rationals only arise from pathological inputs; keep the
        // sign so float-mode comparisons stay meaningful.
        if r.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render_roundtrip() {
        for s in ["0", "7", "-3", "4/6", "-10/4", "1000000000000000000000/7"] {
            let r = parse_rat(s).unwrap();
            let back = parse_rat(&render_rat(&r)).unwrap();
            assert_eq!(r, back);
        }
        assert_eq!(render_rat(&parse_rat("4/6").unwrap()), "2/3");
        assert_eq!(render_rat(&parse_rat("-10/4").unwrap()), "-5/2");
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("0/0").is_err());
    }

    #[test]
    fn garbage_rejected() {
        for s in ["", "a", "1.5", "1/2/3", "1/ /2"] {
            assert!(parse_rat(s).is_err(), "accepted {s:?}");
        }
    }
}
