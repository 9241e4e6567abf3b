//! Scalar helpers on exact rationals and big integers.
//!
//! The fractional part `<p/q> = p/q - floor(p/q)` drives every eigenspace
//! dimension in this crate, so it lives here once, exactly.

use num::integer::Roots;
use num::{BigInt, Signed, Zero};

use crate::error::{Error, Result};
use crate::{Int, Rational};

/// Fractional part `<p/q> = p/q - floor(p/q)`, always in `[0, 1)`.
pub fn frac_part(p: i64, q: i64) -> Result<Rational> {
    if q < 1 {
        return Err(Error::NonPositiveModulus { q });
    }
    Ok(Rational::new(
        BigInt::from(p.rem_euclid(q)),
        BigInt::from(q),
    ))
}

/// Largest `s >= 0` with `s^2 <= n`.
pub fn integer_sqrt_floor(n: &Int) -> Result<Int> {
    if n.is_negative() {
        return Err(Error::NegativeSqrtInput);
    }
    Ok(n.sqrt())
}

/// Parse a rational from `"p/q"` or a plain integer `"p"`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().ok()?;
            let den: BigInt = den.trim().parse().ok()?;
            if den.is_zero() {
                return None;
            }
            Some(Rational::new(num, den))
        }
        None => {
            let num: BigInt = s.parse().ok()?;
            Some(Rational::from_integer(num))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::{One, ToPrimitive};
    use proptest::prelude::*;

    fn rat(p: i64, q: i64) -> Rational {
        Rational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn frac_part_golden() {
        assert_eq!(frac_part(-1, 3).unwrap(), rat(2, 3));
        assert_eq!(frac_part(-12, 5).unwrap(), rat(3, 5));
        assert_eq!(frac_part(6, 3).unwrap(), Rational::zero());
    }

    #[test]
    fn frac_part_rejects_nonpositive_modulus() {
        assert!(matches!(
            frac_part(1, 0),
            Err(Error::NonPositiveModulus { q: 0 })
        ));
        assert!(frac_part(1, -3).is_err());
    }

    // Independent oracle: scan s = 0, 1, 2, ... until s^2 exceeds n.
    fn isqrt_by_scan(n: u64) -> u64 {
        let mut s = 0u64;
        while (s + 1) * (s + 1) <= n {
            s += 1;
        }
        s
    }

    #[test]
    fn integer_sqrt_golden() {
        assert_eq!(isqrt_by_scan(353), 18);
        assert_eq!(
            integer_sqrt_floor(&Int::from(353)).unwrap(),
            Int::from(18)
        );
        assert_eq!(integer_sqrt_floor(&Int::from(0)).unwrap(), Int::from(0));
        assert_eq!(integer_sqrt_floor(&Int::from(16)).unwrap(), Int::from(4));
    }

    #[test]
    fn integer_sqrt_matches_scan_oracle() {
        for n in 0u64..5000 {
            let got = integer_sqrt_floor(&Int::from(n)).unwrap().to_u64().unwrap();
            assert_eq!(got, isqrt_by_scan(n), "isqrt({n})");
        }
    }

    #[test]
    fn integer_sqrt_rejects_negative() {
        assert!(matches!(
            integer_sqrt_floor(&Int::from(-1)),
            Err(Error::NegativeSqrtInput)
        ));
    }

    #[test]
    fn parse_rational_forms() {
        assert_eq!(parse_rational("3/6").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-7").unwrap(), rat(-7, 1));
        assert_eq!(parse_rational(" 2 / 4 ").unwrap(), rat(1, 2));
        assert!(parse_rational("1/0").is_none());
        assert!(parse_rational("x").is_none());
    }

    proptest! {
        #[test]
        fn frac_part_in_unit_interval(p in -10_000i64..10_000, q in 1i64..500) {
            let f = frac_part(p, q).unwrap();
            prop_assert!(f >= Rational::zero());
            prop_assert!(f < Rational::one());
            // p/q - <p/q> is an integer
            let diff = rat(p, q) - f;
            prop_assert!(diff.is_integer());
        }

        #[test]
        fn frac_part_reflection(p in -10_000i64..10_000, q in 1i64..500) {
            let f = frac_part(p, q).unwrap();
            let g = frac_part(-p, q).unwrap();
            if p.rem_euclid(q) == 0 {
                prop_assert!(f.is_zero() && g.is_zero());
            } else {
                prop_assert_eq!(f + g, Rational::one());
            }
        }

        // The stored-reduced, positive-denominator invariant of the scalar.
        #[test]
        fn rational_canonical_form(p in -10_000i64..10_000, q in 1i64..500) {
            let r = rat(p, q);
            prop_assert!(r.denom() > &BigInt::zero());
            prop_assert!(num::Integer::gcd(r.numer(), r.denom()).abs() == BigInt::one());
        }
    }
}
