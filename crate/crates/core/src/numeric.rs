//! Exact rational scalars and certified comparisons of square-root sums.
//!
//! Every predicate in this crate runs on [`Rat`] (arbitrary-precision
//! rationals). The only irrational quantities anywhere are Euclidean lengths,
//! and those are never materialized: length comparisons go through
//! [`compare_sqrt_sums`], which brackets each sum of square roots between
//! exact rational bounds and widens precision until the two sums separate,
//! or proves exact equality by reducing both sides to canonical
//! coefficient-times-class form.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Exact rational scalar used throughout the crate.
pub type Rat = BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Fraction `num/den` as a rational. Panics on a zero denominator, which is
/// a programming error at a literal call site, not an input condition.
pub fn ratio(num: i64, den: i64) -> Rat {
    assert!(den != 0, "ratio: zero denominator");
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Parses a rational from `"p/q"`, integer (`"-7"`), or decimal (`"3.25"`)
/// notation. Exact: decimals become tens-power fractions.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty number".into()));
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
        let d: BigInt = den
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        return Ok(Rat::new(n, d));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        let (sign, int_digits) = match int_part.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, int_part.strip_prefix('+').unwrap_or(int_part)),
        };
        if !frac_part.chars().all(|c| c.is_ascii_digit()) || frac_part.is_empty() {
            return Err(Error::Parse(format!("bad decimal {s:?}")));
        }
        let int_digits = if int_digits.is_empty() { "0" } else { int_digits };
        let whole: BigInt = int_digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad decimal {s:?}")))?;
        let frac: BigInt = frac_part
            .parse()
            .map_err(|_| Error::Parse(format!("bad decimal {s:?}")))?;
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        let value = Rat::from_integer(whole) + Rat::new(frac, scale.clone());
        return Ok(if sign < 0 { -value } else { value });
    }
    let n: BigInt = s
        .parse()
        .map_err(|_| Error::Parse(format!("bad integer {s:?}")))?;
    Ok(Rat::from_integer(n))
}

/// Canonical string form: `"p"` when the denominator is one, else `"p/q"`
/// in lowest terms with the sign on the numerator.
pub fn format_rat(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Floor of the square root of a nonnegative integer.
fn floor_sqrt(n: &BigUint) -> BigUint {
    n.sqrt()
}

/// Encloses `sqrt(x)` in `[lo, hi]` with `hi - lo = 1/(q * 2^bits)` where
/// `x = p/q` in lowest terms. Errors on negative input.
pub fn sqrt_interval(x: &Rat, bits: u32) -> Result<(Rat, Rat)> {
    if x.is_negative() {
        return Err(Error::DegenerateInput(format!(
            "sqrt of negative rational {}",
            format_rat(x)
        )));
    }
    if x.is_zero() {
        return Ok((Rat::zero(), Rat::zero()));
    }
    let p = x.numer().to_biguint().expect("nonnegative numerator");
    let q = x.denom().to_biguint().expect("positive denominator");
    // sqrt(p/q) = sqrt(p*q)/q; scale by 4^bits so the floor sqrt carries
    // `bits` extra binary digits.
    let scaled = (&p * &q) << (2 * bits as usize);
    let s = floor_sqrt(&scaled);
    let denom = BigInt::from(q) << (bits as usize);
    let lo = Rat::new(BigInt::from(s.clone()), denom.clone());
    let hi = Rat::new(BigInt::from(s + BigUint::one()), denom);
    Ok((lo, hi))
}

/// Encloses `sum_i sqrt(xs[i])` between exact rational bounds.
pub fn sum_sqrt_interval(xs: &[Rat], bits: u32) -> Result<(Rat, Rat)> {
    let mut lo = Rat::zero();
    let mut hi = Rat::zero();
    for x in xs {
        let (l, h) = sqrt_interval(x, bits)?;
        lo += l;
        hi += h;
    }
    Ok((lo, hi))
}

/// Exact square root of a rational if it is a perfect square.
fn exact_sqrt(x: &Rat) -> Option<Rat> {
    if x.is_negative() {
        return None;
    }
    let p = x.numer().to_biguint()?;
    let q = x.denom().to_biguint()?;
    let sp = floor_sqrt(&p);
    let sq = floor_sqrt(&q);
    if &sp * &sp == p && &sq * &sq == q {
        Some(Rat::new(BigInt::from(sp), BigInt::from(sq)))
    } else {
        None
    }
}

/// Reduces a signed multiset of square roots to per-class coefficients:
/// two radicands share a class iff their ratio is a perfect square, and
/// square roots of distinct classes are linearly independent over the
/// rationals, so the reduced form is canonical.
fn radical_classes(terms: &[(Rat, i32)]) -> Result<Vec<(Rat, Rat)>> {
    let mut classes: Vec<(Rat, Rat)> = Vec::new();
    for (x, sign) in terms {
        if x.is_negative() {
            return Err(Error::DegenerateInput(format!(
                "sqrt of negative rational {}",
                format_rat(x)
            )));
        }
        if x.is_zero() {
            continue;
        }
        let signed = rat(*sign as i64);
        let mut placed = false;
        for (rep, coeff) in classes.iter_mut() {
            if let Some(root) = exact_sqrt(&(x / &*rep)) {
                *coeff += signed.clone() * root;
                placed = true;
                break;
            }
        }
        if !placed {
            classes.push((x.clone(), signed));
        }
    }
    classes.retain(|(_, c)| !c.is_zero());
    Ok(classes)
}

/// Precision ladder for interval separation, in bits.
const PRECISION_LADDER: [u32; 7] = [64, 128, 256, 512, 1024, 2048, 4096];

/// Certified comparison of `sum sqrt(a)` with `sum sqrt(b)`.
///
/// Equality is decided exactly via radical-class reduction; strict orders
/// are certified by interval arithmetic with doubling precision. Errors
/// with `PrecisionExhausted` only if the sums differ by less than the
/// finest interval width (about `2^-4096`), which no construction in this
/// crate produces.
pub fn compare_sqrt_sums(a: &[Rat], b: &[Rat]) -> Result<Ordering> {
    let mut terms: Vec<(Rat, i32)> = Vec::with_capacity(a.len() + b.len());
    terms.extend(a.iter().cloned().map(|x| (x, 1)));
    terms.extend(b.iter().cloned().map(|x| (x, -1)));
    if radical_classes(&terms)?.is_empty() {
        return Ok(Ordering::Equal);
    }
    for bits in PRECISION_LADDER {
        let (alo, ahi) = sum_sqrt_interval(a, bits)?;
        let (blo, bhi) = sum_sqrt_interval(b, bits)?;
        if alo > bhi {
            return Ok(Ordering::Greater);
        }
        if ahi < blo {
            return Ok(Ordering::Less);
        }
    }
    Err(Error::PrecisionExhausted(
        "square-root sums within 2^-4096 of each other but not equal".into(),
    ))
}

/// Certifies `sum sqrt(larger) - sum sqrt(smaller) >= margin`.
///
/// Returns `Ok(())` on success; `PrecisionExhausted` either when the gap is
/// provably below the margin or when it cannot be separated from it.
pub fn certify_sqrt_sum_gap(smaller: &[Rat], larger: &[Rat], margin: &Rat) -> Result<()> {
    if margin.is_negative() {
        return Err(Error::DegenerateInput("negative certification margin".into()));
    }
    for bits in PRECISION_LADDER {
        let (slo, shi) = sum_sqrt_interval(smaller, bits)?;
        let (llo, lhi) = sum_sqrt_interval(larger, bits)?;
        if &(llo - &shi) >= margin {
            return Ok(());
        }
        if &(lhi - slo) < margin {
            return Err(Error::PrecisionExhausted(format!(
                "gap certified below the required margin {}",
                format_rat(margin)
            )));
        }
    }
    Err(Error::PrecisionExhausted(format!(
        "gap not separable from margin {} at 4096 bits",
        format_rat(margin)
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_fraction_integer_decimal() {
        assert_eq!(parse_rat("3/4").unwrap(), ratio(3, 4));
        assert_eq!(parse_rat("-7").unwrap(), rat(-7));
        assert_eq!(parse_rat("3.25").unwrap(), ratio(13, 4));
        assert_eq!(parse_rat("-0.5").unwrap(), ratio(-1, 2));
        assert_eq!(parse_rat(" 6/8 ").unwrap(), ratio(3, 4));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("").is_err());
        assert!(parse_rat("1.2.3").is_err());
    }

    #[test]
    fn format_canonical() {
        assert_eq!(format_rat(&ratio(6, 8)), "3/4");
        assert_eq!(format_rat(&ratio(-6, 8)), "-3/4");
        assert_eq!(format_rat(&rat(5)), "5");
        assert_eq!(format_rat(&ratio(8, 4)), "2");
    }

    #[test]
    fn sqrt_interval_brackets_two() {
        let (lo, hi) = sqrt_interval(&rat(2), 64).unwrap();
        assert!(&lo * &lo <= rat(2));
        assert!(&hi * &hi >= rat(2));
        assert!(&hi - &lo <= Rat::new(1.into(), BigInt::from(2).pow(64)));
    }

    #[test]
    fn compare_exact_equalities() {
        // sqrt(8) + sqrt(18) = 2*sqrt(2) + 3*sqrt(2) = sqrt(50)
        let a = [rat(8), rat(18)];
        let b = [rat(50)];
        assert_eq!(compare_sqrt_sums(&a, &b).unwrap(), Ordering::Equal);
        let a = [rat(8)];
        let b = [rat(2), rat(2)];
        assert_eq!(compare_sqrt_sums(&a, &b).unwrap(), Ordering::Equal);
    }

    #[test]
    fn compare_strict_orders() {
        // sqrt(2) + sqrt(3) vs sqrt(10): squares are 5 + 2*sqrt(6) ~ 9.9 < 10
        assert_eq!(
            compare_sqrt_sums(&[rat(2), rat(3)], &[rat(10)]).unwrap(),
            Ordering::Less
        );
        assert_eq!(
            compare_sqrt_sums(&[rat(2), rat(3)], &[rat(9)]).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn certify_gap_pass_and_fail() {
        // sqrt(9) - sqrt(4) = 1 >= 1/2
        certify_sqrt_sum_gap(&[rat(4)], &[rat(9)], &ratio(1, 2)).unwrap();
        // gap is exactly 1, margin 2 must fail
        assert!(matches!(
            certify_sqrt_sum_gap(&[rat(4)], &[rat(9)], &rat(2)),
            Err(Error::PrecisionExhausted(_))
        ));
    }

    proptest! {
        #[test]
        fn parse_format_roundtrip(p in -10_000i64..10_000, q in 1i64..10_000) {
            let x = ratio(p, q);
            prop_assert_eq!(parse_rat(&format_rat(&x)).unwrap(), x);
        }

        #[test]
        fn sqrt_interval_contains(p in 0i64..100_000, q in 1i64..1000, bits in 8u32..128) {
            let x = ratio(p, q);
            let (lo, hi) = sqrt_interval(&x, bits).unwrap();
            prop_assert!(&lo * &lo <= x);
            prop_assert!(&hi * &hi >= x);
            prop_assert!(lo <= hi);
        }

        #[test]
        fn compare_matches_rational_order(a in 0i64..1000, b in 0i64..1000) {
            // sqrt(a^2) vs sqrt(b^2) must order exactly like a vs b.
            let got = compare_sqrt_sums(&[rat(a * a)], &[rat(b * b)]).unwrap();
            prop_assert_eq!(got, a.cmp(&b));
        }
    }
}
