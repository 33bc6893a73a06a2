//! Closed-form MDS weight enumerators and the MacWilliams transform.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::algebra::{big_pow, binom, int, series_of_rational, sign, HomogeneousEnumerator, UniPoly};
use crate::error::{Error, Result};

/// `M^{(s)}_{n,d} = C(n,s)(q−1) Σ_{i=0}^{s−d} (−1)^i C(s−1,i) q^{s−d−i}`.
///
/// Defined for every `1 ≤ d ≤ s ≤ n` whether or not such a code exists, so
/// the result can be negative.
pub fn mds_count(n: usize, d: usize, q: u64, s: usize) -> Result<BigInt> {
    if q < 2 {
        return Err(Error::RangeError(format!("q = {q} must be at least 2")));
    }
    if !(1 <= d && d <= s && s <= n) {
        return Err(Error::RangeError(format!(
            "mds_count needs 1 <= d <= s <= n, got n={n} d={d} s={s}"
        )));
    }
    Ok(mds_count_unchecked(n as i64, d as i64, q, s as i64))
}

pub(crate) fn mds_count_unchecked(n: i64, d: i64, q: u64, s: i64) -> BigInt {
    let mut inner = BigInt::zero();
    for i in 0..=(s - d) {
        inner += sign(i) * binom(s - 1, i) * big_pow(q, (s - d - i) as u32);
    }
    binom(n, s) * BigInt::from(q - 1) * inner
}

/// `M_{n,d}(x,y)`: `x^n` plus `mds_count` in every weight `d ≤ s ≤ n`.
pub fn mds_enumerator(n: usize, d: usize, q: u64) -> Result<HomogeneousEnumerator> {
    if !(1 <= d && d <= n) {
        return Err(Error::RangeError(format!(
            "mds_enumerator needs 1 <= d <= n, got n={n} d={d}"
        )));
    }
    if q < 2 {
        return Err(Error::RangeError(format!("q = {q} must be at least 2")));
    }
    Ok(mds_enumerator_unchecked(n, d, q))
}

pub(crate) fn mds_enumerator_unchecked(n: usize, d: usize, q: u64) -> HomogeneousEnumerator {
    let mut e = HomogeneousEnumerator::x_pow(n);
    for s in d.max(1)..=n {
        e.set(s, int(mds_count_unchecked(n as i64, d as i64, q, s as i64)));
    }
    e
}

/// `W_C(x+(q−1)y, x−y)/|C|`, the enumerator of the dual code.
pub fn macwilliams_transform(
    w: &HomogeneousEnumerator,
    q: u64,
    code_size: &BigInt,
) -> Result<HomogeneousEnumerator> {
    let mass = w.mass();
    if mass != int(code_size.clone()) || !code_size.is_positive() {
        return Err(Error::MassMismatch {
            mass: mass.to_string(),
            size: code_size.to_string(),
        });
    }
    let out = w.substitute_pair(q).scale(&int(code_size.clone()).recip());
    if !out.is_integral() {
        return Err(Error::NonIntegralResult);
    }
    Ok(out)
}

/// `Coeff_{t^{n−d}}` of `P(t)·[xt + y(1−t)]^n / ((1−t)(1−qt))`.
pub(crate) fn coefficient_extraction(p: &UniPoly, n: usize, d: usize, q: u64) -> HomogeneousEnumerator {
    let top = n - d;
    let series = series_of_rational(p, q, top);
    let mut out = HomogeneousEnumerator::zero(n);
    // [t^m] of the bracket at x^{n−s}y^s is C(n,s)(−1)^j C(s,j) with j = m − (n−s)
    for s in 0..=n {
        let mut acc = crate::algebra::Rational::zero();
        for m in 0..=top {
            let j = m as i64 - (n - s) as i64;
            if j < 0 || j > s as i64 {
                continue;
            }
            let e = binom(n as i64, s as i64) * sign(j) * binom(s as i64, j);
            acc += series.at((top - m) as i64) * int(e);
        }
        out.set(s, acc);
    }
    out
}

/// Checks `(M_{n,d} − x^n)/(q−1) = Coeff_{t^{n−d}}([xt+y(1−t)]^n/((1−t)(1−qt)))`.
pub fn coefficient_identity_check(n: usize, d: usize, q: u64) -> Result<bool> {
    let m = mds_enumerator(n, d, q)?;
    let lhs = (&m - &HomogeneousEnumerator::x_pow(n)).scale(&int(q - 1).recip());
    Ok(lhs == coefficient_extraction(&UniPoly::one(), n, d, q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rational;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&c| int(c)).collect()
    }

    #[test]
    fn mds_count_examples() {
        assert_eq!(mds_count(3, 2, 2, 2).unwrap(), BigInt::from(3));
        assert_eq!(mds_count(3, 2, 2, 3).unwrap(), BigInt::from(0));
        for (n, q) in [(4usize, 3u64), (5, 2), (3, 5)] {
            for s in 1..=n {
                let want = binom(n as i64, s as i64) * big_pow(q - 1, s as u32);
                assert_eq!(mds_count(n, 1, q, s).unwrap(), want);
            }
        }
    }

    #[test]
    fn mds_count_can_be_negative() {
        // no binary [7,3] MDS code exists; the formal count dips below zero
        let any_negative = (3..=7).any(|s| mds_count(7, 3, 2, s).unwrap() < BigInt::zero());
        assert!(any_negative);
    }

    #[test]
    fn mds_count_range_errors() {
        assert!(matches!(mds_count(3, 0, 2, 2), Err(Error::RangeError(_))));
        assert!(matches!(mds_count(3, 3, 2, 2), Err(Error::RangeError(_))));
        assert!(matches!(mds_count(3, 2, 2, 4), Err(Error::RangeError(_))));
        assert!(matches!(mds_count(3, 2, 1, 2), Err(Error::RangeError(_))));
        assert!(matches!(mds_enumerator(3, 4, 2), Err(Error::RangeError(_))));
    }

    #[test]
    fn mds_enumerator_examples() {
        assert_eq!(mds_enumerator(3, 3, 2).unwrap().coeffs(), ints(&[1, 0, 0, 1]).as_slice());
        assert_eq!(mds_enumerator(2, 1, 3).unwrap().coeffs(), ints(&[1, 4, 4]).as_slice());
        assert_eq!(mds_enumerator(3, 2, 2).unwrap().coeffs(), ints(&[1, 0, 3, 0]).as_slice());
    }

    #[test]
    fn macwilliams_examples() {
        let rep = HomogeneousEnumerator::from_counts(&[1, 0, 0, 1]);
        let dual = macwilliams_transform(&rep, 2, &BigInt::from(2)).unwrap();
        assert_eq!(dual.coeffs(), ints(&[1, 0, 3, 0]).as_slice());

        let full = mds_enumerator(3, 1, 3).unwrap();
        let dual = macwilliams_transform(&full, 3, &BigInt::from(27)).unwrap();
        assert_eq!(dual, HomogeneousEnumerator::x_pow(3));
    }

    #[test]
    fn macwilliams_errors() {
        let rep = HomogeneousEnumerator::from_counts(&[1, 0, 0, 1]);
        assert!(matches!(
            macwilliams_transform(&rep, 2, &BigInt::from(4)),
            Err(Error::MassMismatch { .. })
        ));
        // mass 3 but not a code: 3·W⊥ = (x+y)^3 + 2(x−y)^3 has non-divisible terms
        let fake = HomogeneousEnumerator::from_counts(&[1, 2, 0, 0]);
        assert_eq!(
            macwilliams_transform(&fake, 2, &BigInt::from(3)).unwrap_err(),
            Error::NonIntegralResult
        );
    }

    #[test]
    fn mds_macwilliams_identity() {
        for q in 2u64..=5 {
            for n in 1usize..=7 {
                for d in 1..=n {
                    let lhs = mds_enumerator(n, d, q).unwrap().substitute_pair(q);
                    let size = big_pow(q, (n + 1 - d) as u32);
                    let rhs = if d == 1 {
                        HomogeneousEnumerator::x_pow(n).scale(&int(size))
                    } else {
                        mds_enumerator(n, n + 2 - d, q).unwrap().scale(&int(size))
                    };
                    assert_eq!(lhs, rhs, "n={n} d={d} q={q}");
                }
            }
        }
    }

    #[test]
    fn coefficient_identity_examples() {
        assert!(coefficient_identity_check(3, 2, 2).unwrap());
        assert!(coefficient_identity_check(4, 1, 3).unwrap());
        assert!(coefficient_identity_check(7, 3, 2).unwrap());
        assert!(matches!(coefficient_identity_check(2, 3, 2), Err(Error::RangeError(_))));
    }

    proptest! {
        #[test]
        fn coefficient_identity_all(n in 1usize..10, dd in 0usize..10, q in 2u64..8) {
            let d = 1 + dd % n;
            prop_assert!(coefficient_identity_check(n, d, q).unwrap());
        }

        #[test]
        fn shortening_recursion(n in 2usize..10, dd in 0usize..10, q in 2u64..8) {
            let d = 1 + dd % (n - 1);
            for s in d..n {
                let lhs = BigInt::from(n - s) * mds_count(n, d, q, s).unwrap();
                let rhs = BigInt::from(n) * mds_count(n - 1, d, q, s).unwrap();
                prop_assert_eq!(lhs, rhs);
            }
        }

        #[test]
        fn macwilliams_involution(n in 1usize..8, dd in 0usize..8, q in 2u64..6) {
            let d = 1 + dd % n;
            let w = mds_enumerator(n, d, q).unwrap();
            let size = big_pow(q, (n + 1 - d) as u32);
            let dual = macwilliams_transform(&w, q, &size).unwrap();
            let dual_size = big_pow(q, n as u32) / &size;
            prop_assert_eq!(macwilliams_transform(&dual, q, &dual_size).unwrap(), w);
        }
    }
}
