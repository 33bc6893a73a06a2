//! Exact polynomial algebra over `ℚ`: univariate polynomials, homogeneous
//! bivariate enumerators and truncated expansions of `P(t)/((1−t)(1−qt))`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// `q^e` for any integer exponent.
pub fn q_pow(q: u64, e: i64) -> Rational {
    let base = int(q);
    if e >= 0 {
        Pow::pow(base, e as u64)
    } else {
        Pow::pow(base.recip(), e.unsigned_abs())
    }
}

pub fn big_pow(q: u64, e: u32) -> BigInt {
    Pow::pow(BigInt::from(q), e)
}

/// `C(n, k)`, rejecting `k > n`.
pub fn binomial(n: u64, k: u64) -> Result<BigInt> {
    if k > n {
        return Err(Error::RangeError(format!("binomial({n}, {k}) needs k <= n")));
    }
    Ok(binom(n as i64, k as i64))
}

/// `C(n, k)` with zero outside `0 ≤ k ≤ n`.
pub(crate) fn binom(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub(crate) fn sign(i: i64) -> BigInt {
    if i % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Dense univariate polynomial in `t`; index is the power of `t`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c·t^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    /// `(1 − t)(1 − qt) = 1 − (q+1)t + qt²`.
    pub fn zeta_denominator(q: u64) -> Self {
        Self::new(vec![int(1), -int(q + 1), int(q)])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `t^i`, zero outside the stored range.
    pub fn coeff(&self, i: i64) -> Rational {
        if i < 0 {
            return Rational::zero();
        }
        self.coeffs.get(i as usize).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * at + c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Exact quotient; fails when the remainder is nonzero.
    pub fn divide_exact(&self, divisor: &UniPoly) -> Result<UniPoly> {
        let dd = divisor
            .degree()
            .ok_or_else(|| Error::RangeError("division by the zero polynomial".into()))?;
        let Some(pd) = self.degree() else {
            return Ok(UniPoly::zero());
        };
        if pd < dd {
            return Err(Error::NonzeroRemainder);
        }
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); pd - dd + 1];
        for k in (0..=pd - dd).rev() {
            let c = &rem[k + dd] / lead;
            if !c.is_zero() {
                for (j, b) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * b;
                }
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NonzeroRemainder);
        }
        Ok(UniPoly::new(quot))
    }
}

/// Free-standing [`UniPoly::divide_exact`].
pub fn divide_exact(p: &UniPoly, divisor: &UniPoly) -> Result<UniPoly> {
    p.divide_exact(divisor)
}

/// Free-standing [`UniPoly::eval`].
pub fn eval(p: &UniPoly, at: &Rational) -> Rational {
    p.eval(at)
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new(
            (0..len as i64)
                .map(|i| self.coeff(i) + rhs.coeff(i))
                .collect(),
        )
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new(
            (0..len as i64)
                .map(|i| self.coeff(i) - rhs.coeff(i))
                .collect(),
        )
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (neg, abs) = (c.is_negative(), c.abs());
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match i {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    if i == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Homogeneous bivariate polynomial of degree `n`; index `s` is the power of
/// `y` in `x^{n−s} y^s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousEnumerator {
    coeffs: Vec<Rational>,
}

impl HomogeneousEnumerator {
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::RangeError("an enumerator needs n+1 coefficients".into()));
        }
        Ok(HomogeneousEnumerator { coeffs })
    }

    pub fn zero(n: usize) -> Self {
        HomogeneousEnumerator {
            coeffs: vec![Rational::zero(); n + 1],
        }
    }

    /// `x^n`.
    pub fn x_pow(n: usize) -> Self {
        let mut e = Self::zero(n);
        e.coeffs[0] = Rational::one();
        e
    }

    pub fn from_counts<T: Clone + Into<BigInt>>(counts: &[T]) -> Self {
        HomogeneousEnumerator {
            coeffs: counts.iter().map(|c| int(c.clone().into())).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, s: usize) -> &Rational {
        &self.coeffs[s]
    }

    pub fn set(&mut self, s: usize, c: Rational) {
        self.coeffs[s] = c;
    }

    /// `W(1, 1)`.
    pub fn mass(&self) -> Rational {
        self.coeffs.iter().sum()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        HomogeneousEnumerator {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// `W(x + (q−1)y, x − y)`, re-collected in the `x^{n−s}y^s` basis.
    pub fn substitute_pair(&self, q: u64) -> Self {
        let n = self.degree() as i64;
        let kraw = krawtchouk_table(n, q);
        let coeffs = (0..=n as usize)
            .map(|j| {
                let mut acc = BigRational::zero();
                for (s, w) in self.coeffs.iter().enumerate() {
                    if !w.is_zero() {
                        acc += w * int(kraw[j][s].clone());
                    }
                }
                acc
            })
            .collect();
        HomogeneousEnumerator { coeffs }
    }

    fn check_same_degree(&self, other: &Self) {
        assert_eq!(
            self.degree(),
            other.degree(),
            "enumerators of different degree"
        );
    }
}

/// `K[j][s] = Σ_i (−1)^i (q−1)^{j−i} C(s,i) C(n−s, j−i)`.
pub(crate) fn krawtchouk_table(n: i64, q: u64) -> Vec<Vec<BigInt>> {
    let qm1 = BigInt::from(q - 1);
    let pows: Vec<BigInt> = (0..=n).map(|e| Pow::pow(&qm1, e as u64)).collect();
    (0..=n)
        .map(|j| {
            (0..=n)
                .map(|s| {
                    let mut acc = BigInt::zero();
                    for i in 0..=j.min(s) {
                        let b = binom(n - s, j - i);
                        if b.is_zero() {
                            continue;
                        }
                        acc += sign(i) * &pows[(j - i) as usize] * binom(s, i) * b;
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Free-standing [`HomogeneousEnumerator::substitute_pair`].
pub fn substitute_pair(w: &HomogeneousEnumerator, q: u64) -> HomogeneousEnumerator {
    w.substitute_pair(q)
}

impl Add for &HomogeneousEnumerator {
    type Output = HomogeneousEnumerator;
    fn add(self, rhs: &HomogeneousEnumerator) -> HomogeneousEnumerator {
        self.check_same_degree(rhs);
        HomogeneousEnumerator {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &HomogeneousEnumerator {
    type Output = HomogeneousEnumerator;
    fn sub(self, rhs: &HomogeneousEnumerator) -> HomogeneousEnumerator {
        self.check_same_degree(rhs);
        HomogeneousEnumerator {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Display for HomogeneousEnumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(s, c)| format!("({c})x^{}y^{s}", n - s))
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// `A_0, …, A_N` of a power series truncated at order `N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::RangeError("a truncated series needs A_0".into()));
        }
        Ok(TruncatedSeries { coeffs })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `A_m`, with `A_m = 0` for negative `m`. Panics past the order.
    pub fn at(&self, m: i64) -> Rational {
        if m < 0 {
            Rational::zero()
        } else {
            self.coeffs[m as usize].clone()
        }
    }

    pub fn set(&mut self, m: usize, v: Rational) {
        self.coeffs[m] = v;
    }
}

/// Expands `P(t)/((1−t)(1−qt))` up to `t^N`.
pub fn series_of_rational(p: &UniPoly, q: u64, order: usize) -> TruncatedSeries {
    // 1/((1−t)(1−qt)) = Σ (q^{m+1}−1)/(q−1) t^m
    let base: Vec<BigInt> = (0..=order as u32)
        .map(|m| (big_pow(q, m + 1) - 1) / BigInt::from(q - 1))
        .collect();
    let coeffs = (0..=order)
        .map(|m| {
            let mut acc = Rational::zero();
            for (j, pj) in p.coeffs().iter().enumerate().take(m + 1) {
                acc += pj * int(base[m - j].clone());
            }
            acc
        })
        .collect();
    TruncatedSeries { coeffs }
}
