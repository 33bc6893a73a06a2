//! Zeta polynomials, Duursma reduced polynomials and the identities tying
//! them to weight enumerators.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::algebra::{
    big_pow, binom, int, q_pow, sign, HomogeneousEnumerator, Rational, UniPoly,
};
use crate::code::{AdditiveCode, WeightDistribution};
use crate::error::{Error, Result};
use crate::mds::{coefficient_extraction, mds_count_unchecked, mds_enumerator_unchecked};

/// Parameters of a code that the zeta calculus needs, with `|C|` standing in
/// for `q^k` so that nothing requires a logarithm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeContext {
    pub n: usize,
    pub d: usize,
    pub d_perp: usize,
    pub q: u64,
    pub size: BigInt,
    pub g_plus_gperp: usize,
    pub q_pow_g: Rational,
    pub q_pow_gperp: Rational,
}

impl CodeContext {
    pub fn new(n: usize, d: usize, d_perp: usize, q: u64, size: BigInt) -> Result<Self> {
        if d < 2 || d_perp < 2 {
            return Err(Error::MinimumDistanceTooSmall { d, d_perp });
        }
        if q < 2 {
            return Err(Error::RangeError(format!("q = {q} must be at least 2")));
        }
        if d + d_perp > n + 2 {
            return Err(Error::RangeError(format!(
                "d + d_perp = {} exceeds n + 2 = {}",
                d + d_perp,
                n + 2
            )));
        }
        if !size.is_positive() {
            return Err(Error::RangeError("code size must be positive".into()));
        }
        let q_pow_g = int(big_pow(q, (n + 1 - d) as u32)) / int(size.clone());
        let q_pow_gperp = int(size.clone()) * q_pow(q, 1 - d_perp as i64);
        Ok(CodeContext {
            n,
            d,
            d_perp,
            q,
            size,
            g_plus_gperp: n + 2 - d - d_perp,
            q_pow_g,
            q_pow_gperp,
        })
    }

    /// Context of `C` from the code and its dual.
    pub fn for_pair(code: &AdditiveCode, dual: &AdditiveCode) -> Result<Self> {
        Self::new(
            code.length(),
            code.min_distance(),
            dual.min_distance(),
            code.q(),
            code.size_big(),
        )
    }

    /// Context of `C`, enumerating the dual.
    pub fn for_code(code: &AdditiveCode) -> Result<Self> {
        Self::for_pair(code, &code.dual()?)
    }

    /// Context of the dual code.
    pub fn dual(&self) -> CodeContext {
        let size = big_pow(self.q, self.n as u32) / &self.size;
        CodeContext::new(self.n, self.d_perp, self.d, self.q, size)
            .expect("the dual of a valid context is valid")
    }

    pub fn is_dual_of(&self, other: &CodeContext) -> bool {
        self.n == other.n
            && self.q == other.q
            && self.d == other.d_perp
            && self.d_perp == other.d
            && &self.size * &other.size == big_pow(self.q, self.n as u32)
    }

    /// `k = log_q |C|` when integral.
    pub fn dimension(&self) -> Option<u64> {
        exact_log(self.q, &self.size)
    }

    pub fn genus(&self) -> Option<u64> {
        self.dimension().map(|k| (self.n + 1 - self.d) as u64 - k)
    }

    pub fn genus_perp(&self) -> Option<u64> {
        self.dimension().map(|k| k + 1 - self.d_perp as u64)
    }

    fn integer_genera(&self) -> Result<(usize, usize)> {
        match (self.genus(), self.genus_perp()) {
            (Some(g), Some(gp)) => Ok((g as usize, gp as usize)),
            _ => Err(Error::NonIntegerGenus),
        }
    }
}

/// `P_C(t)` with its code context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaPolynomial {
    coeffs: UniPoly,
    context: CodeContext,
}

impl ZetaPolynomial {
    pub fn coeffs(&self) -> &UniPoly {
        &self.coeffs
    }

    pub fn context(&self) -> &CodeContext {
        &self.context
    }

    /// `a_i`, zero outside the stored range.
    pub fn a(&self, i: i64) -> Rational {
        self.coeffs.coeff(i)
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs.eval(t)
    }

    /// Replaces the coefficients, keeping the context. No validation.
    pub fn with_coeffs(&self, coeffs: UniPoly) -> ZetaPolynomial {
        ZetaPolynomial {
            coeffs,
            context: self.context.clone(),
        }
    }
}

/// `D_C(t)` together with the genera it was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DuursmaReduced {
    coeffs: UniPoly,
    context: CodeContext,
    genus: usize,
    genus_perp: usize,
}

impl DuursmaReduced {
    pub fn coeffs(&self) -> &UniPoly {
        &self.coeffs
    }

    pub fn context(&self) -> &CodeContext {
        &self.context
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn genus_perp(&self) -> usize {
        self.genus_perp
    }

    /// `c_i`, zero outside the stored range.
    pub fn c(&self, i: i64) -> Rational {
        self.coeffs.coeff(i)
    }

    /// `g + g⊥ − 2`, the top index of the coefficient range.
    pub fn top(&self) -> i64 {
        (self.genus + self.genus_perp) as i64 - 2
    }

    pub fn with_coeffs(&self, coeffs: UniPoly) -> DuursmaReduced {
        DuursmaReduced {
            coeffs,
            ..self.clone()
        }
    }

    /// `(1−t)(1−qt)·D(t) + t^g`.
    pub fn zeta_polynomial(&self) -> ZetaPolynomial {
        let p = &(&UniPoly::zeta_denominator(self.context.q) * &self.coeffs)
            + &UniPoly::monomial(Rational::one(), self.genus);
        ZetaPolynomial {
            coeffs: p,
            context: self.context.clone(),
        }
    }
}

/// Coefficients `B_0, …, B_n` of `W − x^n` in the basis `(x−y)^{n−j} y^j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TvnCoefficients {
    pub b: Vec<Rational>,
}

fn check_distribution(w: &WeightDistribution, ctx: &CodeContext) -> Result<()> {
    let counts = w.counts();
    if counts.len() != ctx.n + 1 {
        return Err(Error::InconsistentDistribution(format!(
            "expected {} weights, got {}",
            ctx.n + 1,
            counts.len()
        )));
    }
    if BigInt::from(w.total()) != ctx.size {
        return Err(Error::InconsistentDistribution(format!(
            "mass {} differs from |C| = {}",
            w.total(),
            ctx.size
        )));
    }
    if w.min_distance() != ctx.d {
        return Err(Error::InconsistentDistribution(format!(
            "minimum distance {} differs from d = {}",
            w.min_distance(),
            ctx.d
        )));
    }
    Ok(())
}

/// Forward substitution on rows `d..=d+top` of `W = Σ a_i M_{n,d+i}`.
fn forward_solve(w: &WeightDistribution, ctx: &CodeContext, top: usize) -> Vec<Rational> {
    let (n, d, q) = (ctx.n as i64, ctx.d as i64, ctx.q);
    let mut a: Vec<Rational> = Vec::with_capacity(top + 1);
    for i in 0..=top as i64 {
        let s = d + i;
        let mut rhs = int(w.counts()[s as usize]);
        for (j, aj) in a.iter().enumerate() {
            rhs -= aj * int(mds_count_unchecked(n, d + j as i64, q, s));
        }
        let diag = mds_count_unchecked(n, s, q, s);
        a.push(rhs / int(diag));
    }
    a
}

/// Unique `P_C` with `W_C = Σ a_i M_{n,d+i}`, validated against every row.
pub fn zeta_polynomial(w: &WeightDistribution, ctx: &CodeContext) -> Result<ZetaPolynomial> {
    check_distribution(w, ctx)?;
    let a = forward_solve(w, ctx, ctx.g_plus_gperp);
    let (n, d) = (ctx.n, ctx.d);
    let mut rebuilt = HomogeneousEnumerator::zero(n);
    for (i, ai) in a.iter().enumerate() {
        rebuilt = &rebuilt + &mds_enumerator_unchecked(n, d + i, ctx.q).scale(ai);
    }
    if rebuilt != w.to_enumerator() {
        let row = (0..=n)
            .find(|&s| rebuilt.coeff(s) != &int(w.counts()[s]))
            .unwrap_or(0);
        return Err(Error::InconsistentDistribution(format!(
            "residual row for weight {row} does not vanish"
        )));
    }
    Ok(ZetaPolynomial {
        coeffs: UniPoly::new(a),
        context: ctx.clone(),
    })
}

/// Triangular solve over all rows `d..=n` without the consistency checks.
///
/// The result satisfies `W − x^n = Σ a_i (M_{n,d+i} − x^n)` for any
/// distribution with `W^{(0)} = 1` and no words of weight `1..d`, but
/// `P(1) = 1` and the degree bound only hold for genuine code enumerators.
pub fn zeta_polynomial_unchecked(w: &WeightDistribution, ctx: &CodeContext) -> Result<ZetaPolynomial> {
    if w.counts().len() != ctx.n + 1 {
        return Err(Error::InconsistentDistribution("length mismatch".into()));
    }
    if w.counts()[1..ctx.d].iter().any(|&c| c != 0) {
        return Err(Error::InconsistentDistribution(
            "words below the minimum distance".into(),
        ));
    }
    let a = forward_solve(w, ctx, ctx.n - ctx.d);
    Ok(ZetaPolynomial {
        coeffs: UniPoly::new(a),
        context: ctx.clone(),
    })
}

/// `(W − x^n)/(q−1) = Coeff_{t^{n−d}}(P(t)·[xt+y(1−t)]^n/((1−t)(1−qt)))`.
pub fn zeta_coeff_identity_check(p: &ZetaPolynomial, w: &WeightDistribution) -> bool {
    let ctx = &p.context;
    if w.counts().len() != ctx.n + 1 {
        return false;
    }
    let lhs = (&w.to_enumerator() - &HomogeneousEnumerator::x_pow(ctx.n)).scale(&int(ctx.q - 1).recip());
    lhs == coefficient_extraction(&p.coeffs, ctx.n, ctx.d, ctx.q)
}

/// `(q−1)^{g+g⊥+1} Π_{j=0}^{g+g⊥} C(n,d+j)`.
pub fn denominator_bound(ctx: &CodeContext) -> BigInt {
    let top = ctx.g_plus_gperp as u32;
    let mut acc = big_pow(ctx.q - 1, top + 1);
    for j in 0..=top as i64 {
        acc *= binom(ctx.n as i64, ctx.d as i64 + j);
    }
    acc
}

/// Every `a_i` times [`denominator_bound`] is an integer.
pub fn denominator_bound_check(p: &ZetaPolynomial) -> bool {
    let bound = int(denominator_bound(&p.context));
    p.coeffs.coeffs().iter().all(|a| (a * &bound).is_integer())
}

/// `D = (P − t^g)/((1−t)(1−qt))`.
pub fn duursma_reduced(p: &ZetaPolynomial) -> Result<DuursmaReduced> {
    let (g, gp) = p.context.integer_genera()?;
    let numer = &p.coeffs - &UniPoly::monomial(Rational::one(), g);
    let d = numer.divide_exact(&UniPoly::zeta_denominator(p.context.q))?;
    Ok(DuursmaReduced {
        coeffs: d,
        context: p.context.clone(),
        genus: g,
        genus_perp: gp,
    })
}

/// `|C|·a⊥_{j−d⊥} = q^{j−1}·a_{n+2−d−j}` for every `1 ≤ j ≤ n`, with an extra
/// `1 − P(1)` on the right of row `j = 1`, plus `P⊥(1) = 1`.
///
/// Coefficients outside their stored range count as zero. For zeta
/// polynomials of genuine codes only the rows `d⊥ ≤ j ≤ n+2−d` carry
/// information and the check reduces to the usual indexed functional
/// equation; for triangular solutions of arbitrary distributions it is
/// exactly the MacWilliams identity.
pub fn functional_eq_p(p: &ZetaPolynomial, p_perp: &ZetaPolynomial) -> Result<bool> {
    let ctx = &p.context;
    let ctxp = &p_perp.context;
    if !ctx.is_dual_of(ctxp) {
        return Err(Error::ContextMismatch(format!(
            "(n={}, d={}, d_perp={}, |C|={}) vs (n={}, d={}, d_perp={}, |C|={})",
            ctx.n, ctx.d, ctx.d_perp, ctx.size, ctxp.n, ctxp.d, ctxp.d_perp, ctxp.size
        )));
    }
    let (n, d, dp) = (ctx.n as i64, ctx.d as i64, ctx.d_perp as i64);
    let size = int(ctx.size.clone());
    let one = Rational::one();
    if p_perp.eval(&one) != one {
        return Ok(false);
    }
    let defect = &one - p.eval(&one);
    for j in 1..=n {
        let lhs = &size * p_perp.a(j - dp);
        let mut rhs = q_pow(ctx.q, j - 1) * p.a(n + 2 - d - j);
        if j == 1 {
            rhs += &defect;
        }
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `c⊥_i = q^{i−g⊥+1}·c_{g+g⊥−2−i}` on the full range, with both degrees
/// bounded by `g + g⊥ − 2`.
pub fn functional_eq_d(dc: &DuursmaReduced, dc_perp: &DuursmaReduced) -> Result<bool> {
    if !dc.context.is_dual_of(&dc_perp.context) {
        return Err(Error::ContextMismatch("Duursma polynomials of non-dual contexts".into()));
    }
    if dc.genus != dc_perp.genus_perp || dc.genus_perp != dc_perp.genus {
        return Err(Error::ContextMismatch("genera do not match".into()));
    }
    let top = dc.top();
    let within = |p: &UniPoly| p.degree().is_none_or(|deg| (deg as i64) <= top);
    if !within(&dc.coeffs) || !within(&dc_perp.coeffs) {
        return Ok(false);
    }
    let gp = dc.genus_perp as i64;
    Ok((0..=top).all(|i| dc_perp.c(i) == q_pow(dc.context.q, i - gp + 1) * dc.c(top - i)))
}

/// `W = M_{n,n+1−k} + Σ_i C(n,d+i)(q−1)c_i (x−y)^{n−d−i} y^{d+i}`.
pub fn enumerator_from_duursma(dc: &DuursmaReduced) -> Result<HomogeneousEnumerator> {
    let ctx = &dc.context;
    let k = ctx.dimension().ok_or(Error::NonIntegerGenus)? as usize;
    let (n, d) = (ctx.n, ctx.d);
    if k == 0 {
        return Err(Error::ZeroCode);
    }
    let mut w = mds_enumerator_unchecked(n, n + 1 - k, ctx.q);
    for (i, c) in dc.coeffs.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let scale = c * int(binom(n as i64, (d + i) as i64) * BigInt::from(ctx.q - 1));
        let a = n - d - i;
        for j in 0..=a {
            let s = d + i + j;
            let term = &scale * int(binom(a as i64, j as i64) * sign(j as i64));
            let cur = w.coeff(s).clone();
            w.set(s, cur + term);
        }
    }
    Ok(w)
}

/// `c_i` from `(q−1)C(n,d+i)c_i = Σ_{s≤d+i} (W^{(s)} − M^{(s)}_{n,n+1−k}) C(n−s, n−d−i)`.
pub fn duursma_coeffs_direct(w: &WeightDistribution, ctx: &CodeContext) -> Result<Vec<Rational>> {
    let (g, gp) = ctx.integer_genera()?;
    let k = ctx.dimension().ok_or(Error::NonIntegerGenus)? as usize;
    let (n, d) = (ctx.n as i64, ctx.d as i64);
    let m = mds_enumerator_unchecked(ctx.n, ctx.n + 1 - k, ctx.q);
    let top = (g + gp) as i64 - 2;
    Ok((0..=top)
        .map(|i| {
            let mut acc = Rational::zero();
            for s in 0..=(d + i) {
                let diff = int(w.counts()[s as usize]) - m.coeff(s as usize);
                acc += diff * int(binom(n - s, n - d - i));
            }
            acc / int(BigInt::from(ctx.q - 1) * binom(n, d + i))
        })
        .collect())
}

/// Rebuilds `D_C` and `D_{C⊥}` from `φ_C`, `φ_{C⊥}` and the middle
/// coefficient `c_{g−1}`.
pub fn reconstruct_from_lower(
    phi: &UniPoly,
    phi_perp: &UniPoly,
    c_mid: &Rational,
    ctx: &CodeContext,
    ctx_perp: &CodeContext,
) -> Result<(DuursmaReduced, DuursmaReduced)> {
    if !ctx.is_dual_of(ctx_perp) {
        return Err(Error::ContextMismatch("reconstruction needs dual contexts".into()));
    }
    let (g, gp) = ctx.integer_genera()?;
    if g == 0 || gp == 0 {
        return Err(Error::RangeError(format!(
            "reconstruction needs g, g_perp >= 1, got ({g}, {gp})"
        )));
    }
    for (poly, genus) in [(phi, g), (phi_perp, gp)] {
        if let Some(deg) = poly.degree() {
            if deg + 2 > genus {
                return Err(Error::DegreeTooHigh {
                    degree: deg,
                    bound: genus as i64 - 2,
                });
            }
        }
    }
    let top = g + gp - 2;
    let assemble = |low: &UniPoly, other: &UniPoly, own_g: usize, q: u64| {
        let mut coeffs = vec![Rational::zero(); top + 1];
        for (j, c) in low.coeffs().iter().enumerate() {
            coeffs[j] = c.clone();
        }
        coeffs[own_g - 1] = c_mid.clone();
        // other(1/(qt))·q^{own_g⊥−1}·t^top, with own_g⊥ = top + 2 − own_g
        let other_g = top + 2 - own_g;
        for (j, c) in other.coeffs().iter().enumerate() {
            coeffs[top - j] = c * q_pow(q, other_g as i64 - 1 - j as i64);
        }
        UniPoly::new(coeffs)
    };
    let dc = DuursmaReduced {
        coeffs: assemble(phi, phi_perp, g, ctx.q),
        context: ctx.clone(),
        genus: g,
        genus_perp: gp,
    };
    let dcp = DuursmaReduced {
        coeffs: assemble(phi_perp, phi, gp, ctx.q),
        context: ctx_perp.clone(),
        genus: gp,
        genus_perp: g,
    };
    Ok((dc, dcp))
}

/// `φ_C`: the part of `D_C` below `t^{g−1}`.
pub fn lower_part(dc: &DuursmaReduced) -> UniPoly {
    let g = dc.genus;
    UniPoly::new(dc.coeffs.coeffs().iter().take(g.saturating_sub(1)).cloned().collect())
}

/// `Σ_γ |{c ∈ C∖0 : supp c ⊆ γ}|` over all `w`-subsets `γ`, by brute force.
pub fn support_containment_sum(code: &AdditiveCode, w: usize) -> BigInt {
    let n = code.length();
    let mut supports: HashMap<u64, u64> = HashMap::new();
    for s in code.nonzero_supports() {
        *supports.entry(s).or_default() += 1;
    }
    let supports: Vec<(u64, u64)> = supports.into_iter().collect();
    let masks = subsets_of_size(n, w);
    let total: u64 = masks
        .par_iter()
        .map(|&gamma| {
            supports
                .iter()
                .filter(|(s, _)| s & !gamma == 0)
                .map(|(_, c)| c)
                .sum::<u64>()
        })
        .sum();
    BigInt::from(total)
}

fn subsets_of_size(n: usize, w: usize) -> Vec<u64> {
    if w > n {
        return vec![];
    }
    (0u64..1 << n).filter(|m| m.count_ones() as usize == w).collect()
}

/// `(q−1)c_i = C(n,d+i)^{−1} Σ_γ |(C∖0) supported in γ|` for `0 ≤ i ≤ g−1`.
pub fn average_support_identity(code: &AdditiveCode, dc: &DuursmaReduced, i: usize) -> Result<bool> {
    let ctx = &dc.context;
    if dc.genus == 0 || i + 1 > dc.genus {
        return Err(Error::IndexOutOfRange {
            index: i as i64,
            lo: 0,
            hi: dc.genus as i64 - 1,
        });
    }
    if code.length() != ctx.n || code.size_big() != ctx.size || code.min_distance() != ctx.d {
        return Err(Error::ContextMismatch("code does not match the polynomial".into()));
    }
    let w = ctx.d + i;
    let lhs = int(ctx.q - 1) * dc.c(i as i64);
    let rhs = int(support_containment_sum(code, w)) / int(binom(ctx.n as i64, w as i64));
    Ok(lhs == rhs)
}

fn weight_probability(w: &WeightDistribution, n: usize, q: u64, s: usize) -> Rational {
    int(w.counts()[s]) / int(binom(n as i64, s as i64) * big_pow(q - 1, s as u32))
}

/// Probability that a uniformly random `w`-subset contains a fixed support of size `s`.
fn containment_probability(n: usize, s: usize, w: usize) -> Rational {
    int(binom((n - s) as i64, w as i64 - s as i64)) / int(binom(n as i64, w as i64))
}

fn bar_sum(code: &AdditiveCode, w: usize) -> Rational {
    let n = code.length();
    code.weight_distribution()
        .counts()
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(_, &c)| c > 0)
        .map(|(s, &c)| int(c) * containment_probability(n, s, w))
        .sum()
}

/// Checks whichever probabilistic expressions for `c_i` apply at index `i`:
/// the two lower ones for `i ≤ g−1`, the two upper ones for `i ≥ g`.
pub fn probability_identities(
    code: &AdditiveCode,
    dual: &AdditiveCode,
    dc: &DuursmaReduced,
    i: usize,
) -> Result<bool> {
    let ctx = &dc.context;
    let (g, top) = (dc.genus, dc.top());
    if dc.genus == 0 || dc.genus_perp == 0 {
        return Err(Error::RangeError("probability identities need g, g_perp >= 1".into()));
    }
    if i as i64 > top {
        return Err(Error::IndexOutOfRange {
            index: i as i64,
            lo: 0,
            hi: top,
        });
    }
    let (n, d, dp, q) = (ctx.n, ctx.d, ctx.d_perp, ctx.q);
    let qm1 = int(q - 1);
    let ci = dc.c(i as i64);
    let wc = code.weight_distribution();
    let wd = dual.weight_distribution();
    if i < g {
        let w = d + i;
        let lower: Rational = (d..=w)
            .map(|s| {
                weight_probability(wc, n, q, s)
                    * int(binom(w as i64, s as i64) * big_pow(q - 1, s as u32 - 1))
            })
            .sum();
        let lower_bar = bar_sum(code, w) / &qm1;
        Ok(ci == lower && ci == lower_bar)
    } else {
        let w = n - d - i;
        let scale = q_pow(q, i as i64 - g as i64 + 1);
        let upper: Rational = (dp..=w)
            .map(|s| {
                weight_probability(wd, n, q, s)
                    * int(binom(w as i64, s as i64) * big_pow(q - 1, s as u32 - 1))
            })
            .sum::<Rational>()
            * &scale;
        let upper_bar = bar_sum(dual, w) * &scale / &qm1;
        Ok(ci == upper && ci == upper_bar)
    }
}

/// [`probability_identities`] at every index `0..=g+g⊥−2`.
pub fn probability_identities_all(
    code: &AdditiveCode,
    dual: &AdditiveCode,
    dc: &DuursmaReduced,
) -> Result<bool> {
    for i in 0..=dc.top().max(-1) {
        if !probability_identities(code, dual, dc, i as usize)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Triangular re-expansion of `W − x^n` in the basis `(x−y)^{n−j} y^j`.
pub fn tvn_coefficients(w: &WeightDistribution, ctx: &CodeContext) -> Result<TvnCoefficients> {
    ctx.integer_genera()?;
    let n = ctx.n as i64;
    let mut target: Vec<Rational> = w.counts().iter().map(|&c| int(c)).collect();
    target[0] -= Rational::one();
    let mut b: Vec<Rational> = Vec::with_capacity(ctx.n + 1);
    for s in 0..=n {
        let mut v = target[s as usize].clone();
        for (j, bj) in b.iter().enumerate() {
            let j = j as i64;
            v -= bj * int(binom(n - j, s - j) * sign(s - j));
        }
        b.push(v);
    }
    Ok(TvnCoefficients { b })
}

/// `B_{d+i} = C(n,d+i)(q−1)c_i` for `0 ≤ i ≤ g−1`.
pub fn tvn_relation_check(tvn: &TvnCoefficients, dc: &DuursmaReduced) -> bool {
    let ctx = &dc.context;
    (0..dc.genus).all(|i| {
        let j = ctx.d + i;
        tvn.b[j] == int(binom(ctx.n as i64, j as i64) * BigInt::from(ctx.q - 1)) * dc.c(i as i64)
    })
}

/// `((q−1)·C(n,d+i)·c_i ∈ ℤ ∀i, C(n,d+i)·c_i ∈ ℤ ∀i)`.
pub fn duursma_integrality(dc: &DuursmaReduced) -> (bool, bool) {
    let ctx = &dc.context;
    let mut weak = true;
    let mut strong = true;
    for (i, c) in dc.coeffs.coeffs().iter().enumerate() {
        let scaled = c * int(binom(ctx.n as i64, (ctx.d + i) as i64));
        strong &= scaled.is_integer();
        weak &= (scaled * int(ctx.q - 1)).is_integer();
    }
    (weak, strong)
}

fn exact_log(base: u64, x: &BigInt) -> Option<u64> {
    let b = BigInt::from(base);
    let mut x = x.clone();
    let mut k = 0;
    if !x.is_positive() {
        return None;
    }
    while x > BigInt::one() {
        if !(&x % &b).is_zero() {
            return None;
        }
        x /= &b;
        k += 1;
    }
    Some(k)
}
