//! Riemann-Roch and polarized Riemann-Roch conditions on truncated zeta
//! series, and a harness that pits them against MacWilliams identities.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{int, q_pow, series_of_rational, Rational, TruncatedSeries, UniPoly};
use crate::code::{AdditiveCode, WeightDistribution};
use crate::error::{Error, Result};
use crate::mds::macwilliams_transform;
use crate::zeta::{
    duursma_reduced, functional_eq_d, functional_eq_p, zeta_polynomial, zeta_polynomial_unchecked,
    CodeContext, ZetaPolynomial,
};

/// Which family of conditions an index belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Lower,
    Middle,
    Upper,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Lower => "lower",
            Family::Middle => "middle",
            Family::Upper => "upper",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrrcVerdict {
    pub holds: bool,
    pub first_failure: Option<(Family, i64)>,
    pub checked_to: usize,
}

impl PrrcVerdict {
    fn pass(checked_to: usize) -> Self {
        PrrcVerdict {
            holds: true,
            first_failure: None,
            checked_to,
        }
    }

    fn fail(family: Family, m: i64, checked_to: usize) -> Self {
        PrrcVerdict {
            holds: false,
            first_failure: Some((family, m)),
            checked_to,
        }
    }
}

/// `Res_1 ζ = P(1)/(q−1)`.
pub fn residue_at_one(p: &UniPoly, q: u64) -> Rational {
    p.eval(&Rational::from_integer(1.into())) / int(q - 1)
}

/// `A_m = q^{m−g+1} A'_{g+g'−2−m} + (q^{m−g+1}−1)·res` for `g ≤ m ≤ N`.
fn family_failure(
    a: &TruncatedSeries,
    other: &TruncatedSeries,
    q: u64,
    g: i64,
    reflect: i64,
    res1: &Rational,
) -> Option<i64> {
    (g..=a.order() as i64).find(|&m| {
        let scale = q_pow(q, m - g + 1);
        let rhs = &scale * other.at(reflect - m) + (&scale - int(1)) * res1;
        a.at(m) != rhs
    })
}

/// Riemann-Roch conditions of genus `g`, checked up to the series order.
pub fn rrc_check(a: &TruncatedSeries, q: u64, g: usize, res1: &Rational) -> Result<PrrcVerdict> {
    if a.order() < g {
        return Err(Error::OrderTooShort {
            order: a.order(),
            required: g,
        });
    }
    let g = g as i64;
    Ok(match family_failure(a, a, q, g, 2 * g - 2, res1) {
        Some(m) => PrrcVerdict::fail(Family::Lower, m, a.order()),
        None => PrrcVerdict::pass(a.order()),
    })
}

/// Polarized Riemann-Roch conditions of genera `(g, g⊥)`.
///
/// For `g = g⊥ = 0` both series are checked against the genus-0 conditions
/// separately, with failures on the dual side reported as `Upper`. Pairs
/// mixing genus zero with a positive genus are rejected.
pub fn prrc_check(
    a: &TruncatedSeries,
    a_perp: &TruncatedSeries,
    q: u64,
    g: usize,
    g_perp: usize,
    res1: &Rational,
    res1_perp: &Rational,
) -> Result<PrrcVerdict> {
    let required = g + g_perp;
    for s in [a, a_perp] {
        if s.order() < required {
            return Err(Error::OrderTooShort {
                order: s.order(),
                required,
            });
        }
    }
    let checked_to = a.order().min(a_perp.order());
    if g == 0 && g_perp == 0 {
        let own = rrc_check(a, q, 0, res1)?;
        if let Some((_, m)) = own.first_failure {
            return Ok(PrrcVerdict::fail(Family::Lower, m, checked_to));
        }
        let dual = rrc_check(a_perp, q, 0, res1_perp)?;
        if let Some((_, m)) = dual.first_failure {
            return Ok(PrrcVerdict::fail(Family::Upper, m, checked_to));
        }
        return Ok(PrrcVerdict::pass(checked_to));
    }
    if g == 0 || g_perp == 0 {
        return Err(Error::MixedGenusZero {
            g: g as i64,
            g_perp: g_perp as i64,
        });
    }
    let reflect = (g + g_perp) as i64 - 2;
    if let Some(m) = family_failure(a, a_perp, q, g as i64, reflect, res1) {
        return Ok(PrrcVerdict::fail(Family::Lower, m, checked_to));
    }
    if a.at(g as i64 - 1) != a_perp.at(g_perp as i64 - 1) {
        return Ok(PrrcVerdict::fail(Family::Middle, g as i64 - 1, checked_to));
    }
    if let Some(m) = family_failure(a_perp, a, q, g_perp as i64, reflect, res1_perp) {
        return Ok(PrrcVerdict::fail(Family::Upper, m, checked_to));
    }
    Ok(PrrcVerdict::pass(checked_to))
}

/// Default truncation order `g + g⊥ + 5`, raised when a polynomial is longer.
pub fn prrc_order(g: usize, g_perp: usize, p: &UniPoly, p_perp: &UniPoly) -> usize {
    let deg = |x: &UniPoly| x.degree().unwrap_or(0);
    (g + g_perp).max(deg(p)).max(deg(p_perp)) + 5
}

/// The four verdicts that must agree for a pair of distributions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdicts {
    pub macwilliams: bool,
    pub functional_eq_p: bool,
    pub functional_eq_d: bool,
    pub prrc: PrrcVerdict,
}

impl Verdicts {
    pub fn as_array(&self) -> [bool; 4] {
        [
            self.macwilliams,
            self.functional_eq_p,
            self.functional_eq_d,
            self.prrc.holds,
        ]
    }

    pub fn all(&self) -> bool {
        self.as_array().iter().all(|&v| v)
    }

    pub fn none(&self) -> bool {
        self.as_array().iter().all(|&v| !v)
    }
}

/// Evaluates all four verdicts for `W_C` (genuine) against a candidate
/// distribution for the dual.
pub fn pair_verdicts(
    w: &WeightDistribution,
    ctx: &CodeContext,
    w_perp: &WeightDistribution,
) -> Result<Verdicts> {
    let ctxp = ctx.dual();
    let (g, gp) = match (ctx.genus(), ctx.genus_perp()) {
        (Some(g), Some(gp)) => (g as usize, gp as usize),
        _ => return Err(Error::NonIntegerGenus),
    };
    let q = ctx.q;
    let macwilliams = macwilliams_transform(&w.to_enumerator(), q, &ctx.size)? == w_perp.to_enumerator();

    let p = zeta_polynomial(w, ctx)?;
    let pp = zeta_polynomial_unchecked(w_perp, &ctxp)?;
    let fe_p = functional_eq_p(&p, &pp)?;
    let fe_d = match (duursma_reduced(&p), duursma_reduced(&pp)) {
        (Ok(d), Ok(dp)) => functional_eq_d(&d, &dp)?,
        (Err(Error::NonzeroRemainder), _) | (_, Err(Error::NonzeroRemainder)) => false,
        (Err(e), _) | (_, Err(e)) => return Err(e),
    };
    let prrc = prrc_for(&p, &pp, g, gp)?;
    Ok(Verdicts {
        macwilliams,
        functional_eq_p: fe_p,
        functional_eq_d: fe_d,
        prrc,
    })
}

/// PRRC on the series of two zeta polynomials at [`prrc_order`].
pub fn prrc_for(p: &ZetaPolynomial, pp: &ZetaPolynomial, g: usize, gp: usize) -> Result<PrrcVerdict> {
    let q = p.context().q;
    let order = prrc_order(g, gp, p.coeffs(), pp.coeffs());
    let a = series_of_rational(p.coeffs(), q, order);
    let ap = series_of_rational(pp.coeffs(), q, order);
    prrc_check(
        &a,
        &ap,
        q,
        g,
        gp,
        &residue_at_one(p.coeffs(), q),
        &residue_at_one(pp.coeffs(), q),
    )
}

/// Moves mass between weights `d⊥..=n`, keeping the total, `W^{(0)} = 1`
/// and at least one word of weight `d⊥`. `None` when no move is possible.
pub fn mutate_distribution(
    w: &WeightDistribution,
    d_perp: usize,
    rng: &mut impl Rng,
) -> Option<WeightDistribution> {
    let n = w.length();
    if d_perp >= n {
        return None;
    }
    let floor = |s: usize| u64::from(s == d_perp);
    let movable: u64 = (d_perp..=n).map(|s| w.counts()[s] - floor(s).min(w.counts()[s])).sum();
    if movable == 0 {
        return None;
    }
    let mut counts = w.counts().to_vec();
    let steps = rng.gen_range(1..=3);
    for _ in 0..steps {
        let sources: Vec<usize> = (d_perp..=n).filter(|&s| counts[s] > floor(s)).collect();
        let from = sources[rng.gen_range(0..sources.len())];
        let mut to = rng.gen_range(d_perp..=n - 1);
        if to >= from {
            to += 1;
        }
        let amount = rng.gen_range(1..=counts[from] - floor(from));
        counts[from] -= amount;
        counts[to] += amount;
    }
    if counts == w.counts() {
        // the moves cancelled out; shift one word between the extremes instead
        let from = (d_perp..=n).find(|&s| counts[s] > floor(s))?;
        let to = if from == n { d_perp } else { n };
        counts[from] -= 1;
        counts[to] += 1;
    }
    Some(WeightDistribution::new(counts).expect("W^(0) is untouched"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MutantReport {
    pub weights: WeightDistribution,
    pub verdicts: Verdicts,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HarnessReport {
    pub context: CodeContext,
    pub genuine: Verdicts,
    pub mutants: Vec<MutantReport>,
}

impl HarnessReport {
    /// Genuine pair passes everything and every mutant fails everything.
    pub fn consistent(&self) -> bool {
        self.genuine.all() && self.mutants.iter().all(|m| m.verdicts.none())
    }
}

/// Runs the four verdicts on `(C, C⊥)` and on `mutations` seeded
/// perturbations of `W_{C⊥}`.
pub fn equivalence_harness(code: &AdditiveCode, mutations: usize, seed: u64) -> Result<HarnessReport> {
    let dual = code.dual()?;
    let ctx = CodeContext::for_pair(code, &dual)?;
    if ctx.genus().is_none() {
        return Err(Error::NonIntegerGenus);
    }
    let w = code.weight_distribution();
    let genuine = pair_verdicts(w, &ctx, dual.weight_distribution())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut mutants = Vec::with_capacity(mutations);
    for _ in 0..mutations {
        let Some(wm) = mutate_distribution(dual.weight_distribution(), ctx.d_perp, &mut rng) else {
            break;
        };
        let verdicts = pair_verdicts(w, &ctx, &wm)?;
        mutants.push(MutantReport { weights: wm, verdicts });
    }
    Ok(HarnessReport {
        context: ctx,
        genuine,
        mutants,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::code::Side;
    use crate::group::{make_group, EnumerationBound};

    fn ints(v: &[i64]) -> TruncatedSeries {
        TruncatedSeries::new(v.iter().map(|&c| int(c)).collect()).unwrap()
    }

    fn binary(n: usize, gens: &[&[usize]]) -> AdditiveCode {
        let gens: Vec<Vec<usize>> = gens.iter().map(|g| g.to_vec()).collect();
        AdditiveCode::from_generator_digits(
            &make_group(&[2]).unwrap(),
            n,
            Side::Group,
            &gens,
            EnumerationBound::default(),
        )
        .unwrap()
    }

    fn hamming() -> AdditiveCode {
        binary(
            7,
            &[
                &[1, 0, 0, 0, 1, 1, 0],
                &[0, 1, 0, 0, 1, 0, 1],
                &[0, 0, 1, 0, 0, 1, 1],
                &[0, 0, 0, 1, 1, 1, 1],
            ],
        )
    }

    #[test]
    fn residue_examples() {
        assert_eq!(residue_at_one(&UniPoly::one(), 2), rat(1, 1));
        let p = UniPoly::new(vec![rat(1, 5), rat(2, 5), rat(2, 5)]);
        assert_eq!(residue_at_one(&p, 2), rat(1, 1));
        assert_eq!(residue_at_one(&UniPoly::from_ints(&[1, 0, 2]), 2), rat(3, 1));
    }

    #[test]
    fn rrc_examples() {
        let genus0 = series_of_rational(&UniPoly::one(), 2, 10);
        assert!(rrc_check(&genus0, 2, 0, &rat(1, 1)).unwrap().holds);

        let elliptic = UniPoly::from_ints(&[1, 0, 2]);
        let mut a = series_of_rational(&elliptic, 2, 10);
        for m in 1..=10u32 {
            assert_eq!(a.at(m as i64), int(3 * (2i64.pow(m) - 1)));
        }
        assert!(rrc_check(&a, 2, 1, &rat(3, 1)).unwrap().holds);
        a.set(2, a.at(2) + int(1));
        let v = rrc_check(&a, 2, 1, &rat(3, 1)).unwrap();
        assert_eq!(v.first_failure, Some((Family::Lower, 2)));
        assert!(!v.holds);

        assert_eq!(
            rrc_check(&ints(&[1]), 2, 1, &rat(1, 1)).unwrap_err(),
            Error::OrderTooShort { order: 0, required: 1 }
        );
    }

    #[test]
    fn prrc_examples() {
        let mds = series_of_rational(&UniPoly::one(), 3, 8);
        assert!(prrc_check(&mds, &mds, 3, 0, 0, &rat(1, 2), &rat(1, 2)).unwrap().holds);

        let ham = UniPoly::new(vec![rat(1, 5), rat(2, 5), rat(2, 5)]);
        let a = series_of_rational(&ham, 2, 7);
        let one = rat(1, 1);
        assert!(prrc_check(&a, &a, 2, 1, 1, &one, &one).unwrap().holds);

        let b = series_of_rational(&UniPoly::one(), 2, 7);
        assert!(!prrc_check(&a, &b, 2, 1, 1, &one, &one).unwrap().holds);
        assert!(!prrc_check(&b, &a, 2, 0, 0, &one, &one).unwrap().holds);

        assert_eq!(
            prrc_check(&a, &a, 2, 0, 1, &one, &one).unwrap_err(),
            Error::MixedGenusZero { g: 0, g_perp: 1 }
        );
        assert!(matches!(
            prrc_check(&ints(&[1]), &a, 2, 1, 1, &one, &one),
            Err(Error::OrderTooShort { .. })
        ));
    }

    #[test]
    fn harness_on_hamming() {
        let report = equivalence_harness(&hamming(), 100, 7).unwrap();
        assert!(report.genuine.all());
        assert_eq!(report.mutants.len(), 100);
        for m in &report.mutants {
            assert!(m.verdicts.none(), "{:?}", m);
        }
        assert!(report.consistent());
        let again = equivalence_harness(&hamming(), 100, 7).unwrap();
        assert_eq!(report, again);
    }

    #[test]
    fn mutations_preserve_mass_and_distance() {
        let c = hamming();
        let w = c.dual().unwrap().weight_distribution().clone();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let m = mutate_distribution(&w, 4, &mut rng).unwrap();
            assert_eq!(m.total(), w.total());
            assert_eq!(m.counts()[0], 1);
            assert_eq!(m.min_distance(), 4);
            assert_ne!(m, w);
        }
        let rep = WeightDistribution::new(vec![1, 0, 0, 1]).unwrap();
        assert!(mutate_distribution(&rep, 3, &mut rng).is_none());
    }

    #[test]
    fn harness_rejects_small_distance() {
        let c = binary(3, &[&[1, 0, 0]]);
        assert!(matches!(
            equivalence_harness(&c, 1, 0),
            Err(Error::MinimumDistanceTooSmall { .. })
        ));
    }
}
