//! JSON reports for the three subcommands.

use anyhow::{bail, Result};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use codezeta::algebra::{series_of_rational, Rational, TruncatedSeries, UniPoly};
use codezeta::code::AdditiveCode;
use codezeta::curves::{curve_rrc_check, zeta_from_counts, PlaneCurve};
use codezeta::mds::{macwilliams_transform, mds_count};
use codezeta::rrc::{equivalence_harness, prrc_check, prrc_order, residue_at_one, PrrcVerdict};
use codezeta::zeta::{
    average_support_identity, denominator_bound_check, duursma_integrality, duursma_reduced,
    functional_eq_d, functional_eq_p, probability_identities_all, tvn_coefficients,
    tvn_relation_check, zeta_coeff_identity_check, zeta_polynomial, CodeContext,
};
use codezeta::Error;

pub struct AnalyzeOptions {
    pub series_order: Option<usize>,
    pub mutate: Option<(usize, u64)>,
}

/// A report plus whether every applicable verdict held.
pub struct Report {
    pub body: Value,
    pub passed: bool,
}

fn big(b: &BigInt) -> Value {
    serde_json::from_str(&b.to_string()).expect("integers are valid JSON numbers")
}

fn rat(r: &Rational) -> Value {
    json!([big(r.numer()), big(r.denom())])
}

fn rats(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rat).collect())
}

fn poly(p: &UniPoly) -> Value {
    rats(p.coeffs())
}

fn series(a: &TruncatedSeries) -> Value {
    rats(a.coeffs())
}

fn skipped(reason: impl ToString) -> Value {
    json!({ "skipped": reason.to_string() })
}

fn prrc_json(v: &PrrcVerdict) -> Value {
    json!({
        "holds": v.holds,
        "checked_to": v.checked_to,
        "first_failure": v.first_failure.map(|(f, m)| json!([f.to_string(), m])),
    })
}

/// Verdict table: booleans count towards the exit status, anything else is a marker.
#[derive(Default)]
struct Verdicts(Map<String, Value>);

impl Verdicts {
    fn set(&mut self, key: &str, ok: bool) {
        self.0.insert(key.into(), Value::Bool(ok));
    }

    fn skip(&mut self, key: &str, reason: impl ToString) {
        self.0.insert(key.into(), skipped(reason));
    }

    fn passed(&self) -> bool {
        self.0.values().all(|v| v.as_bool() != Some(false))
    }
}

pub fn analyze(code: &AdditiveCode, opts: &AnalyzeOptions) -> Result<Report> {
    let dual = code.dual()?;
    let genus = code.genus()?;
    let w = code.weight_distribution();
    let wp = dual.weight_distribution();
    let mut out = Map::new();
    let mut verdicts = Verdicts::default();

    out.insert(
        "code".into(),
        json!({
            "moduli": code.group().moduli(),
            "q": code.q(),
            "length": code.length(),
            "size": code.size(),
            "d": code.min_distance(),
            "d_perp": dual.min_distance(),
            "q_pow_genus": rat(&genus.q_pow_g),
            "dimension": genus.dimension,
            "genus": genus.integer_genus,
            "prime_field_linear": code.is_prime_field_linear(),
        }),
    );
    out.insert("weights".into(), json!({ "code": w.counts(), "dual": wp.counts() }));

    let mw = macwilliams_transform(&w.to_enumerator(), code.q(), &code.size_big());
    verdicts.set("macwilliams", mw.as_ref() == Ok(&wp.to_enumerator()));

    let ctx = match CodeContext::for_pair(code, &dual) {
        Ok(ctx) => ctx,
        Err(e @ Error::MinimumDistanceTooSmall { .. }) => {
            let diag = json!({ "diagnostic": "MinimumDistanceTooSmall", "message": e.to_string() });
            out.insert("zeta".into(), diag);
            for key in ["duursma", "tvn"] {
                out.insert(key.into(), skipped("needs d, d_perp >= 2"));
            }
            for key in ["functional_eq_p", "functional_eq_d", "prrc"] {
                verdicts.skip(key, "needs d, d_perp >= 2");
            }
            out.insert("verdicts".into(), Value::Object(verdicts.0.clone()));
            return Ok(Report {
                passed: verdicts.passed(),
                body: Value::Object(out),
            });
        }
        Err(e) => return Err(e.into()),
    };

    let p = zeta_polynomial(w, &ctx)?;
    let pp = zeta_polynomial(wp, &ctx.dual())?;
    let mut zeta = Map::new();
    zeta.insert("p".into(), poly(p.coeffs()));
    zeta.insert("p_perp".into(), poly(pp.coeffs()));
    verdicts.set(
        "coefficient_identity",
        zeta_coeff_identity_check(&p, w) && zeta_coeff_identity_check(&pp, wp),
    );
    verdicts.set(
        "denominator_bound",
        denominator_bound_check(&p) && denominator_bound_check(&pp),
    );
    verdicts.set("functional_eq_p", functional_eq_p(&p, &pp)?);

    let (g, gp) = match (ctx.genus(), ctx.genus_perp()) {
        (Some(g), Some(gp)) => (g as usize, gp as usize),
        _ => {
            out.insert("zeta".into(), Value::Object(zeta));
            for key in ["duursma", "tvn"] {
                out.insert(key.into(), skipped("non-integer genus"));
            }
            for key in ["functional_eq_d", "prrc", "integrality", "averaging", "probability"] {
                verdicts.skip(key, "non-integer genus");
            }
            if opts.mutate.is_some() {
                verdicts.skip("mutants", "non-integer genus");
            }
            out.insert("verdicts".into(), Value::Object(verdicts.0.clone()));
            return Ok(Report {
                passed: verdicts.passed(),
                body: Value::Object(out),
            });
        }
    };

    let q = ctx.q;
    let order = opts
        .series_order
        .unwrap_or_else(|| prrc_order(g, gp, p.coeffs(), pp.coeffs()));
    let a = series_of_rational(p.coeffs(), q, order);
    let ap = series_of_rational(pp.coeffs(), q, order);
    zeta.insert("series".into(), json!({ "code": series(&a), "dual": series(&ap) }));
    out.insert("zeta".into(), Value::Object(zeta));
    let prrc = match prrc_check(
        &a,
        &ap,
        q,
        g,
        gp,
        &residue_at_one(p.coeffs(), q),
        &residue_at_one(pp.coeffs(), q),
    ) {
        Ok(v) => v,
        Err(e @ Error::OrderTooShort { .. }) => bail!("--series-order: {e}"),
        Err(e) => return Err(e.into()),
    };
    verdicts.0.insert("prrc".into(), prrc_json(&prrc));
    verdicts.set("prrc_holds", prrc.holds);

    let dc = duursma_reduced(&p)?;
    let dcp = duursma_reduced(&pp)?;
    let (weak, strong) = duursma_integrality(&dc);
    let (weak_p, strong_p) = duursma_integrality(&dcp);
    out.insert(
        "duursma".into(),
        json!({
            "d": poly(dc.coeffs()),
            "d_perp": poly(dcp.coeffs()),
            "scaled_integral": [strong, strong_p],
        }),
    );
    verdicts.set("functional_eq_d", functional_eq_d(&dc, &dcp)?);
    verdicts.set("integrality", weak && weak_p);
    if code.is_prime_field_linear() {
        verdicts.set("linear_integrality", strong && strong_p);
    }

    if g >= 1 && gp >= 1 {
        let mut avg = true;
        for i in 0..g {
            avg &= average_support_identity(code, &dc, i)?;
        }
        for i in 0..gp {
            avg &= average_support_identity(&dual, &dcp, i)?;
        }
        verdicts.set("averaging", avg);
        verdicts.set(
            "probability",
            probability_identities_all(code, &dual, &dc)?
                && probability_identities_all(&dual, code, &dcp)?,
        );
    } else {
        verdicts.skip("averaging", "needs g, g_perp >= 1");
        verdicts.skip("probability", "needs g, g_perp >= 1");
    }

    let tvn = tvn_coefficients(w, &ctx)?;
    out.insert("tvn".into(), json!({ "b": rats(&tvn.b) }));
    verdicts.set("tvn_relation", tvn_relation_check(&tvn, &dc));

    if let Some((count, seed)) = opts.mutate {
        // mutations move mass within [d_perp, n]; flip orientation when that is one weight
        let base = if ctx.d_perp < ctx.n { code.clone() } else { dual.clone() };
        let h = equivalence_harness(&base, count, seed)?;
        let rejected = h.mutants.iter().filter(|m| m.verdicts.none()).count();
        let offender = h
            .mutants
            .iter()
            .find(|m| !m.verdicts.none())
            .map(|m| json!({ "weights": m.weights.counts(), "verdicts": m.verdicts.as_array() }));
        verdicts.0.insert(
            "mutants".into(),
            json!({
                "seed": seed,
                "generated": h.mutants.len(),
                "rejected": rejected,
                "first_accepted": offender,
            }),
        );
        verdicts.set("mutants_rejected", h.genuine.all() && rejected == h.mutants.len());
    }

    out.insert("verdicts".into(), Value::Object(verdicts.0.clone()));
    Ok(Report {
        passed: verdicts.passed(),
        body: Value::Object(out),
    })
}

/// `M^{(s)}_{n,d}` for `1 ≤ d ≤ s ≤ n`, one row per `d`.
pub fn mds_table(n: usize, q: u64) -> Result<Value> {
    if n < 1 || q < 2 {
        return Err(Error::RangeError(format!("mds-table needs n >= 1 and q >= 2, got n={n} q={q}")).into());
    }
    let mut rows = Vec::with_capacity(n);
    for d in 1..=n {
        let counts = (d..=n)
            .map(|s| mds_count(n, d, q, s).map(|c| big(&c)))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(json!({ "d": d, "counts": counts }));
    }
    Ok(json!({ "n": n, "q": q, "rows": rows }))
}

pub fn curve(curve: &PlaneCurve, order: usize) -> Result<Report> {
    let z = zeta_from_counts(curve)?;
    let counts: Vec<Value> = (1..=3)
        .map(|k| match curve.count_points(k) {
            Ok(c) => json!(c),
            Err(Error::UnsupportedExtension { .. }) => Value::Null,
            Err(e) => json!({ "error": e.to_string() }),
        })
        .collect();
    let verdict = curve_rrc_check(&z, order)?;
    let a = series_of_rational(&z.p_x, z.q, order);
    let body = json!({
        "p": curve.p(),
        "genus": z.genus,
        "counts": counts,
        "p_x": poly(&z.p_x),
        "class_number": big(&z.class_number),
        "series": series(&a),
        "rrc": prrc_json(&verdict),
    });
    Ok(Report {
        passed: verdict.holds,
        body,
    })
}
