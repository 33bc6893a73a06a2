//! JSON code and curve specifications.

use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::Deserialize;

use codezeta::code::{closure, AdditiveCode};
use codezeta::curves::PlaneCurve;
use codezeta::group::{make_group, EnumerationBound, GroupElement};

/// A coordinate of a generator: a residue vector, or a bare residue for cyclic groups.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum Entry {
    Scalar(u32),
    Residues(Vec<u32>),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeSpec {
    pub moduli: Vec<u64>,
    pub length: usize,
    generators: Vec<Vec<Entry>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveSpec {
    pub p: u32,
    pub monomials: Vec<(u32, u32, u32, i64)>,
    pub genus: u32,
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

pub fn read_code_spec(path: &Path) -> Result<CodeSpec> {
    read_json(path)
}

pub fn read_curve_spec(path: &Path) -> Result<CurveSpec> {
    read_json(path)
}

impl CodeSpec {
    pub fn build(&self, bound: EnumerationBound) -> Result<AdditiveCode> {
        let group = make_group(&self.moduli)?;
        let rank = group.rank();
        let mut gens = Vec::with_capacity(self.generators.len());
        for (k, g) in self.generators.iter().enumerate() {
            let mut word = Vec::with_capacity(g.len());
            for e in g {
                let residues = match e {
                    Entry::Scalar(r) if rank == 1 => vec![*r],
                    Entry::Scalar(_) => bail!("generator {k}: bare residue needs a cyclic group"),
                    Entry::Residues(v) => v.clone(),
                };
                word.push(GroupElement::new(residues));
            }
            gens.push(word);
        }
        Ok(closure(&group, self.length, &gens, bound)?)
    }
}

impl CurveSpec {
    pub fn build(&self) -> Result<PlaneCurve> {
        Ok(PlaneCurve::new(self.p, &self.monomials, self.genus)?)
    }
}
