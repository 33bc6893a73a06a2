//! Finite abelian groups given as products of cyclic groups.
//!
//! Characters are identified with group elements through the componentwise
//! self-duality `Ẑ_m ≅ Z_m`, and a character value `χ(g)` is carried as the
//! exponent `e` of `exp(2πi·e/M)` with `M` the group exponent. Nothing here
//! touches complex numbers.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Default cap on exhaustive enumerations.
pub const DEFAULT_ENUMERATION_BOUND: u64 = 10_000_000;

/// Environment variable that overrides [`DEFAULT_ENUMERATION_BOUND`].
pub const ENUMERATION_BOUND_ENV: &str = "CODEZETA_MAX_ENUM";

// groups up to this order get precomputed operation tables
const TABLE_LIMIT: u64 = 1024;

/// Upper bound on the number of words any brute-force routine may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationBound(pub u64);

impl Default for EnumerationBound {
    fn default() -> Self {
        EnumerationBound(DEFAULT_ENUMERATION_BOUND)
    }
}

impl EnumerationBound {
    /// Reads `CODEZETA_MAX_ENUM`, falling back to the default on absence or garbage.
    pub fn from_env() -> Self {
        std::env::var(ENUMERATION_BOUND_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<u64>().ok())
            .map(EnumerationBound)
            .unwrap_or_default()
    }

    pub fn check(self, requested: u128) -> Result<()> {
        if requested > self.0 as u128 {
            Err(Error::EnumerationBoundExceeded {
                requested,
                bound: self.0,
            })
        } else {
            Ok(())
        }
    }
}

/// `Z_{m_1} × … × Z_{m_r}`, moduli kept in input order.
#[derive(Clone)]
pub struct FiniteAbelianGroup {
    moduli: Vec<u32>,
    order: u64,
    exponent: u64,
    tables: Option<Tables>,
}

#[derive(Clone)]
struct Tables {
    add: Vec<u32>,
    pairing: Vec<u32>,
}

impl fmt::Debug for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteAbelianGroup")
            .field("moduli", &self.moduli)
            .field("order", &self.order)
            .field("exponent", &self.exponent)
            .finish()
    }
}

impl PartialEq for FiniteAbelianGroup {
    fn eq(&self, other: &Self) -> bool {
        self.moduli == other.moduli
    }
}

impl Eq for FiniteAbelianGroup {}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.moduli.iter().map(|m| format!("Z_{m}")).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

/// An element of `G`, one residue per cyclic factor.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElement {
    pub residues: Vec<u32>,
}

/// A character of `G` under the identification `Ĝ ≅ G`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Character {
    pub residues: Vec<u32>,
}

/// `χ(g) = exp(2πi·value/M)`; zero means the character value 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairingExponent(pub u64);

impl GroupElement {
    pub fn new(residues: Vec<u32>) -> Self {
        GroupElement { residues }
    }

    pub fn is_zero(&self) -> bool {
        self.residues.iter().all(|&r| r == 0)
    }
}

impl Character {
    pub fn new(residues: Vec<u32>) -> Self {
        Character { residues }
    }

    pub fn is_trivial(&self) -> bool {
        self.residues.iter().all(|&r| r == 0)
    }
}

/// Builds `Z_{m_1} × … × Z_{m_r}`.
pub fn make_group(moduli: &[u64]) -> Result<FiniteAbelianGroup> {
    FiniteAbelianGroup::new(moduli)
}

impl FiniteAbelianGroup {
    pub fn new(moduli: &[u64]) -> Result<Self> {
        if moduli.is_empty() {
            return Err(Error::EmptyModuli);
        }
        if let Some(&m) = moduli.iter().find(|&&m| m < 2) {
            return Err(Error::ModulusBelowTwo(m));
        }
        let mut order: u64 = 1;
        let mut exponent: u64 = 1;
        for &m in moduli {
            if m > u32::MAX as u64 {
                return Err(Error::RangeError(format!("modulus {m} is too large")));
            }
            order = order
                .checked_mul(m)
                .ok_or_else(|| Error::RangeError("group order overflows u64".into()))?;
            exponent = exponent.lcm(&m);
        }
        let mut group = FiniteAbelianGroup {
            moduli: moduli.iter().map(|&m| m as u32).collect(),
            order,
            exponent,
            tables: None,
        };
        if order <= TABLE_LIMIT {
            group.tables = Some(group.build_tables());
        }
        Ok(group)
    }

    /// The cyclic group `Z_m`.
    pub fn cyclic(m: u64) -> Result<Self> {
        Self::new(&[m])
    }

    fn build_tables(&self) -> Tables {
        let q = self.order as usize;
        let mut add = vec![0u32; q * q];
        let mut pairing = vec![0u32; q * q];
        for a in 0..q {
            let ra = self.residues_of(a);
            for b in 0..q {
                let rb = self.residues_of(b);
                add[a * q + b] = self.index_of_residues(
                    &ra.iter()
                        .zip(&rb)
                        .zip(&self.moduli)
                        .map(|((x, y), m)| (x + y) % m)
                        .collect::<Vec<_>>(),
                ) as u32;
                pairing[a * q + b] = self.pairing_of_residues(&ra, &rb) as u32;
            }
        }
        Tables { add, pairing }
    }

    pub fn moduli(&self) -> &[u32] {
        &self.moduli
    }

    /// `|G|`.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// `M = lcm(m_1, …, m_r)`.
    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    /// True when `G = Z_p` for a prime `p`.
    pub fn is_prime_cyclic(&self) -> bool {
        self.moduli.len() == 1 && is_prime(self.moduli[0])
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement::new(vec![0; self.rank()])
    }

    pub fn trivial_character(&self) -> Character {
        Character::new(vec![0; self.rank()])
    }

    /// Checks that `residues` fits the group shape.
    pub fn validate(&self, residues: &[u32]) -> Result<()> {
        if residues.len() != self.rank() {
            return Err(Error::ShapeMismatch(format!(
                "expected {} residues, got {}",
                self.rank(),
                residues.len()
            )));
        }
        for (r, m) in residues.iter().zip(&self.moduli) {
            if r >= m {
                return Err(Error::ShapeMismatch(format!(
                    "residue {r} out of range for Z_{m}"
                )));
            }
        }
        Ok(())
    }

    /// Lexicographic position of a residue vector, first factor most significant.
    pub fn index_of(&self, g: &GroupElement) -> Result<usize> {
        self.validate(&g.residues)?;
        Ok(self.index_of_residues(&g.residues))
    }

    pub(crate) fn index_of_residues(&self, residues: &[u32]) -> usize {
        residues
            .iter()
            .zip(&self.moduli)
            .fold(0usize, |acc, (&r, &m)| acc * m as usize + r as usize)
    }

    pub(crate) fn residues_of(&self, mut index: usize) -> Vec<u32> {
        let mut out = vec![0u32; self.rank()];
        for (slot, &m) in out.iter_mut().zip(&self.moduli).rev() {
            *slot = (index % m as usize) as u32;
            index /= m as usize;
        }
        out
    }

    pub fn element(&self, index: usize) -> GroupElement {
        GroupElement::new(self.residues_of(index))
    }

    pub fn character(&self, index: usize) -> Character {
        Character::new(self.residues_of(index))
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order as usize).map(|i| self.element(i))
    }

    pub fn characters(&self) -> impl Iterator<Item = Character> + '_ {
        (0..self.order as usize).map(|i| self.character(i))
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement::new(
            a.residues
                .iter()
                .zip(&b.residues)
                .zip(&self.moduli)
                .map(|((x, y), m)| (x + y) % m)
                .collect(),
        )
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        GroupElement::new(
            a.residues
                .iter()
                .zip(&self.moduli)
                .map(|(x, m)| (m - x) % m)
                .collect(),
        )
    }

    pub(crate) fn add_idx(&self, a: usize, b: usize) -> usize {
        match &self.tables {
            Some(t) => t.add[a * self.order as usize + b] as usize,
            None => {
                let ra = self.residues_of(a);
                let rb = self.residues_of(b);
                let sum: Vec<u32> = ra
                    .iter()
                    .zip(&rb)
                    .zip(&self.moduli)
                    .map(|((x, y), m)| (x + y) % m)
                    .collect();
                self.index_of_residues(&sum)
            }
        }
    }

    #[cfg(test)]
    pub(crate) fn neg_idx(&self, a: usize) -> usize {
        let ra = self.residues_of(a);
        let neg: Vec<u32> = ra
            .iter()
            .zip(&self.moduli)
            .map(|(x, m)| (m - x) % m)
            .collect();
        self.index_of_residues(&neg)
    }

    pub(crate) fn pairing_idx(&self, g: usize, chi: usize) -> u64 {
        match &self.tables {
            Some(t) => t.pairing[g * self.order as usize + chi] as u64,
            None => self.pairing_of_residues(&self.residues_of(g), &self.residues_of(chi)),
        }
    }

    fn pairing_of_residues(&self, g: &[u32], chi: &[u32]) -> u64 {
        let big_m = self.exponent as u128;
        g.iter()
            .zip(chi)
            .zip(&self.moduli)
            .fold(0u128, |acc, ((&a, &b), &m)| {
                let scale = big_m / m as u128;
                (acc + (a as u128 * b as u128 % m as u128) * scale) % big_m
            }) as u64
    }

    /// Exponent `e` with `χ(g) = exp(2πi·e/M)`.
    pub fn pairing_exponent(&self, g: &GroupElement, chi: &Character) -> Result<PairingExponent> {
        self.validate(&g.residues)?;
        self.validate(&chi.residues)?;
        Ok(PairingExponent(
            self.pairing_of_residues(&g.residues, &chi.residues),
        ))
    }

    /// Enumerates `G^n` in lexicographic order of residue vectors.
    pub fn enumerate_words(
        &self,
        n: usize,
        bound: EnumerationBound,
    ) -> Result<impl Iterator<Item = Vec<GroupElement>> + '_> {
        let total = (self.order as u128)
            .checked_pow(n as u32)
            .unwrap_or(u128::MAX);
        bound.check(total)?;
        let space = WordSpace::new(self.order, n);
        Ok((0..total as u64).map(move |w| {
            space
                .digits(w)
                .into_iter()
                .map(|d| self.element(d))
                .collect()
        }))
    }
}

/// Free-standing form of [`FiniteAbelianGroup::pairing_exponent`].
pub fn pairing_exponent(
    g: &GroupElement,
    chi: &Character,
    group: &FiniteAbelianGroup,
) -> Result<PairingExponent> {
    group.pairing_exponent(g, chi)
}

/// Free-standing form of [`FiniteAbelianGroup::enumerate_words`].
pub fn enumerate_words(
    group: &FiniteAbelianGroup,
    n: usize,
    bound: EnumerationBound,
) -> Result<impl Iterator<Item = Vec<GroupElement>> + '_> {
    group.enumerate_words(n, bound)
}

/// Anything whose components are either zero/trivial or not.
pub trait Weighted {
    fn is_identity(&self) -> bool;
}

impl Weighted for GroupElement {
    fn is_identity(&self) -> bool {
        self.is_zero()
    }
}

impl Weighted for Character {
    fn is_identity(&self) -> bool {
        self.is_trivial()
    }
}

/// Hamming weight: number of nonzero (or nontrivial) components.
pub fn word_weight<T: Weighted>(word: &[T]) -> usize {
    word.iter().filter(|c| !c.is_identity()).count()
}

/// Words of `G^n` packed as base-`|G|` integers, position 1 most significant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct WordSpace {
    pub q: u64,
    pub n: usize,
}

impl WordSpace {
    pub fn new(q: u64, n: usize) -> Self {
        WordSpace { q, n }
    }

    pub fn size(&self) -> u128 {
        (self.q as u128).checked_pow(self.n as u32).unwrap_or(u128::MAX)
    }

    pub fn digits(&self, mut w: u64) -> Vec<usize> {
        let mut out = vec![0usize; self.n];
        for slot in out.iter_mut().rev() {
            *slot = (w % self.q) as usize;
            w /= self.q;
        }
        out
    }

    pub fn pack(&self, digits: &[usize]) -> u64 {
        digits
            .iter()
            .fold(0u64, |acc, &d| acc * self.q + d as u64)
    }
}

pub(crate) fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut i = 2u32;
    while (i as u64) * (i as u64) <= p as u64 {
        if p.is_multiple_of(i) {
            return false;
        }
        i += 1;
    }
    true
}
