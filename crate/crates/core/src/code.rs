//! Additive codes stored extensionally as sorted sets of packed words.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::algebra::{big_pow, binom, int, HomogeneousEnumerator, Rational};
use crate::error::{Error, Result};
use crate::group::{EnumerationBound, FiniteAbelianGroup, GroupElement, WordSpace};

/// Whether the words live in `G^n` or in `Ĝ^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Group,
    Character,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Group => Side::Character,
            Side::Character => Side::Group,
        }
    }
}

/// `W^{(0)}, …, W^{(n)}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightDistribution {
    counts: Vec<u64>,
}

impl WeightDistribution {
    pub fn new(counts: Vec<u64>) -> Result<Self> {
        match counts.first() {
            Some(1) => Ok(WeightDistribution { counts }),
            Some(c) => Err(Error::InconsistentDistribution(format!(
                "W^(0) must be 1, got {c}"
            ))),
            None => Err(Error::InconsistentDistribution("empty distribution".into())),
        }
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn length(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Smallest nonzero weight present, 0 when only the zero word is counted.
    pub fn min_distance(&self) -> usize {
        self.counts
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, &c)| c > 0)
            .map(|(s, _)| s)
            .unwrap_or(0)
    }

    pub fn to_enumerator(&self) -> HomogeneousEnumerator {
        HomogeneousEnumerator::from_counts(&self.counts)
    }
}

/// Genus bookkeeping kept exact: `q^g = q^{n+1−d}/|C|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenusData {
    pub n: usize,
    pub d: usize,
    pub size: BigInt,
    pub q: u64,
    pub q_pow_g: Rational,
    /// `log_q |C|` when it is an integer.
    pub dimension: Option<u64>,
    pub integer_genus: Option<u64>,
}

/// Free `F_q^*`-action on `G`: one automorphism of `G` per nonzero scalar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarAction {
    rows: Vec<Vec<usize>>,
}

impl ScalarAction {
    /// Rows are indexed by scalar, columns by element index; each row maps an
    /// element to its scalar multiple.
    pub fn new(group: &FiniteAbelianGroup, rows: Vec<Vec<usize>>) -> Result<Self> {
        let q = group.order() as usize;
        if rows.len() != q - 1 {
            return Err(Error::InvalidScalarAction(format!(
                "expected {} scalars, got {}",
                q - 1,
                rows.len()
            )));
        }
        for row in &rows {
            if row.len() != q || row.iter().any(|&x| x >= q) {
                return Err(Error::InvalidScalarAction("row has the wrong shape".into()));
            }
            for a in 0..q {
                for b in 0..q {
                    if row[group.add_idx(a, b)] != group.add_idx(row[a], row[b]) {
                        return Err(Error::InvalidScalarAction(
                            "a scalar is not additive".into(),
                        ));
                    }
                }
            }
        }
        for a in 1..q {
            let orbit: HashSet<usize> = rows.iter().map(|r| r[a]).collect();
            if orbit.len() != q - 1 || orbit.contains(&0) {
                return Err(Error::InvalidScalarAction(format!(
                    "action is not free on element {a}"
                )));
            }
        }
        Ok(ScalarAction { rows })
    }

    /// Multiplication by `1, …, p−1` on `Z_p`.
    pub fn prime_field(group: &FiniteAbelianGroup) -> Result<Self> {
        if !group.is_prime_cyclic() {
            return Err(Error::InvalidScalarAction(format!("{group} is not Z_p")));
        }
        let p = group.order() as usize;
        let rows = (1..p).map(|s| (0..p).map(|a| a * s % p).collect()).collect();
        Self::new(group, rows)
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }
}

/// A subgroup of `G^n` (or of `Ĝ^n`), kept as its full sorted word list.
#[derive(Clone)]
pub struct AdditiveCode {
    group: FiniteAbelianGroup,
    length: usize,
    side: Side,
    words: Vec<u64>,
    generators: Vec<u64>,
    bound: EnumerationBound,
    weights: WeightDistribution,
}

impl fmt::Debug for AdditiveCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AdditiveCode")
            .field("group", &self.group)
            .field("length", &self.length)
            .field("side", &self.side)
            .field("size", &self.words.len())
            .field("weights", &self.weights.counts)
            .finish()
    }
}

impl PartialEq for AdditiveCode {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group
            && self.length == other.length
            && self.side == other.side
            && self.words == other.words
    }
}

impl Eq for AdditiveCode {}

/// Smallest subgroup of `G^n` containing `generators`.
pub fn closure(
    group: &FiniteAbelianGroup,
    n: usize,
    generators: &[Vec<GroupElement>],
    bound: EnumerationBound,
) -> Result<AdditiveCode> {
    if n == 0 {
        return Err(Error::LengthTooShort(0));
    }
    let gens = generators
        .iter()
        .map(|w| {
            if w.len() != n {
                return Err(Error::ShapeMismatch(format!(
                    "generator has length {}, expected {n}",
                    w.len()
                )));
            }
            w.iter().map(|e| group.index_of(e)).collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    AdditiveCode::from_generator_digits(group, n, Side::Group, &gens, bound)
}

impl AdditiveCode {
    /// Closure of generators given as per-position element indices.
    pub fn from_generator_digits(
        group: &FiniteAbelianGroup,
        n: usize,
        side: Side,
        generators: &[Vec<usize>],
        bound: EnumerationBound,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::LengthTooShort(0));
        }
        let space = WordSpace::new(group.order(), n);
        if space.size() > u64::MAX as u128 {
            return Err(Error::RangeError(format!(
                "|G|^n = {}^{n} does not fit in 64 bits",
                group.order()
            )));
        }
        for g in generators {
            if g.len() != n || g.iter().any(|&x| x as u64 >= group.order()) {
                return Err(Error::ShapeMismatch("generator does not fit G^n".into()));
            }
        }
        let packed: Vec<u64> = generators.iter().map(|g| space.pack(g)).collect();
        let (words, gens) = span(group, space, &packed, bound)?;
        Ok(Self::assemble(group.clone(), n, side, words, gens, bound))
    }

    fn assemble(
        group: FiniteAbelianGroup,
        length: usize,
        side: Side,
        mut words: Vec<u64>,
        generators: Vec<u64>,
        bound: EnumerationBound,
    ) -> Self {
        words.sort_unstable();
        words.dedup();
        let space = WordSpace::new(group.order(), length);
        let mut counts = vec![0u64; length + 1];
        for &w in &words {
            counts[packed_weight(space, w)] += 1;
        }
        AdditiveCode {
            group,
            length,
            side,
            words,
            generators,
            bound,
            weights: WeightDistribution { counts },
        }
    }

    /// Builds a code from an already closed word set, picking a generating set greedily.
    fn from_closed_words(
        group: FiniteAbelianGroup,
        length: usize,
        side: Side,
        words: Vec<u64>,
        bound: EnumerationBound,
    ) -> Self {
        let space = WordSpace::new(group.order(), length);
        let gens = greedy_generators(&group, space, &words);
        Self::assemble(group, length, side, words, gens, bound)
    }

    /// The whole space `G^n`.
    pub fn full_space(group: &FiniteAbelianGroup, n: usize, bound: EnumerationBound) -> Result<Self> {
        let gens: Vec<Vec<usize>> = (0..n)
            .flat_map(|pos| {
                (0..group.rank()).map(move |f| {
                    let mut r = vec![0u32; group.rank()];
                    r[f] = 1;
                    (pos, r)
                })
            })
            .map(|(pos, r)| {
                let mut w = vec![0usize; n];
                w[pos] = group.index_of_residues(&r);
                w
            })
            .collect();
        Self::from_generator_digits(group, n, Side::Group, &gens, bound)
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn bound(&self) -> EnumerationBound {
        self.bound
    }

    /// Replaces the enumeration bound used by derived codes.
    pub fn with_bound(mut self, bound: EnumerationBound) -> Self {
        self.bound = bound;
        self
    }

    pub fn size(&self) -> usize {
        self.words.len()
    }

    pub fn size_big(&self) -> BigInt {
        BigInt::from(self.words.len())
    }

    pub fn q(&self) -> u64 {
        self.group.order()
    }

    pub(crate) fn space(&self) -> WordSpace {
        WordSpace::new(self.group.order(), self.length)
    }

    /// Packed word indices in ascending order.
    pub fn word_indices(&self) -> &[u64] {
        &self.words
    }

    /// Per-position element indices of each word, in ascending order.
    pub fn word_digits(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        let space = self.space();
        self.words.iter().map(move |&w| space.digits(w))
    }

    pub fn words(&self) -> impl Iterator<Item = Vec<GroupElement>> + '_ {
        self.word_digits()
            .map(|d| d.into_iter().map(|x| self.group.element(x)).collect())
    }

    pub fn generators(&self) -> Vec<Vec<GroupElement>> {
        let space = self.space();
        self.generators
            .iter()
            .map(|&w| {
                space
                    .digits(w)
                    .into_iter()
                    .map(|x| self.group.element(x))
                    .collect()
            })
            .collect()
    }

    pub fn contains(&self, word: &[GroupElement]) -> bool {
        if word.len() != self.length {
            return false;
        }
        let Ok(digits) = word
            .iter()
            .map(|e| self.group.index_of(e))
            .collect::<Result<Vec<_>>>()
        else {
            return false;
        };
        self.words.binary_search(&self.space().pack(&digits)).is_ok()
    }

    pub fn weight_distribution(&self) -> &WeightDistribution {
        &self.weights
    }

    pub fn min_distance(&self) -> usize {
        self.weights.min_distance()
    }

    pub fn is_zero_code(&self) -> bool {
        self.words.len() == 1
    }

    pub fn genus(&self) -> Result<GenusData> {
        if self.is_zero_code() {
            return Err(Error::ZeroCode);
        }
        let n = self.length;
        let d = self.min_distance();
        let q = self.q();
        let size = self.size_big();
        let q_pow_g = int(big_pow(q, (n + 1 - d) as u32)) / int(size.clone());
        let dimension = exact_log(q, self.words.len() as u64);
        let integer_genus = dimension.map(|k| (n + 1 - d) as u64 - k);
        Ok(GenusData {
            n,
            d,
            size,
            q,
            q_pow_g,
            dimension,
            integer_genus,
        })
    }

    /// All `π` with `π(c) = 1` for every codeword, on the opposite side.
    pub fn dual(&self) -> Result<AdditiveCode> {
        let space = self.space();
        self.bound.check(space.size())?;
        let q = self.q() as usize;
        let m = self.group.exponent();
        let n = self.length;
        // pairing rows per generator and position, indexed by character
        let rows: Vec<Vec<Vec<u64>>> = self
            .generators
            .iter()
            .map(|&g| {
                space
                    .digits(g)
                    .into_iter()
                    .map(|x| (0..q).map(|chi| self.group.pairing_idx(x, chi)).collect())
                    .collect()
            })
            .collect();
        let total = space.size() as u64;
        let words: Vec<u64> = (0..total)
            .into_par_iter()
            .filter(|&w| {
                let digits = space.digits(w);
                rows.iter().all(|gen_rows| {
                    (0..n).map(|i| gen_rows[i][digits[i]]).sum::<u64>() % m == 0
                })
            })
            .collect();
        Ok(Self::from_closed_words(
            self.group.clone(),
            n,
            self.side.flip(),
            words,
            self.bound,
        ))
    }

    fn check_position(&self, i: usize) -> Result<()> {
        if self.length < 2 {
            return Err(Error::LengthTooShort(self.length));
        }
        if i < 1 || i > self.length {
            return Err(Error::IndexOutOfRange {
                index: i as i64,
                lo: 1,
                hi: self.length as i64,
            });
        }
        Ok(())
    }

    fn delete_position(&self, i: usize, keep: impl Fn(&[usize]) -> bool) -> AdditiveCode {
        let small = WordSpace::new(self.q(), self.length - 1);
        let mut words: Vec<u64> = self
            .word_digits()
            .filter(|d| keep(d))
            .map(|mut d| {
                d.remove(i - 1);
                small.pack(&d)
            })
            .collect();
        words.sort_unstable();
        words.dedup();
        Self::from_closed_words(self.group.clone(), self.length - 1, self.side, words, self.bound)
    }

    /// Deletes coordinate `i` (1-based) from every word.
    pub fn puncture(&self, i: usize) -> Result<AdditiveCode> {
        self.check_position(i)?;
        Ok(self.delete_position(i, |_| true))
    }

    /// Keeps the words vanishing at coordinate `i` (1-based), then deletes it.
    pub fn shorten(&self, i: usize) -> Result<AdditiveCode> {
        self.check_position(i)?;
        Ok(self.delete_position(i, |d| d[i - 1] == 0))
    }

    /// `(S_i(C⊥) = Π_i(C)⊥, Π_i(C⊥) = S_i(C)⊥)` as set equalities.
    pub fn duality_commutation_check(&self, i: usize) -> Result<(bool, bool)> {
        let dual = self.dual()?;
        let first = dual.shorten(i)? == self.puncture(i)?.dual()?;
        let second = dual.puncture(i)? == self.shorten(i)?.dual()?;
        Ok((first, second))
    }

    /// For an MDS code: every `d`-subset of positions supports exactly `|G|−1` words.
    pub fn mds_support_count_check(&self) -> Result<bool> {
        let genus = self.genus()?;
        if genus.integer_genus != Some(0) {
            return Err(Error::NotMds);
        }
        let d = genus.d;
        let mut per_support: BTreeMap<u64, u64> = BTreeMap::new();
        for digits in self.word_digits() {
            let mask = support_mask(&digits);
            if mask.count_ones() as usize == d {
                *per_support.entry(mask).or_default() += 1;
            }
        }
        let subsets = binom(self.length as i64, d as i64);
        Ok(BigInt::from(per_support.len()) == subsets
            && per_support.values().all(|&c| c == self.q() - 1))
    }

    /// Closed under the given scalar action.
    pub fn is_linear_under(&self, action: &ScalarAction) -> bool {
        let space = self.space();
        action.rows().iter().all(|row| {
            self.generators.iter().all(|&g| {
                let image: Vec<usize> = space.digits(g).into_iter().map(|x| row[x]).collect();
                self.words.binary_search(&space.pack(&image)).is_ok()
            })
        })
    }

    /// Linear over `Z_p`; always true there since every subgroup is a subspace.
    pub fn is_prime_field_linear(&self) -> bool {
        self.group.is_prime_cyclic()
    }

    /// Support bitmasks of all nonzero words, bit `i` for position `i+1`.
    pub(crate) fn nonzero_supports(&self) -> Vec<u64> {
        self.word_digits()
            .map(|d| support_mask(&d))
            .filter(|&m| m != 0)
            .collect()
    }
}

/// Free-standing [`AdditiveCode::dual`].
pub fn dual(code: &AdditiveCode) -> Result<AdditiveCode> {
    code.dual()
}

pub fn weight_distribution(code: &AdditiveCode) -> &WeightDistribution {
    code.weight_distribution()
}

pub fn min_distance(code: &AdditiveCode) -> usize {
    code.min_distance()
}

pub fn genus(code: &AdditiveCode) -> Result<GenusData> {
    code.genus()
}

pub fn puncture(code: &AdditiveCode, i: usize) -> Result<AdditiveCode> {
    code.puncture(i)
}

pub fn shorten(code: &AdditiveCode, i: usize) -> Result<AdditiveCode> {
    code.shorten(i)
}

pub fn duality_commutation_check(code: &AdditiveCode, i: usize) -> Result<(bool, bool)> {
    code.duality_commutation_check(i)
}

pub fn mds_support_count_check(code: &AdditiveCode) -> Result<bool> {
    code.mds_support_count_check()
}

pub(crate) fn support_mask(digits: &[usize]) -> u64 {
    digits
        .iter()
        .enumerate()
        .filter(|(_, &x)| x != 0)
        .fold(0u64, |m, (i, _)| m | (1 << i))
}

fn packed_weight(space: WordSpace, mut w: u64) -> usize {
    let mut wt = 0;
    for _ in 0..space.n {
        if !w.is_multiple_of(space.q) {
            wt += 1;
        }
        w /= space.q;
    }
    wt
}

fn add_packed(group: &FiniteAbelianGroup, space: WordSpace, a: u64, b: u64) -> u64 {
    let da = space.digits(a);
    let db = space.digits(b);
    let sum: Vec<usize> = da.iter().zip(&db).map(|(&x, &y)| group.add_idx(x, y)).collect();
    space.pack(&sum)
}

/// Subgroup generated by `gens`, plus the generators that actually enlarged it.
fn span(
    group: &FiniteAbelianGroup,
    space: WordSpace,
    gens: &[u64],
    bound: EnumerationBound,
) -> Result<(Vec<u64>, Vec<u64>)> {
    let mut set: HashSet<u64> = HashSet::from([0u64]);
    let mut elems: Vec<u64> = vec![0];
    let mut used = Vec::new();
    for &g in gens {
        if set.contains(&g) {
            continue;
        }
        // multiples of g up to the first one already in the current subgroup
        let mut multiples = vec![0u64];
        let mut cur = g;
        while !set.contains(&cur) {
            multiples.push(cur);
            cur = add_packed(group, space, cur, g);
        }
        let new_size = elems.len() as u128 * multiples.len() as u128;
        bound.check(new_size)?;
        let mut next = Vec::with_capacity(new_size as usize);
        for &m in &multiples {
            for &h in &elems {
                next.push(if m == 0 { h } else { add_packed(group, space, h, m) });
            }
        }
        set.extend(next.iter().copied());
        elems = next;
        used.push(g);
    }
    elems.sort_unstable();
    Ok((elems, used))
}

fn greedy_generators(group: &FiniteAbelianGroup, space: WordSpace, words: &[u64]) -> Vec<u64> {
    let (_, used) = span(
        group,
        space,
        words,
        EnumerationBound(u64::MAX),
    )
    .expect("span of a closed word set cannot exceed an unbounded limit");
    used
}

/// `log_base(x)` when `x` is an exact power.
fn exact_log(base: u64, mut x: u64) -> Option<u64> {
    let mut k = 0;
    while x > 1 {
        if !x.is_multiple_of(base) {
            return None;
        }
        x /= base;
        k += 1;
    }
    (x == 1).then_some(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::group::make_group;
    use num_traits::One;
    use proptest::prelude::*;

    fn cyc(m: u64) -> FiniteAbelianGroup {
        make_group(&[m]).unwrap()
    }

    fn code(m: u64, n: usize, gens: &[&[usize]]) -> AdditiveCode {
        let gens: Vec<Vec<usize>> = gens.iter().map(|g| g.to_vec()).collect();
        AdditiveCode::from_generator_digits(&cyc(m), n, Side::Group, &gens, EnumerationBound::default())
            .unwrap()
    }

    fn words(c: &AdditiveCode) -> Vec<Vec<usize>> {
        c.word_digits().collect()
    }

    fn even_weight(n: usize) -> AdditiveCode {
        let gens: Vec<Vec<usize>> = (1..n)
            .map(|i| {
                let mut w = vec![0; n];
                w[0] = 1;
                w[i] = 1;
                w
            })
            .collect();
        let refs: Vec<&[usize]> = gens.iter().map(|g| g.as_slice()).collect();
        code(2, n, &refs)
    }

    #[test]
    fn closure_examples() {
        let rep = code(2, 3, &[&[1, 1, 1]]);
        assert_eq!(words(&rep), vec![vec![0, 0, 0], vec![1, 1, 1]]);
        let zero = code(3, 4, &[]);
        assert_eq!(zero.size(), 1);
        let z4 = code(4, 2, &[&[1, 1]]);
        assert_eq!(
            words(&z4),
            vec![vec![0, 0], vec![1, 1], vec![2, 2], vec![3, 3]]
        );
    }

    #[test]
    fn closure_through_group_elements() {
        let g = make_group(&[2, 2]).unwrap();
        let a = GroupElement::new(vec![1, 0]);
        let c = closure(&g, 2, &[vec![a.clone(), a.clone()]], EnumerationBound::default()).unwrap();
        assert_eq!(c.size(), 2);
        assert!(c.contains(&[a.clone(), a.clone()]));
        assert!(!c.contains(&[a.clone(), g.zero()]));
        let err = closure(&g, 3, &[vec![a.clone()]], EnumerationBound::default()).unwrap_err();
        assert!(matches!(err, Error::ShapeMismatch(_)));
        let bad = GroupElement::new(vec![2, 0]);
        let err = closure(&g, 1, &[vec![bad]], EnumerationBound::default()).unwrap_err();
        assert!(matches!(err, Error::ShapeMismatch(_)));
    }

    #[test]
    fn closure_bound() {
        let g = cyc(2);
        let err = AdditiveCode::full_space(&g, 5, EnumerationBound(16)).unwrap_err();
        assert!(matches!(err, Error::EnumerationBoundExceeded { .. }));
    }

    #[test]
    fn dual_examples() {
        let rep = code(2, 3, &[&[1, 1, 1]]);
        let d = rep.dual().unwrap();
        assert_eq!(d.side(), Side::Character);
        assert_eq!(d.size(), 4);
        assert_eq!(d.min_distance(), 2);
        assert_eq!(d.weight_distribution().counts(), &[1, 0, 3, 0]);

        let full = AdditiveCode::full_space(&cyc(3), 2, EnumerationBound::default()).unwrap();
        let fd = full.dual().unwrap();
        assert_eq!(fd.size(), 1);
    }

    #[test]
    fn dual_bound() {
        let c = code(2, 5, &[&[1, 1, 1, 1, 1]]).with_bound(EnumerationBound(10));
        assert!(matches!(c.dual(), Err(Error::EnumerationBoundExceeded { .. })));
    }

    #[test]
    fn weight_and_distance_examples() {
        assert_eq!(code(2, 3, &[&[1, 1, 1]]).weight_distribution().counts(), &[1, 0, 0, 1]);
        let zero = code(2, 3, &[]);
        assert_eq!(zero.weight_distribution().counts(), &[1, 0, 0, 0]);
        assert_eq!(zero.min_distance(), 0);
        assert_eq!(even_weight(3).weight_distribution().counts(), &[1, 0, 3, 0]);
        let full = AdditiveCode::full_space(&cyc(2), 3, EnumerationBound::default()).unwrap();
        assert_eq!(full.min_distance(), 1);
    }

    #[test]
    fn genus_examples() {
        let rep = code(2, 3, &[&[1, 1, 1]]).genus().unwrap();
        assert_eq!(rep.integer_genus, Some(0));
        assert_eq!(rep.q_pow_g, rat(1, 1));

        let hamming = code(
            2,
            7,
            &[
                &[1, 0, 0, 0, 1, 1, 0],
                &[0, 1, 0, 0, 1, 0, 1],
                &[0, 0, 1, 0, 0, 1, 1],
                &[0, 0, 0, 1, 1, 1, 1],
            ],
        );
        let gd = hamming.genus().unwrap();
        assert_eq!(gd.integer_genus, Some(1));
        assert_eq!(gd.q_pow_g, rat(2, 1));

        let klein = make_group(&[2, 2]).unwrap();
        let c = AdditiveCode::from_generator_digits(
            &klein,
            2,
            Side::Group,
            &[vec![2, 2]],
            EnumerationBound::default(),
        )
        .unwrap();
        let gd = c.genus().unwrap();
        assert_eq!(gd.q_pow_g, rat(2, 1));
        assert_eq!(gd.integer_genus, None);

        assert_eq!(code(2, 3, &[]).genus().unwrap_err(), Error::ZeroCode);
    }

    #[test]
    fn puncture_shorten_examples() {
        let rep = code(2, 3, &[&[1, 1, 1]]);
        assert_eq!(rep.puncture(1).unwrap(), code(2, 2, &[&[1, 1]]));
        assert_eq!(rep.shorten(1).unwrap().size(), 1);
        let ev = even_weight(3);
        assert_eq!(words(&ev.shorten(3).unwrap()), vec![vec![0, 0], vec![1, 1]]);
        assert!(matches!(rep.puncture(0), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(rep.shorten(4), Err(Error::IndexOutOfRange { .. })));
        let short = code(2, 1, &[&[1]]);
        assert_eq!(short.puncture(1).unwrap_err(), Error::LengthTooShort(1));
    }

    #[test]
    fn commutation_examples() {
        assert_eq!(code(2, 3, &[&[1, 1, 1]]).duality_commutation_check(2).unwrap(), (true, true));
        let full = AdditiveCode::full_space(&cyc(3), 2, EnumerationBound::default()).unwrap();
        assert_eq!(full.duality_commutation_check(1).unwrap(), (true, true));
        assert_eq!(even_weight(4).duality_commutation_check(4).unwrap(), (true, true));
    }

    #[test]
    fn support_count_examples() {
        assert!(code(2, 3, &[&[1, 1, 1]]).mds_support_count_check().unwrap());
        let full = AdditiveCode::full_space(&cyc(3), 2, EnumerationBound::default()).unwrap();
        assert!(full.mds_support_count_check().unwrap());
        assert!(even_weight(3).mds_support_count_check().unwrap());
        let non_mds = code(2, 4, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
        assert_eq!(non_mds.mds_support_count_check().unwrap_err(), Error::NotMds);
    }

    #[test]
    fn scalar_actions() {
        let z5 = cyc(5);
        let act = ScalarAction::prime_field(&z5).unwrap();
        let c = code(5, 3, &[&[1, 2, 3]]);
        assert!(c.is_linear_under(&act));
        assert!(c.is_prime_field_linear());

        // F_4 on Z_2 x Z_2, element index 2a+b for a + bω
        let klein = make_group(&[2, 2]).unwrap();
        let omega = vec![0, 3, 1, 2];
        let omega2 = vec![0, 2, 3, 1];
        let f4 = ScalarAction::new(&klein, vec![vec![0, 1, 2, 3], omega, omega2]).unwrap();
        let additive_only = AdditiveCode::from_generator_digits(
            &klein,
            2,
            Side::Group,
            &[vec![2, 2]],
            EnumerationBound::default(),
        )
        .unwrap();
        assert!(!additive_only.is_linear_under(&f4));
        let line = AdditiveCode::from_generator_digits(
            &klein,
            2,
            Side::Group,
            &[vec![2, 2], vec![1, 1]],
            EnumerationBound::default(),
        )
        .unwrap();
        assert!(line.is_linear_under(&f4));

        let bad = ScalarAction::new(&klein, vec![vec![0, 1, 2, 3]; 3]);
        assert!(matches!(bad, Err(Error::InvalidScalarAction(_))));
        assert!(ScalarAction::prime_field(&cyc(4)).is_err());
    }

    fn arb_code() -> impl Strategy<Value = AdditiveCode> {
        (prop::sample::select(vec![2u64, 3, 4, 5, 6]), 1usize..5)
            .prop_flat_map(|(m, n)| {
                let word = prop::collection::vec(0usize..m as usize, n);
                (Just(m), Just(n), prop::collection::vec(word, 0..3))
            })
            .prop_map(|(m, n, gens)| {
                AdditiveCode::from_generator_digits(
                    &cyc(m),
                    n,
                    Side::Group,
                    &gens,
                    EnumerationBound::default(),
                )
                .unwrap()
            })
    }

    proptest! {
        #[test]
        fn closure_is_subgroup(c in arb_code()) {
            let g = c.group().clone();
            let space = c.space();
            let set: HashSet<u64> = c.word_indices().iter().copied().collect();
            prop_assert!(set.contains(&0));
            for &a in c.word_indices() {
                for &b in c.word_indices() {
                    prop_assert!(set.contains(&add_packed(&g, space, a, b)));
                }
                let neg: Vec<usize> = space.digits(a).into_iter().map(|x| g.neg_idx(x)).collect();
                prop_assert!(set.contains(&space.pack(&neg)));
            }
            prop_assert_eq!(space.size() % c.size() as u128, 0);
        }

        #[test]
        fn dual_sizes_and_double_dual(c in arb_code()) {
            let d = c.dual().unwrap();
            prop_assert_eq!(c.size() as u128 * d.size() as u128, c.space().size());
            let dd = d.dual().unwrap();
            prop_assert_eq!(dd.side(), Side::Group);
            prop_assert_eq!(dd.word_indices(), c.word_indices());
        }

        #[test]
        fn genus_nonnegative(c in arb_code()) {
            prop_assume!(!c.is_zero_code());
            let gd = c.genus().unwrap();
            prop_assert!(gd.q_pow_g >= Rational::one());
            if let Some(g) = gd.integer_genus {
                let lhs = int(big_pow(gd.q, g as u32)) * int(gd.size.clone());
                prop_assert_eq!(lhs, int(big_pow(gd.q, (gd.n + 1 - gd.d) as u32)));
            }
        }

        #[test]
        fn commutation_everywhere(c in arb_code()) {
            prop_assume!(c.length() >= 2);
            for i in 1..=c.length() {
                prop_assert_eq!(c.duality_commutation_check(i).unwrap(), (true, true));
            }
        }
    }
}
