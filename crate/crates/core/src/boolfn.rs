// SPDX-License-Identifier: Apache-2.0

//! Truth tables, algebraic normal forms and the binary Möbius transform
//! between them.
//!
//! Index convention: bit `j` of a table index holds the value of variable
//! `x_{j+1}`, so `x_1` is the least significant bit. A monomial bitmask and
//! the table index of its indicator point coincide.

use std::fmt;

use crate::error::{Error, Result};
use crate::rotsym::Monomial;

/// Largest variable count for truth tables and expanded ANFs.
pub const MAX_VARS: usize = 30;

fn check_vars(n: usize) -> Result<()> {
    if n == 0 || n > MAX_VARS {
        return Err(Error::VariableCount { n, max: MAX_VARS });
    }
    Ok(())
}

/// Values of `f` on all `2^n` inputs, packed 64 per word.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruthTable {
    n: usize,
    words: Vec<u64>,
}

const WORD_MASKS: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0F0F_0F0F_0F0F_0F0F,
    0x00FF_00FF_00FF_00FF,
    0x0000_FFFF_0000_FFFF,
    0x0000_0000_FFFF_FFFF,
];

#[inline]
pub(crate) fn word_count(n: usize) -> usize {
    if n <= 6 {
        1
    } else {
        1 << (n - 6)
    }
}

#[inline]
fn tail_mask(n: usize) -> u64 {
    if n >= 6 {
        u64::MAX
    } else {
        (1u64 << (1 << n)) - 1
    }
}

impl TruthTable {
    /// The constant-zero function.
    pub fn zero(n: usize) -> Result<Self> {
        check_vars(n)?;
        Ok(Self {
            n,
            words: vec![0; word_count(n)],
        })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize) -> bool) -> Result<Self> {
        let mut tt = Self::zero(n)?;
        for x in 0..1usize << n {
            if f(x) {
                tt.set(x, true);
            }
        }
        Ok(tt)
    }

    /// Builds a table from packed words; bits past `2^n` must be clear.
    pub fn from_words(n: usize, words: Vec<u64>) -> Result<Self> {
        check_vars(n)?;
        if words.len() != word_count(n) {
            return Err(Error::Precondition(format!(
                "{} words given, {} needed for n = {n}",
                words.len(),
                word_count(n)
            )));
        }
        if words[0] & !tail_mask(n) != 0 {
            return Err(Error::Precondition("bits set beyond 2^n".into()));
        }
        Ok(Self { n, words })
    }

    /// Parses a 0/1 string of length `2^n`, index 0 leftmost.
    pub fn from_bitstring(s: &str) -> Result<Self> {
        let s = s.trim();
        let len = s.len();
        if !len.is_power_of_two() || len < 2 {
            return Err(Error::Precondition(format!(
                "truth table length {len} is not 2^n with n ≥ 1"
            )));
        }
        let n = len.trailing_zeros() as usize;
        let mut tt = Self::zero(n)?;
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => tt.set(i, true),
                _ => {
                    return Err(Error::Parse {
                        text: s.to_string(),
                        reason: format!("unexpected character {c:?}"),
                    })
                }
            }
        }
        Ok(tt)
    }

    /// XORs another table of the same size into this one.
    pub(crate) fn xor_assign_words(&mut self, other: &[u64]) {
        for (a, b) in self.words.iter_mut().zip(other) {
            *a ^= *b;
        }
    }

    pub fn from_anf(anf: &AnfForm) -> Self {
        let mut words = vec![0u64; word_count(anf.n)];
        for u in &anf.monomials {
            let i = u.bits() as usize;
            words[i >> 6] ^= 1 << (i & 63);
        }
        mobius_in_place(anf.n, &mut words);
        Self { n: anf.n, words }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of entries, `2^n`.
    #[inline]
    pub fn len(&self) -> usize {
        1 << self.n
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, x: usize) -> bool {
        self.words[x >> 6] >> (x & 63) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, x: usize, value: bool) {
        let bit = 1u64 << (x & 63);
        if value {
            self.words[x >> 6] |= bit;
        } else {
            self.words[x >> 6] &= !bit;
        }
    }

    /// Hamming weight of the table.
    pub fn weight(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn bitstring(&self) -> String {
        (0..self.len())
            .map(|x| if self.get(x) { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Debug for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n <= 6 {
            write!(f, "TruthTable(n={}, {})", self.n, self.bitstring())
        } else {
            write!(f, "TruthTable(n={}, weight={})", self.n, self.weight())
        }
    }
}

/// Binary Möbius transform over `F_2` on a packed table. It is its own
/// inverse.
pub(crate) fn mobius_in_place(n: usize, words: &mut [u64]) {
    for (k, &mask) in WORD_MASKS.iter().enumerate().take(n.min(6)) {
        let shift = 1 << k;
        for w in words.iter_mut() {
            *w ^= (*w & mask) << shift;
        }
    }
    for k in 6..n {
        let stride = 1 << (k - 6);
        for block in words.chunks_mut(2 * stride) {
            let (lo, hi) = block.split_at_mut(stride);
            for (h, l) in hi.iter_mut().zip(lo.iter()) {
                *h ^= *l;
            }
        }
    }
}

/// Algebraic degree; the zero function is kept apart from every integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Degree {
    ZeroFunction,
    Exactly(u32),
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::ZeroFunction => f.write_str("zero function"),
            Degree::Exactly(d) => write!(f, "{d}"),
        }
    }
}

/// A set of monomials `U_f` with `f = Σ_{u ∈ U_f} x^u` over `F_2`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AnfForm {
    n: usize,
    monomials: Vec<Monomial>,
}

impl AnfForm {
    /// Collects the monomials; a term listed twice cancels over `F_2`.
    pub fn new(n: usize, monomials: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        check_vars(n)?;
        let mut v: Vec<Monomial> = Vec::new();
        for u in monomials {
            if u.n() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: u.n(),
                });
            }
            v.push(u);
        }
        v.sort();
        let mut out: Vec<Monomial> = Vec::with_capacity(v.len());
        let mut i = 0;
        while i < v.len() {
            let mut j = i;
            while j < v.len() && v[j] == v[i] {
                j += 1;
            }
            if (j - i) % 2 == 1 {
                out.push(v[i]);
            }
            i = j;
        }
        Ok(Self { n, monomials: out })
    }

    pub fn from_truth_table(tt: &TruthTable) -> Self {
        let mut words = tt.words.clone();
        mobius_in_place(tt.n, &mut words);
        let mut monomials = Vec::new();
        for (wi, &w) in words.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                let b = w.trailing_zeros() as usize;
                monomials.push(Monomial::from_raw(tt.n, ((wi << 6) | b) as u64));
                w &= w - 1;
            }
        }
        monomials.sort();
        Self {
            n: tt.n,
            monomials,
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Monomials in [`Monomial`] order.
    #[inline]
    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn contains(&self, u: &Monomial) -> bool {
        self.monomials.binary_search(u).is_ok()
    }

    pub fn degree(&self) -> Degree {
        self.monomials
            .iter()
            .map(|u| u.weight())
            .max()
            .map_or(Degree::ZeroFunction, Degree::Exactly)
    }

    /// Evaluates `f` at the input with table index `x`.
    pub fn eval(&self, x: u64) -> bool {
        self.monomials
            .iter()
            .fold(false, |acc, u| acc ^ (u.bits() & !x == 0))
    }
}

impl fmt::Display for AnfForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomials.is_empty() {
            return f.write_str("0");
        }
        for (i, u) in self.monomials.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            f.write_str(&u.term())?;
        }
        Ok(())
    }
}

impl fmt::Debug for AnfForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AnfForm(n={}, {})", self.n, self)
    }
}

pub fn anf_from_truth_table(tt: &TruthTable) -> AnfForm {
    AnfForm::from_truth_table(tt)
}

pub fn truth_table_from_anf(anf: &AnfForm) -> TruthTable {
    TruthTable::from_anf(anf)
}

pub fn algebraic_degree(anf: &AnfForm) -> Degree {
    anf.degree()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rotsym::Sanf;

    fn m(s: &str) -> Monomial {
        Monomial::from_bitstring(s).unwrap()
    }

    #[test]
    fn zero_table_has_empty_anf() {
        let tt = TruthTable::zero(2).unwrap();
        assert!(anf_from_truth_table(&tt).is_empty());
        assert_eq!(algebraic_degree(&anf_from_truth_table(&tt)), Degree::ZeroFunction);
    }

    #[test]
    fn product_of_two_variables() {
        let tt = TruthTable::from_bitstring("0001").unwrap();
        let anf = anf_from_truth_table(&tt);
        assert_eq!(anf.monomials(), &[m("11")]);
    }

    #[test]
    fn empty_anf_gives_zero_table() {
        let anf = AnfForm::new(3, vec![]).unwrap();
        let tt = truth_table_from_anf(&anf);
        assert_eq!(tt.len(), 8);
        assert_eq!(tt.weight(), 0);
    }

    #[test]
    fn top_monomial_is_single_point() {
        let anf = AnfForm::new(3, vec![m("111")]).unwrap();
        assert_eq!(truth_table_from_anf(&anf).bitstring(), "00000001");
    }

    #[test]
    fn rotation_orbit_of_adjacent_pairs() {
        // x1x2 + x2x3 + x3x4 + x4x1: 1 where the number of cyclically
        // adjacent one-pairs is odd
        let tt = Sanf::parse(4, "x1x2").unwrap().truth_table().unwrap();
        for x in 0..16usize {
            let pairs = (0..4).filter(|&j| x >> j & 1 == 1 && x >> ((j + 1) % 4) & 1 == 1).count();
            assert_eq!(tt.get(x), pairs % 2 == 1, "x = {x:04b}");
        }
    }

    #[test]
    fn degree_examples() {
        let anf = AnfForm::new(4, vec![m("1110"), m("1001")]).unwrap();
        assert_eq!(algebraic_degree(&anf), Degree::Exactly(3));
        let anf = AnfForm::new(4, vec![m("1000")]).unwrap();
        assert_eq!(algebraic_degree(&anf), Degree::Exactly(1));
        let anf = Sanf::parse(7, "x1x2x4").unwrap().to_anf().unwrap();
        assert_eq!(algebraic_degree(&anf), Degree::Exactly(3));
        assert_eq!(anf.len(), 7);
    }

    #[test]
    fn repeated_terms_cancel() {
        let anf = AnfForm::new(3, vec![m("110"), m("110"), m("001")]).unwrap();
        assert_eq!(anf.monomials(), &[m("001")]);
    }

    #[test]
    fn variable_cap() {
        assert!(TruthTable::zero(0).is_err());
        assert!(TruthTable::zero(31).is_err());
        assert!(AnfForm::new(31, vec![]).is_err());
    }

    #[test]
    fn mobius_crosses_word_boundaries() {
        // x7 alone on n = 8: table is 1 exactly where bit 6 of the index is set
        let anf = AnfForm::new(8, vec![Monomial::from_positions(8, &[7]).unwrap()]).unwrap();
        let tt = truth_table_from_anf(&anf);
        for x in 0..256 {
            assert_eq!(tt.get(x), x >> 6 & 1 == 1);
        }
        assert_eq!(anf_from_truth_table(&tt), anf);
    }

    #[test]
    fn exhaustive_roundtrip_small_n() {
        for n in 1..=4usize {
            for code in 0..1u64 << (1 << n) {
                let tt = TruthTable::from_fn(n, |x| code >> x & 1 == 1).unwrap();
                let anf = anf_from_truth_table(&tt);
                assert_eq!(truth_table_from_anf(&anf), tt);
                for x in 0..1u64 << n {
                    assert_eq!(anf.eval(x), tt.get(x as usize));
                }
            }
        }
    }

    #[test]
    fn single_monomial_weight() {
        for n in 1..=8usize {
            for bits in 0..1u64 << n {
                let u = Monomial::new(n, bits).unwrap();
                let tt = truth_table_from_anf(&AnfForm::new(n, vec![u]).unwrap());
                assert_eq!(tt.weight(), 1 << (n - u.weight() as usize));
            }
        }
    }
}
