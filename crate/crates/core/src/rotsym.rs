// SPDX-License-Identifier: Apache-2.0

//! Rotation action on exponent vectors, orbit representatives and the short
//! algebraic normal form (SANF) of rotation-symmetric functions.
//!
//! A [`Monomial`] of length `n` is stored as a bitmask where bit `j` holds
//! `u_{j+1}`, the same convention truth-table indices use: position 1 is the
//! least significant bit.
//!
//! Rotation follows `ρ^l(x_1, …, x_n) = (x_{n-l+1}, …, x_n, x_1, …, x_{n-l})`,
//! so the entry at position `i` moves to position `i + l (mod n)`. Orbits
//! under `ρ` and `ρ⁻¹` coincide, so nothing downstream depends on the
//! direction.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::boolfn::{AnfForm, TruthTable};
use crate::error::{Error, Result};

/// Largest variable count a [`Monomial`] can carry.
pub const MAX_MONOMIAL_VARS: usize = 64;

/// Exponent vector `u ∈ F_2^n` of the product term `x^u`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    n: u8,
    bits: u64,
}

#[inline]
fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Monomial {
    pub fn new(n: usize, bits: u64) -> Result<Self> {
        if n == 0 || n > MAX_MONOMIAL_VARS {
            return Err(Error::VariableCount {
                n,
                max: MAX_MONOMIAL_VARS,
            });
        }
        if bits & !low_mask(n) != 0 {
            return Err(Error::Precondition(format!(
                "bitmask {bits:#x} has bits beyond position {n}"
            )));
        }
        Ok(Self { n: n as u8, bits })
    }

    pub(crate) fn from_raw(n: usize, bits: u64) -> Self {
        debug_assert!((1..=MAX_MONOMIAL_VARS).contains(&n) && bits & !low_mask(n) == 0);
        Self { n: n as u8, bits }
    }

    /// Builds `x_{i_1} x_{i_2} ⋯` from 1-based variable positions.
    pub fn from_positions(n: usize, positions: &[usize]) -> Result<Self> {
        let mut bits = 0u64;
        for &p in positions {
            if p == 0 || p > n {
                return Err(Error::Precondition(format!(
                    "variable index {p} outside 1..={n}"
                )));
            }
            bits |= 1u64 << (p - 1);
        }
        Self::new(n, bits)
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::new(n, 0)
    }

    /// The all-ones vector `(1, …, 1)`.
    pub fn ones(n: usize) -> Result<Self> {
        Self::new(n, low_mask(n))
    }

    /// Parses a 0/1 string, position 1 leftmost.
    pub fn from_bitstring(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut bits = 0u64;
        for (j, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' if j < 64 => bits |= 1u64 << j,
                '1' => {}
                _ => {
                    return Err(Error::Parse {
                        text: s.to_string(),
                        reason: format!("unexpected character {c:?} in bitstring"),
                    })
                }
            }
        }
        Self::new(s.chars().count(), bits)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Hamming weight `|u|`.
    #[inline]
    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn is_all_ones(&self) -> bool {
        self.bits == low_mask(self.n())
    }

    /// `u_p` for a 1-based position `p`.
    #[inline]
    pub fn get(&self, p: usize) -> bool {
        debug_assert!(p >= 1 && p <= self.n());
        self.bits >> (p - 1) & 1 == 1
    }

    /// 1-based positions of the ones, ascending.
    pub fn positions(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.weight() as usize);
        let mut b = self.bits;
        while b != 0 {
            out.push(b.trailing_zeros() as usize + 1);
            b &= b - 1;
        }
        out
    }

    /// Largest position carrying a one (`D_i`), or 0 for the zero vector.
    pub fn last_position(&self) -> usize {
        64 - self.bits.leading_zeros() as usize
    }

    /// `u ≻ v` in the componentwise order: every one of `v` is a one of `u`.
    #[inline]
    pub fn covers(&self, v: &Monomial) -> bool {
        v.bits & !self.bits == 0
    }

    pub fn bitstring(&self) -> String {
        (0..self.n())
            .map(|j| if self.bits >> j & 1 == 1 { '1' } else { '0' })
            .collect()
    }

    /// `ρ^l(u)`; `l` is taken mod `n`.
    pub fn rotate(&self, l: usize) -> Monomial {
        let n = self.n();
        let l = l % n;
        if l == 0 {
            return *self;
        }
        let b = self.bits;
        let bits = ((b << l) | (b >> (n - l))) & low_mask(n);
        Monomial { n: self.n, bits }
    }

    /// Least `l ≥ 1` with `ρ^l(u) = u`; always divides `n`.
    pub fn cycle_length(&self) -> usize {
        let n = self.n();
        (1..=n)
            .find(|&l| n % l == 0 && self.rotate(l) == *self)
            .unwrap_or(n)
    }

    /// The componentwise OR (`x ⊕ y = 0` iff `x = y = 0`).
    pub fn or(&self, other: &Monomial) -> Result<Monomial> {
        if self.n != other.n {
            return Err(Error::LengthMismatch {
                expected: self.n(),
                got: other.n(),
            });
        }
        Ok(Monomial {
            n: self.n,
            bits: self.bits | other.bits,
        })
    }

    /// The canonical representative of the rotation orbit of `u`: among
    /// rotations with a one in position 1, the one whose ascending list of
    /// positions is lexicographically least. For `x_1 x_e` this always picks
    /// `e ≤ n/2 + 1`.
    pub fn canonical_rep(&self) -> Result<Monomial> {
        if self.is_zero() {
            return Err(Error::ZeroMonomial);
        }
        let mut best: Option<Monomial> = None;
        for l in 0..self.n() {
            let r = self.rotate(l);
            if r.bits & 1 == 1 && best.is_none_or(|b| r < b) {
                best = Some(r);
            }
        }
        Ok(best.expect("nonzero vector has a rotation with bit 1 set"))
    }

    /// All distinct rotations, in order `ρ^0, ρ^1, …, ρ^{l_u - 1}`.
    pub fn orbit(&self) -> Vec<Monomial> {
        (0..self.cycle_length()).map(|l| self.rotate(l)).collect()
    }

    /// Number of maximal runs of ones when the vector is read cyclically.
    pub fn cyclic_runs(&self) -> usize {
        if self.is_zero() {
            return 0;
        }
        if self.is_all_ones() {
            return 1;
        }
        // a run starts wherever a one follows a zero, cyclically
        let prev = self.rotate(1).bits;
        (self.bits & !prev).count_ones() as usize
    }

    /// Writes the product `x1x2x4`; the empty product prints as `1`.
    pub fn term(&self) -> String {
        if self.is_zero() {
            return "1".to_string();
        }
        self.positions().iter().map(|p| format!("x{p}")).collect()
    }
}

/// Orders monomials of equal length by their ascending position lists,
/// lexicographically, a proper prefix sorting first.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.n.cmp(&other.n) {
            Ordering::Equal => {}
            o => return o,
        }
        let diff = self.bits ^ other.bits;
        if diff == 0 {
            return Ordering::Equal;
        }
        let b = diff.trailing_zeros();
        let self_has = self.bits >> b & 1 == 1;
        // the side lacking position b either continues with a larger position
        // (and sorts after) or has run out (and is a prefix, sorting first)
        let lacking = if self_has { other.bits } else { self.bits };
        let lacking_continues = lacking >> b != 0;
        if self_has == lacking_continues {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial({})", self.bitstring())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.term())
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.bitstring())
    }
}

impl<'de> Deserialize<'de> for Monomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Monomial::from_bitstring(&s).map_err(serde::de::Error::custom)
    }
}

/// `ρ^l(u)`.
pub fn rotate(u: &Monomial, l: usize) -> Monomial {
    u.rotate(l)
}

pub fn cycle_length(u: &Monomial) -> usize {
    u.cycle_length()
}

/// The OR-style `⊕` on `F_2^n`.
pub fn or_combine(u: &Monomial, v: &Monomial) -> Result<Monomial> {
    u.or(v)
}

pub fn canonical_rep(u: &Monomial) -> Result<Monomial> {
    u.canonical_rep()
}

/// One canonical representative per rotation orbit of weight-`weight`
/// vectors of length `n`, sorted in [`Monomial`] order.
pub fn enumerate_orbit_reps(n: usize, weight: usize) -> Result<Vec<Monomial>> {
    if n == 0 || n > MAX_MONOMIAL_VARS {
        return Err(Error::VariableCount {
            n,
            max: MAX_MONOMIAL_VARS,
        });
    }
    if weight == 0 || weight > n {
        return Err(Error::Precondition(format!(
            "orbit weight {weight} outside 1..={n}"
        )));
    }
    let mut reps = Vec::new();
    // position 1 is fixed; walk the (weight-1)-subsets of positions 2..=n
    // in Gosper order
    let k = weight - 1;
    if k == 0 {
        return Ok(vec![Monomial::from_raw(n, 1)]);
    }
    let free = n - 1;
    let limit: u128 = 1u128 << free;
    let mut c: u128 = (1u128 << k) - 1;
    while c < limit {
        let m = Monomial::from_raw(n, ((c as u64) << 1) | 1);
        if m.canonical_rep()? == m {
            reps.push(m);
        }
        let lowest = c & c.wrapping_neg();
        let ripple = c + lowest;
        c = (((ripple ^ c) >> 2) / lowest) | ripple;
    }
    reps.sort();
    Ok(reps)
}

/// Short algebraic normal form: one canonical monomial per rotation orbit.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Sanf {
    n: usize,
    reps: Vec<Monomial>,
    homogeneous_degree: Option<u32>,
}

impl Sanf {
    /// Canonicalizes every monomial; keeps input order. Rejects zero
    /// monomials and repeated orbits.
    pub fn new(n: usize, monomials: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        if n == 0 || n > MAX_MONOMIAL_VARS {
            return Err(Error::VariableCount {
                n,
                max: MAX_MONOMIAL_VARS,
            });
        }
        let mut reps: Vec<Monomial> = Vec::new();
        for u in monomials {
            if u.n() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: u.n(),
                });
            }
            let c = u.canonical_rep()?;
            if reps.contains(&c) {
                return Err(Error::DuplicateOrbit(c.term()));
            }
            reps.push(c);
        }
        let homogeneous_degree = match reps.first() {
            Some(first) if reps.iter().all(|r| r.weight() == first.weight()) => {
                Some(first.weight())
            }
            _ => None,
        };
        Ok(Self {
            n,
            reps,
            homogeneous_degree,
        })
    }

    /// Parses the text form `x1x2x4 + x1x3x5`: monomials are runs of
    /// `x<index>` with 1-based, strictly increasing indices, joined by `+`.
    /// Whitespace is ignored.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let err = |reason: String| Error::Parse {
            text: text.to_string(),
            reason,
        };
        if compact.is_empty() {
            return Err(err("empty SANF".into()));
        }
        let mut monomials = Vec::new();
        for term in compact.split('+') {
            if term.is_empty() {
                return Err(err("empty term".into()));
            }
            let mut positions = Vec::new();
            for (i, piece) in term.split('x').enumerate() {
                if i == 0 {
                    if !piece.is_empty() {
                        return Err(err(format!("term {term:?} must start with 'x'")));
                    }
                    continue;
                }
                let p: usize = piece
                    .parse()
                    .map_err(|_| err(format!("bad variable index {piece:?} in {term:?}")))?;
                if p == 0 || p > n {
                    return Err(err(format!("variable x{p} outside x1..x{n}")));
                }
                if positions.last().is_some_and(|&q| q >= p) {
                    return Err(err(format!("indices in {term:?} must strictly increase")));
                }
                positions.push(p);
            }
            monomials.push(Monomial::from_positions(n, &positions)?);
        }
        Self::new(n, monomials)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn reps(&self) -> &[Monomial] {
        &self.reps
    }

    /// `m`, the number of orbits.
    #[inline]
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    #[inline]
    pub fn homogeneous_degree(&self) -> Option<u32> {
        self.homogeneous_degree
    }

    /// Representatives sorted in [`Monomial`] order, for order-insensitive
    /// comparison.
    pub fn sorted_reps(&self) -> Vec<Monomial> {
        let mut v = self.reps.clone();
        v.sort();
        v
    }

    /// Number of monomials in the expanded ANF: the sum of cycle lengths.
    pub fn expanded_len(&self) -> usize {
        self.reps.iter().map(|r| r.cycle_length()).sum()
    }

    /// Every monomial of the full ANF.
    pub fn expanded_monomials(&self) -> Vec<Monomial> {
        self.reps.iter().flat_map(|r| r.orbit()).collect()
    }

    pub fn to_anf(&self) -> Result<AnfForm> {
        orbit_expand(self)
    }

    pub fn truth_table(&self) -> Result<TruthTable> {
        Ok(TruthTable::from_anf(&self.to_anf()?))
    }
}

impl fmt::Display for Sanf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.reps.is_empty() {
            return f.write_str("0");
        }
        for (i, r) in self.reps.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            f.write_str(&r.term())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Sanf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sanf(n={}, {})", self.n, self)
    }
}

/// Expands a SANF to its full ANF, each orbit contributing its cycle length
/// in distinct monomials.
pub fn orbit_expand(sanf: &Sanf) -> Result<AnfForm> {
    AnfForm::new(sanf.n(), sanf.expanded_monomials())
}

/// True iff `f(x) = f(ρ(x))` for every `x`.
pub fn is_rotation_symmetric(tt: &TruthTable) -> bool {
    let n = tt.n();
    (0..1u64 << n).all(|x| {
        let rx = Monomial::from_raw(n, x).rotate(1).bits();
        tt.get(x as usize) == tt.get(rx as usize)
    })
}
