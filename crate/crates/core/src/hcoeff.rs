// SPDX-License-Identifier: Apache-2.0

//! The coefficients `h_f(u)` of `(-1)^{f(x)} = Σ_u h_f(u) x^u` and the
//! 2-adic valuation test for bentness.
//!
//! For `f = x^{u_1} + ⋯ + x^{u_m}`,
//!
//! ```text
//! h_f(u) = Σ_{t_1 u_1 ⊕ ⋯ ⊕ t_m u_m = u} (-2)^{t_1 + ⋯ + t_m}
//! ```
//!
//! where `⊕` is the componentwise OR. Two independent routes compute it:
//! the direct subset sum over the monomial list and the inverse formula
//! `h_f(u) = (-1)^{|u|} 2^{|u|-n} Σ_{c ≻ u} f̂(c)` over the Walsh spectrum.
//! They must agree exactly.
//!
//! `f` is bent (`n` even) iff `v_2(h_f(1)) = n/2` and
//! `v_2(h_f(u)) > |u| - n/2` for all `u ≠ 1`, with `v_2(0) = ∞`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::boolfn::{AnfForm, TruthTable};
use crate::error::{Error, Result};
use crate::rotsym::Monomial;
use crate::walsh::{walsh_spectrum, WalshSpectrum};

/// Most monomials the direct subset walk will take on (`2^24` subsets).
pub const DIRECT_CAPACITY: usize = 24;

/// 2-adic valuation; `Infinite` is the valuation of zero and exceeds every
/// finite value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Valuation {
    Finite(u32),
    Infinite,
}

impl Valuation {
    pub fn of(value: i64) -> Self {
        if value == 0 {
            Valuation::Infinite
        } else {
            Valuation::Finite(value.trailing_zeros())
        }
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }

    /// `v > bound` for a possibly negative integer bound.
    pub fn exceeds(self, bound: i64) -> bool {
        match self {
            Valuation::Infinite => true,
            Valuation::Finite(v) => (v as i64) > bound,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

/// `h_f(u)` with its 2-adic valuation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HValue {
    pub value: i64,
    pub valuation: Valuation,
}

impl HValue {
    pub fn new(value: i64) -> Self {
        Self {
            value,
            valuation: Valuation::of(value),
        }
    }
}

impl fmt::Display for HValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "value={} v2={}", self.value, self.valuation)
    }
}

/// Which way to obtain `h_f`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HRoute {
    /// Subset sums over the monomial list.
    Direct,
    /// Inverse formula over the Walsh spectrum.
    Spectral,
    /// Direct when the monomial count is within [`DIRECT_CAPACITY`],
    /// spectral otherwise.
    Auto,
}

fn check_same_n(monomials: &[Monomial], n: usize) -> Result<()> {
    match monomials.iter().find(|m| m.n() != n) {
        Some(m) => Err(Error::LengthMismatch {
            expected: n,
            got: m.n(),
        }),
        None => Ok(()),
    }
}

/// Direct subset sum for one `u`. `monomials` is the full expanded ANF.
/// Only monomials dividing `x^u` can appear in a subset whose OR is `u`, and
/// the capacity limit applies to those.
pub fn h_direct(monomials: &[Monomial], u: &Monomial) -> Result<HValue> {
    check_same_n(monomials, u.n())?;
    let relevant: Vec<u64> = monomials
        .iter()
        .filter(|m| u.covers(m))
        .map(|m| m.bits())
        .collect();
    if relevant.len() > DIRECT_CAPACITY {
        return Err(Error::Capacity {
            needed: relevant.len(),
            cap: DIRECT_CAPACITY,
        });
    }
    let target = u.bits();
    let mut total = 0i64;
    subset_walk(&relevant, &mut |or, k| {
        if or == target {
            total += neg_two_pow(k);
        }
    });
    Ok(HValue::new(total))
}

#[inline]
fn neg_two_pow(k: u32) -> i64 {
    if k % 2 == 0 {
        1i64 << k
    } else {
        -(1i64 << k)
    }
}

/// Visits every subset of `items` with its OR and size.
fn subset_walk(items: &[u64], visit: &mut impl FnMut(u64, u32)) {
    fn go(items: &[u64], or: u64, k: u32, visit: &mut impl FnMut(u64, u32)) {
        match items.split_first() {
            None => visit(or, k),
            Some((&first, rest)) => {
                go(rest, or, k, visit);
                go(rest, or | first, k + 1, visit);
            }
        }
    }
    go(items, 0, 0, visit)
}

/// `h_f(u)` for every `u ∈ F_2^n` by one walk over all subsets of the
/// monomial list.
pub fn h_direct_all(monomials: &[Monomial], n: usize) -> Result<Vec<i64>> {
    if n == 0 || n > crate::boolfn::MAX_VARS {
        return Err(Error::VariableCount {
            n,
            max: crate::boolfn::MAX_VARS,
        });
    }
    check_same_n(monomials, n)?;
    if monomials.len() > DIRECT_CAPACITY {
        return Err(Error::Capacity {
            needed: monomials.len(),
            cap: DIRECT_CAPACITY,
        });
    }
    let bits: Vec<u64> = monomials.iter().map(|m| m.bits()).collect();
    let mut h = vec![0i64; 1 << n];
    subset_walk(&bits, &mut |or, k| h[or as usize] += neg_two_pow(k));
    Ok(h)
}

fn scale_superset_sum(n: usize, u: u64, sum: i64) -> Result<i64> {
    let w = u.count_ones() as usize;
    let shift = n - w;
    let divisor = 1i64 << shift;
    if sum % divisor != 0 {
        return Err(Error::Inconsistent(format!(
            "superset sum {sum} at u = {u:#b} not divisible by 2^{shift}"
        )));
    }
    let q = sum >> shift;
    Ok(if w % 2 == 0 { q } else { -q })
}

/// Inverse formula `h_f(u) = (-1)^{|u|} 2^{|u|-n} Σ_{c ≻ u} f̂(c)`.
pub fn h_from_spectrum(spectrum: &WalshSpectrum, u: &Monomial) -> Result<HValue> {
    let n = spectrum.n();
    if u.n() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: u.n(),
        });
    }
    let base = u.bits();
    let free = !base & ((1u64 << n) - 1);
    // walk the submasks of the free positions
    let mut sum = 0i64;
    let mut s = free;
    loop {
        sum += spectrum.get((base | s) as usize) as i64;
        if s == 0 {
            break;
        }
        s = (s - 1) & free;
    }
    Ok(HValue::new(scale_superset_sum(n, base, sum)?))
}

/// `h_f(u)` for every `u` from the spectrum, by a superset-sum transform.
pub fn h_all_from_spectrum(spectrum: &WalshSpectrum) -> Result<Vec<i64>> {
    let n = spectrum.n();
    let mut acc: Vec<i64> = spectrum.values().iter().map(|&v| v as i64).collect();
    superset_sums(&mut acc);
    acc.iter()
        .enumerate()
        .map(|(u, &sum)| scale_superset_sum(n, u as u64, sum))
        .collect()
}

/// `a[u] ← Σ_{c ⊇ u} a[c]`.
fn superset_sums(a: &mut [i64]) {
    let len = a.len();
    let mut h = 1;
    while h < len {
        for block in a.chunks_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (l, hv) in lo.iter_mut().zip(hi.iter()) {
                *l += *hv;
            }
        }
        h <<= 1;
    }
}

/// Forward formula `f̂(c) = (-1)^{|c|} Σ_{u ≻ c} 2^{n-|u|} h_f(u)` with
/// `h_f` from the direct route.
pub fn spectrum_from_h(monomials: &[Monomial], n: usize) -> Result<WalshSpectrum> {
    let h = h_direct_all(monomials, n)?;
    let mut acc: Vec<i64> = h
        .iter()
        .enumerate()
        .map(|(u, &v)| v << (n - (u as u64).count_ones() as usize))
        .collect();
    superset_sums(&mut acc);
    let values = acc
        .iter()
        .enumerate()
        .map(|(c, &v)| {
            let v = if (c as u64).count_ones() % 2 == 0 { v } else { -v };
            i32::try_from(v).map_err(|_| {
                Error::Inconsistent(format!("spectrum value {v} at c = {c} out of range"))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(WalshSpectrum::new(n, values))
}

/// Whether `h_f(u)` meets the valuation condition at `u`: equality with
/// `n/2` at the all-ones vector, strictly above `|u| - n/2` elsewhere.
pub fn valuation_condition_holds(n: usize, u: u64, valuation: Valuation) -> bool {
    let all = if n >= 64 { u64::MAX } else { (1u64 << n) - 1 };
    if u == all {
        valuation == Valuation::Finite((n / 2) as u32)
    } else {
        valuation.exceeds(u.count_ones() as i64 - (n / 2) as i64)
    }
}

/// Bentness by the valuation criterion over every `u ∈ F_2^n`.
pub fn bent_by_valuation(anf: &AnfForm, route: HRoute) -> Result<bool> {
    let n = anf.n();
    if n % 2 == 1 {
        return Err(Error::OddVariableCount(n));
    }
    let h = h_table(anf, route)?;
    Ok(h
        .iter()
        .enumerate()
        .all(|(u, &v)| valuation_condition_holds(n, u as u64, Valuation::of(v))))
}

/// The full `h_f` table by the chosen route.
pub fn h_table(anf: &AnfForm, route: HRoute) -> Result<Vec<i64>> {
    let route = match route {
        HRoute::Auto if anf.len() <= DIRECT_CAPACITY => HRoute::Direct,
        HRoute::Auto => HRoute::Spectral,
        r => r,
    };
    match route {
        HRoute::Direct => h_direct_all(anf.monomials(), anf.n()),
        _ => h_all_from_spectrum(&walsh_spectrum(&TruthTable::from_anf(anf))),
    }
}
