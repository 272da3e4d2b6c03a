// SPDX-License-Identifier: Apache-2.0

//! Walsh–Hadamard (Fourier) spectra `f̂(c) = Σ_x (-1)^{f(x) + c·x}` and the
//! bent test `|f̂(c)| = 2^{n/2}` for every `c`.

use crate::boolfn::TruthTable;

/// All Fourier coefficients of a function, indexed by `c` under the
/// truth-table index convention.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalshSpectrum {
    n: usize,
    values: Vec<i32>,
}

impl WalshSpectrum {
    pub fn new(n: usize, values: Vec<i32>) -> Self {
        assert_eq!(values.len(), 1 << n, "spectrum length must be 2^n");
        Self { n, values }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn values(&self) -> &[i32] {
        &self.values
    }

    #[inline]
    pub fn get(&self, c: usize) -> i32 {
        self.values[c]
    }

    /// `Σ_c f̂(c)²`, which equals `2^{2n}` for every Boolean function.
    pub fn parseval_sum(&self) -> i64 {
        self.values.iter().map(|&v| (v as i64) * (v as i64)).sum()
    }

    /// True iff `n` is even and every `|f̂(c)| = 2^{n/2}`.
    pub fn is_flat(&self) -> bool {
        if self.n % 2 == 1 {
            return false;
        }
        let target = 1i32 << (self.n / 2);
        self.values.iter().all(|v| v.abs() == target)
    }
}

/// Fills `out` with `(-1)^{f(x)}`.
fn signs_into(tt: &TruthTable, out: &mut Vec<i32>) {
    out.clear();
    out.reserve(tt.len());
    for &w in tt.words() {
        let bits = tt.len().min(64);
        for j in 0..bits {
            out.push(1 - 2 * ((w >> j) & 1) as i32);
        }
    }
}

/// In-place unnormalized Walsh–Hadamard butterfly.
pub(crate) fn fwht_in_place(values: &mut [i32]) {
    let len = values.len();
    let mut h = 1;
    while h < len {
        for block in values.chunks_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        }
        h <<= 1;
    }
}

pub fn walsh_spectrum(tt: &TruthTable) -> WalshSpectrum {
    let mut values = Vec::new();
    signs_into(tt, &mut values);
    fwht_in_place(&mut values);
    WalshSpectrum { n: tt.n(), values }
}

pub fn is_bent(tt: &TruthTable) -> bool {
    if tt.n() % 2 == 1 {
        return false;
    }
    walsh_spectrum(tt).is_flat()
}

/// Same verdict as [`is_bent`], with cheap rejections first.
pub fn is_bent_early_abort(tt: &TruthTable) -> bool {
    let mut scratch = Vec::new();
    bent_early_abort_with(tt, &mut scratch)
}

/// [`is_bent_early_abort`] reusing a caller-owned scratch buffer.
pub(crate) fn bent_early_abort_with(tt: &TruthTable, scratch: &mut Vec<i32>) -> bool {
    let n = tt.n();
    if n % 2 == 1 {
        return false;
    }
    // f̂(0) = 2^n - 2·wt(f) must be ±2^{n/2}
    let half = 1u64 << (n - 1);
    let quarter = 1u64 << (n / 2 - 1);
    let w = tt.weight();
    if w != half - quarter && w != half + quarter {
        return false;
    }
    signs_into(tt, scratch);
    fwht_in_place(scratch);
    let target = 1i32 << (n / 2);
    scratch.iter().all(|v| v.abs() == target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rotsym::Sanf;

    #[test]
    fn zero_function_spectrum() {
        let tt = TruthTable::zero(2).unwrap();
        assert_eq!(walsh_spectrum(&tt).values(), &[4, 0, 0, 0]);
    }

    #[test]
    fn product_spectrum() {
        let tt = TruthTable::from_bitstring("0001").unwrap();
        assert_eq!(walsh_spectrum(&tt).values(), &[2, 2, 2, -2]);
        assert!(is_bent(&tt));
        assert!(is_bent_early_abort(&tt));
    }

    #[test]
    fn x1x3_orbit_on_four_variables_is_flat() {
        let tt = Sanf::parse(4, "x1x3").unwrap().truth_table().unwrap();
        assert!(walsh_spectrum(&tt).values().iter().all(|v| v.abs() == 4));
    }

    #[test]
    fn known_verdicts() {
        let tt = Sanf::parse(6, "x1x2x3+x1x2x4").unwrap().truth_table().unwrap();
        assert!(!is_bent(&tt));
        let tt = Sanf::parse(8, "x1x5").unwrap().truth_table().unwrap();
        assert!(is_bent(&tt));
        let tt = Sanf::parse(7, "x1x2x3").unwrap().truth_table().unwrap();
        assert!(!is_bent(&tt));
        assert!(!is_bent_early_abort(&TruthTable::zero(4).unwrap()));
    }

    #[test]
    fn first_coefficient_tracks_weight() {
        let tt = Sanf::parse(9, "x1x2x4 + x1x5").unwrap().truth_table().unwrap();
        let s = walsh_spectrum(&tt);
        assert_eq!(s.get(0) as i64, (1i64 << 9) - 2 * tt.weight() as i64);
        assert_eq!(s.parseval_sum(), 1i64 << 18);
    }

    #[test]
    fn early_abort_agrees_on_all_four_variable_functions() {
        let mut bent = 0;
        for code in 0..1u64 << 16 {
            let tt = TruthTable::from_words(4, vec![code]).unwrap();
            let full = is_bent(&tt);
            assert_eq!(full, is_bent_early_abort(&tt), "table {code:04x}");
            bent += full as u32;
        }
        // the bent functions on four variables
        assert_eq!(bent, 896);
    }
}
