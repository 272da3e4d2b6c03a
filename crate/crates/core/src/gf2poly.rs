// SPDX-License-Identifier: Apache-2.0

//! Polynomials over `F_2`, circulant matrices and the classification of
//! homogeneous quadratic rotation-symmetric bent functions.
//!
//! A quadratic form `Σ a_ij x_i x_j` is bent iff its symplectic matrix
//! (`a_ii = 0`, `a_ij = a_ji`) is nonsingular. For a rotation-symmetric
//! quadratic `x_1 x_{e_1} + ⋯ + x_1 x_{e_m}` that matrix is circulant, and a
//! circulant over `F_2` is nonsingular iff its first-row polynomial is
//! coprime to `x^n + 1`. The first-row polynomial here is
//! `Σ (x^{e_i - 1} + x^{n + 1 - e_i})`, with the middle term `e_i = n/2 + 1`
//! contributing the single monomial `x^{n/2}`.

use std::fmt;
use std::ops::{Add, Mul};

use crate::boolfn::{AnfForm, Degree};
use crate::error::{Error, Result};
use crate::rotsym::{Monomial, Sanf};

/// Largest `n` accepted by [`classify_degree2`].
pub const MAX_CLASSIFY_VARS: usize = 40;

/// Polynomial over `F_2`; bit `j` of the packed words is the coefficient of
/// `x^j`. Trailing zero words are never stored, so the zero polynomial has
/// no words.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GF2Poly {
    words: Vec<u64>,
}

impl GF2Poly {
    fn normalized(mut words: Vec<u64>) -> Self {
        while words.last() == Some(&0) {
            words.pop();
        }
        Self { words }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::x_pow(0)
    }

    /// `x^k`.
    pub fn x_pow(k: usize) -> Self {
        let mut words = vec![0u64; k / 64 + 1];
        words[k / 64] = 1 << (k % 64);
        Self { words }
    }

    /// Sum of `x^k` over the given exponents; repeats cancel.
    pub fn from_exponents(exponents: impl IntoIterator<Item = usize>) -> Self {
        let mut p = Self::zero();
        for k in exponents {
            p.flip(k);
        }
        p
    }

    /// `x^n + 1`.
    pub fn x_n_plus_one(n: usize) -> Self {
        Self::from_exponents([n, 0])
    }

    pub fn flip(&mut self, k: usize) {
        if self.words.len() <= k / 64 {
            self.words.resize(k / 64 + 1, 0);
        }
        self.words[k / 64] ^= 1 << (k % 64);
        let words = std::mem::take(&mut self.words);
        *self = Self::normalized(words);
    }

    pub fn coeff(&self, k: usize) -> bool {
        self.words.get(k / 64).is_some_and(|w| w >> (k % 64) & 1 == 1)
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words == [1]
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let top = *self.words.last()?;
        Some((self.words.len() - 1) * 64 + 63 - top.leading_zeros() as usize)
    }

    /// Exponents with coefficient 1, descending.
    pub fn exponents(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (wi, &w) in self.words.iter().enumerate().rev() {
            for b in (0..64).rev() {
                if w >> b & 1 == 1 {
                    out.push(wi * 64 + b);
                }
            }
        }
        out
    }

    fn shl(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let (wshift, bshift) = (k / 64, k % 64);
        let mut words = vec![0u64; self.words.len() + wshift + 1];
        for (i, &w) in self.words.iter().enumerate() {
            words[i + wshift] ^= w << bshift;
            if bshift != 0 {
                words[i + wshift + 1] ^= w >> (64 - bshift);
            }
        }
        Self::normalized(words)
    }

    fn xor_assign(&mut self, other: &Self) {
        if self.words.len() < other.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
        let words = std::mem::take(&mut self.words);
        *self = Self::normalized(words);
    }

    /// Quotient and remainder; `None` when dividing by zero.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        let dd = divisor.degree()?;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let shift = rd - dd;
            rem.xor_assign(&divisor.shl(shift));
            quot.flip(shift);
        }
        Some((quot, rem))
    }

    pub fn rem(&self, divisor: &Self) -> Option<Self> {
        self.div_rem(divisor).map(|(_, r)| r)
    }

    /// True iff `self` divides `other`; only zero divides zero.
    pub fn divides(&self, other: &Self) -> bool {
        match other.rem(self) {
            Some(r) => r.is_zero(),
            None => other.is_zero(),
        }
    }
}

impl Add for &GF2Poly {
    type Output = GF2Poly;
    fn add(self, rhs: &GF2Poly) -> GF2Poly {
        let mut out = self.clone();
        out.xor_assign(rhs);
        out
    }
}

impl Mul for &GF2Poly {
    type Output = GF2Poly;
    fn mul(self, rhs: &GF2Poly) -> GF2Poly {
        let mut out = GF2Poly::zero();
        for k in rhs.exponents() {
            out.xor_assign(&self.shl(k));
        }
        out
    }
}

impl fmt::Display for GF2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .exponents()
            .into_iter()
            .map(|k| match k {
                0 => "1".to_string(),
                1 => "x".to_string(),
                k => format!("x^{k}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

impl fmt::Debug for GF2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF2Poly({self})")
    }
}

/// Euclid over `F_2[x]`. Over `F_2` every nonzero polynomial is monic.
pub fn gf2_gcd(a: &GF2Poly, b: &GF2Poly) -> Result<GF2Poly> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::ZeroGcd);
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_zero() {
        let r = a.rem(&b).expect("divisor is nonzero");
        a = b;
        b = r;
    }
    Ok(a)
}

/// First row `a_1` of an `n × n` circulant matrix over `F_2`; row `i` of the
/// matrix is `ρ^i(a_1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CirculantRow {
    n: usize,
    row: Vec<bool>,
}

impl CirculantRow {
    pub fn new(row: Vec<bool>) -> Result<Self> {
        if row.is_empty() {
            return Err(Error::Precondition("empty circulant row".into()));
        }
        Ok(Self { n: row.len(), row })
    }

    /// Row whose entry `j` (0-based) is the coefficient of `x^j`.
    pub fn from_poly(n: usize, poly: &GF2Poly) -> Result<Self> {
        if poly.degree().is_some_and(|d| d >= n) {
            return Err(Error::Precondition(format!(
                "polynomial {poly} does not fit a {n}-column row"
            )));
        }
        Self::new((0..n).map(|j| poly.coeff(j)).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn row(&self) -> &[bool] {
        &self.row
    }

    pub fn to_poly(&self) -> GF2Poly {
        GF2Poly::from_exponents((0..self.n).filter(|&j| self.row[j]))
    }

    /// The full matrix, row `i` being the first row rotated right by `i`.
    pub fn matrix(&self) -> Vec<Vec<bool>> {
        let n = self.n;
        (0..n)
            .map(|i| (0..n).map(|j| self.row[(j + n - i) % n]).collect())
            .collect()
    }
}

/// Rank over `F_2` by Gaussian elimination.
pub fn gf2_rank(rows: &[Vec<bool>]) -> usize {
    let ncols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let nwords = ncols.div_ceil(64).max(1);
    let mut packed: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| {
            let mut w = vec![0u64; nwords];
            for (j, &b) in r.iter().enumerate() {
                if b {
                    w[j / 64] |= 1 << (j % 64);
                }
            }
            w
        })
        .collect();
    let mut rank = 0;
    for col in 0..ncols {
        let (wi, bit) = (col / 64, 1u64 << (col % 64));
        let Some(pivot) = (rank..packed.len()).find(|&r| packed[r][wi] & bit != 0) else {
            continue;
        };
        packed.swap(rank, pivot);
        let pivot_row = packed[rank].clone();
        for (r, row) in packed.iter_mut().enumerate() {
            if r != rank && row[wi] & bit != 0 {
                for (a, b) in row.iter_mut().zip(&pivot_row) {
                    *a ^= *b;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn circulant_nonsingular(row: &CirculantRow) -> bool {
    gf2_rank(&row.matrix()) == row.n()
}

fn check_quadratic_sanf(sanf: &Sanf) -> Result<()> {
    let n = sanf.n();
    if n % 2 == 1 {
        return Err(Error::OddVariableCount(n));
    }
    if sanf.is_empty() || sanf.homogeneous_degree() != Some(2) {
        return Err(Error::WrongDegree {
            expected: "homogeneous 2".into(),
            got: match sanf.homogeneous_degree() {
                Some(d) => d.to_string(),
                None if sanf.is_empty() => "zero function".into(),
                None => "mixed".into(),
            },
        });
    }
    Ok(())
}

/// The second index `e` of each representative `x_1 x_e`.
pub fn degree2_exponents(sanf: &Sanf) -> Result<Vec<usize>> {
    check_quadratic_sanf(sanf)?;
    let n = sanf.n();
    sanf.reps()
        .iter()
        .map(|r| {
            let e = r.last_position();
            if e < 2 || e > n / 2 + 1 {
                return Err(Error::Inconsistent(format!(
                    "representative {r} is not normalized to 2 ≤ e ≤ n/2 + 1"
                )));
            }
            Ok(e)
        })
        .collect()
}

/// `Σ_i (x^{e_i - 1} + x^{n + 1 - e_i})`, the middle term `e_i = n/2 + 1`
/// contributing `x^{n/2}` once.
pub fn rots_quadratic_poly(sanf: &Sanf) -> Result<GF2Poly> {
    let n = sanf.n();
    let mut exps = Vec::new();
    for e in degree2_exponents(sanf)? {
        if e - 1 == n / 2 {
            exps.push(n / 2);
        } else {
            exps.push(e - 1);
            exps.push(n + 1 - e);
        }
    }
    Ok(GF2Poly::from_exponents(exps))
}

/// Bentness of a homogeneous quadratic rotation-symmetric function through
/// `gcd(poly, x^n + 1) = 1`.
pub fn is_bent_degree2_rots(sanf: &Sanf) -> Result<bool> {
    let p = rots_quadratic_poly(sanf)?;
    Ok(gf2_gcd(&p, &GF2Poly::x_n_plus_one(sanf.n()))?.is_one())
}

/// The circulant first row of a homogeneous quadratic rotation-symmetric
/// function: `a_{1,e} = a_{1,n+2-e} = 1`.
pub fn circulant_row_for(sanf: &Sanf) -> Result<CirculantRow> {
    let n = sanf.n();
    let mut row = vec![false; n];
    for e in degree2_exponents(sanf)? {
        row[e - 1] = true;
        row[(n + 1 - e) % n] = true;
    }
    CirculantRow::new(row)
}

/// Symplectic matrix of the quadratic part of a degree ≤ 2 function.
pub fn symplectic_matrix(anf: &AnfForm) -> Result<Vec<Vec<bool>>> {
    if let Degree::Exactly(d) = anf.degree() {
        if d > 2 {
            return Err(Error::WrongDegree {
                expected: "at most 2".into(),
                got: d.to_string(),
            });
        }
    }
    let n = anf.n();
    let mut a = vec![vec![false; n]; n];
    for u in anf.monomials().iter().filter(|u| u.weight() == 2) {
        let p = u.positions();
        let (i, j) = (p[0] - 1, p[1] - 1);
        a[i][j] = true;
        a[j][i] = true;
    }
    Ok(a)
}

/// A function of degree at most 2 is bent iff its symplectic matrix has
/// full rank.
pub fn is_bent_quadratic(anf: &AnfForm) -> Result<bool> {
    let a = symplectic_matrix(anf)?;
    Ok(gf2_rank(&a) == anf.n())
}

/// Builds `x_1 x_{e_1} + ⋯` on `n` variables.
pub fn degree2_sanf(n: usize, exponents: &[usize]) -> Result<Sanf> {
    let reps = exponents
        .iter()
        .map(|&e| Monomial::from_positions(n, &[1, e]))
        .collect::<Result<Vec<_>>>()?;
    Sanf::new(n, reps)
}

/// Every homogeneous quadratic rotation-symmetric bent SANF on `n`
/// variables, sorted by the ascending list of `e` values.
pub fn classify_degree2(n: usize) -> Result<Vec<Sanf>> {
    if n % 2 == 1 {
        return Err(Error::OddVariableCount(n));
    }
    if n == 0 || n > MAX_CLASSIFY_VARS {
        return Err(Error::VariableCount {
            n,
            max: MAX_CLASSIFY_VARS,
        });
    }
    let half = n / 2;
    let modulus = GF2Poly::x_n_plus_one(n);
    let mut found: Vec<(Vec<usize>, Sanf)> = Vec::new();
    for mask in 1u64..1 << half {
        let es: Vec<usize> = (0..half).filter(|b| mask >> b & 1 == 1).map(|b| b + 2).collect();
        let sanf = degree2_sanf(n, &es)?;
        let p = rots_quadratic_poly(&sanf)?;
        if gf2_gcd(&p, &modulus)?.is_one() {
            found.push((es, sanf));
        }
    }
    found.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(found.into_iter().map(|(_, s)| s).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::walsh::is_bent;

    fn p(exps: &[usize]) -> GF2Poly {
        GF2Poly::from_exponents(exps.iter().copied())
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gf2_gcd(&p(&[2]), &p(&[4, 0])).unwrap(), GF2Poly::one());
        // x + x^3 = x(1 + x)^2 and x^4 + 1 = (1 + x)^4
        assert_eq!(gf2_gcd(&p(&[1, 3]), &p(&[4, 0])).unwrap(), p(&[2, 0]));
        let q = p(&[5, 2, 0]);
        assert_eq!(gf2_gcd(&q, &q).unwrap(), q);
        assert_eq!(gf2_gcd(&GF2Poly::zero(), &q).unwrap(), q);
        assert!(matches!(
            gf2_gcd(&GF2Poly::zero(), &GF2Poly::zero()),
            Err(Error::ZeroGcd)
        ));
    }

    #[test]
    fn arithmetic_over_word_boundaries() {
        let a = p(&[70, 3, 0]);
        let b = p(&[65, 1]);
        let prod = &a * &b;
        let (q, r) = prod.div_rem(&b).unwrap();
        assert_eq!(q, a);
        assert!(r.is_zero());
        assert_eq!(prod.degree(), Some(135));
        assert!(b.divides(&prod));
        assert!(!p(&[2, 0]).divides(&p(&[2, 1, 0])));
    }

    #[test]
    fn display_descending() {
        assert_eq!(p(&[0, 2, 4]).to_string(), "x^4 + x^2 + 1");
        assert_eq!(p(&[1]).to_string(), "x");
        assert_eq!(GF2Poly::zero().to_string(), "0");
        assert_eq!(GF2Poly::zero().degree(), None);
    }

    #[test]
    fn quadratic_polynomials() {
        let s = Sanf::parse(8, "x1x5").unwrap();
        assert_eq!(rots_quadratic_poly(&s).unwrap(), p(&[4]));
        let s = Sanf::parse(4, "x1x2").unwrap();
        assert_eq!(rots_quadratic_poly(&s).unwrap(), p(&[1, 3]));
        let s = Sanf::parse(8, "x1x2+x1x3+x1x5").unwrap();
        assert_eq!(rots_quadratic_poly(&s).unwrap(), p(&[1, 7, 2, 6, 4]));
        assert!(rots_quadratic_poly(&Sanf::parse(7, "x1x2").unwrap()).is_err());
        assert!(rots_quadratic_poly(&Sanf::parse(8, "x1x2x3").unwrap()).is_err());
    }

    #[test]
    fn gcd_criterion_small_cases() {
        let x1x3 = Sanf::parse(4, "x1x3").unwrap();
        assert!(is_bent_degree2_rots(&x1x3).unwrap());
        assert!(is_bent(&x1x3.truth_table().unwrap()));
        let x1x2 = Sanf::parse(4, "x1x2").unwrap();
        assert!(!is_bent_degree2_rots(&x1x2).unwrap());
        assert!(!is_bent(&x1x2.truth_table().unwrap()));
    }

    #[test]
    fn circulant_examples() {
        let mut identity = vec![false; 7];
        identity[0] = true;
        assert!(circulant_nonsingular(&CirculantRow::new(identity).unwrap()));
        assert!(!circulant_nonsingular(&CirculantRow::new(vec![true; 6]).unwrap()));
        let row = circulant_row_for(&Sanf::parse(8, "x1x5").unwrap()).unwrap();
        assert_eq!(row.to_poly(), p(&[4]));
        assert!(circulant_nonsingular(&row));
    }

    #[test]
    fn symplectic_examples() {
        let x1x2 = AnfForm::new(2, vec![Monomial::from_positions(2, &[1, 2]).unwrap()]).unwrap();
        assert!(is_bent_quadratic(&x1x2).unwrap());
        let f = AnfForm::new(
            4,
            vec![
                Monomial::from_positions(4, &[1, 2]).unwrap(),
                Monomial::from_positions(4, &[3]).unwrap(),
            ],
        )
        .unwrap();
        assert!(!is_bent_quadratic(&f).unwrap());
        let cubic = Sanf::parse(6, "x1x2x3").unwrap().to_anf().unwrap();
        assert!(is_bent_quadratic(&cubic).is_err());
    }

    #[test]
    fn classification_small_n() {
        let c2 = classify_degree2(2).unwrap();
        assert_eq!(c2.len(), 1);
        assert_eq!(c2[0].to_string(), "x1x2");
        let c4: Vec<String> = classify_degree2(4).unwrap().iter().map(|s| s.to_string()).collect();
        assert_eq!(c4, vec!["x1x2 + x1x3", "x1x3"]);
        assert!(classify_degree2(7).is_err());
        assert!(classify_degree2(42).is_err());
    }

    #[test]
    fn classification_contains_middle_term() {
        for n in (2..=20).step_by(2) {
            for s in classify_degree2(n).unwrap() {
                assert!(degree2_exponents(&s).unwrap().contains(&(n / 2 + 1)));
                assert!(rots_quadratic_poly(&s).unwrap().coeff(n / 2));
            }
        }
    }
}
