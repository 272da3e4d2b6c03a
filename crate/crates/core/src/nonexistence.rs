// SPDX-License-Identifier: Apache-2.0

//! Structural nonexistence checkers for homogeneous rotation-symmetric bent
//! functions.
//!
//! Every checker that proves non-bentness by valuation names a witness
//! vector `u_0` and a claimed `v_2(h_f(u_0))`. The claim is a violation of
//! the valuation criterion when it does not exceed `|u_0| - n/2`, and
//! [`verify_witness`] recomputes `h_f(u_0)` to confirm it.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::boolfn::MAX_VARS;
use crate::error::{Error, Result};
use crate::hcoeff::{
    h_all_from_spectrum, h_direct, h_from_spectrum, valuation_condition_holds, HValue, Valuation,
    DIRECT_CAPACITY,
};
use crate::rotsym::{Monomial, Sanf};
use crate::walsh::{walsh_spectrum, WalshSpectrum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    NotBent,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::NotBent => "NOT_BENT",
            Verdict::Inconclusive => "INCONCLUSIVE",
        })
    }
}

/// Parameters of the single-orbit degree-3 case: `u_1` has ones at
/// `1, n1 + 2, D` with `D = n1 + n2 + 3`, and `n - n1 - 1 = q(D + n0) + r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prop3Params {
    pub n1: usize,
    pub n2: usize,
    pub n0: usize,
    pub d_span: usize,
    pub q: usize,
    pub r: usize,
}

impl Prop3Params {
    /// The decomposition for gaps `(n1, n2)` on `n` variables, if `q ≥ 1`.
    pub fn new(n: usize, n1: usize, n2: usize) -> Option<Self> {
        let n0 = n1.max(n2);
        let d_span = n1 + n2 + 3;
        let rest = n.checked_sub(n1 + 1)?;
        let (q, r) = (rest / (d_span + n0), rest % (d_span + n0));
        (q >= 1 && d_span <= n).then_some(Self {
            n1,
            n2,
            n0,
            d_span,
            q,
            r,
        })
    }

    /// Reassembles `n`.
    pub fn n(&self) -> usize {
        self.q * (self.d_span + self.n0) + self.r + self.n1 + 1
    }

    pub fn claimed_valuation(&self) -> usize {
        self.q * (self.n0 + 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonexistenceReport {
    pub checker: String,
    pub verdict: Verdict,
    pub rule: Option<String>,
    pub witness_u0: Option<Monomial>,
    pub witness_k: Option<usize>,
    pub claimed_valuation: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prop3: Option<Prop3Params>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_u2: Option<Monomial>,
    pub detail: Vec<String>,
}

impl NonexistenceReport {
    fn inconclusive(checker: &str, detail: Vec<String>) -> Self {
        Self {
            checker: checker.to_string(),
            verdict: Verdict::Inconclusive,
            rule: None,
            witness_u0: None,
            witness_k: None,
            claimed_valuation: None,
            prop3: None,
            witness_u2: None,
            detail,
        }
    }

    fn not_bent(checker: &str, rule: &str, detail: Vec<String>) -> Self {
        Self {
            verdict: Verdict::NotBent,
            rule: Some(rule.to_string()),
            ..Self::inconclusive(checker, detail)
        }
    }

    fn with_witness(mut self, u0: Monomial, k: Option<usize>, claimed: usize) -> Self {
        self.witness_u0 = Some(u0);
        self.witness_k = k;
        self.claimed_valuation = Some(claimed);
        self
    }

    fn odd(checker: &str, n: usize) -> Self {
        Self::not_bent(
            checker,
            "odd_n",
            vec![format!("n = {n} is odd; bent functions need even n")],
        )
    }

    pub fn is_not_bent(&self) -> bool {
        self.verdict == Verdict::NotBent
    }

    pub fn has_witness(&self) -> bool {
        self.witness_u0.is_some() && self.claimed_valuation.is_some()
    }
}

impl fmt::Display for NonexistenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.checker, self.verdict)?;
        if let Some(rule) = &self.rule {
            write!(f, " [{rule}]")?;
        }
        if let (Some(u0), Some(v)) = (&self.witness_u0, self.claimed_valuation) {
            write!(f, " u0={} v2={v}", u0.bitstring())?;
            if let Some(k) = self.witness_k {
                write!(f, " k={k}")?;
            }
        }
        if let Some(p) = &self.prop3 {
            write!(
                f,
                " (n1={} n2={} n0={} D={} q={} r={})",
                p.n1, p.n2, p.n0, p.d_span, p.q, p.r
            )?;
        }
        for line in &self.detail {
            write!(f, "\n  {line}")?;
        }
        Ok(())
    }
}

/// Degree data of a homogeneous SANF. `D_i` is the last one-position of
/// representative `i` and `u_1` is the first representative attaining the
/// minimum `D_1`. `splits` lists every `l` with `u_1 = A_l ‖ B ‖ 0⋯0`, both
/// blocks starting and ending with a one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureProfile {
    pub n: usize,
    pub d: usize,
    pub m: usize,
    pub d_list: Vec<usize>,
    pub d1: usize,
    pub u1_index: usize,
    pub u1: Monomial,
    pub splits: Vec<usize>,
    /// The largest split, if any.
    pub l: Option<usize>,
    pub a_pattern: Option<String>,
    pub b_pattern: Option<String>,
}

pub fn profile(sanf: &Sanf) -> Result<StructureProfile> {
    let d = match sanf.homogeneous_degree() {
        Some(d) if !sanf.is_empty() => d as usize,
        _ => return Err(Error::NotHomogeneous),
    };
    let d_list: Vec<usize> = sanf.reps().iter().map(Monomial::last_position).collect();
    let d1 = *d_list.iter().min().expect("nonempty");
    let u1_index = d_list.iter().position(|&x| x == d1).expect("min is attained");
    let u1 = sanf.reps()[u1_index];
    let splits: Vec<usize> = (1..d1).filter(|&l| u1.get(l) && u1.get(l + 1)).collect();
    let l = splits.last().copied();
    let bits = u1.bitstring();
    Ok(StructureProfile {
        n: sanf.n(),
        d,
        m: sanf.len(),
        d_list,
        d1,
        u1_index,
        u1,
        splits,
        l,
        a_pattern: l.map(|l| bits[..l].to_string()),
        b_pattern: l.map(|l| bits[l..d1].to_string()),
    })
}

/// `ρ^0(u) ∨ ρ^s(u) ∨ ⋯ ∨ ρ^{(k-1)s}(u)`.
fn or_of_shifts(u: &Monomial, step: usize, k: usize) -> Monomial {
    let mut acc = *u;
    for j in 1..k {
        acc = acc.or(&u.rotate(j * step)).expect("same n");
    }
    acc
}

/// `1^len 0^{n-len}`.
fn prefix_ones(n: usize, len: usize) -> Monomial {
    let positions: Vec<usize> = (1..=len).collect();
    Monomial::from_positions(n, &positions).expect("len ≤ n")
}

/// A valuation `v` at `u_0` contradicts bentness when `v ≤ |u_0| - n/2`.
fn violates(n: usize, u0: &Monomial, v: usize) -> bool {
    2 * v + n <= 2 * u0.weight() as usize
}

fn degree_at_least_3(sanf: &Sanf) -> Option<usize> {
    match sanf.homogeneous_degree() {
        Some(d) if d >= 3 && !sanf.is_empty() => Some(d as usize),
        _ => None,
    }
}

/// Evaluates `h_f` at single points, building the spectrum at most once.
struct Meter<'a> {
    sanf: &'a Sanf,
    monomials: Option<Vec<Monomial>>,
    spectrum: Option<WalshSpectrum>,
}

impl<'a> Meter<'a> {
    fn new(sanf: &'a Sanf) -> Self {
        Self {
            sanf,
            monomials: None,
            spectrum: None,
        }
    }

    /// `h_f(u)` by the spectral route, cross-checked by the direct route
    /// when it fits. `None` when neither route is within capacity.
    fn h(&mut self, u: &Monomial) -> Result<Option<HValue>> {
        let sanf = self.sanf;
        let monomials = self.monomials.get_or_insert_with(|| sanf.expanded_monomials());
        let direct = match h_direct(monomials, u) {
            Ok(v) => Some(v),
            Err(Error::Capacity { .. }) => None,
            Err(e) => return Err(e),
        };
        if sanf.n() > MAX_VARS {
            return Ok(direct);
        }
        if self.spectrum.is_none() {
            self.spectrum = Some(walsh_spectrum(&sanf.truth_table()?));
        }
        let spectral = h_from_spectrum(self.spectrum.as_ref().expect("just built"), u)?;
        if let Some(direct) = direct.filter(|d| *d != spectral) {
            return Err(Error::Inconsistent(format!(
                "h_f({}) is {direct} directly but {spectral} spectrally",
                u.bitstring()
            )));
        }
        Ok(Some(spectral))
    }
}

/// A proposed witness: `u_0`, the multiplier `k` it was built from, and the
/// valuation the structural argument predicts.
struct Candidate {
    label: String,
    u0: Monomial,
    k: Option<usize>,
    predicted: usize,
}

/// Emits `NOT_BENT` on the first candidate whose measured valuation
/// contradicts bentness. A candidate whose prediction already fails the
/// bound is skipped without measuring.
fn settle(
    name: &str,
    rule: &str,
    meter: &mut Meter<'_>,
    candidates: Vec<Candidate>,
    mut detail: Vec<String>,
) -> Result<NonexistenceReport> {
    let n = meter.sanf.n();
    for c in candidates {
        let bound = c.u0.weight() as i64 - (n / 2) as i64;
        let u0 = c.u0.bitstring();
        if !violates(n, &c.u0, c.predicted) {
            detail.push(format!(
                "{}: u0 = {u0}, predicted v2 = {} > |u0| - n/2 = {bound}",
                c.label, c.predicted
            ));
            continue;
        }
        let Some(hv) = meter.h(&c.u0)? else {
            detail.push(format!("{}: u0 = {u0} is beyond both h_f routes", c.label));
            continue;
        };
        match hv.valuation.finite() {
            Some(v) if violates(n, &c.u0, v as usize) => {
                let note = if v as usize == c.predicted {
                    String::new()
                } else {
                    format!(" (predicted {})", c.predicted)
                };
                detail.push(format!(
                    "{}: u0 = {u0}, h_f(u0) = {}, v2 = {v}{note} ≤ |u0| - n/2 = {bound}",
                    c.label, hv.value
                ));
                return Ok(NonexistenceReport::not_bent(name, rule, detail)
                    .with_witness(c.u0, c.k, v as usize));
            }
            _ => detail.push(format!(
                "{}: u0 = {u0}, predicted v2 = {} but h_f(u0) = {} (v2 = {}) > {bound}",
                c.label, c.predicted, hv.value, hv.valuation
            )),
        }
    }
    Ok(NonexistenceReport::inconclusive(name, detail))
}

/// Whether some rotation of `v` has the shape `A 0^a B 0^b` with `a ≥ 1`.
fn orbit_has_gapped_split(v: &Monomial, a: &[bool], b: &[bool]) -> bool {
    let n = v.n();
    v.orbit().iter().any(|r| {
        let bits: Vec<bool> = (1..=n).map(|p| r.get(p)).collect();
        if !bits.starts_with(a) {
            return false;
        }
        (1..=n.saturating_sub(a.len() + b.len())).any(|gap| {
            let start = a.len() + gap;
            bits[a.len()..start].iter().all(|&x| !x)
                && bits[start..start + b.len()] == *b
                && bits[start + b.len()..].iter().all(|&x| !x)
        })
    })
}

/// `B 0^{n-kD_1} A 0^{(k-1)D_1}`.
fn wrapped_split(n: usize, a: &[bool], b: &[bool], k: usize, d1: usize) -> Option<Monomial> {
    let lead_gap = n.checked_sub(k * d1)?;
    let mut positions = Vec::new();
    let mut p = 1;
    for &x in b {
        if x {
            positions.push(p);
        }
        p += 1;
    }
    p += lead_gap;
    for &x in a {
        if x {
            positions.push(p);
        }
        p += 1;
    }
    Monomial::from_positions(n, &positions).ok()
}

/// Multicycle criterion: with `u_1 = A_l ‖ B ‖ 0⋯0` and the two exclusion
/// shapes absent from the SANF, a bent function must satisfy
/// `k(d - 1) < n/2`. Instantiations are tried by increasing `k`, then `l`;
/// each `k` with `k(d - 1) ≥ n/2` that passes the exclusions for some `l`
/// yields the witness `u_1 ∨ ρ^{D_1}(u_1) ∨ ⋯ ∨ ρ^{(k-1)D_1}(u_1)`.
pub fn check_multicycle(sanf: &Sanf) -> Result<NonexistenceReport> {
    const NAME: &str = "multicycle";
    let d = match sanf.homogeneous_degree() {
        Some(d) if d >= 3 && !sanf.is_empty() => d as usize,
        Some(d) if !sanf.is_empty() => {
            return Err(Error::WrongDegree {
                expected: "at least 3".into(),
                got: d.to_string(),
            })
        }
        _ => return Err(Error::NotHomogeneous),
    };
    let n = sanf.n();
    if n % 2 == 1 {
        return Ok(NonexistenceReport::odd(NAME, n));
    }
    let prof = profile(sanf)?;
    let (d1, u1) = (prof.d1, prof.u1);
    let bits: Vec<bool> = (1..=n).map(|p| u1.get(p)).collect();
    let mut detail = vec![format!(
        "D = {:?}, D1 = {d1}, u1 = {}, splits = {:?}",
        prof.d_list,
        u1.bitstring(),
        prof.splits
    )];
    let mut candidates = Vec::new();
    for k in (1..).take_while(|&k| k * d < n && k * d1 <= n) {
        if 2 * k * (d - 1) < n {
            continue;
        }
        let passing = prof.splits.iter().copied().find(|&l| {
            let (a, b) = (&bits[..l], &bits[l..d1]);
            let gapped = sanf
                .reps()
                .iter()
                .enumerate()
                .find(|&(i, r)| i != prof.u1_index && orbit_has_gapped_split(r, a, b));
            if let Some((_, r)) = gapped {
                detail.push(format!("k={k} l={l}: {r} has the shape A 0..0 B"));
                return false;
            }
            // for k = 1 the witness is u1 itself and nothing crosses blocks
            if k >= 2 {
                let wrapped = wrapped_split(n, a, b, k, d1).expect("k·D1 ≤ n");
                if let Some(r) = sanf.reps().iter().find(|r| r.orbit().contains(&wrapped)) {
                    detail.push(format!(
                        "k={k} l={l}: {r} is a rotation of {}",
                        wrapped.bitstring()
                    ));
                    return false;
                }
            }
            true
        });
        if let Some(l) = passing {
            candidates.push(Candidate {
                label: format!("k={k} l={l}"),
                u0: or_of_shifts(&u1, d1, k),
                k: Some(k),
                predicted: k,
            });
        }
    }
    if candidates.is_empty() {
        detail.push("no instantiation with k(d-1) ≥ n/2 passes the exclusions".into());
    }
    settle(NAME, "theorem2", &mut Meter::new(sanf), candidates, detail)
}

/// Confirms a report's witness: recomputes `h_f(u_0)` spectrally, and
/// directly when the relevant monomials fit, then checks that the valuation
/// equals the claim and does not exceed `|u_0| - n/2`.
pub fn verify_witness(sanf: &Sanf, report: &NonexistenceReport) -> Result<bool> {
    let (Some(u0), Some(claimed)) = (report.witness_u0, report.claimed_valuation) else {
        return Err(Error::Precondition("report carries no witness".into()));
    };
    let n = sanf.n();
    if n % 2 == 1 {
        return Err(Error::OddVariableCount(n));
    }
    if u0.n() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: u0.n(),
        });
    }
    if u0.is_all_ones() {
        return Err(Error::Precondition(
            "witness is the all-ones vector, where the criterion is an equality".into(),
        ));
    }
    let Some(hv) = Meter::new(sanf).h(&u0)? else {
        return Err(Error::Capacity {
            needed: sanf.expanded_len(),
            cap: DIRECT_CAPACITY,
        });
    };
    Ok(hv.valuation == Valuation::Finite(claimed as u32) && violates(n, &u0, claimed))
}

/// The contiguous block `x_1 ⋯ x_d` with no other representative made of
/// two cyclic runs.
pub fn check_prop1(sanf: &Sanf) -> Result<NonexistenceReport> {
    const NAME: &str = "prop1";
    let n = sanf.n();
    let Some(d) = degree_at_least_3(sanf) else {
        return Ok(NonexistenceReport::inconclusive(
            NAME,
            vec!["needs a homogeneous SANF of degree at least 3".into()],
        ));
    };
    let block = prefix_ones(n, d);
    if !sanf.reps().contains(&block) {
        return Ok(NonexistenceReport::inconclusive(
            NAME,
            vec![format!("no representative equals {}", block.term())],
        ));
    }
    if let Some(r) = sanf.reps().iter().find(|r| r.cyclic_runs() == 2) {
        return Ok(NonexistenceReport::inconclusive(
            NAME,
            vec![format!("{r} has two blocks of ones")],
        ));
    }
    if n % 2 == 1 {
        return Ok(NonexistenceReport::odd(NAME, n));
    }
    let (q, r) = (n / d, n % d);
    let mut candidates = Vec::new();
    let blocks = |label: &str, k: usize| Candidate {
        label: label.to_string(),
        u0: prefix_ones(n, k * d),
        k: Some(k),
        predicted: k,
    };
    if r != 0 {
        candidates.push(blocks("k = floor(n/d)", q));
    } else if q >= 3 {
        candidates.push(blocks("k = n/d - 1", q - 1));
    } else if q == 2 && r == 0 {
        candidates.push(Candidate {
            label: "u1 | rho^(d-1)(u1)".into(),
            u0: block.or(&block.rotate(d - 1))?,
            k: None,
            predicted: 2,
        });
    }
    let detail = vec![format!("n = {n}, d = {d}, n mod d = {r}")];
    settle(NAME, "prop1", &mut Meter::new(sanf), candidates, detail)
}

fn is_prop2_shape(sanf: &Sanf, d: usize) -> bool {
    let n = sanf.n();
    if sanf.len() != 2 || d + 1 > n {
        return false;
    }
    let mut second: Vec<usize> = (1..d).collect();
    second.push(d + 1);
    let (Ok(a), Ok(b)) = (
        Monomial::from_positions(n, &(1..=d).collect::<Vec<_>>()),
        Monomial::from_positions(n, &second),
    ) else {
        return false;
    };
    let mut reps = sanf.reps().to_vec();
    reps.sort();
    let mut want = vec![a, b];
    want.sort();
    reps == want
}

/// Exactly `x_1 ⋯ x_d + x_1 ⋯ x_{d-1} x_{d+1}`. Residues of `n` that the
/// block witnesses do not settle fall back to a scan of the full `h_f`
/// table.
pub fn check_prop2(sanf: &Sanf) -> Result<NonexistenceReport> {
    const NAME: &str = "prop2";
    let n = sanf.n();
    let Some(d) = degree_at_least_3(sanf) else {
        return Ok(NonexistenceReport::inconclusive(
            NAME,
            vec!["needs a homogeneous SANF of degree at least 3".into()],
        ));
    };
    if !is_prop2_shape(sanf, d) {
        return Ok(NonexistenceReport::inconclusive(
            NAME,
            vec![format!("SANF is not x1..x{d} + x1..x{}x{}", d - 1, d + 1)],
        ));
    }
    if n % 2 == 1 {
        return Ok(NonexistenceReport::odd(NAME, n));
    }
    let u1 = prefix_ones(n, d);
    let (q, r) = (n / d, n % d);
    let blocks = |label: &str, k: usize| Candidate {
        label: label.to_string(),
        u0: prefix_ones(n, k * d),
        k: Some(k),
        predicted: k,
    };
    let mut candidates = Vec::new();
    if r >= 2 {
        candidates.push(blocks("k = floor(n/d)", q));
    } else if q >= 3 {
        candidates.push(blocks("k = floor(n/d) - 1", q - 1));
    } else if q == 2 && r == 0 {
        candidates.push(Candidate {
            label: "u1 | rho^(d-2)(u1)".into(),
            u0: u1.or(&u1.rotate(d - 2))?,
            k: None,
            predicted: 2,
        });
    }
    let detail = vec![format!("n = {n}, d = {d}, n mod d = {r}")];
    let report = settle(NAME, "prop2", &mut Meter::new(sanf), candidates, detail)?;
    if report.is_not_bent() || n > MAX_VARS {
        return Ok(report);
    }
    let mut detail = report.detail;
    let h = h_all_from_spectrum(&walsh_spectrum(&sanf.truth_table()?))?;
    let all = (1u64 << n) - 1;
    let bad = (0..=all).find(|&u| !valuation_condition_holds(n, u, Valuation::of(h[u as usize])));
    let Some(u) = bad else {
        detail.push("valuation criterion holds everywhere".into());
        return Ok(NonexistenceReport::inconclusive(NAME, detail));
    };
    let value = h[u as usize];
    if u == all {
        detail.push(format!("h_f(1) = {value} does not have valuation n/2"));
        return Ok(NonexistenceReport::not_bent(NAME, "prop2_direct", detail));
    }
    let u0 = Monomial::new(n, u)?;
    let v = Valuation::of(value).finite().expect("a violation is finite");
    detail.push(format!(
        "scan: h_f({}) = {value}, v2 = {v} ≤ |u0| - n/2",
        u0.bitstring()
    ));
    Ok(NonexistenceReport::not_bent(NAME, "prop2_direct", detail).with_witness(u0, None, v as usize))
}

/// Gap pairs `(n1, n2)` for each rotation of a weight-3 vector that puts a
/// one in position 1, starting with the given representative.
fn degree3_gap_pairs(u: &Monomial) -> Vec<(usize, usize)> {
    let p = u.positions();
    let n = u.n();
    let g = [p[1] - p[0] - 1, p[2] - p[1] - 1, n + p[0] - p[2] - 1];
    vec![(g[0], g[1]), (g[1], g[2]), (g[2], g[0])]
}

/// A single orbit `x_1 x_{2+n1} x_{3+n1+n2}`. The witness is the OR of `q`
/// consecutive blocks `1^{D+n0}`, each the OR of `n0 + 1` shifts of `u_1`,
/// with predicted valuation `q(n0 + 1)`. The prediction contradicts
/// bentness exactly when `q(D - n0 - 2) ≥ r + n1 + 1`.
pub fn check_prop3(sanf: &Sanf) -> Result<NonexistenceReport> {
    const NAME: &str = "prop3";
    let n = sanf.n();
    if sanf.len() != 1 || sanf.homogeneous_degree() != Some(3) {
        return Ok(NonexistenceReport::inconclusive(
            NAME,
            vec!["needs a single orbit of degree 3".into()],
        ));
    }
    if n % 2 == 1 {
        return Ok(NonexistenceReport::odd(NAME, n));
    }
    let mut meter = Meter::new(sanf);
    let mut detail = Vec::new();
    let mut first_params = None;
    for (n1, n2) in degree3_gap_pairs(&sanf.reps()[0]) {
        let Some(p) = Prop3Params::new(n, n1, n2) else {
            detail.push(format!("n1={n1} n2={n2}: n - n1 - 1 < D + n0, no decomposition"));
            continue;
        };
        first_params.get_or_insert(p);
        let lhs = p.q * (p.d_span - p.n0 - 2);
        let rhs = p.r + p.n1 + 1;
        detail.push(format!(
            "n1={n1} n2={n2} n0={} D={} q={} r={}: q(D-n0-2) = {lhs} vs r+n1+1 = {rhs}",
            p.n0, p.d_span, p.q, p.r
        ));
        let u1 = Monomial::from_positions(n, &[1, n1 + 2, p.d_span])?;
        let u2 = or_of_shifts(&u1, 1, p.n0 + 1);
        let candidate = Candidate {
            label: format!("n1={n1} n2={n2}"),
            u0: or_of_shifts(&u2, p.d_span + p.n0, p.q),
            k: Some(p.q),
            predicted: p.claimed_valuation(),
        };
        let sub = settle(NAME, "prop3", &mut meter, vec![candidate], Vec::new())?;
        let fired = sub.is_not_bent();
        detail.extend(sub.detail.iter().cloned());
        if fired {
            let mut report = NonexistenceReport { detail, ..sub };
            report.prop3 = Some(p);
            report.witness_u2 = Some(u2);
            return Ok(report);
        }
    }
    let mut report = NonexistenceReport::inconclusive(NAME, detail);
    report.prop3 = first_params;
    Ok(report)
}

/// Largest distance between consecutive ones within a representative.
pub fn compute_df(sanf: &Sanf) -> usize {
    sanf.reps()
        .iter()
        .flat_map(|r| {
            let p = r.positions();
            p.windows(2).map(|w| w[1] - w[0]).collect::<Vec<_>>()
        })
        .max()
        .unwrap_or(0)
}

/// The three earlier criteria: a lone block `x_1 ⋯ x_d`; the two-orbit form
/// with its residue-dependent side condition; the gap bound on `d_f`.
pub fn check_theorem1(sanf: &Sanf) -> Result<NonexistenceReport> {
    const NAME: &str = "theorem1";
    let n = sanf.n();
    let Some(d) = degree_at_least_3(sanf) else {
        return Ok(NonexistenceReport::inconclusive(
            NAME,
            vec!["needs a homogeneous SANF of degree at least 3".into()],
        ));
    };
    if n % 2 == 1 {
        return Ok(NonexistenceReport::odd(NAME, n));
    }
    let f = n / d;
    let mut detail = Vec::new();
    let mut fired = None;
    let i_holds = sanf.len() == 1 && sanf.reps()[0] == prefix_ones(n, d);
    detail.push(format!("(i): SANF is x1..x{d} is {i_holds}"));
    if i_holds {
        fired.get_or_insert("theorem1_i");
    }
    if is_prop2_shape(sanf, d) {
        let (holds, text) = if n % d == 1 {
            (n > 4 * f, format!("n/4 > floor(n/d): {n}/4 > {f}"))
        } else {
            (n - 2 > 4 * f, format!("(n-2)/4 > floor(n/d): {}/4 > {f}", n - 2))
        };
        detail.push(format!("(ii): {text} is {holds}"));
        if holds {
            fired.get_or_insert("theorem1_ii");
        }
    } else {
        detail.push("(ii): shape does not apply".into());
    }
    let df = compute_df(sanf);
    // d_f < (n/2 - 1) / floor(n/d)
    let holds = f > 0 && 2 * df * f < n - 2;
    detail.push(format!("(iii): d_f = {df} < ({n}/2 - 1)/{f} is {holds}"));
    if holds {
        fired.get_or_insert("theorem1_iii");
    }
    Ok(match fired {
        Some(rule) => NonexistenceReport::not_bent(NAME, rule, detail),
        None => NonexistenceReport::inconclusive(NAME, detail),
    })
}

/// Every checker that accepts the SANF, in a fixed order.
pub fn check_all(sanf: &Sanf) -> Result<Vec<NonexistenceReport>> {
    let mut out = Vec::new();
    if degree_at_least_3(sanf).is_some() {
        out.push(check_multicycle(sanf)?);
    }
    out.push(check_prop1(sanf)?);
    out.push(check_prop2(sanf)?);
    out.push(check_prop3(sanf)?);
    out.push(check_theorem1(sanf)?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: usize, text: &str) -> Sanf {
        Sanf::parse(n, text).unwrap()
    }

    #[test]
    fn profile_examples() {
        let p = profile(&s(9, "x1x2x3")).unwrap();
        assert_eq!((p.d, p.d1), (3, 3));
        assert_eq!(profile(&s(8, "x1x2x4")).unwrap().d1, 4);
        let p = profile(&s(10, "x1x2x3 + x1x2x4")).unwrap();
        assert_eq!(p.d_list, vec![3, 4]);
        assert_eq!(p.u1.term(), "x1x2x3");
        assert_eq!(p.splits, vec![1, 2]);
        assert!(profile(&s(8, "x1x2 + x1x2x3")).is_err());
    }

    #[test]
    fn multicycle_preconditions() {
        assert!(matches!(
            check_multicycle(&s(8, "x1x2 + x1x5")),
            Err(Error::WrongDegree { .. })
        ));
        let r = check_multicycle(&s(9, "x1x2x3")).unwrap();
        assert_eq!(r.rule.as_deref(), Some("odd_n"));
    }

    #[test]
    fn multicycle_fires_on_block() {
        let f = s(10, "x1x2x3");
        let r = check_multicycle(&f).unwrap();
        assert!(r.is_not_bent());
        assert_eq!(r.witness_k, Some(3));
        assert_eq!(r.witness_u0.unwrap().bitstring(), "1111111110");
        assert!(verify_witness(&f, &r).unwrap());
    }

    #[test]
    fn tampered_claim_is_rejected() {
        let f = s(10, "x1x2x3");
        let mut r = check_multicycle(&f).unwrap();
        r.claimed_valuation = r.claimed_valuation.map(|v| v + 1);
        assert!(!verify_witness(&f, &r).unwrap());
        r.witness_u0 = Some(Monomial::ones(10).unwrap());
        assert!(verify_witness(&f, &r).is_err());
        r.witness_u0 = None;
        assert!(verify_witness(&f, &r).is_err());
    }

    #[test]
    fn prop1_examples() {
        let f = s(10, "x1x2x3 + x1x3x5");
        let r = check_prop1(&f).unwrap();
        assert!(r.is_not_bent());
        assert!(verify_witness(&f, &r).unwrap());
        assert!(!check_prop1(&s(10, "x1x2x3 + x1x2x6")).unwrap().is_not_bent());
        let f = s(6, "x1x2x3");
        let r = check_prop1(&f).unwrap();
        assert!(r.is_not_bent());
        assert_eq!(r.witness_u0.unwrap().bitstring(), "111110");
        assert_eq!(r.claimed_valuation, Some(2));
        assert!(verify_witness(&f, &r).unwrap());
    }

    #[test]
    fn prop2_examples() {
        let r = check_prop2(&s(6, "x1x2x3 + x1x2x4")).unwrap();
        assert_eq!(r.rule.as_deref(), Some("prop2_direct"));
        let f = s(10, "x1x2x3 + x1x2x4");
        let r = check_prop2(&f).unwrap();
        assert_eq!(r.rule.as_deref(), Some("prop2_direct"));
        assert!(verify_witness(&f, &r).unwrap());
        let f = s(16, "x1x2x3 + x1x2x4");
        let r = check_prop2(&f).unwrap();
        assert_eq!(r.rule.as_deref(), Some("prop2"));
        assert!(verify_witness(&f, &r).unwrap());
        assert!(!check_prop2(&s(6, "x1x2 + x1x3")).unwrap().is_not_bent());
        assert!(!check_prop2(&s(10, "x1x2x3 + x1x2x5")).unwrap().is_not_bent());
    }

    #[test]
    fn prop3_examples() {
        let f = s(12, "x1x2x3");
        let r = check_prop3(&f).unwrap();
        assert!(r.is_not_bent());
        let p = r.prop3.unwrap();
        assert_eq!((p.q, p.r, p.n0, p.d_span), (3, 2, 0, 3));
        assert!(verify_witness(&f, &r).unwrap());

        let r = check_prop3(&s(10, "x1x2x4")).unwrap();
        assert!(!r.is_not_bent());
        let p = r.prop3.unwrap();
        assert_eq!((p.n1, p.n2, p.q, p.r), (0, 1, 1, 4));

        let f = s(16, "x1x3x5");
        let r = check_prop3(&f).unwrap();
        let p = r.prop3.unwrap();
        assert_eq!((p.n0, p.d_span, p.q, p.r), (1, 5, 2, 2));
        assert_eq!(r.claimed_valuation, Some(4));
        assert!(r.is_not_bent());
        assert!(verify_witness(&f, &r).unwrap());
    }

    #[test]
    fn prop3_params_reassemble_n() {
        for n in 4..40 {
            for n1 in 0..n {
                for n2 in 0..n {
                    if let Some(p) = Prop3Params::new(n, n1, n2) {
                        assert_eq!(p.n(), n);
                        assert!(p.r < p.d_span + p.n0);
                    }
                }
            }
        }
    }

    #[test]
    fn df_examples() {
        assert_eq!(compute_df(&s(8, "x1x2x3")), 1);
        assert_eq!(compute_df(&s(8, "x1x2x5")), 3);
        assert_eq!(compute_df(&s(8, "x1x4 + x1x2")), 3);
    }

    #[test]
    fn theorem1_examples() {
        let r = check_theorem1(&s(10, "x1x2x3")).unwrap();
        assert_eq!(r.rule.as_deref(), Some("theorem1_i"));
        let r = check_theorem1(&s(10, "x1x2x3 + x1x2x4")).unwrap();
        assert!(!r.is_not_bent());
        assert!(r.detail.iter().any(|l| l.contains("(ii)") && l.ends_with("false")));
        // d_f = 1 forces the lone block, so (iii) fires alongside (i)
        let r = check_theorem1(&s(10, "x1x2x3")).unwrap();
        assert!(r.detail.iter().any(|l| l.starts_with("(iii): d_f = 1") && l.ends_with("true")));
        assert!(!check_theorem1(&s(10, "x1x2x5")).unwrap().is_not_bent());
    }

    #[test]
    fn report_json_roundtrip() {
        let r = check_prop3(&s(16, "x1x3x5")).unwrap();
        let text = serde_json::to_string(&r).unwrap();
        assert!(text.contains("\"NOT_BENT\""));
        let back: NonexistenceReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
    }
}
