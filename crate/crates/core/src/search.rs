// SPDX-License-Identifier: Apache-2.0

//! Exhaustive search over homogeneous rotation-symmetric functions.
//!
//! A candidate is a nonempty subset of the degree-`d` orbit representatives,
//! encoded as a bitmask over [`enumerate_orbit_reps`]. Masks are visited in
//! increasing order. Going from `i - 1` to `i` flips the orbits in
//! `i ^ (i - 1)`, and each flip XORs a precomputed single-orbit table into
//! the running truth table.

use std::collections::BTreeMap;
use std::fmt;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::Path;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::boolfn::{TruthTable, MAX_VARS};
use crate::error::{Error, Result};
use crate::gf2poly::is_bent_degree2_rots;
use crate::hcoeff::{bent_by_valuation, HRoute};
use crate::nonexistence::{check_all, verify_witness};
use crate::rotsym::{enumerate_orbit_reps, Monomial, Sanf};
use crate::walsh::{bent_early_abort_with, is_bent, walsh_spectrum};

/// Candidates one run may test without the long-run flag.
pub const DEFAULT_BUDGET: u64 = 1 << 23;

/// Largest orbit count the mask encoding supports.
pub const MAX_ORBITS: usize = 40;

/// Environment variable capping the worker count.
pub const THREADS_ENV: &str = "ROTBENT_THREADS";

const CHUNK: u64 = 1 << 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    /// Full spectrum for every candidate.
    Full,
    /// Weight test first, spectrum only for balanced-enough candidates.
    EarlyAbort,
}

impl fmt::Display for SearchMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SearchMode::Full => "full",
            SearchMode::EarlyAbort => "early_abort",
        })
    }
}

/// Shard `index` of `total` contiguous slices of the candidate range.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Shard {
    pub index: u64,
    pub total: u64,
}

impl Shard {
    pub fn new(index: u64, total: u64) -> Result<Self> {
        if total == 0 || index >= total {
            return Err(Error::Precondition(format!(
                "shard {index}/{total}: index must be below a positive total"
            )));
        }
        Ok(Self { index, total })
    }

    /// Half-open mask range `[lo, hi)` of this shard within `1..=last`.
    pub fn range(&self, last: u64) -> (u64, u64) {
        let at = |i: u64| 1 + ((last as u128 * i as u128) / self.total as u128) as u64;
        (at(self.index), at(self.index + 1))
    }
}

impl FromStr for Shard {
    type Err = Error;

    /// Parses `I/T`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            text: s.to_string(),
            reason: "expected I/T with integers I < T".into(),
        };
        let (i, t) = s.split_once('/').ok_or_else(bad)?;
        let i = i.trim().parse().map_err(|_| bad())?;
        let t = t.trim().parse().map_err(|_| bad())?;
        Shard::new(i, t)
    }
}

impl fmt::Display for Shard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.index, self.total)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchTask {
    pub n: usize,
    pub d: usize,
    pub mode: SearchMode,
    pub shard: Option<Shard>,
    pub long_run: bool,
    pub budget: u64,
}

impl SearchTask {
    pub fn new(n: usize, d: usize) -> Self {
        Self {
            n,
            d,
            mode: SearchMode::EarlyAbort,
            shard: None,
            long_run: false,
            budget: DEFAULT_BUDGET,
        }
    }

    pub fn mode(mut self, mode: SearchMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn shard(mut self, shard: Shard) -> Self {
        self.shard = Some(shard);
        self
    }

    pub fn long_run(mut self, on: bool) -> Self {
        self.long_run = on;
        self
    }
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub n: usize,
    pub d: usize,
    pub orbit_count: usize,
    /// Bent functions in increasing candidate encoding.
    pub bent_sanfs: Vec<Sanf>,
    pub candidates_tested: u64,
    pub elapsed: Duration,
}

impl fmt::Display for SearchResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} bent / {} tested",
            self.bent_sanfs.len(),
            self.candidates_tested
        )
    }
}

/// Orbit representatives and their single-orbit truth tables.
struct Space {
    n: usize,
    reps: Vec<Monomial>,
    tables: Vec<Vec<u64>>,
}

impl Space {
    fn new(n: usize, d: usize) -> Result<Self> {
        if n == 0 || n > MAX_VARS {
            return Err(Error::VariableCount { n, max: MAX_VARS });
        }
        if d == 0 || d > n {
            return Err(Error::Precondition(format!("degree {d} outside 1..={n}")));
        }
        let reps = enumerate_orbit_reps(n, d)?;
        if reps.len() > MAX_ORBITS {
            return Err(Error::Capacity {
                needed: reps.len(),
                cap: MAX_ORBITS,
            });
        }
        let tables = reps
            .iter()
            .map(|r| Ok(Sanf::new(n, [*r])?.truth_table()?.words().to_vec()))
            .collect::<Result<_>>()?;
        Ok(Self { n, reps, tables })
    }

    fn last(&self) -> u64 {
        (1u64 << self.reps.len()) - 1
    }

    fn sanf(&self, mask: u64) -> Result<Sanf> {
        let chosen = (0..self.reps.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| self.reps[i]);
        Sanf::new(self.n, chosen)
    }

    fn table(&self, mask: u64) -> TruthTable {
        let mut tt = TruthTable::zero(self.n).expect("n checked");
        for i in (0..self.reps.len()).filter(|i| mask >> i & 1 == 1) {
            tt.xor_assign_words(&self.tables[i]);
        }
        tt
    }

    /// Bent masks in `[lo, hi)`.
    fn scan(&self, lo: u64, hi: u64, mode: SearchMode) -> Vec<u64> {
        let mut found = Vec::new();
        if lo >= hi {
            return found;
        }
        let mut tt = self.table(lo - 1);
        let mut scratch = Vec::new();
        for mask in lo..hi {
            let mut flips = mask ^ (mask - 1);
            while flips != 0 {
                let i = flips.trailing_zeros() as usize;
                tt.xor_assign_words(&self.tables[i]);
                flips &= flips - 1;
            }
            let bent = match mode {
                SearchMode::EarlyAbort => bent_early_abort_with(&tt, &mut scratch),
                SearchMode::Full => walsh_spectrum(&tt).is_flat(),
            };
            if bent {
                found.push(mask);
            }
        }
        found
    }
}

fn thread_pool() -> Result<Option<rayon::ThreadPool>> {
    let Ok(text) = std::env::var(THREADS_ENV) else {
        return Ok(None);
    };
    let threads: usize = text.trim().parse().map_err(|_| Error::Parse {
        text: text.clone(),
        reason: format!("{THREADS_ENV} must be a positive integer"),
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .map(Some)
        .map_err(|e| Error::Precondition(e.to_string()))
}

fn scan_parallel(space: &Space, lo: u64, hi: u64, mode: SearchMode) -> Result<Vec<u64>> {
    let run = || {
        let starts: Vec<u64> = (lo..hi).step_by(CHUNK as usize).collect();
        starts
            .par_iter()
            .map(|&s| space.scan(s, (s + CHUNK).min(hi), mode))
            .collect::<Vec<_>>()
            .concat()
    };
    Ok(match thread_pool()? {
        Some(pool) => pool.install(run),
        None => run(),
    })
}

/// Re-checks each hit on an independently expanded truth table.
fn confirm(space: &Space, masks: &[u64]) -> Result<Vec<Sanf>> {
    masks
        .iter()
        .map(|&m| {
            let sanf = space.sanf(m)?;
            if !is_bent(&sanf.truth_table()?) {
                return Err(Error::Inconsistent(format!(
                    "incremental table marked {sanf} bent, full expansion disagrees"
                )));
            }
            Ok(sanf)
        })
        .collect()
}

/// Number of `budget`-sized shards needed to cover `count` candidates.
fn shards_needed(count: u64, budget: u64) -> u64 {
    count.div_ceil(budget.max(1))
}

/// Tests every candidate of the task (or of its shard) and returns the bent
/// ones.
pub fn exhaustive_search(task: &SearchTask) -> Result<SearchResult> {
    let start = Instant::now();
    let space = Space::new(task.n, task.d)?;
    let last = space.last();
    let (lo, hi) = task.shard.unwrap_or(Shard { index: 0, total: 1 }).range(last);
    let count = hi - lo;
    if count > task.budget && !task.long_run {
        let total = task.shard.map_or(1, |s| s.total);
        return Err(Error::Budget {
            candidates: count,
            budget: task.budget,
            shards: shards_needed(last, task.budget).max(total + 1),
        });
    }
    let masks = if task.n % 2 == 1 {
        Vec::new()
    } else {
        scan_parallel(&space, lo, hi, task.mode)?
    };
    Ok(SearchResult {
        n: task.n,
        d: task.d,
        orbit_count: space.reps.len(),
        bent_sanfs: confirm(&space, &masks)?,
        candidates_tested: count,
        elapsed: start.elapsed(),
    })
}

/// One completed shard in a checkpoint file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckpointRecord {
    pub shard_index: u64,
    pub shard_total: u64,
    pub n: usize,
    pub d: usize,
    pub mode: SearchMode,
    pub candidates_tested: u64,
    pub bent: Vec<String>,
    pub params_hash: String,
}

/// Hex SHA-256 of the parameters that determine a shard's content.
pub fn params_hash(n: usize, d: usize, shard_total: u64) -> String {
    let digest = Sha256::digest(format!("rotbent-search;n={n};d={d};shards={shard_total}"));
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

/// Records in `path` that match the parameters, keyed by shard index.
pub fn read_checkpoint(
    path: &Path,
    n: usize,
    d: usize,
    shard_total: u64,
) -> Result<BTreeMap<u64, CheckpointRecord>> {
    let mut done = BTreeMap::new();
    if !path.exists() {
        return Ok(done);
    }
    let hash = params_hash(n, d, shard_total);
    for line in BufReader::new(File::open(path)?).lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let rec: CheckpointRecord = serde_json::from_str(&line)?;
        if rec.params_hash == hash {
            done.insert(rec.shard_index, rec);
        }
    }
    Ok(done)
}

fn append_record(path: &Path, rec: &CheckpointRecord) -> Result<()> {
    let mut file = OpenOptions::new().create(true).append(true).open(path)?;
    writeln!(file, "{}", serde_json::to_string(rec)?)?;
    file.flush()?;
    Ok(())
}

/// Runs the task's shard, or every shard when none is given, skipping
/// shards already recorded in the checkpoint file and appending one record
/// per newly completed shard. Without an explicit shard the range is split
/// into budget-sized shards. `progress` sees each record as it completes.
pub fn search_checkpointed(
    task: &SearchTask,
    path: &Path,
    mut progress: impl FnMut(&CheckpointRecord, bool),
) -> Result<SearchResult> {
    let start = Instant::now();
    let space = Space::new(task.n, task.d)?;
    let last = space.last();
    let (total, indices): (u64, Vec<u64>) = match task.shard {
        Some(s) => (s.total, vec![s.index]),
        None => {
            let total = shards_needed(last, task.budget).max(1);
            if total > 1 && !task.long_run {
                return Err(Error::Budget {
                    candidates: last,
                    budget: task.budget,
                    shards: total,
                });
            }
            (total, (0..total).collect())
        }
    };
    let mut done = read_checkpoint(path, task.n, task.d, total)?;
    let mut bent = Vec::new();
    let mut tested = 0;
    for index in indices {
        let resumed = done.contains_key(&index);
        let rec = match done.remove(&index) {
            Some(rec) => rec,
            None => {
                let shard = Shard::new(index, total)?;
                let sub = SearchTask {
                    shard: Some(shard),
                    ..task.clone()
                };
                let r = exhaustive_search(&sub)?;
                let rec = CheckpointRecord {
                    shard_index: index,
                    shard_total: total,
                    n: task.n,
                    d: task.d,
                    mode: task.mode,
                    candidates_tested: r.candidates_tested,
                    bent: r.bent_sanfs.iter().map(Sanf::to_string).collect(),
                    params_hash: params_hash(task.n, task.d, total),
                };
                append_record(path, &rec)?;
                rec
            }
        };
        progress(&rec, resumed);
        tested += rec.candidates_tested;
        for text in &rec.bent {
            bent.push(Sanf::parse(task.n, text)?);
        }
    }
    Ok(SearchResult {
        n: task.n,
        d: task.d,
        orbit_count: space.reps.len(),
        bent_sanfs: bent,
        candidates_tested: tested,
        elapsed: start.elapsed(),
    })
}

/// Outcome of running every applicable route on every candidate.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct CrosscheckReport {
    pub n: usize,
    pub d: usize,
    pub candidates: u64,
    pub bent: u64,
    pub valuation_checked: u64,
    pub gcd_checked: u64,
    pub checker_verdicts: u64,
    pub witnesses_verified: u64,
    pub disagreements: Vec<String>,
}

impl CrosscheckReport {
    pub fn is_clean(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Compares the Walsh verdict with the valuation criterion, the GCD test
/// (`d = 2`) and every nonexistence checker (`d ≥ 3`) on each candidate.
/// Emitted witnesses are re-verified.
pub fn search_crosscheck(task: &SearchTask) -> Result<CrosscheckReport> {
    let space = Space::new(task.n, task.d)?;
    let last = space.last();
    if last > task.budget && !task.long_run {
        return Err(Error::Budget {
            candidates: last,
            budget: task.budget,
            shards: shards_needed(last, task.budget),
        });
    }
    let (n, d) = (task.n, task.d);
    let per_mask = |mask: u64| -> Result<CrosscheckReport> {
        let mut rep = CrosscheckReport {
            candidates: 1,
            ..Default::default()
        };
        let sanf = space.sanf(mask)?;
        let walsh = is_bent(&space.table(mask));
        rep.bent += walsh as u64;
        let mut disagree = |what: String| rep.disagreements.push(format!("{sanf}: {what}"));
        if n % 2 == 0 {
            let anf = sanf.to_anf()?;
            let val = bent_by_valuation(&anf, HRoute::Auto)?;
            if val != walsh {
                disagree(format!("walsh {walsh}, valuation {val}"));
            }
        }
        if d == 2 && n % 2 == 0 {
            let gcd = is_bent_degree2_rots(&sanf)?;
            if gcd != walsh {
                disagree(format!("walsh {walsh}, gcd {gcd}"));
            }
        }
        if d >= 3 {
            for report in check_all(&sanf)? {
                if !report.is_not_bent() {
                    continue;
                }
                if walsh {
                    disagree(format!("{} says not bent", report.checker));
                }
                if report.has_witness() && n % 2 == 0 && !verify_witness(&sanf, &report)? {
                    disagree(format!("{} witness fails", report.checker));
                }
            }
        }
        Ok(rep)
    };
    let parts: Vec<Result<CrosscheckReport>> = (1..=last).into_par_iter().map(per_mask).collect();
    let mut out = CrosscheckReport {
        n,
        d,
        ..Default::default()
    };
    for part in parts {
        let p = part?;
        out.candidates += p.candidates;
        out.bent += p.bent;
        out.disagreements.extend(p.disagreements);
    }
    if n % 2 == 0 {
        out.valuation_checked = out.candidates;
    }
    if d == 2 && n % 2 == 0 {
        out.gcd_checked = out.candidates;
    }
    Ok(out)
}
