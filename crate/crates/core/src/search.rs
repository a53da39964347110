//! Exhaustive search over all rank-`K` linear codes of length `n` over
//! `Z_{p^t}` at desk scale: enumeration, the exact `Φ(n, K, p^t)` oracle,
//! MLDR certification and property sweeps.
//!
//! Enumeration walks reduced generator matrices. A placement assigns each
//! column to a pivot level or to the tail; each row of level `l` has the
//! pivot `p^l`, zeros on the pivots of its own and earlier levels, and
//! free multiples of `p^l` elsewhere, reduced modulo the later pivots. For
//! `t = 1` these are exactly the reduced row-echelon forms. For `t > 1` a
//! candidate is kept iff it is the reduced basis of its own Howell form,
//! which yields one representative per submodule.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use crate::bounds::{
    ah_integral_type, ah_type, as_mds_bound_for, best_bound, chiang_wolf, defect_length_range, divisibility_holds,
    main_thm_d, rank_level_bounds, wyner_graham, BoundResult, RankParams,
};
use crate::code::{CanonicalKey, Distances, LinearCode};
use crate::error::{Error, Result};
use crate::ring::{Modulus, Rational};

pub const DEFAULT_SWEEP_CODEWORD_BUDGET: u64 = 1_000_000;
pub const DEFAULT_TOTAL_CODE_BUDGET: u64 = 10_000_000;

/// Templates larger than this are split on their first free entry so that
/// parallel work units stay small.
const SPLIT_THRESHOLD: u128 = 2048;

/// Violations stored per property; the tally still counts every one.
const MAX_REPORTED_VIOLATIONS: usize = 16;

/// Parameters and budgets of one exhaustive run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepSpec {
    pub params: RankParams,
    /// Largest code whose codewords may be enumerated.
    pub codeword_budget: u64,
    /// Largest number of candidate generator matrices to examine.
    pub total_code_budget: u64,
}

impl SweepSpec {
    pub fn new(params: RankParams) -> Self {
        SweepSpec {
            params,
            codeword_budget: DEFAULT_SWEEP_CODEWORD_BUDGET,
            total_code_budget: DEFAULT_TOTAL_CODE_BUDGET,
        }
    }

    pub fn from_order(n: usize, k: usize, q: u64) -> Result<Self> {
        Ok(Self::new(RankParams::from_order(n, k, q)?))
    }

    pub fn with_budgets(self, codeword_budget: u64, total_code_budget: u64) -> Result<Self> {
        if codeword_budget == 0 || total_code_budget == 0 {
            return Err(Error::InvalidParams("budgets must be positive".into()));
        }
        Ok(SweepSpec { codeword_budget, total_code_budget, ..self })
    }
}

/// Number of `k`-dimensional subspaces of `F_p^n`.
pub fn gaussian_binomial(n: usize, k: usize, p: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let p = BigInt::from(p);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= p.pow((n - i) as u32) - 1;
        den *= p.pow((i + 1) as u32) - 1;
    }
    num / den
}

#[derive(Debug, Clone)]
struct Slot {
    row: usize,
    col: usize,
    step: u64,
    count: u64,
}

/// A family of candidate generator matrices: fixed entries plus free slots.
#[derive(Debug, Clone)]
struct Template {
    base: Vec<Vec<u64>>,
    slots: Vec<Slot>,
}

impl Template {
    fn size(&self) -> u128 {
        self.slots.iter().fold(1u128, |acc, s| acc.saturating_mul(s.count as u128))
    }

    fn split(self, out: &mut Vec<Template>) {
        if self.size() <= SPLIT_THRESHOLD || self.slots.is_empty() {
            out.push(self);
            return;
        }
        let mut slots = self.slots;
        let first = slots.remove(0);
        for d in 0..first.count {
            let mut base = self.base.clone();
            base[first.row][first.col] = d * first.step;
            Template { base, slots: slots.clone() }.split(out);
        }
    }

    fn candidates(&self) -> Candidates<'_> {
        Candidates { template: self, digits: vec![0; self.slots.len()], current: self.base.clone(), started: false }
    }
}

struct Candidates<'a> {
    template: &'a Template,
    digits: Vec<u64>,
    current: Vec<Vec<u64>>,
    started: bool,
}

impl Iterator for Candidates<'_> {
    type Item = Vec<Vec<u64>>;

    fn next(&mut self) -> Option<Vec<Vec<u64>>> {
        if !self.started {
            self.started = true;
            return Some(self.current.clone());
        }
        for (i, slot) in self.template.slots.iter().enumerate() {
            self.digits[i] += 1;
            if self.digits[i] < slot.count {
                self.current[slot.row][slot.col] = self.digits[i] * slot.step;
                return Some(self.current.clone());
            }
            self.digits[i] = 0;
            self.current[slot.row][slot.col] = 0;
        }
        None
    }
}

/// Compositions `(k_1, ..., k_t)` of `k` into `t` nonnegative parts.
fn profiles(k: usize, t: usize) -> Vec<Vec<usize>> {
    if t == 1 {
        return vec![vec![k]];
    }
    (0..=k)
        .rev()
        .flat_map(|first| {
            profiles(k - first, t - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

/// Every labelling of `n` columns with pivot levels (`Some(l)`, `counts[l]`
/// times) and tail columns (`None`).
fn labellings(n: usize, counts: &[usize]) -> Vec<Vec<Option<usize>>> {
    fn go(remaining: &mut Vec<usize>, tail: usize, acc: &mut Vec<Option<usize>>, out: &mut Vec<Vec<Option<usize>>>) {
        if remaining.iter().all(|&c| c == 0) && tail == 0 {
            out.push(acc.clone());
            return;
        }
        for l in 0..remaining.len() {
            if remaining[l] > 0 {
                remaining[l] -= 1;
                acc.push(Some(l));
                go(remaining, tail, acc, out);
                acc.pop();
                remaining[l] += 1;
            }
        }
        if tail > 0 {
            acc.push(None);
            go(remaining, tail - 1, acc, out);
            acc.pop();
        }
    }
    let k: usize = counts.iter().sum();
    let mut out = Vec::new();
    go(&mut counts.to_vec(), n - k, &mut Vec::new(), &mut out);
    out
}

fn template_for(modulus: &Modulus, labels: &[Option<usize>]) -> Template {
    let t = modulus.t() as usize;
    let p = modulus.p();
    let n = labels.len();
    let mut pivots: Vec<(usize, usize)> = labels.iter().enumerate().filter_map(|(c, l)| l.map(|l| (l, c))).collect();
    pivots.sort_unstable();

    let mut base = Vec::with_capacity(pivots.len());
    let mut slots = Vec::new();
    for (row, &(level, pivot)) in pivots.iter().enumerate() {
        let mut entries = vec![0u64; n];
        entries[pivot] = modulus.p_pow(level as u32);
        for (col, label) in labels.iter().enumerate() {
            // Range of the multiplier `a` in `p^level * a`.
            let bound = match *label {
                Some(m) if m <= level => continue,
                Some(m) => modulus.p_pow((m - level) as u32),
                None => modulus.p_pow((t - level) as u32),
            };
            let (step, count) = if col < pivot {
                (modulus.p_pow(level as u32 + 1), bound / p)
            } else {
                (modulus.p_pow(level as u32), bound)
            };
            if count > 1 {
                slots.push(Slot { row, col, step, count });
            }
        }
        base.push(entries);
    }
    Template { base, slots }
}

fn templates(params: &RankParams) -> Vec<Template> {
    let m = params.modulus;
    let mut out = Vec::new();
    for profile in profiles(params.k, m.t() as usize) {
        for labels in labellings(params.n, &profile) {
            template_for(&m, &labels).split(&mut out);
        }
    }
    out
}

/// Number of candidate generator matrices examined for `params`; equal to
/// the number of codes when `t = 1`.
pub fn candidate_count(params: &RankParams) -> u128 {
    templates(params).iter().map(Template::size).fold(0u128, u128::saturating_add)
}

fn accept(modulus: Modulus, rows: Vec<Vec<u64>>) -> Option<LinearCode> {
    let code = LinearCode::from_rows(modulus, rows).expect("candidate has a nonzero pivot");
    if modulus.t() == 1 || code.canonical_basis() == code.generators().to_rows() {
        Some(code)
    } else {
        None
    }
}

/// Lazy stream of every rank-`K` code, one representative per code.
///
/// Exhausting the candidate budget yields a single
/// [`Error::CodeBudget`] carrying the number of candidates examined, after
/// which the stream ends.
pub struct CodeStream {
    modulus: Modulus,
    templates: Vec<Template>,
    index: usize,
    current: Vec<Vec<Vec<u64>>>,
    examined: u64,
    budget: u64,
    done: bool,
}

impl CodeStream {
    /// Candidates examined so far.
    pub fn examined(&self) -> u64 {
        self.examined
    }
}

impl Iterator for CodeStream {
    type Item = Result<LinearCode>;

    fn next(&mut self) -> Option<Result<LinearCode>> {
        loop {
            if self.done {
                return None;
            }
            if self.current.is_empty() {
                let Some(t) = self.templates.get(self.index) else {
                    self.done = true;
                    return None;
                };
                self.index += 1;
                let mut batch: Vec<_> = t.candidates().collect();
                batch.reverse();
                self.current = batch;
                continue;
            }
            if self.examined == self.budget {
                self.done = true;
                return Some(Err(Error::CodeBudget { examined: self.examined, budget: self.budget }));
            }
            let rows = self.current.pop().expect("nonempty batch");
            self.examined += 1;
            if let Some(code) = accept(self.modulus, rows) {
                return Some(Ok(code));
            }
        }
    }
}

/// Streams every rank-`K` code of length `n`. For `t = 1` the number of
/// candidates is checked against the Gaussian binomial coefficient.
pub fn enumerate_codes(spec: &SweepSpec) -> CodeStream {
    let params = spec.params;
    let templates = templates(&params);
    if params.modulus.t() == 1 {
        let total: u128 = templates.iter().map(Template::size).sum();
        assert_eq!(
            BigInt::from(total),
            gaussian_binomial(params.n, params.k, params.modulus.p()),
            "reduced row-echelon count for {params}"
        );
    }
    CodeStream {
        modulus: params.modulus,
        templates,
        index: 0,
        current: Vec::new(),
        examined: 0,
        budget: spec.total_code_budget,
        done: false,
    }
}

/// Applies `f` to every code in parallel over disjoint templates and
/// returns the results in enumeration order.
fn par_map_codes<R, F>(spec: &SweepSpec, f: F) -> Result<Vec<R>>
where
    R: Send,
    F: Fn(LinearCode) -> Result<R> + Sync,
{
    let params = spec.params;
    let templates = templates(&params);
    let total: u128 = templates.iter().map(Template::size).fold(0, u128::saturating_add);
    if total > spec.total_code_budget as u128 {
        return Err(Error::CodeBudget { examined: 0, budget: spec.total_code_budget });
    }
    let parts: Vec<Result<Vec<R>>> = templates
        .par_iter()
        .map(|t| t.candidates().filter_map(|rows| accept(params.modulus, rows)).map(&f).collect())
        .collect();
    let mut out = Vec::new();
    for part in parts {
        out.extend(part?);
    }
    Ok(out)
}

/// Number of distinct rank-`K` codes, counted exhaustively.
pub fn count_codes(spec: &SweepSpec) -> Result<u64> {
    Ok(par_map_codes(spec, |_| Ok(()))?.len() as u64)
}

/// An exact value of `Φ(n, K, p^t)`.
#[derive(Debug, Clone)]
pub struct PhiRecord {
    pub params: RankParams,
    pub phi: u64,
    /// The maximizing code with the lexicographically least canonical key.
    pub witness: LinearCode,
    /// Distinct codes examined.
    pub codes_examined: u64,
}

/// Best code found before a budget ran out: a certified lower bound.
#[derive(Debug, Clone)]
pub struct PhiPartial {
    pub params: RankParams,
    pub lower_bound: u64,
    pub witness: Option<LinearCode>,
    pub codes_examined: u64,
    pub reason: String,
}

#[derive(Debug, Clone)]
pub enum PhiOutcome {
    Exact(PhiRecord),
    Unknown(PhiPartial),
}

impl PhiOutcome {
    pub fn exact(&self) -> Option<&PhiRecord> {
        match self {
            PhiOutcome::Exact(r) => Some(r),
            PhiOutcome::Unknown(_) => None,
        }
    }
}

#[derive(Debug, Clone)]
struct Best {
    lee: u64,
    code: Option<LinearCode>,
    examined: u64,
}

impl Best {
    fn empty() -> Self {
        Best { lee: 0, code: None, examined: 0 }
    }

    fn offer(&mut self, lee: u64, code: LinearCode) {
        let better = match &self.code {
            None => true,
            Some(c) => lee > self.lee || (lee == self.lee && code.canonical_key() < c.canonical_key()),
        };
        if better {
            self.lee = lee;
            self.code = Some(code);
        }
    }

    fn merge(mut self, other: Best) -> Best {
        self.examined += other.examined;
        if let Some(code) = other.code {
            self.offer(other.lee, code);
        }
        self
    }
}

fn max_code_size(params: &RankParams) -> Option<u64> {
    params.modulus.q().checked_pow(params.k as u32)
}

/// Exact `Φ(n, K, p^t)` by exhaustive search, or a lower bound with the
/// best code seen when a budget is too small.
pub fn phi_oracle(spec: &SweepSpec) -> Result<PhiOutcome> {
    let params = spec.params;
    let codewords_ok = max_code_size(&params).is_some_and(|s| s <= spec.codeword_budget);
    let candidates = candidate_count(&params);
    if !codewords_ok || candidates > spec.total_code_budget as u128 {
        return Ok(PhiOutcome::Unknown(phi_partial(spec)?));
    }

    let floor = AtomicU64::new(0);
    let modulus = params.modulus;
    let best = templates(&params)
        .par_iter()
        .map(|t| -> Result<Best> {
            let mut local = Best::empty();
            for code in t.candidates().filter_map(|rows| accept(modulus, rows)) {
                local.examined += 1;
                let current = floor.load(Ordering::Relaxed);
                if let Some(lee) = code.min_lee_at_least(current, spec.codeword_budget)? {
                    floor.fetch_max(lee, Ordering::Relaxed);
                    local.offer(lee, code);
                }
            }
            Ok(local)
        })
        .try_reduce(Best::empty, |a, b| Ok(a.merge(b)))?;

    let witness = best.code.expect("every rank has at least one code");
    Ok(PhiOutcome::Exact(PhiRecord { params, phi: best.lee, witness, codes_examined: best.examined }))
}

/// Sequential scan up to the candidate budget, skipping codes too large to
/// enumerate.
fn phi_partial(spec: &SweepSpec) -> Result<PhiPartial> {
    let mut best = Best::empty();
    let mut skipped = 0u64;
    let mut stream = enumerate_codes(spec);
    let mut exhausted = false;
    for item in stream.by_ref() {
        let code = match item {
            Ok(code) => code,
            Err(Error::CodeBudget { .. }) => {
                exhausted = true;
                break;
            }
            Err(e) => return Err(e),
        };
        best.examined += 1;
        match code.min_lee_at_least(best.lee, spec.codeword_budget) {
            Ok(Some(lee)) => best.offer(lee, code),
            Ok(None) => {}
            Err(Error::CodewordBudget { .. }) => skipped += 1,
            Err(e) => return Err(e),
        }
    }
    let mut reasons = Vec::new();
    if exhausted {
        reasons.push(format!(
            "candidate budget {} exhausted after {} candidates",
            spec.total_code_budget,
            stream.examined()
        ));
    }
    if skipped > 0 {
        reasons.push(format!("{skipped} codes above the codeword budget {} skipped", spec.codeword_budget));
    }
    Ok(PhiPartial {
        params: spec.params,
        lower_bound: best.lee,
        witness: best.code,
        codes_examined: best.examined,
        reason: reasons.join("; "),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    MldrProven,
    MldrByBound,
    NotMldr,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::MldrProven => "MLDR-proven",
            Verdict::MldrByBound => "MLDR-by-bound",
            Verdict::NotMldr => "not-MLDR",
            Verdict::Unknown => "unknown",
        })
    }
}

/// Whether a code attains `Φ(n, K, p^t)`, with the evidence used.
#[derive(Debug, Clone)]
pub struct Certificate {
    pub code: LinearCode,
    pub d_lee: u64,
    pub best_bound: BoundResult,
    pub verdict: Verdict,
    pub evidence: String,
    pub phi: Option<PhiRecord>,
}

pub fn certify_mldr(code: &LinearCode) -> Result<Certificate> {
    certify_mldr_with(code, DEFAULT_SWEEP_CODEWORD_BUDGET, DEFAULT_TOTAL_CODE_BUDGET)
}

/// Certifies against the best rank-level bound first. The oracle runs
/// when the bound is not attained, or when the bound is the exact value
/// `Φ(K, K, p^t)`, which the oracle can confirm outright.
pub fn certify_mldr_with(code: &LinearCode, codeword_budget: u64, total_code_budget: u64) -> Result<Certificate> {
    let d = code.distances_with_budget(codeword_budget)?.lee;
    let params = RankParams::new(code.n(), code.rank(), code.modulus())?;
    let best = best_bound(&params);
    let floor = best.floor_value().expect("best bound applies") as u64;
    let attains = d == floor;
    let cert = |verdict, evidence: String, phi| Certificate {
        code: code.clone(),
        d_lee: d,
        best_bound: best.clone(),
        verdict,
        evidence,
        phi,
    };
    let by_bound = format!("d_L = {d} equals the floor of {} at {params}", best.id);
    if attains && !main_thm_d(&params).applicable() {
        return Ok(cert(Verdict::MldrByBound, by_bound, None));
    }

    let spec = SweepSpec::new(params).with_budgets(codeword_budget, total_code_budget)?;
    match phi_oracle(&spec)? {
        PhiOutcome::Exact(rec) => {
            assert!(rec.phi >= d, "oracle maximum {} below a code with d_L = {d}", rec.phi);
            if rec.phi == d {
                let ev = format!("exhaustive search over {} codes: Φ{params} = {d}", rec.codes_examined);
                Ok(cert(Verdict::MldrProven, ev, Some(rec)))
            } else {
                let ev = format!(
                    "exhaustive search: Φ{params} = {} > d_L = {d}, witness {}",
                    rec.phi,
                    rec.witness.generators().to_text().trim_end().replace('\n', " / ")
                );
                Ok(cert(Verdict::NotMldr, ev, Some(rec)))
            }
        }
        PhiOutcome::Unknown(partial) => {
            if attains {
                Ok(cert(Verdict::MldrByBound, by_bound, None))
            } else if partial.lower_bound > d {
                let ev = format!(
                    "partial search found a code with d_L = {} > {d} ({})",
                    partial.lower_bound, partial.reason
                );
                Ok(cert(Verdict::NotMldr, ev, None))
            } else {
                let ev = format!("d_L = {d} < best bound {floor} ({}); search incomplete: {}", best.id, partial.reason);
                Ok(cert(Verdict::Unknown, ev, None))
            }
        }
    }
}

fn check_constant_weight_domain(code: &LinearCode) -> Result<()> {
    let m = code.modulus();
    if code.rank() != 1 {
        return Err(Error::Inapplicable(format!("requires a rank-1 code, got rank {}", code.rank())));
    }
    if m.t() != 1 && m.p() != 2 {
        return Err(Error::Inapplicable(format!("requires Z_p or Z_(2^t), got {m}")));
    }
    Ok(())
}

/// Whether every nonzero codeword of a rank-1 code over `Z_p` or
/// `Z_{2^t}` has the same Lee weight.
pub fn constant_lee_weight_structure(code: &LinearCode) -> Result<bool> {
    check_constant_weight_domain(code)?;
    let table = code.modulus().lee_table();
    let mut words = code.codewords(code.modulus().q())?;
    words.next_word();
    let mut weight = None;
    while let Some(w) = words.next_word() {
        let l: u64 = w.iter().map(|&x| table[x as usize] as u64).sum();
        if *weight.get_or_insert(l) != l {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The multiplicity `m` when the generator is, up to coordinate
/// permutation, signs and zero coordinates, an `m`-fold replication of
/// `(1, 2, ..., (p-1)/2)` over `Z_p`, or of `(1, 2, ..., 2^s - 1)` over
/// `Z_{2^s}` after dividing out the generator's 2-adic valuation.
pub fn replication_multiplicity(code: &LinearCode) -> Result<Option<usize>> {
    check_constant_weight_domain(code)?;
    let m = code.modulus();
    let g = &code.basis()[0];
    let v = m.t() - code.basis_orders()[0].ilog(m.p());
    let scale = m.p_pow(v);
    let q = m.p_pow(m.t() - v);
    let reduced: Vec<u64> = g.iter().filter(|&&x| x != 0).map(|&x| x / scale).collect();
    let half = q / 2;
    let mut counts = vec![0usize; half as usize + 1];
    for &x in &reduced {
        counts[x.min(q - x) as usize] += 1;
    }
    let expected = |a: u64| -> usize {
        if m.p() == 2 && q > 2 && a != half {
            2
        } else {
            1
        }
    };
    let mut classes = if m.p() == 2 { 1..=half } else { 1..=(q - 1) / 2 };
    let base = counts[1];
    if base == 0 || !base.is_multiple_of(expected(1)) {
        return Ok(None);
    }
    let mult = base / expected(1);
    Ok(classes.all(|a| counts[a as usize] == mult * expected(a)).then_some(mult))
}

/// Properties checked by [`property_sweep`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    /// `d_L` is at most the floor of every applicable rank- and code-level bound.
    BoundSoundness,
    /// `d_H <= n - K + 1`.
    Singleton,
    /// The socle has the rank of the code.
    SocleRank,
    /// The socle has the minimum Hamming distance of the code.
    SocleHamming,
    /// `d_L(C) <= d_L(S(C))`.
    SocleLee,
    /// `K/t <= κ <= K` with `κ t` integral.
    KappaRange,
    /// `|C|` from the rank profile equals the enumerated codeword count.
    SizeCount,
    /// The systematic form spans the same code.
    SystematicSpan,
    /// MDR iff the socle is MDS over `Z_p`.
    MdrIffMdsSocle,
    /// `d_L > p^{t-1} μ_p (n - K)` forces MDR.
    LeeForcesMdr,
    /// Over `Z_p`: `d_L > ⌊μ_p (n - k - s)⌋` forces defect at most `s`.
    LeeBoundsDefect,
    /// Over `Z_p`, `k >= 2`: `k + δ <= n <= (δ + 1)(p + 1) + k - 2`.
    DefectLengthRange,
    /// Over `Z_p`, `p > 2`: `d_L <= d_H μ_p`, and equality forces `(p - 1)/2 | d_H`.
    ShortCodeDivisibility,
    /// Over `Z_p`, `n <= k + (p - 5)/2`: `d_L < μ_p (n - k + 1)`.
    ShortCodeStrict,
    /// Rank 1 over `Z_p` or `Z_{2^t}`: constant Lee weight iff replication structure.
    ConstantWeightStructure,
    /// MDR codes over `Z_{2^t}` fall in one of the three permitted shapes.
    EvenMdrShape,
    /// Rank 1 over `Z_p`: `d_L <= n μ_p`, equality only when `(p - 1)/2 | n`.
    RankOneMu,
    /// No two enumerated codes coincide.
    DistinctCodes,
    /// Over `Z_p` the code count equals the Gaussian binomial coefficient.
    GaussianCount,
}

impl Property {
    pub const ALL: [Property; 19] = [
        Property::BoundSoundness,
        Property::Singleton,
        Property::SocleRank,
        Property::SocleHamming,
        Property::SocleLee,
        Property::KappaRange,
        Property::SizeCount,
        Property::SystematicSpan,
        Property::MdrIffMdsSocle,
        Property::LeeForcesMdr,
        Property::LeeBoundsDefect,
        Property::DefectLengthRange,
        Property::ShortCodeDivisibility,
        Property::ShortCodeStrict,
        Property::ConstantWeightStructure,
        Property::EvenMdrShape,
        Property::RankOneMu,
        Property::DistinctCodes,
        Property::GaussianCount,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::BoundSoundness => "bound-soundness",
            Property::Singleton => "singleton",
            Property::SocleRank => "socle-rank",
            Property::SocleHamming => "socle-hamming",
            Property::SocleLee => "socle-lee",
            Property::KappaRange => "kappa-range",
            Property::SizeCount => "size-count",
            Property::SystematicSpan => "systematic-span",
            Property::MdrIffMdsSocle => "mdr-iff-mds-socle",
            Property::LeeForcesMdr => "lee-forces-mdr",
            Property::LeeBoundsDefect => "lee-bounds-defect",
            Property::DefectLengthRange => "defect-length-range",
            Property::ShortCodeDivisibility => "short-code-divisibility",
            Property::ShortCodeStrict => "short-code-strict",
            Property::ConstantWeightStructure => "constant-weight-structure",
            Property::EvenMdrShape => "even-mdr-shape",
            Property::RankOneMu => "rank-one-mu",
            Property::DistinctCodes => "distinct-codes",
            Property::GaussianCount => "gaussian-count",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::InvalidParams(format!("unknown property {s:?}")))
    }
}

#[derive(Debug, Clone)]
pub struct Violation {
    pub property: Property,
    pub params: RankParams,
    /// Generator rows of the offending code, or empty for count checks.
    pub witness: String,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}: {}", self.property, self.params, self.detail)?;
        if !self.witness.is_empty() {
            write!(f, " [{}]", self.witness)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tally {
    pub checked: u64,
    pub violations: u64,
}

#[derive(Debug, Clone, Default)]
pub struct SweepReport {
    pub grids: Vec<RankParams>,
    pub codes_examined: u64,
    pub tallies: BTreeMap<Property, Tally>,
    pub violations: Vec<Violation>,
}

impl SweepReport {
    pub fn is_clean(&self) -> bool {
        self.tallies.values().all(|t| t.violations == 0)
    }

    pub fn total_violations(&self) -> u64 {
        self.tallies.values().map(|t| t.violations).sum()
    }

    fn record(&mut self, property: Property, outcome: Option<Violation>) {
        let tally = self.tallies.entry(property).or_default();
        tally.checked += 1;
        if let Some(v) = outcome {
            tally.violations += 1;
            if tally.violations as usize <= MAX_REPORTED_VIOLATIONS {
                self.violations.push(v);
            }
        }
    }

    pub fn merge(&mut self, other: SweepReport) {
        self.grids.extend(other.grids);
        self.codes_examined += other.codes_examined;
        for (p, t) in other.tallies {
            let mine = self.tallies.entry(p).or_default();
            mine.checked += t.checked;
            let before = mine.violations as usize;
            mine.violations += t.violations;
            let room = MAX_REPORTED_VIOLATIONS.saturating_sub(before);
            self.violations.extend(other.violations.iter().filter(|v| v.property == p).take(room).cloned());
        }
    }
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} grids, {} codes", self.grids.len(), self.codes_examined)?;
        for (p, t) in &self.tallies {
            writeln!(f, "  {:<26} checked {:>9}  violations {}", p.name(), t.checked, t.violations)?;
        }
        for v in &self.violations {
            writeln!(f, "  violation: {v}")?;
        }
        Ok(())
    }
}

struct WordStats {
    d: Distances,
    words: u64,
}

fn word_stats(code: &LinearCode, budget: u64) -> Result<WordStats> {
    let table = code.modulus().lee_table();
    let mut words = code.codewords(budget)?;
    words.next_word();
    let (mut dh, mut dl, mut count) = (u64::MAX, u64::MAX, 1u64);
    while let Some(w) = words.next_word() {
        count += 1;
        let (mut h, mut l) = (0u64, 0u64);
        for &x in w {
            h += u64::from(x != 0);
            l += table[x as usize] as u64;
        }
        dh = dh.min(h);
        dl = dl.min(l);
    }
    Ok(WordStats { d: Distances { hamming: dh, lee: dl }, words: count })
}

fn rows_text(code: &LinearCode) -> String {
    code.generators()
        .to_rows()
        .iter()
        .map(|r| r.iter().map(u64::to_string).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join(" / ")
}

/// Outcome of one property on one code: `None` when inapplicable,
/// `Some(Err(detail))` on violation.
type Check = Option<std::result::Result<(), String>>;

fn ensure(ok: bool, detail: impl FnOnce() -> String) -> Check {
    Some(if ok { Ok(()) } else { Err(detail()) })
}

struct SweepContext {
    params: RankParams,
    rank_bounds: Vec<BoundResult>,
    codeword_budget: u64,
}

impl SweepContext {
    fn check(&self, property: Property, code: &LinearCode, stats: &WordStats, socle: &Distances) -> Result<Check> {
        let m = self.params.modulus;
        let (p, t) = (m.p(), m.t());
        let (n, k) = (self.params.n, self.params.k);
        let d = stats.d;
        let defect = n as i64 - k as i64 + 1 - d.hamming as i64;
        let mu_p = m.residue_field().mean_nonzero_lee_weight();
        let lift = m.p_pow(t - 1) as i64;
        Ok(match property {
            Property::BoundSoundness => {
                let code_level = [
                    as_mds_bound_for(m, d.hamming),
                    wyner_graham(code),
                    ah_type(code),
                    chiang_wolf(code),
                    ah_integral_type(code),
                ];
                let broken: Vec<String> = self
                    .rank_bounds
                    .iter()
                    .chain(&code_level)
                    .filter_map(|b| b.floor_value().filter(|&f| (d.lee as i64) > f).map(|f| format!("{}={f}", b.id)))
                    .collect();
                ensure(broken.is_empty(), || format!("d_L = {} exceeds {}", d.lee, broken.join(", ")))
            }
            Property::Singleton => ensure(defect >= 0, || format!("d_H = {} > n - K + 1", d.hamming)),
            Property::SocleRank => {
                let r = code.socle().rank();
                ensure(r == k, || format!("socle rank {r} != {k}"))
            }
            Property::SocleHamming => {
                ensure(socle.hamming == d.hamming, || format!("socle d_H = {} != d_H = {}", socle.hamming, d.hamming))
            }
            Property::SocleLee => ensure(d.lee <= socle.lee, || format!("d_L = {} > socle d_L = {}", d.lee, socle.lee)),
            Property::KappaRange => {
                let kappa = code.kappa();
                let ok = kappa.clone() * t as i64 >= k as i64
                    && kappa <= k as i64
                    && (kappa.clone() * t as i64).is_integer();
                ensure(ok, || format!("kappa = {kappa} outside [K/t, K]"))
            }
            Property::SizeCount => {
                let size = code.size();
                ensure(size == BigInt::from(stats.words), || format!("|C| = {size}, enumerated {}", stats.words))
            }
            Property::SystematicSpan => {
                let sf = code.systematic_form();
                let rows: Vec<Vec<u64>> = sf
                    .matrix
                    .to_rows()
                    .iter()
                    .map(|r| {
                        let mut out = vec![0; n];
                        for (j, &c) in sf.column_permutation.iter().enumerate() {
                            out[c] = r[j];
                        }
                        out
                    })
                    .collect();
                let back = LinearCode::from_rows(m, rows)?;
                ensure(back == *code, || "systematic form spans a different code".into())
            }
            Property::MdrIffMdsSocle => {
                let socle_mds = socle.hamming as usize == n - k + 1 && code.socle().rank() == k;
                ensure((defect == 0) == socle_mds, || format!("defect {defect} but socle MDS = {socle_mds}"))
            }
            Property::LeeForcesMdr => {
                let limit = mu_p.clone() * (n - k) as i64 * lift;
                let forced = limit < d.lee as i64;
                forced.then(|| {
                    if defect == 0 {
                        Ok(())
                    } else {
                        Err(format!("d_L = {} > {limit} with defect {defect}", d.lee))
                    }
                })
            }
            Property::LeeBoundsDefect => {
                if t != 1 {
                    return Ok(None);
                }
                let bad = (0..=(n - k)).find(|&s| {
                    let limit = (mu_p.clone() * (n - k - s) as i64).floor_i64();
                    (d.lee as i64) > limit && defect > s as i64
                });
                ensure(bad.is_none(), || format!("d_L = {} forces defect <= {}, got {defect}", d.lee, bad.unwrap()))
            }
            Property::DefectLengthRange => {
                if t != 1 || k < 2 {
                    return Ok(None);
                }
                let (lo, hi) = defect_length_range(k, defect as usize, p)?;
                ensure(lo <= n && n <= hi, || format!("n = {n} outside [{lo}, {hi}] for defect {defect}"))
            }
            Property::ShortCodeDivisibility => {
                if t != 1 || p == 2 {
                    return Ok(None);
                }
                let mu_d = mu_p.clone() * d.hamming as i64;
                let ok = mu_d >= d.lee as i64 && divisibility_holds(m, d);
                ensure(ok, || format!("d_L = {}, d_H = {}, d_H μ_p = {mu_d}", d.lee, d.hamming))
            }
            Property::ShortCodeStrict => {
                if t != 1 || p < 5 || 2 * n + 5 > 2 * k + p as usize {
                    return Ok(None);
                }
                let limit = mu_p.clone() * (n - k + 1) as i64;
                ensure(limit > d.lee as i64, || format!("d_L = {} >= {limit}", d.lee))
            }
            Property::ConstantWeightStructure => {
                if k != 1 || (t != 1 && p != 2) {
                    return Ok(None);
                }
                let constant = constant_lee_weight_structure(code)?;
                let replication = replication_multiplicity(code)?;
                ensure(constant == replication.is_some(), || {
                    format!("constant weight = {constant}, replication = {replication:?}")
                })
            }
            Property::EvenMdrShape => {
                if p != 2 || defect != 0 {
                    return Ok(None);
                }
                let h = m.p_pow(t - 1);
                let ok = (k == 1 && d.lee <= n as u64 * h)
                    || (n == k && k > 1 && d.lee <= h)
                    || (n == k + 1 && d.lee <= 2 * h);
                ensure(ok, || format!("MDR code with d_L = {}", d.lee))
            }
            Property::RankOneMu => {
                if t != 1 || k != 1 || p == 2 {
                    return Ok(None);
                }
                let limit = mu_p.clone() * n as i64;
                let lee = Rational::from(d.lee as i64);
                let ok = lee < limit || (lee == limit && (n as u64).is_multiple_of((p - 1) / 2));
                ensure(ok, || format!("d_L = {} against n μ_p = {limit}", d.lee))
            }
            Property::DistinctCodes | Property::GaussianCount => None,
        })
    }
}

/// Canonical key, property outcomes and basis text of one code.
type CodeChecks = (CanonicalKey, Vec<(Property, Check)>, String);

/// Runs the named properties over every rank-`K` code of `spec`.
pub fn property_sweep(spec: &SweepSpec, properties: &[Property]) -> Result<SweepReport> {
    let params = spec.params;
    let ctx = SweepContext { params, rank_bounds: rank_level_bounds(&params), codeword_budget: spec.codeword_budget };
    let per_code = |code: LinearCode| -> Result<CodeChecks> {
        let stats = word_stats(&code, ctx.codeword_budget)?;
        let socle = code.socle().distances_with_budget(ctx.codeword_budget)?;
        let mut out = Vec::new();
        for &prop in properties {
            out.push((prop, ctx.check(prop, &code, &stats, &socle)?));
        }
        Ok((code.canonical_key().clone(), out, rows_text(&code)))
    };
    let results = par_map_codes(spec, per_code)?;

    let mut report = SweepReport { grids: vec![params], codes_examined: results.len() as u64, ..Default::default() };
    let mut keys = HashSet::new();
    let mut duplicate = None;
    for (key, checks, witness) in results {
        if !keys.insert(key) && duplicate.is_none() {
            duplicate = Some(witness.clone());
        }
        for (prop, check) in checks {
            if let Some(outcome) = check {
                let violation =
                    outcome.err().map(|detail| Violation { property: prop, params, witness: witness.clone(), detail });
                report.record(prop, violation);
            }
        }
    }
    if properties.contains(&Property::DistinctCodes) {
        let v = duplicate.map(|w| Violation {
            property: Property::DistinctCodes,
            params,
            witness: w,
            detail: "code enumerated twice".into(),
        });
        report.record(Property::DistinctCodes, v);
    }
    if properties.contains(&Property::GaussianCount) && params.modulus.t() == 1 {
        let expected = gaussian_binomial(params.n, params.k, params.modulus.p());
        let found = BigInt::from(report.codes_examined);
        let v = (expected != found).then(|| Violation {
            property: Property::GaussianCount,
            params,
            witness: String::new(),
            detail: format!("enumerated {found} codes, expected {expected}"),
        });
        report.record(Property::GaussianCount, v);
    }
    Ok(report)
}

/// [`property_sweep`] over every `1 <= K <= n <= n_max`.
pub fn sweep_grid(modulus: Modulus, n_max: usize, properties: &[Property]) -> Result<SweepReport> {
    let mut report = SweepReport::default();
    for n in 1..=n_max {
        for k in 1..=n {
            let spec = SweepSpec::new(RankParams::new(n, k, modulus)?);
            report.merge(property_sweep(&spec, properties)?);
        }
    }
    Ok(report)
}
