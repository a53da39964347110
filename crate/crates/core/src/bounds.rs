//! Upper bounds on the minimum Lee distance of linear codes over `Z_{p^t}`.
//!
//! Code-level bounds constrain a particular code through its p^t-type,
//! free rank or Singleton defect. Rank-level bounds constrain
//! `Φ(n, K, p^t)`, the largest minimum Lee distance of any rank-`K` code of
//! length `n`. All values are exact rationals; the integer bound is the
//! floor.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::code::{Distances, LinearCode};
use crate::error::{Error, Result};
use crate::ring::{Modulus, Rational};

/// Every bound in the catalogue. Declaration order is the tie-break order
/// of [`best_bound`]: the new main-theorem bounds come first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundId {
    MainThmA,
    MainThmB,
    MainThmC,
    MainThmD,
    EvenPrimePower,
    Rank1Bound,
    MDSConditionBound,
    DefectFloorBound,
    AsMDSBound,
    WynerGraham,
    WynerGrahamMLDR,
    ShiromotoYoshida,
    AHType,
    AHTypeMLDR,
    ChiangWolf,
    AHIntegralType,
    AHIntegralTypeMLDR,
    BariffiWeger,
    ByrneWeger,
}

impl BoundId {
    pub const ALL: [BoundId; 19] = [
        BoundId::MainThmA,
        BoundId::MainThmB,
        BoundId::MainThmC,
        BoundId::MainThmD,
        BoundId::EvenPrimePower,
        BoundId::Rank1Bound,
        BoundId::MDSConditionBound,
        BoundId::DefectFloorBound,
        BoundId::AsMDSBound,
        BoundId::WynerGraham,
        BoundId::WynerGrahamMLDR,
        BoundId::ShiromotoYoshida,
        BoundId::AHType,
        BoundId::AHTypeMLDR,
        BoundId::ChiangWolf,
        BoundId::AHIntegralType,
        BoundId::AHIntegralTypeMLDR,
        BoundId::BariffiWeger,
        BoundId::ByrneWeger,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundId::MainThmA => "MainThmA",
            BoundId::MainThmB => "MainThmB",
            BoundId::MainThmC => "MainThmC",
            BoundId::MainThmD => "MainThmD",
            BoundId::EvenPrimePower => "EvenPrimePower",
            BoundId::Rank1Bound => "Rank1Bound",
            BoundId::MDSConditionBound => "MDSConditionBound",
            BoundId::DefectFloorBound => "DefectFloorBound",
            BoundId::AsMDSBound => "AsMDSBound",
            BoundId::WynerGraham => "WynerGraham",
            BoundId::WynerGrahamMLDR => "WynerGrahamMLDR",
            BoundId::ShiromotoYoshida => "ShiromotoYoshida",
            BoundId::AHType => "AHType",
            BoundId::AHTypeMLDR => "AHTypeMLDR",
            BoundId::ChiangWolf => "ChiangWolf",
            BoundId::AHIntegralType => "AHIntegralType",
            BoundId::AHIntegralTypeMLDR => "AHIntegralTypeMLDR",
            BoundId::BariffiWeger => "BariffiWeger",
            BoundId::ByrneWeger => "ByrneWeger",
        }
    }

    /// Bounds that pin `Φ` exactly rather than bounding it from above.
    pub fn is_exact(self) -> bool {
        self == BoundId::MainThmD
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for BoundId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BoundId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::InvalidParams(format!("unknown bound `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundResult {
    pub id: BoundId,
    /// Exact value; `None` iff the bound does not apply.
    pub value: Option<Rational>,
    pub condition_note: String,
}

impl BoundResult {
    fn holds(id: BoundId, value: Rational, note: impl Into<String>) -> Self {
        BoundResult { id, value: Some(value), condition_note: note.into() }
    }

    fn absent(id: BoundId, note: impl Into<String>) -> Self {
        BoundResult { id, value: None, condition_note: note.into() }
    }

    pub fn applicable(&self) -> bool {
        self.value.is_some()
    }

    pub fn floor_value(&self) -> Option<i64> {
        self.value.as_ref().map(Rational::floor_i64)
    }
}

/// Length, rank and ring of a family of codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RankParams {
    pub n: usize,
    pub k: usize,
    pub modulus: Modulus,
}

impl RankParams {
    pub fn new(n: usize, k: usize, modulus: Modulus) -> Result<Self> {
        if n == 0 || k == 0 || k > n {
            return Err(Error::InvalidParams(format!("need 1 <= K <= n, got n={n}, K={k}")));
        }
        Ok(RankParams { n, k, modulus })
    }

    pub fn from_order(n: usize, k: usize, q: u64) -> Result<Self> {
        Self::new(n, k, Modulus::from_order(q)?)
    }

    fn p(&self) -> i64 {
        self.modulus.p() as i64
    }

    fn t(&self) -> usize {
        self.modulus.t() as usize
    }

    fn q(&self) -> i64 {
        self.modulus.q() as i64
    }

    /// `p^{t-1}`
    fn lift(&self) -> i64 {
        self.modulus.p_pow(self.modulus.t() - 1) as i64
    }

    fn mu_p(&self) -> Rational {
        self.modulus.residue_field().mean_nonzero_lee_weight()
    }

    fn mu_q(&self) -> Rational {
        self.modulus.mean_nonzero_lee_weight()
    }

    /// `n - K + 1`
    fn singleton(&self) -> i64 {
        self.n as i64 - self.k as i64 + 1
    }
}

impl fmt::Display for RankParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.n, self.k, self.modulus.q())
    }
}

fn floor_of(r: Rational) -> Rational {
    Rational::from(r.floor())
}

/// `n · μ_q · (q-1)/q · |C|/(|C|-1)` with the size of the given code.
pub fn wyner_graham(code: &LinearCode) -> BoundResult {
    let m = code.modulus();
    let q = m.q() as i64;
    let size = code.size();
    let ratio = Rational::from_bigints(size.clone(), size - BigInt::from(1));
    let value = m.mean_nonzero_lee_weight() * (code.n() as i64) * Rational::new(q - 1, q) * ratio;
    BoundResult::holds(BoundId::WynerGraham, value, "all codes")
}

/// Wyner–Graham with the smallest size `p^K` a rank-`K` code can have.
pub fn wyner_graham_mldr(params: &RankParams) -> BoundResult {
    let pk = BigInt::from(params.p()).pow(params.k as u32);
    let ratio = Rational::from_bigints(pk.clone(), pk - BigInt::from(1));
    let q = params.q();
    let value = params.mu_q() * (params.n as i64) * Rational::new(q - 1, q) * ratio;
    BoundResult::holds(BoundId::WynerGrahamMLDR, value, "all (n, K, q)")
}

/// `M_L(q) · (n - K + 1)`
pub fn shiromoto_yoshida(params: &RankParams) -> BoundResult {
    let value = Rational::integer(params.q() / 2 * params.singleton());
    BoundResult::holds(BoundId::ShiromotoYoshida, value, "all (n, K, q)")
}

/// `M_L(q) · (n - ⌊κ⌋)` for `q > 3` and `κ < n`.
pub fn ah_type(code: &LinearCode) -> BoundResult {
    let m = code.modulus();
    let kappa = code.kappa();
    let n = code.n() as i64;
    if m.q() <= 3 || !(kappa < n) {
        return BoundResult::absent(BoundId::AHType, "requires q > 3 and kappa < n");
    }
    let value = Rational::integer((m.q() / 2) as i64 * (n - kappa.floor_i64()));
    BoundResult::holds(BoundId::AHType, value, "q > 3, kappa < n")
}

/// `M_L(q) · (n - ⌊K/t⌋)` for `q > 3` and `⌊K/t⌋ < n`.
pub fn ah_type_mldr(params: &RankParams) -> BoundResult {
    let kt = (params.k / params.t()) as i64;
    let n = params.n as i64;
    if params.q() <= 3 || kt >= n {
        return BoundResult::absent(BoundId::AHTypeMLDR, "requires q > 3 and floor(K/t) < n");
    }
    BoundResult::holds(BoundId::AHTypeMLDR, Rational::integer(params.q() / 2 * (n - kt)), "q > 3")
}

/// `μ_q · (n - k_1 + 1)` with the code's free rank, `k_1 >= 1`.
pub fn chiang_wolf(code: &LinearCode) -> BoundResult {
    let m = code.modulus();
    if code.free_rank() == 0 {
        return BoundResult::absent(BoundId::ChiangWolf, "requires free rank >= 1");
    }
    let value = m.mean_nonzero_lee_weight() * (code.n() as i64 - code.free_rank() as i64 + 1);
    BoundResult::holds(BoundId::ChiangWolf, value, "free rank >= 1")
}

/// `μ_p · (n - K + 1)` over a prime field, where rank equals free rank.
pub fn chiang_wolf_prime(params: &RankParams) -> BoundResult {
    if params.t() != 1 {
        return BoundResult::absent(BoundId::ChiangWolf, "rank-level form requires t = 1");
    }
    BoundResult::holds(BoundId::ChiangWolf, params.mu_p() * params.singleton(), "t = 1")
}

/// `μ_q · (n - κ + 1)` for codes of integral type.
pub fn ah_integral_type(code: &LinearCode) -> BoundResult {
    let kappa = code.kappa();
    if !kappa.is_integer() {
        return BoundResult::absent(BoundId::AHIntegralType, "requires integral kappa");
    }
    let m = code.modulus();
    let value = m.mean_nonzero_lee_weight() * (Rational::integer(code.n() as i64 + 1) - kappa);
    BoundResult::holds(BoundId::AHIntegralType, value, "kappa integral")
}

/// `μ_q · (n - ⌊K/t⌋ + 1)` for `K >= t`.
pub fn ah_integral_type_mldr(params: &RankParams) -> BoundResult {
    let kt = (params.k / params.t()) as i64;
    if kt == 0 {
        return BoundResult::absent(BoundId::AHIntegralTypeMLDR, "requires K >= t");
    }
    let value = params.mu_q() * (params.n as i64 - kt + 1);
    BoundResult::holds(BoundId::AHIntegralTypeMLDR, value, "K >= t")
}

/// `p^{t-1} · ⌊p/2⌋ · (n - K + 1)`
pub fn bariffi_weger(params: &RankParams) -> BoundResult {
    let value = Rational::integer(params.lift() * (params.p() / 2) * params.singleton());
    BoundResult::holds(BoundId::BariffiWeger, value, "all (n, K, q)")
}

/// `p^{t-1} · μ_p · (n - K + 1)`
pub fn byrne_weger(params: &RankParams) -> BoundResult {
    let value = params.mu_p() * params.lift() * params.singleton();
    BoundResult::holds(BoundId::ByrneWeger, value, "all (n, K, q)")
}

/// `⌊d_H · μ_p⌋ = ⌊μ_p (n - k + 1 - s)⌋` for a code over `Z_p` of defect `s`.
pub fn as_mds_bound(code: &LinearCode) -> Result<BoundResult> {
    let m = code.modulus();
    if m.t() != 1 {
        return Ok(BoundResult::absent(BoundId::AsMDSBound, "requires t = 1"));
    }
    Ok(as_mds_bound_for(m, code.min_hamming()?))
}

/// [`as_mds_bound`] for a code over `Z_p` of known minimum Hamming distance.
pub fn as_mds_bound_for(modulus: Modulus, d_hamming: u64) -> BoundResult {
    if modulus.t() != 1 {
        return BoundResult::absent(BoundId::AsMDSBound, "requires t = 1");
    }
    let value = floor_of(modulus.mean_nonzero_lee_weight() * d_hamming as i64);
    BoundResult::holds(BoundId::AsMDSBound, value, format!("t = 1, d_H = {d_hamming}"))
}

/// `⌊μ_p (n - K)⌋` over `Z_p` when an MDS code of these parameters cannot exist.
pub fn mds_condition_bound(params: &RankParams) -> BoundResult {
    let (n, k, p) = (params.n as i64, params.k as i64, params.p());
    if params.t() != 1 {
        return BoundResult::absent(BoundId::MDSConditionBound, "requires t = 1");
    }
    // Repetition codes are MDS at every length, so K = 1 is excluded.
    let long = k >= 2 && ((n > p + 1 && k <= p) || (n > k + 1 && k >= p));
    if !long {
        return BoundResult::absent(
            BoundId::MDSConditionBound,
            "requires K >= 2 and (n > p+1, K <= p) or (n > K+1, K >= p)",
        );
    }
    let value = floor_of(params.mu_p() * (n - k));
    BoundResult::holds(BoundId::MDSConditionBound, value, "no MDS code of this length")
}

/// `n - K + 1 - ⌊(n - K + 1)/(p + 1)⌋`
fn defect_floor_term(params: &RankParams) -> i64 {
    let s = params.singleton();
    s - s / (params.p() + 1)
}

/// `μ_p (n - K + 1 - ⌊(n - K + 1)/(p + 1)⌋)` over `Z_p`, `K >= 2`.
pub fn defect_floor_bound(params: &RankParams) -> BoundResult {
    if params.t() != 1 || params.k < 2 {
        return BoundResult::absent(BoundId::DefectFloorBound, "requires t = 1 and K >= 2");
    }
    BoundResult::holds(BoundId::DefectFloorBound, params.mu_p() * defect_floor_term(params), "t = 1, K >= 2")
}

/// Main bound (A): `p^{t-1} ⌊μ_p (n - K + 1 - ⌊(n - K + 1)/(p + 1)⌋)⌋`.
pub fn main_thm_a(params: &RankParams) -> BoundResult {
    if params.k < 2 || params.n < params.k {
        return BoundResult::absent(BoundId::MainThmA, "requires K >= 2 and n >= K");
    }
    let value = floor_of(params.mu_p() * defect_floor_term(params)) * params.lift();
    BoundResult::holds(BoundId::MainThmA, value, "K >= 2, n >= K")
}

/// Main bound (B): `p^{t-1} ⌊μ_p (n - K)⌋`.
pub fn main_thm_b(params: &RankParams) -> BoundResult {
    let (n, k, p) = (params.n as i64, params.k as i64, params.p());
    let applies = (k >= p && n > k + 1) || (2 <= k && k <= p && n > p + 1);
    if !applies {
        return BoundResult::absent(BoundId::MainThmB, "requires (K >= p, n > K+1) or (2 <= K <= p, n > p+1)");
    }
    let value = floor_of(params.mu_p() * (n - k)) * params.lift();
    BoundResult::holds(BoundId::MainThmB, value, "no MDR code of this length")
}

/// Main bound (C), the MDS-regime refinement:
/// `p^{t-1} (⌊μ_p (n - K + 1)(p - 1)/p⌋ + 1)`.
pub fn mds_refined_bound(params: &RankParams) -> BoundResult {
    let (n, k, p) = (params.n as i64, params.k as i64, params.p());
    if !(3 <= k + 1 && k < n && n <= p + 1) {
        return BoundResult::absent(BoundId::MainThmC, "requires 3 <= K+1 <= n <= p+1");
    }
    let inner = floor_of(params.mu_p() * params.singleton() * Rational::new(p - 1, p)) + 1;
    BoundResult::holds(BoundId::MainThmC, inner * params.lift(), "3 <= K+1 <= n <= p+1")
}

/// Main result (D): `Φ(K, K, p^t) = p^{t-1}` exactly.
pub fn main_thm_d(params: &RankParams) -> BoundResult {
    if params.n != params.k {
        return BoundResult::absent(BoundId::MainThmD, "requires n = K");
    }
    BoundResult::holds(BoundId::MainThmD, Rational::integer(params.lift()), "n = K (exact value)")
}

/// `2^{t-1} (n - K)` for `q = 2^t`, `n > K + 1`.
pub fn even_prime_power(params: &RankParams) -> BoundResult {
    // Rank-1 MDR codes exist at every length, so K = 1 is excluded.
    if params.p() != 2 || params.k < 2 || params.n <= params.k + 1 {
        return BoundResult::absent(BoundId::EvenPrimePower, "requires p = 2, K >= 2 and n > K+1");
    }
    let value = Rational::integer(params.lift() * (params.n - params.k) as i64);
    BoundResult::holds(BoundId::EvenPrimePower, value, "p = 2, K >= 2, n > K+1")
}

/// `p^{t-1} ⌊n μ_p⌋` for rank-1 codes.
pub fn rank1_bound(params: &RankParams) -> BoundResult {
    if params.k != 1 {
        return BoundResult::absent(BoundId::Rank1Bound, "requires K = 1");
    }
    let value = floor_of(params.mu_p() * params.n as i64) * params.lift();
    BoundResult::holds(BoundId::Rank1Bound, value, "K = 1")
}

/// The main-theorem family (A)-(D) plus the even-modulus and rank-1
/// bounds, applicable or not.
pub fn main_thm_bounds(params: &RankParams) -> Vec<BoundResult> {
    vec![
        main_thm_a(params),
        main_thm_b(params),
        mds_refined_bound(params),
        main_thm_d(params),
        even_prime_power(params),
        rank1_bound(params),
    ]
}

/// Every rank-level bound, in [`BoundId`] order.
pub fn rank_level_bounds(params: &RankParams) -> Vec<BoundResult> {
    let mut all = main_thm_bounds(params);
    all.extend([
        mds_condition_bound(params),
        defect_floor_bound(params),
        wyner_graham_mldr(params),
        shiromoto_yoshida(params),
        ah_type_mldr(params),
        chiang_wolf_prime(params),
        ah_integral_type_mldr(params),
        bariffi_weger(params),
        byrne_weger(params),
    ]);
    all.sort_by_key(|b| b.id);
    all
}

/// Bounds that use properties of the code beyond its rank.
pub fn code_level_bounds(code: &LinearCode) -> Result<Vec<BoundResult>> {
    Ok(vec![as_mds_bound(code)?, wyner_graham(code), ah_type(code), chiang_wolf(code), ah_integral_type(code)])
}

/// Rank-level bound by identifier; `None` for code-level-only identifiers.
pub fn rank_level_bound(id: BoundId, params: &RankParams) -> Option<BoundResult> {
    let f: fn(&RankParams) -> BoundResult = match id {
        BoundId::MainThmA => main_thm_a,
        BoundId::MainThmB => main_thm_b,
        BoundId::MainThmC => mds_refined_bound,
        BoundId::MainThmD => main_thm_d,
        BoundId::EvenPrimePower => even_prime_power,
        BoundId::Rank1Bound => rank1_bound,
        BoundId::MDSConditionBound => mds_condition_bound,
        BoundId::DefectFloorBound => defect_floor_bound,
        BoundId::WynerGrahamMLDR => wyner_graham_mldr,
        BoundId::ShiromotoYoshida => shiromoto_yoshida,
        BoundId::AHTypeMLDR => ah_type_mldr,
        BoundId::ChiangWolf => chiang_wolf_prime,
        BoundId::AHIntegralTypeMLDR => ah_integral_type_mldr,
        BoundId::BariffiWeger => bariffi_weger,
        BoundId::ByrneWeger => byrne_weger,
        BoundId::AsMDSBound | BoundId::WynerGraham | BoundId::AHType | BoundId::AHIntegralType => return None,
    };
    Some(f(params))
}

/// Smallest floored value over all applicable rank-level bounds; ties go
/// to the earlier [`BoundId`].
pub fn best_bound(params: &RankParams) -> BoundResult {
    let all = rank_level_bounds(params);
    let applicable = all.iter().filter(|b| b.applicable()).count();
    let best = all
        .into_iter()
        .filter(BoundResult::applicable)
        .min_by_key(|b| (b.floor_value().expect("applicable"), b.id))
        .expect("ShiromotoYoshida always applies");
    let note = format!("best of {} applicable bounds: {}", applicable, best.id);
    BoundResult { condition_note: note, ..best }
}

/// Maximum length `max{k+1, p+1}` of a linear MDS code of dimension `k` over `Z_p`.
pub fn mds_max_length(k: usize, p: u64) -> usize {
    let p = p as usize;
    if k <= p {
        p + 1
    } else {
        k + 1
    }
}

/// Range `k + δ <= n <= (δ + 1)(q + 1) + k - 2` of lengths possible for a
/// linear `[n, k]_q` code with Singleton defect `δ`, `k >= 2`.
pub fn defect_length_range(k: usize, defect: usize, q: u64) -> Result<(usize, usize)> {
    if k < 2 {
        return Err(Error::InvalidParams(format!("defect length range needs k >= 2, got {k}")));
    }
    Ok((k + defect, (defect + 1) * (q as usize + 1) + k - 2))
}

/// Over `Z_p`, `p > 2`: if `d_L = d_H · μ_p` then `(p - 1)/2` divides `d_H`.
pub fn lee_equals_mu_d_divisibility(code: &LinearCode) -> Result<bool> {
    let m = code.modulus();
    if m.t() != 1 || m.p() == 2 {
        return Err(Error::Inapplicable("requires t = 1 and p > 2".into()));
    }
    Ok(divisibility_holds(m, code.distances()?))
}

/// The divisibility test of [`lee_equals_mu_d_divisibility`] on known distances.
pub fn divisibility_holds(modulus: Modulus, d: Distances) -> bool {
    let mu_d = modulus.mean_nonzero_lee_weight() * d.hamming as i64;
    if mu_d != d.lee as i64 {
        return true;
    }
    d.hamming.is_multiple_of((modulus.p() - 1) / 2)
}
