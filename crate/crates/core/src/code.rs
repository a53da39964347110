//! Linear codes over `Z_{p^t}`: generator matrices, the systematic form and
//! rank profile, socle, and exact Hamming/Lee minimum distances by
//! exhaustive enumeration.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ring::{Modulus, Rational, Residue, Valuation};

/// Default cap on the number of codewords any single enumeration may visit.
pub const DEFAULT_CODEWORD_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorMatrix {
    modulus: Modulus,
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
}

impl GeneratorMatrix {
    /// Builds a matrix from rows of reduced entries. Entries outside
    /// `[0, q)` are rejected rather than reduced.
    pub fn new(modulus: Modulus, rows: Vec<Vec<u64>>) -> Result<Self> {
        let cols = rows.first().map(Vec::len).unwrap_or(0);
        if rows.is_empty() || cols == 0 {
            return Err(Error::EmptyMatrix);
        }
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::RaggedRow { row: r, found: row.len(), expected: cols });
            }
            for (c, &v) in row.iter().enumerate() {
                if v >= modulus.q() {
                    return Err(Error::EntryOutOfRange { row: r, col: c, value: v, q: modulus.q() });
                }
                entries.push(v);
            }
        }
        Ok(GeneratorMatrix { modulus, rows: rows.len(), cols, entries })
    }

    /// Like [`GeneratorMatrix::new`] but reduces signed entries mod `q`.
    pub fn from_signed(modulus: Modulus, rows: &[Vec<i64>]) -> Result<Self> {
        let rows = rows.iter().map(|r| r.iter().map(|&v| modulus.reduce_signed(v)).collect()).collect();
        Self::new(modulus, rows)
    }

    pub fn identity(modulus: Modulus, k: usize) -> Self {
        let rows = (0..k).map(|i| (0..k).map(|j| u64::from(i == j)).collect()).collect();
        Self::new(modulus, rows).expect("identity is well formed")
    }

    pub fn scaled(&self, c: u64) -> Self {
        let entries = self.entries.iter().map(|&v| self.modulus.mul(v, c)).collect();
        GeneratorMatrix { entries, ..self.clone() }
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entry(&self, r: usize, c: usize) -> Residue {
        Residue::new(self.entries[r * self.cols + c], self.modulus)
    }

    pub fn to_rows(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&v| v == 0)
    }

    /// Parses the plain-text code format: a header line `p t n`, then one
    /// line of `n` integers in `[0, p^t)` per generator row. Blank lines
    /// and lines starting with `#` are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (hline, header) = lines.next().ok_or(Error::Parse { line: 1, message: "missing header `p t n`".into() })?;
        let fields = parse_ints(hline, header)?;
        if fields.len() != 3 {
            return Err(Error::Parse {
                line: hline,
                message: format!("header must be `p t n`, found {} fields", fields.len()),
            });
        }
        let (p, t, n) = (fields[0], fields[1], fields[2] as usize);
        let t = u32::try_from(t).map_err(|_| Error::Parse { line: hline, message: "t too large".into() })?;
        let modulus = Modulus::new(p, t).map_err(|e| Error::Parse { line: hline, message: e.to_string() })?;
        if n == 0 {
            return Err(Error::Parse { line: hline, message: "length n must be positive".into() });
        }

        let mut rows = Vec::new();
        for (line, body) in lines {
            let row = parse_ints(line, body)?;
            if row.len() != n {
                return Err(Error::Parse { line, message: format!("expected {} entries, found {}", n, row.len()) });
            }
            if let Some(&v) = row.iter().find(|&&v| v >= modulus.q()) {
                return Err(Error::Parse {
                    line,
                    message: format!("entry out of range: {} (modulus {})", v, modulus.q()),
                });
            }
            rows.push(row);
        }
        if rows.is_empty() {
            return Err(Error::Parse { line: hline, message: "no generator rows".into() });
        }
        Self::new(modulus, rows)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} {}\n", self.modulus.p(), self.modulus.t(), self.cols);
        for r in 0..self.rows {
            out.push_str(&join(self.row(r)));
            out.push('\n');
        }
        out
    }
}

fn parse_ints(line: usize, body: &str) -> Result<Vec<u64>> {
    body.split_whitespace()
        .map(|tok| {
            tok.parse::<u64>()
                .map_err(|_| Error::Parse { line, message: format!("not a nonnegative integer: `{tok}`") })
        })
        .collect()
}

fn join(row: &[u64]) -> String {
    row.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
}

impl fmt::Display for GeneratorMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            if r > 0 {
                writeln!(f)?;
            }
            write!(f, "[{}]", join(self.row(r)))?;
        }
        Ok(())
    }
}

/// The multiplicities `(k_1, ..., k_t)` in `C ≅ Z_{p^t}^{k_1} × ... × Z_p^{k_t}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RankProfile {
    k: Vec<usize>,
}

impl RankProfile {
    pub fn new(k: Vec<usize>) -> Self {
        assert!(!k.is_empty(), "profile needs t >= 1 entries");
        RankProfile { k }
    }

    pub fn counts(&self) -> &[usize] {
        &self.k
    }

    pub fn t(&self) -> u32 {
        self.k.len() as u32
    }

    pub fn rank(&self) -> usize {
        self.k.iter().sum()
    }

    pub fn free_rank(&self) -> usize {
        self.k[0]
    }

    /// `log_p |C| = Σ k_i (t - i + 1)`.
    pub fn log_p_size(&self) -> u32 {
        let t = self.k.len();
        self.k.iter().enumerate().map(|(i, &k)| (k * (t - i)) as u32).sum()
    }

    /// The p^t-type `κ = log_{p^t} |C|`.
    pub fn kappa(&self) -> Rational {
        Rational::new(self.log_p_size() as i64, self.t() as i64)
    }
}

impl fmt::Display for RankProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.k.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Block upper-triangular generator matrix with `p^{i-1} I_{k_i}` diagonal
/// blocks, in permuted coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystematicForm {
    pub matrix: GeneratorMatrix,
    /// `column_permutation[j]` is the original coordinate placed at position `j`.
    pub column_permutation: Vec<usize>,
    pub profile: RankProfile,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct BasisRow {
    entries: Vec<u64>,
    pivot: usize,
    valuation: u32,
}

/// Row reduction with the fixed pivot rule: among unused columns take the
/// entry of minimal p-adic valuation, scanning columns left to right and
/// rows top to bottom. Valuations therefore come out nondecreasing.
fn reduce(modulus: &Modulus, rows: Vec<Vec<u64>>, n: usize) -> Vec<BasisRow> {
    let mut pool: Vec<Vec<u64>> = rows.into_iter().filter(|r| r.iter().any(|&v| v != 0)).collect();
    let mut used = vec![false; n];
    let mut basis: Vec<BasisRow> = Vec::new();

    loop {
        let mut best: Option<(u32, usize, usize)> = None;
        for col in (0..n).filter(|&c| !used[c]) {
            for (ri, row) in pool.iter().enumerate() {
                if let Valuation::Finite(v) = modulus.valuation(row[col]) {
                    if best.is_none_or(|(bv, _, _)| v < bv) {
                        best = Some((v, col, ri));
                    }
                }
            }
        }
        let Some((v, col, ri)) = best else { break };

        let mut pivot = pool.remove(ri);
        let scale = pivot[col] / modulus.p_pow(v);
        let inv = modulus.inverse(scale).expect("cofactor of p^v is a unit");
        for x in pivot.iter_mut() {
            *x = modulus.mul(*x, inv);
        }
        let pv = modulus.p_pow(v);
        for row in pool.iter_mut() {
            let f = row[col] / pv;
            if f != 0 {
                axpy(modulus, row, &pivot, f);
            }
        }
        pool.retain(|r| r.iter().any(|&x| x != 0));
        used[col] = true;
        basis.push(BasisRow { entries: pivot, pivot: col, valuation: v });
    }

    for i in 0..basis.len() {
        let (col, pv) = (basis[i].pivot, modulus.p_pow(basis[i].valuation));
        let (above, rest) = basis.split_at_mut(i);
        for row in above.iter_mut() {
            let f = row.entries[col] / pv;
            if f != 0 {
                axpy(modulus, &mut row.entries, &rest[0].entries, f);
            }
        }
    }
    basis
}

/// `row -= f * other`
fn axpy(modulus: &Modulus, row: &mut [u64], other: &[u64], f: u64) {
    for (x, &y) in row.iter_mut().zip(other) {
        *x = modulus.sub(*x, modulus.mul(f, y));
    }
}

/// Computes the systematic form of `g` under the fixed pivot rule.
pub fn systematic_form(g: &GeneratorMatrix) -> Result<SystematicForm> {
    let basis = reduce(&g.modulus, g.to_rows(), g.cols);
    systematic_from_basis(g.modulus, g.cols, &basis)
}

fn systematic_from_basis(modulus: Modulus, n: usize, basis: &[BasisRow]) -> Result<SystematicForm> {
    if basis.is_empty() {
        return Err(Error::RankZero);
    }
    let mut perm: Vec<usize> = basis.iter().map(|b| b.pivot).collect();
    perm.extend((0..n).filter(|c| !basis.iter().any(|b| b.pivot == *c)));
    let rows = basis.iter().map(|b| perm.iter().map(|&c| b.entries[c]).collect()).collect();
    let mut k = vec![0usize; modulus.t() as usize];
    for b in basis {
        k[b.valuation as usize] += 1;
    }
    Ok(SystematicForm {
        matrix: GeneratorMatrix::new(modulus, rows)?,
        column_permutation: perm,
        profile: RankProfile::new(k),
    })
}

/// Reduced Howell form: a unique generating set for the row span, used as
/// the canonical identity of a code.
pub fn howell_form(modulus: &Modulus, rows: Vec<Vec<u64>>, n: usize) -> Vec<Vec<u64>> {
    let mut pool: Vec<Vec<u64>> = rows.into_iter().filter(|r| r.iter().any(|&v| v != 0)).collect();
    let mut out: Vec<(usize, u32, Vec<u64>)> = Vec::new();
    for col in 0..n {
        let mut best: Option<(u32, usize)> = None;
        for (ri, row) in pool.iter().enumerate() {
            if let Valuation::Finite(v) = modulus.valuation(row[col]) {
                if best.is_none_or(|(bv, _)| v < bv) {
                    best = Some((v, ri));
                }
            }
        }
        let Some((v, ri)) = best else { continue };
        let mut pivot = pool.swap_remove(ri);
        let pv = modulus.p_pow(v);
        let inv = modulus.inverse(pivot[col] / pv).expect("unit cofactor");
        for x in pivot.iter_mut() {
            *x = modulus.mul(*x, inv);
        }
        for row in pool.iter_mut() {
            let f = row[col] / pv;
            if f != 0 {
                axpy(modulus, row, &pivot, f);
            }
        }
        // The annihilator multiple keeps every vector of the span that
        // vanishes on columns 0..=col inside the span of the pool.
        let ann = modulus.p_pow(modulus.t() - v);
        let killed: Vec<u64> = pivot.iter().map(|&x| modulus.mul(x, ann)).collect();
        pool.push(killed);
        pool.retain(|r| r.iter().any(|&x| x != 0));
        out.push((col, v, pivot));
    }
    for i in 0..out.len() {
        let (col, pv) = (out[i].0, modulus.p_pow(out[i].1));
        let (above, rest) = out.split_at_mut(i);
        for (_, _, row) in above.iter_mut() {
            let f = row[col] / pv;
            if f != 0 {
                axpy(modulus, row, &rest[0].2, f);
            }
        }
    }
    out.into_iter().map(|(_, _, r)| r).collect()
}

/// Canonical identity of a code: its flattened reduced Howell form. Two
/// codes of equal length and modulus are equal iff their keys are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(pub Vec<u64>);

/// A submodule of `Z_{p^t}^n`, with its reduced basis cached.
#[derive(Debug, Clone)]
pub struct LinearCode {
    generators: GeneratorMatrix,
    form: SystematicForm,
    basis: Vec<BasisRow>,
    key: CanonicalKey,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Distances {
    pub hamming: u64,
    pub lee: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeSummary {
    pub n: usize,
    pub rank: usize,
    pub d_hamming: u64,
    pub d_lee: u64,
    pub defect: i64,
    pub is_free: bool,
    pub is_mds_socle: bool,
    pub is_mdr: bool,
}

impl LinearCode {
    pub fn new(generators: GeneratorMatrix) -> Result<Self> {
        let modulus = generators.modulus;
        let n = generators.cols;
        let basis = reduce(&modulus, generators.to_rows(), n);
        let form = systematic_from_basis(modulus, n, &basis)?;
        let key = CanonicalKey(howell_form(&modulus, generators.to_rows(), n).concat());
        Ok(LinearCode { generators, form, basis, key })
    }

    pub fn from_rows(modulus: Modulus, rows: Vec<Vec<u64>>) -> Result<Self> {
        Self::new(GeneratorMatrix::new(modulus, rows)?)
    }

    pub fn modulus(&self) -> Modulus {
        self.generators.modulus
    }

    pub fn n(&self) -> usize {
        self.generators.cols
    }

    pub fn generators(&self) -> &GeneratorMatrix {
        &self.generators
    }

    pub fn systematic_form(&self) -> &SystematicForm {
        &self.form
    }

    pub fn profile(&self) -> &RankProfile {
        &self.form.profile
    }

    pub fn rank(&self) -> usize {
        self.form.profile.rank()
    }

    pub fn free_rank(&self) -> usize {
        self.form.profile.free_rank()
    }

    pub fn kappa(&self) -> Rational {
        self.form.profile.kappa()
    }

    pub fn log_p_size(&self) -> u32 {
        self.form.profile.log_p_size()
    }

    pub fn size(&self) -> BigInt {
        BigInt::from(self.modulus().p()).pow(self.log_p_size())
    }

    pub fn canonical_key(&self) -> &CanonicalKey {
        &self.key
    }

    /// Reduced basis of the Howell form: a generator matrix that depends
    /// only on the row span.
    pub fn canonical_basis(&self) -> Vec<Vec<u64>> {
        let n = self.n();
        let rows = self.key.0.chunks(n).map(<[u64]>::to_vec).collect();
        reduce(&self.modulus(), rows, n).into_iter().map(|b| b.entries).collect()
    }

    /// Reduced basis rows in original coordinates.
    pub fn basis(&self) -> Vec<Vec<u64>> {
        self.basis.iter().map(|b| b.entries.clone()).collect()
    }

    /// Additive order `p^{t - v}` of each basis row.
    pub fn basis_orders(&self) -> Vec<u64> {
        let m = self.modulus();
        self.basis.iter().map(|b| m.p_pow(m.t() - b.valuation)).collect()
    }

    /// Row-span membership.
    pub fn contains(&self, word: &[u64]) -> bool {
        let m = self.modulus();
        if word.len() != self.n() {
            return false;
        }
        let mut residual: Vec<u64> = word.iter().map(|&v| m.reduce(v)).collect();
        for b in &self.basis {
            let pv = m.p_pow(b.valuation);
            let e = residual[b.pivot];
            if !e.is_multiple_of(pv) {
                return false;
            }
            let f = e / pv;
            if f != 0 {
                axpy(&m, &mut residual, &b.entries, f);
            }
        }
        residual.iter().all(|&v| v == 0)
    }

    /// `S(C) = C ∩ <p^{t-1}>^n`, generated by `p^{t-1-v}` times each basis row.
    pub fn socle(&self) -> LinearCode {
        let m = self.modulus();
        let rows = self
            .basis
            .iter()
            .map(|b| {
                let s = m.p_pow(m.t() - 1 - b.valuation);
                b.entries.iter().map(|&x| m.mul(x, s)).collect()
            })
            .collect();
        LinearCode::from_rows(m, rows).expect("socle of a nonzero code is nonzero")
    }

    /// The socle read over the alphabet `p^{t-1} Z_p`, as a code over `Z_p`.
    pub fn socle_over_residue_field(&self) -> LinearCode {
        let m = self.modulus();
        let scale = m.p_pow(m.t() - 1);
        let rows = self.socle().basis.iter().map(|b| b.entries.iter().map(|&x| x / scale).collect()).collect();
        LinearCode::from_rows(m.residue_field(), rows).expect("nonzero socle")
    }

    /// Iterates every codeword exactly once, zero first.
    pub fn codewords(&self, budget: u64) -> Result<Codewords<'_>> {
        let log = self.log_p_size();
        let within = (self.modulus().p() as u128).checked_pow(log).is_some_and(|size| size <= budget as u128);
        if !within {
            return Err(Error::CodewordBudget { log_p_size: log, budget });
        }
        Ok(Codewords {
            code: self,
            orders: self.basis_orders(),
            digits: vec![0; self.basis.len()],
            current: vec![0; self.n()],
            started: false,
        })
    }

    /// Exact `(d_H, d_L)` in one pass over the codewords.
    pub fn distances_with_budget(&self, budget: u64) -> Result<Distances> {
        let table = self.modulus().lee_table();
        let mut words = self.codewords(budget)?;
        words.next_word();
        let (mut dh, mut dl) = (u64::MAX, u64::MAX);
        while let Some(w) = words.next_word() {
            let mut h = 0u64;
            let mut l = 0u64;
            for &x in w {
                h += u64::from(x != 0);
                l += table[x as usize] as u64;
            }
            dh = dh.min(h);
            dl = dl.min(l);
        }
        Ok(Distances { hamming: dh, lee: dl })
    }

    pub fn distances(&self) -> Result<Distances> {
        self.distances_with_budget(DEFAULT_CODEWORD_BUDGET)
    }

    pub fn min_hamming(&self) -> Result<u64> {
        Ok(self.distances()?.hamming)
    }

    pub fn min_lee(&self) -> Result<u64> {
        Ok(self.distances()?.lee)
    }

    /// Minimum Lee weight, abandoning the scan (returning `None`) as soon
    /// as some nonzero codeword weighs strictly less than `floor`.
    pub fn min_lee_at_least(&self, floor: u64, budget: u64) -> Result<Option<u64>> {
        let table = self.modulus().lee_table();
        let mut words = self.codewords(budget)?;
        words.next_word();
        let mut dl = u64::MAX;
        while let Some(w) = words.next_word() {
            let l: u64 = w.iter().map(|&x| table[x as usize] as u64).sum();
            if l < floor {
                return Ok(None);
            }
            dl = dl.min(l);
        }
        Ok(Some(dl))
    }

    /// `n - K + 1 - d_H`.
    pub fn singleton_defect(&self) -> Result<i64> {
        Ok(self.n() as i64 - self.rank() as i64 + 1 - self.min_hamming()? as i64)
    }

    pub fn is_mdr(&self) -> Result<bool> {
        Ok(self.singleton_defect()? == 0)
    }

    /// Whether the socle, read over `Z_p`, is an `[n, K]_p` MDS code.
    pub fn is_mds_socle(&self) -> Result<bool> {
        let s = self.socle_over_residue_field();
        Ok(s.min_hamming()? as usize == self.n() - s.rank() + 1)
    }

    pub fn is_free(&self) -> bool {
        self.rank() == self.free_rank()
    }

    pub fn summary(&self) -> Result<CodeSummary> {
        let d = self.distances()?;
        let defect = self.n() as i64 - self.rank() as i64 + 1 - d.hamming as i64;
        Ok(CodeSummary {
            n: self.n(),
            rank: self.rank(),
            d_hamming: d.hamming,
            d_lee: d.lee,
            defect,
            is_free: self.is_free(),
            is_mds_socle: self.is_mds_socle()?,
            is_mdr: defect == 0,
        })
    }
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.modulus() == other.modulus() && self.n() == other.n() && self.key == other.key
    }
}

impl Eq for LinearCode {}

impl fmt::Display for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} n={} {}", self.modulus(), self.n(), self.generators)
    }
}

/// Codeword enumeration as a mixed-radix counter over the reduced basis.
pub struct Codewords<'a> {
    code: &'a LinearCode,
    orders: Vec<u64>,
    digits: Vec<u64>,
    current: Vec<u64>,
    started: bool,
}

impl Codewords<'_> {
    /// Advances and borrows the next codeword without allocating.
    pub fn next_word(&mut self) -> Option<&[u64]> {
        if !self.started {
            self.started = true;
            return Some(&self.current);
        }
        let m = self.code.modulus();
        let mut i = 0;
        loop {
            if i == self.digits.len() {
                return None;
            }
            // Adding the row at wrap-around returns the digit's contribution
            // to zero, since order * row = 0.
            for (x, &y) in self.current.iter_mut().zip(&self.code.basis[i].entries) {
                *x = m.add(*x, y);
            }
            self.digits[i] += 1;
            if self.digits[i] == self.orders[i] {
                self.digits[i] = 0;
                i += 1;
            } else {
                return Some(&self.current);
            }
        }
    }
}

impl Iterator for Codewords<'_> {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        self.next_word().map(<[u64]>::to_vec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn z(q: u64) -> Modulus {
        Modulus::from_order(q).unwrap()
    }

    fn code(q: u64, rows: Vec<Vec<u64>>) -> LinearCode {
        LinearCode::from_rows(z(q), rows).unwrap()
    }

    /// Brute-force span: all Z_q-combinations of the generator rows.
    fn brute_span(q: u64, rows: &[Vec<u64>]) -> BTreeSet<Vec<u64>> {
        let m = z(q);
        let n = rows[0].len();
        let mut span = BTreeSet::new();
        let mut coeffs = vec![0u64; rows.len()];
        loop {
            let mut w = vec![0u64; n];
            for (c, r) in coeffs.iter().zip(rows) {
                for (x, &y) in w.iter_mut().zip(r) {
                    *x = m.add(*x, m.mul(*c, y));
                }
            }
            span.insert(w);
            let mut i = 0;
            while i < coeffs.len() {
                coeffs[i] += 1;
                if coeffs[i] < q {
                    break;
                }
                coeffs[i] = 0;
                i += 1;
            }
            if i == coeffs.len() {
                return span;
            }
        }
    }

    #[test]
    fn systematic_form_examples() {
        let c = LinearCode::new(GeneratorMatrix::identity(z(5), 3)).unwrap();
        assert_eq!(c.profile().counts(), &[3]);
        assert_eq!(c.kappa(), Rational::integer(3));

        let c = code(4, vec![vec![2, 0], vec![0, 1]]);
        assert_eq!(c.profile().counts(), &[1, 1]);
        assert_eq!(c.rank(), 2);
        assert_eq!(c.free_rank(), 1);
        assert_eq!(c.kappa(), Rational::new(3, 2));
        assert_eq!(c.size(), BigInt::from(8));
        assert_eq!(brute_span(4, &[vec![2, 0], vec![0, 1]]).len(), 8);

        let c = code(4, vec![vec![1, 1], vec![2, 2]]);
        assert_eq!(c.profile().counts(), &[1, 0]);
        assert_eq!(c.rank(), 1);
        assert_eq!(c.kappa(), Rational::integer(1));
        assert_eq!(brute_span(4, &[vec![1, 1], vec![2, 2]]).len(), 4);
    }

    #[test]
    fn zero_matrix_has_rank_zero() {
        let g = GeneratorMatrix::new(z(4), vec![vec![0, 0], vec![0, 0]]).unwrap();
        assert_eq!(systematic_form(&g), Err(Error::RankZero));
        assert!(matches!(LinearCode::new(g), Err(Error::RankZero)));
    }

    #[test]
    fn systematic_blocks_are_scaled_identities() {
        let c = code(8, vec![vec![4, 2, 6, 1], vec![2, 4, 0, 2], vec![0, 4, 4, 4]]);
        let form = c.systematic_form();
        let m = z(8);
        let k = form.profile.counts();
        let mut start = 0;
        for (i, &ki) in k.iter().enumerate() {
            let scale = m.p_pow(i as u32);
            for r in start..start + ki {
                for c2 in 0..start + ki {
                    let e = form.matrix.row(r)[c2];
                    if c2 >= start {
                        assert_eq!(e, if c2 == r { scale } else { 0 });
                    } else {
                        assert_eq!(e, 0);
                    }
                }
                assert!(form.matrix.row(r).iter().all(|&e| e % scale == 0));
            }
            start += ki;
        }
        // Un-permuting reproduces codewords of the original code.
        for r in 0..form.matrix.rows() {
            let mut w = vec![0; c.n()];
            for (j, &orig) in form.column_permutation.iter().enumerate() {
                w[orig] = form.matrix.row(r)[j];
            }
            assert!(c.contains(&w));
        }
    }

    #[test]
    fn rank_of_scaled_identity() {
        for (p, t) in [(2, 2), (3, 2), (2, 3), (5, 2)] {
            let m = Modulus::new(p, t).unwrap();
            let c = LinearCode::new(GeneratorMatrix::identity(m, 3).scaled(m.p_pow(t - 1))).unwrap();
            assert_eq!(c.rank(), 3);
            assert_eq!(c.free_rank(), 0);
            assert_eq!(c.kappa(), Rational::new(3, t as i64));
            assert_eq!(c.min_lee().unwrap(), m.p_pow(t - 1));
            assert_eq!(c.socle(), c);

            let free = LinearCode::new(GeneratorMatrix::identity(m, 3)).unwrap();
            assert_eq!((free.rank(), free.free_rank()), (3, 3));
            assert_eq!(free.kappa(), Rational::integer(3));
        }
    }

    #[test]
    fn socle_examples() {
        let c = code(4, vec![vec![1, 1]]);
        assert_eq!(c.socle(), code(4, vec![vec![2, 2]]));

        let c = code(4, vec![vec![2, 0], vec![0, 1]]);
        let socle = c.socle();
        assert_eq!(socle, code(4, vec![vec![2, 0], vec![0, 2]]));
        let brute: BTreeSet<Vec<u64>> =
            brute_span(4, &[vec![2, 0], vec![0, 1]]).into_iter().filter(|w| w.iter().all(|&x| x % 2 == 0)).collect();
        let enumerated: BTreeSet<Vec<u64>> = socle.codewords(100).unwrap().collect();
        assert_eq!(brute, enumerated);
    }

    #[test]
    fn codeword_enumeration_examples() {
        let c = code(5, vec![vec![1]]);
        let words: Vec<Vec<u64>> = c.codewords(100).unwrap().collect();
        assert_eq!(words[0], vec![0]);
        let set: BTreeSet<Vec<u64>> = words.iter().cloned().collect();
        assert_eq!(set, (0..5).map(|v| vec![v]).collect());
        assert_eq!(words.len(), 5);

        let words: Vec<Vec<u64>> = code(4, vec![vec![2, 2]]).codewords(100).unwrap().collect();
        assert_eq!(words, vec![vec![0, 0], vec![2, 2]]);

        assert_eq!(code(4, vec![vec![2, 0], vec![0, 1]]).codewords(100).unwrap().count(), 8);
    }

    #[test]
    fn enumeration_budget_reports_size() {
        let c = code(5, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        match c.codewords(124) {
            Err(Error::CodewordBudget { log_p_size, budget }) => {
                assert_eq!((log_p_size, budget), (3, 124));
            }
            other => panic!("unexpected {:?}", other.map(|_| ())),
        }
        assert!(c.codewords(125).is_ok());
    }

    #[test]
    fn distances_examples() {
        let c = code(5, vec![vec![0, 1, 2, 2, 1], vec![2, 1, 4, 1, 4]]);
        assert_eq!(c.distances().unwrap(), Distances { hamming: 4, lee: 5 });
        assert_eq!(c.singleton_defect().unwrap(), 0);
        assert!(c.is_mdr().unwrap());
        assert!(c.is_mds_socle().unwrap());

        for k in 1..=4 {
            let rows = (0..k).map(|i| (0..=k).map(|j| u64::from(i == j || j == k)).collect()).collect();
            assert_eq!(code(3, rows).min_lee().unwrap(), 2);
        }

        let universe = LinearCode::new(GeneratorMatrix::identity(z(3), 3)).unwrap();
        assert_eq!(universe.singleton_defect().unwrap(), 0);

        let c = code(5, vec![vec![1, 1, 0], vec![0, 0, 1]]);
        assert_eq!(c.min_hamming().unwrap(), 1);
        assert_eq!(c.singleton_defect().unwrap(), 1);
        assert!(!c.is_mdr().unwrap());
    }

    #[test]
    fn pruned_lee_scan() {
        let c = code(5, vec![vec![0, 1, 2, 2, 1], vec![2, 1, 4, 1, 4]]);
        assert_eq!(c.min_lee_at_least(5, 1000).unwrap(), Some(5));
        assert_eq!(c.min_lee_at_least(6, 1000).unwrap(), None);
    }

    #[test]
    fn parse_round_trip_and_errors() {
        let text = "5 1 5\n0 1 2 2 1\n2 1 4 1 4\n";
        let g = GeneratorMatrix::parse(text).unwrap();
        assert_eq!(g.to_text(), text);

        let err = GeneratorMatrix::parse("3 2 3\n3 0 0\n0 9 0\n").unwrap_err();
        assert_eq!(err, Error::Parse { line: 3, message: "entry out of range: 9 (modulus 9)".into() });
        assert!(matches!(GeneratorMatrix::parse("4 1 2\n1 0\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(GeneratorMatrix::parse("5 1 2\n1 0 0\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(GeneratorMatrix::parse("5 1 2\n1 x\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(GeneratorMatrix::parse(""), Err(Error::Parse { .. })));
        assert!(matches!(GeneratorMatrix::new(z(4), vec![vec![4]]), Err(Error::EntryOutOfRange { value: 4, .. })));
    }

    #[test]
    fn howell_form_examples() {
        let m = z(4);
        assert_eq!(howell_form(&m, vec![vec![2, 1]], 2), vec![vec![2, 1], vec![0, 2]]);
        assert_eq!(howell_form(&m, vec![vec![1, 1], vec![2, 2]], 2), howell_form(&m, vec![vec![3, 3]], 2));
        assert_eq!(code(4, vec![vec![1, 2]]), code(4, vec![vec![3, 2]]));
        assert_ne!(code(4, vec![vec![1, 2]]), code(4, vec![vec![1, 0]]));
    }
}
