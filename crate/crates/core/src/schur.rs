//! Schur functors on graded objects.
//!
//! A [`GradedObject`] records a direct sum of shifted units `⊕ Σ^d 1^{m_d}`,
//! i.e. a perfect complex over ℚ up to isomorphism. Schur functors are
//! evaluated by splitting off one shifted unit (a "line") at a time and
//! applying the sum formula
//! `S_λ(A ⊕ L) = ⊕_{μ,ν} (S_μ(A) ⊗ S_ν(L))^{c^λ_{μν}}`, where `S_ν` of a line
//! is known in closed form ([`schur_of_line`]).
//!
//! [`SchurSupport`] answers only the question "is `S_λ(X)` zero", which is
//! all the cofiber and rectangle checks need and scales to much larger `λ`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{check_bound, Error, Result};
use crate::lr::skew_expansion;
use crate::partitions::{partitions_of, partitions_up_to, Partition};
use crate::report::VerificationReport;
use crate::SchurExpansion;

/// Degree-wise multiplicities of `⊕ Σ^d 1^{m_d}`. Zero multiplicities are
/// never stored, so the zero object is the empty map.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GradedObject {
    dims: BTreeMap<i64, u64>,
}

impl GradedObject {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The unit `1`, one copy in degree 0.
    pub fn unit() -> Self {
        Self::line(0)
    }

    /// `Σ^d 1`.
    pub fn line(degree: i64) -> Self {
        Self::from_pairs([(degree, 1)])
    }

    /// Sums repeated degrees and drops zero multiplicities.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (i64, u64)>) -> Self {
        let mut out = Self::zero();
        for (d, m) in pairs {
            out.add(d, m);
        }
        out
    }

    /// `1^{⊕p} ⊕ Σ1^{⊕q}`.
    pub fn units_and_shifts(p: u64, q: u64) -> Self {
        Self::from_pairs([(0, p), (1, q)])
    }

    fn add(&mut self, degree: i64, mult: u64) {
        if mult == 0 {
            return;
        }
        let slot = self.dims.entry(degree).or_insert(0);
        *slot = slot.checked_add(mult).expect("multiplicity overflow");
    }

    pub fn dims(&self) -> &BTreeMap<i64, u64> {
        &self.dims
    }

    pub fn get(&self, degree: i64) -> u64 {
        self.dims.get(&degree).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_empty()
    }

    /// Total multiplicity in even degrees.
    pub fn even_total(&self) -> u64 {
        self.dims.iter().filter(|(d, _)| *d % 2 == 0).map(|(_, m)| m).sum()
    }

    /// Total multiplicity in odd degrees.
    pub fn odd_total(&self) -> u64 {
        self.dims.iter().filter(|(d, _)| *d % 2 != 0).map(|(_, m)| m).sum()
    }

    pub fn total_dim(&self) -> u64 {
        self.dims.values().sum()
    }

    /// Euler characteristic `Σ_d (-1)^d m_d`.
    pub fn super_dimension(&self) -> i64 {
        self.even_total() as i64 - self.odd_total() as i64
    }

    /// `Σ^k X`: every degree moves up by `k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            dims: self.dims.iter().map(|(&d, &m)| (d + k, m)).collect(),
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&d, &m) in &other.dims {
            out.add(d, m);
        }
        out
    }

    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&d, &m) in &self.dims {
            for (&e, &n) in &other.dims {
                out.add(d + e, m.checked_mul(n).expect("multiplicity overflow"));
            }
        }
        out
    }

    /// `X^{⊕k}`.
    pub fn scaled(&self, k: u64) -> Self {
        Self::from_pairs(
            self.dims
                .iter()
                .map(|(&d, &m)| (d, m.checked_mul(k).expect("multiplicity overflow"))),
        )
    }

    /// `X^{⊗n}`; `X^{⊗0}` is the unit.
    pub fn tensor_power(&self, n: usize) -> Self {
        (0..n).fold(Self::unit(), |acc, _| acc.tensor(self))
    }

    /// Identifies `Σ²1` with `1`: all even degrees go to 0, odd to 1.
    pub fn collapse_parity(&self) -> Self {
        Self::units_and_shifts(self.even_total(), self.odd_total())
    }

    /// Degrees of the lines making up `X`, with repetition, ascending.
    pub fn lines(&self) -> Vec<i64> {
        self.dims
            .iter()
            .flat_map(|(&d, &m)| core::iter::repeat_n(d, m as usize))
            .collect()
    }

    /// `X` with one copy of `1` removed from degree 0.
    pub fn without_unit(&self) -> Result<Self> {
        if self.get(0) == 0 {
            return Err(Error::InvalidSplit);
        }
        let mut out = self.clone();
        let slot = out.dims.get_mut(&0).expect("checked above");
        *slot -= 1;
        if *slot == 0 {
            out.dims.remove(&0);
        }
        Ok(out)
    }
}

impl fmt::Display for GradedObject {
    /// `degree:multiplicity` pairs, comma separated; the zero object is "".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = self.dims.iter().map(|(d, m)| format!("{d}:{m}")).collect();
        f.write_str(&pairs.join(","))
    }
}

impl fmt::Debug for GradedObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

impl FromStr for GradedObject {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::zero());
        }
        let mut out = Self::zero();
        for tok in s.split(',') {
            let (d, m) = tok
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected degree:multiplicity, got {tok:?}")))?;
            let d: i64 = d
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("invalid degree {:?}", d.trim())))?;
            let m: u64 = m
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("invalid multiplicity {:?}", m.trim())))?;
            if out.dims.contains_key(&d) {
                return Err(Error::Parse(format!("degree {d} listed twice")));
            }
            out.add(d, m);
        }
        Ok(out)
    }
}

/// `S_μ(Σ^e 1)`: the unit for empty `μ`; `Σ^{e|μ|} 1` when `μ` is a row and
/// `e` is even or `μ` is a column and `e` is odd; zero otherwise.
pub fn schur_of_line(mu: &Partition, e: i64) -> GradedObject {
    if mu.is_empty() {
        return GradedObject::unit();
    }
    let n = mu.size();
    let survives = if e % 2 == 0 {
        mu.len() == 1
    } else {
        mu.width() == 1
    };
    if survives {
        GradedObject::line(e * n as i64)
    } else {
        GradedObject::zero()
    }
}

/// Size limits for [`schur_of_object`], kept so that every LR expansion it
/// needs stays small. Exceeding them is an error.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SchurBounds {
    pub max_size: usize,
    pub max_total_dim: u64,
}

impl Default for SchurBounds {
    fn default() -> Self {
        Self {
            max_size: 12,
            max_total_dim: 8,
        }
    }
}

impl SchurBounds {
    fn check(&self, lambda: &Partition, total: u64) -> Result<()> {
        check_bound("|λ|", lambda.size(), self.max_size)?;
        check_bound("total dimension", total as usize, self.max_total_dim as usize)
    }
}

/// `S_λ(X)` with the default bounds, peeling lines in ascending degree order.
pub fn schur_of_object(lambda: &Partition, x: &GradedObject) -> Result<GradedObject> {
    schur_of_object_bounded(lambda, x, &SchurBounds::default())
}

pub fn schur_of_object_bounded(
    lambda: &Partition,
    x: &GradedObject,
    bounds: &SchurBounds,
) -> Result<GradedObject> {
    schur_of_lines(lambda, &x.lines(), bounds)
}

/// `S_λ(⊕_i Σ^{lines[i]} 1)` where the last line is split off first.
/// The result does not depend on the order of `lines`.
pub fn schur_of_lines(lambda: &Partition, lines: &[i64], bounds: &SchurBounds) -> Result<GradedObject> {
    bounds.check(lambda, lines.len() as u64)?;
    let mut eval = Evaluator {
        lines,
        memo: BTreeMap::new(),
        skew: BTreeMap::new(),
    };
    Ok(eval.eval(lambda, lines.len()))
}

struct Evaluator<'a> {
    lines: &'a [i64],
    memo: BTreeMap<(Partition, usize), GradedObject>,
    skew: BTreeMap<(Partition, Partition), SchurExpansion>,
}

impl Evaluator<'_> {
    /// `S_λ` of the first `k` lines.
    fn eval(&mut self, lambda: &Partition, k: usize) -> GradedObject {
        if lambda.is_empty() {
            return GradedObject::unit();
        }
        match k {
            0 => return GradedObject::zero(),
            1 => return schur_of_line(lambda, self.lines[0]),
            _ => {}
        }
        let key = (lambda.clone(), k);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let degree = self.lines[k - 1];
        let mut out = GradedObject::zero();
        for mu in lambda.subpartitions() {
            let expansion = self
                .skew
                .entry((lambda.clone(), mu.clone()))
                .or_insert_with(|| skew_expansion(lambda, &mu))
                .clone();
            let mut rest = None;
            for (nu, &c) in &expansion {
                let tail = schur_of_line(nu, degree);
                if tail.is_zero() {
                    continue;
                }
                let head = rest.get_or_insert_with(|| self.eval(&mu, k - 1));
                if head.is_zero() {
                    break;
                }
                out = out.direct_sum(&head.tensor(&tail).scaled(c));
            }
        }
        self.memo.insert(key, out.clone());
        out
    }
}

/// Largest `|λ|` accepted by [`SchurSupport`].
pub const SUPPORT_MAX_SIZE: usize = 40;
/// Largest number of lines accepted by [`SchurSupport`].
pub const SUPPORT_MAX_LINES: u64 = 24;

/// Decides whether `S_λ(X)` vanishes.
///
/// Lines are peeled even-degree first. Peeling an even line removes a
/// horizontal strip (the only `ν` with `S_ν(Σ^{2k}1) ≠ 0` are rows, and
/// `c^μ_{κ,(j)} ≠ 0` exactly when `μ/κ` is a horizontal strip), an odd line
/// removes a vertical strip. `S_λ(X) ≠ 0` iff some sequence of removals
/// empties `λ`. Since whether `S_ν` of a line vanishes depends only on the
/// parity of its degree, the memo is keyed on `(μ, #even, #odd)` and can be
/// shared across objects.
#[derive(Debug, Default)]
pub struct SchurSupport {
    memo: BTreeMap<(Partition, u64, u64), bool>,
}

impl SchurSupport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vanishes(&mut self, lambda: &Partition, x: &GradedObject) -> Result<bool> {
        check_bound("|λ|", lambda.size(), SUPPORT_MAX_SIZE)?;
        check_bound("total dimension", x.total_dim() as usize, SUPPORT_MAX_LINES as usize)?;
        Ok(!self.nonzero(lambda, x.even_total(), x.odd_total()))
    }

    fn nonzero(&mut self, mu: &Partition, evens: u64, odds: u64) -> bool {
        if mu.is_empty() {
            return true;
        }
        if evens == 0 && odds == 0 {
            return false;
        }
        let key = (mu.clone(), evens, odds);
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let found = if evens > 0 {
            horizontal_strip_removals(mu)
                .iter()
                .any(|kappa| self.nonzero(kappa, evens - 1, odds))
        } else {
            vertical_strip_removals(mu)
                .iter()
                .any(|kappa| self.nonzero(kappa, evens, odds - 1))
        };
        self.memo.insert(key, found);
        found
    }
}

/// `S_λ(X) ≅ 0`, decided by [`SchurSupport`].
pub fn schur_vanishes(lambda: &Partition, x: &GradedObject) -> Result<bool> {
    SchurSupport::new().vanishes(lambda, x)
}

/// Every `κ ⊆ μ` such that `μ/κ` is a horizontal strip (including `κ = μ`).
pub fn horizontal_strip_removals(mu: &Partition) -> Vec<Partition> {
    let parts = mu.parts();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(parts.len());
    fn rec(parts: &[usize], i: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == parts.len() {
            let trimmed: Vec<usize> = current.iter().copied().filter(|&v| v > 0).collect();
            out.push(Partition::from_parts_unchecked(trimmed));
            return;
        }
        let lower = parts.get(i + 1).copied().unwrap_or(0);
        for v in (lower..=parts[i]).rev() {
            current.push(v);
            rec(parts, i + 1, current, out);
            current.pop();
        }
    }
    rec(parts, 0, &mut current, &mut out);
    out
}

/// Every `κ ⊆ μ` such that `μ/κ` is a vertical strip (including `κ = μ`).
pub fn vertical_strip_removals(mu: &Partition) -> Vec<Partition> {
    horizontal_strip_removals(&mu.transpose())
        .into_iter()
        .map(|k| k.transpose())
        .collect()
}

/// Whether `S_λ(1^{⊕p} ⊕ Σ1^{⊕q})` vanishes, read off as the cell test
/// `(p+1, q+1) ∈ [λ]`.
pub fn hook_vanishing_test(lambda: &Partition, p: usize, q: usize) -> bool {
    lambda.has_cell(p + 1, q + 1)
}

/// The smallest partition killing `X`, as `(columns, rows)`: the rectangle
/// `(q₀+1)^{p₀+1}` where `p₀`/`q₀` are the even/odd totals of `X`.
pub fn minimal_annihilating_rectangle(x: &GradedObject) -> Result<(usize, usize)> {
    if x.is_zero() {
        return Err(Error::ZeroObject);
    }
    check_bound(
        "total dimension",
        x.total_dim() as usize,
        SchurBounds::default().max_total_dim as usize,
    )?;
    Ok((x.odd_total() as usize + 1, x.even_total() as usize + 1))
}

/// Checks, for a nonzero `X` with minimal rectangle `(a)^b`, that
/// the rectangle kills `X`, every killing partition up to its size contains it,
/// `p₀ ≤ b−1` and `q₀ ≤ a−1` (with equality), `sdim X = b − a`, and
/// `1 − a ≤ sdim X ≤ b − 1`.
pub fn verify_dimension_window(x: &GradedObject) -> Result<VerificationReport> {
    let (a, b) = minimal_annihilating_rectangle(x)?;
    let rect = Partition::rectangle(a, b);
    let mut report = VerificationReport::new("dimension-window");
    let mut support = SchurSupport::new();
    report.check(support.vanishes(&rect, x)?, || {
        format!("X={x}: rectangle {rect} does not annihilate X")
    });
    for lambda in partitions_up_to(rect.size())? {
        if support.vanishes(&lambda, x)? {
            report.check(lambda.contains(&rect), || {
                format!("X={x}: {lambda} annihilates X but does not contain {rect}")
            });
        }
    }
    let (p0, q0) = (x.even_total() as i64, x.odd_total() as i64);
    let (a, b) = (a as i64, b as i64);
    let sdim = x.super_dimension();
    report.check(p0 == b - 1 && q0 == a - 1, || {
        format!("X={x}: totals ({p0},{q0}) vs window ({},{})", b - 1, a - 1)
    });
    report.check(sdim == b - a, || format!("X={x}: sdim {sdim} != b - a = {}", b - a));
    report.check((1 - a..=b - 1).contains(&sdim), || {
        format!("X={x}: sdim {sdim} outside [{}, {}]", 1 - a, b - 1)
    });
    Ok(report)
}

/// Checks that every partition of `n·m` contains `(n)` or `(1)^m`, and that
/// for each trial object, `Sym^n X = 0` together with `Λ^m X = 0` forces `X = 0`.
pub fn verify_kill_sym_and_alt(n: usize, m: usize, trials: &[GradedObject]) -> Result<VerificationReport> {
    check_bound("n·m", n * m, 12)?;
    let mut report = VerificationReport::new("kill-sym-alt");
    let (row, column) = (Partition::row(n), Partition::column(m));
    let k = n * m;
    for lambda in partitions_of(k)? {
        report.check(lambda.contains(&row) || lambda.contains(&column), || {
            format!("{lambda} ⊢ {k} contains neither {row} nor {column}")
        });
    }
    for x in trials {
        let sym = schur_of_object(&row, x)?;
        let alt = schur_of_object(&column, x)?;
        if sym.is_zero() && alt.is_zero() {
            report.check(x.is_zero(), || {
                format!("X={x}: Sym^{n} and Λ^{m} vanish on a nonzero object")
            });
        }
    }
    Ok(report)
}

/// The fiber `Y` of `1 → X` in the semisimple model: for the zero map
/// `Y = 1 ⊕ Σ^{-1}X`; for a split map `Y = Σ^{-1}(X − 1)`.
pub fn cofiber_fiber(x: &GradedObject, split_case: bool) -> Result<GradedObject> {
    if split_case {
        Ok(x.without_unit()?.shift(-1))
    } else {
        Ok(GradedObject::unit().direct_sum(&x.shift(-1)))
    }
}

/// Largest rectangle side used by [`cofiber_bound_check`].
pub const COFIBER_MAX_SIDE: usize = 5;

/// For every `(p)^q` with `p, q ≤ 5` killing `X`, checks that `(q)^{p+1}`
/// kills the fiber `Y` of `1 → X`.
pub fn cofiber_bound_check(x: &GradedObject, split_case: bool) -> Result<VerificationReport> {
    cofiber_bound_check_with(&mut SchurSupport::new(), x, split_case)
}

pub fn cofiber_bound_check_with(
    support: &mut SchurSupport,
    x: &GradedObject,
    split_case: bool,
) -> Result<VerificationReport> {
    let y = cofiber_fiber(x, split_case)?;
    let mut report = VerificationReport::new("cofiber");
    for p in 1..=COFIBER_MAX_SIDE {
        for q in 1..=COFIBER_MAX_SIDE {
            if !support.vanishes(&Partition::rectangle(p, q), x)? {
                continue;
            }
            let target = Partition::rectangle(q, p + 1);
            let ok = support.vanishes(&target, &y)?;
            report.check(ok, || {
                format!(
                    "X={x} split={split_case}: ({p})^{q} kills X but ({q})^{} = {target} does not kill Y={y}",
                    p + 1
                )
            });
        }
    }
    Ok(report)
}

/// All graded objects supported in `degrees` with total dimension at most
/// `max_total` and each multiplicity at most `max_mult`, including zero.
pub fn graded_battery(
    degrees: core::ops::RangeInclusive<i64>,
    max_mult: u64,
    max_total: u64,
) -> Vec<GradedObject> {
    let degrees: Vec<i64> = degrees.collect();
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(
        degrees: &[i64],
        max_mult: u64,
        budget: u64,
        current: &mut Vec<(i64, u64)>,
        out: &mut Vec<GradedObject>,
    ) {
        let Some((&d, rest)) = degrees.split_first() else {
            out.push(GradedObject::from_pairs(current.iter().copied()));
            return;
        };
        for m in 0..=max_mult.min(budget) {
            current.push((d, m));
            rec(rest, max_mult, budget - m, current, out);
            current.pop();
        }
    }
    rec(&degrees, max_mult, max_total, &mut current, &mut out);
    out
}

/// `S_λ(X) ≅ 0` ⟺ `(p+1, q+1) ∈ [λ]` for `X = 1^p ⊕ Σ1^q`, all `|λ| ≤ max_size`
/// and `p, q ≤ max_pq` with `p + q ≥ 1`, using the full recursion.
pub fn verify_hook_vanishing(max_size: usize, max_pq: u64) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("hook");
    for lambda in partitions_up_to(max_size)? {
        for p in 0..=max_pq {
            for q in 0..=max_pq {
                if p + q == 0 {
                    continue;
                }
                let x = GradedObject::units_and_shifts(p, q);
                let constructive = schur_of_object(&lambda, &x)?.is_zero();
                let hook = hook_vanishing_test(&lambda, p as usize, q as usize);
                report.check(constructive == hook, || {
                    format!("λ={lambda} p={p} q={q}: recursion zero={constructive}, hook test={hook}")
                });
            }
        }
    }
    Ok(report)
}

/// `S_λ(ΣX) = Σ^{|λ|} S_{λᵗ}(X)` for `1 ≤ |λ| ≤ max_size` over `battery`.
pub fn verify_shift_rule(max_size: usize, battery: &[GradedObject]) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("shifts");
    for lambda in partitions_up_to(max_size)?.iter().filter(|l| !l.is_empty()) {
        for x in battery {
            let lhs = schur_of_object(lambda, &x.shift(1))?;
            let rhs = schur_of_object(&lambda.transpose(), x)?.shift(lambda.size() as i64);
            report.check(lhs == rhs, || {
                format!("λ={lambda} X={x}: S_λ(ΣX)={lhs} but Σ^n S_λᵗ(X)={rhs}")
            });
        }
    }
    Ok(report)
}

/// For `1 ≤ n ≤ max_n` and each `X` in `battery`:
/// `⊕_{λ⊢n} S_λ(X)^{dim V_λ} = X^{⊗n}` as graded objects,
/// `Σ dim V_λ · sdim S_λ(X) = (sdim X)^n`, and the analogue for total dimension.
pub fn verify_euler(max_n: usize, battery: &[GradedObject]) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("euler");
    for n in 1..=max_n {
        let lambdas = partitions_of(n)?;
        for x in battery {
            let mut sum = GradedObject::zero();
            let mut sdim_sum: i64 = 0;
            let mut total_sum: u64 = 0;
            for lambda in &lambdas {
                let s = schur_of_object(lambda, x)?;
                let d = lambda.specht_dim()?;
                sdim_sum += d as i64 * s.super_dimension();
                total_sum += d * s.total_dim();
                sum = sum.direct_sum(&s.scaled(d));
            }
            let power = x.tensor_power(n);
            report.check(sum == power, || {
                format!("X={x} n={n}: ⊕ S_λ(X)^dim = {sum} but X^⊗n = {power}")
            });
            let expected = x.super_dimension().pow(n as u32);
            report.check(sdim_sum == expected, || {
                format!("X={x} n={n}: Σ dim·sdim = {sdim_sum}, (sdim X)^n = {expected}")
            });
            let expected_total = x.total_dim().pow(n as u32);
            report.check(total_sum == expected_total, || {
                format!("X={x} n={n}: Σ dim·total = {total_sum}, (dim X)^n = {expected_total}")
            });
        }
    }
    Ok(report)
}

impl GradedObject {
    /// Short label for reports.
    pub fn label(&self) -> String {
        if self.is_zero() {
            "0".to_string()
        } else {
            self.to_string()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn g(s: &str) -> GradedObject {
        s.parse().unwrap()
    }

    #[test]
    fn graded_text_format() {
        let x = g("-1:1,0:2,1:1");
        assert_eq!(x.get(-1), 1);
        assert_eq!(x.get(0), 2);
        assert_eq!(x.to_string(), "-1:1,0:2,1:1");
        assert_eq!(g(""), GradedObject::zero());
        assert_eq!(g("0:0"), GradedObject::zero());
        assert!("0".parse::<GradedObject>().is_err());
        assert!("0:1,0:2".parse::<GradedObject>().is_err());
        assert!("a:1".parse::<GradedObject>().is_err());
        assert!("1:-1".parse::<GradedObject>().is_err());
    }

    #[test]
    fn super_dimension_examples() {
        for pp in 0..4 {
            for qq in 0..4 {
                assert_eq!(
                    GradedObject::units_and_shifts(pp, qq).super_dimension(),
                    pp as i64 - qq as i64
                );
            }
        }
        assert_eq!(GradedObject::zero().super_dimension(), 0);
        assert_eq!(g("-1:1,0:2").super_dimension(), 1);
    }

    #[test]
    fn line_examples() {
        assert_eq!(schur_of_line(&p("1,1"), 1), g("2:1"));
        assert!(schur_of_line(&p("2"), 1).is_zero());
        assert_eq!(schur_of_line(&p("3"), 2), g("6:1"));
        assert!(schur_of_line(&p("2,1"), 2).is_zero());
        assert_eq!(schur_of_line(&Partition::empty(), 5), GradedObject::unit());
        assert_eq!(schur_of_line(&p("1,1,1"), -1), g("-3:1"));
    }

    #[test]
    fn object_examples() {
        let x = g("0:1,1:1");
        assert_eq!(schur_of_object(&p("2"), &x).unwrap(), g("0:1,1:1"));
        assert_eq!(schur_of_object(&p("1,1"), &x).unwrap(), g("1:1,2:1"));
        assert!(schur_of_object(&p("2,2"), &x).unwrap().is_zero());
        assert_eq!(schur_of_object(&Partition::empty(), &GradedObject::zero()).unwrap(), GradedObject::unit());
        assert!(matches!(
            schur_of_object(&Partition::row(13), &x),
            Err(Error::BoundExceeded { .. })
        ));
        assert!(matches!(
            schur_of_object(&p("1"), &g("0:9")),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn classical_dimensions() {
        // Sym^2 and Λ^2 of a 3-dimensional even object.
        let v = g("0:3");
        assert_eq!(schur_of_object(&p("2"), &v).unwrap(), g("0:6"));
        assert_eq!(schur_of_object(&p("1,1"), &v).unwrap(), g("0:3"));
        assert_eq!(schur_of_object(&p("2,1"), &v).unwrap(), g("0:8"));
    }

    #[test]
    fn hook_examples() {
        assert!(hook_vanishing_test(&p("2,2"), 1, 1));
        for n in 1..8 {
            assert!(!hook_vanishing_test(&Partition::row(n), 1, 0));
        }
        assert!(!hook_vanishing_test(&p("1,1,1"), 0, 1));
        assert_eq!(schur_of_object(&p("1,1,1"), &g("1:1")).unwrap(), g("3:1"));
    }

    #[test]
    fn minimal_rectangle_examples() {
        assert_eq!(minimal_annihilating_rectangle(&g("0:1,1:1")).unwrap(), (2, 2));
        assert_eq!(minimal_annihilating_rectangle(&g("0:3")).unwrap(), (1, 4));
        assert_eq!(minimal_annihilating_rectangle(&g("1:2")).unwrap(), (3, 1));
        assert_eq!(minimal_annihilating_rectangle(&GradedObject::zero()), Err(Error::ZeroObject));
    }

    #[test]
    fn dimension_window_examples() {
        for (x, sdim) in [("0:1,1:1", 0), ("0:2", 2), ("1:3", -3)] {
            let x = g(x);
            assert_eq!(x.super_dimension(), sdim);
            let r = verify_dimension_window(&x).unwrap();
            assert!(r.passed(), "{:?}", r.counterexamples);
        }
        assert_eq!(verify_dimension_window(&GradedObject::zero()), Err(Error::ZeroObject));
    }

    #[test]
    fn kill_sym_alt_examples() {
        let battery = graded_battery(-1..=1, 2, 3);
        for (n, m) in [(2, 2), (2, 3), (3, 4)] {
            let r = verify_kill_sym_and_alt(n, m, &battery).unwrap();
            assert!(r.passed(), "{:?}", r.counterexamples);
        }
        assert_eq!(partitions_of(4).unwrap().len(), 5);
        assert!(verify_kill_sym_and_alt(4, 4, &[]).is_err());
    }

    #[test]
    fn cofiber_examples() {
        let y = cofiber_fiber(&g("0:1,1:1"), false).unwrap();
        assert_eq!(y, g("-1:1,0:2"));
        assert!(schur_vanishes(&p("2,2"), &g("0:1,1:1")).unwrap());
        assert!(schur_vanishes(&p("2,2,2"), &y).unwrap());
        assert!(cofiber_bound_check(&g("0:1,1:1"), false).unwrap().passed());

        let y = cofiber_fiber(&g("0:1"), true).unwrap();
        assert!(y.is_zero());
        let r = cofiber_bound_check(&g("0:1"), true).unwrap();
        assert!(r.passed() && r.checks > 0);

        // orientation regression: (2)^1 = (2) kills Σ1, so (1)^3 must kill Y = 1^2
        let y = cofiber_fiber(&g("1:1"), false).unwrap();
        assert_eq!(y, g("0:2"));
        assert!(schur_vanishes(&Partition::rectangle(2, 1), &g("1:1")).unwrap());
        assert!(!schur_vanishes(&Partition::rectangle(1, 2), &g("1:1")).unwrap());
        assert!(schur_vanishes(&Partition::rectangle(1, 3), &y).unwrap());
        assert!(!schur_vanishes(&Partition::rectangle(2, 2), &y).unwrap());
        assert!(cofiber_bound_check(&g("1:1"), false).unwrap().passed());

        assert_eq!(cofiber_bound_check(&g("1:1"), true), Err(Error::InvalidSplit));
    }

    #[test]
    fn strips() {
        let h = horizontal_strip_removals(&p("2,1"));
        assert_eq!(h, vec![p("2,1"), p("2"), p("1,1"), p("1")]);
        let v = vertical_strip_removals(&p("2,1"));
        assert_eq!(v.len(), 4);
        assert!(v.contains(&p("1")) && v.contains(&p("2")) && v.contains(&p("1,1")));
        assert!(!v.contains(&Partition::empty()));
        assert_eq!(vertical_strip_removals(&p("1,1")), vec![p("1,1"), p("1"), Partition::empty()]);
    }

    #[test]
    fn battery_counts() {
        assert_eq!(graded_battery(0..=1, 3, 3).len(), 10);
        assert_eq!(graded_battery(-2..=2, 3, 15).len(), 1024);
    }
}
