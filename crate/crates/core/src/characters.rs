//! Irreducible characters of the symmetric groups.
//!
//! Character values come from the Murnaghan–Nakayama rule, implemented on
//! beta-sets: removing a rim hook of length `k` is moving one bead `k`
//! positions down onto an empty slot, with sign `(-1)^(beads jumped)`.
//! Induction and Kronecker multiplicities are computed from these values as
//! exact class-weighted inner products, and serve as an independent check on
//! the tableau-counting code in [`crate::lr`].

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::cell::OnceCell;
use core::fmt;

use crate::error::{check_bound, Error, Result};
use crate::partitions::{partitions_of, Partition};
use crate::report::VerificationReport;

/// Default largest `n` for which character tables are built.
pub const MAX_TABLE_N: usize = 12;

/// A partition of `n` read as the cycle type of a permutation in `Σ_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType(Partition);

impl CycleType {
    pub fn new(cycles: Partition) -> Self {
        Self(cycles)
    }

    pub fn identity(n: usize) -> Self {
        Self(Partition::column(n))
    }

    pub fn partition(&self) -> &Partition {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.size()
    }

    /// `Π_k k^{m_k} · m_k!` where `m_k` counts cycles of length `k`.
    pub fn centralizer_order(&self) -> u64 {
        let mut order: u64 = 1;
        let parts = self.0.parts();
        let mut i = 0;
        while i < parts.len() {
            let k = parts[i] as u64;
            let run = parts[i..].iter().take_while(|&&p| p as u64 == k).count();
            for m in 1..=run as u64 {
                order = order
                    .checked_mul(k * m)
                    .expect("centralizer order overflows u64");
            }
            i += run;
        }
        order
    }

    /// Size of the conjugacy class, `n! / centralizer_order`.
    pub fn class_size(&self) -> u64 {
        let z = self.centralizer_order();
        let fact = factorial(self.degree());
        debug_assert_eq!(fact % z, 0);
        fact / z
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycleType({})", self.0)
    }
}

pub(crate) fn factorial(n: usize) -> u64 {
    (1..=n as u64).fold(1u64, |acc, k| acc.checked_mul(k).expect("factorial overflows u64"))
}

fn beta_set(lambda: &Partition) -> Vec<usize> {
    let len = lambda.len();
    lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + len - 1 - i)
        .collect()
}

fn from_beta_set(mut beta: Vec<usize>) -> Partition {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let len = beta.len();
    let parts: Vec<usize> = beta
        .iter()
        .enumerate()
        .map(|(i, &b)| b - (len - 1 - i))
        .filter(|&p| p > 0)
        .collect();
    Partition::from_parts_unchecked(parts)
}

/// Every way to remove a rim hook of length `k`, as `(remainder, sign)`.
pub fn remove_rim_hooks(lambda: &Partition, k: usize) -> Vec<(Partition, i64)> {
    let beta = beta_set(lambda);
    let mut out = Vec::new();
    if k == 0 {
        return out;
    }
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let jumped = beta.iter().filter(|&&c| c > target && c < b).count();
        let mut next = beta.clone();
        next[idx] = target;
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        out.push((from_beta_set(next), sign));
    }
    out
}

/// `χ^λ(ρ)` by recursive rim-hook removal.
pub fn mn_character(lambda: &Partition, rho: &CycleType) -> Result<i64> {
    if lambda.size() != rho.degree() {
        return Err(Error::SizeMismatch {
            expected: lambda.size(),
            actual: rho.degree(),
        });
    }
    let mut memo = BTreeMap::new();
    Ok(mn_rec(lambda, rho.partition().parts(), &mut memo))
}

fn mn_rec(
    lambda: &Partition,
    cycles: &[usize],
    memo: &mut BTreeMap<(Partition, Vec<usize>), i64>,
) -> i64 {
    let Some((&k, rest)) = cycles.split_first() else {
        return if lambda.is_empty() { 1 } else { 0 };
    };
    if rest.is_empty() {
        // a single rim hook must be the whole shape
        return remove_rim_hooks(lambda, k)
            .into_iter()
            .filter(|(rem, _)| rem.is_empty())
            .map(|(_, sign)| sign)
            .sum();
    }
    let key = (lambda.clone(), cycles.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let value = remove_rim_hooks(lambda, k)
        .into_iter()
        .map(|(rem, sign)| sign * mn_rec(&rem, rest, memo))
        .sum();
    memo.insert(key, value);
    value
}

/// The full character table of `Σ_n`; rows and columns both follow the
/// reverse-lexicographic order of [`partitions_of`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    n: usize,
    partitions: Vec<Partition>,
    classes: Vec<CycleType>,
    class_sizes: Vec<u64>,
    values: Vec<Vec<i64>>,
    index: BTreeMap<Partition, usize>,
}

impl CharacterTable {
    pub fn build(n: usize) -> Result<Self> {
        Self::build_bounded(n, MAX_TABLE_N)
    }

    pub fn build_bounded(n: usize, bound: usize) -> Result<Self> {
        check_bound("n", n, bound)?;
        let partitions = partitions_of(n)?;
        let classes: Vec<CycleType> = partitions.iter().cloned().map(CycleType).collect();
        let class_sizes = classes.iter().map(CycleType::class_size).collect();
        let mut memo = BTreeMap::new();
        let values = partitions
            .iter()
            .map(|l| {
                classes
                    .iter()
                    .map(|c| mn_rec(l, c.partition().parts(), &mut memo))
                    .collect()
            })
            .collect();
        let index = partitions
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        Ok(Self {
            n,
            partitions,
            classes,
            class_sizes,
            values,
            index,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn classes(&self) -> &[CycleType] {
        &self.classes
    }

    pub fn class_sizes(&self) -> &[u64] {
        &self.class_sizes
    }

    pub fn index_of(&self, lambda: &Partition) -> Option<usize> {
        self.index.get(lambda).copied()
    }

    /// Row of character values for `λ`, aligned with [`Self::classes`].
    pub fn row(&self, lambda: &Partition) -> Option<&[i64]> {
        self.index_of(lambda).map(|i| self.values[i].as_slice())
    }

    pub fn value(&self, lambda: &Partition, rho: &CycleType) -> Option<i64> {
        let i = self.index_of(lambda)?;
        let j = self.index_of(rho.partition())?;
        Some(self.values[i][j])
    }

    pub fn order(&self) -> u64 {
        factorial(self.n)
    }
}

/// Source of (possibly cached) character tables.
pub trait CharacterTables {
    fn table(&self, n: usize) -> Result<&CharacterTable>;
}

/// Fill-once, single-threaded table cache.
pub struct LocalTables {
    cells: Vec<OnceCell<CharacterTable>>,
}

impl LocalTables {
    pub fn new() -> Self {
        Self::with_bound(MAX_TABLE_N)
    }

    pub fn with_bound(bound: usize) -> Self {
        Self {
            cells: (0..=bound).map(|_| OnceCell::new()).collect(),
        }
    }
}

impl Default for LocalTables {
    fn default() -> Self {
        Self::new()
    }
}

impl CharacterTables for LocalTables {
    fn table(&self, n: usize) -> Result<&CharacterTable> {
        let bound = self.cells.len() - 1;
        let cell = self.cells.get(n).ok_or(Error::BoundExceeded {
            what: "n",
            value: n,
            bound,
        })?;
        if let Some(t) = cell.get() {
            return Ok(t);
        }
        let built = CharacterTable::build_bounded(n, bound)?;
        Ok(cell.get_or_init(|| built))
    }
}

/// `[λ : μ, ν]` by Frobenius reciprocity: the multiplicity of `χ^μ × χ^ν` in
/// the restriction of `χ^λ` to `Σ_a × Σ_b`.
fn induction_pair<T: CharacterTables + ?Sized>(
    tables: &T,
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> Result<u64> {
    let (a, b) = (mu.size(), nu.size());
    if a + b != lambda.size() {
        return Err(Error::SizeMismatch {
            expected: lambda.size(),
            actual: a + b,
        });
    }
    let (ta, tb, tn) = (tables.table(a)?, tables.table(b)?, tables.table(a + b)?);
    let row_mu = ta.row(mu).expect("partition of a");
    let row_nu = tb.row(nu).expect("partition of b");
    let mut sum: i128 = 0;
    for (i, rho) in ta.classes().iter().enumerate() {
        if row_mu[i] == 0 {
            continue;
        }
        for (j, sigma) in tb.classes().iter().enumerate() {
            if row_nu[j] == 0 {
                continue;
            }
            let merged = CycleType(rho.partition().union(sigma.partition()));
            let chi = tn.value(lambda, &merged).expect("class of n");
            sum += ta.class_sizes()[i] as i128
                * tb.class_sizes()[j] as i128
                * row_mu[i] as i128
                * row_nu[j] as i128
                * chi as i128;
        }
    }
    let order = ta.order() as i128 * tb.order() as i128;
    assert_eq!(sum % order, 0, "induction inner product must be integral");
    let m = sum / order;
    assert!(m >= 0, "multiplicity must be nonnegative");
    Ok(m as u64)
}

/// `[λ : μ₁, …, μ_m]`, the multiplicity of `V_λ` in the representation
/// induced from `V_{μ₁} ⊠ … ⊠ V_{μ_m}`, computed by iterated two-factor
/// induction. With no factors this is 1 exactly when `λ` is empty.
pub fn induction_multiplicity<T: CharacterTables + ?Sized>(
    tables: &T,
    lambda: &Partition,
    factors: &[Partition],
) -> Result<u64> {
    let total: usize = factors.iter().map(Partition::size).sum();
    if total != lambda.size() {
        return Err(Error::SizeMismatch {
            expected: lambda.size(),
            actual: total,
        });
    }
    let Some((first, rest)) = factors.split_first() else {
        return Ok(u64::from(lambda.is_empty()));
    };
    let mut current: BTreeMap<Partition, u64> = BTreeMap::new();
    current.insert(first.clone(), 1);
    let mut size = first.size();
    for factor in rest {
        size += factor.size();
        let mut next = BTreeMap::new();
        for kappa in partitions_of(size)? {
            let mut m = 0;
            for (prev, &c) in &current {
                m += c * induction_pair(tables, &kappa, prev, factor)?;
            }
            if m > 0 {
                next.insert(kappa, m);
            }
        }
        current = next;
    }
    Ok(current.get(lambda).copied().unwrap_or(0))
}

/// Multiplicity of `V_λ` in the internal tensor product `V_μ ⊗ V_ν`.
pub fn kronecker_multiplicity<T: CharacterTables + ?Sized>(
    tables: &T,
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> Result<u64> {
    let n = lambda.size();
    for other in [mu, nu] {
        if other.size() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                actual: other.size(),
            });
        }
    }
    let table = tables.table(n)?;
    let (rl, rm, rn) = (
        table.row(lambda).expect("partition of n"),
        table.row(mu).expect("partition of n"),
        table.row(nu).expect("partition of n"),
    );
    let sum: i128 = (0..table.classes().len())
        .map(|j| table.class_sizes()[j] as i128 * rl[j] as i128 * rm[j] as i128 * rn[j] as i128)
        .sum();
    let order = table.order() as i128;
    assert_eq!(sum % order, 0, "Kronecker inner product must be integral");
    let m = sum / order;
    assert!(m >= 0, "multiplicity must be nonnegative");
    Ok(m as u64)
}

/// Row and column orthogonality for `n ≤ orthogonality_n`,
/// `Σ_λ (dim V_λ)² = n!` for `n ≤ dimension_n`, and
/// `Σ_λ g(λ,μ,ν)·dim V_λ = dim V_μ · dim V_ν` for `n ≤ kronecker_n`.
pub fn verify_character_integrity<T: CharacterTables + ?Sized>(
    tables: &T,
    orthogonality_n: usize,
    dimension_n: usize,
    kronecker_n: usize,
) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("characters");
    for n in 0..=orthogonality_n {
        let t = tables.table(n)?;
        let k = t.classes().len();
        let order = t.order() as i128;
        for (i, a) in t.partitions().iter().enumerate() {
            let ra = t.row(a).expect("partition of n");
            for b in &t.partitions()[i..] {
                let rb = t.row(b).expect("partition of n");
                let s: i128 = (0..k)
                    .map(|j| t.class_sizes()[j] as i128 * ra[j] as i128 * rb[j] as i128)
                    .sum();
                let expected = if a == b { order } else { 0 };
                report.check(s == expected, || format!("n={n}: <χ^{a}, χ^{b}> = {s}/{order}"));
            }
        }
        for j in 0..k {
            for j2 in j..k {
                let s: i128 = t
                    .partitions()
                    .iter()
                    .map(|l| {
                        let r = t.row(l).expect("partition of n");
                        r[j] as i128 * r[j2] as i128
                    })
                    .sum();
                let expected = if j == j2 {
                    t.classes()[j].centralizer_order() as i128
                } else {
                    0
                };
                report.check(s == expected, || {
                    format!("n={n}: columns {} and {} give {s}", t.classes()[j], t.classes()[j2])
                });
            }
        }
    }
    for n in 1..=dimension_n {
        let mut sum: u64 = 0;
        for lambda in partitions_of(n)? {
            let d = lambda.specht_dim()?;
            sum += d * d;
        }
        let fact = factorial(n);
        report.check(sum == fact, || format!("n={n}: Σ dim² = {sum} vs n! = {fact}"));
    }
    for n in 1..=kronecker_n {
        let all = partitions_of(n)?;
        for (i, mu) in all.iter().enumerate() {
            for nu in &all[i..] {
                let mut weighted = 0;
                for lambda in &all {
                    weighted += kronecker_multiplicity(tables, lambda, mu, nu)? * lambda.specht_dim()?;
                }
                let expected = mu.specht_dim()? * nu.specht_dim()?;
                report.check(weighted == expected, || {
                    format!("V_{mu} ⊗ V_{nu}: weighted sum {weighted} vs {expected}")
                });
            }
        }
    }
    Ok(report)
}
