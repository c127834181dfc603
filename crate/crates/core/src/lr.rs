//! Littlewood–Richardson coefficients by counting LR skew tableaux.
//!
//! A filling of `λ/μ` is an LR tableau when rows weakly increase, columns
//! strictly increase, and the reverse reading word (rows top to bottom, each
//! read right to left) is a lattice word. Cells are filled in reading order,
//! so the lattice condition is checked incrementally.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::characters::{induction_multiplicity, CharacterTables};
use crate::error::{check_bound, Result};
use crate::expansion::SchurExpansion;
use crate::partitions::{partitions_of, partitions_up_to, Partition};
use crate::report::VerificationReport;

struct Filler<'a> {
    outer: &'a [usize],
    inner: Vec<usize>,
    content: Option<&'a [usize]>,
    cells: Vec<(usize, usize)>,
    grid: Vec<Vec<usize>>,
    counts: Vec<usize>,
}

impl<'a> Filler<'a> {
    fn new(outer: &'a Partition, inner: &Partition, content: Option<&'a [usize]>) -> Self {
        let rows = outer.len();
        let inner: Vec<usize> = (1..=rows).map(|i| inner.part(i)).collect();
        let mut cells = Vec::new();
        for r in 0..rows {
            for c in (inner[r]..outer.parts()[r]).rev() {
                cells.push((r, c));
            }
        }
        let grid = outer.parts().iter().map(|&len| vec![usize::MAX; len]).collect();
        let counts = match content {
            Some(c) => vec![0; c.len()],
            None => Vec::new(),
        };
        Self {
            outer: outer.parts(),
            inner,
            content,
            cells,
            grid,
            counts,
        }
    }

    fn run(&mut self, visit: &mut impl FnMut(&[usize])) {
        self.place(0, visit);
    }

    fn place(&mut self, idx: usize, visit: &mut impl FnMut(&[usize])) {
        let Some(&(r, c)) = self.cells.get(idx) else {
            visit(&self.counts);
            return;
        };
        let lo = if r > 0 && c >= self.inner[r - 1] {
            self.grid[r - 1][c] + 1
        } else {
            0
        };
        let mut hi = if c + 1 < self.outer[r] {
            self.grid[r][c + 1]
        } else {
            usize::MAX
        };
        match self.content {
            Some(content) => hi = hi.min(content.len().saturating_sub(1)),
            None => hi = hi.min(self.counts.len()),
        }
        if content_is_empty(self.content) {
            return;
        }
        for v in lo..=hi {
            let used = self.counts.get(v).copied().unwrap_or(0);
            if let Some(content) = self.content {
                if used >= content[v] {
                    continue;
                }
            }
            if v > 0 && self.counts[v - 1] <= used {
                continue;
            }
            if v == self.counts.len() {
                self.counts.push(0);
            }
            self.counts[v] += 1;
            self.grid[r][c] = v;
            self.place(idx + 1, visit);
            self.grid[r][c] = usize::MAX;
            self.counts[v] -= 1;
            if self.content.is_none() && self.counts[v] == 0 && v + 1 == self.counts.len() {
                self.counts.pop();
            }
        }
    }
}

fn content_is_empty(content: Option<&[usize]>) -> bool {
    matches!(content, Some(c) if c.is_empty())
}

/// `c^λ_{μν} = [λ : μ, ν]`. Returns 0 when sizes do not add up or when
/// `μ ⊄ λ`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) || !lambda.contains(nu) {
        return 0;
    }
    if nu.is_empty() {
        return 1;
    }
    let mut count = 0;
    Filler::new(lambda, mu, Some(nu.parts())).run(&mut |_| count += 1);
    count
}

/// All `ν` with `c^λ_{μν} ≠ 0`, with their coefficients.
pub fn skew_expansion(lambda: &Partition, mu: &Partition) -> SchurExpansion {
    let mut out = SchurExpansion::new();
    if !lambda.contains(mu) {
        return out;
    }
    if lambda.size() == mu.size() {
        out.add(Partition::empty(), 1);
        return out;
    }
    let mut tally: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    Filler::new(lambda, mu, None).run(&mut |counts| {
        *tally.entry(counts.to_vec()).or_insert(0) += 1;
    });
    for (content, m) in tally {
        out.add(Partition::from_parts_unchecked(content), m);
    }
    out
}

/// Decomposition of `S_μ ⊗ S_ν` as `⊕_λ S_λ^{c^λ_{μν}}`.
///
/// # Panics
/// If `|μ| + |ν|` exceeds [`crate::partitions::MAX_ENUMERATION_SIZE`].
pub fn tensor_square_expansion(mu: &Partition, nu: &Partition) -> SchurExpansion {
    let n = mu.size() + nu.size();
    partitions_of(n)
        .expect("product size within enumeration bound")
        .into_iter()
        .filter(|l| l.contains(mu) && l.contains(nu))
        .map(|l| {
            let c = lr_coefficient(&l, mu, nu);
            (l, c)
        })
        .collect()
}

/// `[λ : μ₁, …, μ_m]` by folding two-factor LR products left to right.
pub fn iterated_lr_multiplicity(lambda: &Partition, factors: &[Partition]) -> u64 {
    let total: usize = factors.iter().map(Partition::size).sum();
    if total != lambda.size() {
        return 0;
    }
    let Some((first, rest)) = factors.split_first() else {
        return u64::from(lambda.is_empty());
    };
    let mut current: BTreeMap<Partition, u64> = BTreeMap::new();
    current.insert(first.clone(), 1);
    for factor in rest {
        let mut next: BTreeMap<Partition, u64> = BTreeMap::new();
        for (kappa, &c) in &current {
            for (l, &m) in &tensor_square_expansion(kappa, factor) {
                *next.entry(l.clone()).or_insert(0) += c * m;
            }
        }
        current = next;
    }
    current.get(lambda).copied().unwrap_or(0)
}

/// The partitions `λ` with `[λ : (p)^q, (r)^s] ≠ 0`, read off from the
/// closed-form conditions for products of two rectangles. The inputs are
/// swapped first if needed so that `q ≥ s`. Output is reverse-lexicographic.
pub fn rectangular_lr_support(p: usize, q: usize, r: usize, s: usize) -> Vec<Partition> {
    let (p, q, r, s) = if q >= s { (p, q, r, s) } else { (r, s, p, q) };
    let n = p * q + r * s;
    partitions_of(n)
        .expect("rectangle product size within enumeration bound")
        .into_iter()
        .filter(|l| {
            l.len() <= q + s
                && (s + 1..=q).all(|i| l.part(i) == p)
                && l.part(s) >= p.max(r)
                && (1..=s).all(|i| l.part(i) + l.part(q + s - i + 1) == p + r)
        })
        .collect()
}

/// Sweeps `lr_coefficient` against the character-theoretic induction
/// multiplicity over every triple with `|μ| + |ν| ≤ max_total`.
pub fn verify_lr_oracle<T: CharacterTables + ?Sized>(
    tables: &T,
    max_total: usize,
) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("lr-oracles");
    for n in 0..=max_total {
        let lambdas = partitions_of(n)?;
        for a in 0..=n {
            for mu in partitions_of(a)? {
                for nu in partitions_of(n - a)? {
                    for lambda in &lambdas {
                        let tableau = lr_coefficient(lambda, &mu, &nu);
                        let chars = induction_multiplicity(tables, lambda, &[mu.clone(), nu.clone()])?;
                        report.check(tableau == chars, || {
                            format!("[{lambda}: {mu}, {nu}]: tableaux {tableau} vs characters {chars}")
                        });
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Three-way check, for every `|μ| ≤ |λ| ≤ max_size`, that
/// (a) some `ν` has `[λ : μ, ν] ≠ 0` (computed from characters),
/// (b) `μ ⊆ λ`, and
/// (c) `[λ : μ, (1), …, (1)] ≠ 0` (computed by adding one box at a time)
/// all agree.
pub fn verify_inclusions_equivalence<T: CharacterTables + ?Sized>(
    tables: &T,
    max_size: usize,
) -> Result<VerificationReport> {
    check_bound("max_size", max_size, 10)?;
    let mut report = VerificationReport::new("inclusions");
    for lambda in partitions_up_to(max_size)? {
        for mu in partitions_up_to(lambda.size())? {
            let rest = lambda.size() - mu.size();
            let mut exists_nu = false;
            for nu in partitions_of(rest)? {
                if induction_multiplicity(tables, &lambda, &[mu.clone(), nu])? != 0 {
                    exists_nu = true;
                    break;
                }
            }
            let contained = lambda.contains(&mu);
            let mut factors = vec![mu.clone()];
            factors.extend(core::iter::repeat_n(Partition::row(1), rest));
            let boxes = iterated_lr_multiplicity(&lambda, &factors) != 0;
            report.check(exists_nu == contained && contained == boxes, || {
                format!(
                    "λ={lambda} μ={mu}: exists ν {exists_nu}, contained {contained}, box chain {boxes}"
                )
            });
        }
    }
    Ok(report)
}

/// For every `λ` with `|λ| ≤ max_size`, every `p, q, r, s ≤ max_corner` with
/// cell `(p+r+1, q+s+1)` in `λ`, and every `(μ, ν)` with `c^λ_{μν} ≠ 0`:
/// cell `(p+1, q+1)` lies in `μ` or cell `(r+1, s+1)` lies in `ν`.
pub fn verify_deligne_110(max_size: usize, max_corner: usize) -> Result<VerificationReport> {
    check_bound("max_size", max_size, 10)?;
    check_bound("max_corner", max_corner, 4)?;
    let mut report = VerificationReport::new("deligne110");
    for lambda in partitions_up_to(max_size)? {
        let corners: Vec<[usize; 4]> = corner_tuples(max_corner)
            .filter(|&[p, q, r, s]| lambda.has_cell(p + r + 1, q + s + 1))
            .collect();
        if corners.is_empty() {
            continue;
        }
        for mu in lambda.subpartitions() {
            for (nu, _) in &skew_expansion(&lambda, &mu) {
                for &[p, q, r, s] in &corners {
                    report.check(mu.has_cell(p + 1, q + 1) || nu.has_cell(r + 1, s + 1), || {
                        format!("λ={lambda} μ={mu} ν={nu} (p,q,r,s)=({p},{q},{r},{s})")
                    });
                }
            }
        }
    }
    Ok(report)
}

fn corner_tuples(max: usize) -> impl Iterator<Item = [usize; 4]> {
    (0..=max).flat_map(move |p| {
        (0..=max).flat_map(move |q| {
            (0..=max).flat_map(move |r| (0..=max).map(move |s| [p, q, r, s]))
        })
    })
}
