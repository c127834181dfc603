//! Integer partitions and their Young diagrams.
//!
//! A [`Partition`] is stored canonically: parts are positive and weakly
//! decreasing, so trailing zeros never appear and equality is structural.
//! Rows are indexed from 1 in the public API (`has_cell`, `part`), matching
//! the usual `(row, column)` convention for diagram cells.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{check_bound, Error, Result};

/// Largest `n` accepted by [`partitions_of`].
pub const MAX_ENUMERATION_SIZE: usize = 30;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
    size: usize,
}

impl Partition {
    /// Builds a partition from weakly decreasing positive parts.
    ///
    /// Unsorted input is rejected rather than sorted, and zeros are rejected
    /// too; use [`Partition::from_padded`] for sequences with trailing zeros.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(pos) = parts.iter().position(|&p| p == 0) {
            return Err(Error::Parse(alloc::format!("part {} is zero", pos + 1)));
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::Parse(alloc::format!(
                "parts must be weakly decreasing, found {} before {}",
                w[0], w[1]
            )));
        }
        let size = parts.iter().sum();
        Ok(Self { parts, size })
    }

    /// Accepts a weakly decreasing sequence that may end in zeros.
    pub fn from_padded(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Self::new(parts)
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        let size = parts.iter().sum();
        Self { parts, size }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The one-row partition `(n)`; empty when `n == 0`.
    pub fn row(n: usize) -> Self {
        Self::rectangle(n, 1)
    }

    /// The one-column partition `(1)^n`.
    pub fn column(n: usize) -> Self {
        Self::rectangle(1, n)
    }

    /// The rectangle `(p)^q`: `q` rows, each of length `p`.
    ///
    /// Either side being zero gives the empty partition.
    pub fn rectangle(p: usize, q: usize) -> Self {
        if p == 0 || q == 0 {
            return Self::empty();
        }
        Self::from_parts_unchecked(alloc::vec![p; q])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `|λ|`, the number of cells.
    pub fn size(&self) -> usize {
        self.size
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_i` for 1-based `i`, zero past the last part.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// First part, or 0 for the empty partition.
    pub fn width(&self) -> usize {
        self.part(1)
    }

    pub fn transpose(&self) -> Self {
        let width = self.width();
        let parts = (1..=width)
            .map(|i| self.parts.iter().take_while(|&&p| p >= i).count())
            .collect();
        Self::from_parts_unchecked(parts)
    }

    /// Whether the diagram of `self` contains the diagram of `inner`,
    /// i.e. `inner_i <= self_i` for every row.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Whether cell `(row, col)` (both 1-based) lies in the diagram.
    pub fn has_cell(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && self.part(row) >= col
    }

    /// `Some((p, q))` when `self == (p)^q`; `None` otherwise, including for
    /// the empty partition.
    pub fn rectangle_shape(&self) -> Option<(usize, usize)> {
        let first = *self.parts.first()?;
        self.parts
            .iter()
            .all(|&p| p == first)
            .then_some((first, self.len()))
    }

    /// Hook length of the 1-based cell `(row, col)`, which must lie in the diagram.
    pub fn hook_length(&self, row: usize, col: usize) -> usize {
        debug_assert!(self.has_cell(row, col));
        let arm = self.part(row) - col;
        let leg = self.parts[row - 1..].iter().filter(|&&p| p >= col).count() - 1;
        arm + leg + 1
    }

    /// Dimension of the Specht module `V_λ` by the hook length formula.
    pub fn specht_dim(&self) -> Result<u64> {
        if self.is_empty() {
            return Err(Error::EmptyPartition);
        }
        check_bound("partition size", self.size, MAX_ENUMERATION_SIZE)?;
        let numerator: u128 = (1..=self.size as u128).product();
        let mut hooks: u128 = 1;
        for (r, &len) in self.parts.iter().enumerate() {
            for c in 1..=len {
                hooks = hooks
                    .checked_mul(self.hook_length(r + 1, c) as u128)
                    .ok_or(Error::Overflow("hook product"))?;
            }
        }
        assert_eq!(numerator % hooks, 0, "hook length division must be exact");
        u64::try_from(numerator / hooks).map_err(|_| Error::Overflow("specht dimension"))
    }

    /// Adds `other`'s parts row by row (used to merge cycle types).
    pub(crate) fn union(&self, other: &Partition) -> Partition {
        let mut parts: Vec<usize> = self.parts.iter().chain(&other.parts).copied().collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_parts_unchecked(parts)
    }

    /// All partitions whose diagram is contained in `self`.
    pub fn subpartitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut prefix = Vec::with_capacity(self.len());
        fn rec(outer: &[usize], cap: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition::from_parts_unchecked(prefix.clone()));
            let Some((&first, rest)) = outer.split_first() else {
                return;
            };
            for v in (1..=first.min(cap)).rev() {
                prefix.push(v);
                rec(rest, v, prefix, out);
                prefix.pop();
            }
        }
        rec(&self.parts, usize::MAX, &mut prefix, &mut out);
        out
    }
}

/// All partitions of `n` in reverse-lexicographic order, `(n)` first.
pub fn partitions_of(n: usize) -> Result<Vec<Partition>> {
    check_bound("n", n, MAX_ENUMERATION_SIZE)?;
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    fn rec(remaining: usize, cap: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::from_parts_unchecked(prefix.clone()));
            return;
        }
        for first in (1..=remaining.min(cap)).rev() {
            prefix.push(first);
            rec(remaining - first, first, prefix, out);
            prefix.pop();
        }
    }
    rec(n, n, &mut prefix, &mut out);
    Ok(out)
}

/// Partitions of every size `0..=n`, by increasing size.
pub fn partitions_up_to(n: usize) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    for k in 0..=n {
        out.extend(partitions_of(k)?);
    }
    Ok(out)
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty partition string (use \"0\")".into()));
        }
        if s == "0" {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(alloc::format!("invalid part {:?}", tok.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

pub fn parse_partition(text: &str) -> Result<Partition> {
    text.parse()
}

impl fmt::Display for Partition {
    /// Comma separated parts; `0` for the empty partition.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        let text: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&text.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn parse_examples() {
        let l = p("5,2,2,1");
        assert_eq!(l.parts(), &[5, 2, 2, 1]);
        assert_eq!(l.size(), 10);
        assert_eq!(p("0"), Partition::empty());
        assert_eq!(p("0").size(), 0);
        assert!(matches!("2,3".parse::<Partition>(), Err(Error::Parse(_))));
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "  ", "3,0", "0,0", "a", "3,,1", "-1", "1.5"] {
            assert!(bad.parse::<Partition>().is_err(), "{bad:?} should fail");
        }
        assert_eq!(p(" 3, 1 "), p("3,1"));
        assert_eq!(Partition::from_padded(vec![2, 1, 0, 0]).unwrap(), p("2,1"));
    }

    #[test]
    fn display_round_trip() {
        assert_eq!(p("5,2,2,1").to_string(), "5,2,2,1");
        assert_eq!(Partition::empty().to_string(), "0");
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p("3").transpose(), p("1,1,1"));
        assert_eq!(p("3,3").transpose(), p("2,2,2"));
        assert_eq!(p("5,2,2,1").transpose(), p("4,3,1,1,1"));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        for n in 1..8 {
            assert_eq!(Partition::row(n).transpose(), Partition::column(n));
        }
    }

    #[test]
    fn contains_examples() {
        assert!(p("5,2,2,1").contains(&p("2,1")));
        assert!(p("3,1").contains(&p("3,1")));
        assert!(!p("3,1").contains(&p("2,2")));
        assert!(p("1").contains(&Partition::empty()));
        assert!(!Partition::empty().contains(&p("1")));
    }

    #[test]
    fn has_cell_examples() {
        let l = p("5,2,2,1");
        assert!(l.has_cell(1, 5));
        assert!(!l.has_cell(2, 3));
        assert!(l.has_cell(1, 1));
        assert!(!Partition::empty().has_cell(1, 1));
        assert!(!l.has_cell(0, 1));
    }

    #[test]
    fn rectangle_examples() {
        assert_eq!(p("2,2,2").rectangle_shape(), Some((2, 3)));
        assert_eq!(p("3,1").rectangle_shape(), None);
        assert_eq!(p("4").rectangle_shape(), Some((4, 1)));
        assert_eq!(Partition::empty().rectangle_shape(), None);
        // (p)^q has q rows of length p.
        assert_eq!(Partition::rectangle(3, 2), p("3,3"));
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(partitions_of(0).unwrap(), vec![Partition::empty()]);
        let four: Vec<_> = partitions_of(4).unwrap();
        assert_eq!(four, vec![p("4"), p("3,1"), p("2,2"), p("2,1,1"), p("1,1,1,1")]);
        assert_eq!(partitions_of(6).unwrap().len(), 11);
        assert_eq!(partitions_of(30).unwrap().len(), 5604);
        assert!(matches!(partitions_of(31), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn specht_dim_examples() {
        for n in 1..10 {
            assert_eq!(Partition::row(n).specht_dim().unwrap(), 1);
        }
        assert_eq!(p("2,1").specht_dim().unwrap(), 2);
        assert_eq!(p("3,2").specht_dim().unwrap(), 5);
        assert_eq!(Partition::empty().specht_dim(), Err(Error::EmptyPartition));
    }

    #[test]
    fn subpartitions_of_rectangle() {
        // Lattice paths in a 2x3 box: binomial(5, 2).
        let subs = Partition::rectangle(3, 2).subpartitions();
        assert_eq!(subs.len(), 10);
        assert!(subs.iter().all(|s| Partition::rectangle(3, 2).contains(s)));
    }
}
