//! Prime tensor ideals of the free rational symmetric monoidal category on
//! one object, truncated at a maximal partition size.
//!
//! The category is semisimple with simples `S_λ(X)`, so a thick tensor ideal
//! is a set of partitions closed upward under diagram containment. An ideal
//! `P` is prime when `S_μ ⊗ S_ν ∈ P` (i.e. every LR constituent of `μ·ν`
//! lies in `P`) forces `μ ∈ P` or `ν ∈ P`. The nonzero primes are
//! `P_{(p,q)} = {λ : (p)^q ⊆ λ}`.
//!
//! A truncation at `N` only sees partitions of size `≤ N` and only tests
//! products with `|μ| + |ν| ≤ N`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{check_bound, Error, Result};
use crate::lr::{rectangular_lr_support, tensor_square_expansion};
use crate::partitions::{partitions_up_to, Partition};
use crate::report::VerificationReport;

/// Largest truncation size for antichain enumeration.
pub const MAX_ENUMERATION_N: usize = 6;

/// Label `(p, q)` of the prime generated by the rectangle `(p)^q`
/// (`q` rows of length `p`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeLabel {
    pub p: usize,
    pub q: usize,
}

impl PrimeLabel {
    pub fn new(p: usize, q: usize) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::Parse(format!("prime label ({p},{q}) must be positive")));
        }
        Ok(Self { p, q })
    }

    pub fn rectangle(&self) -> Partition {
        Partition::rectangle(self.p, self.q)
    }

    /// The label of the transposed prime.
    pub fn transpose(&self) -> Self {
        Self { p: self.q, q: self.p }
    }
}

impl fmt::Display for PrimeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// `λ ∈ P_{(p,q)}`, i.e. `(p)^q ⊆ λ`, i.e. `λ_q ≥ p`.
pub fn prime_membership(label: PrimeLabel, lambda: &Partition) -> bool {
    lambda.part(label.q) >= label.p
}

/// Size first, then reverse-lexicographic: the order used for listing
/// partitions throughout this module.
pub fn canonical_cmp(a: &Partition, b: &Partition) -> Ordering {
    a.size().cmp(&b.size()).then_with(|| b.parts().cmp(a.parts()))
}

/// An upward-closed, proper set of partitions of size `≤ max_size`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealTruncation {
    max_size: usize,
    members: BTreeSet<Partition>,
}

impl IdealTruncation {
    /// Validates the type invariants: sizes within bound, properness, upward closure.
    pub fn new(max_size: usize, members: impl IntoIterator<Item = Partition>) -> Result<Self> {
        let members: BTreeSet<Partition> = members.into_iter().collect();
        if members.contains(&Partition::empty()) {
            return Err(Error::ImproperIdeal);
        }
        if let Some(big) = members.iter().find(|m| m.size() > max_size) {
            return Err(Error::BoundExceeded {
                what: "member size",
                value: big.size(),
                bound: max_size,
            });
        }
        let universe = partitions_up_to(max_size)?;
        for mu in &members {
            if let Some(missing) = universe.iter().find(|l| l.contains(mu) && !members.contains(*l)) {
                return Err(Error::NotUpwardClosed(format!("{missing} contains {mu} but is missing")));
            }
        }
        Ok(Self { max_size, members })
    }

    /// The zero ideal.
    pub fn zero(max_size: usize) -> Self {
        Self {
            max_size,
            members: BTreeSet::new(),
        }
    }

    /// `P_{(p,q)}` restricted to sizes `≤ max_size`.
    pub fn from_label(label: PrimeLabel, max_size: usize) -> Result<Self> {
        let members = partitions_up_to(max_size)?
            .into_iter()
            .filter(|l| prime_membership(label, l))
            .collect();
        Ok(Self { max_size, members })
    }

    pub fn max_size(&self) -> usize {
        self.max_size
    }

    pub fn members(&self) -> &BTreeSet<Partition> {
        &self.members
    }

    /// Members in [`canonical_cmp`] order.
    pub fn sorted_members(&self) -> Vec<Partition> {
        let mut v: Vec<Partition> = self.members.iter().cloned().collect();
        v.sort_by(canonical_cmp);
        v
    }

    pub fn contains_partition(&self, lambda: &Partition) -> bool {
        self.members.contains(lambda)
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }
}

/// The smallest ideal truncation containing `generators`. Tensor-ideal
/// closure in the free category is upward closure under containment.
pub fn ideal_closure(generators: &[Partition], max_size: usize) -> Result<IdealTruncation> {
    if generators.iter().any(Partition::is_empty) {
        return Err(Error::ImproperIdeal);
    }
    if let Some(big) = generators.iter().find(|g| g.size() > max_size) {
        return Err(Error::BoundExceeded {
            what: "generator size",
            value: big.size(),
            bound: max_size,
        });
    }
    let members = partitions_up_to(max_size)?
        .into_iter()
        .filter(|l| generators.iter().any(|g| l.contains(g)))
        .collect();
    Ok(IdealTruncation { max_size, members })
}

/// A pair of factors outside the set whose product lands inside it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimalityWitness {
    pub mu: Partition,
    pub nu: Partition,
}

/// LR supports of `μ·ν` for all nonempty `μ, ν` with `|μ| + |ν| ≤ max_size`,
/// in a fixed order so that witnesses are deterministic.
#[derive(Debug, Clone)]
pub struct ProductSupports {
    max_size: usize,
    pairs: Vec<(Partition, Partition, Vec<Partition>)>,
}

impl ProductSupports {
    pub fn new(max_size: usize) -> Result<Self> {
        let mut factors: Vec<Partition> = partitions_up_to(max_size)?
            .into_iter()
            .filter(|l| !l.is_empty())
            .collect();
        factors.sort_by(canonical_cmp);
        let mut pairs = Vec::new();
        for mu in &factors {
            for nu in &factors {
                if mu.size() + nu.size() > max_size {
                    continue;
                }
                let support = tensor_square_expansion(mu, nu).support().cloned().collect();
                pairs.push((mu.clone(), nu.clone(), support));
            }
        }
        Ok(Self { max_size, pairs })
    }

    pub fn max_size(&self) -> usize {
        self.max_size
    }

    pub fn pairs(&self) -> &[(Partition, Partition, Vec<Partition>)] {
        &self.pairs
    }
}

/// First pair `(μ, ν)` violating truncated primality, if any.
pub fn primality_witness(s: &IdealTruncation, products: &ProductSupports) -> Option<PrimalityWitness> {
    assert!(
        products.max_size >= s.max_size,
        "product table too small for this truncation"
    );
    products
        .pairs
        .iter()
        .filter(|(mu, nu, _)| mu.size() + nu.size() <= s.max_size)
        .find(|(mu, nu, support)| {
            support.iter().all(|l| s.contains_partition(l))
                && !s.contains_partition(mu)
                && !s.contains_partition(nu)
        })
        .map(|(mu, nu, _)| PrimalityWitness {
            mu: mu.clone(),
            nu: nu.clone(),
        })
}

pub fn is_prime_truncation(s: &IdealTruncation) -> Result<bool> {
    let products = ProductSupports::new(s.max_size)?;
    Ok(primality_witness(s, &products).is_none())
}

/// Rectangles in `S` that are minimal under containment among rectangles in `S`.
pub fn minimal_rectangles(s: &IdealTruncation) -> Result<Vec<Partition>> {
    if s.is_empty() {
        return Err(Error::EmptyIdeal);
    }
    let rects: Vec<Partition> = s
        .sorted_members()
        .into_iter()
        .filter(|l| l.rectangle_shape().is_some())
        .collect();
    Ok(rects
        .iter()
        .filter(|r| !rects.iter().any(|o| o != *r && r.contains(o)))
        .cloned()
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    Zero,
    Prime(PrimeLabel),
    /// Fails primality (with a witness), or passes the truncated test without
    /// matching any `P_{(p,q)}` (no witness).
    NotPrime(Option<PrimalityWitness>),
}

pub fn classify(s: &IdealTruncation) -> Result<Classification> {
    classify_with(s, &ProductSupports::new(s.max_size)?)
}

pub fn classify_with(s: &IdealTruncation, products: &ProductSupports) -> Result<Classification> {
    if s.is_empty() {
        return Ok(Classification::Zero);
    }
    if let Some(w) = primality_witness(s, products) {
        return Ok(Classification::NotPrime(Some(w)));
    }
    let rects = minimal_rectangles(s)?;
    if let [rect] = rects.as_slice() {
        let (p, q) = rect.rectangle_shape().expect("filtered to rectangles");
        let label = PrimeLabel { p, q };
        if IdealTruncation::from_label(label, s.max_size)?.members == s.members {
            return Ok(Classification::Prime(label));
        }
    }
    Ok(Classification::NotPrime(None))
}

/// Depth-first antichain search over the containment poset of nonempty
/// partitions of size `≤ N`, testing every upward-closed set for truncated
/// primality. Elements are indexed in [`canonical_cmp`] order.
#[derive(Debug, Clone)]
pub struct PrimeSearch {
    max_size: usize,
    elements: Vec<Partition>,
    /// `up[i]`: bitmask of elements containing element `i`.
    up: Vec<u64>,
    /// `(μ, ν, support mask)` for every product with `|μ| + |ν| ≤ N`.
    products: Vec<(usize, usize, u64)>,
}

impl PrimeSearch {
    pub fn new(max_size: usize) -> Result<Self> {
        check_bound("N", max_size, MAX_ENUMERATION_N)?;
        let mut elements: Vec<Partition> = partitions_up_to(max_size)?
            .into_iter()
            .filter(|l| !l.is_empty())
            .collect();
        elements.sort_by(canonical_cmp);
        debug_assert!(elements.len() <= 64);
        let index = |l: &Partition| elements.iter().position(|e| e == l).expect("in universe");
        let up = elements
            .iter()
            .map(|mu| {
                elements
                    .iter()
                    .enumerate()
                    .filter(|(_, l)| l.contains(mu))
                    .fold(0u64, |m, (j, _)| m | 1 << j)
            })
            .collect();
        let table = ProductSupports::new(max_size)?;
        let products = table
            .pairs
            .iter()
            .map(|(mu, nu, support)| {
                let mask = support.iter().fold(0u64, |m, l| m | 1 << index(l));
                (index(mu), index(nu), mask)
            })
            .collect();
        Ok(Self {
            max_size,
            elements,
            up,
            products,
        })
    }

    pub fn elements(&self) -> &[Partition] {
        &self.elements
    }

    fn is_prime_mask(&self, set: u64) -> bool {
        self.products.iter().all(|&(mu, nu, support)| {
            support & set != support || set & (1 << mu) != 0 || set & (1 << nu) != 0
        })
    }

    fn to_truncation(&self, set: u64) -> IdealTruncation {
        let members = (0..self.elements.len())
            .filter(|&i| set & (1 << i) != 0)
            .map(|i| self.elements[i].clone())
            .collect();
        IdealTruncation {
            max_size: self.max_size,
            members,
        }
    }

    /// Prime truncations whose minimal antichain has element `root` as its
    /// first (lowest-index) element, in depth-first order. Roots partition
    /// the search, so they can be explored independently.
    pub fn search_root(&self, root: usize) -> Vec<IdealTruncation> {
        let mut out = Vec::new();
        let mut chosen = Vec::new();
        chosen.push(root);
        self.dfs(root, &mut chosen, self.up[root], &mut out);
        out
    }

    fn dfs(&self, last: usize, chosen: &mut Vec<usize>, set: u64, out: &mut Vec<IdealTruncation>) {
        if self.is_prime_mask(set) {
            out.push(self.to_truncation(set));
        }
        for next in last + 1..self.elements.len() {
            // antichain: `next` must be incomparable with everything chosen
            let comparable = chosen
                .iter()
                .any(|&c| self.up[c] & (1 << next) != 0 || self.up[next] & (1 << c) != 0);
            if comparable {
                continue;
            }
            chosen.push(next);
            self.dfs(next, chosen, set | self.up[next], out);
            chosen.pop();
        }
    }

    /// The zero ideal followed by every root's results in root order.
    pub fn run(&self) -> Vec<IdealTruncation> {
        let mut out = Vec::new();
        out.push(IdealTruncation::zero(self.max_size));
        for root in 0..self.elements.len() {
            out.extend(self.search_root(root));
        }
        out
    }
}

/// Every upward-closed proper set of partitions of size `≤ N` passing the
/// truncated primality test, including the zero ideal. Distinct antichains
/// give distinct sets, so the output has no duplicates.
pub fn enumerate_prime_truncations(max_size: usize) -> Result<Vec<IdealTruncation>> {
    Ok(PrimeSearch::new(max_size)?.run())
}

/// Checks an enumeration result against the classification: the zero ideal
/// appears once, every `P_{(p,q)}` with `pq ≤ N` passes the test and appears
/// once with `(p)^q` as its only minimal rectangle, and nothing returned has
/// a primality witness. Sets that pass the truncated test yet match no
/// `P_{(p,q)}` are flagged, not failed.
pub fn check_prime_enumeration(
    max_size: usize,
    found: &[IdealTruncation],
) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("balmer");
    let products = ProductSupports::new(max_size)?;
    let mut expected: Vec<(PrimeLabel, IdealTruncation)> = Vec::new();
    for q in 1..=max_size {
        for p in 1..=max_size / q {
            let label = PrimeLabel { p, q };
            let truncation = IdealTruncation::from_label(label, max_size)?;
            report.check(primality_witness(&truncation, &products).is_none(), || {
                format!("P{label} truncated at {max_size} fails the primality test")
            });
            expected.push((label, truncation));
        }
    }
    let mut zero_seen = 0;
    let mut labels_seen = BTreeSet::new();
    for s in found {
        match classify_with(s, &products)? {
            Classification::Zero => zero_seen += 1,
            Classification::Prime(label) => {
                let rects = minimal_rectangles(s)?;
                report.check(rects == [label.rectangle()], || {
                    format!("P{label}: minimal rectangles {rects:?}")
                });
                report.check(labels_seen.insert(label), || format!("P{label} listed twice"));
            }
            Classification::NotPrime(Some(w)) => report.check(false, || {
                format!("{} returned but fails primality at ({}, {})", describe(s), w.mu, w.nu)
            }),
            Classification::NotPrime(None) => {
                let rects = minimal_rectangles(s)?;
                report.flag(format!(
                    "spurious prime truncation {} with {} minimal rectangles {rects:?}",
                    describe(s),
                    rects.len()
                ))
            }
        }
    }
    report.check(zero_seen == 1, || format!("zero ideal listed {zero_seen} times"));
    for (label, _) in &expected {
        report.check(labels_seen.contains(label), || format!("P{label} missing from enumeration"));
    }
    report.note(format!(
        "N={max_size}: {} sets, {zero_seen} zero ideal, {} primes P(p,q) with pq ≤ N, {} flagged",
        found.len(),
        labels_seen.len(),
        report.flagged.len()
    ));
    Ok(report)
}

pub fn verify_prime_classification(max_size: usize) -> Result<VerificationReport> {
    let found = enumerate_prime_truncations(max_size)?;
    check_prime_enumeration(max_size, &found)
}

fn describe(s: &IdealTruncation) -> String {
    let members: Vec<String> = s.sorted_members().iter().map(|m| format!("({m})")).collect();
    format!("{{{}}}", members.join(" "))
}

/// For all rectangle pairs with `pq + rs ≤ max_total`, the closed-form
/// support equals the brute-force LR support.
pub fn verify_okada_consistency(max_total: usize) -> Result<VerificationReport> {
    check_bound("max_total", max_total, 12)?;
    let mut report = VerificationReport::new("okada");
    for p in 1..=max_total {
        for q in 1..=max_total / p {
            for r in 1..=max_total {
                for s in 1..=max_total / r {
                    if p * q + r * s > max_total {
                        continue;
                    }
                    let formula = rectangular_lr_support(p, q, r, s);
                    let mut brute: Vec<Partition> = tensor_square_expansion(
                        &Partition::rectangle(p, q),
                        &Partition::rectangle(r, s),
                    )
                    .support()
                    .cloned()
                    .collect();
                    brute.sort_by(|a, b| b.parts().cmp(a.parts()));
                    report.check(formula == brute, || {
                        format!("({p})^{q}·({r})^{s}: formula {formula:?} vs LR {brute:?}")
                    });
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partitions_up_to;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn label(p: usize, q: usize) -> PrimeLabel {
        PrimeLabel::new(p, q).unwrap()
    }

    #[test]
    fn membership_examples() {
        assert!(prime_membership(label(1, 1), &p("1")));
        assert!(!prime_membership(label(2, 2), &p("3,1")));
        for a in 1..=5 {
            for b in 1..=5 {
                assert!(prime_membership(label(a, b), &Partition::rectangle(a, b)));
            }
        }
        assert!(PrimeLabel::new(0, 1).is_err());
    }

    #[test]
    fn closure_examples() {
        let all = ideal_closure(&[p("1")], 3).unwrap();
        assert_eq!(all.len(), 1 + 2 + 3);
        // brute force: partitions of size ≤ 4 containing (2,1)
        let c = ideal_closure(&[p("2,1")], 4).unwrap();
        let brute: BTreeSet<Partition> = partitions_up_to(4)
            .unwrap()
            .into_iter()
            .filter(|l| l.contains(&p("2,1")))
            .collect();
        assert_eq!(c.members(), &brute);
        assert_eq!(c.sorted_members(), vec![p("2,1"), p("3,1"), p("2,2"), p("2,1,1")]);
        let c = ideal_closure(&[p("2"), p("1,1")], 2).unwrap();
        assert_eq!(c.sorted_members(), vec![p("2"), p("1,1")]);
        assert_eq!(ideal_closure(&[Partition::empty()], 2), Err(Error::ImproperIdeal));
    }

    #[test]
    fn truncation_invariants() {
        assert_eq!(IdealTruncation::new(3, [Partition::empty()]), Err(Error::ImproperIdeal));
        assert!(matches!(IdealTruncation::new(3, [p("2")]), Err(Error::NotUpwardClosed(_))));
        assert!(IdealTruncation::new(2, [p("2")]).is_ok());
    }

    #[test]
    fn primality_examples() {
        let s = ideal_closure(&[p("2,1")], 4).unwrap();
        let products = ProductSupports::new(4).unwrap();
        assert_eq!(
            primality_witness(&s, &products),
            Some(PrimalityWitness { mu: p("2"), nu: p("1,1") })
        );
        assert!(is_prime_truncation(&IdealTruncation::from_label(label(1, 1), 5).unwrap()).unwrap());
        assert!(is_prime_truncation(&IdealTruncation::zero(4)).unwrap());
    }

    #[test]
    fn minimal_rectangle_examples() {
        let s = IdealTruncation::from_label(label(2, 2), 6).unwrap();
        assert_eq!(minimal_rectangles(&s).unwrap(), vec![p("2,2")]);
        let s = ideal_closure(&[p("2,1")], 4).unwrap();
        assert_eq!(minimal_rectangles(&s).unwrap(), vec![p("2,2")]);
        let s = ideal_closure(&[p("3"), p("1,1,1")], 4).unwrap();
        assert_eq!(minimal_rectangles(&s).unwrap(), vec![p("3"), p("1,1,1")]);
        assert_eq!(minimal_rectangles(&IdealTruncation::zero(3)), Err(Error::EmptyIdeal));
    }

    #[test]
    fn classify_examples() {
        let s = IdealTruncation::new(
            4,
            partitions_up_to(4).unwrap().into_iter().filter(|l| l.len() >= 2),
        )
        .unwrap();
        assert_eq!(classify(&s).unwrap(), Classification::Prime(label(1, 2)));
        let s = ideal_closure(&[p("2,1")], 4).unwrap();
        assert!(matches!(classify(&s).unwrap(), Classification::NotPrime(Some(_))));
        assert_eq!(classify(&IdealTruncation::zero(4)).unwrap(), Classification::Zero);
    }

    #[test]
    fn enumeration_at_two() {
        let found = enumerate_prime_truncations(2).unwrap();
        let sets: Vec<Vec<Partition>> = found.iter().map(|s| s.sorted_members()).collect();
        assert_eq!(sets.len(), 4);
        assert!(sets.contains(&vec![]));
        assert!(sets.contains(&vec![p("1"), p("2"), p("1,1")]));
        assert!(sets.contains(&vec![p("2")]));
        assert!(sets.contains(&vec![p("1,1")]));
        assert!(enumerate_prime_truncations(7).is_err());
    }

    #[test]
    fn okada_examples() {
        let brute: Vec<Partition> = tensor_square_expansion(&p("2,2"), &p("1")).support().cloned().collect();
        assert!(brute.contains(&p("3,2")) && brute.contains(&p("2,2,1")) && brute.len() == 2);
        assert!(verify_okada_consistency(8).unwrap().passed());
    }
}
