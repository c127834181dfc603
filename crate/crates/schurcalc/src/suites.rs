//! Named verification sweeps, run in parallel with deterministic output.
//!
//! Each suite splits its work into independent pieces (objects of a test
//! battery, antichain roots, parameter pairs), runs them on a rayon pool and
//! folds the partial reports back in input order, so the aggregated report
//! does not depend on scheduling.

use rayon::prelude::*;

use schurcalc_core::balmer::{check_prime_enumeration, verify_okada_consistency, PrimeSearch};
use schurcalc_core::characters::verify_character_integrity;
use schurcalc_core::lr::{verify_deligne_110, verify_inclusions_equivalence, verify_lr_oracle};
use schurcalc_core::schur::{
    cofiber_bound_check_with, graded_battery, verify_dimension_window, verify_euler,
    verify_hook_vanishing, verify_kill_sym_and_alt, verify_shift_rule,
};
use schurcalc_core::{Error, GradedObject, IdealTruncation, Result, SchurSupport, VerificationReport};

use crate::tables::SharedTables;

/// Suite names in the order `all` runs them.
pub const SUITES: [&str; 12] = [
    "lr-oracles",
    "inclusions",
    "deligne110",
    "hook",
    "okada",
    "shifts",
    "euler",
    "characters",
    "cofiber",
    "kill-sym-alt",
    "balmer",
    "dimension-window",
];

/// Environment variable capping the number of worker threads.
pub const THREADS_VAR: &str = "SCHURCALC_THREADS";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteBounds {
    pub lr_max_total: usize,
    pub inclusions_max_size: usize,
    pub deligne_max_size: usize,
    pub deligne_max_corner: usize,
    pub hook_max_size: usize,
    pub hook_max_pq: u64,
    pub okada_max_total: usize,
    pub shifts_max_size: usize,
    /// Total dimension of the objects in the shift, Euler and
    /// dimension-window batteries.
    pub battery_max_total: u64,
    pub euler_max_n: usize,
    pub orthogonality_n: usize,
    pub dimension_n: usize,
    pub kronecker_n: usize,
    pub cofiber_max_mult: u64,
    pub kill_max_product: usize,
    pub balmer_n: usize,
}

impl Default for SuiteBounds {
    fn default() -> Self {
        Self {
            lr_max_total: 8,
            inclusions_max_size: 8,
            deligne_max_size: 9,
            deligne_max_corner: 3,
            hook_max_size: 7,
            hook_max_pq: 3,
            okada_max_total: 12,
            shifts_max_size: 6,
            battery_max_total: 4,
            euler_max_n: 5,
            orthogonality_n: 6,
            dimension_n: 8,
            kronecker_n: 6,
            cofiber_max_mult: 3,
            kill_max_product: 12,
            balmer_n: 5,
        }
    }
}

impl SuiteBounds {
    /// Overrides the size bound of the LR oracle and inclusion sweeps.
    pub fn with_max_n(mut self, n: usize) -> Self {
        self.lr_max_total = n;
        self.inclusions_max_size = n;
        self
    }
}

/// Objects supported in degrees `[−2, 2]` with total dimension at most `max_total`.
pub fn test_battery(max_total: u64) -> Vec<GradedObject> {
    graded_battery(-2..=2, max_total, max_total)
}

/// Thread count from [`THREADS_VAR`], or `None` for the rayon default.
pub fn configured_threads() -> Result<Option<usize>> {
    match std::env::var(THREADS_VAR) {
        Err(_) => Ok(None),
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(Error::Parse(format!("{THREADS_VAR} must be a positive integer, got {s:?}"))),
        },
    }
}

fn pool() -> Result<rayon::ThreadPool> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = configured_threads()? {
        builder = builder.num_threads(n);
    }
    builder
        .build()
        .map_err(|e| Error::Parse(format!("thread pool: {e}")))
}

/// Expands `all` and rejects unknown names.
pub fn resolve(name: &str) -> Result<Vec<&'static str>> {
    if name == "all" {
        return Ok(SUITES.to_vec());
    }
    SUITES
        .iter()
        .find(|s| **s == name)
        .map(|s| vec![*s])
        .ok_or_else(|| Error::Parse(format!("unknown suite {name:?}")))
}

/// Runs the named suites and returns their reports in the given order.
pub fn run_suites(names: &[&str], bounds: &SuiteBounds) -> Result<Vec<VerificationReport>> {
    let tables = SharedTables::new();
    pool()?.install(|| {
        names
            .par_iter()
            .map(|name| run_suite(name, bounds, &tables))
            .collect()
    })
}

fn fold(suite: &str, parts: Vec<Result<VerificationReport>>) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(suite);
    for part in parts {
        report.absorb(part?);
    }
    Ok(report)
}

/// Runs one suite on the current rayon pool.
pub fn run_suite(name: &str, bounds: &SuiteBounds, tables: &SharedTables) -> Result<VerificationReport> {
    match name {
        "lr-oracles" => verify_lr_oracle(tables, bounds.lr_max_total),
        "inclusions" => verify_inclusions_equivalence(tables, bounds.inclusions_max_size),
        "deligne110" => verify_deligne_110(bounds.deligne_max_size, bounds.deligne_max_corner),
        "hook" => verify_hook_vanishing(bounds.hook_max_size, bounds.hook_max_pq),
        "okada" => verify_okada_consistency(bounds.okada_max_total),
        "shifts" => {
            let battery = test_battery(bounds.battery_max_total);
            let parts = battery
                .par_iter()
                .map(|x| verify_shift_rule(bounds.shifts_max_size, std::slice::from_ref(x)))
                .collect();
            fold("shifts", parts)
        }
        "euler" => {
            let battery = test_battery(bounds.battery_max_total);
            let parts = battery
                .par_iter()
                .map(|x| verify_euler(bounds.euler_max_n, std::slice::from_ref(x)))
                .collect();
            fold("euler", parts)
        }
        "characters" => verify_character_integrity(
            tables,
            bounds.orthogonality_n,
            bounds.dimension_n,
            bounds.kronecker_n,
        ),
        "cofiber" => cofiber(bounds.cofiber_max_mult),
        "kill-sym-alt" => {
            let battery = test_battery(bounds.battery_max_total);
            let pairs: Vec<(usize, usize)> = (1..=bounds.kill_max_product)
                .flat_map(|n| (1..=bounds.kill_max_product / n).map(move |m| (n, m)))
                .collect();
            let parts = pairs
                .par_iter()
                .map(|&(n, m)| verify_kill_sym_and_alt(n, m, &battery))
                .collect();
            fold("kill-sym-alt", parts)
        }
        "balmer" => balmer(bounds.balmer_n),
        "dimension-window" => {
            let battery = test_battery(bounds.battery_max_total);
            let parts = battery
                .par_iter()
                .filter(|x| !x.is_zero())
                .map(verify_dimension_window)
                .collect();
            fold("dimension-window", parts)
        }
        other => Err(Error::Parse(format!("unknown suite {other:?}"))),
    }
}

/// Every `X` in degrees `[−2, 2]` with multiplicities `≤ max_mult`, both for
/// the zero map and the split map `1 → X`. Split maps need a unit summand.
fn cofiber(max_mult: u64) -> Result<VerificationReport> {
    let battery = graded_battery(-2..=2, max_mult, 5 * max_mult);
    let cases: Vec<(&GradedObject, bool)> = battery
        .iter()
        .flat_map(|x| [(x, false), (x, true)])
        .filter(|(x, split)| !split || x.get(0) > 0)
        .collect();
    let parts = cases
        .par_iter()
        .map_init(SchurSupport::new, |support, &(x, split)| {
            cofiber_bound_check_with(support, x, split)
        })
        .collect();
    let mut report = fold("cofiber", parts)?;
    let skipped = battery.len() * 2 - cases.len();
    report.note(format!(
        "{} objects, {} cases, {skipped} split cases skipped for lack of a unit summand",
        battery.len(),
        cases.len()
    ));
    Ok(report)
}

fn balmer(n: usize) -> Result<VerificationReport> {
    let search = PrimeSearch::new(n)?;
    let per_root: Vec<Vec<IdealTruncation>> = (0..search.elements().len())
        .into_par_iter()
        .map(|root| search.search_root(root))
        .collect();
    let mut found = vec![IdealTruncation::zero(n)];
    found.extend(per_root.into_iter().flatten());
    check_prime_enumeration(n, &found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use schurcalc_core::balmer::enumerate_prime_truncations;

    #[test]
    fn resolve_names() {
        assert_eq!(resolve("all").unwrap().len(), SUITES.len());
        assert_eq!(resolve("hook").unwrap(), vec!["hook"]);
        assert!(resolve("nope").is_err());
    }

    #[test]
    fn parallel_balmer_matches_serial() {
        let serial = enumerate_prime_truncations(4).unwrap();
        let search = PrimeSearch::new(4).unwrap();
        let mut parallel = vec![IdealTruncation::zero(4)];
        let roots: Vec<Vec<IdealTruncation>> = (0..search.elements().len())
            .into_par_iter()
            .map(|r| search.search_root(r))
            .collect();
        parallel.extend(roots.into_iter().flatten());
        assert_eq!(serial, parallel);
    }

    #[test]
    fn small_suites_pass() {
        let bounds = SuiteBounds {
            lr_max_total: 5,
            inclusions_max_size: 5,
            deligne_max_size: 6,
            deligne_max_corner: 2,
            hook_max_size: 5,
            hook_max_pq: 2,
            okada_max_total: 8,
            shifts_max_size: 4,
            battery_max_total: 2,
            euler_max_n: 3,
            orthogonality_n: 4,
            dimension_n: 5,
            kronecker_n: 4,
            cofiber_max_mult: 1,
            kill_max_product: 6,
            balmer_n: 3,
        };
        let reports = run_suites(&SUITES, &bounds).unwrap();
        for (r, name) in reports.iter().zip(SUITES) {
            assert_eq!(r.suite, name);
            assert!(r.passed(), "{name}: {:?}", r.counterexamples);
            assert!(r.checks > 0, "{name}");
        }
    }
}
