//! Enumeration of isomorphism classes of `m × n` binary matrices with `k`
//! ones, and exact evaluation of the class-sum identities.
//!
//! Every k-subset of the `m·n` cells is canonicalized and counted per
//! canonical form. The subset space is cut into fixed rank ranges that are
//! processed in parallel; each range yields a partial map from canonical form
//! to count and the maps are merged by addition. Classes are sorted at the
//! end, so the result does not depend on the thread count.

use std::collections::HashMap;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::canonical::{
    canonical_form, group_order, stabilizer_order, Canonicalizer, MAX_SEARCH_ROWS,
};
use crate::combinations::KSubsets;
use crate::counting::{binomial, binomial_u64, factorial};
use crate::error::{Error, Result};
use crate::graph::graph_of_matrix;
use crate::matrix::BinaryMatrix;
use crate::neighborhood::{classify, degree_sequences};
use crate::rational::ExactRational;

pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Largest `m·n` the enumerator accepts; cells are packed into one word.
pub const MAX_CELLS: usize = 64;

const CHUNK_LEN: u64 = 1 << 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CensusOptions {
    /// Refuse any `(m, n, k)` with more than this many matrices.
    pub budget: u64,
    /// Worker threads; 0 uses the ambient rayon pool.
    pub threads: usize,
}

impl Default for CensusOptions {
    fn default() -> Self {
        Self {
            budget: DEFAULT_BUDGET,
            threads: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoClassRecord {
    pub canonical: BinaryMatrix,
    pub orbit_size: BigUint,
    pub stabilizer_order: BigUint,
    pub deltas_rows: Vec<usize>,
    pub deltas_cols: Vec<usize>,
    pub delta_factorial_product: BigUint,
    pub row_degrees: Vec<usize>,
    pub col_degrees: Vec<usize>,
}

impl IsoClassRecord {
    /// Computes every characteristic from a representative of the class.
    pub fn from_representative(a: &BinaryMatrix) -> Self {
        let canonical = canonical_form(a);
        let stab = stabilizer_order(&canonical);
        let g = graph_of_matrix(&canonical);
        let cls = classify(&g);
        let (row_degrees, col_degrees) = degree_sequences(&g);
        Self {
            orbit_size: group_order(&canonical) / &stab,
            stabilizer_order: stab,
            deltas_rows: cls.deltas_rows(),
            deltas_cols: cls.deltas_cols(),
            delta_factorial_product: cls.delta_factorial_product,
            row_degrees,
            col_degrees,
            canonical,
        }
    }

    pub fn stabilizer_matches_deltas(&self) -> bool {
        self.stabilizer_order == self.delta_factorial_product
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub m: usize,
    pub n: usize,
    pub k: usize,
    /// Sorted by canonical form.
    pub classes: Vec<IsoClassRecord>,
    pub binomial: BigUint,
    pub paper_lhs: ExactRational,
    pub paper_rhs: ExactRational,
    pub residual: ExactRational,
    pub exact_partition_ok: bool,
    pub eq2_exact_ok: bool,
    pub mismatch_classes: Vec<String>,
}

impl Census {
    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// Assembles a census from its class records, deriving every summary
    /// field. `classes` must already be sorted.
    pub fn from_classes(
        m: usize,
        n: usize,
        k: usize,
        classes: Vec<IsoClassRecord>,
    ) -> Result<Self> {
        let binomial = binomial_count(m, n, k)?;
        let paper_rhs = paper_rhs(m, n, k)?;
        let paper_lhs = lhs_of(&classes);
        let residual = paper_lhs.clone() - paper_rhs.clone();
        let orbit_total: BigUint = classes.iter().map(|c| &c.orbit_size).sum();
        let exact_partition_ok = orbit_total == binomial;
        let recip_stab: ExactRational = classes
            .iter()
            .map(|c| ExactRational::recip_of(&c.stabilizer_order).expect("stabilizer is positive"))
            .sum();
        let eq2_exact_ok = ExactRational::from(factorial(m) * factorial(n)) * recip_stab
            == ExactRational::from(binomial.clone());
        let mismatch_classes = classes
            .iter()
            .filter(|c| !c.stabilizer_matches_deltas())
            .map(|c| c.canonical.to_string())
            .collect();
        Ok(Self {
            m,
            n,
            k,
            classes,
            binomial,
            paper_lhs,
            paper_rhs,
            residual,
            exact_partition_ok,
            eq2_exact_ok,
            mismatch_classes,
        })
    }
}

fn lhs_of(classes: &[IsoClassRecord]) -> ExactRational {
    classes
        .iter()
        .map(|c| {
            ExactRational::recip_of(&c.delta_factorial_product).expect("factorials are positive")
        })
        .sum()
}

fn check_k(m: usize, n: usize, k: usize) -> Result<()> {
    if m == 0 || n == 0 {
        return Err(Error::EmptyDimension { rows: m, cols: n });
    }
    let cells = m.checked_mul(n).ok_or(Error::UnsupportedShape {
        rows: m,
        cols: n,
        max_cells: MAX_CELLS,
    })?;
    if k > cells {
        return Err(Error::OnesOutOfRange { k, max: cells });
    }
    Ok(())
}

/// Number of `m × n` binary matrices with exactly `k` ones, `C(mn, k)`.
pub fn binomial_count(m: usize, n: usize, k: usize) -> Result<BigUint> {
    check_k(m, n, k)?;
    Ok(binomial(m * n, k))
}

/// `(mn)! / (m! n! k! (mn - k)!)`
pub fn paper_rhs(m: usize, n: usize, k: usize) -> Result<ExactRational> {
    check_k(m, n, k)?;
    Ok(
        ExactRational::from_naturals(binomial(m * n, k), factorial(m) * factorial(n))
            .expect("factorials are positive"),
    )
}

/// Sum over the classes of `1 / ∏ δ!`.
pub fn paper_lhs(census: &Census) -> ExactRational {
    lhs_of(&census.classes)
}

/// Validates the shape and the budget, returning the number of matrices.
pub fn check_budget(m: usize, n: usize, k: usize, budget: u64) -> Result<u64> {
    check_k(m, n, k)?;
    let cells = m * n;
    if cells > MAX_CELLS || m > MAX_SEARCH_ROWS {
        return Err(Error::UnsupportedShape {
            rows: m,
            cols: n,
            max_cells: MAX_CELLS,
        });
    }
    match binomial_u64(cells, k) {
        Some(total) if total <= budget => Ok(total),
        _ => Err(Error::BudgetExceeded {
            cells,
            k,
            count: binomial(cells, k).to_string(),
            budget,
        }),
    }
}

fn with_threads<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    if threads == 0 {
        return Ok(f());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Inconsistent(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

fn merge(a: HashMap<u64, u64>, b: HashMap<u64, u64>) -> HashMap<u64, u64> {
    let (mut big, small) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    for (key, count) in small {
        *big.entry(key).or_insert(0) += count;
    }
    big
}

/// Canonical form (as a cell mask) to number of matrices seen.
fn bucket(m: usize, n: usize, k: usize, total: u64) -> HashMap<u64, u64> {
    let cells = m * n;
    let chunks = total.div_ceil(CHUNK_LEN);
    (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut local = HashMap::new();
            let mut canon = Canonicalizer::new(m, n);
            for mask in KSubsets::range(cells, k, c * CHUNK_LEN, CHUNK_LEN) {
                *local.entry(canon.canonical_mask(mask)).or_insert(0) += 1;
            }
            local
        })
        .reduce(HashMap::new, merge)
}

pub fn enumerate_census(m: usize, n: usize, k: usize, opts: &CensusOptions) -> Result<Census> {
    let total = check_budget(m, n, k, opts.budget)?;
    with_threads(opts.threads, || {
        let buckets = bucket(m, n, k, total);
        let mut classes = buckets
            .par_iter()
            .map(|(&key, &seen)| {
                let rep = BinaryMatrix::from_cell_mask(m, n, key).expect("shape checked");
                let rec = IsoClassRecord::from_representative(&rep);
                if rec.orbit_size != BigUint::from(seen) {
                    return Err(Error::Inconsistent(format!(
                        "class {} has orbit size {} but {} matrices were bucketed into it",
                        rec.canonical, rec.orbit_size, seen
                    )));
                }
                Ok(rec)
            })
            .collect::<Result<Vec<_>>>()?;
        classes.sort_by(|a, b| a.canonical.lex_cmp_unchecked(&b.canonical));
        Census::from_classes(m, n, k, classes)
    })?
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub m: usize,
    pub n: usize,
    pub k: usize,
    pub num_classes: usize,
    pub binomial: BigUint,
    pub paper_lhs: ExactRational,
    pub paper_rhs: ExactRational,
    pub residual: ExactRational,
    pub exact_partition_ok: bool,
    pub eq2_exact_ok: bool,
    pub mismatch_classes: Vec<String>,
}

impl VerifyReport {
    pub fn residual_is_zero(&self) -> bool {
        self.residual.is_zero()
    }

    /// Both checks that hold for every `(m, n, k)` regardless of the
    /// residual.
    pub fn unconditional_ok(&self) -> bool {
        self.exact_partition_ok && self.eq2_exact_ok
    }
}

impl From<&Census> for VerifyReport {
    fn from(c: &Census) -> Self {
        Self {
            m: c.m,
            n: c.n,
            k: c.k,
            num_classes: c.num_classes(),
            binomial: c.binomial.clone(),
            paper_lhs: c.paper_lhs.clone(),
            paper_rhs: c.paper_rhs.clone(),
            residual: c.residual.clone(),
            exact_partition_ok: c.exact_partition_ok,
            eq2_exact_ok: c.eq2_exact_ok,
            mismatch_classes: c.mismatch_classes.clone(),
        }
    }
}

pub fn verify_identity(m: usize, n: usize, k: usize, opts: &CensusOptions) -> Result<VerifyReport> {
    enumerate_census(m, n, k, opts).map(|c| VerifyReport::from(&c))
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepSummary {
    pub reports: Vec<VerifyReport>,
    pub zero_residuals: usize,
    pub nonzero_residuals: usize,
    pub partition_failures: usize,
    pub eq2_failures: usize,
}

impl SweepSummary {
    pub fn from_reports(reports: Vec<VerifyReport>) -> Self {
        let zero = reports.iter().filter(|r| r.residual_is_zero()).count();
        Self {
            zero_residuals: zero,
            nonzero_residuals: reports.len() - zero,
            partition_failures: reports.iter().filter(|r| !r.exact_partition_ok).count(),
            eq2_failures: reports.iter().filter(|r| !r.eq2_exact_ok).count(),
            reports,
        }
    }
}

/// Verifies every `1 <= m <= m_max`, `1 <= n <= n_max`, `0 <= k <= mn`,
/// ordered by `m`, then `n`, then `k`. The budget is checked for all
/// parameters before any enumeration starts.
pub fn sweep(m_max: usize, n_max: usize, opts: &CensusOptions) -> Result<SweepSummary> {
    let params: Vec<(usize, usize, usize)> = (1..=m_max)
        .flat_map(|m| (1..=n_max).flat_map(move |n| (0..=m * n).map(move |k| (m, n, k))))
        .collect();
    for &(m, n, k) in &params {
        check_budget(m, n, k, opts.budget)?;
    }
    let reports = params
        .into_iter()
        .map(|(m, n, k)| verify_identity(m, n, k, opts))
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepSummary::from_reports(reports))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> ExactRational {
        s.parse().unwrap()
    }

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    fn census(m: usize, n: usize, k: usize) -> Census {
        enumerate_census(m, n, k, &CensusOptions::default()).unwrap()
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial_count(2, 2, 0).unwrap(), big(1));
        assert_eq!(binomial_count(2, 2, 2).unwrap(), big(6));
        assert_eq!(binomial_count(3, 3, 4).unwrap(), big(126));
        assert!(matches!(
            binomial_count(2, 2, 5),
            Err(Error::OnesOutOfRange { .. })
        ));
    }

    #[test]
    fn rhs_examples() {
        assert_eq!(paper_rhs(2, 2, 0).unwrap(), q("1/4"));
        assert_eq!(paper_rhs(2, 2, 2).unwrap(), q("3/2"));
        assert_eq!(paper_rhs(3, 3, 1).unwrap(), q("1/4"));
        assert!(paper_rhs(1, 1, 2).is_err());
    }

    #[test]
    fn census_2x2_examples() {
        let c0 = census(2, 2, 0);
        assert_eq!(c0.num_classes(), 1);
        let r = &c0.classes[0];
        assert_eq!(r.canonical.to_string(), "00|00");
        assert_eq!(r.orbit_size, big(1));
        assert_eq!(
            (r.deltas_rows.clone(), r.deltas_cols.clone()),
            (vec![2], vec![2])
        );
        assert_eq!(r.delta_factorial_product, big(4));
        assert_eq!(paper_lhs(&c0), q("1/4"));

        let c1 = census(2, 2, 1);
        assert_eq!(c1.num_classes(), 1);
        let r = &c1.classes[0];
        assert_eq!(r.orbit_size, big(4));
        assert_eq!(
            (r.deltas_rows.clone(), r.deltas_cols.clone()),
            (vec![1, 1], vec![1, 1])
        );
        assert_eq!(r.delta_factorial_product, big(1));
        assert_eq!(paper_lhs(&c1), q("1"));

        let c2 = census(2, 2, 2);
        let names: Vec<String> = c2.classes.iter().map(|c| c.canonical.to_string()).collect();
        assert_eq!(names, ["00|11", "01|01", "01|10"]);
        assert!(c2.classes.iter().all(|c| c.orbit_size == big(2)));
        // 1/2 + 1/2 + 1
        assert_eq!(paper_lhs(&c2), q("2"));
        assert_eq!(c2.residual, q("1/2"));
        assert_eq!(c2.mismatch_classes, ["01|10"]);
        assert!(c2.exact_partition_ok && c2.eq2_exact_ok);
    }

    #[test]
    fn single_edge_residual_vanishes() {
        for m in 1..=4 {
            for n in 1..=4 {
                let r = verify_identity(m, n, 1, &CensusOptions::default()).unwrap();
                assert!(r.residual_is_zero(), "{m}x{n}");
                assert_eq!(r.num_classes, 1);
                assert_eq!(
                    r.paper_lhs,
                    ExactRational::from_naturals(big((m * n) as u64), factorial(m) * factorial(n))
                        .unwrap()
                );
            }
        }
    }

    #[test]
    fn sweep_examples() {
        let s = sweep(1, 1, &CensusOptions::default()).unwrap();
        assert_eq!(s.reports.len(), 2);
        assert_eq!(s.zero_residuals, 2);

        let s = sweep(2, 2, &CensusOptions::default()).unwrap();
        let order: Vec<_> = s.reports.iter().map(|r| (r.m, r.n, r.k)).collect();
        let mut sorted = order.clone();
        sorted.sort();
        assert_eq!(order, sorted);
        assert_eq!(s.partition_failures + s.eq2_failures, 0);
        assert_eq!(s.reports.iter().filter(|r| (r.m, r.n) == (2, 2)).count(), 5);
    }

    #[test]
    fn budget_guard() {
        let tight = CensusOptions {
            budget: 5,
            threads: 0,
        };
        assert!(matches!(
            enumerate_census(2, 2, 2, &tight),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(enumerate_census(2, 2, 1, &tight).is_ok());
        assert!(matches!(
            sweep(2, 2, &tight),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(matches!(
            enumerate_census(9, 8, 1, &CensusOptions::default()),
            Err(Error::UnsupportedShape { .. })
        ));
    }

    #[test]
    fn thread_count_does_not_change_result() {
        let one = enumerate_census(
            3,
            4,
            6,
            &CensusOptions {
                budget: DEFAULT_BUDGET,
                threads: 1,
            },
        )
        .unwrap();
        let four = enumerate_census(
            3,
            4,
            6,
            &CensusOptions {
                budget: DEFAULT_BUDGET,
                threads: 4,
            },
        )
        .unwrap();
        assert_eq!(one, four);
    }
}
