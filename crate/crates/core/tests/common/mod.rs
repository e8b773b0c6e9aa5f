//! Brute-force reference for the census, written against plain nested
//! vectors. Shares no code with the library: permutations, orbits,
//! stabilizers and neighborhood classes are all computed straight from the
//! definitions, and all arithmetic goes through `num_rational` directly.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Mat = Vec<Vec<u8>>;

pub fn factorial(n: usize) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

pub fn choose(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Every permutation of `0..p`, by Heap's algorithm.
pub fn permutations(p: usize) -> Vec<Vec<usize>> {
    fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..k - 1 {
            heap(k - 1, a, out);
            if k % 2 == 0 {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
        }
        heap(k - 1, a, out);
    }
    let mut out = Vec::new();
    heap(p, &mut (0..p).collect(), &mut out);
    out
}

pub fn apply(a: &Mat, rho: &[usize], sigma: &[usize]) -> Mat {
    let mut b = vec![vec![0; a[0].len()]; a.len()];
    for (i, row) in a.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            b[rho[i]][sigma[j]] = x;
        }
    }
    b
}

pub fn to_string(a: &Mat) -> String {
    a.iter()
        .map(|r| {
            r.iter()
                .map(|&x| if x == 1 { '1' } else { '0' })
                .collect::<String>()
        })
        .collect::<Vec<_>>()
        .join("|")
}

pub fn from_string(s: &str) -> Mat {
    s.split('|')
        .map(|r| r.bytes().map(|b| b - b'0').collect())
        .collect()
}

/// All `m × n` matrices with exactly `k` ones.
pub fn matrices(m: usize, n: usize, k: usize) -> Vec<Mat> {
    (0u64..1 << (m * n))
        .filter(|x| x.count_ones() as usize == k)
        .map(|x| {
            (0..m)
                .map(|i| (0..n).map(|j| ((x >> (i * n + j)) & 1) as u8).collect())
                .collect()
        })
        .collect()
}

/// Product of factorials of the neighborhood class sizes. A row's
/// neighborhood is the set of columns holding a one in it, and vice versa.
pub fn delta_factorial_product(a: &Mat) -> BigUint {
    let m = a.len();
    let n = a[0].len();
    let mut classes: BTreeMap<(u8, BTreeSet<usize>), usize> = BTreeMap::new();
    for i in 0..m {
        let nb = (0..n).filter(|&j| a[i][j] == 1).collect();
        *classes.entry((0, nb)).or_default() += 1;
    }
    for j in 0..n {
        let nb = (0..m).filter(|&i| a[i][j] == 1).collect();
        *classes.entry((1, nb)).or_default() += 1;
    }
    classes.values().map(|&d| factorial(d)).product()
}

#[derive(Clone, Debug)]
pub struct OracleClass {
    /// Lexicographically least member, in `"01|10"` form.
    pub canonical: String,
    pub orbit_size: usize,
    pub stabilizer_order: usize,
    pub delta_factorial_product: BigUint,
}

#[derive(Clone, Debug)]
pub struct OracleSurvey {
    pub classes: Vec<OracleClass>,
    pub lhs: BigRational,
    pub rhs: BigRational,
    pub residual: BigRational,
    pub orbit_total: BigUint,
    /// `m!·n!·Σ 1/|Stab|`
    pub stabilizer_sum: BigRational,
    pub mismatch_classes: Vec<String>,
}

fn ratio(num: BigUint, den: BigUint) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn survey(m: usize, n: usize, k: usize) -> OracleSurvey {
    let rows = permutations(m);
    let cols = permutations(n);
    let mut seen: HashSet<Mat> = HashSet::new();
    let mut classes = Vec::new();
    for a in matrices(m, n, k) {
        if seen.contains(&a) {
            continue;
        }
        let mut orbit = HashSet::new();
        let mut stab = 0;
        for rho in &rows {
            for sigma in &cols {
                let b = apply(&a, rho, sigma);
                if b == a {
                    stab += 1;
                }
                orbit.insert(b);
            }
        }
        let canonical = orbit.iter().map(to_string).min().unwrap();
        classes.push(OracleClass {
            canonical,
            orbit_size: orbit.len(),
            stabilizer_order: stab,
            delta_factorial_product: delta_factorial_product(&a),
        });
        seen.extend(orbit);
    }
    classes.sort_by(|x, y| x.canonical.cmp(&y.canonical));
    let group = factorial(m) * factorial(n);
    let lhs = classes
        .iter()
        .map(|c| ratio(BigUint::one(), c.delta_factorial_product.clone()))
        .fold(BigRational::zero(), |a, b| a + b);
    let rhs = ratio(choose(m * n, k), group.clone());
    let stabilizer_sum = classes
        .iter()
        .map(|c| ratio(group.clone(), BigUint::from(c.stabilizer_order)))
        .fold(BigRational::zero(), |a, b| a + b);
    let mismatch_classes = classes
        .iter()
        .filter(|c| BigUint::from(c.stabilizer_order) != c.delta_factorial_product)
        .map(|c| c.canonical.clone())
        .collect();
    OracleSurvey {
        orbit_total: classes.iter().map(|c| BigUint::from(c.orbit_size)).sum(),
        residual: lhs.clone() - rhs.clone(),
        lhs,
        rhs,
        stabilizer_sum,
        mismatch_classes,
        classes,
    }
}

/// One line of the frozen table produced by `data/residual_oracle.py`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrozenResidual {
    pub m: usize,
    pub n: usize,
    pub k: usize,
    pub classes: usize,
    pub residual: BigRational,
    pub mismatches: usize,
}

pub fn frozen_residuals() -> Vec<FrozenResidual> {
    include_str!("../data/residuals_m4n4.txt")
        .lines()
        .map(|line| {
            let f: Vec<&str> = line.split_whitespace().collect();
            let u = |i: usize| f[i].parse::<usize>().unwrap();
            FrozenResidual {
                m: u(0),
                n: u(1),
                k: u(2),
                classes: u(3),
                residual: BigRational::new(f[4].parse().unwrap(), f[5].parse().unwrap()),
                mismatches: u(6),
            }
        })
        .collect()
}
