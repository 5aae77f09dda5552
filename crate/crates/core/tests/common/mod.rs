//! Independent oracles used by the integration and acceptance suites.
//! Everything here recomputes results by brute force, without going through
//! the code paths under test.

#![allow(dead_code)]

/// Dynamic-programming reachability: `out[x]` says whether `x` is a
/// nonnegative integer combination of `gens`.
pub fn dp_members(gens: &[u64], bound: u64) -> Vec<bool> {
    let b = bound as usize;
    let mut dp = vec![false; b + 1];
    dp[0] = true;
    for x in 1..=b {
        for &g in gens {
            let g = g as usize;
            if x >= g && dp[x - g] {
                dp[x] = true;
                break;
            }
        }
    }
    dp
}

/// Least member of the semigroup in each residue class mod `a`, found by a
/// plain scan of the DP table. The scan bound `min*max + max + a` is safe
/// because the Frobenius number is below the product of the two smallest
/// generators.
pub fn oracle_apery(gens: &[u64], a: u64) -> Vec<u64> {
    let min = gens.iter().min().unwrap();
    let max = gens.iter().max().unwrap();
    let second = gens.iter().filter(|&&g| g != *min).min().unwrap_or(max);
    let bound = min * second + max + a;
    let dp = dp_members(gens, bound);
    let mut entries = vec![u64::MAX; a as usize];
    for (x, &member) in dp.iter().enumerate() {
        if member {
            let r = (x as u64 % a) as usize;
            if entries[r] == u64::MAX {
                entries[r] = x as u64;
            }
        }
    }
    assert!(
        entries.iter().all(|&w| w != u64::MAX),
        "oracle scan bound too small"
    );
    entries
}

/// Frobenius number straight from the DP table.
pub fn oracle_frobenius(gens: &[u64]) -> i64 {
    let table = oracle_apery(gens, *gens.iter().min().unwrap());
    let max = *table.iter().max().unwrap();
    max as i64 - *gens.iter().min().unwrap() as i64
}

/// All exponent vectors summing to `s`, by nested loops. Supports up to
/// four generators, which is all the fiber-size property needs.
pub fn oracle_fiber(gens: &[u64], s: u64) -> Vec<Vec<u32>> {
    assert!(gens.len() <= 4, "oracle only handles up to 4 generators");
    let mut out = Vec::new();
    let mut padded = gens.to_vec();
    while padded.len() < 4 {
        padded.push(u64::MAX); // unusable filler: exponent stays 0
    }
    let lim = |g: u64| if g == u64::MAX { 0 } else { s / g };
    for a in 0..=lim(padded[0]) {
        for b in 0..=lim(padded[1]) {
            for c in 0..=lim(padded[2]) {
                for d in 0..=lim(padded[3]) {
                    // filler exponents are always zero, so 0 * MAX never occurs
                    let total = a as u128 * padded[0] as u128
                        + b as u128 * padded[1] as u128
                        + c as u128 * padded[2] as u128
                        + d as u128 * padded[3] as u128;
                    if total == s as u128 {
                        let mut v = vec![a as u32, b as u32, c as u32, d as u32];
                        v.truncate(gens.len());
                        out.push(v);
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// Standard monomials counted directly: every monomial of total degree at
/// most `degree_cap` that no generator divides, enumerated over the full
/// cube of side `degree_cap + 1`.
pub fn oracle_standard_monomials(num_vars: usize, gens: &[Vec<u32>], degree_cap: u32) -> u64 {
    fn divides(a: &[u32], b: &[u32]) -> bool {
        a.iter().zip(b).all(|(&x, &y)| x <= y)
    }
    let mut count = 0u64;
    let mut point = vec![0u32; num_vars];
    loop {
        let total: u32 = point.iter().sum();
        if total <= degree_cap && !gens.iter().any(|g| divides(g, &point)) {
            count += 1;
        }
        let mut var = 0;
        loop {
            if var == num_vars {
                return count;
            }
            point[var] += 1;
            if point[var] <= degree_cap {
                break;
            }
            point[var] = 0;
            var += 1;
        }
    }
}

/// Fixed deterministic stable of small semigroups covering the edge cases:
/// the full semigroup, two-generator pairs, and the reference quadruples.
pub fn sample_semigroups() -> Vec<Vec<u64>> {
    vec![
        vec![1],
        vec![2, 3],
        vec![3, 4, 5],
        vec![5, 9],
        vec![3, 7],
        vec![4, 6, 9],
        vec![5, 7, 11],
        vec![6, 10, 15],
        vec![7, 8, 17, 18],
        vec![8, 9, 22, 23],
        vec![10, 13, 42, 45, 48],
        vec![12, 15, 20, 23],
        vec![35, 36, 41, 42],
        vec![9, 11, 14],
    ]
}
