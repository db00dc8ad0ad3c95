//! Test-only oracle for Euler characteristics, independent of the
//! truncated-series code path.

#![allow(dead_code)]

use ci_invariants::Integer;

fn binom(n: u64, k: u64) -> Integer {
    if k > n {
        return Integer::from(0);
    }
    let mut acc = Integer::from(1);
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

/// Coefficient of `H^n` in `(1+H)^{n+1} ∏ dᵢH/(1+dᵢH)` by summing over all
/// exponent tuples of the expanded geometric series.
pub fn brute_force_euler(degrees: &[u32], n: u32) -> Integer {
    fn go(degrees: &[u32], budget: u64, n: u32) -> Integer {
        match degrees.split_first() {
            None => binom(n as u64 + 1, budget),
            Some((&d, rest)) => {
                let mut total = Integer::from(0);
                let mut power = Integer::from(1);
                for j in 0..=budget {
                    total += &power * go(rest, budget - j, n);
                    power *= -(d as i64);
                }
                total
            }
        }
    }
    let l = degrees.len() as u32;
    if l > n {
        return Integer::from(0);
    }
    let prod: Integer = degrees.iter().map(|&d| Integer::from(d)).product();
    prod * go(degrees, (n - l) as u64, n)
}

/// Middle Betti number from the oracle Euler characteristic.
pub fn brute_force_middle_betti(degrees: &[u32], n: u32) -> Integer {
    let k = n - degrees.len() as u32;
    let chi = brute_force_euler(degrees, n);
    if k % 2 == 1 {
        Integer::from(k + 1) - chi
    } else {
        chi - Integer::from(k)
    }
}
