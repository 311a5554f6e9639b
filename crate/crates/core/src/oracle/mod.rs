//! Exhaustive and seeded checks of the approximation, measure and entropy
//! claims on small universes.
//!
//! Instances are built deterministically from `(n, samples, seed)`:
//!
//! * every partition of `x0..x{n-1}` from [`enumerate_partitions`];
//! * `samples` pairs `(S_i, F_i)` with
//!   `S_i = random_soft_set(X, 1 + i % 3, instance_seed(seed, 2i))` and
//!   `F_i = random_soft_set(X, 1 + (i / 3) % 3, instance_seed(seed, 2i + 1))`;
//! * four extra pairs mixing a two-attribute null and whole soft set with
//!   `S_0`, so the special-class claims have instances.

mod approx_claims;
mod entropy_claims;
mod measure_claims;
pub mod report;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::set::ElementSet;
use crate::softset::SoftSet;
use crate::space::{Partition, Universe};

pub use approx_claims::verify_approx_theorems;
pub use entropy_claims::verify_entropy_claims;
pub use measure_claims::verify_measure_claims;
pub use report::{ClaimKind, ClaimResult, Status, VerificationReport};

fn check_range(what: &'static str, value: usize, min: usize, max: usize) -> Result<()> {
    if (min..=max).contains(&value) {
        Ok(())
    } else {
        Err(Error::SizeOutOfRange {
            what,
            value,
            min,
            max,
        })
    }
}

/// All partitions of `Universe::indexed(n)`, `1 <= n <= 10`, in
/// lexicographic order of their restricted growth strings.
pub fn enumerate_partitions(n: usize) -> Result<Vec<Partition>> {
    check_range("n", n, 1, 10)?;
    let u = Universe::indexed(n)?;
    Ok(restricted_growth_strings(n)
        .into_iter()
        .map(|rgs| Partition::from_assignment(&u, &rgs).expect("length n"))
        .collect())
}

/// Sequences `a` of length `n` with `a[0] = 0` and
/// `a[i] <= 1 + max(a[..i])`, in lexicographic order.
pub fn restricted_growth_strings(n: usize) -> Vec<Vec<usize>> {
    fn go(a: &mut Vec<usize>, n: usize, max: usize, out: &mut Vec<Vec<usize>>) {
        if a.len() == n {
            out.push(a.clone());
            return;
        }
        let top = if a.is_empty() { 0 } else { max + 1 };
        for b in 0..=top {
            a.push(b);
            go(a, n, max.max(b), out);
            a.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(&mut Vec::with_capacity(n), n, 0, &mut out);
    }
    out
}

/// Bell numbers `B(0..=n)` from `B(m+1) = sum_k C(m,k) B(k)`.
pub fn bell_numbers(n: usize) -> Vec<u64> {
    let mut bell = vec![1u64];
    for m in 0..n {
        let mut binom = 1u64;
        let mut next = 0u64;
        for (k, b) in bell.iter().enumerate().take(m + 1) {
            next += binom * b;
            binom = binom * (m - k) as u64 / (k + 1) as u64;
        }
        bell.push(next);
    }
    bell
}

/// Seed of the `j`-th derived instance.
pub fn instance_seed(seed: u64, j: u64) -> u64 {
    seed ^ j.wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

/// `k` attributes `e1..ek` with values uniform over the subsets of `u`.
///
/// Generator: `ChaCha8Rng::seed_from_u64(seed)`. For each attribute in order
/// and each 64-element word of the membership vector (lowest indices
/// first), one `next_u64` is drawn; bit `b` of word `w` decides element
/// `64 w + b`, and bits past `|X|` are discarded.
pub fn random_soft_set(u: &Universe, k: usize, seed: u64) -> SoftSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = u.len();
    let words = n.div_ceil(64);
    let attrs = (1..=k).map(|a| {
        let mut v = ElementSet::empty(n);
        for w in 0..words {
            let bits = rng.next_u64();
            for b in 0..64 {
                let i = 64 * w + b;
                if i < n && bits >> b & 1 == 1 {
                    v.insert(i);
                }
            }
        }
        (format!("e{a}"), v)
    });
    SoftSet::new(u, attrs.collect::<Vec<_>>()).expect("generated names are valid")
}

/// The seeded instance pairs described in the module docs.
pub fn instance_pairs(u: &Universe, samples: usize, seed: u64) -> Vec<(SoftSet, SoftSet)> {
    let mut pairs: Vec<(SoftSet, SoftSet)> = (0..samples)
        .map(|i| {
            let j = i as u64;
            (
                random_soft_set(u, 1 + i % 3, instance_seed(seed, 2 * j)),
                random_soft_set(u, 1 + (i / 3) % 3, instance_seed(seed, 2 * j + 1)),
            )
        })
        .collect();
    let null = SoftSet::new(u, [("n1", u.empty_set()), ("n2", u.empty_set())])
        .expect("valid names");
    let whole = null.complement();
    let base = random_soft_set(u, 2, instance_seed(seed, u64::MAX));
    pairs.push((null.clone(), base.clone()));
    pairs.push((base.clone(), null));
    pairs.push((whole.clone(), base.clone()));
    pairs.push((base, whole));
    pairs
}

/// Single soft sets drawn from the instance pairs, both members of each.
pub fn instance_sets(u: &Universe, samples: usize, seed: u64) -> Vec<SoftSet> {
    instance_pairs(u, samples, seed)
        .into_iter()
        .flat_map(|(s, f)| [s, f])
        .collect()
}

/// `(i, j)` for every ordered pair with `parts[i]` refining `parts[j]`,
/// `i != j`.
pub fn refinement_pairs(parts: &[Partition]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (i, p) in parts.iter().enumerate() {
        for (j, q) in parts.iter().enumerate() {
            if i != j && p.refines(q).expect("same universe") {
                out.push((i, j));
            }
        }
    }
    out
}

fn check_oracle_size(n: usize) -> Result<()> {
    check_range("n", n, 2, 5)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn bell_counts() {
        assert_eq!(bell_numbers(7), vec![1, 1, 2, 5, 15, 52, 203, 877]);
        for n in 1..=7 {
            let parts = enumerate_partitions(n).unwrap();
            assert_eq!(parts.len() as u64, bell_numbers(n)[n]);
            let distinct: HashSet<String> = parts.iter().map(|p| p.to_string()).collect();
            assert_eq!(distinct.len(), parts.len());
        }
    }

    #[test]
    fn enumeration_order_and_bounds() {
        let parts = enumerate_partitions(3).unwrap();
        let shown: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
        assert_eq!(
            shown,
            vec![
                "[{x0,x1,x2}]",
                "[{x0,x1},{x2}]",
                "[{x0,x2},{x1}]",
                "[{x0},{x1,x2}]",
                "[{x0},{x1},{x2}]"
            ]
        );
        assert_eq!(enumerate_partitions(1).unwrap().len(), 1);
        assert!(matches!(enumerate_partitions(0), Err(Error::SizeOutOfRange { .. })));
        assert!(matches!(enumerate_partitions(11), Err(Error::SizeOutOfRange { .. })));
    }

    #[test]
    fn random_soft_sets_are_deterministic() {
        let u = Universe::indexed(4).unwrap();
        let a = random_soft_set(&u, 3, 7);
        assert_eq!(a, random_soft_set(&u, 3, 7));
        assert_eq!(a.names().collect::<Vec<_>>(), vec!["e1", "e2", "e3"]);
        assert_eq!(random_soft_set(&u, 1, 7).len(), 1);
        let wide = Universe::indexed(130).unwrap();
        let w = random_soft_set(&wide, 2, 1);
        assert!(w.values().all(|v| v.width() == 130));
        assert!(w.values().any(|v| v.iter().any(|i| i >= 128)));
    }

    #[test]
    fn random_values_cover_extremes() {
        let u = Universe::indexed(2).unwrap();
        let mut seen = HashSet::new();
        for seed in 0..200 {
            for v in random_soft_set(&u, 3, seed).values() {
                seen.insert(v.iter().collect::<Vec<_>>());
            }
        }
        assert_eq!(seen.len(), 4);
    }
}
