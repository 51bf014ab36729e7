//! Brute-force ground truth.
//!
//! Nothing here calls the firing rule, the odometer, the tree, the lattice or
//! the counting code: partitions are found by direct digit search and
//! reachability by a private copy of the move rule. Agreement with the rest of
//! the crate is therefore independent evidence.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::partition::{Basis, Partition};

/// Largest `n` the brute-force routines accept for a basis by default.
pub fn default_max_n(basis: Basis) -> u64 {
    match basis.get() {
        2 => 60,
        3 => 81,
        _ => 120,
    }
}

fn check_cap(n: u64, max_n: u64) -> Result<()> {
    if n > max_n {
        return Err(Error::CapExceeded { cap: max_n as usize });
    }
    Ok(())
}

/// Every b-ary partition of `n`, by exhaustive digit search from the highest
/// power down.
pub fn brute_enumerate(n: u64, basis: Basis) -> Result<Vec<Partition>> {
    brute_enumerate_capped(n, basis, default_max_n(basis))
}

pub fn brute_enumerate_capped(n: u64, basis: Basis, max_n: u64) -> Result<Vec<Partition>> {
    check_cap(n, max_n)?;
    let b = basis.get();
    let mut powers = vec![1u64];
    while let Some(&last) = powers.last() {
        match last.checked_mul(b) {
            Some(next) if next <= n => powers.push(next),
            _ => break,
        }
    }
    let mut digits = vec![0u64; powers.len()];
    let mut out = Vec::new();
    search(&powers, powers.len(), n, &mut digits, &mut out, basis);
    Ok(out)
}

fn search(
    powers: &[u64],
    position: usize,
    remaining: u64,
    digits: &mut Vec<u64>,
    out: &mut Vec<Partition>,
    basis: Basis,
) {
    if position == 0 {
        if remaining == 0 {
            out.push(Partition::new(digits.clone(), basis));
        }
        return;
    }
    let j = position - 1;
    if j == 0 {
        // the units digit takes whatever is left
        digits[0] = remaining;
        search(powers, 0, 0, digits, out, basis);
        return;
    }
    for d in 0..=remaining / powers[j] {
        digits[j] = d;
        search(powers, j, remaining - d * powers[j], digits, out, basis);
    }
    digits[j] = 0;
}

pub fn brute_count(n: u64, basis: Basis) -> Result<u64> {
    Ok(brute_enumerate(n, basis)?.len() as u64)
}

/// One-move neighbours under the rule `p_i -= b, p_{i+1} += 1`.
fn moves(parts: &[u64], b: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    for i in 0..parts.len() {
        if parts[i] >= b {
            let mut q = parts.to_vec();
            q[i] -= b;
            if i + 1 == q.len() {
                q.push(0);
            }
            q[i + 1] += 1;
            while q.last() == Some(&0) {
                q.pop();
            }
            out.push(q);
        }
    }
    out
}

/// Everything reachable from `from` by zero or more moves.
pub fn brute_reachable(from: &Partition) -> HashSet<Vec<u64>> {
    let b = from.basis().get();
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(from.parts().to_vec());
    queue.push_back(from.parts().to_vec());
    while let Some(cur) = queue.pop_front() {
        for q in moves(&cur, b) {
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    seen
}

/// True iff `p` is reachable from `q`, by breadth-first search.
pub fn brute_leq(p: &Partition, q: &Partition, n: u64, basis: Basis) -> Result<bool> {
    check_cap(n, default_max_n(basis))?;
    Ok(brute_reachable(q).contains(p.parts()))
}
