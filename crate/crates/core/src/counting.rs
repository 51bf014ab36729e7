//! Exact counts of b-ary partitions.
//!
//! Three independent routes to `|R_b(n)|` are provided:
//!
//! - the two-term recurrence `|R_b(n)| = |R_b(n-1)| + [b | n] |R_b(n/b)|`;
//! - its unrolled form `sum_{i=0}^{n/b} |R_b(i)|`;
//! - `pi_b(n, n)`, the number of depth-`n` nodes of the order-`n` subtree of
//!   the enumeration tree.
//!
//! `pi_b(l, k)` also gives the number of partitions with exactly `l` parts.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::partition::Basis;
use crate::tree::carry;

pub type Count = BigUint;

/// Memo tables for one basis. Not shared between threads; use one cache per
/// thread.
#[derive(Debug, Clone)]
pub struct CountCache {
    basis: Basis,
    table: Vec<Count>,
    /// `pi_rows[l][k - 1]` for `1 <= k <= clamp(l)`.
    pi_rows: Vec<Vec<Count>>,
}

impl CountCache {
    pub fn new(basis: Basis) -> Self {
        CountCache { basis, table: vec![Count::one()], pi_rows: Vec::new() }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    /// `|R_b(n)|` by the two-term recurrence.
    pub fn count(&mut self, n: u64) -> Count {
        self.fill_table(n);
        self.table[n as usize].clone()
    }

    fn fill_table(&mut self, n: u64) {
        let b = self.basis.get();
        let n = usize::try_from(n).expect("n fits in memory");
        self.table.reserve(n.saturating_sub(self.table.len()) + 1);
        for m in self.table.len()..=n {
            let mut next = self.table[m - 1].clone();
            if (m as u64).is_multiple_of(b) {
                next += &self.table[m / b as usize];
            }
            self.table.push(next);
        }
    }

    /// `sum_{i=0}^{n/b} |R_b(i)|`.
    pub fn count_sum_form(&mut self, n: u64) -> Count {
        let last = n / self.basis.get();
        self.fill_table(last);
        self.table[..=last as usize].iter().sum()
    }

    /// `pi_b(l, k)`: the number of nodes at depth exactly `l` below the root of
    /// a subtree of order `k`. Zero for negative `l`.
    ///
    /// # Panics
    ///
    /// If `k == 0`.
    pub fn pi(&mut self, l: i64, k: u32) -> Count {
        assert!(k >= 1, "subtree order must be positive");
        if l < 0 {
            return Count::zero();
        }
        let l = l as usize;
        self.fill_pi(l);
        self.pi_lookup(l, k)
    }

    /// `|R_b(n)| = pi_b(n, n)`.
    pub fn count_via_pi(&mut self, n: u64) -> Count {
        let k = u32::try_from(n.max(1)).unwrap_or(u32::MAX);
        self.pi(n as i64, k)
    }

    /// Number of partitions of `n` with exactly `l` parts:
    /// `pi_b(n - b^{l-1}, l)`, since the length-`l` partitions sit in the
    /// order-`l` subtree rooted at `(0, ..., 0, 1)`.
    ///
    /// # Panics
    ///
    /// If `l == 0`.
    pub fn count_exact_parts(&mut self, n: u64, l: u32) -> Count {
        assert!(l >= 1, "length must be positive");
        match self.basis.checked_pow(l as usize - 1) {
            Some(offset) if offset <= n => self.pi((n - offset) as i64, l),
            _ => Count::zero(),
        }
    }

    /// Smallest `k` with `b^{k-1} >= l`. For `k` at or above this value,
    /// `pi_b(l, k)` no longer depends on `k`.
    fn clamp(&self, l: usize) -> u32 {
        let b = self.basis.get() as u128;
        let mut k = 1;
        let mut power: u128 = 1;
        while power < l as u128 {
            power *= b;
            k += 1;
        }
        k
    }

    fn pi_lookup(&self, l: usize, k: u32) -> Count {
        let row = &self.pi_rows[l];
        let k = (k as usize).min(row.len());
        row[k - 1].clone()
    }

    fn pi_ref(&self, l: usize, k: u32) -> &Count {
        let row = &self.pi_rows[l];
        let k = (k as usize).min(row.len());
        &row[k - 1]
    }

    fn fill_pi(&mut self, l: usize) {
        let b = self.basis.get() as usize;
        for m in self.pi_rows.len()..=l {
            let top = self.clamp(m);
            if m < b {
                self.pi_rows.push(vec![Count::one(); top as usize]);
                continue;
            }
            // partial[j] = sum_{i=1}^{b^j} sum_{j'=1}^{c(i)} pi(m - i, j'),
            // collected while sweeping i upwards.
            let mut partial: Vec<Count> = Vec::with_capacity(top as usize);
            let mut acc = Count::zero();
            let mut checkpoint = 1usize;
            for i in 1..=m {
                let c = carry(i as u64, self.basis).expect("i >= 1");
                for j in 1..=c {
                    acc += self.pi_ref(m - i, j);
                }
                if i == checkpoint {
                    partial.push(acc.clone());
                    checkpoint = checkpoint.saturating_mul(b);
                }
            }
            let mut row = Vec::with_capacity(top as usize);
            for k in 1..=top {
                let span = (b as u128).pow(k - 1);
                if (m as u128) <= span {
                    // only k == top lands here
                    row.push(Count::one() + &acc);
                } else {
                    let span = span as usize;
                    let value = self.pi_ref(m - span, k) + &partial[k as usize - 1];
                    row.push(value);
                }
            }
            self.pi_rows.push(row);
        }
    }
}

/// `|R_b(n)|` with a throwaway cache.
pub fn count(n: u64, basis: Basis) -> Count {
    CountCache::new(basis).count(n)
}
