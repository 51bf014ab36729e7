//! The infinite tree whose level `d` holds exactly the partitions of `d`.
//!
//! The sons of a node `t` are `inc(t, 0), inc(t, 1), ..., inc(t, l(t))` in that
//! order, where `l(t)` counts the leading parts equal to `b - 1`. Every
//! partition of `d + 1` has exactly one father among the partitions of `d`.

use crate::error::{Error, Result};
use crate::partition::{Basis, Partition};

/// A node of the tree. Tails are ordinary partitions; the name records the
/// role they play when a partition of `n` is rebuilt from level `l` as
/// `(n - b*l, t_0, t_1, ...)`.
pub type Tail = Partition;

/// Exponent of the largest power of `b` dividing `i`.
pub fn carry(i: u64, basis: Basis) -> Result<u32> {
    if i == 0 {
        return Err(Error::ZeroArgument);
    }
    let b = basis.get();
    let mut k = 0;
    let mut rest = i;
    while rest.is_multiple_of(b) {
        rest /= b;
        k += 1;
    }
    Ok(k)
}

pub fn children(t: &Tail) -> Vec<Tail> {
    (0..=t.leading())
        .map(|i| t.inc(i).expect("i <= leading(t)"))
        .collect()
}

/// One level of the tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Level {
    pub depth: u64,
    pub members: Vec<Tail>,
}

/// Breadth-first stream of levels `0..=max_depth`. Only the previous level
/// is kept.
#[derive(Debug)]
pub struct Levels {
    basis: Basis,
    max_depth: u64,
    cap: usize,
    current: Option<Level>,
    failed: bool,
}

pub fn levels(basis: Basis, max_depth: u64) -> Levels {
    Levels { basis, max_depth, cap: usize::MAX, current: None, failed: false }
}

impl Levels {
    /// Stops with [`Error::CapExceeded`] as soon as a level would hold more
    /// than `cap` members.
    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }
}

impl Iterator for Levels {
    type Item = Result<Level>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed {
            return None;
        }
        let next = match &self.current {
            None => Level { depth: 0, members: vec![Partition::empty(self.basis)] },
            Some(level) if level.depth >= self.max_depth => return None,
            Some(level) => match expand(&level.members, self.cap) {
                Ok(members) => Level { depth: level.depth + 1, members },
                Err(e) => {
                    self.failed = true;
                    return Some(Err(e));
                }
            },
        };
        self.current = Some(next.clone());
        Some(Ok(next))
    }
}

fn expand(members: &[Tail], cap: usize) -> Result<Vec<Tail>> {
    let width: usize = members.iter().map(|t| t.leading() + 1).sum();
    if width > cap {
        return Err(Error::CapExceeded { cap });
    }
    let mut next = Vec::with_capacity(width);
    for t in members {
        next.extend(children(t));
    }
    Ok(next)
}

/// All partitions of `n`, read off the levels `0..=n/b` of the tree: a tail
/// `t` at level `l` gives `(n - b*l, t_0, t_1, ...)`.
///
/// Output order is level order. Work is linear in the output size times the
/// partition length.
pub fn enumerate(n: u64, basis: Basis, cap: usize) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    for_each(n, basis, cap, |parts| {
        out.push(Partition::new(parts.to_vec(), basis));
    })?;
    Ok(out)
}

/// Streams the partitions of `n` as part slices without allocating a
/// [`Partition`] per element.
pub fn for_each(n: u64, basis: Basis, cap: usize, mut visit: impl FnMut(&[u64])) -> Result<usize> {
    let b = basis.get();
    let deepest = n / b;
    let mut produced = 0usize;
    let mut buf: Vec<u64> = Vec::new();
    let mut level = vec![Partition::empty(basis)];
    for depth in 0..=deepest {
        if depth > 0 {
            level = expand(&level, cap)?;
        }
        produced += level.len();
        if produced > cap {
            return Err(Error::CapExceeded { cap });
        }
        let first = n - b * depth;
        for tail in &level {
            buf.clear();
            buf.push(first);
            buf.extend_from_slice(tail.parts());
            let len = if tail.is_empty() && first == 0 { 0 } else { buf.len() };
            visit(&buf[..len]);
        }
    }
    Ok(produced)
}

/// The `i`-th node (1-based) on the rightmost branch, found by walking from
/// the root along last sons.
pub fn rightmost_branch(basis: Basis, i: u64) -> Result<Tail> {
    if i == 0 {
        return Err(Error::ZeroArgument);
    }
    let mut node = Partition::empty(basis);
    for _ in 1..i {
        let last = node.leading();
        node = node.inc(last)?;
    }
    Ok(node)
}

/// `Some(k + 1)` when `t` has exactly `k` leading zeros followed by a part
/// larger than `b - 1`, i.e. `t` roots a subtree of order `k + 1`.
pub fn x_root_order(t: &Tail) -> Option<usize> {
    let zeros = t.parts().iter().take_while(|&&x| x == 0).count();
    let top = t.basis().max_digit();
    match t.parts().get(zeros) {
        Some(&part) if part > top => Some(zeros + 1),
        _ => None,
    }
}
