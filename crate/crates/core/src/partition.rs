//! b-ary partitions and the firing dynamics on them.
//!
//! A partition is stored little-endian, lowest power first, with no trailing
//! zero parts. The partition of 0 is the empty sequence.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The basis `b` of a b-ary partition. Always at least 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct Basis(u64);

impl Basis {
    pub fn new(b: u64) -> Result<Self> {
        if b < 2 {
            return Err(Error::InvalidBasis(b));
        }
        Ok(Basis(b))
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    /// The largest digit of the canonical representation, `b - 1`.
    #[inline]
    pub fn max_digit(self) -> u64 {
        self.0 - 1
    }

    /// `b^e`, or `None` on overflow.
    pub fn checked_pow(self, e: usize) -> Option<u64> {
        let e = u32::try_from(e).ok()?;
        self.0.checked_pow(e)
    }
}

impl TryFrom<u64> for Basis {
    type Error = Error;

    fn try_from(b: u64) -> Result<Self> {
        Basis::new(b)
    }
}

impl From<Basis> for u64 {
    fn from(b: Basis) -> u64 {
        b.0
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A b-ary partition `(p_0, ..., p_{k-1})` with `p_{k-1} != 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u64>,
    basis: Basis,
}

fn trim_zeros(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

impl Partition {
    /// Builds a partition from its parts, dropping trailing zeros.
    pub fn new(mut parts: Vec<u64>, basis: Basis) -> Self {
        trim_zeros(&mut parts);
        Partition { parts, basis }
    }

    /// The one-part partition `(n)`, top of the lattice of partitions of `n`.
    pub fn single(n: u64, basis: Basis) -> Self {
        Partition::new(vec![n], basis)
    }

    pub fn empty(basis: Basis) -> Self {
        Partition { parts: Vec::new(), basis }
    }

    /// The usual base-`b` digits of `n`.
    pub fn canonical(mut n: u64, basis: Basis) -> Self {
        let b = basis.get();
        let mut parts = Vec::new();
        while n > 0 {
            parts.push(n % b);
            n /= b;
        }
        Partition { parts, basis }
    }

    /// Parses the textual form `p0,p1,...`. A lone `0` (or empty input) is
    /// the partition of zero.
    pub fn parse(text: &str, basis: Basis) -> Result<Self> {
        let text = text.trim();
        let text = text
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(text);
        if text.is_empty() {
            return Ok(Partition::empty(basis));
        }
        let parts = text
            .split(',')
            .map(|s| s.trim().parse::<u64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse(text.to_string()))?;
        Ok(Partition::new(parts, basis))
    }

    #[inline]
    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u64> {
        self.parts
    }

    #[inline]
    pub fn basis(&self) -> Basis {
        self.basis
    }

    /// Number of parts `k`.
    #[inline]
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i`, with the convention that parts beyond the length are zero.
    #[inline]
    pub fn part(&self, i: usize) -> u64 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// `sum p_i b^i`, with overflow reported rather than wrapped.
    pub fn value(&self) -> Result<u64> {
        let b = self.basis.get();
        let mut acc: u64 = 0;
        for &p in self.parts.iter().rev() {
            acc = acc
                .checked_mul(b)
                .and_then(|a| a.checked_add(p))
                .ok_or(Error::Overflow("partition value"))?;
        }
        Ok(acc)
    }

    pub fn is_canonical(&self) -> bool {
        let b = self.basis.get();
        self.parts.iter().all(|&p| p < b)
    }

    /// Moves `b` units from part `i` to one unit of part `i + 1`.
    ///
    /// Firing the last position extends the partition by one part.
    pub fn fire(&self, i: usize) -> Result<Partition> {
        let b = self.basis.get();
        let len = self.parts.len();
        if i >= len {
            return Err(Error::PositionOutOfRange { position: i, len });
        }
        let part = self.parts[i];
        if part < b {
            return Err(Error::FireUnderflow { position: i, part, basis: b });
        }
        let mut parts = self.parts.clone();
        parts[i] = part - b;
        if i + 1 == len {
            parts.push(1);
        } else {
            parts[i + 1] = parts[i + 1]
                .checked_add(1)
                .ok_or(Error::Overflow("fire"))?;
        }
        Ok(Partition::new(parts, self.basis))
    }

    /// The inverse of [`fire`](Self::fire) at `i - 1`: takes one unit from
    /// part `i` and gives `b` units to part `i - 1`.
    pub fn unfire(&self, i: usize) -> Result<Partition> {
        let len = self.parts.len();
        if i == 0 || i >= len {
            return Err(Error::PositionOutOfRange { position: i, len });
        }
        if self.parts[i] == 0 {
            return Err(Error::UnfireUnderflow { position: i });
        }
        let mut parts = self.parts.clone();
        parts[i] -= 1;
        parts[i - 1] = parts[i - 1]
            .checked_add(self.basis.get())
            .ok_or(Error::Overflow("unfire"))?;
        Ok(Partition::new(parts, self.basis))
    }

    /// Positions that can be fired, in increasing order.
    pub fn fireable_positions(&self) -> impl Iterator<Item = usize> + '_ {
        let b = self.basis.get();
        self.parts
            .iter()
            .enumerate()
            .filter(move |&(_, &p)| p >= b)
            .map(|(i, _)| i)
    }

    /// All partitions reachable by one firing, ordered by fired position.
    pub fn successors(&self) -> Vec<Partition> {
        self.fireable_positions()
            .map(|i| self.fire(i).expect("fireable position"))
            .collect()
    }

    /// All partitions from which one firing leads to `self`.
    pub fn predecessors(&self) -> Vec<Partition> {
        (1..self.parts.len())
            .filter(|&i| self.parts[i] > 0)
            .map(|i| self.unfire(i).expect("unfireable position"))
            .collect()
    }

    /// Per-position firing counts on any path from `(n)` to `self`.
    pub fn shot_vector(&self, n: u64) -> Result<ShotVector> {
        let found = self.value()?;
        if found != n {
            return Err(Error::InconsistentValue { expected: n, found });
        }
        let b = self.basis.get();
        let mut shots = Vec::with_capacity(self.parts.len());
        let mut incoming = n;
        for &p in &self.parts {
            let rest = incoming
                .checked_sub(p)
                .filter(|r| r % b == 0)
                .ok_or(Error::UnreachablePartition { n })?;
            incoming = rest / b;
            shots.push(incoming);
        }
        // p_k = 0 beyond the last part forces the last shot count to vanish.
        if incoming != 0 {
            return Err(Error::UnreachablePartition { n });
        }
        Ok(ShotVector::new(shots))
    }

    /// Rebuilds the partition of `n` with the given shot vector.
    pub fn from_shots(n: u64, shots: &ShotVector, basis: Basis) -> Result<Partition> {
        let b = basis.get();
        let s = shots.shots();
        let mut parts = Vec::with_capacity(s.len() + 1);
        let mut incoming = n;
        for (position, &fired) in s.iter().enumerate() {
            let part = fired
                .checked_mul(b)
                .and_then(|sent| incoming.checked_sub(sent))
                .ok_or(Error::InvalidShotVector { n, position })?;
            parts.push(part);
            incoming = fired;
        }
        parts.push(incoming);
        Ok(Partition::new(parts, basis))
    }

    /// Length of the maximal prefix of parts equal to `b - 1`.
    pub fn leading(&self) -> usize {
        let top = self.basis.max_digit();
        self.parts.iter().take_while(|&&p| p == top).count()
    }

    /// The odometer step: zero the first `i` parts (all `b - 1`) and add one
    /// to part `i`. Adds one to the value.
    pub fn inc(&self, i: usize) -> Result<Partition> {
        let top = self.basis.max_digit();
        if i > self.parts.len() || self.parts[..i].iter().any(|&p| p != top) {
            return Err(Error::IncPreconditionViolated { i, expected: top });
        }
        let mut parts = self.parts.clone();
        parts[..i].iter_mut().for_each(|p| *p = 0);
        if i == parts.len() {
            parts.push(1);
        } else {
            parts[i] = parts[i].checked_add(1).ok_or(Error::Overflow("inc"))?;
        }
        Ok(Partition { parts, basis: self.basis })
    }

    /// Comma-separated parts, `0` for the partition of zero.
    pub fn to_text(&self) -> String {
        if self.parts.is_empty() {
            return "0".to_string();
        }
        join_numbers(&self.parts)
    }
}

pub(crate) fn join_numbers(v: &[u64]) -> String {
    let mut s = String::new();
    for (i, p) in v.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        s.push_str(&p.to_string());
    }
    s
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_text())
    }
}

/// Firing counts per position. Entries past the stored length are zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ShotVector {
    shots: Vec<u64>,
}

impl ShotVector {
    pub fn new(mut shots: Vec<u64>) -> Self {
        trim_zeros(&mut shots);
        ShotVector { shots }
    }

    #[inline]
    pub fn shots(&self) -> &[u64] {
        &self.shots
    }

    #[inline]
    pub fn get(&self, i: usize) -> u64 {
        self.shots.get(i).copied().unwrap_or(0)
    }

    /// True iff every entry of `self` is at least the matching entry of `other`.
    pub fn dominates(&self, other: &ShotVector) -> bool {
        let len = self.shots.len().max(other.shots.len());
        (0..len).all(|i| self.get(i) >= other.get(i))
    }

    fn zip_with(&self, other: &ShotVector, f: impl Fn(u64, u64) -> u64) -> ShotVector {
        let len = self.shots.len().max(other.shots.len());
        ShotVector::new((0..len).map(|i| f(self.get(i), other.get(i))).collect())
    }

    pub fn min(&self, other: &ShotVector) -> ShotVector {
        self.zip_with(other, u64::min)
    }

    pub fn max(&self, other: &ShotVector) -> ShotVector {
        self.zip_with(other, u64::max)
    }

    pub fn to_text(&self) -> String {
        if self.shots.is_empty() {
            return "0".to_string();
        }
        join_numbers(&self.shots)
    }
}

impl fmt::Display for ShotVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_text())
    }
}
