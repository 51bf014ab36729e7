//! Chip-firing encoding of the partition dynamics.
//!
//! Vertices are `0..=n`; there are `b^{i+1}` parallel edges from vertex `i`
//! to vertex `i + 1`. A vertex holding at least its out-degree in chips may
//! fire, sending one chip along each outgoing edge. Dividing the chip count
//! of vertex `i` by `b^i` turns a configuration into a b-ary partition, and
//! firing vertex `i` into firing position `i`.

use std::collections::{HashSet, VecDeque};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::partition::{Basis, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CfgConfig {
    basis: Basis,
    n: u64,
    chips: Vec<BigUint>,
}

fn trim(chips: &mut Vec<BigUint>) {
    while chips.last().is_some_and(Zero::is_zero) {
        chips.pop();
    }
}

fn power(basis: Basis, e: usize) -> BigUint {
    num_traits::pow(BigUint::from(basis.get()), e)
}

/// All chips on vertex 0.
pub fn initial_config(n: u64, basis: Basis) -> CfgConfig {
    let mut chips = vec![BigUint::from(n)];
    trim(&mut chips);
    CfgConfig { basis, n, chips }
}

impl CfgConfig {
    /// Checks conservation and integrality before accepting `chips`.
    pub fn new(basis: Basis, n: u64, mut chips: Vec<BigUint>) -> Result<Self> {
        trim(&mut chips);
        let total: BigUint = chips.iter().sum();
        if total != BigUint::from(n) {
            let found = total.to_u64().unwrap_or(u64::MAX);
            return Err(Error::InconsistentValue { expected: n, found });
        }
        let config = CfgConfig { basis, n, chips };
        config.to_partition()?;
        Ok(config)
    }

    /// Inverse of [`to_partition`](Self::to_partition): vertex `i` gets
    /// `p_i * b^i` chips.
    pub fn from_partition(p: &Partition) -> Result<Self> {
        let n = p.value()?;
        let chips = p
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &part)| BigUint::from(part) * power(p.basis(), i))
            .collect();
        Ok(CfgConfig { basis: p.basis(), n, chips })
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn chips(&self) -> &[BigUint] {
        &self.chips
    }

    pub fn chips_at(&self, vertex: usize) -> BigUint {
        self.chips.get(vertex).cloned().unwrap_or_default()
    }

    pub fn out_degree(&self, vertex: usize) -> BigUint {
        if vertex as u64 >= self.n {
            BigUint::zero()
        } else {
            power(self.basis, vertex + 1)
        }
    }

    pub fn can_fire(&self, vertex: usize) -> bool {
        let degree = self.out_degree(vertex);
        !degree.is_zero() && self.chips_at(vertex) >= degree
    }

    /// Sends `b^{i+1}` chips from vertex `i` to vertex `i + 1`.
    pub fn fire_vertex(&self, vertex: usize) -> Result<CfgConfig> {
        if !self.can_fire(vertex) {
            return Err(Error::InsufficientChips { vertex });
        }
        let degree = self.out_degree(vertex);
        let mut chips = self.chips.clone();
        if chips.len() == vertex + 1 {
            chips.push(BigUint::zero());
        }
        chips[vertex] -= &degree;
        chips[vertex + 1] += degree;
        trim(&mut chips);
        Ok(CfgConfig { basis: self.basis, n: self.n, chips })
    }

    pub fn successors(&self) -> Vec<CfgConfig> {
        (0..self.chips.len())
            .filter(|&v| self.can_fire(v))
            .map(|v| self.fire_vertex(v).expect("fireable"))
            .collect()
    }

    /// Scales vertex `i` down by `b^i`.
    pub fn to_partition(&self) -> Result<Partition> {
        let mut scale = BigUint::one();
        let b = BigUint::from(self.basis.get());
        let mut parts = Vec::with_capacity(self.chips.len());
        for (vertex, c) in self.chips.iter().enumerate() {
            if !(c % &scale).is_zero() {
                return Err(Error::IntegralityViolated { vertex });
            }
            let part = (c / &scale).to_u64().ok_or(Error::Overflow("chip scaling"))?;
            parts.push(part);
            scale *= &b;
        }
        Ok(Partition::new(parts, self.basis))
    }

    /// Chip counts as decimal strings.
    pub fn to_json(&self) -> String {
        let strings: Vec<String> = self.chips.iter().map(ToString::to_string).collect();
        serde_json::to_string(&strings).expect("strings serialize")
    }
}

/// Every configuration reachable from [`initial_config`], breadth first.
pub fn reachable_configs(n: u64, basis: Basis, cap: usize) -> Result<Vec<CfgConfig>> {
    let start = initial_config(n, basis);
    let mut seen = HashSet::from([start.clone()]);
    let mut order = vec![start.clone()];
    let mut queue = VecDeque::from([start]);
    while let Some(c) = queue.pop_front() {
        for next in c.successors() {
            if seen.insert(next.clone()) {
                if order.len() >= cap {
                    return Err(Error::CapExceeded { cap });
                }
                order.push(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(order)
}
