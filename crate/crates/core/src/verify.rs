//! Cross-validation of every construction against the brute-force oracle and
//! against each other. Each `check_*` function returns the first
//! counterexample it meets as an `Err(String)`.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::cfg::{self, CfgConfig};
use crate::counting::{Count, CountCache};
use crate::lattice::{self, DEFAULT_DISTRIBUTIVE_CAP, DEFAULT_NODE_CAP};
use crate::oracle;
use crate::partition::{Basis, Partition};
use crate::tree;

pub type CheckResult = std::result::Result<(), String>;

/// Largest `n` for which pairwise order checks run.
pub const ORDER_MAX_N: u64 = 20;
/// Largest `n` for which the chip-firing simulation runs.
pub const CFG_MAX_N: u64 = 30;

fn as_set(v: impl IntoIterator<Item = Partition>) -> HashSet<Partition> {
    v.into_iter().collect()
}

fn describe(set: &HashSet<Partition>, other: &HashSet<Partition>) -> String {
    let missing: Vec<String> = other.difference(set).take(3).map(|p| p.to_string()).collect();
    let extra: Vec<String> = set.difference(other).take(3).map(|p| p.to_string()).collect();
    format!("missing [{}], unexpected [{}]", missing.join(" "), extra.join(" "))
}

fn oracle_set(n: u64, basis: Basis) -> std::result::Result<HashSet<Partition>, String> {
    oracle::brute_enumerate_capped(n, basis, n)
        .map(as_set)
        .map_err(|e| e.to_string())
}

/// Tree enumeration, covering-diagram nodes and brute force agree as sets.
pub fn check_enumeration(basis: Basis, n: u64) -> CheckResult {
    let want = oracle_set(n, basis)?;
    let listed = tree::enumerate(n, basis, DEFAULT_NODE_CAP).map_err(|e| e.to_string())?;
    let from_tree = as_set(listed.iter().cloned());
    if from_tree.len() != listed.len() {
        return Err(format!("n={n}: tree enumeration produced duplicates"));
    }
    if from_tree != want {
        return Err(format!("n={n}: tree vs oracle: {}", describe(&from_tree, &want)));
    }
    let diagram = lattice::build_hasse(n, basis, DEFAULT_NODE_CAP).map_err(|e| e.to_string())?;
    let from_hasse = as_set(diagram.nodes().iter().cloned());
    if from_hasse != want {
        return Err(format!("n={n}: diagram vs oracle: {}", describe(&from_hasse, &want)));
    }
    check_diagram_shape(&diagram)
}

/// Unique top `(n)`, unique bottom (canonical), edges are exactly firings.
pub fn check_diagram_shape(diagram: &lattice::HasseDiagram) -> CheckResult {
    let n = diagram.n();
    let basis = diagram.basis();
    let size = diagram.node_count();
    let mut indegree = vec![0usize; size];
    let mut outdegree = vec![0usize; size];
    for e in diagram.edges() {
        let fired = diagram.nodes()[e.source].fire(e.position).map_err(|err| err.to_string())?;
        if fired != diagram.nodes()[e.target] {
            return Err(format!("n={n}: edge {:?} is not a firing", e));
        }
        indegree[e.target] += 1;
        outdegree[e.source] += 1;
    }
    let successors: usize = diagram.nodes().iter().map(|p| p.successors().len()).sum();
    if successors != diagram.edge_count() {
        return Err(format!("n={n}: {} edges but {successors} successor pairs", diagram.edge_count()));
    }
    let sources: Vec<usize> = (0..size).filter(|&u| indegree[u] == 0).collect();
    let sinks: Vec<usize> = (0..size).filter(|&u| outdegree[u] == 0).collect();
    if sources.len() != 1 || diagram.nodes()[sources[0]] != Partition::single(n, basis) {
        return Err(format!("n={n}: sources {sources:?}"));
    }
    if sinks.len() != 1 || diagram.nodes()[sinks[0]] != Partition::canonical(n, basis) {
        return Err(format!("n={n}: sinks {sinks:?}"));
    }
    Ok(())
}

/// The three counting formulas agree; with `oracle` set, brute force too.
pub fn check_counts(cache: &mut CountCache, n: u64, with_oracle: bool) -> CheckResult {
    let direct = cache.count(n);
    let summed = cache.count_sum_form(n);
    let via_pi = cache.count_via_pi(n);
    if direct != summed || direct != via_pi {
        return Err(format!("n={n}: recurrence {direct}, sum {summed}, pi {via_pi}"));
    }
    if with_oracle {
        let brute = oracle::brute_enumerate_capped(n, cache.basis(), n)
            .map_err(|e| e.to_string())?
            .len();
        if direct != Count::from(brute) {
            return Err(format!("n={n}: recurrence {direct}, oracle {brute}"));
        }
    }
    Ok(())
}

/// Counts by exact length against brute force, and their total.
pub fn check_exact_parts(cache: &mut CountCache, n: u64) -> CheckResult {
    let all = oracle::brute_enumerate_capped(n, cache.basis(), n).map_err(|e| e.to_string())?;
    let mut by_length: HashMap<usize, u64> = HashMap::new();
    for p in &all {
        *by_length.entry(p.len()).or_default() += 1;
    }
    let longest = all.iter().map(Partition::len).max().unwrap_or(0);
    let mut total = Count::from(u64::from(n == 0));
    for l in 1..=longest + 2 {
        let formula = cache.count_exact_parts(n, l as u32);
        let brute = by_length.get(&l).copied().unwrap_or(0);
        if formula != Count::from(brute) {
            return Err(format!("n={n}, length {l}: formula {formula}, oracle {brute}"));
        }
        total += formula;
    }
    let count = cache.count(n);
    if total != count {
        return Err(format!("n={n}: exact-length counts sum to {total}, count is {count}"));
    }
    Ok(())
}

/// Shot vectors round-trip through reconstruction for every partition of `n`.
pub fn check_shots(basis: Basis, n: u64) -> CheckResult {
    for p in oracle_set(n, basis)? {
        let s = p.shot_vector(n).map_err(|e| format!("{p}: {e}"))?;
        let back = Partition::from_shots(n, &s, basis).map_err(|e| format!("{p}: {e}"))?;
        if back != p {
            return Err(format!("{p}: shots {s} rebuild {back}"));
        }
        if p.successors().is_empty() != (p == Partition::canonical(n, basis)) {
            return Err(format!("{p}: sink iff canonical fails"));
        }
    }
    Ok(())
}

/// `leq` against reachability, and meet/join against brute-force bounds, on
/// all pairs.
pub fn check_order(basis: Basis, n: u64) -> CheckResult {
    let nodes: Vec<Partition> = oracle_set(n, basis)?.into_iter().collect();
    let reach: Vec<HashSet<Vec<u64>>> = nodes.iter().map(oracle::brute_reachable).collect();
    // below[x][y]: y reachable from x, i.e. y <= x
    let below = |x: usize, y: usize| reach[x].contains(nodes[y].parts());
    let size = nodes.len();
    for x in 0..size {
        for y in 0..size {
            let (p, q) = (&nodes[x], &nodes[y]);
            let fast = lattice::leq(p, q, n).map_err(|e| e.to_string())?;
            if fast != below(y, x) {
                return Err(format!("leq({p}, {q}) = {fast}, reachability says otherwise"));
            }
            let uppers: Vec<usize> = (0..size).filter(|&u| below(u, x) && below(u, y)).collect();
            let least: Vec<usize> =
                uppers.iter().copied().filter(|&u| uppers.iter().all(|&v| below(v, u))).collect();
            let lowers: Vec<usize> = (0..size).filter(|&l| below(x, l) && below(y, l)).collect();
            let greatest: Vec<usize> =
                lowers.iter().copied().filter(|&l| lowers.iter().all(|&v| below(l, v))).collect();
            if least.len() != 1 || greatest.len() != 1 {
                return Err(format!("{p}, {q}: bounds not unique"));
            }
            let j = lattice::join(p, q, n).map_err(|e| e.to_string())?;
            if j != nodes[least[0]] {
                return Err(format!("join({p}, {q}) = {j}, brute force gives {}", nodes[least[0]]));
            }
            let m = lattice::meet(p, q, n).map_err(|e| e.to_string())?;
            if m != nodes[greatest[0]] {
                return Err(format!("meet({p}, {q}) = {m}, brute force gives {}", nodes[greatest[0]]));
            }
        }
    }
    Ok(())
}

/// Returns `Ok(false)` when the diagram is too large to check.
pub fn check_distributive(basis: Basis, n: u64) -> std::result::Result<bool, String> {
    let diagram = lattice::build_hasse(n, basis, DEFAULT_NODE_CAP).map_err(|e| e.to_string())?;
    if diagram.node_count() > DEFAULT_DISTRIBUTIVE_CAP {
        return Ok(false);
    }
    match diagram.check_distributive(DEFAULT_DISTRIBUTIVE_CAP) {
        Ok(true) => Ok(true),
        Ok(false) => Err(format!("n={n}: distributive law fails")),
        Err(e) => Err(e.to_string()),
    }
}

/// `incremental_next(R_b(n)) == R_b(n+1)` node for node and edge for edge.
pub fn check_incremental(basis: Basis, n: u64) -> CheckResult {
    let from = lattice::build_hasse(n, basis, DEFAULT_NODE_CAP).map_err(|e| e.to_string())?;
    let grown = lattice::incremental_next(&from);
    let direct = lattice::build_hasse(n + 1, basis, DEFAULT_NODE_CAP).map_err(|e| e.to_string())?;
    if grown != direct {
        return Err(format!(
            "n={n}: incremental has {} nodes / {} edges, direct {} / {}",
            grown.node_count(),
            grown.edge_count(),
            direct.node_count(),
            direct.edge_count()
        ));
    }
    Ok(())
}

/// Blocks are disjoint, cover the partitions of `n`, and block `i` is the
/// image of the partitions of `n/b^i - 1`.
pub fn check_decomposition(basis: Basis, n: u64) -> CheckResult {
    let blocks = lattice::decompose(n, basis, DEFAULT_NODE_CAP).map_err(|e| e.to_string())?;
    let want = oracle_set(n, basis)?;
    let mut seen = HashSet::new();
    for block in &blocks {
        for p in &block.members {
            if !seen.insert(p.clone()) {
                return Err(format!("n={n}: {p} in two blocks"));
            }
        }
        if n == 0 {
            continue;
        }
        let i = block.i;
        let power = basis.checked_pow(i).ok_or("power overflow")?;
        if !n.is_multiple_of(power) {
            return Err(format!("n={n}: block {i} but b^{i} does not divide n"));
        }
        let source = oracle_set(n / power - 1, basis)?;
        if block.members.len() != source.len() {
            return Err(format!("n={n}: block {i} has {} members, expected {}", block.members.len(), source.len()));
        }
        for p in &block.members {
            // undo inc(., i): part i loses one, the zeroed prefix becomes b - 1
            let mut parts = p.parts().to_vec();
            if parts.len() <= i || parts[..i].iter().any(|&x| x != 0) || parts[i] == 0 {
                return Err(format!("n={n}: block {i} member {p} has the wrong shape"));
            }
            parts[i] -= 1;
            let q = Partition::new(parts[i..].to_vec(), basis);
            if !source.contains(&q) {
                return Err(format!("n={n}: block {i} member {p} does not come from {q}"));
            }
        }
    }
    if seen != want {
        return Err(format!("n={n}: union of blocks: {}", describe(&seen, &want)));
    }
    Ok(())
}

/// Reachable chip configurations scale onto the partitions of `n`, and firing
/// commutes with the scaling.
pub fn check_cfg(basis: Basis, n: u64) -> CheckResult {
    let configs = cfg::reachable_configs(n, basis, DEFAULT_NODE_CAP).map_err(|e| e.to_string())?;
    let want = oracle_set(n, basis)?;
    let mut images = HashSet::new();
    for c in &configs {
        let total: num_bigint::BigUint = c.chips().iter().sum();
        if total != n.into() {
            return Err(format!("n={n}: chips not conserved in {}", c.to_json()));
        }
        let p = c.to_partition().map_err(|e| e.to_string())?;
        if CfgConfig::from_partition(&p).map_err(|e| e.to_string())? != *c {
            return Err(format!("n={n}: scaling of {} does not invert", c.to_json()));
        }
        for vertex in 0..=p.len() {
            let by_chips = c.fire_vertex(vertex).ok();
            let by_parts = p.fire(vertex).ok();
            match (by_chips, by_parts) {
                (None, None) => {}
                (Some(fc), Some(fp)) => {
                    if fc.to_partition().map_err(|e| e.to_string())? != fp {
                        return Err(format!("n={n}: firing {vertex} of {p} does not commute"));
                    }
                }
                _ => return Err(format!("n={n}: firing {vertex} of {p} enabled on one side only")),
            }
        }
        images.insert(p);
    }
    if images.len() != configs.len() {
        return Err(format!("n={n}: scaling is not injective"));
    }
    if images != want {
        return Err(format!("n={n}: configurations vs oracle: {}", describe(&images, &want)));
    }
    Ok(())
}

/// Level sizes follow the counting recurrence and level `d` is `R_b(d)`.
pub fn check_levels(basis: Basis, max_depth: u64, oracle_max: u64) -> CheckResult {
    let mut cache = CountCache::new(basis);
    for level in tree::levels(basis, max_depth) {
        let level = level.map_err(|e| e.to_string())?;
        let d = level.depth;
        if Count::from(level.members.len()) != cache.count(d) {
            return Err(format!("level {d}: {} members, count {}", level.members.len(), cache.count(d)));
        }
        if d <= oracle_max {
            let got = as_set(level.members.iter().cloned());
            if got.len() != level.members.len() {
                return Err(format!("level {d}: duplicate node"));
            }
            let want = oracle_set(d, basis)?;
            if got != want {
                return Err(format!("level {d}: {}", describe(&got, &want)));
            }
        }
    }
    Ok(())
}

/// The `i`-th rightmost-branch node is `canonical(i - 1)`, has `c_b(i) + 1`
/// sons, and its `j`-th son roots a subtree of order `j` for `j <= c_b(i)`.
pub fn check_rightmost_branch(basis: Basis, i: u64) -> CheckResult {
    let node = tree::rightmost_branch(basis, i).map_err(|e| e.to_string())?;
    if node != Partition::canonical(i - 1, basis) {
        return Err(format!("branch node {i} is {node}"));
    }
    let c = tree::carry(i, basis).map_err(|e| e.to_string())? as usize;
    let sons = tree::children(&node);
    if sons.len() != c + 1 {
        return Err(format!("branch node {i} has {} sons, carry is {c}", sons.len()));
    }
    for (j, son) in sons.iter().take(c).enumerate() {
        if tree::x_root_order(son) != Some(j + 1) {
            return Err(format!("son {} of branch node {i} is {son}", j + 1));
        }
    }
    Ok(())
}

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub scope: String,
    pub result: CheckResult,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub basis: Basis,
    pub max_n: u64,
    pub checks: Vec<CheckOutcome>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.result.is_ok())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.result {
                Ok(()) => writeln!(f, "PASS {:<14} {}", c.name, c.scope)?,
                Err(why) => writeln!(f, "FAIL {:<14} {}: {}", c.name, c.scope, why)?,
            }
        }
        let failed = self.checks.iter().filter(|c| c.result.is_err()).count();
        writeln!(
            f,
            "basis {} up to n = {}: {} passed, {} failed",
            self.basis,
            self.max_n,
            self.checks.len() - failed,
            failed
        )
    }
}

fn over(range: impl IntoIterator<Item = u64>, mut check: impl FnMut(u64) -> CheckResult) -> CheckResult {
    range.into_iter().try_for_each(&mut check)
}

/// Runs every check for `0 <= n <= max_n`. Brute-force based checks stop at
/// the oracle's default cap for the basis.
pub fn run(basis: Basis, max_n: u64) -> Report {
    let oracle_max = max_n.min(oracle::default_max_n(basis));
    let order_max = max_n.min(ORDER_MAX_N);
    let cfg_max = max_n.min(CFG_MAX_N);
    let mut cache = CountCache::new(basis);
    let mut checks = Vec::new();
    let mut push = |name, scope: String, result| checks.push(CheckOutcome { name, scope, result });

    push("enumeration", format!("n <= {oracle_max}"), over(0..=oracle_max, |n| check_enumeration(basis, n)));
    push(
        "counting",
        format!("n <= {max_n}, oracle n <= {oracle_max}"),
        over(0..=max_n, |n| check_counts(&mut cache, n, n <= oracle_max)),
    );
    push("exact-parts", format!("n <= {oracle_max}"), over(0..=oracle_max, |n| check_exact_parts(&mut cache, n)));
    push("shots", format!("n <= {oracle_max}"), over(0..=oracle_max, |n| check_shots(basis, n)));
    push("order", format!("n <= {order_max}"), over(0..=order_max, |n| check_order(basis, n)));
    let mut distributive_checked = 0;
    let distributive = over(0..=max_n, |n| {
        if check_distributive(basis, n)? {
            distributive_checked += 1;
        }
        Ok(())
    });
    push(
        "distributive",
        format!("{distributive_checked} diagrams of <= {DEFAULT_DISTRIBUTIVE_CAP} nodes"),
        distributive,
    );
    push("incremental", format!("n < {max_n}"), over(0..max_n, |n| check_incremental(basis, n)));
    push("decomposition", format!("n <= {oracle_max}"), over(0..=oracle_max, |n| check_decomposition(basis, n)));
    push("cfg", format!("n <= {cfg_max}"), over(0..=cfg_max, |n| check_cfg(basis, n)));
    push("tree-levels", format!("depth <= {max_n}"), check_levels(basis, max_n, oracle_max));
    push(
        "rightmost",
        format!("nodes 1..={}", max_n + 1),
        over(1..=max_n + 1, |i| check_rightmost_branch(basis, i)),
    );
    Report { basis, max_n, checks }
}
