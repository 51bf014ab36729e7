//! The order on the partitions of `n`, its meet and join, and covering
//! diagrams built either directly or incrementally from the diagram of `n - 1`.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Basis, Partition, ShotVector};

/// Node cap used by the CLI and FFI when the caller does not give one.
pub const DEFAULT_NODE_CAP: usize = 2_000_000;

/// Node cap for the cubic distributivity check.
pub const DEFAULT_DISTRIBUTIVE_CAP: usize = 300;

fn same_basis(p: &Partition, q: &Partition) -> Result<Basis> {
    if p.basis() != q.basis() {
        return Err(Error::BasisMismatch(p.basis().get(), q.basis().get()));
    }
    Ok(p.basis())
}

/// `p <= q` iff `p` can be reached from `q` by firings, i.e. `s(p) >= s(q)`
/// entrywise.
pub fn leq(p: &Partition, q: &Partition, n: u64) -> Result<bool> {
    same_basis(p, q)?;
    Ok(p.shot_vector(n)?.dominates(&q.shot_vector(n)?))
}

/// Least upper bound: entrywise minimum of the shot vectors.
pub fn join(p: &Partition, q: &Partition, n: u64) -> Result<Partition> {
    let basis = same_basis(p, q)?;
    let s = p.shot_vector(n)?.min(&q.shot_vector(n)?);
    Partition::from_shots(n, &s, basis)
}

/// Greatest lower bound: entrywise maximum of the shot vectors.
pub fn meet(p: &Partition, q: &Partition, n: u64) -> Result<Partition> {
    let basis = same_basis(p, q)?;
    let s = p.shot_vector(n)?.max(&q.shot_vector(n)?);
    Partition::from_shots(n, &s, basis)
}

/// A covering pair: firing `position` in `source` gives `target`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub source: usize,
    pub target: usize,
    pub position: usize,
}

/// The covering diagram of the lattice of b-ary partitions of `n`.
///
/// Nodes are indexed in breadth-first order from `(n)`, expanding positions
/// in increasing order; edges are grouped by source in the same order.
#[derive(Debug, Clone)]
pub struct HasseDiagram {
    basis: Basis,
    n: u64,
    nodes: Vec<Partition>,
    edges: Vec<Edge>,
    index: HashMap<Partition, usize>,
}

impl PartialEq for HasseDiagram {
    fn eq(&self, other: &Self) -> bool {
        self.basis == other.basis
            && self.n == other.n
            && self.nodes == other.nodes
            && self.edges == other.edges
    }
}

impl Eq for HasseDiagram {}

/// Breadth-first closure of the successor relation from `(n)`.
pub fn build_hasse(n: u64, basis: Basis, cap: usize) -> Result<HasseDiagram> {
    let top = Partition::single(n, basis);
    let mut nodes = vec![top.clone()];
    let mut index = HashMap::from([(top, 0usize)]);
    let mut edges = Vec::new();
    let mut next = 0;
    while next < nodes.len() {
        let current = nodes[next].clone();
        for position in current.fireable_positions() {
            let succ = current.fire(position)?;
            let target = match index.get(&succ) {
                Some(&t) => t,
                None => {
                    if nodes.len() >= cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    let t = nodes.len();
                    index.insert(succ.clone(), t);
                    nodes.push(succ);
                    t
                }
            };
            edges.push(Edge { source: next, target, position });
        }
        next += 1;
    }
    Ok(HasseDiagram { basis, n, nodes, edges, index })
}

/// Builds the diagram of `n` by starting from the one-node diagram of 0 and
/// applying [`incremental_next`] `n` times.
pub fn build_hasse_incremental(n: u64, basis: Basis, cap: usize) -> Result<HasseDiagram> {
    let mut diagram = build_hasse(0, basis, cap)?;
    for _ in 0..n {
        diagram = incremental_next(&diagram);
        if diagram.node_count() > cap {
            return Err(Error::CapExceeded { cap });
        }
    }
    Ok(diagram)
}

impl HasseDiagram {
    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn nodes(&self) -> &[Partition] {
        &self.nodes
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &Partition) -> bool {
        self.index.contains_key(p)
    }

    /// Assembles a diagram from raw parts, then renumbers it into the
    /// canonical breadth-first order. Node values are checked; edges are
    /// taken as given.
    pub fn from_raw(
        basis: Basis,
        n: u64,
        nodes: Vec<Partition>,
        edges: Vec<Edge>,
    ) -> Result<HasseDiagram> {
        let mut index = HashMap::with_capacity(nodes.len());
        for (i, p) in nodes.iter().enumerate() {
            if p.basis() != basis {
                return Err(Error::BasisMismatch(basis.get(), p.basis().get()));
            }
            let found = p.value()?;
            if found != n {
                return Err(Error::InconsistentValue { expected: n, found });
            }
            index.insert(p.clone(), i);
        }
        for e in &edges {
            let len = nodes.len();
            if e.source >= len || e.target >= len {
                return Err(Error::PositionOutOfRange { position: e.source.max(e.target), len });
            }
        }
        Ok(HasseDiagram { basis, n, nodes, edges, index }.canonicalize())
    }

    /// Renumbers nodes in breadth-first order from `(n)` following the
    /// diagram's own edges by increasing position.
    fn canonicalize(self) -> HasseDiagram {
        let mut out_edges: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.nodes.len()];
        for e in &self.edges {
            out_edges[e.source].push((e.position, e.target));
        }
        for list in &mut out_edges {
            list.sort_unstable();
        }
        let top = Partition::single(self.n, self.basis);
        let Some(&root) = self.index.get(&top) else {
            return self;
        };
        let mut renumber = vec![usize::MAX; self.nodes.len()];
        let mut order = Vec::with_capacity(self.nodes.len());
        renumber[root] = 0;
        order.push(root);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &(_, v) in &out_edges[u] {
                if renumber[v] == usize::MAX {
                    renumber[v] = order.len();
                    order.push(v);
                    queue.push_back(v);
                }
            }
        }
        // Nodes unreachable from the top keep their relative order at the end.
        for (v, slot) in renumber.iter_mut().enumerate() {
            if *slot == usize::MAX {
                *slot = order.len();
                order.push(v);
            }
        }
        let mut edges = Vec::with_capacity(self.edges.len());
        for &u in &order {
            for &(position, v) in &out_edges[u] {
                edges.push(Edge { source: renumber[u], target: renumber[v], position });
            }
        }
        let mut old_nodes: Vec<Option<Partition>> = self.nodes.into_iter().map(Some).collect();
        let nodes: Vec<Partition> = order
            .iter()
            .map(|&u| old_nodes[u].take().expect("each node visited once"))
            .collect();
        let index = nodes.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        HasseDiagram { basis: self.basis, n: self.n, nodes, edges, index }
    }

    /// Nodes whose first `i` parts all equal `b - 1`.
    pub fn members_p(&self, i: usize) -> Vec<Partition> {
        self.members_p_indices(i).map(|u| self.nodes[u].clone()).collect()
    }

    fn members_p_indices(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.nodes
            .iter()
            .enumerate()
            .filter(move |(_, p)| in_p(p, i))
            .map(|(u, _)| u)
    }

    /// Images of the nodes under `p -> inc(p, 0)`, aligned with [`nodes`](Self::nodes).
    pub fn embed_inc0(&self) -> Vec<Partition> {
        self.nodes
            .iter()
            .map(|p| p.inc(0).expect("inc by 0 always applies"))
            .collect()
    }

    /// Exhaustively checks both distributive laws on every triple of nodes.
    pub fn check_distributive(&self, cap: usize) -> Result<bool> {
        let size = self.nodes.len();
        if size > cap {
            return Err(Error::CapExceeded { cap });
        }
        let shots = self
            .nodes
            .iter()
            .map(|p| p.shot_vector(self.n))
            .collect::<Result<Vec<_>>>()?;
        let by_shots: HashMap<&ShotVector, usize> =
            shots.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let lookup = |s: &ShotVector| -> Result<usize> {
            by_shots.get(s).copied().ok_or(Error::UnreachablePartition { n: self.n })
        };
        let mut joins = vec![0usize; size * size];
        let mut meets = vec![0usize; size * size];
        for a in 0..size {
            for c in 0..size {
                joins[a * size + c] = lookup(&shots[a].min(&shots[c]))?;
                meets[a * size + c] = lookup(&shots[a].max(&shots[c]))?;
            }
        }
        let j = |x: usize, y: usize| joins[x * size + y];
        let m = |x: usize, y: usize| meets[x * size + y];
        for a in 0..size {
            for x in 0..size {
                for y in 0..size {
                    if m(j(a, x), j(a, y)) != j(a, m(x, y)) {
                        return Ok(false);
                    }
                    if j(m(a, x), m(a, y)) != m(a, j(x, y)) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    pub fn to_document(&self) -> HasseDocument {
        HasseDocument {
            basis: self.basis.get(),
            n: self.n,
            nodes: self.nodes.iter().map(|p| p.parts().to_vec()).collect(),
            edges: self
                .edges
                .iter()
                .map(|e| [e.source as u64, e.target as u64, e.position as u64])
                .collect(),
        }
    }

    pub fn from_document(doc: &HasseDocument) -> Result<HasseDiagram> {
        let basis = Basis::new(doc.basis)?;
        let nodes = doc
            .nodes
            .iter()
            .map(|parts| Partition::new(parts.clone(), basis))
            .collect();
        let edges = doc
            .edges
            .iter()
            .map(|&[s, t, i]| Edge { source: s as usize, target: t as usize, position: i as usize })
            .collect();
        HasseDiagram::from_raw(basis, doc.n, nodes, edges)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_document()).expect("diagram serializes")
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"R_{}({})\" {{", self.basis, self.n);
        for (i, p) in self.nodes.iter().enumerate() {
            let _ = writeln!(out, "  n{i} [label=\"{}\"];", p.to_text());
        }
        for e in &self.edges {
            let _ = writeln!(out, "  n{} -> n{} [label=\"{}\"];", e.source, e.target, e.position);
        }
        out.push_str("}\n");
        out
    }
}

/// JSON form of a diagram: indices in `edges` refer to `nodes`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HasseDocument {
    pub basis: u64,
    pub n: u64,
    pub nodes: Vec<Vec<u64>>,
    pub edges: Vec<[u64; 3]>,
}

fn in_p(p: &Partition, i: usize) -> bool {
    let top = p.basis().max_digit();
    p.len() >= i && p.parts()[..i].iter().all(|&x| x == top)
}

/// `r_i`: drops the first `i` parts (all `b - 1`) of a partition of `n`,
/// giving a partition of `(n + 1) / b^i - 1`.
pub fn strip_prefix(p: &Partition, i: usize, n: u64) -> Result<Partition> {
    let found = p.value()?;
    if found != n {
        return Err(Error::InconsistentValue { expected: n, found });
    }
    if !in_p(p, i) {
        return Err(Error::NotInP { i });
    }
    let m = n.checked_add(1).ok_or(Error::Overflow("strip_prefix"))?;
    let divides = p.basis().checked_pow(i).is_some_and(|d| m % d == 0);
    if !divides {
        return Err(Error::DivisibilityViolated { i, value: m });
    }
    Ok(Partition::new(p.parts()[i..].to_vec(), p.basis()))
}

/// `r_i^{-1}`: prepends `i` parts equal to `b - 1`.
pub fn restore_prefix(q: &Partition, i: usize) -> Partition {
    let top = q.basis().max_digit();
    let mut parts = vec![top; i];
    parts.extend_from_slice(q.parts());
    Partition::new(parts, q.basis())
}

/// Builds the diagram of `n + 1` from the diagram of `n`.
///
/// The image of the input under `inc(., 0)` keeps every node and edge. Stage
/// `i` then attaches the elements `inc(p, i + 1)` for `p` in `P_{i+1}`: each
/// hangs below `inc(p, i)` by a firing at `i`, and inherits the covering
/// edges of the input restricted to `P_{i+1}`. Stages stop when `P_{i+1}`
/// is empty.
pub fn incremental_next(diagram: &HasseDiagram) -> HasseDiagram {
    let basis = diagram.basis;
    let top = basis.max_digit();
    let input = &diagram.nodes;

    let mut out_edges: Vec<Vec<(usize, usize)>> = vec![Vec::new(); input.len()];
    for e in &diagram.edges {
        out_edges[e.source].push((e.target, e.position));
    }

    let mut nodes: Vec<Partition> = diagram.embed_inc0();
    let mut edges: Vec<Edge> = diagram.edges.clone();

    // (input index, index of its image at the current stage), for P_i.
    let mut stage: Vec<(usize, usize)> = (0..input.len()).map(|u| (u, u)).collect();
    let mut i = 0;
    loop {
        let mut placed: HashMap<usize, usize> = HashMap::new();
        for &(u, image) in &stage {
            if input[u].part(i) != top {
                continue;
            }
            let fresh = nodes.len();
            nodes.push(input[u].inc(i + 1).expect("u lies in P_{i+1}"));
            edges.push(Edge { source: image, target: fresh, position: i });
            placed.insert(u, fresh);
        }
        if placed.is_empty() {
            break;
        }
        let mut next_stage: Vec<(usize, usize)> = placed.iter().map(|(&u, &v)| (u, v)).collect();
        next_stage.sort_unstable();
        for &(u, image) in &next_stage {
            for &(v, position) in &out_edges[u] {
                let target = placed[&v];
                edges.push(Edge { source: image, target, position });
            }
        }
        stage = next_stage;
        i += 1;
    }

    let n = diagram.n + 1;
    let index = nodes.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    HasseDiagram { basis, n, nodes, edges, index }.canonicalize()
}

/// One block of the disjoint-union decomposition of the partitions of `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub i: usize,
    pub members: Vec<Partition>,
}

/// Splits the partitions of `n` into blocks indexed by `i` with `b^i | n`:
/// block `i` is `inc(r_i^{-1}(q), i)` for `q` ranging over the partitions of
/// `n / b^i - 1`. The partition of 0 forms a single block on its own.
///
/// Smaller sets are themselves produced by this decomposition, bottom-up.
pub fn decompose(n: u64, basis: Basis, cap: usize) -> Result<Vec<Block>> {
    if n == 0 {
        return Ok(vec![Block { i: 0, members: vec![Partition::empty(basis)] }]);
    }
    let mut sets: Vec<Vec<Partition>> = vec![vec![Partition::empty(basis)]];
    let mut total = 1usize;
    for m in 1..n {
        let members: Vec<Partition> = blocks_for(m, basis, &sets)
            .into_iter()
            .flat_map(|block| block.members)
            .collect();
        total += members.len();
        if total > cap {
            return Err(Error::CapExceeded { cap });
        }
        sets.push(members);
    }
    Ok(blocks_for(n, basis, &sets))
}

fn blocks_for(m: u64, basis: Basis, smaller: &[Vec<Partition>]) -> Vec<Block> {
    let b = basis.get();
    let mut blocks = Vec::new();
    let mut i = 0usize;
    let mut power = 1u64;
    while m.is_multiple_of(power) {
        let source = &smaller[(m / power - 1) as usize];
        let members = source
            .iter()
            .map(|q| restore_prefix(q, i).inc(i).expect("prefix restored"))
            .collect();
        blocks.push(Block { i, members });
        i += 1;
        match power.checked_mul(b) {
            Some(next) => power = next,
            None => break,
        }
    }
    blocks
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(x: u64) -> Basis {
        Basis::new(x).unwrap()
    }

    fn p(parts: &[u64], basis: u64) -> Partition {
        Partition::new(parts.to_vec(), b(basis))
    }

    #[test]
    fn leq_examples() {
        assert_eq!(leq(&p(&[0, 2], 2), &p(&[4], 2), 4), Ok(true));
        assert_eq!(leq(&p(&[4], 2), &p(&[0, 2], 2), 4), Ok(false));
        assert_eq!(leq(&p(&[0, 3], 2), &p(&[2, 0, 1], 2), 6), Ok(false));
        assert_eq!(leq(&p(&[2, 0, 1], 2), &p(&[0, 3], 2), 6), Ok(false));
        assert_eq!(leq(&p(&[2, 0, 1], 2), &p(&[2, 0, 1], 2), 6), Ok(true));
    }

    #[test]
    fn mismatched_values_are_rejected() {
        assert!(matches!(
            leq(&p(&[4], 2), &p(&[5], 2), 4),
            Err(Error::InconsistentValue { .. })
        ));
        assert!(matches!(join(&p(&[4], 2), &p(&[5], 2), 5), Err(Error::InconsistentValue { .. })));
        assert!(matches!(meet(&p(&[4], 2), &p(&[4], 3), 4), Err(Error::BasisMismatch(2, 3))));
    }

    #[test]
    fn join_meet_examples() {
        assert_eq!(join(&p(&[0, 3], 2), &p(&[2, 0, 1], 2), 6).unwrap(), p(&[2, 2], 2));
        assert_eq!(meet(&p(&[0, 3], 2), &p(&[2, 0, 1], 2), 6).unwrap(), p(&[0, 1, 1], 2));
        let x = p(&[1, 0, 2], 2);
        assert_eq!(join(&x, &x, 9).unwrap(), x);
        assert_eq!(meet(&x, &x, 9).unwrap(), x);
    }

    #[test]
    fn hasse_small() {
        let d = build_hasse(4, b(2), DEFAULT_NODE_CAP).unwrap();
        assert_eq!(d.nodes(), &[p(&[4], 2), p(&[2, 1], 2), p(&[0, 2], 2), p(&[0, 0, 1], 2)]);
        assert_eq!(d.edge_count(), 3);
        let zero = build_hasse(0, b(3), DEFAULT_NODE_CAP).unwrap();
        assert_eq!(zero.node_count(), 1);
        assert_eq!(zero.edge_count(), 0);
    }

    #[test]
    fn hasse_cap() {
        assert_eq!(build_hasse(20, b(2), 10), Err(Error::CapExceeded { cap: 10 }));
    }

    #[test]
    fn members_p_examples() {
        let d4 = build_hasse(4, b(2), DEFAULT_NODE_CAP).unwrap();
        assert_eq!(d4.members_p(0).len(), 4);
        assert!(d4.members_p(1).is_empty());
        let d9 = build_hasse(9, b(2), DEFAULT_NODE_CAP).unwrap();
        let p1 = d9.members_p(1);
        assert!(p1.contains(&p(&[1, 0, 2], 2)));
        assert!(p1.iter().all(|q| q.part(0) == 1));
    }

    #[test]
    fn strip_prefix_examples() {
        assert_eq!(strip_prefix(&p(&[1, 0, 2], 2), 1, 9).unwrap(), p(&[0, 2], 2));
        let x = p(&[3, 1], 2);
        assert_eq!(strip_prefix(&x, 0, 5).unwrap(), x);
        assert_eq!(strip_prefix(&p(&[1, 1, 1], 2), 2, 7).unwrap(), p(&[1], 2));
    }

    #[test]
    fn strip_prefix_errors() {
        assert_eq!(strip_prefix(&p(&[0, 2], 2), 1, 4), Err(Error::NotInP { i: 1 }));
        assert_eq!(
            strip_prefix(&p(&[1, 1, 1, 1], 3), 2, 1 + 3 + 9 + 27),
            Err(Error::NotInP { i: 2 })
        );
        assert!(matches!(
            strip_prefix(&p(&[1, 2], 2), 1, 4),
            Err(Error::InconsistentValue { .. })
        ));
    }

    #[test]
    fn incremental_examples() {
        let r39 = build_hasse(9, b(3), DEFAULT_NODE_CAP).unwrap();
        let r310 = incremental_next(&r39);
        assert_eq!(r310.node_count(), 5);
        assert_eq!(r310, build_hasse(10, b(3), DEFAULT_NODE_CAP).unwrap());

        let r24 = build_hasse(4, b(2), DEFAULT_NODE_CAP).unwrap();
        assert_eq!(incremental_next(&r24).node_count(), 4);

        let r0 = build_hasse(0, b(5), DEFAULT_NODE_CAP).unwrap();
        let r1 = incremental_next(&r0);
        assert_eq!(r1.nodes(), &[p(&[1], 5)]);
        assert_eq!(r1.edge_count(), 0);
    }

    #[test]
    fn incremental_from_zero_matches_direct() {
        for basis in [2, 3, 4] {
            let inc = build_hasse_incremental(30, b(basis), DEFAULT_NODE_CAP).unwrap();
            assert_eq!(inc, build_hasse(30, b(basis), DEFAULT_NODE_CAP).unwrap());
        }
    }

    #[test]
    fn decompose_examples() {
        let blocks = decompose(4, b(2), DEFAULT_NODE_CAP).unwrap();
        let shape: Vec<(usize, usize)> = blocks.iter().map(|bl| (bl.i, bl.members.len())).collect();
        assert_eq!(shape, vec![(0, 2), (1, 1), (2, 1)]);
        assert_eq!(blocks[1].members, vec![p(&[0, 2], 2)]);
        assert_eq!(blocks[2].members, vec![p(&[0, 0, 1], 2)]);

        let one = decompose(1, b(2), DEFAULT_NODE_CAP).unwrap();
        assert_eq!(one, vec![Block { i: 0, members: vec![p(&[1], 2)] }]);

        let nine = decompose(9, b(3), DEFAULT_NODE_CAP).unwrap();
        let sizes: Vec<usize> = nine.iter().map(|bl| bl.members.len()).collect();
        assert_eq!(sizes, vec![3, 1, 1]);
    }

    #[test]
    fn distributive_examples() {
        let d = build_hasse(9, b(2), DEFAULT_NODE_CAP).unwrap();
        assert_eq!(d.check_distributive(DEFAULT_DISTRIBUTIVE_CAP), Ok(true));
        let d = build_hasse(12, b(3), DEFAULT_NODE_CAP).unwrap();
        assert_eq!(d.check_distributive(DEFAULT_DISTRIBUTIVE_CAP), Ok(true));
        // R_3(5) is a chain
        let chain = build_hasse(5, b(3), DEFAULT_NODE_CAP).unwrap();
        assert_eq!(chain.edge_count() + 1, chain.node_count());
        assert_eq!(chain.check_distributive(DEFAULT_DISTRIBUTIVE_CAP), Ok(true));
        assert_eq!(d.check_distributive(2), Err(Error::CapExceeded { cap: 2 }));
    }

    #[test]
    fn embed_examples() {
        let d = build_hasse(9, b(2), DEFAULT_NODE_CAP).unwrap();
        let images = d.embed_inc0();
        assert_eq!(images[0], p(&[10], 2));
        assert_eq!(images[0].shot_vector(10).unwrap(), ShotVector::default());

        let d4 = build_hasse(4, b(2), DEFAULT_NODE_CAP).unwrap();
        let at = d4.index_of(&p(&[0, 2], 2)).unwrap();
        let image = &d4.embed_inc0()[at];
        assert_eq!(image, &p(&[1, 2], 2));
        assert_eq!(image.shot_vector(5).unwrap().shots(), &[2]);
    }

    #[test]
    fn json_and_dot() {
        let d = build_hasse(4, b(2), DEFAULT_NODE_CAP).unwrap();
        assert_eq!(
            d.to_json(),
            r#"{"basis":2,"n":4,"nodes":[[4],[2,1],[0,2],[0,0,1]],"edges":[[0,1,0],[1,2,0],[2,3,1]]}"#
        );
        let back: HasseDocument = serde_json::from_str(&d.to_json()).unwrap();
        assert_eq!(HasseDiagram::from_document(&back).unwrap(), d);
        let dot = d.to_dot();
        assert!(dot.starts_with("digraph \"R_2(4)\" {\n"));
        assert!(dot.contains("  n3 [label=\"0,0,1\"];\n"));
        assert!(dot.contains("  n2 -> n3 [label=\"1\"];\n"));
        let zero = build_hasse(0, b(2), DEFAULT_NODE_CAP).unwrap().to_dot();
        assert_eq!(zero, "digraph \"R_2(0)\" {\n  n0 [label=\"0\"];\n}\n");
    }

    #[test]
    fn document_rejects_bad_nodes() {
        let doc = HasseDocument { basis: 2, n: 4, nodes: vec![vec![5]], edges: vec![] };
        assert!(HasseDiagram::from_document(&doc).is_err());
        let doc = HasseDocument { basis: 2, n: 4, nodes: vec![vec![4]], edges: vec![[0, 3, 0]] };
        assert!(HasseDiagram::from_document(&doc).is_err());
        let doc = HasseDocument { basis: 1, n: 4, nodes: vec![], edges: vec![] };
        assert_eq!(HasseDiagram::from_document(&doc), Err(Error::InvalidBasis(1)));
    }
}
