use std::collections::{HashMap, HashSet};

use bary_core::counting::{Count, CountCache};
use bary_core::lattice::{self, DEFAULT_NODE_CAP};
use bary_core::oracle;
use bary_core::tree;
use bary_core::{Basis, Partition, ShotVector};
use proptest::prelude::*;

fn basis(b: u64) -> Basis {
    Basis::new(b).unwrap()
}

fn p(parts: &[u64], b: u64) -> Partition {
    Partition::new(parts.to_vec(), basis(b))
}

fn sorted(v: impl IntoIterator<Item = Partition>) -> Vec<Partition> {
    let mut v: Vec<_> = v.into_iter().collect();
    v.sort();
    v
}

fn oracle_set(n: u64, b: u64) -> HashSet<Partition> {
    oracle::brute_enumerate_capped(n, basis(b), n).unwrap().into_iter().collect()
}

/// A random partition of value at most 60 in base 2..=5.
fn any_partition() -> impl Strategy<Value = Partition> {
    (2u64..=5, 0u64..=60, any::<prop::sample::Index>()).prop_map(|(b, n, pick)| {
        let all = oracle::brute_enumerate_capped(n, basis(b), n).unwrap();
        all[pick.index(all.len())].clone()
    })
}

/// Replays a firing sequence from `(n)`, choosing among the fireable
/// positions with `choices`, and counts firings per position.
fn replay(n: u64, b: u64, target: &Partition, choices: &[usize]) -> Option<Vec<u64>> {
    // BFS distances from the target backwards would be overkill: walk forward
    // choosing only moves that keep the target reachable.
    let target_reach = |q: &Partition| oracle::brute_reachable(q).contains(target.parts());
    let mut cur = Partition::single(n, basis(b));
    let mut counts = Vec::new();
    let mut step = 0;
    while &cur != target {
        let options: Vec<usize> = cur
            .fireable_positions()
            .filter(|&i| target_reach(&cur.fire(i).unwrap()))
            .collect();
        let i = *options.get(choices[step % choices.len()] % options.len().max(1))?;
        if counts.len() <= i {
            counts.resize(i + 1, 0);
        }
        counts[i] += 1;
        cur = cur.fire(i).unwrap();
        step += 1;
    }
    while counts.last() == Some(&0) {
        counts.pop();
    }
    Some(counts)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn firing_conserves_value(q in any_partition()) {
        let n = q.value().unwrap();
        for i in q.fireable_positions() {
            let fired = q.fire(i).unwrap();
            prop_assert_eq!(fired.value().unwrap(), n);
            prop_assert_eq!(fired.unfire(i + 1).unwrap(), q.clone());
        }
        for i in 1..q.len() {
            if let Ok(up) = q.unfire(i) {
                prop_assert_eq!(up.value().unwrap(), n);
                prop_assert_eq!(up.fire(i - 1).unwrap(), q.clone());
            }
        }
    }

    #[test]
    fn inc_adds_one(q in any_partition()) {
        let n = q.value().unwrap();
        for i in 0..=q.leading() {
            prop_assert_eq!(q.inc(i).unwrap().value().unwrap(), n + 1);
        }
        prop_assert!(q.inc(q.leading() + 1).is_err() || q.leading() + 1 > q.len());
    }

    #[test]
    fn shots_round_trip(q in any_partition()) {
        let n = q.value().unwrap();
        let s = q.shot_vector(n).unwrap();
        prop_assert_eq!(Partition::from_shots(n, &s, q.basis()).unwrap(), q.clone());
    }

    #[test]
    fn sink_iff_canonical(q in any_partition()) {
        let n = q.value().unwrap();
        prop_assert_eq!(q.successors().is_empty(), q == Partition::canonical(n, q.basis()));
    }

    #[test]
    fn predecessors_invert_successors(q in any_partition()) {
        let n = q.value().unwrap();
        let b = q.basis().get();
        let by_inversion: Vec<Partition> = oracle_set(n, b)
            .into_iter()
            .filter(|r| r.successors().contains(&q))
            .collect();
        prop_assert_eq!(sorted(q.predecessors()), sorted(by_inversion));
    }

    #[test]
    fn shot_vector_is_path_independent(
        q in any_partition().prop_filter("small", |q| q.value().unwrap() <= 24),
        choices in prop::collection::vec(any::<usize>(), 1..8),
    ) {
        let n = q.value().unwrap();
        let counts = replay(n, q.basis().get(), &q, &choices).expect("target reachable");
        prop_assert_eq!(ShotVector::new(counts), q.shot_vector(n).unwrap());
    }

    #[test]
    fn inc0_embedding_preserves_lattice(b in 2u64..=4, n in 0u64..=16, x in any::<prop::sample::Index>(), y in any::<prop::sample::Index>()) {
        let d = lattice::build_hasse(n, basis(b), DEFAULT_NODE_CAP).unwrap();
        let images = d.embed_inc0();
        let (i, j) = (x.index(d.node_count()), y.index(d.node_count()));
        let (pi, pj) = (&d.nodes()[i], &d.nodes()[j]);
        prop_assert_eq!(images[i].shot_vector(n + 1).unwrap(), pi.shot_vector(n).unwrap());
        prop_assert_eq!(
            lattice::leq(&images[i], &images[j], n + 1).unwrap(),
            lattice::leq(pi, pj, n).unwrap()
        );
        let join = lattice::join(pi, pj, n).unwrap().inc(0).unwrap();
        prop_assert_eq!(lattice::join(&images[i], &images[j], n + 1).unwrap(), join);
        let meet = lattice::meet(pi, pj, n).unwrap().inc(0).unwrap();
        prop_assert_eq!(lattice::meet(&images[i], &images[j], n + 1).unwrap(), meet);
    }

    #[test]
    fn counting_routes_agree(b in 2u64..=6, n in 0u64..=400) {
        let mut cache = CountCache::new(basis(b));
        let direct = cache.count(n);
        prop_assert_eq!(cache.count_sum_form(n), direct.clone());
        prop_assert_eq!(CountCache::new(basis(b)).count_via_pi(n), direct.clone());
        let by_length: Count = (1..=64u32).map(|l| cache.count_exact_parts(n, l)).sum();
        prop_assert_eq!(by_length + Count::from(u64::from(n == 0)), direct);
    }
}

#[test]
fn derived_examples_by_oracle() {
    // successors((4,1)) by trying every position against the oracle set
    let six = oracle_set(6, 2);
    let x = p(&[4, 1], 2);
    let brute: Vec<Partition> = six
        .iter()
        .filter(|r| {
            let diff: Vec<i64> = (0..4).map(|i| x.part(i) as i64 - r.part(i) as i64).collect();
            (0..3).any(|i| {
                (0..4).all(|j| match j {
                    _ if j == i => diff[j] == 2,
                    _ if j == i + 1 => diff[j] == -1,
                    _ => diff[j] == 0,
                })
            })
        })
        .cloned()
        .collect();
    assert_eq!(brute, vec![p(&[2, 2], 2)]);
    assert_eq!(x.successors(), brute);

    // predecessors by inverting successors over the oracle set
    for (target, n) in [(p(&[0, 2], 2), 4), (p(&[0, 1, 1], 2), 6)] {
        let inv: Vec<Partition> =
            oracle_set(n, 2).into_iter().filter(|r| r.successors().contains(&target)).collect();
        assert_eq!(sorted(target.predecessors()), sorted(inv));
    }
}

#[test]
fn shot_examples_by_replay() {
    // (9) -> (7,1) -> (5,2) -> (3,3) -> (1,4) -> (1,2,1) -> (1,0,2): 4 firings at 0, 2 at 1
    let mut cur = p(&[9], 2);
    for i in [0, 0, 0, 0, 1, 1] {
        cur = cur.fire(i).unwrap();
    }
    assert_eq!(cur, p(&[1, 0, 2], 2));
    assert_eq!(cur.shot_vector(9).unwrap().shots(), &[4, 2]);

    // (6) -> (4,1) -> (2,2) -> (0,3) -> (0,1,1): 3 at 0, 1 at 1
    let mut cur = p(&[6], 2);
    for i in [0, 0, 0, 1] {
        cur = cur.fire(i).unwrap();
    }
    assert_eq!(cur, p(&[0, 1, 1], 2));
    assert_eq!(cur.shot_vector(6).unwrap().shots(), &[3, 1]);

    // (2,0,1) in R_2(6) has shots (2,1)
    let q = Partition::from_shots(6, &ShotVector::new(vec![2, 1]), basis(2)).unwrap();
    assert_eq!(q, p(&[2, 0, 1], 2));
    assert!(oracle_set(6, 2).contains(&q));
}

#[test]
fn join_meet_examples_by_brute_force() {
    let n = 6;
    let nodes: Vec<Partition> = oracle_set(n, 2).into_iter().collect();
    let reach: HashMap<&Partition, HashSet<Vec<u64>>> =
        nodes.iter().map(|r| (r, oracle::brute_reachable(r))).collect();
    let le = |a: &Partition, c: &Partition| reach[c].contains(a.parts());
    let (x, y) = (p(&[0, 3], 2), p(&[2, 0, 1], 2));
    assert!(!le(&x, &y) && !le(&y, &x));
    let uppers: Vec<&Partition> = nodes.iter().filter(|u| le(&x, u) && le(&y, u)).collect();
    let lub: Vec<&&Partition> = uppers.iter().filter(|u| uppers.iter().all(|v| le(u, v))).collect();
    assert_eq!(lub, vec![&&p(&[2, 2], 2)]);
    let lowers: Vec<&Partition> = nodes.iter().filter(|l| le(l, &x) && le(l, &y)).collect();
    let glb: Vec<&&Partition> = lowers.iter().filter(|l| lowers.iter().all(|v| le(v, l))).collect();
    assert_eq!(glb, vec![&&p(&[0, 1, 1], 2)]);
    assert_eq!(lattice::join(&x, &y, n).unwrap(), p(&[2, 2], 2));
    assert_eq!(lattice::meet(&x, &y, n).unwrap(), p(&[0, 1, 1], 2));
}

#[test]
fn members_p_by_oracle_filter() {
    let d4 = lattice::build_hasse(4, basis(2), DEFAULT_NODE_CAP).unwrap();
    let filt = |n, i: usize| -> Vec<Partition> {
        sorted(oracle_set(n, 2).into_iter().filter(|q| q.len() >= i && q.parts()[..i].iter().all(|&x| x == 1)))
    };
    assert!(filt(4, 1).is_empty());
    assert!(d4.members_p(1).is_empty());
    let d9 = lattice::build_hasse(9, basis(2), DEFAULT_NODE_CAP).unwrap();
    for i in 0..5 {
        assert_eq!(sorted(d9.members_p(i)), filt(9, i));
    }
    assert!(d9.members_p(1).contains(&p(&[1, 0, 2], 2)));
    assert_eq!(sorted(d4.members_p(0)), filt(4, 0));
}

#[test]
fn strip_prefix_is_a_bijection() {
    for b in 2..=3u64 {
        for n in 0..=40u64 {
            for i in 0..4usize {
                let power = b.pow(i as u32);
                if (n + 1) % power != 0 {
                    continue;
                }
                let d = lattice::build_hasse(n, basis(b), DEFAULT_NODE_CAP).unwrap();
                let images: HashSet<Partition> = d
                    .members_p(i)
                    .iter()
                    .map(|q| lattice::strip_prefix(q, i, n).unwrap())
                    .collect();
                assert_eq!(images.len(), d.members_p(i).len());
                assert_eq!(images, oracle_set((n + 1) / power - 1, b), "b={b} n={n} i={i}");
            }
        }
    }
    assert_eq!(lattice::strip_prefix(&p(&[1, 0, 2], 2), 1, 9).unwrap().value(), Ok(4));
    assert!(oracle_set(4, 2).contains(&p(&[0, 2], 2)));
}

#[test]
fn hasse_nodes_match_oracle_up_to_sixty() {
    for b in 2..=5 {
        for n in 0..=60 {
            let d = lattice::build_hasse(n, basis(b), DEFAULT_NODE_CAP).unwrap();
            let nodes: HashSet<Partition> = d.nodes().iter().cloned().collect();
            assert_eq!(nodes, oracle_set(n, b), "b={b} n={n}");
            bary_core::verify::check_diagram_shape(&d).unwrap();
        }
    }
}

#[test]
fn level_sizes_by_oracle() {
    let sizes: Vec<usize> = tree::levels(basis(2), 8).map(|l| l.unwrap().members.len()).collect();
    let brute: Vec<usize> = (0..=8).map(|n| oracle_set(n, 2).len()).collect();
    assert_eq!(sizes, brute);
    let sizes: Vec<usize> = tree::levels(basis(3), 9).map(|l| l.unwrap().members.len()).collect();
    let brute: Vec<usize> = (0..=9).map(|n| oracle_set(n, 3).len()).collect();
    assert_eq!(sizes, brute);
    for b in 2..=5 {
        bary_core::verify::check_levels(basis(b), 40, 40).unwrap();
    }
}

#[test]
fn decompose_sizes_by_oracle() {
    let blocks = lattice::decompose(9, basis(3), DEFAULT_NODE_CAP).unwrap();
    let sizes: Vec<usize> = blocks.iter().map(|bl| bl.members.len()).collect();
    let brute: Vec<usize> = [8, 2, 0].iter().map(|&m| oracle_set(m, 3).len()).collect();
    assert_eq!(sizes, brute);
    let union: HashSet<Partition> = blocks.into_iter().flat_map(|bl| bl.members).collect();
    assert_eq!(union, oracle_set(9, 3));
}

#[test]
fn exact_parts_examples_by_oracle() {
    let len3: Vec<Partition> = sorted(oracle_set(8, 2).into_iter().filter(|q| q.len() == 3));
    assert_eq!(len3, sorted([p(&[0, 2, 1], 2), p(&[2, 1, 1], 2), p(&[4, 0, 1], 2), p(&[0, 0, 2], 2)]));
    assert_eq!(CountCache::new(basis(2)).count_exact_parts(8, 3), Count::from(len3.len()));
    let len2: Vec<Partition> = sorted(oracle_set(9, 3).into_iter().filter(|q| q.len() == 2));
    assert_eq!(len2, sorted([p(&[0, 3], 3), p(&[3, 2], 3), p(&[6, 1], 3)]));
}

/// Walks the rightmost branch of a subtree root, checking the shape of an
/// order-`k` subtree on its first `b^{k-1} + 1` nodes.
fn check_x_subtree(root: &Partition, k: usize) {
    let b = root.basis().get();
    let span = b.pow(k as u32 - 1);
    let mut node = root.clone();
    for i in 1..=span {
        let c = tree::carry(i, root.basis()).unwrap() as usize;
        let sons = tree::children(&node);
        assert_eq!(sons.len(), c + 1, "root {root}, branch node {i} = {node}");
        for (j, son) in sons.iter().take(c).enumerate() {
            assert_eq!(tree::x_root_order(son), Some(j + 1), "son {} of {node}", j + 1);
        }
        node = sons.last().unwrap().clone();
    }
    assert_eq!(tree::x_root_order(&node), Some(k), "node {} past {root}", span + 1);
}

#[test]
fn x_subtree_structure() {
    for b in 2..=4 {
        let mut found = 0;
        for level in tree::levels(basis(b), 30) {
            for t in level.unwrap().members {
                if let Some(k) = tree::x_root_order(&t) {
                    if k <= 4 {
                        check_x_subtree(&t, k);
                        found += 1;
                    }
                }
            }
        }
        assert!(found > 50, "b={b}: only {found} roots");
    }
}

#[test]
fn rightmost_branch_structure() {
    for b in 2..=5 {
        for i in 1..=200 {
            bary_core::verify::check_rightmost_branch(basis(b), i).unwrap();
        }
    }
}

#[test]
fn tree_enumeration_has_no_duplicates_at_scale() {
    for b in 2..=3 {
        let all = tree::enumerate(120, basis(b), DEFAULT_NODE_CAP).unwrap();
        let set: HashSet<&Partition> = all.iter().collect();
        assert_eq!(set.len(), all.len());
        assert_eq!(Count::from(all.len()), CountCache::new(basis(b)).count(120));
        assert!(all.iter().all(|q| q.value() == Ok(120)));
    }
}
