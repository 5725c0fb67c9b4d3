mod common;

use std::collections::BTreeSet;

use common::{ahu, count_lattices_brute_force, count_rooted_trees_brute_force};
use zdg_core::enumerate::{all_lattices, lower_dismantlable};
use zdg_core::tree::{lattice_to_tree, level_sequences, rooted_trees};
use zdg_core::RootedTree;

#[test]
fn oracle_lattice_counts() {
    let oracle: Vec<usize> = (0..=6).map(count_lattices_brute_force).collect();
    assert_eq!(oracle, vec![0, 1, 1, 1, 2, 5, 15]);
}

#[test]
fn enumerator_matches_oracle() {
    for n in 0..=6 {
        assert_eq!(all_lattices(n).unwrap().len(), count_lattices_brute_force(n), "n = {n}");
    }
}

#[test]
fn oracle_rooted_tree_counts() {
    let oracle: Vec<usize> = (1..=8).map(count_rooted_trees_brute_force).collect();
    assert_eq!(oracle, vec![1, 1, 2, 4, 9, 20, 48, 115]);
}

fn parent_array(t: &RootedTree) -> Vec<usize> {
    let idx = |v: &str| t.nodes().iter().position(|x| x == v).unwrap();
    t.nodes()
        .iter()
        .map(|v| t.parent(v).map(idx).unwrap_or(0))
        .collect()
}

#[test]
fn rooted_trees_are_distinct_and_complete() {
    for n in 1..=8 {
        let trees = rooted_trees(n);
        assert_eq!(trees.len(), count_rooted_trees_brute_force(n));
        assert_eq!(level_sequences(n).len(), trees.len());
        let forms: BTreeSet<String> = trees.iter().map(|t| ahu(&parent_array(t), 0)).collect();
        assert_eq!(forms.len(), trees.len(), "duplicate shapes on {n} nodes");
    }
}

#[test]
fn lower_dismantlable_lattices_correspond_to_rooted_trees() {
    let gen = lower_dismantlable(9).unwrap();
    for n in 2..=9 {
        let of_size: Vec<_> = gen.iter().filter(|g| g.lattice.len() == n).collect();
        assert_eq!(of_size.len(), count_rooted_trees_brute_force(n - 1), "n = {n}");
        // those with a join-reducible top are exactly the trees with a branching root
        let shapes: BTreeSet<String> = of_size
            .iter()
            .filter(|g| g.lattice.is_join_reducible(g.lattice.top()))
            .map(|g| ahu(&parent_array(&lattice_to_tree(&g.lattice).unwrap()), 0))
            .collect();
        let branching = common::all_parent_arrays(n - 1)
            .iter()
            .filter(|p| p.iter().skip(1).filter(|&&q| q == 0).count() >= 2)
            .map(|p| ahu(p, 0))
            .collect::<BTreeSet<_>>();
        assert_eq!(shapes, branching, "n = {n}");
    }
}
