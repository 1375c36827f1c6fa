//! Cross-module invariants at moderate scale, plus randomized properties.

use proptest::prelude::*;

use treepat::bijections::motzkin::{motzkin_two_colored_from_tree, motzkin_two_colored_to_tree};
use treepat::bijections::partition::{partition_from_tree, partition_to_tree, Side};
use treepat::generate::AlgorithmH;
use treepat::pattern::{avoiders, TreePattern};
use treepat::perm::{algorithm_j, all_perms, JumpDir, Permutation};
use treepat::tree::{all_trees, BinaryTree, Dir};

/// Preorder images of all trees are exactly the 231-avoiders.
#[test]
fn preorder_image_is_231_avoiders() {
    use std::collections::BTreeSet;
    let p231 = Permutation::parse("231").unwrap();
    for n in 0..=8 {
        let lhs: BTreeSet<String> = all_trees(n).iter().map(|t| t.preorder().to_string()).collect();
        let rhs: BTreeSet<String> = all_perms(n)
            .into_iter()
            .filter(|p| !p.contains_classical(&p231))
            .map(|p| p.to_string())
            .collect();
        assert_eq!(lhs, rhs, "n={n}");
    }
}

/// Round trips both ways at the stated scales.
#[test]
fn preorder_round_trips() {
    for n in 0..=10 {
        for t in all_trees(n).iter() {
            assert_eq!(&BinaryTree::from_preorder(&t.preorder()).unwrap(), t);
        }
    }
    let p231 = Permutation::parse("231").unwrap();
    for n in 0..=8 {
        for p in all_perms(n) {
            if !p.contains_classical(&p231) {
                assert_eq!(BinaryTree::from_preorder(&p).unwrap().preorder(), p);
            }
        }
    }
}

/// An up-rotation corresponds to a minimal left jump of the same value
/// inside the 231-avoiders.
#[test]
fn rotation_matches_minimal_jump() {
    let p231 = Permutation::parse("231").unwrap();
    let member = |q: &Permutation| !q.contains_classical(&p231);
    for n in 0..=7 {
        for t in all_trees(n).iter() {
            let pi = t.preorder();
            for j in 1..=n {
                if let Ok(rot) = t.rotate(j, Dir::Up) {
                    let (jumped, _) = pi
                        .minimal_jump(j, JumpDir::Left, &member)
                        .expect("legal rotation must have a matching jump");
                    assert_eq!(rot.preorder(), jumped, "tree {t}, vertex {j}");
                }
            }
        }
    }
}

/// The permutation shadow of the greedy tree generator is the greedy jump
/// generator on the corresponding mesh language.
#[test]
fn generator_shadow_matches_jump_generator() {
    use treepat::mesh::MeshPattern;
    for pat_str in ["132:10", "1432:011", "2143:010"] {
        let pat = TreePattern::parse(pat_str).unwrap();
        let mesh = MeshPattern::sigma_minus(&pat);
        let p231 = Permutation::parse("231").unwrap();
        let member = move |q: &Permutation| {
            !q.contains_classical(&p231) && !mesh.contained_in(q)
        };
        for n in 0..=7 {
            let trees = treepat::generate::algorithm_s(n, std::slice::from_ref(&pat)).unwrap();
            let shadow: Vec<String> = trees.iter().map(|s| s.tree.preorder().to_string()).collect();
            let jumps = algorithm_j(n, &member);
            assert!(!jumps.ambiguous_stop);
            let jv: Vec<String> = jumps.perms.iter().map(|p| p.to_string()).collect();
            assert_eq!(shadow, jv, "pattern {pat_str} n={n}");
        }
    }
}

/// The history-free generator performs a bounded number of containment
/// tests per emitted tree.
#[test]
fn history_free_step_cost_is_bounded() {
    let pats = [
        TreePattern::parse("132:10").unwrap(),
        TreePattern::parse("1423:000").unwrap(),
    ];
    let n = 8;
    let mut h = AlgorithmH::new(n, &pats).unwrap();
    let mut count = 0usize;
    while let Some(_step) = h.advance().unwrap() {
        count += 1;
        assert!(
            h.contain_calls_last_step <= n * pats.len(),
            "step used {} containment calls",
            h.contain_calls_last_step
        );
    }
    assert_eq!(count, avoiders(n, &pats).len());
}

fn arb_tree() -> impl Strategy<Value = BinaryTree> {
    let leaf = Just(BinaryTree::empty());
    leaf.prop_recursive(6, 48, 2, |inner| {
        (inner.clone(), inner).prop_map(|(l, r)| BinaryTree::compose(&l, &r))
    })
}

proptest! {
    #[test]
    fn prop_preorder_round_trip(t in arb_tree()) {
        prop_assert_eq!(&BinaryTree::from_preorder(&t.preorder()).unwrap(), &t);
    }

    #[test]
    fn prop_mirror_involution(t in arb_tree()) {
        prop_assert_eq!(&t.mirror().mirror(), &t);
    }

    #[test]
    fn prop_rotations_invert(t in arb_tree(), j in 1usize..20) {
        if j <= t.n() {
            if let Ok(up) = t.rotate(j, Dir::Up) {
                prop_assert_eq!(&up.rotate(j, Dir::Down).unwrap(), &t);
            }
        }
    }

    #[test]
    fn prop_two_colored_round_trip(t in arb_tree()) {
        if !t.is_empty() {
            let p = motzkin_two_colored_from_tree(&t).unwrap();
            prop_assert_eq!(p.len(), t.n() - 1);
            prop_assert_eq!(&motzkin_two_colored_to_tree(&p).unwrap(), &t);
        }
    }

    #[test]
    fn prop_partition_round_trip(t in arb_tree()) {
        for side in [Side::Left, Side::Right] {
            let x = partition_from_tree(&t, side);
            prop_assert!(!x.contains_pattern(&[1, 2, 1, 2]));
            prop_assert_eq!(&partition_to_tree(&x, side).unwrap(), &t);
        }
    }

    #[test]
    fn prop_paren_round_trip(t in arb_tree()) {
        prop_assert_eq!(&BinaryTree::from_paren(&t.to_paren()).unwrap(), &t);
    }
}
