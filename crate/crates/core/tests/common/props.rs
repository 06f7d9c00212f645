//! Strategies and property checks shared by the property suite and the
//! acceptance runner.

#![allow(dead_code)]

use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;
use treepat::gentree::{descendant_count, descendant_trees, parent_tree};
use treepat::gf::GfEngine;
use treepat::matcher::{contains, Mode};
use treepat::ratfun::{Polynomial, RationalGf};
use treepat::tree::{catalan, Tree, TreeIndex};

pub const CASES: u32 = 1000;

pub fn tree(max_leaves: usize) -> impl Strategy<Value = Tree> {
    (1..=max_leaves)
        .prop_flat_map(|k| (Just(k), 1..=catalan(k - 1).unwrap()))
        .prop_map(|(k, r)| Tree::from_index(TreeIndex::new(k, r)).unwrap())
}

pub fn mode() -> impl Strategy<Value = Mode> {
    prop_oneof![Just(Mode::Contiguous), Just(Mode::Noncontiguous)]
}

fn poly(max_len: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(-6i64..=6, 0..=max_len).prop_map(|c| Polynomial::from_i64(&c))
}

/// Rational functions with a unit constant term in the denominator, so every
/// one has an integer power series.
pub fn gf() -> impl Strategy<Value = RationalGf> {
    (
        poly(5),
        prop_oneof![Just(1i64), Just(-1i64)],
        prop::collection::vec(-4i64..=4, 0..=3),
    )
        .prop_map(|(num, d0, rest)| {
            let mut den = vec![d0];
            den.extend(rest);
            RationalGf::new(num, Polynomial::from_i64(&den)).unwrap()
        })
}

pub fn check_reflection((host, pattern, mode): (Tree, Tree, Mode)) -> Result<(), TestCaseError> {
    prop_assert_eq!(
        contains(&host, &pattern, mode),
        contains(&host.reflect(), &pattern.reflect(), mode)
    );
    Ok(())
}

pub fn check_parent_descendant(t: Tree) -> Result<(), TestCaseError> {
    let kids = descendant_trees(&t);
    prop_assert_eq!(kids.len(), descendant_count(&t));
    prop_assert!(!kids.is_empty());
    for d in &kids {
        prop_assert_eq!(d.leaf_count(), t.leaf_count() + 1);
        prop_assert_eq!(&parent_tree(d).unwrap(), &t);
    }
    if t.leaf_count() > 1 {
        let p = parent_tree(&t).unwrap();
        prop_assert!(descendant_trees(&p).contains(&t));
    } else {
        prop_assert!(parent_tree(&t).is_err());
    }
    Ok(())
}

pub fn check_round_trip((t, sep): (Tree, &'static str)) -> Result<(), TestCaseError> {
    let text = t.render();
    prop_assert_eq!(&Tree::parse(&text).unwrap(), &t);
    let respaced = text.replace(' ', sep);
    let back = Tree::parse(&respaced).unwrap();
    prop_assert_eq!(&back, &t);
    prop_assert_eq!(back.render(), text);
    Ok(())
}

pub fn separators() -> impl Strategy<Value = &'static str> {
    prop_oneof![Just(""), Just(" "), Just("   "), Just("\n\t")]
}

pub fn check_field_axioms(
    (a, b, c): (RationalGf, RationalGf, RationalGf),
) -> Result<(), TestCaseError> {
    prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    prop_assert_eq!(&a + &b, &b + &a);
    prop_assert_eq!(&a * &b, &b * &a);
    prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    prop_assert_eq!(&a + &RationalGf::zero(), a.clone());
    prop_assert_eq!(&a * &RationalGf::one(), a.clone());
    let same = a.clone();
    prop_assert!((&a - &same).is_zero());
    if a.is_zero() {
        prop_assert!(RationalGf::one().checked_div(&a).is_err());
    } else {
        let inv = RationalGf::one().checked_div(&a).unwrap();
        prop_assert_eq!(&a * &inv, RationalGf::one());
    }
    Ok(())
}

pub fn check_convolution((a, b): (RationalGf, RationalGf)) -> Result<(), TestCaseError> {
    let n = 12;
    let sa = a.series(n).unwrap();
    let sb = b.series(n).unwrap();
    let prod = (&a * &b).series(n).unwrap();
    let sum = (&a + &b).series(n).unwrap();
    for k in 0..=n {
        let conv: BigInt = (0..=k).map(|i| &sa[i] * &sb[k - i]).sum();
        prop_assert_eq!(&prod[k], &conv);
        prop_assert_eq!(&sum[k], &(&sa[k] + &sb[k]));
    }
    Ok(())
}

/// Replace leaf `at` (mod leaf count) of `t` by `sub`; the result contains `t`.
pub fn graft(t: &Tree, at: usize, sub: &Tree) -> Tree {
    fn go(t: &Tree, at: usize, sub: &Tree) -> Tree {
        match t.children() {
            None => sub.clone(),
            Some((l, r)) => {
                let nl = l.leaf_count();
                if at < nl {
                    Tree::node(go(l, at, sub), r.clone())
                } else {
                    Tree::node(l.clone(), go(r, at - nl, sub))
                }
            }
        }
    }
    go(t, at % t.leaf_count(), sub)
}

pub fn redundant_sets() -> impl Strategy<Value = (Vec<Tree>, Tree)> {
    (
        prop::collection::vec(tree(5), 1..=2),
        any::<prop::sample::Index>(),
        0usize..8,
        tree(3),
    )
        .prop_map(|(set, pick, at, sub)| {
            let base = pick.get(&set).clone();
            let extra = graft(&base, at, &sub);
            (set, extra)
        })
}

pub fn check_redundancy((set, extra): (Vec<Tree>, Tree)) -> Result<(), TestCaseError> {
    let reference = GfEngine::new().gf_trees(set.clone()).unwrap();
    let mut bigger = set;
    bigger.push(extra);
    let raw = GfEngine::without_minimization()
        .gf_trees(bigger.clone())
        .unwrap();
    prop_assert_eq!(&raw, &reference);
    prop_assert_eq!(&GfEngine::new().gf_trees(bigger).unwrap(), &reference);
    Ok(())
}
