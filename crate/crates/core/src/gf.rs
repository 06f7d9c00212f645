//! Avoidance generating functions `g_S(x) = sum_n av_S(n) x^n`.
//!
//! Four routes are provided:
//!
//! * [`gf_single`]: the single-pattern recursion
//!   `g_t = (x - g_l g_r) / (1 - g_l - g_r)` on the root's subtrees;
//! * [`gf_comb`]: iterating `g_{c_k} = x / (1 - g_{c_{k-1}})` for left combs;
//! * [`gf_closed_form`]: the signed-binomial closed form, which depends only on
//!   the number of leaves;
//! * [`GfEngine::gf_set`]: inclusion-exclusion over sign vectors for any finite
//!   pattern set.
//!
//! For a set `S = {t_1..t_j}` of patterns with internal roots, a tree `(A, B)`
//! avoids `t_i` iff `A` avoids `t_i` and `B` avoids `(t_i)_r`, or `A` avoids
//! `(t_i)_l` and `B` avoids `t_i`. Expanding the product of these unions over
//! `v` in `{-1,0,1}^j` gives terms `g_{S_l(v)} g_{S_r(v)}`; only the two
//! constant vectors mention `g_S` itself, so the equation is solved linearly.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::pattern_set::{canonical_set, PatternSet};
use crate::ratfun::{Polynomial, RationalGf};
use crate::tree::Tree;

/// `binom(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| {
        acc * BigInt::from(n - i) / BigInt::from(i + 1)
    })
}

fn signed(i: u64, v: BigInt) -> BigInt {
    if i.is_multiple_of(2) {
        v
    } else {
        -v
    }
}

/// Closed form for any `k`-leaf pattern.
pub fn gf_closed_form(k: usize) -> RationalGf {
    let k = k as u64;
    let mut num = vec![BigInt::zero()];
    if k >= 2 {
        for i in 0..=(k - 2) / 2 {
            num.push(signed(i, binomial(k - i - 2, i)));
        }
    }
    let mut den = Vec::new();
    if k >= 1 {
        for i in 0..=(k - 1) / 2 {
            den.push(signed(i, binomial(k - i - 1, i)));
        }
    }
    RationalGf::new(Polynomial::from_coeffs(num), Polynomial::from_coeffs(den))
        .expect("constant term of denominator is 1")
}

/// `g_{c_k}` by iterating the comb recursion from `g_{c_1} = 0`.
pub fn gf_comb(k: usize) -> RationalGf {
    let x = RationalGf::x();
    let one = RationalGf::one();
    let mut g = RationalGf::zero();
    for _ in 1..k {
        g = x
            .checked_div(&(&one - &g))
            .expect("1 - g has constant term 1");
    }
    g
}

/// Single-pattern recursion on the root's subtrees.
pub fn gf_single(t: &Tree) -> RationalGf {
    single(t, &mut HashMap::new())
}

fn single(t: &Tree, memo: &mut HashMap<Tree, RationalGf>) -> RationalGf {
    let Some((l, r)) = t.children() else {
        return RationalGf::zero();
    };
    if let Some(g) = memo.get(t) {
        return g.clone();
    }
    let gl = single(l, memo);
    let gr = single(r, memo);
    let num = &RationalGf::x() - &(&gl * &gr);
    let den = &(&RationalGf::one() - &gl) - &gr;
    let g = num
        .checked_div(&den)
        .expect("1 - g_l - g_r has constant term 1");
    memo.insert(t.clone(), g.clone());
    g
}

/// Generating function of a pattern set with a fresh engine.
pub fn gf_set(set: &PatternSet) -> RationalGf {
    GfEngine::new().gf_set(set)
}

/// Memoized inclusion-exclusion solver for pattern sets.
///
/// The memo table is owned, so an engine belongs to one thread at a time;
/// parallel sweeps give each worker its own engine.
#[derive(Debug, Default)]
pub struct GfEngine {
    minimize: bool,
    memo: HashMap<PatternSet, RationalGf>,
}

impl GfEngine {
    pub fn new() -> GfEngine {
        GfEngine {
            minimize: true,
            memo: HashMap::new(),
        }
    }

    /// An engine whose sub-sets keep redundant patterns.
    pub fn without_minimization() -> GfEngine {
        GfEngine {
            minimize: false,
            memo: HashMap::new(),
        }
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn gf_trees(&mut self, trees: Vec<Tree>) -> Result<RationalGf> {
        let set = canonical_set(trees, self.minimize)?;
        Ok(self.solve(&set))
    }

    pub fn gf_set(&mut self, set: &PatternSet) -> RationalGf {
        let set =
            canonical_set(set.trees().to_vec(), self.minimize).expect("pattern sets are nonempty");
        self.solve(&set)
    }

    fn sub(&mut self, trees: Vec<Tree>, bound: usize) -> RationalGf {
        let set = canonical_set(trees, self.minimize).expect("nonempty by construction");
        assert!(
            set.total_leaves() < bound,
            "recursion must shrink the pattern set: {set} from total {bound}"
        );
        self.solve(&set)
    }

    fn solve(&mut self, set: &PatternSet) -> RationalGf {
        if set.trees().iter().any(Tree::is_leaf) {
            return RationalGf::zero();
        }
        if set.contains_tree(&Tree::cherry()) {
            return RationalGf::x();
        }
        if let Some(g) = self.memo.get(set) {
            return g.clone();
        }
        let total = set.total_leaves();
        let parts: Vec<(&Tree, &Tree, &Tree)> = set
            .trees()
            .iter()
            .map(|t| {
                let (l, r) = t.children().expect("internal root");
                (t, l, r)
            })
            .collect();
        let j = parts.len();

        let g_left = self.sub(parts.iter().map(|p| p.1.clone()).collect(), total);
        let g_right = self.sub(parts.iter().map(|p| p.2.clone()).collect(), total);

        // sign vectors with entries -1, 0, 1 encoded as digits 0, 1, 2
        let mut rest = RationalGf::zero();
        let mut digits = vec![0u8; j];
        for _ in 0..3usize.pow(j as u32) {
            let all_same = digits.iter().all(|&d| d == 0) || digits.iter().all(|&d| d == 2);
            if !all_same {
                let mut left = Vec::with_capacity(j);
                let mut right = Vec::with_capacity(j);
                let mut zeros = 0;
                for (&d, &(t, l, r)) in digits.iter().zip(&parts) {
                    match d {
                        0 => {
                            left.push(t.clone());
                            right.push(r.clone());
                        }
                        1 => {
                            left.push(l.clone());
                            right.push(r.clone());
                            zeros += 1;
                        }
                        _ => {
                            left.push(l.clone());
                            right.push(t.clone());
                        }
                    }
                }
                let gl = self.sub(left, total);
                let term = if gl.is_zero() {
                    gl
                } else {
                    &gl * &self.sub(right, total)
                };
                rest = if zeros % 2 == 0 {
                    &rest + &term
                } else {
                    &rest - &term
                };
            }
            for d in digits.iter_mut() {
                *d += 1;
                if *d < 3 {
                    break;
                }
                *d = 0;
            }
        }

        let num = &RationalGf::x() + &rest;
        let den = &(&RationalGf::one() - &g_left) - &g_right;
        let g = num
            .checked_div(&den)
            .expect("1 - g_L - g_R has constant term 1");
        self.memo.insert(set.clone(), g.clone());
        g
    }
}
