//! Full binary trees: the shared universe of patterns and host trees.
//!
//! Every vertex has either zero or two ordered children. Trees are immutable
//! and share structure through `Arc`, so cloning is cheap and values can be
//! handed across threads freely.
//!
//! The canonical order on `k`-leaf trees sorts by the leaf count of the left
//! subtree (descending), then by the left subtree, then by the right subtree.
//! Under this order `t_{k_1}` is the left comb and the last tree is the right
//! comb. [`TreeIndex`] records a tree's position `(k, j)` in that order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Tree {
    Leaf,
    Node(Arc<Node>),
}

#[derive(PartialEq, Eq, Hash)]
pub struct Node {
    left: Tree,
    right: Tree,
    leaves: usize,
}

/// Which way a comb leans.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Tree {
    pub fn node(left: Tree, right: Tree) -> Tree {
        let leaves = left.leaf_count() + right.leaf_count();
        Tree::Node(Arc::new(Node {
            left,
            right,
            leaves,
        }))
    }

    /// The two-leaf tree `(L L)`.
    pub fn cherry() -> Tree {
        Tree::node(Tree::Leaf, Tree::Leaf)
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Tree::Leaf => 1,
            Tree::Node(n) => n.leaves,
        }
    }

    pub fn internal_count(&self) -> usize {
        self.leaf_count() - 1
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Tree::Leaf)
    }

    pub fn children(&self) -> Option<(&Tree, &Tree)> {
        match self {
            Tree::Leaf => None,
            Tree::Node(n) => Some((&n.left, &n.right)),
        }
    }

    pub fn left(&self) -> Option<&Tree> {
        self.children().map(|(l, _)| l)
    }

    pub fn right(&self) -> Option<&Tree> {
        self.children().map(|(_, r)| r)
    }

    /// `k`-leaf comb; the left comb has a leaf for every right child.
    ///
    /// `k = 0` is treated as `k = 1`.
    pub fn comb(k: usize, side: Side) -> Tree {
        let mut t = Tree::Leaf;
        for _ in 1..k {
            t = match side {
                Side::Left => Tree::node(t, Tree::Leaf),
                Side::Right => Tree::node(Tree::Leaf, t),
            };
        }
        t
    }

    pub fn left_comb(k: usize) -> Tree {
        Tree::comb(k, Side::Left)
    }

    pub fn right_comb(k: usize) -> Tree {
        Tree::comb(k, Side::Right)
    }

    /// Left-right mirror image.
    pub fn reflect(&self) -> Tree {
        match self {
            Tree::Leaf => Tree::Leaf,
            Tree::Node(n) => Tree::node(n.right.reflect(), n.left.reflect()),
        }
    }

    pub fn render(&self) -> String {
        self.to_string()
    }

    pub fn parse(text: &str) -> Result<Tree> {
        Parser::new(text).parse_all()
    }

    pub fn canonical_index(&self) -> Result<TreeIndex> {
        Ok(TreeIndex {
            leaves: self.leaf_count(),
            rank: rank0(self)? + 1,
        })
    }

    pub fn from_index(ix: TreeIndex) -> Result<Tree> {
        if ix.leaves == 0 {
            return Err(Error::ZeroLeaves);
        }
        let count = catalan(ix.leaves - 1).ok_or(Error::IndexOverflow(ix.leaves))?;
        if ix.rank == 0 || ix.rank > count {
            return Err(Error::RankOutOfRange {
                leaves: ix.leaves,
                rank: ix.rank,
                count,
            });
        }
        Ok(unrank0(ix.leaves, ix.rank - 1))
    }
}

impl Ord for Tree {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.leaf_count().cmp(&other.leaf_count()) {
            Ordering::Equal => {}
            o => return o,
        }
        match (self, other) {
            (Tree::Node(a), Tree::Node(b)) => b
                .left
                .leaf_count()
                .cmp(&a.left.leaf_count())
                .then_with(|| a.left.cmp(&b.left))
                .then_with(|| a.right.cmp(&b.right)),
            // equal leaf counts: both leaves
            _ => Ordering::Equal,
        }
    }
}

impl PartialOrd for Tree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tree::Leaf => f.write_str("L"),
            Tree::Node(n) => write!(f, "({} {})", n.left, n.right),
        }
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Tree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Tree> {
        Tree::parse(s)
    }
}

impl serde::Serialize for Tree {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Tree {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Tree, D::Error> {
        let s = String::deserialize(d)?;
        Tree::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// Position of a tree in the canonical order: `t_{leaves_rank}`, rank 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TreeIndex {
    pub leaves: usize,
    pub rank: u128,
}

impl TreeIndex {
    pub fn new(leaves: usize, rank: u128) -> Self {
        TreeIndex { leaves, rank }
    }
}

impl fmt::Display for TreeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t{}_{}", self.leaves, self.rank)
    }
}

impl FromStr for TreeIndex {
    type Err = Error;

    /// Accepts `t4_2`, `t_{4_2}` and `4_2`.
    fn from_str(s: &str) -> Result<TreeIndex> {
        let body = s.trim();
        let body = body.strip_prefix('t').unwrap_or(body);
        let body = body.strip_prefix('_').unwrap_or(body);
        let body = body
            .strip_prefix('{')
            .and_then(|b| b.strip_suffix('}'))
            .unwrap_or(body);
        let bad = || Error::Syntax {
            offset: 0,
            message: format!("expected a tree index like t4_2, got {s:?}"),
        };
        let (k, j) = body.split_once('_').ok_or_else(bad)?;
        Ok(TreeIndex {
            leaves: k.parse().map_err(|_| bad())?,
            rank: j.parse().map_err(|_| bad())?,
        })
    }
}

/// Catalan number `C_m`, or `None` once it no longer fits in a `u128`.
pub fn catalan(m: usize) -> Option<u128> {
    let mut c: u128 = 1;
    for i in 0..m as u128 {
        // C_{i+1} = C_i * 2(2i+1) / (i+2), divide first where possible
        let g = num_integer::gcd(c, i + 2);
        c = (c / g).checked_mul(2 * (2 * i + 1) / ((i + 2) / g))?;
    }
    Some(c)
}

/// Number of trees with a left subtree of `l` leaves among `k`-leaf trees.
fn block(k: usize, l: usize) -> Option<u128> {
    catalan(l - 1)?.checked_mul(catalan(k - l - 1)?)
}

fn rank0(t: &Tree) -> Result<u128> {
    let Some((left, right)) = t.children() else {
        return Ok(0);
    };
    let k = t.leaf_count();
    let l = left.leaf_count();
    let overflow = || Error::IndexOverflow(k);
    let mut r: u128 = 0;
    for larger in (l + 1)..k {
        r = r
            .checked_add(block(k, larger).ok_or_else(overflow)?)
            .ok_or_else(overflow)?;
    }
    let right_count = catalan(k - l - 1).ok_or_else(overflow)?;
    let within = rank0(left)?
        .checked_mul(right_count)
        .and_then(|v| v.checked_add(rank0(right).ok()?))
        .ok_or_else(overflow)?;
    r.checked_add(within).ok_or_else(overflow)
}

// rank must already be validated against catalan(k - 1)
fn unrank0(k: usize, mut rank: u128) -> Tree {
    if k == 1 {
        return Tree::Leaf;
    }
    for l in (1..k).rev() {
        let size = block(k, l).expect("validated rank implies no overflow");
        if rank < size {
            let right_count = catalan(k - l - 1).unwrap();
            return Tree::node(
                unrank0(l, rank / right_count),
                unrank0(k - l, rank % right_count),
            );
        }
        rank -= size;
    }
    unreachable!("rank below catalan(k - 1)")
}

/// All `n`-leaf trees in canonical order.
pub fn enumerate_trees(n: usize) -> Result<Vec<Tree>> {
    Ok(enumerate_up_to(n)?.pop().unwrap_or_default())
}

/// `result[i]` holds every `(i + 1)`-leaf tree in canonical order.
pub fn enumerate_up_to(n: usize) -> Result<Vec<Vec<Tree>>> {
    if n == 0 {
        return Err(Error::ZeroLeaves);
    }
    let mut by_size: Vec<Vec<Tree>> = vec![vec![Tree::Leaf]];
    for k in 2..=n {
        let mut level = Vec::new();
        for l in (1..k).rev() {
            for left in &by_size[l - 1] {
                for right in &by_size[k - l - 1] {
                    level.push(Tree::node(left.clone(), right.clone()));
                }
            }
        }
        by_size.push(level);
    }
    Ok(by_size)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn parse_all(mut self) -> Result<Tree> {
        self.skip_ws();
        if self.pos == self.bytes.len() {
            return Err(Error::EmptyInput);
        }
        let t = self.tree()?;
        self.skip_ws();
        if self.pos != self.bytes.len() {
            return Err(self.error("trailing input after tree"));
        }
        Ok(t)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn error(&self, message: &str) -> Error {
        Error::Syntax {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn tree(&mut self) -> Result<Tree> {
        self.skip_ws();
        match self.bytes.get(self.pos) {
            Some(b'L') => {
                self.pos += 1;
                Ok(Tree::Leaf)
            }
            Some(b'(') => {
                self.pos += 1;
                let left = self.tree()?;
                let right = self.tree()?;
                self.skip_ws();
                match self.bytes.get(self.pos) {
                    Some(b')') => {
                        self.pos += 1;
                        Ok(Tree::node(left, right))
                    }
                    None => Err(self.error("expected ')' but input ended")),
                    Some(_) => Err(self.error("expected ')'")),
                }
            }
            None => Err(self.error("expected 'L' or '(' but input ended")),
            Some(_) => Err(self.error("expected 'L' or '('")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Tree {
        Tree::parse(s).unwrap()
    }

    #[test]
    fn parse_basics() {
        assert_eq!(t("L"), Tree::Leaf);
        assert_eq!(t("((L L) L)"), Tree::left_comb(3));
        assert_eq!(t("((L(LL))L)"), t("((L (L L)) L)"));
        assert!(matches!(
            Tree::parse("((L L"),
            Err(Error::Syntax { offset: 5, .. })
        ));
        assert!(matches!(Tree::parse(""), Err(Error::EmptyInput)));
        assert!(matches!(Tree::parse("   "), Err(Error::EmptyInput)));
        assert!(matches!(
            Tree::parse("(L L L)"),
            Err(Error::Syntax { offset: 5, .. })
        ));
        assert!(matches!(
            Tree::parse("L L"),
            Err(Error::Syntax { offset: 2, .. })
        ));
        assert!(matches!(
            Tree::parse("(L x)"),
            Err(Error::Syntax { offset: 3, .. })
        ));
    }

    #[test]
    fn render_basics() {
        assert_eq!(Tree::Leaf.render(), "L");
        assert_eq!(Tree::left_comb(4).render(), "(((L L) L) L)");
        assert_eq!(Tree::right_comb(3).render(), "(L (L L))");
        assert_eq!(Tree::comb(1, Side::Left), Tree::Leaf);
    }

    #[test]
    fn reflect_examples() {
        assert_eq!(Tree::Leaf.reflect(), Tree::Leaf);
        assert_eq!(t("((L L) L)").reflect(), t("(L (L L))"));
        for tree in enumerate_trees(5).unwrap() {
            assert_eq!(tree.reflect().reflect(), tree);
            assert_eq!(tree.reflect().leaf_count(), 5);
        }
    }

    #[test]
    fn catalan_values() {
        let first: Vec<u128> = (0..11).map(|m| catalan(m).unwrap()).collect();
        assert_eq!(first, [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]);
        assert!(catalan(60).is_some());
        assert!(catalan(200).is_none());
    }

    #[test]
    fn enumeration_counts_and_order() {
        assert!(matches!(enumerate_trees(0), Err(Error::ZeroLeaves)));
        assert_eq!(enumerate_trees(1).unwrap(), vec![Tree::Leaf]);
        assert_eq!(enumerate_trees(5).unwrap().len(), 14);
        for n in 1..=10 {
            let trees = enumerate_trees(n).unwrap();
            assert_eq!(trees.len() as u128, catalan(n - 1).unwrap());
            assert!(trees.windows(2).all(|w| w[0] < w[1]));
            assert!(trees.iter().all(|x| x.leaf_count() == n));
        }
        let four = enumerate_trees(4).unwrap();
        assert_eq!(four[0].render(), "(((L L) L) L)");
        assert_eq!(four[4].render(), "(L (L (L L)))");
        assert_eq!(four[1], t("((L (L L)) L)"));
        assert_eq!(four[2], t("((L L) (L L))"));
    }

    #[test]
    fn index_examples() {
        assert_eq!(Tree::Leaf.canonical_index().unwrap(), TreeIndex::new(1, 1));
        assert_eq!(
            t("((L (L L)) L)").canonical_index().unwrap(),
            TreeIndex::new(4, 2)
        );
        assert_eq!(
            t("((L (L L)) (L L))").canonical_index().unwrap(),
            TreeIndex::new(5, 7)
        );
        assert_eq!(
            Tree::left_comb(5).canonical_index().unwrap(),
            TreeIndex::new(5, 1)
        );
        assert_eq!(
            Tree::right_comb(5).canonical_index().unwrap(),
            TreeIndex::new(5, 14)
        );
        assert!(matches!(
            Tree::from_index(TreeIndex::new(4, 6)),
            Err(Error::RankOutOfRange { count: 5, .. })
        ));
        assert!(Tree::from_index(TreeIndex::new(4, 0)).is_err());
        assert!(matches!(
            Tree::from_index(TreeIndex::new(0, 1)),
            Err(Error::ZeroLeaves)
        ));
        for s in ["t4_2", "t_{4_2}", "4_2"] {
            assert_eq!(s.parse::<TreeIndex>().unwrap(), TreeIndex::new(4, 2));
        }
        assert!("t4".parse::<TreeIndex>().is_err());
        assert!("tx_1".parse::<TreeIndex>().is_err());
    }

    #[test]
    fn index_roundtrip_small() {
        for k in 1..=8 {
            for (i, tree) in enumerate_trees(k).unwrap().iter().enumerate() {
                let ix = TreeIndex::new(k, i as u128 + 1);
                assert_eq!(tree.canonical_index().unwrap(), ix);
                assert_eq!(&Tree::from_index(ix).unwrap(), tree);
            }
        }
    }

    #[test]
    fn large_comb_index() {
        let c = Tree::right_comb(40);
        let ix = c.canonical_index().unwrap();
        assert_eq!(ix.rank, catalan(39).unwrap());
        assert_eq!(Tree::from_index(ix).unwrap(), c);
    }
}
