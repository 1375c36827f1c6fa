//! Non-crossing set partitions encoded as restricted growth strings, the two
//! branch-block bijections from binary trees, string pattern containment,
//! and staggered tree patterns with their partition-pattern images.

use std::fmt;

use crate::error::{Error, Result};
use crate::pattern::{EdgeType, TreePattern};
use crate::tree::BinaryTree;

/// A restricted growth string: `x_1 = 1` and each entry exceeds the running
/// maximum by at most one. Encodes a set partition with blocks numbered by
/// first appearance.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rgs {
    digits: Vec<u8>,
}

impl Rgs {
    pub fn new(digits: Vec<u8>) -> Result<Self> {
        if let Some((i, _)) = digits
            .iter()
            .enumerate()
            .find(|&(i, &d)| d == 0 || d as usize > max_prefix(&digits[..i]) + 1)
        {
            return Err(Error::InvalidInput(format!(
                "not a restricted growth string at position {}",
                i + 1
            )));
        }
        Ok(Rgs { digits })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let digits: Vec<u8> = if text.contains(',') {
            text.split(',')
                .map(|s| {
                    s.trim()
                        .parse::<u8>()
                        .map_err(|_| Error::InvalidInput(format!("bad digit {s:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            text.trim()
                .chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as u8)
                        .ok_or_else(|| Error::InvalidInput(format!("bad digit {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        Self::new(digits)
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn block_count(&self) -> usize {
        self.digits.iter().copied().max().unwrap_or(0) as usize
    }

    /// The partition's blocks, block `i` at index `i - 1`.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.block_count()];
        for (i, &d) in self.digits.iter().enumerate() {
            blocks[d as usize - 1].push(i + 1);
        }
        blocks
    }

    /// Canonical RGS of a partition given as blocks over `1..=n`.
    pub fn from_blocks(blocks: &[Vec<usize>], n: usize) -> Result<Self> {
        let mut sorted: Vec<&Vec<usize>> = blocks.iter().filter(|b| !b.is_empty()).collect();
        sorted.sort_by_key(|b| *b.iter().min().unwrap());
        let mut digits = vec![0u8; n];
        for (idx, block) in sorted.iter().enumerate() {
            for &el in block.iter() {
                if el == 0 || el > n || digits[el - 1] != 0 {
                    return Err(Error::InvalidInput("blocks do not partition 1..=n".into()));
                }
                digits[el - 1] = idx as u8 + 1;
            }
        }
        if digits.iter().any(|&d| d == 0) {
            return Err(Error::InvalidInput("blocks do not cover 1..=n".into()));
        }
        Self::new(digits)
    }

    /// String pattern containment: a subsequence whose equalities match the
    /// repeated entries of `patt` and whose strict orders match as well.
    pub fn contains_pattern(&self, patt: &[u8]) -> bool {
        fn rec(h: &[u8], nd: &[u8], start: usize, chosen: &mut Vec<usize>) -> bool {
            let t = chosen.len();
            if t == nd.len() {
                return true;
            }
            for pos in start..h.len() {
                if h.len() - pos < nd.len() - t {
                    return false;
                }
                let ok = (0..t).all(|s| {
                    let (a, b) = (h[chosen[s]], h[pos]);
                    let (x, y) = (nd[s], nd[t]);
                    (a < b) == (x < y) && (a == b) == (x == y)
                });
                if ok {
                    chosen.push(pos);
                    if rec(h, nd, pos + 1, chosen) {
                        return true;
                    }
                    chosen.pop();
                }
            }
            false
        }
        let mut chosen = Vec::with_capacity(patt.len());
        rec(&self.digits, patt, 0, &mut chosen)
    }
}

impl fmt::Display for Rgs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.digits.iter().all(|&d| d <= 9) {
            for &d in &self.digits {
                write!(f, "{d}")?;
            }
            Ok(())
        } else {
            let strs: Vec<String> = self.digits.iter().map(|d| d.to_string()).collect();
            f.write_str(&strs.join(","))
        }
    }
}

impl fmt::Debug for Rgs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rgs({self})")
    }
}

fn max_prefix(digits: &[u8]) -> usize {
    digits.iter().copied().max().unwrap_or(0) as usize
}

/// Which family of branches forms the blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Maps a tree to the partition of `1..=n` whose blocks are its maximal
/// left (or right) branches. A bijection onto non-crossing partitions.
pub fn partition_from_tree(t: &BinaryTree, side: Side) -> Rgs {
    match side {
        Side::Left => phi_left(t),
        Side::Right => {
            let mirrored = phi_left(&t.mirror());
            reflect_rgs(&mirrored, t.n())
        }
    }
}

fn phi_left(t: &BinaryTree) -> Rgs {
    if t.is_empty() {
        return Rgs { digits: vec![] };
    }
    let (l, r) = t.split().unwrap();
    let xl = phi_left(&l);
    let xr = phi_left(&r);
    let shift = if l.is_empty() {
        1
    } else {
        xl.block_count() as u8
    };
    let mut digits = xl.digits;
    digits.push(1);
    digits.extend(xr.digits.iter().map(|&d| d + shift));
    Rgs { digits }
}

/// Transports an RGS over `1..=n` through the relabeling `i -> n + 1 - i`.
fn reflect_rgs(x: &Rgs, n: usize) -> Rgs {
    let blocks: Vec<Vec<usize>> = x
        .blocks()
        .iter()
        .map(|b| b.iter().map(|&e| n + 1 - e).collect())
        .collect();
    Rgs::from_blocks(&blocks, n).expect("reflection preserves partitions")
}

/// Inverse of `partition_from_tree`. Rejects crossing partitions.
pub fn partition_to_tree(x: &Rgs, side: Side) -> Result<BinaryTree> {
    if x.contains_pattern(&[1, 2, 1, 2]) {
        return Err(Error::Domain(format!(
            "{x} contains 1212 and is not non-crossing"
        )));
    }
    match side {
        Side::Left => phi_left_inverse(x.digits()),
        Side::Right => {
            let reflected = reflect_rgs(x, x.len());
            Ok(phi_left_inverse(reflected.digits())?.mirror())
        }
    }
}

fn phi_left_inverse(digits: &[u8]) -> Result<BinaryTree> {
    if digits.is_empty() {
        return Ok(BinaryTree::empty());
    }
    let root_pos = digits
        .iter()
        .rposition(|&d| d == 1)
        .ok_or_else(|| Error::InvalidInput("missing symbol 1".into()))?;
    let (left_part, rest) = digits.split_at(root_pos);
    let right_part = &rest[1..];
    let shift = if left_part.is_empty() {
        1
    } else {
        max_prefix(left_part) as u8
    };
    if right_part.iter().any(|&d| d <= shift) {
        // a symbol recurs on both sides of the last 1, so the string crosses
        return Err(Error::Domain("crossing partition".into()));
    }
    let right_digits: Vec<u8> = right_part.iter().map(|&d| d - shift).collect();
    let l = phi_left_inverse(left_part)?;
    let r = phi_left_inverse(&right_digits)?;
    Ok(BinaryTree::compose(&l, &r))
}

/// All restricted growth strings of length `n` (all set partitions).
pub fn all_rgs(n: usize) -> Vec<Rgs> {
    let mut out = Vec::new();
    let mut digits = Vec::with_capacity(n);
    fn rec(n: usize, maxd: u8, digits: &mut Vec<u8>, out: &mut Vec<Rgs>) {
        if digits.len() == n {
            out.push(Rgs {
                digits: digits.clone(),
            });
            return;
        }
        for d in 1..=maxd + 1 {
            digits.push(d);
            rec(n, maxd.max(d), digits, out);
            digits.pop();
        }
    }
    rec(n, 0, &mut digits, &mut out);
    out
}

/// The signature of a staggered tree pattern: the sizes of its contiguous
/// left branches from the root, and for each branch but the last the
/// bottom-up position of the vertex carrying the right child.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StaggeredSignature {
    pub alphas: Vec<usize>,
    pub betas: Vec<usize>,
}

impl StaggeredSignature {
    /// Conditions under which the block bijection restricts to the avoider
    /// sets: an initial full-height attachment forces a short first branch,
    /// and later attachments must sit strictly below their branch tops.
    pub fn bijection_conditions_hold(&self) -> bool {
        let l = self.alphas.len();
        if l > 1 && self.betas[0] == self.alphas[0] && self.alphas[0] > 2 {
            return false;
        }
        for i in 1..l.saturating_sub(1) {
            if self.betas[i] >= self.alphas[i] {
                return false;
            }
        }
        true
    }
}

/// Recognizes staggered patterns: chains of contiguous left branches, each
/// hanging off the previous one by a single non-contiguous right edge.
pub fn staggered_signature(pat: &TreePattern) -> Option<StaggeredSignature> {
    let mut alphas = Vec::new();
    let mut betas = Vec::new();
    let mut cur = pat.shape().clone();
    let mut cur_edges: Vec<EdgeType> = {
        let tau = cur.preorder();
        let mut e = vec![EdgeType::NonContiguous; cur.n() + 1];
        for &v in &tau.values()[1..] {
            e[v as usize] = pat.edge(v as usize);
        }
        e
    };
    loop {
        let root = cur.root()?;
        let branch = cur.left_branch(root);
        // the branch must be contiguous all the way down
        for &v in branch.iter().skip(1) {
            if cur_edges[v] != EdgeType::Contiguous {
                return None;
            }
        }
        let carriers: Vec<usize> = branch
            .iter()
            .copied()
            .filter(|&v| cur.right(v).is_some())
            .collect();
        alphas.push(branch.len());
        match carriers.len() {
            0 => {
                return Some(StaggeredSignature { alphas, betas });
            }
            1 => {
                let i = carriers[0];
                let j = cur.right(i).unwrap();
                if cur_edges[j] != EdgeType::NonContiguous {
                    return None;
                }
                // position of the carrier counted from the bottom
                let pos_from_top = branch.iter().position(|&v| v == i).unwrap();
                betas.push(branch.len() - pos_from_top);
                let sub = cur.subtree(j);
                let (lo, _) = cur.subtree_span(j);
                let mut sub_edges = vec![EdgeType::NonContiguous; sub.n() + 1];
                for v in 1..=sub.n() {
                    if Some(v) != sub.root() {
                        sub_edges[v] = cur_edges[v + lo - 1];
                    }
                }
                cur = sub;
                cur_edges = sub_edges;
            }
            _ => return None,
        }
    }
}

/// The partition pattern that left-branch blocks of a staggered pattern
/// produce: each branch contributes its symbol in two groups around the
/// innermost branch.
pub fn rgs_pattern_of_staggered(sig: &StaggeredSignature) -> Vec<u8> {
    let l = sig.alphas.len();
    let mut out = Vec::new();
    for i in 0..l.saturating_sub(1) {
        out.extend(std::iter::repeat(i as u8 + 1).take(sig.betas[i]));
    }
    out.extend(std::iter::repeat(l as u8).take(sig.alphas[l - 1]));
    for i in (0..l.saturating_sub(1)).rev() {
        out.extend(std::iter::repeat(i as u8 + 1).take(sig.alphas[i] - sig.betas[i]));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::all_trees;
    use std::collections::HashSet;

    fn t(s: &str) -> BinaryTree {
        BinaryTree::parse(s).unwrap()
    }

    fn pat(s: &str) -> TreePattern {
        TreePattern::parse(s).unwrap()
    }

    #[test]
    fn rgs_validation() {
        assert!(Rgs::parse("12123424").is_ok());
        assert!(Rgs::parse("2").is_err());
        assert!(Rgs::parse("113").is_err());
    }

    #[test]
    fn phi_examples() {
        assert_eq!(partition_from_tree(&BinaryTree::left_path(3), Side::Left).to_string(), "111");
        assert_eq!(partition_from_tree(&BinaryTree::right_path(3), Side::Left).to_string(), "123");
        assert_eq!(partition_from_tree(&t("213"), Side::Left).to_string(), "112");
        assert_eq!(partition_from_tree(&t("213"), Side::Right).to_string(), "122");
    }

    #[test]
    fn phi_round_trip_and_image() {
        for side in [Side::Left, Side::Right] {
            for n in 0..=8 {
                let mut seen = HashSet::new();
                for tree in all_trees(n).iter() {
                    let x = partition_from_tree(tree, side);
                    assert!(!x.contains_pattern(&[1, 2, 1, 2]), "{tree} gave crossing {x}");
                    assert!(seen.insert(x.to_string()));
                    assert_eq!(&partition_to_tree(&x, side).unwrap(), tree);
                }
                let noncrossing = all_rgs(n)
                    .into_iter()
                    .filter(|x| !x.contains_pattern(&[1, 2, 1, 2]))
                    .count();
                assert_eq!(seen.len(), noncrossing);
            }
        }
    }

    #[test]
    fn inverse_rejects_crossing() {
        let x = Rgs::parse("1212").unwrap();
        assert!(partition_to_tree(&x, Side::Left).is_err());
    }

    #[test]
    fn rgs_pattern_containment() {
        assert!(Rgs::parse("12123424").unwrap().contains_pattern(&[1, 2, 1, 2]));
        assert!(!Rgs::parse("1122").unwrap().contains_pattern(&[1, 2, 1, 2]));
        assert!(Rgs::parse("1").unwrap().contains_pattern(&[1]));
        assert!(Rgs::parse("1122").unwrap().contains_pattern(&[1, 1, 2, 2]));
        assert!(!Rgs::parse("1123").unwrap().contains_pattern(&[1, 1, 2, 2]));
    }

    #[test]
    fn staggered_examples() {
        // mirror of the contiguous right path is a contiguous left path
        let sig = staggered_signature(&pat("123:11").mirror()).unwrap();
        assert_eq!(sig.alphas, vec![3]);
        assert!(sig.betas.is_empty());
        assert_eq!(rgs_pattern_of_staggered(&sig), vec![1, 1, 1]);

        let sig2 = staggered_signature(&pat("2143:101")).unwrap();
        assert_eq!(sig2.alphas, vec![2, 2]);
        assert_eq!(sig2.betas, vec![2]);
        assert_eq!(rgs_pattern_of_staggered(&sig2), vec![1, 1, 2, 2]);
        assert!(sig2.bijection_conditions_hold());

        let sig3 = staggered_signature(&pat("1423:010")).unwrap();
        assert_eq!(sig3.alphas, vec![1, 2, 1]);
        assert_eq!(sig3.betas, vec![1, 1]);
        assert_eq!(rgs_pattern_of_staggered(&sig3), vec![1, 2, 3, 2]);

        assert!(staggered_signature(&pat("123:11")).is_none());
        assert!(staggered_signature(&pat("321:01")).is_none());

        // substituting a two-group signature
        let s = StaggeredSignature {
            alphas: vec![2, 2],
            betas: vec![1],
        };
        assert_eq!(rgs_pattern_of_staggered(&s), vec![1, 2, 2, 1]);
    }
}
