//! Bijections between three pattern-avoiding tree families and bitstrings
//! of length `n - 1`.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::pattern::TreePattern;
use crate::tree::BinaryTree;

/// Which avoider family the bitstring encodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BitScheme {
    /// Trees avoiding the non-contiguous 132 pattern: a left spine whose
    /// vertices carry pure right paths.
    S132,
    /// Trees avoiding the non-contiguous 123 pattern: a left spine whose
    /// vertices carry left paths as right subtrees.
    S123,
    /// Trees avoiding the non-contiguous 213 pattern: paths.
    S213,
}

impl BitScheme {
    pub fn forbidden(self) -> &'static TreePattern {
        static P132: OnceLock<TreePattern> = OnceLock::new();
        static P123: OnceLock<TreePattern> = OnceLock::new();
        static P213: OnceLock<TreePattern> = OnceLock::new();
        match self {
            BitScheme::S132 => P132.get_or_init(|| TreePattern::parse("132:00").unwrap()),
            BitScheme::S123 => P123.get_or_init(|| TreePattern::parse("123:00").unwrap()),
            BitScheme::S213 => P213.get_or_init(|| TreePattern::parse("213:00").unwrap()),
        }
    }
}

fn check_domain(t: &BinaryTree, scheme: BitScheme) -> Result<()> {
    if scheme.forbidden().contains(t) {
        Err(Error::Domain(format!(
            "tree {t} contains {}",
            scheme.forbidden()
        )))
    } else {
        Ok(())
    }
}

/// Runs of 1s and 0s, alternating and starting with 1s; the first run may be
/// empty. Returns the run lengths.
fn alternating_runs(bits: &[bool]) -> Vec<usize> {
    let mut runs = vec![0usize];
    let mut expect = true;
    for &b in bits {
        if b == expect {
            *runs.last_mut().unwrap() += 1;
        } else {
            expect = !expect;
            runs.push(1);
        }
    }
    runs
}

pub fn bits_from_tree(t: &BinaryTree, scheme: BitScheme) -> Result<Vec<bool>> {
    check_domain(t, scheme)?;
    let n = t.n();
    let mut bits = Vec::with_capacity(n.saturating_sub(1));
    if n == 0 {
        return Err(Error::Domain("the empty tree has no bitstring".into()));
    }
    match scheme {
        BitScheme::S132 => {
            let spine = t.left_branch(t.root().unwrap());
            let mut bit = true;
            for (i, &v) in spine.iter().enumerate() {
                let len = t.right_branch_len(v);
                let count = if i == 0 { len - 1 } else { len };
                bits.extend(std::iter::repeat(bit).take(count));
                bit = !bit;
            }
        }
        BitScheme::S123 => {
            let spine = t.left_branch(t.root().unwrap());
            let mut bit = true;
            for (i, &v) in spine.iter().enumerate() {
                let hang = t.right(v).map_or(0, |w| t.left_branch_len(w));
                let count = if i == 0 { hang } else { hang + 1 };
                bits.extend(std::iter::repeat(bit).take(count));
                bit = !bit;
            }
        }
        BitScheme::S213 => {
            let mut v = t.root().unwrap();
            loop {
                match (t.right(v), t.left(v)) {
                    (Some(w), None) => {
                        bits.push(true);
                        v = w;
                    }
                    (None, Some(w)) => {
                        bits.push(false);
                        v = w;
                    }
                    (None, None) => break,
                    (Some(_), Some(_)) => unreachable!("domain check rules out two children"),
                }
            }
        }
    }
    debug_assert_eq!(bits.len(), n - 1);
    Ok(bits)
}

pub fn bits_to_tree(bits: &[bool], scheme: BitScheme) -> BinaryTree {
    match scheme {
        BitScheme::S132 => {
            let runs = alternating_runs(bits);
            // spine vertex i carries a right path of runs[i] extra vertices
            // (the root's run was shortened by one)
            let mut t = BinaryTree::empty();
            for (i, &len) in runs.iter().enumerate().rev() {
                let extra = if i == 0 { len } else { len - 1 };
                t = BinaryTree::compose(&t, &BinaryTree::right_path(extra));
            }
            t
        }
        BitScheme::S123 => {
            let runs = alternating_runs(bits);
            let mut t = BinaryTree::empty();
            for (i, &len) in runs.iter().enumerate().rev() {
                let hang = if i == 0 { len } else { len - 1 };
                t = BinaryTree::compose(&t, &BinaryTree::left_path(hang));
            }
            t
        }
        BitScheme::S213 => {
            let mut t = BinaryTree::single();
            for &b in bits.iter().rev() {
                t = if b {
                    BinaryTree::compose(&BinaryTree::empty(), &t)
                } else {
                    BinaryTree::compose(&t, &BinaryTree::empty())
                };
            }
            t
        }
    }
}

pub fn bits_to_string(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

pub fn bits_from_string(s: &str) -> Result<Vec<bool>> {
    s.trim()
        .chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            other => Err(Error::InvalidInput(format!("bad bit {other:?}"))),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::avoiders;

    #[test]
    fn forward_examples() {
        let right3 = BinaryTree::right_path(3);
        assert_eq!(
            bits_to_string(&bits_from_tree(&right3, BitScheme::S132).unwrap()),
            "11"
        );
        let left3 = BinaryTree::left_path(3);
        assert_eq!(
            bits_to_string(&bits_from_tree(&left3, BitScheme::S132).unwrap()),
            "01"
        );
        // the 213 scheme reads edge directions of a path
        let path = BinaryTree::parse("132").unwrap(); // root, right child, its left child
        assert_eq!(
            bits_to_string(&bits_from_tree(&path, BitScheme::S213).unwrap()),
            "10"
        );
        assert_eq!(
            bits_to_string(&bits_from_tree(&left3, BitScheme::S123).unwrap()),
            "01"
        );
    }

    #[test]
    fn rejects_out_of_domain() {
        let t = BinaryTree::parse("1423").unwrap();
        assert!(bits_from_tree(&t, BitScheme::S132).is_err());
    }

    #[test]
    fn round_trip_and_image() {
        for scheme in [BitScheme::S132, BitScheme::S123, BitScheme::S213] {
            for n in 1..=9 {
                let dom = avoiders(n, std::slice::from_ref(scheme.forbidden()));
                assert_eq!(dom.len(), 1usize << (n - 1));
                let mut seen = std::collections::HashSet::new();
                for t in &dom {
                    let bits = bits_from_tree(t, scheme).unwrap();
                    assert_eq!(bits.len(), n - 1);
                    assert!(seen.insert(bits.clone()), "not injective at {t}");
                    assert_eq!(&bits_to_tree(&bits, scheme), t, "round trip at {t}");
                }
                assert_eq!(seen.len(), 1usize << (n - 1));
            }
        }
    }
}
