//! Binary trees on vertices `1..=n` labeled by the search-tree property,
//! with rotations, slides, mirroring and exhaustive enumeration.
//!
//! The labels are forced by the shape: every left descendant of a vertex is
//! smaller, every right descendant larger. Trees are immutable values;
//! rotations and slides return new trees.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Direction of a rotation or slide.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Dir {
    Up,
    Down,
}

impl Dir {
    pub fn opposite(self) -> Dir {
        match self {
            Dir::Up => Dir::Down,
            Dir::Down => Dir::Up,
        }
    }
}

impl fmt::Display for Dir {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Dir::Up => "up",
            Dir::Down => "down",
        })
    }
}

/// A binary tree with vertex set `1..=n`. Index 0 of the link arrays is
/// unused and the value 0 encodes "no vertex".
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryTree {
    parent: Vec<u32>,
    left: Vec<u32>,
    right: Vec<u32>,
    root: u32,
}

impl BinaryTree {
    /// The empty tree on 0 vertices.
    pub fn empty() -> Self {
        BinaryTree {
            parent: vec![0],
            left: vec![0],
            right: vec![0],
            root: 0,
        }
    }

    /// The tree with a single vertex.
    pub fn single() -> Self {
        Self::compose(&Self::empty(), &Self::empty())
    }

    /// Joins `left` and `right` under a new root. Labels of `left` are kept,
    /// the root becomes `left.n() + 1` and labels of `right` shift up.
    pub fn compose(left: &BinaryTree, right: &BinaryTree) -> Self {
        let l = left.n();
        let r = right.n();
        let n = l + r + 1;
        let root = (l + 1) as u32;
        let mut t = BinaryTree {
            parent: vec![0; n + 1],
            left: vec![0; n + 1],
            right: vec![0; n + 1],
            root,
        };
        for v in 1..=l {
            t.parent[v] = left.parent[v];
            t.left[v] = left.left[v];
            t.right[v] = left.right[v];
        }
        let shift = (l + 1) as u32;
        let sh = |x: u32| if x == 0 { 0 } else { x + shift };
        for v in 1..=r {
            t.parent[v + l + 1] = sh(right.parent[v]);
            t.left[v + l + 1] = sh(right.left[v]);
            t.right[v + l + 1] = sh(right.right[v]);
        }
        if l > 0 {
            t.left[root as usize] = left.root;
            t.parent[left.root as usize] = root;
        }
        if r > 0 {
            let rr = right.root + shift;
            t.right[root as usize] = rr;
            t.parent[rr as usize] = root;
        }
        t
    }

    /// The right path on `n` vertices (preorder = identity).
    pub fn right_path(n: usize) -> Self {
        let mut t = Self::empty();
        for _ in 0..n {
            t = Self::compose(&Self::empty(), &t);
        }
        t
    }

    /// The left path on `n` vertices.
    pub fn left_path(n: usize) -> Self {
        let mut t = Self::empty();
        for _ in 0..n {
            t = Self::compose(&t, &Self::empty());
        }
        t
    }

    pub fn n(&self) -> usize {
        self.parent.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.root == 0
    }

    pub fn root(&self) -> Option<usize> {
        nz(self.root)
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        nz(self.parent[v])
    }

    pub fn left(&self, v: usize) -> Option<usize> {
        nz(self.left[v])
    }

    pub fn right(&self, v: usize) -> Option<usize> {
        nz(self.right[v])
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n() {
            Err(Error::VertexOutOfRange(v, self.n()))
        } else {
            Ok(())
        }
    }

    /// Number of vertices on the left branch starting at `v`.
    pub fn left_branch_len(&self, v: usize) -> usize {
        let mut len = 0;
        let mut cur = Some(v);
        while let Some(c) = cur {
            len += 1;
            cur = self.left(c);
        }
        len
    }

    /// Number of vertices on the right branch starting at `v`.
    pub fn right_branch_len(&self, v: usize) -> usize {
        let mut len = 0;
        let mut cur = Some(v);
        while let Some(c) = cur {
            len += 1;
            cur = self.right(c);
        }
        len
    }

    /// The vertices of the right branch starting at `v`, top to bottom.
    pub fn right_branch(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut cur = Some(v);
        while let Some(c) = cur {
            out.push(c);
            cur = self.right(c);
        }
        out
    }

    /// The vertices of the left branch starting at `v`, top to bottom.
    pub fn left_branch(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut cur = Some(v);
        while let Some(c) = cur {
            out.push(c);
            cur = self.left(c);
        }
        out
    }

    /// Smallest and largest label in the subtree rooted at `v`. Thanks to the
    /// search-tree property the subtree is exactly the interval `min..=max`.
    pub fn subtree_span(&self, v: usize) -> (usize, usize) {
        let mut lo = v;
        while let Some(c) = self.left(lo) {
            lo = c;
        }
        let mut hi = v;
        while let Some(c) = self.right(hi) {
            hi = c;
        }
        (lo, hi)
    }

    /// Preorder traversal as a permutation of `1..=n`.
    pub fn preorder(&self) -> Permutation {
        let mut out = Vec::with_capacity(self.n());
        let mut stack = Vec::new();
        if let Some(r) = self.root() {
            stack.push(r);
        }
        while let Some(v) = stack.pop() {
            out.push(v as u32);
            if let Some(r) = self.right(v) {
                stack.push(r);
            }
            if let Some(l) = self.left(v) {
                stack.push(l);
            }
        }
        Permutation::from_values_unchecked(out)
    }

    /// Postorder traversal (children before parents), appended to `buf`.
    pub fn postorder_into(&self, buf: &mut Vec<u32>) {
        buf.clear();
        let Some(r) = self.root() else { return };
        // (vertex, expanded?)
        let mut stack = vec![(r, false)];
        while let Some((v, expanded)) = stack.pop() {
            if expanded {
                buf.push(v as u32);
            } else {
                stack.push((v, true));
                if let Some(x) = self.right(v) {
                    stack.push((x, false));
                }
                if let Some(x) = self.left(v) {
                    stack.push((x, false));
                }
            }
        }
    }

    pub fn postorder(&self) -> Vec<u32> {
        let mut buf = Vec::new();
        self.postorder_into(&mut buf);
        buf
    }

    /// Inverse of `preorder`. The input must avoid the classical pattern 231;
    /// otherwise a witnessing index triple is reported.
    pub fn from_preorder(p: &Permutation) -> Result<Self> {
        let vals = p.values();
        let n = vals.len();
        let mut t = BinaryTree {
            parent: vec![0; n + 1],
            left: vec![0; n + 1],
            right: vec![0; n + 1],
            root: if n == 0 { 0 } else { vals[0] },
        };
        build_from_preorder(vals, 0, &mut t)?;
        Ok(t)
    }

    /// Parses the canonical textual form: digits for `n <= 9`, otherwise
    /// comma-separated labels. The empty string is the empty tree.
    pub fn parse(text: &str) -> Result<Self> {
        let p = Permutation::parse(text)?;
        Self::from_preorder(&p)
    }

    /// Balanced-parenthesis interchange form `(L)R`.
    pub fn to_paren(&self) -> String {
        fn rec(t: &BinaryTree, v: Option<usize>, out: &mut String) {
            let Some(v) = v else { return };
            out.push('(');
            rec(t, t.left(v), out);
            out.push(')');
            rec(t, t.right(v), out);
        }
        let mut out = String::new();
        rec(self, self.root(), &mut out);
        out
    }

    pub fn from_paren(text: &str) -> Result<Self> {
        fn rec(bytes: &[u8], pos: &mut usize) -> Result<BinaryTree> {
            // parses a (possibly empty) tree
            if *pos >= bytes.len() || bytes[*pos] != b'(' {
                return Ok(BinaryTree::empty());
            }
            *pos += 1; // '('
            let left = rec(bytes, pos)?;
            if *pos >= bytes.len() || bytes[*pos] != b')' {
                return Err(Error::InvalidInput("unbalanced parentheses".into()));
            }
            *pos += 1; // ')'
            let right = rec(bytes, pos)?;
            Ok(BinaryTree::compose(&left, &right))
        }
        let bytes = text.trim().as_bytes();
        let mut pos = 0;
        let t = rec(bytes, &mut pos)?;
        if pos != bytes.len() {
            return Err(Error::InvalidInput("trailing characters after tree".into()));
        }
        Ok(t)
    }

    /// Mirror image: left and right are interchanged and vertex `i` becomes
    /// `n + 1 - i`. An involution.
    pub fn mirror(&self) -> Self {
        let n = self.n();
        let m = |x: u32| if x == 0 { 0 } else { (n as u32) + 1 - x };
        let mut t = BinaryTree {
            parent: vec![0; n + 1],
            left: vec![0; n + 1],
            right: vec![0; n + 1],
            root: m(self.root),
        };
        for v in 1..=n {
            let w = n + 1 - v;
            t.parent[w] = m(self.parent[v]);
            t.left[w] = m(self.right[v]);
            t.right[w] = m(self.left[v]);
        }
        t
    }

    /// A single rotation of vertex `j`. An up-rotation moves `j` one level
    /// up (requires `j` to be a right child); a down-rotation moves it one
    /// level down (requires a left child).
    pub fn rotate(&self, j: usize, dir: Dir) -> Result<Self> {
        self.check_vertex(j)?;
        match dir {
            Dir::Up => {
                let Some(i) = self.parent(j) else {
                    return Err(Error::Rotation {
                        vertex: j,
                        dir,
                        reason: "vertex is the root",
                    });
                };
                if self.right(i) != Some(j) {
                    return Err(Error::Rotation {
                        vertex: j,
                        dir,
                        reason: "vertex is not a right child",
                    });
                }
                let mut t = self.clone();
                let g = t.parent[i];
                let y = t.left[j];
                t.right[i] = y;
                if y != 0 {
                    t.parent[y as usize] = i as u32;
                }
                t.left[j] = i as u32;
                t.parent[i] = j as u32;
                t.parent[j] = g;
                if g == 0 {
                    t.root = j as u32;
                } else if t.left[g as usize] == i as u32 {
                    t.left[g as usize] = j as u32;
                } else {
                    t.right[g as usize] = j as u32;
                }
                Ok(t)
            }
            Dir::Down => {
                let Some(i) = self.left(j) else {
                    return Err(Error::Rotation {
                        vertex: j,
                        dir,
                        reason: "vertex has no left child",
                    });
                };
                let mut t = self.clone();
                let g = t.parent[j];
                let y = t.right[i];
                t.left[j] = y;
                if y != 0 {
                    t.parent[y as usize] = j as u32;
                }
                t.right[i] = j as u32;
                t.parent[j] = i as u32;
                t.parent[i] = g;
                if g == 0 {
                    t.root = i as u32;
                } else if t.left[g as usize] == j as u32 {
                    t.left[g as usize] = i as u32;
                } else {
                    t.right[g as usize] = i as u32;
                }
                Ok(t)
            }
        }
    }

    /// A slide of `j` by `d >= 1` steps: the `d`-fold composition of
    /// rotations. On failure the 1-based index of the first illegal rotation
    /// is reported.
    pub fn slide(&self, j: usize, dir: Dir, d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::Slide {
                vertex: j,
                dir,
                step: 0,
                reason: "slides take at least one step",
            });
        }
        let mut cur = self.clone();
        for step in 1..=d {
            cur = cur.rotate(j, dir).map_err(|e| match e {
                Error::Rotation { reason, .. } => Error::Slide {
                    vertex: j,
                    dir,
                    step,
                    reason,
                },
                other => other,
            })?;
        }
        Ok(cur)
    }

    /// Splits off the left and right subtrees of the root, each relabeled as
    /// a standalone tree. Returns `None` for the empty tree.
    pub fn split(&self) -> Option<(BinaryTree, BinaryTree)> {
        let r = self.root()?;
        let left = match self.left(r) {
            Some(c) => self.subtree(c),
            None => BinaryTree::empty(),
        };
        let right = match self.right(r) {
            Some(c) => self.subtree(c),
            None => BinaryTree::empty(),
        };
        Some((left, right))
    }

    /// The subtree rooted at `v`, relabeled to a standalone tree on
    /// `1..=size`.
    pub fn subtree(&self, v: usize) -> BinaryTree {
        let (lo, hi) = self.subtree_span(v);
        let size = hi - lo + 1;
        let shift = (lo - 1) as u32;
        let m = |x: u32| if x == 0 { 0 } else { x - shift };
        let mut t = BinaryTree {
            parent: vec![0; size + 1],
            left: vec![0; size + 1],
            right: vec![0; size + 1],
            root: m(v as u32),
        };
        for w in lo..=hi {
            let l = w - lo + 1;
            t.left[l] = m(self.left[w]);
            t.right[l] = m(self.right[w]);
            t.parent[l] = if w == v { 0 } else { m(self.parent[w]) };
        }
        t
    }

    /// Replaces the subtree rooted at `v` by `repl`, which must have the
    /// same number of vertices so that the label interval is preserved.
    pub fn replace_subtree(&self, v: usize, repl: &BinaryTree) -> Result<BinaryTree> {
        let (lo, hi) = self.subtree_span(v);
        let size = hi - lo + 1;
        if repl.n() != size {
            return Err(Error::Internal(format!(
                "replacement has {} vertices, subtree has {}",
                repl.n(),
                size
            )));
        }
        let mut t = self.clone();
        let shift = (lo - 1) as u32;
        let m = |x: u32| if x == 0 { 0 } else { x + shift };
        for w in 1..=size {
            t.left[w + lo - 1] = m(repl.left[w]);
            t.right[w + lo - 1] = m(repl.right[w]);
            t.parent[w + lo - 1] = m(repl.parent[w]);
        }
        let new_root = (repl.root + shift) as usize;
        let old_parent = self.parent[v];
        t.parent[new_root] = old_parent;
        if old_parent == 0 {
            t.root = new_root as u32;
        } else if self.left[old_parent as usize] == v as u32 {
            t.left[old_parent as usize] = new_root as u32;
        } else {
            t.right[old_parent as usize] = new_root as u32;
        }
        Ok(t)
    }

    #[cfg(debug_assertions)]
    #[allow(dead_code)]
    pub(crate) fn debug_validate(&self) {
        let n = self.n();
        if n == 0 {
            assert_eq!(self.root, 0);
            return;
        }
        assert!(self.root >= 1 && self.root as usize <= n);
        let mut seen = vec![false; n + 1];
        let mut stack = vec![self.root as usize];
        while let Some(v) = stack.pop() {
            assert!(!seen[v], "cycle at {v}");
            seen[v] = true;
            if let Some(l) = self.left(v) {
                assert!(l < v, "left child {l} of {v} not smaller");
                assert_eq!(self.parent(l), Some(v));
                stack.push(l);
            }
            if let Some(r) = self.right(v) {
                assert!(r > v, "right child {r} of {v} not larger");
                assert_eq!(self.parent(r), Some(v));
                stack.push(r);
            }
        }
        assert!(seen[1..].iter().all(|&s| s), "not connected");
    }
}

fn nz(x: u32) -> Option<usize> {
    if x == 0 {
        None
    } else {
        Some(x as usize)
    }
}

/// Recursive preorder parse. `vals[..]` is the slice to build, `offset` its
/// position in the whole input (for witness reporting).
fn build_from_preorder(vals: &[u32], offset: usize, t: &mut BinaryTree) -> Result<()> {
    if vals.is_empty() {
        return Ok(());
    }
    let root = vals[0];
    let rest = &vals[1..];
    // Left subtree holds exactly the values smaller than the root, and they
    // must form a contiguous block right after it.
    let split = rest.iter().position(|&v| v > root).unwrap_or(rest.len());
    if let Some(bad) = rest[split..].iter().position(|&v| v < root) {
        // vals[0], the first larger value and the later smaller value form a
        // 231 occurrence (positions are 1-based in the full input).
        return Err(Error::Contains231(
            offset + 1,
            offset + 2 + split,
            offset + 2 + split + bad,
        ));
    }
    let (lo, hi) = rest.split_at(split);
    debug_assert!(lo.iter().all(|&v| v < root));
    if !lo.is_empty() {
        let lroot = lo[0] as usize;
        t.left[root as usize] = lo[0];
        t.parent[lroot] = root;
        build_from_preorder(lo, offset + 1, t)?;
    }
    if !hi.is_empty() {
        let rroot = hi[0] as usize;
        t.right[root as usize] = hi[0];
        t.parent[rroot] = root;
        build_from_preorder(hi, offset + 1 + split, t)?;
    }
    Ok(())
}

impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.preorder())
    }
}

impl fmt::Debug for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryTree({})", self.preorder())
    }
}

/// All binary trees on `n` vertices, cached and shared. The count is the
/// `n`-th Catalan number.
pub fn all_trees(n: usize) -> Arc<Vec<BinaryTree>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<BinaryTree>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = cache.lock().unwrap().get(&n) {
        return Arc::clone(v);
    }
    let result: Arc<Vec<BinaryTree>> = if n == 0 {
        Arc::new(vec![BinaryTree::empty()])
    } else {
        let mut out = Vec::new();
        for l in 0..n {
            let lefts = all_trees(l);
            let rights = all_trees(n - 1 - l);
            for lt in lefts.iter() {
                for rt in rights.iter() {
                    out.push(BinaryTree::compose(lt, rt));
                }
            }
        }
        Arc::new(out)
    };
    cache
        .lock()
        .unwrap()
        .entry(n)
        .or_insert_with(|| Arc::clone(&result));
    result
}

/// Lazily yields every tree of `T_n` exactly once.
pub fn enumerate_all(n: usize) -> impl Iterator<Item = BinaryTree> {
    let catalogs: Vec<Arc<Vec<BinaryTree>>> = (0..n).map(all_trees).collect();
    let mut l = 0usize;
    let mut i = 0usize;
    let mut j = 0usize;
    let mut done_empty = false;
    std::iter::from_fn(move || {
        if n == 0 {
            if done_empty {
                return None;
            }
            done_empty = true;
            return Some(BinaryTree::empty());
        }
        while l < n {
            let lefts = &catalogs[l];
            let rights = &catalogs[n - 1 - l];
            if i < lefts.len() {
                if j < rights.len() {
                    let t = BinaryTree::compose(&lefts[i], &rights[j]);
                    j += 1;
                    return Some(t);
                }
                j = 0;
                i += 1;
            } else {
                i = 0;
                j = 0;
                l += 1;
            }
        }
        None
    })
}

/// Catalan number, the size of `T_n`.
pub fn catalan(n: usize) -> u64 {
    let mut c = vec![0u64; n + 1];
    c[0] = 1;
    for m in 1..=n {
        for p in 0..m {
            c[m] += c[p] * c[m - 1 - p];
        }
    }
    c[n]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> BinaryTree {
        BinaryTree::parse(s).unwrap()
    }

    #[test]
    fn preorder_of_paths() {
        assert_eq!(BinaryTree::right_path(4).preorder().to_string(), "1234");
        assert_eq!(BinaryTree::left_path(3).preorder().to_string(), "321");
        let mid = BinaryTree::compose(&BinaryTree::single(), &BinaryTree::single());
        assert_eq!(mid.preorder().to_string(), "213");
    }

    #[test]
    fn from_preorder_round_trip() {
        assert_eq!(t("1234"), BinaryTree::right_path(4));
        let m = t("213");
        assert_eq!(m.root(), Some(2));
        assert_eq!(m.left(2), Some(1));
        assert_eq!(m.right(2), Some(3));
        for n in 0..=8 {
            for tree in all_trees(n).iter() {
                assert_eq!(&BinaryTree::from_preorder(&tree.preorder()).unwrap(), tree);
            }
        }
    }

    #[test]
    fn from_preorder_rejects_231_with_witness() {
        match BinaryTree::parse("231") {
            Err(Error::Contains231(1, 2, 3)) => {}
            other => panic!("expected 231 witness, got {other:?}"),
        }
        assert!(BinaryTree::parse("35142").is_err());
    }

    #[test]
    fn rotate_examples() {
        let r = BinaryTree::right_path(3);
        let up = r.rotate(2, Dir::Up).unwrap();
        assert_eq!(up.to_string(), "213");
        assert_eq!(up.rotate(2, Dir::Down).unwrap(), r);
        assert!(matches!(
            r.rotate(1, Dir::Up),
            Err(Error::Rotation { reason: "vertex is the root", .. })
        ));
    }

    #[test]
    fn rotate_up_down_inverse_exhaustive() {
        for tree in all_trees(6).iter() {
            for j in 1..=6 {
                if let Ok(u) = tree.rotate(j, Dir::Up) {
                    #[cfg(debug_assertions)]
                    u.debug_validate();
                    assert_eq!(&u.rotate(j, Dir::Down).unwrap(), tree);
                }
            }
        }
    }

    #[test]
    fn slide_examples() {
        let r = BinaryTree::right_path(4);
        assert_eq!(r.slide(4, Dir::Up, 3).unwrap().to_string(), "4123");
        assert_eq!(r.slide(4, Dir::Up, 1).unwrap(), r.rotate(4, Dir::Up).unwrap());
        match r.slide(4, Dir::Up, 4) {
            Err(Error::Slide { step: 4, .. }) => {}
            other => panic!("expected failure at step 4, got {other:?}"),
        }
    }

    #[test]
    fn mirror_examples() {
        assert_eq!(BinaryTree::right_path(3).mirror(), BinaryTree::left_path(3));
        assert_eq!(t("213").mirror(), t("213"));
        for tree in all_trees(6).iter() {
            assert_eq!(&tree.mirror().mirror(), tree);
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(all_trees(0).len(), 1);
        assert!(all_trees(0)[0].is_empty());
        assert_eq!(all_trees(4).len(), 14);
        assert_eq!(enumerate_all(10).count(), 16796);
        assert_eq!(catalan(12), 208012);
    }

    #[test]
    fn enumeration_has_no_duplicates() {
        use std::collections::HashSet;
        for n in 0..=7 {
            let set: HashSet<_> = enumerate_all(n).collect();
            assert_eq!(set.len() as u64, catalan(n));
        }
    }

    #[test]
    fn paren_form_round_trip() {
        assert_eq!(t("213").to_paren(), "(())()");
        for tree in all_trees(6).iter() {
            assert_eq!(&BinaryTree::from_paren(&tree.to_paren()).unwrap(), tree);
        }
    }

    #[test]
    fn subtree_and_replace() {
        let tree = t("4123");
        let sub = tree.subtree(1);
        assert_eq!(sub.to_string(), "123");
        let repl = BinaryTree::left_path(3);
        let new = tree.replace_subtree(1, &repl).unwrap();
        assert_eq!(new.to_string(), "4321");
        assert_eq!(new.replace_subtree(3, &sub).unwrap(), tree);
    }
}
