//! Tree patterns: a pattern tree plus a per-edge annotation saying whether
//! the edge must be realized as a direct child (contiguous), as a descendant
//! in the correct direction (non-contiguous), or as a descendant along a
//! single branch (the intermediate "branch" kind).

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::tree::{all_trees, BinaryTree};

/// Constraint attached to the edge from a vertex to its parent, ordered by
/// strength: a contiguous edge is the hardest to satisfy, so avoider sets
/// grow along this order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeType {
    NonContiguous,
    Branch,
    Contiguous,
}

impl EdgeType {
    pub fn symbol(self) -> char {
        match self {
            EdgeType::NonContiguous => '0',
            EdgeType::Branch => 'h',
            EdgeType::Contiguous => '1',
        }
    }
}

/// A tree pattern `(P, e)`: a shape on `k >= 1` vertices and an edge type for
/// every non-root vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TreePattern {
    shape: BinaryTree,
    /// Indexed by vertex; the root's slot is unused.
    e: Vec<EdgeType>,
}

impl TreePattern {
    pub fn new(shape: BinaryTree, edges: &[(usize, EdgeType)]) -> Result<Self> {
        let k = shape.n();
        if k == 0 {
            return Err(Error::PatternSyntax("pattern must be nonempty".into()));
        }
        if k > 60 {
            return Err(Error::PatternSyntax("patterns above 60 vertices are not supported".into()));
        }
        let root = shape.root().unwrap();
        let mut e = vec![EdgeType::NonContiguous; k + 1];
        let mut covered = vec![false; k + 1];
        for &(v, ty) in edges {
            shape.check_vertex(v)?;
            if v == root {
                return Err(Error::PatternSyntax("the root has no parent edge".into()));
            }
            e[v] = ty;
            covered[v] = true;
        }
        for v in 1..=k {
            if v != root && !covered[v] {
                return Err(Error::PatternSyntax(format!("no edge type for vertex {v}")));
            }
        }
        Ok(TreePattern { shape, e })
    }

    /// Builds a pattern from a shape and the edge string in preorder
    /// (one symbol per non-root vertex, in the order they appear in the
    /// preorder permutation).
    pub fn from_shape_and_edges(shape: BinaryTree, edge_syms: &[EdgeType]) -> Result<Self> {
        let k = shape.n();
        if edge_syms.len() + 1 != k {
            return Err(Error::EdgeLength {
                expected: k.saturating_sub(1),
                got: edge_syms.len(),
            });
        }
        let tau = shape.preorder();
        let edges: Vec<(usize, EdgeType)> = tau.values()[1..]
            .iter()
            .zip(edge_syms)
            .map(|(&v, &ty)| (v as usize, ty))
            .collect();
        Self::new(shape, &edges)
    }

    /// Parses the compact form `<preorder>:<edges>`, e.g. `1243:100`.
    /// Edge symbols are `0`, `1`, `h` and `-`; a `-` is sugar for `0` and is
    /// only accepted where both values provably give the same avoider set.
    pub fn parse(text: &str) -> Result<Self> {
        let (pre, edges) = text
            .split_once(':')
            .ok_or_else(|| Error::PatternSyntax(format!("expected <preorder>:<edges>, got {text:?}")))?;
        let tau = Permutation::parse(pre)?;
        if tau.is_empty() {
            return Err(Error::PatternSyntax("pattern must be nonempty".into()));
        }
        let shape = BinaryTree::from_preorder(&tau)?;
        let k = shape.n();
        let syms: Vec<char> = edges.trim().chars().collect();
        if syms.len() + 1 != k {
            return Err(Error::EdgeLength {
                expected: k - 1,
                got: syms.len(),
            });
        }
        let mut edge_syms = Vec::with_capacity(k.saturating_sub(1));
        let mut hyphens = Vec::new();
        for (i, c) in syms.iter().enumerate() {
            let ty = match c {
                '0' => EdgeType::NonContiguous,
                '1' => EdgeType::Contiguous,
                'h' => EdgeType::Branch,
                '-' => {
                    hyphens.push(tau.values()[i + 1] as usize);
                    EdgeType::NonContiguous
                }
                other => {
                    return Err(Error::PatternSyntax(format!("bad edge symbol {other:?}")))
                }
            };
            edge_syms.push(ty);
        }
        let pat = Self::from_shape_and_edges(shape, &edge_syms)?;
        pat.certify_hyphens(&hyphens)?;
        Ok(pat)
    }

    /// Checks that every `0/1` assignment of the given vertices yields the
    /// same avoider set as the base pattern, via certified single-edge flips.
    fn certify_hyphens(&self, hyphens: &[usize]) -> Result<()> {
        if hyphens.is_empty() {
            return Ok(());
        }
        let k = self.k();
        let flippable: Vec<usize> = (1..=k)
            .filter(|&v| Some(v) != self.shape.root() && self.e[v] != EdgeType::Branch)
            .collect();
        if flippable.len() > 16 {
            return Err(Error::PatternSyntax(
                "'-' certification is limited to patterns with at most 17 vertices".into(),
            ));
        }
        let class = self.equality_class(&flippable);
        let base = self.clone();
        // every subcube member must be provably equal to the base
        let mut targets = vec![base];
        for &v in hyphens {
            let mut next = Vec::new();
            for pat in &targets {
                next.push(pat.clone());
                let mut flipped = pat.clone();
                flipped.e[v] = EdgeType::Contiguous;
                next.push(flipped);
            }
            targets = next;
        }
        for t in &targets {
            if !class.contains(&t.edge_string()) {
                // report the first hyphen vertex that is not certified alone
                for &v in hyphens {
                    let mut flipped = self.clone();
                    flipped.e[v] = EdgeType::Contiguous;
                    if !class.contains(&flipped.edge_string()) {
                        return Err(Error::NotDontCare { vertex: v });
                    }
                }
                return Err(Error::NotDontCare { vertex: hyphens[0] });
            }
        }
        Ok(())
    }

    /// All edge strings reachable from this pattern by certified flips (in
    /// both directions), restricted to flipping the given vertices.
    pub(crate) fn equality_class(&self, flippable: &[usize]) -> HashSet<String> {
        let mut seen = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(self.edge_string());
        queue.push_back(self.clone());
        while let Some(pat) = queue.pop_front() {
            let dc = pat.dont_care_edges();
            for &v in flippable {
                if pat.e[v] == EdgeType::NonContiguous && dc.contains(&v) {
                    let mut next = pat.clone();
                    next.e[v] = EdgeType::Contiguous;
                    if seen.insert(next.edge_string()) {
                        queue.push_back(next.clone());
                    }
                }
            }
            // also walk backwards: a contiguous edge may come from a certified
            // flip of the corresponding non-contiguous pattern
            for &v in flippable {
                if pat.e[v] == EdgeType::Contiguous {
                    let mut prev = pat.clone();
                    prev.e[v] = EdgeType::NonContiguous;
                    if prev.dont_care_edges().contains(&v) && seen.insert(prev.edge_string()) {
                        queue.push_back(prev.clone());
                    }
                }
            }
        }
        seen
    }

    pub fn k(&self) -> usize {
        self.shape.n()
    }

    pub fn shape(&self) -> &BinaryTree {
        &self.shape
    }

    pub fn edge(&self, v: usize) -> EdgeType {
        debug_assert!(Some(v) != self.shape.root());
        self.e[v]
    }

    pub fn with_edge(&self, v: usize, ty: EdgeType) -> Result<Self> {
        self.shape.check_vertex(v)?;
        if Some(v) == self.shape.root() {
            return Err(Error::PatternSyntax("the root has no parent edge".into()));
        }
        let mut p = self.clone();
        p.e[v] = ty;
        Ok(p)
    }

    /// Edge symbols in preorder, e.g. `"100"`.
    pub fn edge_string(&self) -> String {
        let tau = self.shape.preorder();
        tau.values()[1..]
            .iter()
            .map(|&v| self.e[v as usize].symbol())
            .collect()
    }

    /// `"<preorder>:<edges>"`.
    pub fn compact(&self) -> String {
        format!("{}:{}", self.shape.preorder(), self.edge_string())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "preorder": self.shape.preorder().values(),
            "e": self.edge_string(),
        })
    }

    /// Mirrors the shape and transports the edge types. An involution.
    pub fn mirror(&self) -> Self {
        let k = self.k();
        let shape = self.shape.mirror();
        let mut e = vec![EdgeType::NonContiguous; k + 1];
        for v in 1..=k {
            if Some(v) != self.shape.root() {
                e[k + 1 - v] = self.e[v];
            }
        }
        TreePattern { shape, e }
    }

    /// True when `host` contains this pattern. Bottom-up dynamic programming
    /// with one bitmask per host vertex for "contained here", "contained at
    /// this root" and the two branch-restricted variants.
    pub fn contains(&self, host: &BinaryTree) -> bool {
        let mut scratch = ContainScratch::default();
        self.contains_with(host, &mut scratch)
    }

    pub fn contains_with(&self, host: &BinaryTree, scratch: &mut ContainScratch) -> bool {
        host.postorder_into(&mut scratch.post);
        self.contains_post(host, scratch)
    }

    /// Variant that reuses a previously computed postorder in `scratch.post`.
    pub fn contains_post(&self, host: &BinaryTree, scratch: &mut ContainScratch) -> bool {
        let n = host.n();
        if n == 0 {
            return false;
        }
        let k = self.k();
        if k > n {
            return false;
        }
        scratch.resize(n);
        let proot = self.shape.root().unwrap();
        let pat_post = self.shape.postorder();
        let at = &mut scratch.at;
        let inn = &mut scratch.inn;
        let bl = &mut scratch.bl;
        let br = &mut scratch.br;
        for idx in 0..scratch.post.len() {
            let v = scratch.post[idx] as usize;
            let (vl, vr) = (host.left(v), host.right(v));
            let mut at_v = 0u64;
            for &pu in &pat_post {
                let u = pu as usize;
                let mut ok = true;
                for left_side in [true, false] {
                    let (pchild, hchild) = if left_side {
                        (self.shape.left(u), vl)
                    } else {
                        (self.shape.right(u), vr)
                    };
                    let Some(a) = pchild else { continue };
                    let bit = 1u64 << (a - 1);
                    let Some(w) = hchild else {
                        ok = false;
                        break;
                    };
                    let sat = match self.e[a] {
                        EdgeType::Contiguous => at[w] & bit != 0,
                        EdgeType::NonContiguous => inn[w] & bit != 0,
                        EdgeType::Branch if left_side => bl[w] & bit != 0,
                        EdgeType::Branch => br[w] & bit != 0,
                    };
                    if !sat {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    at_v |= 1u64 << (u - 1);
                }
            }
            let in_l = vl.map_or(0, |w| inn[w]);
            let in_r = vr.map_or(0, |w| inn[w]);
            at[v] = at_v;
            inn[v] = at_v | in_l | in_r;
            bl[v] = at_v | vl.map_or(0, |w| bl[w]);
            br[v] = at_v | vr.map_or(0, |w| br[w]);
        }
        let root = host.root().unwrap();
        inn[root] & (1u64 << (proot - 1)) != 0
    }

    /// Independent recursive matcher without memoization; exponential in the
    /// worst case but fine at desk scale. Used to validate `contains`.
    pub fn contains_oracle(&self, host: &BinaryTree) -> bool {
        if host.is_empty() {
            return false;
        }
        let proot = self.shape.root().unwrap();
        (1..=host.n()).any(|v| self.occurs_at(host, v, proot))
    }

    fn occurs_at(&self, host: &BinaryTree, v: usize, u: usize) -> bool {
        for (pchild, hchild, left_side) in [
            (self.shape.left(u), host.left(v), true),
            (self.shape.right(u), host.right(v), false),
        ] {
            let Some(a) = pchild else { continue };
            let Some(w) = hchild else { return false };
            let sat = match self.e[a] {
                EdgeType::Contiguous => self.occurs_at(host, w, a),
                EdgeType::NonContiguous => self.occurs_within(host, w, a),
                EdgeType::Branch => {
                    let mut cur = Some(w);
                    let mut found = false;
                    while let Some(x) = cur {
                        if self.occurs_at(host, x, a) {
                            found = true;
                            break;
                        }
                        cur = if left_side { host.left(x) } else { host.right(x) };
                    }
                    found
                }
            };
            if !sat {
                return false;
            }
        }
        true
    }

    fn occurs_within(&self, host: &BinaryTree, v: usize, u: usize) -> bool {
        if self.occurs_at(host, v, u) {
            return true;
        }
        host.left(v).is_some_and(|w| self.occurs_within(host, w, u))
            || host.right(v).is_some_and(|w| self.occurs_within(host, w, u))
    }

    /// Friendliness check; `Ok` means the greedy generators are exhaustive.
    pub fn friendly_violation(&self) -> std::result::Result<(), String> {
        let k = self.k();
        let root = self.shape.root().unwrap();
        if self.shape.parent(k).is_none() {
            return Err(format!("the largest vertex {k} is the root"));
        }
        if self.shape.left(k).is_none() {
            return Err(format!("the largest vertex {k} is a leaf"));
        }
        let branch = self.shape.right_branch(root);
        for &j in branch.iter().take(branch.len().saturating_sub(1)).skip(1) {
            if self.e[j] != EdgeType::NonContiguous {
                return Err(format!(
                    "edge to vertex {j} on the root's right branch is not non-contiguous"
                ));
            }
        }
        if matches!(self.e[k], EdgeType::Contiguous | EdgeType::Branch) {
            let c = self.shape.left(k).unwrap();
            if self.e[c] == EdgeType::Contiguous {
                return Err(format!(
                    "edge to {k} is contiguous but the edge to its left child {c} is too"
                ));
            }
        }
        Ok(())
    }

    pub fn is_friendly(&self) -> bool {
        self.friendly_violation().is_ok()
    }

    /// Vertices whose parent edge may flip between non-contiguous and
    /// contiguous without changing the avoider sets. Only vertices currently
    /// marked non-contiguous are reported; branch edges never qualify.
    pub fn dont_care_edges(&self) -> BTreeSet<usize> {
        let k = self.k();
        let root = self.shape.root().unwrap();
        let is_contig = |v: usize| v != root && self.e[v] == EdgeType::Contiguous;
        let is_noncontig = |v: usize| v == root || self.e[v] == EdgeType::NonContiguous;

        // descendants reachable along contiguous left (right) edges
        let chain_down = |start: usize, left: bool| -> Vec<usize> {
            let mut out = vec![start];
            let mut cur = start;
            loop {
                let next = if left {
                    self.shape.left(cur)
                } else {
                    self.shape.right(cur)
                };
                match next {
                    Some(c) if is_contig(c) => {
                        out.push(c);
                        cur = c;
                    }
                    _ => break,
                }
            }
            out
        };
        // ancestors that reach `start` along contiguous right (left) edges;
        // last element is the top vertex
        let chain_up = |start: usize, from_right: bool| -> Vec<usize> {
            let mut out = vec![start];
            let mut cur = start;
            loop {
                match self.shape.parent(cur) {
                    Some(p) => {
                        let is_side_child = if from_right {
                            self.shape.right(p) == Some(cur)
                        } else {
                            self.shape.left(p) == Some(cur)
                        };
                        if is_side_child && is_contig(cur) {
                            out.push(p);
                            cur = p;
                        } else {
                            break;
                        }
                    }
                    None => break,
                }
            }
            out
        };

        let mut out = BTreeSet::new();
        for i in 1..=k {
            if i == root || self.e[i] != EdgeType::NonContiguous {
                continue;
            }
            // leaves always qualify
            if self.shape.left(i).is_none() && self.shape.right(i).is_none() {
                out.insert(i);
                continue;
            }
            let p = self.shape.parent(i).unwrap();
            // i has a left child and is a right child: slide along either the
            // contiguous right chain above p or the contiguous left chain
            // below i, whichever is trivial.
            if self.shape.left(i).is_some() && self.shape.right(p) == Some(i) {
                let a_r = chain_up(p, true);
                let b_l = chain_down(i, true);
                let top = *a_r.last().unwrap();
                if (a_r.len() == 1 || b_l.len() == 1)
                    && a_r.iter().all(|&j| self.shape.left(j).is_none())
                    && b_l.iter().all(|&j| self.shape.right(j).is_none())
                    && is_noncontig(top)
                {
                    out.insert(i);
                    continue;
                }
            }
            // the mirrored condition
            if self.shape.right(i).is_some() && self.shape.left(p) == Some(i) {
                let a_l = chain_up(p, false);
                let b_r = chain_down(i, false);
                let top = *a_l.last().unwrap();
                if (a_l.len() == 1 || b_r.len() == 1)
                    && a_l.iter().all(|&j| self.shape.right(j).is_none())
                    && b_r.iter().all(|&j| self.shape.left(j).is_none())
                    && is_noncontig(top)
                {
                    out.insert(i);
                }
            }
        }
        out
    }
}

impl fmt::Display for TreePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.compact())
    }
}

impl fmt::Debug for TreePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TreePattern({})", self.compact())
    }
}

/// Reusable buffers for the containment DP.
#[derive(Default)]
pub struct ContainScratch {
    pub post: Vec<u32>,
    at: Vec<u64>,
    inn: Vec<u64>,
    bl: Vec<u64>,
    br: Vec<u64>,
}

impl ContainScratch {
    fn resize(&mut self, n: usize) {
        if self.at.len() < n + 1 {
            self.at.resize(n + 1, 0);
            self.inn.resize(n + 1, 0);
            self.bl.resize(n + 1, 0);
            self.br.resize(n + 1, 0);
        }
    }
}

/// Brute-force filter of all trees of `T_n` that avoid every given pattern.
/// The reference oracle backing the generation module.
pub fn avoiders(n: usize, pats: &[TreePattern]) -> Vec<BinaryTree> {
    let mut scratch = ContainScratch::default();
    all_trees(n)
        .iter()
        .filter(|t| {
            scratch.post.clear();
            t.postorder_into(&mut scratch.post);
            pats.iter().all(|p| !p.contains_post(t, &mut scratch))
        })
        .cloned()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pat(s: &str) -> TreePattern {
        TreePattern::parse(s).unwrap()
    }

    fn host(s: &str) -> BinaryTree {
        BinaryTree::parse(s).unwrap()
    }

    #[test]
    fn parse_examples() {
        let p = pat("123:1-");
        assert_eq!(p.edge(2), EdgeType::Contiguous);
        assert_eq!(p.edge(3), EdgeType::NonContiguous);
        let q = pat("1243:100");
        assert_eq!(q.shape().right(1), Some(2));
        assert_eq!(q.shape().right(2), Some(4));
        assert_eq!(q.shape().left(4), Some(3));
        assert_eq!(q.edge(2), EdgeType::Contiguous);
        assert_eq!(q.edge(4), EdgeType::NonContiguous);
        assert_eq!(q.edge(3), EdgeType::NonContiguous);
        assert!(pat("132:1-").edge(2) == EdgeType::NonContiguous);
        match TreePattern::parse("123:-1") {
            Err(Error::NotDontCare { vertex: 2 }) => {}
            other => panic!("expected NotDontCare for vertex 2, got {other:?}"),
        }
        assert!(TreePattern::parse("231:00").is_err());
        assert!(TreePattern::parse("123:0").is_err());
    }

    #[test]
    fn contains_examples() {
        assert!(pat("123:11").contains(&host("123")));
        let lp = BinaryTree::left_path(5);
        assert!(!pat("12:0").contains(&lp));
        assert!(!pat("12:1").contains(&lp));
        // the tree reached by the first slide of the generation example
        // avoids the 132 family but still contains the right-path patterns
        let h = host("4123");
        assert!(!pat("132:11").contains(&h));
        assert!(!pat("132:00").contains(&h));
        assert!(pat("123:11").contains(&h));
        // a host distinguishing the contiguous and non-contiguous right path
        let g = host("1423");
        assert!(pat("123:00").contains(&g));
        assert!(!pat("123:11").contains(&g));
        // single-vertex pattern occurs in every nonempty tree
        assert!(pat("1:").contains(&host("1")));
        assert!(!pat("1:").contains(&BinaryTree::empty()));
    }

    #[test]
    fn oracle_agrees_with_dp() {
        let pats: Vec<TreePattern> = [
            "12:0", "12:1", "21:1", "123:10", "123:00", "132:01", "132:11", "213:10", "321:01",
            "1243:100", "1324:101", "2143:010",
        ]
        .iter()
        .map(|s| pat(s))
        .collect();
        let branchy: Vec<TreePattern> = ["123:h0", "132:1h", "1243:h1h", "213:hh"]
            .iter()
            .map(|s| pat(s))
            .collect();
        for n in 0..=7 {
            for t in all_trees(n).iter() {
                for p in pats.iter().chain(branchy.iter()) {
                    assert_eq!(
                        p.contains(t),
                        p.contains_oracle(t),
                        "disagree on host {t} pattern {p}"
                    );
                }
            }
        }
    }

    #[test]
    fn avoider_counts_from_tables() {
        assert_eq!(avoiders(4, &[pat("123:0-")]).len(), 8);
        assert_eq!(avoiders(4, &[]).len(), 14);
        assert_eq!(avoiders(6, &[pat("1243:100")]).len(), 97);
    }

    #[test]
    fn friendly_examples() {
        assert!(pat("132:10").is_friendly());
        assert!(!pat("132:11").is_friendly());
        assert!(!pat("123:11").is_friendly());
        assert!(pat("1432:011").is_friendly());
        assert!(!pat("1:").is_friendly());
    }

    #[test]
    fn dont_care_examples() {
        let d: Vec<usize> = pat("1243:000").dont_care_edges().into_iter().collect();
        assert_eq!(d, vec![3, 4]);
        let d2: Vec<usize> = pat("123:10").dont_care_edges().into_iter().collect();
        assert_eq!(d2, vec![3]);
        // left path: only the bottom leaf qualifies, the top edge matters
        let d3: Vec<usize> = pat("321:00").dont_care_edges().into_iter().collect();
        assert_eq!(d3, vec![1]);
    }

    #[test]
    fn dont_care_flips_preserve_avoiders() {
        // spot check the classifier against brute force on small patterns
        for s in ["123:00", "132:00", "1243:000", "1423:000", "321:00"] {
            let base = pat(s);
            for v in base.dont_care_edges() {
                let flipped = base.with_edge(v, EdgeType::Contiguous).unwrap();
                for n in 0..=8 {
                    assert_eq!(
                        avoiders(n, &[base.clone()]),
                        avoiders(n, &[flipped.clone()]),
                        "flip of {v} in {s} changed the avoider set at n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn mirror_examples() {
        assert_eq!(pat("123:11").mirror().compact(), "321:11");
        let q = pat("1243:100");
        assert_eq!(q.mirror().compact(), "4312:100");
        assert_eq!(q.mirror().mirror(), q);
    }

    #[test]
    fn mirror_law_on_avoider_sets() {
        use std::collections::HashSet;
        for s in ["123:10", "1243:100", "132:01"] {
            let p = pat(s);
            let m = p.mirror();
            for n in 0..=7 {
                let lhs: HashSet<String> =
                    avoiders(n, &[m.clone()]).iter().map(|t| t.to_string()).collect();
                let rhs: HashSet<String> = avoiders(n, &[p.clone()])
                    .iter()
                    .map(|t| t.mirror().to_string())
                    .collect();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn monotone_in_edge_strength() {
        let weak = pat("123:00");
        let half = pat("123:h0");
        let strong = pat("123:10");
        for n in 0..=8 {
            let a: HashSet<String> = avoiders(n, &[weak.clone()]).iter().map(|t| t.to_string()).collect();
            let b: HashSet<String> = avoiders(n, &[half.clone()]).iter().map(|t| t.to_string()).collect();
            let c: HashSet<String> = avoiders(n, &[strong.clone()]).iter().map(|t| t.to_string()).collect();
            assert!(a.is_subset(&b));
            assert!(b.is_subset(&c));
        }
    }

    #[test]
    fn classic_notions_special_cases() {
        // e == 1 everywhere must agree with plain child-exact embedding and
        // e == 0 everywhere with the minor notion; both checked against tiny
        // independent matchers.
        fn rigid_at(h: &BinaryTree, p: &BinaryTree, v: usize, u: usize) -> bool {
            let lc = match (p.left(u), h.left(v)) {
                (None, _) => true,
                (Some(a), Some(w)) => rigid_at(h, p, w, a),
                (Some(_), None) => false,
            };
            let rc = match (p.right(u), h.right(v)) {
                (None, _) => true,
                (Some(a), Some(w)) => rigid_at(h, p, w, a),
                (Some(_), None) => false,
            };
            lc && rc
        }
        fn minor_at(h: &BinaryTree, p: &BinaryTree, v: usize, u: usize) -> bool {
            let side = |pc: Option<usize>, hc: Option<usize>| -> bool {
                let Some(a) = pc else { return true };
                let mut stack: Vec<usize> = hc.into_iter().collect();
                while let Some(w) = stack.pop() {
                    if minor_at(h, p, w, a) {
                        return true;
                    }
                    stack.extend(h.left(w));
                    stack.extend(h.right(w));
                }
                false
            };
            side(p.left(u), h.left(v)) && side(p.right(u), h.right(v))
        }
        for shape_pre in ["123", "132", "213", "1243"] {
            let shape = host(shape_pre);
            let k = shape.n();
            let ones = TreePattern::from_shape_and_edges(shape.clone(), &vec![EdgeType::Contiguous; k - 1]).unwrap();
            let zeros = TreePattern::from_shape_and_edges(shape.clone(), &vec![EdgeType::NonContiguous; k - 1]).unwrap();
            for n in 0..=7 {
                for t in all_trees(n).iter() {
                    let pr = shape.root().unwrap();
                    let rigid = (1..=n).any(|v| rigid_at(t, &shape, v, pr));
                    let minor = (1..=n).any(|v| minor_at(t, &shape, v, pr));
                    assert_eq!(ones.contains(t), rigid);
                    assert_eq!(zeros.contains(t), minor);
                }
            }
        }
    }
}
