//! Explicit bijections between avoider classes of Wilf-equivalent tree
//! patterns: replacing a subpattern behind a non-contiguous edge, moving it
//! along a contiguous left path, and three ways of moving it around a
//! contiguous two-edge path. Also the recurrence counting one specific
//! five-vertex class.

use crate::bijections::bits::{bits_from_tree, bits_to_tree, BitScheme};
use crate::error::{Error, Result};
use crate::pattern::{EdgeType, TreePattern};
use crate::tree::BinaryTree;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransformDir {
    Forward,
    Inverse,
}

/// Named size-preserving bijections between small avoider classes, used as
/// the inner map of the subpattern-replacement transform.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InnerBijection {
    /// Left paths (avoiding a non-contiguous right edge) to right paths.
    LeftRightPath,
    /// The bitstring composite carrying path trees to left-spine trees.
    Bits213To132,
}

impl InnerBijection {
    pub fn source(&self) -> TreePattern {
        match self {
            InnerBijection::LeftRightPath => TreePattern::parse("12:0").unwrap(),
            InnerBijection::Bits213To132 => TreePattern::parse("213:00").unwrap(),
        }
    }

    pub fn target(&self) -> TreePattern {
        match self {
            InnerBijection::LeftRightPath => TreePattern::parse("21:0").unwrap(),
            InnerBijection::Bits213To132 => TreePattern::parse("132:00").unwrap(),
        }
    }

    pub fn apply(&self, t: &BinaryTree, dir: TransformDir) -> Result<BinaryTree> {
        if t.is_empty() {
            return Ok(BinaryTree::empty());
        }
        match (self, dir) {
            (InnerBijection::LeftRightPath, TransformDir::Forward) => {
                if t.left_branch_len(t.root().unwrap()) != t.n() {
                    return Err(Error::Domain(format!("{t} is not a left path")));
                }
                Ok(BinaryTree::right_path(t.n()))
            }
            (InnerBijection::LeftRightPath, TransformDir::Inverse) => {
                if t.right_branch_len(t.root().unwrap()) != t.n() {
                    return Err(Error::Domain(format!("{t} is not a right path")));
                }
                Ok(BinaryTree::left_path(t.n()))
            }
            (InnerBijection::Bits213To132, TransformDir::Forward) => {
                let bits = bits_from_tree(t, BitScheme::S213)?;
                Ok(bits_to_tree(&bits, BitScheme::S132))
            }
            (InnerBijection::Bits213To132, TransformDir::Inverse) => {
                let bits = bits_from_tree(t, BitScheme::S132)?;
                Ok(bits_to_tree(&bits, BitScheme::S213))
            }
        }
    }
}

/// Attaches `inner`'s shape as the right subtree of `x` in `skeleton` (which
/// must have no right child there); skeleton edges become contiguous, the
/// attaching edge non-contiguous.
fn attach(skeleton: &BinaryTree, x: usize, inner: &TreePattern, to_right: bool) -> TreePattern {
    let ks = skeleton.n();
    let kp = inner.k();
    let n = ks + kp;
    debug_assert!(if to_right {
        skeleton.right(x).is_none()
    } else {
        skeleton.left(x).is_none()
    });
    // label maps: the attached block sits immediately after (before) x
    let map_s = |v: usize| -> usize {
        if to_right {
            if v <= x {
                v
            } else {
                v + kp
            }
        } else if v < x {
            v
        } else {
            v + kp
        }
    };
    let map_p = |v: usize| -> usize {
        if to_right {
            v + x
        } else {
            v + x - 1
        }
    };
    let mut parent = vec![0u32; n + 1];
    let mut left = vec![0u32; n + 1];
    let mut right = vec![0u32; n + 1];
    let mut edges: Vec<(usize, EdgeType)> = Vec::new();
    for v in 1..=ks {
        let m = map_s(v);
        if let Some(c) = skeleton.left(v) {
            left[m] = map_s(c) as u32;
            parent[map_s(c)] = m as u32;
            edges.push((map_s(c), EdgeType::Contiguous));
        }
        if let Some(c) = skeleton.right(v) {
            right[m] = map_s(c) as u32;
            parent[map_s(c)] = m as u32;
            edges.push((map_s(c), EdgeType::Contiguous));
        }
    }
    let pshape = inner.shape();
    for v in 1..=kp {
        let m = map_p(v);
        if let Some(c) = pshape.left(v) {
            left[m] = map_p(c) as u32;
            parent[map_p(c)] = m as u32;
            edges.push((map_p(c), inner.edge(c)));
        }
        if let Some(c) = pshape.right(v) {
            right[m] = map_p(c) as u32;
            parent[map_p(c)] = m as u32;
            edges.push((map_p(c), inner.edge(c)));
        }
    }
    let proot = map_p(pshape.root().unwrap());
    let xm = map_s(x);
    if to_right {
        right[xm] = proot as u32;
    } else {
        left[xm] = proot as u32;
    }
    parent[proot] = xm as u32;
    edges.push((proot, EdgeType::NonContiguous));
    let shape = {
        let pre = {
            // reconstruct via preorder of the assembled arrays
            let root = map_s(skeleton.root().unwrap());
            let mut out: Vec<u32> = Vec::with_capacity(n);
            let mut stack = vec![root];
            while let Some(v) = stack.pop() {
                out.push(v as u32);
                if right[v] != 0 {
                    stack.push(right[v] as usize);
                }
                if left[v] != 0 {
                    stack.push(left[v] as usize);
                }
            }
            crate::perm::Permutation::from_values(out).expect("assembly is a permutation")
        };
        BinaryTree::from_preorder(&pre).expect("assembly satisfies the search-tree property")
    };
    TreePattern::new(shape, &edges).expect("assembled edges are complete")
}

/// Configuration of one Wilf transform instance.
#[derive(Debug, Clone)]
pub enum WilfConfig {
    /// Replace the inner pattern attached below `x` of an all-contiguous
    /// skeleton by a Wilf-equivalent one, carried by the named bijection.
    Subtree {
        skeleton: BinaryTree,
        x: usize,
        inner: InnerBijection,
    },
    /// Move the attachment point of `inner` from the `s`-th to the
    /// `s_prime`-th vertex of a contiguous left path on `d` vertices.
    PathMove {
        d: usize,
        s: usize,
        s_prime: usize,
        inner: TreePattern,
        mirrored: bool,
    },
    /// Move `inner` from hanging left of the top of a right-left path to
    /// hanging left of the bottom of a left-right path.
    LMove1 { inner: TreePattern, mirrored: bool },
    /// Move `inner` from hanging right of the low leaf of a right-left path
    /// to hanging left of the left leaf of a left-right path.
    LMove2 { inner: TreePattern, mirrored: bool },
    /// Move `inner` between the leaf and the middle vertex of a right-left
    /// path, hanging right.
    LMove3 { inner: TreePattern, mirrored: bool },
}

impl WilfConfig {
    fn base_patterns(&self) -> (TreePattern, TreePattern) {
        match self {
            WilfConfig::Subtree { skeleton, x, inner } => (
                attach(skeleton, *x, &inner.source(), true),
                attach(skeleton, *x, &inner.target(), true),
            ),
            WilfConfig::PathMove {
                d, s, s_prime, inner, ..
            } => {
                let path = BinaryTree::left_path(*d);
                // the s-th vertex from the top of the left path has label d+1-s
                (
                    attach(&path, d + 1 - s, inner, true),
                    attach(&path, d + 1 - s_prime, inner, true),
                )
            }
            WilfConfig::LMove1 { inner, .. } => {
                let s = BinaryTree::parse("132").unwrap();
                let s2 = BinaryTree::parse("213").unwrap();
                (attach(&s, 1, inner, false), attach(&s2, 3, inner, false))
            }
            WilfConfig::LMove2 { inner, .. } => {
                let s = BinaryTree::parse("132").unwrap();
                let s2 = BinaryTree::parse("213").unwrap();
                (attach(&s, 2, inner, true), attach(&s2, 1, inner, false))
            }
            WilfConfig::LMove3 { inner, .. } => {
                let s = BinaryTree::parse("132").unwrap();
                (attach(&s, 2, inner, true), attach(&s, 3, inner, true))
            }
        }
    }

    fn mirrored(&self) -> bool {
        match self {
            WilfConfig::Subtree { .. } => false,
            WilfConfig::PathMove { mirrored, .. }
            | WilfConfig::LMove1 { mirrored, .. }
            | WilfConfig::LMove2 { mirrored, .. }
            | WilfConfig::LMove3 { mirrored, .. } => *mirrored,
        }
    }

    /// The pattern avoided by the transform's inputs.
    pub fn source_pattern(&self) -> TreePattern {
        let (q, _) = self.base_patterns();
        if self.mirrored() {
            q.mirror()
        } else {
            q
        }
    }

    /// The pattern avoided by the transform's outputs.
    pub fn target_pattern(&self) -> TreePattern {
        let (_, q) = self.base_patterns();
        if self.mirrored() {
            q.mirror()
        } else {
            q
        }
    }
}

/// Applies the configured bijection between the two avoider classes.
pub fn wilf_transform(
    t: &BinaryTree,
    cfg: &WilfConfig,
    dir: TransformDir,
) -> Result<BinaryTree> {
    let avoided = match dir {
        TransformDir::Forward => cfg.source_pattern(),
        TransformDir::Inverse => cfg.target_pattern(),
    };
    if avoided.contains(t) {
        return Err(Error::Domain(format!("tree {t} contains {avoided}")));
    }
    let input = if cfg.mirrored() { t.mirror() } else { t.clone() };
    let size = avoided.k();
    let out = match cfg {
        WilfConfig::Subtree { skeleton, x, inner } => {
            subtree_transform(&input, skeleton, *x, *inner, dir)?
        }
        WilfConfig::PathMove {
            d, s, s_prime, inner, ..
        } => {
            let (lo, hi) = (*s.min(s_prime), *s.max(s_prime));
            let flipped = s > s_prime;
            let effective = match (dir, flipped) {
                (TransformDir::Forward, false) | (TransformDir::Inverse, true) => {
                    TransformDir::Forward
                }
                _ => TransformDir::Inverse,
            };
            pathmove_rec(&input, *d, lo, hi, inner.k(), effective)
        }
        WilfConfig::LMove1 { .. } => lmove1_rec(&input, size, dir),
        WilfConfig::LMove2 { .. } => lmove2_rec(&input, size, dir),
        WilfConfig::LMove3 { .. } => lmove3_rec(&input, size, dir),
    };
    Ok(if cfg.mirrored() { out.mirror() } else { out })
}

fn subtree_transform(
    t: &BinaryTree,
    skeleton: &BinaryTree,
    x: usize,
    inner: InnerBijection,
    dir: TransformDir,
) -> Result<BinaryTree> {
    let n = t.n();
    let sroot = skeleton.root().unwrap();
    let mut xs: Vec<usize> = Vec::new();
    for v in 1..=n {
        if let Some(img) = rigid_image(skeleton, t, sroot, v, x) {
            xs.push(img);
        }
    }
    // keep the occurrences not inside the right subtree of another one
    let in_right_subtree = |outer: usize, v: usize| -> bool {
        match t.right(outer) {
            Some(r) => {
                let (lo, hi) = t.subtree_span(r);
                lo <= v && v <= hi
            }
            None => false,
        }
    };
    let tops: Vec<usize> = xs
        .iter()
        .copied()
        .filter(|&v| !xs.iter().any(|&u| u != v && in_right_subtree(u, v)))
        .collect();
    let mut out = t.clone();
    for &v in &tops {
        if let Some(r) = t.right(v) {
            let sub = t.subtree(r);
            let replaced = inner.apply(&sub, dir)?;
            out = out.replace_subtree(
                out.right(v).expect("right subtree still present"),
                &replaced,
            )?;
        }
    }
    Ok(out)
}

/// Image of `x` under the unique rigid embedding of the whole skeleton at
/// host vertex `hv`, if that embedding exists.
fn rigid_image(
    skeleton: &BinaryTree,
    host: &BinaryTree,
    sv: usize,
    hv: usize,
    x: usize,
) -> Option<usize> {
    fn embeds(skeleton: &BinaryTree, host: &BinaryTree, sv: usize, hv: usize) -> bool {
        let lc = match skeleton.left(sv) {
            None => true,
            Some(sc) => match host.left(hv) {
                Some(hc) => embeds(skeleton, host, sc, hc),
                None => false,
            },
        };
        if !lc {
            return false;
        }
        match skeleton.right(sv) {
            None => true,
            Some(sc) => match host.right(hv) {
                Some(hc) => embeds(skeleton, host, sc, hc),
                None => false,
            },
        }
    }
    fn locate(skeleton: &BinaryTree, host: &BinaryTree, sv: usize, hv: usize, x: usize) -> usize {
        if sv == x {
            return hv;
        }
        if let Some(sc) = skeleton.left(sv) {
            let (lo, hi) = skeleton.subtree_span(sc);
            if lo <= x && x <= hi {
                return locate(skeleton, host, sc, host.left(hv).unwrap(), x);
            }
        }
        let sc = skeleton.right(sv).unwrap();
        locate(skeleton, host, sc, host.right(hv).unwrap(), x)
    }
    if embeds(skeleton, host, sv, hv) {
        Some(locate(skeleton, host, sv, hv, x))
    } else {
        None
    }
}

/// Left spine of `t` with each vertex's right subtree, top to bottom.
fn left_spine_subs(t: &BinaryTree) -> Vec<BinaryTree> {
    let spine = t.left_branch(t.root().unwrap());
    spine
        .iter()
        .map(|&v| match t.right(v) {
            Some(w) => t.subtree(w),
            None => BinaryTree::empty(),
        })
        .collect()
}

/// Right spine of `t` with each vertex's left subtree, top to bottom.
fn right_spine_subs(t: &BinaryTree) -> Vec<BinaryTree> {
    let spine = t.right_branch(t.root().unwrap());
    spine
        .iter()
        .map(|&v| match t.left(v) {
            Some(w) => t.subtree(w),
            None => BinaryTree::empty(),
        })
        .collect()
}

fn rebuild_left_spine(subs: &[BinaryTree]) -> BinaryTree {
    let mut acc = BinaryTree::empty();
    for sub in subs.iter().rev() {
        acc = BinaryTree::compose(&acc, sub);
    }
    acc
}

fn rebuild_right_spine(subs: &[BinaryTree]) -> BinaryTree {
    let mut acc = BinaryTree::empty();
    for sub in subs.iter().rev() {
        acc = BinaryTree::compose(sub, &acc);
    }
    acc
}

fn pathmove_rec(
    t: &BinaryTree,
    d: usize,
    s: usize,
    s_prime: usize,
    inner_k: usize,
    dir: TransformDir,
) -> BinaryTree {
    let n = t.n();
    let size = d + inner_k;
    if n < size {
        return t.clone();
    }
    let mut subs = left_spine_subs(t);
    let b = subs.len();
    if b < d {
        for sub in subs.iter_mut() {
            *sub = pathmove_rec(sub, d, s, s_prime, inner_k, dir);
        }
        return rebuild_left_spine(&subs);
    }
    let delta = s_prime - s;
    // positions (1-based) that cannot host the attachment vertex and whose
    // subtrees therefore carry the recursion
    let special = |base: usize, i: usize| -> bool { i <= base - 1 || i >= b - d + base + 1 };
    match dir {
        TransformDir::Forward => {
            for i in 1..=b {
                if special(s, i) {
                    subs[i - 1] = pathmove_rec(&subs[i - 1], d, s, s_prime, inner_k, dir);
                }
            }
            let mut rotated = vec![BinaryTree::empty(); b];
            for i in 0..b {
                rotated[(i + delta) % b] = subs[i].clone();
            }
            rebuild_left_spine(&rotated)
        }
        TransformDir::Inverse => {
            let mut rotated = vec![BinaryTree::empty(); b];
            for i in 0..b {
                rotated[(i + b - delta) % b] = subs[i].clone();
            }
            for i in 1..=b {
                if special(s, i) {
                    rotated[i - 1] = pathmove_rec(&rotated[i - 1], d, s, s_prime, inner_k, dir);
                }
            }
            rebuild_left_spine(&rotated)
        }
    }
}

/// Indices of the last member of every maximal run of nonempty entries.
fn run_lasts(subs: &[BinaryTree]) -> Vec<usize> {
    let mut out = Vec::new();
    for i in 0..subs.len() {
        if !subs[i].is_empty() && (i + 1 == subs.len() || subs[i + 1].is_empty()) {
            out.push(i);
        }
    }
    out
}

fn lmove1_rec(t: &BinaryTree, size: usize, dir: TransformDir) -> BinaryTree {
    if t.n() < size {
        return t.clone();
    }
    let mut subs = right_spine_subs(t);
    match dir {
        TransformDir::Forward => {
            for i in run_lasts(&subs) {
                subs[i] = lmove1_rec(&subs[i], size, dir);
            }
            subs.reverse();
        }
        TransformDir::Inverse => {
            subs.reverse();
            for i in run_lasts(&subs) {
                subs[i] = lmove1_rec(&subs[i], size, dir);
            }
        }
    }
    rebuild_right_spine(&subs)
}

fn lmove2_rec(t: &BinaryTree, size: usize, dir: TransformDir) -> BinaryTree {
    if t.n() < size {
        return t.clone();
    }
    let mut subs = right_spine_subs(t);
    match dir {
        TransformDir::Forward => {
            for (i, sub) in subs.iter_mut().enumerate() {
                if i == 0 {
                    *sub = lmove2_rec(sub, size, dir);
                } else if !sub.is_empty() {
                    let (l, r) = sub.split().unwrap();
                    *sub = BinaryTree::compose(&r, &lmove2_rec(&l, size, dir));
                }
            }
            subs.reverse();
        }
        TransformDir::Inverse => {
            subs.reverse();
            for (i, sub) in subs.iter_mut().enumerate() {
                if i == 0 {
                    *sub = lmove2_rec(sub, size, dir);
                } else if !sub.is_empty() {
                    let (l, r) = sub.split().unwrap();
                    *sub = BinaryTree::compose(&lmove2_rec(&r, size, dir), &l);
                }
            }
        }
    }
    rebuild_right_spine(&subs)
}

fn lmove3_rec(t: &BinaryTree, size: usize, dir: TransformDir) -> BinaryTree {
    if t.n() < size {
        return t.clone();
    }
    match dir {
        TransformDir::Forward => {
            let subs = right_spine_subs(t);
            fn chain(subs: &[BinaryTree], size: usize) -> BinaryTree {
                let Some((first, rest)) = subs.split_first() else {
                    return BinaryTree::empty();
                };
                if first.is_empty() {
                    BinaryTree::compose(&BinaryTree::empty(), &chain(rest, size))
                } else {
                    let (l, r) = first.split().unwrap();
                    let u = BinaryTree::compose(
                        &lmove3_rec(&l, size, TransformDir::Forward),
                        &chain(rest, size),
                    );
                    BinaryTree::compose(&u, &r)
                }
            }
            BinaryTree::compose(&lmove3_rec(&subs[0], size, dir), &chain(&subs[1..], size))
        }
        TransformDir::Inverse => {
            fn unchain(x: &BinaryTree, size: usize) -> BinaryTree {
                if x.is_empty() {
                    return BinaryTree::empty();
                }
                let (xl, xr) = x.split().unwrap();
                if xl.is_empty() {
                    BinaryTree::compose(&BinaryTree::empty(), &unchain(&xr, size))
                } else {
                    let (ul, ur) = xl.split().unwrap();
                    let a = BinaryTree::compose(
                        &lmove3_rec(&ul, size, TransformDir::Inverse),
                        &xr,
                    );
                    BinaryTree::compose(&a, &unchain(&ur, size))
                }
            }
            let (a1, tail) = t.split().unwrap();
            BinaryTree::compose(
                &lmove3_rec(&a1, size, TransformDir::Inverse),
                &unchain(&tail, size),
            )
        }
    }
}

/// Terms `t_0..=t_n_max` of the recurrence counting trees that avoid the
/// five-vertex pattern with a contiguous top edge over a doubled right arm:
/// `t_{n+1} = 2 t_n - 1 + sum t_p t_{n-1-p}`.
pub fn recurrence_a176677(n_max: usize) -> Vec<u64> {
    let mut t = vec![1u64; (n_max + 1).max(2)];
    for n in 1..n_max.max(1) {
        let conv: u64 = (0..n).map(|p| t[p] * t[n - 1 - p]).sum();
        t[n + 1] = 2 * t[n] - 1 + conv;
    }
    t.truncate(n_max + 1);
    t
}

/// The preset configurations exercised by the acceptance suite, one per
/// transform family.
pub fn preset_configs() -> Vec<(&'static str, WilfConfig)> {
    let e0 = TreePattern::parse("12:0").unwrap();
    let e0l = TreePattern::parse("21:0").unwrap();
    let single = TreePattern::parse("1:").unwrap();
    vec![
        (
            "subtree",
            WilfConfig::Subtree {
                skeleton: BinaryTree::right_path(2),
                x: 2,
                inner: InnerBijection::LeftRightPath,
            },
        ),
        (
            "subtree-bits",
            WilfConfig::Subtree {
                skeleton: BinaryTree::single(),
                x: 1,
                inner: InnerBijection::Bits213To132,
            },
        ),
        (
            "pathmove",
            WilfConfig::PathMove {
                d: 3,
                s: 2,
                s_prime: 3,
                inner: single,
                mirrored: true,
            },
        ),
        (
            "lmove1",
            WilfConfig::LMove1 {
                inner: e0.clone(),
                mirrored: false,
            },
        ),
        (
            "lmove2",
            WilfConfig::LMove2 {
                inner: e0l,
                mirrored: false,
            },
        ),
        (
            "lmove3",
            WilfConfig::LMove3 {
                inner: e0,
                mirrored: false,
            },
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::avoiders;
    use std::collections::HashSet;

    #[test]
    fn preset_patterns_match_expected_classes() {
        let cfgs: std::collections::HashMap<_, _> = preset_configs().into_iter().collect();
        let c = |n: &str| cfgs.get(n).unwrap();
        assert_eq!(c("subtree").source_pattern().compact(), "1234:100");
        assert_eq!(c("subtree").target_pattern().compact(), "1243:100");
        assert_eq!(c("subtree-bits").source_pattern().compact(), "1324:000");
        assert_eq!(c("subtree-bits").target_pattern().compact(), "1243:000");
        assert_eq!(c("pathmove").source_pattern().compact(), "1324:101");
        assert_eq!(c("pathmove").target_pattern().compact(), "1243:110");
        assert_eq!(c("lmove1").source_pattern().compact(), "31254:0011");
        assert_eq!(c("lmove1").target_pattern().compact(), "21534:1100");
        assert_eq!(c("lmove2").source_pattern().compact(), "15243:1100");
        assert_eq!(c("lmove2").target_pattern().compact(), "43215:1001");
        assert_eq!(c("lmove3").source_pattern().compact(), "15234:1100");
        assert_eq!(c("lmove3").target_pattern().compact(), "13245:1100");
    }

    #[test]
    fn transforms_are_bijections_small() {
        for (name, cfg) in preset_configs() {
            let q = cfg.source_pattern();
            let q2 = cfg.target_pattern();
            for n in 0..=7 {
                let dom = avoiders(n, &[q.clone()]);
                let img_want: HashSet<BinaryTree> =
                    avoiders(n, &[q2.clone()]).into_iter().collect();
                let mut img = HashSet::new();
                for t in &dom {
                    let u = wilf_transform(t, &cfg, TransformDir::Forward)
                        .unwrap_or_else(|e| panic!("{name} failed on {t}: {e}"));
                    assert!(
                        img_want.contains(&u),
                        "{name}: image {u} of {t} contains {q2} (n={n})"
                    );
                    assert!(img.insert(u.clone()), "{name}: not injective at {t}");
                    let back = wilf_transform(&u, &cfg, TransformDir::Inverse).unwrap();
                    assert_eq!(back, *t, "{name}: round trip failed at {t} -> {u}");
                }
                assert_eq!(img.len(), img_want.len(), "{name} not onto at n={n}");
            }
        }
    }

    #[test]
    fn small_inputs_are_fixed() {
        let (_, cfg) = preset_configs().remove(2);
        let t = BinaryTree::parse("213").unwrap();
        assert_eq!(wilf_transform(&t, &cfg, TransformDir::Forward).unwrap(), t);
    }

    #[test]
    fn rejects_pattern_containing_input() {
        let cfgs = preset_configs();
        let (_, cfg) = &cfgs[0];
        // the right path contains 1234:100
        let t = BinaryTree::right_path(5);
        assert!(wilf_transform(&t, cfg, TransformDir::Forward).is_err());
    }

    #[test]
    fn recurrence_values() {
        let t = recurrence_a176677(12);
        assert_eq!(t[0], 1);
        assert_eq!(t[3], 5);
        assert_eq!(
            &t[1..=12],
            &[1, 2, 5, 14, 41, 123, 375, 1158, 3615, 11393, 36209, 115940]
        );
    }
}
