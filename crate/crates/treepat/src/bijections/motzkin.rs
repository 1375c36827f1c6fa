//! Motzkin-type lattice paths and the bijections mapping pattern-avoiding
//! binary trees onto them.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::pattern::TreePattern;
use crate::tree::BinaryTree;

/// A single lattice step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    Up,
    Down,
    Flat,
    FlatLeft,
    FlatRight,
    /// Drop by `h >= 2`, used by paths with catastrophes.
    Drop(u8),
}

impl Step {
    pub fn rise(self) -> i32 {
        match self {
            Step::Up => 1,
            Step::Down => -1,
            Step::Flat | Step::FlatLeft | Step::FlatRight => 0,
            Step::Drop(h) => -(h as i32),
        }
    }
}

/// Which validity rules a path follows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flavor {
    /// U/D/F, never below the axis, ends at height 0.
    Plain,
    /// U/D/F, never below the axis, any end height.
    LeftFactor,
    /// U/D/F plus big drops that must end on the axis; ends at height 0.
    Catastrophes,
    /// U/D plus two colors of flat step; ends at height 0.
    TwoColored,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MotzkinPath {
    steps: Vec<Step>,
    flavor: Flavor,
}

impl MotzkinPath {
    pub fn new(steps: Vec<Step>, flavor: Flavor) -> Result<Self> {
        validate(&steps, flavor)?;
        Ok(MotzkinPath { steps, flavor })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn final_height(&self) -> i32 {
        self.steps.iter().map(|s| s.rise()).sum()
    }

    /// True when the step word occurs as a factor (consecutive substring).
    pub fn contains_factor(&self, word: &[Step]) -> bool {
        if word.is_empty() {
            return true;
        }
        self.steps.windows(word.len()).any(|w| w == word)
    }

    /// One token per step: `U`, `D`, `F`, `L`, `R`, `D<h>`.
    pub fn parse(text: &str, flavor: Flavor) -> Result<Self> {
        let mut steps = Vec::new();
        let bytes = text.trim().as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i] as char;
            i += 1;
            let step = match c {
                'U' => Step::Up,
                'F' => Step::Flat,
                'L' => Step::FlatLeft,
                'R' => Step::FlatRight,
                'D' => {
                    let mut h = 0usize;
                    let mut digits = 0;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        h = h * 10 + (bytes[i] - b'0') as usize;
                        i += 1;
                        digits += 1;
                    }
                    if digits == 0 {
                        Step::Down
                    } else if h >= 2 && h <= u8::MAX as usize {
                        Step::Drop(h as u8)
                    } else {
                        return Err(Error::InvalidInput(format!("bad drop height {h}")));
                    }
                }
                other => return Err(Error::InvalidInput(format!("bad step {other:?}"))),
            };
            steps.push(step);
        }
        Self::new(steps, flavor)
    }
}

fn validate(steps: &[Step], flavor: Flavor) -> Result<()> {
    let mut h = 0i32;
    for (i, s) in steps.iter().enumerate() {
        let allowed = match flavor {
            Flavor::Plain | Flavor::LeftFactor => {
                matches!(s, Step::Up | Step::Down | Step::Flat)
            }
            Flavor::Catastrophes => {
                matches!(s, Step::Up | Step::Down | Step::Flat | Step::Drop(_))
            }
            Flavor::TwoColored => {
                matches!(s, Step::Up | Step::Down | Step::FlatLeft | Step::FlatRight)
            }
        };
        if !allowed {
            return Err(Error::InvalidInput(format!(
                "step {s:?} not allowed in {flavor:?} paths"
            )));
        }
        h += s.rise();
        if h < 0 {
            return Err(Error::InvalidInput(format!(
                "path dips below the axis at step {}",
                i + 1
            )));
        }
        if let Step::Drop(_) = s {
            if h != 0 {
                return Err(Error::InvalidInput(format!(
                    "drop at step {} does not end on the axis",
                    i + 1
                )));
            }
        }
    }
    let must_close = !matches!(flavor, Flavor::LeftFactor);
    if must_close && h != 0 {
        return Err(Error::InvalidInput(format!(
            "path ends at height {h}, expected 0"
        )));
    }
    Ok(())
}

impl fmt::Display for MotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            match s {
                Step::Up => write!(f, "U")?,
                Step::Down => write!(f, "D")?,
                Step::Flat => write!(f, "F")?,
                Step::FlatLeft => write!(f, "L")?,
                Step::FlatRight => write!(f, "R")?,
                Step::Drop(h) => write!(f, "D{h}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MotzkinPath({self}, {:?})", self.flavor)
    }
}

fn forbidden_123() -> &'static TreePattern {
    static P: OnceLock<TreePattern> = OnceLock::new();
    P.get_or_init(|| TreePattern::parse("123:10").unwrap())
}

fn forbidden_left_factor() -> &'static TreePattern {
    static P: OnceLock<TreePattern> = OnceLock::new();
    P.get_or_init(|| TreePattern::parse("4123:010").unwrap())
}

fn forbidden_catastrophes() -> &'static TreePattern {
    static P: OnceLock<TreePattern> = OnceLock::new();
    P.get_or_init(|| TreePattern::parse("41235:0100").unwrap())
}

/// Maps a tree whose maximal right branches have at most two vertices to an
/// `n`-step plain Motzkin path: a singleton branch at vertex `i` becomes a
/// flat step at position `i`, a two-vertex branch an up/down pair.
pub fn motzkin_from_tree_123(t: &BinaryTree) -> Result<MotzkinPath> {
    let n = t.n();
    let mut steps = vec![Step::Flat; n];
    for i in 1..=n {
        let is_branch_top = match t.parent(i) {
            None => true,
            Some(p) => t.right(p) != Some(i),
        };
        if !is_branch_top {
            continue;
        }
        let branch = t.right_branch(i);
        match branch.len() {
            1 => steps[i - 1] = Step::Flat,
            2 => {
                steps[i - 1] = Step::Up;
                steps[branch[1] - 1] = Step::Down;
            }
            _ => {
                return Err(Error::Domain(format!(
                    "tree {t} contains {}",
                    forbidden_123()
                )))
            }
        }
    }
    MotzkinPath::new(steps, Flavor::Plain)
        .map_err(|e| Error::Internal(format!("image not a Motzkin path: {e}")))
}

/// Inverse of `motzkin_from_tree_123`.
pub fn motzkin_to_tree_123(path: &MotzkinPath) -> Result<BinaryTree> {
    if path.flavor() != Flavor::Plain {
        return Err(Error::InvalidInput("expected a plain Motzkin path".into()));
    }
    fn rec(steps: &[Step]) -> Result<BinaryTree> {
        let Some((&last, rest)) = steps.split_last() else {
            return Ok(BinaryTree::empty());
        };
        match last {
            Step::Flat => {
                // tree = (L(r), r) with no right child
                let left = rec(rest)?;
                Ok(BinaryTree::compose(&left, &BinaryTree::empty()))
            }
            Step::Down => {
                // split rest = alpha U beta with beta balanced: the U is the
                // last rise from the final baseline, i.e. the first position
                // from the right whose suffix has total rise 1
                let mut h = 0i32;
                let mut split = None;
                for (i, s) in rest.iter().enumerate().rev() {
                    h += s.rise();
                    if h == 1 {
                        split = Some(i);
                        break;
                    }
                }
                let split = split.ok_or_else(|| {
                    Error::InvalidInput("unmatched down step".into())
                })?;
                debug_assert_eq!(rest[split], Step::Up);
                let left = rec(&rest[..split])?;
                let inner = rec(&rest[split + 1..])?;
                // r has a right child w with left subtree `inner`
                let w = BinaryTree::compose(&inner, &BinaryTree::empty());
                Ok(BinaryTree::compose(&left, &w))
            }
            _ => Err(Error::InvalidInput("path must end with F or D".into())),
        }
    }
    rec(path.steps())
}

/// Maps a tree avoiding the mirrored left-factor pattern to an
/// `(n-1)`-step Motzkin left factor: the left subtrees hanging off the right
/// spine map through the plain bijection and are joined, bottom subtree
/// first, by rising steps.
pub fn motzkin_left_factor_from_tree(t: &BinaryTree) -> Result<MotzkinPath> {
    if forbidden_left_factor().contains(t) {
        return Err(Error::Domain(format!(
            "tree {t} contains {}",
            forbidden_left_factor()
        )));
    }
    if t.is_empty() {
        return Err(Error::Domain("the empty tree has no left factor".into()));
    }
    let spine = t.right_branch(t.root().unwrap());
    let mut steps = Vec::with_capacity(t.n() - 1);
    for (i, &v) in spine.iter().enumerate().rev() {
        let sub = match t.left(v) {
            Some(w) => t.subtree(w),
            None => BinaryTree::empty(),
        };
        steps.extend(motzkin_from_tree_123(&sub)?.steps().iter().copied());
        if i > 0 {
            steps.push(Step::Up);
        }
    }
    MotzkinPath::new(steps, Flavor::LeftFactor)
        .map_err(|e| Error::Internal(format!("image not a left factor: {e}")))
}

/// Splits a left factor into the balanced pieces separated by its "last
/// ascent" steps; returned in path order.
fn left_factor_pieces(steps: &[Step]) -> Vec<Vec<Step>> {
    // a separator is an Up after which the path never returns to its start
    // height
    let n = steps.len();
    let mut heights = Vec::with_capacity(n + 1);
    let mut h = 0i32;
    heights.push(h);
    for s in steps {
        h += s.rise();
        heights.push(h);
    }
    let mut suffix_min = vec![i32::MAX; n + 2];
    suffix_min[n + 1] = i32::MAX;
    suffix_min[n] = heights[n];
    for i in (0..n).rev() {
        suffix_min[i] = heights[i].min(suffix_min[i + 1]);
    }
    let mut pieces = vec![Vec::new()];
    for (i, &s) in steps.iter().enumerate() {
        let is_sep = s == Step::Up && suffix_min[i + 1] > heights[i];
        if is_sep {
            pieces.push(Vec::new());
        } else {
            pieces.last_mut().unwrap().push(s);
        }
    }
    pieces
}

/// Inverse of `motzkin_left_factor_from_tree`; `tail` becomes the left
/// subtree of the lowest spine vertex (used by the catastrophe bijection,
/// plain callers pass the empty tree).
fn left_factor_to_tree_with_tail(steps: &[Step], tail: &BinaryTree) -> Result<BinaryTree> {
    let pieces = left_factor_pieces(steps);
    let mut t = tail.clone();
    for (i, piece) in pieces.iter().enumerate() {
        let path = MotzkinPath::new(piece.clone(), Flavor::Plain)
            .map_err(|_| Error::InvalidInput("piece between ascents is not balanced".into()))?;
        let sub = motzkin_to_tree_123(&path)?;
        if i == 0 {
            if piece.is_empty() {
                t = BinaryTree::compose(tail, &BinaryTree::empty());
            } else {
                if !tail.is_empty() {
                    return Err(Error::InvalidInput(
                        "block interior touches the axis".into(),
                    ));
                }
                t = BinaryTree::compose(&sub, &BinaryTree::empty());
            }
        } else {
            t = BinaryTree::compose(&sub, &t);
        }
    }
    Ok(t)
}

pub fn motzkin_left_factor_to_tree(path: &MotzkinPath) -> Result<BinaryTree> {
    if path.flavor() != Flavor::LeftFactor {
        return Err(Error::InvalidInput("expected a Motzkin left factor".into()));
    }
    left_factor_to_tree_with_tail(path.steps(), &BinaryTree::empty())
}

/// Maps a tree avoiding the mirrored catastrophe pattern to an `n`-step
/// Motzkin path with catastrophes: the path from the root to the rightmost
/// leaf splits the tree into blocks, each contributing a left factor closed
/// by a flat, down or drop step.
pub fn motzkin_catastrophes_from_tree(t: &BinaryTree) -> Result<MotzkinPath> {
    if forbidden_catastrophes().contains(t) {
        return Err(Error::Domain(format!(
            "tree {t} contains {}",
            forbidden_catastrophes()
        )));
    }
    if t.is_empty() {
        return Err(Error::Domain("the empty tree has no path".into()));
    }
    let mut steps = Vec::with_capacity(t.n());
    let mut block = t.clone();
    loop {
        let spine = block.right_branch(block.root().unwrap());
        let last = *spine.last().unwrap();
        // the block keeps the spine and all left subtrees except the last one
        let next = block.left(last).map(|w| block.subtree(w));
        let mut piece = Vec::new();
        for (i, &v) in spine.iter().enumerate().rev() {
            let sub = if v == last {
                BinaryTree::empty()
            } else {
                match block.left(v) {
                    Some(w) => block.subtree(w),
                    None => BinaryTree::empty(),
                }
            };
            piece.extend(motzkin_from_tree_123(&sub)?.steps().iter().copied());
            if i > 0 {
                piece.push(Step::Up);
            }
        }
        let height: i32 = piece.iter().map(|s| s.rise()).sum();
        let closer = match height {
            0 => Step::Flat,
            1 => Step::Down,
            h => Step::Drop(h as u8),
        };
        steps.extend(piece);
        steps.push(closer);
        match next {
            Some(rest) => block = rest,
            None => break,
        }
    }
    MotzkinPath::new(steps, Flavor::Catastrophes)
        .map_err(|e| Error::Internal(format!("image not a catastrophe path: {e}")))
}

/// Inverse of `motzkin_catastrophes_from_tree`.
pub fn motzkin_catastrophes_to_tree(path: &MotzkinPath) -> Result<BinaryTree> {
    if path.flavor() != Flavor::Catastrophes {
        return Err(Error::InvalidInput(
            "expected a Motzkin path with catastrophes".into(),
        ));
    }
    if path.is_empty() {
        return Err(Error::InvalidInput("empty path".into()));
    }
    // split at every return to the axis
    let mut blocks: Vec<&[Step]> = Vec::new();
    let steps = path.steps();
    let mut h = 0i32;
    let mut start = 0;
    for (i, s) in steps.iter().enumerate() {
        h += s.rise();
        if h == 0 {
            blocks.push(&steps[start..=i]);
            start = i + 1;
        }
    }
    if start != steps.len() {
        return Err(Error::InvalidInput("path does not end on the axis".into()));
    }
    let mut tail = BinaryTree::empty();
    for block in blocks.iter().rev() {
        let (&_closer, piece) = block.split_last().unwrap();
        tail = left_factor_to_tree_with_tail(piece, &tail)?;
    }
    Ok(tail)
}

/// The Catalan bijection onto `(n-1)`-step Motzkin paths with two flavors of
/// flat step. A vertex with two children opens an up/down pair enclosing the
/// right subtree, followed by the left subtree; single children become
/// colored flat steps.
pub fn motzkin_two_colored_from_tree(t: &BinaryTree) -> Result<MotzkinPath> {
    if t.is_empty() {
        return Err(Error::Domain("the empty tree has no path".into()));
    }
    fn rec(t: &BinaryTree, steps: &mut Vec<Step>) {
        if t.is_empty() {
            return;
        }
        let (l, r) = t.split().unwrap();
        match (l.is_empty(), r.is_empty()) {
            (true, true) => {}
            (false, true) => {
                steps.push(Step::FlatLeft);
                rec(&l, steps);
            }
            (true, false) => {
                steps.push(Step::FlatRight);
                rec(&r, steps);
            }
            (false, false) => {
                steps.push(Step::Up);
                rec(&r, steps);
                steps.push(Step::Down);
                rec(&l, steps);
            }
        }
    }
    let mut steps = Vec::with_capacity(t.n() - 1);
    rec(t, &mut steps);
    MotzkinPath::new(steps, Flavor::TwoColored)
        .map_err(|e| Error::Internal(format!("image not a 2-colored path: {e}")))
}

/// Inverse of `motzkin_two_colored_from_tree`.
pub fn motzkin_two_colored_to_tree(path: &MotzkinPath) -> Result<BinaryTree> {
    if path.flavor() != Flavor::TwoColored {
        return Err(Error::InvalidInput("expected a 2-colored path".into()));
    }
    fn rec(steps: &[Step]) -> Result<BinaryTree> {
        let Some((&first, rest)) = steps.split_first() else {
            return Ok(BinaryTree::single());
        };
        match first {
            Step::FlatLeft => Ok(BinaryTree::compose(&rec(rest)?, &BinaryTree::empty())),
            Step::FlatRight => Ok(BinaryTree::compose(&BinaryTree::empty(), &rec(rest)?)),
            Step::Up => {
                // first return to the start height closes the pair
                let mut h = 1i32;
                let mut close = None;
                for (i, s) in rest.iter().enumerate() {
                    h += s.rise();
                    if h == 0 {
                        close = Some(i);
                        break;
                    }
                }
                let close =
                    close.ok_or_else(|| Error::InvalidInput("unmatched up step".into()))?;
                let right = rec(&rest[..close])?;
                let left = rec(&rest[close + 1..])?;
                Ok(BinaryTree::compose(&left, &right))
            }
            other => Err(Error::InvalidInput(format!(
                "path cannot start with {other:?}"
            ))),
        }
    }
    rec(path.steps())
}

/// All plain Motzkin paths with `n` steps.
pub fn all_motzkin(n: usize) -> Vec<MotzkinPath> {
    gen_paths(n, &[Step::Up, Step::Down, Step::Flat], false, Flavor::Plain)
}

/// All Motzkin left factors with `n` steps.
pub fn all_left_factors(n: usize) -> Vec<MotzkinPath> {
    gen_paths(
        n,
        &[Step::Up, Step::Down, Step::Flat],
        true,
        Flavor::LeftFactor,
    )
}

/// All `n`-step Motzkin paths with catastrophes.
pub fn all_catastrophes(n: usize) -> Vec<MotzkinPath> {
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity(n);
    fn rec(n: usize, h: i32, steps: &mut Vec<Step>, out: &mut Vec<MotzkinPath>) {
        if steps.len() == n {
            if h == 0 {
                out.push(MotzkinPath {
                    steps: steps.clone(),
                    flavor: Flavor::Catastrophes,
                });
            }
            return;
        }
        for s in [Step::Up, Step::Down, Step::Flat] {
            let nh = h + s.rise();
            if nh >= 0 {
                steps.push(s);
                rec(n, nh, steps, out);
                steps.pop();
            }
        }
        if h >= 2 && h <= u8::MAX as i32 {
            steps.push(Step::Drop(h as u8));
            rec(n, 0, steps, out);
            steps.pop();
        }
    }
    rec(n, 0, &mut steps, &mut out);
    out
}

/// All `n`-step 2-colored Motzkin paths.
pub fn all_two_colored(n: usize) -> Vec<MotzkinPath> {
    gen_paths(
        n,
        &[Step::Up, Step::Down, Step::FlatLeft, Step::FlatRight],
        false,
        Flavor::TwoColored,
    )
}

fn gen_paths(n: usize, alphabet: &[Step], open_end: bool, flavor: Flavor) -> Vec<MotzkinPath> {
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity(n);
    fn rec(
        n: usize,
        h: i32,
        alphabet: &[Step],
        open_end: bool,
        flavor: Flavor,
        steps: &mut Vec<Step>,
        out: &mut Vec<MotzkinPath>,
    ) {
        if steps.len() == n {
            if open_end || h == 0 {
                out.push(MotzkinPath {
                    steps: steps.clone(),
                    flavor,
                });
            }
            return;
        }
        for &s in alphabet {
            let nh = h + s.rise();
            if nh >= 0 && (open_end || nh <= (n - steps.len() - 1) as i32) {
                steps.push(s);
                rec(n, nh, alphabet, open_end, flavor, steps, out);
                steps.pop();
            }
        }
    }
    rec(n, 0, alphabet, open_end, flavor, &mut steps, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::avoiders;
    use std::collections::HashSet;

    fn t(s: &str) -> BinaryTree {
        BinaryTree::parse(s).unwrap()
    }

    #[test]
    fn plain_examples() {
        assert_eq!(
            motzkin_from_tree_123(&BinaryTree::left_path(4)).unwrap().to_string(),
            "FFFF"
        );
        assert_eq!(motzkin_from_tree_123(&t("12")).unwrap().to_string(), "UD");
        assert!(motzkin_from_tree_123(&BinaryTree::right_path(3)).is_err());
    }

    #[test]
    fn plain_image_size() {
        let dom = avoiders(4, std::slice::from_ref(forbidden_123()));
        let img: HashSet<String> = dom
            .iter()
            .map(|t| motzkin_from_tree_123(t).unwrap().to_string())
            .collect();
        assert_eq!(img.len(), 9);
        assert_eq!(all_motzkin(4).len(), 9);
    }

    #[test]
    fn left_factor_examples() {
        assert_eq!(
            motzkin_left_factor_from_tree(&BinaryTree::right_path(4)).unwrap().to_string(),
            "UUU"
        );
        assert_eq!(
            motzkin_left_factor_from_tree(&BinaryTree::single()).unwrap().to_string(),
            ""
        );
        assert_eq!(all_left_factors(5).len(), 96);
    }

    #[test]
    fn catastrophe_examples() {
        assert_eq!(
            motzkin_catastrophes_from_tree(&BinaryTree::single()).unwrap().to_string(),
            "F"
        );
        assert_eq!(
            motzkin_catastrophes_from_tree(&BinaryTree::right_path(3)).unwrap().to_string(),
            "UUD2"
        );
        assert_eq!(all_catastrophes(7).len(), 374);
    }

    #[test]
    fn two_colored_examples() {
        assert_eq!(
            motzkin_two_colored_from_tree(&BinaryTree::left_path(3)).unwrap().to_string(),
            "LL"
        );
        assert_eq!(
            motzkin_two_colored_from_tree(&BinaryTree::right_path(3)).unwrap().to_string(),
            "RR"
        );
        // a Catalan family: trees on n vertices vs (n-1)-step paths
        assert_eq!(all_two_colored(3).len(), 14);
    }

    #[test]
    fn round_trips() {
        for n in 1..=8 {
            for tree in avoiders(n, std::slice::from_ref(forbidden_123())) {
                let p = motzkin_from_tree_123(&tree).unwrap();
                assert_eq!(motzkin_to_tree_123(&p).unwrap(), tree);
            }
            for tree in avoiders(n, std::slice::from_ref(forbidden_left_factor())) {
                let p = motzkin_left_factor_from_tree(&tree).unwrap();
                assert_eq!(motzkin_left_factor_to_tree(&p).unwrap(), tree, "tree {tree}");
            }
            for tree in avoiders(n, std::slice::from_ref(forbidden_catastrophes())) {
                let p = motzkin_catastrophes_from_tree(&tree).unwrap();
                assert_eq!(motzkin_catastrophes_to_tree(&p).unwrap(), tree, "tree {tree}");
            }
            for tree in crate::tree::all_trees(n).iter() {
                let p = motzkin_two_colored_from_tree(tree).unwrap();
                assert_eq!(&motzkin_two_colored_to_tree(&p).unwrap(), tree);
            }
        }
    }

    #[test]
    fn parse_round_trip() {
        let p = MotzkinPath::parse("UUD2FUD", Flavor::Catastrophes).unwrap();
        assert_eq!(p.to_string(), "UUD2FUD");
        assert!(MotzkinPath::parse("UDD", Flavor::Plain).is_err());
        assert!(MotzkinPath::parse("LR", Flavor::Plain).is_err());
    }
}
