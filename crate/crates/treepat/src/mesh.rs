//! Mesh permutation patterns and the compiler that turns a tree pattern into
//! the mesh pattern whose avoidance inside 231-avoiders mirrors tree-pattern
//! avoidance.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::pattern::{EdgeType, TreePattern};
use crate::perm::Permutation;

/// A mesh pattern: a classical pattern together with a set of shaded cells
/// in the `(k+1) x (k+1)` grid. The classical pattern is the special case of
/// an empty cell set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MeshPattern {
    tau: Permutation,
    cells: BTreeSet<(u8, u8)>,
}

impl MeshPattern {
    pub fn new(tau: Permutation, cells: impl IntoIterator<Item = (u8, u8)>) -> Result<Self> {
        let k = tau.len() as u8;
        let cells: BTreeSet<(u8, u8)> = cells.into_iter().collect();
        for &(i, j) in &cells {
            if i > k || j > k {
                return Err(Error::InvalidInput(format!(
                    "cell ({i},{j}) outside the {k}x{k} grid"
                )));
            }
        }
        Ok(MeshPattern { tau, cells })
    }

    pub fn classical(tau: Permutation) -> Self {
        MeshPattern {
            tau,
            cells: BTreeSet::new(),
        }
    }

    pub fn tau(&self) -> &Permutation {
        &self.tau
    }

    pub fn cells(&self) -> &BTreeSet<(u8, u8)> {
        &self.cells
    }

    pub fn k(&self) -> usize {
        self.tau.len()
    }

    /// Compiles a tree pattern into its mesh pattern. For every maximal
    /// right branch we shade, for each pair of (not necessarily distinct)
    /// non-final branch vertices, the cell left of the smaller and above the
    /// larger; a contiguous edge additionally shades the two cells flanking
    /// the subtree's value range, and a branch edge shades the one on the
    /// side of the child direction.
    pub fn from_tree_pattern(pat: &TreePattern) -> Self {
        let shape = pat.shape();
        let k = shape.n();
        let tau = shape.preorder();
        let rho = tau.inverse();
        let pos = |v: usize| rho.values()[v - 1] as u8; // position of vertex v in tau
        let mut cells = BTreeSet::new();
        for i in 1..=k {
            let mut branch = shape.right_branch(i);
            branch.pop(); // all vertices on the branch except the last
            for j in branch {
                cells.insert((pos(i) - 1, j as u8));
            }
        }
        let root = shape.root().unwrap();
        for i in 1..=k {
            if i == root {
                continue;
            }
            let (lo, hi) = shape.subtree_span(i);
            let col = pos(i) - 1;
            match pat.edge(i) {
                EdgeType::NonContiguous => {}
                EdgeType::Contiguous => {
                    cells.insert((col, lo as u8 - 1));
                    cells.insert((col, hi as u8));
                }
                EdgeType::Branch => {
                    let p = shape.parent(i).unwrap();
                    if shape.left(p) == Some(i) {
                        cells.insert((col, lo as u8 - 1));
                    } else {
                        cells.insert((col, hi as u8));
                    }
                }
            }
        }
        MeshPattern { tau, cells }
    }

    /// The compiled mesh pattern with the cell just left of and above the
    /// largest value removed. Inside 231-avoiders this has the same avoiders
    /// as the full pattern, and for friendly tree patterns it is tame.
    pub fn sigma_minus(pat: &TreePattern) -> Self {
        let mut m = Self::from_tree_pattern(pat);
        let k = m.k();
        let i = m.tau.position_of(k).unwrap();
        m.cells.remove(&((i - 1) as u8, k as u8));
        m
    }

    /// Syntactic tameness test on the cell set relative to the position of
    /// the largest value. Tame patterns have hereditary zigzag avoider
    /// languages, which is what the greedy generators need.
    pub fn is_tame(&self) -> Result<bool> {
        let k = self.k();
        if k < 3 {
            return Err(Error::MeshTooShort(k));
        }
        Ok(self.tame_violation().is_none())
    }

    /// Which of the four tameness conditions fails first, if any.
    pub fn tame_violation(&self) -> Option<usize> {
        let k = self.k() as u8;
        let i = self.tau.position_of(self.k()).unwrap() as u8;
        if i == 1 || i == k {
            return Some(1);
        }
        if (0..=k).any(|a| a != i - 1 && a != i && self.cells.contains(&(a, k))) {
            return Some(2);
        }
        if self.cells.contains(&(i - 1, k)) {
            let bad = (0..=k).any(|a| a != i - 1 && self.cells.contains(&(a, k - 1)))
                || (0..=k - 2)
                    .any(|b| self.cells.contains(&(i, b)) && !self.cells.contains(&(i - 1, b)));
            if bad {
                return Some(3);
            }
        }
        if self.cells.contains(&(i, k)) {
            let bad = (0..=k).any(|a| a != i && self.cells.contains(&(a, k - 1)))
                || (0..=k - 2)
                    .any(|b| self.cells.contains(&(i - 1, b)) && !self.cells.contains(&(i, b)));
            if bad {
                return Some(4);
            }
        }
        None
    }

    /// True when `pi` contains this mesh pattern: some occurrence of the
    /// classical pattern keeps every shaded region free of other points.
    pub fn contained_in(&self, pi: &Permutation) -> bool {
        let grid = PermGrid::new(pi);
        self.contained_in_grid(&grid)
    }

    /// Same, reusing a precomputed grid for `pi`.
    pub fn contained_in_grid(&self, grid: &PermGrid) -> bool {
        let k = self.k();
        let n = grid.n;
        if k > n {
            return false;
        }
        let nd = self.tau.values();
        let h = &grid.values;
        let mut chosen: Vec<usize> = Vec::with_capacity(k);
        self.search(grid, h, nd, 0, &mut chosen)
    }

    fn search(
        &self,
        grid: &PermGrid,
        h: &[u32],
        nd: &[u32],
        start: usize,
        chosen: &mut Vec<usize>,
    ) -> bool {
        let t = chosen.len();
        if t == nd.len() {
            return self.regions_empty(grid, h, chosen);
        }
        for pos in start..h.len() {
            if h.len() - pos < nd.len() - t {
                return false;
            }
            if (0..t).all(|s| (h[chosen[s]] < h[pos]) == (nd[s] < nd[t])) {
                chosen.push(pos);
                if self.search(grid, h, nd, pos + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }

    fn regions_empty(&self, grid: &PermGrid, h: &[u32], chosen: &[usize]) -> bool {
        let k = self.k();
        let n = grid.n;
        // nu[i], lambda[j] with sentinels at 0 and n+1 (1-based positions)
        let mut nu = vec![0usize; k + 2];
        let mut lambda = vec![0usize; k + 2];
        nu[k + 1] = n + 1;
        lambda[k + 1] = n + 1;
        let mut vals: Vec<u32> = chosen.iter().map(|&p| h[p]).collect();
        vals.sort_unstable();
        for i in 1..=k {
            nu[i] = chosen[i - 1] + 1;
            lambda[i] = vals[i - 1] as usize;
        }
        self.cells.iter().all(|&(i, j)| {
            let (i, j) = (i as usize, j as usize);
            grid.count_open(nu[i], nu[i + 1], lambda[j], lambda[j + 1]) == 0
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        let cells: Vec<[u8; 2]> = self.cells.iter().map(|&(i, j)| [i, j]).collect();
        serde_json::json!({
            "tau": self.tau.values(),
            "cells": cells,
        })
    }

    /// Parses the textual form `tau|cells`, e.g. `12|(0,1)(1,1)`.
    pub fn parse(text: &str) -> Result<Self> {
        let (tau, cells) = text
            .split_once('|')
            .ok_or_else(|| Error::InvalidInput(format!("expected tau|cells, got {text:?}")))?;
        let tau = Permutation::parse(tau)?;
        let mut set = BTreeSet::new();
        let cells = cells.trim();
        if !cells.is_empty() {
            for part in cells.split(')') {
                let part = part.trim().trim_start_matches(',').trim();
                if part.is_empty() {
                    continue;
                }
                let inner = part.trim_start_matches('(');
                let (a, b) = inner
                    .split_once(',')
                    .ok_or_else(|| Error::InvalidInput(format!("bad cell {part:?}")))?;
                let i: u8 = a.trim().parse().map_err(|_| {
                    Error::InvalidInput(format!("bad cell coordinate {a:?}"))
                })?;
                let j: u8 = b.trim().parse().map_err(|_| {
                    Error::InvalidInput(format!("bad cell coordinate {b:?}"))
                })?;
                set.insert((i, j));
            }
        }
        Self::new(tau, set)
    }
}

impl fmt::Display for MeshPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|", self.tau)?;
        for &(i, j) in &self.cells {
            write!(f, "({i},{j})")?;
        }
        Ok(())
    }
}

impl fmt::Debug for MeshPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MeshPattern({self})")
    }
}

/// A permutation plus a 2D prefix-count table for O(1) emptiness tests of
/// open rectangles in its grid representation.
pub struct PermGrid {
    pub n: usize,
    pub values: Vec<u32>,
    prefix: Vec<u32>,
    width: usize,
}

impl PermGrid {
    pub fn new(pi: &Permutation) -> Self {
        let n = pi.len();
        let width = n + 1;
        let mut prefix = vec![0u32; width * width];
        for (idx, &v) in pi.values().iter().enumerate() {
            let (x, y) = (idx + 1, v as usize);
            prefix[x * width + y] = 1;
        }
        for x in 1..width {
            for y in 1..width {
                prefix[x * width + y] += prefix[(x - 1) * width + y] + prefix[x * width + y - 1]
                    - prefix[(x - 1) * width + y - 1];
            }
        }
        PermGrid {
            n,
            values: pi.values().to_vec(),
            prefix,
            width,
        }
    }

    /// Number of points `(p, pi(p))` with `x1 < p < x2` and `y1 < v < y2`.
    pub fn count_open(&self, x1: usize, x2: usize, y1: usize, y2: usize) -> u32 {
        if x2 <= x1 + 1 || y2 <= y1 + 1 {
            return 0;
        }
        let (a, b) = (x2 - 1, y2 - 1);
        let s = |x: usize, y: usize| self.prefix[x * self.width + y];
        s(a, b) + s(x1, y1) - s(x1, b) - s(a, y1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_perms;

    fn pat(s: &str) -> TreePattern {
        TreePattern::parse(s).unwrap()
    }

    fn p(s: &str) -> Permutation {
        Permutation::parse(s).unwrap()
    }

    #[test]
    fn compile_small_patterns() {
        let m = MeshPattern::from_tree_pattern(&pat("12:0"));
        assert_eq!(m.to_string(), "12|(0,1)");
        let m1 = MeshPattern::from_tree_pattern(&pat("12:1"));
        assert_eq!(
            m1.cells().iter().copied().collect::<Vec<_>>(),
            vec![(0, 1), (1, 1), (1, 2)]
        );
        // branch edge shades one of the two contiguous cells
        let mh = MeshPattern::from_tree_pattern(&pat("12:h"));
        assert_eq!(
            mh.cells().iter().copied().collect::<Vec<_>>(),
            vec![(0, 1), (1, 2)]
        );
    }

    #[test]
    fn corner_cells_never_shaded() {
        for s in ["123:11", "132:10", "1243:100", "21543:011h", "15234:1011"] {
            let q = pat(s);
            let m = MeshPattern::from_tree_pattern(&q);
            let k = m.k() as u8;
            for corner in [(0, 0), (0, k), (k, 0), (k, k)] {
                assert!(!m.cells().contains(&corner), "{s} shades corner {corner:?}");
            }
        }
    }

    #[test]
    fn mesh_containment_examples() {
        // empty cell set behaves classically
        let classical = MeshPattern::classical(p("123"));
        assert!(classical.contained_in(&p("1234")));
        assert!(!classical.contained_in(&p("321")));

        let m = MeshPattern::new(p("12"), [(0u8, 1u8)]).unwrap();
        assert!(m.contained_in(&p("12345")));
        assert!(!m.contained_in(&p("54321")));
        // the occurrence must have nothing left of it between the two values:
        // in 213 the pair (1,3) works because 2 is not in the open band
        assert!(m.contained_in(&p("213")));
    }

    #[test]
    fn sigma_minus_removes_one_cell_iff_top_edge_contiguous() {
        let q = pat("132:10");
        let full = MeshPattern::from_tree_pattern(&q);
        let minus = MeshPattern::sigma_minus(&q);
        assert_eq!(full.cells().len(), minus.cells().len() + 1);
        let q0 = pat("132:00");
        assert_eq!(
            MeshPattern::from_tree_pattern(&q0),
            MeshPattern::sigma_minus(&q0)
        );
    }

    #[test]
    fn tame_examples() {
        assert!(MeshPattern::classical(p("231")).is_tame().unwrap());
        assert!(MeshPattern::classical(p("12")).is_tame().is_err());
        // friendly pattern whose contiguous top edge sits over a vertex with
        // a right child: the full pattern fails condition (iii)
        let q = pat("15243:1000");
        let full = MeshPattern::from_tree_pattern(&q);
        assert_eq!(full.tame_violation(), Some(3));
        assert!(MeshPattern::sigma_minus(&q).is_tame().unwrap());
        // with no right child under the top vertex both versions are tame
        let r = pat("132:10");
        assert!(MeshPattern::from_tree_pattern(&r).is_tame().unwrap());
        assert!(MeshPattern::sigma_minus(&r).is_tame().unwrap());
    }

    #[test]
    fn bijection_oracle_for_one_pattern() {
        // the binding oracle for the compiler: tree-pattern avoiders map
        // exactly onto 231-avoiding mesh avoiders
        use crate::pattern::avoiders;
        use std::collections::BTreeSet;
        let q = pat("12:1");
        let m = MeshPattern::from_tree_pattern(&q);
        let c231 = p("231");
        for n in 0..=6 {
            let lhs: BTreeSet<String> = avoiders(n, &[q.clone()])
                .iter()
                .map(|t| t.preorder().to_string())
                .collect();
            let rhs: BTreeSet<String> = all_perms(n)
                .iter()
                .filter(|q| !q.contains_classical(&c231) && !m.contained_in(q))
                .map(|q| q.to_string())
                .collect();
            assert_eq!(lhs, rhs, "n={n}");
        }
    }

    #[test]
    fn display_and_parse_round_trip() {
        for s in ["12:1", "1243:100", "132:h0"] {
            let m = MeshPattern::from_tree_pattern(&pat(s));
            assert_eq!(MeshPattern::parse(&m.to_string()).unwrap(), m);
        }
    }
}
