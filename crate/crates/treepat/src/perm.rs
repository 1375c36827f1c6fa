//! Permutations in one-line notation, classical pattern containment, jumps
//! and the greedy minimal-jump generator for zigzag languages.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

/// Direction of a jump.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum JumpDir {
    Left,
    Right,
}

impl fmt::Display for JumpDir {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            JumpDir::Left => "left",
            JumpDir::Right => "right",
        })
    }
}

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    values: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            values: (1..=n as u32).collect(),
        }
    }

    pub fn from_values(values: Vec<u32>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v as usize > n || seen[v as usize] {
                return Err(Error::InvalidPermutation(format!(
                    "values must be a rearrangement of 1..={n}"
                )));
            }
            seen[v as usize] = true;
        }
        Ok(Permutation { values })
    }

    pub(crate) fn from_values_unchecked(values: Vec<u32>) -> Self {
        Permutation { values }
    }

    /// Parses digits for `n <= 9` or comma-separated labels. Empty input is
    /// the empty permutation.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Permutation { values: vec![] });
        }
        let values: Vec<u32> = if text.contains(',') {
            text.split(',')
                .map(|s| {
                    s.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::InvalidPermutation(format!("bad label {s:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            text.chars()
                .map(|c| {
                    c.to_digit(10)
                        .filter(|&d| d > 0)
                        .ok_or_else(|| Error::InvalidPermutation(format!("bad digit {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        Self::from_values(values)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// 1-based position of each value.
    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.values.len()];
        for (i, &v) in self.values.iter().enumerate() {
            inv[v as usize - 1] = i as u32 + 1;
        }
        Permutation { values: inv }
    }

    /// Position (1-based) of `value`.
    pub fn position_of(&self, value: usize) -> Option<usize> {
        self.values.iter().position(|&v| v as usize == value).map(|i| i + 1)
    }

    /// First occurrence of the classical pattern `patt`, as 1-based indices.
    pub fn find_occurrence(&self, patt: &Permutation) -> Option<Vec<usize>> {
        let h = &self.values;
        let nd = &patt.values;
        if nd.len() > h.len() {
            return None;
        }
        fn rec(h: &[u32], nd: &[u32], start: usize, chosen: &mut Vec<usize>) -> bool {
            let t = chosen.len();
            if t == nd.len() {
                return true;
            }
            for pos in start..h.len() {
                if h.len() - pos < nd.len() - t {
                    return false;
                }
                if (0..t).all(|s| (h[chosen[s]] < h[pos]) == (nd[s] < nd[t])) {
                    chosen.push(pos);
                    if rec(h, nd, pos + 1, chosen) {
                        return true;
                    }
                    chosen.pop();
                }
            }
            false
        }
        let mut chosen = Vec::with_capacity(nd.len());
        if rec(h, nd, 0, &mut chosen) {
            Some(chosen.into_iter().map(|i| i + 1).collect())
        } else {
            None
        }
    }

    /// Classical pattern containment: some subsequence is order-isomorphic
    /// to `patt`.
    pub fn contains_classical(&self, patt: &Permutation) -> bool {
        self.find_occurrence(patt).is_some()
    }

    /// A jump moves `value` over `steps` adjacent entries, all of which must
    /// be smaller; the affected substring rotates cyclically.
    pub fn jump(&self, value: usize, dir: JumpDir, steps: usize) -> Result<Permutation> {
        if steps == 0 {
            return Err(Error::Jump {
                value,
                dir,
                steps,
                reason: "jumps take at least one step",
            });
        }
        let n = self.len();
        let pos = self.position_of(value).ok_or(Error::Jump {
            value,
            dir,
            steps,
            reason: "value not present",
        })? - 1; // 0-based
        let mut vals = self.values.clone();
        match dir {
            JumpDir::Left => {
                if steps > pos {
                    return Err(Error::Jump {
                        value,
                        dir,
                        steps,
                        reason: "jump passes the left end",
                    });
                }
                let lo = pos - steps;
                if !vals[lo..pos].iter().all(|&v| (v as usize) < value) {
                    return Err(Error::Jump {
                        value,
                        dir,
                        steps,
                        reason: "a larger value is in the way",
                    });
                }
                vals[lo..=pos].rotate_right(1);
            }
            JumpDir::Right => {
                if pos + steps >= n {
                    return Err(Error::Jump {
                        value,
                        dir,
                        steps,
                        reason: "jump passes the right end",
                    });
                }
                let hi = pos + steps;
                if !vals[pos + 1..=hi].iter().all(|&v| (v as usize) < value) {
                    return Err(Error::Jump {
                        value,
                        dir,
                        steps,
                        reason: "a larger value is in the way",
                    });
                }
                vals[pos..=hi].rotate_left(1);
            }
        }
        Ok(Permutation { values: vals })
    }

    /// Smallest-step jump of `value` in `dir` that lands inside the language,
    /// if any.
    pub fn minimal_jump(
        &self,
        value: usize,
        dir: JumpDir,
        member: &dyn Fn(&Permutation) -> bool,
    ) -> Option<(Permutation, usize)> {
        for d in 1..self.len().max(1) {
            match self.jump(value, dir, d) {
                Ok(p) => {
                    if member(&p) {
                        return Some((p, d));
                    }
                }
                Err(_) => return None,
            }
        }
        None
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for &v in &self.values {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let strs: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
            f.write_str(&strs.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

/// Outcome of a greedy minimal-jump run.
pub struct JumpRun {
    pub perms: Vec<Permutation>,
    /// True when the run stopped because two opposite minimal jumps of the
    /// same largest value were both available.
    pub ambiguous_stop: bool,
}

/// Greedy generation of a permutation language: starting from the identity,
/// repeatedly perform a minimal jump of the largest possible value that
/// yields an unvisited member. For zigzag languages this visits every member
/// exactly once.
pub fn algorithm_j(n: usize, member: &dyn Fn(&Permutation) -> bool) -> JumpRun {
    let start = Permutation::identity(n);
    if n == 0 {
        return JumpRun {
            perms: vec![start],
            ambiguous_stop: false,
        };
    }
    debug_assert!(member(&start), "identity must belong to the language");
    let mut visited: HashSet<Permutation> = HashSet::new();
    visited.insert(start.clone());
    let mut perms = vec![start];
    loop {
        let cur = perms.last().unwrap();
        let mut chosen: Option<Permutation> = None;
        let mut ambiguous = false;
        'values: for value in (1..=n).rev() {
            let mut cands: Vec<Permutation> = Vec::new();
            for dir in [JumpDir::Left, JumpDir::Right] {
                if let Some((p, _)) = cur.minimal_jump(value, dir, member) {
                    if !visited.contains(&p) {
                        cands.push(p);
                    }
                }
            }
            match cands.len() {
                0 => continue,
                1 => {
                    chosen = cands.pop();
                    break 'values;
                }
                _ => {
                    ambiguous = true;
                    break 'values;
                }
            }
        }
        if ambiguous {
            return JumpRun {
                perms,
                ambiguous_stop: true,
            };
        }
        match chosen {
            Some(p) => {
                visited.insert(p.clone());
                perms.push(p);
            }
            None => {
                return JumpRun {
                    perms,
                    ambiguous_stop: false,
                }
            }
        }
    }
}

/// All permutations of `1..=n` (Heap's algorithm).
pub fn all_perms(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut vals: Vec<u32> = (1..=n as u32).collect();
    fn heap(k: usize, vals: &mut Vec<u32>, out: &mut Vec<Permutation>) {
        if k <= 1 {
            out.push(Permutation {
                values: vals.clone(),
            });
            return;
        }
        for i in 0..k {
            heap(k - 1, vals, out);
            if k % 2 == 0 {
                vals.swap(i, k - 1);
            } else {
                vals.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut vals, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        Permutation::parse(s).unwrap()
    }

    #[test]
    fn classical_containment_examples() {
        assert!(p("1234").contains_classical(&p("123")));
        assert!(!p("321").contains_classical(&p("12")));
        assert!(p("2413").contains_classical(&p("231")));
        assert_eq!(p("2413").find_occurrence(&p("231")), Some(vec![1, 2, 3]));
    }

    #[test]
    fn jump_examples() {
        assert_eq!(p("123").jump(3, JumpDir::Left, 2).unwrap(), p("312"));
        assert_eq!(p("312").jump(2, JumpDir::Left, 1).unwrap(), p("321"));
        assert_eq!(p("321").jump(3, JumpDir::Right, 2).unwrap(), p("213"));
        assert!(p("123").jump(2, JumpDir::Left, 2).is_err());
        // jump then reverse jump is the identity
        let q = p("15234");
        for v in 1..=5 {
            for d in 1..5 {
                if let Ok(r) = q.jump(v, JumpDir::Left, d) {
                    assert_eq!(r.jump(v, JumpDir::Right, d).unwrap(), q);
                }
            }
        }
    }

    #[test]
    fn algorithm_j_on_231_avoiders() {
        let member = |q: &Permutation| !q.contains_classical(&p("231"));
        let run = algorithm_j(3, &member);
        let want: Vec<Permutation> = ["123", "132", "312", "321", "213"]
            .iter()
            .map(|s| p(s))
            .collect();
        assert_eq!(run.perms, want);
        assert!(!run.ambiguous_stop);

        let run2 = algorithm_j(2, &member);
        assert_eq!(run2.perms, vec![p("12"), p("21")]);
    }

    #[test]
    fn all_perms_count() {
        assert_eq!(all_perms(5).len(), 120);
        assert_eq!(all_perms(0).len(), 1);
    }

    #[test]
    fn display_and_parse_large() {
        let q = Permutation::identity(11);
        assert_eq!(q.to_string(), "1,2,3,4,5,6,7,8,9,10,11");
        assert_eq!(Permutation::parse(&q.to_string()).unwrap(), q);
    }
}
