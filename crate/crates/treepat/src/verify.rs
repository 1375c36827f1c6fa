//! Named verification batteries binding the library's components together:
//! each suite checks one cross-cutting law at a configurable scale and
//! reports pass/fail with the first counterexamples.

use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;

use crate::bijections::bits::{bits_from_tree, bits_to_tree, BitScheme};
use crate::bijections::motzkin::{
    all_catastrophes, all_left_factors, all_motzkin, all_two_colored,
    motzkin_catastrophes_from_tree, motzkin_catastrophes_to_tree, motzkin_from_tree_123,
    motzkin_left_factor_from_tree, motzkin_left_factor_to_tree, motzkin_to_tree_123,
    motzkin_two_colored_from_tree, motzkin_two_colored_to_tree, MotzkinPath, Step,
};
use crate::bijections::partition::{
    all_rgs, partition_from_tree, partition_to_tree, rgs_pattern_of_staggered,
    staggered_signature, Side,
};
use crate::bijections::wilf::{preset_configs, recurrence_a176677, wilf_transform, TransformDir};
use crate::counting::{
    class_string_members, count_series, row_base_pattern, row_friendly_pattern,
    row_member_patterns, staggered_rows, table_report, table_rows, Engine,
};
use crate::error::{Error, Result};
use crate::fixtures::fixture;
use crate::generate::{algorithm_s, verify_gray, AlgorithmH};
use crate::mesh::{MeshPattern, PermGrid};
use crate::pattern::{avoiders, TreePattern};
use crate::perm::{algorithm_j, all_perms, Permutation};
use crate::tree::{all_trees, BinaryTree};

/// Outcome of one suite run.
#[derive(Debug, Clone)]
pub struct Report {
    pub suite: String,
    pub n: usize,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl Report {
    fn new(suite: &str, n: usize) -> Self {
        Report {
            suite: suite.to_string(),
            n,
            checks: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failures.len() < 20 {
            self.failures.push(msg());
        }
    }

    pub fn summary(&self) -> String {
        format!(
            "suite={} n={} checks={} failures={} status={}",
            self.suite,
            self.n,
            self.checks,
            self.failures.len(),
            if self.passed() { "pass" } else { "FAIL" }
        )
    }
}

/// Names understood by `run_suite`.
pub const SUITES: &[&str] = &[
    "thm-bijection",
    "algoS-vs-brute",
    "algoH-vs-algoS",
    "e-equality",
    "exchange",
    "friendly-tame",
    "staggered",
    "motz24",
    "motz25",
    "bijections",
    "wilf",
    "baseline",
    "lem-12435",
    "tables",
];

pub fn run_suite(name: &str, n: usize) -> Result<Report> {
    match name {
        "thm-bijection" => Ok(thm_bijection(n)),
        "algoS-vs-brute" => Ok(algo_s_vs_brute(n)),
        "algoH-vs-algoS" => Ok(algo_h_vs_algo_s(n)),
        "e-equality" => Ok(e_equality(n)),
        "exchange" => Ok(exchange(n)),
        "friendly-tame" => Ok(friendly_tame()),
        "staggered" => Ok(staggered(n)),
        "motz24" => Ok(motz24(n)),
        "motz25" => Ok(motz25(n)),
        "bijections" => Ok(bijection_suite(n, n.min(8))),
        "wilf" => Ok(wilf_transforms(n)),
        "baseline" => Ok(baseline_gray(n)),
        "lem-12435" => Ok(recurrence_12435(n)),
        "tables" => Ok(tables(n)),
        other => Err(Error::UnknownSuite(other.to_string())),
    }
}

/// All patterns on at most `k_max` vertices (every shape, every 0/1 edge
/// assignment).
fn all_patterns_up_to(k_max: usize) -> Vec<TreePattern> {
    let mut out = Vec::new();
    for k in 1..=k_max {
        for shape in all_trees(k).iter() {
            let m = k - 1;
            for v in 0..(1u32 << m) {
                let syms: Vec<crate::pattern::EdgeType> = (0..m)
                    .map(|i| {
                        if v & (1 << i) != 0 {
                            crate::pattern::EdgeType::Contiguous
                        } else {
                            crate::pattern::EdgeType::NonContiguous
                        }
                    })
                    .collect();
                out.push(TreePattern::from_shape_and_edges(shape.clone(), &syms).unwrap());
            }
        }
    }
    out
}

fn s_n_231(n: usize) -> Vec<Permutation> {
    let p231 = Permutation::parse("231").unwrap();
    all_perms(n)
        .into_iter()
        .filter(|p| !p.contains_classical(&p231))
        .collect()
}

/// The compiled mesh pattern captures tree-pattern avoidance exactly: the
/// preorder map sends the avoider set onto the 231-avoiding mesh avoiders,
/// for every pattern on at most five vertices.
pub fn thm_bijection(n_max: usize) -> Report {
    let mut report = Report::new("thm-bijection", n_max);
    let patterns = all_patterns_up_to(5);
    for n in 1..=n_max {
        let perms = s_n_231(n);
        let grids: Vec<PermGrid> = perms.iter().map(PermGrid::new).collect();
        let failures: Vec<String> = patterns
            .par_iter()
            .filter_map(|pat| {
                let mesh = MeshPattern::from_tree_pattern(pat);
                let lhs: BTreeSet<String> = avoiders(n, std::slice::from_ref(pat))
                    .iter()
                    .map(|t| t.preorder().to_string())
                    .collect();
                let rhs: BTreeSet<String> = perms
                    .iter()
                    .zip(&grids)
                    .filter(|(_, g)| !mesh.contained_in_grid(g))
                    .map(|(p, _)| p.to_string())
                    .collect();
                if lhs == rhs {
                    None
                } else {
                    Some(format!("pattern {} at n={n}: tree side {} vs mesh side {}",
                        pat.compact(), lhs.len(), rhs.len()))
                }
            })
            .collect();
        report.checks += patterns.len();
        report.failures.extend(failures.into_iter().take(5));
    }
    report
}

/// The greedy generator is exhaustive on every friendly table row and emits
/// a slide Gray code.
pub fn algo_s_vs_brute(n: usize) -> Report {
    let mut report = Report::new("algoS-vs-brute", n);
    for row in table_rows(3).into_iter().chain(table_rows(4)).chain(table_rows(5)) {
        let Some(pat) = row_friendly_pattern(row) else {
            continue;
        };
        let pats = [pat.clone()];
        let run = match algorithm_s(n, &pats) {
            Ok(run) => run,
            Err(e) => {
                report.check(false, || format!("{}: {}", pat.compact(), e));
                continue;
            }
        };
        let trees: Vec<BinaryTree> = run.into_iter().map(|s| s.tree).collect();
        let brute = avoiders(n, &pats);
        let gray = verify_gray(&trees, Some(&brute));
        report.check(gray.ok, || {
            format!(
                "{}: {}",
                pat.compact(),
                gray.first_violation.clone().unwrap_or_default()
            )
        });
    }
    report
}

/// The history-free generator produces exactly the greedy sequence.
pub fn algo_h_vs_algo_s(n: usize) -> Report {
    let mut report = Report::new("algoH-vs-algoS", n);
    let mut friendly: Vec<Vec<TreePattern>> = vec![vec![]];
    for row in table_rows(3).into_iter().chain(table_rows(4)).chain(table_rows(5)) {
        if let Some(pat) = row_friendly_pattern(row) {
            friendly.push(vec![pat]);
        }
    }
    for pats in &friendly {
        let s_run = algorithm_s(n, pats);
        let h_run = AlgorithmH::new(n, pats).and_then(|h| h.collect_all());
        match (s_run, h_run) {
            (Ok(s), Ok(h)) => {
                let sv: Vec<String> = s.iter().map(|x| x.tree.to_string()).collect();
                let hv: Vec<String> = h.iter().map(|x| x.tree.to_string()).collect();
                report.check(sv == hv, || {
                    format!(
                        "order differs for {:?} at n={n}",
                        pats.iter().map(|p| p.compact()).collect::<Vec<_>>()
                    )
                });
            }
            (s, h) => {
                report.check(false, || {
                    format!("generator error: {:?} / {:?}", s.err(), h.err())
                });
            }
        }
    }
    report
}

/// Flipping any hyphenated edge of a table row leaves the avoider set
/// unchanged.
pub fn e_equality(n_max: usize) -> Report {
    let mut report = Report::new("e-equality", n_max);
    struct Case {
        base: TreePattern,
        flipped: TreePattern,
        label: String,
    }
    let mut cases = Vec::new();
    for row in table_rows(3).into_iter().chain(table_rows(4)).chain(table_rows(5)) {
        let shape = BinaryTree::parse(row.preorder).unwrap();
        for class in row.e_classes {
            for (pos, c) in class.chars().enumerate() {
                if c != '-' {
                    continue;
                }
                let base_str: String = class.chars().map(|c| if c == '-' { '0' } else { c }).collect();
                let base = TreePattern::from_shape_and_edges(
                    shape.clone(),
                    &parse_edge_string(&base_str),
                )
                .unwrap();
                let mut flipped_str = base_str.clone();
                flipped_str.replace_range(pos..=pos, "1");
                let flipped = TreePattern::from_shape_and_edges(
                    shape.clone(),
                    &parse_edge_string(&flipped_str),
                )
                .unwrap();
                cases.push(Case {
                    base,
                    flipped,
                    label: format!("{} {class} position {}", row.preorder, pos + 1),
                });
            }
        }
    }
    for n in 1..=n_max {
        let results: Vec<Option<String>> = cases
            .par_iter()
            .map(|case| {
                let a = avoiders(n, std::slice::from_ref(&case.base));
                let b = avoiders(n, std::slice::from_ref(&case.flipped));
                if a == b {
                    None
                } else {
                    Some(format!("{} (n={n}): {} vs {}", case.label, a.len(), b.len()))
                }
            })
            .collect();
        for r in results {
            report.check(r.is_none(), || r.unwrap());
        }
    }
    report
}

fn parse_edge_string(s: &str) -> Vec<crate::pattern::EdgeType> {
    s.chars()
        .map(|c| match c {
            '1' => crate::pattern::EdgeType::Contiguous,
            'h' => crate::pattern::EdgeType::Branch,
            _ => crate::pattern::EdgeType::NonContiguous,
        })
        .collect()
}

/// With 231 added, the compiled mesh pattern and its one-cell reduction have
/// identical avoiders. The law's hypothesis is friendliness: every friendly
/// table member is checked (patterns without the removable cell coincide
/// trivially and are included too), and without 231 the two patterns differ
/// for the known example family.
pub fn exchange(n_max: usize) -> Report {
    let mut report = Report::new("exchange", n_max);
    let mut pats: Vec<TreePattern> = Vec::new();
    for row in table_rows(3).into_iter().chain(table_rows(4)).chain(table_rows(5)) {
        for pat in row_member_patterns(row) {
            let trivial =
                MeshPattern::from_tree_pattern(&pat) == MeshPattern::sigma_minus(&pat);
            if pat.is_friendly() || trivial {
                pats.push(pat);
            }
        }
    }
    let p231 = Permutation::parse("231").unwrap();
    for n in 1..=n_max {
        let perms: Vec<Permutation> = all_perms(n)
            .into_iter()
            .filter(|p| !p.contains_classical(&p231))
            .collect();
        let grids: Vec<PermGrid> = perms.iter().map(PermGrid::new).collect();
        let failures: Vec<String> = pats
            .par_iter()
            .filter_map(|pat| {
                let full = MeshPattern::from_tree_pattern(pat);
                let minus = MeshPattern::sigma_minus(pat);
                if full == minus {
                    return None;
                }
                let bad = grids
                    .iter()
                    .zip(&perms)
                    .find(|(g, _)| full.contained_in_grid(g) != minus.contained_in_grid(g));
                bad.map(|(_, p)| format!("{} differs at {} (n={n})", pat.compact(), p))
            })
            .collect();
        report.checks += pats.len();
        report.failures.extend(failures.into_iter().take(5));
    }

    // without 231 the two patterns genuinely differ for this family
    let witness = TreePattern::parse("15234:1011").unwrap();
    let full = MeshPattern::from_tree_pattern(&witness);
    let minus = MeshPattern::sigma_minus(&witness);
    let mut found = None;
    for n in 1..=9 {
        let diff = all_perms(n)
            .par_iter()
            .map(|p| {
                let g = PermGrid::new(p);
                (full.contained_in_grid(&g), minus.contained_in_grid(&g))
            })
            .filter(|&(a, b)| a != b)
            .count();
        if diff > 0 {
            found = Some((n, diff));
            break;
        }
    }
    report.check(found.is_some(), || {
        "plain avoiders of the full and reduced mesh pattern never differ for 15234:1011".into()
    });
    report
}

/// Reduced mesh patterns of friendly rows are tame; the unreduced pattern
/// fails the third tameness condition whenever the top edge is contiguous.
pub fn friendly_tame() -> Report {
    let mut report = Report::new("friendly-tame", 0);
    let mut untame_full = 0usize;
    for row in table_rows(3).into_iter().chain(table_rows(4)).chain(table_rows(5)) {
        let shape = BinaryTree::parse(row.preorder).unwrap();
        for class in row.friendly {
            for v in class_string_members(class) {
                let syms: Vec<crate::pattern::EdgeType> = (0..row.k - 1)
                    .map(|i| {
                        if v & (1 << i) != 0 {
                            crate::pattern::EdgeType::Contiguous
                        } else {
                            crate::pattern::EdgeType::NonContiguous
                        }
                    })
                    .collect();
                let pat = TreePattern::from_shape_and_edges(shape.clone(), &syms).unwrap();
                if !pat.is_friendly() {
                    report.check(false, || {
                        format!("{} listed friendly but is not", pat.compact())
                    });
                    continue;
                }
                let minus = MeshPattern::sigma_minus(&pat);
                report.check(minus.is_tame().unwrap_or(false), || {
                    format!("sigma-minus of {} is not tame", pat.compact())
                });
                let k = pat.k();
                if pat.edge(k) == crate::pattern::EdgeType::Contiguous {
                    // the unreduced pattern fails condition (iii) exactly
                    // when the removable cell interacts with cells coming
                    // from a right branch under the largest vertex
                    let full = MeshPattern::from_tree_pattern(&pat);
                    let left_child = shape.left(k).unwrap();
                    let expected = if shape.right(left_child).is_some() {
                        untame_full += 1;
                        Some(3)
                    } else {
                        None
                    };
                    report.check(full.tame_violation() == expected, || {
                        format!(
                            "full mesh of {}: violation {:?}, expected {:?}",
                            pat.compact(),
                            full.tame_violation(),
                            expected
                        )
                    });
                }
            }
        }
    }
    report.check(untame_full > 0, || {
        "no friendly table pattern exercised the condition-3 failure".into()
    });
    report
}

/// Staggered patterns: the branch-block bijection restricts to a bijection
/// between the avoiders and partitions avoiding the pattern's image.
pub fn staggered(n_max: usize) -> Report {
    let mut report = Report::new("staggered", n_max);
    for row in staggered_rows() {
        let pat = TreePattern::parse(row.pattern).unwrap();
        let side = if row.left { Side::Left } else { Side::Right };
        let oriented = if row.left { pat.clone() } else { pat.mirror() };
        let Some(sig) = staggered_signature(&oriented) else {
            report.check(false, || format!("{} is not staggered", row.pattern));
            continue;
        };
        report.check(sig.bijection_conditions_hold(), || {
            format!("{} fails the side conditions", row.pattern)
        });
        // the signature formula reproduces the left-branch blocks of the
        // oriented pattern
        let from_sig: String = rgs_pattern_of_staggered(&sig)
            .iter()
            .map(|d| char::from_digit(*d as u32, 10).unwrap())
            .collect();
        let oriented_blocks = partition_from_tree(oriented.shape(), Side::Left).to_string();
        report.check(from_sig == oriented_blocks, || {
            format!(
                "{}: signature gives {}, blocks give {}",
                row.pattern, from_sig, oriented_blocks
            )
        });
        // the printed column is the pattern's own block image under the
        // row's map
        let image = partition_from_tree(pat.shape(), side).to_string();
        report.check(image == row.rgs, || {
            format!("{}: image {} expected {}", row.pattern, image, row.rgs)
        });
        // The witnessing bijection always goes through left-branch blocks of
        // the staggered orientation: avoiders map onto the partitions
        // avoiding the oriented pattern's image. The printed (possibly
        // reflected) pattern is validated at the counting level.
        let printed: Vec<u8> = row.rgs.bytes().map(|b| b - b'0').collect();
        let oriented_patt: Vec<u8> = oriented_blocks.bytes().map(|b| b - b'0').collect();
        for n in 1..=n_max {
            let dom = avoiders(n, std::slice::from_ref(&pat));
            let mut images: HashSet<String> = HashSet::new();
            let mut ok = true;
            for t in &dom {
                let host = if row.left { t.clone() } else { t.mirror() };
                let x = partition_from_tree(&host, Side::Left);
                if x.contains_pattern(&oriented_patt) || !images.insert(x.to_string()) {
                    ok = false;
                    break;
                }
            }
            let mut target = 0usize;
            let mut printed_count = 0usize;
            for x in all_rgs(n) {
                if x.contains_pattern(&[1, 2, 1, 2]) {
                    continue;
                }
                if !x.contains_pattern(&oriented_patt) {
                    target += 1;
                }
                if !x.contains_pattern(&printed) {
                    printed_count += 1;
                }
            }
            report.check(ok && images.len() == target, || {
                format!(
                    "{} at n={n}: {} trees, {} images, {} partitions",
                    row.pattern,
                    dom.len(),
                    images.len(),
                    target
                )
            });
            report.check(dom.len() == printed_count, || {
                format!(
                    "{} at n={n}: {} trees but {} partitions avoid the printed pattern {}",
                    row.pattern,
                    dom.len(),
                    printed_count,
                    row.rgs
                )
            });
        }
    }
    report
}

fn two_colored_law(
    report: &mut Report,
    pattern: &str,
    words: &[&[Step]],
    n_max: usize,
) {
    let pat = TreePattern::parse(pattern).unwrap();
    for n in 1..=n_max {
        let lhs: BTreeSet<String> = avoiders(n, std::slice::from_ref(&pat))
            .iter()
            .map(|t| motzkin_two_colored_from_tree(t).unwrap().to_string())
            .collect();
        let rhs: BTreeSet<String> = all_two_colored(n - 1)
            .into_iter()
            .filter(|p| words.iter().all(|w| !p.contains_factor(w)))
            .map(|p| p.to_string())
            .collect();
        report.check(lhs == rhs, || {
            format!(
                "{pattern} at n={n}: {} trees map onto {} paths",
                lhs.len(),
                rhs.len()
            )
        });
    }
}

/// The four-vertex substring laws of the 2-colored map.
pub fn motz24(n_max: usize) -> Report {
    use Step::{FlatLeft as L, FlatRight as R, Up as U};
    let mut report = Report::new("motz24", n_max);
    let d = Step::Down;
    two_colored_law(&mut report, "2134:111", &[&[U, U], &[U, R]], n_max);
    two_colored_law(&mut report, "3214:111", &[&[d, U], &[d, L]], n_max);
    two_colored_law(&mut report, "1324:111", &[&[U, U], &[R, U]], n_max);
    two_colored_law(
        &mut report,
        "1243:111",
        &[
            &[U, U, U],
            &[U, U, L],
            &[U, R, U],
            &[U, R, L],
            &[R, U, U],
            &[R, U, L],
            &[R, R, U],
            &[R, R, L],
        ],
        n_max,
    );
    // the four families share one counting sequence
    let series: Vec<Vec<u64>> = ["2134:111", "3214:111", "1324:111", "1243:111"]
        .iter()
        .map(|s| {
            count_series(&[TreePattern::parse(s).unwrap()], n_max, Engine::Brute)
                .unwrap()
                .counts
        })
        .collect();
    report.check(series.windows(2).all(|w| w[0] == w[1]), || {
        "the four classes are not equinumerous".into()
    });
    report.check(
        series[0] == fixture("A025242").unwrap()[..n_max.min(12)],
        || "counts do not match the expected sequence".into(),
    );
    report
}

/// The five-vertex substring laws of the 2-colored map.
pub fn motz25(n_max: usize) -> Report {
    use Step::{FlatLeft as L, FlatRight as R, Up as U};
    let mut report = Report::new("motz25", n_max);
    let d = Step::Down;
    two_colored_law(&mut report, "21435:1111", &[&[U, U]], n_max);
    two_colored_law(&mut report, "42135:1111", &[&[d, U]], n_max);
    two_colored_law(
        &mut report,
        "13254:1111",
        &[&[U, U, U], &[U, U, L], &[R, U, U], &[R, U, L]],
        n_max,
    );
    let series: Vec<Vec<u64>> = ["21435:1111", "42135:1111", "13254:1111"]
        .iter()
        .map(|s| {
            count_series(&[TreePattern::parse(s).unwrap()], n_max, Engine::Brute)
                .unwrap()
                .counts
        })
        .collect();
    report.check(series.windows(2).all(|w| w[0] == w[1]), || {
        "the three classes are not equinumerous".into()
    });
    report.check(
        series[0] == fixture("A159771").unwrap()[..n_max.min(12)],
        || "counts do not match the expected sequence".into(),
    );
    report
}

/// Round trips and image characterizations of every bijection.
pub fn bijection_suite(n_max: usize, n_max_catastrophes: usize) -> Report {
    let mut report = Report::new("bijections", n_max);
    for scheme in [BitScheme::S132, BitScheme::S123, BitScheme::S213] {
        for n in 1..=n_max {
            let dom = avoiders(n, std::slice::from_ref(scheme.forbidden()));
            let mut seen = HashSet::new();
            let mut ok = dom.len() == 1 << (n - 1);
            for t in &dom {
                match bits_from_tree(t, scheme) {
                    Ok(bits)
                        if bits.len() == n - 1
                            && seen.insert(bits.clone())
                            && &bits_to_tree(&bits, scheme) == t => {}
                    _ => {
                        ok = false;
                        break;
                    }
                }
            }
            report.check(ok && seen.len() == 1 << (n - 1), || {
                format!("bitstring scheme {scheme:?} fails at n={n}")
            });
        }
    }

    let plain = TreePattern::parse("123:10").unwrap();
    let lf = TreePattern::parse("4123:010").unwrap();
    let cat = TreePattern::parse("41235:0100").unwrap();
    for n in 1..=n_max {
        report.check(
            image_law(n, &plain, all_motzkin(n), |t| motzkin_from_tree_123(t), |p| {
                motzkin_to_tree_123(p)
            }),
            || format!("plain Motzkin bijection fails at n={n}"),
        );
        report.check(
            image_law(n, &lf, all_left_factors(n - 1), |t| {
                motzkin_left_factor_from_tree(t)
            }, |p| motzkin_left_factor_to_tree(p)),
            || format!("left factor bijection fails at n={n}"),
        );
        let all: Vec<BinaryTree> = all_trees(n).iter().cloned().collect();
        let mut seen = HashSet::new();
        let mut ok = true;
        for t in &all {
            match motzkin_two_colored_from_tree(t) {
                Ok(p)
                    if p.len() == n - 1
                        && seen.insert(p.to_string())
                        && motzkin_two_colored_to_tree(&p).ok().as_ref() == Some(t) => {}
                _ => {
                    ok = false;
                    break;
                }
            }
        }
        report.check(ok && seen.len() == all_two_colored(n - 1).len(), || {
            format!("2-colored bijection fails at n={n}")
        });
        for side in [Side::Left, Side::Right] {
            let mut seen = HashSet::new();
            let mut ok = true;
            for t in &all {
                let x = partition_from_tree(t, side);
                if x.contains_pattern(&[1, 2, 1, 2])
                    || !seen.insert(x.to_string())
                    || partition_to_tree(&x, side).ok().as_ref() != Some(t)
                {
                    ok = false;
                    break;
                }
            }
            let noncrossing = all_rgs(n)
                .iter()
                .filter(|x| !x.contains_pattern(&[1, 2, 1, 2]))
                .count();
            report.check(ok && seen.len() == noncrossing, || {
                format!("partition bijection ({side:?}) fails at n={n}")
            });
        }
    }
    for n in 1..=n_max_catastrophes {
        report.check(
            image_law(n, &cat, all_catastrophes(n), |t| {
                motzkin_catastrophes_from_tree(t)
            }, |p| motzkin_catastrophes_to_tree(p)),
            || format!("catastrophe bijection fails at n={n}"),
        );
    }
    report
}

fn image_law(
    n: usize,
    pat: &TreePattern,
    targets: Vec<MotzkinPath>,
    forward: impl Fn(&BinaryTree) -> Result<MotzkinPath>,
    back: impl Fn(&MotzkinPath) -> Result<BinaryTree>,
) -> bool {
    let dom = avoiders(n, std::slice::from_ref(pat));
    if dom.len() != targets.len() {
        return false;
    }
    let mut seen = HashSet::new();
    for t in &dom {
        let Ok(p) = forward(t) else { return false };
        if !seen.insert(p.to_string()) {
            return false;
        }
        if back(&p).ok().as_ref() != Some(t) {
            return false;
        }
    }
    let want: HashSet<String> = targets.iter().map(|p| p.to_string()).collect();
    seen == want
}

/// Each preset transform is a bijection between its avoider classes.
pub fn wilf_transforms(n_max: usize) -> Report {
    let mut report = Report::new("wilf", n_max);
    let n = n_max;
    for (name, cfg) in preset_configs() {
        let q = cfg.source_pattern();
        let q2 = cfg.target_pattern();
        let dom = avoiders(n, &[q.clone()]);
        let want: HashSet<BinaryTree> = avoiders(n, &[q2.clone()]).into_iter().collect();
        let mut img = HashSet::new();
        let mut ok = true;
        for t in &dom {
            match wilf_transform(t, &cfg, TransformDir::Forward) {
                Ok(u) => {
                    if !want.contains(&u)
                        || !img.insert(u.clone())
                        || wilf_transform(&u, &cfg, TransformDir::Inverse).ok().as_ref() != Some(t)
                    {
                        ok = false;
                        break;
                    }
                }
                Err(_) => {
                    ok = false;
                    break;
                }
            }
        }
        report.check(ok && img.len() == want.len(), || {
            format!(
                "{name} ({} -> {}) is not a bijection at n={n}",
                q.compact(),
                q2.compact()
            )
        });
    }
    report
}

/// With no patterns the greedy code is the classical rotation Gray code and
/// its permutation shadow is the greedy jump code on 231-avoiders.
pub fn baseline_gray(n: usize) -> Report {
    let mut report = Report::new("baseline", n);
    let run = algorithm_s(n, &[]).unwrap();
    report.check(run.len() as u64 == crate::tree::catalan(n), || {
        format!("visited {} trees", run.len())
    });
    report.check(
        run.iter().skip(1).all(|s| s.op.map_or(false, |o| o.steps == 1)),
        || "a step used more than one rotation".into(),
    );
    let trees: Vec<BinaryTree> = run.iter().map(|s| s.tree.clone()).collect();
    let gray = verify_gray(&trees, Some(&all_trees(n)));
    report.check(gray.ok, || gray.first_violation.clone().unwrap_or_default());

    let p231 = Permutation::parse("231").unwrap();
    let member = move |q: &Permutation| !q.contains_classical(&p231);
    let jrun = algorithm_j(n, &member);
    report.check(!jrun.ambiguous_stop, || "jump run stopped ambiguous".into());
    let shadow: Vec<String> = trees.iter().map(|t| t.preorder().to_string()).collect();
    let jumps: Vec<String> = jrun.perms.iter().map(|p| p.to_string()).collect();
    report.check(shadow == jumps, || {
        "tree shadow and jump sequence differ".into()
    });
    report
}

/// The closed recurrence reproduces the brute-force counts of its class.
pub fn recurrence_12435(n_max: usize) -> Report {
    let mut report = Report::new("lem-12435", n_max);
    let pat = TreePattern::parse("12435:1000").unwrap();
    let counts = count_series(&[pat], n_max, Engine::Brute).unwrap().counts;
    let rec = recurrence_a176677(n_max);
    report.check(counts[..] == rec[1..=n_max], || {
        format!("recurrence {rec:?} vs counts {counts:?}")
    });
    if n_max >= 12 {
        report.check(
            counts[..12] == fixture("A176677").unwrap()[..],
            || "counts do not match the fixture".into(),
        );
    }
    report
}

/// Brute-force counts of every table row match the printed sequence values,
/// and the friendly and don't-care columns are reproduced.
pub fn tables(n_max: usize) -> Report {
    let mut report = Report::new("tables", n_max);
    for k in 3..=5 {
        let rows = table_rows(k);
        let pat_sets: Vec<Vec<TreePattern>> =
            rows.iter().map(|r| vec![row_base_pattern(r)]).collect();
        let counts = crate::counting::brute_avoider_counts(&pat_sets, n_max);
        for (row, got) in rows.iter().zip(&counts) {
            let want = fixture(row.oeis).unwrap();
            report.check(got[..] == want[..n_max.min(12)], || {
                format!(
                    "{} {:?}: counts {:?} expected {:?}",
                    row.preorder,
                    row.e_classes,
                    got,
                    &want[..n_max.min(12)]
                )
            });
        }
        let rep = table_report(k, 1).unwrap();
        for row in rows {
            let found = rep.rows.iter().find(|r| {
                r.preorder == row.preorder
                    && row.e_classes.iter().all(|c| r.e_cover.contains(&c.to_string()))
            });
            report.check(found.is_some(), || {
                format!(
                    "computed classes of {} miss the printed row {:?}",
                    row.preorder, row.e_classes
                )
            });
            // the friendly column lists the friendly members of the printed
            // subcubes themselves
            let shape = BinaryTree::parse(row.preorder).unwrap();
            let mut member_vecs: Vec<u32> = row
                .e_classes
                .iter()
                .flat_map(|c| class_string_members(c))
                .collect();
            member_vecs.sort_unstable();
            member_vecs.dedup();
            let friendly_vecs: Vec<u32> = member_vecs
                .into_iter()
                .filter(|&v| {
                    let syms: Vec<crate::pattern::EdgeType> = (0..row.k - 1)
                        .map(|i| {
                            if v & (1 << i) != 0 {
                                crate::pattern::EdgeType::Contiguous
                            } else {
                                crate::pattern::EdgeType::NonContiguous
                            }
                        })
                        .collect();
                    TreePattern::from_shape_and_edges(shape.clone(), &syms)
                        .unwrap()
                        .is_friendly()
                })
                .collect();
            let mut computed = crate::counting::maximal_subcubes(&friendly_vecs, row.k - 1);
            let mut printed: Vec<String> = row.friendly.iter().map(|s| s.to_string()).collect();
            computed.sort();
            printed.sort();
            report.check(computed == printed, || {
                format!(
                    "friendly column of {} {:?}: computed {:?}, printed {:?}",
                    row.preorder, row.e_classes, computed, printed
                )
            });
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_scale_suites_pass() {
        for (name, n) in [
            ("thm-bijection", 5),
            ("algoS-vs-brute", 6),
            ("algoH-vs-algoS", 6),
            ("e-equality", 6),
            ("exchange", 5),
            ("friendly-tame", 0),
            ("staggered", 5),
            ("motz24", 6),
            ("motz25", 6),
            ("bijections", 6),
            ("wilf", 6),
            ("baseline", 4),
            ("lem-12435", 6),
            ("tables", 6),
        ] {
            let rep = run_suite(name, n).unwrap();
            assert!(rep.passed(), "{}: {:?}", rep.summary(), rep.failures);
        }
        assert!(run_suite("nope", 3).is_err());
    }
}
