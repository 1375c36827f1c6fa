//! Embedded count fixtures: the known sequences matched by pattern classes
//! on up to five vertices, the per-class rows (edge classes, friendly
//! members, sequence ids), and the staggered-pattern correspondences.
//! All values are offline fixtures; nothing here talks to the network.

/// First twelve terms of each referenced sequence, as used by the class
/// tables (indexed from n = 1).
pub const OEIS_FIXTURES: &[(&str, [u64; 12])] = &[
    ("A000079", [1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024, 2048]),
    ("A001006", [1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798, 15511]),
    ("A001519", [1, 2, 5, 13, 34, 89, 233, 610, 1597, 4181, 10946, 28657]),
    ("A005773", [1, 2, 5, 13, 35, 96, 267, 750, 2123, 6046, 17303, 49721]),
    ("A025242", [1, 2, 5, 13, 35, 97, 275, 794, 2327, 6905, 20705, 62642]),
    ("A036765", [1, 2, 5, 13, 36, 104, 309, 939, 2905, 9118, 28964, 92940]),
    ("A007051", [1, 2, 5, 14, 41, 122, 365, 1094, 3281, 9842, 29525, 88574]),
    ("A054391", [1, 2, 5, 14, 41, 123, 374, 1147, 3538, 10958, 34042, 105997]),
    ("A365508", [1, 2, 5, 14, 41, 123, 375, 1157, 3603, 11304, 35683, 113219]),
    ("A176677", [1, 2, 5, 14, 41, 123, 375, 1158, 3615, 11393, 36209, 115940]),
    ("A365509", [1, 2, 5, 14, 41, 124, 383, 1202, 3819, 12255, 39651, 129190]),
    ("A159768", [1, 2, 5, 14, 41, 124, 385, 1221, 3939, 12886, 42648, 142544]),
    ("A159769", [1, 2, 5, 14, 41, 124, 384, 1212, 3885, 12614, 41400, 137132]),
    ("A159770", [1, 2, 5, 14, 41, 124, 384, 1211, 3875, 12548, 41040, 135370]),
    ("A159771", [1, 2, 5, 14, 41, 124, 385, 1220, 3929, 12822, 42309, 140922]),
    ("A159772", [1, 2, 5, 14, 41, 124, 384, 1210, 3865, 12482, 40677, 133572]),
    ("A159773", [1, 2, 5, 14, 41, 124, 384, 1212, 3885, 12613, 41389, 137055]),
    ("A036766", [1, 2, 5, 14, 41, 125, 393, 1265, 4147, 13798, 46476, 158170]),
    ("A365510", [1, 2, 5, 14, 41, 123, 376, 1168, 3678, 11716, 37688, 122261]),
];

pub fn fixture(id: &str) -> Option<&'static [u64; 12]> {
    OEIS_FIXTURES.iter().find(|(s, _)| *s == id).map(|(_, v)| v)
}

/// One row of the classification tables: a pattern shape (preorder), the
/// edge classes printed for the row (strings over `0`, `1`, `-`), the
/// friendly members, the matching sequence, and whether the match is only
/// verified experimentally.
pub struct TableRow {
    pub k: usize,
    pub preorder: &'static str,
    pub e_classes: &'static [&'static str],
    pub friendly: &'static [&'static str],
    pub oeis: &'static str,
    pub unproven: bool,
}

const fn row(
    k: usize,
    preorder: &'static str,
    e_classes: &'static [&'static str],
    friendly: &'static [&'static str],
    oeis: &'static str,
) -> TableRow {
    TableRow {
        k,
        preorder,
        e_classes,
        friendly,
        oeis,
        unproven: false,
    }
}

pub const TABLE_ROWS: &[TableRow] = &[
    // three vertices
    row(3, "123", &["0-"], &[], "A000079"),
    row(3, "123", &["1-"], &[], "A001006"),
    row(3, "132", &["--"], &["0-", "-0"], "A000079"),
    row(3, "213", &["--"], &[], "A000079"),
    // four vertices
    row(4, "1234", &["00-"], &[], "A001519"),
    row(4, "1234", &["01-"], &[], "A005773"),
    row(4, "1234", &["10-"], &[], "A025242"),
    row(4, "1234", &["11-"], &[], "A036765"),
    row(4, "1243", &["0--"], &["00-", "0-0"], "A001519"),
    row(4, "1243", &["1--"], &[], "A025242"),
    row(4, "1324", &["0--"], &[], "A001519"),
    row(4, "1324", &["1--"], &[], "A025242"),
    row(4, "1423", &["0--", "-0-"], &["0--", "-0-"], "A001519"),
    row(4, "1423", &["11-"], &[], "A025242"),
    row(4, "1432", &["-0-"], &["-0-"], "A001519"),
    row(4, "1432", &["-1-"], &["01-"], "A005773"),
    row(4, "2134", &["-0-"], &[], "A001519"),
    row(4, "2134", &["-1-"], &[], "A025242"),
    row(4, "2143", &["-0-"], &["-0-"], "A001519"),
    row(4, "2143", &["-1-"], &["-10"], "A025242"),
    // five vertices
    row(5, "12345", &["000-"], &[], "A007051"),
    row(5, "12345", &["001-"], &[], "A054391"),
    row(5, "12345", &["010-"], &[], "A365508"),
    row(5, "12345", &["011-"], &[], "A159772"),
    row(5, "12345", &["100-"], &[], "A176677"),
    row(5, "12345", &["101-"], &[], "A365509"),
    row(5, "12345", &["110-"], &[], "A159768"),
    row(5, "12345", &["111-"], &[], "A036766"),
    row(5, "12354", &["00--"], &["000-", "00-0"], "A007051"),
    row(5, "12354", &["01--"], &[], "A365508"),
    row(5, "12354", &["10--"], &[], "A176677"),
    row(5, "12354", &["11--"], &[], "A159768"),
    row(5, "12435", &["00--"], &[], "A007051"),
    row(5, "12435", &["01--"], &[], "A365508"),
    row(5, "12435", &["10--"], &[], "A176677"),
    row(5, "12435", &["11--"], &[], "A159768"),
    row(5, "12534", &["00--", "0-0-"], &["00--", "0-0-"], "A007051"),
    row(5, "12534", &["011-"], &[], "A365508"),
    row(5, "12534", &["10--", "1-0-"], &[], "A176677"),
    row(5, "12534", &["111-"], &[], "A159769"),
    row(5, "12543", &["0-0-"], &["0-0-"], "A007051"),
    row(5, "12543", &["0-1-"], &["001-"], "A054391"),
    row(5, "12543", &["1-0-"], &[], "A176677"),
    row(5, "12543", &["101-"], &[], "A365509"),
    row(5, "12543", &["111-"], &[], "A159770"),
    row(5, "13245", &["0-0-"], &[], "A007051"),
    row(5, "13245", &["0-1-"], &[], "A365508"),
    row(5, "13245", &["1-0-"], &[], "A365510"),
    row(5, "13245", &["1-1-"], &[], "A159768"),
    row(5, "13254", &["0-0-"], &["0-0-"], "A007051"),
    row(5, "13254", &["0-1-"], &["0-10"], "A365508"),
    row(5, "13254", &["1-0-"], &[], "A365510"),
    row(5, "13254", &["1-1-"], &[], "A159771"),
    row(5, "14235", &["00--"], &[], "A007051"),
    row(5, "14235", &["01--"], &[], "A365508"),
    row(5, "14235", &["10--"], &[], "A176677"),
    row(5, "14235", &["11--"], &[], "A159769"),
    row(5, "14325", &["00--"], &[], "A007051"),
    row(5, "14325", &["01--"], &[], "A365508"),
    row(5, "14325", &["10--"], &[], "A176677"),
    row(5, "14325", &["11--"], &[], "A159770"),
    row(5, "15234", &["0-0-", "-00-"], &["0-0-", "-00-"], "A007051"),
    row(5, "15234", &["0-1-", "-01-"], &["0-1-", "-01-"], "A054391"),
    row(5, "15234", &["110-"], &[], "A365510"),
    row(5, "15234", &["111-"], &[], "A159769"),
    row(5, "15243", &["-0--", "0-0-"], &["-0--", "0-0-"], "A007051"),
    row(5, "15243", &["011-"], &["011-"], "A365508"),
    row(5, "15243", &["110-"], &[], "A365510"),
    row(5, "15243", &["111-"], &[], "A159771"),
    row(5, "15324", &["-0--"], &["-0--"], "A007051"),
    row(5, "15324", &["01--"], &["01--"], "A365508"),
    row(5, "15324", &["11--"], &[], "A159770"),
    row(5, "15423", &["-0--"], &["-0--"], "A007051"),
    row(5, "15423", &["01--"], &["01--"], "A365508"),
    row(5, "15423", &["-10-"], &["010-"], "A365508"),
    row(5, "15423", &["111-"], &[], "A159770"),
    row(5, "15432", &["-00-"], &["-00-"], "A007051"),
    row(5, "15432", &["-01-"], &["-01-"], "A054391"),
    row(5, "15432", &["-10-"], &["010-"], "A365508"),
    row(5, "15432", &["-11-"], &["011-"], "A159772"),
    row(5, "21345", &["-00-"], &[], "A007051"),
    row(5, "21345", &["-01-"], &[], "A054391"),
    row(5, "21345", &["-10-"], &[], "A365510"),
    row(5, "21345", &["-11-"], &[], "A159768"),
    row(5, "21354", &["-0--"], &["-00-", "-0-0"], "A007051"),
    row(5, "21354", &["-10-"], &[], "A365510"),
    row(5, "21354", &["-11-"], &[], "A159773"),
    row(5, "21435", &["-0--"], &[], "A007051"),
    row(5, "21435", &["-1--"], &[], "A159771"),
    row(5, "21534", &["-0--"], &["-0--"], "A007051"),
    row(5, "21534", &["-10-"], &["-10-"], "A176677"),
    row(5, "21534", &["-11-"], &[], "A159769"),
    row(5, "21543", &["-00-"], &["-00-"], "A007051"),
    row(5, "21543", &["-01-"], &["-01-"], "A054391"),
    row(5, "21543", &["-10-"], &["-10-"], "A176677"),
    row(5, "21543", &["-11-"], &[], "A159769"),
    row(5, "31245", &["0-0-"], &[], "A007051"),
    row(5, "31245", &["0-1-"], &[], "A176677"),
    TableRow {
        k: 5,
        preorder: "31245",
        e_classes: &["1-0-"],
        friendly: &[],
        oeis: "A176677",
        unproven: true,
    },
    row(5, "31245", &["1-1-"], &[], "A159769"),
    row(5, "31254", &["0-0-"], &["0-0-"], "A007051"),
    row(5, "31254", &["0-1-", "1-0-"], &["0-10", "1-0-"], "A176677"),
    row(5, "31254", &["1-1-"], &["1-10"], "A159769"),
    row(5, "32145", &["0-0-"], &[], "A007051"),
    row(5, "32145", &["0-1-", "1-0-"], &[], "A176677"),
    row(5, "32145", &["1-1-"], &[], "A159769"),
];

/// Staggered correspondences: a tree pattern, the partition pattern its
/// branch-block image avoids, and which side's blocks are used.
pub struct StaggeredRow {
    pub pattern: &'static str,
    pub rgs: &'static str,
    /// true for left-branch blocks, false for right-branch blocks
    pub left: bool,
}

const fn srow(pattern: &'static str, rgs: &'static str, left: bool) -> StaggeredRow {
    StaggeredRow { pattern, rgs, left }
}

pub const STAGGERED_ROWS: &[StaggeredRow] = &[
    srow("123:11", "111", false),
    srow("132:10", "121", false),
    srow("213:10", "112", true),
    srow("213:01", "122", false),
    srow("1234:111", "1111", false),
    srow("1243:110", "1121", false),
    srow("4312:110", "1211", true),
    srow("1324:101", "1211", false),
    srow("4213:110", "1121", true),
    srow("1423:010", "1232", true),
    srow("1423:101", "1221", false),
    srow("4132:010", "1213", false),
    srow("1432:011", "1222", true),
    srow("4123:011", "1112", false),
    srow("2143:101", "1122", true),
    srow("12345:1111", "11111", false),
    srow("12354:1110", "11121", false),
    srow("54312:1110", "12111", true),
    srow("12435:1101", "11211", false),
    srow("12534:1101", "11221", false),
    srow("54132:1101", "12211", true),
    srow("13245:1011", "12111", false),
    srow("53214:1110", "11121", true),
    srow("14235:1011", "12211", false),
    srow("52143:1101", "11221", true),
    srow("15234:1011", "12221", false),
    srow("15243:0101", "12332", true),
    srow("51423:0101", "12213", false),
    srow("15243:1010", "12321", false),
    srow("15324:0110", "12232", true),
    srow("51324:0101", "12113", false),
    srow("15423:0110", "12322", true),
    srow("51243:0110", "11213", false),
    srow("15432:0111", "12222", true),
    srow("51234:0111", "11112", false),
    srow("21534:1010", "11232", true),
    srow("41325:0101", "12133", false),
    srow("21543:1011", "11222", true),
    srow("41235:0111", "11122", false),
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_have_unique_ids() {
        let mut ids: Vec<&str> = OEIS_FIXTURES.iter().map(|(s, _)| *s).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), OEIS_FIXTURES.len());
    }

    #[test]
    fn rows_reference_known_fixtures() {
        for r in TABLE_ROWS {
            assert!(fixture(r.oeis).is_some(), "missing fixture {}", r.oeis);
            assert_eq!(r.preorder.len(), r.k);
            for class in r.e_classes {
                assert_eq!(class.len(), r.k - 1, "bad class {class} in {}", r.preorder);
            }
            for f in r.friendly {
                assert_eq!(f.len(), r.k - 1);
            }
        }
        assert_eq!(TABLE_ROWS.iter().filter(|r| r.unproven).count(), 1);
    }

    #[test]
    fn row_classes_cover_every_edge_vector() {
        use std::collections::HashSet;
        let mut by_tree: std::collections::HashMap<&str, Vec<&TableRow>> = Default::default();
        for r in TABLE_ROWS {
            by_tree.entry(r.preorder).or_default().push(r);
        }
        for (pre, rows) in by_tree {
            let m = pre.len() - 1;
            let mut covered: HashSet<u32> = HashSet::new();
            for r in rows {
                for class in r.e_classes {
                    let hyphens: Vec<usize> = class
                        .chars()
                        .enumerate()
                        .filter(|(_, c)| *c == '-')
                        .map(|(i, _)| i)
                        .collect();
                    let base: u32 = class
                        .chars()
                        .enumerate()
                        .map(|(i, c)| if c == '1' { 1 << i } else { 0 })
                        .sum();
                    for mask in 0..(1u32 << hyphens.len()) {
                        let mut v = base;
                        for (bit, &pos) in hyphens.iter().enumerate() {
                            if mask & (1 << bit) != 0 {
                                v |= 1 << pos;
                            }
                        }
                        covered.insert(v);
                    }
                }
            }
            assert_eq!(covered.len(), 1usize << m, "classes of {pre} do not cover all vectors");
        }
    }
}
