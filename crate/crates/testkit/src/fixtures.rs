//! Small structures with known answers.

use cranklab::hereditary::HeredCollection;
use cranklab::{Caps, Poset, SbMatrix};

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// Structure matrix of the six-element poset `a..f` with `e` above
/// `a, b, c` and `f` above `b, c, d`.
pub const SIX_A: [&str; 6] = ["100010", "010011", "001011", "000101", "000010", "000001"];

/// Its complement.
pub const SIX_A_BAR: [&str; 6] = ["011101", "101100", "110100", "111010", "111101", "111110"];

pub fn six_element_poset() -> Poset {
    Poset::from_structure_matrix(
        labels(&["a", "b", "c", "d", "e", "f"]),
        SbMatrix::from_symbols(&SIX_A),
    )
    .expect("valid poset")
}

/// `six_element_poset` with `a` and `c` exchanged: `e` above `a, b, c` and
/// `f` above `a, b, d`.
pub fn six_element_poset_swapped() -> Poset {
    let p = six_element_poset();
    let swap = |x: usize| match x {
        0 => 2,
        2 => 0,
        x => x,
    };
    Poset::from_le_fn(p.labels().to_vec(), |i, j| p.le(swap(i), swap(j))).expect("valid poset")
}

/// Completion members of `six_element_poset_swapped`, as label strings.
pub const SIX_DM_SWAPPED: [&str; 9] = ["", "a", "b", "c", "d", "ab", "abce", "abdf", "abcdef"];

/// The hereditary collection on `1..5` generated by five 3-element bases
/// that satisfies point replacement but has no boolean representation.
pub fn five_point_collection() -> HeredCollection {
    let bases = [[1, 2, 3], [1, 2, 4], [2, 3, 5], [1, 4, 5], [3, 4, 5]]
        .map(|b| b.iter().fold(0u64, |m, &x| m | 1 << (x - 1)));
    HeredCollection::from_bases(labels(&["1", "2", "3", "4", "5"]), &bases, &Caps::default())
        .expect("valid collection")
}
