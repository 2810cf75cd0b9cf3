//! Standard small lattices.

use super::Lattice;
use crate::bits;
use crate::Poset;

fn set_label(mask: u64, names: &[String]) -> String {
    let inner: Vec<&str> = bits::iter(mask).map(|i| names[i].as_str()).collect();
    format!("{{{}}}", inner.join(","))
}

/// The lattice of the given subsets of a ground set, ordered by inclusion.
/// Returns `None` if the family is not a lattice.
pub fn set_family_lattice(members: &[u64], names: &[String]) -> Option<Lattice> {
    let labels = members.iter().map(|&m| set_label(m, names)).collect();
    let poset = Poset::from_le_fn(labels, |i, j| members[i] & !members[j] == 0).ok()?;
    Lattice::from_poset(poset).ok()
}

/// All subsets of an `n`-set under inclusion.
pub fn boolean_lattice(n: usize) -> Lattice {
    let names: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let mut members: Vec<u64> = (0..1u64 << n).collect();
    bits::canonicalize(&mut members);
    set_family_lattice(&members, &names).expect("power set is a lattice")
}

/// `0 < 1 < ... < n-1`.
pub fn chain(n: usize) -> Lattice {
    let labels = (0..n).map(|i| i.to_string()).collect();
    Lattice::from_poset(Poset::from_le_fn(labels, |i, j| i <= j).expect("total order"))
        .expect("nonempty chain")
}

/// `M3`: bottom, three atoms, top.
pub fn diamond() -> Lattice {
    let labels = ["B", "a", "b", "c", "T"].map(String::from).to_vec();
    let p = Poset::from_covers(labels, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
        .expect("poset");
    Lattice::from_poset(p).expect("lattice")
}

/// `N5`: bottom, a two-chain and a single element, top.
pub fn pentagon() -> Lattice {
    let labels = ["B", "a", "b", "c", "T"].map(String::from).to_vec();
    let p = Poset::from_covers(labels, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]).expect("poset");
    Lattice::from_poset(p).expect("lattice")
}

/// The five-element lattice `B < 1 < 2 < T`, `B < 3 < T`.
pub fn two_chain_example() -> Lattice {
    let labels = ["B", "1", "2", "3", "T"].map(String::from).to_vec();
    let p = Poset::from_covers(labels, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]).expect("poset");
    Lattice::from_poset(p).expect("lattice")
}

/// `Λ_2n`: the empty set together with all subsets of a `2n`-set having at
/// least `n` elements, ordered by inclusion.
pub fn lambda(n: usize) -> Lattice {
    let names: Vec<String> = (1..=2 * n).map(|i| i.to_string()).collect();
    let mut members: Vec<u64> = (0..1u64 << (2 * n))
        .filter(|m| *m == 0 || m.count_ones() as usize >= n)
        .collect();
    bits::canonicalize(&mut members);
    set_family_lattice(&members, &names).expect("Λ is a lattice")
}
