//! Small-set helpers over `u64` masks.
//!
//! Enumeration over subsets of lattice elements or ground sets uses masks, so
//! those routines accept at most 64 elements.

pub type Mask = u64;

pub const MAX_MASK_ELEMENTS: usize = 64;

pub fn from_indices(indices: &[usize]) -> Mask {
    indices.iter().fold(0, |m, &i| m | (1 << i))
}

pub fn to_indices(mask: Mask) -> Vec<usize> {
    iter(mask).collect()
}

pub fn iter(mut mask: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

pub fn full(n: usize) -> Mask {
    if n >= 64 {
        Mask::MAX
    } else {
        (1 << n) - 1
    }
}

pub fn contains(mask: Mask, i: usize) -> bool {
    mask >> i & 1 == 1
}

/// Total order on masks matching lexicographic order of their sorted index
/// vectors, with shorter sets first.
pub fn canonical_cmp(a: Mask, b: Mask) -> std::cmp::Ordering {
    a.count_ones()
        .cmp(&b.count_ones())
        .then_with(|| lex_cmp(a, b))
}

/// Lexicographic order of sorted index vectors.
pub fn lex_cmp(a: Mask, b: Mask) -> std::cmp::Ordering {
    iter(a).cmp(iter(b))
}

/// Sorts masks canonically and removes duplicates.
pub fn canonicalize(masks: &mut Vec<Mask>) {
    masks.sort_unstable_by(|&a, &b| canonical_cmp(a, b));
    masks.dedup();
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_and_order() {
        assert_eq!(to_indices(from_indices(&[5, 0, 3])), vec![0, 3, 5]);
        // {0,5} < {1,2} lexicographically even though 0b100001 > 0b110
        assert!(lex_cmp(from_indices(&[0, 5]), from_indices(&[1, 2])).is_lt());
        let mut v = vec![0b110, 0b1, 0b100001, 0b1];
        canonicalize(&mut v);
        assert_eq!(v, vec![0b1, 0b100001, 0b110]);
        assert_eq!(full(64), u64::MAX);
    }
}
