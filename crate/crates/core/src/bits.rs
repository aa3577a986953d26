/// Subsets of `0..universe` with exactly `size` elements, as bitmasks in
/// increasing numeric order. Requires `universe <= 63`.
pub(crate) fn subsets_of_size(universe: u32, size: u32) -> impl Iterator<Item = u64> {
    assert!(universe <= 63);
    let limit: u64 = 1u64 << universe;
    let first: Option<u64> = (size <= universe).then(|| (1u64 << size) - 1);
    std::iter::successors(first, move |&s| {
        if s == 0 {
            return None;
        }
        // Gosper's hack
        let c = s & s.wrapping_neg();
        let r = s + c;
        Some((((r ^ s) >> 2) / c) | r)
    })
    .take_while(move |&s| s < limit)
}

pub(crate) fn members(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (mask != 0).then(|| {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            v
        })
    })
}
