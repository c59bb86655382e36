//! Word-slice bitset helpers shared by the grid detectors and the engine.

#[inline]
pub(crate) fn words_for(len: usize) -> usize {
    len.div_ceil(64).max(1)
}

#[inline]
pub(crate) fn set(words: &mut [u64], bit: usize) {
    words[bit / 64] |= 1 << (bit % 64);
}

#[inline]
pub(crate) fn clear(words: &mut [u64], bit: usize) {
    words[bit / 64] &= !(1 << (bit % 64));
}

#[inline]
pub(crate) fn test(words: &[u64], bit: usize) -> bool {
    words[bit / 64] >> (bit % 64) & 1 == 1
}

#[inline]
pub(crate) fn and_into(out: &mut [u64], a: &[u64], b: &[u64]) {
    for ((o, x), y) in out.iter_mut().zip(a).zip(b) {
        *o = x & y;
    }
}

#[inline]
pub(crate) fn and_not_assign(out: &mut [u64], a: &[u64]) {
    for (o, x) in out.iter_mut().zip(a) {
        *o &= !x;
    }
}

/// Sets bits `0..len` and clears the rest.
pub(crate) fn fill_ones(out: &mut [u64], len: usize) {
    for (k, o) in out.iter_mut().enumerate() {
        let lo = k * 64;
        *o = if len >= lo + 64 {
            u64::MAX
        } else if len > lo {
            (1u64 << (len - lo)) - 1
        } else {
            0
        };
    }
}

/// Clears bits `0..=bit`.
pub(crate) fn clear_through(out: &mut [u64], bit: usize) {
    let full = bit / 64;
    for o in out.iter_mut().take(full) {
        *o = 0;
    }
    let rem = bit % 64;
    out[full] &= if rem == 63 { 0 } else { !((2u64 << rem) - 1) };
}

/// True when `a & b` restricted to bits below `limit` is nonzero.
#[inline]
pub(crate) fn intersects_below(a: &[u64], b: &[u64], limit: usize) -> bool {
    let full = limit / 64;
    if a[..full].iter().zip(&b[..full]).any(|(x, y)| x & y != 0) {
        return true;
    }
    let rem = limit % 64;
    rem != 0 && a[full] & b[full] & ((1u64 << rem) - 1) != 0
}

pub(crate) fn iter_ones(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(k, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + b)
            }
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut w = vec![0u64; 3];
        for b in [0, 63, 64, 130] {
            set(&mut w, b);
        }
        assert_eq!(iter_ones(&w).collect::<Vec<_>>(), vec![0, 63, 64, 130]);
        assert!(test(&w, 64));
        clear(&mut w, 64);
        assert!(!test(&w, 64));
        let mut c = w.clone();
        clear_through(&mut c, 63);
        assert_eq!(iter_ones(&c).collect::<Vec<_>>(), vec![130]);
        let mut f = vec![0u64; 3];
        fill_ones(&mut f, 129);
        assert_eq!(iter_ones(&f).count(), 129);
        assert!(intersects_below(&w, &f, 1));
        assert!(!intersects_below(&w, &c, 130));
        assert!(intersects_below(&w, &f, 131));
    }
}
