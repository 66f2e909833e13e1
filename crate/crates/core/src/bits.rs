//! Word-slice bitset helpers.

pub(crate) fn iter_ones(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            }
        })
    })
}

pub(crate) fn first_one(words: &[u64]) -> Option<usize> {
    words
        .iter()
        .position(|&w| w != 0)
        .map(|i| i * 64 + words[i].trailing_zeros() as usize)
}

/// Clears bits at positions `>= n`.
pub(crate) fn trim(words: &mut [u64], n: usize) {
    let full = n / 64;
    if full < words.len() {
        let rem = n % 64;
        words[full] &= if rem == 0 { 0 } else { (1u64 << rem) - 1 };
        for w in &mut words[full + 1..] {
            *w = 0;
        }
    }
}

pub(crate) fn count(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

pub(crate) fn is_empty(words: &[u64]) -> bool {
    words.iter().all(|&w| w == 0)
}

pub(crate) fn set(words: &mut [u64], i: usize) {
    words[i / 64] |= 1 << (i % 64);
}

pub(crate) fn clear(words: &mut [u64], i: usize) {
    words[i / 64] &= !(1 << (i % 64));
}

#[cfg(test)]
pub(crate) fn test(words: &[u64], i: usize) -> bool {
    words[i / 64] >> (i % 64) & 1 == 1
}

pub(crate) fn full(n: usize) -> Vec<u64> {
    let mut v = vec![u64::MAX; n.div_ceil(64)];
    trim(&mut v, n);
    v
}

/// `dst = a & b`.
pub(crate) fn and_into(dst: &mut [u64], a: &[u64], b: &[u64]) {
    for ((d, &x), &y) in dst.iter_mut().zip(a).zip(b) {
        *d = x & y;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut v = full(70);
        assert_eq!(count(&v), 70);
        clear(&mut v, 3);
        assert!(!test(&v, 3) && test(&v, 69));
        assert_eq!(iter_ones(&v).take(4).collect::<Vec<_>>(), vec![0, 1, 2, 4]);
        let mut w = vec![0u64; 2];
        set(&mut w, 65);
        assert_eq!(iter_ones(&w).collect::<Vec<_>>(), vec![65]);
        assert!(full(64).len() == 1 && count(&full(64)) == 64);
        assert!(is_empty(&[0u64; 3]));
    }
}
