//! Lexicographic enumeration of size-`k` multisets over `0..n`, represented as
//! non-decreasing sequences, with ranking for chunked parallel scans.

/// `C(n, k)` in exact arithmetic, `None` on overflow.
pub fn binomial(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        acc = acc.checked_mul((n - i) as u128)? / (i as u128 + 1);
    }
    Some(acc)
}

/// Number of size-`k` multisets over `n` values: `C(n + k - 1, k)`.
pub fn multiset_count(n: usize, k: usize) -> Option<u128> {
    if n == 0 {
        return Some((k == 0) as u128);
    }
    binomial((n + k - 1) as u64, k as u64)
}

/// Iterator over multisets in lexicographic order, optionally starting at a rank.
#[derive(Clone, Debug)]
pub struct Multisets {
    n: usize,
    current: Vec<usize>,
    done: bool,
}

impl Multisets {
    pub fn new(n: usize, k: usize) -> Self {
        Multisets {
            n,
            current: vec![0; k],
            done: n == 0 && k > 0,
        }
    }

    /// Start at the multiset of the given lexicographic rank.
    pub fn from_rank(n: usize, k: usize, rank: u128) -> Self {
        match unrank(n, k, rank) {
            Some(current) => Multisets {
                n,
                current,
                done: false,
            },
            None => Multisets {
                n,
                current: Vec::new(),
                done: true,
            },
        }
    }
}

impl Iterator for Multisets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        // bump the rightmost entry that can grow, reset the tail to it
        match self.current.iter().rposition(|&v| v + 1 < self.n) {
            Some(i) => {
                let v = self.current[i] + 1;
                for x in &mut self.current[i..] {
                    *x = v;
                }
            }
            None => self.done = true,
        }
        Some(out)
    }
}

/// The multiset of lexicographic rank `rank`, or `None` if out of range.
pub fn unrank(n: usize, k: usize, mut rank: u128) -> Option<Vec<usize>> {
    if rank >= multiset_count(n, k)? {
        return None;
    }
    let mut out = Vec::with_capacity(k);
    let mut v = 0;
    for j in 0..k {
        let rest = k - j - 1;
        loop {
            // multisets with this prefix and entry j == v
            let block = multiset_count(n - v, rest)?;
            if rank < block {
                break;
            }
            rank -= block;
            v += 1;
        }
        out.push(v);
    }
    Some(out)
}

/// Lexicographic rank of a non-decreasing sequence.
pub fn rank(n: usize, ms: &[usize]) -> Option<u128> {
    let k = ms.len();
    let mut r = 0u128;
    let mut lo = 0;
    for (j, &x) in ms.iter().enumerate() {
        if x < lo || x >= n {
            return None;
        }
        for v in lo..x {
            r += multiset_count(n - v, k - j - 1)?;
        }
        lo = x;
    }
    Some(r)
}
