use crate::packing::Quadruple;

/// Occurrence record for the curvatures `1..=bound` of one packing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvatureBitmap {
    root: Quadruple,
    bound: u64,
    words: Vec<u64>,
}

impl CurvatureBitmap {
    pub fn new(root: Quadruple, bound: u64) -> Self {
        let words = vec![0; bound.div_ceil(64) as usize];
        CurvatureBitmap { root, bound, words }
    }

    pub(crate) fn from_words(root: Quadruple, bound: u64, words: Vec<u64>) -> Self {
        debug_assert_eq!(words.len() as u64, bound.div_ceil(64));
        CurvatureBitmap { root, bound, words }
    }

    pub fn root(&self) -> Quadruple {
        self.root
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    /// Whether `m` is recorded; always false outside `1..=bound`.
    pub fn contains(&self, m: u64) -> bool {
        if m == 0 || m > self.bound {
            return false;
        }
        let i = m - 1;
        self.words[(i >> 6) as usize] >> (i & 63) & 1 == 1
    }

    /// Records `m`; values outside `1..=bound` are ignored.
    pub fn insert(&mut self, m: u64) {
        if m == 0 || m > self.bound {
            return;
        }
        let i = m - 1;
        self.words[(i >> 6) as usize] |= 1 << (i & 63);
    }

    pub fn len(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Recorded values in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as u64;
                w &= w - 1;
                Some(wi as u64 * 64 + b + 1)
            })
        })
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    pub(crate) fn words_mut(&mut self) -> &mut [u64] {
        &mut self.words
    }

    /// Bitwise union with a bitmap of the same bound.
    pub(crate) fn union_with(&mut self, other: &[u64]) {
        for (a, b) in self.words.iter_mut().zip(other) {
            *a |= b;
        }
    }
}
