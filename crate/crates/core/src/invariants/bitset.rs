/// Fixed-capacity vertex set used by the exact solvers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet { words: vec![0; n.div_ceil(64)] }
    }

    pub fn full(n: usize) -> Self {
        let mut s = VertexSet::empty(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    pub fn insert(&mut self, v: usize) {
        self.words[v / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        self.words[v / 64] &= !(1 << (v % 64));
    }

    pub fn contains(&self, v: usize) -> bool {
        self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & !b).collect(),
        }
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + b)
                }
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut a = VertexSet::empty(130);
        a.insert(3);
        a.insert(64);
        a.insert(129);
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![3, 64, 129]);
        assert_eq!(a.len(), 3);
        let full = VertexSet::full(130);
        assert_eq!(full.len(), 130);
        let rest = full.difference(&a);
        assert_eq!(rest.len(), 127);
        assert!(!rest.contains(64));
        assert_eq!(rest.intersection_len(&a), 0);
        a.remove(3);
        assert!(!a.contains(3));
        assert!(!a.is_empty());
    }
}
