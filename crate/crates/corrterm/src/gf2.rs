//! Dense bitset linear algebra over the two-element field, sized for chain
//! complexes with a few hundred basis elements per grading.

/// A vector over GF(2), packed into 64-bit words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitVec {
    words: Vec<u64>,
    len: usize,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, v: bool) {
        let mask = 1u64 << (i % 64);
        if v {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    /// Index of the lowest set bit.
    pub fn leading(&self) -> Option<usize> {
        for (w, word) in self.words.iter().enumerate() {
            if *word != 0 {
                return Some(w * 64 + word.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn ones(&self) -> Vec<usize> {
        (0..self.len).filter(|&i| self.get(i)).collect()
    }
}

/// A row-reduced spanning set supporting incremental insertion and
/// membership tests.
#[derive(Debug, Clone, Default)]
pub struct Span {
    /// Rows kept reduced: each has a distinct leading bit.
    rows: Vec<BitVec>,
}

impl Span {
    pub fn new() -> Self {
        Span::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the span; the remainder is zero iff `v` is in it.
    pub fn reduce(&self, mut v: BitVec) -> BitVec {
        loop {
            let Some(lead) = v.leading() else { return v };
            match self.rows.iter().find(|r| r.leading() == Some(lead)) {
                Some(row) => v.xor_assign(row),
                None => return v,
            }
        }
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v.clone()).is_zero()
    }

    /// Insert `v`; returns true if it enlarged the span.
    pub fn insert(&mut self, v: BitVec) -> bool {
        let r = self.reduce(v);
        if r.is_zero() {
            false
        } else {
            self.rows.push(r);
            true
        }
    }
}

/// Basis of the kernel of a linear map given column-wise: `columns[j]` is
/// the image of basis vector `j`; `dim` is the dimension of the source.
/// Returns kernel vectors of length `dim`.
pub fn kernel_basis(columns: &[BitVec], dim: usize) -> Vec<BitVec> {
    debug_assert_eq!(columns.len(), dim);
    // Row-reduce images, carrying the preimage combination alongside.
    let mut reduced: Vec<(BitVec, BitVec)> = Vec::new(); // (image, preimage)
    let mut kernel = Vec::new();
    for j in 0..dim {
        let mut img = columns[j].clone();
        let mut pre = BitVec::zeros(dim);
        pre.set(j, true);
        loop {
            let Some(lead) = img.leading() else { break };
            match reduced.iter().find(|(r, _)| r.leading() == Some(lead)) {
                Some((r, p)) => {
                    img.xor_assign(&r.clone());
                    pre.xor_assign(&p.clone());
                }
                None => break,
            }
        }
        if img.is_zero() {
            kernel.push(pre);
        } else {
            reduced.push((img, pre));
        }
    }
    kernel
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bv(bits: &[usize], len: usize) -> BitVec {
        let mut v = BitVec::zeros(len);
        for &b in bits {
            v.set(b, true);
        }
        v
    }

    #[test]
    fn span_membership() {
        let mut s = Span::new();
        assert!(s.insert(bv(&[0, 1], 4)));
        assert!(s.insert(bv(&[1, 2], 4)));
        assert!(!s.insert(bv(&[0, 2], 4)));
        assert!(s.contains(&bv(&[0, 2], 4)));
        assert!(!s.contains(&bv(&[3], 4)));
        assert_eq!(s.rank(), 2);
    }

    #[test]
    fn kernel_of_projection() {
        // Map e0 -> f0, e1 -> f0, e2 -> 0: kernel = <e0+e1, e2>.
        let cols = vec![bv(&[0], 1), bv(&[0], 1), bv(&[], 1)];
        let ker = kernel_basis(&cols, 3);
        assert_eq!(ker.len(), 2);
        let mut span = Span::new();
        for k in &ker {
            assert!(span.insert(k.clone()));
        }
        assert!(span.contains(&bv(&[0, 1], 3)));
        assert!(span.contains(&bv(&[2], 3)));
        assert!(!span.contains(&bv(&[0], 3)));
    }

    #[test]
    fn kernel_of_injective_map_is_trivial() {
        let cols = vec![bv(&[0], 2), bv(&[1], 2)];
        assert!(kernel_basis(&cols, 2).is_empty());
    }
}
