use crate::error::{Error, Result};

/// A bijection on `0..len`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let p = image.len();
        let mut seen = vec![false; p];
        for &x in &image {
            if x >= p || std::mem::replace(&mut seen[x], true) {
                return Err(Error::NotAPermutation(p));
            }
        }
        Ok(Self { image })
    }

    pub fn identity(p: usize) -> Self {
        Self {
            image: (0..p).collect(),
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.image.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    #[inline]
    pub fn image(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ first`, i.e. `x ↦ self(first(x))`.
    pub fn after(&self, first: &Permutation) -> Result<Self> {
        if self.len() != first.len() {
            return Err(Error::SizeMismatch {
                expected: self.len(),
                found: first.len(),
            });
        }
        Ok(Self {
            image: first.image.iter().map(|&x| self.image[x]).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.image.iter().enumerate() {
            inv[x] = i;
        }
        Self { image: inv }
    }

    /// All permutations of `0..p` in lexicographic order of their image arrays.
    pub fn all(p: usize) -> AllPermutations {
        AllPermutations {
            next: Some((0..p).collect()),
        }
    }
}

pub struct AllPermutations {
    next: Option<Vec<usize>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation { image: current })
    }
}

fn next_permutation(a: &mut [usize]) -> bool {
    let Some(i) = a.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = a
        .iter()
        .rposition(|&x| x > a[i])
        .expect("pivot has a successor");
    a.swap(i, j);
    a[i + 1..].reverse();
    true
}
