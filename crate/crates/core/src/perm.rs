//! Permutations of {1,…,r} in one-line notation.
//!
//! Images are stored 1-based to match the bracket notation `[2,3,1]` used
//! everywhere in this crate's I/O. The composition convention is
//! `(p ∘ q)(i) = p(q(i))`: `q` acts first.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::AlgebraError;

/// Hard ceiling on the symmetric-group degree. Decomposition checks go up to
/// S_5 (120 elements); the ceiling keeps accidental factorial blowups out.
pub const MAX_DEGREE: usize = 8;

/// A permutation of {1,…,r} in one-line notation, `images[i-1] = p(i)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u8>", into = "Vec<u8>")]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    /// Identity of S_r.
    pub fn identity(degree: usize) -> Self {
        assert!(
            (1..=MAX_DEGREE).contains(&degree),
            "degree {degree} out of range"
        );
        Permutation {
            images: (1..=degree as u8).collect(),
        }
    }

    /// Builds from 1-based images, validating the bijection and degree range.
    pub fn from_images(images: &[usize]) -> Result<Self, AlgebraError> {
        let r = images.len();
        if !(1..=MAX_DEGREE).contains(&r) {
            return Err(AlgebraError::DegreeOutOfRange(r));
        }
        let mut seen = [false; MAX_DEGREE + 1];
        for &v in images {
            if v == 0 || v > r {
                return Err(AlgebraError::InvalidPermutation(format!(
                    "image {v} outside 1..={r}"
                )));
            }
            if seen[v] {
                return Err(AlgebraError::InvalidPermutation(format!(
                    "image {v} repeated"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|&v| v as u8).collect(),
        })
    }

    /// Transposition (a b) in S_r.
    pub fn transposition(degree: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(degree);
        assert!(a >= 1 && b >= 1 && a <= degree && b <= degree && a != b);
        p.images.swap(a - 1, b - 1);
        p
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 1-based image of the 1-based point `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&v| v as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// `(self ∘ q)(i) = self(q(i))`.
    pub fn compose(&self, q: &Permutation) -> Result<Permutation, AlgebraError> {
        if self.degree() != q.degree() {
            return Err(AlgebraError::DegreeMismatch {
                expected: self.degree(),
                got: q.degree(),
            });
        }
        Ok(Permutation {
            images: q.images.iter().map(|&qi| self.images[qi as usize - 1]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u8; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize - 1] = i as u8 + 1;
        }
        Permutation { images }
    }

    /// Parity: +1 for even, −1 for odd.
    pub fn sign(&self) -> i8 {
        let mut seen = vec![false; self.degree()];
        let mut sign = 1i8;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0usize;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = self.images[cur] as usize - 1;
                len += 1;
            }
            if len.is_multiple_of(2) {
                sign = -sign;
            }
        }
        sign
    }

    /// All r! elements of S_r in lexicographic one-line order.
    pub fn all(degree: usize) -> Vec<Permutation> {
        assert!((1..=MAX_DEGREE).contains(&degree));
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(degree);
        let mut used = vec![false; degree + 1];
        fn rec(
            degree: usize,
            current: &mut Vec<u8>,
            used: &mut Vec<bool>,
            out: &mut Vec<Permutation>,
        ) {
            if current.len() == degree {
                out.push(Permutation {
                    images: current.clone(),
                });
                return;
            }
            for v in 1..=degree {
                if !used[v] {
                    used[v] = true;
                    current.push(v as u8);
                    rec(degree, current, used, out);
                    current.pop();
                    used[v] = false;
                }
            }
        }
        rec(degree, &mut current, &mut used, &mut out);
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl TryFrom<Vec<u8>> for Permutation {
    type Error = AlgebraError;
    fn try_from(v: Vec<u8>) -> Result<Self, Self::Error> {
        Permutation::from_images(&v.iter().map(|&x| x as usize).collect::<Vec<_>>())
    }
}

impl From<Permutation> for Vec<u8> {
    fn from(p: Permutation) -> Vec<u8> {
        p.images
    }
}
