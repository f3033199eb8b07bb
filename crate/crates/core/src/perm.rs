//! Permutations of `{0, .., n-1}` stored as image arrays.
//!
//! Composition is left to right: `p.compose(q)` applies `p` first, so the
//! result sends `i` to `q[p[i]]`.

use std::fmt;

use crate::error::{GroupError, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from an image array, checking it is a bijection.
    pub fn from_images<T: Copy + TryInto<u32>>(images: &[T]) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(GroupError::MalformedPermutation(
                "degree must be positive".into(),
            ));
        }
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for (i, &x) in images.iter().enumerate() {
            let v: u32 = x.try_into().map_err(|_| {
                GroupError::MalformedPermutation(format!("image of {i} is out of range"))
            })?;
            if v as usize >= n {
                return Err(GroupError::MalformedPermutation(format!(
                    "image of {i} is {v}, outside 0..{n}"
                )));
            }
            if std::mem::replace(&mut seen[v as usize], true) {
                return Err(GroupError::MalformedPermutation(format!(
                    "point {v} is hit twice"
                )));
            }
            out.push(v);
        }
        Ok(Permutation { images: out })
    }

    /// Builds a permutation from disjoint cycles, e.g. `&[&[0, 1, 2]]`.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a >= degree || std::mem::replace(&mut touched[a], true) {
                    return Err(GroupError::MalformedPermutation(format!(
                        "bad cycle entry {a}"
                    )));
                }
                images[a] = cycle[(k + 1) % cycle.len()];
            }
        }
        Permutation::from_images(&images)
    }

    pub(crate) fn from_raw(images: Vec<u32>) -> Self {
        debug_assert!(Permutation::from_images(&images).is_ok());
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(GroupError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// Relabels points: the result is `sigma^-1 * self * sigma` in
    /// left-to-right order, i.e. the same permutation on renamed points.
    pub fn relabel(&self, sigma: &Permutation) -> Result<Permutation> {
        sigma.inverse().compose(self)?.compose(sigma)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.image(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.image(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.image(x);
            }
            out.push(cycle);
        }
        out
    }
}

/// Free-function form of [`Permutation::compose`].
pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation> {
    p.compose(q)
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}
