//! Permutations of `{0, …, n-1}` with the cycle bookkeeping the theorem
//! checks need: sign, fixed points, and cycle type.

use std::fmt;

/// A permutation stored as its image table: `images[i]` is where `i` goes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    /// Builds a permutation from an image table; panics unless it is a
    /// bijection.
    pub fn from_images(images: Vec<usize>) -> Self {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            assert!(img < n, "image {img} out of range for degree {n}");
            assert!(!seen[img], "image {img} repeated");
            seen[img] = true;
        }
        Perm { images }
    }

    pub fn identity(n: usize) -> Self {
        Perm { images: (0..n).collect() }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img)
    }

    /// Left-to-right functional composition: `(self ∘ other)(i) =
    /// self(other(i))`, i.e. `other` acts first.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.len(), other.len());
        Perm {
            images: (0..self.len()).map(|i| self.apply(other.apply(i))).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.len()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img] = i;
        }
        Perm { images }
    }

    /// The cycles of length at least two, each rotated to start at its
    /// smallest element, ordered by those starting elements.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut visited = vec![false; self.len()];
        let mut cycles = Vec::new();
        for start in 0..self.len() {
            if visited[start] {
                continue;
            }
            let mut cycle = vec![start];
            visited[start] = true;
            let mut next = self.apply(start);
            while next != start {
                visited[next] = true;
                cycle.push(next);
                next = self.apply(next);
            }
            if cycle.len() > 1 {
                cycles.push(cycle);
            }
        }
        cycles
    }

    /// Multiset of cycle lengths including fixed points, sorted ascending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lengths: Vec<usize> = vec![1; self.fixed_points()];
        lengths.extend(self.cycles().iter().map(|c| c.len()));
        lengths.sort_unstable();
        lengths
    }

    /// `(-1)^(n - #cycles)`.
    pub fn sign(&self) -> i32 {
        let transposition_count: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        if transposition_count % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn fixed_points(&self) -> usize {
        self.images.iter().enumerate().filter(|&(i, &img)| i == img).count()
    }

    /// Cycle notation such as `(0 2 4)(1 3)`; the identity prints as `id`.
    pub fn cycle_notation(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "id".to_string();
        }
        cycles
            .iter()
            .map(|cycle| {
                let inner: Vec<String> = cycle.iter().map(|i| i.to_string()).collect();
                format!("({})", inner.join(" "))
            })
            .collect()
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_notation())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_statistics() {
        let id = Perm::identity(6);
        assert_eq!(id.sign(), 1);
        assert_eq!(id.fixed_points(), 6);
        assert_eq!(id.cycle_type(), vec![1; 6]);
        assert!(id.is_identity());
        assert_eq!(id.cycle_notation(), "id");
    }

    #[test]
    fn transposition_is_odd() {
        let t = Perm::from_images(vec![1, 0, 2]);
        assert_eq!(t.sign(), -1);
        assert_eq!(t.fixed_points(), 1);
        assert_eq!(t.cycle_type(), vec![1, 2]);
        assert_eq!(t.cycle_notation(), "(0 1)");
    }

    #[test]
    fn odd_length_cycles_are_even_permutations() {
        for n in [3usize, 5, 7, 11] {
            let mut images: Vec<usize> = (1..n).collect();
            images.push(0);
            let cycle = Perm::from_images(images);
            assert_eq!(cycle.sign(), 1, "a {n}-cycle is an even permutation");
            assert_eq!(cycle.cycle_type(), vec![n]);
        }
    }

    #[test]
    fn composition_order() {
        // other acts first: (self ∘ other)(i) = self(other(i)).
        let sigma = Perm::from_images(vec![1, 2, 0]);
        let tau = Perm::from_images(vec![0, 2, 1]);
        let composed = sigma.compose(&tau);
        assert_eq!(composed.apply(1), sigma.apply(tau.apply(1)));
        assert_eq!(sigma.compose(&sigma.inverse()), Perm::identity(3));
    }

    #[test]
    fn sign_is_a_homomorphism() {
        let sigma = Perm::from_images(vec![3, 0, 1, 2]);
        let tau = Perm::from_images(vec![1, 0, 3, 2]);
        assert_eq!(
            sigma.compose(&tau).sign(),
            sigma.sign() * tau.sign()
        );
    }

    #[test]
    #[should_panic(expected = "repeated")]
    fn rejects_non_bijections() {
        Perm::from_images(vec![0, 0, 1]);
    }
}
