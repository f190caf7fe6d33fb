//! Left-associate classes of Hurwitz primes of norm `p`, labeled by points
//! of the conic `x² + y² + z² = 0` over `F_p`.
//!
//! Reducing the left ideal of a prime modulo `p` gives a two-dimensional
//! left ideal of the quaternion algebra over `F_p`; that ideal carries a
//! unique trace-zero line, whose direction is a conic point. The map is a
//! bijection, so the classes over an odd `p` are exactly the `p + 1` conic
//! points, ordered here by the lexicographic point order.

use std::collections::HashMap;

use crate::conic::{conic_points, ConicPoint};
use crate::euclid::gcrd;
use crate::fp::FpScalar;
use crate::primes::is_prime;
use crate::quaternion::{HurwitzInt, I, J, K};

/// One class of Hurwitz primes over `p`: the canonical representative, the
/// conic point labeling the class (absent for `p = 2`), and the position of
/// that label in the sorted point list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeClass {
    pub rep: HurwitzInt,
    pub p: i64,
    pub label: Option<ConicPoint>,
    pub index: usize,
}

fn reduce(x: HurwitzInt, p: i64) -> [FpScalar; 4] {
    x.reduced(p)
}

fn is_zero_vec(v: &[FpScalar; 4]) -> bool {
    v.iter().all(|c| c.is_zero())
}

/// Whether `w` is a scalar multiple of the nonzero vector `v`.
fn in_span(v: &[FpScalar; 4], w: &[FpScalar; 4]) -> bool {
    let pivot = v.iter().position(|c| !c.is_zero()).expect("v is nonzero");
    let lambda = w[pivot] * v[pivot].inv();
    (0..4).all(|i| w[i] == v[i] * lambda)
}

/// The conic point of a prime `P` of norm an odd prime `p`: the direction
/// of the unique trace-zero line in the reduction of the left ideal of `P`
/// modulo `p`.
pub fn trace_zero_direction(prime: HurwitzInt, p: i64) -> ConicPoint {
    assert!(p > 2 && is_prime(p), "{p} is not an odd prime");
    assert_eq!(prime.norm(), p, "element must have norm {p}");
    let base = reduce(prime, p);
    debug_assert!(!is_zero_vec(&base));
    // The reduced ideal is spanned by P and one of iP, jP, kP.
    let second = [I, J, K]
        .into_iter()
        .map(|u| reduce(u * prime, p))
        .find(|row| !is_zero_vec(row) && !in_span(&base, row))
        .expect("the reduced ideal is two-dimensional");
    // Kill the scalar component: the combination w0·v - v0·w has trace zero.
    let t = if base[0].is_zero() {
        base
    } else if second[0].is_zero() {
        second
    } else {
        let (v0, w0) = (base[0], second[0]);
        [
            FpScalar::zero(p),
            w0 * base[1] - v0 * second[1],
            w0 * base[2] - v0 * second[2],
            w0 * base[3] - v0 * second[3],
        ]
    };
    assert!(!is_zero_vec(&t), "trace-zero line must be one-dimensional");
    ConicPoint::new(t[1], t[2], t[3])
}

fn class_at(point: ConicPoint, index: usize) -> PrimeClass {
    let p = point.modulus();
    let [x, y, z] = point.coords();
    let lift = HurwitzInt::from_ints(0, x.value(), y.value(), z.value());
    let rep = gcrd(HurwitzInt::from_ints(p, 0, 0, 0), lift);
    assert_eq!(rep.norm(), p, "conic lift must cut out a prime of norm {p}");
    debug_assert_eq!(trace_zero_direction(rep, p), point);
    PrimeClass { rep, p, label: Some(point), index }
}

/// The prime class labeled by a conic point: the canonicalized generator of
/// the left ideal spanned by `p` and the trace-zero lift of the point.
pub fn class_from_conic(point: ConicPoint) -> PrimeClass {
    let p = point.modulus();
    let index = conic_points(p)
        .binary_search(&point)
        .expect("point lies on the conic");
    class_at(point, index)
}

/// All prime classes over `p`, ordered by conic-point index; `p = 2` has the
/// single class of `1 + i`.
pub fn enumerate_classes(p: i64) -> Vec<PrimeClass> {
    assert!(is_prime(p), "{p} is not prime");
    if p == 2 {
        let rep = crate::euclid::canonicalize(HurwitzInt::from_ints(1, 1, 0, 0));
        return vec![PrimeClass { rep, p, label: None, index: 0 }];
    }
    conic_points(p)
        .into_iter()
        .enumerate()
        .map(|(index, point)| class_at(point, index))
        .collect()
}

/// The classes over one prime together with reverse lookup by canonical
/// representative and by conic label.
#[derive(Clone, Debug)]
pub struct ClassTable {
    p: i64,
    classes: Vec<PrimeClass>,
    by_rep: HashMap<HurwitzInt, usize>,
    by_label: HashMap<ConicPoint, usize>,
}

impl ClassTable {
    pub fn new(p: i64) -> Self {
        let classes = enumerate_classes(p);
        let by_rep = classes.iter().map(|c| (c.rep, c.index)).collect();
        let by_label = classes
            .iter()
            .filter_map(|c| c.label.map(|l| (l, c.index)))
            .collect();
        ClassTable { p, classes, by_rep, by_label }
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[PrimeClass] {
        &self.classes
    }

    /// Index of a canonical representative; panics if the element is not one
    /// of the table's representatives.
    pub fn index_of_rep(&self, rep: HurwitzInt) -> usize {
        self.by_rep[&rep]
    }

    /// Index of a conic label; panics for `p = 2` or a foreign point.
    pub fn index_of_label(&self, label: ConicPoint) -> usize {
        self.by_label[&label]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euclid::{canonicalize, is_left_associate};
    use crate::quaternion::units;

    /// Generic Gaussian-elimination oracle for the trace-zero direction:
    /// row-reduce the full 4×4 coordinate matrix of {P, iP, jP, kP} mod p,
    /// then solve for the trace-zero combination of the basis rows.
    fn trace_zero_by_gaussian_elimination(prime: HurwitzInt, p: i64) -> ConicPoint {
        let mut rows: Vec<[FpScalar; 4]> = [HurwitzInt::from_ints(1, 0, 0, 0), I, J, K]
            .into_iter()
            .map(|u| reduce(u * prime, p))
            .collect();
        let mut rank = 0usize;
        for col in 0..4 {
            let Some(pivot) = (rank..4).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(rank, pivot);
            let inv = rows[rank][col].inv();
            for c in 0..4 {
                rows[rank][c] = rows[rank][c] * inv;
            }
            for r in 0..4 {
                if r != rank && !rows[r][col].is_zero() {
                    let factor = rows[r][col];
                    for c in 0..4 {
                        rows[r][c] = rows[r][c] - factor * rows[rank][c];
                    }
                }
            }
            rank += 1;
        }
        assert_eq!(rank, 2, "reduced ideal has dimension 2");
        let (v, w) = (rows[0], rows[1]);
        let t = if v[0].is_zero() {
            v
        } else if w[0].is_zero() {
            w
        } else {
            let mut t = [FpScalar::zero(p); 4];
            for c in 0..4 {
                t[c] = w[0] * v[c] - v[0] * w[c];
            }
            t
        };
        ConicPoint::new(t[1], t[2], t[3])
    }

    #[test]
    fn direction_matches_gaussian_elimination_oracle() {
        for p in [3i64, 5, 7, 11, 13] {
            for class in enumerate_classes(p) {
                assert_eq!(
                    trace_zero_direction(class.rep, p),
                    trace_zero_by_gaussian_elimination(class.rep, p),
                    "p = {p}, rep = {}",
                    class.rep
                );
            }
        }
    }

    #[test]
    fn direction_lands_on_the_conic_for_norm_three_primes() {
        let prime = HurwitzInt::from_ints(1, 1, 1, 0);
        let point = trace_zero_direction(prime, 3);
        assert!(conic_points(3).contains(&point));
    }

    #[test]
    fn direction_is_left_associate_invariant() {
        let prime = HurwitzInt::from_ints(1, 1, 1, 0);
        let expected = trace_zero_direction(prime, 3);
        for u in units() {
            assert_eq!(trace_zero_direction(u.value() * prime, 3), expected);
        }
        let five = HurwitzInt::from_ints(1, 2, 0, 0);
        let expected = trace_zero_direction(five, 5);
        for u in units() {
            assert_eq!(trace_zero_direction(u.value() * five, 5), expected);
        }
    }

    #[test]
    fn round_trip_between_points_and_classes() {
        for p in [3i64, 5, 7] {
            for point in conic_points(p) {
                let class = class_from_conic(point);
                assert_eq!(class.rep.norm(), p);
                assert_eq!(class.rep, canonicalize(class.rep));
                assert_eq!(trace_zero_direction(class.rep, p), point);
            }
        }
    }

    #[test]
    fn class_counts() {
        assert_eq!(enumerate_classes(2).len(), 1);
        assert_eq!(enumerate_classes(3).len(), 4);
        assert_eq!(enumerate_classes(13).len(), 14);
    }

    #[test]
    fn classes_are_pairwise_non_associate() {
        let classes = enumerate_classes(13);
        for a in &classes {
            for b in &classes {
                if a.index != b.index {
                    assert!(!is_left_associate(a.rep, b.rep));
                }
            }
        }
    }

    #[test]
    fn every_prime_element_belongs_to_exactly_one_class() {
        // Bounded search: norm p means the doubled coordinates satisfy
        // d0² + d1² + d2² + d3² = 4p.
        for p in [2i64, 3, 5, 7, 11, 13] {
            let classes = enumerate_classes(p);
            let bound = (2.0 * (p as f64).sqrt()).ceil() as i64;
            let mut found = 0usize;
            for d0 in -bound..=bound {
                for d1 in -bound..=bound {
                    for d2 in -bound..=bound {
                        for d3 in -bound..=bound {
                            let parity = d0 & 1;
                            if d1 & 1 != parity || d2 & 1 != parity || d3 & 1 != parity {
                                continue;
                            }
                            if d0 * d0 + d1 * d1 + d2 * d2 + d3 * d3 != 4 * p {
                                continue;
                            }
                            let x = HurwitzInt::from_doubled(d0, d1, d2, d3);
                            let matches = classes
                                .iter()
                                .filter(|c| is_left_associate(x, c.rep))
                                .count();
                            assert_eq!(matches, 1, "element {x} over {p}");
                            found += 1;
                        }
                    }
                }
            }
            assert_eq!(found, classes.len() * 24, "24 associates per class over {p}");
        }
    }

    #[test]
    fn table_lookups_are_consistent() {
        let table = ClassTable::new(7);
        assert_eq!(table.len(), 8);
        for class in table.classes() {
            assert_eq!(table.index_of_rep(class.rep), class.index);
            assert_eq!(table.index_of_label(class.label.unwrap()), class.index);
        }
    }
}
