//! Metacommutation: rewriting a product `P·Q` of Hurwitz primes with
//! distinct prime norms `p ≠ q` as `Q′·P′` with the norms exchanged, and the
//! permutation this induces on the prime classes over `p`.
//!
//! The permutation is computed along two independent paths: directly via the
//! Euclidean algorithm, and by letting conjugation by the reduction of `Q`
//! rotate the conic labels. Their agreement, together with the predicted
//! sign and fixed-point counts, is what the verification sweep checks.

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::classes::ClassTable;
use crate::conic::ConicPoint;
use crate::euclid::{canonicalize, exact_right_div, gcrd};
use crate::fp::{legendre, FpScalar, Mat3};
use crate::perm::Perm;
use crate::primes::is_prime;
use crate::quaternion::{HurwitzInt, HurwitzUnit};

/// Rewrites `P·Q` as `Q′·P′` with `norm(P′) = norm(P)` and
/// `norm(Q′) = norm(Q)`. Returns `(Q′, P′)`; `P′` is the canonical
/// representative of its class, so the result is deterministic and depends
/// only on the class of `P`.
///
/// Panics unless the norms are distinct primes.
pub fn metacommute(p_elem: HurwitzInt, q_elem: HurwitzInt) -> (HurwitzInt, HurwitzInt) {
    let p = p_elem.norm();
    let q = q_elem.norm();
    assert!(is_prime(p) && is_prime(q), "norms {p} and {q} must be prime");
    assert_ne!(p, q, "norms must be distinct primes");
    let product = p_elem * q_elem;
    let p_new = gcrd(HurwitzInt::from_ints(p, 0, 0, 0), product);
    debug_assert_eq!(p_new.norm(), p);
    let q_new = exact_right_div(product, p_new).expect("P′ right-divides P·Q");
    debug_assert_eq!(q_new.norm(), q);
    (q_new, p_new)
}

/// The permutation metacommutation by `q_elem` induces on the classes over
/// `table.p()`, computed class by class with the Euclidean algorithm.
pub fn perm_by_euclid(table: &ClassTable, q_elem: HurwitzInt) -> Perm {
    let images = table
        .classes()
        .iter()
        .map(|class| {
            let (_, p_new) = metacommute(class.rep, q_elem);
            table.index_of_rep(p_new)
        })
        .collect();
    Perm::from_images(images)
}

/// The rotation that conjugation by the reduction of `q_elem` induces on the
/// trace-zero part of the quaternion algebra over `F_p`. Lies in SO₃: it
/// preserves `x² + y² + z²` and has determinant one.
///
/// Panics when `p` is not an odd prime or divides `norm(q_elem)`.
pub fn rotation_matrix(q_elem: HurwitzInt, p: i64) -> Mat3 {
    assert!(p > 2 && is_prime(p), "{p} is not an odd prime");
    let [a, b, c, d] = q_elem.reduced(p);
    let q_bar = a * a + b * b + c * c + d * d;
    assert!(!q_bar.is_zero(), "norm of {q_elem} vanishes mod {p}");
    let scale = q_bar.inv();
    let two = FpScalar::new(2, p);
    let rows = [
        [a * a + b * b - c * c - d * d, two * (a * d + b * c), two * (b * d - a * c)],
        [two * (b * c - a * d), a * a + c * c - b * b - d * d, two * (a * b + c * d)],
        [two * (a * c + b * d), two * (c * d - a * b), a * a + d * d - b * b - c * c],
    ];
    Mat3::new(rows.map(|row| row.map(|e| e * scale)))
}

/// The same permutation as [`perm_by_euclid`], but computed by applying the
/// rotation of [`rotation_matrix`] to each conic label and renormalizing.
/// Requires `table.p()` odd.
pub fn perm_by_rotation(table: &ClassTable, q_elem: HurwitzInt) -> Perm {
    let matrix = rotation_matrix(q_elem, table.p());
    let images = table
        .classes()
        .iter()
        .map(|class| {
            let label = class.label.expect("odd p has conic labels");
            let [x, y, z] = matrix.mul_vec(label.coords());
            table.index_of_label(ConicPoint::new(x, y, z))
        })
        .collect();
    Perm::from_images(images)
}

/// The permutation sending each class representative `P` to the class of
/// `P·u`.
pub fn right_unit_perm(table: &ClassTable, unit: HurwitzUnit) -> Perm {
    let images = table
        .classes()
        .iter()
        .map(|class| table.index_of_rep(canonicalize(class.rep * unit.value())))
        .collect();
    Perm::from_images(images)
}

/// Which structural case the reduction of `Q` modulo `p` falls into. The
/// wire names `1A`, `1B`, `2`, `3` are part of the report format.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PermCase {
    /// `Q` is a rational integer mod `p`: the permutation is the identity.
    Identity,
    /// The rotation is unipotent (`q̄ = a²` with nonzero imaginary part):
    /// one fixed point and a single `p`-cycle.
    Unipotent,
    /// `Q` has trace zero mod `p`: the permutation squares to the identity.
    Involution,
    /// The generic case: fixed points counted by a quadratic character.
    Generic,
}

impl PermCase {
    pub fn as_str(self) -> &'static str {
        match self {
            PermCase::Identity => "1A",
            PermCase::Unipotent => "1B",
            PermCase::Involution => "2",
            PermCase::Generic => "3",
        }
    }
}

impl std::fmt::Display for PermCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The predicted statistics of the metacommutation permutation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Prediction {
    pub sign: i32,
    pub fixed_points: usize,
    pub case: PermCase,
}

/// Predicts sign, fixed-point count, and case tag for metacommutation by
/// `q_elem` on the classes over `p`, without computing the permutation.
///
/// The sign is the quadratic character of `norm(q_elem)` modulo `p`. Fixed
/// points: all `p + 1` classes in the identity case, exactly one in the
/// unipotent case, and otherwise `1 + legendre(a² - q̄, p)` where `a` and
/// `q̄` are the reductions of the trace half and the norm.
pub fn predict(q_elem: HurwitzInt, p: i64) -> Prediction {
    let q = q_elem.norm();
    assert!(is_prime(p) && is_prime(q), "{p} and {q} must be prime");
    assert_ne!(p, q);
    if p == 2 {
        return Prediction { sign: 1, fixed_points: 1, case: PermCase::Identity };
    }
    let [a, b, c, d] = q_elem.reduced(p);
    let q_bar = a * a + b * b + c * c + d * d;
    debug_assert!(!q_bar.is_zero());
    let sign = legendre(q, p);
    if b.is_zero() && c.is_zero() && d.is_zero() {
        return Prediction { sign, fixed_points: p as usize + 1, case: PermCase::Identity };
    }
    if q_bar == a * a {
        return Prediction { sign, fixed_points: 1, case: PermCase::Unipotent };
    }
    let discriminant = a * a - q_bar;
    let fixed_points = (1 + discriminant.legendre()) as usize;
    let case = if a.is_zero() { PermCase::Involution } else { PermCase::Generic };
    Prediction { sign, fixed_points, case }
}

/// The fixed-point count `1 + legendre(tr(Q)² - q, p)` computed from the
/// integer trace rather than its halved reduction. Only meaningful when the
/// permutation is not the identity; returns `None` in the identity case and
/// for `p = 2`. The verification sweep reports how often this variant
/// disagrees with the observed count.
pub fn trace_variant_fixed_points(q_elem: HurwitzInt, p: i64) -> Option<usize> {
    if p == 2 || predict(q_elem, p).case == PermCase::Identity {
        return None;
    }
    let trace = q_elem.trace();
    let n = trace * trace - q_elem.norm();
    Some((1 + legendre(n, p)) as usize)
}

/// Everything observed and predicted about one `(p, Q)` metacommutation
/// cell.
#[derive(Clone, Debug)]
pub struct MetaReport {
    pub p: i64,
    pub q: i64,
    pub q_elem: HurwitzInt,
    pub perm: Perm,
    pub observed_sign: i32,
    pub predicted_sign: i32,
    pub observed_fixed: usize,
    pub predicted_fixed: usize,
    pub cycle_type: Vec<usize>,
    pub case: PermCase,
    pub paths_agree: bool,
}

impl MetaReport {
    /// Computes the permutation along both paths and the predictions for
    /// one prime `q_elem` acting on the classes of `table`.
    pub fn new(table: &ClassTable, q_elem: HurwitzInt) -> Self {
        let p = table.p();
        let perm = perm_by_euclid(table, q_elem);
        // Over p = 2 there is no conic, hence no rotation path to compare.
        let paths_agree = p == 2 || perm == perm_by_rotation(table, q_elem);
        let prediction = predict(q_elem, p);
        MetaReport {
            p,
            q: q_elem.norm(),
            q_elem,
            observed_sign: perm.sign(),
            predicted_sign: prediction.sign,
            observed_fixed: perm.fixed_points(),
            predicted_fixed: prediction.fixed_points,
            cycle_type: perm.cycle_type(),
            case: prediction.case,
            paths_agree,
            perm,
        }
    }

    /// Whether every check passes: observed sign and fixed points match the
    /// predictions and both computation paths agree.
    pub fn passes(&self) -> bool {
        self.observed_sign == self.predicted_sign
            && self.observed_fixed == self.predicted_fixed
            && self.paths_agree
    }
}

impl Serialize for MetaReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut record = serializer.serialize_struct("MetaReport", 10)?;
        record.serialize_field("p", &self.p)?;
        record.serialize_field("q", &self.q)?;
        record.serialize_field("Q", &self.q_elem.to_string())?;
        record.serialize_field("cycle_type", &self.cycle_type)?;
        record.serialize_field("observed_sign", &self.observed_sign)?;
        record.serialize_field("predicted_sign", &self.predicted_sign)?;
        record.serialize_field("observed_fixed", &self.observed_fixed)?;
        record.serialize_field("predicted_fixed", &self.predicted_fixed)?;
        record.serialize_field("case", self.case.as_str())?;
        record.serialize_field("paths_agree", &self.paths_agree)?;
        record.end()
    }
}
