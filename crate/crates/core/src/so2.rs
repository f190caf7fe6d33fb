//! The special orthogonal group of the binary form `x² - t·y²` over `F_p`
//! and its action on the affine conics `x² - t·y² = u`.
//!
//! The group consists of the matrices `[[α, βt], [β, α]]` with
//! `α² - t·β² = 1`. It is cyclic of order `p - (t/p)` and acts simply
//! transitively on each nonempty level set, which is what lets the sign of
//! the permutation an element induces be read off a quadratic character.

use crate::fp::{legendre, sqrt_mod, FpScalar, Mat2};
use crate::perm::Perm;

/// An element `[[α, βt], [β, α]]` of `SO(x² - t·y²)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct So2Element {
    alpha: FpScalar,
    beta: FpScalar,
    t: FpScalar,
}

impl So2Element {
    /// Builds an element when `α² - t·β² = 1`.
    pub fn new(alpha: FpScalar, beta: FpScalar, t: FpScalar) -> Option<Self> {
        assert!(!t.is_zero(), "the form parameter t must be nonzero");
        (alpha * alpha - t * beta * beta == FpScalar::one(t.modulus()))
            .then_some(So2Element { alpha, beta, t })
    }

    pub fn identity(t: FpScalar) -> Self {
        So2Element {
            alpha: FpScalar::one(t.modulus()),
            beta: FpScalar::zero(t.modulus()),
            t,
        }
    }

    pub fn alpha(self) -> FpScalar {
        self.alpha
    }

    pub fn beta(self) -> FpScalar {
        self.beta
    }

    pub fn t(self) -> FpScalar {
        self.t
    }

    pub fn matrix(self) -> Mat2 {
        Mat2::new([[self.alpha, self.beta * self.t], [self.beta, self.alpha]])
    }

    /// Group law `M_{α,β}·M_{γ,δ} = M_{αγ+βδt, αδ+βγ}`.
    pub fn compose(self, rhs: So2Element) -> So2Element {
        debug_assert_eq!(self.t, rhs.t);
        So2Element {
            alpha: self.alpha * rhs.alpha + self.beta * rhs.beta * self.t,
            beta: self.alpha * rhs.beta + self.beta * rhs.alpha,
            t: self.t,
        }
    }

    pub fn pow(self, mut e: u64) -> So2Element {
        let mut base = self;
        let mut acc = So2Element::identity(self.t);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(base);
            }
            base = base.compose(base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order, computed by repeated composition.
    pub fn order(self) -> usize {
        let id = So2Element::identity(self.t);
        let mut power = self;
        let mut n = 1usize;
        while power != id {
            power = power.compose(self);
            n += 1;
        }
        n
    }

    pub fn apply(self, point: (FpScalar, FpScalar)) -> (FpScalar, FpScalar) {
        let [x, y] = self.matrix().mul_vec([point.0, point.1]);
        (x, y)
    }

    /// The parameter `v` with characteristic polynomial
    /// `(x+1)² - v·x = x² - 2αx + 1`, namely `v = 2 + 2α`.
    pub fn quad_parameter(self) -> FpScalar {
        let two = FpScalar::new(2, self.t.modulus());
        two + two * self.alpha
    }
}

/// All elements of `SO(x² - t·y²)`, ordered by `(α, β)`. The count is
/// `p - legendre(t, p)`.
pub fn so2_elements(t: FpScalar) -> Vec<So2Element> {
    assert!(!t.is_zero(), "the form parameter t must be nonzero");
    let p = t.modulus();
    let t_inv = t.inv();
    let mut out = Vec::new();
    for av in 0..p {
        let alpha = FpScalar::new(av, p);
        let beta_sq = (alpha * alpha - FpScalar::one(p)) * t_inv;
        if let Some(beta) = sqrt_mod(beta_sq) {
            out.push(So2Element { alpha, beta, t });
            if !beta.is_zero() {
                out.push(So2Element { alpha, beta: -beta, t });
            }
        }
    }
    out.sort_by_key(|e| (e.alpha, e.beta));
    out
}

/// `|SO(x² - t·y²)|` by enumeration; equals `p - legendre(t, p)`.
pub fn group_order(t: FpScalar) -> usize {
    so2_elements(t).len()
}

/// A generator, if one exists (the group is cyclic, so one always does).
pub fn generator(t: FpScalar) -> Option<So2Element> {
    let elements = so2_elements(t);
    let n = elements.len();
    elements.into_iter().find(|e| e.order() == n)
}

pub fn is_cyclic(t: FpScalar) -> bool {
    generator(t).is_some()
}

/// The affine conic `x² - t·y² = u` with its points sorted
/// lexicographically.
#[derive(Clone, Debug)]
pub struct AffineConic {
    t: FpScalar,
    u: FpScalar,
    points: Vec<(FpScalar, FpScalar)>,
}

impl AffineConic {
    pub fn new(t: FpScalar, u: FpScalar) -> Self {
        assert!(!t.is_zero() && !u.is_zero(), "t and u must be nonzero");
        let p = t.modulus();
        let t_inv = t.inv();
        let mut points = Vec::new();
        for xv in 0..p {
            let x = FpScalar::new(xv, p);
            let y_sq = (x * x - u) * t_inv;
            if let Some(y) = sqrt_mod(y_sq) {
                points.push((x, y));
                if !y.is_zero() {
                    points.push((x, -y));
                }
            }
        }
        points.sort();
        AffineConic { t, u, points }
    }

    pub fn t(&self) -> FpScalar {
        self.t
    }

    pub fn u(&self) -> FpScalar {
        self.u
    }

    pub fn points(&self) -> &[(FpScalar, FpScalar)] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// The permutation `psi` induces on the sorted point list.
    pub fn induced_perm(&self, psi: So2Element) -> Perm {
        debug_assert_eq!(psi.t(), self.t);
        let images = self
            .points
            .iter()
            .map(|&pt| {
                self.points
                    .binary_search(&psi.apply(pt))
                    .expect("the group preserves the conic")
            })
            .collect();
        Perm::from_images(images)
    }
}

/// Whether the group acts simply transitively on `x² - t·y² = u`: the orbit
/// map from any base point is a bijection onto the conic.
pub fn is_simply_transitive(t: FpScalar, u: FpScalar) -> bool {
    let conic = AffineConic::new(t, u);
    let elements = so2_elements(t);
    if elements.len() != conic.len() {
        return false;
    }
    let Some(&base) = conic.points().first() else {
        return false;
    };
    let mut orbit: Vec<(FpScalar, FpScalar)> =
        elements.iter().map(|g| g.apply(base)).collect();
    orbit.sort();
    orbit.dedup();
    orbit == conic.points()
}

/// The sign criterion for the permutation `psi` induces on a level set of
/// its form: predicted is the quadratic character of the parameter `v` of
/// the characteristic polynomial `(x+1)² - v·x`, observed is the sign of the
/// induced permutation on `x² - t·y² = 1`. Panics when `v = 0` (that is,
/// `psi = -identity`), which the criterion excludes.
pub fn sign_criterion(psi: So2Element) -> (i32, i32) {
    let v = psi.quad_parameter();
    assert!(!v.is_zero(), "the sign criterion requires v != 0");
    let p = v.modulus();
    let predicted = v.legendre();
    let conic = AffineConic::new(psi.t(), FpScalar::one(p));
    let observed = conic.induced_perm(psi).sign();
    (predicted, observed)
}
