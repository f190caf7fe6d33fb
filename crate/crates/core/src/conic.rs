//! The projective conic `x² + y² + z² = 0` over `F_p` and the enumeration
//! of its `p + 1` points, which index the prime classes over `p`.

use std::fmt;

use crate::fp::{sqrt_mod, FpScalar};
use crate::primes::is_prime;

/// A point of the conic, normalized so that the first nonzero coordinate in
/// scan order `(x, y, z)` is one. The lexicographic order on normalized
/// coordinates fixes the index each point gets in [`conic_points`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ConicPoint {
    x: FpScalar,
    y: FpScalar,
    z: FpScalar,
}

impl ConicPoint {
    /// Normalizes homogeneous coordinates and checks the conic equation.
    pub fn new(x: FpScalar, y: FpScalar, z: FpScalar) -> Self {
        let on_conic = x * x + y * y + z * z;
        assert!(on_conic.is_zero(), "({x}:{y}:{z}) is not on the conic mod {}", x.modulus());
        let leading = [x, y, z]
            .into_iter()
            .find(|c| !c.is_zero())
            .expect("projective point has a nonzero coordinate");
        let scale = leading.inv();
        ConicPoint { x: x * scale, y: y * scale, z: z * scale }
    }

    pub fn coords(&self) -> [FpScalar; 3] {
        [self.x, self.y, self.z]
    }

    pub fn modulus(&self) -> i64 {
        self.x.modulus()
    }
}

impl fmt::Display for ConicPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{}:{}) mod {}", self.x, self.y, self.z, self.modulus())
    }
}

/// All points of the conic over `F_p`, sorted lexicographically by their
/// normalized coordinates. A smooth conic has exactly `p + 1` points.
pub fn conic_points(p: i64) -> Vec<ConicPoint> {
    assert!(p > 2 && is_prime(p), "{p} is not an odd prime");
    let mut points = Vec::with_capacity(p as usize + 1);
    // Points with x = 0 normalize to (0, 1, z) with z² = -1; (0, 0, 1) is
    // never on the conic.
    if let Some(z) = sqrt_mod(FpScalar::new(-1, p)) {
        points.push(ConicPoint::new(FpScalar::zero(p), FpScalar::one(p), z));
        points.push(ConicPoint::new(FpScalar::zero(p), FpScalar::one(p), -z));
    }
    // Points with x != 0 normalize to (1, y, z) with z² = -(1 + y²).
    for yv in 0..p {
        let y = FpScalar::new(yv, p);
        let rhs = -(FpScalar::one(p) + y * y);
        if let Some(z) = sqrt_mod(rhs) {
            points.push(ConicPoint::new(FpScalar::one(p), y, z));
            if !z.is_zero() {
                points.push(ConicPoint::new(FpScalar::one(p), y, -z));
            }
        }
    }
    points.sort();
    debug_assert_eq!(points.len(), p as usize + 1);
    points
}
