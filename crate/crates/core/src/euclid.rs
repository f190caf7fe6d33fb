//! The one-sided Euclidean algorithm for Hurwitz integers: division with
//! small remainder, greatest common right divisors, canonical left-associate
//! representatives, and factorizations modeled on an ordered factorization
//! of the norm.

use crate::error::Error;
use crate::fp::{sqrt_mod, FpScalar};
use crate::primes::is_prime;
use crate::quaternion::{units, HurwitzInt, ONE};

/// Floor of `a / b` for positive `b`.
fn div_floor(a: i128, b: i128) -> i128 {
    debug_assert!(b > 0);
    a.div_euclid(b)
}

/// Nearest integer to `a / b` for positive `b`, rounding exact halves up.
fn div_round(a: i128, b: i128) -> i128 {
    div_floor(2 * a + b, 2 * b)
}

/// Left division: a quotient/remainder pair with `a = q·b + r` and
/// `norm(r) < norm(b)`.
///
/// The exact quotient `a·b̄/norm(b)` is rounded coordinatewise both to the
/// nearest integer vector and to the nearest half-odd-integer vector; the
/// candidate with the smaller remainder norm wins, ties broken by the
/// lexicographically smaller doubled-coordinate tuple of the quotient. One
/// of the two candidates always lands within squared distance 1/2 of the
/// exact quotient, so the remainder contract holds.
///
/// Panics when `b` is zero.
pub fn left_divmod(a: HurwitzInt, b: HurwitzInt) -> (HurwitzInt, HurwitzInt) {
    assert!(!b.is_zero(), "division by zero Hurwitz integer");
    let n = b.norm() as i128;
    let numerator = a * b.conjugate();
    let m = numerator.doubled().map(|d| d as i128);

    // Doubled coordinates of the exact quotient are m[i]/n; its true
    // coordinates are m[i]/(2n).
    let ints = m.map(|mi| 2 * div_round(mi, 2 * n));
    let halves = m.map(|mi| 2 * div_floor(mi, 2 * n) + 1);

    let mut best: Option<(i64, HurwitzInt, HurwitzInt)> = None;
    for cand in [ints, halves] {
        let q = HurwitzInt::from_doubled(
            i64::try_from(cand[0]).expect("quotient overflow"),
            i64::try_from(cand[1]).expect("quotient overflow"),
            i64::try_from(cand[2]).expect("quotient overflow"),
            i64::try_from(cand[3]).expect("quotient overflow"),
        );
        let r = a - q * b;
        let key = (r.norm(), q, r);
        if best.as_ref().is_none_or(|b| key < (b.0, b.1, b.2)) {
            best = Some(key);
        }
    }
    let (rnorm, q, r) = best.unwrap();
    debug_assert!(rnorm < b.norm());
    (q, r)
}

/// The canonical representative of the left-associate class of `x`: the
/// lexicographically smallest of the 24 products `u·x` by doubled
/// coordinates. Zero is its own representative.
pub fn canonicalize(x: HurwitzInt) -> HurwitzInt {
    if x.is_zero() {
        return x;
    }
    units().iter().map(|u| u.value() * x).min().unwrap()
}

/// Whether `x = u·y` for some unit `u`.
pub fn is_left_associate(x: HurwitzInt, y: HurwitzInt) -> bool {
    x.norm() == y.norm() && units().iter().any(|u| u.value() * y == x)
}

/// Whether `x = y·u` for some unit `u`.
pub fn is_right_associate(x: HurwitzInt, y: HurwitzInt) -> bool {
    x.norm() == y.norm() && units().iter().any(|u| y * u.value() == x)
}

/// A generator of the left ideal `H·a + H·b`, canonicalized so the result
/// is deterministic. Both `a` and `b` are left multiples of it. Panics when
/// both arguments are zero.
pub fn gcrd(a: HurwitzInt, b: HurwitzInt) -> HurwitzInt {
    gcrd_ext(a, b).0
}

/// Extended form of [`gcrd`]: returns `(g, s, t)` with `g = s·a + t·b`.
pub fn gcrd_ext(a: HurwitzInt, b: HurwitzInt) -> (HurwitzInt, HurwitzInt, HurwitzInt) {
    assert!(!a.is_zero() || !b.is_zero(), "gcrd of zero and zero");
    use crate::quaternion::ZERO;
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (ONE, ZERO);
    let (mut t0, mut t1) = (ZERO, ONE);
    while !r1.is_zero() {
        let (q, r) = left_divmod(r0, r1);
        (r0, r1) = (r1, r);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    let canonical = canonicalize(r0);
    let u = units()
        .iter()
        .find(|u| u.value() * r0 == canonical)
        .expect("canonical form is a unit multiple");
    (canonical, u.value() * s0, u.value() * t0)
}

/// The exact quotient `y` with `x = y·d`, when `d` right-divides `x`.
pub fn exact_right_div(x: HurwitzInt, d: HurwitzInt) -> Option<HurwitzInt> {
    if d.is_zero() {
        return None;
    }
    let n = d.norm();
    let m = x * d.conjugate();
    let coords = m.doubled();
    if coords.iter().any(|&c| c % n != 0) {
        return None;
    }
    let [d0, d1, d2, d3] = coords.map(|c| c / n);
    let parity = d0 & 1;
    if d1 & 1 != parity || d2 & 1 != parity || d3 & 1 != parity {
        return None;
    }
    let y = HurwitzInt::from_doubled(d0, d1, d2, d3);
    (y * d == x).then_some(y)
}

/// An ordered factorization of a Hurwitz integer into primes whose norms
/// follow the model, so that `factors[i]` has norm `model[i]` and the
/// ordered product of the factors is the original element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModeledFactorization {
    pub factors: Vec<HurwitzInt>,
    pub model: Vec<i64>,
}

impl ModeledFactorization {
    /// The ordered product of the factors (the identity for an empty list).
    pub fn product(&self) -> HurwitzInt {
        self.factors.iter().fold(ONE, |acc, &f| acc * f)
    }
}

/// Some Hurwitz prime of norm `p`, canonicalized. For odd `p` it is cut out
/// of a trace-zero element whose norm vanishes mod `p`.
fn prime_over(p: i64) -> HurwitzInt {
    debug_assert!(is_prime(p));
    if p == 2 {
        return canonicalize(HurwitzInt::from_ints(1, 1, 0, 0));
    }
    // Find x² + y² = -1 mod p; then x·i + y·j + k has norm divisible by p.
    for xv in 0..p {
        let x = FpScalar::new(xv, p);
        let rhs = FpScalar::new(-1, p) - x * x;
        if let Some(y) = sqrt_mod(rhs) {
            let lift = HurwitzInt::from_ints(0, x.value(), y.value(), 1);
            let g = gcrd(HurwitzInt::from_ints(p, 0, 0, 0), lift);
            assert_eq!(g.norm(), p);
            return g;
        }
    }
    unreachable!("x² + y² = -1 is always solvable over F_p");
}

/// Factors `x` into Hurwitz primes modeled on an ordered factorization of
/// its norm: `factors[i]` has norm `model[i]` and the ordered product of
/// the factors equals `x` exactly.
///
/// Factors are peeled off the right end: the last factor is a canonicalized
/// generator of `H·model[n-1] + H·x`, and the leading factor absorbs the
/// remaining unit slack so the product stays exact. An empty model requires
/// a unit and yields an empty factor list.
pub fn factor_modeled(x: HurwitzInt, model: &[i64]) -> Result<ModeledFactorization, Error> {
    if x.is_zero() {
        return Err(Error::FactorZero);
    }
    for &m in model {
        if !is_prime(m) {
            return Err(Error::ModelEntryNotPrime(m));
        }
    }
    let product: i128 = model.iter().map(|&m| m as i128).product();
    if product != x.norm() as i128 {
        return Err(Error::ModelNormMismatch {
            model: model.to_vec(),
            product,
            norm: x.norm(),
        });
    }
    let mut factors = vec![ONE; model.len()];
    let mut rest = x;
    for (idx, &p) in model.iter().enumerate().skip(1).rev() {
        let central = HurwitzInt::from_ints(p, 0, 0, 0);
        let factor = match exact_right_div(rest, central) {
            // p divides rest outright; split p as P̄·P for a fixed prime P
            // over p and absorb P̄ into the left cofactor.
            Some(quotient) => {
                let prime = prime_over(p);
                rest = quotient * prime.conjugate();
                prime
            }
            None => {
                let g = gcrd(central, rest);
                assert_eq!(g.norm(), p, "right ideal generator must have norm {p}");
                rest = exact_right_div(rest, g).expect("gcrd right-divides");
                g
            }
        };
        factors[idx] = factor;
    }
    if let Some(first) = factors.first_mut() {
        assert_eq!(rest.norm(), model[0]);
        *first = rest;
    }
    Ok(ModeledFactorization { factors, model: model.to_vec() })
}
