//! Scalar and small-matrix arithmetic over the prime fields `F_p`: the
//! Legendre symbol, deterministic modular square roots, and 2×2 / 3×3
//! matrices with their characteristic polynomials.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::primes::is_prime;

/// An element of `F_p`, stored reduced to `[0, p)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct FpScalar {
    value: i64,
    p: i64,
}

impl FpScalar {
    pub fn new(n: i64, p: i64) -> Self {
        debug_assert!(p >= 2);
        FpScalar { value: n.rem_euclid(p), p }
    }

    pub fn zero(p: i64) -> Self {
        FpScalar { value: 0, p }
    }

    pub fn one(p: i64) -> Self {
        FpScalar::new(1, p)
    }

    pub fn value(self) -> i64 {
        self.value
    }

    pub fn modulus(self) -> i64 {
        self.p
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = FpScalar::one(self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(self) -> Self {
        assert!(!self.is_zero(), "inverse of zero in F_{}", self.p);
        self.pow(self.p as u64 - 2)
    }

    /// The Legendre symbol of this residue.
    pub fn legendre(self) -> i32 {
        legendre(self.value, self.p)
    }

    /// Deterministic square root: the root in `[0, p/2]` when one exists.
    pub fn sqrt(self) -> Option<Self> {
        sqrt_mod(self)
    }
}

fn check_same_field(a: FpScalar, b: FpScalar) {
    assert_eq!(a.p, b.p, "mixed moduli {} and {}", a.p, b.p);
}

impl Add for FpScalar {
    type Output = FpScalar;
    fn add(self, rhs: FpScalar) -> FpScalar {
        check_same_field(self, rhs);
        FpScalar::new(self.value + rhs.value, self.p)
    }
}

impl Sub for FpScalar {
    type Output = FpScalar;
    fn sub(self, rhs: FpScalar) -> FpScalar {
        check_same_field(self, rhs);
        FpScalar::new(self.value - rhs.value, self.p)
    }
}

impl Neg for FpScalar {
    type Output = FpScalar;
    fn neg(self) -> FpScalar {
        FpScalar::new(-self.value, self.p)
    }
}

impl Mul for FpScalar {
    type Output = FpScalar;
    fn mul(self, rhs: FpScalar) -> FpScalar {
        check_same_field(self, rhs);
        let wide = self.value as i128 * rhs.value as i128;
        FpScalar {
            value: wide.rem_euclid(self.p as i128) as i64,
            p: self.p,
        }
    }
}

impl fmt::Display for FpScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// The Legendre symbol `(n/p)`: `0` when `p | n`, `+1` for nonzero squares,
/// `-1` for nonsquares. Panics unless `p` is an odd prime.
pub fn legendre(n: i64, p: i64) -> i32 {
    assert!(p > 2 && is_prime(p), "{p} is not an odd prime");
    let n = n.rem_euclid(p);
    if n == 0 {
        return 0;
    }
    let e = FpScalar::new(n, p).pow((p as u64 - 1) / 2);
    if e.value() == 1 {
        1
    } else {
        debug_assert_eq!(e.value(), p - 1);
        -1
    }
}

/// Square root in `F_p` via Tonelli–Shanks, with a deterministic choice of
/// non-residue and of root (the one in `[0, p/2]`). `None` for nonsquares.
pub fn sqrt_mod(n: FpScalar) -> Option<FpScalar> {
    let p = n.modulus();
    assert!(p > 2 && is_prime(p), "{p} is not an odd prime");
    if n.is_zero() {
        return Some(n);
    }
    if n.legendre() == -1 {
        return None;
    }
    let root = if p % 4 == 3 {
        n.pow((p as u64 + 1) / 4)
    } else {
        tonelli_shanks(n)
    };
    debug_assert_eq!(root * root, n);
    Some(if root.value() <= p / 2 { root } else { -root })
}

fn tonelli_shanks(n: FpScalar) -> FpScalar {
    let p = n.modulus();
    let mut q = p as u64 - 1;
    let mut s = 0u32;
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    // Smallest quadratic non-residue; a short scan suffices for any prime.
    let z = (2..p)
        .map(|z| FpScalar::new(z, p))
        .find(|z| z.legendre() == -1)
        .expect("every odd prime has a non-residue");
    let mut c = z.pow(q);
    let mut r = n.pow((q + 1) / 2);
    let mut t = n.pow(q);
    let mut m = s;
    while t.value() != 1 {
        let mut i = 0u32;
        let mut probe = t;
        while probe.value() != 1 {
            probe = probe * probe;
            i += 1;
        }
        debug_assert!(i < m);
        let b = c.pow(1 << (m - i - 1));
        r = r * b;
        c = b * b;
        t = t * c;
        m = i;
    }
    r
}

/// A solution `(x, y)` of `alpha·x² + beta·y² = 1`, which exists for any
/// nonzero `alpha`, `beta` by pigeonhole. Deterministic: the smallest `x`
/// in `[0, p)` admitting a solution, then the smaller root `y`.
pub fn solve_unit_form(alpha: FpScalar, beta: FpScalar) -> (FpScalar, FpScalar) {
    check_same_field(alpha, beta);
    let p = alpha.modulus();
    assert!(!alpha.is_zero() && !beta.is_zero(), "form coefficients must be nonzero");
    let beta_inv = beta.inv();
    for xv in 0..p {
        let x = FpScalar::new(xv, p);
        let rhs = (FpScalar::one(p) - alpha * x * x) * beta_inv;
        if let Some(y) = sqrt_mod(rhs) {
            return (x, y);
        }
    }
    unreachable!("alpha·x² + beta·y² = 1 is always solvable over F_p");
}

/// A 2×2 matrix over `F_p`, row major.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Mat2 {
    rows: [[FpScalar; 2]; 2],
}

impl Mat2 {
    pub fn new(rows: [[FpScalar; 2]; 2]) -> Self {
        let p = rows[0][0].modulus();
        assert!(rows.iter().flatten().all(|e| e.modulus() == p));
        Mat2 { rows }
    }

    pub fn identity(p: i64) -> Self {
        let o = FpScalar::one(p);
        let z = FpScalar::zero(p);
        Mat2 { rows: [[o, z], [z, o]] }
    }

    pub fn entry(&self, i: usize, j: usize) -> FpScalar {
        self.rows[i][j]
    }

    pub fn mul(&self, rhs: &Mat2) -> Mat2 {
        let p = self.rows[0][0].modulus();
        let mut out = [[FpScalar::zero(p); 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                let mut acc = FpScalar::zero(p);
                for k in 0..2 {
                    acc = acc + self.rows[i][k] * rhs.rows[k][j];
                }
                out[i][j] = acc;
            }
        }
        Mat2 { rows: out }
    }

    pub fn mul_vec(&self, v: [FpScalar; 2]) -> [FpScalar; 2] {
        [
            self.rows[0][0] * v[0] + self.rows[0][1] * v[1],
            self.rows[1][0] * v[0] + self.rows[1][1] * v[1],
        ]
    }

    pub fn det(&self) -> FpScalar {
        self.rows[0][0] * self.rows[1][1] - self.rows[0][1] * self.rows[1][0]
    }

    pub fn trace(&self) -> FpScalar {
        self.rows[0][0] + self.rows[1][1]
    }
}

/// A 3×3 matrix over `F_p`, row major.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Mat3 {
    rows: [[FpScalar; 3]; 3],
}

impl Mat3 {
    pub fn new(rows: [[FpScalar; 3]; 3]) -> Self {
        let p = rows[0][0].modulus();
        assert!(rows.iter().flatten().all(|e| e.modulus() == p));
        Mat3 { rows }
    }

    pub fn identity(p: i64) -> Self {
        let o = FpScalar::one(p);
        let z = FpScalar::zero(p);
        Mat3 { rows: [[o, z, z], [z, o, z], [z, z, o]] }
    }

    pub fn entry(&self, i: usize, j: usize) -> FpScalar {
        self.rows[i][j]
    }

    pub fn modulus(&self) -> i64 {
        self.rows[0][0].modulus()
    }

    pub fn mul(&self, rhs: &Mat3) -> Mat3 {
        let p = self.modulus();
        let mut out = [[FpScalar::zero(p); 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = FpScalar::zero(p);
                for k in 0..3 {
                    acc = acc + self.rows[i][k] * rhs.rows[k][j];
                }
                out[i][j] = acc;
            }
        }
        Mat3 { rows: out }
    }

    pub fn mul_vec(&self, v: [FpScalar; 3]) -> [FpScalar; 3] {
        let mut out = [FpScalar::zero(self.modulus()); 3];
        for i in 0..3 {
            let mut acc = FpScalar::zero(self.modulus());
            for k in 0..3 {
                acc = acc + self.rows[i][k] * v[k];
            }
            out[i] = acc;
        }
        out
    }

    pub fn transpose(&self) -> Mat3 {
        let mut out = self.rows;
        for i in 0..3 {
            for j in 0..3 {
                out[i][j] = self.rows[j][i];
            }
        }
        Mat3 { rows: out }
    }

    pub fn trace(&self) -> FpScalar {
        self.rows[0][0] + self.rows[1][1] + self.rows[2][2]
    }

    pub fn det(&self) -> FpScalar {
        let m = &self.rows;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    /// Coefficients `[c0, c1, c2]` of the monic characteristic polynomial
    /// `x³ + c2·x² + c1·x + c0 = det(xI - M)`.
    pub fn char_poly(&self) -> [FpScalar; 3] {
        let m = &self.rows;
        let c2 = -self.trace();
        let minor = |i: usize, j: usize| m[i][i] * m[j][j] - m[i][j] * m[j][i];
        let c1 = minor(0, 1) + minor(0, 2) + minor(1, 2);
        let c0 = -self.det();
        [c0, c1, c2]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn legendre_basics() {
        for p in [3, 5, 7, 11, 13] {
            assert_eq!(legendre(1, p), 1);
        }
        // Squares mod 5 are {1, 4}.
        assert_eq!(legendre(3, 5), -1);
        assert_eq!(legendre(10, 5), 0);
        assert_eq!(legendre(-1, 5), 1);
        assert_eq!(legendre(-1, 7), -1);
    }

    #[test]
    fn legendre_counts_and_multiplicativity() {
        for p in [3i64, 5, 7, 11, 13, 17, 19, 23] {
            let squares = (1..p).filter(|&n| legendre(n, p) == 1).count() as i64;
            assert_eq!(squares, (p - 1) / 2);
            for m in 1..p {
                for n in 1..p {
                    assert_eq!(legendre(m * n, p), legendre(m, p) * legendre(n, p));
                }
            }
        }
    }

    #[test]
    fn sqrt_examples() {
        let r = sqrt_mod(FpScalar::new(4, 7)).unwrap();
        assert_eq!(r.value(), 2);
        assert_eq!(sqrt_mod(FpScalar::zero(7)).unwrap().value(), 0);
        assert!(sqrt_mod(FpScalar::new(3, 5)).is_none());
    }

    #[test]
    fn sqrt_is_exhaustively_correct_for_small_p() {
        for p in [3i64, 5, 7, 11, 13, 17, 29, 41, 97, 113] {
            for n in 0..p {
                let x = FpScalar::new(n, p);
                match sqrt_mod(x) {
                    Some(r) => {
                        assert_eq!(r * r, x);
                        assert!(r.value() <= p / 2, "root not canonical for {n} mod {p}");
                    }
                    None => {
                        assert_eq!(legendre(n, p), -1);
                    }
                }
            }
        }
    }

    #[test]
    fn unit_form_solutions() {
        // p = 3, alpha = beta = 1: x = 0 admits y = 1.
        let (x, y) = solve_unit_form(FpScalar::one(3), FpScalar::one(3));
        assert_eq!((x.value(), y.value()), (0, 1));

        // alpha = 1 and x = 1 works with y = 0 whenever the scan reaches it;
        // the contract only promises a valid solution.
        for p in [5i64, 7, 11, 13] {
            for a in 1..p {
                for b in 1..p {
                    let alpha = FpScalar::new(a, p);
                    let beta = FpScalar::new(b, p);
                    let (x, y) = solve_unit_form(alpha, beta);
                    assert_eq!(alpha * x * x + beta * y * y, FpScalar::one(p));
                }
            }
        }
    }

    #[test]
    fn unit_form_scan_order_matches_exhaustive_scan() {
        // p = 5, alpha = 2, beta = 3: first (x, y) in scan order.
        let p = 5;
        let alpha = FpScalar::new(2, p);
        let beta = FpScalar::new(3, p);
        let mut expected = None;
        'outer: for x in 0..p {
            for y in 0..p {
                if (2 * x * x + 3 * y * y) % p == 1 {
                    expected = Some((x, y));
                    break 'outer;
                }
            }
        }
        let (x, y) = solve_unit_form(alpha, beta);
        assert_eq!(Some((x.value(), y.value())), expected);
    }

    #[test]
    fn char_poly_of_diagonal_matrices() {
        let p = 11;
        let id = Mat3::identity(p);
        // (x-1)³ = x³ - 3x² + 3x - 1
        let expect = [FpScalar::new(-1, p), FpScalar::new(3, p), FpScalar::new(-3, p)];
        assert_eq!(id.char_poly(), expect);

        let d = |a: i64, b: i64, c: i64| {
            let z = FpScalar::zero(p);
            Mat3::new([
                [FpScalar::new(a, p), z, z],
                [z, FpScalar::new(b, p), z],
                [z, z, FpScalar::new(c, p)],
            ])
        };
        // (x-1)(x+1)² = x³ + x² - x - 1
        let m = d(1, -1, -1);
        assert_eq!(
            m.char_poly(),
            [FpScalar::new(-1, p), FpScalar::new(-1, p), FpScalar::new(1, p)]
        );
    }

    /// Dense polynomial over F_p used as an independent characteristic
    /// polynomial oracle: expand det(xI - M) by cofactors on degree-one
    /// entries.
    #[derive(Clone, Debug, PartialEq)]
    struct Poly {
        coeffs: Vec<FpScalar>,
        p: i64,
    }

    impl Poly {
        fn constant(c: FpScalar) -> Poly {
            Poly { coeffs: vec![c], p: c.modulus() }
        }

        fn linear(c0: FpScalar, c1: FpScalar) -> Poly {
            Poly { coeffs: vec![c0, c1], p: c0.modulus() }
        }

        fn add(&self, rhs: &Poly) -> Poly {
            let n = self.coeffs.len().max(rhs.coeffs.len());
            let z = FpScalar::zero(self.p);
            let mut out = vec![z; n];
            for (i, slot) in out.iter_mut().enumerate() {
                let a = self.coeffs.get(i).copied().unwrap_or(z);
                let b = rhs.coeffs.get(i).copied().unwrap_or(z);
                *slot = a + b;
            }
            Poly { coeffs: out, p: self.p }
        }

        fn sub(&self, rhs: &Poly) -> Poly {
            let negated = Poly {
                coeffs: rhs.coeffs.iter().map(|&c| -c).collect(),
                p: rhs.p,
            };
            self.add(&negated)
        }

        fn mul(&self, rhs: &Poly) -> Poly {
            let z = FpScalar::zero(self.p);
            let mut out = vec![z; self.coeffs.len() + rhs.coeffs.len() - 1];
            for (i, &a) in self.coeffs.iter().enumerate() {
                for (j, &b) in rhs.coeffs.iter().enumerate() {
                    out[i + j] = out[i + j] + a * b;
                }
            }
            Poly { coeffs: out, p: self.p }
        }
    }

    fn char_poly_oracle(m: &Mat3) -> [FpScalar; 3] {
        let p = m.modulus();
        let e = |i: usize, j: usize| {
            if i == j {
                Poly::linear(-m.entry(i, j), FpScalar::one(p))
            } else {
                Poly::constant(-m.entry(i, j))
            }
        };
        let det = e(0, 0)
            .mul(&e(1, 1).mul(&e(2, 2)).sub(&e(1, 2).mul(&e(2, 1))))
            .sub(&e(0, 1).mul(&e(1, 0).mul(&e(2, 2)).sub(&e(1, 2).mul(&e(2, 0)))))
            .add(&e(0, 2).mul(&e(1, 0).mul(&e(2, 1)).sub(&e(1, 1).mul(&e(2, 0)))));
        assert_eq!(det.coeffs.len(), 4);
        assert_eq!(det.coeffs[3], FpScalar::one(p));
        [det.coeffs[0], det.coeffs[1], det.coeffs[2]]
    }

    proptest! {
        #[test]
        fn char_poly_matches_cofactor_expansion(
            entries in proptest::array::uniform9(0i64..97),
            p_idx in 0usize..4,
        ) {
            let p = [5i64, 13, 31, 97][p_idx];
            let s = |n: i64| FpScalar::new(n, p);
            let m = Mat3::new([
                [s(entries[0]), s(entries[1]), s(entries[2])],
                [s(entries[3]), s(entries[4]), s(entries[5])],
                [s(entries[6]), s(entries[7]), s(entries[8])],
            ]);
            prop_assert_eq!(m.char_poly(), char_poly_oracle(&m));
        }
    }
}
