//! Exact arithmetic in the ring of Hurwitz integers: quaternions
//! `a + bi + cj + dk` whose coordinates are all integers or all
//! half-integers.
//!
//! Elements are stored through their *doubled* coordinates `(2a, 2b, 2c, 2d)`
//! so that every coordinate is an exact `i64` and half-integers never touch
//! floating point. Intermediate products are carried in `i128`; a result that
//! does not fit back into `i64` aborts with a panic rather than wrapping.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::LazyLock;

use crate::error::Error;

/// A Hurwitz integer. The four stored values are twice the quaternion
/// coordinates and are either all even (integer coordinates) or all odd
/// (half-integer coordinates).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HurwitzInt {
    d0: i64,
    d1: i64,
    d2: i64,
    d3: i64,
}

pub const ZERO: HurwitzInt = HurwitzInt { d0: 0, d1: 0, d2: 0, d3: 0 };
pub const ONE: HurwitzInt = HurwitzInt { d0: 2, d1: 0, d2: 0, d3: 0 };
pub const I: HurwitzInt = HurwitzInt { d0: 0, d1: 2, d2: 0, d3: 0 };
pub const J: HurwitzInt = HurwitzInt { d0: 0, d1: 0, d2: 2, d3: 0 };
pub const K: HurwitzInt = HurwitzInt { d0: 0, d1: 0, d2: 0, d3: 2 };

fn narrow(v: i128) -> i64 {
    i64::try_from(v).expect("Hurwitz coordinate overflow")
}

impl HurwitzInt {
    /// Builds an element from doubled coordinates. Panics unless the four
    /// values share one parity.
    pub fn from_doubled(d0: i64, d1: i64, d2: i64, d3: i64) -> Self {
        let parity = d0 & 1;
        assert!(
            d1 & 1 == parity && d2 & 1 == parity && d3 & 1 == parity,
            "coordinates must be all integers or all half-integers"
        );
        HurwitzInt { d0, d1, d2, d3 }
    }

    /// `a + bi + cj + dk` with integer coordinates.
    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        HurwitzInt {
            d0: a.checked_mul(2).expect("Hurwitz coordinate overflow"),
            d1: b.checked_mul(2).expect("Hurwitz coordinate overflow"),
            d2: c.checked_mul(2).expect("Hurwitz coordinate overflow"),
            d3: d.checked_mul(2).expect("Hurwitz coordinate overflow"),
        }
    }

    /// The doubled coordinates `(2a, 2b, 2c, 2d)`.
    pub fn doubled(&self) -> [i64; 4] {
        [self.d0, self.d1, self.d2, self.d3]
    }

    pub fn is_zero(&self) -> bool {
        *self == ZERO
    }

    pub fn is_unit(&self) -> bool {
        self.norm() == 1
    }

    /// The reduced norm `a² + b² + c² + d²`, always a nonnegative integer.
    pub fn norm(&self) -> i64 {
        let s = [self.d0, self.d1, self.d2, self.d3]
            .iter()
            .map(|&d| (d as i128) * (d as i128))
            .sum::<i128>();
        // All-even coordinates give a sum divisible by 4; all-odd give
        // 4 mod 8. Either way the quarter is exact.
        debug_assert_eq!(s % 4, 0);
        narrow(s / 4)
    }

    /// The reduced trace `2a`, an integer even when the coordinates are
    /// half-integers.
    pub fn trace(&self) -> i64 {
        self.d0
    }

    /// `a - bi - cj - dk`.
    pub fn conjugate(&self) -> Self {
        HurwitzInt {
            d0: self.d0,
            d1: -self.d1,
            d2: -self.d2,
            d3: -self.d3,
        }
    }

    /// The coordinates `(a, b, c, d)` reduced into `F_p` for an odd prime
    /// `p`. Half-integer coordinates reduce through the inverse of two.
    pub fn reduced(&self, p: i64) -> [crate::fp::FpScalar; 4] {
        use crate::fp::FpScalar;
        debug_assert!(p % 2 == 1);
        let inv2 = FpScalar::new(2, p).inv();
        self.doubled().map(|d| FpScalar::new(d, p) * inv2)
    }
}

impl Add for HurwitzInt {
    type Output = HurwitzInt;
    fn add(self, rhs: HurwitzInt) -> HurwitzInt {
        HurwitzInt {
            d0: self.d0.checked_add(rhs.d0).expect("Hurwitz coordinate overflow"),
            d1: self.d1.checked_add(rhs.d1).expect("Hurwitz coordinate overflow"),
            d2: self.d2.checked_add(rhs.d2).expect("Hurwitz coordinate overflow"),
            d3: self.d3.checked_add(rhs.d3).expect("Hurwitz coordinate overflow"),
        }
    }
}

impl Sub for HurwitzInt {
    type Output = HurwitzInt;
    fn sub(self, rhs: HurwitzInt) -> HurwitzInt {
        self + (-rhs)
    }
}

impl Neg for HurwitzInt {
    type Output = HurwitzInt;
    fn neg(self) -> HurwitzInt {
        HurwitzInt {
            d0: -self.d0,
            d1: -self.d1,
            d2: -self.d2,
            d3: -self.d3,
        }
    }
}

impl Mul for HurwitzInt {
    type Output = HurwitzInt;

    /// Quaternion product with `i² = j² = k² = -1`, `ij = k`, `jk = i`,
    /// `ki = j`.
    fn mul(self, rhs: HurwitzInt) -> HurwitzInt {
        let [w1, x1, y1, z1] = self.doubled().map(|d| d as i128);
        let [w2, x2, y2, z2] = rhs.doubled().map(|d| d as i128);
        // The Hamilton product of the doubled vectors is twice the doubled
        // vector of the product.
        let w = w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2;
        let x = w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2;
        let y = w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2;
        let z = w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2;
        debug_assert!(w % 2 == 0 && x % 2 == 0 && y % 2 == 0 && z % 2 == 0);
        HurwitzInt {
            d0: narrow(w / 2),
            d1: narrow(x / 2),
            d2: narrow(y / 2),
            d3: narrow(z / 2),
        }
    }
}

/// One of the 24 invertible Hurwitz integers.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct HurwitzUnit(HurwitzInt);

impl HurwitzUnit {
    pub fn new(x: HurwitzInt) -> Option<Self> {
        (x.norm() == 1).then_some(HurwitzUnit(x))
    }

    pub fn value(self) -> HurwitzInt {
        self.0
    }

    /// The inverse unit; for norm one this is the conjugate.
    pub fn inverse(self) -> Self {
        HurwitzUnit(self.0.conjugate())
    }
}

impl fmt::Display for HurwitzUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

static UNITS: LazyLock<[HurwitzUnit; 24]> = LazyLock::new(|| {
    let mut out = Vec::with_capacity(24);
    for axis in 0..4 {
        for sign in [2i64, -2] {
            let mut d = [0i64; 4];
            d[axis] = sign;
            out.push(HurwitzUnit(HurwitzInt::from_doubled(d[0], d[1], d[2], d[3])));
        }
    }
    for mask in 0..16u32 {
        let s = |bit: u32| if mask >> bit & 1 == 0 { 1i64 } else { -1 };
        out.push(HurwitzUnit(HurwitzInt::from_doubled(s(0), s(1), s(2), s(3))));
    }
    out.try_into().unwrap()
});

/// The unit group of the Hurwitz order: `±1, ±i, ±j, ±k` and
/// `(±1 ± i ± j ± k)/2`.
pub fn units() -> &'static [HurwitzUnit; 24] {
    &UNITS
}

impl fmt::Debug for HurwitzInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HurwitzInt({self})")
    }
}

impl fmt::Display for HurwitzInt {
    /// Text form `a+bi+cj+dk` with half-integer coordinates written `n/2`
    /// and zero terms omitted; the zero element prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, basis) in self.doubled().into_iter().zip(["", "i", "j", "k"]) {
            if d == 0 {
                continue;
            }
            if first {
                if d < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{}", if d < 0 { '-' } else { '+' })?;
            }
            let m = d.unsigned_abs();
            if m % 2 == 0 {
                let whole = m / 2;
                if whole != 1 || basis.is_empty() {
                    write!(f, "{whole}")?;
                }
            } else {
                write!(f, "{m}/2")?;
            }
            write!(f, "{basis}")?;
        }
        Ok(())
    }
}

impl FromStr for HurwitzInt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let err = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let compact: Vec<u8> = s.bytes().filter(|b| !b.is_ascii_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty input"));
        }
        // One doubled value per component of (1, i, j, k); None = not yet seen.
        let mut coords: [Option<i64>; 4] = [None; 4];
        let mut pos = 0usize;
        while pos < compact.len() {
            let negative = match compact[pos] {
                b'-' => {
                    pos += 1;
                    true
                }
                b'+' => {
                    pos += 1;
                    false
                }
                _ if pos == 0 => false,
                _ => return Err(err("expected '+' or '-' between terms")),
            };
            let digit_start = pos;
            while pos < compact.len() && compact[pos].is_ascii_digit() {
                pos += 1;
            }
            let magnitude: Option<i64> = if pos > digit_start {
                let text = std::str::from_utf8(&compact[digit_start..pos]).unwrap();
                Some(text.parse().map_err(|_| err("coordinate out of range"))?)
            } else {
                None
            };
            let halved = if pos + 1 < compact.len() && compact[pos] == b'/' {
                if compact[pos + 1] != b'2' {
                    return Err(err("only halves 'n/2' are allowed"));
                }
                if magnitude.is_none() {
                    return Err(err("'/' without a numerator"));
                }
                pos += 2;
                true
            } else {
                false
            };
            let component = match compact.get(pos) {
                Some(b'i') => {
                    pos += 1;
                    1
                }
                Some(b'j') => {
                    pos += 1;
                    2
                }
                Some(b'k') => {
                    pos += 1;
                    3
                }
                _ => 0,
            };
            let doubled = match (magnitude, component) {
                (Some(m), _) if halved => m,
                (Some(m), _) => m.checked_mul(2).ok_or_else(|| err("coordinate out of range"))?,
                (None, 0) => return Err(err("expected a coordinate or basis element")),
                (None, _) => 2,
            };
            let doubled = if negative { -doubled } else { doubled };
            if coords[component].is_some() {
                return Err(err("a component appears twice"));
            }
            coords[component] = Some(doubled);
        }
        let [d0, d1, d2, d3] = coords.map(|c| c.unwrap_or(0));
        let parity = d0 & 1;
        if d1 & 1 != parity || d2 & 1 != parity || d3 & 1 != parity {
            return Err(err("coordinates must be all integers or all half-integers"));
        }
        Ok(HurwitzInt { d0, d1, d2, d3 })
    }
}
