use std::ops::{Add, Mul, Neg, Sub};

use super::{GeomError, Sign};

/// Magnitude bound on either component of an [`Rt3`] for which [`Rt3::sign`]
/// can square both parts in 128-bit arithmetic.
pub const RT3_COMPONENT_LIMIT: i128 = 1 << 62;

/// The real number `a + b·√3`, carried exactly as an integer pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Rt3 {
    pub a: i128,
    pub b: i128,
}

impl Rt3 {
    pub const ZERO: Rt3 = Rt3 { a: 0, b: 0 };

    pub const fn new(a: i128, b: i128) -> Self {
        Rt3 { a, b }
    }

    pub const fn int(a: i128) -> Self {
        Rt3 { a, b: 0 }
    }

    /// Exact sign, or a range error when a component is too large to square.
    pub fn try_sign(self) -> Result<Sign, GeomError> {
        if self.a.abs() >= RT3_COMPONENT_LIMIT || self.b.abs() >= RT3_COMPONENT_LIMIT {
            return Err(GeomError::Range(format!(
                "a + b*sqrt(3) with a={}, b={} exceeds the exact-sign range",
                self.a, self.b
            )));
        }
        let sa = Sign::of(self.a);
        let sb = Sign::of(self.b);
        if sa == sb || sb == Sign::Zero {
            return Ok(sa);
        }
        if sa == Sign::Zero {
            return Ok(sb);
        }
        // Opposite signs: the term with the larger square wins.
        let aa = self.a * self.a;
        let bb = 3 * self.b * self.b;
        Ok(match aa.cmp(&bb) {
            std::cmp::Ordering::Greater => sa,
            std::cmp::Ordering::Less => sb,
            std::cmp::Ordering::Equal => Sign::Zero,
        })
    }

    /// Exact sign. Panics outside the kernel's range; every quantity built
    /// from validated coordinates stays inside it.
    pub fn sign(self) -> Sign {
        match self.try_sign() {
            Ok(s) => s,
            Err(e) => panic!("{e}"),
        }
    }

    pub fn to_f64(self) -> f64 {
        self.a as f64 + self.b as f64 * 3f64.sqrt()
    }
}

impl Add for Rt3 {
    type Output = Rt3;
    fn add(self, o: Rt3) -> Rt3 {
        Rt3::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for Rt3 {
    type Output = Rt3;
    fn sub(self, o: Rt3) -> Rt3 {
        Rt3::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for Rt3 {
    type Output = Rt3;
    fn neg(self) -> Rt3 {
        Rt3::new(-self.a, -self.b)
    }
}

impl Mul<i128> for Rt3 {
    type Output = Rt3;
    fn mul(self, k: i128) -> Rt3 {
        Rt3::new(self.a * k, self.b * k)
    }
}

impl Mul for Rt3 {
    type Output = Rt3;
    fn mul(self, o: Rt3) -> Rt3 {
        // (a + b√3)(c + d√3) = (ac + 3bd) + (ad + bc)√3
        Rt3::new(self.a * o.a + 3 * self.b * o.b, self.a * o.b + self.b * o.a)
    }
}

/// Exact sign of `a + b·√3`.
pub fn exact_sign(v: Rt3) -> Result<Sign, GeomError> {
    v.try_sign()
}
