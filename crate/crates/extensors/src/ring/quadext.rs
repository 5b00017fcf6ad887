use std::fmt;

use super::{Rational, Ring};

/// An element a + b·√3 of the quadratic extension Q(√3).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadExt {
    pub a: Rational,
    pub b: Rational,
}

impl QuadExt {
    pub fn new(a: Rational, b: Rational) -> QuadExt {
        QuadExt { a, b }
    }

    pub fn from_integers(a: i64, b: i64) -> QuadExt {
        QuadExt {
            a: Rational::from_integer(a.into()),
            b: Rational::from_integer(b.into()),
        }
    }

    /// √3 itself.
    pub fn sqrt3() -> QuadExt {
        QuadExt::from_integers(0, 1)
    }

    /// The field norm a² − 3b²; multiplicative, and zero only at zero
    /// because 3 is not a rational square.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - Rational::from_integer(3.into()) * &self.b * &self.b
    }

    /// True when the √3 component vanishes.
    pub fn is_rational(&self) -> bool {
        num_traits::Zero::is_zero(&self.b)
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*sqrt3", self.a, self.b)
    }
}

/// Multiplies under (a+b√3)(c+d√3) = (ac+3bd) + (ad+bc)√3.
pub fn quadext_multiply(x: &QuadExt, y: &QuadExt) -> QuadExt {
    let three = Rational::from_integer(3.into());
    QuadExt {
        a: &x.a * &y.a + &three * &x.b * &y.b,
        b: &x.a * &y.b + &x.b * &y.a,
    }
}

/// The field Q(√3) as a ring descriptor.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct QuadExtRing;

impl Ring for QuadExtRing {
    type Element = QuadExt;

    fn zero(&self) -> QuadExt {
        QuadExt::from_integers(0, 0)
    }

    fn one(&self) -> QuadExt {
        QuadExt::from_integers(1, 0)
    }

    fn is_zero(&self, x: &QuadExt) -> bool {
        num_traits::Zero::is_zero(&x.a) && num_traits::Zero::is_zero(&x.b)
    }

    fn add(&self, x: &QuadExt, y: &QuadExt) -> QuadExt {
        QuadExt {
            a: &x.a + &y.a,
            b: &x.b + &y.b,
        }
    }

    fn neg(&self, x: &QuadExt) -> QuadExt {
        QuadExt {
            a: -&x.a,
            b: -&x.b,
        }
    }

    fn mul(&self, x: &QuadExt, y: &QuadExt) -> QuadExt {
        quadext_multiply(x, y)
    }

    fn from_i64(&self, n: i64) -> QuadExt {
        QuadExt::from_integers(n, 0)
    }
}
