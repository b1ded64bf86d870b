//! Rationals in lowest terms, with `1/0` standing for infinity.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::VertexId;

fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A canonical fraction `num/den`: `den >= 0`, `gcd(|num|, den) = 1`, and
/// `den = 0` only for `1/0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fraction {
    num: i64,
    den: i64,
}

impl Fraction {
    pub const ZERO: Fraction = Fraction { num: 0, den: 1 };
    pub const INFINITY: Fraction = Fraction { num: 1, den: 0 };

    /// Accepts only canonical pairs.
    pub fn new(num: i64, den: i64) -> Result<Self> {
        let ok = if den == 0 {
            num == 1
        } else {
            den > 0 && gcd(num, den) == 1
        };
        if ok {
            Ok(Fraction { num, den })
        } else {
            Err(Error::Input(format!("non-canonical fraction {num}/{den}")))
        }
    }

    /// Reduces an arbitrary pair (not both zero) to canonical form.
    pub fn reduced(num: i64, den: i64) -> Result<Self> {
        if num == 0 && den == 0 {
            return Err(Error::Input("0/0 is not a fraction".into()));
        }
        if den == 0 {
            return Ok(Self::INFINITY);
        }
        let g = gcd(num, den);
        let s = if den < 0 { -1 } else { 1 };
        Ok(Fraction { num: s * num / g, den: s * den / g })
    }

    pub fn num(self) -> i64 {
        self.num
    }

    pub fn den(self) -> i64 {
        self.den
    }

    pub fn is_infinite(self) -> bool {
        self.den == 0
    }

    /// `(a+c)/(b+d)`; canonical for Farey neighbours.
    pub fn mediant(self, other: Fraction) -> Fraction {
        Fraction::reduced(self.num + other.num, self.den + other.den).expect("nonzero denominator sum")
    }

    /// `|ad - cb|`.
    pub fn determinant(self, other: Fraction) -> i64 {
        (self.num * other.den - other.num * self.den).abs()
    }

    /// Image under `x -> -x`; fixes `0/1` and `1/0`.
    pub fn mirror(self) -> Fraction {
        if self.is_infinite() {
            self
        } else {
            Fraction { num: -self.num, den: self.den }
        }
    }

    pub fn vertex(self) -> VertexId {
        VertexId::new(self.to_string())
    }

    pub fn from_vertex(v: &VertexId) -> Result<Self> {
        v.as_str().parse()
    }
}

impl Ord for Fraction {
    /// Numeric order with `1/0` above every finite value.
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            _ => (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128)),
        }
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Debug for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Fraction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Input(format!("not a fraction: {s:?}"));
        let (n, d) = s.split_once('/').ok_or_else(bad)?;
        let num: i64 = n.parse().map_err(|_| bad())?;
        let den: i64 = d.parse().map_err(|_| bad())?;
        if d.starts_with('+') || d.starts_with('-') || n.starts_with('+') {
            return Err(bad());
        }
        Fraction::new(num, den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_forms() {
        assert!(Fraction::new(2, 4).is_err());
        assert!(Fraction::new(-1, 0).is_err());
        assert!(Fraction::new(0, 0).is_err());
        assert!(Fraction::new(1, -2).is_err());
        assert_eq!(Fraction::reduced(-2, -4).unwrap(), Fraction::new(1, 2).unwrap());
        assert_eq!("1/0".parse::<Fraction>().unwrap(), Fraction::INFINITY);
        assert_eq!("-3/2".parse::<Fraction>().unwrap().to_string(), "-3/2");
        assert!("2/4".parse::<Fraction>().is_err());
        assert!("+1/2".parse::<Fraction>().is_err());
    }

    #[test]
    fn determinant_and_order() {
        let f = |s: &str| s.parse::<Fraction>().unwrap();
        assert_eq!(Fraction::ZERO.determinant(Fraction::INFINITY), 1);
        assert_eq!(f("1/2").determinant(f("1/3")), 1);
        assert_eq!(f("1/2").determinant(f("1/4")), 2);
        assert!(f("1/2") < f("2/3") && f("-5/1") < Fraction::ZERO && f("7/1") < Fraction::INFINITY);
        assert_eq!(Fraction::ZERO.mediant(Fraction::INFINITY), f("1/1"));
    }
}
