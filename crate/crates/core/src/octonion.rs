//! Exact arithmetic on unit octonions and integer-coefficient octonions.
//!
//! Every product is routed through a literal copy of the classical
//! multiplication table for `e0..e7`. Nothing here is floating point: the
//! coefficient type is an arbitrary-precision integer, so every equality is
//! decidable.

use alloc::string::String;
use core::fmt;
use core::ops::{Mul, Neg};
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

/// A sign in `{+1, -1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn is_negative(self) -> bool {
        self == Sign::Minus
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

/// One of `±e0, …, ±e7`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedUnit {
    sign: Sign,
    index: u8,
}

impl SignedUnit {
    /// The multiplicative identity `e0`.
    pub const ONE: SignedUnit = SignedUnit::pos(0);

    /// `+e_index`. Panics if `index > 7`.
    pub const fn pos(index: u8) -> Self {
        assert!(index < 8, "unit octonion index out of range");
        SignedUnit { sign: Sign::Plus, index }
    }

    /// `-e_index`. Panics if `index > 7`.
    pub const fn neg(index: u8) -> Self {
        assert!(index < 8, "unit octonion index out of range");
        SignedUnit { sign: Sign::Minus, index }
    }

    pub const fn new(sign: Sign, index: u8) -> Self {
        assert!(index < 8, "unit octonion index out of range");
        SignedUnit { sign, index }
    }

    pub fn sign(self) -> Sign {
        self.sign
    }

    pub fn index(self) -> u8 {
        self.index
    }

    /// The relation "equal up to a sign difference".
    pub fn same_up_to_sign(self, other: SignedUnit) -> bool {
        self.index == other.index
    }

    pub fn with_sign(self, sign: Sign) -> Self {
        SignedUnit { sign, index: self.index }
    }

    /// Dense index in `0..16`: `index` for `+e_index`, `index + 8` for `-e_index`.
    pub fn dense(self) -> usize {
        self.index as usize + if self.sign.is_negative() { 8 } else { 0 }
    }

    pub fn from_dense(d: usize) -> Self {
        let sign = if d >= 8 { Sign::Minus } else { Sign::Plus };
        SignedUnit::new(sign, (d % 8) as u8)
    }
}

impl Neg for SignedUnit {
    type Output = SignedUnit;

    fn neg(self) -> SignedUnit {
        SignedUnit { sign: -self.sign, index: self.index }
    }
}

impl Mul for SignedUnit {
    type Output = SignedUnit;

    fn mul(self, rhs: SignedUnit) -> SignedUnit {
        unit_mul(self, rhs)
    }
}

impl fmt::Display for SignedUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign.is_negative() {
            f.write_str("-")?;
        }
        write!(f, "e{}", self.index)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseUnitError(pub String);

impl fmt::Display for ParseUnitError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid signed unit `{}` (expected e0..e7 or -e0..-e7)", self.0)
    }
}

impl core::error::Error for ParseUnitError {}

impl FromStr for SignedUnit {
    type Err = ParseUnitError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (sign, rest) = match s.strip_prefix('-') {
            Some(rest) => (Sign::Minus, rest),
            None => (Sign::Plus, s),
        };
        let bytes = rest.as_bytes();
        if bytes.len() == 2 && bytes[0] == b'e' && (b'0'..=b'7').contains(&bytes[1]) {
            Ok(SignedUnit::new(sign, bytes[1] - b'0'))
        } else {
            Err(ParseUnitError(s.into()))
        }
    }
}

const fn p(i: u8) -> SignedUnit {
    SignedUnit::pos(i)
}

const fn m(i: u8) -> SignedUnit {
    SignedUnit::neg(i)
}

/// `UNIT_TABLE[i][j] = e_i · e_j`, row `i` on the left.
pub const UNIT_TABLE: [[SignedUnit; 8]; 8] = [
    [p(0), p(1), p(2), p(3), p(4), p(5), p(6), p(7)],
    [p(1), m(0), p(3), m(2), p(5), m(4), m(7), p(6)],
    [p(2), m(3), m(0), p(1), p(6), p(7), m(4), m(5)],
    [p(3), p(2), m(1), m(0), p(7), m(6), p(5), m(4)],
    [p(4), m(5), m(6), m(7), m(0), p(1), p(2), p(3)],
    [p(5), p(4), m(7), p(6), m(1), m(0), m(3), p(2)],
    [p(6), p(7), p(4), m(5), m(2), p(3), m(0), m(1)],
    [p(7), m(6), p(5), p(4), m(3), m(2), p(1), m(0)],
];

/// Product of two signed unit octonions.
pub fn unit_mul(a: SignedUnit, b: SignedUnit) -> SignedUnit {
    let base = UNIT_TABLE[a.index as usize][b.index as usize];
    base.with_sign(a.sign * b.sign * base.sign)
}

/// Whether a triple of units associates or anti-associates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AssociatorClass {
    /// `e_i(e_j e_k) = (e_i e_j)e_k`
    Associates,
    /// `e_i(e_j e_k) = -(e_i e_j)e_k`
    Anti,
}

impl AssociatorClass {
    /// The sign `s` with `e_i(e_j e_k) = s·(e_i e_j)e_k`.
    pub fn sign(self) -> Sign {
        match self {
            AssociatorClass::Associates => Sign::Plus,
            AssociatorClass::Anti => Sign::Minus,
        }
    }
}

/// Classifies `(i, j, k)` by evaluating both bracketings.
///
/// Panics if either evaluation lands on a different unit, which would mean
/// the table is not the octonion table.
pub fn associator_class(i: u8, j: u8, k: u8) -> AssociatorClass {
    let (a, b, c) = (p(i), p(j), p(k));
    let right = a * (b * c);
    let left = (a * b) * c;
    assert!(right.same_up_to_sign(left), "bracketings of e{i}e{j}e{k} disagree beyond sign");
    if right == left {
        AssociatorClass::Associates
    } else {
        AssociatorClass::Anti
    }
}

/// Octonion with arbitrary-precision integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash)]
pub struct BigOctonion {
    pub coeffs: [BigInt; 8],
}

impl BigOctonion {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_coeffs(coeffs: [BigInt; 8]) -> Self {
        BigOctonion { coeffs }
    }

    /// `sign · e_index` with unit coefficient.
    pub fn unit(u: SignedUnit) -> Self {
        let mut out = Self::zero();
        out.coeffs[u.index() as usize] = BigInt::from(u.sign().as_i8());
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn coeff(&self, slot: usize) -> &BigInt {
        &self.coeffs[slot]
    }
}

impl core::ops::Add for &BigOctonion {
    type Output = BigOctonion;

    fn add(self, rhs: &BigOctonion) -> BigOctonion {
        let mut out = self.clone();
        for (o, r) in out.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            *o += r;
        }
        out
    }
}

impl Mul for &BigOctonion {
    type Output = BigOctonion;

    fn mul(self, rhs: &BigOctonion) -> BigOctonion {
        oct_mul(self, rhs)
    }
}

/// Full bilinear product `Σ a_i b_j e_i e_j`.
pub fn oct_mul(a: &BigOctonion, b: &BigOctonion) -> BigOctonion {
    let mut out = BigOctonion::zero();
    for (i, ai) in a.coeffs.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.coeffs.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            let unit = UNIT_TABLE[i][j];
            let term = ai * bj;
            let slot = &mut out.coeffs[unit.index() as usize];
            if unit.sign().is_negative() {
                *slot -= term;
            } else {
                *slot += term;
            }
        }
    }
    out
}

impl fmt::Display for BigOctonion {
    /// `-1*e0 + -6*e3`; zero coefficients omitted; the zero octonion is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{c}*e{i}")?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;
    use alloc::string::ToString;

    fn oct(pairs: &[(usize, i64)]) -> BigOctonion {
        let mut o = BigOctonion::zero();
        for &(i, c) in pairs {
            o.coeffs[i] = BigInt::from(c);
        }
        o
    }

    #[test]
    fn unit_mul_examples() {
        assert_eq!(p(1) * p(2), p(3));
        assert_eq!(p(0) * p(5), p(5));
        assert_eq!(p(4) * p(4), m(0));
        assert_eq!(m(1) * p(2), m(3));
        // sign bilinearity by hand: (-e1)(-e2) = e1e2
        assert_eq!(m(1) * m(2), p(3));
    }

    #[test]
    fn squares_and_anticommutativity() {
        assert_eq!(p(0) * p(0), p(0));
        for i in 1..8 {
            assert_eq!(p(i) * p(i), m(0));
            for j in 1..8 {
                if i != j {
                    assert_eq!(p(i) * p(j), -(p(j) * p(i)));
                }
            }
        }
    }

    #[test]
    fn oct_mul_examples() {
        let x = oct(&[(0, 3), (4, -2), (7, 11)]);
        assert_eq!(oct_mul(&BigOctonion::unit(p(0)), &x), x);
        assert_eq!(oct_mul(&oct(&[(1, 1), (2, 1)]), &oct(&[(1, 1)])), oct(&[(0, -1), (3, -1)]));
        assert_eq!(oct_mul(&oct(&[(1, 2)]), &oct(&[(1, 3)])), oct(&[(0, -6)]));
    }

    #[test]
    fn associator_examples() {
        for j in 0..8 {
            for k in 0..8 {
                assert_eq!(associator_class(0, j, k), AssociatorClass::Associates);
            }
        }
        assert_eq!(associator_class(5, 6, 7), AssociatorClass::Anti);
        assert_eq!(associator_class(1, 1, 2), AssociatorClass::Associates);
    }

    #[test]
    fn alternative_and_flexible_laws() {
        for i in 0..8 {
            for j in 0..8 {
                let (a, b) = (p(i), p(j));
                assert_eq!(a * (a * b), (a * a) * b);
                assert_eq!((a * b) * b, a * (b * b));
                assert_eq!(a * (b * a), (a * b) * a);
            }
        }
    }

    #[test]
    fn text_forms() {
        assert_eq!(m(4).to_string(), "-e4");
        assert_eq!("e4".parse::<SignedUnit>().unwrap(), p(4));
        assert_eq!("-e7".parse::<SignedUnit>().unwrap(), m(7));
        assert!("e8".parse::<SignedUnit>().is_err());
        assert!("- e1".parse::<SignedUnit>().is_err());
        assert_eq!(oct(&[(0, -1), (3, -6)]).to_string(), "-1*e0 + -6*e3");
        assert_eq!(BigOctonion::zero().to_string(), "0");
        assert_eq!(format!("{}", oct(&[(2, 5)])), "5*e2");
    }

    #[test]
    fn dense_index_round_trip() {
        for d in 0..16 {
            assert_eq!(SignedUnit::from_dense(d).dense(), d);
        }
    }
}
