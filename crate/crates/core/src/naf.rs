//! Non-adjacent form and sparse signed sums of powers of two.
//!
//! The NAF of an integer is its unique expansion `Σ q_j 2^j` with digits in
//! `{-1, 0, 1}` and no two adjacent nonzero digits. [`SparseDyadic`] stores
//! only the nonzero digits, keyed by an arbitrary-precision exponent, so that
//! numbers like `2^(2^64)` are cheap to hold and compare. Because the
//! representation is unique, two canonical values are equal exactly when
//! their maps are equal.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::octonion::Sign;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NafError {
    /// A digit outside `{-1, 0, 1}` at the given position.
    DigitOutOfRange(usize),
    /// Nonzero digits at positions `i` and `i + 1`.
    Adjacent(usize),
    /// A zero most-significant digit.
    NotTrimmed,
    Parse(String),
}

impl fmt::Display for NafError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NafError::DigitOutOfRange(i) => write!(f, "digit {i} is not in {{-1, 0, 1}}"),
            NafError::Adjacent(i) => write!(f, "nonzero digits at adjacent positions {i} and {}", i + 1),
            NafError::NotTrimmed => f.write_str("most significant digit is zero"),
            NafError::Parse(s) => write!(f, "invalid NAF string `{s}` (expected digits 1, 0, T)"),
        }
    }
}

impl core::error::Error for NafError {}

/// NAF digits, least significant first, without high zero digits.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct NafDigits(Vec<i8>);

impl NafDigits {
    /// Validates digit range, nonadjacency and trimming.
    pub fn new(digits: Vec<i8>) -> Result<Self, NafError> {
        check_digits(&digits)?;
        Ok(NafDigits(digits))
    }

    pub fn digits(&self) -> &[i8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn value(&self) -> BigInt {
        digits_value(&self.0)
    }
}

fn check_digits(digits: &[i8]) -> Result<(), NafError> {
    if let Some(i) = digits.iter().position(|d| !(-1..=1).contains(d)) {
        return Err(NafError::DigitOutOfRange(i));
    }
    if let Some(i) = digits.windows(2).position(|w| w[0] != 0 && w[1] != 0) {
        return Err(NafError::Adjacent(i));
    }
    if digits.last() == Some(&0) {
        return Err(NafError::NotTrimmed);
    }
    Ok(())
}

fn digits_value(digits: &[i8]) -> BigInt {
    digits.iter().rev().fold(BigInt::zero(), |acc, &d| (acc << 1u32) + BigInt::from(d))
}

pub fn naf_encode(a: &BigInt) -> NafDigits {
    let mut a = a.clone();
    let mut out = Vec::new();
    let four = BigInt::from(4);
    while !a.is_zero() {
        let digit: i8 = if a.is_odd() {
            // a mod 4 is 1 or 3
            if a.mod_floor(&four).is_one() {
                1
            } else {
                -1
            }
        } else {
            0
        };
        a -= digit;
        a >>= 1u32;
        out.push(digit);
    }
    NafDigits(out)
}

/// Decodes least-significant-first digits, rejecting anything that is not a
/// canonical NAF.
pub fn naf_decode(digits: &[i8]) -> Result<BigInt, NafError> {
    check_digits(digits)?;
    Ok(digits_value(digits))
}

impl fmt::Display for NafDigits {
    /// Most significant first over `1`, `0`, `T` (for -1); zero is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for d in self.0.iter().rev() {
            f.write_str(match d {
                1 => "1",
                -1 => "T",
                _ => "0",
            })?;
        }
        Ok(())
    }
}

impl FromStr for NafDigits {
    type Err = NafError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut digits = s
            .chars()
            .rev()
            .map(|c| match c {
                '1' => Ok(1),
                '0' => Ok(0),
                'T' => Ok(-1),
                _ => Err(NafError::Parse(s.into())),
            })
            .collect::<Result<Vec<i8>, _>>()?;
        if digits.is_empty() {
            return Err(NafError::Parse(s.into()));
        }
        if digits == [0] {
            digits.clear();
        }
        NafDigits::new(digits)
    }
}

/// Canonical signed sum of distinct powers of two `Σ ±2^E`, no two
/// exponents within distance 1 of each other.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SparseDyadic(BTreeMap<BigUint, Sign>);

/// Work done by [`sd_from_terms`] beyond copying its input.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct NormalizeStats {
    /// Exponents whose merged coefficient was not `±1`, or that pushed a
    /// carry into the next exponent.
    pub rewrites: usize,
}

impl SparseDyadic {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Nonzero digits in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&BigUint, Sign)> + '_ {
        self.0.iter().map(|(e, s)| (e, *s))
    }

    pub fn get(&self, exponent: &BigUint) -> Option<Sign> {
        self.0.get(exponent).copied()
    }

    /// No two exponents within distance 1.
    pub fn is_canonical(&self) -> bool {
        let keys: Vec<&BigUint> = self.0.keys().collect();
        keys.windows(2).all(|w| w[1] - w[0] >= BigUint::from(2u8))
    }

    pub fn from_bigint(a: &BigInt) -> Self {
        let digits = naf_encode(a);
        SparseDyadic(
            digits
                .digits()
                .iter()
                .enumerate()
                .filter(|(_, d)| **d != 0)
                .map(|(i, d)| (BigUint::from(i), if *d > 0 { Sign::Plus } else { Sign::Minus }))
                .collect(),
        )
    }

    /// Materializes the value; `None` if some exponent exceeds `max_exponent`.
    pub fn to_bigint(&self, max_exponent: u64) -> Option<BigInt> {
        let mut out = BigInt::zero();
        for (e, s) in self.terms() {
            let e = e.to_u64().filter(|e| *e <= max_exponent)?;
            let power = BigInt::one() << e;
            if s.is_negative() {
                out -= power;
            } else {
                out += power;
            }
        }
        Some(out)
    }
}

/// Builds the canonical form of `Σ sign·2^E`. Duplicate, cancelling and
/// adjacent exponents are all allowed.
pub fn sd_from_terms<I>(terms: I) -> SparseDyadic
where
    I: IntoIterator<Item = (BigUint, Sign)>,
{
    sd_from_terms_counted(terms).0
}

/// [`sd_from_terms`] plus a count of the rewrites it had to perform.
pub fn sd_from_terms_counted<I>(terms: I) -> (SparseDyadic, NormalizeStats)
where
    I: IntoIterator<Item = (BigUint, Sign)>,
{
    let mut pending: BTreeMap<BigUint, i64> = BTreeMap::new();
    for (e, s) in terms {
        *pending.entry(e).or_default() += i64::from(s.as_i8());
    }
    let mut out = BTreeMap::new();
    let mut stats = NormalizeStats::default();
    // Sparse version of the least-significant-digit NAF recurrence: the
    // remaining value above `e` is `c + 2·c_next + 4·(…)`.
    while let Some((e, c)) = pending.pop_first() {
        if c.abs() != 1 {
            stats.rewrites += 1;
        }
        if c == 0 {
            continue;
        }
        let next = &e + 1u32;
        let c_next = pending.get(&next).copied().unwrap_or(0);
        let digit = if c % 2 == 0 {
            0
        } else if (c + 2 * c_next).rem_euclid(4) == 1 {
            1
        } else {
            -1
        };
        let carry = (c - digit) / 2;
        if digit != 0 {
            out.insert(e, if digit > 0 { Sign::Plus } else { Sign::Minus });
        }
        if carry != 0 {
            if c.abs() == 1 {
                stats.rewrites += 1;
            }
            *pending.entry(next).or_default() += carry;
        }
    }
    (SparseDyadic(out), stats)
}

/// Value equality; exact by uniqueness of the canonical form.
pub fn sd_equal(a: &SparseDyadic, b: &SparseDyadic) -> bool {
    a == b
}

impl fmt::Display for SparseDyadic {
    /// `+2^E -2^E …` in descending `E`; zero is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, s)) in self.terms().rev().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}2^{e}", s.symbol())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn e(n: u32) -> BigUint {
        BigUint::from(n)
    }

    fn sd(pairs: &[(u32, i8)]) -> SparseDyadic {
        SparseDyadic(pairs.iter().map(|&(x, s)| (e(x), if s > 0 { Sign::Plus } else { Sign::Minus })).collect())
    }

    #[test]
    fn encode_examples() {
        assert!(naf_encode(&BigInt::zero()).is_empty());
        assert_eq!(naf_encode(&BigInt::from(2)).digits(), &[0, 1]);
        assert_eq!(naf_encode(&BigInt::from(7)).digits(), &[-1, 0, 0, 1]);
        assert_eq!(naf_encode(&BigInt::from(-7)).digits(), &[1, 0, 0, -1]);
    }

    /// Every digit string of width ≤ 4 decoding to 7.
    #[test]
    fn seven_has_one_naf_of_width_at_most_four() {
        let mut found = vec![];
        for width in 0..=4u32 {
            for code in 0..3usize.pow(width) {
                let digits: Vec<i8> = (0..width).map(|i| (code / 3usize.pow(i) % 3) as i8 - 1).collect();
                if let Ok(v) = naf_decode(&digits) {
                    if v == BigInt::from(7) {
                        found.push(digits);
                    }
                }
            }
        }
        assert_eq!(found, vec![vec![-1, 0, 0, 1]]);
    }

    #[test]
    fn decode_rejects_invalid_digits() {
        assert_eq!(naf_decode(&[1, 1]), Err(NafError::Adjacent(0)));
        assert_eq!(naf_decode(&[2]), Err(NafError::DigitOutOfRange(0)));
        assert_eq!(naf_decode(&[1, 0]), Err(NafError::NotTrimmed));
        assert_eq!(naf_decode(&[]), Ok(BigInt::zero()));
    }

    #[test]
    fn naf_text_form() {
        assert_eq!(naf_encode(&BigInt::from(7)).to_string(), "100T");
        assert_eq!(naf_encode(&BigInt::zero()).to_string(), "0");
        assert_eq!("100T".parse::<NafDigits>().unwrap().value(), BigInt::from(7));
        assert_eq!("0".parse::<NafDigits>().unwrap().value(), BigInt::zero());
        assert!("11".parse::<NafDigits>().is_err());
        assert!("12".parse::<NafDigits>().is_err());
        assert!("".parse::<NafDigits>().is_err());
    }

    #[test]
    fn from_terms_examples() {
        assert_eq!(sd_from_terms([(e(5), Sign::Plus)]), sd(&[(5, 1)]));
        assert_eq!(sd_from_terms([(e(3), Sign::Plus), (e(3), Sign::Minus)]), SparseDyadic::zero());
        let three = sd_from_terms([(e(0), Sign::Plus), (e(1), Sign::Plus)]);
        assert_eq!(three, sd(&[(0, -1), (2, 1)]));
        assert_eq!(three.to_bigint(64), Some(BigInt::from(3)));
        // 2^(E+1) - 2^E = 2^E
        assert_eq!(sd_from_terms([(e(9), Sign::Plus), (e(8), Sign::Minus)]), sd(&[(8, 1)]));
        // s·2^E + s·2^E = s·2^(E+1)
        assert_eq!(sd_from_terms([(e(4), Sign::Minus), (e(4), Sign::Minus)]), sd(&[(5, -1)]));
    }

    #[test]
    fn gap_input_is_copied_verbatim() {
        let input = [(e(2), Sign::Plus), (e(4), Sign::Minus), (e(100), Sign::Plus)];
        let (out, stats) = sd_from_terms_counted(input.clone());
        assert_eq!(stats.rewrites, 0);
        assert_eq!(out, SparseDyadic(input.into_iter().collect()));

        let (_, stats) = sd_from_terms_counted([(e(2), Sign::Plus), (e(3), Sign::Plus)]);
        assert!(stats.rewrites > 0);
    }

    #[test]
    fn equality_examples() {
        assert!(sd_equal(&sd(&[(5, 1)]), &sd(&[(5, 1)])));
        assert!(!sd_equal(&sd(&[(5, 1)]), &sd(&[(5, -1)])));
    }

    #[test]
    fn huge_exponents() {
        let big = BigUint::one() << 300u32;
        let v = sd_from_terms([(big.clone(), Sign::Plus), (big.clone(), Sign::Plus)]);
        assert_eq!(v.terms().next(), Some((&(big + 1u32), Sign::Plus)));
        assert_eq!(v.to_bigint(1 << 20), None);
    }

    #[test]
    fn text_form() {
        assert_eq!(SparseDyadic::zero().to_string(), "0");
        assert_eq!(sd(&[(0, -1), (2, 1)]).to_string(), "+2^2 -2^0");
    }
}
