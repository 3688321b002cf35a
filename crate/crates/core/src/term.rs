//! Fully bracketed terms over variables `x<n>` and units `e<j>`.
//!
//! Concrete syntax: `term := atom | "(" term term ")"`, with
//! `atom := "x" digits | "e" [0-7]`. Whitespace between tokens is allowed on
//! input; the canonical rendering has none. No association is ever inferred:
//! every product carries its own pair of brackets.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::octonion::SignedUnit;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Atom {
    Var(u32),
    Unit(u8),
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Leaf(Atom),
    Pair(Box<Term>, Box<Term>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TermError {
    Syntax { offset: usize, message: &'static str },
    NotGround,
    UnboundVariable(u32),
    NotVariableTerm,
    EmptyIndexList,
    IndicesNotIncreasing,
}

impl fmt::Display for TermError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermError::Syntax { offset, message } => {
                write!(f, "syntax error at byte {offset}: {message}")
            }
            TermError::NotGround => f.write_str("term contains variables"),
            TermError::UnboundVariable(n) => write!(f, "variable x{n} is not assigned"),
            TermError::NotVariableTerm => f.write_str("term contains unit leaves"),
            TermError::EmptyIndexList => f.write_str("index list is empty"),
            TermError::IndicesNotIncreasing => f.write_str("indices are not strictly increasing"),
        }
    }
}

impl core::error::Error for TermError {}

impl Term {
    pub fn var(n: u32) -> Term {
        Term::Leaf(Atom::Var(n))
    }

    /// Panics if `j > 7`.
    pub fn unit(j: u8) -> Term {
        assert!(j < 8, "unit index out of range");
        Term::Leaf(Atom::Unit(j))
    }

    pub fn pair(left: Term, right: Term) -> Term {
        Term::Pair(Box::new(left), Box::new(right))
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Term::Leaf(_) => 1,
            Term::Pair(l, r) => l.leaf_count() + r.leaf_count(),
        }
    }

    pub fn is_pair(&self) -> bool {
        matches!(self, Term::Pair(..))
    }

    /// Leaves from left to right (the unbracketed string).
    pub fn atoms(&self) -> Vec<Atom> {
        let mut out = Vec::with_capacity(self.leaf_count());
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut Vec<Atom>) {
        match self {
            Term::Leaf(a) => out.push(*a),
            Term::Pair(l, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
        }
    }

    pub fn is_ground(&self) -> bool {
        self.atoms().iter().all(|a| matches!(a, Atom::Unit(_)))
    }

    /// Replaces every leaf using `f`, keeping the bracketing.
    pub fn map_leaves<F: FnMut(Atom) -> Term>(&self, f: &mut F) -> Term {
        match self {
            Term::Leaf(a) => f(*a),
            Term::Pair(l, r) => Term::pair(l.map_leaves(f), r.map_leaves(f)),
        }
    }

    /// Renames variable leaves to `x0, x1, …` in left-to-right order.
    pub fn positional(&self) -> Term {
        let mut next = 0u32;
        self.map_leaves(&mut |a| match a {
            Atom::Var(_) => {
                next += 1;
                Term::var(next - 1)
            }
            unit => Term::Leaf(unit),
        })
    }
}

/// Canonical text, no whitespace.
pub fn render(t: &Term) -> String {
    use alloc::string::ToString;
    t.to_string()
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Var(n) => write!(f, "x{n}"),
            Atom::Unit(j) => write!(f, "e{j}"),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Leaf(a) => write!(f, "{a}"),
            Term::Pair(l, r) => write!(f, "({l}{r})"),
        }
    }
}

impl core::str::FromStr for Term {
    type Err = TermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

pub fn parse(text: &str) -> Result<Term, TermError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let t = p.term()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("trailing input after term"));
    }
    Ok(t)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &'static str) -> TermError {
        TermError::Syntax { offset: self.pos, message }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<Term, TermError> {
        self.skip_ws();
        match self.src.get(self.pos) {
            None => Err(self.error("unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                let left = self.term()?;
                let right = self.term()?;
                self.skip_ws();
                match self.src.get(self.pos) {
                    Some(b')') => {
                        self.pos += 1;
                        Ok(Term::pair(left, right))
                    }
                    None => Err(self.error("unbalanced bracket: expected `)`")),
                    Some(_) => Err(self.error("expected `)` after two subterms")),
                }
            }
            Some(b'x') => {
                self.pos += 1;
                let start = self.pos;
                while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
                    self.pos += 1;
                }
                if start == self.pos {
                    return Err(self.error("expected digits after `x`"));
                }
                // digits are ASCII, so this is valid UTF-8
                let digits = core::str::from_utf8(&self.src[start..self.pos]).unwrap_or_default();
                digits
                    .parse::<u32>()
                    .map(Term::var)
                    .map_err(|_| TermError::Syntax { offset: start, message: "variable index too large" })
            }
            Some(b'e') => {
                self.pos += 1;
                match self.src.get(self.pos) {
                    Some(d @ b'0'..=b'7') => {
                        self.pos += 1;
                        Ok(Term::unit(d - b'0'))
                    }
                    _ => Err(self.error("expected unit index 0-7 after `e`")),
                }
            }
            Some(b')') => Err(self.error("unexpected `)`")),
            Some(_) => Err(self.error("expected `(`, `x<n>` or `e<j>`")),
        }
    }
}

/// Source of values for variable leaves.
pub trait Valuation {
    fn value(&self, var: u32) -> Option<SignedUnit>;
}

/// A partial map from variable index to signed unit.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Assignment(pub BTreeMap<u32, SignedUnit>);

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, var: u32, value: SignedUnit) {
        self.0.insert(var, value);
    }

    pub fn get(&self, var: u32) -> Option<SignedUnit> {
        self.0.get(&var).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, SignedUnit)> + '_ {
        self.0.iter().map(|(k, v)| (*k, *v))
    }
}

impl FromIterator<(u32, SignedUnit)> for Assignment {
    fn from_iter<I: IntoIterator<Item = (u32, SignedUnit)>>(iter: I) -> Self {
        Assignment(iter.into_iter().collect())
    }
}

impl Valuation for Assignment {
    fn value(&self, var: u32) -> Option<SignedUnit> {
        self.get(var)
    }
}

/// `x_n ↦ slice[n]`.
impl Valuation for [SignedUnit] {
    fn value(&self, var: u32) -> Option<SignedUnit> {
        self.get(var as usize).copied()
    }
}

impl fmt::Display for Assignment {
    /// `x0=e5 x1=e6 x2=e7`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (var, value)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "x{var}={value}")?;
        }
        Ok(())
    }
}

/// Evaluates a term whose leaves are all units.
pub fn eval_units(t: &Term) -> Result<SignedUnit, TermError> {
    match t {
        Term::Leaf(Atom::Unit(j)) => Ok(SignedUnit::pos(*j)),
        Term::Leaf(Atom::Var(_)) => Err(TermError::NotGround),
        Term::Pair(l, r) => Ok(eval_units(l)? * eval_units(r)?),
    }
}

/// Evaluates `t^μ`; unit leaves evaluate to themselves.
pub fn eval_assigned<V: Valuation + ?Sized>(t: &Term, mu: &V) -> Result<SignedUnit, TermError> {
    match t {
        Term::Leaf(Atom::Unit(j)) => Ok(SignedUnit::pos(*j)),
        Term::Leaf(Atom::Var(n)) => mu.value(*n).ok_or(TermError::UnboundVariable(*n)),
        Term::Pair(l, r) => Ok(eval_assigned(l, mu)? * eval_assigned(r, mu)?),
    }
}

/// Replaces variables by their assigned units. Negative values cannot be
/// written as atoms, so a negative assignment is returned as a sign to carry.
pub fn substitute<V: Valuation + ?Sized>(t: &Term, mu: &V) -> Result<(crate::octonion::Sign, Term), TermError> {
    use crate::octonion::Sign;
    let mut sign = Sign::Plus;
    let mut missing = None;
    let out = t.map_leaves(&mut |a| match a {
        Atom::Var(n) => match mu.value(n) {
            Some(u) => {
                sign = sign * u.sign();
                Term::unit(u.index())
            }
            None => {
                missing.get_or_insert(n);
                Term::Leaf(a)
            }
        },
        unit => Term::Leaf(unit),
    });
    match missing {
        Some(n) => Err(TermError::UnboundVariable(n)),
        None => Ok((sign, out)),
    }
}

/// Variable indices from left to right.
pub fn var_indices(t: &Term) -> Result<Vec<u32>, TermError> {
    t.atoms()
        .into_iter()
        .map(|a| match a {
            Atom::Var(n) => Ok(n),
            Atom::Unit(_) => Err(TermError::NotVariableTerm),
        })
        .collect()
}

fn strictly_increasing(xs: &[u32]) -> bool {
    xs.windows(2).all(|w| w[0] < w[1])
}

/// Variable indices strictly increase from left to right.
pub fn is_orderly(t: &Term) -> Result<bool, TermError> {
    Ok(strictly_increasing(&var_indices(t)?))
}

/// `t ≺ u`: every variable index of `t` is below every index of `u`.
pub fn precedes(t: &Term, u: &Term) -> Result<bool, TermError> {
    let a = var_indices(t)?;
    let b = var_indices(u)?;
    let max_a = a.iter().max();
    let min_b = b.iter().min();
    Ok(match (max_a, min_b) {
        (Some(x), Some(y)) => x < y,
        _ => false,
    })
}

/// All bracketings of `x_{i_1} … x_{i_N}`, ordered by left-subtree size,
/// then left subterm order, then right subterm order.
pub fn enumerate_orderly(indices: &[u32]) -> Result<Vec<Term>, TermError> {
    if indices.is_empty() {
        return Err(TermError::EmptyIndexList);
    }
    if !strictly_increasing(indices) {
        return Err(TermError::IndicesNotIncreasing);
    }
    Ok(bracketings(indices))
}

fn bracketings(indices: &[u32]) -> Vec<Term> {
    if indices.len() == 1 {
        return alloc::vec![Term::var(indices[0])];
    }
    let mut out = Vec::new();
    for split in 1..indices.len() {
        let lefts = bracketings(&indices[..split]);
        let rights = bracketings(&indices[split..]);
        for l in &lefts {
            for r in &rights {
                out.push(Term::pair(l.clone(), r.clone()));
            }
        }
    }
    out
}

/// Bracketings of `x0 … x_{n-1}`.
pub fn shapes(n: usize) -> Vec<Term> {
    let idx: Vec<u32> = (0..n as u32).collect();
    if idx.is_empty() {
        Vec::new()
    } else {
        bracketings(&idx)
    }
}
