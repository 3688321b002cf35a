//! Sign bookkeeping between bracketings of the same string of units.
//!
//! Any two bracketings of a string of unit octonions evaluate to the same
//! unit up to sign. This module computes that sign by reassociating towards
//! the right-associative form one associator at a time, tabulates the
//! per-assignment outcomes of an orderly term, and constructs assignments
//! that force two different bracketings apart.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::octonion::{associator_class, Sign, SignedUnit};
use crate::term::{is_orderly, var_indices, Assignment, Atom, Term, TermError, Valuation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SignError {
    Term(TermError),
    NotOrderly,
    NotSameSkeleton,
    EqualTerms,
}

impl From<TermError> for SignError {
    fn from(e: TermError) -> Self {
        SignError::Term(e)
    }
}

impl fmt::Display for SignError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SignError::Term(e) => e.fmt(f),
            SignError::NotOrderly => f.write_str("term is not orderly"),
            SignError::NotSameSkeleton => f.write_str("terms do not share the same variable string"),
            SignError::EqualTerms => f.write_str("terms are identical"),
        }
    }
}

impl core::error::Error for SignError {}

/// Value of the right-associative bracketing `(a0(a1(…a_{n-1})))`.
pub fn right_assoc_value(leaves: &[SignedUnit]) -> SignedUnit {
    let (last, rest) = leaves.split_last().expect("at least one leaf");
    rest.iter().rev().fold(*last, |acc, &u| u * acc)
}

/// The sign `s` with `RA(a)·RA(b) = s·RA(a ++ b)`.
///
/// Peels the head of `a` with one associator step,
/// `(a0·RA(a'))·RA(b) = ±a0·(RA(a')·RA(b))`, then recurses on `a'`.
fn join_sign(a: &[SignedUnit], b: &[SignedUnit]) -> Sign {
    if a.len() == 1 {
        return Sign::Plus;
    }
    let head = a[0].index();
    let mid = right_assoc_value(&a[1..]).index();
    let tail = right_assoc_value(b).index();
    associator_class(head, mid, tail).sign() * join_sign(&a[1..], b)
}

/// The sign `s` with `value(t) = s·RA(leaves)`, where `leaves` are the
/// values of the leaves of `t` in order.
fn bracketing_sign(t: &Term, leaves: &[SignedUnit]) -> Sign {
    match t {
        Term::Leaf(_) => Sign::Plus,
        Term::Pair(l, r) => {
            let split = l.leaf_count();
            let (la, lb) = leaves.split_at(split);
            bracketing_sign(l, la) * bracketing_sign(r, lb) * join_sign(la, lb)
        }
    }
}

fn leaf_values<V: Valuation + ?Sized>(t: &Term, mu: &V) -> Result<Vec<SignedUnit>, TermError> {
    t.atoms()
        .into_iter()
        .map(|a| match a {
            Atom::Unit(j) => Ok(SignedUnit::pos(j)),
            Atom::Var(n) => mu.value(n).ok_or(TermError::UnboundVariable(n)),
        })
        .collect()
}

/// Value of a ground term obtained through right-associative normalization
/// with sign tracking, independently of direct evaluation.
pub fn right_assoc_normalize(t: &Term) -> Result<SignedUnit, TermError> {
    if !t.is_ground() {
        return Err(TermError::NotGround);
    }
    right_assoc_eval(t, &Assignment::new())
}

/// As [`right_assoc_normalize`], with variables read from `mu`.
pub fn right_assoc_eval<V: Valuation + ?Sized>(t: &Term, mu: &V) -> Result<SignedUnit, TermError> {
    let leaves = leaf_values(t, mu)?;
    let ra = right_assoc_value(&leaves);
    Ok(ra.with_sign(ra.sign() * bracketing_sign(t, &leaves)))
}

/// Outcome of `t` under every unit assignment `α ∈ {0..7}^N` to its leaves,
/// indexed by `α` read as a base-8 number with `α_1` most significant.
pub fn value_table(t: &Term) -> Vec<SignedUnit> {
    let shape = t.positional();
    let n = shape.leaf_count();
    let mut leaves = alloc::vec![SignedUnit::ONE; n];
    let mut out = Vec::with_capacity(1 << (3 * n));
    for code in 0..(1usize << (3 * n)) {
        for (i, leaf) in leaves.iter_mut().enumerate() {
            *leaf = SignedUnit::pos(((code >> (3 * (n - 1 - i))) & 7) as u8);
        }
        out.push(eval_positional(&shape, &leaves));
    }
    out
}

fn eval_positional(t: &Term, leaves: &[SignedUnit]) -> SignedUnit {
    crate::term::eval_assigned(t, leaves).expect("positional term over a full leaf slice")
}

/// For each `j`, the tuples `α` under which the term evaluates to `±e_j`,
/// with the sign that occurs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaSets {
    arity: usize,
    buckets: [BTreeMap<Vec<u8>, Sign>; 8],
}

impl LambdaSets {
    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Keys of bucket `j`, lexicographically.
    pub fn keys(&self, j: u8) -> impl Iterator<Item = &[u8]> + '_ {
        self.buckets[j as usize].keys().map(Vec::as_slice)
    }

    pub fn sign(&self, j: u8, alpha: &[u8]) -> Option<Sign> {
        self.buckets[j as usize].get(alpha).copied()
    }

    pub fn bucket_len(&self, j: u8) -> usize {
        self.buckets[j as usize].len()
    }

    /// Same key-sets, signs ignored.
    pub fn same_keys(&self, other: &LambdaSets) -> bool {
        self.arity == other.arity && (0..8).all(|j| self.keys(j).eq(other.keys(j)))
    }
}

/// Buckets every assignment of units to the leaves of orderly `t`.
pub fn lambda_sets(t: &Term) -> Result<LambdaSets, SignError> {
    if !is_orderly(t)? {
        return Err(SignError::NotOrderly);
    }
    let arity = t.leaf_count();
    let mut buckets: [BTreeMap<Vec<u8>, Sign>; 8] = Default::default();
    for (code, value) in value_table(t).into_iter().enumerate() {
        let alpha: Vec<u8> = (0..arity).map(|i| ((code >> (3 * (arity - 1 - i))) & 7) as u8).collect();
        buckets[value.index() as usize].insert(alpha, value.sign());
    }
    Ok(LambdaSets { arity, buckets })
}

impl fmt::Display for LambdaSets {
    /// One line per entry: `e<j> <α as comma list> <+|->`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, bucket) in self.buckets.iter().enumerate() {
            for (alpha, sign) in bucket {
                write!(f, "e{j} ")?;
                for (i, a) in alpha.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{a}")?;
                }
                writeln!(f, " {}", sign.symbol())?;
            }
        }
        Ok(())
    }
}

/// An assignment into `{e0, …, e7}` under which two distinct orderly
/// bracketings of the same variable string take opposite values `±e4`.
///
/// Follows the inductive construction: split both terms at the root; if the
/// left parts have different lengths, put `e5, e6, e7` on the first
/// variable, the first variable past the shorter left part, and the last
/// variable; otherwise recurse into the leftmost differing side. Every
/// variable not otherwise assigned gets `e0`.
pub fn distinguish(t: &Term, u: &Term) -> Result<Assignment, SignError> {
    let vars = var_indices(t)?;
    if var_indices(u)? != vars {
        return Err(SignError::NotSameSkeleton);
    }
    if !is_orderly(t)? {
        return Err(SignError::NotOrderly);
    }
    if t == u {
        return Err(SignError::EqualTerms);
    }
    let mut mu: Assignment = vars.iter().map(|&v| (v, SignedUnit::ONE)).collect();
    construct(t, u, &mut mu);
    Ok(mu)
}

fn construct(t: &Term, u: &Term, mu: &mut Assignment) {
    let (Term::Pair(t1, t2), Term::Pair(u1, u2)) = (t, u) else {
        unreachable!("distinct bracketings of one string are both products");
    };
    if t1 == u1 {
        return construct(t2, u2, mu);
    }
    let (n_t, n_u) = (t1.leaf_count(), u1.leaf_count());
    if n_t == n_u {
        return construct(t1, u1, mu);
    }
    let vars = var_indices(t).expect("variable term");
    mu.set(vars[0], SignedUnit::pos(5));
    mu.set(vars[n_t.min(n_u)], SignedUnit::pos(6));
    mu.set(vars[vars.len() - 1], SignedUnit::pos(7));
}
