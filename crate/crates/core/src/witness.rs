//! Symbolic evaluation of orderly terms over the sequence
//! `b_n = Σ_i 2^(2^(8n+1+i)) e_i`, and the checks built on it.
//!
//! Multiplying out an orderly term `t` over `b_{n_1}, …, b_{n_N}` gives
//!
//! ```text
//! t^μ = Σ_α 2^(E_α) · t(e_{α_1}, …, e_{α_N}),   E_α = Σ_i 2^(8 n_i + 1 + α_i)
//! ```
//!
//! so every coefficient is a signed sum of powers of two whose exponents are
//! themselves sums of distinct powers of two. Coefficients are held as
//! [`SparseDyadic`] values, which keeps equality exact at any index without
//! ever materializing the integers.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::naf::{sd_from_terms_counted, NormalizeStats, SparseDyadic};
use crate::octonion::{BigOctonion, Sign, SignedUnit};
use crate::sign::value_table;
use crate::term::{enumerate_orderly, is_orderly, precedes, var_indices, Atom, Term, TermError};

/// Default cap on the number of leaves of a symbolically evaluated term.
pub const DEFAULT_LEAF_CAP: usize = 6;

/// Largest `n` for which `b_n` is materialized as big integers.
pub const BIGINT_INDEX_CAP: u32 = 1;

/// Printed alongside every bounded-X verdict.
pub const BOUNDED_X_CAVEAT: &str = "membership is relative to the stated bounds; the full set X is infinite";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessError {
    Term(TermError),
    NotOrderly,
    PrecedenceViolated,
    CapExceeded { what: &'static str, value: u64, cap: u64 },
    InvalidBounds,
}

impl From<TermError> for WitnessError {
    fn from(e: TermError) -> Self {
        WitnessError::Term(e)
    }
}

impl fmt::Display for WitnessError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessError::Term(e) => e.fmt(f),
            WitnessError::NotOrderly => f.write_str("term is not orderly"),
            WitnessError::PrecedenceViolated => f.write_str("terms do not form a ≺-chain"),
            WitnessError::CapExceeded { what, value, cap } => {
                write!(f, "{what} {value} exceeds cap {cap}")
            }
            WitnessError::InvalidBounds => f.write_str("bounds must be positive"),
        }
    }
}

impl core::error::Error for WitnessError {}

/// Octonion whose coefficients are canonical sparse dyadic integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymbolicOctonion {
    pub coeffs: [SparseDyadic; 8],
}

impl SymbolicOctonion {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(SparseDyadic::is_zero)
    }

    pub fn coeff(&self, slot: usize) -> &SparseDyadic {
        &self.coeffs[slot]
    }

    /// Slots whose coefficients differ, ascending.
    pub fn differing_slots(&self, other: &SymbolicOctonion) -> Vec<u8> {
        (0..8u8).filter(|&j| self.coeffs[j as usize] != other.coeffs[j as usize]).collect()
    }

    pub fn to_big(&self, max_exponent: u64) -> Option<BigOctonion> {
        let mut out = BigOctonion::zero();
        for (slot, c) in out.coeffs.iter_mut().zip(&self.coeffs) {
            *slot = c.to_bigint(max_exponent)?;
        }
        Some(out)
    }

    pub fn from_big(value: &BigOctonion) -> Self {
        SymbolicOctonion { coeffs: core::array::from_fn(|j| SparseDyadic::from_bigint(&value.coeffs[j])) }
    }
}

impl fmt::Display for SymbolicOctonion {
    /// Eight lines `e<j>: <coefficient>`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, c) in self.coeffs.iter().enumerate() {
            writeln!(f, "e{j}: {c}")?;
        }
        Ok(())
    }
}

/// `b_n` with exact integer coefficients; only `n ≤ 1` is materialized.
pub fn bad_term(n: u32) -> Result<BigOctonion, WitnessError> {
    if n > BIGINT_INDEX_CAP {
        return Err(WitnessError::CapExceeded { what: "index", value: n.into(), cap: BIGINT_INDEX_CAP.into() });
    }
    Ok(BigOctonion::from_coeffs(core::array::from_fn(|i| BigInt::one() << (1u64 << (8 * n as u64 + 1 + i as u64)))))
}

/// Bit position `8n + 1 + α` of `E_α`'s contribution from variable `x_n`.
fn exponent_bit(n: u32, alpha: u8) -> u64 {
    8 * u64::from(n) + 1 + u64::from(alpha)
}

fn alpha_at(code: usize, arity: usize, i: usize) -> u8 {
    ((code >> (3 * (arity - 1 - i))) & 7) as u8
}

/// `E_α = Σ_i 2^(8 n_i + 1 + α_i)` for the variable string `indices`.
pub fn exponent_for(indices: &[u32], code: usize) -> BigUint {
    let arity = indices.len();
    let bits = indices.iter().enumerate().map(|(i, &n)| exponent_bit(n, alpha_at(code, arity, i)));
    let max_bit = indices.iter().map(|&n| exponent_bit(n, 7)).max().unwrap_or(0);
    if max_bit < 128 {
        BigUint::from(bits.fold(0u128, |acc, b| acc | 1u128 << b))
    } else {
        let mut e = BigUint::default();
        for b in bits {
            e.set_bit(b, true);
        }
        e
    }
}

fn check_orderly(t: &Term, leaf_cap: usize) -> Result<Vec<u32>, WitnessError> {
    let indices = var_indices(t)?;
    if !indices.windows(2).all(|w| w[0] < w[1]) {
        return Err(WitnessError::NotOrderly);
    }
    if indices.len() > leaf_cap {
        return Err(WitnessError::CapExceeded {
            what: "leaf count",
            value: indices.len() as u64,
            cap: leaf_cap as u64,
        });
    }
    Ok(indices)
}

/// All `E_α` for an orderly term, in `α` order.
pub fn exponents(t: &Term, leaf_cap: usize) -> Result<Vec<BigUint>, WitnessError> {
    let indices = check_orderly(t, leaf_cap)?;
    Ok((0..1usize << (3 * indices.len())).map(|code| exponent_for(&indices, code)).collect())
}

/// `t^μ` under `μ(x_n) = b_n`, with the default leaf cap.
pub fn symbolic_eval(t: &Term) -> Result<SymbolicOctonion, WitnessError> {
    SymbolicEvaluator::new(DEFAULT_LEAF_CAP).eval(t).map(|(v, _)| v)
}

/// Symbolic evaluation with a leaf cap and per-shape caching of the unit
/// value tables.
#[derive(Clone, Debug)]
pub struct SymbolicEvaluator {
    leaf_cap: usize,
    tables: BTreeMap<Term, Vec<SignedUnit>>,
}

impl SymbolicEvaluator {
    pub fn new(leaf_cap: usize) -> Self {
        SymbolicEvaluator { leaf_cap, tables: BTreeMap::new() }
    }

    pub fn leaf_cap(&self) -> usize {
        self.leaf_cap
    }

    /// Value plus the rewrites normalization needed (zero on orderly input).
    pub fn eval(&mut self, t: &Term) -> Result<(SymbolicOctonion, NormalizeStats), WitnessError> {
        let indices = check_orderly(t, self.leaf_cap)?;
        let shape = t.positional();
        let table = self.tables.entry(shape).or_insert_with_key(value_table);
        let mut per_slot: [Vec<(BigUint, Sign)>; 8] = Default::default();
        for (code, value) in table.iter().enumerate() {
            per_slot[value.index() as usize].push((exponent_for(&indices, code), value.sign()));
        }
        let mut stats = NormalizeStats::default();
        let coeffs = per_slot.map(|terms| {
            let (c, s) = sd_from_terms_counted(terms);
            stats.rewrites += s.rewrites;
            c
        });
        Ok((SymbolicOctonion { coeffs }, stats))
    }
}

/// Direct big-integer evaluation; variable indices must be `≤ 1`.
pub fn bigint_eval(t: &Term) -> Result<BigOctonion, WitnessError> {
    let indices = var_indices(t)?;
    if !is_orderly(t)? {
        return Err(WitnessError::NotOrderly);
    }
    if let Some(&n) = indices.iter().find(|&&n| n > BIGINT_INDEX_CAP) {
        return Err(WitnessError::CapExceeded { what: "index", value: n.into(), cap: BIGINT_INDEX_CAP.into() });
    }
    let b: Vec<BigOctonion> = (0..=BIGINT_INDEX_CAP).map(|n| bad_term(n).expect("within cap")).collect();
    fn go(t: &Term, b: &[BigOctonion]) -> BigOctonion {
        match t {
            Term::Leaf(Atom::Var(n)) => b[*n as usize].clone(),
            Term::Leaf(Atom::Unit(_)) => unreachable!("variable term"),
            Term::Pair(l, r) => &go(l, b) * &go(r, b),
        }
    }
    Ok(go(t, &b))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Distinct,
    Equal,
}

/// Which branch of the distinctness argument applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClaimCase {
    /// Both terms bracket the same variable string.
    SameString,
    /// The terms use different sets of variables.
    DifferentVars,
}

impl ClaimCase {
    /// Slot whose coefficient the argument shows must differ.
    pub fn designated_slot(self) -> u8 {
        match self {
            ClaimCase::SameString => 4,
            ClaimCase::DifferentVars => 0,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            ClaimCase::SameString => "SAME_STRING",
            ClaimCase::DifferentVars => "DIFFERENT_VARS",
        }
    }
}

/// Result of comparing `(t1(t2t3))` with `((t1't2')t3')` under `μ(x_n) = b_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessReport {
    pub left: Term,
    pub right: Term,
    pub verdict: Verdict,
    /// The designated slot when it separates, else the lowest separating slot.
    pub slot: Option<u8>,
    /// Every slot whose coefficients differ.
    pub differing: Vec<u8>,
    pub case: ClaimCase,
}

impl WitnessReport {
    /// Compares two precomputed values.
    pub fn compare(left: Term, right: Term, lv: &SymbolicOctonion, rv: &SymbolicOctonion) -> Self {
        let case = if var_indices(&left).ok() == var_indices(&right).ok() {
            ClaimCase::SameString
        } else {
            ClaimCase::DifferentVars
        };
        let differing = lv.differing_slots(rv);
        let designated = case.designated_slot();
        let slot = if differing.contains(&designated) { Some(designated) } else { differing.first().copied() };
        let verdict = if differing.is_empty() { Verdict::Equal } else { Verdict::Distinct };
        WitnessReport { left, right, verdict, slot, differing, case }
    }

    pub fn separates_at_designated_slot(&self) -> bool {
        self.slot == Some(self.case.designated_slot())
    }
}

impl fmt::Display for WitnessReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CLAIM {} VS {} -> ", self.left, self.right)?;
        match (self.verdict, self.slot) {
            (Verdict::Distinct, Some(j)) => write!(f, "DISTINCT slot=e{j}")?,
            _ => f.write_str("EQUAL")?,
        }
        write!(f, " case={}", self.case.tag())
    }
}

/// `(t1(t2t3))` and `((t1t2)t3)`.
pub fn claim_terms(t1: &Term, t2: &Term, t3: &Term) -> (Term, Term) {
    (
        Term::pair(t1.clone(), Term::pair(t2.clone(), t3.clone())),
        Term::pair(Term::pair(t1.clone(), t2.clone()), t3.clone()),
    )
}

/// Checks each term is orderly and `t1 ≺ t2 ≺ …`.
pub fn check_chain(ts: &[Term]) -> Result<(), WitnessError> {
    for t in ts {
        if !is_orderly(t)? {
            return Err(WitnessError::NotOrderly);
        }
    }
    for w in ts.windows(2) {
        if !precedes(&w[0], &w[1])? {
            return Err(WitnessError::PrecedenceViolated);
        }
    }
    Ok(())
}

/// Compares `(t1(t2t3))^μ` with `((t1t2)t3)^μ`.
pub fn claim_check(t1: &Term, t2: &Term, t3: &Term) -> Result<WitnessReport, WitnessError> {
    claim_check_with(&mut SymbolicEvaluator::new(DEFAULT_LEAF_CAP), t1, t2, t3)
}

pub fn claim_check_with(
    ev: &mut SymbolicEvaluator,
    t1: &Term,
    t2: &Term,
    t3: &Term,
) -> Result<WitnessReport, WitnessError> {
    check_chain(&[t1.clone(), t2.clone(), t3.clone()])?;
    let (left, right) = claim_terms(t1, t2, t3);
    let (lv, _) = ev.eval(&left)?;
    let (rv, _) = ev.eval(&right)?;
    Ok(WitnessReport::compare(left, right, &lv, &rv))
}

/// Compares `(t1(t2t3))^μ` with `((s1s2)s3)^μ` for two independent chains.
pub fn claim_check_pair(
    ev: &mut SymbolicEvaluator,
    t: [&Term; 3],
    s: [&Term; 3],
) -> Result<WitnessReport, WitnessError> {
    check_chain(&[t[0].clone(), t[1].clone(), t[2].clone()])?;
    check_chain(&[s[0].clone(), s[1].clone(), s[2].clone()])?;
    let (left, _) = claim_terms(t[0], t[1], t[2]);
    let (_, right) = claim_terms(s[0], s[1], s[2]);
    let (lv, _) = ev.eval(&left)?;
    let (rv, _) = ev.eval(&right)?;
    Ok(WitnessReport::compare(left, right, &lv, &rv))
}

/// Strictly increasing `k`-subsets of `0..bound`, lexicographically.
pub fn index_subsets(bound: u32, k: usize) -> Vec<Vec<u32>> {
    fn go(start: u32, bound: u32, k: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..bound {
            cur.push(i);
            go(i + 1, bound, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, bound, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Every orderly term over indices `< index_bound` with at most `leaf_cap`
/// leaves, by leaf count, then index set, then bracketing order.
pub fn orderly_terms(index_bound: u32, leaf_cap: usize) -> Vec<Term> {
    let mut out = Vec::new();
    for n in 1..=leaf_cap.min(index_bound as usize) {
        for idx in index_subsets(index_bound, n) {
            out.extend(enumerate_orderly(&idx).expect("increasing nonempty"));
        }
    }
    out
}

/// Every chain `t1 ≺ t2 ≺ t3` of orderly terms over indices `< index_bound`
/// with at most `leaf_cap` leaves in total.
pub fn chains(index_bound: u32, leaf_cap: usize) -> Vec<[Term; 3]> {
    let mut out = Vec::new();
    for n in 3..=leaf_cap.min(index_bound as usize) {
        for idx in index_subsets(index_bound, n) {
            for a in 1..n - 1 {
                for b in a + 1..n {
                    let first = enumerate_orderly(&idx[..a]).expect("nonempty");
                    let second = enumerate_orderly(&idx[a..b]).expect("nonempty");
                    let third = enumerate_orderly(&idx[b..]).expect("nonempty");
                    for t1 in &first {
                        for t2 in &second {
                            for t3 in &third {
                                out.push([t1.clone(), t2.clone(), t3.clone()]);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// The values `(s1(s2s3))^μ` over all chains within the bounds.
#[derive(Clone, Debug)]
pub struct BoundedX {
    index_bound: u32,
    leaf_cap: usize,
    members: BTreeSet<SymbolicOctonion>,
}

impl BoundedX {
    pub fn new(index_bound: u32, leaf_cap: usize) -> Result<Self, WitnessError> {
        if index_bound == 0 || leaf_cap == 0 {
            return Err(WitnessError::InvalidBounds);
        }
        let mut ev = SymbolicEvaluator::new(leaf_cap);
        let mut members = BTreeSet::new();
        for [s1, s2, s3] in chains(index_bound, leaf_cap) {
            let (term, _) = claim_terms(&s1, &s2, &s3);
            members.insert(ev.eval(&term)?.0);
        }
        Ok(BoundedX { index_bound, leaf_cap, members })
    }

    /// Builds from precomputed member values.
    pub fn from_members(index_bound: u32, leaf_cap: usize, members: BTreeSet<SymbolicOctonion>) -> Self {
        BoundedX { index_bound, leaf_cap, members }
    }

    pub fn index_bound(&self) -> u32 {
        self.index_bound
    }

    pub fn leaf_cap(&self) -> usize {
        self.leaf_cap
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: &SymbolicOctonion) -> bool {
        self.members.contains(v)
    }
}

/// Membership of `v` in X restricted to the given bounds.
pub fn in_x(v: &SymbolicOctonion, index_bound: u32, leaf_cap: usize) -> Result<bool, WitnessError> {
    Ok(BoundedX::new(index_bound, leaf_cap)?.contains(v))
}

/// One element of a finite-products prefix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrEntry {
    /// Bracketing over positions in the reduction prefix (`x_i` is `a_i`).
    pub word: Term,
    /// The same product written over the underlying sequence.
    pub term: Term,
    pub value: SymbolicOctonion,
}

/// Values of every bracketed product of at most `depth` terms of the
/// reduction `a_i = ts[i]^μ`, taken in order from a subsequence.
pub fn fr_prefix(ts: &[Term], depth: usize, leaf_cap: usize) -> Result<Vec<FrEntry>, WitnessError> {
    let mut ev = SymbolicEvaluator::new(leaf_cap);
    fr_prefix_with(&mut ev, ts, depth, |ev, t| ev.eval(t).map(|(v, _)| v))
}

/// [`fr_prefix`] with a caller-supplied evaluation routine (for caching).
pub fn fr_prefix_with<C, F>(ctx: &mut C, ts: &[Term], depth: usize, mut eval: F) -> Result<Vec<FrEntry>, WitnessError>
where
    F: FnMut(&mut C, &Term) -> Result<SymbolicOctonion, WitnessError>,
{
    check_chain(ts)?;
    let mut out = Vec::new();
    for k in 1..=depth.min(ts.len()) {
        for positions in index_subsets(ts.len() as u32, k) {
            for word in enumerate_orderly(&positions).expect("increasing nonempty") {
                let term = word.map_leaves(&mut |a| match a {
                    Atom::Var(i) => ts[i as usize].clone(),
                    unit => Term::Leaf(unit),
                });
                let value = eval(ctx, &term)?;
                out.push(FrEntry { word, term, value });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::parse;
    use alloc::string::ToString;
    use alloc::vec;

    fn t(s: &str) -> Term {
        parse(s).unwrap()
    }

    #[test]
    fn bad_term_examples() {
        let b0 = bad_term(0).unwrap();
        for (i, e) in [2u32, 4, 8, 16, 32, 64, 128, 256].into_iter().enumerate() {
            assert_eq!(b0.coeffs[i], BigInt::one() << e);
        }
        assert_eq!(b0.coeffs[0], BigInt::from(4));
        assert!(matches!(bad_term(2), Err(WitnessError::CapExceeded { .. })));
    }

    #[test]
    fn single_variable_is_b0() {
        let v = symbolic_eval(&t("x0")).unwrap();
        for i in 0..8 {
            let terms: Vec<_> = v.coeffs[i].terms().collect();
            assert_eq!(terms, vec![(&BigUint::from(2u32 << i), Sign::Plus)]);
        }
        assert_eq!(v.to_big(1 << 10), Some(bad_term(0).unwrap()));
    }

    #[test]
    fn pair_real_part_has_eight_diagonal_terms() {
        let v = symbolic_eval(&t("(x0x1)")).unwrap();
        let c0 = v.coeff(0);
        assert_eq!(c0.len(), 8);
        for i in 0..8u8 {
            // α = (i, i): bits 1+i and 9+i
            let e = BigUint::from((1u32 << (1 + i)) | (1u32 << (9 + i)));
            let expect = if i == 0 { Sign::Plus } else { Sign::Minus };
            assert_eq!(c0.get(&e), Some(expect));
        }
    }

    #[test]
    fn bigint_eval_examples() {
        assert_eq!(bigint_eval(&t("x1")).unwrap(), bad_term(1).unwrap());
        assert_eq!(bigint_eval(&t("(x0x0)")), Err(WitnessError::NotOrderly));
        assert!(matches!(bigint_eval(&t("(x0x2)")), Err(WitnessError::CapExceeded { .. })));
    }

    #[test]
    fn symbolic_rejects_bad_input() {
        assert_eq!(symbolic_eval(&t("(x1x0)")), Err(WitnessError::NotOrderly));
        assert!(matches!(SymbolicEvaluator::new(2).eval(&t("(x0(x1x2))")), Err(WitnessError::CapExceeded { .. })));
        assert!(matches!(symbolic_eval(&t("(x0e1)")), Err(WitnessError::Term(TermError::NotVariableTerm))));
    }

    #[test]
    fn claim_examples() {
        let r = claim_check(&t("x0"), &t("x1"), &t("x2")).unwrap();
        assert_eq!(r.verdict, Verdict::Distinct);
        assert_eq!(r.slot, Some(4));
        assert_eq!(r.to_string(), "CLAIM (x0(x1x2)) VS ((x0x1)x2) -> DISTINCT slot=e4 case=SAME_STRING");

        let r = claim_check(&t("x0"), &t("x1"), &t("(x2x3)")).unwrap();
        assert_eq!(r.verdict, Verdict::Distinct);
        assert_eq!(r.case, ClaimCase::SameString);

        assert_eq!(claim_check(&t("x1"), &t("x0"), &t("x2")), Err(WitnessError::PrecedenceViolated));
    }

    #[test]
    fn independent_chains() {
        let mut ev = SymbolicEvaluator::new(5);
        let (a, b, c, d) = (t("x0"), t("x1"), t("x2"), t("x3"));
        let r = claim_check_pair(&mut ev, [&a, &b, &c], [&a, &b, &d]).unwrap();
        assert_eq!(r.case, ClaimCase::DifferentVars);
        assert_eq!(r.slot, Some(0));
        // ((x0x1)(x2x3)) arises from both readings: a genuine coincidence
        let (ab, cd) = (t("(x0x1)"), t("(x2x3)"));
        let r = claim_check_pair(&mut ev, [&ab, &c, &d], [&a, &b, &cd]).unwrap();
        assert_eq!(r.left, r.right);
        assert_eq!(r.verdict, Verdict::Equal);
    }

    #[test]
    fn chain_counts() {
        assert_eq!(chains(3, 3).len(), 1);
        // four 3-subsets, plus 3 splits of the 4-set with one 2-leaf block each
        assert_eq!(chains(4, 4).len(), 4 + 3);
        assert_eq!(orderly_terms(3, 3).len(), 3 + 3 + 2);
    }

    #[test]
    fn in_x_examples() {
        let x = BoundedX::new(7, 5).unwrap();
        assert!(x.contains(&symbolic_eval(&t("(x0(x1x2))")).unwrap()));
        assert!(!x.contains(&symbolic_eval(&t("((x0x1)x2)")).unwrap()));
        assert!(!x.contains(&SymbolicOctonion::zero()));
        assert_eq!(BoundedX::new(0, 3).err(), Some(WitnessError::InvalidBounds));
        assert!(in_x(&symbolic_eval(&t("(x1(x3x4))")).unwrap(), 5, 3).unwrap());
    }

    #[test]
    fn fr_prefix_examples() {
        let single = fr_prefix(&[t("(x0x1)")], 1, 5).unwrap();
        assert_eq!(single.len(), 1);
        assert_eq!(single[0].value, symbolic_eval(&t("(x0x1)")).unwrap());

        let three = fr_prefix(&[t("x0"), t("x1"), t("x2")], 3, 5).unwrap();
        // 3 singletons, 3 pairs, 2 triples
        assert_eq!(three.len(), 8);
        let values: Vec<_> = three.iter().map(|e| &e.value).collect();
        assert!(values.contains(&&symbolic_eval(&t("(x0(x1x2))")).unwrap()));
        assert!(values.contains(&&symbolic_eval(&t("((x0x1)x2)")).unwrap()));

        assert_eq!(fr_prefix(&[t("x1"), t("x0")], 2, 5), Err(WitnessError::PrecedenceViolated));
    }
}
