//! Parallel exhaustive sweeps over bounded families of orderly terms.
//!
//! Work is spread over a rayon pool whose size is capped by
//! `OCTORAMSEY_THREADS`; every result comes back in the canonical
//! enumeration order regardless of scheduling.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use rayon::prelude::*;

use octoramsey_core::term::Term;
use octoramsey_core::witness::{
    chains, claim_terms, exponents, fr_prefix_with, orderly_terms, BoundedX, FrEntry, SymbolicEvaluator,
    SymbolicOctonion, Verdict, WitnessError, WitnessReport,
};

pub const THREADS_ENV: &str = "OCTORAMSEY_THREADS";

/// A pool sized by `OCTORAMSEY_THREADS` when set to a positive integer.
pub fn pool() -> rayon::ThreadPool {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = std::env::var(THREADS_ENV).ok().and_then(|v| v.parse::<usize>().ok()).filter(|&n| n > 0) {
        builder = builder.num_threads(n);
    }
    builder.build().expect("thread pool")
}

/// Symbolic values of every orderly term within the bounds.
#[derive(Clone, Debug)]
pub struct ValueMap {
    leaf_cap: usize,
    values: BTreeMap<Term, SymbolicOctonion>,
    rewrites: usize,
}

impl ValueMap {
    pub fn build(index_bound: u32, leaf_cap: usize) -> Result<Self, WitnessError> {
        Self::for_terms(orderly_terms(index_bound, leaf_cap), leaf_cap)
    }

    pub fn for_terms(terms: Vec<Term>, leaf_cap: usize) -> Result<Self, WitnessError> {
        let evaluated: Vec<_> = pool().install(|| {
            terms
                .into_par_iter()
                .map_init(
                    || SymbolicEvaluator::new(leaf_cap),
                    |ev, t| ev.eval(&t).map(|(v, stats)| (t, v, stats.rewrites)),
                )
                .collect::<Result<_, _>>()
        })?;
        let mut values = BTreeMap::new();
        let mut rewrites = 0;
        for (t, v, r) in evaluated {
            rewrites += r;
            values.insert(t, v);
        }
        Ok(ValueMap { leaf_cap, values, rewrites })
    }

    pub fn get(&self, t: &Term) -> Option<&SymbolicOctonion> {
        self.values.get(t)
    }

    /// Looks up `t`, evaluating it directly if it is outside the map.
    pub fn value(&self, t: &Term) -> Result<SymbolicOctonion, WitnessError> {
        match self.values.get(t) {
            Some(v) => Ok(v.clone()),
            None => SymbolicEvaluator::new(self.leaf_cap).eval(t).map(|(v, _)| v),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Normalization rewrites summed over every evaluated term.
    pub fn rewrites(&self) -> usize {
        self.rewrites
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Term, &SymbolicOctonion)> {
        self.values.iter()
    }

    /// The bounded set X read off this map.
    pub fn bounded_x(&self, index_bound: u32) -> BoundedX {
        let members: BTreeSet<SymbolicOctonion> = chains(index_bound, self.leaf_cap)
            .iter()
            .map(|[a, b, c]| self.values[&claim_terms(a, b, c).0].clone())
            .collect();
        BoundedX::from_members(index_bound, self.leaf_cap, members)
    }
}

/// `claim_check` over every chain within the bounds (shared-triple reading).
pub fn theorem_sweep(index_bound: u32, leaf_cap: usize) -> Result<Vec<WitnessReport>, WitnessError> {
    let values = ValueMap::build(index_bound, leaf_cap)?;
    Ok(chains(index_bound, leaf_cap)
        .iter()
        .map(|[a, b, c]| {
            let (left, right) = claim_terms(a, b, c);
            let (lv, rv) = (&values.values[&left], &values.values[&right]);
            WitnessReport::compare(left, right, lv, rv)
        })
        .collect())
}

/// Outcome of comparing `(t1(t2t3))` and `((s1s2)s3)` over all pairs of
/// chains `t ≠ s` within the bounds.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IndependentSummary {
    pub pairs: usize,
    pub same_string: usize,
    pub different_vars: usize,
    /// Distinct pairs not separated at the slot the argument designates.
    pub off_slot: usize,
    /// Pairs whose two terms are literally the same term.
    pub identical_terms: usize,
    /// Equal values for different terms; must stay zero.
    pub equal_values_distinct_terms: Vec<WitnessReport>,
}

pub fn independent_sweep(index_bound: u32, leaf_cap: usize) -> Result<IndependentSummary, WitnessError> {
    let values = ValueMap::build(index_bound, leaf_cap)?;
    let all = chains(index_bound, leaf_cap);
    let sides: Vec<(Term, Term)> = all.iter().map(|[a, b, c]| claim_terms(a, b, c)).collect();
    let partials: Vec<IndependentSummary> = pool().install(|| {
        (0..sides.len())
            .into_par_iter()
            .map(|i| {
                let mut s = IndependentSummary::default();
                let left = &sides[i].0;
                for (j, (_, right)) in sides.iter().enumerate() {
                    if i == j {
                        continue;
                    }
                    let r = WitnessReport::compare(
                        left.clone(),
                        right.clone(),
                        &values.values[left],
                        &values.values[right],
                    );
                    s.pairs += 1;
                    match r.case {
                        octoramsey_core::witness::ClaimCase::SameString => s.same_string += 1,
                        octoramsey_core::witness::ClaimCase::DifferentVars => s.different_vars += 1,
                    }
                    if left == right {
                        s.identical_terms += 1;
                    } else if r.verdict == Verdict::Equal {
                        s.equal_values_distinct_terms.push(r);
                    } else if !r.separates_at_designated_slot() {
                        s.off_slot += 1;
                    }
                }
                s
            })
            .collect()
    });
    Ok(partials.into_iter().fold(IndependentSummary::default(), |mut acc, s| {
        acc.pairs += s.pairs;
        acc.same_string += s.same_string;
        acc.different_vars += s.different_vars;
        acc.off_slot += s.off_slot;
        acc.identical_terms += s.identical_terms;
        acc.equal_values_distinct_terms.extend(s.equal_values_distinct_terms);
        acc
    }))
}

/// Spacing of the exponents `E_α` over all orderly terms within bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObservationSummary {
    pub terms: usize,
    pub exponents: usize,
    /// Least gap between two exponents of the same term.
    pub min_gap: Option<BigUint>,
    /// Normalization rewrites during symbolic evaluation of the same terms.
    pub rewrites: usize,
}

pub fn observation_sweep(index_bound: u32, leaf_cap: usize) -> Result<ObservationSummary, WitnessError> {
    let terms = orderly_terms(index_bound, leaf_cap);
    let per_term: Vec<(usize, Option<BigUint>)> = pool().install(|| {
        terms
            .par_iter()
            .map(|t| {
                let mut es = exponents(t, leaf_cap)?;
                es.sort();
                let gap = es.windows(2).map(|w| &w[1] - &w[0]).min();
                Ok((es.len(), gap))
            })
            .collect::<Result<_, WitnessError>>()
    })?;
    let values = ValueMap::for_terms(terms.clone(), leaf_cap)?;
    Ok(ObservationSummary {
        terms: terms.len(),
        exponents: per_term.iter().map(|(n, _)| n).sum(),
        min_gap: per_term.into_iter().filter_map(|(_, g)| g).min(),
        rewrites: values.rewrites(),
    })
}

/// One chain's finite-products prefix split by bounded-X membership.
#[derive(Clone, Debug)]
pub struct FrSplit {
    pub chain: [Term; 3],
    pub member: Option<FrEntry>,
    pub non_member: Option<FrEntry>,
}

impl FrSplit {
    pub fn is_split(&self) -> bool {
        self.member.is_some() && self.non_member.is_some()
    }
}

/// For each chain within bounds, the first prefix product in bounded X and
/// the first one outside it.
pub fn fr_split_sweep(index_bound: u32, leaf_cap: usize, depth: usize) -> Result<Vec<FrSplit>, WitnessError> {
    let values = ValueMap::build(index_bound, leaf_cap)?;
    let x = values.bounded_x(index_bound);
    let all = chains(index_bound, leaf_cap);
    pool().install(|| {
        all.into_par_iter()
            .map(|chain| {
                let entries = fr_prefix_with(&mut (), &chain, depth, |_, t| values.value(t))?;
                let (mut member, mut non_member) = (None, None);
                for e in entries {
                    let slot = if x.contains(&e.value) { &mut member } else { &mut non_member };
                    slot.get_or_insert(e);
                }
                Ok(FrSplit { chain, member, non_member })
            })
            .collect()
    })
}
