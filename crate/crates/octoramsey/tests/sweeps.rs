use std::collections::BTreeSet;

use octoramsey::sweep::{fr_split_sweep, theorem_sweep, ValueMap};
use octoramsey_core::term::{parse, Term};
use octoramsey_core::witness::{
    chains, check_chain, claim_terms, fr_prefix_with, orderly_terms, SymbolicOctonion, Verdict,
};

fn t(s: &str) -> Term {
    parse(s).unwrap()
}

/// `(s1(s2s3))` with `s1 ≺ s2 ≺ s3`, read off the shape of `term`.
fn right_claim_split(term: &Term) -> Option<[Term; 3]> {
    match term {
        Term::Pair(s1, rest) => match rest.as_ref() {
            Term::Pair(s2, s3) => {
                let split = [(**s1).clone(), (**s2).clone(), (**s3).clone()];
                check_chain(&split).is_ok().then_some(split)
            }
            Term::Leaf(_) => None,
        },
        Term::Leaf(_) => None,
    }
}

#[test]
fn orderly_values_are_pairwise_distinct() {
    let values = ValueMap::build(6, 4).unwrap();
    let distinct: BTreeSet<_> = values.iter().map(|(_, v)| v.clone()).collect();
    assert_eq!(values.len(), orderly_terms(6, 4).len());
    assert_eq!(distinct.len(), values.len());
}

#[test]
fn sweep_matches_direct_claim_checks() {
    let reports = theorem_sweep(5, 4).unwrap();
    let direct: Vec<_> =
        chains(5, 4).iter().map(|[a, b, c]| octoramsey_core::witness::claim_check(a, b, c).unwrap()).collect();
    assert_eq!(reports, direct);
    assert!(reports.iter().all(|r| r.verdict == Verdict::Distinct));
}

#[test]
fn left_claim_term_in_x_exactly_when_last_term_is_a_pair() {
    // ((t1t2)t3) is literally (s1(s2s3)) for s1 = (t1t2), (s2s3) = t3 whenever
    // t3 is a product, so it lands in X; otherwise distinctness keeps it out.
    let values = ValueMap::build(7, 5).unwrap();
    let x = values.bounded_x(7);
    let all = chains(7, 5);
    let mut pair_last = 0;
    for [a, b, c] in &all {
        let (_, right) = claim_terms(a, b, c);
        let member = x.contains(&values.value(&right).unwrap());
        assert_eq!(member, c.is_pair(), "(({a}{b}){c})");
        assert_eq!(right_claim_split(&right).is_some(), c.is_pair());
        pair_last += usize::from(c.is_pair());
    }
    assert!(pair_last > 0 && pair_last < all.len());
}

#[test]
fn bounded_splits_come_from_a_short_term() {
    for split in fr_split_sweep(7, 5, 3).unwrap() {
        assert!(split.is_split());
        let non_member = split.non_member.unwrap();
        assert!(right_claim_split(&non_member.term).is_none(), "{}", non_member.term);
        assert!(split.chain.iter().any(|s| s.leaf_count() <= 2));
    }
}

#[test]
fn chain_of_three_leaf_products_has_no_visible_non_member() {
    // Beyond the sweep caps: every product of at most three terms of this
    // chain already has the shape (s1(s2s3)) of a member of X.
    let chain = [t("(x0(x1x2))"), t("(x3(x4x5))"), t("(x6(x7x8))")];
    let entries = fr_prefix_with(&mut (), &chain, 3, |_, _| Ok(SymbolicOctonion::zero())).unwrap();
    assert_eq!(entries.len(), 3 + 3 + 2);
    for e in &entries {
        assert!(right_claim_split(&e.term).is_some(), "{}", e.term);
    }
}
