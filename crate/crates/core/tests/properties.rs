use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use octoramsey_core::naf::{naf_decode, naf_encode, sd_equal, sd_from_terms, sd_from_terms_counted, SparseDyadic};
use octoramsey_core::octonion::{associator_class, oct_mul, AssociatorClass, BigOctonion, Sign, SignedUnit};
use octoramsey_core::sign::lambda_sets;
use octoramsey_core::term::{
    enumerate_orderly, eval_assigned, eval_units, is_orderly, parse, render, shapes, substitute, Atom, Term,
};
use proptest::prelude::*;

fn arb_big() -> impl Strategy<Value = BigInt> {
    (any::<i64>(), any::<u64>()).prop_map(|(hi, lo)| (BigInt::from(hi) << 64) + BigInt::from(lo))
}

fn arb_octonion() -> impl Strategy<Value = BigOctonion> {
    proptest::array::uniform8(arb_big()).prop_map(BigOctonion::from_coeffs)
}

fn arb_atom() -> impl Strategy<Value = Atom> {
    prop_oneof![(0u32..1000).prop_map(Atom::Var), (0u8..8).prop_map(Atom::Unit)]
}

fn arb_term() -> impl Strategy<Value = Term> {
    arb_atom()
        .prop_map(Term::Leaf)
        .prop_recursive(8, 9, 2, |inner| (inner.clone(), inner).prop_map(|(l, r)| Term::pair(l, r)))
}

fn scale(x: &BigOctonion, k: &BigInt) -> BigOctonion {
    BigOctonion::from_coeffs(std::array::from_fn(|i| &x.coeffs[i] * k))
}

proptest! {
    #[test]
    fn oct_mul_is_bilinear(a in arb_octonion(), b in arb_octonion(), c in arb_octonion(), k in arb_big()) {
        prop_assert_eq!(oct_mul(&(&a + &b), &c), &oct_mul(&a, &c) + &oct_mul(&b, &c));
        prop_assert_eq!(oct_mul(&a, &(&b + &c)), &oct_mul(&a, &b) + &oct_mul(&a, &c));
        prop_assert_eq!(oct_mul(&scale(&a, &k), &b), scale(&oct_mul(&a, &b), &k));
        prop_assert_eq!(oct_mul(&a, &scale(&b, &k)), scale(&oct_mul(&a, &b), &k));
    }

    #[test]
    fn render_parse_round_trip(t in arb_term()) {
        prop_assert_eq!(parse(&render(&t)).unwrap(), t);
    }

    #[test]
    fn naf_round_trip_256_bit(hi in any::<[u64; 4]>(), neg in any::<bool>()) {
        let mut a = BigInt::from(0);
        for limb in hi {
            a = (a << 64) + BigInt::from(limb);
        }
        if neg {
            a = -a;
        }
        let digits = naf_encode(&a);
        prop_assert_eq!(naf_decode(digits.digits()).unwrap(), a);
    }

    #[test]
    fn sparse_normalization_preserves_value(terms in prop::collection::vec((0u32..24, any::<bool>()), 0..40)) {
        let mut expected = BigInt::from(0);
        let input: Vec<(BigUint, Sign)> = terms
            .iter()
            .map(|&(e, neg)| {
                let p = BigInt::from(1) << e;
                if neg { expected -= p } else { expected += p }
                (BigUint::from(e), if neg { Sign::Minus } else { Sign::Plus })
            })
            .collect();
        let v = sd_from_terms(input);
        prop_assert!(v.is_canonical());
        prop_assert_eq!(v.to_bigint(64).unwrap(), expected.clone());
        prop_assert_eq!(v, SparseDyadic::from_bigint(&expected));
    }

    #[test]
    fn sparse_equality_matches_integers(a in -(1i64 << 20)..(1i64 << 20), b in -(1i64 << 20)..(1i64 << 20)) {
        let (x, y) = (SparseDyadic::from_bigint(&a.into()), SparseDyadic::from_bigint(&b.into()));
        prop_assert_eq!(sd_equal(&x, &y), a == b);
    }

    #[test]
    fn gap_regime_needs_no_rewrites(mut exps in prop::collection::btree_set(0u32..5000, 0..30), signs in any::<u64>()) {
        // spread to pairwise distance ≥ 2
        let spread: Vec<u32> = std::mem::take(&mut exps).into_iter().map(|e| 2 * e).collect();
        let input: Vec<(BigUint, Sign)> = spread
            .iter()
            .enumerate()
            .map(|(i, &e)| (BigUint::from(e), if signs >> (i % 64) & 1 == 1 { Sign::Minus } else { Sign::Plus }))
            .collect();
        let (out, stats) = sd_from_terms_counted(input.clone());
        prop_assert_eq!(stats.rewrites, 0);
        prop_assert_eq!(out.terms().map(|(e, s)| (e.clone(), s)).collect::<Vec<_>>(), input);
    }
}

#[test]
fn table_checks_out_exhaustively() {
    // Triples split into exactly two classes; log the partition once.
    let mut anti = 0;
    for i in 0..8 {
        for j in 0..8 {
            for k in 0..8 {
                if associator_class(i, j, k) == AssociatorClass::Anti {
                    anti += 1;
                }
            }
        }
    }
    // Anti-associating triples are exactly the distinct nonzero triples not on a
    // quaternionic line: 7·6·4 = 168.
    assert_eq!(anti, 168);
    for i in 1..8u8 {
        for j in 1..8u8 {
            for k in 1..8u8 {
                let distinct = i != j && j != k && i != k;
                let on_line = (SignedUnit::pos(i) * SignedUnit::pos(j)).index() == k;
                let expect = if distinct && !on_line { AssociatorClass::Anti } else { AssociatorClass::Associates };
                assert_eq!(associator_class(i, j, k), expect, "({i},{j},{k})");
            }
        }
    }
}

/// Bracketings produced by merging adjacent entries of a list in every
/// possible order, deduplicated.
fn brute_bracketings(n: usize) -> BTreeSet<String> {
    let mut seen = BTreeSet::new();
    let mut stack = vec![(0..n).map(|i| format!("x{i}")).collect::<Vec<_>>()];
    let mut done = BTreeSet::new();
    while let Some(items) = stack.pop() {
        if items.len() == 1 {
            done.insert(items[0].clone());
            continue;
        }
        for i in 0..items.len() - 1 {
            let mut next = items.clone();
            let merged = format!("({}{})", next[i], next[i + 1]);
            next.splice(i..i + 2, [merged]);
            if seen.insert(next.clone()) {
                stack.push(next);
            }
        }
    }
    done
}

#[test]
fn enumeration_matches_catalan_and_brute_force() {
    const CATALAN: [usize; 9] = [1, 1, 2, 5, 14, 42, 132, 429, 1430];
    for n in 1..=9usize {
        let idx: Vec<u32> = (0..n as u32).collect();
        let terms = enumerate_orderly(&idx).unwrap();
        assert_eq!(terms.len(), CATALAN[n - 1]);
        assert!(terms.iter().all(|t| is_orderly(t).unwrap()));
        for t in &terms {
            assert_eq!(&parse(&render(t)).unwrap(), t);
        }
        if n <= 7 {
            let rendered: BTreeSet<String> = terms.iter().map(render).collect();
            assert_eq!(rendered, brute_bracketings(n));
        }
    }
}

#[test]
fn assigned_evaluation_agrees_with_substitution() {
    for n in 1..=4usize {
        for t in shapes(n) {
            for code in 0..8usize.pow(n as u32) {
                let mu: Vec<SignedUnit> =
                    (0..n).map(|i| SignedUnit::pos((code / 8usize.pow(i as u32) % 8) as u8)).collect();
                let (sign, ground) = substitute(&t, mu.as_slice()).unwrap();
                let direct = eval_assigned(&t, mu.as_slice()).unwrap();
                let via_units = eval_units(&ground).unwrap();
                assert_eq!(direct, via_units.with_sign(via_units.sign() * sign));
            }
        }
    }
}

#[test]
fn negative_assignments_factor_out() {
    let t = parse("((x0x1)(x2x3))").unwrap();
    let mu = [SignedUnit::neg(3), SignedUnit::pos(5), SignedUnit::neg(6), SignedUnit::neg(2)];
    let plus: Vec<SignedUnit> = mu.iter().map(|u| u.with_sign(Sign::Plus)).collect();
    assert_eq!(eval_assigned(&t, &mu[..]).unwrap(), -eval_assigned(&t, plus.as_slice()).unwrap());
}

#[test]
fn lambda_sets_partition_and_share_keys() {
    for n in 1..=5usize {
        let idx: Vec<u32> = (0..n as u32).map(|i| 3 * i).collect();
        let terms = enumerate_orderly(&idx).unwrap();
        let first = lambda_sets(&terms[0]).unwrap();
        for t in &terms {
            let l = lambda_sets(t).unwrap();
            let total: usize = (0..8).map(|j| l.bucket_len(j)).sum();
            assert_eq!(total, 8usize.pow(n as u32));
            let mut all = BTreeSet::new();
            for j in 0..8 {
                for k in l.keys(j) {
                    assert!(all.insert(k.to_vec()), "α in two buckets");
                }
            }
            assert!(l.same_keys(&first), "{t}");
        }
    }
}

#[test]
fn nonempty_buckets_for_every_term() {
    // Every Λ_j is nonempty, so no product of b-terms has a zero coefficient.
    for n in 1..=5 {
        for t in shapes(n) {
            let l = lambda_sets(&t).unwrap();
            assert!((0..8).all(|j| l.bucket_len(j) > 0), "{t}");
        }
    }
}
