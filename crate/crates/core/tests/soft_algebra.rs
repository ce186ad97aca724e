mod common;

use std::sync::Arc;

use common::naive;
use proptest::prelude::*;
use softclass::oracle::enumerate_soft_sets;
use softclass::{Context, Error, SoftSet};

fn context(x: usize, e: usize) -> Arc<Context> {
    Arc::new(
        Context::new(
            (1..=x).map(|i| format!("x{i}")),
            (1..=e).map(|i| format!("e{i}")),
        )
        .unwrap(),
    )
}

fn all(x: usize, e: usize) -> Vec<SoftSet> {
    enumerate_soft_sets(&context(x, e)).unwrap().collect()
}

fn small_contexts() -> impl Iterator<Item = (usize, usize)> {
    (0..=2).flat_map(|x| (0..=2).map(move |e| (x, e)))
}

#[test]
fn operations_agree_with_naive_model() {
    for (x, e) in small_contexts() {
        let sets = all(x, e);
        for f in &sets {
            for g in &sets {
                let (nf, ng) = (naive(f), naive(g));
                assert_eq!(naive(&f.union(g).unwrap()), common::union(&nf, &ng));
                assert_eq!(
                    f.intersection(g).ok().map(|s| naive(&s)),
                    common::intersection(&nf, &ng)
                );
                assert_eq!(f.is_soft_subset(g).unwrap(), common::is_subset(&nf, &ng));
            }
        }
    }
}

#[test]
fn subset_is_a_partial_order_and_equality_is_mutual_inclusion() {
    for (x, e) in small_contexts() {
        let sets = all(x, e);
        for f in &sets {
            assert!(f.is_soft_subset(f).unwrap());
            for g in &sets {
                let both = f.is_soft_subset(g).unwrap() && g.is_soft_subset(f).unwrap();
                assert_eq!(f.soft_equal(g).unwrap(), both);
                assert_eq!(both, f == g);
                for h in &sets {
                    if f.is_soft_subset(g).unwrap() && g.is_soft_subset(h).unwrap() {
                        assert!(f.is_soft_subset(h).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn union_laws() {
    for (x, e) in small_contexts() {
        let ctx = context(x, e);
        let sets = all(x, e);
        for f in &sets {
            assert_eq!(&f.union(f).unwrap(), f);
            let unit = SoftSet::null(&ctx, domain_names(&ctx, f)).unwrap();
            assert_eq!(&f.union(&unit).unwrap(), f);
            for g in &sets {
                let fg = f.union(g).unwrap();
                assert_eq!(fg, g.union(f).unwrap());
                assert!(f.is_soft_subset(&fg).unwrap());
                for h in &sets {
                    assert_eq!(fg.union(h).unwrap(), f.union(&g.union(h).unwrap()).unwrap());
                }
            }
        }
    }
}

#[test]
fn intersection_laws() {
    for (x, e) in small_contexts() {
        let ctx = context(x, e);
        let sets = all(x, e);
        for f in &sets {
            if f.domain_is_empty() {
                assert_eq!(f.intersection(f), Err(Error::EmptyParameterIntersection));
                continue;
            }
            assert_eq!(&f.intersection(f).unwrap(), f);
            let unit = SoftSet::absolute(&ctx, domain_names(&ctx, f)).unwrap();
            assert_eq!(&f.intersection(&unit).unwrap(), f);
            for g in &sets {
                let Ok(fg) = f.intersection(g) else {
                    assert!(f.domain().intersection(&g.domain()).is_empty());
                    continue;
                };
                assert_eq!(fg, g.intersection(f).unwrap());
                assert!(fg.is_soft_subset(f).unwrap());
                for h in &sets {
                    let common = f
                        .domain()
                        .intersection(&g.domain())
                        .intersection(&h.domain());
                    if common.is_empty() {
                        continue;
                    }
                    assert_eq!(
                        fg.intersection(h).unwrap(),
                        f.intersection(&g.intersection(h).unwrap()).unwrap()
                    );
                }
            }
        }
    }
}

#[test]
fn extension_pads_with_empty_values() {
    for (x, e) in small_contexts() {
        let ctx = context(x, e);
        for f in all(x, e) {
            let full = f.extend_full();
            assert_eq!(full, f.extend_domain(ctx.attributes()).unwrap());
            assert!(f.is_soft_subset(&full).unwrap());
            for (i, value) in full.iter() {
                match f.get(i) {
                    Some(v) => assert_eq!(v, value),
                    None => assert!(value.is_empty()),
                }
            }
        }
    }
}

fn domain_names<'a>(ctx: &'a Context, like: &SoftSet) -> Vec<&'a str> {
    like.iter().map(|(i, _)| ctx.attribute(i)).collect()
}

// Larger contexts, sampled.

const X: [&str; 6] = ["a", "b", "c", "d", "e", "f"];
const E: [&str; 5] = ["e1", "e2", "e3", "e4", "e5"];

fn big() -> Arc<Context> {
    Arc::new(Context::new(X, E).unwrap())
}

fn arb_soft() -> impl Strategy<Value = SoftSet> {
    proptest::collection::vec(
        proptest::option::of(proptest::bits::u8::masked(0b11_1111)),
        E.len(),
    )
    .prop_map(|slots| {
        let ctx = big();
        let entries: Vec<(&str, Vec<&str>)> = slots
            .iter()
            .zip(E)
            .filter_map(|(mask, attr)| {
                mask.map(|m| {
                    (
                        attr,
                        X.iter()
                            .enumerate()
                            .filter(|(i, _)| m & (1 << i) != 0)
                            .map(|(_, x)| *x)
                            .collect(),
                    )
                })
            })
            .collect();
        SoftSet::new(&ctx, entries).unwrap()
    })
}

proptest! {
    #[test]
    fn union_commutes_and_absorbs(f in arb_soft(), g in arb_soft()) {
        let fg = f.union(&g).unwrap();
        prop_assert_eq!(&fg, &g.union(&f).unwrap());
        prop_assert!(f.is_soft_subset(&fg).unwrap());
        prop_assert!(g.is_soft_subset(&fg).unwrap());
    }

    #[test]
    fn intersection_is_below_both(f in arb_soft(), g in arb_soft()) {
        match f.intersection(&g) {
            Ok(fg) => {
                prop_assert!(fg.is_soft_subset(&f).unwrap());
                prop_assert!(fg.is_soft_subset(&g).unwrap());
                prop_assert_eq!(fg, g.intersection(&f).unwrap());
            }
            Err(e) => {
                prop_assert_eq!(e, Error::EmptyParameterIntersection);
                prop_assert!(f.domain().intersection(&g.domain()).is_empty());
            }
        }
    }

    #[test]
    fn agrees_with_naive_model(f in arb_soft(), g in arb_soft()) {
        let (nf, ng) = (naive(&f), naive(&g));
        prop_assert_eq!(naive(&f.union(&g).unwrap()), common::union(&nf, &ng));
        prop_assert_eq!(f.intersection(&g).ok().map(|s| naive(&s)), common::intersection(&nf, &ng));
        prop_assert_eq!(f.is_soft_subset(&g).unwrap(), common::is_subset(&nf, &ng));
    }
}
