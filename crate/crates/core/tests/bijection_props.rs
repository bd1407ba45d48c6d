use overmex::bijection::{classify, lemma41_insert, lemma41_remove, phi, phi_inverse, AbcLabel, Side};
use overmex::opart::overline_mex;
use overmex::{Enumerator, MexQuery, Overpartition, Part};
use proptest::prelude::*;

/// Random overpartition with weight at most 20: a multiset of values, with
/// the last copy of each value optionally overlined.
fn overpartition() -> impl Strategy<Value = Overpartition> {
    prop::collection::vec((1u32..=8, any::<bool>()), 0..8).prop_map(|raw| {
        let mut values: Vec<u32> = raw.iter().map(|&(v, _)| v).collect();
        values.sort_unstable_by(|a, b| b.cmp(a));
        let mut total = 0;
        values.retain(|&v| {
            total += v;
            total <= 20
        });
        let mut parts: Vec<Part> = Vec::new();
        for (i, &v) in values.iter().enumerate() {
            let last_copy = values.get(i + 1) != Some(&v);
            let over = last_copy && raw.iter().any(|&(w, o)| w == v && o);
            parts.push(if over { Part::over(v) } else { Part::plain(v) });
        }
        Overpartition::new(parts).unwrap()
    })
}

proptest! {
    #[test]
    fn phi_round_trips_on_a(pi in overpartition()) {
        let in_a = classify(&pi, Side::A).label == AbcLabel::A;
        match phi(&pi) {
            Ok(t) => {
                prop_assert!(in_a);
                prop_assert_eq!(t.weight_delta, -1);
                prop_assert_eq!(t.output.weight() + 1, pi.weight());
                prop_assert_eq!(classify(&t.output, Side::B).label, AbcLabel::B);
                // every part but the smallest is carried over unchanged
                let keep = pi.len() - 1;
                prop_assert_eq!(&t.output.parts()[..keep.min(t.output.len())], &pi.parts()[..keep.min(t.output.len())]);
                prop_assert_eq!(phi_inverse(&t.output).unwrap().output, pi);
            }
            Err(_) => prop_assert!(!in_a),
        }
    }

    #[test]
    fn phi_inverse_round_trips_on_b(lambda in overpartition()) {
        let in_b = classify(&lambda, Side::B).label == AbcLabel::B;
        match phi_inverse(&lambda) {
            Ok(t) => {
                prop_assert!(in_b);
                prop_assert_eq!(t.weight_delta, 1);
                prop_assert_eq!(classify(&t.output, Side::A).label, AbcLabel::A);
                prop_assert_eq!(phi(&t.output).unwrap().output, lambda);
            }
            Err(_) => prop_assert!(!in_b),
        }
    }

    #[test]
    fn staircase_insert_remove(mu in overpartition(), j in 1u32..=4) {
        let floor = 2 * j + 1;
        let t = lemma41_insert(&mu, j);
        prop_assert_eq!(t.weight_delta, i64::from(j * j));
        prop_assert!(overline_mex(&t.output, MexQuery::ODD) >= floor);
        prop_assert_eq!(lemma41_remove(&t.output, j).unwrap().output, mu);
    }

    #[test]
    fn staircase_remove_insert(lambda in overpartition(), j in 1u32..=3) {
        let floor = 2 * j + 1;
        let eligible = overline_mex(&lambda, MexQuery::ODD) >= floor;
        match lemma41_remove(&lambda, j) {
            Ok(t) => {
                prop_assert!(eligible);
                prop_assert_eq!(lemma41_insert(&t.output, j).output, lambda);
            }
            Err(_) => prop_assert!(!eligible),
        }
    }
}

#[test]
fn families_partition_each_weight() {
    let e = Enumerator::default();
    for n in 1..=16 {
        let all = e.overpartitions(n).unwrap();
        let a = all.iter().filter(|p| classify(p, Side::A).label == AbcLabel::A).count();
        let b = all.iter().filter(|p| classify(p, Side::B).label == AbcLabel::B).count();
        let c = all.iter().filter(|p| classify(p, Side::B).label == AbcLabel::C).count();
        assert_eq!(2 * a, all.len(), "n={n}");
        assert_eq!(b + c, all.len(), "n={n}");
    }
}
