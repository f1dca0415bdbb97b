use proptest::prelude::*;
use shuffle_lr::bk::{bk, symmetry_map};
use shuffle_lr::crystal::{is_yamanouchi, try_apply_e, try_apply_f};
use shuffle_lr::enumerate::ssyt_bounded;
use shuffle_lr::lr::{expand_product, Method};
use shuffle_lr::peelable::{enumerate_peelable, psi, psi_inverse};
use shuffle_lr::{Partition, ShuffleDiagram, SkewShape, Tableau};

fn partition(rows: usize, cols: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=cols, 0..=rows).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn skew(rows: usize, cols: usize) -> impl Strategy<Value = SkewShape> {
    (partition(rows, cols), partition(rows, cols)).prop_map(|(o, i)| {
        let inner: Vec<usize> = i.parts().iter().zip(o.parts()).map(|(&a, &b)| a.min(b)).collect();
        SkewShape::new(o, Partition::new(inner).unwrap()).unwrap()
    })
}

fn small_pair() -> impl Strategy<Value = (SkewShape, SkewShape)> {
    (skew(3, 3), skew(3, 3)).prop_filter("at most 8 cells", |(r, b)| r.size() + b.size() <= 8)
}

/// One SSYT of a random straight shape, chosen by index.
fn ssyt() -> impl Strategy<Value = Tableau> {
    (partition(3, 4), 2u32..=4, any::<prop::sample::Index>()).prop_filter_map("no fillings", |(p, max, idx)| {
        let all: Vec<Tableau> = ssyt_bounded(&p, max).collect();
        (!all.is_empty()).then(|| all[idx.index(all.len())].clone())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn routes_agree((red, blue) in small_pair()) {
        let p = expand_product(&red, &blue, Method::Peelable);
        prop_assert_eq!(&p, &expand_product(&red, &blue, Method::Yamanouchi));
        prop_assert_eq!(&p, &expand_product(&red, &blue, Method::Classical));
    }

    #[test]
    fn product_is_commutative((red, blue) in small_pair()) {
        prop_assert_eq!(
            expand_product(&red, &blue, Method::Peelable),
            expand_product(&blue, &red, Method::Peelable)
        );
    }

    #[test]
    fn tableau_json_round_trip(t in ssyt()) {
        prop_assert_eq!(Tableau::from_json(&t.to_json()).unwrap(), t);
    }

    #[test]
    fn bender_knuth_is_an_involution(t in ssyt(), i in 1u32..4) {
        let b = bk(&t, i);
        prop_assert!(b.is_valid());
        prop_assert_eq!(b.content().get(i), t.content().get(i + 1));
        prop_assert_eq!(bk(&b, i), t);
    }

    #[test]
    fn diagram_json_round_trip((red, blue) in small_pair()) {
        let d = ShuffleDiagram::new(red, blue);
        prop_assert_eq!(ShuffleDiagram::from_json(&d.to_json()).unwrap(), d.clone());
        prop_assert_eq!(d.swapped().swapped(), d);
    }

    #[test]
    fn psi_round_trip((red, blue) in small_pair(), idx in any::<prop::sample::Index>()) {
        let d = ShuffleDiagram::new(red, blue);
        let all: Vec<Tableau> = d.kappa_space().iter().flat_map(|k| enumerate_peelable(&d, k)).collect();
        prop_assume!(!all.is_empty());
        let t = &all[idx.index(all.len())];
        let s = psi(t, &d).unwrap();
        prop_assert!(is_yamanouchi(&s));
        prop_assert_eq!(&psi_inverse(&s, &d).unwrap(), t);
        let back = symmetry_map(&symmetry_map(t, &d).unwrap(), &d.swapped()).unwrap();
        prop_assert_eq!(&back, t);
    }

    #[test]
    fn crystal_operators_undo_each_other((red, blue) in small_pair(), idx in any::<prop::sample::Index>(), i in 1u32..3) {
        let d = ShuffleDiagram::new(red, blue);
        let all: Vec<Tableau> = shuffle_lr::shuffle::enumerate_shuffle_tableaux(&d, 3, None).collect();
        prop_assume!(!all.is_empty());
        let t = &all[idx.index(all.len())];
        if let Some(e) = try_apply_e(t, i).unwrap() {
            prop_assert!(e.is_valid());
            prop_assert_eq!(try_apply_f(&e, i).unwrap(), Some(t.clone()));
        }
        if let Some(f) = try_apply_f(t, i).unwrap() {
            prop_assert_eq!(try_apply_e(&f, i).unwrap(), Some(t.clone()));
        }
    }
}
