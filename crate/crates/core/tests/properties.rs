//! Randomised checks of structural invariants over the corpus.

use graycat::computads::{free_sesquicategory, Path1};
use graycat::constructions::is_gray_groupoid;
use graycat::corpus::{computad_corpus, gray_corpus, groupoid_corpus, morphism_corpus};
use graycat::model::{classify, pi_star, two_out_of_three, Morphism};
use graycat::mutation::for_each_mutation;
use graycat::nerve::nerve;
use graycat::simplicial::{boundary, delta, horn_set, validate_sset};
use graycat::text::{parse_computad, parse_gray, parse_sset, print_computad, print_gray, print_sset};
use graycat::{validate_gray_category, validate_gray_functor, GrayFunctor};
use proptest::prelude::*;

use std::sync::OnceLock;

use graycat::corpus::CorpusMorphism;

fn morphisms() -> &'static [CorpusMorphism] {
    static CELL: OnceLock<Vec<CorpusMorphism>> = OnceLock::new();
    CELL.get_or_init(morphism_corpus)
}

fn corpus_len() -> usize {
    gray_corpus().len()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn any_mutation_is_caught(k in 0..corpus_len(), pick in any::<prop::sample::Index>()) {
        let (_, g) = &gray_corpus()[k];
        let mut all = Vec::new();
        for_each_mutation(g, |m, _| all.push(m.clone()));
        prop_assume!(!all.is_empty());
        let chosen = &all[pick.index(all.len())];
        let mut caught = None;
        for_each_mutation(g, |m, h| {
            if m == chosen {
                caught = Some(validate_gray_category(h).map_or(true, |r| !r.is_valid()));
            }
        });
        prop_assert_eq!(caught, Some(true), "{}", chosen);
    }

    #[test]
    fn gray_text_round_trips(k in 0..corpus_len()) {
        let (_, g) = &gray_corpus()[k];
        let text = print_gray(g);
        let back = parse_gray(&text).unwrap();
        prop_assert_eq!(&back, g);
        prop_assert_eq!(print_gray(&back), text);
    }

    #[test]
    fn sset_text_round_trips(n in 0..4usize, r in 0..5usize, which in 0..3u8) {
        let x = match which {
            0 => delta(n).unwrap(),
            1 => boundary(n + 1).unwrap(),
            _ => horn_set(n + 1, r % (n + 2)).unwrap(),
        };
        prop_assert!(validate_sset(&x).unwrap().is_valid());
        let text = print_sset(&x);
        prop_assert_eq!(parse_sset(&text).unwrap(), x);
    }

    #[test]
    fn terminal_functor_is_valid_and_pi_star_partitions(k in 0..corpus_len()) {
        let (_, g) = &gray_corpus()[k];
        let t = graycat::constructions::terminal();
        prop_assert!(validate_gray_functor(&GrayFunctor::to_terminal(g), g, &t).unwrap().is_valid());
        let p = pi_star(g, &g.index()).unwrap();
        prop_assert_eq!(p.category.objects.len(), g.objects.len());
        for f in 0..g.cells1.len() {
            let a = p.class_of[f];
            prop_assert_eq!(p.class_of[p.rep[a]], a);
            prop_assert!(p.rep[a] <= f);
        }
    }

    #[test]
    fn every_object_is_fibrant(k in 0..corpus_len()) {
        let (_, g) = &gray_corpus()[k];
        let t = graycat::constructions::terminal();
        let f = GrayFunctor::to_terminal(g);
        let v = classify(Morphism { f: &f, dom: g, cod: &t });
        prop_assert!(v.fibration.holds, "{:?}", v.fibration.detail);
    }

    #[test]
    fn trivial_fibrations_are_exactly_fibrant_weak_equivalences(k in 0..morphisms().len()) {
        let m = &morphisms()[k];
        let v = classify(m.as_morphism());
        prop_assert!(v.consistent(), "{}", m.name);
        prop_assert_eq!(v.fibration.holds, v.adjoint_biequiv_lifting.holds, "{}", m.name);
    }

    #[test]
    fn two_out_of_three_on_composable_pairs(i in 0..morphisms().len(), j in 0..morphisms().len()) {
        let ms = morphisms();
        let (f, g) = (&ms[i], &ms[j]);
        prop_assume!(f.cod == g.dom);
        prop_assert!(two_out_of_three(f.as_morphism(), g.as_morphism()).is_ok());
    }

    #[test]
    fn groupoid_nerves_validate(k in 0..groupoid_corpus().len()) {
        let (name, g) = &groupoid_corpus()[k];
        prop_assert!(is_gray_groupoid(g).0);
        let n = nerve(g).unwrap();
        let r = validate_sset(&n.sset).unwrap();
        prop_assert!(r.is_valid(), "{}: {}", name, r);
    }

    #[test]
    fn factorization_round_trips(k in 0..computad_corpus().len(), pick in any::<prop::sample::Index>()) {
        let (_, g) = &computad_corpus()[k];
        let h = free_sesquicategory(g);
        let cells = h.path2s(3, 3);
        let p = &cells[pick.index(cells.len())];
        let parts = h.decompose(p);
        prop_assert_eq!(&h.recompose(p.source.clone(), &parts).unwrap(), p);
        let pi: usize = parts.iter().map(|b| b.left.len() + b.right.len()).sum();
        prop_assert_eq!(h.pi_measure(p), pi);
        // whiskering by a path adds its length once per basic cell
        let right = Path1::empty(p.source.src);
        for e in (0..g.edges.len()).filter(|&e| g.edges[e].src == p.source.tgt) {
            let left = h.edge_path(e);
            let w = h.whisker(&left, p, &right).unwrap();
            prop_assert_eq!(h.pi_measure(&w), h.pi_measure(p) + p.len());
        }
        let text = print_computad(g);
        prop_assert_eq!(&parse_computad(&text).unwrap(), g);
    }
}
