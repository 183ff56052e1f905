mod common;

use common::*;
use proptest::prelude::*;
use rand::Rng;
use thompson_knots::word::{
    abelianization, generator_diagram, in_rectangular, is_positive, normal_form, word_to_diagram, AbelianImage,
    Symbol,
};
use thompson_knots::{Arity, GeneratorWord, Tree, TreeDiagram};

fn arb_word(symbol: Symbol, max_len: usize) -> impl Strategy<Value = GeneratorWord> {
    (any::<u64>()).prop_map(move |seed| random_word(&mut rng(seed), symbol, 6, max_len))
}

#[test]
fn parse_examples() {
    assert_eq!(Tree::parse(".", Arity::BINARY).unwrap().leaf_count(), 1);
    let t = Tree::parse("((..).)", Arity::BINARY).unwrap();
    assert_eq!(t.leaf_count(), 3);
    assert_eq!(t.to_string(), "((..).)");
    assert!(Tree::parse("(..)", Arity::TERNARY).is_err());
    assert!(Tree::parse("((..)", Arity::BINARY).is_err());
}

#[test]
fn branch_word_examples() {
    let d = f("x0");
    assert_eq!(d.top().branch_words(), vec![vec![0, 0], vec![0, 1], vec![1]]);
    assert_eq!(d.bottom().branch_words(), vec![vec![0], vec![1, 0], vec![1, 1]]);
    assert_eq!(Tree::Leaf.branch_words(), vec![Vec::<u8>::new()]);
}

#[test]
fn multiply_examples() {
    let (x0, x1) = (f("x0"), f("x1"));
    assert_eq!(x0.multiply(&x1).unwrap().to_string(), "((.(..)).)|(.(.(..)))");
    assert!(x0.multiply(&x0.invert()).unwrap().is_identity());
    assert!(x0.multiply(&f3("y0")).is_err());
    assert_eq!(x0.invert().top(), x0.bottom());
}

#[test]
fn expansion_examples() {
    let id = TreeDiagram::identity(Arity::BINARY);
    assert_eq!(id.expand_at_leaf(0).unwrap().to_string(), "(..)|(..)");
    let e = f("x0").expand_at_leaf(1).unwrap();
    assert_eq!(e.leaf_count(), 4);
    assert_eq!(e.reduce(), f("x0"));
    let d = f("x0 x1");
    assert_eq!(d.expand_at_leaf(2).unwrap().reduce(), d);
    assert!(d.expand_at_leaf(4).is_err());
}

#[test]
fn generator_shapes() {
    assert_eq!(generator_diagram(Arity::BINARY, 0).to_string(), "((..).)|(.(..))");
    assert_eq!(generator_diagram(Arity::BINARY, 1).leaf_count(), 4);
    assert_eq!(generator_diagram(Arity::TERNARY, 0).leaf_count(), 5);
    assert_eq!(generator_diagram(Arity::QUATERNARY, 3).leaf_count(), 10);
    for k in [Arity::BINARY, Arity::TERNARY, Arity::QUATERNARY] {
        for i in 0..10 {
            assert!(generator_diagram(k, i).is_reduced());
        }
    }
}

#[test]
fn group_axioms_on_short_words() {
    let letters = ["x0", "x0^-1", "x1", "x1^-1"];
    let mut words = vec![String::new()];
    for _ in 0..4 {
        let mut next = Vec::new();
        for w in &words {
            for l in letters {
                next.push(format!("{w} {l}"));
            }
        }
        for w in &next {
            let d = f(w);
            let id = TreeDiagram::identity(Arity::BINARY);
            assert_eq!(id.multiply(&d).unwrap(), d);
            assert_eq!(d.multiply(&id).unwrap(), d);
            assert!(d.multiply(&d.invert()).unwrap().is_identity(), "{w}");
            assert_eq!(d.invert().invert(), d);
        }
        words = next;
    }
}

#[test]
fn reduction_is_confluent() {
    let mut r = rng(11);
    for _ in 0..200 {
        let mut d = random_f(&mut r, 10);
        for _ in 0..r.gen_range(1..5) {
            let i = r.gen_range(0..d.leaf_count());
            d = d.expand_at_leaf(i).unwrap();
        }
        let target = d.reduce();
        let mut e = d.clone();
        while !e.opposing_carets().is_empty() {
            let options = e.opposing_carets();
            let i = options[r.gen_range(0..options.len())];
            e = e.cancel_caret(i).unwrap();
        }
        assert_eq!(e, target);
        assert_eq!(target.reduce(), target);
    }
}

#[test]
fn relations_hold() {
    for k in 0..8 {
        for n in k + 1..=8 {
            assert_eq!(f(&format!("x{n} x{k}")), f(&format!("x{k} x{}", n + 1)));
            assert_eq!(f3(&format!("y{n} y{k}")), f3(&format!("y{k} y{}", n + 2)));
            assert_eq!(f4(&format!("y{n} y{k}")), f4(&format!("y{k} y{}", n + 3)));
        }
    }
}

#[test]
fn normal_form_examples() {
    let nf = normal_form(&f("x2 x0")).unwrap();
    assert_eq!(nf.to_string(), "x0 x3");
    assert!(normal_form(&f("x0 x0^-1")).unwrap().is_identity());
    let g = f("x0 x2^2 x5 x6 x7^-1 x6^-1 x4^-1");
    let nf = normal_form(&g).unwrap();
    assert!(nf.is_valid());
    assert_eq!(word_to_diagram(&nf.to_word(), Arity::BINARY).unwrap(), g);
    assert!(normal_form(&f3("y0")).is_err());
}

#[test]
fn positivity_examples() {
    assert!(is_positive(&f("x0 x1")));
    assert!(!is_positive(&f("x0 x1^-1")));
    assert!(is_positive(&f("x2 x0")));
    assert!(is_positive(&f3("y1 y0^2")));
    assert!(!is_positive(&f3("y1^-1")));
}

#[test]
fn abelianization_examples() {
    assert_eq!(abelianization(&f("1")).unwrap(), AbelianImage(0, 0));
    assert_eq!(abelianization(&f("x0")).unwrap(), AbelianImage(1, -1));
    assert_eq!(abelianization(&f("x1")).unwrap(), AbelianImage(0, -1));
    assert!(!in_rectangular(&f("x0"), 1, 2).unwrap());
    assert!(in_rectangular(&f("1"), 5, 7).unwrap());
    assert!(in_rectangular(&f("x0 x1"), 1, 2).unwrap());
}

#[test]
fn words_print_and_parse() {
    let w: GeneratorWord = "x0 x0 x2^-1 x2".parse().unwrap();
    assert_eq!(w.to_string(), "x0^2");
    assert_eq!("1".parse::<GeneratorWord>().unwrap().to_string(), "1");
    assert_eq!("".parse::<GeneratorWord>().unwrap().to_string(), "1");
    assert!("x0 z1".parse::<GeneratorWord>().is_err());
    assert!("x^2".parse::<GeneratorWord>().is_err());
    assert!(word_to_diagram(&"y0".parse().unwrap(), Arity::BINARY).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn multiplication_is_associative(a in arb_word(Symbol::X, 8), b in arb_word(Symbol::X, 8), c in arb_word(Symbol::X, 8)) {
        let [a, b, c] = [a, b, c].map(|w| word_to_diagram(&w, Arity::BINARY).unwrap());
        let left = a.multiply(&b).unwrap().multiply(&c).unwrap();
        let right = a.multiply(&b.multiply(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn ternary_multiplication_is_associative(a in arb_word(Symbol::Y, 6), b in arb_word(Symbol::Y, 6), c in arb_word(Symbol::Y, 6)) {
        let [a, b, c] = [a, b, c].map(|w| word_to_diagram(&w, Arity::TERNARY).unwrap());
        let left = a.multiply(&b).unwrap().multiply(&c).unwrap();
        let right = a.multiply(&b.multiply(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn normal_form_round_trip(w in arb_word(Symbol::X, 20)) {
        let d = word_to_diagram(&w, Arity::BINARY).unwrap();
        let nf = normal_form(&d).unwrap();
        prop_assert!(nf.is_valid());
        prop_assert_eq!(word_to_diagram(&nf.to_word(), Arity::BINARY).unwrap(), d);
        prop_assert_eq!(nf.is_positive(), is_positive(&word_to_diagram(&w, Arity::BINARY).unwrap()));
    }

    #[test]
    fn abelianization_is_additive(a in arb_word(Symbol::X, 12), b in arb_word(Symbol::X, 12)) {
        let [a, b] = [a, b].map(|w| word_to_diagram(&w, Arity::BINARY).unwrap());
        let sum = abelianization(&a).unwrap() + abelianization(&b).unwrap();
        prop_assert_eq!(abelianization(&a.multiply(&b).unwrap()).unwrap(), sum);
    }

    #[test]
    fn leaf_counts_match(w in arb_word(Symbol::Y, 12), i in 0usize..50) {
        let d = word_to_diagram(&w, Arity::QUATERNARY).unwrap();
        prop_assert_eq!(d.top().leaf_count(), d.bottom().leaf_count());
        let e = d.expand_at_leaf(i % d.leaf_count()).unwrap();
        prop_assert_eq!(e.top().leaf_count(), e.bottom().leaf_count());
        prop_assert_eq!(e.reduce(), d);
    }
}
