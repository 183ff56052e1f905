mod common;

use common::*;
use rand::Rng;
use thompson_knots::invariants::{bracket_skein, bracket_states, jones_polynomial, writhe, STATE_BUDGET};
use thompson_knots::{build_link, Arity, Error, LaurentPoly, LinkDiagram};

fn pipeline_diagrams(seed: u64, count: usize, max_crossings: usize) -> Vec<LinkDiagram> {
    let mut r = rng(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let d = if r.gen_bool(0.5) { random_f(&mut r, 8) } else { random_fk(&mut r, Arity::TERNARY, 5) };
        let l = build_link(&d).unwrap();
        if l.crossing_count() <= max_crossings {
            out.push(l);
        }
    }
    out
}

#[test]
fn bracket_algorithms_agree() {
    for l in pipeline_diagrams(41, 200, 14) {
        assert_eq!(bracket_states(&l).unwrap(), bracket_skein(&l));
    }
}

#[test]
fn bracket_matches_the_pd_oracle() {
    for l in pipeline_diagrams(42, 40, 10) {
        let pd = thompson_knots::canonical_pd(&l);
        let oracle = pd_bracket(&pd.crossings);
        let want = LaurentPoly::from_terms(oracle.into_iter().map(|(e, c)| (c, e)));
        let want = if pd.loops > 1 { &LaurentPoly::delta().pow(pd.loops as u32 - 1) * &want } else { want };
        assert_eq!(bracket_states(&l).unwrap(), want, "{pd}");
    }
}

#[test]
fn distant_unknot_factor() {
    for l in pipeline_diagrams(43, 20, 12) {
        let more = l.with_free_loops(1);
        let expect = &LaurentPoly::delta() * &bracket_states(&l).unwrap();
        assert_eq!(bracket_states(&more).unwrap(), expect);
        assert_eq!(bracket_skein(&more), expect);
    }
}

#[test]
fn mirror_inverts_the_variable() {
    for l in pipeline_diagrams(44, 30, 12) {
        let o = l.orient_by_tracing();
        let v = jones_polynomial(&o).unwrap();
        assert_eq!(jones_polynomial(&o.mirror()).unwrap(), v.scale_exponents(-1));
        assert_eq!(writhe(&o.mirror()).unwrap(), -writhe(&o).unwrap());
    }
}

#[test]
fn kinks_and_unknot() {
    assert_eq!(bracket_states(&LinkDiagram::unlink(1)).unwrap(), LaurentPoly::one());
    let pos = LinkDiagram::from_pd(&[[1, 1, 2, 2]], 0).unwrap();
    let neg = LinkDiagram::from_pd(&[[1, 2, 2, 1]], 0).unwrap();
    assert_eq!(bracket_states(&pos).unwrap(), LaurentPoly::monomial(-1, 3));
    assert_eq!(bracket_states(&neg).unwrap(), LaurentPoly::monomial(-1, -3));
    assert_eq!(writhe(&pos.orient_by_tracing()).unwrap(), 1);
    assert_eq!(jones_polynomial(&pos), Err(Error::NotOriented));
}

#[test]
fn jones_is_independent_of_the_representative() {
    let mut r = rng(45);
    for _ in 0..20 {
        let d = random_f(&mut r, 5);
        if d.leaf_count() > 5 {
            continue;
        }
        let i = r.gen_range(0..d.leaf_count());
        let big = d.expand_at_leaf(i).unwrap();
        let t = thompson_knots::morphisms::TreeSubstitution::iota();
        let big = thompson_knots::TreeDiagram::new(t.apply_tree(big.top()), t.apply_tree(big.bottom()), Arity::TERNARY)
            .unwrap();
        let a = thompson_knots::link::build_link_explicit(&big).unwrap().orient_by_tracing();
        let b = build_link(&d).unwrap().orient_by_tracing();
        if a.components() == 1 {
            assert_eq!(jones_polynomial(&a).unwrap(), jones_polynomial(&b).unwrap(), "{d}");
        }
    }
}

#[test]
fn budget_is_enforced() {
    let quads: Vec<[u32; 4]> =
        (0..STATE_BUDGET as u32 + 1).map(|i| [2 * i + 1, 2 * i + 1, 2 * i + 2, 2 * i + 2]).collect();
    let l = LinkDiagram::from_pd(&quads, 0).unwrap();
    assert!(matches!(bracket_states(&l), Err(Error::CrossingBudget { .. })));
    let n = quads.len() as u32;
    let split_kinks = &LaurentPoly::monomial(-1, 3).pow(n) * &LaurentPoly::delta().pow(n - 1);
    assert_eq!(bracket_skein(&l), split_kinks);
}
