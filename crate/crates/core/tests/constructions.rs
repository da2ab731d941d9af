mod common;

use rand::RngExt;
use storient::constructions::{connected_classes, find_w5_in_product};
use storient::{
    alternation_graph, generate, is_isomorphic, odd_girth, odd_girth_blowup, product, Family,
    Graph, ProductKind, Solver, Word,
};

use common::{random_graph, random_orientable, rng};

fn orientable(g: &Graph) -> bool {
    Solver::default()
        .find_semi_transitive_orientation(g)
        .unwrap()
        .is_some()
}

#[test]
fn product_edge_counts() {
    let mut r = rng(21);
    for _ in 0..200 {
        let (n, m) = (r.random_range(1..=5), r.random_range(1..=5));
        let (p, q) = (r.random_range(0.0..1.0), r.random_range(0.0..1.0));
        let g = random_graph(&mut r, n, p);
        let h = random_graph(&mut r, m, q);
        let (eg, eh) = (g.edge_count(), h.edge_count());

        let cart = product(&g, &h, ProductKind::Cartesian).unwrap();
        let tens = product(&g, &h, ProductKind::Tensor).unwrap();
        let lex = product(&g, &h, ProductKind::Lexicographic).unwrap();
        let strong = product(&g, &h, ProductKind::Strong).unwrap();
        assert_eq!(tens.edge_count(), 2 * eg * eh);
        assert_eq!(cart.edge_count(), n * eh + m * eg);
        assert_eq!(lex.edge_count(), m * m * eg + n * eh);
        for v in 0..n * m {
            assert_eq!(cart.neighbors(v) & tens.neighbors(v), 0);
            assert_eq!(cart.neighbors(v) | tens.neighbors(v), strong.neighbors(v));
        }
    }
}

#[test]
fn small_products() {
    let k2 = generate(Family::Complete(2)).unwrap();
    let c4 = generate(Family::Cycle(4)).unwrap();
    let k4 = generate(Family::Complete(4)).unwrap();
    assert!(is_isomorphic(&product(&k2, &k2, ProductKind::Cartesian).unwrap(), &c4).unwrap());
    assert_eq!(product(&k2, &k2, ProductKind::Strong).unwrap(), k4);
    let big = Graph::new(8).unwrap();
    assert!(product(&big, &big, ProductKind::Tensor).is_err());
}

#[test]
fn cartesian_products_stay_orientable() {
    let mut r = rng(22);
    for _ in 0..50 {
        let (g, _) = random_orientable(&mut r, 2, 6);
        let cap = (12 / g.order()).max(2);
        let (h, _) = random_orientable(&mut r, 2, cap);
        let p = product(&g, &h, ProductKind::Cartesian).unwrap();
        assert!(p.order() <= 12);
        assert!(orientable(&p), "{g:?} x {h:?}");
    }
}

#[test]
fn w5_product_hits() {
    let wheel = generate(Family::Wheel(5)).unwrap();
    let solver = Solver::default();
    for kind in [
        ProductKind::Tensor,
        ProductKind::Lexicographic,
        ProductKind::Strong,
    ] {
        let hit = find_w5_in_product(kind, 5, &solver)
            .unwrap()
            .expect("a hit");
        assert!(hit.g.order() <= 5 && hit.h.order() <= 5);
        assert!(orientable(&hit.g) && orientable(&hit.h));
        assert_eq!(hit.product, product(&hit.g, &hit.h, kind).unwrap());
        assert!(hit.embedding.is_induced(&hit.product, &wheel));
        assert!(!orientable(&hit.product));
    }
    assert!(find_w5_in_product(ProductKind::Cartesian, 4, &solver)
        .unwrap()
        .is_none());
}

#[test]
fn connected_class_counts() {
    // connected graphs up to isomorphism on 1..=5 vertices: 1, 1, 2, 6, 21
    assert_eq!(connected_classes(5).unwrap().len(), 31);
    assert_eq!(connected_classes(3).unwrap().len(), 4);
}

#[test]
fn blowups_of_long_cycles_lose_triangles() {
    for n in [11, 13] {
        let h = generate(Family::Cycle(n)).unwrap();
        let b = odd_girth_blowup(&h);
        assert_eq!((b.order(), b.edge_count()), (n, 2 * n));
        assert!(odd_girth(&b).unwrap() > 3, "C{n}");
    }
    let k3 = generate(Family::Complete(3)).unwrap();
    assert_eq!(odd_girth(&k3), Some(3));
    assert_eq!(odd_girth(&generate(Family::Cycle(8)).unwrap()), None);
}

fn random_word(r: &mut rand::rngs::StdRng) -> Word {
    let k = r.random_range(1..=7u8);
    let len = r.random_range(1..=20);
    let letters = (0..len)
        .map(|_| char::from(b'a' + r.random_range(0..k)))
        .collect();
    Word::new(letters).unwrap()
}

#[test]
fn alternation_graphs_are_orientable() {
    let mut r = rng(23);
    for _ in 0..500 {
        let w = random_word(&mut r);
        let g = alternation_graph(&w);
        assert_eq!(g.order(), w.alphabet().len());
        assert!(orientable(&g), "{w}");
    }
}

#[test]
fn alternation_examples() {
    let g = alternation_graph(&"aabb".parse().unwrap());
    assert_eq!((g.order(), g.edge_count()), (2, 0));
    let g = alternation_graph(&"abcabc".parse().unwrap());
    assert!(g.is_complete());
    assert!("".parse::<Word>().is_err());
}
