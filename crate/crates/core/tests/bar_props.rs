//! Bar-complex properties beyond the acceptance table: standard-monomial
//! counts against an independent linear-algebra oracle, multiplication
//! closure, low-degree Betti shapes, and the probe locating the first
//! off-diagonal value.

use koszul_pairs::bar::{BarLimits, BettiEngine};
use koszul_pairs::field::{Field, PrimeField};
use koszul_pairs::gb::{buchberger_reduced, GbLimits, ReducedGB};
use koszul_pairs::graph::Graph;
use koszul_pairs::pair::{pair_ideal_generators, PairRing};
use koszul_pairs::poly::Monomial;
use koszul_pairs::sparse::SparseMatrix;

fn double_path_engine(p: u64, cap: usize) -> (PairRing<PrimeField>, ReducedGB<PrimeField>, BettiEngine) {
    let p3 = Graph::path(3);
    let pr = PairRing::new(3, 3, PrimeField::new(p).unwrap());
    let gens = pair_ideal_generators(&p3, &p3, &pr).unwrap();
    let gb = buchberger_reduced(&pr.ring, &gens, &pr.lex_order(), &GbLimits::default()).unwrap();
    let engine = BettiEngine::new(pr.ring.clone(), &gb, BarLimits { dim_cap: cap }).unwrap();
    (pr, gb, engine)
}

/// Counts degree-2 standard monomials by linear algebra instead of leading
/// terms: 45 monomials minus the rank of the generators' coefficient matrix.
#[test]
fn degree_two_dimension_against_rank_oracle() {
    let (pr, _, mut engine) = double_path_engine(32003, 200_000);
    let fp = *pr.ring.field();
    let p3 = Graph::path(3);
    let gens = pair_ideal_generators(&p3, &p3, &pr).unwrap();

    let mut all_deg2: Vec<Monomial> = Vec::new();
    for a in 0..9 {
        for b in a..9 {
            all_deg2.push(Monomial::var(9, a).mul(&Monomial::var(9, b)));
        }
    }
    assert_eq!(all_deg2.len(), 45);
    let index = |m: &Monomial| all_deg2.iter().position(|x| x == m).unwrap();
    let mut coeffs = SparseMatrix::new(45, gens.len());
    for (col, g) in gens.iter().enumerate() {
        for (m, c) in g.terms() {
            coeffs.add_entry(index(m), col, c.clone(), &fp);
        }
    }
    let rank = coeffs.rank(&fp);
    assert_eq!(rank, 4);
    assert_eq!(engine.quotient_dim(2), 45 - rank); // 41
}

#[test]
fn degree_one_products_close_into_the_degree_two_basis() {
    let (_, _, mut engine) = double_path_engine(32003, 200_000);
    let deg1 = engine.standard_monomials(1);
    let deg2 = engine.standard_monomials(2);
    assert_eq!(deg1.len(), 9);
    let mut products = 0;
    for u in &deg1 {
        for v in &deg1 {
            let w = engine
                .multiply_standard(u, v)
                .expect("no zero products in a pure-binomial quotient");
            assert!(deg2.contains(&w));
            products += 1;
        }
    }
    assert_eq!(products, 81);
}

#[test]
fn first_row_of_the_resolution() {
    let (_, _, mut engine) = double_path_engine(32003, 200_000);
    assert_eq!(engine.betti(0, 0).unwrap(), 1);
    assert_eq!(engine.betti(0, 1).unwrap(), 0);
    assert_eq!(engine.betti(1, 1).unwrap(), 9);
    for j in 2..=4 {
        assert_eq!(engine.betti(1, j).unwrap(), 0, "betti(1,{j})");
    }
    // quadratic relations: C(9,2) + 4 minimal generators
    assert_eq!(engine.betti(2, 2).unwrap(), 36 + 4);
    assert_eq!(engine.betti(2, 3).unwrap(), 0);
}

#[test]
fn probe_finds_the_off_diagonal_witness() {
    let (_, _, mut engine) = double_path_engine(32003, 200_000);
    assert_eq!(engine.koszul_probe(3, 5).unwrap(), Some((3, 5)));
}

#[test]
fn betti_table_renders_like_a_resolution() {
    let (_, _, mut engine) = double_path_engine(32003, 200_000);
    let table = engine.betti_table(2, 2).unwrap();
    assert_eq!(table.get(1, 1), Some(9));
    let text = table.render_text();
    assert!(text.contains("0:"), "{text}");
    assert!(text.contains("40"), "{text}");
    let json = table.to_json();
    assert_eq!(json["2,2"], 40);
    assert_eq!(json["1,1"], 9);
}
