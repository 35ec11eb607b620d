mod common;

use num_bigint::BigInt;

use gkm::arrangements::{fixture, gen_klm, FixtureId, KlmSpec};
use gkm::cohomology_engine::{
    chi, cohomology_basis, kernel_forgetful_check, minimal_empty_families, polynomial_vars, presentation_ring, thom_class_forgetful,
    thom_class_full, verify_iso, CohomologyClass, PresentationRing, VerifyOptions,
};
use gkm::exact_algebra::{graded_piece_basis, IntPolynomial};
use gkm::gkm_graph::GkmGraph;
use gkm::hyperplane_geometry::Geometry;
use gkm::par::Exec;
use gkm::Error;

/// Graded ranks for degrees 0..=4, forgetful then full. Computed by the
/// evaluation oracle in `common` and by the presentation ring, then frozen.
const RANKS: [(&str, [usize; 5], [usize; 5]); 4] = [
    ("fig2_left", [1, 3, 6, 9, 12], [1, 4, 10, 19, 31]),
    ("fig7_pentagon", [1, 5, 10, 15, 20], [1, 6, 16, 31, 51]),
    ("fig8_line5", [1, 5, 5, 5, 5], [1, 6, 11, 16, 21]),
    ("klm212", [1, 5, 13, 21, 29], [1, 6, 19, 40, 69]),
];

fn graph(name: &str) -> GkmGraph {
    match name {
        "klm212" => gen_klm(KlmSpec::new(2, 1, 2).unwrap()).unwrap(),
        "klm111" => gen_klm(KlmSpec::new(1, 1, 1).unwrap()).unwrap(),
        other => gkm::arrangements::fixture_by_name(other).unwrap(),
    }
}

fn sequential() -> VerifyOptions {
    VerifyOptions { exec: Exec::Sequential, ..Default::default() }
}

#[test]
fn degree_zero_is_constants() {
    for f in FixtureId::FILES.into_iter().chain([FixtureId::LocalModel(2)]) {
        let g = fixture(f).unwrap();
        for forgetful in [true, false] {
            let piece = cohomology_basis(&g, 0, forgetful);
            assert_eq!(piece.rank(), 1, "{f}");
            assert!(piece.contains(&CohomologyClass::constant(&g, forgetful, 1)));
        }
    }
}

#[test]
fn solver_classes_satisfy_congruences() {
    for f in FixtureId::FILES {
        let g = fixture(f).unwrap();
        for forgetful in [true, false] {
            for k in 0..=3 {
                for c in cohomology_basis(&g, k, forgetful).classes() {
                    assert!(c.satisfies_congruences(&g), "{f} degree {k}");
                }
            }
        }
    }
}

#[test]
fn frozen_ranks_match_oracle() {
    for (name, forgetful_ranks, full_ranks) in RANKS {
        let g = graph(name);
        for k in 0..=4u32 {
            assert_eq!(common::solver_rank(&g, k, true), forgetful_ranks[k as usize], "{name} forgetful {k}");
            assert_eq!(common::solver_rank(&g, k, false), full_ranks[k as usize], "{name} full {k}");
            assert_eq!(common::image_rank(&g, k, true), forgetful_ranks[k as usize], "{name} forgetful image {k}");
        }
        for k in 0..=3u32 {
            assert_eq!(common::image_rank(&g, k, false), full_ranks[k as usize], "{name} full image {k}");
        }
    }
}

#[test]
fn verify_iso_reproduces_frozen_ranks() {
    for (name, forgetful_ranks, full_ranks) in RANKS {
        let g = graph(name);
        for (forgetful, ranks) in [(true, forgetful_ranks), (false, full_ranks)] {
            let report = verify_iso(&g, 4, forgetful, sequential()).unwrap();
            assert!(report.passed, "{name} forgetful={forgetful}");
            assert!(report.assumptions_hold);
            for (k, d) in &report.degrees {
                assert_eq!(d.solver_rank, ranks[*k as usize], "{name} {k}");
                assert!(d.rank_match && d.injective && d.relations_vanish && d.lattice_match, "{name} {k}");
            }
        }
    }
}

#[test]
fn klm111_forgetful_ranks_follow_hilbert_function() {
    // Free module over Z[t1, t2] with basis degrees (0, 1, 2).
    let g = graph("klm111");
    let report = verify_iso(&g, 4, true, sequential()).unwrap();
    assert!(report.passed);
    for (k, d) in &report.degrees {
        let k = *k as usize;
        let expected: usize = [0usize, 1, 2].iter().filter(|&&a| a <= k).map(|&a| k - a + 1).sum();
        assert_eq!(d.solver_rank, expected);
    }
}

#[test]
fn fig11_deficit_at_degree_two() {
    let g = fixture(FixtureId::Fig11Sphere).unwrap();
    // Oracle: two vertices joined by edges labelled t1 and t2 give classes
    // (f, f + t1 t2 h), rank 2k in degree k >= 1, while the hyperplane
    // classes (t1, t1) and (t2, t2) only generate the diagonal, rank k + 1.
    for k in 1..=4u32 {
        assert_eq!(common::solver_rank(&g, k, true), 2 * k as usize);
        assert_eq!(common::image_rank(&g, k, true), k as usize + 1);
    }
    let options = VerifyOptions { require_assumptions: false, ..sequential() };
    let report = verify_iso(&g, 4, true, options).unwrap();
    assert!(!report.assumptions_hold);
    assert!(!report.passed);
    assert_eq!(report.deficit_degrees(), vec![2, 3, 4]);
    let d2 = &report.degrees[&2];
    assert_eq!((d2.solver_rank, d2.image_rank), (4, 3));
    assert!(matches!(verify_iso(&g, 2, true, sequential()), Err(Error::AssumptionViolation(_))));
}

#[test]
fn fig11_full_ring_also_falls_short() {
    let g = fixture(FixtureId::Fig11Sphere).unwrap();
    let options = VerifyOptions { require_assumptions: false, ..sequential() };
    let report = verify_iso(&g, 2, false, options).unwrap();
    let d2 = &report.degrees[&2];
    assert_eq!((d2.solver_rank, d2.image_rank), (common::solver_rank(&g, 2, false), common::image_rank(&g, 2, false)));
    assert!(d2.solver_rank > d2.image_rank);
}

#[test]
fn kernel_of_forgetful_map_is_generated_by_chi() {
    for f in FixtureId::FILES {
        let report = kernel_forgetful_check(&fixture(f).unwrap(), 3, Exec::Sequential);
        assert!(report.passed, "{f}");
    }
    assert!(kernel_forgetful_check(&graph("klm212"), 3, Exec::Parallel).passed);
}

#[test]
fn chi_multiples_lie_in_chi_ideal() {
    let g = graph("fig2_left");
    let geometry = Geometry::build(&g).unwrap();
    let chi = chi(&g);
    for h in &geometry.hyperplanes {
        let t = thom_class_full(&g, &h.positive).unwrap();
        let product = chi.mul(&t);
        // Dividing by x at every vertex gives a genuine class again.
        let vs = polynomial_vars(g.rank(), false);
        let x = IntPolynomial::var(&vs, g.rank());
        let quotient: Vec<IntPolynomial> = product.values.iter().map(|p| p.div_exact(&x).unwrap()).collect();
        let q = CohomologyClass { degree: 1, forgetful: false, values: quotient };
        assert_eq!(q, t);
        assert!(product.satisfies_congruences(&g));
    }
}

#[test]
fn psi_is_well_defined() {
    for name in ["fig2_left", "fig7_pentagon", "fig8_line5", "klm212"] {
        let g = graph(name);
        let geometry = Geometry::build(&g).unwrap();
        let chi = chi(&g);
        for h in &geometry.hyperplanes {
            let a = thom_class_full(&g, &h.positive).unwrap();
            let b = thom_class_full(&g, &h.negative).unwrap();
            assert_eq!(a.add(&b), chi, "{name}");
        }
        for forgetful in [true, false] {
            let ring = presentation_ring(&g, forgetful).unwrap();
            for r in &ring.relations {
                assert!(ring.evaluate(r).is_zero(), "{name} {r}");
            }
        }
    }
}

#[test]
fn klm_forgetful_relations() {
    let g = gen_klm(KlmSpec::new(2, 2, 2).unwrap()).unwrap();
    let ring = presentation_ring(&g, true).unwrap();
    let mut families: Vec<String> = ring.empty_families.iter().map(|f| f.join("*")).collect();
    families.sort();
    let mut expected: Vec<String> = vec!["X1*X2".into(), "Y1*Y2".into(), "Z1*Z2".into()];
    for r in 1..=2 {
        for s in 1..=2 {
            for t in 1..=2 {
                expected.push(format!("X{r}*Y{s}*Z{t}"));
            }
        }
    }
    expected.sort();
    assert_eq!(families, expected);
}

#[test]
fn fig8_relations_are_pairwise_products() {
    let ring = presentation_ring(&fixture(FixtureId::Fig8Line5).unwrap(), true).unwrap();
    assert_eq!(ring.empty_families.len(), 10);
    assert!(ring.empty_families.iter().all(|f| f.len() == 2));
}

#[test]
fn fig2_left_full_ring_generators() {
    let ring = presentation_ring(&fixture(FixtureId::Fig2Left).unwrap(), false).unwrap();
    assert_eq!(ring.generators, vec!["X", "H_L1", "H_L2", "H_L3", "Hbar_L1", "Hbar_L2", "Hbar_L3"]);
    assert_eq!(ring.linear_relations.len(), 3);
    assert_eq!(ring.vars.len(), 4);
    let chi_image = ring.evaluate_monomial(&[1, 0, 0, 0]);
    assert_eq!(chi_image, chi(&fixture(FixtureId::Fig2Left).unwrap()));
}

#[test]
fn minimal_empty_families_are_minimal() {
    let sets = vec![vec![true, true, false], vec![false, true, true], vec![true, false, true]];
    assert_eq!(minimal_empty_families(&sets), vec![vec![0, 1, 2]]);
    let sets = vec![vec![true, false], vec![false, true], vec![false, true]];
    assert_eq!(minimal_empty_families(&sets), vec![vec![0, 1], vec![0, 2]]);
}

/// `F̃(Ψ(m)) = Ψ'(m)` for monomials in the positive halfspace classes.
fn forget_commutes(g: &GkmGraph, full: &PresentationRing, forgetful: &PresentationRing, e: &[u32]) -> bool {
    let mut full_e = vec![0];
    full_e.extend_from_slice(e);
    let up = full.evaluate_monomial(&full_e);
    let vs = polynomial_vars(g.rank(), true);
    let mut images: Vec<IntPolynomial> = (0..g.rank()).map(|i| IntPolynomial::var(&vs, i)).collect();
    images.push(IntPolynomial::zero(&vs));
    let forgotten: Vec<IntPolynomial> = up.values.iter().map(|p| p.substitute(&images, &vs)).collect();
    forgotten == forgetful.evaluate_monomial(e).values
}

#[test]
fn forgetting_commutes_with_psi() {
    for name in ["fig2_left", "fig7_pentagon", "klm212"] {
        let g = graph(name);
        let full = presentation_ring(&g, false).unwrap();
        let forgetful = presentation_ring(&g, true).unwrap();
        let m = forgetful.vars.len();
        for k in 0..=3 {
            for e in graded_piece_basis(m, k) {
                assert!(forget_commutes(&g, &full, &forgetful, &e), "{name} {e:?}");
            }
        }
    }
}

#[test]
fn mixed_degree_products_split_into_graded_classes() {
    let g = graph("fig7_pentagon");
    let geometry = Geometry::build(&g).unwrap();
    let t: Vec<CohomologyClass> = geometry.hyperplanes.iter().map(|h| thom_class_forgetful(&g, &h.positive).unwrap()).collect();
    let one = CohomologyClass::constant(&g, true, 1);
    // 3 + τ1 + τ2 τ3 - 2 τ4 τ5 τ1, one vertex tuple of inhomogeneous polynomials.
    let parts = [one.scale(&BigInt::from(3)), t[0].clone(), t[1].mul(&t[2]), t[3].mul(&t[4]).mul(&t[0]).scale(&BigInt::from(-2))];
    let mixed: Vec<IntPolynomial> =
        (0..g.num_vertices()).map(|v| parts.iter().fold(IntPolynomial::zero(t[0].vars()), |acc, c| &acc + c.value(v))).collect();
    for k in 0..=3u32 {
        let values: Vec<IntPolynomial> = mixed.iter().map(|p| p.homogeneous_part(k)).collect();
        let class = CohomologyClass { degree: k, forgetful: true, values };
        assert!(cohomology_basis(&g, k, true).contains(&class), "degree {k}");
    }
}

#[test]
fn assumption_checks_gate_the_presentation() {
    assert!(matches!(presentation_ring(&fixture(FixtureId::Fig11Sphere).unwrap(), true), Err(Error::AssumptionViolation(_))));
    assert!(matches!(presentation_ring(&fixture(FixtureId::Fig2Right).unwrap(), true), Err(Error::AssumptionViolation(_))));
}

#[test]
fn parallel_and_sequential_agree() {
    let g = graph("klm212");
    let a = verify_iso(&g, 3, true, sequential()).unwrap();
    let b = verify_iso(&g, 3, true, VerifyOptions::default()).unwrap();
    assert_eq!(a, b);
}
