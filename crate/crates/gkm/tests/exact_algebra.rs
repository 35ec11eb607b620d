use num_bigint::BigInt;
use proptest::prelude::*;

use gkm::exact_algebra::{
    bareiss_rank, binomial, determinant, graded_piece_basis, hermite_kernel, hnf_basis, lattice_contains, lattice_rank, rational_rank, solve_integral,
    vars, IntMatrix, IntPolynomial, LatticeVector, Vars,
};

fn xyz() -> Vars {
    vars(&["x1", "x2", "x3"])
}

fn poly_strategy() -> impl Strategy<Value = IntPolynomial> {
    prop::collection::vec((prop::collection::vec(0u32..3, 3), -5i64..=5), 0..5)
        .prop_map(|terms| IntPolynomial::from_terms(&xyz(), terms.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
}

fn matrix_strategy(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-4i64..=4, cols), rows)
}

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&c| BigInt::from(c)).collect()
}

#[test]
fn kernel_of_two_by_minus_two() {
    let m = IntMatrix::from_i64_rows(&[vec![2, -2]], 2).unwrap();
    assert_eq!(hermite_kernel(&m), vec![big(&[1, 1])]);
}

#[test]
fn kernel_of_identity_is_empty() {
    assert!(hermite_kernel(&IntMatrix::identity(2)).is_empty());
}

#[test]
fn lattice_rank_examples() {
    let r = |vs: &[&[i64]]| lattice_rank(&vs.iter().map(|v| LatticeVector::new(v.to_vec())).collect::<Vec<_>>()).unwrap();
    assert_eq!(r(&[&[1, 0, 0], &[0, 1, 0]]), 2);
    assert_eq!(r(&[&[1, 0, 1], &[-1, 0, 0]]), 2);
    assert_eq!(r(&[&[2, 4], &[1, 2]]), 1);
}

#[test]
fn polynomial_examples() {
    let vs = vars(&["x1", "x2"]);
    let p = |s: &str| IntPolynomial::parse(&vs, s).unwrap();
    assert_eq!(&p("x1 + x2") * &p("x1 - x2"), p("x1^2 - x2^2"));
    assert!((&p("3*x1*x2 - 7") * &IntPolynomial::zero(&vs)).is_zero());
    assert_eq!(&p("3*x1*x2 - 7") * &IntPolynomial::one(&vs), p("3*x1*x2 - 7"));
}

#[test]
fn graded_piece_examples() {
    assert_eq!(graded_piece_basis(2, 2).len(), 3);
    let mut b = graded_piece_basis(2, 2);
    b.sort();
    assert_eq!(b, vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
    assert_eq!(graded_piece_basis(4, 0), vec![vec![0; 4]]);
    assert_eq!(graded_piece_basis(3, 4).len(), 15);
}

#[test]
fn graded_piece_counts_match_binomial() {
    for n in 1..=6usize {
        for k in 0..=8u32 {
            let expected = binomial((n as u64) + k as u64 - 1, k as u64);
            assert_eq!(graded_piece_basis(n, k).len() as u128, expected, "n={n} k={k}");
        }
    }
}

proptest! {
    #[test]
    fn ring_axioms(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_division_recovers_factor(a in poly_strategy(), b in poly_strategy()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
    }

    #[test]
    fn display_parse_round_trip(a in poly_strategy()) {
        prop_assert_eq!(IntPolynomial::parse(&xyz(), &a.to_string()).unwrap(), a);
    }

    #[test]
    fn kernel_vectors_are_annihilated(rows in matrix_strategy(4, 6)) {
        let m = IntMatrix::from_i64_rows(&rows, 6).unwrap();
        let kernel = hermite_kernel(&m);
        for v in &kernel {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(|c| *c == BigInt::from(0)));
        }
        prop_assert_eq!(kernel.len(), 6 - bareiss_rank(&m));
        let as_rows: Vec<Vec<BigInt>> = rows.iter().map(|r| big(r)).collect();
        prop_assert_eq!(kernel.len(), 6 - rational_rank(&as_rows, 6));
    }

    #[test]
    fn kernel_is_saturated(rows in matrix_strategy(2, 4), v in prop::collection::vec(-3i64..=3, 4), d in 2i64..4) {
        // Any integer vector killed by M lies in the kernel lattice, even when it
        // arises as a multiple divided out.
        let m = IntMatrix::from_i64_rows(&rows, 4).unwrap();
        let kernel = hermite_kernel(&m);
        let w = big(&v);
        let killed = m.mul_vec(&w).unwrap().iter().all(|c| *c == BigInt::from(0));
        prop_assert_eq!(lattice_contains(&kernel, &w), killed);
        let scaled: Vec<BigInt> = w.iter().map(|c| c * d).collect();
        prop_assert_eq!(lattice_contains(&kernel, &scaled), killed);
    }

    #[test]
    fn lattice_rank_invariant_under_permutation_and_sign(rows in matrix_strategy(4, 3), perm in Just(vec![2usize, 0, 3, 1]), signs in prop::collection::vec(prop::bool::ANY, 4)) {
        let vs: Vec<LatticeVector> = rows.iter().map(|r| LatticeVector::new(r.clone())).collect();
        let moved: Vec<LatticeVector> = perm.iter().zip(&signs).map(|(&i, &s)| if s { vs[i].neg() } else { vs[i].clone() }).collect();
        prop_assert_eq!(lattice_rank(&vs).unwrap(), lattice_rank(&moved).unwrap());
    }

    #[test]
    fn hnf_basis_is_canonical(rows in matrix_strategy(3, 4), a in -3i64..=3) {
        // Adding a multiple of one generator to another does not change the lattice.
        let gens: Vec<Vec<BigInt>> = rows.iter().map(|r| big(r)).collect();
        let mut moved = gens.clone();
        moved[1] = moved[1].iter().zip(&gens[0]).map(|(x, y)| x + y * a).collect();
        moved.swap(0, 2);
        prop_assert_eq!(hnf_basis(&gens, 4), hnf_basis(&moved, 4));
    }

    #[test]
    fn solve_integral_inverts_nonsingular_systems(rows in matrix_strategy(3, 3), x in prop::collection::vec(-3i64..=3, 3)) {
        let m = IntMatrix::from_i64_rows(&rows, 3).unwrap();
        prop_assume!(determinant(&m).unwrap() != BigInt::from(0));
        let b = m.mul_vec(&big(&x)).unwrap();
        let sol = solve_integral(&m, &b).unwrap().expect("b is in the image");
        prop_assert_eq!(sol, big(&x));
    }
}
