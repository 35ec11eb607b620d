use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::classes::{polynomial_vars, CohomologyClass};
use super::solver::cohomology_basis;
use crate::exact_algebra::{graded_piece_basis, hermite_kernel, IntMatrix, IntPolynomial};
use crate::gkm_graph::GkmGraph;
use crate::par::{self, Exec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelDegreeReport {
    pub degree: u32,
    /// Rank of the kernel of the forgetful map on `H^{2k}`.
    pub kernel_rank: usize,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelReport {
    pub degrees: Vec<KernelDegreeReport>,
    pub passed: bool,
}

/// Checks that every class of `H^{2k}` killed by forgetting `x` is `χ`
/// times a class of `H^{2k-2}`, for `k = 0..=max_degree`.
pub fn kernel_forgetful_check(g: &GkmGraph, max_degree: u32, exec: Exec) -> KernelReport {
    let degrees: Vec<u32> = (0..=max_degree).collect();
    let reports = par::map(exec, &degrees, |&k| kernel_degree(g, k));
    let passed = reports.iter().all(|r| r.passed);
    KernelReport { degrees: reports, passed }
}

fn kernel_degree(g: &GkmGraph, k: u32) -> KernelDegreeReport {
    let n = g.rank();
    let piece = cohomology_basis(g, k, false);
    let classes = piece.classes();
    let forgetful_vars = polynomial_vars(n, true);
    let forgetful_monomials = graded_piece_basis(n, k);
    // x ↦ 0 and t_i ↦ t_i
    let images: Vec<IntPolynomial> = (0..=n).map(|i| if i < n { IntPolynomial::var(&forgetful_vars, i) } else { IntPolynomial::zero(&forgetful_vars) }).collect();
    let columns: Vec<Vec<BigInt>> = classes
        .iter()
        .map(|c| c.values.iter().flat_map(|p| p.substitute(&images, &forgetful_vars).coeff_vector(&forgetful_monomials)).collect())
        .collect();
    let height = g.num_vertices() * forgetful_monomials.len();
    let rows: Vec<Vec<BigInt>> = (0..height).map(|r| columns.iter().map(|c| c[r].clone()).collect()).collect();
    let kernel = if classes.is_empty() {
        Vec::new()
    } else if height == 0 {
        (0..classes.len()).map(|i| (0..classes.len()).map(|j| BigInt::from((i == j) as i64)).collect()).collect()
    } else {
        hermite_kernel(&IntMatrix::from_rows(rows, classes.len()).expect("uniform width"))
    };
    let previous = (k > 0).then(|| cohomology_basis(g, k - 1, false));
    let x = IntPolynomial::var(&piece.vars, n);
    let passed = kernel.iter().all(|coeffs| {
        let Some(previous) = &previous else { return false };
        let f = coeffs.iter().zip(&classes).filter(|(c, _)| !c.is_zero()).fold(
            CohomologyClass { degree: k, forgetful: false, values: vec![IntPolynomial::zero(&piece.vars); g.num_vertices()] },
            |acc, (c, b)| acc.add(&b.scale(c)),
        );
        let quotient: Option<Vec<IntPolynomial>> = f.values.iter().map(|p| p.div_exact(&x)).collect();
        match quotient {
            Some(values) => previous.contains(&CohomologyClass { degree: k - 1, forgetful: false, values }),
            None => false,
        }
    });
    KernelDegreeReport { degree: k, kernel_rank: kernel.len(), passed }
}
