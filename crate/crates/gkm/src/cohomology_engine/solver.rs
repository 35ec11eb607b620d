use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::classes::{polynomial_vars, CohomologyClass};
use crate::exact_algebra::{graded_piece_basis, hermite_kernel, hnf_basis, lattice_contains, vars, Exponent, IntMatrix, IntPolynomial, LatticeVector, Vars};
use crate::gkm_graph::GkmGraph;

/// The degree-`2k` piece of the graph cohomology as a sublattice of
/// `⊕_p Sym^k`, with its Hermite-reduced basis.
#[derive(Clone, Debug)]
pub struct GradedPiece {
    pub degree: u32,
    pub forgetful: bool,
    pub vars: Vars,
    /// Monomial basis of `Sym^k` at one vertex.
    pub monomials: Vec<Exponent>,
    pub num_vertices: usize,
    /// Rows of the Hermite normal form of the lattice.
    pub basis: Vec<Vec<BigInt>>,
}

impl GradedPiece {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Ambient dimension `|V| * dim Sym^k`.
    pub fn width(&self) -> usize {
        self.num_vertices * self.monomials.len()
    }

    pub fn classes(&self) -> Vec<CohomologyClass> {
        self.basis.iter().map(|v| CohomologyClass::from_vector(&self.vars, self.forgetful, self.degree, &self.monomials, v)).collect()
    }

    pub fn vector(&self, c: &CohomologyClass) -> Vec<BigInt> {
        c.to_vector(&self.monomials)
    }

    /// Integral membership of a class in this piece.
    pub fn contains(&self, c: &CohomologyClass) -> bool {
        lattice_contains(&self.basis, &self.vector(c))
    }
}

/// Z-basis of `H^{2k}` of the graph (or of its x-forgetful graph) by exact
/// linear algebra on the congruence relations.
///
/// For a primitive label `ℓ` on an edge, `ℓ | u` holds exactly when `u`
/// vanishes on the kernel lattice of `ℓ`, which gives linear constraints
/// on the coefficients. A non-primitive label gets a quotient witness
/// `A` with `u = ℓ A`; witnesses are projected away at the end. A zero
/// label forces equality.
pub fn cohomology_basis(g: &GkmGraph, k: u32, forgetful: bool) -> GradedPiece {
    let vs = polynomial_vars(g.rank(), forgetful);
    let nv = vs.len();
    let monomials = graded_piece_basis(nv, k);
    let n_mon = monomials.len();
    let width = g.num_vertices() * n_mon;
    let lower = if k > 0 { graded_piece_basis(nv, k - 1) } else { Vec::new() };

    let labels: Vec<(usize, usize, LatticeVector)> = g
        .edges()
        .map(|e| {
            let d = g.dart(e);
            let label = if forgetful { d.axial.forget() } else { d.axial.clone() };
            (d.from, d.to.unwrap(), label)
        })
        .collect();
    let witnesses = labels.iter().filter(|(_, _, l)| !l.is_zero() && !l.is_primitive()).count();
    let total = width + witnesses * lower.len();

    let mut matrix_rows: Vec<Vec<BigInt>> = Vec::new();
    let mut next_witness = width;
    for (p, q, label) in &labels {
        let difference_row = |coeffs: &[BigInt]| {
            let mut r = vec![BigInt::zero(); total];
            for (j, c) in coeffs.iter().enumerate() {
                r[p * n_mon + j] += c;
                r[q * n_mon + j] -= c;
            }
            r
        };
        let unit = |j: usize| (0..n_mon).map(|i| if i == j { BigInt::one() } else { BigInt::zero() }).collect::<Vec<_>>();
        if label.is_zero() {
            matrix_rows.extend((0..n_mon).map(|j| difference_row(&unit(j))));
        } else if label.is_primitive() {
            matrix_rows.extend(restriction_matrix(&vs, label, &monomials, k).iter().map(|s| difference_row(s)));
        } else {
            // u_p - u_q - ℓ A = 0, one row per monomial of Sym^k
            let ell = label.to_linear(&vs);
            let mult: Vec<Vec<BigInt>> =
                lower.iter().map(|e| (&ell * &IntPolynomial::monomial(&vs, e.clone(), 1)).coeff_vector(&monomials)).collect();
            for j in 0..n_mon {
                let mut r = difference_row(&unit(j));
                for (c, col) in mult.iter().enumerate() {
                    r[next_witness + c] = -&col[j];
                }
                matrix_rows.push(r);
            }
            next_witness += lower.len();
        }
    }

    let basis = if matrix_rows.is_empty() {
        (0..width)
            .map(|i| {
                let mut v = vec![BigInt::zero(); width];
                v[i] = BigInt::one();
                v
            })
            .collect()
    } else {
        let m = IntMatrix::from_rows(matrix_rows, total).expect("rows have uniform width");
        let kernel = hermite_kernel(&m);
        if witnesses == 0 {
            kernel
        } else {
            let projected: Vec<Vec<BigInt>> = kernel.into_iter().map(|v| v[..width].to_vec()).collect();
            hnf_basis(&projected, width)
        }
    };
    GradedPiece { degree: k, forgetful, vars: vs, monomials, num_vertices: g.num_vertices(), basis }
}

/// Matrix of `u ↦ u(B s)` from `Sym^k` in the ambient variables to
/// `Sym^k` in coordinates `s` of the kernel lattice of `label`.
fn restriction_matrix(vs: &Vars, label: &LatticeVector, monomials: &[Exponent], k: u32) -> Vec<Vec<BigInt>> {
    let nv = vs.len();
    let row = IntMatrix::from_rows(vec![label.to_bigints()], nv).expect("label has ambient length");
    let b = hermite_kernel(&row);
    let s_names: Vec<String> = (0..b.len()).map(|i| format!("s{i}")).collect();
    let svars = vars(&s_names);
    let images: Vec<IntPolynomial> = (0..nv)
        .map(|j| {
            IntPolynomial::from_terms(
                &svars,
                b.iter().enumerate().map(|(i, bi)| {
                    let mut e = vec![0; b.len()];
                    e[i] = 1;
                    (e, bi[j].clone())
                }),
            )
        })
        .collect();
    let target = graded_piece_basis(b.len(), k);
    let columns: Vec<Vec<BigInt>> =
        monomials.iter().map(|e| IntPolynomial::monomial(vs, e.clone(), 1).substitute(&images, &svars).coeff_vector(&target)).collect();
    (0..target.len()).map(|r| columns.iter().map(|c| c[r].clone()).collect()).collect()
}
