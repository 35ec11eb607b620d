use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact_algebra::{vars, Exponent, IntPolynomial, LatticeVector, Vars};
use crate::gkm_graph::GkmGraph;
use crate::hyperplane_geometry::Halfspace;

/// Variable table `t1..tn, x`, or `t1..tn` for the x-forgetful graph.
pub fn polynomial_vars(n: usize, forgetful: bool) -> Vars {
    let mut names: Vec<String> = (1..=n).map(|i| format!("t{i}")).collect();
    if !forgetful {
        names.push("x".into());
    }
    vars(&names)
}

/// A vertex-indexed tuple of homogeneous polynomials of one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyClass {
    pub degree: u32,
    pub forgetful: bool,
    pub values: Vec<IntPolynomial>,
}

impl CohomologyClass {
    pub fn constant(g: &GkmGraph, forgetful: bool, c: i64) -> Self {
        let vs = polynomial_vars(g.rank(), forgetful);
        CohomologyClass { degree: 0, forgetful, values: vec![IntPolynomial::constant(&vs, c); g.num_vertices()] }
    }

    /// A degree-1 class from lattice values; the x-coordinate is dropped
    /// for forgetful classes.
    pub fn from_lattice(g: &GkmGraph, forgetful: bool, values: &[LatticeVector]) -> Self {
        let vs = polynomial_vars(g.rank(), forgetful);
        let values = values.iter().map(|v| if forgetful { v.forget().to_linear(&vs) } else { v.to_linear(&vs) }).collect();
        CohomologyClass { degree: 1, forgetful, values }
    }

    /// Degree-`degree` class from concatenated per-vertex coefficient
    /// vectors over `monomials`.
    pub fn from_vector(vs: &Vars, forgetful: bool, degree: u32, monomials: &[Exponent], v: &[BigInt]) -> Self {
        let values = v.chunks(monomials.len().max(1)).map(|c| IntPolynomial::from_coeff_vector(vs, monomials, c)).collect();
        CohomologyClass { degree, forgetful, values }
    }

    pub fn value(&self, v: usize) -> &IntPolynomial {
        &self.values[v]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(IntPolynomial::is_zero)
    }

    pub fn vars(&self) -> &Vars {
        self.values[0].vars()
    }

    /// Concatenated per-vertex coefficient vectors.
    pub fn to_vector(&self, monomials: &[Exponent]) -> Vec<BigInt> {
        self.values.iter().flat_map(|p| p.coeff_vector(monomials)).collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree, "adding classes of different degree");
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect();
        CohomologyClass { degree: self.degree, forgetful: self.forgetful, values }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree, "subtracting classes of different degree");
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect();
        CohomologyClass { degree: self.degree, forgetful: self.forgetful, values }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect();
        CohomologyClass { degree: self.degree + other.degree, forgetful: self.forgetful, values }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        CohomologyClass { values: self.values.iter().map(|p| p.scale(c)).collect(), ..self.clone() }
    }

    /// An edge whose congruence relation fails, if any.
    pub fn congruence_failure(&self, g: &GkmGraph) -> Option<usize> {
        let vs = self.vars().clone();
        g.edges().find(|&e| {
            let d = g.dart(e);
            let diff = &self.values[d.from] - &self.values[d.to.unwrap()];
            let label = if self.forgetful { d.axial.forget() } else { d.axial.clone() };
            if label.is_zero() {
                !diff.is_zero()
            } else {
                diff.div_exact(&label.to_linear(&vs)).is_none()
            }
        })
    }

    pub fn satisfies_congruences(&self, g: &GkmGraph) -> bool {
        self.congruence_failure(g).is_none()
    }

    /// Vertex id to canonical polynomial string.
    pub fn to_json(&self, g: &GkmGraph) -> BTreeMap<String, String> {
        self.values.iter().enumerate().map(|(v, p)| (g.vertex_id(v).to_string(), p.to_string())).collect()
    }
}

/// The class `χ`: `x` at every vertex.
pub fn chi(g: &GkmGraph) -> CohomologyClass {
    CohomologyClass::from_lattice(g, false, &vec![g.residual(); g.num_vertices()])
}

/// `τ_H` as a degree-1 class of the graph.
pub fn thom_class_full(g: &GkmGraph, h: &Halfspace) -> Result<CohomologyClass> {
    let tau = crate::hyperplane_geometry::thom_class(g, h)?;
    Ok(CohomologyClass::from_lattice(g, false, &tau.values))
}

/// `τ_L = F ∘ τ_H` for the hyperplane bounding `h`: `α̃(n_H(p))` on the
/// boundary, 0 elsewhere. The sign follows the choice of `h`.
pub fn thom_class_forgetful(g: &GkmGraph, h: &Halfspace) -> Result<CohomologyClass> {
    let len = g.lattice_len();
    let values: Vec<LatticeVector> =
        (0..g.num_vertices()).map(|v| h.normal(v).map_or_else(|| LatticeVector::zero(len), |d| g.axial(d).clone())).collect();
    let class = CohomologyClass::from_lattice(g, true, &values);
    match class.congruence_failure(g) {
        Some(e) => Err(Error::CongruenceFailure { edge: g.dart_id(e).to_string() }),
        None => Ok(class),
    }
}
