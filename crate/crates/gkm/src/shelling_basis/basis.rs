use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::complex::{build_complex, find_shelling, Shelling, SimplicialComplex};
use super::lambda::characteristic_function;
use crate::error::{Error, Result};
use crate::exact_algebra::{binomial, vars, IntPolynomial, Vars};
use crate::gkm_graph::GkmGraph;
use crate::hyperplane_geometry::{check_assumptions, Geometry, DEFAULT_SUBSET_CAP};
use crate::par::{self, Exec};

/// Orientation metadata of one hyperplane: `τ_L` and `λ(L)` change sign
/// with the choice of the positive halfspace.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HyperplaneOrientation {
    pub name: String,
    /// Vertex and normal dart of the positive halfspace at that vertex.
    pub vertex: String,
    pub normal: String,
    pub lambda: Vec<i64>,
}

/// Everything needed to work with the module basis coming from a
/// shelling: the complex, the shelling, `λ` and the localizations of the
/// hyperplane classes.
#[derive(Clone, Debug)]
pub struct ShellingBasis {
    pub complex: SimplicialComplex,
    pub shelling: Shelling,
    pub orientation: Vec<HyperplaneOrientation>,
    /// `t1..tn`, standing for `e1*..en*`.
    pub t_vars: Vars,
    /// `t1..tn` followed by the hyperplane names.
    pub mixed_vars: Vars,
    rank: usize,
    /// `τ_{L_i}(p)` as a linear form in `t`, indexed `[vertex][i]`.
    tau: Vec<Vec<IntPolynomial>>,
}

impl ShellingBasis {
    /// Checks both assumptions, builds the complex and finds (or verifies
    /// the hinted) shelling.
    pub fn build(g: &GkmGraph, budget: u64) -> Result<ShellingBasis> {
        let geometry = Geometry::build(g)?;
        let hyperplanes: Vec<_> = geometry.hyperplanes.iter().map(|h| h.hyperplane.clone()).collect();
        let report = check_assumptions(g, &geometry.pairs, &hyperplanes, DEFAULT_SUBSET_CAP);
        if !report.holds() {
            return Err(Error::AssumptionViolation("assumption (2) fails".into()));
        }
        let complex = build_complex(g, &geometry)?;
        let shelling = find_shelling(&complex, g.hints().shelling.as_deref(), budget)?;
        let n = g.rank();
        let t_names: Vec<String> = (1..=n).map(|i| format!("t{i}")).collect();
        let t_vars = vars(&t_names);
        let mut mixed = t_names.clone();
        mixed.extend(geometry.names());
        let mixed_vars = vars(&mixed);
        let orientation = (0..geometry.len())
            .map(|i| {
                let h = &geometry.hyperplanes[i];
                let v = h.hyperplane.vertices[0];
                Ok(HyperplaneOrientation {
                    name: h.hyperplane.name.clone(),
                    vertex: g.vertex_id(v).to_string(),
                    normal: g.dart_id(h.positive.normal(v).expect("hyperplane vertices are boundary vertices")).to_string(),
                    lambda: characteristic_function(g, &geometry, i)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let tau = (0..g.num_vertices())
            .map(|p| {
                geometry
                    .hyperplanes
                    .iter()
                    .map(|h| match h.positive.normal(p) {
                        Some(d) if h.hyperplane.contains_vertex(p) => g.axial(d).forget().to_linear(&t_vars),
                        _ => IntPolynomial::zero(&t_vars),
                    })
                    .collect()
            })
            .collect();
        Ok(ShellingBasis { complex, shelling, orientation, t_vars, mixed_vars, rank: n, tau })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.shelling.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.shelling.order.is_empty()
    }

    pub fn hyperplane_names(&self) -> &[String] {
        &self.complex.vertices
    }

    /// Index of a hyperplane in the mixed variable table.
    fn hyperplane_var(&self, i: usize) -> usize {
        self.rank + i
    }

    /// `x_γ = Π_{v ∈ γ} L_v` in the mixed ring.
    pub fn face_monomial(&self, face: &[usize]) -> IntPolynomial {
        let mut e = vec![0; self.mixed_vars.len()];
        face.iter().for_each(|&v| e[self.hyperplane_var(v)] = 1);
        IntPolynomial::monomial(&self.mixed_vars, e, 1)
    }

    /// Parses a polynomial over `t1..tn` and the hyperplane names.
    pub fn parse(&self, text: &str) -> Result<IntPolynomial> {
        Ok(IntPolynomial::parse(&self.mixed_vars, text)?)
    }

    /// `ρ_p(f)`: hyperplane variables replaced by `τ_L(p)`.
    pub fn localize(&self, f: &IntPolynomial, p: usize) -> IntPolynomial {
        let images: Vec<IntPolynomial> =
            (0..self.rank).map(|i| IntPolynomial::var(&self.t_vars, i)).chain(self.tau[p].iter().cloned()).collect();
        f.substitute(&images, &self.t_vars)
    }

    /// `ρ(f)` at every vertex, in vertex order.
    pub fn localize_all(&self, f: &IntPolynomial) -> Vec<IntPolynomial> {
        (0..self.tau.len()).map(|p| self.localize(f, p)).collect()
    }

    /// Hilbert function of the free module: `Σ_i C(n-1+k-|μ_i|, n-1)`.
    pub fn hilbert_rank(&self, k: u32) -> u128 {
        let n = self.rank as u64;
        self.shelling
            .minimal
            .iter()
            .filter(|mu| mu.len() as u64 <= k as u64)
            .map(|mu| binomial(n - 1 + k as u64 - mu.len() as u64, n - 1))
            .sum()
    }
}

/// The basis `x_{μ_1}, ..., x_{μ_d}` in the mixed ring, in shelling order.
pub fn module_basis(sb: &ShellingBasis) -> Vec<IntPolynomial> {
    sb.shelling.minimal.iter().map(|mu| sb.face_monomial(mu)).collect()
}

/// Canonical names of the basis monomials (`1` for the empty face).
pub fn basis_names(sb: &ShellingBasis) -> Vec<String> {
    module_basis(sb).iter().map(|m| face_name(sb, m)).collect()
}

fn face_name(sb: &ShellingBasis, m: &IntPolynomial) -> String {
    let (e, _) = m.terms().next().expect("monomial");
    let names: Vec<&str> = e.iter().enumerate().filter(|(_, &k)| k > 0).map(|(i, _)| sb.mixed_vars[i].as_str()).collect();
    if names.is_empty() {
        "1".into()
    } else {
        names.join("*")
    }
}

/// Coefficients `a_j ∈ Z[t]` with `f = Σ a_j x_{μ_j}`, in shelling order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisExpansion {
    pub coefficients: Vec<IntPolynomial>,
}

impl BasisExpansion {
    /// Basis name to coefficient string, nonzero coefficients only.
    pub fn to_json(&self, sb: &ShellingBasis) -> BTreeMap<String, String> {
        basis_names(sb).into_iter().zip(&self.coefficients).filter(|(_, c)| !c.is_zero()).map(|(n, c)| (n, c.to_string())).collect()
    }

    /// The expansion with every `t` set to 0.
    pub fn augmented(&self) -> Vec<BigInt> {
        self.coefficients.iter().map(|c| c.coeff(&vec![0; c.nvars()])).collect()
    }
}

/// Expands `f` in the module basis by iterated localization:
/// `a_i = ρ_{σ_i}(f - Σ_{k<i} a_k x_{μ_k}) / ρ_{σ_i}(x_{μ_i})`, then checks
/// that the remainder localizes to zero at every vertex.
pub fn express_in_basis(sb: &ShellingBasis, f: &IntPolynomial) -> Result<BasisExpansion> {
    let basis = module_basis(sb);
    let mut rest = f.clone();
    let mut coefficients = Vec::with_capacity(basis.len());
    for (i, &p) in sb.shelling.order.iter().enumerate() {
        let numerator = sb.localize(&rest, p);
        let a = if numerator.is_zero() {
            IntPolynomial::zero(&sb.t_vars)
        } else {
            let denominator = sb.localize(&basis[i], p);
            numerator.div_exact(&denominator).ok_or_else(|| Error::InexactDivision { vertex: sb.complex.facet_ids[p].clone() })?
        };
        rest = &rest - &(&a.embed(&sb.mixed_vars) * &basis[i]);
        coefficients.push(a);
    }
    if let Some(p) = (0..sb.len()).find(|&p| !sb.localize(&rest, p).is_zero()) {
        return Err(Error::InexactDivision { vertex: sb.complex.facet_ids[p].clone() });
    }
    Ok(BasisExpansion { coefficients })
}

/// `[ρ_{p_{σ_i}}(x_{μ_j})]` in shelling order.
pub fn localization_matrix(sb: &ShellingBasis) -> Vec<Vec<IntPolynomial>> {
    let basis = module_basis(sb);
    sb.shelling.order.iter().map(|&p| basis.iter().map(|b| sb.localize(b, p)).collect()).collect()
}

/// `Σ_i ⟨u, λ(L_i)⟩ L_i - u`, which vanishes in the ring.
pub fn relation_for_u(sb: &ShellingBasis, u: &[i64]) -> IntPolynomial {
    let mut out = IntPolynomial::zero(&sb.mixed_vars);
    for (i, o) in sb.orientation.iter().enumerate() {
        let c: i64 = u.iter().zip(&o.lambda).map(|(a, b)| a * b).sum();
        if c != 0 {
            out = &out + &IntPolynomial::var(&sb.mixed_vars, sb.hyperplane_var(i)).scale(&BigInt::from(c));
        }
    }
    let mut coeffs = u.to_vec();
    coeffs.extend(std::iter::repeat_n(0, sb.hyperplane_names().len()));
    &out - &IntPolynomial::linear(&sb.mixed_vars, &coeffs)
}

/// The relation with `u = α̃(n_{H_j}(p_σ))`: its `L_j` coefficient is 1 and
/// every other hyperplane of the facet has coefficient 0, so it rewrites
/// `L_j` through hyperplanes off `σ` and `u`.
pub fn relation_for_lj(sb: &ShellingBasis, g: &GkmGraph, facet: usize, j: usize) -> Result<IntPolynomial> {
    if !sb.complex.facets[facet].contains(&j) {
        return Err(Error::InvalidShelling(format!(
            "hyperplane {} does not pass through vertex {}",
            sb.hyperplane_names()[j],
            sb.complex.facet_ids[facet]
        )));
    }
    let u: Vec<i64> = (0..sb.rank).map(|i| sb.tau[facet][j].coeff(&unit(sb.rank, i)).try_into().expect("small coefficient")).collect();
    let _ = g;
    Ok(relation_for_u(sb, &u))
}

fn unit(n: usize, i: usize) -> Vec<u32> {
    (0..n).map(|j| (i == j) as u32).collect()
}

/// Product table of the basis, re-expanded in the basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureConstants {
    pub ordinary: bool,
    pub basis: Vec<String>,
    pub degrees: Vec<usize>,
    /// Number of basis elements of each degree.
    pub ranks: Vec<usize>,
    /// `"(a)*(b)"` to basis name to coefficient, nonzero entries only.
    pub products: BTreeMap<String, BTreeMap<String, String>>,
}

/// Products `x_{μ_i} x_{μ_j}` for `i ≤ j` expanded in the basis. With
/// `ordinary` the coefficients are reduced along `t ↦ 0`, which gives the
/// ordinary cohomology.
pub fn structure_constants(sb: &ShellingBasis, ordinary: bool, exec: Exec) -> Result<StructureConstants> {
    let basis = module_basis(sb);
    let names = basis_names(sb);
    let pairs: Vec<(usize, usize)> = (0..basis.len()).flat_map(|i| (i..basis.len()).map(move |j| (i, j))).collect();
    let expanded = par::try_map(exec, &pairs, |&(i, j)| express_in_basis(sb, &(&basis[i] * &basis[j])))?;
    let mut products = BTreeMap::new();
    for (&(i, j), e) in pairs.iter().zip(expanded) {
        let entry: BTreeMap<String, String> = if ordinary {
            names.iter().zip(e.augmented()).filter(|(_, c)| !c.is_zero()).map(|(n, c)| (n.clone(), c.to_string())).collect()
        } else {
            e.to_json(sb)
        };
        products.insert(format!("({})*({})", names[i], names[j]), entry);
    }
    let degrees: Vec<usize> = sb.shelling.minimal.iter().map(Vec::len).collect();
    let mut ranks = vec![0; sb.rank + 1];
    degrees.iter().for_each(|&d| ranks[d] += 1);
    Ok(StructureConstants { ordinary, basis: names, degrees, ranks, products })
}

/// Ordinary cohomology: the basis graded by `|μ_i|` with its structure
/// constants.
pub fn ordinary_cohomology(sb: &ShellingBasis, exec: Exec) -> Result<StructureConstants> {
    structure_constants(sb, true, exec)
}
