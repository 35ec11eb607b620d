use serde::Serialize;

use super::classes::{chi, polynomial_vars, thom_class_forgetful, thom_class_full, CohomologyClass};
use crate::error::{Error, Result};
use crate::exact_algebra::{vars, IntPolynomial, Vars};
use crate::gkm_graph::GkmGraph;
use crate::hyperplane_geometry::{check_assumptions, Geometry, DEFAULT_SUBSET_CAP};

/// `Z[X, H, H̄] / ℐ` or, for the x-forgetful graph, `Z[L] / 𝐈(𝐋)`, with the
/// map `Ψ` to vertex-indexed classes.
///
/// For the full ring the linear relations `H_i + H̄_i - X` are used to
/// eliminate `H̄_i`, so polynomials live in `Z[X, H_1..H_m]`.
#[derive(Clone, Debug)]
pub struct PresentationRing {
    pub forgetful: bool,
    pub hyperplanes: Vec<String>,
    /// Display names of all generators (`X, H_*, Hbar_*` or the hyperplane
    /// names).
    pub generators: Vec<String>,
    /// Variables of the working polynomial ring.
    pub vars: Vars,
    pub linear_relations: Vec<String>,
    /// Inclusion-minimal generator families with empty intersection.
    pub empty_families: Vec<Vec<String>>,
    /// Relation generators as polynomials in [`PresentationRing::vars`].
    pub relations: Vec<IntPolynomial>,
    /// `Ψ` of each variable of [`PresentationRing::vars`].
    pub images: Vec<CohomologyClass>,
    num_vertices: usize,
    class_vars: Vars,
}

#[derive(Serialize)]
struct RingJson<'a> {
    forgetful: bool,
    hyperplanes: &'a [String],
    generators: &'a [String],
    linear_relations: &'a [String],
    empty_families: &'a [Vec<String>],
    relations: Vec<String>,
}

impl PresentationRing {
    /// Builds the ring without checking the assumptions. Assumption (1) is
    /// still needed for the halfspaces, so `geometry` must exist.
    pub fn build(g: &GkmGraph, geometry: &Geometry, forgetful: bool) -> Result<PresentationRing> {
        let hyperplanes = geometry.names();
        let nv = g.num_vertices();
        if forgetful {
            let images = geometry.hyperplanes.iter().map(|h| thom_class_forgetful(g, &h.positive)).collect::<Result<Vec<_>>>()?;
            let sets: Vec<Vec<bool>> =
                geometry.hyperplanes.iter().map(|h| (0..nv).map(|v| h.hyperplane.contains_vertex(v)).collect()).collect();
            let families = minimal_empty_families(&sets);
            let vs = vars(&hyperplanes);
            let relations = families
                .iter()
                .map(|f| {
                    let mut e = vec![0; hyperplanes.len()];
                    f.iter().for_each(|&i| e[i] = 1);
                    IntPolynomial::monomial(&vs, e, 1)
                })
                .collect();
            let empty_families = families.iter().map(|f| f.iter().map(|&i| hyperplanes[i].clone()).collect()).collect();
            return Ok(PresentationRing {
                forgetful,
                generators: hyperplanes.clone(),
                hyperplanes,
                vars: vs,
                linear_relations: Vec::new(),
                empty_families,
                relations,
                images,
                num_vertices: nv,
                class_vars: polynomial_vars(g.rank(), true),
            });
        }

        let m = hyperplanes.len();
        let pos: Vec<String> = hyperplanes.iter().map(|h| format!("H_{h}")).collect();
        let neg: Vec<String> = hyperplanes.iter().map(|h| format!("Hbar_{h}")).collect();
        let mut generators = vec!["X".to_string()];
        generators.extend(pos.iter().cloned());
        generators.extend(neg.iter().cloned());
        let mut names = vec!["X".to_string()];
        names.extend(pos.iter().cloned());
        let vs = vars(&names);
        let mut images = vec![chi(g)];
        for h in &geometry.hyperplanes {
            images.push(thom_class_full(g, &h.positive)?);
        }
        // halfspace i < m is H_i, i >= m is H̄_{i-m}
        let mut sets: Vec<Vec<bool>> = Vec::with_capacity(2 * m);
        for h in &geometry.hyperplanes {
            sets.push((0..nv).map(|v| h.positive.contains_vertex(v)).collect());
        }
        for h in &geometry.hyperplanes {
            sets.push((0..nv).map(|v| h.negative.contains_vertex(v)).collect());
        }
        let families = minimal_empty_families(&sets);
        let x = IntPolynomial::var(&vs, 0);
        let relations = families
            .iter()
            .map(|f| {
                f.iter().fold(IntPolynomial::one(&vs), |acc, &i| {
                    let factor = if i < m { IntPolynomial::var(&vs, i + 1) } else { &x - &IntPolynomial::var(&vs, i - m + 1) };
                    &acc * &factor
                })
            })
            .collect();
        let empty_families = families.iter().map(|f| f.iter().map(|&i| if i < m { pos[i].clone() } else { neg[i - m].clone() }).collect()).collect();
        let linear_relations = (0..m).map(|i| format!("{} + {} - X", pos[i], neg[i])).collect();
        Ok(PresentationRing {
            forgetful,
            hyperplanes,
            generators,
            vars: vs,
            linear_relations,
            empty_families,
            relations,
            images,
            num_vertices: nv,
            class_vars: polynomial_vars(g.rank(), false),
        })
    }

    /// `Ψ` of a monomial of the working ring.
    pub fn evaluate_monomial(&self, e: &[u32]) -> CohomologyClass {
        let mut out = CohomologyClass {
            degree: 0,
            forgetful: self.forgetful,
            values: vec![IntPolynomial::one(&self.class_vars); self.num_vertices],
        };
        for (i, &k) in e.iter().enumerate() {
            for _ in 0..k {
                out = out.mul(&self.images[i]);
            }
        }
        out
    }

    /// `Ψ` of a homogeneous polynomial of the working ring.
    pub fn evaluate(&self, f: &IntPolynomial) -> CohomologyClass {
        let degree = f.degree().unwrap_or(0);
        let zero = CohomologyClass { degree, forgetful: self.forgetful, values: vec![IntPolynomial::zero(&self.class_vars); self.num_vertices] };
        f.terms().fold(zero, |acc, (e, c)| acc.add(&self.evaluate_monomial(e).scale(c)))
    }

    /// Whether a monomial is divisible by one of the relation monomials of
    /// the forgetful ring.
    pub fn in_monomial_ideal(&self, e: &[u32]) -> bool {
        self.forgetful && self.relations.iter().any(|r| r.terms().all(|(re, _)| re.iter().zip(e).all(|(a, b)| a <= b)))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(RingJson {
            forgetful: self.forgetful,
            hyperplanes: &self.hyperplanes,
            generators: &self.generators,
            linear_relations: &self.linear_relations,
            empty_families: &self.empty_families,
            relations: self.relations.iter().map(|r| r.to_string()).collect(),
        })
        .expect("ring serializes")
    }
}

/// The presentation ring, refusing graphs that violate either assumption.
pub fn presentation_ring(g: &GkmGraph, forgetful: bool) -> Result<PresentationRing> {
    let geometry = Geometry::build(g).map_err(|e| Error::AssumptionViolation(e.to_string()))?;
    let hyperplanes: Vec<_> = geometry.hyperplanes.iter().map(|h| h.hyperplane.clone()).collect();
    let report = check_assumptions(g, &geometry.pairs, &hyperplanes, DEFAULT_SUBSET_CAP);
    if !report.holds() {
        let failed: Vec<String> = report.assumption2.iter().filter(|c| !c.passed).map(|c| c.subset.join("∩")).collect();
        return Err(Error::AssumptionViolation(format!("assumption (2) fails for {}", failed.join(", "))));
    }
    PresentationRing::build(g, &geometry, forgetful)
}

/// Inclusion-minimal index families whose sets have empty common
/// intersection, in lexicographic order. `sets[i][v]` says whether vertex
/// `v` belongs to set `i`.
pub fn minimal_empty_families(sets: &[Vec<bool>]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let width = sets.first().map_or(0, Vec::len);
    let meet = |family: &[usize]| -> bool { (0..width).any(|v| family.iter().all(|&i| sets[i][v])) };
    let mut stack: Vec<Vec<usize>> = vec![Vec::new()];
    while let Some(family) = stack.pop() {
        let start = family.last().map_or(0, |&i| i + 1);
        for j in (start..sets.len()).rev() {
            let mut next = family.clone();
            next.push(j);
            if meet(&next) {
                stack.push(next);
            } else if (0..next.len()).all(|drop| {
                let sub: Vec<usize> = next.iter().enumerate().filter(|&(i, _)| i != drop).map(|(_, &x)| x).collect();
                meet(&sub)
            }) {
                out.push(next);
            }
        }
    }
    out.sort();
    out
}
