use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;

use super::ring::PresentationRing;
use super::solver::cohomology_basis;
use crate::error::{Error, Result};
use crate::exact_algebra::{graded_piece_basis, hnf_basis, Echelon, IntPolynomial};
use crate::gkm_graph::GkmGraph;
use crate::hyperplane_geometry::{check_assumptions, Geometry, DEFAULT_SUBSET_CAP};
use crate::par::{self, Exec};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub exec: Exec,
    /// Refuse graphs that violate assumption (2). When false the ranks are
    /// still compared, which exhibits the failure of the isomorphism.
    pub require_assumptions: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { exec: Exec::default(), require_assumptions: true }
    }
}

/// Comparison of solver and presentation ring in one degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeReport {
    pub solver_rank: usize,
    pub image_rank: usize,
    /// Number of monomials of this degree in the ring's variables.
    pub monomials: usize,
    /// Rank of the degree piece of the relation ideal.
    pub ideal_rank: usize,
    pub rank_match: bool,
    /// The ideal piece has rank `monomials - image_rank`.
    pub injective: bool,
    /// `Ψ` kills every relation generator of this degree.
    pub relations_vanish: bool,
    /// The image lattice equals the solver lattice.
    pub lattice_match: bool,
    #[serde(rename = "match")]
    pub matched: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoReport {
    pub forgetful: bool,
    pub assumptions_hold: bool,
    pub max_degree: u32,
    pub degrees: BTreeMap<u32, DegreeReport>,
    pub passed: bool,
}

impl IsoReport {
    /// Degrees where the solver rank exceeds the image rank.
    pub fn deficit_degrees(&self) -> Vec<u32> {
        self.degrees.iter().filter(|(_, r)| r.solver_rank > r.image_rank).map(|(&k, _)| k).collect()
    }
}

/// Graded comparison of `H^{2k}` from the solver with the image of the
/// presentation ring under `Ψ`, for `k = 0..=max_degree`.
pub fn verify_iso(g: &GkmGraph, max_degree: u32, forgetful: bool, options: VerifyOptions) -> Result<IsoReport> {
    let geometry = Geometry::build_with(g, options.exec).map_err(|e| match e {
        Error::AssumptionOneViolation { .. } => Error::AssumptionViolation(e.to_string()),
        other => other,
    })?;
    let hyperplanes: Vec<_> = geometry.hyperplanes.iter().map(|h| h.hyperplane.clone()).collect();
    let assumptions_hold = check_assumptions(g, &geometry.pairs, &hyperplanes, DEFAULT_SUBSET_CAP).holds();
    if !assumptions_hold && options.require_assumptions {
        return Err(Error::AssumptionViolation("assumption (2) fails".into()));
    }
    let ring = PresentationRing::build(g, &geometry, forgetful)?;
    let degrees: Vec<u32> = (0..=max_degree).collect();
    let reports = par::map(options.exec, &degrees, |&k| degree_report(g, &ring, k));
    let passed = reports.iter().all(|r| r.matched);
    Ok(IsoReport { forgetful, assumptions_hold, max_degree, degrees: degrees.into_iter().zip(reports).collect(), passed })
}

fn degree_report(g: &GkmGraph, ring: &PresentationRing, k: u32) -> DegreeReport {
    let piece = cohomology_basis(g, k, ring.forgetful);
    let monomials = graded_piece_basis(ring.vars.len(), k);
    let images: Vec<Vec<BigInt>> = monomials.iter().map(|e| piece.vector(&ring.evaluate_monomial(e))).collect();
    let mut echelon = Echelon::new(piece.width());
    images.iter().for_each(|v| {
        echelon.insert(v);
    });
    let image_rank = echelon.rank();
    let lattice_match = hnf_basis(&images, piece.width()) == piece.basis;
    let target = monomials.len() - image_rank;

    let (ideal_rank, relations_vanish) = if ring.forgetful {
        let in_ideal: Vec<usize> = (0..monomials.len()).filter(|&i| ring.in_monomial_ideal(&monomials[i])).collect();
        let vanish = in_ideal.iter().all(|&i| images[i].iter().all(|c| c == &BigInt::from(0)));
        (in_ideal.len(), vanish)
    } else {
        let vanish = ring.relations.iter().filter(|r| r.degree() == Some(k)).all(|r| ring.evaluate(r).is_zero());
        let mut ideal = Echelon::new(monomials.len());
        'outer: for r in &ring.relations {
            let d = r.degree().unwrap_or(0);
            if d > k {
                continue;
            }
            for e in graded_piece_basis(ring.vars.len(), k - d) {
                if ideal.rank() >= target {
                    break 'outer;
                }
                let product = r * &IntPolynomial::monomial(&ring.vars, e, 1);
                ideal.insert(&product.coeff_vector(&monomials));
            }
        }
        (ideal.rank(), vanish)
    };
    let solver_rank = piece.rank();
    let rank_match = solver_rank == image_rank;
    let injective = ideal_rank == target;
    DegreeReport {
        solver_rank,
        image_rank,
        monomials: monomials.len(),
        ideal_rank,
        rank_match,
        injective,
        relations_vanish,
        lattice_match,
        matched: rank_match && injective && relations_vanish,
    }
}
