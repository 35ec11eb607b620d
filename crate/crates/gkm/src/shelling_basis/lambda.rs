use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exact_algebra::{solve_integral, IntMatrix};
use crate::gkm_graph::GkmGraph;
use crate::hyperplane_geometry::{Geometry, OrientedHyperplane};

/// `λ(L)` for the hyperplane at `index`, oriented by its positive
/// halfspace: the integer covector vanishing on the forgetful labels of
/// `L` and pairing to 1 with the normal `n_H(p)`, checked to be the same
/// at every vertex of `L`.
pub fn characteristic_function(g: &GkmGraph, geometry: &Geometry, index: usize) -> Result<Vec<i64>> {
    let oriented = &geometry.hyperplanes[index];
    let mut found: Option<Vec<i64>> = None;
    for &p in &oriented.hyperplane.vertices {
        let here = lambda_at(g, geometry, oriented, p)?;
        match &found {
            Some(prev) if *prev != here => return Err(Error::InconsistentLambda { hyperplane: oriented.hyperplane.name.clone() }),
            _ => found = Some(here),
        }
    }
    found.ok_or_else(|| Error::InconsistentLambda { hyperplane: oriented.hyperplane.name.clone() })
}

fn lambda_at(g: &GkmGraph, geometry: &Geometry, h: &OrientedHyperplane, p: usize) -> Result<Vec<i64>> {
    let n = g.rank();
    let inconsistent = || Error::InconsistentLambda { hyperplane: h.hyperplane.name.clone() };
    let normal = h.positive.normal(p).ok_or_else(inconsistent)?;
    let excluded = h.hyperplane.excluded[&p];
    let mut rows: Vec<Vec<BigInt>> = geometry
        .pairs
        .pairs_at(p)
        .iter()
        .filter(|&&pair| pair != excluded)
        .map(|&(a, _)| g.axial(a).forget().to_bigints())
        .collect();
    rows.push(g.axial(normal).forget().to_bigints());
    let mut rhs = vec![BigInt::from(0); n];
    rhs[n - 1] = BigInt::from(1);
    let m = IntMatrix::from_rows(rows, n)?;
    let solution = solve_integral(&m, &rhs)?.ok_or_else(inconsistent)?;
    solution.iter().map(|c| c.to_i64().ok_or_else(inconsistent)).collect()
}
