//! Independent rank oracles working modulo a prime.
//!
//! A degree-`k` class is a tuple of homogeneous polynomials; here it is
//! represented by its values at random points, which is injective on each
//! graded piece with overwhelming probability. Divisibility of `f_p - f_q`
//! by a linear form `ℓ` is tested as vanishing of `f_p - f_q` on `ℓ = 0`.
#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use gkm::exact_algebra::{graded_piece_basis, Exponent, LatticeVector};
use gkm::gkm_graph::GkmGraph;
use gkm::hyperplane_geometry::{thom_class, Geometry};

pub const P: i64 = 1_000_000_007;

fn pow_mod(mut b: i64, mut e: u32) -> i64 {
    b = b.rem_euclid(P);
    let mut r = 1i64;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    r
}

fn inv(a: i64) -> i64 {
    pow_mod(a, (P - 2) as u32)
}

pub fn eval_monomial(e: &Exponent, point: &[i64]) -> i64 {
    e.iter().zip(point).fold(1, |acc, (&k, &x)| acc * pow_mod(x, k) % P)
}

pub fn eval_linear(l: &[i64], point: &[i64]) -> i64 {
    l.iter().zip(point).fold(0, |acc, (&a, &x)| (acc + a.rem_euclid(P) * x.rem_euclid(P)) % P)
}

/// Rank of a matrix over `Z/P` by Gaussian elimination.
pub fn rank_mod_p(mut rows: Vec<Vec<i64>>) -> usize {
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][c] % P != 0) else { continue };
        rows.swap(rank, pivot);
        let iv = inv(rows[rank][c]);
        let pivot_row: Vec<i64> = rows[rank].iter().map(|&x| x * iv % P).collect();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[c] != 0 {
                let f = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x - f * y).rem_euclid(P);
                }
            }
        }
        rows[rank] = pivot_row;
        rank += 1;
    }
    rank
}

fn label(g: &GkmGraph, d: usize, forgetful: bool) -> Vec<i64> {
    let a = g.axial(d);
    if forgetful {
        a.forget().coords().to_vec()
    } else {
        a.coords().to_vec()
    }
}

/// Integer basis of `{w : ℓ·w = 0}` for a nonzero `ℓ`.
fn perp_basis(l: &[i64]) -> Vec<Vec<i64>> {
    let n = l.len();
    let pivot = (0..n).find(|&i| l[i] != 0).expect("nonzero label");
    (0..n)
        .filter(|&j| j != pivot)
        .map(|j| {
            let mut w = vec![0; n];
            w[j] = l[pivot];
            w[pivot] = -l[j];
            w
        })
        .collect()
}

/// Points of `ℓ = 0` on which a degree-`k` form vanishes only if it is zero
/// on all of `ℓ = 0` (for a hyperplane of dimension at most 2).
fn test_points(l: &[i64], k: u32) -> Vec<Vec<i64>> {
    let basis = perp_basis(l);
    match basis.len() {
        0 => vec![vec![0; l.len()]],
        1 => vec![basis[0].clone()],
        2 => (0..=k as i64).map(|j| basis[0].iter().zip(&basis[1]).map(|(a, b)| a + j * b).collect()).collect(),
        d => panic!("oracle supports hyperplanes of dimension at most 2, got {d}"),
    }
}

/// Rank of the degree-`k` piece of the graph cohomology, from the edge
/// divisibility conditions alone.
pub fn solver_rank(g: &GkmGraph, k: u32, forgetful: bool) -> usize {
    let nv = if forgetful { g.rank() } else { g.rank() + 1 };
    let monomials = graded_piece_basis(nv, k);
    let m = monomials.len();
    let unknowns = g.num_vertices() * m;
    let mut rows = Vec::new();
    for e in g.edges() {
        let d = g.dart(e);
        let (p, q) = (d.from, d.to.unwrap());
        if p > q {
            continue;
        }
        for w in test_points(&label(g, e, forgetful), k) {
            let mut row = vec![0; unknowns];
            for (j, mono) in monomials.iter().enumerate() {
                let v = eval_monomial(mono, &w);
                row[p * m + j] = (row[p * m + j] + v) % P;
                row[q * m + j] = (row[q * m + j] - v).rem_euclid(P);
            }
            rows.push(row);
        }
    }
    unknowns - if rows.is_empty() { 0 } else { rank_mod_p(rows) }
}

/// Degree-1 generators of the presentation: `χ` and both Thom classes of
/// every hyperplane, or the forgetful hyperplane classes.
pub fn generators(g: &GkmGraph, forgetful: bool) -> Vec<Vec<LatticeVector>> {
    let geometry = Geometry::build(g).expect("assumption (1) holds");
    let mut out = Vec::new();
    if !forgetful {
        out.push(vec![g.residual(); g.num_vertices()]);
    }
    for h in &geometry.hyperplanes {
        let sides = if forgetful { vec![&h.positive] } else { vec![&h.positive, &h.negative] };
        for side in sides {
            let t = thom_class(g, side).unwrap();
            out.push((0..g.num_vertices()).map(|v| if forgetful { t.value(v).forget() } else { t.value(v).clone() }).collect());
        }
    }
    out
}

fn multisets(n: usize, k: u32) -> Vec<Vec<usize>> {
    fn go(n: usize, k: u32, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(n, k - 1, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Rank of the span of all degree-`k` products of the generators.
pub fn image_rank(g: &GkmGraph, k: u32, forgetful: bool) -> usize {
    let gens = generators(g, forgetful);
    let nv = if forgetful { g.rank() } else { g.rank() + 1 };
    let npoints = graded_piece_basis(nv, k).len() + 2;
    let mut rng = StdRng::seed_from_u64(0x5eed + k as u64);
    let points: Vec<Vec<i64>> = (0..npoints).map(|_| (0..nv).map(|_| rng.random_range(1..P)).collect()).collect();
    let rows: Vec<Vec<i64>> = multisets(gens.len(), k)
        .into_iter()
        .map(|factors| {
            let (gens, factors) = (&gens, &factors);
            (0..g.num_vertices())
                .flat_map(|v| points.iter().map(move |z| factors.iter().fold(1, |acc, &i| acc * eval_linear(gens[i][v].coords(), z) % P)))
                .collect()
        })
        .collect();
    rank_mod_p(rows)
}
