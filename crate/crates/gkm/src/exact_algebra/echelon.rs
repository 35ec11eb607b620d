//! Incremental row echelon form over Q with primitive integer rows.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Rows with distinct leading positions, kept primitive and sorted by
/// leading position. Used to grow a rank incrementally.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    width: usize,
    rows: Vec<(usize, Vec<BigInt>)>,
}

impl Echelon {
    pub fn new(width: usize) -> Self {
        Echelon { width, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Reduces `v` against the stored rows; the result vanishes at every
    /// stored leading position.
    pub fn reduce(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.width, "vector of wrong width");
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let (a, b) = (row[*p].clone(), v[*p].clone());
            for (x, r) in v.iter_mut().zip(row) {
                *x = &a * &*x - &b * r;
            }
            make_primitive(&mut v);
        }
        v
    }

    /// True when `v` lies in the rational span of the stored rows.
    pub fn spans(&self, v: &[BigInt]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Adds `v`; returns whether it raised the rank.
    pub fn insert(&mut self, v: &[BigInt]) -> bool {
        let mut r = self.reduce(v);
        let Some(lead) = r.iter().position(|x| !x.is_zero()) else { return false };
        if r[lead].is_negative() {
            r.iter_mut().for_each(|x| *x = -&*x);
        }
        let at = self.rows.partition_point(|(p, _)| *p < lead);
        self.rows.insert(at, (lead, r));
        true
    }
}

fn make_primitive(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g > BigInt::from(1) {
        v.iter_mut().for_each(|x| *x = &*x / &g);
    }
}

/// Rank over Q of a list of integer vectors of width `width`.
pub fn rational_rank(vectors: &[Vec<BigInt>], width: usize) -> usize {
    let mut e = Echelon::new(width);
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn rank_grows_only_on_new_directions() {
        let mut e = Echelon::new(3);
        assert!(e.insert(&v(&[2, 4, 0])));
        assert!(!e.insert(&v(&[1, 2, 0])));
        assert!(e.insert(&v(&[0, 3, 1])));
        assert!(e.spans(&v(&[2, 7, 1])));
        assert!(!e.spans(&v(&[0, 0, 1])));
        assert_eq!(e.rank(), 2);
    }

    #[test]
    fn rational_rank_of_dependent_rows() {
        assert_eq!(rational_rank(&[v(&[1, 1]), v(&[2, 2]), v(&[0, 0])], 2), 1);
        assert_eq!(rational_rank(&[], 4), 0);
    }
}
