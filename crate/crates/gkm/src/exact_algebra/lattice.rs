use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;

use super::poly::IntPolynomial;
use super::AlgebraError;

/// Largest absolute coordinate accepted from external input. Keeps every
/// sum and difference of a few lattice vectors inside `i64`.
pub const MAX_COORD: i64 = 1 << 40;

/// An element of `Z^n ⊕ Z x`. The last coordinate is the residual `x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector(Vec<i64>);

impl LatticeVector {
    pub fn new(coords: Vec<i64>) -> Self {
        LatticeVector(coords)
    }

    pub fn zero(len: usize) -> Self {
        LatticeVector(vec![0; len])
    }

    /// The `i`-th standard basis vector.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = vec![0; len];
        v[i] = 1;
        LatticeVector(v)
    }

    /// The residual basis vector `x = (0, ..., 0, 1)`.
    pub fn residual(len: usize) -> Self {
        Self::unit(len, len - 1)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(i64, i64) -> Option<i64>) -> Self {
        assert_eq!(self.len(), other.len(), "lattice vectors of different length");
        LatticeVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| f(a, b).expect("lattice coordinate overflow"))
                .collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, i64::checked_add)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, i64::checked_sub)
    }

    pub fn neg(&self) -> Self {
        LatticeVector(self.0.iter().map(|&c| c.checked_neg().expect("lattice coordinate overflow")).collect())
    }

    pub fn scale(&self, k: i64) -> Self {
        LatticeVector(self.0.iter().map(|&c| c.checked_mul(k).expect("lattice coordinate overflow")).collect())
    }

    /// The x-forgetful image: drops the last coordinate.
    pub fn forget(&self) -> Self {
        LatticeVector(self.0[..self.0.len() - 1].to_vec())
    }

    pub fn gcd(&self) -> i64 {
        self.0.iter().fold(0i64, |g, &c| g.gcd(&c))
    }

    /// True when the coordinates have gcd one.
    pub fn is_primitive(&self) -> bool {
        self.gcd() == 1
    }

    /// Returns `c` with `self = c * other`, if such an integer exists.
    pub fn multiple_of(&self, other: &Self) -> Option<i64> {
        assert_eq!(self.len(), other.len(), "lattice vectors of different length");
        if other.is_zero() {
            return if self.is_zero() { Some(0) } else { None };
        }
        let (i, &d) = other.0.iter().enumerate().find(|(_, &c)| c != 0)?;
        if self.0[i] % d != 0 {
            return None;
        }
        let c = self.0[i] / d;
        if self.0.iter().zip(&other.0).all(|(&a, &b)| b.checked_mul(c) == Some(a)) {
            Some(c)
        } else {
            None
        }
    }

    pub fn dot(&self, other: &[i64]) -> i64 {
        assert_eq!(self.len(), other.len(), "pairing of different length");
        self.0.iter().zip(other).map(|(&a, &b)| a * b).sum()
    }

    pub fn to_bigints(&self) -> Vec<BigInt> {
        self.0.iter().map(|&c| BigInt::from(c)).collect()
    }

    /// The linear form `sum c_i v_i` in a polynomial ring whose first
    /// `len()` variables correspond to the coordinates.
    pub fn to_linear(&self, vars: &Arc<Vec<String>>) -> IntPolynomial {
        IntPolynomial::linear(vars, &self.0)
    }

    pub fn check_len(&self, len: usize) -> Result<(), AlgebraError> {
        if self.len() == len {
            Ok(())
        } else {
            Err(AlgebraError::DimensionMismatch { expected: len, found: self.len() })
        }
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<i64>> for LatticeVector {
    fn from(v: Vec<i64>) -> Self {
        LatticeVector(v)
    }
}
