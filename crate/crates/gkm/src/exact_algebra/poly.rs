//! Multivariate polynomials over Z with arbitrary-precision coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::AlgebraError;

pub type Exponent = Vec<u32>;

/// Shared, ordered variable-name table.
pub type Vars = Arc<Vec<String>>;

pub fn vars<S: AsRef<str>>(names: &[S]) -> Vars {
    Arc::new(names.iter().map(|s| s.as_ref().to_string()).collect())
}

/// A polynomial as a map from exponent vectors to nonzero coefficients.
#[derive(Clone, Debug)]
pub struct IntPolynomial {
    vars: Vars,
    terms: BTreeMap<Exponent, BigInt>,
}

impl PartialEq for IntPolynomial {
    fn eq(&self, other: &Self) -> bool {
        same_vars(&self.vars, &other.vars) && self.terms == other.terms
    }
}

impl Eq for IntPolynomial {}

fn same_vars(a: &Vars, b: &Vars) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl IntPolynomial {
    pub fn zero(vars: &Vars) -> Self {
        IntPolynomial { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &Vars, c: impl Into<BigInt>) -> Self {
        Self::monomial(vars, vec![0; vars.len()], c)
    }

    pub fn one(vars: &Vars) -> Self {
        Self::constant(vars, 1)
    }

    /// The `i`-th variable.
    pub fn var(vars: &Vars, i: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Self::monomial(vars, e, 1)
    }

    pub fn monomial(vars: &Vars, exponent: Exponent, c: impl Into<BigInt>) -> Self {
        assert_eq!(exponent.len(), vars.len(), "exponent length differs from variable count");
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponent, c);
        }
        IntPolynomial { vars: vars.clone(), terms }
    }

    /// `sum coeffs[i] * var_i`; `coeffs` may be shorter than the table.
    pub fn linear(vars: &Vars, coeffs: &[i64]) -> Self {
        assert!(coeffs.len() <= vars.len(), "more coefficients than variables");
        let mut p = Self::zero(vars);
        for (i, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                let mut e = vec![0; vars.len()];
                e[i] = 1;
                p.terms.insert(e, BigInt::from(c));
            }
        }
        p
    }

    pub fn from_terms(vars: &Vars, terms: impl IntoIterator<Item = (Exponent, BigInt)>) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent length differs from variable count");
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Exponent, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lexicographic order of exponents.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: &[u32]) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous_of(&self, k: u32) -> bool {
        self.terms.keys().all(|e| e.iter().sum::<u32>() == k)
    }

    pub fn homogeneous_part(&self, k: u32) -> Self {
        IntPolynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().filter(|(e, _)| e.iter().sum::<u32>() == k).map(|(e, c)| (e.clone(), c.clone())).collect(),
        }
    }

    fn check_vars(&self, other: &Self) -> Result<(), AlgebraError> {
        if same_vars(&self.vars, &other.vars) {
            Ok(())
        } else {
            Err(AlgebraError::VariableMismatch { left: self.vars.to_vec(), right: other.vars.to_vec() })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_vars(other)?;
        let mut out = Self::zero(&self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Exponent = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(&self.vars);
        }
        IntPolynomial { vars: self.vars.clone(), terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(&self.vars);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`
    /// in `Z[vars]`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        self.check_vars(d).ok()?;
        let (lead_e, lead_c) = d.terms.iter().next_back()?;
        let mut rest = self.clone();
        let mut quotient = Self::zero(&self.vars);
        while let Some((e, c)) = rest.terms.iter().next_back() {
            if e.iter().zip(lead_e).any(|(a, b)| a < b) {
                return None;
            }
            let (q, r) = c.div_rem(lead_c);
            if !r.is_zero() {
                return None;
            }
            let qe: Exponent = e.iter().zip(lead_e).map(|(a, b)| a - b).collect();
            let step = Self::monomial(&self.vars, qe, q);
            rest = &rest - &(&step * d);
            quotient = &quotient + &step;
        }
        Some(quotient)
    }

    /// Substitutes `images[i]` for variable `i`. All images share one
    /// target table.
    pub fn substitute(&self, images: &[IntPolynomial], target: &Vars) -> Self {
        assert_eq!(images.len(), self.nvars(), "one image per variable required");
        let mut out = Self::zero(target);
        let mut powers: Vec<Vec<IntPolynomial>> = images.iter().map(|p| vec![Self::one(target), p.clone()]).collect();
        for (e, c) in &self.terms {
            let mut term = Self::constant(target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while powers[i].len() <= k as usize {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][k as usize];
            }
            out = &out + &term;
        }
        out
    }

    /// Evaluates all variables at integers.
    pub fn eval(&self, point: &[BigInt]) -> BigInt {
        assert_eq!(point.len(), self.nvars(), "one value per variable required");
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter().zip(point).fold(c.clone(), |acc, (&k, v)| acc * num_traits::pow(v.clone(), k as usize))
            })
            .sum()
    }

    /// Re-expresses the polynomial over a larger table that lists the
    /// current variables first, in order.
    pub fn embed(&self, target: &Vars) -> Self {
        assert!(target.len() >= self.nvars() && target[..self.nvars()] == self.vars[..], "target must extend the table");
        let pad = target.len() - self.nvars();
        IntPolynomial {
            vars: target.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.extend(std::iter::repeat_n(0, pad));
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// Coefficients of the homogeneous degree-`k` part in the order of
    /// `basis` (see [`graded_piece_basis`]).
    pub fn coeff_vector(&self, basis: &[Exponent]) -> Vec<BigInt> {
        basis.iter().map(|e| self.coeff(e)).collect()
    }

    pub fn from_coeff_vector(vars: &Vars, basis: &[Exponent], v: &[BigInt]) -> Self {
        Self::from_terms(vars, basis.iter().cloned().zip(v.iter().cloned()))
    }

    pub fn parse(vars: &Vars, text: &str) -> Result<Self, AlgebraError> {
        Parser::new(vars, text).parse()
    }
}

impl fmt::Display for IntPolynomial {
    /// Canonical form: terms in descending lexicographic order of exponents.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let factors: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(v, &k)| if k == 1 { self.vars[v].clone() } else { format!("{}^{}", self.vars[v], k) })
                .collect();
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&IntPolynomial> for &IntPolynomial {
            type Output = IntPolynomial;
            /// Panics if the variable tables differ; use the `checked_`
            /// method to get an error instead.
            fn $method(self, rhs: &IntPolynomial) -> IntPolynomial {
                self.$checked(rhs).expect("polynomials over different variable tables")
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial { vars: self.vars.clone(), terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}

/// All exponent vectors of `nvars` variables with total degree `degree`,
/// in descending lexicographic order.
pub fn graded_piece_basis(nvars: usize, degree: u32) -> Vec<Exponent> {
    if nvars == 0 {
        return if degree == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in (0..=degree).rev() {
        for mut tail in graded_piece_basis(nvars - 1, degree - first) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

/// Position lookup for a [`graded_piece_basis`].
pub fn basis_index(basis: &[Exponent]) -> std::collections::HashMap<Exponent, usize> {
    basis.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect()
}

struct Parser<'a> {
    vars: &'a Vars,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(vars: &'a Vars, text: &str) -> Self {
        Parser { vars, chars: text.chars().collect(), pos: 0 }
    }

    fn err(&self, message: impl Into<String>) -> AlgebraError {
        AlgebraError::Parse { position: self.pos, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn parse(mut self) -> Result<IntPolynomial, AlgebraError> {
        let p = self.expr()?;
        if self.peek().is_some() {
            return Err(self.err("unexpected trailing input"));
        }
        Ok(p)
    }

    fn expr(&mut self) -> Result<IntPolynomial, AlgebraError> {
        let mut acc = IntPolynomial::zero(self.vars);
        let mut sign = match self.peek() {
            Some('-') => {
                self.pos += 1;
                -1
            }
            Some('+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign < 0 { &acc - &t } else { &acc + &t };
            match self.peek() {
                Some('+') => sign = 1,
                Some('-') => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<IntPolynomial, AlgebraError> {
        let mut acc = self.power()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            let f = self.power()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<IntPolynomial, AlgebraError> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let k = self.integer()?;
            let k: u32 = k.try_into().map_err(|_| self.err("exponent out of range"))?;
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt, AlgebraError> {
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| self.err("invalid integer"))
    }

    fn atom(&mut self) -> Result<IntPolynomial, AlgebraError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let p = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(p)
            }
            Some(c) if c.is_ascii_digit() => Ok(IntPolynomial::constant(self.vars, self.integer()?)),
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                while self.pos < self.chars.len() && (self.chars[self.pos].is_alphanumeric() || self.chars[self.pos] == '_') {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                let i = self.vars.iter().position(|v| *v == name).ok_or_else(|| AlgebraError::UnknownVariable(name.clone()))?;
                Ok(IntPolynomial::var(self.vars, i))
            }
            _ => Err(self.err("expected a number, variable or '('")),
        }
    }
}
