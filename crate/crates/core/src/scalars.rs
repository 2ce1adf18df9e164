//! Prime-field arithmetic and λ-polynomials with algebra-element coefficients.
//!
//! Hot loops work on raw `u32` residues through [`PrimeField`]; [`Fp`] is the
//! self-describing scalar used at API boundaries where mixing moduli must be
//! caught.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::Element;
use crate::error::{usage, Error, Result};

/// Largest modulus accepted. Products of two residues fit in a `u64`.
pub const MAX_PRIME: u64 = 1 << 31;

/// The prime field `F_p`, carried by value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct PrimeField {
    p: u32,
}

impl TryFrom<u32> for PrimeField {
    type Error = Error;
    fn try_from(p: u32) -> Result<Self> {
        PrimeField::new(p as u64)
    }
}

impl From<PrimeField> for u32 {
    fn from(f: PrimeField) -> u32 {
        f.p
    }
}

/// Trial division; adequate for moduli up to 2^31.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p > MAX_PRIME {
            return Err(Error::Domain(format!("modulus {p} exceeds 2^31")));
        }
        if !is_prime(p) {
            return Err(Error::Domain(format!("{p} is not prime")));
        }
        Ok(PrimeField { p: p as u32 })
    }

    #[inline]
    pub fn p(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(self, v: u64) -> u32 {
        (v % self.p as u64) as u32
    }

    /// Reduces a signed integer into `[0, p)`.
    pub fn from_i64(self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        if s >= self.p as u64 {
            (s - self.p as u64) as u32
        } else {
            s as u32
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            (a as u64 + self.p as u64 - b as u64) as u32
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(self, a: u32, mut n: u64) -> u32 {
        let mut base = a;
        let mut acc = 1 % self.p;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            n >>= 1;
        }
        acc
    }

    /// Inverse by Fermat's little theorem.
    pub fn inv(self, a: u32) -> Result<u32> {
        if a.is_multiple_of(self.p) {
            return Err(Error::Domain("inverse of zero".into()));
        }
        Ok(self.pow(a, self.p as u64 - 2))
    }

    /// `n!` reduced mod p.
    pub fn factorial(self, n: u64) -> u32 {
        (1..=n).fold(1 % self.p, |acc, k| self.mul(acc, self.reduce(k)))
    }

    pub fn scalar(self, v: u64) -> Fp {
        Fp {
            value: self.reduce(v),
            p: self.p,
        }
    }
}

/// A residue together with its modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u32,
    p: u32,
}

/// The arithmetic operations of [`fp_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FpOp {
    Add,
    Sub,
    Mul,
    /// Inverts the first operand; the second is ignored.
    Inv,
    /// Raises the first operand to the given exponent; the second is ignored.
    Pow(u64),
}

impl Fp {
    pub fn new(value: u64, p: u64) -> Result<Self> {
        Ok(PrimeField::new(p)?.scalar(value))
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> u32 {
        self.p
    }

    pub fn field(self) -> PrimeField {
        PrimeField { p: self.p }
    }

    fn same_field(self, other: Fp) -> Result<PrimeField> {
        if self.p != other.p {
            return Err(usage(format!("modulus mismatch: {} vs {}", self.p, other.p)));
        }
        Ok(self.field())
    }

    fn with(self, value: u32) -> Fp {
        Fp { value, p: self.p }
    }

    pub fn checked_add(self, other: Fp) -> Result<Fp> {
        let f = self.same_field(other)?;
        Ok(self.with(f.add(self.value, other.value)))
    }

    pub fn checked_sub(self, other: Fp) -> Result<Fp> {
        let f = self.same_field(other)?;
        Ok(self.with(f.sub(self.value, other.value)))
    }

    pub fn checked_mul(self, other: Fp) -> Result<Fp> {
        let f = self.same_field(other)?;
        Ok(self.with(f.mul(self.value, other.value)))
    }

    pub fn inv(self) -> Result<Fp> {
        Ok(self.with(self.field().inv(self.value)?))
    }

    pub fn pow(self, n: u64) -> Fp {
        self.with(self.field().pow(self.value, n))
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.p)
    }
}

/// Dispatches one of the field operations on a pair of scalars.
pub fn fp_arith(a: Fp, b: Fp, op: FpOp) -> Result<Fp> {
    a.same_field(b)?;
    match op {
        FpOp::Add => a.checked_add(b),
        FpOp::Sub => a.checked_sub(b),
        FpOp::Mul => a.checked_mul(b),
        FpOp::Inv => a.inv(),
        FpOp::Pow(n) => Ok(a.pow(n)),
    }
}

/// A polynomial in a formal variable λ whose coefficients are algebra
/// elements. Index `i` holds the coefficient of λ^i; trailing zeros are
/// trimmed so the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaPoly {
    dim: usize,
    coeffs: Vec<Element>,
}

impl LambdaPoly {
    pub fn zero(dim: usize) -> Self {
        LambdaPoly {
            dim,
            coeffs: Vec::new(),
        }
    }

    pub fn new(dim: usize, coeffs: Vec<Element>) -> Result<Self> {
        if let Some(c) = coeffs.iter().find(|c| c.len() != dim) {
            return Err(usage(format!(
                "coefficient of length {} in a λ-polynomial over dimension {dim}",
                c.len()
            )));
        }
        let mut poly = LambdaPoly { dim, coeffs };
        poly.trim();
        Ok(poly)
    }

    /// The constant polynomial `c`.
    pub fn constant(c: Element) -> Self {
        let dim = c.len();
        let mut poly = LambdaPoly { dim, coeffs: vec![c] };
        poly.trim();
        poly
    }

    /// `λ·a + b`.
    pub fn linear(a: Element, b: Element) -> Result<Self> {
        let dim = b.len();
        LambdaPoly::new(dim, vec![b, a])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Element::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in λ; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of λ^i (zero past the degree).
    pub fn coeff(&self, i: usize) -> Element {
        self.coeffs.get(i).cloned().unwrap_or_else(|| Element::zero(self.dim))
    }

    pub fn coeffs(&self) -> &[Element] {
        &self.coeffs
    }

    /// Extends a bilinear operation to λ-polynomials: the λ^k coefficient of
    /// the result is `Σ_{i+j=k} op(self_i, other_j)`.
    pub fn bracket<F>(&self, other: &LambdaPoly, field: PrimeField, op: F) -> Result<LambdaPoly>
    where
        F: Fn(&Element, &Element) -> Element,
    {
        if self.dim != other.dim {
            return Err(usage(format!(
                "λ-polynomials over dimensions {} and {}",
                self.dim, other.dim
            )));
        }
        if self.is_zero() || other.is_zero() {
            return Ok(LambdaPoly::zero(self.dim));
        }
        let mut out = vec![Element::zero(self.dim); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let prod = op(a, b);
                out[i + j].add_assign(&prod, field);
            }
        }
        LambdaPoly::new(self.dim, out)
    }
}

/// Free-function form of [`LambdaPoly::bracket`].
pub fn lambda_poly_bracket<F>(p: &LambdaPoly, q: &LambdaPoly, field: PrimeField, bracket: F) -> Result<LambdaPoly>
where
    F: Fn(&Element, &Element) -> Element,
{
    p.bracket(q, field, bracket)
}
