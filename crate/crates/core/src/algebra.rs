//! Finite-dimensional algebras over `F_p` presented by structure constants.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Deref;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{usage, Error, Result};
use crate::identities;
use crate::linalg::{Matrix, OperatorMatrix};
use crate::scalars::PrimeField;

/// Default bound on `p^dim` for exhaustive element enumeration.
pub const DEFAULT_CAP: u64 = 1 << 16;

/// Coordinates of an algebra element in the algebra's basis.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Element(Vec<u32>);

impl Element {
    pub fn zero(dim: usize) -> Self {
        Element(vec![0; dim])
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = vec![0; dim];
        v[i] = 1;
        Element(v)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    pub fn into_inner(self) -> Vec<u32> {
        self.0
    }

    pub fn as_mut_slice(&mut self) -> &mut [u32] {
        &mut self.0
    }

    pub fn add_assign(&mut self, other: &Element, field: PrimeField) {
        debug_assert_eq!(self.len(), other.len());
        for (a, &b) in self.0.iter_mut().zip(other.iter()) {
            *a = field.add(*a, b);
        }
    }

    pub fn sub_assign(&mut self, other: &Element, field: PrimeField) {
        debug_assert_eq!(self.len(), other.len());
        for (a, &b) in self.0.iter_mut().zip(other.iter()) {
            *a = field.sub(*a, b);
        }
    }

    /// `self += s·other`.
    pub fn axpy(&mut self, s: u32, other: &Element, field: PrimeField) {
        if s == 0 {
            return;
        }
        for (a, &b) in self.0.iter_mut().zip(other.iter()) {
            *a = field.add(*a, field.mul(s, b));
        }
    }

    pub fn scaled(&self, s: u32, field: PrimeField) -> Element {
        Element(self.0.iter().map(|&a| field.mul(a, s)).collect())
    }

    pub fn plus(&self, other: &Element, field: PrimeField) -> Element {
        let mut out = self.clone();
        out.add_assign(other, field);
        out
    }

    pub fn minus(&self, other: &Element, field: PrimeField) -> Element {
        let mut out = self.clone();
        out.sub_assign(other, field);
        out
    }

    /// Indices of nonzero coordinates.
    pub fn support(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.0.iter().enumerate().filter(|(_, &a)| a != 0).map(|(i, &a)| (i, a))
    }
}

impl Deref for Element {
    type Target = [u32];
    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl From<Vec<u32>> for Element {
    fn from(v: Vec<u32>) -> Self {
        Element(v)
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Structure constants of a bilinear operation, stored sparsely: for every
/// basis pair `(i, j)` the nonzero coordinates of `e_i ∘ e_j`.
#[derive(Clone, PartialEq, Eq)]
pub struct BilinearOp {
    dim: usize,
    offsets: Vec<u32>,
    entries: Vec<(u32, u32)>,
}

impl BilinearOp {
    pub fn zero(dim: usize) -> Self {
        BilinearOp {
            dim,
            offsets: vec![0; dim * dim + 1],
            entries: Vec::new(),
        }
    }

    /// Builds the operation from a rule giving the sparse product of each
    /// basis pair. Repeated output indices are summed.
    pub fn from_fn<F>(dim: usize, field: PrimeField, mut rule: F) -> Self
    where
        F: FnMut(usize, usize) -> Vec<(usize, u32)>,
    {
        let mut offsets = Vec::with_capacity(dim * dim + 1);
        let mut entries = Vec::new();
        offsets.push(0);
        let mut acc: BTreeMap<usize, u32> = BTreeMap::new();
        for i in 0..dim {
            for j in 0..dim {
                acc.clear();
                for (k, v) in rule(i, j) {
                    assert!(k < dim, "structure constant index out of range");
                    let e = acc.entry(k).or_insert(0);
                    *e = field.add(*e, field.reduce(v as u64));
                }
                entries.extend(acc.iter().filter(|(_, &v)| v != 0).map(|(&k, &v)| (k as u32, v)));
                offsets.push(entries.len() as u32);
            }
        }
        BilinearOp { dim, offsets, entries }
    }

    /// Builds the operation from `(i, j, k, value)` triples, rejecting
    /// duplicates and out-of-range indices.
    pub fn from_triples(dim: usize, field: PrimeField, triples: &[(usize, usize, usize, u64)]) -> Result<Self> {
        let mut table: BTreeMap<(usize, usize), Vec<(usize, u32)>> = BTreeMap::new();
        let mut seen = std::collections::BTreeSet::new();
        for &(i, j, k, v) in triples {
            if i >= dim || j >= dim || k >= dim {
                return Err(usage(format!(
                    "structure constant ({i}, {j}, {k}) out of range for dimension {dim}"
                )));
            }
            if !seen.insert((i, j, k)) {
                return Err(usage(format!("duplicate structure constant ({i}, {j}, {k})")));
            }
            table.entry((i, j)).or_default().push((k, field.reduce(v)));
        }
        Ok(BilinearOp::from_fn(dim, field, |i, j| {
            table.get(&(i, j)).cloned().unwrap_or_default()
        }))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Nonzero coordinates of `e_i ∘ e_j`, sorted by index.
    #[inline]
    pub fn row(&self, i: usize, j: usize) -> &[(u32, u32)] {
        let idx = i * self.dim + j;
        &self.entries[self.offsets[idx] as usize..self.offsets[idx + 1] as usize]
    }

    /// The structure constant `c[i][j][k]`.
    pub fn coeff(&self, i: usize, j: usize, k: usize) -> u32 {
        self.row(i, j)
            .iter()
            .find(|(kk, _)| *kk as usize == k)
            .map_or(0, |&(_, v)| v)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// All nonzero constants as `(i, j, k, value)`, in lexicographic order.
    pub fn triples(&self) -> Vec<(usize, usize, usize, u32)> {
        let mut out = Vec::with_capacity(self.entries.len());
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.extend(self.row(i, j).iter().map(|&(k, v)| (i, j, k as usize, v)));
            }
        }
        out
    }

    /// Bilinear evaluation `x ∘ y`.
    pub fn apply(&self, field: PrimeField, x: &[u32], y: &[u32]) -> Element {
        debug_assert_eq!(x.len(), self.dim);
        debug_assert_eq!(y.len(), self.dim);
        let p = field.p() as u64;
        let ys: Vec<(usize, u32)> = y
            .iter()
            .enumerate()
            .filter(|(_, &b)| b != 0)
            .map(|(j, &b)| (j, b))
            .collect();
        // Each summand is < p < 2^31 and there are at most dim² of them per
        // coordinate, so a u64 accumulator cannot overflow for dim < 2^16.
        let mut acc = vec![0u64; self.dim];
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for &(j, b) in &ys {
                let ab = field.mul(a, b) as u64;
                for &(k, c) in self.row(i, j) {
                    acc[k as usize] += ab * c as u64 % p;
                }
            }
        }
        Element(acc.into_iter().map(|v| (v % p) as u32).collect())
    }

    /// `(x, y) ↦ x∘y − y∘x`.
    pub fn antisymmetrized(&self, field: PrimeField) -> BilinearOp {
        BilinearOp::from_fn(self.dim, field, |i, j| {
            let mut out: Vec<(usize, u32)> = self.row(i, j).iter().map(|&(k, v)| (k as usize, v)).collect();
            out.extend(self.row(j, i).iter().map(|&(k, v)| (k as usize, field.neg(v))));
            out
        })
    }

    /// `(x, y) ↦ y ∘ x`.
    pub fn opposite(&self, field: PrimeField) -> BilinearOp {
        BilinearOp::from_fn(self.dim, field, |i, j| {
            self.row(j, i).iter().map(|&(k, v)| (k as usize, v)).collect()
        })
    }
}

impl fmt::Debug for BilinearOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BilinearOp")
            .field("dim", &self.dim)
            .field("triples", &self.triples())
            .finish()
    }
}

/// How an algebra's p-map is computed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PMap {
    /// Explicit values on all `p^dim` elements, in enumeration order.
    Table(Vec<Element>),
    /// `x ↦ (…((x∘x)∘x)…∘x)` with `p` factors.
    RightPower {
        op: String,
    },
    /// The `p`-th power in an associative product, by repeated squaring.
    MatrixPower {
        op: String,
    },
    Zero,
    /// The pure-tensor power formula on a tensor product `g ⊗ R` of the given
    /// factor dimensions, evaluated as the right power of `op`. Inputs that
    /// are not pure tensors are rejected.
    TensorFormula {
        op: String,
        gdim: usize,
        rdim: usize,
    },
    /// Basis values extended by `(αx)^[p] = α^p x^[p]` and the Jacobson sum
    /// formula, for a Lie bracket `op`.
    BasisJacobson {
        op: String,
        values: Vec<Element>,
    },
}

impl PMap {
    pub fn variant_name(&self) -> &'static str {
        match self {
            PMap::Table(_) => "table",
            PMap::RightPower { .. } => "right_power",
            PMap::MatrixPower { .. } => "matrix_power",
            PMap::Zero => "zero",
            PMap::TensorFormula { .. } => "tensor_formula",
            PMap::BasisJacobson { .. } => "basis_jacobson",
        }
    }
}

/// Degree data of a truncated graded algebra: products whose degrees add up
/// past `cap` were truncated to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    pub degrees: Vec<usize>,
    pub cap: usize,
}

/// A finite-dimensional algebra over `F_p` with named bilinear operations
/// and named p-maps. Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    field: PrimeField,
    dim: usize,
    ops: BTreeMap<String, BilinearOp>,
    pmaps: BTreeMap<String, PMap>,
    label: String,
    grading: Option<Grading>,
}

impl Algebra {
    pub fn new(field: PrimeField, dim: usize) -> Self {
        Algebra {
            field,
            dim,
            ops: BTreeMap::new(),
            pmaps: BTreeMap::new(),
            label: String::new(),
            grading: None,
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn with_grading(mut self, grading: Grading) -> Result<Self> {
        if grading.degrees.len() != self.dim {
            return Err(usage("grading length differs from the dimension"));
        }
        self.grading = Some(grading);
        Ok(self)
    }

    /// Adds (or replaces) a named operation.
    pub fn with_op(mut self, name: &str, op: BilinearOp) -> Result<Self> {
        if name.trim().is_empty() {
            return Err(usage("empty operation name"));
        }
        if op.dim() != self.dim {
            return Err(usage(format!(
                "operation `{name}` has dimension {}, algebra has {}",
                op.dim(),
                self.dim
            )));
        }
        self.ops.insert(name.to_string(), op);
        Ok(self)
    }

    /// Attaches a p-map after validating it against the algebra.
    pub fn with_pmap(mut self, name: &str, pmap: PMap) -> Result<Self> {
        if name.trim().is_empty() {
            return Err(usage("empty p-map name"));
        }
        match &pmap {
            PMap::Zero => {}
            PMap::RightPower { op } | PMap::MatrixPower { op } => {
                self.op(op)?;
            }
            PMap::Table(values) => {
                let size = self.element_count();
                if size > DEFAULT_CAP as u128 {
                    return Err(Error::CapExceeded { size, cap: DEFAULT_CAP });
                }
                if values.len() as u128 != size || values.iter().any(|v| v.len() != self.dim) {
                    return Err(usage(format!(
                        "p-map table must list {size} elements of dimension {}",
                        self.dim
                    )));
                }
            }
            PMap::TensorFormula { op, gdim, rdim } => {
                self.op(op)?;
                if gdim * rdim != self.dim {
                    return Err(usage(format!(
                        "tensor factors {gdim}×{rdim} do not match dimension {}",
                        self.dim
                    )));
                }
            }
            PMap::BasisJacobson { op, values } => {
                if values.len() != self.dim || values.iter().any(|v| v.len() != self.dim) {
                    return Err(usage("basis_jacobson needs one value per basis element"));
                }
                let bracket = self.op(op)?;
                if let Some(report) = identities::lie_witness(&self, op, bracket) {
                    return Err(Error::Usage(format!(
                        "basis_jacobson p-map on `{op}`, which is not a Lie bracket: {}",
                        report.summary()
                    )));
                }
            }
        }
        self.pmaps.insert(name.to_string(), pmap);
        Ok(self)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn p(&self) -> u32 {
        self.field.p()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn grading(&self) -> Option<&Grading> {
        self.grading.as_ref()
    }

    pub fn ops(&self) -> impl Iterator<Item = (&str, &BilinearOp)> {
        self.ops.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn pmaps(&self) -> impl Iterator<Item = (&str, &PMap)> {
        self.pmaps.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn has_op(&self, name: &str) -> bool {
        self.ops.contains_key(name)
    }

    pub fn op(&self, name: &str) -> Result<&BilinearOp> {
        if name.is_empty() {
            return Err(usage("empty operation name"));
        }
        self.ops
            .get(name)
            .ok_or_else(|| usage(format!("unknown operation `{name}`")))
    }

    pub fn pmap(&self, name: &str) -> Result<&PMap> {
        if name.is_empty() {
            return Err(usage("empty p-map name"));
        }
        self.pmaps
            .get(name)
            .ok_or_else(|| usage(format!("unknown p-map `{name}`")))
    }

    pub fn zero(&self) -> Element {
        Element::zero(self.dim)
    }

    pub fn basis(&self, i: usize) -> Element {
        Element::basis(self.dim, i)
    }

    pub fn element(&self, coords: &[u64]) -> Result<Element> {
        if coords.len() != self.dim {
            return Err(usage(format!(
                "element of length {} in an algebra of dimension {}",
                coords.len(),
                self.dim
            )));
        }
        Ok(Element(coords.iter().map(|&c| self.field.reduce(c)).collect()))
    }

    fn check_element(&self, x: &Element) -> Result<()> {
        if x.len() != self.dim {
            return Err(usage(format!(
                "element of length {} in an algebra of dimension {}",
                x.len(),
                self.dim
            )));
        }
        Ok(())
    }

    /// `x ∘ y` for the named operation.
    pub fn multiply(&self, op: &str, x: &Element, y: &Element) -> Result<Element> {
        let o = self.op(op)?;
        self.check_element(x)?;
        self.check_element(y)?;
        Ok(o.apply(self.field, x, y))
    }

    /// Like [`Algebra::multiply`], additionally reporting whether a nonzero
    /// pair of coordinates was truncated by the grading.
    pub fn multiply_tracked(&self, op: &str, x: &Element, y: &Element) -> Result<(Element, bool)> {
        let out = self.multiply(op, x, y)?;
        Ok((out, self.overflows(x, y)))
    }

    /// Whether some nonzero coordinate pair of `(x, y)` has total degree
    /// beyond the truncation cap.
    pub fn overflows(&self, x: &Element, y: &Element) -> bool {
        let Some(g) = &self.grading else {
            return false;
        };
        let dx = x.support().map(|(i, _)| g.degrees[i]).max();
        let dy = y.support().map(|(i, _)| g.degrees[i]).max();
        matches!((dx, dy), (Some(a), Some(b)) if a + b > g.cap)
    }

    /// Matrix of `y ↦ y ∘ x`: column `i` holds `e_i ∘ x`.
    pub fn right_mult_matrix(&self, op: &str, x: &Element) -> Result<OperatorMatrix> {
        let o = self.op(op)?;
        self.check_element(x)?;
        Ok(right_mult(o, self.field, x))
    }

    /// Matrix of `y ↦ x ∘ y`: column `i` holds `x ∘ e_i`.
    pub fn left_mult_matrix(&self, op: &str, x: &Element) -> Result<OperatorMatrix> {
        let o = self.op(op)?;
        self.check_element(x)?;
        Ok(left_mult(o, self.field, x))
    }

    /// Evaluates the named p-map at `x`.
    pub fn apply_pmap(&self, name: &str, x: &Element) -> Result<Element> {
        let pmap = self.pmap(name)?;
        self.check_element(x)?;
        let f = self.field;
        let p = f.p() as u64;
        match pmap {
            PMap::Zero => Ok(self.zero()),
            PMap::RightPower { op } => Ok(right_power(self.op(op)?, f, x, p)),
            PMap::MatrixPower { op } => Ok(square_power(self.op(op)?, f, x, p)),
            PMap::Table(values) => {
                let idx = element_rank(f, x);
                values
                    .get(idx as usize)
                    .cloned()
                    .ok_or_else(|| Error::Internal(format!("p-map table has no entry {idx}")))
            }
            PMap::TensorFormula { op, gdim, rdim } => {
                if !is_pure_tensor(f, x, *gdim, *rdim) {
                    return Err(usage(format!(
                        "{x} is not a pure tensor; the tensor formula is defined on pure tensors only"
                    )));
                }
                Ok(right_power(self.op(op)?, f, x, p))
            }
            PMap::BasisJacobson { op, values } => {
                let bracket = self.op(op)?;
                Ok(jacobson_extension(bracket, f, values, x))
            }
        }
    }

    /// `p^dim`, saturating.
    pub fn element_count(&self) -> u128 {
        element_count(self.field, self.dim)
    }

    /// All `p^dim` elements in lexicographic order (last coordinate fastest).
    pub fn enumerate_elements(&self, cap: u64) -> Result<ElementIter> {
        ElementIter::new(self.field, self.dim, cap)
    }

    /// `n` uniformly random elements from a seeded stream.
    pub fn sample_elements(&self, n: usize, seed: u64) -> Vec<Element> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..n).map(|_| random_element(&mut rng, self.field, self.dim)).collect()
    }
}

pub(crate) fn right_mult(op: &BilinearOp, field: PrimeField, x: &[u32]) -> Matrix {
    let n = op.dim();
    let mut m = Matrix::zeros(n, n);
    for (j, &a) in x.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for i in 0..n {
            for &(k, c) in op.row(i, j) {
                m.add_at(k as usize, i, field.mul(a, c), field);
            }
        }
    }
    m
}

pub(crate) fn left_mult(op: &BilinearOp, field: PrimeField, x: &[u32]) -> Matrix {
    let n = op.dim();
    let mut m = Matrix::zeros(n, n);
    for (j, &a) in x.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for i in 0..n {
            for &(k, c) in op.row(j, i) {
                m.add_at(k as usize, i, field.mul(a, c), field);
            }
        }
    }
    m
}

/// Left-iterated power `(…((x∘x)∘x)…∘x)` with `n ≥ 1` factors.
pub fn right_power(op: &BilinearOp, field: PrimeField, x: &[u32], n: u64) -> Element {
    let mut acc = Element::from(x.to_vec());
    for _ in 1..n {
        acc = op.apply(field, &acc, x);
    }
    acc
}

/// Right-iterated power `x∘(x∘(…∘x))` with `n ≥ 1` factors.
pub fn left_power(op: &BilinearOp, field: PrimeField, x: &[u32], n: u64) -> Element {
    let mut acc = Element::from(x.to_vec());
    for _ in 1..n {
        acc = op.apply(field, x, &acc);
    }
    acc
}

/// `x^n` by repeated squaring; only meaningful for associative `op`.
pub fn square_power(op: &BilinearOp, field: PrimeField, x: &[u32], mut n: u64) -> Element {
    assert!(n >= 1);
    let mut base = Element::from(x.to_vec());
    let mut acc: Option<Element> = None;
    while n > 0 {
        if n & 1 == 1 {
            acc = Some(match acc {
                None => base.clone(),
                Some(a) => op.apply(field, &a, &base),
            });
        }
        n >>= 1;
        if n > 0 {
            base = op.apply(field, &base, &base);
        }
    }
    acc.expect("n >= 1")
}

fn jacobson_extension(bracket: &BilinearOp, f: PrimeField, values: &[Element], x: &[u32]) -> Element {
    let dim = x.len();
    let p = f.p() as u64;
    let mut acc = Element::zero(dim);
    let mut acc_p = Element::zero(dim);
    for (i, &a) in x.iter().enumerate() {
        if a == 0 {
            continue;
        }
        let term = Element::basis(dim, i).scaled(a, f);
        let mut next = acc_p.clone();
        next.axpy(f.pow(a, p), &values[i], f);
        if !acc.is_zero() {
            let s = identities::jacobson_coefficients(f, &acc, &term, |u, v| bracket.apply(f, u, v));
            for si in &s.s {
                next.add_assign(si, f);
            }
        }
        acc.add_assign(&term, f);
        acc_p = next;
    }
    acc_p
}

/// Whether `x`, read as a `gdim × rdim` coefficient matrix, has rank ≤ 1.
pub fn is_pure_tensor(field: PrimeField, x: &[u32], gdim: usize, rdim: usize) -> bool {
    let Some(pivot) = x.iter().position(|&a| a != 0) else {
        return true;
    };
    let (pr, pc) = (pivot / rdim, pivot % rdim);
    let at = |r: usize, c: usize| x[r * rdim + c];
    // Rank one iff every 2×2 minor through the pivot vanishes.
    for r in 0..gdim {
        for c in 0..rdim {
            let lhs = field.mul(at(r, c), at(pr, pc));
            let rhs = field.mul(at(r, pc), at(pr, c));
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

pub fn element_count(field: PrimeField, dim: usize) -> u128 {
    let mut n: u128 = 1;
    for _ in 0..dim {
        n = n.saturating_mul(field.p() as u128);
    }
    n
}

/// Position of `x` in the lexicographic enumeration.
pub fn element_rank(field: PrimeField, x: &[u32]) -> u64 {
    x.iter().fold(0u64, |acc, &a| {
        acc.wrapping_mul(field.p() as u64).wrapping_add(a as u64)
    })
}

pub(crate) fn random_element<R: Rng>(rng: &mut R, field: PrimeField, dim: usize) -> Element {
    Element((0..dim).map(|_| rng.gen_range(0..field.p())).collect())
}

/// Restartable lexicographic enumeration of `F_p^dim`.
#[derive(Clone, Debug)]
pub struct ElementIter {
    field: PrimeField,
    next: Option<Vec<u32>>,
}

impl ElementIter {
    pub fn new(field: PrimeField, dim: usize, cap: u64) -> Result<Self> {
        let size = element_count(field, dim);
        if size > cap as u128 {
            return Err(Error::CapExceeded { size, cap });
        }
        Ok(ElementIter {
            field,
            next: Some(vec![0; dim]),
        })
    }
}

impl Iterator for ElementIter {
    type Item = Element;

    fn next(&mut self) -> Option<Element> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let p = self.field.p();
        let mut carry = true;
        for a in succ.iter_mut().rev() {
            *a += 1;
            if *a == p {
                *a = 0;
            } else {
                carry = false;
                break;
            }
        }
        if !carry {
            self.next = Some(succ);
        }
        Some(Element(current))
    }
}
