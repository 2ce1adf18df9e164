//! Degree-truncated free algebras and quotients by truncated two-sided ideals.
//!
//! Products whose degree exceeds the cap are zero; [`Algebra::overflows`]
//! on the dense form reports when that happened.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{right_power, Algebra, BilinearOp, Element, Grading};
use crate::error::{usage, Error, Result};
use crate::identities::check_restricted_leibniz;
use crate::linalg::{Echelon, Matrix};
use crate::report::{CheckReport, Checker, SweepConfig};
use crate::scalars::PrimeField;

/// Largest basis a truncated free algebra may have.
pub const FREE_BASIS_BOUND: usize = 4096;

/// A monomial `u ⊗ a ⊗ v` of the free diassociative algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DiasMonomial {
    pub left: Vec<usize>,
    pub center: usize,
    pub right: Vec<usize>,
}

impl DiasMonomial {
    pub fn generator(g: usize) -> Self {
        DiasMonomial {
            left: Vec::new(),
            center: g,
            right: Vec::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.left.len() + 1 + self.right.len()
    }

    /// `(u,a,v) ⊣ (u',a',v') = (u, a, v·u'·a'·v')`.
    pub fn left_product(&self, other: &DiasMonomial) -> DiasMonomial {
        let mut right = self.right.clone();
        right.extend(&other.left);
        right.push(other.center);
        right.extend(&other.right);
        DiasMonomial {
            left: self.left.clone(),
            center: self.center,
            right,
        }
    }

    /// `(u,a,v) ⊢ (u',a',v') = (u·a·v·u', a', v')`.
    pub fn right_product(&self, other: &DiasMonomial) -> DiasMonomial {
        let mut left = self.left.clone();
        left.push(self.center);
        left.extend(&self.right);
        left.extend(&other.left);
        DiasMonomial {
            left,
            center: other.center,
            right: other.right.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Monomial {
    Dias(DiasMonomial),
    /// A plain word; the empty word is the unit of the associative kind.
    Word(Vec<usize>),
}

impl Monomial {
    pub fn degree(&self) -> usize {
        match self {
            Monomial::Dias(m) => m.degree(),
            Monomial::Word(w) => w.len(),
        }
    }
}

/// Which free structure a [`GradedBasisAlgebra`] carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FreeKind {
    /// Operations `left` and `right` on `T(V) ⊗ V ⊗ T(V)`.
    Dias,
    /// Concatenation `assoc` on all words, including the empty one.
    Assoc,
    /// Half-shuffle `zinbiel` on nonempty words.
    Zinbiel,
}

impl FreeKind {
    pub fn ops(self) -> &'static [&'static str] {
        match self {
            FreeKind::Dias => &["left", "right"],
            FreeKind::Assoc => &["assoc"],
            FreeKind::Zinbiel => &["zinbiel"],
        }
    }
}

/// A truncated free algebra with its monomial basis, ordered by degree and
/// then lexicographically.
#[derive(Clone, Debug)]
pub struct GradedBasisAlgebra {
    kind: FreeKind,
    generators: usize,
    cap: usize,
    letters: Vec<String>,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    alg: Algebra,
}

fn words(g: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..g).map(move |a| {
                    let mut w2 = w.clone();
                    w2.push(a);
                    w2
                })
            })
            .collect();
    }
    out
}

fn default_letters(g: usize) -> Vec<String> {
    const NAMES: [&str; 4] = ["x", "y", "z", "w"];
    if g <= NAMES.len() {
        NAMES[..g].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=g).map(|i| format!("x{i}")).collect()
    }
}

/// Shuffle product of two words, as word ↦ multiplicity.
fn shuffle(a: &[usize], b: &[usize]) -> BTreeMap<Vec<usize>, u64> {
    let mut out = BTreeMap::new();
    if a.is_empty() || b.is_empty() {
        out.insert([a, b].concat(), 1);
        return out;
    }
    for (first, rest_a, rest_b) in [(a[0], &a[1..], b), (b[0], a, &b[1..])] {
        for (w, c) in shuffle(rest_a, rest_b) {
            let mut word = Vec::with_capacity(w.len() + 1);
            word.push(first);
            word.extend(w);
            *out.entry(word).or_insert(0) += c;
        }
    }
    out
}

/// Half-shuffle `u ≺ v = u₁·(u_rest ш v)`.
pub fn half_shuffle(u: &[usize], v: &[usize]) -> BTreeMap<Vec<usize>, u64> {
    assert!(!u.is_empty(), "half-shuffle needs a nonempty left word");
    shuffle(&u[1..], v)
        .into_iter()
        .map(|(w, c)| {
            let mut word = vec![u[0]];
            word.extend(w);
            (word, c)
        })
        .collect()
}

impl GradedBasisAlgebra {
    fn build(field: PrimeField, kind: FreeKind, g: usize, cap: usize) -> Result<Self> {
        let mut basis = Vec::new();
        let min_degree = if kind == FreeKind::Assoc { 0 } else { 1 };
        let mut size = 0usize;
        for n in min_degree..=cap {
            let count = (g as u128).saturating_pow(n as u32).saturating_mul(match kind {
                FreeKind::Dias => n as u128,
                _ => 1,
            });
            size = size.saturating_add(count.min(usize::MAX as u128) as usize);
            if size > FREE_BASIS_BOUND {
                return Err(Error::SizeBound {
                    what: format!("free {kind:?} algebra on {g} generators up to degree {cap}"),
                    size,
                    bound: FREE_BASIS_BOUND,
                });
            }
            for w in words(g, n) {
                match kind {
                    FreeKind::Dias => {
                        for c in 0..n {
                            basis.push(Monomial::Dias(DiasMonomial {
                                left: w[..c].to_vec(),
                                center: w[c],
                                right: w[c + 1..].to_vec(),
                            }));
                        }
                    }
                    _ => basis.push(Monomial::Word(w)),
                }
            }
        }
        let index: HashMap<Monomial, usize> = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let dim = basis.len();
        let lookup = |m: Monomial| -> Vec<(usize, u32)> {
            if m.degree() > cap {
                Vec::new()
            } else {
                vec![(index[&m], 1)]
            }
        };
        let mut alg = Algebra::new(field, dim);
        match kind {
            FreeKind::Dias => {
                let dias = |i: usize| match &basis[i] {
                    Monomial::Dias(m) => m,
                    Monomial::Word(_) => unreachable!(),
                };
                let left =
                    BilinearOp::from_fn(dim, field, |i, j| lookup(Monomial::Dias(dias(i).left_product(dias(j)))));
                let right = BilinearOp::from_fn(dim, field, |i, j| {
                    lookup(Monomial::Dias(dias(i).right_product(dias(j))))
                });
                alg = alg.with_op("left", left)?.with_op("right", right)?;
            }
            FreeKind::Assoc => {
                let op = BilinearOp::from_fn(dim, field, |i, j| match (&basis[i], &basis[j]) {
                    (Monomial::Word(a), Monomial::Word(b)) => lookup(Monomial::Word([a.as_slice(), b].concat())),
                    _ => unreachable!(),
                });
                alg = alg.with_op("assoc", op)?;
            }
            FreeKind::Zinbiel => {
                let op = BilinearOp::from_fn(dim, field, |i, j| match (&basis[i], &basis[j]) {
                    (Monomial::Word(a), Monomial::Word(b)) => {
                        if a.len() + b.len() > cap {
                            return Vec::new();
                        }
                        half_shuffle(a, b)
                            .into_iter()
                            .map(|(w, c)| (index[&Monomial::Word(w)], field.reduce(c)))
                            .collect()
                    }
                    _ => unreachable!(),
                });
                alg = alg.with_op("zinbiel", op)?;
            }
        }
        let degrees = basis.iter().map(Monomial::degree).collect();
        let alg = alg
            .with_grading(Grading { degrees, cap })?
            .with_label(format!("free {} on {g} generators, degree <= {cap}", kind_name(kind)));
        Ok(GradedBasisAlgebra {
            kind,
            generators: g,
            cap,
            letters: default_letters(g),
            basis,
            index,
            alg,
        })
    }

    /// Renames the generators for display.
    pub fn with_letters(mut self, letters: Vec<String>) -> Result<Self> {
        if letters.len() != self.generators {
            return Err(usage("one letter per generator is required"));
        }
        self.letters = letters;
        Ok(self)
    }

    pub fn kind(&self) -> FreeKind {
        self.kind
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn field(&self) -> PrimeField {
        self.alg.field()
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn degree(&self, i: usize) -> usize {
        self.basis[i].degree()
    }

    /// Dense form with the structure constants of the truncated products
    /// and the degree grading attached.
    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn to_algebra(&self) -> Algebra {
        self.alg.clone()
    }

    /// Basis index of generator `g`.
    pub fn generator_index(&self, g: usize) -> usize {
        let m = match self.kind {
            FreeKind::Dias => Monomial::Dias(DiasMonomial::generator(g)),
            _ => Monomial::Word(vec![g]),
        };
        self.index[&m]
    }

    pub fn generator(&self, g: usize) -> Element {
        self.alg.basis(self.generator_index(g))
    }

    /// The empty word, for the associative kind.
    pub fn unit(&self) -> Option<Element> {
        self.index.get(&Monomial::Word(Vec::new())).map(|&i| self.alg.basis(i))
    }

    /// Basis element for a monomial, if it lies within the cap.
    pub fn monomial(&self, m: &Monomial) -> Option<Element> {
        self.index_of(m).map(|i| self.alg.basis(i))
    }

    pub fn multiply(&self, op: &str, x: &Element, y: &Element) -> Result<Element> {
        self.alg.multiply(op, x, y)
    }

    /// Number of basis monomials in each degree `0..=cap`.
    pub fn dims_by_degree(&self) -> Vec<usize> {
        let mut out = vec![0; self.cap + 1];
        for m in &self.basis {
            out[m.degree()] += 1;
        }
        out
    }

    fn word_name(&self, w: &[usize]) -> String {
        let mut parts = Vec::new();
        let mut i = 0;
        while i < w.len() {
            let mut j = i;
            while j < w.len() && w[j] == w[i] {
                j += 1;
            }
            let letter = &self.letters[w[i]];
            parts.push(if j - i == 1 {
                letter.clone()
            } else {
                format!("{letter}^{}", j - i)
            });
            i = j;
        }
        parts.join(" ")
    }

    /// Display name of basis monomial `i`: words by letters with runs
    /// written as powers, dialgebra monomials with the center in brackets.
    pub fn name(&self, i: usize) -> String {
        match &self.basis[i] {
            Monomial::Word(w) if w.is_empty() => "1".to_string(),
            Monomial::Word(w) => self.word_name(w),
            Monomial::Dias(m) => {
                let mut parts = Vec::new();
                if !m.left.is_empty() {
                    parts.push(self.word_name(&m.left));
                }
                parts.push(format!("[{}]", self.letters[m.center]));
                if !m.right.is_empty() {
                    parts.push(self.word_name(&m.right));
                }
                parts.join(" ")
            }
        }
    }

    pub fn format_element(&self, x: &Element) -> String {
        let terms: Vec<String> = x
            .support()
            .map(|(i, c)| {
                if c == 1 {
                    self.name(i)
                } else {
                    format!("{c}*{}", self.name(i))
                }
            })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }
}

fn kind_name(kind: FreeKind) -> &'static str {
    match kind {
        FreeKind::Dias => "diassociative",
        FreeKind::Assoc => "associative",
        FreeKind::Zinbiel => "Zinbiel",
    }
}

/// Free diassociative algebra on `g` generators, truncated at degree `d`.
pub fn free_dias(field: PrimeField, g: usize, d: usize) -> Result<GradedBasisAlgebra> {
    GradedBasisAlgebra::build(field, FreeKind::Dias, g, d)
}

/// Free Zinbiel algebra (half-shuffles) on `g` generators up to degree `d`.
pub fn free_zinbiel(field: PrimeField, g: usize, d: usize) -> Result<GradedBasisAlgebra> {
    GradedBasisAlgebra::build(field, FreeKind::Zinbiel, g, d)
}

/// Free unital associative algebra on `g` letters up to degree `d`.
pub fn free_assoc(field: PrimeField, g: usize, d: usize) -> Result<GradedBasisAlgebra> {
    GradedBasisAlgebra::build(field, FreeKind::Assoc, g, d)
}

/// `(…((a≺b)≺b)…≺b) = n!·a≺(b≺(…≺b))` with `n` factors `b`, and for
/// `n = p` additionally that the left side vanishes. Overflowing
/// instances are inconclusive.
pub fn check_zinbiel_factorial(r: &Algebra, a: &Element, b: &Element, n: u64) -> Result<CheckReport> {
    if n == 0 {
        return Err(usage("check_zinbiel_factorial needs n >= 1"));
    }
    let op = r.op("zinbiel")?;
    let f = r.field();
    let mut overflow = false;
    let mut mul = |u: &Element, v: &Element| {
        overflow |= r.overflows(u, v);
        op.apply(f, u, v)
    };
    let mut lhs = a.clone();
    for _ in 0..n {
        lhs = mul(&lhs, b);
    }
    let mut tail = b.clone();
    for _ in 1..n {
        tail = mul(b, &tail);
    }
    let rhs = mul(a, &tail).scaled(f.factorial(n), f);
    let mut c = Checker::new("zinbiel-factorial", 0);
    if overflow {
        c.truncated();
    } else {
        c.compare("factorial", &[a, b], &lhs, &rhs);
        if n == f.p() as u64 {
            c.compare("vanishing", &[a, b], &lhs, &r.zero());
        }
    }
    Ok(c.finish())
}

/// Per-degree dimensions of a quotient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeRow {
    pub degree: usize,
    pub ambient: usize,
    pub quotient: usize,
}

/// Serializable description of a quotient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientSummary {
    pub label: String,
    pub p: u32,
    pub degree: usize,
    pub ambient_dim: usize,
    pub ideal_rank: usize,
    pub dim: usize,
    pub by_degree: Vec<DegreeRow>,
    pub normal_basis: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

/// A truncated free algebra modulo the truncated ideal spanned by a set of
/// relations.
#[derive(Clone, Debug)]
pub struct QuotientPresentation {
    ambient: GradedBasisAlgebra,
    relations: Vec<Element>,
    echelon: Echelon,
    normal_basis: Vec<usize>,
    notes: Vec<String>,
}

impl QuotientPresentation {
    pub fn ambient(&self) -> &GradedBasisAlgebra {
        &self.ambient
    }

    pub fn relations(&self) -> &[Element] {
        &self.relations
    }

    pub fn ideal_rank(&self) -> usize {
        self.echelon.rank()
    }

    /// Ideal basis in reduced echelon form.
    pub fn ideal_basis(&self) -> Vec<Element> {
        self.echelon.rows().iter().cloned().map(Element::from).collect()
    }

    pub fn dim(&self) -> usize {
        self.normal_basis.len()
    }

    /// Ambient indices of the surviving monomials.
    pub fn normal_basis(&self) -> &[usize] {
        &self.normal_basis
    }

    pub fn normal_basis_names(&self) -> Vec<String> {
        self.normal_basis.iter().map(|&i| self.ambient.name(i)).collect()
    }

    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    pub fn add_note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// Normal form of an ambient element, supported on the normal basis.
    pub fn reduce(&self, x: &Element) -> Element {
        let mut v = x.to_vec();
        self.echelon.reduce(&mut v);
        Element::from(v)
    }

    /// Coordinates of the class of `x` in the normal basis.
    pub fn coordinates(&self, x: &Element) -> Vec<u32> {
        let r = self.reduce(x);
        self.normal_basis.iter().map(|&i| r[i]).collect()
    }

    /// Idempotent ambient matrix whose column `c` is the normal form of
    /// monomial `c`.
    pub fn projection(&self) -> Matrix {
        let n = self.ambient.dim();
        let cols: Vec<Element> = (0..n).map(|c| self.reduce(&Element::basis(n, c))).collect();
        Matrix::from_columns(n, &cols)
    }

    pub fn is_zero_in_quotient(&self, x: &Element) -> bool {
        self.reduce(x).is_zero()
    }

    pub fn dims_by_degree(&self) -> Vec<DegreeRow> {
        let amb = self.ambient.dims_by_degree();
        let mut q = vec![0; amb.len()];
        for &i in &self.normal_basis {
            q[self.ambient.degree(i)] += 1;
        }
        amb.into_iter()
            .zip(q)
            .enumerate()
            .filter(|(_, (a, _))| *a > 0)
            .map(|(degree, (ambient, quotient))| DegreeRow {
                degree,
                ambient,
                quotient,
            })
            .collect()
    }

    pub fn summary(&self, label: impl Into<String>) -> QuotientSummary {
        QuotientSummary {
            label: label.into(),
            p: self.ambient.field().p(),
            degree: self.ambient.cap(),
            ambient_dim: self.ambient.dim(),
            ideal_rank: self.ideal_rank(),
            dim: self.dim(),
            by_degree: self.dims_by_degree(),
            normal_basis: self.normal_basis_names(),
            notes: self.notes.clone(),
        }
    }
}

/// Quotient of a truncated free algebra by the ideal generated by
/// `relations`, truncated at the ambient cap.
///
/// Every monomial is a product of generators and the ambient products are
/// associative (for dialgebras, through the mixed axioms as well), so the
/// ideal is the closure of the relations' span under multiplication by
/// generators on either side with every operation. New independent vectors
/// are processed breadth-first.
pub fn truncated_ideal_quotient(ambient: &GradedBasisAlgebra, relations: &[Element]) -> Result<QuotientPresentation> {
    let n = ambient.dim();
    if let Some(r) = relations.iter().find(|r| r.len() != n) {
        return Err(usage(format!(
            "relation of length {} in an ambient of dimension {n}",
            r.len()
        )));
    }
    let f = ambient.field();
    let ops: Vec<&BilinearOp> = ambient
        .kind
        .ops()
        .iter()
        .map(|name| ambient.alg.op(name))
        .collect::<Result<_>>()?;
    let gens: Vec<Element> = (0..ambient.generators).map(|g| ambient.generator(g)).collect();
    let mut echelon = Echelon::new(f, n);
    let mut queue = VecDeque::new();
    for r in relations {
        if let Some(row) = echelon.insert(r.to_vec()) {
            queue.push_back(row);
        }
    }
    while let Some(v) = queue.pop_front() {
        for g in &gens {
            for op in &ops {
                for prod in [op.apply(f, g, &v), op.apply(f, &v, g)] {
                    if prod.is_zero() {
                        continue;
                    }
                    if let Some(row) = echelon.insert(prod.into_inner()) {
                        queue.push_back(row);
                    }
                }
            }
        }
    }
    let normal_basis = (0..n).filter(|&c| !echelon.is_pivot(c)).collect();
    Ok(QuotientPresentation {
        ambient: ambient.clone(),
        relations: relations.to_vec(),
        echelon,
        normal_basis,
        notes: Vec::new(),
    })
}

/// Elements on which non-linear p-map relations are instantiated: all of
/// them when enumerable, otherwise the basis plus seeded samples. The note
/// records which.
pub(crate) fn pmap_instances(g: &Algebra, cfg: &SweepConfig) -> (Vec<Element>, String) {
    let f = g.field();
    let stream = cfg.stream(f, g.dim(), 0);
    if stream.is_exhaustive() {
        let xs: Vec<Element> = stream.collect();
        let note = format!("p-map relations instantiated on all {} elements", xs.len());
        (xs, note)
    } else {
        let mut xs: Vec<Element> = (0..g.dim()).map(|i| g.basis(i)).collect();
        xs.extend(stream);
        let note = format!(
            "p-map relations instantiated on the basis and {} sampled elements (seed {}); \
             the quotient may be larger than the true truncation",
            cfg.samples, cfg.seed
        );
        (xs, note)
    }
}

fn embed(ambient: &GradedBasisAlgebra, x: &Element, offset: usize) -> Element {
    let mut out = Element::zero(ambient.dim());
    let f = ambient.field();
    for (i, c) in x.support() {
        out.axpy(c, &ambient.generator(offset + i), f);
    }
    out
}

/// Image `1 ⊗ x ⊗ 1` of an element of `g` in the free dialgebra on its basis.
pub fn dias_unit(ambient: &GradedBasisAlgebra, x: &Element) -> Element {
    embed(ambient, x, 0)
}

fn require_restricted(g: &Algebra, bracket: &str, pmap: &str, d: usize) -> Result<()> {
    if d < g.p() as usize {
        return Err(usage(format!(
            "degree {d} is below p = {}; the p-power relations would be truncated",
            g.p()
        )));
    }
    let r = check_restricted_leibniz(g, bracket, pmap, &SweepConfig::default())?;
    if r.failed() {
        return Err(Error::Precondition(Box::new(r)));
    }
    Ok(())
}

/// The truncation at degree `d` of `Ud_p(g)`: the free dialgebra on a basis
/// of `g` modulo `[x,y] − x⊣y + y⊢x` on basis pairs and `x^[p] − x^{⊢p}` on
/// the instantiated elements.
pub fn ud_p(g: &Algebra, bracket: &str, pmap: &str, d: usize, cfg: &SweepConfig) -> Result<QuotientPresentation> {
    require_restricted(g, bracket, pmap, d)?;
    let f = g.field();
    let ambient = free_dias(f, g.dim(), d)?;
    let (l, r) = (ambient.alg.op("left")?, ambient.alg.op("right")?);
    let b = g.op(bracket)?;
    let mut relations = Vec::new();
    for i in 0..g.dim() {
        for j in 0..g.dim() {
            let (x, y) = (g.basis(i), g.basis(j));
            let (xh, yh) = (ambient.generator(i), ambient.generator(j));
            let mut rel = dias_unit(&ambient, &b.apply(f, &x, &y));
            rel.sub_assign(&l.apply(f, &xh, &yh), f);
            rel.add_assign(&r.apply(f, &yh, &xh), f);
            relations.push(rel);
        }
    }
    let (xs, note) = pmap_instances(g, cfg);
    for x in &xs {
        let xh = dias_unit(&ambient, x);
        let mut rel = dias_unit(&ambient, &g.apply_pmap(pmap, x)?);
        rel.sub_assign(&right_power(r, f, &xh, f.p() as u64), f);
        relations.push(rel);
    }
    let mut q = truncated_ideal_quotient(&ambient, &relations)?;
    q.add_note(note);
    Ok(q)
}

/// The unit `x ↦ [1 ⊗ x ⊗ 1]` into `Ud_p(g)` preserves brackets (basis
/// pairs) and p-maps (instantiated elements) inside the truncated quotient.
pub fn check_ud_unit(g: &Algebra, bracket: &str, pmap: &str, d: usize, cfg: &SweepConfig) -> Result<CheckReport> {
    let q = ud_p(g, bracket, pmap, d, cfg)?;
    let ambient = q.ambient();
    let f = g.field();
    let (l, r) = (ambient.alg.op("left")?, ambient.alg.op("right")?);
    let b = g.op(bracket)?;
    let mut c = Checker::new("ud-unit", cfg.seed);
    for i in 0..g.dim() {
        for j in 0..g.dim() {
            let (x, y) = (g.basis(i), g.basis(j));
            let (xh, yh) = (dias_unit(ambient, &x), dias_unit(ambient, &y));
            if ambient.alg.overflows(&xh, &yh) {
                c.truncated();
                continue;
            }
            let lhs = q.reduce(&dias_unit(ambient, &b.apply(f, &x, &y)));
            let rhs = q.reduce(&l.apply(f, &xh, &yh).minus(&r.apply(f, &yh, &xh), f));
            c.compare("bracket", &[&x, &y], &lhs, &rhs);
        }
    }
    let (xs, _) = pmap_instances(g, cfg);
    if !cfg.stream(f, g.dim(), 0).is_exhaustive() {
        c.mark_sampled();
    }
    for x in &xs {
        let xh = dias_unit(ambient, x);
        let lhs = q.reduce(&dias_unit(ambient, &g.apply_pmap(pmap, x)?));
        let rhs = q.reduce(&right_power(r, f, &xh, f.p() as u64));
        c.compare("p-map", &[x], &lhs, &rhs);
    }
    Ok(c.finish())
}

/// One-generator free dialgebra truncated at `d`, modulo `m⊣m' = m⊢m'` on
/// basis pairs.
pub fn das_quotient(field: PrimeField, d: usize) -> Result<QuotientPresentation> {
    let ambient = free_dias(field, 1, d)?;
    let (l, r) = (ambient.alg.op("left")?, ambient.alg.op("right")?);
    let n = ambient.dim();
    let mut relations = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if ambient.degree(i) + ambient.degree(j) > d {
                continue;
            }
            let (x, y) = (ambient.alg.basis(i), ambient.alg.basis(j));
            relations.push(l.apply(field, &x, &y).minus(&r.apply(field, &x, &y), field));
        }
    }
    truncated_ideal_quotient(&ambient, &relations)
}

/// In [`das_quotient`], all `2^{n−1}` left-iterated products of `n` copies
/// of the generator with any mix of `⊣` and `⊢` have the same image.
pub fn check_das_mixed_powers(field: PrimeField, d: usize, n: usize) -> Result<CheckReport> {
    if n == 0 || n > d {
        return Err(usage(format!("power {n} must lie in 1..={d}")));
    }
    if n > 20 {
        return Err(usage("at most 2^19 bracketing patterns are supported"));
    }
    let q = das_quotient(field, d)?;
    let ambient = q.ambient();
    let (l, r) = (ambient.alg.op("left")?, ambient.alg.op("right")?);
    let x = ambient.generator(0);
    let image = |pattern: u64| {
        let mut acc = x.clone();
        for k in 0..n - 1 {
            let op = if pattern >> k & 1 == 1 { r } else { l };
            acc = op.apply(field, &acc, &x);
        }
        q.reduce(&acc)
    };
    let reference = image(0);
    let mut c = Checker::new("das-mixed-powers", 0);
    for pattern in 1..(1u64 << (n - 1)) {
        let bits: Vec<u32> = (0..n - 1).map(|k| (pattern >> k & 1) as u32).collect();
        c.compare("mixed power", &[&bits], &image(pattern), &reference);
    }
    Ok(c.finish())
}

impl fmt::Display for QuotientSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: p={} degree<={} ambient={} ideal_rank={} dim={}",
            self.label, self.p, self.degree, self.ambient_dim, self.ideal_rank, self.dim
        )?;
        for row in &self.by_degree {
            writeln!(f, "  degree {}: {} -> {}", row.degree, row.ambient, row.quotient)?;
        }
        writeln!(f, "  basis: {}", self.normal_basis.join(", "))?;
        for note in &self.notes {
            writeln!(f, "  note: {note}")?;
        }
        Ok(())
    }
}
