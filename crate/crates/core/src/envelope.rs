//! Restricted Leibniz modules and the restricted enveloping algebra `UL_p`.
//!
//! A module is given by matrices `ℓ_i: m ↦ [e_i, m]` and `r_i: m ↦ [m, e_i]`.
//! Words in the letters `l_i`, `r_i` act on the right, `m·(uv) = (m·u)·v`,
//! so the matrix of a word `w₁…w_k` is `ρ(w_k)⋯ρ(w₁)`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, Element};
use crate::error::{usage, Error, Result};
use crate::free::{free_assoc, pmap_instances, truncated_ideal_quotient, QuotientPresentation};
use crate::identities::{check_leibniz, check_restricted_leibniz};
use crate::linalg::Matrix;
use crate::report::{CheckReport, Checker, SweepConfig};
use crate::scalars::PrimeField;

/// A Leibniz module over an algebra with `gdim` basis elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizModule {
    field: PrimeField,
    gdim: usize,
    mdim: usize,
    left: Vec<Matrix>,
    right: Vec<Matrix>,
}

impl LeibnizModule {
    pub fn new(g: &Algebra, mdim: usize, left: Vec<Matrix>, right: Vec<Matrix>) -> Result<Self> {
        if left.len() != g.dim() || right.len() != g.dim() {
            return Err(usage("one left and one right matrix per basis element are required"));
        }
        if left.iter().chain(&right).any(|m| m.rows() != mdim || m.cols() != mdim) {
            return Err(usage(format!("action matrices must be {mdim}×{mdim}")));
        }
        Ok(LeibnizModule {
            field: g.field(),
            gdim: g.dim(),
            mdim,
            left,
            right,
        })
    }

    pub fn zero(g: &Algebra, mdim: usize) -> Self {
        let z = vec![Matrix::zeros(mdim, mdim); g.dim()];
        LeibnizModule {
            field: g.field(),
            gdim: g.dim(),
            mdim,
            left: z.clone(),
            right: z,
        }
    }

    /// `g` acting on itself by `[x, −]` and `[−, x]`.
    pub fn adjoint(g: &Algebra, bracket: &str) -> Result<Self> {
        let mut left = Vec::with_capacity(g.dim());
        let mut right = Vec::with_capacity(g.dim());
        for i in 0..g.dim() {
            left.push(g.left_mult_matrix(bracket, &g.basis(i))?);
            right.push(g.right_mult_matrix(bracket, &g.basis(i))?);
        }
        LeibnizModule::new(g, g.dim(), left, right)
    }

    /// The same matrices with the roles of the two actions exchanged.
    pub fn swapped(&self) -> Self {
        LeibnizModule {
            left: self.right.clone(),
            right: self.left.clone(),
            ..self.clone()
        }
    }

    pub fn mdim(&self) -> usize {
        self.mdim
    }

    pub fn left_matrices(&self) -> &[Matrix] {
        &self.left
    }

    pub fn right_matrices(&self) -> &[Matrix] {
        &self.right
    }

    fn combine(&self, mats: &[Matrix], x: &[u32]) -> Matrix {
        let mut out = Matrix::zeros(self.mdim, self.mdim);
        for (i, &a) in x.iter().enumerate() {
            if a != 0 {
                out = out.add(&mats[i].scale(a, self.field), self.field);
            }
        }
        out
    }

    /// `m ↦ [x, m]`.
    pub fn left_action(&self, x: &Element) -> Matrix {
        self.combine(&self.left, x)
    }

    /// `m ↦ [m, x]`.
    pub fn right_action(&self, x: &Element) -> Matrix {
        self.combine(&self.right, x)
    }

    /// Letter matrices: `l_i` for `i < gdim`, then `r_i`.
    pub fn letters(&self) -> Vec<Matrix> {
        self.left.iter().chain(&self.right).cloned().collect()
    }

    fn check_over(&self, g: &Algebra) -> Result<()> {
        if g.dim() != self.gdim || g.field() != self.field {
            return Err(usage("module is defined over a different algebra"));
        }
        Ok(())
    }
}

fn require(r: CheckReport) -> Result<CheckReport> {
    if r.failed() {
        Err(Error::Precondition(Box::new(r)))
    } else {
        Ok(r)
    }
}

/// The module identities on basis triples `(x, y, m)`:
/// `[m,[x,y]] = [[m,x],y] − [[m,y],x]`, `[x,[m,y]] = [[x,m],y] − [[x,y],m]`,
/// `[x,[y,m]] = [[x,y],m] − [[x,m],y]`.
pub fn check_module_axioms(g: &Algebra, bracket: &str, m: &LeibnizModule) -> Result<CheckReport> {
    m.check_over(g)?;
    require(check_leibniz(g, bracket, &SweepConfig::default())?)?;
    let f = g.field();
    let b = g.op(bracket)?;
    let mut c = Checker::new("module-axioms", 0);
    for i in 0..g.dim() {
        for j in 0..g.dim() {
            let (x, y) = (g.basis(i), g.basis(j));
            let xy = b.apply(f, &x, &y);
            let (lx, ly, rx, ry) = (&m.left[i], &m.left[j], &m.right[i], &m.right[j]);
            let (lxy, rxy) = (m.left_action(&xy), m.right_action(&xy));
            for k in 0..m.mdim {
                let v = Element::basis(m.mdim, k);
                let inputs: [&[u32]; 3] = [&x, &y, &v];
                let lhs5 = rxy.apply(&v, f);
                let rhs5 = ry.apply(&rx.apply(&v, f), f).minus(&rx.apply(&ry.apply(&v, f), f), f);
                c.compare("(5)", &inputs, &lhs5, &rhs5);
                let lhs6 = lx.apply(&ry.apply(&v, f), f);
                let rhs6 = ry.apply(&lx.apply(&v, f), f).minus(&lxy.apply(&v, f), f);
                c.compare("(6)", &inputs, &lhs6, &rhs6);
                let lhs7 = lx.apply(&ly.apply(&v, f), f);
                let rhs7 = lxy.apply(&v, f).minus(&ry.apply(&lx.apply(&v, f), f), f);
                c.compare("(7)", &inputs, &lhs7, &rhs7);
            }
        }
    }
    Ok(c.finish())
}

/// `[m, x^[p]]` equals the p-fold right action of `x`, as matrices, for
/// all (or sampled) `x`.
pub fn check_restricted_module(
    g: &Algebra,
    bracket: &str,
    pmap: &str,
    m: &LeibnizModule,
    cfg: &SweepConfig,
) -> Result<CheckReport> {
    require(check_module_axioms(g, bracket, m)?)?;
    g.pmap(pmap)?;
    let f = g.field();
    let mut c = Checker::new("restricted-module", cfg.seed);
    let stream = cfg.stream(f, g.dim(), 0);
    if !stream.is_exhaustive() {
        c.mark_sampled();
    }
    for x in stream {
        let lhs = m.right_action(&g.apply_pmap(pmap, &x)?);
        let rhs = m.right_action(&x).pow(f.p() as u64, f);
        c.compare("r_(x^[p]) = r_x^p", &[&x], lhs.entries(), rhs.entries());
    }
    Ok(c.finish())
}

/// Signs used for the relations on `r_{[x,y]}` and `l_{[x,y]}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SignConvention {
    /// `r_{[x,y]} − r_x r_y + r_y r_x` and `l_{[x,y]} − l_x r_y + r_y l_x`,
    /// the signs forced by the module identities in right-action order.
    Derived,
    /// `r_{[x,y]} − r_x r_y − r_y r_x` and `l_{[x,y]} − l_x r_y − r_y l_x`.
    Printed,
}

impl SignConvention {
    fn second(self) -> i64 {
        match self {
            SignConvention::Derived => 1,
            SignConvention::Printed => -1,
        }
    }
}

/// A linear combination of words in the letters `l_i` (index `i`) and
/// `r_i` (index `gdim + i`).
pub type WordPoly = BTreeMap<Vec<usize>, u32>;

fn add_term(poly: &mut WordPoly, word: Vec<usize>, c: u32, f: PrimeField) {
    let e = poly.entry(word).or_insert(0);
    *e = f.add(*e, c);
}

/// Relations `(8)`, `(9)`, `(10)` for the basis pair `(e_i, e_j)`.
pub fn bracket_relations(
    g: &Algebra,
    bracket: &str,
    i: usize,
    j: usize,
    conv: SignConvention,
) -> Result<[WordPoly; 3]> {
    let f = g.field();
    let n = g.dim();
    let xy = g.multiply(bracket, &g.basis(i), &g.basis(j))?;
    let (l, r) = (|k: usize| k, |k: usize| n + k);
    let one = 1;
    let minus = f.neg(1);
    let second = f.from_i64(conv.second());

    let mut rel8 = WordPoly::new();
    let mut rel9 = WordPoly::new();
    for (k, c) in xy.support() {
        add_term(&mut rel8, vec![r(k)], c, f);
        add_term(&mut rel9, vec![l(k)], c, f);
    }
    add_term(&mut rel8, vec![r(i), r(j)], minus, f);
    add_term(&mut rel8, vec![r(j), r(i)], second, f);
    add_term(&mut rel9, vec![l(i), r(j)], minus, f);
    add_term(&mut rel9, vec![r(j), l(i)], second, f);

    let mut rel10 = WordPoly::new();
    add_term(&mut rel10, vec![r(j), l(i)], one, f);
    add_term(&mut rel10, vec![l(j), l(i)], one, f);
    for rel in [&mut rel8, &mut rel9, &mut rel10] {
        rel.retain(|_, c| *c != 0);
    }
    Ok([rel8, rel9, rel10])
}

/// Relation `(11)`, `r_{x^[p]} − r_x^p`, expanded into words.
pub fn power_relation(g: &Algebra, pmap: &str, x: &Element) -> Result<WordPoly> {
    let f = g.field();
    let n = g.dim();
    let p = f.p() as usize;
    let mut rel = WordPoly::new();
    for (k, c) in g.apply_pmap(pmap, x)?.support() {
        add_term(&mut rel, vec![n + k], c, f);
    }
    let support: Vec<(usize, u32)> = x.support().collect();
    let mut terms: Vec<(Vec<usize>, u32)> = vec![(Vec::new(), 1)];
    for _ in 0..p {
        terms = terms
            .into_iter()
            .flat_map(|(w, c)| {
                support.iter().map(move |&(k, a)| {
                    let mut w2 = w.clone();
                    w2.push(n + k);
                    (w2, f.mul(c, a))
                })
            })
            .collect();
    }
    for (w, c) in terms {
        add_term(&mut rel, w, f.neg(c), f);
    }
    rel.retain(|_, c| *c != 0);
    Ok(rel)
}

/// Matrix of a word under the right action: `ρ(w_k)⋯ρ(w₁)`.
pub fn word_action(letters: &[Matrix], word: &[usize], mdim: usize, f: PrimeField) -> Matrix {
    word.iter()
        .fold(Matrix::identity(mdim), |acc, &a| letters[a].mul(&acc, f))
}

fn poly_action(letters: &[Matrix], poly: &WordPoly, mdim: usize, f: PrimeField) -> Matrix {
    poly.iter().fold(Matrix::zeros(mdim, mdim), |acc, (w, &c)| {
        acc.add(&word_action(letters, w, mdim, f).scale(c, f), f)
    })
}

/// Relations `(8)`–`(10)` on basis pairs and `(11)` on all (or sampled)
/// elements, evaluated as operators on `m`; each must vanish.
pub fn ulp_relations_check(
    g: &Algebra,
    bracket: &str,
    pmap: &str,
    m: &LeibnizModule,
    conv: SignConvention,
    cfg: &SweepConfig,
) -> Result<CheckReport> {
    m.check_over(g)?;
    g.pmap(pmap)?;
    let f = g.field();
    let b = g.op(bracket)?;
    let zero = Matrix::zeros(m.mdim, m.mdim);
    let mut c = Checker::new(
        match conv {
            SignConvention::Derived => "ulp-relations",
            SignConvention::Printed => "ulp-relations-printed",
        },
        cfg.seed,
    );
    let s = f.from_i64(conv.second());
    for i in 0..g.dim() {
        for j in 0..g.dim() {
            let (x, y) = (g.basis(i), g.basis(j));
            let xy = b.apply(f, &x, &y);
            let (lx, ly, rx, ry) = (&m.left[i], &m.left[j], &m.right[i], &m.right[j]);
            // Word u v acts by ρ(v)ρ(u).
            let rel8 = m
                .right_action(&xy)
                .sub(&ry.mul(rx, f), f)
                .add(&rx.mul(ry, f).scale(s, f), f);
            let rel9 = m
                .left_action(&xy)
                .sub(&ry.mul(lx, f), f)
                .add(&lx.mul(ry, f).scale(s, f), f);
            let rel10 = lx.mul(ry, f).add(&lx.mul(ly, f), f);
            c.compare("(8)", &[&x, &y], rel8.entries(), zero.entries());
            c.compare("(9)", &[&x, &y], rel9.entries(), zero.entries());
            c.compare("(10)", &[&x, &y], rel10.entries(), zero.entries());
        }
    }
    let stream = cfg.stream(f, g.dim(), 0);
    if !stream.is_exhaustive() {
        c.mark_sampled();
    }
    for x in stream {
        let rel11 = m
            .right_action(&g.apply_pmap(pmap, &x)?)
            .sub(&m.right_action(&x).pow(f.p() as u64, f), f);
        c.compare("(11)", &[&x], rel11.entries(), zero.entries());
    }
    Ok(c.finish())
}

/// The truncation at degree `d` of `UL_p(g)` with the derived signs.
pub fn ulp_truncated(
    g: &Algebra,
    bracket: &str,
    pmap: &str,
    d: usize,
    cfg: &SweepConfig,
) -> Result<QuotientPresentation> {
    ulp_truncated_with(g, bracket, pmap, d, SignConvention::Derived, cfg)
}

/// [`ulp_truncated`] with a chosen sign convention.
pub fn ulp_truncated_with(
    g: &Algebra,
    bracket: &str,
    pmap: &str,
    d: usize,
    conv: SignConvention,
    cfg: &SweepConfig,
) -> Result<QuotientPresentation> {
    if d < g.p() as usize {
        return Err(usage(format!(
            "degree {d} is below p = {}; the p-power relations would be truncated",
            g.p()
        )));
    }
    require(check_restricted_leibniz(g, bracket, pmap, &SweepConfig::default())?)?;
    let f = g.field();
    let n = g.dim();
    let letters: Vec<String> = if n == 1 {
        vec!["l".into(), "r".into()]
    } else {
        (1..=n)
            .map(|i| format!("l{i}"))
            .chain((1..=n).map(|i| format!("r{i}")))
            .collect()
    };
    let ambient = free_assoc(f, 2 * n, d)?.with_letters(letters)?;
    let to_element = |poly: &WordPoly| -> Element {
        let mut e = Element::zero(ambient.dim());
        for (w, &c) in poly {
            let idx = ambient
                .index_of(&crate::free::Monomial::Word(w.clone()))
                .expect("relation words have degree <= p <= d");
            e.as_mut_slice()[idx] = f.add(e[idx], c);
        }
        e
    };
    let mut relations = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for rel in bracket_relations(g, bracket, i, j, conv)? {
                relations.push(to_element(&rel));
            }
        }
    }
    let (xs, note) = pmap_instances(g, cfg);
    for x in &xs {
        relations.push(to_element(&power_relation(g, pmap, x)?));
    }
    let mut q = truncated_ideal_quotient(&ambient, &relations)?;
    q.add_note(note);
    Ok(q)
}

/// Restricted module → right `UL_p`-module → restricted module. The word
/// action is built from the letters `m·l_x = [x,m]`, `m·r_x = [m,x]`; every
/// relation must act as zero; the module read back from single letters must
/// equal the input exactly.
pub fn module_roundtrip(
    g: &Algebra,
    bracket: &str,
    pmap: &str,
    m: &LeibnizModule,
    cfg: &SweepConfig,
) -> Result<CheckReport> {
    require(check_restricted_module(g, bracket, pmap, m, cfg)?)?;
    let f = g.field();
    let n = g.dim();
    let letters = m.letters();
    let zero = Matrix::zeros(m.mdim, m.mdim);
    let mut c = Checker::new("module-roundtrip", cfg.seed);
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (g.basis(i), g.basis(j));
            let rels = bracket_relations(g, bracket, i, j, SignConvention::Derived)?;
            for (label, rel) in ["(8)", "(9)", "(10)"].into_iter().zip(&rels) {
                let a = poly_action(&letters, rel, m.mdim, f);
                c.compare(label, &[&x, &y], a.entries(), zero.entries());
            }
        }
    }
    let stream = cfg.stream(f, n, 0);
    if !stream.is_exhaustive() {
        c.mark_sampled();
    }
    for x in stream {
        // ρ is multiplicative, so ρ(r_x^p) = ρ(r_x)^p with ρ(r_x) = Σ x_i ρ(r_i).
        let rx = x
            .support()
            .fold(zero.clone(), |acc, (k, a)| acc.add(&letters[n + k].scale(a, f), f));
        let xp = g.apply_pmap(pmap, &x)?;
        let rxp = xp
            .support()
            .fold(zero.clone(), |acc, (k, a)| acc.add(&letters[n + k].scale(a, f), f));
        let a = rxp.sub(&rx.pow(f.p() as u64, f), f);
        c.compare("(11)", &[&x], a.entries(), zero.entries());
    }
    let back_left: Vec<Matrix> = (0..n).map(|i| word_action(&letters, &[i], m.mdim, f)).collect();
    let back_right: Vec<Matrix> = (0..n).map(|i| word_action(&letters, &[n + i], m.mdim, f)).collect();
    let back = LeibnizModule::new(g, m.mdim, back_left, back_right)?;
    for i in 0..n {
        let e = g.basis(i);
        c.compare("left", &[&e], back.left[i].entries(), m.left[i].entries());
        c.compare("right", &[&e], back.right[i].entries(), m.right[i].entries());
    }
    Ok(c.finish())
}
