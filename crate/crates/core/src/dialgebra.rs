//! Diassociative algebras: the Leibniz algebra `D_Leib` with its p-map
//! `x ↦ x^{⊢p}`, matrix dialgebras, dialgebras from an operator on an
//! associative algebra, and the comparison of the two routes from
//! associative algebras to restricted Leibniz algebras.

use crate::algebra::{right_power, Algebra, BilinearOp, Element, PMap};
use crate::error::{usage, Error, Result};
use crate::identities::{check_associative, check_dias, check_leibniz, check_restricted_leibniz};
use crate::linalg::OperatorMatrix;
use crate::report::{CheckReport, Checker, SweepConfig};

/// Largest carrier dimension [`matrix_dialgebra`] will build.
pub const MATRIX_DIM_BOUND: usize = 256;

/// An algebra whose operations `left` (⊣) and `right` (⊢) satisfy the
/// diassociative axioms. Construction verifies the axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dialgebra {
    alg: Algebra,
}

impl Dialgebra {
    pub fn new(alg: Algebra) -> Result<Self> {
        let report = check_dias(&alg, "left", "right", &SweepConfig::default())?;
        if !report.passed() {
            return Err(Error::Precondition(Box::new(report)));
        }
        Ok(Dialgebra { alg })
    }

    /// An associative algebra with `⊣ = ⊢ = op`.
    pub fn associative(a: &Algebra, op: &str) -> Result<Self> {
        let o = a.op(op)?.clone();
        let alg = Algebra::new(a.field(), a.dim())
            .with_label(a.label())
            .with_op("left", o.clone())?
            .with_op("right", o)?;
        Dialgebra::new(alg)
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn into_algebra(self) -> Algebra {
        self.alg
    }

    pub fn left(&self) -> &BilinearOp {
        self.alg.op("left").expect("validated at construction")
    }

    pub fn right(&self) -> &BilinearOp {
        self.alg.op("right").expect("validated at construction")
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    /// `x ↦ x^{⊢p}`.
    pub fn frobenius(&self, x: &Element) -> Element {
        let f = self.alg.field();
        right_power(self.right(), f, x, f.p() as u64)
    }
}

/// The Leibniz algebra of `d` with `[x,y] = x⊣y − y⊢x`, keeping `left` and
/// `right`, and the p-map `frobenius: x ↦ x^{⊢p}`. The Leibniz identity and
/// restrictedness are verified under `cfg`; the reports are returned.
pub fn dleib_with(d: &Dialgebra, cfg: &SweepConfig) -> Result<(Algebra, Vec<CheckReport>)> {
    let f = d.alg.field();
    let (l, r) = (d.left(), d.right());
    let bracket = BilinearOp::from_fn(d.dim(), f, |i, j| {
        let mut out: Vec<(usize, u32)> = l.row(i, j).iter().map(|&(k, v)| (k as usize, v)).collect();
        out.extend(r.row(j, i).iter().map(|&(k, v)| (k as usize, f.neg(v))));
        out
    });
    let alg = d
        .alg
        .clone()
        .with_op("bracket", bracket)?
        .with_pmap("frobenius", PMap::RightPower { op: "right".into() })?;
    let leibniz = check_leibniz(&alg, "bracket", &SweepConfig::default())?;
    if !leibniz.passed() {
        return Err(Error::Precondition(Box::new(leibniz)));
    }
    let restricted = check_restricted_leibniz(&alg, "bracket", "frobenius", cfg)?;
    if restricted.failed() {
        return Err(Error::Precondition(Box::new(restricted)));
    }
    Ok((alg, vec![leibniz, restricted]))
}

/// [`dleib_with`] under the default sweep configuration.
pub fn dleib(d: &Dialgebra) -> Result<Algebra> {
    dleib_with(d, &SweepConfig::default()).map(|(a, _)| a)
}

/// `x ⊣ y^{⊣n} = x ⊣ y^{⊢n}`. Instances where a product leaves the
/// truncation range of a graded carrier are reported inconclusive.
pub fn check_lemdias(d: &Dialgebra, x: &Element, y: &Element, n: u64) -> Result<CheckReport> {
    if n == 0 {
        return Err(usage("check_lemdias needs n >= 1"));
    }
    for e in [x, y] {
        if e.len() != d.dim() {
            return Err(usage("element dimension mismatch"));
        }
    }
    let mut c = Checker::new("lemdias", 0);
    lemdias_instance(d, &mut c, x, y, n);
    Ok(c.finish())
}

/// [`check_lemdias`] on all basis pairs and every `1 ≤ n ≤ max_n`.
pub fn check_lemdias_basis(d: &Dialgebra, max_n: u64) -> CheckReport {
    let mut c = Checker::new("lemdias", 0);
    let n = d.dim();
    let grading = d.alg.grading();
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (d.alg.basis(i), d.alg.basis(j));
            for k in 1..=max_n {
                // Basis monomials are homogeneous: skip products known to overflow.
                if let Some(g) = grading {
                    if g.degrees[i] + k as usize * g.degrees[j] > g.cap {
                        c.truncated();
                        continue;
                    }
                }
                lemdias_instance(d, &mut c, &x, &y, k);
            }
        }
    }
    c.finish()
}

fn lemdias_instance(d: &Dialgebra, c: &mut Checker, x: &Element, y: &Element, n: u64) {
    let alg = &d.alg;
    let f = alg.field();
    let mut overflow = false;
    let mut mul = |op: &BilinearOp, u: &Element, v: &Element| {
        overflow |= alg.overflows(u, v);
        op.apply(f, u, v)
    };
    let (l, r) = (d.left(), d.right());
    let mut yl = y.clone();
    let mut yr = y.clone();
    for _ in 1..n {
        yl = mul(l, &yl, y);
        yr = mul(r, &yr, y);
    }
    let lhs = mul(l, x, &yl);
    let rhs = mul(l, x, &yr);
    if overflow {
        c.truncated();
    } else {
        c.compare(&format!("n={n}"), &[x, y], &lhs, &rhs);
    }
}

/// `gl_n(D)`: `n × n` matrices over `D` with `(X∘Y)_{ik} = Σ_j X_{ij} ∘ Y_{jk}`
/// for both products. Basis element `E_{ij} ⊗ e_k` has index
/// `(i·n + j)·dim + k`.
pub fn matrix_dialgebra(d: &Dialgebra, n: usize) -> Result<Dialgebra> {
    if n == 0 {
        return Err(usage("matrix size must be positive"));
    }
    let dim = d.dim();
    let size = n * n * dim;
    if size > MATRIX_DIM_BOUND {
        return Err(Error::SizeBound {
            what: format!("gl_{n} of a {dim}-dimensional dialgebra"),
            size,
            bound: MATRIX_DIM_BOUND,
        });
    }
    let f = d.alg.field();
    let idx = |i: usize, j: usize, k: usize| (i * n + j) * dim + k;
    let lift = |op: &BilinearOp| {
        BilinearOp::from_fn(size, f, |a, b| {
            let (ij, ka) = (a / dim, a % dim);
            let (jl, kb) = (b / dim, b % dim);
            let (i, j) = (ij / n, ij % n);
            let (j2, l) = (jl / n, jl % n);
            if j != j2 {
                return Vec::new();
            }
            op.row(ka, kb)
                .iter()
                .map(|&(k, v)| (idx(i, l, k as usize), v))
                .collect()
        })
    };
    let label = if d.alg.label().is_empty() {
        format!("gl_{n}")
    } else {
        format!("gl_{n}({})", d.alg.label())
    };
    let alg = Algebra::new(f, size)
        .with_label(label)
        .with_op("left", lift(d.left()))?
        .with_op("right", lift(d.right()))?;
    Dialgebra::new(alg)
}

/// Checks `D(a·Db) = Da·Db = D((Da)·b)` on basis pairs.
pub fn check_operator_condition(a: &Algebra, op: &str, dop: &OperatorMatrix) -> Result<CheckReport> {
    let o = a.op(op)?;
    if dop.rows() != a.dim() || dop.cols() != a.dim() {
        return Err(usage("operator matrix does not match the algebra dimension"));
    }
    let f = a.field();
    let dm = |x: &Element| dop.apply(x, f);
    let m = |x: &Element, y: &Element| o.apply(f, x, y);
    let mut c = Checker::new("operator-condition", 0);
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let (x, y) = (a.basis(i), a.basis(j));
            let (dx, dy) = (dm(&x), dm(&y));
            let mid = m(&dx, &dy);
            c.compare("D(a Db) = Da Db", &[&x, &y], &dm(&m(&x, &dy)), &mid);
            c.compare("Da Db = D(Da b)", &[&x, &y], &mid, &dm(&m(&dx, &y)));
        }
    }
    Ok(c.finish())
}

/// The dialgebra `a⊣b = a·D(b)`, `a⊢b = D(a)·b` on an associative algebra.
pub fn dialgebra_from_operator(a: &Algebra, op: &str, dop: &OperatorMatrix) -> Result<Dialgebra> {
    let assoc = check_associative(a, op, &SweepConfig::default())?;
    if !assoc.passed() {
        return Err(Error::Precondition(Box::new(assoc)));
    }
    let cond = check_operator_condition(a, op, dop)?;
    if !cond.passed() {
        return Err(Error::Precondition(Box::new(cond)));
    }
    let o = a.op(op)?;
    let f = a.field();
    let n = a.dim();
    let images: Vec<Element> = (0..n).map(|j| dop.column(j)).collect();
    let left = BilinearOp::from_fn(n, f, |i, j| o.apply(f, &a.basis(i), &images[j]).support().collect());
    let right = BilinearOp::from_fn(n, f, |i, j| o.apply(f, &images[i], &a.basis(j)).support().collect());
    let label = if a.label().is_empty() {
        "(A,D)".to_string()
    } else {
        format!("({},D)", a.label())
    };
    let alg = Algebra::new(f, n)
        .with_label(label)
        .with_op("left", left)?
        .with_op("right", right)?;
    Dialgebra::new(alg)
}

/// Compares the two routes from an associative algebra to a restricted
/// Leibniz algebra: commutator with `x ↦ x^p`, versus `⊣ = ⊢ = ·` followed by
/// [`dleib`]. Brackets are compared on basis pairs, p-maps on elements.
pub fn check_commutative_diagram(a: &Algebra, op: &str, cfg: &SweepConfig) -> Result<CheckReport> {
    let assoc = check_associative(a, op, &SweepConfig::default())?;
    if !assoc.passed() {
        return Err(Error::Precondition(Box::new(assoc)));
    }
    let f = a.field();
    let o = a.op(op)?;
    let lie = Algebra::new(f, a.dim())
        .with_op("bracket", o.antisymmetrized(f))?
        .with_op("assoc", o.clone())?
        .with_pmap("p", PMap::MatrixPower { op: "assoc".into() })?;
    let leib = dleib(&Dialgebra::associative(a, op)?)?;
    let (b1, b2) = (lie.op("bracket")?, leib.op("bracket")?);

    let mut c = Checker::new("commutative-diagram", cfg.seed);
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let (x, y) = (a.basis(i), a.basis(j));
            c.compare("bracket", &[&x, &y], &b1.apply(f, &x, &y), &b2.apply(f, &x, &y));
        }
    }
    let stream = cfg.stream(f, a.dim(), 0);
    if !stream.is_exhaustive() {
        c.mark_sampled();
    }
    for x in stream {
        let v1 = lie.apply_pmap("p", &x)?;
        let v2 = leib.apply_pmap("frobenius", &x)?;
        c.compare("p-map", &[&x], &v1, &v2);
    }
    Ok(c.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::check_restricted_leibniz;
    use crate::linalg::Matrix;
    use crate::scalars::PrimeField;

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    /// F_p[t]/(t²) with basis 1, t.
    fn dual_numbers(p: u64) -> Algebra {
        let field = f(p);
        let op = BilinearOp::from_triples(2, field, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)]).unwrap();
        Algebra::new(field, 2)
            .with_label("F[t]/t^2")
            .with_op("assoc", op)
            .unwrap()
    }

    fn mat2(p: u64) -> Algebra {
        let field = f(p);
        let op = BilinearOp::from_fn(4, field, |i, j| {
            if i % 2 == j / 2 {
                vec![((i / 2) * 2 + j % 2, 1)]
            } else {
                vec![]
            }
        });
        Algebra::new(field, 4).with_op("assoc", op).unwrap()
    }

    fn proj(p: u64) -> Matrix {
        Matrix::from_rows(f(p), &[vec![1, 0], vec![0, 0]]).unwrap()
    }

    #[test]
    fn associative_dleib_is_commutator() {
        let a = mat2(3);
        let leib = dleib(&Dialgebra::associative(&a, "assoc").unwrap()).unwrap();
        let comm = a.op("assoc").unwrap().antisymmetrized(a.field());
        assert_eq!(leib.op("bracket").unwrap(), &comm);
    }

    #[test]
    fn operator_dialgebra_bracket_and_pmap() {
        let a = dual_numbers(3);
        let field = a.field();
        let dop = proj(3);
        let d = dialgebra_from_operator(&a, "assoc", &dop).unwrap();
        let leib = dleib(&d).unwrap();
        let mul = |x: &Element, y: &Element| a.multiply("assoc", x, y).unwrap();
        for x in a.enumerate_elements(100).unwrap() {
            let dx = dop.apply(&x, field);
            // a^{⊢p} = (Da)^{p−1} a
            let expect = mul(&mul(&dx, &dx), &x);
            assert_eq!(leib.apply_pmap("frobenius", &x).unwrap(), expect);
            for y in a.enumerate_elements(100).unwrap() {
                let dy = dop.apply(&y, field);
                let b = mul(&x, &dy).minus(&mul(&dy, &x), field);
                assert_eq!(leib.multiply("bracket", &x, &y).unwrap(), b);
            }
        }
    }

    #[test]
    fn identity_and_zero_operators() {
        let a = mat2(2);
        let d = dialgebra_from_operator(&a, "assoc", &Matrix::identity(4)).unwrap();
        assert_eq!(d.left(), a.op("assoc").unwrap());
        assert_eq!(d.right(), a.op("assoc").unwrap());
        let z = dialgebra_from_operator(&a, "assoc", &Matrix::zeros(4, 4)).unwrap();
        let leib = dleib(&z).unwrap();
        assert!(leib.op("bracket").unwrap().is_zero());
        for x in a.enumerate_elements(16).unwrap() {
            assert!(leib.apply_pmap("frobenius", &x).unwrap().is_zero());
        }
    }

    #[test]
    fn invalid_operator_is_rejected() {
        // D swaps 1 and t: D(1·D1) = D(t) = 1 but D1·D1 = t² = 0.
        let a = dual_numbers(3);
        let dop = Matrix::from_rows(a.field(), &[vec![0, 1], vec![1, 0]]).unwrap();
        match dialgebra_from_operator(&a, "assoc", &dop) {
            Err(Error::Precondition(r)) => {
                assert_eq!(r.identity, "operator-condition");
                assert!(!r.witnesses.is_empty());
            }
            other => panic!("expected rejection, got {other:?}"),
        }
    }

    #[test]
    fn lemdias_examples() {
        let d = dialgebra_from_operator(&dual_numbers(3), "assoc", &proj(3)).unwrap();
        let a = d.algebra();
        for x in a.sample_elements(10, 4) {
            for y in a.sample_elements(10, 5) {
                assert!(check_lemdias(&d, &x, &y, 1).unwrap().passed());
                assert!(check_lemdias(&d, &x, &y, 3).unwrap().passed());
            }
        }
        assert!(check_lemdias(&d, &a.zero(), &a.zero(), 0).is_err());
        assert!(check_lemdias_basis(&d, 5).passed());
    }

    #[test]
    fn matrix_dialgebras() {
        let field = f(2);
        let one = Algebra::new(field, 1)
            .with_op("assoc", BilinearOp::from_triples(1, field, &[(0, 0, 0, 1)]).unwrap())
            .unwrap();
        let d = Dialgebra::associative(&one, "assoc").unwrap();
        let g1 = matrix_dialgebra(&d, 1).unwrap();
        assert_eq!(g1.left(), d.left());
        let g2 = matrix_dialgebra(&d, 2).unwrap();
        assert_eq!(g2.left(), mat2(2).op("assoc").unwrap());
        assert_eq!(g2.right(), g2.left());

        let ad = dialgebra_from_operator(&dual_numbers(2), "assoc", &proj(2)).unwrap();
        let gl = matrix_dialgebra(&ad, 2).unwrap();
        assert_eq!(gl.dim(), 8);
        let leib = dleib(&gl).unwrap();
        let r = check_restricted_leibniz(&leib, "bracket", "frobenius", &SweepConfig::default()).unwrap();
        assert!(r.passed() && r.coverage.is_exhaustive());
        assert!(matches!(matrix_dialgebra(&ad, 12), Err(Error::SizeBound { .. })));
    }

    #[test]
    fn gl_commutes_with_dleib() {
        // [X,Y]_{il} = Σ_j X_ij ⊣ Y_jl − Y_ij ⊢ X_jl, entrywise D_Leib data.
        let ad = dialgebra_from_operator(&dual_numbers(3), "assoc", &proj(3)).unwrap();
        let gl = dleib(&matrix_dialgebra(&ad, 2).unwrap()).unwrap();
        let field = ad.algebra().field();
        let (l, r) = (ad.left(), ad.right());
        let dim = 2;
        let expected = BilinearOp::from_fn(8, field, |a, b| {
            let (ij, ka) = (a / dim, a % dim);
            let (jl, kb) = (b / dim, b % dim);
            let mut out = Vec::new();
            if ij % 2 == jl / 2 {
                let target = (ij / 2) * 2 + jl % 2;
                out.extend(l.row(ka, kb).iter().map(|&(k, v)| (target * dim + k as usize, v)));
            }
            if jl % 2 == ij / 2 {
                let target = (jl / 2) * 2 + ij % 2;
                out.extend(
                    r.row(kb, ka)
                        .iter()
                        .map(|&(k, v)| (target * dim + k as usize, field.neg(v))),
                );
            }
            out
        });
        assert_eq!(gl.op("bracket").unwrap(), &expected);
    }

    #[test]
    fn commutative_diagram_examples() {
        let cfg = SweepConfig::default();
        let field = f(2);
        let one = Algebra::new(field, 1)
            .with_op("assoc", BilinearOp::from_triples(1, field, &[(0, 0, 0, 1)]).unwrap())
            .unwrap();
        let r = check_commutative_diagram(&one, "assoc", &cfg).unwrap();
        assert!(r.passed());
        assert!(check_commutative_diagram(&dual_numbers(3), "assoc", &cfg)
            .unwrap()
            .passed());
        let r = check_commutative_diagram(&mat2(2), "assoc", &cfg).unwrap();
        assert!(r.passed());
        // 16 bracket pairs plus 16 elements.
        assert_eq!(r.coverage.count(), 32);
    }
}
