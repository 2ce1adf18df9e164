//! Named example algebras shared by the acceptance suite, the command-line
//! tool and the integration tests.
//!
//! Associative fixtures carry their product as `assoc`; Leibniz fixtures
//! carry `bracket` with a restricted p-map.

use crate::algebra::{Algebra, BilinearOp, Element, PMap, DEFAULT_CAP};
use crate::dialgebra::{dialgebra_from_operator, dleib, matrix_dialgebra, Dialgebra};
use crate::error::Result;
use crate::free::free_zinbiel;
use crate::linalg::Matrix;
use crate::prelie::{tensor_prelie, TensorAlgebraHandle};
use crate::scalars::PrimeField;

/// Primes used by the fixture suites.
pub const SUITE_PRIMES: [u64; 3] = [2, 3, 5];

fn field(p: u64) -> PrimeField {
    PrimeField::new(p).expect("suite primes are prime")
}

fn assoc(p: u64, dim: usize, label: &str, triples: &[(usize, usize, usize, u64)]) -> Algebra {
    let f = field(p);
    let op = BilinearOp::from_triples(dim, f, triples).expect("fixture tables are well formed");
    Algebra::new(f, dim)
        .with_label(label)
        .with_op("assoc", op)
        .expect("dimension matches")
}

/// `F_p[t]/(t^n)` with basis `1, t, …, t^{n-1}`.
pub fn truncated_polynomials(p: u64, n: usize) -> Algebra {
    let f = field(p);
    let op = BilinearOp::from_fn(n, f, |i, j| if i + j < n { vec![(i + j, 1)] } else { vec![] });
    Algebra::new(f, n)
        .with_label(format!("F{p}[t]/t^{n}"))
        .with_op("assoc", op)
        .expect("dimension matches")
}

/// The group algebra of the cyclic group of order `n`.
pub fn cyclic_group_algebra(p: u64, n: usize) -> Algebra {
    let f = field(p);
    let op = BilinearOp::from_fn(n, f, |i, j| vec![((i + j) % n, 1)]);
    Algebra::new(f, n)
        .with_label(format!("F{p}[C{n}]"))
        .with_op("assoc", op)
        .expect("dimension matches")
}

/// `F_p^n` with the componentwise product.
pub fn product_of_fields(p: u64, n: usize) -> Algebra {
    let f = field(p);
    let op = BilinearOp::from_fn(n, f, |i, j| if i == j { vec![(i, 1)] } else { vec![] });
    Algebra::new(f, n)
        .with_label(format!("F{p}^{n}"))
        .with_op("assoc", op)
        .expect("dimension matches")
}

/// `M_n(F_p)` with basis `E_ij` at index `i·n + j`.
pub fn matrix_algebra(p: u64, n: usize) -> Algebra {
    let f = field(p);
    let op = BilinearOp::from_fn(n * n, f, |a, b| {
        let (i, j) = (a / n, a % n);
        let (k, l) = (b / n, b % n);
        if j == k {
            vec![(i * n + l, 1)]
        } else {
            vec![]
        }
    });
    Algebra::new(f, n * n)
        .with_label(format!("M{n}(F{p})"))
        .with_op("assoc", op)
        .expect("dimension matches")
}

/// Upper triangular 2×2 matrices, basis `E11, E12, E22`.
pub fn upper_triangular(p: u64) -> Algebra {
    assoc(
        p,
        3,
        &format!("T2(F{p})"),
        &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 2, 1, 1), (2, 2, 2, 1)],
    )
}

/// Strictly upper triangular 3×3 matrices, basis `E12, E13, E23`.
pub fn strictly_upper_3(p: u64) -> Algebra {
    assoc(p, 3, &format!("N3(F{p})"), &[(0, 2, 1, 1)])
}

pub fn zero_product(p: u64, dim: usize) -> Algebra {
    let f = field(p);
    Algebra::new(f, dim)
        .with_label(format!("zero{dim}(F{p})"))
        .with_op("assoc", BilinearOp::zero(dim))
        .expect("dimension matches")
}

/// Associative fixtures of dimension 1 to 4 over `F_p`.
pub fn associative_fixtures(p: u64) -> Vec<Algebra> {
    vec![
        truncated_polynomials(p, 1),
        truncated_polynomials(p, 2),
        truncated_polynomials(p, 3),
        truncated_polynomials(p, 4),
        product_of_fields(p, 2),
        product_of_fields(p, 3),
        cyclic_group_algebra(p, 2),
        cyclic_group_algebra(p, 3),
        upper_triangular(p),
        strictly_upper_3(p),
        matrix_algebra(p, 2),
        zero_product(p, 2),
    ]
}

/// An associative algebra with an operator `D` satisfying
/// `D(a·Db) = Da·Db = D(Da·b)`; `rows` is the matrix of `D` (columns are
/// images of basis vectors).
pub struct OperatorFixture {
    pub algebra: Algebra,
    pub name: &'static str,
    pub rows: Vec<Vec<u64>>,
}

impl OperatorFixture {
    pub fn matrix(&self) -> Matrix {
        Matrix::from_rows(self.algebra.field(), &self.rows).expect("fixture matrices are square")
    }

    pub fn dialgebra(&self) -> Result<Dialgebra> {
        let d = dialgebra_from_operator(&self.algebra, "assoc", &self.matrix())?;
        let label = format!("({},{})", self.algebra.label(), self.name);
        Dialgebra::new(d.into_algebra().with_label(label))
    }
}

/// Operators on small associative algebras, valid in every characteristic.
pub fn operator_fixtures(p: u64) -> Vec<OperatorFixture> {
    let dual = truncated_polynomials(p, 2);
    let pair = product_of_fields(p, 2);
    let tri = upper_triangular(p);
    let op = |algebra: &Algebra, name, rows: Vec<Vec<u64>>| OperatorFixture {
        algebra: algebra.clone(),
        name,
        rows,
    };
    vec![
        op(&dual, "id", vec![vec![1, 0], vec![0, 1]]),
        op(&dual, "0", vec![vec![0, 0], vec![0, 0]]),
        op(&dual, "a+bt->a", vec![vec![1, 0], vec![0, 0]]),
        op(&dual, "a+bt->b", vec![vec![0, 1], vec![0, 0]]),
        op(&dual, "a+bt->at", vec![vec![0, 0], vec![1, 0]]),
        op(&pair, "(a,b)->(a,0)", vec![vec![1, 0], vec![0, 0]]),
        op(&pair, "(a,b)->(a,a)", vec![vec![1, 0], vec![1, 0]]),
        op(&pair, "(a,b)->(b,b)", vec![vec![0, 1], vec![0, 1]]),
        op(&tri, "diag", vec![vec![1, 0, 0], vec![0, 0, 0], vec![0, 0, 1]]),
    ]
}

/// The dialgebra suite: every associative fixture, every operator
/// dialgebra, and `gl_2` of each, over `F_2`, `F_3` and `F_5`.
pub fn dialgebra_suite() -> Result<Vec<Dialgebra>> {
    let mut base = Vec::new();
    for p in SUITE_PRIMES {
        for a in associative_fixtures(p) {
            base.push(Dialgebra::associative(&a, "assoc")?);
        }
        for o in operator_fixtures(p) {
            base.push(o.dialgebra()?);
        }
    }
    let mut all = base.clone();
    for d in &base {
        all.push(matrix_dialgebra(d, 2)?);
    }
    Ok(all)
}

/// `[e1, e2] = e1` (all other brackets 0), a Leibniz algebra that is not
/// antisymmetric. p-maps: `p` sends `a e1 + b e2 ↦ b e2`; `zero`.
pub fn l2(p: u64) -> Algebra {
    let f = field(p);
    let op = BilinearOp::from_triples(2, f, &[(0, 1, 0, 1)]).expect("well formed");
    let alg = Algebra::new(f, 2)
        .with_label(format!("L2(F{p})"))
        .with_op("bracket", op)
        .expect("dimension matches");
    let values = alg
        .enumerate_elements(DEFAULT_CAP)
        .expect("p^2 elements fit")
        .map(|x| Element::from(vec![0, x[1]]))
        .collect();
    alg.with_pmap("p", PMap::Table(values))
        .and_then(|a| a.with_pmap("zero", PMap::Zero))
        .expect("valid p-maps")
}

/// Abelian Leibniz algebra with the zero p-map.
pub fn abelian(p: u64, dim: usize) -> Algebra {
    Algebra::new(field(p), dim)
        .with_label(format!("ab{dim}(F{p})"))
        .with_op("bracket", BilinearOp::zero(dim))
        .and_then(|a| a.with_pmap("zero", PMap::Zero))
        .expect("valid fixture")
}

/// `[e, e] = e` in dimension 1: not a Leibniz algebra.
pub fn broken(p: u64) -> Algebra {
    Algebra::new(field(p), 1)
        .with_label("broken")
        .with_op(
            "bracket",
            BilinearOp::from_triples(1, field(p), &[(0, 0, 0, 1)]).expect("well formed"),
        )
        .expect("dimension matches")
}

/// A restricted Leibniz algebra with the names of its bracket and p-map.
#[derive(Clone, Debug)]
pub struct RestrictedFixture {
    pub algebra: Algebra,
    pub bracket: &'static str,
    pub pmap: &'static str,
}

/// Restricted Leibniz fixtures over `F_2` and `F_3` of dimension at most 3.
pub fn restricted_fixtures() -> Result<Vec<RestrictedFixture>> {
    let mut out = Vec::new();
    let fixture = |algebra, pmap| RestrictedFixture {
        algebra,
        bracket: "bracket",
        pmap,
    };
    for p in [2, 3] {
        out.push(fixture(abelian(p, 1), "zero"));
        out.push(fixture(abelian(p, 2), "zero"));
        out.push(fixture(l2(p), "p"));
        for a in [
            truncated_polynomials(p, 2),
            product_of_fields(p, 2),
            upper_triangular(p),
        ] {
            out.push(fixture(dleib(&Dialgebra::associative(&a, "assoc")?)?, "frobenius"));
        }
        for o in operator_fixtures(p).into_iter().filter(|o| o.algebra.dim() == 2) {
            out.push(fixture(dleib(&o.dialgebra()?)?, "frobenius"));
        }
    }
    Ok(out)
}

/// Tensor products `g ⊗ R` with `R` a truncated free Zinbiel algebra.
pub fn tensor_suite() -> Result<Vec<TensorAlgebraHandle>> {
    let mut out = Vec::new();
    for p in SUITE_PRIMES {
        let f = field(p);
        let mut factors = vec![l2(p), abelian(p, 2)];
        factors.push(dleib(&Dialgebra::associative(&upper_triangular(p), "assoc")?)?);
        let ops = operator_fixtures(p);
        factors.push(dleib(&ops[3].dialgebra()?)?);
        factors.push(dleib(&ops[8].dialgebra()?)?);
        let zin = [(1, 3), (1, 4), (2, 3)];
        for g in &factors {
            for &(gens, d) in &zin {
                let r = free_zinbiel(f, gens, d)?.to_algebra();
                if g.dim() * r.dim() <= crate::prelie::TENSOR_DIM_BOUND {
                    out.push(tensor_prelie(g, "bracket", &r, "zinbiel")?);
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::{check_associative, check_leibniz, check_restricted_leibniz};
    use crate::report::SweepConfig;

    #[test]
    fn associative_fixtures_are_associative() {
        for p in SUITE_PRIMES {
            let fx = associative_fixtures(p);
            assert!(fx.len() >= 10);
            for a in fx {
                let r = check_associative(&a, "assoc", &SweepConfig::default()).unwrap();
                assert!(r.passed(), "{}: {}", a.label(), r.summary());
            }
        }
    }

    #[test]
    fn operators_are_valid() {
        for p in SUITE_PRIMES {
            let ops = operator_fixtures(p);
            assert!(ops.len() >= 5);
            for o in &ops {
                assert!(o.dialgebra().is_ok(), "{} on {}", o.name, o.algebra.label());
            }
        }
    }

    #[test]
    fn suite_sizes() {
        assert!(dialgebra_suite().unwrap().len() >= 50);
        assert!(tensor_suite().unwrap().len() >= 20);
    }

    #[test]
    fn restricted_fixtures_are_restricted() {
        let cfg = SweepConfig::default();
        for fx in restricted_fixtures().unwrap() {
            let a = &fx.algebra;
            assert!(check_leibniz(a, fx.bracket, &cfg).unwrap().passed());
            let r = check_restricted_leibniz(a, fx.bracket, fx.pmap, &cfg).unwrap();
            assert!(r.passed(), "{}: {}", a.label(), r.summary());
        }
    }

    #[test]
    fn broken_is_not_leibniz() {
        let r = check_leibniz(&broken(2), "bracket", &SweepConfig::default()).unwrap();
        assert!(r.failed());
    }
}
