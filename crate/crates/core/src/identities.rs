//! Identity checkers for the axiom systems handled by the kernel, and the
//! Jacobson polarization coefficients `s_i(x, y)`.
//!
//! Multilinear identities are checked on basis tuples by default, which is
//! sufficient by linearity; [`Mode::Sample`] switches to seeded random
//! general elements instead. Restrictedness conditions involve a non-linear
//! p-map and therefore always quantify over elements, enumerated when
//! `p^dim` fits under the cap and sampled otherwise.

use crate::algebra::{right_mult, right_power, Algebra, BilinearOp, Element};
use crate::dialgebra::Dialgebra;
use crate::error::{Error, Result};
use crate::report::{split, CheckReport, Checker, Mode, SweepConfig};
use crate::scalars::{LambdaPoly, PrimeField};

type Side = (&'static str, Element, Element);

/// Runs a trilinear identity over basis triples (or sampled triples).
///
/// `eval` returns one `(label, lhs, rhs)` entry per identity it checks.
fn check_trilinear<F>(alg: &Algebra, identity: &str, cfg: &SweepConfig, eval: F) -> CheckReport
where
    F: Fn(&Element, &Element, &Element) -> Vec<Side>,
{
    let mut c = Checker::new(identity, cfg.seed);
    let n = alg.dim();
    match cfg.mode {
        Mode::Exhaustive => {
            let basis: Vec<Element> = (0..n).map(|i| alg.basis(i)).collect();
            let degree = |i: usize| alg.grading().map(|g| g.degrees[i]);
            let cap = alg.grading().map(|g| g.cap);
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let (x, y, z) = (&basis[i], &basis[j], &basis[k]);
                        if let (Some(cap), Some(a), Some(b), Some(d)) = (cap, degree(i), degree(j), degree(k)) {
                            if a + b + d > cap {
                                c.truncated();
                                continue;
                            }
                        }
                        for (label, lhs, rhs) in eval(x, y, z) {
                            c.compare(label, &[x, y, z], &lhs, &rhs);
                        }
                    }
                }
            }
        }
        Mode::Sample => {
            c.mark_sampled();
            for t in cfg.stream(alg.field(), 3 * n, 0) {
                let parts = split3(&t, n);
                let (x, y, z) = (&parts[0], &parts[1], &parts[2]);
                for (label, lhs, rhs) in eval(x, y, z) {
                    c.compare(label, &[x, y, z], &lhs, &rhs);
                }
            }
        }
    }
    c.finish()
}

fn split3(t: &Element, n: usize) -> Vec<Element> {
    if n == 0 {
        return vec![Element::zero(0); 3];
    }
    t.chunks(n).map(|c| Element::from(c.to_vec())).collect()
}

/// `[x,[y,z]] = [[x,y],z] − [[x,z],y]`.
pub fn check_leibniz(alg: &Algebra, bracket: &str, cfg: &SweepConfig) -> Result<CheckReport> {
    let b = alg.op(bracket)?;
    let f = alg.field();
    let m = |u: &Element, v: &Element| b.apply(f, u, v);
    Ok(check_trilinear(alg, "leibniz", cfg, |x, y, z| {
        let lhs = m(x, &m(y, z));
        let rhs = m(&m(x, y), z).minus(&m(&m(x, z), y), f);
        vec![("leibniz", lhs, rhs)]
    }))
}

/// `(xy)z = x(yz)`.
pub fn check_associative(alg: &Algebra, op: &str, cfg: &SweepConfig) -> Result<CheckReport> {
    let o = alg.op(op)?;
    let f = alg.field();
    let m = |u: &Element, v: &Element| o.apply(f, u, v);
    Ok(check_trilinear(alg, "associative", cfg, |x, y, z| {
        vec![("associativity", m(&m(x, y), z), m(x, &m(y, z)))]
    }))
}

/// Associativity of both products and the three diassociative axioms
/// `x⊣(y⊣z) = x⊣(y⊢z)`, `(x⊢y)⊣z = x⊢(y⊣z)`, `(x⊣y)⊢z = (x⊢y)⊢z`.
pub fn check_dias(alg: &Algebra, left: &str, right: &str, cfg: &SweepConfig) -> Result<CheckReport> {
    let (l, r) = (alg.op(left)?, alg.op(right)?);
    let f = alg.field();
    let lm = |u: &Element, v: &Element| l.apply(f, u, v);
    let rm = |u: &Element, v: &Element| r.apply(f, u, v);
    Ok(check_trilinear(alg, "dias", cfg, |x, y, z| {
        vec![
            ("left-assoc", lm(&lm(x, y), z), lm(x, &lm(y, z))),
            ("right-assoc", rm(&rm(x, y), z), rm(x, &rm(y, z))),
            ("axiom1", lm(x, &lm(y, z)), lm(x, &rm(y, z))),
            ("axiom2", lm(&rm(x, y), z), rm(x, &lm(y, z))),
            ("axiom3", rm(&lm(x, y), z), rm(&rm(x, y), z)),
        ]
    }))
}

/// `(a≺b)≺c = a≺(b≺c) + a≺(c≺b)`.
pub fn check_zinbiel(alg: &Algebra, op: &str, cfg: &SweepConfig) -> Result<CheckReport> {
    let o = alg.op(op)?;
    let f = alg.field();
    let m = |u: &Element, v: &Element| o.apply(f, u, v);
    Ok(check_trilinear(alg, "zinbiel", cfg, |a, b, c| {
        let lhs = m(&m(a, b), c);
        let rhs = m(a, &m(b, c)).plus(&m(a, &m(c, b)), f);
        vec![("zinbiel", lhs, rhs)]
    }))
}

/// Right-symmetric associator: `{{x,y},z} − {x,{y,z}} = {{x,z},y} − {x,{z,y}}`.
pub fn check_prelie(alg: &Algebra, op: &str, cfg: &SweepConfig) -> Result<CheckReport> {
    let o = alg.op(op)?;
    let f = alg.field();
    let m = |u: &Element, v: &Element| o.apply(f, u, v);
    Ok(check_trilinear(alg, "prelie", cfg, |x, y, z| {
        let lhs = m(&m(x, y), z).minus(&m(x, &m(y, z)), f);
        let rhs = m(&m(x, z), y).minus(&m(x, &m(z, y)), f);
        vec![("right-symmetry", lhs, rhs)]
    }))
}

/// Antisymmetry (`[x,x] = 0`) and the Jacobi identity.
pub fn check_lie(alg: &Algebra, bracket: &str, cfg: &SweepConfig) -> Result<CheckReport> {
    let b = alg.op(bracket)?;
    Ok(lie_report(alg, b, cfg))
}

fn lie_report(alg: &Algebra, b: &BilinearOp, cfg: &SweepConfig) -> CheckReport {
    let f = alg.field();
    let n = alg.dim();
    let m = |u: &Element, v: &Element| b.apply(f, u, v);
    // [x,x] = 0 for all x is equivalent to [e_i,e_i] = 0 and
    // [e_i,e_j] = −[e_j,e_i] on the basis, in every characteristic.
    let mut anti = Checker::new("antisymmetry", cfg.seed);
    for i in 0..n {
        let ei = alg.basis(i);
        anti.compare("alternating", &[&ei], &m(&ei, &ei), &alg.zero());
        for j in (i + 1)..n {
            let ej = alg.basis(j);
            let s = m(&ei, &ej).plus(&m(&ej, &ei), f);
            anti.compare("antisymmetry", &[&ei, &ej], &s, &alg.zero());
        }
    }
    let jacobi = check_trilinear(alg, "jacobi", cfg, |x, y, z| {
        // [[x,y],z] + [[y,z],x] + [[z,x],y] = 0
        let s = m(&m(x, y), z).plus(&m(&m(y, z), x), f).plus(&m(&m(z, x), y), f);
        vec![("jacobi", s, alg.zero())]
    });
    CheckReport::combine("lie", &[anti.finish(), jacobi])
}

/// Failing Lie report for `op`, if it is not a Lie bracket.
pub(crate) fn lie_witness(alg: &Algebra, _name: &str, op: &BilinearOp) -> Option<CheckReport> {
    let r = lie_report(alg, op, &SweepConfig::default());
    (!r.passed()).then_some(r)
}

fn require(report: CheckReport) -> Result<()> {
    if report.passed() {
        Ok(())
    } else {
        Err(Error::Precondition(Box::new(report)))
    }
}

/// Sweeps `r_x^p = r_{x^[p]}` over elements `x`, with `r_x` the right
/// multiplication by `x` in `op`.
fn restricted_sweep(alg: &Algebra, identity: &str, op: &str, pmap: &str, cfg: &SweepConfig) -> Result<CheckReport> {
    let o = alg.op(op)?;
    alg.pmap(pmap)?;
    let f = alg.field();
    let p = f.p() as u64;
    let mut c = Checker::new(identity, cfg.seed);
    let stream = cfg.stream(f, alg.dim(), 0);
    if !stream.is_exhaustive() {
        c.mark_sampled();
    }
    for x in stream {
        let lhs = right_mult(o, f, &x).pow(p, f);
        let xp = alg.apply_pmap(pmap, &x)?;
        let rhs = right_mult(o, f, &xp);
        c.compare("r_x^p = r_(x^[p])", &[&x], lhs.entries(), rhs.entries());
    }
    Ok(c.finish())
}

/// `r_x^p = r_{x^[p]}` for every element `x`. The bracket must pass
/// [`check_leibniz`]; otherwise the Leibniz report is returned as a
/// precondition error.
pub fn check_restricted_leibniz(alg: &Algebra, bracket: &str, pmap: &str, cfg: &SweepConfig) -> Result<CheckReport> {
    require(check_leibniz(alg, bracket, &SweepConfig::default())?)?;
    restricted_sweep(alg, "restricted-leibniz", bracket, pmap, cfg)
}

/// `R_a^p = R_{a^{p}}` for every element `a`, where `R_a` is right
/// multiplication in the pre-Lie product.
pub fn check_restricted_prelie(alg: &Algebra, op: &str, pmap: &str, cfg: &SweepConfig) -> Result<CheckReport> {
    require(check_prelie(alg, op, &SweepConfig::default())?)?;
    restricted_sweep(alg, "restricted-prelie", op, pmap, cfg)
}

/// The three restricted Lie axioms:
/// `(αx)^[p] = α^p x^[p]`, `[x, y^[p]] = [..[x,y],..,y]` (p-fold), and the
/// Jacobson sum formula for `(x+y)^[p]`.
pub fn check_restricted_lie(alg: &Algebra, bracket: &str, pmap: &str, cfg: &SweepConfig) -> Result<CheckReport> {
    let b = alg.op(bracket)?;
    require(lie_report(alg, b, &SweepConfig::default()))?;
    alg.pmap(pmap)?;
    let f = alg.field();
    let p = f.p() as u64;
    let n = alg.dim();
    let mut c = Checker::new("restricted-lie", cfg.seed);

    let scalars = cfg.stream(f, n + 1, 1);
    if !scalars.is_exhaustive() {
        c.mark_sampled();
    }
    for t in scalars {
        let alpha = t[0];
        let x = Element::from(t[1..].to_vec());
        let lhs = alg.apply_pmap(pmap, &x.scaled(alpha, f))?;
        let rhs = alg.apply_pmap(pmap, &x)?.scaled(f.pow(alpha, p), f);
        c.compare("axiom1", &[&[alpha], &x], &lhs, &rhs);
    }

    let elems = cfg.stream(f, n, 2);
    if !elems.is_exhaustive() {
        c.mark_sampled();
    }
    for y in elems {
        let lhs = right_mult(b, f, &y).pow(p, f);
        let rhs = right_mult(b, f, &alg.apply_pmap(pmap, &y)?);
        c.compare("axiom2", &[&y], lhs.entries(), rhs.entries());
    }

    let pairs = cfg.stream(f, 2 * n, 3);
    if !pairs.is_exhaustive() {
        c.mark_sampled();
    }
    for t in pairs {
        let xy = split(&t, n);
        let (x, y) = (&xy[0], &xy[1]);
        let lhs = alg.apply_pmap(pmap, &x.plus(y, f))?;
        let mut rhs = alg.apply_pmap(pmap, x)?.plus(&alg.apply_pmap(pmap, y)?, f);
        let s = jacobson_coefficients(f, x, y, |u, v| b.apply(f, u, v));
        rhs.add_assign(&s.sum(f, n), f);
        c.compare("axiom3", &[x, y], &lhs, &rhs);
    }
    Ok(c.finish())
}

/// The Jacobson coefficients `s_1(x,y), …, s_{p−1}(x,y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobsonCoefficients {
    /// `s[i]` holds `s_{i+1}(x, y)`.
    pub s: Vec<Element>,
}

impl JacobsonCoefficients {
    pub fn sum(&self, field: PrimeField, dim: usize) -> Element {
        self.s.iter().fold(Element::zero(dim), |mut acc, si| {
            acc.add_assign(si, field);
            acc
        })
    }
}

/// Polarization: `i·s_i(x,y)` is the coefficient of `λ^{i−1}` in the
/// (p−1)-fold right bracketing `[…[x, λx+y], …, λx+y]`.
pub fn jacobson_coefficients<F>(field: PrimeField, x: &Element, y: &Element, bracket: F) -> JacobsonCoefficients
where
    F: Fn(&Element, &Element) -> Element,
{
    let dim = x.len();
    let p = field.p() as usize;
    let step = LambdaPoly::linear(x.clone(), y.clone()).expect("same dimension");
    let mut acc = LambdaPoly::constant(x.clone());
    for _ in 0..p - 1 {
        acc = acc.bracket(&step, field, &bracket).expect("same dimension");
    }
    let s = (1..p)
        .map(|i| {
            let inv = field.inv(i as u32).expect("1 <= i < p");
            acc.coeff(i - 1).scaled(inv, field)
        })
        .collect();
    let _ = dim;
    JacobsonCoefficients { s }
}

/// [`jacobson_coefficients`] for a named bracket of `alg`.
pub fn jacobson_si(alg: &Algebra, bracket: &str, x: &Element, y: &Element) -> Result<JacobsonCoefficients> {
    let b = alg.op(bracket)?;
    let f = alg.field();
    if x.len() != alg.dim() || y.len() != alg.dim() {
        return Err(Error::Usage("element dimension mismatch".into()));
    }
    Ok(jacobson_coefficients(f, x, y, |u, v| b.apply(f, u, v)))
}

/// In a dialgebra with Leibniz bracket `[u,v] = u⊣v − v⊢u` and p-map
/// `u ↦ u^{⊢p}`, checks
/// `[z,(x+y)^[p]] = [z,x^[p]] + [z,y^[p]] + [z, Σ s_i(x,y)]` with the `s_i`
/// computed from the Leibniz bracket.
pub fn check_dleib_jacobson_bracket(d: &Dialgebra, z: &Element, x: &Element, y: &Element) -> Result<CheckReport> {
    let alg = d.algebra();
    for e in [z, x, y] {
        if e.len() != alg.dim() {
            return Err(Error::Usage("element dimension mismatch".into()));
        }
    }
    let mut c = Checker::new("dleib-jacobson-bracket", 0);
    jacobson_bracket_instance(d, &mut c, z, x, y);
    Ok(c.finish())
}

/// [`check_dleib_jacobson_bracket`] on `count` seeded random triples.
pub fn check_dleib_jacobson_random(d: &Dialgebra, count: usize, seed: u64) -> CheckReport {
    let alg = d.algebra();
    let n = alg.dim();
    let mut c = Checker::new("dleib-jacobson-bracket", seed);
    c.mark_sampled();
    let cfg = SweepConfig::default().sampled().with_samples(count).with_seed(seed);
    for t in cfg.stream(alg.field(), 3 * n, 0) {
        let parts = split3(&t, n);
        jacobson_bracket_instance(d, &mut c, &parts[0], &parts[1], &parts[2]);
    }
    c.finish()
}

fn jacobson_bracket_instance(d: &Dialgebra, c: &mut Checker, z: &Element, x: &Element, y: &Element) {
    let alg = d.algebra();
    let f = alg.field();
    let p = f.p() as u64;
    let (l, r) = (d.left(), d.right());
    let bracket = |u: &Element, v: &Element| l.apply(f, u, v).minus(&r.apply(f, v, u), f);
    let pmap = |u: &Element| right_power(r, f, u, p);
    let lhs = bracket(z, &pmap(&x.plus(y, f)));
    let s = jacobson_coefficients(f, x, y, bracket);
    let mut rhs = bracket(z, &pmap(x)).plus(&bracket(z, &pmap(y)), f);
    rhs.add_assign(&bracket(z, &s.sum(f, alg.dim())), f);
    c.compare("jacobson-bracket", &[z, x, y], &lhs, &rhs);
}
