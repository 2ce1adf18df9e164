//! Tensor products `g ⊗ R` of a Leibniz algebra with a Zinbiel algebra:
//! the pre-Lie product `{x⊗a, y⊗b} = [x,y] ⊗ (a≺b)`, its vanishing
//! p-th right powers, and the antisymmetrized Lie bracket.

use crate::algebra::{right_mult, right_power, Algebra, BilinearOp, Element, PMap};
use crate::error::{usage, Error, Result};
use crate::identities::{check_leibniz, check_lie, check_prelie, check_restricted_lie, check_zinbiel};
use crate::report::{CheckReport, Checker, SweepConfig};

/// Largest product dimension [`tensor_prelie`] will assemble.
pub const TENSOR_DIM_BOUND: usize = 64;

/// Note attached to whole-space restricted checks on a tensor product.
pub const ZERO_EXTENSION_NOTE: &str = "p-map: the pure-tensor power formula, extended to sums of pure tensors by zero";

/// `g ⊗ R` with the factors it was built from. Basis element `e_i ⊗ f_j`
/// has index `i * dim(R) + j`.
///
/// The product carries ops `prelie` and `lie`, and p-maps `tensor_p` (the
/// pure-tensor formula), `zero`, and `prelie_power` (`u ↦ u^{p}` for every
/// `u`, the right power of `prelie`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorAlgebraHandle {
    gfactor: Algebra,
    gbracket: String,
    rfactor: Algebra,
    rop: String,
    product: Algebra,
}

impl TensorAlgebraHandle {
    pub fn gfactor(&self) -> &Algebra {
        &self.gfactor
    }

    pub fn rfactor(&self) -> &Algebra {
        &self.rfactor
    }

    pub fn product(&self) -> &Algebra {
        &self.product
    }

    pub fn into_product(self) -> Algebra {
        self.product
    }

    pub fn gbracket(&self) -> &BilinearOp {
        self.gfactor.op(&self.gbracket).expect("validated at construction")
    }

    pub fn zinbiel(&self) -> &BilinearOp {
        self.rfactor.op(&self.rop).expect("validated at construction")
    }

    pub fn prelie(&self) -> &BilinearOp {
        self.product.op("prelie").expect("assembled at construction")
    }

    pub fn lie(&self) -> &BilinearOp {
        self.product.op("lie").expect("assembled at construction")
    }

    pub fn index(&self, i: usize, j: usize) -> usize {
        i * self.rfactor.dim() + j
    }

    /// `y ⊗ b` as an element of the product.
    pub fn pure(&self, y: &Element, b: &Element) -> Element {
        let f = self.product.field();
        let mut out = Vec::with_capacity(self.product.dim());
        for &a in y.iter() {
            out.extend(b.iter().map(|&c| f.mul(a, c)));
        }
        Element::from(out)
    }

    /// Splits a pure tensor into factors `(y, b)` with `u = y ⊗ b`.
    pub fn factor(&self, u: &Element) -> Result<(Element, Element)> {
        let f = self.product.field();
        let (gdim, rdim) = (self.gfactor.dim(), self.rfactor.dim());
        if u.len() != gdim * rdim {
            return Err(usage(format!("{u} has the wrong dimension for the tensor product")));
        }
        if !crate::algebra::is_pure_tensor(f, u, gdim, rdim) {
            return Err(usage(format!("{u} is not a pure tensor")));
        }
        let Some(pivot) = u.iter().position(|&a| a != 0) else {
            return Ok((self.gfactor.zero(), self.rfactor.zero()));
        };
        let (pr, pc) = (pivot / rdim, pivot % rdim);
        let inv = f.inv(u[pivot])?;
        let b = Element::from(u[pr * rdim..(pr + 1) * rdim].to_vec());
        let y = Element::from((0..gdim).map(|i| f.mul(u[i * rdim + pc], inv)).collect::<Vec<_>>());
        Ok((y, b))
    }
}

fn require(report: CheckReport) -> Result<()> {
    if report.passed() {
        Ok(())
    } else {
        Err(Error::Precondition(Box::new(report)))
    }
}

/// Assembles `g ⊗ R` after checking that `bracket` is Leibniz on `g` and
/// `zop` is Zinbiel on `R`, then verifies the pre-Lie identity on the result.
pub fn tensor_prelie(g: &Algebra, bracket: &str, r: &Algebra, zop: &str) -> Result<TensorAlgebraHandle> {
    if g.field() != r.field() {
        return Err(usage("tensor factors live over different fields"));
    }
    let (gdim, rdim) = (g.dim(), r.dim());
    let dim = gdim * rdim;
    if dim > TENSOR_DIM_BOUND {
        return Err(Error::SizeBound {
            what: "tensor product dimension".into(),
            size: dim,
            bound: TENSOR_DIM_BOUND,
        });
    }
    let cfg = SweepConfig::default();
    require(check_leibniz(g, bracket, &cfg)?)?;
    require(check_zinbiel(r, zop, &cfg)?)?;

    let f = g.field();
    let gb = g.op(bracket)?;
    let zb = r.op(zop)?;
    let prelie = BilinearOp::from_fn(dim, f, |u, v| {
        let (i, a) = (u / rdim, u % rdim);
        let (j, b) = (v / rdim, v % rdim);
        let mut out = Vec::new();
        for &(k, x) in gb.row(i, j) {
            for &(c, y) in zb.row(a, b) {
                out.push((k as usize * rdim + c as usize, f.mul(x, y)));
            }
        }
        out
    });
    let lie = prelie.antisymmetrized(f);
    let label = format!("{}⊗{}", name_or(g, "g"), name_or(r, "R"));
    let product = Algebra::new(f, dim)
        .with_label(label)
        .with_op("prelie", prelie)?
        .with_op("lie", lie)?
        .with_pmap(
            "tensor_p",
            PMap::TensorFormula {
                op: "prelie".into(),
                gdim,
                rdim,
            },
        )?
        .with_pmap("zero", PMap::Zero)?
        .with_pmap("prelie_power", PMap::RightPower { op: "prelie".into() })?;
    require(check_prelie(&product, "prelie", &cfg)?)?;
    Ok(TensorAlgebraHandle {
        gfactor: g.clone(),
        gbracket: bracket.to_string(),
        rfactor: r.clone(),
        rop: zop.to_string(),
        product,
    })
}

fn name_or<'a>(a: &'a Algebra, fallback: &'a str) -> &'a str {
    if a.label().is_empty() {
        fallback
    } else {
        a.label()
    }
}

/// Both factors of the pure-tensor power formula and their tensor product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorPower {
    /// `[..[y,y],..,y]` with `p` factors.
    pub gfactor: Element,
    /// `(..(b≺b)≺..)≺b` with `p` factors.
    pub rfactor: Element,
    pub value: Element,
}

/// `(y ⊗ b)^{p}`, evaluated factor by factor.
///
/// The Zinbiel factor has `p` factors and equals `(p−1)! b≺(b≺(…≺b))`, so
/// it is nonzero in general; what vanishes is the operator `R_b^p`, which is
/// checked here. For a Lie algebra `g` the bracket factor is 0 from `[y,y] = 0`.
pub fn tensor_pmap(t: &TensorAlgebraHandle, y: &Element, b: &Element) -> Result<TensorPower> {
    if y.len() != t.gfactor.dim() || b.len() != t.rfactor.dim() {
        return Err(usage("tensor factor of the wrong dimension"));
    }
    let f = t.product.field();
    let p = f.p() as u64;
    let gfactor = right_power(t.gbracket(), f, y, p);
    let rfactor = right_power(t.zinbiel(), f, b, p);
    if !right_mult(t.zinbiel(), f, b).pow(p, f).is_zero() {
        return Err(Error::Internal(format!(
            "right multiplication by {b} in the Zinbiel factor has nonzero p-th power"
        )));
    }
    let value = t.pure(&gfactor, &rfactor);
    Ok(TensorPower {
        gfactor,
        rfactor,
        value,
    })
}

/// [`tensor_pmap`] on a product element, which must be a pure tensor.
pub fn tensor_pmap_element(t: &TensorAlgebraHandle, u: &Element) -> Result<TensorPower> {
    let (y, b) = t.factor(u)?;
    tensor_pmap(t, &y, &b)
}

/// `R_u^p = 0` for every basis pure tensor `u` and for general elements
/// (all of them when enumerable, `cfg.samples` seeded draws otherwise),
/// with the right-bracket identities on `g` that force the vanishing.
pub fn check_tensor_restricted(t: &TensorAlgebraHandle, cfg: &SweepConfig) -> Result<CheckReport> {
    let alg = &t.product;
    let f = alg.field();
    let p = f.p() as u64;
    let n = alg.dim();
    let prelie = t.prelie();
    let zero_op = vec![0u32; n * n];
    let mut c = Checker::new("tensor-restricted", cfg.seed);

    for i in 0..t.gfactor.dim() {
        for a in 0..t.rfactor.dim() {
            let u = alg.basis(t.index(i, a));
            let power = right_mult(prelie, f, &u).pow(p, f);
            c.compare("basis", &[&u], power.entries(), &zero_op);
            let formula = tensor_pmap(t, &t.gfactor.basis(i), &t.rfactor.basis(a))?;
            let direct = right_power(prelie, f, &u, p);
            c.compare("formula", &[&u], &formula.value, &direct);
            let image = right_mult(prelie, f, &formula.value);
            c.compare("R_(u^{p}) = 0", &[&u], image.entries(), &zero_op);
        }
    }

    let general = cfg.stream(f, n, 4);
    if !general.is_exhaustive() {
        c.mark_sampled();
    }
    for u in general {
        let power = right_mult(prelie, f, &u).pow(p, f);
        c.compare("general", &[&u], power.entries(), &zero_op);
    }

    let gb = t.gbracket();
    let gdim = t.gfactor.dim();
    let zero_g = Element::zero(gdim);
    for x in 0..gdim {
        let x = t.gfactor.basis(x);
        for y in 0..gdim {
            let y = t.gfactor.basis(y);
            let yy = gb.apply(f, &y, &y);
            c.compare("[x,[y,y]] = 0", &[&x, &y], &gb.apply(f, &x, &yy), &zero_g);
            for z in 0..gdim {
                let z = t.gfactor.basis(z);
                let lhs = gb.apply(f, &x, &gb.apply(f, &y, &z));
                let rhs = gb.apply(f, &x, &gb.apply(f, &z, &y)).scaled(f.neg(1), f);
                c.compare("[x,[y,z]] = -[x,[z,y]]", &[&x, &y, &z], &lhs, &rhs);
            }
        }
    }
    c.note(ZERO_EXTENSION_NOTE);
    Ok(c.finish())
}

/// Adds `lie = op − op^opposite` to a pre-Lie algebra and verifies that it
/// is a Lie bracket.
pub fn prelie_to_lie(alg: &Algebra, op: &str) -> Result<Algebra> {
    let cfg = SweepConfig::default();
    require(check_prelie(alg, op, &cfg)?)?;
    let lie = alg.op(op)?.antisymmetrized(alg.field());
    let out = alg.clone().with_op("lie", lie)?;
    require(check_lie(&out, "lie", &cfg)?)?;
    Ok(out)
}

/// The Lie structure on `g ⊗ R`: the explicit bracket
/// `[x⊗a, y⊗b] = [x,y]⊗(a≺b) − [y,x]⊗(b≺a)` against the antisymmetrized
/// product on all basis pairs, the Lie identities, and the restricted Lie
/// axioms with the zero p-map.
pub fn check_corollary(t: &TensorAlgebraHandle, cfg: &SweepConfig) -> Result<CheckReport> {
    check_corollary_with(t, "zero", cfg)
}

/// [`check_corollary`] with any p-map attached to the product.
pub fn check_corollary_with(t: &TensorAlgebraHandle, pmap: &str, cfg: &SweepConfig) -> Result<CheckReport> {
    let alg = &t.product;
    let formula = check_corollary_bracket(t);
    let lie_report = check_lie(alg, "lie", &SweepConfig::default())?;
    let mut restricted = if lie_report.passed() {
        check_restricted_lie(alg, "lie", pmap, cfg)?
    } else {
        lie_report.clone()
    };
    if pmap == "zero" {
        restricted.notes.push(ZERO_EXTENSION_NOTE.into());
    }
    Ok(CheckReport::combine("corollary", &[formula, lie_report, restricted]))
}

/// `[x⊗a, y⊗b] = [x,y]⊗(a≺b) − [y,x]⊗(b≺a)` against the `lie` op, on all
/// basis pairs.
pub fn check_corollary_bracket(t: &TensorAlgebraHandle) -> CheckReport {
    let alg = &t.product;
    let f = alg.field();
    let (gdim, rdim) = (t.gfactor.dim(), t.rfactor.dim());
    let (gb, zb, lie) = (t.gbracket(), t.zinbiel(), t.lie());
    let mut c = Checker::new("corollary-bracket", 0);
    for i in 0..gdim {
        for a in 0..rdim {
            let u = alg.basis(t.index(i, a));
            for j in 0..gdim {
                for b in 0..rdim {
                    let v = alg.basis(t.index(j, b));
                    let (x, y) = (t.gfactor.basis(i), t.gfactor.basis(j));
                    let (ea, eb) = (t.rfactor.basis(a), t.rfactor.basis(b));
                    let mut formula = t.pure(&gb.apply(f, &x, &y), &zb.apply(f, &ea, &eb));
                    formula.sub_assign(&t.pure(&gb.apply(f, &y, &x), &zb.apply(f, &eb, &ea)), f);
                    c.compare("bracket formula", &[&u, &v], &formula, &lie.apply(f, &u, &v));
                }
            }
        }
    }
    c.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free::free_zinbiel;
    use crate::report::Status;
    use crate::testutil::{abelian, field, l2};

    fn l2_zin(p: u64, g: usize, d: usize) -> TensorAlgebraHandle {
        let r = free_zinbiel(field(p), g, d).unwrap().to_algebra();
        tensor_prelie(&l2(p), "bracket", &r, "zinbiel").unwrap()
    }

    #[test]
    fn abelian_factor_gives_zero_product() {
        let r = free_zinbiel(field(2), 1, 3).unwrap().to_algebra();
        let t = tensor_prelie(&abelian(2, 2), "bracket", &r, "zinbiel").unwrap();
        assert!(t.prelie().is_zero());
        assert!(check_tensor_restricted(&t, &SweepConfig::default()).unwrap().passed());
        assert!(check_corollary(&t, &SweepConfig::default()).unwrap().passed());
    }

    #[test]
    fn l2_with_two_generator_zinbiel() {
        let zr = free_zinbiel(field(2), 2, 3).unwrap();
        let r = zr.to_algebra();
        let t = tensor_prelie(&l2(2), "bracket", &r, "zinbiel").unwrap();
        let f = field(2);
        let x = zr.generator(0);
        let y = zr.generator(1);
        let lhs = t.prelie().apply(
            f,
            &t.pure(&t.gfactor().basis(0), &x),
            &t.pure(&t.gfactor().basis(1), &y),
        );
        let xy = zr.monomial(&crate::free::Monomial::Word(vec![0, 1])).unwrap();
        assert_eq!(lhs, t.pure(&t.gfactor().basis(0), &xy));
    }

    #[test]
    fn prelie_over_f3() {
        let t = l2_zin(3, 2, 3);
        let r = check_prelie(t.product(), "prelie", &SweepConfig::default()).unwrap();
        assert!(r.passed());
        assert!(r.coverage.is_exhaustive());
    }

    #[test]
    fn oversized_product_rejected() {
        let r = free_zinbiel(field(2), 2, 5).unwrap().to_algebra();
        let err = tensor_prelie(&l2(2), "bracket", &r, "zinbiel").unwrap_err();
        assert!(matches!(err, Error::SizeBound { .. }));
    }

    #[test]
    fn non_zinbiel_factor_rejected() {
        let f = field(2);
        let op = BilinearOp::from_triples(1, f, &[(0, 0, 0, 1)]).unwrap();
        let r = Algebra::new(f, 1).with_op("zinbiel", op).unwrap();
        let err = tensor_prelie(&l2(2), "bracket", &r, "zinbiel").unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
    }

    #[test]
    fn pmap_formula_matches_right_power() {
        let t = l2_zin(2, 1, 3);
        let f = field(2);
        for y in t.gfactor().enumerate_elements(1 << 16).unwrap() {
            for b in t.rfactor().enumerate_elements(1 << 16).unwrap() {
                let v = tensor_pmap(&t, &y, &b).unwrap();
                assert_eq!(v.value, t.pure(&v.gfactor, &v.rfactor));
                assert_eq!(v.value, right_power(t.prelie(), f, &t.pure(&y, &b), 2));
            }
        }
        let zero = tensor_pmap(&t, &t.gfactor().zero(), &t.rfactor().basis(0)).unwrap();
        assert!(zero.value.is_zero());
        // y = e1 + e2: [y, y] = [e1, e2] = e1, and x≺x = xx, so the power is e1 ⊗ xx.
        let v = tensor_pmap(&t, &Element::from(vec![1, 1]), &t.rfactor().basis(0)).unwrap();
        assert_eq!(v.gfactor, Element::from(vec![1, 0]));
        assert_eq!(v.rfactor, t.rfactor().basis(1));
        assert_eq!(v.value, t.product().basis(1));
    }

    #[test]
    fn pmap_factors_over_f3() {
        let t = l2_zin(3, 1, 3);
        let e2 = t.gfactor().basis(1);
        let x = t.rfactor().basis(0);
        let v = tensor_pmap(&t, &e2, &x).unwrap();
        // [[e2,e2],e2] = 0 since [e2,e2] = 0.
        assert!(v.gfactor.is_zero());
        // (x≺x)≺x = x(x ш x) = 2·xxx.
        let xxx = t.rfactor().basis(2);
        assert_eq!(v.rfactor, xxx.scaled(2, field(3)));
        assert!(v.value.is_zero());
    }

    #[test]
    fn pmap_rejects_mixed_tensor() {
        let t = l2_zin(2, 1, 3);
        let mut u = t.product().basis(0);
        u.add_assign(&t.product().basis(4), field(2));
        assert!(matches!(tensor_pmap_element(&t, &u), Err(Error::Usage(_))));
        let pure = t.pure(&Element::from(vec![1, 1]), &Element::from(vec![0, 1, 1]));
        let (y, b) = t.factor(&pure).unwrap();
        assert_eq!(t.pure(&y, &b), pure);
        assert!(tensor_pmap_element(&t, &pure).unwrap().value.is_zero());
    }

    #[test]
    fn tensor_restricted_on_l2() {
        let t = l2_zin(2, 1, 3);
        let r = check_tensor_restricted(&t, &SweepConfig::default()).unwrap();
        assert!(r.passed(), "{}", r.summary());
        assert!(r.coverage.is_exhaustive());
    }

    #[test]
    fn corollary_formula_and_lie() {
        let t = l2_zin(2, 1, 3);
        assert!(check_corollary_bracket(&t).passed());
        let r = check_corollary(&t, &SweepConfig::default()).unwrap();
        assert_eq!(r.witnesses_labelled("antisymmetry").count(), 0);
        assert_eq!(r.witnesses_labelled("jacobi").count(), 0);
    }

    /// With the zero p-map the Jacobson axiom reads 0 = s_1(u, v) = [u, v]
    /// at p = 2, and the tensor bracket is not identically zero.
    #[test]
    fn zero_pmap_fails_jacobson_axiom() {
        let t = l2_zin(2, 1, 3);
        let f = field(2);
        let u = t.pure(&t.gfactor().basis(0), &t.rfactor().basis(0));
        let v = t.pure(&t.gfactor().basis(1), &t.rfactor().basis(1));
        assert!(!t.lie().apply(f, &u, &v).is_zero());
        let r = check_corollary(&t, &SweepConfig::default()).unwrap();
        assert_eq!(r.status, Status::Fail);
        assert!(r.witnesses_labelled("axiom3").count() > 0);
        assert_eq!(r.witnesses_labelled("axiom2").count(), 0);
    }

    #[test]
    fn right_power_pmap_passes_restricted_lie() {
        let t = l2_zin(2, 1, 3);
        let r = check_corollary_with(&t, "prelie_power", &SweepConfig::default()).unwrap();
        assert!(r.passed(), "{}", r.summary());
        assert!(r.coverage.is_exhaustive());
    }

    /// Over F_2 with g the commutator algebra of upper triangular 2×2
    /// matrices: [E11,E12] = [E12,E22] = E12 (signs are irrelevant). For
    /// u = E12⊗xx + E22⊗x and v = E11⊗x:
    /// {v,u} = E12⊗(x≺xx) = E12⊗xxx, and {E12⊗xxx, u} = E12⊗(xxx≺x) = 3·E12⊗xxxx.
    /// So R_u^2 ≠ 0, while u^{2} = E12⊗(xx≺x + x≺xx) = E12⊗xxx gives the
    /// same value, as restrictedness requires.
    #[test]
    fn general_element_power_is_not_zero() {
        let g = crate::dialgebra::dleib(
            &crate::dialgebra::Dialgebra::associative(&crate::fixtures::upper_triangular(2), "assoc").unwrap(),
        )
        .unwrap();
        let r = free_zinbiel(field(2), 1, 4).unwrap().to_algebra();
        let t = tensor_prelie(&g, "bracket", &r, "zinbiel").unwrap();
        let f = field(2);
        let (e11, e12, e22) = (g.basis(0), g.basis(1), g.basis(2));
        let (x, xx, xxx, xxxx) = (r.basis(0), r.basis(1), r.basis(2), r.basis(3));
        let u = t.pure(&e12, &xx).plus(&t.pure(&e22, &x), f);
        let v = t.pure(&e11, &x);
        let rv = t.prelie().apply(f, &t.prelie().apply(f, &v, &u), &u);
        assert_eq!(rv, t.pure(&e12, &xxxx));
        let up = right_power(t.prelie(), f, &u, 2);
        assert_eq!(up, t.pure(&e12, &xxx));
        assert_eq!(t.prelie().apply(f, &v, &up), rv);

        let cfg = SweepConfig::default().sampled();
        let zero = crate::identities::check_restricted_prelie(t.product(), "prelie", "zero", &cfg).unwrap();
        assert_eq!(zero.status, Status::Fail);
        let power = crate::identities::check_restricted_prelie(t.product(), "prelie", "prelie_power", &cfg).unwrap();
        assert!(power.passed());
    }

    #[test]
    fn prelie_to_lie_on_associative() {
        let f = field(3);
        // Upper triangular 2×2 matrices: e11, e12, e22.
        let op = BilinearOp::from_triples(3, f, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 2, 1, 1), (2, 2, 2, 1)]).unwrap();
        let a = Algebra::new(f, 3).with_op("mul", op.clone()).unwrap();
        let lie = prelie_to_lie(&a, "mul").unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let (x, y) = (a.basis(i), a.basis(j));
                let mut expect = op.apply(f, &x, &y);
                expect.sub_assign(&op.apply(f, &y, &x), f);
                assert_eq!(lie.multiply("lie", &x, &y).unwrap(), expect);
            }
        }
        let z = Algebra::new(f, 2).with_op("mul", BilinearOp::zero(2)).unwrap();
        assert!(prelie_to_lie(&z, "mul").unwrap().op("lie").unwrap().is_zero());
    }
}
