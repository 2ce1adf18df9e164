//! Shared fixtures and oracles for unit tests.

use crate::algebra::{Algebra, BilinearOp, Element, PMap, DEFAULT_CAP};
use crate::scalars::PrimeField;

pub(crate) fn field(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

/// Rank of a list of vectors by plain dense Gaussian elimination, pivoting
/// on the lowest column (the kernel's echelon form pivots on the highest).
pub(crate) fn dense_rank(field: PrimeField, mut rows: Vec<Vec<u32>>) -> usize {
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = field.inv(rows[rank][col]).unwrap();
        let prow: Vec<u32> = rows[rank].iter().map(|&a| field.mul(a, inv)).collect();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let c = row[col];
                for (a, &b) in row.iter_mut().zip(&prow) {
                    *a = field.sub(*a, field.mul(c, b));
                }
            }
        }
        rows[rank] = prow;
        rank += 1;
    }
    rank
}

/// `[e1, e2] = e1` with the p-map `a e1 + b e2 ↦ b e2` (named "p") and the
/// zero map (named "zero").
pub(crate) fn l2(p: u64) -> Algebra {
    let f = field(p);
    let op = BilinearOp::from_triples(2, f, &[(0, 1, 0, 1)]).unwrap();
    let alg = Algebra::new(f, 2).with_label("L2").with_op("bracket", op).unwrap();
    let values = alg
        .enumerate_elements(DEFAULT_CAP)
        .unwrap()
        .map(|x| Element::from(vec![0, x[1]]))
        .collect();
    alg.with_pmap("p", PMap::Table(values))
        .unwrap()
        .with_pmap("zero", PMap::Zero)
        .unwrap()
}

/// One-dimensional abelian algebra with the zero p-map.
pub(crate) fn abelian(p: u64, dim: usize) -> Algebra {
    Algebra::new(field(p), dim)
        .with_op("bracket", BilinearOp::zero(dim))
        .unwrap()
        .with_pmap("zero", PMap::Zero)
        .unwrap()
}
