//! Shared fixtures for the crate's test suites: the worked examples that
//! the acceptance criteria revolve around.

use crate::foliation::{ideal_foliation_generators, FoliationPresentation};
use crate::kernel::{scalar, Poly, Ring};
use crate::liealg::LieAlgebraData;
use crate::symaction::WeakAction;
use crate::vect::{hamiltonian, VectorField};
use std::sync::Arc;

/// The hypersurface example: phi = (y - x^2)(y + x^2), foliation
/// phi * X(K^2), abelian g = K^2 acting by U = F X_G and V = G X_F.
pub fn poisson_action() -> WeakAction {
    let r = Ring::new(vec!["x", "y"]);
    let p = |s: &str| Poly::parse(&r, s).unwrap();
    let f = p("y - x^2");
    let g = p("y + x^2");
    let u = hamiltonian(&g).unwrap().scale(&f);
    let v = hamiltonian(&f).unwrap().scale(&g);
    let fol = Arc::new(ideal_foliation_generators(&r, &[p("y^2 - x^4")]));
    WeakAction::new(LieAlgebraData::abelian(2), vec![u, v], fol).unwrap()
}

/// Monomial basis of the fields with coefficients of homogeneous degree
/// `deg` on a 2-variable ring, ordered monomial-outer, direction-inner.
pub fn monomial_fields(r: &Arc<Ring>, deg: u32) -> Vec<VectorField> {
    let mut out = Vec::new();
    for k in 0..=deg {
        let mono = &Poly::var(r, 0).pow(deg - k) * &Poly::var(r, 1).pow(k);
        for dir in 0..2 {
            out.push(VectorField::coordinate(r, dir).scale(&mono));
        }
    }
    out
}

/// The order-three example: the abelian quotient of order-2 fields modulo
/// order-3 fields acts by monomial representatives on the foliation of
/// fields vanishing to order three at the origin (8 generators).
pub fn i03_action() -> WeakAction {
    let r = Ring::new(vec!["x", "y"]);
    let p = |s: &str| Poly::parse(&r, s).unwrap();
    let ideal = [p("x^3"), p("x^2*y"), p("x*y^2"), p("y^3")];
    let fol = Arc::new(ideal_foliation_generators(&r, &ideal));
    let rho = monomial_fields(&r, 2);
    WeakAction::new(LieAlgebraData::abelian(rho.len()), rho, fol).unwrap()
}

/// The 2x2 matrix algebra acting by linear fields x_i d/dx_j on the
/// foliation of fields vanishing to order two at the origin.
pub fn gl2_action() -> WeakAction {
    let r = Ring::new(vec!["x", "y"]);
    let p = |s: &str| Poly::parse(&r, s).unwrap();
    // basis E11, E12, E21, E22 with [E_ij, E_kl] = d_jk E_il - d_li E_kj
    let idx = |i: usize, j: usize| i * 2 + j;
    let mut table = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    let (a, b) = (idx(i, j), idx(k, l));
                    if a >= b {
                        continue;
                    }
                    let mut v = vec![scalar(0); 4];
                    if j == k {
                        v[idx(i, l)] = &v[idx(i, l)] + scalar(1);
                    }
                    if l == i {
                        v[idx(k, j)] = &v[idx(k, j)] - scalar(1);
                    }
                    table.push((a, b, v));
                }
            }
        }
    }
    let g = LieAlgebraData::from_bracket_table(4, &table).unwrap();
    let rho = vec![
        VectorField::new(&r, vec![p("x"), p("0")]).unwrap(),
        VectorField::new(&r, vec![p("0"), p("x")]).unwrap(),
        VectorField::new(&r, vec![p("y"), p("0")]).unwrap(),
        VectorField::new(&r, vec![p("0"), p("y")]).unwrap(),
    ];
    let fol = Arc::new(ideal_foliation_generators(
        &r,
        &[p("x^2"), p("x*y"), p("y^2")],
    ));
    WeakAction::new(g, rho, fol).unwrap()
}

/// The zero map as an action of `g` on `fol`.
pub fn zero_action(g: LieAlgebraData, fol: FoliationPresentation) -> WeakAction {
    let ring = fol.ring().clone();
    let rho = vec![VectorField::zero(&ring); g.dim()];
    WeakAction::new(g, rho, Arc::new(fol)).unwrap()
}
