//! Weak symmetry actions of a Lie algebra on a singular foliation:
//! validation, the defect witnesses eta, the connection witnesses chi,
//! strictness, and the equivalence transformation by a section-valued beta.
//!
//! The defect of a pair is rho([x_i, x_j]) - [rho(x_i), rho(x_j)]; eta is a
//! coefficient vector expressing it over the foliation generators. Both eta
//! and chi are non-canonical witnesses: determinism comes from the division
//! tie-break, every identity about them is checked by reconstruction.

use crate::foliation::{FoliationError, FoliationPresentation, SymmetryReport};
use crate::groebner::Witness;
use crate::kernel::{Poly, Ring, Scalar};
use crate::liealg::LieAlgebraData;
use crate::linalg::QMat;
use crate::vect::{VectError, VectorField};
use num::Zero;
use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ActionError {
    #[error(transparent)]
    Foliation(#[from] FoliationError),
    #[error(transparent)]
    Vect(#[from] VectError),
    #[error("action assigns {got} vector fields to a Lie algebra of dimension {want}")]
    BasisCount { got: usize, want: usize },
    #[error("not a weak symmetry action: {reason}")]
    NotAWeakAction { reason: String },
    #[error("beta must assign one section of length {want} per basis element ({n} of them)")]
    BetaShape { n: usize, want: usize },
}

/// Membership report for one defect pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefectReport {
    pub pair: (usize, usize),
    pub defect: VectorField,
    pub witness: Option<Witness>,
}

/// Full validation log: one symmetry report per basis field, one defect
/// membership per pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub symmetry: Vec<SymmetryReport>,
    pub defects: Vec<DefectReport>,
    pub is_valid: bool,
    pub first_failure: Option<String>,
}

/// A linear map from a Lie algebra into vector fields, together with the
/// foliation it is meant to act on.
#[derive(Debug)]
pub struct WeakAction {
    g: LieAlgebraData,
    rho: Vec<VectorField>,
    foliation: Arc<FoliationPresentation>,
    validation: OnceLock<Result<ValidationReport, ActionError>>,
}

/// Defect witnesses eta(x_i, x_j), one per pair i < j, over the foliation
/// generators. Reconstruction is asserted at construction time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaData {
    g_dim: usize,
    n_gens: usize,
    ring: Arc<Ring>,
    pairs: BTreeMap<(usize, usize), Vec<Poly>>,
}

impl EtaData {
    /// Coefficient vector of eta(x_i, x_j); antisymmetric in (i, j).
    pub fn witness(&self, i: usize, j: usize) -> Vec<Poly> {
        use std::cmp::Ordering;
        match i.cmp(&j) {
            Ordering::Equal => vec![Poly::zero(&self.ring); self.n_gens],
            Ordering::Less => self.pairs[&(i, j)].clone(),
            Ordering::Greater => self.pairs[&(j, i)].iter().map(|p| -p).collect(),
        }
    }

    pub fn evaluate_pair_at(&self, i: usize, j: usize, m: &[Scalar]) -> Vec<Scalar> {
        self.witness(i, j)
            .iter()
            .map(|p| p.evaluate(m).expect("dimension checked by caller"))
            .collect()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&(usize, usize), &Vec<Poly>)> {
        self.pairs.iter()
    }

    pub fn g_dim(&self) -> usize {
        self.g_dim
    }

    pub fn generator_count(&self) -> usize {
        self.n_gens
    }
}

/// Connection witnesses chi(x_i, e_l) for [rho(x_i), X_l], indexed by
/// (basis element, generator).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiData {
    g_dim: usize,
    n_gens: usize,
    entries: Vec<Vec<Vec<Poly>>>,
}

impl ChiData {
    pub fn witness(&self, i: usize, l: usize) -> &[Poly] {
        &self.entries[i][l]
    }

    /// The n x n matrix chi(x_i, .) evaluated at a point: column l holds
    /// the coefficients of [rho(x_i), X_l] over the generators.
    pub fn matrix_at(&self, i: usize, m: &[Scalar]) -> QMat {
        let n = self.n_gens;
        let mut out = QMat::zeros(n, n);
        for l in 0..n {
            for (a, p) in self.entries[i][l].iter().enumerate() {
                out.set(a, l, p.evaluate(m).expect("dimension checked by caller"));
            }
        }
        out
    }

    pub fn g_dim(&self) -> usize {
        self.g_dim
    }

    pub fn generator_count(&self) -> usize {
        self.n_gens
    }
}

impl WeakAction {
    pub fn new(
        g: LieAlgebraData,
        rho: Vec<VectorField>,
        foliation: Arc<FoliationPresentation>,
    ) -> Result<WeakAction, ActionError> {
        if rho.len() != g.dim() {
            return Err(ActionError::BasisCount {
                got: rho.len(),
                want: g.dim(),
            });
        }
        for f in &rho {
            assert_eq!(f.ring(), foliation.ring(), "action field from a different ring");
        }
        Ok(WeakAction {
            g,
            rho,
            foliation,
            validation: OnceLock::new(),
        })
    }

    pub fn lie_algebra(&self) -> &LieAlgebraData {
        &self.g
    }

    pub fn foliation(&self) -> &Arc<FoliationPresentation> {
        &self.foliation
    }

    pub fn rho_field(&self, i: usize) -> &VectorField {
        &self.rho[i]
    }

    pub fn rho_fields(&self) -> &[VectorField] {
        &self.rho
    }

    /// rho extended linearly to a coordinate vector of g.
    pub fn rho_of(&self, x: &[Scalar]) -> VectorField {
        let mut out = VectorField::zero(self.foliation.ring());
        for (c, f) in x.iter().zip(&self.rho) {
            if !c.is_zero() {
                out = out.add(&f.scale_scalar(c));
            }
        }
        out
    }

    /// rho([x_i, x_j]) - [rho(x_i), rho(x_j)].
    pub fn defect(&self, i: usize, j: usize) -> VectorField {
        let bracket_image = self.rho_of(&self.g.bracket_basis(i, j));
        let field_bracket = self.rho[i].bracket(&self.rho[j]).expect("same ring");
        bracket_image.sub(&field_bracket)
    }

    /// Check both weak-action conditions with a full witness log; the
    /// outcome is cached.
    pub fn validate(&self) -> Result<&ValidationReport, ActionError> {
        self.validation
            .get_or_init(|| {
                let mut first_failure = None;
                let mut symmetry = Vec::with_capacity(self.g.dim());
                for (i, f) in self.rho.iter().enumerate() {
                    let rep = self.foliation.symmetry_check(f)?;
                    if !rep.is_symmetry && first_failure.is_none() {
                        first_failure = Some(format!(
                            "[rho(x_{}), X_{}] is not a member of the foliation",
                            i + 1,
                            rep.first_failure.unwrap() + 1
                        ));
                    }
                    symmetry.push(rep);
                }
                let mut defects = Vec::new();
                for i in 0..self.g.dim() {
                    for j in (i + 1)..self.g.dim() {
                        let defect = self.defect(i, j);
                        let witness = self.foliation.member_witness(&defect)?;
                        if witness.is_none() && first_failure.is_none() {
                            first_failure = Some(format!(
                                "defect of (x_{}, x_{}) is not a member of the foliation",
                                i + 1,
                                j + 1
                            ));
                        }
                        defects.push(DefectReport {
                            pair: (i, j),
                            defect,
                            witness,
                        });
                    }
                }
                Ok(ValidationReport {
                    symmetry,
                    defects,
                    is_valid: first_failure.is_none(),
                    first_failure,
                })
            })
            .as_ref()
            .map_err(|e| e.clone())
    }

    pub fn is_valid(&self) -> Result<bool, ActionError> {
        Ok(self.validate()?.is_valid)
    }

    fn require_valid(&self) -> Result<&ValidationReport, ActionError> {
        let report = self.validate()?;
        if !report.is_valid {
            return Err(ActionError::NotAWeakAction {
                reason: report.first_failure.clone().unwrap_or_default(),
            });
        }
        Ok(report)
    }

    /// Defect witnesses for every pair. Requires a validated action; the
    /// reconstruction identity rho(eta) = defect is asserted exactly.
    pub fn eta_witness(&self) -> Result<EtaData, ActionError> {
        let report = self.require_valid()?;
        let ring = self.foliation.ring().clone();
        let n = self.foliation.generator_count();
        let mut pairs = BTreeMap::new();
        for rep in &report.defects {
            let w = rep.witness.as_ref().expect("validated action").clone();
            let mut acc = VectorField::zero(&ring);
            for (c, g) in w.coefficients.iter().zip(self.foliation.generators()) {
                acc = acc.add(&g.scale(c));
            }
            assert_eq!(acc, rep.defect, "eta witness does not reconstruct the defect");
            pairs.insert(rep.pair, w.coefficients);
        }
        Ok(EtaData {
            g_dim: self.g.dim(),
            n_gens: n,
            ring,
            pairs,
        })
    }

    /// Connection witnesses for every (basis element, generator). Requires
    /// a validated action; reconstruction is asserted exactly.
    pub fn chi_witness(&self) -> Result<ChiData, ActionError> {
        let report = self.require_valid()?;
        let ring = self.foliation.ring();
        let mut entries = Vec::with_capacity(self.g.dim());
        for (i, rep) in report.symmetry.iter().enumerate() {
            let mut row = Vec::with_capacity(self.foliation.generator_count());
            for (l, w) in rep.witnesses.iter().enumerate() {
                let w = w.as_ref().expect("validated action").clone();
                let mut acc = VectorField::zero(ring);
                for (c, g) in w.coefficients.iter().zip(self.foliation.generators()) {
                    acc = acc.add(&g.scale(c));
                }
                let bracket = self.rho[i]
                    .bracket(&self.foliation.generators()[l])
                    .expect("same ring");
                assert_eq!(acc, bracket, "chi witness does not reconstruct the bracket");
                row.push(w.coefficients);
            }
            entries.push(row);
        }
        Ok(ChiData {
            g_dim: self.g.dim(),
            n_gens: self.foliation.generator_count(),
            entries,
        })
    }

    /// True iff every defect vanishes identically.
    pub fn strictness_check(&self) -> bool {
        for i in 0..self.g.dim() {
            for j in (i + 1)..self.g.dim() {
                if !self.defect(i, j).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// The equivalent action rho'(x_i) = rho(x_i) + sum_l beta[i][l] X_l,
    /// revalidated from scratch, with its freshly solved defect witnesses.
    pub fn transform_by_beta(
        &self,
        beta: &[Vec<Poly>],
    ) -> Result<(WeakAction, EtaData), ActionError> {
        self.require_valid()?;
        let n = self.foliation.generator_count();
        if beta.len() != self.g.dim() || beta.iter().any(|b| b.len() != n) {
            return Err(ActionError::BetaShape {
                n: self.g.dim(),
                want: n,
            });
        }
        let rho: Vec<VectorField> = self
            .rho
            .iter()
            .zip(beta)
            .map(|(f, b)| {
                let mut out = f.clone();
                for (c, g) in b.iter().zip(self.foliation.generators()) {
                    out = out.add(&g.scale(c));
                }
                out
            })
            .collect();
        let transformed = WeakAction::new(self.g.clone(), rho, self.foliation.clone())?;
        let eta = transformed.eta_witness()?;
        Ok((transformed, eta))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foliation::ideal_foliation_generators;
    use crate::kernel::scalar;
    use crate::testfix::{i03_action, poisson_action, zero_action};

    fn ring_xy() -> Arc<Ring> {
        Ring::new(vec!["x", "y"])
    }

    fn p(r: &Arc<Ring>, s: &str) -> Poly {
        Poly::parse(r, s).unwrap()
    }

    #[test]
    fn poisson_action_is_weak_not_strict() {
        let a = poisson_action();
        assert!(a.is_valid().unwrap());
        assert!(!a.strictness_check());
    }

    #[test]
    fn zero_action_is_valid_and_strict() {
        let r = ring_xy();
        let f = ideal_foliation_generators(&r, &[p(&r, "y^2 - x^4")]);
        let a = zero_action(LieAlgebraData::abelian(3), f);
        assert!(a.is_valid().unwrap());
        assert!(a.strictness_check());
        let eta = a.eta_witness().unwrap();
        for (_, w) in eta.pairs() {
            assert!(w.iter().all(|c| c.is_zero()));
        }
        let chi = a.chi_witness().unwrap();
        for i in 0..3 {
            for l in 0..2 {
                assert!(chi.witness(i, l).iter().all(|c| c.is_zero()));
            }
        }
    }

    #[test]
    fn poisson_eta_value() {
        let a = poisson_action();
        let r = a.foliation().ring().clone();
        let eta = a.eta_witness().unwrap();
        assert_eq!(eta.witness(0, 1), vec![p(&r, "0"), p(&r, "-4")]);
        assert_eq!(eta.witness(1, 0), vec![p(&r, "0"), p(&r, "4")]);
    }

    #[test]
    fn poisson_chi_values() {
        let a = poisson_action();
        let r = a.foliation().ring().clone();
        let chi = a.chi_witness().unwrap();
        // [U, phi d/dx] = phi * (-2x d/dx + (2y - 6x^2) d/dy)
        assert_eq!(chi.witness(0, 0), &[p(&r, "-2*x"), p(&r, "2*y - 6*x^2")]);
        // [U, phi d/dy] = phi * (-d/dx - 2x d/dy)
        assert_eq!(chi.witness(0, 1), &[p(&r, "-1"), p(&r, "-2*x")]);
    }

    #[test]
    fn i03_action_is_weak_with_expected_eta() {
        let a = i03_action();
        assert!(a.is_valid().unwrap());
        assert!(!a.strictness_check());
        let eta = a.eta_witness().unwrap();
        // basis: (x^2 dx, x^2 dy, xy dx, xy dy, y^2 dx, y^2 dy)
        // generators: (x^3 dx, x^3 dy, x^2y dx, ...), so the defect of
        // (x^2 dx, x^2 dy) is -2 x^3 dy = -2 * generator 1
        let w = eta.witness(0, 1);
        let r = a.foliation().ring().clone();
        assert_eq!(w[1], p(&r, "-2"));
        for (k, c) in w.iter().enumerate() {
            if k != 1 {
                assert!(c.is_zero(), "unexpected eta coefficient at {}", k);
            }
        }
    }

    #[test]
    fn transform_by_zero_beta_is_identity() {
        let a = poisson_action();
        let r = a.foliation().ring().clone();
        let beta = vec![vec![Poly::zero(&r); 2]; 2];
        let (b, eta) = a.transform_by_beta(&beta).unwrap();
        assert_eq!(b.rho_fields(), a.rho_fields());
        assert_eq!(eta, a.eta_witness().unwrap());
    }

    #[test]
    fn transform_by_beta_revalidates() {
        let a = poisson_action();
        let r = a.foliation().ring().clone();
        // beta(e1) = e_dx, beta(e2) = 0
        let beta = vec![
            vec![Poly::one(&r), Poly::zero(&r)],
            vec![Poly::zero(&r), Poly::zero(&r)],
        ];
        let (b, eta) = a.transform_by_beta(&beta).unwrap();
        assert!(b.is_valid().unwrap());
        let expected = a.rho_field(0).add(&a.foliation().generators()[0]);
        assert_eq!(b.rho_field(0), &expected);
        // reconstruction of the new defect through the new eta
        let defect = b.defect(0, 1);
        let mut acc = VectorField::zero(&r);
        for (c, g) in eta.witness(0, 1).iter().zip(b.foliation().generators()) {
            acc = acc.add(&g.scale(c));
        }
        assert_eq!(acc, defect);
    }

    #[test]
    fn transform_roundtrip_restores_defects() {
        let a = poisson_action();
        let r = a.foliation().ring().clone();
        let beta = vec![
            vec![p(&r, "1 + x"), p(&r, "y")],
            vec![p(&r, "2"), p(&r, "x*y - 3")],
        ];
        let neg: Vec<Vec<Poly>> = beta
            .iter()
            .map(|row| row.iter().map(|c| -c).collect())
            .collect();
        let (b, _) = a.transform_by_beta(&beta).unwrap();
        let (back, _) = b.transform_by_beta(&neg).unwrap();
        assert_eq!(back.rho_fields(), a.rho_fields());
        for i in 0..2 {
            for j in (i + 1)..2 {
                assert_eq!(back.defect(i, j), a.defect(i, j));
            }
        }
    }

    #[test]
    fn invalid_action_is_reported() {
        let r = ring_xy();
        let f = Arc::new(FoliationPresentation::new(
            &r,
            vec![VectorField::coordinate(&r, 0).scale(&Poly::var(&r, 0))],
        ));
        // d/dx does not preserve <x d/dx>
        let a = WeakAction::new(
            LieAlgebraData::abelian(1),
            vec![VectorField::coordinate(&r, 0)],
            f,
        )
        .unwrap();
        assert!(!a.is_valid().unwrap());
        assert!(matches!(
            a.eta_witness(),
            Err(ActionError::NotAWeakAction { .. })
        ));
    }

    #[test]
    fn gl_action_on_vanishing_order_foliation_is_strict() {
        let a = crate::testfix::gl2_action();
        assert!(a.is_valid().unwrap());
        assert!(a.strictness_check());
    }
}
