//! Finite-dimensional Lie algebras given by rational structure constants,
//! their modules, and Chevalley-Eilenberg cohomology in low degrees.
//!
//! Sign conventions, fixed once for the whole crate:
//! d(v)(x) = nu(x)v for 0-cochains,
//! d(b)(x,y) = nu(x)b(y) - nu(y)b(x) - b([x,y]) for 1-cochains,
//! d(w)(x,y,z) = nu(z)w(x,y) - w([x,y],z) + cyclic for 2-cochains.
//! Under these, the defect cocycle of a weak symmetry action at a fixed
//! point satisfies d(eta) = 0 on the nose.

use crate::kernel::Scalar;
use crate::linalg::{reduce_mod_rows, row_space_basis, QMat};
use num::Zero;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LieAlgError {
    #[error("bracket table is not antisymmetric at pair ({i},{j})")]
    NotAntisymmetric { i: usize, j: usize },
    #[error("Jacobi identity fails on the basis triple ({i},{j},{k})")]
    JacobiFailure { i: usize, j: usize, k: usize },
    #[error("not a g-module: action([e_{i},e_{j}]) differs from the commutator of the actions")]
    NotAModule { i: usize, j: usize },
    #[error("the Chevalley-Eilenberg differential is implemented for degrees 0..=2, got {degree}")]
    DegreeTooHigh { degree: usize },
    #[error("input 2-cochain is not a cocycle; its differential is nonzero")]
    NotACocycle { differential: Cochain },
    #[error("dimension mismatch between Lie algebra, module, and cochain data")]
    DimensionMismatch,
}

/// A Lie algebra by structure constants: [e_i, e_j] = sum_k c^k_{ij} e_k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebraData {
    dim: usize,
    /// flat (i * dim + j) * dim + k
    constants: Vec<Scalar>,
}

impl LieAlgebraData {
    /// Build from a bracket table: entries (i, j, value of [e_i, e_j]).
    /// Missing pairs are zero; giving both (i,j) and (j,i) is allowed as
    /// long as the values are antisymmetric. Jacobi is verified exactly.
    pub fn from_bracket_table(
        dim: usize,
        entries: &[(usize, usize, Vec<Scalar>)],
    ) -> Result<LieAlgebraData, LieAlgError> {
        let mut constants = vec![Scalar::zero(); dim * dim * dim];
        let mut seen = std::collections::BTreeSet::new();
        for (i, j, v) in entries {
            assert!(*i < dim && *j < dim && v.len() == dim, "bad bracket entry");
            if i == j && v.iter().any(|c| !c.is_zero()) {
                return Err(LieAlgError::NotAntisymmetric { i: *i, j: *j });
            }
            for (k, c) in v.iter().enumerate() {
                let idx = (i * dim + j) * dim + k;
                let idx_t = (j * dim + i) * dim + k;
                if seen.contains(&(*i, *j, k)) {
                    if constants[idx] != *c {
                        return Err(LieAlgError::NotAntisymmetric { i: *i, j: *j });
                    }
                } else {
                    constants[idx] = c.clone();
                    constants[idx_t] = -c.clone();
                    seen.insert((*i, *j, k));
                    seen.insert((*j, *i, k));
                }
            }
        }
        let g = LieAlgebraData { dim, constants };
        g.jacobi_violation()
            .map_or(Ok(g), |(i, j, k)| Err(LieAlgError::JacobiFailure { i, j, k }))
    }

    pub fn abelian(dim: usize) -> LieAlgebraData {
        LieAlgebraData {
            dim,
            constants: vec![Scalar::zero(); dim * dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.constants[(i * self.dim + j) * self.dim + k]
    }

    /// [e_i, e_j] as a coordinate vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        (0..self.dim).map(|k| self.constant(i, j, k).clone()).collect()
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let f = &x[i] * &y[j];
                for k in 0..self.dim {
                    let c = self.constant(i, j, k);
                    if !c.is_zero() {
                        out[k] = &out[k] + &(&f * c);
                    }
                }
            }
        }
        out
    }

    fn jacobi_violation(&self) -> Option<(usize, usize, usize)> {
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                for k in (j + 1)..self.dim {
                    let a = self.bracket(&unit(self.dim, i), &self.bracket_basis(j, k));
                    let b = self.bracket(&unit(self.dim, j), &self.bracket_basis(k, i));
                    let c = self.bracket(&unit(self.dim, k), &self.bracket_basis(i, j));
                    let sum: Vec<Scalar> = a
                        .iter()
                        .zip(&b)
                        .zip(&c)
                        .map(|((x, y), z)| x + y + z)
                        .collect();
                    if sum.iter().any(|v| !v.is_zero()) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    pub fn jacobi_check(&self) -> bool {
        self.jacobi_violation().is_none()
    }

    pub fn is_abelian(&self) -> bool {
        self.constants.iter().all(|c| c.is_zero())
    }

    /// Matrix of ad(e_i): column j is [e_i, e_j].
    pub fn ad(&self, i: usize) -> QMat {
        let mut m = QMat::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for k in 0..self.dim {
                m.set(k, j, self.constant(i, j, k).clone());
            }
        }
        m
    }
}

pub(crate) fn unit(dim: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); dim];
    v[i] = num::One::one();
    v
}

/// Basis of the center { v : [v, e_j] = 0 for all j }, computed as the null
/// space of the stacked adjoint actions.
pub fn center(g: &LieAlgebraData) -> Vec<Vec<Scalar>> {
    let d = g.dim();
    if d == 0 {
        return Vec::new();
    }
    // rows indexed by (j, k), columns by i; entry c^k_{ij}
    let mut stacked = QMat::zeros(d * d, d);
    for j in 0..d {
        for k in 0..d {
            for i in 0..d {
                stacked.set(j * d + k, i, g.constant(i, j, k).clone());
            }
        }
    }
    stacked.nullspace()
}

/// A finite-dimensional g-module: one action matrix per basis element of g,
/// verified to respect brackets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GModule {
    g_dim: usize,
    dim: usize,
    action: Vec<QMat>,
}

impl GModule {
    pub fn new(g: &LieAlgebraData, action: Vec<QMat>) -> Result<GModule, LieAlgError> {
        if action.len() != g.dim() {
            return Err(LieAlgError::DimensionMismatch);
        }
        let dim = action.first().map(|m| m.nrows()).unwrap_or(0);
        if action.iter().any(|m| m.nrows() != dim || m.ncols() != dim) {
            return Err(LieAlgError::DimensionMismatch);
        }
        for i in 0..g.dim() {
            for j in (i + 1)..g.dim() {
                let mut lhs = QMat::zeros(dim, dim);
                for (k, c) in g.bracket_basis(i, j).into_iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let mut scaled = QMat::zeros(dim, dim);
                    for r in 0..dim {
                        for s in 0..dim {
                            scaled.set(r, s, action[k].get(r, s) * &c);
                        }
                    }
                    lhs = lhs.add(&scaled);
                }
                let rhs = action[i].mul(&action[j]).sub(&action[j].mul(&action[i]));
                if lhs != rhs {
                    return Err(LieAlgError::NotAModule { i, j });
                }
            }
        }
        Ok(GModule {
            g_dim: g.dim(),
            dim,
            action,
        })
    }

    pub fn trivial(g: &LieAlgebraData, dim: usize) -> GModule {
        GModule {
            g_dim: g.dim(),
            dim,
            action: vec![QMat::zeros(dim, dim); g.dim()],
        }
    }

    pub fn g_dim(&self) -> usize {
        self.g_dim
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self, i: usize) -> &QMat {
        &self.action[i]
    }

    pub fn act(&self, i: usize, v: &[Scalar]) -> Vec<Scalar> {
        self.action[i].mul_vec(v)
    }
}

pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut combo: Vec<usize> = (0..k).collect();
    loop {
        out.push(combo.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if combo[i] < n - (k - i) {
                combo[i] += 1;
                for j in (i + 1)..k {
                    combo[j] = combo[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// A degree-k alternating cochain on g with values in a module, stored on
/// strictly increasing basis index tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain {
    degree: usize,
    g_dim: usize,
    v_dim: usize,
    values: Vec<Vec<Scalar>>,
}

impl Cochain {
    pub fn zero(degree: usize, g_dim: usize, v_dim: usize) -> Cochain {
        assert!(degree <= 3, "cochain degrees are capped at 3");
        let slots = combinations(g_dim, degree).len();
        Cochain {
            degree,
            g_dim,
            v_dim,
            values: vec![vec![Scalar::zero(); v_dim]; slots],
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn g_dim(&self) -> usize {
        self.g_dim
    }

    pub fn v_dim(&self) -> usize {
        self.v_dim
    }

    pub fn combos(&self) -> Vec<Vec<usize>> {
        combinations(self.g_dim, self.degree)
    }

    fn slot(&self, combo: &[usize]) -> usize {
        self.combos()
            .iter()
            .position(|c| c == combo)
            .expect("strictly increasing index tuple in range")
    }

    pub fn set(&mut self, combo: &[usize], value: Vec<Scalar>) {
        assert_eq!(value.len(), self.v_dim);
        let s = self.slot(combo);
        self.values[s] = value;
    }

    /// Value on an arbitrary index tuple, with the alternating sign;
    /// repeated indices give zero.
    pub fn value(&self, indices: &[usize]) -> Vec<Scalar> {
        assert_eq!(indices.len(), self.degree);
        let mut sorted: Vec<usize> = indices.to_vec();
        let mut sign = 1i64;
        for a in 0..sorted.len() {
            for b in (a + 1)..sorted.len() {
                match sorted[a].cmp(&sorted[b]) {
                    std::cmp::Ordering::Greater => {
                        sorted.swap(a, b);
                        sign = -sign;
                    }
                    std::cmp::Ordering::Equal => {
                        return vec![Scalar::zero(); self.v_dim];
                    }
                    std::cmp::Ordering::Less => {}
                }
            }
        }
        let v = &self.values[self.slot(&sorted)];
        if sign == 1 {
            v.clone()
        } else {
            v.iter().map(|c| -c.clone()).collect()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.iter().all(|c| c.is_zero()))
    }

    pub fn add(&self, other: &Cochain) -> Cochain {
        assert_eq!(
            (self.degree, self.g_dim, self.v_dim),
            (other.degree, other.g_dim, other.v_dim)
        );
        Cochain {
            degree: self.degree,
            g_dim: self.g_dim,
            v_dim: self.v_dim,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Cochain) -> Cochain {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Cochain {
        Cochain {
            degree: self.degree,
            g_dim: self.g_dim,
            v_dim: self.v_dim,
            values: self
                .values
                .iter()
                .map(|v| v.iter().map(|c| -c.clone()).collect())
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Cochain {
        Cochain {
            degree: self.degree,
            g_dim: self.g_dim,
            v_dim: self.v_dim,
            values: self
                .values
                .iter()
                .map(|v| v.iter().map(|x| x * c).collect())
                .collect(),
        }
    }

    pub fn to_coords(&self) -> Vec<Scalar> {
        self.values.iter().flatten().cloned().collect()
    }

    pub fn from_coords(degree: usize, g_dim: usize, v_dim: usize, coords: &[Scalar]) -> Cochain {
        let mut c = Cochain::zero(degree, g_dim, v_dim);
        assert_eq!(coords.len(), c.values.len() * v_dim);
        for (s, chunk) in coords.chunks(v_dim).enumerate() {
            c.values[s] = chunk.to_vec();
        }
        c
    }
}

impl fmt::Display for Cochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let combos = self.combos();
        let mut first = true;
        for (combo, v) in combos.iter().zip(&self.values) {
            if v.iter().all(|c| c.is_zero()) {
                continue;
            }
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            let idx: Vec<String> = combo.iter().map(|i| format!("e{}", i + 1)).collect();
            let val: Vec<String> = v.iter().map(|c| c.to_string()).collect();
            write!(f, "({}) -> [{}]", idx.join(","), val.join(", "))?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Chevalley-Eilenberg differential for degrees 0, 1 and 2, under the sign
/// conventions in the module documentation.
pub fn ce_differential(
    c: &Cochain,
    g: &LieAlgebraData,
    nu: &GModule,
) -> Result<Cochain, LieAlgError> {
    if c.g_dim != g.dim() || nu.g_dim() != g.dim() || nu.dim() != c.v_dim {
        return Err(LieAlgError::DimensionMismatch);
    }
    let vd = c.v_dim;
    let bracket_value = |c: &Cochain, i: usize, j: usize, rest: &[usize]| -> Vec<Scalar> {
        // c([e_i, e_j], rest...)
        let mut out = vec![Scalar::zero(); vd];
        for (k, f) in g.bracket_basis(i, j).into_iter().enumerate() {
            if f.is_zero() {
                continue;
            }
            let mut idx = vec![k];
            idx.extend_from_slice(rest);
            for (o, v) in out.iter_mut().zip(c.value(&idx)) {
                *o = &*o + &(&f * &v);
            }
        }
        out
    };
    let add = |a: Vec<Scalar>, b: Vec<Scalar>| -> Vec<Scalar> {
        a.into_iter().zip(b).map(|(x, y)| x + y).collect()
    };
    let sub = |a: Vec<Scalar>, b: Vec<Scalar>| -> Vec<Scalar> {
        a.into_iter().zip(b).map(|(x, y)| x - y).collect()
    };
    match c.degree {
        0 => {
            let mut out = Cochain::zero(1, g.dim(), vd);
            for i in 0..g.dim() {
                out.set(&[i], nu.act(i, &c.values[0]));
            }
            Ok(out)
        }
        1 => {
            let mut out = Cochain::zero(2, g.dim(), vd);
            for combo in out.combos() {
                let (i, j) = (combo[0], combo[1]);
                let v = sub(
                    sub(nu.act(i, &c.value(&[j])), nu.act(j, &c.value(&[i]))),
                    bracket_value(c, i, j, &[]),
                );
                out.set(&combo, v);
            }
            Ok(out)
        }
        2 => {
            let mut out = Cochain::zero(3, g.dim(), vd);
            for combo in out.combos() {
                let (i, j, k) = (combo[0], combo[1], combo[2]);
                let mut v = sub(nu.act(k, &c.value(&[i, j])), bracket_value(c, i, j, &[k]));
                v = add(
                    v,
                    sub(nu.act(i, &c.value(&[j, k])), bracket_value(c, j, k, &[i])),
                );
                v = add(
                    v,
                    sub(nu.act(j, &c.value(&[k, i])), bracket_value(c, k, i, &[j])),
                );
                out.set(&combo, v);
            }
            Ok(out)
        }
        d => Err(LieAlgError::DegreeTooHigh { degree: d }),
    }
}

/// H^2(g, V): kernel of d on 2-cochains modulo the image of d on 1-cochains,
/// with chosen representatives and an exact membership solver.
#[derive(Debug, Clone)]
pub struct CohomologySpace {
    g_dim: usize,
    v_dim: usize,
    pub dim: usize,
    pub representatives: Vec<Cochain>,
    /// columns: images of the unit 1-cochains, in 2-cochain coordinates
    d1_columns: Vec<Vec<Scalar>>,
    d2: QMat,
}

/// Class data of a 2-cocycle: coordinates in the representative basis and,
/// when the class vanishes, an explicit primitive.
#[derive(Debug, Clone)]
pub struct ClassData {
    pub coordinates: Vec<Scalar>,
    pub primitive: Option<Cochain>,
}

impl ClassData {
    pub fn is_exact(&self) -> bool {
        self.coordinates.iter().all(|c| c.is_zero())
    }
}

pub fn cohomology_space(g: &LieAlgebraData, nu: &GModule) -> Result<CohomologySpace, LieAlgError> {
    if nu.g_dim() != g.dim() {
        return Err(LieAlgError::DimensionMismatch);
    }
    let (gd, vd) = (g.dim(), nu.dim());
    let n1 = gd * vd;
    let n2 = combinations(gd, 2).len() * vd;
    let n3 = combinations(gd, 3).len() * vd;

    let mut d1_columns = Vec::with_capacity(n1);
    for idx in 0..n1 {
        let mut coords = vec![Scalar::zero(); n1];
        coords[idx] = num::One::one();
        let b = Cochain::from_coords(1, gd, vd, &coords);
        d1_columns.push(ce_differential(&b, g, nu)?.to_coords());
    }

    let mut d2 = QMat::zeros(n3, n2);
    for idx in 0..n2 {
        let mut coords = vec![Scalar::zero(); n2];
        coords[idx] = num::One::one();
        let w = Cochain::from_coords(2, gd, vd, &coords);
        let dw = ce_differential(&w, g, nu)?.to_coords();
        for (r, v) in dw.into_iter().enumerate() {
            d2.set(r, idx, v);
        }
    }

    let kernel: Vec<Vec<Scalar>> = if n3 == 0 {
        // no 3-cochains: every 2-cochain is a cocycle
        (0..n2).map(|i| unit(n2, i)).collect()
    } else {
        d2.nullspace()
    };

    let image_rows = row_space_basis(&d1_columns);
    let pivots: Vec<usize> = image_rows
        .iter()
        .map(|row| row.iter().position(|c| !c.is_zero()).expect("nonzero row"))
        .collect();
    let mut reduced: Vec<Vec<Scalar>> = Vec::new();
    for v in &kernel {
        let r = reduce_mod_rows(&image_rows, &pivots, v);
        if r.iter().any(|c| !c.is_zero()) {
            reduced.push(r);
        }
    }
    let rep_rows = row_space_basis(&reduced);
    let representatives: Vec<Cochain> = rep_rows
        .iter()
        .map(|r| Cochain::from_coords(2, gd, vd, r))
        .collect();

    // independent cross-check on the dimension count
    let expected = kernel.len() - image_rows.len();
    assert_eq!(
        representatives.len(),
        expected,
        "cohomology dimension disagrees between quotient and rank count"
    );

    Ok(CohomologySpace {
        g_dim: gd,
        v_dim: vd,
        dim: representatives.len(),
        representatives,
        d1_columns,
        d2,
    })
}

impl CohomologySpace {
    pub fn is_cocycle(&self, w: &Cochain) -> bool {
        if self.d2.nrows() == 0 {
            return true;
        }
        self.d2.mul_vec(&w.to_coords()).iter().all(|c| c.is_zero())
    }

    pub fn d1_rank(&self) -> usize {
        row_space_basis(&self.d1_columns).len()
    }

    pub fn d2_rank(&self) -> usize {
        self.d2.rank()
    }

    /// Coordinates of the class of `w` in the representative basis, plus an
    /// explicit primitive when the class vanishes.
    pub fn classify(
        &self,
        w: &Cochain,
        g: &LieAlgebraData,
        nu: &GModule,
    ) -> Result<ClassData, LieAlgError> {
        if w.degree() != 2 || w.g_dim() != self.g_dim || w.v_dim() != self.v_dim {
            return Err(LieAlgError::DimensionMismatch);
        }
        if !self.is_cocycle(w) {
            return Err(LieAlgError::NotACocycle {
                differential: ce_differential(w, g, nu)?,
            });
        }
        let n1 = self.d1_columns.len();
        let h = self.dim;
        let coords = w.to_coords();
        if n1 + h == 0 {
            assert!(coords.iter().all(|c| c.is_zero()));
            return Ok(ClassData {
                coordinates: Vec::new(),
                primitive: Some(Cochain::zero(1, self.g_dim, self.v_dim)),
            });
        }
        let cols: Vec<Vec<Scalar>> = self
            .d1_columns
            .iter()
            .cloned()
            .chain(self.representatives.iter().map(|r| r.to_coords()))
            .collect();
        let z = QMat::from_cols(cols)
            .solve(&coords)
            .expect("a cocycle decomposes as coboundary plus representative span");
        let class: Vec<Scalar> = z[n1..n1 + h].to_vec();
        let primitive = if class.iter().all(|c| c.is_zero()) {
            let beta = Cochain::from_coords(1, self.g_dim, self.v_dim, &z[..n1]);
            debug_assert_eq!(ce_differential(&beta, g, nu)?, *w);
            Some(beta)
        } else {
            None
        };
        Ok(ClassData {
            coordinates: class,
            primitive,
        })
    }
}

/// Solve d(beta) = cocycle for a 1-cochain beta, or return None with the
/// class certificate implied by the inconsistent linear system.
pub fn coboundary_solve(
    cocycle: &Cochain,
    g: &LieAlgebraData,
    nu: &GModule,
) -> Result<Option<Cochain>, LieAlgError> {
    if cocycle.degree() != 2 {
        return Err(LieAlgError::DimensionMismatch);
    }
    let d = ce_differential(cocycle, g, nu)?;
    if !d.is_zero() {
        return Err(LieAlgError::NotACocycle { differential: d });
    }
    let space = cohomology_space(g, nu)?;
    Ok(space.classify(cocycle, g, nu)?.primitive)
}
