//! Graded pieces of `X^k(A)` and `Omega^k(A)` with monomial bases, and exact
//! matrices of graded operators between them.
//!
//! Degrees of `X^k` are derivation degrees; a `k`-vector of degree `i` has
//! component degrees shifted by the weights as below. Degrees of `Omega^k`
//! are form degrees, with `Omega^k_i` spanned by `m dx_I`, `deg m + w(I) = i`.
//!
//! | space    | component degrees at `i`                    |
//! |----------|---------------------------------------------|
//! | `X1`     | `i+w1, i+w2, i+w3`                          |
//! | `X2`     | `i+w2+w3, i+w1+w3, i+w1+w2`                 |
//! | `X3`     | `i+|w|`                                     |
//! | `Omega1` | `i-w1, i-w2, i-w3` (`dx, dy, dz`)           |
//! | `Omega2` | `i-w2-w3, i-w1-w3, i-w1-w2` (`dy^dz, dz^dx, dx^dy`) |
//! | `Omega3` | `i-|w|`                                     |
//!
//! In particular the basis of `Omega^k_i` coincides with the basis of
//! `X^(3-k)_(i-|w|)`.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::linalg::{Matrix, SparseVec};
use crate::poisson::{Cochain, PoissonError, PoissonStructure};
use crate::poly::{monomials_of_degree, Monomial, Poly, WeightSystem};
use crate::vector::VecPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SpaceKind {
    A,
    X0,
    X1,
    X2,
    X3,
    Omega0,
    Omega1,
    Omega2,
    Omega3,
}

impl SpaceKind {
    pub fn multivector(k: usize) -> SpaceKind {
        [SpaceKind::X0, SpaceKind::X1, SpaceKind::X2, SpaceKind::X3][k]
    }

    pub fn form(k: usize) -> SpaceKind {
        [SpaceKind::Omega0, SpaceKind::Omega1, SpaceKind::Omega2, SpaceKind::Omega3][k]
    }

    pub fn is_vector(self) -> bool {
        matches!(
            self,
            SpaceKind::X1 | SpaceKind::X2 | SpaceKind::Omega1 | SpaceKind::Omega2
        )
    }

    /// Offsets added to the degree of the piece to get each component's polynomial degree.
    pub fn shifts(self, w: &WeightSystem) -> Vec<i64> {
        let [a, b, c] = w.weights();
        let s = w.weight_sum();
        match self {
            SpaceKind::A | SpaceKind::X0 | SpaceKind::Omega0 => vec![0],
            SpaceKind::X1 => vec![a, b, c],
            SpaceKind::X2 => vec![b + c, a + c, a + b],
            SpaceKind::X3 => vec![s],
            SpaceKind::Omega1 => vec![-a, -b, -c],
            SpaceKind::Omega2 => vec![-(b + c), -(a + c), -(a + b)],
            SpaceKind::Omega3 => vec![-s],
        }
    }
}

impl fmt::Display for SpaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SpaceKind::A => "A",
            SpaceKind::X0 => "X0",
            SpaceKind::X1 => "X1",
            SpaceKind::X2 => "X2",
            SpaceKind::X3 => "X3",
            SpaceKind::Omega0 => "Omega0",
            SpaceKind::Omega1 => "Omega1",
            SpaceKind::Omega2 => "Omega2",
            SpaceKind::Omega3 => "Omega3",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GradedError {
    #[error("term {term} of component {component} lies outside {kind}_{degree}")]
    DegreeMismatch {
        kind: SpaceKind,
        degree: i64,
        component: usize,
        term: String,
    },
    #[error("expected a {expected} cochain for {kind}")]
    ShapeMismatch { kind: SpaceKind, expected: &'static str },
    #[error(transparent)]
    Poisson(#[from] PoissonError),
}

/// Monomial basis of one graded piece, ordered by component and then by
/// ascending monomial order inside a component.
#[derive(Clone, Debug)]
pub struct GradedBasis {
    kind: SpaceKind,
    degree: i64,
    weights: WeightSystem,
    components: Vec<Vec<Monomial>>,
    offsets: Vec<usize>,
    index: HashMap<(usize, Monomial), usize>,
}

impl PartialEq for GradedBasis {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
            && self.degree == other.degree
            && self.weights == other.weights
    }
}

pub fn basis_of(kind: SpaceKind, i: i64, w: &WeightSystem) -> GradedBasis {
    let components: Vec<Vec<Monomial>> = kind
        .shifts(w)
        .into_iter()
        .map(|s| {
            let mut ms = monomials_of_degree(i + s, w);
            ms.reverse();
            ms
        })
        .collect();
    let mut offsets = Vec::with_capacity(components.len());
    let mut index = HashMap::new();
    let mut n = 0;
    for (c, ms) in components.iter().enumerate() {
        offsets.push(n);
        for m in ms {
            index.insert((c, *m), n);
            n += 1;
        }
    }
    GradedBasis {
        kind,
        degree: i,
        weights: *w,
        components,
        offsets,
        index,
    }
}

impl GradedBasis {
    pub fn kind(&self) -> SpaceKind {
        self.kind
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn weights(&self) -> &WeightSystem {
        &self.weights
    }

    pub fn dim(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }

    /// `(component, monomial)` of basis element `n`.
    pub fn label(&self, n: usize) -> (usize, Monomial) {
        let c = self.offsets.partition_point(|&o| o <= n) - 1;
        (c, self.components[c][n - self.offsets[c]])
    }

    pub fn position(&self, component: usize, m: &Monomial) -> Option<usize> {
        self.index.get(&(component, *m)).copied()
    }

    pub fn element(&self, n: usize) -> Cochain {
        let (c, m) = self.label(n);
        if self.kind.is_vector() {
            Cochain::Vector(VecPoly::unit(c, Poly::monomial(m)))
        } else {
            Cochain::Scalar(Poly::monomial(m))
        }
    }

    pub fn elements(&self) -> Vec<Cochain> {
        (0..self.dim()).map(|n| self.element(n)).collect()
    }

    fn components_of<'a>(&self, c: &'a Cochain) -> Result<Vec<&'a Poly>, GradedError> {
        match (c, self.kind.is_vector()) {
            (Cochain::Scalar(p), false) => Ok(vec![p]),
            (Cochain::Vector(v), true) => Ok(v.0.iter().collect()),
            (_, true) => Err(GradedError::ShapeMismatch {
                kind: self.kind,
                expected: "vector",
            }),
            (_, false) => Err(GradedError::ShapeMismatch {
                kind: self.kind,
                expected: "scalar",
            }),
        }
    }

    /// Coordinate vector of `c`; fails if some term is not in this piece.
    pub fn coordinates(&self, c: &Cochain) -> Result<SparseVec, GradedError> {
        let mut out = SparseVec::new();
        for (j, p) in self.components_of(c)?.into_iter().enumerate() {
            for (m, a) in p.terms() {
                match self.position(j, m) {
                    Some(n) => {
                        out.insert(n, a.clone());
                    }
                    None => {
                        return Err(GradedError::DegreeMismatch {
                            kind: self.kind,
                            degree: self.degree,
                            component: j,
                            term: m.to_string(),
                        })
                    }
                }
            }
        }
        Ok(out)
    }

    /// The cochain with the given coordinates.
    pub fn cochain(&self, v: &SparseVec) -> Cochain {
        let mut comps: Vec<Poly> = vec![Poly::zero(); self.components.len()];
        for (n, a) in v {
            let (c, m) = self.label(*n);
            comps[c].add_term(a.clone(), m);
        }
        if self.kind.is_vector() {
            let mut it = comps.into_iter();
            Cochain::Vector(VecPoly::new(
                it.next().unwrap(),
                it.next().unwrap(),
                it.next().unwrap(),
            ))
        } else {
            Cochain::Scalar(comps.pop().unwrap())
        }
    }
}

/// Matrix of a graded operator in the monomial bases; column `j` holds the
/// coordinates of the image of source element `j`.
#[derive(Clone, Debug)]
pub struct GradedOperatorMatrix {
    pub source: GradedBasis,
    pub target: GradedBasis,
    pub matrix: Matrix,
}

impl GradedOperatorMatrix {
    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn kernel_basis(&self) -> Vec<Cochain> {
        self.matrix
            .kernel_basis()
            .iter()
            .map(|v| self.source.cochain(v))
            .collect()
    }

    pub fn image_basis(&self) -> Vec<Cochain> {
        self.matrix
            .image_basis()
            .iter()
            .map(|v| self.target.cochain(v))
            .collect()
    }

    pub fn cokernel_representatives(&self) -> Vec<Cochain> {
        self.matrix
            .cokernel_representatives()
            .into_iter()
            .map(|n| self.target.element(n))
            .collect()
    }

    /// Matrix of `g o f` where `self = f`.
    pub fn then(&self, g: &GradedOperatorMatrix) -> GradedOperatorMatrix {
        assert!(self.target == g.source, "operators do not compose");
        GradedOperatorMatrix {
            source: self.source.clone(),
            target: g.target.clone(),
            matrix: g.matrix.mul(&self.matrix),
        }
    }
}

pub fn matrix_of<F>(
    op: F,
    source: &GradedBasis,
    target: &GradedBasis,
) -> Result<GradedOperatorMatrix, GradedError>
where
    F: Fn(&Cochain) -> Result<Cochain, GradedError> + Sync,
{
    let cols = (0..source.dim())
        .into_par_iter()
        .map(|n| target.coordinates(&op(&source.element(n))?))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GradedOperatorMatrix {
        source: source.clone(),
        target: target.clone(),
        matrix: Matrix::from_columns(target.dim(), cols),
    })
}

/// Matrix of `delta^k : X^k_i -> X^(k+1)_(i+N)`, `k = 0, 1, 2`.
pub fn coboundary_matrix(
    p: &PoissonStructure,
    k: usize,
    i: i64,
) -> Result<GradedOperatorMatrix, GradedError> {
    let w = p.weights();
    let source = basis_of(SpaceKind::multivector(k), i, w);
    let target = basis_of(SpaceKind::multivector(k + 1), i + p.n_w(), w);
    matrix_of(|c| Ok(p.coboundary(k as i32, c)?), &source, &target)
}

/// Matrix of the boundary `Omega^k_i -> Omega^(k-1)_(i+N)`, `k = 1, 2, 3`.
pub fn boundary_matrix(
    p: &PoissonStructure,
    k: usize,
    i: i64,
) -> Result<GradedOperatorMatrix, GradedError> {
    let w = p.weights();
    let source = basis_of(SpaceKind::form(k), i, w);
    let target = basis_of(SpaceKind::form(k - 1), i + p.n_w(), w);
    matrix_of(|c| Ok(p.boundary(k as i32, c)?), &source, &target)
}

/// Multiplication by a weight homogeneous polynomial `f` of degree `e`, from `kind_(i-e)` to `kind_i`.
pub fn multiplication_matrix(
    kind: SpaceKind,
    f: &Poly,
    e: i64,
    i: i64,
    w: &WeightSystem,
) -> Result<GradedOperatorMatrix, GradedError> {
    let source = basis_of(kind, i - e, w);
    let target = basis_of(kind, i, w);
    matrix_of(|c| Ok(c.times(f)), &source, &target)
}

pub fn identity_matrix(basis: &GradedBasis) -> GradedOperatorMatrix {
    GradedOperatorMatrix {
        source: basis.clone(),
        target: basis.clone(),
        matrix: Matrix::identity(basis.dim()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::poly;

    fn w(a: i64, b: i64, c: i64) -> WeightSystem {
        WeightSystem::new(a, b, c).unwrap()
    }

    #[test]
    fn dimensions() {
        let s = WeightSystem::standard();
        assert_eq!(basis_of(SpaceKind::X1, 0, &s).dim(), 9);
        assert_eq!(basis_of(SpaceKind::X2, -2, &s).dim(), 3);
        assert_eq!(basis_of(SpaceKind::X3, -3, &s).dim(), 1);
        assert_eq!(basis_of(SpaceKind::X3, -4, &s).dim(), 0);
        assert_eq!(basis_of(SpaceKind::Omega3, 3, &s).dim(), 1);
        assert_eq!(basis_of(SpaceKind::Omega1, 1, &s).dim(), 3);
        let wt = w(3, 2, 1);
        // X1_0: A_3 x A_2 x A_1 = 3 + 2 + 1.
        assert_eq!(basis_of(SpaceKind::X1, 0, &wt).dim(), 6);
    }

    #[test]
    fn forms_match_multivectors() {
        let wt = w(15, 10, 6);
        for k in 0..4 {
            for i in -40..60 {
                let a = basis_of(SpaceKind::form(k), i, &wt);
                let b = basis_of(SpaceKind::multivector(3 - k), i - 31, &wt);
                assert_eq!(a.elements(), b.elements());
            }
        }
    }

    #[test]
    fn ordering_and_coordinates() {
        let b = basis_of(SpaceKind::X1, 0, &WeightSystem::standard());
        assert_eq!(b.element(0), Cochain::Vector(VecPoly::unit(0, poly("z"))));
        assert_eq!(b.element(2), Cochain::Vector(VecPoly::unit(0, poly("x"))));
        assert_eq!(b.label(3), (1, Monomial::new(0, 0, 1)));
        let v = Cochain::Vector(VecPoly::new(poly("x"), poly("2*y"), poly("-z")));
        let coords = b.coordinates(&v).unwrap();
        assert_eq!(b.cochain(&coords), v);
        let bad = Cochain::Vector(VecPoly::new(poly("x^2"), Poly::zero(), Poly::zero()));
        assert!(matches!(b.coordinates(&bad), Err(GradedError::DegreeMismatch { .. })));
        assert!(matches!(
            b.coordinates(&Cochain::Scalar(poly("x"))),
            Err(GradedError::ShapeMismatch { .. })
        ));
    }

    #[test]
    fn operator_matrices() {
        let s = WeightSystem::standard();
        let p = PoissonStructure::new(poly("x^2+y^2+z^2"), s).unwrap();
        let d0 = coboundary_matrix(&p, 0, 0).unwrap();
        assert_eq!((d0.matrix.nrows(), d0.matrix.ncols()), (3, 1));
        assert!(d0.matrix.is_zero());
        let m = multiplication_matrix(SpaceKind::A, p.phi(), 2, 2, &s).unwrap();
        assert_eq!(m.matrix.ncols(), 1);
        assert_eq!(m.target.cochain(m.matrix.column(0)), Cochain::Scalar(p.phi().clone()));
        // cross(., grad phi) on constant bivectors is injective.
        let b = basis_of(SpaceKind::X2, -2, &s);
        let t = basis_of(SpaceKind::X1, 0, &s);
        let cross = matrix_of(
            |c| Ok(Cochain::Vector(crate::vector::cross(c.as_vector().unwrap(), p.nabla_phi()))),
            &b,
            &t,
        )
        .unwrap();
        assert_eq!(cross.rank(), 3);
        let id = identity_matrix(&b);
        let same = matrix_of(|c| Ok(c.clone()), &b, &b).unwrap();
        assert_eq!(id.matrix, same.matrix);
    }

    #[test]
    fn composition_is_product() {
        let p = PoissonStructure::new(poly("x^3+y^3+z^3"), WeightSystem::standard()).unwrap();
        let d0 = coboundary_matrix(&p, 0, 2).unwrap();
        let d1 = coboundary_matrix(&p, 1, 2).unwrap();
        assert!(d0.then(&d1).matrix.is_zero());
        // phi is a Casimir: delta^1 commutes with multiplication by phi.
        let w = *p.weights();
        let m_src = multiplication_matrix(SpaceKind::X1, p.phi(), 3, 5, &w).unwrap();
        let d1_hi = coboundary_matrix(&p, 1, 5).unwrap();
        let m_tgt = multiplication_matrix(SpaceKind::X2, p.phi(), 3, 5, &w).unwrap();
        assert_eq!(m_src.then(&d1_hi).matrix, d1.then(&m_tgt).matrix);
        let direct = matrix_of(|c| Ok(p.coboundary(1, &c.times(p.phi()))?), &d1.source, &d1_hi.target).unwrap();
        assert_eq!(direct.matrix, m_src.then(&d1_hi).matrix);
    }
}
