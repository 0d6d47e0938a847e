//! The Poisson bracket `{f,g} = det(grad f, grad g, grad phi)` on `F[x,y,z]`,
//! its coboundary operators on multivector fields and the boundary operators
//! on Kähler forms.
//!
//! Multivector fields are written in the usual identifications
//! `X^0 = X^3 = A` and `X^1 = X^2 = A^3`, where a bivector `V` corresponds to
//! `(V[y,z], V[z,x], V[x,y])`. In these coordinates
//!
//! ```text
//! delta0(f) = grad f x grad phi
//! delta1(F) = -grad(F . grad phi) + div(F) grad phi
//! delta2(F) = -grad phi . curl F
//! ```
//!
//! Forms use `Omega^k = X^(3-k)` and the boundary is `(-1)^k delta^(3-k)`.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::poly::{rat, Degree, NotHomogeneous, Poly, Rational, WeightSystem};
use crate::vector::{cross, curl, div, dot, grad, VecPoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PoissonError {
    #[error(transparent)]
    NotHomogeneous(#[from] NotHomogeneous),
    #[error("phi must be a nonzero polynomial")]
    ZeroPolynomial,
    #[error("no operator of index {0} in this complex")]
    InvalidIndex(i32),
    #[error("operator of index {index} expects a {expected} argument")]
    ShapeMismatch { index: i32, expected: &'static str },
}

/// An element of `X^k(A)` or `Omega^k(A)`: a polynomial for `k = 0, 3`, a triple otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Cochain {
    Scalar(Poly),
    Vector(VecPoly),
}

impl Cochain {
    pub fn is_zero(&self) -> bool {
        match self {
            Cochain::Scalar(p) => p.is_zero(),
            Cochain::Vector(v) => v.is_zero(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Cochain {
        match self {
            Cochain::Scalar(p) => Cochain::Scalar(p.scale(c)),
            Cochain::Vector(v) => Cochain::Vector(v.scale(c)),
        }
    }

    pub fn times(&self, f: &Poly) -> Cochain {
        match self {
            Cochain::Scalar(p) => Cochain::Scalar(p * f),
            Cochain::Vector(v) => Cochain::Vector(v.times(f)),
        }
    }

    pub fn as_scalar(&self) -> Option<&Poly> {
        match self {
            Cochain::Scalar(p) => Some(p),
            Cochain::Vector(_) => None,
        }
    }

    pub fn as_vector(&self) -> Option<&VecPoly> {
        match self {
            Cochain::Vector(v) => Some(v),
            Cochain::Scalar(_) => None,
        }
    }

    pub fn display_with<'a>(&'a self, w: &'a WeightSystem) -> impl fmt::Display + 'a {
        CochainDisplay { c: self, w: *w }
    }
}

struct CochainDisplay<'a> {
    c: &'a Cochain,
    w: WeightSystem,
}

impl fmt::Display for CochainDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.c {
            Cochain::Scalar(p) => write!(f, "{}", p.display_with(&self.w)),
            Cochain::Vector(v) => write!(f, "{}", v.display_with(&self.w)),
        }
    }
}

impl fmt::Display for Cochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&WeightSystem::standard()))
    }
}

impl Serialize for Cochain {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Cochain::Scalar(p) => p.serialize(s),
            Cochain::Vector(v) => v.serialize(s),
        }
    }
}

impl From<Poly> for Cochain {
    fn from(p: Poly) -> Self {
        Cochain::Scalar(p)
    }
}

impl From<VecPoly> for Cochain {
    fn from(v: VecPoly) -> Self {
        Cochain::Vector(v)
    }
}

/// The Poisson algebra `(F[x,y,z], {.,.}_phi)` for a weight homogeneous `phi`.
#[derive(Clone, Debug)]
pub struct PoissonStructure {
    phi: Poly,
    weights: WeightSystem,
    degree: i64,
    nabla_phi: VecPoly,
}

impl PoissonStructure {
    /// Fails unless `phi` is nonzero and weight homogeneous for `weights`.
    /// The isolated singularity hypothesis is not checked here.
    pub fn new(phi: Poly, weights: WeightSystem) -> Result<Self, PoissonError> {
        let degree = match phi.weighted_degree(&weights)? {
            Degree::MinusInfinity => return Err(PoissonError::ZeroPolynomial),
            Degree::Finite(d) => d,
        };
        let nabla_phi = grad(&phi);
        Ok(PoissonStructure {
            phi,
            weights,
            degree,
            nabla_phi,
        })
    }

    pub fn phi(&self) -> &Poly {
        &self.phi
    }

    pub fn weights(&self) -> &WeightSystem {
        &self.weights
    }

    /// Weighted degree of `phi`.
    pub fn degree(&self) -> i64 {
        self.degree
    }

    /// Common degree `deg(phi) - |w|` of every coboundary operator.
    pub fn n_w(&self) -> i64 {
        self.degree - self.weights.weight_sum()
    }

    pub fn nabla_phi(&self) -> &VecPoly {
        &self.nabla_phi
    }

    pub fn bracket(&self, f: &Poly, g: &Poly) -> Poly {
        dot(&self.nabla_phi, &cross(&grad(f), &grad(g)))
    }

    /// Cyclic sum `{{f,g},h} + {{g,h},f} + {{h,f},g}`.
    pub fn jacobiator(&self, f: &Poly, g: &Poly, h: &Poly) -> Poly {
        let mut out = self.bracket(&self.bracket(f, g), h);
        out += &self.bracket(&self.bracket(g, h), f);
        out += &self.bracket(&self.bracket(h, f), g);
        out
    }

    pub fn delta0(&self, f: &Poly) -> VecPoly {
        cross(&grad(f), &self.nabla_phi)
    }

    pub fn delta1(&self, v: &VecPoly) -> VecPoly {
        let a = grad(&dot(v, &self.nabla_phi));
        let b = self.nabla_phi.times(&div(v));
        &b - &a
    }

    pub fn delta2(&self, v: &VecPoly) -> Poly {
        -dot(&self.nabla_phi, &curl(v))
    }

    /// `delta^k` for `k = 0, 1, 2`; `delta^3` is the zero map into `X^4 = 0`
    /// and is rejected.
    pub fn coboundary(&self, k: i32, c: &Cochain) -> Result<Cochain, PoissonError> {
        match (k, c) {
            (0, Cochain::Scalar(f)) => Ok(Cochain::Vector(self.delta0(f))),
            (1, Cochain::Vector(v)) => Ok(Cochain::Vector(self.delta1(v))),
            (2, Cochain::Vector(v)) => Ok(Cochain::Scalar(self.delta2(v))),
            (0, _) => Err(PoissonError::ShapeMismatch { index: 0, expected: "scalar" }),
            (1 | 2, _) => Err(PoissonError::ShapeMismatch { index: k, expected: "vector" }),
            _ => Err(PoissonError::InvalidIndex(k)),
        }
    }

    /// Boundary `Omega^k -> Omega^(k-1)` for `k = 1, 2, 3`, equal to `(-1)^k delta^(3-k)`.
    pub fn boundary(&self, k: i32, chain: &Cochain) -> Result<Cochain, PoissonError> {
        if !(1..=3).contains(&k) {
            return Err(PoissonError::InvalidIndex(k));
        }
        let c = self.coboundary(3 - k, chain).map_err(|e| match e {
            PoissonError::ShapeMismatch { expected, .. } => {
                PoissonError::ShapeMismatch { index: k, expected }
            }
            e => e,
        })?;
        Ok(if k % 2 == 1 { c.scale(&rat(-1)) } else { c })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{poly, rat};
    use crate::vector::euler_field;

    fn structure(phi: &str, w: (i64, i64, i64)) -> PoissonStructure {
        PoissonStructure::new(poly(phi), WeightSystem::new(w.0, w.1, w.2).unwrap()).unwrap()
    }

    #[test]
    fn generator_brackets() {
        let p = structure("x^2+y^2+z^2", (1, 1, 1));
        assert_eq!(p.bracket(&poly("x"), &poly("y")), poly("2*z"));
        let p = structure("x*y*z", (1, 1, 1));
        assert_eq!(p.bracket(&poly("y"), &poly("z")), poly("y*z"));
        let p = structure("x^3+y^3+z^3", (1, 1, 1));
        assert_eq!(p.bracket(&poly("y"), &poly("z")), poly("3*x^2"));
        assert_eq!(p.bracket(&poly("z"), &poly("x")), poly("3*y^2"));
        let f = poly("x^2*y - z");
        assert!(p.bracket(&f, &f).is_zero());
    }

    #[test]
    fn jacobi_on_generators() {
        let p = structure("x^3+y^3+z^3", (1, 1, 1));
        assert!(p.jacobiator(&poly("x"), &poly("y"), &poly("z")).is_zero());
        let f = poly("x*y+z");
        assert!(p.jacobiator(&f, &f, &poly("y")).is_zero());
    }

    #[test]
    fn delta_examples() {
        let p = structure("x^2+y^2+z^2", (1, 1, 1));
        assert!(p.delta0(p.phi()).is_zero());
        assert_eq!(
            p.delta0(&poly("x")),
            VecPoly::new(Poly::zero(), poly("-2*z"), poly("2*y"))
        );
        for (phi, w) in [("x^3+y^3+z^3", (1, 1, 1)), ("x^2+y^3+z^5", (15, 10, 6))] {
            let p = structure(phi, w);
            let e = euler_field(p.weights());
            assert_eq!(p.delta1(&e), p.nabla_phi().scale(&rat(-p.n_w())));
        }
    }

    #[test]
    fn constructor_rejects_bad_phi() {
        let w = WeightSystem::standard();
        assert!(matches!(
            PoissonStructure::new(poly("x+y^2"), w),
            Err(PoissonError::NotHomogeneous(_))
        ));
        assert_eq!(
            PoissonStructure::new(Poly::zero(), w).unwrap_err(),
            PoissonError::ZeroPolynomial
        );
    }

    #[test]
    fn boundary_signs_and_errors() {
        let p = structure("x^3+y^3+z^3", (1, 1, 1));
        let one = Cochain::Scalar(Poly::one());
        assert!(p.boundary(3, &one).unwrap().is_zero());
        assert_eq!(p.boundary(0, &one), Err(PoissonError::InvalidIndex(0)));
        assert_eq!(p.boundary(4, &one), Err(PoissonError::InvalidIndex(4)));
        assert!(matches!(p.boundary(2, &one), Err(PoissonError::ShapeMismatch { index: 2, .. })));
        // boundary_1(f dg) = {f, g}
        let f = poly("x*y");
        let g = poly("z^2+x");
        let form = Cochain::Vector(grad(&g).times(&f));
        assert_eq!(p.boundary(1, &form).unwrap(), Cochain::Scalar(p.bracket(&f, &g)));
        let chain = Cochain::Vector(VecPoly::new(poly("x^2"), poly("y*z"), poly("x")));
        let b2 = p.boundary(2, &chain).unwrap();
        assert!(p.boundary(1, &b2).unwrap().is_zero());
    }
}
