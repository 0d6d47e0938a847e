//! The Jacobian ideal `J = <phi_x, phi_y, phi_z>`, the Milnor algebra `A/J`,
//! and the gate deciding whether `phi` has an isolated singularity.
//!
//! Finite dimensionality of `A/J` is certified degree by degree: for an
//! isolated singularity the top degree of `A/J` is `3d - 2|w|`, and once
//! `(A/J)_i` vanishes on `max w` consecutive degrees past that bound it
//! vanishes in every higher degree, since each monomial there is a variable
//! times a monomial of one of those degrees.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graded::{basis_of, GradedBasis, SpaceKind};
use crate::linalg::{Echelon, SparseVec};
use crate::poisson::Cochain;
use crate::poly::{monomials_of_degree, Degree, Monomial, NotHomogeneous, Poly, Rational, WeightSystem};

#[derive(Debug, Error, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum GateRejection {
    #[error("phi must be nonzero")]
    ZeroPolynomial,
    #[error("phi is not weight homogeneous: found degrees {degrees:?}")]
    NotHomogeneous { degrees: Vec<i64> },
    #[error("deg phi = {degree} does not exceed the largest weight {max_weight}")]
    DegreeTooLow { degree: i64, max_weight: i64 },
    #[error("the singularity is not isolated: (A/J)_{degree} contains {witness} past the socle bound {socle_bound}")]
    NotIsolated {
        degree: i64,
        witness: String,
        socle_bound: i64,
    },
}

impl From<NotHomogeneous> for GateRejection {
    fn from(e: NotHomogeneous) -> Self {
        GateRejection::NotHomogeneous {
            degrees: e.degrees.into_iter().collect(),
        }
    }
}

/// Reduction data of `A_i` modulo `J_i`.
#[derive(Clone, Debug)]
struct JacobianPiece {
    basis: GradedBasis,
    echelon: Echelon,
}

impl JacobianPiece {
    fn new(phi_partials: &[Poly; 3], d: i64, i: i64, w: &WeightSystem) -> Self {
        let basis = basis_of(SpaceKind::A, i, w);
        let mut echelon = Echelon::new(basis.dim());
        for (j, p) in phi_partials.iter().enumerate() {
            for m in monomials_of_degree(i - (d - w.weight(j)), w) {
                let v = basis
                    .coordinates(&Cochain::Scalar(p.mul_monomial(m)))
                    .expect("homogeneous product");
                echelon.insert(v);
            }
        }
        JacobianPiece { basis, echelon }
    }

    fn standard_monomials(&self) -> Vec<Monomial> {
        self.echelon
            .free_indices()
            .into_iter()
            .map(|n| self.basis.label(n).1)
            .collect()
    }
}

fn partials(phi: &Poly) -> [Poly; 3] {
    [phi.derivative(0), phi.derivative(1), phi.derivative(2)]
}

/// `dim (A/J)_i`.
pub fn jacobian_graded_dim(phi: &Poly, w: &WeightSystem, i: i64) -> Result<usize, NotHomogeneous> {
    let d = match phi.weighted_degree(w)? {
        Degree::MinusInfinity => return Ok(monomials_of_degree(i, w).len()),
        Degree::Finite(d) => d,
    };
    let piece = JacobianPiece::new(&partials(phi), d, i, w);
    Ok(piece.basis.dim() - piece.echelon.rank())
}

/// An accepted `phi` together with its Milnor algebra.
#[derive(Clone, Debug)]
pub struct MilnorData {
    phi: Poly,
    weights: WeightSystem,
    degree: i64,
    socle_bound: i64,
    graded_dims: BTreeMap<i64, usize>,
    basis_u: Vec<(Monomial, i64)>,
    pieces: BTreeMap<i64, JacobianPiece>,
}

pub fn check_isolated(phi: &Poly, w: &WeightSystem) -> Result<MilnorData, GateRejection> {
    let d = match phi.weighted_degree(w)? {
        Degree::MinusInfinity => return Err(GateRejection::ZeroPolynomial),
        Degree::Finite(d) => d,
    };
    if d <= w.max_weight() {
        return Err(GateRejection::DegreeTooLow {
            degree: d,
            max_weight: w.max_weight(),
        });
    }
    let socle_bound = 3 * d - 2 * w.weight_sum();
    let top = socle_bound + w.max_weight();
    let grads = partials(phi);
    let pieces: BTreeMap<i64, JacobianPiece> = (0..=top)
        .into_par_iter()
        .map(|i| (i, JacobianPiece::new(&grads, d, i, w)))
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    for (&i, piece) in pieces.range(socle_bound + 1..) {
        if let Some(m) = piece.standard_monomials().first() {
            return Err(GateRejection::NotIsolated {
                degree: i,
                witness: m.to_string(),
                socle_bound,
            });
        }
    }
    let mut graded_dims = BTreeMap::new();
    let mut basis_u = Vec::new();
    for (&i, piece) in &pieces {
        let ms = piece.standard_monomials();
        if !ms.is_empty() {
            graded_dims.insert(i, ms.len());
        }
        basis_u.extend(ms.into_iter().map(|m| (m, i)));
    }
    let pieces = pieces.into_iter().filter(|(i, _)| *i <= socle_bound).collect();
    Ok(MilnorData {
        phi: phi.clone(),
        weights: *w,
        degree: d,
        socle_bound,
        graded_dims,
        basis_u,
        pieces,
    })
}

impl MilnorData {
    pub fn phi(&self) -> &Poly {
        &self.phi
    }

    pub fn weights(&self) -> &WeightSystem {
        &self.weights
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    /// `3 deg(phi) - 2|w|`.
    pub fn socle_bound(&self) -> i64 {
        self.socle_bound
    }

    /// Nonzero dims of `(A/J)_i`.
    pub fn graded_dims(&self) -> &BTreeMap<i64, usize> {
        &self.graded_dims
    }

    pub fn graded_dim(&self, i: i64) -> usize {
        self.graded_dims.get(&i).copied().unwrap_or(0)
    }

    pub fn mu(&self) -> usize {
        self.basis_u.len()
    }

    /// Monomials `u_0 = 1, u_1, ...` whose classes form a basis of `A/J`,
    /// by ascending degree and ascending monomial order, with their degrees.
    pub fn basis_u(&self) -> &[(Monomial, i64)] {
        &self.basis_u
    }

    pub fn u(&self, j: usize) -> Poly {
        Poly::monomial(self.basis_u[j].0)
    }

    /// Coordinates of the class of a homogeneous `f` in the basis `u_j`.
    pub fn reduce(&self, f: &Poly) -> Result<BTreeMap<usize, Rational>, NotHomogeneous> {
        let i = match f.weighted_degree(&self.weights)? {
            Degree::MinusInfinity => return Ok(BTreeMap::new()),
            Degree::Finite(i) => i,
        };
        let Some(piece) = self.pieces.get(&i) else {
            return Ok(BTreeMap::new());
        };
        let v: SparseVec = piece
            .basis
            .coordinates(&Cochain::Scalar(f.clone()))
            .expect("homogeneous of the piece degree");
        let r = piece.echelon.reduce(v);
        Ok(r
            .into_iter()
            .map(|(n, c)| {
                let m = piece.basis.label(n).1;
                let j = self
                    .basis_u
                    .iter()
                    .position(|(u, e)| *u == m && *e == i)
                    .expect("normal forms are supported on standard monomials");
                (j, c)
            })
            .collect())
    }

    /// Normal form of a homogeneous `f` modulo `J`, as a combination of the `u_j`.
    pub fn normal_form(&self, f: &Poly) -> Result<Poly, NotHomogeneous> {
        let mut out = Poly::zero();
        for (j, c) in self.reduce(f)? {
            out.add_term(c, self.basis_u[j].0);
        }
        Ok(out)
    }

    /// Whether a homogeneous `f` lies in `J`.
    pub fn in_jacobian_ideal(&self, f: &Poly) -> Result<bool, NotHomogeneous> {
        Ok(self.reduce(f)?.is_empty())
    }
}
