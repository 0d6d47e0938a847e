//! Poisson cohomology of `(A, {.,.}_phi)` and of the surface algebra
//! `A_phi = A/<phi>`: closed-form module descriptions, their Hilbert
//! functions, and brute-force dimensions from ranks of the coboundary
//! matrices.
//!
//! For the surface, cochains are modelled inside the ambient graded pieces:
//! `X^1(A_phi)_i = {f in X^1_i : f . grad phi in <phi>} / phi X^1_(i-d)`,
//! `X^2(A_phi)_i = {f in X^2_i : f x grad phi in <phi>} / phi X^2_(i-d)`,
//! `X^0(A_phi)_i = A_i / phi A_(i-d)` and `X^3(A_phi) = 0`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::graded::{basis_of, coboundary_matrix, matrix_of, multiplication_matrix, GradedError, SpaceKind};
use crate::linalg::{Echelon, Matrix, SparseVec};
use crate::milnor::MilnorData;
use crate::poisson::{Cochain, PoissonStructure};
use crate::poly::{rat, Poly};
use crate::vector::{cross, dot, euler_field, grad};

/// Closed range of degrees.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(into = "[i64; 2]")]
pub struct Window {
    pub min: i64,
    pub max: i64,
}

impl From<Window> for [i64; 2] {
    fn from(w: Window) -> Self {
        [w.min, w.max]
    }
}

impl Window {
    pub fn new(min: i64, max: i64) -> Self {
        Window { min, max }
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> + Clone {
        self.min..=self.max
    }

    pub fn contains(&self, i: i64) -> bool {
        self.min <= i && i <= self.max
    }

    pub fn shift(&self, s: i64) -> Window {
        Window::new(self.min + s, self.max + s)
    }

    pub fn is_empty(&self) -> bool {
        self.min > self.max
    }
}

/// Derivation degrees `[-|w|, 5d - 2|w|]`: the socle bound plus two periods of `phi`.
pub fn default_window(p: &PoissonStructure) -> Window {
    let s = p.weights().weight_sum();
    Window::new(-s, 5 * p.degree() - 2 * s)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Grading {
    /// Degrees of multivector fields; may be negative.
    Derivation,
    /// Degrees of Kähler forms, derivation degree of the dual field plus `|w|`.
    Form,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CoefficientRing {
    #[serde(rename = "F[phi]")]
    Cas,
    #[serde(rename = "F")]
    Field,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GeneratorKind {
    FreeOverCas,
    VectorSpaceOnly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Generator {
    pub label: String,
    pub representative: Cochain,
    pub degree: i64,
    pub kind: GeneratorKind,
}

/// A (co)homology space described by generators over `F[phi]` or over `F`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModuleDescription {
    pub space: String,
    pub grading: Grading,
    pub coefficient_ring: CoefficientRing,
    /// Degree of `phi`, the period of free generators.
    pub casimir_degree: i64,
    pub generators: Vec<Generator>,
    pub zero: bool,
}

impl ModuleDescription {
    fn new(space: String, grading: Grading, ring: CoefficientRing, d: i64, generators: Vec<Generator>) -> Self {
        ModuleDescription {
            space,
            grading,
            coefficient_ring: ring,
            casimir_degree: d,
            zero: generators.is_empty(),
            generators,
        }
    }

    pub fn free_rank(&self) -> usize {
        self.generators
            .iter()
            .filter(|g| g.kind == GeneratorKind::FreeOverCas)
            .count()
    }
}

/// Hilbert function of a graded space over a window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedDims {
    pub space: String,
    pub grading: Grading,
    pub window: Window,
    pub dims: BTreeMap<i64, usize>,
}

impl GradedDims {
    pub fn from_fn(space: impl Into<String>, grading: Grading, window: Window, f: impl Fn(i64) -> usize) -> Self {
        GradedDims {
            space: space.into(),
            grading,
            window,
            dims: window.degrees().map(|i| (i, f(i))).collect(),
        }
    }

    pub fn get(&self, i: i64) -> usize {
        self.dims.get(&i).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.dims.values().sum()
    }

    /// Degrees with nonzero dimension.
    pub fn support(&self) -> Vec<i64> {
        self.dims.iter().filter(|(_, n)| **n > 0).map(|(i, _)| *i).collect()
    }

    /// First degree of the window where the two disagree.
    pub fn first_mismatch(&self, other: &GradedDims) -> Option<i64> {
        self.window
            .degrees()
            .chain(other.window.degrees())
            .filter(|&i| self.get(i) != other.get(i))
            .min()
    }

    /// Same dims re-indexed by `i -> i + s`.
    pub fn shifted(&self, space: impl Into<String>, grading: Grading, s: i64) -> GradedDims {
        GradedDims {
            space: space.into(),
            grading,
            window: self.window.shift(s),
            dims: self.dims.iter().map(|(i, n)| (i + s, *n)).collect(),
        }
    }

    pub fn pairs(&self) -> Vec<[i64; 2]> {
        self.dims.iter().map(|(i, n)| [*i, *n as i64]).collect()
    }
}

impl Serialize for GradedDims {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("GradedDims", 5)?;
        st.serialize_field("space", &self.space)?;
        st.serialize_field("grading", &self.grading)?;
        st.serialize_field("window", &self.window)?;
        st.serialize_field("total", &self.total())?;
        st.serialize_field("dims", &self.pairs())?;
        st.end()
    }
}

/// Free generators of degree `e` contribute at `e, e+d, e+2d, ...`; the others only at `e`.
pub fn predicted_dims(desc: &ModuleDescription, window: Window) -> GradedDims {
    let d = desc.casimir_degree;
    GradedDims::from_fn(desc.space.clone(), desc.grading, window, |i| {
        desc.generators
            .iter()
            .filter(|g| match g.kind {
                GeneratorKind::FreeOverCas => i >= g.degree && (i - g.degree) % d == 0,
                GeneratorKind::VectorSpaceOnly => i == g.degree,
            })
            .count()
    })
}

pub fn ambient_space_name(k: usize) -> String {
    format!("H^{k}(A)")
}

pub fn surface_space_name(k: usize) -> String {
    format!("H^{k}(A_phi)")
}

/// Closed form of `H^k(A, phi)` in derivation degrees.
pub fn closed_form_h(p: &PoissonStructure, m: &MilnorData, k: usize) -> ModuleDescription {
    let w = p.weights();
    let s = w.weight_sum();
    let d = p.degree();
    let n = p.n_w();
    let free = GeneratorKind::FreeOverCas;
    let mut gens = Vec::new();
    match k {
        0 => gens.push(Generator {
            label: "1".into(),
            representative: Cochain::Scalar(Poly::one()),
            degree: 0,
            kind: free,
        }),
        1 => {
            if n == 0 {
                gens.push(Generator {
                    label: "e_w".into(),
                    representative: Cochain::Vector(euler_field(w)),
                    degree: 0,
                    kind: free,
                });
            }
        }
        2 => {
            for (j, &(u, e)) in m.basis_u().iter().enumerate() {
                if j >= 1 && e != n {
                    gens.push(Generator {
                        label: format!("grad u_{j}"),
                        representative: Cochain::Vector(grad(&Poly::monomial(u))),
                        degree: e - s,
                        kind: free,
                    });
                }
            }
            for (j, &(u, e)) in m.basis_u().iter().enumerate() {
                if e == n {
                    gens.push(Generator {
                        label: format!("u_{j} grad phi"),
                        representative: Cochain::Vector(p.nabla_phi().times(&Poly::monomial(u))),
                        degree: e + n,
                        kind: free,
                    });
                }
            }
            for (j, &(u, e)) in m.basis_u().iter().enumerate() {
                if j >= 1 && e == n {
                    gens.push(Generator {
                        label: format!("grad u_{j}"),
                        representative: Cochain::Vector(grad(&Poly::monomial(u))),
                        degree: e - s,
                        kind: GeneratorKind::VectorSpaceOnly,
                    });
                }
            }
        }
        3 => {
            for (j, &(u, e)) in m.basis_u().iter().enumerate() {
                gens.push(Generator {
                    label: format!("u_{j}"),
                    representative: Cochain::Scalar(Poly::monomial(u)),
                    degree: e - s,
                    kind: free,
                });
            }
        }
        _ => panic!("no cohomology in degree {k}"),
    }
    ModuleDescription::new(ambient_space_name(k), Grading::Derivation, CoefficientRing::Cas, d, gens)
}

/// Closed form of `H^k(A_phi)` in derivation degrees; all are finite dimensional.
pub fn surface_closed_form_h(p: &PoissonStructure, m: &MilnorData, k: usize) -> ModuleDescription {
    let n = p.n_w();
    let only = GeneratorKind::VectorSpaceOnly;
    let mut gens = Vec::new();
    let critical = m.basis_u().iter().enumerate().filter(|(_, (_, e))| *e == n);
    match k {
        0 => gens.push(Generator {
            label: "1".into(),
            representative: Cochain::Scalar(Poly::one()),
            degree: 0,
            kind: only,
        }),
        1 => {
            for (j, (u, _)) in critical {
                gens.push(Generator {
                    label: format!("pi(u_{j} e_w)"),
                    representative: Cochain::Vector(euler_field(p.weights()).times(&Poly::monomial(*u))),
                    degree: n,
                    kind: only,
                });
            }
        }
        2 => {
            for (j, (u, _)) in critical {
                gens.push(Generator {
                    label: format!("pi(u_{j} grad phi)"),
                    representative: Cochain::Vector(p.nabla_phi().times(&Poly::monomial(*u))),
                    degree: 2 * n,
                    kind: only,
                });
            }
        }
        3 => {}
        _ => panic!("no cohomology in degree {k}"),
    }
    ModuleDescription::new(surface_space_name(k), Grading::Derivation, CoefficientRing::Field, p.degree(), gens)
}

/// Ranks of `delta^k` at the requested source degrees.
fn coboundary_ranks(
    p: &PoissonStructure,
    wanted: &[(usize, i64)],
) -> Result<BTreeMap<(usize, i64), usize>, GradedError> {
    wanted
        .par_iter()
        .map(|&(k, i)| Ok(((k, i), coboundary_matrix(p, k, i)?.rank())))
        .collect()
}

/// `dim H^k_i = dim X^k_i - rank delta^k_i - rank delta^(k-1)_(i-N)` over the window.
pub fn brute_force_dims(p: &PoissonStructure, k: usize, window: Window) -> Result<GradedDims, GradedError> {
    Ok(brute_force_all(p, window)?.swap_remove(k))
}

/// Brute-force dims of `H^0 .. H^3` of `A`.
pub fn brute_force_all(p: &PoissonStructure, window: Window) -> Result<Vec<GradedDims>, GradedError> {
    let n = p.n_w();
    let mut wanted = Vec::new();
    for k in 0..3 {
        for i in window.degrees() {
            wanted.push((k, i));
            wanted.push((k, i - n));
        }
    }
    wanted.sort_unstable();
    wanted.dedup();
    let ranks = coboundary_ranks(p, &wanted)?;
    let w = *p.weights();
    Ok((0..4)
        .map(|k| {
            GradedDims::from_fn(ambient_space_name(k), Grading::Derivation, window, |i| {
                let dim = basis_of(SpaceKind::multivector(k), i, &w).dim();
                let out = if k < 3 { ranks[&(k, i)] } else { 0 };
                let inc = if k > 0 { ranks[&(k - 1, i - n)] } else { 0 };
                dim - out - inc
            })
        })
        .collect())
}

/// Basis (in coordinates of `X^k_i`) of the cochains of `X^k_i` descending to `A_phi`.
fn constraint_basis(p: &PoissonStructure, k: usize, i: i64) -> Result<Vec<SparseVec>, GradedError> {
    let w = p.weights();
    let d = p.degree();
    let source = basis_of(SpaceKind::multivector(k), i, w);
    // The condition is g(f) in phi * (kind)_i for the linear map g below.
    let (kind, m) = match k {
        0 => return Ok(identity_vectors(source.dim())),
        1 => {
            let target = basis_of(SpaceKind::A, i + d, w);
            let m = matrix_of(
                |c| Ok(Cochain::Scalar(dot(c.as_vector().unwrap(), p.nabla_phi()))),
                &source,
                &target,
            )?;
            (SpaceKind::A, m)
        }
        2 => {
            let target = basis_of(SpaceKind::X1, i + d, w);
            let m = matrix_of(
                |c| Ok(Cochain::Vector(cross(c.as_vector().unwrap(), p.nabla_phi()))),
                &source,
                &target,
            )?;
            (SpaceKind::X1, m)
        }
        _ => return Ok(Vec::new()),
    };
    let phi = multiplication_matrix(kind, p.phi(), d, i + d, w)?;
    let stacked = m.matrix.hstack(&phi.matrix.scale(&rat(-1)));
    let ns = source.dim();
    Ok(stacked
        .kernel_basis()
        .into_iter()
        .map(|v| v.into_iter().filter(|(n, _)| *n < ns).collect::<SparseVec>())
        .filter(|v| !v.is_empty())
        .collect())
}

fn identity_vectors(n: usize) -> Vec<SparseVec> {
    Matrix::identity(n).columns().to_vec()
}

/// Columns spanning `phi X^k_(i-d)` inside `X^k_i`.
fn phi_multiples(p: &PoissonStructure, kind: SpaceKind, i: i64) -> Result<Vec<SparseVec>, GradedError> {
    Ok(multiplication_matrix(kind, p.phi(), p.degree(), i, p.weights())?
        .matrix
        .columns()
        .to_vec())
}

fn rank_of(dim: usize, vs: impl IntoIterator<Item = SparseVec>) -> usize {
    let mut e = Echelon::new(dim);
    for v in vs {
        e.insert(v);
    }
    e.rank()
}

/// Per-degree data of the surface cochain complex.
struct SurfaceDegree {
    /// `dim H^k(A_phi)_i` for `k = 0, 1, 2`.
    dims: [usize; 3],
    /// Whether `delta^2` maps the degree-`i` cochains into `phi A`.
    top_closed: bool,
}

fn surface_degree(p: &PoissonStructure, i: i64) -> Result<SurfaceDegree, GradedError> {
    let n = p.n_w();
    let w = p.weights();
    let mut dims = [0; 3];
    let mut top_closed = true;
    for k in 0..3 {
        let kind = SpaceKind::multivector(k);
        let c = constraint_basis(p, k, i)?;
        let q = phi_multiples(p, kind, i)?;
        let dim_x = basis_of(kind, i, w).dim();
        // Cocycles modulo phi: c with delta(c) in phi X^(k+1).
        let delta = coboundary_matrix(p, k, i)?;
        let images: Vec<SparseVec> = c.iter().map(|v| delta.matrix.apply(v)).collect();
        let next = SpaceKind::multivector(k + 1);
        let dim_next = basis_of(next, i + n, w).dim();
        let q_next = phi_multiples(p, next, i + n)?;
        let r_q = rank_of(dim_next, q_next.iter().cloned());
        let r_all = rank_of(dim_next, q_next.into_iter().chain(images));
        let z = if k == 2 {
            top_closed = r_all == r_q;
            c.len()
        } else {
            c.len() - (r_all - r_q)
        };
        // Coboundaries plus phi multiples.
        let prev: Vec<SparseVec> = if k == 0 {
            Vec::new()
        } else {
            let dm = coboundary_matrix(p, k - 1, i - n)?;
            constraint_basis(p, k - 1, i - n)?
                .iter()
                .map(|v| dm.matrix.apply(v))
                .collect()
        };
        let b = rank_of(dim_x, q.into_iter().chain(prev));
        dims[k] = z - b;
    }
    Ok(SurfaceDegree { dims, top_closed })
}

/// Failure of the surface model: `delta^2` of a constrained cochain not in `phi A`.
#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum SurfaceError {
    #[error(transparent)]
    Graded(#[from] GradedError),
    #[error("delta^2 does not descend to the surface at degree {0}")]
    NotDescending(i64),
}

/// Brute-force dims of `H^0 .. H^3` of `A_phi` over the window.
pub fn surface_brute_force_all(p: &PoissonStructure, window: Window) -> Result<Vec<GradedDims>, SurfaceError> {
    let per: Vec<(i64, SurfaceDegree)> = window
        .degrees()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|i| Ok((i, surface_degree(p, i)?)))
        .collect::<Result<_, GradedError>>()?;
    if let Some((i, _)) = per.iter().find(|(_, s)| !s.top_closed) {
        return Err(SurfaceError::NotDescending(*i));
    }
    let by_degree: BTreeMap<i64, [usize; 3]> = per.into_iter().map(|(i, s)| (i, s.dims)).collect();
    Ok((0..4)
        .map(|k| {
            GradedDims::from_fn(surface_space_name(k), Grading::Derivation, window, |i| {
                if k == 3 {
                    0
                } else {
                    by_degree[&i][k]
                }
            })
        })
        .collect())
}

pub fn surface_brute_force_dims(p: &PoissonStructure, k: usize, window: Window) -> Result<GradedDims, SurfaceError> {
    Ok(surface_brute_force_all(p, window)?.swap_remove(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::milnor::check_isolated;
    use crate::poly::{poly, WeightSystem};

    fn setup(phi: &str, w: (i64, i64, i64)) -> (PoissonStructure, MilnorData) {
        let w = WeightSystem::new(w.0, w.1, w.2).unwrap();
        let phi = poly(phi);
        (PoissonStructure::new(phi.clone(), w).unwrap(), check_isolated(&phi, &w).unwrap())
    }

    #[test]
    fn predicted_examples() {
        let (p, m) = setup("x^3+y^3+z^3", (1, 1, 1));
        let h0 = predicted_dims(&closed_form_h(&p, &m, 0), Window::new(0, 9));
        assert_eq!(h0.support(), vec![0, 3, 6, 9]);
        let (q, mq) = setup("x^2+y^2+z^2", (1, 1, 1));
        let h3 = predicted_dims(&closed_form_h(&q, &mq, 3), Window::new(-3, 3));
        assert_eq!(h3.support(), vec![-3, -1, 1, 3]);
        let h1 = closed_form_h(&q, &mq, 1);
        assert!(h1.zero);
        assert_eq!(predicted_dims(&h1, Window::new(-3, 3)).total(), 0);
        let h2 = closed_form_h(&p, &m, 2);
        assert_eq!(h2.free_rank(), 8);
        assert_eq!(h2.generators.len(), 8);
    }

    #[test]
    fn cubic_brute_force() {
        let (p, _) = setup("x^3+y^3+z^3", (1, 1, 1));
        let h = brute_force_all(&p, Window::new(-3, 3)).unwrap();
        assert_eq!(h[0].get(0), 1);
        assert_eq!(
            (0..4).map(|i| h[1].get(i)).collect::<Vec<_>>(),
            vec![1, 0, 0, 1]
        );
        let (q, _) = setup("x^2+y^2+z^2", (1, 1, 1));
        assert_eq!(brute_force_dims(&q, 3, Window::new(-3, -3)).unwrap().get(-3), 1);
    }

    #[test]
    fn cubic_matches_closed_form() {
        let (p, m) = setup("x^3+y^3+z^3", (1, 1, 1));
        let win = default_window(&p);
        let brute = brute_force_all(&p, win).unwrap();
        for k in 0..4 {
            let pred = predicted_dims(&closed_form_h(&p, &m, k), win);
            assert_eq!(brute[k].first_mismatch(&pred), None, "k={k}");
        }
        let surf = surface_brute_force_all(&p, win).unwrap();
        for k in 0..4 {
            let pred = predicted_dims(&surface_closed_form_h(&p, &m, k), win);
            assert_eq!(surf[k].first_mismatch(&pred), None, "surface k={k}");
        }
        assert_eq!(surf[1].total(), 1);
        assert_eq!(surf[2].total(), 1);
    }

    #[test]
    fn serialized_dims_are_pairs() {
        let g = GradedDims::from_fn("H^0(A)", Grading::Derivation, Window::new(0, 2), |i| i as usize);
        let v = serde_json::to_value(&g).unwrap();
        assert_eq!(v["dims"], serde_json::json!([[0, 0], [1, 1], [2, 2]]));
        assert_eq!(v["window"], serde_json::json!([0, 2]));
        assert_eq!(v["total"], 3);
    }
}
