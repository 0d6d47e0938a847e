//! Poisson homology of `A` and of `A_phi` on Kähler forms.
//!
//! Forms are stored in the coordinates of [`crate::graded`]: a 1-form is
//! `(a, b, c) = a dx + b dy + c dz` and a 2-form is
//! `(a, b, c) = a dy^dz + b dz^dx + c dx^dy`. The boundary used for the
//! complexes is [`PoissonStructure::boundary`]; [`brylinski_boundary`] is a
//! second implementation, used as an oracle, written directly from
//!
//! ```text
//! d_k(f0 df1^...^dfk) = sum (-1)^(i+1) {f0,fi} df1^..^dfi^..^dfk
//!                     + sum_(i<j) (-1)^(i+j) f0 d{fi,fj}^df1^..^dfi^..^dfj^..^dfk
//! ```
//!
//! `Omega^k(A_phi)_i` is modelled as `Omega^k_i / (phi Omega^k_(i-d) + dphi ^ Omega^(k-1)_(i-d))`.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::cohomology::{
    closed_form_h, CoefficientRing, Generator, GeneratorKind, Grading, GradedDims, ModuleDescription, Window,
};
use crate::graded::{
    basis_of, boundary_matrix, coboundary_matrix, matrix_of, multiplication_matrix, GradedBasis, GradedError,
    SpaceKind,
};
use crate::linalg::{Echelon, Matrix, SparseVec};
use crate::milnor::MilnorData;
use crate::poisson::{Cochain, PoissonStructure};
use crate::poly::{rat, Monomial, Poly, Rational};
use crate::vector::{cross, dot, euler_field, grad, VecPoly};

pub fn ambient_space_name(k: usize) -> String {
    format!("H_{k}(A)")
}

pub fn surface_space_name(k: usize) -> String {
    format!("H_{k}(A_phi)")
}

/// Form degrees corresponding to a derivation degree window.
pub fn form_window(p: &PoissonStructure, derivation: Window) -> Window {
    derivation.shift(p.weights().weight_sum())
}

/// A differential form as a map from increasing index lists `I` to the coefficient of `dx_I`.
type Form = BTreeMap<Vec<usize>, Poly>;

fn add_to(form: &mut Form, key: Vec<usize>, p: Poly) {
    let e = form.entry(key).or_default();
    *e += &p;
}

/// `dx_a ^ dx_I`, as a sign and sorted index list, or `None` when `a` is in `I`.
fn wedge_index(a: usize, rest: &[usize]) -> Option<(i64, Vec<usize>)> {
    if rest.contains(&a) {
        return None;
    }
    let before = rest.iter().filter(|&&j| j < a).count();
    let mut out = rest.to_vec();
    out.push(a);
    out.sort_unstable();
    Some((if before % 2 == 0 { 1 } else { -1 }, out))
}

/// `dg ^ dx_I`.
fn d_wedge(g: &Poly, rest: &[usize], coeff: &Poly, out: &mut Form) {
    for a in 0..3 {
        let da = g.derivative(a);
        if da.is_zero() {
            continue;
        }
        if let Some((sign, key)) = wedge_index(a, rest) {
            add_to(out, key, (&da * coeff).scale(&rat(sign)));
        }
    }
}

fn form_of(k: usize, c: &Cochain) -> Form {
    let mut f = Form::new();
    match (k, c) {
        (0, Cochain::Scalar(p)) => {
            f.insert(vec![], p.clone());
        }
        (3, Cochain::Scalar(p)) => {
            f.insert(vec![0, 1, 2], p.clone());
        }
        (1, Cochain::Vector(v)) => {
            for j in 0..3 {
                f.insert(vec![j], v.0[j].clone());
            }
        }
        (2, Cochain::Vector(v)) => {
            f.insert(vec![1, 2], v.0[0].clone());
            f.insert(vec![0, 2], -v.0[1].clone());
            f.insert(vec![0, 1], v.0[2].clone());
        }
        _ => panic!("a {k}-form has the wrong shape"),
    }
    f
}

fn cochain_of(k: usize, f: &Form) -> Cochain {
    let get = |key: &[usize]| f.get(key).cloned().unwrap_or_default();
    match k {
        0 => Cochain::Scalar(get(&[])),
        1 => Cochain::Vector(VecPoly::new(get(&[0]), get(&[1]), get(&[2]))),
        2 => Cochain::Vector(VecPoly::new(get(&[1, 2]), -get(&[0, 2]), get(&[0, 1]))),
        3 => Cochain::Scalar(get(&[0, 1, 2])),
        _ => unreachable!(),
    }
}

/// The boundary of a `k`-form, computed term by term on `m dx_I`.
pub fn brylinski_boundary(p: &PoissonStructure, k: usize, c: &Cochain) -> Cochain {
    assert!((1..=3).contains(&k), "boundary index must be 1, 2 or 3");
    let xs: Vec<Poly> = (0..3).map(Poly::var).collect();
    let mut out = Form::new();
    for (idx, coeff) in form_of(k, c) {
        for (m, a) in coeff.terms() {
            let f0 = Poly::term(a.clone(), *m);
            for i in 0..k {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                let mut rest = idx.clone();
                rest.remove(i);
                add_to(&mut out, rest, p.bracket(&f0, &xs[idx[i]]).scale(&rat(sign)));
            }
            for i in 0..k {
                for j in i + 1..k {
                    // (-1)^(i+j) with 1-based positions equals (-1)^(i+j) with 0-based ones.
                    let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                    let rest: Vec<usize> = idx
                        .iter()
                        .enumerate()
                        .filter(|(t, _)| *t != i && *t != j)
                        .map(|(_, v)| *v)
                        .collect();
                    let b = p.bracket(&xs[idx[i]], &xs[idx[j]]);
                    d_wedge(&b, &rest, &f0.scale(&rat(sign)), &mut out);
                }
            }
        }
    }
    cochain_of(k - 1, &out)
}

/// Whether, at form degree `i`, the boundary matrix equals the matrix of the
/// independent formula and equals `(-1)^k` times the matrix of `delta^(3-k)`
/// at derivation degree `i - |w|`.
pub fn duality_identity_holds(p: &PoissonStructure, k: usize, i: i64) -> Result<bool, GradedError> {
    let b = boundary_matrix(p, k, i)?;
    let direct = matrix_of(|c| Ok(brylinski_boundary(p, k, c)), &b.source, &b.target)?;
    let co = coboundary_matrix(p, 3 - k, i - p.weights().weight_sum())?;
    let sign = if k.is_multiple_of(2) { rat(1) } else { rat(-1) };
    Ok(b.matrix == direct.matrix && b.matrix == co.matrix.scale(&sign))
}

/// Ranks of the boundary `Omega^k_i -> Omega^(k-1)_(i+N)` at requested `(k, i)`.
fn boundary_ranks(p: &PoissonStructure, wanted: &[(usize, i64)]) -> Result<BTreeMap<(usize, i64), usize>, GradedError> {
    wanted
        .par_iter()
        .map(|&(k, i)| Ok(((k, i), boundary_matrix(p, k, i)?.rank())))
        .collect()
}

/// `dim H_k(A)_i = dim Omega^k_i - rank d_k at i - rank d_(k+1) at i - N`, in form degrees.
pub fn homology_dims_all(p: &PoissonStructure, window: Window) -> Result<Vec<GradedDims>, GradedError> {
    let n = p.n_w();
    let mut wanted = Vec::new();
    for k in 1..4 {
        for i in window.degrees() {
            wanted.push((k, i));
            wanted.push((k, i - n));
        }
    }
    wanted.sort_unstable();
    wanted.dedup();
    let ranks = boundary_ranks(p, &wanted)?;
    let w = *p.weights();
    Ok((0..4)
        .map(|k| {
            GradedDims::from_fn(ambient_space_name(k), Grading::Form, window, |i| {
                let dim = basis_of(SpaceKind::form(k), i, &w).dim();
                let out = if k > 0 { ranks[&(k, i)] } else { 0 };
                let inc = if k < 3 { ranks[&(k + 1, i - n)] } else { 0 };
                dim - out - inc
            })
        })
        .collect())
}

pub fn homology_dims_a(p: &PoissonStructure, k: usize, window: Window) -> Result<GradedDims, GradedError> {
    Ok(homology_dims_all(p, window)?.swap_remove(k))
}

/// `H_k(A)` as the dual `H^(3-k)(A)`, generators re-indexed to form degrees.
pub fn closed_form_homology(p: &PoissonStructure, m: &MilnorData, k: usize) -> ModuleDescription {
    let s = p.weights().weight_sum();
    let mut desc = closed_form_h(p, m, 3 - k);
    desc.space = ambient_space_name(k);
    desc.grading = Grading::Form;
    for g in &mut desc.generators {
        g.degree += s;
    }
    desc
}

/// Closed form of `H_k(A_phi)` in form degrees: three copies of the Milnor
/// algebra (`u_j`, `u_j e_w`, `u_j dx^dy^dz`) and the `grad u_j`, `j >= 1`.
pub fn surface_closed_form_homology(p: &PoissonStructure, m: &MilnorData, k: usize) -> ModuleDescription {
    let s = p.weights().weight_sum();
    let only = GeneratorKind::VectorSpaceOnly;
    let mut gens = Vec::new();
    for (j, &(u, e)) in m.basis_u().iter().enumerate() {
        let u = Poly::monomial(u);
        let g = match k {
            0 => Generator {
                label: format!("u_{j}"),
                representative: Cochain::Scalar(u),
                degree: e,
                kind: only,
            },
            1 if j == 0 => continue,
            1 => Generator {
                label: format!("grad u_{j}"),
                representative: Cochain::Vector(grad(&u)),
                degree: e,
                kind: only,
            },
            2 => Generator {
                label: format!("u_{j} e_w"),
                representative: Cochain::Vector(euler_field(p.weights()).times(&u)),
                degree: e + s,
                kind: only,
            },
            3 => Generator {
                label: format!("u_{j} dx^dy^dz"),
                representative: Cochain::Scalar(u),
                degree: e + s,
                kind: only,
            },
            _ => panic!("no homology in degree {k}"),
        };
        gens.push(g);
    }
    ModuleDescription {
        space: surface_space_name(k),
        grading: Grading::Form,
        coefficient_ring: CoefficientRing::Field,
        casimir_degree: p.degree(),
        zero: gens.is_empty(),
        generators: gens,
    }
}

/// Spanning vectors of the relations cut out of `Omega^k_i` by `phi = 0` and `dphi = 0`.
pub fn surface_relations(p: &PoissonStructure, k: usize, i: i64) -> Result<Vec<SparseVec>, GradedError> {
    let w = p.weights();
    let d = p.degree();
    let target = basis_of(SpaceKind::form(k), i, w);
    let mut out = multiplication_matrix(SpaceKind::form(k), p.phi(), d, i, w)?
        .matrix
        .columns()
        .to_vec();
    if k > 0 {
        let source = basis_of(SpaceKind::form(k - 1), i - d, w);
        let g = p.nabla_phi();
        // dphi ^ alpha in the coordinates of k-forms.
        let m = matrix_of(
            |c| {
                Ok(match (k, c) {
                    (1, Cochain::Scalar(f)) => Cochain::Vector(g.times(f)),
                    (2, Cochain::Vector(v)) => Cochain::Vector(cross(g, v)),
                    (3, Cochain::Vector(v)) => Cochain::Scalar(dot(g, v)),
                    _ => unreachable!(),
                })
            },
            &source,
            &target,
        )?;
        out.extend(m.matrix.columns().iter().cloned());
    }
    Ok(out)
}

/// `Omega^k(A_phi)_i` as a quotient of `Omega^k_i`.
#[derive(Clone, Debug)]
pub struct ChainSpaceModel {
    pub k: usize,
    pub ambient: GradedBasis,
    pub relations: Echelon,
}

impl ChainSpaceModel {
    pub fn new(p: &PoissonStructure, k: usize, i: i64) -> Result<Self, GradedError> {
        let ambient = basis_of(SpaceKind::form(k), i, p.weights());
        let relations = Echelon::from_vectors(ambient.dim(), &surface_relations(p, k, i)?);
        Ok(ChainSpaceModel { k, ambient, relations })
    }

    pub fn dim(&self) -> usize {
        self.ambient.dim() - self.relations.rank()
    }

    /// Ambient indices whose classes form a basis of the quotient.
    pub fn representatives(&self) -> Vec<usize> {
        self.relations.free_indices()
    }

    /// Coordinates of the class of `v` on [`Self::representatives`].
    pub fn project(&self, v: SparseVec) -> SparseVec {
        let reps = self.representatives();
        self.relations
            .reduce(v)
            .into_iter()
            .map(|(n, c)| (reps.binary_search(&n).expect("normal form on representatives"), c))
            .collect()
    }

    /// Matrix of the projection `Omega^k_i -> Omega^k(A_phi)_i`.
    pub fn projection_matrix(&self) -> Matrix {
        let cols = (0..self.ambient.dim())
            .map(|n| self.project(SparseVec::from([(n, Rational::from_integer(1.into()))])))
            .collect();
        Matrix::from_columns(self.dim(), cols)
    }
}

fn rank_of(dim: usize, vs: impl IntoIterator<Item = SparseVec>) -> usize {
    let mut e = Echelon::new(dim);
    for v in vs {
        e.insert(v);
    }
    e.rank()
}

/// `dim H_k(A_phi)_i` for `k = 0..3` at form degree `i`.
fn surface_homology_degree(p: &PoissonStructure, i: i64) -> Result<[usize; 4], GradedError> {
    let n = p.n_w();
    let w = p.weights();
    let mut dims = [0; 4];
    for (k, slot) in dims.iter_mut().enumerate() {
        let dim_v = basis_of(SpaceKind::form(k), i, w).dim();
        let rel = surface_relations(p, k, i)?;
        // Cycles: v with d_k v in the relations of degree i + N.
        let z = if k == 0 {
            dim_v
        } else {
            let b = boundary_matrix(p, k, i)?;
            let rel_next = surface_relations(p, k - 1, i + n)?;
            let dim_next = b.target.dim();
            let r_q = rank_of(dim_next, rel_next.iter().cloned());
            let r_all = rank_of(dim_next, rel_next.into_iter().chain(b.matrix.columns().iter().cloned()));
            dim_v - (r_all - r_q)
        };
        let incoming: Vec<SparseVec> = if k < 3 {
            boundary_matrix(p, k + 1, i - n)?.matrix.columns().to_vec()
        } else {
            Vec::new()
        };
        *slot = z - rank_of(dim_v, rel.into_iter().chain(incoming));
    }
    Ok(dims)
}

/// Brute-force dims of `H_0 .. H_3` of `A_phi` over a window of form degrees.
pub fn surface_homology_all(p: &PoissonStructure, window: Window) -> Result<Vec<GradedDims>, GradedError> {
    let per: BTreeMap<i64, [usize; 4]> = window
        .degrees()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|i| Ok((i, surface_homology_degree(p, i)?)))
        .collect::<Result<_, GradedError>>()?;
    Ok((0..4)
        .map(|k| GradedDims::from_fn(surface_space_name(k), Grading::Form, window, |i| per[&i][k]))
        .collect())
}

/// Brute-force dims and closed form of `H_k(A_phi)`.
pub fn surface_homology_dims(
    p: &PoissonStructure,
    m: &MilnorData,
    k: usize,
    window: Window,
) -> Result<(GradedDims, ModuleDescription), GradedError> {
    Ok((
        surface_homology_all(p, window)?.swap_remove(k),
        surface_closed_form_homology(p, m, k),
    ))
}

/// Checks `P_(k-1) d_k = d_k^(A_phi) P_k` at form degree `i`, with the
/// descended boundary evaluated on the quotient representatives.
pub fn projection_commutes(p: &PoissonStructure, k: usize, i: i64) -> Result<bool, GradedError> {
    let src = ChainSpaceModel::new(p, k, i)?;
    let tgt = ChainSpaceModel::new(p, k - 1, i + p.n_w())?;
    let b = boundary_matrix(p, k, i)?;
    let descended = Matrix::from_columns(
        tgt.dim(),
        src.representatives()
            .iter()
            .map(|&n| tgt.project(b.matrix.column(n).clone()))
            .collect(),
    );
    let lhs = tgt.projection_matrix().mul(&b.matrix);
    let rhs = descended.mul(&src.projection_matrix());
    Ok(lhs == rhs)
}

/// A monomial `m dx_I` as a `k`-form in graded coordinates, for tests and examples.
pub fn basis_form(k: usize, m: Monomial, idx: &[usize]) -> Cochain {
    let mut f = Form::new();
    let mut key = idx.to_vec();
    let mut sign = 1;
    // Bubble sort to count the permutation sign.
    for a in 0..key.len() {
        for b in 0..key.len() - 1 - a {
            if key[b] > key[b + 1] {
                key.swap(b, b + 1);
                sign = -sign;
            }
        }
    }
    if key.windows(2).any(|w| w[0] == w[1]) {
        return cochain_of(k, &f);
    }
    f.insert(key, Poly::monomial(m).scale(&rat(sign)));
    cochain_of(k, &f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{brute_force_all, default_window, predicted_dims};
    use crate::milnor::check_isolated;
    use crate::poly::{poly, WeightSystem};

    fn setup(phi: &str) -> (PoissonStructure, MilnorData) {
        let w = WeightSystem::standard();
        let phi = poly(phi);
        (PoissonStructure::new(phi.clone(), w).unwrap(), check_isolated(&phi, &w).unwrap())
    }

    #[test]
    fn brylinski_on_one_forms_is_the_bracket() {
        let (p, _) = setup("x^3+y^3+z^3");
        let f = poly("x*y^2");
        for j in 0..3 {
            let form = Cochain::Vector(VecPoly::unit(j, f.clone()));
            let expected = Cochain::Scalar(p.bracket(&f, &Poly::var(j)));
            assert_eq!(brylinski_boundary(&p, 1, &form), expected);
        }
        // dx^dy = (0, 0, 1) and dz^dx = (0, 1, 0).
        assert_eq!(basis_form(2, Monomial::ONE, &[1, 0]), Cochain::Vector(VecPoly::unit(2, poly("-1"))));
        assert_eq!(basis_form(2, Monomial::ONE, &[2, 0]), Cochain::Vector(VecPoly::unit(1, poly("1"))));
    }

    #[test]
    fn duality_matrix_identity() {
        let (p, _) = setup("x^3+y^3+z^3");
        for k in 1..4 {
            for i in 0..7 {
                assert!(duality_identity_holds(&p, k, i).unwrap(), "k={k} i={i}");
            }
        }
    }

    #[test]
    fn ambient_homology_is_dual() {
        let (p, m) = setup("x^2+y^2+z^2");
        let win = default_window(&p);
        let fw = form_window(&p, win);
        let hom = homology_dims_all(&p, fw).unwrap();
        let co = brute_force_all(&p, win).unwrap();
        for k in 0..4 {
            let shifted = co[3 - k].shifted(ambient_space_name(k), Grading::Form, 3);
            assert_eq!(hom[k].first_mismatch(&shifted), None);
            let pred = predicted_dims(&closed_form_homology(&p, &m, k), fw);
            assert_eq!(hom[k].first_mismatch(&pred), None);
        }
        assert_eq!(hom[3].support(), vec![3, 5, 7]);
    }

    #[test]
    fn surface_homology_of_cubic() {
        let (p, m) = setup("x^3+y^3+z^3");
        let fw = form_window(&p, default_window(&p));
        let all = surface_homology_all(&p, fw).unwrap();
        let totals: Vec<usize> = all.iter().map(GradedDims::total).collect();
        assert_eq!(totals, vec![8, 7, 8, 8]);
        for k in 0..4 {
            let pred = predicted_dims(&surface_closed_form_homology(&p, &m, k), fw);
            assert_eq!(all[k].first_mismatch(&pred), None, "k={k}");
        }
        for k in 1..4 {
            for i in 0..8 {
                assert!(projection_commutes(&p, k, i).unwrap());
            }
        }
    }
}
