//! Property suites: algebraic identities, Koszul and de Rham exactness,
//! cohomology and homology cross-checks. Randomized checks draw from a
//! seeded ChaCha8 generator, so a run is reproducible from its seed.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::cohomology::{
    brute_force_all, closed_form_h, predicted_dims, surface_brute_force_all, surface_closed_form_h, GradedDims,
    SurfaceError, Window,
};
use crate::graded::{basis_of, coboundary_matrix, matrix_of, GradedBasis, GradedError, GradedOperatorMatrix, SpaceKind};
use crate::homology::{
    brylinski_boundary, closed_form_homology, duality_identity_holds, form_window, homology_dims_all,
    projection_commutes, surface_closed_form_homology, surface_homology_all,
};
use crate::linalg::{Echelon, SparseVec};
use crate::milnor::MilnorData;
use crate::poisson::{Cochain, PoissonStructure};
use crate::poly::{rat, ratio, Poly, Rational};
use crate::vector::{cross, curl, div, dot, euler_field, grad, VecPoly};

/// Number of randomized cases per randomized family.
pub const RANDOM_CASES: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Identities,
    Koszul,
    Cohomology,
    Homology,
    Surface,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Identities,
        Suite::Koszul,
        Suite::Cohomology,
        Suite::Homology,
        Suite::Surface,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::Koszul => "koszul",
            Suite::Cohomology => "cohomology",
            Suite::Homology => "homology",
            Suite::Surface => "surface",
        }
    }

    /// Whether the suite compares against closed forms and so needs an isolated singularity.
    pub fn needs_gate(self) -> bool {
        !matches!(self, Suite::Identities | Suite::Koszul)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("unknown suite {0:?}; expected identities, koszul, cohomology, homology, surface or all")]
pub struct UnknownSuite(pub String);

/// Parses a suite selector; `all` selects every suite.
pub fn parse_suites(s: &str) -> Result<Vec<Suite>, UnknownSuite> {
    if s == "all" {
        return Ok(Suite::ALL.to_vec());
    }
    Suite::from_str(s).map(|x| vec![x])
}

impl FromStr for Suite {
    type Err = UnknownSuite;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error(transparent)]
    Graded(#[from] GradedError),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error("suite {0} needs an isolated singularity")]
    NeedsIsolated(Suite),
}

/// Outcome of one invariant family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub cases: usize,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub space: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    fn pass(name: &str, cases: usize) -> Check {
        Check {
            name: name.to_string(),
            cases,
            passed: true,
            space: None,
            degree: None,
            detail: None,
        }
    }

    fn fail(name: &str, cases: usize, space: Option<String>, degree: Option<i64>, detail: String) -> Check {
        Check {
            name: name.to_string(),
            cases,
            passed: false,
            space,
            degree,
            detail: Some(detail),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    fn new(suite: Suite, checks: Vec<Check>) -> Self {
        SuiteReport {
            suite,
            passed: checks.iter().all(|c| c.passed),
            checks,
        }
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

// ---------------------------------------------------------------------------
// Random inputs

fn random_coefficient(rng: &mut ChaCha8Rng) -> Rational {
    let n = loop {
        let n: i64 = rng.gen_range(-4..=4);
        if n != 0 {
            break n;
        }
    };
    if rng.gen_bool(0.2) {
        ratio(n, rng.gen_range(2..=3))
    } else {
        rat(n)
    }
}

fn random_vector(rng: &mut ChaCha8Rng, dim: usize) -> SparseVec {
    let mut v = SparseVec::new();
    if dim == 0 {
        return v;
    }
    let terms = rng.gen_range(1..=dim.min(4));
    for _ in 0..terms {
        v.insert(rng.gen_range(0..dim), random_coefficient(rng));
    }
    v
}

/// A random element of a graded piece with a handful of terms.
pub fn random_element(rng: &mut ChaCha8Rng, basis: &GradedBasis) -> Cochain {
    basis.cochain(&random_vector(rng, basis.dim()))
}

/// A random weight homogeneous polynomial of degree `e`; zero if `A_e = 0`.
pub fn random_homogeneous(rng: &mut ChaCha8Rng, e: i64, p: &PoissonStructure) -> Poly {
    random_element(rng, &basis_of(SpaceKind::A, e, p.weights()))
        .as_scalar()
        .cloned()
        .unwrap_or_default()
}

fn random_combination(rng: &mut ChaCha8Rng, vs: &[SparseVec]) -> SparseVec {
    let mut out = SparseVec::new();
    for v in vs {
        if rng.gen_bool(0.6) {
            let c = random_coefficient(rng);
            for (i, a) in v {
                let e = out.entry(*i).or_insert_with(|| rat(0));
                *e += &c * a;
            }
        }
    }
    out.retain(|_, a| *a != rat(0));
    out
}

// ---------------------------------------------------------------------------
// Koszul rows and de Rham columns

/// `f -> f grad phi` from `X^3_r` to `X^2_(r+d)`.
pub fn koszul_times(p: &PoissonStructure, r: i64) -> Result<GradedOperatorMatrix, GradedError> {
    let w = p.weights();
    let s = basis_of(SpaceKind::X3, r, w);
    let t = basis_of(SpaceKind::X2, r + p.degree(), w);
    matrix_of(|c| Ok(Cochain::Vector(p.nabla_phi().times(c.as_scalar().unwrap()))), &s, &t)
}

/// `h -> h x grad phi` from `X^2_r` to `X^1_(r+d)`.
pub fn koszul_cross(p: &PoissonStructure, r: i64) -> Result<GradedOperatorMatrix, GradedError> {
    let w = p.weights();
    let s = basis_of(SpaceKind::X2, r, w);
    let t = basis_of(SpaceKind::X1, r + p.degree(), w);
    matrix_of(|c| Ok(Cochain::Vector(cross(c.as_vector().unwrap(), p.nabla_phi()))), &s, &t)
}

/// `f -> f . grad phi` from `X^1_r` to `X^0_(r+d)`.
pub fn koszul_dot(p: &PoissonStructure, r: i64) -> Result<GradedOperatorMatrix, GradedError> {
    let w = p.weights();
    let s = basis_of(SpaceKind::X1, r, w);
    let t = basis_of(SpaceKind::X0, r + p.degree(), w);
    matrix_of(|c| Ok(Cochain::Scalar(dot(c.as_vector().unwrap(), p.nabla_phi()))), &s, &t)
}

/// Kernel elements of a Koszul map that are not in the image of the previous map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KoszulDefect {
    /// `"first"` for `A -> A^3 -> A^3`, `"second"` for `A^3 -> A^3 -> A`.
    pub part: &'static str,
    pub space: String,
    pub degree: i64,
    /// Basis of a complement of the image inside the kernel.
    pub basis: Vec<VecPoly>,
    /// Sum of the basis elements.
    pub witness: VecPoly,
}

fn defect(
    part: &'static str,
    kernel_of: &GradedOperatorMatrix,
    image_of: &GradedOperatorMatrix,
) -> Option<KoszulDefect> {
    let src = &kernel_of.source;
    let mut e = Echelon::from_vectors(src.dim(), image_of.matrix.columns());
    let reps: Vec<SparseVec> = kernel_of
        .matrix
        .kernel_basis()
        .into_iter()
        .filter(|v| e.insert(v.clone()))
        .collect();
    if reps.is_empty() {
        return None;
    }
    let basis: Vec<VecPoly> = reps
        .iter()
        .map(|v| src.cochain(v).as_vector().cloned().unwrap())
        .collect();
    let witness = basis.iter().fold(VecPoly::zero(), |acc, v| &acc + v);
    Some(KoszulDefect {
        part,
        space: src.kind().to_string(),
        degree: src.degree(),
        basis,
        witness,
    })
}

/// Failures of exactness of the Koszul rows, in window order.
pub fn koszul_defects(p: &PoissonStructure, window: Window) -> Result<Vec<KoszulDefect>, GradedError> {
    let d = p.degree();
    let mut out = Vec::new();
    for r in window.degrees() {
        // At X^2_r: ker(x grad phi) = im(. grad phi from X^3_(r-d)).
        if let Some(x) = defect("first", &koszul_cross(p, r)?, &koszul_times(p, r - d)?) {
            out.push(x);
        }
        // At X^1_r: ker(. grad phi) = im(x grad phi from X^2_(r-d)).
        if let Some(x) = defect("second", &koszul_dot(p, r)?, &koszul_cross(p, r - d)?) {
            out.push(x);
        }
    }
    Ok(out)
}

fn derham(kind: SpaceKind, p: &PoissonStructure, r: i64) -> Result<GradedOperatorMatrix, GradedError> {
    let w = p.weights();
    match kind {
        SpaceKind::X3 => matrix_of(
            |c| Ok(Cochain::Vector(grad(c.as_scalar().unwrap()))),
            &basis_of(SpaceKind::X3, r, w),
            &basis_of(SpaceKind::X2, r, w),
        ),
        SpaceKind::X2 => matrix_of(
            |c| Ok(Cochain::Vector(curl(c.as_vector().unwrap()))),
            &basis_of(SpaceKind::X2, r, w),
            &basis_of(SpaceKind::X1, r, w),
        ),
        _ => matrix_of(
            |c| Ok(Cochain::Scalar(div(c.as_vector().unwrap()))),
            &basis_of(SpaceKind::X1, r, w),
            &basis_of(SpaceKind::X0, r, w),
        ),
    }
}

/// The coboundary `delta^2` on `X^2_r`, the span of `grad f` and `g grad phi`
/// there, and whether that span lies in the kernel.
fn z2_span(p: &PoissonStructure, r: i64) -> Result<(GradedOperatorMatrix, Echelon, bool), GradedError> {
    let w = p.weights();
    let m = coboundary_matrix(p, 2, r)?;
    let b = &m.source;
    let mut span = Echelon::new(b.dim());
    let mut inside = true;
    let grads = basis_of(SpaceKind::A, r + w.weight_sum(), w)
        .elements()
        .into_iter()
        .map(|f| grad(f.as_scalar().unwrap()));
    let multiples = basis_of(SpaceKind::A, r - p.n_w(), w)
        .elements()
        .into_iter()
        .map(|g| p.nabla_phi().times(g.as_scalar().unwrap()));
    for v in grads.chain(multiples) {
        let v = b.coordinates(&Cochain::Vector(v))?;
        inside &= m.matrix.apply(&v).is_empty();
        span.insert(v);
    }
    Ok((m, span, inside))
}

// ---------------------------------------------------------------------------

/// Runs suites for one Poisson structure over a derivation degree window.
pub struct Verifier<'a> {
    p: &'a PoissonStructure,
    m: Option<&'a MilnorData>,
    window: Window,
    seed: u64,
}

impl<'a> Verifier<'a> {
    pub fn new(p: &'a PoissonStructure, m: Option<&'a MilnorData>, window: Window, seed: u64) -> Self {
        Verifier { p, m, window, seed }
    }

    fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(salt))
    }

    fn milnor(&self, suite: Suite) -> Result<&'a MilnorData, VerifyError> {
        self.m.ok_or(VerifyError::NeedsIsolated(suite))
    }

    pub fn run(&self, suite: Suite) -> Result<SuiteReport, VerifyError> {
        let checks = match suite {
            Suite::Identities => self.identities(),
            Suite::Koszul => self.koszul()?,
            Suite::Cohomology => self.cohomology()?,
            Suite::Homology => self.homology()?,
            Suite::Surface => self.surface()?,
        };
        Ok(SuiteReport::new(suite, checks))
    }

    /// A random polynomial of degree at most `deg phi`, homogeneous.
    fn small_poly(&self, rng: &mut ChaCha8Rng) -> Poly {
        let e = rng.gen_range(0..=self.p.degree());
        random_homogeneous(rng, e, self.p)
    }

    fn small_field(&self, rng: &mut ChaCha8Rng, kind: SpaceKind) -> (i64, Cochain) {
        let s = self.p.weights().weight_sum();
        let i = rng.gen_range(-s..=self.p.degree());
        (i, random_element(rng, &basis_of(kind, i, self.p.weights())))
    }

    fn randomized<F>(&self, name: &str, salt: u64, mut case: F) -> Check
    where
        F: FnMut(&mut ChaCha8Rng) -> Option<String>,
    {
        let mut rng = self.rng(salt);
        for n in 0..RANDOM_CASES {
            if let Some(msg) = case(&mut rng) {
                return Check::fail(name, n + 1, None, None, msg);
            }
        }
        Check::pass(name, RANDOM_CASES)
    }

    pub fn identities(&self) -> Vec<Check> {
        let p = self.p;
        let w = p.weights();
        let rv = |rng: &mut ChaCha8Rng| VecPoly::new(self.small_poly(rng), self.small_poly(rng), self.small_poly(rng));
        let mut out = Vec::new();
        out.push(self.randomized("curl of a product", 1, |rng| {
            let f = self.small_poly(rng);
            let g = rv(rng);
            let lhs = curl(&g.times(&f));
            let rhs = &cross(&grad(&f), &g) + &curl(&g).times(&f);
            (lhs != rhs).then(|| format!("f = {f}, g = {g}"))
        }));
        out.push(self.randomized("divergence of a product", 2, |rng| {
            let f = self.small_poly(rng);
            let g = rv(rng);
            let lhs = div(&g.times(&f));
            let rhs = &dot(&grad(&f), &g) + &(&f * &div(&g));
            (lhs != rhs).then(|| format!("f = {f}, g = {g}"))
        }));
        out.push(self.randomized("divergence of a cross product", 3, |rng| {
            let f = rv(rng);
            let g = rv(rng);
            let lhs = div(&cross(&f, &g));
            let rhs = &dot(&curl(&f), &g) - &dot(&f, &curl(&g));
            (lhs != rhs).then(|| format!("f = {f}, g = {g}"))
        }));
        let e = euler_field(w);
        out.push(self.randomized("Euler formula", 4, |rng| {
            let deg = rng.gen_range(0..=p.degree());
            let f = random_homogeneous(rng, deg, p);
            let ok = dot(&grad(&f), &e) == f.scale(&rat(deg));
            (!ok).then(|| format!("f = {f}"))
        }));
        out.push(self.randomized("divergence of f e_w", 5, |rng| {
            let deg = rng.gen_range(0..=p.degree());
            let f = random_homogeneous(rng, deg, p);
            let ok = div(&e.times(&f)) == f.scale(&rat(deg + w.weight_sum()));
            (!ok).then(|| format!("f = {f}"))
        }));
        out.push(self.randomized("Jacobi identity", 6, |rng| {
            let (f, g, h) = (self.small_poly(rng), self.small_poly(rng), self.small_poly(rng));
            let j = p.jacobiator(&f, &g, &h);
            (!j.is_zero()).then(|| format!("f = {f}, g = {g}, h = {h}"))
        }));
        out.push(self.randomized("bracket is antisymmetric and a derivation", 7, |rng| {
            let (f, g, h) = (self.small_poly(rng), self.small_poly(rng), self.small_poly(rng));
            let anti = p.bracket(&f, &g) == -p.bracket(&g, &f);
            let leibniz = p.bracket(&f, &(&g * &h)) == &(&p.bracket(&f, &g) * &h) + &(&g * &p.bracket(&f, &h));
            (!(anti && leibniz)).then(|| format!("f = {f}, g = {g}, h = {h}"))
        }));
        let xs: Vec<Poly> = (0..3).map(Poly::var).collect();
        let gens_ok = p.bracket(&xs[0], &xs[1]) == p.phi().derivative(2)
            && p.bracket(&xs[1], &xs[2]) == p.phi().derivative(0)
            && p.bracket(&xs[2], &xs[0]) == p.phi().derivative(1);
        out.push(if gens_ok {
            Check::pass("brackets of the coordinates", 3)
        } else {
            Check::fail("brackets of the coordinates", 3, None, None, "{x,y} != phi_z".into())
        });
        out.push(self.randomized("delta squared vanishes", 8, |rng| {
            let f = self.small_poly(rng);
            let (_, v) = self.small_field(rng, SpaceKind::X1);
            let v = v.as_vector().unwrap().clone();
            let ok = p.delta1(&p.delta0(&f)).is_zero() && p.delta2(&p.delta1(&v)).is_zero();
            (!ok).then(|| format!("f = {f}, F = {v}"))
        }));
        out.push(self.randomized("Casimir commutes with delta", 9, |rng| {
            let k = rng.gen_range(0..3usize);
            let (_, c) = self.small_field(rng, SpaceKind::multivector(k));
            let lhs = p.coboundary(k as i32, &c.times(p.phi())).unwrap();
            let rhs = p.coboundary(k as i32, &c).unwrap().times(p.phi());
            let f = self.small_poly(rng);
            let ok = lhs == rhs && p.bracket(p.phi(), &f).is_zero();
            (!ok).then(|| format!("k = {k}, c = {c}"))
        }));
        out.push(self.randomized("delta has degree deg(phi) - |w|", 10, |rng| {
            let k = rng.gen_range(0..3usize);
            let (i, c) = self.small_field(rng, SpaceKind::multivector(k));
            let img = p.coboundary(k as i32, &c).unwrap();
            let target = basis_of(SpaceKind::multivector(k + 1), i + p.n_w(), w);
            target.coordinates(&img).err().map(|e| format!("k = {k}, c = {c}: {e}"))
        }));
        out
    }

    pub fn koszul(&self) -> Result<Vec<Check>, VerifyError> {
        let p = self.p;
        let d = p.degree();
        let s = p.weights().weight_sum();
        let win = self.window;
        let mut out = Vec::new();
        let cases = win.degrees().count();

        let defects = koszul_defects(p, win)?;
        for part in ["first", "second"] {
            let name = format!("Koszul row exactness, {part} part");
            match defects.iter().find(|x| x.part == part) {
                None => out.push(Check::pass(&name, cases)),
                Some(x) => {
                    let basis: Vec<String> = x.basis.iter().map(|v| v.display_with(p.weights()).to_string()).collect();
                    out.push(Check::fail(
                        &name,
                        cases,
                        Some(x.space.clone()),
                        Some(x.degree),
                        format!(
                            "witness {} in the kernel but not the image; complement basis [{}]",
                            x.witness.display_with(p.weights()),
                            basis.join(", ")
                        ),
                    ));
                }
            }
        }

        out.push(self.kernel_samples("Koszul kernel samples have preimages", 20, 2, |part, r| {
            let (ker, img) = if part == 0 {
                (koszul_cross(p, r)?, koszul_times(p, r - d)?)
            } else {
                (koszul_dot(p, r)?, koszul_cross(p, r - d)?)
            };
            let e = Echelon::from_vectors(ker.source.dim(), img.matrix.columns());
            Ok((ker.matrix.kernel_basis(), ker.source, e))
        })?);

        let mut bad = None;
        for r in win.degrees() {
            let g = derham(SpaceKind::X3, p, r)?;
            let c = derham(SpaceKind::X2, p, r)?;
            let dv = derham(SpaceKind::X1, p, r)?;
            let (rg, rc, rd) = (g.rank(), c.rank(), dv.rank());
            let constants = usize::from(r == -s);
            if g.matrix.ncols() - rg != constants {
                bad = Some(("X3", r, "grad kernel is not the constants"));
            } else if c.matrix.ncols() - rc != rg {
                bad = Some(("X2", r, "ker curl != im grad"));
            } else if dv.matrix.ncols() - rd != rc {
                bad = Some(("X1", r, "ker Div != im curl"));
            } else if rd != dv.matrix.nrows() {
                bad = Some(("X0", r, "Div is not onto"));
            }
            if bad.is_some() {
                break;
            }
        }
        let name = "de Rham column exactness";
        out.push(match bad {
            None => Check::pass(name, cases),
            Some((space, r, msg)) => Check::fail(name, cases, Some(space.into()), Some(r), msg.into()),
        });

        // Z^2 = {grad f + g grad phi}.
        let mut bad = None;
        for r in win.degrees() {
            let (m, span, inside) = z2_span(p, r)?;
            if !inside || span.rank() != m.matrix.nullity() {
                bad = Some(r);
                break;
            }
        }
        let name = "2-cocycles are grad f + g grad phi";
        out.push(match bad {
            None => Check::pass(name, cases),
            Some(r) => Check::fail(name, cases, Some("X2".into()), Some(r), "span differs from Z^2".into()),
        });
        out.push(self.kernel_samples("de Rham kernel samples have preimages", 21, 2, |part, r| {
            let (ker, img) = if part == 0 {
                (derham(SpaceKind::X2, p, r)?, derham(SpaceKind::X3, p, r)?)
            } else {
                (derham(SpaceKind::X1, p, r)?, derham(SpaceKind::X2, p, r)?)
            };
            let e = Echelon::from_vectors(ker.source.dim(), img.matrix.columns());
            Ok((ker.matrix.kernel_basis(), ker.source, e))
        })?);
        out.push(self.kernel_samples("2-cocycle samples split as grad f + g grad phi", 22, 1, |_, r| {
            let (m, span, _) = z2_span(p, r)?;
            Ok((m.matrix.kernel_basis(), m.source, span))
        })?);
        Ok(out)
    }

    /// Draws random kernel elements and checks that each lies in the given image.
    ///
    /// `build(part, r)` returns a kernel basis, its ambient basis and the image
    /// echelon in degree `r`; degrees with an empty kernel are skipped.
    fn kernel_samples<F>(&self, name: &str, salt: u64, parts: usize, build: F) -> Result<Check, VerifyError>
    where
        F: Fn(usize, i64) -> Result<(Vec<SparseVec>, GradedBasis, Echelon), VerifyError>,
    {
        let mut pool = Vec::new();
        for part in 0..parts {
            for r in self.window.degrees() {
                let (kernel, basis, image) = build(part, r)?;
                if !kernel.is_empty() {
                    pool.push((r, kernel, basis, image));
                }
            }
        }
        if pool.is_empty() {
            return Ok(Check::pass(name, 0));
        }
        let mut rng = self.rng(salt);
        for n in 0..RANDOM_CASES {
            let (r, kernel, basis, image) = pool.choose(&mut rng).unwrap();
            let v = loop {
                let v = random_combination(&mut rng, kernel);
                if !v.is_empty() {
                    break v;
                }
            };
            if !image.contains(&v) {
                let c = basis.cochain(&v);
                return Ok(Check::fail(
                    name,
                    n + 1,
                    Some(basis.kind().to_string()),
                    Some(*r),
                    format!("{} has no preimage", c.display_with(self.p.weights())),
                ));
            }
        }
        Ok(Check::pass(name, RANDOM_CASES))
    }

    pub fn cohomology(&self) -> Result<Vec<Check>, VerifyError> {
        let p = self.p;
        let m = self.milnor(Suite::Cohomology)?;
        let w = p.weights();
        let d = p.degree();
        let n_w = p.n_w();
        let win = self.window;
        let mut out = Vec::new();

        let brute = brute_force_all(p, win)?;
        for (k, b) in brute.iter().enumerate() {
            let pred = predicted_dims(&closed_form_h(p, m, k), win);
            out.push(compare(&format!("{} closed form", b.space), b, &pred));
        }

        // phi^r is never the divergence of a g with g . grad phi = 0.
        let mut bad = None;
        let mut cases = 0;
        for r in 0.. {
            if r * d > win.max {
                break;
            }
            cases += 1;
            let i = r * d;
            let ker = koszul_dot(p, i)?.matrix.kernel_basis();
            let dv = derham(SpaceKind::X1, p, i)?;
            let divs = Echelon::from_vectors(dv.matrix.nrows(), &ker.iter().map(|v| dv.matrix.apply(v)).collect::<Vec<_>>());
            let target = dv.target.coordinates(&Cochain::Scalar(p.phi().pow(r as u32)))?;
            if divs.contains(&target) {
                bad = Some(i);
                break;
            }
        }
        let name = "phi^r is not a divergence of a field orthogonal to grad phi";
        out.push(match bad {
            None => Check::pass(name, cases),
            Some(i) => Check::fail(name, cases, Some("X1".into()), Some(i), "phi^r reached".into()),
        });
        out.push(self.randomized("divergence of kernel samples avoids phi^r", 30, |rng| {
            let r = rng.gen_range(0..=(win.max.max(0) / d)) as u32;
            let i = r as i64 * d;
            let ker = koszul_dot(p, i).unwrap().matrix.kernel_basis();
            let dv = derham(SpaceKind::X1, p, i).unwrap();
            let v = random_combination(rng, &ker);
            let div_v = dv.target.cochain(&dv.matrix.apply(&v));
            let phi_r = p.phi().pow(r);
            // Div(g) = alpha phi^r forces alpha = 0.
            let lead = phi_r.terms().next().map(|(mono, c)| (*mono, c.clone())).unwrap();
            let alpha = div_v.as_scalar().unwrap().coeff(&lead.0) / &lead.1;
            let ok = alpha == rat(0) || *div_v.as_scalar().unwrap() != phi_r.scale(&alpha);
            (!ok).then(|| format!("g = {}", dv.source.cochain(&v)))
        }));

        // delta^1(phi^i u_j e_w) = (w(u_j) - d + |w|) phi^i u_j grad phi - d phi^(i+1) grad u_j.
        let e = euler_field(w);
        let mut bad = None;
        let mut cases = 0;
        for i in 0..4u32 {
            for (j, &(u, deg)) in m.basis_u().iter().enumerate() {
                cases += 1;
                let u = Poly::monomial(u);
                let phi_i = p.phi().pow(i);
                let lhs = p.delta1(&e.times(&(&phi_i * &u)));
                let rhs = &p.nabla_phi().times(&(&phi_i * &u)).scale(&rat(deg - n_w))
                    - &grad(&u).times(&(&phi_i * p.phi())).scale(&rat(d));
                if lhs != rhs {
                    bad = Some((i, j));
                }
            }
        }
        let name = "delta^1 of phi^i u_j e_w";
        out.push(match bad {
            None => Check::pass(name, cases),
            Some((i, j)) => Check::fail(name, cases, None, None, format!("fails for i = {i}, j = {j}")),
        });
        out.push(self.randomized("delta^1 of phi^i u e_w, random u", 31, |rng| {
            let i = rng.gen_range(0..3u32);
            let deg = rng.gen_range(0..=p.degree());
            let u = random_homogeneous(rng, deg, p);
            let phi_i = p.phi().pow(i);
            let lhs = p.delta1(&e.times(&(&phi_i * &u)));
            let rhs = &p.nabla_phi().times(&(&phi_i * &u)).scale(&rat(deg - n_w))
                - &grad(&u).times(&(&phi_i * p.phi())).scale(&rat(d));
            (lhs != rhs).then(|| format!("i = {i}, u = {u}"))
        }));

        // grad phi is a 2-coboundary exactly when d != |w|.
        let d1 = coboundary_matrix(p, 1, 0)?;
        let target = d1.target.coordinates(&Cochain::Vector(p.nabla_phi().clone()))?;
        let exact = d1.matrix.column_echelon().contains(&target);
        let name = "grad phi is exact iff deg phi != |w|";
        out.push(if exact == (n_w != 0) {
            Check::pass(name, 1)
        } else {
            Check::fail(name, 1, Some("X2".into()), Some(n_w), format!("exact = {exact}"))
        });

        let mut bad = None;
        for i in win.degrees() {
            let d0 = coboundary_matrix(p, 0, i)?;
            let ker = d0.matrix.kernel_basis();
            let ok = if i >= 0 && i % d == 0 {
                ker.len() == 1 && {
                    let v = d0.source.coordinates(&Cochain::Scalar(p.phi().pow((i / d) as u32)))?;
                    Echelon::from_vectors(d0.source.dim(), &ker).contains(&v)
                }
            } else {
                ker.is_empty()
            };
            if !ok {
                bad = Some(i);
                break;
            }
        }
        let name = "0-cocycles are spanned by powers of phi";
        out.push(match bad {
            None => Check::pass(name, win.degrees().count()),
            Some(i) => Check::fail(name, win.degrees().count(), Some("X0".into()), Some(i), "extra Casimir".into()),
        });
        Ok(out)
    }

    pub fn homology(&self) -> Result<Vec<Check>, VerifyError> {
        let p = self.p;
        let m = self.milnor(Suite::Homology)?;
        let s = p.weights().weight_sum();
        let fw = form_window(p, self.window);
        let mut out = Vec::new();

        let hom = homology_dims_all(p, fw)?;
        let co = brute_force_all(p, self.window)?;
        for k in 0..4 {
            let dual = co[3 - k].shifted(hom[k].space.clone(), hom[k].grading, s);
            out.push(compare(&format!("{} equals shifted H^{}(A)", hom[k].space, 3 - k), &hom[k], &dual));
            let pred = predicted_dims(&closed_form_homology(p, m, k), fw);
            out.push(compare(&format!("{} closed form", hom[k].space), &hom[k], &pred));
        }

        let mut bad = None;
        'outer: for i in fw.degrees() {
            for k in 1..4 {
                if !duality_identity_holds(p, k, i)? {
                    bad = Some((k, i));
                    break 'outer;
                }
            }
        }
        let name = "boundary matrices equal (-1)^k delta^(3-k) and the direct formula";
        let cases = 3 * fw.degrees().count();
        out.push(match bad {
            None => Check::pass(name, cases),
            Some((k, i)) => Check::fail(name, cases, Some(format!("Omega{k}")), Some(i), "matrices differ".into()),
        });

        let mut bad = None;
        'outer2: for i in fw.degrees() {
            for k in 1..3 {
                let hi = crate::graded::boundary_matrix(p, k + 1, i)?;
                let lo = crate::graded::boundary_matrix(p, k, i + p.n_w())?;
                if !hi.then(&lo).matrix.is_zero() {
                    bad = Some((k, i));
                    break 'outer2;
                }
            }
        }
        let name = "boundary squared vanishes as matrices";
        let cases = 2 * fw.degrees().count();
        out.push(match bad {
            None => Check::pass(name, cases),
            Some((k, i)) => Check::fail(name, cases, Some(format!("Omega{}", k + 1)), Some(i), "nonzero".into()),
        });
        out.push(self.randomized("boundary squared vanishes on random forms", 40, |rng| {
            let k = rng.gen_range(2..4usize);
            let i = rng.gen_range(fw.min..=fw.max);
            let c = random_element(rng, &basis_of(SpaceKind::form(k), i, p.weights()));
            let once = brylinski_boundary(p, k, &c);
            let twice = brylinski_boundary(p, k - 1, &once);
            (!twice.is_zero()).then(|| format!("k = {k}, form {c}"))
        }));
        Ok(out)
    }

    pub fn surface(&self) -> Result<Vec<Check>, VerifyError> {
        let p = self.p;
        let m = self.milnor(Suite::Surface)?;
        let win = self.window;
        let fw = form_window(p, win);
        let mut out = Vec::new();

        let brute = surface_brute_force_all(p, win)?;
        for (k, b) in brute.iter().enumerate() {
            let pred = predicted_dims(&surface_closed_form_h(p, m, k), win);
            out.push(compare(&format!("{} closed form", b.space), b, &pred));
        }
        let hom = surface_homology_all(p, fw)?;
        for (k, b) in hom.iter().enumerate() {
            let pred = predicted_dims(&surface_closed_form_homology(p, m, k), fw);
            out.push(compare(&format!("{} closed form", b.space), b, &pred));
        }
        let milnor = GradedDims::from_fn(hom[0].space.clone(), hom[0].grading, fw, |i| m.graded_dim(i));
        out.push(compare("H_0(A_phi) is the Milnor algebra", &hom[0], &milnor));

        let mut bad = None;
        'outer: for i in fw.degrees() {
            for k in 1..4 {
                if !projection_commutes(p, k, i)? {
                    bad = Some((k, i));
                    break 'outer;
                }
            }
        }
        let name = "reduction modulo phi commutes with the boundary";
        let cases = 3 * fw.degrees().count();
        out.push(match bad {
            None => Check::pass(name, cases),
            Some((k, i)) => Check::fail(name, cases, Some(format!("Omega{k}")), Some(i), "matrices differ".into()),
        });
        Ok(out)
    }
}

/// Per-degree comparison of brute-force and predicted dims.
pub fn compare(name: &str, brute: &GradedDims, predicted: &GradedDims) -> Check {
    let cases = brute.dims.len();
    match brute.first_mismatch(predicted) {
        None => Check::pass(name, cases),
        Some(i) => Check::fail(
            name,
            cases,
            Some(brute.space.clone()),
            Some(i),
            format!("brute force {} but predicted {}", brute.get(i), predicted.get(i)),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::default_window;
    use crate::milnor::check_isolated;
    use crate::poly::{poly, WeightSystem};

    #[test]
    fn xyz_second_part_fails_with_summed_witness() {
        let p = PoissonStructure::new(poly("x*y*z"), WeightSystem::standard()).unwrap();
        let defects = koszul_defects(&p, default_window(&p)).unwrap();
        assert!(defects.iter().all(|x| x.part == "second"));
        let first = &defects[0];
        assert_eq!(first.degree, 0);
        assert_eq!(first.witness, VecPoly::new(poly("x"), poly("y"), poly("-2*z")));
        assert!(dot(&first.witness, p.nabla_phi()).is_zero());
    }

    #[test]
    fn suites_pass_on_cubic() {
        let w = WeightSystem::standard();
        let phi = poly("x^3+y^3+z^3");
        let p = PoissonStructure::new(phi.clone(), w).unwrap();
        let m = check_isolated(&phi, &w).unwrap();
        let v = Verifier::new(&p, Some(&m), default_window(&p), 7);
        for suite in Suite::ALL {
            let r = v.run(suite).unwrap();
            assert!(r.passed, "{suite}: {:?}", r.first_failure());
        }
    }

    #[test]
    fn suite_names() {
        assert_eq!(parse_suites("all").unwrap().len(), 5);
        assert_eq!(parse_suites("koszul").unwrap(), vec![Suite::Koszul]);
        assert!(parse_suites("bogus").is_err());
    }
}
