//! Vector calculus on `A^3`: gradient, curl, divergence, dot and cross products.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::poly::{rat, Poly, Rational, WeightSystem};

/// An ordered triple of polynomials. Whether it stands for a vector field,
/// a bivector field or a differential form is decided by the caller.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct VecPoly(pub [Poly; 3]);

impl VecPoly {
    pub fn new(a: Poly, b: Poly, c: Poly) -> Self {
        VecPoly([a, b, c])
    }

    pub fn zero() -> Self {
        VecPoly::default()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Poly::is_zero)
    }

    pub fn component(&self, j: usize) -> &Poly {
        &self.0[j]
    }

    /// `e_j` scaled by `p`.
    pub fn unit(j: usize, p: Poly) -> Self {
        let mut v = VecPoly::zero();
        v.0[j] = p;
        v
    }

    pub fn scale(&self, c: &Rational) -> VecPoly {
        VecPoly(self.0.clone().map(|p| p.scale(c)))
    }

    /// Componentwise product with a polynomial.
    pub fn times(&self, f: &Poly) -> VecPoly {
        VecPoly([&self.0[0] * f, &self.0[1] * f, &self.0[2] * f])
    }

    pub fn display_with<'a>(&'a self, w: &'a WeightSystem) -> impl fmt::Display + 'a {
        VecDisplay { v: self, w: *w }
    }
}

struct VecDisplay<'a> {
    v: &'a VecPoly,
    w: WeightSystem,
}

impl fmt::Display for VecDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.v.0;
        write!(
            f,
            "({}, {}, {})",
            a.display_with(&self.w),
            b.display_with(&self.w),
            c.display_with(&self.w)
        )
    }
}

impl fmt::Display for VecPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&WeightSystem::standard()))
    }
}

impl Serialize for VecPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeTuple;
        let mut t = s.serialize_tuple(3)?;
        for p in &self.0 {
            t.serialize_element(p)?;
        }
        t.end()
    }
}

impl<'a> Add<&'a VecPoly> for &'a VecPoly {
    type Output = VecPoly;

    fn add(self, rhs: &VecPoly) -> VecPoly {
        VecPoly([&self.0[0] + &rhs.0[0], &self.0[1] + &rhs.0[1], &self.0[2] + &rhs.0[2]])
    }
}

impl Add for VecPoly {
    type Output = VecPoly;

    fn add(self, rhs: VecPoly) -> VecPoly {
        &self + &rhs
    }
}

impl<'a> Sub<&'a VecPoly> for &'a VecPoly {
    type Output = VecPoly;

    fn sub(self, rhs: &VecPoly) -> VecPoly {
        VecPoly([&self.0[0] - &rhs.0[0], &self.0[1] - &rhs.0[1], &self.0[2] - &rhs.0[2]])
    }
}

impl Sub for VecPoly {
    type Output = VecPoly;

    fn sub(self, rhs: VecPoly) -> VecPoly {
        &self - &rhs
    }
}

impl Neg for &VecPoly {
    type Output = VecPoly;

    fn neg(self) -> VecPoly {
        VecPoly([-&self.0[0], -&self.0[1], -&self.0[2]])
    }
}

impl Neg for VecPoly {
    type Output = VecPoly;

    fn neg(self) -> VecPoly {
        -&self
    }
}

impl<'a> Mul<&'a VecPoly> for &'a Poly {
    type Output = VecPoly;

    fn mul(self, rhs: &VecPoly) -> VecPoly {
        rhs.times(self)
    }
}

pub fn grad(f: &Poly) -> VecPoly {
    VecPoly([f.derivative(0), f.derivative(1), f.derivative(2)])
}

pub fn curl(v: &VecPoly) -> VecPoly {
    let [a, b, c] = &v.0;
    VecPoly([
        &c.derivative(1) - &b.derivative(2),
        &a.derivative(2) - &c.derivative(0),
        &b.derivative(0) - &a.derivative(1),
    ])
}

pub fn div(v: &VecPoly) -> Poly {
    let mut out = v.0[0].derivative(0);
    out += &v.0[1].derivative(1);
    out += &v.0[2].derivative(2);
    out
}

pub fn dot(u: &VecPoly, v: &VecPoly) -> Poly {
    let mut out = &u.0[0] * &v.0[0];
    out += &(&u.0[1] * &v.0[1]);
    out += &(&u.0[2] * &v.0[2]);
    out
}

pub fn cross(u: &VecPoly, v: &VecPoly) -> VecPoly {
    let [a1, a2, a3] = &u.0;
    let [b1, b2, b3] = &v.0;
    VecPoly([
        &(a2 * b3) - &(a3 * b2),
        &(a3 * b1) - &(a1 * b3),
        &(a1 * b2) - &(a2 * b1),
    ])
}

/// The weighted Euler field `(w1 x, w2 y, w3 z)`.
pub fn euler_field(w: &WeightSystem) -> VecPoly {
    VecPoly(std::array::from_fn(|j| Poly::var(j).scale(&rat(w.weight(j)))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::poly;

    #[test]
    fn gradient_of_quadric() {
        assert_eq!(
            grad(&poly("x^2+y^2+z^2")),
            VecPoly::new(poly("2*x"), poly("2*y"), poly("2*z"))
        );
    }

    #[test]
    fn euler_fields() {
        for (w, sum) in [((1, 1, 1), 3), ((3, 2, 1), 6), ((15, 10, 6), 31)] {
            let w = WeightSystem::new(w.0, w.1, w.2).unwrap();
            let e = euler_field(&w);
            assert_eq!(div(&e), Poly::constant(rat(sum)));
            for j in 0..3 {
                assert_eq!(
                    e.component(j).weighted_degree(&w).unwrap().finite(),
                    Some(w.weight(j))
                );
            }
        }
        assert_eq!(
            euler_field(&WeightSystem::standard()),
            VecPoly::new(poly("x"), poly("y"), poly("z"))
        );
    }

    #[test]
    fn cross_is_right_handed() {
        let ex = VecPoly::unit(0, Poly::one());
        let ey = VecPoly::unit(1, Poly::one());
        assert_eq!(cross(&ex, &ey), VecPoly::unit(2, Poly::one()));
    }

    #[test]
    fn curl_grad_and_div_curl_vanish() {
        let f = poly("x^3*y - 2*y*z^2 + x*z");
        assert!(curl(&grad(&f)).is_zero());
        let v = VecPoly::new(poly("x*y"), poly("z^2*x"), poly("y^3"));
        assert!(div(&curl(&v)).is_zero());
    }
}
