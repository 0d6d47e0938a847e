//! The bracket {f,g} = det(grad f, grad g, grad phi), its Jacobi identity and
//! the coboundary operators on a weighted surface.
//!
//! cargo run --example bracket

use poisson_cohomology::poly::poly;
use poisson_cohomology::vector::euler_field;
use poisson_cohomology::{PoissonStructure, WeightSystem};

fn main() {
    let w = WeightSystem::new(15, 10, 6).unwrap();
    let p = PoissonStructure::new(poly("x^2+y^3+z^5"), w).unwrap();
    println!("phi = {}, deg {}, N = {}", p.phi().display_with(&w), p.degree(), p.n_w());
    let (x, y, z) = (poly("x"), poly("y"), poly("z"));
    println!("{{x,y}} = {}", p.bracket(&x, &y).display_with(&w));
    println!("{{y,z}} = {}", p.bracket(&y, &z).display_with(&w));
    println!("{{z,x}} = {}", p.bracket(&z, &x).display_with(&w));

    let (f, g, h) = (poly("x*y"), poly("y^2+z^3"), poly("x*z"));
    println!("{{f,g}} = {}", p.bracket(&f, &g).display_with(&w));
    println!("Jacobiator vanishes: {}", p.jacobiator(&f, &g, &h).is_zero());
    println!("phi is a Casimir: {}", p.bracket(p.phi(), &f).is_zero());

    let e = euler_field(&w);
    println!("delta^0(f) = {}", p.delta0(&f).display_with(&w));
    println!("delta^1(e_w) = {}  (a multiple of grad phi)", p.delta1(&e).display_with(&w));
    println!("delta^2 delta^1(e_w) = {}", p.delta2(&p.delta1(&e)));
}
