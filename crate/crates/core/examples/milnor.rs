//! The isolated singularity gate, the graded Milnor algebra and normal forms.
//!
//! cargo run --example milnor

use poisson_cohomology::milnor::check_isolated;
use poisson_cohomology::poly::poly;
use poisson_cohomology::WeightSystem;

fn main() {
    let w = WeightSystem::new(3, 2, 1).unwrap();
    let phi = poly("x^2+y^3+z^6");
    let m = check_isolated(&phi, &w).unwrap();
    println!("phi = {}, mu = {}, socle degree {}", phi.display_with(&w), m.mu(), m.socle_bound());
    println!("graded dims {:?}", m.graded_dims());
    for (j, (u, deg)) in m.basis_u().iter().enumerate() {
        println!("  u_{j} = {u} in degree {deg}");
    }
    let f = poly("3*y*z^4 + x*z^3 + z^6");
    println!("normal form of {} is {}", f.display_with(&w), m.normal_form(&f).unwrap().display_with(&w));

    for bad in ["x*y*z", "x^2+y^2"] {
        let err = check_isolated(&poly(bad), &WeightSystem::standard()).unwrap_err();
        println!("{bad}: {err}");
    }
}
