//! Poisson homology: the boundary on forms, its comparison with the direct
//! formula and with the coboundary, and homology of A and of A/<phi>.
//!
//! cargo run --release --example homology

use poisson_cohomology::cohomology::default_window;
use poisson_cohomology::homology::{
    brylinski_boundary, duality_identity_holds, form_window, homology_dims_all, surface_homology_all,
};
use poisson_cohomology::poly::poly;
use poisson_cohomology::vector::grad;
use poisson_cohomology::{Cochain, PoissonStructure, WeightSystem};

fn main() {
    let w = WeightSystem::standard();
    let p = PoissonStructure::new(poly("x^3+y^3+z^3"), w).unwrap();
    // x dy as a 1-form; its boundary is {x, y}.
    let form = Cochain::Vector(grad(&poly("y")).times(&poly("x")));
    println!("boundary of x dy = {}", p.boundary(1, &form).unwrap());
    println!("direct formula   = {}", brylinski_boundary(&p, 1, &form));

    let fw = form_window(&p, default_window(&p));
    let dual = fw.degrees().all(|i| (1..4).all(|k| duality_identity_holds(&p, k, i).unwrap()));
    println!("boundary matrices equal (-1)^k delta^(3-k) on [{}, {}]: {dual}", fw.min, fw.max);
    for g in homology_dims_all(&p, fw).unwrap() {
        println!("{}: total {}", g.space, g.total());
    }
    for g in surface_homology_all(&p, fw).unwrap() {
        println!("{}: {:?}", g.space, g.pairs());
    }
}
