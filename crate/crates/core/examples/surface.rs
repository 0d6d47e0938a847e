//! Poisson cohomology of the surface A/<phi> for a weighted case with
//! deg phi = |w|, where H^1 and H^2 are one dimensional.
//!
//! cargo run --release --example surface

use poisson_cohomology::cohomology::{default_window, surface_brute_force_all, surface_closed_form_h};
use poisson_cohomology::milnor::check_isolated;
use poisson_cohomology::poly::poly;
use poisson_cohomology::{PoissonStructure, WeightSystem};

fn main() {
    let w = WeightSystem::new(3, 2, 1).unwrap();
    let p = PoissonStructure::new(poly("x^2+y^3+z^6"), w).unwrap();
    let m = check_isolated(p.phi(), &w).unwrap();
    let win = default_window(&p);
    for (k, b) in surface_brute_force_all(&p, win).unwrap().iter().enumerate() {
        let desc = surface_closed_form_h(&p, &m, k);
        let labels: Vec<String> = desc.generators.iter().map(|g| format!("{} ({})", g.label, g.degree)).collect();
        println!("{}: total {} support {:?} generators [{}]", b.space, b.total(), b.support(), labels.join(", "));
    }
}
