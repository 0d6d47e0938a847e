//! Ambient Poisson cohomology: closed-form generators against brute-force
//! ranks, degree by degree.
//!
//! cargo run --release --example cohomology

use poisson_cohomology::cohomology::{brute_force_all, closed_form_h, default_window, predicted_dims};
use poisson_cohomology::milnor::check_isolated;
use poisson_cohomology::poly::poly;
use poisson_cohomology::{PoissonStructure, WeightSystem};

fn main() {
    let w = WeightSystem::standard();
    let p = PoissonStructure::new(poly("x^3+y^3+z^3"), w).unwrap();
    let m = check_isolated(p.phi(), &w).unwrap();
    let win = default_window(&p);
    let brute = brute_force_all(&p, win).unwrap();
    for (k, b) in brute.iter().enumerate() {
        let desc = closed_form_h(&p, &m, k);
        let pred = predicted_dims(&desc, win);
        println!("{}: {:?}  matches closed form: {}", b.space, b.pairs(), b.first_mismatch(&pred).is_none());
        for g in &desc.generators {
            println!("    {} = {} in degree {}", g.label, g.representative.display_with(&w), g.degree);
        }
    }
}
