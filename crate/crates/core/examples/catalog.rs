//! Gate and every brute-force computation over the default window for the
//! standard list of surfaces, with totals and timings.
//!
//! cargo run --release --example catalog

use std::time::Instant;

use poisson_cohomology::cohomology::{brute_force_all, default_window, surface_brute_force_all, GradedDims};
use poisson_cohomology::homology::{form_window, homology_dims_all, surface_homology_all};
use poisson_cohomology::milnor::check_isolated;
use poisson_cohomology::{Poly, PoissonStructure, WeightSystem};

fn totals(v: Vec<GradedDims>) -> Vec<usize> {
    v.iter().map(|g| g.total()).collect()
}

fn main() {
    let catalog = [
        ("x^2+y^2+z^2", "1,1,1"),
        ("x^3+y^3+z^3", "1,1,1"),
        ("x^4+y^4+z^4", "1,1,1"),
        ("x^2+y^3+z^5", "15,10,6"),
        ("x^3+y^4+z^2", "4,3,6"),
        ("x^2+y^3+z^6", "3,2,1"),
    ];
    for (phi, w) in catalog {
        let phi: Poly = phi.parse().unwrap();
        let w: WeightSystem = w.parse().unwrap();
        let start = Instant::now();
        let m = check_isolated(&phi, &w).unwrap();
        let p = PoissonStructure::new(phi, w).unwrap();
        let win = default_window(&p);
        let fw = form_window(&p, win);
        let h = totals(brute_force_all(&p, win).unwrap());
        let s = totals(surface_brute_force_all(&p, win).unwrap());
        let hh = totals(homology_dims_all(&p, fw).unwrap());
        let sh = totals(surface_homology_all(&p, fw).unwrap());
        println!(
            "{} w=({w}) mu={} window=[{},{}]",
            p.phi().display_with(&w),
            m.mu(),
            win.min,
            win.max
        );
        println!("  H^*(A)={h:?} H^*(A_phi)={s:?} H_*(A)={hh:?} H_*(A_phi)={sh:?} in {:.2?}", start.elapsed());
    }
}
