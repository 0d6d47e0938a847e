//! Runs every property suite on one surface and prints a line per family.
//!
//! cargo run --release --example verify -- [seed]

use poisson_cohomology::cohomology::default_window;
use poisson_cohomology::milnor::check_isolated;
use poisson_cohomology::poly::poly;
use poisson_cohomology::verify::{koszul_defects, Suite, Verifier};
use poisson_cohomology::{PoissonStructure, WeightSystem};

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0);
    let w = WeightSystem::new(4, 3, 6).unwrap();
    let p = PoissonStructure::new(poly("x^3+y^4+z^2"), w).unwrap();
    let m = check_isolated(p.phi(), &w).unwrap();
    let v = Verifier::new(&p, Some(&m), default_window(&p), seed);
    for suite in Suite::ALL {
        let r = v.run(suite).unwrap();
        for c in &r.checks {
            println!("{:<11} {:<70} {:>4} {}", suite, c.name, c.cases, if c.passed { "pass" } else { "FAIL" });
        }
    }

    // Without an isolated singularity the Koszul complex stops being exact.
    let xyz = PoissonStructure::new(poly("x*y*z"), WeightSystem::standard()).unwrap();
    let d = &koszul_defects(&xyz, default_window(&xyz)).unwrap()[0];
    println!("xyz: {} part fails in {} degree {}, witness {}", d.part, d.space, d.degree, d.witness);
}
