//! The full analysis report in both formats.
//!
//! cargo run --release --example report

use poisson_cohomology::poly::poly;
use poisson_cohomology::report::{analyze, AnalyzeOptions};
use poisson_cohomology::{PoissonStructure, WeightSystem};

fn main() {
    let p = PoissonStructure::new(poly("x^2+y^2+z^2"), WeightSystem::standard()).unwrap();
    let report = analyze(&p, "x^2+y^2+z^2", AnalyzeOptions::default()).unwrap();
    print!("{}", report.to_text());
    let json = report.to_json();
    println!("JSON report: {} bytes, exit code {}", json.len(), report.exit_code());
}
