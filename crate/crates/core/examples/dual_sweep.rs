//! Solve the cocycle condition for every admitted scenario and see which
//! stated dual brackets of the bundled corpus each scenario accepts.

use leibniz_bialgebra::bialgebra::{admitting_scenarios, scenario_sweep};
use leibniz_bialgebra::corpus;

fn main() {
    let alg = corpus::example1();
    let sweep = scenario_sweep(&alg);
    for entry in &sweep {
        println!(
            "{:7} rank {:2}, {} free parameters, dual Leibniz residual has {} nonzero components",
            entry.scenario.label(),
            entry.rank,
            entry.family.len(),
            entry.quadratic.polynomials.len()
        );
    }

    for d in corpus::stated_duals(1) {
        let labels: Vec<_> = admitting_scenarios(&sweep, &d.family).iter().map(|s| s.label()).collect();
        println!("dual {} ({}): {}", d.number, d.stated, labels.join(", "));
    }

    // the quadratic conditions on one scenario, as polynomials in t1..
    if let Some(first) = sweep.first() {
        for line in first.quadratic.render().iter().take(4) {
            println!("  {line}");
        }
    }
}
