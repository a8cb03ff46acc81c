//! The four tensor-square module structures and the low-degree coboundary maps.

use leibniz_bialgebra::actions::{module_axiom_residuals, module_axiom_residuals_for_side, ActionCase};
use leibniz_bialgebra::cohomology::{gamma0, gamma1, gamma2};
use leibniz_bialgebra::sampling::Sampler;
use leibniz_bialgebra::{corpus, Side};

fn main() {
    let alg = corpus::example3();
    let mut s = Sampler::new(42);

    for case in ActionCase::ALL {
        let residuals = module_axiom_residuals(case, &alg).unwrap();
        let ok = residuals.iter().all(|r| r.holds());
        println!("case {}: module axioms on natural sides hold: {ok}", case.number());

        for &side in case.natural_sides() {
            let m = s.tensor_square(alg.dim());
            let d1 = gamma1(&alg, case, side, &gamma0(&alg, case, side, &m).unwrap()).unwrap();
            let w = s.cochain(alg.dim(), 1);
            let d2 = gamma2(&alg, case, side, &gamma1(&alg, case, side, &w).unwrap()).unwrap();
            println!("  {side:5} complex: d1 d0 = 0 {}, d2 d1 = 0 {}", d1.is_zero(), d2.is_zero());
        }
    }

    // off its natural side, case 2 is not a module
    for r in module_axiom_residuals_for_side(ActionCase::Case2, Side::Left, &alg).unwrap() {
        println!(
            "case 2 on the left, axiom {}: {}",
            r.axiom,
            if r.holds() { "holds" } else { "fails" }
        );
    }
}
