//! Recover every r whose coboundary is a given dual bracket, for a whole
//! parametrized family at once.

use leibniz_bialgebra::corpus;
use leibniz_bialgebra::rational::{format_rational, int};
use leibniz_bialgebra::rmatrix::{coboundary_cocommutator, solve_r, solve_r_family, CoboundaryCase, RSolution};

fn main() {
    let alg = corpus::example1();
    let fam = corpus::stated_duals(1).remove(0).family;

    match solve_r_family(&alg, &fam, CoboundaryCase::Left4).unwrap() {
        RSolution::Family(rs) => {
            println!("parameters: {}", rs.params().join(", "));
            println!("particular r = {}", rs.particular().0.inline());
            for (k, dual) in rs.kernel() {
                let dual: Vec<String> = dual.iter().map(format_rational).collect();
                println!("direction {}  (dual part [{}])", k.inline(), dual.join(", "));
            }
            let (r, dual) = rs.member(&[int(2), int(1), int(-1)]);
            assert_eq!(coboundary_cocommutator(&alg, &r, CoboundaryCase::Left4).unwrap(), fam.at(&dual));
        }
        RSolution::Infeasible => println!("no r-matrix"),
    }

    // the second family has no coboundary form
    let ft = corpus::stated_duals(1).remove(1).family.at(&[int(1)]);
    for case in [CoboundaryCase::Left1, CoboundaryCase::Left4] {
        let feasible = !solve_r(&alg, &ft, case).unwrap().is_infeasible();
        println!("family 2 under {case}: {}", if feasible { "solvable" } else { "infeasible" });
    }
}
