//! Classical and generalized Yang-Baxter checks, the Schouten bracket and
//! its triple-product decomposition.

use leibniz_bialgebra::corpus;
use leibniz_bialgebra::rmatrix::{cybe_check, gybe_check, gybe_identity_holds, schouten, triple_products};
use leibniz_bialgebra::{Matrix, Side};

fn main() {
    let alg = corpus::example3();
    let candidates = [
        ("antisymmetric", Matrix::from_ints(&[&[0, 1], &[-1, 0]])),
        ("e1 (x) e1", Matrix::from_ints(&[&[1, 0], &[0, 0]])),
    ];
    for (name, r) in &candidates {
        for side in Side::BOTH {
            let cybe = cybe_check(&alg, r, side).unwrap();
            let gybe = gybe_check(&alg, r, side).unwrap();
            println!("{name:14} {side:5}  CYBE {cybe:5}  GYBE {gybe:5}");
            let s = schouten(&alg, r, side).unwrap();
            if !s.is_zero() {
                println!("    [[r,r]] {}", s.describe_nonzero());
            }
            for t in triple_products(&alg, r, side).unwrap() {
                println!("    {:10} {}", t.which.label(), t.entries.describe_nonzero());
            }
            // the dual Leibniz residual of the r-bracket is the GYBE contraction
            assert!(gybe_identity_holds(&alg, r, side).unwrap());
        }
    }
}
