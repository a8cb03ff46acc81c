//! Define an algebra in the text format and classify it.

use leibniz_bialgebra::format::parse_algebra;
use leibniz_bialgebra::Side;

const TEXT: &str = "\
# left Leibniz, not right Leibniz
name: custom
dim: 3
side: auto
f 1 1 2 = 1
f 1 2 3 = -1/2
";

fn main() {
    let doc = parse_algebra(TEXT).unwrap();
    let alg = doc.to_algebra().unwrap();
    println!("{}: {} (declared {})", alg.name(), alg.chirality(), doc.declared_side.name());
    for side in Side::BOTH {
        let residual = leibniz_bialgebra::algebra::leibniz_residual(alg.tensor(), side);
        println!(
            "{side:5} Leibniz residual: {}",
            if residual.is_zero() {
                "zero".into()
            } else {
                residual.describe_nonzero()
            }
        );
    }
    print!("{}", doc.serialize());
}
