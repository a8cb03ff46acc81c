//! Build the full JSON report for a parsed algebra file and an r-matrix.

use leibniz_bialgebra::corpus;
use leibniz_bialgebra::format::{parse_algebra, parse_rmatrix};
use leibniz_bialgebra::report::{full_report, render, ReportInput};

fn main() {
    let doc = parse_algebra(corpus::EXAMPLE3).unwrap();
    let alg = doc.to_algebra().unwrap();
    let r = parse_rmatrix(corpus::EXAMPLE3_R1).unwrap().matrix();

    let input = ReportInput {
        algebra_text: corpus::EXAMPLE3,
        algebra: &alg,
        declared_side: doc.declared_side.name(),
        dual: None,
        r: Some((corpus::EXAMPLE3_R1, &r)),
        seed: 1,
    };
    let json = render(&full_report(&input).unwrap());
    print!("{json}");
}
