//! Adjoint and coadjoint matrices of a three dimensional right Leibniz algebra.

use leibniz_bialgebra::adjoint::{adjoint_set, coadjoint_set};
use leibniz_bialgebra::corpus;

fn main() {
    let alg = corpus::example4();
    println!("{} ({}, dim {})", alg.name(), alg.chirality(), alg.dim());
    println!("{}", alg.tensor().describe());

    let adj = adjoint_set(alg.tensor());
    let co = coadjoint_set(&adj);
    for i in 0..alg.dim() {
        let k = i + 1;
        println!("chi_{k}  = {}", adj.chi[i].inline());
        println!("chi'_{k} = {}", adj.chi_prime[i].inline());
        println!("Y^{k}    = {}", adj.y[i].inline());
        println!("ad*r_{k} = {}", co.ad_star_right[i].inline());
    }

    // the matrices determine the tensor
    assert_eq!(&adj.tensor_from_y().unwrap(), alg.tensor());
}
