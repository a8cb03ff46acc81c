//! Seeded random rational inputs for property checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::actions::TensorSquareElement;
use crate::algebra::StructureTensor;
use crate::cohomology::CochainMap;
use crate::matrix::Matrix;
use crate::rational::{frac, Rational};

/// Small rationals `p/q` with `|p| <= 3`, `1 <= q <= 3`, zero about a third
/// of the time so that sparse inputs show up too.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn rational(&mut self) -> Rational {
        if self.rng.gen_ratio(1, 3) {
            return frac(0, 1);
        }
        let p = self.rng.gen_range(-3..=3);
        let q = self.rng.gen_range(1..=3);
        frac(p, q)
    }

    pub fn dim(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.gen_range(lo..=hi)
    }

    pub fn vector(&mut self, n: usize) -> Vec<Rational> {
        (0..n).map(|_| self.rational()).collect()
    }

    pub fn matrix(&mut self, n: usize) -> Matrix {
        Matrix::from_fn(n, n, |_, _| self.rational())
    }

    pub fn tensor(&mut self, n: usize) -> StructureTensor {
        StructureTensor::from_flat(n, self.vector(n * n * n)).expect("valid dimension")
    }

    pub fn tensor_square(&mut self, n: usize) -> TensorSquareElement {
        TensorSquareElement::from_matrix(self.matrix(n))
    }

    pub fn cochain(&mut self, n: usize, arity: usize) -> CochainMap {
        let values = (0..n.pow(arity as u32)).map(|_| self.tensor_square(n)).collect();
        CochainMap::new(n, arity, values).expect("consistent sizes")
    }
}
