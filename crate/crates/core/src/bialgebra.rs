//! Dual brackets compatible with a given Leibniz algebra.
//!
//! A dual bracket `ft` on `G*` is tested in two stages: a linear 1-cocycle
//! condition (one of four forms, picked by the scenario) and the quadratic
//! Leibniz identity of `ft` itself. The linear stage is solved exactly; the
//! quadratic stage is returned as polynomials in the kernel parameters.

use num::Zero;

use crate::algebra::{ensure_same_dim, leibniz_bilinear, leibniz_residual, LeibnizAlgebra, Side, StructureTensor};
use crate::array::{one_based, Array};
use crate::cohomology::{cocycle_residual_tensor, CocycleForm, CocycleScenario};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::poly::Polynomial;
use crate::rational::{one, Rational};

/// The 1-cocycle condition as `n^4` linear equations in the `n^3` unknowns
/// `ft^{mn}_k`, columns in `(m, n, k)` row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystem {
    pub dim: usize,
    pub scenario: Option<CocycleScenario>,
    pub form: CocycleForm,
    pub matrix: Matrix,
    /// 0-based `(i, j, m, n)` residual component of each row.
    pub provenance: Vec<[usize; 4]>,
}

impl LinearSystem {
    pub fn column(dim: usize, m: usize, n: usize, k: usize) -> usize {
        (m * dim + n) * dim + k
    }

    /// The residual vector for a candidate dual bracket.
    pub fn apply(&self, ft: &StructureTensor) -> Vec<Rational> {
        self.matrix.apply(ft.flat())
    }

    pub fn annihilates(&self, ft: &StructureTensor) -> bool {
        self.apply(ft).iter().all(Zero::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }
}

/// Builds the linear system of a cocycle form directly from the primal
/// structure constants.
pub fn cocycle_system(f: &StructureTensor, form: CocycleForm) -> LinearSystem {
    let n = f.dim();
    let col = |m, nn, k| LinearSystem::column(n, m, nn, k);
    let mut matrix = Matrix::zeros(n.pow(4), n.pow(3));
    let mut provenance = Vec::with_capacity(n.pow(4));
    let mut row = 0;
    for i in 0..n {
        for j in 0..n {
            for m in 0..n {
                for nn in 0..n {
                    for k in 0..n {
                        matrix[(row, col(m, nn, k))] += f.get(i, j, k);
                    }
                    for q in 0..n {
                        let terms = match form {
                            CocycleForm::Form1 => [(col(q, nn, j), f.get(i, q, m)), (col(q, nn, i), f.get(q, j, m))],
                            CocycleForm::Form2 => [(col(m, q, i), f.get(q, j, nn)), (col(q, nn, i), f.get(q, j, m))],
                            CocycleForm::Form3 => [(col(m, q, j), f.get(i, q, nn)), (col(q, nn, j), f.get(i, q, m))],
                            CocycleForm::Form4 => [(col(m, q, j), f.get(i, q, nn)), (col(m, q, i), f.get(q, j, nn))],
                        };
                        for (c, v) in terms {
                            matrix[(row, c)] -= v;
                        }
                    }
                    provenance.push([i, j, m, nn]);
                    row += 1;
                }
            }
        }
    }
    LinearSystem {
        dim: n,
        scenario: None,
        form,
        matrix,
        provenance,
    }
}

pub fn assemble_cocycle_system(alg: &LeibnizAlgebra, scenario: CocycleScenario) -> Result<LinearSystem> {
    scenario.check(alg)?;
    let mut sys = cocycle_system(alg.tensor(), scenario.form());
    sys.scenario = Some(scenario);
    Ok(sys)
}

/// `offset + sum t_a basis_a` over named parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualFamily {
    dim: usize,
    params: Vec<String>,
    basis: Vec<StructureTensor>,
    offset: StructureTensor,
}

impl DualFamily {
    pub fn new(dim: usize, params: Vec<String>, basis: Vec<StructureTensor>) -> Result<Self> {
        Self::affine(StructureTensor::zero(dim)?, params, basis)
    }

    pub fn affine(offset: StructureTensor, params: Vec<String>, basis: Vec<StructureTensor>) -> Result<Self> {
        if params.len() != basis.len() {
            return Err(Error::InvalidArgument(format!(
                "{} parameter names for {} basis tensors",
                params.len(),
                basis.len()
            )));
        }
        for b in &basis {
            ensure_same_dim(offset.dim(), b.dim())?;
        }
        Ok(DualFamily {
            dim: offset.dim(),
            params,
            basis,
            offset,
        })
    }

    /// Samples an affine map `params -> tensor` at the origin and unit vectors.
    pub fn from_fn(dim: usize, params: &[&str], build: impl Fn(&[Rational]) -> StructureTensor) -> Self {
        let origin = vec![Rational::zero(); params.len()];
        let offset = build(&origin);
        let basis = (0..params.len())
            .map(|a| {
                let mut e = origin.clone();
                e[a] = one();
                build(&e).add(&offset.scale(&-one())).expect("same dimension")
            })
            .collect();
        assert_eq!(offset.dim(), dim);
        DualFamily {
            dim,
            params: params.iter().map(|s| s.to_string()).collect(),
            basis,
            offset,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn basis(&self) -> &[StructureTensor] {
        &self.basis
    }

    pub fn offset(&self) -> &StructureTensor {
        &self.offset
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn at(&self, assignment: &[Rational]) -> StructureTensor {
        assert_eq!(assignment.len(), self.basis.len(), "one value per parameter");
        let mut acc = self.offset.clone();
        for (b, t) in self.basis.iter().zip(assignment) {
            if !t.is_zero() {
                acc = acc.add(&b.scale(t)).expect("same dimension");
            }
        }
        acc
    }

    /// Substitutes a value for one parameter.
    pub fn fix(&self, name: &str, value: &Rational) -> Result<DualFamily> {
        let a = self
            .params
            .iter()
            .position(|p| p == name)
            .ok_or_else(|| Error::InvalidArgument(format!("no parameter named `{name}`")))?;
        let mut out = self.clone();
        let b = out.basis.remove(a);
        out.params.remove(a);
        out.offset = out.offset.add(&b.scale(value))?;
        Ok(out)
    }

    /// Parameter values producing `ft`, if it is a member.
    pub fn membership(&self, ft: &StructureTensor) -> Option<Vec<Rational>> {
        if ft.dim() != self.dim {
            return None;
        }
        let n3 = self.dim.pow(3);
        let cols = self.basis.len();
        let a = Matrix::from_fn(n3, cols, |r, c| self.basis[c].flat()[r].clone());
        let rhs: Vec<Rational> = ft.flat().iter().zip(self.offset.flat()).map(|(x, o)| x - o).collect();
        a.solve_affine(&rhs).map(|(p, _)| p)
    }

    pub fn contains(&self, ft: &StructureTensor) -> bool {
        self.membership(ft).is_some()
    }

    /// Every member is a member of `other` (the generic member, not a sample).
    pub fn is_subfamily_of(&self, other: &DualFamily) -> bool {
        if !other.contains(&self.offset) {
            return false;
        }
        let outer: Vec<Vec<Rational>> = other.basis.iter().map(|b| b.flat().to_vec()).collect();
        let inner: Vec<Vec<Rational>> = self.basis.iter().map(|b| b.flat().to_vec()).collect();
        crate::matrix::span_contains(&outer, &inner)
    }

    /// True when the system vanishes on the generic member.
    pub fn satisfies(&self, sys: &LinearSystem) -> bool {
        sys.annihilates(&self.offset) && self.basis.iter().all(|b| sys.annihilates(b))
    }

    fn generators(&self) -> Vec<&StructureTensor> {
        std::iter::once(&self.offset).chain(&self.basis).collect()
    }
}

/// Kernel of the system as a family with parameters `t1..td`, one per free
/// column in ascending order.
pub fn nullspace(sys: &LinearSystem) -> DualFamily {
    let n = sys.dim;
    let basis: Vec<StructureTensor> = sys
        .matrix
        .nullspace()
        .into_iter()
        .map(|v| StructureTensor::from_flat(n, v).expect("kernel vector has n^3 entries"))
        .collect();
    let params = (1..=basis.len()).map(|i| format!("t{i}")).collect();
    DualFamily {
        dim: n,
        params,
        basis,
        offset: StructureTensor::zero(n).expect("dimension already validated"),
    }
}

/// Leibniz residual of a family member as polynomials in the parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticResidual {
    pub side: Side,
    pub dim: usize,
    pub params: Vec<String>,
    /// Nonzero polynomials with the 1-based `(i, j, k, m)` component they
    /// belong to, in row-major component order.
    pub polynomials: Vec<(Vec<usize>, Polynomial)>,
}

impl QuadraticResidual {
    pub fn vanishes_identically(&self) -> bool {
        self.polynomials.is_empty()
    }

    /// The residual array at a parameter assignment.
    pub fn eval(&self, assignment: &[Rational]) -> Array {
        let mut out = Array::cube(self.dim, 4);
        for (idx, p) in &self.polynomials {
            let zero_based: Vec<usize> = idx.iter().map(|i| i - 1).collect();
            out[zero_based.as_slice()] = p.eval(assignment);
        }
        out
    }

    pub fn render(&self) -> Vec<String> {
        self.polynomials
            .iter()
            .map(|(idx, p)| format!("R{idx:?} = {}", p.render(&self.params)))
            .collect()
    }
}

/// Expands `R(offset + sum t_a B_a)` bilinearly.
pub fn dual_leibniz_residual(fam: &DualFamily, side: Side) -> QuadraticResidual {
    let n = fam.dim;
    let vars = fam.len();
    let gens = fam.generators();
    let mut polys = vec![Polynomial::zero(vars); n.pow(4)];
    for (a, ga) in gens.iter().enumerate() {
        for (b, gb) in gens.iter().enumerate() {
            let bil = leibniz_bilinear(ga, gb, side);
            if bil.is_zero() {
                continue;
            }
            // generator 0 is the offset, whose coefficient is the constant 1
            let mut exponent = vec![0u32; vars];
            if a > 0 {
                exponent[a - 1] += 1;
            }
            if b > 0 {
                exponent[b - 1] += 1;
            }
            for (off, c) in bil.data().iter().enumerate() {
                if !c.is_zero() {
                    polys[off].add_term(exponent.clone(), c.clone());
                }
            }
        }
    }
    let shape = Array::cube(n, 4);
    let polynomials = polys
        .into_iter()
        .enumerate()
        .filter(|(_, p)| !p.is_zero())
        .map(|(off, p)| (one_based(&shape.unravel(off)), p))
        .collect();
    QuadraticResidual {
        side,
        dim: n,
        params: fam.params.clone(),
        polynomials,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WitnessKind {
    Cocycle,
    DualLeibniz,
}

impl WitnessKind {
    pub fn name(self) -> &'static str {
        match self {
            WitnessKind::Cocycle => "cocycle",
            WitnessKind::DualLeibniz => "dual-leibniz",
        }
    }
}

/// First nonzero residual component, 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub kind: WitnessKind,
    pub index: Vec<usize>,
    pub value: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BialgebraVerdict {
    pub scenario: CocycleScenario,
    pub cocycle_ok: bool,
    pub dual_leibniz_ok: bool,
    pub witness: Option<Witness>,
}

impl BialgebraVerdict {
    pub fn holds(&self) -> bool {
        self.cocycle_ok && self.dual_leibniz_ok
    }
}

pub fn verify_bialgebra(alg: &LeibnizAlgebra, scenario: CocycleScenario, ft: &StructureTensor) -> Result<BialgebraVerdict> {
    scenario.check(alg)?;
    let cocycle = cocycle_residual_tensor(alg.tensor(), ft, scenario.form())?;
    let dual = leibniz_residual(ft, scenario.dual_side());
    let witness = cocycle
        .first_nonzero()
        .map(|(index, value)| Witness {
            kind: WitnessKind::Cocycle,
            index,
            value,
        })
        .or_else(|| {
            dual.first_nonzero().map(|(index, value)| Witness {
                kind: WitnessKind::DualLeibniz,
                index,
                value,
            })
        });
    Ok(BialgebraVerdict {
        scenario,
        cocycle_ok: cocycle.is_zero(),
        dual_leibniz_ok: dual.is_zero(),
        witness,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepEntry {
    pub scenario: CocycleScenario,
    pub rank: usize,
    pub family: DualFamily,
    pub quadratic: QuadraticResidual,
}

impl SweepEntry {
    /// The whole family, generically, solves this scenario.
    pub fn admits_family(&self, fam: &DualFamily) -> bool {
        fam.is_subfamily_of(&self.family) && dual_leibniz_residual(fam, self.scenario.dual_side()).vanishes_identically()
    }
}

/// Solves every scenario the algebra admits, in the fixed scenario order.
pub fn scenario_sweep(alg: &LeibnizAlgebra) -> Vec<SweepEntry> {
    CocycleScenario::ALL
        .into_iter()
        .filter(|s| s.admits(alg))
        .map(|scenario| {
            let sys = assemble_cocycle_system(alg, scenario).expect("scenario admitted");
            let family = nullspace(&sys);
            let quadratic = dual_leibniz_residual(&family, scenario.dual_side());
            SweepEntry {
                scenario,
                rank: sys.rank(),
                family,
                quadratic,
            }
        })
        .collect()
}

/// Scenarios under which a whole family is a valid dual, in sweep order.
pub fn admitting_scenarios(sweep: &[SweepEntry], fam: &DualFamily) -> Vec<CocycleScenario> {
    sweep.iter().filter(|e| e.admits_family(fam)).map(|e| e.scenario).collect()
}
