//! Sided modules over an [`Algebra`], given by one action matrix per
//! algebra basis element, and intertwining maps between them.
//!
//! Convention: a module element is a coordinate column vector, and the
//! action matrix is always applied on the left. For a left module
//! `act(ab) = act(a)·act(b)`; for a right module the composition reverses,
//! `act(ab) = act(b)·act(a)` (first b, then a, matching `v·(ab) = (v·a)·b`).

mod construct;
mod hom;
mod iso;

pub use construct::*;
pub use hom::*;
pub use iso::*;

use crate::algebra::Algebra;
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use std::sync::Arc;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Side::Left => write!(f, "left"),
            Side::Right => write!(f, "right"),
        }
    }
}

#[derive(Debug, Error)]
pub enum ModuleError {
    #[error("invalid module {name}: {violations:?}")]
    Invalid { name: String, violations: Vec<String> },
    #[error("operands live on different sides or over different algebras")]
    SideOrAlgebraMismatch,
    #[error("map matrix does not intertwine the actions")]
    NotIntertwining,
    #[error("vector lies outside the carrier (wrong length or field)")]
    BadVector,
}

/// A finite-dimensional one-sided module: one action matrix per algebra
/// basis element, all applied on the left of coordinate columns.
#[derive(Clone, Debug)]
pub struct Module {
    pub name: String,
    algebra: Arc<Algebra>,
    side: Side,
    dim: usize,
    actions: Vec<Matrix>,
}

impl Module {
    pub fn new(
        name: impl Into<String>,
        algebra: Arc<Algebra>,
        side: Side,
        actions: Vec<Matrix>,
    ) -> Result<Module, ModuleError> {
        let name = name.into();
        let dim = actions.first().map_or(0, Matrix::rows);
        let m = Module { name, algebra, side, dim, actions };
        let violations = m.validate();
        if violations.is_empty() {
            Ok(m)
        } else {
            Err(ModuleError::Invalid { name: m.name, violations })
        }
    }

    /// The zero module.
    pub fn zero(algebra: Arc<Algebra>, side: Side) -> Module {
        let n = algebra.dim();
        let f = algebra.field();
        Module {
            name: "0".into(),
            algebra,
            side,
            dim: 0,
            actions: vec![Matrix::zero(0, 0, f); n],
        }
    }

    pub fn validate(&self) -> Vec<String> {
        let mut out = Vec::new();
        let n = self.algebra.dim();
        if self.actions.len() != n {
            out.push(format!("expected {n} action matrices, got {}", self.actions.len()));
            return out;
        }
        for (i, a) in self.actions.iter().enumerate() {
            if a.rows() != self.dim || a.cols() != self.dim {
                out.push(format!("action matrix {i} is not {0}x{0}", self.dim));
                return out;
            }
            if a.field() != self.algebra.field() {
                out.push(format!("action matrix {i} is over the wrong field"));
                return out;
            }
        }
        if self.act(self.algebra.unit()) != Matrix::identity(self.dim, self.algebra.field()) {
            out.push("unit does not act as the identity".into());
        }
        for i in 0..n {
            for j in 0..n {
                let via_table = self.act(self.algebra.table_entry(i, j));
                let composed = match self.side {
                    Side::Left => self.actions[i].mul(&self.actions[j]),
                    Side::Right => self.actions[j].mul(&self.actions[i]),
                };
                if via_table != composed {
                    out.push(format!(
                        "action incompatible with the table at pair ({}, {})",
                        self.algebra.labels()[i],
                        self.algebra.labels()[j]
                    ));
                    return out;
                }
            }
        }
        out
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    pub fn action(&self, i: usize) -> &Matrix {
        &self.actions[i]
    }

    /// Action matrix of an arbitrary algebra element given by coordinates.
    pub fn act(&self, coords: &[Scalar]) -> Matrix {
        let mut out = Matrix::zero(self.dim, self.dim, self.algebra.field());
        for (i, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.actions[i].scale(c));
            }
        }
        out
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Module {
        self.name = name.into();
        self
    }

    pub fn same_ambient(&self, other: &Module) -> bool {
        self.side == other.side && Arc::ptr_eq(&self.algebra, &other.algebra)
    }

    /// The regular module: the algebra acting on itself from the given side.
    pub fn regular(algebra: Arc<Algebra>, side: Side) -> Module {
        let n = algebra.dim();
        let actions: Vec<Matrix> = (0..n)
            .map(|i| {
                let coords = algebra.basis_coords(i);
                match side {
                    Side::Left => algebra.left_mult_matrix(&coords),
                    Side::Right => algebra.right_mult_matrix(&coords),
                }
            })
            .collect();
        Module {
            name: format!("{}_{}", algebra.name, match side { Side::Left => "L", Side::Right => "R" }),
            algebra,
            side,
            dim: n,
            actions,
        }
    }

    /// The projective indecomposables `A·e_i` (left) or `e_i·A` (right),
    /// one per idempotent, as submodules of the regular module together
    /// with their inclusions.
    pub fn projective_indecomposables(
        algebra: &Arc<Algebra>,
        side: Side,
    ) -> Vec<(Module, ModuleMap)> {
        let reg = Module::regular(Arc::clone(algebra), side);
        algebra
            .idempotents()
            .iter()
            .enumerate()
            .map(|(i, e)| {
                // A·e is the image of right multiplication by e; e·A the
                // image of left multiplication.
                let img = match side {
                    Side::Left => algebra.right_mult_matrix(e),
                    Side::Right => algebra.left_mult_matrix(e),
                };
                let cols: Vec<Vec<Scalar>> =
                    (0..img.cols()).map(|c| img.column(c)).collect();
                let (sub, inc) = submodule_spanned(&reg, &cols)
                    .expect("idempotent image is a submodule");
                (sub.renamed(format!("P{}", i + 1)), inc)
            })
            .collect()
    }
}

/// A homomorphism of modules: `matrix` sends domain coordinates to
/// codomain coordinates and commutes with every action matrix.
#[derive(Clone, Debug)]
pub struct ModuleMap {
    pub domain: Module,
    pub codomain: Module,
    pub matrix: Matrix,
}

impl ModuleMap {
    pub fn new(domain: Module, codomain: Module, matrix: Matrix) -> Result<ModuleMap, ModuleError> {
        if !domain.same_ambient(&codomain) {
            return Err(ModuleError::SideOrAlgebraMismatch);
        }
        let f = ModuleMap { domain, codomain, matrix };
        if f.is_intertwining() {
            Ok(f)
        } else {
            Err(ModuleError::NotIntertwining)
        }
    }

    pub fn is_intertwining(&self) -> bool {
        if self.matrix.rows() != self.codomain.dim() || self.matrix.cols() != self.domain.dim() {
            return false;
        }
        (0..self.domain.algebra().dim()).all(|i| {
            self.matrix.mul(self.domain.action(i)) == self.codomain.action(i).mul(&self.matrix)
        })
    }

    pub fn identity(m: &Module) -> ModuleMap {
        ModuleMap {
            domain: m.clone(),
            codomain: m.clone(),
            matrix: Matrix::identity(m.dim(), m.algebra().field()),
        }
    }

    pub fn compose_after(&self, first: &ModuleMap) -> ModuleMap {
        assert_eq!(first.codomain.dim(), self.domain.dim(), "non-composable maps");
        ModuleMap {
            domain: first.domain.clone(),
            codomain: self.codomain.clone(),
            matrix: self.matrix.mul(&first.matrix),
        }
    }

    pub fn is_invertible(&self) -> bool {
        self.matrix.is_invertible()
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }
}

#[cfg(test)]
pub(crate) mod test_support {
    use super::*;
    use crate::scalar::Field;

    /// k[x]/(x^2) over the rationals.
    pub fn dual_numbers() -> Arc<Algebra> {
        let f = Field::Rational;
        let one = vec![f.one(), f.zero()];
        let x = vec![f.zero(), f.one()];
        let zero = vec![f.zero(), f.zero()];
        Algebra::new(
            "k[x]/(x2)",
            f,
            vec!["1".into(), "x".into()],
            vec![vec![one.clone(), x.clone()], vec![x.clone(), zero]],
            one.clone(),
            vec![one],
            None,
        )
        .checked()
        .unwrap()
    }

    /// The simple module over k[x]/(x^2).
    pub fn simple(a: &Arc<Algebra>) -> Module {
        let f = a.field();
        Module::new(
            "S",
            Arc::clone(a),
            Side::Left,
            vec![Matrix::identity(1, f), Matrix::zero(1, 1, f)],
        )
        .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::test_support::*;
    use super::*;
    use crate::scalar::Field;

    #[test]
    fn regular_module_valid() {
        let a = dual_numbers();
        let l = Module::regular(Arc::clone(&a), Side::Left);
        assert!(l.validate().is_empty());
        let r = Module::regular(Arc::clone(&a), Side::Right);
        assert!(r.validate().is_empty());
        assert_eq!(l.dim(), 2);
    }

    #[test]
    fn bad_action_rejected() {
        let a = dual_numbers();
        let f = a.field();
        // x acting as the identity is incompatible with x^2 = 0.
        let err = Module::new(
            "bad",
            Arc::clone(&a),
            Side::Left,
            vec![Matrix::identity(1, f), Matrix::identity(1, f)],
        );
        assert!(err.is_err());
    }

    #[test]
    fn local_algebra_single_projective() {
        let a = dual_numbers();
        let ps = Module::projective_indecomposables(&a, Side::Left);
        assert_eq!(ps.len(), 1);
        assert_eq!(ps[0].0.dim(), 2);
    }

    #[test]
    fn identity_map_intertwines() {
        let a = dual_numbers();
        let s = simple(&a);
        let id = ModuleMap::identity(&s);
        assert!(id.is_intertwining());
        assert!(id.is_invertible());
    }

    #[test]
    fn non_intertwining_rejected() {
        let a = dual_numbers();
        let s = simple(&a);
        let reg = Module::regular(Arc::clone(&a), Side::Left);
        let m = Matrix::from_i64(Field::Rational, &[&[1], &[0]]);
        // Sends the simple into the degree-0 slot: x kills the source but
        // not the target coordinate flow.
        assert!(ModuleMap::new(s, reg, m).is_err());
    }
}
