//! Finite-dimensional algebras given by a structure-constant table.
//!
//! An [`Algebra`] stores basis labels, the multiplication table
//! `table[i][j]` = coordinates of `b_i * b_j`, the unit, a list of
//! primitive orthogonal idempotents, and (optionally) a supplied radical
//! basis. Only split basic algebras are accepted: the semisimple quotient
//! must contribute exactly one dimension per idempotent.

use crate::matrix::Matrix;
use crate::scalar::{Field, Scalar};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("invalid algebra: {0:?}")]
    Invalid(Vec<String>),
    #[error("radical not computable: characteristic must be 0 or exceed the dimension; supply the radical explicitly")]
    SmallCharacteristic,
    #[error("trace-form kernel is not nilpotent; the input table is not an associative unital algebra of the supported kind")]
    NonNilpotentKernel,
}

#[derive(Clone, Debug)]
pub struct Algebra {
    pub name: String,
    field: Field,
    labels: Vec<String>,
    /// table[i][j] = coordinates of b_i * b_j.
    table: Vec<Vec<Vec<Scalar>>>,
    unit: Vec<Scalar>,
    idempotents: Vec<Vec<Scalar>>,
    supplied_radical: Option<Vec<Vec<Scalar>>>,
}

impl Algebra {
    /// Builds without validation; call [`Algebra::validate`] to get the
    /// violation report, or [`Algebra::checked`] to reject invalid input.
    pub fn new(
        name: impl Into<String>,
        field: Field,
        labels: Vec<String>,
        table: Vec<Vec<Vec<Scalar>>>,
        unit: Vec<Scalar>,
        idempotents: Vec<Vec<Scalar>>,
        supplied_radical: Option<Vec<Vec<Scalar>>>,
    ) -> Algebra {
        Algebra {
            name: name.into(),
            field,
            labels,
            table,
            unit,
            idempotents,
            supplied_radical,
        }
    }

    pub fn checked(self) -> Result<Arc<Algebra>, AlgebraError> {
        let report = self.validate();
        if report.is_empty() {
            Ok(Arc::new(self))
        } else {
            Err(AlgebraError::Invalid(report))
        }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn idempotents(&self) -> &[Vec<Scalar>] {
        &self.idempotents
    }

    pub fn basis_coords(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim()];
        v[i] = self.field.one();
        v
    }

    /// Product of two coordinate vectors via the table.
    pub fn mult(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![self.field.zero(); n];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let c = ai.mul(bj);
                for (k, t) in self.table[i][j].iter().enumerate() {
                    if !t.is_zero() {
                        out[k] = out[k].add(&c.mul(t));
                    }
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by `a` on the regular representation
    /// (column j = coordinates of a * b_j).
    pub fn left_mult_matrix(&self, a: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vec<Scalar>> = (0..n).map(|j| self.mult(a, &self.basis_coords(j))).collect();
        Matrix::from_columns(n, self.field, &cols)
    }

    /// Matrix of right multiplication by `a` (column j = b_j * a).
    pub fn right_mult_matrix(&self, a: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vec<Scalar>> = (0..n).map(|j| self.mult(&self.basis_coords(j), a)).collect();
        Matrix::from_columns(n, self.field, &cols)
    }

    /// All invariant violations, as human-readable diagnostics. Empty iff
    /// the table is a valid split basic algebra of the supported kind.
    pub fn validate(&self) -> Vec<String> {
        let mut report = Vec::new();
        let n = self.dim();
        {
            let mut seen = std::collections::HashSet::new();
            for l in &self.labels {
                if !seen.insert(l) {
                    report.push(format!("duplicate basis label {l:?}"));
                }
            }
        }
        if self.unit.len() != n {
            report.push("unit coordinate length mismatch".into());
            return report;
        }
        if self.table.len() != n
            || self.table.iter().any(|r| r.len() != n)
            || self.table.iter().flatten().any(|e| e.len() != n)
        {
            report.push("multiplication table shape mismatch".into());
            return report;
        }
        for e in self.table.iter().flatten().flatten().chain(self.unit.iter()) {
            if e.field() != self.field {
                report.push("table entry outside the declared field".into());
                return report;
            }
        }
        // Unit.
        for j in 0..n {
            let ej = self.basis_coords(j);
            if self.mult(&self.unit, &ej) != ej {
                report.push(format!("unit fails on the left at basis {}", self.labels[j]));
            }
            if self.mult(&ej, &self.unit) != ej {
                report.push(format!("unit fails on the right at basis {}", self.labels[j]));
            }
        }
        // Associativity on all basis triples.
        'outer: for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let ij_k = self.mult(&self.table[i][j], &self.basis_coords(k));
                    let i_jk = self.mult(&self.basis_coords(i), &self.table[j][k]);
                    if ij_k != i_jk {
                        report.push(format!(
                            "associativity fails at triple ({}, {}, {})",
                            self.labels[i], self.labels[j], self.labels[k]
                        ));
                        break 'outer;
                    }
                }
            }
        }
        // Idempotents: orthogonal, idempotent, summing to the unit.
        let r = self.idempotents.len();
        if r == 0 {
            report.push("no idempotents supplied".into());
        }
        for (a, ea) in self.idempotents.iter().enumerate() {
            if ea.len() != n {
                report.push(format!("idempotent {a} has wrong length"));
                return report;
            }
            if self.mult(ea, ea) != *ea {
                report.push(format!("element {a} in the idempotent list is not idempotent"));
            }
            for (b, eb) in self.idempotents.iter().enumerate() {
                if a != b && self.mult(ea, eb).iter().any(|s| !s.is_zero()) {
                    report.push(format!("idempotents {a} and {b} are not orthogonal"));
                }
            }
        }
        let mut sum = vec![self.field.zero(); n];
        for ea in &self.idempotents {
            for (k, s) in ea.iter().enumerate() {
                sum[k] = sum[k].add(s);
            }
        }
        if sum != self.unit {
            report.push("idempotents do not sum to the unit".into());
        }
        if !report.is_empty() {
            return report;
        }
        // Radical: nilpotent two-sided ideal with a split semisimple quotient.
        match self.radical_basis() {
            Ok(rad) => {
                let rad_dim = rad.cols();
                if let Some(supplied) = &self.supplied_radical {
                    if let Some(msg) = self.check_supplied_radical(supplied) {
                        report.push(msg);
                    }
                    let _ = rad_dim;
                }
                if n - rad.cols() != r {
                    report.push(format!(
                        "not split basic: dim A/rad = {} but {} idempotents",
                        n - rad.cols(),
                        r
                    ));
                }
            }
            Err(e) => report.push(e.to_string()),
        }
        report
    }

    fn char_ok(&self) -> bool {
        match self.field {
            Field::Rational => true,
            Field::Prime(p) => p as usize > self.dim(),
        }
    }

    /// Basis of the Jacobson radical, as matrix columns.
    ///
    /// A supplied radical is returned as given (after the checks run by
    /// `validate`). Otherwise the radical is the kernel of the trace form
    /// `T(a,b) = tr(left mult by ab)`, which is valid in characteristic 0
    /// or p > dim; the kernel's nilpotency is verified.
    pub fn radical_basis(&self) -> Result<Matrix, AlgebraError> {
        if let Some(supplied) = &self.supplied_radical {
            return Ok(Matrix::from_columns(self.dim(), self.field, supplied));
        }
        if !self.char_ok() {
            return Err(AlgebraError::SmallCharacteristic);
        }
        let n = self.dim();
        let mut gram = Matrix::zero(n, n, self.field);
        for i in 0..n {
            for j in 0..n {
                let l = self.left_mult_matrix(&self.table[i][j]);
                let mut tr = self.field.zero();
                for k in 0..n {
                    tr = tr.add(l.get(k, k));
                }
                gram.set(i, j, tr);
            }
        }
        let rad = gram.kernel_basis();
        if !self.is_nilpotent_span(&rad) {
            return Err(AlgebraError::NonNilpotentKernel);
        }
        Ok(rad)
    }

    /// Whether the span of the given columns is a nilpotent subspace under
    /// the product (products of length > dim vanish).
    fn is_nilpotent_span(&self, span: &Matrix) -> bool {
        let n = self.dim();
        let mut current: Vec<Vec<Scalar>> = (0..span.cols()).map(|c| span.column(c)).collect();
        for _ in 0..n {
            if current.is_empty() {
                return true;
            }
            let mut products = Vec::new();
            for u in &current {
                for c in 0..span.cols() {
                    products.push(self.mult(u, &span.column(c)));
                }
            }
            let m = Matrix::from_columns(n, self.field, &products);
            if m.is_zero() {
                return true;
            }
            // Reduce to a basis to keep the product count bounded.
            let basis = m.column_space_basis();
            current = (0..basis.cols()).map(|c| basis.column(c)).collect();
        }
        false
    }

    fn check_supplied_radical(&self, supplied: &[Vec<Scalar>]) -> Option<String> {
        let n = self.dim();
        let span = Matrix::from_columns(n, self.field, supplied);
        // Two-sided ideal.
        for c in 0..span.cols() {
            let v = span.column(c);
            for i in 0..n {
                let bi = self.basis_coords(i);
                for prod in [self.mult(&bi, &v), self.mult(&v, &bi)] {
                    let col = Matrix::from_columns(n, self.field, &[prod]);
                    if !span.contains_column(&col) && !col.is_zero() {
                        return Some("supplied radical is not a two-sided ideal".into());
                    }
                }
            }
        }
        if !self.is_nilpotent_span(&span) {
            return Some("supplied radical is not nilpotent".into());
        }
        // In the supported characteristic range, cross-check against the
        // trace form.
        if self.char_ok() {
            let without = Algebra { supplied_radical: None, ..self.clone() };
            if let Ok(computed) = without.radical_basis() {
                if computed.rank() != span.rank()
                    || (0..span.cols())
                        .any(|c| !computed.contains_column(&span.column_matrix(c)))
                {
                    return Some("supplied radical disagrees with the trace-form radical".into());
                }
            }
        }
        None
    }

    /// The opposite algebra: same space, product reversed.
    pub fn opposite(&self) -> Algebra {
        let n = self.dim();
        let mut table = self.table.clone();
        for (i, row) in table.iter_mut().enumerate() {
            for j in 0..n {
                row[j] = self.table[j][i].clone();
            }
        }
        Algebra {
            name: format!("{}^op", self.name),
            table,
            ..self.clone()
        }
    }

    pub fn table_entry(&self, i: usize, j: usize) -> &[Scalar] {
        &self.table[i][j]
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The 1-dimensional algebra k.
    fn ground_field() -> Algebra {
        let f = Field::Rational;
        Algebra::new(
            "k",
            f,
            vec!["1".into()],
            vec![vec![vec![f.one()]]],
            vec![f.one()],
            vec![vec![f.one()]],
            None,
        )
    }

    /// k x k with componentwise product.
    fn k_times_k() -> Algebra {
        let f = Field::Rational;
        let e = |i: usize| {
            let mut v = vec![f.zero(), f.zero()];
            v[i] = f.one();
            v
        };
        let zero = vec![f.zero(), f.zero()];
        Algebra::new(
            "kxk",
            f,
            vec!["e1".into(), "e2".into()],
            vec![vec![e(0), zero.clone()], vec![zero.clone(), e(1)]],
            vec![f.one(), f.one()],
            vec![e(0), e(1)],
            None,
        )
    }

    /// k[x]/(x^2): local with 1-dimensional radical.
    fn dual_numbers() -> Algebra {
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
    }

    #[test]
    fn ground_field_valid_semisimple() {
        let a = ground_field();
        assert!(a.validate().is_empty());
        assert_eq!(a.radical_basis().unwrap().cols(), 0);
    }

    #[test]
    fn k_times_k_valid() {
        let a = k_times_k();
        assert!(a.validate().is_empty());
        assert_eq!(a.radical_basis().unwrap().cols(), 0);
    }

    #[test]
    fn dual_numbers_radical() {
        let a = dual_numbers();
        assert!(a.validate().is_empty(), "{:?}", a.validate());
        let rad = a.radical_basis().unwrap();
        assert_eq!(rad.cols(), 1);
        assert!(!rad.get(1, 0).is_zero());
    }

    #[test]
    fn broken_associativity_reported() {
        let mut a = dual_numbers();
        // Inject x*x = 1: no longer nilpotent-compatible with the unit row.
        a.table[1][1] = vec![Field::Rational.one(), Field::Rational.zero()];
        let report = a.validate();
        assert!(!report.is_empty());
    }

    #[test]
    fn opposite_involution() {
        let a = dual_numbers();
        let opop = a.opposite().opposite();
        assert_eq!(opop.table, a.table);
    }

    #[test]
    fn commutative_opposite_is_itself() {
        let a = ground_field();
        assert_eq!(a.opposite().table, a.table);
    }

    #[test]
    fn supplied_radical_checked() {
        let f = Field::Rational;
        let mut a = dual_numbers();
        a.supplied_radical = Some(vec![vec![f.zero(), f.one()]]);
        assert!(a.validate().is_empty(), "{:?}", a.validate());
        // A wrong supplied radical is rejected.
        a.supplied_radical = Some(vec![vec![f.one(), f.zero()]]);
        assert!(!a.validate().is_empty());
    }

    #[test]
    fn left_right_mult_matrices() {
        let a = dual_numbers();
        let x = vec![Field::Rational.zero(), Field::Rational.one()];
        let l = a.left_mult_matrix(&x);
        assert_eq!(l.rank(), 1); // x*1 = x, x*x = 0
        assert_eq!(l, a.right_mult_matrix(&x)); // commutative
    }
}
