//! Kernels, images, cokernels, direct sums, generated submodules and the
//! radical/top of a module. All constructions return the new module
//! together with the structural map (inclusion or projection), and all
//! bases are deterministic (rref-canonical).

use super::{Module, ModuleError, ModuleMap};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Restricts the actions to the span of the given columns. The span must
/// already be action-stable; use [`submodule_generated`] to close it first.
pub fn submodule_spanned(
    m: &Module,
    vectors: &[Vec<Scalar>],
) -> Result<(Module, ModuleMap), ModuleError> {
    let f = m.algebra().field();
    if vectors.iter().any(|v| v.len() != m.dim() || v.iter().any(|s| s.field() != f)) {
        return Err(ModuleError::BadVector);
    }
    let basis = Matrix::from_columns(m.dim(), f, vectors).column_space_basis();
    let k = basis.cols();
    let mut actions = Vec::with_capacity(m.algebra().dim());
    for i in 0..m.algebra().dim() {
        let moved = m.action(i).mul(&basis);
        let restricted = basis.solve(&moved).ok_or(ModuleError::BadVector)?;
        debug_assert_eq!(restricted.rows(), k);
        actions.push(restricted);
    }
    let sub = Module::new(format!("sub({})", m.name), m.algebra().clone(), m.side(), actions)?;
    let inc = ModuleMap::new(sub.clone(), m.clone(), basis)?;
    Ok((sub, inc))
}

/// Closes the span of `vectors` under the algebra action, then restricts.
pub fn submodule_generated(
    m: &Module,
    vectors: &[Vec<Scalar>],
) -> Result<(Module, ModuleMap), ModuleError> {
    let f = m.algebra().field();
    if vectors.iter().any(|v| v.len() != m.dim() || v.iter().any(|s| s.field() != f)) {
        return Err(ModuleError::BadVector);
    }
    let mut span = Matrix::from_columns(m.dim(), f, vectors).column_space_basis();
    loop {
        let mut extended: Vec<Vec<Scalar>> = (0..span.cols()).map(|c| span.column(c)).collect();
        for i in 0..m.algebra().dim() {
            let moved = m.action(i).mul(&span);
            for c in 0..moved.cols() {
                extended.push(moved.column(c));
            }
        }
        let closed = Matrix::from_columns(m.dim(), f, &extended).column_space_basis();
        if closed.cols() == span.cols() {
            break;
        }
        span = closed;
    }
    let cols: Vec<Vec<Scalar>> = (0..span.cols()).map(|c| span.column(c)).collect();
    submodule_spanned(m, &cols)
}

/// Kernel of a map, with its inclusion into the domain.
pub fn kernel_module(f: &ModuleMap) -> (Module, ModuleMap) {
    let basis = f.matrix.kernel_basis();
    let cols: Vec<Vec<Scalar>> = (0..basis.cols()).map(|c| basis.column(c)).collect();
    let (m, inc) = submodule_spanned(&f.domain, &cols)
        .expect("kernel of an intertwining map is a submodule");
    (m.renamed(format!("ker({})", f.domain.name)), inc)
}

/// Image of a map, with its inclusion into the codomain.
pub fn image_module(f: &ModuleMap) -> (Module, ModuleMap) {
    let cols: Vec<Vec<Scalar>> = (0..f.matrix.cols()).map(|c| f.matrix.column(c)).collect();
    let (m, inc) = submodule_spanned(&f.codomain, &cols)
        .expect("image of an intertwining map is a submodule");
    (m.renamed(format!("im({})", f.domain.name)), inc)
}

/// Cokernel of a map, with the projection from the codomain.
///
/// The quotient basis is deterministic: the image is completed to a basis
/// of the codomain by the lexicographically first standard basis vectors,
/// and those standard vectors represent the quotient classes.
pub fn cokernel_module(f: &ModuleMap) -> (Module, ModuleMap) {
    let field = f.codomain.algebra().field();
    let n = f.codomain.dim();
    let img = f.matrix.column_space_basis();
    let r = img.cols();
    // Pick standard basis vectors completing the image to a basis.
    let aug = img.hstack(&Matrix::identity(n, field));
    let (_, pivots) = aug.rref();
    let chosen: Vec<usize> = pivots.iter().filter(|&&p| p >= r).map(|&p| p - r).collect();
    debug_assert_eq!(chosen.len(), n - r);
    let mut section = Matrix::zero(n, n - r, field);
    for (c, &std_idx) in chosen.iter().enumerate() {
        section.set(std_idx, c, field.one());
    }
    // Invert [image | section]; the projection is the bottom block of the
    // inverse, so that proj∘section = id and proj∘image = 0.
    let t = img.hstack(&section);
    let t_inv = t.inverse().expect("completed to a basis");
    let mut proj = Matrix::zero(n - r, n, field);
    for row in 0..n - r {
        for col in 0..n {
            proj.set(row, col, t_inv.get(r + row, col).clone());
        }
    }
    let actions: Vec<Matrix> = (0..f.codomain.algebra().dim())
        .map(|i| proj.mul(&f.codomain.action(i).mul(&section)))
        .collect();
    let q = Module::new(
        format!("coker({})", f.domain.name),
        f.codomain.algebra().clone(),
        f.codomain.side(),
        actions,
    )
    .expect("quotient action is well defined");
    let p = ModuleMap::new(f.codomain.clone(), q.clone(), proj)
        .expect("quotient projection intertwines");
    (q, p)
}

/// Direct sum with injection and projection maps, in input order.
pub fn direct_sum(ms: &[Module]) -> (Module, Vec<ModuleMap>, Vec<ModuleMap>) {
    let first = ms.first().expect("nonempty summand list");
    assert!(ms.iter().all(|m| first.same_ambient(m)), "mixed sides or algebras");
    let field = first.algebra().field();
    let total: usize = ms.iter().map(Module::dim).sum();
    let offsets: Vec<usize> = ms
        .iter()
        .scan(0, |acc, m| {
            let o = *acc;
            *acc += m.dim();
            Some(o)
        })
        .collect();
    let mut actions = Vec::with_capacity(first.algebra().dim());
    for i in 0..first.algebra().dim() {
        let mut a = Matrix::zero(total, total, field);
        for (m, &off) in ms.iter().zip(&offsets) {
            for r in 0..m.dim() {
                for c in 0..m.dim() {
                    a.set(off + r, off + c, m.action(i).get(r, c).clone());
                }
            }
        }
        actions.push(a);
    }
    let name = ms.iter().map(|m| m.name.as_str()).collect::<Vec<_>>().join(" + ");
    let sum = Module::new(name, first.algebra().clone(), first.side(), actions)
        .expect("block sum of valid actions");
    let mut injections = Vec::new();
    let mut projections = Vec::new();
    for (m, &off) in ms.iter().zip(&offsets) {
        let mut inj = Matrix::zero(total, m.dim(), field);
        let mut prj = Matrix::zero(m.dim(), total, field);
        for r in 0..m.dim() {
            inj.set(off + r, r, field.one());
            prj.set(r, off + r, field.one());
        }
        injections.push(ModuleMap::new(m.clone(), sum.clone(), inj).unwrap());
        projections.push(ModuleMap::new(sum.clone(), m.clone(), prj).unwrap());
    }
    (sum, injections, projections)
}

/// rad M = (rad A)·M, with its inclusion.
pub fn radical_of_module(m: &Module) -> (Module, ModuleMap) {
    let rad = m
        .algebra()
        .radical_basis()
        .expect("radical available for validated algebras");
    let mut vectors = Vec::new();
    for c in 0..rad.cols() {
        let action = m.act(&rad.column(c));
        for k in 0..m.dim() {
            vectors.push(action.column(k));
        }
    }
    if vectors.is_empty() {
        let (z, inc) = submodule_spanned(m, &[]).expect("zero submodule");
        return (z.renamed(format!("rad({})", m.name)), inc);
    }
    // rad·M is automatically action-stable (two-sided ideal).
    let (sub, inc) = submodule_spanned(m, &vectors).expect("radical is a submodule");
    (sub.renamed(format!("rad({})", m.name)), inc)
}

/// top M = M / rad M, with the projection.
pub fn top(m: &Module) -> (Module, ModuleMap) {
    let (_, inc) = radical_of_module(m);
    let (t, proj) = cokernel_module(&inc);
    (t.renamed(format!("top({})", m.name)), proj)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::test_support::*;
    use crate::module::{ModuleMap, Side};
    use crate::scalar::Field;
    use std::sync::Arc;

    #[test]
    fn kernel_of_identity_is_zero() {
        let a = dual_numbers();
        let s = simple(&a);
        let (k, _) = kernel_module(&ModuleMap::identity(&s));
        assert!(k.is_zero());
    }

    #[test]
    fn radical_and_top_of_regular() {
        let a = dual_numbers();
        let reg = crate::module::Module::regular(Arc::clone(&a), Side::Left);
        let (r, inc) = radical_of_module(&reg);
        assert_eq!(r.dim(), 1);
        let (t, _) = top(&reg);
        assert_eq!(t.dim(), 1);
        // rad of the radical (a simple) is zero.
        let (rr, _) = radical_of_module(&inc.domain);
        assert!(rr.is_zero());
    }

    #[test]
    fn cokernel_exactness() {
        let a = dual_numbers();
        let reg = crate::module::Module::regular(Arc::clone(&a), Side::Left);
        let (rad, inc) = radical_of_module(&reg);
        let (q, proj) = cokernel_module(&inc);
        assert_eq!(q.dim(), reg.dim() - rad.dim());
        assert!(proj.matrix.mul(&inc.matrix).is_zero());
        assert_eq!(proj.rank(), q.dim());
    }

    #[test]
    fn direct_sum_split() {
        let a = dual_numbers();
        let s = simple(&a);
        let reg = crate::module::Module::regular(Arc::clone(&a), Side::Left);
        let (sum, inj, prj) = direct_sum(&[s.clone(), reg.clone()]);
        assert_eq!(sum.dim(), 3);
        for (i, p) in prj.iter().enumerate() {
            for (j, q) in inj.iter().enumerate() {
                let comp = p.compose_after(q);
                if i == j {
                    assert!(comp.is_invertible());
                } else {
                    assert!(comp.matrix.is_zero());
                }
            }
        }
    }

    #[test]
    fn generated_submodule_closes() {
        let a = dual_numbers();
        let reg = crate::module::Module::regular(Arc::clone(&a), Side::Left);
        let f = Field::Rational;
        // The unit generates everything.
        let (sub, _) = submodule_generated(&reg, &[vec![f.one(), f.zero()]]).unwrap();
        assert_eq!(sub.dim(), 2);
        // x generates only the socle.
        let (socle, _) = submodule_generated(&reg, &[vec![f.zero(), f.one()]]).unwrap();
        assert_eq!(socle.dim(), 1);
    }

    #[test]
    fn bad_vector_rejected() {
        let a = dual_numbers();
        let reg = crate::module::Module::regular(Arc::clone(&a), Side::Left);
        assert!(submodule_generated(&reg, &[vec![Field::Rational.one()]]).is_err());
    }
}
