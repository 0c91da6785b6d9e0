//! The homological operators: projective covers, syzygies, transposes,
//! minimal left approximations into projectives, and cosyzygies.

mod ext;

pub use ext::*;

use crate::matrix::Matrix;
use crate::module::{
    cokernel_module, dual_with_basis, hom_basis, kernel_module, Module, ModuleMap,
};
use crate::scalar::Scalar;

/// A projective cover P → M: P is an explicit direct sum of the
/// projective indecomposables, the map is surjective, and its kernel lies
/// inside rad P.
#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    pub map: ModuleMap,
    /// Copies of each projective indecomposable, by idempotent index.
    pub multiplicities: Vec<usize>,
}

/// A minimal projective presentation P1 → P0 → M.
#[derive(Clone, Debug)]
pub struct ProjectivePresentation {
    pub cover: ProjectiveCover,
    pub syzygy_cover: ProjectiveCover,
    /// The composite P1 → ker ⊆ P0.
    pub delta: ModuleMap,
}

/// Projective cover: one copy of P_i per dimension of e_i·top(M), with a
/// lifted top basis. Panics only on invalid input (unvalidated modules).
pub fn projective_cover(m: &Module) -> ProjectiveCover {
    let algebra = m.algebra().clone();
    let field = algebra.field();
    let side = m.side();
    let (_topm, proj_top) = crate::module::top(m);
    let projectives = Module::projective_indecomposables(&algebra, side);
    let mut multiplicities = vec![0usize; projectives.len()];
    let mut summands: Vec<Module> = Vec::new();
    // Columns of the cover map, grouped per summand.
    let mut generator_columns: Vec<Vec<Scalar>> = Vec::new();
    let mut summand_dims: Vec<usize> = Vec::new();
    for (i, e) in algebra.idempotents().iter().enumerate() {
        // Vectors of e_i·M whose tops form a basis of e_i·top(M).
        let b = m.act(e);
        let t = proj_top.matrix.mul(&b);
        let (_, pivots) = t.rref();
        multiplicities[i] = pivots.len();
        for &c in &pivots {
            summands.push(projectives[i].0.clone());
            summand_dims.push(projectives[i].0.dim());
            generator_columns.push(b.column(c));
        }
    }
    if summands.is_empty() {
        let p = Module::zero(algebra.clone(), side);
        let map = ModuleMap::new(p, m.clone(), Matrix::zero(m.dim(), 0, field))
            .expect("zero map");
        return ProjectiveCover { map, multiplicities };
    }
    let (p, _, _) = crate::module::direct_sum(&summands);
    // Map each summand basis element w (a vector inside A) to w acting on
    // the chosen generator.
    let mut cols: Vec<Vec<Scalar>> = Vec::new();
    for (s, gen) in generator_columns.iter().enumerate() {
        let inc = &projective_inclusion(&algebra, side, &summands[s]);
        let gen_mat = Matrix::from_columns(m.dim(), field, &[gen.clone()]);
        for j in 0..summand_dims[s] {
            let w = inc.column(j);
            let img = m.act(&w).mul(&gen_mat);
            cols.push(img.column(0));
        }
    }
    let matrix = Matrix::from_columns(m.dim(), field, &cols);
    let map = ModuleMap::new(p.clone(), m.clone(), matrix).expect("cover map intertwines");
    debug_assert_eq!(map.rank(), m.dim(), "cover must be surjective");
    debug_assert!(kernel_inside_radical(&map), "cover kernel must lie in rad P");
    ProjectiveCover { map, multiplicities }
}

/// The inclusion matrix of a projective indecomposable into the algebra
/// carrier (columns are algebra coordinate vectors).
fn projective_inclusion(
    algebra: &std::sync::Arc<crate::algebra::Algebra>,
    side: crate::module::Side,
    p: &Module,
) -> Matrix {
    // Recomputed deterministically: the summand was cut out of the regular
    // module by the idempotent whose projective has this dimension and name.
    for (cand, inc) in Module::projective_indecomposables(algebra, side) {
        if cand.name == p.name {
            return inc.matrix;
        }
    }
    unreachable!("summand is one of the projective indecomposables");
}

/// Explicit basis of Hom(P, A) for a cover domain P = ⊕ Ae_i (or e_iA on
/// the right): a map out of Ae is determined by its value at e, which lies
/// in eA, so the basis is read off without solving anything. Matrices are
/// algebra-carrier × dim P, in the summand order of [`projective_cover`].
pub fn cover_hom_basis(cover: &ProjectiveCover) -> Vec<Matrix> {
    let p = &cover.map.domain;
    let algebra = p.algebra().clone();
    let side = p.side();
    let field = algebra.field();
    let n = algebra.dim();
    let projectives = Module::projective_indecomposables(&algebra, side);
    let mut out = Vec::new();
    let mut offset = 0usize;
    for (i, &mult) in cover.multiplicities.iter().enumerate() {
        if mult == 0 {
            continue;
        }
        let (pi, inc) = &projectives[i];
        let e = &algebra.idempotents()[i];
        // Values f(e) range over e·A (left side) resp. A·e (right side).
        let value_space = match side {
            crate::module::Side::Left => algebra.left_mult_matrix(e).column_space_basis(),
            crate::module::Side::Right => algebra.right_mult_matrix(e).column_space_basis(),
        };
        for _ in 0..mult {
            for wi in 0..value_space.cols() {
                let w = value_space.column(wi);
                let post = match side {
                    crate::module::Side::Left => algebra.right_mult_matrix(&w),
                    crate::module::Side::Right => algebra.left_mult_matrix(&w),
                };
                let block = post.mul(&inc.matrix);
                let mut g = Matrix::zero(n, p.dim(), field);
                for c in 0..pi.dim() {
                    for r in 0..n {
                        g.set(r, offset + c, block.get(r, c).clone());
                    }
                }
                out.push(g);
            }
            offset += pi.dim();
        }
    }
    out
}

fn kernel_inside_radical(cover: &ModuleMap) -> bool {
    let (_, rad_inc) = crate::module::radical_of_module(&cover.domain);
    let kernel = cover.matrix.kernel_basis();
    (0..kernel.cols()).all(|c| {
        rad_inc
            .matrix
            .solve(&kernel.column_matrix(c))
            .is_some()
    })
}

/// Syzygy: kernel of the projective cover. Zero for projectives.
pub fn syzygy(m: &Module) -> Module {
    let cover = projective_cover(m);
    let (k, _) = kernel_module(&cover.map);
    k.renamed(format!("syz({})", m.name))
}

/// Minimal projective presentation of a module.
pub fn presentation(m: &Module) -> ProjectivePresentation {
    let cover = projective_cover(m);
    let (_, inc) = kernel_module(&cover.map);
    let syzygy_cover = projective_cover(&inc.domain);
    let delta = inc.compose_after(&syzygy_cover.map);
    ProjectivePresentation { cover, syzygy_cover, delta }
}

/// Dualizes a map between modules: Hom(codomain, A) → Hom(domain, A) by
/// precomposition, expressed on the canonical dual bases.
pub fn dualized_map(f: &ModuleMap) -> ModuleMap {
    let (dual_cod, basis_cod) = dual_with_basis(&f.codomain);
    let (dual_dom, basis_dom) = dual_with_basis(&f.domain);
    let field = f.domain.algebra().field();
    let dom_mats: Vec<Matrix> = basis_dom.iter().map(|g| g.matrix.clone()).collect();
    let mut out = Matrix::zero(dual_dom.dim(), dual_cod.dim(), field);
    for (j, g) in basis_cod.iter().enumerate() {
        let pre = g.matrix.mul(&f.matrix);
        let coords = crate::module::express_in_basis(&dom_mats, &pre)
            .expect("precomposition lands in the dual");
        for (r, v) in coords.into_iter().enumerate() {
            out.set(r, j, v);
        }
    }
    ModuleMap::new(dual_cod, dual_dom, out).expect("dualized map intertwines")
}

/// Transpose: cokernel of the dualized minimal presentation. An
/// opposite-side module; zero for projectives.
pub fn transpose(m: &Module) -> Module {
    let pres = presentation(m);
    if pres.delta.domain.is_zero() {
        return Module::zero(m.algebra().clone(), m.side().flip());
    }
    let dstar = dualized_map(&pres.delta);
    let (tr, _) = cokernel_module(&dstar);
    tr.renamed(format!("tr({})", m.name))
}

/// Cosyzygy via the transpose: ℧M = Tr Ω Tr M.
pub fn cosyzygy(m: &Module) -> Module {
    transpose(&syzygy(&transpose(m))).renamed(format!("cosyz({})", m.name))
}

/// Minimal left approximation into a projective: starts from the full
/// hom-basis map M → A^d, splits the target into projective
/// indecomposable components, and greedily deletes components while every
/// map M → A still factors through the rest. Returns the approximation
/// and its cokernel.
pub fn minimal_left_approximation(m: &Module) -> (ModuleMap, Module) {
    let algebra = m.algebra().clone();
    let field = algebra.field();
    let side = m.side();
    let reg = Module::regular(algebra.clone(), side);
    let homs = hom_basis(m, &reg).expect("same ambient");
    let target_dim = homs.len();
    let projectives = Module::projective_indecomposables(&algebra, side);
    // Components: for hom f and idempotent e_i, the piece of f landing in
    // the i-th projective summand of A (post-compose with the projection
    // onto A·e_i, i.e. right multiplication by e_i for left modules).
    struct Component {
        proj_idx: usize,
        /// Map M → P_i in the summand's own coordinates.
        matrix: Matrix,
    }
    let mut components: Vec<Component> = Vec::new();
    for f in &homs {
        for (i, e) in algebra.idempotents().iter().enumerate() {
            let post = match side {
                crate::module::Side::Left => algebra.right_mult_matrix(e),
                crate::module::Side::Right => algebra.left_mult_matrix(e),
            };
            let piece = post.mul(&f.matrix);
            if piece.is_zero() {
                continue;
            }
            let inc = &projectives[i].1.matrix;
            let in_summand = inc.solve(&piece).expect("piece lies in the summand");
            components.push(Component { proj_idx: i, matrix: in_summand });
        }
    }
    // A component set approximates iff the precompositions of a hom basis
    // of Hom(P', A) with the stacked map span the whole of Hom(M, A).
    let approximates = |keep: &[bool]| -> bool {
        let kept: Vec<&Component> = components
            .iter()
            .zip(keep)
            .filter_map(|(c, &k)| k.then_some(c))
            .collect();
        let mut spanned: Vec<Vec<Scalar>> = Vec::new();
        // Hom(⊕P_i, A) = ⊕ Hom(P_i, A); precompose summand-wise.
        for c in &kept {
            let p = &projectives[c.proj_idx].0;
            for g in hom_basis(p, &reg).expect("same ambient") {
                let pre = g.matrix.mul(&c.matrix);
                spanned.push(pre.vectorize());
            }
        }
        if target_dim == 0 {
            return true;
        }
        let span = Matrix::from_columns(reg.dim() * m.dim(), field, &spanned);
        let hom_mats: Vec<Vec<Scalar>> = homs.iter().map(|f| f.matrix.vectorize()).collect();
        let full = Matrix::from_columns(reg.dim() * m.dim(), field, &hom_mats);
        span.rank() == full.rank() && (0..full.cols()).all(|c| {
            span.solve(&full.column_matrix(c)).is_some()
        })
    };
    let mut keep = vec![true; components.len()];
    for i in 0..components.len() {
        keep[i] = false;
        if !approximates(&keep) {
            keep[i] = true;
        }
    }
    let kept: Vec<&Component> = components
        .iter()
        .zip(&keep)
        .filter_map(|(c, &k)| k.then_some(c))
        .collect();
    if kept.is_empty() {
        let p = Module::zero(algebra.clone(), side);
        let map = ModuleMap::new(m.clone(), p.clone(), Matrix::zero(0, m.dim(), field))
            .expect("zero map");
        return (map, p);
    }
    let summands: Vec<Module> = kept.iter().map(|c| projectives[c.proj_idx].0.clone()).collect();
    let (p, injections, _) = crate::module::direct_sum(&summands);
    let mut matrix = Matrix::zero(p.dim(), m.dim(), field);
    for (s, c) in kept.iter().enumerate() {
        matrix = matrix.add(&injections[s].matrix.mul(&c.matrix));
    }
    let map = ModuleMap::new(m.clone(), p, matrix).expect("approximation intertwines");
    let (coker, _) = cokernel_module(&map);
    (map, coker.renamed(format!("cosyz({})", m.name)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::test_support::*;
    use crate::module::Side;
    use std::sync::Arc;

    #[test]
    fn cover_of_projective_is_iso() {
        let a = dual_numbers();
        let reg = Module::regular(Arc::clone(&a), Side::Left);
        let cover = projective_cover(&reg);
        assert!(cover.map.is_invertible());
        assert_eq!(cover.multiplicities, vec![1]);
        assert!(syzygy(&reg).is_zero());
    }

    #[test]
    fn syzygy_of_simple_over_dual_numbers() {
        // 0 → S → A → S → 0: the simple is its own syzygy.
        let a = dual_numbers();
        let s = simple(&a);
        let o = syzygy(&s);
        assert_eq!(o.dim(), 1);
        assert!(crate::module::is_isomorphic(&o, &s, crate::module::DEFAULT_SEED).is_iso());
    }

    #[test]
    fn transpose_of_projective_vanishes() {
        let a = dual_numbers();
        let reg = Module::regular(Arc::clone(&a), Side::Left);
        assert!(transpose(&reg).is_zero());
    }

    #[test]
    fn transpose_of_simple() {
        // Tr S is the simple right module (self-dual presentation).
        let a = dual_numbers();
        let s = simple(&a);
        let tr = transpose(&s);
        assert_eq!(tr.dim(), 1);
        assert_eq!(tr.side(), Side::Right);
    }

    #[test]
    fn cosyzygy_of_simple() {
        // Over k[x]/(x²) the simple is 1-periodic under both Ω and ℧.
        let a = dual_numbers();
        let s = simple(&a);
        let c = cosyzygy(&s);
        assert_eq!(c.dim(), 1);
        assert!(crate::module::is_isomorphic(&c, &s, crate::module::DEFAULT_SEED).is_iso());
    }

    #[test]
    fn approximation_of_projective_is_iso() {
        let a = dual_numbers();
        let reg = Module::regular(Arc::clone(&a), Side::Left);
        let (map, coker) = minimal_left_approximation(&reg);
        assert!(coker.is_zero());
        assert_eq!(map.codomain.dim(), reg.dim());
    }

    #[test]
    fn approximation_cokernel_matches_trotr() {
        let a = dual_numbers();
        let s = simple(&a);
        let (_, coker) = minimal_left_approximation(&s);
        let c = cosyzygy(&s);
        assert_eq!(coker.dim(), c.dim());
    }

    #[test]
    fn approximation_dimension_identity() {
        // dim P = dim M − dim K M + dim ℧M.
        let a = dual_numbers();
        let s = simple(&a);
        let (map, coker) = minimal_left_approximation(&s);
        let phi = crate::module::eval_map(&s);
        let k = phi.matrix.kernel_basis().cols();
        assert_eq!(map.codomain.dim(), s.dim() - k + coker.dim());
    }
}
