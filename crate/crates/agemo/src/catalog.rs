//! A family of small local algebras with three (or two) loop generators
//! and quantum-commutation relations, together with the standard modules
//! over them. These are the running examples for the homological
//! machinery: the 6-dimensional algebra `L(q)`, its 4-dimensional
//! quantum-exterior subalgebra, a radical-square-zero quotient, and a
//! 12-dimensional two-vertex covering of `L(q)`.
//!
//! Everything is built twice where feasible: from quiver source text via
//! the compiler, and (for `L(q)`) from an independent structure-constant
//! table; the test suite cross-checks the two.

use crate::algebra::Algebra;
use crate::matrix::Matrix;
use crate::module::{submodule_generated, top, Module, Side};
use crate::quiver::{
    build_path_algebra, parse_quiver, PathBasis, QuiverPresentation, DEFAULT_LENGTH_BOUND,
};
use crate::scalar::Scalar;
use std::sync::Arc;

/// A quiver presentation together with its compiled algebra and the
/// reduction data needed to take normal forms of paths.
pub struct CompiledQuiver {
    pub presentation: QuiverPresentation,
    pub basis: PathBasis,
    pub algebra: Arc<Algebra>,
}

impl CompiledQuiver {
    pub fn compile(source: &str) -> CompiledQuiver {
        let presentation = parse_quiver(source).expect("catalog source parses");
        let (algebra, basis) = build_path_algebra(&presentation, DEFAULT_LENGTH_BOUND)
            .expect("catalog presentation compiles");
        CompiledQuiver { presentation, basis, algebra }
    }

    /// Coordinates of a composable arrow-label path in the algebra basis.
    pub fn normal_form(&self, labels: &[&str]) -> Vec<Scalar> {
        self.basis
            .path_normal_form(&self.presentation, labels)
            .expect("known arrow labels")
    }
}

/// Source text for `L(q)`: one vertex, three loops x, y, z, with
/// x² = y² = z² = yz = 0, xy = −q·yx, xz = zx, zy = zx. The quotient is
/// 6-dimensional with basis 1, x, y, z, yx, zx.
pub fn lambda_source(q: &Scalar) -> String {
    format!(
        "quiver L({q})\n\
         field {field}\n\
         param q = {q}\n\
         vertex v\n\
         arrow x: v -> v\n\
         arrow y: v -> v\n\
         arrow z: v -> v\n\
         relation x*x\n\
         relation y*y\n\
         relation z*z\n\
         relation y*z\n\
         relation x*y + q y*x\n\
         relation x*z - z*x\n\
         relation z*y - z*x\n",
        field = q.field(),
    )
}

pub fn lambda(q: &Scalar) -> CompiledQuiver {
    assert!(!q.is_zero(), "the parameter must be a unit");
    CompiledQuiver::compile(&lambda_source(q))
}

/// `L(q)` again, as a hand-written structure-constant table on the basis
/// 1, x, y, z, yx, zx. Independent of the quiver compiler.
pub fn lambda_direct(q: &Scalar) -> Arc<Algebra> {
    assert!(!q.is_zero(), "the parameter must be a unit");
    let f = q.field();
    let dim = 6;
    let unit_of = |i: usize| {
        let mut v = vec![f.zero(); dim];
        v[i] = f.one();
        v
    };
    let (e, x, y, z, yx, zx) = (0, 1, 2, 3, 4, 5);
    let mut table = vec![vec![vec![f.zero(); dim]; dim]; dim];
    for i in 0..dim {
        table[e][i] = unit_of(i);
        table[i][e] = unit_of(i);
    }
    // xy = −q·yx; yx, zx are basis monomials; xz = zx = zy.
    let mut xy = vec![f.zero(); dim];
    xy[yx] = q.neg();
    table[x][y] = xy;
    table[y][x] = unit_of(yx);
    table[x][z] = unit_of(zx);
    table[z][x] = unit_of(zx);
    table[z][y] = unit_of(zx);
    let labels = ["e_v", "x", "y", "z", "yx", "zx"]
        .into_iter()
        .map(String::from)
        .collect();
    Algebra::new(
        format!("L({q})"),
        f,
        labels,
        table,
        unit_of(e),
        vec![unit_of(e)],
        None,
    )
    .checked()
    .expect("hand-written table is a valid algebra")
}

/// The quantum exterior algebra on x, y: x² = y² = 0, xy = −q·yx.
/// Basis 1, x, y, yx.
pub fn lambda_prime_source(q: &Scalar) -> String {
    format!(
        "quiver L'({q})\n\
         field {field}\n\
         param q = {q}\n\
         vertex v\n\
         arrow x: v -> v\n\
         arrow y: v -> v\n\
         relation x*x\n\
         relation y*y\n\
         relation x*y + q y*x\n",
        field = q.field(),
    )
}

pub fn lambda_prime(q: &Scalar) -> CompiledQuiver {
    assert!(!q.is_zero(), "the parameter must be a unit");
    CompiledQuiver::compile(&lambda_prime_source(q))
}

/// The radical-square-zero quotient on two loops: basis 1, x, y.
pub fn lambda_dprime_source() -> String {
    "quiver L''\n\
     field Q\n\
     vertex v\n\
     arrow x: v -> v\n\
     arrow y: v -> v\n\
     relation x*x\n\
     relation y*y\n\
     relation x*y\n\
     relation y*x\n"
        .to_string()
}

pub fn lambda_dprime() -> CompiledQuiver {
    CompiledQuiver::compile(&lambda_dprime_source())
}

/// A two-fold covering of `L(q)`: two vertices, three arrows in each
/// direction, and the `L(q)` relations split along the grading.
/// 12-dimensional.
pub fn lambda_tilde_source(q: &Scalar) -> String {
    format!(
        "quiver Lt({q})\n\
         field {field}\n\
         param q = {q}\n\
         vertex 1 2\n\
         arrow x1: 1 -> 2\n\
         arrow y1: 1 -> 2\n\
         arrow z1: 1 -> 2\n\
         arrow x2: 2 -> 1\n\
         arrow y2: 2 -> 1\n\
         arrow z2: 2 -> 1\n\
         relation x2*x1\n\
         relation y2*y1\n\
         relation z2*z1\n\
         relation y2*z1\n\
         relation x2*y1 + q y2*x1\n\
         relation x2*z1 - z2*x1\n\
         relation z2*y1 - z2*x1\n\
         relation x1*x2\n\
         relation y1*y2\n\
         relation z1*z2\n\
         relation y1*z2\n\
         relation x1*y2 + q y1*x2\n\
         relation x1*z2 - z1*x2\n\
         relation z1*y2 - z1*x2\n",
        field = q.field(),
    )
}

pub fn lambda_tilde(q: &Scalar) -> CompiledQuiver {
    assert!(!q.is_zero(), "the parameter must be a unit");
    CompiledQuiver::compile(&lambda_tilde_source(q))
}

/// Coordinates of the element m_α = x − α·y of `L(q)` (or of the
/// quantum exterior subalgebra).
pub fn m_alpha(cq: &CompiledQuiver, alpha: &Scalar) -> Vec<Scalar> {
    let x = cq.normal_form(&["x"]);
    let y = cq.normal_form(&["y"]);
    x.iter().zip(&y).map(|(a, b)| a.sub(&b.mul(alpha))).collect()
}

/// The one-sided ideal generated by a single element, as a submodule of
/// the regular module.
pub fn principal_ideal(alg: &Arc<Algebra>, coords: &[Scalar], side: Side) -> Module {
    let reg = Module::regular(Arc::clone(alg), side);
    let (sub, _) = submodule_generated(&reg, &[coords.to_vec()]).expect("element of the algebra");
    sub
}

/// The left ideal L·m_α. 2-dimensional for α = 1, otherwise 3-dimensional.
pub fn left_ideal_m(cq: &CompiledQuiver, alpha: &Scalar) -> Module {
    principal_ideal(&cq.algebra, &m_alpha(cq, alpha), Side::Left)
        .renamed(format!("Lm({alpha})"))
}

/// The right ideal m_α·L. Always 3-dimensional.
pub fn right_ideal_m(cq: &CompiledQuiver, alpha: &Scalar) -> Module {
    principal_ideal(&cq.algebra, &m_alpha(cq, alpha), Side::Right)
        .renamed(format!("m({alpha})L"))
}

/// The ideal U_α = (m_α, yx, zx) of `L(q)`, as a one-sided submodule of
/// the regular module. 3-dimensional on either side.
pub fn u_module(cq: &CompiledQuiver, alpha: &Scalar, side: Side) -> Module {
    let reg = Module::regular(Arc::clone(&cq.algebra), side);
    let gens = vec![
        m_alpha(cq, alpha),
        cq.normal_form(&["y", "x"]),
        cq.normal_form(&["z", "x"]),
    ];
    let (sub, _) = submodule_generated(&reg, &gens).expect("ideal generators");
    sub.renamed(format!("U({alpha})"))
}

/// The 3-dimensional left `L(q)`-module M(α) on the basis v, v′, v″ with
/// x·v = α·v′, y·v = v′, z·v = v″ and the radical annihilating v′, v″.
pub fn module_m(cq: &CompiledQuiver, alpha: &Scalar) -> Module {
    let alg = &cq.algebra;
    let f = alg.field();
    let mut actions = Vec::with_capacity(alg.dim());
    for label in alg.labels() {
        let mut a = Matrix::zero(3, 3, f);
        match label.as_str() {
            "e_v" => a = Matrix::identity(3, f),
            "x" => a.set(1, 0, alpha.clone()),
            "y" => a.set(1, 0, f.one()),
            "z" => a.set(2, 0, f.one()),
            _ => {}
        }
        actions.push(a);
    }
    Module::new(format!("M({alpha})"), Arc::clone(alg), Side::Left, actions)
        .expect("defining relations hold on M(alpha)")
}

/// The 2-dimensional module M′(α) over the quantum exterior algebra:
/// x·v = α·v′, y·v = v′. `None` encodes α = ∞, i.e. x·v = v′, y·v = 0.
pub fn module_m_prime(cq: &CompiledQuiver, alpha: Option<&Scalar>) -> Module {
    let alg = &cq.algebra;
    let f = alg.field();
    let mut actions = Vec::with_capacity(alg.dim());
    for label in alg.labels() {
        let mut a = Matrix::zero(2, 2, f);
        match (label.as_str(), alpha) {
            ("e_v", _) => a = Matrix::identity(2, f),
            ("x", Some(al)) => a.set(1, 0, al.clone()),
            ("x", None) => a.set(1, 0, f.one()),
            ("y", Some(_)) => a.set(1, 0, f.one()),
            _ => {}
        }
        actions.push(a);
    }
    let name = match alpha {
        Some(al) => format!("M'({al})"),
        None => "M'(inf)".to_string(),
    };
    Module::new(name, Arc::clone(alg), Side::Left, actions)
        .expect("defining relations hold on M'(alpha)")
}

/// The 3-dimensional module over the two-vertex covering with top at the
/// given vertex (1 or 2): x_i·v = α·v′, y_i·v = v′, z_i·v = v″, with v at
/// vertex i and v′, v″ at the other vertex.
pub fn module_m_tilde(cq: &CompiledQuiver, vertex: usize, alpha: &Scalar) -> Module {
    assert!(vertex == 1 || vertex == 2);
    let alg = &cq.algebra;
    let f = alg.field();
    let e_top = format!("e_{vertex}");
    let e_other = format!("e_{}", 3 - vertex);
    let (xs, ys, zs) = (
        format!("x{vertex}"),
        format!("y{vertex}"),
        format!("z{vertex}"),
    );
    let mut actions = Vec::with_capacity(alg.dim());
    for label in alg.labels() {
        let mut a = Matrix::zero(3, 3, f);
        if *label == e_top {
            a.set(0, 0, f.one());
        } else if *label == e_other {
            a.set(1, 1, f.one());
            a.set(2, 2, f.one());
        } else if *label == xs {
            a.set(1, 0, alpha.clone());
        } else if *label == ys {
            a.set(1, 0, f.one());
        } else if *label == zs {
            a.set(2, 0, f.one());
        }
        actions.push(a);
    }
    Module::new(format!("M{vertex}({alpha})"), Arc::clone(alg), Side::Left, actions)
        .expect("defining relations hold on the covering module")
}

/// The simple module over a local algebra, on the chosen side.
pub fn simple_local(alg: &Arc<Algebra>, side: Side) -> Module {
    assert_eq!(alg.idempotents().len(), 1, "local algebra expected");
    let (s, _) = top(&Module::regular(Arc::clone(alg), side));
    s.renamed("S")
}

/// Candidate modules for naming walked vertices: M(qᵗ·α) and the
/// one-sided ideals of m_{qᵗ·α} for t ∈ −span..=span.
pub fn naming_candidates(cq: &CompiledQuiver, alpha: &Scalar, span: i64) -> Vec<Module> {
    let q = cq
        .presentation
        .params
        .get("q")
        .cloned()
        .expect("q-parameterized catalog algebra");
    // The M(·) names take priority: several of the ideals are isomorphic
    // to modules in the M(·) family, and the family name reads better.
    let mut out = Vec::new();
    for t in -span..=span {
        out.push(module_m(cq, &q.pow(t).mul(alpha)));
    }
    for t in -span..=span {
        let a = q.pow(t).mul(alpha);
        out.push(left_ideal_m(cq, &a));
        out.push(right_ideal_m(cq, &a));
    }
    out
}

/// A mixed bag of modules over `L(q)` for property suites: regulars,
/// simples, a sweep of M(α), and one-sided ideals.
pub fn sample_modules(q: &Scalar) -> Vec<Module> {
    let cq = lambda(q);
    let one = q.field().one();
    let mut out = vec![
        Module::regular(Arc::clone(&cq.algebra), Side::Left),
        Module::regular(Arc::clone(&cq.algebra), Side::Right),
        simple_local(&cq.algebra, Side::Left),
        simple_local(&cq.algebra, Side::Right),
    ];
    let sweep = [
        q.field().zero(),
        one.clone(),
        q.clone(),
        q.mul(q),
        one.div(q),
        q.add(&one),
        one.neg(),
        q.neg(),
        q.mul(q).add(&one),
        one.div(&q.mul(q)),
    ];
    for alpha in &sweep {
        out.push(module_m(&cq, alpha));
    }
    for alpha in [&one, q, &q.mul(q), &one.div(q), &q.field().zero()] {
        out.push(left_ideal_m(&cq, alpha));
        out.push(right_ideal_m(&cq, alpha));
    }
    out.push(u_module(&cq, &one, Side::Left));
    out.push(u_module(&cq, q, Side::Right));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::{cokernel_module, is_isomorphic, IsoVerdict, DEFAULT_SEED};
    use crate::scalar::rational;

    #[test]
    fn lambda_basis_is_conventional() {
        let cq = lambda(&rational(2, 1));
        assert_eq!(cq.algebra.dim(), 6);
        let labels: Vec<&str> = cq.algebra.labels().iter().map(String::as_str).collect();
        assert_eq!(labels, ["e_v", "x", "y", "z", "yx", "zx"]);
        assert_eq!(cq.basis.cutoff, 3);
    }

    #[test]
    fn compiled_table_matches_direct_table() {
        for q in [rational(2, 1), rational(-1, 3)] {
            let compiled = lambda(&q).algebra;
            let direct = lambda_direct(&q);
            assert_eq!(compiled.labels(), direct.labels());
            for i in 0..6 {
                for j in 0..6 {
                    assert_eq!(
                        compiled.table_entry(i, j),
                        direct.table_entry(i, j),
                        "entry ({i}, {j}) for q = {q}"
                    );
                }
            }
        }
    }

    #[test]
    fn relative_dims() {
        let q = rational(2, 1);
        assert_eq!(lambda_prime(&q).algebra.dim(), 4);
        assert_eq!(lambda_dprime().algebra.dim(), 3);
        assert_eq!(lambda_tilde(&q).algebra.dim(), 12);
        let cp = lambda_prime(&q);
        let labels: Vec<&str> = cp.algebra.labels().iter().map(String::as_str).collect();
        assert_eq!(labels, ["e_v", "x", "y", "yx"]);
    }

    #[test]
    fn ideal_dimensions() {
        let cq = lambda(&rational(2, 1));
        // L·m_1 is 2-dimensional (z·m_1 = 0), all other cases 3-dimensional.
        assert_eq!(left_ideal_m(&cq, &rational(1, 1)).dim(), 2);
        assert_eq!(left_ideal_m(&cq, &rational(0, 1)).dim(), 3);
        assert_eq!(left_ideal_m(&cq, &rational(2, 1)).dim(), 3);
        for a in [0, 1, 2] {
            assert_eq!(right_ideal_m(&cq, &rational(a, 1)).dim(), 3);
        }
        assert_eq!(u_module(&cq, &rational(1, 1), Side::Left).dim(), 3);
        assert_eq!(u_module(&cq, &rational(2, 1), Side::Right).dim(), 3);
    }

    #[test]
    fn m_is_quotient_by_u() {
        let cq = lambda(&rational(2, 1));
        for a in [1, 2] {
            let alpha = rational(a, 1);
            let reg = Module::regular(Arc::clone(&cq.algebra), Side::Left);
            let u = u_module(&cq, &alpha, Side::Left);
            let (_, inc) = submodule_generated(
                &reg,
                &[
                    m_alpha(&cq, &alpha),
                    cq.normal_form(&["y", "x"]),
                    cq.normal_form(&["z", "x"]),
                ],
            )
            .unwrap();
            assert_eq!(inc.domain.dim(), u.dim());
            let (quot, _) = cokernel_module(&inc);
            let m = module_m(&cq, &alpha);
            assert!(
                is_isomorphic(&m, &quot, DEFAULT_SEED).is_iso(),
                "M({alpha}) vs L/U({alpha})"
            );
        }
    }

    #[test]
    fn one_sided_ideals_vs_u() {
        let cq = lambda(&rational(2, 1));
        // m_α·L = U_α on the right for every α; L·m_α = U_α for α ≠ 1.
        for a in [0, 1, 2] {
            let alpha = rational(a, 1);
            let r = right_ideal_m(&cq, &alpha);
            let u = u_module(&cq, &alpha, Side::Right);
            assert!(is_isomorphic(&r, &u, DEFAULT_SEED).is_iso(), "alpha = {a}");
        }
        let l = left_ideal_m(&cq, &rational(2, 1));
        let u = u_module(&cq, &rational(2, 1), Side::Left);
        assert!(is_isomorphic(&l, &u, DEFAULT_SEED).is_iso());
    }

    #[test]
    fn m_of_q_alpha_is_left_ideal() {
        // M(q·α) ≅ L·m_α for α ≠ 1.
        let q = rational(2, 1);
        let cq = lambda(&q);
        for a in [2, 3, -1] {
            let alpha = rational(a, 1);
            let m = module_m(&cq, &q.mul(&alpha));
            let l = left_ideal_m(&cq, &alpha);
            match is_isomorphic(&m, &l, DEFAULT_SEED) {
                IsoVerdict::Isomorphic(_) => {}
                v => panic!("M(q·{a}) vs Lm({a}): {v:?}"),
            }
        }
    }

    #[test]
    fn prime_and_covering_modules_validate() {
        let q = rational(2, 1);
        let cp = lambda_prime(&q);
        assert_eq!(module_m_prime(&cp, Some(&rational(3, 1))).dim(), 2);
        assert_eq!(module_m_prime(&cp, None).dim(), 2);
        let ct = lambda_tilde(&q);
        let m1 = module_m_tilde(&ct, 1, &rational(3, 1));
        let m2 = module_m_tilde(&ct, 2, &rational(3, 1));
        assert_eq!(m1.dim(), 3);
        assert_eq!(m2.dim(), 3);
        // The two tops are genuinely different vertices.
        match is_isomorphic(&m1, &m2, DEFAULT_SEED) {
            IsoVerdict::NotIsomorphic(_) => {}
            v => panic!("covering modules at different vertices: {v:?}"),
        }
    }

    #[test]
    fn sample_corpus_is_valid() {
        let mods = sample_modules(&rational(2, 1));
        assert!(mods.len() >= 12);
        for m in &mods {
            assert!(m.validate().is_empty(), "{}", m.name);
        }
    }

    #[test]
    fn shipped_sources_match_generators() {
        let q = rational(2, 1);
        assert_eq!(include_str!("../data/lambda.quiver"), lambda_source(&q));
        assert_eq!(
            include_str!("../data/lambda_prime.quiver"),
            lambda_prime_source(&q)
        );
        assert_eq!(
            include_str!("../data/lambda_dprime.quiver"),
            lambda_dprime_source()
        );
        assert_eq!(
            include_str!("../data/lambda_tilde.quiver"),
            lambda_tilde_source(&q)
        );
    }
}
