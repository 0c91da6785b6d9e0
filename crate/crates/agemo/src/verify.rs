//! End-to-end verification of the bundled worked example: the local
//! algebra L(q) with three loops x, y, z, its module families M(α),
//! the one-sided ideals of m_α = x − αy, and their homological behavior.
//!
//! Each claim is independent and returns either a short success note or
//! the first failing check. The command-line `verify` subcommand and the
//! acceptance test both drive this list.

use std::sync::Arc;

use crate::catalog::{
    lambda, lambda_prime, lambda_tilde, left_ideal_m, m_alpha, module_m, naming_candidates,
    right_ideal_m, sample_modules, simple_local,
};
use crate::config::Config;
use crate::explore::{walk_component, Namer};
use crate::homological::{
    certify_gp, cosyzygy, ext_dim_via_syzygy, ext_profile, g_status, is_reflexive,
    is_torsionless, k_module, minimal_left_approximation, projective_cover, syzygy, transpose,
    dualized_map, GpVerdict, HorizonVerdict,
};
use crate::module::{
    cokernel_module, dual, eval_map, is_indecomposable, is_isomorphic, kernel_module,
    submodule_generated, IndecVerdict, Module, Side,
};
use crate::scalar::{rational, Scalar};

/// One verified claim: a stable index, a short human title, and either a
/// success note or the first failing check.
#[derive(Clone, Debug)]
pub struct ClaimOutcome {
    pub index: usize,
    pub title: &'static str,
    pub result: Result<String, String>,
}

impl ClaimOutcome {
    pub fn passed(&self) -> bool {
        self.result.is_ok()
    }

    /// One line, stable across runs: "ok/FAIL  <idx>  <title>: <detail>".
    pub fn render(&self) -> String {
        match &self.result {
            Ok(note) => format!("ok    {:2}  {}: {}", self.index, self.title, note),
            Err(e) => format!("FAIL  {:2}  {}: {}", self.index, self.title, e),
        }
    }
}

pub const CLAIM_TITLES: [&str; 11] = [
    "catalog algebras: dimensions and defining relations",
    "ideal sweep: dimensions, quotient and ideal isomorphisms, approximations",
    "M(q): nonzero kernel, torsionless failure, dual ideal",
    "rigid orbit: vanishing Ext profiles and 3-dimensional syzygies",
    "double dual of M(q): dimension, decomposition, syzygy match",
    "independence of the three Gorenstein-projectivity conditions",
    "transpose-rigidity profiles of the cosyzygy family of M(1)",
    "q = -1: Gorenstein-projective certification and periodic component",
    "cosyzygy-quiver components: shapes, sources and sinks",
    "homological identities over the sample corpus",
    "horizon-honest reporting of unbounded claims",
];

pub fn claim_count() -> usize {
    CLAIM_TITLES.len()
}

pub fn run_claim(index: usize, cfg: &Config) -> ClaimOutcome {
    assert!((1..=CLAIM_TITLES.len()).contains(&index), "claim index out of range");
    let result = match index {
        1 => c01_catalog(cfg),
        2 => c02_ideal_sweep(cfg),
        3 => c03_kernel_of_mq(cfg),
        4 => c04_rigid_orbit(cfg),
        5 => c05_double_dual(cfg),
        6 => c06_g_independence(cfg),
        7 => c07_tr_profiles(cfg),
        8 => c08_q_minus_one(cfg),
        9 => c09_components(cfg),
        10 => c10_corpus_identities(cfg),
        11 => c11_horizon_honesty(cfg),
        _ => unreachable!(),
    };
    ClaimOutcome { index, title: CLAIM_TITLES[index - 1], result }
}

pub fn run_all(cfg: &Config) -> Vec<ClaimOutcome> {
    (1..=claim_count()).map(|i| run_claim(i, cfg)).collect()
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond { Ok(()) } else { Err(msg.into()) }
}

fn q2() -> Scalar {
    rational(2, 1)
}

// ---------------------------------------------------------------------
// Claim 1. The catalog algebras have the advertised dimensions and the
// seven defining relations of L(q) vanish as coordinate identities.

fn c01_catalog(_cfg: &Config) -> Result<String, String> {
    let q = q2();
    let cq = lambda(&q);
    let alg = &cq.algebra;
    ensure(alg.dim() == 6, format!("dim L(q) = {}, expected 6", alg.dim()))?;

    let x = cq.normal_form(&["x"]);
    let y = cq.normal_form(&["y"]);
    let z = cq.normal_form(&["z"]);
    let zero = |v: &[Scalar]| v.iter().all(Scalar::is_zero);
    let sum = |a: &[Scalar], b: &[Scalar]| -> Vec<Scalar> {
        a.iter().zip(b).map(|(u, v)| u.add(v)).collect()
    };
    let scale = |a: &[Scalar], s: &Scalar| -> Vec<Scalar> {
        a.iter().map(|u| u.mul(s)).collect()
    };
    // x² = y² = z² = yz = 0, xy + q·yx = 0, xz − zx = 0, zy − zx = 0.
    let relations: [(&str, Vec<Scalar>); 7] = [
        ("x^2", alg.mult(&x, &x)),
        ("y^2", alg.mult(&y, &y)),
        ("z^2", alg.mult(&z, &z)),
        ("yz", alg.mult(&y, &z)),
        ("xy + q yx", sum(&alg.mult(&x, &y), &scale(&alg.mult(&y, &x), &q))),
        ("xz - zx", sum(&alg.mult(&x, &z), &scale(&alg.mult(&z, &x), &q.field().from_i64(-1)))),
        ("zy - zx", sum(&alg.mult(&z, &y), &scale(&alg.mult(&z, &x), &q.field().from_i64(-1)))),
    ];
    for (name, value) in &relations {
        ensure(zero(value), format!("relation {name} does not vanish in L(q)"))?;
    }

    let prime = lambda_prime(&q);
    ensure(prime.algebra.dim() == 4, format!("dim L'(q) = {}, expected 4", prime.algebra.dim()))?;
    let tilde = lambda_tilde(&q);
    ensure(tilde.algebra.dim() == 12, format!("dim L~(q) = {}, expected 12", tilde.algebra.dim()))?;
    Ok("dims 6/4/12, all seven relations vanish".into())
}

// ---------------------------------------------------------------------
// Claim 2. Sweep over α: ideal dimensions, M(α) ≅ L/U(α), M(qα) ≅ Lm(α)
// for α ≠ 1, and the inclusion Lm(α) ⊆ L is a left approximation.

fn c02_ideal_sweep(cfg: &Config) -> Result<String, String> {
    let q = q2();
    let cq = lambda(&q);
    let reg = Module::regular(Arc::clone(&cq.algebra), Side::Left);
    let sweep: [i64; 7] = [0, 1, -1, 2, -2, 3, 5];
    for a in sweep {
        let alpha = q.field().from_i64(a);
        let right = right_ideal_m(&cq, &alpha);
        ensure(right.dim() == 3, format!("dim m({a})L = {}, expected 3", right.dim()))?;
        let left = left_ideal_m(&cq, &alpha);
        let expect = if a == 1 { 2 } else { 3 };
        ensure(
            left.dim() == expect,
            format!("dim Lm({a}) = {}, expected {expect}", left.dim()),
        )?;

        // M(α) ≅ L/U(α) where U(α) = (m_α, yx, zx).
        let gens = vec![
            m_alpha(&cq, &alpha),
            cq.normal_form(&["y", "x"]),
            cq.normal_form(&["z", "x"]),
        ];
        let (_, u_inc) = submodule_generated(&reg, &gens).map_err(|e| e.to_string())?;
        let (quot, _) = cokernel_module(&u_inc);
        ensure(
            is_isomorphic(&module_m(&cq, &alpha), &quot, cfg.seed).is_iso(),
            format!("M({a}) is not isomorphic to L/U({a})"),
        )?;

        // M(qα) ≅ Lm(α), except at the degenerate α = 1.
        if a != 1 {
            let shifted = module_m(&cq, &q.mul(&alpha));
            ensure(
                is_isomorphic(&shifted, &left, cfg.seed).is_iso(),
                format!("M({}) is not isomorphic to Lm({a})", 2 * a),
            )?;
        }

        // The inclusion u_α: Lm(α) → L is a left approximation: its dual
        // Hom(L, L) → Hom(Lm(α), L) is surjective.
        let (sub, inc) = submodule_generated(&reg, &[m_alpha(&cq, &alpha)])
            .map_err(|e| e.to_string())?;
        let dual_dim = dual(&sub).dim();
        let rank = dualized_map(&inc).rank();
        ensure(
            rank == dual_dim,
            format!("u_{a} is not a left approximation (dual rank {rank} of {dual_dim})"),
        )?;
    }
    Ok(format!("α sweep {:?} clean", sweep))
}

// ---------------------------------------------------------------------
// Claim 3. K M(q) is the 1-dimensional submodule z·M(q); M(q) is not
// torsionless; its dual is the right ideal m(1)L.

fn c03_kernel_of_mq(cfg: &Config) -> Result<String, String> {
    let q = q2();
    let cq = lambda(&q);
    let m = module_m(&cq, &q);
    let (k, k_inc) = k_module(&m);
    ensure(k.dim() == 1, format!("dim K M(2) = {}, expected 1", k.dim()))?;

    let zi = cq
        .algebra
        .labels()
        .iter()
        .position(|l| l == "z")
        .ok_or("no basis label z")?;
    let z_image = m.action(zi);
    let stacked = k_inc.matrix.hstack(z_image);
    ensure(
        z_image.rank() == 1 && stacked.rank() == 1,
        "K M(2) is not the subspace z·M(2)",
    )?;

    ensure(!is_torsionless(&m), "M(2) unexpectedly torsionless")?;
    ensure(
        is_isomorphic(&dual(&m), &right_ideal_m(&cq, &q.field().one()), cfg.seed).is_iso(),
        "M(2)* is not isomorphic to m(1)L",
    )?;
    Ok("K M(2) = z·M(2), not torsionless, M(2)* ≅ m(1)L".into())
}

// ---------------------------------------------------------------------
// Claim 4. Ext^i(M(q), A) and Ext^i(m(1)L, A) vanish for i up to the
// horizon, and every syzygy of M(q) and of M(q)* is 3-dimensional and
// indecomposable.

fn c04_rigid_orbit(cfg: &Config) -> Result<String, String> {
    let q = q2();
    let cq = lambda(&q);
    let t = cfg.horizon;
    let m = module_m(&cq, &q);
    ensure(
        ext_profile(&m, t).all_zero(),
        format!("Ext^i(M(2), A) nonzero below {t}"),
    )?;
    let m1l = right_ideal_m(&cq, &q.field().one());
    ensure(
        ext_profile(&m1l, t).all_zero(),
        format!("Ext^i(m(1)L, A) nonzero below {t}"),
    )?;

    for start in [m.clone(), dual(&m)] {
        let mut cur = start.clone();
        for i in 1..=t {
            cur = syzygy(&cur);
            ensure(
                cur.dim() == 3,
                format!("syzygy {i} of {} has dim {}", start.name, cur.dim()),
            )?;
            ensure(
                matches!(is_indecomposable(&cur, cfg.seed), IndecVerdict::Indecomposable),
                format!("syzygy {i} of {} is not certified indecomposable", start.name),
            )?;
        }
    }
    Ok(format!("profiles zero and syzygies rigid to depth {t}"))
}

// ---------------------------------------------------------------------
// Claim 5. M(q)** is 3-dimensional, isomorphic to the syzygy of M(1),
// and decomposes as Lm(1) ⊕ simple.

fn c05_double_dual(cfg: &Config) -> Result<String, String> {
    let q = q2();
    let cq = lambda(&q);
    let m = module_m(&cq, &q);
    let dd = dual(&dual(&m));
    ensure(dd.dim() == 3, format!("dim M(2)** = {}, expected 3", dd.dim()))?;
    ensure(
        is_isomorphic(&dd, &syzygy(&module_m(&cq, &q.field().one())), cfg.seed).is_iso(),
        "M(2)** is not isomorphic to the syzygy of M(1)",
    )?;
    match is_indecomposable(&dd, cfg.seed) {
        IndecVerdict::Decomposes(parts) => {
            let (a, b) = &*parts;
            let (small, big) = if a.dim() <= b.dim() { (a, b) } else { (b, a) };
            ensure(
                small.dim() == 1 && big.dim() == 2,
                format!("M(2)** splits as {} + {}, expected 1 + 2", small.dim(), big.dim()),
            )?;
            ensure(
                is_isomorphic(big, &left_ideal_m(&cq, &q.field().one()), cfg.seed).is_iso(),
                "the 2-dimensional summand of M(2)** is not Lm(1)",
            )?;
        }
        other => return Err(format!("M(2)** did not split: {other:?}")),
    }
    Ok("M(2)** ≅ Ω M(1) ≅ Lm(1) ⊕ simple".into())
}

// ---------------------------------------------------------------------
// Claim 6. The three conditions — vanishing Ext of the module, of its
// dual, and reflexivity — are pairwise independent: each of M(q),
// M(q³), M(1) fails exactly one of them.

fn c06_g_independence(cfg: &Config) -> Result<String, String> {
    let q = q2();
    let cq = lambda(&q);
    let t = cfg.horizon;

    let gs = g_status(&module_m(&cq, &q), t, cfg.seed);
    ensure(gs.g1.holds(), format!("M(2): Ext condition fails: {:?}", gs.g1))?;
    ensure(gs.g2.holds(), format!("M(2): dual Ext condition fails: {:?}", gs.g2))?;
    ensure(!gs.g3, "M(2): unexpectedly reflexive")?;

    let m8 = module_m(&cq, &q.field().from_i64(8));
    let gs8 = g_status(&m8, t, cfg.seed);
    ensure(gs8.g1.holds(), format!("M(8): Ext condition fails: {:?}", gs8.g1))?;
    ensure(gs8.g3, "M(8): not reflexive")?;
    let witness = match gs8.g2 {
        HorizonVerdict::Fails { witness } => witness,
        other => return Err(format!("M(8): dual Ext condition did not fail: {other:?}")),
    };
    // Cross-check the recorded least witness against the resolution-based
    // Ext dimensions (kept cheap: only consulted for small witnesses).
    if witness <= 6 {
        let d8 = dual(&m8);
        for i in 1..witness {
            ensure(
                ext_dim_via_syzygy(&d8, i) == 0,
                format!("M(8): recorded witness {witness} is not least (Ext^{i} ≠ 0)"),
            )?;
        }
        ensure(
            ext_dim_via_syzygy(&d8, witness) > 0,
            format!("M(8): recorded witness {witness} has vanishing Ext"),
        )?;
    }

    let gs1 = g_status(&module_m(&cq, &q.field().one()), t, cfg.seed);
    ensure(
        gs1.g1 == HorizonVerdict::Fails { witness: 1 },
        format!("M(1): expected Ext failure at degree 1, got {:?}", gs1.g1),
    )?;
    ensure(gs1.g2.holds(), format!("M(1): dual Ext condition fails: {:?}", gs1.g2))?;
    ensure(gs1.g3, "M(1): not reflexive")?;

    Ok(format!("each condition fails alone (dual witness of M(8) at degree {witness})"))
}

// ---------------------------------------------------------------------
// Claim 7. The modules M(q^{1−s}) for s = 1..5 satisfy the one-sided
// rigidity condition (TR_i) exactly for i < s, over i ∈ ±1..±8.

fn c07_tr_profiles(_cfg: &Config) -> Result<String, String> {
    let q = q2();
    let cq = lambda(&q);
    let depth = 8usize;
    for s in 1..=5i64 {
        let alpha = q.pow(1 - s);
        let m = module_m(&cq, &alpha);
        let profile = crate::homological::tr_profile(&m, depth);
        for i in 1..=depth as i64 {
            let expect = i < s;
            ensure(
                profile.holds(i) == expect,
                format!("M(2^{}): (TR_{i}) = {}, expected {expect}", 1 - s, profile.holds(i)),
            )?;
            ensure(
                profile.holds(-i),
                format!("M(2^{}): (TR_{}) fails", 1 - s, -i),
            )?;
        }
    }
    Ok("(TR_i) holds exactly for i < s, s = 1..5, |i| ≤ 8".into())
}

// ---------------------------------------------------------------------
// Claim 8. Over L(−1), the modules M(3) and M(5) are certified
// Gorenstein-projective with syzygy period 2, and the component of M(3)
// is a cycle of length 2 (type A~1).

fn c08_q_minus_one(cfg: &Config) -> Result<String, String> {
    let q = rational(-1, 1);
    let cq = lambda(&q);
    for a in [3i64, 5] {
        let m = module_m(&cq, &q.field().from_i64(a));
        match certify_gp(&m, cfg.horizon, cfg.seed) {
            GpVerdict::GpExact { period: 2 } => {}
            other => {
                return Err(format!("M({a}) over L(-1): expected exact period-2 certificate, got {other:?}"))
            }
        }
    }
    let m3 = module_m(&cq, &q.field().from_i64(3));
    let namer = Namer::new(naming_candidates(&cq, &q.field().from_i64(3), 4), cfg.seed);
    let (report, _) = walk_component(&m3, 8, cfg.seed, &namer);
    ensure(
        report.shape == "A~1",
        format!("component of M(3) over L(-1) has shape {}, expected A~1", report.shape),
    )?;
    ensure(report.closed, "component of M(3) over L(-1) not closed")?;
    Ok("M(3), M(5) certified Gorenstein-projective, component A~1".into())
}

// ---------------------------------------------------------------------
// Claim 9. Component shapes in the cosyzygy quiver at q = 2, walking 8
// steps each way: M(2) heads an open-left ray, M(1) ends an open-right
// ray, M(3) sits inside an open-both line; on the right, m(4)L ends an
// open-right ray and m(2)L lives in a closed two-vertex line.

fn c09_components(cfg: &Config) -> Result<String, String> {
    let q = q2();
    let cq = lambda(&q);
    let one = q.field().one();
    let depth = 8usize;

    let namer = Namer::new(naming_candidates(&cq, &one, 10), cfg.seed);
    let (w2, _) = walk_component(&module_m(&cq, &q), depth, cfg.seed, &namer);
    ensure(w2.shape == "open-left", format!("M(2) component shape {}", w2.shape))?;
    let source = w2.vertices.last().ok_or("M(2) component is empty")?;
    ensure(
        source.name == "M(2)",
        format!("M(2) component source named {}", source.name),
    )?;

    let (w1, _) = walk_component(&module_m(&cq, &one), depth, cfg.seed, &namer);
    ensure(w1.shape == "open-right", format!("M(1) component shape {}", w1.shape))?;
    ensure(
        w1.vertices[0].name == "M(1)",
        format!("M(1) component sink named {}", w1.vertices[0].name),
    )?;

    let namer3 = Namer::new(naming_candidates(&cq, &q.field().from_i64(3), 8), cfg.seed);
    let (w3, _) = walk_component(&module_m(&cq, &q.field().from_i64(3)), depth, cfg.seed, &namer3);
    ensure(w3.shape == "open-both", format!("M(3) component shape {}", w3.shape))?;

    let (wr, _) = walk_component(
        &right_ideal_m(&cq, &q.field().from_i64(4)),
        depth,
        cfg.seed,
        &namer,
    );
    ensure(wr.shape == "open-right", format!("m(4)L component shape {}", wr.shape))?;
    ensure(
        wr.vertices[0].name == "m(4)L",
        format!("m(4)L component sink named {}", wr.vertices[0].name),
    )?;

    let (wa, _) = walk_component(&right_ideal_m(&cq, &q), depth, cfg.seed, &namer);
    ensure(
        wa.shape == "A2" && wa.vertices.len() == 2,
        format!("m(2)L component shape {} with {} vertices", wa.shape, wa.vertices.len()),
    )?;
    ensure(
        wa.vertices[0].name == "m(2)L",
        format!("m(2)L component sink named {}", wa.vertices[0].name),
    )?;
    Ok("five components have the expected shapes and endpoints".into())
}

// ---------------------------------------------------------------------
// Claim 10. Structural identities checked over the whole sample corpus,
// on both sides.

fn c10_corpus_identities(cfg: &Config) -> Result<String, String> {
    let corpus = sample_modules(&q2());
    let mut checked = 0usize;
    for m in &corpus {
        corpus_identities_for(m, cfg)
            .map_err(|e| format!("{}: {e}", m.name))?;
        checked += 1;
    }
    Ok(format!("{checked} corpus modules clean"))
}

fn corpus_identities_for(m: &Module, cfg: &Config) -> Result<(), String> {
    let projective = syzygy(m).is_zero();

    // Three-way equivalence on the cover sequence 0 → ΩM → P → M → 0:
    // the inclusion is a left approximation ⇔ Ext¹(M, A) = 0 ⇔ the
    // A-dual sequence is exact. Ext¹ comes from the resolution route, so
    // the three are computed independently.
    let cover = projective_cover(m);
    let (om, om_inc) = kernel_module(&cover.map);
    let cond_approx = dualized_map(&om_inc).rank() == dual(&om).dim();
    let cond_ext = ext_dim_via_syzygy(m, 1) == 0;
    let cond_exact =
        dual(m).dim() + dual(&om).dim() == dual(&cover.map.domain).dim();
    if cond_approx != cond_ext || cond_ext != cond_exact {
        return Err(format!(
            "approximation/Ext/dual-exactness disagree ({cond_approx}/{cond_ext}/{cond_exact})"
        ));
    }

    // Coker of the evaluation map M → M** is K of the approximation
    // cokernel, and the two routes to that cokernel agree.
    let phi = eval_map(m);
    let coker_phi = phi.codomain.dim() - phi.rank();
    let (_, mho) = minimal_left_approximation(m);
    let (k_mho, _) = k_module(&mho);
    if k_mho.dim() != coker_phi {
        return Err(format!(
            "dim K of the cosyzygy is {} but coker of evaluation is {coker_phi}",
            k_mho.dim()
        ));
    }
    let tr_route = cosyzygy(m);
    if tr_route.dim() != mho.dim() {
        return Err(format!(
            "cosyzygy routes disagree in dimension ({} vs {})",
            tr_route.dim(),
            mho.dim()
        ));
    }
    if !tr_route.is_zero()
        && !is_isomorphic(&tr_route, &mho, cfg.seed).is_iso()
    {
        return Err("cosyzygy routes give non-isomorphic modules".into());
    }

    // Reflexivity transfers along the approximation sequence: for
    // torsionless M, M is reflexive iff its cosyzygy is torsionless.
    if is_torsionless(m) && is_reflexive(m) != is_torsionless(&mho) {
        return Err("reflexive(M) and torsionless(cosyzygy M) disagree".into());
    }

    // The four-term exact sequence
    // 0 → Ext^{t+1}(Tr M, A) → ℧ᵗM → (℧ᵗM)** → Ext^{t+2}(Tr M, A) → 0
    // forces the alternating dimension sum to vanish, t = 0, 1, 2.
    // (Resolution-route Ext here: at depth ≤ 4 it is much cheaper than
    // the summand-decomposition engine on these transposes.)
    let trm = transpose(m);
    let dims: Vec<usize> = (1..=4).map(|i| ext_dim_via_syzygy(&trm, i)).collect();
    // The iterates use the approximation-route cosyzygy; its agreement
    // with the transpose route is checked above.
    let mut iterate = m.clone();
    for t in 0..=2usize {
        let dd = dual(&dual(&iterate)).dim() as i64;
        let total = dims[t] as i64 - iterate.dim() as i64 + dd - dims[t + 1] as i64;
        if total != 0 {
            return Err(format!("four-term sequence at shift {t} has defect {total}"));
        }
        if t < 2 {
            iterate = minimal_left_approximation(&iterate).1;
        }
    }

    // Round trips. ℧ΩM ≅ M needs Ext¹(M, A) = 0; Ω℧M ≅ M needs M
    // torsionless without projective summands (automatic here: the
    // algebra is local and the nonprojective corpus members are small).
    if !projective && cond_ext {
        let back = cosyzygy(&syzygy(m));
        if !is_isomorphic(&back, m, cfg.seed).is_iso() {
            return Err("cosyzygy of the syzygy is not the module".into());
        }
    }
    if !projective && is_torsionless(m) {
        let back = syzygy(&mho);
        if !is_isomorphic(&back, m, cfg.seed).is_iso() {
            return Err("syzygy of the cosyzygy is not the module".into());
        }
    }

    // The transpose exchanges syzygy and cosyzygy: ℧ Tr M ≅ Tr Ω M.
    let a = cosyzygy(&trm);
    let b = transpose(&syzygy(m));
    if a.dim() != b.dim() {
        return Err(format!(
            "cosyzygy-of-transpose and transpose-of-syzygy differ in dimension ({} vs {})",
            a.dim(),
            b.dim()
        ));
    }
    if !a.is_zero() && !is_isomorphic(&a, &b, cfg.seed).is_iso() {
        return Err("cosyzygy-of-transpose is not transpose-of-syzygy".into());
    }
    Ok(())
}

// ---------------------------------------------------------------------
// Claim 11. Unbounded claims are reported honestly: horizon-bounded
// checks carry the horizon, finite certificates are marked exact, and
// truncated walks record the truncation.

fn c11_horizon_honesty(cfg: &Config) -> Result<String, String> {
    let q = q2();
    let cq = lambda(&q);
    let t = cfg.horizon;

    // The Ext vanishing of M(2) is open-ended: no periodicity closes it,
    // so the verdict must be horizon-stamped rather than exact.
    let gs = g_status(&module_m(&cq, &q), t, cfg.seed);
    ensure(
        gs.g1 == HorizonVerdict::HoldsUpToHorizon(t),
        format!("M(2): open-ended vanishing reported as {:?}", gs.g1),
    )?;

    // The period-2 syzygy orbit over L(−1) is a finite certificate and
    // must be reported exact.
    let cqm = lambda(&rational(-1, 1));
    let simple_ok = matches!(
        certify_gp(&module_m(&cqm, &q.field().from_i64(3)), t, cfg.seed),
        GpVerdict::GpExact { .. }
    );
    ensure(simple_ok, "L(-1): periodic certificate not marked exact")?;

    // A truncated walk must say so.
    let namer = Namer::empty(cfg.seed);
    let (report, _) = walk_component(&module_m(&cq, &q), 3, cfg.seed, &namer);
    ensure(!report.closed, "truncated walk reported as closed")?;
    ensure(
        report.halts.iter().any(|h| h.contains("horizon")),
        "truncated walk records no horizon halt",
    )?;

    // And the simple module's nonvanishing Ext is certified at every
    // degree, not merely sampled.
    let s = simple_local(&cq.algebra, Side::Left);
    let profile = crate::homological::tr_profile(&s, 10);
    ensure(
        profile.pos.iter().all(|&ok| !ok),
        "simple module: some Ext degree reported zero",
    )?;
    Ok("horizons stamped, certificates exact, truncations recorded".into())
}
