//! Walking components of the cosyzygy quiver: vertices are iso-classes of
//! indecomposable non-projective modules, with an arrow ℧X → X for every
//! torsionless X. Equivalently, an arrow leaves [M] iff Ext¹(M, A) = 0
//! (and then points to [ΩM]), and an arrow enters [M] iff M is torsionless
//! (coming from [℧M]).
//!
//! Reports lay the walked segment out like the component pictures usually
//! drawn for these quivers: the deepest syzygy first, the deepest cosyzygy
//! last, arrows pointing from index i+1 to index i. A component that is
//! still growing at the syzygy end after the horizon is `open-left`
//! (type −ℕ), at the cosyzygy end `open-right` (type ℕ), at both ends
//! `open-both` (type ℤ); fully bounded walks are `A{n}` and cycles
//! `A~{n−1}`.

use crate::homological::{cosyzygy, ext_first_nonzero, is_reflexive, is_torsionless, syzygy};
use crate::module::{is_indecomposable, is_isomorphic, IndecVerdict, IsoVerdict, Module};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexReport {
    pub name: String,
    pub dim: usize,
    pub torsionless: bool,
    pub reflexive: bool,
    pub semi_gp_horizon: bool,
    pub projective_halt: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentReport {
    pub shape: String,
    pub horizon: usize,
    pub closed: bool,
    pub vertices: Vec<VertexReport>,
    pub arrows: Vec<[usize; 2]>,
    pub halts: Vec<String>,
}

/// Follows the arrow leaving [m], when there is one: Ω m iff
/// Ext¹(m, A) = 0.
pub fn step_forward(m: &Module) -> Option<Module> {
    if ext_first_nonzero(m, 1).is_some() {
        return None;
    }
    Some(syzygy(m))
}

/// Follows the arrow entering [m] backwards, when there is one: ℧ m iff
/// m is torsionless.
pub fn step_backward(m: &Module) -> Option<Module> {
    if !is_torsionless(m) {
        return None;
    }
    Some(cosyzygy(m))
}

/// Names walked vertices after known modules; anything unmatched falls
/// back to dimension plus a hash of the action matrices.
pub struct Namer {
    candidates: Vec<Module>,
    seed: u64,
}

impl Namer {
    pub fn new(candidates: Vec<Module>, seed: u64) -> Namer {
        Namer { candidates, seed }
    }

    pub fn empty(seed: u64) -> Namer {
        Namer { candidates: Vec::new(), seed }
    }

    pub fn name(&self, m: &Module) -> String {
        for c in &self.candidates {
            if c.dim() == m.dim() && c.same_ambient(m) && is_isomorphic(c, m, self.seed).is_iso() {
                return c.name.clone();
            }
        }
        format!("{}d-{:08x}", m.dim(), action_hash(m))
    }
}

fn action_hash(m: &Module) -> u32 {
    // FNV-1a over a textual rendering of the actions; a display aid, not
    // an isomorphism invariant.
    let mut h: u32 = 0x811c_9dc5;
    let mut text = String::new();
    for i in 0..m.algebra().dim() {
        let a = m.action(i);
        for r in 0..a.rows() {
            for c in 0..a.cols() {
                let _ = write!(text, "{};", a.get(r, c));
            }
        }
    }
    for b in text.bytes() {
        h ^= b as u32;
        h = h.wrapping_mul(0x0100_0193);
    }
    h
}

fn is_projective(m: &Module) -> bool {
    !m.is_zero() && syzygy(m).is_zero()
}

/// Walks the component of `start` up to `horizon` steps in each
/// direction, detecting cycles by isomorphism tests against everything
/// already seen. Inconclusive verdicts halt the affected direction and
/// are recorded; they are never guessed away.
pub fn walk_component(
    start: &Module,
    horizon: usize,
    seed: u64,
    namer: &Namer,
) -> (ComponentReport, Vec<Module>) {
    assert!(horizon >= 1);
    let mut halts: Vec<String> = Vec::new();
    if start.is_zero() || is_projective(start) {
        halts.push("start module is projective (not a vertex of the quiver)".into());
        let report = ComponentReport {
            shape: "empty".into(),
            horizon,
            closed: true,
            vertices: Vec::new(),
            arrows: Vec::new(),
            halts,
        };
        return (report, Vec::new());
    }
    match is_indecomposable(start, seed) {
        IndecVerdict::Indecomposable => {}
        IndecVerdict::Decomposes(_) => {
            halts.push("start module is decomposable".into())
        }
        IndecVerdict::Unknown(_) => {
            halts.push("indecomposability of the start module is unknown".into())
        }
    }

    // Forward (syzygy) direction; this is the only direction in which a
    // cycle can close, since Ω is functional on vertices.
    let mut forward: Vec<Module> = Vec::new();
    let mut cycle_len: Option<usize> = None;
    let mut forward_closed = false;
    let mut cur = start.clone();
    for _ in 0..horizon {
        let Some(next) = step_forward(&cur) else {
            forward_closed = true;
            break;
        };
        if next.is_zero() {
            halts.push("syzygy vanished (projective reached)".into());
            forward_closed = true;
            break;
        }
        let mut matched = None;
        let mut inconclusive = false;
        for (idx, seen) in std::iter::once(start).chain(forward.iter()).enumerate() {
            match is_isomorphic(seen, &next, seed) {
                IsoVerdict::Isomorphic(_) => {
                    matched = Some(idx);
                    break;
                }
                IsoVerdict::NotIsomorphic(_) => {}
                IsoVerdict::Unknown(_) => inconclusive = true,
            }
        }
        if let Some(idx) = matched {
            if idx == 0 {
                cycle_len = Some(forward.len() + 1);
            } else {
                halts.push(format!("walk re-entered at interior vertex {idx}"));
            }
            break;
        }
        if inconclusive {
            halts.push("isomorphism test inconclusive during cycle detection".into());
        }
        match is_indecomposable(&next, seed) {
            IndecVerdict::Indecomposable => {}
            IndecVerdict::Decomposes(_) => {
                halts.push("syzygy decomposed; stopping forward walk".into());
                forward.push(next);
                forward_closed = true;
                break;
            }
            IndecVerdict::Unknown(_) => {
                halts.push("indecomposability unknown; stopping forward walk".into());
                forward.push(next);
                forward_closed = true;
                break;
            }
        }
        let halt_here = is_projective(&next);
        forward.push(next.clone());
        if halt_here {
            halts.push("projective reached in forward walk".into());
            forward_closed = true;
            break;
        }
        cur = next;
    }

    // Backward (cosyzygy) direction, skipped once a cycle has closed.
    let mut backward: Vec<Module> = Vec::new();
    let mut backward_closed = false;
    if cycle_len.is_none() {
        let mut cur = start.clone();
        for _ in 0..horizon {
            let Some(prev) = step_backward(&cur) else {
                backward_closed = true;
                break;
            };
            if prev.is_zero() {
                halts.push("cosyzygy vanished (projective reached)".into());
                backward_closed = true;
                break;
            }
            match is_indecomposable(&prev, seed) {
                IndecVerdict::Indecomposable => {}
                IndecVerdict::Decomposes(_) => {
                    halts.push("cosyzygy decomposed; stopping backward walk".into());
                    backward.push(prev);
                    backward_closed = true;
                    break;
                }
                IndecVerdict::Unknown(_) => {
                    halts.push("indecomposability unknown; stopping backward walk".into());
                    backward.push(prev);
                    backward_closed = true;
                    break;
                }
            }
            let halt_here = is_projective(&prev);
            backward.push(prev.clone());
            if halt_here {
                halts.push("projective reached in backward walk".into());
                backward_closed = true;
                break;
            }
            cur = prev;
        }
    }

    // Layout: deepest syzygy first, deepest cosyzygy last; arrows i+1 → i.
    let mut modules: Vec<Module> = Vec::new();
    let mut arrows: Vec<[usize; 2]> = Vec::new();
    let shape;
    let closed;
    if let Some(len) = cycle_len {
        modules.extend(forward.into_iter().rev());
        modules.push(start.clone());
        debug_assert_eq!(modules.len(), len);
        for i in 0..len.saturating_sub(1) {
            arrows.push([i + 1, i]);
        }
        arrows.push([0, len - 1]);
        if len == 1 {
            // Self-loop: the single arrow [0, 0] is already in place.
            arrows.truncate(1);
        }
        shape = format!("A~{}", len - 1);
        closed = true;
    } else {
        modules.extend(forward.into_iter().rev());
        modules.push(start.clone());
        modules.extend(backward);
        for i in 0..modules.len().saturating_sub(1) {
            arrows.push([i + 1, i]);
        }
        match (forward_closed, backward_closed) {
            (true, true) => {
                shape = format!("A{}", modules.len());
                closed = true;
            }
            (false, true) => {
                shape = "open-left".into();
                closed = false;
                halts.push("forward horizon reached".into());
            }
            (true, false) => {
                shape = "open-right".into();
                closed = false;
                halts.push("backward horizon reached".into());
            }
            (false, false) => {
                shape = "open-both".into();
                closed = false;
                halts.push("forward horizon reached".into());
                halts.push("backward horizon reached".into());
            }
        }
    }

    let vertices: Vec<VertexReport> = modules
        .iter()
        .map(|m| VertexReport {
            name: namer.name(m),
            dim: m.dim(),
            torsionless: is_torsionless(m),
            reflexive: is_reflexive(m),
            semi_gp_horizon: ext_first_nonzero(m, horizon).is_none(),
            projective_halt: is_projective(m),
        })
        .collect();
    let report = ComponentReport { shape, horizon, closed, vertices, arrows, halts };
    (report, modules)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Dot,
    Text,
}

impl std::str::FromStr for ReportFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<ReportFormat, String> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "dot" => Ok(ReportFormat::Dot),
            "text" => Ok(ReportFormat::Text),
            other => Err(format!("unknown format {other:?} (expected json, dot or text)")),
        }
    }
}

/// Deterministic rendering of a report.
pub fn render_report(r: &ComponentReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(r).expect("report serializes");
            s.push('\n');
            s
        }
        ReportFormat::Dot => {
            let mut s = String::from("digraph component {\n  rankdir=LR;\n");
            for (i, v) in r.vertices.iter().enumerate() {
                let _ = writeln!(s, "  n{i} [label=\"{}\"];", v.name);
            }
            for a in &r.arrows {
                let _ = writeln!(s, "  n{} -> n{};", a[0], a[1]);
            }
            s.push_str("}\n");
            s
        }
        ReportFormat::Text => {
            let mut s = format!(
                "shape: {}  (horizon {}, {})\n",
                r.shape,
                r.horizon,
                if r.closed { "closed" } else { "open" }
            );
            for (i, v) in r.vertices.iter().enumerate() {
                let mut flags = Vec::new();
                if v.torsionless {
                    flags.push("torsionless");
                }
                if v.reflexive {
                    flags.push("reflexive");
                }
                if v.semi_gp_horizon {
                    flags.push("semi-gp@horizon");
                }
                if v.projective_halt {
                    flags.push("projective");
                }
                let _ = writeln!(s, "  [{i}] {} (dim {}) {}", v.name, v.dim, flags.join(" "));
            }
            for a in &r.arrows {
                let _ = writeln!(s, "  {} -> {}", a[0], a[1]);
            }
            for h in &r.halts {
                let _ = writeln!(s, "  halt: {h}");
            }
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{lambda, module_m, naming_candidates};
    use crate::module::DEFAULT_SEED;
    use crate::scalar::rational;

    #[test]
    fn period_one_module_is_a_cycle() {
        let cq = lambda(&rational(2, 1));
        let m0 = module_m(&cq, &rational(0, 1));
        let namer = Namer::empty(DEFAULT_SEED);
        let (report, _) = walk_component(&m0, 6, DEFAULT_SEED, &namer);
        assert_eq!(report.shape, "A~0");
        assert!(report.closed);
        assert_eq!(report.vertices.len(), 1);
        assert_eq!(report.arrows, vec![[0, 0]]);
    }

    #[test]
    fn source_module_walks_open_left() {
        let q = rational(2, 1);
        let cq = lambda(&q);
        let m = module_m(&cq, &q);
        let namer = Namer::new(naming_candidates(&cq, &q.field().one(), 8), DEFAULT_SEED);
        let (report, _) = walk_component(&m, 4, DEFAULT_SEED, &namer);
        assert_eq!(report.shape, "open-left");
        assert!(!report.closed);
        assert_eq!(report.vertices.len(), 5);
        // Deepest syzygy first; the start is the source at the right end.
        assert_eq!(report.vertices[0].name, "M(32)");
        assert_eq!(report.vertices[4].name, "M(2)");
        assert!(!report.vertices[4].torsionless);
        assert_eq!(report.arrows, vec![[1, 0], [2, 1], [3, 2], [4, 3]]);
    }

    #[test]
    fn sink_module_walks_open_right() {
        let q = rational(2, 1);
        let cq = lambda(&q);
        let m = module_m(&cq, &rational(1, 1));
        let namer = Namer::new(naming_candidates(&cq, &q.field().one(), 8), DEFAULT_SEED);
        let (report, _) = walk_component(&m, 3, DEFAULT_SEED, &namer);
        assert_eq!(report.shape, "open-right");
        assert_eq!(report.vertices[0].name, "M(1)");
        assert_eq!(report.vertices[1].name, "M(1/2)");
        assert_eq!(report.vertices.len(), 4);
    }

    #[test]
    fn generic_module_walks_open_both() {
        let q = rational(2, 1);
        let cq = lambda(&q);
        let m = module_m(&cq, &rational(3, 1));
        let namer = Namer::new(naming_candidates(&cq, &rational(3, 1), 6), DEFAULT_SEED);
        let (report, _) = walk_component(&m, 2, DEFAULT_SEED, &namer);
        assert_eq!(report.shape, "open-both");
        assert_eq!(report.vertices.len(), 5);
        assert_eq!(report.vertices[0].name, "M(12)");
        assert_eq!(report.vertices[2].name, "M(3)");
        assert_eq!(report.vertices[4].name, "M(3/4)");
    }

    #[test]
    fn finite_order_parameter_gives_two_cycle() {
        // o(−1) = 2: modules off the parameter orbit live on directed
        // 2-cycles.
        let q = rational(-1, 1);
        let cq = lambda(&q);
        let m = module_m(&cq, &rational(3, 1));
        let namer = Namer::new(naming_candidates(&cq, &rational(3, 1), 2), DEFAULT_SEED);
        let (report, _) = walk_component(&m, 6, DEFAULT_SEED, &namer);
        assert_eq!(report.shape, "A~1");
        assert_eq!(report.vertices.len(), 2);
        assert_eq!(report.arrows, vec![[1, 0], [0, 1]]);
    }

    #[test]
    fn steps_invert_each_other() {
        let q = rational(2, 1);
        let cq = lambda(&q);
        let m3 = module_m(&cq, &rational(3, 1));
        let m6 = module_m(&cq, &rational(6, 1));
        let fwd = step_forward(&m3).expect("Ext^1 vanishes");
        assert!(is_isomorphic(&fwd, &m6, DEFAULT_SEED).is_iso());
        let back = step_backward(&m6).expect("torsionless");
        assert!(is_isomorphic(&back, &m3, DEFAULT_SEED).is_iso());
    }

    #[test]
    fn projective_start_reports_empty() {
        let cq = lambda(&rational(2, 1));
        let reg = Module::regular(std::sync::Arc::clone(&cq.algebra), crate::module::Side::Left);
        let namer = Namer::empty(DEFAULT_SEED);
        let (report, mods) = walk_component(&reg, 3, DEFAULT_SEED, &namer);
        assert_eq!(report.shape, "empty");
        assert!(mods.is_empty());
        assert!(!report.halts.is_empty());
    }

    #[test]
    fn json_round_trip_and_dot_shape() {
        let cq = lambda(&rational(2, 1));
        let m0 = module_m(&cq, &rational(0, 1));
        let namer = Namer::empty(DEFAULT_SEED);
        let (report, _) = walk_component(&m0, 3, DEFAULT_SEED, &namer);
        let json = render_report(&report, ReportFormat::Json);
        let parsed: ComponentReport = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed, report);
        let dot = render_report(&report, ReportFormat::Dot);
        assert!(dot.contains("n0 -> n0;"));
        assert!(dot.starts_with("digraph component {"));
    }
}
