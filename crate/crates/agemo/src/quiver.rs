//! Quivers with relations: a line-oriented source format, and compilation
//! to a multiplication table by linear algebra on truncated path spaces.
//!
//! Composition convention: in a relation, `a*b` means "first apply b,
//! then a". A stored path is the arrow sequence in writing order, so its
//! source is the source of its *last* arrow and its target the target of
//! its first.

use crate::algebra::Algebra;
use crate::matrix::Matrix;
use crate::scalar::{Field, Scalar};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QuiverError {
    #[error("line {line}: syntax error: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: unknown arrow {label:?} in relation")]
    UnknownArrow { line: usize, label: String },
    #[error("line {line}: non-composable path {path:?}")]
    NonComposable { line: usize, path: String },
    #[error("line {line}: unbound parameter {name:?}")]
    UnboundParam { line: usize, name: String },
    #[error("presentation does not stabilize within path length {bound}; the quotient is infinite-dimensional or the bound is too small")]
    DimensionBlowup { bound: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

/// One relation: a linear combination of composable paths (arrow index
/// sequences in writing order), with its source line for diagnostics.
#[derive(Clone, Debug)]
pub struct Relation {
    pub terms: Vec<(Scalar, Vec<usize>)>,
    pub line: usize,
}

#[derive(Clone, Debug)]
pub struct QuiverPresentation {
    pub name: String,
    pub field: Field,
    pub params: BTreeMap<String, Scalar>,
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Relation>,
}

pub fn parse_quiver(text: &str) -> Result<QuiverPresentation, QuiverError> {
    let mut name = String::new();
    let mut field = Field::Rational;
    let mut params: BTreeMap<String, Scalar> = BTreeMap::new();
    let mut vertices: Vec<String> = Vec::new();
    let mut arrows: Vec<Arrow> = Vec::new();
    let mut pending_relations: Vec<(usize, String)> = Vec::new();
    let mut field_seen = false;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match keyword {
            "quiver" => {
                if rest.is_empty() {
                    return Err(QuiverError::Syntax { line: line_no, msg: "missing quiver name".into() });
                }
                name = rest.to_string();
            }
            "field" => {
                field = parse_field(rest).ok_or(QuiverError::Syntax {
                    line: line_no,
                    msg: format!("bad field {rest:?} (expected Q or Fp)"),
                })?;
                field_seen = true;
            }
            "param" => {
                let (pname, value) = rest.split_once('=').ok_or(QuiverError::Syntax {
                    line: line_no,
                    msg: "expected `param NAME = VALUE`".into(),
                })?;
                let pname = pname.trim();
                if pname.is_empty() || !pname.chars().all(|c| c.is_alphanumeric() || c == '_') {
                    return Err(QuiverError::Syntax { line: line_no, msg: format!("bad parameter name {pname:?}") });
                }
                let v = Scalar::parse(field, value.trim()).ok_or(QuiverError::Syntax {
                    line: line_no,
                    msg: format!("bad parameter value {:?}", value.trim()),
                })?;
                params.insert(pname.to_string(), v);
            }
            "vertex" => {
                for v in rest.split_whitespace() {
                    if vertices.iter().any(|x| x == v) {
                        return Err(QuiverError::Syntax { line: line_no, msg: format!("duplicate vertex {v:?}") });
                    }
                    vertices.push(v.to_string());
                }
            }
            "arrow" => {
                // `arrow LABEL: SRC -> TGT`
                let (label, ends) = rest.split_once(':').ok_or(QuiverError::Syntax {
                    line: line_no,
                    msg: "expected `arrow LABEL: SRC -> TGT`".into(),
                })?;
                let label = label.trim();
                let (src, tgt) = ends.split_once("->").ok_or(QuiverError::Syntax {
                    line: line_no,
                    msg: "expected `SRC -> TGT`".into(),
                })?;
                let src = src.trim();
                let tgt = tgt.trim();
                if arrows.iter().any(|a| a.label == label) {
                    return Err(QuiverError::Syntax { line: line_no, msg: format!("duplicate arrow label {label:?}") });
                }
                let source = vertices.iter().position(|v| v == src).ok_or(QuiverError::Syntax {
                    line: line_no,
                    msg: format!("unknown vertex {src:?}"),
                })?;
                let target = vertices.iter().position(|v| v == tgt).ok_or(QuiverError::Syntax {
                    line: line_no,
                    msg: format!("unknown vertex {tgt:?}"),
                })?;
                arrows.push(Arrow { label: label.to_string(), source, target });
            }
            "relation" => {
                if rest.is_empty() {
                    return Err(QuiverError::Syntax { line: line_no, msg: "empty relation".into() });
                }
                pending_relations.push((line_no, rest.to_string()));
            }
            other => {
                return Err(QuiverError::Syntax { line: line_no, msg: format!("unknown directive {other:?}") });
            }
        }
    }
    if !field_seen {
        // Default already Q; accept silently.
    }
    let mut relations = Vec::new();
    for (line_no, expr) in pending_relations {
        relations.push(parse_relation(line_no, &expr, field, &params, &arrows)?);
    }
    Ok(QuiverPresentation { name, field, params, vertices, arrows, relations })
}

pub(crate) fn parse_field(s: &str) -> Option<Field> {
    if s == "Q" {
        return Some(Field::Rational);
    }
    let p: u64 = s.strip_prefix('F')?.parse().ok()?;
    (p >= 2).then_some(Field::Prime(p))
}

/// Splits an expression on top-level `+`/`-` signs, parses each term as
/// `[COEFF] PATH`, and checks arrow existence and composability.
fn parse_relation(
    line: usize,
    expr: &str,
    field: Field,
    params: &BTreeMap<String, Scalar>,
    arrows: &[Arrow],
) -> Result<Relation, QuiverError> {
    let mut terms = Vec::new();
    let mut sign = field.one();
    let mut current = String::new();
    let mut chunks: Vec<(Scalar, String)> = Vec::new();
    for c in expr.chars() {
        match c {
            '+' | '-' => {
                if current.trim().is_empty() && c == '-' {
                    // Leading sign of the first term.
                    sign = sign.neg();
                    continue;
                }
                if current.trim().is_empty() {
                    continue;
                }
                chunks.push((sign.clone(), current.trim().to_string()));
                sign = if c == '-' { field.one().neg() } else { field.one() };
                current.clear();
            }
            _ => current.push(c),
        }
    }
    if !current.trim().is_empty() {
        chunks.push((sign, current.trim().to_string()));
    }
    if chunks.is_empty() {
        return Err(QuiverError::Syntax { line, msg: "empty relation".into() });
    }
    for (sgn, chunk) in chunks {
        let tokens: Vec<&str> = chunk.split_whitespace().collect();
        let (coeff, path_token) = match tokens.as_slice() {
            [p] => (field.one(), *p),
            [c, p] => {
                let coeff = parse_coeff(line, c, field, params)?;
                (coeff, *p)
            }
            _ => {
                return Err(QuiverError::Syntax {
                    line,
                    msg: format!("expected `[COEFF] PATH`, got {chunk:?}"),
                })
            }
        };
        let mut path = Vec::new();
        for label in path_token.split('*') {
            let label = label.trim();
            let idx = arrows.iter().position(|a| a.label == label).ok_or_else(|| {
                QuiverError::UnknownArrow { line, label: label.to_string() }
            })?;
            path.push(idx);
        }
        // Writing order: path[k] is applied after path[k+1].
        for w in path.windows(2) {
            if arrows[w[0]].source != arrows[w[1]].target {
                return Err(QuiverError::NonComposable { line, path: path_token.to_string() });
            }
        }
        terms.push((sgn.mul(&coeff), path));
    }
    // All terms of one relation must share source and target.
    let ends = |p: &[usize]| -> (usize, usize) {
        (arrows[*p.last().unwrap()].source, arrows[p[0]].target)
    };
    let first = ends(&terms[0].1);
    for (_, p) in &terms[1..] {
        if ends(p) != first {
            return Err(QuiverError::NonComposable {
                line,
                path: "terms with different sources or targets".into(),
            });
        }
    }
    Ok(Relation { terms, line })
}

/// Coefficient grammar: optional sign, `*`-separated factors, each a
/// rational literal or `param[^INT]`, with an optional trailing `/INT`.
fn parse_coeff(
    line: usize,
    token: &str,
    field: Field,
    params: &BTreeMap<String, Scalar>,
) -> Result<Scalar, QuiverError> {
    let mut s = token;
    let mut acc = field.one();
    if let Some(rest) = s.strip_prefix('-') {
        acc = acc.neg();
        s = rest;
    }
    // A trailing /INT divides the whole product.
    let mut denom: Option<&str> = None;
    if let Some((head, d)) = s.rsplit_once('/') {
        if !head.contains('/') {
            denom = Some(d);
            s = head;
        }
    }
    for factor in s.split('*') {
        let (base, exp) = match factor.split_once('^') {
            Some((b, e)) => {
                let e: i64 = e.parse().map_err(|_| QuiverError::Syntax {
                    line,
                    msg: format!("bad exponent in {factor:?}"),
                })?;
                (b, e)
            }
            None => (factor, 1),
        };
        let value = if let Some(v) = params.get(base) {
            v.clone()
        } else if let Some(v) = Scalar::parse(field, base) {
            v
        } else if base.chars().all(|c| c.is_alphanumeric() || c == '_')
            && base.chars().next().is_some_and(char::is_alphabetic)
        {
            return Err(QuiverError::UnboundParam { line, name: base.to_string() });
        } else {
            return Err(QuiverError::Syntax { line, msg: format!("bad coefficient {token:?}") });
        };
        acc = acc.mul(&value.pow(exp));
    }
    if let Some(d) = denom {
        let dv = Scalar::parse(field, d).ok_or(QuiverError::Syntax {
            line,
            msg: format!("bad denominator in {token:?}"),
        })?;
        acc = acc.div(&dv);
    }
    Ok(acc)
}

/// A path monomial in the compiled quotient basis.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum PathMonomial {
    /// Trivial path at a vertex.
    Trivial(usize),
    /// Arrow indices in writing order.
    Path(Vec<usize>),
}

/// The surviving path monomials forming a basis of the quotient, plus the
/// reduction data needed to renormalize arbitrary paths.
#[derive(Clone, Debug)]
pub struct PathBasis {
    pub monomials: Vec<PathMonomial>,
    /// Length at which every path falls into the ideal.
    pub cutoff: usize,
    /// All paths of length <= cutoff in enumeration order, and the basis
    /// of the truncated ideal, kept for normal-form queries.
    all_paths: Vec<PathMonomial>,
    ideal: Matrix,
    basis_cols: Vec<usize>,
}

pub const DEFAULT_LENGTH_BOUND: usize = 12;

/// Compiles a presentation to a multiplication table.
///
/// Spans the two-sided ideal inside truncated path spaces of growing
/// length, stops at the first length where every path of that length lies
/// in the span, and picks the lexicographically least surviving monomials
/// (greatest monomials are eliminated first) as the quotient basis.
pub fn build_path_algebra(
    p: &QuiverPresentation,
    length_bound: usize,
) -> Result<(std::sync::Arc<Algebra>, PathBasis), QuiverError> {
    let field = p.field;
    // Enumerate composable paths by length; paths of one length are in
    // lexicographic order by arrow indices.
    let mut by_length: Vec<Vec<Vec<usize>>> = vec![Vec::new()]; // index 0 unused for arrows
    let mut cutoff = None;
    for l in 1..=length_bound {
        let prev: Vec<Vec<usize>> = if l == 1 {
            vec![Vec::new()]
        } else {
            by_length[l - 1].clone()
        };
        let mut cur = Vec::new();
        // Extend on the right in writing order (append the earlier arrow).
        for stem in &prev {
            for (i, a) in p.arrows.iter().enumerate() {
                if let Some(&last) = stem.last() {
                    if p.arrows[last].source != a.target {
                        continue;
                    }
                }
                let mut path = stem.clone();
                path.push(i);
                cur.push(path);
            }
        }
        // Restore lexicographic order by full sequence.
        cur.sort();
        by_length.push(cur);
        // Coordinate space of all paths of length <= l: trivial paths,
        // then length 1, 2, ... each lexicographic.
        let paths = collect_paths(p, &by_length, l);
        let index: BTreeMap<&PathMonomial, usize> =
            paths.iter().enumerate().map(|(i, m)| (m, i)).collect();
        // Ideal span: u · r · w for all relations r and paths u, w
        // (including trivial) with total length <= l.
        let mut gens: Vec<Vec<Scalar>> = Vec::new();
        for rel in &p.relations {
            let rel_lens: Vec<usize> = rel.terms.iter().map(|(_, t)| t.len()).collect();
            let max_rel = *rel_lens.iter().max().unwrap();
            if max_rel > l {
                continue;
            }
            let (rel_src, rel_tgt) = {
                let t = &rel.terms[0].1;
                (p.arrows[*t.last().unwrap()].source, p.arrows[t[0]].target)
            };
            // u ends where the relation's target is; w starts at its source.
            for u_len in 0..=l.saturating_sub(max_rel) {
                for w_len in 0..=(l - max_rel - u_len) {
                    for u in paths_of_length(p, &by_length, u_len) {
                        if path_source(p, &u) != rel_tgt {
                            continue;
                        }
                        for w in paths_of_length(p, &by_length, w_len) {
                            if path_target(p, &w) != rel_src {
                                continue;
                            }
                            let mut vec = vec![field.zero(); paths.len()];
                            let mut nonzero = false;
                            for (coeff, term) in &rel.terms {
                                // Writing order: u, then term, then w.
                                let mut whole: Vec<usize> = Vec::new();
                                whole.extend(path_arrows(&u));
                                whole.extend(term.iter().copied());
                                whole.extend(path_arrows(&w));
                                let mono = PathMonomial::Path(whole);
                                if let Some(&i) = index.get(&mono) {
                                    vec[i] = vec[i].add(coeff);
                                    nonzero = true;
                                }
                            }
                            if nonzero {
                                gens.push(vec);
                            }
                        }
                    }
                }
            }
        }
        let ideal = Matrix::from_columns(paths.len(), field, &gens).column_space_basis();
        // Does every path of length exactly l lie in the ideal?
        let all_in = by_length[l].iter().all(|path| {
            let mono = PathMonomial::Path(path.clone());
            let i = index[&mono];
            let mut v = Matrix::zero(paths.len(), 1, field);
            v.set(i, 0, field.one());
            ideal.contains_column(&v)
        });
        if all_in {
            cutoff = Some((l, paths, ideal));
            break;
        }
    }
    let Some((cutoff, paths, ideal)) = cutoff else {
        return Err(QuiverError::DimensionBlowup { bound: length_bound });
    };
    // Eliminate the monomials that are greatest in application order:
    // longer paths first, ties broken by the arrow sequence read in the
    // order the arrows are applied. A relation like `x*y + q y*x` then
    // keeps `y*x` as the surviving basis monomial.
    let n_paths = paths.len();
    let order_key = |m: &PathMonomial| -> (usize, Vec<usize>, usize) {
        match m {
            PathMonomial::Trivial(v) => (0, Vec::new(), *v),
            PathMonomial::Path(a) => {
                let applied: Vec<usize> = a.iter().rev().copied().collect();
                (a.len(), applied, 0)
            }
        }
    };
    let mut order: Vec<usize> = (0..n_paths).collect();
    order.sort_by_key(|&i| order_key(&paths[i]));
    let mut desc = Matrix::zero(ideal.cols(), n_paths, field);
    for g in 0..ideal.cols() {
        for (c, &i) in order.iter().rev().enumerate() {
            desc.set(g, c, ideal.get(i, g).clone());
        }
    }
    let (_, pivots) = desc.rref();
    let eliminated: std::collections::BTreeSet<usize> =
        pivots.iter().map(|&c| order[n_paths - 1 - c]).collect();
    let basis_cols: Vec<usize> = (0..n_paths).filter(|i| !eliminated.contains(i)).collect();
    let monomials: Vec<PathMonomial> = basis_cols.iter().map(|&i| paths[i].clone()).collect();
    let pb = PathBasis { monomials, cutoff, all_paths: paths, ideal, basis_cols };
    let dim = pb.monomials.len();
    // Multiplication table by reducing concatenations.
    let mut table = vec![vec![vec![field.zero(); dim]; dim]; dim];
    for (i, a) in pb.monomials.iter().enumerate() {
        for (j, b) in pb.monomials.iter().enumerate() {
            table[i][j] = pb.reduce_product(p, a, b, field);
        }
    }
    let labels: Vec<String> = pb
        .monomials
        .iter()
        .map(|m| monomial_label(p, m))
        .collect();
    let mut unit = vec![field.zero(); dim];
    let mut idempotents = Vec::new();
    for (i, m) in pb.monomials.iter().enumerate() {
        if matches!(m, PathMonomial::Trivial(_)) {
            unit[i] = field.one();
            let mut e = vec![field.zero(); dim];
            e[i] = field.one();
            idempotents.push(e);
        }
    }
    // The arrow ideal survives as the radical (admissible presentation).
    let radical: Vec<Vec<Scalar>> = pb
        .monomials
        .iter()
        .enumerate()
        .filter(|(_, m)| matches!(m, PathMonomial::Path(_)))
        .map(|(i, _)| {
            let mut v = vec![field.zero(); dim];
            v[i] = field.one();
            v
        })
        .collect();
    let algebra = Algebra::new(
        p.name.clone(),
        field,
        labels,
        table,
        unit,
        idempotents,
        Some(radical),
    )
    .checked()
    .map_err(|e| QuiverError::Syntax {
        line: 0,
        msg: format!("compiled table failed validation: {e}"),
    })?;
    Ok((algebra, pb))
}

fn collect_paths(
    p: &QuiverPresentation,
    by_length: &[Vec<Vec<usize>>],
    max_len: usize,
) -> Vec<PathMonomial> {
    let mut out: Vec<PathMonomial> = (0..p.vertices.len()).map(PathMonomial::Trivial).collect();
    for l in 1..=max_len {
        out.extend(by_length[l].iter().cloned().map(PathMonomial::Path));
    }
    out
}

fn paths_of_length(
    p: &QuiverPresentation,
    by_length: &[Vec<Vec<usize>>],
    len: usize,
) -> Vec<PathMonomial> {
    if len == 0 {
        (0..p.vertices.len()).map(PathMonomial::Trivial).collect()
    } else {
        by_length[len].iter().cloned().map(PathMonomial::Path).collect()
    }
}

fn path_arrows(m: &PathMonomial) -> Vec<usize> {
    match m {
        PathMonomial::Trivial(_) => Vec::new(),
        PathMonomial::Path(a) => a.clone(),
    }
}

fn path_source(p: &QuiverPresentation, m: &PathMonomial) -> usize {
    match m {
        PathMonomial::Trivial(v) => *v,
        PathMonomial::Path(a) => p.arrows[*a.last().unwrap()].source,
    }
}

fn path_target(p: &QuiverPresentation, m: &PathMonomial) -> usize {
    match m {
        PathMonomial::Trivial(v) => *v,
        PathMonomial::Path(a) => p.arrows[a[0]].target,
    }
}

fn monomial_label(p: &QuiverPresentation, m: &PathMonomial) -> String {
    match m {
        PathMonomial::Trivial(v) => format!("e_{}", p.vertices[*v]),
        PathMonomial::Path(arrows) => {
            let mut s = String::new();
            for (i, &a) in arrows.iter().enumerate() {
                if i > 0 && p.arrows.iter().any(|ar| ar.label.len() > 1) {
                    s.push('*');
                }
                let _ = write!(s, "{}", p.arrows[a].label);
            }
            s
        }
    }
}

impl PathBasis {
    /// Coordinates of a single path monomial in the quotient basis.
    fn reduce_monomial(
        &self,
        mono: &PathMonomial,
        field: Field,
    ) -> Vec<Scalar> {
        let dim = self.monomials.len();
        let arrows_len = match mono {
            PathMonomial::Trivial(_) => 0,
            PathMonomial::Path(a) => a.len(),
        };
        if arrows_len > self.cutoff {
            return vec![field.zero(); dim];
        }
        let idx = self
            .all_paths
            .iter()
            .position(|m| m == mono)
            .expect("path within the truncation");
        let n = self.all_paths.len();
        let mut v = Matrix::zero(n, 1, field);
        v.set(idx, 0, field.one());
        // Solve [ideal | basis] x = v; the basis block of x gives the
        // quotient coordinates.
        let mut basis_block = Matrix::zero(n, self.basis_cols.len(), field);
        for (c, &i) in self.basis_cols.iter().enumerate() {
            basis_block.set(i, c, field.one());
        }
        let system = self.ideal.hstack(&basis_block);
        let sol = system.solve(&v).expect("ideal plus basis spans the truncation");
        (0..dim).map(|c| sol.get(self.ideal.cols() + c, 0).clone()).collect()
    }

    /// Coordinates of a product of two basis monomials.
    fn reduce_product(
        &self,
        p: &QuiverPresentation,
        a: &PathMonomial,
        b: &PathMonomial,
        field: Field,
    ) -> Vec<Scalar> {
        let dim = self.monomials.len();
        if path_source(p, a) != path_target(p, b) {
            return vec![field.zero(); dim];
        }
        let mut arrows = path_arrows(a);
        arrows.extend(path_arrows(b));
        let mono = if arrows.is_empty() {
            PathMonomial::Trivial(path_source(p, b))
        } else {
            PathMonomial::Path(arrows)
        };
        self.reduce_monomial(&mono, field)
    }

    /// Public normal form of an arbitrary composable arrow-label path.
    pub fn path_normal_form(
        &self,
        p: &QuiverPresentation,
        labels: &[&str],
    ) -> Result<Vec<Scalar>, QuiverError> {
        if labels.is_empty() {
            // Only meaningful for a single vertex.
            let mut v = vec![p.field.zero(); self.monomials.len()];
            for (i, m) in self.monomials.iter().enumerate() {
                if matches!(m, PathMonomial::Trivial(_)) {
                    v[i] = p.field.one();
                }
            }
            return Ok(v);
        }
        let mut arrows = Vec::new();
        for l in labels {
            let idx = p
                .arrows
                .iter()
                .position(|a| &a.label == l)
                .ok_or_else(|| QuiverError::UnknownArrow { line: 0, label: l.to_string() })?;
            arrows.push(idx);
        }
        for w in arrows.windows(2) {
            if p.arrows[w[0]].source != p.arrows[w[1]].target {
                return Err(QuiverError::NonComposable { line: 0, path: labels.join("*") });
            }
        }
        Ok(self.reduce_monomial(&PathMonomial::Path(arrows), p.field))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const LOOP_SQUARE_ZERO: &str = "\
quiver dual_numbers
field Q
vertex v
arrow x: v -> v
relation x*x
";

    #[test]
    fn parse_and_compile_dual_numbers() {
        let p = parse_quiver(LOOP_SQUARE_ZERO).unwrap();
        assert_eq!(p.vertices.len(), 1);
        assert_eq!(p.arrows.len(), 1);
        let (a, basis) = build_path_algebra(&p, DEFAULT_LENGTH_BOUND).unwrap();
        assert_eq!(a.dim(), 2);
        assert_eq!(basis.cutoff, 2);
        assert!(a.validate().is_empty());
    }

    #[test]
    fn unknown_arrow_reported() {
        let src = "quiver t\nfield Q\nvertex v\narrow x: v -> v\nrelation x*w\n";
        match parse_quiver(src) {
            Err(QuiverError::UnknownArrow { line, label }) => {
                assert_eq!(line, 5);
                assert_eq!(label, "w");
            }
            other => panic!("expected unknown-arrow, got {other:?}"),
        }
    }

    #[test]
    fn unbound_param_reported() {
        let src = "quiver t\nfield Q\nvertex v\narrow x: v -> v\nrelation q x*x\n";
        match parse_quiver(src) {
            Err(QuiverError::UnboundParam { name, .. }) => assert_eq!(name, "q"),
            other => panic!("expected unbound-param, got {other:?}"),
        }
    }

    #[test]
    fn non_composable_reported() {
        let src = "quiver t\nfield Q\nvertex v w\narrow a: v -> w\nrelation a*a\n";
        match parse_quiver(src) {
            Err(QuiverError::NonComposable { .. }) => {}
            other => panic!("expected non-composable, got {other:?}"),
        }
    }

    #[test]
    fn blowup_detected() {
        // A free loop never stabilizes.
        let src = "quiver free\nfield Q\nvertex v\narrow x: v -> v\n";
        let p = parse_quiver(src).unwrap();
        match build_path_algebra(&p, 5) {
            Err(QuiverError::DimensionBlowup { bound: 5 }) => {}
            other => panic!("expected blowup, got {other:?}"),
        }
    }

    #[test]
    fn coefficient_expressions() {
        let src = "quiver t\nfield Q\nparam q = 2\nvertex v\narrow x: v -> v\narrow y: v -> v\nrelation x*y + q^2/3 y*x\nrelation x*x\nrelation y*y\n";
        let p = parse_quiver(src).unwrap();
        let rel = &p.relations[0];
        assert_eq!(rel.terms[1].0, crate::scalar::rational(4, 3));
    }

    #[test]
    fn normal_form_in_quotient() {
        let p = parse_quiver(LOOP_SQUARE_ZERO).unwrap();
        let (a, basis) = build_path_algebra(&p, DEFAULT_LENGTH_BOUND).unwrap();
        let nf = basis.path_normal_form(&p, &["x", "x"]).unwrap();
        assert!(nf.iter().all(Scalar::is_zero));
        let unit = basis.path_normal_form(&p, &[]).unwrap();
        assert_eq!(&unit, a.unit());
    }

    #[test]
    fn two_vertex_path_algebra() {
        // v --a--> w with no relations: dimension 3 (e_v, e_w, a).
        let src = "quiver a2\nfield Q\nvertex v w\narrow a: v -> w\n";
        let p = parse_quiver(src).unwrap();
        let (alg, _) = build_path_algebra(&p, DEFAULT_LENGTH_BOUND).unwrap();
        assert_eq!(alg.dim(), 3);
        assert!(alg.validate().is_empty());
    }
}
