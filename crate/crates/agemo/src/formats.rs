//! Text formats besides the quiver grammar: the algebra-table format
//! (explicit structure constants) and the builtin-spec mini-language
//! `name:key=value,...` used to address bundled algebras and modules.

use crate::algebra::Algebra;
use crate::scalar::{Field, Scalar};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TableError {
    #[error("line {line}: syntax error: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: bad scalar {token:?}")]
    BadScalar { line: usize, token: String },
    #[error("line {line}: expected {expected} coordinates, got {got}")]
    BadCoordCount { line: usize, expected: usize, got: usize },
    #[error("line {line}: basis index {index} out of range 1..={dim}")]
    IndexOutOfRange { line: usize, index: usize, dim: usize },
    #[error("line {line}: product {i} {j} defined twice")]
    DuplicateProduct { line: usize, i: usize, j: usize },
    #[error("missing {0} directive")]
    Missing(&'static str),
    #[error("invalid algebra: {0}")]
    Invalid(String),
}

/// Parses the algebra-table format:
///
/// ```text
/// algebra NAME
/// field Q            # or Fp
/// basis L1 L2 ... Ln
/// unit COORDS        # n whitespace-separated exact rationals
/// mul i j = COORDS   # coordinates of Li*Lj, 1-based; omitted products are zero
/// idempotents COORDS...   # k*n rationals; defaults to the unit alone
/// radical COORDS...       # optional, r*n rationals
/// ```
///
/// `#` starts a comment. The result is fully validated.
pub fn parse_algebra_table(text: &str) -> Result<Arc<Algebra>, TableError> {
    let mut name: Option<String> = None;
    let mut field = Field::Rational;
    let mut labels: Vec<String> = Vec::new();
    let mut unit: Option<Vec<Scalar>> = None;
    let mut products: Vec<(usize, usize, Vec<Scalar>, usize)> = Vec::new();
    let mut idempotents: Vec<Vec<Scalar>> = Vec::new();
    let mut radical: Vec<Vec<Scalar>> = Vec::new();

    let scalars = |line: usize, field: Field, toks: &[&str]| -> Result<Vec<Scalar>, TableError> {
        toks.iter()
            .map(|t| {
                Scalar::parse(field, t)
                    .ok_or_else(|| TableError::BadScalar { line, token: (*t).into() })
            })
            .collect()
    };
    // Rows of n coordinates each; the directive may carry several rows.
    let rows = |line: usize, dim: usize, coords: Vec<Scalar>| -> Result<Vec<Vec<Scalar>>, TableError> {
        if dim == 0 || coords.len() % dim != 0 || coords.is_empty() {
            return Err(TableError::BadCoordCount { line, expected: dim, got: coords.len() });
        }
        Ok(coords.chunks(dim).map(<[Scalar]>::to_vec).collect())
    };

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match keyword {
            "algebra" => {
                if rest.is_empty() {
                    return Err(TableError::Syntax { line: line_no, msg: "missing algebra name".into() });
                }
                name = Some(rest.to_string());
            }
            "field" => {
                field = crate::quiver::parse_field(rest).ok_or(TableError::Syntax {
                    line: line_no,
                    msg: format!("bad field {rest:?} (expected Q or Fp)"),
                })?;
            }
            "basis" => {
                for l in rest.split_whitespace() {
                    if labels.iter().any(|x| x == l) {
                        return Err(TableError::Syntax {
                            line: line_no,
                            msg: format!("duplicate basis label {l:?}"),
                        });
                    }
                    labels.push(l.to_string());
                }
            }
            "unit" => {
                let v = scalars(line_no, field, &rest.split_whitespace().collect::<Vec<_>>())?;
                if v.len() != labels.len() {
                    return Err(TableError::BadCoordCount {
                        line: line_no,
                        expected: labels.len(),
                        got: v.len(),
                    });
                }
                unit = Some(v);
            }
            "mul" => {
                let (indices, coords) = rest.split_once('=').ok_or(TableError::Syntax {
                    line: line_no,
                    msg: "expected `mul i j = COORDS`".into(),
                })?;
                let idx: Vec<&str> = indices.split_whitespace().collect();
                if idx.len() != 2 {
                    return Err(TableError::Syntax {
                        line: line_no,
                        msg: "expected exactly two basis indices".into(),
                    });
                }
                let parse_index = |t: &str| -> Result<usize, TableError> {
                    let i: usize = t.parse().map_err(|_| TableError::Syntax {
                        line: line_no,
                        msg: format!("bad basis index {t:?}"),
                    })?;
                    if i == 0 || i > labels.len() {
                        return Err(TableError::IndexOutOfRange {
                            line: line_no,
                            index: i,
                            dim: labels.len(),
                        });
                    }
                    Ok(i - 1)
                };
                let (i, j) = (parse_index(idx[0])?, parse_index(idx[1])?);
                let v = scalars(line_no, field, &coords.split_whitespace().collect::<Vec<_>>())?;
                if v.len() != labels.len() {
                    return Err(TableError::BadCoordCount {
                        line: line_no,
                        expected: labels.len(),
                        got: v.len(),
                    });
                }
                if products.iter().any(|&(a, b, _, _)| a == i && b == j) {
                    return Err(TableError::DuplicateProduct { line: line_no, i: i + 1, j: j + 1 });
                }
                products.push((i, j, v, line_no));
            }
            "idempotents" => {
                let v = scalars(line_no, field, &rest.split_whitespace().collect::<Vec<_>>())?;
                idempotents.extend(rows(line_no, labels.len(), v)?);
            }
            "radical" => {
                let v = scalars(line_no, field, &rest.split_whitespace().collect::<Vec<_>>())?;
                radical.extend(rows(line_no, labels.len(), v)?);
            }
            other => {
                return Err(TableError::Syntax {
                    line: line_no,
                    msg: format!("unknown directive {other:?}"),
                });
            }
        }
    }

    let name = name.ok_or(TableError::Missing("algebra"))?;
    if labels.is_empty() {
        return Err(TableError::Missing("basis"));
    }
    let unit = unit.ok_or(TableError::Missing("unit"))?;
    let n = labels.len();
    let mut table = vec![vec![vec![field.zero(); n]; n]; n];
    for (i, j, v, _) in products {
        table[i][j] = v;
    }
    if idempotents.is_empty() {
        idempotents.push(unit.clone());
    }
    let supplied_radical = if radical.is_empty() { None } else { Some(radical) };
    Algebra::new(name, field, labels, table, unit, idempotents, supplied_radical)
        .checked()
        .map_err(|e| TableError::Invalid(e.to_string()))
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpecError {
    #[error("empty spec")]
    Empty,
    #[error("bad spec name {0:?}")]
    BadName(String),
    #[error("bad key=value pair {0:?}")]
    BadPair(String),
    #[error("duplicate key {0:?}")]
    DuplicateKey(String),
    #[error("{name}: missing argument {key:?}")]
    MissingArg { name: String, key: String },
    #[error("{name}: bad value {value:?} for {key:?}")]
    BadValue { name: String, key: String, value: String },
    #[error("{name}: unknown argument {key:?}")]
    UnknownArg { name: String, key: String },
}

/// A parsed `name:key=value,...` builtin spec.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecCall {
    pub name: String,
    pub args: Vec<(String, String)>,
}

impl SpecCall {
    pub fn get(&self, key: &str) -> Option<&str> {
        self.args.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn require(&self, key: &str) -> Result<&str, SpecError> {
        self.get(key).ok_or_else(|| SpecError::MissingArg {
            name: self.name.clone(),
            key: key.into(),
        })
    }

    pub fn rational(&self, key: &str, field: Field) -> Result<Scalar, SpecError> {
        let v = self.require(key)?;
        Scalar::parse(field, v).ok_or_else(|| SpecError::BadValue {
            name: self.name.clone(),
            key: key.into(),
            value: v.into(),
        })
    }

    /// Rejects keys outside the allowed set; callers list what they read.
    pub fn allow_only(&self, keys: &[&str]) -> Result<(), SpecError> {
        for (k, _) in &self.args {
            if !keys.contains(&k.as_str()) {
                return Err(SpecError::UnknownArg { name: self.name.clone(), key: k.clone() });
            }
        }
        Ok(())
    }
}

pub fn parse_spec(s: &str) -> Result<SpecCall, SpecError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(SpecError::Empty);
    }
    let (name, rest) = match s.split_once(':') {
        Some((n, r)) => (n.trim(), Some(r.trim())),
        None => (s, None),
    };
    if name.is_empty() || !name.chars().all(|c| c.is_alphanumeric() || c == '_') {
        return Err(SpecError::BadName(name.into()));
    }
    let mut args: Vec<(String, String)> = Vec::new();
    if let Some(rest) = rest {
        for pair in rest.split(',') {
            let pair = pair.trim();
            if pair.is_empty() {
                return Err(SpecError::BadPair(pair.into()));
            }
            let (k, v) = pair.split_once('=').ok_or_else(|| SpecError::BadPair(pair.into()))?;
            let (k, v) = (k.trim(), v.trim());
            if k.is_empty() || v.is_empty() {
                return Err(SpecError::BadPair(pair.into()));
            }
            if args.iter().any(|(ek, _)| ek == k) {
                return Err(SpecError::DuplicateKey(k.into()));
            }
            args.push((k.to_string(), v.to_string()));
        }
    }
    Ok(SpecCall { name: name.to_string(), args })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational;

    fn tiny_table() -> String {
        // k[x]/(x^2): basis {1, x}.
        "algebra dual_numbers\n\
         field Q\n\
         basis e x\n\
         unit 1 0\n\
         mul 1 1 = 1 0\n\
         mul 1 2 = 0 1\n\
         mul 2 1 = 0 1\n\
         radical 0 1\n"
            .to_string()
    }

    #[test]
    fn parses_dual_numbers() {
        let a = parse_algebra_table(&tiny_table()).unwrap();
        assert_eq!(a.dim(), 2);
        assert_eq!(a.labels(), ["e", "x"]);
        // x*x omitted, hence zero.
        assert!(a.mult(&a.basis_coords(1), &a.basis_coords(1)).iter().all(Scalar::is_zero));
    }

    #[test]
    fn rejects_duplicate_product() {
        let bad = tiny_table() + "mul 2 1 = 0 1\n";
        assert!(matches!(
            parse_algebra_table(&bad),
            Err(TableError::DuplicateProduct { i: 2, j: 1, .. })
        ));
    }

    #[test]
    fn rejects_wrong_coordinate_count() {
        let bad = tiny_table().replace("unit 1 0", "unit 1");
        assert!(matches!(parse_algebra_table(&bad), Err(TableError::BadCoordCount { .. })));
    }

    #[test]
    fn rejects_invalid_table() {
        // Drop unit*x so the table is no longer unital.
        let bad = tiny_table().replace("mul 1 2 = 0 1\n", "");
        assert!(matches!(parse_algebra_table(&bad), Err(TableError::Invalid(_))));
    }

    #[test]
    fn reports_positions() {
        let bad = tiny_table().replace("mul 2 1 = 0 1", "mul 3 1 = 0 1");
        match parse_algebra_table(&bad) {
            Err(TableError::IndexOutOfRange { line, index, dim }) => {
                assert_eq!((line, index, dim), (7, 3, 2));
            }
            other => panic!("expected an index error, got {other:?}"),
        }
    }

    #[test]
    fn spec_round_trip() {
        let s = parse_spec("M:alpha=3").unwrap();
        assert_eq!(s.name, "M");
        assert_eq!(s.rational("alpha", Field::Rational).unwrap(), rational(3, 1));
        let s = parse_spec("lambda:q=-1/3").unwrap();
        assert_eq!(s.rational("q", Field::Rational).unwrap(), rational(-1, 3));
        let s = parse_spec("lambda_dprime").unwrap();
        assert!(s.args.is_empty());
    }

    #[test]
    fn spec_rejects_malformed() {
        assert!(parse_spec("").is_err());
        assert!(parse_spec("M:alpha").is_err());
        assert!(parse_spec("M:alpha=1,alpha=2").is_err());
        assert!(parse_spec("bad name:x=1").is_err());
        assert!(parse_spec("M:=3").is_err());
    }
}
