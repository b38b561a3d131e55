//! The `.lat` file format: a line-oriented description of a bounded lattice
//! by its elements and cover (Hasse) relation.
//!
//! ```text
//! # five-element example
//! elements: 0 e a b 1
//! covers: 0<e e<a a<1 0<b b<a
//! bottom: 0
//! top: 1
//! ```

use std::fmt;

use unilat::lattice::{build_poset, validate_bounded_lattice, BoundedLattice, LatticeError};

#[derive(Debug)]
pub enum LatFileError {
    Syntax {
        line: usize,
        message: String,
    },
    Lattice(LatticeError),
    BoundMismatch {
        which: &'static str,
        declared: String,
        computed: String,
    },
}

impl fmt::Display for LatFileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatFileError::Syntax { line, message } => {
                write!(f, "syntax error on line {line}: {message}")
            }
            LatFileError::Lattice(e) => write!(f, "{e}"),
            LatFileError::BoundMismatch {
                which,
                declared,
                computed,
            } => write!(
                f,
                "declared {which} '{declared}' but the order computes '{computed}'"
            ),
        }
    }
}

impl std::error::Error for LatFileError {}

impl From<LatticeError> for LatFileError {
    fn from(e: LatticeError) -> Self {
        LatFileError::Lattice(e)
    }
}

pub fn parse_lattice(text: &str) -> Result<BoundedLattice, LatFileError> {
    let mut elements: Option<(usize, Vec<String>)> = None;
    let mut covers: Option<(usize, Vec<(String, String)>)> = None;
    let mut bottom: Option<(usize, String)> = None;
    let mut top: Option<(usize, String)> = None;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let (key, rest) = line.split_once(':').ok_or_else(|| LatFileError::Syntax {
            line: lineno,
            message: "expected 'key: value'".into(),
        })?;
        let rest = rest.trim();
        let dup = |name: &str| LatFileError::Syntax {
            line: lineno,
            message: format!("duplicate '{name}:' directive"),
        };
        match key.trim() {
            "elements" => {
                if elements.is_some() {
                    return Err(dup("elements"));
                }
                let labels: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                if labels.is_empty() {
                    return Err(LatFileError::Syntax {
                        line: lineno,
                        message: "no elements listed".into(),
                    });
                }
                elements = Some((lineno, labels));
            }
            "covers" => {
                if covers.is_some() {
                    return Err(dup("covers"));
                }
                let mut pairs = Vec::new();
                for tok in rest.split_whitespace() {
                    let (a, b) = tok.split_once('<').ok_or_else(|| LatFileError::Syntax {
                        line: lineno,
                        message: format!("cover '{tok}' is not of the form x<y"),
                    })?;
                    if a.is_empty() || b.is_empty() {
                        return Err(LatFileError::Syntax {
                            line: lineno,
                            message: format!("cover '{tok}' is not of the form x<y"),
                        });
                    }
                    pairs.push((a.to_string(), b.to_string()));
                }
                covers = Some((lineno, pairs));
            }
            "bottom" => {
                if bottom.is_some() {
                    return Err(dup("bottom"));
                }
                bottom = Some((lineno, rest.to_string()));
            }
            "top" => {
                if top.is_some() {
                    return Err(dup("top"));
                }
                top = Some((lineno, rest.to_string()));
            }
            other => {
                return Err(LatFileError::Syntax {
                    line: lineno,
                    message: format!("unknown directive '{other}:'"),
                })
            }
        }
    }

    let (_, labels) = elements.ok_or(LatFileError::Syntax {
        line: 0,
        message: "missing 'elements:' directive".into(),
    })?;
    let (_, pairs) = covers.ok_or(LatFileError::Syntax {
        line: 0,
        message: "missing 'covers:' directive".into(),
    })?;
    let (_, bottom) = bottom.ok_or(LatFileError::Syntax {
        line: 0,
        message: "missing 'bottom:' directive".into(),
    })?;
    let (_, top) = top.ok_or(LatFileError::Syntax {
        line: 0,
        message: "missing 'top:' directive".into(),
    })?;

    let poset = build_poset(&labels, &pairs)?;
    let lattice = validate_bounded_lattice(poset)?;
    let computed_bottom = lattice.label(lattice.bottom()).to_string();
    if computed_bottom != bottom {
        return Err(LatFileError::BoundMismatch {
            which: "bottom",
            declared: bottom,
            computed: computed_bottom,
        });
    }
    let computed_top = lattice.label(lattice.top()).to_string();
    if computed_top != top {
        return Err(LatFileError::BoundMismatch {
            which: "top",
            declared: top,
            computed: computed_top,
        });
    }
    Ok(lattice)
}

pub fn serialize_lattice(lattice: &BoundedLattice) -> String {
    let mut out = String::new();
    out.push_str("elements:");
    for label in lattice.labels() {
        out.push(' ');
        out.push_str(label);
    }
    out.push_str("\ncovers:");
    for (a, b) in lattice.covers() {
        out.push(' ');
        out.push_str(lattice.label(a));
        out.push('<');
        out.push_str(lattice.label(b));
    }
    out.push_str("\nbottom: ");
    out.push_str(lattice.label(lattice.bottom()));
    out.push_str("\ntop: ");
    out.push_str(lattice.label(lattice.top()));
    out.push('\n');
    out
}
