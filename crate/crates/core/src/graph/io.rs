//! Plain-text edge lists and completion-set files.
//!
//! Graph files: the first non-comment line is `n m`, followed by `m` lines
//! `u v` with 0-indexed endpoints. Completion files hold one `u v` pair per
//! line under a `# additions=<count>` header. `#` starts a comment anywhere.

use std::fmt::Write as _;

use super::{CompletionSet, Edge, Graph};
use crate::error::{CoverError, Result};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_pair(line_no: usize, line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let tok = it.next().ok_or_else(|| CoverError::Parse {
            line: line_no,
            message: format!("missing {what}"),
        })?;
        tok.parse().map_err(|_| CoverError::Parse {
            line: line_no,
            message: format!("{what} {tok:?} is not a non-negative integer"),
        })
    };
    let a = next("first value")?;
    let b = next("second value")?;
    if it.next().is_some() {
        return Err(CoverError::Parse {
            line: line_no,
            message: "expected exactly two values".into(),
        });
    }
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or(CoverError::Parse {
        line: 1,
        message: "missing `n m` header".into(),
    })?;
    let (n, m) = parse_pair(hl, header)?;
    let mut edges = Vec::with_capacity(m);
    for (no, line) in lines {
        let (a, b) = parse_pair(no, line)?;
        if a == b {
            return Err(CoverError::Parse {
                line: no,
                message: format!("self-loop on {a}"),
            });
        }
        edges.push((a, b));
    }
    if edges.len() != m {
        return Err(CoverError::Parse {
            line: hl,
            message: format!("header announces {m} edges but {} were listed", edges.len()),
        });
    }
    Graph::from_edges(n, edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::with_capacity(12 * (g.m() + 1));
    let _ = writeln!(out, "{} {}", g.n(), g.m());
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.u(), e.v());
    }
    out
}

pub fn parse_completion(text: &str) -> Result<CompletionSet> {
    let mut announced = None;
    for (i, raw) in text.lines().enumerate() {
        if let Some(rest) = raw.trim().strip_prefix('#') {
            if let Some(count) = rest.trim().strip_prefix("additions=") {
                announced = Some(
                    count
                        .trim()
                        .parse::<usize>()
                        .map_err(|_| CoverError::Parse {
                            line: i + 1,
                            message: format!("bad additions count {count:?}"),
                        })?,
                );
            }
        }
    }
    let mut edges = Vec::new();
    for (no, line) in content_lines(text) {
        let (a, b) = parse_pair(no, line)?;
        edges.push(Edge::try_new(a, b).map_err(|_| CoverError::Parse {
            line: no,
            message: format!("self-loop on {a}"),
        })?);
    }
    if let Some(count) = announced {
        if count != edges.len() {
            return Err(CoverError::Parse {
                line: 1,
                message: format!(
                    "header announces {count} additions but {} were listed",
                    edges.len()
                ),
            });
        }
    }
    CompletionSet::from_edges(edges)
}

pub fn write_completion(c: &CompletionSet) -> String {
    let mut out = format!("# additions={}\n", c.len());
    for e in c {
        let _ = writeln!(out, "{} {}", e.u(), e.v());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 4)]).unwrap();
        let text = write_edge_list(&g);
        assert_eq!(text, "5 3\n0 1\n1 2\n2 4\n");
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_edge_list("# a path\n\n3 2\n0 1 # first\n2 1\n").unwrap();
        assert_eq!(g, Graph::path(3));
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(parse_edge_list(""), Err(CoverError::Parse { .. })));
        assert!(matches!(
            parse_edge_list("3 2\n0 1\n"),
            Err(CoverError::Parse { .. })
        ));
        assert!(matches!(
            parse_edge_list("3 1\n0 x\n"),
            Err(CoverError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("3 1\n1 1\n"),
            Err(CoverError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("3 2\n0 1\n1 0\n"),
            Err(CoverError::DuplicatePair(_))
        ));
    }

    #[test]
    fn completion_round_trip() {
        let c = CompletionSet::from_pairs([(0, 2), (4, 3)]).unwrap();
        let text = write_completion(&c);
        assert_eq!(text, "# additions=2\n0 2\n3 4\n");
        assert_eq!(parse_completion(&text).unwrap(), c);
        assert!(parse_completion("# additions=0\n").unwrap().is_empty());
        assert!(parse_completion("# additions=3\n0 1\n").is_err());
    }
}
