//! Edge-list text format.
//!
//! ```text
//! c optional comment
//! p <n> <m>
//! e <u> <v>
//! ```
//!
//! Endpoints are 1-indexed with `u < v`. The writer emits edges in
//! lexicographic order and no comments, so output is byte-identical for
//! equal graphs. The reader accepts either endpoint order, skips blank lines
//! and requires exactly `m` edge lines.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn write(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p {} {}", g.n(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

pub fn parse(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim_end();
        if line.trim().is_empty() || line == "c" || line.starts_with("c ") {
            continue;
        }
        let err = |msg: &str| Error::Parse {
            line: line_no,
            msg: msg.to_string(),
        };
        let mut fields = line.split_whitespace();
        match fields.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(err("duplicate header"));
                }
                let n = number(fields.next(), line_no)?;
                let m = number(fields.next(), line_no)?;
                if fields.next().is_some() {
                    return Err(err("trailing fields in header"));
                }
                header = Some((n, m));
            }
            Some("e") => {
                let (n, _) = header.ok_or_else(|| err("edge before header"))?;
                let u = number(fields.next(), line_no)?;
                let v = number(fields.next(), line_no)?;
                if fields.next().is_some() {
                    return Err(err("trailing fields in edge line"));
                }
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(err(&format!("endpoint out of range 1..={n}")));
                }
                if u == v {
                    return Err(Error::SelfLoop(u - 1));
                }
                edges.push((u - 1, v - 1));
            }
            _ => return Err(err("expected a line starting with 'c ', 'p' or 'e'")),
        }
    }
    let (n, m) = header.ok_or(Error::Parse {
        line: 0,
        msg: "missing header 'p <n> <m>'".into(),
    })?;
    if edges.len() != m {
        return Err(Error::Parse {
            line: 0,
            msg: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    Graph::from_edge_list(n, &edges)
}

fn number(field: Option<&str>, line: usize) -> Result<usize> {
    field
        .ok_or_else(|| Error::Parse {
            line,
            msg: "missing field".into(),
        })?
        .parse()
        .map_err(|_| Error::Parse {
            line,
            msg: "expected a non-negative integer".into(),
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete_multipartite, cycle};
    use proptest::prelude::*;

    #[test]
    fn writes_sorted_one_indexed() {
        let g = Graph::from_edge_list(3, &[(2, 1), (0, 2)]).unwrap();
        assert_eq!(write(&g), "p 3 2\ne 1 3\ne 2 3\n");
    }

    #[test]
    fn reads_comments_and_either_order() {
        let g = parse("c a comment\nc\n\np 4 2\ne 2 1\ne 3 4\n").unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (2, 3)]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse("e 1 2\n"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse("p 3 1\ne 1 4\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(parse("p 3 1\ne 2 2\n"), Err(Error::SelfLoop(1))));
        assert!(matches!(parse("p 3 2\ne 1 2\n"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse("p 3 1\nx 1 2\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(parse("comment\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn fixture_round_trips() {
        for g in [cycle(5), complete_multipartite(&[3, 3, 3]), Graph::empty(4)] {
            assert_eq!(parse(&write(&g)).unwrap(), g);
        }
    }

    proptest! {
        #[test]
        fn round_trip(n in 1usize..70, raw in proptest::collection::vec((0usize..70, 0usize..70), 0..200)) {
            let edges: Vec<_> = raw.into_iter().map(|(a, b)| (a % n, b % n)).filter(|(a, b)| a != b).collect();
            let g = Graph::from_edge_list(n, &edges).unwrap();
            let text = write(&g);
            let back = parse(&text).unwrap();
            prop_assert_eq!(write(&back), text);
            prop_assert_eq!(back, g);
        }
    }
}
