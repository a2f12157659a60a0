//! The `ugg` text format: a header `ugg <n>` and one `u v theta` line per
//! edge, with `0 ≤ u < v < n` and `φ(u,v) = e^{iθ}`. Lines whose first
//! non-blank character is `#` are comments; blank lines are ignored.

use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

use crate::gain::{GainGraph, UnitComplex};
use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    /// 1-based line number; 0 when the input ends before a header.
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

pub fn parse(text: &str) -> Result<GainGraph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines
        .next()
        .ok_or_else(|| err(0, "missing header `ugg <n>`"))?;
    let n = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["ugg", n] => n
            .parse::<usize>()
            .map_err(|_| err(hline, format!("invalid vertex count `{n}`")))?,
        _ => {
            return Err(err(
                hline,
                format!("expected header `ugg <n>`, got `{header}`"),
            ))
        }
    };

    let mut graph = Graph::empty(n);
    let mut gains = Vec::new();
    for (ln, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [u, v, theta] = fields.as_slice() else {
            return Err(err(ln, format!("expected `u v theta`, got `{line}`")));
        };
        let vertex = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| err(ln, format!("invalid vertex `{s}`")))
        };
        let (u, v) = (vertex(u)?, vertex(v)?);
        let theta: f64 = theta
            .parse()
            .map_err(|_| err(ln, format!("invalid angle `{theta}`")))?;
        if u == v {
            return Err(err(ln, format!("self-loop at vertex {u}")));
        }
        if u > v {
            return Err(err(ln, format!("edge {u} {v} must be listed with u < v")));
        }
        if v >= n {
            return Err(err(ln, format!("vertex {v} out of range for n = {n}")));
        }
        if !theta.is_finite() {
            return Err(err(ln, format!("angle `{theta}` is not finite")));
        }
        graph
            .add_edge(u, v)
            .map_err(|_| err(ln, format!("duplicate edge {u} {v}")))?;
        gains.push((u, v, UnitComplex::from_angle(theta)));
    }
    let mut phi = GainGraph::all_ones(graph);
    for (u, v, z) in gains {
        phi.set_gain(u, v, z).expect("edge was just added");
    }
    Ok(phi)
}

/// Angles are printed with 17 significant digits, enough to reproduce every
/// `f64` exactly.
pub fn serialize(phi: &GainGraph) -> String {
    let mut out = format!("ugg {}\n", phi.n());
    for (u, v, z) in phi.gained_edges() {
        writeln!(out, "{u} {v} {:.16e}", z.angle()).expect("writing to a String");
    }
    out
}

pub fn read_file(path: &Path) -> anyhow::Result<GainGraph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| anyhow::anyhow!("cannot read {}: {e}", path.display()))?;
    parse(&text).map_err(|e| anyhow::anyhow!("{}: {e}", path.display()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::NamedGraph;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn parses_k22() {
        let phi = parse("# K22\nugg 4\n0 2 0\n0 3 0\n\n1 2 0\n1 3 0.0\n").unwrap();
        assert_eq!((phi.n(), phi.m()), (4, 4));
        assert_eq!(phi.gain(3, 1), Some(UnitComplex::ONE));
    }

    #[test]
    fn reverse_orientation_is_conjugate() {
        let phi = parse("ugg 2\n0 1 0.5\n").unwrap();
        let z = phi.gain(1, 0).unwrap();
        assert!((z.angle() + 0.5).abs() < 1e-15);
    }

    #[test]
    fn any_real_angle_is_accepted() {
        let phi = parse("ugg 2\n0 1 12.5\n").unwrap();
        assert!(
            (phi.gain(0, 1)
                .unwrap()
                .distance(UnitComplex::from_angle(12.5)))
                < 1e-15
        );
        assert!(parse("ugg 2\n0 1 -7e3\n").is_ok());
    }

    #[test]
    fn errors_carry_line_numbers() {
        for (text, line) in [
            ("ugg 3\n0 1 0\n# c\n1 1 0\n", 4),
            ("ugg 3\n0 5 0\n", 2),
            ("ugg 3\n2 1 0\n", 2),
            ("ugg 3\n0 1 0\n0 1 1\n", 3),
            ("ugg 3\n0 1\n", 2),
            ("ugg 3\n0 1 x\n", 2),
            ("ugg 3\n0 1 NaN\n", 2),
            ("# only\nugh 3\n", 2),
            ("ugg -1\n", 1),
            ("", 0),
        ] {
            let e = parse(text).unwrap_err();
            assert_eq!(e.line, line, "{text:?}: {e}");
        }
        assert!(parse("ugg 3\n1 1 0\n")
            .unwrap_err()
            .to_string()
            .contains("line 2"));
    }

    #[test]
    fn round_trip_preserves_gains() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for g in [
            NamedGraph::Petersen,
            NamedGraph::C6Tilde,
            NamedGraph::Complete(5),
        ] {
            let phi = GainGraph::random_gains(g.build().unwrap(), &mut rng);
            let back = parse(&serialize(&phi)).unwrap();
            assert_eq!(back.graph(), phi.graph());
            for (u, v, z) in phi.gained_edges() {
                assert!(back.gain(u, v).unwrap().distance(z) <= 1e-12);
            }
        }
        let empty = GainGraph::all_ones(Graph::empty(0));
        assert_eq!(parse(&serialize(&empty)).unwrap(), empty);
    }
}
