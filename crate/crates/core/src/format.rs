//! Plain-text formats. Lines starting with `#` and blank lines are skipped;
//! errors carry 1-based line numbers.
//!
//! * graph: `n e`, then `e` lines `u v`
//! * scheme: `n rank`, then `n` rows of `n` colors
//! * arc model: `m n`, then `n` lines `start size`

use std::fmt::Write as _;

use crate::arc::{Arc, ArcFunction};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scheme::CoherentConfiguration;

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            inner: text.lines().enumerate(),
            last: 0,
        }
    }

    /// Next content line split into numbers.
    fn numbers(&mut self, what: &str) -> Result<(usize, Vec<usize>)> {
        for (i, line) in self.inner.by_ref() {
            let line = line.trim();
            self.last = i + 1;
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let nums = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>().map_err(|_| Error::Parse {
                        line: i + 1,
                        msg: format!("expected a non-negative integer, found {t:?}"),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            return Ok((i + 1, nums));
        }
        Err(Error::Parse {
            line: self.last + 1,
            msg: format!("unexpected end of input, expected {what}"),
        })
    }

    fn fixed<const N: usize>(&mut self, what: &str) -> Result<(usize, [usize; N])> {
        let (line, nums) = self.numbers(what)?;
        let arr: [usize; N] = nums.try_into().map_err(|v: Vec<usize>| Error::Parse {
            line,
            msg: format!("expected {N} numbers ({what}), found {}", v.len()),
        })?;
        Ok((line, arr))
    }

    fn finish(&mut self) -> Result<()> {
        match self.numbers("") {
            Ok((line, _)) => Err(Error::Parse {
                line,
                msg: "unexpected trailing content".into(),
            }),
            Err(_) => Ok(()),
        }
    }
}

fn at_line(line: usize) -> impl Fn(Error) -> Error {
    move |e| match e {
        e @ Error::Parse { .. } => e,
        other => Error::Parse {
            line,
            msg: other.to_string(),
        },
    }
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = Lines::new(text);
    let (header, [n, e]) = lines.fixed::<2>("header `n e`")?;
    if n == 0 {
        return Err(at_line(header)(Error::EmptyVertexSet));
    }
    let mut g = Graph::empty(n);
    for _ in 0..e {
        let (line, [u, v]) = lines.fixed::<2>("edge `u v`")?;
        let err = at_line(line);
        if u >= n || v >= n {
            return Err(err(Error::VertexOutOfRange { vertex: u.max(v), n }));
        }
        if u == v {
            return Err(err(Error::LoopEdge(u)));
        }
        if g.adjacent(u, v) {
            return Err(err(Error::DuplicateEdge(u, v)));
        }
        g.set(u, v);
    }
    lines.finish()?;
    Ok(g)
}

pub fn write_graph(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_scheme(text: &str) -> Result<CoherentConfiguration> {
    let mut lines = Lines::new(text);
    let (header, [n, rank]) = lines.fixed::<2>("header `n rank`")?;
    if n == 0 {
        return Err(at_line(header)(Error::EmptyVertexSet));
    }
    let mut colors = Vec::with_capacity(n * n);
    for _ in 0..n {
        let (line, row) = lines.numbers("color row")?;
        if row.len() != n {
            return Err(Error::Parse {
                line,
                msg: format!("expected {n} colors, found {}", row.len()),
            });
        }
        if let Some(c) = row.iter().find(|&&c| c >= rank) {
            return Err(Error::Parse {
                line,
                msg: format!("color {c} not below rank {rank}"),
            });
        }
        colors.extend(row);
    }
    lines.finish()?;
    let cfg = CoherentConfiguration::from_colors(n, &colors).map_err(at_line(header))?;
    if cfg.rank() != rank {
        return Err(Error::Parse {
            line: header,
            msg: format!("header rank {rank}, matrix uses {} colors", cfg.rank()),
        });
    }
    if cfg.colors() != colors.as_slice() {
        return Err(Error::Parse {
            line: header,
            msg: "colors are not numbered by first occurrence".into(),
        });
    }
    Ok(cfg)
}

pub fn write_scheme(cfg: &CoherentConfiguration) -> String {
    let n = cfg.n();
    let mut out = format!("{} {}\n", n, cfg.rank());
    for row in cfg.colors().chunks(n) {
        let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_arc_model(text: &str) -> Result<ArcFunction> {
    let mut lines = Lines::new(text);
    let (header, [m, n]) = lines.fixed::<2>("header `m n`")?;
    let mut arcs = Vec::with_capacity(n);
    for _ in 0..n {
        let (_, [start, size]) = lines.fixed::<2>("arc `start size`")?;
        arcs.push(Arc::new(start, size));
    }
    lines.finish()?;
    // arc conditions concern the model as a whole; report them at the header
    ArcFunction::new(m, arcs).map_err(|e| match e {
        e @ Error::Arc { .. } => e,
        other => at_line(header)(other),
    })
}

pub fn write_arc_model(f: &ArcFunction) -> String {
    let mut out = format!("{} {}\n", f.m(), f.n_vertices());
    for a in f.arcs() {
        let _ = writeln!(out, "{} {}", a.start, a.size);
    }
    out
}
