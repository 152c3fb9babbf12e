//! Text renderings of an interval representation: an ASCII chart, a DOT
//! diagram of the interval order, and a TikZ picture in the figure style
//! (dark gray for contributory intervals, light gray for blocking ones).

use std::fmt::Write;

use improper::interval::{Rational, Realization};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    Plain,
    Basepoint,
    Contributory,
    Blocking,
}

impl Role {
    pub fn as_str(&self) -> &'static str {
        match self {
            Role::Plain => "",
            Role::Basepoint => "basepoint",
            Role::Contributory => "contributory",
            Role::Blocking => "blocking",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Ascii,
    Dot,
    Tikz,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "ascii" => Ok(Format::Ascii),
            "dot" => Ok(Format::Dot),
            "tikz" => Ok(Format::Tikz),
            other => Err(format!(
                "unknown format {other:?} (expected ascii, dot or tikz)"
            )),
        }
    }
}

pub struct Drawing<'a> {
    pub names: Vec<String>,
    pub realization: &'a Realization,
    pub roles: Vec<Role>,
}

pub fn render(d: &Drawing, format: Format) -> String {
    match format {
        Format::Ascii => ascii(d),
        Format::Dot => dot(d),
        Format::Tikz => tikz(d),
    }
}

/// Rank of each endpoint among all `2n`; ties share a rank.
fn endpoint_ranks(r: &Realization) -> Vec<(usize, usize)> {
    let mut points: Vec<Rational> = r.intervals().iter().flat_map(|&(l, h)| [l, h]).collect();
    points.sort();
    points.dedup();
    let rank = |x: &Rational| points.binary_search(x).unwrap();
    r.intervals()
        .iter()
        .map(|(l, h)| (rank(l), rank(h)))
        .collect()
}

const ASCII_SCALE: usize = 2;

/// One line per interval: `label | ` then `o---o` at twice the endpoint rank.
pub fn ascii(d: &Drawing) -> String {
    let width = d.names.iter().map(|s| s.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (v, &(a, b)) in endpoint_ranks(d.realization).iter().enumerate() {
        let (a, b) = (a * ASCII_SCALE, b * ASCII_SCALE);
        let mut line = format!(
            "{:<width$} | {}o{}o",
            d.names[v],
            " ".repeat(a),
            "-".repeat(b - a - 1)
        );
        let role = d.roles[v].as_str();
        if !role.is_empty() {
            line.push_str("  ");
            line.push_str(role);
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// Hasse diagram of the interval order: `u -> v` when `u` ends before `v`
/// starts and no interval fits between them.
pub fn dot(d: &Drawing) -> String {
    let iv = d.realization.intervals();
    let n = iv.len();
    let before = |u: usize, v: usize| iv[u].1 < iv[v].0;
    let mut out = String::from("digraph interval_order {\n  rankdir=LR;\n  node [shape=box, style=filled, fillcolor=white];\n");
    for v in 0..n {
        let style = match d.roles[v] {
            Role::Plain => "",
            Role::Basepoint => ", penwidth=3",
            Role::Contributory => ", fillcolor=gray35, fontcolor=white",
            Role::Blocking => ", fillcolor=gray75",
        };
        writeln!(
            out,
            "  \"{}\" [label=\"{}\"{style}];",
            d.names[v], d.names[v]
        )
        .unwrap();
    }
    for u in 0..n {
        for v in 0..n {
            if before(u, v) && !(0..n).any(|w| before(u, w) && before(w, v)) {
                writeln!(out, "  \"{}\" -> \"{}\";", d.names[u], d.names[v]).unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}

fn decimal(x: &Rational) -> String {
    let s = format!("{:.6}", *x.numer() as f64 / *x.denom() as f64);
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.into()
    }
}

/// One thick segment per interval, one row each, endpoints as dots.
pub fn tikz(d: &Drawing) -> String {
    let mut out = String::from("\\begin{tikzpicture}[x=1cm, y=0.4cm]\n");
    out.push_str("\\definecolor{light-gray}{gray}{0.75}\n\\definecolor{dark-gray}{gray}{0.35}\n");
    for (v, (l, h)) in d.realization.intervals().iter().enumerate() {
        let y = format!("-{v}");
        let y = if v == 0 { "0".into() } else { y };
        let color = match d.roles[v] {
            Role::Contributory => ", dark-gray",
            Role::Blocking => ", light-gray",
            Role::Plain | Role::Basepoint => "",
        };
        let (l, h) = (decimal(l), decimal(h));
        writeln!(
            out,
            "\\draw [ultra thick, cap=round{color}] ({l},{y}) -- ({h},{y});"
        )
        .unwrap();
        writeln!(out, "\\fill ({l},{y}) circle (2pt) ({h},{y}) circle (2pt);").unwrap();
        writeln!(
            out,
            "\\node [left] at ({l},{y}) {{${}$}};",
            tex_name(&d.names[v])
        )
        .unwrap();
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}

/// `b1` becomes `b_{1}`.
fn tex_name(name: &str) -> String {
    match name.find(|c: char| c.is_ascii_digit()) {
        Some(i) if i > 0 => format!("{}_{{{}}}", &name[..i], &name[i..]),
        _ => name.to_owned(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k2() -> Realization {
        let q = Rational::from_integer;
        Realization::new(vec![(q(0), q(2)), (q(1), q(3))]).unwrap()
    }

    #[test]
    fn k2_ascii_overlaps() {
        let r = k2();
        let d = Drawing {
            names: vec!["0".into(), "1".into()],
            realization: &r,
            roles: vec![Role::Plain; 2],
        };
        assert_eq!(ascii(&d), "0 | o---o\n1 |   o---o\n");
    }

    #[test]
    fn dot_has_no_edges_for_overlap() {
        let r = k2();
        let d = Drawing {
            names: vec!["a".into(), "b".into()],
            realization: &r,
            roles: vec![Role::Basepoint, Role::Plain],
        };
        let text = dot(&d);
        assert!(!text.contains("->"));
        assert!(text.contains("\"a\" [label=\"a\", penwidth=3];"));
    }

    #[test]
    fn decimals() {
        assert_eq!(decimal(&Rational::new(-5, 2)), "-2.5");
        assert_eq!(decimal(&Rational::new(1, 64)), "0.015625");
        assert_eq!(decimal(&Rational::from_integer(3)), "3");
        assert_eq!(tex_name("r2"), "r_{2}");
        assert_eq!(tex_name("z"), "z");
    }
}
