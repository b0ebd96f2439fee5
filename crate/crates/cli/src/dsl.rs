//! The line-oriented `.space` format.
//!
//! ```text
//! # comment
//! space S
//! points a b c
//! le a b          # a ≤ b, i.e. a ∈ cl{b}
//! le b c
//! meta source hand-written
//!
//! space T
//! points x y
//! open y          # ∅ and the full set are implicit
//!
//! map f : S -> T
//! send a x
//! ```
//!
//! A space uses either `le` lines or `open` lines, not both. Every point of
//! a map's domain needs exactly one `send`.

use std::collections::HashMap;
use std::fmt::Write as _;

use t0kit::constructions::SpaceMap;
use t0kit::{FiniteSpace, PointSet};

use crate::error::{CliError, CliResult, Span};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Body {
    Opens(Vec<Vec<usize>>),
    Order(Vec<(usize, usize)>),
}

#[derive(Debug, Clone)]
pub struct SpaceDocument {
    pub name: String,
    pub points: Vec<String>,
    pub body: Body,
    pub meta: Vec<(String, String)>,
    pub space: FiniteSpace,
}

impl SpaceDocument {
    pub fn point_index(&self, name: &str) -> Option<usize> {
        self.points.iter().position(|p| p == name)
    }
}

#[derive(Debug, Clone)]
pub struct MapDocument {
    pub name: String,
    pub dom: String,
    pub cod: String,
    pub values: Vec<usize>,
    pub map: SpaceMap,
}

#[derive(Debug, Clone, Default)]
pub struct Document {
    pub spaces: Vec<SpaceDocument>,
    pub maps: Vec<MapDocument>,
}

impl Document {
    pub fn space(&self, name: &str) -> Option<&SpaceDocument> {
        self.spaces.iter().find(|s| s.name == name)
    }
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let code = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in code.char_indices() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push(Token {
                    text: &code[s..i],
                    column: code[..s].chars().count() + 1,
                });
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push(Token {
            text: &code[s..],
            column: code[..s].chars().count() + 1,
        });
    }
    out
}

struct PendingSpace {
    name: String,
    span: Span,
    points: Vec<(String, Span)>,
    opens: Vec<(Vec<usize>, Span)>,
    order: Vec<(usize, usize, Span)>,
    meta: Vec<(String, String)>,
}

struct PendingMap {
    name: String,
    span: Span,
    dom: (String, Span),
    cod: (String, Span),
    sends: Vec<(String, String, Span, Span)>,
}

enum Block {
    Space(PendingSpace),
    Map(PendingMap),
}

struct Parser<'f> {
    file: &'f str,
    doc: Document,
}

impl<'f> Parser<'f> {
    fn err(&self, span: Span, message: impl Into<String>) -> CliError {
        CliError::Parse {
            file: self.file.to_string(),
            span,
            message: message.into(),
        }
    }

    fn finish(&mut self, block: Block) -> CliResult<()> {
        match block {
            Block::Space(s) => self.finish_space(s),
            Block::Map(m) => self.finish_map(m),
        }
    }

    fn finish_space(&mut self, s: PendingSpace) -> CliResult<()> {
        if s.points.is_empty() && (!s.opens.is_empty() || !s.order.is_empty()) {
            return Err(self.err(s.span, format!("space `{}` has no `points` line", s.name)));
        }
        let n = s.points.len();
        let names: Vec<String> = s.points.iter().map(|(p, _)| p.clone()).collect();
        let (space, body) = if !s.opens.is_empty() {
            let family: Vec<PointSet> = s
                .opens
                .iter()
                .map(|(o, _)| PointSet::from_points(n, o.iter().copied()))
                .collect();
            let space = FiniteSpace::from_opens(n, &family).map_err(|e| match e {
                t0kit::Error::NotT0(a, b) => self.err(
                    s.points[a.max(b)].1,
                    format!(
                        "points `{}` and `{}` have the same open neighbourhoods (not T0)",
                        names[a], names[b]
                    ),
                ),
                other => CliError::Core(other),
            })?;
            (space, Body::Opens(s.opens.iter().map(|(o, _)| o.clone()).collect()))
        } else {
            // close under reflexivity and transitivity line by line, so a
            // cycle is reported at the line that closes it
            let mut leq = vec![vec![false; n]; n];
            for (i, row) in leq.iter_mut().enumerate() {
                row[i] = true;
            }
            for &(a, b, span) in &s.order {
                if a != b && leq[b][a] {
                    return Err(self.err(
                        span,
                        format!("`le {} {}` closes a cycle (not a partial order)", names[a], names[b]),
                    ));
                }
                let below: Vec<usize> = (0..n).filter(|&x| leq[x][a]).collect();
                let above: Vec<usize> = (0..n).filter(|&y| leq[b][y]).collect();
                for &x in &below {
                    for &y in &above {
                        leq[x][y] = true;
                    }
                }
            }
            let space = FiniteSpace::from_order(&leq)?;
            (space, Body::Order(s.order.iter().map(|&(a, b, _)| (a, b)).collect()))
        };
        if self.doc.space(&s.name).is_some() || self.doc.maps.iter().any(|m| m.name == s.name) {
            return Err(self.err(s.span, format!("name `{}` is declared twice", s.name)));
        }
        self.doc.spaces.push(SpaceDocument {
            name: s.name,
            points: names,
            body,
            meta: s.meta,
            space,
        });
        Ok(())
    }

    fn finish_map(&mut self, m: PendingMap) -> CliResult<()> {
        let dom = self
            .doc
            .space(&m.dom.0)
            .ok_or_else(|| self.err(m.dom.1, format!("unknown space `{}`", m.dom.0)))?;
        let cod = self
            .doc
            .space(&m.cod.0)
            .ok_or_else(|| self.err(m.cod.1, format!("unknown space `{}`", m.cod.0)))?;
        let mut values: Vec<Option<usize>> = vec![None; dom.points.len()];
        for (a, b, sa, sb) in &m.sends {
            let i = dom
                .point_index(a)
                .ok_or_else(|| self.err(*sa, format!("`{a}` is not a point of `{}`", dom.name)))?;
            let j = cod
                .point_index(b)
                .ok_or_else(|| self.err(*sb, format!("`{b}` is not a point of `{}`", cod.name)))?;
            if values[i].is_some() {
                return Err(self.err(*sa, format!("`{a}` is sent twice")));
            }
            values[i] = Some(j);
        }
        if let Some(i) = values.iter().position(Option::is_none) {
            return Err(self.err(m.span, format!("map `{}` does not send `{}`", m.name, dom.points[i])));
        }
        let values: Vec<usize> = values.into_iter().map(Option::unwrap).collect();
        let map = SpaceMap::new(&dom.space, &cod.space, values.clone())?;
        if self.doc.space(&m.name).is_some() || self.doc.maps.iter().any(|x| x.name == m.name) {
            return Err(self.err(m.span, format!("name `{}` is declared twice", m.name)));
        }
        self.doc.maps.push(MapDocument {
            name: m.name,
            dom: m.dom.0,
            cod: m.cod.0,
            values,
            map,
        });
        Ok(())
    }
}

/// Parses a document; `file` only labels error messages.
pub fn parse_document(file: &str, text: &str) -> CliResult<Document> {
    let mut p = Parser {
        file,
        doc: Document::default(),
    };
    let mut current: Option<Block> = None;
    for (ln, line) in text.lines().enumerate() {
        let toks = tokens(line);
        let Some(head) = toks.first() else { continue };
        let at = |t: &Token| Span {
            line: ln + 1,
            column: t.column,
        };
        let arity = |k: usize| -> CliResult<()> {
            if toks.len() == k {
                Ok(())
            } else {
                Err(p.err(at(head), format!("`{}` takes {} argument(s)", head.text, k - 1)))
            }
        };
        match head.text {
            "space" => {
                arity(2)?;
                if let Some(b) = current.take() {
                    p.finish(b)?;
                }
                current = Some(Block::Space(PendingSpace {
                    name: toks[1].text.to_string(),
                    span: at(&toks[1]),
                    points: Vec::new(),
                    opens: Vec::new(),
                    order: Vec::new(),
                    meta: Vec::new(),
                }));
            }
            "map" => {
                // map NAME : DOM -> COD
                if toks.len() != 6 || toks[2].text != ":" || toks[4].text != "->" {
                    return Err(p.err(at(head), "expected `map NAME : DOMAIN -> CODOMAIN`"));
                }
                if let Some(b) = current.take() {
                    p.finish(b)?;
                }
                current = Some(Block::Map(PendingMap {
                    name: toks[1].text.to_string(),
                    span: at(&toks[1]),
                    dom: (toks[3].text.to_string(), at(&toks[3])),
                    cod: (toks[5].text.to_string(), at(&toks[5])),
                    sends: Vec::new(),
                }));
            }
            "points" | "open" | "le" | "meta" => {
                let Some(Block::Space(s)) = current.as_mut() else {
                    return Err(p.err(at(head), format!("`{}` outside a `space` block", head.text)));
                };
                match head.text {
                    "points" => {
                        if !s.points.is_empty() {
                            return Err(p.err(at(head), "second `points` line"));
                        }
                        for t in &toks[1..] {
                            if s.points.iter().any(|(q, _)| q == t.text) {
                                return Err(p.err(at(t), format!("point `{}` declared twice", t.text)));
                            }
                            s.points.push((t.text.to_string(), at(t)));
                        }
                    }
                    "meta" => {
                        if toks.len() < 2 {
                            return Err(p.err(at(head), "`meta` needs a key"));
                        }
                        let value: Vec<&str> = toks[2..].iter().map(|t| t.text).collect();
                        s.meta.push((toks[1].text.to_string(), value.join(" ")));
                    }
                    kind => {
                        let index: HashMap<&str, usize> =
                            s.points.iter().enumerate().map(|(i, (q, _))| (q.as_str(), i)).collect();
                        let mut ids = Vec::new();
                        for t in &toks[1..] {
                            match index.get(t.text) {
                                Some(&i) => ids.push(i),
                                None => return Err(p.err(at(t), format!("undeclared point `{}`", t.text))),
                            }
                        }
                        if kind == "open" {
                            if !s.order.is_empty() {
                                return Err(p.err(at(head), "`open` after `le` lines; use one or the other"));
                            }
                            s.opens.push((ids, at(head)));
                        } else {
                            arity(3)?;
                            if !s.opens.is_empty() {
                                return Err(p.err(at(head), "`le` after `open` lines; use one or the other"));
                            }
                            s.order.push((ids[0], ids[1], at(head)));
                        }
                    }
                }
            }
            "send" => {
                arity(3)?;
                let Some(Block::Map(m)) = current.as_mut() else {
                    return Err(p.err(at(head), "`send` outside a `map` block"));
                };
                m.sends.push((
                    toks[1].text.to_string(),
                    toks[2].text.to_string(),
                    at(&toks[1]),
                    at(&toks[2]),
                ));
            }
            other => return Err(p.err(at(head), format!("unknown keyword `{other}`"))),
        }
    }
    if let Some(b) = current.take() {
        p.finish(b)?;
    }
    if p.doc.spaces.is_empty() {
        return Err(p.err(Span { line: 1, column: 1 }, "no `space` block"));
    }
    Ok(p.doc)
}

/// Prints a space as `le` lines over its covering pairs.
pub fn print_space(name: &str, points: &[String], x: &FiniteSpace) -> String {
    let mut out = String::new();
    writeln!(out, "space {name}").unwrap();
    if points.is_empty() {
        writeln!(out, "points").unwrap();
    } else {
        writeln!(out, "points {}", points.join(" ")).unwrap();
    }
    for (a, b) in x.covers() {
        writeln!(out, "le {} {}", points[a], points[b]).unwrap();
    }
    out
}

pub fn print_document(doc: &SpaceDocument) -> String {
    let mut out = print_space(&doc.name, &doc.points, &doc.space);
    for (k, v) in &doc.meta {
        writeln!(out, "meta {k} {v}").unwrap();
    }
    out
}

/// `p0 p1 ...`.
pub fn default_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("p{i}")).collect()
}
