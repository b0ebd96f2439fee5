//! Boolean filters over property keys: `!`, `&`, `|`, parentheses.
//! `!` binds tightest, then `&`, then `|`.

use t0kit::properties::Property;
use t0kit::{FiniteSpace, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Prop(Property),
    Not(Box<Expr>),
    And(Box<Expr>, Box<Expr>),
    Or(Box<Expr>, Box<Expr>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String, usize),
    Not(usize),
    And(usize),
    Or(usize),
    Open(usize),
    Close(usize),
}

fn lex(src: &str) -> std::result::Result<Vec<Tok>, String> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (at, c) = chars[i];
        let col = at + 1;
        match c {
            c if c.is_whitespace() => {}
            '!' => out.push(Tok::Not(col)),
            '&' => out.push(Tok::And(col)),
            '|' => out.push(Tok::Or(col)),
            '(' => out.push(Tok::Open(col)),
            ')' => out.push(Tok::Close(col)),
            c if c.is_ascii_alphanumeric() || c == '_' => {
                let start = i;
                while i + 1 < chars.len() && (chars[i + 1].1.is_ascii_alphanumeric() || chars[i + 1].1 == '_') {
                    i += 1;
                }
                let word: String = chars[start..=i].iter().map(|&(_, c)| c).collect();
                out.push(Tok::Ident(word, col));
            }
            other => return Err(format!("column {col}: unexpected `{other}`")),
        }
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn or(&mut self) -> std::result::Result<Expr, String> {
        let mut lhs = self.and()?;
        while let Some(Tok::Or(_)) = self.peek() {
            self.pos += 1;
            lhs = Expr::Or(Box::new(lhs), Box::new(self.and()?));
        }
        Ok(lhs)
    }

    fn and(&mut self) -> std::result::Result<Expr, String> {
        let mut lhs = self.unary()?;
        while let Some(Tok::And(_)) = self.peek() {
            self.pos += 1;
            lhs = Expr::And(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> std::result::Result<Expr, String> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Not(_)) => {
                self.pos += 1;
                Ok(Expr::Not(Box::new(self.unary()?)))
            }
            Some(Tok::Open(col)) => {
                self.pos += 1;
                let e = self.or()?;
                match self.peek() {
                    Some(Tok::Close(_)) => {
                        self.pos += 1;
                        Ok(e)
                    }
                    _ => Err(format!("column {col}: unclosed `(`")),
                }
            }
            Some(Tok::Ident(word, col)) => {
                self.pos += 1;
                Property::from_key(&word).map(Expr::Prop).ok_or_else(|| {
                    let keys: Vec<&str> = Property::ALL.iter().map(|p| p.key()).collect();
                    format!(
                        "column {col}: unknown property `{word}` (expected one of {})",
                        keys.join(", ")
                    )
                })
            }
            Some(t) => Err(format!("column {}: expected a property, `!` or `(`", column(&t))),
            None => Err("unexpected end of expression".into()),
        }
    }
}

fn column(t: &Tok) -> usize {
    match t {
        Tok::Ident(_, c) | Tok::Not(c) | Tok::And(c) | Tok::Or(c) | Tok::Open(c) | Tok::Close(c) => *c,
    }
}

pub fn parse(src: &str) -> std::result::Result<Expr, String> {
    let mut p = Parser {
        toks: lex(src)?,
        pos: 0,
    };
    let e = p.or()?;
    match p.peek() {
        None => Ok(e),
        Some(t) => Err(format!("column {}: unexpected trailing input", column(t))),
    }
}

impl Expr {
    pub fn eval(&self, x: &FiniteSpace) -> Result<bool> {
        Ok(match self {
            Expr::Prop(p) => p.check(x)?.holds,
            Expr::Not(e) => !e.eval(x)?,
            Expr::And(a, b) => a.eval(x)? && b.eval(x)?,
            Expr::Or(a, b) => a.eval(x)? || b.eval(x)?,
        })
    }
}
