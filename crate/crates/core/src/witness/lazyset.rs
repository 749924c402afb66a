//! Sets of `G^∞` vertices given by finite descriptors.
//!
//! Text syntax:
//!
//! ```text
//! [0, 1.0, 3.2.0]          finite list
//! (1,2)* . {0,3} . 0        pattern: repeat-from, one-of, literal
//! (1)* . {0,2,3} . ...      `...` matches any run of entries
//! union(a; b; ...)
//! minus(a; b)
//! out1(region; seeds)       seeds plus their out-neighbors, inside region
//! ```
//!
//! Only valid sequences (nonterminals, then one terminal) are ever members.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ginfty::{SeqVertex, TerminatedDigraph};
use crate::graph::{Vertex, VertexSet};

use super::dfa::Dfa;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Block {
    /// Zero or more entries from the set.
    Star(VertexSet),
    /// Exactly one entry from the set.
    One(VertexSet),
    /// Any run of entries, possibly empty.
    Any,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LazySet {
    Finite(Vec<SeqVertex>),
    Pattern(Vec<Block>),
    Union(Vec<LazySet>),
    Minus(Box<LazySet>, Box<LazySet>),
    Out1 { region: Box<LazySet>, seeds: Box<LazySet> },
}

impl LazySet {
    pub fn empty() -> LazySet {
        LazySet::Finite(Vec::new())
    }

    /// Every vertex of `G^∞`.
    pub fn everything() -> LazySet {
        LazySet::Pattern(vec![Block::Any])
    }

    pub fn union(parts: impl IntoIterator<Item = LazySet>) -> LazySet {
        LazySet::Union(parts.into_iter().collect())
    }

    pub fn minus(a: LazySet, b: LazySet) -> LazySet {
        LazySet::Minus(Box::new(a), Box::new(b))
    }

    pub fn out1(region: LazySet, seeds: LazySet) -> LazySet {
        LazySet::Out1 {
            region: Box::new(region),
            seeds: Box::new(seeds),
        }
    }

    /// Builds the membership automaton for `td`.
    pub fn compile(&self, td: &TerminatedDigraph) -> Result<Membership> {
        let valid = Dfa::valid(td);
        Ok(Membership {
            dfa: self.to_dfa(td, &valid)?,
        })
    }

    fn to_dfa(&self, td: &TerminatedDigraph, valid: &Dfa) -> Result<Dfa> {
        let n = td.n();
        Ok(match self {
            LazySet::Finite(list) => {
                for s in list {
                    td.check_seq(s)?;
                }
                let words: Vec<Vec<Vertex>> = list.iter().map(|s| s.0.clone()).collect();
                Dfa::finite(&words, valid, n)
            }
            LazySet::Pattern(blocks) => {
                for b in blocks {
                    if let Block::Star(s) | Block::One(s) = b {
                        if let Some(v) = s.iter().find(|&v| v >= n) {
                            return Err(Error::Pattern(format!("{v} is not a vertex of the generator")));
                        }
                    }
                }
                Dfa::pattern(blocks, valid, n)
            }
            LazySet::Union(parts) => {
                let mut acc = Dfa::empty(n);
                for p in parts {
                    acc = Dfa::product(&acc, &p.to_dfa(td, valid)?, n, |a, b| a || b);
                }
                acc
            }
            LazySet::Minus(a, b) => Dfa::product(&a.to_dfa(td, valid)?, &b.to_dfa(td, valid)?, n, |x, y| x && !y),
            LazySet::Out1 { region, seeds } => Dfa::out_step(&region.to_dfa(td, valid)?, &seeds.to_dfa(td, valid)?, td),
        })
    }
}

/// Compiled membership test.
#[derive(Debug, Clone)]
pub struct Membership {
    dfa: Dfa,
}

impl Membership {
    pub fn contains(&self, s: &SeqVertex) -> bool {
        self.dfa.accepts(&s.0)
    }

    pub fn is_empty(&self) -> bool {
        self.dfa.is_empty()
    }
}

fn write_ids(f: &mut fmt::Formatter<'_>, s: &VertexSet) -> fmt::Result {
    for (i, v) in s.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Block::Star(s) => {
                f.write_str("(")?;
                write_ids(f, s)?;
                f.write_str(")*")
            }
            Block::One(s) if s.len() == 1 => write!(f, "{}", s.first().expect("one member")),
            Block::One(s) => {
                f.write_str("{")?;
                write_ids(f, s)?;
                f.write_str("}")
            }
            Block::Any => f.write_str("..."),
        }
    }
}

impl fmt::Display for LazySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |f: &mut fmt::Formatter<'_>, name: &str, parts: &[&LazySet]| {
            write!(f, "{name}(")?;
            for (i, p) in parts.iter().enumerate() {
                if i > 0 {
                    f.write_str("; ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")
        };
        match self {
            LazySet::Finite(list) => {
                f.write_str("[")?;
                for (i, s) in list.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{s}")?;
                }
                f.write_str("]")
            }
            LazySet::Pattern(blocks) if blocks.is_empty() => f.write_str("()*"),
            LazySet::Pattern(blocks) => {
                for (i, b) in blocks.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" . ")?;
                    }
                    write!(f, "{b}")?;
                }
                Ok(())
            }
            LazySet::Union(parts) => list(f, "union", &parts.iter().collect::<Vec<_>>()),
            LazySet::Minus(a, b) => list(f, "minus", &[a, b]),
            LazySet::Out1 { region, seeds } => list(f, "out1", &[region, seeds]),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(usize),
    Word(String),
    Sym(char),
    Ellipsis,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push(Tok::Num(
                text.parse()
                    .map_err(|_| Error::Pattern(format!("number too large: {text}")))?,
            ));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push(Tok::Word(chars[start..i].iter().collect()));
        } else if c == '.' && chars.get(i + 1) == Some(&'.') && chars.get(i + 2) == Some(&'.') {
            out.push(Tok::Ellipsis);
            i += 3;
        } else if "[](){},;*.".contains(c) {
            out.push(Tok::Sym(c));
            i += 1;
        } else {
            return Err(Error::Pattern(format!("unexpected character {c:?}")));
        }
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

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(Error::Pattern(format!("expected `{c}` at token {}", self.pos)))
        }
    }

    fn num(&mut self) -> Result<usize> {
        match self.next() {
            Some(Tok::Num(v)) => Ok(v),
            _ => Err(Error::Pattern(format!(
                "expected a vertex id at token {}",
                self.pos - 1
            ))),
        }
    }

    fn expr(&mut self) -> Result<LazySet> {
        match self.peek().cloned() {
            Some(Tok::Word(w)) => {
                self.pos += 1;
                self.expect('(')?;
                let mut args = vec![self.expr()?];
                while self.eat(';') {
                    args.push(self.expr()?);
                }
                self.expect(')')?;
                match (w.as_str(), args.len()) {
                    ("union", _) => Ok(LazySet::Union(args)),
                    ("minus", 2) => {
                        let b = args.pop().expect("two args");
                        let a = args.pop().expect("two args");
                        Ok(LazySet::minus(a, b))
                    }
                    ("out1", 2) => {
                        let seeds = args.pop().expect("two args");
                        let region = args.pop().expect("two args");
                        Ok(LazySet::out1(region, seeds))
                    }
                    ("minus" | "out1", k) => Err(Error::Pattern(format!("{w} takes 2 arguments, got {k}"))),
                    _ => Err(Error::Pattern(format!("unknown operator {w}"))),
                }
            }
            Some(Tok::Sym('[')) => {
                self.pos += 1;
                let mut list = Vec::new();
                if !self.eat(']') {
                    loop {
                        let mut ids = vec![self.num()?];
                        while self.eat('.') {
                            ids.push(self.num()?);
                        }
                        list.push(SeqVertex(ids));
                        if self.eat(']') {
                            break;
                        }
                        self.expect(',')?;
                    }
                }
                Ok(LazySet::Finite(list))
            }
            _ => {
                let mut blocks = vec![self.block()?];
                while self.eat('.') {
                    blocks.push(self.block()?);
                }
                Ok(LazySet::Pattern(blocks))
            }
        }
    }

    fn id_list(&mut self, close: char) -> Result<VertexSet> {
        let mut s = VertexSet::new();
        if self.eat(close) {
            return Ok(s);
        }
        loop {
            s.insert(self.num()?);
            if self.eat(close) {
                return Ok(s);
            }
            self.expect(',')?;
        }
    }

    fn block(&mut self) -> Result<Block> {
        match self.next() {
            Some(Tok::Num(v)) => Ok(Block::One(VertexSet::singleton(v))),
            Some(Tok::Ellipsis) => Ok(Block::Any),
            Some(Tok::Sym('{')) => Ok(Block::One(self.id_list('}')?)),
            Some(Tok::Sym('(')) => {
                let s = self.id_list(')')?;
                self.expect('*')?;
                Ok(Block::Star(s))
            }
            _ => Err(Error::Pattern(format!(
                "expected a pattern block at token {}",
                self.pos - 1
            ))),
        }
    }
}

impl FromStr for LazySet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser {
            toks: tokenize(s)?,
            pos: 0,
        };
        let e = p.expr()?;
        if p.pos != p.toks.len() {
            return Err(Error::Pattern(format!("trailing input at token {}", p.pos)));
        }
        Ok(e)
    }
}
