//! Textual group recipes and the corpus file format.
//!
//! Grammar (whitespace is insignificant between tokens):
//!
//! ```text
//! recipe  := raw | call | "[" raw "]"
//! raw     := "degree" INT ";" "gens" [ perm { "," perm } ]
//! perm    := "()" | cycle { cycle }
//! cycle   := "(" INT { INT } ")"
//! call    := IDENT "(" [ arg { "," arg } ] ")"
//! arg     := INT | call | "[" raw "]"
//! ```
//!
//! A raw recipe used as an argument must be bracketed, since its generator
//! list is itself comma-separated.
//!
//! Points in cycles are 1-based. A corpus file starts with the line
//! `codegree-corpus v1`; every other non-blank line that does not start with
//! `#` has the form `label: recipe`.

use std::fmt;
use std::path::Path;

use super::{
    alternating, cyclic, dihedral, direct_product, elementary_abelian, quaternion8,
    semidirect_cyclic, symmetric,
};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::perm::Permutation;

pub const CORPUS_HEADER: &str = "codegree-corpus v1";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recipe {
    Cyclic(u64),
    ElementaryAbelian(u64, u64),
    Dihedral(u64),
    Quaternion8,
    Symmetric(u64),
    Alternating(u64),
    DirectProduct(Box<Recipe>, Box<Recipe>),
    SemidirectCyclic(u64, u64, u64),
    /// Degree and generators as lists of 1-based cycles.
    Raw {
        degree: u64,
        gens: Vec<Vec<Vec<u64>>>,
    },
}

impl Recipe {
    pub fn parse(text: &str) -> Result<Recipe> {
        let mut p = Parser::new(text, 1, 1);
        let r = p.recipe()?;
        p.skip_ws();
        if !p.at_end() {
            return Err(p.error("trailing input"));
        }
        Ok(r)
    }

    pub fn build(&self) -> Result<FiniteGroup> {
        Ok(self.build_with_parts()?.0)
    }

    /// Builds the group; semidirect products also return `(complement, kernel)`.
    pub fn build_with_parts(&self) -> Result<(FiniteGroup, Option<(Subgroup, Subgroup)>)> {
        let g = match self {
            Recipe::Cyclic(n) => cyclic(*n as usize)?,
            Recipe::ElementaryAbelian(p, k) => elementary_abelian(*p, *k as usize)?,
            Recipe::Dihedral(n) => dihedral(*n as usize)?,
            Recipe::Quaternion8 => quaternion8()?,
            Recipe::Symmetric(n) => symmetric(*n as usize)?,
            Recipe::Alternating(n) => alternating(*n as usize)?,
            Recipe::DirectProduct(a, b) => direct_product(&a.build()?, &b.build()?)?,
            Recipe::SemidirectCyclic(m, n, u) => {
                let s = semidirect_cyclic(*m, *n, *u)?;
                return Ok((s.group, Some((s.complement, s.kernel))));
            }
            Recipe::Raw { degree, gens } => {
                let degree = *degree as usize;
                let perms = gens
                    .iter()
                    .map(|cycles| {
                        let zero_based: Vec<Vec<usize>> = cycles
                            .iter()
                            .map(|c| {
                                c.iter()
                                    .map(|&x| {
                                        if x == 0 {
                                            Err(Error::MalformedPermutation(
                                                "points are 1-based".into(),
                                            ))
                                        } else {
                                            Ok(x as usize - 1)
                                        }
                                    })
                                    .collect::<Result<Vec<_>>>()
                            })
                            .collect::<Result<_>>()?;
                        Permutation::from_cycles(degree, &zero_based)
                    })
                    .collect::<Result<Vec<_>>>()?;
                FiniteGroup::from_generators(degree, perms)?
            }
        };
        Ok((g, None))
    }
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Recipe::Cyclic(n) => write!(f, "cyclic({n})"),
            Recipe::ElementaryAbelian(p, k) => write!(f, "elementary_abelian({p}, {k})"),
            Recipe::Dihedral(n) => write!(f, "dihedral({n})"),
            Recipe::Quaternion8 => write!(f, "quaternion8()"),
            Recipe::Symmetric(n) => write!(f, "symmetric({n})"),
            Recipe::Alternating(n) => write!(f, "alternating({n})"),
            Recipe::DirectProduct(a, b) => {
                let arg = |r: &Recipe| match r {
                    Recipe::Raw { .. } => format!("[{r}]"),
                    _ => r.to_string(),
                };
                write!(f, "direct_product({}, {})", arg(a), arg(b))
            }
            Recipe::SemidirectCyclic(m, n, u) => write!(f, "semidirect_cyclic({m}, {n}, {u})"),
            Recipe::Raw { degree, gens } => {
                write!(f, "degree {degree}; gens")?;
                for (i, g) in gens.iter().enumerate() {
                    write!(f, "{}", if i == 0 { " " } else { ", " })?;
                    if g.is_empty() {
                        write!(f, "()")?;
                    }
                    for c in g {
                        let pts: Vec<String> = c.iter().map(u64::to_string).collect();
                        write!(f, "({})", pts.join(" "))?;
                    }
                }
                Ok(())
            }
        }
    }
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col0: usize,
    _src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, line: usize, col0: usize) -> Self {
        Parser {
            chars: src.chars().collect(),
            pos: 0,
            line,
            col0,
            _src: src,
        }
    }

    fn error(&self, message: &str) -> Error {
        Error::Parse {
            line: self.line,
            column: self.col0 + self.pos,
            message: message.to_string(),
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
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
            Err(self.error(&format!("expected `{c}`")))
        }
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a name"));
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn int(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| self.error("integer out of range"))
    }

    fn recipe(&mut self) -> Result<Recipe> {
        self.skip_ws();
        if self.eat('[') {
            let r = self.raw_keyword()?;
            self.expect(']')?;
            return Ok(r);
        }
        let save = self.pos;
        let name = self.ident()?;
        if name == "degree" {
            return self.raw();
        }
        let name_pos = save;
        self.expect('(')?;
        let mut args: Vec<Arg> = Vec::new();
        if !self.eat(')') {
            loop {
                self.skip_ws();
                if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                    args.push(Arg::Int(self.int()?));
                } else {
                    args.push(Arg::Recipe(self.recipe()?));
                }
                if self.eat(')') {
                    break;
                }
                self.expect(',')?;
            }
        }
        let ints = |args: &[Arg], n: usize, p: &Self| -> Result<Vec<u64>> {
            if args.len() != n {
                return Err(p.error(&format!("`{name}` takes {n} arguments")));
            }
            args.iter()
                .map(|a| match a {
                    Arg::Int(v) => Ok(*v),
                    Arg::Recipe(_) => Err(p.error("expected an integer argument")),
                })
                .collect()
        };
        let r = match name.as_str() {
            "cyclic" => Recipe::Cyclic(ints(&args, 1, self)?[0]),
            "elementary_abelian" => {
                let v = ints(&args, 2, self)?;
                Recipe::ElementaryAbelian(v[0], v[1])
            }
            "dihedral" => Recipe::Dihedral(ints(&args, 1, self)?[0]),
            "quaternion8" => {
                ints(&args, 0, self)?;
                Recipe::Quaternion8
            }
            "symmetric" => Recipe::Symmetric(ints(&args, 1, self)?[0]),
            "alternating" => Recipe::Alternating(ints(&args, 1, self)?[0]),
            "semidirect_cyclic" => {
                let v = ints(&args, 3, self)?;
                Recipe::SemidirectCyclic(v[0], v[1], v[2])
            }
            "direct_product" => {
                let mut it = args.into_iter();
                match (it.next(), it.next(), it.next()) {
                    (Some(Arg::Recipe(a)), Some(Arg::Recipe(b)), None) => {
                        Recipe::DirectProduct(Box::new(a), Box::new(b))
                    }
                    _ => return Err(self.error("`direct_product` takes two recipes")),
                }
            }
            _ => {
                self.pos = name_pos;
                return Err(self.error(&format!("unknown constructor `{name}`")));
            }
        };
        Ok(r)
    }

    fn raw_keyword(&mut self) -> Result<Recipe> {
        if self.ident()? != "degree" {
            return Err(self.error("expected `degree`"));
        }
        self.raw()
    }

    fn raw(&mut self) -> Result<Recipe> {
        let degree = self.int()?;
        self.expect(';')?;
        let kw = self.ident()?;
        if kw != "gens" {
            return Err(self.error("expected `gens`"));
        }
        let mut gens = Vec::new();
        self.skip_ws();
        if self.at_end() || matches!(self.peek(), Some(')' | ',' | ']')) {
            return Ok(Recipe::Raw { degree, gens });
        }
        loop {
            gens.push(self.perm()?);
            if !self.eat(',') {
                break;
            }
        }
        Ok(Recipe::Raw { degree, gens })
    }

    fn perm(&mut self) -> Result<Vec<Vec<u64>>> {
        let mut cycles = Vec::new();
        self.expect('(')?;
        if self.eat(')') {
            return Ok(cycles);
        }
        loop {
            let mut c = vec![self.int()?];
            while !self.eat(')') {
                c.push(self.int()?);
            }
            cycles.push(c);
            self.skip_ws();
            if self.peek() != Some('(') {
                return Ok(cycles);
            }
            self.pos += 1;
        }
    }
}

enum Arg {
    Int(u64),
    Recipe(Recipe),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub label: String,
    pub recipe: Recipe,
    pub line: usize,
}

impl CorpusEntry {
    pub fn build(&self) -> Result<FiniteGroup> {
        self.recipe.build()
    }
}

pub fn parse_corpus(text: &str) -> Result<Vec<CorpusEntry>> {
    let mut out: Vec<CorpusEntry> = Vec::new();
    let mut header_seen = false;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if !header_seen {
            if trimmed != CORPUS_HEADER {
                return Err(Error::Parse {
                    line,
                    column: 1,
                    message: format!("expected header `{CORPUS_HEADER}`"),
                });
            }
            header_seen = true;
            continue;
        }
        let Some((label, body)) = raw.split_once(':') else {
            return Err(Error::Parse {
                line,
                column: 1,
                message: "expected `label: recipe`".into(),
            });
        };
        let label = label.trim();
        if label.is_empty() || label.chars().any(char::is_whitespace) {
            return Err(Error::Parse {
                line,
                column: 1,
                message: "labels are non-empty and contain no whitespace".into(),
            });
        }
        if out.iter().any(|e| e.label == label) {
            return Err(Error::Parse {
                line,
                column: 1,
                message: format!("duplicate label `{label}`"),
            });
        }
        let offset = raw.len() - body.len() + 1;
        let mut p = Parser::new(body, line, offset);
        let recipe = p.recipe()?;
        p.skip_ws();
        if !p.at_end() {
            return Err(p.error("trailing input"));
        }
        out.push(CorpusEntry {
            label: label.to_string(),
            recipe,
            line,
        });
    }
    if !header_seen {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: format!("expected header `{CORPUS_HEADER}`"),
        });
    }
    Ok(out)
}

pub fn load_corpus(path: &Path) -> Result<Vec<CorpusEntry>> {
    let text = std::fs::read_to_string(path)?;
    parse_corpus(&text)
}
