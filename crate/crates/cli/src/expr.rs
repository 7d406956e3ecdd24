//! Construction-expression grammar:
//!
//! ```text
//! expr  := FREE(hopf, comod) | TENSOR(expr, expr) | TENSORH(expr, expr)
//!        | HOM(expr, expr)   | TRIVIAL(hopf, n)
//! comod := triv | reg | <object-file>
//! hopf  := <hopf-file>
//! ```
//!
//! File identifiers resolve as given, then with `.hopf` / `.obj` appended,
//! relative to the working directory of the command.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use hopflab::compat::{free, hom_object, tensor, tensor_over_h, trivial, Object, ObjectKind};
use hopflab::error::{Error, Result};
use hopflab::format;
use hopflab::hopf::Hopf;
use hopflab::rep::{regular_comodule, trivial_comodule, ComoduleStructure};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Ident(String),
    Open,
    Close,
    Comma,
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '(' | ')' | ',' => {
                if !cur.is_empty() {
                    out.push(Token::Ident(std::mem::take(&mut cur)));
                }
                out.push(match ch {
                    '(' => Token::Open,
                    ')' => Token::Close,
                    _ => Token::Comma,
                });
            }
            c if c.is_whitespace() => {
                if !cur.is_empty() {
                    out.push(Token::Ident(std::mem::take(&mut cur)));
                }
            }
            c => cur.push(c),
        }
    }
    if !cur.is_empty() {
        out.push(Token::Ident(cur));
    }
    if out.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    Ok(out)
}

pub struct EvalOutcome {
    pub object: Object,
    /// The first Hopf file referenced by path, for the emitted object file.
    pub hopf_path: Option<String>,
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    kind: ObjectKind,
    dir: &'a Path,
    hopf_path: Option<String>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Result<Token> {
        let t = self
            .tokens
            .get(self.pos)
            .cloned()
            .ok_or_else(|| Error::Parse("unexpected end of expression".into()))?;
        self.pos += 1;
        Ok(t)
    }

    fn expect(&mut self, t: Token) -> Result<()> {
        let got = self.next()?;
        if got != t {
            return Err(Error::Parse(format!("expected {t:?}, got {got:?}")));
        }
        Ok(())
    }

    fn resolve_file(&self, name: &str, exts: &[&str]) -> Result<PathBuf> {
        let direct = self.dir.join(name);
        if direct.is_file() {
            return Ok(direct);
        }
        for ext in exts {
            let p = self.dir.join(format!("{name}.{ext}"));
            if p.is_file() {
                return Ok(p);
            }
        }
        Err(Error::Parse(format!("cannot resolve file {name:?}")))
    }

    fn load_hopf(&mut self, name: &str) -> Result<Hopf> {
        let path = self.resolve_file(name, &["hopf"])?;
        if self.hopf_path.is_none() {
            // keep the reference relative to the working directory so the
            // emitted object file is portable and reruns are byte-identical
            let rel = path.strip_prefix(self.dir).unwrap_or(&path);
            self.hopf_path = Some(rel.to_string_lossy().into_owned());
        }
        let data = format::load_hopf_data(&path)?;
        Ok(Arc::new(data.into_hopf()?))
    }

    fn parse_comodule(&mut self, hopf: &Hopf) -> Result<ComoduleStructure> {
        let Token::Ident(name) = self.next()? else {
            return Err(Error::Parse("expected a comodule identifier".into()));
        };
        match name.as_str() {
            "triv" => Ok(trivial_comodule(hopf, 1)),
            "reg" => Ok(regular_comodule(hopf)),
            _ => {
                let path = self.resolve_file(&name, &["obj"])?;
                match format::load_object(&path, Some(hopf.clone()))? {
                    format::LoadedObject::Comodule(c) => Ok(c),
                    format::LoadedObject::Object(o) => Ok(o.comodule().clone()),
                    format::LoadedObject::Module(_) => Err(Error::Parse(format!(
                        "{name:?} is a bare module, not a comodule"
                    ))),
                }
            }
        }
    }

    fn parse_expr(&mut self) -> Result<Object> {
        let Token::Ident(head) = self.next()? else {
            return Err(Error::Parse("expected a constructor or file".into()));
        };
        let upper = head.to_ascii_uppercase();
        if self.peek() == Some(&Token::Open) {
            self.expect(Token::Open)?;
            let obj = match upper.as_str() {
                "FREE" => {
                    let Token::Ident(hname) = self.next()? else {
                        return Err(Error::Parse("FREE expects a hopf file".into()));
                    };
                    let hopf = self.load_hopf(&hname)?;
                    self.expect(Token::Comma)?;
                    let v = self.parse_comodule(&hopf)?;
                    free(&v, self.kind)?
                }
                "TRIVIAL" => {
                    let Token::Ident(hname) = self.next()? else {
                        return Err(Error::Parse("TRIVIAL expects a hopf file".into()));
                    };
                    let hopf = self.load_hopf(&hname)?;
                    self.expect(Token::Comma)?;
                    let Token::Ident(num) = self.next()? else {
                        return Err(Error::Parse("TRIVIAL expects a dimension".into()));
                    };
                    let n: usize = num
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad dimension {num:?}")))?;
                    trivial(&hopf, n, self.kind)
                }
                "TENSOR" | "TENSORH" | "HOM" => {
                    let a = self.parse_expr()?;
                    self.expect(Token::Comma)?;
                    let b = self.parse_expr()?;
                    match upper.as_str() {
                        "TENSOR" => tensor(&a, &b)?,
                        "TENSORH" => tensor_over_h(&a, &b)?.object,
                        _ => hom_object(&a, &b)?.0,
                    }
                }
                other => {
                    return Err(Error::Parse(format!("unknown constructor {other:?}")));
                }
            };
            self.expect(Token::Close)?;
            Ok(obj)
        } else {
            // a bare identifier: an object file
            let path = self.resolve_file(&head, &["obj"])?;
            match format::load_object(&path, None)? {
                format::LoadedObject::Object(o) => {
                    if o.kind() != self.kind {
                        return Err(Error::KindMismatch);
                    }
                    Ok(o)
                }
                _ => Err(Error::Parse(format!("{head:?} is not a full object file"))),
            }
        }
    }
}

pub fn parse_and_eval(expr: &str, kind: ObjectKind, dir: &Path) -> Result<EvalOutcome> {
    let tokens = tokenize(expr)?;
    let mut parser = Parser { tokens, pos: 0, kind, dir, hopf_path: None };
    let object = parser.parse_expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(Error::Parse("trailing tokens after expression".into()));
    }
    Ok(EvalOutcome { object, hopf_path: parser.hopf_path })
}
