//! A small compiler from string-diagram terms to linear maps: expression IR,
//! type checking of domain/codomain words, and evaluation by sparse
//! contraction. Compose(e1, e2) reads top-to-bottom: e1 first, then e2.
//!
//! Text syntax: `id[H]`, `c[X,Y]`, `cinv[X,Y]`, bare generator names,
//! `e1 ; e2` (compose, e1 first), `e1 * e2` (tensor), parentheses.

use crate::error::{Error, Result};
use crate::morphism::LinearMorphism;
use crate::yd::{TensorWord, YdObject};
use std::collections::BTreeMap;

#[derive(Debug, Clone)]
pub enum MorphismExpr {
    Id(TensorWord),
    Gen(String),
    /// e2 after e1.
    Compose(Box<MorphismExpr>, Box<MorphismExpr>),
    Tensor(Box<MorphismExpr>, Box<MorphismExpr>),
    Braid(TensorWord, TensorWord),
    BraidInv(TensorWord, TensorWord),
}

impl MorphismExpr {
    pub fn then(self, next: MorphismExpr) -> MorphismExpr {
        MorphismExpr::Compose(Box::new(self), Box::new(next))
    }

    pub fn times(self, other: MorphismExpr) -> MorphismExpr {
        MorphismExpr::Tensor(Box::new(self), Box::new(other))
    }

    pub fn gen(name: impl Into<String>) -> MorphismExpr {
        MorphismExpr::Gen(name.into())
    }
}

/// Frozen name -> morphism bindings, plus named objects for the text syntax.
#[derive(Debug, Clone, Default)]
pub struct GeneratorEnv {
    gens: BTreeMap<String, LinearMorphism>,
    objects: BTreeMap<String, YdObject>,
}

impl GeneratorEnv {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn bind(&mut self, name: impl Into<String>, m: LinearMorphism) -> &mut Self {
        self.gens.insert(name.into(), m);
        self
    }

    pub fn bind_object(&mut self, name: impl Into<String>, o: YdObject) -> &mut Self {
        self.objects.insert(name.into(), o);
        self
    }

    pub fn morphism(&self, name: &str) -> Result<&LinearMorphism> {
        self.gens
            .get(name)
            .ok_or_else(|| Error::UnboundGenerator(name.to_string()))
    }

    pub fn object(&self, name: &str) -> Result<&YdObject> {
        self.objects
            .get(name)
            .ok_or_else(|| Error::UnboundGenerator(name.to_string()))
    }
}

/// Infers (domain, codomain) or reports the offending sub-expression path.
pub fn expr_validate(e: &MorphismExpr, env: &GeneratorEnv) -> Result<(TensorWord, TensorWord)> {
    validate_at(e, env, "top")
}

fn validate_at(
    e: &MorphismExpr,
    env: &GeneratorEnv,
    path: &str,
) -> Result<(TensorWord, TensorWord)> {
    match e {
        MorphismExpr::Id(w) => Ok((w.clone(), w.clone())),
        MorphismExpr::Gen(name) => {
            let m = env.morphism(name)?;
            Ok((m.domain().clone(), m.codomain().clone()))
        }
        MorphismExpr::Compose(e1, e2) => {
            let (d1, c1) = validate_at(e1, env, &format!("{path}.compose.0"))?;
            let (d2, c2) = validate_at(e2, env, &format!("{path}.compose.1"))?;
            if c1 != d2 {
                return Err(Error::TypeMismatch {
                    path: format!("{path}.compose"),
                    detail: format!(
                        "first part ends at {} but second starts at {}",
                        c1.display(),
                        d2.display()
                    ),
                });
            }
            Ok((d1, c2))
        }
        MorphismExpr::Tensor(e1, e2) => {
            let (d1, c1) = validate_at(e1, env, &format!("{path}.tensor.0"))?;
            let (d2, c2) = validate_at(e2, env, &format!("{path}.tensor.1"))?;
            Ok((d1.concat(&d2)?, c1.concat(&c2)?))
        }
        MorphismExpr::Braid(x, y) | MorphismExpr::BraidInv(x, y) => {
            if x.ctx() != y.ctx() {
                return Err(Error::TypeMismatch {
                    path: path.to_string(),
                    detail: "braiding of objects over different contexts".into(),
                });
            }
            match e {
                MorphismExpr::Braid(..) => Ok((x.concat(y)?, y.concat(x)?)),
                _ => Ok((y.concat(x)?, x.concat(y)?)),
            }
        }
    }
}

/// Evaluates a validated expression to an exact sparse matrix.
pub fn expr_evaluate(e: &MorphismExpr, env: &GeneratorEnv) -> Result<LinearMorphism> {
    expr_validate(e, env)?;
    eval_inner(e, env)
}

fn eval_inner(e: &MorphismExpr, env: &GeneratorEnv) -> Result<LinearMorphism> {
    match e {
        MorphismExpr::Id(w) => Ok(LinearMorphism::identity(w.clone())),
        MorphismExpr::Gen(name) => Ok(env.morphism(name)?.clone()),
        MorphismExpr::Compose(e1, e2) => {
            let m1 = eval_inner(e1, env)?;
            let m2 = eval_inner(e2, env)?;
            m2.compose(&m1)
        }
        MorphismExpr::Tensor(e1, e2) => {
            let m1 = eval_inner(e1, env)?;
            let m2 = eval_inner(e2, env)?;
            m1.tensor(&m2)
        }
        MorphismExpr::Braid(x, y) => LinearMorphism::braiding(x, y),
        MorphismExpr::BraidInv(x, y) => LinearMorphism::braiding_inverse(x, y),
    }
}

/// Exact equality of two evaluated diagram sides.
pub fn morphism_equal(f: &LinearMorphism, g: &LinearMorphism) -> Result<bool> {
    f.equals(g)
}

// ---------------------------------------------------------------------------
// text surface syntax

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    LBracket,
    RBracket,
    LParen,
    RParen,
    Comma,
    Semi,
    Star,
}

fn lex(src: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    while let Some(&ch) = chars.peek() {
        match ch {
            c if c.is_whitespace() => {
                chars.next();
            }
            '[' => {
                chars.next();
                out.push(Tok::LBracket);
            }
            ']' => {
                chars.next();
                out.push(Tok::RBracket);
            }
            '(' => {
                chars.next();
                out.push(Tok::LParen);
            }
            ')' => {
                chars.next();
                out.push(Tok::RParen);
            }
            ',' => {
                chars.next();
                out.push(Tok::Comma);
            }
            ';' => {
                chars.next();
                out.push(Tok::Semi);
            }
            '*' => {
                chars.next();
                out.push(Tok::Star);
            }
            c if c.is_alphanumeric() || c == '_' || !c.is_ascii() => {
                let mut s = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_alphanumeric() || c == '_' || c == '\'' || c == '#' || !c.is_ascii() {
                        s.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Tok::Ident(s));
            }
            other => {
                return Err(Error::InvalidInput(format!(
                    "unexpected character `{other}` in expression"
                )))
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    env: &'a GeneratorEnv,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        match self.next() {
            Some(ref got) if *got == t => Ok(()),
            got => Err(Error::InvalidInput(format!(
                "expected {t:?}, found {got:?}"
            ))),
        }
    }

    fn word(&mut self) -> Result<TensorWord> {
        // comma-separated object names inside brackets
        let mut objs: Vec<YdObject> = Vec::new();
        loop {
            match self.next() {
                Some(Tok::Ident(name)) => objs.push(self.env.object(&name)?.clone()),
                got => {
                    return Err(Error::InvalidInput(format!(
                        "expected object, found {got:?}"
                    )))
                }
            }
            match self.peek() {
                Some(Tok::Comma) => {
                    self.pos += 1;
                }
                _ => break,
            }
        }
        let refs: Vec<&YdObject> = objs.iter().collect();
        TensorWord::of(&refs)
    }

    fn atom(&mut self) -> Result<MorphismExpr> {
        match self.next() {
            Some(Tok::LParen) => {
                let e = self.seq()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Some(Tok::Ident(name)) => match name.as_str() {
                "id" => {
                    self.expect(Tok::LBracket)?;
                    let w = self.word()?;
                    self.expect(Tok::RBracket)?;
                    Ok(MorphismExpr::Id(w))
                }
                "c" | "cinv" => {
                    self.expect(Tok::LBracket)?;
                    let x = match self.next() {
                        Some(Tok::Ident(n)) => TensorWord::single(self.env.object(&n)?),
                        got => {
                            return Err(Error::InvalidInput(format!(
                                "expected object, found {got:?}"
                            )))
                        }
                    };
                    self.expect(Tok::Comma)?;
                    let y = match self.next() {
                        Some(Tok::Ident(n)) => TensorWord::single(self.env.object(&n)?),
                        got => {
                            return Err(Error::InvalidInput(format!(
                                "expected object, found {got:?}"
                            )))
                        }
                    };
                    self.expect(Tok::RBracket)?;
                    if name == "c" {
                        Ok(MorphismExpr::Braid(x, y))
                    } else {
                        Ok(MorphismExpr::BraidInv(x, y))
                    }
                }
                _ => Ok(MorphismExpr::Gen(name)),
            },
            got => Err(Error::InvalidInput(format!(
                "expected expression, found {got:?}"
            ))),
        }
    }

    fn ten(&mut self) -> Result<MorphismExpr> {
        let mut e = self.atom()?;
        while matches!(self.peek(), Some(Tok::Star)) {
            self.pos += 1;
            e = e.times(self.atom()?);
        }
        Ok(e)
    }

    fn seq(&mut self) -> Result<MorphismExpr> {
        let mut e = self.ten()?;
        while matches!(self.peek(), Some(Tok::Semi)) {
            self.pos += 1;
            e = e.then(self.ten()?);
        }
        Ok(e)
    }
}

/// Parses the textual surface syntax against an environment.
pub fn parse_expr(src: &str, env: &GeneratorEnv) -> Result<MorphismExpr> {
    let toks = lex(src)?;
    let mut p = Parser { toks, pos: 0, env };
    let e = p.seq()?;
    if p.pos != p.toks.len() {
        return Err(Error::InvalidInput(format!(
            "trailing tokens after expression: {:?}",
            &p.toks[p.pos..]
        )));
    }
    Ok(e)
}
