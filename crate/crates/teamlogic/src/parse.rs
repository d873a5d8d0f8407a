//! Surface-syntax parser. Produces the desugared tree directly.
//!
//! Precedence, loosest to tightest: `<~>`; `->` `~>` `-o` (right-assoc);
//! `|` `||` `*` (left-assoc); `&` `&&` (left-assoc); prefix operators.
//! Quantifiers scope as far right as possible.

use crate::error::Error;
use crate::formula::{self, Formula, Term};
use crate::signature::Signature;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    LPar,
    RPar,
    Dot,
    Comma,
    Equal,
    Arrow,   // ->
    MArrow,  // ~>
    LArrow,  // -o
    SIff,    // <~>
    Bang,    // !
    Tilde,   // ~
    Amp,     // &
    AmpAmp,  // &&
    Pipe,    // |
    PipePipe, // ||
    Star,    // *
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { src: src.as_bytes(), pos: 0, line: 1, col: 1 }
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse { line: self.line, col: self.col, msg: msg.to_string() }
    }

    fn bump(&mut self) -> Option<u8> {
        let c = *self.src.get(self.pos)?;
        self.pos += 1;
        if c == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn tokens(mut self) -> Result<Vec<(Tok, usize, usize)>, Error> {
        let mut out = Vec::new();
        while let Some(c) = self.peek() {
            let (line, col) = (self.line, self.col);
            match c {
                b' ' | b'\t' | b'\r' | b'\n' => {
                    self.bump();
                }
                b'(' => {
                    self.bump();
                    out.push((Tok::LPar, line, col));
                }
                b')' => {
                    self.bump();
                    out.push((Tok::RPar, line, col));
                }
                b'.' => {
                    self.bump();
                    out.push((Tok::Dot, line, col));
                }
                b',' => {
                    self.bump();
                    out.push((Tok::Comma, line, col));
                }
                b'=' => {
                    self.bump();
                    out.push((Tok::Equal, line, col));
                }
                b'!' => {
                    self.bump();
                    out.push((Tok::Bang, line, col));
                }
                b'*' => {
                    self.bump();
                    out.push((Tok::Star, line, col));
                }
                b'~' => {
                    self.bump();
                    if self.peek() == Some(b'>') {
                        self.bump();
                        out.push((Tok::MArrow, line, col));
                    } else {
                        out.push((Tok::Tilde, line, col));
                    }
                }
                b'-' => {
                    self.bump();
                    match self.peek() {
                        Some(b'>') => {
                            self.bump();
                            out.push((Tok::Arrow, line, col));
                        }
                        Some(b'o') => {
                            self.bump();
                            out.push((Tok::LArrow, line, col));
                        }
                        _ => return Err(self.err("expected '->' or '-o'")),
                    }
                }
                b'<' => {
                    self.bump();
                    if self.peek() == Some(b'~') {
                        self.bump();
                        if self.peek() == Some(b'>') {
                            self.bump();
                            out.push((Tok::SIff, line, col));
                        } else {
                            return Err(self.err("expected '<~>'"));
                        }
                    } else {
                        return Err(self.err("expected '<~>'"));
                    }
                }
                b'&' => {
                    self.bump();
                    if self.peek() == Some(b'&') {
                        self.bump();
                        out.push((Tok::AmpAmp, line, col));
                    } else {
                        out.push((Tok::Amp, line, col));
                    }
                }
                b'|' => {
                    self.bump();
                    if self.peek() == Some(b'|') {
                        self.bump();
                        out.push((Tok::PipePipe, line, col));
                    } else {
                        out.push((Tok::Pipe, line, col));
                    }
                }
                c if c.is_ascii_alphabetic() || c == b'_' => {
                    let mut name = String::new();
                    while let Some(c) = self.peek() {
                        if c.is_ascii_alphanumeric() || c == b'_' || c == b'\'' {
                            name.push(c as char);
                            self.bump();
                        } else {
                            break;
                        }
                    }
                    out.push((Tok::Ident(name), line, col));
                }
                c => return Err(self.err(&format!("unexpected character '{}'", c as char))),
            }
        }
        Ok(out)
    }
}

struct Parser<'a> {
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
    sig: &'a Signature,
}

impl<'a> Parser<'a> {
    fn err_at(&self, msg: &str) -> Error {
        let (line, col) = self
            .toks
            .get(self.pos)
            .map(|(_, l, c)| (*l, *c))
            .or_else(|| self.toks.last().map(|(_, l, c)| (*l, *c + 1)))
            .unwrap_or((1, 1));
        Error::Parse { line, col, msg: msg.to_string() }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _, _)| t)
    }

    fn peek2(&self) -> Option<&Tok> {
        self.toks.get(self.pos + 1).map(|(t, _, _)| t)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), Error> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err_at(&format!("expected {what}")))
        }
    }

    fn formula(&mut self) -> Result<Formula, Error> {
        let mut f = self.implication()?;
        while self.peek() == Some(&Tok::SIff) {
            self.bump();
            let rhs = self.implication()?;
            f = formula::strong_iff(f, rhs);
        }
        Ok(f)
    }

    fn implication(&mut self) -> Result<Formula, Error> {
        let lhs = self.disjunction()?;
        match self.peek() {
            Some(Tok::Arrow) => {
                self.bump();
                let rhs = self.implication()?;
                Ok(formula::imp(lhs, rhs))
            }
            Some(Tok::MArrow) => {
                self.bump();
                let rhs = self.implication()?;
                Ok(formula::mimp(lhs, rhs))
            }
            Some(Tok::LArrow) => {
                self.bump();
                let rhs = self.implication()?;
                Ok(formula::limp(lhs, rhs))
            }
            _ => Ok(lhs),
        }
    }

    fn disjunction(&mut self) -> Result<Formula, Error> {
        let mut f = self.conjunction()?;
        loop {
            match self.peek() {
                Some(Tok::Pipe) => {
                    self.bump();
                    let rhs = self.conjunction()?;
                    f = formula::or(f, rhs);
                }
                Some(Tok::PipePipe) => {
                    self.bump();
                    let rhs = self.conjunction()?;
                    f = formula::vee(f, rhs);
                }
                Some(Tok::Star) => {
                    self.bump();
                    let rhs = self.conjunction()?;
                    f = formula::tensor(f, rhs);
                }
                _ => return Ok(f),
            }
        }
    }

    fn conjunction(&mut self) -> Result<Formula, Error> {
        let mut f = self.prefix()?;
        loop {
            match self.peek() {
                Some(Tok::Amp) => {
                    self.bump();
                    let rhs = self.prefix()?;
                    f = formula::and(f, rhs);
                }
                Some(Tok::AmpAmp) => {
                    self.bump();
                    let rhs = self.prefix()?;
                    f = formula::wedge(f, rhs);
                }
                _ => return Ok(f),
            }
        }
    }

    // quantifiers are prefix operators: the body is the next prefix-level
    // formula, so composite bodies are parenthesized
    fn quantifier(&mut self, kind: &str) -> Result<Formula, Error> {
        let var = match self.bump() {
            Some(Tok::Ident(v)) => v,
            _ => return Err(self.err_at("expected a variable after the quantifier")),
        };
        self.expect(Tok::Dot, "'.' after the quantified variable")?;
        let body = self.prefix()?;
        Ok(match kind {
            "forall" => formula::forall(&var, body),
            "shriek" => formula::shriek(&var, body),
            _ => formula::exists(&var, body),
        })
    }

    fn prefix(&mut self) -> Result<Formula, Error> {
        match self.peek() {
            Some(Tok::Bang) => {
                self.bump();
                Ok(formula::not(self.prefix()?))
            }
            Some(Tok::Tilde) => {
                self.bump();
                Ok(formula::sneg(self.prefix()?))
            }
            Some(Tok::Ident(name)) => match name.as_str() {
                "box" => {
                    self.bump();
                    Ok(formula::boxf(self.prefix()?))
                }
                "delta" => {
                    self.bump();
                    Ok(formula::delta(self.prefix()?))
                }
                "dia" => {
                    self.bump();
                    Ok(formula::dia(self.prefix()?))
                }
                "forall" | "shriek" | "exists" => {
                    let kind = name.clone();
                    self.bump();
                    self.quantifier(&kind)
                }
                _ => self.atom(),
            },
            _ => self.atom(),
        }
    }

    fn term(&mut self) -> Result<Term, Error> {
        match self.bump() {
            Some(Tok::Ident(name)) => {
                if self.peek() == Some(&Tok::LPar) {
                    let arity = *self
                        .sig
                        .functions
                        .get(&name)
                        .ok_or_else(|| Error::UnknownSymbol(format!("function '{name}'")))?;
                    self.bump();
                    let args = self.term_list()?;
                    if args.len() != arity {
                        return Err(Error::Arity(format!(
                            "function '{name}' expects {arity} arguments, got {}",
                            args.len()
                        )));
                    }
                    Ok(Term::App(name, args))
                } else if self.sig.is_constant(&name) {
                    Ok(Term::Const(name))
                } else if self.sig.functions.contains_key(&name) {
                    Err(Error::Arity(format!("function '{name}' used without arguments")))
                } else {
                    Ok(Term::Var(name))
                }
            }
            _ => Err(self.err_at("expected a term")),
        }
    }

    fn term_list(&mut self) -> Result<Vec<Term>, Error> {
        let mut args = Vec::new();
        if self.peek() == Some(&Tok::RPar) {
            self.bump();
            return Ok(args);
        }
        loop {
            args.push(self.term()?);
            match self.bump() {
                Some(Tok::Comma) => {}
                Some(Tok::RPar) => return Ok(args),
                _ => return Err(self.err_at("expected ',' or ')' in the argument list")),
            }
        }
    }

    fn atom(&mut self) -> Result<Formula, Error> {
        match self.peek().cloned() {
            Some(Tok::LPar) => {
                self.bump();
                let f = self.formula()?;
                self.expect(Tok::RPar, "')'")?;
                // a parenthesized term may still be the left side of '='?
                // terms are never parenthesized in this grammar, so no.
                Ok(f)
            }
            Some(Tok::Ident(name)) => match name.as_str() {
                "T" => {
                    self.bump();
                    Ok(formula::top())
                }
                "F" => {
                    self.bump();
                    Ok(formula::bot())
                }
                "FF" => {
                    self.bump();
                    Ok(formula::strong_bot())
                }
                "NE" => {
                    self.bump();
                    Ok(formula::ne())
                }
                "E" => {
                    self.bump();
                    self.expect(Tok::LPar, "'(' after E")?;
                    let f = self.formula()?;
                    self.expect(Tok::RPar, "')'")?;
                    Ok(formula::esome(f))
                }
                _ => {
                    if self.peek2() == Some(&Tok::LPar) {
                        if self.sig.relations.contains_key(&name) {
                            self.bump();
                            self.bump();
                            let args = self.term_list()?;
                            let arity = self.sig.relations[&name];
                            if args.len() != arity {
                                return Err(Error::Arity(format!(
                                    "relation '{name}' expects {arity} arguments, got {}",
                                    args.len()
                                )));
                            }
                            if self.peek() == Some(&Tok::Equal) {
                                return Err(self.err_at("'=' after a relational atom"));
                            }
                            Ok(Formula::Pred(name, args))
                        } else if self.sig.functions.contains_key(&name) {
                            // a function term: must be an equality atom
                            let lhs = self.term()?;
                            self.expect(Tok::Equal, "'=' after a term")?;
                            let rhs = self.term()?;
                            Ok(Formula::Eq(lhs, rhs))
                        } else {
                            Err(Error::UnknownSymbol(format!("'{name}'")))
                        }
                    } else if self.peek2() == Some(&Tok::Equal) {
                        let lhs = self.term()?;
                        self.bump(); // '='
                        let rhs = self.term()?;
                        Ok(Formula::Eq(lhs, rhs))
                    } else {
                        self.bump();
                        Ok(formula::atom(&name))
                    }
                }
            },
            _ => Err(self.err_at("expected a formula")),
        }
    }
}

/// Parse a formula against a signature. The result is desugared and checked
/// to lie in one of the supported fragments.
pub fn parse(text: &str, sig: &Signature) -> Result<Formula, Error> {
    let toks = Lexer::new(text).tokens()?;
    let mut p = Parser { toks, pos: 0, sig };
    let f = p.formula()?;
    if p.pos != p.toks.len() {
        return Err(p.err_at("trailing input after the formula"));
    }
    f.classify()?;
    Ok(f)
}

/// Parse with the empty signature (propositional and modal formulas).
pub fn parse_prop(text: &str) -> Result<Formula, Error> {
    parse(text, &Signature::empty())
}

/// Parse a bare first-order term against a signature.
pub fn parse_term(text: &str, sig: &Signature) -> Result<Term, Error> {
    let toks = Lexer::new(text).tokens()?;
    let mut p = Parser { toks, pos: 0, sig };
    let t = p.term()?;
    if p.pos != p.toks.len() {
        return Err(p.err_at("trailing input after the term"));
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::*;
    use crate::render::render;

    #[test]
    fn parses_spec_examples() {
        assert_eq!(
            parse_prop("a ~> (b ~> a)").unwrap(),
            mimp(atom("a"), mimp(atom("b"), atom("a")))
        );
        assert_eq!(parse_prop("p * q").unwrap(), sneg(limp(atom("p"), sneg(atom("q")))));
        assert_eq!(parse_prop("dia p").unwrap(), sneg(delta(sneg(atom("p")))));
    }

    #[test]
    fn implication_is_right_associative() {
        assert_eq!(parse_prop("a -> b -> c").unwrap(), parse_prop("a -> (b -> c)").unwrap());
        assert_eq!(parse_prop("a ~> b -> c").unwrap(), mimp(atom("a"), imp(atom("b"), atom("c"))));
    }

    #[test]
    fn disjunction_and_conjunction_group_left() {
        assert_eq!(parse_prop("a | b | c").unwrap(), or(or(atom("a"), atom("b")), atom("c")));
        assert_eq!(
            parse_prop("a * b * c").unwrap(),
            tensor(tensor(atom("a"), atom("b")), atom("c"))
        );
        assert_eq!(parse_prop("a & b | c").unwrap(), or(and(atom("a"), atom("b")), atom("c")));
    }

    #[test]
    fn quantifiers_bind_like_prefix_operators() {
        let f = parse_prop("forall x. x -> y").unwrap();
        assert_eq!(f, imp(forall("x", atom("x")), atom("y")));
        let g = parse_prop("forall x. (x -> y)").unwrap();
        assert_eq!(g, forall("x", imp(atom("x"), atom("y"))));
    }

    #[test]
    fn fo_atoms_need_signature() {
        let sig = Signature {
            relations: [("R".to_string(), 2)].into(),
            functions: [("f".to_string(), 1)].into(),
            constants: vec!["c".to_string()],
        };
        let f = parse("forall x. R(x, f(c))", &sig).unwrap();
        assert_eq!(
            f,
            forall(
                "x",
                Formula::Pred(
                    "R".into(),
                    vec![Term::Var("x".into()), Term::App("f".into(), vec![Term::Const("c".into())])]
                )
            )
        );
        assert!(parse("S(x)", &sig).is_err());
        assert!(parse("R(x)", &sig).is_err());
        assert_eq!(parse("x = x", &sig).unwrap(), Formula::Eq(Term::Var("x".into()), Term::Var("x".into())));
    }

    #[test]
    fn rejects_ill_fragmented_formulas() {
        assert!(parse_prop("!(~p)").is_err());
        assert!(parse_prop("box (forall x. x)").is_err());
    }

    #[test]
    fn reports_position() {
        match parse_prop("p -> (q &") {
            Err(Error::Parse { line: 1, col, .. }) => assert!(col >= 9),
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn round_trips_spec_strings() {
        for s in [
            "a ~> b ~> a",
            "p * q",
            "dia p",
            "NE && ~(NE * NE)",
            "(a -> b) ~> (a ~> b)",
            "p -o q",
            "E(!a)",
            "delta ~p && box q",
            "T || F || FF || NE",
            "forall x. (x * ~y)",
            "shriek x. forall y. (x & y)",
        ] {
            let f = parse_prop(s).unwrap();
            assert_eq!(parse_prop(&render(&f)).unwrap(), f, "round trip of {s}");
        }
    }
}
