//! Recursive descent parser.
//!
//! Precedence, loosest first: `<->` (left), `->` (right), `|`, `&`, then the
//! prefix operators `~`, `D{..}`, `C{..}`, `K{..}`, `CD[..]`.

use super::lexer::{tokenize, Spanned, Tok};
use super::{CmpOp, Formula, Group, GroupError, Supergroup, SyntaxError};

/// Parses a formula from its ASCII surface syntax.
pub fn parse(text: &str) -> Result<Formula, SyntaxError> {
    let tokens = tokenize(text)?;
    let mut p = Parser { tokens, pos: 0 };
    let f = p.formula()?;
    p.expect(Tok::Eof, "end of input")?;
    Ok(f)
}

struct Parser {
    tokens: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.tokens[self.pos].tok
    }

    fn col(&self) -> usize {
        self.tokens[self.pos].col
    }

    fn bump(&mut self) -> Spanned {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == tok {
            self.bump();
            true
        } else {
            false
        }
    }

    fn error(&self, expected: &str) -> SyntaxError {
        SyntaxError::Parse {
            col: self.col(),
            expected: expected.to_string(),
            found: self.peek().describe(),
        }
    }

    fn expect(&mut self, tok: Tok, expected: &str) -> Result<(), SyntaxError> {
        if self.eat(&tok) {
            Ok(())
        } else {
            Err(self.error(expected))
        }
    }

    fn formula(&mut self) -> Result<Formula, SyntaxError> {
        let mut lhs = self.implication()?;
        while self.eat(&Tok::DoubleArrow) {
            let rhs = self.implication()?;
            lhs = lhs.iff(rhs);
        }
        Ok(lhs)
    }

    fn implication(&mut self) -> Result<Formula, SyntaxError> {
        let lhs = self.disjunction()?;
        if self.eat(&Tok::Arrow) {
            let rhs = self.implication()?;
            return Ok(lhs.implies(rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Formula, SyntaxError> {
        let mut lhs = self.conjunction()?;
        while self.eat(&Tok::Bar) {
            let rhs = self.conjunction()?;
            lhs = lhs.or(rhs);
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> Result<Formula, SyntaxError> {
        let mut lhs = self.unary()?;
        while self.eat(&Tok::Amp) {
            let rhs = self.unary()?;
            lhs = lhs.and(rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, SyntaxError> {
        match self.peek() {
            Tok::Tilde => {
                self.bump();
                Ok(self.unary()?.not())
            }
            Tok::KwD => {
                self.bump();
                let g = self.group()?;
                Ok(Formula::dk(g, self.unary()?))
            }
            Tok::KwC => {
                self.bump();
                let g = self.group()?;
                Ok(Formula::ck(g, self.unary()?))
            }
            Tok::KwK => {
                self.bump();
                let col = self.col();
                let g = self.group()?;
                if g.len() != 1 {
                    return Err(SyntaxError::NotSingleton {
                        col,
                        count: g.len(),
                    });
                }
                let agent = g.agents()[0].clone();
                Ok(Formula::knows(agent, self.unary()?))
            }
            Tok::KwCd => {
                self.bump();
                let col = self.col();
                self.expect(Tok::LBracket, "'['")?;
                let mut groups = vec![self.group()?];
                while self.eat(&Tok::Semi) {
                    groups.push(self.group()?);
                }
                self.expect(Tok::RBracket, "';' or ']'")?;
                let sg =
                    Supergroup::new(groups).map_err(|source| SyntaxError::Group { col, source })?;
                Ok(Formula::cdk(sg, self.unary()?))
            }
            _ => self.primary(),
        }
    }

    fn primary(&mut self) -> Result<Formula, SyntaxError> {
        match self.peek().clone() {
            Tok::LParen => {
                self.bump();
                let f = self.formula()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(f)
            }
            Tok::LBracket => {
                self.bump();
                let lhs = self.group()?;
                let op = match self.peek() {
                    Tok::Leq => CmpOp::Leq,
                    Tok::Lt => CmpOp::Lt,
                    Tok::EqEq => CmpOp::Eqv,
                    Tok::Hash => CmpOp::Incomp,
                    _ => return Err(self.error("comparison operator '<=', '<', '==' or '#'")),
                };
                self.bump();
                let rhs = self.group()?;
                self.expect(Tok::RBracket, "']'")?;
                Ok(Formula::cmp(op, lhs, rhs))
            }
            Tok::Ident(name) => {
                self.bump();
                Ok(Formula::Atom(name))
            }
            _ => Err(self.error("formula")),
        }
    }

    fn group(&mut self) -> Result<Group, SyntaxError> {
        let col = self.col();
        self.expect(Tok::LBrace, "'{'")?;
        if self.peek() == &Tok::RBrace {
            return Err(SyntaxError::EmptyGroup { col });
        }
        let mut agents = vec![self.ident()?];
        while self.eat(&Tok::Comma) {
            agents.push(self.ident()?);
        }
        self.expect(Tok::RBrace, "',' or '}'")?;
        Group::new(agents).map_err(|source| match source {
            GroupError::Empty => SyntaxError::EmptyGroup { col },
            source => SyntaxError::Group { col, source },
        })
    }

    fn ident(&mut self) -> Result<String, SyntaxError> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.bump();
                Ok(s)
            }
            _ => Err(self.error("agent name")),
        }
    }
}
