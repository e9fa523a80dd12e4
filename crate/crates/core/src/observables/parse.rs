//! Observable mini-language.
//!
//! ```text
//! expr    := term ('+' term)*
//! term    := factor ('*' factor)*
//! factor  := NUMBER | atom | 'del(' expr ')' | '(' expr ')'
//! atom    := 'pstar:' M | 'superp:' M | 'h:' M | 'frak:' M
//!          | 'content:p(' R,… ')' | 'hpsi:p(' R,… ')'
//!          | 'fmu:' PARTS | 'fmujack:' PARTS | 'hrho:' PARTS
//! NUMBER  := ['-'] DIGITS ['/' DIGITS]
//! ```
//!
//! `PARTS` is a comma-separated weakly decreasing list (possibly empty).
//! In `content:p(…)` a zero entry stands for `p̂_0 = |λ|`.

use num_traits::{One, Zero};

use super::Observable;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rat::{parse_rat, Rat};
use crate::symfunc::SymFunc;

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

enum Factor {
    Number(Rat),
    Obs(Observable),
}

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn error(&self, reason: &str) -> Error {
        let token: String = self
            .rest()
            .chars()
            .take_while(|c| !matches!(c, '+' | '*' | ')'))
            .collect();
        let token = if token.is_empty() {
            self.rest()
                .chars()
                .next()
                .map(String::from)
                .unwrap_or_else(|| "<end>".into())
        } else {
            token
        };
        Error::parse(token, reason)
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.error(&format!("expected `{c}`")))
        }
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        let len = self
            .rest()
            .chars()
            .take_while(|&c| f(c))
            .map(char::len_utf8)
            .sum::<usize>();
        self.pos += len;
        &self.src[start..start + len]
    }

    fn expr(&mut self) -> Result<Observable> {
        let mut terms = vec![self.term()?];
        while self.peek() == Some('+') {
            self.pos += 1;
            terms.push(self.term()?);
        }
        if terms.len() == 1 {
            let (c, o) = terms.pop().expect("one term");
            return Ok(if c.is_one() {
                o
            } else {
                Observable::Linear(vec![(c, o)])
            });
        }
        Ok(Observable::Linear(terms))
    }

    fn term(&mut self) -> Result<(Rat, Observable)> {
        let mut coeff = Rat::one();
        let mut factors = Vec::new();
        loop {
            match self.factor()? {
                Factor::Number(c) => coeff *= c,
                Factor::Obs(o) => factors.push(o),
            }
            if self.peek() != Some('*') {
                break;
            }
            self.pos += 1;
        }
        let obs = match factors.len() {
            0 => {
                let c = std::mem::replace(&mut coeff, Rat::one());
                Observable::Const(c)
            }
            1 => factors.pop().expect("one factor"),
            _ => Observable::Product(factors),
        };
        Ok((coeff, obs))
    }

    fn factor(&mut self) -> Result<Factor> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(Factor::Obs(e))
            }
            Some(c) if c == '-' || c.is_ascii_digit() => {
                let start = self.pos;
                if c == '-' {
                    self.pos += 1;
                }
                self.take_while(|c| c.is_ascii_digit() || c == '/');
                let text = &self.src[start..self.pos];
                parse_rat(text).map(Factor::Number)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                let name = self.take_while(|c| c.is_ascii_alphabetic());
                if name == "del" {
                    self.expect('(')?;
                    let e = self.expr()?;
                    self.expect(')')?;
                    return Ok(Factor::Obs(e.del()));
                }
                self.expect(':')
                    .map_err(|_| Error::parse(name, "expected `:` after name"))?;
                self.atom(name, start).map(Factor::Obs)
            }
            _ => Err(self.error("expected a number, an observable or `(`")),
        }
    }

    fn uint(&mut self) -> Result<usize> {
        self.skip_ws();
        let digits = self.take_while(|c| c.is_ascii_digit());
        digits
            .parse()
            .map_err(|_| self.error("expected a nonnegative integer"))
    }

    fn positive(&mut self) -> Result<u32> {
        let start = self.pos;
        let v = self.uint()?;
        if v == 0 {
            return Err(Error::parse(
                &self.src[start..self.pos],
                "index must be at least 1",
            ));
        }
        u32::try_from(v).map_err(|_| Error::parse(&self.src[start..self.pos], "index too large"))
    }

    fn uint_list(&mut self) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        if !matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            return Ok(out);
        }
        out.push(self.uint()?);
        while self.peek() == Some(',') {
            self.pos += 1;
            out.push(self.uint()?);
        }
        Ok(out)
    }

    fn partition(&mut self) -> Result<Partition> {
        let start = self.pos;
        let parts = self.uint_list()?;
        Partition::new(parts)
            .map_err(|e| Error::parse(self.src[start..self.pos].trim(), e.to_string()))
    }

    fn power_list(&mut self) -> Result<Vec<usize>> {
        self.skip_ws();
        if !self.rest().starts_with('p') {
            return Err(self.error("expected `p(` (power-sum index)"));
        }
        self.pos += 1;
        self.expect('(')?;
        let list = self.uint_list()?;
        self.expect(')')?;
        Ok(list)
    }

    fn atom(&mut self, name: &str, start: usize) -> Result<Observable> {
        Ok(match name {
            "pstar" => Observable::PStar(self.positive()?),
            "superp" => Observable::SuperP(self.positive()?),
            "h" => Observable::HCoeff(self.uint()? as u32),
            "frak" => Observable::Frak(self.positive()?),
            "fmu" => Observable::FMu(self.partition()?),
            "fmujack" => Observable::FMuJack(self.partition()?),
            "hrho" => Observable::HProd(self.partition()?),
            "content" => Observable::content_product(&self.power_list()?),
            "hpsi" => {
                let at = self.pos;
                let list = self.power_list()?;
                if list.contains(&0) {
                    return Err(Error::parse(
                        &self.src[at..self.pos],
                        "hpsi indices must be positive",
                    ));
                }
                Observable::HPsi(SymFunc::power_sum(Partition::from_unsorted(list)))
            }
            _ => {
                return Err(Error::parse(
                    &self.src[start..start + name.len()],
                    "unknown observable",
                ))
            }
        })
    }
}

/// Parses an observable expression such as `content:p(2)*hpsi:p(1)+2*frak:3`.
pub fn parse_observable(src: &str) -> Result<Observable> {
    let mut p = Parser { src, pos: 0 };
    if p.peek().is_none() {
        return Err(Error::parse("<end>", "empty observable"));
    }
    let obs = p.expr()?;
    if p.peek().is_some() {
        return Err(p.error("unexpected trailing input"));
    }
    if let Observable::Linear(ts) = &obs {
        if ts.iter().all(|(c, _)| c.is_zero()) && !ts.is_empty() {
            return Ok(Observable::Const(Rat::zero()));
        }
    }
    Ok(obs)
}
