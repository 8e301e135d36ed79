//! A tiny expression language for the closed-form integer quantities used by
//! the catalog: polynomials in the rank `l` and characteristic `p`, binomial
//! coefficients, and the divisibility indicator eps(m,n) = 1 iff m | n
//! (with eps(m,0) = 1 for every m, including m = 0).
//!
//! Also provides the small condition grammars used by catalog rows to select
//! characteristics (`all`, `=2,3`, `!=2`) and ranks (`l=3`, `l=2..5`, `l>=4`).

use crate::{NuError, Result};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(i64),
    Rank,
    Char,
    Eps(Box<Expr>, Box<Expr>),
    Binom(Box<Expr>, Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
}

impl Expr {
    /// Evaluate at a concrete rank and characteristic.
    pub fn eval(&self, l: i64, p: i64) -> i64 {
        match self {
            Expr::Int(n) => *n,
            Expr::Rank => l,
            Expr::Char => p,
            Expr::Eps(m, n) => {
                let m = m.eval(l, p);
                let n = n.eval(l, p);
                if n == 0 || (m != 0 && n % m == 0) {
                    1
                } else {
                    0
                }
            }
            Expr::Binom(n, r) => {
                let n = n.eval(l, p);
                let r = r.eval(l, p);
                binom(n, r)
            }
            Expr::Add(a, b) => a.eval(l, p) + b.eval(l, p),
            Expr::Sub(a, b) => a.eval(l, p) - b.eval(l, p),
            Expr::Mul(a, b) => a.eval(l, p) * b.eval(l, p),
            Expr::Pow(a, b) => {
                let base = a.eval(l, p);
                let e = b.eval(l, p);
                assert!(e >= 0, "negative exponent in catalog expression");
                base.pow(e as u32)
            }
            Expr::Neg(a) => -a.eval(l, p),
        }
    }

    pub fn parse(src: &str) -> Result<Expr> {
        let tokens = tokenize(src)?;
        let mut parser = Parser { tokens, pos: 0, src };
        let e = parser.expr()?;
        if parser.pos != parser.tokens.len() {
            return Err(NuError::CatalogParse(format!(
                "trailing input in expression: {src}"
            )));
        }
        Ok(e)
    }
}

pub fn binom(n: i64, r: i64) -> i64 {
    if r < 0 || (n >= 0 && r > n) {
        return 0;
    }
    assert!(n >= 0, "negative upper index in binomial");
    let r = r.min(n - r);
    let mut acc: i128 = 1;
    for i in 0..r {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc as i64
}

/// Decide whether two closed-form expressions agree identically over the
/// stated rank interval, for every characteristic in `ps`. For a fixed
/// characteristic the expression is, on each residue class of l modulo a
/// bounded period, a polynomial in l of low degree; sampling every rank in a
/// long interval is therefore a complete check, not a spot check. Callers
/// pass the interval on which the closed form is claimed.
pub fn exprs_agree(a: &Expr, b: &Expr, l_range: std::ops::RangeInclusive<i64>, ps: &[i64]) -> bool {
    for l in l_range {
        for &p in ps {
            if a.eval(l, p) != b.eval(l, p) {
                return false;
            }
        }
    }
    true
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Rank => write!(f, "l"),
            Expr::Char => write!(f, "p"),
            Expr::Eps(m, n) => write!(f, "eps({m},{n})"),
            Expr::Binom(n, r) => write!(f, "binom({n},{r})"),
            Expr::Add(a, b) => write!(f, "({a}+{b})"),
            Expr::Sub(a, b) => write!(f, "({a}-{b})"),
            Expr::Mul(a, b) => write!(f, "({a}*{b})"),
            Expr::Pow(a, b) => write!(f, "({a}^{b})"),
            Expr::Neg(a) => write!(f, "(-{a})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(i64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Comma,
}

fn tokenize(src: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let bytes: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1;
            }
            '-' => {
                out.push(Tok::Minus);
                i += 1;
            }
            '*' => {
                out.push(Tok::Star);
                i += 1;
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1;
            }
            '(' => {
                out.push(Tok::LParen);
                i += 1;
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1;
            }
            ',' => {
                out.push(Tok::Comma);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = bytes[start..i].iter().collect();
                out.push(Tok::Int(s.parse().map_err(|_| {
                    NuError::CatalogParse(format!("bad integer in expression: {src}"))
                })?));
            }
            'a'..='z' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_alphabetic() {
                    i += 1;
                }
                out.push(Tok::Ident(bytes[start..i].iter().collect()));
            }
            _ => {
                return Err(NuError::CatalogParse(format!(
                    "unexpected character {c:?} in expression: {src}"
                )))
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Tok>,
    pos: usize,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        if self.bump().as_ref() == Some(&t) {
            Ok(())
        } else {
            Err(NuError::CatalogParse(format!(
                "expected {t:?} in expression: {}",
                self.src
            )))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut acc = self.power()?;
        while self.peek() == Some(&Tok::Star) {
            self.bump();
            acc = Expr::Mul(Box::new(acc), Box::new(self.power()?));
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            // right associative
            let exp = self.power()?;
            return Ok(Expr::Pow(Box::new(base), Box::new(exp)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.bump() {
            Some(Tok::Int(n)) => Ok(Expr::Int(n)),
            Some(Tok::Minus) => Ok(Expr::Neg(Box::new(self.atom()?))),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Some(Tok::Ident(name)) => match name.as_str() {
                "l" => Ok(Expr::Rank),
                "p" => Ok(Expr::Char),
                "eps" | "binom" => {
                    self.expect(Tok::LParen)?;
                    let a = self.expr()?;
                    self.expect(Tok::Comma)?;
                    let b = self.expr()?;
                    self.expect(Tok::RParen)?;
                    if name == "eps" {
                        Ok(Expr::Eps(Box::new(a), Box::new(b)))
                    } else {
                        Ok(Expr::Binom(Box::new(a), Box::new(b)))
                    }
                }
                _ => Err(NuError::CatalogParse(format!(
                    "unknown identifier {name:?} in expression: {}",
                    self.src
                ))),
            },
            other => Err(NuError::CatalogParse(format!(
                "unexpected token {other:?} in expression: {}",
                self.src
            ))),
        }
    }
}

/// Characteristic selector for a catalog row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CharCond {
    All,
    In(Vec<i64>),
    NotIn(Vec<i64>),
}

impl CharCond {
    pub fn parse(src: &str) -> Result<CharCond> {
        let s = src.trim();
        if s == "all" {
            return Ok(CharCond::All);
        }
        let (neg, rest) = if let Some(r) = s.strip_prefix("!=") {
            (true, r)
        } else if let Some(r) = s.strip_prefix('=') {
            (false, r)
        } else {
            return Err(NuError::CatalogParse(format!("bad characteristic condition: {src}")));
        };
        let mut vals = Vec::new();
        for part in rest.split(',') {
            vals.push(part.trim().parse::<i64>().map_err(|_| {
                NuError::CatalogParse(format!("bad characteristic condition: {src}"))
            })?);
        }
        Ok(if neg {
            CharCond::NotIn(vals)
        } else {
            CharCond::In(vals)
        })
    }

    pub fn matches(&self, p: i64) -> bool {
        match self {
            CharCond::All => true,
            CharCond::In(v) => v.contains(&p),
            CharCond::NotIn(v) => !v.contains(&p),
        }
    }
}

/// Rank selector for a catalog row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RankCond {
    All,
    Eq(i64),
    Range(i64, i64),
    Ge(i64),
    Le(i64),
}

impl RankCond {
    pub fn parse(src: &str) -> Result<RankCond> {
        let s = src.trim();
        if s == "all" {
            return Ok(RankCond::All);
        }
        let bad = || NuError::CatalogParse(format!("bad rank condition: {src}"));
        if let Some(r) = s.strip_prefix("l>=") {
            return Ok(RankCond::Ge(r.trim().parse().map_err(|_| bad())?));
        }
        if let Some(r) = s.strip_prefix("l<=") {
            return Ok(RankCond::Le(r.trim().parse().map_err(|_| bad())?));
        }
        if let Some(r) = s.strip_prefix("l=") {
            if let Some((a, b)) = r.split_once("..") {
                return Ok(RankCond::Range(
                    a.trim().parse().map_err(|_| bad())?,
                    b.trim().parse().map_err(|_| bad())?,
                ));
            }
            return Ok(RankCond::Eq(r.trim().parse().map_err(|_| bad())?));
        }
        Err(bad())
    }

    pub fn matches(&self, l: i64) -> bool {
        match self {
            RankCond::All => true,
            RankCond::Eq(v) => l == *v,
            RankCond::Range(a, b) => (*a..=*b).contains(&l),
            RankCond::Ge(v) => l >= *v,
            RankCond::Le(v) => l <= *v,
        }
    }
}

/// Relation attached to a table cell: exact, or a one-sided bound that may be
/// known to be exact for some characteristics (written `<=eq(!=5)` etc.).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rel {
    pub kind: RelKind,
    pub eq_when: Option<CharCond>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelKind {
    Eq,
    Le,
    Ge,
}

impl Rel {
    pub fn parse(src: &str) -> Result<Rel> {
        let s = src.trim();
        let (kind, rest) = if let Some(r) = s.strip_prefix("<=") {
            (RelKind::Le, r)
        } else if let Some(r) = s.strip_prefix(">=") {
            (RelKind::Ge, r)
        } else if let Some(r) = s.strip_prefix('=') {
            (RelKind::Eq, r)
        } else {
            return Err(NuError::CatalogParse(format!("bad relation: {src}")));
        };
        let eq_when = if rest.is_empty() {
            None
        } else if let Some(inner) = rest.strip_prefix("eq(").and_then(|r| r.strip_suffix(')')) {
            Some(CharCond::parse(inner)?)
        } else {
            return Err(NuError::CatalogParse(format!("bad relation: {src}")));
        };
        Ok(Rel { kind, eq_when })
    }

    /// Whether the cell value is exact at characteristic p.
    pub fn is_exact(&self, p: i64) -> bool {
        match self.kind {
            RelKind::Eq => true,
            _ => self.eq_when.as_ref().map(|c| c.matches(p)).unwrap_or(false),
        }
    }

    /// Check a computed value against the cell value under this relation.
    pub fn check(&self, computed: i64, cell: i64, p: i64) -> bool {
        if self.is_exact(p) {
            return computed == cell;
        }
        match self.kind {
            RelKind::Eq => computed == cell,
            RelKind::Le => computed <= cell,
            RelKind::Ge => computed >= cell,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_precedence() {
        let e = Expr::parse("2*l^2+3*l-1").unwrap();
        assert_eq!(e.eval(4, 0), 43);
        let e = Expr::parse("2^3^2").unwrap();
        assert_eq!(e.eval(0, 0), 512);
        let e = Expr::parse("(2*l+1)*(l-1)").unwrap();
        assert_eq!(e.eval(3, 5), 14);
        let e = Expr::parse("-l+5").unwrap();
        assert_eq!(e.eval(2, 0), 3);
    }

    #[test]
    fn eps_semantics() {
        let e = Expr::parse("eps(p,2)").unwrap();
        assert_eq!(e.eval(0, 2), 1);
        assert_eq!(e.eval(0, 3), 0);
        assert_eq!(e.eval(0, 0), 0);
        let e = Expr::parse("eps(p,2*l+1)").unwrap();
        assert_eq!(e.eval(3, 7), 1);
        assert_eq!(e.eval(4, 7), 0);
        assert_eq!(e.eval(3, 0), 0);
        // eps(m, 0) = 1 for every m
        let e = Expr::parse("eps(p,l-3)").unwrap();
        assert_eq!(e.eval(3, 0), 1);
        assert_eq!(e.eval(3, 5), 1);
    }

    #[test]
    fn binomials() {
        let e = Expr::parse("binom(l+1,2)").unwrap();
        assert_eq!(e.eval(5, 0), 15);
        let e = Expr::parse("binom(2*l,3)").unwrap();
        assert_eq!(e.eval(3, 0), 20);
        assert_eq!(binom(10, 0), 1);
        assert_eq!(binom(4, 5), 0);
        assert_eq!(binom(4, -1), 0);
    }

    #[test]
    fn parse_errors() {
        assert!(Expr::parse("2+").is_err());
        assert!(Expr::parse("foo(3)").is_err());
        assert!(Expr::parse("eps(2)").is_err());
        assert!(Expr::parse("3 4").is_err());
    }

    #[test]
    fn char_conditions() {
        assert!(CharCond::parse("all").unwrap().matches(7));
        let c = CharCond::parse("=2,3").unwrap();
        assert!(c.matches(2) && c.matches(3) && !c.matches(5));
        let c = CharCond::parse("!=2").unwrap();
        assert!(!c.matches(2) && c.matches(0) && c.matches(7));
        assert!(CharCond::parse("2").is_err());
    }

    #[test]
    fn rank_conditions() {
        assert!(RankCond::parse("all").unwrap().matches(100));
        assert!(RankCond::parse("l=3").unwrap().matches(3));
        assert!(!RankCond::parse("l=3").unwrap().matches(4));
        let c = RankCond::parse("l=2..5").unwrap();
        assert!(c.matches(2) && c.matches(5) && !c.matches(6));
        assert!(RankCond::parse("l>=5").unwrap().matches(9));
        assert!(RankCond::parse("l<=4").unwrap().matches(3));
    }

    #[test]
    fn relations() {
        let r = Rel::parse("=").unwrap();
        assert!(r.is_exact(2) && r.check(5, 5, 2) && !r.check(4, 5, 2));
        let r = Rel::parse("<=").unwrap();
        assert!(!r.is_exact(3) && r.check(4, 5, 3) && !r.check(6, 5, 3));
        let r = Rel::parse("<=eq(!=5)").unwrap();
        assert!(r.is_exact(3) && !r.is_exact(5));
        assert!(r.check(4, 5, 5) && !r.check(4, 5, 3));
        let r = Rel::parse(">=eq(=2)").unwrap();
        assert!(r.is_exact(2) && !r.is_exact(3));
        assert!(r.check(6, 5, 3) && !r.check(6, 5, 2));
    }

    #[test]
    fn identity_checking_on_intervals() {
        let a = Expr::parse("binom(l+1,2)").unwrap();
        let b = Expr::parse("l*(l+1)").unwrap();
        let half = Expr::parse("(l*(l+1)+0)").unwrap();
        assert!(!exprs_agree(&a, &b, 1..=40, &[0, 2, 3]));
        assert!(exprs_agree(&b, &half, 1..=40, &[0, 2, 3]));
        let lhs = Expr::parse("2*binom(2*l,3)").unwrap();
        let rhs = Expr::parse("(2*l)*(2*l-1)*(2*l-2)*2").unwrap();
        assert!(!exprs_agree(&lhs, &rhs, 2..=30, &[0]));
    }
}
