//! Parser for the `.lalg` algebra format.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exactmath::Rat;
use crate::liecore::LieAlgebra;

/// Parse failure with position information.
#[derive(Debug, Clone)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ParseError {}

/// One bracket declaration `[left, right] = Σ coeff·name`.
#[derive(Debug, Clone)]
pub struct BracketDecl {
    pub left: usize,
    pub right: usize,
    pub terms: Vec<(Rat, usize)>,
}

/// A parsed algebra document.
#[derive(Debug, Clone)]
pub struct AlgebraDocument {
    pub basis: Vec<String>,
    pub params: Vec<(String, Rat)>,
    pub brackets: Vec<BracketDecl>,
    /// Declared pairing pairs (primal index, dual index).
    pub pairing: Vec<(usize, usize)>,
}

impl AlgebraDocument {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Structure constants of the declared algebra; unstated brackets are
    /// zero and antisymmetry is filled in.
    pub fn to_lie_algebra(&self) -> LieAlgebra {
        let brackets: Vec<((usize, usize), Vec<(Rat, usize)>)> = self
            .brackets
            .iter()
            .map(|b| ((b.left, b.right), b.terms.clone()))
            .collect();
        LieAlgebra::from_brackets(self.dim(), &brackets).with_labels(self.basis.clone())
    }

    /// When the document declares a complete pairing on six basis vectors,
    /// the basis order (primal triple then dual triple) that makes the
    /// pairing canonical.
    pub fn canonical_order(&self) -> Option<Vec<usize>> {
        if self.dim() != 6 || self.pairing.len() != 3 {
            return None;
        }
        let mut order: Vec<usize> = self.pairing.iter().map(|(p, _)| *p).collect();
        order.extend(self.pairing.iter().map(|(_, d)| *d));
        let mut seen = order.clone();
        seen.sort_unstable();
        seen.dedup();
        (seen.len() == 6).then_some(order)
    }
}

struct Scanner<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col: usize,
    text: &'a str,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Sym(char),
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

impl<'a> Scanner<'a> {
    fn new(text: &'a str) -> Self {
        Scanner { chars: text.chars().collect(), pos: 0, line: 1, col: 1, text }
    }

    fn error(&self, line: usize, col: usize, message: impl Into<String>) -> ParseError {
        let _ = self.text;
        ParseError { line, col, message: message.into() }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.get(self.pos).copied()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn tokens(mut self) -> Result<Vec<Spanned>, ParseError> {
        let mut out = Vec::new();
        while let Some(c) = self.peek() {
            let (line, col) = (self.line, self.col);
            if c.is_whitespace() {
                self.bump();
                continue;
            }
            if c == '#' {
                while let Some(c) = self.bump() {
                    if c == '\n' {
                        break;
                    }
                }
                continue;
            }
            if c.is_ascii_digit() {
                let mut digits = String::new();
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    digits.push(self.bump().unwrap());
                }
                if self.peek() == Some('.') {
                    return Err(self.error(
                        line,
                        col,
                        "non-rational coefficient: decimal literals are not exact, write p/q",
                    ));
                }
                let value: BigInt = digits.parse().expect("digits parse");
                out.push(Spanned { tok: Tok::Int(value), line, col });
                continue;
            }
            if c.is_alphabetic() || c == '_' {
                let mut ident = String::new();
                while self
                    .peek()
                    .is_some_and(|c| c.is_alphanumeric() || c == '_' || c == '\'')
                {
                    ident.push(self.bump().unwrap());
                }
                out.push(Spanned { tok: Tok::Ident(ident), line, col });
                continue;
            }
            if "[],=;/*+-<>!".contains(c) {
                self.bump();
                out.push(Spanned { tok: Tok::Sym(c), line, col });
                continue;
            }
            return Err(self.error(line, col, format!("unexpected character `{c}`")));
        }
        Ok(out)
    }
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    doc: AlgebraDocument,
}

/// Parses an `.lalg` document.
pub fn parse_algebra(text: &str) -> Result<AlgebraDocument, ParseError> {
    let toks = Scanner::new(text).tokens()?;
    let mut p = Parser {
        toks,
        pos: 0,
        doc: AlgebraDocument {
            basis: Vec::new(),
            params: Vec::new(),
            brackets: Vec::new(),
            pairing: Vec::new(),
        },
    };
    while !p.at_end() {
        p.declaration()?;
    }
    if p.doc.basis.is_empty() {
        return Err(ParseError { line: 1, col: 1, message: "document declares no basis".into() });
    }
    Ok(p.doc)
}

impl Parser {
    fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Spanned> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn err_here(&self, message: impl Into<String>) -> ParseError {
        let (line, col) = self
            .peek()
            .map(|t| (t.line, t.col))
            .or_else(|| self.toks.last().map(|t| (t.line, t.col)))
            .unwrap_or((1, 1));
        ParseError { line, col, message: message.into() }
    }

    fn expect_sym(&mut self, sym: char) -> Result<(), ParseError> {
        match self.next() {
            Some(Spanned { tok: Tok::Sym(c), .. }) if c == sym => Ok(()),
            Some(t) => Err(ParseError {
                line: t.line,
                col: t.col,
                message: format!("expected `{sym}`, found {}", describe(&t.tok)),
            }),
            None => Err(self.err_here(format!("expected `{sym}`, found end of input"))),
        }
    }

    fn expect_ident(&mut self) -> Result<(String, usize, usize), ParseError> {
        match self.next() {
            Some(Spanned { tok: Tok::Ident(s), line, col }) => Ok((s, line, col)),
            Some(t) => Err(ParseError {
                line: t.line,
                col: t.col,
                message: format!("expected a name, found {}", describe(&t.tok)),
            }),
            None => Err(self.err_here("expected a name, found end of input")),
        }
    }

    fn declaration(&mut self) -> Result<(), ParseError> {
        match self.peek().map(|t| t.tok.clone()) {
            Some(Tok::Ident(kw)) if kw == "basis" => self.basis_decl(),
            Some(Tok::Ident(kw)) if kw == "param" => self.param_decl(),
            Some(Tok::Ident(kw)) if kw == "pairing" => self.pairing_decl(),
            Some(Tok::Sym('[')) => self.bracket_decl(),
            Some(_) => Err(self.err_here(
                "expected a declaration: basis, param, pairing, or a bracket `[`",
            )),
            None => Ok(()),
        }
    }

    fn basis_decl(&mut self) -> Result<(), ParseError> {
        self.next();
        loop {
            match self.peek().map(|t| t.tok.clone()) {
                Some(Tok::Ident(_)) => {
                    let (name, line, col) = self.expect_ident()?;
                    if self.doc.basis.contains(&name) {
                        return Err(ParseError {
                            line,
                            col,
                            message: format!("basis name `{name}` declared twice"),
                        });
                    }
                    self.doc.basis.push(name);
                }
                Some(Tok::Sym(';')) => {
                    self.next();
                    return Ok(());
                }
                _ => return Err(self.err_here("expected a basis name or `;`")),
            }
        }
    }

    fn param_decl(&mut self) -> Result<(), ParseError> {
        self.next();
        let (name, line, col) = self.expect_ident()?;
        if self.doc.params.iter().any(|(n, _)| *n == name) {
            return Err(ParseError {
                line,
                col,
                message: format!("parameter `{name}` declared twice"),
            });
        }
        self.expect_sym('=')?;
        let value = self.rational()?;
        // optional domain assertions: where <name> <op> <rational> {, ...}
        if let Some(Tok::Ident(kw)) = self.peek().map(|t| t.tok.clone()) {
            if kw == "where" {
                self.next();
                loop {
                    let (cname, cl, cc) = self.expect_ident()?;
                    if cname != name {
                        return Err(ParseError {
                            line: cl,
                            col: cc,
                            message: format!(
                                "domain assertion names `{cname}`, expected `{name}`"
                            ),
                        });
                    }
                    let op = self.comparison_op()?;
                    let bound = self.rational()?;
                    let holds = match op.as_str() {
                        ">" => value > bound,
                        ">=" => value >= bound,
                        "<" => value < bound,
                        "<=" => value <= bound,
                        "!=" => value != bound,
                        _ => unreachable!(),
                    };
                    if !holds {
                        return Err(ParseError {
                            line: cl,
                            col: cc,
                            message: format!(
                                "parameter `{name}` = {} violates its domain `{name} {op} {}`",
                                crate::exactmath::fmt_rat(&value),
                                crate::exactmath::fmt_rat(&bound)
                            ),
                        });
                    }
                    if let Some(Tok::Sym(',')) = self.peek().map(|t| t.tok.clone()) {
                        self.next();
                        continue;
                    }
                    break;
                }
            }
        }
        self.expect_sym(';')?;
        self.doc.params.push((name, value));
        Ok(())
    }

    fn comparison_op(&mut self) -> Result<String, ParseError> {
        let mut op = String::new();
        match self.next() {
            Some(Spanned { tok: Tok::Sym(c @ ('<' | '>' | '!')), .. }) => op.push(c),
            _ => return Err(self.err_here("expected a comparison operator")),
        }
        if let Some(Tok::Sym('=')) = self.peek().map(|t| t.tok.clone()) {
            self.next();
            op.push('=');
        }
        if op == "!" {
            return Err(self.err_here("expected `!=`"));
        }
        Ok(op)
    }

    fn pairing_decl(&mut self) -> Result<(), ParseError> {
        self.next();
        let left = self.basis_ref()?;
        let right = self.basis_ref()?;
        self.expect_sym(';')?;
        self.doc.pairing.push((left, right));
        Ok(())
    }

    fn basis_ref(&mut self) -> Result<usize, ParseError> {
        let (name, line, col) = self.expect_ident()?;
        self.doc.basis.iter().position(|b| *b == name).ok_or(ParseError {
            line,
            col,
            message: format!("undeclared symbol `{name}`"),
        })
    }

    fn bracket_decl(&mut self) -> Result<(), ParseError> {
        let start = self.peek().map(|t| (t.line, t.col)).unwrap_or((1, 1));
        self.expect_sym('[')?;
        let left = self.basis_ref()?;
        self.expect_sym(',')?;
        let right = self.basis_ref()?;
        self.expect_sym(']')?;
        if left == right {
            return Err(ParseError {
                line: start.0,
                col: start.1,
                message: "bracket of a basis vector with itself".into(),
            });
        }
        let key = (left.min(right), left.max(right));
        if self
            .doc
            .brackets
            .iter()
            .any(|b| (b.left.min(b.right), b.left.max(b.right)) == key)
        {
            return Err(ParseError {
                line: start.0,
                col: start.1,
                message: format!(
                    "bracket [{}, {}] assigned twice",
                    self.doc.basis[left], self.doc.basis[right]
                ),
            });
        }
        self.expect_sym('=')?;
        let terms = self.lin_comb()?;
        self.expect_sym(';')?;
        self.doc.brackets.push(BracketDecl { left, right, terms });
        Ok(())
    }

    /// linComb := term {("+"|"-") term}; term := [coeff] ["*"] name | rational
    fn lin_comb(&mut self) -> Result<Vec<(Rat, usize)>, ParseError> {
        let mut terms: Vec<(Rat, usize)> = Vec::new();
        let mut sign = Rat::from_integer(1.into());
        if let Some(Tok::Sym('-')) = self.peek().map(|t| t.tok.clone()) {
            self.next();
            sign = -sign;
        }
        loop {
            let term = self.term()?;
            if let Some((coeff, index)) = term {
                let signed = sign.clone() * coeff;
                if !signed.is_zero() {
                    match terms.iter_mut().find(|(_, i)| *i == index) {
                        Some((c, _)) => *c += signed,
                        None => terms.push((signed, index)),
                    }
                }
            }
            match self.peek().map(|t| t.tok.clone()) {
                Some(Tok::Sym('+')) => {
                    self.next();
                    sign = Rat::from_integer(1.into());
                }
                Some(Tok::Sym('-')) => {
                    self.next();
                    sign = Rat::from_integer((-1).into());
                }
                _ => break,
            }
        }
        terms.retain(|(c, _)| !c.is_zero());
        Ok(terms)
    }

    /// Returns `None` for a bare rational term (only the zero constant is
    /// allowed, anything else cannot belong to the span).
    fn term(&mut self) -> Result<Option<(Rat, usize)>, ParseError> {
        match self.peek().map(|t| t.tok.clone()) {
            Some(Tok::Int(_)) => {
                let value = self.rational()?;
                // either a bare constant (must be zero) or coeff [*] name
                match self.peek().map(|t| t.tok.clone()) {
                    Some(Tok::Sym('*')) => {
                        self.next();
                        let index = self.basis_ref()?;
                        Ok(Some((value, index)))
                    }
                    Some(Tok::Ident(_)) => {
                        let index = self.basis_ref()?;
                        Ok(Some((value, index)))
                    }
                    _ => {
                        if value.is_zero() {
                            Ok(None)
                        } else {
                            Err(self.err_here("a nonzero constant term is not a basis element"))
                        }
                    }
                }
            }
            Some(Tok::Ident(name)) => {
                // either param-name coefficient or a bare basis name
                if let Some((_, value)) = self.doc.params.iter().find(|(n, _)| *n == name) {
                    let value = value.clone();
                    self.next();
                    if let Some(Tok::Sym('*')) = self.peek().map(|t| t.tok.clone()) {
                        self.next();
                    }
                    let index = self.basis_ref()?;
                    return Ok(Some((value, index)));
                }
                let index = self.basis_ref()?;
                Ok(Some((Rat::from_integer(1.into()), index)))
            }
            _ => Err(self.err_here("expected a term")),
        }
    }

    fn rational(&mut self) -> Result<Rat, ParseError> {
        let numer = match self.next() {
            Some(Spanned { tok: Tok::Int(n), .. }) => n,
            Some(t) => {
                return Err(ParseError {
                    line: t.line,
                    col: t.col,
                    message: format!("expected a rational, found {}", describe(&t.tok)),
                })
            }
            None => return Err(self.err_here("expected a rational, found end of input")),
        };
        if let Some(Tok::Sym('/')) = self.peek().map(|t| t.tok.clone()) {
            self.next();
            match self.next() {
                Some(Spanned { tok: Tok::Int(d), line, col }) => {
                    if d.is_zero() {
                        return Err(ParseError {
                            line,
                            col,
                            message: "zero denominator".into(),
                        });
                    }
                    Ok(Rat::new(numer, d))
                }
                Some(t) => Err(ParseError {
                    line: t.line,
                    col: t.col,
                    message: format!("expected a denominator, found {}", describe(&t.tok)),
                }),
                None => Err(self.err_here("expected a denominator, found end of input")),
            }
        } else {
            Ok(Rat::from_integer(numer))
        }
    }
}

fn describe(tok: &Tok) -> String {
    match tok {
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Int(n) => format!("`{n}`"),
        Tok::Sym(c) => format!("`{c}`"),
    }
}
