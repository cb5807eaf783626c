//! Laurent polynomials, their parser, and support manipulations.
//!
//! Terms map exponent vectors (integers, possibly negative) to exact
//! rational coefficients; no zero coefficient is ever stored. The text
//! grammar is deliberately small: terms joined by `+`/`-`, a term is an
//! optional rational coefficient and `*`-separated factors `x<k>^<int>`
//! (or single declared names), implicit coefficient 1, implicit exponent 1,
//! whitespace insensitive.

use crate::error::{Error, Result};
use crate::lattice::{LatticePoint, LatticePolytope};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

/// Variable naming scheme binding identifiers to coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VarOrder {
    /// Variables `x1 .. xn`.
    Indexed(usize),
    /// Declared single-letter (or word) names in coordinate order.
    Named(Vec<String>),
}

impl VarOrder {
    pub fn num_vars(&self) -> usize {
        match self {
            VarOrder::Indexed(n) => *n,
            VarOrder::Named(names) => names.len(),
        }
    }

    fn resolve(&self, ident: &str) -> Option<usize> {
        match self {
            VarOrder::Indexed(n) => {
                let rest = ident.strip_prefix('x')?;
                let k: usize = rest.parse().ok()?;
                (k >= 1 && k <= *n).then(|| k - 1)
            }
            VarOrder::Named(names) => names.iter().position(|s| s == ident),
        }
    }

    pub fn name(&self, i: usize) -> String {
        match self {
            VarOrder::Indexed(_) => format!("x{}", i + 1),
            VarOrder::Named(names) => names[i].clone(),
        }
    }
}

/// Sparse Laurent polynomial over Q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPolynomial {
    num_vars: usize,
    terms: BTreeMap<Vec<i64>, BigRational>,
}

impl LaurentPolynomial {
    pub fn zero(num_vars: usize) -> Self {
        Self { num_vars, terms: BTreeMap::new() }
    }

    /// Build from (exponent, coefficient) pairs; repeated exponents are
    /// accumulated and zero coefficients dropped.
    pub fn from_terms(
        num_vars: usize,
        terms: impl IntoIterator<Item = (Vec<i64>, BigRational)>,
    ) -> Result<Self> {
        let mut map: BTreeMap<Vec<i64>, BigRational> = BTreeMap::new();
        for (exp, coef) in terms {
            if exp.len() != num_vars {
                return Err(Error::Input(format!(
                    "exponent vector of length {} in {} variables",
                    exp.len(),
                    num_vars
                )));
            }
            let entry = map.entry(exp).or_insert_with(BigRational::zero);
            *entry += coef;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(Self { num_vars, terms: map })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant value if the polynomial has no variable-bearing term.
    pub fn constant_value(&self) -> Option<BigRational> {
        if self.terms.is_empty() {
            return Some(BigRational::zero());
        }
        if self.terms.len() == 1 {
            let (exp, c) = self.terms.iter().next().unwrap();
            if exp.iter().all(|&e| e == 0) {
                return Some(c.clone());
            }
        }
        None
    }

    /// True when the polynomial is a single monomial `c x^a` (including
    /// nonzero constants).
    pub fn is_single_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Newton polytope: hull of the exponent vectors of the support.
    /// The zero polynomial yields the empty polytope.
    pub fn newton_polytope(&self) -> Result<LatticePolytope> {
        if self.num_vars == 0 {
            return Err(Error::Domain("Newton polytope needs at least one variable".into()));
        }
        let pts: Vec<LatticePoint> = self
            .terms
            .keys()
            .map(|e| LatticePoint::new(e.iter().map(|&x| BigInt::from(x)).collect()))
            .collect();
        LatticePolytope::hull(&pts, self.num_vars)
    }

    /// Product (term convolution).
    pub fn mul(&self, other: &LaurentPolynomial) -> Result<LaurentPolynomial> {
        if self.num_vars != other.num_vars {
            return Err(Error::Input("product of polynomials in different variables".into()));
        }
        let mut map: BTreeMap<Vec<i64>, BigRational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exp: Option<Vec<i64>> = ea
                    .iter()
                    .zip(eb)
                    .map(|(a, b)| a.checked_add(*b))
                    .collect();
                let exp = exp.ok_or_else(|| Error::Input("exponent overflow in product".into()))?;
                let entry = map.entry(exp).or_insert_with(BigRational::zero);
                *entry += ca * cb;
            }
        }
        map.retain(|_, c| !c.is_zero());
        Ok(LaurentPolynomial { num_vars: self.num_vars, terms: map })
    }

    /// Newton polytopes of the partial derivatives: term `a` contributes
    /// `a - e_i` with coefficient `a_i * c_a`, dropped when `a_i = 0`.
    /// Entry `i` is the empty polytope when the polynomial does not
    /// involve `x_i`.
    pub fn support_shift_partials(&self) -> Result<Vec<LatticePolytope>> {
        if self.is_zero() {
            return Err(Error::Domain("partials of the zero polynomial".into()));
        }
        let n = self.num_vars;
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let mut pts = Vec::new();
            for exp in self.terms.keys() {
                if exp[i] == 0 {
                    continue;
                }
                let mut shifted = exp.clone();
                shifted[i] -= 1;
                pts.push(LatticePoint::new(
                    shifted.into_iter().map(BigInt::from).collect(),
                ));
            }
            out.push(LatticePolytope::hull(&pts, n)?);
        }
        Ok(out)
    }

    /// Render in canonical form (descending exponent order). Guaranteed to
    /// parse back to the same polynomial under the same variable order.
    pub fn render(&self, vars: &VarOrder) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (exp, coef)) in self.terms.iter().rev().enumerate() {
            let negative = coef.is_negative();
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else if negative {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mag = coef.abs();
            let factors: Vec<String> = exp
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(j, &e)| {
                    if e == 1 {
                        vars.name(j)
                    } else {
                        format!("{}^{}", vars.name(j), e)
                    }
                })
                .collect();
            let coef_str = if mag.denom().is_one() {
                format!("{}", mag.numer())
            } else {
                format!("{}/{}", mag.numer(), mag.denom())
            };
            if factors.is_empty() {
                out.push_str(&coef_str);
            } else if mag.is_one() {
                let _ = write!(out, "{}", factors.join("*"));
            } else {
                let _ = write!(out, "{}*{}", coef_str, factors.join("*"));
            }
        }
        out
    }
}

/// A list of Laurent polynomials sharing one variable set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolySystem {
    num_vars: usize,
    polys: Vec<LaurentPolynomial>,
}

impl PolySystem {
    pub fn new(num_vars: usize, polys: Vec<LaurentPolynomial>) -> Result<Self> {
        for p in &polys {
            if p.num_vars() != num_vars {
                return Err(Error::Input("system mixes variable counts".into()));
            }
        }
        Ok(Self { num_vars, polys })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn polys(&self) -> &[LaurentPolynomial] {
        &self.polys
    }

    /// Restrict to the coordinate stratum where exactly the variables in
    /// `zero_set` vanish: terms with a positive exponent on a zeroed
    /// variable are deleted and the survivors are projected onto the
    /// remaining coordinates.
    ///
    /// A negative exponent on a zeroed variable is a domain error (the
    /// stratum is outside the polynomial's domain). A restricted polynomial
    /// may come out zero; callers decide what that means.
    pub fn restrict_to_stratum(&self, zero_set: &BTreeSet<usize>) -> Result<PolySystem> {
        for &v in zero_set {
            if v >= self.num_vars {
                return Err(Error::Input(format!("variable index {v} out of range")));
            }
        }
        let keep: Vec<usize> = (0..self.num_vars).filter(|v| !zero_set.contains(v)).collect();
        let mut polys = Vec::with_capacity(self.polys.len());
        for p in &self.polys {
            let mut map: BTreeMap<Vec<i64>, BigRational> = BTreeMap::new();
            'term: for (exp, coef) in p.terms() {
                for &v in zero_set {
                    if exp[v] < 0 {
                        return Err(Error::Domain(format!(
                            "negative exponent on zeroed variable {v}"
                        )));
                    }
                    if exp[v] > 0 {
                        continue 'term;
                    }
                }
                let projected: Vec<i64> = keep.iter().map(|&v| exp[v]).collect();
                map.insert(projected, coef.clone());
            }
            polys.push(LaurentPolynomial { num_vars: keep.len(), terms: map });
        }
        Ok(PolySystem { num_vars: keep.len(), polys })
    }
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    col: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    Number(BigInt),
    Ident(String),
    End,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Self { chars: text.chars().peekable(), line: 1, col: 1 }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { line: self.line, col: self.col, msg: msg.into() }
    }

    fn next_tok(&mut self) -> Result<(Tok, usize, usize)> {
        while matches!(self.chars.peek(), Some(c) if c.is_whitespace()) {
            self.bump();
        }
        let (line, col) = (self.line, self.col);
        let Some(&c) = self.chars.peek() else {
            return Ok((Tok::End, line, col));
        };
        let tok = match c {
            '+' => {
                self.bump();
                Tok::Plus
            }
            '-' => {
                self.bump();
                Tok::Minus
            }
            '*' => {
                self.bump();
                Tok::Star
            }
            '^' => {
                self.bump();
                Tok::Caret
            }
            '/' => {
                self.bump();
                Tok::Slash
            }
            '0'..='9' => {
                let mut digits = String::new();
                while matches!(self.chars.peek(), Some(c) if c.is_ascii_digit()) {
                    digits.push(self.bump().unwrap());
                }
                Tok::Number(digits.parse().expect("digits"))
            }
            c if c.is_ascii_alphabetic() => {
                let mut ident = String::new();
                while matches!(self.chars.peek(), Some(c) if c.is_ascii_alphanumeric() || *c == '_')
                {
                    ident.push(self.bump().unwrap());
                }
                Tok::Ident(ident)
            }
            other => return Err(self.err(format!("unexpected character '{other}'"))),
        };
        Ok((tok, line, col))
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    tok: Tok,
    line: usize,
    col: usize,
    vars: &'a VarOrder,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, vars: &'a VarOrder) -> Result<Self> {
        let mut lexer = Lexer::new(text);
        let (tok, line, col) = lexer.next_tok()?;
        Ok(Self { lexer, tok, line, col, vars })
    }

    fn advance(&mut self) -> Result<()> {
        let (tok, line, col) = self.lexer.next_tok()?;
        self.tok = tok;
        self.line = line;
        self.col = col;
        Ok(())
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { line: self.line, col: self.col, msg: msg.into() }
    }

    fn exponent_i64(&self, value: &BigInt, negate: bool) -> Result<i64> {
        use num_traits::ToPrimitive;
        let v = if negate { -value } else { value.clone() };
        v.to_i64().ok_or_else(|| self.err("exponent overflow"))
    }

    fn parse_polynomial(&mut self) -> Result<LaurentPolynomial> {
        let n = self.vars.num_vars();
        let mut terms: Vec<(Vec<i64>, BigRational)> = Vec::new();
        let mut sign = BigRational::one();
        match self.tok {
            Tok::Minus => {
                sign = -sign;
                self.advance()?;
            }
            Tok::Plus => {
                self.advance()?;
            }
            _ => {}
        }
        loop {
            let (exp, coef) = self.parse_term()?;
            terms.push((exp, sign.clone() * coef));
            match self.tok {
                Tok::Plus => {
                    sign = BigRational::one();
                    self.advance()?;
                }
                Tok::Minus => {
                    sign = -BigRational::one();
                    self.advance()?;
                }
                Tok::End => break,
                _ => return Err(self.err("expected '+', '-' or end of input")),
            }
        }
        LaurentPolynomial::from_terms(n, terms)
    }

    fn parse_term(&mut self) -> Result<(Vec<i64>, BigRational)> {
        let n = self.vars.num_vars();
        let mut coef = BigRational::one();
        let mut exp = vec![0i64; n];
        loop {
            match std::mem::replace(&mut self.tok, Tok::End) {
                Tok::Number(num) => {
                    self.advance()?;
                    let mut value = BigRational::from_integer(num);
                    if self.tok == Tok::Slash {
                        self.advance()?;
                        match std::mem::replace(&mut self.tok, Tok::End) {
                            Tok::Number(den) => {
                                if den.is_zero() {
                                    return Err(self.err("zero denominator"));
                                }
                                self.advance()?;
                                value /= BigRational::from_integer(den);
                            }
                            _ => return Err(self.err("expected denominator after '/'")),
                        }
                    }
                    coef *= value;
                }
                Tok::Ident(name) => {
                    let Some(idx) = self.vars.resolve(&name) else {
                        return Err(self.err(format!("unknown variable '{name}'")));
                    };
                    self.advance()?;
                    let e = if self.tok == Tok::Caret {
                        self.advance()?;
                        let negate = if self.tok == Tok::Minus {
                            self.advance()?;
                            true
                        } else {
                            false
                        };
                        match std::mem::replace(&mut self.tok, Tok::End) {
                            Tok::Number(num) => {
                                self.advance()?;
                                self.exponent_i64(&num, negate)?
                            }
                            _ => return Err(self.err("expected integer exponent after '^'")),
                        }
                    } else {
                        1
                    };
                    exp[idx] = exp[idx]
                        .checked_add(e)
                        .ok_or_else(|| self.err("exponent overflow"))?;
                }
                other => {
                    self.tok = other;
                    return Err(self.err("expected coefficient or variable"));
                }
            }
            if self.tok == Tok::Star {
                self.advance()?;
                continue;
            }
            return Ok((exp, coef));
        }
    }
}

/// Parse a Laurent polynomial under the given variable order.
pub fn parse(text: &str, vars: &VarOrder) -> Result<LaurentPolynomial> {
    let mut p = Parser::new(text, vars)?;
    let poly = p.parse_polynomial()?;
    if p.tok != Tok::End {
        return Err(p.err("trailing input"));
    }
    Ok(poly)
}
