//! First-order formulas over the field signature `{+, ·, 0, 1, =}`: an
//! s-expression parser and printer, an exact evaluator for the existential
//! patterns that occur in practice, and the flattening of point tuples into
//! variable assignments.
//!
//! Grammar:
//!
//! ```text
//! formula := "(" "=" term term ")" | "(" "and" formula* ")" | "(" "or" formula* ")"
//!          | "(" "not" formula ")" | "(" "exists" VAR formula ")"
//! term    := VAR | "0" | "1" | "(" "+" term term ")" | "(" "*" term term ")"
//! VAR     := "v" digits        (index ≥ 1)
//! ```

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Point4;
use crate::relations::Relation;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(u32),
    Zero,
    One,
    Sum(Box<Term>, Box<Term>),
    Product(Box<Term>, Box<Term>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Equals(Term, Term),
    And(Vec<Formula>),
    Or(Vec<Formula>),
    Not(Box<Formula>),
    Exists(u32, Box<Formula>),
}

/// Values of the variables `v1, v2, …`.
pub type Valuation = BTreeMap<u32, Scalar>;

impl Term {
    pub fn var(i: u32) -> Term {
        Term::Var(i)
    }

    pub fn sum(a: Term, b: Term) -> Term {
        Term::Sum(Box::new(a), Box::new(b))
    }

    pub fn product(a: Term, b: Term) -> Term {
        Term::Product(Box::new(a), Box::new(b))
    }

    fn collect_vars(&self, out: &mut BTreeSet<u32>) {
        match self {
            Term::Var(i) => {
                out.insert(*i);
            }
            Term::Zero | Term::One => {}
            Term::Sum(a, b) | Term::Product(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    pub fn vars(&self) -> BTreeSet<u32> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn rename(&self, from: u32, to: u32) -> Term {
        match self {
            Term::Var(i) if *i == from => Term::Var(to),
            Term::Sum(a, b) => Term::sum(a.rename(from, to), b.rename(from, to)),
            Term::Product(a, b) => Term::product(a.rename(from, to), b.rename(from, to)),
            other => other.clone(),
        }
    }

    pub fn evaluate(&self, val: &Valuation) -> Result<Scalar> {
        match self {
            Term::Var(i) => val.get(i).cloned().ok_or(Error::MissingAssignment(*i)),
            Term::Zero => Ok(Scalar::zero()),
            Term::One => Ok(Scalar::one()),
            Term::Sum(a, b) => a.evaluate(val)?.add(&b.evaluate(val)?),
            Term::Product(a, b) => a.evaluate(val)?.mul(&b.evaluate(val)?),
        }
    }

    /// Coefficients (constant first) of the term as a polynomial in `x`,
    /// with every other variable read from `val`.
    fn polynomial(&self, x: u32, val: &Valuation) -> Result<Poly> {
        match self {
            Term::Var(i) if *i == x => Ok(Poly(vec![Scalar::zero(), Scalar::one()])),
            Term::Var(_) | Term::Zero | Term::One => Ok(Poly::constant(self.evaluate(val)?)),
            Term::Sum(a, b) => a.polynomial(x, val)?.add(&b.polynomial(x, val)?),
            Term::Product(a, b) => a.polynomial(x, val)?.mul(&b.polynomial(x, val)?),
        }
    }
}

impl Formula {
    pub fn equals(a: Term, b: Term) -> Formula {
        Formula::Equals(a, b)
    }

    pub fn exists(x: u32, body: Formula) -> Formula {
        Formula::Exists(x, Box::new(body))
    }

    pub fn negate(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    fn collect_free(&self, bound: &mut Vec<u32>, out: &mut BTreeSet<u32>) {
        match self {
            Formula::Equals(a, b) => {
                for v in a.vars().into_iter().chain(b.vars()) {
                    if !bound.contains(&v) {
                        out.insert(v);
                    }
                }
            }
            Formula::And(fs) | Formula::Or(fs) => {
                for f in fs {
                    f.collect_free(bound, out);
                }
            }
            Formula::Not(f) => f.collect_free(bound, out),
            Formula::Exists(x, f) => {
                bound.push(*x);
                f.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    pub fn free_vars(&self) -> BTreeSet<u32> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    /// Replaces every occurrence of `from`, binders included, by `to`. The
    /// caller is responsible for `to` not occurring in the formula.
    pub fn rename(&self, from: u32, to: u32) -> Formula {
        match self {
            Formula::Equals(a, b) => Formula::Equals(a.rename(from, to), b.rename(from, to)),
            Formula::And(fs) => Formula::And(fs.iter().map(|f| f.rename(from, to)).collect()),
            Formula::Or(fs) => Formula::Or(fs.iter().map(|f| f.rename(from, to)).collect()),
            Formula::Not(f) => Formula::negate(f.rename(from, to)),
            Formula::Exists(x, f) => {
                Formula::exists(if *x == from { to } else { *x }, f.rename(from, to))
            }
        }
    }

    /// Rewrites `∃x(A ∨ B)` into `∃xA ∨ ∃xB` everywhere.
    pub fn distribute_exists(&self) -> Formula {
        match self {
            Formula::Equals(..) => self.clone(),
            Formula::And(fs) => Formula::And(fs.iter().map(Formula::distribute_exists).collect()),
            Formula::Or(fs) => Formula::Or(fs.iter().map(Formula::distribute_exists).collect()),
            Formula::Not(f) => Formula::negate(f.distribute_exists()),
            Formula::Exists(x, body) => match body.distribute_exists() {
                Formula::Or(fs) => Formula::Or(
                    fs.into_iter()
                        .map(|f| Formula::exists(*x, f).distribute_exists())
                        .collect(),
                ),
                b => Formula::exists(*x, b),
            },
        }
    }
}

/// Dense univariate polynomial, constant coefficient first, no trailing zeros.
#[derive(Debug, Clone, PartialEq)]
struct Poly(Vec<Scalar>);

impl Poly {
    fn constant(c: Scalar) -> Poly {
        Poly(vec![c]).trimmed()
    }

    fn trimmed(mut self) -> Poly {
        while self.0.last().is_some_and(Scalar::is_zero) {
            self.0.pop();
        }
        self
    }

    fn coeff(&self, k: usize) -> Scalar {
        self.0.get(k).cloned().unwrap_or_default()
    }

    fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn add(&self, other: &Poly) -> Result<Poly> {
        let n = self.0.len().max(other.0.len());
        let coeffs = (0..n)
            .map(|k| self.coeff(k).add(&other.coeff(k)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly(coeffs).trimmed())
    }

    fn sub(&self, other: &Poly) -> Result<Poly> {
        let neg = Poly(other.0.iter().map(Scalar::neg).collect());
        self.add(&neg)
    }

    fn mul(&self, other: &Poly) -> Result<Poly> {
        if self.0.is_empty() || other.0.is_empty() {
            return Ok(Poly(Vec::new()));
        }
        let mut coeffs = vec![Scalar::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b)?)?;
            }
        }
        Ok(Poly(coeffs).trimmed())
    }
}

fn conjuncts(f: &Formula) -> Vec<&Formula> {
    match f {
        Formula::And(fs) => fs.iter().flat_map(conjuncts).collect(),
        other => vec![other],
    }
}

/// Three-valued conjunction: a definite `false` wins over an error.
fn kleene_and(results: impl IntoIterator<Item = Result<bool>>) -> Result<bool> {
    let mut error = None;
    for r in results {
        match r {
            Ok(false) => return Ok(false),
            Ok(true) => {}
            Err(e) => {
                error.get_or_insert(e);
            }
        }
    }
    error.map_or(Ok(true), Err)
}

/// Three-valued disjunction: a definite `true` wins over an error.
fn kleene_or(results: impl IntoIterator<Item = Result<bool>>) -> Result<bool> {
    let mut error = None;
    for r in results {
        match r {
            Ok(true) => return Ok(true),
            Ok(false) => {}
            Err(e) => {
                error.get_or_insert(e);
            }
        }
    }
    error.map_or(Ok(false), Err)
}

/// Exact truth value over the reals.
///
/// Existentials are decided in two ways after being distributed over `or`:
/// if the bound variable occurs linearly in some equation of the body's
/// conjunction, the solutions of those equations are the only candidates;
/// otherwise every equation mentioning it must read `αx² + β = 0`, which is
/// solvable iff `−β/α ≥ 0` (with all such equations agreeing on `x²`).
pub fn evaluate(phi: &Formula, val: &Valuation) -> Result<bool> {
    match phi {
        Formula::Equals(a, b) => Ok(a.evaluate(val)? == b.evaluate(val)?),
        Formula::And(fs) => kleene_and(fs.iter().map(|f| evaluate(f, val))),
        Formula::Or(fs) => kleene_or(fs.iter().map(|f| evaluate(f, val))),
        Formula::Not(f) => Ok(!evaluate(f, val)?),
        Formula::Exists(x, body) => evaluate_exists(phi, *x, body, val),
    }
}

fn evaluate_exists(phi: &Formula, x: u32, body: &Formula, val: &Valuation) -> Result<bool> {
    if !body.free_vars().contains(&x) {
        return evaluate(body, val);
    }
    if let Formula::Or(fs) = body {
        return kleene_or(
            fs.iter()
                .map(|f| evaluate(&Formula::exists(x, f.clone()), val)),
        );
    }
    let parts = conjuncts(body);
    let (with_x, without_x): (Vec<&Formula>, Vec<&Formula>) =
        parts.iter().partition(|f| f.free_vars().contains(&x));

    // equations in x, reduced to `poly(x) = 0`
    let mut polys = Vec::new();
    let mut candidates: Vec<Scalar> = Vec::new();
    for f in &with_x {
        if let Formula::Equals(a, b) = f {
            let p = a.polynomial(x, val)?.sub(&b.polynomial(x, val)?)?;
            match p.degree() {
                // β ≠ 0 with α = 0: no x satisfies this conjunct
                Some(0) => return Ok(false),
                Some(1) => {
                    let root = p.coeff(0).neg().div(&p.coeff(1))?;
                    if !candidates.contains(&root) {
                        candidates.push(root);
                    }
                }
                _ => {}
            }
            polys.push((f, p));
        }
    }

    if !candidates.is_empty() {
        return kleene_or(candidates.into_iter().map(|c| {
            let mut v = val.clone();
            v.insert(x, c);
            evaluate(body, &v)
        }));
    }

    // square pattern: every conjunct with x is an equation αx² + β = 0
    let unsupported = || Error::UnsupportedQuantifierPattern(phi.to_string());
    if polys.len() != with_x.len() {
        return kleene_and(
            without_x
                .iter()
                .map(|f| evaluate(f, val))
                .chain(std::iter::once(Err(unsupported()))),
        );
    }
    let mut square: Option<Scalar> = None;
    for (_, p) in &polys {
        match p.degree() {
            None => {}
            Some(2) if p.coeff(1).is_zero() => {
                let s = p.coeff(0).neg().div(&p.coeff(2))?;
                match &square {
                    Some(prev) if *prev != s => return Ok(false),
                    _ => square = Some(s),
                }
            }
            _ => return Err(unsupported()),
        }
    }
    if square.as_ref().is_some_and(Scalar::is_negative) {
        return Ok(false);
    }
    kleene_and(without_x.iter().map(|f| evaluate(f, val)))
}

/// `v_{4(k−1)+j}` := coordinate `j` of point `k`.
pub fn flatten(points: &[Point4]) -> Valuation {
    points
        .iter()
        .flat_map(|p| p.coords().iter())
        .enumerate()
        .map(|(i, c)| (i as u32 + 1, c.clone()))
        .collect()
}

pub const BUILTIN_NAMES: [&str; 4] = ["phi_col", "phi_lambda", "phi_simul", "phi_bw"];

fn v(i: u32) -> Term {
    Term::Var(i)
}

fn sum_all(terms: impl IntoIterator<Item = Term>) -> Term {
    terms.into_iter().reduce(Term::sum).unwrap_or(Term::Zero)
}

fn two() -> Term {
    Term::sum(Term::One, Term::One)
}

/// `⋀ᵢ v_{4+i} + x·v_i = v_i + x·v_{8+i}`, i.e. `q = p + x(r − p)`.
fn line_equations(x: u32) -> Vec<Formula> {
    (1..=4)
        .map(|i| {
            Formula::equals(
                Term::sum(v(4 + i), Term::product(v(x), v(i))),
                Term::sum(v(i), Term::product(v(x), v(8 + i))),
            )
        })
        .collect()
}

fn points_equal(a: u32, b: u32) -> Vec<Formula> {
    (0..4)
        .map(|i| Formula::equals(v(a + i), v(b + i)))
        .collect()
}

pub fn builtin(name: &str) -> Result<Formula> {
    Ok(match name {
        "phi_col" => Formula::Or(vec![
            Formula::exists(13, Formula::And(line_equations(13))),
            Formula::And(points_equal(9, 1)),
        ]),
        "phi_lambda" => {
            // (v1 − v5)² = Σ (v_i − v_{4+i})², expanded with subtrahends
            // moved across
            let lhs = sum_all([
                Term::product(v(1), v(1)),
                Term::product(v(5), v(5)),
                Term::product(
                    two(),
                    sum_all((2..=4).map(|i| Term::product(v(i), v(4 + i)))),
                ),
            ]);
            let rhs = sum_all(
                std::iter::once(Term::product(two(), Term::product(v(1), v(5)))).chain(
                    (2..=4).flat_map(|i| {
                        [Term::product(v(i), v(i)), Term::product(v(4 + i), v(4 + i))]
                    }),
                ),
            );
            Formula::equals(lhs, rhs)
        }
        "phi_simul" => Formula::equals(v(1), v(5)),
        "phi_bw" => {
            let mut body = line_equations(13);
            body.push(Formula::exists(
                14,
                Formula::equals(v(13), Term::product(v(14), v(14))),
            ));
            body.push(Formula::exists(
                15,
                Formula::equals(Term::One, Term::sum(v(13), Term::product(v(15), v(15)))),
            ));
            let mut degenerate = points_equal(9, 1);
            degenerate.extend(points_equal(5, 1));
            Formula::Or(vec![
                Formula::exists(13, Formula::And(body)),
                Formula::And(degenerate),
            ])
        }
        other => return Err(Error::UnknownFormula(other.to_string())),
    })
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(i) => write!(f, "v{i}"),
            Term::Zero => f.write_str("0"),
            Term::One => f.write_str("1"),
            Term::Sum(a, b) => write!(f, "(+ {a} {b})"),
            Term::Product(a, b) => write!(f, "(* {a} {b})"),
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |f: &mut fmt::Formatter<'_>, head: &str, fs: &[Formula]| {
            write!(f, "({head}")?;
            for x in fs {
                write!(f, " {x}")?;
            }
            f.write_str(")")
        };
        match self {
            Formula::Equals(a, b) => write!(f, "(= {a} {b})"),
            Formula::And(fs) => list(f, "and", fs),
            Formula::Or(fs) => list(f, "or", fs),
            Formula::Not(x) => write!(f, "(not {x})"),
            Formula::Exists(x, body) => write!(f, "(exists v{x} {body})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token<'a> {
    Open,
    Close,
    Atom(&'a str),
}

struct Parser<'a> {
    tokens: Vec<(usize, Token<'a>)>,
    pos: usize,
    end: usize,
}

fn tokenize(text: &str) -> Vec<(usize, Token<'_>)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in text.char_indices() {
        let delim = c == '(' || c == ')' || c.is_whitespace();
        if delim {
            if let Some(s) = start.take() {
                out.push((s, Token::Atom(&text[s..i])));
            }
            match c {
                '(' => out.push((i, Token::Open)),
                ')' => out.push((i, Token::Close)),
                _ => {}
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, Token::Atom(&text[s..])));
    }
    out
}

fn parse_var(atom: &str) -> Option<u32> {
    let digits = atom.strip_prefix('v')?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok().filter(|&i| i >= 1)
}

impl<'a> Parser<'a> {
    fn next(&mut self, expecting: &str) -> Result<(usize, Token<'a>)> {
        let tok = self
            .tokens
            .get(self.pos)
            .cloned()
            .ok_or_else(|| Error::SyntaxError {
                offset: self.end,
                message: format!("unexpected end of input, expected {expecting}"),
            })?;
        self.pos += 1;
        Ok(tok)
    }

    fn peek(&self) -> Option<&Token<'a>> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn close(&mut self) -> Result<()> {
        match self.next("')'")? {
            (_, Token::Close) => Ok(()),
            (offset, _) => Err(Error::SyntaxError {
                offset,
                message: "expected ')'".into(),
            }),
        }
    }

    fn var(&mut self) -> Result<u32> {
        match self.next("a variable")? {
            (offset, Token::Atom(a)) => parse_var(a).ok_or_else(|| Error::UnknownToken {
                offset,
                token: a.to_string(),
            }),
            (offset, _) => Err(Error::SyntaxError {
                offset,
                message: "expected a variable".into(),
            }),
        }
    }

    fn term(&mut self) -> Result<Term> {
        match self.next("a term")? {
            (_, Token::Atom("0")) => Ok(Term::Zero),
            (_, Token::Atom("1")) => Ok(Term::One),
            (offset, Token::Atom(a)) => {
                parse_var(a)
                    .map(Term::Var)
                    .ok_or_else(|| Error::UnknownToken {
                        offset,
                        token: a.to_string(),
                    })
            }
            (_, Token::Open) => {
                let op = match self.next("'+' or '*'")? {
                    (_, Token::Atom("+")) => Term::sum as fn(Term, Term) -> Term,
                    (_, Token::Atom("*")) => Term::product,
                    (offset, Token::Atom(a)) => {
                        return Err(Error::UnknownToken {
                            offset,
                            token: a.to_string(),
                        })
                    }
                    (offset, _) => {
                        return Err(Error::SyntaxError {
                            offset,
                            message: "expected '+' or '*'".into(),
                        })
                    }
                };
                let a = self.term()?;
                let b = self.term()?;
                self.close()?;
                Ok(op(a, b))
            }
            (offset, Token::Close) => Err(Error::SyntaxError {
                offset,
                message: "unexpected ')'".into(),
            }),
        }
    }

    fn formulas_until_close(&mut self) -> Result<Vec<Formula>> {
        let mut out = Vec::new();
        while self.peek() != Some(&Token::Close) {
            out.push(self.formula()?);
        }
        self.close()?;
        Ok(out)
    }

    fn formula(&mut self) -> Result<Formula> {
        match self.next("'('")? {
            (_, Token::Open) => {}
            (offset, _) => {
                return Err(Error::SyntaxError {
                    offset,
                    message: "expected '('".into(),
                })
            }
        }
        let f = match self.next("a connective")? {
            (_, Token::Atom("=")) => {
                let a = self.term()?;
                let b = self.term()?;
                self.close()?;
                Formula::Equals(a, b)
            }
            (_, Token::Atom("and")) => Formula::And(self.formulas_until_close()?),
            (_, Token::Atom("or")) => Formula::Or(self.formulas_until_close()?),
            (_, Token::Atom("not")) => {
                let f = self.formula()?;
                self.close()?;
                Formula::negate(f)
            }
            (_, Token::Atom("exists")) => {
                let x = self.var()?;
                let f = self.formula()?;
                self.close()?;
                Formula::exists(x, f)
            }
            (offset, Token::Atom(a)) => {
                return Err(Error::UnknownToken {
                    offset,
                    token: a.to_string(),
                })
            }
            (offset, _) => {
                return Err(Error::SyntaxError {
                    offset,
                    message: "expected a connective".into(),
                })
            }
        };
        Ok(f)
    }
}

pub fn parse(text: &str) -> Result<Formula> {
    let mut p = Parser {
        tokens: tokenize(text),
        pos: 0,
        end: text.len(),
    };
    let f = p.formula()?;
    if let Some((offset, _)) = p.tokens.get(p.pos) {
        return Err(Error::SyntaxError {
            offset: *offset,
            message: "trailing input after formula".into(),
        });
    }
    Ok(f)
}

impl FromStr for Formula {
    type Err = Error;

    fn from_str(s: &str) -> Result<Formula> {
        parse(s)
    }
}

/// Parses `v1=1/2,v3=0` into a valuation.
pub fn parse_assignment(text: &str) -> Result<Valuation> {
    let mut val = Valuation::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (name, value) = item
            .split_once('=')
            .ok_or_else(|| Error::InvalidConfig(format!("expected vN=VALUE, got {item:?}")))?;
        let idx = parse_var(name.trim())
            .ok_or_else(|| Error::InvalidConfig(format!("bad variable name {name:?}")))?;
        val.insert(idx, value.trim().parse()?);
    }
    Ok(val)
}

/// First disagreement found by [`oracle_agree`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Disagreement {
    pub tuple: Vec<String>,
    pub formula: bool,
    pub relation: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleVerdict {
    pub checks: u64,
    pub disagreement: Option<Disagreement>,
}

impl OracleVerdict {
    pub fn is_pass(&self) -> bool {
        self.disagreement.is_none()
    }
}

/// Compares `evaluate(φ, flatten(t))` with `R(t)` on every tuple, stopping at
/// the first disagreement.
pub fn oracle_agree<I>(phi: &Formula, r: &Relation, tuples: I) -> Result<OracleVerdict>
where
    I: IntoIterator<Item = Vec<Point4>>,
{
    let span = phi.free_vars().last().copied().unwrap_or(0) as usize;
    if span > 4 * r.arity() {
        return Err(Error::InvalidConfig(format!(
            "formula mentions v{span}, beyond the {} variables of {}",
            4 * r.arity(),
            r.name()
        )));
    }
    let mut checks = 0;
    for t in tuples {
        checks += 1;
        let by_formula = evaluate(phi, &flatten(&t))?;
        let by_relation = r.holds(&t)?;
        if by_formula != by_relation {
            return Ok(OracleVerdict {
                checks,
                disagreement: Some(Disagreement {
                    tuple: t.iter().map(Point4::to_string).collect(),
                    formula: by_formula,
                    relation: by_relation,
                }),
            });
        }
    }
    Ok(OracleVerdict {
        checks,
        disagreement: None,
    })
}

/// Every `arity`-tuple of points whose coordinates are drawn from `values`,
/// in lexicographic order.
pub fn grid(values: &[Scalar], arity: usize) -> impl Iterator<Item = Vec<Point4>> + '_ {
    let k = values.len() as u64;
    let dims = 4 * arity as u32;
    let total = k.checked_pow(dims).expect("grid too large");
    (0..total).map(move |mut idx| {
        let mut coords = vec![Scalar::zero(); dims as usize];
        for slot in coords.iter_mut().rev() {
            *slot = values[(idx % k) as usize].clone();
            idx /= k;
        }
        coords
            .chunks(4)
            .map(|c| Point4::from_coords([c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()]))
            .collect()
    })
}
