//! Surface syntax: polynomial literals, observable expressions, kernel spec
//! strings and scheme specs.
//!
//! Observable grammar:
//!
//! ```text
//! obs      := ['-'] sterm (('+' | '-') sterm)*
//! sterm    := [rational ['*']] chain
//! chain    := '∅' | '(' poly '@' rational ')' ('#' '(' poly '@' rational ')')*
//! poly     := ['-'] term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := atom ['^' integer]
//! atom     := rational | variable | '(' poly ')'
//! rational := ['-'] integer ['/' integer]
//! ```
//!
//! `#` is the Cauchy product; `*` inside a polynomial is fibre
//! multiplication. Variables are `q`, `p` (when d = 1), `q1..qd`, `p1..pd`
//! or `x1..xr`; kernel entries use `t1`, `t2`.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::fiber::{FiberPoly, Monomial, VariableScheme};
use crate::kernel::{BiPoly, SkewKernel};
use crate::observable::Observable;
use crate::Rat;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    At,
    Hash,
    Vacuum,
}

struct Lexer {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

fn lex(text: &str) -> Result<Lexer> {
    let mut toks = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < text.len() {
        let c = text[i..].chars().next().unwrap();
        if c.is_whitespace() {
            i += c.len_utf8();
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '@' => Tok::At,
            '#' => Tok::Hash,
            '∅' => Tok::Vacuum,
            '0'..='9' => {
                let mut j = i;
                while j < bytes.len() && bytes[j].is_ascii_digit() {
                    j += 1;
                }
                let n: BigInt = text[i..j].parse().expect("digits");
                i = j;
                toks.push((start, Tok::Int(n)));
                continue;
            }
            'a'..='z' | 'A'..='Z' => {
                let mut j = i;
                while j < bytes.len()
                    && (bytes[j].is_ascii_alphanumeric() || bytes[j] == b'_')
                {
                    j += 1;
                }
                let name = text[i..j].to_string();
                i = j;
                toks.push((start, Tok::Ident(name)));
                continue;
            }
            other => return Err(Error::parse(i, format!("unexpected character `{other}`"))),
        };
        i += c.len_utf8();
        toks.push((start, tok));
    }
    Ok(Lexer { toks, pos: 0, end: text.len() })
}

impl Lexer {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, tok: &Tok, what: &str) -> Result<()> {
        if self.peek() == Some(tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::parse(self.here(), format!("expected {what}")))
        }
    }

    fn done(&self) -> bool {
        self.pos >= self.toks.len()
    }

    fn expect_done(&self) -> Result<()> {
        if self.done() {
            Ok(())
        } else {
            Err(Error::parse(self.here(), "trailing input"))
        }
    }

    fn rational(&mut self) -> Result<Rat> {
        let negative = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        let pos = self.here();
        let Some(Tok::Int(num)) = self.next() else {
            return Err(Error::parse(pos, "expected a number"));
        };
        let mut value = Rat::from_integer(num);
        if self.peek() == Some(&Tok::Slash) {
            self.pos += 1;
            let pos = self.here();
            let Some(Tok::Int(den)) = self.next() else {
                return Err(Error::parse(pos, "expected a denominator"));
            };
            if den == BigInt::from(0) {
                return Err(Error::parse(pos, "zero denominator"));
            }
            value /= Rat::from_integer(den);
        }
        Ok(if negative { -value } else { value })
    }

    fn exponent(&mut self) -> Result<u32> {
        let pos = self.here();
        let Some(Tok::Int(e)) = self.next() else {
            return Err(Error::parse(pos, "expected an exponent"));
        };
        u32::try_from(e).map_err(|_| Error::parse(pos, "exponent too large"))
    }
}

/// Generic polynomial accumulator over `nvars` variables; the resolver maps
/// a variable name to its 0-based index.
struct PolyBuilder<'a> {
    nvars: usize,
    resolve: &'a dyn Fn(&str) -> Option<usize>,
}

type RawPoly = Vec<(Vec<u32>, Rat)>;

impl PolyBuilder<'_> {
    fn constant(&self, c: Rat) -> RawPoly {
        vec![(vec![0; self.nvars], c)]
    }

    fn add(&self, a: RawPoly, b: RawPoly) -> RawPoly {
        let mut out = a;
        out.extend(b);
        out
    }

    fn mul(&self, a: &RawPoly, b: &RawPoly) -> RawPoly {
        let mut out = Vec::new();
        for (ea, ca) in a {
            for (eb, cb) in b {
                let exps = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.push((exps, ca * cb));
            }
        }
        out
    }

    fn neg(&self, a: RawPoly) -> RawPoly {
        a.into_iter().map(|(e, c)| (e, -c)).collect()
    }

    fn pow(&self, a: &RawPoly, e: u32) -> RawPoly {
        let mut out = self.constant(Rat::one());
        for _ in 0..e {
            out = self.mul(&out, a);
        }
        out
    }

    fn expr(&self, lx: &mut Lexer) -> Result<RawPoly> {
        let mut acc = if lx.peek() == Some(&Tok::Minus) {
            lx.pos += 1;
            self.neg(self.term(lx)?)
        } else {
            self.term(lx)?
        };
        loop {
            match lx.peek() {
                Some(Tok::Plus) => {
                    lx.pos += 1;
                    let t = self.term(lx)?;
                    acc = self.add(acc, t);
                }
                Some(Tok::Minus) => {
                    lx.pos += 1;
                    let t = self.term(lx)?;
                    acc = self.add(acc, self.neg(t));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&self, lx: &mut Lexer) -> Result<RawPoly> {
        let mut acc = self.factor(lx)?;
        while lx.peek() == Some(&Tok::Star) {
            lx.pos += 1;
            let f = self.factor(lx)?;
            acc = self.mul(&acc, &f);
        }
        Ok(acc)
    }

    fn factor(&self, lx: &mut Lexer) -> Result<RawPoly> {
        let base = self.atom(lx)?;
        if lx.peek() == Some(&Tok::Caret) {
            lx.pos += 1;
            let e = lx.exponent()?;
            return Ok(self.pow(&base, e));
        }
        Ok(base)
    }

    fn atom(&self, lx: &mut Lexer) -> Result<RawPoly> {
        let pos = lx.here();
        match lx.peek() {
            Some(Tok::Int(_)) | Some(Tok::Minus) => Ok(self.constant(lx.rational()?)),
            Some(Tok::Ident(name)) => {
                let name = name.clone();
                lx.pos += 1;
                let idx = (self.resolve)(&name)
                    .ok_or_else(|| Error::parse(pos, format!("unknown variable `{name}`")))?;
                let mut exps = vec![0; self.nvars];
                exps[idx] = 1;
                Ok(vec![(exps, Rat::one())])
            }
            Some(Tok::LParen) => {
                lx.pos += 1;
                let inner = self.expr(lx)?;
                lx.eat(&Tok::RParen, "`)`")?;
                Ok(inner)
            }
            _ => Err(Error::parse(pos, "expected a polynomial atom")),
        }
    }
}

/// Parses a fibre polynomial against a fixed variable scheme.
pub fn parse_poly(text: &str, scheme: VariableScheme) -> Result<FiberPoly> {
    let mut lx = lex(text)?;
    let poly = poly_expr(&mut lx, scheme)?;
    lx.expect_done()?;
    Ok(poly)
}

fn poly_expr(lx: &mut Lexer, scheme: VariableScheme) -> Result<FiberPoly> {
    let resolve = move |name: &str| scheme.var_index(name);
    let builder = PolyBuilder { nvars: scheme.dim(), resolve: &resolve };
    let raw = builder.expr(lx)?;
    Ok(FiberPoly::from_terms(
        scheme,
        raw.into_iter().map(|(exps, c)| (Monomial::from_exps(exps), c)),
    ))
}

/// Parses a bivariate base polynomial in `t1`, `t2`.
pub fn parse_bipoly(text: &str) -> Result<BiPoly> {
    let mut lx = lex(text)?;
    let p = bipoly_expr(&mut lx)?;
    lx.expect_done()?;
    Ok(p)
}

fn bipoly_expr(lx: &mut Lexer) -> Result<BiPoly> {
    let resolve = |name: &str| match name {
        "t1" => Some(0),
        "t2" => Some(1),
        _ => None,
    };
    let builder = PolyBuilder { nvars: 2, resolve: &resolve };
    let raw = builder.expr(lx)?;
    let mut out = BiPoly::zero();
    for (exps, c) in raw {
        out.add_term(exps[0], exps[1], c);
    }
    Ok(out)
}

/// Parses an observable expression against a fixed scheme.
pub fn parse_observable_with_scheme(text: &str, scheme: VariableScheme) -> Result<Observable> {
    let mut lx = lex(text)?;
    let mut negative = false;
    if lx.peek() == Some(&Tok::Minus) {
        lx.pos += 1;
        negative = true;
    }
    let mut acc = sterm(&mut lx, scheme, negative)?;
    loop {
        match lx.peek() {
            Some(Tok::Plus) | Some(Tok::Minus) => {
                let neg = lx.next() == Some(Tok::Minus);
                let pos = lx.here();
                let term = sterm(&mut lx, scheme, neg)?;
                acc = acc.add(&term).map_err(|e| match e {
                    Error::ConfigMismatch(a, b) => Error::parse(
                        pos,
                        format!("chains of unequal configuration in one sum: {a} vs {b}"),
                    ),
                    other => other,
                })?;
            }
            None => return Ok(acc),
            _ => return Err(Error::parse(lx.here(), "expected `+`, `-` or end of input")),
        }
    }
}

fn sterm(lx: &mut Lexer, scheme: VariableScheme, negative: bool) -> Result<Observable> {
    let mut coeff = match lx.peek() {
        Some(Tok::Int(_)) => {
            let c = lx.rational()?;
            if lx.peek() == Some(&Tok::Star) {
                lx.pos += 1;
            }
            c
        }
        _ => Rat::one(),
    };
    if negative {
        coeff = -coeff;
    }
    let chain = parse_chain(lx, scheme)?;
    Ok(chain.scale(&coeff))
}

fn parse_chain(lx: &mut Lexer, scheme: VariableScheme) -> Result<Observable> {
    if lx.peek() == Some(&Tok::Vacuum) {
        lx.pos += 1;
        return Ok(Observable::unit_box(scheme));
    }
    let mut acc = parse_atom_slot(lx, scheme)?;
    while lx.peek() == Some(&Tok::Hash) {
        lx.pos += 1;
        let next = parse_atom_slot(lx, scheme)?;
        acc = acc.cauchy(&next)?;
    }
    Ok(acc)
}

fn parse_atom_slot(lx: &mut Lexer, scheme: VariableScheme) -> Result<Observable> {
    lx.eat(&Tok::LParen, "`(`")?;
    let poly = poly_expr(lx, scheme)?;
    lx.eat(&Tok::At, "`@`")?;
    let point = lx.rational()?;
    lx.eat(&Tok::RParen, "`)`")?;
    Ok(Observable::local(&poly, point))
}

/// Parses an observable, inferring the scheme from the variable names that
/// occur: `q`/`p` names give a canonical scheme with `d` the largest index,
/// `x` names a generic scheme with `r` the largest index. Inputs without
/// variables default to `generic:r=1`.
pub fn parse_observable(text: &str) -> Result<Observable> {
    let scheme = infer_scheme(text)?;
    parse_observable_with_scheme(text, scheme)
}

/// Scheme inference over every identifier in the input.
pub fn infer_scheme(text: &str) -> Result<VariableScheme> {
    let lx = lex(text)?;
    let mut canonical_d: Option<usize> = None;
    let mut generic_r: Option<usize> = None;
    for (pos, tok) in &lx.toks {
        let Tok::Ident(name) = tok else { continue };
        let (head, digits) = split_ident(name);
        match head {
            "q" | "p" => {
                let d = digits.unwrap_or(1);
                if d == 0 {
                    return Err(Error::parse(*pos, format!("bad variable `{name}`")));
                }
                canonical_d = Some(canonical_d.unwrap_or(1).max(d));
            }
            "x" => {
                let r = digits
                    .ok_or_else(|| Error::parse(*pos, "generic variables need an index"))?;
                if r == 0 {
                    return Err(Error::parse(*pos, format!("bad variable `{name}`")));
                }
                generic_r = Some(generic_r.unwrap_or(1).max(r));
            }
            _ => {
                return Err(Error::parse(*pos, format!("unknown variable `{name}`")));
            }
        }
    }
    match (canonical_d, generic_r) {
        (Some(_), Some(_)) => Err(Error::parse(
            0,
            "cannot mix canonical (q/p) and generic (x) variables",
        )),
        (Some(d), None) => Ok(VariableScheme::Canonical(d)),
        (None, Some(r)) => Ok(VariableScheme::Generic(r)),
        (None, None) => Ok(VariableScheme::Generic(1)),
    }
}

fn split_ident(name: &str) -> (&str, Option<usize>) {
    match name.find(|c: char| c.is_ascii_digit()) {
        None => (name, None),
        Some(i) => (&name[..i], name[i..].parse().ok()),
    }
}

/// Scheme spec strings: `canonical:d=<d>` or `generic:r=<r>`.
pub fn parse_scheme_spec(text: &str) -> Result<VariableScheme> {
    let t = text.trim();
    if let Some(rest) = t.strip_prefix("canonical:d=") {
        let d: usize = rest
            .trim()
            .parse()
            .map_err(|_| Error::parse(0, "bad canonical dimension"))?;
        if d == 0 {
            return Err(Error::parse(0, "canonical dimension must be positive"));
        }
        return Ok(VariableScheme::Canonical(d));
    }
    if let Some(rest) = t.strip_prefix("generic:r=") {
        let r: usize = rest
            .trim()
            .parse()
            .map_err(|_| Error::parse(0, "bad fibre dimension"))?;
        if r == 0 {
            return Err(Error::parse(0, "fibre dimension must be positive"));
        }
        return Ok(VariableScheme::Generic(r));
    }
    Err(Error::parse(0, "expected `canonical:d=<d>` or `generic:r=<r>`"))
}

/// Kernel spec strings:
/// `canonical:d=<d>[:G=<bipoly>]` or `matrix:[[<bipoly>,...],...]`.
pub fn parse_kernel_spec(text: &str) -> Result<SkewKernel> {
    let t = text.trim();
    if let Some(rest) = t.strip_prefix("canonical:d=") {
        let (d_part, g_part) = match rest.find(":G=") {
            Some(i) => (&rest[..i], Some(&rest[i + 3..])),
            None => (rest, None),
        };
        let d: usize = d_part
            .trim()
            .parse()
            .map_err(|_| Error::parse(0, "bad canonical dimension"))?;
        if d == 0 {
            return Err(Error::parse(0, "canonical dimension must be positive"));
        }
        let g = match g_part {
            Some(src) => parse_bipoly(src)?,
            None => BiPoly::one(),
        };
        return SkewKernel::canonical_symplectic(d, &g);
    }
    if let Some(rest) = t.strip_prefix("matrix:") {
        let rows = split_matrix(rest.trim())?;
        let mut entries = Vec::with_capacity(rows.len());
        for row in &rows {
            let mut parsed = Vec::with_capacity(row.len());
            for cell in row {
                parsed.push(parse_bipoly(cell)?);
            }
            entries.push(parsed);
        }
        let r = entries.len();
        if entries.iter().any(|row| row.len() != r) {
            return Err(Error::parse(0, "kernel matrix must be square"));
        }
        return SkewKernel::new(entries);
    }
    Err(Error::parse(0, "expected `canonical:d=<d>[:G=...]` or `matrix:[[...],...]`"))
}

/// Splits `[[a,b],[c,d]]` into rows of entry source strings, respecting
/// parenthesis nesting inside entries.
fn split_matrix(text: &str) -> Result<Vec<Vec<String>>> {
    let inner = text
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| Error::parse(0, "matrix spec must be bracketed"))?;
    let mut rows = Vec::new();
    let mut depth = 0usize;
    let mut row_src = String::new();
    let mut pending = false;
    for c in inner.chars() {
        match c {
            '[' => {
                if depth == 0 {
                    pending = true;
                    row_src.clear();
                } else {
                    row_src.push(c);
                }
                depth += 1;
            }
            ']' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| Error::parse(0, "unbalanced brackets"))?;
                if depth == 0 {
                    rows.push(split_top_level(&row_src));
                    pending = false;
                } else {
                    row_src.push(c);
                }
            }
            ',' if depth == 0 => {}
            _ if depth == 0 && !c.is_whitespace() => {
                return Err(Error::parse(0, "unexpected content between rows"));
            }
            _ => {
                if pending {
                    row_src.push(c);
                }
            }
        }
    }
    if depth != 0 {
        return Err(Error::parse(0, "unbalanced brackets"));
    }
    if rows.is_empty() {
        return Err(Error::parse(0, "empty kernel matrix"));
    }
    Ok(rows)
}

fn split_top_level(src: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for c in src.chars() {
        match c {
            '(' => {
                depth += 1;
                cur.push(c);
            }
            ')' => {
                depth = depth.saturating_sub(1);
                cur.push(c);
            }
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur));
            }
            _ => cur.push(c),
        }
    }
    out.push(cur);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Perm;

    const QP: VariableScheme = VariableScheme::Canonical(1);

    fn rat(n: i64) -> Rat {
        Rat::from_integer(n.into())
    }

    #[test]
    fn poly_literals() {
        let p = parse_poly("4*q*p - 1/2*p^2", QP).unwrap();
        assert_eq!(p.to_string(), "4*q*p - 1/2*p^2");
        assert_eq!(parse_poly("(q+p)*(q-p)", QP).unwrap(), parse_poly("q^2 - p^2", QP).unwrap());
        assert_eq!(parse_poly("-q", QP).unwrap(), parse_poly("0 - q", QP).unwrap());
        let g3 = VariableScheme::Generic(3);
        assert_eq!(parse_poly("x1*x3^2", g3).unwrap().to_string(), "x1*x3^2");
    }

    #[test]
    fn poly_errors_carry_positions() {
        let err = parse_poly("q + z", QP).unwrap_err();
        assert!(matches!(err, Error::Parse { pos: 4, .. }), "{err:?}");
        assert!(parse_poly("q / 2", QP).is_err());
        assert!(parse_poly("x1", QP).is_err());
        assert!(parse_poly("q3", VariableScheme::Canonical(2)).is_err());
    }

    #[test]
    fn observable_expressions() {
        let o = parse_observable("(q^2 @ 0)").unwrap();
        assert_eq!(o.scheme(), QP);
        assert_eq!(o.degree(), 1);

        let o = parse_observable("2*(q @ 0)#(1 @ 1)").unwrap();
        assert_eq!(o.to_string(), "2 (q @ 0)#(1 @ 1)");
        // star optional between coefficient and chain
        assert_eq!(parse_observable("2 (q @ 0)#(1 @ 1)").unwrap(), o);

        let two_terms = parse_observable("(q@0)#(p@1) + (p@0)#(q@1)").unwrap();
        assert_eq!(two_terms.n_terms(), 2);

        let vac = parse_observable("3/2 ∅").unwrap();
        assert!(vac.config().is_empty());
        assert_eq!(vac.to_string(), "3/2 ∅");
    }

    #[test]
    fn observable_negative_points_and_coeffs() {
        let o = parse_observable("-1/2 (q @ -1)").unwrap();
        assert_eq!(o.to_string(), "-1/2 (q @ -1)");
        let o = parse_observable("(q @ 0) - (p @ 0)").unwrap();
        assert_eq!(o.n_terms(), 2);
    }

    #[test]
    fn observable_errors() {
        // mixed schemes
        assert!(parse_observable("(q @ 0)#(x1 @ 1)").is_err());
        // unequal configs in a sum
        assert!(parse_observable("(q @ 0) + (q @ 1)").is_err());
        assert!(parse_observable("(q @ 0) + ∅").is_err());
        // syntax errors with positions
        let err = parse_observable("(q @ )").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
        assert!(parse_observable("(q 0)").is_err());
    }

    #[test]
    fn scheme_inference() {
        assert_eq!(infer_scheme("(q @ 0)").unwrap(), QP);
        assert_eq!(infer_scheme("(q2*p1 @ 0)").unwrap(), VariableScheme::Canonical(2));
        assert_eq!(infer_scheme("(x3 @ 0)").unwrap(), VariableScheme::Generic(3));
        assert_eq!(infer_scheme("(1 @ 0)").unwrap(), VariableScheme::Generic(1));
        assert!(infer_scheme("(q*x1 @ 0)").is_err());
    }

    #[test]
    fn scheme_specs() {
        assert_eq!(parse_scheme_spec("canonical:d=2").unwrap(), VariableScheme::Canonical(2));
        assert_eq!(parse_scheme_spec("generic:r=4").unwrap(), VariableScheme::Generic(4));
        assert!(parse_scheme_spec("canonical:d=0").is_err());
        assert!(parse_scheme_spec("nope").is_err());
    }

    #[test]
    fn kernel_specs() {
        let k = parse_kernel_spec("canonical:d=1").unwrap();
        assert_eq!(k.dim(), 2);
        assert_eq!(k.eval(1, 2, &rat(0), &rat(0)).unwrap(), rat(1));

        let k = parse_kernel_spec("canonical:d=2:G=t1*t2 + 1").unwrap();
        assert_eq!(k.dim(), 4);
        assert_eq!(k.eval(1, 3, &rat(2), &rat(3)).unwrap(), rat(7));

        let k = parse_kernel_spec("matrix:[[0, 1 + t1*t2],[-1 - t1*t2, 0]]").unwrap();
        assert_eq!(k.dim(), 2);
        assert!(k.validate_skew());

        assert!(parse_kernel_spec("matrix:[[0,1],[1,0]]").is_err());
        assert!(parse_kernel_spec("canonical:d=1:G=t1").is_err());
        assert!(parse_kernel_spec("matrix:[[0,1]]").is_err());
    }

    #[test]
    fn perm_literal_roundtrip_via_display() {
        let s: Perm = "[3 4 2 5 6 1]".parse().unwrap();
        assert_eq!(s.to_string(), "[3 4 2 5 6 1]");
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        use crate::observable::Config;

        fn arb_observable() -> impl Strategy<Value = Observable> {
            let scheme = VariableScheme::Canonical(1);
            let point = (-2i64..=2, 1i64..=2).prop_map(|(n, d)| Rat::new(n.into(), d.into()));
            let mono = proptest::collection::vec(0u32..3, 2).prop_map(Monomial::from_exps);
            let coeff = (-4i64..=4, 1i64..=3)
                .prop_map(|(n, d)| Rat::new(n.into(), d.into()));
            (proptest::collection::vec(point, 0..3), 1usize..=3).prop_flat_map(
                move |(points, nterms)| {
                    let n = points.len();
                    let config = Config(points);
                    proptest::collection::vec(
                        (proptest::collection::vec(mono.clone(), n), coeff.clone()),
                        nterms,
                    )
                    .prop_map(move |terms| {
                        let mut o = Observable::zero(scheme, config.clone());
                        for (slots, c) in terms {
                            o.add_term(slots, c);
                        }
                        o
                    })
                },
            )
        }

        proptest! {
            #[test]
            fn print_parse_roundtrip(o in arb_observable()) {
                let text = o.to_string();
                let back = parse_observable_with_scheme(&text, o.scheme()).unwrap();
                prop_assert_eq!(back, o);
            }
        }
    }
}
