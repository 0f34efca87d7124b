//! Exact sparse multivariate polynomials over the fibre coordinates: the
//! fibre algebras `R[x1,...,xr]` (generic scheme) or `R[q1,...,qd,p1,...,pd]`
//! (canonical scheme).

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::Rat;

/// Naming scheme for the fibre coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VariableScheme {
    /// `r` coordinates named `x1..xr`.
    Generic(usize),
    /// `2d` coordinates named `q1..qd, p1..pd` (aliases `q`, `p` when d = 1).
    Canonical(usize),
}

impl VariableScheme {
    pub fn dim(&self) -> usize {
        match *self {
            VariableScheme::Generic(r) => r,
            VariableScheme::Canonical(d) => 2 * d,
        }
    }

    /// Name of the 0-based variable index.
    pub fn var_name(&self, i: usize) -> String {
        match *self {
            VariableScheme::Generic(_) => format!("x{}", i + 1),
            VariableScheme::Canonical(1) => {
                if i == 0 {
                    "q".to_string()
                } else {
                    "p".to_string()
                }
            }
            VariableScheme::Canonical(d) => {
                if i < d {
                    format!("q{}", i + 1)
                } else {
                    format!("p{}", i + 1 - d)
                }
            }
        }
    }

    /// Resolve a variable name to its 0-based index.
    pub fn var_index(&self, name: &str) -> Option<usize> {
        let (head, digits) = split_name(name)?;
        match *self {
            VariableScheme::Generic(r) => {
                if head != "x" {
                    return None;
                }
                let i = digits?;
                (1..=r).contains(&i).then(|| i - 1)
            }
            VariableScheme::Canonical(d) => {
                let i = match digits {
                    Some(i) => i,
                    None if d == 1 => 1,
                    None => return None,
                };
                if !(1..=d).contains(&i) {
                    return None;
                }
                match head {
                    "q" => Some(i - 1),
                    "p" => Some(d + i - 1),
                    _ => None,
                }
            }
        }
    }

    pub(crate) fn check_eq(&self, other: &VariableScheme) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::SchemeMismatch(format!("{self}"), format!("{other}")))
        }
    }
}

fn split_name(name: &str) -> Option<(&str, Option<usize>)> {
    let digits_at = name.find(|c: char| c.is_ascii_digit());
    match digits_at {
        None => Some((name, None)),
        Some(pos) => {
            let idx: usize = name[pos..].parse().ok()?;
            Some((&name[..pos], Some(idx)))
        }
    }
}

impl fmt::Display for VariableScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            VariableScheme::Generic(r) => write!(f, "generic:r={r}"),
            VariableScheme::Canonical(d) => write!(f, "canonical:d={d}"),
        }
    }
}

/// Exponent vector of a monomial; ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn constant(r: usize) -> Self {
        Monomial { exps: vec![0; r] }
    }

    pub fn variable(r: usize, i: usize) -> Self {
        let mut exps = vec![0; r];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn from_exps(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn n_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_constant(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    /// `(factor, reduced)` with `d(x^e)/dx = e * x^(e-1)`; `None` if the
    /// exponent is zero.
    pub fn derivative(&self, i: usize) -> Option<(u32, Monomial)> {
        let e = self.exps[i];
        if e == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[i] -= 1;
        Some((e, Monomial { exps }))
    }

    pub(crate) fn display<'a>(&'a self, scheme: &'a VariableScheme) -> MonomialDisplay<'a> {
        MonomialDisplay { mono: self, scheme }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Graded lexicographic: total degree first, then the exponent vector.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial{:?}", self.exps)
    }
}

pub struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    scheme: &'a VariableScheme,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_constant() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.mono.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", self.scheme.var_name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial with exact rational coefficients over a fibre scheme.
/// Zero coefficients are never stored; term order is graded-lex.
#[derive(Clone, PartialEq, Eq)]
pub struct FiberPoly {
    scheme: VariableScheme,
    terms: BTreeMap<Monomial, Rat>,
}

impl FiberPoly {
    pub fn zero(scheme: VariableScheme) -> Self {
        FiberPoly { scheme, terms: BTreeMap::new() }
    }

    pub fn constant(scheme: VariableScheme, c: Rat) -> Self {
        let mut p = FiberPoly::zero(scheme);
        p.add_term(Monomial::constant(scheme.dim()), c);
        p
    }

    pub fn one(scheme: VariableScheme) -> Self {
        FiberPoly::constant(scheme, Rat::one())
    }

    /// The coordinate function for a 1-based variable index.
    pub fn variable(scheme: VariableScheme, index: usize) -> Result<Self> {
        let r = scheme.dim();
        if index < 1 || index > r {
            return Err(Error::VariableOutOfRange { index, r });
        }
        let mut p = FiberPoly::zero(scheme);
        p.add_term(Monomial::variable(r, index - 1), Rat::one());
        Ok(p)
    }

    pub fn from_terms<I>(scheme: VariableScheme, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rat)>,
    {
        let mut p = FiberPoly::zero(scheme);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn scheme(&self) -> VariableScheme {
        self.scheme
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(m, c)| m.is_constant() && c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::total_degree).max().unwrap_or(0)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &FiberPoly) -> Result<FiberPoly> {
        self.scheme.check_eq(&other.scheme)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &FiberPoly) -> Result<FiberPoly> {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn scale(&self, c: &Rat) -> FiberPoly {
        if c.is_zero() {
            return FiberPoly::zero(self.scheme);
        }
        FiberPoly {
            scheme: self.scheme,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn neg(&self) -> FiberPoly {
        self.scale(&-Rat::one())
    }

    /// Fibrewise Hadamard multiplication: the plain polynomial product.
    pub fn mul(&self, other: &FiberPoly) -> Result<FiberPoly> {
        self.scheme.check_eq(&other.scheme)?;
        let mut out = FiberPoly::zero(self.scheme);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> FiberPoly {
        let mut out = FiberPoly::one(self.scheme);
        for _ in 0..e {
            out = out.mul(self).expect("same scheme");
        }
        out
    }

    /// Formal partial derivative with respect to the 1-based variable index.
    pub fn partial_derivative(&self, index: usize) -> Result<FiberPoly> {
        let r = self.scheme.dim();
        if index < 1 || index > r {
            return Err(Error::VariableOutOfRange { index, r });
        }
        let mut out = FiberPoly::zero(self.scheme);
        for (m, c) in &self.terms {
            if let Some((factor, reduced)) = m.derivative(index - 1) {
                out.add_term(reduced, c * Rat::from_integer(factor.into()));
            }
        }
        Ok(out)
    }

    pub fn eval(&self, point: &[Rat]) -> Result<Rat> {
        if point.len() != self.scheme.dim() {
            return Err(Error::PointLengthMismatch { want: self.scheme.dim(), got: point.len() });
        }
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (x, &e) in point.iter().zip(m.exps()) {
                for _ in 0..e {
                    term *= x;
                }
            }
            acc += term;
        }
        Ok(acc)
    }
}

impl fmt::Debug for FiberPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Canonical form: graded-lex descending, e.g. `4*q*p - 1/2*p^2`.
impl fmt::Display for FiberPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let abs = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_constant() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", m.display(&self.scheme))?;
            } else {
                write!(f, "{}*{}", abs, m.display(&self.scheme))?;
            }
        }
        Ok(())
    }
}
