//! Skew-symmetric kernels: r x r matrices of exact bivariate polynomials
//! `k[a][b](t1, t2)` with `k[a][b](t1,t2) = -k[b][a](t2,t1)`, the generator
//! data for the Poisson bracket.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::Rat;

/// Polynomial in the two base variables `t1`, `t2` with rational coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    // (e1, e2) -> coefficient, graded-lex order, no zero coefficients
    terms: BTreeMap<(u32, u32), Rat>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = BiPoly::zero();
        p.add_term(0, 0, c);
        p
    }

    pub fn one() -> Self {
        BiPoly::constant(Rat::one())
    }

    pub fn t1() -> Self {
        let mut p = BiPoly::zero();
        p.add_term(1, 0, Rat::one());
        p
    }

    pub fn t2() -> Self {
        let mut p = BiPoly::zero();
        p.add_term(0, 1, Rat::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, e1: u32, e2: u32, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((e1, e2)) {
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

    pub fn add(&self, other: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(e1, e2), c) in &other.terms {
            out.add_term(e1, e2, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &BiPoly) -> BiPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(a1, a2), ca) in &self.terms {
            for (&(b1, b2), cb) in &other.terms {
                out.add_term(a1 + b1, a2 + b2, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    pub fn neg(&self) -> BiPoly {
        self.scale(&-Rat::one())
    }

    pub fn pow(&self, e: u32) -> BiPoly {
        let mut out = BiPoly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// The polynomial with `t1` and `t2` exchanged.
    pub fn swap_vars(&self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(&(e1, e2), c)| ((e2, e1), c.clone())).collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.swap_vars()
    }

    pub fn eval(&self, t1: &Rat, t2: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for (&(e1, e2), c) in &self.terms {
            let mut term = c.clone();
            for _ in 0..e1 {
                term *= t1;
            }
            for _ in 0..e2 {
                term *= t2;
            }
            acc += term;
        }
        acc
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let var_part = |&(e1, e2): &(u32, u32)| -> String {
            let mut parts = Vec::new();
            if e1 == 1 {
                parts.push("t1".to_string());
            } else if e1 > 1 {
                parts.push(format!("t1^{e1}"));
            }
            if e2 == 1 {
                parts.push("t2".to_string());
            } else if e2 > 1 {
                parts.push(format!("t2^{e2}"));
            }
            parts.join("*")
        };
        // graded-lex descending to match the fibre polynomial form
        let mut items: Vec<(&(u32, u32), &Rat)> = self.terms.iter().collect();
        items.sort_by_key(|(&(e1, e2), _)| (e1 + e2, e1, e2));
        for (i, (key, c)) in items.iter().rev().enumerate() {
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
            let vars = var_part(key);
            if vars.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{vars}")?;
            } else {
                write!(f, "{abs}*{vars}")?;
            }
        }
        Ok(())
    }
}

/// `r x r` matrix of bivariate polynomials with the skew constraint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewKernel {
    r: usize,
    entries: Vec<BiPoly>, // row-major, r*r
}

impl SkewKernel {
    /// Validates `k[a][b](t1,t2) = -k[b][a](t2,t1)` as polynomial identities.
    pub fn new(entries: Vec<Vec<BiPoly>>) -> Result<Self> {
        let k = SkewKernel::new_unchecked(entries);
        for a in 0..k.r {
            for b in a..k.r {
                if *k.entry0(a, b) != k.entry0(b, a).swap_vars().neg() {
                    return Err(Error::NotSkew { a: a + 1, b: b + 1 });
                }
            }
        }
        Ok(k)
    }

    /// Skips the skew validation. The bracket expansion itself never uses
    /// skewness, so non-skew pairings still induce a well-defined
    /// biderivation (just not an antisymmetric one).
    pub fn new_unchecked(entries: Vec<Vec<BiPoly>>) -> Self {
        let r = entries.len();
        let mut flat = Vec::with_capacity(r * r);
        for row in entries {
            assert_eq!(row.len(), r, "kernel matrix must be square");
            flat.extend(row);
        }
        SkewKernel { r, entries: flat }
    }

    /// `k[a][b](t1,t2) = G(t1,t2) * omega[a][b]` with `omega` the canonical
    /// symplectic block matrix `[[0, I_d], [-I_d, 0]]`; requires symmetric G.
    pub fn canonical_symplectic(d: usize, g: &BiPoly) -> Result<Self> {
        if !g.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let r = 2 * d;
        let mut entries = vec![vec![BiPoly::zero(); r]; r];
        for i in 0..d {
            entries[i][d + i] = g.clone();
            entries[d + i][i] = g.neg();
        }
        SkewKernel::new(entries)
    }

    pub fn dim(&self) -> usize {
        self.r
    }

    pub fn validate_skew(&self) -> bool {
        (0..self.r).all(|a| {
            (a..self.r).all(|b| *self.entry0(a, b) == self.entry0(b, a).swap_vars().neg())
        })
    }

    pub(crate) fn entry0(&self, a: usize, b: usize) -> &BiPoly {
        &self.entries[a * self.r + b]
    }

    /// Entry `(a, b)` with 1-based indices.
    pub fn entry(&self, a: usize, b: usize) -> Result<&BiPoly> {
        if a < 1 || a > self.r || b < 1 || b > self.r {
            return Err(Error::KernelIndexOutOfRange { a, b, r: self.r });
        }
        Ok(self.entry0(a - 1, b - 1))
    }

    pub fn eval(&self, a: usize, b: usize, t1: &Rat, t2: &Rat) -> Result<Rat> {
        Ok(self.entry(a, b)?.eval(t1, t2))
    }
}

impl fmt::Display for SkewKernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "matrix:[")?;
        for a in 0..self.r {
            if a > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for b in 0..self.r {
                if b > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.entry0(a, b))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}
