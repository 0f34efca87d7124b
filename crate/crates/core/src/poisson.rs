//! The Poisson bracket induced by a skew kernel on the free commutative
//! 2-algebra, in two independent implementations: a closed-form double
//! derivation expansion and a literal recursion over the computation rules
//! (used as the oracle). Outputs are always normalized to the concatenated
//! ordered configuration of the two arguments.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::fiber::{FiberPoly, Monomial, VariableScheme};
use crate::kernel::SkewKernel;
use crate::observable::{Config, Observable};
use crate::perm::Perm;
use crate::Rat;

fn check_kernel(a: &Observable, b: &Observable, k: &SkewKernel) -> Result<()> {
    a.scheme().check_eq(&b.scheme())?;
    if k.dim() != a.scheme().dim() {
        return Err(Error::KernelDimensionMismatch {
            kernel: k.dim(),
            scheme: a.scheme().dim(),
        });
    }
    Ok(())
}

/// Closed-form bracket: on pure tensors `f_1 (x) ... (x) f_p` over `X` and
/// `g_1 (x) ... (x) g_q` over `Y`,
///
/// ```text
/// sum_{i,j} sum_{a,b} k[a][b](x_i, y_j)
///     (f_1 (x) .. d_a f_i .. (x) f_p) (x) (g_1 (x) .. d_b g_j .. (x) g_q)
/// ```
///
/// over the concatenated configuration `X.Y`.
pub fn bracket(a: &Observable, b: &Observable, k: &SkewKernel) -> Result<Observable> {
    check_kernel(a, b, k)?;
    let r = k.dim();
    let config = a.config().concat(b.config());
    let mut out = Observable::zero(a.scheme(), config);
    for (sa, ca) in a.terms() {
        for (sb, cb) in b.terms() {
            let cab = ca * cb;
            for (i, xi) in a.config().points().iter().enumerate() {
                for (j, yj) in b.config().points().iter().enumerate() {
                    for va in 0..r {
                        let Some((ea, ma)) = sa[i].derivative(va) else {
                            continue;
                        };
                        for vb in 0..r {
                            let Some((eb, mb)) = sb[j].derivative(vb) else {
                                continue;
                            };
                            let kv = k.entry0(va, vb).eval(xi, yj);
                            if kv.is_zero() {
                                continue;
                            }
                            let coeff = &cab
                                * kv
                                * Rat::from_integer(ea.into())
                                * Rat::from_integer(eb.into());
                            let mut slots = sa.clone();
                            slots[i] = ma.clone();
                            slots.extend(sb.iter().cloned());
                            slots[a.degree() + j] = mb;
                            out.add_term(slots, coeff);
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Oracle implementation: literal recursion over the extension theorem's
/// computation rules. Peels one Cauchy factor at a time, then one Hadamard
/// factor, bottoming out at the unit and generator cases; every intermediate
/// summand is transported back to the concatenated configuration.
pub fn bracket_recursive(a: &Observable, b: &Observable, k: &SkewKernel) -> Result<Observable> {
    check_kernel(a, b, k)?;
    let scheme = a.scheme();
    let config = a.config().concat(b.config());
    let mut out = Observable::zero(scheme, config);
    for (sa, ca) in a.terms() {
        for (sb, cb) in b.terms() {
            let term = rec_pure(scheme, sa, a.config(), sb, b.config(), k)?;
            out = out.add(&term.scale(&(ca * cb)))?;
        }
    }
    Ok(out)
}

fn rec_pure(
    scheme: VariableScheme,
    sa: &[Monomial],
    ca: &Config,
    sb: &[Monomial],
    cb: &Config,
    k: &SkewKernel,
) -> Result<Observable> {
    let p = sa.len();
    let q = sb.len();
    let concat = ca.concat(cb);
    // a vacuum factor is a multiple of the unit, and brackets kill units
    if p == 0 || q == 0 {
        return Ok(Observable::zero(scheme, concat));
    }
    if p == 1 && q == 1 {
        return rec_single(scheme, &sa[0], &ca.points()[0], &sb[0], &cb.points()[0], k);
    }
    if p > 1 {
        // { a1 . A', B } = { a1, B } . A'  +  a1 . { A', B }
        let a1 = Observable::monomial_term(
            scheme,
            Config(vec![ca.points()[0].clone()]),
            vec![sa[0].clone()],
            Rat::from_integer(1.into()),
        )?;
        let rest_cfg = Config(ca.points()[1..].to_vec());
        let rest = Observable::monomial_term(
            scheme,
            rest_cfg.clone(),
            sa[1..].to_vec(),
            Rat::from_integer(1.into()),
        )?;
        let s1 = rec_pure(scheme, &sa[..1], &Config(vec![ca.points()[0].clone()]), sb, cb, k)?
            .cauchy(&rest)?;
        // (x1, Y, X') -> (x1, X', Y)
        let align = Perm::identity(1).direct_sum(&Perm::block_swap(p - 1, q));
        let s1 = s1.transport(&align)?;
        let s2 = a1.cauchy(&rec_pure(scheme, &sa[1..], &rest_cfg, sb, cb, k)?)?;
        return s1.add(&s2);
    }
    // p == 1, q > 1: { a, b1 . B' } = { a, b1 } . B'  +  b1 . { a, B' }
    let b1 = Observable::monomial_term(
        scheme,
        Config(vec![cb.points()[0].clone()]),
        vec![sb[0].clone()],
        Rat::from_integer(1.into()),
    )?;
    let rest_cfg = Config(cb.points()[1..].to_vec());
    let rest = Observable::monomial_term(
        scheme,
        rest_cfg.clone(),
        sb[1..].to_vec(),
        Rat::from_integer(1.into()),
    )?;
    let s1 = rec_pure(scheme, sa, ca, &sb[..1], &Config(vec![cb.points()[0].clone()]), k)?
        .cauchy(&rest)?;
    let s2 = b1.cauchy(&rec_pure(scheme, sa, ca, &sb[1..], &rest_cfg, k)?)?;
    // (y1, x, Y') -> (x, y1, Y')
    let align = Perm::swap_first_blocks(1, 1, q - 1);
    s1.add(&s2.transport(&align)?)
}

/// Single-slot case, recursing on the Hadamard factors of the monomials.
fn rec_single(
    scheme: VariableScheme,
    ma: &Monomial,
    x: &Rat,
    mb: &Monomial,
    y: &Rat,
    k: &SkewKernel,
) -> Result<Observable> {
    let pair = Config(vec![x.clone(), y.clone()]);
    // rule 1: brackets vanish on units
    if ma.is_constant() || mb.is_constant() {
        return Ok(Observable::zero(scheme, pair));
    }
    let da = ma.total_degree();
    let db = mb.total_degree();
    if da == 1 && db == 1 {
        // rule 2: the bracket extends the kernel on generators
        let va = ma.exps().iter().position(|&e| e == 1).expect("degree 1");
        let vb = mb.exps().iter().position(|&e| e == 1).expect("degree 1");
        let kv = k.entry0(va, vb).eval(x, y);
        return Ok(Observable::unit(scheme, pair).scale(&kv));
    }
    let one = Observable::unit(scheme, pair);
    if da >= 2 {
        // rule 3, first variable: { f1 (.) f2, g } =
        //   { f1, g } (.) (f2 . 1)  +  (f1 . 1) (.) { f2, g }
        let va = ma.exps().iter().position(|&e| e > 0).expect("nonconstant");
        let f1 = Monomial::variable(scheme.dim(), va);
        let (_, f2) = ma.derivative(va).expect("positive exponent");
        let t1 = rec_single(scheme, &f1, x, mb, y, k)?
            .hadamard(&embed_first(scheme, &f2, &one)?)?;
        let t2 = embed_first(scheme, &f1, &one)?
            .hadamard(&rec_single(scheme, &f2, x, mb, y, k)?)?;
        return t1.add(&t2);
    }
    // rule 3, second variable
    let vb = mb.exps().iter().position(|&e| e > 0).expect("nonconstant");
    let g1 = Monomial::variable(scheme.dim(), vb);
    let (_, g2) = mb.derivative(vb).expect("positive exponent");
    let t1 = rec_single(scheme, ma, x, &g1, y, k)?
        .hadamard(&embed_second(scheme, &g2, &one)?)?;
    let t2 = embed_second(scheme, &g1, &one)?
        .hadamard(&rec_single(scheme, ma, x, &g2, y, k)?)?;
    t1.add(&t2)
}

// `m (x) 1` over the two-point configuration of `unit`
fn embed_first(scheme: VariableScheme, m: &Monomial, unit: &Observable) -> Result<Observable> {
    Observable::monomial_term(
        scheme,
        unit.config().clone(),
        vec![m.clone(), Monomial::constant(scheme.dim())],
        Rat::from_integer(1.into()),
    )
}

// `1 (x) m`
fn embed_second(scheme: VariableScheme, m: &Monomial, unit: &Observable) -> Result<Observable> {
    Observable::monomial_term(
        scheme,
        unit.config().clone(),
        vec![Monomial::constant(scheme.dim()), m.clone()],
        Rat::from_integer(1.into()),
    )
}

/// Pullback along the full diagonal followed by Hadamard multiplication of
/// all slots: sends an observable over `(t,...,t)` to one fibre polynomial.
pub fn diagonal_collapse(a: &Observable) -> Result<FiberPoly> {
    if !a.config().is_diagonal() {
        let pts = a.config().points();
        let bad = pts.windows(2).find(|w| w[0] != w[1]).expect("non-diagonal");
        return Err(Error::NotDiagonal(bad[0].to_string(), bad[1].to_string()));
    }
    let r = a.scheme().dim();
    let mut out = FiberPoly::zero(a.scheme());
    for (slots, c) in a.terms() {
        let product = slots
            .iter()
            .fold(Monomial::constant(r), |acc, m| acc.mul(m));
        out.add_term(product, c.clone());
    }
    Ok(out)
}

/// The standard canonical bracket `sum_i (df/dq_i dg/dp_i - df/dp_i dg/dq_i)`
/// on a canonical scheme of dimension `d`.
pub fn canonical_bracket(f: &FiberPoly, g: &FiberPoly, d: usize) -> Result<FiberPoly> {
    let want = VariableScheme::Canonical(d);
    f.scheme()
        .check_eq(&want)
        .map_err(|_| Error::NotCanonicalScheme { want: d, got: f.scheme().to_string() })?;
    g.scheme().check_eq(&want)?;
    let mut out = FiberPoly::zero(want);
    for i in 1..=d {
        let qi = i;
        let pi = d + i;
        let term = f
            .partial_derivative(qi)?
            .mul(&g.partial_derivative(pi)?)?
            .sub(&f.partial_derivative(pi)?.mul(&g.partial_derivative(qi)?)?)?;
        out = out.add(&term)?;
    }
    Ok(out)
}
