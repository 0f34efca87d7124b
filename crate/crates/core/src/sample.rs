//! Seeded random generation of configurations, polynomials, observables and
//! skew kernels for the axiom suites. Configurations deliberately repeat
//! points so the diagonal behavior gets exercised.

use std::ops::RangeInclusive;

use rand::Rng;

use crate::fiber::{FiberPoly, Monomial, VariableScheme};
use crate::kernel::{BiPoly, SkewKernel};
use crate::observable::{Config, Observable};
use crate::Rat;

/// Small rational from a fixed pool; repeats are likely.
pub fn random_point<R: Rng>(rng: &mut R) -> Rat {
    const POOL: [(i64, i64); 6] = [(0, 1), (1, 1), (2, 1), (-1, 1), (1, 2), (3, 1)];
    let (n, d) = POOL[rng.gen_range(0..POOL.len())];
    Rat::new(n.into(), d.into())
}

pub fn random_config<R: Rng>(rng: &mut R, len: RangeInclusive<usize>) -> Config {
    let n = rng.gen_range(len);
    Config((0..n).map(|_| random_point(rng)).collect())
}

fn random_coeff<R: Rng>(rng: &mut R) -> Rat {
    let num = rng.gen_range(-4i64..=4);
    let den = rng.gen_range(1i64..=3);
    Rat::new(if num == 0 { 1 } else { num }.into(), den.into())
}

pub fn random_monomial<R: Rng>(rng: &mut R, r: usize, max_degree: u32) -> Monomial {
    let degree = rng.gen_range(0..=max_degree);
    let mut exps = vec![0u32; r];
    for _ in 0..degree {
        exps[rng.gen_range(0..r)] += 1;
    }
    Monomial::from_exps(exps)
}

pub fn random_poly<R: Rng>(
    rng: &mut R,
    scheme: VariableScheme,
    max_degree: u32,
    max_terms: usize,
) -> FiberPoly {
    let n = rng.gen_range(1..=max_terms);
    FiberPoly::from_terms(
        scheme,
        (0..n).map(|_| (random_monomial(rng, scheme.dim(), max_degree), random_coeff(rng))),
    )
}

pub fn random_observable<R: Rng>(
    rng: &mut R,
    scheme: VariableScheme,
    config: &Config,
    max_degree: u32,
    max_terms: usize,
) -> Observable {
    let n = rng.gen_range(1..=max_terms);
    let mut o = Observable::zero(scheme, config.clone());
    for _ in 0..n {
        let slots = (0..config.len())
            .map(|_| random_monomial(rng, scheme.dim(), max_degree))
            .collect();
        o.add_term(slots, random_coeff(rng));
    }
    o
}

pub fn random_bipoly<R: Rng>(rng: &mut R, max_degree: u32) -> BiPoly {
    let mut p = BiPoly::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let e1 = rng.gen_range(0..=max_degree);
        let e2 = rng.gen_range(0..=max_degree.saturating_sub(e1));
        p.add_term(e1, e2, random_coeff(rng));
    }
    p
}

/// Random symmetric bivariate polynomial (for canonical kernels).
pub fn random_symmetric_bipoly<R: Rng>(rng: &mut R, max_degree: u32) -> BiPoly {
    let h = random_bipoly(rng, max_degree);
    h.add(&h.swap_vars())
}

/// Random skew kernel of fibre dimension `r`: off-diagonal entries are free,
/// mirrored with swapped variables and a sign; diagonal entries are forced
/// antisymmetric.
pub fn random_skew_kernel<R: Rng>(rng: &mut R, r: usize, max_degree: u32) -> SkewKernel {
    let mut entries = vec![vec![BiPoly::zero(); r]; r];
    for a in 0..r {
        let h = random_bipoly(rng, max_degree);
        entries[a][a] = h.sub(&h.swap_vars());
        for b in a + 1..r {
            let e = random_bipoly(rng, max_degree);
            entries[b][a] = e.swap_vars().neg();
            entries[a][b] = e;
        }
    }
    SkewKernel::new(entries).expect("constructed skew")
}

/// Random scheme: canonical d in 1..=2 or generic r in 1..=4.
pub fn random_scheme<R: Rng>(rng: &mut R) -> VariableScheme {
    if rng.gen_bool(0.5) {
        VariableScheme::Canonical(rng.gen_range(1..=2))
    } else {
        VariableScheme::Generic(rng.gen_range(1..=4))
    }
}
