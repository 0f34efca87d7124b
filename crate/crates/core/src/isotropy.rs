//! Rank-drop analysis: isotropy groups of configurations, invariance of
//! observables, and dimensions/bases of the isotropy-fixed subspaces by
//! orbit counting over the monomial-tensor basis.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::fiber::{Monomial, VariableScheme};
use crate::observable::{Config, Observable};
use crate::perm::Perm;
use crate::Rat;

/// Stabilizer of a configuration inside the symmetric group: the Young
/// subgroup permuting slots whose base points coincide.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsotropyGroup {
    n: usize,
    /// Equality classes of slot positions (0-based), ordered by first member.
    blocks: Vec<Vec<usize>>,
}

impl IsotropyGroup {
    pub fn of_config(config: &Config) -> Self {
        let mut blocks: Vec<(Rat, Vec<usize>)> = Vec::new();
        for (i, t) in config.points().iter().enumerate() {
            match blocks.iter_mut().find(|(v, _)| v == t) {
                Some((_, b)) => b.push(i),
                None => blocks.push((t.clone(), vec![i])),
            }
        }
        IsotropyGroup {
            n: config.len(),
            blocks: blocks.into_iter().map(|(_, b)| b).collect(),
        }
    }

    /// From an equality pattern such as `aab` (slots 1, 2 equal, slot 3
    /// distinct). Any letters work; equal letters mean equal points.
    pub fn from_pattern(pattern: &str) -> Result<Self> {
        let chars: Vec<char> = pattern.chars().collect();
        if chars.is_empty() {
            return Err(Error::parse(0, "empty equality pattern"));
        }
        if chars.iter().any(|c| !c.is_ascii_alphabetic()) {
            return Err(Error::parse(0, "equality pattern must be letters"));
        }
        Ok(IsotropyGroup::of_config(&Self::pattern_config(&chars)))
    }

    fn pattern_config(chars: &[char]) -> Config {
        let mut seen: Vec<char> = Vec::new();
        let points = chars
            .iter()
            .map(|&c| {
                let idx = match seen.iter().position(|&s| s == c) {
                    Some(i) => i,
                    None => {
                        seen.push(c);
                        seen.len() - 1
                    }
                };
                Rat::from_integer((idx as i64).into())
            })
            .collect();
        Config(points)
    }

    /// A configuration with this isotropy: block `j` gets point `j`.
    pub fn representative_config(&self) -> Config {
        let mut points = vec![Rat::one(); self.n];
        for (j, block) in self.blocks.iter().enumerate() {
            for &i in block {
                points[i] = Rat::from_integer((j as i64).into());
            }
        }
        Config(points)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn is_trivial(&self) -> bool {
        self.blocks.iter().all(|b| b.len() == 1)
    }

    pub fn order(&self) -> u128 {
        self.blocks
            .iter()
            .map(|b| (1..=b.len() as u128).product::<u128>())
            .product()
    }

    /// Adjacent transpositions within each block; they generate the group.
    pub fn generators(&self) -> Vec<Perm> {
        let mut gens = Vec::new();
        for block in &self.blocks {
            for w in block.windows(2) {
                let mut images: Vec<usize> = (0..self.n).collect();
                images.swap(w[0], w[1]);
                gens.push(Perm::from_images_zero_based(images));
            }
        }
        gens
    }

    /// Every element, as a product of per-block permutations.
    pub fn elements(&self) -> Vec<Perm> {
        let mut elements = vec![Perm::identity(self.n)];
        for block in &self.blocks {
            let mut next = Vec::new();
            for s in crate::perm::all_perms(block.len()) {
                // embed the block permutation at the block's positions
                let mut images: Vec<usize> = (0..self.n).collect();
                for (k, &pos) in block.iter().enumerate() {
                    images[pos] = block[s.image0(k)];
                }
                let embedded = Perm::from_images_zero_based(images);
                for e in &elements {
                    next.push(e.compose(&embedded).expect("same degree"));
                }
            }
            elements = next;
        }
        elements.sort_by(|a, b| a.images_one_based().cmp(&b.images_one_based()));
        elements
    }

    /// Canonical representative of a slot tuple under the group: sorts the
    /// sub-tuple within each block.
    fn canonical_tuple(&self, slots: &[Monomial]) -> Vec<Monomial> {
        let mut out = slots.to_vec();
        for block in &self.blocks {
            let mut sub: Vec<Monomial> = block.iter().map(|&i| slots[i].clone()).collect();
            sub.sort();
            for (k, &i) in block.iter().enumerate() {
                out[i] = sub[k].clone();
            }
        }
        out
    }
}

impl fmt::Display for IsotropyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sizes: Vec<String> = self.blocks.iter().map(|b| b.len().to_string()).collect();
        write!(f, "S_{}", sizes.join(" x S_"))
    }
}

/// True iff the observable is fixed by the isotropy group of its own
/// configuration (checked on the generating transpositions).
pub fn is_invariant(a: &Observable) -> bool {
    let iso = IsotropyGroup::of_config(a.config());
    iso.generators()
        .iter()
        .all(|g| a.transport(g).map(|moved| moved == *a).unwrap_or(false))
}

/// All monomial slot tuples with the given slot count and total degree.
pub fn monomial_tuple_basis(r: usize, n: usize, total_degree: u32) -> Vec<Vec<Monomial>> {
    let mut out = Vec::new();
    let mut current: Vec<Monomial> = Vec::with_capacity(n);
    fn rec(
        r: usize,
        n: usize,
        remaining: u32,
        current: &mut Vec<Monomial>,
        out: &mut Vec<Vec<Monomial>>,
    ) {
        if current.len() == n {
            if remaining == 0 {
                out.push(current.clone());
            }
            return;
        }
        let last = current.len() + 1 == n;
        for d in 0..=remaining {
            if last && d != remaining {
                continue;
            }
            for m in monomials_of_degree(r, d) {
                current.push(m);
                rec(r, n, remaining - d, current, out);
                current.pop();
            }
        }
    }
    rec(r, n, total_degree, &mut current, &mut out);
    out.sort();
    out
}

/// Monomials over `r` variables of exact total degree `d`, ascending.
pub fn monomials_of_degree(r: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; r];
    fn rec(i: usize, remaining: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == exps.len() {
            exps[i] = remaining;
            out.push(Monomial::from_exps(exps.clone()));
            return;
        }
        for e in 0..=remaining {
            exps[i] = e;
            rec(i + 1, remaining - e, exps, out);
        }
        exps[i] = 0;
    }
    if r == 0 {
        if d == 0 {
            out.push(Monomial::from_exps(Vec::new()));
        }
        return out;
    }
    rec(0, d, &mut exps, &mut out);
    out.sort();
    out
}

/// Dimension of the isotropy-fixed subspace in total degree `total_degree`:
/// the number of orbits of the monomial-tensor basis under the group
/// permuting slots within blocks. The action permutes basis vectors, so the
/// invariant dimension of the permutation representation is the orbit count.
pub fn invariant_dimension(
    r: usize,
    n: usize,
    total_degree: u32,
    iso: &IsotropyGroup,
) -> usize {
    orbit_representatives(r, n, total_degree, iso).len()
}

fn orbit_representatives(
    r: usize,
    n: usize,
    total_degree: u32,
    iso: &IsotropyGroup,
) -> BTreeMap<Vec<Monomial>, Vec<Vec<Monomial>>> {
    assert_eq!(iso.degree(), n, "isotropy degree must match slot count");
    let mut orbits: BTreeMap<Vec<Monomial>, Vec<Vec<Monomial>>> = BTreeMap::new();
    for tuple in monomial_tuple_basis(r, n, total_degree) {
        orbits.entry(iso.canonical_tuple(&tuple)).or_default().push(tuple);
    }
    orbits
}

/// One orbit-sum per orbit, over the isotropy's representative
/// configuration; each returned element passes `is_invariant` and together
/// they span the fixed subspace in that degree.
pub fn invariant_basis(
    scheme: VariableScheme,
    n: usize,
    total_degree: u32,
    iso: &IsotropyGroup,
) -> Vec<Observable> {
    let config = iso.representative_config();
    orbit_representatives(scheme.dim(), n, total_degree, iso)
        .into_values()
        .map(|orbit| {
            let mut o = Observable::zero(scheme, config.clone());
            for slots in orbit {
                o.add_term(slots, Rat::one());
            }
            o
        })
        .collect()
}

/// Averaging projector onto the fixed subspace:
/// `(1/|G_x|) sum_{g in G_x} transport(g, a)`.
pub fn symmetrize(a: &Observable) -> Observable {
    let iso = IsotropyGroup::of_config(a.config());
    let elements = iso.elements();
    let mut acc = Observable::zero(a.scheme(), a.config().clone());
    for g in &elements {
        acc = acc.add(&a.transport(g).expect("degree matches")).expect("same config");
    }
    let inv = Rat::new(1.into(), (elements.len() as i64).into());
    acc.scale(&inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_observable_with_scheme;

    const QP: VariableScheme = VariableScheme::Canonical(1);

    fn obs(s: &str) -> Observable {
        parse_observable_with_scheme(s, QP).unwrap()
    }

    fn rat(n: i64) -> Rat {
        Rat::from_integer(n.into())
    }

    #[test]
    fn isotropy_examples() {
        let distinct = IsotropyGroup::of_config(&Config(vec![rat(1), rat(2), rat(3)]));
        assert!(distinct.is_trivial());
        assert_eq!(distinct.order(), 1);

        let diag = IsotropyGroup::of_config(&Config(vec![rat(5), rat(5)]));
        assert_eq!(diag.order(), 2);
        assert_eq!(diag.blocks(), &[vec![0, 1]]);

        let mixed = IsotropyGroup::of_config(&Config(vec![rat(1), rat(1), rat(2)]));
        assert_eq!(mixed.order(), 2);
        assert_eq!(mixed.blocks(), &[vec![0, 1], vec![2]]);
        assert_eq!(mixed, IsotropyGroup::from_pattern("aab").unwrap());
        // non-adjacent coincidence
        let gap = IsotropyGroup::of_config(&Config(vec![rat(1), rat(2), rat(1)]));
        assert_eq!(gap.blocks(), &[vec![0, 2], vec![1]]);
    }

    #[test]
    fn pattern_errors() {
        assert!(IsotropyGroup::from_pattern("").is_err());
        assert!(IsotropyGroup::from_pattern("a1b").is_err());
    }

    #[test]
    fn elements_enumeration() {
        let iso = IsotropyGroup::from_pattern("aab").unwrap();
        let els = iso.elements();
        assert_eq!(els.len(), 2);
        let full = IsotropyGroup::from_pattern("aaa").unwrap();
        assert_eq!(full.elements().len(), 6);
        assert_eq!(full.elements(), crate::perm::all_perms(3));
    }

    #[test]
    fn invariance_paper_examples() {
        assert!(is_invariant(&Observable::unit(QP, Config(vec![rat(0), rat(0), rat(1)]))));
        assert!(is_invariant(&obs("(q @ 0)#(1 @ 0) + (1 @ 0)#(q @ 0)")));
        assert!(!is_invariant(&obs("(p @ 0)#(q @ 0) - (q @ 0)#(p @ 0)")));
        // symmetric bracket output survives on the diagonal
        assert!(is_invariant(&obs("(1 @ 0)#(1 @ 0)")));
    }

    #[test]
    fn dimension_examples() {
        let diag2 = IsotropyGroup::from_pattern("aa").unwrap();
        let free2 = IsotropyGroup::from_pattern("ab").unwrap();
        assert_eq!(invariant_dimension(2, 2, 1, &diag2), 2);
        assert_eq!(invariant_dimension(2, 2, 1, &free2), 4);
        for r in 1..=4 {
            assert_eq!(invariant_dimension(r, 2, 1, &diag2), r);
            assert_eq!(invariant_dimension(r, 2, 1, &free2), 2 * r);
        }
        let diag3 = IsotropyGroup::from_pattern("aaa").unwrap();
        assert_eq!(invariant_dimension(1, 3, 2, &diag3), 2);
    }

    #[test]
    fn basis_examples() {
        let diag2 = IsotropyGroup::from_pattern("aa").unwrap();
        let basis = invariant_basis(QP, 2, 1, &diag2);
        assert_eq!(basis.len(), 2);
        for b in &basis {
            assert!(is_invariant(b));
        }
        let expected_q = obs("(q @ 0)#(1 @ 0) + (1 @ 0)#(q @ 0)");
        let expected_p = obs("(p @ 0)#(1 @ 0) + (1 @ 0)#(p @ 0)");
        assert!(basis.contains(&expected_q));
        assert!(basis.contains(&expected_p));

        // trivial isotropy: all monomial tensors
        let free2 = IsotropyGroup::from_pattern("ab").unwrap();
        let basis = invariant_basis(QP, 2, 1, &free2);
        assert_eq!(basis.len(), 4);
        for b in &basis {
            assert_eq!(b.n_terms(), 1);
        }
    }

    #[test]
    fn symmetrize_examples() {
        let inv = obs("(q @ 0)#(1 @ 0) + (1 @ 0)#(q @ 0)");
        assert_eq!(symmetrize(&inv), inv);
        let anti = obs("(p @ 0)#(q @ 0) - (q @ 0)#(p @ 0)");
        assert!(symmetrize(&anti).is_zero());
        let half = obs("1/2 (q @ 0)#(1 @ 0) + 1/2 (1 @ 0)#(q @ 0)");
        assert_eq!(symmetrize(&obs("(q @ 0)#(1 @ 0)")), half);
        // idempotent and invariant on random-ish inputs
        let a = obs("(q^2 @ 1)#(p @ 1) - 3 (q @ 1)#(1 @ 1)");
        let s = symmetrize(&a);
        assert_eq!(symmetrize(&s), s);
        assert!(is_invariant(&s));
    }
}
