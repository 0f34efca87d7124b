//! Desk-scale representation theory of symmetric groups and their Young
//! subgroups: explicit induced representations via the coset-action formula,
//! restriction, characters, hom-space dimensions and the Frobenius and
//! transitivity checks.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::RatMat;
use crate::perm::{all_perms, Composition, Perm};
use crate::Rat;

/// Groups get fully enumerated, so degrees stay small.
pub const MAX_DEGREE: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
enum GroupKind {
    Symmetric,
    Young(Vec<usize>),
}

/// A fully enumerated permutation group: the symmetric group `S_n` or a
/// Young subgroup embedded block-diagonally.
#[derive(Clone)]
pub struct FiniteGroup {
    degree: usize,
    kind: GroupKind,
    elements: Vec<Perm>,
    index: BTreeMap<Vec<usize>, usize>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}
impl Eq for FiniteGroup {}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            GroupKind::Symmetric => write!(f, "S_{}", self.degree),
            GroupKind::Young(parts) => {
                let names: Vec<String> = parts.iter().map(|p| format!("S_{p}")).collect();
                write!(f, "{} < S_{}", names.join(" x "), self.degree)
            }
        }
    }
}

impl FiniteGroup {
    pub fn symmetric(n: usize) -> Result<Self> {
        if n > MAX_DEGREE {
            return Err(Error::SizeCap(n));
        }
        Ok(Self::build(n, GroupKind::Symmetric, all_perms(n)))
    }

    /// `S_{p_1} x ... x S_{p_m}` embedded block-diagonally in `S_{p_1+...+p_m}`.
    pub fn young(parts: &Composition) -> Result<Self> {
        let n = parts.total();
        if n > MAX_DEGREE {
            return Err(Error::SizeCap(n));
        }
        let mut elements = vec![Perm::identity(n)];
        let mut offset = 0;
        for i in 0..parts.len() {
            let size = parts.part(i);
            let mut next = Vec::with_capacity(elements.len() * factorial(size));
            for block_perm in all_perms(size) {
                let embedded = Perm::identity(offset)
                    .direct_sum(&block_perm)
                    .direct_sum(&Perm::identity(n - offset - size));
                for e in &elements {
                    next.push(e.compose(&embedded).expect("same degree"));
                }
            }
            elements = next;
            offset += size;
        }
        elements.sort_by_key(|p| p.images_one_based());
        Ok(Self::build(n, GroupKind::Young(parts.parts().to_vec()), elements))
    }

    fn build(degree: usize, kind: GroupKind, elements: Vec<Perm>) -> Self {
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.images_one_based(), i))
            .collect();
        FiniteGroup { degree, kind, elements, index }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn contains(&self, g: &Perm) -> bool {
        g.degree() == self.degree && self.index.contains_key(&g.images_one_based())
    }

    pub fn index_of(&self, g: &Perm) -> Option<usize> {
        self.index.get(&g.images_one_based()).copied()
    }

    pub fn is_subgroup_of(&self, other: &FiniteGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|g| other.contains(g))
    }

    /// Adjacent transpositions (within each Young block); they generate the
    /// group.
    pub fn generators(&self) -> Vec<Perm> {
        let blocks: Vec<(usize, usize)> = match &self.kind {
            GroupKind::Symmetric => vec![(0, self.degree)],
            GroupKind::Young(parts) => {
                let mut out = Vec::new();
                let mut offset = 0;
                for &p in parts {
                    out.push((offset, p));
                    offset += p;
                }
                out
            }
        };
        let mut gens = Vec::new();
        for (offset, size) in blocks {
            for i in 0..size.saturating_sub(1) {
                let mut images: Vec<usize> = (1..=self.degree).collect();
                images.swap(offset + i, offset + i + 1);
                gens.push(Perm::from_images_one_based(&images).expect("valid"));
            }
        }
        gens
    }

    /// Right-coset representatives of `sub \ self`, one per coset, each the
    /// lexicographically first element of its coset.
    pub fn right_transversal(&self, sub: &FiniteGroup) -> Result<Vec<Perm>> {
        if !sub.is_subgroup_of(self) {
            return Err(Error::NotASubgroup(sub.to_string(), self.to_string()));
        }
        let mut reps: Vec<Perm> = Vec::new();
        for g in &self.elements {
            let covered = reps
                .iter()
                .any(|r| sub.contains(&g.compose(&r.inverse()).expect("same degree")));
            if !covered {
                reps.push(g.clone());
            }
        }
        Ok(reps)
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// The unshuffle-style transversal of a Young subgroup in the full symmetric
/// group: inverses of the block shuffles, sorted lexicographically.
pub fn young_transversal(parts: &Composition) -> Vec<Perm> {
    let mut reps: Vec<Perm> = crate::perm::shuffles(parts).iter().map(Perm::inverse).collect();
    reps.sort_by_key(|p| p.images_one_based());
    reps
}

/// A linear representation with explicit exact-rational matrices, one per
/// group element, validated as a homomorphism at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    group: FiniteGroup,
    dim: usize,
    mats: Vec<RatMat>,
}

impl Representation {
    /// `mats` must list one matrix per group element, aligned with
    /// `group.elements()`. Identity and the homomorphism property are
    /// checked: over all pairs for groups of order <= 120, and over
    /// (generators x all elements) above that, which implies the pairwise
    /// property by induction on generator words.
    pub fn new(group: FiniteGroup, mats: Vec<RatMat>) -> Result<Self> {
        assert_eq!(mats.len(), group.order(), "one matrix per element");
        let dim = mats.first().map_or(0, |m| m.rows());
        for m in &mats {
            assert_eq!((m.rows(), m.cols()), (dim, dim), "square matrices of equal size");
        }
        let rep = Representation { group, dim, mats };
        let e = Perm::identity(rep.group.degree());
        if *rep.matrix(&e).expect("identity in group") != RatMat::identity(dim) {
            return Err(Error::GroupMismatch);
        }
        let left: Vec<Perm> = if rep.group.order() <= 120 {
            rep.group.elements().to_vec()
        } else {
            rep.group.generators()
        };
        for s in &left {
            let ms = rep.matrix(s).expect("in group");
            for g in rep.group.elements() {
                let sg = s.compose(g).expect("same degree");
                let expect = ms.mul(rep.matrix(g).expect("in group"));
                if *rep.matrix(&sg).ok_or(Error::GroupMismatch)? != expect {
                    return Err(Error::GroupMismatch);
                }
            }
        }
        Ok(rep)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self, g: &Perm) -> Option<&RatMat> {
        self.group.index_of(g).map(|i| &self.mats[i])
    }

    pub fn trivial(group: &FiniteGroup) -> Self {
        let mats = vec![RatMat::identity(1); group.order()];
        Representation { group: group.clone(), dim: 1, mats }
    }

    /// The 1-dimensional sign representation `g -> sgn(g)`.
    pub fn sign(group: &FiniteGroup) -> Self {
        let mats = group
            .elements()
            .iter()
            .map(|g| scalar_mat(Rat::from_integer(g.sign().into())))
            .collect();
        Representation { group: group.clone(), dim: 1, mats }
    }

    /// The natural permutation representation on the basis `e_1..e_n`,
    /// `g . e_j = e_{g(j)}`.
    pub fn natural(group: &FiniteGroup) -> Self {
        let n = group.degree();
        let mats = group
            .elements()
            .iter()
            .map(|g| {
                let mut m = RatMat::zeros(n, n);
                for j in 1..=n {
                    m.set(g.image(j) - 1, j - 1, Rat::one());
                }
                m
            })
            .collect();
        Representation { group: group.clone(), dim: n, mats }
    }

    /// A 1-dimensional representation of a Young subgroup: the product of
    /// trivial/sign characters per block, sign on block `j` iff `signs[j]`.
    pub fn young_one_dim(parts: &Composition, signs: &[bool]) -> Result<Self> {
        assert_eq!(signs.len(), parts.len(), "one sign flag per block");
        let group = FiniteGroup::young(parts)?;
        let mut starts = Vec::new();
        let mut acc = 0;
        for i in 0..parts.len() {
            starts.push(acc);
            acc += parts.part(i);
        }
        let mats = group
            .elements()
            .iter()
            .map(|g| {
                let mut value = Rat::one();
                for (j, &signed) in signs.iter().enumerate() {
                    if !signed {
                        continue;
                    }
                    let block: Vec<usize> = (0..parts.part(j))
                        .map(|o| g.image(starts[j] + o + 1) - 1 - starts[j])
                        .collect();
                    let block_perm = Perm::from_images_zero_based(block);
                    value *= Rat::from_integer(block_perm.sign().into());
                }
                scalar_mat(value)
            })
            .collect();
        Ok(Representation { group, dim: 1, mats })
    }

    pub fn character(&self) -> Character {
        Character {
            group: self.group.clone(),
            values: self.mats.iter().map(RatMat::trace).collect(),
        }
    }
}

fn scalar_mat(v: Rat) -> RatMat {
    let mut m = RatMat::zeros(1, 1);
    m.set(0, 0, v);
    m
}

/// Trace function of a representation, aligned with the group's element order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    group: FiniteGroup,
    values: Vec<Rat>,
}

impl Character {
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn value(&self, g: &Perm) -> Option<&Rat> {
        self.group.index_of(g).map(|i| &self.values[i])
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    /// Characters are class functions; exposed as a check rather than
    /// revalidated on every construction.
    pub fn is_class_function(&self) -> bool {
        self.group.elements().iter().all(|g| {
            self.group.elements().iter().all(|h| {
                let conj = h
                    .compose(g)
                    .and_then(|hg| hg.compose(&h.inverse()))
                    .expect("same degree");
                self.value(&conj) == self.value(g)
            })
        })
    }
}

/// Induced representation `Ind_H^G(V)` over an explicit right transversal.
/// Block `(w', w)` of the matrix of `g` is `V(h^{-1})` where `w g^{-1} = h w'`,
/// and zero otherwise.
pub fn induce(v: &Representation, group: &FiniteGroup, reps: &[Perm]) -> Result<Representation> {
    let h_group = v.group();
    if !h_group.is_subgroup_of(group) {
        return Err(Error::NotASubgroup(h_group.to_string(), group.to_string()));
    }
    // transversal check: every element decomposes as h * w for exactly one w
    if reps.len() * h_group.order() != group.order() {
        return Err(Error::NotATransversal);
    }
    for g in group.elements() {
        let hits = reps
            .iter()
            .filter(|w| h_group.contains(&g.compose(&w.inverse()).expect("degree")))
            .count();
        if hits != 1 {
            return Err(Error::NotATransversal);
        }
    }
    let dv = v.dim();
    let dim = reps.len() * dv;
    let mut mats = Vec::with_capacity(group.order());
    for g in group.elements() {
        let g_inv = g.inverse();
        let mut m = RatMat::zeros(dim, dim);
        for (col_block, omega) in reps.iter().enumerate() {
            let x = omega.compose(&g_inv)?;
            let (row_block, h) = reps
                .iter()
                .enumerate()
                .find_map(|(i, op)| {
                    let h = x.compose(&op.inverse()).expect("degree");
                    h_group.contains(&h).then_some((i, h))
                })
                .ok_or(Error::NotATransversal)?;
            let block = v.matrix(&h.inverse()).ok_or(Error::NotATransversal)?;
            for a in 0..dv {
                for b in 0..dv {
                    let val = block.get(a, b);
                    if !val.is_zero() {
                        m.set(row_block * dv + a, col_block * dv + b, val.clone());
                    }
                }
            }
        }
        mats.push(m);
    }
    Representation::new(group.clone(), mats)
}

/// Induction over the default transversal: the unshuffle-style transversal
/// when `H` is the Young subgroup of the given parts, otherwise the greedy
/// right transversal.
pub fn induce_default(v: &Representation, group: &FiniteGroup) -> Result<Representation> {
    let reps = match &v.group().kind {
        GroupKind::Young(parts) if *group == FiniteGroup::symmetric(group.degree())? => {
            young_transversal(&Composition::new(parts.clone()))
        }
        _ => group.right_transversal(v.group())?,
    };
    induce(v, group, &reps)
}

/// Same matrices, smaller group.
pub fn restrict(w: &Representation, h: &FiniteGroup) -> Result<Representation> {
    if !h.is_subgroup_of(w.group()) {
        return Err(Error::NotASubgroup(h.to_string(), w.group().to_string()));
    }
    let mats = h
        .elements()
        .iter()
        .map(|g| w.matrix(g).expect("subgroup element").clone())
        .collect();
    Ok(Representation { group: h.clone(), dim: w.dim(), mats })
}

/// `dim Hom_G(A, B) = (1/|G|) sum_g chi_A(g^{-1}) chi_B(g)`, an exact
/// non-negative integer for genuine rational representations.
pub fn hom_dim(a: &Representation, b: &Representation) -> Result<usize> {
    if a.group() != b.group() {
        return Err(Error::GroupMismatch);
    }
    let ca = a.character();
    let cb = b.character();
    let mut acc = Rat::zero();
    for g in a.group().elements() {
        acc += ca.value(&g.inverse()).expect("in group") * cb.value(g).expect("in group");
    }
    acc /= Rat::from_integer((a.group().order() as i64).into());
    assert!(
        acc.is_integer() && acc >= Rat::zero(),
        "character inner product of genuine representations must be a non-negative integer"
    );
    Ok(rat_to_usize(&acc))
}

fn rat_to_usize(r: &Rat) -> usize {
    use num_traits::ToPrimitive;
    r.to_integer().to_usize().expect("small non-negative integer")
}

/// Frobenius reciprocity as an equality of hom-space dimensions:
/// `dim Hom_G(Ind V, W) == dim Hom_H(V, Res W)`.
pub fn frobenius_check(v: &Representation, w: &Representation) -> Result<bool> {
    let induced = induce_default(v, w.group())?;
    let lhs = hom_dim(&induced, w)?;
    let rhs = hom_dim(v, &restrict(w, v.group())?)?;
    Ok(lhs == rhs)
}

/// Transitivity of induction `Ind_K^G = Ind_H^G . Ind_K^H` for nested Young
/// subgroups, checked as element-wise equality of characters.
pub fn transitivity_check(
    parts_k: &Composition,
    parts_h: &Composition,
    v: &Representation,
) -> Result<bool> {
    if parts_k.total() != parts_h.total() {
        return Err(Error::InvalidNesting(format!(
            "totals differ: {} vs {}",
            parts_k.total(),
            parts_h.total()
        )));
    }
    check_refines(parts_k, parts_h)?;
    let k_group = FiniteGroup::young(parts_k)?;
    if *v.group() != k_group {
        return Err(Error::GroupMismatch);
    }
    let h_group = FiniteGroup::young(parts_h)?;
    let g_group = FiniteGroup::symmetric(parts_k.total())?;
    let direct = induce_default(v, &g_group)?;
    let inner = induce(v, &h_group, &h_group.right_transversal(&k_group)?)?;
    let two_step = induce_default(&inner, &g_group)?;
    Ok(direct.character() == two_step.character())
}

/// `parts_k` must split into consecutive runs summing to each part of
/// `parts_h`; that is exactly when `Young(k) <= Young(h)` block-diagonally.
fn check_refines(parts_k: &Composition, parts_h: &Composition) -> Result<()> {
    let mut i = 0;
    for j in 0..parts_h.len() {
        let mut acc = 0;
        while acc < parts_h.part(j) {
            if i >= parts_k.len() {
                return Err(Error::InvalidNesting("ran out of fine parts".into()));
            }
            acc += parts_k.part(i);
            i += 1;
        }
        if acc != parts_h.part(j) {
            return Err(Error::InvalidNesting(format!(
                "fine parts overrun coarse part {}",
                j + 1
            )));
        }
    }
    if i != parts_k.len() {
        return Err(Error::InvalidNesting("unused fine parts".into()));
    }
    Ok(())
}

/// All 1-dimensional representations of the Young subgroup, one per
/// trivial/sign pattern over the blocks of size >= 2 (deduplicated).
pub fn young_one_dim_reps(parts: &Composition) -> Result<Vec<Representation>> {
    let meaningful: Vec<usize> = (0..parts.len()).filter(|&i| parts.part(i) >= 2).collect();
    let mut out = Vec::new();
    for mask in 0..(1usize << meaningful.len()) {
        let mut signs = vec![false; parts.len()];
        for (bit, &idx) in meaningful.iter().enumerate() {
            signs[idx] = mask & (1 << bit) != 0;
        }
        out.push(Representation::young_one_dim(parts, &signs)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec())
    }

    fn rat(n: i64) -> Rat {
        Rat::from_integer(n.into())
    }

    #[test]
    fn young_subgroup_basics() {
        let triv = FiniteGroup::young(&comp(&[1, 1])).unwrap();
        assert_eq!(triv.order(), 1);
        let y21 = FiniteGroup::young(&comp(&[2, 1])).unwrap();
        assert_eq!(y21.order(), 2);
        let y23 = FiniteGroup::young(&comp(&[2, 3])).unwrap();
        assert_eq!(y23.order(), 2 * 6);
        assert!(FiniteGroup::young(&comp(&[4, 3])).is_err());
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert!(y21.is_subgroup_of(&s3));
        assert!(!s3.is_subgroup_of(&y21));
    }

    #[test]
    fn regular_representation_of_s2() {
        let h = FiniteGroup::young(&comp(&[1, 1])).unwrap();
        let s2 = FiniteGroup::symmetric(2).unwrap();
        let ind = induce_default(&Representation::trivial(&h), &s2).unwrap();
        assert_eq!(ind.dim(), 2);
        let chi = ind.character();
        assert_eq!(*chi.value(&Perm::identity(2)).unwrap(), rat(2));
        let swap: Perm = "[2 1]".parse().unwrap();
        assert_eq!(*chi.value(&swap).unwrap(), rat(0));
        assert!(chi.is_class_function());
        assert_eq!(
            hom_dim(&ind, &Representation::trivial(&s2)).unwrap(),
            1
        );
    }

    #[test]
    fn induce_dims_and_identity_block() {
        let parts = comp(&[2, 1]);
        let h = FiniteGroup::young(&parts).unwrap();
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let v = Representation::sign(&h);
        let ind = induce_default(&v, &s3).unwrap();
        assert_eq!(ind.dim(), s3.order() / h.order() * v.dim());
        // the identity-coset block of Res Ind V carries V itself
        let reps = young_transversal(&parts);
        assert!(reps[0].is_identity());
        let res = restrict(&ind, &h).unwrap();
        for g in h.elements() {
            assert_eq!(res.matrix(g).unwrap().get(0, 0), v.matrix(g).unwrap().get(0, 0));
        }
    }

    #[test]
    fn restrict_examples() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let w = Representation::natural(&s3);
        assert_eq!(restrict(&w, &s3).unwrap(), w);
        let h = FiniteGroup::young(&comp(&[2, 1])).unwrap();
        let res = restrict(&w, &h).unwrap();
        assert_eq!(res.dim(), w.dim());
        let s2 = FiniteGroup::symmetric(2).unwrap();
        assert!(restrict(&w, &s2).is_err());
    }

    #[test]
    fn hom_dim_examples() {
        let s2 = FiniteGroup::symmetric(2).unwrap();
        let triv = Representation::trivial(&s2);
        let sign = Representation::sign(&s2);
        assert_eq!(hom_dim(&triv, &triv).unwrap(), 1);
        assert_eq!(hom_dim(&triv, &sign).unwrap(), 0);
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert!(hom_dim(&triv, &Representation::trivial(&s3)).is_err());
        // natural rep of S_3 = trivial + standard
        let nat = Representation::natural(&s3);
        assert_eq!(hom_dim(&nat, &Representation::trivial(&s3)).unwrap(), 1);
        assert_eq!(hom_dim(&nat, &nat).unwrap(), 2);
    }

    #[test]
    fn frobenius_small_cases() {
        let h = FiniteGroup::young(&comp(&[1, 1])).unwrap();
        let s2 = FiniteGroup::symmetric(2).unwrap();
        let v = Representation::trivial(&h);
        let w = Representation::trivial(&s2);
        assert!(frobenius_check(&v, &w).unwrap());
        let induced = induce_default(&v, &s2).unwrap();
        assert_eq!(hom_dim(&induced, &w).unwrap(), 1);
        assert!(frobenius_check(&Representation::sign(&s2), &Representation::sign(&s2)).unwrap());
    }

    #[test]
    fn transversal_independence_of_character() {
        let parts = comp(&[1, 2]);
        let h = FiniteGroup::young(&parts).unwrap();
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let v = Representation::sign(&h);
        let ush = young_transversal(&parts);
        let greedy = s3.right_transversal(&h).unwrap();
        // make a genuinely different transversal by twisting with subgroup elements
        let twisted: Vec<Perm> = greedy
            .iter()
            .map(|w| h.elements().last().unwrap().compose(w).unwrap())
            .collect();
        let c1 = induce(&v, &s3, &ush).unwrap().character();
        let c2 = induce(&v, &s3, &greedy).unwrap().character();
        let c3 = induce(&v, &s3, &twisted).unwrap().character();
        assert_eq!(c1, c2);
        assert_eq!(c1, c3);
    }

    #[test]
    fn bad_transversals_rejected() {
        let parts = comp(&[1, 1]);
        let h = FiniteGroup::young(&parts).unwrap();
        let s2 = FiniteGroup::symmetric(2).unwrap();
        let v = Representation::trivial(&h);
        let id = Perm::identity(2);
        assert!(induce(&v, &s2, &[id.clone()]).is_err());
        assert!(induce(&v, &s2, &[id.clone(), id]).is_err());
    }

    #[test]
    fn transitivity_paper_chain() {
        // S_1^3 < S_1 x S_2 < S_3 with the trivial representation
        let k = comp(&[1, 1, 1]);
        let h = comp(&[1, 2]);
        let v = Representation::trivial(&FiniteGroup::young(&k).unwrap());
        assert!(transitivity_check(&k, &h, &v).unwrap());
        // degenerate chain K = H
        let v2 = Representation::sign(&FiniteGroup::young(&comp(&[2])).unwrap());
        assert!(transitivity_check(&comp(&[2]), &comp(&[2]), &v2).unwrap());
        // invalid nesting: (2,1) does not refine (1,2)
        let v3 = Representation::trivial(&FiniteGroup::young(&comp(&[2, 1])).unwrap());
        assert!(transitivity_check(&comp(&[2, 1]), &comp(&[1, 2]), &v3).is_err());
    }

    #[test]
    fn one_dim_rep_enumeration() {
        assert_eq!(young_one_dim_reps(&comp(&[1, 1, 1])).unwrap().len(), 1);
        assert_eq!(young_one_dim_reps(&comp(&[2, 2])).unwrap().len(), 4);
        assert_eq!(young_one_dim_reps(&comp(&[3, 1])).unwrap().len(), 2);
        for rep in young_one_dim_reps(&comp(&[2, 2])).unwrap() {
            assert_eq!(rep.dim(), 1);
        }
    }

    #[test]
    fn young_one_dim_values() {
        let parts = comp(&[2, 2]);
        let rep = Representation::young_one_dim(&parts, &[true, false]).unwrap();
        let g: Perm = "[2 1 3 4]".parse().unwrap();
        assert_eq!(*rep.matrix(&g).unwrap().get(0, 0), rat(-1));
        let g2: Perm = "[1 2 4 3]".parse().unwrap();
        assert_eq!(*rep.matrix(&g2).unwrap().get(0, 0), rat(1));
    }
}
