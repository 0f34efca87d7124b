//! Symmetric-group combinatorics: permutations in one-line notation, block
//! permutations, deck permutations, shuffles/unshuffles and the coset
//! decomposition behind induced equivariance.
//!
//! A permutation acts on tuples on the left by `act(s, x)_i = x_{s^{-1}(i)}`.
//! Every block-permutation constructor is specified by what `act_tuple` does,
//! not by a matrix form; the printed one-line forms fall out of that.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation of `{1..n}` in one-line notation. Stored 0-based:
/// `images[i] = s(i)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm { images: (0..n).collect() }
    }

    /// Build from 1-based images, validating bijectivity.
    pub fn from_images_one_based(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in images {
            if v < 1 || v > n || seen[v - 1] {
                return Err(Error::NotAPermutation(images.to_vec(), n));
            }
            seen[v - 1] = true;
        }
        Ok(Perm { images: images.iter().map(|&v| v - 1).collect() })
    }

    pub(crate) fn from_images_zero_based(images: Vec<usize>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().copied().eq(0..images.len())
        });
        Perm { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().copied().eq(0..self.images.len())
    }

    /// 1-based image of a 1-based point.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    pub fn images_one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v + 1).collect()
    }

    pub(crate) fn image0(&self, i: usize) -> usize {
        self.images[i]
    }

    /// Function composition: `compose(s, t)(i) = s(t(i))`.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(Perm {
            images: other.images.iter().map(|&j| self.images[j]).collect(),
        })
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Perm { images: inv }
    }

    /// Left action on tuples: `result_i = x_{s^{-1}(i)}`.
    pub fn act_tuple<T: Clone>(&self, x: &[T]) -> Result<Vec<T>> {
        if x.len() != self.degree() {
            return Err(Error::LengthMismatch { degree: self.degree(), len: x.len() });
        }
        let inv = self.inverse();
        Ok(inv.images.iter().map(|&j| x[j].clone()).collect())
    }

    /// Acts independently on two consecutive index ranges.
    pub fn direct_sum(&self, other: &Perm) -> Perm {
        let p = self.degree();
        let mut images = Vec::with_capacity(p + other.degree());
        images.extend_from_slice(&self.images);
        images.extend(other.images.iter().map(|&v| v + p));
        Perm { images }
    }

    /// The block swap with `act_tuple(block_swap(p, q), Y.X) = X.Y` for
    /// `|X| = p`, `|Y| = q`.
    pub fn block_swap(p: usize, q: usize) -> Perm {
        let mut images = Vec::with_capacity(p + q);
        images.extend(p..p + q);
        images.extend(0..p);
        Perm { images }
    }

    /// `tau_{p,q,r}`: swaps the first two blocks and fixes the third, so
    /// `act_tuple` sends `Y.X.Z` to `X.Y.Z`.
    pub fn swap_first_blocks(p: usize, q: usize, r: usize) -> Perm {
        Perm::block_swap(p, q).direct_sum(&Perm::identity(r))
    }

    /// The pair `(s, s2)` of 3-block cycles with
    /// `act_tuple(s, X.Y.Z) = Y.Z.X` and `act_tuple(s2, X.Y.Z) = Z.X.Y`
    /// for block sizes `(p, q, r)`. Satisfies `s2 = cyclic(q,r,p).0 o s`.
    pub fn cyclic_blocks(p: usize, q: usize, r: usize) -> (Perm, Perm) {
        let n = p + q + r;
        let mut first = vec![0; n];
        for l in 0..p {
            first[l] = q + r + l;
        }
        for i in 0..q {
            first[p + i] = i;
        }
        for j in 0..r {
            first[p + q + j] = q + j;
        }
        let mut second = vec![0; n];
        for l in 0..p {
            second[l] = r + l;
        }
        for i in 0..q {
            second[p + i] = r + p + i;
        }
        for j in 0..r {
            second[p + q + j] = j;
        }
        (Perm { images: first }, Perm { images: second })
    }

    /// +1 for even permutations, -1 for odd ones.
    pub fn sign(&self) -> i64 {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut transpositions = 0usize;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            transpositions += len - 1;
        }
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Cycle lengths in descending order, e.g. `[2, 1]` for a transposition in S_3.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            cycles.push(len);
        }
        cycles.sort_unstable_by(|a, b| b.cmp(a));
        cycles
    }

    /// Deck permutation `tau_s^{(i_1,...,i_n)}`: reorders `n` consecutive
    /// piles of the given sizes by `s` without disturbing the order inside a
    /// pile. Returned in the paper's printed one-line form, where entry `m`
    /// is the source position of the card landing at `m`; this is the form
    /// that satisfies `deck(s, I) o deck(s', I o s) = deck(s o s', I)`.
    pub fn deck(sigma: &Perm, parts: &Composition) -> Result<Perm> {
        if sigma.degree() != parts.len() {
            return Err(Error::ArityMismatch(sigma.degree(), parts.len()));
        }
        let starts = parts.starts();
        let mut images = Vec::with_capacity(parts.total());
        for slot in 0..parts.len() {
            let pile = sigma.image0(slot);
            for offset in 0..parts.part(pile) {
                images.push(starts[pile] + offset);
            }
        }
        Ok(Perm { images })
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Prints the textual literal, e.g. `[3 4 2 5 6 1]`.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", v + 1)?;
        }
        write!(f, "]")
    }
}

impl FromStr for Perm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::parse(0, "permutation literal must be bracketed"))?;
        let mut images = Vec::new();
        for tok in inner.split_whitespace() {
            let v: usize = tok
                .parse()
                .map_err(|_| Error::parse(0, format!("bad image `{tok}`")))?;
            images.push(v);
        }
        Perm::from_images_one_based(&images)
    }
}

/// An integer composition `(i_1, ..., i_n)`; zero parts are allowed and act
/// as deleted blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition { parts }
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn part(&self, i: usize) -> usize {
        self.parts[i]
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    fn starts(&self) -> Vec<usize> {
        let mut starts = Vec::with_capacity(self.parts.len());
        let mut acc = 0;
        for &p in &self.parts {
            starts.push(acc);
            acc += p;
        }
        starts
    }

    /// The reindexed composition `I o s = (i_{s(1)}, ..., i_{s(n)})`.
    pub fn reindex(&self, sigma: &Perm) -> Result<Composition> {
        if sigma.degree() != self.len() {
            return Err(Error::ArityMismatch(sigma.degree(), self.len()));
        }
        Ok(Composition {
            parts: (0..self.len()).map(|i| self.parts[sigma.image0(i)]).collect(),
        })
    }
}

/// All `s` in `S_{p+q}` with `s^{-1}` increasing on `1..=p` and on
/// `p+1..=p+q`, in lexicographic order of the one-line images.
pub fn unshuffles(p: usize, q: usize) -> Vec<Perm> {
    let n = p + q;
    let mut out = Vec::new();
    // choose the positions of the values 1..=p
    for positions in combinations(n, p) {
        let mut images = vec![0; n];
        let mut in_first = vec![false; n];
        for (value, &pos) in positions.iter().enumerate() {
            images[pos] = value;
            in_first[pos] = true;
        }
        let mut value = p;
        for (pos, flag) in in_first.iter().enumerate() {
            if !flag {
                images[pos] = value;
                value += 1;
            }
        }
        out.push(Perm { images });
    }
    out.sort_by(|a, b| a.images.cmp(&b.images));
    out
}

/// Whether `s^{-1}` is increasing on both consecutive blocks of sizes `p, q`.
pub fn is_unshuffle(sigma: &Perm, p: usize, q: usize) -> bool {
    if sigma.degree() != p + q {
        return false;
    }
    let inv = sigma.inverse();
    inv.images[..p].windows(2).all(|w| w[0] < w[1])
        && inv.images[p..].windows(2).all(|w| w[0] < w[1])
}

/// All `a` in `S_k` increasing on each consecutive block of the composition,
/// in lexicographic order of the one-line images.
pub fn shuffles(parts: &Composition) -> Vec<Perm> {
    let k = parts.total();
    let mut out = Vec::new();
    let mut images = vec![usize::MAX; k];
    let mut used = vec![false; k];
    assign_block(parts, 0, 0, &mut images, &mut used, &mut out);
    out.sort_by(|a, b| a.images.cmp(&b.images));
    out
}

fn assign_block(
    parts: &Composition,
    block: usize,
    offset: usize,
    images: &mut Vec<usize>,
    used: &mut Vec<bool>,
    out: &mut Vec<Perm>,
) {
    if block == parts.len() {
        out.push(Perm { images: images.clone() });
        return;
    }
    let size = parts.part(block);
    let free: Vec<usize> = (0..used.len()).filter(|&i| !used[i]).collect();
    for combo in combinations(free.len(), size) {
        let chosen: Vec<usize> = combo.iter().map(|&c| free[c]).collect();
        for (o, &value) in chosen.iter().enumerate() {
            images[offset + o] = value;
            used[value] = true;
        }
        assign_block(parts, block + 1, offset + size, images, used, out);
        for &value in &chosen {
            used[value] = false;
        }
    }
}

/// k-subsets of `{0..n}` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Decomposes `w o g^{-1} = h o w'` with `h` in the Young subgroup
/// `S_p x S_q` and `w'` an unshuffle representative. The decomposition is
/// unique; this is the shuffle mechanism of the induced equivariance theorem.
pub fn coset_decompose(omega: &Perm, g: &Perm, p: usize, q: usize) -> Result<(Perm, Perm)> {
    if !is_unshuffle(omega, p, q) {
        return Err(Error::NotARepresentative { p, q });
    }
    if g.degree() != p + q {
        return Err(Error::DegreeMismatch(g.degree(), p + q));
    }
    let x = omega.compose(&g.inverse())?;
    // h only permutes values within {1..p} and {p+1..p+q}, so the set of
    // positions holding low values determines the representative.
    let mut low_positions: Vec<usize> = (0..p + q).filter(|&i| x.images[i] < p).collect();
    low_positions.sort_unstable();
    let mut images = vec![0; p + q];
    let mut is_low = vec![false; p + q];
    for (value, &pos) in low_positions.iter().enumerate() {
        images[pos] = value;
        is_low[pos] = true;
    }
    let mut value = p;
    for (pos, flag) in is_low.iter().enumerate() {
        if !flag {
            images[pos] = value;
            value += 1;
        }
    }
    let omega_prime = Perm { images };
    let h = x.compose(&omega_prime.inverse())?;
    debug_assert!(h.images[..p].iter().all(|&v| v < p));
    Ok((h, omega_prime))
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// All permutations of degree n, in lexicographic order of the images.
pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut images = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, images: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Perm>) {
        if images.len() == n {
            out.push(Perm { images: images.clone() });
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                images.push(v);
                rec(n, images, used, out);
                images.pop();
                used[v] = false;
            }
        }
    }
    rec(n, &mut images, &mut used, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Perm {
        s.parse().unwrap()
    }

    #[test]
    fn compose_examples() {
        let id3 = Perm::identity(3);
        assert_eq!(id3.compose(&perm("[2 3 1]")).unwrap(), perm("[2 3 1]"));
        assert_eq!(perm("[2 1]").compose(&perm("[2 1]")).unwrap(), Perm::identity(2));
        // evaluate both sides pointwise
        let s = perm("[3 2 4 1]");
        let t = perm("[2 3 1 4]");
        let c = s.compose(&t).unwrap();
        for i in 1..=4 {
            assert_eq!(c.image(i), s.image(t.image(i)));
        }
    }

    #[test]
    fn compose_inverse_is_identity() {
        for s in all_perms(4) {
            assert_eq!(s.compose(&s.inverse()).unwrap(), Perm::identity(4));
        }
    }

    #[test]
    fn act_tuple_examples() {
        let x = ["a", "b", "c"];
        assert_eq!(Perm::identity(3).act_tuple(&x).unwrap(), x.to_vec());
        assert_eq!(perm("[2 1]").act_tuple(&["a", "b"]).unwrap(), vec!["b", "a"]);
    }

    #[test]
    fn act_tuple_is_left_action() {
        for n in 1..=4 {
            let x: Vec<usize> = (0..n).collect();
            for s in all_perms(n) {
                for t in all_perms(n) {
                    let lhs = s.act_tuple(&t.act_tuple(&x).unwrap()).unwrap();
                    let rhs = s.compose(&t).unwrap().act_tuple(&x).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn act_tuple_length_mismatch() {
        assert!(perm("[2 1]").act_tuple(&[1, 2, 3]).is_err());
    }

    #[test]
    fn block_swap_postcondition_exhaustive() {
        for p in 0..=6usize {
            for q in 0..=(6 - p) {
                let xs: Vec<String> = (0..p).map(|i| format!("x{i}")).collect();
                let ys: Vec<String> = (0..q).map(|i| format!("y{i}")).collect();
                let mut yx = ys.clone();
                yx.extend(xs.clone());
                let mut xy = xs.clone();
                xy.extend(ys.clone());
                assert_eq!(Perm::block_swap(p, q).act_tuple(&yx).unwrap(), xy);
            }
        }
    }

    #[test]
    fn block_swap_examples() {
        assert_eq!(Perm::block_swap(1, 1), perm("[2 1]"));
        for p in 0..=4usize {
            for q in 0..=4usize {
                let c = Perm::block_swap(p, q)
                    .compose(&Perm::block_swap(q, p))
                    .unwrap();
                assert!(c.is_identity());
            }
        }
    }

    #[test]
    fn cyclic_blocks_postconditions() {
        for p in 0..=3usize {
            for q in 0..=3usize {
                for r in 0..=3usize {
                    let xs: Vec<String> = (0..p).map(|i| format!("x{i}")).collect();
                    let ys: Vec<String> = (0..q).map(|i| format!("y{i}")).collect();
                    let zs: Vec<String> = (0..r).map(|i| format!("z{i}")).collect();
                    let xyz: Vec<String> =
                        xs.iter().chain(&ys).chain(&zs).cloned().collect();
                    let yzx: Vec<String> =
                        ys.iter().chain(&zs).chain(&xs).cloned().collect();
                    let zxy: Vec<String> =
                        zs.iter().chain(&xs).chain(&ys).cloned().collect();
                    let (s, s2) = Perm::cyclic_blocks(p, q, r);
                    assert_eq!(s.act_tuple(&xyz).unwrap(), yzx);
                    assert_eq!(s2.act_tuple(&xyz).unwrap(), zxy);
                    // sigma^(2)_{p,q,r} = sigma_{q,r,p} o sigma_{p,q,r}
                    let expected = Perm::cyclic_blocks(q, r, p).0.compose(&s).unwrap();
                    assert_eq!(s2, expected);
                }
            }
        }
    }

    #[test]
    fn cyclic_blocks_zero_sizes_collapse() {
        let (s, s2) = Perm::cyclic_blocks(0, 2, 1);
        assert_eq!(s.act_tuple(&["y1", "y2", "z"]).unwrap(), vec!["y1", "y2", "z"]);
        assert_eq!(s2.act_tuple(&["y1", "y2", "z"]).unwrap(), vec!["z", "y1", "y2"]);
    }

    #[test]
    fn deck_paper_examples() {
        let cases = [
            ("[3 2 4 1]", vec![1, 1, 2, 2], "[3 4 2 5 6 1]"),
            ("[2 3 1]", vec![1, 2, 3], "[2 3 4 5 6 1]"),
            ("[2 3 1]", vec![2, 3, 1], "[3 4 5 6 1 2]"),
            ("[2 1]", vec![4, 2], "[5 6 1 2 3 4]"),
        ];
        for (s, parts, expected) in cases {
            let d = Perm::deck(&perm(s), &Composition::new(parts)).unwrap();
            assert_eq!(d, perm(expected));
        }
    }

    #[test]
    fn deck_unit_piles_is_sigma() {
        for s in all_perms(4) {
            let d = Perm::deck(&s, &Composition::new(vec![1; 4])).unwrap();
            assert_eq!(d, s);
        }
    }

    fn compositions_with_total(n_parts: usize, total: usize) -> Vec<Vec<usize>> {
        if n_parts == 0 {
            return if total == 0 { vec![vec![]] } else { vec![] };
        }
        let mut out = Vec::new();
        for first in 0..=total {
            for mut rest in compositions_with_total(n_parts - 1, total - first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }

    #[test]
    fn deck_composition_and_inverse_laws() {
        // exhaustive for n <= 3, total <= 6 (including zero parts)
        for n in 1..=3usize {
            for total in 0..=6usize {
                for parts in compositions_with_total(n, total) {
                    let comp = Composition::new(parts);
                    for s in all_perms(n) {
                        let d_s = Perm::deck(&s, &comp).unwrap();
                        let reindexed = comp.reindex(&s).unwrap();
                        assert_eq!(
                            d_s.inverse(),
                            Perm::deck(&s.inverse(), &reindexed).unwrap()
                        );
                        for t in all_perms(n) {
                            let d_t = Perm::deck(&t, &reindexed).unwrap();
                            let lhs = d_s.compose(&d_t).unwrap();
                            let st = s.compose(&t).unwrap();
                            assert_eq!(lhs, Perm::deck(&st, &comp).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn shuffle_right_composition_bijection() {
        for n in 1..=3usize {
            for total in 0..=5usize {
                for parts in compositions_with_total(n, total) {
                    let comp = Composition::new(parts);
                    for s in all_perms(n) {
                        let deck = Perm::deck(&s, &comp).unwrap();
                        let reindexed = comp.reindex(&s).unwrap();
                        let mut mapped: Vec<Perm> = shuffles(&comp)
                            .iter()
                            .map(|a| a.compose(&deck).unwrap())
                            .collect();
                        mapped.sort_by(|a, b| a.images.cmp(&b.images));
                        assert_eq!(mapped, shuffles(&reindexed));
                    }
                }
            }
        }
    }

    #[test]
    fn unshuffle_counts_and_definition() {
        for p in 0..=4usize {
            for q in 0..=4usize {
                let ush = unshuffles(p, q);
                assert_eq!(ush.len() as u128, binomial(p + q, p));
                if p + q <= 4 {
                    // brute-force filter of the whole symmetric group
                    let brute: Vec<Perm> = all_perms(p + q)
                        .into_iter()
                        .filter(|s| is_unshuffle(s, p, q))
                        .collect();
                    assert_eq!(ush, brute);
                }
            }
        }
        assert_eq!(unshuffles(0, 3), vec![Perm::identity(3)]);
        assert_eq!(unshuffles(1, 1), all_perms(2));
    }

    #[test]
    fn unshuffles_are_inverse_shuffles() {
        for p in 0..=3usize {
            for q in 0..=3usize {
                let mut inv: Vec<Perm> = shuffles(&Composition::new(vec![p, q]))
                    .iter()
                    .map(Perm::inverse)
                    .collect();
                inv.sort_by(|a, b| a.images.cmp(&b.images));
                assert_eq!(inv, unshuffles(p, q));
            }
        }
    }

    #[test]
    fn shuffle_counts() {
        assert_eq!(shuffles(&Composition::new(vec![1, 1, 1, 1])).len(), 24);
        assert_eq!(shuffles(&Composition::new(vec![4])).len(), 1);
        assert_eq!(shuffles(&Composition::new(vec![2, 2])).len(), 6);
    }

    #[test]
    fn coset_decompose_identity() {
        let id = Perm::identity(4);
        let (h, w) = coset_decompose(&id, &id, 2, 2).unwrap();
        assert!(h.is_identity());
        assert!(w.is_identity());
    }

    #[test]
    fn coset_decompose_unique_and_reconstructs() {
        for p in 0..=4usize {
            for q in 0..=(4 - p) {
                let reps = unshuffles(p, q);
                let young: Vec<Perm> = all_perms(p)
                    .iter()
                    .flat_map(|a| {
                        all_perms(q).iter().map(|b| a.direct_sum(b)).collect::<Vec<_>>()
                    })
                    .collect();
                for omega in &reps {
                    for g in all_perms(p + q) {
                        let (h, w) = coset_decompose(omega, &g, p, q).unwrap();
                        let x = omega.compose(&g.inverse()).unwrap();
                        assert_eq!(h.compose(&w).unwrap(), x);
                        // uniqueness by exhaustive search over H x reps
                        let mut count = 0;
                        for hh in &young {
                            for ww in &reps {
                                if hh.compose(ww).unwrap() == x {
                                    count += 1;
                                    assert_eq!((hh, ww), (&h, &w));
                                }
                            }
                        }
                        assert_eq!(count, 1);
                    }
                }
            }
        }
    }

    #[test]
    fn coset_decompose_rejects_non_representative() {
        let not_rep = perm("[2 1 3]");
        assert!(!is_unshuffle(&not_rep, 2, 1));
        assert!(coset_decompose(&not_rep, &Perm::identity(3), 2, 1).is_err());
    }

    #[test]
    fn literal_roundtrip() {
        for s in all_perms(4) {
            let text = s.to_string();
            assert_eq!(text.parse::<Perm>().unwrap(), s);
        }
        assert!("[1 1]".parse::<Perm>().is_err());
        assert!("[3]".parse::<Perm>().is_err());
    }
}
