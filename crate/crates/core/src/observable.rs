//! Multilocal observables: elements of the fibre of the free commutative
//! 2-algebra over an ordered configuration of base points. Each value is a
//! formal rational combination of slot-wise monomial tensors, stored fully
//! expanded so equality is structural.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::fiber::{FiberPoly, Monomial, VariableScheme};
use crate::perm::Perm;
use crate::Rat;

/// Ordered tuple of base points; the empty tuple is the vacuum.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Config(pub Vec<Rat>);

impl Config {
    pub fn vacuum() -> Self {
        Config(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn points(&self) -> &[Rat] {
        &self.0
    }

    pub fn concat(&self, other: &Config) -> Config {
        let mut points = self.0.clone();
        points.extend(other.0.iter().cloned());
        Config(points)
    }

    pub fn permuted(&self, sigma: &Perm) -> Result<Config> {
        Ok(Config(sigma.act_tuple(&self.0)?))
    }

    /// Whether all points coincide (vacuously true for n <= 1).
    pub fn is_diagonal(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }
}

impl fmt::Debug for Config {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Config {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, ")")
    }
}

/// One polynomial per configuration slot; a pure element of the fibre.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PureTensor {
    slots: Vec<FiberPoly>,
}

impl PureTensor {
    pub fn new(slots: Vec<FiberPoly>) -> Result<Self> {
        if let Some(first) = slots.first() {
            for s in &slots[1..] {
                first.scheme().check_eq(&s.scheme())?;
            }
        }
        Ok(PureTensor { slots })
    }

    pub fn slots(&self) -> &[FiberPoly] {
        &self.slots
    }
}

/// A formal sum of slot-wise monomial tensors over one ordered configuration.
#[derive(Clone, PartialEq, Eq)]
pub struct Observable {
    scheme: VariableScheme,
    config: Config,
    terms: BTreeMap<Vec<Monomial>, Rat>,
}

impl Observable {
    pub fn zero(scheme: VariableScheme, config: Config) -> Self {
        Observable { scheme, config, terms: BTreeMap::new() }
    }

    /// `1_X`: the Hadamard unit over a configuration (every slot constant 1).
    pub fn unit(scheme: VariableScheme, config: Config) -> Self {
        let slots = vec![Monomial::constant(scheme.dim()); config.len()];
        let mut o = Observable::zero(scheme, config);
        o.add_term(slots, Rat::one());
        o
    }

    /// `1_0`: the Cauchy unit, the scalar 1 over the vacuum.
    pub fn unit_box(scheme: VariableScheme) -> Self {
        Observable::unit(scheme, Config::vacuum())
    }

    /// A scalar multiple of the vacuum unit.
    pub fn scalar(scheme: VariableScheme, c: Rat) -> Self {
        Observable::unit_box(scheme).scale(&c)
    }

    /// Expands a pure tensor of fibre polynomials into canonical form.
    pub fn pure(config: Config, tensor: &PureTensor) -> Result<Self> {
        let slots = tensor.slots();
        if slots.len() != config.len() {
            return Err(Error::ConfigMismatch(
                format!("{} slots", slots.len()),
                format!("{} points", config.len()),
            ));
        }
        let scheme = slots
            .first()
            .map(|s| s.scheme())
            .ok_or(())
            .or_else(|_| Err(Error::ConfigMismatch("empty tensor".into(), "use Observable::scalar".into())))?;
        let mut o = Observable::zero(scheme, config);
        o.accumulate_product(&mut Vec::new(), Rat::one(), slots);
        Ok(o)
    }

    fn accumulate_product(&mut self, prefix: &mut Vec<Monomial>, coeff: Rat, rest: &[FiberPoly]) {
        match rest.split_first() {
            None => self.add_term(prefix.clone(), coeff),
            Some((head, tail)) => {
                for (m, c) in head.terms() {
                    prefix.push(m.clone());
                    self.accumulate_product(prefix, &coeff * c, tail);
                    prefix.pop();
                }
            }
        }
    }

    /// Single-slot observable `f @ t`.
    pub fn local(poly: &FiberPoly, point: Rat) -> Self {
        let mut o = Observable::zero(poly.scheme(), Config(vec![point]));
        for (m, c) in poly.terms() {
            o.add_term(vec![m.clone()], c.clone());
        }
        o
    }

    pub fn monomial_term(
        scheme: VariableScheme,
        config: Config,
        slots: Vec<Monomial>,
        coeff: Rat,
    ) -> Result<Self> {
        if slots.len() != config.len() {
            return Err(Error::ConfigMismatch(
                format!("{} slots", slots.len()),
                format!("{} points", config.len()),
            ));
        }
        let mut o = Observable::zero(scheme, config);
        o.add_term(slots, coeff);
        Ok(o)
    }

    pub fn scheme(&self) -> VariableScheme {
        self.scheme
    }

    pub fn config(&self) -> &Config {
        &self.config
    }

    pub fn degree(&self) -> usize {
        self.config.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Monomial>, &Rat)> {
        self.terms.iter()
    }

    pub(crate) fn add_term(&mut self, slots: Vec<Monomial>, coeff: Rat) {
        debug_assert_eq!(slots.len(), self.config.len());
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(slots) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn check_aligned(&self, other: &Observable) -> Result<()> {
        self.scheme.check_eq(&other.scheme)?;
        if self.config != other.config {
            return Err(Error::ConfigMismatch(
                self.config.to_string(),
                other.config.to_string(),
            ));
        }
        Ok(())
    }

    /// Formal sum; both sides must live over the same ordered configuration.
    pub fn add(&self, other: &Observable) -> Result<Observable> {
        self.check_aligned(other)?;
        let mut out = self.clone();
        for (slots, c) in &other.terms {
            out.add_term(slots.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Observable) -> Result<Observable> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rat) -> Observable {
        if c.is_zero() {
            return Observable::zero(self.scheme, self.config.clone());
        }
        Observable {
            scheme: self.scheme,
            config: self.config.clone(),
            terms: self.terms.iter().map(|(s, v)| (s.clone(), v * c)).collect(),
        }
    }

    pub fn neg(&self) -> Observable {
        self.scale(&-Rat::one())
    }

    /// Hadamard product: slot-wise fibre multiplication over one fixed
    /// configuration. Never auto-transports; at repeated points an automatic
    /// alignment would be ambiguous.
    pub fn hadamard(&self, other: &Observable) -> Result<Observable> {
        self.check_aligned(other)?;
        let mut out = Observable::zero(self.scheme, self.config.clone());
        for (sa, ca) in &self.terms {
            for (sb, cb) in &other.terms {
                let slots: Vec<Monomial> =
                    sa.iter().zip(sb).map(|(a, b)| a.mul(b)).collect();
                out.add_term(slots, ca * cb);
            }
        }
        Ok(out)
    }

    /// Cauchy product: concatenates slots and base points.
    pub fn cauchy(&self, other: &Observable) -> Result<Observable> {
        self.scheme.check_eq(&other.scheme)?;
        let config = self.config.concat(&other.config);
        let mut out = Observable::zero(self.scheme, config);
        for (sa, ca) in &self.terms {
            for (sb, cb) in &other.terms {
                let mut slots = sa.clone();
                slots.extend(sb.iter().cloned());
                out.add_term(slots, ca * cb);
            }
        }
        Ok(out)
    }

    /// Equivariant transport: permutes base points and slots together,
    /// `slot_i(result) = slot_{s^{-1}(i)}(source)`.
    pub fn transport(&self, sigma: &Perm) -> Result<Observable> {
        let config = self.config.permuted(sigma)?;
        let mut out = Observable::zero(self.scheme, config);
        for (slots, c) in &self.terms {
            out.add_term(sigma.act_tuple(slots)?, c.clone());
        }
        Ok(out)
    }

    /// `l_{p,q}`: inserts dummy points on the right.
    pub fn extend_left(&self, extra: &Config) -> Observable {
        self.cauchy(&Observable::unit(self.scheme, extra.clone()))
            .expect("same scheme")
    }

    /// `r_{p,q}`: inserts dummy points on the left.
    pub fn extend_right(extra: &Config, a: &Observable) -> Observable {
        Observable::unit(a.scheme, extra.clone())
            .cauchy(a)
            .expect("same scheme")
    }

    /// Searches for a transport witness `s` with `transport(s, self) = other`.
    /// The search is pruned to permutations matching the point multiset, so
    /// only blocks of equal points are ever permuted.
    pub fn equals_up_to_transport(&self, other: &Observable) -> Option<Perm> {
        if self.scheme != other.scheme
            || self.config.len() != other.config.len()
            || self.terms.len() != other.terms.len()
        {
            return None;
        }
        let n = self.config.len();
        // group positions of both configurations by point value
        let mut groups: BTreeMap<&Rat, (Vec<usize>, Vec<usize>)> = BTreeMap::new();
        for (i, t) in self.config.0.iter().enumerate() {
            groups.entry(t).or_default().0.push(i);
        }
        for (i, t) in other.config.0.iter().enumerate() {
            groups.entry(t).or_default().1.push(i);
        }
        for (src, dst) in groups.values() {
            if src.len() != dst.len() {
                return None;
            }
        }
        let groups: Vec<(&Vec<usize>, &Vec<usize>)> =
            groups.values().map(|(a, b)| (a, b)).collect();
        let mut images = vec![0usize; n];
        self.search_witness(other, &groups, 0, &mut images)
    }

    fn search_witness(
        &self,
        other: &Observable,
        groups: &[(&Vec<usize>, &Vec<usize>)],
        level: usize,
        images: &mut Vec<usize>,
    ) -> Option<Perm> {
        if level == groups.len() {
            let sigma = Perm::from_images_zero_based(images.clone());
            let moved = self.transport(&sigma).ok()?;
            return (&moved == other).then_some(sigma);
        }
        let (src, dst) = groups[level];
        for assignment in crate::perm::all_perms(dst.len()) {
            for (k, &s) in src.iter().enumerate() {
                images[s] = dst[assignment.image0(k)];
            }
            if let Some(w) = self.search_witness(other, groups, level + 1, images) {
                return Some(w);
            }
        }
        None
    }

    /// JSON value in the documented wire shape:
    /// `{"config": [...], "terms": [{"coeff": "...", "slots": [...]}]}`.
    pub fn to_json(&self) -> serde_json::Value {
        use serde_json::{json, Value};
        let config: Vec<Value> =
            self.config.0.iter().map(|t| Value::String(t.to_string())).collect();
        let terms: Vec<Value> = self
            .terms
            .iter()
            .rev()
            .map(|(slots, c)| {
                json!({
                    "coeff": c.to_string(),
                    "slots": slots
                        .iter()
                        .map(|m| m.display(&self.scheme).to_string())
                        .collect::<Vec<String>>(),
                })
            })
            .collect();
        json!({ "config": config, "terms": terms })
    }
}

/// The 2-algebra interchange identity on aligned quadruples:
/// `(a . c) hadamard (b . d) == (a hadamard b) . (c hadamard d)`
/// with `a, b` over one configuration and `c, d` over another.
pub fn interchange_check(
    a: &Observable,
    b: &Observable,
    c: &Observable,
    d: &Observable,
) -> Result<bool> {
    a.check_aligned(b)?;
    c.check_aligned(d)?;
    let lhs = a.cauchy(c)?.hadamard(&b.cauchy(d)?)?;
    let rhs = a.hadamard(b)?.cauchy(&c.hadamard(d)?)?;
    Ok(lhs == rhs)
}

impl fmt::Debug for Observable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} over {}", self.config)
    }
}

/// Canonical text form: terms in descending slot order, each printed as
/// `coeff (mono @ point)#(mono @ point)...`; a vacuum term prints `coeff ∅`.
impl fmt::Display for Observable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            write!(f, "0")?;
            if self.config.is_empty() {
                write!(f, " ∅")?;
            } else {
                for (i, t) in self.config.0.iter().enumerate() {
                    write!(f, "{}(1 @ {t})", if i == 0 { " " } else { "#" })?;
                }
            }
            return Ok(());
        }
        for (i, (slots, c)) in self.terms.iter().rev().enumerate() {
            let abs = c.abs();
            if i == 0 {
                write!(f, "{c}")?;
            } else if c.is_negative() {
                write!(f, " - {abs}")?;
            } else {
                write!(f, " + {abs}")?;
            }
            if slots.is_empty() {
                write!(f, " ∅")?;
            } else {
                for (j, (m, t)) in slots.iter().zip(&self.config.0).enumerate() {
                    write!(
                        f,
                        "{}({} @ {})",
                        if j == 0 { " " } else { "#" },
                        m.display(&self.scheme),
                        t
                    )?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_observable_with_scheme, parse_poly};
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    const QP: VariableScheme = VariableScheme::Canonical(1);

    fn rat(n: i64) -> Rat {
        Rat::from_integer(n.into())
    }

    fn obs(s: &str) -> Observable {
        parse_observable_with_scheme(s, QP).unwrap()
    }

    #[test]
    fn unit_laws() {
        let c = Config(vec![rat(0), rat(1)]);
        let a = obs("(q @ 0)#(p^2 @ 1) + 2 (p @ 0)#(1 @ 1)");
        assert_eq!(Observable::unit(QP, c.clone()).hadamard(&a).unwrap(), a);
        assert_eq!(Observable::unit_box(QP).cauchy(&a).unwrap(), a);
        assert_eq!(a.cauchy(&Observable::unit_box(QP)).unwrap(), a);
        assert_eq!(
            Observable::unit_box(QP).cauchy(&Observable::unit_box(QP)).unwrap(),
            Observable::unit_box(QP)
        );
        // degree-0 identification of the two units
        assert_eq!(Observable::unit_box(QP), Observable::unit(QP, Config::vacuum()));
    }

    #[test]
    fn units_multiply() {
        let x = Config(vec![rat(0)]);
        let y = Config(vec![rat(1), rat(1)]);
        assert_eq!(
            Observable::unit(QP, x.clone())
                .cauchy(&Observable::unit(QP, y.clone()))
                .unwrap(),
            Observable::unit(QP, x.concat(&y))
        );
    }

    #[test]
    fn hadamard_examples() {
        let lhs = obs("(q @ 0)#(1 @ 1)").hadamard(&obs("(1 @ 0)#(p @ 1)")).unwrap();
        assert_eq!(lhs, obs("(q @ 0)#(p @ 1)"));
        let sq = obs("(q @ 2)").hadamard(&obs("(q @ 2)")).unwrap();
        assert_eq!(sq, obs("(q^2 @ 2)"));
    }

    #[test]
    fn hadamard_requires_aligned_config() {
        let a = obs("(q @ 0)#(p @ 1)");
        let b = obs("(q @ 1)#(p @ 0)");
        assert!(a.hadamard(&b).is_err());
    }

    #[test]
    fn hadamard_commutes_and_associates() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..100 {
            let config = crate::sample::random_config(&mut rng, 0..=3);
            let a = crate::sample::random_observable(&mut rng, QP, &config, 3, 2);
            let b = crate::sample::random_observable(&mut rng, QP, &config, 3, 2);
            let c = crate::sample::random_observable(&mut rng, QP, &config, 3, 2);
            assert_eq!(a.hadamard(&b).unwrap(), b.hadamard(&a).unwrap());
            assert_eq!(
                a.hadamard(&b).unwrap().hadamard(&c).unwrap(),
                a.hadamard(&b.hadamard(&c).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn cauchy_bilocal_example() {
        let a = obs("(q @ 0)");
        let b = obs("(p @ 1)");
        assert_eq!(a.cauchy(&b).unwrap(), obs("(q @ 0)#(p @ 1)"));
    }

    #[test]
    fn cauchy_commutative_up_to_block_swap() {
        let mut rng = StdRng::seed_from_u64(8);
        for _ in 0..50 {
            let cx = crate::sample::random_config(&mut rng, 0..=3);
            let cy = crate::sample::random_config(&mut rng, 0..=3);
            let a = crate::sample::random_observable(&mut rng, QP, &cx, 2, 2);
            let b = crate::sample::random_observable(&mut rng, QP, &cy, 2, 2);
            let p = cx.len();
            let q = cy.len();
            let lhs = a.cauchy(&b).unwrap();
            let rhs = b.cauchy(&a).unwrap().transport(&Perm::block_swap(p, q)).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn transport_examples() {
        let a = obs("(q @ 0)#(p @ 1)");
        assert_eq!(a.transport(&Perm::identity(2)).unwrap(), a);
        let swapped = a.transport(&Perm::block_swap(1, 1)).unwrap();
        let expected = parse_observable_with_scheme("(p @ 1)#(q @ 0)", QP).unwrap();
        assert_eq!(swapped, expected);
        assert!(a.transport(&Perm::identity(3)).is_err());
    }

    #[test]
    fn transport_is_left_action() {
        let mut rng = StdRng::seed_from_u64(9);
        for n in 0..=3usize {
            let config = crate::sample::random_config(&mut rng, n..=n);
            let a = crate::sample::random_observable(&mut rng, QP, &config, 2, 2);
            for s in crate::perm::all_perms(n) {
                for t in crate::perm::all_perms(n) {
                    let lhs = a.transport(&t).unwrap().transport(&s).unwrap();
                    let rhs = a.transport(&s.compose(&t).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn transport_blockwise_compatible_with_cauchy() {
        let mut rng = StdRng::seed_from_u64(10);
        for _ in 0..25 {
            let cx = crate::sample::random_config(&mut rng, 0..=2);
            let cy = crate::sample::random_config(&mut rng, 0..=2);
            let a = crate::sample::random_observable(&mut rng, QP, &cx, 2, 2);
            let b = crate::sample::random_observable(&mut rng, QP, &cy, 2, 2);
            for s in crate::perm::all_perms(cx.len()) {
                for t in crate::perm::all_perms(cy.len()) {
                    let lhs = a.cauchy(&b).unwrap().transport(&s.direct_sum(&t)).unwrap();
                    let rhs = a.transport(&s).unwrap().cauchy(&b.transport(&t).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn extend_examples() {
        let a = obs("(q @ 0)");
        assert_eq!(a.extend_left(&Config::vacuum()), a);
        let x = Config(vec![rat(0)]);
        let y = Config(vec![rat(1), rat(2)]);
        assert_eq!(
            Observable::unit(QP, x.clone()).extend_left(&y),
            Observable::unit(QP, x.concat(&y))
        );
        assert_eq!(a.extend_left(&y).degree(), 3);
    }

    #[test]
    fn equals_up_to_transport_examples() {
        let a = obs("(q @ 0)#(p @ 1)");
        let b = a.transport(&Perm::block_swap(1, 1)).unwrap();
        let w = a.equals_up_to_transport(&b).unwrap();
        assert_eq!(a.transport(&w).unwrap(), b);

        let c = obs("(q @ 0)#(p @ 1)");
        let d = obs("(q @ 0)#(q @ 1)");
        assert!(c.equals_up_to_transport(&d).is_none());

        // symmetric element over a repeated point is fixed by the swap
        let sym = obs("(p @ 0)#(1 @ 0) + (1 @ 0)#(p @ 0)");
        let w = sym.equals_up_to_transport(&sym).unwrap();
        assert_eq!(sym.transport(&w).unwrap(), sym);
        let anti = obs("(p @ 0)#(q @ 0) - (q @ 0)#(p @ 0)");
        let swapped = anti.transport(&Perm::block_swap(1, 1)).unwrap();
        assert_eq!(swapped, anti.neg());
        assert!(anti.equals_up_to_transport(&anti.neg()).is_some());
    }

    #[test]
    fn interchange_on_seeded_quadruples() {
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..100 {
            let cx = crate::sample::random_config(&mut rng, 0..=2);
            let cy = crate::sample::random_config(&mut rng, 0..=2);
            let a = crate::sample::random_observable(&mut rng, QP, &cx, 2, 2);
            let b = crate::sample::random_observable(&mut rng, QP, &cx, 2, 2);
            let c = crate::sample::random_observable(&mut rng, QP, &cy, 2, 2);
            let d = crate::sample::random_observable(&mut rng, QP, &cy, 2, 2);
            assert!(interchange_check(&a, &b, &c, &d).unwrap());
        }
    }

    #[test]
    fn interchange_single_slot_hand_expansion() {
        let a = obs("(q @ 0)");
        let b = obs("(p @ 0)");
        let c = obs("(q^2 @ 1)");
        let d = obs("(p^2 @ 1)");
        assert!(interchange_check(&a, &b, &c, &d).unwrap());
        let lhs = a.cauchy(&c).unwrap().hadamard(&b.cauchy(&d).unwrap()).unwrap();
        assert_eq!(lhs, obs("(q*p @ 0)#(q^2*p^2 @ 1)"));
    }

    #[test]
    fn pure_tensor_expansion() {
        let f = parse_poly("q + p", QP).unwrap();
        let g = parse_poly("q - p", QP).unwrap();
        let t = PureTensor::new(vec![f, g]).unwrap();
        let o = Observable::pure(Config(vec![rat(0), rat(1)]), &t).unwrap();
        let expected = obs(
            "(q @ 0)#(q @ 1) - (q @ 0)#(p @ 1) + (p @ 0)#(q @ 1) - (p @ 0)#(p @ 1)",
        );
        assert_eq!(o, expected);
    }

    #[test]
    fn display_canonical_and_vacuum() {
        let o = obs("2 (q @ 0)#(1 @ 1)");
        assert_eq!(o.to_string(), "2 (q @ 0)#(1 @ 1)");
        assert_eq!(Observable::scalar(QP, rat(3)).to_string(), "3 ∅");
        assert_eq!(Observable::zero(QP, Config::vacuum()).to_string(), "0 ∅");
        assert_eq!(
            Observable::zero(QP, Config(vec![rat(0), rat(1)])).to_string(),
            "0 (1 @ 0)#(1 @ 1)"
        );
    }
}
