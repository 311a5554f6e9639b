//! Soft sets over a universe and Molodtsov's operations on them.
//!
//! A soft set `(S, A)` maps each attribute of an ordered attribute list `A` to
//! a subset `S(a)` of the universe. Binary operations produce soft sets whose
//! attribute list is the product `A x D`, named `(a|d)` in A-major order.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::set::ElementSet;
use crate::space::Universe;

/// The distinct values of a soft set, `tau(S, A)`.
pub type Family = BTreeSet<ElementSet>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpecialClass {
    /// `A` is empty.
    EmptySoftSet,
    /// `A` is nonempty and every value is empty.
    NullSoftSet,
    /// `A` is nonempty and every value is the whole universe.
    WholeSoftSet,
    Ordinary,
}

#[derive(Clone, PartialEq, Eq)]
pub struct SoftSet {
    universe: Universe,
    attributes: Vec<(String, ElementSet)>,
}

fn validate_name(name: &str) -> Result<()> {
    if name.is_empty() || name.contains('|') {
        Err(Error::InvalidAttributeName(name.to_string()))
    } else {
        Ok(())
    }
}

impl SoftSet {
    /// Builds a soft set from user-supplied attribute names.
    ///
    /// Names must be nonempty, pairwise distinct and free of `|` (reserved
    /// for product attribute names). Duplicate *values* are allowed.
    pub fn new<S: Into<String>>(
        universe: &Universe,
        attributes: impl IntoIterator<Item = (S, ElementSet)>,
    ) -> Result<Self> {
        let attributes: Vec<(String, ElementSet)> = attributes
            .into_iter()
            .map(|(n, v)| (n.into(), v))
            .collect();
        for (n, _) in &attributes {
            validate_name(n)?;
        }
        Self::from_validated(universe, attributes)
    }

    /// Builds a soft set from label lists, e.g. `[("a1", vec!["a", "b"])]`.
    pub fn from_labels<N, L, S>(universe: &Universe, attributes: &[(N, L)]) -> Result<Self>
    where
        N: AsRef<str>,
        L: AsRef<[S]>,
        S: AsRef<str>,
    {
        let attrs = attributes
            .iter()
            .map(|(n, l)| Ok((n.as_ref().to_string(), universe.set_of(l.as_ref())?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(universe, attrs)
    }

    fn from_validated(universe: &Universe, attributes: Vec<(String, ElementSet)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for (n, v) in &attributes {
            if !seen.insert(n.as_str()) {
                return Err(Error::DuplicateAttribute(n.clone()));
            }
            if v.width() != universe.len() {
                return Err(Error::UniverseMismatch);
            }
        }
        Ok(SoftSet {
            universe: universe.clone(),
            attributes,
        })
    }

    /// The soft set with no attributes, `(-, empty)`.
    pub fn empty(universe: &Universe) -> Self {
        SoftSet {
            universe: universe.clone(),
            attributes: Vec::new(),
        }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn attributes(&self) -> &[(String, ElementSet)] {
        &self.attributes
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.attributes.iter().map(|(n, _)| n.as_str())
    }

    pub fn values(&self) -> impl Iterator<Item = &ElementSet> {
        self.attributes.iter().map(|(_, v)| v)
    }

    pub fn get(&self, name: &str) -> Option<&ElementSet> {
        self.attributes
            .iter()
            .find_map(|(n, v)| (n == name).then_some(v))
    }

    /// Number of attributes, `|A|`.
    pub fn len(&self) -> usize {
        self.attributes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.attributes.is_empty()
    }

    /// Same attribute names, each value replaced by `f(value)`.
    pub fn map_values(&self, mut f: impl FnMut(&ElementSet) -> ElementSet) -> SoftSet {
        SoftSet {
            universe: self.universe.clone(),
            attributes: self
                .attributes
                .iter()
                .map(|(n, v)| (n.clone(), f(v)))
                .collect(),
        }
    }

    pub fn tau(&self) -> Family {
        self.values().cloned().collect()
    }

    /// `tau` with the empty set removed.
    pub fn tau_prime(&self) -> Family {
        self.values().filter(|v| !v.is_empty()).cloned().collect()
    }

    pub fn classify(&self) -> SpecialClass {
        if self.attributes.is_empty() {
            SpecialClass::EmptySoftSet
        } else if self.values().all(ElementSet::is_empty) {
            SpecialClass::NullSoftSet
        } else if self.values().all(ElementSet::is_full) {
            SpecialClass::WholeSoftSet
        } else {
            SpecialClass::Ordinary
        }
    }

    /// `C(S, A)`: every value replaced by its complement in `X`.
    pub fn complement(&self) -> SoftSet {
        self.map_values(ElementSet::complement)
    }

    /// Equality of soft sets: same attribute sequence and same values.
    pub fn soft_equal(&self, other: &SoftSet) -> Result<bool> {
        self.universe.check_same(&other.universe)?;
        Ok(self.attributes == other.attributes)
    }

    /// Equivalence of soft sets: equal `tau` families.
    pub fn soft_equivalent(&self, other: &SoftSet) -> Result<bool> {
        self.universe.check_same(&other.universe)?;
        Ok(self.tau() == other.tau())
    }

    fn pairwise(
        &self,
        other: &SoftSet,
        op: impl Fn(&ElementSet, &ElementSet) -> ElementSet,
    ) -> Result<SoftSet> {
        self.universe.check_same(&other.universe)?;
        if self.is_empty() || other.is_empty() {
            return Err(Error::EmptyAttributeSet);
        }
        let mut attributes = Vec::with_capacity(self.len() * other.len());
        for (a, sa) in &self.attributes {
            for (d, fd) in &other.attributes {
                attributes.push((pair_name(a, d), op(sa, fd)));
            }
        }
        Ok(SoftSet {
            universe: self.universe.clone(),
            attributes,
        })
    }

    /// `(S,A) u (F,D) = (H, A x D)` with `H(a,d) = S(a) u F(d)`.
    pub fn union(&self, other: &SoftSet) -> Result<SoftSet> {
        self.pairwise(other, ElementSet::union)
    }

    /// `(S,A) n (F,D) = (W, A x D)` with `W(a,d) = S(a) n F(d)`.
    pub fn intersection(&self, other: &SoftSet) -> Result<SoftSet> {
        self.pairwise(other, ElementSet::intersection)
    }

    /// `(S,A) x (F,D) = (R, A x D)` with `R(a,d) = S(a) x F(d)`.
    pub fn product(&self, other: &SoftSet) -> Result<ProductSoftSet> {
        self.universe.check_same(&other.universe)?;
        if self.is_empty() || other.is_empty() {
            return Err(Error::EmptyAttributeSet);
        }
        let n = self.universe.len();
        let pair_universe = Universe::new(
            (0..n * n).map(|k| {
                format!("({},{})", self.universe.label(k / n), self.universe.label(k % n))
            }),
        )?;
        let mut attributes = Vec::with_capacity(self.len() * other.len());
        for (a, sa) in &self.attributes {
            for (d, fd) in &other.attributes {
                let cells = sa
                    .iter()
                    .flat_map(|i| fd.iter().map(move |j| i * n + j));
                attributes.push((pair_name(a, d), ElementSet::from_indices(n * n, cells)));
            }
        }
        Ok(ProductSoftSet {
            pair_universe,
            attributes,
        })
    }
}

/// Attribute name of `(a, d)` in a product attribute set.
pub fn pair_name(a: &str, d: &str) -> String {
    format!("({a}|{d})")
}

impl fmt::Display for SoftSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, (n, v)) in self.attributes.iter().enumerate() {
            if k > 0 {
                f.write_str(";")?;
            }
            write!(f, "{n}:{}", self.universe.show(v))?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for SoftSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SoftSet{self}")
    }
}

/// Result of the soft product; values live in the derived universe `X x X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductSoftSet {
    pair_universe: Universe,
    attributes: Vec<(String, ElementSet)>,
}

impl ProductSoftSet {
    /// `X x X` in lexicographic order; `(x_i, x_j)` sits at index `i*|X| + j`.
    pub fn pair_universe(&self) -> &Universe {
        &self.pair_universe
    }

    pub fn attributes(&self) -> &[(String, ElementSet)] {
        &self.attributes
    }

    pub fn get(&self, name: &str) -> Option<&ElementSet> {
        self.attributes
            .iter()
            .find_map(|(n, v)| (n == name).then_some(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abcd() -> Universe {
        Universe::new(["a", "b", "c", "d"]).unwrap()
    }

    fn ex31(u: &Universe) -> SoftSet {
        SoftSet::from_labels(
            u,
            &[
                ("a1", vec!["a", "b", "d"]),
                ("a2", vec!["b", "c", "d"]),
                ("a3", vec!["c"]),
            ],
        )
        .unwrap()
    }

    fn fam(u: &Universe, sets: &[&[&str]]) -> Family {
        sets.iter().map(|s| u.set_of(s.iter()).unwrap()).collect()
    }

    #[test]
    fn tau_families() {
        let u = abcd();
        let s = ex31(&u);
        let expect = fam(&u, &[&["a", "b", "d"], &["b", "c", "d"], &["c"]]);
        assert_eq!(s.tau(), expect);
        assert_eq!(s.tau_prime(), expect);

        let dup = SoftSet::from_labels(&u, &[("a1", vec!["c"]), ("a2", vec!["c"])]).unwrap();
        assert_eq!(dup.tau(), fam(&u, &[&["c"]]));

        let null = SoftSet::from_labels(&u, &[("a1", Vec::<&str>::new())]).unwrap();
        assert_eq!(null.tau(), fam(&u, &[&[]]));
        assert!(null.tau_prime().is_empty());

        let mixed =
            SoftSet::from_labels(&u, &[("a1", Vec::<&str>::new()), ("a2", vec!["a"])]).unwrap();
        assert_eq!(mixed.tau_prime(), fam(&u, &[&["a"]]));
        assert!(SoftSet::empty(&u).tau().is_empty());
    }

    #[test]
    fn classification() {
        let u = abcd();
        assert_eq!(SoftSet::empty(&u).classify(), SpecialClass::EmptySoftSet);
        let whole = SoftSet::new(&u, [("a1", u.full_set()), ("a2", u.full_set())]).unwrap();
        assert_eq!(whole.classify(), SpecialClass::WholeSoftSet);
        assert_eq!(whole.complement().classify(), SpecialClass::NullSoftSet);
        assert_eq!(ex31(&u).classify(), SpecialClass::Ordinary);
        let mixed = SoftSet::new(&u, [("a1", u.full_set()), ("a2", u.empty_set())]).unwrap();
        assert_eq!(mixed.classify(), SpecialClass::Ordinary);
    }

    #[test]
    fn names_validated() {
        let u = abcd();
        assert!(matches!(
            SoftSet::new(&u, [("a1", u.empty_set()), ("a1", u.full_set())]),
            Err(Error::DuplicateAttribute(n)) if n == "a1"
        ));
        assert!(matches!(
            SoftSet::new(&u, [("a|b", u.empty_set())]),
            Err(Error::InvalidAttributeName(_))
        ));
        assert!(matches!(
            SoftSet::from_labels(&u, &[("a1", vec!["q"])]),
            Err(Error::UnknownLabel(_))
        ));
    }

    #[test]
    fn equality_and_equivalence() {
        let u = abcd();
        let s = ex31(&u);
        assert!(s.soft_equal(&s).unwrap());
        let renamed = SoftSet::new(
            &u,
            s.attributes()
                .iter()
                .map(|(n, v)| (format!("r{n}"), v.clone())),
        )
        .unwrap();
        assert!(!s.soft_equal(&renamed).unwrap());
        assert!(s.soft_equivalent(&renamed).unwrap());
        let changed = SoftSet::from_labels(
            &u,
            &[
                ("a1", vec!["a", "b"]),
                ("a2", vec!["b", "c", "d"]),
                ("a3", vec!["c"]),
            ],
        )
        .unwrap();
        assert!(!s.soft_equal(&changed).unwrap());
        let null = SoftSet::new(&u, [("n", u.empty_set())]).unwrap();
        assert!(!s.soft_equivalent(&null).unwrap());
        let other = Universe::new(["p", "q", "r", "s"]).unwrap();
        assert!(matches!(
            s.soft_equal(&SoftSet::empty(&other)),
            Err(Error::UniverseMismatch)
        ));
    }

    #[test]
    fn complement_values() {
        let u = abcd();
        let c = ex31(&u).complement();
        assert_eq!(c.get("a1").unwrap(), &u.set_of(["c"]).unwrap());
        assert_eq!(c.get("a2").unwrap(), &u.set_of(["a"]).unwrap());
        assert_eq!(c.get("a3").unwrap(), &u.set_of(["a", "b", "d"]).unwrap());
        assert!(c.complement().soft_equal(&ex31(&u)).unwrap());
    }

    #[test]
    fn union_intersection() {
        let u = abcd();
        let s = SoftSet::from_labels(&u, &[("a1", vec!["a"])]).unwrap();
        let f = SoftSet::from_labels(&u, &[("d1", vec!["b"])]).unwrap();
        let h = s.union(&f).unwrap();
        assert_eq!(h.names().collect::<Vec<_>>(), ["(a1|d1)"]);
        assert_eq!(h.get("(a1|d1)").unwrap(), &u.set_of(["a", "b"]).unwrap());

        let s = ex31(&u);
        let f2 = SoftSet::from_labels(&u, &[("d1", vec!["a"]), ("d2", vec!["b"])]).unwrap();
        let h = s.union(&f2).unwrap();
        assert_eq!(h.len(), 6);
        assert_eq!(
            h.names().collect::<Vec<_>>(),
            ["(a1|d1)", "(a1|d2)", "(a2|d1)", "(a2|d2)", "(a3|d1)", "(a3|d2)"]
        );

        let null = SoftSet::new(&u, [("d1", u.empty_set())]).unwrap();
        let h = s.union(&null).unwrap();
        for ((_, v), (_, orig)) in h.attributes().iter().zip(s.attributes()) {
            assert_eq!(v, orig);
        }

        let s = SoftSet::from_labels(&u, &[("a1", vec!["a", "b"])]).unwrap();
        let f = SoftSet::from_labels(&u, &[("d1", vec!["b", "c"])]).unwrap();
        assert_eq!(
            s.intersection(&f).unwrap().get("(a1|d1)").unwrap(),
            &u.set_of(["b"]).unwrap()
        );
        let whole = SoftSet::new(&u, [("w", u.full_set())]).unwrap();
        assert_eq!(s.intersection(&whole).unwrap().get("(a1|w)").unwrap(), s.get("a1").unwrap());
        let disjoint = SoftSet::from_labels(&u, &[("d1", vec!["c", "d"])]).unwrap();
        let w = s.intersection(&disjoint).unwrap();
        assert_eq!(w.len(), 1);
        assert!(w.get("(a1|d1)").unwrap().is_empty());

        assert!(matches!(
            s.union(&SoftSet::empty(&u)),
            Err(Error::EmptyAttributeSet)
        ));
    }

    #[test]
    fn product_cells() {
        let u = abcd();
        let s = SoftSet::from_labels(&u, &[("a1", vec!["a", "b"])]).unwrap();
        let f = SoftSet::from_labels(&u, &[("d1", vec!["c"]), ("d2", vec![])]).unwrap();
        let p = s.product(&f).unwrap();
        assert_eq!(p.pair_universe().len(), 16);
        assert_eq!(p.pair_universe().label(1), "(a,b)");
        let cells = p.get("(a1|d1)").unwrap();
        assert_eq!(
            cells,
            &p.pair_universe().set_of(["(a,c)", "(b,c)"]).unwrap()
        );
        assert!(p.get("(a1|d2)").unwrap().is_empty());

        let f3 = SoftSet::from_labels(&u, &[("d1", vec!["b", "c", "d"])]).unwrap();
        assert_eq!(s.product(&f3).unwrap().get("(a1|d1)").unwrap().len(), 6);
    }
}
