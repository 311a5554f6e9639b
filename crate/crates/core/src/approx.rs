//! Classical (Pawlak) approximations of subsets, soft rough approximations of
//! soft sets, and the witness-based approximation relations between soft sets.

use crate::error::{Error, Result};
use crate::set::ElementSet;
use crate::softset::SoftSet;
use crate::space::Partition;
use crate::Ratio;

/// Lower and upper approximation of `k` in one pass over its members.
fn approximate(p: &Partition, k: &ElementSet) -> Result<(ElementSet, ElementSet)> {
    let n = p.universe().len();
    if k.width() != n {
        return Err(Error::UniverseMismatch);
    }
    let mut hits = vec![0usize; p.blocks().len()];
    for i in k.iter() {
        hits[p.block_index(i)] += 1;
    }
    let sizes = p.block_sizes();
    let mut lower = ElementSet::empty(n);
    let mut upper = ElementSet::empty(n);
    for i in 0..n {
        let b = p.block_index(i);
        if hits[b] > 0 {
            upper.insert(i);
            if hits[b] == sizes[b] {
                lower.insert(i);
            }
        }
    }
    Ok((lower, upper))
}

/// Union of the blocks contained in `k`.
pub fn classical_lower(p: &Partition, k: &ElementSet) -> Result<ElementSet> {
    approximate(p, k).map(|(l, _)| l)
}

/// Union of the blocks meeting `k`.
pub fn classical_upper(p: &Partition, k: &ElementSet) -> Result<ElementSet> {
    approximate(p, k).map(|(_, u)| u)
}

pub fn classical_boundary(p: &Partition, k: &ElementSet) -> Result<ElementSet> {
    approximate(p, k).map(|(l, u)| u.difference(&l))
}

/// `|lower| / |upper|`. The classical roughness is `1 - accuracy`.
pub fn classical_accuracy(p: &Partition, k: &ElementSet) -> Result<Ratio> {
    let (l, u) = approximate(p, k)?;
    if u.is_empty() {
        return Err(Error::EmptySubject);
    }
    Ok(Ratio::new(l.len() as u64, u.len() as u64))
}

fn check(p: &Partition, s: &SoftSet) -> Result<()> {
    p.universe().check_same(s.universe())
}

/// `L(S, A)`: attribute-wise classical lower approximation.
pub fn lower_soft(p: &Partition, s: &SoftSet) -> Result<SoftSet> {
    check(p, s)?;
    Ok(s.map_values(|v| approximate(p, v).expect("width checked").0))
}

/// `U(S, A)`: attribute-wise classical upper approximation.
pub fn upper_soft(p: &Partition, s: &SoftSet) -> Result<SoftSet> {
    check(p, s)?;
    Ok(s.map_values(|v| approximate(p, v).expect("width checked").1))
}

/// The pair `(L(S,A), U(S,A))` of a soft set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SoftRoughSet {
    pub lower: SoftSet,
    pub upper: SoftSet,
}

impl SoftRoughSet {
    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.lower.names()
    }

    pub fn boundary(&self) -> BoundaryReport {
        let n = self.lower.universe().len();
        let mut total = ElementSet::empty(n);
        let per_attribute = self
            .lower
            .attributes()
            .iter()
            .zip(self.upper.values())
            .map(|((name, l), u)| {
                let bd = u.difference(l);
                total.union_with(&bd);
                (name.clone(), bd)
            })
            .collect();
        BoundaryReport {
            per_attribute,
            total,
        }
    }

    /// Lower and upper share attribute names and coincide value-wise.
    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }
}

pub fn soft_rough(p: &Partition, s: &SoftSet) -> Result<SoftRoughSet> {
    check(p, s)?;
    let mut lower = Vec::with_capacity(s.len());
    let mut upper = Vec::with_capacity(s.len());
    for (name, v) in s.attributes() {
        let (l, u) = approximate(p, v)?;
        lower.push((name.clone(), l));
        upper.push((name.clone(), u));
    }
    Ok(SoftRoughSet {
        lower: s.map_values({
            let mut it = lower.into_iter();
            move |_| it.next().expect("same length").1
        }),
        upper: s.map_values({
            let mut it = upper.into_iter();
            move |_| it.next().expect("same length").1
        }),
    })
}

/// Per-attribute boundaries `Bd(S(a))` and the total boundary `Bd(S, A)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryReport {
    pub per_attribute: Vec<(String, ElementSet)>,
    pub total: ElementSet,
}

pub fn boundary(p: &Partition, s: &SoftSet) -> Result<BoundaryReport> {
    Ok(soft_rough(p, s)?.boundary())
}

pub fn is_exact(p: &Partition, s: &SoftSet) -> Result<bool> {
    Ok(soft_rough(p, s)?.is_exact())
}

/// Lower approximations share a `tau` family, and so do upper approximations.
/// The comparison keeps the empty set in the families.
pub fn roughly_soft_equal(p: &Partition, s: &SoftSet, f: &SoftSet) -> Result<bool> {
    check(p, f)?;
    let rs = soft_rough(p, s)?;
    let rf = soft_rough(p, f)?;
    Ok(rs.lower.tau() == rf.lower.tau() && rs.upper.tau() == rf.upper.tau())
}

/// `(S,A)` internally approximates `(F,D)`: every nonempty `F(d)` contains
/// some nonempty `S(a)`.
pub fn internally_approximates(s: &SoftSet, f: &SoftSet) -> Result<bool> {
    s.universe().check_same(f.universe())?;
    Ok(f.values().filter(|fd| !fd.is_empty()).all(|fd| {
        s.values()
            .any(|sa| !sa.is_empty() && sa.is_subset(fd))
    }))
}

/// `(S,A)` externally approximates `(F,D)`: every `F(d) != X` is contained in
/// some `S(a) != X`.
pub fn externally_approximates(s: &SoftSet, f: &SoftSet) -> Result<bool> {
    s.universe().check_same(f.universe())?;
    Ok(f.values().filter(|fd| !fd.is_full()).all(|fd| {
        s.values()
            .any(|sa| !sa.is_full() && fd.is_subset(sa))
    }))
}

pub fn internally_strict(s: &SoftSet, f: &SoftSet) -> Result<bool> {
    Ok(internally_approximates(s, f)? && !internally_approximates(f, s)?)
}

pub fn externally_strict(s: &SoftSet, f: &SoftSet) -> Result<bool> {
    Ok(externally_approximates(s, f)? && !externally_approximates(f, s)?)
}

pub fn internally_equivalent(s: &SoftSet, f: &SoftSet) -> Result<bool> {
    Ok(internally_approximates(s, f)? && internally_approximates(f, s)?)
}

pub fn externally_equivalent(s: &SoftSet, f: &SoftSet) -> Result<bool> {
    Ok(externally_approximates(s, f)? && externally_approximates(f, s)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples;
    use crate::space::Universe;

    #[test]
    fn classical_on_p6() {
        let (u, p6) = examples::space_p6();
        let k = u.set_of(["a", "b", "d"]).unwrap();
        assert_eq!(classical_lower(&p6, &k).unwrap(), u.set_of(["a", "b"]).unwrap());
        assert_eq!(classical_upper(&p6, &k).unwrap(), u.full_set());
        assert_eq!(classical_boundary(&p6, &k).unwrap(), u.set_of(["c", "d"]).unwrap());
        // 2 of 4 elements certain.
        assert_eq!(classical_accuracy(&p6, &k).unwrap(), Ratio::new(1, 2));

        let c = u.set_of(["c"]).unwrap();
        assert!(classical_lower(&p6, &c).unwrap().is_empty());
        assert_eq!(classical_upper(&p6, &c).unwrap(), u.set_of(["c", "d"]).unwrap());
        assert_eq!(classical_boundary(&p6, &c).unwrap(), u.set_of(["c", "d"]).unwrap());

        assert_eq!(classical_lower(&p6, &u.full_set()).unwrap(), u.full_set());
        assert!(classical_upper(&p6, &u.empty_set()).unwrap().is_empty());
        let composed = u.set_of(["c", "d"]).unwrap();
        assert!(classical_boundary(&p6, &composed).unwrap().is_empty());
        assert_eq!(classical_accuracy(&p6, &composed).unwrap(), Ratio::from_integer(1));
        assert!(matches!(
            classical_accuracy(&p6, &u.empty_set()),
            Err(Error::EmptySubject)
        ));
        assert!(matches!(
            classical_lower(&p6, &ElementSet::empty(3)),
            Err(Error::UniverseMismatch)
        ));
    }

    #[test]
    fn soft_approximations_example() {
        let (u, p6) = examples::space_p6();
        let s = examples::soft_s(&u);
        let rs = soft_rough(&p6, &s).unwrap();
        let lower = SoftSet::from_labels(
            &u,
            &[("a1", vec!["a", "b"]), ("a2", vec!["c", "d"]), ("a3", vec![])],
        )
        .unwrap();
        let upper = SoftSet::new(
            &u,
            [
                ("a1", u.full_set()),
                ("a2", u.full_set()),
                ("a3", u.set_of(["c", "d"]).unwrap()),
            ],
        )
        .unwrap();
        assert_eq!(rs.lower, lower);
        assert_eq!(rs.upper, upper);
        assert_eq!(lower_soft(&p6, &s).unwrap(), lower);
        assert_eq!(upper_soft(&p6, &s).unwrap(), upper);
        assert!(!rs.is_exact());
        let bd = rs.boundary();
        let cd = u.set_of(["c", "d"]).unwrap();
        let ab = u.set_of(["a", "b"]).unwrap();
        assert_eq!(
            bd.per_attribute,
            vec![("a1".into(), cd.clone()), ("a2".into(), ab), ("a3".into(), cd)]
        );
        assert!(bd.total.is_full());
    }

    #[test]
    fn special_partitions() {
        let (u, _) = examples::space_p6();
        let s = examples::soft_s(&u);
        let discrete = Partition::discrete(&u);
        let rs = soft_rough(&discrete, &s).unwrap();
        assert_eq!(rs.lower, s);
        assert_eq!(rs.upper, s);
        assert!(is_exact(&discrete, &s).unwrap());

        let coarse = Partition::coarsest(&u);
        let rs = soft_rough(&coarse, &s).unwrap();
        assert!(rs.lower.values().all(ElementSet::is_empty));
        assert!(rs.upper.values().all(ElementSet::is_full));

        let null = SoftSet::new(&u, [("n1", u.empty_set()), ("n2", u.empty_set())]).unwrap();
        let (_, p6) = examples::space_p6();
        assert_eq!(lower_soft(&p6, &null).unwrap(), null);
        let whole = null.complement();
        assert_eq!(upper_soft(&p6, &whole).unwrap(), whole);

        let composed = SoftSet::from_labels(&u, &[("k", vec!["a", "b"]), ("m", vec![])]).unwrap();
        assert!(is_exact(&p6, &composed).unwrap());

        let single = SoftSet::from_labels(&u, &[("k", vec!["a", "c"])]).unwrap();
        let bd = boundary(&p6, &single).unwrap();
        assert_eq!(bd.total, bd.per_attribute[0].1);

        let other = Universe::new(["p", "q", "r", "s"]).unwrap();
        let foreign = SoftSet::new(&other, [("z", other.full_set())]).unwrap();
        assert!(matches!(lower_soft(&p6, &foreign), Err(Error::UniverseMismatch)));
    }

    #[test]
    fn rough_equality() {
        let (u, p6) = examples::space_p6();
        let s = examples::soft_s(&u);
        let f = examples::soft_f_rough_equal(&u);
        assert!(roughly_soft_equal(&p6, &s, &f).unwrap());
        assert!(roughly_soft_equal(&p6, &s, &s).unwrap());
        let null = SoftSet::new(&u, [("n", u.empty_set())]).unwrap();
        assert!(!roughly_soft_equal(&p6, &s, &null).unwrap());
        // Equivalent after lower approximation.
        let ls = lower_soft(&p6, &s).unwrap();
        let lf = lower_soft(&p6, &f).unwrap();
        assert!(ls.soft_equivalent(&lf).unwrap());
    }

    #[test]
    fn approximation_relations() {
        let (u, _) = examples::space_p6();
        let s = examples::soft_s(&u);
        assert!(internally_approximates(&s, &s).unwrap());
        assert!(internally_equivalent(&s, &s).unwrap());
        assert!(!internally_strict(&s, &s).unwrap());
        assert!(externally_approximates(&s, &s).unwrap());

        let ab = SoftSet::from_labels(&u, &[("a1", vec!["a", "b"])]).unwrap();
        let c = SoftSet::from_labels(&u, &[("d1", vec!["c"])]).unwrap();
        assert!(!internally_approximates(&ab, &c).unwrap());

        let x = Universe::new(["a", "b", "c"]).unwrap();
        let sa = SoftSet::from_labels(&x, &[("a1", vec!["a"])]).unwrap();
        let fab = SoftSet::from_labels(&x, &[("d1", vec!["a", "b"])]).unwrap();
        assert!(!externally_approximates(&sa, &fab).unwrap());
        assert!(!externally_strict(&sa, &fab).unwrap());
        // {a} sits inside {a,b}, but {a,b} sits inside no nonempty value of S.
        assert!(internally_approximates(&sa, &fab).unwrap());
        assert!(!internally_approximates(&fab, &sa).unwrap());
        assert!(internally_strict(&sa, &fab).unwrap());
        assert!(externally_strict(&fab, &sa).unwrap());
    }

    #[test]
    fn upper_approximation_breaks_external_relation() {
        let (u5, p, s, f) = examples::external_counterexample();
        assert_eq!(u5.len(), 5);
        assert!(externally_approximates(&s, &f).unwrap());
        let us = upper_soft(&p, &s).unwrap();
        let uf = upper_soft(&p, &f).unwrap();
        assert!(!externally_approximates(&us, &uf).unwrap());
        // Brute-force evaluation of the internal relation on the same data:
        // F(d1)={a,b,d} contains S(a3)={b}, F(d2)={c,e} contains no nonempty S(a).
        assert!(!internally_approximates(&s, &f).unwrap());
        // S(a3)={b} ⊆ F(d1) is missing for S(a1)={a,b,c,d}; every S(a) needs a witness.
        assert!(!internally_approximates(&f, &s).unwrap());
    }
}
