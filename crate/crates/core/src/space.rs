//! Universes and their partitions (the quotient `X/R` of an equivalence).

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{EquivalenceWitness, Error, Result};
use crate::set::ElementSet;

#[derive(Debug)]
struct UniverseInner {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

/// An ordered finite set of labeled elements.
///
/// Cloning is cheap; clones share storage. The label at position `i` is fixed
/// for the lifetime of the value.
#[derive(Clone)]
pub struct Universe {
    inner: Arc<UniverseInner>,
}

impl Universe {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(Universe {
            inner: Arc::new(UniverseInner { labels, index }),
        })
    }

    /// Universe labelled `x0..x{n-1}`; used by enumeration.
    pub fn indexed(n: usize) -> Result<Self> {
        Self::new((0..n).map(|i| format!("x{i}")))
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.inner.labels.len()
    }

    /// Always false; a universe has at least one element.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn labels(&self) -> &[String] {
        &self.inner.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.inner.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.inner
            .index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn empty_set(&self) -> ElementSet {
        ElementSet::empty(self.len())
    }

    pub fn full_set(&self) -> ElementSet {
        ElementSet::full(self.len())
    }

    pub fn set_of<I, S>(&self, labels: I) -> Result<ElementSet>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut s = self.empty_set();
        for l in labels {
            s.insert(self.index_of(l.as_ref())?);
        }
        Ok(s)
    }

    /// Renders a subset as `{a,b}` in index order.
    pub fn show(&self, s: &ElementSet) -> String {
        let mut out = String::from("{");
        for (k, i) in s.iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            out.push_str(self.label(i));
        }
        out.push('}');
        out
    }

    pub fn check_same(&self, other: &Universe) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.labels == other.inner.labels
    }
}

impl Eq for Universe {}

impl fmt::Debug for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.labels()).finish()
    }
}

/// A set partition of a universe: disjoint nonempty blocks covering `X`.
///
/// Blocks are kept in canonical order (ascending smallest member index), so
/// two descriptions of the same quotient compare equal.
#[derive(Clone, PartialEq, Eq)]
pub struct Partition {
    universe: Universe,
    blocks: Vec<ElementSet>,
    block_of: Vec<usize>,
}

impl Partition {
    /// Builds a partition from a block index per element. Block ids may be
    /// arbitrary; they are renumbered canonically.
    pub fn from_assignment(universe: &Universe, assignment: &[usize]) -> Result<Self> {
        if assignment.len() != universe.len() {
            return Err(Error::UniverseMismatch);
        }
        let mut renumber: HashMap<usize, usize> = HashMap::new();
        let mut block_of = Vec::with_capacity(assignment.len());
        for &b in assignment {
            let next = renumber.len();
            block_of.push(*renumber.entry(b).or_insert(next));
        }
        let mut blocks = vec![universe.empty_set(); renumber.len()];
        for (i, &b) in block_of.iter().enumerate() {
            blocks[b].insert(i);
        }
        Ok(Partition {
            universe: universe.clone(),
            blocks,
            block_of,
        })
    }

    pub fn from_blocks<B, S>(universe: &Universe, blocks: &[B]) -> Result<Self>
    where
        B: AsRef<[S]>,
        S: AsRef<str>,
    {
        let n = universe.len();
        let mut owner: Vec<Option<usize>> = vec![None; n];
        for (bi, block) in blocks.iter().enumerate() {
            let block = block.as_ref();
            if block.is_empty() {
                return Err(Error::NotAPartition(format!("block #{bi} is empty")));
            }
            for label in block {
                let i = universe.index_of(label.as_ref())?;
                match owner[i] {
                    Some(prev) if prev != bi => {
                        return Err(Error::NotAPartition(format!(
                            "`{}` appears in blocks #{prev} and #{bi}",
                            label.as_ref()
                        )))
                    }
                    _ => owner[i] = Some(bi),
                }
            }
        }
        let mut assignment = Vec::with_capacity(n);
        for (i, o) in owner.into_iter().enumerate() {
            match o {
                Some(b) => assignment.push(b),
                None => {
                    return Err(Error::NotAPartition(format!(
                        "`{}` is not covered by any block",
                        universe.label(i)
                    )))
                }
            }
        }
        Self::from_assignment(universe, &assignment)
    }

    /// Quotient of an explicit equivalence relation given as label pairs.
    ///
    /// The pair set is validated, not closed: a relation missing a reflexive,
    /// symmetric or transitive pair is rejected with the first such witness.
    pub fn from_pairs<P, S>(universe: &Universe, pairs: &[P]) -> Result<Self>
    where
        P: AsRef<[S]>,
        S: AsRef<str>,
    {
        let n = universe.len();
        let mut rel = vec![false; n * n];
        let mut idx_pairs = Vec::with_capacity(pairs.len());
        for p in pairs {
            let p = p.as_ref();
            if p.len() != 2 {
                return Err(Error::NotAPartition(format!(
                    "relation entry has {} labels, expected 2",
                    p.len()
                )));
            }
            let x = universe.index_of(p[0].as_ref())?;
            let y = universe.index_of(p[1].as_ref())?;
            rel[x * n + y] = true;
            idx_pairs.push((x, y));
        }
        let lbl = |i: usize| universe.label(i).to_string();
        for x in 0..n {
            if !rel[x * n + x] {
                return Err(Error::NotEquivalence(EquivalenceWitness::Reflexive(lbl(x))));
            }
        }
        for &(x, y) in &idx_pairs {
            if !rel[y * n + x] {
                return Err(Error::NotEquivalence(EquivalenceWitness::Symmetric(
                    lbl(x),
                    lbl(y),
                )));
            }
        }
        for &(x, y) in &idx_pairs {
            for z in 0..n {
                if rel[y * n + z] && !rel[x * n + z] {
                    return Err(Error::NotEquivalence(EquivalenceWitness::Transitive(
                        lbl(x),
                        lbl(y),
                        lbl(z),
                    )));
                }
            }
        }
        // Each element is assigned the smallest element related to it.
        let assignment: Vec<usize> = (0..n)
            .map(|x| (0..n).find(|&y| rel[x * n + y]).unwrap_or(x))
            .collect();
        Self::from_assignment(universe, &assignment)
    }

    /// Every element in its own block.
    pub fn discrete(universe: &Universe) -> Self {
        let assignment: Vec<usize> = (0..universe.len()).collect();
        Self::from_assignment(universe, &assignment).expect("width matches")
    }

    /// A single block `{X}`.
    pub fn coarsest(universe: &Universe) -> Self {
        Self::from_assignment(universe, &vec![0; universe.len()]).expect("width matches")
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn blocks(&self) -> &[ElementSet] {
        &self.blocks
    }

    /// Index of the block containing element `i`.
    #[inline]
    pub fn block_index(&self, i: usize) -> usize {
        self.block_of[i]
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(ElementSet::len).collect()
    }

    /// `[x]_R` for the element labelled `x`.
    pub fn equivalence_class(&self, label: &str) -> Result<&ElementSet> {
        let i = self.universe.index_of(label)?;
        Ok(&self.blocks[self.block_of[i]])
    }

    /// True when every block of `self` lies inside a block of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> Result<bool> {
        self.universe.check_same(&coarser.universe)?;
        Ok(self
            .blocks
            .iter()
            .all(|b| b.iter().all(|i| coarser.block_of[i] == coarser.block_of[b.first().unwrap()])))
    }

    /// `true` iff `s` is a union of blocks.
    pub fn is_composed(&self, s: &ElementSet) -> bool {
        self.blocks
            .iter()
            .all(|b| b.is_subset(s) || b.is_disjoint(s))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, b) in self.blocks.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            f.write_str(&self.universe.show(b))?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abcd() -> Universe {
        Universe::new(["a", "b", "c", "d"]).unwrap()
    }

    #[test]
    fn universe_construction() {
        assert_eq!(abcd().len(), 4);
        assert_eq!(Universe::new(["x"]).unwrap().len(), 1);
        assert!(matches!(
            Universe::new(["a", "a"]),
            Err(Error::DuplicateLabel(l)) if l == "a"
        ));
        assert!(matches!(
            Universe::new(Vec::<String>::new()),
            Err(Error::EmptyUniverse)
        ));
    }

    #[test]
    fn blocks_canonical() {
        let u = abcd();
        let p = Partition::from_blocks(&u, &[vec!["c", "d"], vec!["b", "a"]]).unwrap();
        let q = Partition::from_blocks(&u, &[vec!["a", "b"], vec!["d", "c"]]).unwrap();
        assert_eq!(p, q);
        assert_eq!(p.blocks().len(), 2);
        assert_eq!(p.to_string(), "[{a,b},{c,d}]");
        let discrete = Partition::from_blocks(&u, &[["a"], ["b"], ["c"], ["d"]]).unwrap();
        assert_eq!(discrete, Partition::discrete(&u));
    }

    #[test]
    fn blocks_rejected() {
        let u = abcd();
        let overlap = Partition::from_blocks(&u, &[vec!["a", "b"], vec!["b", "c", "d"]]);
        assert!(matches!(overlap, Err(Error::NotAPartition(_))));
        let gap = Partition::from_blocks(&u, &[vec!["a", "b"], vec!["d"]]);
        assert!(matches!(gap, Err(Error::NotAPartition(_))));
        let empty = Partition::from_blocks(&u, &[vec!["a", "b", "c", "d"], vec![]]);
        assert!(matches!(empty, Err(Error::NotAPartition(_))));
        let unknown = Partition::from_blocks(&u, &[vec!["a", "b", "c", "z"]]);
        assert!(matches!(unknown, Err(Error::UnknownLabel(l)) if l == "z"));
    }

    #[test]
    fn pairs_relation() {
        let u = abcd();
        let pairs = [
            ["a", "a"],
            ["b", "b"],
            ["c", "c"],
            ["d", "d"],
            ["a", "b"],
            ["b", "a"],
            ["c", "d"],
            ["d", "c"],
        ];
        let p = Partition::from_pairs(&u, &pairs).unwrap();
        assert_eq!(p.to_string(), "[{a,b},{c,d}]");

        let ident = [["a", "a"], ["b", "b"], ["c", "c"], ["d", "d"]];
        assert_eq!(Partition::from_pairs(&u, &ident).unwrap(), Partition::discrete(&u));

        let asym = [["a", "a"], ["b", "b"], ["c", "c"], ["d", "d"], ["a", "b"]];
        match Partition::from_pairs(&u, &asym) {
            Err(Error::NotEquivalence(EquivalenceWitness::Symmetric(x, y))) => {
                assert_eq!((x.as_str(), y.as_str()), ("a", "b"))
            }
            other => panic!("unexpected {other:?}"),
        }
        let nonrefl = [["a", "b"], ["b", "a"]];
        assert!(matches!(
            Partition::from_pairs(&u, &nonrefl),
            Err(Error::NotEquivalence(EquivalenceWitness::Reflexive(_)))
        ));
        let nontrans = [
            ["a", "a"],
            ["b", "b"],
            ["c", "c"],
            ["d", "d"],
            ["a", "b"],
            ["b", "a"],
            ["b", "c"],
            ["c", "b"],
        ];
        assert!(matches!(
            Partition::from_pairs(&u, &nontrans),
            Err(Error::NotEquivalence(EquivalenceWitness::Transitive(..)))
        ));
    }

    #[test]
    fn classes() {
        let u = abcd();
        let p = Partition::from_blocks(&u, &[vec!["a", "b"], vec!["c", "d"]]).unwrap();
        assert_eq!(p.equivalence_class("a").unwrap(), &u.set_of(["a", "b"]).unwrap());
        let d = Partition::discrete(&u);
        assert_eq!(d.equivalence_class("c").unwrap(), &u.set_of(["c"]).unwrap());
        assert!(matches!(p.equivalence_class("z"), Err(Error::UnknownLabel(_))));
    }

    #[test]
    fn refinement() {
        let u = abcd();
        let p6 = Partition::from_blocks(&u, &[vec!["a", "b"], vec!["c", "d"]]).unwrap();
        let p7 = Partition::from_blocks(&u, &[vec!["a", "c"], vec!["b", "d"]]).unwrap();
        assert!(Partition::discrete(&u).refines(&p6).unwrap());
        assert!(p6.refines(&Partition::coarsest(&u)).unwrap());
        assert!(!p6.refines(&p7).unwrap());
        assert!(!p7.refines(&p6).unwrap());
        assert!(p6.refines(&p6).unwrap());
    }
}
