//! Pinned reference instances: the four-element space with blocks
//! `{a,b},{c,d}`, its companion soft sets, the five-element external
//! approximation instance and the fifteen partitions of `{a,b,c,d}` in
//! reference row order.

use crate::softset::SoftSet;
use crate::space::{Partition, Universe};

pub fn abcd() -> Universe {
    Universe::new(["a", "b", "c", "d"]).expect("distinct labels")
}

/// `X = {a,b,c,d}` with blocks `{a,b}` and `{c,d}`.
pub fn space_p6() -> (Universe, Partition) {
    let u = abcd();
    let p = Partition::from_blocks(&u, &[["a", "b"], ["c", "d"]]).expect("valid blocks");
    (u, p)
}

/// `S(a1)={a,b,d}, S(a2)={b,c,d}, S(a3)={c}`.
pub fn soft_s(u: &Universe) -> SoftSet {
    SoftSet::from_labels(
        u,
        &[
            ("a1", vec!["a", "b", "d"]),
            ("a2", vec!["b", "c", "d"]),
            ("a3", vec!["c"]),
        ],
    )
    .expect("labels in universe")
}

/// A four-attribute soft set roughly equal to [`soft_s`] over `{a,b},{c,d}`.
pub fn soft_f_rough_equal(u: &Universe) -> SoftSet {
    SoftSet::from_labels(
        u,
        &[
            ("k1", vec!["a", "b", "c"]),
            ("k2", vec!["b", "d"]),
            ("k3", vec!["c", "d"]),
            ("k4", vec!["a", "d"]),
        ],
    )
    .expect("labels in universe")
}

/// `X={a,b,c,d,e}`, blocks `{a,b},{c},{d,e}`, and soft sets `S`, `F` with
/// `S` externally approximating `F` while `U(S)` does not externally
/// approximate `U(F)`.
pub fn external_counterexample() -> (Universe, Partition, SoftSet, SoftSet) {
    let u = Universe::new(["a", "b", "c", "d", "e"]).expect("distinct labels");
    let p = Partition::from_blocks(&u, &[vec!["a", "b"], vec!["c"], vec!["d", "e"]])
        .expect("valid blocks");
    let s = SoftSet::from_labels(
        &u,
        &[
            ("a1", vec!["a", "b", "c", "d"]),
            ("a2", vec!["c", "e", "b"]),
            ("a3", vec!["b"]),
        ],
    )
    .expect("labels in universe");
    let f = SoftSet::from_labels(&u, &[("d1", vec!["a", "b", "d"]), ("d2", vec!["c", "e"])])
        .expect("labels in universe");
    (u, p, s, f)
}

/// Block lists of the fifteen partitions of `{a,b,c,d}`, rows `R1..R15`.
pub const TABLE1_BLOCKS: [&[&[&str]]; 15] = [
    &[&["a", "b", "c", "d"]],
    &[&["a"], &["b", "c", "d"]],
    &[&["b"], &["a", "c", "d"]],
    &[&["c"], &["a", "b", "d"]],
    &[&["d"], &["a", "b", "c"]],
    &[&["a", "b"], &["c", "d"]],
    &[&["a", "c"], &["b", "d"]],
    &[&["a", "d"], &["b", "c"]],
    &[&["a", "b"], &["c"], &["d"]],
    &[&["a", "c"], &["b"], &["d"]],
    &[&["a", "d"], &["b"], &["c"]],
    &[&["b", "c"], &["a"], &["d"]],
    &[&["b", "d"], &["a"], &["c"]],
    &[&["c", "d"], &["a"], &["b"]],
    &[&["a"], &["b"], &["c"], &["d"]],
];

pub fn table1_partitions(u: &Universe) -> Vec<Partition> {
    TABLE1_BLOCKS
        .iter()
        .map(|blocks| Partition::from_blocks(u, blocks).expect("valid blocks"))
        .collect()
}
