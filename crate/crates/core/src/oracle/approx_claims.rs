use crate::approx::{
    boundary, externally_approximates as ext, externally_strict, internally_approximates as int,
    internally_equivalent, internally_strict, lower_soft, roughly_soft_equal, upper_soft,
};
use crate::error::Result;
use crate::examples;
use crate::softset::{SoftSet, SpecialClass};
use crate::space::{Partition, Universe};

use super::report::ClaimKind::{Existence, Universal};
use super::{check_oracle_size, enumerate_partitions, instance_pairs, VerificationReport};

fn witness(p: &Partition, s: &SoftSet, f: &SoftSet) -> String {
    format!("p={p} S={s} F={f}")
}

fn implication(
    report: &mut VerificationReport,
    id: &str,
    hypothesis: bool,
    conclusion: impl FnOnce() -> bool,
    w: impl FnOnce() -> String,
) {
    let c = report.claim(id, Universal);
    if hypothesis {
        c.record(conclusion(), w);
    } else {
        c.skip();
    }
}

fn single_set_claims(report: &mut VerificationReport, p: &Partition, s: &SoftSet) {
    let l = lower_soft(p, s).expect("same universe");
    let u = upper_soft(p, s).expect("same universe");
    let w = || format!("p={p} S={s}");
    match s.classify() {
        SpecialClass::NullSoftSet => {
            report.claim("Thm3.4.i", Universal).record(l == *s && u == *s, w);
            report.claim("Thm3.4.ii", Universal).skip();
        }
        SpecialClass::WholeSoftSet => {
            report.claim("Thm3.4.i", Universal).skip();
            report.claim("Thm3.4.ii", Universal).record(l == *s && u == *s, w);
        }
        _ => {
            report.claim("Thm3.4.i", Universal).skip();
            report.claim("Thm3.4.ii", Universal).skip();
        }
    }
    let ll = lower_soft(p, &l).expect("same universe");
    let uu = upper_soft(p, &u).expect("same universe");
    report.claim("Thm3.4.iii", Universal).record(ll == l && uu == u, w);
    let lu = lower_soft(p, &u).expect("same universe");
    let ul = upper_soft(p, &l).expect("same universe");
    report.claim("Thm3.4.iv", Universal).record(lu == u && ul == l, w);

    let c = s.complement();
    let dual_l = upper_soft(p, &c).expect("same universe").complement();
    let dual_u = lower_soft(p, &c).expect("same universe").complement();
    report.claim("Thm3.7.i", Universal).record(dual_l == l, w);
    report.claim("Thm3.7.ii", Universal).record(dual_u == u, w);
}

fn pair_claims(report: &mut VerificationReport, p: &Partition, s: &SoftSet, f: &SoftSet) {
    let ls = lower_soft(p, s).expect("same universe");
    let lf = lower_soft(p, f).expect("same universe");
    let us = upper_soft(p, s).expect("same universe");
    let uf = upper_soft(p, f).expect("same universe");
    let w = || witness(p, s, f);
    let rel = |r: fn(&SoftSet, &SoftSet) -> Result<bool>, a: &SoftSet, b: &SoftSet| {
        r(a, b).expect("same universe")
    };

    let internal = rel(int, s, f);
    implication(report, "Thm3.1.i.L", internal, || rel(int, &ls, &lf), w);
    implication(report, "Thm3.1.i.U", internal, || rel(int, &us, &uf), w);
    let strict = rel(internally_strict, s, f);
    implication(report, "Thm3.1.ii.L", strict, || rel(internally_strict, &ls, &lf), w);
    implication(report, "Thm3.1.ii.U", strict, || rel(internally_strict, &us, &uf), w);

    let external = rel(ext, s, f);
    implication(report, "Thm3.2.i", external, || rel(ext, &ls, &lf), w);
    let ext_strict = rel(externally_strict, s, f);
    implication(report, "Thm3.2.ii", ext_strict, || rel(externally_strict, &ls, &lf), w);
    if external {
        report
            .claim("Rem3.1", Existence)
            .record(rel(ext, &us, &uf), w);
    } else {
        report.claim("Rem3.1", Existence).skip();
    }

    let equivalent = rel(internally_equivalent, s, f);
    implication(report, "Thm3.3.L", equivalent, || {
        rel(internally_equivalent, &ls, &lf)
    }, w);
    implication(report, "Thm3.3.U", equivalent, || {
        rel(internally_equivalent, &us, &uf)
    }, w);

    let union = s.union(f).expect("nonempty attribute sets");
    let inter = s.intersection(f).expect("nonempty attribute sets");
    let l_union = lower_soft(p, &union).expect("same universe");
    let l_inter = lower_soft(p, &inter).expect("same universe");
    let u_union = upper_soft(p, &union).expect("same universe");
    let u_inter = upper_soft(p, &inter).expect("same universe");
    let ls_lf_union = ls.union(&lf).expect("nonempty");
    let ls_lf_inter = ls.intersection(&lf).expect("nonempty");
    let us_uf_union = us.union(&uf).expect("nonempty");
    let us_uf_inter = us.intersection(&uf).expect("nonempty");

    let lower_hyp = ls.values().all(|a| {
        lf.values()
            .all(|d| !a.union(d).is_empty() && !a.intersection(d).is_empty())
    });
    implication(report, "Thm3.5.i", lower_hyp, || rel(int, &ls_lf_union, &l_union), w);
    implication(report, "Thm3.5.ii", lower_hyp, || rel(int, &l_inter, &ls_lf_inter), w);
    implication(report, "Thm3.5.iii", lower_hyp, || rel(int, &us_uf_union, &u_union), w);
    implication(report, "Thm3.5.iv", lower_hyp, || rel(int, &u_inter, &us_uf_inter), w);

    let upper_hyp = us.values().all(|a| {
        uf.values()
            .all(|d| !a.union(d).is_full() && !a.intersection(d).is_full())
    });
    implication(report, "Thm3.6.i", upper_hyp, || rel(ext, &l_union, &ls_lf_union), w);
    implication(report, "Thm3.6.ii", upper_hyp, || rel(ext, &ls_lf_inter, &l_inter), w);
    implication(report, "Thm3.6.iii", upper_hyp, || rel(ext, &u_union, &us_uf_union), w);
    implication(report, "Thm3.6.iv", upper_hyp, || rel(ext, &us_uf_inter, &u_inter), w);

    let cs = s.complement();
    let cf = f.complement();
    let l_cs = lower_soft(p, &cs).expect("same universe");
    let l_cf = lower_soft(p, &cf).expect("same universe");
    let u_cs = upper_soft(p, &cs).expect("same universe");
    let u_cf = upper_soft(p, &cf).expect("same universe");
    let identities: [(&str, SoftSet, SoftSet); 8] = [
        ("Thm3.8.i", ls.union(&lf), u_cs.intersection(&u_cf)),
        ("Thm3.8.ii", us.union(&uf), l_cs.intersection(&l_cf)),
        ("Thm3.8.iii", ls.union(&uf), u_cs.intersection(&l_cf)),
        ("Thm3.8.iv", us.union(&lf), l_cs.intersection(&u_cf)),
        ("Thm3.8.v", ls.intersection(&lf), u_cs.union(&u_cf)),
        ("Thm3.8.vi", us.intersection(&uf), l_cs.union(&l_cf)),
        ("Thm3.8.vii", ls.intersection(&uf), u_cs.union(&l_cf)),
        ("Thm3.8.viii", us.intersection(&lf), l_cs.union(&u_cf)),
    ]
    .map(|(id, lhs, rhs)| (id, lhs.expect("nonempty").complement(), rhs.expect("nonempty")));
    for (id, lhs, rhs) in identities {
        report
            .claim(id, Universal)
            .record(lhs.soft_equal(&rhs).expect("same universe"), w);
    }
}

fn check_all(report: &mut VerificationReport, p: &Partition, s: &SoftSet, f: &SoftSet) {
    single_set_claims(report, p, s);
    single_set_claims(report, p, f);
    pair_claims(report, p, s, f);
}

fn pinned(report: &mut VerificationReport) {
    let (u, p6) = examples::space_p6();
    let s = examples::soft_s(&u);
    let set = |labels: &[&str]| u.set_of(labels).expect("known labels");
    let l = lower_soft(&p6, &s).expect("same universe");
    let up = upper_soft(&p6, &s).expect("same universe");
    let bd = boundary(&p6, &s).expect("same universe");
    let expect_l = [set(&["a", "b"]), set(&["c", "d"]), set(&[])];
    let expect_u = [u.full_set(), u.full_set(), set(&["c", "d"])];
    let expect_bd = [set(&["c", "d"]), set(&["a", "b"]), set(&["c", "d"])];
    let ok = l.values().eq(expect_l.iter())
        && up.values().eq(expect_u.iter())
        && bd.per_attribute.iter().map(|(_, b)| b).eq(expect_bd.iter())
        && bd.total.is_full();
    report
        .claim("Ex3.1", Universal)
        .record(ok, || format!("L={l} U={up}"));

    let f = examples::soft_f_rough_equal(&u);
    report.claim("Ex3.2", Universal).record(
        roughly_soft_equal(&p6, &s, &f).expect("same universe"),
        || witness(&p6, &s, &f),
    );
    check_all(report, &p6, &s, &f);

    let (_, p5, s5, f5) = examples::external_counterexample();
    let us = upper_soft(&p5, &s5).expect("same universe");
    let uf = upper_soft(&p5, &f5).expect("same universe");
    let ok = ext(&s5, &f5).expect("same universe") && !ext(&us, &uf).expect("same universe");
    report
        .claim("Ex3.3", Universal)
        .record(ok, || witness(&p5, &s5, &f5));
    check_all(report, &p5, &s5, &f5);
}

/// Checks the approximation theorems on every partition of an `n`-element
/// universe against the seeded instance pairs, plus the pinned reference
/// instances. `2 <= n <= 5`.
pub fn verify_approx_theorems(n: usize, samples: usize, seed: u64) -> Result<VerificationReport> {
    check_oracle_size(n)?;
    let u = Universe::indexed(n)?;
    let parts = enumerate_partitions(n)?;
    let pairs = instance_pairs(&u, samples, seed);
    let mut report = VerificationReport::new();
    pinned(&mut report);
    for p in &parts {
        for (s, f) in &pairs {
            check_all(&mut report, p, s, f);
        }
    }
    Ok(report)
}
