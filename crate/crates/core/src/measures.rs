//! Accuracy and roughness of a soft set with respect to a partition, as exact
//! ratios, plus the reference table over all partitions of `{a,b,c,d}`.

use crate::approx::soft_rough;
use crate::error::{Error, Result, Undefined};
use crate::examples;
use crate::fmt::{g6, ratio_to_f64};
use crate::softset::{SoftSet, SpecialClass};
use crate::space::Partition;
use crate::Ratio;

/// Cardinality sums behind both measures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sums {
    /// `sum |lower(a)|`
    pub lower: u64,
    /// `sum |S(a)|`
    pub member: u64,
    /// `sum |upper(a)|`
    pub upper: u64,
    /// `|X| |A|`
    pub capacity: u64,
}

pub fn sums(p: &Partition, s: &SoftSet) -> Result<Sums> {
    let rough = soft_rough(p, s)?;
    let total = |ss: &SoftSet| ss.values().map(|v| v.len() as u64).sum::<u64>();
    Ok(Sums {
        lower: total(&rough.lower),
        member: total(s),
        upper: total(&rough.upper),
        capacity: (s.universe().len() * s.len()) as u64,
    })
}

fn pawlak_from(sums: &Sums) -> Result<Ratio> {
    if sums.upper == 0 {
        return Err(Error::UndefinedMeasure(Undefined::NullUpper));
    }
    Ok(Ratio::new(sums.lower, sums.upper))
}

fn yao_from(sums: Option<&Sums>, class: SpecialClass) -> Result<Ratio> {
    match class {
        SpecialClass::EmptySoftSet => Err(Error::UndefinedMeasure(Undefined::EmptySoftSet)),
        SpecialClass::NullSoftSet => Err(Error::UndefinedMeasure(Undefined::NullSoftSet)),
        SpecialClass::WholeSoftSet => Ok(Ratio::from_integer(1)),
        SpecialClass::Ordinary => {
            let sums = sums.expect("sums of an ordinary soft set");
            let half = Ratio::new(1, 2);
            let inner = Ratio::new(sums.lower, sums.member);
            let outer = Ratio::new(sums.capacity - sums.upper, sums.capacity - sums.member);
            Ok(half * (inner + outer))
        }
    }
}

/// `rho^P = sum|lower| / sum|upper|`.
pub fn accuracy_pawlak(p: &Partition, s: &SoftSet) -> Result<Ratio> {
    if matches!(
        s.classify(),
        SpecialClass::EmptySoftSet | SpecialClass::NullSoftSet
    ) {
        return Err(Error::UndefinedMeasure(Undefined::NullUpper));
    }
    pawlak_from(&sums(p, s)?)
}

pub fn roughness_pawlak(p: &Partition, s: &SoftSet) -> Result<Ratio> {
    accuracy_pawlak(p, s).map(|r| Ratio::from_integer(1) - r)
}

/// `rho^Y = (L/M + (|X||A| - U)/(|X||A| - M)) / 2`, and `1` for a whole soft set.
pub fn accuracy_yao(p: &Partition, s: &SoftSet) -> Result<Ratio> {
    let class = s.classify();
    match class {
        SpecialClass::EmptySoftSet | SpecialClass::NullSoftSet => yao_from(None, class),
        _ => yao_from(Some(&sums(p, s)?), class),
    }
}

pub fn roughness_yao(p: &Partition, s: &SoftSet) -> Result<Ratio> {
    accuracy_yao(p, s).map(|r| Ratio::from_integer(1) - r)
}

/// `p1` is finer than `p2`.
pub fn refines(p1: &Partition, p2: &Partition) -> Result<bool> {
    p1.refines(p2)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeasureReport {
    pub sums: Sums,
    pub rho_p: Option<Ratio>,
    pub theta_p: Option<Ratio>,
    pub rho_y: Ratio,
    pub theta_y: Ratio,
}

/// Both measures at once. Fails only when the Yao-style measure is
/// undefined, in which case the Pawlak-style one is undefined as well.
pub fn measure_report(p: &Partition, s: &SoftSet) -> Result<MeasureReport> {
    let rho_y = accuracy_yao(p, s)?;
    let sums = sums(p, s)?;
    let rho_p = pawlak_from(&sums).ok();
    let one = Ratio::from_integer(1);
    Ok(MeasureReport {
        sums,
        rho_p,
        theta_p: rho_p.map(|r| one - r),
        rho_y,
        theta_y: one - rho_y,
    })
}

/// Published values for rows `R1..R15`, columns
/// `rho^P(S), rho^Y(S), rho^P(C(S)), rho^Y(C(S))`, truncated to five decimals.
pub const REFERENCE_TABLE1: [[f64; 4]; 15] = [
    [0.0, 0.0, 0.0, 0.0],
    [0.4, 0.48571, 0.25, 0.48571],
    [0.18181, 0.24285, 0.1, 0.24285],
    [0.625, 0.75714, 0.57142, 0.75714],
    [0.18181, 0.24285, 0.1, 0.24285],
    [0.4, 0.48571, 0.25, 0.48571],
    [0.4, 0.48571, 0.25, 0.48571],
    [0.4, 0.48571, 0.25, 0.48571],
    [0.66666, 0.72857, 0.66666, 0.82857],
    [0.4, 0.48571, 0.25, 0.48571],
    [0.75, 0.82857, 0.66666, 0.82857],
    [0.55555, 0.65714, 0.42857, 0.65714],
    [1.0, 1.0, 1.0, 1.0],
    [0.555555, 0.65714, 0.42857, 0.65714],
    [1.0, 1.0, 1.0, 1.0],
];

pub const TABLE1_COLUMNS: [&str; 4] = ["rho_P_S", "rho_Y_S", "rho_P_CS", "rho_Y_CS"];

/// Absolute tolerance used when comparing against [`REFERENCE_TABLE1`].
pub const TABLE1_TOLERANCE: f64 = 1e-4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table1Row {
    pub relation: String,
    pub partition: Partition,
    pub cells: [Ratio; 4],
}

#[derive(Debug, Clone, PartialEq)]
pub struct Discrepancy {
    pub row: usize,
    pub column: usize,
    pub computed: Ratio,
    pub reference: f64,
}

/// Recomputes the reference table from `S(a1)={a,b,d}, S(a2)={b,c,d},
/// S(a3)={c}` over each of the fifteen partitions of `{a,b,c,d}`.
pub fn table1_report() -> Vec<Table1Row> {
    let u = examples::abcd();
    let s = examples::soft_s(&u);
    let cs = s.complement();
    examples::table1_partitions(&u)
        .into_iter()
        .enumerate()
        .map(|(i, p)| {
            let cells = [
                accuracy_pawlak(&p, &s).expect("ordinary soft set"),
                accuracy_yao(&p, &s).expect("ordinary soft set"),
                accuracy_pawlak(&p, &cs).expect("ordinary soft set"),
                accuracy_yao(&p, &cs).expect("ordinary soft set"),
            ];
            Table1Row {
                relation: format!("R{}", i + 1),
                partition: p,
                cells,
            }
        })
        .collect()
}

/// Cells farther than [`TABLE1_TOLERANCE`] from the published value.
pub fn table1_discrepancies(rows: &[Table1Row]) -> Vec<Discrepancy> {
    let mut out = Vec::new();
    for (row, r) in rows.iter().enumerate() {
        for (column, cell) in r.cells.iter().enumerate() {
            let reference = REFERENCE_TABLE1[row][column];
            if (ratio_to_f64(cell) - reference).abs() > TABLE1_TOLERANCE {
                out.push(Discrepancy {
                    row,
                    column,
                    computed: *cell,
                    reference,
                });
            }
        }
    }
    out
}

/// CSV body followed by one `#` comment line per discrepant cell.
pub fn table1_csv(rows: &[Table1Row]) -> String {
    let mut out = format!("relation,{}\n", TABLE1_COLUMNS.join(","));
    for r in rows {
        let cells: Vec<String> = r.cells.iter().map(|c| g6(ratio_to_f64(c))).collect();
        out.push_str(&format!("{},{}\n", r.relation, cells.join(",")));
    }
    for d in table1_discrepancies(rows) {
        out.push_str(&format!(
            "# discrepancy {} {}: computed {}/{} = {} published {}\n",
            rows[d.row].relation,
            TABLE1_COLUMNS[d.column],
            d.computed.numer(),
            d.computed.denom(),
            g6(ratio_to_f64(&d.computed)),
            d.reference
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::Universe;

    #[test]
    fn pawlak_example() {
        let (u, p6) = examples::space_p6();
        let s = examples::soft_s(&u);
        assert_eq!(accuracy_pawlak(&p6, &s).unwrap(), Ratio::new(2, 5));
        assert_eq!(roughness_pawlak(&p6, &s).unwrap(), Ratio::new(3, 5));
        assert_eq!(
            accuracy_pawlak(&Partition::discrete(&u), &s).unwrap(),
            Ratio::from_integer(1)
        );
        assert_eq!(
            accuracy_pawlak(&Partition::coarsest(&u), &s).unwrap(),
            Ratio::from_integer(0)
        );
        let null = SoftSet::new(&u, [("n", u.empty_set())]).unwrap();
        assert!(matches!(
            accuracy_pawlak(&p6, &null),
            Err(Error::UndefinedMeasure(Undefined::NullUpper))
        ));
        assert!(matches!(
            accuracy_pawlak(&p6, &SoftSet::empty(&u)),
            Err(Error::UndefinedMeasure(Undefined::NullUpper))
        ));
    }

    #[test]
    fn yao_example() {
        let (u, p6) = examples::space_p6();
        let s = examples::soft_s(&u);
        assert_eq!(accuracy_yao(&p6, &s).unwrap(), Ratio::new(17, 35));
        assert_eq!(roughness_yao(&p6, &s).unwrap(), Ratio::new(18, 35));
        let r13 = Partition::from_blocks(&u, &[vec!["b", "d"], vec!["a"], vec!["c"]]).unwrap();
        assert_eq!(accuracy_yao(&r13, &s).unwrap(), Ratio::from_integer(1));
        let whole = SoftSet::new(&u, [("w", u.full_set()), ("v", u.full_set())]).unwrap();
        assert_eq!(
            accuracy_yao(&Partition::coarsest(&u), &whole).unwrap(),
            Ratio::from_integer(1)
        );
        assert!(matches!(
            accuracy_yao(&p6, &whole.complement()),
            Err(Error::UndefinedMeasure(Undefined::NullSoftSet))
        ));
    }

    #[test]
    fn report_invariants() {
        let (u, p6) = examples::space_p6();
        let r = measure_report(&p6, &examples::soft_s(&u)).unwrap();
        assert_eq!(
            r.sums,
            Sums {
                lower: 4,
                member: 7,
                upper: 10,
                capacity: 12
            }
        );
        assert_eq!(r.rho_p.unwrap() + r.theta_p.unwrap(), Ratio::from_integer(1));
        assert_eq!(r.rho_y + r.theta_y, Ratio::from_integer(1));
    }

    #[test]
    fn refinement_examples() {
        let (u, p6) = examples::space_p6();
        let p7 = Partition::from_blocks(&u, &[["a", "c"], ["b", "d"]]).unwrap();
        assert!(refines(&Partition::discrete(&u), &p6).unwrap());
        assert!(refines(&p6, &Partition::coarsest(&u)).unwrap());
        assert!(!refines(&p6, &p7).unwrap());
        assert!(!refines(&p7, &p6).unwrap());
        let other = Universe::new(["p", "q", "r", "s"]).unwrap();
        assert!(refines(&p6, &Partition::discrete(&other)).is_err());
    }

    #[test]
    fn table1_rows() {
        let rows = table1_report();
        assert_eq!(rows.len(), 15);
        let r4 = &rows[3];
        assert_eq!(
            r4.cells,
            [
                Ratio::new(5, 8),
                Ratio::new(53, 70),
                Ratio::new(4, 7),
                Ratio::new(53, 70)
            ]
        );
        let r9 = &rows[8];
        assert_eq!(r9.cells[0], Ratio::new(3, 4));
        assert_eq!(r9.cells[1], Ratio::new(29, 35));
        let flagged: Vec<(usize, usize)> = table1_discrepancies(&rows)
            .iter()
            .map(|d| (d.row, d.column))
            .collect();
        assert_eq!(flagged, vec![(8, 0), (8, 1)]);
        for r in &rows {
            assert_eq!(r.cells[1], r.cells[3], "{}", r.relation);
        }
    }

    #[test]
    fn table1_csv_layout() {
        let csv = table1_csv(&table1_report());
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "relation,rho_P_S,rho_Y_S,rho_P_CS,rho_Y_CS");
        assert_eq!(lines[2], "R2,0.4,0.485714,0.25,0.485714");
        assert_eq!(lines[3], "R3,0.181818,0.242857,0.1,0.242857");
        assert_eq!(lines[9], "R9,0.75,0.828571,0.666667,0.828571");
        assert_eq!(lines.iter().filter(|l| l.starts_with('#')).count(), 2);
    }
}
