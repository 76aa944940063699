//! Closed-form bounds on the minimum number of non-monochromatic cells and
//! their tabular/CSV emission. The lower bound is `C(q+k-3, k-2)`; the upper
//! bound `q^(k-1) - (q-1)^(k-1)` is attained by the first-choice labeling, so
//! the CSV reports it under that name.

use serde::Serialize;

use crate::labeling::{color_counts, count_cells_with_at_least, count_nonmono, Labeling};
use crate::lattice::{binomial, validate_params};
use crate::triangulation::Triangulation;
use crate::{Error, Result};

/// Lower bound `C(q+k-3, k-2)`.
pub fn lower_bound(k: usize, q: u32) -> Result<u64> {
    validate_params(k, q)?;
    binomial(q as u64 + k as u64 - 3, k as u64 - 2)
}

/// Upper bound `q^(k-1) - (q-1)^(k-1)`.
pub fn upper_bound(k: usize, q: u32) -> Result<u64> {
    validate_params(k, q)?;
    let e = k as u32 - 1;
    let hi = (q as u64)
        .checked_pow(e)
        .ok_or(Error::Overflow("upper bound"))?;
    let lo = (q as u64 - 1)
        .checked_pow(e)
        .ok_or(Error::Overflow("upper bound"))?;
    Ok(hi - lo)
}

/// Exact value at q=2: `2^(k-1) - 1`, where lower and upper arguments meet.
pub fn q2_exact(k: usize) -> Result<u64> {
    validate_params(k, 2)?;
    1u64.checked_shl(k as u32 - 1)
        .map(|v| v - 1)
        .ok_or(Error::Overflow("q=2 exact value"))
}

/// One table line: both closed forms, the first-choice count (equal to the
/// upper bound), and an optional exact minimum filled in by a search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundRow {
    pub k: usize,
    pub q: u32,
    pub lower: u64,
    pub upper: u64,
    pub exact: Option<u64>,
    pub first_choice_count: u64,
}

pub fn bound_row(k: usize, q: u32) -> Result<BoundRow> {
    let lower = lower_bound(k, q)?;
    let upper = upper_bound(k, q)?;
    Ok(BoundRow {
        k,
        q,
        lower,
        upper,
        exact: None,
        first_choice_count: upper,
    })
}

/// CSV with header `q,lower_bound,first_choice`; the exact column appears
/// only when some row carries an exact value. Byte-stable.
pub fn bounds_csv(rows: &[BoundRow]) -> Result<String> {
    if rows.is_empty() {
        return Err(Error::EmptyRange);
    }
    let with_exact = rows.iter().any(|r| r.exact.is_some());
    let mut out = String::from("q,lower_bound,first_choice");
    if with_exact {
        out.push_str(",exact");
    }
    out.push('\n');
    for r in rows {
        out.push_str(&format!("{},{},{}", r.q, r.lower, r.first_choice_count));
        if with_exact {
            out.push(',');
            if let Some(m) = r.exact {
                out.push_str(&m.to_string());
            }
        }
        out.push('\n');
    }
    Ok(out)
}

/// Cell color counts of one labeling on one triangulation: the histogram of
/// distinct-color counts and the tail sums `at_least[j-1]` for j = 1..=k.
#[derive(Serialize, Debug)]
pub struct LabelSummary {
    pub k: usize,
    pub q: u32,
    pub cell_count: usize,
    pub nonmonochromatic: usize,
    pub histogram: Vec<usize>,
    pub at_least: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cells_with_at_least_j: Option<usize>,
}

pub fn label_summary(
    t: &Triangulation,
    labeling: &Labeling,
    j: Option<usize>,
) -> Result<LabelSummary> {
    let nonmonochromatic = count_nonmono(t, labeling)?;
    let histogram = color_counts(t, labeling)?.histogram;
    let at_least = (1..=t.k())
        .map(|jj| count_cells_with_at_least(t, labeling, jj))
        .collect::<Result<Vec<_>>>()?;
    let cells_with_at_least_j = j
        .map(|jj| count_cells_with_at_least(t, labeling, jj))
        .transpose()?;
    Ok(LabelSummary {
        k: t.k(),
        q: t.q(),
        cell_count: t.cell_count(),
        nonmonochromatic,
        histogram,
        at_least,
        j,
        cells_with_at_least_j,
    })
}

impl LabelSummary {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("label summary serializes")
    }
}

/// Plain aligned table for terminal output.
pub fn bounds_table(rows: &[BoundRow]) -> Result<String> {
    if rows.is_empty() {
        return Err(Error::EmptyRange);
    }
    let mut out = String::new();
    out.push_str(&format!(
        "{:>3} {:>3} {:>12} {:>12} {:>12}\n",
        "k", "q", "lower", "first_choice", "exact"
    ));
    for r in rows {
        out.push_str(&format!(
            "{:>3} {:>3} {:>12} {:>12} {:>12}\n",
            r.k,
            r.q,
            r.lower,
            r.first_choice_count,
            r.exact.map_or_else(|| "-".into(), |m| m.to_string())
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lower_bound_examples() {
        for q in 1..=10u32 {
            assert_eq!(lower_bound(2, q).unwrap(), 1);
        }
        assert_eq!(lower_bound(4, 3).unwrap(), 6);
        assert_eq!(lower_bound(3, 5).unwrap(), 5);
    }

    #[test]
    fn upper_bound_examples() {
        for k in 2..=8usize {
            assert_eq!(upper_bound(k, 1).unwrap(), 1);
        }
        assert_eq!(upper_bound(4, 3).unwrap(), 19);
        assert_eq!(upper_bound(4, 2).unwrap(), 7);
    }

    #[test]
    fn q2_exact_examples() {
        assert_eq!(q2_exact(3).unwrap(), 3);
        assert_eq!(q2_exact(2).unwrap(), 1);
        assert_eq!(q2_exact(6).unwrap(), 31);
    }

    #[test]
    fn bounds_are_ordered_on_grid() {
        for k in 2..=8usize {
            for q in 1..=20u32 {
                let lo = lower_bound(k, q).unwrap();
                let hi = upper_bound(k, q).unwrap();
                assert!(lo <= hi, "k={k} q={q}: {lo} > {hi}");
            }
        }
    }

    #[test]
    fn q2_meets_upper_bound() {
        for k in 2..=8usize {
            assert_eq!(upper_bound(k, 2).unwrap(), q2_exact(k).unwrap());
        }
    }

    #[test]
    fn overflow_is_loud() {
        assert!(matches!(upper_bound(16, 64), Err(Error::Overflow(_))));
    }

    #[test]
    fn csv_k4() {
        let rows: Vec<BoundRow> = (1..=5).map(|q| bound_row(4, q).unwrap()).collect();
        let csv = bounds_csv(&rows).unwrap();
        assert_eq!(
            csv,
            "q,lower_bound,first_choice\n1,1,1\n2,3,7\n3,6,19\n4,10,37\n5,15,61\n"
        );
    }

    #[test]
    fn csv_k2_is_constant() {
        let rows: Vec<BoundRow> = (1..=4).map(|q| bound_row(2, q).unwrap()).collect();
        let csv = bounds_csv(&rows).unwrap();
        for line in csv.lines().skip(1) {
            let mut parts = line.split(',');
            parts.next();
            assert_eq!(parts.next(), Some("1"));
            assert_eq!(parts.next(), Some("1"));
        }
    }

    #[test]
    fn empty_range_is_an_error() {
        assert!(matches!(bounds_csv(&[]), Err(Error::EmptyRange)));
        assert!(matches!(bounds_table(&[]), Err(Error::EmptyRange)));
    }

    #[test]
    fn csv_with_exact_column() {
        let mut rows: Vec<BoundRow> = (1..=2).map(|q| bound_row(3, q).unwrap()).collect();
        rows[1].exact = Some(3);
        let csv = bounds_csv(&rows).unwrap();
        assert_eq!(csv, "q,lower_bound,first_choice,exact\n1,1,1,\n2,2,3,3\n");
    }
}
