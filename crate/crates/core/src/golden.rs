//! The reference table of feasible arrays shipped with the crate.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::array::IntersectionArray;
use crate::error::{Error, Result};

pub const FEASIBLE_ARRAYS_CSV: &str = include_str!("../golden/feasible_arrays.csv");

#[derive(Debug, Deserialize)]
struct Row {
    case: String,
    array: IntersectionArray,
}

/// Parses a `case,array` table.
pub fn parse_table(text: &str) -> Result<Vec<(String, IntersectionArray)>> {
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    rdr.deserialize::<Row>()
        .map(|r| {
            r.map(|r| (r.case, r.array))
                .map_err(|e| Error::Syntax(format!("golden table: {e}")))
        })
        .collect()
}

/// `(case, array)` pairs of the shipped table.
pub fn reference_table() -> Vec<(String, IntersectionArray)> {
    parse_table(FEASIBLE_ARRAYS_CSV).expect("shipped table parses")
}

/// Arrays listed under any of `cases`.
pub fn reference_set(table: &[(String, IntersectionArray)], cases: &[&str]) -> BTreeSet<IntersectionArray> {
    table
        .iter()
        .filter(|(c, _)| cases.iter().any(|x| x == c))
        .map(|(_, a)| a.clone())
        .collect()
}

/// Acceptance groupings: the first two cases are compared as a union.
pub const GROUPS: [&[&str]; 5] = [&["C1", "C2"], &["C3"], &["C4"], &["C5"], &["C6"]];

/// Difference between computed and reference arrays for one grouping.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupDiff {
    pub cases: Vec<String>,
    pub missing: Vec<IntersectionArray>,
    pub extra: Vec<IntersectionArray>,
}

impl GroupDiff {
    pub fn matches(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty()
    }
}

/// Compares every grouping whose cases all appear in `found`.
pub fn compare(found: &BTreeMap<&str, Vec<IntersectionArray>>) -> Vec<GroupDiff> {
    let table = reference_table();
    GROUPS
        .iter()
        .filter(|g| g.iter().all(|c| found.contains_key(c)))
        .map(|g| {
            let want = reference_set(&table, g);
            let got: BTreeSet<IntersectionArray> =
                g.iter().flat_map(|c| found[c].iter().cloned()).collect();
            GroupDiff {
                cases: g.iter().map(|c| c.to_string()).collect(),
                missing: want.difference(&got).cloned().collect(),
                extra: got.difference(&want).cloned().collect(),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_table() {
        let t = reference_table();
        assert_eq!(t.len(), 17);
        assert_eq!(reference_set(&t, &["C1", "C2"]).len(), 5);
        assert!(reference_set(&t, &["C4", "C5"]).is_empty());
    }

    #[test]
    fn compare_reports_both_directions() {
        let t = reference_table();
        let mut found = BTreeMap::new();
        let mut c3: Vec<IntersectionArray> = reference_set(&t, &["C3"]).into_iter().collect();
        let dropped = c3.pop().unwrap();
        let extra: IntersectionArray = "27,16,1;1,4,27".parse().unwrap();
        c3.push(extra.clone());
        found.insert("C3", c3);
        found.insert("C4", Vec::new());
        let d = compare(&found);
        assert_eq!(d.len(), 2);
        assert_eq!(d[0].missing, vec![dropped]);
        assert_eq!(d[0].extra, vec![extra]);
        assert!(d[1].matches());
    }
}
