//! Exhaustive generation of all associative tables of a small order, in
//! lexicographic cell order, with optional reduction to canonical
//! representatives. Cells are filled row-major; after each placement every
//! associativity constraint whose four lookups just became available is
//! checked, so dead prefixes are cut immediately and complete leaves are
//! fully associative by construction.

use crate::canon::is_canonical;
use crate::error::{Error, Result};
use crate::table::CayleyTable;

/// Labelled enumeration cap; beyond this only canonical-representative
/// streams are allowed, which cuts the tree enough to stay at desk scale.
pub const MAX_LABELLED_ORDER: usize = 5;
pub const MAX_ENUM_ORDER: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationConfig {
    order: usize,
    up_to_iso: bool,
    prefix: Vec<usize>,
}

impl EnumerationConfig {
    pub fn new(order: usize, up_to_iso: bool) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyTable);
        }
        let max = if up_to_iso { MAX_ENUM_ORDER } else { MAX_LABELLED_ORDER };
        let op = if up_to_iso {
            "canonical enumeration"
        } else {
            "labelled enumeration"
        };
        if order > max {
            return Err(Error::OrderTooLarge { op, order, max });
        }
        Ok(EnumerationConfig {
            order,
            up_to_iso,
            prefix: Vec::new(),
        })
    }

    /// Restricts the stream to tables whose first cells (row-major) equal
    /// `prefix`. Distinct prefixes of one length give disjoint subtrees, so
    /// workers can split on them and concatenate results in prefix order.
    pub fn with_prefix(mut self, prefix: Vec<usize>) -> Result<Self> {
        assert!(prefix.len() <= self.order * self.order, "prefix longer than the table");
        for (k, &v) in prefix.iter().enumerate() {
            if v >= self.order {
                return Err(Error::EntryOutOfRange {
                    row: k / self.order,
                    col: k % self.order,
                    value: v,
                    order: self.order,
                });
            }
        }
        self.prefix = prefix;
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.order
    }
}

pub fn enumerate_tables(cfg: &EnumerationConfig) -> TableIter {
    let n = cfg.order;
    let mut cells = vec![0usize; n * n];
    cells[..cfg.prefix.len()].copy_from_slice(&cfg.prefix);
    TableIter {
        n,
        up_to_iso: cfg.up_to_iso,
        fixed: cfg.prefix.len(),
        cells,
        len: cfg.prefix.len(),
        started: false,
        exhausted: false,
    }
}

pub fn count_tables(order: usize, up_to_iso: bool) -> Result<usize> {
    Ok(enumerate_tables(&EnumerationConfig::new(order, up_to_iso)?).count())
}

pub struct TableIter {
    n: usize,
    up_to_iso: bool,
    fixed: usize,
    cells: Vec<usize>,
    len: usize,
    started: bool,
    exhausted: bool,
}

impl TableIter {
    fn get(&self, a: usize, b: usize, upto: usize) -> Option<usize> {
        let p = a * self.n + b;
        (p <= upto).then(|| self.cells[p])
    }

    fn triple_ok(&self, a: usize, b: usize, c: usize, upto: usize) -> bool {
        let (Some(ab), Some(bc)) = (self.get(a, b, upto), self.get(b, c, upto)) else {
            return true;
        };
        let (Some(l), Some(r)) = (self.get(ab, c, upto), self.get(a, bc, upto)) else {
            return true;
        };
        l == r
    }

    /// All triples whose last missing lookup is the cell at position `k`:
    /// it can enter as the pair (i,j), as an inner product with value i or
    /// j, or as either side's outer product.
    fn consistent(&self, k: usize) -> bool {
        let n = self.n;
        let (i, j) = (k / n, k % n);
        for c in 0..n {
            if !self.triple_ok(i, j, c, k) || !self.triple_ok(c, i, j, k) {
                return false;
            }
        }
        for p in 0..=k {
            let (a, b) = (p / n, p % n);
            if self.cells[p] == i && !self.triple_ok(a, b, j, k) {
                return false;
            }
            if self.cells[p] == j && !self.triple_ok(i, a, b, k) {
                return false;
            }
        }
        true
    }

    /// Steps back to the deepest free position with an untried value.
    fn backtrack(&mut self) -> bool {
        loop {
            if self.len <= self.fixed {
                self.exhausted = true;
                return false;
            }
            self.len -= 1;
            self.cells[self.len] += 1;
            if self.cells[self.len] < self.n {
                return true;
            }
        }
    }
}

impl Iterator for TableIter {
    type Item = CayleyTable;

    fn next(&mut self) -> Option<CayleyTable> {
        if self.exhausted {
            return None;
        }
        let total = self.n * self.n;
        if !self.started {
            self.started = true;
            for k in 0..self.fixed {
                if !self.consistent(k) {
                    self.exhausted = true;
                    return None;
                }
            }
            if self.fixed < total {
                self.cells[self.fixed] = 0;
            }
        } else if !self.backtrack() {
            return None;
        }
        loop {
            if self.len == total {
                let t = CayleyTable::new(self.n, self.cells.clone())
                    .expect("incremental pruning leaves only associative tables");
                if !self.up_to_iso || is_canonical(&t).expect("order within canon range") {
                    return Some(t);
                }
                if !self.backtrack() {
                    return None;
                }
                continue;
            }
            if self.cells[self.len] >= self.n {
                if !self.backtrack() {
                    return None;
                }
            } else if self.consistent(self.len) {
                self.len += 1;
                if self.len < total {
                    self.cells[self.len] = 0;
                }
            } else {
                self.cells[self.len] += 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;
    use std::collections::BTreeSet;

    fn labelled(n: usize) -> Vec<CayleyTable> {
        enumerate_tables(&EnumerationConfig::new(n, false).unwrap()).collect()
    }

    /// Filter every cell vector of the given order by the associativity
    /// check; the slow reference the generator must match.
    fn naive(n: usize) -> Vec<CayleyTable> {
        let total = n * n;
        let mut out = Vec::new();
        let mut cells = vec![0usize; total];
        loop {
            if let Ok(t) = CayleyTable::new(n, cells.clone()) {
                out.push(t);
            }
            let mut k = total;
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                cells[k] += 1;
                if cells[k] < n {
                    break;
                }
                cells[k] = 0;
            }
        }
    }

    #[test]
    fn single_element() {
        let ts = labelled(1);
        assert_eq!(ts.len(), 1);
        assert_eq!(ts[0].cells(), &[0]);
    }

    #[test]
    fn order_two_matches_naive_filter() {
        let fast = labelled(2);
        let slow = naive(2);
        assert_eq!(fast.len(), 8);
        assert_eq!(fast, slow);
    }

    #[test]
    fn order_three_matches_naive_filter() {
        let fast = labelled(3);
        let slow = naive(3);
        assert_eq!(fast.len(), 113);
        assert_eq!(fast, slow);
    }

    #[test]
    fn order_four_count_regression() {
        assert_eq!(count_tables(4, false).unwrap(), 3492);
    }

    #[test]
    fn emission_is_strictly_lexicographic() {
        let ts = labelled(3);
        for w in ts.windows(2) {
            assert!(w[0].cells() < w[1].cells());
        }
    }

    #[test]
    fn canonical_stream_is_canonical_and_duplicate_free() {
        let reps: Vec<CayleyTable> =
            enumerate_tables(&EnumerationConfig::new(2, true).unwrap()).collect();
        assert_eq!(reps.len(), 5);
        let mut seen = BTreeSet::new();
        for t in &reps {
            assert_eq!(&canonical_form(t).unwrap(), t);
            assert!(seen.insert(t.cells().to_vec()), "duplicate class representative");
        }
        // every labelled table's canonical form appears exactly once
        let classes: BTreeSet<Vec<usize>> = labelled(2)
            .iter()
            .map(|t| canonical_form(t).unwrap().cells().to_vec())
            .collect();
        assert_eq!(classes, seen);
    }

    #[test]
    fn prefix_subtrees_partition_the_stream() {
        let full = labelled(3);
        let mut stitched = Vec::new();
        for v in 0..3 {
            let cfg = EnumerationConfig::new(3, false)
                .unwrap()
                .with_prefix(vec![v])
                .unwrap();
            stitched.extend(enumerate_tables(&cfg));
        }
        assert_eq!(full, stitched);
    }

    #[test]
    fn forcing_prefix_pins_the_completion() {
        // cells (0,0)=0, (0,1)=0, (1,0)=1 admit only the left zero table
        let cfg = EnumerationConfig::new(2, false)
            .unwrap()
            .with_prefix(vec![0, 0, 1])
            .unwrap();
        let ts: Vec<CayleyTable> = enumerate_tables(&cfg).collect();
        assert_eq!(ts.len(), 1);
        assert_eq!(ts[0].cells(), &[0, 0, 1, 1]);
    }

    #[test]
    fn complete_prefix_emits_at_most_itself() {
        let cfg = EnumerationConfig::new(2, false)
            .unwrap()
            .with_prefix(vec![0, 1, 1, 0])
            .unwrap();
        let ts: Vec<CayleyTable> = enumerate_tables(&cfg).collect();
        assert_eq!(ts.len(), 1);

        // the non-associative table is rejected, not emitted
        let cfg = EnumerationConfig::new(2, false)
            .unwrap()
            .with_prefix(vec![0, 0, 1, 0])
            .unwrap();
        assert_eq!(enumerate_tables(&cfg).count(), 0);
    }

    #[test]
    fn config_rejects_out_of_range_inputs() {
        assert!(matches!(EnumerationConfig::new(0, false), Err(Error::EmptyTable)));
        assert!(matches!(
            EnumerationConfig::new(6, false),
            Err(Error::OrderTooLarge { max: 5, .. })
        ));
        assert!(EnumerationConfig::new(6, true).is_ok());
        assert!(matches!(
            EnumerationConfig::new(7, true),
            Err(Error::OrderTooLarge { max: 6, .. })
        ));
        assert!(matches!(
            EnumerationConfig::new(2, false).unwrap().with_prefix(vec![2]),
            Err(Error::EntryOutOfRange { value: 2, .. })
        ));
    }

    #[test]
    fn counting_is_repeatable() {
        assert_eq!(count_tables(1, false).unwrap(), 1);
        assert_eq!(count_tables(2, false).unwrap(), 8);
        assert_eq!(count_tables(3, false).unwrap(), count_tables(3, false).unwrap());
    }
}
