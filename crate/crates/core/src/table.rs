use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sets::ElementSet;

/// Multiplication table of a finite semigroup on the carrier `{0, .., n-1}`.
///
/// Associativity is validated eagerly at construction; every value of this
/// type is a genuine semigroup. `cells` is row-major: `cells[i*n + j] = i*j`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CayleyTable {
    order: usize,
    cells: Vec<usize>,
}

/// How a subset sits inside its semigroup. `prime` variants follow the
/// convention that the empty set and the full carrier are prime ideals and
/// prime coideals: the characteristic map of a prime coideal is exactly a
/// homomorphism onto the two-element multiplicative semilattice, constant
/// maps included.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SubsetClassification {
    pub is_subsemigroup: bool,
    pub is_ideal: bool,
    pub is_prime_ideal: bool,
    pub is_coideal: bool,
    pub is_prime_coideal: bool,
}

#[derive(Deserialize)]
struct TableJson {
    order: usize,
    table: Vec<Vec<usize>>,
}

impl CayleyTable {
    /// Builds a table from row-major cells, rejecting out-of-range entries and
    /// non-associative data. The associativity error reports the first failing
    /// triple in lexicographic order.
    pub fn new(order: usize, cells: Vec<usize>) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyTable);
        }
        assert_eq!(cells.len(), order * order, "cell count must be order^2");
        for (pos, &v) in cells.iter().enumerate() {
            if v >= order {
                return Err(Error::EntryOutOfRange {
                    row: pos / order,
                    col: pos % order,
                    value: v,
                    order,
                });
            }
        }
        let t = CayleyTable { order, cells };
        t.check_associativity()?;
        Ok(t)
    }

    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let order = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::Parse {
                    line: i + 2,
                    msg: format!("row {} has {} entries, expected {}", i, row.len(), order),
                });
            }
        }
        let cells = rows.iter().flatten().copied().collect();
        Self::new(order, cells)
    }

    /// Re-runs the associativity scan. Construction already guarantees it;
    /// this exists so the check stays available on demand.
    pub fn check_associativity(&self) -> Result<()> {
        let n = self.order;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let left = self.product(self.product(i, j), k);
                    let right = self.product(i, self.product(j, k));
                    if left != right {
                        return Err(Error::NotAssociative {
                            i,
                            j,
                            k,
                            left,
                            right,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn product(&self, i: usize, j: usize) -> usize {
        self.cells[i * self.order + j]
    }

    pub fn cells(&self) -> &[usize] {
        &self.cells
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|i| self.cells[i * self.order..(i + 1) * self.order].to_vec())
            .collect()
    }

    pub fn carrier(&self) -> ElementSet {
        ElementSet::full(self.order)
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// Parses the plain-text format: line 1 is the order, lines 2..=n+1 hold
    /// n space-separated 0-based entries each.
    pub fn parse_text(src: &str) -> Result<Self> {
        let mut lines = src.lines().enumerate();
        let (order_line, order_str) = lines
            .by_ref()
            .find(|(_, l)| !l.trim().is_empty())
            .ok_or(Error::Parse {
                line: 1,
                msg: "empty input".into(),
            })?;
        let order: usize = order_str.trim().parse().map_err(|_| Error::Parse {
            line: order_line + 1,
            msg: format!("expected the order, found {order_str:?}"),
        })?;
        if order == 0 {
            return Err(Error::EmptyTable);
        }
        let mut rows: Vec<Vec<usize>> = Vec::with_capacity(order);
        for (idx, line) in lines {
            if line.trim().is_empty() {
                continue;
            }
            if rows.len() == order {
                return Err(Error::Parse {
                    line: idx + 1,
                    msg: format!("unexpected extra line after {order} rows"),
                });
            }
            let mut row = Vec::with_capacity(order);
            for tok in line.split_whitespace() {
                let v: usize = tok.parse().map_err(|_| Error::Parse {
                    line: idx + 1,
                    msg: format!("expected an entry, found {tok:?}"),
                })?;
                row.push(v);
            }
            if row.len() != order {
                return Err(Error::Parse {
                    line: idx + 1,
                    msg: format!("row has {} entries, expected {order}", row.len()),
                });
            }
            rows.push(row);
        }
        if rows.len() != order {
            return Err(Error::Parse {
                line: src.lines().count() + 1,
                msg: format!("found {} rows, expected {order}", rows.len()),
            });
        }
        Self::from_rows(&rows)
    }

    /// Parses the JSON form `{"order": n, "table": [[..], ..]}`. Agrees with
    /// the text parser cell for cell on equivalent inputs.
    pub fn parse_json(src: &str) -> Result<Self> {
        let doc: TableJson = serde_json::from_str(src).map_err(|e| Error::Parse {
            line: e.line(),
            msg: e.to_string(),
        })?;
        if doc.order == 0 {
            return Err(Error::EmptyTable);
        }
        if doc.table.len() != doc.order {
            return Err(Error::Parse {
                line: 1,
                msg: format!("found {} rows, expected {}", doc.table.len(), doc.order),
            });
        }
        Self::from_rows(&doc.table)
    }

    /// Dispatches to the JSON parser when the input looks like a JSON
    /// document, to the text parser otherwise.
    pub fn parse(src: &str) -> Result<Self> {
        if src.trim_start().starts_with('{') {
            Self::parse_json(src)
        } else {
            Self::parse_text(src)
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.order);
        for row in self.rows() {
            let line: Vec<String> = row.iter().map(usize::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// One-line corpus form: `n:e00,e01,...` row-major.
    pub fn to_dump_string(&self) -> String {
        let entries: Vec<String> = self.cells.iter().map(usize::to_string).collect();
        format!("{}:{}", self.order, entries.join(","))
    }

    pub fn parse_dump(s: &str) -> Result<Self> {
        let (order_str, rest) = s.split_once(':').ok_or(Error::Parse {
            line: 1,
            msg: "missing ':' separator".into(),
        })?;
        let order: usize = order_str.trim().parse().map_err(|_| Error::Parse {
            line: 1,
            msg: format!("expected the order, found {order_str:?}"),
        })?;
        if order == 0 {
            return Err(Error::EmptyTable);
        }
        let mut cells = Vec::with_capacity(order * order);
        for tok in rest.trim().split(',') {
            let v: usize = tok.trim().parse().map_err(|_| Error::Parse {
                line: 1,
                msg: format!("expected an entry, found {tok:?}"),
            })?;
            cells.push(v);
        }
        if cells.len() != order * order {
            return Err(Error::Parse {
                line: 1,
                msg: format!("found {} entries, expected {}", cells.len(), order * order),
            });
        }
        Self::new(order, cells)
    }

    /// Returns the monoid X^1: a fresh identity is adjoined as element `n`
    /// unconditionally, even when the semigroup already has one. Existing
    /// element ids are preserved.
    pub fn adjoin_identity(&self) -> CayleyTable {
        let n = self.order;
        let m = n + 1;
        let mut cells = vec![0usize; m * m];
        for i in 0..n {
            for j in 0..n {
                cells[i * m + j] = self.product(i, j);
            }
        }
        for i in 0..m {
            cells[i * m + n] = i;
            cells[n * m + i] = i;
        }
        CayleyTable { order: m, cells }
    }

    pub fn idempotents(&self) -> ElementSet {
        let mut e = ElementSet::empty(self.order);
        for x in self.elements() {
            if self.product(x, x) == x {
                e.insert(x);
            }
        }
        e
    }

    pub fn is_idempotent(&self, x: usize) -> bool {
        self.product(x, x) == x
    }

    /// Pointwise product `AB = {ab | a in A, b in B}`.
    pub fn set_product(&self, a: ElementSet, b: ElementSet) -> ElementSet {
        debug_assert_eq!(a.order(), self.order);
        debug_assert_eq!(b.order(), self.order);
        let mut out = ElementSet::empty(self.order);
        for x in a.iter() {
            for y in b.iter() {
                out.insert(self.product(x, y));
            }
        }
        out
    }

    /// `A` closed under products. The empty set counts as closed, which is
    /// what makes the full carrier a prime ideal under the stated convention.
    pub fn is_closed_subset(&self, a: ElementSet) -> bool {
        self.set_product(a, a).is_subset_of(&a)
    }

    /// `AX ∪ XA ⊆ A`; true for the empty set.
    pub fn is_ideal_subset(&self, a: ElementSet) -> bool {
        let x = self.carrier();
        self.set_product(a, x).union(self.set_product(x, a)).is_subset_of(&a)
    }

    pub fn classify_subset(&self, a: ElementSet) -> SubsetClassification {
        let c = a.complement();
        let is_subsemigroup = self.is_closed_subset(a);
        let is_ideal = self.is_ideal_subset(a);
        let is_prime_ideal = is_ideal && self.is_closed_subset(c);
        let is_coideal = self.is_ideal_subset(c);
        let is_prime_coideal = is_coideal && is_subsemigroup;
        SubsetClassification {
            is_subsemigroup,
            is_ideal,
            is_prime_ideal,
            is_coideal,
            is_prime_coideal,
        }
    }

    /// True iff `f` is a homomorphism into `target`. `f` must be total on
    /// this carrier with values inside the target's carrier.
    pub fn hom_check(&self, target: &CayleyTable, f: &[usize]) -> bool {
        assert_eq!(f.len(), self.order, "map must be total on the carrier");
        assert!(
            f.iter().all(|&v| v < target.order),
            "map values must lie in the target's carrier"
        );
        self.elements().all(|x| {
            self.elements().all(|y| f[self.product(x, y)] == target.product(f[x], f[y]))
        })
    }

    /// Induced table on a product-closed subset, elements relabeled in
    /// increasing order.
    pub fn sub_table(&self, a: ElementSet) -> CayleyTable {
        assert!(self.is_closed_subset(a), "subset must be product-closed");
        assert!(!a.is_empty());
        let elems = a.to_vec();
        let index_of = |v: usize| elems.iter().position(|&w| w == v).unwrap();
        let k = elems.len();
        let mut cells = vec![0usize; k * k];
        for (i, &x) in elems.iter().enumerate() {
            for (j, &y) in elems.iter().enumerate() {
                cells[i * k + j] = index_of(self.product(x, y));
            }
        }
        CayleyTable { order: k, cells }
    }
}

/// Left-zero multiplication `xy = x` on `n` elements.
pub fn left_zero(n: usize) -> CayleyTable {
    assert!(n >= 1);
    let cells = (0..n).flat_map(|i| std::iter::repeat_n(i, n)).collect();
    CayleyTable { order: n, cells }
}

impl std::fmt::Debug for CayleyTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CayleyTable({})", self.to_dump_string())
    }
}

impl Serialize for CayleyTable {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("CayleyTable", 2)?;
        st.serialize_field("order", &self.order)?;
        st.serialize_field("table", &self.rows())?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::*;

    #[test]
    fn rejects_order_zero() {
        assert_eq!(CayleyTable::new(0, vec![]), Err(Error::EmptyTable));
        assert_eq!(CayleyTable::parse_text("0\n"), Err(Error::EmptyTable));
    }

    #[test]
    fn rejects_out_of_range_entry() {
        let err = CayleyTable::new(2, vec![0, 0, 1, 2]).unwrap_err();
        assert_eq!(
            err,
            Error::EntryOutOfRange {
                row: 1,
                col: 1,
                value: 2,
                order: 2
            }
        );
    }

    // Brute-force scan of all 16 binary operations on two elements: exactly 8
    // are non-associative, and the constructor must reject each with its first
    // failing triple.
    #[test]
    fn associativity_filter_on_all_binary_tables() {
        let mut assoc = 0;
        let mut non_assoc = Vec::new();
        for code in 0..16u32 {
            let cells: Vec<usize> = (0..4).map(|k| ((code >> (3 - k)) & 1) as usize).collect();
            match CayleyTable::new(2, cells.clone()) {
                Ok(_) => assoc += 1,
                Err(Error::NotAssociative { i, j, k, .. }) => non_assoc.push((cells, (i, j, k))),
                Err(other) => panic!("unexpected error {other:?}"),
            }
        }
        assert_eq!(assoc, 8);
        assert_eq!(non_assoc.len(), 8);
        // Lexicographically first non-associative table, frozen: [[0,0],[1,0]]
        // fails first at (1,0,1): (1*0)*1 = 0 but 1*(0*1) = 1.
        let (cells, triple) = &non_assoc[0];
        assert_eq!(cells, &vec![0, 0, 1, 0]);
        assert_eq!(*triple, (1, 0, 1));
        let err = CayleyTable::parse_text("2\n0 0\n1 0").unwrap_err();
        assert_eq!(
            err,
            Error::NotAssociative {
                i: 1,
                j: 0,
                k: 1,
                left: 0,
                right: 1
            }
        );
    }

    #[test]
    fn text_parse_fixtures() {
        assert_eq!(CayleyTable::parse_text("2\n0 0\n1 1").unwrap(), lz2());
        assert_eq!(CayleyTable::parse_text("2\n0 0\n0 1").unwrap(), sl2());
        assert_eq!(CayleyTable::parse_text("2\n0 1\n1 0").unwrap(), z2());
        assert_eq!(CayleyTable::parse_text("1\n0").unwrap().order(), 1);
        // blank lines are tolerated
        assert_eq!(CayleyTable::parse_text("\n2\n\n0 0\n1 1\n\n").unwrap(), lz2());
    }

    #[test]
    fn text_parse_errors() {
        assert!(matches!(
            CayleyTable::parse_text("x"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            CayleyTable::parse_text("2\n0 0 0\n1 1"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            CayleyTable::parse_text("2\n0 0\n1 1\n0 0"),
            Err(Error::Parse { line: 4, .. })
        ));
        assert!(matches!(
            CayleyTable::parse_text("2\n0 0"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn json_and_text_parsers_agree() {
        let pairs = [
            ("2\n0 0\n1 1", r#"{"order": 2, "table": [[0,0],[1,1]]}"#),
            ("2\n0 0\n0 1", r#"{"order": 2, "table": [[0,0],[0,1]]}"#),
            ("1\n0", r#"{"order": 1, "table": [[0]]}"#),
            (
                "3\n0 1 2\n1 2 0\n2 0 1",
                r#"{"order": 3, "table": [[0,1,2],[1,2,0],[2,0,1]]}"#,
            ),
        ];
        for (text, json) in pairs {
            let a = CayleyTable::parse_text(text).unwrap();
            let b = CayleyTable::parse_json(json).unwrap();
            assert_eq!(a, b);
            // the auto-dispatching parser sees the same tables
            assert_eq!(CayleyTable::parse(text).unwrap(), a);
            assert_eq!(CayleyTable::parse(json).unwrap(), b);
        }
        // same rejection either way
        assert!(CayleyTable::parse_json(r#"{"order":2,"table":[[0,0],[1,0]]}"#).is_err());
    }

    #[test]
    fn dump_round_trip() {
        for t in [lz2(), sl2(), z2(), z3()] {
            assert_eq!(CayleyTable::parse_dump(&t.to_dump_string()).unwrap(), t);
        }
        assert_eq!(lz2().to_dump_string(), "2:0,0,1,1");
    }

    #[test]
    fn text_round_trip() {
        for t in [lz2(), sl2(), z2(), z3(), n2()] {
            assert_eq!(CayleyTable::parse_text(&t.to_text()).unwrap(), t);
        }
    }

    #[test]
    fn adjoin_identity_examples() {
        // order-1 semigroup becomes the two-element monoid, which is the
        // two-element semilattice up to labeling
        let t1 = CayleyTable::new(1, vec![0]).unwrap();
        assert_eq!(t1.adjoin_identity(), sl2());

        let m = lz2().adjoin_identity();
        assert_eq!(m.order(), 3);
        // old products preserved
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(m.product(i, j), lz2().product(i, j));
            }
        }
        // the new element is a (two-sided) identity
        for i in 0..3 {
            assert_eq!(m.product(i, 2), i);
            assert_eq!(m.product(2, i), i);
        }
        // adjoining is unconditional: a monoid gains a second local identity
        let z2_1 = z2().adjoin_identity();
        assert_eq!(z2_1.order(), 3);
        assert_eq!(z2_1.idempotents().to_vec(), vec![0, 2]);
    }

    #[test]
    fn idempotents_examples() {
        assert_eq!(lz2().idempotents().to_vec(), vec![0, 1]);
        assert_eq!(z2().idempotents().to_vec(), vec![0]);
        assert_eq!(sl2().idempotents().to_vec(), vec![0, 1]);
        assert_eq!(n2().idempotents().to_vec(), vec![0]);
    }

    #[test]
    fn set_product_examples() {
        let t = sl2();
        let full = t.carrier();
        let one = ElementSet::singleton(2, 1);
        assert_eq!(t.set_product(one, one), one);
        assert_eq!(t.set_product(full, one), full);
        assert_eq!(
            t.set_product(ElementSet::empty(2), full),
            ElementSet::empty(2)
        );
        let z = z2();
        assert_eq!(z.set_product(ElementSet::singleton(2, 1), full), full);
    }

    #[test]
    fn classify_subset_conventions() {
        // empty set and full carrier are prime ideals and prime coideals
        for t in [lz2(), sl2(), z2(), n2()] {
            for a in [ElementSet::empty(2), ElementSet::full(2)] {
                let c = t.classify_subset(a);
                assert!(c.is_ideal && c.is_prime_ideal && c.is_coideal && c.is_prime_coideal);
            }
        }
        // {1} in the two-element semilattice: prime coideal
        let c = sl2().classify_subset(ElementSet::singleton(2, 1));
        assert!(c.is_subsemigroup && c.is_coideal && c.is_prime_coideal);
        assert!(!c.is_ideal);
        // {0} there is a prime ideal
        let c0 = sl2().classify_subset(ElementSet::singleton(2, 0));
        assert!(c0.is_ideal && c0.is_prime_ideal && !c0.is_coideal);
        // {1} in the left-zero semigroup is not a coideal: 1*0 = 1 escapes {0}
        let c = lz2().classify_subset(ElementSet::singleton(2, 1));
        assert!(c.is_subsemigroup && !c.is_coideal && !c.is_prime_coideal);
        // {1} in the null semigroup: coideal but not prime (1*1 = 0 escapes)
        let c = n2().classify_subset(ElementSet::singleton(2, 1));
        assert!(c.is_coideal && !c.is_subsemigroup && !c.is_prime_coideal);
    }

    #[test]
    fn hom_check_examples() {
        // characteristic map of {1} in the semilattice: a hom onto 2
        assert!(sl2().hom_check(&two(), &[0, 1]));
        // constant maps are homs onto idempotents
        assert!(lz2().hom_check(&two(), &[0, 0]));
        assert!(lz2().hom_check(&two(), &[1, 1]));
        // sign-style map from Z2 is not a hom to the semilattice
        assert!(!z2().hom_check(&two(), &[0, 1]));
        // identity is a hom
        assert!(z2().hom_check(&z2(), &[0, 1]));
    }

    #[test]
    fn sub_table_extraction() {
        let t = sl2();
        let sub = t.sub_table(ElementSet::singleton(2, 1));
        assert_eq!(sub.order(), 1);
        let whole = t.sub_table(t.carrier());
        assert_eq!(whole, t);
    }

    #[test]
    fn left_zero_family() {
        assert_eq!(left_zero(2), lz2());
        let t = left_zero(4);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(t.product(i, j), i);
            }
        }
        t.check_associativity().unwrap();
    }
}
