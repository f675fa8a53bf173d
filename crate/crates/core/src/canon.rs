use crate::error::{Error, Result};
use crate::table::CayleyTable;

const MAX_CANON_ORDER: usize = 7;

/// Relabels a table along a permutation: element i becomes perm[i], so the
/// result satisfies new(perm[i], perm[j]) = perm[old(i, j)].
pub fn relabel(s: &CayleyTable, perm: &[usize]) -> CayleyTable {
    let n = s.order();
    assert_eq!(perm.len(), n);
    let mut cells = vec![0usize; n * n];
    for i in 0..n {
        for j in 0..n {
            cells[perm[i] * n + perm[j]] = perm[s.product(i, j)];
        }
    }
    CayleyTable::new(n, cells).expect("relabeling preserves associativity")
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    heap_permute(&mut current, n, &mut out);
    out
}

fn heap_permute(a: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == 1 {
        out.push(a.clone());
        return;
    }
    for i in 0..k {
        heap_permute(a, k - 1, out);
        if k.is_multiple_of(2) {
            a.swap(i, k - 1);
        } else {
            a.swap(0, k - 1);
        }
    }
}

fn relabeled_cells(s: &CayleyTable, perm: &[usize]) -> Vec<usize> {
    let n = s.order();
    let mut cells = vec![0usize; n * n];
    for i in 0..n {
        for j in 0..n {
            cells[perm[i] * n + perm[j]] = perm[s.product(i, j)];
        }
    }
    cells
}

/// Lexicographically least relabeling of the table over all permutations of
/// the carrier: a canonical representative of the isomorphism class.
/// Factorial cost, so the order is capped at 7.
pub fn canonical_form(s: &CayleyTable) -> Result<CayleyTable> {
    let n = s.order();
    if n > MAX_CANON_ORDER {
        return Err(Error::OrderTooLarge {
            op: "canonical_form",
            order: n,
            max: MAX_CANON_ORDER,
        });
    }
    let mut best = s.cells().to_vec();
    for perm in permutations(n) {
        let candidate = relabeled_cells(s, &perm);
        if candidate < best {
            best = candidate;
        }
    }
    Ok(CayleyTable::new(n, best).expect("relabeling preserves associativity"))
}

/// Whether a table already is its own canonical form. Cheaper than
/// constructing the form: each permutation's comparison aborts at the first
/// differing cell.
pub fn is_canonical(s: &CayleyTable) -> Result<bool> {
    let n = s.order();
    if n > MAX_CANON_ORDER {
        return Err(Error::OrderTooLarge {
            op: "is_canonical",
            order: n,
            max: MAX_CANON_ORDER,
        });
    }
    let cells = s.cells();
    let mut invp = vec![0usize; n];
    for perm in permutations(n) {
        for (i, &p) in perm.iter().enumerate() {
            invp[p] = i;
        }
        'cmp: for i in 0..n {
            for j in 0..n {
                let v = perm[s.product(invp[i], invp[j])];
                match v.cmp(&cells[i * n + j]) {
                    std::cmp::Ordering::Less => return Ok(false),
                    std::cmp::Ordering::Greater => break 'cmp,
                    std::cmp::Ordering::Equal => {}
                }
            }
        }
    }
    Ok(true)
}

pub fn are_isomorphic(a: &CayleyTable, b: &CayleyTable) -> Result<bool> {
    if a.order() != b.order() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}
