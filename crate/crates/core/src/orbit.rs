use serde::Serialize;

use crate::sets::ElementSet;
use crate::table::CayleyTable;

/// The monogenic subsemigroup generated by one element: powers x^1, x^2, ...
/// eventually enter a cycle. `index` is the smallest i >= 1 with x^i on the
/// cycle, `period` the cycle length, so x^(index+period) = x^index and the
/// listed `powers` (x^1 through x^(index+period-1)) are pairwise distinct.
/// In a semigroup of order n, index + period <= n + 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Orbit {
    pub base: usize,
    pub index: usize,
    pub period: usize,
    pub powers: Vec<usize>,
}

impl Orbit {
    /// x^m for any m >= 1, reducing through the cycle when m exceeds the
    /// listed range.
    pub fn power(&self, m: usize) -> usize {
        assert!(m >= 1);
        if m <= self.powers.len() {
            self.powers[m - 1]
        } else {
            let wrapped = self.index + (m - self.index) % self.period;
            self.powers[wrapped - 1]
        }
    }

    /// All distinct powers, as a set over the ambient order.
    pub fn power_set(&self, order: usize) -> ElementSet {
        ElementSet::from_elements(order, &self.powers)
    }

    /// Largest exponent with a distinct value; exponents beyond it repeat.
    pub fn exponent_bound(&self) -> usize {
        self.index + self.period - 1
    }
}

pub fn monogenic_orbit(s: &CayleyTable, x: usize) -> Orbit {
    assert!(x < s.order());
    let mut powers = vec![x];
    let mut seen = vec![usize::MAX; s.order()];
    seen[x] = 1;
    let mut current = x;
    loop {
        current = s.product(current, x);
        let exponent = powers.len() + 1;
        if seen[current] != usize::MAX {
            let index = seen[current];
            let period = exponent - index;
            debug_assert!(index + period <= s.order() + 1);
            return Orbit {
                base: x,
                index,
                period,
                powers,
            };
        }
        seen[current] = exponent;
        powers.push(current);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::*;

    #[test]
    fn group_element_of_order_two() {
        let o = monogenic_orbit(&z2(), 1);
        assert_eq!((o.index, o.period), (1, 2));
        assert_eq!(o.powers, vec![1, 0]);
        assert_eq!(o.power(1), 1);
        assert_eq!(o.power(2), 0);
        assert_eq!(o.power(7), 1);
        assert_eq!(o.exponent_bound(), 2);
    }

    #[test]
    fn idempotent_orbit_is_trivial() {
        let o = monogenic_orbit(&lz2(), 0);
        assert_eq!((o.index, o.period), (1, 1));
        assert_eq!(o.powers, vec![0]);
        assert_eq!(o.power(5), 0);
    }

    #[test]
    fn cyclic_group_of_order_three() {
        let o = monogenic_orbit(&z3(), 1);
        assert_eq!((o.index, o.period), (1, 3));
        assert_eq!(o.powers, vec![1, 2, 0]);
    }

    #[test]
    fn nilpotent_element() {
        // null semigroup: 1^2 = 0, 0^2 = 0
        let o = monogenic_orbit(&n2(), 1);
        assert_eq!((o.index, o.period), (2, 1));
        assert_eq!(o.powers, vec![1, 0]);
        assert_eq!(o.power(2), 0);
        assert_eq!(o.power(9), 0);
    }
}
