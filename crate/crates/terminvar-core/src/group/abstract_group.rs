//! Finite groups as plain multiplication tables, with structural invariants
//! and a backtracking isomorphism test.

use std::collections::{BTreeMap, BTreeSet};

use super::{closure, conjugacy_classes, element_order, GroupOps};

/// A finite group on indices `0..n` with `0` the identity, given by its full
/// multiplication table.
#[derive(Clone, Debug)]
pub struct AbstractGroup {
    n: usize,
    mul_table: Vec<u32>,
    inv_table: Vec<u32>,
}

impl GroupOps for AbstractGroup {
    fn size(&self) -> usize {
        self.n
    }
    fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul_table[a as usize * self.n + b as usize]
    }
    fn inv(&self, a: u32) -> u32 {
        self.inv_table[a as usize]
    }
}

impl AbstractGroup {
    /// Builds a group from a row-major multiplication table, verifying the
    /// identity laws, the Latin-square property and two-sided inverses.
    pub fn from_mul_table(n: usize, mul: Vec<u32>) -> Self {
        assert!(n >= 1 && mul.len() == n * n);
        for i in 0..n as u32 {
            assert_eq!(mul[i as usize], i, "0 must be a left identity");
            assert_eq!(mul[i as usize * n], i, "0 must be a right identity");
        }
        let mut inv_table = vec![u32::MAX; n];
        for i in 0..n {
            let mut row_seen = vec![false; n];
            let mut col_seen = vec![false; n];
            for j in 0..n {
                let r = mul[i * n + j] as usize;
                let c = mul[j * n + i] as usize;
                assert!(r < n && c < n);
                assert!(!row_seen[r] && !col_seen[c], "table is not a Latin square");
                row_seen[r] = true;
                col_seen[c] = true;
                if r == 0 {
                    inv_table[i] = j as u32;
                }
            }
        }
        for i in 0..n {
            let j = inv_table[i] as usize;
            assert_eq!(mul[j * n + i], 0, "inverse must be two-sided");
        }
        AbstractGroup {
            n,
            mul_table: mul,
            inv_table,
        }
    }

    /// The trivial group.
    pub fn trivial() -> Self {
        AbstractGroup::from_mul_table(1, vec![0])
    }

    /// The cyclic group of order `n`.
    pub fn cyclic(n: usize) -> Self {
        let mut mul = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                mul[i * n + j] = ((i + j) % n) as u32;
            }
        }
        AbstractGroup::from_mul_table(n, mul)
    }

    /// Group order.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> u32 {
        let mut e: u64 = 1;
        for x in 0..self.n as u32 {
            let o = element_order(self, x) as u64;
            e = num_integer::lcm(e, o);
        }
        e as u32
    }

    /// Whether the group is commutative.
    pub fn is_abelian(&self) -> bool {
        for a in 0..self.n as u32 {
            for b in 0..a {
                if self.mul(a, b) != self.mul(b, a) {
                    return false;
                }
            }
        }
        true
    }

    /// Whether some element generates everything.
    pub fn is_cyclic(&self) -> bool {
        (0..self.n as u32).any(|x| element_order(self, x) as usize == self.n)
    }

    /// The derived (commutator) subgroup of a given subgroup, as a sorted
    /// index list.
    fn derived_of(&self, sub: &[u32]) -> Vec<u32> {
        let mut comms: BTreeSet<u32> = BTreeSet::new();
        for &a in sub {
            for &b in sub {
                let c = self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b));
                comms.insert(c);
            }
        }
        let seed: Vec<u32> = comms.into_iter().collect();
        closure(self, &seed)
    }

    /// The derived subgroup of the whole group.
    pub fn derived_subgroup(&self) -> Vec<u32> {
        let all: Vec<u32> = (0..self.n as u32).collect();
        self.derived_of(&all)
    }

    /// Length of the derived series (0 for the trivial group, 1 for
    /// nontrivial abelian groups, ...).  Panics on a non-solvable input
    /// after `n` steps cannot happen: the series strictly decreases or
    /// stabilizes, and stabilization short-circuits.
    pub fn derived_length(&self) -> usize {
        let mut current: Vec<u32> = (0..self.n as u32).collect();
        let mut k = 0;
        while current.len() > 1 {
            let next = self.derived_of(&current);
            k += 1;
            if next.len() == current.len() {
                // Perfect subgroup: the series stabilizes above 1.
                return usize::MAX;
            }
            current = next;
        }
        k
    }

    /// Order of the center.
    pub fn center_size(&self) -> usize {
        (0..self.n as u32)
            .filter(|&x| (0..self.n as u32).all(|y| self.mul(x, y) == self.mul(y, x)))
            .count()
    }

    /// The structural fingerprint used as a cheap isomorphism invariant.
    pub fn fingerprint(&self) -> Fingerprint {
        let mut order_counts: BTreeMap<u32, usize> = BTreeMap::new();
        for x in 0..self.n as u32 {
            *order_counts.entry(element_order(self, x)).or_insert(0) += 1;
        }
        let mut class_counts: BTreeMap<usize, usize> = BTreeMap::new();
        for class in conjugacy_classes(self) {
            *class_counts.entry(class.len()).or_insert(0) += 1;
        }
        Fingerprint {
            order: self.n,
            exponent: self.exponent(),
            element_orders: order_counts.into_iter().collect(),
            class_sizes: class_counts.into_iter().collect(),
            abelianization: self.n / self.derived_subgroup().len(),
            derived_length: self.derived_length(),
            center: self.center_size(),
        }
    }

    /// A short generating sequence, chosen greedily by maximal element order.
    pub fn generating_sequence(&self) -> Vec<u32> {
        let mut gens: Vec<u32> = Vec::new();
        let mut span: BTreeSet<u32> = BTreeSet::new();
        span.insert(0);
        while span.len() < self.n {
            let best = (0..self.n as u32)
                .filter(|x| !span.contains(x))
                .max_by_key(|&x| (element_order(self, x), std::cmp::Reverse(x)))
                .unwrap();
            gens.push(best);
            span = closure(self, &gens).into_iter().collect();
        }
        gens
    }

    /// Exact isomorphism test: fingerprint comparison, then a backtracking
    /// search for a generator-image assignment inducing a bijective
    /// homomorphism.
    pub fn is_isomorphic(&self, other: &AbstractGroup) -> bool {
        if self.n != other.n {
            return false;
        }
        if self.n == 1 {
            return true;
        }
        if self.fingerprint() != other.fingerprint() {
            return false;
        }
        let gens = self.generating_sequence();
        // Per-element invariants in `other` used to prune candidate images.
        let mut other_class_size = vec![0usize; other.n];
        for class in conjugacy_classes(other) {
            for &x in &class {
                other_class_size[x as usize] = class.len();
            }
        }
        let self_class_size = {
            let mut v = vec![0usize; self.n];
            for class in conjugacy_classes(self) {
                for &x in &class {
                    v[x as usize] = class.len();
                }
            }
            v
        };
        let mut images: Vec<u32> = Vec::new();
        self.search_images(other, &gens, &mut images, &self_class_size, &other_class_size)
    }

    fn search_images(
        &self,
        other: &AbstractGroup,
        gens: &[u32],
        images: &mut Vec<u32>,
        self_cs: &[usize],
        other_cs: &[usize],
    ) -> bool {
        if images.len() == gens.len() {
            return self.check_homomorphism(other, gens, images);
        }
        let g = gens[images.len()];
        let want_order = element_order(self, g);
        let want_cs = self_cs[g as usize];
        for cand in 0..other.n as u32 {
            if element_order(other, cand) != want_order || other_cs[cand as usize] != want_cs {
                continue;
            }
            images.push(cand);
            // Partial consistency: the subgroup generated by the images so
            // far must have the same order as the one generated upstream.
            let up = closure(self, &gens[..images.len()]);
            let down = closure(other, images);
            if up.len() == down.len()
                && self.search_images(other, gens, images, self_cs, other_cs)
            {
                return true;
            }
            images.pop();
        }
        false
    }

    /// Attempts to extend `gens -> images` to a full bijective homomorphism
    /// by breadth-first products.
    fn check_homomorphism(&self, other: &AbstractGroup, gens: &[u32], images: &[u32]) -> bool {
        let mut phi: Vec<u32> = vec![u32::MAX; self.n];
        let mut used = vec![false; other.n];
        phi[0] = 0;
        used[0] = true;
        let mut frontier: Vec<u32> = vec![0];
        let mut defined = 1;
        while let Some(x) = frontier.pop() {
            for (k, &g) in gens.iter().enumerate() {
                let y = self.mul(x, g);
                let img = other.mul(phi[x as usize], images[k]);
                if phi[y as usize] == u32::MAX {
                    if used[img as usize] {
                        return false; // not injective
                    }
                    phi[y as usize] = img;
                    used[img as usize] = true;
                    defined += 1;
                    frontier.push(y);
                } else if phi[y as usize] != img {
                    return false; // not well-defined
                }
            }
        }
        defined == self.n
    }
}

/// Cheap isomorphism invariants of a finite group.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Fingerprint {
    /// Group order.
    pub order: usize,
    /// Group exponent.
    pub exponent: u32,
    /// `(element order, multiplicity)` pairs.
    pub element_orders: Vec<(u32, usize)>,
    /// `(conjugacy class size, multiplicity)` pairs.
    pub class_sizes: Vec<(usize, usize)>,
    /// Order of the abelianization.
    pub abelianization: usize,
    /// Derived length (`usize::MAX` marks a perfect subgroup).
    pub derived_length: usize,
    /// Order of the center.
    pub center: usize,
}

#[cfg(test)]
mod tests {
    use super::super::perm::PermGroup;
    use super::*;

    fn dihedral4() -> AbstractGroup {
        PermGroup::from_cycles(&["(1,2,3,4)", "(1,3)"])
            .unwrap()
            .to_abstract()
    }

    fn quaternion8() -> AbstractGroup {
        PermGroup::from_cycles(&["(1,2,5,6)(3,4,7,8)", "(1,3,5,7)(2,8,6,4)"])
            .unwrap()
            .to_abstract()
    }

    #[test]
    fn cyclic_groups() {
        let c6 = AbstractGroup::cyclic(6);
        assert!(c6.is_abelian() && c6.is_cyclic());
        assert_eq!(c6.exponent(), 6);
        assert_eq!(c6.derived_length(), 1);
        assert!(c6.is_isomorphic(&AbstractGroup::cyclic(6)));
        assert!(!c6.is_isomorphic(&AbstractGroup::cyclic(5)));
        assert_eq!(AbstractGroup::trivial().derived_length(), 0);
    }

    #[test]
    fn d4_vs_q8_same_coarse_data_not_isomorphic() {
        let d4 = dihedral4();
        let q8 = quaternion8();
        assert_eq!(d4.order(), 8);
        assert_eq!(q8.order(), 8);
        // Same order, same exponent, same class equation...
        assert_eq!(d4.exponent(), 4);
        assert_eq!(q8.exponent(), 4);
        assert_eq!(
            d4.fingerprint().class_sizes,
            q8.fingerprint().class_sizes
        );
        // ...but different element-order multisets (Q8 has one involution),
        // so the fingerprint already separates them.
        assert_ne!(d4.fingerprint(), q8.fingerprint());
        assert!(!d4.is_isomorphic(&q8));
        assert!(d4.is_isomorphic(&dihedral4()));
        assert!(q8.is_isomorphic(&quaternion8()));
    }

    #[test]
    fn c4xc2_vs_c8_vs_c2cubed() {
        let c8 = AbstractGroup::cyclic(8);
        let c4c2 = PermGroup::from_cycles(&["(1,2,3,4)", "(5,6)"])
            .unwrap()
            .to_abstract();
        let c2cubed = PermGroup::from_cycles(&["(1,2)", "(3,4)", "(5,6)"])
            .unwrap()
            .to_abstract();
        assert!(!c8.is_isomorphic(&c4c2));
        assert!(!c4c2.is_isomorphic(&c2cubed));
        assert!(c4c2.is_abelian() && !c4c2.is_cyclic());
        assert_eq!(c2cubed.exponent(), 2);
    }

    #[test]
    fn isomorphism_across_presentations() {
        // S3 as permutations vs as the quotient S4 / V4.
        let s3 = PermGroup::from_cycles(&["(1,2,3)", "(1,2)"])
            .unwrap()
            .to_abstract();
        let s4 = PermGroup::from_cycles(&["(1,2)", "(1,2,3,4)"]).unwrap();
        let dbl = (0..s4.size() as u32)
            .find(|&x| {
                element_order(&s4, x) == 2 && super::super::conjugacy_class(&s4, x).len() == 3
            })
            .unwrap();
        let v4 = super::super::normal_closure(&s4, &[dbl]);
        let q = super::super::quotient(&s4, &v4);
        assert!(s3.is_isomorphic(&q));
        assert_eq!(s3.derived_length(), 2);
        assert_eq!(s3.center_size(), 1);
    }
}
