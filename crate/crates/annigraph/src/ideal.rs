//! Ideals of a finite ring and the complete ideal lattice.
//!
//! An ideal is identified by its sorted element-index set. The lattice is
//! enumerated as the fixpoint closure of all principal ideals under pairwise
//! sum — correct because every ideal of a finite ring is a finite sum of
//! principal ideals — and kept in canonical order (cardinality, then
//! lexicographic element set), which fixes vertex order everywhere else.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::ring::{fmt_elem_set, FiniteRing};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("ideal of {0} used with ring {1}")]
    RingMismatch(String, String),
    #[error("{0} is not an ideal of {1}: {2}")]
    NotAnIdeal(String, String, String),
    #[error("ideal power exponent must be at least 1")]
    ZeroPower,
}

/// An ideal of a named ring: a canonical sorted set of element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ideal {
    ring: String,
    elems: Vec<usize>,
}

impl Ideal {
    /// Validates the ideal axioms (contains zero, closed under addition and
    /// under multiplication by every ring element) and canonicalizes.
    pub fn from_elements(ring: &FiniteRing, elems: Vec<usize>) -> Result<Self, IdealError> {
        let mut elems = elems;
        elems.sort_unstable();
        elems.dedup();
        let fail = |why: &str| {
            Err(IdealError::NotAnIdeal(
                fmt_elem_set(&elems),
                ring.label().to_string(),
                why.to_string(),
            ))
        };
        if elems.iter().any(|&e| e >= ring.order()) {
            return fail("element index out of range");
        }
        if elems.binary_search(&ring.zero()).is_err() {
            return fail("does not contain zero");
        }
        for &a in &elems {
            for &b in &elems {
                if elems.binary_search(&ring.add(a, b)).is_err() {
                    return fail("not closed under addition");
                }
            }
            for r in ring.elements() {
                if elems.binary_search(&ring.mul(r, a)).is_err() {
                    return fail("not closed under ring multiplication");
                }
            }
        }
        Ok(Ideal { ring: ring.label().to_string(), elems })
    }

    pub(crate) fn from_sorted_unchecked(ring: &FiniteRing, elems: Vec<usize>) -> Self {
        debug_assert!(elems.windows(2).all(|w| w[0] < w[1]));
        Ideal { ring: ring.label().to_string(), elems }
    }

    pub(crate) fn raw(ring: String, elems: Vec<usize>) -> Self {
        Ideal { ring, elems }
    }

    pub fn ring_label(&self) -> &str {
        &self.ring
    }

    pub fn elements(&self) -> &[usize] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// True iff this is the zero ideal.
    pub fn is_zero(&self) -> bool {
        self.elems.len() == 1
    }

    pub fn contains(&self, e: usize) -> bool {
        self.elems.binary_search(&e).is_ok()
    }

    pub fn is_subset_of(&self, other: &Ideal) -> bool {
        self.elems.iter().all(|&e| other.contains(e))
    }

    /// Canonical ordering key: (cardinality, lexicographic element set).
    pub fn canon_key(&self) -> (usize, &[usize]) {
        (self.elems.len(), &self.elems)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", fmt_elem_set(&self.elems))
    }
}

fn check_same_ring(ring: &FiniteRing, i: &Ideal) -> Result<(), IdealError> {
    if i.ring != ring.label() {
        return Err(IdealError::RingMismatch(
            i.ring.clone(),
            ring.label().to_string(),
        ));
    }
    Ok(())
}

fn check_pair(ring: &FiniteRing, i: &Ideal, j: &Ideal) -> Result<(), IdealError> {
    check_same_ring(ring, i)?;
    check_same_ring(ring, j)
}

/// `Rx = {r·x : r ∈ R}`, the principal ideal generated by `x`.
pub fn principal_ideal(ring: &FiniteRing, x: usize) -> Ideal {
    let mut elems: Vec<usize> = ring.elements().map(|r| ring.mul(r, x)).collect();
    elems.sort_unstable();
    elems.dedup();
    Ideal::from_sorted_unchecked(ring, elems)
}

/// `I + J = {a + b}`. Already an ideal setwise, no further closure needed.
pub fn ideal_sum(ring: &FiniteRing, i: &Ideal, j: &Ideal) -> Result<Ideal, IdealError> {
    check_pair(ring, i, j)?;
    Ok(Ideal::from_sorted_unchecked(ring, sum_sets(ring, i.elements(), j.elements())))
}

fn sum_sets(ring: &FiniteRing, a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut mask = vec![false; ring.order()];
    for &x in a {
        for &y in b {
            mask[ring.add(x, y)] = true;
        }
    }
    mask_to_vec(&mask)
}

/// The ideal generated by all pairwise products `{a·b : a ∈ I, b ∈ J}`:
/// the raw product set is closed under ring multiplication already, so only
/// additive closure is taken.
pub fn ideal_product(ring: &FiniteRing, i: &Ideal, j: &Ideal) -> Result<Ideal, IdealError> {
    check_pair(ring, i, j)?;
    Ok(Ideal::from_sorted_unchecked(
        ring,
        product_sets(ring, i.elements(), j.elements()),
    ))
}

pub(crate) fn product_sets(ring: &FiniteRing, a: &[usize], b: &[usize]) -> Vec<usize> {
    let n = ring.order();
    let mut mask = vec![false; n];
    mask[ring.zero()] = true;
    for &x in a {
        for &y in b {
            mask[ring.mul(x, y)] = true;
        }
    }
    // additive closure
    loop {
        let cur = mask_to_vec(&mask);
        let mut grew = false;
        for &x in &cur {
            for &y in &cur {
                let s = ring.add(x, y);
                if !mask[s] {
                    mask[s] = true;
                    grew = true;
                }
            }
        }
        if !grew {
            return mask_to_vec(&mask);
        }
    }
}

/// Setwise intersection; an ideal whenever both inputs are.
pub fn ideal_intersection(ring: &FiniteRing, i: &Ideal, j: &Ideal) -> Result<Ideal, IdealError> {
    check_pair(ring, i, j)?;
    let elems = i.elements().iter().copied().filter(|&e| j.contains(e)).collect();
    Ok(Ideal::from_sorted_unchecked(ring, elems))
}

/// `I^k` by iterated product, `k >= 1`.
pub fn ideal_power(ring: &FiniteRing, i: &Ideal, k: usize) -> Result<Ideal, IdealError> {
    check_same_ring(ring, i)?;
    if k == 0 {
        return Err(IdealError::ZeroPower);
    }
    let mut acc = i.clone();
    for _ in 1..k {
        acc = ideal_product(ring, &acc, i)?;
    }
    Ok(acc)
}

/// `Ann(I) = {r : r·a = 0 for all a ∈ I}`. Always an ideal;
/// `Ann(R) = (0)` and `Ann((0)) = R`.
pub fn annihilator(ring: &FiniteRing, i: &Ideal) -> Result<Ideal, IdealError> {
    check_same_ring(ring, i)?;
    Ok(Ideal::from_sorted_unchecked(
        ring,
        annihilator_set(ring, i.elements()),
    ))
}

pub(crate) fn annihilator_set(ring: &FiniteRing, elems: &[usize]) -> Vec<usize> {
    ring.elements()
        .filter(|&r| elems.iter().all(|&a| ring.mul(r, a) == ring.zero()))
        .collect()
}

fn mask_to_vec(mask: &[bool]) -> Vec<usize> {
    mask.iter()
        .enumerate()
        .filter_map(|(i, &b)| b.then_some(i))
        .collect()
}

/// True iff some power of `I` is the zero ideal. The chain `I ⊇ I² ⊇ ...`
/// is iterated until it stabilizes, which happens within lattice height.
pub fn is_nilpotent_ideal(ring: &FiniteRing, i: &Ideal) -> Result<bool, IdealError> {
    check_same_ring(ring, i)?;
    let mut cur = i.clone();
    loop {
        if cur.is_zero() {
            return Ok(true);
        }
        let next = ideal_product(ring, &cur, i)?;
        if next == cur {
            return Ok(false);
        }
        cur = next;
    }
}

/// The complete, canonically ordered family of ideals of a ring.
#[derive(Debug, Clone)]
pub struct IdealLattice {
    ring: String,
    ideals: Vec<Ideal>,
    pos: HashMap<Vec<usize>, usize>,
}

impl IdealLattice {
    /// Enumerates every ideal: all principal ideals are closed under pairwise
    /// sum until no new ideal appears.
    pub fn enumerate(ring: &FiniteRing) -> Self {
        let mut ideals: Vec<Ideal> = Vec::new();
        let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
        for x in ring.elements() {
            let p = principal_ideal(ring, x);
            if !seen.contains_key(p.elements()) {
                seen.insert(p.elements().to_vec(), 0);
                ideals.push(p);
            }
        }
        let mut frontier: Vec<usize> = (0..ideals.len()).collect();
        while !frontier.is_empty() {
            let mut fresh = Vec::new();
            for &fi in &frontier {
                for ij in 0..ideals.len() {
                    let s = sum_sets(ring, ideals[fi].elements(), ideals[ij].elements());
                    if !seen.contains_key(&s) {
                        seen.insert(s.clone(), 0);
                        ideals.push(Ideal::from_sorted_unchecked(ring, s));
                        fresh.push(ideals.len() - 1);
                    }
                }
            }
            frontier = fresh;
        }
        ideals.sort_by(|a, b| a.canon_key().cmp(&b.canon_key()));
        let pos = ideals
            .iter()
            .enumerate()
            .map(|(k, i)| (i.elements().to_vec(), k))
            .collect();
        IdealLattice { ring: ring.label().to_string(), ideals, pos }
    }

    pub fn ring_label(&self) -> &str {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn get(&self, idx: usize) -> &Ideal {
        &self.ideals[idx]
    }

    /// Lattice position of an ideal given by its element set.
    pub fn position(&self, elems: &[usize]) -> Option<usize> {
        self.pos.get(elems).copied()
    }

    /// The zero ideal is always the canonical minimum.
    pub fn zero_ideal(&self) -> &Ideal {
        &self.ideals[0]
    }

    /// The whole ring is always the canonical maximum.
    pub fn full_ideal(&self) -> &Ideal {
        self.ideals.last().unwrap()
    }

    /// Vertices of both ideal graphs: nonzero ideals with nonzero
    /// annihilator, in canonical order. `R` never qualifies
    /// (`Ann(R) = (0)`), so every vertex is a proper ideal.
    pub fn annihilating_vertices(&self, ring: &FiniteRing) -> Vec<usize> {
        (0..self.ideals.len())
            .filter(|&k| {
                let i = &self.ideals[k];
                !i.is_zero() && annihilator_set(ring, i.elements()).len() > 1
            })
            .collect()
    }

    /// Prime: proper, and `ab ∈ I` forces `a ∈ I` or `b ∈ I`.
    pub fn is_prime(&self, ring: &FiniteRing, i: &Ideal) -> bool {
        if i.len() == ring.order() {
            return false;
        }
        for a in ring.elements() {
            if i.contains(a) {
                continue;
            }
            for b in ring.elements() {
                if i.contains(ring.mul(a, b)) && !i.contains(b) {
                    return false;
                }
            }
        }
        true
    }

    /// Lattice positions of the minimal primes: prime ideals containing no
    /// other prime strictly inside them.
    pub fn minimal_primes(&self, ring: &FiniteRing) -> Vec<usize> {
        let primes: Vec<usize> = (0..self.ideals.len())
            .filter(|&k| self.is_prime(ring, &self.ideals[k]))
            .collect();
        primes
            .iter()
            .copied()
            .filter(|&k| {
                primes.iter().all(|&other| {
                    other == k
                        || !self.ideals[other].is_subset_of(&self.ideals[k])
                        || self.ideals[other] == self.ideals[k]
                })
            })
            .collect()
    }

    /// Minimal ideal: nonzero, with no ideal strictly between it and zero.
    pub fn is_minimal_ideal(&self, i: &Ideal) -> bool {
        !i.is_zero()
            && self.ideals.iter().all(|j| {
                j.is_zero() || j == i || !j.is_subset_of(i) || j.len() == i.len()
            })
    }

    /// Lattice positions of the maximal ideals (proper, nothing proper above).
    pub fn maximal_ideals(&self, ring: &FiniteRing) -> Vec<usize> {
        let n = ring.order();
        (0..self.ideals.len())
            .filter(|&k| {
                let i = &self.ideals[k];
                i.len() < n
                    && self.ideals.iter().all(|j| {
                        j.len() == n || j == i || !i.is_subset_of(j)
                    })
            })
            .collect()
    }

    /// True iff every ideal is principal.
    pub fn is_principal_ring(&self, ring: &FiniteRing) -> bool {
        let principals: std::collections::HashSet<Vec<usize>> = ring
            .elements()
            .map(|x| principal_ideal(ring, x).elements().to_vec())
            .collect();
        self.ideals.iter().all(|i| principals.contains(i.elements()))
    }

    /// True iff the ring has exactly one maximal ideal.
    pub fn is_local(&self, ring: &FiniteRing) -> bool {
        self.maximal_ideals(ring).len() == 1
    }

    /// True iff the lattice is exactly `(0) ⊂ I ⊂ R`.
    pub fn has_unique_nontrivial_ideal(&self) -> bool {
        self.ideals.len() == 3
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn z(n: usize) -> FiniteRing {
        FiniteRing::cyclic(n).unwrap()
    }

    fn z2xz4() -> FiniteRing {
        z(2).product(&z(4)).unwrap()
    }

    fn ideal_of(ring: &FiniteRing, elems: &[usize]) -> Ideal {
        Ideal::from_elements(ring, elems.to_vec()).unwrap()
    }

    #[test]
    fn principal_ideals() {
        let r16 = z(16);
        assert_eq!(principal_ideal(&r16, 4).elements(), &[0, 4, 8, 12]);
        assert_eq!(principal_ideal(&r16, 0).elements(), &[0]);
        // (1,0) in Z2 x Z4 has index 4
        let r = z2xz4();
        assert_eq!(principal_ideal(&r, 4).elements(), &[0, 4]);
    }

    #[test]
    fn lattice_counts() {
        assert_eq!(IdealLattice::enumerate(&z(16)).len(), 5);
        assert_eq!(IdealLattice::enumerate(&z2xz4()).len(), 6);
        let ns = FiniteRing::null_square(2, 2).unwrap();
        assert_eq!(IdealLattice::enumerate(&ns).len(), 6);
        // Z2[x]/(x^2) has exactly one non-trivial ideal
        let dual = FiniteRing::poly_quotient(2, &[0, 0, 1]).unwrap();
        assert!(IdealLattice::enumerate(&dual).has_unique_nontrivial_ideal());
    }

    #[test]
    fn lattice_of_z16_sets() {
        let r = z(16);
        let lat = IdealLattice::enumerate(&r);
        let sets: Vec<&[usize]> = lat.ideals().iter().map(|i| i.elements()).collect();
        assert_eq!(sets[0], &[0]);
        assert_eq!(sets[1], &[0, 8]);
        assert_eq!(sets[2], &[0, 4, 8, 12]);
        assert_eq!(sets[3], &[0, 2, 4, 6, 8, 10, 12, 14]);
        assert_eq!(sets[4].len(), 16);
    }

    #[test]
    fn divisor_count_rule_for_cyclic() {
        for n in 2..=64 {
            let lat = IdealLattice::enumerate(&z(n));
            assert_eq!(lat.len(), oracle::divisor_count(n), "Z{n}");
        }
    }

    #[test]
    fn lattice_matches_subset_scan_oracle() {
        for r in [
            z(12),
            z(16),
            z2xz4(),
            FiniteRing::null_square(2, 2).unwrap(),
            FiniteRing::poly_quotient(2, &[1, 1, 1]).unwrap(),
            z(2).product(&z(2)).unwrap().product(&z(2)).unwrap(),
        ] {
            let lat = IdealLattice::enumerate(&r);
            let brute = oracle::all_ideals_subset_scan(&r);
            let fast: Vec<Vec<usize>> =
                lat.ideals().iter().map(|i| i.elements().to_vec()).collect();
            assert_eq!(fast, brute, "lattice mismatch for {}", r.label());
        }
    }

    #[test]
    fn product_lattice_is_product_of_lattices() {
        let r = z2xz4();
        assert_eq!(IdealLattice::enumerate(&r).len(), 2 * 3);
        let r2 = z(2).product(&z(3)).unwrap();
        let l1: Vec<usize> = IdealLattice::enumerate(&r2)
            .ideals()
            .iter()
            .map(|i| i.len())
            .collect();
        let l2: Vec<usize> = IdealLattice::enumerate(&z(6))
            .ideals()
            .iter()
            .map(|i| i.len())
            .collect();
        assert_eq!(l1, l2, "Z2 x Z3 and Z6 share the lattice shape");
    }

    #[test]
    fn ideal_products() {
        let r = z(16);
        let m = ideal_of(&r, &[0, 2, 4, 6, 8, 10, 12, 14]);
        let m3 = ideal_of(&r, &[0, 8]);
        assert!(ideal_product(&r, &m, &m3).unwrap().is_zero());
        let m2 = ideal_product(&r, &m, &m).unwrap();
        assert_eq!(m2.elements(), &[0, 4, 8, 12]);
        let full = ideal_of(&r, &(0..16).collect::<Vec<_>>());
        for i in [&m, &m2, &m3] {
            assert_eq!(&ideal_product(&r, i, &full).unwrap(), i);
        }
    }

    #[test]
    fn sums_intersections_powers() {
        let r = z(16);
        let m2 = ideal_of(&r, &[0, 4, 8, 12]);
        let m3 = ideal_of(&r, &[0, 8]);
        assert_eq!(ideal_sum(&r, &m3, &m2).unwrap(), m2);
        let m = ideal_of(&r, &[0, 2, 4, 6, 8, 10, 12, 14]);
        assert!(ideal_power(&r, &m, 4).unwrap().is_zero());
        assert_eq!(ideal_power(&r, &m, 3).unwrap(), m3);
        assert!(ideal_power(&r, &m, 0).is_err());

        let rp = z2xz4();
        let i1 = ideal_of(&rp, &[0, 4]); // Z2 x 0
        let i4 = ideal_of(&rp, &[0, 1, 2, 3]); // 0 x Z4
        assert!(ideal_intersection(&rp, &i1, &i4).unwrap().is_zero());
    }

    #[test]
    fn annihilators() {
        let r = z(16);
        let m = ideal_of(&r, &[0, 2, 4, 6, 8, 10, 12, 14]);
        let m2 = ideal_of(&r, &[0, 4, 8, 12]);
        let full = ideal_of(&r, &(0..16).collect::<Vec<_>>());
        assert_eq!(annihilator(&r, &m).unwrap().elements(), &[0, 8]);
        assert_eq!(annihilator(&r, &m2).unwrap(), m2);
        assert!(annihilator(&r, &full).unwrap().is_zero());
        let zero = ideal_of(&r, &[0]);
        assert_eq!(annihilator(&r, &zero).unwrap(), full);
    }

    #[test]
    fn ring_mismatch_is_rejected() {
        let r16 = z(16);
        let r8 = z(8);
        let a = principal_ideal(&r16, 2);
        let b = principal_ideal(&r8, 2);
        assert!(matches!(
            ideal_product(&r16, &a, &b),
            Err(IdealError::RingMismatch(..))
        ));
        assert!(matches!(
            ideal_sum(&r8, &a, &b),
            Err(IdealError::RingMismatch(..))
        ));
    }

    #[test]
    fn annihilating_vertices() {
        let r16 = z(16);
        let lat = IdealLattice::enumerate(&r16);
        let verts = lat.annihilating_vertices(&r16);
        assert_eq!(verts.len(), 3);
        let sets: Vec<&[usize]> = verts.iter().map(|&k| lat.get(k).elements()).collect();
        assert_eq!(sets, vec![&[0, 8][..], &[0, 4, 8, 12][..], &[0, 2, 4, 6, 8, 10, 12, 14][..]]);

        let rp = z2xz4();
        let latp = IdealLattice::enumerate(&rp);
        assert_eq!(latp.annihilating_vertices(&rp).len(), 4);

        let f4 = FiniteRing::poly_quotient(2, &[1, 1, 1]).unwrap();
        let latf = IdealLattice::enumerate(&f4);
        assert!(latf.annihilating_vertices(&f4).is_empty());
    }

    #[test]
    fn primes_and_minimal_primes() {
        let r6 = z(6);
        let lat6 = IdealLattice::enumerate(&r6);
        assert!(lat6.is_prime(&r6, &ideal_of(&r6, &[0, 2, 4])));
        assert!(!lat6.is_prime(&r6, &ideal_of(&r6, &[0])));
        assert_eq!(lat6.minimal_primes(&r6).len(), 2);

        let z2 = z(2);
        let r222 = z2.product(&z2).unwrap().product(&z2).unwrap();
        let lat = IdealLattice::enumerate(&r222);
        assert_eq!(lat.minimal_primes(&r222).len(), 3);

        let rp = z2xz4();
        let latp = IdealLattice::enumerate(&rp);
        assert_eq!(latp.minimal_primes(&rp).len(), 2);
    }

    #[test]
    fn minimal_and_nilpotent_ideals() {
        let r = z(16);
        let lat = IdealLattice::enumerate(&r);
        assert!(lat.is_minimal_ideal(&ideal_of(&r, &[0, 8])));
        assert!(!lat.is_minimal_ideal(&ideal_of(&r, &[0, 4, 8, 12])));
        assert!(!lat.is_minimal_ideal(&ideal_of(&r, &[0])));
        let m = ideal_of(&r, &[0, 2, 4, 6, 8, 10, 12, 14]);
        assert!(is_nilpotent_ideal(&r, &m).unwrap());
        let rp = z2xz4();
        let i1 = ideal_of(&rp, &[0, 4]); // Z2 x 0 is idempotent, not nilpotent
        assert!(!is_nilpotent_ideal(&rp, &i1).unwrap());
    }

    #[test]
    fn quotient_lattice_shapes() {
        // Z16/8Z16 has the lattice shape of Z8
        let r16 = z(16);
        let q = r16.quotient(&[0, 8]).unwrap();
        let shape = |r: &FiniteRing| -> Vec<usize> {
            IdealLattice::enumerate(r).ideals().iter().map(|i| i.len()).collect()
        };
        assert_eq!(shape(&q), shape(&z(8)));
    }

    #[test]
    fn ring_structure_predicates() {
        let r16 = z(16);
        let lat16 = IdealLattice::enumerate(&r16);
        assert!(lat16.is_principal_ring(&r16));
        assert!(lat16.is_local(&r16));
        assert!(!lat16.has_unique_nontrivial_ideal());

        let r4 = z(4);
        assert!(IdealLattice::enumerate(&r4).has_unique_nontrivial_ideal());

        let ns = FiniteRing::null_square(2, 2).unwrap();
        let latns = IdealLattice::enumerate(&ns);
        assert!(!latns.is_principal_ring(&ns));
        assert!(latns.is_local(&ns));

        let r6 = z(6);
        assert!(!IdealLattice::enumerate(&r6).is_local(&r6));
    }

    #[test]
    fn annihilator_laws() {
        for r in [z(16), z(12), z2xz4(), FiniteRing::null_square(2, 2).unwrap()] {
            let lat = IdealLattice::enumerate(&r);
            for i in lat.ideals() {
                for j in lat.ideals() {
                    let ann_i = annihilator(&r, i).unwrap();
                    let ann_j = annihilator(&r, j).unwrap();
                    let prod = ideal_product(&r, i, j).unwrap();
                    let ann_ij = annihilator(&r, &prod).unwrap();
                    // Ann(I) ∪ Ann(J) ⊆ Ann(IJ)
                    for &e in ann_i.elements().iter().chain(ann_j.elements()) {
                        assert!(ann_ij.contains(e));
                    }
                    // antitone: I ⊆ J ⇒ Ann(J) ⊆ Ann(I)
                    if i.is_subset_of(j) {
                        assert!(ann_j.is_subset_of(&ann_i));
                    }
                }
            }
        }
    }

    #[test]
    fn product_distributes_over_sum() {
        for r in [z(16), z2xz4(), FiniteRing::null_square(2, 2).unwrap()] {
            let lat = IdealLattice::enumerate(&r);
            for i in lat.ideals() {
                for j in lat.ideals() {
                    for k in lat.ideals() {
                        let lhs =
                            ideal_product(&r, i, &ideal_sum(&r, j, k).unwrap()).unwrap();
                        let rhs = ideal_sum(
                            &r,
                            &ideal_product(&r, i, j).unwrap(),
                            &ideal_product(&r, i, k).unwrap(),
                        )
                        .unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn minimal_primes_contain_nilradical() {
        for r in [z(16), z(12), z2xz4(), z(30)] {
            let lat = IdealLattice::enumerate(&r);
            let nil = r.nilradical();
            for &k in &lat.minimal_primes(&r) {
                for &e in nil.elements() {
                    assert!(lat.get(k).contains(e));
                }
            }
            if r.is_reduced() {
                // intersection of all minimal primes is (0)
                let mut common: Vec<usize> = lat.full_ideal().elements().to_vec();
                for &k in &lat.minimal_primes(&r) {
                    common.retain(|&e| lat.get(k).contains(e));
                }
                assert_eq!(common, vec![r.zero()]);
                assert_eq!(
                    lat.minimal_primes(&r).len(),
                    lat.maximal_ideals(&r).len(),
                    "reduced finite: |Min| = #maximal ({})",
                    r.label()
                );
            }
        }
    }
}
