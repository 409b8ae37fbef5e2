//! Finite commutative unital rings given by explicit operation tables.
//!
//! Every ring is stored the same way regardless of how it was constructed:
//! elements are the indices `0..n`, and addition/multiplication are dense
//! `n x n` lookup tables. Constructors exist for the ring families the rest
//! of the crate quantifies over: `Z_n`, polynomial quotients `Z_p[x]/(f)`,
//! trivial extensions `F_p ⋉ (F_p)^d` (null-square local rings), finite
//! products, and quotients by an ideal.

use std::fmt;

use thiserror::Error;

/// Largest ring order accepted by constructors. Tables are dense `n x n`,
/// so an unchecked order would make a typo allocate gigabytes.
pub const MAX_ORDER: usize = 4096;

/// Default bound up to which the ring axioms are checked exhaustively
/// (the associativity/distributivity scans are `O(n^3)`). Above the bound
/// the scans run on a deterministic sample of triples. Overridable through
/// the `ANNIGRAPH_MAX_VALIDATE` environment variable.
pub const DEFAULT_VALIDATION_BOUND: usize = 256;

/// Exhaustive-validation bound: `ANNIGRAPH_MAX_VALIDATE` if set and parseable,
/// otherwise [`DEFAULT_VALIDATION_BOUND`].
pub fn validation_bound() -> usize {
    std::env::var("ANNIGRAPH_MAX_VALIDATE")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_VALIDATION_BOUND)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("invalid ring order {0}: must be between 2 and {MAX_ORDER}")]
    InvalidOrder(usize),
    #[error("invalid characteristic {0}: must be prime")]
    InvalidCharacteristic(u64),
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("ring axiom violated: {0}")]
    AxiomViolation(String),
    #[error("quotient by the full ring would be the zero ring")]
    ZeroRing,
    #[error("{0} is not an ideal of {1}: {2}")]
    NotAnIdeal(String, String, String),
}

/// A set of element indices of a named ring, kept sorted.
///
/// Used for raw element-level sets such as `Z(R)` and `Nil(R)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ElementSet {
    ring: String,
    elems: Vec<usize>,
}

impl ElementSet {
    pub(crate) fn new(ring: &str, mut elems: Vec<usize>) -> Self {
        elems.sort_unstable();
        elems.dedup();
        ElementSet { ring: ring.to_string(), elems }
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

    pub fn contains(&self, e: usize) -> bool {
        self.elems.binary_search(&e).is_ok()
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", fmt_elem_set(&self.elems))
    }
}

/// Renders a sorted element set as `{0,2,4}`.
pub(crate) fn fmt_elem_set(elems: &[usize]) -> String {
    let mut s = String::from("{");
    for (i, e) in elems.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        s.push_str(&e.to_string());
    }
    s.push('}');
    s
}

/// A finite commutative unital ring on the element indices `0..order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteRing {
    order: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    zero: usize,
    one: usize,
    label: String,
}

impl FiniteRing {
    /// Builds and validates a ring from raw tables (row-major `n x n`).
    pub fn from_tables(
        label: impl Into<String>,
        zero: usize,
        one: usize,
        add: Vec<usize>,
        mul: Vec<usize>,
    ) -> Result<Self, RingError> {
        Self::from_tables_with_bound(label, zero, one, add, mul, validation_bound())
    }

    /// As [`FiniteRing::from_tables`] with an explicit exhaustive-check bound.
    pub fn from_tables_with_bound(
        label: impl Into<String>,
        zero: usize,
        one: usize,
        add: Vec<usize>,
        mul: Vec<usize>,
        bound: usize,
    ) -> Result<Self, RingError> {
        let label = label.into();
        let order = (add.len() as f64).sqrt().round() as usize;
        if !(2..=MAX_ORDER).contains(&order) {
            return Err(RingError::InvalidOrder(order));
        }
        let ring = FiniteRing { order, add, mul, zero, one, label };
        ring.validate(bound)?;
        Ok(ring)
    }

    /// The cyclic ring `Z_n` with label `Zn`.
    pub fn cyclic(n: usize) -> Result<Self, RingError> {
        if !(2..=MAX_ORDER).contains(&n) {
            return Err(RingError::InvalidOrder(n));
        }
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                add[i * n + j] = (i + j) % n;
                mul[i * n + j] = (i * j) % n;
            }
        }
        Self::from_tables(format!("Z{n}"), 0, 1, add, mul)
    }

    /// The quotient `Z_p[x]/(f)` for a prime `p` and a monic modulus `f`
    /// of degree `d >= 1`, given by its coefficients in ascending order
    /// (`coeffs[i]` is the coefficient of `x^i`). Elements are the residue
    /// polynomials of degree `< d`, indexed by their base-`p` digit string.
    pub fn poly_quotient(p: u64, coeffs: &[u64]) -> Result<Self, RingError> {
        if !is_prime(p) {
            return Err(RingError::InvalidCharacteristic(p));
        }
        let d = coeffs.len().saturating_sub(1);
        if d == 0 {
            return Err(RingError::InvalidModulus(
                "degree must be at least 1".into(),
            ));
        }
        if coeffs[d] != 1 {
            return Err(RingError::InvalidModulus("must be monic".into()));
        }
        if coeffs.iter().any(|&c| c >= p) {
            return Err(RingError::InvalidModulus(format!(
                "coefficients must lie in 0..{p}"
            )));
        }
        let n = (p as usize)
            .checked_pow(d as u32)
            .filter(|&n| n <= MAX_ORDER)
            .ok_or(RingError::InvalidOrder(usize::MAX))?;

        let pu = p as usize;
        let digits = |mut i: usize| -> Vec<u64> {
            let mut v = vec![0u64; d];
            for dig in v.iter_mut() {
                *dig = (i % pu) as u64;
                i /= pu;
            }
            v
        };
        let index = |v: &[u64]| -> usize {
            v.iter().rev().fold(0usize, |acc, &c| acc * pu + c as usize)
        };
        // Reduce a polynomial (any degree) mod f, mod p.
        let reduce = |mut poly: Vec<u64>| -> Vec<u64> {
            while poly.len() > d {
                let lead = poly.pop().unwrap();
                if lead != 0 {
                    let shift = poly.len() - d;
                    for (k, &c) in coeffs.iter().enumerate().take(d) {
                        let sub = (lead * c) % p;
                        poly[shift + k] = (poly[shift + k] + p - sub) % p;
                    }
                }
            }
            poly.resize(d, 0);
            poly
        };

        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        for i in 0..n {
            let a = digits(i);
            for j in 0..n {
                let b = digits(j);
                let sum: Vec<u64> = a.iter().zip(&b).map(|(x, y)| (x + y) % p).collect();
                add[i * n + j] = index(&sum);
                let mut prod = vec![0u64; 2 * d - 1];
                for (k, &x) in a.iter().enumerate() {
                    if x == 0 {
                        continue;
                    }
                    for (l, &y) in b.iter().enumerate() {
                        prod[k + l] = (prod[k + l] + x * y) % p;
                    }
                }
                mul[i * n + j] = index(&reduce(prod));
            }
        }
        let label = format!("Z{p}[x]/({})", render_poly(coeffs));
        Self::from_tables(label, 0, 1, add, mul)
    }

    /// The trivial extension `F_p ⋉ (F_p)^d`: elements are pairs `(a, v)` with
    /// `(a,v)(b,w) = (ab, aw + bv)`, so the maximal ideal `{(0, v)}` squares
    /// to zero. Label `N(p,d)`; order `p^(d+1)`.
    pub fn null_square(p: u64, d: u32) -> Result<Self, RingError> {
        if !is_prime(p) {
            return Err(RingError::InvalidCharacteristic(p));
        }
        if d == 0 {
            return Err(RingError::InvalidOrder(0));
        }
        let pu = p as usize;
        let pd = pu
            .checked_pow(d)
            .filter(|&m| m.checked_mul(pu).is_some_and(|n| n <= MAX_ORDER))
            .ok_or(RingError::InvalidOrder(usize::MAX))?;
        let n = pd * pu;
        // index = a * p^d + (v as base-p digits)
        let split = |i: usize| (i / pd, i % pd);
        let vadd = |x: usize, y: usize| -> usize {
            let mut out = 0;
            let mut mult = 1;
            let (mut x, mut y) = (x, y);
            for _ in 0..d {
                out += ((x + y) % pu) * mult;
                x /= pu;
                y /= pu;
                mult *= pu;
            }
            out
        };
        let vscale = |s: usize, x: usize| -> usize {
            let mut out = 0;
            let mut mult = 1;
            let mut x = x;
            for _ in 0..d {
                out += ((x % pu) * s % pu) * mult;
                x /= pu;
                mult *= pu;
            }
            out
        };
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        for i in 0..n {
            let (a, v) = split(i);
            for j in 0..n {
                let (b, w) = split(j);
                add[i * n + j] = ((a + b) % pu) * pd + vadd(v, w);
                mul[i * n + j] = (a * b % pu) * pd + vadd(vscale(a, w), vscale(b, v));
            }
        }
        Self::from_tables(format!("N({p},{d})"), 0, pd, add, mul)
    }

    /// The direct product with componentwise operations. Element `(a, b)`
    /// has index `a * other.order() + b`; label `"self x other"`.
    pub fn product(&self, other: &FiniteRing) -> Result<Self, RingError> {
        let (n1, n2) = (self.order, other.order);
        let n = n1
            .checked_mul(n2)
            .filter(|&n| n <= MAX_ORDER)
            .ok_or(RingError::InvalidOrder(usize::MAX))?;
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        for a1 in 0..n1 {
            for b1 in 0..n2 {
                let i = a1 * n2 + b1;
                for a2 in 0..n1 {
                    for b2 in 0..n2 {
                        let j = a2 * n2 + b2;
                        add[i * n + j] = self.add(a1, a2) * n2 + other.add(b1, b2);
                        mul[i * n + j] = self.mul(a1, a2) * n2 + other.mul(b1, b2);
                    }
                }
            }
        }
        Self::from_tables(
            format!("{} x {}", self.label, other.label),
            self.zero * n2 + other.zero,
            self.one * n2 + other.one,
            add,
            mul,
        )
    }

    /// The quotient ring `R/I` on cosets of `I`, given as a sorted element
    /// set. Each coset is represented by its least element. Quotients by the
    /// full ring (the zero ring) are rejected.
    pub fn quotient(&self, ideal: &[usize]) -> Result<Self, RingError> {
        self.check_ideal(ideal)?;
        if ideal.len() == self.order {
            return Err(RingError::ZeroRing);
        }
        // coset representative of x = min over i in I of x + i
        let rep: Vec<usize> = (0..self.order)
            .map(|x| ideal.iter().map(|&i| self.add(x, i)).min().unwrap())
            .collect();
        let mut reps: Vec<usize> = rep.clone();
        reps.sort_unstable();
        reps.dedup();
        let n = reps.len();
        let pos = |x: usize| reps.binary_search(&rep[x]).unwrap();
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        for (i, &x) in reps.iter().enumerate() {
            for (j, &y) in reps.iter().enumerate() {
                add[i * n + j] = pos(self.add(x, y));
                mul[i * n + j] = pos(self.mul(x, y));
            }
        }
        Self::from_tables(
            format!("{}/{}", self.label, fmt_elem_set(ideal)),
            pos(self.zero),
            pos(self.one),
            add,
            mul,
        )
    }

    fn check_ideal(&self, elems: &[usize]) -> Result<(), RingError> {
        let fail = |why: String| {
            Err(RingError::NotAnIdeal(
                fmt_elem_set(elems),
                self.label.clone(),
                why,
            ))
        };
        if elems.windows(2).any(|w| w[0] >= w[1]) || elems.iter().any(|&e| e >= self.order) {
            return fail("element list must be sorted, distinct and in range".into());
        }
        if elems.binary_search(&self.zero).is_err() {
            return fail("does not contain zero".into());
        }
        for &a in elems {
            for &b in elems {
                if elems.binary_search(&self.add(a, b)).is_err() {
                    return fail(format!("not closed under addition ({a} + {b})"));
                }
            }
            for r in 0..self.order {
                if elems.binary_search(&self.mul(r, a)).is_err() {
                    return fail(format!("not closed under multiplication ({r} * {a})"));
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b]
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    /// Additive inverse.
    pub fn neg(&self, a: usize) -> usize {
        (0..self.order).find(|&b| self.add(a, b) == self.zero).unwrap()
    }

    /// `a^k` for `k >= 1`.
    pub fn pow(&self, a: usize, k: usize) -> usize {
        let mut x = a;
        for _ in 1..k {
            x = self.mul(x, a);
        }
        x
    }

    /// True if some power `a^k` with `k <= order` is zero. The cap loses
    /// nothing: powers of an element eventually cycle, and any cycle through
    /// zero is reached within `order` steps.
    pub fn is_nilpotent(&self, a: usize) -> bool {
        let mut x = a;
        for _ in 0..self.order {
            if x == self.zero {
                return true;
            }
            x = self.mul(x, a);
        }
        false
    }

    pub fn is_idempotent(&self, a: usize) -> bool {
        self.mul(a, a) == a
    }

    pub fn is_unit(&self, a: usize) -> bool {
        (0..self.order).any(|b| self.mul(a, b) == self.one)
    }

    /// All idempotents, sorted.
    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.order).filter(|&e| self.is_idempotent(e)).collect()
    }

    /// `Nil(R)`: the set of nilpotent elements. Always an ideal.
    pub fn nilradical(&self) -> ElementSet {
        ElementSet::new(
            &self.label,
            (0..self.order).filter(|&a| self.is_nilpotent(a)).collect(),
        )
    }

    /// `Z(R)`: elements `r` with `rs = 0` for some `s != 0`. Contains zero
    /// whenever the ring has a nonzero element.
    pub fn zero_divisor_set(&self) -> ElementSet {
        let zd = (0..self.order)
            .filter(|&r| {
                (0..self.order).any(|s| s != self.zero && self.mul(r, s) == self.zero)
            })
            .collect();
        ElementSet::new(&self.label, zd)
    }

    /// True iff the ring has no nonzero nilpotents.
    pub fn is_reduced(&self) -> bool {
        (0..self.order).all(|a| a == self.zero || !self.is_nilpotent(a))
    }

    /// True iff `Z(R)` is an ideal. Closure under addition is the whole test:
    /// multiples of zero divisors are zero divisors automatically.
    pub fn is_zr_ideal(&self) -> bool {
        let z = self.zero_divisor_set();
        z.elements()
            .iter()
            .all(|&a| z.elements().iter().all(|&b| z.contains(self.add(a, b))))
    }

    /// True iff the ring has an idempotent other than 0 and 1, i.e. splits
    /// as a direct product of two smaller rings.
    pub fn is_decomposable(&self) -> bool {
        (0..self.order)
            .any(|e| e != self.zero && e != self.one && self.is_idempotent(e))
    }

    /// True iff every nonzero element is a unit.
    pub fn is_field(&self) -> bool {
        (0..self.order).all(|a| a == self.zero || self.is_unit(a))
    }

    /// The factor ring `eR` for an idempotent `e`, with identity `e`.
    /// Together with `(1-e)R` this realizes `R ≅ eR x (1-e)R`.
    pub fn idempotent_factor(&self, e: usize) -> FiniteRing {
        debug_assert!(self.is_idempotent(e));
        let mut elems: Vec<usize> = (0..self.order).map(|r| self.mul(e, r)).collect();
        elems.sort_unstable();
        elems.dedup();
        let n = elems.len();
        let pos = |x: usize| elems.binary_search(&x).unwrap();
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        for (i, &x) in elems.iter().enumerate() {
            for (j, &y) in elems.iter().enumerate() {
                add[i * n + j] = pos(self.add(x, y));
                mul[i * n + j] = pos(self.mul(x, y));
            }
        }
        FiniteRing {
            order: n,
            add,
            mul,
            zero: pos(self.zero),
            one: pos(e),
            label: format!("{}[e={}]", self.label, e),
        }
    }

    /// The complementary idempotent `1 - e`.
    pub fn complement_idempotent(&self, e: usize) -> usize {
        self.add(self.one, self.neg(e))
    }

    fn validate(&self, bound: usize) -> Result<(), RingError> {
        let n = self.order;
        let err = |msg: String| Err(RingError::AxiomViolation(msg));
        if self.add.len() != n * n || self.mul.len() != n * n {
            return err("table size does not match order".into());
        }
        if self.add.iter().chain(self.mul.iter()).any(|&e| e >= n) {
            return err("table entry out of range".into());
        }
        if self.zero >= n || self.one >= n || (n >= 2 && self.zero == self.one) {
            return err("zero/one identities invalid".into());
        }
        for a in 0..n {
            if self.add(a, self.zero) != a {
                return err(format!("{a} + 0 != {a}"));
            }
            if self.mul(a, self.one) != a {
                return err(format!("{a} * 1 != {a}"));
            }
            if (0..n).all(|b| self.add(a, b) != self.zero) {
                return err(format!("{a} has no additive inverse"));
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return err(format!("addition not commutative at ({a},{b})"));
                }
                if self.mul(a, b) != self.mul(b, a) {
                    return err(format!("multiplication not commutative at ({a},{b})"));
                }
            }
        }
        let check_triple = |a: usize, b: usize, c: usize| -> Result<(), RingError> {
            if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                return Err(RingError::AxiomViolation(format!(
                    "addition not associative at ({a},{b},{c})"
                )));
            }
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return Err(RingError::AxiomViolation(format!(
                    "multiplication not associative at ({a},{b},{c})"
                )));
            }
            if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                return Err(RingError::AxiomViolation(format!(
                    "not distributive at ({a},{b},{c})"
                )));
            }
            Ok(())
        };
        if n <= bound {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        check_triple(a, b, c)?;
                    }
                }
            }
        } else {
            // Deterministic sampled scan: 64 n pseudo-random triples.
            let mut state = 0x9e37_79b9_7f4a_7c15u64 ^ (n as u64);
            let mut next = move || {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                (state >> 16) as usize % n
            };
            for _ in 0..64 * n {
                check_triple(next(), next(), next())?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (order {})", self.label, self.order)
    }
}

/// Renders modulus coefficients (ascending, monic) in the grammar's canonical
/// form: descending powers, zero terms omitted, unit coefficients implicit,
/// e.g. `x^2+x+1` or `x^3+2x+2`.
pub(crate) fn render_poly(coeffs: &[u64]) -> String {
    let mut terms = Vec::new();
    for (exp, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let t = match (exp, c) {
            (0, c) => c.to_string(),
            (1, 1) => "x".to_string(),
            (1, c) => format!("{c}x"),
            (e, 1) => format!("x^{e}"),
            (e, c) => format!("{c}x^{e}"),
        };
        terms.push(t);
    }
    terms.join("+")
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: usize) -> FiniteRing {
        FiniteRing::cyclic(n).unwrap()
    }

    fn gf4() -> FiniteRing {
        FiniteRing::poly_quotient(2, &[1, 1, 1]).unwrap()
    }

    #[test]
    fn cyclic_small() {
        let r = z(4);
        assert_eq!(r.mul(2, 2), 0);
        assert_eq!(r.label(), "Z4");
        assert!(FiniteRing::cyclic(1).is_err());
        assert!(FiniteRing::cyclic(0).is_err());
    }

    #[test]
    fn cyclic_nilradical_z16() {
        let r = z(16);
        let nil = r.nilradical();
        assert_eq!(nil.elements(), &[0, 2, 4, 6, 8, 10, 12, 14]);
    }

    #[test]
    fn cyclic_idempotents_z6() {
        // scanned by hand: 0,1 trivial; 3*3=9=3, 4*4=16=4 mod 6
        assert_eq!(z(6).idempotents(), vec![0, 1, 3, 4]);
    }

    #[test]
    fn poly_quotient_field_and_nonfield() {
        let f4 = gf4();
        assert_eq!(f4.order(), 4);
        assert!(f4.is_field());
        assert_eq!(f4.label(), "Z2[x]/(x^2+x+1)");

        let dual = FiniteRing::poly_quotient(2, &[0, 0, 1]).unwrap();
        assert!(!dual.is_field());
        assert_eq!(dual.nilradical().elements(), &[0, 2]); // 0 and x

        let r9 = FiniteRing::poly_quotient(3, &[0, 0, 1]).unwrap();
        assert_eq!(r9.order(), 9);
        assert_eq!(r9.nilradical().len(), 3);
    }

    #[test]
    fn poly_quotient_rejects_bad_input() {
        assert_eq!(
            FiniteRing::poly_quotient(4, &[0, 0, 1]).unwrap_err(),
            RingError::InvalidCharacteristic(4)
        );
        assert!(matches!(
            FiniteRing::poly_quotient(2, &[1]).unwrap_err(),
            RingError::InvalidModulus(_)
        ));
        assert!(matches!(
            FiniteRing::poly_quotient(3, &[0, 0, 2]).unwrap_err(),
            RingError::InvalidModulus(_)
        ));
        assert!(matches!(
            FiniteRing::poly_quotient(2, &[3, 0, 1]).unwrap_err(),
            RingError::InvalidModulus(_)
        ));
    }

    #[test]
    fn product_basic() {
        let r = z(2).product(&z(4)).unwrap();
        assert_eq!(r.order(), 8);
        assert_eq!(r.label(), "Z2 x Z4");
        assert!(r.is_decomposable());
        // nilpotents are (0,0) and (0,2)
        assert_eq!(r.nilradical().elements(), &[0, 2]);
        // Z(R): (a,b) with a = 0 or b in {0,2}
        assert_eq!(r.zero_divisor_set().elements(), &[0, 1, 2, 3, 4, 6]);
    }

    #[test]
    fn null_square_construction() {
        let r = FiniteRing::null_square(2, 1).unwrap();
        assert_eq!(r.order(), 4);
        assert_eq!(r.label(), "N(2,1)");
        // maximal ideal {(0,0),(0,1)} = indices {0,1}; squares to zero
        assert_eq!(r.mul(1, 1), 0);
        assert_eq!(r.one(), 2);

        let r8 = FiniteRing::null_square(2, 2).unwrap();
        assert_eq!(r8.order(), 8);
        for v in 0..4 {
            for w in 0..4 {
                assert_eq!(r8.mul(v, w), 0, "m^2 must vanish");
            }
        }

        let r9 = FiniteRing::null_square(3, 1).unwrap();
        assert_eq!(r9.order(), 9);
        assert_eq!(r9.nilradical().len(), 3);

        assert!(FiniteRing::null_square(6, 1).is_err());
    }

    #[test]
    fn quotient_rings() {
        let r16 = z(16);
        let q = r16.quotient(&[0, 8]).unwrap();
        assert_eq!(q.order(), 8);
        // Z16/8Z16 behaves like Z8: 2 is nilpotent of index 3
        assert!(q.is_nilpotent(2));

        let r4 = z(4);
        let q0 = r4.quotient(&[0]).unwrap();
        assert_eq!(q0.order(), 4);
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(q0.add(a, b), r4.add(a, b));
                assert_eq!(q0.mul(a, b), r4.mul(a, b));
            }
        }

        let r = z(2).product(&z(4)).unwrap();
        // (0) x Z4 = indices {0,1,2,3}
        let q2 = r.quotient(&[0, 1, 2, 3]).unwrap();
        assert_eq!(q2.order(), 2);
        assert!(q2.is_field());

        let full: Vec<usize> = (0..16).collect();
        assert_eq!(r16.quotient(&full).unwrap_err(), RingError::ZeroRing);
        assert!(matches!(
            r16.quotient(&[0, 3]).unwrap_err(),
            RingError::NotAnIdeal(..)
        ));
    }

    #[test]
    fn quotient_by_nilradical_is_reduced() {
        for r in [
            z(16),
            z(12),
            z(2).product(&z(4)).unwrap(),
            FiniteRing::null_square(2, 2).unwrap(),
            FiniteRing::poly_quotient(3, &[0, 0, 1]).unwrap(),
        ] {
            let nil = r.nilradical();
            let q = r.quotient(nil.elements()).unwrap();
            assert!(q.is_reduced(), "{} / Nil not reduced", r.label());
        }
    }

    #[test]
    fn zero_divisors() {
        assert_eq!(z(6).zero_divisor_set().elements(), &[0, 2, 3, 4]);
        assert_eq!(gf4().zero_divisor_set().elements(), &[0]);
    }

    #[test]
    fn reducedness() {
        assert!(z(6).is_reduced());
        assert!(!z(16).is_reduced());
        let z2 = z(2);
        assert!(z2.product(&z2).unwrap().product(&z2).unwrap().is_reduced());
    }

    #[test]
    fn zr_ideal_predicate() {
        assert!(z(16).is_zr_ideal());
        assert!(!z(6).is_zr_ideal());
        assert!(!z(2).product(&z(4)).unwrap().is_zr_ideal());
    }

    #[test]
    fn decomposability() {
        assert!(z(2).product(&z(4)).unwrap().is_decomposable());
        assert!(!z(16).is_decomposable());
        assert!(z(6).is_decomposable());
        // any product of rings of order >= 2 is decomposable
        for (a, b) in [(2, 2), (3, 9), (4, 4), (5, 6)] {
            assert!(z(a).product(&z(b)).unwrap().is_decomposable(), "Z{a} x Z{b}");
        }
    }

    #[test]
    fn field_predicate() {
        assert!(gf4().is_field());
        assert!(!z(4).is_field());
        assert!(z(7).is_field());
    }

    #[test]
    fn nilradical_is_ideal_and_zero_divisors_absorb() {
        for r in [z(16), z(12), z(2).product(&z(4)).unwrap(), gf4()] {
            let nil = r.nilradical();
            for &a in nil.elements() {
                for &b in nil.elements() {
                    assert!(nil.contains(r.add(a, b)));
                }
                for s in r.elements() {
                    assert!(nil.contains(r.mul(s, a)));
                }
            }
            let zd = r.zero_divisor_set();
            for &a in zd.elements() {
                for s in r.elements() {
                    assert!(zd.contains(r.mul(s, a)));
                }
            }
        }
    }

    #[test]
    fn idempotent_factors_split_product() {
        let r = z(6);
        // e = 3: eR = {0,3} is the Z2 part, (1-e)R = {0,2,4} the Z3 part
        let f1 = r.idempotent_factor(3);
        let f2 = r.idempotent_factor(r.complement_idempotent(3));
        assert_eq!(f1.order(), 2);
        assert_eq!(f2.order(), 3);
        assert!(f1.is_field() && f2.is_field());
    }

    #[test]
    fn validation_catches_corruption() {
        let r = z(5);
        let mut mul = r.mul.clone();
        mul[2 * 5 + 3] = 4; // 2*3 = 6 = 1 mod 5, corrupt it
        let got = FiniteRing::from_tables("bad", 0, 1, r.add.clone(), mul);
        assert!(matches!(got, Err(RingError::AxiomViolation(_))));
    }

    #[test]
    fn sampled_validation_above_bound() {
        // order 300 exceeds a bound of 256, so triples are sampled; the
        // constructor must still succeed and a grossly corrupted table fail.
        let n = 300;
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                add[i * n + j] = (i + j) % n;
                mul[i * n + j] = (i * j) % n;
            }
        }
        assert!(FiniteRing::from_tables_with_bound("Z300", 0, 1, add.clone(), mul.clone(), 256)
            .is_ok());
        for j in 0..n {
            mul[7 * n + j] = 0; // wreck an entire row (keeps symmetry broken too)
        }
        assert!(
            FiniteRing::from_tables_with_bound("bad", 0, 1, add, mul, 256).is_err()
        );
    }

    #[test]
    fn render_poly_forms() {
        assert_eq!(render_poly(&[1, 1, 1]), "x^2+x+1");
        assert_eq!(render_poly(&[0, 0, 1]), "x^2");
        assert_eq!(render_poly(&[2, 2, 1]), "x^2+2x+2");
        assert_eq!(render_poly(&[0, 1]), "x");
        assert_eq!(render_poly(&[1, 0, 0, 1]), "x^3+1");
    }
}
