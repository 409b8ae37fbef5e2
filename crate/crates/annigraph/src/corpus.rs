//! Exhaustive corpus generation: every ring of the configured families up to
//! a maximum order, in a canonical deterministic order.
//!
//! Atoms are the single-constructor families (cyclic, polynomial quotients
//! with monic moduli of degree >= 2, null-square extensions); the products
//! family contributes every ordered sequence of two or three atoms whose
//! total order fits. Labels are unique by construction, and rings that are
//! isomorphic but labelled differently (`Z6` and `Z2 x Z3`) are kept both.

use std::collections::BTreeSet;

use crate::ring::{is_prime, FiniteRing, RingError};
use crate::ringspec::RingSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Family {
    Cyclic,
    PolyQuot,
    NullSquare,
    Products,
}

impl Family {
    pub const ALL: [Family; 4] =
        [Family::Cyclic, Family::PolyQuot, Family::NullSquare, Family::Products];

    fn rank_of(spec: &RingSpec) -> usize {
        match spec {
            RingSpec::Cyclic(_) => 0,
            RingSpec::PolyQuot(..) => 1,
            RingSpec::NullSquare(..) => 2,
            RingSpec::Product(_) => 3,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CorpusConfig {
    pub max_order: u64,
    pub families: BTreeSet<Family>,
    pub max_poly_degree: u32,
}

impl CorpusConfig {
    /// All families up to `max_order`, polynomial degree capped at 5.
    pub fn all(max_order: u64) -> Self {
        CorpusConfig {
            max_order,
            families: Family::ALL.into_iter().collect(),
            max_poly_degree: 5,
        }
    }

    pub fn with_families(max_order: u64, families: &[Family]) -> Self {
        CorpusConfig {
            max_order,
            families: families.iter().copied().collect(),
            max_poly_degree: 5,
        }
    }
}

/// Deterministic list of ring specifications: atoms of the enabled families
/// plus, when enabled, all ordered 2- and 3-atom products, sorted by
/// (order, family, label). A corpus for a smaller `max_order` is a prefix of
/// the corpus for a larger one.
pub fn generate_specs(cfg: &CorpusConfig) -> Vec<RingSpec> {
    assert!(cfg.max_order >= 2, "max_order must be at least 2");
    let mut atoms: Vec<RingSpec> = Vec::new();
    if cfg.families.contains(&Family::Cyclic) {
        for n in 2..=cfg.max_order {
            atoms.push(RingSpec::Cyclic(n));
        }
    }
    if cfg.families.contains(&Family::PolyQuot) {
        for p in (2..=cfg.max_order).filter(|&p| is_prime(p)) {
            for d in 2..=cfg.max_poly_degree {
                let Some(order) = p.checked_pow(d) else { break };
                if order > cfg.max_order {
                    break;
                }
                // all monic moduli of degree d: count through the lower coefficients
                let count = order; // p^d combinations
                for k in 0..count {
                    let mut coeffs = vec![0u64; d as usize + 1];
                    let mut rem = k;
                    for c in coeffs.iter_mut().take(d as usize) {
                        *c = rem % p;
                        rem /= p;
                    }
                    coeffs[d as usize] = 1;
                    atoms.push(RingSpec::PolyQuot(p, coeffs));
                }
            }
        }
    }
    if cfg.families.contains(&Family::NullSquare) {
        for p in (2..=cfg.max_order).filter(|&p| is_prime(p)) {
            for d in 1..=30u32 {
                let Some(order) = p.checked_pow(d + 1) else { break };
                if order > cfg.max_order {
                    break;
                }
                atoms.push(RingSpec::NullSquare(p, d));
            }
        }
    }

    let mut specs = atoms.clone();
    if cfg.families.contains(&Family::Products) {
        for a in &atoms {
            let oa = a.order();
            for b in &atoms {
                let ab = oa * b.order();
                if ab > cfg.max_order {
                    continue;
                }
                specs.push(RingSpec::Product(vec![a.clone(), b.clone()]));
                for c in &atoms {
                    if ab * c.order() <= cfg.max_order {
                        specs.push(RingSpec::Product(vec![a.clone(), b.clone(), c.clone()]));
                    }
                }
            }
        }
    }

    specs.sort_by(|x, y| {
        (x.order(), Family::rank_of(x), x.render()).cmp(&(
            y.order(),
            Family::rank_of(y),
            y.render(),
        ))
    });
    specs
}

/// Builds every ring in the generated corpus.
pub fn generate_corpus(cfg: &CorpusConfig) -> Result<Vec<FiniteRing>, RingError> {
    generate_specs(cfg).iter().map(RingSpec::build).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn cyclic_only_count() {
        let cfg = CorpusConfig::with_families(8, &[Family::Cyclic]);
        let specs = generate_specs(&cfg);
        let labels: Vec<String> = specs.iter().map(RingSpec::render).collect();
        assert_eq!(labels, vec!["Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8"]);
    }

    #[test]
    fn minimal_corpus_is_z2() {
        let specs = generate_specs(&CorpusConfig::all(2));
        assert_eq!(specs, vec![RingSpec::Cyclic(2)]);
    }

    #[test]
    fn order_8_all_families() {
        let specs = generate_specs(&CorpusConfig::all(8));
        let labels: HashSet<String> = specs.iter().map(RingSpec::render).collect();
        assert!(labels.contains("Z2 x Z4"));
        assert!(labels.contains("Z2[x]/(x^3)"));
        assert!(labels.contains("N(2,2)"));
        assert!(labels.contains("Z2 x Z2 x Z2"));
        assert_eq!(labels.len(), specs.len(), "duplicate labels");
        assert_eq!(specs.len(), 37);
    }

    #[test]
    fn corpora_are_prefix_monotone() {
        let small = generate_specs(&CorpusConfig::all(8));
        let large = generate_specs(&CorpusConfig::all(16));
        assert_eq!(&large[..small.len()], &small[..]);
    }

    #[test]
    fn deterministic_generation() {
        let a = generate_specs(&CorpusConfig::all(16));
        let b = generate_specs(&CorpusConfig::all(16));
        assert_eq!(a, b);
    }

    #[test]
    fn all_specs_build_with_matching_order_and_label() {
        for spec in generate_specs(&CorpusConfig::all(12)) {
            let ring = spec.build().unwrap();
            assert_eq!(ring.order() as u64, spec.order(), "{}", spec.render());
            assert_eq!(ring.label(), spec.render());
        }
    }
}
