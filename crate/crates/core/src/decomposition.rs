//! Ordinal-sum decomposition of finite integral chains.
//!
//! A cut splits the sorted nonunit elements into a lower and an upper part.
//! It is valid when both parts (with the unit) are closed under the
//! operations and every cross product and division follows the ordinal-sum
//! rules. Cutting at all valid positions at once yields the sum-irreducible
//! components.

use thiserror::Error;

use crate::algebra::{is_isomorphic, Elem, ElemSet, FinAlg};
use crate::classops::generate_subalgebra;
use crate::congruence::{quotient, radical};
use crate::term::{builtin, satisfies};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DecompositionError {
    #[error("expected an integral chain")]
    NotIntegralChain,
    #[error("expected a bounded Wajsberg chain")]
    NotWajsbergChain,
}

#[derive(Clone, Debug)]
pub struct ChainDecomposition {
    /// Components bottom to top. The lowest keeps the parent's zero.
    pub components: Vec<FinAlg>,
    /// Valid cut positions over the sorted nonunit elements.
    pub cuts: Vec<usize>,
    /// Parent elements of each component, unit excluded, ascending.
    pub blocks: Vec<Vec<Elem>>,
}

impl ChainDecomposition {
    pub fn index(&self) -> usize {
        self.components.len()
    }
}

fn nonunits(alg: &FinAlg) -> Result<Vec<Elem>, DecompositionError> {
    if !alg.is_integral() || !alg.is_chain() {
        return Err(DecompositionError::NotIntegralChain);
    }
    Ok(alg
        .linear_extension()
        .into_iter()
        .filter(|&a| a != alg.unit())
        .collect())
}

fn cut_is_valid(alg: &FinAlg, lower: &[Elem], upper: &[Elem]) -> bool {
    let u = alg.unit();
    let ops: [fn(&FinAlg, Elem, Elem) -> Elem; 3] = [FinAlg::prod, FinAlg::ldiv, FinAlg::rdiv];
    let closed = |part: &[Elem]| {
        let inside = |v: Elem| v == u || part.contains(&v);
        part.iter().all(|&a| {
            part.iter()
                .all(|&b| ops.iter().all(|op| inside(op(alg, a, b))))
        })
    };
    closed(lower)
        && closed(upper)
        && lower.iter().all(|&x| {
            upper.iter().all(|&y| {
                alg.prod(x, y) == x
                    && alg.prod(y, x) == x
                    && alg.ldiv(y, x) == x
                    && alg.rdiv(x, y) == x
                    && alg.ldiv(x, y) == u
                    && alg.rdiv(y, x) == u
            })
        })
}

/// Cut positions `j` (1 ≤ j ≤ |A|−2) where the split below the `j`-th
/// nonunit element is valid.
pub fn valid_cuts(alg: &FinAlg) -> Result<Vec<usize>, DecompositionError> {
    let sorted = nonunits(alg)?;
    Ok((1..sorted.len())
        .filter(|&j| cut_is_valid(alg, &sorted[..j], &sorted[j..]))
        .collect())
}

pub fn sum_decompose(alg: &FinAlg) -> Result<ChainDecomposition, DecompositionError> {
    let sorted = nonunits(alg)?;
    let cuts = valid_cuts(alg)?;
    let mut bounds = vec![0];
    bounds.extend(&cuts);
    bounds.push(sorted.len());
    let hoop = alg.without_zero();
    let mut components = Vec::new();
    let mut blocks = Vec::new();
    for (i, w) in bounds.windows(2).enumerate() {
        let block = sorted[w[0]..w[1]].to_vec();
        let set = ElemSet::from_members(alg.size(), block.iter().copied().chain([alg.unit()]));
        let mut comp = hoop.restrict(&set).expect("valid cuts give closed parts");
        if i == 0 && alg.zero().is_some() {
            comp = comp.with_zero();
        }
        components.push(comp);
        blocks.push(block);
    }
    Ok(ChainDecomposition {
        components,
        cuts,
        blocks,
    })
}

/// Number of sum-irreducible components; the trivial chain has index 1.
pub fn index(alg: &FinAlg) -> Result<usize, DecompositionError> {
    Ok(sum_decompose(alg)?.index())
}

pub fn is_wajsberg(alg: &FinAlg) -> bool {
    builtin("wajsberg", &[])
        .expect("registry name")
        .iter()
        .all(|s| satisfies(alg, s).expect("zero-free").holds)
}

fn wajsberg_chain(alg: &FinAlg) -> Result<(), DecompositionError> {
    if alg.zero().is_none() || !alg.is_chain() || !alg.is_integral() || !is_wajsberg(alg) {
        return Err(DecompositionError::NotWajsbergChain);
    }
    Ok(())
}

/// `n` with `A/Rad(A) ≅ Łₙ`.
pub fn rank(alg: &FinAlg) -> Result<usize, DecompositionError> {
    wajsberg_chain(alg)?;
    let rad = radical(alg).expect("bounded");
    let q = quotient(alg, &rad).expect("radical is a congruence filter");
    Ok(q.size() - 1)
}

/// Largest `k` such that `Łₖ` embeds in `A` (zero included in the
/// signature). An embedded `Łₖ` is generated by the image of its coatom,
/// so one-generated subalgebras suffice.
pub fn divisibility_index(alg: &FinAlg) -> Result<usize, DecompositionError> {
    wajsberg_chain(alg)?;
    Ok(alg
        .elements()
        .filter_map(|a| {
            let sub = alg.restrict(&generate_subalgebra(alg, &[a]))?;
            let k = sub.size() - 1;
            let l = crate::builders::lukasiewicz(k.max(1)).ok()?;
            (k >= 1 && is_isomorphic(&sub, &l).is_some()).then_some(k)
        })
        .max()
        .unwrap_or(0))
}

/// Same index and pairwise isomorphic components.
pub fn chains_equivalent(a: &FinAlg, b: &FinAlg) -> Result<bool, DecompositionError> {
    let da = sum_decompose(a)?;
    let db = sum_decompose(b)?;
    Ok(da.index() == db.index()
        && da
            .components
            .iter()
            .zip(&db.components)
            .all(|(x, y)| is_isomorphic(x, y).is_some()))
}

/// Verdicts of `λ₁ … λ_max` as printed.
pub fn lambda_verdicts(alg: &FinAlg, max: usize) -> Vec<bool> {
    (1..=max)
        .map(|n| {
            builtin("lambda", &[n])
                .expect("n ≥ 1")
                .iter()
                .all(|s| satisfies(alg, s).expect("zero-free").holds)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{godel, lukasiewicz, ordinal_sum, trivial, two};

    #[test]
    fn cuts_of_basic_chains() {
        assert_eq!(valid_cuts(&godel(3)).unwrap(), vec![1, 2]);
        assert!(valid_cuts(&lukasiewicz(4).unwrap()).unwrap().is_empty());
        assert!(valid_cuts(&trivial()).unwrap().is_empty());
    }

    #[test]
    fn round_trip() {
        let parts = [lukasiewicz(2).unwrap(), two(), lukasiewicz(3).unwrap()];
        let sum = ordinal_sum(&parts).unwrap();
        let d = sum_decompose(&sum).unwrap();
        assert_eq!(d.index(), 3);
        for (c, p) in d.components.iter().zip(&parts[..1]) {
            assert!(is_isomorphic(c, p).is_some());
        }
        for (c, p) in d.components.iter().zip(&parts).skip(1) {
            assert!(is_isomorphic(c, &p.without_zero()).is_some());
        }
        assert!(is_isomorphic(&ordinal_sum(&d.components).unwrap(), &sum).is_some());
    }

    #[test]
    fn indices() {
        for k in 1..5 {
            assert_eq!(index(&godel(k)).unwrap(), k);
            assert_eq!(index(&lukasiewicz(k).unwrap()).unwrap(), 1);
        }
        let sq = crate::builders::direct_product(&two(), &two());
        assert_eq!(index(&sq), Err(DecompositionError::NotIntegralChain));
    }

    #[test]
    fn rank_and_divisibility() {
        for n in 1..7 {
            let l = lukasiewicz(n).unwrap();
            assert_eq!(rank(&l).unwrap(), n);
            assert_eq!(divisibility_index(&l).unwrap(), n);
        }
        assert!(rank(&godel(2)).is_err());
    }

    #[test]
    fn equivalence() {
        let a = ordinal_sum(&[two(), lukasiewicz(2).unwrap()]).unwrap();
        let b = ordinal_sum(&[lukasiewicz(2).unwrap(), two()]).unwrap();
        assert!(!chains_equivalent(&a, &b).unwrap());
        assert!(chains_equivalent(&godel(2), &ordinal_sum(&[two(), two()]).unwrap()).unwrap());
        assert!(!chains_equivalent(&lukasiewicz(2).unwrap(), &lukasiewicz(3).unwrap()).unwrap());
    }

    #[test]
    fn lambda_one_on_godel_two_fails() {
        assert!(!lambda_verdicts(&godel(2), 1)[0]);
    }
}
