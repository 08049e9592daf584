//! Random generators for randomized testing and sweeps.
//!
//! Scalars are kept small over the rationals (numerators in `[-4, 4]`,
//! denominators in `[1, 3]`) so that products of many of them stay cheap;
//! over a prime field the residues are uniform. Lie automorphisms are
//! drawn from the constructible subgroup generated by unit conjugations,
//! multiplicative scalings, and central diagonal shifts — every such
//! composite preserves commutators, while only some of them are regular
//! Hom-Lie structures, so a batch of draws exercises both verdicts.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::Rng;

use crate::endo::LinearEndo;
use crate::incidence::{IncidenceAlgebra, IncidenceElement};
use crate::scalar::{Field, Scalar};
use crate::structures::{central_map, inner_automorphism, HomLieParams, SigmaTable};

/// A random scalar: a small rational over `Q`, a uniform residue mod `p`.
pub fn random_scalar<R: Rng + ?Sized>(field: Field, rng: &mut R) -> Scalar {
    match field.modulus() {
        None => {
            let num = rng.random_range(-4..=4);
            let den = rng.random_range(1..=3);
            Scalar::rational(num, den).expect("denominator is positive")
        }
        Some(p) => Scalar::from_integer(field, rng.random_range(0..p) as i64),
    }
}

/// A random nonzero scalar.
pub fn random_nonzero_scalar<R: Rng + ?Sized>(field: Field, rng: &mut R) -> Scalar {
    loop {
        let s = random_scalar(field, rng);
        if !s.is_zero() {
            return s;
        }
    }
}

/// A random radical element: each strict pair independently carries a
/// coefficient, roughly half of them zero.
pub fn random_radical_element<R: Rng + ?Sized>(
    algebra: &Arc<IncidenceAlgebra>,
    rng: &mut R,
) -> IncidenceElement {
    let mut entries: Vec<((usize, usize), Scalar)> = Vec::new();
    for &(x, y) in algebra.basis_pairs() {
        if x != y && rng.random_bool(0.5) {
            entries.push(((x, y), random_nonzero_scalar(algebra.field(), rng)));
        }
    }
    IncidenceElement::from_entries(algebra, entries)
}

/// A random element of the radical center.
pub fn random_central_radical<R: Rng + ?Sized>(
    algebra: &Arc<IncidenceAlgebra>,
    rng: &mut R,
) -> IncidenceElement {
    let entries: Vec<((usize, usize), Scalar)> = algebra
        .radical_center_basis()
        .to_vec()
        .into_iter()
        .map(|pair| (pair, random_scalar(algebra.field(), rng)))
        .collect();
    IncidenceElement::from_entries(algebra, entries)
}

/// A random unit `δ + radical`. When `central` is set the radical part is
/// drawn from the radical center, so the induced conjugation is a regular
/// Hom-Lie structure.
pub fn random_unit<R: Rng + ?Sized>(
    algebra: &Arc<IncidenceAlgebra>,
    central: bool,
    rng: &mut R,
) -> IncidenceElement {
    let radical = if central {
        random_central_radical(algebra, rng)
    } else {
        random_radical_element(algebra, rng)
    };
    &IncidenceElement::identity(algebra) + &radical
}

/// A random scaling admissible for regular Hom-Lie structures: nonzero
/// values on the free support only.
pub fn random_admissible_sigma<R: Rng + ?Sized>(
    algebra: &Arc<IncidenceAlgebra>,
    rng: &mut R,
) -> SigmaTable {
    let entries: Vec<((usize, usize), Scalar)> =
        crate::structures::free_sigma_support(algebra.poset())
            .into_iter()
            .map(|pair| (pair, random_nonzero_scalar(algebra.field(), rng)))
            .collect();
    SigmaTable::homlie_admissible(algebra, entries).expect("free-support values are admissible")
}

/// A random multiplicative scaling: the coboundary `σ(x, y) = t(x)/t(y)`
/// of a random nonzero weight `t`, combined with random values on the
/// free support. Often not admissible (that is the point: it exercises
/// the rejecting paths), but always a Lie automorphism.
pub fn random_multiplicative_sigma<R: Rng + ?Sized>(
    algebra: &Arc<IncidenceAlgebra>,
    rng: &mut R,
) -> SigmaTable {
    let poset = algebra.poset();
    let t: Vec<Scalar> = (0..poset.len())
        .map(|_| random_nonzero_scalar(algebra.field(), rng))
        .collect();
    let entries: Vec<((usize, usize), Scalar)> = poset
        .strict_pairs()
        .into_iter()
        .map(|(x, y)| ((x, y), t[x].div(&t[y]).expect("weights are nonzero")))
        .collect();
    let coboundary =
        SigmaTable::multiplicative(algebra, entries).expect("coboundaries are multiplicative");
    coboundary.hadamard(&random_admissible_sigma(algebra, rng))
}

/// A random diagonal shift vector with `1 + Σα ≠ 0`.
pub fn random_valid_alpha<R: Rng + ?Sized>(
    algebra: &Arc<IncidenceAlgebra>,
    rng: &mut R,
) -> BTreeMap<usize, Scalar> {
    let field = algebra.field();
    loop {
        let mut alpha: BTreeMap<usize, Scalar> = BTreeMap::new();
        for x in 0..algebra.poset().len() {
            if rng.random_bool(0.5) {
                alpha.insert(x, random_scalar(field, rng));
            }
        }
        let total = alpha
            .values()
            .fold(Scalar::one(field), |acc, v| &acc + v);
        if !total.is_zero() {
            return alpha;
        }
    }
}

/// A random valid parameter triple.
pub fn random_params<R: Rng + ?Sized>(
    algebra: &Arc<IncidenceAlgebra>,
    rng: &mut R,
) -> HomLieParams {
    let beta: Vec<((usize, usize), Scalar)> = algebra
        .radical_center_basis()
        .to_vec()
        .into_iter()
        .map(|pair| (pair, random_scalar(algebra.field(), rng)))
        .collect();
    let sigma = random_admissible_sigma(algebra, rng);
    HomLieParams::new(algebra, beta, sigma, random_valid_alpha(algebra, rng))
        .expect("components drawn from the valid ranges")
}

/// A random Lie automorphism `ξ_b ∘ M_σ ∘ (id + ν)`: a unit conjugation,
/// a multiplicative scaling, and a central diagonal shift. Each factor
/// preserves commutators, so the composite always does; whether it is a
/// regular Hom-Lie structure depends on the draw (central `b`, admissible
/// `σ`), giving a mixture of accepting and rejecting cases.
pub fn random_lie_automorphism<R: Rng + ?Sized>(
    algebra: &Arc<IncidenceAlgebra>,
    rng: &mut R,
) -> LinearEndo {
    let b = random_unit(algebra, rng.random_bool(0.5), rng);
    let xi = inner_automorphism(&b).expect("b has unit diagonal");
    let sigma = if rng.random_bool(0.5) {
        random_admissible_sigma(algebra, rng)
    } else {
        random_multiplicative_sigma(algebra, rng)
    };
    let shift = LinearEndo::identity(algebra)
        .add(&central_map(algebra, &random_valid_alpha(algebra, rng)));
    xi.compose(&sigma.automorphism()).compose(&shift)
}
