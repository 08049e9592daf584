//! Building blocks of regular Hom-Lie structures and their parameters.
//!
//! Three families of linear maps generate everything this crate decides:
//!
//! * multiplicative automorphisms `M_σ` ([`SigmaTable::automorphism`]),
//!   acting entrywise by a cocycle table `σ`;
//! * inner automorphisms `ξ_b : f ↦ b f b⁻¹` ([`inner_automorphism`]) for
//!   units `b`;
//! * central maps `ν` ([`central_map`]) sending each diagonal idempotent
//!   `e_x` to `α_x·δ` and annihilating the radical.
//!
//! A [`HomLieParams`] value packages one valid parameter triple
//! `(β, σ, α)`: radical-center coefficients for the unit `b = δ + β`, a
//! cocycle table supported on [`free_sigma_support`], and a diagonal shift
//! vector with `1 + Σ α ≠ 0`. [`HomLieParams::build`] produces the
//! endomorphism `ξ_b ∘ M_σ + ν`, which is always a regular Hom-Lie
//! structure, and every regular Hom-Lie structure that is also a Lie
//! automorphism arises this way from exactly one triple. The triples form
//! a group under [`HomLieParams::compose`] / [`HomLieParams::invert`],
//! mirroring composition of the built endomorphisms.

use std::collections::BTreeMap;
use std::sync::Arc;

use thiserror::Error;

use crate::endo::LinearEndo;
use crate::incidence::{AlgebraError, IncidenceAlgebra, IncidenceElement};
use crate::poset::Poset;
use crate::scalar::Scalar;
use crate::ParseError;

/// Violations of the parameter invariants.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamsError {
    /// A beta coefficient sits outside the radical-center basis.
    #[error("beta entry at ({x}, {y}) is outside the radical center")]
    BetaOutsideCenter { x: usize, y: usize },
    /// A sigma value differs from 1 outside the free support.
    #[error("sigma entry at ({x}, {y}) is outside the free support")]
    SigmaOutsideFreeSupport { x: usize, y: usize },
    /// Sigma values must be invertible.
    #[error("sigma value at ({x}, {y}) is zero")]
    ZeroSigmaValue { x: usize, y: usize },
    /// A scaling table that violates the cocycle identity.
    #[error("the scaling table violates the cocycle identity")]
    NotMultiplicative,
    /// `1 + Σ alpha = 0` would make the built endomorphism singular.
    #[error("alpha values sum to -1, so the built endomorphism is singular")]
    AlphaSumDegenerate,
}

/// The strict pairs on which a cocycle table vanishing off `Min × Max` may
/// still differ from 1: pairs `(x, y)` with `x` minimal, `y` maximal and
/// `y` covering `x`.
///
/// On every other strict pair the value is forced to 1: off `Min × Max`
/// by definition, and on a non-cover pair `x < y` of `Min × Max` by the
/// cocycle identity through any intermediate `x < z < y` (where both
/// factors are already 1 because `z` is neither minimal nor maximal
/// enough).
pub fn free_sigma_support(poset: &Poset) -> Vec<(usize, usize)> {
    poset
        .covers()
        .iter()
        .copied()
        .filter(|&(x, y)| poset.is_minimal(x) && poset.is_maximal(y))
        .collect()
}

fn is_free_pair(poset: &Poset, x: usize, y: usize) -> bool {
    poset.is_cover(x, y) && poset.is_minimal(x) && poset.is_maximal(y)
}

/// A multiplicative scaling table `σ : {x < y} → K*`.
///
/// Values are stored sparsely: a missing pair means `σ(x, y) = 1`. Every
/// constructor guarantees the cocycle identity
/// `σ(x, z) = σ(x, y) · σ(y, z)` for `x ≤ y ≤ z`, so a `SigmaTable` always
/// induces a multiplicative automorphism via [`SigmaTable::automorphism`].
#[derive(Debug, Clone)]
pub struct SigmaTable {
    algebra: Arc<IncidenceAlgebra>,
    /// Values different from 1, keyed by strict pairs.
    values: BTreeMap<(usize, usize), Scalar>,
}

impl PartialEq for SigmaTable {
    fn eq(&self, other: &Self) -> bool {
        self.algebra.same_context(&other.algebra) && self.values == other.values
    }
}

impl Eq for SigmaTable {}

impl SigmaTable {
    /// The all-ones table.
    pub fn identity(algebra: &Arc<IncidenceAlgebra>) -> SigmaTable {
        SigmaTable {
            algebra: Arc::clone(algebra),
            values: BTreeMap::new(),
        }
    }

    /// Builds a table supported on [`free_sigma_support`]. Such tables
    /// satisfy the cocycle identity automatically: a free pair `(x, y)`
    /// admits no factorization `x < z < y` (it is a cover) and appears in
    /// no larger interval (`x` minimal, `y` maximal), so no cocycle
    /// constraint mentions two of them at once.
    pub fn homlie_admissible(
        algebra: &Arc<IncidenceAlgebra>,
        entries: impl IntoIterator<Item = ((usize, usize), Scalar)>,
    ) -> Result<SigmaTable, ParamsError> {
        let mut values = BTreeMap::new();
        for ((x, y), c) in entries {
            if !is_free_pair(algebra.poset(), x, y) {
                return Err(ParamsError::SigmaOutsideFreeSupport { x, y });
            }
            if c.is_zero() {
                return Err(ParamsError::ZeroSigmaValue { x, y });
            }
            assert!(
                c.field() == algebra.field(),
                "sigma value field mismatch: {} vs {}",
                c.field(),
                algebra.field()
            );
            if !c.is_one() {
                values.insert((x, y), c);
            }
        }
        Ok(SigmaTable {
            algebra: Arc::clone(algebra),
            values,
        })
    }

    /// Builds a general multiplicative table from values on strict pairs
    /// (missing pairs default to 1). Fails with
    /// [`ParamsError::NotMultiplicative`] when the cocycle identity does
    /// not hold.
    ///
    /// # Panics
    ///
    /// Panics when an entry's pair is not strictly comparable or its value
    /// is from the wrong field.
    pub fn multiplicative(
        algebra: &Arc<IncidenceAlgebra>,
        entries: impl IntoIterator<Item = ((usize, usize), Scalar)>,
    ) -> Result<SigmaTable, ParamsError> {
        let mut values = BTreeMap::new();
        for ((x, y), c) in entries {
            assert!(
                algebra.poset().lt(x, y),
                "({x}, {y}) is not a strict pair"
            );
            assert!(
                c.field() == algebra.field(),
                "sigma value field mismatch: {} vs {}",
                c.field(),
                algebra.field()
            );
            if c.is_zero() {
                return Err(ParamsError::ZeroSigmaValue { x, y });
            }
            if !c.is_one() {
                values.insert((x, y), c);
            }
        }
        let table = SigmaTable {
            algebra: Arc::clone(algebra),
            values,
        };
        if !table.to_element().is_multiplicative() {
            return Err(ParamsError::NotMultiplicative);
        }
        Ok(table)
    }

    /// The shared context of this table.
    pub fn algebra(&self) -> &Arc<IncidenceAlgebra> {
        &self.algebra
    }

    /// The value `σ(x, y)` on a strict pair (1 when not stored).
    ///
    /// # Panics
    ///
    /// Panics unless `x < y` in the poset.
    pub fn value(&self, x: usize, y: usize) -> Scalar {
        assert!(self.algebra.poset().lt(x, y), "({x}, {y}) is not a strict pair");
        self.values
            .get(&(x, y))
            .cloned()
            .unwrap_or_else(|| Scalar::one(self.algebra.field()))
    }

    /// Iterates the stored values different from 1.
    pub fn support(&self) -> impl Iterator<Item = (&(usize, usize), &Scalar)> {
        self.values.iter()
    }

    /// `true` when every stored value sits on the free support, i.e. the
    /// table is admissible for Hom-Lie parameters.
    pub fn is_homlie_admissible(&self) -> bool {
        self.values
            .keys()
            .all(|&(x, y)| is_free_pair(self.algebra.poset(), x, y))
    }

    /// The pointwise product `σ ∗ τ`. Multiplicativity is preserved, so no
    /// revalidation happens.
    pub fn hadamard(&self, other: &SigmaTable) -> SigmaTable {
        assert!(
            self.algebra.same_context(&other.algebra),
            "incidence-algebra context mismatch"
        );
        let mut values = BTreeMap::new();
        for &pair in self.values.keys().chain(other.values.keys()) {
            let prod = self.value(pair.0, pair.1) * other.value(pair.0, pair.1);
            if !prod.is_one() {
                values.insert(pair, prod);
            }
        }
        SigmaTable {
            algebra: Arc::clone(&self.algebra),
            values,
        }
    }

    /// The pointwise inverse table.
    pub fn inverse(&self) -> SigmaTable {
        let values = self
            .values
            .iter()
            .map(|(&pair, c)| (pair, c.inv().expect("sigma values are nonzero")))
            .collect();
        SigmaTable {
            algebra: Arc::clone(&self.algebra),
            values,
        }
    }

    /// The table as an incidence element with full support: the stored
    /// values on strict pairs, 1 on every other comparable pair.
    pub fn to_element(&self) -> IncidenceElement {
        let one = Scalar::one(self.algebra.field());
        let entries = self
            .algebra
            .basis_pairs()
            .iter()
            .map(|&(x, y)| {
                let c = if x == y {
                    one.clone()
                } else {
                    self.value(x, y)
                };
                ((x, y), c)
            })
            .collect::<Vec<_>>();
        IncidenceElement::from_entries(&self.algebra, entries)
    }

    /// The multiplicative automorphism `M_σ`: `e_xy ↦ σ(x, y)·e_xy` on
    /// strict pairs, identity on the diagonal.
    pub fn automorphism(&self) -> LinearEndo {
        let columns: Vec<IncidenceElement> = self
            .algebra
            .basis_pairs()
            .iter()
            .map(|&(x, y)| {
                let e = IncidenceElement::basis_element(&self.algebra, x, y);
                if x == y {
                    e
                } else {
                    e.scale(&self.value(x, y))
                }
            })
            .collect();
        LinearEndo::from_columns(&self.algebra, &columns)
    }
}

/// The inner automorphism `ξ_b : f ↦ b f b⁻¹` of a unit `b`. Fails with
/// [`AlgebraError::NotAUnit`] when `b` has a zero diagonal coefficient.
pub fn inner_automorphism(b: &IncidenceElement) -> Result<LinearEndo, AlgebraError> {
    let algebra = Arc::clone(b.algebra());
    let b_inv = b.invert_unit()?;
    let columns: Vec<IncidenceElement> = algebra
        .basis_pairs()
        .iter()
        .map(|&(x, y)| {
            let e = IncidenceElement::basis_element(&algebra, x, y);
            &(b * &e) * &b_inv
        })
        .collect();
    Ok(LinearEndo::from_columns(&algebra, &columns))
}

/// The central map `ν` with `ν(e_x) = alpha(x)·δ` and `ν(e_xy) = 0` for
/// `x < y`. Not invertible on its own; used as the summand of
/// [`HomLieParams::build`].
pub fn central_map(
    algebra: &Arc<IncidenceAlgebra>,
    alpha: &BTreeMap<usize, Scalar>,
) -> LinearEndo {
    let n = algebra.poset().len();
    let delta = IncidenceElement::identity(algebra);
    let columns: Vec<IncidenceElement> = algebra
        .basis_pairs()
        .iter()
        .map(|&(x, y)| {
            if x == y {
                match alpha.get(&x) {
                    Some(c) => delta.scale(c),
                    None => IncidenceElement::zero(algebra),
                }
            } else {
                IncidenceElement::zero(algebra)
            }
        })
        .collect();
    for &x in alpha.keys() {
        assert!(x < n, "alpha index {x} out of range");
    }
    LinearEndo::from_columns(algebra, &columns)
}

/// A validated parameter triple `(β, σ, α)` of a regular Hom-Lie
/// structure:
///
/// * `beta` — coefficients of the radical part of the conjugating unit
///   `b = δ + Σ β(x,y)·e_xy`, supported on the radical-center basis;
/// * `sigma` — a scaling table supported on [`free_sigma_support`];
/// * `alpha` — the diagonal shift vector of the central summand, with
///   `1 + Σ alpha ≠ 0`.
///
/// [`HomLieParams::build`] turns a triple into the endomorphism
/// `ξ_b ∘ M_σ + ν`; the correspondence is one-to-one. (An equivalent
/// convention stores the full diagonal coefficient vector `c` with
/// `c_i = alpha(x_i) + [i = 1]`; then the validity condition reads
/// `Σ c_i ≠ 0`.)
#[derive(Debug, Clone)]
pub struct HomLieParams {
    algebra: Arc<IncidenceAlgebra>,
    beta: BTreeMap<(usize, usize), Scalar>,
    sigma: SigmaTable,
    alpha: BTreeMap<usize, Scalar>,
}

impl PartialEq for HomLieParams {
    fn eq(&self, other: &Self) -> bool {
        self.algebra.same_context(&other.algebra)
            && self.beta == other.beta
            && self.sigma == other.sigma
            && self.alpha == other.alpha
    }
}

impl Eq for HomLieParams {}

impl HomLieParams {
    /// Validates and normalizes a parameter triple. Zero beta and alpha
    /// entries are dropped; the errors report the first violated
    /// invariant.
    pub fn new(
        algebra: &Arc<IncidenceAlgebra>,
        beta: impl IntoIterator<Item = ((usize, usize), Scalar)>,
        sigma: SigmaTable,
        alpha: impl IntoIterator<Item = (usize, Scalar)>,
    ) -> Result<HomLieParams, ParamsError> {
        assert!(
            algebra.same_context(sigma.algebra()),
            "sigma context mismatch"
        );
        let mut beta_map = BTreeMap::new();
        for ((x, y), c) in beta {
            if !algebra.in_radical_center(x, y) {
                return Err(ParamsError::BetaOutsideCenter { x, y });
            }
            assert!(
                c.field() == algebra.field(),
                "beta value field mismatch: {} vs {}",
                c.field(),
                algebra.field()
            );
            if !c.is_zero() {
                beta_map.insert((x, y), c);
            }
        }
        if let Some(&(x, y)) = sigma.values.keys().find(|&&(x, y)| {
            !is_free_pair(algebra.poset(), x, y)
        }) {
            return Err(ParamsError::SigmaOutsideFreeSupport { x, y });
        }
        let n = algebra.poset().len();
        let mut alpha_map = BTreeMap::new();
        let mut sum = Scalar::one(algebra.field());
        for (x, c) in alpha {
            assert!(x < n, "alpha index {x} out of range");
            assert!(
                c.field() == algebra.field(),
                "alpha value field mismatch: {} vs {}",
                c.field(),
                algebra.field()
            );
            if !c.is_zero() {
                sum = &sum + &c;
                alpha_map.insert(x, c);
            }
        }
        if sum.is_zero() {
            return Err(ParamsError::AlphaSumDegenerate);
        }
        Ok(HomLieParams {
            algebra: Arc::clone(algebra),
            beta: beta_map,
            sigma,
            alpha: alpha_map,
        })
    }

    /// The identity parameters: empty beta, all-ones sigma, zero alpha.
    pub fn trivial(algebra: &Arc<IncidenceAlgebra>) -> HomLieParams {
        HomLieParams {
            algebra: Arc::clone(algebra),
            beta: BTreeMap::new(),
            sigma: SigmaTable::identity(algebra),
            alpha: BTreeMap::new(),
        }
    }

    /// The shared context of these parameters.
    pub fn algebra(&self) -> &Arc<IncidenceAlgebra> {
        &self.algebra
    }

    /// The nonzero beta coefficients on radical-center pairs.
    pub fn beta(&self) -> &BTreeMap<(usize, usize), Scalar> {
        &self.beta
    }

    /// The scaling table.
    pub fn sigma(&self) -> &SigmaTable {
        &self.sigma
    }

    /// The nonzero alpha values.
    pub fn alpha(&self) -> &BTreeMap<usize, Scalar> {
        &self.alpha
    }

    /// The alpha value at `x` (zero when not stored).
    pub fn alpha_at(&self, x: usize) -> Scalar {
        self.alpha
            .get(&x)
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.algebra.field()))
    }

    /// The conjugating unit `b = δ + Σ beta(x,y)·e_xy`.
    pub fn beta_element(&self) -> IncidenceElement {
        let delta = IncidenceElement::identity(&self.algebra);
        let radical = IncidenceElement::from_entries(
            &self.algebra,
            self.beta.iter().map(|(&pair, c)| (pair, c.clone())),
        );
        &delta + &radical
    }

    /// `1 + Σ alpha`, the determinant contribution of the diagonal block.
    fn diagonal_factor(&self) -> Scalar {
        let mut sum = Scalar::one(self.algebra.field());
        for c in self.alpha.values() {
            sum = &sum + c;
        }
        sum
    }

    /// Builds the endomorphism `ξ_b ∘ M_σ + ν`.
    ///
    /// The columns are assembled directly: `e_xy ↦ σ(x,y)·e_xy` on strict
    /// pairs (conjugation by `δ + β` fixes the radical because `β`
    /// annihilates it), and
    /// `e_x ↦ e_x + alpha(x)·δ + β e_x − e_x β` on the diagonal. The result
    /// is always bijective — its determinant is
    /// `(1 + Σ alpha) · Π σ(x,y) ≠ 0` — and always a Lie automorphism and
    /// a regular Hom-Lie structure.
    pub fn build(&self) -> LinearEndo {
        let alg = &self.algebra;
        let columns: Vec<IncidenceElement> = alg
            .basis_pairs()
            .iter()
            .map(|&(x, y)| {
                if x != y {
                    let e = IncidenceElement::basis_element(alg, x, y);
                    if is_free_pair(alg.poset(), x, y) {
                        e.scale(&self.sigma.value(x, y))
                    } else {
                        e
                    }
                } else {
                    let mut img = IncidenceElement::basis_element(alg, x, x);
                    if let Some(a) = self.alpha.get(&x) {
                        img = &img + &IncidenceElement::identity(alg).scale(a);
                    }
                    // β e_x − e_x β over the radical-center entries.
                    for (&(u, v), c) in &self.beta {
                        if v == x {
                            img = &img
                                + &IncidenceElement::basis_element(alg, u, v).scale(c);
                        }
                        if u == x {
                            img = &img
                                - &IncidenceElement::basis_element(alg, u, v).scale(c);
                        }
                    }
                    img
                }
            })
            .collect();
        LinearEndo::from_columns(alg, &columns)
    }

    /// The parameters of the composite: `compose(p, q).build()` equals
    /// `p.build() ∘ q.build()` (apply `q` first).
    pub fn compose(&self, other: &HomLieParams) -> HomLieParams {
        assert!(
            self.algebra.same_context(&other.algebra),
            "incidence-algebra context mismatch"
        );
        let mut beta = BTreeMap::new();
        for &pair in self.beta.keys().chain(other.beta.keys()) {
            let second = match other.beta.get(&pair) {
                Some(c) => &self.sigma.value(pair.0, pair.1) * c,
                None => Scalar::zero(self.algebra.field()),
            };
            let sum = match self.beta.get(&pair) {
                Some(c) => c + &second,
                None => second,
            };
            if !sum.is_zero() {
                beta.insert(pair, sum);
            }
        }
        let sigma = self.sigma.hadamard(&other.sigma);
        // ν = ν₁ + ν₂ + ν₁∘ν₂ on the diagonal:
        // alpha(x) = alpha₁(x) + alpha₂(x)·(1 + Σ alpha₁).
        let factor = self.diagonal_factor();
        let mut alpha = BTreeMap::new();
        for &x in self.alpha.keys().chain(other.alpha.keys()) {
            let sum = &self.alpha_at(x) + &(&other.alpha_at(x) * &factor);
            if !sum.is_zero() {
                alpha.insert(x, sum);
            }
        }
        let out = HomLieParams {
            algebra: Arc::clone(&self.algebra),
            beta,
            sigma,
            alpha,
        };
        // (1 + Σ alpha') = (1 + Σ alpha₁)(1 + Σ alpha₂) ≠ 0.
        debug_assert!(!out.diagonal_factor().is_zero());
        out
    }

    /// The parameters of the inverse endomorphism:
    /// `p.invert().build()` equals `p.build().invert()`.
    pub fn invert(&self) -> HomLieParams {
        let sigma = self.sigma.inverse();
        let beta = self
            .beta
            .iter()
            .map(|(&(x, y), c)| {
                let s_inv = self.sigma.value(x, y).inv().expect("sigma values are nonzero");
                ((x, y), -&(c * &s_inv))
            })
            .collect();
        let factor_inv = self
            .diagonal_factor()
            .inv()
            .expect("1 + Σ alpha is nonzero for valid parameters");
        let alpha = self
            .alpha
            .iter()
            .map(|(&x, c)| (x, -&(c * &factor_inv)))
            .collect();
        HomLieParams {
            algebra: Arc::clone(&self.algebra),
            beta,
            sigma,
            alpha,
        }
    }

    /// Renders the `.hlp` text format: `[beta]`, `[sigma]`, `[alpha]`
    /// sections with the nonzero entries in canonical order.
    pub fn to_text(&self) -> String {
        let poset = self.algebra.poset();
        let mut out = String::from("[beta]\n");
        for (&(x, y), c) in &self.beta {
            out.push_str(&format!("{} {} {}\n", poset.label(x), poset.label(y), c));
        }
        out.push_str("[sigma]\n");
        for (&(x, y), c) in self.sigma.support() {
            out.push_str(&format!("{} {} {}\n", poset.label(x), poset.label(y), c));
        }
        out.push_str("[alpha]\n");
        for (&x, c) in &self.alpha {
            out.push_str(&format!("{} {}\n", poset.label(x), c));
        }
        out
    }

    /// Parses the `.hlp` text format against the given context. The file
    /// holds up to one `[beta]`, one `[sigma]` and one `[alpha]` section
    /// (missing sections are empty); entries are `x y coeff` lines for
    /// beta and sigma and `x coeff` lines for alpha. Every invariant is
    /// enforced and the first violation is reported with its line.
    pub fn parse(
        algebra: &Arc<IncidenceAlgebra>,
        text: &str,
    ) -> Result<HomLieParams, ParseError> {
        #[derive(Clone, Copy, PartialEq)]
        enum Section {
            None,
            Beta,
            Sigma,
            Alpha,
        }
        let poset = algebra.poset();
        let mut section = Section::None;
        let mut seen = [false; 3];
        let mut beta: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
        let mut sigma_entries: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
        let mut alpha: BTreeMap<usize, Scalar> = BTreeMap::new();
        let mut alpha_line = 1usize;
        let lookup = |lineno: usize, token: &str| {
            poset
                .index_of(token)
                .ok_or_else(|| ParseError::new(lineno, format!("unknown label {token:?}")))
        };
        for (lineno, raw) in text.lines().enumerate() {
            let lineno = lineno + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let new_section = match line {
                "[beta]" => Some((Section::Beta, 0)),
                "[sigma]" => Some((Section::Sigma, 1)),
                "[alpha]" => Some((Section::Alpha, 2)),
                _ => None,
            };
            if let Some((s, idx)) = new_section {
                if seen[idx] {
                    return Err(ParseError::new(lineno, format!("duplicate section {line}")));
                }
                seen[idx] = true;
                section = s;
                if s == Section::Alpha {
                    alpha_line = lineno;
                }
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match section {
                Section::None => {
                    return Err(ParseError::new(
                        lineno,
                        format!("entry {line:?} appears before any section header"),
                    ));
                }
                Section::Beta | Section::Sigma => {
                    let [x, y, coeff] = tokens.as_slice() else {
                        return Err(ParseError::new(
                            lineno,
                            format!("expected `x y coeff`, got {line:?}"),
                        ));
                    };
                    let xi = lookup(lineno, x)?;
                    let yi = lookup(lineno, y)?;
                    let c = Scalar::parse(algebra.field(), coeff)
                        .map_err(|e| ParseError::new(lineno, e.to_string()))?;
                    if section == Section::Beta {
                        if !algebra.in_radical_center(xi, yi) {
                            return Err(ParseError::new(
                                lineno,
                                format!(
                                    "({x}, {y}) is not a radical-center pair (minimal < maximal)"
                                ),
                            ));
                        }
                        if beta.insert((xi, yi), c).is_some() {
                            return Err(ParseError::new(
                                lineno,
                                format!("duplicate beta entry at ({x}, {y})"),
                            ));
                        }
                    } else {
                        if !is_free_pair(poset, xi, yi) {
                            return Err(ParseError::new(
                                lineno,
                                format!("({x}, {y}) is not a free sigma pair"),
                            ));
                        }
                        if c.is_zero() {
                            return Err(ParseError::new(
                                lineno,
                                format!("sigma value at ({x}, {y}) is zero"),
                            ));
                        }
                        if sigma_entries.insert((xi, yi), c).is_some() {
                            return Err(ParseError::new(
                                lineno,
                                format!("duplicate sigma entry at ({x}, {y})"),
                            ));
                        }
                    }
                }
                Section::Alpha => {
                    let [x, coeff] = tokens.as_slice() else {
                        return Err(ParseError::new(
                            lineno,
                            format!("expected `x coeff`, got {line:?}"),
                        ));
                    };
                    let xi = lookup(lineno, x)?;
                    let c = Scalar::parse(algebra.field(), coeff)
                        .map_err(|e| ParseError::new(lineno, e.to_string()))?;
                    if alpha.insert(xi, c).is_some() {
                        return Err(ParseError::new(
                            lineno,
                            format!("duplicate alpha entry at {x}"),
                        ));
                    }
                }
            }
        }
        let sigma = SigmaTable::homlie_admissible(algebra, sigma_entries)
            .expect("sigma entries validated per line");
        match HomLieParams::new(algebra, beta, sigma, alpha) {
            Ok(params) => Ok(params),
            Err(ParamsError::AlphaSumDegenerate) => Err(ParseError::new(
                alpha_line,
                "alpha values sum to -1, so the built endomorphism is singular",
            )),
            Err(other) => unreachable!("entry invariants validated per line: {other}"),
        }
    }
}
