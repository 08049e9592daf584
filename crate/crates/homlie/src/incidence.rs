//! The incidence algebra `I(X, K)` of a finite connected poset.
//!
//! The algebra has one basis element `e_xy` per comparable pair `x ≤ y`,
//! with product `e_xy · e_uv = e_xv` when `y = u` and zero otherwise; the
//! identity is `δ = Σ_x e_xx`. Basis slots are ordered by
//! `(interval length, x, y)`, so the diagonal block comes first and every
//! structural map is block-triangular with respect to the radical
//! filtration.
//!
//! [`IncidenceAlgebra`] is the shared context (poset, field, basis
//! bookkeeping, and the precomputed commutators of basis pairs);
//! [`IncidenceElement`] is a sparse element keyed by comparable pairs.
//! Elements of the radical (strictly upper part) are nilpotent, which makes
//! every element with invertible diagonal a unit; [`IncidenceElement::invert_unit`]
//! inverts by a finite geometric series.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use thiserror::Error;

use crate::poset::Poset;
use crate::scalar::{Field, Scalar};
use crate::ParseError;

/// Errors from incidence-algebra construction and arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    /// The algebra requires a connected poset with at least two elements.
    #[error("invalid poset for the incidence algebra: {0}")]
    InvalidPoset(String),
    /// Unit inversion was asked of an element with a zero diagonal
    /// coefficient.
    #[error("element is not a unit: zero diagonal coefficient at {label:?}")]
    NotAUnit { label: String },
    /// The zero element has no radical level.
    #[error("the zero element has no radical level")]
    ZeroElement,
}

/// Shared context for elements and endomorphisms: the poset, the field,
/// the canonical basis order, and precomputed basis-pair commutators.
///
/// Constructed once per `(poset, field)` pair and shared behind an [`Arc`];
/// all element operations require both operands to use the same context.
#[derive(Debug)]
pub struct IncidenceAlgebra {
    poset: Arc<Poset>,
    field: Field,
    /// Comparable pairs in canonical order: by interval length, then the
    /// pair itself.
    basis: Vec<(usize, usize)>,
    /// `n × n` lookup from pair to basis slot; `usize::MAX` marks
    /// incomparable pairs.
    slot_of: Vec<usize>,
    /// Interval length per basis slot.
    levels: Vec<usize>,
    /// Basis pairs spanning the center of the radical: `x < y` with `x`
    /// minimal and `y` maximal, in canonical order.
    radical_center: Vec<(usize, usize)>,
    /// `brackets[i * dim + j]` lists the terms of `[e_i, e_j]` as
    /// `(slot, positive)`; at most two entries.
    brackets: Vec<Vec<(usize, bool)>>,
}

impl IncidenceAlgebra {
    /// Builds the incidence algebra of `poset` over `field`.
    ///
    /// Fails with [`AlgebraError::InvalidPoset`] unless the poset is
    /// connected with at least two elements, the standing assumption of
    /// every structural result in this crate.
    pub fn new(poset: Arc<Poset>, field: Field) -> Result<Arc<IncidenceAlgebra>, AlgebraError> {
        if poset.len() < 2 {
            return Err(AlgebraError::InvalidPoset(format!(
                "need at least two elements, got {}",
                poset.len()
            )));
        }
        if !poset.is_connected() {
            return Err(AlgebraError::InvalidPoset("poset is not connected".into()));
        }
        let n = poset.len();
        let mut basis: Vec<(usize, usize)> = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if poset.leq(x, y) {
                    basis.push((x, y));
                }
            }
        }
        basis.sort_by_key(|&(x, y)| (poset.interval_length(x, y).unwrap(), x, y));
        let dim = basis.len();
        let mut slot_of = vec![usize::MAX; n * n];
        let mut levels = vec![0usize; dim];
        for (slot, &(x, y)) in basis.iter().enumerate() {
            slot_of[x * n + y] = slot;
            levels[slot] = poset.interval_length(x, y).unwrap();
        }
        let radical_center: Vec<(usize, usize)> = basis
            .iter()
            .copied()
            .filter(|&(x, y)| x != y && poset.is_minimal(x) && poset.is_maximal(y))
            .collect();

        // [e_xy, e_uv] = [y = u] e_xv - [v = x] e_uy.
        let mut brackets = vec![Vec::new(); dim * dim];
        for (i, &(x, y)) in basis.iter().enumerate() {
            for (j, &(u, v)) in basis.iter().enumerate() {
                let mut terms: Vec<(usize, bool)> = Vec::new();
                if y == u {
                    terms.push((slot_of[x * n + v], true));
                }
                if v == x {
                    let slot = slot_of[u * n + y];
                    if let Some(pos) = terms.iter().position(|&(s, _)| s == slot) {
                        terms.remove(pos); // e_xv and e_uy coincide: terms cancel
                    } else {
                        terms.push((slot, false));
                    }
                }
                brackets[i * dim + j] = terms;
            }
        }

        Ok(Arc::new(IncidenceAlgebra {
            poset,
            field,
            basis,
            slot_of,
            levels,
            radical_center,
            brackets,
        }))
    }

    /// The underlying poset.
    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    /// Shared handle to the underlying poset.
    pub fn poset_arc(&self) -> Arc<Poset> {
        Arc::clone(&self.poset)
    }

    /// The coefficient field.
    pub fn field(&self) -> Field {
        self.field
    }

    /// Dimension of the algebra: the number of comparable pairs.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Basis pairs in canonical order.
    pub fn basis_pairs(&self) -> &[(usize, usize)] {
        &self.basis
    }

    /// Basis slot of the pair `(x, y)`, if comparable.
    pub fn slot(&self, x: usize, y: usize) -> Option<usize> {
        let v = self.slot_of[x * self.poset.len() + y];
        (v != usize::MAX).then_some(v)
    }

    /// Pair stored at a basis slot.
    pub fn pair_at(&self, slot: usize) -> (usize, usize) {
        self.basis[slot]
    }

    /// Interval length of the pair at a basis slot.
    pub fn level(&self, slot: usize) -> usize {
        self.levels[slot]
    }

    /// Basis of the center of the radical: the pairs `x < y` with `x`
    /// minimal and `y` maximal. These span both the center and the
    /// two-sided annihilator of the radical.
    pub fn radical_center_basis(&self) -> &[(usize, usize)] {
        &self.radical_center
    }

    /// `true` when `(x, y)` is a radical-center basis pair.
    pub fn in_radical_center(&self, x: usize, y: usize) -> bool {
        self.poset.lt(x, y) && self.poset.is_minimal(x) && self.poset.is_maximal(y)
    }

    /// The terms of the commutator `[e_i, e_j]` of two basis slots, as
    /// `(slot, positive)` pairs. At most two terms.
    pub fn bracket_terms(&self, i: usize, j: usize) -> &[(usize, bool)] {
        &self.brackets[i * self.basis.len() + j]
    }

    /// `true` when the two contexts agree (same poset, same field).
    pub fn same_context(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other)
            || (self.field == other.field && *self.poset == *other.poset)
    }
}

/// An element of the incidence algebra, stored sparsely as a map from
/// comparable pairs to nonzero coefficients.
///
/// The zero coefficients are never stored, so structural equality of the
/// maps is exact element equality. Binary operators panic when the two
/// operands belong to different contexts.
#[derive(Debug, Clone)]
pub struct IncidenceElement {
    algebra: Arc<IncidenceAlgebra>,
    coeffs: BTreeMap<(usize, usize), Scalar>,
}

impl PartialEq for IncidenceElement {
    fn eq(&self, other: &Self) -> bool {
        self.algebra.same_context(&other.algebra) && self.coeffs == other.coeffs
    }
}

impl Eq for IncidenceElement {}

impl IncidenceElement {
    /// The zero element.
    pub fn zero(algebra: &Arc<IncidenceAlgebra>) -> IncidenceElement {
        IncidenceElement {
            algebra: Arc::clone(algebra),
            coeffs: BTreeMap::new(),
        }
    }

    /// The identity `δ = Σ_x e_xx`.
    pub fn identity(algebra: &Arc<IncidenceAlgebra>) -> IncidenceElement {
        let one = Scalar::one(algebra.field());
        let coeffs = (0..algebra.poset().len())
            .map(|x| ((x, x), one.clone()))
            .collect();
        IncidenceElement {
            algebra: Arc::clone(algebra),
            coeffs,
        }
    }

    /// The basis element `e_xy`.
    ///
    /// # Panics
    ///
    /// Panics unless `x ≤ y` in the poset.
    pub fn basis_element(algebra: &Arc<IncidenceAlgebra>, x: usize, y: usize) -> IncidenceElement {
        assert!(
            algebra.poset().leq(x, y),
            "({x}, {y}) is not a comparable pair"
        );
        let mut coeffs = BTreeMap::new();
        coeffs.insert((x, y), Scalar::one(algebra.field()));
        IncidenceElement {
            algebra: Arc::clone(algebra),
            coeffs,
        }
    }

    /// Builds an element from `(pair, coefficient)` entries; repeated pairs
    /// accumulate, zeros are dropped.
    ///
    /// # Panics
    ///
    /// Panics on incomparable pairs or coefficients from the wrong field.
    pub fn from_entries(
        algebra: &Arc<IncidenceAlgebra>,
        entries: impl IntoIterator<Item = ((usize, usize), Scalar)>,
    ) -> IncidenceElement {
        let mut out = IncidenceElement::zero(algebra);
        for ((x, y), c) in entries {
            assert!(
                algebra.poset().leq(x, y),
                "({x}, {y}) is not a comparable pair"
            );
            assert!(
                c.field() == algebra.field(),
                "coefficient field mismatch: {} vs {}",
                c.field(),
                algebra.field()
            );
            out.add_at((x, y), &c);
        }
        out
    }

    /// The shared context of this element.
    pub fn algebra(&self) -> &Arc<IncidenceAlgebra> {
        &self.algebra
    }

    /// The coefficient at `(x, y)` (zero when absent).
    pub fn coeff(&self, x: usize, y: usize) -> Scalar {
        self.coeffs
            .get(&(x, y))
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.algebra.field()))
    }

    /// Iterates the nonzero entries in canonical pair order.
    pub fn support(&self) -> impl Iterator<Item = (&(usize, usize), &Scalar)> {
        self.coeffs.iter()
    }

    /// Number of nonzero entries.
    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    /// `true` for the zero element.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub(crate) fn from_map(
        algebra: &Arc<IncidenceAlgebra>,
        coeffs: BTreeMap<(usize, usize), Scalar>,
    ) -> IncidenceElement {
        debug_assert!(coeffs.values().all(|c| !c.is_zero()));
        IncidenceElement {
            algebra: Arc::clone(algebra),
            coeffs,
        }
    }

    /// Adds `c` into the coefficient at `pair`, keeping the map free of
    /// zeros.
    fn add_at(&mut self, pair: (usize, usize), c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(pair) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = &*e.get() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn assert_same_context(&self, other: &IncidenceElement) {
        assert!(
            self.algebra.same_context(&other.algebra),
            "incidence-algebra context mismatch"
        );
    }

    /// Multiplies by a scalar.
    pub fn scale(&self, s: &Scalar) -> IncidenceElement {
        if s.is_zero() {
            return IncidenceElement::zero(&self.algebra);
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|(&pair, c)| (pair, c * s))
            .collect();
        IncidenceElement {
            algebra: Arc::clone(&self.algebra),
            coeffs,
        }
    }

    /// The commutator `[self, other] = self·other − other·self`.
    pub fn commutator(&self, other: &IncidenceElement) -> IncidenceElement {
        &(self * other) - &(other * self)
    }

    /// The entrywise (Hadamard) product: `(self ∗ other)(x, y) =
    /// self(x, y) · other(x, y)`.
    pub fn hadamard(&self, other: &IncidenceElement) -> IncidenceElement {
        self.assert_same_context(other);
        let mut coeffs = BTreeMap::new();
        for (&pair, a) in &self.coeffs {
            if let Some(b) = other.coeffs.get(&pair) {
                let prod = a * b;
                if !prod.is_zero() {
                    coeffs.insert(pair, prod);
                }
            }
        }
        IncidenceElement {
            algebra: Arc::clone(&self.algebra),
            coeffs,
        }
    }

    /// Splits into the diagonal part and the strictly radical part;
    /// the element is their sum and the split is unique.
    pub fn dj_split(&self) -> (IncidenceElement, IncidenceElement) {
        let mut diag = IncidenceElement::zero(&self.algebra);
        let mut rad = IncidenceElement::zero(&self.algebra);
        for (&(x, y), c) in &self.coeffs {
            if x == y {
                diag.coeffs.insert((x, y), c.clone());
            } else {
                rad.coeffs.insert((x, y), c.clone());
            }
        }
        (diag, rad)
    }

    /// `true` when every diagonal coefficient is nonzero, i.e. the element
    /// is invertible.
    pub fn is_unit(&self) -> bool {
        (0..self.algebra.poset().len()).all(|x| self.coeffs.contains_key(&(x, x)))
    }

    /// Inverts a unit.
    ///
    /// Writes `f = f_D (δ + n)` with `n = f_D⁻¹ f_J` strictly radical, so
    /// `f⁻¹ = (Σ_k (−n)^k) f_D⁻¹`; the series stops at the poset length
    /// because the radical is nilpotent. Fails with
    /// [`AlgebraError::NotAUnit`] when some diagonal coefficient vanishes.
    pub fn invert_unit(&self) -> Result<IncidenceElement, AlgebraError> {
        let poset = self.algebra.poset();
        for x in 0..poset.len() {
            if !self.coeffs.contains_key(&(x, x)) {
                return Err(AlgebraError::NotAUnit {
                    label: poset.label(x).to_string(),
                });
            }
        }
        let (diag, rad) = self.dj_split();
        let mut diag_inv = IncidenceElement::zero(&self.algebra);
        for (&pair, c) in &diag.coeffs {
            diag_inv
                .coeffs
                .insert(pair, c.inv().expect("diagonal coefficients checked nonzero"));
        }
        let n = &diag_inv * &rad;
        // (δ + n)⁻¹ = δ − n + n² − …, truncated by nilpotency.
        let mut series = IncidenceElement::identity(&self.algebra);
        let mut power = IncidenceElement::identity(&self.algebra);
        for _ in 0..poset.length() {
            power = -&(&power * &n);
            if power.is_zero() {
                break;
            }
            series = &series + &power;
        }
        Ok(&series * &diag_inv)
    }

    /// The radical level: the smallest interval length over the support.
    /// Fails with [`AlgebraError::ZeroElement`] on the zero element.
    pub fn radical_level(&self) -> Result<usize, AlgebraError> {
        let poset = self.algebra.poset();
        self.coeffs
            .keys()
            .map(|&(x, y)| poset.interval_length(x, y).unwrap())
            .min()
            .ok_or(AlgebraError::ZeroElement)
    }

    /// `true` when the element is multiplicative: full nonzero support on
    /// all comparable pairs, with `s(x, z) = s(x, y) · s(y, z)` whenever
    /// `x ≤ y ≤ z`.
    pub fn is_multiplicative(&self) -> bool {
        let poset = self.algebra.poset();
        let n = poset.len();
        for x in 0..n {
            for y in 0..n {
                if poset.leq(x, y) && !self.coeffs.contains_key(&(x, y)) {
                    return false;
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                if !poset.leq(x, y) {
                    continue;
                }
                for z in 0..n {
                    if !poset.leq(y, z) {
                        continue;
                    }
                    let lhs = &self.coeffs[&(x, z)];
                    let rhs = &self.coeffs[&(x, y)] * &self.coeffs[&(y, z)];
                    if *lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Renders the `.ielem` text format: one `x y coeff` line per nonzero
    /// entry, in canonical basis order.
    pub fn to_text(&self) -> String {
        let poset = self.algebra.poset();
        let mut out = String::new();
        for &(x, y) in self.algebra.basis_pairs() {
            if let Some(c) = self.coeffs.get(&(x, y)) {
                out.push_str(&format!("{} {} {}\n", poset.label(x), poset.label(y), c));
            }
        }
        out
    }

    /// Parses the `.ielem` text format against the given context. Each
    /// non-comment line is either `x y coeff` (adding `coeff · e_xy`) or
    /// the shorthand `delta` (adding the identity). Repeated pairs
    /// accumulate.
    pub fn parse(
        algebra: &Arc<IncidenceAlgebra>,
        text: &str,
    ) -> Result<IncidenceElement, ParseError> {
        let poset = algebra.poset();
        let mut out = IncidenceElement::zero(algebra);
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let lineno = lineno + 1;
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens.as_slice() {
                ["delta"] => {
                    out = &out + &IncidenceElement::identity(algebra);
                }
                [x, y, coeff] => {
                    let xi = poset
                        .index_of(x)
                        .ok_or_else(|| ParseError::new(lineno, format!("unknown label {x:?}")))?;
                    let yi = poset
                        .index_of(y)
                        .ok_or_else(|| ParseError::new(lineno, format!("unknown label {y:?}")))?;
                    if !poset.leq(xi, yi) {
                        return Err(ParseError::new(
                            lineno,
                            format!("({x}, {y}) is not a comparable pair"),
                        ));
                    }
                    let c = Scalar::parse(algebra.field(), coeff)
                        .map_err(|e| ParseError::new(lineno, e.to_string()))?;
                    out.add_at((xi, yi), &c);
                }
                _ => {
                    return Err(ParseError::new(
                        lineno,
                        format!("expected `x y coeff` or `delta`, got {line:?}"),
                    ))
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for IncidenceElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let poset = self.algebra.poset();
        let mut first = true;
        for &(x, y) in self.algebra.basis_pairs() {
            if let Some(c) = self.coeffs.get(&(x, y)) {
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                write!(f, "{}·e[{},{}]", c, poset.label(x), poset.label(y))?;
            }
        }
        Ok(())
    }
}

impl Add for &IncidenceElement {
    type Output = IncidenceElement;

    fn add(self, rhs: &IncidenceElement) -> IncidenceElement {
        self.assert_same_context(rhs);
        let mut out = self.clone();
        for (&pair, c) in &rhs.coeffs {
            out.add_at(pair, c);
        }
        out
    }
}

impl Sub for &IncidenceElement {
    type Output = IncidenceElement;

    fn sub(self, rhs: &IncidenceElement) -> IncidenceElement {
        self.assert_same_context(rhs);
        let mut out = self.clone();
        for (&pair, c) in &rhs.coeffs {
            out.add_at(pair, &-c);
        }
        out
    }
}

impl Neg for &IncidenceElement {
    type Output = IncidenceElement;

    fn neg(self) -> IncidenceElement {
        let coeffs = self.coeffs.iter().map(|(&pair, c)| (pair, -c)).collect();
        IncidenceElement {
            algebra: Arc::clone(&self.algebra),
            coeffs,
        }
    }
}

impl Mul for &IncidenceElement {
    type Output = IncidenceElement;

    /// The incidence-algebra product: `e_xy · e_uv = [y = u] e_xv`,
    /// extended bilinearly.
    fn mul(self, rhs: &IncidenceElement) -> IncidenceElement {
        self.assert_same_context(rhs);
        let mut out = IncidenceElement::zero(&self.algebra);
        for (&(x, z), a) in &self.coeffs {
            for (&(_, y), b) in rhs.coeffs.range((z, 0)..=(z, usize::MAX)) {
                out.add_at((x, y), &(a * b));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain_algebra(n: usize, field: Field) -> Arc<IncidenceAlgebra> {
        let covers: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        let poset = Arc::new(Poset::from_cover_indices(n, &covers).unwrap());
        IncidenceAlgebra::new(poset, field).unwrap()
    }

    fn q() -> Field {
        Field::rationals()
    }

    fn e(alg: &Arc<IncidenceAlgebra>, x: usize, y: usize) -> IncidenceElement {
        IncidenceElement::basis_element(alg, x, y)
    }

    #[test]
    fn rejects_small_or_disconnected_posets() {
        let singleton = Arc::new(Poset::from_cover_indices(1, &[]).unwrap());
        assert!(matches!(
            IncidenceAlgebra::new(singleton, q()),
            Err(AlgebraError::InvalidPoset(_))
        ));
        let antichain = Arc::new(Poset::from_cover_indices(2, &[]).unwrap());
        assert!(matches!(
            IncidenceAlgebra::new(antichain, q()),
            Err(AlgebraError::InvalidPoset(_))
        ));
    }

    #[test]
    fn basis_order_is_by_level_then_pair() {
        let alg = chain_algebra(3, q());
        assert_eq!(alg.dim(), 6);
        assert_eq!(
            alg.basis_pairs(),
            &[(0, 0), (1, 1), (2, 2), (0, 1), (1, 2), (0, 2)]
        );
        assert_eq!(alg.level(0), 0);
        assert_eq!(alg.level(3), 1);
        assert_eq!(alg.level(5), 2);
        assert_eq!(alg.slot(0, 2), Some(5));
        assert_eq!(alg.slot(2, 0), None);
    }

    #[test]
    fn product_follows_the_matrix_unit_rule() {
        let alg = chain_algebra(3, q());
        // e_01 · e_12 = e_02; the other order is zero.
        assert_eq!(&e(&alg, 0, 1) * &e(&alg, 1, 2), e(&alg, 0, 2));
        assert!((&e(&alg, 1, 2) * &e(&alg, 0, 1)).is_zero());
        // Diagonal idempotents select rows and columns.
        assert_eq!(&e(&alg, 0, 0) * &e(&alg, 0, 1), e(&alg, 0, 1));
        assert_eq!(&e(&alg, 0, 1) * &e(&alg, 1, 1), e(&alg, 0, 1));
        assert!((&e(&alg, 0, 1) * &e(&alg, 0, 0)).is_zero());
        // δ is the two-sided identity.
        let delta = IncidenceElement::identity(&alg);
        let f = IncidenceElement::from_entries(
            &alg,
            [
                ((0, 0), Scalar::from_integer(q(), 3)),
                ((0, 2), Scalar::rational(1, 2).unwrap()),
                ((1, 2), Scalar::from_integer(q(), -1)),
            ],
        );
        assert_eq!(&delta * &f, f);
        assert_eq!(&f * &delta, f);
    }

    #[test]
    fn product_is_associative_on_a_spread_of_elements() {
        let alg = chain_algebra(4, q());
        let f = IncidenceElement::from_entries(
            &alg,
            [
                ((0, 1), Scalar::from_integer(q(), 2)),
                ((1, 3), Scalar::rational(1, 3).unwrap()),
                ((2, 2), Scalar::from_integer(q(), -1)),
            ],
        );
        let g = IncidenceElement::from_entries(
            &alg,
            [
                ((1, 2), Scalar::from_integer(q(), 5)),
                ((0, 0), Scalar::from_integer(q(), 1)),
                ((2, 3), Scalar::rational(-2, 7).unwrap()),
            ],
        );
        let h = IncidenceElement::from_entries(
            &alg,
            [
                ((2, 3), Scalar::from_integer(q(), 4)),
                ((3, 3), Scalar::rational(1, 2).unwrap()),
            ],
        );
        assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
    }

    #[test]
    fn addition_drops_cancelled_entries() {
        let alg = chain_algebra(3, q());
        let f = e(&alg, 0, 1);
        let g = -&f;
        assert!((&f + &g).is_zero());
        assert_eq!((&f - &f).support_len(), 0);
    }

    #[test]
    fn dj_split_is_the_unique_diagonal_radical_decomposition() {
        let alg = chain_algebra(3, q());
        let f = IncidenceElement::from_entries(
            &alg,
            [
                ((0, 0), Scalar::from_integer(q(), 2)),
                ((1, 1), Scalar::from_integer(q(), 3)),
                ((0, 2), Scalar::from_integer(q(), 7)),
            ],
        );
        let (d, j) = f.dj_split();
        assert_eq!(&d + &j, f);
        assert!(d.support().all(|(&(x, y), _)| x == y));
        assert!(j.support().all(|(&(x, y), _)| x != y));
    }

    #[test]
    fn commutator_is_antisymmetric_and_satisfies_jacobi() {
        let alg = chain_algebra(4, q());
        let f = IncidenceElement::from_entries(
            &alg,
            [
                ((0, 1), Scalar::from_integer(q(), 1)),
                ((1, 1), Scalar::from_integer(q(), 2)),
            ],
        );
        let g = IncidenceElement::from_entries(
            &alg,
            [
                ((1, 2), Scalar::from_integer(q(), 3)),
                ((0, 3), Scalar::from_integer(q(), -1)),
            ],
        );
        let h = IncidenceElement::from_entries(
            &alg,
            [
                ((2, 3), Scalar::rational(1, 2).unwrap()),
                ((0, 0), Scalar::from_integer(q(), 5)),
            ],
        );
        assert_eq!(f.commutator(&g), -&g.commutator(&f));
        let jacobi = &(&f.commutator(&g).commutator(&h) + &g.commutator(&h).commutator(&f))
            + &h.commutator(&f).commutator(&g);
        assert!(jacobi.is_zero());
    }

    #[test]
    fn unit_inversion_on_the_three_chain() {
        let alg = chain_algebra(3, q());
        // (δ + e_01 + e_12)⁻¹ = δ − e_01 − e_12 + e_02.
        let delta = IncidenceElement::identity(&alg);
        let f = &(&delta + &e(&alg, 0, 1)) + &e(&alg, 1, 2);
        let inv = f.invert_unit().unwrap();
        let expected = &(&(&delta - &e(&alg, 0, 1)) - &e(&alg, 1, 2)) + &e(&alg, 0, 2);
        assert_eq!(inv, expected);
        assert_eq!(&f * &inv, delta);
        assert_eq!(&inv * &f, delta);
    }

    #[test]
    fn unit_inversion_handles_general_diagonals() {
        let alg = chain_algebra(4, q());
        let f = IncidenceElement::from_entries(
            &alg,
            [
                ((0, 0), Scalar::from_integer(q(), 2)),
                ((1, 1), Scalar::rational(1, 3).unwrap()),
                ((2, 2), Scalar::from_integer(q(), -1)),
                ((3, 3), Scalar::from_integer(q(), 5)),
                ((0, 1), Scalar::from_integer(q(), 7)),
                ((1, 3), Scalar::rational(-2, 5).unwrap()),
                ((0, 3), Scalar::from_integer(q(), 1)),
            ],
        );
        let inv = f.invert_unit().unwrap();
        let delta = IncidenceElement::identity(&alg);
        assert_eq!(&f * &inv, delta);
        assert_eq!(&inv * &f, delta);
    }

    #[test]
    fn non_units_are_rejected_with_the_offending_element() {
        let alg = chain_algebra(3, q());
        let f = &e(&alg, 0, 0) + &e(&alg, 0, 1); // missing diagonal at 1 and 2
        assert_eq!(
            f.invert_unit(),
            Err(AlgebraError::NotAUnit { label: "2".into() })
        );
    }

    #[test]
    fn radical_level_and_filtration() {
        let alg = chain_algebra(3, q());
        assert_eq!(e(&alg, 0, 1).radical_level().unwrap(), 1);
        assert_eq!(e(&alg, 0, 2).radical_level().unwrap(), 2);
        assert_eq!(
            (&e(&alg, 0, 0) + &e(&alg, 0, 2)).radical_level().unwrap(),
            0
        );
        assert_eq!(
            IncidenceElement::zero(&alg).radical_level(),
            Err(AlgebraError::ZeroElement)
        );
        // Products add radical levels: J^a · J^b ⊆ J^(a+b).
        let a = &e(&alg, 0, 1) + &e(&alg, 1, 2);
        let sq = &a * &a;
        assert_eq!(sq, e(&alg, 0, 2));
        assert_eq!(sq.radical_level().unwrap(), 2);
        assert!((&sq * &a).is_zero());
    }

    #[test]
    fn radical_center_is_min_to_max_pairs() {
        let alg = chain_algebra(3, q());
        assert_eq!(alg.radical_center_basis(), &[(0, 2)]);

        let vee = Arc::new(
            Poset::from_cover_relations(&["a", "b", "c"], &[("a", "c"), ("b", "c")]).unwrap(),
        );
        let alg = IncidenceAlgebra::new(vee, q()).unwrap();
        assert_eq!(alg.radical_center_basis(), &[(0, 2), (1, 2)]);
    }

    #[test]
    fn radical_center_annihilates_the_radical() {
        for n in [3, 4] {
            for poset in Poset::enumerate_connected(n).unwrap() {
                let alg = IncidenceAlgebra::new(Arc::new(poset), q()).unwrap();
                for &(x, y) in alg.radical_center_basis() {
                    let z = e(&alg, x, y);
                    for &(u, v) in alg.basis_pairs() {
                        if u != v {
                            let r = e(&alg, u, v);
                            assert!((&z * &r).is_zero());
                            assert!((&r * &z).is_zero());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn bracket_terms_match_the_generic_commutator() {
        let vee = Arc::new(
            Poset::from_cover_relations(&["a", "b", "c"], &[("a", "c"), ("b", "c")]).unwrap(),
        );
        for alg in [chain_algebra(4, q()), IncidenceAlgebra::new(vee, q()).unwrap()] {
            let d = alg.dim();
            for i in 0..d {
                for j in 0..d {
                    let (x, y) = alg.pair_at(i);
                    let (u, v) = alg.pair_at(j);
                    let direct = e(&alg, x, y).commutator(&e(&alg, u, v));
                    let mut from_table = IncidenceElement::zero(&alg);
                    for &(slot, positive) in alg.bracket_terms(i, j) {
                        let (a, b) = alg.pair_at(slot);
                        let term = e(&alg, a, b);
                        from_table = if positive {
                            &from_table + &term
                        } else {
                            &from_table - &term
                        };
                    }
                    assert_eq!(direct, from_table, "bracket table at ({i}, {j})");
                }
            }
        }
    }

    #[test]
    fn multiplicative_elements() {
        let alg = chain_algebra(3, q());
        // t(x)/t(y) fractions are multiplicative.
        let t = [
            Scalar::from_integer(q(), 2),
            Scalar::from_integer(q(), 3),
            Scalar::rational(1, 5).unwrap(),
        ];
        let mut entries = Vec::new();
        for x in 0..3 {
            for y in x..3 {
                entries.push(((x, y), t[x].div(&t[y]).unwrap()));
            }
        }
        let s = IncidenceElement::from_entries(&alg, entries);
        assert!(s.is_multiplicative());
        // Breaking one strict value breaks the cocycle identity.
        let broken = &s + &e(&alg, 0, 2);
        assert!(!broken.is_multiplicative());
        // Missing support is not multiplicative.
        assert!(!IncidenceElement::identity(&alg).is_multiplicative());
    }

    #[test]
    #[should_panic(expected = "context mismatch")]
    fn mixed_context_arithmetic_panics() {
        let a3 = chain_algebra(3, q());
        let a4 = chain_algebra(4, q());
        let _ = &e(&a3, 0, 1) + &e(&a4, 0, 1);
    }

    #[test]
    fn equal_contexts_need_not_share_the_arc() {
        let a = chain_algebra(3, q());
        let b = chain_algebra(3, q());
        assert_eq!(e(&a, 0, 1), e(&b, 0, 1));
        assert_eq!(&e(&a, 0, 1) * &e(&b, 1, 2), e(&a, 0, 2));
    }

    #[test]
    fn ielem_text_round_trip() {
        let alg = chain_algebra(3, q());
        let f = IncidenceElement::from_entries(
            &alg,
            [
                ((0, 0), Scalar::from_integer(q(), 1)),
                ((1, 1), Scalar::from_integer(q(), 1)),
                ((2, 2), Scalar::from_integer(q(), 1)),
                ((0, 2), Scalar::rational(-2, 3).unwrap()),
            ],
        );
        let text = f.to_text();
        assert_eq!(text, "1 1 1\n2 2 1\n3 3 1\n1 3 -2/3\n");
        assert_eq!(IncidenceElement::parse(&alg, &text).unwrap(), f);

        // The delta shorthand and accumulation.
        let g = IncidenceElement::parse(&alg, "delta\n1 3 -2/3\n").unwrap();
        assert_eq!(g, f);
        let acc = IncidenceElement::parse(&alg, "1 2 1\n1 2 -1\n").unwrap();
        assert!(acc.is_zero());
        assert_eq!(
            IncidenceElement::parse(&alg, "# nothing\n").unwrap(),
            IncidenceElement::zero(&alg)
        );
    }

    #[test]
    fn ielem_parse_errors() {
        let alg = chain_algebra(3, q());
        let err = IncidenceElement::parse(&alg, "1 5 1\n").unwrap_err();
        assert_eq!(err.line, 1);
        assert!(err.message.contains("unknown label"));
        let err = IncidenceElement::parse(&alg, "delta\n2 1 1\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(err.message.contains("not a comparable pair"));
        let err = IncidenceElement::parse(&alg, "1 2 x\n").unwrap_err();
        assert!(err.message.contains("invalid scalar"));
    }
}
