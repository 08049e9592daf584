//! Linear endomorphisms of the incidence algebra.
//!
//! A [`LinearEndo`] is a dense matrix over the canonical basis of the
//! algebra: column `j` holds the image of the `j`-th basis element. On top
//! of the matrix arithmetic this module provides the two checks the rest of
//! the crate is built on:
//!
//! * [`LinearEndo::is_lie_automorphism`] — bijectivity plus commutator
//!   preservation on basis pairs;
//! * [`LinearEndo::is_hom_lie_structure`] — vanishing of the Hom-Jacobi
//!   defect `[[a,b],m(c)] + [[b,c],m(a)] + [[c,a],m(b)]` on basis triples.
//!
//! The defect is an alternating function of `(a, b, c)`, so triples with a
//! repeated entry vanish identically and one pass over ordered multisets
//! `i ≤ j ≤ k` (with the two essentially different orderings per multiset)
//! covers all of them. [`LinearEndo::is_hom_lie_structure_full`] is the
//! slow reference variant that walks every ordered triple.

use std::collections::BTreeMap;
use std::sync::Arc;

use thiserror::Error;

use crate::incidence::{IncidenceAlgebra, IncidenceElement};
use crate::scalar::{Field, Scalar};
use crate::ParseError;

/// Errors from endomorphism arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EndoError {
    /// Inversion of a non-bijective endomorphism.
    #[error("the endomorphism is not invertible")]
    NotInvertible,
}

/// A linear endomorphism of the incidence algebra, stored as a dense
/// `dim × dim` matrix over the canonical basis (column `j` = image of
/// basis element `j`).
#[derive(Debug, Clone)]
pub struct LinearEndo {
    algebra: Arc<IncidenceAlgebra>,
    /// Row-major entries: `entries[row * dim + col]`.
    entries: Vec<Scalar>,
}

impl PartialEq for LinearEndo {
    fn eq(&self, other: &Self) -> bool {
        self.algebra.same_context(&other.algebra) && self.entries == other.entries
    }
}

impl Eq for LinearEndo {}

/// One matrix column in sparse form, bucketed by each coordinate of the
/// basis pair so that products and brackets against it need no searching.
struct BucketedColumn {
    /// Nonzero entries as `((x, y), coeff)`.
    entries: Vec<((usize, usize), Scalar)>,
    /// `by_first[u]` lists `(v, coeff)` for support pairs `(u, v)`.
    by_first: Vec<Vec<(usize, Scalar)>>,
    /// `by_second[v]` lists `(u, coeff)` for support pairs `(u, v)`.
    by_second: Vec<Vec<(usize, Scalar)>>,
}

/// Dense accumulator over basis slots with sparse reset.
struct Accumulator {
    vals: Vec<Scalar>,
    touched: Vec<usize>,
    zero: Scalar,
}

impl Accumulator {
    fn new(dim: usize, field: Field) -> Accumulator {
        Accumulator {
            vals: vec![Scalar::zero(field); dim],
            touched: Vec::with_capacity(dim),
            zero: Scalar::zero(field),
        }
    }

    fn add_signed(&mut self, slot: usize, c: &Scalar, positive: bool) {
        let cur = &self.vals[slot];
        if cur.is_zero() {
            self.touched.push(slot);
        }
        self.vals[slot] = if positive { cur + c } else { cur - c };
    }

    /// Tests whether every accumulated value is zero, resetting the
    /// accumulator either way.
    fn take_is_zero(&mut self) -> bool {
        let mut all_zero = true;
        for i in 0..self.touched.len() {
            let slot = self.touched[i];
            if !self.vals[slot].is_zero() {
                all_zero = false;
                self.vals[slot] = self.zero.clone();
            }
        }
        self.touched.clear();
        all_zero
    }
}

impl LinearEndo {
    /// The zero endomorphism.
    pub fn zero(algebra: &Arc<IncidenceAlgebra>) -> LinearEndo {
        let d = algebra.dim();
        LinearEndo {
            algebra: Arc::clone(algebra),
            entries: vec![Scalar::zero(algebra.field()); d * d],
        }
    }

    /// The identity endomorphism.
    pub fn identity(algebra: &Arc<IncidenceAlgebra>) -> LinearEndo {
        LinearEndo::scalar_map(algebra, &Scalar::one(algebra.field()))
    }

    /// The scalar multiple `λ · id`.
    pub fn scalar_map(algebra: &Arc<IncidenceAlgebra>, lambda: &Scalar) -> LinearEndo {
        let mut out = LinearEndo::zero(algebra);
        let d = algebra.dim();
        for i in 0..d {
            out.entries[i * d + i] = lambda.clone();
        }
        out
    }

    /// Assembles an endomorphism from the images of the basis elements, in
    /// basis order.
    ///
    /// # Panics
    ///
    /// Panics when the number of columns or a column's context does not
    /// match the algebra.
    pub fn from_columns(
        algebra: &Arc<IncidenceAlgebra>,
        columns: &[IncidenceElement],
    ) -> LinearEndo {
        let d = algebra.dim();
        assert_eq!(columns.len(), d, "expected {d} columns");
        let mut out = LinearEndo::zero(algebra);
        for (col, image) in columns.iter().enumerate() {
            assert!(
                algebra.same_context(image.algebra()),
                "column context mismatch"
            );
            for (&(x, y), c) in image.support() {
                let row = algebra.slot(x, y).unwrap();
                out.entries[row * d + col] = c.clone();
            }
        }
        out
    }

    /// The shared context of this endomorphism.
    pub fn algebra(&self) -> &Arc<IncidenceAlgebra> {
        &self.algebra
    }

    /// The matrix entry at `(row, col)`: the coefficient of basis element
    /// `row` in the image of basis element `col`.
    pub fn entry(&self, row: usize, col: usize) -> &Scalar {
        &self.entries[row * self.algebra.dim() + col]
    }

    /// The image of basis element `col`, as a sparse element.
    pub fn column(&self, col: usize) -> IncidenceElement {
        let d = self.algebra.dim();
        let mut coeffs = BTreeMap::new();
        for row in 0..d {
            let c = &self.entries[row * d + col];
            if !c.is_zero() {
                coeffs.insert(self.algebra.pair_at(row), c.clone());
            }
        }
        IncidenceElement::from_map(&self.algebra, coeffs)
    }

    /// Applies the endomorphism to an element.
    pub fn apply(&self, f: &IncidenceElement) -> IncidenceElement {
        assert!(
            self.algebra.same_context(f.algebra()),
            "incidence-algebra context mismatch"
        );
        let d = self.algebra.dim();
        let mut dense = vec![Scalar::zero(self.algebra.field()); d];
        for (&(x, y), c) in f.support() {
            let col = self.algebra.slot(x, y).unwrap();
            for (row, val) in dense.iter_mut().enumerate() {
                let m = &self.entries[row * d + col];
                if !m.is_zero() {
                    *val = &*val + &(m * c);
                }
            }
        }
        let mut coeffs = BTreeMap::new();
        for (row, val) in dense.into_iter().enumerate() {
            if !val.is_zero() {
                coeffs.insert(self.algebra.pair_at(row), val);
            }
        }
        IncidenceElement::from_map(&self.algebra, coeffs)
    }

    /// The composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &LinearEndo) -> LinearEndo {
        self.assert_same_context(other);
        let d = self.algebra.dim();
        let mut out = LinearEndo::zero(&self.algebra);
        for row in 0..d {
            for mid in 0..d {
                let a = &self.entries[row * d + mid];
                if a.is_zero() {
                    continue;
                }
                for col in 0..d {
                    let b = &other.entries[mid * d + col];
                    if !b.is_zero() {
                        let slot = row * d + col;
                        out.entries[slot] = &out.entries[slot] + &(a * b);
                    }
                }
            }
        }
        out
    }

    /// The pointwise sum `self + other`.
    pub fn add(&self, other: &LinearEndo) -> LinearEndo {
        self.assert_same_context(other);
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        LinearEndo {
            algebra: Arc::clone(&self.algebra),
            entries,
        }
    }

    fn assert_same_context(&self, other: &LinearEndo) {
        assert!(
            self.algebra.same_context(&other.algebra),
            "incidence-algebra context mismatch"
        );
    }

    /// `true` when the matrix is invertible.
    pub fn is_bijective(&self) -> bool {
        let d = self.algebra.dim();
        let mut rows: Vec<Vec<Scalar>> = (0..d)
            .map(|r| self.entries[r * d..(r + 1) * d].to_vec())
            .collect();
        for col in 0..d {
            let Some(pivot) = (col..d).find(|&r| !rows[r][col].is_zero()) else {
                return false;
            };
            rows.swap(col, pivot);
            let inv = rows[col][col].inv().expect("pivot is nonzero");
            for r in col + 1..d {
                if rows[r][col].is_zero() {
                    continue;
                }
                let factor = &rows[r][col] * &inv;
                for c in col..d {
                    let delta = &rows[col][c] * &factor;
                    rows[r][c] = &rows[r][c] - &delta;
                }
            }
        }
        true
    }

    /// Inverts the endomorphism by Gauss–Jordan elimination. Fails with
    /// [`EndoError::NotInvertible`] when the matrix is singular.
    pub fn invert(&self) -> Result<LinearEndo, EndoError> {
        let d = self.algebra.dim();
        let field = self.algebra.field();
        let mut rows: Vec<Vec<Scalar>> = (0..d)
            .map(|r| self.entries[r * d..(r + 1) * d].to_vec())
            .collect();
        let mut inv: Vec<Vec<Scalar>> = (0..d)
            .map(|r| {
                (0..d)
                    .map(|c| {
                        if r == c {
                            Scalar::one(field)
                        } else {
                            Scalar::zero(field)
                        }
                    })
                    .collect()
            })
            .collect();
        for col in 0..d {
            let Some(pivot) = (col..d).find(|&r| !rows[r][col].is_zero()) else {
                return Err(EndoError::NotInvertible);
            };
            rows.swap(col, pivot);
            inv.swap(col, pivot);
            let scale = rows[col][col].inv().expect("pivot is nonzero");
            for c in 0..d {
                rows[col][c] = &rows[col][c] * &scale;
                inv[col][c] = &inv[col][c] * &scale;
            }
            for r in 0..d {
                if r == col || rows[r][col].is_zero() {
                    continue;
                }
                let factor = rows[r][col].clone();
                for c in 0..d {
                    let dr = &rows[col][c] * &factor;
                    rows[r][c] = &rows[r][c] - &dr;
                    let di = &inv[col][c] * &factor;
                    inv[r][c] = &inv[r][c] - &di;
                }
            }
        }
        let mut entries = Vec::with_capacity(d * d);
        for row in inv {
            entries.extend(row);
        }
        Ok(LinearEndo {
            algebra: Arc::clone(&self.algebra),
            entries,
        })
    }

    /// The conjugate `psi ∘ self ∘ psi⁻¹`. Fails when `psi` is not
    /// invertible.
    pub fn conjugate_by(&self, psi: &LinearEndo) -> Result<LinearEndo, EndoError> {
        self.assert_same_context(psi);
        let psi_inv = psi.invert()?;
        Ok(psi.compose(self).compose(&psi_inv))
    }

    fn bucket_columns(&self) -> Vec<BucketedColumn> {
        let d = self.algebra.dim();
        let n = self.algebra.poset().len();
        (0..d)
            .map(|col| {
                let mut entries = Vec::new();
                let mut by_first = vec![Vec::new(); n];
                let mut by_second = vec![Vec::new(); n];
                for row in 0..d {
                    let c = &self.entries[row * d + col];
                    if !c.is_zero() {
                        let (u, v) = self.algebra.pair_at(row);
                        entries.push(((u, v), c.clone()));
                        by_first[u].push((v, c.clone()));
                        by_second[v].push((u, c.clone()));
                    }
                }
                BucketedColumn {
                    entries,
                    by_first,
                    by_second,
                }
            })
            .collect()
    }

    /// Accumulates `± [e_t, g]` into `acc`, where `e_t` is the basis
    /// element at slot `t` and `g` is a bucketed column:
    /// `[e_xy, g] = Σ_{(y,v) ∈ g} g(y,v)·e_xv − Σ_{(u,x) ∈ g} g(u,x)·e_uy`.
    fn accumulate_basis_bracket(
        &self,
        acc: &mut Accumulator,
        t: usize,
        g: &BucketedColumn,
        positive: bool,
    ) {
        let (x, y) = self.algebra.pair_at(t);
        for (v, c) in &g.by_first[y] {
            acc.add_signed(self.algebra.slot(x, *v).unwrap(), c, positive);
        }
        for (u, c) in &g.by_second[x] {
            acc.add_signed(self.algebra.slot(*u, y).unwrap(), c, !positive);
        }
    }

    /// Accumulates the Hom-Jacobi defect of the ordered basis triple
    /// `(i, j, k)` into `acc` and tests it for zero.
    fn ordered_defect_is_zero(
        &self,
        acc: &mut Accumulator,
        cols: &[BucketedColumn],
        i: usize,
        j: usize,
        k: usize,
    ) -> bool {
        for &(t, sign) in self.algebra.bracket_terms(i, j) {
            self.accumulate_basis_bracket(acc, t, &cols[k], sign);
        }
        for &(t, sign) in self.algebra.bracket_terms(j, k) {
            self.accumulate_basis_bracket(acc, t, &cols[i], sign);
        }
        for &(t, sign) in self.algebra.bracket_terms(k, i) {
            self.accumulate_basis_bracket(acc, t, &cols[j], sign);
        }
        acc.take_is_zero()
    }

    /// The Hom-Jacobi defect
    /// `[[a,b], m(c)] + [[b,c], m(a)] + [[c,a], m(b)]`.
    pub fn hom_jacobi_defect(
        &self,
        a: &IncidenceElement,
        b: &IncidenceElement,
        c: &IncidenceElement,
    ) -> IncidenceElement {
        let t1 = a.commutator(b).commutator(&self.apply(c));
        let t2 = b.commutator(c).commutator(&self.apply(a));
        let t3 = c.commutator(a).commutator(&self.apply(b));
        &(&t1 + &t2) + &t3
    }

    /// `true` when the Hom-Jacobi defect vanishes on every basis triple,
    /// i.e. the bracket together with `self` is a Hom-Lie structure.
    ///
    /// Walks ordered multisets `i ≤ j ≤ k` and checks the two orderings
    /// `(i, j, k)` and `(i, k, j)` of each (one when `j = k`); the defect is
    /// alternating, so the remaining orderings differ only by sign.
    /// Multisets whose three inner brackets all vanish are skipped.
    pub fn is_hom_lie_structure(&self) -> bool {
        let d = self.algebra.dim();
        let cols = self.bucket_columns();
        let mut acc = Accumulator::new(d, self.algebra.field());
        for i in 0..d {
            for j in i..d {
                let ij_empty = self.algebra.bracket_terms(i, j).is_empty();
                for k in j..d {
                    if ij_empty
                        && self.algebra.bracket_terms(j, k).is_empty()
                        && self.algebra.bracket_terms(k, i).is_empty()
                    {
                        continue;
                    }
                    if !self.ordered_defect_is_zero(&mut acc, &cols, i, j, k) {
                        return false;
                    }
                    if j != k && !self.ordered_defect_is_zero(&mut acc, &cols, i, k, j) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Reference variant of [`LinearEndo::is_hom_lie_structure`] that
    /// checks every ordered basis triple.
    pub fn is_hom_lie_structure_full(&self) -> bool {
        let d = self.algebra.dim();
        let cols = self.bucket_columns();
        let mut acc = Accumulator::new(d, self.algebra.field());
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    if !self.ordered_defect_is_zero(&mut acc, &cols, i, j, k) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The first basis pair `(i, j)`, `i < j`, on which the endomorphism
    /// fails to preserve the commutator, as the corresponding poset pairs.
    /// `None` when all commutators are preserved.
    pub fn first_bracket_defect(&self) -> Option<((usize, usize), (usize, usize))> {
        let d = self.algebra.dim();
        let cols = self.bucket_columns();
        let mut acc = Accumulator::new(d, self.algebra.field());
        for i in 0..d {
            for j in i + 1..d {
                // m([b_i, b_j]) …
                for &(t, sign) in self.algebra.bracket_terms(i, j) {
                    for row in 0..d {
                        let c = &self.entries[row * d + t];
                        if !c.is_zero() {
                            acc.add_signed(row, c, sign);
                        }
                    }
                }
                // … minus [m(b_i), m(b_j)].
                self.accumulate_product(&mut acc, &cols[i], &cols[j], false);
                self.accumulate_product(&mut acc, &cols[j], &cols[i], true);
                if !acc.take_is_zero() {
                    return Some((self.algebra.pair_at(i), self.algebra.pair_at(j)));
                }
            }
        }
        None
    }

    /// Accumulates `± f·g` into `acc` for bucketed columns.
    fn accumulate_product(
        &self,
        acc: &mut Accumulator,
        f: &BucketedColumn,
        g: &BucketedColumn,
        positive: bool,
    ) {
        for ((x, z), c) in &f.entries {
            for (w, cc) in &g.by_first[*z] {
                acc.add_signed(self.algebra.slot(*x, *w).unwrap(), &(c * cc), positive);
            }
        }
    }

    /// `true` when the endomorphism is bijective and preserves the
    /// commutator on all basis pairs, i.e. is a Lie-algebra automorphism of
    /// the incidence algebra under the commutator bracket.
    pub fn is_lie_automorphism(&self) -> bool {
        self.is_bijective() && self.first_bracket_defect().is_none()
    }

    /// Renders the `.endo` text format: a `dim d` header followed by `d`
    /// rows of `d` scalars over the canonical basis.
    pub fn to_text(&self) -> String {
        let d = self.algebra.dim();
        let mut out = format!("dim {d}\n");
        for row in 0..d {
            let line: Vec<String> = (0..d)
                .map(|col| self.entries[row * d + col].to_string())
                .collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses the `.endo` text format against the given context: a
    /// `dim d` header whose value must match the algebra dimension,
    /// followed by `d` rows of `d` scalars. Blank lines and `#` comments
    /// are ignored.
    pub fn parse(algebra: &Arc<IncidenceAlgebra>, text: &str) -> Result<LinearEndo, ParseError> {
        let d = algebra.dim();
        let mut out = LinearEndo::zero(algebra);
        let mut seen_header = false;
        let mut rows_read = 0usize;
        let mut last_line = 0usize;
        for (lineno, raw) in text.lines().enumerate() {
            let lineno = lineno + 1;
            last_line = lineno;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if !seen_header {
                match tokens.as_slice() {
                    ["dim", value] => {
                        let parsed: usize = value.parse().map_err(|_| {
                            ParseError::new(lineno, format!("invalid dimension {value:?}"))
                        })?;
                        if parsed != d {
                            return Err(ParseError::new(
                                lineno,
                                format!("dimension {parsed} does not match the algebra (dim {d})"),
                            ));
                        }
                        seen_header = true;
                    }
                    _ => {
                        return Err(ParseError::new(
                            lineno,
                            format!("expected `dim {d}` header, got {line:?}"),
                        ))
                    }
                }
                continue;
            }
            if rows_read == d {
                return Err(ParseError::new(
                    lineno,
                    format!("expected exactly {d} rows, found extra row {line:?}"),
                ));
            }
            if tokens.len() != d {
                return Err(ParseError::new(
                    lineno,
                    format!("expected {d} entries in row, got {}", tokens.len()),
                ));
            }
            for (col, token) in tokens.iter().enumerate() {
                let c = Scalar::parse(algebra.field(), token)
                    .map_err(|e| ParseError::new(lineno, e.to_string()))?;
                out.entries[rows_read * d + col] = c;
            }
            rows_read += 1;
        }
        if !seen_header {
            return Err(ParseError::new(last_line + 1, "missing `dim` header"));
        }
        if rows_read != d {
            return Err(ParseError::new(
                last_line + 1,
                format!("expected {d} rows, got {rows_read}"),
            ));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::Poset;

    fn q() -> Field {
        Field::rationals()
    }

    fn chain_algebra(n: usize, field: Field) -> Arc<IncidenceAlgebra> {
        let covers: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        let poset = Arc::new(Poset::from_cover_indices(n, &covers).unwrap());
        IncidenceAlgebra::new(poset, field).unwrap()
    }

    fn e(alg: &Arc<IncidenceAlgebra>, x: usize, y: usize) -> IncidenceElement {
        IncidenceElement::basis_element(alg, x, y)
    }

    /// A fixed invertible upper-triangular endomorphism used by several
    /// tests: the identity plus a few radical perturbations.
    fn crooked_endo(alg: &Arc<IncidenceAlgebra>) -> LinearEndo {
        let d = alg.dim();
        let mut cols = Vec::with_capacity(d);
        for slot in 0..d {
            let (x, y) = alg.pair_at(slot);
            let mut img = e(alg, x, y);
            if x == y {
                // push some junk into deeper radical levels
                for &(u, v) in alg.basis_pairs() {
                    if u < v && (u + v + x) % 2 == 0 {
                        img = &img + &e(alg, u, v).scale(&Scalar::from_integer(alg.field(), 2));
                    }
                }
            }
            cols.push(img);
        }
        LinearEndo::from_columns(alg, &cols)
    }

    #[test]
    fn identity_and_scalar_maps() {
        let alg = chain_algebra(3, q());
        let id = LinearEndo::identity(&alg);
        let f = &e(&alg, 0, 1) + &e(&alg, 1, 2).scale(&Scalar::from_integer(q(), 3));
        assert_eq!(id.apply(&f), f);
        let double = LinearEndo::scalar_map(&alg, &Scalar::from_integer(q(), 2));
        assert_eq!(double.apply(&f), f.scale(&Scalar::from_integer(q(), 2)));
        assert_eq!(double.column(0), e(&alg, 0, 0).scale(&Scalar::from_integer(q(), 2)));
    }

    #[test]
    fn scalar_maps_are_hom_lie_but_rarely_automorphisms() {
        let alg = chain_algebra(3, q());
        for lambda in [-2i64, 0, 1, 2, 7] {
            let m = LinearEndo::scalar_map(&alg, &Scalar::from_integer(q(), lambda));
            assert!(m.is_hom_lie_structure(), "λ = {lambda}");
            assert!(m.is_hom_lie_structure_full(), "λ = {lambda}");
            // Only λ = 1 preserves brackets bijectively; λ = 0 is not
            // bijective, other λ scale one side of the bracket twice.
            assert_eq!(m.is_lie_automorphism(), lambda == 1, "λ = {lambda}");
        }
    }

    #[test]
    fn compose_agrees_with_sequential_application() {
        let alg = chain_algebra(3, q());
        let a = crooked_endo(&alg);
        let b = LinearEndo::scalar_map(&alg, &Scalar::rational(1, 2).unwrap());
        let ab = a.compose(&b);
        let f = &(&e(&alg, 0, 0) + &e(&alg, 0, 2)) + &e(&alg, 1, 1).scale(&Scalar::from_integer(q(), 4));
        assert_eq!(ab.apply(&f), a.apply(&b.apply(&f)));
    }

    #[test]
    fn add_matches_pointwise_sum() {
        let alg = chain_algebra(3, q());
        let a = crooked_endo(&alg);
        let b = LinearEndo::identity(&alg);
        let f = &e(&alg, 1, 1) + &e(&alg, 0, 1);
        assert_eq!(a.add(&b).apply(&f), &a.apply(&f) + &b.apply(&f));
    }

    #[test]
    fn inversion_round_trips() {
        let alg = chain_algebra(4, q());
        let m = crooked_endo(&alg);
        assert!(m.is_bijective());
        let inv = m.invert().unwrap();
        let id = LinearEndo::identity(&alg);
        assert_eq!(m.compose(&inv), id);
        assert_eq!(inv.compose(&m), id);
        assert_eq!(
            LinearEndo::scalar_map(&alg, &Scalar::from_integer(q(), 2))
                .invert()
                .unwrap(),
            LinearEndo::scalar_map(&alg, &Scalar::rational(1, 2).unwrap())
        );
    }

    #[test]
    fn singular_maps_are_detected() {
        let alg = chain_algebra(3, q());
        let zero = LinearEndo::zero(&alg);
        assert!(!zero.is_bijective());
        assert_eq!(zero.invert(), Err(EndoError::NotInvertible));
        // Rank-deficient: two basis elements mapped to the same image.
        let d = alg.dim();
        let cols: Vec<IncidenceElement> = (0..d)
            .map(|slot| {
                if slot == 1 {
                    e(&alg, 0, 0)
                } else {
                    let (x, y) = alg.pair_at(slot);
                    e(&alg, x, y)
                }
            })
            .collect();
        let m = LinearEndo::from_columns(&alg, &cols);
        assert!(!m.is_bijective());
        assert!(!m.is_lie_automorphism());
    }

    #[test]
    fn conjugation_round_trips() {
        let alg = chain_algebra(3, q());
        let m = LinearEndo::scalar_map(&alg, &Scalar::from_integer(q(), 3));
        let psi = crooked_endo(&alg);
        let conj = m.conjugate_by(&psi).unwrap();
        // Scalar maps are central, so conjugation fixes them.
        assert_eq!(conj, m);
        assert_eq!(
            crooked_endo(&alg)
                .conjugate_by(&psi)
                .unwrap()
                .conjugate_by(&psi.invert().unwrap())
                .unwrap(),
            crooked_endo(&alg)
        );
        assert!(m.conjugate_by(&LinearEndo::zero(&alg)).is_err());
    }

    #[test]
    fn identity_preserves_brackets_and_first_defect_is_reported() {
        let alg = chain_algebra(2, q());
        assert!(LinearEndo::identity(&alg).is_lie_automorphism());
        assert_eq!(LinearEndo::identity(&alg).first_bracket_defect(), None);
        // e_00 ↦ e_00 + e_11 collapses the bracket with e_01:
        // the image of [e_00, e_01] = e_01 is e_01, but
        // [e_00 + e_11, e_01] = e_01 − e_01 = 0.
        let cols = vec![
            &e(&alg, 0, 0) + &e(&alg, 1, 1),
            e(&alg, 1, 1),
            e(&alg, 0, 1),
        ];
        let m = LinearEndo::from_columns(&alg, &cols);
        assert!(m.is_bijective());
        assert_eq!(m.first_bracket_defect(), Some(((0, 0), (0, 1))));
        assert!(!m.is_lie_automorphism());
    }

    #[test]
    fn hom_jacobi_defect_vanishes_for_the_identity() {
        let alg = chain_algebra(3, q());
        let id = LinearEndo::identity(&alg);
        // With m = id the defect is the classical Jacobi identity.
        let a = &e(&alg, 0, 1) + &e(&alg, 1, 1);
        let b = &e(&alg, 1, 2) + &e(&alg, 0, 0).scale(&Scalar::from_integer(q(), 2));
        let c = &e(&alg, 0, 2) + &e(&alg, 2, 2);
        assert!(id.hom_jacobi_defect(&a, &b, &c).is_zero());
    }

    #[test]
    fn defect_is_alternating_in_its_arguments() {
        let alg = chain_algebra(3, q());
        let m = crooked_endo(&alg);
        let a = &e(&alg, 0, 1) + &e(&alg, 2, 2);
        let b = &e(&alg, 1, 2) + &e(&alg, 1, 1).scale(&Scalar::from_integer(q(), -3));
        let c = &e(&alg, 0, 0) + &e(&alg, 0, 2).scale(&Scalar::rational(1, 2).unwrap());
        let d_abc = m.hom_jacobi_defect(&a, &b, &c);
        // Even permutations agree, odd permutations flip the sign.
        assert_eq!(m.hom_jacobi_defect(&b, &c, &a), d_abc);
        assert_eq!(m.hom_jacobi_defect(&c, &a, &b), d_abc);
        assert_eq!(m.hom_jacobi_defect(&b, &a, &c), -&d_abc);
        assert_eq!(m.hom_jacobi_defect(&a, &c, &b), -&d_abc);
        assert_eq!(m.hom_jacobi_defect(&c, &b, &a), -&d_abc);
        // Repeated arguments kill the defect outright.
        assert!(m.hom_jacobi_defect(&a, &a, &c).is_zero());
        assert!(m.hom_jacobi_defect(&a, &b, &b).is_zero());
    }

    #[test]
    fn reduced_triple_loop_agrees_with_the_full_loop() {
        // Both on a chain and on a non-chain poset, for a spread of maps
        // that are and are not Hom-Lie structures.
        let vee = Arc::new(
            Poset::from_cover_relations(&["a", "b", "c"], &[("a", "c"), ("b", "c")]).unwrap(),
        );
        let algebras = [
            chain_algebra(3, q()),
            IncidenceAlgebra::new(vee, Field::prime(3).unwrap()).unwrap(),
        ];
        for alg in &algebras {
            let two = Scalar::from_integer(alg.field(), 2);
            let candidates = vec![
                LinearEndo::identity(alg),
                LinearEndo::zero(alg),
                LinearEndo::scalar_map(alg, &two),
                crooked_endo(alg),
                {
                    // Perturb a single strict-pair column: breaks the
                    // Hom-Jacobi identity on most posets.
                    let d = alg.dim();
                    let cols: Vec<IncidenceElement> = (0..d)
                        .map(|slot| {
                            let (x, y) = alg.pair_at(slot);
                            if x != y && alg.level(slot) == 1 {
                                e(alg, x, x)
                            } else {
                                e(alg, x, y)
                            }
                        })
                        .collect();
                    LinearEndo::from_columns(alg, &cols)
                },
            ];
            for (idx, m) in candidates.iter().enumerate() {
                assert_eq!(
                    m.is_hom_lie_structure(),
                    m.is_hom_lie_structure_full(),
                    "candidate {idx}"
                );
            }
        }
    }

    #[test]
    fn fast_defect_loop_matches_the_elementwise_defect() {
        let alg = chain_algebra(3, q());
        let m = crooked_endo(&alg);
        let d = alg.dim();
        let mut all_zero = true;
        'outer: for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let (xi, yi) = alg.pair_at(i);
                    let (xj, yj) = alg.pair_at(j);
                    let (xk, yk) = alg.pair_at(k);
                    let defect = m.hom_jacobi_defect(
                        &e(&alg, xi, yi),
                        &e(&alg, xj, yj),
                        &e(&alg, xk, yk),
                    );
                    if !defect.is_zero() {
                        all_zero = false;
                        break 'outer;
                    }
                }
            }
        }
        assert_eq!(m.is_hom_lie_structure(), all_zero);
        assert_eq!(m.is_hom_lie_structure_full(), all_zero);
    }

    #[test]
    fn endo_text_round_trip() {
        let alg = chain_algebra(2, q());
        let m = LinearEndo::from_columns(
            &alg,
            &[
                &e(&alg, 0, 0) + &e(&alg, 0, 1).scale(&Scalar::rational(1, 2).unwrap()),
                e(&alg, 1, 1),
                e(&alg, 0, 1).scale(&Scalar::from_integer(q(), -3)),
            ],
        );
        let text = m.to_text();
        assert_eq!(text, "dim 3\n1 0 0\n0 1 0\n1/2 0 -3\n");
        assert_eq!(LinearEndo::parse(&alg, &text).unwrap(), m);
        let noisy = format!("# comment\n\n{text}# trailing\n");
        assert_eq!(LinearEndo::parse(&alg, &noisy).unwrap(), m);
    }

    #[test]
    fn endo_parse_errors() {
        let alg = chain_algebra(2, q());
        let err = LinearEndo::parse(&alg, "dim 4\n").unwrap_err();
        assert_eq!(err.line, 1);
        assert!(err.message.contains("does not match"));
        let err = LinearEndo::parse(&alg, "1 0 0\n").unwrap_err();
        assert!(err.message.contains("header"));
        let err = LinearEndo::parse(&alg, "dim 3\n1 0\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(err.message.contains("expected 3 entries"));
        let err = LinearEndo::parse(&alg, "dim 3\n1 0 0\n0 1 0\n").unwrap_err();
        assert!(err.message.contains("expected 3 rows"));
        let err =
            LinearEndo::parse(&alg, "dim 3\n1 0 0\n0 1 0\n0 0 1\n0 0 0\n").unwrap_err();
        assert!(err.message.contains("extra row"));
    }
}
