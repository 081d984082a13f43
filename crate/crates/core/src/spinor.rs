//! Minimal left ideals, chirality and the classification of inner
//! automorphisms as spinor-space stabilizers or movers.
//!
//! The algebra is the direct sum of the `2^m` column subspaces
//! `S_b = span{Ψ_ab : a}`; each is a minimal left ideal generated by its
//! primitive idempotent `Ψ_bb`. Conjugation by an invertible element maps
//! every `S_b` to some minimal left ideal, which may or may not be another
//! column subspace; the classifier reports the induced permutation of
//! columns when there is one. Subspace comparisons are exact reduced
//! row-echelon comparisons over the coefficient field.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::generators::Algebra;
use crate::index::EfbIndex;
use crate::matrix::{rref_rows, DenseMatrix};
use crate::multivector::{sign_s_unchecked, Multivector};
use crate::scalar::Scalar;
use crate::signature::Signature;

/// The column subspace `S_b`, a minimal left ideal of dimension `2^m`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpinorSpace {
    column: Signature,
    basis: Vec<EfbIndex>,
}

impl SpinorSpace {
    pub fn new(column: Signature) -> Self {
        let basis = Signature::all(column.m())
            .expect("m valid by construction")
            .map(|a| EfbIndex::new(a, column).expect("same m"))
            .collect();
        SpinorSpace { column, basis }
    }

    pub fn column(&self) -> Signature {
        self.column
    }

    pub fn m(&self) -> u8 {
        self.column.m()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The basis indices `(a, b)` with `a` running over all signatures.
    pub fn basis(&self) -> &[EfbIndex] {
        &self.basis
    }

    /// Membership: every term of the element lies in this column.
    pub fn contains<S: Scalar>(&self, v: &Multivector<S>) -> bool {
        v.m() == self.m() && v.terms().all(|(x, _)| x.column() == self.column)
    }
}

/// The spinor space with fixed column `b`.
pub fn spinor_space(b: Signature) -> SpinorSpace {
    SpinorSpace::new(b)
}

/// The diagonal idempotent `Ψ_aa`: `Ψ_aa² = Ψ_aa`, trace one, generating
/// the minimal left ideal `S_a`.
pub fn primitive_idempotent<S: Scalar>(a: Signature) -> Multivector<S> {
    Multivector::basis(EfbIndex::diagonal(a))
}

/// Left eigenvalue under the volume element.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Chirality {
    Plus,
    Minus,
    /// Terms of both chiralities are present.
    Mixed,
    Zero,
}

impl Chirality {
    pub fn sign(&self) -> Option<i8> {
        match self {
            Chirality::Plus => Some(1),
            Chirality::Minus => Some(-1),
            _ => None,
        }
    }

    pub fn from_sign(s: i8) -> Self {
        if s < 0 {
            Chirality::Minus
        } else {
            Chirality::Plus
        }
    }
}

/// Chirality of an element: `±1` when `ω·φ = λφ` with a uniform `λ`.
pub fn chirality<S: Scalar>(phi: &Multivector<S>) -> Chirality {
    let mut seen: Option<i8> = None;
    for (x, _) in phi.terms() {
        match seen {
            None => seen = Some(x.chirality()),
            Some(s) if s != x.chirality() => return Chirality::Mixed,
            _ => {}
        }
    }
    match seen {
        None => Chirality::Zero,
        Some(s) => Chirality::from_sign(s),
    }
}

/// How conjugation by an element permutes the column subspaces.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SpaceMap {
    /// Every `x S_b x⁻¹` is again a column subspace; the induced bijection.
    Permutation(BTreeMap<Signature, Signature>),
    /// Some image is a minimal left ideal that is not a column subspace.
    NotSpaceAligned,
}

impl SpaceMap {
    pub fn stabilizes_all(&self) -> bool {
        matches!(self, SpaceMap::Permutation(p) if p.iter().all(|(b, c)| b == c))
    }

    pub fn negates_all(&self) -> bool {
        matches!(self, SpaceMap::Permutation(p) if p.iter().all(|(b, c)| *c == b.negated()))
    }

    /// True when no column is fixed and applying the map twice is the
    /// identity.
    pub fn is_fixed_point_free_involution(&self) -> bool {
        match self {
            SpaceMap::Permutation(p) => p.iter().all(|(b, c)| b != c && p.get(c) == Some(b)),
            SpaceMap::NotSpaceAligned => false,
        }
    }
}

/// Effect of conjugation on the chirality of pure basis spinors.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum ChiralityFactor {
    Plus,
    Minus,
    Mixed,
}

/// Result of classifying conjugation by one invertible element.
#[derive(Clone, Debug)]
pub struct StabilizerReport<S: Scalar> {
    pub element: Multivector<S>,
    pub space_map: SpaceMap,
    pub chirality_factor: ChiralityFactor,
    /// Cross-check of the left/right stabilization equivalence
    /// (`x S_b x⁻¹ = S_b` iff `S_b x⁻¹ = S_b`), evaluated for every column.
    pub prop_two_agrees: bool,
}

fn ambient_row<S: Scalar>(v: &Multivector<S>) -> Vec<S> {
    let side = 1usize << v.m();
    let mut row = vec![S::zero(); side * side];
    for (x, c) in v.terms() {
        row[x.row().index() * side + x.column().index()] = c.clone();
    }
    row
}

/// Exact span comparison: reduced row-echelon form of the spanning set
/// against the unit rows of the column subspace.
fn span_equals_space<S: Scalar>(vectors: &[Multivector<S>], space: &SpinorSpace) -> bool {
    let side = 1usize << space.m();
    let mut rows: Vec<Vec<S>> = vectors.iter().map(ambient_row).collect();
    rref_rows(&mut rows);
    rows.retain(|r| r.iter().any(|c| !c.is_zero()));
    if rows.len() != space.dim() {
        return false;
    }
    for (k, row) in rows.iter().enumerate() {
        // Expected unit row: coefficient 1 at (a_k, column).
        let expected = k * side + space.column().index();
        for (pos, c) in row.iter().enumerate() {
            let want_one = pos == expected;
            if want_one && *c != S::one() {
                return false;
            }
            if !want_one && !c.is_zero() {
                return false;
            }
        }
    }
    true
}

fn conjugate_basis<S: Scalar>(
    x: &Multivector<S>,
    xi: &Multivector<S>,
    space: &SpinorSpace,
) -> Result<Vec<Multivector<S>>> {
    space
        .basis()
        .iter()
        .map(|ix| x.product(&Multivector::basis(*ix))?.product(xi))
        .collect()
}

fn stabilizes<S: Scalar>(
    x: &Multivector<S>,
    xi: &Multivector<S>,
    space: &SpinorSpace,
) -> Result<bool> {
    let images = conjugate_basis(x, xi, space)?;
    Ok(span_equals_space(&images, space))
}

/// Classifies conjugation by `x`: for every column `b` the image subspace
/// `x S_b x⁻¹` is computed as an exact span and compared against the column
/// subspaces, and the left/right equivalence is verified by computing
/// `S_b x⁻¹` directly.
pub fn classify_stabilizer<S: Scalar>(x: &Multivector<S>) -> Result<StabilizerReport<S>> {
    let m = x.m();
    let xi = crate::automorphisms::inverse(x)?;
    let mut permutation = BTreeMap::new();
    let mut aligned = true;
    let mut prop_two_agrees = true;
    for b in Signature::all(m)? {
        let space = SpinorSpace::new(b);
        let images = conjugate_basis(x, &xi, &space)?;
        let mut columns: BTreeSet<Signature> = BTreeSet::new();
        for im in &images {
            for (t, _) in im.terms() {
                columns.insert(t.column());
            }
        }
        let target = if columns.len() == 1 {
            let candidate = *columns.iter().next().expect("nonempty");
            span_equals_space(&images, &SpinorSpace::new(candidate)).then_some(candidate)
        } else {
            None
        };
        match target {
            Some(c) => {
                permutation.insert(b, c);
            }
            None => aligned = false,
        }
        // Right action S_b · x⁻¹.
        let right: Vec<Multivector<S>> = space
            .basis()
            .iter()
            .map(|ix| Multivector::basis(*ix).product(&xi))
            .collect::<Result<_>>()?;
        let right_stabilizes = span_equals_space(&right, &space);
        let left_stabilizes = target == Some(b);
        if left_stabilizes != right_stabilizes {
            prop_two_agrees = false;
        }
    }
    let space_map = if aligned {
        let distinct: BTreeSet<_> = permutation.values().collect();
        if distinct.len() != permutation.len() {
            return Err(Error::Internal(
                "column images under an invertible conjugation must be distinct".into(),
            ));
        }
        SpaceMap::Permutation(permutation)
    } else {
        SpaceMap::NotSpaceAligned
    };

    let mut factor: Option<ChiralityFactor> = None;
    'outer: for b in Signature::all(m)? {
        for a in Signature::all(m)? {
            let basis = Multivector::basis(EfbIndex::new(a, b)?);
            let image = x.product(&basis)?.product(&xi)?;
            let next = match chirality(&image).sign() {
                Some(s) => {
                    if s * a.epsilon() < 0 {
                        ChiralityFactor::Minus
                    } else {
                        ChiralityFactor::Plus
                    }
                }
                None => ChiralityFactor::Mixed,
            };
            match factor {
                None => factor = Some(next),
                Some(f) if f != next => {
                    factor = Some(ChiralityFactor::Mixed);
                    break 'outer;
                }
                _ => {}
            }
        }
    }

    Ok(StabilizerReport {
        element: x.clone(),
        space_map,
        chirality_factor: factor.expect("at least one basis element"),
        prop_two_agrees,
    })
}

/// Closure witness: with every input required to stabilize `S_b`, checks
/// that all pairwise products and all inverses stabilize it too.
pub fn stabilizer_subgroup_check<S: Scalar>(xs: &[Multivector<S>], b: Signature) -> Result<bool> {
    let space = SpinorSpace::new(b);
    let mut inverses = Vec::with_capacity(xs.len());
    for x in xs {
        if x.m() != b.m() {
            return Err(Error::DimensionMismatch(x.m(), b.m()));
        }
        let xi = crate::automorphisms::inverse(x)?;
        if !stabilizes(x, &xi, &space)? {
            return Err(Error::NotAStabilizer);
        }
        inverses.push(xi);
    }
    for (x, xi) in xs.iter().zip(&inverses) {
        if !stabilizes(xi, x, &space)? {
            return Ok(false);
        }
        for y in xs {
            let prod = x.product(y)?;
            let prod_inv = crate::automorphisms::inverse(&prod)?;
            if !stabilizes(&prod, &prod_inv, &space)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Reads off the null-basis coordinates of a vector-grade element:
/// `v = Σ_i α_i p_i + β_i q_i`. `None` when `v` has higher-grade content.
pub fn grade_one_components<S: Scalar>(v: &Multivector<S>) -> Option<Vec<(S, S)>> {
    let m = v.m();
    let alg = Algebra::<S>::new(m).expect("valid by construction");
    let plus = Signature::all_plus(m).expect("valid by construction");
    let mut components = Vec::with_capacity(m as usize);
    let mut rebuilt = alg.zero();
    for i in 1..=m as usize {
        let alpha = v.coefficient(&EfbIndex::new(plus.flipped(i), plus).expect("same m"));
        let beta = v.coefficient(&EfbIndex::new(plus, plus.flipped(i)).expect("same m"));
        rebuilt = rebuilt
            .checked_add(&alg.witt_p(i).expect("in range").scaled(&alpha))
            .expect("same m");
        rebuilt = rebuilt
            .checked_add(&alg.witt_q(i).expect("in range").scaled(&beta))
            .expect("same m");
        components.push((alpha, beta));
    }
    (rebuilt == *v).then_some(components)
}

/// Exact basis of `{φ ∈ S_b : vφ = 0}` for a vector-grade `v`, via the null
/// space of the left-multiplication matrix restricted to the column.
///
/// The kernel dimension is the same in every column (the restricted
/// matrices are conjugate by a diagonal sign matrix), and for slotwise
/// annihilation the solutions themselves carry over coefficient-for-
/// coefficient; see [`sibling_spinor`].
pub fn solve_weyl<S: Scalar>(v: &Multivector<S>, b: Signature) -> Result<Vec<Multivector<S>>> {
    if v.m() != b.m() {
        return Err(Error::DimensionMismatch(v.m(), b.m()));
    }
    if grade_one_components(v).is_none() {
        return Err(Error::NotGradeOne);
    }
    let m = v.m();
    let side = 1usize << m;
    let rows: Vec<Signature> = Signature::all(m)?.collect();
    let left_mul = DenseMatrix::from_fn(side, |r, c| {
        let coeff = v.coefficient(&EfbIndex::new(rows[r], rows[c]).expect("same m"));
        if sign_s_unchecked(&rows[r], &rows[c], &b) < 0 {
            coeff.neg()
        } else {
            coeff
        }
    });
    let kernel = left_mul.kernel_basis();
    kernel
        .into_iter()
        .map(|coeffs| {
            Multivector::from_terms(
                m,
                coeffs
                    .into_iter()
                    .enumerate()
                    .map(|(k, c)| (EfbIndex::new(rows[k], b).expect("same m"), c)),
            )
        })
        .collect()
}

/// Transports a spinor to another column with the identical coefficient
/// vector indexed by the row signature.
pub fn sibling_spinor<S: Scalar>(
    phi: &Multivector<S>,
    from_b: Signature,
    to_b: Signature,
) -> Result<Multivector<S>> {
    if from_b.m() != to_b.m() {
        return Err(Error::DimensionMismatch(from_b.m(), to_b.m()));
    }
    if phi.m() != from_b.m() {
        return Err(Error::DimensionMismatch(phi.m(), from_b.m()));
    }
    if !SpinorSpace::new(from_b).contains(phi) {
        return Err(Error::NotInSpinorSpace);
    }
    Multivector::from_terms(
        phi.m(),
        phi.terms()
            .map(|(x, c)| (EfbIndex::new(x.row(), to_b).expect("same m"), c.clone())),
    )
}
