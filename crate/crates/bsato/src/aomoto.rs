//! Aomoto complex of a rank-3 central arrangement with rational residues.
//!
//! Deconing by the designated infinity hyperplane turns the projective line
//! arrangement into an affine one with defining equations `g_i`; the complex
//! `(A^•, ω∧)` with `ω = Σ α_i dg_i/g_i` then computes twisted de Rham
//! cohomology whenever the residues are nonresonant on dense edges.  Its
//! cohomology dimensions and the distinguished subspace `V(I)` of `H²` drive
//! the root/non-root certification rules.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use serde::Serialize;

use crate::arrangement::{alpha_prime, chi_complement, intersection_lattice, r_prime, Arrangement, Edge};
use crate::error::{Error, Result};
use crate::matrix::{in_span, row_basis, span_rank, QMatrix};
use crate::rational::{binomial, Rat};

/// Largest number of candidate index sets the certification search will
/// enumerate before demanding an explicit choice.
pub const I_SEARCH_CAP: u64 = 5000;

/// Residues `α_i` attached to the hyperplanes: `1 − α` on the chosen index
/// set and the infinity hyperplane, `−α` elsewhere, so they always sum to 0.
#[derive(Clone, Debug)]
pub struct ResidueAssignment {
    alpha: Rat,
    k: usize,
    indices: BTreeSet<usize>,
    residues: Vec<Rat>,
}

impl ResidueAssignment {
    /// `indices` are 0-based positions into the form list, never the
    /// infinity index, with exactly `k − 1` elements.
    pub fn new(a: &Arrangement, k: usize, indices: BTreeSet<usize>) -> Result<Self> {
        let d = a.degree();
        let inf = a
            .infinity_index()
            .ok_or_else(|| Error::Precondition("infinity index required".into()))?;
        if k < 1 || k > d {
            return Err(Error::Invalid(format!("k = {k} outside 1..={d}")));
        }
        if indices.len() != k - 1 {
            return Err(Error::Invalid(format!(
                "index set has {} elements, need k − 1 = {}",
                indices.len(),
                k - 1
            )));
        }
        if indices.iter().any(|&i| i >= d || i == inf) {
            return Err(Error::Invalid("index set must avoid the infinity hyperplane".into()));
        }
        let alpha = Rat::new(k as i64, d as i64)?;
        let positive = Rat::one() - alpha.clone();
        let residues: Vec<Rat> = (0..d)
            .map(|i| {
                if i == inf || indices.contains(&i) {
                    positive.clone()
                } else {
                    -alpha.clone()
                }
            })
            .collect();
        debug_assert!(residues.iter().fold(Rat::zero(), |s, r| s + r).is_zero());
        Ok(ResidueAssignment { alpha, k, indices, residues })
    }

    pub fn alpha(&self) -> &Rat {
        &self.alpha
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn indices(&self) -> &BTreeSet<usize> {
        &self.indices
    }

    pub fn residues(&self) -> &[Rat] {
        &self.residues
    }
}

/// Sparse bivariate polynomial keyed by `(deg_s, deg_t)`.
type Poly2 = BTreeMap<(usize, usize), Rat>;

fn poly_mul(p: &Poly2, q: &Poly2) -> Poly2 {
    let mut out = Poly2::new();
    for ((ps, pt), pv) in p {
        for ((qs, qt), qv) in q {
            let key = (ps + qs, pt + qt);
            let add = pv * qv;
            let v = out.entry(key).or_insert_with(Rat::zero);
            *v = v.clone() + add;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Coefficient vector over all monomials of total degree at most `deg`.
fn poly_to_vec(p: &Poly2, deg: usize) -> Vec<Rat> {
    let mut out = Vec::new();
    for s in 0..=deg {
        for t in 0..=(deg - s) {
            out.push(p.get(&(s, t)).cloned().unwrap_or_else(Rat::zero));
        }
    }
    out
}

/// The complex `A⁰ → A¹ → A²` in concrete coordinates: `A¹` has one basis
/// element per finite hyperplane, and 2-forms are represented by the
/// coefficient vector of the polynomial obtained after clearing all
/// denominators against the product of the affine equations.
#[derive(Clone, Debug)]
pub struct AomotoComplex {
    affine: Vec<usize>,
    dims: (usize, usize, usize),
    d0: Vec<Rat>,
    d1: QMatrix,
    pair_vectors: BTreeMap<(usize, usize), Vec<Rat>>,
    basis_pairs: Vec<(usize, usize)>,
    rank_d0: usize,
    rank_d1: usize,
}

impl AomotoComplex {
    /// `(dim A⁰, dim A¹, dim A²)`.
    pub fn dims(&self) -> (usize, usize, usize) {
        self.dims
    }

    /// Form indices of the non-infinity hyperplanes, in `A¹` basis order.
    pub fn affine_indices(&self) -> &[usize] {
        &self.affine
    }

    /// Wedge pairs (by form index) whose vectors form a basis of `A²`.
    pub fn basis_pairs(&self) -> &[(usize, usize)] {
        &self.basis_pairs
    }

    pub fn d0(&self) -> &[Rat] {
        &self.d0
    }

    pub fn d1(&self) -> &QMatrix {
        &self.d1
    }

    pub fn rank_d1(&self) -> usize {
        self.rank_d1
    }

    /// Cohomology dimensions `(h⁰, h¹, h²)` of the complex.
    pub fn h_numbers(&self) -> (usize, usize, usize) {
        let (a0, a1, a2) = self.dims;
        (
            a0 - self.rank_d0,
            a1 - self.rank_d0 - self.rank_d1,
            a2 - self.rank_d1,
        )
    }

    fn d1_columns(&self) -> Vec<Vec<Rat>> {
        (0..self.d1.cols())
            .map(|c| (0..self.d1.rows()).map(|r| self.d1.get(r, c).clone()).collect())
            .collect()
    }
}

/// Build the complex for a rank-3 arrangement and a residue assignment.
pub fn build_aomoto(a: &Arrangement, r: &ResidueAssignment) -> Result<AomotoComplex> {
    if a.dim() != 3 {
        return Err(Error::Precondition("rank 3 required".into()));
    }
    let d = a.degree();
    let inf = a
        .infinity_index()
        .ok_or_else(|| Error::Precondition("infinity index required".into()))?;
    if r.residues.len() != d {
        return Err(Error::Invalid("residue assignment built for another arrangement".into()));
    }
    let h = &a.forms()[inf];
    // Affine chart: a point p with h(p) = 1 and a basis (u, v) of ker h.
    let p = QMatrix::from_rows(std::slice::from_ref(h))
        .solve(&[Rat::one()])
        .ok_or_else(|| Error::Invalid("zero infinity form".into()))?;
    let kernel = QMatrix::from_rows(std::slice::from_ref(h)).nullspace();
    let [u, v] = <[Vec<Rat>; 2]>::try_from(kernel)
        .map_err(|_| Error::Invalid("infinity form does not have a plane kernel".into()))?;
    let dot = |f: &[Rat], w: &[Rat]| {
        f.iter()
            .zip(w)
            .fold(Rat::zero(), |s, (x, y)| s + x * y)
    };
    let affine: Vec<usize> = (0..d).filter(|&i| i != inf).collect();
    // g_i(s, t) = f_i(p + s·u + t·v) = a_i s + b_i t + c_i.
    let mut lin: Vec<(Rat, Rat, Poly2)> = Vec::new();
    for &i in &affine {
        let f = &a.forms()[i];
        let (ai, bi, ci) = (dot(f, &u), dot(f, &v), dot(f, &p));
        if ai.is_zero() && bi.is_zero() {
            return Err(Error::Invalid("degenerate decone: a form is constant on the chart".into()));
        }
        let mut g = Poly2::new();
        for (key, val) in [((1, 0), ai.clone()), ((0, 1), bi.clone()), ((0, 0), ci)] {
            if !val.is_zero() {
                g.insert(key, val);
            }
        }
        lin.push((ai, bi, g));
    }
    // ω_i ∧ ω_j times Π_l g_l is (a_i b_j − a_j b_i) Π_{l≠i,j} g_l.
    let deg = d.saturating_sub(3);
    let m = affine.len();
    let mut pair_vectors = BTreeMap::new();
    let mut ordered_pairs = Vec::new();
    for x in 0..m {
        for y in x + 1..m {
            let w = &lin[x].0 * &lin[y].1 - &lin[y].0 * &lin[x].1;
            let mut prod = Poly2::from([((0, 0), w)]);
            for (z, l) in lin.iter().enumerate() {
                if z != x && z != y {
                    prod = poly_mul(&prod, &l.2);
                }
            }
            let vec = poly_to_vec(&prod, deg);
            pair_vectors.insert((affine[x], affine[y]), vec);
            ordered_pairs.push((x, y));
        }
    }
    let dim_a2 = span_rank(&pair_vectors.values().cloned().collect::<Vec<_>>());
    // Greedy pivot pairs in lexicographic order give the stored basis.
    let mut basis_pairs = Vec::new();
    let mut picked: Vec<Vec<Rat>> = Vec::new();
    for &(x, y) in &ordered_pairs {
        let key = (affine[x], affine[y]);
        let vec = &pair_vectors[&key];
        if !in_span(&row_basis(&picked), vec) {
            picked.push(vec.clone());
            basis_pairs.push(key);
        }
    }
    let d0: Vec<Rat> = affine.iter().map(|&i| r.residues[i].clone()).collect();
    let rank_d0 = usize::from(d0.iter().any(|c| !c.is_zero()));
    // d1(ω_i) = ω ∧ ω_i = Σ_{j≠i} α_j ω_j ∧ ω_i.
    let ambient = pair_vectors.values().next().map_or(1, Vec::len);
    let mut cols: Vec<Vec<Rat>> = Vec::new();
    for x in 0..m {
        let mut col = vec![Rat::zero(); ambient];
        for y in 0..m {
            if y == x {
                continue;
            }
            let (key, sign) = if y < x {
                ((affine[y], affine[x]), Rat::one())
            } else {
                ((affine[x], affine[y]), -Rat::one())
            };
            let coeff = &d0[y] * &sign;
            for (slot, c) in col.iter_mut().zip(&pair_vectors[&key]) {
                *slot = slot.clone() + c * &coeff;
            }
        }
        cols.push(col);
    }
    let rank_d1 = span_rank(&cols);
    let mut d1 = QMatrix::zero(ambient, m);
    for (c, col) in cols.iter().enumerate() {
        for (r, val) in col.iter().enumerate() {
            d1.set(r, c, val.clone());
        }
    }
    debug_assert!({
        let composite: Vec<Rat> = (0..ambient)
            .map(|r| (0..m).fold(Rat::zero(), |s, c| s + d1.get(r, c) * &d0[c]))
            .collect();
        composite.iter().all(Rat::is_zero)
    });
    Ok(AomotoComplex {
        affine,
        dims: (1, m, dim_a2),
        d0,
        d1,
        pair_vectors,
        basis_pairs,
        rank_d0,
        rank_d1,
    })
}

/// Check the nonresonance condition: on every dense edge other than the
/// center, the residues of the hyperplanes through it must not sum to a
/// positive integer.  Returns the offending edges.
pub fn nonresonance_check(a: &Arrangement, r: &ResidueAssignment) -> (bool, Vec<Edge>) {
    let mut violations = Vec::new();
    for e in intersection_lattice(a) {
        if !e.dense || e.codim >= a.dim() {
            continue;
        }
        let sum = e
            .indices
            .iter()
            .fold(Rat::zero(), |s, &i| s + &r.residues[i]);
        if sum.is_integer() && sum.is_positive() {
            violations.push(e);
        }
    }
    (violations.is_empty(), violations)
}

/// Dimension of the image of `span{ω_i ∧ ω_j : i, j ∈ I}` in `H² = A²/im d1`,
/// plus the nonzero / full flags used by the certification rules.
pub fn v_subspace(c: &AomotoComplex, indices: &BTreeSet<usize>) -> (usize, bool, bool) {
    let (_, _, h2) = c.h_numbers();
    let mut rows = c.d1_columns();
    let base = span_rank(&rows);
    debug_assert_eq!(base, c.rank_d1);
    for pair in indices.iter().copied().tuple_combinations::<(usize, usize)>() {
        if let Some(vec) = c.pair_vectors.get(&pair) {
            rows.push(vec.clone());
        }
    }
    let dim = span_rank(&rows) - base;
    (dim, dim > 0, dim == h2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    In,
    NotIn,
    Unknown,
}

#[derive(Clone, Debug, Serialize)]
pub struct Diagnostics {
    pub alpha_prime: Rat,
    pub chi: i64,
    pub binom: u64,
    pub h1: Option<usize>,
    pub h2: Option<usize>,
    pub v_dim: Option<usize>,
    pub v_nonzero: Option<bool>,
    pub v_full: Option<bool>,
    pub chosen_indices: Option<Vec<usize>>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Certification {
    pub alpha: Rat,
    pub verdict_alpha: Verdict,
    pub verdict_alpha_plus_1: Verdict,
    pub rules_fired: Vec<char>,
    pub diagnostics: Diagnostics,
}

/// Certify membership of `k/d` and `k/d + 1` in the root set, firing the six
/// rules in order (a)–(f).  Rules only ever settle a still-unknown verdict;
/// a value that no rule reaches stays `Unknown`, never a guess.
pub fn certify_root(
    a: &Arrangement,
    k: usize,
    supplied: Option<&BTreeSet<usize>>,
    search: bool,
) -> Result<Certification> {
    if a.dim() != 3 {
        return Err(Error::Precondition("rank 3 required".into()));
    }
    let d = a.degree();
    if k < 1 || k > d {
        return Err(Error::Invalid(format!("k = {k} outside 1..={d}")));
    }
    let alpha = Rat::new(k as i64, d as i64)?;
    let ap = alpha_prime(a)?;
    let chi = chi_complement(a)?;
    let binom: u64 = binomial(k as u64 - 1, 2)
        .try_into()
        .map_err(|_| Error::Invalid("binomial overflow".into()))?;
    let mut verdict_alpha = Verdict::Unknown;
    let mut verdict_alpha_plus_1 = Verdict::Unknown;
    let mut rules = Vec::new();
    let mut notes = Vec::new();

    // (a) top two values of k are always roots, and never shifted roots.
    if k >= d - 1 {
        verdict_alpha = Verdict::In;
        verdict_alpha_plus_1 = Verdict::NotIn;
        rules.push('a');
    }

    // (b) below the off-origin threshold, membership is governed by k alone.
    // The rule is read as k ≥ n for inclusion; it never asserts exclusion.
    let below = alpha < ap;
    if below && verdict_alpha == Verdict::Unknown {
        if k >= a.dim() {
            verdict_alpha = Verdict::In;
            rules.push('b');
        } else {
            notes.push(format!("k = {k} < {}: rule (b) gives no inclusion and is not used for exclusion", a.dim()));
        }
    }

    // Pick a residue assignment satisfying nonresonance, if any.
    let assignment = resolve_assignment(a, k, supplied, search, &mut notes)?;
    let complex = assignment
        .as_ref()
        .map(|r| build_aomoto(a, r))
        .transpose()?;
    let mut h1 = None;
    let mut h2 = None;
    if let Some(c) = &complex {
        let (_, c1, c2) = c.h_numbers();
        h1 = Some(c1);
        h2 = Some(c2);
        // (c) small Hodge piece inside a larger eigenspace forces a shifted root.
        if verdict_alpha_plus_1 == Verdict::Unknown && binom < c2 as u64 {
            verdict_alpha_plus_1 = Verdict::In;
            rules.push('c');
        }
    }

    // (d) below the threshold, matching Euler characteristic excludes the
    // shifted value as long as α avoids the local roots mod Z.
    if below && verdict_alpha_plus_1 == Verdict::Unknown && binom == chi.unsigned_abs() && chi >= 0 {
        match r_prime(a) {
            Ok(rp) => {
                let off = !rp.iter().any(|r| (alpha.clone() - r).is_integer());
                if off {
                    verdict_alpha_plus_1 = Verdict::NotIn;
                    rules.push('d');
                } else {
                    notes.push("rule (d) blocked: alpha meets a local root mod Z".into());
                }
            }
            Err(e) => notes.push(format!("rule (d) skipped: local root data unavailable ({e})")),
        }
    }

    // (e)/(f) at or above the threshold, V(I) decides both values.
    let mut v_dim = None;
    let mut v_nonzero = None;
    let mut v_full = None;
    if !below {
        if let (Some(c), Some(r)) = (&complex, &assignment) {
            let (dim, nonzero, full) = v_subspace(c, r.indices());
            v_dim = Some(dim);
            v_nonzero = Some(nonzero);
            v_full = Some(full);
            if verdict_alpha == Verdict::Unknown && nonzero {
                verdict_alpha = Verdict::In;
                rules.push('e');
            }
            if verdict_alpha_plus_1 == Verdict::Unknown && full {
                verdict_alpha_plus_1 = Verdict::NotIn;
                rules.push('f');
            }
        }
    }

    Ok(Certification {
        alpha,
        verdict_alpha,
        verdict_alpha_plus_1,
        rules_fired: rules,
        diagnostics: Diagnostics {
            alpha_prime: ap,
            chi,
            binom,
            h1,
            h2,
            v_dim,
            v_nonzero,
            v_full,
            chosen_indices: assignment.map(|r| r.indices().iter().copied().collect()),
            notes,
        },
    })
}

fn resolve_assignment(
    a: &Arrangement,
    k: usize,
    supplied: Option<&BTreeSet<usize>>,
    search: bool,
    notes: &mut Vec<String>,
) -> Result<Option<ResidueAssignment>> {
    let d = a.degree();
    let inf = a
        .infinity_index()
        .ok_or_else(|| Error::Precondition("infinity index required".into()))?;
    if let Some(indices) = supplied {
        let r = ResidueAssignment::new(a, k, indices.clone())?;
        let (ok, bad) = nonresonance_check(a, &r);
        if ok {
            return Ok(Some(r));
        }
        notes.push(format!(
            "supplied index set is resonant on {} dense edge(s); twisted cohomology unavailable",
            bad.len()
        ));
        return Ok(None);
    }
    if !search {
        return Ok(None);
    }
    let total: u64 = binomial(d as u64 - 1, k as u64 - 1)
        .try_into()
        .unwrap_or(u64::MAX);
    if total > I_SEARCH_CAP {
        notes.push(format!(
            "index-set search skipped: {total} candidates exceed the cap of {I_SEARCH_CAP}"
        ));
        return Ok(None);
    }
    let affine: Vec<usize> = (0..d).filter(|&i| i != inf).collect();
    for combo in affine.into_iter().combinations(k - 1) {
        let r = ResidueAssignment::new(a, k, combo.into_iter().collect())?;
        if nonresonance_check(a, &r).0 {
            return Ok(Some(r));
        }
    }
    notes.push("no nonresonant index set exists for this k".into());
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::tests::{cone_i, cone_ii, cone_iii, cone_iv};

    fn idx(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    // Form order in the test cones (affine lines, infinity last):
    //   (i)   x−1, x+1, y−1, y+1                         d = 5
    //   (ii)  x−1, x+1, y−1, y+1, x+y                    d = 6
    //   (iii) x−y, x+y, x−1, x+1, y+2                    d = 6
    //   (iv)  x−y, x+y, x−1, x+1, y−1, y+1               d = 7

    #[test]
    fn residues_sum_to_zero_and_validate() {
        let a = cone_ii();
        let r = ResidueAssignment::new(&a, 4, idx(&[0, 2, 4])).unwrap();
        assert_eq!(r.alpha(), &crate::rational::rat(2, 3));
        let sum = r.residues().iter().fold(Rat::zero(), |s, x| s + x);
        assert!(sum.is_zero());
        assert!(ResidueAssignment::new(&a, 0, idx(&[])).is_err());
        assert!(ResidueAssignment::new(&a, 7, idx(&[0, 1, 2, 3, 4, 9])).is_err());
        assert!(ResidueAssignment::new(&a, 4, idx(&[0, 2])).is_err());
        assert!(ResidueAssignment::new(&a, 2, idx(&[5])).is_err(), "infinity index is not eligible");
    }

    #[test]
    fn complex_dimensions_match_betti_numbers() {
        // dim A^p equals b_p of the projective complement on each cone.
        let cases: [(Arrangement, BTreeSet<usize>, usize, (usize, usize, usize)); 4] = [
            (cone_i(), idx(&[0, 2]), 3, (1, 4, 4)),
            (cone_ii(), idx(&[0, 2, 4]), 4, (1, 5, 6)),
            (cone_iii(), idx(&[0, 1, 2]), 4, (1, 5, 9)),
            (cone_iv(), idx(&[0, 1, 2, 4]), 5, (1, 6, 9)),
        ];
        for (a, i, k, dims) in cases {
            let r = ResidueAssignment::new(&a, k, i).unwrap();
            assert!(nonresonance_check(&a, &r).0);
            let c = build_aomoto(&a, &r).unwrap();
            assert_eq!(c.dims(), dims);
            let (a0, a1, a2) = c.dims();
            let (h0, h1, h2) = c.h_numbers();
            let chi = chi_complement(&a).unwrap();
            assert_eq!(a0 as i64 - a1 as i64 + a2 as i64, chi);
            assert_eq!(h0 as i64 - h1 as i64 + h2 as i64, chi);
        }
    }

    #[test]
    fn eigenspace_cohomology_values() {
        let a = cone_ii();
        let r = ResidueAssignment::new(&a, 4, idx(&[0, 2, 4])).unwrap();
        let c = build_aomoto(&a, &r).unwrap();
        assert_eq!(c.rank_d1(), 3);
        assert_eq!(c.h_numbers(), (0, 1, 3));

        let a = cone_iii();
        let r = ResidueAssignment::new(&a, 4, idx(&[0, 1, 2])).unwrap();
        let c = build_aomoto(&a, &r).unwrap();
        assert_eq!(c.h_numbers(), (0, 0, 5));

        let a = cone_iv();
        let r = ResidueAssignment::new(&a, 5, idx(&[0, 1, 2, 4])).unwrap();
        let c = build_aomoto(&a, &r).unwrap();
        let (_, _, h2) = c.h_numbers();
        assert_eq!(h2, 4);

        // Nonresonant concentration on the generic-at-this-eigenvalue cone.
        let a = cone_i();
        let r = ResidueAssignment::new(&a, 1, idx(&[])).unwrap();
        let c = build_aomoto(&a, &r).unwrap();
        assert_eq!(c.h_numbers(), (0, 0, 1));
    }

    #[test]
    fn differentials_compose_to_zero() {
        for (a, k) in [(cone_i(), 2), (cone_ii(), 4), (cone_iii(), 3), (cone_iv(), 5)] {
            let r = match resolve_assignment(&a, k, None, true, &mut Vec::new()).unwrap() {
                Some(r) => r,
                None => continue,
            };
            let c = build_aomoto(&a, &r).unwrap();
            for row in 0..c.d1().rows() {
                let s = (0..c.d1().cols())
                    .fold(Rat::zero(), |s, col| s + c.d1().get(row, col) * &c.d0()[col]);
                assert!(s.is_zero());
            }
        }
    }

    #[test]
    fn nonresonance_detects_violations() {
        let a = cone_ii();
        let good = ResidueAssignment::new(&a, 4, idx(&[0, 2, 4])).unwrap();
        assert!(nonresonance_check(&a, &good).0);
        // x−1, y+1, x+y pass through (1, −1); all in I gives sum 3(1 − 2/3) = 1.
        let bad = ResidueAssignment::new(&a, 4, idx(&[0, 3, 4])).unwrap();
        let (ok, edges) = nonresonance_check(&a, &bad);
        assert!(!ok);
        assert!(edges.iter().any(|e| e.indices == vec![0, 3, 4]));
    }

    #[test]
    fn v_subspace_flags() {
        let a = cone_ii();
        let r = ResidueAssignment::new(&a, 4, idx(&[0, 2, 4])).unwrap();
        let c = build_aomoto(&a, &r).unwrap();
        let (dim, nonzero, full) = v_subspace(&c, r.indices());
        assert_eq!((dim, nonzero, full), (3, true, true));
        assert_eq!(v_subspace(&c, &idx(&[0])), (0, false, false));

        let a = cone_iii();
        let r = ResidueAssignment::new(&a, 4, idx(&[0, 1, 2])).unwrap();
        let c = build_aomoto(&a, &r).unwrap();
        let (_, nonzero, full) = v_subspace(&c, r.indices());
        assert!(nonzero && !full);
    }

    #[test]
    fn certification_first_cone() {
        let a = cone_i();
        // k = 3: 3/5 in by (b), 8/5 out by (d) with binom(2,2) = 1 = chi.
        let c = certify_root(&a, 3, None, true).unwrap();
        assert_eq!(c.verdict_alpha, Verdict::In);
        assert_eq!(c.verdict_alpha_plus_1, Verdict::NotIn);
        assert!(c.rules_fired.contains(&'b') && c.rules_fired.contains(&'d'));
        assert_eq!(c.diagnostics.chi, 1);
        assert_eq!(c.diagnostics.binom, 1);
        // k = 1, 2: 6/5 and 7/5 in by (c); 1/5 and 2/5 stay unknown here.
        for k in [1, 2] {
            let c = certify_root(&a, k, None, true).unwrap();
            assert_eq!(c.verdict_alpha_plus_1, Verdict::In);
            assert!(c.rules_fired.contains(&'c'));
            assert_eq!(c.verdict_alpha, Verdict::Unknown);
            assert_eq!(c.diagnostics.h2, Some(1));
        }
        // k = 4, 5: rule (a).
        for k in [4, 5] {
            let c = certify_root(&a, k, None, false).unwrap();
            assert_eq!(c.verdict_alpha, Verdict::In);
            assert_eq!(c.verdict_alpha_plus_1, Verdict::NotIn);
            assert!(c.rules_fired.contains(&'a'));
        }
    }

    #[test]
    fn certification_remaining_cones() {
        let c = certify_root(&cone_ii(), 4, Some(&idx(&[0, 2, 4])), false).unwrap();
        assert_eq!(c.verdict_alpha, Verdict::In);
        assert_eq!(c.verdict_alpha_plus_1, Verdict::NotIn);
        assert!(c.rules_fired.contains(&'e') && c.rules_fired.contains(&'f'));
        assert_eq!((c.diagnostics.h1, c.diagnostics.h2), (Some(1), Some(3)));

        let c = certify_root(&cone_iii(), 4, Some(&idx(&[0, 1, 2])), false).unwrap();
        assert_eq!(c.verdict_alpha, Verdict::In);
        assert_eq!(c.verdict_alpha_plus_1, Verdict::In);
        assert!(c.rules_fired.contains(&'e') && c.rules_fired.contains(&'c'));
        assert_eq!(c.diagnostics.h2, Some(5));
        assert_eq!(c.diagnostics.binom, 3);

        let c = certify_root(&cone_iv(), 5, Some(&idx(&[0, 1, 2, 4])), false).unwrap();
        assert_eq!(c.verdict_alpha, Verdict::In);
        assert_eq!(c.verdict_alpha_plus_1, Verdict::NotIn);
        assert!(c.rules_fired.contains(&'e') && c.rules_fired.contains(&'f'));
        assert_eq!(c.diagnostics.h2, Some(4));
    }

    #[test]
    fn small_hodge_bound_below_threshold() {
        // binom(k−1, 2) never exceeds h² when k/d sits below alpha'.
        for (a, ks) in [(cone_i(), vec![1, 2, 3]), (cone_iv(), vec![1, 2, 3, 4])] {
            let ap = alpha_prime(&a).unwrap();
            for k in ks {
                let alpha = Rat::new(k as i64, a.degree() as i64).unwrap();
                assert!(alpha < ap);
                let c = certify_root(&a, k, None, true).unwrap();
                if let Some(h2) = c.diagnostics.h2 {
                    assert!(c.diagnostics.binom <= h2 as u64);
                }
            }
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        let a = cone_i();
        assert!(certify_root(&a, 0, None, false).is_err());
        assert!(certify_root(&a, 6, None, false).is_err());
        let no_inf = Arrangement::new(3, a.forms().to_vec(), None).unwrap();
        assert!(certify_root(&no_inf, 2, None, true).is_err());
    }
}
