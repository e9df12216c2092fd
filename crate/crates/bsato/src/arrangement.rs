//! Central hyperplane arrangements: intersection lattice, dense edges,
//! multiplicity bounds via m(lambda), Euler/Betti data, lct formulas, and the
//! closed-form b-functions for generic and low-degree rank-3 arrangements.

use crate::error::{Error, Result};
use crate::matrix::{in_span, row_basis, span_rank, QMatrix};
use crate::rational::Rat;
use crate::rootset::{RootMultiset, RootSet};
use itertools::Itertools;
use serde::Serialize;

#[derive(Clone, Debug)]
pub struct Arrangement {
    n: usize,
    forms: Vec<Vec<Rat>>,
    infinity_index: Option<usize>,
}

impl Arrangement {
    pub fn new(n: usize, forms: Vec<Vec<Rat>>, infinity_index: Option<usize>) -> Result<Self> {
        if n == 0 || forms.is_empty() {
            return Err(Error::Invalid("empty arrangement".into()));
        }
        for f in &forms {
            if f.len() != n {
                return Err(Error::Invalid("covector length mismatch".into()));
            }
            if f.iter().all(|c| c.is_zero()) {
                return Err(Error::Invalid("zero covector".into()));
            }
        }
        for (i, j) in (0..forms.len()).tuple_combinations() {
            if span_rank(&[forms[i].clone(), forms[j].clone()]) < 2 {
                return Err(Error::NotReduced(i, j));
            }
        }
        if span_rank(&forms) != n {
            return Err(Error::NotEssential);
        }
        if let Some(k) = infinity_index {
            if k >= forms.len() {
                return Err(Error::Invalid("infinity index out of range".into()));
            }
        }
        Ok(Arrangement {
            n,
            forms,
            infinity_index,
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.forms.len()
    }

    pub fn forms(&self) -> &[Vec<Rat>] {
        &self.forms
    }

    pub fn infinity_index(&self) -> Option<usize> {
        self.infinity_index
    }

    pub fn with_infinity(&self, k: usize) -> Result<Self> {
        Arrangement::new(self.n, self.forms.clone(), Some(k))
    }

    fn require_proper(&self) -> Result<()> {
        if self.degree() > self.n {
            Ok(())
        } else {
            Err(Error::DegreeTooSmall)
        }
    }

    /// Every n-subset of the forms is linearly independent.
    pub fn is_generic(&self) -> bool {
        (0..self.degree())
            .combinations(self.n)
            .all(|s| span_rank(&s.iter().map(|&i| self.forms[i].clone()).collect::<Vec<_>>()) == self.n)
    }
}

#[derive(Clone, Debug)]
pub struct Edge {
    /// all hyperplane indices containing L (closed, sorted)
    pub indices: Vec<usize>,
    pub basis: Vec<Vec<Rat>>,
    pub m_l: usize,
    pub codim: usize,
    pub dense: bool,
}

impl Edge {
    pub fn is_center(&self, n: usize) -> bool {
        self.codim == n
    }
}

/// L ⊆ L' in subspace terms is index-set containment the other way around.
fn subspace_leq(l: &Edge, lp: &Edge) -> bool {
    lp.indices.iter().all(|i| l.indices.contains(i))
}

fn closure(forms: &[Vec<Rat>], subset: &[usize]) -> Vec<usize> {
    let span: Vec<Vec<Rat>> = subset.iter().map(|&i| forms[i].clone()).collect();
    (0..forms.len())
        .filter(|&j| in_span(&span, &forms[j]))
        .collect()
}

/// Indecomposability of a central arrangement given by covectors: no
/// bipartition into nonempty parts with rank(S1) + rank(S2) = rank(all).
fn indecomposable(sub: &[Vec<Rat>]) -> bool {
    let m = sub.len();
    if m == 1 {
        return true;
    }
    let total = span_rank(sub);
    for mask in 0..(1usize << (m - 1)) {
        // element m-1 always in part B keeps partitions unordered
        let a: Vec<Vec<Rat>> = (0..m - 1).filter(|i| mask >> i & 1 == 1).map(|i| sub[i].clone()).collect();
        let b: Vec<Vec<Rat>> = (0..m)
            .filter(|&i| i == m - 1 || mask >> i & 1 == 0)
            .map(|i| sub[i].clone())
            .collect();
        if a.is_empty() {
            continue;
        }
        if span_rank(&a) + span_rank(&b) == total {
            return false;
        }
    }
    true
}

pub fn intersection_lattice(a: &Arrangement) -> Vec<Edge> {
    let d = a.degree();
    let mut seen: Vec<Vec<usize>> = Vec::new();
    let mut edges: Vec<Edge> = Vec::new();
    for subset in (0..d).powerset().filter(|s| !s.is_empty()) {
        let indices = closure(&a.forms, &subset);
        if seen.contains(&indices) {
            continue;
        }
        seen.push(indices.clone());
        let rows: Vec<Vec<Rat>> = indices.iter().map(|&i| a.forms[i].clone()).collect();
        let codim = span_rank(&rows);
        let basis = row_basis(&QMatrix::from_rows(&rows).nullspace());
        let dense = indecomposable(&rows);
        edges.push(Edge {
            m_l: indices.len(),
            indices,
            basis,
            codim,
            dense,
        });
    }
    edges.sort_by(|x, y| (x.codim, &x.indices).cmp(&(y.codim, &y.indices)));
    edges
}

pub fn is_dense(l: &Edge) -> bool {
    l.dense
}

fn edge_of(edges: &[Edge], indices: &[usize]) -> usize {
    edges
        .iter()
        .position(|e| e.indices == indices)
        .expect("intersection of edges is an edge")
}

fn strongly_adjacent(a: &Arrangement, edges: &[Edge], i: usize, j: usize) -> bool {
    let (l, lp) = (&edges[i], &edges[j]);
    if subspace_leq(l, lp) || subspace_leq(lp, l) {
        return true;
    }
    let union: Vec<usize> = l
        .indices
        .iter()
        .chain(&lp.indices)
        .copied()
        .sorted()
        .dedup()
        .collect();
    let meet = edge_of(edges, &closure(&a.forms, &union));
    !edges[meet].dense
}

/// Exact maximum clique by branch and bound; graphs here have < 40 vertices.
fn max_clique(adj: &[Vec<bool>]) -> (usize, Vec<usize>) {
    fn extend(
        adj: &[Vec<bool>],
        cur: &mut Vec<usize>,
        cand: &[usize],
        best: &mut (usize, Vec<usize>),
    ) {
        if cur.len() > best.0 {
            *best = (cur.len(), cur.clone());
        }
        if cur.len() + cand.len() <= best.0 {
            return;
        }
        for (pos, &v) in cand.iter().enumerate() {
            let next: Vec<usize> = cand[pos + 1..]
                .iter()
                .copied()
                .filter(|&w| adj[v][w])
                .collect();
            cur.push(v);
            extend(adj, cur, &next, best);
            cur.pop();
        }
    }
    let verts: Vec<usize> = (0..adj.len()).collect();
    let mut best = (0, Vec::new());
    extend(adj, &mut Vec::new(), &verts, &mut best);
    best
}

/// m(lambda) for lambda of the given multiplicative order, with the witness
/// set of dense edges realizing it.
pub fn m_lambda(a: &Arrangement, lambda_order: usize) -> (usize, Vec<Edge>) {
    assert!(lambda_order >= 1);
    let edges = intersection_lattice(a);
    let de: Vec<usize> = (0..edges.len())
        .filter(|&i| edges[i].dense && edges[i].m_l % lambda_order == 0)
        .collect();
    let adj: Vec<Vec<bool>> = de
        .iter()
        .map(|&i| {
            de.iter()
                .map(|&j| i != j && strongly_adjacent(a, &edges, i, j))
                .collect()
        })
        .collect();
    let (size, witness) = max_clique(&adj);
    (size, witness.into_iter().map(|k| edges[de[k]].clone()).collect())
}

/// Candidate roots: integers over dense-edge multiplicities, cut to the
/// window (0, 2 - 1/d).
pub fn root_candidates(a: &Arrangement) -> Result<RootSet> {
    a.require_proper()?;
    let d = a.degree() as i64;
    let bound = Rat::int(2) - &Rat::new(1, d)?;
    let mut out = RootSet::new();
    for e in intersection_lattice(a).iter().filter(|e| e.dense) {
        let m = e.m_l as i64;
        let mut j = 1i64;
        loop {
            let r = Rat::new(j, m)?;
            if r >= bound {
                break;
            }
            out.insert(r)?;
            j += 1;
        }
    }
    Ok(out)
}

/// Upper bound for the multiplicity of a candidate root, with an exactness
/// flag where a theorem pins the value down.
pub fn multiplicity_bounds(a: &Arrangement, alpha: &Rat) -> Result<(usize, bool)> {
    let candidates = root_candidates(a)?;
    if !candidates.contains(alpha) {
        return Err(Error::Precondition(format!("{alpha} is not a candidate root")));
    }
    if alpha.is_integer() {
        return Ok((a.dim(), true)); // the multiplicity of 1 is exactly n
    }
    let edges = intersection_lattice(a);
    let dense: Vec<usize> = (0..edges.len()).filter(|&i| edges[i].dense).collect();
    let coprime = dense.iter().tuple_combinations().all(|(&i, &j)| {
        !strongly_adjacent(a, &edges, i, j)
            || num::integer::gcd(edges[i].m_l, edges[j].m_l) == 1
    });
    if coprime {
        return Ok((1, true));
    }
    let order = alpha
        .denom()
        .try_into()
        .map_err(|_| Error::Invalid("denominator too large".into()))?;
    Ok((m_lambda(a, order).0, false))
}

#[derive(Clone, Debug, Serialize)]
pub struct EulerBetti {
    pub nu3: usize,
    pub nu2_prime: usize,
    pub nu3_prime: usize,
    pub b0: usize,
    pub b1: usize,
    pub b2: usize,
    pub chi: i64,
}

fn codim2_edges(a: &Arrangement) -> Result<Vec<Edge>> {
    let edges: Vec<Edge> = intersection_lattice(a)
        .into_iter()
        .filter(|e| e.codim == 2)
        .collect();
    if edges.iter().any(|e| e.m_l > 3) {
        return Err(Error::MultiplicityTooLarge);
    }
    Ok(edges)
}

/// Betti numbers of the affine complement and Euler characteristic of the
/// projective complement, for rank-3 arrangements with multiplicities <= 3.
pub fn euler_betti(a: &Arrangement) -> Result<EulerBetti> {
    if a.dim() != 3 {
        return Err(Error::Precondition("rank 3 required".into()));
    }
    let inf = a
        .infinity_index
        .ok_or_else(|| Error::Precondition("infinity index required".into()))?;
    let points = codim2_edges(a)?;
    let d = a.degree();
    let nu3 = points.iter().filter(|e| e.m_l == 3).count();
    let affine = |e: &&Edge| !e.indices.contains(&inf);
    let nu2_prime = points.iter().filter(|e| e.m_l == 2).filter(affine).count();
    let nu3_prime = points.iter().filter(|e| e.m_l == 3).filter(affine).count();
    let b1 = d - 1;
    let b2 = nu2_prime + 2 * nu3_prime;
    let chi = 1 - b1 as i64 + b2 as i64;
    let expected = ((d as i64 - 2) * (d as i64 - 3)) / 2 - nu3 as i64;
    assert_eq!(chi, expected, "Euler identity violated");
    Ok(EulerBetti {
        nu3,
        nu2_prime,
        nu3_prime,
        b0: 1,
        b1,
        b2,
        chi,
    })
}

/// chi of the projective complement without the multiplicity restriction.
pub fn chi_complement(a: &Arrangement) -> Result<i64> {
    if a.dim() != 3 {
        return Err(Error::Precondition("rank 3 required".into()));
    }
    let d = a.degree() as i64;
    let sum: i64 = intersection_lattice(a)
        .iter()
        .filter(|e| e.codim == 2)
        .map(|e| e.m_l as i64 - 1)
        .sum();
    Ok(3 - 2 * d + sum)
}

/// Minimal local lct away from the origin: min codim(L)/m_L over edges != {0}.
pub fn alpha_prime(a: &Arrangement) -> Result<Rat> {
    a.require_proper()?;
    intersection_lattice(a)
        .iter()
        .filter(|e| e.codim < a.dim())
        .map(|e| Rat::new(e.codim as i64, e.m_l as i64).unwrap())
        .min()
        .ok_or_else(|| Error::Invalid("no proper edges".into()))
}

/// The lct of the arrangement: min(alpha_prime, n/d), always < 1.
pub fn alpha_min(a: &Arrangement) -> Result<Rat> {
    a.require_proper()?;
    let nd = Rat::new(a.dim() as i64, a.degree() as i64)?;
    let out = alpha_prime(a)?.min(nd);
    assert!(out < Rat::one());
    Ok(out)
}

/// Root multiset of the generic-arrangement b-function: j/d for
/// n <= j <= 2d-2 except j = d, plus the root 1 with multiplicity n.
pub fn generic_bfunction(a: &Arrangement) -> Result<RootMultiset> {
    a.require_proper()?;
    if !a.is_generic() {
        return Err(Error::NotGeneric);
    }
    let (n, d) = (a.dim(), a.degree() as i64);
    let mut out = RootMultiset::new();
    out.add(Rat::one(), n as u64)?;
    for j in n as i64..=2 * d - 2 {
        if j != d {
            out.add(Rat::new(j, d)?, 1)?;
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub enum LowDegreeB {
    Determined { r: usize, roots: RootMultiset },
    /// d = 7 with four triple points: the theorem allows both values of r.
    Indeterminate { candidates: Vec<RootMultiset> },
}

fn low_degree_roots(d: usize, r: usize) -> Result<RootMultiset> {
    let mut out = RootMultiset::new();
    out.add(Rat::one(), 1)?;
    for i in 2..=4i64 {
        out.add(Rat::new(i, 3)?, 1)?;
    }
    for j in 3..=r as i64 {
        out.add(Rat::new(j, d as i64)?, 1)?;
    }
    Ok(out)
}

/// The closed-form b-function for rank 3, d <= 7, multiplicities <= 3 and at
/// least one triple point.
pub fn bfunction_n3_low_degree(a: &Arrangement) -> Result<LowDegreeB> {
    if a.dim() != 3 {
        return Err(Error::Precondition("rank 3 required".into()));
    }
    a.require_proper()?;
    let d = a.degree();
    if d > 7 {
        return Err(Error::Precondition("degree at most 7 required".into()));
    }
    let nu3 = codim2_edges(a)?.iter().filter(|e| e.m_l == 3).count();
    if nu3 == 0 {
        return Err(Error::Precondition("at least one triple point required".into()));
    }
    let r = if nu3 < d - 3 {
        Some(2 * d - 2)
    } else if d < 7 {
        Some(2 * d - 3)
    } else if nu3 > 4 {
        Some(2 * d - 3)
    } else if nu3 < 4 {
        Some(2 * d - 2)
    } else {
        None
    };
    match r {
        Some(r) => Ok(LowDegreeB::Determined {
            r,
            roots: low_degree_roots(d, r)?,
        }),
        None => Ok(LowDegreeB::Indeterminate {
            candidates: vec![low_degree_roots(d, 2 * d - 3)?, low_degree_roots(d, 2 * d - 2)?],
        }),
    }
}

/// Local root sets at generic points of each nonzero edge, and their union
/// R'_f: {1} along double points and smooth points, {2/3, 1, 4/3} at triples.
pub fn local_root_data(a: &Arrangement) -> Result<Vec<(Edge, RootSet)>> {
    if a.dim() != 3 {
        return Err(Error::Precondition("rank 3 required".into()));
    }
    let mut out = Vec::new();
    let one = RootSet::from_iter_checked([Rat::one()])?;
    let triple = RootSet::from_iter_checked([
        Rat::new(2, 3)?,
        Rat::one(),
        Rat::new(4, 3)?,
    ])?;
    for e in intersection_lattice(a) {
        if e.codim == a.dim() {
            continue;
        }
        let roots = match (e.codim, e.m_l) {
            (1, _) => one.clone(),
            (2, 2) => one.clone(),
            (2, 3) => triple.clone(),
            _ => return Err(Error::MultiplicityTooLarge),
        };
        out.push((e, roots));
    }
    Ok(out)
}

pub fn r_prime(a: &Arrangement) -> Result<RootSet> {
    Ok(local_root_data(a)?
        .into_iter()
        .fold(RootSet::new(), |acc, (_, rs)| acc.union(&rs)))
}

/// Cone an affine line arrangement (rows a, b, c meaning ax + by = c): the
/// homogenized forms plus the line at infinity, which becomes the deconing
/// hyperplane.
pub fn cone_from_affine(lines: &[[Rat; 3]]) -> Result<Arrangement> {
    if lines.is_empty() {
        return Err(Error::Invalid("no affine lines".into()));
    }
    let mut forms: Vec<Vec<Rat>> = lines
        .iter()
        .map(|[a, b, c]| vec![a.clone(), b.clone(), -c])
        .collect();
    forms.push(vec![Rat::zero(), Rat::zero(), Rat::one()]);
    let inf = forms.len() - 1;
    Arrangement::new(3, forms, Some(inf))
}

#[derive(Clone, Debug, Serialize)]
pub struct EdgeSummary {
    pub indices: Vec<usize>, // 1-based for reporting
    pub m: usize,
    pub codim: usize,
    pub dense: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ArrangementReport {
    pub n: usize,
    pub d: usize,
    pub edges: Vec<EdgeSummary>,
    pub betti: Option<EulerBetti>,
    pub alpha_prime: Rat,
    pub alpha_min: Rat,
    pub candidates: RootSet,
    pub r: Option<usize>,
    pub bfunction: Option<RootMultiset>,
    pub indeterminate: bool,
}

pub fn build_report(a: &Arrangement) -> Result<ArrangementReport> {
    let edges = intersection_lattice(a)
        .into_iter()
        .map(|e| EdgeSummary {
            indices: e.indices.iter().map(|i| i + 1).collect(),
            m: e.m_l,
            codim: e.codim,
            dense: e.dense,
        })
        .collect();
    let betti = if a.dim() == 3 && a.infinity_index.is_some() {
        match euler_betti(a) {
            Ok(eb) => Some(eb),
            Err(Error::MultiplicityTooLarge) => None,
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    let (mut r, mut bfunction, mut indeterminate) = (None, None, false);
    if a.is_generic() {
        bfunction = Some(generic_bfunction(a)?);
    } else if a.dim() == 3 && a.degree() <= 7 {
        match bfunction_n3_low_degree(a) {
            Ok(LowDegreeB::Determined { r: rr, roots }) => {
                r = Some(rr);
                bfunction = Some(roots);
            }
            Ok(LowDegreeB::Indeterminate { .. }) => indeterminate = true,
            Err(Error::Precondition(_)) | Err(Error::MultiplicityTooLarge) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(ArrangementReport {
        n: a.dim(),
        d: a.degree(),
        edges,
        betti,
        alpha_prime: alpha_prime(a)?,
        alpha_min: alpha_min(a)?,
        candidates: root_candidates(a)?,
        r,
        bfunction,
        indeterminate,
    })
}
