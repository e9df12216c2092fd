//! Newton polyhedra of monomial ideals: facet/face enumeration for n <= 3,
//! face functionals, and exact membership in the difference semigroups
//! attached to each face.

use crate::error::{Error, Result};
use crate::lattice::IntLattice;
use crate::matrix::{row_basis, span_rank, QMatrix};
use crate::rational::Rat;
use itertools::Itertools;
use num::bigint::BigInt;
use num::{Signed, Zero};
use std::collections::HashMap;
use std::sync::Mutex;

pub type Expo = Vec<BigInt>;

fn expo(v: &[i64]) -> Expo {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// L(u) for a rational covector L and an integer point u.
pub fn eval(l: &[Rat], u: &[BigInt]) -> Rat {
    l.iter()
        .zip(u)
        .fold(Rat::zero(), |acc, (c, x)| acc + &(c * &Rat::from(x.clone())))
}

fn dominates(u: &[BigInt], v: &[BigInt]) -> bool {
    u.iter().zip(v).all(|(a, b)| a >= b)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    n: usize,
    generators: Vec<Expo>,
}

impl MonomialIdeal {
    pub fn new(n: usize, generators: Vec<Expo>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("dimension must be at least 1".into()));
        }
        if generators.is_empty() {
            return Err(Error::Invalid("empty generating set".into()));
        }
        for g in &generators {
            if g.len() != n {
                return Err(Error::Invalid(format!(
                    "generator has {} coordinates, expected {n}",
                    g.len()
                )));
            }
            if g.iter().any(|x| x.is_negative()) {
                return Err(Error::Invalid("negative exponent".into()));
            }
            if g.iter().all(Zero::is_zero) {
                return Err(Error::UnitIdeal);
            }
        }
        // keep only the minimal generators
        let mut minimal: Vec<Expo> = Vec::new();
        for g in &generators {
            if generators
                .iter()
                .any(|h| h != g && dominates(g, h) && !dominates(h, g))
            {
                continue;
            }
            if !minimal.contains(g) {
                minimal.push(g.clone());
            }
        }
        minimal.sort();
        Ok(MonomialIdeal {
            n,
            generators: minimal,
        })
    }

    pub fn from_ints(n: usize, gens: &[&[i64]]) -> Result<Self> {
        MonomialIdeal::new(n, gens.iter().map(|g| expo(g)).collect())
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Expo] {
        &self.generators
    }

    pub fn max_coord(&self) -> BigInt {
        self.generators
            .iter()
            .flat_map(|g| g.iter())
            .max()
            .cloned()
            .unwrap()
    }

    /// x^u lies in the ideal iff u dominates some generator.
    pub fn contains_point(&self, u: &[BigInt]) -> bool {
        u.iter().all(|x| !x.is_negative()) && self.generators.iter().any(|g| dominates(u, g))
    }
}

#[derive(Clone, Debug)]
pub struct Facet {
    pub normal: Vec<Rat>,
    pub offset: Rat,
}

#[derive(Clone, Debug)]
pub struct Face {
    pub dim: usize,
    pub vertices: Vec<Expo>,
    pub rays: Vec<usize>,
    pub active_facets: Vec<usize>,
    pub in_coordinate_hyperplane: bool,
    pub v_q_basis: Vec<Vec<Rat>>,
    l_q: Option<Vec<Rat>>,
}

impl Face {
    pub fn is_compact(&self) -> bool {
        self.rays.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct NewtonPolyhedron {
    pub n: usize,
    pub vertices: Vec<Expo>,
    pub facets: Vec<Facet>,
    pub faces: Vec<Face>,
}

/// L_Q: the covector with value 1 everywhere on the face, taken from the
/// lexicographically smallest containing facet with positive offset.
pub fn face_functional(q: &Face) -> Result<Vec<Rat>> {
    q.l_q.clone().ok_or(Error::CoordinateFace)
}

pub fn build_polyhedron(a: &MonomialIdeal) -> Result<NewtonPolyhedron> {
    let n = a.dim();
    if n > 3 {
        return Err(Error::UnsupportedDimension(n));
    }
    let gens = a.generators();

    // Candidate facet normals: solve for covectors vanishing on chosen
    // coordinate directions and constant on chosen generator subsets.
    let mut normals: Vec<Vec<Rat>> = Vec::new();
    let mut push_normal = |l: Vec<Rat>| {
        if !normals.contains(&l) {
            normals.push(l);
        }
    };
    for k in 1..=n {
        for s in (0..gens.len()).combinations(k) {
            for r in (0..n).combinations(n - k) {
                let mut rows: Vec<Vec<Rat>> = Vec::new();
                let g0 = &gens[s[0]];
                for &gi in &s[1..] {
                    // lambda . (g_i - g_0) = 0
                    rows.push(
                        gens[gi]
                            .iter()
                            .zip(g0)
                            .map(|(x, y)| Rat::from(x - y))
                            .collect(),
                    );
                }
                for &i in &r {
                    let mut row = vec![Rat::zero(); n];
                    row[i] = Rat::one();
                    rows.push(row);
                }
                let ns = if rows.is_empty() {
                    // n = 1, single generator: normal is free
                    vec![vec![Rat::one()]]
                } else {
                    QMatrix::from_rows(&rows).nullspace()
                };
                if ns.len() != 1 {
                    continue;
                }
                let mut l = ns.into_iter().next().unwrap();
                if l.iter().any(|c| c.is_negative()) {
                    for c in l.iter_mut() {
                        *c = -&*c;
                    }
                }
                if l.iter().any(|c| c.is_negative()) || l.iter().all(|c| c.is_zero()) {
                    continue;
                }
                push_normal(l);
            }
        }
    }
    // coordinate hyperplane normals (faces on the boundary of the orthant)
    for i in 0..n {
        let mut l = vec![Rat::zero(); n];
        l[i] = Rat::one();
        push_normal(l);
    }

    // A candidate becomes a facet when its tight set has affine dimension n-1.
    let mut facets: Vec<Facet> = Vec::new();
    for l in normals {
        let offset = gens.iter().map(|g| eval(&l, g)).min().unwrap();
        let tight: Vec<&Expo> = gens.iter().filter(|g| eval(&l, g) == offset).collect();
        let rays: Vec<usize> = (0..n).filter(|&i| l[i].is_zero()).collect();
        let mut span: Vec<Vec<Rat>> = tight[1..]
            .iter()
            .map(|g| g.iter().zip(tight[0]).map(|(x, y)| Rat::from(x - y)).collect())
            .collect();
        for &i in &rays {
            let mut row = vec![Rat::zero(); n];
            row[i] = Rat::one();
            span.push(row);
        }
        if span_rank(&span) != n - 1 {
            continue;
        }
        // normalize: offset 1 when possible, else leading coefficient 1
        let scale = if offset.is_positive() {
            offset.recip().unwrap()
        } else {
            l.iter().find(|c| !c.is_zero()).unwrap().recip().unwrap()
        };
        let normal: Vec<Rat> = l.iter().map(|c| c * &scale).collect();
        let offset = &offset * &scale;
        if !facets.iter().any(|f| f.normal == normal) {
            facets.push(Facet { normal, offset });
        }
    }
    facets.sort_by(|a, b| a.normal.cmp(&b.normal));

    // vertices: generators where the active facet normals span everything
    let active_at = |g: &Expo| -> Vec<usize> {
        facets
            .iter()
            .enumerate()
            .filter(|(_, f)| eval(&f.normal, g) == f.offset)
            .map(|(i, _)| i)
            .collect()
    };
    let vertices: Vec<Expo> = gens
        .iter()
        .filter(|g| {
            let act = active_at(g);
            let rows: Vec<Vec<Rat>> = act.iter().map(|&i| facets[i].normal.clone()).collect();
            span_rank(&rows) == n
        })
        .cloned()
        .collect();

    // Faces: intersections of facet subsets, deduplicated by their closed
    // active-facet sets.
    let mut faces: Vec<Face> = Vec::new();
    let mut seen: Vec<Vec<usize>> = Vec::new();
    for sel in (0..facets.len()).powerset().filter(|s| !s.is_empty()) {
        let fverts: Vec<Expo> = vertices
            .iter()
            .filter(|v| sel.iter().all(|&j| eval(&facets[j].normal, v) == facets[j].offset))
            .cloned()
            .collect();
        if fverts.is_empty() {
            continue;
        }
        let frays: Vec<usize> = (0..n)
            .filter(|&i| sel.iter().all(|&j| facets[j].normal[i].is_zero()))
            .collect();
        // closure: every facet containing all vertices and rays of the face
        let active: Vec<usize> = (0..facets.len())
            .filter(|&j| {
                fverts
                    .iter()
                    .all(|v| eval(&facets[j].normal, v) == facets[j].offset)
                    && frays.iter().all(|&i| facets[j].normal[i].is_zero())
            })
            .collect();
        if seen.contains(&active) {
            continue;
        }
        seen.push(active.clone());

        let fverts: Vec<Expo> = vertices
            .iter()
            .filter(|v| {
                active
                    .iter()
                    .all(|&j| eval(&facets[j].normal, v) == facets[j].offset)
            })
            .cloned()
            .collect();
        let mut span: Vec<Vec<Rat>> = fverts[1..]
            .iter()
            .map(|v| v.iter().zip(&fverts[0]).map(|(x, y)| Rat::from(x - y)).collect())
            .collect();
        for &i in &frays {
            let mut row = vec![Rat::zero(); n];
            row[i] = Rat::one();
            span.push(row);
        }
        let dim = span_rank(&span);
        let in_coord = (0..n)
            .any(|i| !frays.contains(&i) && fverts.iter().all(|v| v[i].is_zero()));
        let l_q = active
            .iter()
            .filter(|&&j| facets[j].offset.is_positive())
            .map(|&j| {
                let inv = facets[j].offset.recip().unwrap();
                facets[j].normal.iter().map(|c| c * &inv).collect::<Vec<Rat>>()
            })
            .min();
        let mut vq: Vec<Vec<Rat>> = fverts
            .iter()
            .map(|v| v.iter().map(|x| Rat::from(x.clone())).collect())
            .collect();
        for &i in &frays {
            let mut row = vec![Rat::zero(); n];
            row[i] = Rat::one();
            vq.push(row);
        }
        faces.push(Face {
            dim,
            vertices: fverts,
            rays: frays,
            active_facets: active,
            in_coordinate_hyperplane: in_coord,
            v_q_basis: row_basis(&vq),
            l_q,
        });
    }
    faces.sort_by(|a, b| (a.dim, &a.vertices, &a.rays).cmp(&(b.dim, &b.vertices, &b.rays)));

    Ok(NewtonPolyhedron {
        n,
        vertices,
        facets,
        faces,
    })
}

impl NewtonPolyhedron {
    pub fn contains(&self, u: &[BigInt]) -> bool {
        u.iter().all(|x| !x.is_negative())
            && self
                .facets
                .iter()
                .all(|f| eval(&f.normal, u) >= f.offset)
    }

    /// Faces eligible for root computation: positive-dimensional data exists
    /// and the face avoids the coordinate hyperplanes.
    pub fn admissible_faces(&self) -> impl Iterator<Item = &Face> {
        self.faces
            .iter()
            .filter(|q| !q.in_coordinate_hyperplane && q.l_q.is_some())
    }

    /// Lattice points of Γ_a on the face Q. Unbounded directions are cut off
    /// at max generator coordinate + n, which is enough for every window any
    /// caller builds.
    pub fn gamma_points_on_face(&self, a: &MonomialIdeal, q: &Face) -> Vec<Expo> {
        let n = self.n;
        let cap = a.max_coord() + BigInt::from(n);
        let mut lo = vec![BigInt::zero(); n];
        let mut hi = vec![BigInt::zero(); n];
        for i in 0..n {
            lo[i] = q.vertices.iter().map(|v| v[i].clone()).min().unwrap();
            hi[i] = q.vertices.iter().map(|v| v[i].clone()).max().unwrap();
            if q.rays.contains(&i) {
                hi[i] = hi[i].clone().max(cap.clone());
            }
        }
        let mut out = Vec::new();
        let ranges: Vec<Vec<BigInt>> = (0..n)
            .map(|i| num::iter::range_inclusive(lo[i].clone(), hi[i].clone()).collect())
            .collect();
        for u in ranges.into_iter().multi_cartesian_product() {
            let on_face = q
                .active_facets
                .iter()
                .all(|&j| eval(&self.facets[j].normal, &u) == self.facets[j].offset);
            if on_face && self.contains(&u) && a.contains_point(&u) {
                out.push(u);
            }
        }
        out.sort();
        out
    }
}

/// The difference semigroup M_Q (and its shift M′_Q) presented by graded
/// generators plus the degree-zero lattice G_Q.
#[derive(Debug)]
pub struct SemigroupPresentation {
    n: usize,
    l_q: Vec<Rat>,
    positive_generators: Vec<(Expo, Rat)>,
    torsion: Vec<Expo>, // degree-zero generators outside G_Q
    group: IntLattice,
    anchor: Expo,
    memo: Mutex<HashMap<Vec<BigInt>, bool>>,
}

const TORSION_CAP: usize = 4096;

pub fn semigroup_data(
    a: &MonomialIdeal,
    p: &NewtonPolyhedron,
    q: &Face,
) -> Result<SemigroupPresentation> {
    let n = p.n;
    let l_q = face_functional(q)?;
    let pts = p.gamma_points_on_face(a, q);
    assert!(!pts.is_empty(), "face of P_a without ideal lattice points");
    let anchor = pts[0].clone(); // sorted, so lexicographically smallest
    let diffs: Vec<Expo> = pts
        .iter()
        .map(|v| v.iter().zip(&anchor).map(|(x, y)| x - y).collect())
        .collect();
    let group = IntLattice::from_rows(n, &diffs);

    let mut positive: Vec<(Expo, Rat)> = Vec::new();
    let mut torsion: Vec<Expo> = Vec::new();
    let add = |d: Expo, deg: Rat, positive: &mut Vec<(Expo, Rat)>, torsion: &mut Vec<Expo>| {
        if deg.is_positive() {
            if !positive.iter().any(|(v, _)| *v == d) {
                positive.push((d, deg));
            }
        } else if !group.contains(&d) && !torsion.contains(&d) {
            torsion.push(d);
        }
    };
    for g in a.generators() {
        let deg = eval(&l_q, g) - &Rat::one();
        for v in &pts {
            let d: Expo = g.iter().zip(v).map(|(x, y)| x - y).collect();
            add(d, deg.clone(), &mut positive, &mut torsion);
        }
    }
    for i in 0..n {
        let mut d = vec![BigInt::zero(); n];
        d[i] = BigInt::from(1);
        add(d, l_q[i].clone(), &mut positive, &mut torsion);
    }
    // larger degrees first tightens the search
    positive.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
    Ok(SemigroupPresentation {
        n,
        l_q,
        positive_generators: positive,
        torsion,
        group,
        anchor,
        memo: Mutex::new(HashMap::new()),
    })
}

impl SemigroupPresentation {
    pub fn anchor(&self) -> &Expo {
        &self.anchor
    }

    pub fn group(&self) -> &IntLattice {
        &self.group
    }

    pub fn positive_generators(&self) -> &[(Expo, Rat)] {
        &self.positive_generators
    }

    /// w ∈ M_Q (shifted = false) or w ∈ M′_Q = anchor + M_Q (shifted = true).
    pub fn member(&self, w: &[BigInt], shifted: bool) -> bool {
        assert_eq!(w.len(), self.n);
        let w: Expo = if shifted {
            w.iter().zip(&self.anchor).map(|(x, y)| x - y).collect()
        } else {
            w.to_vec()
        };
        let deg = eval(&self.l_q, &w);
        if deg.is_negative() {
            return false;
        }
        // membership is constant on cosets of G_Q
        let key = self.group.reduce(&w);
        if let Some(&hit) = self.memo.lock().unwrap().get(&key) {
            return hit;
        }
        let result = self.search(0, &deg, &w);
        self.memo.lock().unwrap().insert(key, result);
        result
    }

    fn search(&self, idx: usize, rem: &Rat, residual: &Expo) -> bool {
        if idx == self.positive_generators.len() {
            return rem.is_zero() && self.zero_reachable(residual);
        }
        let (gen, deg) = &self.positive_generators[idx];
        let mut rem = rem.clone();
        let mut residual = residual.clone();
        loop {
            if self.search(idx + 1, &rem, &residual) {
                return true;
            }
            rem = rem - deg;
            if rem.is_negative() {
                return false;
            }
            for (r, g) in residual.iter_mut().zip(gen) {
                *r -= g;
            }
        }
    }

    /// Can the degree-zero residual be written as (torsion sum) + G_Q element?
    fn zero_reachable(&self, residual: &Expo) -> bool {
        let start = self.group.reduce(residual);
        if start.iter().all(Zero::is_zero) {
            return true;
        }
        if self.torsion.is_empty() {
            return false;
        }
        let mut queue = vec![start.clone()];
        let mut seen: Vec<Expo> = vec![start];
        while let Some(cur) = queue.pop() {
            for t in &self.torsion {
                let next: Expo = cur.iter().zip(t).map(|(x, y)| x - y).collect();
                let next = self.group.reduce(&next);
                if next.iter().all(Zero::is_zero) {
                    return true;
                }
                if !seen.contains(&next) {
                    if seen.len() >= TORSION_CAP {
                        return false;
                    }
                    seen.push(next.clone());
                    queue.push(next);
                }
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn ideal_753() -> MonomialIdeal {
        // third worked example: generators xy^5, x^3y^2, x^4y
        MonomialIdeal::from_ints(2, &[&[1, 5], &[3, 2], &[4, 1]]).unwrap()
    }

    #[test]
    fn rejects_unit_ideal_and_bad_dims() {
        assert!(matches!(
            MonomialIdeal::from_ints(2, &[&[0, 0]]),
            Err(Error::UnitIdeal)
        ));
        let a = MonomialIdeal::from_ints(4, &[&[1, 0, 0, 0]]).unwrap();
        assert!(matches!(
            build_polyhedron(&a),
            Err(Error::UnsupportedDimension(4))
        ));
    }

    #[test]
    fn minimalization_drops_dominated_generators() {
        let a = MonomialIdeal::from_ints(2, &[&[1, 5], &[3, 2], &[4, 1], &[4, 4]]).unwrap();
        assert_eq!(a.generators().len(), 3);
    }

    #[test]
    fn polygon_of_third_example() {
        let a = ideal_753();
        let p = build_polyhedron(&a).unwrap();
        assert_eq!(p.vertices.len(), 3);
        // compact edges [(1,5),(3,2)] and [(3,2),(4,1)]
        let compact_edges: Vec<&Face> = p
            .faces
            .iter()
            .filter(|f| f.dim == 1 && f.is_compact())
            .collect();
        assert_eq!(compact_edges.len(), 2);
        let e1 = compact_edges
            .iter()
            .find(|f| f.vertices.contains(&expo(&[1, 5])))
            .unwrap();
        assert_eq!(
            face_functional(e1).unwrap(),
            vec![rat(3, 13), rat(2, 13)]
        );
        // unbounded edges in {u1=1} and {u2=1}, both outside coordinate axes
        let unbounded: Vec<&Face> = p
            .faces
            .iter()
            .filter(|f| f.dim == 1 && !f.is_compact() && !f.in_coordinate_hyperplane)
            .collect();
        assert_eq!(unbounded.len(), 2);
    }

    #[test]
    fn axis_face_functional() {
        let a = MonomialIdeal::from_ints(2, &[&[2, 0]]).unwrap();
        let p = build_polyhedron(&a).unwrap();
        let q = p
            .faces
            .iter()
            .find(|f| f.dim == 1 && !f.in_coordinate_hyperplane)
            .unwrap();
        assert_eq!(face_functional(q).unwrap(), vec![rat(1, 2), Rat::zero()]);
    }

    #[test]
    fn triangle_facet_functional_n3() {
        let a = MonomialIdeal::from_ints(3, &[&[2, 0, 0], &[0, 3, 0], &[0, 0, 5]]).unwrap();
        let p = build_polyhedron(&a).unwrap();
        let q = p
            .faces
            .iter()
            .find(|f| f.dim == 2 && f.is_compact())
            .unwrap();
        assert_eq!(
            face_functional(q).unwrap(),
            vec![rat(1, 2), rat(1, 3), rat(1, 5)]
        );
    }

    #[test]
    fn semigroup_membership_examples() {
        let a = ideal_753();
        let p = build_polyhedron(&a).unwrap();
        let q = p
            .faces
            .iter()
            .find(|f| f.dim == 1 && f.is_compact() && f.vertices.contains(&expo(&[1, 5])))
            .unwrap();
        let s = semigroup_data(&a, &p, q).unwrap();
        // G_Q generated by (2,-3)
        assert!(s.group().contains(&expo(&[2, -3])));
        assert!(s.group().contains(&expo(&[-2, 3])));
        assert!(!s.group().contains(&expo(&[1, -1])));
        // the shifted window point and basic sanity
        assert!(s.member(&expo(&[2, 4]), true));
        assert!(s.member(&expo(&[0, 0]), false));
        for (g, _) in s.positive_generators() {
            assert!(s.member(g, false));
        }
    }

    #[test]
    fn shifted_window_empty_for_second_example() {
        let a = MonomialIdeal::from_ints(2, &[&[1, 5], &[3, 2], &[5, 1]]).unwrap();
        let p = build_polyhedron(&a).unwrap();
        let q = p
            .faces
            .iter()
            .find(|f| f.dim == 1 && f.is_compact() && f.vertices.contains(&expo(&[1, 5])))
            .unwrap();
        let s = semigroup_data(&a, &p, q).unwrap();
        for i in 0..3i64 {
            for j in 0..5i64 {
                assert!(!s.member(&expo(&[i, j]), true), "({i},{j})");
            }
        }
    }
}
