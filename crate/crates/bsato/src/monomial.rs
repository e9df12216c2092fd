//! Root sets of b-functions of monomial ideals. The n = 2 edge-window
//! algorithm is the production path; a truncated general enumerator covers
//! n <= 3, with the diagonal closed form as an independent oracle.

use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::newton::{
    build_polyhedron, eval, face_functional, semigroup_data, Expo, Face, MonomialIdeal,
};
use crate::rational::Rat;
use crate::rootset::RootSet;
use itertools::Itertools;
use num::bigint::BigInt;
use num::{One, Zero};

/// The n = 2 window data of a compact edge: endpoints, the group point v3,
/// and the split of the S window by shifted-semigroup membership.
#[derive(Clone, Debug)]
pub struct FaceWindow {
    pub v1: Expo,
    pub v2: Expo,
    pub v3: Expo,
    pub l_q: Vec<Rat>,
    pub s: Vec<Expo>,
    pub s1: Vec<Expo>,
    pub s0: Vec<Expo>,
}

fn ones(n: usize) -> Expo {
    vec![BigInt::one(); n]
}

fn add(u: &[BigInt], v: &[BigInt]) -> Expo {
    u.iter().zip(v).map(|(a, b)| a + b).collect()
}

fn sub(u: &[BigInt], v: &[BigInt]) -> Expo {
    u.iter().zip(v).map(|(a, b)| a - b).collect()
}

/// Roots of b_a(-s) for a proper monomial ideal in two variables, together
/// with the per-edge windows (exposed for tests and reporting).
pub fn roots_dim2_detailed(a: &MonomialIdeal) -> Result<(RootSet, Vec<FaceWindow>)> {
    if a.dim() != 2 {
        return Err(Error::Precondition(format!(
            "two variables required, got {}",
            a.dim()
        )));
    }
    let p = build_polyhedron(a)?;
    let mut roots = RootSet::new();
    let mut windows = Vec::new();
    for q in p.admissible_faces().filter(|q| q.dim == 1) {
        let l_q = face_functional(q)?;
        if q.is_compact() {
            let (mut v1, mut v2) = (q.vertices[0].clone(), q.vertices[1].clone());
            if v1[0] > v2[0] {
                std::mem::swap(&mut v1, &mut v2);
            }
            let sg = semigroup_data(a, &p, q)?;
            // the difference group of an edge is rank 1
            let mut g = sg.group().basis()[0].clone();
            if g[0] < BigInt::zero() {
                g = vec![-&g[0], -&g[1]];
            }
            let v3 = add(&v1, &g);
            let mut window = FaceWindow {
                v1: v1.clone(),
                v2,
                v3: v3.clone(),
                l_q: l_q.clone(),
                s: Vec::new(),
                s1: Vec::new(),
                s0: Vec::new(),
            };
            for i in num::iter::range(BigInt::zero(), v3[0].clone()) {
                for j in num::iter::range(BigInt::zero(), v1[1].clone()) {
                    let u = vec![i.clone(), j];
                    let shifted = sg.member(&u, true);
                    let k = if shifted { Rat::one() } else { Rat::zero() };
                    roots.insert(eval(&l_q, &add(&u, &ones(2))) - &k)?;
                    window.s.push(u.clone());
                    if shifted {
                        window.s1.push(u);
                    } else {
                        window.s0.push(u);
                    }
                }
            }
            windows.push(window);
        } else {
            // axis-parallel ray inside {u_i = m}: roots are k/m for k = 1..m
            let i = l_q.iter().position(|c| !c.is_zero()).unwrap();
            let m = q.vertices[0][i].clone();
            for k in num::iter::range_inclusive(BigInt::one(), m.clone()) {
                roots.insert(Rat::new(k, m.clone())?)?;
            }
        }
    }
    Ok((roots, windows))
}

pub fn roots_dim2(a: &MonomialIdeal) -> Result<RootSet> {
    roots_dim2_detailed(a).map(|(r, _)| r)
}

/// Truncated root enumeration over every admissible face (experimental):
/// exact below the degree bound, by the membership criterion
/// w - e ∈ M_Q \ M′_Q with w ∈ V_Q.
pub fn roots_general(a: &MonomialIdeal, bound: &Rat) -> Result<RootSet> {
    if !bound.is_positive() {
        return Err(Error::Precondition("degree bound must be positive".into()));
    }
    let n = a.dim();
    let p = build_polyhedron(a)?;
    let e = ones(n);
    let ceil = if bound.is_integer() {
        bound.numer().clone()
    } else {
        bound.floor_int() + 1
    };
    let hi = a.max_coord() * &ceil + BigInt::from(n);
    let lo = -BigInt::from(n as i64);
    let mut roots = RootSet::new();
    for q in p.admissible_faces() {
        let l_q = face_functional(q)?;
        let sg = semigroup_data(a, &p, q)?;
        // covectors cutting out V_Q
        let orth = QMatrix::from_rows(&q.v_q_basis).nullspace();
        let ranges: Vec<Vec<BigInt>> = (0..n)
            .map(|_| num::iter::range_inclusive(lo.clone(), hi.clone()).collect())
            .collect();
        for w in ranges.into_iter().multi_cartesian_product() {
            if orth.iter().any(|x| !eval(x, &w).is_zero()) {
                continue;
            }
            let val = eval(&l_q, &w);
            if !val.is_positive() || &val > bound {
                continue;
            }
            if roots.contains(&val) {
                continue;
            }
            let d = sub(&w, &e);
            if sg.member(&d, false) && !sg.member(&d, true) {
                roots.insert(val)?;
            }
        }
    }
    Ok(roots)
}

/// Closed form for the diagonal ideal (x_1^{a_1}, ..., x_n^{a_n}):
/// all sums p_1/a_1 + ... + p_n/a_n with 1 <= p_i <= a_i.
pub fn diagonal_roots(a: &[BigInt]) -> Result<RootSet> {
    if a.is_empty() || a.iter().any(|x| x < &BigInt::one()) {
        return Err(Error::Precondition(
            "diagonal exponents must be positive".into(),
        ));
    }
    let mut sums = vec![Rat::zero()];
    for ai in a {
        let mut next = Vec::new();
        for p in num::iter::range_inclusive(BigInt::one(), ai.clone()) {
            let term = Rat::new(p, ai.clone())?;
            for s in &sums {
                next.push(s + &term);
            }
        }
        sums = next;
    }
    RootSet::from_iter_checked(sums)
}

/// Log canonical threshold: the minimal root.
pub fn lct(a: &MonomialIdeal) -> Result<Rat> {
    let roots = if a.dim() == 2 {
        roots_dim2(a)?
    } else {
        roots_general(a, &Rat::int(a.dim() as i64))?
    };
    Ok(roots.min().cloned().expect("nonempty root set"))
}

/// Exponents of a plane-curve singularity from its Newton polygon (assuming
/// nondegeneracy): per compact edge Q, the values L_Q(u) at interior lattice
/// points of the triangle over Q, completed by the symmetry about 1.
pub fn newton_exponents_dim2(support: &[Expo]) -> Result<RootSet> {
    let a = MonomialIdeal::new(2, support.to_vec())?;
    let p = build_polyhedron(&a)?;
    let edges: Vec<&Face> = p.faces.iter().filter(|q| q.dim == 1 && q.is_compact()).collect();
    if edges.is_empty() {
        return Err(Error::NoCompactFaces);
    }
    let mut low = RootSet::new();
    for q in edges {
        let l_q = face_functional(q)?;
        let (v1, v2) = (&q.vertices[0], &q.vertices[1]);
        // u is in conv{0, v1, v2} iff u = a v1 + b v2 with a, b >= 0, a+b <= 1
        let m = QMatrix::from_rows(&[
            vec![Rat::from(v1[0].clone()), Rat::from(v2[0].clone())],
            vec![Rat::from(v1[1].clone()), Rat::from(v2[1].clone())],
        ]);
        let hi = [v1[0].clone().max(v2[0].clone()), v1[1].clone().max(v2[1].clone())];
        for i in num::iter::range_inclusive(BigInt::one(), hi[0].clone()) {
            for j in num::iter::range_inclusive(BigInt::one(), hi[1].clone()) {
                let u = vec![i.clone(), j];
                let rh = [Rat::from(u[0].clone()), Rat::from(u[1].clone())];
                let c = m.solve(&rh).expect("edge endpoints are independent");
                if c[0].is_negative() || c[1].is_negative() || &c[0] + &c[1] > Rat::one() {
                    continue;
                }
                low.insert(eval(&l_q, &u))?;
            }
        }
    }
    let mut full = low.clone();
    for alpha in low.iter() {
        if alpha < &Rat::one() {
            full.insert(Rat::int(2) - alpha)?;
        }
    }
    Ok(full)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn rs(fracs: &[(i64, i64)]) -> RootSet {
        RootSet::from_iter_checked(fracs.iter().map(|&(p, q)| rat(p, q))).unwrap()
    }

    #[test]
    fn family_formula_small_case() {
        // (x^3 y, x y^4): roots (3i + 2j)/11 over the full index box
        let a = MonomialIdeal::from_ints(2, &[&[3, 1], &[1, 4]]).unwrap();
        let got = roots_dim2(&a).unwrap();
        let mut want = RootSet::new();
        for i in 1..=3 {
            for j in 1..=4 {
                want.insert(rat(3 * i + 2 * j, 11)).unwrap();
            }
        }
        assert_eq!(got, want);
    }

    #[test]
    fn second_example_golden_set() {
        let a = MonomialIdeal::from_ints(2, &[&[1, 5], &[3, 2], &[5, 1]]).unwrap();
        let (got, windows) = roots_dim2_detailed(&a).unwrap();
        let mut want = rs(&[(5, 13), (19, 13)]);
        for i in 7..=17 {
            want.insert(rat(i, 13)).unwrap();
        }
        for j in 3..=9 {
            want.insert(rat(j, 7)).unwrap();
        }
        assert_eq!(got, want);
        for w in &windows {
            assert!(w.s1.is_empty());
        }
    }

    #[test]
    fn third_example_golden_set() {
        let a = MonomialIdeal::from_ints(2, &[&[1, 5], &[3, 2], &[4, 1]]).unwrap();
        let (got, windows) = roots_dim2_detailed(&a).unwrap();
        let mut want = RootSet::new();
        for i in 5..=17 {
            want.insert(rat(i, 13)).unwrap();
        }
        for j in 2..=6 {
            want.insert(rat(j, 5)).unwrap();
        }
        assert_eq!(got, want);
        assert!(got.contains(&rat(6, 13)));
        assert!(!got.contains(&rat(19, 13)));
        let steep = windows
            .iter()
            .find(|w| w.v1 == vec![BigInt::from(1), BigInt::from(5)])
            .unwrap();
        assert_eq!(steep.s1, vec![vec![BigInt::from(2), BigInt::from(4)]]);
        assert_eq!(steep.l_q, vec![rat(3, 13), rat(2, 13)]);
    }

    #[test]
    fn principal_axis_ideal() {
        let a = MonomialIdeal::from_ints(2, &[&[2, 0]]).unwrap();
        assert_eq!(roots_dim2(&a).unwrap(), rs(&[(1, 2), (1, 1)]));
    }

    #[test]
    fn diagonal_closed_form() {
        assert_eq!(
            diagonal_roots(&[BigInt::from(2), BigInt::from(3)]).unwrap(),
            rs(&[(5, 6), (7, 6), (4, 3), (3, 2), (5, 3), (2, 1)])
        );
        assert_eq!(diagonal_roots(&[BigInt::from(1)]).unwrap(), rs(&[(1, 1)]));
        assert_eq!(
            diagonal_roots(&[BigInt::from(2), BigInt::from(3), BigInt::from(5)])
                .unwrap()
                .len(),
            diagonal_roots(&[BigInt::from(2), BigInt::from(3), BigInt::from(5)])
                .unwrap()
                .len()
        );
    }

    #[test]
    fn general_matches_diagonal_oracle() {
        for (ai, aj) in [(2i64, 3i64), (3, 3), (2, 4)] {
            let a = MonomialIdeal::from_ints(2, &[&[ai, 0], &[0, aj]]).unwrap();
            let got = roots_general(&a, &rat(2, 1)).unwrap();
            let want = diagonal_roots(&[BigInt::from(ai), BigInt::from(aj)]).unwrap();
            assert_eq!(got, want, "({ai},{aj})");
        }
    }

    #[test]
    fn general_matches_dim2_on_worked_example() {
        let a = MonomialIdeal::from_ints(2, &[&[1, 5], &[3, 2], &[4, 1]]).unwrap();
        let dim2 = roots_dim2(&a).unwrap();
        let gen = roots_general(&a, &rat(2, 1)).unwrap();
        let dim2_cut = RootSet::from_iter_checked(
            dim2.iter().filter(|r| **r <= rat(2, 1)).cloned(),
        )
        .unwrap();
        assert_eq!(gen, dim2_cut);
    }

    #[test]
    fn smooth_divisor() {
        let a = MonomialIdeal::from_ints(1, &[&[1]]).unwrap();
        assert_eq!(roots_general(&a, &rat(1, 1)).unwrap(), rs(&[(1, 1)]));
    }

    #[test]
    fn lct_values() {
        let a = MonomialIdeal::from_ints(2, &[&[1, 5], &[3, 2], &[5, 1]]).unwrap();
        assert_eq!(lct(&a).unwrap(), rat(5, 13));
        let d = MonomialIdeal::from_ints(2, &[&[2, 0], &[0, 3]]).unwrap();
        assert_eq!(lct(&d).unwrap(), rat(5, 6));
    }

    #[test]
    fn newton_exponent_sets() {
        let e = newton_exponents_dim2(&[
            vec![BigInt::from(5), BigInt::zero()],
            vec![BigInt::zero(), BigInt::from(4)],
        ])
        .unwrap();
        let low: Vec<Rat> = e.iter().filter(|a| **a <= rat(1, 1)).cloned().collect();
        assert_eq!(
            low,
            vec![rat(9, 20), rat(13, 20), rat(7, 10), rat(17, 20), rat(9, 10), rat(19, 20)]
        );
        // symmetry about 1
        for a in e.iter() {
            assert!(e.contains(&(rat(2, 1) - a)), "{a}");
        }

        let node = newton_exponents_dim2(&[
            vec![BigInt::from(2), BigInt::zero()],
            vec![BigInt::zero(), BigInt::from(2)],
        ])
        .unwrap();
        assert_eq!(node, rs(&[(1, 1)]));

        let cusp3 = newton_exponents_dim2(&[
            vec![BigInt::from(3), BigInt::zero()],
            vec![BigInt::zero(), BigInt::from(3)],
        ])
        .unwrap();
        assert_eq!(cusp3, rs(&[(2, 3), (1, 1), (4, 3)]));
    }

    #[test]
    fn no_compact_faces_error() {
        let support = vec![vec![BigInt::from(2), BigInt::zero()]];
        assert!(matches!(
            newton_exponents_dim2(&support),
            Err(Error::NoCompactFaces)
        ));
    }
}
