//! Spectra of weighted-homogeneous isolated singularities and the microlocal
//! window property.

use crate::error::{Error, Result};
use crate::fracpoly::FracPoly;
use crate::rational::Rat;
use crate::rootset::{RootMultiset, RootSet};
use num::bigint::BigInt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector(Vec<Rat>);

impl WeightVector {
    pub fn new(weights: Vec<Rat>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::Invalid("empty weight vector".into()));
        }
        for w in &weights {
            if !w.is_positive() || w >= &Rat::one() {
                return Err(Error::Invalid(format!("weight {w} outside (0,1)")));
            }
        }
        Ok(WeightVector(weights))
    }

    pub fn weights(&self) -> &[Rat] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction requires at least one weight
    }

    /// alpha-tilde = sum of the weights (the minimal exponent).
    pub fn alpha_tilde(&self) -> Rat {
        self.0.iter().fold(Rat::zero(), |acc, w| acc + w)
    }
}

/// Sp = prod_i (t - t^{w_i}) / (t^{w_i} - 1), expanded exactly.
pub fn spectrum_wh(w: &WeightVector) -> Result<FracPoly> {
    let mut num = FracPoly::one();
    let mut den = FracPoly::one();
    for wi in w.weights() {
        let t_wi = FracPoly::monomial(wi.clone());
        num = num.mul(&FracPoly::monomial(Rat::one()).sub(&t_wi));
        den = den.mul(&t_wi.sub(&FracPoly::one()));
    }
    // the division is exact for weights in (0,1)
    num.exact_div(&den)
}

/// The exponent set {alpha : n_alpha != 0}.
pub fn exponents(sp: &FracPoly) -> Result<RootSet> {
    RootSet::from_iter_checked(sp.support().cloned())
}

/// Microlocal root multiset of a weighted-homogeneous isolated singularity:
/// the exponents, each with multiplicity 1.
pub fn wh_root_multiset(w: &WeightVector) -> Result<RootMultiset> {
    let sp = spectrum_wh(w)?;
    let mut out = RootMultiset::new();
    for e in sp.support() {
        out.add(e.clone(), 1)?;
    }
    Ok(out)
}

/// Violations of the microlocal window [alpha_tilde, n - alpha_tilde] and of
/// the multiplicity bound m_alpha <= n - alpha_tilde - alpha + 1.
pub fn window_check(r: &RootMultiset, alpha_tilde: &Rat, n: usize) -> (bool, Vec<String>) {
    assert_eq!(
        r.min(),
        Some(alpha_tilde),
        "alpha_tilde must be the minimal root"
    );
    let top = Rat::int(n as i64) - alpha_tilde;
    let mut violations = Vec::new();
    for (alpha, m) in r.iter() {
        if alpha < alpha_tilde || alpha > &top {
            violations.push(format!("root {alpha} outside [{alpha_tilde}, {top}]"));
        }
        let bound = &top - alpha + &Rat::one();
        if Rat::from(BigInt::from(m)) > bound {
            violations.push(format!("multiplicity {m} at {alpha} exceeds {bound}"));
        }
    }
    (violations.is_empty(), violations)
}
