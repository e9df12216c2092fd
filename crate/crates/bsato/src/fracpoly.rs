//! Laurent-style polynomials in t with rational exponents and integer
//! coefficients. Products of terms (t - t^w)/(t^w - 1) are computed by exact
//! division over a common exponent denominator.

use crate::error::{Error, Result};
use crate::rational::Rat;
use num::bigint::BigInt;
use num::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Sum of c * t^e with e in Q, c in Z; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FracPoly(BTreeMap<Rat, BigInt>);

impl FracPoly {
    pub fn zero() -> Self {
        FracPoly(BTreeMap::new())
    }

    pub fn one() -> Self {
        FracPoly::term(Rat::zero(), BigInt::one())
    }

    pub fn term(exp: Rat, coeff: BigInt) -> Self {
        let mut m = BTreeMap::new();
        if !coeff.is_zero() {
            m.insert(exp, coeff);
        }
        FracPoly(m)
    }

    /// t^e with coefficient 1.
    pub fn monomial(exp: Rat) -> Self {
        FracPoly::term(exp, BigInt::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, exp: &Rat) -> BigInt {
        self.0.get(exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Rat, &BigInt)> {
        self.0.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Rat> {
        self.0.keys()
    }

    pub fn num_terms(&self) -> usize {
        self.0.len()
    }

    fn insert_add(&mut self, exp: Rat, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.0.entry(exp) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &FracPoly) -> FracPoly {
        let mut out = self.clone();
        for (e, c) in &other.0 {
            out.insert_add(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &FracPoly) -> FracPoly {
        let mut out = self.clone();
        for (e, c) in &other.0 {
            out.insert_add(e.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &FracPoly) -> FracPoly {
        let mut out = FracPoly::zero();
        for (e1, c1) in &self.0 {
            for (e2, c2) in &other.0 {
                out.insert_add(e1 + e2, c1 * c2);
            }
        }
        out
    }

    /// Exact division: errors unless `other` divides `self` in the ring of
    /// integer-coefficient polynomials in t^(1/N) for the common exponent
    /// denominator N.
    pub fn exact_div(&self, other: &FracPoly) -> Result<FracPoly> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(FracPoly::zero());
        }
        // common denominator of every exponent in play
        let mut den = BigInt::one();
        for e in self.0.keys().chain(other.0.keys()) {
            den = num::Integer::lcm(&den, e.denom());
        }
        let scale = |p: &FracPoly| -> BTreeMap<BigInt, BigInt> {
            p.0.iter()
                .map(|(e, c)| ((e.numer() * &den) / e.denom(), c.clone()))
                .collect()
        };
        let mut num_p = scale(self);
        let div_p = scale(other);
        let (lead_e, lead_c) = div_p.iter().next_back().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        // lowest possible quotient exponent: anything below means a remainder
        let low_q = num_p.keys().next().unwrap() - div_p.keys().next().unwrap();
        let mut q: BTreeMap<BigInt, BigInt> = BTreeMap::new();
        while let Some((te, tc)) = num_p.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            let (qc, rem) = num::Integer::div_rem(&tc, &lead_c);
            if !rem.is_zero() {
                return Err(Error::InexactDivision);
            }
            let qe = &te - &lead_e;
            if qe < low_q {
                return Err(Error::InexactDivision);
            }
            for (de, dc) in &div_p {
                let e = &qe + de;
                let c = num_p.get(&e).cloned().unwrap_or_else(BigInt::zero) - &qc * dc;
                if c.is_zero() {
                    num_p.remove(&e);
                } else {
                    num_p.insert(e, c);
                }
            }
            q.insert(qe, qc);
        }
        let mut out = FracPoly::zero();
        for (e, c) in q {
            out.insert_add(Rat::new(e, den.clone()).unwrap(), c);
        }
        Ok(out)
    }

    /// Substitute t^e -> t^(pivot - e) for every term.
    pub fn reflect(&self, pivot: &Rat) -> FracPoly {
        let mut out = FracPoly::zero();
        for (e, c) in &self.0 {
            out.insert_add(pivot - e, c.clone());
        }
        out
    }
}

impl fmt::Display for FracPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() && !e.is_zero() {
                write!(f, "t^({e})")?;
            } else if e.is_zero() {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*t^({e})")?;
            }
        }
        Ok(())
    }
}
