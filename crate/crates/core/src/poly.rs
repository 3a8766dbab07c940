//! Exact sparse multivariate polynomials over the integers.
//!
//! A polynomial carries its list of variable names; every term is an
//! exponent vector aligned with that list.  Arithmetic between polynomials
//! requires identical variable lists.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Arc<[String]>,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MultiPoly {
    /// The zero polynomial in the given variables.
    pub fn zero(vars: &[&str]) -> MultiPoly {
        MultiPoly {
            vars: vars
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .into(),
            terms: BTreeMap::new(),
        }
    }

    fn zero_like(&self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[&str], c: impl Into<BigInt>) -> MultiPoly {
        let mut p = MultiPoly::zero(vars);
        p.add_term(vec![0; vars.len()], c.into());
        p
    }

    /// A constant with the same variables as `self`.
    pub fn constant_like(&self, c: impl Into<BigInt>) -> MultiPoly {
        let mut p = self.zero_like();
        p.add_term(vec![0; self.vars.len()], c.into());
        p
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn var(vars: &[&str], name: &str) -> MultiPoly {
        let k = vars
            .iter()
            .position(|v| *v == name)
            .unwrap_or_else(|| panic!("unknown variable {name}"));
        let mut e = vec![0; vars.len()];
        e[k] = 1;
        let mut p = MultiPoly::zero(vars);
        p.add_term(e, BigInt::one());
        p
    }

    /// Builds a polynomial from monomial counts, as produced by enumeration.
    pub fn from_counts<C: Into<BigInt>>(
        vars: &[&str],
        counts: impl IntoIterator<Item = (Vec<u32>, C)>,
    ) -> MultiPoly {
        let mut p = MultiPoly::zero(vars);
        for (e, c) in counts {
            assert_eq!(e.len(), vars.len(), "exponent vector length");
            p.add_term(e, c.into());
        }
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> BigInt {
        self.terms
            .get(exponents)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Sum of all coefficients, i.e. the value at all variables equal to 1.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exponents) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_vars(&self, other: &MultiPoly) {
        assert_eq!(
            self.vars, other.vars,
            "polynomials over different variables"
        );
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut out = self.constant_like(1);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Rising factorial `x (x+1) ... (x+k-1)`.
    pub fn rising(&self, k: u32) -> MultiPoly {
        let mut out = self.constant_like(1);
        for j in 0..k {
            out = &out * &(self + &self.constant_like(j));
        }
        out
    }

    /// Sets variable `name` to the integer `value`, keeping the variable list.
    pub fn specialize(&self, name: &str, value: i64) -> MultiPoly {
        let k = self.var_index(name);
        let mut out = self.zero_like();
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let p = std::mem::take(&mut e2[k]);
            out.add_term(e2, c * BigInt::from(value).pow(p));
        }
        out
    }

    /// Replaces each variable by a polynomial (all over a common variable list).
    pub fn substitute(&self, images: &[MultiPoly]) -> MultiPoly {
        assert_eq!(images.len(), self.vars.len());
        let base = images
            .first()
            .map(|p| p.zero_like())
            .expect("at least one variable");
        let mut out = base.clone();
        for (e, c) in &self.terms {
            let mut t = base.constant_like(c.clone());
            for (img, &k) in images.iter().zip(e) {
                t = &t * &img.pow(k);
            }
            out = &out + &t;
        }
        out
    }

    /// Evaluates at exact rationals, one per variable.
    pub fn eval(&self, values: &[BigRational]) -> BigRational {
        assert_eq!(values.len(), self.vars.len());
        let mut total = BigRational::zero();
        for (e, c) in &self.terms {
            let mut t = BigRational::from_integer(c.clone());
            for (v, &k) in values.iter().zip(e) {
                t *= num_traits::pow(v.clone(), k as usize);
            }
            total += t;
        }
        total
    }

    /// Degree in variable `name`.
    pub fn degree_in(&self, name: &str) -> u32 {
        let k = self.var_index(name);
        self.terms.keys().map(|e| e[k]).max().unwrap_or(0)
    }

    fn var_index(&self, name: &str) -> usize {
        self.vars
            .iter()
            .position(|v| v == name)
            .unwrap_or_else(|| panic!("unknown variable {name}"))
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MultiPoly {
    /// Terms in decreasing exponent order, e.g. `2*alpha*q^2 - beta + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            let monomial: Vec<String> = self
                .vars
                .iter()
                .zip(e)
                .filter(|(_, &k)| k > 0)
                .map(|(v, &k)| {
                    if k == 1 {
                        v.clone()
                    } else {
                        format!("{v}^{k}")
                    }
                })
                .collect();
            let magnitude = c.abs();
            if n == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            if monomial.is_empty() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{}", monomial.join("*"))?;
            } else {
                write!(f, "{magnitude}*{}", monomial.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_vars(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &(-rhs)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_vars(rhs);
        let mut out = self.zero_like();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

/// The binomial coefficient `C(n, k)`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut out = BigInt::one();
    for j in 0..k {
        out = out * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    out
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// The q-factorial `[1]_q [2]_q ... [r]_q` as a polynomial in `q`.
pub fn q_factorial(vars: &[&str], q: &str, r: u32) -> MultiPoly {
    let qv = MultiPoly::var(vars, q);
    let mut out = MultiPoly::constant(vars, 1);
    for i in 1..=r {
        let mut bracket = MultiPoly::zero(vars);
        for k in 0..i {
            bracket = &bracket + &qv.pow(k);
        }
        out = &out * &bracket;
    }
    out
}
