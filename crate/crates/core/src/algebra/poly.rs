use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num::{One, Signed, Zero};

use super::rational::{format_rational, int, Rational};
use crate::error::{Error, Result};

/// Ordered, shared list of variable names.
pub type Vars = Arc<[String]>;

/// Exponent vector, one entry per variable. Ordered graded-lexicographically:
/// total degree first, then the exponent of the earliest variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Box<[u16]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars].into_boxed_slice())
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e.into_boxed_slice())
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Multivariate polynomial with exact rational coefficients.
///
/// Terms are kept sorted ascending in graded-lex order with no zero
/// coefficients, so structural equality is polynomial equality.
#[derive(Debug, Clone)]
pub struct Poly {
    vars: Vars,
    terms: Vec<(Monomial, Rational)>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars)
            && self.terms == other.terms
    }
}

impl Eq for Poly {}

pub(crate) fn same_vars(a: &Vars, b: &Vars) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl Poly {
    pub fn zero(vars: &Vars) -> Self {
        Poly {
            vars: vars.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(vars: &Vars, c: Rational) -> Self {
        let mut p = Poly::zero(vars);
        if !c.is_zero() {
            p.terms.push((Monomial::one(vars.len()), c));
        }
        p
    }

    pub fn one(vars: &Vars) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn from_int(vars: &Vars, n: i64) -> Self {
        Self::constant(vars, int(n))
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn var(vars: &Vars, name: &str) -> Result<Self> {
        let index = vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Self::var_index(vars, index))
    }

    pub fn var_index(vars: &Vars, index: usize) -> Self {
        Poly {
            vars: vars.clone(),
            terms: vec![(Monomial::var(vars.len(), index), Rational::one())],
        }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero)
    /// terms.
    pub fn from_terms<I>(vars: &Vars, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u16>, Rational)>,
    {
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (exps, c) in terms {
            if exps.len() != vars.len() {
                return Err(Error::shape(format!(
                    "exponent vector of length {} over {} variables",
                    exps.len(),
                    vars.len()
                )));
            }
            *acc.entry(Monomial(exps.into_boxed_slice()))
                .or_insert_with(Rational::zero) += c;
        }
        Ok(Poly {
            vars: vars.clone(),
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// The value of a constant polynomial.
    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.last().map(|(m, _)| m.degree())
    }

    /// Same polynomial re-read over another variable list. Every variable
    /// that actually occurs must be present in `target`.
    pub fn embed(&self, target: &Vars) -> Result<Self> {
        if same_vars(&self.vars, target) {
            return Ok(self.clone());
        }
        let map: Vec<Option<usize>> = self
            .vars
            .iter()
            .map(|v| target.iter().position(|t| t == v))
            .collect();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut e = vec![0u16; target.len()];
            for (i, &k) in m.0.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                match map[i] {
                    Some(j) => e[j] = k,
                    None => return Err(Error::UnknownVariable(self.vars[i].clone())),
                }
            }
            terms.push((e, c.clone()));
        }
        Poly::from_terms(target, terms)
    }

    fn align<'a>(&'a self, other: &'a Poly) -> Result<(Poly, Poly)> {
        if same_vars(&self.vars, &other.vars) {
            return Ok((self.clone(), other.clone()));
        }
        if let Some(c) = self.constant_value() {
            return Ok((Poly::constant(&other.vars, c), other.clone()));
        }
        if let Some(c) = other.constant_value() {
            return Ok((self.clone(), Poly::constant(&self.vars, c)));
        }
        Err(Error::VariableMismatch {
            left: self.vars.to_vec(),
            right: other.vars.to_vec(),
        })
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        if same_vars(&self.vars, &other.vars) {
            return Ok(self.merge(other, false));
        }
        let (a, b) = self.align(other)?;
        Ok(a.merge(&b, false))
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        if same_vars(&self.vars, &other.vars) {
            return Ok(self.merge(other, true));
        }
        let (a, b) = self.align(other)?;
        Ok(a.merge(&b, true))
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        if same_vars(&self.vars, &other.vars) {
            return Ok(self.product(other));
        }
        let (a, b) = self.align(other)?;
        Ok(a.product(&b))
    }

    fn merge(&self, other: &Poly, negate: bool) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some((ma, _)), Some((mb, _))) => ma.cmp(mb),
                (Some(_), None) => Ordering::Less,
                (None, _) => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let (m, c) = &b[j];
                    out.push((m.clone(), if negate { -c } else { c.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Poly {
            vars: self.vars.clone(),
            terms: out,
        }
    }

    fn product(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.vars);
        }
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.get_mut(&m) {
                    Some(v) => *v += c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|x, y| x.0.cmp(&y.0));
        Poly {
            vars: self.vars.clone(),
            terms,
        }
    }

    pub fn scale(&self, k: &Rational) -> Poly {
        if k.is_zero() {
            return Poly::zero(&self.vars);
        }
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::one(&self.vars);
        for _ in 0..e {
            out = out.product(self);
        }
        out
    }

    /// Partial derivative; zero when `var` is not one of the variables.
    pub fn diff(&self, var: &str) -> Poly {
        match self.vars.iter().position(|v| v == var) {
            Some(k) => self.diff_index(k),
            None => Poly::zero(&self.vars),
        }
    }

    pub fn diff_index(&self, k: usize) -> Poly {
        let mut terms: Vec<(Monomial, Rational)> = self
            .terms
            .iter()
            .filter(|(m, _)| m.0[k] > 0)
            .map(|(m, c)| {
                let mut e = m.0.clone();
                let power = e[k];
                e[k] -= 1;
                (Monomial(e), c * int(power as i64))
            })
            .collect();
        // lowering one exponent can reorder terms of equal degree
        terms.sort_unstable_by(|x, y| x.0.cmp(&y.0));
        Poly {
            vars: self.vars.clone(),
            terms,
        }
    }

    /// Evaluates at a point given by name; every variable must be assigned.
    pub fn eval(&self, point: &BTreeMap<String, Rational>) -> Result<Rational> {
        let values = self
            .vars
            .iter()
            .map(|v| {
                point
                    .get(v)
                    .cloned()
                    .ok_or_else(|| Error::MissingAssignment(v.clone()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(self.eval_slice(&values))
    }

    /// Evaluates with `values[i]` assigned to the i-th variable.
    pub fn eval_slice(&self, values: &[Rational]) -> Rational {
        assert_eq!(values.len(), self.vars.len(), "point dimension");
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in values.iter().zip(m.0.iter()) {
                if e > 0 {
                    t *= num::pow(x.clone(), e as usize);
                }
            }
            total += t;
        }
        total
    }
}

impl fmt::Display for Poly {
    /// Terms from highest to lowest in graded-lex order, e.g. `x^2*y - 3/2*y + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (idx, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            let mut factors = Vec::new();
            if m.is_one() || !mag.is_one() {
                factors.push(format_rational(&mag));
            }
            for (name, &e) in self.vars.iter().zip(m.0.iter()) {
                match e {
                    0 => {}
                    1 => factors.push(name.clone()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

macro_rules! forward_op {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                self.$checked(rhs)
                    .expect("polynomial variable lists must agree")
            }
        }
        impl $trait<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_op!(Add, add, checked_add);
forward_op!(Sub, sub, checked_sub);
forward_op!(Mul, mul, checked_mul);

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use proptest::prelude::*;

    fn xyz() -> Vars {
        Arc::from(vec!["x".to_string(), "y".to_string(), "z".to_string()])
    }

    fn v(name: &str) -> Poly {
        Poly::var(&xyz(), name).unwrap()
    }

    fn c(n: i64, d: i64) -> Poly {
        Poly::constant(&xyz(), rat(n, d))
    }

    #[test]
    fn difference_of_squares() {
        let p = &(&v("x") + &c(1, 1)) * &(&v("x") - &c(1, 1));
        assert_eq!(p, &v("x").pow(2) - &c(1, 1));
        assert_eq!(p.to_string(), "x^2 - 1");
    }

    #[test]
    fn additive_identity() {
        let p = &v("x") * &v("y") + c(3, 4);
        assert_eq!(&p + &Poly::zero(&xyz()), p);
    }

    #[test]
    fn hand_multiplication() {
        // (2xy)(3/2 y) = 3xy²
        let p = &(&c(2, 1) * &(&v("x") * &v("y"))) * &(&c(3, 2) * &v("y"));
        assert_eq!(p, &c(3, 1) * &(&v("x") * &v("y").pow(2)));
        assert_eq!(p.to_string(), "3*x*y^2");
    }

    #[test]
    fn derivatives() {
        let p = &v("x").pow(2) * &v("y");
        assert_eq!(p.diff("x"), &c(2, 1) * &(&v("x") * &v("y")));
        assert!(c(5, 1).diff("x").is_zero());
        // d/dz (x³ + xz) = x
        let q = &v("x").pow(3) + &(&v("x") * &v("z"));
        assert_eq!(q.diff("z"), v("x"));
        assert!(q.diff("w").is_zero());
    }

    #[test]
    fn evaluation() {
        let mut pt = BTreeMap::new();
        pt.insert("x".to_string(), int(3));
        pt.insert("y".to_string(), int(0));
        pt.insert("z".to_string(), int(0));
        assert_eq!((&v("x").pow(2) - &c(1, 1)).eval(&pt).unwrap(), int(8));
        assert_eq!(Poly::zero(&xyz()).eval(&pt).unwrap(), int(0));
        // 2xy + 1/2 at x = 1/2, y = 4
        pt.insert("x".to_string(), rat(1, 2));
        pt.insert("y".to_string(), int(4));
        let p = &(&c(2, 1) * &(&v("x") * &v("y"))) + &c(1, 2);
        assert_eq!(p.eval(&pt).unwrap(), rat(9, 2));
        pt.remove("z");
        assert_eq!(p.eval(&pt), Err(Error::MissingAssignment("z".into())));
    }

    #[test]
    fn mismatched_variables() {
        let other: Vars = Arc::from(vec!["u".to_string()]);
        let u = Poly::var(&other, "u").unwrap();
        assert!(matches!(
            v("x").checked_add(&u),
            Err(Error::VariableMismatch { .. })
        ));
        // constants align automatically
        let k = Poly::constant(&other, int(2));
        assert_eq!(v("x").checked_mul(&k).unwrap(), &c(2, 1) * &v("x"));
    }

    #[test]
    fn graded_lex_printing() {
        let p = &(&v("y").pow(2) + &v("x")) + &(&v("x") * &v("z").pow(2));
        assert_eq!(p.to_string(), "x*z^2 + y^2 + x");
        assert_eq!((-&p).to_string(), "-x*z^2 - y^2 - x");
    }

    #[test]
    fn embed_into_larger_chart() {
        let big: Vars = Arc::from(vec![
            "w".to_string(),
            "x".to_string(),
            "y".to_string(),
            "z".to_string(),
        ]);
        let p = &v("x") * &v("z");
        let q = p.embed(&big).unwrap();
        assert_eq!(q.to_string(), "x*z");
        assert_eq!(q.vars().len(), 4);
        assert_eq!(
            Poly::var(&big, "w").unwrap().embed(&xyz()),
            Err(Error::UnknownVariable("w".into()))
        );
    }

    fn arb_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec(((0u16..3, 0u16..3, 0u16..3), -5i64..6, 1i64..4), 0..5).prop_map(
            |terms| {
                Poly::from_terms(
                    &xyz(),
                    terms
                        .into_iter()
                        .map(|((a, b, c), n, d)| (vec![a, b, c], rat(n, d))),
                )
                .unwrap()
            },
        )
    }

    fn arb_point() -> impl Strategy<Value = Vec<Rational>> {
        prop::collection::vec((-7i64..8, 1i64..5).prop_map(|(n, d)| rat(n, d)), 3)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn leibniz_and_linearity(a in arb_poly(), b in arb_poly(), k in 0usize..3) {
            prop_assert_eq!((&a * &b).diff_index(k), &(&a.diff_index(k) * &b) + &(&a * &b.diff_index(k)));
            prop_assert_eq!((&a + &b).diff_index(k), &a.diff_index(k) + &b.diff_index(k));
        }

        #[test]
        fn evaluation_is_a_ring_homomorphism(a in arb_poly(), b in arb_poly(), pt in arb_point()) {
            prop_assert_eq!((&a * &b).eval_slice(&pt), a.eval_slice(&pt) * b.eval_slice(&pt));
            prop_assert_eq!((&a + &b).eval_slice(&pt), a.eval_slice(&pt) + b.eval_slice(&pt));
        }

        #[test]
        fn canonical_order_is_sorted(a in arb_poly(), b in arb_poly()) {
            let p = &a * &b;
            prop_assert!(p.terms().windows(2).all(|w| w[0].0 < w[1].0));
            prop_assert!(p.terms().iter().all(|(_, c)| !c.is_zero()));
        }
    }
}
