use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::GaussianRational;
use crate::error::{Error, Result};

/// Monomial orders supported by the engine. Reduction by a single relation
/// is order-insensitive for canonicity; lexicographic (in the declared
/// variable order) keeps leading terms simple.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum TermOrder {
    #[default]
    Lex,
}

/// A sparse multivariate polynomial over the Gaussian rationals.
///
/// Invariants: no zero coefficients are stored, and every exponent vector
/// has length equal to the number of variables. Exponent vectors compare
/// lexicographically in the declared variable order, so the maximal key of
/// the term map is the lex leading term.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial {
    vars: Arc<Vec<String>>,
    terms: BTreeMap<Vec<u32>, GaussianRational>,
}

impl Polynomial {
    pub fn zero(vars: &Arc<Vec<String>>) -> Self {
        Polynomial { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &Arc<Vec<String>>, c: GaussianRational) -> Self {
        let mut p = Polynomial::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    pub fn one(vars: &Arc<Vec<String>>) -> Self {
        Polynomial::constant(vars, GaussianRational::one())
    }

    pub fn var(vars: &Arc<Vec<String>>, name: &str) -> Result<Self> {
        let idx = vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::Parse(format!("unknown variable `{name}`")))?;
        let mut exps = vec![0; vars.len()];
        exps[idx] = 1;
        let mut p = Polynomial::zero(vars);
        p.terms.insert(exps, GaussianRational::one());
        Ok(p)
    }

    pub fn monomial(vars: &Arc<Vec<String>>, exps: Vec<u32>, coeff: GaussianRational) -> Self {
        assert_eq!(exps.len(), vars.len());
        let mut p = Polynomial::zero(vars);
        if !coeff.is_zero() {
            p.terms.insert(exps, coeff);
        }
        p
    }

    pub fn vars(&self) -> &Arc<Vec<String>> {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    /// The constant term (zero if absent).
    pub fn constant_term(&self) -> GaussianRational {
        self.terms
            .get(&vec![0; self.vars.len()])
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    /// A unit of the power-series ring: nonzero constant term.
    pub fn is_series_unit(&self) -> bool {
        !self.constant_term().is_zero()
    }

    pub fn same_vars(&self, other: &Polynomial) -> Result<()> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::VariableMismatch(
                self.vars.as_ref().clone(),
                other.vars.as_ref().clone(),
            ))
        }
    }

    fn insert_term(&mut self, exps: Vec<u32>, coeff: GaussianRational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_vars(other)?;
        let mut out = Polynomial::zero(&self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<u32> = ea.iter().zip(eb.iter()).map(|(a, b)| a + b).collect();
                out.insert_term(exps, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Polynomial {
        let mut out = Polynomial::zero(&self.vars);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), -c);
        }
        out
    }

    pub fn scale(&self, c: &GaussianRational) -> Polynomial {
        let mut out = Polynomial::zero(&self.vars);
        if c.is_zero() {
            return out;
        }
        for (e, co) in &self.terms {
            out.terms.insert(e.clone(), co * c);
        }
        out
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut out = Polynomial::one(&self.vars);
        for _ in 0..n {
            out = out.checked_mul(self).expect("same vars");
        }
        out
    }

    /// Leading term under lex: the maximal exponent vector.
    pub fn leading(&self) -> Option<(&Vec<u32>, &GaussianRational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn min_total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum::<u32>()).min()
    }

    /// Drop all terms of total degree >= s.
    pub fn truncate_below(&self, s: u32) -> Polynomial {
        let mut out = Polynomial::zero(&self.vars);
        for (e, c) in &self.terms {
            if e.iter().sum::<u32>() < s {
                out.terms.insert(e.clone(), c.clone());
            }
        }
        out
    }

    /// Set the named variables to zero.
    pub fn substitute_zero(&self, names: &[&str]) -> Polynomial {
        let idxs: Vec<usize> = names
            .iter()
            .filter_map(|n| self.vars.iter().position(|v| v == n))
            .collect();
        let mut out = Polynomial::zero(&self.vars);
        for (e, c) in &self.terms {
            if idxs.iter().all(|&i| e[i] == 0) {
                out.terms.insert(e.clone(), c.clone());
            }
        }
        out
    }

    /// Reinterpret over a superset variable list (matching by name).
    pub fn extend_vars(&self, new_vars: &Arc<Vec<String>>) -> Result<Polynomial> {
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| {
                new_vars
                    .iter()
                    .position(|w| w == v)
                    .ok_or_else(|| Error::Parse(format!("variable `{v}` missing in target list")))
            })
            .collect::<Result<_>>()?;
        let mut out = Polynomial::zero(new_vars);
        for (e, c) in &self.terms {
            let mut exps = vec![0; new_vars.len()];
            for (i, &x) in e.iter().enumerate() {
                exps[map[i]] = x;
            }
            out.terms.insert(exps, c.clone());
        }
        Ok(out)
    }

    /// Evaluate at a point, one value per variable.
    pub fn eval(&self, point: &[GaussianRational]) -> GaussianRational {
        assert_eq!(point.len(), self.vars.len());
        let mut acc = GaussianRational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &exp) in e.iter().enumerate() {
                for _ in 0..exp {
                    term = &term * &point[i];
                }
            }
            acc = &acc + &term;
        }
        acc
    }

    /// Exact division: returns `r` with `q * r == self`, or `NotDivisible`.
    ///
    /// Repeated leading-term elimination under lex. If `q` divides `self`
    /// this terminates with zero remainder; the first non-eliminable leading
    /// term witnesses non-divisibility.
    pub fn exact_divide(&self, q: &Polynomial) -> Result<Polynomial> {
        self.same_vars(q)?;
        if q.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (qe, qc) = q.leading().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(&self.vars);
        while let Some((re, rc)) = rem.leading().map(|(e, c)| (e.clone(), c.clone())) {
            if !divides(&qe, &re) {
                return Err(Error::NotDivisible(self.to_string(), q.to_string()));
            }
            let exps: Vec<u32> = re.iter().zip(qe.iter()).map(|(a, b)| a - b).collect();
            let coeff = &rc / &qc;
            let t = Polynomial::monomial(&self.vars, exps, coeff);
            rem = rem.checked_sub(&t.checked_mul(q)?)?;
            quot = quot.checked_add(&t)?;
        }
        Ok(quot)
    }

    /// Remainder of multivariate division by the single divisor `f` under
    /// lex. A single polynomial is a Groebner basis of its principal ideal,
    /// so the result is a canonical coset representative.
    pub fn reduce_mod(&self, f: &Polynomial) -> Polynomial {
        assert!(!f.is_zero(), "cannot reduce modulo zero");
        let (fe, fc) = f.leading().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let mut rem = self.clone();
        loop {
            let target = rem
                .terms
                .iter()
                .rev()
                .find(|(e, _)| divides(&fe, e))
                .map(|(e, c)| (e.clone(), c.clone()));
            match target {
                None => return rem,
                Some((re, rc)) => {
                    let exps: Vec<u32> = re.iter().zip(fe.iter()).map(|(a, b)| a - b).collect();
                    let coeff = &rc / &fc;
                    let t = Polynomial::monomial(&rem.vars, exps, coeff);
                    rem = rem
                        .checked_sub(&t.checked_mul(f).expect("same vars"))
                        .expect("same vars");
                }
            }
        }
    }
}

fn divides(d: &[u32], e: &[u32]) -> bool {
    d.iter().zip(e.iter()).all(|(a, b)| a <= b)
}

/// Combined arithmetic entry point over a fixed variable list.
pub fn poly_arith(a: &Polynomial, b: &Polynomial, op: ArithOp) -> Result<Polynomial> {
    match op {
        ArithOp::Add => a.checked_add(b),
        ArithOp::Sub => a.checked_sub(b),
        ArithOp::Mul => a.checked_mul(b),
    }
}

#[derive(Clone, Copy, Debug)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| {
                    if x == 1 {
                        self.vars[i].clone()
                    } else {
                        format!("{}^{}", self.vars[i], x)
                    }
                })
                .collect();
            let coeff_str = if !c.is_real() {
                if c.re.is_zero() && c.im.is_one() {
                    "i".to_string()
                } else if c.re.is_zero() && (-c.im.clone()).is_one() {
                    "-i".to_string()
                } else {
                    format!("({c})")
                }
            } else if c.is_one() && !mono.is_empty() {
                String::new()
            } else if (-c).is_one() && !mono.is_empty() {
                "-".to_string()
            } else {
                c.to_string()
            };
            let term = if mono.is_empty() {
                if coeff_str.is_empty() {
                    "1".to_string()
                } else {
                    coeff_str
                }
            } else if coeff_str.is_empty() || coeff_str == "-" {
                format!("{}{}", coeff_str, mono.join("*"))
            } else {
                format!("{}*{}", coeff_str, mono.join("*"))
            };
            if first {
                write!(f, "{term}")?;
                first = false;
            } else if let Some(stripped) = term.strip_prefix('-') {
                write!(f, " - {stripped}")?;
            } else {
                write!(f, " + {term}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::super::parse_polynomial;
    use super::*;

    fn vars2() -> Arc<Vec<String>> {
        Arc::new(vec!["x".into(), "y".into()])
    }

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, &vars2()).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let prod = p("x + y").checked_mul(&p("x - y")).unwrap();
        assert_eq!(prod, p("x^2 - y^2"));
    }

    #[test]
    fn monomial_product() {
        assert_eq!(p("x").checked_mul(&p("x*y")).unwrap(), p("x^2*y"));
    }

    #[test]
    fn gaussian_conjugates() {
        let vars = Arc::new(vec!["x".into(), "v".into()]);
        let a = parse_polynomial("x + i*v", &vars).unwrap();
        let b = parse_polynomial("x - i*v", &vars).unwrap();
        let prod = a.checked_mul(&b).unwrap();
        assert_eq!(prod, parse_polynomial("x^2 + v^2", &vars).unwrap());
    }

    #[test]
    fn exact_divide_cases() {
        assert_eq!(p("x^2*y^2").exact_divide(&p("x^2*y")).unwrap(), p("y"));
        let vars = Arc::new(vec!["x".into(), "v".into()]);
        let a = parse_polynomial("x^2 + v^2", &vars).unwrap();
        let b = parse_polynomial("x + i*v", &vars).unwrap();
        let q = a.exact_divide(&b).unwrap();
        assert_eq!(q, parse_polynomial("x - i*v", &vars).unwrap());
        assert!(matches!(
            p("x^2*y").exact_divide(&p("y^2")),
            Err(Error::NotDivisible(_, _))
        ));
        assert!(matches!(p("x").exact_divide(&p("0")), Err(Error::DivisionByZero)));
    }

    #[test]
    fn reduce_mod_examples() {
        let f = p("x^2*y");
        assert!(p("x^2*y").reduce_mod(&f).is_zero());
        assert_eq!(p("x^3").reduce_mod(&f), p("x^3"));
        assert_eq!(p("x^3*y^2 + x").reduce_mod(&f), p("x"));
    }

    #[test]
    fn var_mismatch_rejected() {
        let other = Polynomial::one(&Arc::new(vec!["z".into()]));
        assert!(matches!(
            p("x").checked_add(&other),
            Err(Error::VariableMismatch(_, _))
        ));
    }

    #[test]
    fn display_roundtrip() {
        for s in ["x^2*y - 3*y + 1/2", "i*x + (1+2*i)*y^3", "-x", "0", "7"] {
            let q = p(s);
            let back = parse_polynomial(&q.to_string(), &vars2()).unwrap();
            assert_eq!(q, back, "roundtrip of {s}");
        }
    }
}
