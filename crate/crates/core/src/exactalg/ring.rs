use std::sync::Arc;

use super::{parse_polynomial, Polynomial, TermOrder};
use crate::error::{Error, Result};

/// An ambient regular ring `S = k[[x_0, ..., x_n]]` together with a single
/// hypersurface equation `f`, presenting `R = S/(f)`.
///
/// All catalog data are polynomial matrices, so elements are represented as
/// polynomials; unit checks are m-adic (nonzero constant term).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HypersurfaceRing {
    pub label: String,
    vars: Arc<Vec<String>>,
    pub f: Polynomial,
    pub krull_dimension: usize,
}

impl HypersurfaceRing {
    pub fn new(label: &str, var_names: &[&str], f_text: &str) -> Result<Self> {
        let vars = Arc::new(var_names.iter().map(|s| s.to_string()).collect::<Vec<_>>());
        let f = parse_polynomial(f_text, &vars)?;
        if f.is_zero() || f.is_series_unit() {
            return Err(Error::Config(format!(
                "hypersurface equation `{f_text}` must be a nonzero non-unit"
            )));
        }
        Ok(HypersurfaceRing {
            label: label.to_string(),
            krull_dimension: vars.len() - 1,
            vars,
            f,
        })
    }

    /// `k[[x,y]]/(x^2)`: the 1-dimensional (A-infinity) hypersurface.
    pub fn ainf1() -> Self {
        HypersurfaceRing::new("Ainf-1", &["x", "y"], "x^2").unwrap()
    }

    /// `k[[x,y]]/(x^2*y)`: the 1-dimensional (D-infinity) hypersurface.
    pub fn dinf1() -> Self {
        HypersurfaceRing::new("Dinf-1", &["x", "y"], "x^2*y").unwrap()
    }

    /// `k[[x,y,z]]/(x^2*y + z^2)`: the 2-dimensional (D-infinity) hypersurface.
    pub fn dinf2() -> Self {
        HypersurfaceRing::new("Dinf-2", &["x", "y", "z"], "x^2*y + z^2").unwrap()
    }

    /// `k[[x,y,u,v]]/(x^2*y + u^2 + v^2)`: the double branched cover of Dinf-1.
    pub fn dinf3() -> Self {
        HypersurfaceRing::new("Dinf-3", &["x", "y", "u", "v"], "x^2*y + u^2 + v^2").unwrap()
    }

    /// `k[[x,y]]/(x^3 + y^2)`: the cusp.
    pub fn cusp() -> Self {
        HypersurfaceRing::new("cusp", &["x", "y"], "x^3 + y^2").unwrap()
    }

    /// `k[[x,y,z]]/(x^3 + y*z)`: the cone.
    pub fn cone() -> Self {
        HypersurfaceRing::new("cone", &["x", "y", "z"], "x^3 + y*z").unwrap()
    }

    pub fn by_label(label: &str) -> Result<Self> {
        match label {
            "Ainf-1" => Ok(Self::ainf1()),
            "Dinf-1" => Ok(Self::dinf1()),
            "Dinf-2" => Ok(Self::dinf2()),
            "Dinf-3" => Ok(Self::dinf3()),
            "cusp" => Ok(Self::cusp()),
            "cone" => Ok(Self::cone()),
            other => Err(Error::UnsupportedRing(other.to_string())),
        }
    }

    pub fn vars(&self) -> &Arc<Vec<String>> {
        &self.vars
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        parse_polynomial(text, &self.vars)
    }

    /// Canonical coset representative of `p` modulo `(f)` under the given
    /// term order: `normal_form(p) == normal_form(q)` iff `p - q` lies in
    /// `(f)`.
    pub fn normal_form(&self, p: &Polynomial, _order: TermOrder) -> Polynomial {
        p.reduce_mod(&self.f)
    }

    /// Extend the ambient ring by two fresh square variables, producing
    /// `S[[u,v]]/(f + u^2 + v^2)`. Fresh names avoid collisions by suffixing
    /// an index (u, v, then u2, v2, ...).
    pub fn knorrer_extension(&self) -> (HypersurfaceRing, String, String) {
        let mut idx = 0usize;
        let (u, v) = loop {
            let (u, v) = if idx == 0 {
                ("u".to_string(), "v".to_string())
            } else {
                (format!("u{}", idx + 1), format!("v{}", idx + 1))
            };
            if !self.vars.contains(&u) && !self.vars.contains(&v) {
                break (u, v);
            }
            idx += 1;
        };
        let mut names: Vec<String> = self.vars.as_ref().clone();
        names.push(u.clone());
        names.push(v.clone());
        let vars = Arc::new(names);
        let f_lift = self.f.extend_vars(&vars).unwrap();
        let usq = Polynomial::var(&vars, &u).unwrap().pow(2);
        let vsq = Polynomial::var(&vars, &v).unwrap().pow(2);
        let f_new = f_lift.checked_add(&usq).unwrap().checked_add(&vsq).unwrap();
        let label = match self.label.as_str() {
            "Dinf-1" => "Dinf-3".to_string(),
            "Ainf-1" => "Ainf-3".to_string(),
            other => format!("{other}-sharpsharp"),
        };
        let ring = HypersurfaceRing {
            label,
            krull_dimension: vars.len() - 1,
            vars,
            f: f_new,
        };
        (ring, u, v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normal_form_examples() {
        let r = HypersurfaceRing::dinf1();
        assert!(r.normal_form(&r.parse("x^2*y").unwrap(), TermOrder::Lex).is_zero());
        assert_eq!(
            r.normal_form(&r.parse("x^3").unwrap(), TermOrder::Lex),
            r.parse("x^3").unwrap()
        );
        let d3 = HypersurfaceRing::dinf3();
        assert_eq!(
            d3.normal_form(&d3.parse("x^2*y + u^2 + v^2 + u^2").unwrap(), TermOrder::Lex),
            d3.parse("u^2").unwrap()
        );
    }

    #[test]
    fn normal_form_idempotent_and_kills_multiples() {
        let r = HypersurfaceRing::dinf2();
        let p = r.parse("x^2*y*z + z^3 + x*y").unwrap();
        let nf = r.normal_form(&p, TermOrder::Lex);
        assert_eq!(r.normal_form(&nf, TermOrder::Lex), nf);
        let multiple = p.checked_mul(&r.f).unwrap();
        assert!(r.normal_form(&multiple, TermOrder::Lex).is_zero());
    }

    #[test]
    fn knorrer_extension_of_dinf1_is_dinf3() {
        let (ext, u, v) = HypersurfaceRing::dinf1().knorrer_extension();
        assert_eq!(ext.label, "Dinf-3");
        assert_eq!((u.as_str(), v.as_str()), ("u", "v"));
        assert_eq!(ext, HypersurfaceRing::dinf3());
        // iterated extension picks fresh names
        let (ext2, u2, v2) = ext.knorrer_extension();
        assert_eq!((u2.as_str(), v2.as_str()), ("u2", "v2"));
        assert_eq!(ext2.krull_dimension, 5);
    }

    #[test]
    fn rejects_unit_equation() {
        assert!(HypersurfaceRing::new("bad", &["x"], "1 + x").is_err());
        assert!(HypersurfaceRing::by_label("nope").is_err());
    }
}
