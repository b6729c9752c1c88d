//! Matrix factorizations of a hypersurface equation and their morphisms.
//!
//! A matrix factorization of `f` is a pair of square matrices `(phi, psi)`
//! over the ambient ring with `phi * psi = psi * phi = f * I`; its cokernel
//! `coker(phi)` is a maximal Cohen-Macaulay module over `S/(f)`, and every
//! such module without free summands arises this way. All identities here
//! are checked exactly over the polynomial ring, never numerically.

use crate::error::{Error, Result};
use crate::exactalg::{GaussianRational, HypersurfaceRing, PolyMatrix, Polynomial};

/// A verified matrix factorization `(phi, psi)` of the ring's equation.
///
/// Construction goes through [`MatrixFactorization::new`], which re-checks
/// the defining identities, so a value of this type is always valid.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatrixFactorization {
    pub ring: HypersurfaceRing,
    pub phi: PolyMatrix,
    pub psi: PolyMatrix,
}

impl MatrixFactorization {
    pub fn new(ring: &HypersurfaceRing, phi: PolyMatrix, psi: PolyMatrix) -> Result<Self> {
        verify_mf(ring, &phi, &psi)?;
        Ok(MatrixFactorization { ring: ring.clone(), phi, psi })
    }

    /// Parse both matrices in nested-bracket form over the ring's variables.
    pub fn parse(ring: &HypersurfaceRing, phi: &str, psi: &str) -> Result<Self> {
        let phi = PolyMatrix::parse(phi, ring.vars())?;
        let psi = PolyMatrix::parse(psi, ring.vars())?;
        MatrixFactorization::new(ring, phi, psi)
    }

    pub fn size(&self) -> usize {
        self.phi.rows
    }

    /// The syzygy factorization `(psi, phi)`, presenting the first syzygy
    /// of `coker(phi)`.
    pub fn swap(&self) -> MatrixFactorization {
        MatrixFactorization {
            ring: self.ring.clone(),
            phi: self.psi.clone(),
            psi: self.phi.clone(),
        }
    }

    pub fn direct_sum(&self, other: &MatrixFactorization) -> Result<MatrixFactorization> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(
                self.ring.label.clone(),
                other.ring.label.clone(),
            ));
        }
        Ok(MatrixFactorization {
            ring: self.ring.clone(),
            phi: PolyMatrix::block_diag(&self.phi, &other.phi),
            psi: PolyMatrix::block_diag(&self.psi, &other.psi),
        })
    }
}

/// Check `phi * psi = psi * phi = f * I` exactly.
pub fn verify_mf(ring: &HypersurfaceRing, phi: &PolyMatrix, psi: &PolyMatrix) -> Result<()> {
    if !phi.is_square() {
        return Err(Error::NotSquare { rows: phi.rows, cols: phi.cols });
    }
    if phi.rows != psi.rows || phi.cols != psi.cols || !psi.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "factorization pair must be square of equal size, got {}x{} and {}x{}",
            phi.rows, phi.cols, psi.rows, psi.cols
        )));
    }
    for m in [phi, psi] {
        if m.vars() != ring.vars() {
            return Err(Error::VariableMismatch(
                m.vars().as_ref().clone(),
                ring.vars().as_ref().clone(),
            ));
        }
    }
    let f_id = PolyMatrix::scalar(phi.rows, &ring.f);
    if phi.mul(psi)? != f_id {
        return Err(Error::Verification(format!(
            "phi * psi != f * I for phi = {phi}, psi = {psi}"
        )));
    }
    if psi.mul(phi)? != f_id {
        return Err(Error::Verification(format!(
            "psi * phi != f * I for phi = {phi}, psi = {psi}"
        )));
    }
    Ok(())
}

/// Recover the partner matrix of `phi` as `psi = f * adj(phi) / det(phi)`.
///
/// This succeeds exactly when `det(phi)` divides `f * adj(phi)` entrywise
/// and the resulting pair factors `f`; a `phi` whose determinant is a series
/// unit (so `coker(phi)` is zero-dimensional, not maximal Cohen-Macaulay)
/// is rejected.
pub fn complete_factorization(
    ring: &HypersurfaceRing,
    phi: &PolyMatrix,
) -> Result<MatrixFactorization> {
    if phi.vars() != ring.vars() {
        return Err(Error::VariableMismatch(
            phi.vars().as_ref().clone(),
            ring.vars().as_ref().clone(),
        ));
    }
    let det = phi.det()?;
    if det.is_zero() {
        return Err(Error::DetNotPowerOfF(format!(
            "det(phi) = 0, coker is not maximal Cohen-Macaulay (phi = {phi})"
        )));
    }
    if det.is_series_unit() {
        return Err(Error::DetNotPowerOfF(format!(
            "det(phi) = {det} is a series unit, coker(phi) has finite length"
        )));
    }
    let adj = phi.adjugate()?;
    let psi = {
        let mut out = PolyMatrix::zero(phi.rows, phi.cols, ring.vars());
        for i in 0..phi.rows {
            for j in 0..phi.cols {
                let num = ring.f.checked_mul(&adj[(i, j)])?;
                out[(i, j)] = num.exact_divide(&det).map_err(|_| {
                    Error::DetNotPowerOfF(format!(
                        "det(phi) = {det} does not divide f * adj(phi) at entry ({i},{j})"
                    ))
                })?;
            }
        }
        out
    };
    MatrixFactorization::new(ring, phi.clone(), psi)
}

/// A morphism `(alpha, beta): (Phi, Psi) -> (phi, psi)` of factorizations,
/// i.e. `alpha * Phi = phi * beta` and `beta * Psi = psi * alpha`, inducing
/// `coker(Phi) -> coker(phi)` by `alpha` on generators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MFMorphism {
    pub alpha: PolyMatrix,
    pub beta: PolyMatrix,
}

/// Check the two intertwining squares of a morphism exactly.
pub fn verify_morphism(
    source: &MatrixFactorization,
    target: &MatrixFactorization,
    m: &MFMorphism,
) -> Result<()> {
    if source.ring != target.ring {
        return Err(Error::RingMismatch(
            source.ring.label.clone(),
            target.ring.label.clone(),
        ));
    }
    if m.alpha.mul(&source.phi)? != target.phi.mul(&m.beta)? {
        return Err(Error::Verification(format!(
            "alpha * Phi != phi * beta (alpha = {}, beta = {})",
            m.alpha, m.beta
        )));
    }
    if m.beta.mul(&source.psi)? != target.psi.mul(&m.alpha)? {
        return Err(Error::Verification(format!(
            "beta * Psi != psi * alpha (alpha = {}, beta = {})",
            m.alpha, m.beta
        )));
    }
    Ok(())
}

/// Check an equivalence witness `(P, Q)` between two factorizations of the
/// same size: `P * phi_a * Q = phi_b` and `Q * psi_b * P = psi_a`, with
/// `P`, `Q` invertible over the series ring (unit determinants).
pub fn verify_equivalence(
    a: &MatrixFactorization,
    b: &MatrixFactorization,
    p: &PolyMatrix,
    q: &PolyMatrix,
) -> Result<()> {
    if a.ring != b.ring {
        return Err(Error::RingMismatch(a.ring.label.clone(), b.ring.label.clone()));
    }
    for w in [p, q] {
        let det = w.det()?;
        if !det.is_series_unit() {
            return Err(Error::Verification(format!(
                "witness determinant {det} is not a series unit"
            )));
        }
    }
    if p.mul(&a.phi)?.mul(q)? != b.phi {
        return Err(Error::Verification(format!(
            "P * phi_a * Q != phi_b (P = {p}, Q = {q})"
        )));
    }
    if q.mul(&b.psi)?.mul(p)? != a.psi {
        return Err(Error::Verification(format!(
            "Q * psi_b * P != psi_a (P = {p}, Q = {q})"
        )));
    }
    Ok(())
}

/// The double-size lift of a factorization to `S[[u,v]]/(f + u^2 + v^2)`:
///
/// ```text
/// phi## = [ phi        (u + i v) I ]     psi## = [ psi        (-u - i v) I ]
///         [ (-u + i v) I       psi ]             [ (u - i v) I        phi ]
/// ```
///
/// since `(u + i v)(-u + i v) = -(u^2 + v^2)`.
pub struct KnorrerLift {
    pub mf: MatrixFactorization,
    pub ring: HypersurfaceRing,
    pub u: String,
    pub v: String,
}

pub fn knorrer(mf: &MatrixFactorization) -> Result<KnorrerLift> {
    let (ext, u, v) = mf.ring.knorrer_extension();
    let n = mf.size();
    let phi = mf.phi.extend_vars(ext.vars())?;
    let psi = mf.psi.extend_vars(ext.vars())?;
    let uu = Polynomial::var(ext.vars(), &u)?;
    let vv = Polynomial::var(ext.vars(), &v)?;
    let iv = vv.scale(&GaussianRational::i());
    let plus = uu.checked_add(&iv)?; // u + i v
    let minus = iv.checked_sub(&uu)?; // -u + i v
    let phi_lift = PolyMatrix::from_blocks(
        &phi,
        &PolyMatrix::scalar(n, &plus),
        &PolyMatrix::scalar(n, &minus),
        &psi,
    );
    let psi_lift = PolyMatrix::from_blocks(
        &psi,
        &PolyMatrix::scalar(n, &plus.neg()),
        &PolyMatrix::scalar(n, &minus.neg()),
        &phi,
    );
    let lifted = MatrixFactorization::new(&ext, phi_lift, psi_lift)?;
    Ok(KnorrerLift { mf: lifted, ring: ext, u, v })
}

/// Lift a morphism along [`knorrer`]: `(alpha, beta)` becomes
/// `(diag(alpha, beta), diag(beta, alpha))`.
pub fn knorrer_morphism(m: &MFMorphism, ext: &HypersurfaceRing) -> Result<MFMorphism> {
    let a = m.alpha.extend_vars(ext.vars())?;
    let b = m.beta.extend_vars(ext.vars())?;
    Ok(MFMorphism {
        alpha: PolyMatrix::block_diag(&a, &b),
        beta: PolyMatrix::block_diag(&b, &a),
    })
}

/// Whether `det(alpha)` stays a unit once the deformation parameter is
/// inverted: true iff `det(alpha)` has a term free of all `series_vars`
/// (i.e. a pure power of the parameter), making `alpha` invertible over
/// `k((t))[[series_vars]]`.
pub fn unit_after_inverting_t(alpha: &PolyMatrix, series_vars: &[&str]) -> Result<bool> {
    let det = alpha.det()?;
    Ok(!det.substitute_zero(series_vars).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_by_one_factorizations() {
        let r = HypersurfaceRing::dinf1();
        let mf = MatrixFactorization::parse(&r, "[[x]]", "[[x*y]]").unwrap();
        assert_eq!(mf.size(), 1);
        let sw = mf.swap();
        assert_eq!(sw.phi, PolyMatrix::parse("[[x*y]]", r.vars()).unwrap());
        assert!(MatrixFactorization::parse(&r, "[[x]]", "[[x]]").is_err());
    }

    #[test]
    fn cusp_maximal_ideal_pair() {
        let r = HypersurfaceRing::cusp();
        let mf =
            MatrixFactorization::parse(&r, "[[x^2, -y], [y, x]]", "[[x, y], [-y, x^2]]").unwrap();
        assert_eq!(mf.size(), 2);
    }

    #[test]
    fn complete_factorization_recovers_partner() {
        let r = HypersurfaceRing::dinf1();
        let phi = PolyMatrix::parse("[[x, y], [0, -x]]", r.vars()).unwrap();
        let mf = complete_factorization(&r, &phi).unwrap();
        assert_eq!(
            mf.psi,
            PolyMatrix::parse("[[x*y, y^2], [0, -x*y]]", r.vars()).unwrap()
        );
    }

    #[test]
    fn complete_factorization_rejects_units_and_singular() {
        let r = HypersurfaceRing::dinf1();
        let unit = PolyMatrix::parse("[[1 + x]]", r.vars()).unwrap();
        assert!(matches!(
            complete_factorization(&r, &unit),
            Err(Error::DetNotPowerOfF(_))
        ));
        let singular = PolyMatrix::parse("[[x, x], [x, x]]", r.vars()).unwrap();
        assert!(matches!(
            complete_factorization(&r, &singular),
            Err(Error::DetNotPowerOfF(_))
        ));
    }

    #[test]
    fn direct_sum_and_swap() {
        let r = HypersurfaceRing::dinf1();
        let a = MatrixFactorization::parse(&r, "[[x]]", "[[x*y]]").unwrap();
        let b = MatrixFactorization::parse(&r, "[[x^2]]", "[[y]]").unwrap();
        let s = a.direct_sum(&b).unwrap();
        assert_eq!(s.size(), 2);
        assert_eq!(s.phi, PolyMatrix::parse("[[x, 0], [0, x^2]]", r.vars()).unwrap());
        // swap of a sum is the sum of swaps
        assert_eq!(s.swap().phi, a.swap().direct_sum(&b.swap()).unwrap().phi);
    }

    #[test]
    fn knorrer_lift_is_a_factorization() {
        let r = HypersurfaceRing::dinf1();
        let mf = MatrixFactorization::parse(&r, "[[x]]", "[[x*y]]").unwrap();
        let lift = knorrer(&mf).unwrap();
        assert_eq!(lift.ring.label, "Dinf-3");
        assert_eq!(lift.mf.size(), 2);
        // double lift works too, over a 6-variable ring
        let lift2 = knorrer(&lift.mf).unwrap();
        assert_eq!(lift2.mf.size(), 4);
        assert_eq!(lift2.ring.krull_dimension, 5);
    }

    #[test]
    fn identity_morphism_and_equivalence() {
        let r = HypersurfaceRing::cusp();
        let mf =
            MatrixFactorization::parse(&r, "[[x^2, -y], [y, x]]", "[[x, y], [-y, x^2]]").unwrap();
        let id = PolyMatrix::identity(2, r.vars());
        let m = MFMorphism { alpha: id.clone(), beta: id.clone() };
        verify_morphism(&mf, &mf, &m).unwrap();
        verify_equivalence(&mf, &mf, &id, &id).unwrap();
        // a non-witness is rejected
        let bad = PolyMatrix::parse("[[1, 0], [0, -1]]", r.vars()).unwrap();
        assert!(verify_equivalence(&mf, &mf, &bad, &id).is_err());
    }

    #[test]
    fn knorrer_morphism_lifts() {
        let r = HypersurfaceRing::dinf1();
        let a = MatrixFactorization::parse(&r, "[[x]]", "[[x*y]]").unwrap();
        let lift = knorrer(&a).unwrap();
        let m = MFMorphism {
            alpha: PolyMatrix::parse("[[y]]", r.vars()).unwrap(),
            beta: PolyMatrix::parse("[[y]]", r.vars()).unwrap(),
        };
        verify_morphism(&a, &a, &m).unwrap();
        let lm = knorrer_morphism(&m, &lift.ring).unwrap();
        verify_morphism(&lift.mf, &lift.mf, &lm).unwrap();
    }

    #[test]
    fn unit_detection_in_parameter() {
        let vars = std::sync::Arc::new(vec!["x".to_string(), "y".to_string(), "t".to_string()]);
        let a = PolyMatrix::parse("[[0, -1], [t^2, -t*y]]", &vars).unwrap();
        assert!(unit_after_inverting_t(&a, &["x", "y"]).unwrap());
        let b = PolyMatrix::parse("[[x, 0], [0, t]]", &vars).unwrap();
        assert!(!unit_after_inverting_t(&b, &["x", "y"]).unwrap());
    }
}
