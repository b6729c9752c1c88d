//! Per-ring catalogs of indecomposable maximal Cohen-Macaulay classes.
//!
//! Each supported ring ships its classification data: a matrix factorization
//! (or free rank) per class, the stored Hilbert-Samuel multiplicity, a
//! syzygy witness identifying the swapped factorization with a catalog
//! class, and identification rules expressing the `n = 0` family members in
//! terms of catalog classes. Stored multiplicities are authoritative for
//! the engine; the oracle cross-check runs in the verification suite.
//!
//! Class names are plain ASCII and double as the vector text format:
//! `R`, `xy`, `x`, `y`, `x2`, `Mp1`, `Mm2`, `Ip1`, `Im1` (one-dimensional
//! D-infinity), `m` (cusp), `I`, `J`, `M1`, `N1` (two-dimensional rings),
//! with a `##` suffix per Knorrer lift.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{HypersurfaceRing, PolyMatrix};
use crate::matfac::{self, MatrixFactorization};
use crate::truncview::{multiplicity_oracle, ArithMode};

/// How a class is presented: a free module of given rank, or the cokernel
/// of a matrix factorization.
#[derive(Clone, Debug)]
pub enum Presentation {
    Free { rank: usize },
    Mf(MatrixFactorization),
}

/// Witness that `swap(mf)` is equivalent to the factorization of `target`:
/// `P * psi * Q = phi_target` and `Q * psi_target * P = phi`.
#[derive(Clone, Debug)]
pub struct SyzygyWitness {
    pub target: String,
    pub p: PolyMatrix,
    pub q: PolyMatrix,
}

/// One isomorphism class of an indecomposable MCM module.
#[derive(Clone, Debug)]
pub struct MCMClass {
    pub ring_label: String,
    pub family: String,
    pub param: Option<u32>,
    /// Number of Knorrer lifts applied (0 for base catalogs).
    pub lift_level: u32,
    pub presentation: Presentation,
    /// Stored multiplicity (cross-checked against the oracle in tests).
    pub e: usize,
    pub syzygy: Option<SyzygyWitness>,
}

impl MCMClass {
    pub fn name(&self) -> String {
        let mut s = self.family.clone();
        if let Some(n) = self.param {
            s.push_str(&n.to_string());
        }
        for _ in 0..self.lift_level {
            s.push_str("##");
        }
        s
    }

    pub fn is_free(&self) -> bool {
        matches!(self.presentation, Presentation::Free { .. })
    }

    /// Presentation matrix for the truncation oracle: `phi`, or a
    /// zero-column matrix for a free module.
    pub fn presentation_matrix(&self, ring: &HypersurfaceRing) -> PolyMatrix {
        match &self.presentation {
            Presentation::Free { rank } => PolyMatrix::zero(*rank, 0, ring.vars()),
            Presentation::Mf(mf) => mf.phi.clone(),
        }
    }

    pub fn mf(&self) -> Result<&MatrixFactorization> {
        match &self.presentation {
            Presentation::Mf(mf) => Ok(mf),
            Presentation::Free { .. } => Err(Error::Config(format!(
                "class {} is free and has no matrix factorization",
                self.name()
            ))),
        }
    }
}

/// An isomorphism `lhs = rhs_1 + ... + rhs_k` identifying a non-catalog
/// presentation (a family member at `n = 0`) with a multiset of catalog
/// classes. Both sides have equal multiplicity.
#[derive(Clone, Debug)]
pub struct IdentificationRule {
    pub lhs_name: String,
    pub lhs_phi: PolyMatrix,
    pub rhs: Vec<String>,
    pub provenance: String,
}

/// An immutable per-ring catalog: classes in canonical order plus
/// identification rules.
#[derive(Clone, Debug)]
pub struct Catalog {
    pub ring: HypersurfaceRing,
    pub n_max: u32,
    pub lift_level: u32,
    pub classes: Vec<MCMClass>,
    pub identifications: Vec<IdentificationRule>,
}

impl Catalog {
    pub fn get(&self, name: &str) -> Result<&MCMClass> {
        self.classes
            .iter()
            .find(|c| c.name() == name)
            .ok_or_else(|| Error::UnknownClass(name.to_string()))
    }

    pub fn names(&self) -> Vec<String> {
        self.classes.iter().map(|c| c.name()).collect()
    }

    /// The rank-one free class (`R`, possibly lifted).
    pub fn free_class(&self) -> &MCMClass {
        self.classes
            .iter()
            .find(|c| c.is_free())
            .expect("every catalog contains the free class")
    }

    /// Multiplicity of a class by name.
    pub fn e_of(&self, name: &str) -> Result<usize> {
        Ok(self.get(name)?.e)
    }
}

fn mf(ring: &HypersurfaceRing, phi: &str, psi: &str) -> Presentation {
    Presentation::Mf(
        MatrixFactorization::parse(ring, phi, psi).expect("catalog factorization verifies"),
    )
}

fn witness(ring: &HypersurfaceRing, target: &str, p: &str, q: &str) -> Option<SyzygyWitness> {
    Some(SyzygyWitness {
        target: target.to_string(),
        p: PolyMatrix::parse(p, ring.vars()).expect("catalog witness parses"),
        q: PolyMatrix::parse(q, ring.vars()).expect("catalog witness parses"),
    })
}

fn class(
    ring: &HypersurfaceRing,
    family: &str,
    param: Option<u32>,
    presentation: Presentation,
    e: usize,
    syzygy: Option<SyzygyWitness>,
) -> MCMClass {
    MCMClass {
        ring_label: ring.label.clone(),
        family: family.to_string(),
        param,
        lift_level: 0,
        presentation,
        e,
        syzygy,
    }
}

/// Load the catalog of a supported ring with family parameters up to
/// `n_max`.
pub fn load_catalog(ring_label: &str, n_max: u32) -> Result<Catalog> {
    match ring_label {
        "Ainf-1" => Ok(ainf1_catalog(n_max)),
        "Dinf-1" => Ok(dinf1_catalog(n_max)),
        "Dinf-2" => Ok(dinf2_catalog(n_max)),
        "Dinf-3" => lift_catalog(&dinf1_catalog(n_max), 1),
        "cusp" => Ok(cusp_catalog()),
        "cone" => Ok(cone_catalog()),
        other => Err(Error::UnsupportedRing(other.to_string())),
    }
}

/// `k[[x,y]]/(x^2)`: classes `R`, `x` (the ideal `(x)`), `I_n = (x, y^n)`.
fn ainf1_catalog(n_max: u32) -> Catalog {
    let r = HypersurfaceRing::ainf1();
    let mut classes = vec![
        class(&r, "R", None, Presentation::Free { rank: 1 }, 2, None),
        class(
            &r,
            "x",
            None,
            mf(&r, "[[x]]", "[[x]]"),
            1,
            witness(&r, "x", "[[1]]", "[[1]]"),
        ),
    ];
    for n in 1..=n_max {
        let phi = format!("[[x, y^{n}], [0, -x]]");
        classes.push(class(
            &r,
            "I",
            Some(n),
            mf(&r, &phi, &phi),
            2,
            witness(&r, &format!("I{n}"), "[[1, 0], [0, 1]]", "[[1, 0], [0, 1]]"),
        ));
    }
    Catalog { ring: r, n_max, lift_level: 0, classes, identifications: Vec::new() }
}

/// Family matrices over `k[[x,y]]/(x^2 y)`: `phi_n = (x, y^n; 0, -x)` and
/// its partner `psi_n = (xy, y^{n+1}; 0, -xy)`.
fn dinf1_phi(n: u32) -> String {
    format!("[[x, y^{n}], [0, -x]]")
}

fn dinf1_psi(n: u32) -> String {
    format!("[[x*y, y^{}], [0, -x*y]]", n + 1)
}

/// Ideal factorizations over `k[[x,y]]/(x^2 y)`:
/// `I_n^+ = (x, y^n)` via `(x, y^n; 0, -xy)` and `I_n^- = (xy, y^n)` via
/// the swap.
fn dinf1_ip(n: u32) -> (String, String) {
    (
        format!("[[x, y^{n}], [0, -x*y]]"),
        format!("[[x*y, y^{n}], [0, -x]]"),
    )
}

fn dinf1_catalog(n_max: u32) -> Catalog {
    let r = HypersurfaceRing::dinf1();
    let id2 = "[[1, 0], [0, 1]]";
    let mut classes = vec![
        class(&r, "R", None, Presentation::Free { rank: 1 }, 3, None),
        // (xy) = R/(x), (x) = R/(xy), (y) = R/(x^2), (x^2) = R/(y);
        // the four 1x1 pairs swap into each other.
        class(&r, "xy", None, mf(&r, "[[x]]", "[[x*y]]"), 1, witness(&r, "x", "[[1]]", "[[1]]")),
        class(&r, "x", None, mf(&r, "[[x*y]]", "[[x]]"), 2, witness(&r, "xy", "[[1]]", "[[1]]")),
        class(&r, "y", None, mf(&r, "[[x^2]]", "[[y]]"), 2, witness(&r, "x2", "[[1]]", "[[1]]")),
        class(&r, "x2", None, mf(&r, "[[y]]", "[[x^2]]"), 1, witness(&r, "y", "[[1]]", "[[1]]")),
    ];
    for n in 1..=n_max {
        let (phi, psi) = (dinf1_phi(n), dinf1_psi(n));
        classes.push(class(
            &r,
            "Mp",
            Some(n),
            mf(&r, &phi, &psi),
            2,
            witness(&r, &format!("Mm{n}"), id2, id2),
        ));
        classes.push(class(
            &r,
            "Mm",
            Some(n),
            mf(&r, &psi, &phi),
            4,
            witness(&r, &format!("Mp{n}"), id2, id2),
        ));
        let (ip, im) = dinf1_ip(n);
        classes.push(class(
            &r,
            "Ip",
            Some(n),
            mf(&r, &ip, &im),
            3,
            witness(&r, &format!("Im{n}"), id2, id2),
        ));
        classes.push(class(
            &r,
            "Im",
            Some(n),
            mf(&r, &im, &ip),
            3,
            witness(&r, &format!("Ip{n}"), id2, id2),
        ));
    }
    let ident = |lhs: &str, phi: &str, rhs: &[&str], prov: &str| IdentificationRule {
        lhs_name: lhs.to_string(),
        lhs_phi: PolyMatrix::parse(phi, r.vars()).unwrap(),
        rhs: rhs.iter().map(|s| s.to_string()).collect(),
        provenance: prov.to_string(),
    };
    let identifications = vec![
        // The n = 0 family members decompose into catalog classes.
        ident("Mp0", "[[x, 1], [0, -x]]", &["y"], "M_0^+ = R/(x^2) = (y)"),
        ident(
            "Mm0",
            "[[x*y, y], [0, -x*y]]",
            &["R", "x2"],
            "M_0^- = R + R/(y) = R + (x^2)",
        ),
        ident("Ip0", "[[x, 1], [0, -x*y]]", &["R"], "I_0^+ = (x, 1) = R"),
        ident("Im0", "[[x*y, 1], [0, -x]]", &["R"], "I_0^- = (xy, 1) = R"),
    ];
    Catalog { ring: r, n_max, lift_level: 0, classes, identifications }
}

/// Assemble the one-variable branched-cover factorization
/// `([phi, zI; -zI, psi], [psi, -zI; zI, phi])` of `f + z^2` from a
/// factorization `(phi, psi)` of `f`.
fn z_lift(
    ring: &HypersurfaceRing,
    z: &str,
    phi: &PolyMatrix,
    psi: &PolyMatrix,
) -> Result<MatrixFactorization> {
    let n = phi.rows;
    let zp = crate::exactalg::Polynomial::var(ring.vars(), z)?;
    let phi = phi.extend_vars(ring.vars())?;
    let psi = psi.extend_vars(ring.vars())?;
    let zi = PolyMatrix::scalar(n, &zp);
    let phi_l = PolyMatrix::from_blocks(&phi, &zi, &zi.neg(), &psi);
    let psi_l = PolyMatrix::from_blocks(&psi, &zi.neg(), &zi, &phi);
    MatrixFactorization::new(ring, phi_l, psi_l)
}

fn dinf2_catalog(n_max: u32) -> Catalog {
    let r = HypersurfaceRing::dinf2();
    let base = HypersurfaceRing::dinf1();
    // conjugation by the block antidiagonal [0, I; I, 0] swaps the two
    // diagonal blocks, giving the syzygy self-identification of M_n, N_n
    let flip4 = "[[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]]";
    let mut classes = vec![
        class(&r, "R", None, Presentation::Free { rank: 1 }, 2, None),
        class(
            &r,
            "I",
            None,
            mf(&r, "[[z, x], [-x*y, z]]", "[[z, -x], [x*y, z]]"),
            2,
            witness(&r, "I", "[[-1, 0], [0, 1]]", "[[-1, 0], [0, 1]]"),
        ),
        class(
            &r,
            "J",
            None,
            mf(&r, "[[z, y], [-x^2, z]]", "[[z, -y], [x^2, z]]"),
            2,
            witness(&r, "J", "[[-1, 0], [0, 1]]", "[[-1, 0], [0, 1]]"),
        ),
    ];
    for n in 1..=n_max {
        let phi = PolyMatrix::parse(&dinf1_phi(n), base.vars()).unwrap();
        let psi = PolyMatrix::parse(&dinf1_psi(n), base.vars()).unwrap();
        let m = z_lift(&r, "z", &phi, &psi).expect("catalog lift verifies");
        classes.push(class(
            &r,
            "M",
            Some(n),
            Presentation::Mf(m),
            4,
            witness(&r, &format!("M{n}"), flip4, flip4),
        ));
        let (ip, im) = dinf1_ip(n);
        let phi = PolyMatrix::parse(&ip, base.vars()).unwrap();
        let psi = PolyMatrix::parse(&im, base.vars()).unwrap();
        let nmf = z_lift(&r, "z", &phi, &psi).expect("catalog lift verifies");
        classes.push(class(
            &r,
            "N",
            Some(n),
            Presentation::Mf(nmf),
            4,
            witness(&r, &format!("N{n}"), flip4, flip4),
        ));
    }
    Catalog { ring: r, n_max, lift_level: 0, classes, identifications: Vec::new() }
}

fn cusp_catalog() -> Catalog {
    let r = HypersurfaceRing::cusp();
    let flip = "[[0, 1], [1, 0]]";
    let classes = vec![
        class(&r, "R", None, Presentation::Free { rank: 1 }, 2, None),
        // the maximal ideal m = (x, y)
        class(
            &r,
            "m",
            None,
            mf(&r, "[[x^2, -y], [y, x]]", "[[x, y], [-y, x^2]]"),
            2,
            witness(&r, "m", flip, flip),
        ),
    ];
    Catalog { ring: r, n_max: 0, lift_level: 0, classes, identifications: Vec::new() }
}

fn cone_catalog() -> Catalog {
    let r = HypersurfaceRing::cone();
    let id2 = "[[1, 0], [0, 1]]";
    let classes = vec![
        class(&r, "R", None, Presentation::Free { rank: 1 }, 2, None),
        // I = (x, y) and J = its syzygy; the two factorizations swap into
        // each other, so the witnesses are identities.
        class(
            &r,
            "I",
            None,
            mf(&r, "[[x, -y], [z, x^2]]", "[[x^2, y], [-z, x]]"),
            2,
            witness(&r, "J", id2, id2),
        ),
        class(
            &r,
            "J",
            None,
            mf(&r, "[[x^2, y], [-z, x]]", "[[x, -y], [z, x^2]]"),
            2,
            witness(&r, "I", id2, id2),
        ),
    ];
    Catalog { ring: r, n_max: 0, lift_level: 0, classes, identifications: Vec::new() }
}

/// Stored multiplicities of once-lifted classes, by base ring and family.
/// Returns `None` for combinations that must fall back to the oracle.
fn lifted_e(base_ring: &str, family: &str, free_rank: Option<usize>) -> Option<usize> {
    if let Some(rank) = free_rank {
        // e of the lifted free module of the same rank: e(R##) per rank
        let unit = match base_ring {
            "Dinf-1" | "Ainf-1" => 2,
            _ => return None,
        };
        return Some(rank * unit);
    }
    match (base_ring, family) {
        ("Dinf-1", "xy") | ("Dinf-1", "x") | ("Dinf-1", "y") | ("Dinf-1", "x2") => Some(2),
        ("Dinf-1", "Mp") | ("Dinf-1", "Mm") | ("Dinf-1", "Ip") | ("Dinf-1", "Im") => Some(4),
        ("Ainf-1", "x") => Some(2),
        _ => None,
    }
}

/// Apply the Knorrer construction to a whole catalog `times` times:
/// every factorization, syzygy witness, and identification rule lifts, and
/// free classes stay free over the extended ring.
pub fn lift_catalog(cat: &Catalog, times: u32) -> Result<Catalog> {
    if times == 0 {
        return Err(Error::Config("lift count must be at least 1".into()));
    }
    let mut out = lift_once(cat)?;
    for _ in 1..times {
        out = lift_once(&out)?;
    }
    Ok(out)
}

fn lift_once(cat: &Catalog) -> Result<Catalog> {
    let (ext, _, _) = cat.ring.knorrer_extension();
    let mut classes = Vec::new();
    for c in &cat.classes {
        let (presentation, e) = match &c.presentation {
            Presentation::Free { rank } => {
                let e = match lifted_e(&cat.ring.label, &c.family, Some(*rank)) {
                    Some(e) => e,
                    None => oracle_e(&ext, &PolyMatrix::zero(*rank, 0, ext.vars()))?,
                };
                (Presentation::Free { rank: *rank }, e)
            }
            Presentation::Mf(m) => {
                let lift = matfac::knorrer(m)?;
                if lift.ring != ext {
                    return Err(Error::RingMismatch(lift.ring.label, ext.label.clone()));
                }
                let e = match lifted_e(&cat.ring.label, &c.family, None) {
                    Some(e) => e,
                    None => oracle_e(&ext, &lift.mf.phi)?,
                };
                (Presentation::Mf(lift.mf), e)
            }
        };
        // witness lift: for (P, Q) with P psi Q = phi_T, the block witness
        // (diag(P, -Q^{-1}), diag(Q, -P^{-1})) identifies swap(mf##) with
        // the lifted target factorization
        let syzygy = match &c.syzygy {
            None => None,
            Some(w) => {
                let p = w.p.extend_vars(ext.vars())?;
                let q = w.q.extend_vars(ext.vars())?;
                let p2 = PolyMatrix::block_diag(&p, &q.constant_inverse()?.neg());
                let q2 = PolyMatrix::block_diag(&q, &p.constant_inverse()?.neg());
                Some(SyzygyWitness { target: format!("{}##", w.target), p: p2, q: q2 })
            }
        };
        classes.push(MCMClass {
            ring_label: ext.label.clone(),
            family: c.family.clone(),
            param: c.param,
            lift_level: c.lift_level + 1,
            presentation,
            e,
            syzygy,
        });
    }
    let free_name = {
        let mut n = cat.free_class().name();
        n.push_str("##");
        n
    };
    let free_e = classes
        .iter()
        .find(|c| c.is_free())
        .map(|c| c.e)
        .expect("free class present");
    let mut identifications = Vec::new();
    for rule in &cat.identifications {
        let base = MatrixFactorization::new(
            &cat.ring,
            rule.lhs_phi.clone(),
            matfac::complete_factorization(&cat.ring, &rule.lhs_phi)?.psi,
        )?;
        let lift = matfac::knorrer(&base)?;
        let mut rhs: Vec<String> = rule.rhs.iter().map(|n| format!("{n}##")).collect();
        // A lifted identification must stay multiplicity-balanced; the
        // cokernel of the lifted presentation can gain free summands
        // (stable isomorphisms only see the nonfree part), so pad with
        // lifted free copies until the stored multiplicities balance.
        let family = rule
            .lhs_name
            .trim_end_matches(|ch: char| ch.is_ascii_digit())
            .to_string();
        let lhs_e = match lifted_e(&cat.ring.label, &family, None) {
            Some(e) => e,
            None => oracle_e(&ext, &lift.mf.phi)?,
        };
        let mut sum: usize = 0;
        for n in &rhs {
            sum += classes
                .iter()
                .find(|c| &c.name() == n)
                .map(|c| c.e)
                .ok_or_else(|| Error::UnknownClass(n.clone()))?;
        }
        while sum < lhs_e {
            rhs.push(free_name.clone());
            sum += free_e;
        }
        if sum != lhs_e {
            return Err(Error::Verification(format!(
                "lifted identification {} cannot be multiplicity-balanced ({sum} vs {lhs_e})",
                rule.lhs_name
            )));
        }
        identifications.push(IdentificationRule {
            lhs_name: format!("{}##", rule.lhs_name),
            lhs_phi: lift.mf.phi.clone(),
            rhs,
            provenance: format!("{}; lifted", rule.provenance),
        });
    }
    Ok(Catalog {
        ring: ext,
        n_max: cat.n_max,
        lift_level: cat.lift_level + 1,
        classes,
        identifications,
    })
}

fn oracle_e(ring: &HypersurfaceRing, phi: &PolyMatrix) -> Result<usize> {
    let rep = multiplicity_oracle(
        phi,
        ring,
        crate::truncview::default_s_max(ring),
        ArithMode::default_for(ring),
    )?;
    Ok(rep.multiplicity)
}

/// The named ideal classes of a ring together with their factorizations.
pub fn ideal_presentations(ring_label: &str) -> Result<Vec<(String, MatrixFactorization)>> {
    let cat = load_catalog(ring_label, 2)?;
    let gens = |c: &MCMClass| -> Option<String> {
        match (ring_label, c.family.as_str(), c.param) {
            ("Ainf-1", "x", _) => Some("(x)".into()),
            ("Ainf-1", "I", Some(n)) => Some(format!("(x, y^{n})")),
            ("Dinf-1", "xy", _) => Some("(xy)".into()),
            ("Dinf-1", "x", _) => Some("(x)".into()),
            ("Dinf-1", "y", _) => Some("(y)".into()),
            ("Dinf-1", "x2", _) => Some("(x^2)".into()),
            ("Dinf-1", "Ip", Some(n)) => Some(format!("(x, y^{n})")),
            ("Dinf-1", "Im", Some(n)) => Some(format!("(xy, y^{n})")),
            ("Dinf-2", "I", _) => Some("(x, z)".into()),
            ("Dinf-2", "J", _) => Some("(y, z)".into()),
            ("cusp", "m", _) => Some("(x, y)".into()),
            ("cone", "I", _) => Some("(x, y)".into()),
            ("cone", "J", _) => Some("(x^2, z)".into()),
            _ => None,
        }
    };
    let mut out = Vec::new();
    for c in &cat.classes {
        if let Some(g) = gens(c) {
            out.push((g, c.mf()?.clone()));
        }
    }
    Ok(out)
}

/// Full verification of a catalog: factorization identities, syzygy
/// witnesses, oracle multiplicities, and identification balance.
pub fn verify_catalog(cat: &Catalog, mode: ArithMode) -> Result<()> {
    for c in &cat.classes {
        if let Presentation::Mf(m) = &c.presentation {
            matfac::verify_mf(&cat.ring, &m.phi, &m.psi)?;
            if let Some(w) = &c.syzygy {
                let target = cat.get(&w.target)?;
                matfac::verify_equivalence(&m.swap(), target.mf()?, &w.p, &w.q)?;
            }
        }
        let rep = multiplicity_oracle(
            &c.presentation_matrix(&cat.ring),
            &cat.ring,
            crate::truncview::default_s_max(&cat.ring),
            mode,
        )?;
        if rep.multiplicity != c.e {
            return Err(Error::Verification(format!(
                "stored e({}) = {} but oracle gives {}",
                c.name(),
                c.e,
                rep.multiplicity
            )));
        }
    }
    for rule in &cat.identifications {
        let mut sum = 0usize;
        for n in &rule.rhs {
            sum += cat.e_of(n)?;
        }
        let rep = multiplicity_oracle(
            &rule.lhs_phi,
            &cat.ring,
            crate::truncview::default_s_max(&cat.ring),
            mode,
        )?;
        if rep.multiplicity != sum {
            return Err(Error::Verification(format!(
                "identification {} is not multiplicity-balanced: {} vs {}",
                rule.lhs_name, rep.multiplicity, sum
            )));
        }
    }
    Ok(())
}

// ---- declarative catalog documents ----

/// Serializable form of a catalog; matrices are stored in the nested
/// bracket text format and round-trip through the parser. User-supplied
/// rings are accepted in the same schema.
#[derive(Serialize, Deserialize)]
pub struct CatalogDoc {
    pub ring: String,
    pub vars: Vec<String>,
    pub equation: String,
    pub n_max: u32,
    pub lift_level: u32,
    pub classes: Vec<ClassDoc>,
    pub identifications: Vec<IdentificationDoc>,
}

#[derive(Serialize, Deserialize)]
pub struct ClassDoc {
    pub name: String,
    pub family: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub param: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub free_rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phi: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub psi: Option<String>,
    pub e: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub syzygy: Option<SyzygyDoc>,
}

#[derive(Serialize, Deserialize)]
pub struct SyzygyDoc {
    pub target: String,
    pub p: String,
    pub q: String,
}

#[derive(Serialize, Deserialize)]
pub struct IdentificationDoc {
    pub lhs: String,
    pub lhs_phi: String,
    pub rhs: Vec<String>,
    pub provenance: String,
}

pub fn to_document(cat: &Catalog) -> CatalogDoc {
    CatalogDoc {
        ring: cat.ring.label.clone(),
        vars: cat.ring.vars().as_ref().clone(),
        equation: cat.ring.f.to_string(),
        n_max: cat.n_max,
        lift_level: cat.lift_level,
        classes: cat
            .classes
            .iter()
            .map(|c| {
                let (free_rank, phi, psi) = match &c.presentation {
                    Presentation::Free { rank } => (Some(*rank), None, None),
                    Presentation::Mf(m) => (None, Some(m.phi.to_string()), Some(m.psi.to_string())),
                };
                ClassDoc {
                    name: c.name(),
                    family: c.family.clone(),
                    param: c.param,
                    free_rank,
                    phi,
                    psi,
                    e: c.e,
                    syzygy: c.syzygy.as_ref().map(|w| SyzygyDoc {
                        target: w.target.clone(),
                        p: w.p.to_string(),
                        q: w.q.to_string(),
                    }),
                }
            })
            .collect(),
        identifications: cat
            .identifications
            .iter()
            .map(|r| IdentificationDoc {
                lhs: r.lhs_name.clone(),
                lhs_phi: r.lhs_phi.to_string(),
                rhs: r.rhs.clone(),
                provenance: r.provenance.clone(),
            })
            .collect(),
    }
}

pub fn from_document(doc: &CatalogDoc) -> Result<Catalog> {
    let var_refs: Vec<&str> = doc.vars.iter().map(|s| s.as_str()).collect();
    let ring = HypersurfaceRing::new(&doc.ring, &var_refs, &doc.equation)?;
    let mut classes = Vec::new();
    for c in &doc.classes {
        let presentation = match (c.free_rank, &c.phi, &c.psi) {
            (Some(rank), None, None) => Presentation::Free { rank },
            (None, Some(phi), Some(psi)) => {
                Presentation::Mf(MatrixFactorization::parse(&ring, phi, psi)?)
            }
            _ => {
                return Err(Error::Config(format!(
                    "class {} must have either free_rank or phi/psi",
                    c.name
                )))
            }
        };
        let syzygy = match &c.syzygy {
            None => None,
            Some(w) => Some(SyzygyWitness {
                target: w.target.clone(),
                p: PolyMatrix::parse(&w.p, ring.vars())?,
                q: PolyMatrix::parse(&w.q, ring.vars())?,
            }),
        };
        classes.push(MCMClass {
            ring_label: ring.label.clone(),
            family: c.family.clone(),
            param: c.param,
            lift_level: doc.lift_level,
            presentation,
            e: c.e,
            syzygy,
        });
    }
    let identifications = doc
        .identifications
        .iter()
        .map(|r| {
            Ok(IdentificationRule {
                lhs_name: r.lhs.clone(),
                lhs_phi: PolyMatrix::parse(&r.lhs_phi, ring.vars())?,
                rhs: r.rhs.clone(),
                provenance: r.provenance.clone(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Catalog {
        ring,
        n_max: doc.n_max,
        lift_level: doc.lift_level,
        classes,
        identifications,
    })
}
