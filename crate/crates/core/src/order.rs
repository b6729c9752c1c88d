//! The closure engine: bounded reachability over module vectors.
//!
//! A module vector is a finite multiset of catalog class names, standing
//! for a direct sum. The closure of a generator g collects every universe
//! member N such that `n*g` rewrites to `n*N` for some scale `n <= n_max`,
//! each step replacing the source multiset of a verified atomic fact by its
//! target. Membership verdicts are certificates with replayable traces;
//! absence is always reported as "not found within bounds", never as
//! non-membership.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::catalog::Catalog;
use crate::degen::FactStore;
use crate::error::{Error, Result};

/// A multiset of catalog class names, representing a direct sum.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct ModuleVector {
    counts: BTreeMap<String, usize>,
}

impl ModuleVector {
    pub fn empty() -> Self {
        ModuleVector::default()
    }

    pub fn from_names<S: AsRef<str>>(names: &[S]) -> Self {
        let mut v = ModuleVector::empty();
        for n in names {
            v.insert(n.as_ref(), 1);
        }
        v
    }

    pub fn insert(&mut self, name: &str, count: usize) {
        if count > 0 {
            *self.counts.entry(name.to_string()).or_insert(0) += count;
        }
    }

    pub fn count(&self, name: &str) -> usize {
        self.counts.get(name).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &usize)> {
        self.counts.iter()
    }

    pub fn scaled(&self, n: usize) -> ModuleVector {
        if n == 0 {
            return ModuleVector::empty();
        }
        ModuleVector {
            counts: self.counts.iter().map(|(k, v)| (k.clone(), v * n)).collect(),
        }
    }

    pub fn plus(&self, other: &ModuleVector) -> ModuleVector {
        let mut out = self.clone();
        for (k, v) in &other.counts {
            out.insert(k, *v);
        }
        out
    }

    /// `self - other`, if `other` is contained in `self`.
    pub fn checked_minus(&self, other: &ModuleVector) -> Option<ModuleVector> {
        let mut out = self.clone();
        for (k, v) in &other.counts {
            let have = out.counts.get_mut(k)?;
            if *have < *v {
                return None;
            }
            *have -= v;
            if *have == 0 {
                out.counts.remove(k);
            }
        }
        Some(out)
    }

    pub fn contains(&self, other: &ModuleVector) -> bool {
        other
            .counts
            .iter()
            .all(|(k, v)| self.count(k) >= *v)
    }

    /// Total multiplicity with respect to a catalog.
    pub fn total_e(&self, cat: &Catalog) -> Result<usize> {
        let mut sum = 0;
        for (name, count) in &self.counts {
            sum += cat.e_of(name)? * count;
        }
        Ok(sum)
    }

    /// Parse the text format `R^2 + m` (`0` for the zero module).
    pub fn parse(text: &str, cat: &Catalog) -> Result<ModuleVector> {
        let text = text.trim();
        if text == "0" || text.is_empty() {
            return Ok(ModuleVector::empty());
        }
        let mut v = ModuleVector::empty();
        for part in text.split('+') {
            let part = part.trim();
            let (name, count) = match part.rsplit_once('^') {
                Some((name, k)) => {
                    let k: usize = k
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in `{part}`")))?;
                    (name.trim(), k)
                }
                None => (part, 1),
            };
            cat.get(name)?; // validate the class name
            v.insert(name, count);
        }
        Ok(v)
    }
}

impl fmt::Display for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.counts.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (name, count) in &self.counts {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if *count == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{count}")?;
            }
        }
        Ok(())
    }
}

/// All module vectors over the catalog with total multiplicity `d`, in
/// canonical (catalog) order.
pub fn enumerate_e(cat: &Catalog, d: usize) -> Vec<ModuleVector> {
    let classes: Vec<(String, usize)> = cat
        .classes
        .iter()
        .map(|c| (c.name(), c.e))
        .collect();
    let mut out = Vec::new();
    let mut cur = ModuleVector::empty();
    fn rec(
        classes: &[(String, usize)],
        idx: usize,
        remaining: usize,
        cur: &mut ModuleVector,
        out: &mut Vec<ModuleVector>,
    ) {
        if remaining == 0 {
            out.push(cur.clone());
            return;
        }
        if idx == classes.len() {
            return;
        }
        let (name, e) = &classes[idx];
        let max = remaining / e;
        for k in (0..=max).rev() {
            if k > 0 {
                cur.insert(name, k);
            }
            rec(classes, idx + 1, remaining - k * e, cur, out);
            if k > 0 {
                cur.counts.remove(name);
            }
        }
    }
    rec(&classes, 0, d, &mut cur, &mut out);
    out.sort();
    out
}

/// A certified membership: `n * generator` rewrites to `n * vector` along
/// the listed facts.
#[derive(Clone, Debug, Serialize)]
pub struct Membership {
    #[serde(serialize_with = "ser_vector")]
    pub vector: ModuleVector,
    pub scale: usize,
    pub trace: Vec<String>,
}

fn ser_vector<S: serde::Serializer>(v: &ModuleVector, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[derive(Clone, Debug, Serialize)]
pub struct ClosureResult {
    #[serde(serialize_with = "ser_vector")]
    pub generator: ModuleVector,
    pub n_max: usize,
    pub frontier_capped: bool,
    pub members: Vec<Membership>,
    #[serde(serialize_with = "ser_vectors")]
    pub unresolved: Vec<ModuleVector>,
}

fn ser_vectors<S: serde::Serializer>(
    v: &Vec<ModuleVector>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&x.to_string())?;
    }
    seq.end()
}

impl ClosureResult {
    pub fn contains(&self, v: &ModuleVector) -> bool {
        self.members.iter().any(|m| &m.vector == v)
    }

    pub fn member_set(&self) -> BTreeSet<ModuleVector> {
        self.members.iter().map(|m| m.vector.clone()).collect()
    }
}

/// Default BFS frontier cap.
pub const FRONTIER_CAP: usize = 1_000_000;

/// Bounded closure: breadth-first multiset rewriting from `n * g` for each
/// scale `n = 1..=n_max`, intersected with `n * universe`.
pub fn closure(
    g: &ModuleVector,
    universe: &[ModuleVector],
    store: &FactStore,
    n_max: usize,
    frontier_cap: usize,
) -> ClosureResult {
    let rules: Vec<(String, ModuleVector, ModuleVector)> = store
        .facts
        .iter()
        .filter(|f| !f.is_truncated())
        .map(|f| {
            (
                f.id.clone(),
                ModuleVector::from_names(&f.source),
                ModuleVector::from_names(&f.target),
            )
        })
        .collect();
    let mut members: Vec<Membership> = Vec::new();
    let mut found: BTreeSet<ModuleVector> = BTreeSet::new();
    let mut capped = false;
    for n in 1..=n_max {
        let start = g.scaled(n);
        // parent pointers for trace reconstruction
        let mut seen: HashMap<ModuleVector, Option<(ModuleVector, String)>> = HashMap::new();
        seen.insert(start.clone(), None);
        let mut queue = VecDeque::new();
        queue.push_back(start.clone());
        while let Some(v) = queue.pop_front() {
            if seen.len() >= frontier_cap {
                capped = true;
                break;
            }
            for (id, src, tgt) in &rules {
                if let Some(rest) = v.checked_minus(src) {
                    let next = rest.plus(tgt);
                    if !seen.contains_key(&next) {
                        seen.insert(next.clone(), Some((v.clone(), id.clone())));
                        queue.push_back(next);
                    }
                }
            }
        }
        for u in universe {
            if found.contains(u) {
                continue;
            }
            let su = u.scaled(n);
            if seen.contains_key(&su) {
                let mut trace = Vec::new();
                let mut cur = &su;
                while let Some(Some((parent, id))) = seen.get(cur) {
                    trace.push(id.clone());
                    cur = parent;
                }
                trace.reverse();
                found.insert(u.clone());
                members.push(Membership { vector: u.clone(), scale: n, trace });
            }
        }
    }
    members.sort_by(|a, b| a.vector.cmp(&b.vector));
    let unresolved = universe
        .iter()
        .filter(|u| !found.contains(u))
        .cloned()
        .collect();
    ClosureResult {
        generator: g.clone(),
        n_max,
        frontier_capped: capped,
        members,
        unresolved,
    }
}

/// Which generator sets to use in a decomposition.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GeneratorRule {
    /// The displayed generator formula of the ring.
    RingFormula,
    /// Every member of E(d) generates its own closed subset.
    AllOfE,
}

/// The displayed generator set for a ring and multiplicity.
pub fn ring_generators(cat: &Catalog, d: usize) -> Result<Vec<ModuleVector>> {
    let mut out = Vec::new();
    match cat.ring.label.as_str() {
        "Ainf-1" => {
            let mut g = ModuleVector::empty();
            if d % 2 == 0 {
                g.insert("R", d / 2);
            } else {
                g.insert("R", (d - 1) / 2);
                g.insert("x", 1);
            }
            out.push(g);
        }
        "Dinf-2" | "cusp" => {
            if d % 2 == 0 {
                let mut g = ModuleVector::empty();
                g.insert("R", d / 2);
                out.push(g);
            }
        }
        "cone" => {
            // three components, displayed for multiplicity 6:
            // R^(d/2), R^(d/2 - 1) + I, R^(d/2 - 1) + J
            if d % 2 == 0 && d >= 2 {
                let half = d / 2;
                let mut g = ModuleVector::empty();
                g.insert("R", half);
                out.push(g);
                for ideal in ["I", "J"] {
                    let mut g = ModuleVector::empty();
                    g.insert("R", half - 1);
                    g.insert(ideal, 1);
                    out.push(g);
                }
            }
        }
        "Dinf-1" => {
            // all solutions of 3l1 + l2 + 2l3 + 2l4 + l5 + 2l6 + 4l7 = d
            let atoms = [
                ("R", 3usize),
                ("xy", 1),
                ("x", 2),
                ("y", 2),
                ("x2", 1),
                ("Mp1", 2),
                ("Mm1", 4),
            ];
            generator_solutions(&atoms, d, &mut out);
        }
        "Dinf-3" => {
            // all solutions of 2l1 + 2l2 + 2l3 + 2l4 + 2l5 + 4l6 + 4l7 = d
            let atoms = [
                ("R##", 2usize),
                ("xy##", 2),
                ("x##", 2),
                ("y##", 2),
                ("x2##", 2),
                ("Mp1##", 4),
                ("Mm1##", 4),
            ];
            generator_solutions(&atoms, d, &mut out);
        }
        other => return Err(Error::UnsupportedRing(other.to_string())),
    }
    Ok(out)
}

fn generator_solutions(atoms: &[(&str, usize)], d: usize, out: &mut Vec<ModuleVector>) {
    fn rec(
        atoms: &[(&str, usize)],
        idx: usize,
        remaining: usize,
        cur: &mut ModuleVector,
        out: &mut Vec<ModuleVector>,
    ) {
        if idx == atoms.len() {
            if remaining == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let (name, w) = atoms[idx];
        for k in 0..=remaining / w {
            if k > 0 {
                cur.insert(name, k);
            }
            rec(atoms, idx + 1, remaining - k * w, cur, out);
            if k > 0 {
                cur.counts.remove(name);
            }
        }
    }
    let mut cur = ModuleVector::empty();
    rec(atoms, 0, d, &mut cur, out);
    out.sort();
}

#[derive(Clone, Debug, Serialize)]
pub struct Coverage {
    #[serde(serialize_with = "ser_vector")]
    pub member: ModuleVector,
    #[serde(serialize_with = "ser_vector")]
    pub generator: ModuleVector,
    pub scale: usize,
    pub trace: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionReport {
    pub ring: String,
    pub d: usize,
    pub param_bound: u32,
    pub n_max: usize,
    #[serde(serialize_with = "ser_vectors")]
    pub generators: Vec<ModuleVector>,
    pub universe_size: usize,
    pub covered: Vec<Coverage>,
    /// Members with no certificate from the shipped facts within bounds.
    #[serde(serialize_with = "ser_vectors")]
    pub unresolved_within_shipped_facts: Vec<ModuleVector>,
}

impl DecompositionReport {
    pub fn fully_covered(&self) -> bool {
        self.unresolved_within_shipped_facts.is_empty()
    }
}

/// Decompose E(d) into the closures of a generator set: run the closure of
/// each generator and report which members are certified where.
pub fn decompose_e(
    cat: &Catalog,
    store: &FactStore,
    d: usize,
    rule: GeneratorRule,
    n_max: usize,
) -> Result<DecompositionReport> {
    let universe = enumerate_e(cat, d);
    let generators = match rule {
        GeneratorRule::RingFormula => ring_generators(cat, d)?,
        GeneratorRule::AllOfE => universe.clone(),
    };
    let mut covered: Vec<Coverage> = Vec::new();
    let mut remaining: BTreeSet<ModuleVector> = universe.iter().cloned().collect();
    for g in &generators {
        if remaining.is_empty() {
            break;
        }
        let result = closure(g, &universe, store, n_max, FRONTIER_CAP);
        for m in result.members {
            if remaining.remove(&m.vector) {
                covered.push(Coverage {
                    member: m.vector,
                    generator: g.clone(),
                    scale: m.scale,
                    trace: m.trace,
                });
            }
        }
    }
    covered.sort_by(|a, b| a.member.cmp(&b.member));
    Ok(DecompositionReport {
        ring: cat.ring.label.clone(),
        d,
        param_bound: cat.n_max,
        n_max,
        generators,
        universe_size: universe.len(),
        covered,
        unresolved_within_shipped_facts: remaining.into_iter().collect(),
    })
}

/// Report of the closure-operator axioms on a finite universe.
#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    pub universe_size: usize,
    pub exhaustive: bool,
    pub sampled_pairs: usize,
    pub empty_set_closed: bool,
    pub extensive: bool,
    pub union_additive: bool,
    pub idempotent: bool,
    pub generic_point: bool,
    pub pass: bool,
}

/// Check the Kuratowski axioms for the engine's closure on an E(d) slice.
///
/// The closure of a subset is the union of its singleton closures, so
/// additivity is structural; the substantive checks are extensivity,
/// idempotence, and the generic-point property (every certified member's
/// closure stays inside). Subset pairs are checked exhaustively when the
/// universe is small, otherwise by seeded sampling.
pub fn check_topology_axioms(
    cat: &Catalog,
    store: &FactStore,
    d: usize,
    n_max: usize,
    sample_pairs: usize,
    seed: u64,
) -> Result<AxiomReport> {
    let universe = enumerate_e(cat, d);
    let mut closures: BTreeMap<ModuleVector, BTreeSet<ModuleVector>> = BTreeMap::new();
    for v in &universe {
        let r = closure(v, &universe, store, n_max, FRONTIER_CAP);
        closures.insert(v.clone(), r.member_set());
    }
    let close_set = |xs: &BTreeSet<ModuleVector>| -> BTreeSet<ModuleVector> {
        let mut out = BTreeSet::new();
        for x in xs {
            out.extend(closures[x].iter().cloned());
        }
        out
    };

    let empty_set_closed = close_set(&BTreeSet::new()).is_empty();
    let mut extensive = true;
    let mut generic_point = true;
    let mut idempotent = true;
    for v in &universe {
        let c = &closures[v];
        if !c.contains(v) {
            extensive = false;
        }
        for n in c {
            if !closures[n].is_subset(c) {
                generic_point = false;
            }
        }
        let cc = close_set(c);
        if &cc != c {
            idempotent = false;
        }
    }

    // additivity over subset pairs
    let mut union_additive = true;
    let exhaustive = universe.len() <= 4;
    let mut check_pair = |x: &BTreeSet<ModuleVector>, y: &BTreeSet<ModuleVector>| {
        let mut xy = x.clone();
        xy.extend(y.iter().cloned());
        let lhs = close_set(&xy);
        let mut rhs = close_set(x);
        rhs.extend(close_set(y));
        if lhs != rhs {
            union_additive = false;
        }
    };
    let mut sampled = 0usize;
    if exhaustive {
        let subsets = all_subsets(&universe);
        for x in &subsets {
            for y in &subsets {
                check_pair(x, y);
                sampled += 1;
            }
        }
    } else {
        // every pair of singletons, then seeded random subset pairs
        for x in &universe {
            for y in &universe {
                let sx: BTreeSet<ModuleVector> = std::iter::once(x.clone()).collect();
                let sy: BTreeSet<ModuleVector> = std::iter::once(y.clone()).collect();
                check_pair(&sx, &sy);
                sampled += 1;
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..sample_pairs {
            let x = random_subset(&universe, &mut rng);
            let y = random_subset(&universe, &mut rng);
            check_pair(&x, &y);
            sampled += 1;
        }
    }

    let pass = empty_set_closed && extensive && union_additive && idempotent && generic_point;
    Ok(AxiomReport {
        universe_size: universe.len(),
        exhaustive,
        sampled_pairs: sampled,
        empty_set_closed,
        extensive,
        union_additive,
        idempotent,
        generic_point,
        pass,
    })
}

fn all_subsets(universe: &[ModuleVector]) -> Vec<BTreeSet<ModuleVector>> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << universe.len()) {
        let mut s = BTreeSet::new();
        for (i, v) in universe.iter().enumerate() {
            if mask & (1 << i) != 0 {
                s.insert(v.clone());
            }
        }
        out.push(s);
    }
    out
}

fn random_subset(universe: &[ModuleVector], rng: &mut ChaCha8Rng) -> BTreeSet<ModuleVector> {
    let k = rng.gen_range(0..=universe.len());
    universe
        .choose_multiple(rng, k)
        .cloned()
        .collect()
}

/// Graph export of certified memberships over an E(d) slice.
#[derive(Serialize)]
pub struct GraphDoc {
    pub ring: String,
    pub d: usize,
    pub nodes: Vec<String>,
    pub edges: Vec<GraphEdge>,
}

#[derive(Serialize)]
pub struct GraphEdge {
    pub from: String,
    pub to: String,
    pub scale: usize,
    pub trace: Vec<String>,
}

pub fn export_graph(cat: &Catalog, store: &FactStore, d: usize, n_max: usize) -> GraphDoc {
    let universe = enumerate_e(cat, d);
    let mut edges = Vec::new();
    for v in &universe {
        let r = closure(v, &universe, store, n_max, FRONTIER_CAP);
        for m in &r.members {
            if &m.vector != v {
                edges.push(GraphEdge {
                    from: v.to_string(),
                    to: m.vector.to_string(),
                    scale: m.scale,
                    trace: m.trace.clone(),
                });
            }
        }
    }
    GraphDoc {
        ring: cat.ring.label.clone(),
        d,
        nodes: universe.iter().map(|v| v.to_string()).collect(),
        edges,
    }
}

/// Render a graph document in dot format.
pub fn graph_to_dot(g: &GraphDoc) -> String {
    let mut out = String::from("digraph degenerations {\n");
    for n in &g.nodes {
        out.push_str(&format!("    \"{n}\";\n"));
    }
    for e in &g.edges {
        out.push_str(&format!(
            "    \"{}\" -> \"{}\" [label=\"n={}\"];\n",
            e.from, e.to, e.scale
        ));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::load_catalog;
    use crate::degen::shipped_facts;

    #[test]
    fn vector_arithmetic_and_text() {
        let cat = load_catalog("cusp", 0).unwrap();
        let v = ModuleVector::parse("R^2 + m", &cat).unwrap();
        assert_eq!(v.count("R"), 2);
        assert_eq!(v.total_e(&cat).unwrap(), 6);
        assert_eq!(v.to_string(), "R^2 + m");
        let w = ModuleVector::parse(&v.to_string(), &cat).unwrap();
        assert_eq!(v, w);
        assert!(ModuleVector::parse("0", &cat).unwrap().is_empty());
        assert!(ModuleVector::parse("Q^2", &cat).is_err());
        let r2 = ModuleVector::parse("R^2", &cat).unwrap();
        assert!(v.checked_minus(&r2).is_some());
        assert!(r2.checked_minus(&v).is_none());
    }

    #[test]
    fn cusp_e4_enumeration() {
        let cat = load_catalog("cusp", 0).unwrap();
        let e4 = enumerate_e(&cat, 4);
        let names: Vec<String> = e4.iter().map(|v| v.to_string()).collect();
        assert_eq!(names, vec!["R + m", "R^2", "m^2"]);
        assert!(enumerate_e(&cat, 3).is_empty());
        assert_eq!(enumerate_e(&cat, 0), vec![ModuleVector::empty()]);
    }

    #[test]
    fn cusp_closure_certifies_e4() {
        let cat = load_catalog("cusp", 0).unwrap();
        let store = shipped_facts(&cat).unwrap();
        let universe = enumerate_e(&cat, 4);
        let g = ModuleVector::parse("R^2", &cat).unwrap();
        let r = closure(&g, &universe, &store, 2, FRONTIER_CAP);
        assert_eq!(r.members.len(), 3);
        assert!(r.unresolved.is_empty());
        let m2 = r
            .members
            .iter()
            .find(|m| m.vector.to_string() == "m^2")
            .unwrap();
        assert_eq!(m2.scale, 1);
        assert_eq!(m2.trace, vec!["cusp:free:m"]);
        let rm = r
            .members
            .iter()
            .find(|m| m.vector.to_string() == "R + m")
            .unwrap();
        assert_eq!(rm.scale, 2);
    }

    #[test]
    fn empty_generator_closure() {
        let cat = load_catalog("cusp", 0).unwrap();
        let store = shipped_facts(&cat).unwrap();
        let r = closure(
            &ModuleVector::empty(),
            &[ModuleVector::empty()],
            &store,
            2,
            FRONTIER_CAP,
        );
        assert_eq!(r.members.len(), 1);
        assert!(r.members[0].vector.is_empty());
    }

    #[test]
    fn dinf1_closure_reaches_family_targets() {
        let cat = load_catalog("Dinf-1", 3).unwrap();
        let store = shipped_facts(&cat).unwrap();
        let universe = enumerate_e(&cat, 3);
        let g = ModuleVector::parse("R", &cat).unwrap();
        let r = closure(&g, &universe, &store, 2, FRONTIER_CAP);
        // R degenerates to every I_n^(+/-) through the P chains
        for name in ["Ip1", "Im1", "Ip2", "Im2", "Ip3", "Im3"] {
            let v = ModuleVector::parse(name, &cat).unwrap();
            assert!(r.contains(&v), "missing {name}");
        }
        // and to x + xy, y + x2 via free covers
        for text in ["x + xy", "x2 + y"] {
            let v = ModuleVector::parse(text, &cat).unwrap();
            assert!(r.contains(&v), "missing {text}");
        }
    }

    #[test]
    fn ainf1_ring_generators() {
        let cat = load_catalog("Ainf-1", 6).unwrap();
        assert_eq!(ring_generators(&cat, 5).unwrap()[0].to_string(), "R^2 + x");
        assert_eq!(ring_generators(&cat, 6).unwrap()[0].to_string(), "R^3");
        let d4 = ring_generators(&load_catalog("Dinf-1", 6).unwrap(), 4).unwrap();
        // solutions of the weighted equation for d = 4 include Mm1 alone
        assert!(d4.iter().any(|g| g.to_string() == "Mm1"));
        assert!(d4.iter().any(|g| g.to_string() == "R + x2"));
    }

    #[test]
    fn ainf1_decomposition_covers() {
        let cat = load_catalog("Ainf-1", 4).unwrap();
        let store = shipped_facts(&cat).unwrap();
        for d in 1..=5 {
            let rep = decompose_e(&cat, &store, d, GeneratorRule::RingFormula, 2).unwrap();
            assert!(
                rep.fully_covered(),
                "d = {d} unresolved: {:?}",
                rep.unresolved_within_shipped_facts
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn cone_e6_has_unresolved_members() {
        let cat = load_catalog("cone", 0).unwrap();
        let store = shipped_facts(&cat).unwrap();
        let rep = decompose_e(&cat, &store, 6, GeneratorRule::RingFormula, 2).unwrap();
        assert_eq!(rep.generators.len(), 3);
        assert!(!rep.fully_covered());
        let unresolved: Vec<String> = rep
            .unresolved_within_shipped_facts
            .iter()
            .map(|v| v.to_string())
            .collect();
        assert_eq!(unresolved, vec!["I^2 + R", "I^3", "J^2 + R", "J^3"]);
    }

    #[test]
    fn cusp_axioms_pass_exhaustively() {
        let cat = load_catalog("cusp", 0).unwrap();
        let store = shipped_facts(&cat).unwrap();
        let rep = check_topology_axioms(&cat, &store, 4, 2, 0, 7).unwrap();
        assert!(rep.exhaustive);
        assert!(rep.pass, "{rep:?}");
    }

    #[test]
    fn cusp_graph_snapshot() {
        let cat = load_catalog("cusp", 0).unwrap();
        let store = shipped_facts(&cat).unwrap();
        let g = export_graph(&cat, &store, 4, 2);
        assert_eq!(g.nodes.len(), 3);
        let mut edges: Vec<(String, String, usize)> = g
            .edges
            .iter()
            .map(|e| (e.from.clone(), e.to.clone(), e.scale))
            .collect();
        edges.sort();
        assert_eq!(
            edges,
            vec![
                ("R + m".into(), "m^2".into(), 2),
                ("R^2".into(), "R + m".into(), 2),
                ("R^2".into(), "m^2".into(), 1),
            ]
        );
        let dot = graph_to_dot(&g);
        assert!(dot.contains("digraph"));
        assert!(dot.contains("\"R^2\" -> \"m^2\" [label=\"n=1\"]"));
    }
}
