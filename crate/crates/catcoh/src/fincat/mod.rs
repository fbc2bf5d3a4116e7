//! Finite categories as validated composition tables, functors between
//! them, graphs and their path categories, the factorization category,
//! Grothendieck integrals, and discrete-opfibration checks.
//!
//! Morphism ids are strings and iteration order is deterministic
//! (lexicographic) everywhere, so chosen sections and cocycle
//! representatives are reproducible.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{EngineError, Report, Result};

/// One morphism record of a finite category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorData {
    pub id: String,
    pub src: String,
    pub tgt: String,
}

/// A finite category given by a total composition table on composable pairs.
#[derive(Clone, Debug)]
pub struct FinCat {
    pub objects: Vec<String>,
    pub morphisms: Vec<MorData>,
    /// object id -> identity morphism id
    pub identities: BTreeMap<String, String>,
    /// (g, f) -> g∘f, defined exactly on composable pairs (tgt f = src g)
    pub compose: BTreeMap<(String, String), String>,
    index: BTreeMap<String, usize>,
}

impl FinCat {
    pub fn new(
        mut objects: Vec<String>,
        mut morphisms: Vec<MorData>,
        identities: BTreeMap<String, String>,
        compose: BTreeMap<(String, String), String>,
    ) -> Self {
        objects.sort();
        morphisms.sort_by(|a, b| a.id.cmp(&b.id));
        let index = morphisms.iter().enumerate().map(|(i, m)| (m.id.clone(), i)).collect();
        FinCat { objects, morphisms, identities, compose, index }
    }

    pub fn mor(&self, id: &str) -> Option<&MorData> {
        self.index.get(id).map(|&i| &self.morphisms[i])
    }

    pub fn has_object(&self, id: &str) -> bool {
        self.objects.binary_search_by(|o| o.as_str().cmp(id)).is_ok()
    }

    pub fn identity_of(&self, obj: &str) -> Option<&str> {
        self.identities.get(obj).map(|s| s.as_str())
    }

    pub fn is_identity(&self, mor: &str) -> bool {
        match self.mor(mor) {
            Some(m) => self.identity_of(&m.src) == Some(mor),
            None => false,
        }
    }

    /// g∘f when tgt(f) = src(g).
    pub fn composite(&self, g: &str, f: &str) -> Option<&str> {
        self.compose.get(&(g.to_string(), f.to_string())).map(|s| s.as_str())
    }

    pub fn composable(&self, g: &str, f: &str) -> bool {
        match (self.mor(g), self.mor(f)) {
            (Some(gm), Some(fm)) => fm.tgt == gm.src,
            _ => false,
        }
    }

    /// Composite of a chain (a1, a2, ..., an) meaning a1∘a2∘...∘an.
    pub fn composite_chain(&self, chain: &[&str]) -> Option<String> {
        let mut acc = chain.last()?.to_string();
        for m in chain.iter().rev().skip(1) {
            acc = self.composite(m, &acc)?.to_string();
        }
        Some(acc)
    }

    pub fn hom(&self, src: &str, tgt: &str) -> Vec<&str> {
        self.morphisms
            .iter()
            .filter(|m| m.src == src && m.tgt == tgt)
            .map(|m| m.id.as_str())
            .collect()
    }

    pub fn morphism_ids(&self) -> Vec<&str> {
        self.morphisms.iter().map(|m| m.id.as_str()).collect()
    }

    /// All composable n-tuples (a1,...,an) with tgt(a_{i+1}) = src(a_i),
    /// in lexicographic order. n = 0 yields one empty tuple per object,
    /// encoded as a single-entry tuple holding the object id.
    pub fn composable_tuples(&self, n: usize) -> Vec<Vec<String>> {
        if n == 0 {
            return self.objects.iter().map(|o| vec![o.clone()]).collect();
        }
        let mut tuples: Vec<Vec<String>> =
            self.morphisms.iter().map(|m| vec![m.id.clone()]).collect();
        for _ in 1..n {
            let mut next = Vec::new();
            for t in &tuples {
                let last = self.mor(t.last().unwrap()).unwrap();
                for m in &self.morphisms {
                    if m.tgt == last.src {
                        let mut t2 = t.clone();
                        t2.push(m.id.clone());
                        next.push(t2);
                    }
                }
            }
            tuples = next;
        }
        tuples
    }

    /// Count composable n-tuples without materializing them.
    pub fn count_composable_tuples(&self, n: usize) -> usize {
        if n == 0 {
            return self.objects.len();
        }
        // counts[m] = chains of length k starting (on the right) with m
        let mut counts: BTreeMap<&str, usize> =
            self.morphisms.iter().map(|m| (m.id.as_str(), 1usize)).collect();
        for _ in 1..n {
            let mut next: BTreeMap<&str, usize> = BTreeMap::new();
            for a in &self.morphisms {
                let mut c = 0usize;
                for b in &self.morphisms {
                    if b.tgt == a.src {
                        c += counts[b.id.as_str()];
                    }
                }
                next.insert(a.id.as_str(), c);
            }
            counts = next;
        }
        counts.values().sum()
    }
}

/// Check all `FinCat` invariants; the report lists the first violation of
/// each kind with its witnessing data.
pub fn validate_category(c: &FinCat) -> Report {
    let mut report = Report::new();
    let mut ids = BTreeSet::new();
    for m in &c.morphisms {
        if !ids.insert(m.id.clone()) {
            report.fail(format!("duplicate morphism id {}", m.id));
        }
        if !c.has_object(&m.src) || !c.has_object(&m.tgt) {
            report.fail(format!("morphism {} has unknown endpoint", m.id));
        }
    }
    let mut objs = BTreeSet::new();
    for o in &c.objects {
        if !objs.insert(o.clone()) {
            report.fail(format!("duplicate object id {o}"));
        }
    }
    for o in &c.objects {
        match c.identities.get(o) {
            None => report.fail(format!("object {o} has no identity")),
            Some(id) => match c.mor(id) {
                None => report.fail(format!("identity {id} of {o} is not a morphism")),
                Some(m) => {
                    if m.src != *o || m.tgt != *o {
                        report.fail(format!("identity {id} of {o} is not an endomorphism"));
                    }
                }
            },
        }
    }
    if !report.ok() {
        return report;
    }
    // Composition total on composable pairs, and typed correctly.
    for g in &c.morphisms {
        for f in &c.morphisms {
            let key = (g.id.clone(), f.id.clone());
            let defined = c.compose.get(&key);
            if f.tgt == g.src {
                report.tick();
                match defined {
                    None => report.fail(format!("composite {}∘{} missing", g.id, f.id)),
                    Some(gf) => match c.mor(gf) {
                        None => report.fail(format!("composite {}∘{} = {} unknown", g.id, f.id, gf)),
                        Some(m) => {
                            if m.src != f.src || m.tgt != g.tgt {
                                report.fail(format!(
                                    "composite {}∘{} = {} has wrong endpoints",
                                    g.id, f.id, gf
                                ));
                            }
                        }
                    },
                }
            } else if defined.is_some() {
                report.fail(format!(
                    "composite {}∘{} defined on a non-composable pair",
                    g.id, f.id
                ));
            }
        }
    }
    if !report.ok() {
        return report;
    }
    // Identity laws.
    for m in &c.morphisms {
        let id_t = c.identity_of(&m.tgt).unwrap();
        let id_s = c.identity_of(&m.src).unwrap();
        report.tick();
        if c.composite(id_t, &m.id) != Some(&m.id) {
            report.fail(format!("left identity law fails at {}", m.id));
        }
        if c.composite(&m.id, id_s) != Some(&m.id) {
            report.fail(format!("right identity law fails at {}", m.id));
        }
    }
    // Associativity on all composable triples.
    for h in &c.morphisms {
        for g in &c.morphisms {
            if g.tgt != h.src {
                continue;
            }
            let hg = c.composite(&h.id, &g.id).unwrap().to_string();
            for f in &c.morphisms {
                if f.tgt != g.src {
                    continue;
                }
                report.tick();
                let gf = c.composite(&g.id, &f.id).unwrap();
                let left = c.composite(&h.id, gf);
                let right = c.composite(&hg, &f.id);
                if left != right {
                    report.fail(format!(
                        "associativity fails at triple ({}, {}, {})",
                        h.id, g.id, f.id
                    ));
                    return report;
                }
            }
        }
    }
    report
}

/// A functor given by explicit object and morphism maps.
#[derive(Clone, Debug)]
pub struct FunctorData {
    pub source: FinCat,
    pub target: FinCat,
    pub object_map: BTreeMap<String, String>,
    pub morphism_map: BTreeMap<String, String>,
}

impl FunctorData {
    pub fn identity(c: &FinCat) -> Self {
        FunctorData {
            source: c.clone(),
            target: c.clone(),
            object_map: c.objects.iter().map(|o| (o.clone(), o.clone())).collect(),
            morphism_map: c.morphisms.iter().map(|m| (m.id.clone(), m.id.clone())).collect(),
        }
    }

    pub fn ob(&self, o: &str) -> &str {
        &self.object_map[o]
    }

    pub fn ap(&self, m: &str) -> &str {
        &self.morphism_map[m]
    }

    pub fn compose(&self, inner: &FunctorData) -> FunctorData {
        FunctorData {
            source: inner.source.clone(),
            target: self.target.clone(),
            object_map: inner
                .object_map
                .iter()
                .map(|(o, v)| (o.clone(), self.object_map[v].clone()))
                .collect(),
            morphism_map: inner
                .morphism_map
                .iter()
                .map(|(m, v)| (m.clone(), self.morphism_map[v].clone()))
                .collect(),
        }
    }

    /// Functor laws, exhaustively.
    pub fn validate(&self) -> Report {
        let mut report = Report::new();
        for o in &self.source.objects {
            match self.object_map.get(o) {
                None => report.fail(format!("object {o} unmapped")),
                Some(v) if !self.target.has_object(v) => {
                    report.fail(format!("object {o} maps to unknown {v}"))
                }
                _ => {}
            }
        }
        for m in &self.source.morphisms {
            match self.morphism_map.get(&m.id) {
                None => report.fail(format!("morphism {} unmapped", m.id)),
                Some(v) => match self.target.mor(v) {
                    None => report.fail(format!("morphism {} maps to unknown {v}", m.id)),
                    Some(tm) => {
                        if self.object_map.get(&m.src).map(String::as_str) != Some(tm.src.as_str())
                            || self.object_map.get(&m.tgt).map(String::as_str)
                                != Some(tm.tgt.as_str())
                        {
                            report.fail(format!("morphism {} breaks src/tgt", m.id));
                        }
                    }
                },
            }
        }
        if !report.ok() {
            return report;
        }
        for o in &self.source.objects {
            let up = self.source.identity_of(o).unwrap();
            let down = self.target.identity_of(self.ob(o)).unwrap();
            report.tick();
            if self.ap(up) != down {
                report.fail(format!("identity of {o} not preserved"));
            }
        }
        for g in &self.source.morphisms {
            for f in &self.source.morphisms {
                if f.tgt != g.src {
                    continue;
                }
                report.tick();
                let gf = self.source.composite(&g.id, &f.id).unwrap();
                let lhs = self.ap(gf);
                let rhs = self.target.composite(self.ap(&g.id), self.ap(&f.id));
                if rhs != Some(lhs) {
                    report.fail(format!("composition not preserved at ({}, {})", g.id, f.id));
                }
            }
        }
        report
    }
}

/// The category of factorizations: objects are morphisms of `c`, and a
/// morphism f -> g is a pair (a, b) with b∘f∘a = g. Morphism ids encode
/// the triple `src_mor|a|b`.
pub fn factorization_category(c: &FinCat) -> FinCat {
    let objects: Vec<String> = c.morphisms.iter().map(|m| m.id.clone()).collect();
    let mut morphisms = Vec::new();
    let mut identities = BTreeMap::new();
    for f in &c.morphisms {
        for a in &c.morphisms {
            if a.tgt != f.src {
                continue;
            }
            let fa = c.composite(&f.id, &a.id).unwrap();
            for b in &c.morphisms {
                if b.src != f.tgt {
                    continue;
                }
                let g = c.composite(&b.id, fa).unwrap().to_string();
                morphisms.push(MorData {
                    id: fact_mor_id(&f.id, &a.id, &b.id),
                    src: f.id.clone(),
                    tgt: g,
                });
            }
        }
        let ia = c.identity_of(&f.src).unwrap();
        let ib = c.identity_of(&f.tgt).unwrap();
        identities.insert(f.id.clone(), fact_mor_id(&f.id, ia, ib));
    }
    let mut compose = BTreeMap::new();
    for m2 in &morphisms {
        let (g_of_m2, a2, b2) = parse_fact_id(&m2.id);
        debug_assert_eq!(g_of_m2, m2.src);
        for m1 in &morphisms {
            if m1.tgt != m2.src {
                continue;
            }
            let (f, a1, b1) = parse_fact_id(&m1.id);
            debug_assert_eq!(f, m1.src);
            // (a2,b2)∘(a1,b1): f -> h with pair (a1∘a2, b2∘b1)
            let a = c.composite(&a1, &a2).unwrap();
            let b = c.composite(&b2, &b1).unwrap();
            compose.insert(
                (m2.id.clone(), m1.id.clone()),
                fact_mor_id(&f, a, b),
            );
        }
    }
    FinCat::new(objects, morphisms, identities, compose)
}

fn fact_mor_id(f: &str, a: &str, b: &str) -> String {
    format!("{f}|{a}|{b}")
}

fn parse_fact_id(id: &str) -> (String, String, String) {
    let parts: Vec<&str> = id.split('|').collect();
    (parts[0].to_string(), parts[1].to_string(), parts[2].to_string())
}

/// The (a, b) pair of a factorization-category morphism id.
pub fn fact_pair(id: &str) -> (String, String) {
    let (_, a, b) = parse_fact_id(id);
    (a, b)
}

/// A finite directed graph.
#[derive(Clone, Debug)]
pub struct Graph {
    pub nodes: Vec<String>,
    /// (edge id, src, tgt)
    pub edges: Vec<(String, String, String)>,
}

impl Graph {
    pub fn is_acyclic(&self) -> bool {
        // Kahn's algorithm.
        let mut indeg: BTreeMap<&str, usize> =
            self.nodes.iter().map(|n| (n.as_str(), 0)).collect();
        for (_, _, t) in &self.edges {
            *indeg.get_mut(t.as_str()).unwrap() += 1;
        }
        let mut queue: Vec<&str> =
            indeg.iter().filter(|(_, &d)| d == 0).map(|(&n, _)| n).collect();
        let mut seen = 0;
        while let Some(n) = queue.pop() {
            seen += 1;
            for (_, s, t) in &self.edges {
                if s == n {
                    let d = indeg.get_mut(t.as_str()).unwrap();
                    *d -= 1;
                    if *d == 0 {
                        queue.push(t.as_str());
                    }
                }
            }
        }
        seen == self.nodes.len()
    }
}

/// Free category on an acyclic graph: morphisms are directed paths
/// (including the empty path at each node), composition is concatenation.
pub fn path_category(g: &Graph) -> Result<FinCat> {
    if !g.is_acyclic() {
        return Err(EngineError::unsupported(
            "path_category requires an acyclic graph (finite carrier restriction)",
        ));
    }
    // Enumerate all paths; a path is stored target-first to match the
    // composite-chain convention a1∘a2∘...∘an.
    let mut paths: Vec<Vec<String>> = vec![vec![]]; // placeholder; rebuilt below
    paths.clear();
    // paths from each node: BFS over edge sequences
    let mut all: Vec<(Vec<String>, String, String)> = Vec::new(); // (edges, src, tgt)
    for n in &g.nodes {
        all.push((vec![], n.clone(), n.clone()));
    }
    let mut frontier: Vec<(Vec<String>, String, String)> =
        all.iter().filter(|(p, _, _)| p.is_empty()).cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (p, src, tgt) in &frontier {
            for (eid, es, et) in &g.edges {
                if es == tgt {
                    let mut p2 = p.clone();
                    p2.push(eid.clone());
                    next.push((p2, src.clone(), et.clone()));
                }
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    let path_id = |p: &[String], src: &str| -> String {
        if p.is_empty() {
            format!("<{src}>")
        } else {
            format!("<{}>", p.join(","))
        }
    };
    let morphisms: Vec<MorData> = all
        .iter()
        .map(|(p, s, t)| MorData { id: path_id(p, s), src: s.clone(), tgt: t.clone() })
        .collect();
    let identities: BTreeMap<String, String> =
        g.nodes.iter().map(|n| (n.clone(), format!("<{n}>"))).collect();
    let mut compose = BTreeMap::new();
    for (p2, s2, t2) in &all {
        for (p1, s1, _t1) in all.iter().filter(|(_, _, t1)| t1 == s2) {
            // second ∘ first: path first then p2
            let mut cat = p1.clone();
            cat.extend(p2.iter().cloned());
            compose.insert(
                (path_id(p2, s2), path_id(p1, s1)),
                path_id(&cat, s1),
            );
        }
    }
    // The concatenation convention: composite g∘f of f: A->B then g: B->C
    // traverses f's edges first. Edge lists are stored in traversal order,
    // so g∘f = f.edges ++ g.edges — but our compose key is (g, f).
    let mut fixed = BTreeMap::new();
    for ((gid, fid), _) in compose.iter() {
        let (pg, sg, _) = all.iter().find(|(p, s, _)| path_id(p, s) == *gid).unwrap();
        let (pf, sf, tf) = all.iter().find(|(p, s, _)| path_id(p, s) == *fid).unwrap();
        assert_eq!(tf, sg);
        let mut cat = pf.clone();
        cat.extend(pg.iter().cloned());
        fixed.insert((gid.clone(), fid.clone()), path_id(&cat, sf));
    }
    Ok(FinCat::new(g.nodes.clone(), morphisms, identities, fixed))
}

/// A functor from a finite category to finite sets.
#[derive(Clone, Debug)]
pub struct SetFunctor {
    pub base: FinCat,
    /// object -> element list (deterministic order)
    pub values: BTreeMap<String, Vec<String>>,
    /// morphism id -> map element -> element
    pub maps: BTreeMap<String, BTreeMap<String, String>>,
}

impl SetFunctor {
    pub fn validate(&self) -> Report {
        let mut report = Report::new();
        for o in &self.base.objects {
            if !self.values.contains_key(o) {
                report.fail(format!("object {o} has no value set"));
            }
        }
        if !report.ok() {
            return report;
        }
        for m in &self.base.morphisms {
            let Some(map) = self.maps.get(&m.id) else {
                report.fail(format!("morphism {} has no map", m.id));
                continue;
            };
            let dom = &self.values[&m.src];
            let cod = &self.values[&m.tgt];
            for x in dom {
                match map.get(x) {
                    None => report.fail(format!("map of {} undefined on {x}", m.id)),
                    Some(y) if !cod.contains(y) => {
                        report.fail(format!("map of {} sends {x} outside target", m.id))
                    }
                    _ => {}
                }
            }
        }
        if !report.ok() {
            return report;
        }
        for o in &self.base.objects {
            let idm = self.base.identity_of(o).unwrap();
            for x in &self.values[o] {
                report.tick();
                if self.maps[idm][x] != *x {
                    report.fail(format!("identity of {o} does not act as identity on {x}"));
                }
            }
        }
        for g in &self.base.morphisms {
            for f in &self.base.morphisms {
                if f.tgt != g.src {
                    continue;
                }
                let gf = self.base.composite(&g.id, &f.id).unwrap();
                for x in &self.values[&f.src] {
                    report.tick();
                    let via = &self.maps[&g.id][&self.maps[&f.id][x]];
                    if self.maps[gf][x] != *via {
                        report.fail(format!(
                            "functor law fails at ({}, {}) on {x}",
                            g.id, f.id
                        ));
                    }
                }
            }
        }
        report
    }
}

/// The Grothendieck construction of a set-valued functor, with its
/// projection. Objects are pairs (object, element); a morphism out of
/// (X, x) per morphism φ: X -> Y lands in (Y, φ(x)).
pub fn grothendieck_integral(c: &FinCat, m: &SetFunctor) -> Result<(FinCat, FunctorData)> {
    m.validate().into_result()?;
    let pair_obj = |o: &str, x: &str| format!("{o}@{x}");
    let pair_mor = |f: &str, x: &str| format!("{f}@{x}");
    let mut objects = Vec::new();
    let mut obj_map = BTreeMap::new();
    for o in &c.objects {
        for x in &m.values[o] {
            objects.push(pair_obj(o, x));
            obj_map.insert(pair_obj(o, x), o.clone());
        }
    }
    let mut morphisms = Vec::new();
    let mut mor_map = BTreeMap::new();
    for f in &c.morphisms {
        for x in &m.values[&f.src] {
            let y = &m.maps[&f.id][x];
            morphisms.push(MorData {
                id: pair_mor(&f.id, x),
                src: pair_obj(&f.src, x),
                tgt: pair_obj(&f.tgt, y),
            });
            mor_map.insert(pair_mor(&f.id, x), f.id.clone());
        }
    }
    let identities: BTreeMap<String, String> = c
        .objects
        .iter()
        .flat_map(|o| {
            let idm = c.identity_of(o).unwrap().to_string();
            m.values[o]
                .iter()
                .map(move |x| (pair_obj(o, x), pair_mor(&idm, x)))
                .collect::<Vec<_>>()
        })
        .collect();
    let mut compose = BTreeMap::new();
    for g in &c.morphisms {
        for f in &c.morphisms {
            if f.tgt != g.src {
                continue;
            }
            let gf = c.composite(&g.id, &f.id).unwrap();
            for x in &m.values[&f.src] {
                let y = &m.maps[&f.id][x];
                compose.insert(
                    (pair_mor(&g.id, y), pair_mor(&f.id, x)),
                    pair_mor(gf, x),
                );
            }
        }
    }
    let total = FinCat::new(objects, morphisms, identities, compose);
    let proj = FunctorData {
        source: total.clone(),
        target: c.clone(),
        object_map: obj_map,
        morphism_map: mor_map,
    };
    Ok((total, proj))
}

/// True iff every object upstairs and every morphism out of its image has
/// a unique lift. Exhaustive.
pub fn is_discrete_opfibration(p: &FunctorData) -> bool {
    for e in &p.source.objects {
        let pe = p.ob(e);
        for phi in &p.target.morphisms {
            if phi.src != pe {
                continue;
            }
            let lifts: Vec<&MorData> = p
                .source
                .morphisms
                .iter()
                .filter(|m| m.src == *e && p.ap(&m.id) == phi.id)
                .collect();
            if lifts.len() != 1 {
                return false;
            }
        }
    }
    true
}

/// Result of the full/identity-on-objects test, carrying the chosen section.
pub struct FullIdOnObjects {
    pub holds: bool,
    /// downstairs morphism id -> chosen preimage (lexicographically least,
    /// except identities lift to identities)
    pub section: BTreeMap<String, String>,
}

/// True iff the object map is the identity and every downstairs morphism
/// has a preimage; exposes a deterministic section when true.
pub fn is_full_identity_on_objects(p: &FunctorData) -> FullIdOnObjects {
    let mut section = BTreeMap::new();
    for o in &p.source.objects {
        if p.object_map.get(o).map(String::as_str) != Some(o.as_str())
            || !p.target.has_object(o)
        {
            return FullIdOnObjects { holds: false, section };
        }
    }
    if p.source.objects.len() != p.target.objects.len() {
        return FullIdOnObjects { holds: false, section };
    }
    for g in &p.target.morphisms {
        if p.target.is_identity(&g.id) {
            // identities lift to identities along an id-on-objects functor
            section.insert(g.id.clone(), p.source.identity_of(&g.src).unwrap().to_string());
            continue;
        }
        let pre = p
            .source
            .morphisms
            .iter()
            .find(|m| p.ap(&m.id) == g.id && m.src == g.src && m.tgt == g.tgt);
        match pre {
            Some(m) => {
                section.insert(g.id.clone(), m.id.clone());
            }
            None => return FullIdOnObjects { holds: false, section: BTreeMap::new() },
        }
    }
    FullIdOnObjects { holds: true, section }
}

/// The one-object category of the cyclic monoid Z/n, morphisms
/// "t0" (identity), "t1", ..., "t{n-1}".
pub fn cyclic_category(n: u64) -> FinCat {
    let obj = "*".to_string();
    let morphisms: Vec<MorData> = (0..n)
        .map(|i| MorData { id: format!("t{i}"), src: obj.clone(), tgt: obj.clone() })
        .collect();
    let identities = [(obj.clone(), "t0".to_string())].into_iter().collect();
    let mut compose = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            compose.insert(
                (format!("t{i}"), format!("t{j}")),
                format!("t{}", (i + j) % n),
            );
        }
    }
    FinCat::new(vec![obj], morphisms, identities, compose)
}

/// The arrow category 0 -> 1 with three morphisms.
pub fn arrow_category() -> FinCat {
    let objects = vec!["0".to_string(), "1".to_string()];
    let morphisms = vec![
        MorData { id: "id0".into(), src: "0".into(), tgt: "0".into() },
        MorData { id: "id1".into(), src: "1".into(), tgt: "1".into() },
        MorData { id: "u".into(), src: "0".into(), tgt: "1".into() },
    ];
    let identities =
        [("0".to_string(), "id0".to_string()), ("1".to_string(), "id1".to_string())]
            .into_iter()
            .collect();
    let mut compose = BTreeMap::new();
    compose.insert(("id0".to_string(), "id0".to_string()), "id0".to_string());
    compose.insert(("id1".to_string(), "id1".to_string()), "id1".to_string());
    compose.insert(("u".to_string(), "id0".to_string()), "u".to_string());
    compose.insert(("id1".to_string(), "u".to_string()), "u".to_string());
    FinCat::new(objects, morphisms, identities, compose)
}

/// Discrete category on the given objects.
pub fn discrete_category(objects: &[&str]) -> FinCat {
    let morphisms: Vec<MorData> = objects
        .iter()
        .map(|o| MorData { id: format!("id_{o}"), src: o.to_string(), tgt: o.to_string() })
        .collect();
    let identities = objects.iter().map(|o| (o.to_string(), format!("id_{o}"))).collect();
    let compose = objects
        .iter()
        .map(|o| ((format!("id_{o}"), format!("id_{o}")), format!("id_{o}")))
        .collect();
    FinCat::new(objects.iter().map(|s| s.to_string()).collect(), morphisms, identities, compose)
}

/// The functor Z/n -> Z/m induced by reduction of exponents (m | n).
pub fn cyclic_reduction(n: u64, m: u64) -> FunctorData {
    assert!(n % m == 0, "reduction needs m | n");
    let source = cyclic_category(n);
    let target = cyclic_category(m);
    FunctorData {
        object_map: [("*".to_string(), "*".to_string())].into_iter().collect(),
        morphism_map: (0..n).map(|i| (format!("t{i}"), format!("t{}", i % m))).collect(),
        source,
        target,
    }
}

/// Category of a finite poset given by a reflexive-transitive order
/// relation; morphism ids are "src<=tgt".
pub fn poset_category(objects: &[String], leq: &dyn Fn(&str, &str) -> bool) -> FinCat {
    let mut morphisms = Vec::new();
    let mut identities = BTreeMap::new();
    for a in objects {
        for b in objects {
            if leq(a, b) {
                morphisms.push(MorData {
                    id: format!("{a}<={b}"),
                    src: a.clone(),
                    tgt: b.clone(),
                });
            }
        }
        identities.insert(a.clone(), format!("{a}<={a}"));
    }
    let mut compose = BTreeMap::new();
    for m2 in &morphisms {
        for m1 in &morphisms {
            if m1.tgt == m2.src {
                compose.insert(
                    (m2.id.clone(), m1.id.clone()),
                    format!("{}<={}", m1.src, m2.tgt),
                );
            }
        }
    }
    FinCat::new(objects.to_vec(), morphisms, identities, compose)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_validates() {
        let c = cyclic_category(2);
        assert!(validate_category(&c).ok());
        let c3 = cyclic_category(3);
        assert!(validate_category(&c3).ok());
    }

    #[test]
    fn broken_identity_located() {
        // One object, morphisms {1, t}, t·t = t, but labelled identity is t:
        // identity law breaks.
        let obj = "*".to_string();
        let morphisms = vec![
            MorData { id: "one".into(), src: obj.clone(), tgt: obj.clone() },
            MorData { id: "t".into(), src: obj.clone(), tgt: obj.clone() },
        ];
        let identities = [(obj.clone(), "t".to_string())].into_iter().collect();
        let mut compose = BTreeMap::new();
        compose.insert(("one".to_string(), "one".to_string()), "one".to_string());
        compose.insert(("one".to_string(), "t".to_string()), "t".to_string());
        compose.insert(("t".to_string(), "one".to_string()), "t".to_string());
        compose.insert(("t".to_string(), "t".to_string()), "t".to_string());
        let c = FinCat::new(vec![obj], morphisms, identities, compose);
        let rep = validate_category(&c);
        assert!(!rep.ok());
        assert!(rep.failures.iter().any(|f| f.contains("identity law")));
    }

    #[test]
    fn arrow_validates() {
        assert!(validate_category(&arrow_category()).ok());
    }

    #[test]
    fn factorization_of_arrow() {
        // Exhaustive pair enumeration oracle: objects = 3 morphisms of the
        // arrow category; morphisms = pairs (a,b) with b∘f∘a = g.
        let c = arrow_category();
        let fc = factorization_category(&c);
        assert!(validate_category(&fc).ok());
        assert_eq!(fc.objects.len(), 3);
        let mut count = 0;
        for f in &c.morphisms {
            for a in &c.morphisms {
                if a.tgt != f.src {
                    continue;
                }
                for b in &c.morphisms {
                    if b.src == f.tgt {
                        count += 1;
                    }
                }
            }
        }
        assert_eq!(fc.morphisms.len(), count);
        assert_eq!(fc.morphisms.len(), 5);
    }

    #[test]
    fn factorization_of_discrete() {
        let c = discrete_category(&["a", "b", "c"]);
        let fc = factorization_category(&c);
        assert!(validate_category(&fc).ok());
        assert_eq!(fc.objects.len(), 3);
        assert_eq!(fc.morphisms.len(), 3);
    }

    #[test]
    fn factorization_of_z2() {
        let c = cyclic_category(2);
        let fc = factorization_category(&c);
        assert!(validate_category(&fc).ok());
        assert_eq!(fc.objects.len(), 2);
        // oracle: pairs (a,b) per (f,g)
        let mut expected = 0;
        for f in &c.morphisms {
            for a in &c.morphisms {
                if a.tgt == f.src {
                    for b in &c.morphisms {
                        if b.src == f.tgt {
                            expected += 1;
                        }
                    }
                }
            }
        }
        assert_eq!(fc.morphisms.len(), expected);
    }

    #[test]
    fn chain_path_category() {
        let g = Graph {
            nodes: vec!["a".into(), "b".into(), "c".into()],
            edges: vec![
                ("e1".into(), "a".into(), "b".into()),
                ("e2".into(), "b".into(), "c".into()),
            ],
        };
        let c = path_category(&g).unwrap();
        assert!(validate_category(&c).ok());
        assert_eq!(c.morphisms.len(), 6);
    }

    #[test]
    fn parallel_edges_path_category() {
        let g = Graph {
            nodes: vec!["a".into(), "b".into()],
            edges: vec![
                ("e1".into(), "a".into(), "b".into()),
                ("e2".into(), "a".into(), "b".into()),
            ],
        };
        let c = path_category(&g).unwrap();
        assert!(validate_category(&c).ok());
        assert_eq!(c.objects.len(), 2);
        assert_eq!(c.morphisms.len(), 4);
    }

    #[test]
    fn edgeless_graph_is_discrete() {
        let g = Graph { nodes: vec!["a".into(), "b".into()], edges: vec![] };
        let c = path_category(&g).unwrap();
        assert_eq!(c.morphisms.len(), 2);
    }

    #[test]
    fn cyclic_graph_rejected() {
        let g = Graph {
            nodes: vec!["a".into(), "b".into()],
            edges: vec![
                ("e1".into(), "a".into(), "b".into()),
                ("e2".into(), "b".into(), "a".into()),
            ],
        };
        assert!(path_category(&g).is_err());
    }

    fn regular_action_z2() -> SetFunctor {
        let c = cyclic_category(2);
        let values =
            [("*".to_string(), vec!["x".to_string(), "y".to_string()])].into_iter().collect();
        let mut maps = BTreeMap::new();
        maps.insert(
            "t0".to_string(),
            [("x".to_string(), "x".to_string()), ("y".to_string(), "y".to_string())]
                .into_iter()
                .collect(),
        );
        maps.insert(
            "t1".to_string(),
            [("x".to_string(), "y".to_string()), ("y".to_string(), "x".to_string())]
                .into_iter()
                .collect(),
        );
        SetFunctor { base: c, values, maps }
    }

    #[test]
    fn action_groupoid() {
        let c = cyclic_category(2);
        let m = regular_action_z2();
        let (total, proj) = grothendieck_integral(&c, &m).unwrap();
        assert!(validate_category(&total).ok());
        assert!(proj.validate().ok());
        assert_eq!(total.objects.len(), 2);
        assert_eq!(total.morphisms.len(), 4);
        assert!(is_discrete_opfibration(&proj));
    }

    #[test]
    fn constant_point_integral() {
        let c = arrow_category();
        let values = c
            .objects
            .iter()
            .map(|o| (o.clone(), vec!["*".to_string()]))
            .collect();
        let maps = c
            .morphisms
            .iter()
            .map(|m| {
                (m.id.clone(), [("*".to_string(), "*".to_string())].into_iter().collect())
            })
            .collect();
        let m = SetFunctor { base: c.clone(), values, maps };
        let (total, proj) = grothendieck_integral(&c, &m).unwrap();
        assert_eq!(total.objects.len(), c.objects.len());
        assert_eq!(total.morphisms.len(), c.morphisms.len());
        assert!(is_discrete_opfibration(&proj));
    }

    #[test]
    fn empty_fiber_contributes_nothing() {
        let c = arrow_category();
        let mut values: BTreeMap<String, Vec<String>> = BTreeMap::new();
        values.insert("0".into(), vec![]);
        values.insert("1".into(), vec!["p".to_string()]);
        let mut maps: BTreeMap<String, BTreeMap<String, String>> = BTreeMap::new();
        maps.insert("id0".into(), BTreeMap::new());
        maps.insert("u".into(), BTreeMap::new());
        maps.insert("id1".into(), [("p".to_string(), "p".to_string())].into_iter().collect());
        let m = SetFunctor { base: c.clone(), values, maps };
        let (total, _) = grothendieck_integral(&c, &m).unwrap();
        assert_eq!(total.objects.len(), 1);
    }

    #[test]
    fn identity_is_opfibration() {
        let c = arrow_category();
        assert!(is_discrete_opfibration(&FunctorData::identity(&c)));
    }

    #[test]
    fn collapse_is_not_opfibration() {
        // 2-object discrete collapses onto Z/2: the nonidentity downstairs
        // has no lift.
        let d = discrete_category(&["a", "b"]);
        let t = cyclic_category(2);
        let p = FunctorData {
            source: d.clone(),
            target: t.clone(),
            object_map: [("a".to_string(), "*".to_string()), ("b".to_string(), "*".to_string())]
                .into_iter()
                .collect(),
            morphism_map: [
                ("id_a".to_string(), "t0".to_string()),
                ("id_b".to_string(), "t0".to_string()),
            ]
            .into_iter()
            .collect(),
        };
        assert!(p.validate().ok());
        assert!(!is_discrete_opfibration(&p));
    }

    #[test]
    fn full_id_on_objects_z4_to_z2() {
        let p = cyclic_reduction(4, 2);
        assert!(p.validate().ok());
        let r = is_full_identity_on_objects(&p);
        assert!(r.holds);
        // identities lift to identities
        assert_eq!(r.section["t0"], "t0");
    }

    #[test]
    fn proper_subcategory_not_full() {
        // Z/1 inside-image check: map Z/1 (only identity) to Z/2.
        let p = FunctorData {
            source: cyclic_category(1),
            target: cyclic_category(2),
            object_map: [("*".to_string(), "*".to_string())].into_iter().collect(),
            morphism_map: [("t0".to_string(), "t0".to_string())].into_iter().collect(),
        };
        assert!(p.validate().ok());
        assert!(!is_full_identity_on_objects(&p).holds);
    }

    #[test]
    fn path_count_matches_dfs_oracle() {
        // DAG: diamond a->b, a->c, b->d, c->d.
        let g = Graph {
            nodes: vec!["a".into(), "b".into(), "c".into(), "d".into()],
            edges: vec![
                ("e1".into(), "a".into(), "b".into()),
                ("e2".into(), "a".into(), "c".into()),
                ("e3".into(), "b".into(), "d".into()),
                ("e4".into(), "c".into(), "d".into()),
            ],
        };
        fn count_paths(g: &Graph, from: &str) -> usize {
            // includes the empty path at `from`
            1 + g
                .edges
                .iter()
                .filter(|(_, s, _)| s == from)
                .map(|(_, _, t)| count_paths(g, t))
                .sum::<usize>()
        }
        let total: usize = g.nodes.iter().map(|n| count_paths(&g, n)).sum();
        let c = path_category(&g).unwrap();
        assert_eq!(c.morphisms.len(), total);
    }
}
