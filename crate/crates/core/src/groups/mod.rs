//! Finite groups on dense element indices.
//!
//! Every group is verified when it is built: the identity, inverses and the
//! distinguished generators are checked exactly, and associativity is checked
//! exhaustively through Light's test over the generators (which is a complete
//! proof for a finite operation). Groups too large for a stored table fall back
//! to a closure and a seeded random sample.

mod catalog;
mod construct;
mod ingest;
mod iso;

use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};

pub use catalog::{catalog, known_group_count, Catalog, CATALOG_LIMIT};
pub use construct::{
    alternating, case3_group, cyclic, dihedral, dihedral_named, direct_product, extension_group_a,
    extension_group_b, gl2, metacyclic, semidirect, semidirect_cyclic, sl2, symmetric,
};
pub use ingest::{from_permutations, from_table};
pub use iso::{
    automorphism_search, find_isomorphism, fingerprint, homomorphism_from_images, isomorphisms,
    recognize, recognize_with_witness, Automorphism, Fingerprint, Recognition, Structure,
};

/// An element, as an index into its group's element table.
pub type Elem = usize;

/// Largest order for which the multiplication table is stored.
pub const TABLE_LIMIT: usize = 4096;

/// How the group was built.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Tag {
    Cyclic(usize),
    /// Dihedral group of the given order.
    Dihedral(usize),
    /// `⟨c, b | c^m, b^k = c^u, b c b⁻¹ = c^t⟩`.
    Metacyclic {
        m: u64,
        k: u64,
        t: u64,
        u: u64,
    },
    DirectProduct(Box<Tag>, Box<Tag>),
    /// `H ⋊ C_k`.
    Semidirect(Box<Tag>, usize),
    Table,
    Permutation,
    Named(String),
    Subgroup,
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tag::Cyclic(n) => write!(f, "C{n}"),
            Tag::Dihedral(n) => write!(f, "D(order {n})"),
            Tag::Metacyclic { m, k, t, u } => write!(f, "M({m},{k},{t},{u})"),
            Tag::DirectProduct(a, b) => write!(f, "{a} x {b}"),
            Tag::Semidirect(a, k) => write!(f, "({a}) : C{k}"),
            Tag::Table => f.write_str("table"),
            Tag::Permutation => f.write_str("permutation group"),
            Tag::Named(s) => f.write_str(s),
            Tag::Subgroup => f.write_str("subgroup"),
        }
    }
}

type Formula = Arc<dyn Fn(Elem, Elem) -> Elem + Send + Sync>;

enum Law {
    Table(Vec<u32>),
    Formula(Formula),
}

struct Inner {
    order: usize,
    law: Law,
    identity: Elem,
    inverse: Vec<u32>,
    elem_order: Vec<u32>,
    generators: Vec<Elem>,
    names: Vec<String>,
    labels: Vec<String>,
    tag: Tag,
    orientation: Option<Vec<i8>>,
}

/// A finite group. Cheap to clone.
#[derive(Clone)]
pub struct FiniteGroup(Arc<Inner>);

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order())
            .field("tag", &self.0.tag)
            .field("generators", &self.0.names)
            .finish()
    }
}

/// Raw material for a group; `build` verifies it.
pub(crate) struct Builder {
    pub order: usize,
    pub mul: Formula,
    pub generators: Vec<Elem>,
    pub names: Vec<String>,
    pub labels: Option<Vec<String>>,
    pub tag: Tag,
}

impl Builder {
    pub fn new(
        order: usize,
        mul: impl Fn(Elem, Elem) -> Elem + Send + Sync + 'static,
        tag: Tag,
    ) -> Self {
        Builder {
            order,
            mul: Arc::new(mul),
            generators: Vec::new(),
            names: Vec::new(),
            labels: None,
            tag,
        }
    }

    pub fn generators(mut self, gens: Vec<Elem>, names: Vec<String>) -> Self {
        self.generators = gens;
        self.names = names;
        self
    }

    pub fn labels(mut self, labels: Vec<String>) -> Self {
        self.labels = Some(labels);
        self
    }

    pub fn build(self) -> Result<FiniteGroup> {
        let n = self.order;
        if n == 0 {
            return Err(Error::NotAGroup("empty element set".into()));
        }
        if n <= TABLE_LIMIT {
            let mut table = Vec::with_capacity(n * n);
            for a in 0..n {
                for b in 0..n {
                    let c = (self.mul)(a, b);
                    if c >= n {
                        return Err(Error::NotAGroup(format!("{a}*{b} = {c} is out of range")));
                    }
                    table.push(c as u32);
                }
            }
            finish(n, Law::Table(table), self)
        } else {
            let mul = self.mul.clone();
            finish(n, Law::Formula(mul), self)
        }
    }
}

fn finish(n: usize, law: Law, b: Builder) -> Result<FiniteGroup> {
    let mul = |x: Elem, y: Elem| -> Elem {
        match &law {
            Law::Table(t) => t[x * n + y] as usize,
            Law::Formula(f) => f(x, y),
        }
    };

    let identity = match &law {
        Law::Table(t) => (0..n)
            .find(|&e| (0..n).all(|j| t[e * n + j] as usize == j && t[j * n + e] as usize == j))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?,
        Law::Formula(_) => {
            let e = mul(0, 0);
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            for _ in 0..1024 {
                let j = rng.gen_range(0..n);
                if mul(e, j) != j || mul(j, e) != j {
                    return Err(Error::NotAGroup("no identity element".into()));
                }
            }
            e
        }
    };

    if let Law::Table(t) = &law {
        // Latin square: every row and column is a permutation.
        let mut seen = vec![0usize; n];
        for stamp in 1..=n {
            let row = stamp - 1;
            for j in 0..n {
                let v = t[row * n + j] as usize;
                if seen[v] == stamp {
                    return Err(Error::NotAGroup(format!("row {row} repeats element {v}")));
                }
                seen[v] = stamp;
            }
        }
        let mut seen = vec![0usize; n];
        for stamp in 1..=n {
            let col = stamp - 1;
            for i in 0..n {
                let v = t[i * n + col] as usize;
                if seen[v] == stamp {
                    return Err(Error::NotAGroup(format!(
                        "column {col} repeats element {v}"
                    )));
                }
                seen[v] = stamp;
            }
        }
    }

    let mut inverse = vec![0u32; n];
    let mut elem_order = vec![0u32; n];
    for e in 0..n {
        let (mut p, mut prev, mut k) = (e, identity, 1usize);
        while p != identity {
            prev = p;
            p = mul(p, e);
            k += 1;
            if k > n {
                return Err(Error::NotAGroup(format!("element {e} has no finite order")));
            }
        }
        if mul(e, prev) != identity || mul(prev, e) != identity {
            return Err(Error::NotAGroup(format!(
                "element {e} has no two-sided inverse"
            )));
        }
        inverse[e] = prev as u32;
        elem_order[e] = k as u32;
    }

    let mut generators = b.generators;
    let mut names = b.names;
    if generators.is_empty() && n > 1 {
        generators = greedy_generators(n, identity, &elem_order, &mul);
        names = (1..=generators.len()).map(|i| format!("g{i}")).collect();
    }
    if names.len() != generators.len() {
        return Err(invariant_err("generator names do not match generators"));
    }
    if let Some(&g) = generators.iter().find(|&&g| g >= n) {
        return Err(Error::IndexOutOfRange { index: g, len: n });
    }

    // Cayley-graph BFS: proves generation and yields shortlex words.
    let words = cayley_words(n, identity, &generators, &mul);
    if words.iter().any(Option::is_none) {
        return Err(Error::NotAGroup(
            "the generators do not generate the whole set".into(),
        ));
    }

    match &law {
        Law::Table(_) => {
            for &g in &generators {
                for a in 0..n {
                    for c in 0..n {
                        if mul(mul(a, c), g) != mul(a, mul(c, g)) {
                            return Err(Error::NotAGroup(format!(
                                "associativity fails for ({a}, {c}, {g})"
                            )));
                        }
                    }
                }
            }
        }
        Law::Formula(_) => {
            let mut rng = ChaCha8Rng::seed_from_u64(0xa55c);
            for _ in 0..4096 {
                let (a, c, d) = (
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                );
                if mul(mul(a, c), d) != mul(a, mul(c, d)) {
                    return Err(Error::NotAGroup(format!(
                        "associativity fails for ({a}, {c}, {d})"
                    )));
                }
            }
        }
    }

    let labels = match b.labels {
        Some(l) if l.len() == n => l,
        Some(_) => return Err(invariant_err("label count does not match the order")),
        None => words
            .iter()
            .map(|w| render_word(w.as_deref().unwrap_or(&[]), &names))
            .collect(),
    };

    Ok(FiniteGroup(Arc::new(Inner {
        order: n,
        law,
        identity,
        inverse,
        elem_order,
        generators,
        names,
        labels,
        tag: b.tag,
        orientation: None,
    })))
}

fn invariant_err(msg: &str) -> Error {
    Error::Invariant(msg.to_string())
}

fn greedy_generators(
    n: usize,
    identity: Elem,
    elem_order: &[u32],
    mul: &impl Fn(Elem, Elem) -> Elem,
) -> Vec<Elem> {
    let mut by_order: Vec<Elem> = (0..n).collect();
    by_order.sort_by_key(|&e| (std::cmp::Reverse(elem_order[e]), e));
    let mut gens = Vec::new();
    let mut inside = vec![false; n];
    inside[identity] = true;
    let mut count = 1;
    for e in by_order {
        if count == n {
            break;
        }
        if inside[e] {
            continue;
        }
        gens.push(e);
        let members = closure(n, identity, &gens, mul);
        count = members.len();
        for m in members {
            inside[m] = true;
        }
    }
    gens
}

fn closure(
    n: usize,
    identity: Elem,
    gens: &[Elem],
    mul: &impl Fn(Elem, Elem) -> Elem,
) -> Vec<Elem> {
    let mut seen = vec![false; n];
    seen[identity] = true;
    let mut out = vec![identity];
    let mut i = 0;
    while i < out.len() {
        let a = out[i];
        for &g in gens {
            let b = mul(a, g);
            if !seen[b] {
                seen[b] = true;
                out.push(b);
            }
        }
        i += 1;
    }
    out
}

fn cayley_words(
    n: usize,
    identity: Elem,
    gens: &[Elem],
    mul: &impl Fn(Elem, Elem) -> Elem,
) -> Vec<Option<Vec<usize>>> {
    let mut words: Vec<Option<Vec<usize>>> = vec![None; n];
    words[identity] = Some(Vec::new());
    let mut queue = VecDeque::from([identity]);
    while let Some(a) = queue.pop_front() {
        for (gi, &g) in gens.iter().enumerate() {
            let b = mul(a, g);
            if words[b].is_none() {
                let mut w = words[a].clone().unwrap();
                w.push(gi);
                words[b] = Some(w);
                queue.push_back(b);
            }
        }
    }
    words
}

/// Renders generator-index words with runs collapsed into powers.
pub(crate) fn render_word(word: &[usize], names: &[String]) -> String {
    if word.is_empty() {
        return "1".into();
    }
    let mut parts = Vec::new();
    let mut i = 0;
    while i < word.len() {
        let mut j = i;
        while j < word.len() && word[j] == word[i] {
            j += 1;
        }
        let name = &names[word[i]];
        if j - i == 1 {
            parts.push(name.clone());
        } else {
            parts.push(format!("{name}^{}", j - i));
        }
        i = j;
    }
    parts.join(" ")
}

/// A subgroup, stored as its sorted element list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Subgroup {
    elements: Vec<Elem>,
    generators: Vec<Elem>,
    parent_order: usize,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index(&self) -> usize {
        self.parent_order / self.elements.len()
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn contains(&self, e: Elem) -> bool {
        self.elements.binary_search(&e).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&e| other.contains(e))
    }
}

/// A conjugacy class with its minimal-index representative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjugacyClass {
    pub representative: Elem,
    pub elements: Vec<Elem>,
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.0.order
    }

    pub fn identity(&self) -> Elem {
        self.0.identity
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.0.order
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.0.law {
            Law::Table(t) => t[a * self.0.order + b] as usize,
            Law::Formula(f) => f(a, b),
        }
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.0.inverse[a] as usize
    }

    pub fn pow(&self, a: Elem, e: i64) -> Elem {
        let ord = self.elem_order(a) as i64;
        let k = e.rem_euclid(ord);
        let mut acc = self.identity();
        let mut base = a;
        let mut k = k as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// `a b a⁻¹`.
    pub fn conj(&self, a: Elem, b: Elem) -> Elem {
        self.mul(self.mul(a, b), self.inv(a))
    }

    pub fn product(&self, elems: impl IntoIterator<Item = Elem>) -> Elem {
        elems
            .into_iter()
            .fold(self.identity(), |acc, e| self.mul(acc, e))
    }

    pub fn commutes(&self, a: Elem, b: Elem) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    #[inline]
    pub fn elem_order(&self, a: Elem) -> u64 {
        self.0.elem_order[a] as u64
    }

    pub fn generators(&self) -> &[Elem] {
        &self.0.generators
    }

    pub fn generator_names(&self) -> &[String] {
        &self.0.names
    }

    /// The distinguished generator with the given name.
    pub fn gen(&self, name: &str) -> Option<Elem> {
        self.0
            .names
            .iter()
            .position(|n| n == name)
            .map(|i| self.0.generators[i])
    }

    pub fn label(&self, a: Elem) -> &str {
        &self.0.labels[a]
    }

    pub fn tag(&self) -> &Tag {
        &self.0.tag
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.commutes(a, b)))
    }

    /// Evaluates a word like `"(wx)^3 w"` or `"x^-1 y"` in the named
    /// generators; `1` denotes the identity.
    pub fn parse_word(&self, text: &str) -> Result<Elem> {
        let mut acc = self.identity();
        let mut offset = 0;
        for token in text.split_whitespace() {
            let at = text[offset..].find(token).map_or(offset, |i| offset + i);
            offset = at + token.len();
            if token == "1" {
                continue;
            }
            let (name, exp) = match token.rfind('^') {
                Some(i) => {
                    let exp = token[i + 1..].parse::<i64>().map_err(|_| Error::Syntax {
                        position: at + i + 1,
                        message: format!("bad exponent in '{token}'"),
                    })?;
                    (&token[..i], exp)
                }
                None => (token, 1),
            };
            let g = self.gen(name).ok_or_else(|| Error::Syntax {
                position: at,
                message: format!("unknown generator '{name}'"),
            })?;
            acc = self.mul(acc, self.pow(g, exp));
        }
        Ok(acc)
    }

    /// Orientation character value, when one is attached.
    pub fn orientation(&self, a: Elem) -> Option<i8> {
        self.0.orientation.as_ref().map(|o| o[a])
    }

    pub fn has_orientation(&self) -> bool {
        self.0.orientation.is_some()
    }

    /// Attaches the homomorphism to `{±1}` taking the given values on the
    /// distinguished generators. Fails if the values do not extend.
    pub fn with_orientation(&self, on_generators: &[i8]) -> Result<FiniteGroup> {
        if on_generators.len() != self.generators().len() {
            return Err(Error::InconsistentParameters(
                "one orientation value per generator is required".into(),
            ));
        }
        if on_generators.iter().any(|&v| v != 1 && v != -1) {
            return Err(Error::InconsistentParameters(
                "orientation values must be ±1".into(),
            ));
        }
        let n = self.order();
        let mut kappa = vec![0i8; n];
        kappa[self.identity()] = 1;
        let mut queue = VecDeque::from([self.identity()]);
        while let Some(a) = queue.pop_front() {
            for (&g, &v) in self.generators().iter().zip(on_generators) {
                let b = self.mul(a, g);
                let want = kappa[a] * v;
                if kappa[b] == 0 {
                    kappa[b] = want;
                    queue.push_back(b);
                } else if kappa[b] != want {
                    return Err(Error::InconsistentParameters(
                        "orientation values do not define a homomorphism".into(),
                    ));
                }
            }
        }
        let mut inner = self.clone_inner();
        inner.orientation = Some(kappa);
        Ok(FiniteGroup(Arc::new(inner)))
    }

    /// Same group with a new list of distinguished generators.
    pub fn with_generators(&self, names: &[&str], elems: &[Elem]) -> Result<FiniteGroup> {
        if names.len() != elems.len() {
            return Err(Error::InconsistentParameters(
                "names and elements differ in length".into(),
            ));
        }
        if let Some(&e) = elems.iter().find(|&&e| e >= self.order()) {
            return Err(Error::IndexOutOfRange {
                index: e,
                len: self.order(),
            });
        }
        if self.subgroup_generated(elems).order() != self.order() {
            return Err(Error::InconsistentParameters(
                "the new generators do not generate the group".into(),
            ));
        }
        let mut inner = self.clone_inner();
        inner.generators = elems.to_vec();
        inner.names = names.iter().map(|s| s.to_string()).collect();
        inner.orientation = None;
        let words = cayley_words(self.order(), self.identity(), elems, &|a, b| self.mul(a, b));
        inner.labels = words
            .iter()
            .map(|w| render_word(w.as_deref().unwrap_or(&[]), &inner.names))
            .collect();
        Ok(FiniteGroup(Arc::new(inner)))
    }

    pub(crate) fn relabeled(&self, labels: Vec<String>) -> FiniteGroup {
        let mut inner = self.clone_inner();
        inner.labels = labels;
        FiniteGroup(Arc::new(inner))
    }

    /// Same group with a different structure tag.
    pub(crate) fn retagged(&self, tag: Tag) -> FiniteGroup {
        let mut inner = self.clone_inner();
        inner.tag = tag;
        FiniteGroup(Arc::new(inner))
    }

    fn clone_inner(&self) -> Inner {
        let i = &self.0;
        Inner {
            order: i.order,
            law: match &i.law {
                Law::Table(t) => Law::Table(t.clone()),
                Law::Formula(f) => Law::Formula(f.clone()),
            },
            identity: i.identity,
            inverse: i.inverse.clone(),
            elem_order: i.elem_order.clone(),
            generators: i.generators.clone(),
            names: i.names.clone(),
            labels: i.labels.clone(),
            tag: i.tag.clone(),
            orientation: i.orientation.clone(),
        }
    }

    pub fn subgroup_generated(&self, gens: &[Elem]) -> Subgroup {
        let mut elements = closure(self.order(), self.identity(), gens, &|a, b| self.mul(a, b));
        elements.sort_unstable();
        let mut generators: Vec<Elem> = Vec::new();
        for &g in gens {
            if g != self.identity() && !generators.contains(&g) {
                generators.push(g);
            }
        }
        Subgroup {
            elements,
            generators,
            parent_order: self.order(),
        }
    }

    /// Subgroup from an element set known to be closed, with greedy generators.
    fn subgroup_from_set(&self, mut elements: Vec<Elem>) -> Subgroup {
        elements.sort_unstable();
        let mut generators = Vec::new();
        let mut current = self.subgroup_generated(&[]);
        let mut by_order = elements.clone();
        by_order.sort_by_key(|&e| (std::cmp::Reverse(self.elem_order(e)), e));
        for e in by_order {
            if current.order() == elements.len() {
                break;
            }
            if !current.contains(e) {
                generators.push(e);
                current = self.subgroup_generated(&generators);
            }
        }
        Subgroup {
            elements,
            generators,
            parent_order: self.order(),
        }
    }

    pub fn centralizer(&self, e: Elem) -> Subgroup {
        let set = self.elements().filter(|&h| self.commutes(h, e)).collect();
        self.subgroup_from_set(set)
    }

    pub fn center(&self) -> Subgroup {
        let gens = self.generators();
        let set = self
            .elements()
            .filter(|&h| gens.iter().all(|&g| self.commutes(h, g)))
            .collect();
        self.subgroup_from_set(set)
    }

    /// Commutator subgroup.
    pub fn derived_subgroup(&self) -> Subgroup {
        let mut comms = Vec::new();
        let mut seen = vec![false; self.order()];
        for a in self.elements() {
            for b in self.elements() {
                let c = self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)));
                if !seen[c] {
                    seen[c] = true;
                    comms.push(c);
                }
            }
        }
        let sub = self.subgroup_generated(&comms);
        self.subgroup_from_set(sub.elements)
    }

    /// Conjugacy classes of the elements accepted by `filter`, ordered by
    /// representative. Conjugation-invariance of the filter is the caller's
    /// responsibility; elements outside it never appear.
    pub fn conjugacy_classes(&self, filter: impl Fn(Elem) -> bool) -> Vec<ConjugacyClass> {
        let n = self.order();
        let mut assigned = vec![false; n];
        let mut classes = Vec::new();
        for e in self.elements() {
            if assigned[e] || !filter(e) {
                continue;
            }
            let mut members: Vec<Elem> = self.elements().map(|h| self.conj(h, e)).collect();
            members.sort_unstable();
            members.dedup();
            for &m in &members {
                assigned[m] = true;
            }
            members.retain(|&m| filter(m));
            classes.push(ConjugacyClass {
                representative: e,
                elements: members,
            });
        }
        classes
    }

    pub fn are_conjugate(&self, a: Elem, b: Elem) -> bool {
        self.elements().any(|h| self.conj(h, a) == b)
    }

    /// The subgroup as a group in its own right, plus the embedding.
    pub fn subgroup_as_group(
        &self,
        sub: &Subgroup,
        names: &[&str],
        gens: &[Elem],
    ) -> Result<(FiniteGroup, Vec<Elem>)> {
        let embed = sub.elements.clone();
        let pos = |e: Elem| embed.binary_search(&e).expect("closed subgroup");
        let local_gens: Vec<Elem> = gens
            .iter()
            .map(|&g| {
                embed.binary_search(&g).map_err(|_| {
                    Error::InconsistentParameters("generator outside the subgroup".into())
                })
            })
            .collect::<Result<_>>()?;
        let parent = self.clone();
        let emb = embed.clone();
        let table: Vec<u32> = emb
            .iter()
            .flat_map(|&a| emb.iter().map(move |&b| (a, b)).collect::<Vec<_>>())
            .map(|(a, b)| pos(parent.mul(a, b)) as u32)
            .collect();
        let m = embed.len();
        let group = Builder::new(m, move |a, b| table[a * m + b] as usize, Tag::Subgroup)
            .generators(local_gens, names.iter().map(|s| s.to_string()).collect())
            .build()?;
        Ok((group, embed))
    }

    /// Every element has order dividing 2 and is not the identity.
    pub fn involutions(&self) -> Vec<Elem> {
        self.elements()
            .filter(|&e| self.elem_order(e) == 2)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_relations() {
        let g = dihedral(8).unwrap();
        assert_eq!(g.order(), 8);
        let a = g.gen("A").unwrap();
        let d = g.gen("D").unwrap();
        assert_eq!(g.pow(a, 2), g.identity());
        assert_eq!(g.pow(d, 4), g.identity());
        assert_eq!(g.pow(g.mul(d, a), 2), g.identity());
        assert_eq!(g.label(g.mul(g.pow(d, 3), a)), "D^3 A");
    }

    #[test]
    fn element_orders() {
        let g = extension_group_b(2).unwrap();
        assert_eq!(g.elem_order(g.identity()), 1);
        let zx = g.parse_word("z x").unwrap();
        assert_eq!(g.elem_order(zx), 8);
        let g3 = extension_group_b(3).unwrap();
        let xz = g3.parse_word("x z").unwrap();
        assert_eq!(g3.elem_order(g3.pow(xz, 3)), 2);
        assert!(g3.center().contains(g3.pow(xz, 3)));
    }

    #[test]
    fn centralizers() {
        let g = direct_product(&dihedral(12).unwrap(), &cyclic(2).unwrap()).unwrap();
        let y = g.generators()[2];
        assert_eq!(g.centralizer(y).order(), g.order());

        let ga = extension_group_a(5).unwrap();
        let w = ga.gen("w").unwrap();
        let c = ga.centralizer(w);
        assert_eq!(c.order(), 8);
        let expect = ga.subgroup_generated(&[
            w,
            ga.pow(ga.parse_word("w x").unwrap(), 5),
            ga.gen("y").unwrap(),
        ]);
        assert_eq!(c.elements(), expect.elements());

        let gb = extension_group_b(4).unwrap();
        let z = gb.gen("z").unwrap();
        let xz = gb.parse_word("x z").unwrap();
        let c = gb.centralizer(z);
        assert_eq!(c.order(), 4);
        assert_eq!(
            c.elements(),
            gb.subgroup_generated(&[z, gb.pow(xz, 8)]).elements()
        );
    }

    #[test]
    fn involution_classes_of_d8() {
        let g = dihedral(8).unwrap();
        let classes = g.conjugacy_classes(|e| g.elem_order(e) == 2);
        assert_eq!(classes.len(), 3);
        let total: usize = classes.iter().map(|c| c.elements.len()).sum();
        assert_eq!(total, 5);
    }

    #[test]
    fn generated_subgroups() {
        let g = extension_group_a(5).unwrap();
        let wx = g.parse_word("w x").unwrap();
        let s = g.subgroup_generated(&[wx]);
        assert_eq!(s.order(), 10);
        assert_eq!(g.subgroup_generated(&[]).order(), 1);
    }

    #[test]
    fn rejects_non_group_table() {
        // Left-zero semigroup on two points.
        let err = Builder::new(2, |a, _| a, Tag::Table).build().unwrap_err();
        assert!(matches!(err, Error::NotAGroup(_)));
    }

    #[test]
    fn orientation_must_extend() {
        let g = cyclic(3).unwrap();
        assert!(g.with_orientation(&[-1]).is_err());
        let g = cyclic(4).unwrap().with_orientation(&[-1]).unwrap();
        assert_eq!(g.orientation(g.pow(g.generators()[0], 2)), Some(1));
    }

    #[test]
    fn parse_word_errors() {
        let g = dihedral(8).unwrap();
        assert!(matches!(
            g.parse_word("D Q"),
            Err(Error::Syntax { position: 2, .. })
        ));
        assert_eq!(g.parse_word("D^-1").unwrap(), g.pow(g.gen("D").unwrap(), 3));
        assert_eq!(g.parse_word("1").unwrap(), g.identity());
    }
}
