//! Extensions of the `D₂g` action by anticonformal involutions.
//!
//! A surface in the `[2,2,2,2g]` family is real exactly when the action of
//! `D₂g` extends to an NEC group `Γ*` containing the Fuchsian group as its
//! orientation-preserving half. Two NEC signatures occur:
//!
//! * kind a, `(0;+;[-];{(2,2,2,2g)})`, reflections `c0..c3`, onto `D₂g × C₂`;
//! * kind b, `(0;+;[2];{(2,2g)})`, elliptic `a` and reflections `c0, c1` with
//!   `c2 = a c0 a`, onto `D₂g ⋊ C₂`.
//!
//! Both are found by exhaustive search and classified up to
//! orientation-preserving automorphisms of the target and the symmetries of
//! the signature.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::actions::{canonical_vector, equivalent, GeneratingVector};
use crate::error::{Error, Result};
use crate::groups::{
    automorphism_search, extension_group_a, extension_group_b, find_isomorphism, recognize, Elem,
    FiniteGroup, Structure,
};
use crate::signatures::{Period, Sign, Signature};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    A,
    B,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::A => "a",
            Kind::B => "b",
        })
    }
}

impl std::str::FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "a" => Ok(Kind::A),
            "b" => Ok(Kind::B),
            _ => Err(Error::InconsistentParameters(format!(
                "unknown extension kind '{s}'"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Label {
    #[serde(rename = "theta1*")]
    Theta1,
    #[serde(rename = "theta2*")]
    Theta2,
    #[serde(rename = "theta*")]
    ThetaB,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Label::Theta1 => "θ₁*",
            Label::Theta2 => "θ₂*",
            Label::ThetaB => "θ*",
        })
    }
}

/// An epimorphism `θ*: Γ* → G*`, stored as the images of the canonical
/// generators: `c0, c1, c2, c3` for kind a, `a, c0, c1, c2` for kind b.
#[derive(Debug, Clone)]
pub struct ExtendedAction {
    pub genus: u64,
    pub kind: Kind,
    pub label: Label,
    pub signature: Signature,
    pub group: FiniteGroup,
    pub images: Vec<Elem>,
    /// Number of admissible assignments equivalent to this one.
    pub class_size: usize,
}

impl Serialize for ExtendedAction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct View<'a> {
            kind: Kind,
            label: Label,
            signature: &'a Signature,
            group_order: usize,
            structure: String,
            images: Vec<(&'static str, &'a str)>,
            class_size: usize,
        }
        View {
            kind: self.kind,
            label: self.label,
            signature: &self.signature,
            group_order: self.group.order(),
            structure: recognize(&self.group).to_string(),
            images: self
                .generator_names()
                .iter()
                .zip(&self.images)
                .map(|(&n, &e)| (n, self.group.label(e)))
                .collect(),
            class_size: self.class_size,
        }
        .serialize(s)
    }
}

impl ExtendedAction {
    pub fn generator_names(&self) -> &'static [&'static str] {
        match self.kind {
            Kind::A => &["c0", "c1", "c2", "c3"],
            Kind::B => &["a", "c0", "c1", "c2"],
        }
    }

    /// Images of the reflections `c0, ..., cs` of the period cycle, `cs`
    /// included.
    pub fn reflection_chain(&self) -> Vec<Elem> {
        match self.kind {
            Kind::A => {
                let mut v = self.images.clone();
                v.push(self.images[0]);
                v
            }
            Kind::B => self.images[1..].to_vec(),
        }
    }

    /// Image of the connecting generator `e` (with `cs = e⁻¹ c0 e`).
    pub fn connecting_image(&self) -> Elem {
        match self.kind {
            Kind::A => self.group.identity(),
            Kind::B => self.group.inv(self.images[0]),
        }
    }

    pub fn link_periods(&self) -> Vec<u64> {
        self.signature.period_cycles()[0].clone()
    }

    /// Every canonical relator maps to the identity, reflections reverse
    /// orientation, and every torsion word keeps its exact order.
    pub fn verify(&self) -> Result<()> {
        let g = &self.group;
        let chain = self.reflection_chain();
        let links = self.link_periods();
        for &c in &chain {
            if g.elem_order(c) != 2 || g.orientation(c) != Some(-1) {
                return Err(Error::invariant(format!(
                    "{}: reflection image {} is not an orientation-reversing involution",
                    self.label,
                    g.label(c)
                )));
            }
        }
        for (j, &n) in links.iter().enumerate() {
            let p = g.mul(chain[j], chain[j + 1]);
            if g.elem_order(p) != n {
                return Err(Error::invariant(format!(
                    "{}: link {} has order {}, expected {n}",
                    self.label,
                    j + 1,
                    g.elem_order(p)
                )));
            }
        }
        let e = self.connecting_image();
        let last = *chain.last().expect("nonempty chain");
        if g.mul(g.mul(g.inv(e), chain[0]), e) != last {
            return Err(Error::invariant(format!("{}: cs ≠ e⁻¹ c0 e", self.label)));
        }
        if self.kind == Kind::B {
            let a = self.images[0];
            if g.elem_order(a) != 2 || g.orientation(a) != Some(1) {
                return Err(Error::invariant(format!(
                    "{}: a must be an orientation-preserving involution",
                    self.label
                )));
            }
            // long relation x1 e1 = 1
            if g.mul(a, e) != g.identity() {
                return Err(Error::invariant(format!("{}: x1 e1 ≠ 1", self.label)));
            }
        }
        let gens: Vec<Elem> = self.images.clone();
        if g.subgroup_generated(&gens).order() != g.order() {
            return Err(Error::invariant(format!(
                "{}: images do not generate G*",
                self.label
            )));
        }
        Ok(())
    }
}

fn kind_signature(g: u64, kind: Kind) -> Signature {
    match kind {
        Kind::A => Signature::new(0, Sign::Plus, vec![], vec![vec![2, 2, 2, 2 * g]]),
        Kind::B => Signature::new(0, Sign::Plus, vec![Period::Finite(2)], vec![vec![2, 2 * g]]),
    }
    .expect("valid periods")
}

/// The target group of each kind, with its orientation character.
pub fn extended_group(g: u64, kind: Kind) -> Result<FiniteGroup> {
    match kind {
        Kind::A => extension_group_a(g),
        Kind::B => extension_group_b(g),
    }
}

/// All admissible image tuples, lexicographically ordered.
fn admissible(grp: &FiniteGroup, g: u64, kind: Kind) -> Vec<Vec<Elem>> {
    let refl: Vec<Elem> = grp
        .elements()
        .filter(|&e| grp.elem_order(e) == 2 && grp.orientation(e) == Some(-1))
        .collect();
    let ord = |a: Elem, b: Elem| grp.elem_order(grp.mul(a, b));
    let full = |v: &[Elem]| grp.subgroup_generated(v).order() == grp.order();
    let n = 2 * g;
    match kind {
        Kind::A => {
            let parts: Vec<Vec<Vec<Elem>>> = refl
                .par_iter()
                .map(|&c0| {
                    let mut out = Vec::new();
                    for &c1 in refl.iter().filter(|&&c1| ord(c0, c1) == 2) {
                        for &c2 in refl.iter().filter(|&&c2| ord(c1, c2) == 2) {
                            for &c3 in refl
                                .iter()
                                .filter(|&&c3| ord(c2, c3) == 2 && ord(c3, c0) == n)
                            {
                                let v = [c0, c1, c2, c3];
                                if full(&v) {
                                    out.push(v.to_vec());
                                }
                            }
                        }
                    }
                    out
                })
                .collect();
            parts.into_iter().flatten().collect()
        }
        Kind::B => {
            let elliptic: Vec<Elem> = grp
                .elements()
                .filter(|&e| grp.elem_order(e) == 2 && grp.orientation(e) == Some(1))
                .collect();
            let parts: Vec<Vec<Vec<Elem>>> = elliptic
                .par_iter()
                .map(|&a| {
                    let mut out = Vec::new();
                    for &c0 in &refl {
                        let c2 = grp.conj(a, c0);
                        for &c1 in refl
                            .iter()
                            .filter(|&&c1| ord(c0, c1) == 2 && ord(c1, c2) == n)
                        {
                            let v = [a, c0, c1, c2];
                            if full(&v) {
                                out.push(v.to_vec());
                            }
                        }
                    }
                    out
                })
                .collect();
            parts.into_iter().flatten().collect()
        }
    }
}

/// The symmetry of the signature used alongside `Aut(G*)`: reversing the
/// reflection chain for kind a, exchanging `c0` and `c1` for kind b.
fn signature_symmetry(grp: &FiniteGroup, kind: Kind, v: &[Elem]) -> Vec<Elem> {
    match kind {
        Kind::A => vec![v[3], v[2], v[1], v[0]],
        Kind::B => vec![v[0], v[2], v[1], grp.conj(v[0], v[2])],
    }
}

/// Paper tuples, by label, in the target group.
fn named_tuples(grp: &FiniteGroup, g: u64, kind: Kind) -> Vec<(Label, Vec<Elem>)> {
    let gi = g as i64;
    match kind {
        Kind::A => {
            let (x, w, y) = (gen(grp, "x"), gen(grp, "w"), gen(grp, "y"));
            let dg = grp.pow(grp.mul(w, x), gi);
            vec![
                (Label::Theta1, vec![x, y, grp.mul(dg, w), w]),
                (Label::Theta2, vec![x, y, grp.mul(y, dg), w]),
            ]
        }
        Kind::B => {
            let (x, z, w) = (gen(grp, "x"), gen(grp, "z"), gen(grp, "w"));
            vec![(Label::ThetaB, vec![x, grp.product([x, w, x]), z, w])]
        }
    }
}

fn gen(grp: &FiniteGroup, name: &str) -> Elem {
    grp.gen(name)
        .expect("named generator of an extension group")
}

/// The extended actions of the given kind, one per equivalence class.
/// Fails if a class does not contain one of the named tuples, if the
/// centralizer-image identities do not hold, or if a restriction leaves the
/// unique `[2,2,2,2g]` class.
pub fn build_extensions(g: u64, kind: Kind) -> Result<Vec<ExtendedAction>> {
    let grp = extended_group(g, kind)?;
    let tuples = admissible(&grp, g, kind);
    let index: HashMap<&[Elem], usize> = tuples
        .iter()
        .enumerate()
        .map(|(i, t)| (t.as_slice(), i))
        .collect();
    let autos: Vec<_> = automorphism_search(&grp, &[])
        .into_iter()
        .filter(|a| {
            grp.generators()
                .iter()
                .all(|&s| grp.orientation(a.map[s]) == grp.orientation(s))
        })
        .collect();

    let mut parent: Vec<usize> = (0..tuples.len()).collect();
    fn find(p: &mut [usize], mut a: usize) -> usize {
        while p[a] != a {
            p[a] = p[p[a]];
            a = p[a];
        }
        a
    }
    let link = |p: &mut Vec<usize>, a: usize, b: usize| {
        let (ra, rb) = (find(p, a), find(p, b));
        if ra != rb {
            p[ra.max(rb)] = ra.min(rb);
        }
    };
    for (i, t) in tuples.iter().enumerate() {
        let sym = signature_symmetry(&grp, kind, t);
        let j = *index
            .get(sym.as_slice())
            .ok_or_else(|| Error::invariant("signature symmetry leaves the admissible set"))?;
        link(&mut parent, i, j);
        for a in &autos {
            let img: Vec<Elem> = t.iter().map(|&e| a.map[e]).collect();
            let j = *index
                .get(img.as_slice())
                .ok_or_else(|| Error::invariant("automorphism leaves the admissible set"))?;
            link(&mut parent, i, j);
        }
    }
    let mut sizes: HashMap<usize, usize> = HashMap::new();
    for i in 0..tuples.len() {
        *sizes.entry(find(&mut parent, i)).or_default() += 1;
    }

    let named = named_tuples(&grp, g, kind);
    let mut out = Vec::new();
    let mut roots: Vec<usize> = sizes.keys().copied().collect();
    roots.sort_unstable();
    for root in roots {
        let (label, images) = named
            .iter()
            .find(|(_, t)| {
                index
                    .get(t.as_slice())
                    .is_some_and(|&i| find(&mut parent, i) == root)
            })
            .cloned()
            .ok_or_else(|| {
                Error::invariant(format!(
                    "kind {kind} at g={g}: class of {:?} contains no named epimorphism",
                    tuples[root]
                        .iter()
                        .map(|&e| grp.label(e))
                        .collect::<Vec<_>>()
                ))
            })?;
        out.push(ExtendedAction {
            genus: g,
            kind,
            label,
            signature: kind_signature(g, kind),
            group: grp.clone(),
            images,
            class_size: sizes[&root],
        });
    }
    for (label, _) in &named {
        if !out.iter().any(|e| e.label == *label) {
            return Err(Error::invariant(format!(
                "{label} is not an admissible epimorphism"
            )));
        }
    }
    out.sort_by_key(|e| e.label);
    for e in &out {
        e.verify()?;
        crate::realforms::check_centralizer_guards(e)?;
        let v = restrict_to_index2(e)?;
        if !in_unique_class(&v)? {
            return Err(Error::invariant(format!(
                "{}: restriction leaves the unique class",
                e.label
            )));
        }
    }
    Ok(out)
}

/// The orientation-preserving half `θ*(Γ′)` as a subgroup of `G*`.
pub fn orientation_kernel(grp: &FiniteGroup) -> crate::groups::Subgroup {
    let even: Vec<Elem> = grp
        .elements()
        .filter(|&e| grp.orientation(e) == Some(1))
        .collect();
    grp.subgroup_generated(&even)
}

/// The images of the canonical generators of the index-2 Fuchsian subgroup,
/// in `G*` (periods `[2, 2, 2, 2g]`).
pub fn restriction_images(e: &ExtendedAction) -> Vec<Elem> {
    let g = &e.group;
    let v = &e.images;
    match e.kind {
        Kind::A => vec![
            g.mul(v[0], v[1]),
            g.mul(v[1], v[2]),
            g.mul(v[2], v[3]),
            g.mul(v[3], v[0]),
        ],
        Kind::B => vec![
            v[0],
            g.product([v[1], v[0], v[1]]),
            g.mul(v[1], v[2]),
            g.mul(v[2], v[3]),
        ],
    }
}

/// The induced action of the orientation-preserving subgroup, as a vector
/// in that subgroup (made into a group in its own right).
pub fn restrict_to_index2(e: &ExtendedAction) -> Result<GeneratingVector> {
    let images = restriction_images(e);
    let kernel = orientation_kernel(&e.group);
    let names: Vec<String> = (1..=4).map(|i| format!("x{i}'")).collect();
    let name_refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let (sub, embed) = e.group.subgroup_as_group(&kernel, &name_refs, &images)?;
    let local: Vec<Elem> = images
        .iter()
        .map(|x| embed.binary_search(x).expect("image lies in the kernel"))
        .collect();
    GeneratingVector::new(&sub, &[2, 2, 2, 2 * e.genus], &local)
}

/// Whether a `[2,2,2,2g]` vector over a group isomorphic to `D₂g` lies in the
/// class of `(A, D^{g+1}A, D^g, D)`.
pub fn in_unique_class(v: &GeneratingVector) -> Result<bool> {
    let g = (v.group().order() / 4) as u64;
    let canon = canonical_vector(g)?;
    let iso = match find_isomorphism(v.group(), canon.group()) {
        Some(iso) => iso,
        None => return Ok(false),
    };
    let mapped = GeneratingVector::new(
        canon.group(),
        v.periods(),
        &v.elements().iter().map(|&x| iso[x]).collect::<Vec<_>>(),
    )?;
    Ok(equivalent(&mapped, &canon))
}

/// Recognized structure of `G*`.
pub fn extended_structure(g: u64, kind: Kind) -> Result<Structure> {
    Ok(recognize(&extended_group(g, kind)?))
}
