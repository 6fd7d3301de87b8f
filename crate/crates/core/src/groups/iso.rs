//! Homomorphism extension, isomorphism and automorphism search, recognition.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::{cyclic, dihedral, direct_product, Elem, FiniteGroup};

const UNSET: Elem = Elem::MAX;

/// Extends images of `src`'s distinguished generators to a map on all of
/// `src`. Returns `None` unless the images define a homomorphism.
pub fn homomorphism_from_images(
    src: &FiniteGroup,
    dst: &FiniteGroup,
    images: &[Elem],
) -> Option<Vec<Elem>> {
    if images.len() != src.generators().len() {
        return None;
    }
    let mut map = vec![UNSET; src.order()];
    extend(src, dst, src.generators(), images, &mut map, false)?;
    Some(map)
}

/// BFS over `⟨gens⟩ ≤ src`, writing images into `map` (entries start at
/// `UNSET`). Fails on an inconsistency or, if `injective`, a collision.
fn extend(
    src: &FiniteGroup,
    dst: &FiniteGroup,
    gens: &[Elem],
    images: &[Elem],
    map: &mut [Elem],
    injective: bool,
) -> Option<()> {
    let mut used = if injective {
        vec![false; dst.order()]
    } else {
        Vec::new()
    };
    map[src.identity()] = dst.identity();
    if injective {
        used[dst.identity()] = true;
    }
    let mut queue = VecDeque::from([src.identity()]);
    while let Some(a) = queue.pop_front() {
        for (&g, &img) in gens.iter().zip(images) {
            let b = src.mul(a, g);
            let want = dst.mul(map[a], img);
            if map[b] == UNSET {
                if injective {
                    if used[want] {
                        return None;
                    }
                    used[want] = true;
                }
                map[b] = want;
                queue.push_back(b);
            } else if map[b] != want {
                return None;
            }
        }
    }
    Some(())
}

fn candidates(src: &FiniteGroup, dst: &FiniteGroup, constraint: &[Option<Elem>]) -> Vec<Vec<Elem>> {
    src.generators()
        .iter()
        .enumerate()
        .map(|(i, &g)| match constraint.get(i).copied().flatten() {
            Some(e) if e < dst.order() && dst.elem_order(e) == src.elem_order(g) => vec![e],
            Some(_) => Vec::new(),
            None => dst
                .elements()
                .filter(|&e| dst.elem_order(e) == src.elem_order(g))
                .collect(),
        })
        .collect()
}

struct Search<'a> {
    src: &'a FiniteGroup,
    dst: &'a FiniteGroup,
    cands: Vec<Vec<Elem>>,
}

impl Search<'_> {
    /// Depth-first over images of the remaining generators, pruning by
    /// injective consistency on the subgroup generated so far.
    fn dfs(&self, images: &mut Vec<Elem>, first_only: bool, out: &mut Vec<Vec<Elem>>) {
        let k = images.len();
        let gens = &self.src.generators()[..k];
        let mut map = vec![UNSET; self.src.order()];
        if extend(self.src, self.dst, gens, images, &mut map, true).is_none() {
            return;
        }
        if k == self.cands.len() {
            out.push(map);
            return;
        }
        for &c in &self.cands[k] {
            images.push(c);
            self.dfs(images, first_only, out);
            images.pop();
            if first_only && !out.is_empty() {
                return;
            }
        }
    }

    fn run(&self, first_only: bool) -> Vec<Vec<Elem>> {
        if self.src.order() != self.dst.order() {
            return Vec::new();
        }
        if self.cands.is_empty() {
            // trivial groups
            return vec![vec![self.dst.identity(); self.src.order()]];
        }
        let branch = |&c: &Elem| {
            let mut out = Vec::new();
            self.dfs(&mut vec![c], first_only, &mut out);
            out
        };
        if first_only {
            self.cands[0]
                .par_iter()
                .find_map_first(|c| branch(c).into_iter().next())
                .into_iter()
                .collect()
        } else {
            let parts: Vec<Vec<Vec<Elem>>> = self.cands[0].par_iter().map(branch).collect();
            parts.into_iter().flatten().collect()
        }
    }
}

impl Search<'_> {
    /// Sequential enumeration that gives up once more than `limit` maps exist.
    fn bounded(&self, images: &mut Vec<Elem>, limit: usize, out: &mut Vec<Vec<Elem>>) -> bool {
        let k = images.len();
        let mut map = vec![UNSET; self.src.order()];
        if extend(
            self.src,
            self.dst,
            &self.src.generators()[..k],
            images,
            &mut map,
            true,
        )
        .is_none()
        {
            return true;
        }
        if k == self.cands.len() {
            out.push(map);
            return out.len() <= limit;
        }
        for &c in &self.cands[k] {
            images.push(c);
            let ok = self.bounded(images, limit, out);
            images.pop();
            if !ok {
                return false;
            }
        }
        true
    }
}

/// All automorphisms of `g`, or `None` if there are more than `limit`.
pub fn automorphisms_bounded(g: &FiniteGroup, limit: usize) -> Option<Vec<Automorphism>> {
    let search = Search {
        src: g,
        dst: g,
        cands: candidates(g, g, &[]),
    };
    let mut out = Vec::new();
    if !search.bounded(&mut Vec::new(), limit, &mut out) {
        return None;
    }
    Some(
        out.into_iter()
            .map(|map| Automorphism {
                images: g.generators().iter().map(|&s| map[s]).collect(),
                map,
            })
            .collect(),
    )
}

/// All isomorphisms `src → dst` extending the constraint on `src`'s
/// generators, as full element maps, ordered by generator images.
pub fn isomorphisms(
    src: &FiniteGroup,
    dst: &FiniteGroup,
    constraint: &[Option<Elem>],
) -> Vec<Vec<Elem>> {
    Search {
        src,
        dst,
        cands: candidates(src, dst, constraint),
    }
    .run(false)
}

/// An isomorphism `src → dst`, if one exists. Fingerprints are compared first.
pub fn find_isomorphism(src: &FiniteGroup, dst: &FiniteGroup) -> Option<Vec<Elem>> {
    if fingerprint(src) != fingerprint(dst) {
        return None;
    }
    find_isomorphism_unchecked(src, dst)
}

pub(crate) fn find_isomorphism_unchecked(
    src: &FiniteGroup,
    dst: &FiniteGroup,
) -> Option<Vec<Elem>> {
    Search {
        src,
        dst,
        cands: candidates(src, dst, &[]),
    }
    .run(true)
    .into_iter()
    .next()
}

/// An automorphism, by generator images and the full element map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automorphism {
    pub images: Vec<Elem>,
    pub map: Vec<Elem>,
}

impl Automorphism {
    pub fn apply(&self, e: Elem) -> Elem {
        self.map[e]
    }
}

/// All automorphisms of `g` whose generator images agree with `constraint`
/// (positions follow the distinguished generators; `None` is free).
pub fn automorphism_search(g: &FiniteGroup, constraint: &[Option<Elem>]) -> Vec<Automorphism> {
    isomorphisms(g, g, constraint)
        .into_iter()
        .map(|map| Automorphism {
            images: g.generators().iter().map(|&s| map[s]).collect(),
            map,
        })
        .collect()
}

/// Isomorphism invariants used as a prefilter.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint {
    pub order: usize,
    pub order_profile: Vec<(u64, usize)>,
    pub center: usize,
    pub derived: usize,
    pub classes: usize,
    /// Element counts by (order, centralizer order, number of square roots).
    pub element_profile: Vec<((u64, usize, usize), usize)>,
}

pub fn fingerprint(g: &FiniteGroup) -> Fingerprint {
    let mut profile: BTreeMap<u64, usize> = BTreeMap::new();
    let mut roots = vec![0usize; g.order()];
    for e in g.elements() {
        *profile.entry(g.elem_order(e)).or_default() += 1;
        roots[g.mul(e, e)] += 1;
    }
    let mut joint: BTreeMap<(u64, usize, usize), usize> = BTreeMap::new();
    for e in g.elements() {
        let cent = g.elements().filter(|&x| g.commutes(x, e)).count();
        *joint.entry((g.elem_order(e), cent, roots[e])).or_default() += 1;
    }
    Fingerprint {
        order: g.order(),
        element_profile: joint.into_iter().collect(),
        order_profile: profile.into_iter().collect(),
        center: g.center().order(),
        derived: g.derived_subgroup().order(),
        classes: g.conjugacy_classes(|_| true).len(),
    }
}

/// The recognizable isomorphism types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Structure {
    Cyclic {
        order: usize,
    },
    ElementaryAbelian {
        prime: u64,
        rank: u32,
    },
    Dihedral {
        order: usize,
    },
    /// `D × C₂` of the given total order.
    DihedralTimesC2 {
        order: usize,
    },
    Other {
        order: usize,
        abelianization: usize,
    },
}

impl fmt::Display for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Structure::Cyclic { order } => write!(f, "cyclic of order {order}"),
            Structure::ElementaryAbelian { prime, rank } => {
                write!(f, "elementary abelian of order {prime}^{rank}")
            }
            Structure::Dihedral { order } => write!(f, "dihedral of order {order}"),
            Structure::DihedralTimesC2 { order } => {
                write!(f, "dihedral of order {} x C2", order / 2)
            }
            Structure::Other {
                order,
                abelianization,
            } => {
                write!(f, "order {order}, abelianization of order {abelianization}")
            }
        }
    }
}

/// A recognized structure with the model group and an explicit isomorphism
/// `model → G` (absent for `Other`).
#[derive(Debug, Clone)]
pub struct Recognition {
    pub structure: Structure,
    pub model: Option<FiniteGroup>,
    pub isomorphism: Option<Vec<Elem>>,
}

fn prime_power(n: usize) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d))?;
    let mut m = n;
    let mut r = 0;
    while m.is_multiple_of(p) {
        m /= p;
        r += 1;
    }
    (m == 1).then_some((p as u64, r))
}

fn models(n: usize) -> Vec<(Structure, FiniteGroup)> {
    let mut out = Vec::new();
    if let Ok(c) = cyclic(n as u64) {
        out.push((Structure::Cyclic { order: n }, c));
    }
    if let Some((p, r)) = prime_power(n) {
        if r >= 2 {
            let c = cyclic(p).expect("prime order");
            let mut acc = c.clone();
            for _ in 1..r {
                acc = direct_product(&acc, &c).expect("product");
            }
            out.push((Structure::ElementaryAbelian { prime: p, rank: r }, acc));
        }
    }
    if n >= 6 && n.is_multiple_of(2) {
        out.push((
            Structure::Dihedral { order: n },
            dihedral(n as u64).expect("even order"),
        ));
    }
    if n >= 12 && n.is_multiple_of(4) {
        let d = dihedral((n / 2) as u64).expect("even order");
        out.push((
            Structure::DihedralTimesC2 { order: n },
            direct_product(&d, &cyclic(2).expect("C2")).expect("product"),
        ));
    }
    out
}

pub fn recognize_with_witness(g: &FiniteGroup) -> Recognition {
    let fp = fingerprint(g);
    for (structure, model) in models(g.order()) {
        if fingerprint(&model) != fp {
            continue;
        }
        if let Some(iso) = find_isomorphism_unchecked(&model, g) {
            return Recognition {
                structure,
                model: Some(model),
                isomorphism: Some(iso),
            };
        }
    }
    Recognition {
        structure: Structure::Other {
            order: g.order(),
            abelianization: g.order() / fp.derived,
        },
        model: None,
        isomorphism: None,
    }
}

/// Structure of `g`, backed by an explicit isomorphism from a model group.
pub fn recognize(g: &FiniteGroup) -> Structure {
    recognize_with_witness(g).structure
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{case3_group, extension_group_b, metacyclic};

    #[test]
    fn automorphism_counts() {
        assert_eq!(automorphism_search(&cyclic(12).unwrap(), &[]).len(), 4);
        assert_eq!(automorphism_search(&dihedral(8).unwrap(), &[]).len(), 8);
        // |Aut(D_2m)| = m φ(m)
        assert_eq!(automorphism_search(&dihedral(20).unwrap(), &[]).len(), 40);
    }

    #[test]
    fn case3_swap_automorphism() {
        let g = case3_group(5).unwrap();
        let a = g.gen("A").unwrap();
        let c = g.gen("C").unwrap();
        let img_a = g.mul(g.inv(a), g.inv(c));
        let found = automorphism_search(&g, &[Some(img_a), Some(g.inv(c))]);
        assert_eq!(found.len(), 1);
        let auto = &found[0];
        for e in g.elements() {
            assert_eq!(g.elem_order(auto.apply(e)), g.elem_order(e));
        }
    }

    #[test]
    fn recognition() {
        let c2 = cyclic(2).unwrap();
        let e8 = direct_product(&direct_product(&c2, &c2).unwrap(), &c2).unwrap();
        assert_eq!(
            recognize(&e8),
            Structure::ElementaryAbelian { prime: 2, rank: 3 }
        );
        let d = direct_product(&dihedral(12).unwrap(), &c2).unwrap();
        assert_eq!(recognize(&d), Structure::DihedralTimesC2 { order: 24 });
        assert_eq!(
            recognize(&cyclic(7).unwrap()),
            Structure::Cyclic { order: 7 }
        );
        let f20 = metacyclic(5, 4, 2, 0, ["c", "b"]).unwrap();
        assert_eq!(
            recognize(&f20),
            Structure::Other {
                order: 20,
                abelianization: 4
            }
        );
        for g in 2..=12u64 {
            let s = recognize(&extension_group_b(g).unwrap());
            if g % 2 == 0 {
                assert_eq!(
                    s,
                    Structure::Dihedral {
                        order: 8 * g as usize
                    }
                );
            } else {
                assert_eq!(
                    s,
                    Structure::DihedralTimesC2 {
                        order: 8 * g as usize
                    }
                );
            }
        }
    }

    #[test]
    fn witness_is_an_isomorphism() {
        let g = extension_group_b(3).unwrap();
        let r = recognize_with_witness(&g);
        let model = r.model.unwrap();
        let iso = r.isomorphism.unwrap();
        for a in model.elements() {
            for b in model.elements() {
                assert_eq!(iso[model.mul(a, b)], g.mul(iso[a], iso[b]));
            }
        }
    }
}
