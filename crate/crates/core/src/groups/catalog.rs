//! Built-in groups of a given order, deduplicated up to isomorphism.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::{Mutex, OnceLock};

use super::iso::{automorphisms_bounded, find_isomorphism_unchecked, fingerprint, Fingerprint};
use super::{
    alternating, cyclic, direct_product, gl2, metacyclic, semidirect, sl2, symmetric, Elem,
    FiniteGroup, Tag,
};
use crate::error::{Error, Result};

/// Number of isomorphism types of groups of order `n` for `n ≤ 128`.
const GROUP_COUNTS: [usize; 129] = [
    0, 1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15, 2, 2, 5, 4, 1, 4,
    1, 51, 1, 2, 1, 14, 1, 2, 2, 14, 1, 6, 1, 4, 2, 2, 1, 52, 2, 5, 1, 5, 1, 15, 2, 13, 2, 2, 1,
    13, 1, 2, 4, 267, 1, 4, 1, 5, 1, 4, 1, 50, 1, 2, 3, 4, 1, 6, 1, 52, 15, 2, 1, 15, 1, 2, 1, 12,
    1, 10, 1, 4, 2, 2, 1, 231, 1, 5, 2, 16, 1, 4, 1, 14, 2, 2, 1, 45, 1, 6, 2, 43, 1, 6, 1, 5, 4,
    2, 1, 47, 2, 2, 1, 4, 5, 16, 1, 2328,
];

pub fn known_group_count(n: usize) -> Option<usize> {
    GROUP_COUNTS.get(n).copied().filter(|&c| c > 0)
}

/// Pairwise non-isomorphic groups of one order.
#[derive(Debug, Clone)]
pub struct Catalog {
    pub order: usize,
    pub groups: Vec<FiniteGroup>,
    /// Number of isomorphism types of this order, when tabulated.
    pub known_count: Option<usize>,
}

impl Catalog {
    /// Whether every isomorphism type of this order is present.
    pub fn is_complete(&self) -> bool {
        self.known_count == Some(self.groups.len())
    }
}

/// Largest order the catalog will build.
pub const CATALOG_LIMIT: usize = 512;

fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

fn candidates(n: usize) -> Result<Vec<FiniteGroup>> {
    let mut out = vec![cyclic(n as u64)?];
    for m in divisors(n) {
        let k = n / m;
        if k < 2 {
            continue;
        }
        for t in 0..m as i64 {
            for u in 0..m as i64 {
                if let Ok(g) = metacyclic(m as u64, k as u64, t, u, ["c", "b"]) {
                    out.push(g);
                }
            }
        }
    }
    if n.is_multiple_of(2) && n > 2 {
        let c2 = cyclic(2)?;
        for h in catalog(n / 2)?.groups {
            out.push(direct_product(&h, &c2)?);
        }
    }
    for p in (2..n).filter(|&p| n.is_multiple_of(p)) {
        for h in catalog(n / p)?.groups {
            for alpha in split_actions(&h, p) {
                out.push(semidirect(&h, &alpha, p, "s")?);
            }
        }
    }
    type Special = (usize, fn() -> Result<FiniteGroup>);
    let special: [Special; 7] = [
        (12, || alternating(4)),
        (24, || symmetric(4)),
        (24, || sl2(3)),
        (48, || gl2(3)),
        (60, || alternating(5)),
        (120, || symmetric(5)),
        (120, || sl2(5)),
    ];
    for (order, make) in special {
        if order == n {
            out.push(make()?);
        }
    }
    Ok(out)
}

/// Automorphism groups larger than this are not used for split extensions.
const AUT_LIMIT: usize = 25_000;

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn compose(a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    // a after b
    b.iter().map(|&x| a[x]).collect()
}

fn inverse(a: &[Elem]) -> Vec<Elem> {
    let mut inv = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

/// Automorphisms `α` of `h` with `α^p = 1`, one per class under conjugation
/// in `Aut(h)` and replacement by a coprime power; these give every split
/// extension `h ⋊ C_p` up to isomorphism.
fn split_actions(h: &FiniteGroup, p: usize) -> Vec<Vec<Elem>> {
    let Some(autos) = automorphisms_bounded(h, AUT_LIMIT) else {
        return Vec::new();
    };
    let maps: Vec<Vec<Elem>> = autos.into_iter().map(|a| a.map).collect();
    let id: Vec<Elem> = h.elements().collect();
    let pow = |a: &[Elem], k: usize| (0..k).fold(id.clone(), |acc, _| compose(a, &acc));
    let candidates: Vec<&Vec<Elem>> = maps.iter().filter(|a| pow(a, p) == id).collect();
    let index: HashMap<&[Elem], usize> = candidates
        .iter()
        .enumerate()
        .map(|(i, a)| (a.as_slice(), i))
        .collect();

    // generators of Aut(h), greedily
    let mut closure: HashSet<Vec<Elem>> = HashSet::from([id.clone()]);
    let mut gens: Vec<&Vec<Elem>> = Vec::new();
    for a in &maps {
        if closure.contains(a) {
            continue;
        }
        gens.push(a);
        let mut frontier: Vec<Vec<Elem>> = closure.iter().cloned().collect();
        while let Some(x) = frontier.pop() {
            for g in &gens {
                let y = compose(g, &x);
                if closure.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
    }

    let mut seen = vec![false; candidates.len()];
    let mut out = Vec::new();
    for start in 0..candidates.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        out.push(candidates[start].clone());
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            let a = candidates[i];
            let mut next: Vec<Vec<Elem>> = (2..p)
                .filter(|&k| gcd(k, p) == 1)
                .map(|k| pow(a, k))
                .collect();
            next.extend(gens.iter().map(|g| compose(&compose(g, a), &inverse(g))));
            for b in next {
                if let Some(&j) = index.get(b.as_slice()) {
                    if !std::mem::replace(&mut seen[j], true) {
                        stack.push(j);
                    }
                }
            }
        }
    }
    out
}

fn cache() -> &'static Mutex<HashMap<usize, Catalog>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Catalog>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Built-in groups of order `n`: all metacyclic presentations, `C₂ × H` for
/// every catalogued `H` of order `n/2`, and a few named groups (`A₄`, `S₄`,
/// `SL(2,3)`, `GL(2,3)`, `A₅`, `S₅`, `SL(2,5)`). Duplicates are removed by
/// explicit isomorphism search, so the result is exact but not always
/// complete; see [`Catalog::is_complete`].
pub fn catalog(n: usize) -> Result<Catalog> {
    if n == 0 || n > CATALOG_LIMIT {
        return Err(Error::OrderCap {
            order: n,
            cap: CATALOG_LIMIT,
        });
    }
    if let Some(c) = cache().lock().expect("catalog cache").get(&n) {
        return Ok(c.clone());
    }
    let c = build_catalog(n)?;
    cache().lock().expect("catalog cache").insert(n, c.clone());
    Ok(c)
}

fn build_catalog(n: usize) -> Result<Catalog> {
    let mut buckets: BTreeMap<Fingerprint, Vec<usize>> = BTreeMap::new();
    let mut groups: Vec<FiniteGroup> = Vec::new();
    for g in candidates(n)? {
        let fp = fingerprint(&g);
        let bucket = buckets.entry(fp).or_default();
        if bucket
            .iter()
            .any(|&i| find_isomorphism_unchecked(&groups[i], &g).is_some())
        {
            continue;
        }
        bucket.push(groups.len());
        groups.push(g);
    }
    // Cyclic first, then by construction order; tags make output readable.
    let groups = groups
        .into_iter()
        .map(|g| match g.tag() {
            Tag::Metacyclic { k: 1, .. } => g.retagged(Tag::Cyclic(n)),
            _ => g,
        })
        .collect();
    Ok(Catalog {
        order: n,
        groups,
        known_count: known_group_count(n),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders_are_complete() {
        for n in [1, 2, 4, 6, 8, 12, 16, 20, 24] {
            let c = catalog(n).unwrap();
            assert!(c.is_complete(), "order {n}: {} groups", c.groups.len());
        }
    }

    #[test]
    fn order_twenty() {
        assert_eq!(catalog(20).unwrap().groups.len(), 5);
    }
}
