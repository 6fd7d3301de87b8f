//! Smooth (surface-kernel) epimorphisms from genus-0 Fuchsian groups.
//!
//! An epimorphism `θ: Δ(m1, ..., mr) → G` is determined by the images of the
//! elliptic generators, a generating vector `(g1, ..., gr)` with
//! `g1 ⋯ gr = 1`, `|gi| = mi` and `⟨g1, ..., gr⟩ = G`. Two vectors give
//! topologically equivalent actions when they lie in one orbit of the braid
//! group and `Aut(G)`.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groups::{
    automorphism_search, case3_group, catalog, cyclic, metacyclic, semidirect, Elem, FiniteGroup,
};
use crate::signatures::{enumerate_4g_signatures, FamilyTag, Signature};

/// A smooth generating vector of a genus-0 signature.
#[derive(Clone)]
pub struct GeneratingVector {
    group: FiniteGroup,
    periods: Vec<u64>,
    elems: Vec<Elem>,
}

impl fmt::Debug for GeneratingVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GeneratingVector{:?}{}", self.periods, self)
    }
}

impl fmt::Display for GeneratingVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = self.elems.iter().map(|&e| self.group.label(e)).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl PartialEq for GeneratingVector {
    fn eq(&self, other: &Self) -> bool {
        self.periods == other.periods
            && self.elems == other.elems
            && self.group.order() == other.group.order()
    }
}

impl Eq for GeneratingVector {}

#[derive(Serialize)]
struct VectorView<'a> {
    periods: &'a [u64],
    elements: Vec<&'a str>,
    indices: &'a [Elem],
}

impl Serialize for GeneratingVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        VectorView {
            periods: &self.periods,
            elements: self.elems.iter().map(|&e| self.group.label(e)).collect(),
            indices: &self.elems,
        }
        .serialize(s)
    }
}

impl GeneratingVector {
    /// Checks product one, exact orders and generation.
    pub fn new(group: &FiniteGroup, periods: &[u64], elems: &[Elem]) -> Result<Self> {
        if periods.len() != elems.len() {
            return Err(Error::invariant("one element per period is required"));
        }
        if let Some(&e) = elems.iter().find(|&&e| e >= group.order()) {
            return Err(Error::IndexOutOfRange {
                index: e,
                len: group.order(),
            });
        }
        if group.product(elems.iter().copied()) != group.identity() {
            return Err(Error::invariant(
                "the product of the vector is not the identity",
            ));
        }
        for (i, (&e, &m)) in elems.iter().zip(periods).enumerate() {
            if group.elem_order(e) != m {
                return Err(Error::invariant(format!(
                    "entry {} has order {}, expected {m}",
                    i + 1,
                    group.elem_order(e)
                )));
            }
        }
        if group.subgroup_generated(elems).order() != group.order() {
            return Err(Error::invariant("the vector does not generate the group"));
        }
        Ok(Self::unchecked(group, periods, elems))
    }

    fn unchecked(group: &FiniteGroup, periods: &[u64], elems: &[Elem]) -> Self {
        GeneratingVector {
            group: group.clone(),
            periods: periods.to_vec(),
            elems: elems.to_vec(),
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn periods(&self) -> &[u64] {
        &self.periods
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elems
    }

    pub fn signature(&self) -> Signature {
        Signature::fuchsian(0, &self.periods).expect("periods of a smooth vector are at least 2")
    }

    /// Image under an automorphism given as a full element map.
    pub fn map(&self, auto: &[Elem]) -> GeneratingVector {
        let elems: Vec<Elem> = self.elems.iter().map(|&e| auto[e]).collect();
        Self::unchecked(&self.group, &self.periods, &elems)
    }
}

fn closure_size(g: &FiniteGroup, gens: &[Elem], seen: &mut [bool], stack: &mut Vec<Elem>) -> usize {
    seen.iter_mut().for_each(|s| *s = false);
    stack.clear();
    seen[g.identity()] = true;
    stack.push(g.identity());
    let mut count = 1;
    while let Some(a) = stack.pop() {
        for &s in gens {
            let b = g.mul(a, s);
            if !seen[b] {
                seen[b] = true;
                count += 1;
                stack.push(b);
            }
        }
    }
    count
}

/// Every smooth generating vector of `periods` in `g`, in lexicographic order
/// of element indices.
pub fn smooth_vectors(g: &FiniteGroup, periods: &[u64]) -> Vec<GeneratingVector> {
    let n = g.order() as u64;
    if periods.is_empty() || periods.iter().any(|&m| m == 0 || !n.is_multiple_of(m)) {
        return Vec::new();
    }
    let mut by_order: HashMap<u64, Vec<Elem>> = HashMap::new();
    for e in g.elements() {
        by_order.entry(g.elem_order(e)).or_default().push(e);
    }
    let slots: Vec<Vec<Elem>> = periods
        .iter()
        .map(|m| by_order.get(m).cloned().unwrap_or_default())
        .collect();
    let r = periods.len();
    let last_order = periods[r - 1];

    let search = |first: Option<Elem>| -> Vec<Vec<Elem>> {
        let mut out = Vec::new();
        let mut prefix: Vec<Elem> = first.into_iter().collect();
        let mut seen = vec![false; g.order()];
        let mut stack = Vec::new();
        #[allow(clippy::too_many_arguments)]
        fn go(
            g: &FiniteGroup,
            slots: &[Vec<Elem>],
            last_order: u64,
            prefix: &mut Vec<Elem>,
            acc: Elem,
            seen: &mut [bool],
            stack: &mut Vec<Elem>,
            out: &mut Vec<Vec<Elem>>,
        ) {
            let r = slots.len();
            if prefix.len() == r - 1 {
                let last = g.inv(acc);
                if g.elem_order(last) != last_order {
                    return;
                }
                if closure_size(g, prefix, seen, stack) != g.order() {
                    return;
                }
                let mut v = prefix.clone();
                v.push(last);
                out.push(v);
                return;
            }
            for &e in &slots[prefix.len()] {
                prefix.push(e);
                go(
                    g,
                    slots,
                    last_order,
                    prefix,
                    g.mul(acc, e),
                    seen,
                    stack,
                    out,
                );
                prefix.pop();
            }
        }
        let acc = g.product(prefix.iter().copied());
        go(
            g,
            &slots,
            last_order,
            &mut prefix,
            acc,
            &mut seen,
            &mut stack,
            &mut out,
        );
        out
    };

    let raw: Vec<Vec<Elem>> = if r == 1 {
        search(None)
    } else {
        let parts: Vec<Vec<Vec<Elem>>> = slots[0].par_iter().map(|&e| search(Some(e))).collect();
        parts.into_iter().flatten().collect()
    };
    raw.iter()
        .map(|v| GeneratingVector::unchecked(g, periods, v))
        .collect()
}

fn braid_raw(g: &FiniteGroup, v: &mut [Elem], periods: &mut [u64], i: usize, inverse: bool) {
    let (a, b) = (v[i], v[i + 1]);
    if inverse {
        v[i] = b;
        v[i + 1] = g.mul(g.mul(g.inv(b), a), b);
    } else {
        v[i] = g.conj(a, b);
        v[i + 1] = a;
    }
    periods.swap(i, i + 1);
}

/// The Hurwitz move at 1-based position `i`:
/// `(…, gi, gi+1, …) ↦ (…, gi gi+1 gi⁻¹, gi, …)`.
pub fn braid_move(v: &GeneratingVector, i: usize) -> Result<GeneratingVector> {
    let r = v.elems.len();
    if i == 0 || i >= r {
        return Err(Error::IndexOutOfRange { index: i, len: r });
    }
    let mut elems = v.elems.clone();
    let mut periods = v.periods.clone();
    braid_raw(&v.group, &mut elems, &mut periods, i - 1, false);
    Ok(GeneratingVector::unchecked(&v.group, &periods, &elems))
}

/// All vectors, across every ordering of the periods, reachable from `start`
/// by Hurwitz moves and their inverses.
fn braid_orbit(g: &FiniteGroup, start: &[Elem], periods: &[u64]) -> Vec<(Vec<Elem>, Vec<u64>)> {
    let mut seen: HashMap<Vec<Elem>, usize> = HashMap::new();
    let mut nodes = vec![(start.to_vec(), periods.to_vec())];
    seen.insert(start.to_vec(), 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(idx) = queue.pop_front() {
        for i in 0..start.len().saturating_sub(1) {
            for inverse in [false, true] {
                let (mut v, mut p) = nodes[idx].clone();
                braid_raw(g, &mut v, &mut p, i, inverse);
                if !seen.contains_key(&v) {
                    seen.insert(v.clone(), nodes.len());
                    queue.push_back(nodes.len());
                    nodes.push((v, p));
                }
            }
        }
    }
    nodes
}

/// A topological class of actions.
#[derive(Debug, Clone, Serialize)]
pub struct ActionClass {
    /// Lexicographically minimal member with the requested period order.
    pub representative: GeneratingVector,
    /// Number of smooth vectors (requested period order) in the class.
    pub size: usize,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, mut a: usize) -> usize {
        while self.0[a] != a {
            self.0[a] = self.0[self.0[a]];
            a = self.0[a];
        }
        a
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.0[hi] = lo;
        }
    }
}

/// Orbits of the smooth vectors of `periods` under braid moves (in every
/// period ordering) and `Aut(G)`, sorted by representative.
pub fn classify(g: &FiniteGroup, periods: &[u64]) -> Vec<ActionClass> {
    let vectors = smooth_vectors(g, periods);
    if vectors.is_empty() {
        return Vec::new();
    }
    let index: HashMap<&[Elem], usize> = vectors
        .iter()
        .enumerate()
        .map(|(i, v)| (v.elems.as_slice(), i))
        .collect();
    let mut uf = UnionFind((0..vectors.len()).collect());
    let mut done = vec![false; vectors.len()];
    let mut orbit_reps = Vec::new();
    for i in 0..vectors.len() {
        if done[i] {
            continue;
        }
        orbit_reps.push(i);
        for (v, p) in braid_orbit(g, &vectors[i].elems, periods) {
            if p == periods {
                let j = index[v.as_slice()];
                done[j] = true;
                uf.union(i, j);
            }
        }
    }
    if orbit_reps.len() > 1 {
        let autos = automorphism_search(g, &[]);
        for &i in &orbit_reps {
            for a in &autos {
                let image: Vec<Elem> = vectors[i].elems.iter().map(|&e| a.map[e]).collect();
                if let Some(&j) = index.get(image.as_slice()) {
                    uf.union(i, j);
                }
            }
        }
    }
    let mut sizes: HashMap<usize, usize> = HashMap::new();
    for i in 0..vectors.len() {
        *sizes.entry(uf.find(i)).or_default() += 1;
    }
    // Roots are minimal indices, and indices follow lexicographic order.
    let mut roots: Vec<usize> = sizes.keys().copied().collect();
    roots.sort_unstable();
    roots
        .into_iter()
        .map(|r| ActionClass {
            representative: vectors[r].clone(),
            size: sizes[&r],
        })
        .collect()
}

/// Whether two smooth vectors over the same group define equivalent actions.
pub fn equivalent(a: &GeneratingVector, b: &GeneratingVector) -> bool {
    let g = &a.group;
    if g.order() != b.group.order() {
        return false;
    }
    let mut pa = a.periods.clone();
    let mut pb = b.periods.clone();
    pa.sort_unstable();
    pb.sort_unstable();
    if pa != pb {
        return false;
    }
    let orbit: HashMap<Vec<Elem>, ()> = braid_orbit(g, &a.elems, &a.periods)
        .into_iter()
        .map(|(v, _)| (v, ()))
        .collect();
    if orbit.contains_key(&b.elems) {
        return true;
    }
    automorphism_search(g, &[])
        .iter()
        .any(|auto| orbit.contains_key(&b.map(&auto.map).elems))
}

/// Genus of the surface `ℍ / ker θ` from `2g − 2 = |G| · area`.
pub fn kernel_genus(group_order: u64, s: &Signature) -> Result<u64> {
    let total = s.normalized_area()? * BigInt::from(group_order);
    let bad = || Error::NonIntegralGenus(total.to_string());
    if !total.is_integer() {
        return Err(bad());
    }
    let two_g = total.to_integer().to_i64().ok_or_else(bad)? + 2;
    if two_g < 0 || two_g % 2 != 0 {
        return Err(bad());
    }
    Ok(two_g as u64 / 2)
}

/// Outcome for one signature family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// Every action extends to a strictly larger group: not the full group.
    NotFull,
    /// No smooth action exists.
    NoAction,
}

#[derive(Debug, Clone, Serialize)]
pub struct Family1Report {
    pub signature: Signature,
    /// Classes of `[2, 4g, 4g]` actions over `C_{4g}`.
    pub cyclic_classes: usize,
    /// Groups of order `4g` (from the catalog) with a smooth vector; only the
    /// cyclic group may appear.
    pub groups_with_actions: Vec<String>,
    pub extension_order: usize,
    pub extension_vector: GeneratingVector,
    /// The index-2 restriction, a `[2, 4g, 4g]` vector in `⟨C⟩`.
    pub restriction: Vec<String>,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Serialize)]
pub struct Family2Report {
    pub signature: Signature,
    pub divisible: bool,
    pub groups_checked: usize,
    pub smooth_vectors: usize,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Serialize)]
pub struct Family3Report {
    pub signature: Signature,
    /// `t` with `A C A⁻¹ = C^t` allowed by `θ(x2)⁴ = 1`.
    pub t_candidates: Vec<u64>,
    /// Rejected candidates with the reason.
    pub rejected: Vec<(u64, String)>,
    pub swap_automorphism: bool,
    pub extension_order: usize,
    pub extension_vector: Option<GeneratingVector>,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Serialize)]
pub struct CaseReport {
    pub genus: u64,
    pub family1: Family1Report,
    pub family2: Family2Report,
    pub family3: Family3Report,
}

/// Re-derives why families 1-3 never carry a full action of order `4g`.
/// Catalog sweeps are skipped above `max_order`.
pub fn eliminate_cases(g: u64, max_order: usize) -> Result<CaseReport> {
    if g < 2 {
        return Err(Error::InconsistentParameters(format!(
            "genus must be at least 2, got {g}"
        )));
    }
    let n = 4 * g;
    let groups = if (n as usize) <= max_order {
        catalog(n as usize)?.groups
    } else {
        Vec::new()
    };
    Ok(CaseReport {
        genus: g,
        family1: family1(g, &groups)?,
        family2: family2(g, &groups)?,
        family3: family3(g)?,
    })
}

fn family1(g: u64, groups: &[FiniteGroup]) -> Result<Family1Report> {
    let n = 4 * g;
    let periods = [2, n, n];
    let cyclic_classes = classify(&cyclic(n)?, &periods).len();
    let groups_with_actions = groups
        .iter()
        .filter(|h| !smooth_vectors(h, &periods).is_empty())
        .map(|h| h.tag().to_string())
        .collect();

    // G' = ⟨B, C | C^{4g}, B² = C^{2g}, B⁻¹ C B = C^{2g−1}⟩
    let ext = metacyclic(n, 2, 2 * g as i64 - 1, 2 * g as i64, ["C", "B"])?;
    let c = ext.gen("C").expect("C");
    let b = ext.gen("B").expect("B");
    let first = ext.mul(ext.inv(c), ext.inv(b));
    let vector = GeneratingVector::new(&ext, &[2, 4, n], &[first, b, c])?;
    let restricted = [ext.pow(b, 2), ext.mul(ext.mul(ext.inv(b), c), b), c];
    let sub = ext.subgroup_generated(&[c]);
    let (c_group, embed) = ext.subgroup_as_group(&sub, &["C"], &[c])?;
    let local: Vec<Elem> = restricted
        .iter()
        .map(|e| {
            embed
                .binary_search(e)
                .map_err(|_| Error::invariant("restriction leaves ⟨C⟩"))
        })
        .collect::<Result<_>>()?;
    GeneratingVector::new(&c_group, &periods, &local)?;
    Ok(Family1Report {
        signature: Signature::fuchsian(0, &periods)?,
        cyclic_classes,
        groups_with_actions,
        extension_order: ext.order(),
        extension_vector: vector,
        restriction: restricted
            .iter()
            .map(|&e| ext.label(e).to_string())
            .collect(),
        verdict: Verdict::NotFull,
    })
}

fn family2(g: u64, groups: &[FiniteGroup]) -> Result<Family2Report> {
    let n = 4 * g;
    let mut periods = vec![3, 6, 2 * g];
    periods.sort_unstable();
    let divisible = n.is_multiple_of(3);
    let mut checked = 0;
    let mut found = 0;
    // Every admissible G has the cyclic index-2 subgroup ⟨θ(x3)⟩.
    let m = 2 * g;
    for t in 0..m as i64 {
        for u in 0..m as i64 {
            if let Ok(h) = metacyclic(m, 2, t, u, ["C", "A"]) {
                checked += 1;
                found += smooth_vectors(&h, &periods).len();
            }
        }
    }
    for h in groups {
        checked += 1;
        found += smooth_vectors(h, &periods).len();
    }
    if found != 0 {
        return Err(Error::invariant(format!(
            "found {found} smooth [3,6,2g] vectors in order {n}"
        )));
    }
    Ok(Family2Report {
        signature: Signature::fuchsian(0, &periods)?,
        divisible,
        groups_checked: checked,
        smooth_vectors: found,
        verdict: Verdict::NoAction,
    })
}

fn family3(g: u64) -> Result<Family3Report> {
    let m = 2 * g;
    let periods = [4, 4, m];
    let mut t_candidates = Vec::new();
    let mut rejected = Vec::new();
    // A ∉ ⟨C⟩ has order 4, so A² = C^g; B = A⁻¹ C⁻¹ must have order 4.
    for t in 1..m {
        match metacyclic(m, 2, t as i64, g as i64, ["C", "A"]) {
            Ok(h) => {
                let a = h.gen("A").expect("A");
                let c = h.gen("C").expect("C");
                let b = h.mul(h.inv(a), h.inv(c));
                if h.pow(b, 4) != h.identity() {
                    continue;
                }
                t_candidates.push(t);
                if h.elem_order(b) != 4 {
                    rejected.push((t, format!("A⁻¹C⁻¹ has order {}, not 4", h.elem_order(b))));
                }
            }
            Err(_) => {
                if (2 * (t + 1)) % m == 0 {
                    t_candidates.push(t);
                    rejected.push((
                        t,
                        "no consistent group: t is not a unit or A² = C^g is not central".into(),
                    ));
                }
            }
        }
    }
    let grp = case3_group(g)?;
    let a = grp.gen("A").expect("A");
    let c = grp.gen("C").expect("C");
    let b = grp.mul(grp.inv(a), grp.inv(c));
    GeneratingVector::new(&grp, &periods, &[a, b, c])?;
    let swaps = automorphism_search(&grp, &[Some(b), Some(grp.inv(c))]);
    let swap_automorphism = !swaps.is_empty();
    let (extension_order, extension_vector) = match swaps.first() {
        Some(alpha) => {
            let ext = semidirect(&grp, &alpha.map, 2, "E")?;
            let d = ext.gen("E").expect("E");
            let third = ext.mul(d, ext.inv(a));
            let v = GeneratingVector::new(&ext, &[2, 4, 2 * m], &[d, b, third])?;
            (ext.order(), Some(v))
        }
        None => (0, None),
    };
    if !swap_automorphism {
        return Err(Error::invariant(
            "the Case-3 group has no swap automorphism",
        ));
    }
    Ok(Family3Report {
        signature: Signature::fuchsian(0, &periods)?,
        t_candidates,
        rejected,
        swap_automorphism,
        extension_order,
        extension_vector,
        verdict: Verdict::NotFull,
    })
}

/// A candidate exceptional action.
#[derive(Debug, Clone, Serialize)]
pub struct ExceptionalCandidate {
    pub signature: Signature,
    pub tag: FamilyTag,
    /// Position of the group in the supplied list.
    pub group_index: usize,
    pub group: String,
    pub class: ActionClass,
}

/// Action classes on sporadic and quadruple signatures over the given groups,
/// all of which must have order `4g`. Fullness is not decided.
pub fn exceptional_search(g: u64, groups: &[FiniteGroup]) -> Result<Vec<ExceptionalCandidate>> {
    let n = (4 * g) as usize;
    if let Some(h) = groups.iter().find(|h| h.order() != n) {
        return Err(Error::WrongOrder {
            expected: n,
            found: h.order(),
        });
    }
    let mut out = Vec::new();
    for ts in enumerate_4g_signatures(g) {
        if !matches!(
            ts.tag,
            FamilyTag::Sporadic | FamilyTag::QuadrupleExceptional
        ) {
            continue;
        }
        let periods = ts.signature.finite_periods().expect("finite periods");
        for (i, h) in groups.iter().enumerate() {
            for class in classify(h, &periods) {
                out.push(ExceptionalCandidate {
                    signature: ts.signature.clone(),
                    tag: ts.tag,
                    group_index: i,
                    group: h.tag().to_string(),
                    class,
                });
            }
        }
    }
    Ok(out)
}

/// The canonical vector `(A, D^{g+1} A, D^g, D)` in `D₂g = dihedral(4g)`.
pub fn canonical_vector(g: u64) -> Result<GeneratingVector> {
    let d2g = crate::groups::dihedral(4 * g)?;
    let a = d2g.gen("A").expect("A");
    let d = d2g.gen("D").expect("D");
    let elems = [
        a,
        d2g.mul(d2g.pow(d, g as i64 + 1), a),
        d2g.pow(d, g as i64),
        d,
    ];
    GeneratingVector::new(&d2g, &[2, 2, 2, 2 * g], &elems)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::dihedral;
    use crate::signatures::parse_signature;

    #[test]
    fn canonical_vector_g2() {
        let d = dihedral(8).unwrap();
        let vs = smooth_vectors(&d, &[2, 2, 2, 4]);
        let canon = canonical_vector(2).unwrap();
        assert!(vs.contains(&canon));
        assert_eq!(canon.to_string(), "(A, D^3 A, D^2, D)");
    }

    #[test]
    fn cyclic_triple() {
        let c = cyclic(12).unwrap();
        let a = c.generators()[0];
        let want = [c.pow(a, 4), c.pow(a, 3), c.pow(a, 5)];
        let vs = smooth_vectors(&c, &[3, 4, 12]);
        assert!(vs.iter().any(|v| v.elements() == want));
    }

    #[test]
    fn braid_move_example() {
        let v = canonical_vector(2).unwrap();
        let w = braid_move(&v, 3).unwrap();
        assert_eq!(w.to_string(), "(A, D^3 A, D, D^2)");
        assert_eq!(w.periods(), &[2, 2, 4, 2]);
        assert!(braid_move(&v, 4).is_err());
        assert!(braid_move(&v, 0).is_err());
    }

    #[test]
    fn non_divisor_gives_nothing() {
        assert!(smooth_vectors(&dihedral(8).unwrap(), &[3, 3, 4]).is_empty());
        assert!(classify(&dihedral(8).unwrap(), &[2, 2, 2, 3]).is_empty());
    }

    #[test]
    fn kernel_genera() {
        let s = |t: &str| parse_signature(t).unwrap();
        assert_eq!(kernel_genus(8, &s("(0;+;[2,2,2,4];{-})")).unwrap(), 2);
        assert_eq!(kernel_genus(12, &s("(0;+;[3,4,12];{-})")).unwrap(), 3);
        assert_eq!(kernel_genus(16, &s("(0;+;[2,4,8];{-})")).unwrap(), 2);
        assert!(matches!(
            kernel_genus(5, &s("(0;+;[2,2,2,4];{-})")),
            Err(Error::NonIntegralGenus(_))
        ));
    }

    #[test]
    fn family1_unique_on_cyclic() {
        for g in [2, 4, 5] {
            assert_eq!(
                classify(&cyclic(4 * g).unwrap(), &[2, 4 * g, 4 * g]).len(),
                1
            );
        }
    }

    #[test]
    fn case_eliminations_g5() {
        let r = eliminate_cases(5, 64).unwrap();
        assert_eq!(r.family1.extension_order, 40);
        assert_eq!(r.family1.verdict, Verdict::NotFull);
        assert_eq!(r.family1.groups_with_actions.len(), 1);
        assert_eq!(r.family2.smooth_vectors, 0);
        assert_eq!(r.family3.t_candidates, vec![4, 9]);
        assert_eq!(r.family3.rejected.len(), 1);
        assert!(r.family3.swap_automorphism);
        assert_eq!(r.family3.extension_order, 40);
    }

    #[test]
    fn family2_when_divisible() {
        let r = eliminate_cases(3, 0).unwrap();
        assert!(r.family2.divisible);
        assert_eq!(r.family2.smooth_vectors, 0);
        assert!(r.family2.groups_checked > 0);
    }

    #[test]
    fn wrong_order_is_rejected() {
        let err = exceptional_search(3, &[cyclic(10).unwrap()]).unwrap_err();
        assert_eq!(
            err,
            Error::WrongOrder {
                expected: 12,
                found: 10
            }
        );
    }
}
