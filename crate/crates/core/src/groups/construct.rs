use std::collections::HashMap;
use std::hash::Hash;

use super::{homomorphism_from_images, Builder, Elem, FiniteGroup, Tag};
use crate::error::{Error, Result};

fn power_label(name: &str, e: u64) -> Option<String> {
    match e {
        0 => None,
        1 => Some(name.to_string()),
        _ => Some(format!("{name}^{e}")),
    }
}

fn join_labels(parts: impl IntoIterator<Item = Option<String>>) -> String {
    let parts: Vec<String> = parts.into_iter().flatten().filter(|p| p != "1").collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

fn mod_pow(base: u64, exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    let mut b = base % m;
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

/// `⟨c, b | c^m = 1, b^k = c^u, b c b⁻¹ = c^t⟩`, of order `m k`.
///
/// Elements are `c^i b^j` with `0 ≤ i < m`, `0 ≤ j < k`, stored at index
/// `i + m j`. Consistent iff `t^k ≡ 1` and `u (t - 1) ≡ 0 (mod m)`.
pub fn metacyclic(m: u64, k: u64, t: i64, u: i64, names: [&str; 2]) -> Result<FiniteGroup> {
    if m == 0 || k == 0 {
        return Err(Error::InconsistentParameters(
            "m and k must be positive".into(),
        ));
    }
    let t = t.rem_euclid(m as i64) as u64;
    let u = u.rem_euclid(m as i64) as u64;
    if mod_pow(t, k, m) != 1 % m {
        return Err(Error::InconsistentParameters(format!(
            "{t}^{k} is not 1 mod {m}"
        )));
    }
    if !(u as u128 * ((t + m - 1) % m) as u128).is_multiple_of(m as u128) {
        return Err(Error::InconsistentParameters(format!(
            "b^{k} = c^{u} is not central: {u}*({t}-1) is not 0 mod {m}"
        )));
    }
    let n = (m * k) as usize;
    let tpow: Vec<u64> = (0..k).map(|j| mod_pow(t, j, m)).collect();
    let mul = move |a: Elem, b: Elem| -> Elem {
        let (i, j) = (a as u64 % m, a as u64 / m);
        let (l, jj) = (b as u64 % m, b as u64 / m);
        let carry = if j + jj >= k { u } else { 0 };
        let ci = (i + l * tpow[j as usize] + carry) % m;
        (ci + m * ((j + jj) % k)) as usize
    };
    let mut gens = Vec::new();
    let mut gnames = Vec::new();
    if m > 1 {
        gens.push(1);
        gnames.push(names[0].to_string());
    }
    if k > 1 {
        gens.push(m as usize);
        gnames.push(names[1].to_string());
    }
    let labels = (0..n as u64)
        .map(|e| join_labels([power_label(names[0], e % m), power_label(names[1], e / m)]))
        .collect();
    Builder::new(n, mul, Tag::Metacyclic { m, k, t, u })
        .generators(gens, gnames)
        .labels(labels)
        .build()
}

pub fn cyclic(n: u64) -> Result<FiniteGroup> {
    cyclic_named(n, "a")
}

pub(crate) fn cyclic_named(n: u64, name: &str) -> Result<FiniteGroup> {
    Ok(metacyclic(n, 1, 1, 0, [name, "_"])?.retagged(Tag::Cyclic(n as usize)))
}

/// Dihedral group of the given order, `D^i A^j` with rotation `D` and
/// reflection `A`.
pub fn dihedral(order: u64) -> Result<FiniteGroup> {
    dihedral_named(order, "D", "A")
}

pub fn dihedral_named(order: u64, rotation: &str, reflection: &str) -> Result<FiniteGroup> {
    if order < 2 || !order.is_multiple_of(2) {
        return Err(Error::InconsistentParameters(format!(
            "a dihedral group has even order, got {order}"
        )));
    }
    let m = order / 2;
    Ok(metacyclic(m, 2, -1, 0, [rotation, reflection])?.retagged(Tag::Dihedral(order as usize)))
}

/// `C_n ⋊ C_k` with `b c b⁻¹ = c^t`.
pub fn semidirect_cyclic(n: u64, k: u64, t: i64) -> Result<FiniteGroup> {
    metacyclic(n, k, t, 0, ["c", "b"])
}

/// `⟨A, C | A⁴ = C^{2g} = 1, A C A⁻¹ = C⁻¹, A² = C^g⟩`, of order `4g`.
pub fn case3_group(g: u64) -> Result<FiniteGroup> {
    let grp = metacyclic(2 * g, 2, -1, g as i64, ["C", "A"])?;
    let (c, a) = (grp.generators()[0], grp.generators()[1]);
    grp.with_generators_keep_labels(&["A", "C"], &[a, c])
}

pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup> {
    let (ng, nh) = (g.order(), h.order());
    let (g2, h2) = (g.clone(), h.clone());
    let mul =
        move |a: Elem, b: Elem| -> Elem { g2.mul(a / nh, b / nh) * nh + h2.mul(a % nh, b % nh) };
    let mut gens: Vec<Elem> = g
        .generators()
        .iter()
        .map(|&x| x * nh + h.identity())
        .collect();
    let mut names: Vec<String> = g.generator_names().to_vec();
    for (&y, name) in h.generators().iter().zip(h.generator_names()) {
        gens.push(g.identity() * nh + y);
        let mut name = name.clone();
        while names.contains(&name) {
            name.push('\'');
        }
        names.push(name);
    }
    let labels = (0..ng * nh)
        .map(|e| {
            join_labels([
                Some(g.label(e / nh).to_string()),
                Some(h.label(e % nh).to_string()),
            ])
        })
        .collect();
    Builder::new(
        ng * nh,
        mul,
        Tag::DirectProduct(Box::new(g.tag().clone()), Box::new(h.tag().clone())),
    )
    .generators(gens, names)
    .labels(labels)
    .build()
}

/// `H ⋊ C_k` where the new generator (named `name`) acts by the automorphism
/// `alpha`, given as the image of every element of `H`; `alpha^k` must be the
/// identity.
pub fn semidirect(h: &FiniteGroup, alpha: &[Elem], k: usize, name: &str) -> Result<FiniteGroup> {
    let n = h.order();
    if alpha.len() != n || k == 0 {
        return Err(Error::InconsistentParameters(
            "automorphism must map every element".into(),
        ));
    }
    let mut hit = vec![false; n];
    for &a in alpha {
        if a >= n || std::mem::replace(&mut hit[a], true) {
            return Err(Error::InconsistentParameters(
                "map is not a bijection".into(),
            ));
        }
    }
    for a in h.elements() {
        for &s in h.generators() {
            if alpha[h.mul(a, s)] != h.mul(alpha[a], alpha[s]) {
                return Err(Error::InconsistentParameters(
                    "map is not a homomorphism".into(),
                ));
            }
        }
    }
    let mut powers: Vec<Vec<Elem>> = vec![h.elements().collect()];
    for j in 1..=k {
        let prev = &powers[j - 1];
        powers.push(prev.iter().map(|&e| alpha[e]).collect());
    }
    if powers[k].iter().enumerate().any(|(i, &e)| i != e) {
        return Err(Error::InconsistentParameters(format!(
            "automorphism order does not divide {k}"
        )));
    }
    powers.truncate(k);
    let h2 = h.clone();
    let mul = move |a: Elem, b: Elem| -> Elem {
        let (h1, j1) = (a % n, a / n);
        let (hb, j2) = (b % n, b / n);
        h2.mul(h1, powers[j1][hb]) + n * ((j1 + j2) % k)
    };
    let mut gens: Vec<Elem> = h.generators().to_vec();
    let mut names: Vec<String> = h.generator_names().to_vec();
    gens.push(h.identity() + n);
    names.push(name.to_string());
    let labels = (0..n * k)
        .map(|e| {
            join_labels([
                Some(h.label(e % n).to_string()),
                power_label(name, (e / n) as u64),
            ])
        })
        .collect();
    Builder::new(n * k, mul, Tag::Semidirect(Box::new(h.tag().clone()), k))
        .generators(gens, names)
        .labels(labels)
        .build()
}

/// `D₂g × C₂ = ⟨x, w⟩ × ⟨y⟩` with `D = wx` of order `2g`, every generator a
/// reflection image (orientation `-1`).
pub fn extension_group_a(g: u64) -> Result<FiniteGroup> {
    check_genus(g)?;
    let d = dihedral_named(4 * g, "(wx)", "w")?;
    let p = direct_product(&d, &cyclic_named(2, "y")?)?;
    let wx = p.gen("(wx)").expect("rotation");
    let w = p.gen("w").expect("reflection");
    let y = p.gen("y").expect("central involution");
    let x = p.mul(w, wx);
    p.with_generators_keep_labels(&["x", "w", "y"], &[x, w, y])?
        .with_orientation(&[-1, -1, -1])
}

/// `D₂g ⋊_φ C₂` with `D₂g = ⟨z, w⟩`, `x z x = (zw)^{g-1} z` and
/// `x w x = (zw)^g z`. Orientation: `z`, `w` reverse, `x` preserves.
pub fn extension_group_b(g: u64) -> Result<FiniteGroup> {
    check_genus(g)?;
    let d2g = dihedral_named(4 * g, "(zw)", "z")?;
    let rot = d2g.gen("(zw)").expect("rotation");
    let z = d2g.gen("z").expect("reflection");
    // φ(zw) = φ(z) φ(w) = (zw)^{g-1} z (zw)^g z = (zw)^{-1}
    let images = [d2g.inv(rot), d2g.mul(d2g.pow(rot, g as i64 - 1), z)];
    let alpha = homomorphism_from_images(&d2g, &d2g, &images)
        .ok_or_else(|| Error::invariant("φ does not extend to D₂g"))?;
    let grp = semidirect(&d2g, &alpha, 2, "x")?;
    let z = grp.gen("z").expect("z");
    let x = grp.gen("x").expect("x");
    let w = grp.mul(z, grp.gen("(zw)").expect("zw"));
    grp.with_generators_keep_labels(&["x", "z", "w"], &[x, z, w])?
        .with_orientation(&[1, -1, -1])
}

fn check_genus(g: u64) -> Result<()> {
    if g < 2 {
        return Err(Error::InconsistentParameters(format!(
            "genus must be at least 2, got {g}"
        )));
    }
    Ok(())
}

/// Closes `gens` under `mul` and builds the group on the resulting elements,
/// identity first.
pub(crate) fn closure_group<T, F>(
    identity: T,
    gens: Vec<T>,
    names: Vec<String>,
    mul: F,
    tag: Tag,
) -> Result<FiniteGroup>
where
    T: Clone + Eq + Hash,
    F: Fn(&T, &T) -> T,
{
    let mut index: HashMap<T, usize> = HashMap::new();
    let mut elems = vec![identity.clone()];
    index.insert(identity, 0);
    let mut i = 0;
    while i < elems.len() {
        for g in &gens {
            let p = mul(&elems[i], g);
            if !index.contains_key(&p) {
                if elems.len() >= super::TABLE_LIMIT {
                    return Err(Error::OrderCap {
                        order: elems.len() + 1,
                        cap: super::TABLE_LIMIT,
                    });
                }
                index.insert(p.clone(), elems.len());
                elems.push(p);
            }
        }
        i += 1;
    }
    let n = elems.len();
    let mut table = Vec::with_capacity(n * n);
    for a in &elems {
        for b in &elems {
            table.push(index[&mul(a, b)] as u32);
        }
    }
    let gen_idx = gens.iter().map(|g| index[g]).collect();
    Builder::new(n, move |a, b| table[a * n + b] as usize, tag)
        .generators(gen_idx, names)
        .build()
}

fn perm_mul(a: &[u8], b: &[u8]) -> Vec<u8> {
    // apply a first, then b
    a.iter().map(|&i| b[i as usize]).collect()
}

fn cycle_perm(n: usize, cycle: &[usize]) -> Vec<u8> {
    let mut p: Vec<u8> = (0..n as u8).collect();
    for w in 0..cycle.len() {
        p[cycle[w]] = cycle[(w + 1) % cycle.len()] as u8;
    }
    p
}

pub(crate) fn permutation_group(
    degree: usize,
    gens: Vec<Vec<u8>>,
    names: Vec<String>,
    tag: Tag,
) -> Result<FiniteGroup> {
    let identity: Vec<u8> = (0..degree as u8).collect();
    closure_group(identity, gens, names, |a, b| perm_mul(a, b), tag)
}

pub fn symmetric(n: usize) -> Result<FiniteGroup> {
    if !(2..=7).contains(&n) {
        return Err(Error::Unsupported(format!("symmetric group of degree {n}")));
    }
    let all: Vec<usize> = (0..n).collect();
    permutation_group(
        n,
        vec![cycle_perm(n, &all), cycle_perm(n, &[0, 1])],
        vec!["s".into(), "t".into()],
        Tag::Named(format!("S{n}")),
    )
}

pub fn alternating(n: usize) -> Result<FiniteGroup> {
    if !(3..=7).contains(&n) {
        return Err(Error::Unsupported(format!(
            "alternating group of degree {n}"
        )));
    }
    let long: Vec<usize> = if n % 2 == 1 {
        (0..n).collect()
    } else {
        (1..n).collect()
    };
    permutation_group(
        n,
        vec![cycle_perm(n, &[0, 1, 2]), cycle_perm(n, &long)],
        vec!["s".into(), "t".into()],
        Tag::Named(format!("A{n}")),
    )
}

type Mat = [u32; 4];

fn mat_mul(p: u32) -> impl Fn(&Mat, &Mat) -> Mat {
    move |a, b| {
        [
            (a[0] * b[0] + a[1] * b[2]) % p,
            (a[0] * b[1] + a[1] * b[3]) % p,
            (a[2] * b[0] + a[3] * b[2]) % p,
            (a[2] * b[1] + a[3] * b[3]) % p,
        ]
    }
}

fn check_prime(p: u32) -> Result<()> {
    if !(2..=13).contains(&p) || (2..p).any(|d| p.is_multiple_of(d)) {
        return Err(Error::Unsupported(format!("matrix groups over F_{p}")));
    }
    Ok(())
}

/// `SL(2, p)` for a small prime `p`.
pub fn sl2(p: u32) -> Result<FiniteGroup> {
    check_prime(p)?;
    closure_group(
        [1, 0, 0, 1],
        vec![[1, 1, 0, 1], [0, p - 1, 1, 0]],
        vec!["u".into(), "s".into()],
        mat_mul(p),
        Tag::Named(format!("SL(2,{p})")),
    )
}

/// `GL(2, p)` for a small prime `p`.
pub fn gl2(p: u32) -> Result<FiniteGroup> {
    check_prime(p)?;
    let primitive = (1..p)
        .find(|&a| (1..p - 1).all(|e| mod_pow(a as u64, e as u64, p as u64) != 1))
        .unwrap_or(1);
    let mut gens = vec![[1, 1, 0, 1], [0, p - 1, 1, 0]];
    let mut names: Vec<String> = vec!["u".into(), "s".into()];
    if p > 2 {
        gens.push([primitive, 0, 0, 1]);
        names.push("d".into());
    }
    closure_group(
        [1, 0, 0, 1],
        gens,
        names,
        mat_mul(p),
        Tag::Named(format!("GL(2,{p})")),
    )
}

impl FiniteGroup {
    /// Re-selects distinguished generators but keeps the element labels.
    pub(crate) fn with_generators_keep_labels(
        &self,
        names: &[&str],
        elems: &[Elem],
    ) -> Result<FiniteGroup> {
        let labels: Vec<String> = self.elements().map(|e| self.label(e).to_string()).collect();
        let tag = self.tag().clone();
        let g = self.with_generators(names, elems)?;
        Ok(g.relabeled(labels).retagged(tag))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{recognize, Structure};

    #[test]
    fn metacyclic_consistency() {
        assert!(metacyclic(5, 2, 2, 0, ["c", "b"]).is_err());
        assert!(metacyclic(5, 4, 2, 0, ["c", "b"]).is_ok());
        assert!(metacyclic(4, 2, 3, 1, ["c", "b"]).is_err());
        assert_eq!(case3_group(5).unwrap().order(), 20);
    }

    #[test]
    fn case3_relations() {
        for g in 2..7 {
            let grp = case3_group(g).unwrap();
            let a = grp.gen("A").unwrap();
            let c = grp.gen("C").unwrap();
            assert_eq!(grp.elem_order(a), 4);
            assert_eq!(grp.elem_order(c), 2 * g);
            assert_eq!(grp.conj(a, c), grp.inv(c));
            assert_eq!(grp.pow(a, 2), grp.pow(c, g as i64));
        }
    }

    #[test]
    fn matrix_and_permutation_orders() {
        assert_eq!(sl2(3).unwrap().order(), 24);
        assert_eq!(gl2(3).unwrap().order(), 48);
        assert_eq!(sl2(5).unwrap().order(), 120);
        assert_eq!(symmetric(4).unwrap().order(), 24);
        assert_eq!(alternating(4).unwrap().order(), 12);
        assert_eq!(alternating(5).unwrap().order(), 60);
    }

    #[test]
    fn extension_group_b_structure() {
        let g2 = extension_group_b(2).unwrap();
        assert_eq!(g2.order(), 16);
        assert_eq!(recognize(&g2), Structure::Dihedral { order: 16 });
        let g3 = extension_group_b(3).unwrap();
        assert_eq!(g3.order(), 24);
        assert_eq!(recognize(&g3), Structure::DihedralTimesC2 { order: 24 });
    }

    #[test]
    fn extension_group_a_labels() {
        let g = extension_group_a(3).unwrap();
        assert_eq!(g.order(), 24);
        let e = g.parse_word("w x w x w x w").unwrap();
        assert_eq!(g.label(e), "(wx)^3 w");
        assert_eq!(g.orientation(e), Some(-1));
    }
}
