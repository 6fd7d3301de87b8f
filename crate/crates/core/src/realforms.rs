//! Symmetry types: anticonformal involutions, their ovals and species.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::extensions::{ExtendedAction, Kind, Label};
use crate::groups::{Elem, FiniteGroup, Subgroup};

/// Topological type of a symmetry: `+k` separating, `-k` non-separating,
/// `0` when there are no ovals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Species {
    pub ovals: u64,
    pub separating: bool,
}

impl Species {
    pub fn value(self) -> i64 {
        match (self.ovals, self.separating) {
            (0, _) => 0,
            (k, true) => k as i64,
            (k, false) => -(k as i64),
        }
    }

    /// Harnack's bounds for a curve of genus `g`.
    pub fn satisfies_harnack(self, g: u64) -> bool {
        if self.separating {
            (1..=g + 1).contains(&self.ovals) && self.ovals % 2 == (g + 1) % 2
        } else {
            self.ovals <= g
        }
    }
}

impl fmt::Display for Species {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value() {
            v if v > 0 => write!(f, "+{v}"),
            v => write!(f, "{v}"),
        }
    }
}

impl Serialize for Species {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i64(self.value())
    }
}

impl PartialOrd for Species {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Descending by value, so `{+2, 0, -2, -2}` prints in the usual order.
impl Ord for Species {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        other
            .value()
            .cmp(&self.value())
            .then(self.ovals.cmp(&other.ovals))
    }
}

/// A conjugacy class of orientation-reversing involutions of `G*`.
#[derive(Debug, Clone, Serialize)]
pub struct SymmetryClass {
    #[serde(skip)]
    pub representative: Elem,
    #[serde(rename = "representative")]
    pub label: String,
    pub size: usize,
    pub ovals: Option<u64>,
    pub species: Option<Species>,
}

/// The classes, ordered by representative index, ovals not yet filled.
pub fn symmetry_classes(e: &ExtendedAction) -> Vec<SymmetryClass> {
    let g = &e.group;
    g.conjugacy_classes(|x| g.elem_order(x) == 2 && g.orientation(x) == Some(-1))
        .into_iter()
        .map(|c| SymmetryClass {
            representative: c.representative,
            label: g.label(c.representative).to_string(),
            size: c.elements.len(),
            ovals: None,
            species: None,
        })
        .collect()
}

/// `θ*(C(Γ*, c_j))` for each canonical reflection `c_j` of the period cycle
/// (the closing reflection `c_s`, conjugate to `c_0`, is not repeated).
pub fn centralizer_images(e: &ExtendedAction) -> Result<Vec<Subgroup>> {
    let g = &e.group;
    let chain = e.reflection_chain();
    let links = e.link_periods();
    let s = links.len();
    let conn = e.connecting_image();
    let half = |n: u64| -> Result<i64> {
        if n % 2 == 1 {
            return Err(Error::Unsupported(format!("odd link period {n}")));
        }
        Ok((n / 2) as i64)
    };
    (0..s)
        .map(|j| {
            let c = chain[j];
            let (left, n_left) = if j == 0 {
                (g.conj(conn, chain[s - 1]), links[s - 1])
            } else {
                (chain[j - 1], links[j - 1])
            };
            let right = chain[j + 1];
            let gens = [
                c,
                g.pow(g.mul(left, c), half(n_left)?),
                g.pow(g.mul(c, right), half(links[j])?),
            ];
            let h = g.subgroup_generated(&gens);
            if !h.is_subgroup_of(&g.centralizer(c)) {
                return Err(Error::invariant(format!(
                    "{}: image of C(Γ*, c{j}) is not inside C(G*, {})",
                    e.label,
                    g.label(c)
                )));
            }
            Ok(h)
        })
        .collect()
}

/// Oval count of every class, by summing centralizer indices over the
/// canonical reflections whose image is conjugate to the representative.
pub fn count_ovals(e: &ExtendedAction, cls: &SymmetryClass) -> Result<u64> {
    let g = &e.group;
    let rep = cls.representative;
    if g.elem_order(rep) != 2 || g.orientation(rep) != Some(-1) {
        return Err(Error::InconsistentParameters(format!(
            "{} is not an orientation-reversing involution",
            g.label(rep)
        )));
    }
    let chain = e.reflection_chain();
    let mut total = 0;
    for (j, h) in centralizer_images(e)?.iter().enumerate() {
        if g.are_conjugate(chain[j], rep) {
            let c = g.centralizer(chain[j]);
            if !c.order().is_multiple_of(h.order()) {
                return Err(Error::invariant("centralizer index is not an integer"));
            }
            total += (c.order() / h.order()) as u64;
        }
    }
    Ok(total)
}

fn sign_rule(e: &ExtendedAction, cls: &SymmetryClass, ovals: u64) -> bool {
    let g = e.genus;
    if ovals == 0 || ovals % 2 != (g + 1) % 2 {
        return false;
    }
    // g+1 ovals cannot be non-separating.
    if ovals == g + 1 {
        return true;
    }
    // Remaining cases: the class of θ₁*(c₁) = y is the separating one.
    e.label == Label::Theta1 && e.group.are_conjugate(e.images[1], cls.representative)
}

/// Classes with ovals and species filled in, sorted by species.
pub fn symmetry_type(e: &ExtendedAction) -> Result<Vec<SymmetryClass>> {
    let mut classes = symmetry_classes(e);
    for cls in &mut classes {
        let k = count_ovals(e, cls)?;
        let sp = Species {
            ovals: k,
            separating: sign_rule(e, cls, k),
        };
        if !sp.satisfies_harnack(e.genus) {
            return Err(Error::invariant(format!(
                "{}: species {sp} violates Harnack",
                e.label
            )));
        }
        cls.ovals = Some(k);
        cls.species = Some(sp);
    }
    classes.sort_by_key(|c| (c.species, c.representative));
    Ok(classes)
}

/// The species multiset, in descending order.
pub fn species_set(e: &ExtendedAction) -> Result<Vec<Species>> {
    Ok(symmetry_type(e)?
        .into_iter()
        .filter_map(|c| c.species)
        .collect())
}

fn span(g: &FiniteGroup, gens: &[Elem]) -> Vec<Elem> {
    g.subgroup_generated(gens).elements().to_vec()
}

/// The centralizer identities written out for the three extensions; any
/// disagreement with the computed subgroups is an error.
pub fn check_centralizer_guards(e: &ExtendedAction) -> Result<()> {
    let g = &e.group;
    let gi = e.genus as i64;
    let images = centralizer_images(e)?;
    let chain = e.reflection_chain();
    let fail = |what: String| {
        Err(Error::invariant(format!(
            "{}: guard failed for {what}",
            e.label
        )))
    };
    match e.kind {
        Kind::A => {
            let (x, w, y) = (
                g.gen("x").unwrap(),
                g.gen("w").unwrap(),
                g.gen("y").unwrap(),
            );
            let dg = g.pow(g.mul(w, x), gi);
            let all: Vec<Elem> = g.elements().collect();
            let (expected_images, expected_centralizers) = match e.label {
                Label::Theta1 => (
                    [
                        vec![x, dg, y],
                        vec![x, g.mul(dg, w), y],
                        vec![w, dg, y],
                        vec![w, dg],
                    ],
                    [vec![x, dg, y], all.clone(), vec![w, dg, y], vec![w, dg, y]],
                ),
                _ => (
                    [
                        vec![x, dg, y],
                        vec![x, dg, y],
                        vec![w, dg, y],
                        vec![w, dg, y],
                    ],
                    [vec![x, dg, y], all.clone(), all.clone(), vec![w, dg, y]],
                ),
            };
            for j in 0..4 {
                if images[j].elements() != span(g, &expected_images[j]).as_slice() {
                    return fail(format!("θ*(C(Γ*, c{j}))"));
                }
                if g.centralizer(chain[j]).elements()
                    != span(g, &expected_centralizers[j]).as_slice()
                {
                    return fail(format!("C(G*, θ*(c{j}))"));
                }
            }
        }
        Kind::B => {
            let (x, z, w) = (
                g.gen("x").unwrap(),
                g.gen("z").unwrap(),
                g.gen("w").unwrap(),
            );
            let xz = g.mul(x, z);
            let (cz, cw) = if e.genus % 2 == 1 {
                let zwg = g.pow(g.mul(z, w), gi);
                (
                    vec![z, zwg, g.pow(xz, gi)],
                    vec![w, zwg, g.pow(g.mul(x, w), gi)],
                )
            } else {
                let central = g.pow(xz, 2 * gi);
                (vec![z, central], vec![w, central])
            };
            if g.centralizer(z).elements() != span(g, &cz).as_slice() {
                return fail("C(G*, z)".into());
            }
            if g.centralizer(w).elements() != span(g, &cw).as_slice() {
                return fail("C(G*, w)".into());
            }
            // index 2 at each reflection for odd g, 1 for even g
            let index = if e.genus % 2 == 1 { 2 } else { 1 };
            for (j, h) in images.iter().enumerate() {
                if g.centralizer(chain[j]).order() != index * h.order() {
                    return fail(format!("index of θ*(C(Γ*, c{j}))"));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extensions::build_extensions;

    fn values(e: &ExtendedAction) -> Vec<i64> {
        species_set(e).unwrap().iter().map(|s| s.value()).collect()
    }

    fn ovals(e: &ExtendedAction) -> Vec<(String, u64)> {
        let mut v: Vec<_> = symmetry_type(e)
            .unwrap()
            .into_iter()
            .map(|c| (c.label, c.ovals.unwrap()))
            .collect();
        v.sort();
        v
    }

    #[test]
    fn theta1_species() {
        let ext = build_extensions(5, Kind::A).unwrap();
        assert_eq!(values(&ext[0]), vec![2, 0, -2, -2]);
        let ext = build_extensions(4, Kind::A).unwrap();
        assert_eq!(values(&ext[0]), vec![1, 0, -1, -3]);
    }

    #[test]
    fn theta2_species() {
        for g in [3, 4, 5] {
            let ext = build_extensions(g, Kind::A).unwrap();
            let gi = g as i64;
            assert_eq!(values(&ext[1]), vec![-1, -1, -gi, -gi]);
        }
    }

    #[test]
    fn kind_b_species() {
        assert_eq!(values(&build_extensions(4, Kind::B).unwrap()[0]), vec![-2]);
        assert_eq!(
            values(&build_extensions(5, Kind::B).unwrap()[0]),
            vec![0, 0, -2, -2]
        );
    }

    #[test]
    fn oval_counts_by_class() {
        let t1 = &build_extensions(5, Kind::A).unwrap()[0];
        let counts = ovals(t1);
        assert!(counts.contains(&("w".to_string(), 2)));
        let t1 = &build_extensions(4, Kind::A).unwrap()[0];
        assert!(ovals(t1).contains(&("w".to_string(), 3)));
    }

    #[test]
    fn genus_two_m_curve() {
        let t1 = &build_extensions(2, Kind::A).unwrap()[0];
        assert_eq!(values(t1), vec![3, 1, 0, -1]);
    }
}
