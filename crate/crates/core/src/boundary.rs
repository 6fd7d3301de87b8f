//! The closure of the family in the compactified moduli space: nodal
//! surfaces at the ends of the real arcs and the Jordan curve they bound.

use serde::Serialize;

use crate::actions::GeneratingVector;
use crate::error::{Error, Result};
use crate::extensions::{build_extensions, restrict_to_index2, ExtendedAction, Kind, Label};
use crate::groups::{Elem, FiniteGroup, Subgroup};
use crate::realforms::{species_set, Species};
use crate::signatures::{Sign, Signature};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Vertex {
    pub genus: u64,
}

/// Stable graph of a nodal surface: components weighted by genus, one edge
/// per node (loops allowed).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NodalGraph {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<[usize; 2]>,
    pub label: String,
}

impl NodalGraph {
    /// `Σ (w(v) − 1) + #edges + 1`.
    pub fn total_genus(&self) -> i64 {
        self.vertices
            .iter()
            .map(|v| v.genus as i64 - 1)
            .sum::<i64>()
            + self.edges.len() as i64
            + 1
    }

    pub fn is_dipole(&self) -> bool {
        self.vertices.len() == 2
            && !self.edges.is_empty()
            && self.edges.iter().all(|e| e == &[0, 1])
    }

    pub fn loops(&self) -> usize {
        self.edges.iter().filter(|e| e[0] == e[1]).count()
    }
}

/// `H¹ = ⟨v1v2, v3, v4⟩` and `H² = ⟨v1, v2v3, v4⟩`.
pub fn degeneration_subgroups(v: &GeneratingVector) -> Result<(Subgroup, Subgroup)> {
    let [a, b, c, d] = four(v)?;
    let g = v.group();
    Ok((
        g.subgroup_generated(&[g.mul(a, b), c, d]),
        g.subgroup_generated(&[a, g.mul(b, c), d]),
    ))
}

fn four(v: &GeneratingVector) -> Result<[Elem; 4]> {
    <[Elem; 4]>::try_from(v.elements())
        .map_err(|_| Error::InconsistentParameters("expected a vector of length 4".into()))
}

/// Images `(γ1, γ2, γ3)` of the degenerate component group, signature
/// `(0;+;[∞,2,2g])` up to order: `γ1` parabolic.
pub fn omega(v: &GeneratingVector, which: u8) -> Result<[Elem; 3]> {
    let [a, b, c, d] = four(v)?;
    let g = v.group();
    match which {
        1 => Ok([g.mul(a, b), c, d]),
        2 => Ok([g.mul(b, c), d, a]),
        _ => Err(Error::InconsistentParameters(format!(
            "degeneration {which} is not 1 or 2"
        ))),
    }
}

/// Genus of one component, from Riemann-Hurwitz for the cusped orbifold.
/// `omega[0]` is the parabolic image; the two elliptic images must have
/// orders `{2, 2g}`.
pub fn component_genus(group: &FiniteGroup, omega: [Elem; 3], g: u64) -> Result<u64> {
    if group.product(omega) != group.identity() {
        return Err(Error::invariant("ω(γ1γ2γ3) ≠ 1"));
    }
    let mut cones = [group.elem_order(omega[1]), group.elem_order(omega[2])];
    cones.sort_unstable();
    if cones != [2, 2 * g] {
        return Err(Error::NonIntegralGenus(format!(
            "cone orders {cones:?}, expected [2, {}]",
            2 * g
        )));
    }
    let n = group.subgroup_generated(&omega).order() as i64;
    let cusps = n / group.elem_order(omega[0]) as i64;
    // n·χ = n(−1 + 1/2 + 1/2g) with the parabolic contributing exactly 1
    let scaled = -n * (g as i64 - 1);
    if scaled % (2 * g as i64) != 0 {
        return Err(Error::NonIntegralGenus(format!("image order {n}")));
    }
    let twice = 2 - cusps - scaled / (2 * g as i64);
    if twice < 0 || twice % 2 != 0 {
        return Err(Error::NonIntegralGenus(format!("2h = {twice}")));
    }
    Ok((twice / 2) as u64)
}

fn cosets(group: &FiniteGroup, sub: &Subgroup) -> Vec<usize> {
    // coset id of each element, ids ordered by smallest member
    let mut id = vec![usize::MAX; group.order()];
    let mut next = 0;
    for g in group.elements() {
        if id[g] == usize::MAX {
            for &h in sub.elements() {
                id[group.mul(g, h)] = next;
            }
            next += 1;
        }
    }
    id
}

/// The graph of degeneration 1 (`G¹`) or 2 (`G²`).
pub fn nodal_graph(v: &GeneratingVector, which: u8) -> Result<NodalGraph> {
    let grp = v.group();
    let g = (grp.order() / 4) as u64;
    let w = omega(v, which)?;
    let (h1, h2) = degeneration_subgroups(v)?;
    let h = if which == 1 { h1 } else { h2 };
    let [a, b, c, _] = four(v)?;
    let (t1, t2) = if which == 1 { (a, b) } else { (b, c) };
    let tube = grp.subgroup_generated(&[t1, t2]);

    let vid = cosets(grp, &h);
    let nv = grp.order() / h.order();
    let genus = component_genus(grp, w, g)?;
    let mut edges = Vec::new();
    let mut seen = vec![false; grp.order()];
    for x in grp.elements() {
        if seen[x] {
            continue;
        }
        for &k in tube.elements() {
            seen[grp.mul(x, k)] = true;
        }
        let (i, j) = (vid[x], vid[grp.mul(x, t1)]);
        edges.push([i.min(j), i.max(j)]);
    }
    edges.sort_unstable();
    let cusps_per_vertex = h.order() / grp.elem_order(w[0]) as usize;
    if 2 * edges.len() != nv * cusps_per_vertex {
        return Err(Error::invariant("edge count disagrees with cusp count"));
    }
    let graph = NodalGraph {
        vertices: vec![Vertex { genus }; nv],
        edges,
        label: format!("G{which}"),
    };
    if graph.total_genus() != g as i64 {
        return Err(Error::invariant(format!(
            "{}: total genus {} ≠ {g}",
            graph.label,
            graph.total_genus()
        )));
    }
    Ok(graph)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Endpoint {
    #[serde(rename = "X_D")]
    Dipole,
    #[serde(rename = "X_R")]
    Rose,
    #[serde(rename = "X_8g")]
    Wiman,
}

impl std::fmt::Display for Endpoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Endpoint::Dipole => "X_D",
            Endpoint::Rose => "X_R",
            Endpoint::Wiman => "X_8g",
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundaryArc {
    pub label: &'static str,
    pub extension: Label,
    pub species: Vec<Species>,
    pub endpoints: [Endpoint; 2],
}

/// One of the three points closing the arcs.
#[derive(Debug, Clone, Serialize)]
pub struct EndpointSurface {
    pub name: Endpoint,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph: Option<NodalGraph>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equation: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub aut_order: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub aut_group: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nec_signature: Option<Signature>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundaryDescription {
    pub genus: u64,
    pub arcs: Vec<BoundaryArc>,
    pub endpoints: Vec<EndpointSurface>,
    pub jordan_curve: bool,
}

/// Whether the arcs form a single cycle through three distinct points.
pub fn is_three_cycle(arcs: &[BoundaryArc]) -> bool {
    let mut pts: Vec<Endpoint> = arcs.iter().flat_map(|a| a.endpoints).collect();
    if arcs.len() != 3 || arcs.iter().any(|a| a.endpoints[0] == a.endpoints[1]) {
        return false;
    }
    pts.sort();
    pts.dedup();
    if pts.len() != 3 {
        return false;
    }
    let degree = |p: Endpoint| arcs.iter().filter(|a| a.endpoints.contains(&p)).count();
    let mut ends: Vec<[Endpoint; 2]> = arcs.iter().map(|a| a.endpoints).collect();
    for e in &mut ends {
        e.sort();
    }
    ends.sort();
    ends.dedup();
    ends.len() == 3 && pts.iter().all(|&p| degree(p) == 2)
}

fn wiman_surface(g: u64) -> EndpointSurface {
    let (n, aut_group) = if g == 2 {
        (vec![2, 3, 8], Some("GL(2,3)".to_string()))
    } else {
        (vec![2, 4, 4 * g], None)
    };
    EndpointSurface {
        name: Endpoint::Wiman,
        graph: None,
        equation: Some(format!("w^2 = z(z^{} - 1)", 2 * g)),
        aut_order: Some(if g == 2 { 48 } else { 8 * g }),
        aut_group,
        nec_signature: Signature::new(0, Sign::Plus, vec![], vec![n]).ok(),
    }
}

/// Boundary data from already built extensions (kind a then kind b).
pub fn boundary_from(
    g: u64,
    kind_a: &[ExtendedAction],
    kind_b: &[ExtendedAction],
) -> Result<BoundaryDescription> {
    let find = |list: &[ExtendedAction], label: Label| {
        list.iter()
            .find(|e| e.label == label)
            .cloned()
            .ok_or_else(|| Error::invariant(format!("{label} is missing")))
    };
    let t1 = find(kind_a, Label::Theta1)?;
    let t2 = find(kind_a, Label::Theta2)?;
    let tb = find(kind_b, Label::ThetaB)?;
    let v1 = restrict_to_index2(&t1)?;
    let x_d = nodal_graph(&v1, 1)?;
    let x_r = nodal_graph(&v1, 2)?;
    // a₂ also closes at X_R: its second degeneration is again a single vertex
    let r2 = nodal_graph(&restrict_to_index2(&t2)?, 2)?;
    if r2.vertices.len() != 1 {
        return Err(Error::invariant(
            "θ₂* does not degenerate to a one-vertex graph",
        ));
    }
    let arcs = vec![
        BoundaryArc {
            label: "a1",
            extension: Label::Theta1,
            species: species_set(&t1)?,
            endpoints: [Endpoint::Dipole, Endpoint::Rose],
        },
        BoundaryArc {
            label: "a2",
            extension: Label::Theta2,
            species: species_set(&t2)?,
            endpoints: [Endpoint::Rose, Endpoint::Wiman],
        },
        BoundaryArc {
            label: "b",
            extension: Label::ThetaB,
            species: species_set(&tb)?,
            endpoints: [Endpoint::Dipole, Endpoint::Wiman],
        },
    ];
    let nodal = |name, graph| EndpointSurface {
        name,
        graph: Some(graph),
        equation: None,
        aut_order: None,
        aut_group: None,
        nec_signature: None,
    };
    let jordan_curve = is_three_cycle(&arcs);
    Ok(BoundaryDescription {
        genus: g,
        arcs,
        endpoints: vec![
            nodal(Endpoint::Dipole, x_d),
            nodal(Endpoint::Rose, x_r),
            wiman_surface(g),
        ],
        jordan_curve,
    })
}

pub fn boundary_description(g: u64) -> Result<BoundaryDescription> {
    boundary_from(
        g,
        &build_extensions(g, Kind::A)?,
        &build_extensions(g, Kind::B)?,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::actions::canonical_vector;

    #[test]
    fn subgroup_indices() {
        let v = canonical_vector(5).unwrap();
        let (h1, h2) = degeneration_subgroups(&v).unwrap();
        assert_eq!(h1.index(), 2);
        assert_eq!(h2.index(), 1);
    }

    #[test]
    fn graphs() {
        let g4 = nodal_graph(&canonical_vector(4).unwrap(), 1).unwrap();
        assert_eq!(g4.vertices, vec![Vertex { genus: 2 }; 2]);
        assert_eq!(g4.edges, vec![[0, 1]]);
        let g5 = nodal_graph(&canonical_vector(5).unwrap(), 1).unwrap();
        assert_eq!(g5.vertices, vec![Vertex { genus: 2 }; 2]);
        assert_eq!(g5.edges, vec![[0, 1], [0, 1]]);
        let r5 = nodal_graph(&canonical_vector(5).unwrap(), 2).unwrap();
        assert_eq!(r5.vertices, vec![Vertex { genus: 0 }]);
        assert_eq!(r5.loops(), 5);
    }

    #[test]
    fn arcs_close_up() {
        let b = boundary_description(5).unwrap();
        assert!(b.jordan_curve);
        let vals: Vec<Vec<i64>> = b
            .arcs
            .iter()
            .map(|a| a.species.iter().map(|s| s.value()).collect())
            .collect();
        assert_eq!(
            vals,
            vec![vec![2, 0, -2, -2], vec![-1, -1, -5, -5], vec![0, 0, -2, -2]]
        );
        assert_eq!(
            boundary_description(2).unwrap().endpoints[2].aut_order,
            Some(48)
        );
    }

    #[test]
    fn bad_cycles() {
        let mut arcs = boundary_description(3).unwrap().arcs;
        arcs[2].endpoints = [Endpoint::Dipole, Endpoint::Rose];
        assert!(!is_three_cycle(&arcs));
    }

    #[test]
    fn json_shape() {
        let g = nodal_graph(&canonical_vector(3).unwrap(), 1).unwrap();
        let j = serde_json::to_string(&g).unwrap();
        assert_eq!(
            j,
            r#"{"vertices":[{"genus":1},{"genus":1}],"edges":[[0,1],[0,1]],"label":"G1"}"#
        );
    }
}
