//! Per-genus reports and atlas sweeps.
//!
//! Every report keeps two things apart: values computed here, and the values
//! expected from the published classification (`comparisons`), each paired
//! with its computed counterpart.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::actions::{
    canonical_vector, classify, eliminate_cases, exceptional_search, CaseReport,
    ExceptionalCandidate,
};
use crate::boundary::{boundary_from, BoundaryDescription, Endpoint};
use crate::error::{Error, Result};
use crate::extensions::{
    build_extensions, extended_structure, in_unique_class, restrict_to_index2, restriction_images,
    ExtendedAction, Kind, Label,
};
use crate::groups::{catalog, dihedral, recognize, FiniteGroup, CATALOG_LIMIT};
use crate::realforms::{symmetry_type, Species, SymmetryClass};
use crate::signatures::{
    enumerate_4g_signatures, sporadic_genera, TaggedSignature, EXCEPTIONAL_SURFACE_GENERA,
    LISTED_SPORADIC_GENERA, QUADRUPLE_FAMILY_GENERA,
};

#[derive(Debug, Clone, Copy)]
pub struct ReportOptions {
    /// Largest group order swept from the built-in catalog.
    pub max_order: usize,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions { max_order: 120 }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Flags {
    /// Genus carrying a second uniparametric family (quadruple signature).
    pub extra_uniparametric_family: bool,
    /// Genus with one or two exceptional surfaces.
    pub exceptional_surfaces: bool,
    /// Some triangle signature is admissible for order `4g`.
    pub sporadic: bool,
    /// Whether some group of order `4g` acts with a triangle signature;
    /// `None` when the group search is incomplete.
    pub sporadic_realized: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Uniqueness {
    pub group: String,
    pub classes: usize,
    pub representative: String,
    pub canonical: String,
    pub representative_is_canonical: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExtensionEntry {
    pub action: ExtendedAction,
    pub restriction: String,
    pub restriction_in_unique_class: bool,
    pub symmetries: Vec<SymmetryClass>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExceptionalSection {
    pub order: usize,
    pub builtin_groups: usize,
    pub ingested_groups: usize,
    /// Number of isomorphism types of this order, when known.
    pub known_count: Option<usize>,
    pub complete: bool,
    pub candidates: Vec<ExceptionalCandidate>,
    pub warnings: Vec<String>,
}

/// A value predicted by the source next to the one computed here.
#[derive(Debug, Clone, Serialize)]
pub struct Comparison {
    pub quantity: String,
    pub expected: String,
    pub computed: String,
    /// `None` when the computation could not decide.
    pub agrees: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub genus: u64,
    pub flags: Flags,
    pub signatures: Vec<TaggedSignature>,
    pub uniqueness: Uniqueness,
    pub cases: CaseReport,
    pub kind_b_group: String,
    pub extensions: Vec<ExtensionEntry>,
    pub boundary: BoundaryDescription,
    pub exceptional: ExceptionalSection,
    pub comparisons: Vec<Comparison>,
}

fn species_text(s: &[Species]) -> String {
    let parts: Vec<String> = s.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

fn compare(quantity: &str, expected: String, computed: String) -> Comparison {
    Comparison {
        quantity: quantity.to_string(),
        agrees: Some(expected == computed),
        expected,
        computed,
    }
}

fn expected_species(g: u64, label: Label) -> String {
    let gi = g as i64;
    let v: Vec<i64> = match label {
        Label::Theta1 if g % 2 == 1 => vec![2, 0, -2, -2],
        Label::Theta1 => vec![1, 0, -1, -3],
        Label::Theta2 => vec![-1, -1, -gi, -gi],
        Label::ThetaB if g % 2 == 1 => vec![0, 0, -2, -2],
        Label::ThetaB => vec![-2],
    };
    let parts: Vec<String> = v
        .iter()
        .map(|&x| {
            if x > 0 {
                format!("+{x}")
            } else {
                x.to_string()
            }
        })
        .collect();
    format!("{{{}}}", parts.join(","))
}

/// Built-in groups of order `4g` plus any ingested ones, and the exceptional
/// candidates among them.
pub fn exceptional_section(
    g: u64,
    ingested: &[FiniteGroup],
    max_order: usize,
) -> Result<ExceptionalSection> {
    let n = (4 * g) as usize;
    if let Some(h) = ingested.iter().find(|h| h.order() != n) {
        return Err(Error::WrongOrder {
            expected: n,
            found: h.order(),
        });
    }
    let mut warnings = Vec::new();
    let (builtin, known_count) = if n <= max_order.min(CATALOG_LIMIT) {
        let c = catalog(n)?;
        if !c.is_complete() {
            warnings.push(match c.known_count {
                Some(k) => format!(
                    "built-in groups of order {n} cover {} of {k} isomorphism types; ingest tables for a complete search",
                    c.groups.len()
                ),
                None => format!("built-in groups of order {n} are not known to be complete"),
            });
        }
        (c.groups, c.known_count)
    } else {
        warnings.push(format!(
            "order {n} exceeds the search cap {}; only ingested groups are searched",
            max_order.min(CATALOG_LIMIT)
        ));
        (Vec::new(), crate::groups::known_group_count(n))
    };
    let complete = known_count == Some(builtin.len());
    let mut groups = builtin.clone();
    groups.extend(ingested.iter().cloned());
    let mut candidates = exceptional_search(g, &groups)?;
    // drop ingested duplicates of built-in groups
    candidates.retain(|c| {
        c.group_index < builtin.len()
            || !builtin
                .iter()
                .any(|b| crate::groups::find_isomorphism(b, &groups[c.group_index]).is_some())
    });
    Ok(ExceptionalSection {
        order: n,
        builtin_groups: builtin.len(),
        ingested_groups: ingested.len(),
        known_count,
        complete,
        candidates,
        warnings,
    })
}

fn extension_entry(e: ExtendedAction) -> Result<ExtensionEntry> {
    let v = restrict_to_index2(&e)?;
    let words: Vec<&str> = restriction_images(&e)
        .into_iter()
        .map(|x| e.group.label(x))
        .collect();
    Ok(ExtensionEntry {
        restriction: format!("({})", words.join(", ")),
        restriction_in_unique_class: in_unique_class(&v)?,
        symmetries: symmetry_type(&e)?,
        action: e,
    })
}

pub fn report(g: u64, opts: &ReportOptions) -> Result<Report> {
    if g < 2 {
        return Err(Error::InconsistentParameters(format!(
            "genus must be at least 2, got {g}"
        )));
    }
    let signatures = enumerate_4g_signatures(g);
    let sporadic = signatures
        .iter()
        .any(|t| t.tag == crate::signatures::FamilyTag::Sporadic);

    let d2g = dihedral(4 * g)?;
    let classes = classify(&d2g, &[2, 2, 2, 2 * g]);
    let canon = canonical_vector(g)?;
    let rep = classes
        .first()
        .map(|c| c.representative.clone())
        .ok_or_else(|| Error::invariant("no [2,2,2,2g] action on D₂g"))?;
    let uniqueness = Uniqueness {
        group: recognize(&d2g).to_string(),
        classes: classes.len(),
        representative: rep.to_string(),
        canonical: canon.to_string(),
        representative_is_canonical: crate::actions::equivalent(&rep, &canon),
    };

    let kind_a = build_extensions(g, Kind::A)?;
    let kind_b = build_extensions(g, Kind::B)?;
    let boundary = boundary_from(g, &kind_a, &kind_b)?;
    let kind_b_group = extended_structure(g, Kind::B)?.to_string();
    let extensions: Vec<ExtensionEntry> = kind_a
        .iter()
        .chain(&kind_b)
        .cloned()
        .map(extension_entry)
        .collect::<Result<_>>()?;

    let mut comparisons = vec![
        compare(
            "[2,2,2,2g] action classes on D2g",
            "1".into(),
            classes.len().to_string(),
        ),
        compare("kind a extensions", "2".into(), kind_a.len().to_string()),
        compare("kind b extensions", "1".into(), kind_b.len().to_string()),
        compare(
            "kind b extended group",
            if g.is_multiple_of(2) {
                format!("dihedral of order {}", 8 * g)
            } else {
                format!("dihedral of order {} x C2", 4 * g)
            },
            kind_b_group.clone(),
        ),
    ];
    for arc in &boundary.arcs {
        comparisons.push(compare(
            &format!("species on arc {} ({})", arc.label, arc.extension),
            expected_species(g, arc.extension),
            species_text(&arc.species),
        ));
    }
    for ep in &boundary.endpoints {
        match (ep.name, &ep.graph) {
            (Endpoint::Dipole, Some(gr)) => comparisons.push(compare(
                "X_D graph",
                format!(
                    "{}-dipole, weights {}",
                    if g.is_multiple_of(2) { 1 } else { 2 },
                    g / 2
                ),
                format!(
                    "{}-dipole, weights {}",
                    if gr.is_dipole() { gr.edges.len() } else { 0 },
                    gr.vertices.first().map_or(0, |v| v.genus)
                ),
            )),
            (Endpoint::Rose, Some(gr)) => comparisons.push(compare(
                "X_R graph",
                format!("1 vertex of weight 0, {g} loops"),
                format!(
                    "{} vertex of weight {}, {} loops",
                    gr.vertices.len(),
                    gr.vertices.first().map_or(0, |v| v.genus),
                    gr.loops()
                ),
            )),
            (Endpoint::Wiman, _) => comparisons.push(compare(
                "|Aut(X_8g)|",
                (if g == 2 { 48 } else { 8 * g }).to_string(),
                ep.aut_order.map_or("-".into(), |a| a.to_string()),
            )),
            _ => {}
        }
    }
    let exceptional = exceptional_section(g, &[], opts.max_order)?;
    let sporadic_realized = (!sporadic)
        .then_some(false)
        .or(exceptional.complete.then(|| {
            exceptional
                .candidates
                .iter()
                .any(|c| c.tag == crate::signatures::FamilyTag::Sporadic)
        }));
    if g <= 861 {
        comparisons.push(compare(
            "sporadic genus",
            LISTED_SPORADIC_GENERA.contains(&g).to_string(),
            sporadic.to_string(),
        ));
    }
    let found = exceptional
        .candidates
        .iter()
        .any(|c| c.tag == crate::signatures::FamilyTag::Sporadic);
    let mut exc = compare(
        "exceptional surfaces on a triangle signature",
        EXCEPTIONAL_SURFACE_GENERA.contains(&g).to_string(),
        found.to_string(),
    );
    if !found && !exceptional.complete {
        exc.computed = "unknown (incomplete search)".into();
        exc.agrees = None;
    }
    comparisons.push(exc);
    comparisons.push(compare(
        "boundary is a closed Jordan curve",
        "true".into(),
        boundary.jordan_curve.to_string(),
    ));

    Ok(Report {
        genus: g,
        flags: Flags {
            extra_uniparametric_family: QUADRUPLE_FAMILY_GENERA.contains(&g),
            exceptional_surfaces: EXCEPTIONAL_SURFACE_GENERA.contains(&g),
            sporadic,
            sporadic_realized,
        },
        signatures,
        uniqueness,
        cases: eliminate_cases(g, opts.max_order)?,
        kind_b_group,
        extensions,
        boundary,
        exceptional,
        comparisons,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct AtlasSummary {
    pub genera: Vec<u64>,
    /// Genera in range with an admissible triangle signature.
    pub sporadic_genera: Vec<u64>,
    /// Of those, the ones missing from the published list.
    pub unlisted_sporadic_genera: Vec<u64>,
    pub extra_uniparametric_family: Vec<u64>,
    pub exceptional_surfaces: Vec<u64>,
    pub disagreements: Vec<(u64, String)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Atlas {
    pub reports: Vec<Report>,
    pub summary: AtlasSummary,
}

/// Reports for `lo..=hi`, computed in parallel and returned in order.
pub fn atlas(lo: u64, hi: u64, opts: &ReportOptions) -> Result<Atlas> {
    if lo < 2 || lo > hi {
        return Err(Error::InconsistentParameters(format!(
            "range {lo}..{hi} must satisfy 2 ≤ lo ≤ hi"
        )));
    }
    let reports: Vec<Report> = (lo..=hi)
        .into_par_iter()
        .map(|g| report(g, opts))
        .collect::<Result<_>>()?;
    let sporadic: Vec<u64> = sporadic_genera(hi)
        .into_iter()
        .filter(|&g| g >= lo)
        .collect();
    let summary = AtlasSummary {
        genera: (lo..=hi).collect(),
        unlisted_sporadic_genera: sporadic
            .iter()
            .copied()
            .filter(|g| !LISTED_SPORADIC_GENERA.contains(g))
            .collect(),
        sporadic_genera: sporadic,
        extra_uniparametric_family: reports
            .iter()
            .filter(|r| r.flags.extra_uniparametric_family)
            .map(|r| r.genus)
            .collect(),
        exceptional_surfaces: reports
            .iter()
            .filter(|r| r.flags.exceptional_surfaces)
            .map(|r| r.genus)
            .collect(),
        disagreements: reports
            .iter()
            .flat_map(|r| {
                r.comparisons
                    .iter()
                    .filter(|c| c.agrees == Some(false))
                    .map(move |c| (r.genus, c.quantity.clone()))
            })
            .collect(),
    };
    Ok(Atlas { reports, summary })
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl Report {
    pub fn to_markdown(&self) -> String {
        let g = self.genus;
        let mut s = String::new();
        let _ = writeln!(s, "# Genus {g}\n");
        let _ = writeln!(
            s,
            "- extra uniparametric family: {}\n- exceptional surfaces: {}\n- sporadic signature: {}\n",
            yes(self.flags.extra_uniparametric_family),
            yes(self.flags.exceptional_surfaces),
            yes(self.flags.sporadic)
        );

        let _ = writeln!(s, "## Signatures for order {}\n", 4 * g);
        let _ = writeln!(s, "| signature | family |\n|---|---|");
        for t in &self.signatures {
            let _ = writeln!(s, "| `{}` | {} |", t.signature, tag_text(t));
        }

        let t = &self.uniqueness;
        let _ = writeln!(
            s,
            "\n## Uniqueness\n\n{} carries {} class(es) on [2,2,2,{}]; representative `{}`, canonical `{}` (equivalent: {}).",
            t.group,
            t.classes,
            2 * g,
            t.representative,
            t.canonical,
            yes(t.representative_is_canonical)
        );

        let c = &self.cases;
        let _ = writeln!(s, "\n## Excluded families\n");
        let _ = writeln!(
            s,
            "- `{}`: {} cyclic class(es); extends to order {} ({:?})",
            c.family1.signature,
            c.family1.cyclic_classes,
            c.family1.extension_order,
            c.family1.verdict
        );
        let _ = writeln!(
            s,
            "- `{}`: {} group(s) checked, {} smooth vector(s) ({:?})",
            c.family2.signature,
            c.family2.groups_checked,
            c.family2.smooth_vectors,
            c.family2.verdict
        );
        let _ = writeln!(
            s,
            "- `{}`: t in {:?}, swap automorphism {}, extends to order {} ({:?})",
            c.family3.signature,
            c.family3.t_candidates,
            yes(c.family3.swap_automorphism),
            c.family3.extension_order,
            c.family3.verdict
        );

        let _ = writeln!(
            s,
            "\n## Extended actions\n\nKind b group: {}.\n",
            self.kind_b_group
        );
        for e in &self.extensions {
            let a = &e.action;
            let imgs: Vec<String> = a
                .generator_names()
                .iter()
                .zip(&a.images)
                .map(|(n, &x)| format!("{n} -> {}", a.group.label(x)))
                .collect();
            let _ = writeln!(
                s,
                "### {} (kind {}, `{}`)\n\n{}; class size {}; restriction `{}` in the uniqueness class: {}.\n",
                a.label,
                a.kind,
                a.signature,
                imgs.join(", "),
                a.class_size,
                e.restriction,
                yes(e.restriction_in_unique_class)
            );
            let _ = writeln!(s, "| class | size | ovals | species |\n|---|---|---|---|");
            for c in &e.symmetries {
                let _ = writeln!(
                    s,
                    "| `{}` | {} | {} | {} |",
                    c.label,
                    c.size,
                    c.ovals.unwrap_or(0),
                    c.species.map_or("-".into(), |x| x.to_string())
                );
            }
            s.push('\n');
        }

        let _ = writeln!(s, "## Boundary\n");
        for arc in &self.boundary.arcs {
            let _ = writeln!(
                s,
                "- arc {} ({}): {} to {}, species {}",
                arc.label,
                arc.extension,
                arc.endpoints[0],
                arc.endpoints[1],
                species_text(&arc.species)
            );
        }
        for ep in &self.boundary.endpoints {
            if let Some(gr) = &ep.graph {
                let _ = writeln!(
                    s,
                    "- {}: {} vertices of genus {}, {} edges",
                    ep.name,
                    gr.vertices.len(),
                    gr.vertices.first().map_or(0, |v| v.genus),
                    gr.edges.len()
                );
            } else {
                let _ = writeln!(
                    s,
                    "- {}: {}, |Aut| = {}{}",
                    ep.name,
                    ep.equation.as_deref().unwrap_or("-"),
                    ep.aut_order.unwrap_or(0),
                    ep.aut_group
                        .as_ref()
                        .map(|a| format!(" ({a})"))
                        .unwrap_or_default()
                );
            }
        }
        let _ = writeln!(
            s,
            "- closed Jordan curve: {}",
            yes(self.boundary.jordan_curve)
        );

        s.push_str(&self.exceptional.to_markdown());

        let _ = writeln!(s, "\n## Expected vs computed\n\n| quantity | expected | computed | agrees |\n|---|---|---|---|");
        for c in &self.comparisons {
            let _ = writeln!(
                s,
                "| {} | {} | {} | {} |",
                c.quantity,
                c.expected,
                c.computed,
                c.agrees.map_or("undecided", yes)
            );
        }
        s
    }
}

fn tag_text(t: &TaggedSignature) -> String {
    serde_json::to_value(t.tag)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}

impl ExceptionalSection {
    pub fn to_markdown(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "\n## Exceptional search (order {})\n\n{} built-in and {} ingested group(s); complete: {}.\n",
            self.order,
            self.builtin_groups,
            self.ingested_groups,
            yes(self.complete)
        );
        for w in &self.warnings {
            let _ = writeln!(s, "> warning: {w}\n");
        }
        if self.candidates.is_empty() {
            let _ = writeln!(s, "No candidate actions.");
        }
        for c in &self.candidates {
            let _ = writeln!(
                s,
                "- `{}` on {}: `{}` ({} vectors)",
                c.signature, c.group, c.class.representative, c.class.size
            );
        }
        s
    }
}

impl Atlas {
    pub fn to_markdown(&self) -> String {
        let mut s = String::new();
        for r in &self.reports {
            s.push_str(&r.to_markdown());
            s.push('\n');
        }
        let m = &self.summary;
        let _ = writeln!(
            s,
            "# Summary\n\n- genera: {:?}\n- sporadic genera: {:?}\n- of which unlisted: {:?}\n- extra uniparametric family: {:?}\n- exceptional surfaces: {:?}\n- disagreements with expected values: {}",
            m.genera,
            m.sporadic_genera,
            m.unlisted_sporadic_genera,
            m.extra_uniparametric_family,
            m.exceptional_surfaces,
            m.disagreements.len()
        );
        for (g, q) in &m.disagreements {
            let _ = writeln!(s, "  - genus {g}: {q}");
        }
        s
    }
}
