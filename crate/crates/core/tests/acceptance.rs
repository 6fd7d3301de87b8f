//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Run with `cargo test -p fourg-core --test acceptance`.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_rational::Ratio;

use fourg::actions::{classify, eliminate_cases, equivalent, GeneratingVector, Verdict};
use fourg::boundary::{boundary_description, nodal_graph, Endpoint};
use fourg::check::run_checks;
use fourg::extensions::{
    build_extensions, in_unique_class, restrict_to_index2, ExtendedAction, Kind, Label,
};
use fourg::groups::{catalog, dihedral, recognize, Structure};
use fourg::realforms::{centralizer_images, check_centralizer_guards, symmetry_type};
use fourg::report::{exceptional_section, ReportOptions};
use fourg::signatures::{
    enumerate_4g_signatures, sporadic_genera, FamilyTag, LISTED_SPORADIC_GENERA,
};
use fourg::Elem;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Brute force: sorted period tuples over divisors of 4g with
/// Σ(1 − 1/m) − 2 = (g − 1)/(2g).
fn oracle_signatures(g: u64) -> BTreeSet<Vec<u64>> {
    let n = 4 * g as i64;
    let divs: Vec<i64> = (2..=n).filter(|d| n % d == 0).collect();
    let target = Ratio::new(g as i64 - 1, 2 * g as i64);
    let term = |m: i64| Ratio::from_integer(1) - Ratio::new(1, m);
    let mut out = BTreeSet::new();
    for (i, &a) in divs.iter().enumerate() {
        for (j, &b) in divs.iter().enumerate().skip(i) {
            for (k, &c) in divs.iter().enumerate().skip(j) {
                let s3 = term(a) + term(b) + term(c) - 2;
                if s3 == target {
                    out.insert(vec![a as u64, b as u64, c as u64]);
                }
                for &d in &divs[k..] {
                    if s3 + term(d) == target {
                        out.insert(vec![a as u64, b as u64, c as u64, d as u64]);
                    }
                }
            }
        }
    }
    out
}

fn criterion1() -> Outcome {
    let mut notes = Vec::new();
    for g in [2u64, 3, 4, 5, 7, 8] {
        let got = enumerate_4g_signatures(g);
        let got_periods: BTreeSet<Vec<u64>> = got
            .iter()
            .map(|t| t.signature.finite_periods().expect("finite"))
            .collect();
        let oracle = oracle_signatures(g);
        ensure(got_periods == oracle, || {
            format!("g={g}: library {got_periods:?} vs oracle {oracle:?}")
        })?;
        ensure(got_periods.len() == got.len(), || {
            format!("g={g}: duplicate signatures")
        })?;
        let n = 4 * g;
        let mut families = vec![
            (vec![2, n, n], FamilyTag::Family1),
            (vec![4, 4, 2 * g], FamilyTag::Family3),
            (vec![2, 2, 2, 2 * g], FamilyTag::Family4),
        ];
        if n % 3 == 0 && n % 6 == 0 {
            families.push((vec![3, 6, 2 * g], FamilyTag::Family2));
        }
        if g == 3 {
            families.push((vec![2, 2, 3, 3], FamilyTag::QuadrupleExceptional));
            families.push((vec![3, 4, 12], FamilyTag::Sporadic));
        }
        for (mut p, tag) in families {
            p.sort_unstable();
            let hit = got
                .iter()
                .find(|t| t.signature.finite_periods().as_ref() == Some(&p));
            ensure(hit.is_some_and(|t| t.tag == tag), || {
                format!("g={g}: {p:?} missing or not tagged {tag:?}")
            })?;
        }
        let sporadic: Vec<String> = got
            .iter()
            .filter(|t| t.tag == FamilyTag::Sporadic)
            .map(|t| t.signature.to_string())
            .collect();
        if !sporadic.is_empty() {
            notes.push(format!("g={g} sporadic {}", sporadic.join(" ")));
        }
    }
    Ok(notes.join("; "))
}

fn criterion2() -> Outcome {
    let start = Instant::now();
    let genera = sporadic_genera(861);
    let elapsed = start.elapsed();
    let missing: Vec<u64> = LISTED_SPORADIC_GENERA
        .iter()
        .copied()
        .filter(|g| !genera.contains(g))
        .collect();
    ensure(missing.is_empty(), || {
        format!("missing listed genera {missing:?}")
    })?;
    let extras: Vec<u64> = genera
        .iter()
        .copied()
        .filter(|g| !LISTED_SPORADIC_GENERA.contains(g))
        .collect();
    // brute force over every group of order 20
    let cat = catalog(20).map_err(|e| e.to_string())?;
    ensure(cat.is_complete(), || "order-20 catalog incomplete".into())?;
    let mut smooth = 0;
    for h in &cat.groups {
        let fives: Vec<Elem> = h.elements().filter(|&x| h.elem_order(x) == 5).collect();
        for &a in &fives {
            for &b in &fives {
                let c = h.inv(h.mul(a, b));
                if h.elem_order(c) == 5 && h.subgroup_generated(&[a, b]).order() == 20 {
                    smooth += 1;
                }
            }
        }
    }
    ensure(smooth == 0, || {
        format!("{smooth} smooth (5,5,5) vectors in order 20")
    })?;
    let total = start.elapsed();
    ensure(total < Duration::from_secs(60), || {
        format!("took {total:?}")
    })?;
    Ok(format!(
        "33 listed genera present; extras {extras:?}; no (5,5,5) action in {} groups of order 20; {elapsed:?}",
        cat.groups.len()
    ))
}

/// `(A, D^{g+1} A, D^g, D)` built directly.
fn expected_vector(g: u64) -> GeneratingVector {
    let d = dihedral(4 * g).unwrap();
    let a = d.gen("A").unwrap();
    let r = d.gen("D").unwrap();
    let x2 = d.mul(d.pow(r, g as i64 + 1), a);
    GeneratingVector::new(&d, &[2, 2, 2, 2 * g], &[a, x2, d.pow(r, g as i64), r]).unwrap()
}

fn criterion3() -> Outcome {
    for g in 2..=10u64 {
        let d = dihedral(4 * g).map_err(|e| e.to_string())?;
        let classes = classify(&d, &[2, 2, 2, 2 * g]);
        ensure(classes.len() == 1, || {
            format!("g={g}: {} classes", classes.len())
        })?;
        ensure(
            equivalent(&classes[0].representative, &expected_vector(g)),
            || {
                format!(
                    "g={g}: representative {} not equivalent to the expected vector",
                    classes[0].representative
                )
            },
        )?;
    }
    Ok("one class for g = 2..10".into())
}

fn criterion4() -> Outcome {
    for g in [2u64, 4, 5] {
        let c = eliminate_cases(g, 64).map_err(|e| e.to_string())?;
        let f1 = &c.family1;
        let v = &f1.extension_vector;
        let grp = v.group();
        ensure(
            f1.extension_order == 8 * g as usize && grp.order() == 8 * g as usize,
            || format!("g={g}: family-1 extension has order {}", f1.extension_order),
        )?;
        ensure(
            grp.product(v.elements().iter().copied()) == grp.identity()
                && grp.subgroup_generated(v.elements()).order() == grp.order()
                && v.elements()
                    .iter()
                    .zip(v.periods())
                    .all(|(&x, &m)| grp.elem_order(x) == m),
            || format!("g={g}: family-1 extension vector is not smooth"),
        )?;
        ensure(f1.verdict == Verdict::NotFull, || {
            format!("g={g}: family-1 verdict")
        })?;
        let f2 = &c.family2;
        ensure(
            f2.smooth_vectors == 0 && f2.groups_checked > 0 && f2.verdict == Verdict::NoAction,
            || {
                format!(
                    "g={g}: family-2 found {} vectors in {} groups",
                    f2.smooth_vectors, f2.groups_checked
                )
            },
        )?;
        let f3 = &c.family3;
        ensure(
            f3.swap_automorphism && f3.t_candidates.contains(&(2 * g - 1)),
            || format!("g={g}: no swap automorphism for t = 2g-1"),
        )?;
        ensure(f3.rejected.iter().any(|(t, _)| *t == g - 1), || {
            format!("g={g}: t = g-1 not rejected ({:?})", f3.rejected)
        })?;
        ensure(!f3.rejected.iter().any(|(t, _)| *t == 2 * g - 1), || {
            format!("g={g}: t = 2g-1 rejected")
        })?;
        ensure(f3.extension_order == 8 * g as usize, || {
            format!("g={g}: family-3 extension order")
        })?;
    }
    Ok("g = 2, 4, 5".into())
}

fn criterion5() -> Outcome {
    for g in 2..=10u64 {
        let a = build_extensions(g, Kind::A).map_err(|e| e.to_string())?;
        let b = build_extensions(g, Kind::B).map_err(|e| e.to_string())?;
        ensure(a.len() == 2 && b.len() == 1, || {
            format!("g={g}: {} kind a, {} kind b", a.len(), b.len())
        })?;
        let expected = if g % 2 == 0 {
            Structure::Dihedral {
                order: 8 * g as usize,
            }
        } else {
            Structure::DihedralTimesC2 {
                order: 8 * g as usize,
            }
        };
        let got = recognize(&b[0].group);
        ensure(got == expected, || format!("g={g}: kind b group is {got}"))?;
        for e in a.iter().chain(&b) {
            let v = restrict_to_index2(e).map_err(|e| e.to_string())?;
            ensure(in_unique_class(&v).map_err(|e| e.to_string())?, || {
                format!("g={g}: restriction of {} leaves the class", e.label)
            })?;
        }
    }
    Ok("2 + 1 classes, restrictions in the unique class, g = 2..10".into())
}

fn sorted_ovals(e: &ExtendedAction) -> Result<Vec<u64>, String> {
    let mut v: Vec<u64> = symmetry_type(e)
        .map_err(|x| x.to_string())?
        .iter()
        .map(|c| c.ovals.unwrap())
        .collect();
    v.sort_unstable();
    Ok(v)
}

fn species(e: &ExtendedAction) -> Result<Vec<i64>, String> {
    let mut v: Vec<i64> = symmetry_type(e)
        .map_err(|x| x.to_string())?
        .iter()
        .map(|c| c.species.unwrap().value())
        .collect();
    v.sort_unstable();
    Ok(v)
}

fn sorted(mut v: Vec<i64>) -> Vec<i64> {
    v.sort_unstable();
    v
}

/// The eight centralizer-image identities, written out independently.
fn guard_identities(e: &ExtendedAction) -> Result<(), String> {
    let g = &e.group;
    let (x, w, y) = (
        g.gen("x").unwrap(),
        g.gen("w").unwrap(),
        g.gen("y").unwrap(),
    );
    let dg = g.pow(g.mul(w, x), e.genus as i64);
    let want: [Vec<Elem>; 4] = match e.label {
        Label::Theta1 => [
            vec![x, dg, y],
            vec![x, g.mul(dg, w), y],
            vec![w, dg, y],
            vec![w, dg],
        ],
        _ => [
            vec![x, dg, y],
            vec![x, dg, y],
            vec![w, dg, y],
            vec![w, dg, y],
        ],
    };
    let got = centralizer_images(e).map_err(|x| x.to_string())?;
    for j in 0..4 {
        let expected = g.subgroup_generated(&want[j]);
        ensure(got[j].elements() == expected.elements(), || {
            format!("g={}: {} image of C(Γ*, c{j}) differs", e.genus, e.label)
        })?;
    }
    Ok(())
}

fn criterion6() -> Outcome {
    for g in [4u64, 5] {
        let gi = g as i64;
        let a = build_extensions(g, Kind::A).map_err(|e| e.to_string())?;
        let b = build_extensions(g, Kind::B).map_err(|e| e.to_string())?;
        let (t1, t2) = (&a[0], &a[1]);
        ensure(
            t1.label == Label::Theta1 && t2.label == Label::Theta2,
            || "labels".into(),
        )?;
        let t1_ovals = if g == 4 {
            vec![0, 1, 1, 3]
        } else {
            vec![0, 2, 2, 2]
        };
        ensure(sorted_ovals(t1)? == t1_ovals, || {
            format!("g={g}: θ₁* ovals {:?}", sorted_ovals(t1))
        })?;
        let t1_species = if g == 4 {
            sorted(vec![1, 0, -1, -3])
        } else {
            sorted(vec![2, 0, -2, -2])
        };
        ensure(species(t1)? == t1_species, || {
            format!("g={g}: θ₁* species {:?}", species(t1))
        })?;
        ensure(sorted_ovals(t2)? == vec![1, 1, g, g], || {
            format!("g={g}: θ₂* ovals {:?}", sorted_ovals(t2))
        })?;
        ensure(species(t2)? == sorted(vec![-1, -1, -gi, -gi]), || {
            format!("g={g}: θ₂* species {:?}", species(t2))
        })?;
        let kb = if g == 4 {
            vec![-2]
        } else {
            sorted(vec![0, 0, -2, -2])
        };
        ensure(species(&b[0])? == kb, || {
            format!("g={g}: kind b species {:?}", species(&b[0]))
        })?;
        for e in a.iter().chain(&b) {
            check_centralizer_guards(e).map_err(|x| x.to_string())?;
        }
        guard_identities(t1)?;
        guard_identities(t2)?;
    }
    Ok("ovals, species and centralizer identities for g = 4, 5".into())
}

fn criterion7() -> Outcome {
    for g in 2..=12u64 {
        let v = expected_vector(g);
        let d = nodal_graph(&v, 1).map_err(|e| e.to_string())?;
        let r = nodal_graph(&v, 2).map_err(|e| e.to_string())?;
        let (edges, weight) = if g % 2 == 0 {
            (1, g / 2)
        } else {
            (2, (g - 1) / 2)
        };
        ensure(
            d.vertices.len() == 2
                && d.vertices.iter().all(|x| x.genus == weight)
                && d.edges == vec![[0, 1]; edges],
            || format!("g={g}: G1 = {d:?}"),
        )?;
        ensure(
            r.vertices.len() == 1
                && r.vertices[0].genus == 0
                && r.edges == vec![[0, 0]; g as usize],
            || format!("g={g}: G2 = {r:?}"),
        )?;
        for graph in [&d, &r] {
            let total: i64 = graph
                .vertices
                .iter()
                .map(|x| x.genus as i64 - 1)
                .sum::<i64>()
                + graph.edges.len() as i64
                + 1;
            ensure(total == g as i64, || {
                format!("g={g}: {} total genus {total}", graph.label)
            })?;
        }
        let b = boundary_description(g).map_err(|e| e.to_string())?;
        let ends: Vec<(&str, [Endpoint; 2])> =
            b.arcs.iter().map(|a| (a.label, a.endpoints)).collect();
        ensure(
            ends == vec![
                ("a1", [Endpoint::Dipole, Endpoint::Rose]),
                ("a2", [Endpoint::Rose, Endpoint::Wiman]),
                ("b", [Endpoint::Dipole, Endpoint::Wiman]),
            ] && b.jordan_curve,
            || format!("g={g}: arcs {ends:?}"),
        )?;
        for ep in &b.endpoints {
            if let Some(gr) = &ep.graph {
                ensure(gr.total_genus() == g as i64, || {
                    format!("g={g}: {} genus identity", ep.name)
                })?;
            }
        }
    }
    Ok("dipoles, g-loop roses and the 3-cycle for g = 2..12".into())
}

fn criterion8() -> Outcome {
    let start = Instant::now();
    let three = exceptional_section(3, &[], 120).map_err(|e| e.to_string())?;
    let five = exceptional_section(5, &[], 120).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let on = |p: &[u64]| {
        three
            .candidates
            .iter()
            .filter(|c| c.signature.finite_periods().as_deref() == Some(p))
            .collect::<Vec<_>>()
    };
    ensure(!three.candidates.is_empty(), || {
        "no candidates at g=3".into()
    })?;
    ensure(
        on(&[3, 4, 12])
            .iter()
            .any(|c| recognize(c.class.representative.group()) == Structure::Cyclic { order: 12 }),
        || "no C12 class on [3,4,12]".into(),
    )?;
    ensure(!on(&[2, 2, 3, 3]).is_empty(), || {
        "no class on [2,2,3,3]".into()
    })?;
    ensure(five.candidates.is_empty(), || {
        format!("{} candidates at g=5", five.candidates.len())
    })?;
    ensure(elapsed < Duration::from_secs(30), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "{} candidates at g=3, none at g=5, {elapsed:?}",
        three.candidates.len()
    ))
}

fn criterion9() -> Outcome {
    let opts = ReportOptions::default();
    let mut cases = 0;
    for g in 2..=6u64 {
        let r = run_checks(g, &opts, 4).map_err(|e| e.to_string())?;
        ensure(r.violations() == 0, || {
            let v: Vec<String> = r.suites.iter().flat_map(|s| s.violations.clone()).collect();
            format!("g={g}: {v:?}")
        })?;
        cases += r.suites.iter().map(|s| s.cases).sum::<usize>();
    }
    Ok(format!("{cases} cases, zero violations, g = 2..6"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("signature enumeration", criterion1),
        ("sporadic genus list", criterion2),
        ("uniqueness on [2,2,2,2g]", criterion3),
        ("case eliminations", criterion4),
        ("extended groups", criterion5),
        ("oval counts and symmetry types", criterion6),
        ("boundary", criterion7),
        ("exceptional search", criterion8),
        ("property suites", criterion9),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {}: {name} ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {}: {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
