//! Property suites behind `--check`. Each suite counts the cases it tried
//! and records every violation verbatim.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::actions::{braid_move, canonical_vector, classify, equivalent, kernel_genus};
use crate::error::Result;
use crate::extensions::{build_extensions, Kind};
use crate::groups::{catalog, dihedral, extension_group_a, extension_group_b, FiniteGroup};
use crate::realforms::{centralizer_images, count_ovals, symmetry_type};
use crate::report::{report, ReportOptions};
use crate::signatures::enumerate_4g_signatures;

#[derive(Debug, Clone, Serialize)]
pub struct Suite {
    pub name: &'static str,
    pub cases: usize,
    pub violations: Vec<String>,
}

impl Suite {
    fn new(name: &'static str) -> Self {
        Suite {
            name,
            cases: 0,
            violations: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.violations.push(what());
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub genus: u64,
    pub suites: Vec<Suite>,
}

impl CheckReport {
    pub fn violations(&self) -> usize {
        self.suites.iter().map(|s| s.violations.len()).sum()
    }
}

/// Exhaustive group axioms on the table: closure into range, identity,
/// inverses, associativity.
pub fn group_axioms(name: &str, g: &FiniteGroup, suite: &mut Suite) {
    let n = g.order();
    let e = g.identity();
    let mut ok = true;
    'outer: for a in g.elements() {
        if g.mul(a, e) != a || g.mul(e, a) != a || g.mul(a, g.inv(a)) != e {
            ok = false;
            break;
        }
        for b in g.elements() {
            let ab = g.mul(a, b);
            if ab >= n {
                ok = false;
                break 'outer;
            }
            for c in g.elements() {
                if g.mul(ab, c) != g.mul(a, g.mul(b, c)) {
                    ok = false;
                    break 'outer;
                }
            }
        }
    }
    suite.check(ok, || format!("{name} fails the group axioms"));
}

fn braid_suite(g: u64, seed: u64) -> Result<Suite> {
    let mut s = Suite::new("braid-orbit invariance");
    let canon = canonical_vector(g)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ g);
    let mut v = canon.clone();
    for step in 0..64 {
        let i = rng.gen_range(1..v.elements().len());
        v = braid_move(&v, i)?;
        let grp = v.group();
        let product = grp.product(v.elements().iter().copied());
        s.check(product == grp.identity(), || {
            format!("step {step}: product ≠ 1")
        });
        let orders_ok = v
            .elements()
            .iter()
            .zip(v.periods())
            .all(|(&x, &m)| grp.elem_order(x) == m);
        s.check(orders_ok, || format!("step {step}: orders changed"));
        s.check(
            grp.subgroup_generated(v.elements()).order() == grp.order(),
            || format!("step {step}: no longer generates"),
        );
        s.check(equivalent(&v, &canon), || {
            format!("step {step}: {v} left the orbit of {canon}")
        });
    }
    let classes = classify(canon.group(), canon.periods());
    s.check(classes.len() == 1, || {
        format!("{} classes on [2,2,2,{}]", classes.len(), 2 * g)
    });
    Ok(s)
}

fn kernel_suite(g: u64) -> Suite {
    let mut s = Suite::new("kernel-genus integrality");
    for t in enumerate_4g_signatures(g) {
        let r = kernel_genus(4 * g, &t.signature);
        s.check(matches!(r, Ok(h) if h == g), || {
            format!("{}: kernel genus {r:?}", t.signature)
        });
    }
    s
}

/// Harnack bounds, centralizer containment and class-function checks on
/// every extension.
fn realform_suites(g: u64) -> Result<(Suite, Suite)> {
    let mut harnack = Suite::new("Harnack constraints");
    let mut cent = Suite::new("centralizer-image containment");
    for kind in [Kind::A, Kind::B] {
        for e in build_extensions(g, kind)? {
            let grp = &e.group;
            for c in symmetry_type(&e)? {
                let sp = c.species.expect("filled");
                harnack.check(sp.satisfies_harnack(g), || {
                    format!("{}: species {sp}", e.label)
                });
                // oval count is a class function
                for x in grp.elements().step_by(7) {
                    let mut moved = c.clone();
                    moved.representative = grp.conj(x, c.representative);
                    let k = count_ovals(&e, &moved)?;
                    cent.check(Some(k) == c.ovals, || {
                        format!("{}: ovals change under conjugation of {}", e.label, c.label)
                    });
                }
            }
            let chain = e.reflection_chain();
            for (j, h) in centralizer_images(&e)?.iter().enumerate() {
                let c = grp.centralizer(chain[j]);
                cent.check(h.is_subgroup_of(&c) && c.order() % h.order() == 0, || {
                    format!("{}: θ*(C(Γ*, c{j})) ⊄ C(G*, θ*(c{j}))", e.label)
                });
            }
        }
    }
    Ok((harnack, cent))
}

/// Report JSON under a one-thread pool and under `threads` workers.
pub fn determinism(g: u64, opts: &ReportOptions, threads: usize) -> Result<Suite> {
    let mut s = Suite::new("deterministic output");
    let render = |n: usize| -> Result<String> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| crate::error::Error::Unsupported(e.to_string()))?;
        let r = pool.install(|| report(g, opts))?;
        Ok(serde_json::to_string(&r).expect("report serializes"))
    };
    let one = render(1)?;
    let many = render(threads.max(2))?;
    s.check(one == many, || {
        "JSON differs between 1 and N workers".to_string()
    });
    Ok(s)
}

/// Every suite for one genus.
pub fn run_checks(g: u64, opts: &ReportOptions, threads: usize) -> Result<CheckReport> {
    let mut axioms = Suite::new("group axioms");
    let mut groups = vec![
        ("D2g".to_string(), dihedral(4 * g)?),
        ("G* (kind a)".to_string(), extension_group_a(g)?),
        ("G* (kind b)".to_string(), extension_group_b(g)?),
    ];
    if (4 * g) as usize <= opts.max_order.min(64) {
        for (i, h) in catalog((4 * g) as usize)?.groups.into_iter().enumerate() {
            groups.push((format!("catalog[{i}] {}", h.tag()), h));
        }
    }
    for (name, h) in &groups {
        group_axioms(name, h, &mut axioms);
    }
    let (harnack, cent) = realform_suites(g)?;
    Ok(CheckReport {
        genus: g,
        suites: vec![
            axioms,
            braid_suite(g, 0x5eed)?,
            kernel_suite(g),
            harnack,
            cent,
            determinism(g, opts, threads)?,
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clean_for_small_genera() {
        for g in [2, 3, 5] {
            let r = run_checks(g, &ReportOptions::default(), 4).unwrap();
            assert_eq!(r.violations(), 0, "{r:?}");
            assert!(r.suites.iter().all(|s| s.cases > 0));
        }
    }

    #[test]
    fn axioms_accept_a_valid_table() {
        let c3 = crate::groups::from_table("order 3\n0 1 2\n1 2 0\n2 0 1\n").unwrap();
        let mut s = Suite::new("t");
        group_axioms("C3", &c3, &mut s);
        assert_eq!((s.cases, s.violations.len()), (1, 0));
    }
}
