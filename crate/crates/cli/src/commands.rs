use std::fs;
use std::path::Path;

use graycat::computads::{free_sesquicategory, funny_symmetry, funny_tensor, funny_unit, retract_computad, validate_computad, Basic2, FUNNY_MAX_BLOCKS};
use graycat::constructions::{cell1_named, cell2_named, cell3_named, is_gray_groupoid, two_of};
use graycat::equivalence::{check_tetrahedra, complete_adjoint_biequivalence, complete_t, is_adjoint_biequivalence, t_candidates, AdjointBiequivalence};
use graycat::model::{classify, hom_bijection_check, is_cofibrant, CofibrancyInput, Flag, Morphism};
use graycat::nerve::{counit_spotcheck, kan_check_nerve, nerve, pi3_presentation};
use graycat::path_object::{path_object, path_object_report};
use graycat::replacement::{comonad_check, counit_is_trivial_fibration, enumerate_cells, underlying_is_free, Base, Q};
use graycat::simplicial::{boundary, build_gn, delta, horn_set, kan_check, validate_simplicial_map, validate_sset, SimplicialSet};
use graycat::text;
use graycat::{validate_category, validate_gray_category, validate_gray_functor, validate_sesquicategory, validate_two_category};
use graycat::{Error, GrayCategory, Result, TwoCategory, ValidationReport};

use crate::report::Report;
use crate::{AdjointCommand, Cli, Command, SimplexSource};

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io { path: path.display().to_string(), message: e.to_string() })
}

fn write_output(cli: &Cli, report: &mut Report, text: &str) -> Result<()> {
    if let Some(p) = &cli.output {
        fs::write(p, text).map_err(|e| Error::Io { path: p.display().to_string(), message: e.to_string() })?;
        report.put("output", p.display());
    }
    Ok(())
}

fn load_gray(path: &Path) -> Result<GrayCategory> {
    let g = text::parse_gray(&read(path)?)?;
    require_valid("input", validate_gray_category(&g)?)?;
    Ok(g)
}

/// Inputs must be valid before any construction runs.
fn require_valid(what: &str, r: ValidationReport) -> Result<()> {
    if r.is_valid() {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{what} is not valid: {}", r.violations[0])))
    }
}

fn validation(report: &mut Report, kind: &str, r: ValidationReport) {
    report.put("kind", kind);
    report.put("violations", r.violations.len());
    for (i, v) in r.violations.iter().enumerate().take(32) {
        report.put(&format!("violation.{i}"), v);
    }
    if !r.is_valid() {
        report.fail("valid", false);
    } else {
        report.put("valid", true);
    }
}

fn flag(report: &mut Report, key: &str, f: &Flag) {
    report.put(key, f.holds);
    if let Some(d) = &f.detail {
        report.put(&format!("{key}.detail"), d);
    }
}

fn counts(report: &mut Report, key: &str, n: &[usize]) {
    report.put(key, n.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(","));
}

fn sset_counts(x: &SimplicialSet) -> Vec<usize> {
    (0..=x.top()).map(|n| x.count(n)).collect()
}

/// A Gray-category name, or `#k` for the k-th cell.
fn cell(g: &GrayCategory, dim: usize, name: &str) -> Result<usize> {
    let len = [g.cells1.len(), g.cells2.len(), g.cells3.len()][dim - 1];
    if let Some(k) = name.strip_prefix('#') {
        return k.parse().ok().filter(|&k| k < len).ok_or_else(|| Error::Unknown(name.to_string()));
    }
    match dim {
        1 => cell1_named(g, name),
        2 => cell2_named(g, name),
        _ => cell3_named(g, name),
    }
}

pub fn run(cli: &Cli, report: &mut Report) -> Result<()> {
    let b = cli.bounds;
    let (bound_path, bound_word, budget, maxdim) = (b.bound_path as usize, b.bound_word as usize, b.budget as usize, b.maxdim as usize);
    match &cli.command {
        Command::Validate { file } => {
            let src = read(file)?;
            match src.lines().next().unwrap_or("") {
                "gray-category" => validation(report, "gray-category", validate_gray_category(&text::parse_gray(&src)?)?),
                "category" => validation(report, "category", validate_category(&text::parse_category(&src)?)?),
                "sesquicategory" | "2-category" => {
                    let (s, two) = text::parse_sesquicategory(&src)?;
                    if two {
                        validation(report, "2-category", validate_two_category(&TwoCategory(s))?);
                    } else {
                        validation(report, "sesquicategory", validate_sesquicategory(&s)?);
                    }
                }
                "gray-morphism" => {
                    let (dom, cod, f) = text::parse_gray_morphism(&src)?;
                    let mut r = validate_gray_category(&dom)?;
                    r.extend(validate_gray_category(&cod)?);
                    if r.is_valid() {
                        r.extend(validate_gray_functor(&f, &dom, &cod)?);
                    }
                    validation(report, "gray-morphism", r);
                }
                "computad" => validation(report, "computad", validate_computad(&text::parse_computad(&src)?)?),
                "simplicial-set" => validation(report, "simplicial-set", validate_sset(&text::parse_sset(&src)?)?),
                other => return Err(Error::Parse { line: 1, message: format!("unknown header `{other}`") }),
            }
        }
        Command::Classify { file } => {
            let (dom, cod, f) = text::parse_gray_morphism(&read(file)?)?;
            let mut r = validate_gray_category(&dom)?;
            r.extend(validate_gray_category(&cod)?);
            require_valid("morphism", r)?;
            require_valid("functor", validate_gray_functor(&f, &dom, &cod)?)?;
            let v = classify(Morphism { f: &f, dom: &dom, cod: &cod });
            flag(report, "weak_equivalence", &v.weak_equivalence);
            flag(report, "fibration", &v.fibration);
            flag(report, "trivial_fibration", &v.trivial_fibration);
            flag(report, "adjoint_biequiv_lifting", &v.adjoint_biequiv_lifting);
            report.assert("trivial_iff_weq_and_fibration", &v.consistent().then_some(()).ok_or_else(|| "verdicts disagree".to_string()));
            let agree = v.fibration.holds == v.adjoint_biequiv_lifting.holds;
            report.assert("fibration_definitions_agree", &agree.then_some(()).ok_or_else(|| "(ii) and (ii*) disagree".to_string()));
        }
        Command::PathObject { file } => {
            let g = load_gray(file)?;
            let r = path_object_report(&g)?;
            counts(report, "cells", &r.cells);
            report.assert("diagonal", &r.diagonal);
            report.assert("d_weak_equivalence", &r.d_weak_equivalence);
            report.assert("pp_fibration", &r.pp_fibration);
            report.assert("p_weak_equivalence", &r.p_weak_equivalence);
            report.assert("p2_weak_equivalence", &r.p2_weak_equivalence);
            report.assert("classifiers", &r.classifiers);
            if let Some(c) = &r.groupoid {
                report.assert("groupoid", c);
            }
            if cli.output.is_some() {
                write_output(cli, report, &text::print_gray(&path_object(&g)?.pb))?;
            }
        }
        Command::Nerve { file } => {
            let g = load_gray(file)?;
            let n = nerve(&g)?;
            counts(report, "simplices", &sset_counts(&n.sset));
            counts(report, "nondegenerate", &(0..=n.sset.top()).map(|d| n.sset.nondegenerate(d).len()).collect::<Vec<_>>());
            let v = validate_sset(&n.sset)?;
            report.assert("valid", &if v.is_valid() { Ok(()) } else { Err(v.to_string()) });
            write_output(cli, report, &text::print_sset(&n.sset))?;
        }
        Command::KanCheck(source) => {
            let (x, gray) = simplex_source(source)?;
            counts(report, "simplices", &sset_counts(&x));
            let r = match &gray {
                Some(g) => {
                    let n = nerve(g)?;
                    report.put("method", "nerve fillers");
                    kan_check_nerve(&n, maxdim, budget)?
                }
                None => {
                    report.put("method", "search");
                    kan_check(&x, maxdim, budget)?
                }
            };
            report.put("horns", r.horns);
            match &r.unfillable {
                None => report.put("kan", true),
                Some((h, why)) => {
                    report.fail("kan", false);
                    report.put("unfillable", h.describe(&x));
                    if *why != h.describe(&x) {
                        report.put("unfillable.detail", why);
                    }
                }
            }
        }
        Command::CofibrantReplace { file } => {
            let a = load_gray(file)?;
            let ix = a.index();
            let qa = Q::new(Base { gray: &a, index: &ix });
            let cells = enumerate_cells(&qa, bound_word);
            counts(report, "cells_within_bound", &[cells.ones.len(), cells.twos.len(), cells.threes.len()]);
            report.assert("q_trivial_fibration", &counit_is_trivial_fibration(&a, bound_word));
            report.assert("underlying_is_free", &underlying_is_free(&a, bound_word));
            let c = is_cofibrant(&CofibrancyInput::Replacement(&a), bound_word)?;
            report.put("cofibrant", c.cofibrant);
            if let Some(v) = &c.computad {
                report.put("computad_generators", v.generators.len());
                write_output(cli, report, &text::print_computad(v))?;
            }
        }
        Command::ComonadCheck { file } => {
            let a = load_gray(file)?;
            let r = comonad_check(&a, bound_word);
            counts(report, "cells_checked", &r.cells_checked);
            report.assert("comonad_laws", &if r.holds() { Ok(()) } else { Err(r.failures.join("\n")) });
        }
        Command::Pi3(source) => {
            let (x, _) = simplex_source(source)?;
            let p = pi3_presentation(&x)?;
            counts(report, "generators", &[p.objects.len(), p.ones.len(), p.twos.len(), p.threes.len()]);
            report.put("relations", p.relations.len());
            if cli.format == crate::Format::Human {
                for (k, g) in p.twos.iter().enumerate() {
                    report.put(&format!("two.{k}"), &g.name);
                }
                for (k, r) in p.relations.iter().enumerate() {
                    report.put(&format!("relation.{k}"), &r.text);
                }
            }
        }
        Command::CounitCheck { file } => {
            let g = load_gray(file)?;
            if let (false, Some(w)) = is_gray_groupoid(&g) {
                return Err(Error::Precondition(format!("not a Gray-groupoid: {w}")));
            }
            let n = nerve(&g)?;
            let r = counit_spotcheck(&n, bound_word)?;
            counts(report, "generators", &[r.objects, r.ones, r.twos, r.threes]);
            report.put("words", r.words);
            report.put("rewrite_steps", r.rewrite_steps);
            report.put("pairs", r.pairs);
            report.put("relations", r.relations);
            report.assert("counit", &if r.holds() { Ok(()) } else { Err(r.failures.join("\n")) });
        }
        Command::FunnyTensor { left, right } => {
            let a = text::parse_category(&read(left)?)?;
            let c = text::parse_category(&read(right)?)?;
            require_valid("left", validate_category(&a)?)?;
            require_valid("right", validate_category(&c)?)?;
            report.put("max_blocks", FUNNY_MAX_BLOCKS);
            let (t, _) = funny_tensor(&a, &c, FUNNY_MAX_BLOCKS)?;
            counts(report, "tensor", &[t.objects.len(), t.arrows.len()]);
            let v = validate_category(&t)?;
            report.assert("valid", &if v.is_valid() { Ok(()) } else { Err(v.to_string()) });
            let unit = funny_unit(&a).map(|_| ()).map_err(|e| e.to_string());
            report.assert("unit", &unit);
            let sym = funny_symmetry(&a, &c).map(|_| ()).map_err(|e| e.to_string());
            report.assert("symmetry", &sym);
            write_output(cli, report, &text::print_category(&t))?;
        }
        Command::FreeSesqui { file, cell: cells } => {
            let g = text::parse_computad(&read(file)?)?;
            require_valid("computad", validate_computad(&g)?)?;
            let h = free_sesquicategory(&g);
            let paths = h.paths(bound_path);
            let cost = |b: &Basic2<usize>| 1 + b.left.len() + b.right.len();
            let mut twos = 0;
            let mut bad = None;
            for p in &paths {
                for q in h.path2s_within(p, bound_path, cost) {
                    twos += 1;
                    let parts = h.decompose(&q);
                    let round = h.recompose(q.source.clone(), &parts).ok();
                    let pi: usize = parts.iter().map(|b| h.totally_indecomposable_factor(b)).map(|(l, _, r)| l.len() + r.len()).sum();
                    if round.as_ref() != Some(&q) || pi != h.pi_measure(&q) {
                        bad.get_or_insert_with(|| text::path2_text(&g, &q));
                    }
                }
            }
            counts(report, "cells_within_bound", &[paths.len(), twos]);
            report.assert("unique_factorization", &bad.map_or(Ok(()), |c| Err(format!("fails on {c}"))));
            for (k, c) in cells.iter().enumerate() {
                let p = text::parse_path2_text(&g, 1, c)?;
                report.put(&format!("cell.{k}"), text::path2_text(&g, &p));
                report.put(&format!("cell.{k}.target"), g.path_name(&h.target(&p)?));
                report.put(&format!("cell.{k}.factors"), p.len());
                report.put(&format!("cell.{k}.pi"), h.pi_measure(&p));
            }
        }
        Command::RetractComputad { computad, endomorphism } => {
            let g = text::parse_computad(&read(computad)?)?;
            require_valid("computad", validate_computad(&g)?)?;
            let e = text::parse_endomorphism(&g, &read(endomorphism)?)?;
            let r = retract_computad(&g, &e, bound_path)?;
            counts(report, "computad", &[r.computad.vertices.len(), r.computad.edges.len(), r.computad.generators.len()]);
            for t in r.pi_traces.iter().take(16).enumerate() {
                report.put(&format!("pi_trace.{}", t.0), t.1.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(","));
            }
            require_valid("retract computad", validate_computad(&r.computad)?)?;
            write_output(cli, report, &text::print_computad(&r.computad))?;
            if cli.output.is_none() && cli.format == crate::Format::Human {
                report.put("result", text::print_computad(&r.computad).trim_end());
            }
        }
        Command::AdjointBiequiv(AdjointCommand::Complete { file, f, g: k, eps }) => {
            let g = load_gray(file)?;
            let ix = g.index();
            let (f, k, eps) = (cell(&g, 1, f)?, cell(&g, 1, k)?, cell(&g, 2, eps)?);
            let (eta, s) = complete_adjoint_biequivalence(&g, &ix, f, k, eps)?;
            let n = t_candidates(&g, &ix, f, k, eta, eps, s).len();
            report.put("eta", g.name2(eta));
            report.put("s", g.name3(s));
            report.put("t_candidates", n);
            let t = complete_t(&g, &ix, f, k, eta, eps, s)?;
            report.put("t", g.name3(t));
            let ab = AdjointBiequivalence { f, g: k, eta, eps, s, t };
            tetrahedra(report, &g, &ab)?;
        }
        Command::AdjointBiequiv(AdjointCommand::Check { file, f, g: k, eta, eps, s, t }) => {
            let g = load_gray(file)?;
            let ab = AdjointBiequivalence {
                f: cell(&g, 1, f)?,
                g: cell(&g, 1, k)?,
                eta: cell(&g, 2, eta)?,
                eps: cell(&g, 2, eps)?,
                s: cell(&g, 3, s)?,
                t: cell(&g, 3, t)?,
            };
            tetrahedra(report, &g, &ab)?;
            let ok = is_adjoint_biequivalence(&g, &g.index(), &ab);
            report.assert("adjoint_biequivalence", &ok.then_some(()).ok_or_else(|| "not an adjoint biequivalence".to_string()));
        }
        Command::TwoOf { file, against } => {
            let (s, _) = text::parse_sesquicategory(&read(file)?)?;
            let x = TwoCategory(s);
            require_valid("input", validate_two_category(&x)?)?;
            let t = two_of(&x);
            counts(report, "cells", &[t.objects.len(), t.cells1.len(), t.cells2.len(), t.cells3.len()]);
            let v = validate_gray_category(&t)?;
            report.assert("valid", &if v.is_valid() { Ok(()) } else { Err(v.to_string()) });
            if let Some(p) = against {
                let g = load_gray(p)?;
                let (ok, functors, triples) = hom_bijection_check(&g, &x, budget)?;
                report.put("functors", functors);
                report.put("triples", triples);
                report.assert("representable", &ok.then_some(()).ok_or_else(|| "restriction is not a bijection".to_string()));
            }
            write_output(cli, report, &text::print_gray(&t))?;
        }
        Command::Gn { n } => {
            let inc = build_gn(*n)?;
            counts(report, "dom", &sset_counts(&inc.dom));
            counts(report, "cod", &sset_counts(&inc.cod));
            let mut r = validate_sset(&inc.dom)?;
            r.extend(validate_sset(&inc.cod)?);
            r.extend(validate_simplicial_map(&inc.map, &inc.dom, &inc.cod)?);
            report.assert("valid", &if r.is_valid() { Ok(()) } else { Err(r.to_string()) });
            write_output(cli, report, &text::print_sset(&inc.cod))?;
        }
    }
    Ok(())
}

fn tetrahedra(report: &mut Report, g: &GrayCategory, ab: &AdjointBiequivalence) -> Result<()> {
    let r = check_tetrahedra(g, ab)?;
    let first = if r.first { Ok(()) } else { Err(format!("composite {}", g.name3(r.first_composite))) };
    let second = if r.second { Ok(()) } else { Err(format!("composite {}", g.name3(r.second_composite))) };
    report.assert("first_tetrahedron", &first);
    report.assert("second_tetrahedron", &second);
    Ok(())
}

/// The simplicial set named on the command line, with the Gray-groupoid
/// behind it when it is a nerve.
fn simplex_source(s: &SimplexSource) -> Result<(SimplicialSet, Option<GrayCategory>)> {
    if let Some(n) = s.delta {
        return Ok((delta(n)?, None));
    }
    if let Some(n) = s.boundary {
        return Ok((boundary(n)?, None));
    }
    if let Some(h) = &s.horn {
        return Ok((horn_set(h[0], h[1])?, None));
    }
    let path = s.file.as_ref().expect("clap requires one source");
    let src = read(path)?;
    if src.starts_with("gray-category\n") {
        let g = load_gray(path)?;
        let n = nerve(&g)?;
        return Ok((n.sset, Some(g)));
    }
    let x = text::parse_sset(&src)?;
    require_valid("simplicial set", validate_sset(&x)?)?;
    Ok((x, None))
}
