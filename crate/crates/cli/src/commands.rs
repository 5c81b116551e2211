use std::fs;
use std::path::Path;
use std::sync::Arc;

use serde_json::{json, Value};

use catcov_core::cover::{orbit_category, CoveringFunctor, GroupAction};
use catcov_core::dot::{ball_dot, category_dot, category_dot_marked};
use catcov_core::frac::{
    pi1_unsimplified, pi1_unsimplified_presented, tietze_simplify, Simplified, Verdict,
};
use catcov_core::grading::{
    associated_grading, is_effective, roundtrip_iso, smash_product, ObjectSection,
};
use catcov_core::io::{
    self, ball_file, category_file, covering_report, covering_report_of, group_table,
    groupoid_file, map_record, pi1_dump, to_json, LoadedCategory,
};
use catcov_core::universal::universal_ball;
use catcov_core::Error;

use crate::{Cli, CliError, Command, Outcome, Status};

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Validate { file } => validate(file),
        Command::Pi1 {
            file,
            base,
            max_tietze,
        } => pi1(cli, file, base, *max_tietze),
        Command::Abelianize {
            file,
            base,
            max_tietze,
        } => abelianize(file, base.as_deref(), *max_tietze),
        Command::CoverCheck { functor } => cover_check(functor),
        Command::GaloisCheck { functor } => galois_check(functor),
        Command::Orbit { action } => orbit(action),
        Command::Smash { grading, point } => smash(grading, point),
        Command::Effective { grading } => effective(grading),
        Command::Grade { action, section } => grade(action, section),
        Command::Roundtrip {
            action,
            section,
            point,
        } => roundtrip(action, section, point.as_deref()),
        Command::Universal { file, base, radius } => universal(file, base, *radius),
        Command::Dot { file } => dot(file),
    }
}

fn outcome(report: &Value, summary: String, status: Status) -> Outcome {
    Outcome {
        report: to_json(report),
        dot: None,
        summary,
        status,
    }
}

fn validate(path: &Path) -> Result<Outcome, CliError> {
    let text = fs::read_to_string(path).map_err(|e| Error::Format(format!("{}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&text).map_err(|e| Error::Format(e.to_string()))?;
    let format = value.get("format").and_then(Value::as_str).unwrap_or("");
    let report = match format {
        io::CATEGORY_FORMAT => match io::parse_category(&text)? {
            LoadedCategory::Explicit(c) => json!({
                "format": format,
                "valid": true,
                "mode": "explicit",
                "objects": c.object_count(),
                "morphisms": c.arrow_count(),
                "connected": c.is_connected(),
            }),
            LoadedCategory::Presented(p) => json!({
                "format": format,
                "valid": true,
                "mode": "presented",
                "objects": p.quiver().objects().len(),
                "morphisms": p.quiver().arrows().len(),
                "relations": p.relations().len(),
            }),
        },
        io::FUNCTOR_FORMAT => {
            let f = io::load_functor(path)?;
            json!({
                "format": format,
                "valid": true,
                "source_objects": f.source().object_count(),
                "target_objects": f.target().object_count(),
            })
        }
        io::ACTION_FORMAT => {
            let a = io::load_action(path)?;
            json!({
                "format": format,
                "valid": true,
                "order": a.group().order(),
                "free": a.is_free(),
            })
        }
        other => return Err(CliError::Usage(format!("unknown format {other:?}"))),
    };
    Ok(outcome(&report, format!("{}: valid", path.display()), Status::Ok))
}

fn simplified(path: &Path, base: &str, max_tietze: usize) -> Result<Simplified, CliError> {
    let raw = match io::load_category(path)? {
        LoadedCategory::Explicit(c) => pi1_unsimplified(&c, base)?,
        LoadedCategory::Presented(p) => pi1_unsimplified_presented(&p, base)?,
    };
    Ok(tietze_simplify(&raw, max_tietze))
}

fn pi1(cli: &Cli, path: &Path, base: &str, max_tietze: usize) -> Result<Outcome, CliError> {
    let s = simplified(path, base, max_tietze)?;
    let dump = pi1_dump(&s.presentation, s.exhausted, &cli.budget(max_tietze));
    let status = if s.exhausted || dump.trivial == Verdict::Unknown {
        Status::Unknown
    } else {
        Status::Ok
    };
    let summary = format!(
        "pi1 at {base}: {} generators, {} relators, rank {}, torsion {:?}",
        dump.generators.len(),
        dump.relators.len(),
        dump.abelian.rank,
        dump.abelian.torsion
    );
    Ok(Outcome {
        report: to_json(&dump),
        dot: None,
        summary,
        status,
    })
}

fn abelianize(path: &Path, base: Option<&str>, max_tietze: usize) -> Result<Outcome, CliError> {
    let base = match base {
        Some(b) => b.to_string(),
        None => io::load_category(path)?
            .object_names()
            .first()
            .cloned()
            .ok_or(Error::NotConnected)?,
    };
    let s = simplified(path, &base, max_tietze)?;
    let inv = catcov_core::frac::abelianize(&s.presentation);
    let report = json!({
        "format": "catcov-abelian/1",
        "base": base,
        "rank": inv.rank,
        "torsion": inv.torsion,
    });
    let summary = format!("abelianization: rank {}, torsion {:?}", inv.rank, inv.torsion);
    Ok(outcome(&report, summary, Status::Ok))
}

fn cover_check(path: &Path) -> Result<Outcome, CliError> {
    let f = io::load_functor(path)?;
    let report = covering_report(&f);
    let status = if report.covering { Status::Ok } else { Status::False };
    let summary = if report.covering {
        "covering: yes".to_string()
    } else {
        format!("covering: no ({})", report.star_check)
    };
    Ok(Outcome {
        report: to_json(&report),
        dot: None,
        summary,
        status,
    })
}

fn galois_check(path: &Path) -> Result<Outcome, CliError> {
    let f = io::load_functor(path)?;
    let report = covering_report(&f);
    let status = if report.galois { Status::Ok } else { Status::False };
    let summary = format!("galois: {}", if report.galois { "yes" } else { "no" });
    Ok(Outcome {
        report: to_json(&report),
        dot: None,
        summary,
        status,
    })
}

fn orbit(path: &Path) -> Result<Outcome, CliError> {
    let action = io::load_action(path)?;
    let (quotient, projection) = match orbit_category(&action) {
        Ok(r) => r,
        Err(Error::ActionNotFree(why)) => {
            let report = json!({ "free": false, "reason": why });
            return Ok(outcome(&report, format!("action is not free: {why}"), Status::False));
        }
        Err(e) => return Err(e.into()),
    };
    let report = json!({
        "free": true,
        "category": category_file(&quotient),
        "projection": map_record(projection.functor()),
        "covering": covering_report_of(&projection),
    });
    Ok(Outcome {
        report: to_json(&report),
        dot: Some(category_dot(&quotient)),
        summary: format!(
            "orbit category: {} objects, {} morphisms",
            quotient.object_count(),
            quotient.arrow_count()
        ),
        status: Status::Ok,
    })
}

fn smash(path: &Path, point: &str) -> Result<Outcome, CliError> {
    let x = io::load_grading(path)?;
    let gcat = x.groupoid().category();
    let x0 = gcat.object(point).ok_or_else(|| Error::NoSuchObject(point.to_string()))?;
    let s = smash_product(&x, x0)?;
    let cat = s.category();
    let report = json!({
        "category": category_file(cat),
        "projection": map_record(s.covering().functor()),
        "covering": covering_report_of(s.covering()),
        "vertex_group": group_table(s.action().group()),
    });
    Ok(Outcome {
        report: to_json(&report),
        dot: Some(category_dot(cat)),
        summary: format!(
            "smash at {point}: {} objects, {} morphisms, {} components",
            cat.object_count(),
            cat.arrow_count(),
            cat.connected_components().len()
        ),
        status: Status::Ok,
    })
}

fn effective(path: &Path) -> Result<Outcome, CliError> {
    let x = io::load_grading(path)?;
    let (effective, reason) = match is_effective(&x) {
        Ok(true) => (true, None),
        Ok(false) => (false, Some("smash product is not connected".to_string())),
        Err(e @ (Error::NotBijectiveOnObjects | Error::TargetNotConnected | Error::NotConnected)) => {
            (false, Some(e.to_string()))
        }
        Err(e) => return Err(e.into()),
    };
    let report = json!({ "effective": effective, "reason": reason });
    let status = if effective { Status::Ok } else { Status::False };
    let summary = format!("effective: {}", if effective { "yes" } else { "no" });
    Ok(outcome(&report, summary, status))
}

fn section_for(
    projection: &CoveringFunctor,
    action: &GroupAction,
    names: &[String],
) -> Result<ObjectSection, CliError> {
    Ok(if names.is_empty() {
        ObjectSection::least(projection, action)?
    } else {
        ObjectSection::from_names(projection, action, names)?
    })
}

fn grade(path: &Path, section: &[String]) -> Result<Outcome, CliError> {
    let action = io::load_action(path)?;
    let (quotient, projection) = orbit_category(&action)?;
    let s = section_for(&projection, &action, section)?;
    let a = associated_grading(&projection, &action, &s)?;
    let total = projection.total();
    let report = json!({
        "orbit_category": category_file(&quotient),
        "groupoid": groupoid_file(a.grading.groupoid()),
        "grading": map_record(a.grading.functor()),
        "section": s.representatives().iter().map(|&r| total.object_name(r)).collect::<Vec<_>>(),
    });
    Ok(outcome(
        &report,
        format!("associated grading of {} orbit arrows", quotient.arrow_count()),
        Status::Ok,
    ))
}

fn roundtrip(path: &Path, section: &[String], point: Option<&str>) -> Result<Outcome, CliError> {
    let action = io::load_action(path)?;
    let (quotient, projection) = orbit_category(&action)?;
    let s = section_for(&projection, &action, section)?;
    let q = match point {
        Some(p) => quotient.object(p).ok_or_else(|| Error::NoSuchObject(p.to_string()))?,
        None => 0,
    };
    let rt = roundtrip_iso(&projection, &action, &s, q)?;
    let report = json!({
        "isomorphism": true,
        "effective": rt.effective,
        "smash": category_file(rt.smash.category()),
        "iso": map_record(&rt.iso),
    });
    Ok(Outcome {
        report: to_json(&report),
        dot: Some(category_dot(rt.smash.category())),
        summary: format!(
            "round trip: isomorphism on {} objects",
            rt.smash.category().object_count()
        ),
        status: Status::Ok,
    })
}

fn universal(path: &Path, base: &str, radius: usize) -> Result<Outcome, CliError> {
    let cat = Arc::new(io::load_finite(path)?);
    let ball = match universal_ball(&cat, base, radius) {
        Ok(b) => b,
        Err(Error::BudgetOrNonFree(n)) => {
            let report = json!({ "free": false, "relators": n });
            return Ok(outcome(
                &report,
                format!("fundamental group is not free ({n} relators remain)"),
                Status::Unknown,
            ));
        }
        Err(e) => return Err(e.into()),
    };
    let c = ball.category();
    Ok(Outcome {
        report: to_json(&ball_file(&ball)),
        dot: Some(ball_dot(&ball)),
        summary: format!(
            "ball of radius {radius}: {} objects, {} morphisms, {} on the boundary",
            c.object_count(),
            c.arrow_count(),
            ball.boundary().iter().filter(|&&b| b).count()
        ),
        status: Status::Ok,
    })
}

fn dot(path: &Path) -> Result<Outcome, CliError> {
    let text = fs::read_to_string(path).map_err(|e| Error::Format(format!("{}: {e}", path.display())))?;
    let file = io::parse_category_file(&text)?;
    let cat = file.build()?.to_finite()?;
    let boundary = file.boundary.clone().unwrap_or_default();
    let dot = category_dot_marked(&cat, &boundary);
    Ok(Outcome {
        report: dot.clone(),
        dot: Some(dot),
        summary: format!("{} nodes, {} edges", cat.object_count(), cat.arrow_count()),
        status: Status::Ok,
    })
}
