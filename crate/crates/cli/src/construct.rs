use std::fs;
use std::path::Path;

use hilbcat::dagcat::{
    compose, dagger, factor as factor_mor, identity, is_dagger_epi, is_dagger_mono, is_mono,
};
use hilbcat::fixture::{Fixture, FixtureSpec};
use hilbcat::functors::ScalarExtension;
use hilbcat::{FactorKind, Factorization, HMorphism};
use serde::Serialize;

use crate::{ExtendArgs, FactorArgs, Failure};

fn load(path: &Path) -> Result<Fixture, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Fixture::parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(Failure::from),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct FactorEntry {
    kind: String,
    fixture: FixtureSpec,
}

#[derive(Serialize)]
struct FactorOutput {
    source: String,
    factorizations: Vec<FactorEntry>,
    transcript: Vec<String>,
}

/// Records one check and whether it held.
fn log(transcript: &mut Vec<String>, ok: &mut bool, what: String, holds: bool) {
    *ok &= holds;
    transcript.push(format!("{what}: {}", if holds { "ok" } else { "FAILED" }));
}

fn check_factorization(
    f: &HMorphism,
    fac: &Factorization,
    transcript: &mut Vec<String>,
) -> hilbcat::Result<bool> {
    let kind = fac.kind;
    let mut ok = true;
    log(transcript, &mut ok, format!("{kind}: composite equals f"), fac.composite()? == *f);
    match kind {
        FactorKind::DaggerEpiThenMono => {
            let eed = compose(&fac.epi, &dagger(&fac.epi)?)? == identity(fac.epi.cod());
            log(transcript, &mut ok, format!("{kind}: e∘e† = id"), eed);
            log(transcript, &mut ok, format!("{kind}: m is monic"), is_mono(&fac.mono)?);
        }
        FactorKind::EpiThenDaggerMono => {
            let mdm = compose(&dagger(&fac.mono)?, &fac.mono)? == identity(fac.mono.dom());
            log(transcript, &mut ok, format!("{kind}: m†∘m = id"), mdm);
        }
        FactorKind::PolarTriple => {
            log(transcript, &mut ok, format!("{kind}: e is a dagger epi"), is_dagger_epi(&fac.epi)?);
            let u = fac.middle.as_ref().expect("polar factorizations have a middle");
            let iso = u.mat().is_square() && u.mat().rank()? == u.dom().dim();
            log(transcript, &mut ok, format!("{kind}: u is invertible"), iso);
            log(transcript, &mut ok, format!("{kind}: i is a dagger mono"), is_dagger_mono(&fac.mono)?);
        }
    }
    Ok(ok)
}

pub fn factor(args: &FactorArgs) -> Result<(), Failure> {
    let fixture = load(&args.input)?;
    let selected: Vec<(&String, &HMorphism)> = match &args.morphism {
        Some(name) => match fixture.morphisms.get_key_value(name) {
            Some(entry) => vec![entry],
            None => return Err(Failure::Usage(format!("no morphism named `{name}`"))),
        },
        None => fixture.morphisms.iter().collect(),
    };
    if selected.is_empty() {
        return Err(Failure::Usage("fixture has no morphisms".into()));
    }
    let mut outputs = Vec::new();
    let mut all_ok = true;
    for (name, f) in selected {
        let mut transcript = Vec::new();
        let mut factorizations = Vec::new();
        for kind in FactorKind::ALL {
            let fac = factor_mor(f, kind)?;
            all_ok &= check_factorization(f, &fac, &mut transcript)?;
            let mut named = vec![("e", &fac.epi), ("m", &fac.mono)];
            if let Some(u) = &fac.middle {
                named.insert(1, ("u", u));
            }
            factorizations.push(FactorEntry {
                kind: kind.to_string(),
                fixture: Fixture::of_morphisms(&named).to_spec()?,
            });
        }
        outputs.push(FactorOutput { source: name.clone(), factorizations, transcript });
    }
    let mut text = serde_json::to_string_pretty(&outputs).expect("factor output serializes");
    text.push('\n');
    emit(args.out.as_deref(), &text)?;
    if all_ok {
        Ok(())
    } else {
        Err(Failure::Properties)
    }
}

pub fn extend(args: &ExtendArgs) -> Result<(), Failure> {
    let ext = ScalarExtension::by_name(&args.hom)?;
    let hom = ext.hom();
    if !hom.source().is_field() || !hom.target().is_field() {
        return Err(Failure::Usage(format!(
            "`{}` maps {} to {}; extension of Gram-matrix fixtures needs fields on both sides",
            args.hom,
            hom.source(),
            hom.target()
        )));
    }
    let fixture = load(&args.input)?;
    let mut extended = Fixture::default();
    for (name, x) in &fixture.objects {
        extended.objects.insert(name.clone(), ext.extend_object(x)?);
    }
    let mut ok = true;
    for (name, f) in &fixture.morphisms {
        let image = ext.extend_mor(f)?;
        let of_adjoint = ext.extend_mor(&dagger(f)?)?;
        let holds = dagger(&image)? == of_adjoint;
        ok &= holds;
        eprintln!(
            "{name}: extension of the adjoint equals adjoint of the extension: {}",
            if holds { "ok" } else { "FAILED" }
        );
        extended.morphisms.insert(name.clone(), image);
    }
    emit(args.out.as_deref(), &format!("{}\n", extended.to_json()?))?;
    if ok {
        Ok(())
    } else {
        Err(Failure::Properties)
    }
}
