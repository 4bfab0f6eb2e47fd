//! Resolving the command-line input: a DSL file or a named instance.

use std::path::Path;
use std::sync::Arc;

use hetcat::adjunction::{Adjunction, AdjunctionData};
use hetcat::dsl::{parse, CheckKind, Diagnostic, SourceSpec};
use hetcat::het::HetBifunctor;
use hetcat::instances::{load, Instance};
use hetcat::{Capacity, FinCat};
use thiserror::Error;

/// Input problems; all of them exit with code 2.
#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot read `{path}`: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("`{0}` does not parse")]
    Parse(String, Vec<Diagnostic>),
    #[error("give either an input file or --instance")]
    NoInput,
    #[error("{0}")]
    Build(#[from] hetcat::Error),
    #[error("{0}")]
    Other(String),
}

/// A loaded input: parsed declarations or a named instance.
pub enum Source {
    File { spec: SourceSpec },
    Instance(Instance),
}

pub fn load_source(file: Option<&Path>, instance: Option<&str>, cap: Capacity) -> Result<Source, InputError> {
    match (file, instance) {
        (Some(p), None) => {
            let text = std::fs::read_to_string(p).map_err(|source| InputError::Read {
                path: p.display().to_string(),
                source,
            })?;
            parse_source(&text, &p.display().to_string())
        }
        (None, Some(name)) => Ok(Source::Instance(load(name, cap)?)),
        _ => Err(InputError::NoInput),
    }
}

/// Parse source text; `label` names it in the error.
pub fn parse_source(text: &str, label: &str) -> Result<Source, InputError> {
    let spec = parse(text).map_err(|d| InputError::Parse(label.to_string(), d))?;
    Ok(Source::File { spec })
}

/// The het-bifunctor a command works on: `name` if given, else the target
/// of the first `check adjunction from het`, else the first het declared.
pub fn het_of(src: &Source, name: Option<&str>) -> Result<Arc<HetBifunctor>, InputError> {
    match src {
        Source::Instance(Instance::Het(h)) => Ok(h.clone()),
        Source::Instance(other) => Err(InputError::Other(format!("instance is a {}, not a het-bifunctor", other.kind()))),
        Source::File { spec, .. } => {
            let pick = name
                .map(str::to_string)
                .or_else(|| {
                    spec.checks()
                        .find(|c| c.kind == CheckKind::Adjunction)
                        .map(|c| c.target.text.clone())
                })
                .or_else(|| spec.hets().next().map(|h| h.name.text.clone()))
                .ok_or_else(|| InputError::Other("the file declares no het-bifunctor".into()))?;
            Ok(Arc::new(spec.het(&pick)?))
        }
    }
}

/// The category a command works on: `name`, else the first declared.
pub fn category_of(src: &Source, name: Option<&str>) -> Result<Arc<FinCat>, InputError> {
    match src {
        Source::Instance(Instance::Category(c)) => Ok(c.clone()),
        Source::Instance(Instance::Het(h)) => Ok(h.source().clone()),
        Source::Instance(Instance::Adjunction(d)) => Ok(d.left.source().clone()),
        Source::File { spec, .. } => {
            let pick = name
                .map(str::to_string)
                .or_else(|| spec.categories().next().map(|c| c.name.text.clone()))
                .ok_or_else(|| InputError::Other("the file declares no category".into()))?;
            Ok(spec.category(&pick)?)
        }
    }
}

/// An adjunction from an adjunction instance, or synthesized from a het.
/// `Err(Ok(failure))` carries a synthesis failure, which is semantic.
pub fn adjunction_of(
    src: &Source,
    name: Option<&str>,
) -> Result<Result<Adjunction, hetcat::adjunction::SynthesisFailure>, InputError> {
    if let Source::Instance(Instance::Adjunction(d)) = src {
        return Ok(Ok(adjunction_from_data(d.clone())?));
    }
    let het = het_of(src, name)?;
    Ok(hetcat::adjunction::synthesize_adjunction(&het))
}

pub fn adjunction_from_data(d: AdjunctionData) -> Result<Adjunction, InputError> {
    Ok(Adjunction::new(d)?)
}

pub fn capacity(max_objects: Option<usize>) -> Capacity {
    max_objects.map_or_else(Capacity::default, Capacity::with_max_objects)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instances_load() {
        let src = load_source(None, Some("hom:finset:1"), capacity(None)).unwrap();
        assert_eq!(het_of(&src, None).unwrap().source().num_objects(), 2);
        assert!(matches!(load_source(None, None, capacity(None)), Err(InputError::NoInput)));
        assert!(load_source(None, Some("finset:3"), capacity(Some(2))).is_err());
    }

    #[test]
    fn het_selection_prefers_checked_het() {
        let dir = std::env::temp_dir().join(format!("hetcat-input-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("two.hc");
        std::fs::write(
            &path,
            "category P { objects: p; }\n\
             het A : P -/-> P { cell (p, p): a; }\n\
             het B : P -/-> P { cell (p, p): b1, b2; }\n\
             check adjunction from het A;\n",
        )
        .unwrap();
        let src = load_source(Some(&path), None, capacity(None)).unwrap();
        assert_eq!(het_of(&src, None).unwrap().name(), "A");
        assert_eq!(het_of(&src, Some("B")).unwrap().name(), "B");
        assert!(het_of(&src, Some("C")).is_err());
        std::fs::remove_dir_all(dir).unwrap();
    }
}
