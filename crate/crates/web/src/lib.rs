//! Browser bindings. Each operation takes plain strings and returns a run
//! report as JSON, the same report the command line writes with `--json`.

use hetcat::Capacity;
use hetcat_cli::commands::{self, DotKind};
use hetcat_cli::input::{parse_source, InputError, Source};
use hetcat_cli::report::{Inputs, RunReport};
use wasm_bindgen::prelude::*;

fn source(text: &str, instance: &str) -> Result<Source, InputError> {
    if instance.is_empty() {
        parse_source(text, "input")
    } else {
        hetcat_cli::input::load_source(None, Some(instance), Capacity::default())
    }
}

fn run(
    command: &str,
    text: &str,
    instance: &str,
    body: impl FnOnce(&mut RunReport, &Source) -> Result<(), InputError>,
) -> String {
    let inputs = Inputs {
        instance: (!instance.is_empty()).then(|| instance.to_string()),
        ..Inputs::default()
    };
    let mut r = RunReport::new(command, inputs);
    let result = source(text, instance).and_then(|src| body(&mut r, &src));
    if let Err(e) = result {
        if let InputError::Parse(_, d) = &e {
            r.diagnostics = d.clone();
        }
        r.error(e.to_string());
    }
    r.finish();
    r.to_json()
}

/// Run every law check on a document (or a named instance when
/// `instance` is non-empty).
#[wasm_bindgen]
pub fn check(text: &str, instance: &str) -> String {
    run("check", text, instance, commands::check)
}

/// Synthesize the adjunction of a het-bifunctor; the `gentzen` artifact
/// lists every transposition.
#[wasm_bindgen]
pub fn adjoint(text: &str, instance: &str) -> String {
    let pacioli = instance == "pacioli:demo";
    run("adjoint", text, instance, |r, src| {
        commands::adjoint(r, src, None, true, pacioli).map(|_| ())
    })
}

/// Graphviz DOT for `kind` = `category`, `square` or `het-square`.
#[wasm_bindgen]
pub fn emit_dot(text: &str, instance: &str, kind: &str) -> String {
    let kind = match kind {
        "square" => DotKind::Square,
        "het-square" => DotKind::HetSquare,
        _ => DotKind::Category,
    };
    run("emit-dot", text, instance, |r, src| {
        commands::emit_dot(r, src, None, kind, None).map(|_| ())
    })
}

/// Names and one-line descriptions of the built-in instances, one per line.
#[wasm_bindgen]
pub fn instances() -> String {
    hetcat::instances::CATALOG
        .iter()
        .map(|e| format!("{}\t{}\n", e.pattern, e.summary))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parsed(json: &str) -> RunReport {
        RunReport::from_json(json).unwrap()
    }

    #[test]
    fn check_reports_diagnostics() {
        let r = parsed(&check("category C { objects: a b; }", ""));
        assert_eq!(r.status.exit_code(), 2);
        assert_eq!(r.diagnostics.len(), 1);
        let r = parsed(&check("category C { objects: a, b; }", ""));
        assert_eq!(r.status.exit_code(), 0);
    }

    #[test]
    fn adjoint_of_instance() {
        let r = parsed(&adjoint("", "product-het:1"));
        assert_eq!(r.status.exit_code(), 0);
        assert!(r.artifacts.iter().any(|a| a.name == "gentzen"));
    }

    #[test]
    fn dot_of_text() {
        let r = parsed(&emit_dot("category T { objects: t; }", "", "category"));
        let dot = &r.artifacts.iter().find(|a| a.name == "dot").unwrap().text;
        assert_eq!(hetcat::render::dot_counts(dot), (1, 0));
        assert!(instances().contains("pacioli:demo"));
    }
}
