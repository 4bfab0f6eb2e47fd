//! Small diagram shapes.

use std::sync::Arc;

use crate::category::{CatBuilder, FinCat};
use crate::error::{Error, Result};

pub const SHAPE_NAMES: &[&str] = &[
    "terminal",
    "discrete2",
    "discrete3",
    "arrow",
    "parallel",
    "span",
    "cospan",
];

fn free(name: &str, objects: &[&str], arrows: &[(&str, usize, usize)]) -> Arc<FinCat> {
    let mut b = CatBuilder::new(name);
    let ids: Vec<_> = objects.iter().map(|o| b.object(*o).expect("distinct names")).collect();
    for (n, s, t) in arrows {
        b.morphism(*n, ids[*s], ids[*t]).expect("distinct names");
    }
    // None of these shapes has composable non-identity pairs.
    Arc::new(b.build_with(|_, _| None).expect("shape is a category"))
}

pub fn discrete(k: usize) -> Arc<FinCat> {
    let names: Vec<String> = (0..k).map(|i| format!("d{i}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    free(&format!("discrete{k}"), &refs, &[])
}

/// Look a shape up by name; `discreteK` works for any `K`.
pub fn shape(name: &str) -> Result<Arc<FinCat>> {
    Ok(match name {
        "terminal" => free("terminal", &["t"], &[]),
        "arrow" => free("arrow", &["s", "t"], &[("f", 0, 1)]),
        "parallel" => free("parallel", &["s", "t"], &[("f", 0, 1), ("g", 0, 1)]),
        "span" => free("span", &["l", "c", "r"], &[("p", 1, 0), ("q", 1, 2)]),
        "cospan" => free("cospan", &["l", "c", "r"], &[("p", 0, 1), ("q", 2, 1)]),
        other => match other.strip_prefix("discrete").and_then(|k| k.parse().ok()) {
            Some(k) => discrete(k),
            None => return Err(Error::unknown("shape", other)),
        },
    })
}

/// The chain `c0 -> c1 -> .. -> c(n-1)` as a thin category.
pub fn chain(n: usize) -> Arc<FinCat> {
    let mut b = CatBuilder::new(format!("chain{n}"));
    let objs: Vec<_> = (0..n).map(|i| b.object(format!("c{i}")).expect("distinct")).collect();
    let mut arrows = vec![vec![None; n]; n];
    for i in 0..n {
        arrows[i][i] = Some(b.identity(objs[i]));
        for j in i + 1..n {
            arrows[i][j] = Some(b.morphism(format!("c{i}_c{j}"), objs[i], objs[j]).expect("distinct"));
        }
    }
    let ends: Vec<(usize, usize)> = {
        let mut e = vec![(0, 0); b.num_morphisms()];
        for (i, row) in arrows.iter().enumerate() {
            for (j, m) in row.iter().enumerate() {
                if let Some(m) = m {
                    e[m.0] = (i, j);
                }
            }
        }
        e
    };
    Arc::new(
        b.build_with(|g, f| arrows[ends[f.0].0][ends[g.0].1])
            .expect("chain is a category"),
    )
}
