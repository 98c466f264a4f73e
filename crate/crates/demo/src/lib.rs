//! Browser bindings: an arc diagram viewer, a step-by-step view of the
//! bijection and its inverse, and the triangular filling encodings.
//!
//! Each export takes a partition of `{0,…,n-1}` as text, either partition
//! JSON or blocks separated by `|` such as `0 4 8 15 | 1 3 10 | 2 11`
//! (unlisted points up to the largest one become singletons), and returns a
//! JSON string for the page to unpack.

mod svg;

use std::collections::BTreeSet;

use kncross::fillings::{longest_proper_se_chain, map_c, map_e, map_f};
use kncross::{
    arcs, class_flags, max_chain, phi, phi_inv, ChainKind, ColoredDiagram, Convention, Mode,
    SetPartition,
};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use svg::Highlight;

pub fn parse_partition(text: &str) -> Result<SetPartition, String> {
    let text = text.trim();
    if text.starts_with('{') && text.contains("\"blocks\"") {
        return serde_json::from_str(text).map_err(|e| e.to_string());
    }
    let cleaned = text.replace('{', " ").replace(['}', ';'], "|");
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for chunk in cleaned.split('|') {
        let block = chunk
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| format!("not a number: `{t}`"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if !block.is_empty() {
            blocks.push(block);
        }
    }
    let n = blocks.iter().flatten().max().map_or(0, |m| m + 1);
    let seen: BTreeSet<usize> = blocks.iter().flatten().copied().collect();
    blocks.extend((0..n).filter(|i| !seen.contains(i)).map(|i| vec![i]));
    SetPartition::new(n, blocks, Convention::ZeroBased).map_err(|e| e.to_string())
}

fn blocks_text(p: &SetPartition) -> String {
    p.blocks()
        .iter()
        .map(|b| {
            b.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join(" | ")
}

fn diagram(p: &SetPartition) -> Result<ColoredDiagram, String> {
    ColoredDiagram::of_partition(p).map_err(|e| e.to_string())
}

pub fn describe(text: &str, k: usize) -> Result<Value, String> {
    let p = parse_partition(text)?;
    let flags = class_flags(&p, k).map_err(|e| e.to_string())?;
    let set = arcs(&p);
    let stat = |mode, kind| max_chain(set.arcs(), mode, kind);
    let (cross, witness) = stat(Mode::Crossing, ChainKind::Enhanced);
    let hl = Highlight {
        marked: witness
            .iter()
            .flat_map(|w| w.arcs.iter().copied())
            .collect(),
        ..Highlight::default()
    };
    Ok(json!({
        "blocks": blocks_text(&p),
        "partition": p,
        "svg": svg::arc_diagram(&diagram(&p)?, &hl),
        "in_nc": flags.in_nc,
        "in_nw": flags.in_nw,
        "in_bnw": flags.in_bnw,
        "crossing": stat(Mode::Crossing, ChainKind::Strict).0,
        "enhanced_crossing": cross,
        "nesting": stat(Mode::Nesting, ChainKind::Strict).0,
        "enhanced_nesting": stat(Mode::Nesting, ChainKind::Enhanced).0,
        "witness": witness,
    }))
}

pub fn steps(text: &str, k: usize, inverse: bool) -> Result<Value, String> {
    let p = parse_partition(text)?;
    let (q, trace) =
        if inverse { phi_inv(&p, k) } else { phi(&p, k) }.map_err(|e| e.to_string())?;
    let mut frames = vec![json!({
        "caption": "input",
        "svg": svg::arc_diagram(&diagram(&p)?, &Highlight::default()),
    })];
    for (i, s) in trace.steps.iter().enumerate() {
        let kind = serde_json::to_value(s.kind).map_err(|e| e.to_string())?;
        let crossing: BTreeSet<_> = s.crossing.iter().copied().collect();
        frames.push(json!({
            "caption": format!("step {}: {} at {}, selected arcs", i + 1, kind.as_str().unwrap_or(""), s.node),
            "svg": svg::arc_diagram(&s.before, &Highlight { marked: crossing, ..Highlight::default() }),
        }));
        frames.push(json!({
            "caption": format!("step {}: rewired arcs", i + 1),
            "svg": svg::arc_diagram(&s.after, &Highlight { added: s.added.iter().copied().collect(), ..Highlight::default() }),
        }));
    }
    frames.push(json!({
        "caption": "result",
        "svg": svg::arc_diagram(&diagram(&q)?, &Highlight::default()),
    }));
    Ok(json!({ "frames": frames, "result": blocks_text(&q), "steps": trace.len() }))
}

pub fn fillings(text: &str) -> Result<Value, String> {
    let p = parse_partition(text)?;
    let c = map_c(&p).map_err(|e| e.to_string())?;
    let e = map_e(&p);
    let (comp, g) = map_f(&c).map_err(|e| e.to_string())?;
    let view = |f: &kncross::TriangularFilling| {
        let chain = longest_proper_se_chain(f);
        json!({ "svg": svg::filling(f, &chain), "chain": chain.len(), "ones": f.ones() })
    };
    Ok(json!({
        "c": view(&c),
        "e": view(&e),
        "composition": comp.parts(),
        "compressed": view(&g),
    }))
}

fn to_js(v: Result<Value, String>) -> Result<String, JsError> {
    v.map(|v| v.to_string()).map_err(|e| JsError::new(&e))
}

/// Arc diagram, class membership and chain statistics.
#[wasm_bindgen]
pub fn describe_partition(text: &str, k: usize) -> Result<String, JsError> {
    to_js(describe(text, k))
}

/// Frames of the forward (`inverse = false`) or inverse bijection.
#[wasm_bindgen]
pub fn bijection_frames(text: &str, k: usize, inverse: bool) -> Result<String, JsError> {
    to_js(steps(text, k, inverse))
}

/// Both filling encodings and the compressed filling with its composition.
#[wasm_bindgen]
pub fn filling_views(text: &str) -> Result<String, JsError> {
    to_js(fillings(text))
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str = "0 4 8 15 | 1 3 10 | 2 11 | 5 16 | 6 13 | 7 9 12 14";

    #[test]
    fn parses_block_text_and_json() {
        let p = parse_partition(EXAMPLE).unwrap();
        assert_eq!(p.n(), 17);
        assert_eq!(blocks_text(&p), EXAMPLE);
        let q = parse_partition("{0,2},{1,3}").unwrap();
        assert_eq!(q.blocks(), &[vec![0, 2], vec![1, 3]]);
        let r = parse_partition("0 3").unwrap();
        assert_eq!(r.blocks(), &[vec![0, 3], vec![1], vec![2]]);
        let j = parse_partition(&serde_json::to_string(&p).unwrap()).unwrap();
        assert_eq!(j, p);
        assert!(parse_partition("0 x").is_err());
        assert!(parse_partition("0 1 | 1 2").is_err());
    }

    #[test]
    fn describes_example() {
        let v = describe(EXAMPLE, 3).unwrap();
        assert_eq!(v["in_bnw"], true);
        assert_eq!(v["in_nc"], false);
        assert_eq!(v["crossing"], 3);
        let svg = v["svg"].as_str().unwrap();
        assert!(svg.starts_with("<svg") && svg.ends_with("</svg>"));
        assert_eq!(svg.matches("<path").count(), 11);
    }

    #[test]
    fn forward_and_back() {
        let v = steps(EXAMPLE, 3, false).unwrap();
        assert_eq!(v["steps"], 3);
        assert_eq!(v["frames"].as_array().unwrap().len(), 2 + 2 * 3);
        let result = v["result"].as_str().unwrap();
        assert_eq!(result, "0 4 8 13 | 1 3 11 | 2 15 | 5 16 | 6 10 | 7 9 12 14");
        let back = steps(result, 3, true).unwrap();
        assert_eq!(back["result"], EXAMPLE);
        assert!(steps("0 2 | 1 3", 2, true).is_err());
    }

    #[test]
    fn filling_views_match_encodings() {
        let v = fillings("0 4 7 | 1 | 2 6 | 3 8 | 5").unwrap();
        assert_eq!(v["c"]["ones"], json!([[4, 1], [6, 3], [7, 5], [8, 4]]));
        assert_eq!(v["c"]["chain"], 3);
        assert!(v["composition"].as_array().is_some());
        assert!(fillings("").is_err());
    }
}
