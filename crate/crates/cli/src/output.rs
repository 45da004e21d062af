//! Rendering of compute results, verdicts, and cache reports.

use clap::ValueEnum;
use jack_core::checks::Verdict;
use jack_core::format::{basis_label, poly_to_terms, render_expansion, render_poly, JsonCoeff, TermJson};
use jack_core::symmetric::{expansion_json, Basis};
use jack_core::MPoly;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Latex,
}

#[derive(Serialize)]
struct PolyDoc<'a> {
    kind: &'a str,
    lambda: &'a [u32],
    n: usize,
    alpha: Option<&'a str>,
    terms: Vec<TermJson>,
}

pub fn polynomial<C: JsonCoeff>(kind: &str, lambda: &[u32], alpha: Option<&str>, f: &MPoly<C>, fmt: Format) -> String {
    match fmt {
        Format::Json => serde_json::to_string(&PolyDoc {
            kind,
            lambda,
            n: f.nvars(),
            alpha,
            terms: poly_to_terms(f),
        })
        .expect("serializable"),
        Format::Text => render_poly(f, false),
        Format::Latex => render_poly(f, true),
    }
}

fn label(basis: Basis, split: usize, mu: &[u32], latex: bool) -> String {
    let name = match (basis, latex) {
        (Basis::Monomial, _) => "m".to_string(),
        (Basis::Augmented, false) => "m~".to_string(),
        (Basis::Augmented, true) => "\\tilde{m}".to_string(),
        (Basis::Partial, false) => format!("m~({split})"),
        (Basis::Partial, true) => format!("\\tilde{{m}}^{{({split})}}"),
    };
    basis_label(&name, mu, latex)
}

pub fn expansion<C: JsonCoeff>(
    lambda: &[u32],
    basis: Basis,
    split: usize,
    entries: &[(Vec<u32>, C)],
    fmt: Format,
) -> String {
    match fmt {
        Format::Json => serde_json::to_string(&expansion_json(lambda, basis, entries)).expect("serializable"),
        Format::Text | Format::Latex => {
            let latex = fmt == Format::Latex;
            render_expansion(entries.iter().map(|(mu, c)| (label(basis, split, mu, latex), c)), latex)
        }
    }
}

pub fn verdicts(list: &[Verdict], fmt: Format) -> String {
    match fmt {
        Format::Json => serde_json::to_string(list).expect("serializable"),
        Format::Text => list
            .iter()
            .map(|v| match &v.counterexample {
                None => format!("PASS {}: {} cases; {}", v.check, v.checked, v.theorem),
                Some(c) => format!("FAIL {}: {c}; {}", v.check, v.theorem),
            })
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Latex => {
            let mut out = String::from("\\begin{tabular}{llr}\ncheck & result & cases \\\\\n\\hline\n");
            for v in list {
                let result = if v.pass { "pass" } else { "fail" };
                out.push_str(&format!("\\texttt{{{}}} & {result} & {} \\\\\n", v.check, v.checked));
            }
            out.push_str("\\end{tabular}");
            out
        }
    }
}

#[derive(Serialize)]
pub struct CacheStats {
    pub entries: usize,
    pub terms: usize,
    pub by_n: Vec<CacheStatsRow>,
}

#[derive(Serialize)]
pub struct CacheStatsRow {
    pub n: usize,
    pub entries: usize,
    pub terms: usize,
}

pub fn cache_stats(stats: &CacheStats, fmt: Format) -> String {
    match fmt {
        Format::Json => serde_json::to_string(stats).expect("serializable"),
        Format::Text | Format::Latex => {
            let mut lines = vec![format!("entries: {}", stats.entries), format!("terms: {}", stats.terms)];
            for row in &stats.by_n {
                lines.push(format!("n={}: {} entries, {} terms", row.n, row.entries, row.terms));
            }
            lines.join("\n")
        }
    }
}

/// A one-field JSON report or its sentence form.
pub fn report(key: &str, value: usize, sentence: String, fmt: Format) -> String {
    match fmt {
        Format::Json => serde_json::json!({ key: value }).to_string(),
        Format::Text | Format::Latex => sentence,
    }
}
