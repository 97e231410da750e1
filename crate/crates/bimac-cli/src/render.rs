//! Text, CSV, JSON and LaTeX renderings of documents.

use crate::args::Format;
use crate::document::{Document, Term};
use crate::CliError;

pub fn render(doc: &Document, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => Ok(doc.to_json()),
        Format::Text => Ok(text(doc)),
        Format::Csv => csv_rows(doc),
        Format::Latex => Ok(latex(doc)),
    }
}

fn text_terms(out: &mut String, terms: &[Term]) {
    if terms.is_empty() {
        out.push_str("  0\n");
    }
    for t in terms {
        out.push_str(&format!("  [{}]  {}\n", t.label, t.coeff));
    }
}

fn text(doc: &Document) -> String {
    let mut out = String::new();
    match doc {
        Document::Expansion(e) => {
            out.push_str(&format!("{}_{{{}}} in {}:\n", e.family, e.label, e.basis));
            text_terms(&mut out, &e.terms);
        }
        Document::Table(t) => {
            out.push_str(&format!("{}\n", t.title));
            for (row, entries) in t.rows.iter().zip(&t.entries) {
                out.push_str(&format!("{row}:\n"));
                for (col, e) in t.columns.iter().zip(entries) {
                    out.push_str(&format!("  K[{col}] = {e}\n"));
                }
            }
        }
        Document::Nabla(n) => {
            out.push_str(&format!("{} applied to s[∅|{}]:\n", n.operator, n.degree));
            text_terms(&mut out, &n.terms);
            out.push_str(&format!("catalan pairing: {} (at q=t=1: {})\n", n.catalan, n.catalan_at_one));
            out.push_str(&format!("dimension pairing: {} (at q=t=1: {})\n", n.dimension, n.dimension_at_one));
            out.push_str(&format!("sign-row pairing: {}\n", n.sign_row));
        }
        Document::Evaluation(e) => {
            out.push_str(&format!("{} at N = {}, m = {}\n", e.label, e.variables, e.m));
            out.push_str(&format!("  closed:   {}\n  explicit: {}\n", e.closed, e.explicit));
            out.push_str(if e.agree { "  agree\n" } else { "  DISAGREE\n" });
        }
        Document::Report(r) => {
            for c in &r.results {
                let status = if c.holds() { "verified" } else { "COUNTEREXAMPLE" };
                out.push_str(&format!("{status:>14}  {}  {}", c.conjecture, c.instance));
                if let Some(w) = &c.witness {
                    out.push_str(&format!("  [{w}]"));
                }
                out.push('\n');
            }
            out.push_str(&format!(
                "suite {}: {} checked, {} counterexamples, {}\n",
                r.suite,
                r.checked,
                r.counterexamples,
                if r.passed { "pass" } else { "FAIL" }
            ));
        }
        Document::Sweep(s) => {
            out.push_str(&format!("stable P[{}]:\n", s.label));
            text_terms(&mut out, &s.stable);
            for step in &s.steps {
                let tag = if step.matches_stable { "stable" } else { "differs" };
                out.push_str(&format!("m = {} ({tag}):\n", step.m));
                text_terms(&mut out, &step.terms);
            }
            match s.stable_from {
                Some(m) => out.push_str(&format!("stable from m = {m}\n")),
                None => out.push_str("not stable in the swept range\n"),
            }
        }
    }
    out
}

fn csv_rows(doc: &Document) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let internal = |e: csv::Error| CliError::Internal(e.to_string());
    let write_terms = |w: &mut csv::Writer<Vec<u8>>, prefix: &[String], terms: &[Term]| -> Result<(), CliError> {
        for t in terms {
            let mut rec = prefix.to_vec();
            rec.extend([t.label.clone(), t.coeff.clone()]);
            w.write_record(&rec).map_err(internal)?;
        }
        Ok(())
    };
    match doc {
        Document::Expansion(e) => {
            w.write_record(["label", "coeff"]).map_err(internal)?;
            write_terms(&mut w, &[], &e.terms)?;
        }
        Document::Table(t) => {
            let header: Vec<&str> = std::iter::once("").chain(t.columns.iter().map(String::as_str)).collect();
            w.write_record(&header).map_err(internal)?;
            for (row, entries) in t.rows.iter().zip(&t.entries) {
                let rec: Vec<&str> = std::iter::once(row.as_str()).chain(entries.iter().map(String::as_str)).collect();
                w.write_record(&rec).map_err(internal)?;
            }
        }
        Document::Nabla(n) => {
            w.write_record(["label", "coeff"]).map_err(internal)?;
            write_terms(&mut w, &[], &n.terms)?;
            for (name, value) in [
                ("catalan", &n.catalan),
                ("catalan_at_one", &n.catalan_at_one),
                ("dimension", &n.dimension),
                ("dimension_at_one", &n.dimension_at_one),
                ("sign_row", &n.sign_row),
            ] {
                w.write_record([name, value.as_str()]).map_err(internal)?;
            }
        }
        Document::Evaluation(e) => {
            w.write_record(["label", "N", "m", "closed", "explicit", "agree"]).map_err(internal)?;
            w.write_record([
                e.label.clone(),
                e.variables.to_string(),
                e.m.to_string(),
                e.closed.clone(),
                e.explicit.clone(),
                e.agree.to_string(),
            ])
            .map_err(internal)?;
        }
        Document::Report(r) => {
            w.write_record(["conjecture", "instance", "status", "witness"]).map_err(internal)?;
            for c in &r.results {
                let status = if c.holds() { "verified" } else { "counterexample" };
                w.write_record([c.conjecture.as_str(), &c.instance, status, c.witness.as_deref().unwrap_or("")])
                    .map_err(internal)?;
            }
        }
        Document::Sweep(s) => {
            w.write_record(["m", "label", "coeff"]).map_err(internal)?;
            write_terms(&mut w, &["stable".to_string()], &s.stable)?;
            for step in &s.steps {
                write_terms(&mut w, &[step.m.to_string()], &step.terms)?;
            }
        }
    }
    let bytes = w.into_inner().map_err(|e| CliError::Internal(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Internal(e.to_string()))
}

/// `(a,b,...)` with runs of three or more equal parts written as powers.
fn latex_partition(s: &str) -> String {
    if s.is_empty() || s == "∅" {
        return r"\emptyset".to_string();
    }
    let parts: Vec<&str> = s.split(',').collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < parts.len() {
        let run = parts[i..].iter().take_while(|p| **p == parts[i]).count();
        if run >= 3 {
            out.push(format!("{}^{}", parts[i], run));
        } else {
            out.extend(parts[i..i + run].iter().map(|p| p.to_string()));
        }
        i += run;
    }
    format!("({})", out.join(","))
}

/// A pair `λ|μ` as `λ,μ`, or a superpartition unchanged.
fn latex_label(label: &str) -> String {
    match label.split_once('|') {
        Some((lam, mu)) => format!("{},{}", latex_partition(lam), latex_partition(mu)),
        None => format!("({label})"),
    }
}

/// Braces exponents, drops `*`, and turns a top-level quotient into `\frac`.
fn latex_coeff(c: &str) -> String {
    let mut depth = 0;
    let split = c.char_indices().find(|&(_, ch)| {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        ch == '/' && depth == 0
    });
    if let Some((i, _)) = split {
        let strip = |s: &str| {
            let s = s.trim();
            if s.starts_with('(') && s.ends_with(')') && balanced(&s[1..s.len() - 1]) {
                s[1..s.len() - 1].to_string()
            } else {
                s.to_string()
            }
        };
        return format!(r"\frac{{{}}}{{{}}}", latex_coeff(&strip(&c[..i])), latex_coeff(&strip(&c[i + 1..])));
    }
    let mut out = String::new();
    let mut chars = c.chars().peekable();
    while let Some(ch) = chars.next() {
        match ch {
            '*' => {}
            '^' => {
                let mut exp = String::new();
                if chars.peek() == Some(&'-') {
                    exp.push(chars.next().expect("peeked"));
                }
                while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    exp.push(*d);
                    chars.next();
                }
                out.push_str(&format!("^{{{exp}}}"));
            }
            _ => out.push(ch),
        }
    }
    out
}

fn balanced(s: &str) -> bool {
    let mut depth = 0i32;
    for ch in s.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if depth < 0 {
            return false;
        }
    }
    depth == 0
}

fn latex_terms(out: &mut String, terms: &[Term]) {
    let body: Vec<String> =
        terms.iter().map(|t| format!(r"\left({}\right)[{}]", latex_coeff(&t.coeff), latex_label(&t.label))).collect();
    out.push_str(&format!("\\[\n{}\n\\]\n", if body.is_empty() { "0".to_string() } else { body.join("\n+ ") }));
}

fn latex(doc: &Document) -> String {
    let mut out = String::new();
    match doc {
        Document::Table(t) => {
            out.push_str(&format!("% {}\n", t.title));
            out.push_str(&format!("\\begin{{tabular}}{{l |{}}}\n", " c |".repeat(t.columns.len())));
            let header: Vec<String> = t.columns.iter().map(|c| format!("${}$", latex_label(c))).collect();
            out.push_str(&format!(" & {} \\\\ \\hline\n", header.join(" & ")));
            for (row, entries) in t.rows.iter().zip(&t.entries) {
                let cells: Vec<String> = entries.iter().map(|e| format!("${}$", latex_coeff(e))).collect();
                out.push_str(&format!("${}$ & {} \\\\ \\hline\n", latex_label(row), cells.join(" & ")));
            }
            out.push_str("\\end{tabular}\n");
        }
        Document::Expansion(e) => {
            out.push_str(&format!("% {}_{{{}}} in {}\n", e.family, e.label, e.basis));
            latex_terms(&mut out, &e.terms);
        }
        Document::Nabla(n) => {
            out.push_str(&format!("% {} applied to s_{{\\emptyset,({})}}\n", n.operator, n.degree));
            latex_terms(&mut out, &n.terms);
            out.push_str(&format!("\\[ \\mathrm{{catalan}} = {} \\]\n", latex_coeff(&n.catalan)));
            out.push_str(&format!("\\[ \\mathrm{{dimension}} = {} \\]\n", latex_coeff(&n.dimension)));
        }
        Document::Evaluation(e) => {
            out.push_str(&format!("% {} at N = {}, m = {}\n", e.label, e.variables, e.m));
            out.push_str(&format!("\\[ {} \\]\n", latex_coeff(&e.closed)));
        }
        Document::Report(r) => {
            out.push_str("\\begin{tabular}{l l l}\n");
            for c in &r.results {
                let status = if c.holds() { "verified" } else { "counterexample" };
                out.push_str(&format!("\\verb|{}| & \\verb|{}| & {status} \\\\\n", c.conjecture, c.instance));
            }
            out.push_str("\\end{tabular}\n");
        }
        Document::Sweep(s) => {
            for step in &s.steps {
                out.push_str(&format!("% m = {}\n", step.m));
                latex_terms(&mut out, &step.terms);
            }
        }
    }
    out
}
