use std::fmt::Write as _;

use super::OutputFormat;
use crate::report::VerificationReport;

const COLUMNS: [&str; 8] = [
    "identity_id",
    "parameters",
    "lhs_rendered",
    "rhs_rendered",
    "abs_residual",
    "verdict",
    "tolerance",
    "notes",
];

fn verdict_text(r: &VerificationReport) -> &'static str {
    match r.verdict {
        crate::report::Verdict::Pass => "pass",
        crate::report::Verdict::Fail => "fail",
        crate::report::Verdict::Reported => "reported",
    }
}

fn params_text(r: &VerificationReport) -> String {
    r.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join("; ")
}

fn row(r: &VerificationReport) -> [String; 8] {
    [
        r.identity_id.clone(),
        params_text(r),
        r.lhs_rendered.clone(),
        r.rhs_rendered.clone(),
        r.abs_residual.render(),
        verdict_text(r).to_string(),
        r.tolerance.render(),
        r.notes.clone(),
    ]
}

fn md_cell(s: &str) -> String {
    s.replace('\\', "\\\\").replace('|', "\\|").replace('\n', " ")
}

/// Serializes reports. Field order is fixed; reals carry 15 significant
/// digits.
pub fn render_report(reports: &[VerificationReport], format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut text = serde_json::to_string_pretty(reports).expect("reports serialize");
            text.push('\n');
            text
        }
        OutputFormat::Csv => {
            let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
            w.write_record(COLUMNS).expect("in-memory write");
            for r in reports {
                w.write_record(row(r)).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
        }
        OutputFormat::Markdown => {
            let mut out = String::new();
            let mut ids: Vec<&str> = Vec::new();
            for r in reports {
                if !ids.contains(&r.identity_id.as_str()) {
                    ids.push(&r.identity_id);
                }
            }
            for id in ids {
                let _ = writeln!(out, "## {id}\n");
                let _ = writeln!(out, "| {} |", COLUMNS[1..].join(" | "));
                let _ = writeln!(out, "|{}", "---|".repeat(COLUMNS.len() - 1));
                for r in reports.iter().filter(|r| r.identity_id == id) {
                    let cells: Vec<String> = row(r)[1..].iter().map(|c| md_cell(c)).collect();
                    let _ = writeln!(out, "| {} |", cells.join(" | "));
                }
                out.push('\n');
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::{CheckClass, VerificationReport};

    fn sample() -> VerificationReport {
        VerificationReport::exact("eq26", CheckClass::PassFail, "1/(-1 + u)".into(), "a|b, \"c\"".into(), None)
            .with_param("n", 1)
    }

    #[test]
    fn empty_json_is_brackets() {
        assert_eq!(render_report(&[], OutputFormat::Json).trim(), "[]");
    }

    #[test]
    fn json_field_order() {
        let text = render_report(&[sample()], OutputFormat::Json);
        let positions: Vec<usize> = COLUMNS.iter().map(|c| text.find(&format!("\"{c}\"")).unwrap()).collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]));
        assert!(text.contains("\"0 (exact)\""));
        assert!(text.contains("\"exact\""));
    }

    #[test]
    fn csv_has_header_and_one_row() {
        let text = render_report(&[sample()], OutputFormat::Csv);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[0], COLUMNS.join(","));
        assert!(lines[1].starts_with("eq26,n=1,1/(-1 + u),\"a|b, \"\"c\"\"\",0 (exact),pass,exact,"));
    }

    #[test]
    fn markdown_one_table_per_id() {
        let other = VerificationReport::exact("lemma1", CheckClass::PassFail, "x".into(), "x".into(), None);
        let text = render_report(&[sample(), other, sample()], OutputFormat::Markdown);
        assert_eq!(text.matches("## ").count(), 2);
        assert!(text.contains("a\\|b"));
        assert!(text.find("## eq26").unwrap() < text.find("## lemma1").unwrap());
    }
}
