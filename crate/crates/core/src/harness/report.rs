use super::search::SearchResult;
use super::CheckReport;

/// One block per report: a status line, then indented notes and violations.
pub fn render_report_text(reports: &[CheckReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&format!(
            "{:<7} {:<9} instances={} hits={} trivial={} violations={}  \"{}\"\n",
            r.status.as_str(),
            r.id,
            r.instances,
            r.hits,
            r.trivial_hits,
            r.violation_count,
            r.anchor
        ));
        if let Some(note) = &r.note {
            out.push_str(&format!("        note: {note}\n"));
        }
        for v in &r.violations {
            out.push_str(&format!(
                "        violation: {} | {}\n",
                v.instance, v.witness
            ));
        }
    }
    out
}

/// JSON Lines, one object per report.
pub fn render_machine(reports: &[CheckReport]) -> String {
    reports
        .iter()
        .map(|r| serde_json::to_string(r).expect("reports serialize") + "\n")
        .collect()
}

pub fn render_search_text(result: &SearchResult) -> String {
    let mut out = match &result.found {
        Some(f) => format!(
            "FOUND   {}  {} | {} | replayed={}\n",
            result.target, f.instance, f.witness, f.replayed
        ),
        None => format!("ABSENT  {}\n", result.target),
    };
    if let Some(note) = &result.note {
        out.push_str(&format!("        note: {note}\n"));
    }
    out
}

pub fn render_search_machine(result: &SearchResult) -> String {
    serde_json::to_string(result).expect("search results serialize") + "\n"
}
