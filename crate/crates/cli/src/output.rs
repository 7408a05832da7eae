use std::io::{self, Write};

use numcurve::report::ReportDocument;
use numcurve::search::Predicate;
use numcurve::semigroup::format_integer_list;
use numcurve::validate::ValidationSummary;
use numcurve::{AperyProfile, DupVerdict, PropertyReport, Verdict};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
    Jsonl,
    Csv,
}

#[derive(Debug, Serialize)]
pub struct HomogReport {
    pub semigroup: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ideal: Option<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub duplication: Option<DupVerdict>,
}

impl HomogReport {
    pub fn all_hold(&self) -> bool {
        self.semigroup.holds
            && self.ideal.as_ref().is_none_or(|v| v.holds)
            && self.duplication.as_ref().is_none_or(|d| d.direct.holds)
    }
}

fn json<T: Serialize>(value: &T, pretty: bool) {
    let text = if pretty {
        serde_json::to_string_pretty(value)
    } else {
        serde_json::to_string(value)
    }
    .expect("reports serialize");
    println!("{text}");
}

fn csv_out<F>(header: &[&str], rows: F)
where
    F: FnOnce(&mut csv::Writer<io::StdoutLock<'static>>) -> csv::Result<()>,
{
    let mut w = csv::Writer::from_writer(io::stdout().lock());
    w.write_record(header)
        .and_then(|_| rows(&mut w))
        .and_then(|_| w.flush().map_err(csv::Error::from))
        .expect("write csv to stdout");
}

fn list(v: &[i64]) -> String {
    format_integer_list(v)
}

fn nums<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn profile_rows(
    w: &mut csv::Writer<io::StdoutLock<'static>>,
    object: &str,
    p: &AperyProfile,
) -> csv::Result<()> {
    for r in 0..p.elements.len() {
        w.write_record([
            object.to_string(),
            r.to_string(),
            p.elements[r].to_string(),
            p.a_vector[r].to_string(),
            p.b_vector[r].to_string(),
        ])?;
    }
    Ok(())
}

fn print_properties(p: &PropertyReport) {
    for (name, holds) in &p.verdicts {
        match p.witnesses.get(name) {
            Some(w) if !holds => println!("  {name:<28}{holds}  {}", serde_json::to_string(w).unwrap_or_default()),
            _ => println!("  {name:<28}{holds}"),
        }
    }
}

fn print_profile(label: &str, p: &AperyProfile) {
    println!("{label} (Apéry set w.r.t. {})", p.base);
    println!("  elements  {}", nums(&p.elements));
    println!("  a         {}", nums(&p.a_vector));
    println!("  b         {}", nums(&p.b_vector));
}

pub fn report(doc: &ReportDocument, format: Format) {
    match format {
        Format::Json => json(doc, true),
        Format::Jsonl => json(doc, false),
        Format::Csv => csv_out(&["object", "residue", "apery", "a", "b"], |w| {
            for (object, p) in &doc.profiles {
                profile_rows(w, object, p)?;
            }
            Ok(())
        }),
        Format::Table => table(doc),
    }
}

fn table(doc: &ReportDocument) {
    let s = &doc.semigroup;
    println!("S = <{}>", list(&s.generators));
    println!("  multiplicity  {}", s.multiplicity);
    println!("  frobenius     {}", s.frobenius);
    println!("  genus         {}", s.genus);
    println!("  gaps          {}", nums(&s.gaps));
    if let Some(e) = &doc.instance.ideal {
        println!("E = {{{}}} + S", list(e));
    }
    if let Some(b) = doc.instance.b {
        println!("b = {b}");
    }
    for (object, p) in &doc.profiles {
        print_profile(object, p);
    }
    for (object, p) in &doc.properties {
        println!("{object} properties");
        print_properties(p);
    }
    if let Some(d) = &doc.duplication {
        println!("T = <{}>", list(&d.summary.generators));
        println!("  Ap_2m(T)      {}", nums(&d.apery_2m));
        println!("  {:<14}{:<11}{:<9}agree", "theorem", "criterion", "direct");
        for (name, t) in &d.theorems {
            println!(
                "  {:<14}{:<11}{:<9}{}",
                name,
                t.criterion.holds,
                t.direct.holds,
                if t.agree { "AGREE" } else { "DISAGREE" }
            );
        }
    }
    if let Some(c) = &doc.homtype_candidates {
        homtype_rows(c);
    }
}

fn homtype_rows(c: &[numcurve::homogeneity::HomtypeCandidate]) {
    println!("homogeneous-type candidates: {}", c.len());
    for x in c {
        println!(
            "  s={} b={} T=<{}> gr_ci(T)={} homogeneous(T)={}",
            x.s,
            x.b,
            list(&x.t),
            x.is_gr_ci_t,
            x.is_homogeneous_t
        );
    }
    if let Some(first) = c.first() {
        println!("  note: {}", first.note);
    }
}

pub fn homtype(doc: &ReportDocument, format: Format) {
    let cands = doc.homtype_candidates.as_deref().unwrap_or_default();
    match format {
        Format::Json => json(&cands, true),
        Format::Jsonl => cands.iter().for_each(|c| json(c, false)),
        Format::Csv => csv_out(&["s", "b", "t", "gr_ci_t", "homogeneous_t"], |w| {
            for c in cands {
                w.write_record([
                    c.s.to_string(),
                    c.b.to_string(),
                    list(&c.t),
                    c.is_gr_ci_t.to_string(),
                    c.is_homogeneous_t.to_string(),
                ])?;
            }
            Ok(())
        }),
        Format::Table => {
            println!("S = <{}>", list(&doc.semigroup.generators));
            homtype_rows(cands);
        }
    }
}

pub fn validation(summary: &ValidationSummary, format: Format) {
    match format {
        Format::Json => json(summary, true),
        Format::Jsonl => json(summary, false),
        Format::Csv => csv_out(&["check", "evaluated", "violations"], |w| {
            for (name, t) in &summary.checks {
                w.write_record([name.clone(), t.evaluated.to_string(), t.violations.to_string()])?;
            }
            Ok(())
        }),
        Format::Table => {
            println!(
                "semigroups {}  ideals {}  triples {}",
                summary.semigroups, summary.ideals, summary.triples
            );
            println!("  {:<32}{:>10}{:>12}", "check", "evaluated", "violations");
            for (name, t) in &summary.checks {
                println!("  {:<32}{:>10}{:>12}", name, t.evaluated, t.violations);
            }
            for c in &summary.counterexamples {
                println!(
                    "counterexample {}: S=<{}> E={:?} b={:?} {}",
                    c.check,
                    list(&c.semigroup),
                    c.ideal,
                    c.b,
                    c.detail
                );
            }
            for f in &summary.stabilization_failures {
                println!("stabilization failure: S=<{}> E={:?} {}", list(&f.semigroup), f.ideal, f.message);
            }
            println!("{}", if summary.is_clean() { "CLEAN" } else { "VIOLATIONS FOUND" });
        }
    }
}

pub fn search_hits(hits: &[ReportDocument], predicate: Predicate, format: Format) {
    match format {
        Format::Json => json(&hits, true),
        Format::Jsonl => {
            let mut out = io::stdout().lock();
            for h in hits {
                let line = serde_json::to_string(h).expect("reports serialize");
                writeln!(out, "{line}").expect("write to stdout");
            }
        }
        Format::Csv => csv_out(&["predicate", "semigroup", "ideal", "b"], |w| {
            for h in hits {
                w.write_record([
                    predicate.to_string(),
                    list(&h.instance.semigroup),
                    h.instance.ideal.as_deref().map(list).unwrap_or_default(),
                    h.instance.b.map(|b| b.to_string()).unwrap_or_default(),
                ])?;
            }
            Ok(())
        }),
        Format::Table => {
            for h in hits {
                let mut line = format!("<{}>", list(&h.instance.semigroup));
                if let Some(e) = &h.instance.ideal {
                    line.push_str(&format!(" E={{{}}}", list(e)));
                }
                if let Some(b) = h.instance.b {
                    line.push_str(&format!(" b={b}"));
                }
                println!("{line}");
            }
            println!("{} matches for {predicate}", hits.len());
        }
    }
}

pub fn homog(report: &HomogReport, format: Format) {
    match format {
        Format::Json => json(report, true),
        Format::Jsonl => json(report, false),
        Format::Csv => csv_out(&["object", "side", "holds"], |w| {
            w.write_record(["semigroup", "direct", &report.semigroup.holds.to_string()])?;
            if let Some(v) = &report.ideal {
                w.write_record(["ideal", "direct", &v.holds.to_string()])?;
            }
            if let Some(d) = &report.duplication {
                w.write_record(["duplication", "criterion", &d.criterion.holds.to_string()])?;
                w.write_record(["duplication", "direct", &d.direct.holds.to_string()])?;
            }
            Ok(())
        }),
        Format::Table => {
            let show = |label: &str, v: &Verdict| match &v.witness {
                Some(w) => println!("{label:<24}{}  {}", v.holds, serde_json::to_string(w).unwrap_or_default()),
                None => println!("{label:<24}{}", v.holds),
            };
            show("semigroup", &report.semigroup);
            if let Some(v) = &report.ideal {
                show("ideal", v);
            }
            if let Some(d) = &report.duplication {
                show("duplication criterion", &d.criterion);
                show("duplication direct", &d.direct);
                println!("{}", if d.agree() { "AGREE" } else { "DISAGREE" });
            }
        }
    }
}
