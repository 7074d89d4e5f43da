//! Side-by-side comparison of computed values with published reference tables.

use serde::Serialize;

use quattern::census::{assemble_numeric, assemble_symbolic, assign_families, families_for, inventory};
use quattern::gfq::moduli_checksum;
use quattern::patterns::representable_sets;
use quattern::reference;
use quattern::{CommutatorTable, Result, RootSystem, RootType};

#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub matches: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Section {
    pub name: String,
    pub rows: Vec<Row>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Provenance {
    pub version: String,
    pub root_table_checksums: Vec<(String, String)>,
    pub moduli_checksum: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub sections: Vec<Section>,
    pub provenance: Provenance,
}

impl Report {
    pub fn all_match(&self) -> bool {
        self.sections.iter().all(|s| s.rows.iter().all(|r| r.matches))
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for s in &self.sections {
            out.push_str(&format!("== {} ==\n", s.name));
            for r in &s.rows {
                let flag = if r.matches { "ok" } else { "MISMATCH" };
                out.push_str(&format!("  {:<28} expected {:<40} computed {:<40} {flag}\n", r.name, r.expected, r.computed));
            }
        }
        out.push_str(&format!(
            "provenance: quattern {}, moduli {}\n",
            self.provenance.version, self.provenance.moduli_checksum
        ));
        for (name, sum) in &self.provenance.root_table_checksums {
            out.push_str(&format!("  root table {name}: {sum}\n"));
        }
        out
    }
}

fn row(name: impl Into<String>, expected: impl ToString, computed: impl ToString) -> Row {
    let (e, c) = (expected.to_string(), computed.to_string());
    Row {
        name: name.into(),
        matches: e == c,
        expected: e,
        computed: c,
    }
}

fn table(ty: RootType, rank: usize, p: u32) -> Result<CommutatorTable> {
    CommutatorTable::build(&RootSystem::build(ty, rank)?, p)
}

fn representable_section() -> Result<Section> {
    let mut rows = Vec::new();
    for (ty, p) in [
        (RootType::A, 2),
        (RootType::B, 2),
        (RootType::B, 3),
        (RootType::C, 2),
        (RootType::C, 3),
        (RootType::D, 2),
        (RootType::F, 2),
        (RootType::F, 3),
    ] {
        let expected = reference::representable_set_count(ty, p == 2).expect("rank-4 reference");
        let computed = representable_sets(&table(ty, 4, p)?).len();
        rows.push(row(format!("{ty}4 p={p}"), expected, computed));
    }
    Ok(Section {
        name: "representable sets".into(),
        rows,
    })
}

fn forms_section(ty: RootType, expected: &[((usize, usize, usize), usize)]) -> Result<Section> {
    let inv = inventory(&table(ty, 4, 2)?)?;
    let forms = inv.forms();
    let mut rows = Vec::new();
    let mut names: Vec<(usize, usize, usize)> = expected.iter().map(|e| e.0).collect();
    for f in forms.keys() {
        if !names.contains(&(f.z, f.m, f.c)) {
            names.push((f.z, f.m, f.c));
        }
    }
    names.sort();
    for (z, m, c) in names {
        let e = expected.iter().find(|x| x.0 == (z, m, c)).map_or(0, |x| x.1);
        let got = forms
            .iter()
            .find(|(f, _)| (f.z, f.m, f.c) == (z, m, c))
            .map_or(0, |(_, &n)| n);
        rows.push(row(format!("[{z}, {m}, {c}]"), e, got));
    }
    let total: usize = forms.values().sum();
    rows.push(row("nonabelian cores", expected.iter().map(|e| e.1).sum::<usize>(), total));
    if ty == RootType::F {
        rows.push(row("branching classes", reference::F4_BRANCHING_CLASSES, inv.classes.len()));
    }
    Ok(Section {
        name: format!("{ty}4 core inventory"),
        rows,
    })
}

fn census_sections() -> Result<Vec<Section>> {
    let tab = table(RootType::F, 4, 2)?;
    let inv = inventory(&tab)?;
    let fams = families_for(RootType::F, 4);
    let asg = assign_families(&tab, &inv, &fams, &[1, 2, 3])?;
    let census = assemble_symbolic(&inv, &fams, &asg)?;

    let mut degree_rows = Vec::new();
    let reference_rows = reference::f4_degree_census();
    for (d, p) in &reference_rows {
        let got = census.entries.get(d).cloned().unwrap_or_default();
        degree_rows.push(row(d.to_string(), p.render("v"), got.to_string()));
    }
    for (d, got) in &census.entries {
        if !reference_rows.iter().any(|(e, _)| e == d) {
            degree_rows.push(row(d.to_string(), "0", got.to_string()));
        }
    }
    degree_rows.push(row("total", reference::f4_total_in_q().render("q"), {
        let t = census.total();
        if t.is_uniform() {
            t.even.render("q")
        } else {
            t.to_string()
        }
    }));
    for f in 1..=3 {
        let numeric = assemble_numeric(&tab, &inv, &fams, &asg, f)?;
        let total: u128 = numeric.values().sum();
        let expected = reference::f4_total_in_q().eval_int(1 << f).expect("integral");
        degree_rows.push(row(format!("numeric total q={}", 1 << f), expected, total));
    }

    let mut family_rows = Vec::new();
    for fam in &fams {
        let classes: Vec<_> = asg
            .iter()
            .filter(|a| a.family.as_deref() == Some(fam.name.as_str()))
            .collect();
        let cores: usize = classes.iter().map(|a| inv.classes[a.class].members.len()).sum();
        family_rows.push(row(format!("{} cores", fam.name), fam.frequency, cores));
        for f in 1..=3 {
            let expected = fam.histogram_at(f);
            for a in &classes {
                if let Some(n) = a.numeric.get(&f) {
                    family_rows.push(row(
                        format!("{} q={} class {}", fam.name, 1 << f, a.class),
                        render_histogram(&expected),
                        render_histogram(n),
                    ));
                }
            }
        }
    }
    let unmatched = asg.iter().filter(|a| a.family.is_none()).count();
    family_rows.push(row("classes without a family", 0, unmatched));
    Ok(vec![
        Section {
            name: "F4 degree census".into(),
            rows: degree_rows,
        },
        Section {
            name: "F4 families".into(),
            rows: family_rows,
        },
    ])
}

pub fn render_histogram(h: &quattern::coresolver::Histogram) -> String {
    let parts: Vec<String> = h.iter().map(|(d, c)| format!("{c}@2^{d}")).collect();
    parts.join(" ")
}

/// Builds the full reference report.
pub fn reference_tables() -> Result<Report> {
    let mut sections = vec![representable_section()?];
    sections.push(forms_section(RootType::F, &reference::F4_FORMS)?);
    sections.push(forms_section(RootType::B, &reference::B4_FORMS)?);
    sections.extend(census_sections()?);
    let mut sums = Vec::new();
    for (ty, r) in [(RootType::B, 4), (RootType::C, 4), (RootType::F, 4)] {
        let rs = RootSystem::build(ty, r)?;
        sums.push((rs.name(), rs.table_checksum()));
    }
    Ok(Report {
        sections,
        provenance: Provenance {
            version: env!("CARGO_PKG_VERSION").into(),
            root_table_checksums: sums,
            moduli_checksum: moduli_checksum(),
        },
    })
}
