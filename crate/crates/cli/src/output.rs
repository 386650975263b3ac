//! Machine-readable output records and the text renderers.
//!
//! Every command can emit a single-line JSON `OutputRecord`; the payload
//! shape per command is documented in the README. Text output writes
//! modules as `S[i,l]` and direct sums as `+`-joined sorted summand
//! lists. All orderings are deterministic, so identical inputs produce
//! byte-identical output.

use serde::{Deserialize, Serialize};

use nakayama_cy::{
    Algebra, CategoryReport, ClassificationResult, HalfInt, IndecModule, OrbitRecord, StableObject,
};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct OutputRecord<P> {
    pub schema_version: String,
    pub command: String,
    pub params: Params,
    pub payload: P,
}

impl<P> OutputRecord<P> {
    pub fn new(command: &str, alg: &Algebra, d: Option<i64>, payload: P) -> Self {
        Self {
            schema_version: SCHEMA_VERSION.to_string(),
            command: command.to_string(),
            params: Params {
                n: alg.n(),
                t: alg.t(),
                d,
            },
            payload,
        }
    }
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct Params {
    pub n: u32,
    pub t: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub d: Option<i64>,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct ObjectEntry {
    pub object: StableObject,
    pub summands: usize,
    pub cy_dimension: u64,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct ClassifyPayload {
    /// Requested degree reduced modulo the shift order.
    pub degree: u64,
    pub case: String,
    pub step: HalfInt,
    pub big_n: u64,
    pub objects: Vec<ObjectEntry>,
}

pub fn classify_payload(alg: &Algebra, res: &ClassificationResult) -> ClassifyPayload {
    ClassifyPayload {
        degree: res.params.d,
        case: res.case.to_string(),
        step: res.params.step,
        big_n: res.params.big_n,
        objects: res
            .objects
            .iter()
            .map(|o| ObjectEntry {
                object: o.clone(),
                summands: o.summand_count(),
                cy_dimension: nakayama_cy::cy_dimension(alg, o)
                    .expect("minimal objects are Calabi-Yau"),
            })
            .collect(),
    }
}

fn degree_label(requested: i64, normalized: u64) -> String {
    if requested == normalized as i64 {
        format!("d = {requested}")
    } else {
        format!("d = {requested} (reduced to {normalized})")
    }
}

pub fn render_classify_table(alg: &Algebra, requested_d: i64, payload: &ClassifyPayload) -> String {
    let mut out = format!(
        "Lambda({},{}), {} (case {}): step {}, N = {}, {} minimal object(s)\n",
        alg.n(),
        alg.t(),
        degree_label(requested_d, payload.degree),
        payload.case,
        payload.step,
        payload.big_n,
        payload.objects.len()
    );
    let width = payload
        .objects
        .iter()
        .map(|e| e.object.to_string().len())
        .max()
        .unwrap_or(6)
        .max(6);
    out.push_str(&format!(
        "{:<width$}  {:>8}  {:>6}\n",
        "object", "summands", "cy-dim"
    ));
    for entry in &payload.objects {
        out.push_str(&format!(
            "{:<width$}  {:>8}  {:>6}\n",
            entry.object.to_string(),
            entry.summands,
            entry.cy_dimension
        ));
    }
    out
}

/// CSV columns: n,t,d,case,big_n,object,summands,cy_dimension.
pub fn render_classify_csv(alg: &Algebra, payload: &ClassifyPayload) -> String {
    let mut out = String::from("n,t,d,case,big_n,object,summands,cy_dimension\n");
    for entry in &payload.objects {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            alg.n(),
            alg.t(),
            payload.degree,
            payload.case,
            payload.big_n,
            entry.object,
            entry.summands,
            entry.cy_dimension
        ));
    }
    out
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct ModuleEntry {
    pub module: IndecModule,
    pub cy_dimension: u64,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct CategoryPayload {
    pub is_cy_category: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub cydim: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness_m: Option<u64>,
    pub naturality_checked: bool,
    pub indecomposable_cy: Vec<ModuleEntry>,
    pub decomposable_minimal_cy: Vec<ObjectEntry>,
}

pub fn category_payload(alg: &Algebra, report: &CategoryReport) -> CategoryPayload {
    CategoryPayload {
        is_cy_category: report.is_cy_category,
        cydim: report.cydim,
        witness_m: report.witness_m,
        naturality_checked: report.naturality_checked,
        indecomposable_cy: report
            .indecomposable_cy
            .iter()
            .map(|&(module, cy_dimension)| ModuleEntry {
                module,
                cy_dimension,
            })
            .collect(),
        decomposable_minimal_cy: report
            .decomposable_minimal_cy
            .iter()
            .map(|o| ObjectEntry {
                object: o.clone(),
                summands: o.summand_count(),
                cy_dimension: nakayama_cy::cy_dimension(alg, o)
                    .expect("reported objects are Calabi-Yau"),
            })
            .collect(),
    }
}

pub fn render_category_table(alg: &Algebra, payload: &CategoryPayload) -> String {
    let mut out = format!("Lambda({},{})\n", alg.n(), alg.t());
    if payload.is_cy_category {
        out.push_str(&format!(
            "Calabi-Yau category: yes, dimension {}",
            payload.cydim.expect("CY categories have a dimension")
        ));
        if let Some(m) = payload.witness_m {
            out.push_str(&format!(" (witness m = {m})"));
        }
        out.push('\n');
        out.push_str(&format!(
            "arrow-level naturality check: {}\n",
            if payload.naturality_checked {
                "passed"
            } else {
                "not run"
            }
        ));
    } else {
        out.push_str("Calabi-Yau category: no\n");
    }
    if payload.indecomposable_cy.is_empty() {
        out.push_str("no indecomposable Calabi-Yau modules\n");
    } else {
        out.push_str(&format!(
            "indecomposable Calabi-Yau modules ({}):\n",
            payload.indecomposable_cy.len()
        ));
        for entry in &payload.indecomposable_cy {
            out.push_str(&format!(
                "  {}  cy-dim {}\n",
                entry.module, entry.cy_dimension
            ));
        }
    }
    if !payload.decomposable_minimal_cy.is_empty() {
        out.push_str(&format!(
            "decomposable minimal CY objects of the same dimension ({}):\n",
            payload.decomposable_minimal_cy.len()
        ));
        for entry in &payload.decomposable_minimal_cy {
            out.push_str(&format!(
                "  {}  cy-dim {}\n",
                entry.object, entry.cy_dimension
            ));
        }
    }
    out
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct CydimPayload {
    pub object: StableObject,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub cy_dimension: Option<u64>,
    pub object_shift_order: u64,
}

pub fn render_cydim_table(payload: &CydimPayload) -> String {
    match payload.cy_dimension {
        Some(d) => format!("{d}\n"),
        None => "not Calabi-Yau\n".to_string(),
    }
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct OrbitEntry {
    pub representative: IndecModule,
    pub elements: Vec<IndecModule>,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct OrbitsPayload {
    pub degree: u64,
    pub orbits: Vec<OrbitEntry>,
}

pub fn orbits_payload(degree: u64, records: &[OrbitRecord]) -> OrbitsPayload {
    OrbitsPayload {
        degree,
        orbits: records
            .iter()
            .map(|rec| OrbitEntry {
                representative: rec.representative,
                elements: rec.elements.clone(),
            })
            .collect(),
    }
}

pub fn render_orbits_table(alg: &Algebra, requested_d: i64, payload: &OrbitsPayload) -> String {
    let mut out = format!(
        "Lambda({},{}), {}: {} orbit(s)\n",
        alg.n(),
        alg.t(),
        degree_label(requested_d, payload.degree),
        payload.orbits.len()
    );
    for (k, orbit) in payload.orbits.iter().enumerate() {
        let cycle: Vec<String> = orbit.elements.iter().map(|m| m.to_string()).collect();
        out.push_str(&format!(
            "orbit {} (size {}): {}\n",
            k + 1,
            orbit.elements.len(),
            cycle.join(" -> ")
        ));
    }
    out
}

/// CSV columns: n,t,d,orbit,position,module.
pub fn render_orbits_csv(alg: &Algebra, payload: &OrbitsPayload) -> String {
    let mut out = String::from("n,t,d,orbit,position,module\n");
    for (k, orbit) in payload.orbits.iter().enumerate() {
        for (pos, m) in orbit.elements.iter().enumerate() {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                alg.n(),
                alg.t(),
                payload.degree,
                k + 1,
                pos,
                m
            ));
        }
    }
    out
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct HomcheckPayload {
    pub modules: Vec<IndecModule>,
    pub pairs_checked: usize,
    pub all_pass: bool,
    pub failures: Vec<(IndecModule, IndecModule)>,
}

pub fn render_homcheck_table(alg: &Algebra, payload: &HomcheckPayload) -> String {
    let mut out = format!(
        "Lambda({},{}): checked {} ordered pairs of indecomposables\n",
        alg.n(),
        alg.t(),
        payload.pairs_checked
    );
    if payload.all_pass {
        out.push_str("Serre duality dimensions: all pass\n");
    } else {
        out.push_str(&format!(
            "Serre duality dimensions: {} FAILURES\n",
            payload.failures.len()
        ));
        for (x, y) in &payload.failures {
            out.push_str(&format!("  FAIL ({x}, {y})\n"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn records_round_trip_through_json() {
        let alg = Algebra::new(2, 4).unwrap();
        let res = nakayama_cy::minimal_cy_modules(&alg, 3);
        let record = OutputRecord::new("classify", &alg, Some(3), classify_payload(&alg, &res));
        let json = serde_json::to_string(&record).unwrap();
        let back: OutputRecord<ClassifyPayload> = serde_json::from_str(&json).unwrap();
        assert_eq!(record, back);
        // and the reserialization is byte-identical
        assert_eq!(json, serde_json::to_string(&back).unwrap());
    }

    #[test]
    fn category_record_round_trips() {
        let alg = Algebra::new(4, 6).unwrap();
        let report = nakayama_cy::category_report(&alg);
        let record = OutputRecord::new("category", &alg, None, category_payload(&alg, &report));
        let json = serde_json::to_string(&record).unwrap();
        let back: OutputRecord<CategoryPayload> = serde_json::from_str(&json).unwrap();
        assert_eq!(record, back);
        assert!(!json.contains("\"d\":"), "absent degree is omitted");
    }
}
