//! Machine-readable report bodies. Every rational is serialized as an exact
//! `p/q` string (or `p` when the denominator is one); no floats anywhere.

use permafix_core::exact::{Int, Rational};
use permafix_core::perm::Permutation;
use permafix_core::polytope::FixedPolytope;
use serde::Serialize;

pub const SCHEMA: &str = "permafix/1";

#[derive(Serialize, Clone)]
pub struct Check {
    pub name: String,
    pub pass: bool,
}

impl Check {
    pub fn new(name: &str, pass: bool) -> Self {
        Check {
            name: name.to_string(),
            pass,
        }
    }
}

#[derive(Serialize, Clone, Default)]
pub struct InputEcho {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(rename = "type", skip_serializing_if = "Option::is_none")]
    pub cycle_type: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<String>>,
}

#[derive(Serialize, Clone)]
pub struct SigmaInfo {
    pub cycles: String,
    pub one_line: String,
    pub cycle_type: Vec<usize>,
    pub n: usize,
    pub m: usize,
}

impl SigmaInfo {
    pub fn from_permutation(sigma: &Permutation) -> Self {
        SigmaInfo {
            cycles: sigma.to_cycle_string(),
            one_line: sigma.to_one_line_string(),
            cycle_type: sigma.cycle_type().lengths().to_vec(),
            n: sigma.degree(),
            m: sigma.cycle_count(),
        }
    }
}

#[derive(Serialize)]
pub struct VertexEntry {
    /// Cycle indices from smallest to largest in the vertex's linear order,
    /// 1-based.
    pub order: Vec<usize>,
    pub point: Vec<String>,
}

#[derive(Serialize)]
pub struct GeneratorEntry {
    /// 1-based pair of cycle indices `j < k`.
    pub cycle_pair: [usize; 2],
    pub vector: Vec<String>,
}

#[derive(Serialize)]
pub struct DescribeBody {
    pub sigma: SigmaInfo,
    pub dimension: usize,
    pub vertex_count: usize,
    pub vertices: Vec<VertexEntry>,
    pub generators: Vec<GeneratorEntry>,
    pub translation: Vec<String>,
}

impl DescribeBody {
    pub fn from_polytope(fp: &FixedPolytope) -> Self {
        DescribeBody {
            sigma: SigmaInfo::from_permutation(fp.sigma()),
            dimension: fp.dimension(),
            vertex_count: fp.vertices().len(),
            vertices: fp
                .vertices()
                .iter()
                .map(|(order, point)| VertexEntry {
                    order: order.iter().map(|&c| c + 1).collect(),
                    point: rationals(point),
                })
                .collect(),
            generators: fp
                .generators()
                .iter()
                .map(|((j, k), g)| GeneratorEntry {
                    cycle_pair: [j + 1, k + 1],
                    vector: ints(g),
                })
                .collect(),
            translation: rationals(fp.translation()),
        }
    }
}

#[derive(Serialize)]
pub struct VolumeBody {
    pub closed_form: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tiling: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<String>,
}

#[derive(Serialize)]
pub struct EhrhartRow {
    pub t: u64,
    pub count: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicted: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matches: Option<bool>,
}

#[derive(Serialize)]
pub struct DescribeReport {
    pub schema: &'static str,
    pub command: &'static str,
    pub input: InputEcho,
    #[serde(flatten)]
    pub body: DescribeBody,
    pub checks: Vec<Check>,
    pub status: &'static str,
}

#[derive(Serialize)]
pub struct VolumeCommandReport {
    pub schema: &'static str,
    pub command: &'static str,
    pub input: InputEcho,
    pub sigma: SigmaInfo,
    pub volume: VolumeBody,
    pub checks: Vec<Check>,
    pub status: &'static str,
}

#[derive(Serialize)]
pub struct EhrhartReport {
    pub schema: &'static str,
    pub command: &'static str,
    pub input: InputEcho,
    pub sigma: SigmaInfo,
    pub rows: Vec<EhrhartRow>,
    pub checks: Vec<Check>,
    pub status: &'static str,
}

#[derive(Serialize)]
pub struct SubgroupReport {
    pub schema: &'static str,
    pub command: &'static str,
    pub input: InputEcho,
    pub join: String,
    pub representative: String,
    #[serde(flatten)]
    pub body: DescribeBody,
    pub volume: VolumeBody,
    pub checks: Vec<Check>,
    pub status: &'static str,
}

pub fn rationals(values: &[Rational]) -> Vec<String> {
    values.iter().map(Rational::to_string).collect()
}

pub fn ints(values: &[Int]) -> Vec<String> {
    values.iter().map(Int::to_string).collect()
}

pub fn status_of(checks: &[Check]) -> &'static str {
    if checks.iter().all(|c| c.pass) {
        "pass"
    } else {
        "fail"
    }
}
