use permafix_core::ehrhart::{
    dilate_counts, segment_count, two_valuation, volume_by_interpolation_opts,
};
use permafix_core::exact::Rational;
use permafix_core::perm::{CycleType, Permutation};
use permafix_core::polytope::FixedPolytope;
use permafix_core::volume::{volume_by_tiling_opts, volume_closed_form, MinorCheck, TilingOptions};
use permafix_core::Error as CoreError;

use crate::report::{
    status_of, Check, DescribeBody, DescribeReport, EhrhartReport, EhrhartRow, InputEcho,
    SigmaInfo, SubgroupReport, VolumeBody, VolumeCommandReport, SCHEMA,
};
use crate::{InputArgs, VerifyLevel};

/// Input or usage problems; the process exits with code 2 on these.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<CoreError> for UsageError {
    fn from(e: CoreError) -> Self {
        UsageError(e.to_string())
    }
}

pub struct CommandOutput {
    pub text: String,
    pub json: String,
    pub all_pass: bool,
}

pub fn resolve_input(args: &InputArgs) -> Result<(Permutation, InputEcho), UsageError> {
    match (&args.sigma, &args.cycle_type) {
        (Some(sigma_text), None) => {
            let sigma = Permutation::parse(sigma_text, args.n)?;
            Ok((
                sigma,
                InputEcho {
                    sigma: Some(sigma_text.clone()),
                    n: args.n,
                    ..Default::default()
                },
            ))
        }
        (None, Some(type_text)) => {
            if args.n.is_some() {
                return Err(UsageError("--n only applies to --sigma".into()));
            }
            let lam = CycleType::parse(type_text)?;
            Ok((
                lam.standard_form(),
                InputEcho {
                    cycle_type: Some(type_text.clone()),
                    ..Default::default()
                },
            ))
        }
        _ => Err(UsageError(
            "give exactly one of --sigma <perm> or --type <lengths>".into(),
        )),
    }
}

pub fn describe(args: &InputArgs) -> Result<CommandOutput, UsageError> {
    let (sigma, input) = resolve_input(args)?;
    let fp = FixedPolytope::new(sigma);
    let body = DescribeBody::from_polytope(&fp);
    let text = render_describe(&body);
    let report = DescribeReport {
        schema: SCHEMA,
        command: "describe",
        input,
        body,
        checks: vec![],
        status: "pass",
    };
    Ok(CommandOutput {
        text,
        json: to_json(&report),
        all_pass: true,
    })
}

fn render_describe(body: &DescribeBody) -> String {
    let mut out = String::new();
    out.push_str(&format!("sigma: {}\n", body.sigma.cycles));
    out.push_str(&format!(
        "cycle type: {}   (n = {}, m = {})\n",
        join_usize(&body.sigma.cycle_type),
        body.sigma.n,
        body.sigma.m
    ));
    out.push_str(&format!("dimension: {}\n", body.dimension));
    out.push_str(&format!("vertices ({}):\n", body.vertex_count));
    for v in &body.vertices {
        out.push_str(&format!(
            "  order {:<12} ({})\n",
            join_usize(&v.order),
            v.point.join(", ")
        ));
    }
    out.push_str(&format!("generators ({}):\n", body.generators.len()));
    for g in &body.generators {
        out.push_str(&format!(
            "  cycles {},{}: ({})\n",
            g.cycle_pair[0],
            g.cycle_pair[1],
            g.vector.join(", ")
        ));
    }
    out.push_str(&format!("translation: ({})\n", body.translation.join(", ")));
    out
}

fn volume_parts(
    sigma: &Permutation,
    verify: VerifyLevel,
    threads: usize,
) -> Result<(VolumeBody, Vec<Check>), UsageError> {
    let lam = sigma.cycle_type();
    let closed = volume_closed_form(&lam);
    let mut checks = Vec::new();
    let tiling = match verify {
        VerifyLevel::None => None,
        VerifyLevel::Tiling | VerifyLevel::Full => {
            // re-derive every 100th tree through the minor-gcd route
            let opts = TilingOptions {
                threads,
                minor_check: MinorCheck::Every(100),
            };
            match volume_by_tiling_opts(&lam, opts) {
                Ok(v) => {
                    checks.push(Check::new("tiling_matches_closed_form", v == closed));
                    Some(v)
                }
                Err(CoreError::CrossCheck(msg)) => {
                    eprintln!("tiling self-check failed: {msg}");
                    checks.push(Check::new("tiling_matches_closed_form", false));
                    None
                }
                Err(e) => return Err(e.into()),
            }
        }
    };
    let oracle = match verify {
        VerifyLevel::Full => {
            let v = volume_by_interpolation_opts(sigma, threads)?;
            checks.push(Check::new(
                "oracle_matches_closed_form",
                v == Rational::from_integer(closed.clone()),
            ));
            Some(v)
        }
        _ => None,
    };
    Ok((
        VolumeBody {
            closed_form: closed.to_string(),
            tiling: tiling.map(|v| v.to_string()),
            oracle: oracle.map(|v| v.to_string()),
        },
        checks,
    ))
}

pub fn volume(
    args: &InputArgs,
    verify: VerifyLevel,
    threads: usize,
) -> Result<CommandOutput, UsageError> {
    let (sigma, input) = resolve_input(args)?;
    let (volume, checks) = volume_parts(&sigma, verify, threads)?;
    let sigma_info = SigmaInfo::from_permutation(&sigma);
    let text = render_volume(&sigma_info, &volume, &checks);
    let status = status_of(&checks);
    let report = VolumeCommandReport {
        schema: SCHEMA,
        command: "volume",
        input,
        sigma: sigma_info,
        volume,
        checks: checks.clone(),
        status,
    };
    Ok(CommandOutput {
        text,
        json: to_json(&report),
        all_pass: status == "pass",
    })
}

fn render_volume(sigma: &SigmaInfo, volume: &VolumeBody, checks: &[Check]) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "cycle type: {}   (n = {}, m = {})\n",
        join_usize(&sigma.cycle_type),
        sigma.n,
        sigma.m
    ));
    out.push_str(&format!("closed form: {}\n", volume.closed_form));
    if let Some(t) = &volume.tiling {
        out.push_str(&format!("tiling sum: {t}\n"));
    }
    if let Some(o) = &volume.oracle {
        out.push_str(&format!("ehrhart oracle: {o}\n"));
    }
    out.push_str(&render_checks(checks));
    out
}

fn segment_case(l1: usize, l2: usize, t: u64) -> &'static str {
    if t % 2 == 0 {
        return "even";
    }
    match (l1 % 2, l2 % 2) {
        (1, 1) => "both-odd",
        (0, 0) => {
            if two_valuation(l1 as u64) == two_valuation(l2 as u64) {
                "same-2-valuation"
            } else {
                "different-2-valuations"
            }
        }
        _ => "mixed-parity",
    }
}

pub fn ehrhart(args: &InputArgs, t_max: u64, threads: usize) -> Result<CommandOutput, UsageError> {
    if t_max == 0 {
        return Err(UsageError("--t-max must be at least 1".into()));
    }
    let (sigma, input) = resolve_input(args)?;
    let dilates: Vec<u64> = (1..=t_max).collect();
    let counts = dilate_counts(&sigma, &dilates, threads)?;
    let lam = sigma.cycle_type();
    let mut checks = Vec::new();
    let mut rows = Vec::with_capacity(dilates.len());
    let mut all_match = true;
    for (&t, count) in dilates.iter().zip(&counts) {
        let (predicted, case, matches) = if lam.m() == 2 {
            let (l1, l2) = (lam.lengths()[0], lam.lengths()[1]);
            let p = segment_count(l1, l2, t)?;
            let ok = p == *count;
            all_match &= ok;
            (
                Some(p.to_string()),
                Some(segment_case(l1, l2, t).to_string()),
                Some(ok),
            )
        } else {
            (None, None, None)
        };
        rows.push(EhrhartRow {
            t,
            count: count.to_string(),
            predicted,
            case,
            matches,
        });
    }
    if lam.m() == 2 {
        checks.push(Check::new("segment_formula_matches_counts", all_match));
    }
    let sigma_info = SigmaInfo::from_permutation(&sigma);
    let text = render_ehrhart(&sigma_info, &rows, &checks);
    let status = status_of(&checks);
    let report = EhrhartReport {
        schema: SCHEMA,
        command: "ehrhart",
        input,
        sigma: sigma_info,
        rows,
        checks,
        status,
    };
    Ok(CommandOutput {
        text,
        json: to_json(&report),
        all_pass: status == "pass",
    })
}

fn render_ehrhart(sigma: &SigmaInfo, rows: &[EhrhartRow], checks: &[Check]) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "cycle type: {}   (n = {}, m = {})\n",
        join_usize(&sigma.cycle_type),
        sigma.n,
        sigma.m
    ));
    let with_prediction = rows.iter().any(|r| r.predicted.is_some());
    if with_prediction {
        out.push_str(&format!(
            "{:>4}  {:>12}  {:>12}  {:<22}  match\n",
            "t", "count", "predicted", "case"
        ));
    } else {
        out.push_str(&format!("{:>4}  {:>12}\n", "t", "count"));
    }
    for r in rows {
        if with_prediction {
            out.push_str(&format!(
                "{:>4}  {:>12}  {:>12}  {:<22}  {}\n",
                r.t,
                r.count,
                r.predicted.as_deref().unwrap_or("-"),
                r.case.as_deref().unwrap_or("-"),
                r.matches.map_or("-".to_string(), |b| b.to_string())
            ));
        } else {
            out.push_str(&format!("{:>4}  {:>12}\n", r.t, r.count));
        }
    }
    out.push_str(&render_checks(checks));
    out
}

pub fn subgroup(
    n: usize,
    generator_texts: &[String],
    verify: VerifyLevel,
    threads: usize,
) -> Result<CommandOutput, UsageError> {
    let generators = generator_texts
        .iter()
        .map(|g| Permutation::parse(g, Some(n)))
        .collect::<Result<Vec<Permutation>, CoreError>>()?;
    let parts: Vec<_> = generators
        .iter()
        .map(permafix_core::subgroup::cycle_partition)
        .collect();
    let join = permafix_core::subgroup::partition_join(&parts)?;
    let sigma = permafix_core::subgroup::representative_sigma(&generators)?;
    let fp = FixedPolytope::new(sigma.clone());
    let body = DescribeBody::from_polytope(&fp);
    let (volume, checks) = volume_parts(&sigma, verify, threads)?;

    let mut text = String::new();
    text.push_str(&format!("generators: {}\n", generator_texts.join("  ")));
    text.push_str(&format!("join partition: {join}\n"));
    text.push_str(&format!("representative sigma: {}\n", sigma.to_cycle_string()));
    text.push_str(&render_describe(&body));
    text.push_str(&format!("closed form volume: {}\n", volume.closed_form));
    if let Some(t) = &volume.tiling {
        text.push_str(&format!("tiling sum: {t}\n"));
    }
    if let Some(o) = &volume.oracle {
        text.push_str(&format!("ehrhart oracle: {o}\n"));
    }
    text.push_str(&render_checks(&checks));

    let status = status_of(&checks);
    let report = SubgroupReport {
        schema: SCHEMA,
        command: "subgroup",
        input: InputEcho {
            n: Some(n),
            generators: Some(generator_texts.to_vec()),
            ..Default::default()
        },
        join: join.to_string(),
        representative: sigma.to_cycle_string(),
        body,
        volume,
        checks: checks.clone(),
        status,
    };
    Ok(CommandOutput {
        text,
        json: to_json(&report),
        all_pass: status == "pass",
    })
}

fn render_checks(checks: &[Check]) -> String {
    let mut out = String::new();
    for c in checks {
        out.push_str(&format!(
            "check {}: {}\n",
            c.name,
            if c.pass { "ok" } else { "FAILED" }
        ));
    }
    if !checks.is_empty() {
        out.push_str(&format!("status: {}\n", status_of(checks)));
    }
    out
}

fn join_usize(values: &[usize]) -> String {
    values
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serialization cannot fail")
}
