use jsob_core::algebra::rational::{self, format, to_f64, ExactRational};
use jsob_core::algebra::Surd;
use jsob_core::jacobi::{JacobiParams, Normalization};
use jsob_core::numeric::{chel_k, galerkin_spectrum, ChelInstance};
use jsob_core::operators::{gram_matrix, spectrum, InnerProductSpec, OperatorTag, SpectrumSpec};
use jsob_core::stirling::build_table;
use serde_json::{json, Value};

use crate::cache::PolyCache;
use crate::config::CliConfig;
use crate::output::{format_float, Table};
use crate::record::PolynomialRecord;
use crate::Failure;

/// One command result in every output format.
pub struct Output {
    pub json: Value,
    pub table: Table,
    /// Replaces the table rendering in `pretty` mode when set.
    pub pretty: Option<String>,
    pub exit_code: u8,
}

impl Output {
    fn new(json: Value, table: Table) -> Self {
        Self { json, table, pretty: None, exit_code: 0 }
    }
}

fn parse_k(text: Option<&str>, config: &CliConfig) -> Result<ExactRational, Failure> {
    match text {
        Some(t) => Ok(rational::parse(t)?),
        None => Ok(config.default_k.clone()),
    }
}

pub fn stirling(max_n: usize) -> Result<Output, Failure> {
    let table = build_table(max_n)?;
    let rows: Vec<Vec<String>> = (0..=max_n)
        .map(|j| table.row(j).iter().map(|v| v.to_string()).collect())
        .collect();
    let json = json!({ "maxN": max_n, "rows": rows });
    Ok(Output::new(json, Table::headerless(rows)))
}

pub fn poly(
    cache: &mut PolyCache,
    n: usize,
    alpha: &str,
    beta: &str,
    normalization: &str,
) -> Result<Output, Failure> {
    let params = JacobiParams::new(rational::parse(alpha)?, rational::parse(beta)?)?;
    let norm = Normalization::parse(normalization)?;
    let value = cache.member(n, &params, norm)?;
    let record = PolynomialRecord::new(&params, n, norm, &value);
    let mut table = Table::new(&PolynomialRecord::CSV_HEADER);
    table.push(record.csv_row());
    let pretty = format!(
        "P_{n}^({},{}) [{}]\nscale^2 = {}\npoly = {}\n",
        record.alpha,
        record.beta,
        record.normalization,
        record.scale_squared,
        value.poly()
    );
    let mut out = Output::new(serde_json::to_value(&record).expect("record serializes"), table);
    out.pretty = Some(pretty);
    Ok(out)
}

pub struct GramArgs<'a> {
    pub ip: &'a str,
    pub max_degree: usize,
    pub k: Option<&'a str>,
    pub alpha: &'a str,
    pub beta: &'a str,
    pub n: usize,
    pub family: Option<&'a str>,
}

pub fn gram(args: GramArgs<'_>, config: &CliConfig) -> Result<Output, Failure> {
    let (spec, default_family) = match args.ip {
        "phi" => (InnerProductSpec::SobolevPhi, Normalization::PhiOrthonormal),
        "classical" => {
            let params = JacobiParams::new(rational::parse(args.alpha)?, rational::parse(args.beta)?)?;
            (InnerProductSpec::Classical(params), Normalization::L2Orthonormal)
        }
        "left-definite" => (
            InnerProductSpec::left_definite(args.n, parse_k(args.k, config)?)?,
            Normalization::L2Orthonormal,
        ),
        other => {
            return Err(Failure::Usage(format!(
                "unknown inner product {other:?}; expected phi, classical or left-definite"
            )))
        }
    };
    let family = match args.family {
        Some(text) => Normalization::parse(text)?,
        None => default_family,
    };
    let matrix = gram_matrix(args.max_degree, &spec, family)?;
    let rows: Vec<Vec<String>> = matrix
        .entries
        .iter()
        .map(|row| row.iter().map(Surd::to_string).collect())
        .collect();
    let json = json!({
        "innerProduct": spec.to_string(),
        "family": family.name(),
        "degrees": matrix.degrees,
        "identity": matrix.is_identity(),
        "entries": rows,
    });
    Ok(Output::new(json, Table::headerless(rows)))
}

pub fn parse_operator(text: &str) -> Result<OperatorTag, Failure> {
    match text {
        "A" | "a" => Ok(OperatorTag::A),
        "T" | "t" => Ok(OperatorTag::T),
        _ => text
            .strip_prefix(['B', 'b'])
            .and_then(|n| n.parse::<usize>().ok())
            .map(OperatorTag::Bn)
            .ok_or_else(|| Failure::Usage(format!("unknown operator {text:?}; expected A, T or B<n>"))),
    }
}

pub fn spectrum_cmd(
    operator: &str,
    k: Option<&str>,
    count: usize,
    galerkin: Option<usize>,
    config: &CliConfig,
) -> Result<Output, Failure> {
    let tag = parse_operator(operator)?;
    let k = parse_k(k, config)?;
    let spec = SpectrumSpec::new(tag, k.clone())?;
    let points = spectrum(&spec, count)?;
    let digits = config.float_digits;
    let numeric = match galerkin {
        None => None,
        Some(_) if tag != OperatorTag::A => {
            return Err(Failure::Usage("--galerkin discretizes the operator A only".into()))
        }
        Some(size) => Some(galerkin_spectrum(size, to_f64(&k))?),
    };
    let mut table = if numeric.is_some() {
        Table::new(&["index", "value", "numeric", "absError"])
    } else {
        Table::new(&["index", "value"])
    };
    let mut json_points = Vec::new();
    for (i, p) in points.iter().enumerate() {
        let mut row = vec![p.index.to_string(), format(&p.value)];
        let mut entry = json!({ "index": p.index, "value": format(&p.value) });
        if let Some(values) = &numeric {
            let (approx, error) = match values.get(i) {
                Some(&v) => (format_float(v, digits), format_float((v - to_f64(&p.value)).abs(), digits)),
                None => (String::new(), String::new()),
            };
            entry["numeric"] = json!(approx);
            entry["absError"] = json!(error);
            row.push(approx);
            row.push(error);
        }
        table.push(row);
        json_points.push(entry);
    }
    let mut json = json!({ "operator": tag.to_string(), "k": format(&k), "points": json_points });
    if let Some(size) = galerkin {
        json["galerkinSize"] = json!(size);
    }
    Ok(Output::new(json, table))
}

pub fn chel(case: &str, grid: usize, config: &CliConfig) -> Result<Output, Failure> {
    let instance = ChelInstance::preset(case)?;
    let result = chel_k(&instance, grid)?;
    let digits = config.float_digits;
    let cells = [
        format_float(result.k_max, digits),
        format_float(result.k_max_squared(), digits),
        format_float(result.argmax, digits),
    ];
    let json = json!({
        "case": instance.name,
        "grid": grid,
        "kMax": cells[0],
        "kMaxSquared": cells[1],
        "argmax": cells[2],
    });
    let mut table = Table::new(&["case", "grid", "kMax", "kMaxSquared", "argmax"]);
    table.push(
        [instance.name.to_string(), grid.to_string()]
            .into_iter()
            .chain(cells)
            .collect(),
    );
    Ok(Output::new(json, table))
}
