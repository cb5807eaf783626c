//! Thin command-line front end over the library.
//!
//! Single-threaded dispatch: parse flags, read JSON or inline inputs, call
//! one library function, serialize a [`CommandResult`]. Exit codes: 0 on
//! success, 2 on input errors, 3 on genericity or degeneracy failures
//! that survived resampling.

use crate::chern;
use crate::chi;
use crate::crit::{self, Tolerances};
use crate::error::{Error, Result};
use crate::io::{self, CommandResult};
use crate::lattice::{LatticePoint, LatticePolytope};
use crate::laurent::{self, PolySystem, VarOrder};
use crate::mixed;
use crate::orbit;
use crate::samples;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::ToPrimitive;
use serde_json::{json, Value};
use std::collections::{BTreeMap, BTreeSet};

const USAGE: &str = "\
polychi — exact Newton-polytope invariants and numeric cross-checks

USAGE:
  polychi <subcommand> [flags]

SUBCOMMANDS:
  newton-polytope   --poly TEXT (--vars a,b,.. | --nvars N) | --file POLY.json
  volume            --file POLYTOPE.json | --points \"0,0;1,0;..\" --dim N
  mixed-volume      --file POLYTOPES.json   (JSON array of polytopes)
  bkk               system input (see below)
  chi-torus         system input
  chi-affine        system input [--param N with an sl2-section template]
  orbit degree      weights input
  orbit closed      weights input
  orbit section-chi --chi N --dim N --deg N | --file SECTION.json
  orbit catalog     [--id N [--params \"n[,m]\"]]
  crit quadric      --n N [--c RE[,IM]] | --file QUADRIC.json
  crit det          --n N [--c RE[,IM]] | --file DET.json
  crit uni          --support \"-1,0,2\"
  crit biv          system input (2 polynomials in 2 variables)
  chern chi-d       --data DATA.json | --pn N --d D
  chern chi-affine  --data DATA.json | --pn N --d D
  chern mu          --data DATA.json | --pn N --d D [--paper-sign]

SYSTEM INPUT:
  --system FILE.json        {\"nvars\": n, \"polys\": [{\"terms\": [..]}, ..]}
                            or {\"template\": \"sl2-section\"} plus --param N
  --poly \"x1^2 - x2; x2 - 1\" with --vars a,b,.. or --nvars N

WEIGHTS INPUT:
  --file WEIGHTS.json       {\"rank\": n, \"weights\": [[..], ..]}
  --weights \"1,0;-1,1;-1,-1\" with rank inferred from the entries

GLOBAL FLAGS:
  --seed N       RNG seed for numeric commands (default 0)
  --tol X        relative residual tolerance (default 1e-8)
  --plain        print the bare result instead of JSON
  --verbose      include per-stratum or per-point breakdowns
  --paper-sign   chern mu: also report the opposite sign convention
";

struct Cli {
    positional: Vec<String>,
    flags: BTreeMap<String, String>,
    switches: BTreeSet<String>,
}

const SWITCHES: [&str; 3] = ["plain", "verbose", "paper-sign"];

impl Cli {
    fn parse(args: &[String]) -> Result<Cli> {
        let mut positional = Vec::new();
        let mut flags = BTreeMap::new();
        let mut switches = BTreeSet::new();
        let mut it = args.iter().peekable();
        while let Some(a) = it.next() {
            if let Some(name) = a.strip_prefix("--") {
                if SWITCHES.contains(&name) {
                    switches.insert(name.to_string());
                } else {
                    let value = it
                        .next()
                        .ok_or_else(|| Error::Input(format!("flag --{name} needs a value")))?;
                    flags.insert(name.to_string(), value.clone());
                }
            } else {
                positional.push(a.clone());
            }
        }
        Ok(Cli { positional, flags, switches })
    }

    fn get(&self, name: &str) -> Option<&str> {
        self.flags.get(name).map(|s| s.as_str())
    }

    fn require(&self, name: &str) -> Result<&str> {
        self.get(name)
            .ok_or_else(|| Error::Input(format!("missing required flag --{name}")))
    }

    fn get_u64(&self, name: &str) -> Result<Option<u64>> {
        self.get(name)
            .map(|s| s.parse().map_err(|_| Error::Input(format!("--{name} must be an integer"))))
            .transpose()
    }

    fn require_u64(&self, name: &str) -> Result<u64> {
        self.get_u64(name)?
            .ok_or_else(|| Error::Input(format!("missing required flag --{name}")))
    }

    fn seed(&self) -> Result<u64> {
        Ok(self.get_u64("seed")?.unwrap_or(0))
    }

    fn tolerances(&self) -> Result<Tolerances> {
        let mut tol = Tolerances::default();
        if let Some(t) = self.get("tol") {
            tol.residual = t
                .parse()
                .map_err(|_| Error::Input("--tol must be a number".into()))?;
        }
        Ok(tol)
    }

    fn plain(&self) -> bool {
        self.switches.contains("plain")
    }

    fn verbose(&self) -> bool {
        self.switches.contains("verbose")
    }

    fn paper_sign(&self) -> bool {
        self.switches.contains("paper-sign")
    }
}

/// Run the CLI on pre-split arguments (without the program name) and
/// return the process exit code.
pub fn run(args: Vec<String>) -> i32 {
    match dispatch(&args) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("{e}");
            e.exit_code()
        }
    }
}

fn dispatch(args: &[String]) -> Result<i32> {
    let cli = Cli::parse(args)?;
    let Some(cmd) = cli.positional.first().map(|s| s.as_str()) else {
        eprint!("{USAGE}");
        return Ok(2);
    };
    match cmd {
        "help" => {
            print!("{USAGE}");
            Ok(0)
        }
        "newton-polytope" => newton_polytope_cmd(&cli),
        "volume" => volume_cmd(&cli),
        "mixed-volume" => mixed_volume_cmd(&cli),
        "bkk" => bkk_cmd(&cli),
        "chi-torus" => chi_torus_cmd(&cli),
        "chi-affine" => chi_affine_cmd(&cli),
        "orbit" => orbit_cmd(&cli),
        "crit" => crit_cmd(&cli),
        "chern" => chern_cmd(&cli),
        other => {
            eprintln!("unknown subcommand '{other}'");
            eprint!("{USAGE}");
            Ok(2)
        }
    }
}

fn subcommand<'c>(cli: &'c Cli, choices: &[&str]) -> Result<&'c str> {
    let sub = cli
        .positional
        .get(1)
        .map(|s| s.as_str())
        .ok_or_else(|| Error::Input(format!("expected one of {choices:?}")))?;
    if !choices.contains(&sub) {
        return Err(Error::Input(format!("'{sub}' is not one of {choices:?}")));
    }
    Ok(sub)
}

// ---------------------------------------------------------------------------
// Input plumbing
// ---------------------------------------------------------------------------

fn load_json(path: &str) -> Result<Value> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("cannot read {path}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| Error::Input(format!("bad JSON in {path}: {e}")))
}

fn var_order(cli: &Cli) -> Result<VarOrder> {
    if let Some(names) = cli.get("vars") {
        let names: Vec<String> = names.split(',').map(|s| s.trim().to_string()).collect();
        if names.iter().any(|s| s.is_empty()) {
            return Err(Error::Input("empty variable name".into()));
        }
        return Ok(VarOrder::Named(names));
    }
    if let Some(n) = cli.get_u64("nvars")? {
        return Ok(VarOrder::Indexed(n as usize));
    }
    Err(Error::Input("polynomial text input needs --vars or --nvars".into()))
}

/// A system plus the canonical bytes used for the inputs digest.
fn system_input(cli: &Cli) -> Result<(PolySystem, String)> {
    if let Some(path) = cli.get("system").or_else(|| cli.get("file")) {
        let v = load_json(path)?;
        if v.get("template").and_then(|t| t.as_str()) == Some("sl2-section") {
            let n = cli.require_u64("param")?;
            if n == 0 {
                return Err(Error::Input("--param must be positive".into()));
            }
            let sys = samples::sl2_section_system(n);
            return Ok((sys, format!("sl2-section:{n}")));
        }
        let sys = io::parse_system(&v)?;
        let canon = canonical_system(&sys);
        return Ok((sys, canon));
    }
    if let Some(text) = cli.get("poly") {
        let vars = var_order(cli)?;
        let mut polys = Vec::new();
        for chunk in text.split(';') {
            polys.push(laurent::parse(chunk, &vars)?);
        }
        let sys = PolySystem::new(vars.num_vars(), polys)?;
        let canon = canonical_system(&sys);
        return Ok((sys, canon));
    }
    Err(Error::Input("need --system FILE or --poly TEXT".into()))
}

fn canonical_system(sys: &PolySystem) -> String {
    let polys: Vec<Value> = sys.polys().iter().map(io::poly_to_json).collect();
    json!({"nvars": sys.num_vars(), "polys": polys}).to_string()
}

fn weights_input(cli: &Cli) -> Result<(orbit::WeightSet, String)> {
    if let Some(path) = cli.get("file") {
        let v = load_json(path)?;
        let w = io::parse_weights(&v)?;
        let canon = v.to_string();
        return Ok((w, canon));
    }
    if let Some(text) = cli.get("weights") {
        let mut weights = Vec::new();
        for chunk in text.split(';') {
            let coords: Result<Vec<i64>> = chunk
                .split(',')
                .map(|s| {
                    s.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::Input(format!("bad weight coordinate '{s}'")))
                })
                .collect();
            weights.push(LatticePoint::from_i64(&coords?));
        }
        let rank = weights.first().map(|w| w.dim()).unwrap_or(0);
        let w = orbit::WeightSet::new(rank, weights)?;
        return Ok((w, text.to_string()));
    }
    Err(Error::Input("need --file WEIGHTS.json or --weights \"..\"".into()))
}

fn chern_data(cli: &Cli) -> Result<(chern::IntersectionData, String)> {
    if let Some(path) = cli.get("data") {
        let v = load_json(path)?;
        return Ok((io::parse_intersection_data(&v)?, v.to_string()));
    }
    if let Some(n) = cli.get_u64("pn")? {
        let d = cli.require_u64("d")?;
        let data = chern::IntersectionData::projective_space(n as usize, d)?;
        return Ok((data, format!("pn:{n}:d:{d}")));
    }
    Err(Error::Input("need --data FILE or --pn N --d D".into()))
}

fn parse_complex_flag(cli: &Cli, name: &str, default: Complex64) -> Result<Complex64> {
    match cli.get(name) {
        None => Ok(default),
        Some(text) => {
            let parts: Vec<&str> = text.split(',').collect();
            let bad = || Error::Input(format!("--{name} must be RE or RE,IM"));
            match parts.as_slice() {
                [re] => Ok(Complex64::new(re.trim().parse().map_err(|_| bad())?, 0.0)),
                [re, im] => Ok(Complex64::new(
                    re.trim().parse().map_err(|_| bad())?,
                    im.trim().parse().map_err(|_| bad())?,
                )),
                _ => Err(bad()),
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Output plumbing
// ---------------------------------------------------------------------------

fn bigint_value(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

fn complex_value(z: Complex64) -> Value {
    json!([z.re, z.im])
}

fn report_value(report: &crit::CritReport, verbose: bool) -> (Value, Option<Value>) {
    let result = json!({"count": report.count, "max_residual": report.max_residual});
    let breakdown = verbose.then(|| {
        Value::Array(
            report
                .points
                .iter()
                .map(|p| Value::Array(p.iter().map(|&z| complex_value(z)).collect()))
                .collect(),
        )
    });
    (result, breakdown)
}

fn emit(
    cli: &Cli,
    command: &str,
    input_bytes: &str,
    seed: Option<u64>,
    result: Value,
    breakdown: Option<Value>,
    plain_text: String,
) -> Result<i32> {
    if cli.plain() {
        println!("{plain_text}");
    } else {
        let out = CommandResult {
            command: command.to_string(),
            inputs: io::digest(input_bytes.as_bytes()),
            seed,
            result,
            breakdown,
        };
        println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

fn single_poly_input(cli: &Cli) -> Result<(laurent::LaurentPolynomial, String)> {
    if let Some(path) = cli.get("file") {
        let v = load_json(path)?;
        let nvars = v
            .get("nvars")
            .and_then(|n| n.as_u64())
            .ok_or_else(|| Error::Input("polynomial JSON needs nvars".into()))? as usize;
        let p = io::parse_poly(&v, nvars)?;
        return Ok((p, v.to_string()));
    }
    if let Some(text) = cli.get("poly") {
        let vars = var_order(cli)?;
        let p = laurent::parse(text, &vars)?;
        let canon = io::poly_to_json(&p).to_string();
        return Ok((p, canon));
    }
    Err(Error::Input("need --poly TEXT or --file POLY.json".into()))
}

fn newton_polytope_cmd(cli: &Cli) -> Result<i32> {
    let (poly, canon) = single_poly_input(cli)?;
    let np = poly.newton_polytope()?;
    let as_json = io::polytope_to_json(&np);
    let plain = as_json.to_string();
    emit(cli, "newton-polytope", &canon, None, as_json, None, plain)
}

fn polytope_input(cli: &Cli) -> Result<(LatticePolytope, String)> {
    if let Some(path) = cli.get("file") {
        let v = load_json(path)?;
        return Ok((io::parse_polytope(&v)?, v.to_string()));
    }
    if let Some(text) = cli.get("points") {
        let dim = cli.require_u64("dim")? as usize;
        let mut pts = Vec::new();
        for chunk in text.split(';') {
            let coords: Result<Vec<i64>> = chunk
                .split(',')
                .map(|s| {
                    s.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::Input(format!("bad coordinate '{s}'")))
                })
                .collect();
            pts.push(LatticePoint::from_i64(&coords?));
        }
        return Ok((LatticePolytope::hull(&pts, dim)?, text.to_string()));
    }
    Err(Error::Input("need --file POLYTOPE.json or --points \"..\" --dim N".into()))
}

fn volume_cmd(cli: &Cli) -> Result<i32> {
    let (p, canon) = polytope_input(cli)?;
    let vol = p.normalized_volume()?;
    emit(cli, "volume", &canon, None, bigint_value(&vol), None, vol.to_string())
}

fn mixed_volume_cmd(cli: &Cli) -> Result<i32> {
    let path = cli.require("file")?;
    let v = load_json(path)?;
    let polytopes = io::parse_polytope_list(&v)?;
    let tuple = mixed::PolytopeTuple::new(polytopes)?;
    let mv = mixed::mixed_volume_normalized(&tuple)?;
    emit(cli, "mixed-volume", &v.to_string(), None, bigint_value(&mv), None, mv.to_string())
}

fn bkk_cmd(cli: &Cli) -> Result<i32> {
    let (sys, canon) = system_input(cli)?;
    let count = mixed::bkk_count(&sys)?;
    emit(cli, "bkk", &canon, None, bigint_value(&count), None, count.to_string())
}

fn chi_torus_cmd(cli: &Cli) -> Result<i32> {
    let (sys, canon) = system_input(cli)?;
    let polytopes: Result<Vec<LatticePolytope>> =
        sys.polys().iter().map(|p| p.newton_polytope()).collect();
    let chi = chi::chi_torus_ci(&polytopes?)?;
    emit(cli, "chi-torus", &canon, None, bigint_value(&chi), None, chi.to_string())
}

fn chi_affine_cmd(cli: &Cli) -> Result<i32> {
    let (sys, canon) = system_input(cli)?;
    let report = chi::chi_affine_ci(&sys)?;
    let breakdown = cli.verbose().then(|| {
        Value::Array(
            report
                .strata
                .iter()
                .map(|s| {
                    json!({
                        "zero_set": s.zero_set,
                        "kind": match s.kind {
                            chi::StratumKind::Torus => "torus",
                            chi::StratumKind::NoSolutions => "no-solutions",
                            chi::StratumKind::Overdetermined => "overdetermined",
                        },
                        "value": bigint_value(&s.value),
                    })
                })
                .collect(),
        )
    });
    let plain = report.total.to_string();
    emit(cli, "chi-affine", &canon, None, bigint_value(&report.total), breakdown, plain)
}

fn orbit_cmd(cli: &Cli) -> Result<i32> {
    match subcommand(cli, &["degree", "closed", "section-chi", "catalog"])? {
        "degree" => {
            let (w, canon) = weights_input(cli)?;
            let deg = orbit::torus_orbit_degree(&w)?;
            emit(cli, "orbit degree", &canon, None, bigint_value(&deg), None, deg.to_string())
        }
        "closed" => {
            let (w, canon) = weights_input(cli)?;
            let closed = orbit::is_closed_orbit_embedding(&w)?;
            emit(cli, "orbit closed", &canon, None, json!(closed), None, closed.to_string())
        }
        "section-chi" => {
            let (chi_x, dim_x, degree, canon) = if let Some(path) = cli.get("file") {
                let v = load_json(path)?;
                let chi_x = v
                    .get("chi_x")
                    .and_then(|x| x.as_i64())
                    .ok_or_else(|| Error::Input("section JSON needs chi_x".into()))?;
                let dim_x = v
                    .get("dim_x")
                    .and_then(|x| x.as_u64())
                    .ok_or_else(|| Error::Input("section JSON needs dim_x".into()))?;
                let degree = v
                    .get("degree")
                    .and_then(|x| x.as_u64())
                    .ok_or_else(|| Error::Input("section JSON needs degree".into()))?;
                (chi_x, dim_x, degree, v.to_string())
            } else {
                let chi_x: i64 = cli
                    .require("chi")?
                    .parse()
                    .map_err(|_| Error::Input("--chi must be an integer".into()))?;
                let dim_x = cli.require_u64("dim")?;
                let degree = cli.require_u64("deg")?;
                (chi_x, dim_x, degree, format!("chi:{chi_x}:dim:{dim_x}:deg:{degree}"))
            };
            let chi = orbit::section_chi(BigInt::from(chi_x), dim_x, degree);
            emit(cli, "orbit section-chi", &canon, None, bigint_value(&chi), None, chi.to_string())
        }
        "catalog" => {
            match cli.get_u64("id")? {
                None => {
                    let table: Vec<Value> = orbit::CATALOG
                        .iter()
                        .map(|f| serde_json::to_value(f).expect("serializable"))
                        .collect();
                    let v = Value::Array(table);
                    let plain = v.to_string();
                    emit(cli, "orbit catalog", "all", None, v, None, plain)
                }
                Some(id) => {
                    let params: Vec<u64> = match cli.get("params") {
                        None => Vec::new(),
                        Some(text) => text
                            .split(',')
                            .map(|s| {
                                s.trim().parse().map_err(|_| {
                                    Error::Input(format!("bad parameter '{s}'"))
                                })
                            })
                            .collect::<Result<_>>()?,
                    };
                    let entry = orbit::catalog_lookup(id as u32, &params)?;
                    let value = serde_json::to_value(&entry).expect("serializable");
                    let section = orbit::catalog_section_chi(id as u32, &params).ok();
                    let result = match &section {
                        Some(s) => json!({"entry": value, "section_chi": bigint_value(s)}),
                        None => json!({"entry": value, "section_chi": Value::Null}),
                    };
                    let plain = match section {
                        Some(s) => s.to_string(),
                        None => "null".to_string(),
                    };
                    emit(cli, "orbit catalog", &format!("id:{id}:{params:?}"), None, result, None, plain)
                }
            }
        }
        _ => unreachable!(),
    }
}

fn crit_cmd(cli: &Cli) -> Result<i32> {
    let seed = cli.seed()?;
    let tol = cli.tolerances()?;
    match subcommand(cli, &["quadric", "det", "uni", "biv"])? {
        "quadric" => {
            let (report, canon) = if let Some(path) = cli.get("file") {
                let v = load_json(path)?;
                let f_raw = v
                    .get("f")
                    .and_then(|f| f.as_array())
                    .ok_or_else(|| Error::Input("quadric JSON needs f".into()))?;
                let f: Result<Vec<Complex64>> = f_raw.iter().map(io::parse_complex).collect();
                let c = io::parse_complex(
                    v.get("c").ok_or_else(|| Error::Input("quadric JSON needs c".into()))?,
                )?;
                (crit::quadric_crit(&f?, c, &tol)?, v.to_string())
            } else {
                let n = cli.require_u64("n")? as usize;
                let c = parse_complex_flag(cli, "c", Complex64::new(1.0, 0.0))?;
                (crit::quadric_crit_random(n, c, seed, &tol)?, format!("quadric:n:{n}"))
            };
            let (result, breakdown) = report_value(&report, cli.verbose());
            let plain = report.count.to_string();
            emit(cli, "crit quadric", &canon, Some(seed), result, breakdown, plain)
        }
        "det" => {
            let (report, canon) = if let Some(path) = cli.get("file") {
                let v = load_json(path)?;
                let rows = v
                    .get("f_matrix")
                    .and_then(|f| f.as_array())
                    .ok_or_else(|| Error::Input("det JSON needs f_matrix".into()))?;
                let mut f = Vec::with_capacity(rows.len());
                for row in rows {
                    let row = row
                        .as_array()
                        .ok_or_else(|| Error::Input("matrix rows must be arrays".into()))?;
                    let parsed: Result<Vec<Complex64>> =
                        row.iter().map(io::parse_complex).collect();
                    f.push(parsed?);
                }
                let c = io::parse_complex(
                    v.get("c").ok_or_else(|| Error::Input("det JSON needs c".into()))?,
                )?;
                (crit::det_crit(&f, c, &tol)?, v.to_string())
            } else {
                let n = cli.require_u64("n")? as usize;
                let c = parse_complex_flag(cli, "c", Complex64::new(1.0, 0.0))?;
                (crit::det_crit_random(n, c, seed, &tol)?, format!("det:n:{n}"))
            };
            let (result, breakdown) = report_value(&report, cli.verbose());
            let plain = report.count.to_string();
            emit(cli, "crit det", &canon, Some(seed), result, breakdown, plain)
        }
        "uni" => {
            let support: Result<Vec<i64>> = cli
                .require("support")?
                .split(',')
                .map(|s| {
                    s.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::Input(format!("bad exponent '{s}'")))
                })
                .collect();
            let support = support?;
            let count = crit::univariate_crit_count(&support, seed, &tol)?;
            emit(
                cli,
                "crit uni",
                &format!("{support:?}"),
                Some(seed),
                json!(count),
                None,
                count.to_string(),
            )
        }
        "biv" => {
            let (sys, canon) = system_input(cli)?;
            let count = crit::bivariate_root_count(&sys, seed, &tol)?;
            emit(cli, "crit biv", &canon, Some(seed), json!(count), None, count.to_string())
        }
        _ => unreachable!(),
    }
}

fn chern_cmd(cli: &Cli) -> Result<i32> {
    let (data, canon) = chern_data(cli)?;
    match subcommand(cli, &["chi-d", "chi-affine", "mu"])? {
        "chi-d" => {
            let chi = chern::chi_divisor(&data)?;
            emit(cli, "chern chi-d", &canon, None, bigint_value(&chi), None, chi.to_string())
        }
        "chi-affine" => {
            let chi = chern::chi_affine_divisor(&data)?;
            emit(cli, "chern chi-affine", &canon, None, bigint_value(&chi), None, chi.to_string())
        }
        "mu" => {
            let chi_m = data.chi_m();
            let mu = chern::mu_from_chern(&data, &chi_m)?;
            if cli.paper_sign() {
                let alt = chern::mu_from_chern_alternate_sign(&data, &chi_m)?;
                let result = json!({"mu": bigint_value(&mu), "mu_alternate_sign": bigint_value(&alt)});
                let plain = format!("{mu} {alt}");
                emit(cli, "chern mu", &canon, None, result, None, plain)
            } else {
                emit(cli, "chern mu", &canon, None, bigint_value(&mu), None, mu.to_string())
            }
        }
        _ => unreachable!(),
    }
}
