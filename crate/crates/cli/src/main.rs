use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hodge_core::cover_homology::{
    build_cover_graph, h1_with_deck_action, minus_part, prym_lattice_model,
};
use hodge_core::curve_model;
use hodge_core::lie_engine::{self, decompose, evaluate, invariant_dim, weyl_dim};
use hodge_core::qalg::{
    embed_f_in_m2k, embed_homomorphism_check, group_ring_wedderburn, hurwitz_index_identity,
    AlgebraParams, OrderLattice, QuatElem,
};
use hodge_core::report::{self, Config, Format};
use hodge_core::spin_explicit::{build_spin_rep, compare_with_printed, so7_invariant};
use hodge_core::surface_homs::{enumerate_surjections, normalize_hom, verify_psi_in_ag, HomTuple};
use hodge_core::weil_classes::weil_report;
use hodge_core::Rat;

#[derive(Parser)]
#[command(
    name = "hodge",
    version,
    about = "Exact checks for quaternionic Pryms and Hodge class counts"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Quaternion algebra checks.
    Qalg {
        #[arg(long, value_enum)]
        check: QalgCheck,
    },
    /// Homomorphisms from a surface group onto Q.
    #[command(group(clap::ArgGroup::new("action").required(true)))]
    Homs(HomsArgs),
    /// Lattice model of the Prym of a quaternionic cover.
    Prym {
        #[arg(long)]
        genus: usize,
        /// Images of alpha_1..alpha_g, beta_1..beta_g, e.g. "1,i,j,1".
        #[arg(long, allow_hyphen_values = true)]
        hom: Option<String>,
        #[arg(long)]
        report: bool,
        #[arg(long, default_value_t = 200_000)]
        budget: usize,
    },
    /// Weight multisets and decompositions.
    Lie {
        #[arg(long, conflicts_with = "decompose")]
        scenario: Option<String>,
        /// Algebra and expression, e.g. `--decompose B3 "wedge(2, Γ)"`.
        #[arg(long, num_args = 2, value_names = ["ALG", "EXPR"])]
        decompose: Option<Vec<String>>,
    },
    /// The spin representation of so(7) and its invariant in wedge4.
    Spin {
        #[arg(long)]
        invariant: bool,
        #[arg(long)]
        check_bracket: bool,
    },
    /// Weil and quaternion class spaces.
    Weil {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "-1,-1", allow_hyphen_values = true)]
        params: String,
        #[arg(long)]
        report: bool,
    },
    /// The genus-2 curve y^2 = x^5 - x and its model in P^4.
    Curve {
        #[arg(long, value_enum)]
        check: CurveCheck,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        n: Option<u64>,
    },
    /// Run all registered checks and print the claim table.
    Report {
        #[arg(long)]
        module: Option<String>,
        #[arg(long, default_value = "json")]
        format: String,
        #[arg(long)]
        config: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum QalgCheck {
    Nonfree,
    Wedderburn,
    Embed,
}

#[derive(Clone, Copy, ValueEnum)]
enum CurveCheck {
    Autos,
    Quadrics,
    Action,
    Quartics,
    Locus,
    Numerology,
}

#[derive(Args)]
struct HomsArgs {
    #[arg(long)]
    genus: usize,
    #[arg(long, group = "action")]
    enumerate: bool,
    #[arg(
        long,
        group = "action",
        allow_hyphen_values = true,
        value_name = "TUPLE"
    )]
    normalize: Option<String>,
    #[arg(long, group = "action")]
    verify_psi: bool,
    #[arg(long, default_value_t = 200_000)]
    budget: usize,
}

fn claim(name: &str, expected: impl ToString, computed: impl ToString) -> (Value, bool) {
    let (e, c) = (expected.to_string(), computed.to_string());
    let ok = e == c;
    (
        json!({"claim": name, "expected": e, "computed": c, "status": if ok { "PASS" } else { "FAIL" }}),
        ok,
    )
}

fn claims(list: Vec<(Value, bool)>) -> (Value, bool) {
    let ok = list.iter().all(|(_, b)| *b);
    (Value::Array(list.into_iter().map(|(v, _)| v).collect()), ok)
}

fn parse_params(s: &str) -> Result<AlgebraParams> {
    let (r, s) = s.split_once(',').context("params must be r,s")?;
    let r: Rat = r.trim().parse().context("bad r")?;
    let s: Rat = s.trim().parse().context("bad s")?;
    Ok(AlgebraParams::new(r, s)?)
}

fn qalg(check: QalgCheck) -> Result<(Value, bool)> {
    let p = AlgebraParams::hamilton();
    Ok(match check {
        QalgCheck::Nonfree => {
            let order = OrderLattice::hurwitz();
            let mut list = Vec::new();
            for (name, m) in [
                ("1", QuatElem::one(&p)),
                ("zeta", QuatElem::zeta()),
                ("i", QuatElem::i(&p)),
            ] {
                let r = hurwitz_index_identity(&m)?;
                list.push(claim(&format!("index d(m) for m = {name}"), 2, r.d));
            }
            let mut bad = 0;
            let mut total = 0;
            for code in 0..7i64.pow(4) {
                let c: [i64; 4] = std::array::from_fn(|t| (code / 7i64.pow(t as u32)) % 7 - 3);
                if c != [0; 4] {
                    total += 1;
                    bad += u32::from(!hurwitz_index_identity(&order.element(c))?.check);
                }
            }
            list.push(claim(
                "d(m) = 2 N(m)^2 on [-3,3]^4 minus 0",
                format!("0 of {total} fail"),
                format!("{bad} of {total} fail"),
            ));
            claims(list)
        }
        QalgCheck::Wedderburn => {
            let w = group_ring_wedderburn();
            let s: Vec<String> = w
                .summary()
                .iter()
                .map(|(d, f)| format!("({d},{f:+})"))
                .collect();
            claims(vec![claim(
                "(degree, Frobenius-Schur) of the irreducible characters of Q",
                "[(1,+1),(1,+1),(1,+1),(1,+1),(2,-1)]",
                format!("[{}]", s.join(",")),
            )])
        }
        QalgCheck::Embed => {
            let f = AlgebraParams::new(
                Rat::from_integer((-1).into()),
                Rat::from_integer((-3).into()),
            )?;
            let ej = embed_f_in_m2k(&QuatElem::j(&f)).entries;
            let e = embed_homomorphism_check(&f, 20);
            claims(vec![
                claim(
                    "image of j",
                    "[[0,1],[-3,0]]",
                    format!(
                        "[[{},{}],[{},{}]]",
                        ej[0][0].u, ej[0][1].u, ej[1][0].u, ej[1][1].u
                    ),
                ),
                claim("additive on 20 pairs", true, e.additive),
                claim("multiplicative on 20 pairs", true, e.multiplicative),
                claim("unital", true, e.unital),
                claim("injective", true, e.injective),
            ])
        }
    })
}

fn homs(a: &HomsArgs) -> Result<(Value, bool)> {
    if a.enumerate {
        let r = enumerate_surjections(a.genus)?;
        return Ok((serde_json::to_value(&r)?, true));
    }
    if a.verify_psi {
        let mut list = Vec::new();
        for k in 1..a.genus {
            list.push(claim(
                &format!("psi_{k} carries R to a conjugate"),
                true,
                verify_psi_in_ag(a.genus, k)?,
            ));
        }
        if list.is_empty() {
            bail!("psi_k needs genus >= 2");
        }
        return Ok(claims(list));
    }
    let tuple = a
        .normalize
        .as_deref()
        .context("one of --enumerate, --normalize, --verify-psi")?;
    let h = HomTuple::parse(a.genus, tuple)?;
    let n = normalize_hom(&h, a.budget)?;
    let moves: Vec<String> = n.moves.iter().map(|m| m.kind.to_string()).collect();
    Ok((
        json!({
            "input": h.to_string(),
            "reached": n.reached,
            "phase": n.phase,
            "moves": moves,
            "nodes_explored": n.nodes_explored,
        }),
        n.reached,
    ))
}

fn prym(genus: usize, hom: Option<&str>, budget: usize) -> Result<(Value, bool)> {
    let h = hom.map(|s| HomTuple::parse(genus, s)).transpose()?;
    let model = prym_lattice_model(genus, h.as_ref(), budget)?;
    let f = HomTuple::standard(genus)?;
    let h1 = h1_with_deck_action(&build_cover_graph(&f)?)?;
    let minus = minus_part(&h1);
    let ok = model.symplectic
        && model.is_homomorphism
        && model.basis_spans_minus_part
        && model.minus_one_is_minus_identity;
    Ok((
        json!({
            "genus": genus,
            "h1_rank": h1.rank(),
            "minus_rank": minus.basis.len(),
            "elementary_divisors": minus.elementary_divisors(),
            "prym_rank": model.rank,
            "module_type": model.type_string,
            "a_blocks": model.a_types,
            "symplectic": model.symplectic,
            "is_homomorphism": model.is_homomorphism,
            "minus_one_is_minus_identity": model.minus_one_is_minus_identity,
            "basis_spans_minus_part": model.basis_spans_minus_part,
            "normalization_moves": model.normalization_moves,
        }),
        ok,
    ))
}

fn lie(scenario: Option<&str>, dec: Option<&[String]>) -> Result<(Value, bool)> {
    if let Some(name) = scenario {
        let r = lie_engine::scenario_report(name)?;
        let ok = r.all_pass();
        return Ok((serde_json::to_value(&r)?, ok));
    }
    let [alg, expr] = dec.context("one of --scenario or --decompose")? else {
        bail!("--decompose takes ALG EXPR");
    };
    let (alg, ms) = evaluate(alg, expr)?;
    let d = decompose(&alg, &ms)?;
    let parts: Vec<Value> = d
        .constituents
        .iter()
        .map(|(w, m)| {
            Ok(json!({"highest_weight": w.to_string(), "mult": m, "dim": weyl_dim(&alg, w)?}))
        })
        .collect::<Result<_>>()?;
    Ok((
        json!({
            "algebra": alg.to_string(),
            "dim": ms.dim(),
            "weights": ms,
            "decomposition": parts,
            "decomposition_string": d.to_string(),
            "invariant_dim": invariant_dim(&alg, &ms)?,
        }),
        true,
    ))
}

fn spin(invariant: bool, bracket: bool) -> Result<(Value, bool)> {
    let rep = build_spin_rep()?;
    if bracket {
        let r = rep.check_brackets();
        let label = |t: usize| format!("e{}^e{}", rep.pairs[t].0, rep.pairs[t].1);
        let mut lines = Vec::new();
        for x in 0..rep.pairs.len() {
            for y in x + 1..rep.pairs.len() {
                let bad = r.failures.contains(&(rep.pairs[x], rep.pairs[y]));
                lines.push(format!(
                    "[{}, {}] {}",
                    label(x),
                    label(y),
                    if bad { "FAIL" } else { "PASS" }
                ));
            }
        }
        return Ok((
            json!({"checked": r.checked, "failures": r.failures.len(), "pairs": lines}),
            r.passed(),
        ));
    }
    if !invariant {
        bail!("one of --invariant or --check-bracket");
    }
    let inv = so7_invariant(&rep)?;
    let cmp = compare_with_printed(&inv);
    let terms: Vec<Value> = inv
        .terms
        .iter()
        .map(|(m, c)| json!({"monomial": m, "coefficient": c.to_string()}))
        .collect();
    Ok((
        json!({
            "kernel_dim": inv.kernel_dim,
            "fixed_by_all_generators": inv.fixed_by_all_generators,
            "terms": terms,
            "printed_comparison": cmp,
            "printed_status": if cmp.all_agree() { "PASS" } else { "FLAGGED" },
        }),
        inv.fixed_by_all_generators,
    ))
}

fn weil(n: usize, params: &str) -> Result<(Value, bool)> {
    let r = weil_report(n, parse_params(params)?)?;
    let ok = r.dim_wk == 2 && r.dim_wf == 2 * n + 1;
    Ok((
        json!({
            "n": r.n,
            "params": r.params,
            "dim_WK": r.dim_wk,
            "dim_WF": r.dim_wf,
            "generators_used": r.generators_used,
            "translates_used": r.translates_used,
            "wk_in_wf": r.wk_in_wf,
            "wf_stable": r.wf_stable,
        }),
        ok,
    ))
}

fn curve(check: CurveCheck, p: Option<u64>, n: Option<u64>) -> Result<(Value, bool)> {
    Ok(match check {
        CurveCheck::Autos => {
            let r = curve_model::verify_curve_autos();
            (serde_json::to_value(&r)?, r.passed())
        }
        CurveCheck::Quadrics => {
            let r = curve_model::verify_quadrics();
            (serde_json::to_value(&r)?, r.all_vanish)
        }
        CurveCheck::Action => {
            let r = curve_model::verify_p4_action();
            (serde_json::to_value(&r)?, r.passed())
        }
        CurveCheck::Quartics => {
            let r = curve_model::verify_invariant_quartics();
            (serde_json::to_value(&r)?, r.all_proportional())
        }
        CurveCheck::Locus => {
            let r = curve_model::finite_field_locus(p.context("--p is required")?)?;
            (serde_json::to_value(&r)?, r.passed())
        }
        CurveCheck::Numerology => {
            let r = curve_model::scroll_numerology(n.context("--n is required")?)?;
            (serde_json::to_value(r)?, true)
        }
    })
}

fn run(cli: Cli) -> Result<bool> {
    let (value, ok) = match cli.command {
        Command::Qalg { check } => qalg(check)?,
        Command::Homs(a) => homs(&a)?,
        Command::Prym {
            genus,
            hom,
            report: _,
            budget,
        } => prym(genus, hom.as_deref(), budget)?,
        Command::Lie {
            scenario,
            decompose,
        } => lie(scenario.as_deref(), decompose.as_deref())?,
        Command::Spin {
            invariant,
            check_bracket,
        } => spin(invariant, check_bracket)?,
        Command::Weil {
            n,
            params,
            report: _,
        } => weil(n, &params)?,
        Command::Curve { check, p, n } => curve(check, p, n)?,
        Command::Report {
            module,
            format,
            config,
        } => {
            let format: Format = format.parse()?;
            let cfg = match config {
                Some(path) => Config::from_file(&path)?,
                None => Config::default(),
            }
            .with_env()?;
            let records = report::run_suite(module.as_deref(), &cfg)?;
            let mut text = report::emit(&records, format);
            if format == Format::Json {
                text.push('\n');
            }
            write_stdout(&text)?;
            return Ok(report::exit_code(&records) == 0);
        }
    };
    write_stdout(&(serde_json::to_string_pretty(&value)? + "\n"))?;
    Ok(ok)
}

/// A closed pipe (e.g. `| head`) is not an error.
fn write_stdout(text: &str) -> Result<()> {
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        r => Ok(r?),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
