use hopf_core::check::{self, CheckReport};
use hopf_core::rational::fmt_q;
use hopf_core::sweedler::{hankel_of, hankel_rep, learn};
use hopf_core::{
    freealg, render_json, Alphabet, Error, Exec, HankelSlice, LinRep, Matrix, Result, Series,
};
use serde_json::{json, Value};

use crate::args::{Cli, Command, Format, WindowArgs};
use crate::operand::{self, AnyRep};

/// Rendered command output. `failed` marks a check that found a
/// counterexample; the report is still printed.
pub struct Outcome {
    pub text: String,
    pub failed: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome {
            text,
            failed: false,
        }
    }
}

enum Out {
    /// Canonical text; a JSON string in json mode.
    Text(String),
    /// Already JSON in both modes.
    Json(String),
    Matrix(Matrix),
    Hankel(HankelSlice),
    Split(Vec<(LinRep, LinRep)>),
    Check(CheckReport),
}

fn matrix_value(m: &Matrix) -> Value {
    m.to_json_value()
}

fn render(out: Out, format: Format) -> Outcome {
    let text = match (out, format) {
        (Out::Text(s), Format::Text) => s,
        (Out::Text(s), Format::Json) => render_json(&Value::String(s)),
        (Out::Json(s), _) => s,
        (Out::Matrix(m), Format::Text) => m.to_string().trim_end().to_string(),
        (Out::Matrix(m), Format::Json) => render_json(&matrix_value(&m)),
        (Out::Hankel(h), Format::Text) => {
            let words = |ws: &[hopf_core::Word]| {
                ws.iter()
                    .map(|w| w.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            format!(
                "rows: {}\ncols: {}\n{}",
                words(&h.rows),
                words(&h.cols),
                h.entries.to_string().trim_end()
            )
        }
        (Out::Hankel(h), Format::Json) => render_json(&json!({
            "rows": h.rows.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
            "cols": h.cols.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
            "entries": matrix_value(&h.entries),
        })),
        (Out::Split(parts), Format::Text) => parts
            .iter()
            .enumerate()
            .flat_map(|(i, (g, h))| {
                [
                    format!("g{} = {}", i + 1, g.to_json()),
                    format!("h{} = {}", i + 1, h.to_json()),
                ]
            })
            .collect::<Vec<_>>()
            .join("\n"),
        (Out::Split(parts), Format::Json) => {
            let terms: Vec<Value> = parts
                .iter()
                .map(|(g, h)| {
                    let g: Value = serde_json::from_str(&g.to_json()).expect("valid JSON");
                    let h: Value = serde_json::from_str(&h.to_json()).expect("valid JSON");
                    json!({"g": g, "h": h})
                })
                .collect();
            render_json(&Value::Array(terms))
        }
        (Out::Check(r), Format::Text) => r.to_string(),
        (Out::Check(r), Format::Json) => render_json(&json!({
            "check": r.name,
            "cases": r.checked,
            "passed": r.passed(),
            "counterexample": r.counterexample,
        })),
    };
    Outcome::ok(text)
}

fn series_out(s: Series) -> Out {
    match s {
        Series::FiniteSupport(p) => Out::Text(p.to_string()),
        Series::Recognizable(r) => Out::Json(r.to_json()),
    }
}

fn window(spec: &str) -> Result<(usize, usize)> {
    let bad = || Error::parse("expected --hankel p,s with nonnegative integers", spec, 0);
    let (p, s) = spec.split_once(',').ok_or_else(bad)?;
    let parse = |t: &str, pos: usize| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| Error::parse("expected a nonnegative integer", t, pos))
    };
    Ok((parse(p, 0)?, parse(s, p.len() + 1)?))
}

fn hankel_slice(args: &WindowArgs, alphabet: Option<&Alphabet>, exec: Exec) -> Result<HankelSlice> {
    let (p, s) = window(&args.hankel)?;
    let series = operand::series(&args.series.series, alphabet)?;
    Ok(match &series {
        Series::Recognizable(r) => hankel_rep(r, p, s, exec),
        Series::FiniteSupport(_) => hankel_of(series.alphabet(), |w| series.coeff(w), p, s, exec),
    })
}

fn finish_check(report: CheckReport, format: Format) -> Outcome {
    let failed = !report.passed();
    Outcome {
        failed,
        ..render(Out::Check(report), format)
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome> {
    // The declaration is parsed before any operand is touched.
    let declared = cli.alphabet.as_deref().map(Alphabet::parse).transpose()?;
    let al = declared.as_ref();
    let exec = Exec::Parallel;
    let out = match &cli.command {
        Command::Coprod { poly } => {
            Out::Text(freealg::coproduct(&operand::poly(poly, al)?).to_string())
        }
        Command::Mul { left, right } => {
            let (l, r) = (operand::poly(left, al)?, operand::poly(right, al)?);
            Out::Text(l.mul(&r)?.to_string())
        }
        Command::Counit { poly } => Out::Text(fmt_q(&freealg::counit(&operand::poly(poly, al)?))),
        Command::Antipode { poly } => {
            Out::Text(freealg::antipode(&operand::poly(poly, al)?)?.to_string())
        }
        Command::Pair { series, poly } => {
            let f = operand::series(series, al)?;
            let p = operand::poly(poly, Some(f.alphabet()))?;
            Out::Text(fmt_q(&f.pair(&p)?))
        }
        Command::Conv { left, right } => {
            let (f, h) = (operand::series(left, al)?, operand::series(right, al)?);
            series_out(f.convolve(&h)?)
        }
        Command::Tensor { left, right } => {
            let (a, b) = (operand::mat_rep(left, al)?, operand::mat_rep(right, al)?);
            Out::Json(a.tensor(&b)?.to_json())
        }
        Command::Dsum { left, right } => {
            let (a, b) = (operand::mat_rep(left, al)?, operand::mat_rep(right, al)?);
            Out::Json(a.direct_sum(&b)?.to_json())
        }
        Command::Eval { rep, poly } => {
            let rep = operand::any_rep(rep, al)?;
            let p = operand::poly(poly, Some(rep.alphabet()))?;
            match rep {
                AnyRep::Matrix(r) => Out::Matrix(r.eval(&p)?),
                AnyRep::Linear(r) => Out::Text(fmt_q(&Series::Recognizable(r).pair(&p)?)),
            }
        }
        Command::Hankel(args) => Out::Hankel(hankel_slice(args, al, exec)?),
        Command::Rank(args) => Out::Text(hankel_slice(args, al, exec)?.rank().to_string()),
        Command::Learn { series, explore } => {
            let f = operand::series(&series.series, al)?;
            Out::Json(learn(f.alphabet(), |w| f.coeff(w), *explore, exec)?.to_json())
        }
        Command::Split(arg) => {
            let f = operand::series(&arg.series, al)?;
            let rep = match f {
                Series::Recognizable(r) => r,
                finite => finite.to_linrep(),
            };
            Out::Split(rep.split())
        }
        Command::DualS(arg) => series_out(operand::series(&arg.series, al)?.transpose_antipode()?),
        Command::CheckCoassoc(args) => {
            let a = operand::require_alphabet(al)?;
            return Ok(finish_check(
                check::coassoc(a, args.maxlen, exec)?,
                cli.format,
            ));
        }
        Command::CheckAntipode(args) => {
            let a = operand::require_alphabet(al)?;
            return Ok(finish_check(
                check::antipode(a, args.maxlen, exec)?,
                cli.format,
            ));
        }
        Command::CheckDualAssoc(args) => {
            let a = operand::require_alphabet(al)?;
            return Ok(finish_check(
                check::dual_assoc(a, args.maxlen, exec)?,
                cli.format,
            ));
        }
        Command::CheckConvOracle(args) => {
            let a = operand::require_alphabet(al)?;
            return Ok(finish_check(
                check::conv_oracle(a, args.maxlen, exec)?,
                cli.format,
            ));
        }
    };
    Ok(render(out, cli.format))
}
