//! `pattern-teach`: membership, teaching-set constructions and bounded
//! verification for erasing pattern languages.
//!
//! Exit codes: 0 success / member / confirmed, 1 non-member / refuted /
//! failed construction, 2 usage or input error, 3 budget or size cap
//! exceeded, 4 sample inconsistent with the target, 5 inconclusive.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use pattern_teach::builders::{
    fixed_x222_set, infinite_pbt_set, noncross_pbt_witness, noncross_td_set, noncross_unary_set, passe_partout,
    qr_pbt_witness, qr_unary_pbt_set, qr_unary_set, sr_pbt_set, sr_td_set, sr_vs_all_set, sr_vs_regular_set,
    sr_zero_chain_set, unary_mregular_set, x222,
};
use pattern_teach::matcher::{match_witness, membership_with_cap, pattern_morphism};
use pattern_teach::verifier::{
    brute_force_td_with, is_pbt_set, is_teaching_set, preference_by_name, Bounds, Status, TdResult, Verdict,
    DEFAULT_NODE_BUDGET,
};
use pattern_teach::{
    parse_pattern, parse_sample, parse_word, Alphabet, ClassSpec, Error, Family, Pattern, Sample, Word,
};

#[derive(Parser, Debug)]
#[command(name = "pattern-teach", version, about = "Teaching sets for erasing pattern languages")]
struct Cli {
    /// Alphabet: letters such as `01`, or `inf:<seeds>` for an unbounded one.
    #[arg(long, global = true, default_value = "01")]
    alphabet: String,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether a word belongs to L(pattern); exit 0 iff it does.
    Match {
        /// Pattern, e.g. `x1 0 x2 0 x3`; `x1^3` repeats a variable.
        #[arg(long)]
        pattern: String,
        /// Word, e.g. `00011` or `(01)^{1260}`; `eps` is the empty word.
        #[arg(long)]
        word: String,
        /// Print the substitution and the position-interval map.
        #[arg(long)]
        witness: bool,
        /// Longest word spelled out letter by letter; longer words need a closed-form decider.
        #[arg(long, default_value_t = 1_000_000)]
        materialize_cap: usize,
    },
    /// Print a teaching set built by one of the constructions.
    Teachset {
        /// Which construction to run.
        #[arg(long, value_enum)]
        class: TeachClass,
        /// Target pattern; not needed for `sr-zero-chain` and `x222-fixed`.
        #[arg(long)]
        pattern: Option<String>,
        /// Frequency bound of the class.
        #[arg(long)]
        m: Option<usize>,
        /// Number of variables for `sr-zero-chain`.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Check a sample against every rival of a class within bounds.
    Verify {
        /// Target pattern, e.g. `x1 0 x2 x1`.
        #[arg(long)]
        pattern: String,
        /// Sample file: one `+ word` / `- word` per line.
        #[arg(long)]
        sample: PathBuf,
        #[command(flatten)]
        class: ClassArgs,
        #[command(flatten)]
        bounds: BoundArgs,
        /// Ignore rivals preferred to the target under this order
        /// (sr, qr-unary, shorter, noncross, infinite).
        #[arg(long)]
        pbt: Option<String>,
    },
    /// Size of a minimum teaching set within bounds.
    Td {
        /// Target pattern, e.g. `x1 0 x2 x1`.
        #[arg(long)]
        pattern: String,
        #[command(flatten)]
        class: ClassArgs,
        #[command(flatten)]
        bounds: BoundArgs,
        /// Ignore rivals preferred to the target under this order.
        #[arg(long)]
        pbt: Option<String>,
        /// Search-node budget.
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
    /// Build a passe-partout for positives of x1^2 x2^2 x3^2 (one word per line).
    Passepartout {
        /// Text file with one word per line.
        file: PathBuf,
        /// Longest `uvw` tried when searching for a separating word `uuvvww`.
        #[arg(long, default_value_t = 6)]
        max_half: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TeachClass {
    Sr,
    SrPbt,
    SrVsRegular,
    SrVsAll,
    SrZeroChain,
    QrUnary,
    QrUnaryPbt,
    QrPbtWitness,
    NoncrossUnary,
    NoncrossPbt,
    NoncrossTd,
    InfinitePbt,
    UnaryMregular,
    X222Fixed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyName {
    All,
    Regular,
    Mregular,
    Qr,
    Noncross,
    Sbr,
    Kvar,
}

#[derive(Args, Debug)]
struct ClassArgs {
    /// Rival class: `qr` is m-quasi-regular, `kvar` at most k variables each at most m times.
    #[arg(long, value_enum)]
    class: FamilyName,
    /// Frequency bound; defaults to the target's largest variable frequency.
    #[arg(long)]
    m: Option<usize>,
    /// Variable bound for `kvar`; defaults to the target's variable count.
    #[arg(long)]
    k: Option<usize>,
    /// Only rivals without constants.
    #[arg(long)]
    constant_free: bool,
}

#[derive(Args, Debug)]
struct BoundArgs {
    /// Longest rival pattern (skeleton length for `sbr`).
    #[arg(long, env = "PATTEACH_MAX_PATTERN_LEN", default_value_t = 8)]
    max_pattern_len: usize,
    /// Longest word used to separate rivals.
    #[arg(long, env = "PATTEACH_MAX_WORD_LEN", default_value_t = 8)]
    max_word_len: usize,
}

impl BoundArgs {
    fn bounds(&self) -> Bounds {
        Bounds::new(self.max_pattern_len, self.max_word_len)
    }
}

/// A finished command: text, its JSON form and the exit code.
struct Report {
    text: String,
    json: Value,
    code: u8,
    /// Annotations printed to stderr in text mode, so stdout stays a sample file.
    notes: Vec<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok(r) => {
            match format {
                Format::Text => {
                    for n in &r.notes {
                        eprintln!("# {n}");
                    }
                    print!("{}", r.text)
                }
                Format::Json => println!("{}", serde_json::to_string_pretty(&r.json).expect("serializable")),
            }
            ExitCode::from(r.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } | Error::UnknownLetter(_) | Error::EmptyPattern | Error::Precondition(_) => 2,
        Error::TooLarge { .. } | Error::BudgetExceeded(_) => 3,
        Error::InconsistentSample(_) => 4,
        Error::Construction(_) => 1,
    }
}

fn run(cli: Cli) -> Result<Report, Error> {
    let alpha = Alphabet::parse(&cli.alphabet)?;
    match cli.command {
        Command::Match { pattern, word, witness, materialize_cap } => {
            cmd_match(&alpha, &pattern, &word, witness, materialize_cap)
        }
        Command::Teachset { class, pattern, m, n } => cmd_teachset(&alpha, class, pattern.as_deref(), m, n),
        Command::Verify { pattern, sample, class, bounds, pbt } => {
            cmd_verify(&alpha, &pattern, &sample, &class, bounds.bounds(), pbt.as_deref())
        }
        Command::Td { pattern, class, bounds, pbt, budget } => {
            cmd_td(&alpha, &pattern, &class, bounds.bounds(), pbt.as_deref(), budget)
        }
        Command::Passepartout { file, max_half } => cmd_passepartout(&alpha, &file, max_half),
    }
}

fn read(path: &PathBuf) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Precondition(format!("cannot read {}: {e}", path.display())))
}

fn sample_json(s: &Sample, alpha: &Alphabet) -> Value {
    s.iter().map(|(w, l)| json!({ "word": w.render(alpha), "label": if *l { "+" } else { "-" } })).collect()
}

fn cmd_match(alpha: &Alphabet, pattern: &str, word: &str, witness: bool, cap: usize) -> Result<Report, Error> {
    let p = parse_pattern(pattern, alpha)?;
    let w = parse_word(word, alpha)?;
    let member = membership_with_cap(&w, &p, cap)?;
    let mut text = format!("{}\n", if member { "member" } else { "not a member" });
    let mut json = json!({ "pattern": p.render(alpha), "word": w.render(alpha), "member": member });
    if witness && member {
        if w.len_usize().is_none_or(|n| n > cap) {
            return Err(Error::TooLarge { len: w.len().to_string(), cap });
        }
        let wit = match_witness(&w, &p)?.ok_or_else(|| Error::Construction("member without a witness".into()))?;
        text.push_str(&wit.render(&p, alpha));
        let subst: serde_json::Map<String, Value> =
            wit.assignment.iter().map(|(v, x)| (format!("x{v}"), Value::from(x.render(alpha)))).collect();
        let intervals: Vec<Value> = wit.intervals.iter().map(|r| json!([r.start, r.end])).collect();
        json["witness"] = json!({ "substitution": subst, "intervals": intervals, "cut_points": wit.cut_points() });
    }
    Ok(Report { text, json, code: if member { 0 } else { 1 }, notes: vec![] })
}

fn cmd_teachset(
    alpha: &Alphabet,
    class: TeachClass,
    pattern: Option<&str>,
    m: Option<usize>,
    n: Option<usize>,
) -> Result<Report, Error> {
    let pat = || -> Result<Pattern, Error> {
        parse_pattern(pattern.ok_or_else(|| Error::Precondition("--pattern is required".into()))?, alpha)
    };
    let need_m = || m.ok_or_else(|| Error::Precondition("--m is required".into()));
    let mut notes = Vec::new();
    let sample = match class {
        TeachClass::Sr => sr_td_set(&pat()?)?,
        TeachClass::SrPbt => sr_pbt_set(&pat()?)?,
        TeachClass::SrVsRegular => sr_vs_regular_set(&pat()?, alpha)?,
        TeachClass::SrVsAll => sr_vs_all_set(&pat()?, alpha)?,
        TeachClass::SrZeroChain => {
            sr_zero_chain_set(n.ok_or_else(|| Error::Precondition("--n is required".into()))?, alpha)?
        }
        TeachClass::QrUnary => qr_unary_set(&pat()?, need_m()?, alpha)?,
        TeachClass::QrUnaryPbt => qr_unary_pbt_set(&pat()?, alpha)?,
        TeachClass::QrPbtWitness => {
            let (w, g) = qr_pbt_witness(&pat()?, alpha)?;
            for v in &g.vertices {
                notes.push(format!("x{v}: colour {} alternate {} height {}", g.colouring[v], g.xi[v], g.p[v]));
            }
            Sample::from_examples([(w, true)])?
        }
        TeachClass::NoncrossUnary => noncross_unary_set(&pat()?, need_m()?)?,
        TeachClass::NoncrossPbt => Sample::from_examples([(noncross_pbt_witness(&pat()?)?, true)])?,
        TeachClass::NoncrossTd => {
            let set = noncross_td_set(&pat()?, need_m()?)?;
            for t in &set.t_words {
                let rival: Vec<String> = t.rival.iter().map(u32::to_string).collect();
                notes.push(format!(
                    "q^r = {}^{}: {} blocks of {}, rules out exponents ({})",
                    t.factor.q,
                    t.factor.r,
                    t.d + 1,
                    t.e,
                    rival.join(", ")
                ));
            }
            set.sample()
        }
        TeachClass::InfinitePbt => infinite_pbt_set(&pat()?, alpha)?,
        TeachClass::UnaryMregular => unary_mregular_set(&pat()?, need_m()?, alpha)?,
        TeachClass::X222Fixed => fixed_x222_set(),
    };
    let json = json!({ "size": sample.len(), "examples": sample_json(&sample, alpha), "notes": notes });
    Ok(Report { text: sample.render(alpha), json, code: 0, notes })
}

fn class_spec(alpha: &Alphabet, args: &ClassArgs, target: &Pattern) -> Result<ClassSpec, Error> {
    let m = args.m.unwrap_or_else(|| target.max_freq().max(1));
    let family = match args.class {
        FamilyName::All => Family::AllPatterns,
        FamilyName::Regular => Family::Regular,
        FamilyName::Mregular => Family::MRegular(m),
        FamilyName::Qr => Family::MQuasiRegular(m),
        FamilyName::Noncross => Family::NonCross(m),
        FamilyName::Sbr => Family::SimpleBlockRegular,
        FamilyName::Kvar => Family::KVarMRegular(args.k.unwrap_or_else(|| target.vars().len().max(1)), m),
    };
    let spec = ClassSpec::new(family, alpha.clone())?;
    Ok(if args.constant_free { spec.constant_free() } else { spec })
}

fn verdict_report(v: &Verdict, alpha: &Alphabet, spec: &ClassSpec) -> Report {
    let (status, rival, separator, code) = match &v.status {
        Status::Confirmed => ("confirmed", None, None, 0),
        Status::Refuted { rival, separator } => {
            ("refuted", Some(rival.render(alpha)), separator.as_ref().map(|w| w.render(alpha)), 1)
        }
        Status::Inconclusive { rival } => ("inconclusive", Some(rival.render(alpha)), None, 5),
    };
    let json = json!({
        "class": spec.to_string(),
        "status": status,
        "rival": rival,
        "separator": separator,
        "bounds": { "max_pattern_len": v.bounds.max_pattern_len, "max_word_len": v.bounds.max_word_len },
        "stats": {
            "patterns": v.stats.patterns,
            "consistent": v.stats.consistent,
            "membership_calls": v.stats.membership_calls,
        },
    });
    Report { text: format!("class: {spec}\n{}", v.render(alpha)), json, code, notes: vec![] }
}

fn preference(name: Option<&str>, alpha: &Alphabet) -> Result<Option<pattern_teach::verifier::PreferenceOrder>, Error> {
    name.map(|n| preference_by_name(n, alpha).ok_or_else(|| Error::Precondition(format!("unknown preference `{n}`"))))
        .transpose()
}

fn cmd_verify(
    alpha: &Alphabet,
    pattern: &str,
    sample: &PathBuf,
    class: &ClassArgs,
    bounds: Bounds,
    pbt: Option<&str>,
) -> Result<Report, Error> {
    let p = parse_pattern(pattern, alpha)?;
    let s = parse_sample(&read(sample)?, alpha)?;
    let spec = class_spec(alpha, class, &p)?;
    let v = match preference(pbt, alpha)? {
        Some(pref) => is_pbt_set(&p, &s, &spec, &pref, bounds)?,
        None => is_teaching_set(&p, &s, &spec, bounds)?,
    };
    Ok(verdict_report(&v, alpha, &spec))
}

fn cmd_td(
    alpha: &Alphabet,
    pattern: &str,
    class: &ClassArgs,
    bounds: Bounds,
    pbt: Option<&str>,
    budget: u64,
) -> Result<Report, Error> {
    let p = parse_pattern(pattern, alpha)?;
    let spec = class_spec(alpha, class, &p)?;
    let pref = preference(pbt, alpha)?;
    let r: TdResult = brute_force_td_with(&p, &spec, bounds, pref.as_ref(), budget)?;
    let unresolved: Vec<String> = r.unresolved.iter().map(|q| q.render(alpha)).collect();
    let mut text = format!(
        "class: {spec}\nsize: {}\nrivals: {}\nbounds: max-pattern-len {} max-word-len {}\n",
        r.size, r.rivals, r.bounds.max_pattern_len, r.bounds.max_word_len
    );
    for q in &unresolved {
        text.push_str(&format!("# unresolved rival: {q}\n"));
    }
    text.push_str(&r.sample.render(alpha));
    let json = json!({
        "class": spec.to_string(),
        "size": r.size,
        "rivals": r.rivals,
        "unresolved": unresolved,
        "bounds": { "max_pattern_len": r.bounds.max_pattern_len, "max_word_len": r.bounds.max_word_len },
        "examples": sample_json(&r.sample, alpha),
    });
    Ok(Report { text, json, code: 0, notes: vec![] })
}

/// Words from a file: bare words or `+ word` lines; blank lines and `#`
/// comments are skipped.
fn read_positives(text: &str, alpha: &Alphabet) -> Result<Vec<Word>, Error> {
    let mut out = Vec::new();
    for line in text.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if line.starts_with('-') {
            return Err(Error::Precondition(format!("negative example `{line}` in a positives file")));
        }
        out.push(parse_word(line.trim_start_matches('+'), alpha)?);
    }
    Ok(out)
}

fn cmd_passepartout(alpha: &Alphabet, file: &PathBuf, max_half: usize) -> Result<Report, Error> {
    let words = read_positives(&read(file)?, alpha)?;
    let target = x222();
    for w in &words {
        if !membership_with_cap(w, &target, 1_000_000)? {
            return Err(Error::Precondition(format!("`{}` is not in L(x1^2 x2^2 x3^2)", w.render(alpha))));
        }
    }
    let pp = passe_partout(&words)?;
    let morphism = pattern_morphism(&target, &pp.tau).is_some();
    let mut text = format!("tau: {}\n", pp.tau.render(alpha));
    let mut members = Vec::new();
    for w in &words {
        let ok = membership_with_cap(w, &pp.tau, 1_000_000)?;
        text.push_str(&format!("accepts {}: {ok}\n", w.render(alpha)));
        members.push(json!({ "word": w.render(alpha), "member": ok }));
    }
    let sep = pp.separator(max_half);
    text.push_str(&format!("max frequency: {}\nmorphism from x1^2 x2^2 x3^2: {morphism}\n", pp.tau.max_freq()));
    match &sep {
        Some(w) => text.push_str(&format!("separator: {}\n", w.render(alpha))),
        None => text.push_str(&format!("separator: none with |uvw| <= {max_half}\n")),
    }
    let json = json!({
        "tau": pp.tau.render(alpha),
        "positives": members,
        "max_freq": pp.tau.max_freq(),
        "morphism": morphism,
        "separator": sep.map(|w| w.render(alpha)),
    });
    Ok(Report { text, json, code: 0, notes: vec![] })
}
