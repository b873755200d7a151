use std::path::{Path, PathBuf};
use std::time::Instant;

use drstax_core::drs::{self, convert as convert_mr, join_blocks, parse_lenient, parse_sequence, split_blocks, Format};
use drstax_core::evaluation::{self, align_corpus, load_overrides, load_pairs, load_targets, score_pairs, Overrides};
use drstax_core::interpreter::{trace_tsv, Interpreter};
use drstax_core::matcher::{corpus_smatch, ExactMatch, MatchConfig, MatchMode, Similarity, TaxSimilarity};
use drstax_core::similarity::{wps_tax, wps_wordnet};
use drstax_core::taxonomy::{build_dictionary, ConceptDictionary, TaxCode};
use drstax_core::wordnet::load_wordnet;
use serde_json::json;

use crate::io::{emit, load_dict, read_file, read_input, to_json, write_atomic, write_report, CliError};
use crate::{ConceptIdArgs, Global};

pub fn build_encodings(g: &Global, wordnet: &Path, out: &Path) -> Result<(), CliError> {
    let t = Instant::now();
    let store = load_wordnet(wordnet).map_err(|e| CliError::Data(format!("{}: {e}", wordnet.display())))?;
    let (tax, dict) = build_dictionary(&store).map_err(CliError::data)?;
    write_atomic(out, &dict.to_tsv())?;
    log::info!("built {} entries in {:.2?}", dict.entries().len(), t.elapsed());
    let s = &tax.stats;
    if g.json {
        let v = json!({ "entries": dict.entries().len(), "synsets": dict.synset_count(), "stats": s });
        emit(None, &to_json(&v)?)?;
    } else {
        eprintln!(
            "{} entries ({} synsets), width {}, max fan-out {}",
            dict.entries().len(),
            dict.synset_count(),
            s.width,
            s.max_fanout
        );
    }
    Ok(())
}

fn parse_blocks(text: &str, format: Format) -> Result<Vec<drs::SequenceMr>, CliError> {
    split_blocks(text)
        .iter()
        .enumerate()
        .map(|(i, b)| parse_sequence(b, format).map_err(|e| CliError::Data(format!("block {i}: {e}"))))
        .collect()
}

pub fn convert(g: &Global, from: Format, to: Format, input: Option<PathBuf>, out: Option<PathBuf>) -> Result<(), CliError> {
    let dict = load_dict(g.dict.as_deref())?;
    let text = read_input(input.as_deref())?;
    let blocks = parse_blocks(&text, from)?;
    let converted = blocks
        .iter()
        .enumerate()
        .map(|(i, mr)| convert_mr(mr, from, to, &dict).map_err(|e| CliError::Data(format!("block {i}: {e}"))))
        .collect::<Result<Vec<_>, _>>()?;
    emit(out.as_deref(), &join_blocks(&converted))
}

pub fn validate(g: &Global, format: Format, input: Option<PathBuf>, report: Option<PathBuf>) -> Result<(), CliError> {
    let dict = match &g.dict {
        Some(p) => Some(load_dict(Some(p))?),
        None => None,
    };
    let text = read_input(input.as_deref())?;
    let reports: Vec<_> = split_blocks(&text)
        .iter()
        .map(|b| drs::validate_text(b, format, dict.as_ref()))
        .collect();
    let ifr = drs::ill_formed_rate(&reports);
    if let Some(p) = report {
        let mut tsv = String::from("block\twell_formed\tfaults\n");
        for (i, r) in reports.iter().enumerate() {
            let faults: Vec<String> = r
                .faults
                .iter()
                .map(|f| match f.line {
                    Some(l) => format!("{}@{l}", f.kind.as_str()),
                    None => f.kind.as_str().to_string(),
                })
                .collect();
            tsv.push_str(&format!("{i}\t{}\t{}\n", r.well_formed, faults.join(",")));
        }
        write_report(&p, &tsv, g.json, &reports)?;
    }
    let bad = reports.iter().filter(|r| !r.well_formed).count();
    if g.json {
        emit(None, &to_json(&json!({ "blocks": reports.len(), "ill_formed": bad, "ifr": ifr }))?)
    } else {
        emit(None, &format!("blocks {}\till-formed {bad}\tIFR {ifr:.1}\n", reports.len()))
    }
}

fn code_for(tok: &str, format: Format, dict: &ConceptDictionary) -> Result<TaxCode, CliError> {
    let code = match format {
        Format::Tax => tok.parse().ok(),
        Format::Lps => dict.code_of(tok).cloned(),
        Format::Wid => tok.parse().ok().and_then(|w| dict.by_wid(w)).and_then(|e| e.tax().cloned()),
    };
    code.ok_or_else(|| CliError::Data(format!("{tok:?} has no code in the dictionary")))
}

pub fn similarity(g: &Global, a: &str, b: &str, format: Format, wordnet: Option<PathBuf>) -> Result<(), CliError> {
    let score = match wordnet {
        Some(dir) => {
            if format != Format::Lps {
                return Err(CliError::Usage("--wordnet takes lps keys".into()));
            }
            let store = load_wordnet(&dir).map_err(|e| CliError::Data(format!("{}: {e}", dir.display())))?;
            let x = store.resolve_str(a).map_err(CliError::data)?;
            let y = store.resolve_str(b).map_err(CliError::data)?;
            wps_wordnet(&store, x, y).map_err(CliError::data)?
        }
        None => {
            let dict = load_dict(g.dict.as_deref())?;
            let x = code_for(a, format, &dict)?;
            let y = code_for(b, format, &dict)?;
            wps_tax(&x, &y).map_err(CliError::data)?
        }
    };
    if g.json {
        emit(None, &to_json(&json!({ "a": a, "b": b, "score": score }))?)
    } else {
        emit(None, &format!("{score:.3}\n"))
    }
}

pub fn smatch(
    g: &Global,
    mode: MatchMode,
    format: Format,
    gold: &Path,
    pred: &Path,
    restarts: usize,
    report: Option<PathBuf>,
) -> Result<(), CliError> {
    let gold = split_blocks(&read_file(gold)?);
    let pred = split_blocks(&read_file(pred)?);
    let dict;
    let sim: Box<dyn Similarity + '_> = match mode {
        MatchMode::Hard => Box::new(ExactMatch),
        MatchMode::Soft => {
            dict = load_dict(g.dict.as_deref())?;
            Box::new(TaxSimilarity::new(&dict, format))
        }
    };
    let cfg = MatchConfig {
        mode,
        restarts: restarts.max(1),
        seed: g.seed,
    };
    let score = corpus_smatch(&gold, &pred, format, sim.as_ref(), &cfg).map_err(CliError::data)?;
    if let Some(p) = report {
        write_report(&p, &score.to_tsv(), g.json, &score.items)?;
    }
    if g.json {
        let v = json!({
            "mode": mode,
            "precision": score.precision,
            "recall": score.recall,
            "f1": score.f1,
            "ifr": score.ifr,
            "blocks": score.items.len(),
        });
        emit(None, &to_json(&v)?)
    } else {
        emit(None, &format!("{}\n", score.summary()))
    }
}

pub fn interpret(
    g: &Global,
    format: Format,
    input: Option<PathBuf>,
    out: Option<PathBuf>,
    trace: Option<PathBuf>,
) -> Result<(), CliError> {
    let dict = load_dict(g.dict.as_deref())?;
    let interp = Interpreter::new(&dict);
    let text = read_input(input.as_deref())?;
    let mut outputs = vec![];
    let mut traces = vec![];
    for (i, b) in split_blocks(&text).iter().enumerate() {
        match parse_lenient(b, format) {
            Ok(mr) => {
                let (lps, t) = interp.interpret_sequence(&mr, format);
                outputs.push(lps.to_string());
                traces.push(t);
            }
            Err(e) => {
                log::warn!("block {i} left as is: {e}");
                outputs.push(b.clone());
                traces.push(vec![]);
            }
        }
    }
    if let Some(p) = trace {
        write_report(&p, &trace_tsv(&traces), g.json, &traces)?;
    }
    emit(out.as_deref(), &join_blocks(&outputs))
}

pub fn concept_id(g: &Global, args: ConceptIdArgs) -> Result<(), CliError> {
    let dict = load_dict(g.dict.as_deref())?;
    let pairs = match (&args.pairs, &args.gold, &args.pred, &args.targets) {
        (Some(p), ..) => load_pairs(&read_file(p)?).map_err(|e| CliError::Data(format!("{}: {e}", p.display())))?,
        (None, Some(gold), Some(pred), Some(targets)) => {
            let gold = split_blocks(&read_file(gold)?);
            let pred = split_blocks(&read_file(pred)?);
            let targets = load_targets(&read_file(targets)?).map_err(CliError::data)?;
            let overrides = match &args.review {
                Some(r) => load_overrides(&read_file(r)?).map_err(CliError::data)?,
                None => Overrides::new(),
            };
            let cfg = MatchConfig {
                mode: args.mode,
                seed: g.seed,
                ..MatchConfig::default()
            };
            // both sides are in lps by the time they are matched
            let sim = TaxSimilarity::new(&dict, Format::Lps);
            let pairs = align_corpus(&gold, &pred, &targets, args.format, &dict, &sim, &cfg, &overrides)
                .map_err(CliError::data)?;
            if let Some(p) = &args.pairs_out {
                write_atomic(p, &evaluation::pairs_tsv(&pairs))?;
            }
            pairs
        }
        _ => {
            return Err(CliError::Usage(
                "concept-id needs --pairs, or --gold, --pred and --targets".into(),
            ))
        }
    };
    let report = score_pairs(&pairs, &dict);
    if let Some(p) = &args.report {
        write_report(p, &report.pairs_tsv(), g.json, &report.scores)?;
    }
    if g.json {
        emit(None, &to_json(&report.means)?)
    } else {
        emit(None, &report.summary_tsv())
    }
}

pub fn sense_dist(
    g: &Global,
    input: &Path,
    format: Format,
    out: Option<PathBuf>,
    csv: Option<PathBuf>,
) -> Result<(), CliError> {
    let text = read_file(input)?;
    let dict = match format {
        Format::Lps => None,
        _ => Some(load_dict(g.dict.as_deref())?),
    };
    let interp = dict.as_ref().map(Interpreter::new);
    let mut blocks = vec![];
    for (i, b) in split_blocks(&text).iter().enumerate() {
        match parse_lenient(b, format) {
            Ok(mr) => blocks.push(match &interp {
                Some(it) => it.interpret_sequence(&mr, format).0,
                None => mr,
            }),
            Err(e) => log::warn!("block {i} skipped: {e}"),
        }
    }
    let h = evaluation::sense_distribution(&blocks);
    if let Some(p) = csv {
        write_atomic(&p, &h.to_csv())?;
    }
    for (k, c) in &h.notable {
        log::info!("{k}: {c}");
    }
    match (&out, g.json) {
        (Some(p), json) => {
            write_report(p, &h.to_tsv(), json, &h)?;
            if json {
                emit(None, &to_json(&h)?)?;
            }
            Ok(())
        }
        (None, true) => emit(None, &to_json(&h)?),
        (None, false) => emit(None, &h.to_tsv()),
    }
}
