use thiserror::Error;

use super::parse::{Format, LineKind, SequenceMr};
use super::{Fault, FaultKind, ValidationReport};
use crate::taxonomy::tables::single_char;
use crate::taxonomy::{ConceptDictionary, Entry, EntryCode, EntryKind};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("{} token(s) not in the dictionary, first: {}", .report.faults.len(), .report.faults[0])]
pub struct ConvertError {
    pub report: ValidationReport,
}

/// Where a token sits in its line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenPos {
    ConceptHead,
    RelationHead,
    Label,
}

/// Looks a head or label token up in the dictionary.
pub fn resolve_token<'d>(
    tok: &str,
    pos: TokenPos,
    format: Format,
    dict: &'d ConceptDictionary,
) -> Option<&'d Entry> {
    let e = match format {
        Format::Lps => dict.by_name(tok),
        Format::Wid => match single_char(tok) {
            Some(c) if !c.is_ascii_digit() => dict.by_symbol(c),
            _ if tok.len() == 9 => tok.parse().ok().and_then(|w| dict.by_wid(w)),
            _ => None,
        },
        Format::Tax => match single_char(tok) {
            Some(c) => dict.by_symbol(c),
            None => dict.by_code(tok),
        },
    }?;
    let fits = match pos {
        TokenPos::ConceptHead => e.kind == EntryKind::Synset,
        TokenPos::RelationHead => e.kind == EntryKind::Relation,
        TokenPos::Label => matches!(e.kind, EntryKind::Role | EntryKind::Operator),
    };
    fits.then_some(e)
}

/// The token for an entry in a format. Operators and relations are written
/// as symbols in both WID and TAX.
pub fn render_entry(e: &Entry, format: Format) -> String {
    match (format, &e.code) {
        (Format::Lps, _) => e.name.clone(),
        (_, EntryCode::Symbol(c)) => c.to_string(),
        (Format::Wid, EntryCode::Tax(_)) => format!("{:09}", e.wid),
        (Format::Tax, EntryCode::Tax(c)) => c.render(),
    }
}

/// unknown_token faults for heads and labels absent from the dictionary.
pub fn dictionary_faults(mr: &SequenceMr, format: Format, dict: &ConceptDictionary) -> Vec<Fault> {
    let mut faults = vec![];
    for (i, l) in mr.lines.iter().enumerate() {
        let head_pos = match l.kind {
            LineKind::Concept => TokenPos::ConceptHead,
            LineKind::Relation => TokenPos::RelationHead,
        };
        if resolve_token(&l.head, head_pos, format, dict).is_none() {
            faults.push(Fault::new(
                FaultKind::UnknownToken,
                Some(i),
                format!("{:?} is not in the dictionary", l.head),
            ));
        }
        for s in &l.slots {
            if let Some(label) = &s.label {
                if resolve_token(label, TokenPos::Label, format, dict).is_none() {
                    faults.push(Fault::new(
                        FaultKind::UnknownToken,
                        Some(i),
                        format!("{label:?} is not in the dictionary"),
                    ));
                }
            }
        }
    }
    faults
}

/// Token-wise conversion through the dictionary; indices, scopes and
/// values are copied unchanged.
pub fn convert(
    mr: &SequenceMr,
    from: Format,
    to: Format,
    dict: &ConceptDictionary,
) -> Result<SequenceMr, ConvertError> {
    if from == to {
        return Ok(mr.clone());
    }
    let faults = dictionary_faults(mr, from, dict);
    if !faults.is_empty() {
        return Err(ConvertError {
            report: ValidationReport::from_faults(faults),
        });
    }
    let mut out = mr.clone();
    for l in &mut out.lines {
        let head_pos = match l.kind {
            LineKind::Concept => TokenPos::ConceptHead,
            LineKind::Relation => TokenPos::RelationHead,
        };
        let e = resolve_token(&l.head, head_pos, from, dict).expect("checked");
        l.head = render_entry(e, to);
        for s in &mut l.slots {
            if let Some(label) = &mut s.label {
                let e = resolve_token(label, TokenPos::Label, from, dict).expect("checked");
                *label = render_entry(e, to);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drs::parse_sequence;
    use crate::taxonomy::{build_role_operator_tables, DictMeta, TaxCode, POLICY_ID};

    fn dict() -> ConceptDictionary {
        let mut entries = build_role_operator_tables();
        let mut add = |wid: u32, name: &str, code: &str, syn: &[&str]| {
            entries.push(Entry {
                kind: EntryKind::Synset,
                wid,
                name: name.into(),
                code: EntryCode::Tax(code.parse::<TaxCode>().unwrap()),
                synonyms: syn.iter().map(|s| s.to_string()).collect(),
            })
        };
        add(109_624_168, "male.n.02", "n121100", &["male_person.n.01", "male.n.02"]);
        add(115_135_822, "time.n.08", "n131000", &["fourth_dimension.n.01", "time.n.08"]);
        add(200_031_820, "laugh.v.01", "v1~1000", &["laugh.v.01"]);
        let meta = DictMeta {
            wordnet: "3.0".into(),
            policy: POLICY_ID.into(),
            pad_width: 6,
            role_width: 5,
        };
        ConceptDictionary::from_entries(meta, entries).unwrap()
    }

    const LPS: &str = "male.n.02 Name \"John\"\ntime.n.08 EQU now\nNEGATION <1\nlaugh.v.01 Agent --2 Time --1";
    const WID: &str = "109624168 500000018 \"John\"\n115135822 = now\n\u{00AC} <1\n200031820 500000004 --2 500000003 --1";
    const TAX: &str = "n121100 t12000 \"John\"\nn131000 = now\n\u{00AC} <1\nv1~1000 t22100 --2 t21000 --1";

    #[test]
    fn three_formats() {
        let d = dict();
        let lps = parse_sequence(LPS, Format::Lps).unwrap();
        let wid = convert(&lps, Format::Lps, Format::Wid, &d).unwrap();
        assert_eq!(wid.to_string(), WID);
        let tax = convert(&wid, Format::Wid, Format::Tax, &d).unwrap();
        assert_eq!(tax.to_string(), TAX);
        let back = convert(&tax, Format::Tax, Format::Lps, &d).unwrap();
        assert_eq!(back, lps);
    }

    #[test]
    fn non_canonical_member_becomes_canonical() {
        let d = dict();
        let mr = parse_sequence("male_person.n.01", Format::Lps).unwrap();
        let tax = convert(&mr, Format::Lps, Format::Tax, &d).unwrap();
        let back = convert(&tax, Format::Tax, Format::Lps, &d).unwrap();
        assert_eq!(back.to_string(), "male.n.02");
    }

    #[test]
    fn unknown_tokens() {
        let d = dict();
        let mr = parse_sequence("hobby.n.03 Agent -0", Format::Lps).unwrap();
        let e = convert(&mr, Format::Lps, Format::Tax, &d).unwrap_err();
        assert_eq!(e.report.kinds(), "unknown_token");
        // a role name is not a concept
        let mr = parse_sequence("male.n.02 EQU +0", Format::Lps).unwrap();
        assert!(convert(&mr, Format::Lps, Format::Wid, &d).is_ok());
        let wid = parse_sequence("500000004", Format::Wid);
        assert!(wid.is_err());
    }

    #[test]
    fn identity_conversion() {
        let d = dict();
        let mr = parse_sequence("hobby.n.03", Format::Lps).unwrap();
        assert_eq!(convert(&mr, Format::Lps, Format::Lps, &d).unwrap(), mr);
    }
}
