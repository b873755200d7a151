//! Fixed inventories of thematic roles, operators and discourse relations.

use std::sync::OnceLock;

/// Width of role codes (`t12000`).
pub const ROLE_WIDTH: usize = 5;

pub const ROLE_BASE: u32 = 500_000_000;
pub const RELATION_BASE: u32 = 600_000_000;
pub const OPERATOR_BASE: u32 = 700_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoleDef {
    pub name: &'static str,
    pub wid: u32,
    /// Label path in the role hierarchy.
    pub labels: &'static str,
    /// Inverse roles share the labels of their base role and take prefix `i`.
    pub inverse: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymbolDef {
    pub name: &'static str,
    pub wid: u32,
    pub symbol: char,
}

// (name, labels, inverse, fixed id). Listed in depth-first order of the
// hierarchy; roles without a fixed id are numbered in this order, skipping
// the fixed ones.
const ROLE_SPECS: &[(&str, &str, bool, Option<u32>)] = &[
    ("Of", "1", false, None),
    ("Attribute", "11", false, None),
    ("AttributeOf", "11", true, None),
    ("Name", "12", false, Some(18)),
    ("Role", "13", false, None),
    ("Part", "14", false, None),
    ("PartOf", "14", true, None),
    ("Sub", "15", false, None),
    ("SubOf", "15", true, None),
    ("Owner", "16", false, None),
    ("Creator", "17", false, None),
    ("User", "18", false, None),
    ("Title", "19", false, None),
    ("Quantity", "1A", false, None),
    ("Unit", "1B", false, None),
    ("Colour", "1C", false, None),
    ("Content", "1D", false, None),
    ("ContentOf", "1D", true, None),
    ("Material", "1E", false, None),
    ("MadeOf", "1E", true, None),
    ("Bearer", "1F", false, None),
    ("Consumer", "1G", false, None),
    ("Participant", "2", false, None),
    ("Time", "21", false, Some(3)),
    ("Duration", "211", false, None),
    ("Frequency", "212", false, None),
    ("Actor", "22", false, None),
    ("Agent", "221", false, Some(4)),
    ("Co-Agent", "222", false, None),
    ("Causer", "223", false, None),
    ("Experiencer", "224", false, None),
    ("Pivot", "225", false, None),
    ("Undergoer", "23", false, None),
    ("Patient", "231", false, None),
    ("Co-Patient", "232", false, None),
    ("Theme", "233", false, None),
    ("Co-Theme", "234", false, None),
    ("Stimulus", "235", false, None),
    ("Topic", "236", false, None),
    ("Beneficiary", "237", false, None),
    ("Recipient", "238", false, None),
    ("Result", "239", false, None),
    ("Product", "23A", false, None),
    ("Asset", "23B", false, None),
    ("Proposition", "23C", false, None),
    ("Place", "24", false, None),
    ("Location", "241", false, None),
    ("Source", "242", false, None),
    ("Destination", "243", false, None),
    ("Path", "244", false, None),
    ("Goal", "245", false, None),
    ("Start", "246", false, None),
    ("Finish", "247", false, None),
    ("Manner", "25", false, None),
    ("Instrument", "251", false, None),
    ("Degree", "252", false, None),
    ("Extent", "253", false, None),
    ("Value", "254", false, None),
];

pub fn roles() -> &'static [RoleDef] {
    static TABLE: OnceLock<Vec<RoleDef>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let fixed: Vec<u32> = ROLE_SPECS.iter().filter_map(|s| s.3).collect();
        let mut next = 1;
        ROLE_SPECS
            .iter()
            .map(|&(name, labels, inverse, id)| {
                let n = match id {
                    Some(n) => n,
                    None => {
                        while fixed.contains(&next) {
                            next += 1;
                        }
                        next += 1;
                        next - 1
                    }
                };
                RoleDef {
                    name,
                    wid: ROLE_BASE + n,
                    labels,
                    inverse,
                }
            })
            .collect()
    })
}

pub const OPERATORS: &[SymbolDef] = &[
    SymbolDef { name: "TPR", wid: 700_000_001, symbol: '\u{227A}' },
    SymbolDef { name: "TSU", wid: 700_000_002, symbol: '\u{227B}' },
    SymbolDef { name: "TIN", wid: 700_000_003, symbol: '\u{228F}' },
    SymbolDef { name: "TCT", wid: 700_000_004, symbol: '\u{2290}' },
    SymbolDef { name: "TAB", wid: 700_000_005, symbol: '\u{22C8}' },
    SymbolDef { name: "LES", wid: 700_000_006, symbol: '<' },
    SymbolDef { name: "LEQ", wid: 700_000_007, symbol: '\u{2264}' },
    SymbolDef { name: "TOP", wid: 700_000_008, symbol: '\u{22A4}' },
    SymbolDef { name: "MOR", wid: 700_000_010, symbol: '>' },
    SymbolDef { name: "EQU", wid: 700_000_011, symbol: '=' },
    SymbolDef { name: "ANA", wid: 700_000_012, symbol: '\u{2261}' },
    SymbolDef { name: "APX", wid: 700_000_013, symbol: '\u{2248}' },
    SymbolDef { name: "NEQ", wid: 700_000_014, symbol: '\u{2260}' },
    SymbolDef { name: "SXP", wid: 700_000_015, symbol: '\u{226B}' },
    SymbolDef { name: "SXN", wid: 700_000_016, symbol: '\u{226A}' },
    SymbolDef { name: "SZN", wid: 700_000_017, symbol: '\u{22BB}' },
    SymbolDef { name: "SZP", wid: 700_000_018, symbol: '\u{22CE}' },
];

pub const RELATIONS: &[SymbolDef] = &[
    SymbolDef { name: "ALTERNATION", wid: 600_000_001, symbol: '\u{2228}' },
    SymbolDef { name: "ATTRIBUTION", wid: 600_000_002, symbol: '@' },
    SymbolDef { name: "CONDITION", wid: 600_000_003, symbol: '\u{2192}' },
    SymbolDef { name: "CONSEQUENCE", wid: 600_000_004, symbol: '\u{21D2}' },
    SymbolDef { name: "CONTINUATION", wid: 600_000_005, symbol: '\u{2194}' },
    SymbolDef { name: "CONTRAST", wid: 600_000_006, symbol: '/' },
    SymbolDef { name: "EXPLANATION", wid: 600_000_007, symbol: '\u{221E}' },
    SymbolDef { name: "NECESSITY", wid: 600_000_008, symbol: '\u{25A1}' },
    SymbolDef { name: "NEGATION", wid: 600_000_009, symbol: '\u{00AC}' },
    SymbolDef { name: "POSSIBILITY", wid: 600_000_010, symbol: '\u{22C4}' },
    SymbolDef { name: "PRECONDITION", wid: 600_000_011, symbol: '\u{2190}' },
    SymbolDef { name: "RESULT", wid: 600_000_012, symbol: '\u{2211}' },
    SymbolDef { name: "SOURCE", wid: 600_000_013, symbol: '\u{21A9}' },
    SymbolDef { name: "CONJUNCTION", wid: 600_000_014, symbol: '\u{2227}' },
    SymbolDef { name: "ELABORATION", wid: 600_000_015, symbol: '\u{2283}' },
    SymbolDef { name: "COMMENTARY", wid: 600_000_016, symbol: '\u{2020}' },
];

pub fn role_by_name(name: &str) -> Option<&'static RoleDef> {
    roles().iter().find(|r| r.name == name)
}

pub fn operator_by_name(name: &str) -> Option<&'static SymbolDef> {
    OPERATORS.iter().find(|o| o.name == name)
}

pub fn operator_by_symbol(c: char) -> Option<&'static SymbolDef> {
    OPERATORS.iter().find(|o| o.symbol == c)
}

pub fn relation_by_name(name: &str) -> Option<&'static SymbolDef> {
    RELATIONS.iter().find(|o| o.name == name)
}

pub fn relation_by_symbol(c: char) -> Option<&'static SymbolDef> {
    RELATIONS.iter().find(|o| o.symbol == c)
}

/// Single-char string → its only char.
pub fn single_char(s: &str) -> Option<char> {
    let mut it = s.chars();
    match (it.next(), it.next()) {
        (Some(c), None) => Some(c),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn fixed_role_ids() {
        assert_eq!(role_by_name("Name").unwrap().wid, 500_000_018);
        assert_eq!(role_by_name("Agent").unwrap().wid, 500_000_004);
        assert_eq!(role_by_name("Time").unwrap().wid, 500_000_003);
        assert_eq!(role_by_name("Name").unwrap().labels, "12");
        assert_eq!(role_by_name("Agent").unwrap().labels, "221");
        assert_eq!(role_by_name("Time").unwrap().labels, "21");
    }

    #[test]
    fn role_ids_and_codes_unique() {
        let ids: HashSet<u32> = roles().iter().map(|r| r.wid).collect();
        assert_eq!(ids.len(), roles().len());
        let codes: HashSet<(bool, &str)> = roles().iter().map(|r| (r.inverse, r.labels)).collect();
        assert_eq!(codes.len(), roles().len());
        for r in roles() {
            assert!(r.labels.len() <= ROLE_WIDTH);
            // every non-root role hangs under an existing non-inverse role
            if r.labels.len() > 1 {
                let parent = &r.labels[..r.labels.len() - 1];
                assert!(roles().iter().any(|p| !p.inverse && p.labels == parent), "{}", r.name);
            }
            if r.inverse {
                assert!(roles().iter().any(|p| !p.inverse && p.labels == r.labels));
            }
        }
    }

    #[test]
    fn operator_and_relation_tables() {
        assert_eq!(OPERATORS.len(), 17);
        assert_eq!(RELATIONS.len(), 16);
        assert!(OPERATORS.iter().all(|o| o.wid != 700_000_009));
        assert_eq!(operator_by_name("EQU").unwrap().symbol, '=');
        assert_eq!(operator_by_name("EQU").unwrap().wid, 700_000_011);
        assert_eq!(relation_by_name("NEGATION").unwrap().symbol, '¬');
        assert_eq!(relation_by_name("NEGATION").unwrap().wid, 600_000_009);
        let syms: HashSet<char> = OPERATORS.iter().chain(RELATIONS).map(|s| s.symbol).collect();
        assert_eq!(syms.len(), 33);
    }
}
