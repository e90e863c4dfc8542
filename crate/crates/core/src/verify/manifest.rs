//! Which check ids cover which theorem, proposition or lemma.

use super::CHECK_IDS;

/// Every labelled result, with the check ids that verify it.
pub const RESULTS: &[(&str, &[&str])] = &[
    ("MainCSE", &["MainCSE.a", "MainCSE.b", "MainCSE.c"]),
    ("FocProp", &["FocProp"]),
    ("MainCFE", &["MainCFE"]),
    ("MainCentralProduct", &["MainCentralProduct"]),
    ("Model1", &["Model1.a", "Model1.b", "Model1.c"]),
    ("Finvariant", &["Finvariant.equiv"]),
    ("FfEf", &["FfEf"]),
    ("Wellknown", &["Wellknown"]),
    ("LocalNormalSubsystems", &["LocalNormalSubsystems"]),
    ("PropHelp", &["PropHelp"]),
    ("L:F1F2Centralize", &["L:F1F2Centralize"]),
    ("P:F1F2Centralize", &["P:F1F2Centralize"]),
    ("EasyCentralizer", &["EasyCentralizer"]),
    ("FrattiniCons", &["FrattiniCons"]),
    ("XInvariant", &["XInvariant"]),
    ("WeaklyClosedCentralized", &["WeaklyClosedCentralized"]),
    ("GN", &["GN"]),
    ("CFCG0", &["CFCG0"]),
    ("FirstCharacterization", &["FirstCharacterization"]),
    ("ShowWeaklyNormal", &["ShowWeaklyNormal"]),
    ("CFENormal", &["CFENormal"]),
    ("Coincide", &["Coincide"]),
    ("RadicalIntersect", &["RadicalIntersect"]),
    ("ZCentralize", &["ZCentralize"]),
    ("NormalCentralizeEachOther", &["NormalCentralizeEachOther"]),
];

/// Labelled results deliberately left unchecked.
pub const OUT_OF_SCOPE: &[&str] = &[];

/// Checks that compare against an independent computation rather than a
/// stated result.
pub const ORACLE_CHECKS: &[&str] = &["Saturation", "FocalOracle", "CSEBruteForce"];

/// Problems with the manifest: ids without a result, results without a
/// check, or ids that do not exist.
pub fn coverage_problems() -> Vec<String> {
    let mut out = Vec::new();
    for (label, ids) in RESULTS {
        if ids.is_empty() && !OUT_OF_SCOPE.contains(label) {
            out.push(format!("{label} has no check"));
        }
        for id in *ids {
            if !CHECK_IDS.contains(id) {
                out.push(format!("{label} names unknown check {id}"));
            }
        }
    }
    for id in CHECK_IDS {
        let covered = RESULTS.iter().any(|(_, ids)| ids.contains(id)) || ORACLE_CHECKS.contains(id);
        if !covered {
            out.push(format!("check {id} verifies nothing listed"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn manifest_is_complete() {
        assert_eq!(coverage_problems(), Vec::<String>::new());
        assert_eq!(RESULTS.len() + OUT_OF_SCOPE.len(), 25);
    }
}
