//! The shipped catalog files under `catalogs/` are generated from the
//! in-code catalogs. `shipped_files_match` pins them; run
//! `cargo test -p mcmtop --test catalog_files -- --ignored` to regenerate
//! after a catalog change.

use std::fs;
use std::path::PathBuf;

use serde_json::json;

use mcmtop::catalog::{from_document, load_catalog, to_document};
use mcmtop::degen::{fact_doc, shipped_facts};

const RINGS: [(&str, u32); 6] = [
    ("Ainf-1", 6),
    ("Dinf-1", 6),
    ("Dinf-2", 4),
    ("Dinf-3", 4),
    ("cusp", 0),
    ("cone", 0),
];

fn catalogs_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../catalogs")
}

fn render(label: &str, n_max: u32) -> String {
    let cat = load_catalog(label, n_max).unwrap();
    let store = shipped_facts(&cat).unwrap();
    let doc = json!({
        "catalog": serde_json::to_value(to_document(&cat)).unwrap(),
        "facts": store.facts.iter().map(|f| serde_json::to_value(fact_doc(f)).unwrap()).collect::<Vec<_>>(),
    });
    serde_json::to_string_pretty(&doc).unwrap() + "\n"
}

#[test]
fn shipped_files_match() {
    for (label, n_max) in RINGS {
        let path = catalogs_dir().join(format!("{label}.json"));
        let on_disk = fs::read_to_string(&path)
            .unwrap_or_else(|e| panic!("missing catalog file {}: {e}", path.display()));
        assert_eq!(
            on_disk,
            render(label, n_max),
            "catalog file for {label} is stale; regenerate with --ignored"
        );
    }
}

#[test]
fn documents_roundtrip() {
    for (label, n_max) in RINGS {
        let cat = load_catalog(label, n_max).unwrap();
        let doc = to_document(&cat);
        let text = serde_json::to_string(&doc).unwrap();
        let parsed = serde_json::from_str(&text).unwrap();
        let back = from_document(&parsed).unwrap();
        assert_eq!(cat.names(), back.names(), "{label}");
        for name in cat.names() {
            assert_eq!(cat.e_of(&name).unwrap(), back.e_of(&name).unwrap(), "{label}:{name}");
            assert_eq!(
                cat.get(&name).unwrap().presentation_matrix(&cat.ring),
                back.get(&name).unwrap().presentation_matrix(&back.ring),
                "{label}:{name}"
            );
        }
    }
}

#[test]
#[ignore = "writes the catalogs/ files; run after a catalog change"]
fn regenerate_files() {
    let dir = catalogs_dir();
    fs::create_dir_all(&dir).unwrap();
    for (label, n_max) in RINGS {
        fs::write(dir.join(format!("{label}.json")), render(label, n_max)).unwrap();
    }
}
