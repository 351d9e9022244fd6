//! The bundled corpus files parse, print back byte for byte, and agree with
//! the in-code corpus.

use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;

use graycat::corpus::{computad_corpus, file_stem, gray_corpus, morphism_corpus};
use graycat::text::{parse_computad, parse_gray, parse_gray_morphism, print_computad, print_gray, print_gray_morphism};

fn dir(sub: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(sub)
}

fn files(sub: &str, ext: &str) -> BTreeSet<String> {
    fs::read_dir(dir(sub))
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .filter(|n| n.ends_with(ext))
        .collect()
}

#[test]
fn gray_files_match_corpus() {
    let corpus = gray_corpus();
    let want: BTreeSet<String> = corpus.iter().map(|(n, _)| format!("{}.gray", file_stem(n))).collect();
    assert_eq!(files("gray", ".gray"), want, "one file per corpus object, stems unique");
    for (name, g) in corpus {
        let text = fs::read_to_string(dir("gray").join(format!("{}.gray", file_stem(name)))).unwrap();
        let back = parse_gray(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(print_gray(&back), text, "{name}");
        assert_eq!(back, g, "{name}");
    }
}

#[test]
fn morphism_files_match_corpus() {
    let corpus = morphism_corpus();
    let want: BTreeSet<String> = corpus.iter().map(|m| format!("{}.morphism", file_stem(&m.name))).collect();
    assert_eq!(want.len(), corpus.len());
    assert_eq!(files("morphisms", ".morphism"), want);
    for m in corpus {
        let text = fs::read_to_string(dir("morphisms").join(format!("{}.morphism", file_stem(&m.name)))).unwrap();
        let (dom, cod, f) = parse_gray_morphism(&text).unwrap_or_else(|e| panic!("{}: {e}", m.name));
        assert_eq!(print_gray_morphism(&dom, &cod, &f), text);
        assert_eq!((dom, cod, f), (m.dom, m.cod, m.f), "{}", m.name);
    }
}

#[test]
fn computad_files_match_corpus() {
    let corpus = computad_corpus();
    let want: BTreeSet<String> = corpus.iter().map(|(n, _)| format!("{}.computad", file_stem(n))).collect();
    assert_eq!(files("computads", ".computad"), want);
    for (name, g) in corpus {
        let text = fs::read_to_string(dir("computads").join(format!("{}.computad", file_stem(name)))).unwrap();
        let back = parse_computad(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(print_computad(&back), text);
        assert_eq!(back, g);
    }
}
