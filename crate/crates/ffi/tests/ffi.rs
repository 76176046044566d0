use std::ffi::{c_char, CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use sptough_ffi::*;

fn owned(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { spt_string_free(s) };
    text
}

fn last_error() -> String {
    let p = spt_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

fn graph(expr: &str) -> *mut SptGraph {
    let c = CString::new(expr).unwrap();
    let mut tree = ptr::null_mut();
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(spt_tree_parse(c.as_ptr(), &mut tree), SptStatus::Ok);
        assert_eq!(spt_tree_realize(tree, &mut g), SptStatus::Ok);
        spt_tree_free(tree);
    }
    g
}

#[test]
fn tree_round_trip() {
    let c = CString::new(" P( e , S(e,e) ) ").unwrap();
    let mut tree = ptr::null_mut();
    unsafe {
        assert_eq!(spt_tree_parse(c.as_ptr(), &mut tree), SptStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(spt_tree_serialize(tree, &mut s), SptStatus::Ok);
        assert_eq!(owned(s), "P(e,S(e,e))");

        let mut canon = ptr::null_mut();
        assert_eq!(spt_tree_canonicalize(tree, &mut canon), SptStatus::Ok);
        let (mut a, mut b) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(spt_tree_encode(tree, &mut a), SptStatus::Ok);
        assert_eq!(spt_tree_encode(canon, &mut b), SptStatus::Ok);
        assert_eq!(owned(a), owned(b));
        spt_tree_free(canon);
        spt_tree_free(tree);
    }
}

#[test]
fn errors_are_reported() {
    let bad = CString::new("S(e,").unwrap();
    let mut tree = ptr::null_mut();
    unsafe {
        assert_eq!(spt_tree_parse(bad.as_ptr(), &mut tree), SptStatus::Syntax);
        assert!(tree.is_null());
        assert!(last_error().contains("end of input"));

        assert_eq!(spt_tree_parse(ptr::null(), &mut tree), SptStatus::NullPointer);
        let invalid = [0xffu8, 0];
        assert_eq!(
            spt_tree_parse(invalid.as_ptr().cast(), &mut tree),
            SptStatus::InvalidUtf8
        );

        let mut out = SptToughness {
            kind: SptToughnessKind::Zero,
            numer: 0,
            denom: 0,
        };
        assert_eq!(spt_toughness(ptr::null(), 0, &mut out), SptStatus::NullPointer);

        let g = graph("S(e,e,e,e,e,e,e,e,e,e)");
        assert_eq!(spt_toughness(g, 4, &mut out), SptStatus::Capacity);
        spt_graph_free(g);

        let not_sp = CString::new("0 1\n1 2\n2 0\n2 3\n3 4\n4 2\n3 5\n4 5\n0 5\n1 5").unwrap();
        let mut g = ptr::null_mut();
        assert_eq!(spt_graph_from_edge_list(not_sp.as_ptr(), &mut g), SptStatus::Ok);
        let mut verdict = SptVerdict::NotApplicable;
        let status = spt_classify(g, 0, &mut verdict, ptr::null_mut());
        assert_eq!(status, SptStatus::NotSeriesParallel);
        spt_graph_free(g);
    }
}

#[test]
fn toughness_values() {
    unsafe {
        let p3 = graph("S(e,e)");
        let mut t = SptToughness {
            kind: SptToughnessKind::Zero,
            numer: 0,
            denom: 0,
        };
        assert_eq!(spt_toughness(p3, 0, &mut t), SptStatus::Ok);
        assert_eq!((t.kind, t.numer, t.denom), (SptToughnessKind::Finite, 1, 2));

        let mut len = 0;
        assert_eq!(
            spt_tough_set(p3, 0, ptr::null_mut(), 0, &mut len),
            SptStatus::BufferTooSmall
        );
        assert_eq!(len, 1);
        let mut buf = [u32::MAX; 4];
        assert_eq!(
            spt_tough_set(p3, 0, buf.as_mut_ptr(), buf.len(), &mut len),
            SptStatus::Ok
        );
        assert_eq!(&buf[..len], &[2]);
        spt_graph_free(p3);

        let k2 = graph("e");
        assert_eq!(spt_toughness(k2, 0, &mut t), SptStatus::Ok);
        assert_eq!(t.kind, SptToughnessKind::Infinite);
        assert_eq!(spt_tough_set(k2, 0, buf.as_mut_ptr(), 4, &mut len), SptStatus::Domain);
        spt_graph_free(k2);

        let g = spt_graph_new();
        assert_eq!(spt_graph_add_edge(g, 0, 1), SptStatus::Ok);
        assert_eq!(spt_graph_add_edge(g, 2, 3), SptStatus::Ok);
        assert_eq!((spt_graph_vertex_count(g), spt_graph_edge_count(g)), (4, 2));
        assert_eq!(spt_toughness(g, 0, &mut t), SptStatus::Ok);
        assert_eq!(t.kind, SptToughnessKind::Zero);
        spt_graph_free(g);
        assert_eq!(spt_graph_vertex_count(ptr::null()), 0);
    }
}

#[test]
fn minimality_and_classification() {
    unsafe {
        let c5 = graph("P(S(e,e),S(e,e,e))");
        let mut minimal = false;
        assert_eq!(spt_is_minimally_tough(c5, 0, &mut minimal), SptStatus::Ok);
        assert!(minimal);
        let mut verdict = SptVerdict::NotApplicable;
        let mut text = ptr::null_mut();
        assert_eq!(spt_classify(c5, 0, &mut verdict, &mut text), SptStatus::Ok);
        assert_eq!(verdict, SptVerdict::MinimallyTough);
        assert!(!owned(text).is_empty());
        spt_graph_free(c5);

        let k24 = graph("P(S(e,e),S(e,e),S(e,e),S(e,e))");
        assert_eq!(spt_is_minimally_tough(k24, 0, &mut minimal), SptStatus::Ok);
        assert!(!minimal);
        assert_eq!(spt_classify(k24, 0, &mut verdict, ptr::null_mut()), SptStatus::Ok);
        assert_eq!(verdict, SptVerdict::NotMinimallyTough);

        let mut dot = ptr::null_mut();
        assert_eq!(spt_graph_to_dot(k24, &mut dot), SptStatus::Ok);
        assert_eq!(owned(dot).matches(" -- ").count(), 8);
        spt_graph_free(k24);
    }
}

#[test]
fn header_is_current_and_compiles() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/sptough.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for name in [
        "spt_tree_parse",
        "spt_toughness",
        "spt_tough_set",
        "spt_classify",
        "spt_last_error",
        "SPT_STATUS_BUFFER_TOO_SMALL",
        "typedef struct SptGraph SptGraph;",
    ] {
        assert!(text.contains(name), "header lacks {name}");
    }
    let Ok(status) = Command::new("cc")
        .args(["-fsyntax-only", "-Wall", "-Werror", "-x", "c"])
        .arg(&header)
        .status()
    else {
        eprintln!("no C compiler; skipping syntax check");
        return;
    };
    assert!(status.success());
}
