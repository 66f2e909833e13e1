use std::ffi::{c_char, CStr, CString};
use std::ptr;

use birkhoff_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    bk_string_free(s);
    out
}

unsafe fn last_error() -> Option<String> {
    let p = bk_last_error();
    (!p.is_null()).then(|| CStr::from_ptr(p).to_string_lossy().into_owned())
}

#[test]
fn build_insert_and_query() {
    unsafe {
        let mut set: *mut BkPermSet = ptr::null_mut();
        assert_eq!(bk_permset_new(4, &mut set), BkStatus::Ok);
        let mut added = false;
        for text in ["()", "(1,2)(3,4)", "(1,3)(2,4)", "(1,4)(2,3)"] {
            assert_eq!(bk_permset_insert(set, c(text).as_ptr(), &mut added), BkStatus::Ok);
            assert!(added);
        }
        assert_eq!(
            bk_permset_insert(set, c("(1,2)(3,4)").as_ptr(), &mut added),
            BkStatus::Ok
        );
        assert!(!added);
        let (mut len, mut degree) = (0usize, 0usize);
        assert_eq!(bk_permset_len(set, &mut len), BkStatus::Ok);
        assert_eq!(bk_permset_degree(set, &mut degree), BkStatus::Ok);
        assert_eq!((len, degree), (4, 4));

        let mut s: *mut c_char = ptr::null_mut();
        assert_eq!(bk_permset_element(set, 1, &mut s), BkStatus::Ok);
        assert_eq!(take(s), "(1,2)(3,4)");
        assert_eq!(bk_permset_element(set, 9, &mut s), BkStatus::InvalidArgument);
        assert!(last_error().unwrap().contains("out of range"));

        let mut ok = false;
        assert_eq!(bk_verify_independent(set, &mut ok), BkStatus::Ok);
        assert!(ok);
        assert_eq!(bk_verify_clique(set, &mut ok), BkStatus::Ok);
        assert!(!ok);
        assert_eq!(bk_is_maximal_independent(set, 4, &mut ok), BkStatus::Ok);
        assert!(ok);

        assert_eq!(bk_permset_to_json(set, &mut s), BkStatus::Ok);
        let json = c(&take(s));
        let mut copy: *mut BkPermSet = ptr::null_mut();
        assert_eq!(bk_permset_from_json(json.as_ptr(), &mut copy), BkStatus::Ok);
        assert_eq!(bk_permset_len(copy, &mut len), BkStatus::Ok);
        assert_eq!(len, 4);
        bk_permset_free(copy);
        bk_permset_free(set);
    }
}

#[test]
fn constructions() {
    unsafe {
        let mut set: *mut BkPermSet = ptr::null_mut();
        let mut len = 0usize;
        let mut ok = false;
        assert_eq!(bk_build_g_set(8, &mut set), BkStatus::Ok);
        assert_eq!(bk_permset_len(set, &mut len), BkStatus::Ok);
        assert_eq!(len, 192);
        bk_permset_free(set);

        assert_eq!(bk_pairing_subgroup(6, &mut set), BkStatus::Ok);
        assert_eq!(bk_permset_len(set, &mut len), BkStatus::Ok);
        assert_eq!(len, 24);
        assert_eq!(bk_is_maximal_independent(set, 7, &mut ok), BkStatus::Ok);
        assert!(ok);
        bk_permset_free(set);

        assert_eq!(bk_star_clique(5, &mut set), BkStatus::Ok);
        assert_eq!(bk_is_maximal_clique(set, 5, &mut ok), BkStatus::Ok);
        assert!(ok);
        bk_permset_free(set);

        let mut s: *mut c_char = ptr::null_mut();
        assert_eq!(bk_bounds_json(8, &mut s), BkStatus::Ok);
        assert!(take(s).contains("\"best_known\": \"192\""));
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut ok = false;
        assert_eq!(
            bk_adjacent(3, c("()").as_ptr(), c("(1,2,3)").as_ptr(), &mut ok),
            BkStatus::Ok
        );
        assert!(ok);
        assert!(last_error().is_none());
        assert_eq!(
            bk_adjacent(3, c("()").as_ptr(), c("(1,4)").as_ptr(), &mut ok),
            BkStatus::ParseError
        );
        assert!(last_error().is_some());
        assert_eq!(
            bk_adjacent(3, ptr::null(), c("()").as_ptr(), &mut ok),
            BkStatus::NullPointer
        );
        assert_eq!(bk_permset_len(ptr::null(), ptr::null_mut()), BkStatus::NullPointer);

        let mut set: *mut BkPermSet = ptr::null_mut();
        assert_eq!(bk_permset_new(0, &mut set), BkStatus::InvalidArgument);
        assert_eq!(bk_build_g_set(40, &mut set), BkStatus::BudgetExceeded);
        assert_eq!(bk_pairing_subgroup(7, &mut set), BkStatus::InvalidArgument);
        let bad = c(r#"{"degree": 3, "elements": ["(1,2)", "(1,2)"]}"#);
        assert_eq!(bk_permset_from_json(bad.as_ptr(), &mut set), BkStatus::ParseError);
        let mut s: *mut c_char = ptr::null_mut();
        assert_eq!(bk_bounds_json(3, &mut s), BkStatus::InvalidArgument);

        let mut not_indep: *mut BkPermSet = ptr::null_mut();
        assert_eq!(bk_permset_new(3, &mut not_indep), BkStatus::Ok);
        for text in ["()", "(1,2)"] {
            assert_eq!(
                bk_permset_insert(not_indep, c(text).as_ptr(), ptr::null_mut()),
                BkStatus::Ok
            );
        }
        assert_eq!(
            bk_is_maximal_independent(not_indep, 3, &mut ok),
            BkStatus::NotIndependent
        );
        bk_permset_free(not_indep);
        bk_permset_free(ptr::null_mut());
        bk_string_free(ptr::null_mut());
    }
}

#[test]
fn header_declares_every_entry_point() {
    let header = include_str!("../include/birkhoff.h");
    for name in [
        "bk_last_error",
        "bk_string_free",
        "bk_permset_new",
        "bk_permset_from_json",
        "bk_permset_free",
        "bk_permset_insert",
        "bk_permset_len",
        "bk_permset_degree",
        "bk_permset_element",
        "bk_permset_to_json",
        "bk_adjacent",
        "bk_verify_clique",
        "bk_verify_independent",
        "bk_is_maximal_independent",
        "bk_is_maximal_clique",
        "bk_build_g_set",
        "bk_pairing_subgroup",
        "bk_star_clique",
        "bk_bounds_json",
    ] {
        assert!(header.contains(&format!("{name}(")), "{name}");
    }
    assert!(header.contains("typedef struct BkPermSet BkPermSet;"));
    assert!(header.contains("BK_STATUS_BUDGET_EXCEEDED = 5"));
}
