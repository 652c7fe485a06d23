use std::ffi::{c_char, CStr, CString};
use std::ptr;

use axial_ffi::*;

fn take(s: *mut c_char) -> serde_json::Value {
    assert!(!s.is_null());
    let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { axial_string_free(s) };
    serde_json::from_str(&text).unwrap()
}

fn last_error() -> String {
    let p = axial_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn flex2() -> *mut AxialAlgebra {
    let family = CString::new("flex2").unwrap();
    let field = CString::new("Q").unwrap();
    let lambda = CString::new("1/3").unwrap();
    let mut h = ptr::null_mut();
    let st = unsafe {
        axial_catalog_algebra(
            family.as_ptr(),
            field.as_ptr(),
            lambda.as_ptr(),
            ptr::null(),
            ptr::null(),
            &mut h,
        )
    };
    assert_eq!(st, AxialStatus::Ok);
    h
}

#[test]
fn catalog_handle_basics() {
    let h = flex2();
    let mut dim = 0usize;
    let mut flag = false;
    unsafe {
        assert_eq!(axial_algebra_dim(h, &mut dim), AxialStatus::Ok);
        assert_eq!(dim, 3);
        assert_eq!(axial_is_flexible(h, &mut flag), AxialStatus::Ok);
        assert!(flag);
        assert_eq!(axial_is_commutative(h, &mut flag), AxialStatus::Ok);
        assert!(!flag);
        axial_algebra_free(h);
    }
}

#[test]
fn json_round_trip_through_handles() {
    let h = flex2();
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { axial_algebra_to_json(h, &mut s) }, AxialStatus::Ok);
    let text = unsafe { CStr::from_ptr(s) }.to_owned();
    unsafe { axial_string_free(s) };
    let mut h2 = ptr::null_mut();
    assert_eq!(
        unsafe { axial_algebra_from_json(text.as_ptr(), &mut h2) },
        AxialStatus::Ok
    );
    let mut s2 = ptr::null_mut();
    assert_eq!(
        unsafe { axial_algebra_to_json(h2, &mut s2) },
        AxialStatus::Ok
    );
    assert_eq!(unsafe { CStr::from_ptr(s2) }, text.as_c_str());
    unsafe {
        axial_string_free(s2);
        axial_algebra_free(h);
        axial_algebra_free(h2);
    }
}

#[test]
fn axis_and_classification() {
    let h = flex2();
    let a = CString::new("1,0,0").unwrap();
    let bad = CString::new("1,1,-1").unwrap();
    let zero = CString::new("0,0,0").unwrap();
    let mut s = ptr::null_mut();
    unsafe {
        assert_eq!(
            axial_check_axis(h, a.as_ptr(), ptr::null(), &mut s),
            AxialStatus::Ok
        );
        let v = take(s);
        assert_eq!(v["is_jordan_axis"], true);
        assert_eq!(v["report"]["left_type"], "1/3");

        assert_eq!(
            axial_check_axis(h, bad.as_ptr(), ptr::null(), &mut s),
            AxialStatus::CheckFailed
        );
        assert_eq!(take(s)["is_axis"], false);

        s = ptr::null_mut();
        assert_eq!(
            axial_check_axis(h, zero.as_ptr(), ptr::null(), &mut s),
            AxialStatus::InvalidInput
        );
        assert!(s.is_null());
        assert!(last_error().contains("zero element"));

        assert_eq!(axial_classify(h, ptr::null(), &mut s), AxialStatus::Ok);
        assert_eq!(take(s)["display"], "FLEX2(λ=1/3, δ=2/3)");
        axial_algebra_free(h);
    }
}

#[test]
fn finite_field_calls() {
    let mut s = ptr::null_mut();
    unsafe {
        assert_eq!(axial_search_dim2(5, 1_000_000, &mut s), AxialStatus::Ok);
        assert_eq!(take(s)["survivors"].as_array().unwrap().len(), 5);
        assert_eq!(axial_search_dim2(5, 10, &mut s), AxialStatus::ResourceCap);
        assert_eq!(
            axial_search_dim2(4, 1_000_000, &mut s),
            AxialStatus::InvalidInput
        );

        let family = CString::new("flex2").unwrap();
        let field = CString::new("GF:5").unwrap();
        let lambda = CString::new("2").unwrap();
        let mut h = ptr::null_mut();
        let st = axial_catalog_algebra(
            family.as_ptr(),
            field.as_ptr(),
            lambda.as_ptr(),
            ptr::null(),
            ptr::null(),
            &mut h,
        );
        assert_eq!(st, AxialStatus::Ok);
        assert_eq!(axial_idempotents(h, 1_000, &mut s), AxialStatus::Ok);
        let v = take(s);
        assert_eq!(v["count"], 12);
        assert_eq!(v["axes"], 10);
        assert_eq!(axial_idempotents(h, 10, &mut s), AxialStatus::ResourceCap);
        axial_algebra_free(h);
    }
}

#[test]
fn bad_input_is_reported() {
    let mut h = ptr::null_mut();
    let bad = CString::new("{\n\"field\": \"Q\",\n oops }").unwrap();
    unsafe {
        assert_eq!(
            axial_algebra_from_json(bad.as_ptr(), &mut h),
            AxialStatus::InvalidInput
        );
        assert!(h.is_null());
        assert!(last_error().contains("line 3"));
        assert_eq!(
            axial_algebra_from_json(ptr::null(), &mut h),
            AxialStatus::NullPointer
        );
        let mut dim = 0usize;
        assert_eq!(
            axial_algebra_dim(ptr::null(), &mut dim),
            AxialStatus::NullPointer
        );
        let invalid = [0xffu8, 0];
        assert_eq!(
            axial_algebra_from_json(invalid.as_ptr().cast(), &mut h),
            AxialStatus::InvalidUtf8
        );
        axial_algebra_free(ptr::null_mut());
        axial_string_free(ptr::null_mut());
    }
}
