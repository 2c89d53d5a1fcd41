//! C ABI over the construction engine: opaque handles, integer error
//! codes, caller-freed strings. The header is generated by cbindgen into
//! `include/gridpalf.h`.

use gridpalf::construct::{construct_palf, Palf, Strategy};
use gridpalf::grid::{parse_grid, GridDiagram};
use gridpalf::report;
use std::ffi::{c_char, c_int, CStr, CString};
use std::ptr;

pub const GRIDPALF_OK: c_int = 0;
pub const GRIDPALF_ERR_NULL: c_int = -1;
pub const GRIDPALF_ERR_UTF8: c_int = -2;
pub const GRIDPALF_ERR_PARSE: c_int = -3;
pub const GRIDPALF_ERR_CONSTRUCT: c_int = -4;
pub const GRIDPALF_ERR_BAD_ARG: c_int = -5;

/// Opaque grid diagram handle.
pub struct GridHandle(GridDiagram);

/// Opaque fibration handle.
pub struct PalfHandle(Palf);

fn strategy_of(code: c_int) -> Option<Strategy> {
    match code {
        0 => Some(Strategy::Comb),
        1 => Some(Strategy::Flex),
        2 => Some(Strategy::Rtl),
        _ => None,
    }
}

/// Parse a grid file. On success stores a new handle in `out` and returns
/// `GRIDPALF_OK`.
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gridpalf_grid_parse(
    text: *const c_char,
    out: *mut *mut GridHandle,
) -> c_int {
    if text.is_null() || out.is_null() {
        return GRIDPALF_ERR_NULL;
    }
    let Ok(text) = CStr::from_ptr(text).to_str() else {
        return GRIDPALF_ERR_UTF8;
    };
    match parse_grid(text) {
        Ok(g) => {
            *out = Box::into_raw(Box::new(GridHandle(g)));
            GRIDPALF_OK
        }
        Err(_) => GRIDPALF_ERR_PARSE,
    }
}

/// # Safety
/// `grid` must come from [`gridpalf_grid_parse`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn gridpalf_grid_free(grid: *mut GridHandle) {
    if !grid.is_null() {
        drop(Box::from_raw(grid));
    }
}

/// Total writhe of the diagram.
///
/// # Safety
/// `grid` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn gridpalf_grid_writhe(grid: *const GridHandle) -> i64 {
    grid.as_ref().map_or(0, |g| g.0.writhe())
}

/// Thurston-Bennequin number of one component, or `i64::MIN` on a bad index.
///
/// # Safety
/// `grid` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn gridpalf_grid_tb(grid: *const GridHandle, component: usize) -> i64 {
    grid.as_ref()
        .and_then(|g| g.0.legendrian_invariants(component).ok())
        .map_or(i64::MIN, |inv| inv.tb)
}

/// Construct the fibration: `strategy` 0 = comb, 1 = flex, 2 = rtl.
///
/// # Safety
/// `grid` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gridpalf_construct(
    grid: *const GridHandle,
    strategy: c_int,
    include_c0: bool,
    out: *mut *mut PalfHandle,
) -> c_int {
    if grid.is_null() || out.is_null() {
        return GRIDPALF_ERR_NULL;
    }
    let Some(strategy) = strategy_of(strategy) else {
        return GRIDPALF_ERR_BAD_ARG;
    };
    match construct_palf(&(*grid).0, strategy, include_c0) {
        Ok(p) => {
            *out = Box::into_raw(Box::new(PalfHandle(p)));
            GRIDPALF_OK
        }
        Err(_) => GRIDPALF_ERR_CONSTRUCT,
    }
}

/// # Safety
/// `palf` must come from [`gridpalf_construct`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn gridpalf_palf_free(palf: *mut PalfHandle) {
    if !palf.is_null() {
        drop(Box::from_raw(palf));
    }
}

/// Number of 1-handles of the regular fiber.
///
/// # Safety
/// `palf` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn gridpalf_fiber_handles(palf: *const PalfHandle) -> usize {
    palf.as_ref().map_or(0, |p| p.0.fiber.handle_count())
}

/// Boundary components of the regular fiber.
///
/// # Safety
/// `palf` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn gridpalf_fiber_boundary_components(palf: *const PalfHandle) -> usize {
    palf.as_ref().map_or(0, |p| p.0.fiber.boundary_components())
}

/// Genus of the regular fiber.
///
/// # Safety
/// `palf` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn gridpalf_fiber_genus(palf: *const PalfHandle) -> i64 {
    palf.as_ref().map_or(-1, |p| p.0.fiber.genus())
}

/// Copy the cyclic boundary word into `buf` (capacity `cap` labels);
/// returns the word length, or a negative error code.
///
/// # Safety
/// `palf` must be a live handle; `buf` must point to at least `cap` u32s.
#[no_mangle]
pub unsafe extern "C" fn gridpalf_boundary_word(
    palf: *const PalfHandle,
    buf: *mut u32,
    cap: usize,
) -> c_int {
    let Some(p) = palf.as_ref() else {
        return GRIDPALF_ERR_NULL;
    };
    let word = p.0.boundary_word();
    if buf.is_null() && cap != 0 {
        return GRIDPALF_ERR_NULL;
    }
    for (i, &l) in word.iter().take(cap).enumerate() {
        *buf.add(i) = l as u32;
    }
    word.len() as c_int
}

/// Full JSON report for a constructed fibration, as a newly allocated
/// string. Free with [`gridpalf_string_free`]. Returns NULL on error.
///
/// # Safety
/// Both handles must be live.
#[no_mangle]
pub unsafe extern "C" fn gridpalf_report_json(
    grid: *const GridHandle,
    palf: *const PalfHandle,
) -> *mut c_char {
    let (Some(g), Some(p)) = (grid.as_ref(), palf.as_ref()) else {
        return ptr::null_mut();
    };
    let doc = report::document(&g.0, Some(&p.0), None);
    CString::new(report::to_json(&doc)).map_or(ptr::null_mut(), CString::into_raw)
}

/// # Safety
/// `s` must be a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gridpalf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_through_the_c_abi() {
        let text = CString::new("grid 5\nX 5 1 2 3 4\nO 2 3 4 5 1\n").unwrap();
        unsafe {
            let mut grid: *mut GridHandle = ptr::null_mut();
            assert_eq!(gridpalf_grid_parse(text.as_ptr(), &mut grid), GRIDPALF_OK);
            assert_eq!(gridpalf_grid_writhe(grid), 3);
            assert_eq!(gridpalf_grid_tb(grid, 0), 1);

            let mut palf: *mut PalfHandle = ptr::null_mut();
            assert_eq!(gridpalf_construct(grid, 1, true, &mut palf), GRIDPALF_OK);
            assert_eq!(gridpalf_fiber_handles(palf), 4);
            assert_eq!(gridpalf_fiber_genus(palf), 1);

            let mut buf = [0u32; 16];
            let len = gridpalf_boundary_word(palf, buf.as_mut_ptr(), buf.len());
            assert_eq!(len, 8);

            let json = gridpalf_report_json(grid, palf);
            assert!(!json.is_null());
            let s = CStr::from_ptr(json).to_str().unwrap();
            assert!(s.contains("\"schema_version\": 1"));
            gridpalf_string_free(json);

            gridpalf_palf_free(palf);
            gridpalf_grid_free(grid);
        }
        // Parse failure surfaces as an error code.
        let bad = CString::new("grid 2\nX 1 1\nO 2 1\n").unwrap();
        unsafe {
            let mut grid: *mut GridHandle = ptr::null_mut();
            assert_eq!(
                gridpalf_grid_parse(bad.as_ptr(), &mut grid),
                GRIDPALF_ERR_PARSE
            );
        }
    }
}
