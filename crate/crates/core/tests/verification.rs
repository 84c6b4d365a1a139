use polargrass::field::{Field, FiniteField, Gf, SigmaKind, Sign};
use polargrass::forms::{identity_matrix, symplectic_matrix};
use polargrass::polar::{
    gaussian_binomial, polar_grassmannian, verify_exhaustive, MismatchKind, TheoremContext,
    DEFAULT_ENUMERATION_BUDGET,
};
use polargrass::tensor::DEFAULT_SIZE_CAP;
use polargrass::{Error, SesquilinearForm};

fn gf(p: u64) -> FiniteField {
    FiniteField::prime(p).unwrap()
}

fn form(f: FiniteField, m: &[Vec<Gf>], eps: Sign) -> SesquilinearForm<FiniteField> {
    SesquilinearForm::validated(f, m, eps).unwrap()
}

fn counts(form: &SesquilinearForm<FiniteField>, k: usize) -> (u64, u64, usize) {
    let r = verify_exhaustive(form, k, DEFAULT_ENUMERATION_BUDGET, DEFAULT_SIZE_CAP).unwrap();
    assert_eq!(r.isotropic, r.main_zero);
    (r.enumerated, r.isotropic, r.mismatches.len())
}

#[test]
fn symplectic_polar_spaces() {
    let w32 = form(gf(2), &symplectic_matrix(&gf(2), 4), Sign::Plus);
    assert_eq!(counts(&w32, 1), (15, 15, 0));
    assert_eq!(counts(&w32, 2), (35, 15, 0));
    let w33 = form(gf(3), &symplectic_matrix(&gf(3), 4), Sign::Minus);
    assert_eq!(counts(&w33, 2), (130, 40, 0));
    let w52 = form(gf(2), &symplectic_matrix(&gf(2), 6), Sign::Plus);
    assert_eq!(counts(&w52, 2), (651, 315, 0));
    assert_eq!(counts(&w52, 3), (1395, 135, 0));
}

#[test]
fn hermitian_surface_over_gf4() {
    let f = FiniteField::quadratic(2, SigmaKind::Frobenius).unwrap();
    let h = form(f, &identity_matrix(&f, 4), Sign::Plus);
    assert_eq!(counts(&h, 1), (85, 45, 0));
    assert_eq!(counts(&h, 2), (357, 27, 0));
    assert_eq!(h.witt_index().unwrap(), 2);
}

#[test]
fn quadrics_in_odd_characteristic() {
    // x1²+…+x4² over GF(3) is hyperbolic: 16 points, 8 lines
    let q = form(gf(3), &identity_matrix(&gf(3), 4), Sign::Plus);
    assert_eq!(counts(&q, 1), (40, 16, 0));
    assert_eq!(counts(&q, 2), (130, 8, 0));
    // parabolic quadric in PG(4,5): 156 points, 156 lines
    let p = form(gf(5), &identity_matrix(&gf(5), 5), Sign::Plus);
    assert_eq!(p.witt_index().unwrap(), 2);
    assert_eq!(counts(&p, 1).1, 156);
    assert_eq!(counts(&p, 2).1, 156);
}

#[test]
fn above_the_witt_index_nothing_is_isotropic() {
    let q = form(gf(3), &identity_matrix(&gf(3), 4), Sign::Plus);
    assert_eq!(counts(&q, 3), (40, 0, 0));
    let w = form(gf(2), &symplectic_matrix(&gf(2), 4), Sign::Plus);
    assert!(polar_grassmannian(&w, 3, 1000).unwrap().members.is_empty());
}

#[test]
fn degenerate_symplectic_still_characterized_for_lines() {
    let f = gf(3);
    let w = form(f, &symplectic_matrix(&f, 5), Sign::Minus);
    assert!(!w.is_nondegenerate());
    assert_eq!(w.witt_index().unwrap(), 3);
    let r = verify_exhaustive(&w, 2, DEFAULT_ENUMERATION_BUDGET, DEFAULT_SIZE_CAP).unwrap();
    assert!(!r.shortcut_checked);
    assert!(r.passed());
    assert_eq!(r.enumerated as u128, gaussian_binomial(5, 2, 3).unwrap());
}

#[test]
fn degenerate_non_alternating_forms_are_not_characterized() {
    // A plane spanned by an anisotropic v and a radical vector has Ξ = O.
    let f = gf(3);
    let mut m = vec![vec![Gf(0); 3]; 3];
    m[0][0] = Gf(1);
    let d = form(f, &m, Sign::Plus);
    let r = verify_exhaustive(&d, 2, DEFAULT_ENUMERATION_BUDGET, DEFAULT_SIZE_CAP).unwrap();
    assert_eq!((r.enumerated, r.isotropic, r.main_zero), (13, 1, 13));
    assert!(r.mismatches.iter().all(|m| m.kind == MismatchKind::MainVsIsotropy));
    assert_eq!(r.mismatches.len(), 12);

    // Symplectic ⊕ radical breaks once k = 3: ⟨e1, e2, e5⟩.
    let w = form(f, &symplectic_matrix(&f, 5), Sign::Minus);
    let r = verify_exhaustive(&w, 3, DEFAULT_ENUMERATION_BUDGET, DEFAULT_SIZE_CAP).unwrap();
    assert!(!r.passed());
    let e = |i: usize| (0..5).map(|j| Gf((i == j) as u32)).collect::<Vec<_>>();
    let x = polargrass::exterior::wedge_tensor(f, 5, &[e(0), e(1), e(4)]).unwrap();
    let v = TheoremContext::new(&w, 3).unwrap().membership(&x).unwrap();
    assert!(v.is_member());
    assert_eq!(v.oracle_isotropic, Some(false));
}

#[test]
fn invalid_forms_and_infinite_fields_are_rejected() {
    let f = gf(3);
    let bad = SesquilinearForm::new(f, &[vec![Gf(0), Gf(1)], vec![Gf(0), Gf(0)]], Sign::Plus).unwrap();
    assert!(matches!(verify_exhaustive(&bad, 1, 100, DEFAULT_SIZE_CAP), Err(Error::InvalidForm(_))));
    let q = polargrass::Rationals;
    let qf = SesquilinearForm::validated(q, &identity_matrix(&q, 2), Sign::Plus).unwrap();
    assert_eq!(verify_exhaustive(&qf, 1, 100, DEFAULT_SIZE_CAP).err(), Some(Error::InfiniteField));
}

#[test]
fn size_cap_is_enforced() {
    let f = gf(2);
    let w = form(f, &symplectic_matrix(&f, 6), Sign::Plus);
    // ⊙³M has 6⁶ = 46656 entries
    assert!(matches!(verify_exhaustive(&w, 3, 10_000, 40_000), Err(Error::SizeCap { .. })));
    assert!(verify_exhaustive(&w, 3, 10_000, 50_000).is_ok());
}

#[test]
fn budget_is_enforced() {
    let w = form(gf(5), &identity_matrix(&gf(5), 5), Sign::Plus);
    assert_eq!(
        verify_exhaustive(&w, 2, 1000, DEFAULT_SIZE_CAP).err(),
        Some(Error::BudgetExceeded { budget: 1000, needed: 20306 })
    );
}

#[test]
fn polar_equations_are_zero_on_members() {
    let f = gf(3);
    let w = form(f, &symplectic_matrix(&f, 4), Sign::Minus);
    let ctx = TheoremContext::new(&w, 2).unwrap();
    let eqs = ctx.equations().unwrap();
    let listing = polar_grassmannian(&w, 2, 1000).unwrap();
    assert_eq!(listing.members.len(), 40);
    for m in &listing.members {
        let coords = polargrass::exterior::plucker_coordinates(&m.wedge().unwrap());
        assert!(eqs.all_vanish(&coords));
    }
    assert_eq!(f.characteristic(), 3);
}
