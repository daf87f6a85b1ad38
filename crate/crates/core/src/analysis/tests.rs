use super::*;
use crate::constructions::{
    a_c2, a_c2_r_family, bicharacter_r_matrix, bicharacters, cyclic_bicharacter, drinfeld_double, group_algebra,
    FiniteGroup,
};
use crate::{Cyclo, Rational};

fn zn_qt(n: usize, k: usize) -> QtPair<Cyclo> {
    let g = FiniteGroup::cyclic(n);
    let r = bicharacter_r_matrix(&g, &cyclic_bicharacter(n, k)).unwrap();
    QtPair::new(group_algebra(&g), r).unwrap()
}

#[test]
fn character_degrees() {
    let z3 = characters(&group_algebra::<Cyclo>(&FiniteGroup::cyclic(3))).unwrap();
    assert_eq!(z3.degrees, [1, 1, 1]);
    let s3 = characters(&group_algebra::<Cyclo>(&FiniteGroup::s3())).unwrap();
    assert_eq!(s3.degrees, [1, 1, 2]);
    assert_eq!(s3.source, CharacterSource::CenterSplitting);
    let d = drinfeld_double(&group_algebra::<Cyclo>(&FiniteGroup::cyclic(3))).unwrap();
    let c = characters(d.hopf()).unwrap();
    assert_eq!(c.degrees, [1; 9]);
}

#[test]
fn user_characters_are_checked() {
    let h = group_algebra::<Rational>(&FiniteGroup::s3());
    let good = characters(&h).unwrap();
    let again = user_characters(&h, good.characters.iter().rev().cloned().collect()).unwrap();
    assert_eq!(again.characters, good.characters);
    let mut bad = good.characters.clone();
    bad.pop();
    assert!(user_characters(&h, bad).is_err());
    let err = characters(&a_c2::<Rational>()).unwrap_err().to_string();
    assert!(err.contains("characters unavailable"), "{err}");
}

#[test]
fn s_matrix_trivial_and_factorizable() {
    let h = group_algebra::<Cyclo>(&FiniteGroup::s3());
    let qt = QtPair::new(h.clone(), h.tensor_one()).unwrap();
    let chars = characters(&h).unwrap();
    let s = s_matrix(&qt, &chars);
    assert_eq!(s.rank, 1);
    assert!(s.symmetric && s.matches_factorizable);
    assert_eq!(s.entries[2][2], Cyclo::from_int(4));

    let d = drinfeld_double(&group_algebra::<Cyclo>(&FiniteGroup::cyclic(3))).unwrap();
    let s = s_matrix(&d, &characters(d.hopf()).unwrap());
    assert!(s.nondegenerate && s.symmetric && s.matches_factorizable);
    assert_eq!(s.rank, 9);
}

#[test]
fn s_matrix_of_z3_bicharacter() {
    let qt = zn_qt(3, 1);
    let chars = characters(qt.hopf()).unwrap();
    let s = s_matrix(&qt, &chars);
    assert!(s.nondegenerate && s.symmetric && s.matches_factorizable);
    // every entry is a cube root of unity
    for row in &s.entries {
        for x in row {
            assert_eq!(x.mul_ref(x).mul_ref(x), Cyclo::from_int(1));
        }
    }
}

#[test]
fn transparency() {
    let h = group_algebra::<Cyclo>(&FiniteGroup::s3());
    let qt = QtPair::new(h.clone(), h.tensor_one()).unwrap();
    let chars = characters(&h).unwrap();
    let t = transparent_characters(&qt, &chars).unwrap();
    assert_eq!(t.transparent, [0, 1, 2]);
    assert!(t.equals_quotient_characters && t.drinfeld_compatible);

    let d = drinfeld_double(&group_algebra::<Cyclo>(&FiniteGroup::cyclic(3))).unwrap();
    let t = transparent_characters(&d, &characters(d.hopf()).unwrap()).unwrap();
    assert_eq!(t.transparent, [0]);
    assert!(t.equals_quotient_characters && t.drinfeld_compatible);

    let g = FiniteGroup::s3();
    let rho = bicharacters(&g, &[0, 1, 2]).unwrap().into_iter().find(|r| !r.is_trivial()).unwrap();
    let qt = QtPair::new(group_algebra::<Cyclo>(&g), bicharacter_r_matrix(&g, &rho).unwrap()).unwrap();
    let chars = characters(qt.hopf()).unwrap();
    let t = transparent_characters(&qt, &chars).unwrap();
    assert!(t.equals_quotient_characters && t.drinfeld_compatible);
    assert_eq!(t.transparent, [0, 1]);
}

#[test]
fn classification_z15() {
    let qt = zn_qt(15, 1);
    let rep = classification_report(&qt).unwrap();
    assert!(rep.passed(), "{rep:#?}");
    assert!(rep.applicable);
    assert!(rep.hypotheses.iter().chain(&rep.items).all(|i| i.status == ItemStatus::Pass), "{rep:#?}");
    assert_eq!(rep.branch, "factorizable");
}

#[test]
fn classification_z7_z3_trivial() {
    let h = group_algebra::<Cyclo>(&FiniteGroup::z7_z3());
    let qt = QtPair::new(h.clone(), h.tensor_one()).unwrap();
    let rep = classification_report(&qt).unwrap();
    assert!(rep.passed(), "{rep:#?}");
    assert_eq!(rep.branch, "triangular, R = 1 (x) 1");
    assert_eq!(rep.item("Tr S^2 != 0").unwrap().status, ItemStatus::Pass);
}

#[test]
fn classification_ac2_not_applicable() {
    let h = a_c2::<Rational>();
    let r =
        a_c2_r_family(&h, Rational::from_int(0), Rational::from_int(1), Rational::from_int(0), Rational::from_int(0));
    let qt = QtPair::new(h, r).unwrap();
    let rep = classification_report(&qt).unwrap();
    assert_eq!(rep.item("dim H odd and square-free").unwrap().status, ItemStatus::Fail);
    assert_eq!(rep.item("Tr S^2 != 0").unwrap().status, ItemStatus::Fail);
    assert_eq!(rep.item("bicharacter is nondegenerate").unwrap().status, ItemStatus::NotApplicable);
    assert!(!rep.applicable);
    assert!(rep.passed());
}
