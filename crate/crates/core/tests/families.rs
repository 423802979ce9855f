use std::time::Instant;

use eop_core::families::{recognize_families, FamilyId, FamilyInstance, ParamBox};

/// Largest member order the round trip recognizes; recognition walks every
/// family up to this order, so the bound keeps the sweep short.
const MAX_ORDER: usize = 15;

#[test]
fn recognition_inverts_generation() {
    let start = Instant::now();
    let mut checked = 0;
    for &family in FamilyId::ALL {
        for point in ParamBox::default().points(family).unwrap() {
            let instance = FamilyInstance::new(family, &point).unwrap();
            let g = instance.generate().unwrap();
            if g.order() > MAX_ORDER {
                continue;
            }
            let found = recognize_families(&g);
            assert!(found.contains(&instance), "{instance} not recognized, got {found:?}");
            checked += 1;
        }
    }
    assert!(checked > 300, "only {checked} members checked");
    eprintln!("{checked} members recognized in {:?}", start.elapsed());
}
