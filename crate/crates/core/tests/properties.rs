mod common;

use common::props::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn instances() -> impl Strategy<Value = u64> {
    any::<u64>()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn random_instances_satisfy_every_property(seed in instances()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (q, d) = random_instance(&mut rng);
        for (label, check) in all_checks(q.clone(), &d, &mut rng) {
            prop_assert!(check.is_ok(), "({}) on {:?}, d = {}: {:?}", label, q.matrix(), d, check);
        }
    }
}
