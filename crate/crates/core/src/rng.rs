use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Seeded stream used everywhere randomness is needed.
pub type StreamRng = ChaCha8Rng;

/// Derives an independent child seed for `(label, index)` from `seed`
/// with a SplitMix64 finalizer, so one user seed fans out into
/// reproducible per-component streams.
pub fn derive_seed(seed: u64, label: &str, index: u64) -> u64 {
    let mut h = mix(seed ^ 0x6a09_e667_f3bc_c908);
    for b in label.bytes() {
        h = mix(h ^ u64::from(b));
    }
    mix(h ^ index.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

pub fn stream(seed: u64, label: &str, index: u64) -> StreamRng {
    StreamRng::seed_from_u64(derive_seed(seed, label, index))
}

fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}
