//! Seeded pseudo-random numbers for reproducible runs.
//!
//! Every random choice in this workspace flows through [`XorShift64Star`],
//! a fully specified generator, so that a `(dimension, seed)` pair pins an
//! entire run byte-for-byte, including across reimplementations in other
//! languages. The algorithm:
//!
//! ```text
//! state_0 = splitmix64(seed)          (state forced to a nonzero constant
//!                                      in the single case splitmix64 = 0)
//! each draw:
//!     state ^= state >> 12
//!     state ^= state << 25
//!     state ^= state >> 27
//!     output = state * 0x2545F4914F6CDD1D        (wrapping)
//! uniform pick over k items: index = output mod k
//! ```
//!
//! with `splitmix64` as given by Steele, Lea and Flood:
//!
//! ```text
//! z = seed + 0x9E3779B97F4A7C15                  (wrapping)
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9       (wrapping)
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB       (wrapping)
//! splitmix64 = z ^ (z >> 31)
//! ```

/// One round of splitmix64, used to expand a user seed into the
/// xorshift state.
pub fn splitmix64(seed: u64) -> u64 {
    let mut z = seed.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// xorshift64* generator seeded through [`splitmix64`].
#[derive(Clone, Debug)]
pub struct XorShift64Star {
    state: u64,
}

impl XorShift64Star {
    pub fn new(seed: u64) -> Self {
        let mut state = splitmix64(seed);
        if state == 0 {
            // xorshift state must be nonzero
            state = 0x9E37_79B9_7F4A_7C15;
        }
        Self { state }
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut s = self.state;
        s ^= s >> 12;
        s ^= s << 25;
        s ^= s >> 27;
        self.state = s;
        s.wrapping_mul(0x2545_F491_4F6C_DD1D)
    }

    /// Uniform index into a list of `len` items.
    pub fn pick(&mut self, len: usize) -> usize {
        assert!(len > 0, "cannot pick from an empty list");
        (self.next_u64() % len as u64) as usize
    }

    /// Uniform value in `0..bound`.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        self.next_u64() % bound
    }
}
