#pragma once

#include "epwlab/qmatrix.hpp"

#include <cstdint>

namespace epwlab {

// Deterministic splitmix64 stream. Identical seeds give identical output on
// every platform; split() derives an independent child stream.
class SeededRng {
public:
    explicit SeededRng(uint64_t seed) : state_(seed), seed_(seed), splits_(0) {}

    uint64_t next_u64();

    // Uniform in [lo, hi] (inclusive); modulo reduction, bias irrelevant here.
    long next_int(long lo, long hi);

    // Uniform integer in [-height, height].
    long next_height(long height) { return next_int(-height, height); }

    SeededRng split();

    QMatrix random_matrix(int rows, int cols, long height);
    QMatrix random_symmetric(int n, long height);
    QMatrix random_invertible(int n, long height, int max_tries = 64);

    uint64_t seed() const { return seed_; }

private:
    uint64_t state_;
    uint64_t seed_;
    uint64_t splits_;
};

} // namespace epwlab
