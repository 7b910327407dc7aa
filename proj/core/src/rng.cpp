#include "epwlab/rng.hpp"

#include <stdexcept>

namespace epwlab {

uint64_t SeededRng::next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

long SeededRng::next_int(long lo, long hi) {
    if (hi < lo) throw std::invalid_argument("next_int: empty range");
    uint64_t span = uint64_t(hi - lo) + 1;
    return lo + long(next_u64() % span);
}

SeededRng SeededRng::split() {
    ++splits_;
    uint64_t child = seed_ ^ (0x6a09e667f3bcc909ULL + splits_ * 0xd1b54a32d192ed03ULL);
    SeededRng r(child);
    r.next_u64();
    return r;
}

QMatrix SeededRng::random_matrix(int rows, int cols, long height) {
    QMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = next_height(height);
    return m;
}

QMatrix SeededRng::random_symmetric(int n, long height) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Rat v(next_height(height));
            m.at(i, j) = v;
            m.at(j, i) = v;
        }
    return m;
}

QMatrix SeededRng::random_invertible(int n, long height, int max_tries) {
    for (int t = 0; t < max_tries; ++t) {
        QMatrix m = random_matrix(n, n, height);
        if (!is_zero(det_exact(m))) return m;
    }
    throw std::runtime_error("random_invertible: exhausted retries");
}

} // namespace epwlab
