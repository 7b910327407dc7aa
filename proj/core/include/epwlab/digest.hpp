#pragma once

#include "epwlab/qmatrix.hpp"

#include <string>

namespace epwlab {

std::string sha256_hex(const std::string& data);

// Digest of the exact matrix entries in row-major order.
std::string matrix_digest(const QMatrix& m);

} // namespace epwlab
