#include "epwlab/digest.hpp"

#include <openssl/evp.h>

#include <sstream>
#include <stdexcept>

namespace epwlab {

std::string sha256_hex(const std::string& data) {
    unsigned char out[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!EVP_Digest(data.data(), data.size(), out, &len, EVP_sha256(), nullptr))
        throw std::runtime_error("sha256: digest failed");
    static const char* hex = "0123456789abcdef";
    std::string s;
    s.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        s.push_back(hex[out[i] >> 4]);
        s.push_back(hex[out[i] & 0xf]);
    }
    return s;
}

std::string matrix_digest(const QMatrix& m) {
    std::ostringstream os;
    os << m.rows() << "x" << m.cols() << ":";
    for (const Rat& q : m.entries()) os << q.get_str() << ",";
    return sha256_hex(os.str());
}

} // namespace epwlab
