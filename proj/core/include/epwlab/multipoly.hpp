#pragma once

#include "epwlab/rational.hpp"

#include <boost/container/small_vector.hpp>

#include <string>
#include <vector>

namespace epwlab {

// Exponent vector; length = number of variables of the owning polynomial.
using Mono = boost::container::small_vector<unsigned char, 16>;

int mono_degree(const Mono& m);

// Graded-lexicographic order with the declared variable order: higher total
// degree first, ties broken by the leftmost differing exponent.
bool grlex_less(const Mono& a, const Mono& b);
inline bool grlex_greater(const Mono& a, const Mono& b) { return grlex_less(b, a); }

struct NotDivisible : std::runtime_error {
    NotDivisible() : std::runtime_error("exact_divide: remainder nonzero") {}
};
struct ZeroPolynomial : std::runtime_error {
    ZeroPolynomial() : std::runtime_error("normalize: zero polynomial") {}
};

struct Term {
    Mono m;
    Rat c;
};

// Sparse polynomial over Q with a fixed variable list. Terms are kept sorted
// in descending grlex order with no zero coefficients.
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MultiPoly zero(std::vector<std::string> vars) { return MultiPoly(std::move(vars)); }
    static MultiPoly constant(std::vector<std::string> vars, const Rat& c);
    static MultiPoly variable(std::vector<std::string> vars, int index);
    static MultiPoly from_terms(std::vector<std::string> vars, std::vector<Term> terms);

    const std::vector<std::string>& vars() const { return vars_; }
    int nvars() const { return int(vars_.size()); }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const; // -1 for the zero polynomial
    bool is_homogeneous() const;
    const Term& leading() const;

    Rat coeff(const Mono& m) const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rat& c) const;
    bool operator==(const MultiPoly& o) const { return vars_ == o.vars_ && terms_same(o); }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    Rat eval(const std::vector<Rat>& point) const;
    MultiPoly derivative(int var) const;

    // Re-express over a variable superset; `map[i]` = position of vars()[i].
    MultiPoly embed(std::vector<std::string> new_vars, const std::vector<int>& map) const;

    std::string str() const;

private:
    bool terms_same(const MultiPoly& o) const;
    std::vector<std::string> vars_;
    std::vector<Term> terms_;
};

// Quotient with num = q * den exactly; throws NotDivisible otherwise.
MultiPoly exact_divide(const MultiPoly& num, const MultiPoly& den);

// Scale so the integer content is 1 and the leading grlex coefficient is
// positive. Scalar multiples map to identical output.
MultiPoly normalize(const MultiPoly& p);

// Substitute variable i -> linear combination given by sub[i] of new variables.
MultiPoly linear_substitute(const MultiPoly& p, std::vector<std::string> new_vars,
                            const std::vector<std::vector<Rat>>& sub);

std::vector<std::string> default_vars(const std::string& stem, int n);

} // namespace epwlab
