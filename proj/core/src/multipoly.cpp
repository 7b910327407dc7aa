#include "epwlab/multipoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace epwlab {

int mono_degree(const Mono& m) {
    int d = 0;
    for (unsigned char e : m) d += e;
    return d;
}

bool grlex_less(const Mono& a, const Mono& b) {
    int da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da < db;
    // Same degree: lexicographic, first differing exponent decides.
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

static Mono mono_mul(const Mono& a, const Mono& b) {
    Mono m(a.size());
    for (size_t i = 0; i < a.size(); ++i) m[i] = static_cast<unsigned char>(a[i] + b[i]);
    return m;
}

static bool mono_divides(const Mono& d, const Mono& m) {
    for (size_t i = 0; i < d.size(); ++i)
        if (d[i] > m[i]) return false;
    return true;
}

static Mono mono_div(const Mono& m, const Mono& d) {
    Mono q(m.size());
    for (size_t i = 0; i < m.size(); ++i) q[i] = static_cast<unsigned char>(m[i] - d[i]);
    return q;
}

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const Rat& c) {
    MultiPoly p(std::move(vars));
    if (!epwlab::is_zero(c)) p.terms_.push_back({Mono(p.vars_.size(), 0), c});
    return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, int index) {
    MultiPoly p(std::move(vars));
    Mono m(p.vars_.size(), 0);
    m[index] = 1;
    p.terms_.push_back({std::move(m), Rat(1)});
    return p;
}

MultiPoly MultiPoly::from_terms(std::vector<std::string> vars, std::vector<Term> terms) {
    std::map<Mono, Rat, decltype(&grlex_greater)> acc(&grlex_greater);
    for (auto& t : terms) {
        if (t.m.size() != vars.size()) throw std::invalid_argument("from_terms: exponent length");
        acc[t.m] += t.c;
    }
    MultiPoly p(std::move(vars));
    for (auto& [m, c] : acc)
        if (!epwlab::is_zero(c)) p.terms_.push_back({m, c});
    return p;
}

int MultiPoly::degree() const {
    if (terms_.empty()) return -1;
    return mono_degree(terms_.front().m);
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = mono_degree(terms_.front().m);
    for (const Term& t : terms_)
        if (mono_degree(t.m) != d) return false;
    return true;
}

const Term& MultiPoly::leading() const {
    if (terms_.empty()) throw ZeroPolynomial();
    return terms_.front();
}

Rat MultiPoly::coeff(const Mono& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Mono& k) { return grlex_greater(t.m, k); });
    if (it != terms_.end() && it->m == m) return it->c;
    return Rat(0);
}

bool MultiPoly::terms_same(const MultiPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p(vars_);
    p.terms_ = terms_;
    for (Term& t : p.terms_) t.c = -t.c;
    return p;
}

static void check_vars(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars() != b.vars()) throw std::invalid_argument("MultiPoly: variable lists differ");
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_vars(*this, o);
    MultiPoly p(vars_);
    p.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i].m == o.terms_[j].m) {
            Rat c = terms_[i].c + o.terms_[j].c;
            if (!epwlab::is_zero(c)) p.terms_.push_back({terms_[i].m, std::move(c)});
            ++i, ++j;
        } else if (grlex_greater(terms_[i].m, o.terms_[j].m)) {
            p.terms_.push_back(terms_[i++]);
        } else {
            p.terms_.push_back(o.terms_[j++]);
        }
    }
    while (i < terms_.size()) p.terms_.push_back(terms_[i++]);
    while (j < o.terms_.size()) p.terms_.push_back(o.terms_[j++]);
    return p;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_vars(*this, o);
    std::map<Mono, Rat, decltype(&grlex_greater)> acc(&grlex_greater);
    for (const Term& s : terms_)
        for (const Term& t : o.terms_) acc[mono_mul(s.m, t.m)] += s.c * t.c;
    MultiPoly p(vars_);
    for (auto& [m, c] : acc)
        if (!epwlab::is_zero(c)) p.terms_.push_back({m, c});
    return p;
}

MultiPoly MultiPoly::operator*(const Rat& c) const {
    if (epwlab::is_zero(c)) return MultiPoly(vars_);
    MultiPoly p(vars_);
    p.terms_ = terms_;
    for (Term& t : p.terms_) t.c *= c;
    return p;
}

Rat MultiPoly::eval(const std::vector<Rat>& point) const {
    if (point.size() != vars_.size()) throw std::invalid_argument("eval: point dimension");
    Rat acc(0);
    for (const Term& t : terms_) {
        Rat v = t.c;
        for (size_t i = 0; i < point.size(); ++i)
            for (int e = 0; e < t.m[i]; ++e) v *= point[i];
        acc += v;
    }
    return acc;
}

MultiPoly MultiPoly::derivative(int var) const {
    MultiPoly p(vars_);
    for (const Term& t : terms_) {
        if (t.m[var] == 0) continue;
        Term d;
        d.m = t.m;
        d.c = t.c * Rat(int(t.m[var]));
        d.m[var] -= 1;
        p.terms_.push_back(std::move(d));
    }
    std::sort(p.terms_.begin(), p.terms_.end(),
              [](const Term& a, const Term& b) { return grlex_greater(a.m, b.m); });
    return p;
}

MultiPoly MultiPoly::embed(std::vector<std::string> new_vars, const std::vector<int>& map) const {
    MultiPoly p(std::move(new_vars));
    for (const Term& t : terms_) {
        Mono m(p.vars_.size(), 0);
        for (size_t i = 0; i < t.m.size(); ++i) m[map[i]] = t.m[i];
        p.terms_.push_back({std::move(m), t.c});
    }
    std::sort(p.terms_.begin(), p.terms_.end(),
              [](const Term& a, const Term& b) { return grlex_greater(a.m, b.m); });
    return p;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        Rat c = t.c;
        if (first) {
            if (sgn(c) < 0) { os << "-"; c = -c; }
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
            c = abs(c);
        }
        first = false;
        bool has_var = mono_degree(t.m) > 0;
        if (c != 1 || !has_var) {
            os << c.get_str();
            if (has_var) os << "*";
        }
        bool star = false;
        for (size_t i = 0; i < t.m.size(); ++i) {
            if (t.m[i] == 0) continue;
            if (star) os << "*";
            os << vars_[i];
            if (t.m[i] > 1) os << "^" << int(t.m[i]);
            star = true;
        }
    }
    return os.str();
}

MultiPoly exact_divide(const MultiPoly& num, const MultiPoly& den) {
    check_vars(num, den);
    if (den.is_zero()) throw std::invalid_argument("exact_divide: zero divisor");
    MultiPoly r = num;
    std::vector<Term> qt;
    const Term& dl = den.leading();
    while (!r.is_zero()) {
        const Term& rl = r.leading();
        if (!mono_divides(dl.m, rl.m)) throw NotDivisible();
        Term q{mono_div(rl.m, dl.m), rl.c / dl.c};
        MultiPoly qp = MultiPoly::from_terms(num.vars(), {q});
        r = r - qp * den;
        qt.push_back(std::move(q));
    }
    return MultiPoly::from_terms(num.vars(), std::move(qt));
}

MultiPoly normalize(const MultiPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    // lcm of denominators and gcd of numerators give integer content 1.
    Int den_lcm(1), num_gcd(0);
    for (const Term& t : p.terms()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.get_den().get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.c.get_num().get_mpz_t());
    }
    Rat scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (sgn(p.leading().c) < 0) scale = -scale;
    return p * scale;
}

MultiPoly linear_substitute(const MultiPoly& p, std::vector<std::string> new_vars,
                            const std::vector<std::vector<Rat>>& sub) {
    if (sub.size() != size_t(p.nvars())) throw std::invalid_argument("linear_substitute: map size");
    std::vector<MultiPoly> images;
    images.reserve(sub.size());
    for (const auto& row : sub) {
        std::vector<Term> ts;
        for (size_t j = 0; j < row.size(); ++j) {
            if (is_zero(row[j])) continue;
            Mono m(new_vars.size(), 0);
            m[j] = 1;
            ts.push_back({std::move(m), row[j]});
        }
        images.push_back(MultiPoly::from_terms(new_vars, std::move(ts)));
    }
    MultiPoly acc = MultiPoly::zero(new_vars);
    for (const Term& t : p.terms()) {
        MultiPoly prod = MultiPoly::constant(new_vars, t.c);
        for (size_t i = 0; i < t.m.size(); ++i)
            for (int e = 0; e < t.m[i]; ++e) prod = prod * images[i];
        acc = acc + prod;
    }
    return acc;
}

std::vector<std::string> default_vars(const std::string& stem, int n) {
    std::vector<std::string> v;
    v.reserve(n);
    for (int i = 0; i < n; ++i) v.push_back(stem + std::to_string(i));
    return v;
}

} // namespace epwlab
