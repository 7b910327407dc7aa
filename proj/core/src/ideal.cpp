#include "epwlab/ideal.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace epwlab {

bool Ideal::is_homogeneous() const {
    for (const MultiPoly& g : gens)
        if (!g.is_homogeneous()) return false;
    return true;
}

static void gen_monos(int nvars, int var, int rem, Mono& cur, std::vector<Mono>& out) {
    if (var == nvars - 1) {
        cur[var] = static_cast<unsigned char>(rem);
        out.push_back(cur);
        return;
    }
    for (int e = rem; e >= 0; --e) {
        cur[var] = static_cast<unsigned char>(e);
        gen_monos(nvars, var + 1, rem - e, cur, out);
    }
    cur[var] = 0;
}

std::vector<Mono> monomials_of_degree(int nvars, int d) {
    std::vector<Mono> out;
    if (nvars == 0) return out;
    Mono cur(nvars, 0);
    gen_monos(nvars, 0, d, cur, out);
    return out; // descending grlex: higher leading exponents first
}

namespace {

// Sparse integer row, sorted by column index, content-free.
using ZRow = std::vector<std::pair<int, Int>>;

void strip_content(ZRow& r) {
    if (r.empty()) return;
    Int g(0);
    for (auto& [c, v] : r) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    if (sgn(r.front().second) < 0) g = -g;
    if (g != 1 && g != 0)
        for (auto& [c, v] : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// Incremental echelon dictionary over Z keyed by lead column; fraction-free
// row updates with content stripping. Deterministic in insertion order.
class Echelon {
public:
    bool insert(ZRow row) {
        strip_content(row);
        while (!row.empty()) {
            auto it = pivots_.find(row.front().first);
            if (it == pivots_.end()) {
                pivots_.emplace(row.front().first, std::move(row));
                return true;
            }
            cancel_lead(row, it->second);
        }
        return false;
    }

    int rank() const { return int(pivots_.size()); }

private:
    // r <- (b/g) r - (a/g) p with a = lead(r), b = lead(p); leads cancel.
    void cancel_lead(ZRow& r, const ZRow& p) {
        Int g(0);
        mpz_gcd(g.get_mpz_t(), r.front().second.get_mpz_t(), p.front().second.get_mpz_t());
        Int rs = r.front().second / g;
        Int ps = p.front().second / g;
        buf_.clear();
        buf_.reserve(r.size() + p.size());
        size_t i = 1, j = 1; // leads cancel by construction
        Int t;
        while (i < r.size() && j < p.size()) {
            if (r[i].first == p[j].first) {
                t = ps * r[i].second;
                mpz_submul(t.get_mpz_t(), rs.get_mpz_t(), p[j].second.get_mpz_t());
                if (t != 0) buf_.emplace_back(r[i].first, t);
                ++i, ++j;
            } else if (r[i].first < p[j].first) {
                t = ps * r[i].second;
                buf_.emplace_back(r[i].first, t);
                ++i;
            } else {
                t = -rs * p[j].second;
                buf_.emplace_back(p[j].first, t);
                ++j;
            }
        }
        for (; i < r.size(); ++i) buf_.emplace_back(r[i].first, Int(ps * r[i].second));
        for (; j < p.size(); ++j) buf_.emplace_back(p[j].first, Int(-rs * p[j].second));
        r.swap(buf_);
        strip_content(r);
    }

    ZRow buf_;
    std::map<int, ZRow> pivots_;
};

} // namespace

int hilbert_function(const Ideal& ideal, int d) {
    if (!ideal.is_homogeneous())
        throw std::invalid_argument("hilbert_function: generators must be homogeneous");
    int nvars = int(ideal.vars.size());
    std::vector<Mono> cols = monomials_of_degree(nvars, d);
    std::map<Mono, int, decltype(&grlex_greater)> col_of(&grlex_greater);
    for (int i = 0; i < int(cols.size()); ++i) col_of.emplace(cols[i], i);

    Echelon ech;
    for (const MultiPoly& g : ideal.gens) {
        if (g.is_zero()) continue;
        int dg = g.degree();
        if (dg > d) continue;
        // clear denominators once per generator
        Int den_lcm(1);
        for (const Term& t : g.terms())
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.get_den().get_mpz_t());
        for (const Mono& m : monomials_of_degree(nvars, d - dg)) {
            ZRow row;
            row.reserve(g.terms().size());
            for (const Term& t : g.terms()) {
                Mono prod(t.m.size());
                for (size_t i = 0; i < t.m.size(); ++i)
                    prod[i] = static_cast<unsigned char>(t.m[i] + m[i]);
                Int num = t.c.get_num() * (den_lcm / t.c.get_den());
                row.emplace_back(col_of.at(prod), std::move(num));
            }
            std::sort(row.begin(), row.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            ech.insert(std::move(row));
        }
    }
    return int(cols.size()) - ech.rank();
}

HilbertProfile hilbert_profile(const Ideal& ideal, std::pair<int, int> window) {
    HilbertProfile prof;
    for (int d = window.first; d <= window.second; ++d)
        prof.values.emplace_back(d, hilbert_function(ideal, d));
    // finite-difference table; find the lowest level that is constant
    std::vector<long> level;
    for (auto& [d, v] : prof.values) level.push_back(v);
    for (int m = 0; int(level.size()) >= 2; ++m) {
        bool constant = true;
        for (size_t i = 1; i < level.size(); ++i)
            if (level[i] != level[0]) { constant = false; break; }
        if (constant) {
            prof.fitted_dim = m;
            prof.fitted_degree = int(level[0]);
            return prof;
        }
        std::vector<long> next;
        for (size_t i = 1; i < level.size(); ++i) next.push_back(level[i] - level[i - 1]);
        level = std::move(next);
    }
    return prof;
}

std::pair<int, int> hilbert_fit(const Ideal& ideal, std::pair<int, int> window) {
    HilbertProfile prof = hilbert_profile(ideal, window);
    if (!prof.fitted_dim) throw FitFailed();
    return {*prof.fitted_dim, *prof.fitted_degree};
}

Emptiness is_empty_projective(const Ideal& ideal, int dmax) {
    for (int d = 1; d <= dmax; ++d)
        if (hilbert_function(ideal, d) == 0) return {true, d};
    return {false, 0};
}

PolyMatrix jacobian(const Ideal& ideal) {
    PolyMatrix j(ideal.vars, int(ideal.gens.size()), int(ideal.vars.size()));
    for (int i = 0; i < int(ideal.gens.size()); ++i)
        for (int v = 0; v < int(ideal.vars.size()); ++v) j.at(i, v) = ideal.gens[i].derivative(v);
    return j;
}

std::vector<Rat> quadric_coeffs(const QMatrix& gram) {
    int n = gram.rows();
    std::vector<Rat> v;
    v.reserve(size_t(n) * (n + 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            v.push_back(i == j ? gram.at(i, i) : gram.at(i, j) + gram.at(j, i));
    return v;
}

int quadric_span_rank(const std::vector<QMatrix>& grams) {
    if (grams.empty()) return 0;
    std::vector<std::vector<Rat>> rows;
    rows.reserve(grams.size());
    for (const QMatrix& g : grams) rows.push_back(quadric_coeffs(g));
    return rank(QMatrix::from_rows(rows, int(rows.front().size())));
}

MultiPoly quadric_poly(const QMatrix& gram, const std::vector<std::string>& vars) {
    int n = gram.rows();
    if (int(vars.size()) != n) throw std::invalid_argument("quadric_poly: dimension mismatch");
    std::vector<Term> ts;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Rat c = (i == j) ? gram.at(i, i) : gram.at(i, j) + gram.at(j, i);
            if (is_zero(c)) continue;
            Mono m(n, 0);
            m[i] += 1;
            m[j] += 1;
            ts.push_back({std::move(m), c});
        }
    return MultiPoly::from_terms(vars, std::move(ts));
}

} // namespace epwlab
