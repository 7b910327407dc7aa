#include "epwlab/exterior.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace epwlab {

int binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return int(r);
}

const std::vector<std::vector<int>>& basis_subsets(int ambient, int grade) {
    static std::map<std::pair<int, int>, std::vector<std::vector<int>>> cache;
    auto key = std::make_pair(ambient, grade);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<std::vector<int>> subs;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (int(cur.size()) == grade) {
            subs.push_back(cur);
            return;
        }
        for (int i = start; i < ambient; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return cache.emplace(key, std::move(subs)).first->second;
}

int subset_position(int ambient, const std::vector<int>& subset) {
    const auto& subs = basis_subsets(ambient, int(subset.size()));
    auto it = std::lower_bound(subs.begin(), subs.end(), subset);
    if (it == subs.end() || *it != subset) throw std::invalid_argument("subset_position: bad subset");
    return int(it - subs.begin());
}

bool AltK::is_zero() const {
    for (const Rat& c : coords)
        if (!epwlab::is_zero(c)) return false;
    return true;
}

AltK AltK::basis(int ambient, int grade, int position) {
    AltK a(ambient, grade);
    a.coords[position] = 1;
    return a;
}

AltK AltK::vector(int ambient, const std::vector<Rat>& coords) {
    AltK a(ambient, 1);
    if (int(coords.size()) != ambient) throw std::invalid_argument("AltK::vector: length");
    a.coords = coords;
    return a;
}

AltK AltK::e(int ambient, int index) { return basis(ambient, 1, index); }

static void check_compatible(const AltK& a, const AltK& b) {
    if (a.ambient != b.ambient || a.grade != b.grade)
        throw std::invalid_argument("AltK: ambient/grade mismatch");
}

AltK operator+(const AltK& a, const AltK& b) {
    check_compatible(a, b);
    AltK r = a;
    for (size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
    return r;
}

AltK operator-(const AltK& a, const AltK& b) {
    check_compatible(a, b);
    AltK r = a;
    for (size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
    return r;
}

AltK operator*(const AltK& a, const Rat& c) {
    AltK r = a;
    for (Rat& x : r.coords) x *= c;
    return r;
}

// Sign of merging two disjoint sorted index tuples: (-1)^#inversions.
// Returns 0 on a shared index.
static int merge_sign(const std::vector<int>& s, const std::vector<int>& t, std::vector<int>& merged) {
    merged.clear();
    int inv = 0;
    size_t i = 0, j = 0;
    while (i < s.size() && j < t.size()) {
        if (s[i] == t[j]) return 0;
        if (s[i] < t[j]) {
            merged.push_back(s[i++]);
        } else {
            merged.push_back(t[j++]);
            inv += int(s.size() - i);
        }
    }
    while (i < s.size()) merged.push_back(s[i++]);
    while (j < t.size()) merged.push_back(t[j++]);
    return inv % 2 == 0 ? 1 : -1;
}

AltK wedge(const AltK& a, const AltK& b) {
    if (a.ambient != b.ambient) throw std::invalid_argument("wedge: ambient mismatch");
    if (a.grade + b.grade > a.ambient) throw GradeOverflow();
    AltK r(a.ambient, a.grade + b.grade);
    const auto& sa = basis_subsets(a.ambient, a.grade);
    const auto& sb = basis_subsets(b.ambient, b.grade);
    std::vector<int> merged;
    for (size_t i = 0; i < sa.size(); ++i) {
        if (epwlab::is_zero(a.coords[i])) continue;
        for (size_t j = 0; j < sb.size(); ++j) {
            if (epwlab::is_zero(b.coords[j])) continue;
            int sgn = merge_sign(sa[i], sb[j], merged);
            if (sgn == 0) continue;
            int pos = subset_position(a.ambient, merged);
            r.coords[pos] += a.coords[i] * b.coords[j] * sgn;
        }
    }
    return r;
}

AltK wedge(std::initializer_list<AltK> factors) {
    auto it = factors.begin();
    AltK acc = *it++;
    for (; it != factors.end(); ++it) acc = wedge(acc, *it);
    return acc;
}

Rat vol6(const AltK& a) {
    if (a.ambient != 6 || a.grade != 6) throw std::invalid_argument("vol6: need a top form on V");
    return a.coords[0];
}

Rat vol5(const AltK& a) {
    if (a.ambient != 5 || a.grade != 5) throw std::invalid_argument("vol5: need a top form on V0");
    return a.coords[0];
}

Rat symp(const AltK& a, const AltK& b) {
    if (a.ambient != 6 || b.ambient != 6 || a.grade != 3 || b.grade != 3)
        throw std::invalid_argument("symp: need 3-forms on V");
    return vol6(wedge(a, b));
}

AltK contract(const std::vector<Rat>& f, const AltK& a) {
    if (int(f.size()) != a.ambient) throw std::invalid_argument("contract: length mismatch");
    if (a.grade == 0) throw std::invalid_argument("contract: grade 0");
    AltK r(a.ambient, a.grade - 1);
    const auto& subs = basis_subsets(a.ambient, a.grade);
    for (size_t t = 0; t < subs.size(); ++t) {
        if (epwlab::is_zero(a.coords[t])) continue;
        for (size_t p = 0; p < subs[t].size(); ++p) {
            int idx = subs[t][p];
            if (epwlab::is_zero(f[idx])) continue;
            std::vector<int> rest = subs[t];
            rest.erase(rest.begin() + p);
            int pos = subset_position(a.ambient, rest);
            Rat v = f[idx] * a.coords[t];
            r.coords[pos] += (p % 2 == 0) ? v : -v;
        }
    }
    return r;
}

Subspace support(const AltK& a) {
    if (a.is_zero()) throw ZeroVector("support: zero element");
    if (a.grade == 0) return Subspace{QMatrix(0, a.ambient)};
    // contract by all (k-1)-subsets of the dual basis
    std::vector<AltK> layer{a};
    for (int step = 0; step < a.grade - 1; ++step) {
        std::vector<AltK> next;
        for (const AltK& x : layer)
            for (int i = 0; i < a.ambient; ++i) {
                std::vector<Rat> f(a.ambient, Rat(0));
                f[i] = 1;
                next.push_back(contract(f, x));
            }
        layer = std::move(next);
    }
    std::vector<std::vector<Rat>> rows;
    for (const AltK& x : layer) rows.push_back(x.coords);
    return Subspace{row_basis(QMatrix::from_rows(rows, a.ambient))};
}

bool is_decomposable(const AltK& a) {
    if (a.is_zero()) throw ZeroVector("is_decomposable: zero element");
    return support(a).dim() == a.grade;
}

Rat dual_pair_5(const AltK& a, const AltK& w) {
    if (a.ambient != 5 || w.ambient != 5 || a.grade != 2 || w.grade != 3)
        throw std::invalid_argument("dual_pair_5: need a 2-form and a 3-form on V0");
    return vol5(wedge(a, w));
}

QMatrix F_basis(const AltK& v) {
    if (v.ambient != 6 || v.grade != 1) throw std::invalid_argument("F_basis: need a vector of V");
    if (v.is_zero()) throw ZeroVector("F_basis: zero vector");
    // kernel of alpha -> v ∧ alpha, a 15x20 matrix over the grade-3 basis
    QMatrix w(15, 20);
    for (int t = 0; t < 20; ++t) {
        AltK img = wedge(v, AltK::basis(6, 3, t));
        for (int r = 0; r < 15; ++r) w.at(r, t) = img.coords[r];
    }
    return kernel_basis(w);
}

const QMatrix& symplectic_gram() {
    static QMatrix g = [] {
        QMatrix m(20, 20);
        for (int i = 0; i < 20; ++i)
            for (int j = 0; j < 20; ++j)
                m.at(i, j) = symp(AltK::basis(6, 3, i), AltK::basis(6, 3, j));
        return m;
    }();
    return g;
}

AltK altk_from_row(int ambient, int grade, const std::vector<Rat>& row) {
    AltK a(ambient, grade);
    if (row.size() != a.coords.size()) throw std::invalid_argument("altk_from_row: length");
    a.coords = row;
    return a;
}

AltK wedge_rows(const QMatrix& rows) {
    AltK acc = altk_from_row(rows.cols(), 1, rows.row(0));
    for (int i = 1; i < rows.rows(); ++i) acc = wedge(acc, altk_from_row(rows.cols(), 1, rows.row(i)));
    return acc;
}

} // namespace epwlab
