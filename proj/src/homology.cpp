#include "jcm/homology.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace jcm {

using boost::multiprecision::cpp_int;

namespace {

cpp_int mod_inverse(cpp_int a, const cpp_int& p) {
    cpp_int t = 0, nt = 1, r = p, nr = ((a % p) + p) % p;
    while (nr != 0) {
        cpp_int q = r / nr;
        cpp_int tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1)
        throw std::invalid_argument("modulus is not prime");
    return t < 0 ? t + p : t;
}

// Dense Smith normal form of a small integer block; returns invariant factors.
std::vector<cpp_int> dense_smith(std::vector<std::vector<cpp_int>> a) {
    std::vector<cpp_int> out;
    const std::size_t m = a.size();
    const std::size_t n = m ? a[0].size() : 0;
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        for (;;) {
            // smallest nonzero entry of the trailing block
            std::size_t pr = m, pc = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (a[i][j] != 0 && (pr == m || abs(a[i][j]) < abs(a[pr][pc]))) {
                        pr = i;
                        pc = j;
                    }
            if (pr == m) {
                std::sort(out.begin(), out.end());
                return out;
            }
            std::swap(a[t], a[pr]);
            for (auto& row : a)
                std::swap(row[t], row[pc]);
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a[i][t] == 0)
                    continue;
                cpp_int q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < n; ++j)
                    a[i][j] -= q * a[t][j];
                if (a[i][t] != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a[t][j] == 0)
                    continue;
                cpp_int q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < m; ++i)
                    a[i][j] -= q * a[i][t];
                if (a[t][j] != 0)
                    clean = false;
            }
            if (!clean)
                continue;
            // the pivot must divide the whole trailing block
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        for (std::size_t k = t; k < n; ++k)
                            a[t][k] += a[i][k];
                        divides = false;
                        break;
                    }
            if (divides)
                break;
        }
        out.push_back(abs(a[t][t]));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

MatrixInvariants smith_invariants(const SparseColumns& columns, std::size_t rows, long long modulus) {
    const cpp_int p = modulus;
    auto normal = [&](cpp_int v) {
        if (modulus == 0)
            return v;
        v %= p;
        return v < 0 ? cpp_int(v + p) : v;
    };
    auto is_unit = [&](const cpp_int& v) { return modulus == 0 ? (v == 1 || v == -1) : v != 0; };
    auto inverse = [&](const cpp_int& v) { return modulus == 0 ? v : mod_inverse(v, p); };

    std::vector<std::map<std::size_t, cpp_int>> row(rows);
    std::vector<std::set<std::size_t>> col_rows(columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (const auto& [r, v] : columns[c]) {
            if (r >= rows)
                throw std::out_of_range("matrix row index out of range");
            cpp_int w = normal(cpp_int(v));
            if (w == 0)
                continue;
            row[r][c] += w;
            if (row[r][c] == 0) {
                row[r].erase(c);
                col_rows[c].erase(r);
            } else {
                col_rows[c].insert(r);
            }
        }

    std::vector<bool> alive(rows, true);
    MatrixInvariants out;
    for (;;) {
        std::size_t pr = rows, pc = 0, best = 0;
        for (std::size_t r = 0; r < rows; ++r) {
            if (!alive[r] || row[r].empty())
                continue;
            if (pr != rows && row[r].size() >= best)
                continue;
            for (const auto& [c, v] : row[r])
                if (is_unit(v)) {
                    pr = r;
                    pc = c;
                    best = row[r].size();
                    break;
                }
        }
        if (pr == rows)
            break;
        const cpp_int inv = inverse(row[pr][pc]);
        std::vector<std::size_t> targets(col_rows[pc].begin(), col_rows[pc].end());
        for (std::size_t r : targets) {
            if (r == pr)
                continue;
            cpp_int factor = normal(row[r][pc] * inv);
            for (const auto& [c, v] : row[pr]) {
                cpp_int w = normal(row[r][c] - factor * v);
                if (w == 0) {
                    row[r].erase(c);
                    col_rows[c].erase(r);
                } else {
                    row[r][c] = w;
                    col_rows[c].insert(r);
                }
            }
        }
        for (const auto& [c, v] : row[pr])
            col_rows[c].erase(pr);
        row[pr].clear();
        alive[pr] = false;
        ++out.rank;
        out.divisors.push_back("1");
    }

    // Whatever is left has no unit entries; finish densely.
    std::vector<std::size_t> rest_rows, rest_cols;
    std::set<std::size_t> cols;
    for (std::size_t r = 0; r < rows; ++r)
        if (alive[r] && !row[r].empty()) {
            rest_rows.push_back(r);
            for (const auto& [c, v] : row[r])
                cols.insert(c);
        }
    if (!rest_rows.empty()) {
        if (modulus != 0)
            throw std::logic_error("nonzero entries left after elimination over a field");
        rest_cols.assign(cols.begin(), cols.end());
        std::map<std::size_t, std::size_t> col_pos;
        for (std::size_t k = 0; k < rest_cols.size(); ++k)
            col_pos[rest_cols[k]] = k;
        std::vector<std::vector<cpp_int>> dense(rest_rows.size(), std::vector<cpp_int>(rest_cols.size()));
        for (std::size_t i = 0; i < rest_rows.size(); ++i)
            for (const auto& [c, v] : row[rest_rows[i]])
                dense[i][col_pos[c]] = v;
        for (const auto& d : dense_smith(std::move(dense))) {
            ++out.rank;
            out.divisors.push_back(d.str());
        }
    }
    return out;
}

std::vector<HomologyGroup> homology(const ChainComplex& complex, int lo, int hi, const Bounds& bounds,
                                   long long modulus) {
    std::map<int, std::vector<Label>> basis;
    for (int k = std::max(lo - 1, 0); k <= hi + 1; ++k)
        basis[k] = complex.basis(k, bounds);
    auto index_of = [&](int k) {
        std::map<Label, std::size_t> idx;
        for (std::size_t i = 0; i < basis[k].size(); ++i)
            idx[basis[k][i]] = i;
        return idx;
    };
    // invariants of d_k : C_k -> C_{k-1}
    std::map<int, MatrixInvariants> inv;
    for (int k = std::max(lo, 1); k <= hi + 1; ++k) {
        auto target = index_of(k - 1);
        SparseColumns cols;
        for (const auto& l : basis[k]) {
            std::vector<std::pair<std::size_t, long long>> col;
            for (const auto& [m, c] : complex.differential(l)) {
                auto it = target.find(m);
                if (it == target.end())
                    throw std::domain_error("boundary of " + l.to_string() + " leaves the enumerated basis at " +
                                            m.to_string());
                col.emplace_back(it->second, c);
            }
            cols.push_back(std::move(col));
        }
        inv[k] = smith_invariants(cols, basis[k - 1].size(), modulus);
    }
    std::vector<HomologyGroup> out;
    for (int k = lo; k <= hi; ++k) {
        HomologyGroup g;
        g.degree = k;
        long long outgoing = k >= 1 ? inv[k].rank : 0;
        g.rank = static_cast<long long>(basis[k].size()) - outgoing - inv[k + 1].rank;
        for (const auto& d : inv[k + 1].divisors)
            if (d != "1")
                g.torsion.push_back(d);
        out.push_back(std::move(g));
    }
    return out;
}

} // namespace jcm
