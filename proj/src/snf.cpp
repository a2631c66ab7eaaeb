#include "repcoh/snf.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace repcoh {

IntegerMatrix IntegerMatrix::multiply(const IntegerMatrix& o) const {
    IntegerMatrix out(rows_, o.cols());
    // group o's entries by row for the join
    std::unordered_map<int, std::vector<std::pair<int, const mpz_class*>>> orows;
    for (const auto& [rc, v] : o.entries())
        orows[rc.first].emplace_back(rc.second, &v);
    for (const auto& [rc, v] : entries_) {
        auto it = orows.find(rc.second);
        if (it == orows.end()) continue;
        for (auto& [c2, v2] : it->second) out.add(rc.first, c2, v * *v2);
    }
    return out;
}

std::vector<mpz_class> IntegerMatrix::apply(const std::vector<mpz_class>& v) const {
    std::vector<mpz_class> out(rows_, 0);
    for (const auto& [rc, val] : entries_) out[rc.first] += val * v[rc.second];
    return out;
}

namespace {

// Working form for sparse elimination: row-major maps plus a column index.
struct SparseWork {
    std::vector<std::unordered_map<int, mpz_class>> row;
    std::vector<std::set<int>> colrows;

    explicit SparseWork(const IntegerMatrix& m)
        : row(m.rows()), colrows(m.cols()) {
        for (const auto& [rc, v] : m.entries()) {
            row[rc.first][rc.second] = v;
            colrows[rc.second].insert(rc.first);
        }
    }

    void set(int r, int c, mpz_class v) {
        if (v == 0) {
            row[r].erase(c);
            colrows[c].erase(r);
        } else {
            row[r][c] = std::move(v);
            colrows[c].insert(r);
        }
    }

    // row[dst] -= q * row[src]
    void row_axpy(int dst, int src, const mpz_class& q) {
        for (const auto& [j, v] : row[src]) {
            auto it = row[dst].find(j);
            mpz_class nv = (it == row[dst].end() ? mpz_class(0) : it->second) - q * v;
            set(dst, j, std::move(nv));
        }
    }
};

void divisibility_fixup(std::vector<mpz_class>& d) {
    // diag(a, b) ~ diag(gcd, lcm); iterate to a divisibility chain.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < d.size(); ++i)
            for (size_t j = i + 1; j < d.size(); ++j) {
                if (d[j] % d[i] == 0) continue;
                mpz_class g = gcd(d[i], d[j]);
                d[j] = d[i] / g * d[j];
                d[i] = g;
                changed = true;
            }
    }
    std::sort(d.begin(), d.end());
}

}  // namespace

std::vector<mpz_class> smith_normal_form(const IntegerMatrix& m) {
    SparseWork w(m);
    std::vector<char> row_done(m.rows(), 0), col_done(m.cols(), 0);
    std::vector<mpz_class> diag;

    while (true) {
        // Pivot: smallest magnitude, Markowitz-count tie-break.
        int pr = -1, pc = -1;
        mpz_class pabs;
        long pmark = 0;
        for (int r = 0; r < int(w.row.size()); ++r) {
            if (row_done[r]) continue;
            for (const auto& [c, v] : w.row[r]) {
                mpz_class a = abs(v);
                long mark = long(w.row[r].size() - 1) * long(w.colrows[c].size() - 1);
                if (pr < 0 || a < pabs || (a == pabs && mark < pmark)) {
                    pr = r;
                    pc = c;
                    pabs = a;
                    pmark = mark;
                    if (pabs == 1 && pmark == 0) goto have_pivot;
                }
            }
        }
        if (pr < 0) break;
    have_pivot:
        mpz_class p = w.row[pr][pc];

        // Euclidean phase: shrink the pivot until it divides its column and
        // row; every swap strictly decreases |p|, so this terminates.
        while (true) {
            bool moved = false;
            // column entries
            while (w.colrows[pc].size() > 1) {
                int r2 = -1;
                for (int r : w.colrows[pc])
                    if (r != pr) {
                        r2 = r;
                        break;
                    }
                const mpz_class& a = w.row[r2][pc];
                mpz_class q = a / p;  // truncated division
                w.row_axpy(r2, pr, q);
                if (w.row[r2].count(pc)) {
                    // remainder became the better pivot
                    pr = r2;
                    p = w.row[pr][pc];
                    moved = true;
                }
            }
            // row entries: column c of the pivot is now clear except the
            // pivot itself, so a column operation touches only row pr.
            int j2 = -1;
            mpz_class rem;
            for (auto it = w.row[pr].begin(); it != w.row[pr].end();) {
                int j = it->first;
                if (j == pc) {
                    ++it;
                    continue;
                }
                mpz_class q = it->second / p;
                mpz_class r = it->second - q * p;
                ++it;
                if (r == 0) {
                    w.set(pr, j, 0);
                } else {
                    w.set(pr, j, r);
                    j2 = j;
                    rem = r;
                    break;
                }
            }
            if (j2 >= 0) {
                pc = j2;
                p = rem;
                moved = true;
            }
            if (!moved) break;
        }

        diag.push_back(abs(p));
        // detach pivot row and column
        for (int r : std::vector<int>(w.colrows[pc].begin(), w.colrows[pc].end()))
            w.set(r, pc, 0);
        {
            std::vector<int> cols_left;
            for (const auto& e : w.row[pr]) cols_left.push_back(e.first);
            for (int j : cols_left) w.set(pr, j, 0);
        }
        row_done[pr] = 1;
        col_done[pc] = 1;
    }

    divisibility_fixup(diag);
    return diag;
}

namespace {

// Dense SNF with tracked transforms. Small matrices only.
struct DenseWork {
    int rows, cols;
    std::vector<std::vector<mpz_class>> a, u, v;

    explicit DenseWork(const IntegerMatrix& m) : rows(m.rows()), cols(m.cols()) {
        a.assign(rows, std::vector<mpz_class>(cols, 0));
        for (const auto& [rc, val] : m.entries()) a[rc.first][rc.second] = val;
        u.assign(rows, std::vector<mpz_class>(rows, 0));
        v.assign(cols, std::vector<mpz_class>(cols, 0));
        for (int i = 0; i < rows; ++i) u[i][i] = 1;
        for (int i = 0; i < cols; ++i) v[i][i] = 1;
    }

    void row_swap(int i, int j) {
        std::swap(a[i], a[j]);
        std::swap(u[i], u[j]);
    }
    void col_swap(int i, int j) {
        for (auto& r : a) std::swap(r[i], r[j]);
        for (auto& r : v) std::swap(r[i], r[j]);
    }
    void row_axpy(int dst, int src, const mpz_class& q) {
        for (int c = 0; c < cols; ++c) a[dst][c] -= q * a[src][c];
        for (int c = 0; c < rows; ++c) u[dst][c] -= q * u[src][c];
    }
    void col_axpy(int dst, int src, const mpz_class& q) {
        for (int r = 0; r < rows; ++r) a[r][dst] -= q * a[r][src];
        for (int r = 0; r < cols; ++r) v[r][dst] -= q * v[r][src];
    }
    void row_negate(int i) {
        for (auto& x : a[i]) x = -x;
        for (auto& x : u[i]) x = -x;
    }
};

}  // namespace

SnfCertificate smith_normal_form_certified(const IntegerMatrix& m) {
    DenseWork w(m);
    const int n = std::min(w.rows, w.cols);

    for (int k = 0; k < n; ++k) {
    restart:
        // smallest nonzero entry in the trailing submatrix
        int pr = -1, pc = -1;
        mpz_class best;
        for (int r = k; r < w.rows; ++r)
            for (int c = k; c < w.cols; ++c)
                if (w.a[r][c] != 0) {
                    mpz_class ab = abs(w.a[r][c]);
                    if (pr < 0 || ab < best) {
                        pr = r;
                        pc = c;
                        best = ab;
                    }
                }
        if (pr < 0) break;
        w.row_swap(k, pr);
        w.col_swap(k, pc);

        for (int r = k + 1; r < w.rows; ++r)
            if (w.a[r][k] != 0) {
                mpz_class q = w.a[r][k] / w.a[k][k];
                w.row_axpy(r, k, q);
                if (w.a[r][k] != 0) goto restart;  // remainder is smaller
            }
        for (int c = k + 1; c < w.cols; ++c)
            if (w.a[k][c] != 0) {
                mpz_class q = w.a[k][c] / w.a[k][k];
                w.col_axpy(c, k, q);
                if (w.a[k][c] != 0) goto restart;
            }
        // enforce divisibility into the trailing block
        for (int r = k + 1; r < w.rows; ++r)
            for (int c = k + 1; c < w.cols; ++c)
                if (w.a[r][c] % w.a[k][k] != 0) {
                    w.row_axpy(k, r, mpz_class(-1));
                    goto restart;
                }
        if (w.a[k][k] < 0) w.row_negate(k);
    }

    SnfCertificate cert;
    cert.U = IntegerMatrix(w.rows, w.rows);
    cert.V = IntegerMatrix(w.cols, w.cols);
    for (int r = 0; r < w.rows; ++r)
        for (int c = 0; c < w.rows; ++c) cert.U.set(r, c, w.u[r][c]);
    for (int r = 0; r < w.cols; ++r)
        for (int c = 0; c < w.cols; ++c) cert.V.set(r, c, w.v[r][c]);
    for (int k = 0; k < n; ++k)
        if (w.a[k][k] != 0) cert.factors.push_back(w.a[k][k]);
    return cert;
}

std::vector<std::vector<mpz_class>> integer_kernel_basis(const IntegerMatrix& m) {
    if (m.cols() == 0) return {};
    if (m.rows() == 0) {
        // everything is in the kernel
        std::vector<std::vector<mpz_class>> basis;
        for (int c = 0; c < m.cols(); ++c) {
            std::vector<mpz_class> e(m.cols(), 0);
            e[c] = 1;
            basis.push_back(std::move(e));
        }
        return basis;
    }
    SnfCertificate cert = smith_normal_form_certified(m);
    int rank = int(cert.factors.size());
    // columns of V past the rank span the saturated kernel lattice
    std::vector<std::vector<mpz_class>> basis;
    for (int c = rank; c < m.cols(); ++c) {
        std::vector<mpz_class> vcol(m.cols(), 0);
        for (int r = 0; r < m.cols(); ++r) vcol[r] = cert.V.get(r, c);
        basis.push_back(std::move(vcol));
    }
    return basis;
}

namespace {

// Column echelon over Q on a working copy; returns pivot count, and can
// optionally reduce a target vector through the same eliminations.
int rational_eliminate(std::vector<std::vector<mpq_class>>& cols, int dim,
                       std::vector<mpq_class>* target) {
    int rank = 0;
    std::vector<int> pivot_row;
    for (size_t ci = 0; ci < cols.size(); ++ci) {
        std::vector<mpq_class>& col = cols[ci];
        for (size_t k = 0; k < pivot_row.size(); ++k) {
            const mpq_class& lead = col[pivot_row[k]];
            if (lead == 0) continue;
            mpq_class f = lead / cols[k][pivot_row[k]];
            for (int i = 0; i < dim; ++i) col[i] -= f * cols[k][i];
        }
        int pr = -1;
        for (int i = 0; i < dim; ++i)
            if (col[i] != 0) {
                pr = i;
                break;
            }
        if (pr >= 0) {
            std::swap(cols[ci], cols[rank]);
            pivot_row.push_back(pr);
            ++rank;
        }
    }
    cols.resize(rank);
    if (target) {
        for (int k = 0; k < rank; ++k) {
            const mpq_class& lead = (*target)[pivot_row[k]];
            if (lead == 0) continue;
            mpq_class f = lead / cols[k][pivot_row[k]];
            for (int i = 0; i < dim; ++i) (*target)[i] -= f * cols[k][i];
        }
    }
    return rank;
}

std::vector<std::vector<mpq_class>> to_rational(
    const std::vector<std::vector<mpz_class>>& vectors) {
    std::vector<std::vector<mpq_class>> cols;
    for (const auto& v : vectors) {
        std::vector<mpq_class> c(v.size());
        for (size_t i = 0; i < v.size(); ++i) c[i] = v[i];
        cols.push_back(std::move(c));
    }
    return cols;
}

}  // namespace

int rational_rank(const std::vector<std::vector<mpz_class>>& vectors, int dim) {
    auto cols = to_rational(vectors);
    return rational_eliminate(cols, dim, nullptr);
}

bool in_rational_span(const std::vector<std::vector<mpz_class>>& vectors,
                      const std::vector<mpz_class>& target) {
    auto cols = to_rational(vectors);
    std::vector<mpq_class> t(target.size());
    for (size_t i = 0; i < target.size(); ++i) t[i] = target[i];
    rational_eliminate(cols, int(target.size()), &t);
    for (const auto& x : t)
        if (x != 0) return false;
    return true;
}

}  // namespace repcoh
