// Sparse exact linear algebra: Gauss-Jordan elimination over Q or F_p with
// Markowitz-style pivoting (fewest-nonzeros row, then fewest-nonzeros column
// inside that row). The same engine serves rank, nullspace, solve, and the
// mod-p rank shortcut; only the field changes.

#include "brauerlab/linalg.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "brauerlab/modp.hpp"

namespace brauerlab {

void SparseMatrix::check_index(long r, long c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("SparseMatrix index out of range");
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    SparseMatrix out = *this;
    for (const auto& [rc, v] : o.data_) out.add_to(rc.first, rc.second, v);
    return out;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    SparseMatrix out = *this;
    for (const auto& [rc, v] : o.data_) out.add_to(rc.first, rc.second, -v);
    return out;
}

SparseMatrix SparseMatrix::scaled(const Rational& a) const {
    SparseMatrix out(rows_, cols_);
    if (a == 0) return out;
    for (const auto& [rc, v] : data_) out.data_[rc] = v * a;
    return out;
}

SparseMatrix SparseMatrix::transposed() const {
    SparseMatrix out(cols_, rows_);
    for (const auto& [rc, v] : data_) out.data_[{rc.second, rc.first}] = v;
    return out;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch in product");
    // Row-major adjacency of o for the inner loop.
    std::vector<std::vector<std::pair<long, const Rational*>>> orows(o.rows_);
    for (const auto& [rc, v] : o.data_) orows[rc.first].emplace_back(rc.second, &v);
    SparseMatrix out(rows_, o.cols_);
    for (const auto& [rc, v] : data_) {
        for (const auto& [c2, v2] : orows[rc.second]) out.add_to(rc.first, c2, v * (*v2));
    }
    return out;
}

std::vector<Rational> SparseMatrix::apply(const std::vector<Rational>& x) const {
    if (static_cast<long>(x.size()) != cols_) throw std::invalid_argument("vector length mismatch");
    std::vector<Rational> y(rows_, Rational(0));
    for (const auto& [rc, v] : data_) y[rc.first] += v * x[rc.second];
    return y;
}

SparseVec SparseMatrix::apply(const SparseVec& x) const {
    std::map<long, Rational> acc;
    // Column-major adjacency restricted to x's support.
    std::map<long, Rational> xv(x.begin(), x.end());
    for (const auto& [rc, v] : data_) {
        auto it = xv.find(rc.second);
        if (it != xv.end()) acc[rc.first] += v * it->second;
    }
    SparseVec y;
    for (auto& [i, v] : acc)
        if (v != 0) y.emplace_back(i, std::move(v));
    return y;
}

SparseMatrix matrix_from_rows(const std::vector<SparseVec>& rows, long ncols) {
    SparseMatrix m(static_cast<long>(rows.size()), ncols);
    for (long r = 0; r < static_cast<long>(rows.size()); ++r)
        for (const auto& [c, v] : rows[r]) m.set(r, c, v);
    return m;
}

namespace {

struct RationalField {
    using Value = Rational;
    static bool is_zero(const Value& v) { return v == 0; }
    static Value neg(const Value& v) { return -v; }
    static Value mul(const Value& a, const Value& b) { return a * b; }
    static Value div(const Value& a, const Value& b) { return a / b; }
    static void sub_mul(Value& a, const Value& b, const Value& c) { a -= b * c; }
    static Value one() { return Rational(1); }
};

struct PrimeField {
    std::uint64_t p;
    using Value = std::uint64_t;
    bool is_zero(Value v) const { return v == 0; }
    Value neg(Value v) const { return v == 0 ? 0 : p - v; }
    Value mul(Value a, Value b) const { return mul_mod(a, b, p); }
    Value div(Value a, Value b) const { return mul_mod(a, inv_mod(b, p), p); }
    void sub_mul(Value& a, Value b, Value c) const { a = (a + p - mul_mod(b, c, p)) % p; }
    Value one() const { return 1; }
};

// One elimination state: rows are sorted (col, value) lists. `forbidden_col`
// (if >= 0) is an augmented right-hand-side column that must never be chosen
// as a pivot.
template <class Field>
class Elimination {
public:
    using Value = typename Field::Value;
    using Row = std::vector<std::pair<long, Value>>;

    Elimination(const Field& f, long ncols, long forbidden_col = -1)
        : f_(f), ncols_(ncols), forbidden_col_(forbidden_col), col_count_(ncols, 0) {}

    void add_row(Row row) {
        row.erase(std::remove_if(row.begin(), row.end(),
                                 [&](const auto& e) { return f_.is_zero(e.second); }),
                  row.end());
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [c, v] : row) ++col_count_[c];
        rows_.push_back(std::move(row));
        active_.push_back(true);
    }

    // Returns false if a nonzero row is supported on the forbidden column
    // only (inconsistent augmented system).
    bool run() {
        for (;;) {
            long r = pick_pivot_row();
            if (r == -2) return false;
            if (r == -1) return true;
            long c = pick_pivot_col(rows_[r]);
            eliminate(r, c);
        }
    }

    void back_substitute() {
        // Normalize pivots, then clear each pivot column from earlier pivot
        // rows, newest pivot first; afterwards pivot rows touch only free
        // columns (and the forbidden column when present).
        for (auto& [r, c] : pivots_) {
            Value pv = value_at(rows_[r], c);
            if (!(pv == f_.one())) scale_row(rows_[r], f_.div(f_.one(), pv));
        }
        for (long k = static_cast<long>(pivots_.size()) - 1; k >= 0; --k) {
            auto [rk, ck] = pivots_[k];
            for (long j = 0; j < k; ++j) {
                long rj = pivots_[j].first;
                Value a = value_at(rows_[rj], ck);
                if (!f_.is_zero(a)) axpy(rows_[rj], rows_[rk], a);
            }
        }
    }

    long rank() const { return static_cast<long>(pivots_.size()); }
    const std::vector<std::pair<long, long>>& pivots() const { return pivots_; }
    const Row& row(long r) const { return rows_[r]; }

private:
    static Value value_at(const Row& row, long c) {
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const auto& e, long col) { return e.first < col; });
        if (it != row.end() && it->first == c) return it->second;
        return Value{};
    }

    void scale_row(Row& row, const Value& a) {
        for (auto& [c, v] : row) v = f_.mul(v, a);
    }

    // row -= a * pivot_row; maintains column counts for rows still active.
    void axpy(Row& row, const Row& pivot_row, const Value& a, bool count = false) {
        Row out;
        out.reserve(row.size() + pivot_row.size());
        auto it = row.begin();
        auto jt = pivot_row.begin();
        while (it != row.end() || jt != pivot_row.end()) {
            if (jt == pivot_row.end() || (it != row.end() && it->first < jt->first)) {
                out.push_back(*it++);
            } else if (it == row.end() || jt->first < it->first) {
                Value v = f_.neg(f_.mul(a, jt->second));
                if (!f_.is_zero(v)) {
                    out.emplace_back(jt->first, v);
                    if (count) ++col_count_[jt->first];
                }
                ++jt;
            } else {
                Value v = it->second;
                f_.sub_mul(v, a, jt->second);
                if (f_.is_zero(v)) {
                    if (count) --col_count_[it->first];
                } else {
                    out.emplace_back(it->first, v);
                }
                ++it;
                ++jt;
            }
        }
        row = std::move(out);
    }

    // -1: done; -2: inconsistent (only forbidden-column support remains).
    long pick_pivot_row() {
        long best = -1;
        std::size_t best_nnz = std::numeric_limits<std::size_t>::max();
        bool stranded = false;
        for (long r = 0; r < static_cast<long>(rows_.size()); ++r) {
            if (!active_[r] || rows_[r].empty()) continue;
            bool has_pivotable = false;
            for (const auto& [c, v] : rows_[r])
                if (c != forbidden_col_) { has_pivotable = true; break; }
            if (!has_pivotable) { stranded = true; continue; }
            if (rows_[r].size() < best_nnz) { best_nnz = rows_[r].size(); best = r; }
        }
        if (best == -1) return stranded ? -2 : -1;
        return best;
    }

    long pick_pivot_col(const Row& row) const {
        long best = -1;
        long best_count = std::numeric_limits<long>::max();
        for (const auto& [c, v] : row) {
            if (c == forbidden_col_) continue;
            if (col_count_[c] < best_count) { best_count = col_count_[c]; best = c; }
        }
        return best;
    }

    void eliminate(long r, long c) {
        pivots_.emplace_back(r, c);
        active_[r] = false;
        for (const auto& [cc, v] : rows_[r]) --col_count_[cc];
        Value pv = value_at(rows_[r], c);
        for (long r2 = 0; r2 < static_cast<long>(rows_.size()); ++r2) {
            if (!active_[r2] || rows_[r2].empty()) continue;
            Value a = value_at(rows_[r2], c);
            if (f_.is_zero(a)) continue;
            axpy(rows_[r2], rows_[r], f_.div(a, pv), /*count=*/true);
        }
    }

    Field f_;
    long ncols_;
    long forbidden_col_;
    std::vector<long> col_count_;
    std::vector<Row> rows_;
    std::vector<bool> active_;
    std::vector<std::pair<long, long>> pivots_;
};

Elimination<RationalField> eliminate_rational(const SparseMatrix& M, long extra_cols = 0) {
    Elimination<RationalField> e(RationalField{}, M.cols() + extra_cols,
                                 extra_cols ? M.cols() : -1);
    std::vector<Elimination<RationalField>::Row> rows(M.rows());
    for (const auto& [rc, v] : M.entries()) rows[rc.first].emplace_back(rc.second, v);
    for (auto& r : rows) e.add_row(std::move(r));
    return e;
}

} // namespace

long rank(const SparseMatrix& M) {
    auto e = eliminate_rational(M);
    e.run();
    return e.rank();
}

std::vector<SparseVec> nullspace_basis(const SparseMatrix& M) {
    auto e = eliminate_rational(M);
    e.run();
    e.back_substitute();

    std::vector<bool> is_pivot_col(M.cols(), false);
    for (const auto& [r, c] : e.pivots()) is_pivot_col[c] = true;

    std::vector<SparseVec> basis;
    for (long f = 0; f < M.cols(); ++f) {
        if (is_pivot_col[f]) continue;
        SparseVec x;
        x.emplace_back(f, Rational(1));
        for (const auto& [r, c] : e.pivots()) {
            for (const auto& [cc, v] : e.row(r)) {
                if (cc == f) {
                    x.emplace_back(c, -v);
                    break;
                }
            }
        }
        std::sort(x.begin(), x.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<SparseVec> solve(const SparseMatrix& M, const SparseVec& b) {
    Elimination<RationalField> e(RationalField{}, M.cols() + 1, M.cols());
    std::vector<Elimination<RationalField>::Row> rows(M.rows());
    for (const auto& [rc, v] : M.entries()) rows[rc.first].emplace_back(rc.second, v);
    for (const auto& [r, v] : b) {
        if (r < 0 || r >= M.rows()) throw std::out_of_range("rhs index out of range");
        rows[r].emplace_back(M.cols(), v);
    }
    for (auto& r : rows) e.add_row(std::move(r));
    if (!e.run()) return std::nullopt;
    e.back_substitute();

    SparseVec x;
    for (const auto& [r, c] : e.pivots()) {
        for (const auto& [cc, v] : e.row(r)) {
            if (cc == M.cols() && v != 0) x.emplace_back(c, v);
        }
    }
    std::sort(x.begin(), x.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return x;
}

long rank_mod_p(const SparseMatrix& M, std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("rank_mod_p: modulus is not prime");
    Elimination<PrimeField> e(PrimeField{p}, M.cols());
    std::vector<Elimination<PrimeField>::Row> rows(M.rows());
    for (const auto& [rc, v] : M.entries()) {
        std::uint64_t img = rational_mod_p(v, p);
        if (img != 0) rows[rc.first].emplace_back(rc.second, img);
    }
    for (auto& r : rows) e.add_row(std::move(r));
    e.run();
    return e.rank();
}

} // namespace brauerlab
