#ifndef BRAUERLAB_LINALG_HPP
#define BRAUERLAB_LINALG_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "brauerlab/rational.hpp"

namespace brauerlab {

// Sparse vector: (index, value) pairs sorted by index, values nonzero.
using SparseVec = std::vector<std::pair<long, Rational>>;

// Exact sparse matrix over the rationals. Zero entries are never stored;
// dimensions are fixed at construction.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(long rows, long cols) : rows_(rows), cols_(cols) {}

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    long nnz() const { return static_cast<long>(data_.size()); }
    bool is_zero() const { return data_.empty(); }

    const std::map<std::pair<long, long>, Rational>& entries() const { return data_; }

    Rational at(long r, long c) const {
        auto it = data_.find({r, c});
        return it == data_.end() ? Rational(0) : it->second;
    }

    void set(long r, long c, const Rational& v) {
        check_index(r, c);
        if (v == 0)
            data_.erase({r, c});
        else
            data_[{r, c}] = v;
    }

    void add_to(long r, long c, const Rational& v) {
        if (v == 0) return;
        check_index(r, c);
        auto [it, inserted] = data_.try_emplace({r, c}, v);
        if (!inserted) {
            it->second += v;
            if (it->second == 0) data_.erase(it);
        }
    }

    static SparseMatrix identity(long n) {
        SparseMatrix m(n, n);
        for (long i = 0; i < n; ++i) m.data_[{i, i}] = 1;
        return m;
    }

    SparseMatrix operator+(const SparseMatrix& o) const;
    SparseMatrix operator-(const SparseMatrix& o) const;
    SparseMatrix operator*(const SparseMatrix& o) const;
    SparseMatrix scaled(const Rational& a) const;
    SparseMatrix transposed() const;
    bool operator==(const SparseMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    std::vector<Rational> apply(const std::vector<Rational>& x) const;
    SparseVec apply(const SparseVec& x) const;

private:
    void check_index(long r, long c) const;

    long rows_ = 0, cols_ = 0;
    std::map<std::pair<long, long>, Rational> data_;
};

SparseMatrix matrix_from_rows(const std::vector<SparseVec>& rows, long ncols);

// Rank over Q by sparse Gaussian elimination, Markowitz-style pivoting on
// fewest-nonzeros rows. Deterministic for a fixed input ordering.
long rank(const SparseMatrix& M);

// Exact basis of {x : Mx = 0}; size is always cols() - rank().
std::vector<SparseVec> nullspace_basis(const SparseMatrix& M);

// One exact solution of Mx = b (free variables set to 0), or nullopt.
std::optional<SparseVec> solve(const SparseMatrix& M, const SparseVec& b);

// Rank of M reduced mod p; always <= rank over Q. Agreement for two
// independent large primes is this project's rank certificate. Throws
// std::domain_error on an entry whose denominator is divisible by p.
long rank_mod_p(const SparseMatrix& M, std::uint64_t p);

} // namespace brauerlab

#endif
