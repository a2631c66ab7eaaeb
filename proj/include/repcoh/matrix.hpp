#pragma once

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

namespace repcoh {

// Exact sparse integer matrix. Entries are arbitrary-precision: SNF
// intermediates can grow past any fixed width even when inputs are +-1.
class IntegerMatrix {
  public:
    IntegerMatrix() = default;
    IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void add(int r, int c, const mpz_class& v) {
        if (v == 0) return;
        auto it = entries_.find({r, c});
        if (it == entries_.end()) {
            entries_.emplace(std::pair{r, c}, v);
        } else {
            it->second += v;
            if (it->second == 0) entries_.erase(it);
        }
    }
    void set(int r, int c, const mpz_class& v) {
        if (v == 0)
            entries_.erase({r, c});
        else
            entries_[{r, c}] = v;
    }
    mpz_class get(int r, int c) const {
        auto it = entries_.find({r, c});
        return it == entries_.end() ? mpz_class(0) : it->second;
    }

    size_t nnz() const { return entries_.size(); }
    const std::map<std::pair<int, int>, mpz_class>& entries() const {
        return entries_;
    }

    bool operator==(const IntegerMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }

    // this * o (used by tests and certificate checks; sizes stay small).
    IntegerMatrix multiply(const IntegerMatrix& o) const;

    std::vector<mpz_class> apply(const std::vector<mpz_class>& v) const;

  private:
    int rows_ = 0, cols_ = 0;
    std::map<std::pair<int, int>, mpz_class> entries_;
};

}  // namespace repcoh
