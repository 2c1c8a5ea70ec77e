#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "rescoh/field.hpp"

namespace rescoh {

/// Coordinates over F_p; entries always reduced into [0, p).
using Vec = std::vector<std::uint32_t>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec vadd(const Prime& p, const Vec& a, const Vec& b);
Vec vsub(const Prime& p, const Vec& a, const Vec& b);
Vec vscale(const Prime& p, std::uint32_t s, const Vec& a);
/// y += s * x
void vaxpy(const Prime& p, std::uint32_t s, const Vec& x, Vec& y);
Vec vneg(const Prime& p, const Vec& a);

class FpMatrix {
public:
    FpMatrix(std::size_t rows, std::size_t cols, Prime p);
    static FpMatrix identity(std::size_t n, Prime p);
    /// Entries are reduced mod p, so negative integers are fine.
    static FpMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, Prime p);
    static FpMatrix from_columns(const std::vector<Vec>& cols, std::size_t rows, Prime p);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Prime& prime() const { return p_; }

    std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::uint32_t v) { data_[r * cols_ + c] = v % p_.value(); }
    void add_to(std::size_t r, std::size_t c, std::uint32_t v) {
        auto& x = data_[r * cols_ + c];
        x = p_.add(x, v % p_.value());
    }
    Vec row(std::size_t r) const;
    Vec column(std::size_t c) const;
    void set_column(std::size_t c, const Vec& v);
    const std::vector<std::uint32_t>& data() const { return data_; }

    Vec apply(const Vec& v) const;
    FpMatrix operator*(const FpMatrix& o) const;
    FpMatrix operator+(const FpMatrix& o) const;
    FpMatrix operator-(const FpMatrix& o) const;
    FpMatrix scaled(std::uint32_t s) const;
    FpMatrix transpose() const;
    FpMatrix pow(std::uint64_t e) const;
    bool is_zero() const;

    friend bool operator==(const FpMatrix& a, const FpMatrix& b) {
        return a.p_ == b.p_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    Prime p_;
    std::vector<std::uint32_t> data_;
};

/// Block matrices; all parts must share the relevant dimension.
FpMatrix vstack(const std::vector<FpMatrix>& parts);
FpMatrix hstack(const std::vector<FpMatrix>& parts);

struct RrefResult {
    FpMatrix matrix;
    std::size_t rank;
    std::vector<std::size_t> pivots;
};

RrefResult rref(const FpMatrix& m);
std::size_t rank(const FpMatrix& m);

/// A subspace of F_p^ambient, basis kept in reduced row-echelon form.
class Subspace {
public:
    Subspace(std::size_t ambient_dim, Prime p);
    static Subspace span(std::size_t ambient_dim, Prime p, const std::vector<Vec>& vectors);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    const Prime& prime() const { return p_; }

    /// v minus its projection along pivot columns; zero iff v lies in the span.
    Vec reduce(const Vec& v) const;
    bool contains(const Vec& v) const { return rescoh::is_zero(reduce(v)); }
    bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_;
    Prime p_;
    std::vector<Vec> basis_;
    std::vector<std::size_t> pivots_;
};

Subspace nullspace(const FpMatrix& m);
Subspace column_space(const FpMatrix& m);

/// dim ker(outgoing) - rank(incoming); throws NotAComplex unless outgoing * incoming = 0.
std::size_t quotient_dim(const FpMatrix& incoming, const FpMatrix& outgoing);

/// Particular solution of m x = b with free variables set to zero.
std::optional<Vec> solve(const FpMatrix& m, const Vec& b);

/// Vectors of `sub` that are independent modulo `image`, reduced modulo `image` and
/// returned in echelon form. Used to pick cohomology representatives.
std::vector<Vec> complement_representatives(const Subspace& sub, const Subspace& image);

}  // namespace rescoh
