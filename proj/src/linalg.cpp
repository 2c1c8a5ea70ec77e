#include "rescoh/linalg.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "rescoh/errors.hpp"

namespace rescoh {

Vec zero_vec(std::size_t n) { return Vec(n, 0); }

Vec unit_vec(std::size_t n, std::size_t i) {
    Vec v(n, 0);
    v.at(i) = 1;
    return v;
}

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
}

static void check_len(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw DimensionMismatch("vector lengths " + std::to_string(a.size()) + " and " +
                                std::to_string(b.size()));
}

Vec vadd(const Prime& p, const Vec& a, const Vec& b) {
    check_len(a, b);
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = p.add(a[i], b[i]);
    return r;
}

Vec vsub(const Prime& p, const Vec& a, const Vec& b) {
    check_len(a, b);
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = p.sub(a[i], b[i]);
    return r;
}

Vec vscale(const Prime& p, std::uint32_t s, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = p.mul(s, a[i]);
    return r;
}

void vaxpy(const Prime& p, std::uint32_t s, const Vec& x, Vec& y) {
    check_len(x, y);
    if (s == 0) return;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i]) y[i] = p.add(y[i], p.mul(s, x[i]));
}

Vec vneg(const Prime& p, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = p.neg(a[i]);
    return r;
}

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, Prime p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

FpMatrix FpMatrix::identity(std::size_t n, Prime p) {
    FpMatrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

FpMatrix FpMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows, Prime p) {
    std::size_t c = rows.empty() ? 0 : rows[0].size();
    FpMatrix m(rows.size(), c, p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw DimensionMismatch("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m.data_[i * c + j] = p.reduce(rows[i][j]);
    }
    return m;
}

FpMatrix FpMatrix::from_columns(const std::vector<Vec>& cols, std::size_t rows, Prime p) {
    FpMatrix m(rows, cols.size(), p);
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
    return m;
}

Vec FpMatrix::row(std::size_t r) const {
    return Vec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

Vec FpMatrix::column(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, c);
    return v;
}

void FpMatrix::set_column(std::size_t c, const Vec& v) {
    if (v.size() != rows_) throw DimensionMismatch("column length");
    for (std::size_t i = 0; i < rows_; ++i) data_[i * cols_ + c] = v[i];
}

Vec FpMatrix::apply(const Vec& v) const {
    if (v.size() != cols_)
        throw DimensionMismatch("matrix has " + std::to_string(cols_) + " columns, vector length " +
                                std::to_string(v.size()));
    Vec r(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::uint64_t acc = 0;
        const std::uint32_t* row = &data_[i * cols_];
        for (std::size_t j = 0; j < cols_; ++j) {
            acc += static_cast<std::uint64_t>(row[j]) * v[j];
            if (acc >> 62) acc %= p_.value();
        }
        r[i] = static_cast<std::uint32_t>(acc % p_.value());
    }
    return r;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shapes");
    if (!(p_ == o.p_)) throw DimensionMismatch("matrices over different primes");
    FpMatrix r(rows_, o.cols_, p_);
    const std::uint32_t p = p_.value();
    // Residues are < 2^16, so each product is < 2^32 and a uint64 row accumulator
    // absorbs 2^32 of them before it needs reducing.
    std::vector<std::uint64_t> acc(o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        std::size_t pending = 0;
        for (std::size_t k = 0; k < cols_; ++k) {
            std::uint64_t a = data_[i * cols_ + k];
            if (!a) continue;
            const std::uint32_t* brow = &o.data_[k * o.cols_];
            for (std::size_t j = 0; j < o.cols_; ++j) acc[j] += a * brow[j];
            if (++pending == (1u << 30)) {
                for (auto& x : acc) x %= p;
                pending = 0;
            }
        }
        for (std::size_t j = 0; j < o.cols_; ++j)
            r.data_[i * o.cols_ + j] = static_cast<std::uint32_t>(acc[j] % p);
    }
    return r;
}

FpMatrix FpMatrix::operator+(const FpMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shapes");
    FpMatrix r(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = p_.add(data_[i], o.data_[i]);
    return r;
}

FpMatrix FpMatrix::operator-(const FpMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shapes");
    FpMatrix r(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = p_.sub(data_[i], o.data_[i]);
    return r;
}

FpMatrix FpMatrix::scaled(std::uint32_t s) const {
    FpMatrix r(*this);
    for (auto& x : r.data_) x = p_.mul(x, s % p_.value());
    return r;
}

FpMatrix FpMatrix::transpose() const {
    FpMatrix t(cols_, rows_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = data_[i * cols_ + j];
    return t;
}

FpMatrix FpMatrix::pow(std::uint64_t e) const {
    if (rows_ != cols_) throw DimensionMismatch("power of a non-square matrix");
    FpMatrix result = identity(rows_, p_);
    FpMatrix base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

bool FpMatrix::is_zero() const { return rescoh::is_zero(data_); }

FpMatrix vstack(const std::vector<FpMatrix>& parts) {
    if (parts.empty()) throw EmptySequence("vstack of nothing");
    std::size_t cols = parts[0].cols(), rows = 0;
    for (const auto& m : parts) {
        if (m.cols() != cols) throw DimensionMismatch("vstack column counts differ");
        rows += m.rows();
    }
    FpMatrix r(rows, cols, parts[0].prime());
    std::size_t off = 0;
    for (const auto& m : parts) {
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < cols; ++j) r.set(off + i, j, m.at(i, j));
        off += m.rows();
    }
    return r;
}

FpMatrix hstack(const std::vector<FpMatrix>& parts) {
    if (parts.empty()) throw EmptySequence("hstack of nothing");
    std::size_t rows = parts[0].rows(), cols = 0;
    for (const auto& m : parts) {
        if (m.rows() != rows) throw DimensionMismatch("hstack row counts differ");
        cols += m.cols();
    }
    FpMatrix r(rows, cols, parts[0].prime());
    std::size_t off = 0;
    for (const auto& m : parts) {
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) r.set(i, off + j, m.at(i, j));
        off += m.cols();
    }
    return r;
}

namespace {

// Gaussian elimination with delayed reduction: row updates accumulate unreduced
// in T, and an entry is reduced only when it is inspected as a pivot candidate
// or when its row becomes a pivot row. `full` also clears entries above pivots.
template <typename T>
RrefResult eliminate(const FpMatrix& m, bool full) {
    const std::size_t R = m.rows(), C = m.cols();
    const std::uint32_t p = m.prime().value();
    std::vector<T> a(m.data().begin(), m.data().end());
    std::vector<std::size_t> pivots;
    std::size_t cur = 0;
    for (std::size_t col = 0; col < C && cur < R; ++col) {
        std::size_t piv = R;
        for (std::size_t r = cur; r < R; ++r) {
            T& x = a[r * C + col];
            x %= p;
            if (x && piv == R) piv = r;
        }
        if (piv == R) continue;
        if (piv != cur)
            std::swap_ranges(a.begin() + piv * C, a.begin() + (piv + 1) * C, a.begin() + cur * C);
        T* prow = &a[cur * C];
        for (std::size_t j = col; j < C; ++j) prow[j] %= p;
        const std::uint32_t inv = m.prime().inv(static_cast<std::uint32_t>(prow[col]));
        if (inv != 1)
            for (std::size_t j = col; j < C; ++j) prow[j] = (prow[j] * inv) % p;
        for (std::size_t r = full ? 0 : cur + 1; r < R; ++r) {
            if (r == cur) continue;
            T* row = &a[r * C];
            T e = row[col] % p;
            if (!e) {
                row[col] = 0;
                continue;
            }
            const T f = p - e;
            for (std::size_t j = col; j < C; ++j) row[j] += f * prow[j];
            row[col] = 0;
        }
        pivots.push_back(col);
        ++cur;
    }
    FpMatrix out(R, C, m.prime());
    if (full) {
        for (std::size_t i = 0; i < R; ++i)
            for (std::size_t j = 0; j < C; ++j) out.set(i, j, static_cast<std::uint32_t>(a[i * C + j] % p));
    }
    return {out, pivots.size(), pivots};
}

RrefResult dispatch(const FpMatrix& m, bool full) {
    // Each elimination step adds at most (p-1)^2 to an entry, and there are at most
    // min(rows, cols) steps.
    const std::uint64_t p = m.prime().value();
    const std::uint64_t steps = std::min(m.rows(), m.cols()) + 1;
    if ((p - 1) * (p - 1) * steps + p < std::numeric_limits<std::uint32_t>::max())
        return eliminate<std::uint32_t>(m, full);
    return eliminate<std::uint64_t>(m, full);
}

}  // namespace

RrefResult rref(const FpMatrix& m) { return dispatch(m, true); }

std::size_t rank(const FpMatrix& m) { return dispatch(m, false).rank; }

Subspace::Subspace(std::size_t ambient_dim, Prime p) : ambient_(ambient_dim), p_(p) {}

Subspace Subspace::span(std::size_t ambient_dim, Prime p, const std::vector<Vec>& vectors) {
    Subspace s(ambient_dim, p);
    if (vectors.empty()) return s;
    FpMatrix m(vectors.size(), ambient_dim, p);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != ambient_dim) throw DimensionMismatch("span vector length");
        for (std::size_t j = 0; j < ambient_dim; ++j) m.set(i, j, vectors[i][j]);
    }
    RrefResult r = rref(m);
    for (std::size_t i = 0; i < r.rank; ++i) s.basis_.push_back(r.matrix.row(i));
    s.pivots_ = r.pivots;
    return s;
}

Vec Subspace::reduce(const Vec& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("vector not in ambient space");
    Vec r = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        std::uint32_t c = r[pivots_[i]];
        if (c) vaxpy(p_, p_.neg(c), basis_[i], r);
    }
    return r;
}

bool Subspace::contains(const Subspace& other) const {
    for (const auto& v : other.basis())
        if (!contains(v)) return false;
    return true;
}

Subspace nullspace(const FpMatrix& m) {
    RrefResult r = rref(m);
    const std::size_t C = m.cols();
    std::vector<bool> is_pivot(C, false);
    for (auto c : r.pivots) is_pivot[c] = true;
    std::vector<Vec> vecs;
    for (std::size_t f = 0; f < C; ++f) {
        if (is_pivot[f]) continue;
        Vec v(C, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = m.prime().neg(r.matrix.at(i, f));
        vecs.push_back(std::move(v));
    }
    return Subspace::span(C, m.prime(), vecs);
}

Subspace column_space(const FpMatrix& m) {
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
    return Subspace::span(m.rows(), m.prime(), cols);
}

std::size_t quotient_dim(const FpMatrix& incoming, const FpMatrix& outgoing) {
    if (outgoing.cols() != incoming.rows())
        throw DimensionMismatch("incoming maps into dimension " + std::to_string(incoming.rows()) +
                                ", outgoing starts from " + std::to_string(outgoing.cols()));
    if (!(outgoing * incoming).is_zero())
        throw NotAComplex("composite of consecutive maps is nonzero");
    std::size_t ker = outgoing.cols() - rank(outgoing);
    return ker - rank(incoming);
}

std::optional<Vec> solve(const FpMatrix& m, const Vec& b) {
    if (b.size() != m.rows()) throw DimensionMismatch("right-hand side length");
    FpMatrix aug = hstack({m, FpMatrix::from_columns({b}, m.rows(), m.prime())});
    RrefResult r = rref(aug);
    if (!r.pivots.empty() && r.pivots.back() == m.cols()) return std::nullopt;
    Vec x(m.cols(), 0);
    for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.matrix.at(i, m.cols());
    return x;
}

std::vector<Vec> complement_representatives(const Subspace& sub, const Subspace& image) {
    std::vector<Vec> reduced;
    for (const auto& v : sub.basis()) reduced.push_back(image.reduce(v));
    Subspace s = Subspace::span(sub.ambient_dim(), sub.prime(), reduced);
    return s.basis();
}

}  // namespace rescoh
