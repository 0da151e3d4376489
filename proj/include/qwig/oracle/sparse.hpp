#pragma once

// Row-compressed matrices over either the exact field or doubles.

#include <algorithm>
#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "../exactq.hpp"

namespace qwig::oracle {

template <class K>
struct Scalars;

template <>
struct Scalars<QFraction> {
    QFraction qpow2(long e2) const { return QFraction(HalfLaurent::monomial(e2)); }
    QFraction from(const QFraction& f) const { return f; }
    QFraction integer(long c) const { return QFraction(c); }
};

template <>
struct Scalars<double> {
    double q0 = 2.0;
    double qpow2(long e2) const { return std::pow(q0, 0.5 * (double)e2); }
    double from(const QFraction& f) const { return (double)eval_numeric(f, q0); }
    double integer(long c) const { return (double)c; }
};

inline bool is_zero(const QFraction& x) { return x.is_zero(); }
inline bool is_zero(double x) { return x == 0.0; }

template <class K>
using Vec = std::vector<K>;

template <class K>
class SparseMatrix {
public:
    using Row = std::vector<std::pair<int, K>>;

    SparseMatrix() = default;
    SparseMatrix(int r, int c) : rows_(r), cols_(c), data_(r) {}

    static SparseMatrix identity(int n)
    {
        SparseMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.data_[i].emplace_back(i, K(1));
        return m;
    }

    static SparseMatrix diagonal(const std::vector<K>& d)
    {
        SparseMatrix m((int)d.size(), (int)d.size());
        for (int i = 0; i < (int)d.size(); ++i)
            if (!is_zero(d[i])) m.data_[i].emplace_back(i, d[i]);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Row& row(int i) const { return data_[i]; }

    K at(int i, int j) const
    {
        const Row& r = data_[i];
        auto it = std::lower_bound(r.begin(), r.end(), j, [](const auto& p, int c) { return p.first < c; });
        return (it != r.end() && it->first == j) ? it->second : K();
    }

    void add_to(int i, int j, const K& v)
    {
        if (is_zero(v)) return;
        Row& r = data_[i];
        auto it = std::lower_bound(r.begin(), r.end(), j, [](const auto& p, int c) { return p.first < c; });
        if (it != r.end() && it->first == j) {
            it->second = it->second + v;
            if (is_zero(it->second)) r.erase(it);
        } else {
            r.insert(it, {j, v});
        }
    }

    bool is_zero_matrix() const
    {
        for (const auto& r : data_)
            if (!r.empty()) return false;
        return true;
    }

    std::size_t nnz() const
    {
        std::size_t s = 0;
        for (const auto& r : data_) s += r.size();
        return s;
    }

    SparseMatrix scaled(const K& c) const
    {
        SparseMatrix m(rows_, cols_);
        if (is_zero(c)) return m;
        for (int i = 0; i < rows_; ++i) {
            m.data_[i].reserve(data_[i].size());
            for (const auto& [j, v] : data_[i]) m.data_[i].emplace_back(j, v * c);
        }
        return m;
    }

    friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) { return combine(a, b, false); }
    friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) { return combine(a, b, true); }

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b)
    {
        SparseMatrix m(a.rows_, b.cols_);
        std::vector<K> acc(b.cols_);
        std::vector<char> used(b.cols_, 0);
        std::vector<int> touched;
        for (int i = 0; i < a.rows_; ++i) {
            touched.clear();
            for (const auto& [t, x] : a.data_[i])
                for (const auto& [j, y] : b.data_[t]) {
                    if (!used[j]) {
                        used[j] = 1;
                        touched.push_back(j);
                        acc[j] = x * y;
                    } else {
                        acc[j] = acc[j] + x * y;
                    }
                }
            std::sort(touched.begin(), touched.end());
            for (int j : touched) {
                if (!is_zero(acc[j])) m.data_[i].emplace_back(j, std::move(acc[j]));
                acc[j] = K();
                used[j] = 0;
            }
        }
        return m;
    }

    Vec<K> apply(const Vec<K>& v) const
    {
        Vec<K> out(rows_);
        for (int i = 0; i < rows_; ++i) {
            K s = K();
            for (const auto& [j, x] : data_[i])
                if (!is_zero(v[j])) s = s + x * v[j];
            out[i] = s;
        }
        return out;
    }

    // operator block (b, a) when rows and columns are grouped in blocks of size dW (0-based)
    SparseMatrix block(int b, int a, int dW) const
    {
        SparseMatrix m(dW, dW);
        for (int i = 0; i < dW; ++i)
            for (const auto& [j, v] : data_[b * dW + i])
                if (j >= a * dW && j < (a + 1) * dW) m.data_[i].emplace_back(j - a * dW, v);
        return m;
    }

    // leading nb x nb blocks
    SparseMatrix leading(int nb, int dW) const
    {
        SparseMatrix m(nb * dW, nb * dW);
        for (int i = 0; i < nb * dW; ++i)
            for (const auto& [j, v] : data_[i])
                if (j < nb * dW) m.data_[i].emplace_back(j, v);
        return m;
    }

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    double max_abs() const
    {
        double s = 0;
        for (const auto& r : data_)
            for (const auto& [j, v] : r) s = std::max(s, std::fabs(to_double(v)));
        return s;
    }

private:
    static double to_double(double x) { return x; }
    static double to_double(const QFraction& x) { return is_zero(x) ? 0.0 : 1.0; }

    static SparseMatrix combine(const SparseMatrix& a, const SparseMatrix& b, bool minus)
    {
        SparseMatrix m(a.rows_, a.cols_);
        for (int i = 0; i < a.rows_; ++i) {
            const Row& x = a.data_[i];
            const Row& y = b.data_[i];
            Row& r = m.data_[i];
            std::size_t p = 0, q = 0;
            while (p < x.size() || q < y.size()) {
                if (q == y.size() || (p < x.size() && x[p].first < y[q].first)) {
                    r.push_back(x[p++]);
                } else if (p == x.size() || y[q].first < x[p].first) {
                    r.emplace_back(y[q].first, minus ? K(-y[q].second) : y[q].second);
                    ++q;
                } else {
                    K s = minus ? K(x[p].second - y[q].second) : K(x[p].second + y[q].second);
                    if (!is_zero(s)) r.emplace_back(x[p].first, std::move(s));
                    ++p;
                    ++q;
                }
            }
        }
        return m;
    }

    int rows_ = 0, cols_ = 0;
    std::vector<Row> data_;
};

// (A (x) B)(v (x) w) = (-1)^{pB [v]} Av (x) Bw ; colpar gives [v] for the columns of A
template <class K>
SparseMatrix<K> graded_kron(const SparseMatrix<K>& A, const SparseMatrix<K>& B, int pB, const std::vector<int>& colpar)
{
    const int rb = B.rows(), cb = B.cols();
    SparseMatrix<K> m(A.rows() * rb, A.cols() * cb);
    for (int i = 0; i < A.rows(); ++i)
        for (const auto& [j, a] : A.row(i)) {
            const bool neg = (pB & colpar[j]) != 0;
            for (int k = 0; k < rb; ++k)
                for (const auto& [l, b] : B.row(k)) {
                    K v = a * b;
                    m.add_to(i * rb + k, j * cb + l, neg ? K(-v) : v);
                }
        }
    return m;
}

template <class K>
SparseMatrix<K> elementary(int d, int i, int j)
{
    SparseMatrix<K> m(d, d);
    m.add_to(i - 1, j - 1, K(1));
    return m;
}

template <class K>
bool vec_is_zero(const Vec<K>& v)
{
    for (const auto& x : v)
        if (!is_zero(x)) return false;
    return true;
}

template <class K>
Vec<K> vec_sub(const Vec<K>& a, const Vec<K>& b)
{
    Vec<K> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

template <class K>
Vec<K> vec_add(const Vec<K>& a, const Vec<K>& b)
{
    Vec<K> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

template <class K>
Vec<K> vec_scale(const Vec<K>& a, const K& c)
{
    Vec<K> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!is_zero(a[i])) r[i] = a[i] * c;
    return r;
}

// y = c x ; returns c, or nothing when x = 0 (then y must vanish as well)
inline std::optional<QFraction> vec_ratio(const Vec<QFraction>& y, const Vec<QFraction>& x)
{
    std::optional<QFraction> c;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) {
            c = y[i] / x[i];
            break;
        }
    if (!c) {
        if (!vec_is_zero(y)) throw Error(Errc::NotScalar, "image of a zero vector is nonzero");
        return c;
    }
    for (std::size_t i = 0; i < x.size(); ++i)
        if (y[i] != *c * x[i]) throw Error(Errc::NotScalar, "operator is not a scalar on this vector");
    return c;
}

} // namespace qwig::oracle
