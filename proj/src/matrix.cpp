#include "bpba/matrix.hpp"

#include <sstream>

#include "bpba/error.hpp"

namespace bpba {

namespace {

void require(bool ok, const char* what) {
    if (!ok) {
        throw DimensionError(what);
    }
}

} // namespace

ExactVector ExactVector::unit(std::size_t dim, std::size_t index) {
    ExactVector v(dim);
    v[index] = 1;
    return v;
}

bool ExactVector::is_zero() const {
    for (const auto& x : entries_) {
        if (!x.is_zero()) {
            return false;
        }
    }
    return true;
}

ExactVector& ExactVector::operator+=(const ExactVector& o) {
    require(dim() == o.dim(), "vector add: dimension mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] += o.entries_[i];
    }
    return *this;
}

ExactVector& ExactVector::operator-=(const ExactVector& o) {
    require(dim() == o.dim(), "vector sub: dimension mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] -= o.entries_[i];
    }
    return *this;
}

ExactVector& ExactVector::operator*=(const Rational& s) {
    for (auto& x : entries_) {
        x *= s;
    }
    return *this;
}

ExactVector& ExactVector::axpy(const Rational& s, const ExactVector& o) {
    require(dim() == o.dim(), "axpy: dimension mismatch");
    if (s.is_zero()) {
        return *this;
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (!o.entries_[i].is_zero()) {
            entries_[i] += s * o.entries_[i];
        }
    }
    return *this;
}

Rational dot(const ExactVector& a, const ExactVector& b) {
    require(a.dim() == b.dim(), "dot: dimension mismatch");
    Rational acc;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        acc += a[i] * b[i];
    }
    return acc;
}

ExactVector tensor(const ExactVector& a, const ExactVector& b) {
    ExactVector out(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (std::size_t k = 0; k < b.dim(); ++k) {
            out[i * b.dim() + k] = a[i] * b[k];
        }
    }
    return out;
}

bool proportional(const ExactVector& a, const ExactVector& b, Rational* factor) {
    if (a.dim() != b.dim()) {
        return false;
    }
    std::size_t pivot = a.dim();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (!a[i].is_zero()) {
            pivot = i;
            break;
        }
    }
    if (pivot == a.dim()) {
        return false;
    }
    Rational c = b[pivot] / a[pivot];
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (b[i] != c * a[i]) {
            return false;
        }
    }
    if (factor != nullptr) {
        *factor = c;
    }
    return true;
}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        require(row.size() == cols_, "ragged matrix initializer");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

ExactMatrix ExactMatrix::diagonal(std::span<const Rational> diag) {
    ExactMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
        m(i, i) = diag[i];
    }
    return m;
}

ExactVector ExactMatrix::column(std::size_t c) const {
    ExactVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        v[r] = (*this)(r, c);
    }
    return v;
}

void ExactMatrix::set_column(std::size_t c, const ExactVector& v) {
    require(v.dim() == rows_, "set_column: dimension mismatch");
    for (std::size_t r = 0; r < rows_; ++r) {
        (*this)(r, c) = v[r];
    }
}

bool ExactMatrix::is_zero() const {
    for (const auto& x : entries_) {
        if (!x.is_zero()) {
            return false;
        }
    }
    return true;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
    require(rows_ == o.rows_ && cols_ == o.cols_, "matrix add: dimension mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] += o.entries_[i];
    }
    return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
    require(rows_ == o.rows_ && cols_ == o.cols_, "matrix sub: dimension mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] -= o.entries_[i];
    }
    return *this;
}

ExactMatrix& ExactMatrix::operator*=(const Rational& s) {
    for (auto& x : entries_) {
        x *= s;
    }
    return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    require(a.cols_ == b.rows_, "matrix multiply: dimension mismatch");
    ExactMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Rational& bkj = b(k, j);
                if (!bkj.is_zero()) {
                    out(i, j) += aik * bkj;
                }
            }
        }
    }
    return out;
}

ExactVector operator*(const ExactMatrix& a, const ExactVector& v) {
    require(a.cols_ == v.dim(), "matrix-vector: dimension mismatch");
    ExactVector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        Rational acc;
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (!a(i, k).is_zero() && !v[k].is_zero()) {
                acc += a(i, k) * v[k];
            }
        }
        out[i] = acc;
    }
    return out;
}

ExactMatrix tensor(const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) {
                continue;
            }
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return out;
}

std::string to_string(const ExactVector& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.dim(); ++i) {
        os << (i == 0 ? "" : ", ") << v[i];
    }
    os << ')';
    return os.str();
}

std::string to_string(const ExactMatrix& m) {
    std::ostringstream os;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << '[';
        for (std::size_t c = 0; c < m.cols(); ++c) {
            os << (c == 0 ? "" : ", ") << m(r, c);
        }
        os << "]\n";
    }
    return os.str();
}

} // namespace bpba
