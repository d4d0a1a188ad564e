#pragma once

/**
 * @file matrix.hpp
 * @brief Dense exact vectors and matrices over Rational.
 *
 * Row-major storage. Tensor products follow the block convention
 * (A ⊗ B)((i,k),(j,l)) = A(i,j)·B(k,l): the left factor owns the most
 * significant index digit.
 */

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "bpba/rational.hpp"

namespace bpba {

class ExactVector {
public:
    ExactVector() = default;
    explicit ExactVector(std::size_t dim) : entries_(dim) {}
    ExactVector(std::initializer_list<Rational> values) : entries_(values) {}
    explicit ExactVector(std::vector<Rational> values) : entries_(std::move(values)) {}

    static ExactVector unit(std::size_t dim, std::size_t index);

    std::size_t dim() const { return entries_.size(); }
    Rational& operator[](std::size_t i) { return entries_[i]; }
    const Rational& operator[](std::size_t i) const { return entries_[i]; }
    std::span<const Rational> entries() const { return entries_; }
    std::span<Rational> entries() { return entries_; }

    bool is_zero() const;

    ExactVector& operator+=(const ExactVector& o);
    ExactVector& operator-=(const ExactVector& o);
    ExactVector& operator*=(const Rational& s);
    /// this += s * o
    ExactVector& axpy(const Rational& s, const ExactVector& o);

    friend ExactVector operator+(ExactVector a, const ExactVector& b) { return a += b; }
    friend ExactVector operator-(ExactVector a, const ExactVector& b) { return a -= b; }
    friend ExactVector operator*(const Rational& s, ExactVector a) { return a *= s; }
    friend bool operator==(const ExactVector&, const ExactVector&) = default;

private:
    std::vector<Rational> entries_;
};

Rational dot(const ExactVector& a, const ExactVector& b);
ExactVector tensor(const ExactVector& a, const ExactVector& b);

/// If b = c·a for some scalar c (a nonzero), returns true and stores c.
bool proportional(const ExactVector& a, const ExactVector& b, Rational* factor = nullptr);

class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    /// Row-major initializer: {{a, b}, {c, d}}.
    ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static ExactMatrix identity(std::size_t n);
    static ExactMatrix diagonal(std::span<const Rational> diag);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    ExactVector column(std::size_t c) const;
    void set_column(std::size_t c, const ExactVector& v);

    bool is_zero() const;
    ExactMatrix transpose() const;

    ExactMatrix& operator+=(const ExactMatrix& o);
    ExactMatrix& operator-=(const ExactMatrix& o);
    ExactMatrix& operator*=(const Rational& s);

    friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
    friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
    friend ExactMatrix operator*(const Rational& s, ExactMatrix a) { return a *= s; }
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactVector operator*(const ExactMatrix& a, const ExactVector& v);
    friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

ExactMatrix tensor(const ExactMatrix& a, const ExactMatrix& b);

/// Human-readable rendering for diagnostics.
std::string to_string(const ExactVector& v);
std::string to_string(const ExactMatrix& m);

} // namespace bpba
