#include "bpba/quantum.hpp"

#include "bpba/error.hpp"

namespace bpba {

namespace {

std::size_t site_bit(int length, int site) {
    if (site < 1 || site > length) {
        throw DimensionError("site " + std::to_string(site) + " outside 1.." + std::to_string(length));
    }
    return std::size_t{1} << (length - site);
}

} // namespace

QuantumState::QuantumState(int length) : chain_length(length), vector(std::size_t{1} << length) {}

QuantumState::QuantumState(int length, ExactVector v) : chain_length(length), vector(std::move(v)) {
    if (vector.dim() != (std::size_t{1} << length)) {
        throw DimensionError("state dimension does not match 2^L");
    }
}

QuantumState QuantumState::product(const std::vector<int>& labels) {
    QuantumState s(static_cast<int>(labels.size()));
    s.vector[basis_index(labels)] = 1;
    return s;
}

std::size_t basis_index(const std::vector<int>& labels) {
    std::size_t idx = 0;
    for (int s : labels) {
        if (s != 1 && s != 2) {
            throw DimensionError("site labels must be 1 or 2");
        }
        idx = 2 * idx + static_cast<std::size_t>(s - 1);
    }
    return idx;
}

std::vector<int> basis_labels(std::size_t index, int length) {
    std::vector<int> labels(static_cast<std::size_t>(length));
    for (int site = 1; site <= length; ++site) {
        labels[static_cast<std::size_t>(site - 1)] = site_label(index, length, site);
    }
    return labels;
}

std::string basis_string(std::size_t index, int length) {
    std::string s;
    for (int site = 1; site <= length; ++site) {
        s.push_back(static_cast<char>('0' + site_label(index, length, site)));
    }
    return s;
}

ExactVector apply_elementary(const ExactVector& v, int length, int site, int a, int b) {
    const std::size_t bit = site_bit(length, site);
    ExactVector out(v.dim());
    const std::size_t b_bits = (b == 2) ? bit : 0;
    const std::size_t a_bits = (a == 2) ? bit : 0;
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if ((i & bit) == b_bits && !v[i].is_zero()) {
            out[(i & ~bit) | a_bits] += v[i];
        }
    }
    return out;
}

ExactVector apply_s(const ExactVector& v, int length, int site, bool inverse) {
    const std::size_t bit = site_bit(length, site);
    ExactVector out(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (v[i].is_zero()) {
            continue;
        }
        if ((i & bit) == 0) {
            // S|1⟩ = -|2⟩
            out[i | bit] = inverse ? v[i] : -v[i];
        } else {
            // S|2⟩ = |1⟩
            out[i & ~bit] = inverse ? -v[i] : v[i];
        }
    }
    return out;
}

ExactVector swap_sites(const ExactVector& v, int length, int s1, int s2) {
    const std::size_t b1 = site_bit(length, s1);
    const std::size_t b2 = site_bit(length, s2);
    ExactVector out(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) {
        const bool x1 = (i & b1) != 0;
        const bool x2 = (i & b2) != 0;
        std::size_t j = i & ~(b1 | b2);
        if (x1) {
            j |= b2;
        }
        if (x2) {
            j |= b1;
        }
        out[j] = v[i];
    }
    return out;
}

ExactVector swap_adjacent(const ExactVector& v, int length, int p) { return swap_sites(v, length, p, p + 1); }

ExactVector apply_r_unnormalized(const ExactVector& v, int length, int p, const Rational& x) {
    ExactVector out = swap_adjacent(v, length, p);
    out.axpy(x, v);
    return out;
}

QuantumOperator::QuantumOperator(int length, ExactMatrix m) : chain_length(length), matrix(std::move(m)) {
    const std::size_t dim = std::size_t{1} << length;
    if (matrix.rows() != dim || matrix.cols() != dim) {
        throw DimensionError("operator dimension does not match 2^L");
    }
}

QuantumOperator QuantumOperator::zero(int length) {
    const std::size_t dim = std::size_t{1} << length;
    return QuantumOperator(length, ExactMatrix(dim, dim));
}

QuantumOperator QuantumOperator::identity(int length) {
    return QuantumOperator(length, ExactMatrix::identity(std::size_t{1} << length));
}

AuxOperator operator*(const AuxOperator& x, const AuxOperator& y) {
    if (x.chain_length != y.chain_length) {
        throw DimensionError("aux operator product: chain lengths differ");
    }
    AuxOperator out;
    out.chain_length = x.chain_length;
    for (int r = 1; r <= 2; ++r) {
        for (int c = 1; c <= 2; ++c) {
            ExactMatrix acc = x.block(r, 1).matrix * y.block(1, c).matrix;
            acc += x.block(r, 2).matrix * y.block(2, c).matrix;
            out.block(r, c) = QuantumOperator(x.chain_length, std::move(acc));
        }
    }
    return out;
}

ExactMatrix AuxOperator::full() const {
    const std::size_t dim = std::size_t{1} << chain_length;
    ExactMatrix m(2 * dim, 2 * dim);
    for (int r = 1; r <= 2; ++r) {
        for (int c = 1; c <= 2; ++c) {
            const auto& b = block(r, c).matrix;
            for (std::size_t i = 0; i < dim; ++i) {
                for (std::size_t j = 0; j < dim; ++j) {
                    m(static_cast<std::size_t>(r - 1) * dim + i, static_cast<std::size_t>(c - 1) * dim + j) = b(i, j);
                }
            }
        }
    }
    return m;
}

} // namespace bpba
