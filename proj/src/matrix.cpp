#include "zkgl/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "zkgl/kernels.hpp"

namespace zkgl {

Matrix::Matrix(PrimeModulus mod, size_t dim) : mod_(mod), dim_(dim), e_(dim * dim, 0) {
    if (dim == 0) raise(Errc::InvalidArgument, "matrix dimension must be positive");
}

Matrix Matrix::identity(PrimeModulus mod, size_t dim) {
    Matrix m(mod, dim);
    for (size_t i = 0; i < dim; ++i) m.e_[i * dim + i] = 1 % mod.p;
    return m;
}

Matrix Matrix::from_rows(PrimeModulus mod,
                         std::initializer_list<std::initializer_list<uint64_t>> rows) {
    size_t d = rows.size();
    Matrix m(mod, d);
    size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != d) raise(Errc::DimensionMismatch, "ragged row in matrix literal");
        size_t j = 0;
        for (uint64_t v : row) m.e_[i * d + j++] = v % mod.p;
        ++i;
    }
    return m;
}

Matrix Matrix::diagonal(PrimeModulus mod, std::span<const uint64_t> values) {
    Matrix m(mod, values.size());
    for (size_t i = 0; i < values.size(); ++i) m.e_[i * values.size() + i] = values[i] % mod.p;
    return m;
}

Matrix Matrix::diagonal(const DiagonalSpec& spec) {
    return diagonal(spec.mod, std::span<const uint64_t>(spec.lambdas));
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < dim_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (size_t j = 0; j < dim_; ++j) os << (j ? " " : "[") << at(i, j);
        os << "]" << (i + 1 == dim_ ? "]" : "\n");
    }
    return os.str();
}

DiagonalSpec::DiagonalSpec(PrimeModulus m, std::vector<uint64_t> values)
    : mod(m), lambdas(std::move(values)) {
    if (lambdas.empty()) raise(Errc::InvalidArgument, "empty diagonal");
    std::unordered_set<uint64_t> seen;
    for (uint64_t& v : lambdas) {
        v %= mod.p;
        if (v == 0) raise(Errc::InvalidArgument, "diagonal entries must be nonzero");
        if (!seen.insert(v).second)
            raise(Errc::InvalidArgument, "diagonal entries must be pairwise distinct");
    }
}

namespace {

void check_compatible(const Matrix& a, const Matrix& b) {
    if (a.dim() != b.dim()) raise(Errc::DimensionMismatch, "matrix dimensions differ");
    if (a.mod() != b.mod()) raise(Errc::ModulusMismatch, "matrix moduli differ");
}

} // namespace

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    check_compatible(a, b);
    Matrix out(a.mod(), a.dim());
    MatmulKernel k = select_matmul_kernel(a.mod().p, a.dim());
    k.fn(out.data(), a.data(), b.data(), a.dim(), a.mod().p);
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }

FieldElement mat_det(const Matrix& m) {
    const uint64_t p = m.mod().p;
    const size_t d = m.dim();
    std::vector<uint64_t> w(m.data(), m.data() + d * d);
    uint64_t det = 1 % p;
    for (size_t col = 0; col < d; ++col) {
        size_t pivot = col;
        while (pivot < d && w[pivot * d + col] == 0) ++pivot;
        if (pivot == d) return FieldElement::raw(0, p);
        if (pivot != col) {
            for (size_t j = col; j < d; ++j) std::swap(w[pivot * d + j], w[col * d + j]);
            det = fp_neg(det, p);
        }
        uint64_t pv = w[col * d + col];
        det = fp_mul(det, pv, p);
        uint64_t pv_inv = fp_inv(pv, p);
        for (size_t r = col + 1; r < d; ++r) {
            uint64_t f = fp_mul(w[r * d + col], pv_inv, p);
            if (f == 0) continue;
            for (size_t j = col; j < d; ++j)
                w[r * d + j] = fp_sub(w[r * d + j], fp_mul(f, w[col * d + j], p), p);
        }
    }
    return FieldElement::raw(det, p);
}

bool is_invertible(const Matrix& m) { return mat_det(m).value != 0; }

Matrix mat_inv(const Matrix& m) {
    const uint64_t p = m.mod().p;
    const size_t d = m.dim();
    std::vector<uint64_t> w(m.data(), m.data() + d * d);
    Matrix inv = Matrix::identity(m.mod(), d);
    uint64_t* iv = inv.data();
    for (size_t col = 0; col < d; ++col) {
        size_t pivot = col;
        while (pivot < d && w[pivot * d + col] == 0) ++pivot;
        if (pivot == d) raise(Errc::Singular, "matrix is singular");
        if (pivot != col) {
            for (size_t j = 0; j < d; ++j) {
                std::swap(w[pivot * d + j], w[col * d + j]);
                std::swap(iv[pivot * d + j], iv[col * d + j]);
            }
        }
        uint64_t pv_inv = fp_inv(w[col * d + col], p);
        for (size_t j = 0; j < d; ++j) {
            w[col * d + j] = fp_mul(w[col * d + j], pv_inv, p);
            iv[col * d + j] = fp_mul(iv[col * d + j], pv_inv, p);
        }
        for (size_t r = 0; r < d; ++r) {
            if (r == col) continue;
            uint64_t f = w[r * d + col];
            if (f == 0) continue;
            for (size_t j = 0; j < d; ++j) {
                w[r * d + j] = fp_sub(w[r * d + j], fp_mul(f, w[col * d + j], p), p);
                iv[r * d + j] = fp_sub(iv[r * d + j], fp_mul(f, iv[col * d + j], p), p);
            }
        }
    }
    return inv;
}

Matrix mat_pow(const Matrix& m, int64_t e) {
    if (e == 0) return Matrix::identity(m.mod(), m.dim());
    Matrix base = e < 0 ? mat_inv(m) : m;
    uint64_t k = e < 0 ? static_cast<uint64_t>(-(e + 1)) + 1 : static_cast<uint64_t>(e);
    Matrix acc = Matrix::identity(m.mod(), m.dim());
    while (k != 0) {
        if (k & 1) acc = mat_mul(acc, base);
        k >>= 1;
        if (k != 0) base = mat_mul(base, base);
    }
    return acc;
}

Matrix conjugate(const Matrix& p_mat, const DiagonalSpec& spec) {
    if (p_mat.dim() != spec.dim()) raise(Errc::DimensionMismatch, "conjugation dimension mismatch");
    if (p_mat.mod() != spec.mod) raise(Errc::ModulusMismatch, "conjugation modulus mismatch");
    Matrix d = Matrix::diagonal(spec);
    return mat_mul(mat_mul(p_mat, d), mat_inv(p_mat));
}

bool commutes(const Matrix& a, const Matrix& b) {
    check_compatible(a, b);
    return mat_mul(a, b) == mat_mul(b, a);
}

Matrix sample_invertible(PrimeModulus mod, size_t d, RandomSource& rng) {
    Matrix m(mod, d);
    for (;;) {
        uint64_t* e = m.data();
        for (size_t i = 0; i < d * d; ++i) e[i] = rng.uniform_below(mod.p);
        if (is_invertible(m)) return m;
    }
}

DiagonalSpec sample_distinct_diagonal(PrimeModulus mod, size_t d, RandomSource& rng) {
    if (mod.p - 1 < d) raise(Errc::FieldTooSmall, "need p - 1 >= d distinct nonzero values");
    std::vector<uint64_t> vals;
    vals.reserve(d);
    std::unordered_set<uint64_t> seen;
    while (vals.size() < d) {
        uint64_t v = 1 + rng.uniform_below(mod.p - 1);
        if (seen.insert(v).second) vals.push_back(v);
    }
    return DiagonalSpec(mod, std::move(vals));
}

} // namespace zkgl
