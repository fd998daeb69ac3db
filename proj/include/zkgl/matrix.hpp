#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "zkgl/field.hpp"
#include "zkgl/rng.hpp"

namespace zkgl {

// Dense d x d matrix algebra over F_p: the general linear group GL(d, F_p)
// is the platform for every protocol equation. Matrices are immutable in
// practice (operations return new values) and safe to share across threads.

struct DiagonalSpec; // below

class Matrix {
public:
    Matrix(PrimeModulus mod, size_t dim); // zero matrix

    static Matrix identity(PrimeModulus mod, size_t dim);
    static Matrix from_rows(PrimeModulus mod,
                            std::initializer_list<std::initializer_list<uint64_t>> rows);
    // Diagonal matrix from raw values (entries reduced mod p, no
    // distinctness requirement).
    static Matrix diagonal(PrimeModulus mod, std::span<const uint64_t> values);
    static Matrix diagonal(const DiagonalSpec& spec);

    size_t dim() const { return dim_; }
    const PrimeModulus& mod() const { return mod_; }

    uint64_t at(size_t i, size_t j) const { return e_[i * dim_ + j]; }
    void set(size_t i, size_t j, uint64_t v) { e_[i * dim_ + j] = v % mod_.p; }

    const uint64_t* data() const { return e_.data(); }
    uint64_t* data() { return e_.data(); }

    std::string str() const; // row-per-line, for diagnostics

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    PrimeModulus mod_;
    size_t dim_;
    std::vector<uint64_t> e_; // row-major canonical residues
};

// Ordered tuple of d pairwise-distinct nonzero field values; the diagonal
// that seeds a private key. Construction validates both constraints.
struct DiagonalSpec {
    PrimeModulus mod;
    std::vector<uint64_t> lambdas;

    DiagonalSpec(PrimeModulus m, std::vector<uint64_t> values);

    size_t dim() const { return lambdas.size(); }

    friend bool operator==(const DiagonalSpec&, const DiagonalSpec&) = default;
};

// Polynomial over F_p, coefficients ascending by degree. The zero
// polynomial has an empty coefficient vector; otherwise the leading
// coefficient is nonzero.
struct Polynomial {
    PrimeModulus mod;
    std::vector<uint64_t> coeffs;

    Polynomial(PrimeModulus m, std::vector<uint64_t> ascending_coeffs);

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    uint64_t eval(uint64_t x) const;
    bool monic() const { return !coeffs.empty() && coeffs.back() == 1; }

    std::string str() const; // e.g. "x^2 + 2x + 6"

    friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);

FieldElement mat_det(const Matrix& m);
bool is_invertible(const Matrix& m);

// Gauss-Jordan inverse; errors: Singular.
Matrix mat_inv(const Matrix& m);

// Signed power by square-and-multiply; negative e as (m^-1)^|e|; m^0 = I.
Matrix mat_pow(const Matrix& m, int64_t e);

// P * diag(spec) * P^-1; errors: Singular when P is not invertible.
Matrix conjugate(const Matrix& p_mat, const DiagonalSpec& spec);

bool commutes(const Matrix& a, const Matrix& b);

// Monic degree-d characteristic polynomial det(xI - m), computed by
// evaluation at the d+1 points 0..d and Lagrange interpolation.
// Errors: ModulusTooSmall when p <= d + 1.
Polynomial char_poly(const Matrix& m);

// Rabin's criterion: f irreducible over F_p iff x^(p^n) = x (mod f) and
// gcd(x^(p^(n/q)) - x, f) = 1 for every prime q dividing n = deg f.
// Requires f monic of degree >= 1.
bool poly_is_irreducible(const Polynomial& f);

// Optional order check for an irreducible f of degree n: true iff x
// generates the full multiplicative group of F_p[x]/(f), i.e. has order
// p^n - 1. The caller supplies the distinct prime factors of p^n - 1
// (factoring is outside this library's scope).
bool poly_is_primitive(const Polynomial& f, std::span<const uint64_t> prime_factors_of_order);

// Uniform invertible matrix by rejection sampling.
Matrix sample_invertible(PrimeModulus mod, size_t d, RandomSource& rng);

// d values drawn without replacement from {1, ..., p-1}.
// Errors: FieldTooSmall when p - 1 < d.
DiagonalSpec sample_distinct_diagonal(PrimeModulus mod, size_t d, RandomSource& rng);

} // namespace zkgl
