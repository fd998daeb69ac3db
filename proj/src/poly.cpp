// Characteristic polynomials and irreducibility / primitivity tests over F_p.

#include <gmp.h>

#include <algorithm>
#include <sstream>

#include "zkgl/matrix.hpp"

namespace zkgl {

namespace {

void strip(std::vector<uint64_t>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

using Poly = std::vector<uint64_t>; // ascending, stripped

Poly poly_sub(const Poly& a, const Poly& b, uint64_t p) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < out.size(); ++i) {
        uint64_t av = i < a.size() ? a[i] : 0;
        uint64_t bv = i < b.size() ? b[i] : 0;
        out[i] = fp_sub(av, bv, p);
    }
    strip(out);
    return out;
}

Poly poly_mul(const Poly& a, const Poly& b, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = fp_add(out[i + j], fp_mul(a[i], b[j], p), p);
    }
    strip(out);
    return out;
}

// remainder of a divided by monic f
Poly poly_mod(Poly a, const Poly& f, uint64_t p) {
    size_t n = f.size() - 1;
    while (a.size() > n) {
        uint64_t lead = a.back();
        size_t shift = a.size() - 1 - n;
        if (lead != 0) {
            for (size_t i = 0; i < n; ++i)
                a[shift + i] = fp_sub(a[shift + i], fp_mul(lead, f[i], p), p);
        }
        a.pop_back();
    }
    strip(a);
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, uint64_t p) {
    return poly_mod(poly_mul(a, b, p), f, p);
}

Poly poly_powmod(Poly base, uint64_t e, const Poly& f, uint64_t p) {
    Poly acc{1 % p};
    base = poly_mod(std::move(base), f, p);
    while (e != 0) {
        if (e & 1) acc = poly_mulmod(acc, base, f, p);
        e >>= 1;
        if (e != 0) base = poly_mulmod(base, base, f, p);
    }
    return acc;
}

// gcd of arbitrary a with monic-or-zero handling; result made monic
Poly poly_gcd(Poly a, Poly b, uint64_t p) {
    while (!b.empty()) {
        // reduce a mod b after scaling b monic
        uint64_t lead_inv = fp_inv(b.back(), p);
        Poly bm = b;
        for (uint64_t& c : bm) c = fp_mul(c, lead_inv, p);
        a = poly_mod(std::move(a), bm, p);
        std::swap(a, b);
    }
    if (!a.empty() && a.back() != 1) {
        uint64_t inv = fp_inv(a.back(), p);
        for (uint64_t& c : a) c = fp_mul(c, inv, p);
    }
    return a;
}

std::vector<uint64_t> prime_divisors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            out.push_back(q);
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

} // namespace

Polynomial::Polynomial(PrimeModulus m, std::vector<uint64_t> ascending_coeffs)
    : mod(m), coeffs(std::move(ascending_coeffs)) {
    for (uint64_t& c : coeffs) c %= mod.p;
    strip(coeffs);
}

uint64_t Polynomial::eval(uint64_t x) const {
    uint64_t acc = 0;
    for (size_t i = coeffs.size(); i-- > 0;)
        acc = fp_add(fp_mul(acc, x % mod.p, mod.p), coeffs[i], mod.p);
    return acc;
}

std::string Polynomial::str() const {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] == 0 && !(i == 0 && first)) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || coeffs[i] != 1) os << coeffs[i];
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

Polynomial char_poly(const Matrix& m) {
    const uint64_t p = m.mod().p;
    const size_t d = m.dim();
    if (p <= d + 1)
        raise(Errc::ModulusTooSmall, "characteristic polynomial needs p > d + 1");

    // evaluate det(tI - m) at t = 0..d
    std::vector<uint64_t> values(d + 1);
    for (uint64_t t = 0; t <= d; ++t) {
        Matrix shifted(m.mod(), d);
        for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j < d; ++j) {
                uint64_t v = fp_neg(m.at(i, j), p);
                if (i == j) v = fp_add(v, t, p);
                shifted.set(i, j, v);
            }
        values[t] = mat_det(shifted).value;
    }

    // Lagrange interpolation on the points (t, values[t])
    Poly numerator{1}; // prod (x - s)
    for (uint64_t s = 0; s <= d; ++s) numerator = poly_mul(numerator, Poly{fp_neg(s, p), 1}, p);

    Poly result;
    for (uint64_t t = 0; t <= d; ++t) {
        if (values[t] == 0) continue;
        // quotient numerator / (x - t) by synthetic division
        Poly q(d + 1, 0);
        uint64_t carry = 0;
        for (size_t i = d + 1; i-- > 0;) {
            carry = fp_add(numerator[i + 1], fp_mul(carry, t, p), p);
            q[i] = carry;
        }
        uint64_t denom = 1;
        for (uint64_t s = 0; s <= d; ++s)
            if (s != t) denom = fp_mul(denom, fp_sub(t, s, p), p);
        uint64_t scale = fp_mul(values[t], fp_inv(denom, p), p);
        if (result.size() < q.size()) result.resize(q.size(), 0);
        for (size_t i = 0; i < q.size(); ++i)
            result[i] = fp_add(result[i], fp_mul(scale, q[i], p), p);
    }
    strip(result);

    Polynomial out(m.mod(), std::move(result));
    if (out.degree() != static_cast<int>(d) || !out.monic())
        raise(Errc::InvalidArgument, "characteristic polynomial interpolation went wrong");
    return out;
}

bool poly_is_irreducible(const Polynomial& f) {
    const uint64_t p = f.mod.p;
    const int n = f.degree();
    if (n < 1 || !f.monic())
        raise(Errc::InvalidArgument, "irreducibility test needs a monic polynomial of degree >= 1");
    if (n == 1) return true;

    const Poly fc(f.coeffs.begin(), f.coeffs.end());
    const Poly x{0, 1};

    // frob[i] = x^(p^i) mod f, built by repeated p-th powers
    std::vector<Poly> frob(static_cast<size_t>(n) + 1);
    frob[0] = x;
    for (int i = 1; i <= n; ++i) frob[i] = poly_powmod(frob[i - 1], p, fc, p);

    if (poly_sub(frob[n], x, p) != Poly{}) return false;
    for (uint64_t q : prime_divisors(static_cast<uint64_t>(n))) {
        Poly diff = poly_sub(frob[n / q], x, p);
        Poly g = poly_gcd(fc, diff, p);
        if (g.size() != 1) return false; // shared factor (or diff == 0)
    }
    return true;
}

bool poly_is_primitive(const Polynomial& f, std::span<const uint64_t> prime_factors_of_order) {
    if (!poly_is_irreducible(f)) return false;
    const uint64_t p = f.mod.p;
    const int n = f.degree();
    if (f.coeffs[0] == 0) return false; // f divisible by x: x is not a unit

    const Poly fc(f.coeffs.begin(), f.coeffs.end());
    const Poly x{0, 1};
    const Poly one{1};

    mpz_t order, e, q;
    mpz_inits(order, e, q, nullptr);
    mpz_ui_pow_ui(order, p, static_cast<unsigned long>(n));
    mpz_sub_ui(order, order, 1);

    auto powmod_mpz = [&](const mpz_t exp) {
        Poly acc = one;
        size_t bits = mpz_sizeinbase(exp, 2);
        for (size_t i = bits; i-- > 0;) {
            acc = poly_mulmod(acc, acc, fc, p);
            if (mpz_tstbit(exp, i)) acc = poly_mulmod(acc, x, fc, p);
        }
        return acc;
    };

    bool primitive = true;
    for (uint64_t qf : prime_factors_of_order) {
        mpz_set_ui(q, qf);
        if (!mpz_divisible_p(order, q)) {
            mpz_clears(order, e, q, nullptr);
            raise(Errc::InvalidArgument,
                  "supplied factor " + std::to_string(qf) + " does not divide p^n - 1");
        }
        mpz_divexact(e, order, q);
        if (powmod_mpz(e) == one) {
            primitive = false;
            break;
        }
    }
    mpz_clears(order, e, q, nullptr);
    return primitive;
}

} // namespace zkgl
