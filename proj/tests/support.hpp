#pragma once

/**
 * @file support.hpp
 * @brief Independent oracles and random generators shared by the unit tests
 * and the acceptance suite.
 *
 * The matrix oracle rebuilds every basis element as an explicit n x n
 * rational matrix and recomputes brackets and traces from scratch, so it
 * shares no code with RootDatum::bracket beyond the naming of the basis.
 */

#include "affwhit/engine.hpp"

#include <random>
#include <vector>

namespace affwhit::testing {

using Matrix = std::vector<std::vector<Scalar>>;

inline Matrix zero_matrix(int n) { return Matrix(static_cast<std::size_t>(n), std::vector<Scalar>(static_cast<std::size_t>(n), 0)); }

inline Matrix to_matrix(int n, const roots::ChevalleyElement& x) {
    Matrix m = zero_matrix(n);
    for (const auto& [b, c] : x.terms()) {
        if (b.is_cartan()) {
            m[b.row][b.row] += c;
            m[b.row + 1][b.row + 1] -= c;
        } else {
            m[b.row][b.col] += c;
        }
    }
    return m;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.size();
    Matrix out = zero_matrix(static_cast<int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (a[i][k] != 0)
                for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    return out;
}

inline Matrix commutator(const Matrix& a, const Matrix& b) {
    Matrix ab = multiply(a, b), ba = multiply(b, a);
    for (std::size_t i = 0; i < ab.size(); ++i)
        for (std::size_t j = 0; j < ab.size(); ++j) ab[i][j] -= ba[i][j];
    return ab;
}

inline Scalar trace(const Matrix& a) {
    Scalar t = 0;
    for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
    return t;
}

/// Small random combination of basis elements of sl(n).
inline roots::ChevalleyElement random_chevalley(std::mt19937& rng, const roots::RootDatum& d, int terms = 3) {
    const auto basis = d.basis();
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<int> coef(-3, 3);
    roots::ChevalleyElement x;
    for (int k = 0; k < terms; ++k) x.add(basis[pick(rng)], Scalar(coef(rng)) / (1 + (k % 2)));
    return x;
}

/// Random loop generator with exponent in [-emax, emax]; c and d with
/// small probability when `with_cd` is set.
inline affine::Generator random_generator(std::mt19937& rng, const roots::RootDatum& d, int emax, bool with_cd) {
    std::uniform_int_distribution<int> roll(0, 19);
    if (with_cd) {
        const int r = roll(rng);
        if (r == 0) return affine::Generator::central();
        if (r == 1) return affine::Generator::derivation();
    }
    const auto basis = d.basis();
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<int> exp(-emax, emax);
    return affine::Generator::loop(basis[pick(rng)], exp(rng));
}

inline bool jacobi_holds(const affine::AffineAlgebra& alg, const affine::Generator& a, const affine::Generator& b,
                         const affine::Generator& c) {
    const affine::AffineElement x(a), y(b), z(c);
    const auto sum = alg.bracket(alg.bracket(x, y), z) + alg.bracket(alg.bracket(y, z), x) +
                     alg.bracket(alg.bracket(z, x), y);
    return sum.is_zero();
}

inline bool antisymmetric(const affine::AffineAlgebra& alg, const affine::Generator& a, const affine::Generator& b) {
    return (alg.bracket(a, b) + alg.bracket(b, a)).is_zero();
}

/// Random element of M(Lambda, theta): a few words of length <= 2 in the
/// generators of the algebra applied to 1, so that L(n) factors are
/// straightened too.
inline engine::ModuleElement random_module_element(std::mt19937& rng, const engine::WhittakerModule& m, int emax) {
    std::uniform_int_distribution<int> len(0, 2), coef(-2, 2);
    engine::ModuleElement out;
    for (int k = 0; k < 2; ++k) {
        std::vector<affine::Generator> word;
        const int l = len(rng);
        for (int i = 0; i < l; ++i) {
            affine::Generator g = random_generator(rng, m.datum(), emax, m.spec().mode == engine::Mode::affine);
            if (g.is_central()) g = affine::Generator::loop(roots::Basis::cartan(1), 0);
            word.push_back(g);
        }
        out.add_scaled(m.word(word), Scalar(coef(rng) == 0 ? 1 : coef(rng)));
    }
    return out;
}

/// [g, h] acting on v equals g h v - h g v.
inline bool action_compatible(const engine::WhittakerModule& m, const affine::Generator& g,
                              const affine::Generator& h, const engine::ModuleElement& v) {
    const auto lhs = m.act(g, m.act(h, v)) - m.act(h, m.act(g, v));
    const auto rhs = m.act(m.algebra().bracket(affine::AffineElement(g), affine::AffineElement(h)), v);
    return lhs == rhs;
}

} // namespace affwhit::testing
