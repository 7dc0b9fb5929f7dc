#pragma once

/**
 * @file affine.hpp
 * @brief The untwisted affine algebra  L(g) + Qc + Qd  over g = sl(n).
 *
 *   [x (x) t^i, y (x) t^j] = [x,y] (x) t^{i+j} + i d_{i+j,0} K(x,y) c
 *   [d, x (x) t^i]         = i x (x) t^i
 *
 * with K the Killing form and c central.  The cocycle can be switched to the
 * factor-free variant d_{i,-j} K(x,y) c (which breaks the Jacobi identity)
 * or dropped entirely for the loop algebra.
 */

#include "affwhit/rootdata.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>

namespace affwhit::affine {

using roots::Basis;
using roots::RootDatum;

enum class Cocycle { standard, literal, none };

Cocycle parse_cocycle(const std::string& s);
const char* to_string(Cocycle c);

struct Generator {
    enum class Kind : std::uint8_t { loop, central, derivation };

    Kind kind = Kind::loop;
    Basis basis{};
    std::int32_t exp = 0;

    static Generator loop(Basis b, std::int32_t e) { return {Kind::loop, b, e}; }
    static Generator central() { return {Kind::central, {}, 0}; }
    static Generator derivation() { return {Kind::derivation, {}, 0}; }

    bool is_loop() const { return kind == Kind::loop; }
    bool is_central() const { return kind == Kind::central; }
    bool is_derivation() const { return kind == Kind::derivation; }

    /// Structural order used for containers; unrelated to the PBW order.
    auto operator<=>(const Generator&) const = default;
};

/// Sparse combination of generators.
class AffineElement {
public:
    AffineElement() = default;
    AffineElement(Generator g, Scalar c = 1);

    const std::map<Generator, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(const Generator& g) const;

    void add(const Generator& g, const Scalar& c);
    AffineElement& operator+=(const AffineElement& o);
    AffineElement operator+(const AffineElement& o) const;
    AffineElement operator-(const AffineElement& o) const;
    AffineElement operator*(const Scalar& c) const;
    bool operator==(const AffineElement& o) const { return terms_ == o.terms_; }

private:
    std::map<Generator, Scalar> terms_;
};

class AffineAlgebra {
public:
    explicit AffineAlgebra(RootDatum datum, Cocycle cocycle = Cocycle::standard)
        : datum_(std::move(datum)), cocycle_(cocycle) {}

    const RootDatum& datum() const { return datum_; }
    Cocycle cocycle() const { return cocycle_; }

    AffineElement bracket(const Generator& a, const Generator& b) const;
    AffineElement bracket(const AffineElement& a, const AffineElement& b) const;

    /// True iff g = X_alpha (x) t^j with alpha in Phi_n.
    bool in_loop_nilradical(const Generator& g) const;

    /// "X[a1]@t^3", "H[1]@t^-2", "c", "d"
    std::string render(const Generator& g) const;
    std::string render(const AffineElement& e) const;
    /// Inverse of render(Generator); "X[a1]" means exponent 0.
    Generator parse_generator(const std::string& text) const;

private:
    RootDatum datum_;
    Cocycle cocycle_;
};

} // namespace affwhit::affine
