#pragma once

/**
 * @file rootdata.hpp
 * @brief sl(n) in its matrix-unit realization, with a parabolic p = l + n.
 *
 * Roots of sl(n) are e_i - e_j (i != j).  The root vector X_{e_i - e_j} is
 * the elementary matrix E_ij and the Cartan basis is H_k = E_kk - E_{k+1,k+1}.
 * Both are addressed by a `Basis` element: (row, col) with row != col for a
 * root vector and row == col == k-1 for H_k.  All indices are 0-based; the
 * simple roots alpha_1 .. alpha_{n-1} are printed 1-based as a1 .. a{n-1}.
 */

#include "affwhit/scalar.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace affwhit::roots {

/// Coefficients over the simple roots; the all-zero vector is the zero weight.
struct Root {
    std::vector<int> coeffs;

    bool is_zero() const;
    int height() const;
    bool is_positive() const;  // nonzero and all coefficients >= 0
    Root operator-() const;
    Root operator+(const Root& o) const;
    Root operator-(const Root& o) const { return *this + (-o); }
    auto operator<=>(const Root&) const = default;

    /// "a1+a2", "-a2", "0"
    std::string label() const;
};

/// Parses a label produced by Root::label for a datum of the given rank.
Root parse_root(const std::string& label, int rank);

/// Matrix-unit basis element of sl(n).
struct Basis {
    std::int16_t row = 0;
    std::int16_t col = 0;

    bool is_cartan() const { return row == col; }
    /// 1-based Cartan index for H_k.
    int cartan_index() const { return row + 1; }
    auto operator<=>(const Basis&) const = default;

    static Basis root_vector(int i, int j) { return {std::int16_t(i), std::int16_t(j)}; }
    static Basis cartan(int k) { return {std::int16_t(k - 1), std::int16_t(k - 1)}; }
};

/// Sparse combination of basis elements.
class ChevalleyElement {
public:
    ChevalleyElement() = default;
    ChevalleyElement(Basis b, Scalar c = 1);

    const std::map<Basis, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(Basis b) const;

    void add(Basis b, const Scalar& c);
    ChevalleyElement& operator+=(const ChevalleyElement& o);
    ChevalleyElement operator+(const ChevalleyElement& o) const;
    ChevalleyElement operator-(const ChevalleyElement& o) const;
    ChevalleyElement operator*(const Scalar& c) const;
    bool operator==(const ChevalleyElement& o) const { return terms_ == o.terms_; }

private:
    std::map<Basis, Scalar> terms_;
};

class ImproperParabolic : public Error {
public:
    ImproperParabolic() : Error("improper parabolic: the Levi part covers every simple root") {}
};

class OutOfDomain : public Error {
public:
    using Error::Error;
};

/// sl(n) together with the parabolic determined by a set of Levi simple roots.
class RootDatum {
public:
    /// `levi` holds 1-based simple-root indices kept in the Levi factor.
    RootDatum(int n, std::set<int> levi);

    int n() const { return n_; }
    int rank() const { return n_ - 1; }
    const std::set<int>& levi() const { return levi_; }

    const std::vector<Root>& roots() const { return roots_; }
    const std::vector<Root>& nil_roots() const { return nil_; }      // Phi_n
    const std::vector<Root>& nil_roots0() const { return nil0_; }    // Phi^0_n
    const std::vector<Root>& nil_roots1() const { return nil1_; }    // Phi^1_n
    const std::vector<Root>& levi_roots() const { return levi_roots_; }
    /// X_0 .. X_k from the lower central series of n.
    const std::vector<std::vector<Root>>& strata() const { return strata_; }
    /// Index i with root in X_i, or -1.
    int stratum_of(const Root& r) const;

    bool in_nilradical(const Root& r) const { return stratum_of(r) >= 0; }
    bool in_nilradical(Basis b) const { return !b.is_cartan() && in_nilradical(root_of(b)); }
    bool in_nil0(const Root& r) const { return stratum_of(r) == 0; }
    bool is_levi_root(const Root& r) const;

    Root root_of(Basis b) const;  // zero weight for Cartan elements
    Basis basis_of(const Root& r) const;
    Root simple_root(int k) const;

    /// All basis elements: root vectors ordered by root, then H_1 .. H_{n-1}.
    std::vector<Basis> basis() const;

    /// Lie bracket via [E_ij, E_kl] = d_jk E_il - d_li E_kj.
    ChevalleyElement bracket(const ChevalleyElement& x, const ChevalleyElement& y) const;
    ChevalleyElement bracket(Basis a, Basis b) const;
    /// Killing form 2n * tr(xy).
    Scalar killing(const ChevalleyElement& x, const ChevalleyElement& y) const;
    Scalar killing(Basis a, Basis b) const;
    /// alpha(H) for a Cartan basis element H.
    int root_value(const Root& alpha, Basis h) const;

    /// Total order on (Phi u {0}) \ Phi_n: groups -X_k < ... < -X_0 <
    /// (l-roots and 0); inside a group by height, then lexicographically.
    std::strong_ordering root_order(const Root& a, const Root& b) const;
    /// Position of a root under root_order; dense ranks starting at 0.
    int root_rank(const Root& r) const;

    std::string render(Basis b) const;

private:
    int group_of(const Root& r) const;

    int n_;
    std::set<int> levi_;
    std::vector<Root> roots_, nil_, nil0_, nil1_, levi_roots_;
    std::vector<std::vector<Root>> strata_;
    std::map<Root, int> stratum_;
    std::map<Root, int> rank_;
};

} // namespace affwhit::roots
