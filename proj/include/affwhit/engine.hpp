#pragma once

/**
 * @file engine.hpp
 * @brief Induced Whittaker modules M(Lambda, theta) and their Whittaker vectors.
 *
 * M(Lambda, theta) = U_theta (x)_{U(L(n))} Q_Lambda, where c acts as theta,
 * X_alpha (x) t^j acts on the cyclic vector 1 as Lambda(alpha)_j for alpha
 * in Phi^0_n and as 0 for alpha in Phi^1_n.  By PBW the module has a basis
 * of standard monomials u_1 u_2 ... u_m . 1 in the generators outside L(n)
 * (and other than c), with u_1 <= u_2 <= ... <= u_m in the generator order:
 *
 *   roots first (root_order on weights, d has weight 0),
 *   then the t-exponent, then the Cartan index,
 *   and d above every weight-0 loop generator.
 *
 * The action straightens g . u_1 ... u_m . 1 by commuting g to the right:
 *
 *   g u_1 R = u_1 (g R) + [g, u_1] R
 *
 * until g may be prepended (g <= u_1, g not in L(n)) or reaches 1.
 */

#include "affwhit/affine.hpp"
#include "affwhit/seqspace.hpp"

#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace affwhit::engine {

using affine::AffineAlgebra;
using affine::AffineElement;
using affine::Cocycle;
using affine::Generator;
using roots::Root;
using roots::RootDatum;
using seq::BiSequence;

enum class Mode { affine, loop_only };

Mode parse_mode(const std::string& s);
const char* to_string(Mode m);

struct WhittakerSpec {
    RootDatum datum;
    std::map<Root, BiSequence> lambda;  // keyed by Phi^0_n
    Scalar theta = 0;
    Mode mode = Mode::affine;
    Cocycle cocycle = Cocycle::standard;
};

/// Standard monomial; factors stored expanded and nondecreasing.
class PbwMonomial {
public:
    PbwMonomial() = default;
    explicit PbwMonomial(std::vector<Generator> factors) : factors_(std::move(factors)) {}

    const std::vector<Generator>& factors() const { return factors_; }
    std::size_t degree() const { return factors_.size(); }
    bool is_one() const { return factors_.empty(); }
    /// Factors grouped as (generator, multiplicity).
    std::vector<std::pair<Generator, int>> powers() const;

    /// Structural order for containers.
    auto operator<=>(const PbwMonomial&) const = default;

private:
    std::vector<Generator> factors_;
};

class ModuleElement {
public:
    ModuleElement() = default;
    ModuleElement(PbwMonomial m, Scalar c = 1);
    static ModuleElement one() { return ModuleElement(PbwMonomial{}); }

    const std::map<PbwMonomial, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(const PbwMonomial& m) const;

    void add(const PbwMonomial& m, const Scalar& c);
    void add_scaled(const ModuleElement& o, const Scalar& c);
    ModuleElement operator+(const ModuleElement& o) const;
    ModuleElement operator-(const ModuleElement& o) const;
    ModuleElement operator*(const Scalar& c) const;
    bool operator==(const ModuleElement& o) const { return terms_ == o.terms_; }

private:
    std::map<PbwMonomial, Scalar> terms_;
};

struct Truncation {
    int max_degree = 0;    // D
    int max_exponent = 0;  // E
    int condition_window = 0;  // J
};

class ZeroElement : public Error {
public:
    ZeroElement() : Error("leading term of the zero element") {}
};

class WhittakerModule {
public:
    explicit WhittakerModule(WhittakerSpec spec);

    const WhittakerSpec& spec() const { return spec_; }
    const AffineAlgebra& algebra() const { return algebra_; }
    const RootDatum& datum() const { return algebra_.datum(); }
    /// Verdict on the image of Lambda; affine mode expects strongly generic.
    const seq::StrongVerdict& lambda_verdict() const { return verdict_; }

    bool is_module_generator(const Generator& g) const;
    std::strong_ordering gen_order(const Generator& a, const Generator& b) const;
    /// Lexicographic on factor lists, a proper prefix being greater.
    std::strong_ordering monomial_order(const PbwMonomial& a, const PbwMonomial& b) const;

    /// Lambda(alpha)_j for alpha in Phi^0_n, 0 for alpha in Phi^1_n.
    Scalar character(const Root& alpha, std::int32_t j) const;

    ModuleElement act(const Generator& g, const ModuleElement& m) const;
    ModuleElement act(const Generator& g, const PbwMonomial& m) const;
    /// Linear extension; the c-component acts as theta.
    ModuleElement act(const AffineElement& x, const ModuleElement& m) const;
    /// Normal form of the product g_1 g_2 ... g_k . 1 for an arbitrary word.
    ModuleElement word(const std::vector<Generator>& gens) const;

    PbwMonomial leading_term(const ModuleElement& m) const;

    /// Module generators with |exponent| <= E, sorted by gen_order.
    std::vector<Generator> generators(int max_exponent) const;
    /// Standard monomials of degree <= D with factors of |exponent| <= E.
    std::vector<PbwMonomial> basis_enumeration(const Truncation& t) const;

    std::string render(const PbwMonomial& m) const;
    std::string render(const ModuleElement& m) const;

    std::size_t cache_size() const;

private:
    struct Key {
        int weight_rank;
        int is_d;
        std::int32_t exp;
        int cartan;
        auto operator<=>(const Key&) const = default;
    };
    Key key(const Generator& g) const;
    ModuleElement compute(const Generator& g, const PbwMonomial& m) const;

    WhittakerSpec spec_;
    AffineAlgebra algebra_;
    seq::StrongVerdict verdict_;
    std::vector<int> weight_rank_;  // by row * n + col; -1 inside the nilradical

    struct CacheKey {
        Generator g;
        PbwMonomial m;
        bool operator==(const CacheKey&) const = default;
    };
    struct CacheHash {
        std::size_t operator()(const CacheKey& k) const;
    };
    mutable std::mutex cache_lock_;
    mutable std::unordered_map<CacheKey, ModuleElement, CacheHash> cache_;
    mutable std::mutex char_lock_;
    mutable std::map<std::pair<Root, std::int32_t>, Scalar> char_cache_;
};

struct SolveResult {
    std::size_t dimension = 0;
    std::vector<ModuleElement> basis;
    std::size_t unknowns = 0;
    std::size_t conditions = 0;  // operators X_alpha (x) t^j imposed
    std::size_t equations = 0;   // scalar equations after expansion
    std::size_t rank = 0;
};

/// Exact nullspace of the Whittaker conditions on span(basis_enumeration(t)):
/// X_alpha (x) t^j acts as Lambda(alpha)_j for alpha in Phi^0_n and as 0 for
/// alpha in Phi^1_n, |j| <= J.  Equations are imposed in the full module.
SolveResult whittaker_solve(const WhittakerModule& m, const Truncation& t);

// ---------------------------------------------------------------- tensors

using TensorKey = std::pair<PbwMonomial, PbwMonomial>;

class TensorElement {
public:
    TensorElement() = default;
    TensorElement(TensorKey k, Scalar c = 1);

    const std::map<TensorKey, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(const TensorKey& k) const;
    void add(const TensorKey& k, const Scalar& c);
    TensorElement operator-(const TensorElement& o) const;
    TensorElement operator*(const Scalar& c) const;
    bool operator==(const TensorElement& o) const { return terms_ == o.terms_; }

private:
    std::map<TensorKey, Scalar> terms_;
};

/// M(Lambda, theta) (x) M(Lambda', theta') over a shared algebra.
class TensorModule {
public:
    TensorModule(const WhittakerModule& left, const WhittakerModule& right);

    const WhittakerModule& left() const { return *left_; }
    const WhittakerModule& right() const { return *right_; }

    /// Diagonal action g(x (x) y) = gx (x) y + x (x) gy; c acts as theta + theta'.
    TensorElement act(const Generator& g, const TensorElement& e) const;
    Scalar character(const Root& alpha, std::int32_t j) const;
    /// Strong-genericity verdict on the union of both images.
    seq::StrongVerdict union_verdict() const;

    std::string render(const TensorElement& e) const;

private:
    const WhittakerModule* left_;
    const WhittakerModule* right_;
};

struct TensorSolveResult {
    std::size_t dimension = 0;
    std::vector<TensorElement> basis;
    std::size_t unknowns = 0;
    std::size_t conditions = 0;
    std::size_t equations = 0;
    std::size_t rank = 0;
};

TensorSolveResult tensor_whittaker_solve(const TensorModule& t, const Truncation& trunc);

/// Checks on v (x) w that X_alpha (x) t^j acts as Lambda(alpha)_j + Lambda'(alpha)_j
/// for alpha in Phi^0_n, as 0 for alpha in Phi^1_n (|j| <= bound), and that
/// c acts as theta + theta'.
bool tensor_additivity(const TensorModule& t, int bound);

} // namespace affwhit::engine
