#pragma once

/**
 * @file seqspace.hpp
 * @brief The space Q^Z of bi-infinite sequences and its predual V.
 *
 * V has basis {v_i : i in Z}; a FinVector is a finite combination of the
 * v_i.  A BiSequence a = (a_i) is a linear functional on V via
 * <a, v> = sum_i a_i v_i.  Z acts on both sides by index shifts:
 *
 *   n . v_i      = v_{i+n}         (FinVector::translate)
 *   n . (a_i)    = (a_{i+n})       (translate(BiSequence, n))
 *
 * so that <a^{(n)}, v> = <a, v^{(n)}>.
 *
 * Sequences come in a closed set of classes with exact closed forms:
 *
 *   finite      finitely supported
 *   geometric   a(j)_i = j^i for i > 0 and 0 otherwise, rational j > 1
 *   recurrence  two-sided solution of sum_k v_k a_{i+k} = 0 for a FinVector v
 *               with l(v) = 0, determined by a_0 .. a_{w(v)-1}
 *   derived     p(i) * b_{i+s} for a geometric or recurrence base b, an
 *               integer shift s and a polynomial p (translates, weighted
 *               sequences and rescalings of the infinite classes)
 *
 * Constructors normalize: translating or rescaling a finite or recurrence
 * sequence stays in its class; the zero sequence is always `finite`.
 */

#include "affwhit/scalar.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace affwhit::seq {

using Index = std::int64_t;

/// Element of V: finitely many nonzero coefficients at integer positions.
class FinVector {
public:
    FinVector() = default;
    explicit FinVector(std::map<Index, Scalar> coeffs);

    static FinVector unit(Index i, Scalar c = 1);

    bool is_zero() const { return coeffs_.empty(); }
    /// l(v), r(v) and w(v) = r(v) - l(v); v must be nonzero.
    Index low() const;
    Index high() const;
    Index width() const { return high() - low(); }

    Scalar coeff(Index i) const;
    const std::map<Index, Scalar>& coeffs() const { return coeffs_; }

    /// n . v_i = v_{i+n}
    FinVector translate(Index n) const;
    /// Translate so that l(v) = 0.
    FinVector normalized() const { return translate(-low()); }

    FinVector operator+(const FinVector& o) const;
    FinVector operator-(const FinVector& o) const;
    FinVector operator*(const Scalar& c) const;
    /// Product in the Laurent polynomial ring Q[t, t^-1], v_i <-> t^i.
    FinVector convolve(const FinVector& o) const;

    bool operator==(const FinVector& o) const { return coeffs_ == o.coeffs_; }

    /// e.g. "v_0 - v_1", "0" for the zero vector.
    std::string str() const;

private:
    std::map<Index, Scalar> coeffs_;
};

enum class SeqKind { finite, geometric, recurrence, derived };

class BiSequence {
public:
    /// The zero sequence.
    BiSequence();

    static BiSequence finite(std::map<Index, Scalar> entries);
    static BiSequence delta(Index at, Scalar c = 1);
    /// a(j); j must be rational and > 1.
    static BiSequence geometric(Scalar j);
    /// The two-sided sequence annihilated by all translates of `v`, with
    /// a_0 .. a_{w(v)-1} = `initial`.  `v` is normalized to l(v) = 0.
    static BiSequence recurrence(const FinVector& v, std::vector<Scalar> initial);
    static BiSequence constant(Scalar c);
    /// p(i) * base_{i+shift}; p given by ascending coefficients.
    static BiSequence derived(const BiSequence& base, Index shift, std::vector<Scalar> poly);

    SeqKind kind() const;
    bool is_zero() const;
    bool finitely_supported() const { return kind() == SeqKind::finite; }

    Scalar entry(Index i) const;
    std::vector<Scalar> window(Index lo, Index hi) const;

    /// Accessors for the individual classes; each throws Error when the
    /// sequence is of another kind.
    const std::map<Index, Scalar>& finite_entries() const;
    const Scalar& ratio() const;  // geometric
    const FinVector& recurrence_vector() const;
    const std::vector<Scalar>& recurrence_initial() const;
    const BiSequence& derived_base() const;
    Index derived_shift() const;
    const std::vector<Scalar>& derived_poly() const;

    /// Exact structural equality (same class and same defining data).
    bool same_as(const BiSequence& o) const;

    struct Node;

private:
    explicit BiSequence(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

class BothInfiniteSupport : public Error {
public:
    BothInfiniteSupport() : Error("pairing needs at least one finitely supported argument") {}
};

class GenericInput : public Error {
public:
    GenericInput() : Error("sequence is generic: size and annihilators are undefined") {}
};

class DegenerateAnnihilator : public Error {
public:
    using Error::Error;
};

BiSequence translate(const BiSequence& s, Index n);
inline FinVector translate(const FinVector& v, Index n) { return v.translate(n); }

BiSequence scale(const BiSequence& s, const Scalar& c);
BiSequence negate(const BiSequence& s);
/// (i * a_i)_i
BiSequence weighted(const BiSequence& s);

/// sum_i x_i y_i; throws BothInfiniteSupport when neither side is finite.
Scalar pairing(const BiSequence& x, const BiSequence& y);
/// <a, v>
Scalar pairing(const BiSequence& a, const FinVector& v);

struct GenericVerdict {
    enum class Kind { generic, not_generic, unknown };
    Kind kind;
    /// A nonzero v all of whose translates `s` annihilates (not_generic only).
    std::optional<FinVector> witness;
};

GenericVerdict is_generic(const BiSequence& s);

struct StrongVerdict {
    enum class Kind { strongly_generic, not_strongly_generic, unknown };
    Kind kind;
    std::string reason;
};

/// Exact strong-genericity verdict for the multiset Q where this library can
/// decide it; `unknown` otherwise (see window_rank_check for evidence).
StrongVerdict is_strongly_generic_set(const std::vector<BiSequence>& q);

struct WindowRank {
    bool full_rank;
    std::size_t rank;
    std::size_t count;
};

/// Exact rank of the rows (x^{(s)}_i)_{|i| <= coord_window} for x in Q and
/// |s| <= shift_bound, plus the rows of weighted(x) when requested.
WindowRank window_rank_check(const std::vector<BiSequence>& q, Index shift_bound,
                             Index coord_window, bool include_weighted);

/// Minimal-width annihilator of a non-generic sequence, with l(v) = 0.
/// Found by Hankel rank minimization over 2w+1 consecutive entries, w the
/// width of the witness from is_generic.  Throws GenericInput.
FinVector minimal_annihilator(const BiSequence& s);

/// Size of a non-generic sequence: width of its minimal annihilator.
Index size(const BiSequence& s);

/// Translates of the minimal annihilator supported in [lo, hi]; a basis of
/// the part of s^perp living in that window.
std::vector<FinVector> annihilator_basis_window(const BiSequence& s, Index lo, Index hi);

/// The unique sequence annihilated by all translates of v with the given
/// first w(v) entries.
BiSequence reconstruct(const FinVector& v, std::vector<Scalar> initial);

const char* to_string(GenericVerdict::Kind k);
const char* to_string(StrongVerdict::Kind k);

} // namespace affwhit::seq
