#include "affwhit/seqspace.hpp"

#include "affwhit/linalg.hpp"

#include <mutex>
#include <sstream>
#include <variant>

namespace affwhit::seq {

// ---------------------------------------------------------------- FinVector

FinVector::FinVector(std::map<Index, Scalar> coeffs) : coeffs_(std::move(coeffs)) {
    std::erase_if(coeffs_, [](const auto& kv) { return kv.second == 0; });
}

FinVector FinVector::unit(Index i, Scalar c) { return FinVector({{i, std::move(c)}}); }

Index FinVector::low() const {
    if (coeffs_.empty()) throw Error("l(v) of the zero vector");
    return coeffs_.begin()->first;
}

Index FinVector::high() const {
    if (coeffs_.empty()) throw Error("r(v) of the zero vector");
    return coeffs_.rbegin()->first;
}

Scalar FinVector::coeff(Index i) const {
    auto it = coeffs_.find(i);
    return it == coeffs_.end() ? Scalar(0) : it->second;
}

FinVector FinVector::translate(Index n) const {
    std::map<Index, Scalar> out;
    for (const auto& [i, c] : coeffs_) out.emplace_hint(out.end(), i + n, c);
    FinVector v;
    v.coeffs_ = std::move(out);
    return v;
}

FinVector FinVector::operator+(const FinVector& o) const {
    auto out = coeffs_;
    for (const auto& [i, c] : o.coeffs_) out[i] += c;
    return FinVector(std::move(out));
}

FinVector FinVector::operator-(const FinVector& o) const { return *this + o * Scalar(-1); }

FinVector FinVector::operator*(const Scalar& c) const {
    std::map<Index, Scalar> out;
    for (const auto& [i, x] : coeffs_) out.emplace_hint(out.end(), i, x * c);
    return FinVector(std::move(out));
}

FinVector FinVector::convolve(const FinVector& o) const {
    std::map<Index, Scalar> out;
    for (const auto& [i, x] : coeffs_)
        for (const auto& [k, y] : o.coeffs_) out[i + k] += x * y;
    return FinVector(std::move(out));
}

std::string FinVector::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, c] : coeffs_) {
        Scalar mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        if (mag != 1) os << affwhit::to_string(mag) << "*";
        os << "v_" << i;
        first = false;
    }
    return os.str();
}

// ------------------------------------------------------------ polynomials

namespace {

using Poly = std::vector<Scalar>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Scalar eval(const Poly& p, Index i) {
    Scalar acc = 0, x = Scalar(static_cast<long>(i));
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly multiply(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) out[i + k] += a[i] * b[k];
    trim(out);
    return out;
}

// q(i) = p(i + n)
Poly shift_argument(const Poly& p, Index n) {
    Poly out(p.size(), Scalar(0));
    Scalar step = Scalar(static_cast<long>(n));
    // Horner in the shifted variable: p(i+n) = (...(c_d (i+n) + c_{d-1})(i+n) ...)
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        Poly next(out.size(), Scalar(0));
        for (std::size_t k = 0; k + 1 < out.size(); ++k) next[k + 1] += out[k];
        for (std::size_t k = 0; k < out.size(); ++k) next[k] += out[k] * step;
        next[0] += *it;
        out = std::move(next);
    }
    trim(out);
    return out;
}

bool is_constant(const Poly& p) { return p.size() <= 1; }

} // namespace

// ---------------------------------------------------------------- nodes

struct FiniteData {
    std::map<Index, Scalar> entries;
};

struct GeometricData {
    Scalar j;
};

struct RecurrenceData {
    FinVector v;
    std::vector<Scalar> initial;
    mutable std::mutex memo_lock;
    mutable std::vector<Scalar> forward;   // a_0, a_1, ...
    mutable std::vector<Scalar> backward;  // a_{-1}, a_{-2}, ...

    RecurrenceData(FinVector vv, std::vector<Scalar> init)
        : v(std::move(vv)), initial(std::move(init)), forward(initial) {}

    Scalar at(Index i) const {
        std::lock_guard lock(memo_lock);
        const Index w = v.width();
        auto known = [&](Index k) -> const Scalar& {
            return k >= 0 ? forward[static_cast<std::size_t>(k)]
                          : backward[static_cast<std::size_t>(-k - 1)];
        };
        if (i >= 0) {
            const Scalar& top = v.coeff(w);
            while (static_cast<Index>(forward.size()) <= i) {
                Index n = static_cast<Index>(forward.size());
                Scalar acc = 0;
                for (const auto& [k, c] : v.coeffs())
                    if (k < w) acc += c * known(n - w + k);
                forward.push_back(-acc / top);
            }
            return forward[static_cast<std::size_t>(i)];
        }
        const Scalar& bottom = v.coeff(0);
        while (static_cast<Index>(backward.size()) < -i) {
            Index n = -static_cast<Index>(backward.size()) - 1;
            Scalar acc = 0;
            for (const auto& [k, c] : v.coeffs())
                if (k > 0) acc += c * known(n + k);
            backward.push_back(-acc / bottom);
        }
        return backward[static_cast<std::size_t>(-i - 1)];
    }
};

struct DerivedData {
    BiSequence base;
    Index shift;
    Poly poly;
};

struct BiSequence::Node {
    std::variant<FiniteData, GeometricData, RecurrenceData, DerivedData> data;

    template <class T, class... Args>
    explicit Node(std::in_place_type_t<T> t, Args&&... args)
        : data(t, std::forward<Args>(args)...) {}
};

BiSequence::BiSequence()
    : node_(std::make_shared<const Node>(std::in_place_type<FiniteData>)) {}

BiSequence BiSequence::finite(std::map<Index, Scalar> entries) {
    std::erase_if(entries, [](const auto& kv) { return kv.second == 0; });
    return BiSequence(std::make_shared<const Node>(std::in_place_type<FiniteData>,
                                                   FiniteData{std::move(entries)}));
}

BiSequence BiSequence::delta(Index at, Scalar c) { return finite({{at, std::move(c)}}); }

BiSequence BiSequence::geometric(Scalar j) {
    if (j <= 1) throw Error("geometric ratio must be > 1, got " + affwhit::to_string(j));
    return BiSequence(std::make_shared<const Node>(std::in_place_type<GeometricData>,
                                                   GeometricData{std::move(j)}));
}

BiSequence BiSequence::recurrence(const FinVector& v, std::vector<Scalar> initial) {
    if (v.is_zero()) throw DegenerateAnnihilator("annihilator must be nonzero");
    FinVector nv = v.normalized();
    const auto w = static_cast<std::size_t>(nv.width());
    if (w == 0) {
        if (!initial.empty())
            throw DegenerateAnnihilator("width-0 annihilator only admits the zero sequence");
        return BiSequence();
    }
    if (initial.size() != w)
        throw Error("recurrence needs exactly w(v) = " + std::to_string(w) +
                    " initial values, got " + std::to_string(initial.size()));
    bool all_zero = true;
    for (const auto& x : initial) all_zero = all_zero && x == 0;
    if (all_zero) return BiSequence();
    return BiSequence(std::make_shared<const Node>(std::in_place_type<RecurrenceData>,
                                                   std::move(nv), std::move(initial)));
}

BiSequence BiSequence::constant(Scalar c) {
    return recurrence(FinVector({{0, Scalar(1)}, {1, Scalar(-1)}}), {std::move(c)});
}

BiSequence BiSequence::derived(const BiSequence& base, Index shift, std::vector<Scalar> poly) {
    trim(poly);
    if (poly.empty() || base.is_zero()) return BiSequence();
    if (shift == 0 && poly.size() == 1 && poly[0] == 1) return base;

    return std::visit(
        [&](const auto& d) -> BiSequence {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, FiniteData>) {
                std::map<Index, Scalar> out;
                for (const auto& [k, x] : d.entries) out.emplace(k - shift, eval(poly, k - shift) * x);
                return finite(std::move(out));
            } else if constexpr (std::is_same_v<T, RecurrenceData>) {
                if (is_constant(poly)) {
                    std::vector<Scalar> init;
                    for (Index k = 0; k < d.v.width(); ++k) init.push_back(poly[0] * d.at(shift + k));
                    return recurrence(d.v, std::move(init));
                }
                return BiSequence(std::make_shared<const Node>(
                    std::in_place_type<DerivedData>, DerivedData{base, shift, std::move(poly)}));
            } else if constexpr (std::is_same_v<T, GeometricData>) {
                return BiSequence(std::make_shared<const Node>(
                    std::in_place_type<DerivedData>, DerivedData{base, shift, std::move(poly)}));
            } else {
                // p(i) * [q(i+shift) * B(i+shift+s')]
                return derived(d.base, shift + d.shift, multiply(poly, shift_argument(d.poly, shift)));
            }
        },
        base.node_->data);
}

SeqKind BiSequence::kind() const { return static_cast<SeqKind>(node_->data.index()); }

bool BiSequence::is_zero() const {
    auto f = std::get_if<FiniteData>(&node_->data);
    return f && f->entries.empty();
}

Scalar BiSequence::entry(Index i) const {
    return std::visit(
        [&](const auto& d) -> Scalar {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, FiniteData>) {
                auto it = d.entries.find(i);
                return it == d.entries.end() ? Scalar(0) : it->second;
            } else if constexpr (std::is_same_v<T, GeometricData>) {
                return i > 0 ? affwhit::pow(d.j, static_cast<unsigned long>(i)) : Scalar(0);
            } else if constexpr (std::is_same_v<T, RecurrenceData>) {
                return d.at(i);
            } else {
                Scalar p = eval(d.poly, i);
                return p == 0 ? p : p * d.base.entry(i + d.shift);
            }
        },
        node_->data);
}

std::vector<Scalar> BiSequence::window(Index lo, Index hi) const {
    std::vector<Scalar> out;
    for (Index i = lo; i <= hi; ++i) out.push_back(entry(i));
    return out;
}

namespace {
template <class T>
const T& expect(const BiSequence::Node& n, const char* what) {
    auto p = std::get_if<T>(&n.data);
    if (!p) throw Error(std::string("sequence is not ") + what);
    return *p;
}
} // namespace

const std::map<Index, Scalar>& BiSequence::finite_entries() const {
    return expect<FiniteData>(*node_, "finitely supported").entries;
}
const Scalar& BiSequence::ratio() const { return expect<GeometricData>(*node_, "geometric").j; }
const FinVector& BiSequence::recurrence_vector() const {
    return expect<RecurrenceData>(*node_, "a recurrence").v;
}
const std::vector<Scalar>& BiSequence::recurrence_initial() const {
    return expect<RecurrenceData>(*node_, "a recurrence").initial;
}
const BiSequence& BiSequence::derived_base() const {
    return expect<DerivedData>(*node_, "derived").base;
}
Index BiSequence::derived_shift() const { return expect<DerivedData>(*node_, "derived").shift; }
const std::vector<Scalar>& BiSequence::derived_poly() const {
    return expect<DerivedData>(*node_, "derived").poly;
}

bool BiSequence::same_as(const BiSequence& o) const {
    if (node_ == o.node_) return true;
    if (kind() != o.kind()) return false;
    switch (kind()) {
    case SeqKind::finite: return finite_entries() == o.finite_entries();
    case SeqKind::geometric: return ratio() == o.ratio();
    case SeqKind::recurrence:
        return recurrence_vector() == o.recurrence_vector() &&
               recurrence_initial() == o.recurrence_initial();
    case SeqKind::derived:
        return derived_shift() == o.derived_shift() && derived_poly() == o.derived_poly() &&
               derived_base().same_as(o.derived_base());
    }
    return false;
}

// ------------------------------------------------------------ operations

BiSequence translate(const BiSequence& s, Index n) { return BiSequence::derived(s, n, {Scalar(1)}); }
BiSequence scale(const BiSequence& s, const Scalar& c) { return BiSequence::derived(s, 0, {c}); }
BiSequence negate(const BiSequence& s) { return scale(s, Scalar(-1)); }
BiSequence weighted(const BiSequence& s) { return BiSequence::derived(s, 0, {Scalar(0), Scalar(1)}); }

Scalar pairing(const BiSequence& x, const BiSequence& y) {
    const BiSequence* fin = x.finitely_supported() ? &x : y.finitely_supported() ? &y : nullptr;
    if (!fin) throw BothInfiniteSupport();
    const BiSequence& other = fin == &x ? y : x;
    Scalar acc = 0;
    for (const auto& [i, c] : fin->finite_entries()) acc += c * other.entry(i);
    return acc;
}

Scalar pairing(const BiSequence& a, const FinVector& v) {
    Scalar acc = 0;
    for (const auto& [i, c] : v.coeffs()) acc += c * a.entry(i);
    return acc;
}

GenericVerdict is_generic(const BiSequence& s) {
    using K = GenericVerdict::Kind;
    switch (s.kind()) {
    case SeqKind::finite:
        if (s.is_zero()) return {K::not_generic, FinVector::unit(0)};
        return {K::generic, std::nullopt};
    case SeqKind::geometric: return {K::generic, std::nullopt};
    case SeqKind::recurrence: return {K::not_generic, s.recurrence_vector()};
    case SeqKind::derived: {
        const auto& base = s.derived_base();
        const auto& poly = s.derived_poly();
        if (base.kind() == SeqKind::geometric)
            return is_constant(poly) ? GenericVerdict{K::generic, std::nullopt}
                                     : GenericVerdict{K::unknown, std::nullopt};
        // q(i) * b_{i+s} with deg q = d is annihilated by the (d+1)-st
        // convolution power of b's annihilator.
        FinVector w = base.recurrence_vector();
        FinVector acc = w;
        for (std::size_t k = 1; k < poly.size(); ++k) acc = acc.convolve(w);
        return {K::not_generic, acc};
    }
    }
    return {K::unknown, std::nullopt};
}

namespace {

// ratio j when s is a nonzero multiple of a translate of a(j)
std::optional<Scalar> geometric_key(const BiSequence& s) {
    if (s.kind() == SeqKind::geometric) return s.ratio();
    if (s.kind() == SeqKind::derived && s.derived_base().kind() == SeqKind::geometric &&
        is_constant(s.derived_poly()))
        return s.derived_base().ratio();
    return std::nullopt;
}

} // namespace

StrongVerdict is_strongly_generic_set(const std::vector<BiSequence>& q) {
    using K = StrongVerdict::Kind;
    if (q.empty()) return {K::strongly_generic, "empty set"};

    std::size_t finite_count = 0;
    std::vector<std::pair<Scalar, std::size_t>> geometric;
    for (std::size_t k = 0; k < q.size(); ++k) {
        auto g = is_generic(q[k]);
        if (g.kind == GenericVerdict::Kind::not_generic)
            return {K::not_strongly_generic,
                    "element " + std::to_string(k) + " is not generic (annihilated by translates of " +
                        g.witness->str() + ")"};
        if (q[k].finitely_supported()) ++finite_count;
        if (auto j = geometric_key(q[k])) geometric.emplace_back(*j, k);
    }
    if (finite_count >= 2)
        return {K::not_strongly_generic,
                "two finitely supported elements x, y satisfy y(T) x - x(T) y = 0 for the shift operator T"};
    for (std::size_t a = 0; a < geometric.size(); ++a)
        for (std::size_t b = a + 1; b < geometric.size(); ++b) {
            const auto& [ja, ka] = geometric[a];
            const auto& [jb, kb] = geometric[b];
            if (ja == jb)
                return {K::not_strongly_generic, "elements " + std::to_string(ka) + " and " +
                                                     std::to_string(kb) +
                                                     " are multiples of translates of the same a(" +
                                                     affwhit::to_string(ja) + ")"};
            return {K::not_strongly_generic,
                    "a(j)/j - a(j)^(-1) = delta_1 for every j, so a(" + affwhit::to_string(ja) +
                        ") and a(" + affwhit::to_string(jb) + ") have dependent translates"};
        }

    if (q.size() == 1) {
        const auto& x = q.front();
        if (x.finitely_supported()) {
            // x = t^l q(t) with q(0) != 0: the weighted element t x'(t) is a
            // Laurent multiple of x iff q is constant.
            if (x.finite_entries().size() == 1)
                return {K::not_strongly_generic, "weighted sequence of a delta is a translate multiple"};
            return {K::strongly_generic, "finite support with at least two nonzero entries"};
        }
        if (geometric_key(x)) return {K::strongly_generic, "single geometric family member"};
    }
    return {K::unknown, "not decidable for this combination of classes"};
}

WindowRank window_rank_check(const std::vector<BiSequence>& q, Index shift_bound,
                             Index coord_window, bool include_weighted) {
    if (shift_bound < 0 || coord_window < shift_bound)
        throw Error("window_rank_check needs coord_window >= shift_bound >= 0");
    std::vector<std::vector<Scalar>> rows;
    for (const auto& x : q) {
        for (Index s = -shift_bound; s <= shift_bound; ++s)
            rows.push_back(translate(x, s).window(-coord_window, coord_window));
        if (include_weighted) rows.push_back(weighted(x).window(-coord_window, coord_window));
    }
    std::size_t r = linalg::rank(rows);
    return {r == rows.size(), r, rows.size()};
}

FinVector minimal_annihilator(const BiSequence& s) {
    auto verdict = is_generic(s);
    if (verdict.kind != GenericVerdict::Kind::not_generic) throw GenericInput();
    if (s.is_zero()) return FinVector::unit(0);

    const Index bound = verdict.witness->width();
    const auto entries = s.window(0, 2 * bound);
    for (Index m = 1; m <= bound; ++m) {
        linalg::Echelon ech(static_cast<std::size_t>(m + 1));
        for (Index r = 0; r + m <= 2 * bound; ++r) {
            linalg::SparseRow row;
            for (Index c = 0; c <= m; ++c)
                if (entries[r + c] != 0) row.emplace(c, entries[r + c]);
            ech.insert(std::move(row));
        }
        if (ech.rank() == static_cast<std::size_t>(m + 1)) continue;
        auto kernel = ech.nullspace();
        std::map<Index, Scalar> c;
        for (const auto& [k, x] : kernel.front()) c.emplace(static_cast<Index>(k), x);
        FinVector v(std::move(c));
        if (s.kind() == SeqKind::recurrence && m == s.recurrence_vector().width())
            return s.recurrence_vector();
        return v * (1 / v.coeff(v.high()));
    }
    // unreachable for a genuine witness: the witness itself has width `bound`
    throw Error("minimal annihilator search failed");
}

Index size(const BiSequence& s) { return minimal_annihilator(s).width(); }

std::vector<FinVector> annihilator_basis_window(const BiSequence& s, Index lo, Index hi) {
    FinVector v = minimal_annihilator(s);
    std::vector<FinVector> out;
    for (Index i = lo; i + v.width() <= hi; ++i) out.push_back(v.translate(i));
    return out;
}

BiSequence reconstruct(const FinVector& v, std::vector<Scalar> initial) {
    return BiSequence::recurrence(v, std::move(initial));
}

const char* to_string(GenericVerdict::Kind k) {
    switch (k) {
    case GenericVerdict::Kind::generic: return "Generic";
    case GenericVerdict::Kind::not_generic: return "NotGeneric";
    case GenericVerdict::Kind::unknown: return "Unknown";
    }
    return "?";
}

const char* to_string(StrongVerdict::Kind k) {
    switch (k) {
    case StrongVerdict::Kind::strongly_generic: return "StronglyGeneric";
    case StrongVerdict::Kind::not_strongly_generic: return "NotStronglyGeneric";
    case StrongVerdict::Kind::unknown: return "Unknown";
    }
    return "?";
}

} // namespace affwhit::seq
