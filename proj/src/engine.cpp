#include "affwhit/engine.hpp"

#include "affwhit/linalg.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace affwhit::engine {

Mode parse_mode(const std::string& s) {
    if (s == "affine") return Mode::affine;
    if (s == "loop-only" || s == "loop_only") return Mode::loop_only;
    throw ParseError("unknown mode '" + s + "' (expected affine|loop-only)");
}

const char* to_string(Mode m) { return m == Mode::affine ? "affine" : "loop-only"; }

// ------------------------------------------------------------- PbwMonomial

std::vector<std::pair<Generator, int>> PbwMonomial::powers() const {
    std::vector<std::pair<Generator, int>> out;
    for (const auto& g : factors_) {
        if (!out.empty() && out.back().first == g)
            ++out.back().second;
        else
            out.emplace_back(g, 1);
    }
    return out;
}

// ----------------------------------------------------------- ModuleElement

ModuleElement::ModuleElement(PbwMonomial m, Scalar c) {
    if (c != 0) terms_.emplace(std::move(m), std::move(c));
}

Scalar ModuleElement::coeff(const PbwMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void ModuleElement::add(const PbwMonomial& m, const Scalar& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void ModuleElement::add_scaled(const ModuleElement& o, const Scalar& c) {
    if (c == 0) return;
    for (const auto& [m, x] : o.terms_) add(m, x * c);
}

ModuleElement ModuleElement::operator+(const ModuleElement& o) const {
    ModuleElement r = *this;
    r.add_scaled(o, Scalar(1));
    return r;
}

ModuleElement ModuleElement::operator-(const ModuleElement& o) const {
    ModuleElement r = *this;
    r.add_scaled(o, Scalar(-1));
    return r;
}

ModuleElement ModuleElement::operator*(const Scalar& c) const {
    ModuleElement r;
    r.add_scaled(*this, c);
    return r;
}

// --------------------------------------------------------- WhittakerModule

namespace {

std::vector<BiSequence> image(const WhittakerSpec& spec) {
    std::vector<BiSequence> out;
    for (const auto& [root, s] : spec.lambda) out.push_back(s);
    return out;
}

} // namespace

WhittakerModule::WhittakerModule(WhittakerSpec spec)
    : spec_(std::move(spec)),
      algebra_(spec_.datum, spec_.mode == Mode::loop_only ? Cocycle::none : spec_.cocycle),
      verdict_(seq::is_strongly_generic_set(image(spec_))) {
    const auto& phi0 = datum().nil_roots0();
    for (const auto& r : phi0)
        if (!spec_.lambda.count(r)) throw Error("Lambda has no value on root " + r.label());
    for (const auto& [r, s] : spec_.lambda)
        if (!datum().in_nil0(r)) throw Error("Lambda is defined on " + r.label() + ", which is not in Phi^0_n");

    const int n = datum().n();
    weight_rank_.assign(static_cast<std::size_t>(n * n), -1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j && i == n - 1) continue;
            roots::Basis b = i == j ? roots::Basis::cartan(i + 1) : roots::Basis::root_vector(i, j);
            if (datum().in_nilradical(b)) continue;
            weight_rank_[static_cast<std::size_t>(i * n + j)] = datum().root_rank(datum().root_of(b));
        }
}

bool WhittakerModule::is_module_generator(const Generator& g) const {
    if (g.is_central()) return false;
    if (g.is_derivation()) return spec_.mode == Mode::affine;
    return weight_rank_[static_cast<std::size_t>(g.basis.row * datum().n() + g.basis.col)] >= 0;
}

WhittakerModule::Key WhittakerModule::key(const Generator& g) const {
    if (!is_module_generator(g))
        throw roots::OutOfDomain(algebra_.render(g) + " is not a generator of the induced module");
    if (g.is_derivation())
        return {datum().root_rank(datum().root_of(roots::Basis::cartan(1))), 1, 0, 0};
    int rank = weight_rank_[static_cast<std::size_t>(g.basis.row * datum().n() + g.basis.col)];
    return {rank, 0, g.exp, g.basis.is_cartan() ? g.basis.cartan_index() : 0};
}

std::strong_ordering WhittakerModule::gen_order(const Generator& a, const Generator& b) const {
    return key(a) <=> key(b);
}

std::strong_ordering WhittakerModule::monomial_order(const PbwMonomial& a, const PbwMonomial& b) const {
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    const std::size_t common = std::min(fa.size(), fb.size());
    for (std::size_t k = 0; k < common; ++k)
        if (auto c = gen_order(fa[k], fb[k]); c != 0) return c;
    // a proper prefix is the greater monomial; 1 is the maximum
    return fb.size() <=> fa.size();
}

Scalar WhittakerModule::character(const Root& alpha, std::int32_t j) const {
    if (!datum().in_nil0(alpha)) return Scalar(0);
    std::lock_guard lock(char_lock_);
    auto key = std::make_pair(alpha, j);
    auto it = char_cache_.find(key);
    if (it != char_cache_.end()) return it->second;
    Scalar v = spec_.lambda.at(alpha).entry(j);
    char_cache_.emplace(key, v);
    return v;
}

std::size_t WhittakerModule::CacheHash::operator()(const CacheKey& k) const {
    auto mix = [](std::size_t h, std::size_t v) { return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)); };
    auto gh = [](const Generator& g) {
        return (static_cast<std::size_t>(g.kind) << 48) ^ (static_cast<std::size_t>(g.basis.row) << 40) ^
               (static_cast<std::size_t>(g.basis.col) << 32) ^ static_cast<std::uint32_t>(g.exp);
    };
    std::size_t h = gh(k.g);
    for (const auto& f : k.m.factors()) h = mix(h, gh(f));
    return h;
}

std::size_t WhittakerModule::cache_size() const {
    std::lock_guard lock(cache_lock_);
    return cache_.size();
}

ModuleElement WhittakerModule::act(const Generator& g, const PbwMonomial& m) const {
    CacheKey ck{g, m};
    {
        std::lock_guard lock(cache_lock_);
        auto it = cache_.find(ck);
        if (it != cache_.end()) return it->second;
    }
    ModuleElement out = compute(g, m);
    std::lock_guard lock(cache_lock_);
    cache_.emplace(std::move(ck), out);
    return out;
}

ModuleElement WhittakerModule::compute(const Generator& g, const PbwMonomial& m) const {
    if (spec_.mode == Mode::loop_only && !g.is_loop())
        throw Error("c and d are not part of the loop algebra");
    if (g.is_central()) return ModuleElement(m, spec_.theta);

    const auto& f = m.factors();
    const bool generator = is_module_generator(g);
    if (f.empty()) {
        if (generator) return ModuleElement(PbwMonomial({g}));
        return ModuleElement(m, character(datum().root_of(g.basis), g.exp));
    }
    if (generator && key(g) <= key(f.front())) {
        std::vector<Generator> out;
        out.reserve(f.size() + 1);
        out.push_back(g);
        out.insert(out.end(), f.begin(), f.end());
        return ModuleElement(PbwMonomial(std::move(out)));
    }

    // g u_1 R = u_1 (g R) + [g, u_1] R
    const Generator& head = f.front();
    PbwMonomial rest(std::vector<Generator>(f.begin() + 1, f.end()));
    ModuleElement out;
    const ModuleElement inner = act(g, rest);
    for (const auto& [mono, c] : inner.terms()) out.add_scaled(act(head, mono), c);
    const AffineElement commutator = algebra_.bracket(g, head);
    for (const auto& [h, c] : commutator.terms()) {
        if (h.is_central())
            out.add(rest, c * spec_.theta);
        else
            out.add_scaled(act(h, rest), c);
    }
    return out;
}

ModuleElement WhittakerModule::act(const Generator& g, const ModuleElement& m) const {
    ModuleElement out;
    for (const auto& [mono, c] : m.terms()) out.add_scaled(act(g, mono), c);
    return out;
}

ModuleElement WhittakerModule::act(const AffineElement& x, const ModuleElement& m) const {
    ModuleElement out;
    for (const auto& [g, c] : x.terms()) {
        if (g.is_central())
            out.add_scaled(m, c * spec_.theta);
        else
            out.add_scaled(act(g, m), c);
    }
    return out;
}

ModuleElement WhittakerModule::word(const std::vector<Generator>& gens) const {
    ModuleElement v = ModuleElement::one();
    for (auto it = gens.rbegin(); it != gens.rend(); ++it) v = act(*it, v);
    return v;
}

PbwMonomial WhittakerModule::leading_term(const ModuleElement& m) const {
    if (m.is_zero()) throw ZeroElement();
    const PbwMonomial* best = nullptr;
    for (const auto& [mono, c] : m.terms())
        if (!best || monomial_order(mono, *best) < 0) best = &mono;
    return *best;
}

std::vector<Generator> WhittakerModule::generators(int max_exponent) const {
    std::vector<Generator> out;
    for (const auto& b : datum().basis()) {
        if (datum().in_nilradical(b)) continue;
        for (int e = -max_exponent; e <= max_exponent; ++e) out.push_back(Generator::loop(b, e));
    }
    if (spec_.mode == Mode::affine) out.push_back(Generator::derivation());
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
    return out;
}

std::vector<PbwMonomial> WhittakerModule::basis_enumeration(const Truncation& t) const {
    const auto gens = generators(t.max_exponent);
    std::vector<PbwMonomial> out;
    std::vector<Generator> current;
    std::function<void(std::size_t, int)> extend = [&](std::size_t from, int remaining) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (std::size_t k = from; k < gens.size(); ++k) {
            current.push_back(gens[k]);
            extend(k, remaining - 1);
            current.pop_back();
        }
    };
    for (int deg = 0; deg <= t.max_degree; ++deg) extend(0, deg);
    return out;
}

std::string WhittakerModule::render(const PbwMonomial& m) const {
    if (m.is_one()) return "1";
    std::string out;
    for (const auto& [g, k] : m.powers()) {
        if (!out.empty()) out += " ";
        out += k == 1 ? algebra_.render(g) : "(" + algebra_.render(g) + ")^" + std::to_string(k);
    }
    return out;
}

std::string WhittakerModule::render(const ModuleElement& m) const {
    if (m.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, c] : m.terms()) {
        if (!first) os << " + ";
        os << "(" << affwhit::to_string(c) << ")*" << render(mono);
        first = false;
    }
    return os.str();
}

// ------------------------------------------------------------------ solver

namespace {

struct Condition {
    Generator gen;
    Root root;
};

std::vector<Condition> conditions(const RootDatum& d, int window) {
    std::vector<Condition> out;
    for (const auto* set : {&d.nil_roots0(), &d.nil_roots1()})
        for (const auto& r : *set)
            for (int j = -window; j <= window; ++j) out.push_back({Generator::loop(d.basis_of(r), j), r});
    return out;
}

} // namespace

SolveResult whittaker_solve(const WhittakerModule& m, const Truncation& t) {
    const auto basis = m.basis_enumeration(t);
    SolveResult res;
    res.unknowns = basis.size();
    linalg::Echelon ech(basis.size());

    for (const auto& cond : conditions(m.datum(), t.condition_window)) {
        ++res.conditions;
        const Scalar target = m.character(cond.root, cond.gen.exp);
        std::map<PbwMonomial, linalg::SparseRow> rows;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            ModuleElement r = m.act(cond.gen, basis[k]);
            r.add(basis[k], -target);
            for (const auto& [mono, c] : r.terms()) rows[mono].emplace(k, c);
        }
        for (auto& [mono, row] : rows) {
            ++res.equations;
            ech.insert(std::move(row));
        }
    }
    res.rank = ech.rank();
    for (const auto& v : ech.nullspace()) {
        ModuleElement e;
        for (const auto& [k, c] : v) e.add(basis[k], c);
        res.basis.push_back(std::move(e));
    }
    res.dimension = res.basis.size();
    return res;
}

// ----------------------------------------------------------------- tensors

TensorElement::TensorElement(TensorKey k, Scalar c) {
    if (c != 0) terms_.emplace(std::move(k), std::move(c));
}

Scalar TensorElement::coeff(const TensorKey& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void TensorElement::add(const TensorKey& k, const Scalar& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TensorElement TensorElement::operator-(const TensorElement& o) const {
    TensorElement r = *this;
    for (const auto& [k, c] : o.terms_) r.add(k, -c);
    return r;
}

TensorElement TensorElement::operator*(const Scalar& c) const {
    TensorElement r;
    for (const auto& [k, x] : terms_) r.add(k, x * c);
    return r;
}

TensorModule::TensorModule(const WhittakerModule& left, const WhittakerModule& right)
    : left_(&left), right_(&right) {
    const auto& a = left.datum();
    const auto& b = right.datum();
    if (a.n() != b.n() || a.levi() != b.levi() || left.spec().mode != right.spec().mode ||
        left.algebra().cocycle() != right.algebra().cocycle())
        throw Error("tensor factors are modules over different algebras");
}

TensorElement TensorModule::act(const Generator& g, const TensorElement& e) const {
    TensorElement out;
    if (g.is_central()) {
        const Scalar level = left_->spec().theta + right_->spec().theta;
        for (const auto& [k, c] : e.terms()) out.add(k, c * level);
        return out;
    }
    for (const auto& [k, c] : e.terms()) {
        const ModuleElement gx = left_->act(g, k.first);
        const ModuleElement gy = right_->act(g, k.second);
        for (const auto& [mono, x] : gx.terms()) out.add({mono, k.second}, c * x);
        for (const auto& [mono, y] : gy.terms()) out.add({k.first, mono}, c * y);
    }
    return out;
}

Scalar TensorModule::character(const Root& alpha, std::int32_t j) const {
    return left_->character(alpha, j) + right_->character(alpha, j);
}

seq::StrongVerdict TensorModule::union_verdict() const {
    auto all = image(left_->spec());
    for (const auto& s : image(right_->spec())) all.push_back(s);
    return seq::is_strongly_generic_set(all);
}

std::string TensorModule::render(const TensorElement& e) const {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : e.terms()) {
        if (!first) os << " + ";
        os << "(" << affwhit::to_string(c) << ")*[" << left_->render(k.first) << " | "
           << right_->render(k.second) << "]";
        first = false;
    }
    return os.str();
}

TensorSolveResult tensor_whittaker_solve(const TensorModule& t, const Truncation& trunc) {
    const auto lb = t.left().basis_enumeration(trunc);
    const auto rb = t.right().basis_enumeration(trunc);
    std::vector<TensorKey> basis;
    for (const auto& a : lb)
        for (const auto& b : rb) basis.emplace_back(a, b);

    TensorSolveResult res;
    res.unknowns = basis.size();
    linalg::Echelon ech(basis.size());
    for (const auto& cond : conditions(t.left().datum(), trunc.condition_window)) {
        ++res.conditions;
        const Scalar target = t.character(cond.root, cond.gen.exp);
        std::map<TensorKey, linalg::SparseRow> rows;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            TensorElement r = t.act(cond.gen, TensorElement(basis[k]));
            r.add(basis[k], -target);
            for (const auto& [key, c] : r.terms()) rows[key].emplace(k, c);
        }
        for (auto& [key, row] : rows) {
            ++res.equations;
            ech.insert(std::move(row));
        }
    }
    res.rank = ech.rank();
    for (const auto& v : ech.nullspace()) {
        TensorElement e;
        for (const auto& [k, c] : v) e.add(basis[k], c);
        res.basis.push_back(std::move(e));
    }
    res.dimension = res.basis.size();
    return res;
}

bool tensor_additivity(const TensorModule& t, int bound) {
    const TensorElement vw(TensorKey{PbwMonomial{}, PbwMonomial{}});
    const Scalar level = t.left().spec().theta + t.right().spec().theta;
    if (t.left().spec().mode == Mode::affine && !(t.act(Generator::central(), vw) == vw * level)) return false;
    for (const auto& cond : conditions(t.left().datum(), bound)) {
        const Scalar expected = t.character(cond.root, cond.gen.exp);
        if (!(t.act(cond.gen, vw) == vw * expected)) return false;
    }
    return true;
}

} // namespace affwhit::engine
