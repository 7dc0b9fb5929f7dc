#include "affwhit/affine.hpp"

#include <charconv>
#include <sstream>

namespace affwhit::affine {

Cocycle parse_cocycle(const std::string& s) {
    if (s == "standard") return Cocycle::standard;
    if (s == "literal") return Cocycle::literal;
    if (s == "none") return Cocycle::none;
    throw ParseError("unknown cocycle '" + s + "' (expected standard|literal|none)");
}

const char* to_string(Cocycle c) {
    switch (c) {
    case Cocycle::standard: return "standard";
    case Cocycle::literal: return "literal";
    case Cocycle::none: return "none";
    }
    return "?";
}

// ------------------------------------------------------------ AffineElement

AffineElement::AffineElement(Generator g, Scalar c) {
    if (c != 0) terms_.emplace(g, std::move(c));
}

Scalar AffineElement::coeff(const Generator& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void AffineElement::add(const Generator& g, const Scalar& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(g, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

AffineElement& AffineElement::operator+=(const AffineElement& o) {
    for (const auto& [g, c] : o.terms_) add(g, c);
    return *this;
}

AffineElement AffineElement::operator+(const AffineElement& o) const {
    AffineElement r = *this;
    r += o;
    return r;
}

AffineElement AffineElement::operator-(const AffineElement& o) const { return *this + o * Scalar(-1); }

AffineElement AffineElement::operator*(const Scalar& c) const {
    AffineElement r;
    if (c == 0) return r;
    for (const auto& [g, x] : terms_) r.terms_.emplace_hint(r.terms_.end(), g, x * c);
    return r;
}

// ------------------------------------------------------------ AffineAlgebra

AffineElement AffineAlgebra::bracket(const Generator& a, const Generator& b) const {
    AffineElement out;
    if (a.is_central() || b.is_central()) return out;
    if (a.is_derivation() && b.is_derivation()) return out;
    if (a.is_derivation()) return AffineElement(b, Scalar(b.exp));
    if (b.is_derivation()) return AffineElement(a, Scalar(-a.exp));

    const std::int32_t e = a.exp + b.exp;
    const auto fin = datum_.bracket(a.basis, b.basis);
    for (const auto& [basis, c] : fin.terms())
        out.add(Generator::loop(basis, e), c);
    if (e == 0 && cocycle_ != Cocycle::none) {
        Scalar k = datum_.killing(a.basis, b.basis);
        if (cocycle_ == Cocycle::standard) k *= a.exp;
        out.add(Generator::central(), k);
    }
    return out;
}

AffineElement AffineAlgebra::bracket(const AffineElement& a, const AffineElement& b) const {
    AffineElement out;
    for (const auto& [g, cg] : a.terms())
        for (const auto& [h, ch] : b.terms()) out += bracket(g, h) * (cg * ch);
    return out;
}

bool AffineAlgebra::in_loop_nilradical(const Generator& g) const {
    return g.is_loop() && datum_.in_nilradical(g.basis);
}

std::string AffineAlgebra::render(const Generator& g) const {
    switch (g.kind) {
    case Generator::Kind::central: return "c";
    case Generator::Kind::derivation: return "d";
    case Generator::Kind::loop: break;
    }
    return datum_.render(g.basis) + "@t^" + std::to_string(g.exp);
}

std::string AffineAlgebra::render(const AffineElement& e) const {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, c] : e.terms()) {
        Scalar mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        if (mag != 1) os << affwhit::to_string(mag) << "*";
        os << render(g);
        first = false;
    }
    return os.str();
}

Generator AffineAlgebra::parse_generator(const std::string& text) const {
    if (text == "c") return Generator::central();
    if (text == "d") return Generator::derivation();
    auto fail = [&]() -> Generator { throw ParseError("bad generator literal '" + text + "'"); };

    auto close = text.find(']');
    if (text.size() < 4 || text[1] != '[' || close == std::string::npos) return fail();
    std::string inner = text.substr(2, close - 2);
    std::int32_t exp = 0;
    std::string rest = text.substr(close + 1);
    if (!rest.empty()) {
        if (rest.rfind("@t^", 0) != 0) return fail();
        std::string num = rest.substr(3);
        auto [p, ec] = std::from_chars(num.data(), num.data() + num.size(), exp);
        if (ec != std::errc() || p != num.data() + num.size()) return fail();
    }
    if (text[0] == 'H') {
        int k = 0;
        auto [p, ec] = std::from_chars(inner.data(), inner.data() + inner.size(), k);
        if (ec != std::errc() || p != inner.data() + inner.size() || k < 1 || k > datum_.rank())
            return fail();
        return Generator::loop(Basis::cartan(k), exp);
    }
    if (text[0] == 'X') return Generator::loop(datum_.basis_of(roots::parse_root(inner, datum_.rank())), exp);
    return fail();
}

} // namespace affwhit::affine
