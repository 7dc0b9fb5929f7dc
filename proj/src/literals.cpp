#include "affwhit/literals.hpp"

#include <charconv>
#include <sstream>

namespace affwhit::literals {

namespace {

seq::Index parse_index(const std::string& text) {
    seq::Index i = 0;
    auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), i);
    if (text.empty() || ec != std::errc() || p != text.data() + text.size())
        throw ParseError("bad index '" + text + "'");
    return i;
}

Scalar scalar_of(const json& j) {
    if (j.is_string()) return parse_scalar(j.get<std::string>());
    if (j.is_number_integer()) return Scalar(j.get<long>());
    throw ParseError("expected a rational string, got " + j.dump());
}

const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name))
        throw ParseError(std::string("sequence literal is missing \"") + name + "\": " + j.dump());
    return j.at(name);
}

std::map<seq::Index, Scalar> index_map(const json& j) {
    if (!j.is_object()) throw ParseError("expected an index -> rational object, got " + j.dump());
    std::map<seq::Index, Scalar> out;
    for (const auto& [k, v] : j.items()) {
        Scalar c = scalar_of(v);
        if (c != 0) out[parse_index(k)] += c;
    }
    return out;
}

std::vector<Scalar> scalar_list(const json& j) {
    if (!j.is_array()) throw ParseError("expected a list of rationals, got " + j.dump());
    std::vector<Scalar> out;
    for (const auto& v : j) out.push_back(scalar_of(v));
    return out;
}

json index_object(const std::map<seq::Index, Scalar>& m) {
    json out = json::object();
    for (const auto& [i, c] : m) out[std::to_string(i)] = to_string(c);
    return out;
}

json scalar_array(const std::vector<Scalar>& v) {
    json out = json::array();
    for (const auto& c : v) out.push_back(to_string(c));
    return out;
}

} // namespace

seq::FinVector parse_finvector(const json& j) { return seq::FinVector(index_map(j)); }

json to_json(const seq::FinVector& v) { return index_object(v.coeffs()); }

seq::BiSequence parse_sequence(const json& j) {
    const std::string kind = field(j, "kind").get<std::string>();
    if (kind == "finite") return seq::BiSequence::finite(index_map(field(j, "entries")));
    if (kind == "geometric") return seq::BiSequence::geometric(scalar_of(field(j, "j")));
    if (kind == "constant") return seq::BiSequence::constant(scalar_of(field(j, "value")));
    if (kind == "recurrence")
        return seq::BiSequence::recurrence(parse_finvector(field(j, "v")), scalar_list(field(j, "initial")));
    if (kind == "derived") {
        seq::Index shift = j.contains("shift") ? j.at("shift").get<seq::Index>() : 0;
        std::vector<Scalar> poly = j.contains("poly") ? scalar_list(j.at("poly")) : std::vector<Scalar>{1};
        return seq::BiSequence::derived(parse_sequence(field(j, "base")), shift, std::move(poly));
    }
    throw ParseError("unknown sequence kind '" + kind + "'");
}

json to_literal(const seq::BiSequence& s) {
    switch (s.kind()) {
    case seq::SeqKind::finite:
        return {{"kind", "finite"}, {"entries", index_object(s.finite_entries())}};
    case seq::SeqKind::geometric:
        return {{"kind", "geometric"}, {"j", to_string(s.ratio())}};
    case seq::SeqKind::recurrence:
        return {{"kind", "recurrence"},
                {"v", to_json(s.recurrence_vector())},
                {"initial", scalar_array(s.recurrence_initial())}};
    case seq::SeqKind::derived:
        return {{"kind", "derived"},
                {"base", to_literal(s.derived_base())},
                {"shift", s.derived_shift()},
                {"poly", scalar_array(s.derived_poly())}};
    }
    throw Error("unreachable sequence kind");
}

std::string describe(const seq::BiSequence& s) {
    std::ostringstream os;
    switch (s.kind()) {
    case seq::SeqKind::finite: {
        os << "finite{";
        bool first = true;
        for (const auto& [i, c] : s.finite_entries()) {
            os << (first ? "" : ", ") << i << ":" << to_string(c);
            first = false;
        }
        os << "}";
        break;
    }
    case seq::SeqKind::geometric: os << "a(" << to_string(s.ratio()) << ")"; break;
    case seq::SeqKind::recurrence: {
        os << "recurrence[" << s.recurrence_vector().str() << ";";
        for (const auto& c : s.recurrence_initial()) os << " " << to_string(c);
        os << "]";
        break;
    }
    case seq::SeqKind::derived: {
        os << "(";
        const auto& p = s.derived_poly();
        bool first = true;
        for (std::size_t k = 0; k < p.size(); ++k) {
            if (p[k] == 0) continue;
            os << (first ? "" : " + ") << to_string(p[k]);
            if (k >= 1) os << "*i";
            if (k >= 2) os << "^" << k;
            first = false;
        }
        os << ") * " << describe(s.derived_base()) << "[i";
        if (s.derived_shift() > 0) os << "+" << s.derived_shift();
        if (s.derived_shift() < 0) os << s.derived_shift();
        os << "]";
        break;
    }
    }
    return os.str();
}

} // namespace affwhit::literals
