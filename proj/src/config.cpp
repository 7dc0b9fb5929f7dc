#include "affwhit/config.hpp"

#include <fstream>

namespace affwhit::config {

namespace {

Scalar scalar_of(const json& j) {
    if (j.is_string()) return parse_scalar(j.get<std::string>());
    if (j.is_number_integer()) return Scalar(j.get<long>());
    throw ParseError("expected a rational string, got " + j.dump());
}

template <class T>
T get_or(const json& j, const char* key, T fallback) {
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad value for \"") + key + "\": " + e.what());
    }
}

RunConfig base(int rank, std::set<int> levi, Scalar theta, engine::Truncation t) {
    RunConfig c;
    c.rank = rank;
    c.levi = std::move(levi);
    c.theta = theta;
    c.truncation = t;
    return c;
}

} // namespace

RunConfig parse_config(const json& j) {
    if (!j.is_object()) throw ParseError("configuration must be a JSON object");
    if (!j.contains("algebra")) throw ParseError("configuration has no \"algebra\"");
    const json& alg = j.at("algebra");
    if (get_or<std::string>(alg, "type", "A") != "A")
        throw ParseError("only type A algebras are supported");

    RunConfig c;
    c.rank = get_or<int>(alg, "rank", 0);
    if (c.rank < 1) throw ParseError("algebra rank must be at least 1");
    for (int k : get_or<std::vector<int>>(alg, "levi", {})) {
        if (k < 1 || k > c.rank) throw ParseError("levi index " + std::to_string(k) + " out of range");
        c.levi.insert(k);
    }

    if (j.contains("lambda")) {
        const json& lam = j.at("lambda");
        if (!lam.is_object()) throw ParseError("\"lambda\" must map root labels to sequences");
        for (const auto& [label, lit] : lam.items()) {
            std::string canon = roots::parse_root(label, c.rank).label();
            if (!c.lambda.emplace(canon, literals::parse_sequence(lit)).second)
                throw ParseError("root " + canon + " is assigned twice");
        }
    }
    if (j.contains("theta")) c.theta = scalar_of(j.at("theta"));
    if (j.contains("mode")) c.mode = engine::parse_mode(j.at("mode").get<std::string>());
    if (j.contains("cocycle")) c.cocycle = affine::parse_cocycle(j.at("cocycle").get<std::string>());
    if (j.contains("truncation")) {
        const json& t = j.at("truncation");
        c.truncation.max_degree = get_or<int>(t, "D", c.truncation.max_degree);
        c.truncation.max_exponent = get_or<int>(t, "E", c.truncation.max_exponent);
        c.truncation.condition_window = get_or<int>(t, "J", c.truncation.condition_window);
    }
    const auto& t = c.truncation;
    if (t.max_degree < 0 || t.max_exponent < 0 || t.condition_window < 0)
        throw ParseError("truncation bounds must be nonnegative");
    if (j.contains("sequences")) {
        std::vector<seq::BiSequence> list;
        for (const auto& lit : j.at("sequences")) list.push_back(literals::parse_sequence(lit));
        c.sequences = std::move(list);
    }
    if (j.contains("check")) {
        const json& ck = j.at("check");
        c.check.shift_bound = get_or<seq::Index>(ck, "S", c.check.shift_bound);
        c.check.coord_window = get_or<seq::Index>(ck, "W", c.check.coord_window);
        c.check.weighted = get_or<bool>(ck, "weighted", c.check.weighted);
    }
    return c;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open configuration file '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("'" + path + "' is not valid JSON: " + e.what());
    }
    return parse_config(j);
}

json to_json(const RunConfig& c) {
    json j;
    j["algebra"] = {{"type", "A"}, {"rank", c.rank}, {"levi", std::vector<int>(c.levi.begin(), c.levi.end())}};
    json lam = json::object();
    for (const auto& [label, s] : c.lambda) lam[label] = literals::to_literal(s);
    j["lambda"] = lam;
    j["theta"] = to_string(c.theta);
    j["mode"] = engine::to_string(c.mode);
    j["cocycle"] = affine::to_string(c.cocycle);
    j["truncation"] = {{"D", c.truncation.max_degree}, {"E", c.truncation.max_exponent},
                       {"J", c.truncation.condition_window}};
    if (c.sequences) {
        json list = json::array();
        for (const auto& s : *c.sequences) list.push_back(literals::to_literal(s));
        j["sequences"] = list;
    }
    j["check"] = {{"S", c.check.shift_bound}, {"W", c.check.coord_window}, {"weighted", c.check.weighted}};
    return j;
}

bool equivalent(const RunConfig& a, const RunConfig& b) { return to_json(a) == to_json(b); }

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = {"sl2",    "sl3-borel", "sl3-abelian", "sl2-a3",
                                                   "sl2-neg", "sl2-loop-delta", "sl2-constant"};
    return names;
}

RunConfig preset(const std::string& name) {
    using seq::BiSequence;
    const auto a2 = BiSequence::geometric(2);
    const auto a3 = BiSequence::geometric(3);
    if (name == "sl2") {
        auto c = base(1, {}, 1, {2, 2, 3});
        c.lambda.emplace("a1", a2);
        return c;
    }
    if (name == "sl3-borel") {
        auto c = base(2, {}, 1, {2, 1, 2});
        c.lambda.emplace("a1", a2);
        c.lambda.emplace("a2", a3);
        return c;
    }
    if (name == "sl3-abelian") {
        // Levi {beta}: the nilradical is spanned by alpha and alpha + beta
        auto c = base(2, {2}, 1, {2, 1, 2});
        c.lambda.emplace("a1", a2);
        c.lambda.emplace("a1+a2", a3);
        return c;
    }
    if (name == "sl2-a3") {
        auto c = base(1, {}, 2, {1, 1, 2});
        c.lambda.emplace("a1", a3);
        return c;
    }
    if (name == "sl2-neg") {
        auto c = base(1, {}, -1, {1, 1, 2});
        c.lambda.emplace("a1", seq::negate(a2));
        return c;
    }
    if (name == "sl2-loop-delta") {
        auto c = base(1, {}, 0, {2, 2, 3});
        c.mode = engine::Mode::loop_only;
        c.lambda.emplace("a1", BiSequence::delta(1));
        return c;
    }
    if (name == "sl2-constant") {
        auto c = base(1, {}, 1, {2, 1, 2});
        c.lambda.emplace("a1", BiSequence::constant(1));
        return c;
    }
    throw ParseError("unknown preset '" + name + "'");
}

roots::RootDatum make_datum(const RunConfig& c) { return roots::RootDatum(c.rank + 1, c.levi); }

engine::WhittakerSpec make_spec(const RunConfig& c) {
    engine::WhittakerSpec spec{make_datum(c), {}, c.theta, c.mode, c.cocycle};
    for (const auto& [label, s] : c.lambda) spec.lambda.emplace(roots::parse_root(label, c.rank), s);
    return spec;
}

std::vector<seq::BiSequence> sequences_to_check(const RunConfig& c) {
    if (c.sequences) return *c.sequences;
    std::vector<seq::BiSequence> out;
    for (const auto& [label, s] : c.lambda) out.push_back(s);
    return out;
}

} // namespace affwhit::config
