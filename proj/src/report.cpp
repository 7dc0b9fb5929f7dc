#include "affwhit/report.hpp"

#include <sstream>

namespace affwhit::report {

namespace {

json root_list(const std::vector<roots::Root>& rs) {
    json out = json::array();
    for (const auto& r : rs) out.push_back(r.label());
    return out;
}

json truncation_json(const engine::Truncation& t) {
    return {{"D", t.max_degree}, {"E", t.max_exponent}, {"J", t.condition_window}};
}

json strong_json(const seq::StrongVerdict& v) {
    return {{"verdict", seq::to_string(v.kind)}, {"reason", v.reason}};
}

/// Lambda verdict as a warning list: affine mode wants a strongly generic
/// image, loop-only mode wants each value generic.
json hypothesis_warnings(const engine::WhittakerModule& m) {
    json w = json::array();
    if (m.spec().mode == engine::Mode::affine) {
        if (m.lambda_verdict().kind != seq::StrongVerdict::Kind::strongly_generic)
            w.push_back(std::string("image of Lambda is not known to be strongly generic (") +
                        seq::to_string(m.lambda_verdict().kind) + ": " + m.lambda_verdict().reason + ")");
    } else {
        for (const auto& [root, s] : m.spec().lambda)
            if (seq::is_generic(s).kind != seq::GenericVerdict::Kind::generic)
                w.push_back("Lambda(" + root.label() + ") is not known to be generic");
    }
    return w;
}

std::string join(const json& labels) {
    std::string out;
    for (const auto& l : labels) out += (out.empty() ? "" : ", ") + l.get<std::string>();
    return "{" + out + "}";
}

/// The solver reports are shaped alike; this prints the shared part.
void solve_summary(std::ostream& os, const json& r) {
    const auto& t = r.at("truncation");
    os << "truncation       D=" << t.at("D") << " E=" << t.at("E") << " J=" << t.at("J") << "\n"
       << "unknowns         " << r.at("basis_size") << "\n"
       << "conditions       " << r.at("conditions") << "\n"
       << "equations        " << r.at("equations") << "\n"
       << "rank             " << r.at("rank") << "\n"
       << "dimension        " << r.at("dimension") << "\n";
    for (const auto& w : r.at("warnings")) os << "warning: " << w.get<std::string>() << "\n";
}

} // namespace

json describe(const config::RunConfig& c) {
    const auto datum = config::make_datum(c);
    json j;
    j["algebra"] = config::to_json(c).at("algebra");
    j["n"] = datum.n();
    j["levi_roots"] = root_list(datum.levi_roots());
    j["nil_roots"] = root_list(datum.nil_roots());
    j["nil_roots0"] = root_list(datum.nil_roots0());
    j["nil_roots1"] = root_list(datum.nil_roots1());
    json strata = json::array();
    for (const auto& s : datum.strata()) strata.push_back(root_list(s));
    j["strata"] = strata;

    // The generator order does not depend on the values of Lambda.
    engine::WhittakerSpec spec{datum, {}, 0, c.mode, c.cocycle};
    for (const auto& r : datum.nil_roots0()) spec.lambda.emplace(r, seq::BiSequence());
    engine::WhittakerModule m(std::move(spec));
    json order = json::array();
    for (const auto& g : m.generators(1)) order.push_back(m.algebra().render(g));
    j["generator_order"] = order;
    return j;
}

std::string describe_text(const config::RunConfig& c) {
    const json j = describe(c);
    std::ostringstream os;
    os << "sl(" << j.at("n").get<int>() << "), levi simple roots " << j.at("algebra").at("levi").dump() << "\n"
       << "Phi_n    " << join(j.at("nil_roots")) << "\n"
       << "Phi^0_n  " << join(j.at("nil_roots0")) << "\n"
       << "Phi^1_n  " << join(j.at("nil_roots1")) << "\n"
       << "l roots  " << join(j.at("levi_roots")) << "\n";
    for (std::size_t i = 0; i < j.at("strata").size(); ++i)
        os << "X_" << i << "      " << join(j.at("strata")[i]) << "\n";
    os << "generator order (|exponent| <= 1):\n";
    for (const auto& g : j.at("generator_order")) os << "  " << g.get<std::string>() << "\n";
    return os.str();
}

json check_sequences(const config::RunConfig& c) {
    const auto list = config::sequences_to_check(c);
    json seqs = json::array();
    for (const auto& s : list) {
        json e;
        e["literal"] = literals::to_literal(s);
        e["describe"] = literals::describe(s);
        const auto v = seq::is_generic(s);
        e["generic"] = seq::to_string(v.kind);
        if (v.witness) e["witness"] = v.witness->str();
        if (v.kind == seq::GenericVerdict::Kind::not_generic) {
            const auto ann = seq::minimal_annihilator(s);
            e["minimal_annihilator"] = ann.str();
            e["size"] = ann.width();
        }
        seqs.push_back(e);
    }
    const auto rank = seq::window_rank_check(list, c.check.shift_bound, c.check.coord_window, c.check.weighted);
    json j;
    j["sequences"] = seqs;
    j["set"] = strong_json(seq::is_strongly_generic_set(list));
    j["window"] = {{"S", c.check.shift_bound},   {"W", c.check.coord_window},
                   {"weighted", c.check.weighted}, {"rank", rank.rank},
                   {"count", rank.count},          {"full_rank", rank.full_rank}};
    return j;
}

std::string check_sequences_text(const json& r) {
    std::ostringstream os;
    for (const auto& e : r.at("sequences")) {
        os << e.at("describe").get<std::string>() << ": " << e.at("generic").get<std::string>();
        if (e.contains("witness")) os << " (witness " << e.at("witness").get<std::string>() << ")";
        if (e.contains("size")) os << ", size " << e.at("size");
        os << "\n";
    }
    os << "set: " << r.at("set").at("verdict").get<std::string>();
    if (!r.at("set").at("reason").get<std::string>().empty())
        os << " (" << r.at("set").at("reason").get<std::string>() << ")";
    const auto& w = r.at("window");
    os << "\nwindow S=" << w.at("S") << " W=" << w.at("W") << (w.at("weighted").get<bool>() ? " +weighted" : "")
       << ": rank " << w.at("rank") << " of " << w.at("count") << " rows, "
       << (w.at("full_rank").get<bool>() ? "full rank" : "rank deficient") << "\n";
    return os.str();
}

WhittakerRun whittaker(const config::RunConfig& c) {
    engine::WhittakerModule m(config::make_spec(c));
    const auto res = engine::whittaker_solve(m, c.truncation);
    json j;
    j["config"] = config::to_json(c);
    j["truncation"] = truncation_json(c.truncation);
    j["lambda_verdict"] = strong_json(m.lambda_verdict());
    j["warnings"] = hypothesis_warnings(m);
    j["basis_size"] = res.unknowns;
    j["conditions"] = res.conditions;
    j["equations"] = res.equations;
    j["rank"] = res.rank;
    j["dimension"] = res.dimension;
    json basis = json::array();
    for (const auto& v : res.basis) {
        json vec = json::object();
        for (const auto& [mono, x] : v.terms()) vec[m.render(mono)] = to_string(x);
        basis.push_back(vec);
    }
    j["basis"] = basis;
    return {j, res.dimension};
}

std::string whittaker_text(const json& r) {
    std::ostringstream os;
    solve_summary(os, r);
    std::size_t k = 0;
    for (const auto& v : r.at("basis")) {
        os << "w" << k++ << " =";
        bool first = true;
        for (const auto& [mono, x] : v.items()) {
            os << (first ? " " : " + ") << "(" << x.get<std::string>() << ")*" << mono;
            first = false;
        }
        os << "\n";
    }
    return os.str();
}

WhittakerRun tensor(const config::RunConfig& a, const config::RunConfig& b) {
    if (a.rank != b.rank || a.levi != b.levi || a.mode != b.mode || a.cocycle != b.cocycle)
        throw Error("tensor factors must share the algebra, the parabolic, the mode and the cocycle");
    engine::WhittakerModule left(config::make_spec(a));
    engine::WhittakerModule right(config::make_spec(b));
    engine::TensorModule t(left, right);
    const auto res = engine::tensor_whittaker_solve(t, a.truncation);

    json j;
    j["left"] = config::to_json(a);
    j["right"] = config::to_json(b);
    j["truncation"] = truncation_json(a.truncation);
    j["union_verdict"] = strong_json(t.union_verdict());
    json warnings = json::array();
    if (t.union_verdict().kind != seq::StrongVerdict::Kind::strongly_generic)
        warnings.push_back("union of the images of Lambda and Lambda' is not known to be strongly generic");
    j["warnings"] = warnings;
    j["additivity"] = engine::tensor_additivity(t, 5);
    j["level"] = to_string(a.theta + b.theta);
    j["basis_size"] = res.unknowns;
    j["conditions"] = res.conditions;
    j["equations"] = res.equations;
    j["rank"] = res.rank;
    j["dimension"] = res.dimension;
    json basis = json::array();
    for (const auto& v : res.basis) {
        json vec = json::object();
        for (const auto& [key, x] : v.terms())
            vec[left.render(key.first) + " | " + right.render(key.second)] = to_string(x);
        basis.push_back(vec);
    }
    j["basis"] = basis;
    return {j, res.dimension};
}

std::string tensor_text(const json& r) {
    std::ostringstream os;
    os << "union verdict    " << r.at("union_verdict").at("verdict").get<std::string>() << "\n"
       << "additivity       " << (r.at("additivity").get<bool>() ? "holds" : "FAILS") << " on |j| <= 5, level "
       << r.at("level").get<std::string>() << "\n";
    solve_summary(os, r);
    std::size_t k = 0;
    for (const auto& v : r.at("basis")) {
        os << "w" << k++ << " =";
        bool first = true;
        for (const auto& [key, x] : v.items()) {
            os << (first ? " " : " + ") << "(" << x.get<std::string>() << ")*[" << key << "]";
            first = false;
        }
        os << "\n";
    }
    return os.str();
}

json bracket(const config::RunConfig& c, const std::string& x, const std::string& y) {
    const auto cocycle = c.mode == engine::Mode::loop_only ? affine::Cocycle::none : c.cocycle;
    affine::AffineAlgebra alg(config::make_datum(c), cocycle);
    const auto gx = alg.parse_generator(x);
    const auto gy = alg.parse_generator(y);
    if (c.mode == engine::Mode::loop_only && (!gx.is_loop() || !gy.is_loop()))
        throw Error("c and d are not part of the loop algebra");
    return {{"x", alg.render(gx)},
            {"y", alg.render(gy)},
            {"cocycle", affine::to_string(cocycle)},
            {"result", alg.render(alg.bracket(gx, gy))}};
}

void add_timing(json& report, double seconds) { report["wall_time_seconds"] = seconds; }

} // namespace affwhit::report
