#include "lenfun/io.hpp"

#include <fstream>

namespace lenfun {

namespace {

Rational parse_rational_field(const Json& j, const char* what) {
    if (j.is_number_unsigned() || (j.is_number_integer() && j.get<long long>() >= 0))
        return Rational(Int(std::to_string(j.get<long long>())));
    if (j.is_string()) {
        if (auto q = Rational::parse(j.get<std::string>())) return *q;
    }
    throw ParseError(std::string(what) + ": expected a nonnegative rational \"p/q\"");
}

GammaValue parse_gamma_field(const Json& j, const char* what) {
    if (j.is_string()) {
        if (auto v = GammaValue::parse(j.get<std::string>())) return *v;
    }
    if (j.is_number_unsigned() || (j.is_number_integer() && j.get<long long>() >= 0))
        return GammaValue(Rational(Int(std::to_string(j.get<long long>()))));
    throw ParseError(std::string(what) + ": expected \"p/q\" or \"inf\"");
}

Int parse_int_field(const Json& j, const char* what) {
    if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        std::size_t start = s.size() > 1 && s[0] == '-' ? 1 : 0;
        if (s.empty() || (start == 1 && s.size() == 1))
            throw ParseError(std::string(what) + ": expected an integer");
        for (std::size_t k = start; k < s.size(); ++k) {
            if (s[k] < '0' || s[k] > '9')
                throw ParseError(std::string(what) + ": expected an integer");
        }
        return Int(s);
    }
    throw ParseError(std::string(what) + ": expected an integer");
}

std::string parse_id_field(const Json& j, const char* what) {
    if (!j.is_string() || j.get<std::string>().empty())
        throw ParseError(std::string(what) + ": expected a nonempty id string");
    return j.get<std::string>();
}

}  // namespace

Json spectrum_to_json(const SpectrumTree& tree) {
    Json nodes = Json::array();
    for (const PrimeId& id : tree.nonzero_primes()) {
        const PrimeNode& n = tree.node(id);
        Json entry;
        entry["id"] = n.id;
        entry["parent"] = n.parent ? Json(*n.parent) : Json(nullptr);
        entry["kind"] = to_string(n.kind);
        nodes.push_back(std::move(entry));
    }
    return Json{{"nodes", std::move(nodes)}};
}

SpectrumTree parse_spectrum(const Json& j) {
    if (!j.is_object() || !j.contains("nodes") || !j["nodes"].is_array())
        throw ParseError("spectrum: expected {\"nodes\": [...]}");
    std::vector<PrimeNode> nodes;
    for (const Json& entry : j["nodes"]) {
        if (!entry.is_object()) throw ParseError("spectrum: node entries are objects");
        PrimeNode n;
        n.id = parse_id_field(entry.value("id", Json()), "spectrum node id");
        if (entry.contains("parent") && !entry["parent"].is_null())
            n.parent = parse_id_field(entry["parent"], "spectrum node parent");
        const Json kind = entry.value("kind", Json());
        if (!kind.is_string()) throw ParseError("spectrum node kind: expected a string");
        auto parsed = parse_node_kind(kind.get<std::string>());
        if (!parsed) throw ParseError("spectrum node kind: " + kind.get<std::string>());
        n.kind = *parsed;
        nodes.push_back(std::move(n));
    }
    try {
        return SpectrumTree(std::move(nodes));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("spectrum: ") + e.what());
    }
}

Json ideal_to_json(const IdealDescriptor& i) {
    if (i.is_zero()) return Json("zero");
    if (i.is_unit()) return Json("unit");
    Json components = Json::array();
    for (const auto& [p, cut] : i.components) {
        components.push_back(Json{{"id", p},
                                  {"gamma", cut.gamma.to_string()},
                                  {"inclusive", cut.inclusive}});
    }
    return Json{{"components", std::move(components)}};
}

IdealDescriptor parse_ideal(const Json& j) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "unit") return IdealDescriptor::unit();
        if (s == "zero") return IdealDescriptor::zero_ideal();
        throw ParseError("ideal: unknown literal " + s);
    }
    if (!j.is_object() || !j.contains("components") || !j["components"].is_array())
        throw ParseError("ideal: expected {\"components\": [...]}, \"unit\" or \"zero\"");
    IdealDescriptor out;
    for (const Json& entry : j["components"]) {
        if (!entry.is_object()) throw ParseError("ideal: component entries are objects");
        const PrimeId id = parse_id_field(entry.value("id", Json()), "ideal component id");
        Cut cut;
        cut.gamma = parse_rational_field(entry.value("gamma", Json()), "ideal component gamma");
        const Json inclusive = entry.value("inclusive", Json(true));
        if (!inclusive.is_boolean()) throw ParseError("ideal component inclusive: expected a bool");
        cut.inclusive = inclusive.get<bool>();
        if (!out.components.emplace(id, cut).second)
            throw ParseError("ideal: duplicate component at " + id);
    }
    return out;
}

Json lengthfn_to_json(const CanonicalLengthFn& l) {
    Json out;
    out["sigma_t"] = Json::array();
    for (const PrimeId& p : l.sigma_t) out["sigma_t"].push_back(p);
    out["sigma_i"] = Json::array();
    for (const PrimeId& p : l.sigma_i) out["sigma_i"].push_back(p);
    out["sigma_r"] = Json::array();
    for (const auto& [p, alpha] : l.sigma_r)
        out["sigma_r"].push_back(Json{{"id", p}, {"alpha", alpha.to_string()}});
    out["sigma_v"] = Json::array();
    for (const auto& [p, lambda] : l.sigma_v)
        out["sigma_v"].push_back(Json{{"id", p}, {"lambda", lambda.to_string()}});
    return out;
}

Json lengthfn_to_json(const ZLengthFn& l) {
    if (l.is_rank_multiple()) return Json{{"rank_multiple", l.as_rank().alpha.to_string()}};
    const InfiniteWeights& w = l.as_weights();
    Json weights = Json::array();
    for (const auto& [p, c] : w.weights)
        weights.push_back(Json{{"prime", p.get_str()}, {"value", c.to_string()}});
    return Json{{"z_weights", std::move(weights)}, {"default", w.default_weight.to_string()}};
}

LengthFnFile parse_lengthfn(const Json& j) {
    if (!j.is_object()) throw ParseError("lengthfn: expected an object");
    if (j.contains("rank_multiple")) {
        const Rational alpha = parse_rational_field(j["rank_multiple"], "rank_multiple");
        if (alpha.is_zero()) throw std::invalid_argument("rank_multiple: coefficient must be positive");
        return ZLengthFn::rank_multiple(alpha);
    }
    if (j.contains("z_weights")) {
        if (!j["z_weights"].is_array()) throw ParseError("z_weights: expected an array");
        std::map<Int, GammaValue> weights;
        for (const Json& entry : j["z_weights"]) {
            if (!entry.is_object()) throw ParseError("z_weights: entries are objects");
            const Int p = parse_int_field(entry.value("prime", Json()), "z_weights prime");
            const GammaValue c = parse_gamma_field(entry.value("value", Json()), "z_weights value");
            if (!weights.emplace(p, c).second)
                throw ParseError("z_weights: duplicate prime " + p.get_str());
        }
        GammaValue default_weight = GammaValue::zero();
        if (j.contains("default")) default_weight = parse_gamma_field(j["default"], "default");
        return ZLengthFn::infinite_type(std::move(weights), std::move(default_weight));
    }
    if (j.contains("spectral_delta")) {
        if (!j["spectral_delta"].is_array()) throw ParseError("spectral_delta: expected an array");
        std::set<PrimeId> delta;
        for (const Json& entry : j["spectral_delta"])
            delta.insert(parse_id_field(entry, "spectral_delta id"));
        return delta;
    }
    CanonicalLengthFn l;
    if (j.contains("sigma_t")) {
        for (const Json& entry : j["sigma_t"]) l.sigma_t.insert(parse_id_field(entry, "sigma_t"));
    }
    if (j.contains("sigma_i")) {
        for (const Json& entry : j["sigma_i"]) l.sigma_i.insert(parse_id_field(entry, "sigma_i"));
    }
    if (j.contains("sigma_r")) {
        for (const Json& entry : j["sigma_r"]) {
            const PrimeId id = parse_id_field(entry.value("id", Json()), "sigma_r id");
            l.sigma_r.emplace(id, parse_rational_field(entry.value("alpha", Json()), "sigma_r alpha"));
        }
    }
    if (j.contains("sigma_v")) {
        for (const Json& entry : j["sigma_v"]) {
            const PrimeId id = parse_id_field(entry.value("id", Json()), "sigma_v id");
            l.sigma_v.emplace(id, parse_rational_field(entry.value("lambda", Json()), "sigma_v lambda"));
        }
    }
    return l;
}

ZModuleFile parse_zmodule(const Json& j) {
    if (!j.is_object() || !j.contains("generators"))
        throw ParseError("module: expected {\"generators\": n, \"presentation\": [[...]]}");
    ZModuleFile out;
    if (!j["generators"].is_number_integer() || j["generators"].get<long long>() < 0)
        throw ParseError("module generators: expected a nonnegative integer");
    out.generators = static_cast<int>(j["generators"].get<long long>());
    if (j.contains("presentation")) {
        if (!j["presentation"].is_array()) throw ParseError("module presentation: expected rows");
        for (const Json& row : j["presentation"]) {
            if (!row.is_array()) throw ParseError("module presentation: expected rows of integers");
            std::vector<Int> r;
            for (const Json& x : row) r.push_back(parse_int_field(x, "presentation entry"));
            if (static_cast<int>(r.size()) != out.generators)
                throw ParseError("module presentation: row width differs from generators");
            out.presentation.push_back(std::move(r));
        }
    }
    return out;
}

ZIdeal parse_zideal(const Json& j) {
    if (!j.is_object() || !j.contains("generator"))
        throw ParseError("ideal: expected {\"generator\": n}");
    const Int n = parse_int_field(j["generator"], "ideal generator");
    if (n < 0) throw ParseError("ideal generator: expected a nonnegative integer");
    return ZIdeal{n};
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

}  // namespace lenfun
