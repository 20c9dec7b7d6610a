#include "gmorder/scenario_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "gmorder/errors.hpp"

namespace gmorder {

namespace {

void reject_unknown_keys(const Json& j, const std::set<std::string>& allowed, const char* where) {
    for (const auto& [key, _] : j.items()) {
        if (!allowed.count(key)) {
            throw SchemaError(std::string("unknown key '") + key + "' in " + where);
        }
    }
}

double number_at(const Json& j, const char* key, const char* where) {
    const auto it = j.find(key);
    if (it == j.end()) throw SchemaError(std::string("missing '") + key + "' in " + where);
    if (!it->is_number()) throw SchemaError(std::string("'") + key + "' in " + where + " must be a number");
    return it->get<double>();
}

std::optional<double> optional_number(const Json& j, const char* key, const char* where) {
    if (!j.contains(key)) return std::nullopt;
    return number_at(j, key, where);
}

Generator parse_generator(const Json& j) {
    if (!j.is_object()) throw SchemaError("copula must be an object");
    reject_unknown_keys(j, {"family", "theta"}, "copula");
    if (!j.contains("family") || !j["family"].is_string()) {
        throw SchemaError("copula needs a string 'family'");
    }
    const std::string family = j["family"].get<std::string>();
    if (family == "independence") return Generator::independence();
    const double theta = number_at(j, "theta", "copula");
    if (family == "clayton") return Generator::clayton(theta);
    if (family == "gumbel" || family == "gumbel-hougaard") return Generator::gumbel(theta);
    throw SchemaError("unsupported copula family '" + family + "'");
}

Json generator_to_json(const Generator& g) {
    Json j;
    switch (g.family()) {
        case Family::Independence: j["family"] = "independence"; break;
        case Family::Clayton: j["family"] = "clayton"; j["theta"] = g.theta(); break;
        case Family::Gumbel: j["family"] = "gumbel-hougaard"; j["theta"] = g.theta(); break;
        case Family::Custom: j["family"] = "custom"; j["name"] = g.name(); break;
    }
    return j;
}

std::optional<Spacing> parse_spacing(const std::string& s) {
    if (s == "linear") return Spacing::Linear;
    if (s == "log") return Spacing::Log;
    return std::nullopt;
}

Json witness_to_json(const Witness& w) {
    return Json{{"x", w.x}, {"x_ref", w.x_ref}, {"lhs", w.lhs}, {"rhs", w.rhs}};
}

// NaN and infinities are not JSON; they are written as null.
Json num(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

}  // namespace

void GridOverrides::merge(const GridOverrides& over) {
    if (over.x_min) x_min = over.x_min;
    if (over.x_max) x_max = over.x_max;
    if (over.points) points = over.points;
    if (over.spacing) spacing = over.spacing;
}

Grid GridOverrides::resolve(double default_x_max) const {
    Grid g = default_grid(default_x_max);
    if (x_min) g.x_min = *x_min;
    if (x_max) g.x_max = *x_max;
    if (points) g.points = *points;
    if (spacing) g.spacing = *spacing;
    g.validate();
    return g;
}

PopulationSpec parse_population(const Json& j) {
    if (!j.is_object()) throw SchemaError("population must be an object");
    reject_unknown_keys(j, {"members", "shock_p", "copula", "alpha_scalar", "beta_scalar",
                            "lambda_scalar"},
                        "population");
    if (!j.contains("members") || !j["members"].is_array() || j["members"].empty()) {
        throw SchemaError("population needs a nonempty 'members' array");
    }
    const auto a_s = optional_number(j, "alpha_scalar", "population");
    const auto b_s = optional_number(j, "beta_scalar", "population");
    const auto l_s = optional_number(j, "lambda_scalar", "population");
    auto field = [](const Json& m, const char* key, const std::optional<double>& scalar) {
        if (m.contains(key)) {
            if (scalar) {
                throw SchemaError(std::string("member sets '") + key +
                                  "' while the population broadcasts a scalar");
            }
            return number_at(m, key, "member");
        }
        if (!scalar) throw SchemaError(std::string("member is missing '") + key + "'");
        return *scalar;
    };
    try {
        std::vector<GMParams> members;
        for (const auto& m : j["members"]) {
            if (!m.is_object()) throw SchemaError("each member must be an object");
            reject_unknown_keys(m, {"alpha", "beta", "lambda"}, "member");
            members.emplace_back(field(m, "alpha", a_s), field(m, "beta", b_s),
                                 field(m, "lambda", l_s));
        }
        std::optional<std::vector<double>> shock;
        if (j.contains("shock_p")) {
            if (!j["shock_p"].is_array()) throw SchemaError("'shock_p' must be an array");
            std::vector<double> p;
            for (const auto& v : j["shock_p"]) {
                if (!v.is_number()) throw SchemaError("'shock_p' entries must be numbers");
                p.push_back(v.get<double>());
            }
            shock = std::move(p);
        }
        std::optional<Generator> copula;
        if (j.contains("copula")) copula = parse_generator(j["copula"]);
        return PopulationSpec(std::move(members), std::move(shock), std::move(copula));
    } catch (const DomainError& e) {
        throw SchemaError(std::string("invalid population: ") + e.what());
    }
}

ScenarioFile parse_scenario(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw SchemaError("scenario must be a JSON object");
    reject_unknown_keys(j, {"A", "B", "grid", "relation", "extreme", "branch", "transform", "n1"},
                        "scenario");
    if (!j.contains("A") || !j.contains("B")) throw SchemaError("scenario needs 'A' and 'B'");
    ScenarioFile sf{parse_population(j["A"]), parse_population(j["B"]), {}, {}, Extreme::Min,
                    {}, {}, 0};
    if (sf.A.size() != sf.B.size()) throw SchemaError("A and B must have the same size");

    if (j.contains("grid")) {
        const Json& g = j["grid"];
        if (!g.is_object()) throw SchemaError("'grid' must be an object");
        reject_unknown_keys(g, {"min", "max", "points", "spacing"}, "grid");
        sf.grid.x_min = optional_number(g, "min", "grid");
        sf.grid.x_max = optional_number(g, "max", "grid");
        if (g.contains("points")) {
            if (!g["points"].is_number_unsigned()) throw SchemaError("grid 'points' must be a count");
            sf.grid.points = g["points"].get<std::size_t>();
        }
        if (g.contains("spacing")) {
            if (!g["spacing"].is_string()) throw SchemaError("grid 'spacing' must be a string");
            sf.grid.spacing = parse_spacing(g["spacing"].get<std::string>());
            if (!sf.grid.spacing) throw SchemaError("grid 'spacing' must be linear or log");
        }
    }
    if (j.contains("relation")) {
        if (!j["relation"].is_string()) throw SchemaError("'relation' must be a string");
        sf.relation = parse_relation(j["relation"].get<std::string>());
        if (!sf.relation) throw SchemaError("unknown relation '" + j["relation"].get<std::string>() + "'");
    }
    if (j.contains("extreme")) {
        const auto e = j["extreme"].is_string() ? j["extreme"].get<std::string>() : "";
        if (e == "min") sf.extreme = Extreme::Min;
        else if (e == "max") sf.extreme = Extreme::Max;
        else throw SchemaError("'extreme' must be \"min\" or \"max\"");
    }
    if (j.contains("branch")) {
        const auto b = j["branch"].is_string() ? j["branch"].get<std::string>() : "";
        if (b == "D+" || b == "D") sf.branch = Cone::D;
        else if (b == "E+" || b == "E") sf.branch = Cone::E;
        else throw SchemaError("'branch' must be \"D+\" or \"E+\"");
    }
    if (j.contains("transform")) {
        if (!j["transform"].is_string()) throw SchemaError("'transform' must be a string");
        sf.transform = parse_transform(j["transform"].get<std::string>());
        if (!sf.transform) throw SchemaError("'transform' must be \"p\" or \"-ln(1-p)\"");
    }
    if (j.contains("n1")) {
        if (!j["n1"].is_number_unsigned()) throw SchemaError("'n1' must be a count");
        sf.n1 = j["n1"].get<std::size_t>();
    }
    return sf;
}

ScenarioFile load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot read scenario file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_scenario(ss.str());
}

Json population_to_json(const PopulationSpec& p) {
    Json j;
    Json members = Json::array();
    for (const auto& m : p.members()) {
        members.push_back(Json{{"alpha", m.alpha()}, {"beta", m.beta()}, {"lambda", m.lambda()}});
    }
    j["members"] = std::move(members);
    if (p.shock_p()) j["shock_p"] = *p.shock_p();
    if (p.copula()) j["copula"] = generator_to_json(*p.copula());
    return j;
}

Json scenario_to_json(const Scenario& s) {
    Json j;
    j["A"] = population_to_json(s.A);
    j["B"] = population_to_json(s.B);
    j["branch"] = to_string(s.branch);
    if (s.h) j["transform"] = to_string(*s.h);
    if (s.n1 > 0) j["n1"] = s.n1;
    return j;
}

Json grid_to_json(const Grid& g) {
    return Json{{"min", g.x_min},
                {"max", g.x_max},
                {"points", g.points},
                {"spacing", g.spacing == Spacing::Linear ? "linear" : "log"}};
}

Json verdict_to_json(const OrderingVerdict& v) {
    Json j;
    j["relation"] = to_string(v.relation);
    j["status"] = to_string(v.status);
    j["forward_holds"] = v.forward_holds;
    j["reverse_holds"] = v.reverse_holds;
    j["tolerance"] = Json{{"abs", v.tol.abs}, {"rel", v.tol.rel},
                          {"violation_factor", v.tol.violation_factor}};
    if (v.witness) j["witness"] = witness_to_json(*v.witness);
    if (v.reverse_witness) j["reverse_witness"] = witness_to_json(*v.reverse_witness);
    if (!v.trimmed.empty()) {
        Json t = Json::array();
        for (const auto& iv : v.trimmed) t.push_back(Json::array({num(iv.lo), num(iv.hi)}));
        j["trimmed"] = std::move(t);
    }
    if (v.continuous) {
        j["continuous_part"] = Json{{"status", to_string(v.continuous->status)},
                                    {"forward_holds", v.continuous->forward_holds},
                                    {"reverse_holds", v.continuous->reverse_holds}};
    }
    if (v.hazard_crosscheck) j["hazard_crosscheck"] = to_string(*v.hazard_crosscheck);
    if (!v.detail.empty()) j["detail"] = v.detail;
    return j;
}

Json report_to_json(const TheoremReport& r) {
    Json j;
    j["theorem"] = r.theorem_id;
    j["outcome"] = to_string(r.outcome);
    if (!r.digest.empty()) j["digest"] = r.digest;
    j["expected"] = to_string(r.expected);
    Json hyps = Json::array();
    for (const auto& h : r.hypotheses) hyps.push_back(Json{{"name", h.name}, {"pass", h.pass}});
    j["hypotheses"] = std::move(hyps);
    if (r.conclusion) j["conclusion"] = verdict_to_json(*r.conclusion);
    if (r.continuous_confirms) j["continuous_part_confirms"] = *r.continuous_confirms;
    if (r.grid) j["grid"] = grid_to_json(*r.grid);
    if (r.scenario) j["scenario"] = scenario_to_json(*r.scenario);
    if (!r.detail.empty()) j["detail"] = r.detail;
    return j;
}

Json batch_to_json(const BatchSummary& b) {
    Json j;
    j["seed"] = b.options.seed;
    j["trials"] = b.options.trials;
    if (b.options.n) j["n"] = *b.options.n;
    else j["n"] = Json::array({2, 3, 5});
    j["tolerance"] = Json{{"abs", b.options.tol.abs}, {"rel", b.options.tol.rel}};
    Json ths = Json::array();
    for (const auto& t : b.theorems) {
        Json tj;
        tj["id"] = t.id;
        tj["conclusion"] = t.conclusion;
        if (!t.note.empty()) tj["note"] = t.note;
        tj["counts"] = Json{{"HOLDS", t.holds},
                            {"VIOLATED", t.violated},
                            {"INCONCLUSIVE", t.inconclusive},
                            {"SKIPPED", t.skipped},
                            {"GENERATION-EXHAUSTED", t.exhausted}};
        if (t.continuous_checked > 0) {
            tj["continuous_part"] = Json{{"checked", t.continuous_checked},
                                         {"confirmed", t.continuous_confirmed}};
        }
        Json flagged = Json::array();
        for (const auto& [k, rep] : t.flagged) {
            Json fj = report_to_json(rep);
            fj["trial"] = k;
            flagged.push_back(std::move(fj));
        }
        tj["flagged"] = std::move(flagged);
        ths.push_back(std::move(tj));
    }
    j["theorems"] = std::move(ths);
    j["all_hold"] = b.all_hold();
    return j;
}

Json counterexample_to_json(const CounterexampleReport& r) {
    Json j;
    j["id"] = r.id;
    j["reproduced"] = r.reproduced;
    j["grid"] = grid_to_json(r.grid);
    j["verdict"] = verdict_to_json(r.verdict);
    return j;
}

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

void write_csv(std::ostream& os, const Trace& t, const std::vector<Interval>& trimmed) {
    os << "x," << t.a_name << ',' << t.b_name << ',' << t.diag_name << '\n';
    char buf[128];
    for (std::size_t i = 0; i < t.x.size(); ++i) {
        if (!std::isfinite(t.diag[i]) || !std::isfinite(t.a[i]) || !std::isfinite(t.b[i])) continue;
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", t.x[i], t.a[i], t.b[i],
                      t.diag[i]);
        os << buf;
    }
    for (const auto& iv : trimmed) {
        std::snprintf(buf, sizeof buf, "# trimmed: [%.17g,%.17g]\n", iv.lo, iv.hi);
        os << buf;
    }
}

}  // namespace gmorder
