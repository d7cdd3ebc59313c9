#include "evw/json_io.hpp"

#include "evw/error.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

namespace evw {

namespace {

using nlohmann::json;

json rational_to_json(const Rational& r) {
    return r.to_string();
}

Rational rational_from_json(const json& j, const char* where) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw input_error(std::string(where) + " must be a rational string");
}

json parse_text(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw input_error(std::string("invalid JSON: ") + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

const json& require(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw input_error(std::string("missing key '") + key + "'");
    return *it;
}

} // namespace

std::string to_json_text(const MassFunction& m) {
    json focal = json::array();
    for (const auto& [set, mass] : m.focal()) {
        json labels = json::array();
        for (auto i = set.find_first(); i != IndexSet::npos; i = set.find_next(i)) {
            labels.push_back(m.frame().label_at(i));
        }
        focal.push_back(json{{"set", std::move(labels)}, {"mass", rational_to_json(mass)}});
    }
    json root{{"frame", m.frame().labels()}, {"focal", std::move(focal)}};
    return root.dump(2);
}

MassFunction mass_function_from_json_text(std::string_view text) {
    json root = parse_text(text);
    const json& frame_json = require(root, "frame");
    if (!frame_json.is_array() || frame_json.empty()) {
        throw input_error("'frame' must be a nonempty array of integer labels");
    }
    Frame frame(frame_json.get<std::vector<std::int64_t>>());

    const json& focal_json = require(root, "focal");
    if (!focal_json.is_array() || focal_json.empty()) {
        throw input_error("'focal' must be a nonempty array");
    }
    std::vector<std::pair<IndexSet, Rational>> focals;
    focals.reserve(focal_json.size());
    for (const json& entry : focal_json) {
        const json& set_json = require(entry, "set");
        if (!set_json.is_array() || set_json.empty()) {
            throw input_error("focal 'set' must be a nonempty array of labels");
        }
        IndexSet bits(frame.size());
        for (const json& label_json : set_json) {
            if (!label_json.is_number_integer()) throw input_error("focal set labels must be integers");
            auto label = label_json.get<std::int64_t>();
            auto idx = frame.index_of(label);
            if (!idx) throw input_error("focal set label " + std::to_string(label) + " not in frame");
            bits.set(*idx);
        }
        Rational mass = rational_from_json(require(entry, "mass"), "mass");
        if (mass.sign() <= 0) throw input_error("focal mass must be positive");
        focals.emplace_back(std::move(bits), std::move(mass));
    }
    try {
        return MassFunction::from_focals(std::move(frame), focals);
    } catch (const input_error&) {
        throw;
    } catch (const error& e) {
        throw input_error(e.what());
    }
}

MassFunction mass_function_from_json_file(const std::string& path) {
    return mass_function_from_json_text(read_file(path));
}

std::string to_json_text(const GeneralizedFunctionalModel& model) {
    json p_omega = json::object();
    for (std::size_t w = 0; w < model.omega_count(); ++w) {
        p_omega[model.omega_labels()[w]] = rational_to_json(model.omega_probability(w));
    }
    json f = json::object();
    for (std::size_t t = 0; t < model.theta().size(); ++t) {
        for (std::size_t w = 0; w < model.omega_count(); ++w) {
            std::string key = std::to_string(model.theta().label_at(t)) + "," + model.omega_labels()[w];
            f[std::move(key)] = model.outcome_labels()[model.outcome_at(t, w)];
        }
    }
    json root{{"theta", model.theta().labels()},
              {"omega", model.omega_labels()},
              {"outcomes", model.outcome_labels()},
              {"p_omega", std::move(p_omega)},
              {"f", std::move(f)}};
    return root.dump(2);
}

GeneralizedFunctionalModel gfm_from_json_text(std::string_view text) {
    json root = parse_text(text);
    const json& theta_json = require(root, "theta");
    if (!theta_json.is_array() || theta_json.empty()) {
        throw input_error("'theta' must be a nonempty array of integer labels");
    }
    Frame theta(theta_json.get<std::vector<std::int64_t>>());

    auto omega = require(root, "omega").get<std::vector<std::string>>();
    auto outcomes = require(root, "outcomes").get<std::vector<std::string>>();

    const json& p_json = require(root, "p_omega");
    if (!p_json.is_object()) throw input_error("'p_omega' must be an object");
    std::vector<Rational> probabilities;
    probabilities.reserve(omega.size());
    for (const auto& label : omega) {
        auto it = p_json.find(label);
        if (it == p_json.end()) throw input_error("p_omega is missing disturbance '" + label + "'");
        probabilities.push_back(rational_from_json(*it, "p_omega"));
    }
    if (p_json.size() != omega.size()) {
        throw input_error("p_omega mentions a disturbance that is not in omega");
    }

    const json& f_json = require(root, "f");
    if (!f_json.is_object()) throw input_error("'f' must be an object");
    std::vector<std::size_t> f_table(theta.size() * omega.size());
    std::size_t seen = 0;
    for (std::size_t t = 0; t < theta.size(); ++t) {
        for (std::size_t w = 0; w < omega.size(); ++w) {
            std::string key = std::to_string(theta.label_at(t)) + "," + omega[w];
            auto it = f_json.find(key);
            if (it == f_json.end()) throw input_error("f is missing entry '" + key + "'");
            if (!it->is_string()) throw input_error("f entries must be outcome names");
            auto outcome = it->get<std::string>();
            std::size_t x = 0;
            while (x < outcomes.size() && outcomes[x] != outcome) ++x;
            if (x == outcomes.size()) {
                throw input_error("f entry '" + key + "' refers to unknown outcome '" + outcome + "'");
            }
            f_table[t * omega.size() + w] = x;
            ++seen;
        }
    }
    if (f_json.size() != seen) throw input_error("f contains an entry for an unknown (theta, omega) pair");

    return GeneralizedFunctionalModel(std::move(theta), std::move(omega), std::move(probabilities),
                                      std::move(outcomes), std::move(f_table));
}

GeneralizedFunctionalModel gfm_from_json_file(const std::string& path) {
    return gfm_from_json_text(read_file(path));
}

} // namespace evw
