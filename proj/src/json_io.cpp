// json_io.cpp

#include "schubaut/json_io.hpp"

#include <stdexcept>

namespace schubaut::jsonio {

using nlohmann::json;

json to_json(const Root& r) { return json(r.coords); }
json to_json(const Weight& w) { return json(w.fw); }
json to_json(const Parabolic& p) { return json(p.simples()); }

json to_json(const RootSystem& rs, const WeylElement& w) {
    json rows = json::array();
    for (int r = 0; r < w.rank(); ++r) {
        json row = json::array();
        for (int c = 0; c < w.rank(); ++c) row.push_back(w.matrix().at(r, c));
        rows.push_back(std::move(row));
    }
    const Word word = w.cached_word() ? *w.cached_word() : reduced_word(rs, w);
    return json{{"matrix", std::move(rows)}, {"word", word}};
}

json to_json(const RootSystem&, const MinusculeReport& rep) {
    return json{{"index", rep.index},
                {"minuscule", rep.minuscule},
                {"cominuscule", rep.cominuscule},
                {"w0J_image", to_json(rep.w0J_image)}};
}

json to_json(const RootSystem& rs, const TransporterResult& res) {
    return json{{"target", to_json(res.target)},
                {"element", to_json(rs, res.element)},
                {"length", res.length},
                {"unique", res.unique},
                {"reduced_word", res.element.cached_word() ? *res.element.cached_word()
                                                           : reduced_word(rs, res.element)}};
}

json to_json(const RootSystem& rs, const WitnessReport& rep) {
    return json{{"ambient", to_json(rep.ambient)},
                {"element", to_json(rs, rep.element)},
                {"stabilizer", rep.stabilizer},
                {"in_min_reps", rep.in_min_reps},
                {"faithful", rep.faithful},
                {"verdict", rep.verdict},
                {"failed", rep.failed}};
}

json to_json(const LemmaSuiteResult& res) {
    json checks = json::array();
    for (const LemmaCheck& c : res.checks)
        checks.push_back(json{{"description", c.description},
                              {"expected", c.expected},
                              {"computed", c.computed},
                              {"pass", c.pass}});
    return json{{"suite_id", res.suite_id},
                {"checks", std::move(checks)},
                {"notes", res.notes},
                {"all_pass", res.all_pass}};
}

json to_json(const Character& chi) {
    json out = json::array();
    for (const auto& [weight, mult] : chi.terms())
        out.push_back(json{{"weight", weight.fw}, {"mult", mult}});
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string cur;
    for (char ch : text + ",") {
        if (ch == ',') {
            if (!cur.empty()) {
                try {
                    out.push_back(std::stoi(cur));
                } catch (const std::exception&) {
                    throw std::invalid_argument("not an integer list: " + text);
                }
                cur.clear();
            }
        } else if (ch == ' ') {
            continue;
        } else {
            cur += ch;
        }
    }
    return out;
}

}  // namespace schubaut::jsonio
