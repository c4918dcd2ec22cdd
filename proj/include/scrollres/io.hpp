#pragma once

// Text and JSON forms. Every number in JSON is a decimal string and every
// row, column and variable index is 1-based.

#include <cctype>
#include <concepts>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oracle.hpp"
#include "resolution.hpp"

namespace scrollres {

using Json = nlohmann::ordered_json;

template <std::integral T>
std::string dec(T v) {
    return std::to_string(v);
}
inline std::string dec(const BigInt& v) { return v.str(); }

/// Parses the canonical element form ("x1*x6 - x2*x5", "-3/2*x3^2", "1")
/// and returns its normal form.
inline Element parse_element(std::string_view text, const ScrollSpec& spec) {
    const int n = spec.n();
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) -> Element {
        throw std::invalid_argument("cannot parse ring element '" + std::string(text) + "': " + why);
    };
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto number = [&]() -> std::optional<BigInt> {
        skip();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) return std::nullopt;
        return BigInt(std::string(text.substr(start, pos - start)));
    };
    std::vector<std::pair<Monomial, Rational>> raw;
    bool first = true;
    while (true) {
        skip();
        if (pos == text.size()) break;
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            return fail("expected + or - at position " + std::to_string(pos));
        }
        first = false;
        Rational coeff = sign;
        Monomial mono(n);
        bool have_factor = false;
        if (auto num = number()) {
            Rational c(*num);
            skip();
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                auto den = number();
                if (!den || *den == 0) return fail("bad denominator");
                c /= Rational(*den);
            }
            coeff *= c;
            have_factor = true;
            skip();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
            } else {
                raw.emplace_back(mono, coeff);
                continue;
            }
        }
        while (true) {
            skip();
            if (pos >= text.size() || text[pos] != 'x') {
                if (!have_factor) return fail("expected a variable at position " + std::to_string(pos));
                return fail("dangling '*'");
            }
            ++pos;
            auto idx = number();
            if (!idx || *idx < 1 || *idx > n) return fail("variable index outside 1.." + std::to_string(n));
            int e = 1;
            skip();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                auto ex = number();
                if (!ex) return fail("missing exponent");
                e = static_cast<int>(*ex);
            }
            const int v = static_cast<int>(*idx) - 1;
            mono.set(v, mono[v] + e);
            have_factor = true;
            skip();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                continue;
            }
            break;
        }
        raw.emplace_back(mono, coeff);
    }
    if (first) return fail("empty");
    return ScrollRing(spec).normal_form(raw);
}

inline Json spec_json(const ScrollSpec& spec) {
    Json blocks = Json::array();
    for (int m : spec.blocks()) blocks.push_back(dec(m));
    return Json{{"blocks", blocks}, {"n", dec(spec.n())}, {"label", spec.label()}};
}

inline Json matrix_json(const MatrixR& m) {
    Json entries = Json::array();
    for (const auto& e : m.entries()) entries.push_back(Json::array({dec(e.row + 1), dec(e.col + 1), e.value.str()}));
    return Json{{"rows", dec(m.rows())}, {"cols", dec(m.cols())}, {"entries", entries}};
}

inline Json resolution_json(const Resolution& res) {
    Json steps = Json::array();
    for (int i = res.first_index(); i <= res.last_index(); ++i) {
        const auto& blk = res.block(i);
        Json step = Json{{"index", dec(i)}, {"label", blk->label()}};
        Json parts = Json::array();
        for (const auto& l : blk->child_labels()) parts.push_back(l);
        step["blocks"] = parts;
        const Json mat = matrix_json(res.differential(i));
        for (const auto& [k, v] : mat.items()) step[k] = v;
        steps.push_back(step);
    }
    Json ranks = Json::array();
    for (auto r : res.ranks()) ranks.push_back(dec(r));
    return Json{{"spec", spec_json(res.spec())}, {"target", to_string(res.target())}, {"ranks", ranks}, {"steps", steps}};
}

inline ScrollSpec spec_from_json(const Json& j) {
    std::vector<int> blocks;
    for (const auto& b : j.at("blocks")) blocks.push_back(std::stoi(b.get<std::string>()));
    return ScrollSpec(blocks);
}

inline MatrixR matrix_from_json(const Json& j, const ScrollSpec& spec) {
    MatrixR m(std::stoull(j.at("rows").get<std::string>()), std::stoull(j.at("cols").get<std::string>()));
    for (const auto& e : j.at("entries"))
        m.set(std::stoull(e.at(0).get<std::string>()) - 1, std::stoull(e.at(1).get<std::string>()) - 1,
              parse_element(e.at(2).get<std::string>(), spec));
    return m;
}

/// One "r c element" line per entry.
inline void write_matrix_text(std::ostream& os, const MatrixR& m) {
    for (const auto& e : m.entries()) os << e.row + 1 << ' ' << e.col + 1 << ' ' << e.value.str() << '\n';
}

inline Json betti_table_json(const BettiTable& t) {
    Json entries = Json::array();
    for (const auto& e : t.entries) entries.push_back(Json{{"i", dec(e.i)}, {"j", dec(e.j)}, {"value", dec(e.value)}});
    return Json{{"modulus", dec(t.modulus)}, {"entries", entries}};
}

struct CheckRecord {
    std::string name;
    std::string target;
    bool pass = false;
    std::string details;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint32_t> modulus;
};

inline Json report_json(const std::vector<CheckRecord>& checks) {
    Json arr = Json::array();
    for (const auto& c : checks)
        arr.push_back(Json{{"name", c.name},
                           {"target", c.target},
                           {"verdict", c.pass ? "pass" : "fail"},
                           {"details", c.details},
                           {"seed", c.seed ? Json(dec(*c.seed)) : Json(nullptr)},
                           {"modulus", c.modulus ? Json(dec(*c.modulus)) : Json(nullptr)}});
    return Json{{"checks", arr}};
}

}  // namespace scrollres
