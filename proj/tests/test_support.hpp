#pragma once

#include <string>
#include <vector>

#include "s22_reference.hpp"
#include "scrollres/scrollres.hpp"

namespace testing_support {

/// Every block tuple with k blocks of size >= 2 summing to n.
inline std::vector<std::vector<int>> compositions(int k, int n) {
    std::vector<std::vector<int>> out;
    if (k == 0) {
        if (n == 0) out.push_back({});
        return out;
    }
    for (int first = 2; first <= n - 2 * (k - 1); ++first)
        for (auto rest : compositions(k - 1, n - first)) {
            rest.insert(rest.begin(), first);
            out.push_back(rest);
        }
    return out;
}

/// All (m, p) with m, p >= 2 and nmin <= m + p <= nmax.
inline std::vector<scrollres::ScrollSpec> two_block_specs(int nmin, int nmax) {
    std::vector<scrollres::ScrollSpec> out;
    for (int n = nmin; n <= nmax; ++n)
        for (const auto& b : compositions(2, n)) out.emplace_back(b);
    return out;
}

/// All specs with 1 <= k <= kmax blocks and n <= nmax.
inline std::vector<scrollres::ScrollSpec> specs_up_to(int kmax, int nmax) {
    std::vector<scrollres::ScrollSpec> out;
    for (int k = 1; k <= kmax; ++k)
        for (int n = 2 * k; n <= nmax; ++n)
            for (const auto& b : compositions(k, n)) out.emplace_back(b);
    return out;
}

/// Empty string when equal, otherwise the first difference.
inline std::string compare_with_reference(const scrollres::MatrixR& got, const s22::RefMatrix& want) {
    if (static_cast<int>(got.rows()) != want.rows || static_cast<int>(got.cols()) != want.cols)
        return "shape " + std::to_string(got.rows()) + "x" + std::to_string(got.cols()) + " vs " + std::to_string(want.rows) + "x" +
               std::to_string(want.cols);
    std::map<std::pair<int, int>, std::string> have;
    for (const auto& e : got.entries()) have[{static_cast<int>(e.row) + 1, static_cast<int>(e.col) + 1}] = e.value.str();
    for (const auto& [rc, v] : want.entries) {
        auto it = have.find(rc);
        const std::string g = it == have.end() ? "0" : it->second;
        if (g != v) return "entry (" + std::to_string(rc.first) + "," + std::to_string(rc.second) + "): got " + g + ", want " + v;
    }
    for (const auto& [rc, v] : have)
        if (!want.entries.count(rc))
            return "entry (" + std::to_string(rc.first) + "," + std::to_string(rc.second) + "): got " + v + ", want 0";
    return {};
}

}  // namespace testing_support
