#pragma once

// Mechanical checks on the constructed complexes.
//
// Ranks over R are probed by pushing a matrix through the toric
// parametrization x_{i,j} -> y_i c^j at random nonzero points of F_q and
// taking the largest F_q-rank seen. The rank at any point is at most the rank
// over Frac(R), and equality fails only on a hypersurface, so for a large q a
// handful of points suffices (Schwartz-Zippel; not proven here).

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "combinatorics.hpp"
#include "modp_linalg.hpp"
#include "resolution.hpp"

namespace scrollres {

inline constexpr std::uint32_t kDefaultModulus = 32003;
inline constexpr int kDefaultTrials = 5;
inline constexpr std::uint64_t kDefaultSeed = 42;

// ---------------------------------------------------------------- evaluation

/// Values of x_1..x_n at the point (y_1..y_k, c) of the parametrization.
inline std::vector<std::uint32_t> scroll_point(const ScrollSpec& spec, const std::vector<std::uint32_t>& y, std::uint32_t c,
                                               std::uint32_t q) {
    if (static_cast<int>(y.size()) != spec.k()) throw std::invalid_argument("scroll_point: need one y per block");
    std::vector<std::uint32_t> vals(static_cast<std::size_t>(spec.n()));
    for (int v = 0; v < spec.n(); ++v) {
        const VarIndex vi = spec.var(v);
        vals[static_cast<std::size_t>(v)] = mul_mod(y[static_cast<std::size_t>(vi.block)], pow_mod(c, static_cast<std::uint64_t>(vi.pos), q), q);
    }
    return vals;
}

template <class URBG>
std::vector<std::uint32_t> random_scroll_point(const ScrollSpec& spec, std::uint32_t q, URBG& rng) {
    std::uniform_int_distribution<std::uint32_t> nonzero(1, q - 1);
    std::vector<std::uint32_t> y(static_cast<std::size_t>(spec.k()));
    for (auto& v : y) v = nonzero(rng);
    const std::uint32_t c = nonzero(rng);
    return scroll_point(spec, y, c, q);
}

inline std::uint32_t evaluate(const Element& e, const std::vector<std::uint32_t>& vals, std::uint32_t q) {
    std::uint32_t acc = 0;
    for (const auto& [mono, coeff] : e.terms()) {
        std::uint32_t t = reduce_mod(coeff, q).value();
        for (int v = 0; v < mono.nvars() && t; ++v)
            if (mono[v]) t = mul_mod(t, pow_mod(vals[static_cast<std::size_t>(v)], static_cast<std::uint64_t>(mono[v]), q), q);
        acc = add_mod(acc, t, q);
    }
    return acc;
}

/// The matrix evaluated at a point, as sparse rows.
inline std::vector<SparseRowModP> evaluate_rows(const MatrixR& mat, const std::vector<std::uint32_t>& vals, std::uint32_t q) {
    std::vector<SparseRowModP> rows(mat.rows());
    mat.for_each([&](std::size_t r, std::size_t c, const Element& e) {
        const std::uint32_t v = evaluate(e, vals, q);
        if (v) rows[r].push_back({static_cast<std::uint32_t>(c), v});
    });
    return rows;
}

// ---------------------------------------------------------------- rank probes

struct RankReport {
    std::string matrix_id;
    std::optional<std::size_t> claimed_rank;
    std::size_t probe_rank = 0;
    int probes = 0;
    std::uint32_t modulus = kDefaultModulus;
    std::uint64_t seed = kDefaultSeed;
    bool pass = true;  // probe rank equals the claim (vacuous without one)
};

/// Max F_q-rank over `trials` random scroll points. Stops early once the rank
/// reaches min(rows, cols), since no further point can exceed it.
inline RankReport probe_rank(const ScrollSpec& spec, const MatrixR& mat, int trials = kDefaultTrials,
                             std::uint32_t modulus = kDefaultModulus, std::uint64_t seed = kDefaultSeed, std::string id = {},
                             std::optional<std::size_t> claimed = std::nullopt) {
    if (modulus <= 2 || !is_prime(modulus)) throw std::invalid_argument("probe_rank: modulus must be a prime > 2");
    if (trials < 1) throw std::invalid_argument("probe_rank: need at least one trial");
    RankReport rep{std::move(id), claimed, 0, 0, modulus, seed, true};
    const std::size_t cap = std::min(mat.rows(), mat.cols());
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials && rep.probe_rank < cap; ++t) {
        const auto vals = random_scroll_point(spec, modulus, rng);
        rep.probe_rank = std::max(rep.probe_rank, sparse_rank_modp(evaluate_rows(mat, vals, modulus), mat.cols(), modulus));
        ++rep.probes;
    }
    rep.pass = !claimed || *claimed == rep.probe_rank;
    return rep;
}

/// Seed for the attempt-th rerun; attempt 0 is the base seed itself.
inline std::uint64_t rerun_seed(std::uint64_t base, int attempt) {
    return base + static_cast<std::uint64_t>(attempt) * 0x9E3779B97F4A7C15ULL;
}

// ---------------------------------------------------------------- complex

struct EntryLocation {
    int step = 0;  // the product d_step * d_{step+1}
    std::size_t row = 0, col = 0;
    std::string value;
};

struct ComplexReport {
    bool pass = true;
    std::optional<EntryLocation> first_failure;
    int products_checked = 0;
};

/// Every consecutive product d_i d_{i+1} must vanish in R.
inline ComplexReport check_complex(const Resolution& res) {
    ComplexReport rep;
    const ScrollRing ring(res.spec());
    if (res.size() < 2) return rep;
    MatrixR prev = res.differential(res.first_index());
    for (int i = res.first_index(); i < res.last_index(); ++i) {
        MatrixR next = res.differential(i + 1);
        const MatrixR prod = multiply(ring, prev, next);
        ++rep.products_checked;
        if (prod.nnz()) {
            const auto e = prod.entries().front();
            rep.pass = false;
            rep.first_failure = EntryLocation{i, e.row, e.col, e.value.str()};
            return rep;
        }
        prev = std::move(next);
    }
    return rep;
}

// ---------------------------------------------------------------- minimality

struct MinimalityReport {
    bool pass = true;
    std::optional<EntryLocation> offending;  // step is the differential index
};

/// Passes iff no entry of any differential has a nonzero constant term.
inline MinimalityReport check_minimality(const Resolution& res) {
    MinimalityReport rep;
    for (int i = res.first_index(); i <= res.last_index(); ++i) {
        const MatrixR d = res.differential(i);
        for (const auto& e : d.entries())
            if (e.value.has_constant_term()) {
                rep.pass = false;
                rep.offending = EntryLocation{i, e.row, e.col, e.value.str()};
                return rep;
            }
    }
    return rep;
}

// ---------------------------------------------------------------- exactness

struct ProbeOptions {
    int trials = kDefaultTrials;
    std::uint32_t modulus = kDefaultModulus;
    std::uint64_t seed = kDefaultSeed;
    int reruns = 3;  // fresh-seed reruns after a failed rank identity
};

struct ExactnessReport {
    int index = 0;
    std::size_t rank_here = 0, rank_next = 0, cols = 0;
    bool pass = false;
    std::vector<std::uint64_t> seeds;  // every base seed tried, in order
    std::uint32_t modulus = kDefaultModulus;
};

/// Probe ranks of each step, cached per (step, seed) so that the identities at
/// consecutive indices share work.
class RankCache {
public:
    explicit RankCache(const Resolution& res) : res_(res) {}

    const RankReport& rank(int step, const ProbeOptions& opt, std::uint64_t seed) {
        const auto key = std::tuple(step, seed, opt.modulus, opt.trials);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        RankReport r = probe_rank(res_.spec(), matrix(step), opt.trials, opt.modulus, seed, res_.block(step)->label());
        return cache_.emplace(key, std::move(r)).first->second;
    }

    const Resolution& resolution() const { return res_; }

private:
    const MatrixR& matrix(int step) {
        auto it = expanded_.find(step);
        if (it == expanded_.end()) it = expanded_.emplace(step, res_.differential(step)).first;
        return it->second;
    }

    const Resolution& res_;
    std::map<int, MatrixR> expanded_;
    std::map<std::tuple<int, std::uint64_t, std::uint32_t, int>, RankReport> cache_;
};

/// rank d_i + rank d_{i+1} = cols(d_i); reruns with fresh seeds before failing.
inline ExactnessReport check_exactness(RankCache& cache, int i, const ProbeOptions& opt = {}) {
    const Resolution& res = cache.resolution();
    if (i < res.first_index() || i >= res.last_index())
        throw std::invalid_argument("check_exactness: index " + std::to_string(i) + " needs a following step");
    ExactnessReport rep;
    rep.index = i;
    rep.cols = res.block(i)->cols();
    rep.modulus = opt.modulus;
    for (int attempt = 0; attempt <= opt.reruns; ++attempt) {
        const std::uint64_t seed = rerun_seed(opt.seed, attempt);
        rep.seeds.push_back(seed);
        rep.rank_here = cache.rank(i, opt, seed).probe_rank;
        rep.rank_next = cache.rank(i + 1, opt, seed).probe_rank;
        rep.pass = rep.rank_here + rep.rank_next == rep.cols;
        if (rep.pass) break;
    }
    return rep;
}

inline ExactnessReport check_exactness(const Resolution& res, int i, const ProbeOptions& opt = {}) {
    RankCache cache(res);
    return check_exactness(cache, i, opt);
}

// ---------------------------------------------------------------- minor certificates

enum class MinorFamily { BigPhi, phi0, phi1, phi2 };

struct MinorTarget {
    MinorFamily family = MinorFamily::phi1;
    int d = 0;  // only for BigPhi

    std::string label() const {
        switch (family) {
            case MinorFamily::BigPhi: return "Phi_" + std::to_string(d);
            case MinorFamily::phi0: return "phi_0";
            case MinorFamily::phi1: return "phi_1";
            case MinorFamily::phi2: return "phi_2";
        }
        return "?";
    }
};

struct MinorCertificate {
    std::string target;
    int var_index = 0;             // 1-based
    std::string reading = "table";
    std::vector<std::size_t> rows;  // 1-based
    std::vector<std::size_t> cols;  // 1-based
    bool well_formed = false;       // square, in range, no repeats
    bool triangular = false;        // triangular after permuting rows and columns
    Element minor;
    int expected_power = 0;
    bool pass = false;              // triangular and minor = +-x_i^power
    std::string note;
};

namespace detail {

using Index1 = std::vector<std::size_t>;

inline Index1 range1(std::size_t lo, std::size_t hi) {
    Index1 r;
    for (std::size_t s = lo; s <= hi; ++s) r.push_back(s);
    return r;
}

/// The row and column recipes of the minor tables for phi_1 (1-based).
inline std::pair<Index1, Index1> phi1_recipe(int n, int m, int i) {
    const std::size_t w = static_cast<std::size_t>(n - 2);
    const auto N = static_cast<std::size_t>(n), M = static_cast<std::size_t>(m);
    const auto I = static_cast<std::size_t>(i);
    Index1 rows, cols;
    if (i <= m - 1) {
        rows = range1(2, N - 2);
        for (std::size_t j = 0; j + 4 <= N; ++j) cols.push_back(I + j * w);
    } else if (i == m) {
        rows = range1(1, M - 2);
        for (auto s : range1(M, N - 2)) rows.push_back(s);
        for (std::size_t j = 0; j + 3 <= M; ++j) cols.push_back(M - 1 + j * w);
        for (std::size_t l = M; l <= N - 2; ++l) cols.push_back(l + (M - 2) * w);
    } else if (i == m + 1) {
        rows = range1(1, M - 1);
        for (auto s : range1(M + 1, N - 2)) rows.push_back(s);
        for (std::size_t l = 1; l + 1 <= M; ++l) cols.push_back(l + (M - 2) * w);
        for (std::size_t j = M - 1; j + 4 <= N; ++j) cols.push_back(M + j * w);
    } else {
        rows = range1(1, N - 3);
        for (std::size_t j = 0; j + 4 <= N; ++j) cols.push_back(I - 2 + j * w);
    }
    return {rows, cols};
}

inline std::pair<Index1, Index1> bigphi_recipe(int n, int m, int d, int i) {
    const std::size_t w = static_cast<std::size_t>(n - 2);
    const auto D = static_cast<std::size_t>(d);
    std::size_t base = 0;
    Index1 rows;
    if (i <= m - 1) {
        rows = range1(2, D);
        base = static_cast<std::size_t>(i);
    } else if (i == m) {
        rows = range1(1, D - 1);
        base = static_cast<std::size_t>(m - 1);
    } else if (i == m + 1) {
        rows = range1(2, D);
        base = static_cast<std::size_t>(m);
    } else {
        rows = range1(1, D - 1);
        base = static_cast<std::size_t>(i - 2);
    }
    Index1 cols;
    for (std::size_t j = 0; j + 2 <= D; ++j) cols.push_back(base + j * w);
    return {rows, cols};
}

/// phi_2 rows and columns; for i in {m, m+1} the printed set difference and
/// union are applied with the given offsets (0, 0 being the literal reading).
/// `substitute == false` drops the set operations altogether.
inline std::pair<Index1, Index1> phi2_recipe(int n, int m, int i, bool substitute, int remove_shift, int add_shift) {
    const std::size_t w = static_cast<std::size_t>(n - 2);
    const auto N = static_cast<std::size_t>(n), M = static_cast<std::size_t>(m);
    const auto [r1, c1] = phi1_recipe(n, m, i);
    Index1 rows;
    for (std::size_t t = 0; t + 4 <= N; ++t)
        for (auto s : r1) rows.push_back(s + t * w);
    Index1 cols;
    if (i <= m - 1 || i >= m + 2) {
        const std::size_t base = i <= m - 1 ? static_cast<std::size_t>(i) : static_cast<std::size_t>(i - 2);
        for (std::size_t j = 0; j <= (N - 4) * w; ++j) cols.push_back(base + j * w);
        return {rows, cols};
    }
    const std::size_t w1 = w * (N - 3);
    for (std::size_t j = 0; j + 4 <= N; ++j) {
        if (j == M - 2) continue;
        for (auto a : c1) cols.push_back(a + j * w1);
    }
    const std::size_t first = i == m ? M - 1 : M;
    for (std::size_t l = 0; l + 4 <= N; ++l) cols.push_back(first + l * w + (M - 2) * w1);
    if (substitute) {
        const long long removed = (i == m ? static_cast<long long>((M - 1) * w) : static_cast<long long>((M - 2) * w + 1)) + remove_shift;
        const long long added = (i == m ? static_cast<long long>((M - 2) * (N - 1) + 1) : static_cast<long long>(M + (M - 2) * w)) + add_shift;
        auto it = std::find(rows.begin(), rows.end(), static_cast<std::size_t>(std::max(removed, 0LL)));
        if (removed < 1 || it == rows.end()) return {{}, {}};
        rows.erase(it);
        if (added < 1) return {{}, {}};
        rows.push_back(static_cast<std::size_t>(added));
    }
    return {rows, cols};
}

/// Determinant of a matrix that is triangular up to row and column
/// permutation, found by repeatedly peeling a row with a single nonzero
/// entry. Returns nullopt if no such ordering exists.
inline std::optional<Element> triangular_determinant(const ScrollRing& ring, const MatrixR& sub) {
    const std::size_t k = sub.rows();
    if (k != sub.cols()) return std::nullopt;
    std::vector<std::vector<std::size_t>> row_cols(k);
    sub.for_each([&](std::size_t r, std::size_t c, const Element&) { row_cols[r].push_back(c); });
    std::vector<char> row_done(k, 0), col_done(k, 0);
    std::vector<std::size_t> sigma(k, 0);
    Element det = ring.element(ring.one());
    for (std::size_t step = 0; step < k; ++step) {
        bool found = false;
        for (std::size_t r = 0; r < k && !found; ++r) {
            if (row_done[r]) continue;
            std::size_t live = 0, at = 0;
            for (auto c : row_cols[r])
                if (!col_done[c]) {
                    ++live;
                    at = c;
                }
            if (live != 1) continue;
            row_done[r] = col_done[at] = 1;
            sigma[r] = at;
            det = ring.multiply(det, sub.get(r, at));
            found = true;
        }
        if (!found) return std::nullopt;
    }
    // sign of the permutation r -> sigma[r]
    std::vector<char> seen(k, 0);
    bool odd = false;
    for (std::size_t s = 0; s < k; ++s) {
        if (seen[s]) continue;
        std::size_t len = 0;
        for (std::size_t t = s; !seen[t]; t = sigma[t]) {
            seen[t] = 1;
            ++len;
        }
        if (len % 2 == 0) odd = !odd;
    }
    return odd ? -det : det;
}

inline MinorCertificate certify(const ScrollSpec& spec, const MatrixR& mat, std::string target, int var_index, int power,
                                Index1 rows, Index1 cols, std::string reading) {
    MinorCertificate cert;
    cert.target = std::move(target);
    cert.var_index = var_index;
    cert.reading = std::move(reading);
    cert.expected_power = power;
    cert.rows = rows;
    cert.cols = cols;
    const auto distinct = [](Index1 v) {
        std::sort(v.begin(), v.end());
        return std::adjacent_find(v.begin(), v.end()) == v.end();
    };
    const auto in_range = [](const Index1& v, std::size_t hi) {
        return std::all_of(v.begin(), v.end(), [hi](std::size_t x) { return x >= 1 && x <= hi; });
    };
    cert.well_formed = !rows.empty() && rows.size() == cols.size() && distinct(rows) && distinct(cols) &&
                       in_range(rows, mat.rows()) && in_range(cols, mat.cols());
    if (!cert.well_formed) {
        cert.note = "recipe does not give a square submatrix inside " + std::to_string(mat.rows()) + "x" + std::to_string(mat.cols());
        return cert;
    }
    Index1 r0, c0;
    for (auto r : rows) r0.push_back(r - 1);
    for (auto c : cols) c0.push_back(c - 1);
    const ScrollRing ring(spec);
    const auto det = triangular_determinant(ring, mat.submatrix(r0, c0));
    if (!det) {
        cert.note = "submatrix is not triangular up to permutation";
        return cert;
    }
    cert.triangular = true;
    cert.minor = *det;
    const Monomial want = Monomial::variable(spec.n(), var_index - 1, power);
    cert.pass = cert.minor.size() == 1 && cert.minor.terms().front().first == want &&
                (cert.minor.terms().front().second == 1 || cert.minor.terms().front().second == -1);
    if (!cert.pass) cert.note = "minor is " + cert.minor.str() + ", expected +-" + want.str();
    return cert;
}

inline int int_pow(int b, int e) {
    int r = 1;
    for (int t = 0; t < e; ++t) r *= b;
    return r;
}

}  // namespace detail

/// The table recipe for x_i^{power} in the ideal of maximal minors of the
/// target; var_index is 1-based. For phi_2 with i in {m, m+1} this is the
/// literal reading of the printed set operations.
inline MinorCertificate minor_certificate(const ScrollSpec& spec, MinorTarget target, int var_index) {
    const int n = spec.n(), m = spec.m();
    if (var_index < 1 || var_index > n) throw std::out_of_range("minor_certificate: variable index must be in 1..n");
    const K2Construction K(spec);
    switch (target.family) {
        case MinorFamily::BigPhi:
        case MinorFamily::phi0: {
            const int d = target.family == MinorFamily::phi0 ? 2 : target.d;
            if (d < 2) throw std::invalid_argument("minor_certificate: Phi_d needs d >= 2");
            auto [r, c] = detail::bigphi_recipe(n, m, d, var_index);
            return detail::certify(spec, K.Phi(d)->expand(), target.label(), var_index, d - 1, r, c, "table");
        }
        case MinorFamily::phi1: {
            auto [r, c] = detail::phi1_recipe(n, m, var_index);
            return detail::certify(spec, K.phi1()->expand(), target.label(), var_index, n - 3, r, c, "table");
        }
        case MinorFamily::phi2: {
            auto [r, c] = detail::phi2_recipe(n, m, var_index, true, 0, 0);
            return detail::certify(spec, K.phi2()->expand(), target.label(), var_index, (n - 3) * (n - 3), r, c,
                                   var_index == m || var_index == m + 1 ? "literal" : "table");
        }
    }
    throw std::logic_error("minor_certificate: unknown target");
}

/// For phi_2, every candidate reading of the rows recipe: without the set
/// operations, and with the removed and added rows shifted by -1, 0 or +1.
/// Rows i outside {m, m+1} have a single reading.
inline std::vector<MinorCertificate> phi2_readings(const ScrollSpec& spec, int var_index) {
    const int n = spec.n(), m = spec.m();
    if (var_index < 1 || var_index > n) throw std::out_of_range("phi2_readings: variable index must be in 1..n");
    const MatrixR f2 = K2Construction(spec).phi2()->expand();
    const int power = (n - 3) * (n - 3);
    std::vector<MinorCertificate> out;
    if (var_index != m && var_index != m + 1) {
        auto [r, c] = detail::phi2_recipe(n, m, var_index, false, 0, 0);
        out.push_back(detail::certify(spec, f2, "phi_2", var_index, power, r, c, "table"));
        return out;
    }
    {
        auto [r, c] = detail::phi2_recipe(n, m, var_index, false, 0, 0);
        out.push_back(detail::certify(spec, f2, "phi_2", var_index, power, r, c, "without set operations"));
    }
    for (int rs = -1; rs <= 1; ++rs)
        for (int as = -1; as <= 1; ++as) {
            auto [r, c] = detail::phi2_recipe(n, m, var_index, true, rs, as);
            std::ostringstream name;
            name << "remove" << (rs > 0 ? "+" : "") << (rs ? std::to_string(rs) : "") << " add" << (as > 0 ? "+" : "")
                 << (as ? std::to_string(as) : "");
            std::string label = rs == 0 && as == 0 ? "literal" : name.str();
            out.push_back(detail::certify(spec, f2, "phi_2", var_index, power, r, c, label));
        }
    return out;
}

// ---------------------------------------------------------------- Groebner consistency

struct GroebnerReport {
    bool pass = true;
    std::string details;
};

/// At most one standard monomial per A-degree, and the number of standard
/// monomials of each degree equals the Hilbert coefficient, for d <= dmax.
inline GroebnerReport groebner_consistency(const ScrollSpec& spec, int dmax) {
    if (dmax < 1) throw std::invalid_argument("groebner_consistency: dmax must be >= 1");
    if (spec.n() > 9) throw std::invalid_argument("groebner_consistency: limited to n <= 9");
    GroebnerReport rep;
    const ScrollRing ring(spec);
    const IntSeries h = hilbert_coeffs(spec, dmax);
    for (int d = 0; d <= dmax; ++d) {
        const auto basis = ring.standard_monomials(d);
        std::map<MultiDegree, Monomial> seen;
        for (const auto& mono : basis) {
            auto [it, fresh] = seen.emplace(ring.adegree(mono), mono);
            if (!fresh) {
                rep.pass = false;
                rep.details = "degree " + std::to_string(d) + ": " + it->second.str() + " and " + mono.str() + " share an A-degree";
                return rep;
            }
        }
        if (BigInt(basis.size()) != h[static_cast<std::size_t>(d)]) {
            rep.pass = false;
            rep.details = "degree " + std::to_string(d) + ": " + std::to_string(basis.size()) + " standard monomials, Hilbert coefficient " +
                          h[static_cast<std::size_t>(d)].str();
            return rep;
        }
    }
    rep.details = "degrees 0.." + std::to_string(dmax) + " consistent";
    return rep;
}

// ---------------------------------------------------------------- fault injection

enum class FaultKind { SignFlip, VariableSwap, UnitInsertion };

inline std::string to_string(FaultKind f) {
    switch (f) {
        case FaultKind::SignFlip: return "sign-flip";
        case FaultKind::VariableSwap: return "variable-swap";
        case FaultKind::UnitInsertion: return "unit-insertion";
    }
    return "?";
}

inline std::optional<FaultKind> parse_fault(const std::string& s) {
    for (auto f : {FaultKind::SignFlip, FaultKind::VariableSwap, FaultKind::UnitInsertion})
        if (to_string(f) == s) return f;
    return std::nullopt;
}

/// Mutates the nonzero entry number `which` (in (row, col) order) of `mat`:
/// negate it, replace each variable x_v by x_{v+1} (cyclically), or add 1.
inline MatrixR inject_fault(const ScrollSpec& spec, const MatrixR& mat, FaultKind kind, std::size_t which = 0) {
    const auto entries = mat.entries();
    if (entries.empty()) throw std::invalid_argument("inject_fault: matrix has no entries");
    const auto& e = entries[which % entries.size()];
    const ScrollRing ring(spec);
    MatrixR out = mat;
    switch (kind) {
        case FaultKind::SignFlip: out.set(e.row, e.col, -e.value); break;
        case FaultKind::VariableSwap: {
            std::vector<std::pair<Monomial, Rational>> raw;
            for (const auto& [mono, c] : e.value.terms()) {
                Monomial shifted(spec.n());
                for (int v = 0; v < spec.n(); ++v) shifted.set((v + 1) % spec.n(), mono[v]);
                raw.emplace_back(shifted, c);
            }
            out.set(e.row, e.col, ring.normal_form(raw));
            break;
        }
        case FaultKind::UnitInsertion: out.set(e.row, e.col, e.value + ring.element(ring.one())); break;
    }
    return out;
}

/// A copy of the resolution with one differential replaced.
inline Resolution with_step(const Resolution& res, int index, MatrixR replacement) {
    std::vector<BlockRPtr> steps;
    for (int i = res.first_index(); i <= res.last_index(); ++i)
        steps.push_back(i == index ? BlockR::leaf(std::move(replacement), res.block(i)->label() + "*") : res.block(i));
    return Resolution(res.spec(), res.target(), res.first_index(), std::move(steps));
}

}  // namespace scrollres
