// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Expected constants were computed independently (closed forms, the worked
// examples, and brute-force oracles) before being frozen here.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "readchan/channel.hpp"
#include "readchan/enumerate.hpp"
#include "readchan/spectral.hpp"
#include "readchan/stategraph.hpp"
#include "readchan/transforms.hpp"
#include "readchan/twodim.hpp"

using namespace readchan;

namespace {

struct Criterion {
    std::string name;
    std::function<bool(std::string&)> run;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

int start_of(const IntervalGraph& H) {
    const IntervalNode full{0, H.p.ell - H.p.delta};
    for (size_t i = 0; i < H.nodes.size(); ++i)
        if (H.nodes[i] == full) return static_cast<int>(i);
    return -1;
}

bool criterion_closed_forms(std::string& detail) {
    const double c32 = capacity_closed_form({3, 2}).primary.value;
    const double c62 = capacity_closed_form({6, 2}).primary.value;
    const double c82 = capacity_closed_form({8, 2}).primary.value;
    const double c42 = capacity_closed_form({4, 2}).primary.value;
    detail = "capacity(3,2)=" + fmt6(c32) + " capacity(4,2)=" + fmt6(c42) +
             " capacity(6,2)=" + fmt6(c62) + " capacity(8,2)=" + fmt6(c82);
    return std::fabs(c32 - 0.8858) < 5e-4 && std::fabs(c62 - 0.7925) < 5e-4 &&
           std::fabs(c82 - 0.7925) < 5e-4 && c62 == c82 &&
           std::fabs(c42 - 0.7925) < 5e-4;  // 0.7925, not the inconsistent published 0.7958
}

bool determinized_capacity(int ell, double expected, std::string& detail) {
    const auto t0 = std::chrono::steady_clock::now();
    const LabeledGraph G = build_G({ell, 2});
    const DeterminizedGraph D = subset_determinize(G, all_nodes(G));
    const double cap = std::log2(perron_eigenvalue(adjacency_matrix(D.graph))) / 2.0;
    const double elapsed = seconds_since(t0);
    detail += "G(" + std::to_string(ell) + ",2): " + fmt6(cap) + " in " + fmt6(elapsed) + "s  ";
    return std::fabs(cap - expected) < 5e-4 && elapsed < 10.0;
}

bool criterion_determinization(std::string& detail) {
    return determinized_capacity(5, 0.9258, detail) && determinized_capacity(7, 0.9361, detail);
}

bool criterion_upper_bound(std::string& detail) {
    const double v = constraint_capacity(1, 2).value;
    detail = "constraint capacity (b=1,delta=2) = " + fmt6(v);
    // closed form log2((3+sqrt(21))/2)/2 = 0.961344, printed as 0.9613
    if (std::fabs(v - 0.961344) > 1e-6) return false;
    if (std::fabs(v - 0.9613) > 5e-5) return false;
    std::string sub;
    return determinized_capacity(5, 0.9258, sub) && v > 0.9258 && v > 0.9361;
}

bool criterion_structural(std::string& detail) {
    const auto t0 = std::chrono::steady_clock::now();
    int pairs = 0;
    for (int ell = 3; ell <= 12; ++ell)
        for (int delta = ell / 2 + 1; delta < ell; ++delta) {
            const IntervalGraph Hs = prune_H(build_H({ell, delta}));
            const IntMatrix built = adjacency_from_graph(Hs, node_ordering(Hs));
            if (!(built == adjacency_closed_form({ell, delta}))) return false;
            Polynomial expected;
            expected.coef.assign(static_cast<size_t>(built.dim()) + 1, 0);
            const long long dl = ell - delta;
            expected.coef[static_cast<size_t>(built.dim())] = 1;
            expected.coef[static_cast<size_t>(built.dim() - 1)] = -(ell + 1);
            expected.coef[static_cast<size_t>(built.dim() - 2)] = dl * (dl + 1);
            if (!(char_poly(built) == expected)) return false;
            ++pairs;
        }
    const double elapsed = seconds_since(t0);
    detail = std::to_string(pairs) + " parameter pairs in " + fmt6(elapsed) + "s";
    return elapsed < 30.0;
}

bool criterion_worked_matrix(std::string& detail) {
    const IntervalGraph Hs = prune_H(build_H({5, 3}));
    const IntMatrix A = adjacency_from_graph(Hs, node_ordering(Hs));
    const IntMatrix expected{{2, 1, 1, 1, 1},
                             {1, 1, 1, 1, 1},
                             {1, 1, 1, 1, 1},
                             {0, 1, 1, 1, 1},
                             {0, 1, 1, 1, 1}};
    if (!(A == expected)) return false;
    if (!(char_poly(A) == Polynomial{{0, 0, 0, 6, -6, 1}})) return false;
    const double lam = perron_eigenvalue(A);
    detail = "perron = " + fmt6(lam);
    return std::fabs(lam - (3.0 + std::sqrt(3.0))) < 1e-9 && fmt6(lam) == "4.732051";
}

bool criterion_oracle_agreement(std::string& detail) {
    const auto t0 = std::chrono::steady_clock::now();
    int checked = 0;
    for (const ChannelParams p : {ChannelParams{3, 2}, {5, 3}, {5, 4}, {7, 4}}) {
        const IntervalGraph H = build_H(p);
        const LabeledGraph HL = H.to_labeled();
        const int start = start_of(H);
        for (int n = p.ell; n <= 18; n += p.delta) {
            const int t = (n - p.ell) / p.delta;
            if (count_read_vectors(n, p, 2).count != path_language_count(HL, start, t + 1))
                return false;
            ++checked;
        }
    }
    detail = std::to_string(checked) + " (n, ell, delta) points in " + fmt6(seconds_since(t0)) + "s";
    return seconds_since(t0) < 120.0;
}

bool criterion_qary_equality(std::string& detail) {
    const auto t0 = std::chrono::steady_clock::now();
    for (const ChannelParams p : {ChannelParams{2, 2}, {3, 2}}) {
        for (int n = p.ell; n <= 8; n += p.delta) {
            const auto a3 = count_read_vectors(n, p, 3).count;
            const auto a2 = count_read_vectors(2 * n, {2 * p.ell, 2 * p.delta}, 2).count;
            if (a3 != a2) return false;
        }
    }
    detail = "ternary equals folded binary up to n=8 in " + fmt6(seconds_since(t0)) + "s";
    return seconds_since(t0) < 60.0;
}

bool criterion_block_machinery(std::string& detail) {
    const auto t0 = std::chrono::steady_clock::now();
    const ChannelParams p{8, 3};

    for (int n : {11, 14, 17}) {
        const BlockIndexGrid g(n, p);
        for (const Word& v : pi_words(n, p))
            if (read_vector(phi(v, g), p) != read_vector(v, p)) return false;
    }

    const BlockIndexGrid g14(14, p);
    const Word v5{0, 1, 1, 0, 0, 0, 0, 1, 1, 1, 1, 0, 1, 1};
    if (phi(v5, g14) != Word{0, 1, 0, 0, 1, 0, 0, 1, 1, 0, 1, 1, 1, 1}) return false;
    const Word v7{0, 1, 1, 0, 0, 1, 0, 0, 1, 0, 1, 1, 1, 1};
    if (g_map(v7, g14) != Word{0, 1, 1, 0, 0, 0, 0, 1, 1, 1, 1, 0, 1, 1}) return false;

    const auto C14 = build_code_C(14, p);
    std::set<Word> images;
    for (const Word& v : C14) {
        const Word gv = g_map(v, g14);
        if (!images.insert(gv).second) return false;  // injectivity
        if (!check_L_constraint(subvector(gv, 1, 8), p.b(), p.delta)) return false;
    }

    for (int n0 : {8, 11}) {
        const int ad = p.a() * p.delta;
        const auto An = count_read_vectors(n0 + ad, p, 2).count;
        const auto Cn = build_code_C(n0 + ad, p).size();
        const auto Wn = count_L_words(n0, p);
        if (!(An <= Cn && Cn <= (1ull << ad) * Wn)) return false;
    }
    detail = "|C(14)| = " + std::to_string(C14.size()) + ", all block checks in " +
             fmt6(seconds_since(t0)) + "s";
    return seconds_since(t0) < 120.0;
}

bool criterion_twodim(std::string& detail) {
    const auto t0 = std::chrono::steady_clock::now();
    const EqualityReport binary = finite_equalities_check({{2, 1}, {2, 2}, 2}, 3, 4);
    const EqualityReport ternary = finite_equalities_check({{1, 1}, {1, 1}, 3}, 2, 2);
    bool saw_collapse = false, saw_folding = false, saw_refinement = false;
    for (const auto& c : binary.checks) {
        saw_collapse |= c.name.find("collapse") != std::string::npos;
        saw_refinement |= c.is_inequality;
    }
    for (const auto& c : ternary.checks) saw_folding |= c.name.find("folding") != std::string::npos;
    detail = "grid checks in " + fmt6(seconds_since(t0)) + "s";
    return binary.all_pass() && ternary.all_pass() && saw_collapse && saw_folding &&
           saw_refinement && seconds_since(t0) < 120.0;
}

bool criterion_growth(std::string& detail) {
    const auto t0 = std::chrono::steady_clock::now();
    struct Setup {
        ChannelParams p;
        int n_max;
        double lambda;
    };
    for (const Setup& s : {Setup{{3, 2}, 21, 2.0 + std::sqrt(2.0)},
                           Setup{{5, 3}, 23, 3.0 + std::sqrt(3.0)}}) {
        std::vector<int> ns;
        for (int n = s.p.ell; n <= s.n_max; n += s.p.delta) ns.push_back(n);
        const auto counts = rate_sequence(s.p, 2, ns);
        const auto ratios = growth_ratio(counts, s.p.delta);
        for (size_t i = ratios.size() - 3; i < ratios.size(); ++i) {
            const double rel = std::fabs(ratios[i] - s.lambda) / s.lambda;
            detail += fmt6(rel) + " ";
            if (rel >= 0.02) return false;
        }
    }
    detail += "rel. errors vs the eigenvalues, " + fmt6(seconds_since(t0)) + "s";
    return seconds_since(t0) < 60.0;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"closed-form capacities match the published table", criterion_closed_forms},
        {"subset determinization reproduces the algorithmic values", criterion_determinization},
        {"constraint upper bound value and dominance", criterion_upper_bound},
        {"structural identities across the strict-overlap regime", criterion_structural},
        {"worked 5x5 adjacency, polynomial, and eigenvalue", criterion_worked_matrix},
        {"exhaustive counts agree with path counts", criterion_oracle_agreement},
        {"ternary-to-binary count equality", criterion_qary_equality},
        {"block rewriting machinery, exhaustively", criterion_block_machinery},
        {"two-dimensional finite-size identities", criterion_twodim},
        {"growth ratios approach the eigenvalues", criterion_growth},
    };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        std::string detail;
        bool pass = false;
        try {
            pass = criteria[i].run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("criterion %2zu: %s - %s%s%s\n", i + 1, pass ? "PASS" : "FAIL",
                    criteria[i].name.c_str(), detail.empty() ? "" : "  | ", detail.c_str());
        failures += !pass;
    }
    std::printf("%zu/%zu acceptance criteria passed\n", criteria.size() - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
