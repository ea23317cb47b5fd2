#include "readchan/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace readchan {

std::string to_string(const Polynomial& p) {
    if (p.coef.empty()) return "0";
    std::string s;
    for (int d = p.degree(); d >= 0; --d) {
        const long long c = p.coef[static_cast<size_t>(d)];
        if (c == 0) continue;
        if (!s.empty()) s += (c > 0) ? " + " : " - ";
        else if (c < 0) s += "-";
        const long long a = std::llabs(c);
        if (a != 1 || d == 0) s += std::to_string(a);
        if (d > 0) {
            if (a != 1) s += "*";
            s += "x";
            if (d > 1) s += "^" + std::to_string(d);
        }
    }
    return s.empty() ? "0" : s;
}

namespace {

using i128 = __int128;

const i128 kOverflowGuard = (i128(1) << 100);

void guard(i128 v) {
    if (v > kOverflowGuard || v < -kOverflowGuard)
        throw numeric_error("char_poly: exact intermediate exceeds 128-bit headroom");
}

}  // namespace

Polynomial char_poly(const IntMatrix& A) {
    const int n = A.dim();
    Polynomial p;
    p.coef.assign(static_cast<size_t>(n) + 1, 0);
    p.coef[static_cast<size_t>(n)] = 1;
    if (n == 0) return p;

    std::vector<i128> M(static_cast<size_t>(n) * n, 0);   // M_0 = 0
    std::vector<i128> AM(static_cast<size_t>(n) * n, 0);
    std::vector<i128> c(static_cast<size_t>(n) + 1, 0);
    c[static_cast<size_t>(n)] = 1;

    for (int k = 1; k <= n; ++k) {
        // M_k = A * M_{k-1} + c_{n-k+1} * I
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                i128 s = 0;
                for (int l = 0; l < n; ++l)
                    s += static_cast<i128>(A.at(i, l)) * M[static_cast<size_t>(l) * n + j];
                guard(s);
                AM[static_cast<size_t>(i) * n + j] = s;
            }
        for (int i = 0; i < n; ++i) AM[static_cast<size_t>(i) * n + i] += c[static_cast<size_t>(n - k + 1)];
        M.swap(AM);
        // c_{n-k} = -tr(A * M_k) / k, exact by construction
        i128 tr = 0;
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l)
                tr += static_cast<i128>(A.at(i, l)) * M[static_cast<size_t>(l) * n + i];
        guard(tr);
        c[static_cast<size_t>(n - k)] = -tr / k;
    }

    for (int k = 0; k <= n; ++k) {
        const i128 v = c[static_cast<size_t>(k)];
        if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
            throw numeric_error("char_poly: coefficient exceeds 64 bits");
        p.coef[static_cast<size_t>(k)] = static_cast<long long>(v);
    }
    return p;
}

namespace {

// Iterative Tarjan.
std::vector<std::vector<int>> strongly_connected_components(const IntMatrix& A) {
    const int n = A.dim();
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (A.at(i, j) > 0) adj[static_cast<size_t>(i)].push_back(j);

    std::vector<int> index(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0);
    std::vector<bool> onstack(static_cast<size_t>(n), false);
    std::vector<int> stack;
    std::vector<std::vector<int>> sccs;
    int counter = 0;

    std::vector<std::pair<int, size_t>> work;
    for (int root = 0; root < n; ++root) {
        if (index[static_cast<size_t>(root)] != -1) continue;
        work.push_back({root, 0});
        while (!work.empty()) {
            auto [v, ei] = work.back();
            work.pop_back();
            if (ei == 0) {
                index[static_cast<size_t>(v)] = low[static_cast<size_t>(v)] = counter++;
                stack.push_back(v);
                onstack[static_cast<size_t>(v)] = true;
            }
            bool descended = false;
            for (size_t i = ei; i < adj[static_cast<size_t>(v)].size(); ++i) {
                const int w = adj[static_cast<size_t>(v)][i];
                if (index[static_cast<size_t>(w)] == -1) {
                    work.push_back({v, i + 1});
                    work.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (onstack[static_cast<size_t>(w)])
                    low[static_cast<size_t>(v)] = std::min(low[static_cast<size_t>(v)], index[static_cast<size_t>(w)]);
            }
            if (descended) continue;
            if (low[static_cast<size_t>(v)] == index[static_cast<size_t>(v)]) {
                std::vector<int> comp;
                while (true) {
                    const int w = stack.back();
                    stack.pop_back();
                    onstack[static_cast<size_t>(w)] = false;
                    comp.push_back(w);
                    if (w == v) break;
                }
                sccs.push_back(std::move(comp));
            }
            if (!work.empty()) {
                const int parent = work.back().first;
                low[static_cast<size_t>(parent)] =
                    std::min(low[static_cast<size_t>(parent)], low[static_cast<size_t>(v)]);
            }
        }
    }
    return sccs;
}

// Collatz-Wielandt brackets on (B + I); exact for 1x1 blocks.
double component_radius(const IntMatrix& A, const std::vector<int>& comp, double tol,
                        long long max_iterations) {
    const int m = static_cast<int>(comp.size());
    if (m == 1) return static_cast<double>(A.at(comp[0], comp[0]));

    std::vector<double> x(static_cast<size_t>(m), 1.0), y(static_cast<size_t>(m));
    for (long long it = 0; it < max_iterations; ++it) {
        double lo = std::numeric_limits<double>::infinity(), hi = 0.0, norm = 0.0;
        for (int i = 0; i < m; ++i) {
            double s = x[static_cast<size_t>(i)];  // the +I shift
            for (int j = 0; j < m; ++j)
                s += static_cast<double>(A.at(comp[static_cast<size_t>(i)], comp[static_cast<size_t>(j)])) *
                     x[static_cast<size_t>(j)];
            y[static_cast<size_t>(i)] = s;
            const double ratio = s / x[static_cast<size_t>(i)];
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
            norm = std::max(norm, s);
        }
        if (hi - lo <= tol * hi) return 0.5 * (lo + hi) - 1.0;
        for (int i = 0; i < m; ++i) x[static_cast<size_t>(i)] = y[static_cast<size_t>(i)] / norm;
    }
    throw numeric_error("perron_eigenvalue: power iteration did not converge");
}

}  // namespace

double perron_eigenvalue(const IntMatrix& A, double tol, long long max_iterations) {
    if (tol <= 0) throw param_error("perron_eigenvalue: tol must be positive");
    for (int i = 0; i < A.dim(); ++i)
        for (int j = 0; j < A.dim(); ++j)
            if (A.at(i, j) < 0) throw param_error("perron_eigenvalue: matrix must be non-negative");
    double best = 0.0;
    for (const auto& comp : strongly_connected_components(A))
        best = std::max(best, component_radius(A, comp, tol, max_iterations));
    return best;  // 0 when every component is a node without a self-loop (nilpotent)
}

namespace {

CapacityValue exact_value(double v, std::string prov) {
    return {CapKind::exact, v, std::move(prov)};
}

}  // namespace

CapacityValue constraint_capacity(int b, int delta) {
    if (!(0 < b && b < delta))
        throw param_error("constraint_capacity: requires 0 < b < delta");
    const int d = delta - b;
    const double m = static_cast<double>((b + 1) * (d + 1));
    const double lam = 0.5 * (m - 1.0 + std::sqrt((m - 1.0) * (m - 1.0) + 4.0 * (m - 1.0)));
    return {CapKind::upper_bound, std::log2(lam) / delta, "block-constraint diagram"};
}

CapacityResult capacity_closed_form(const ChannelParams& p) {
    CapacityResult r;
    if (p.delta == 1) {
        r.primary = exact_value(1.0, "unit-step channel");
        return r;
    }
    if (p.ell <= p.delta) {
        r.primary = exact_value(std::log2(p.ell + 1.0) / p.delta, "disjoint windows");
        return r;
    }
    if (p.ell % p.delta == 0) {
        r.primary = exact_value(std::log2(p.delta + 1.0) / p.delta, "aligned window multiples");
        return r;
    }
    if (p.ell < 2 * p.delta) {
        const double l = p.ell, dl = p.ell - p.delta;
        const double lam = 0.5 * (l + 1.0 + std::sqrt((l + 1.0) * (l + 1.0) - 4.0 * dl * (dl + 1.0)));
        r.primary = exact_value(std::log2(lam) / p.delta, "interval-graph eigenvalue");
        return r;
    }
    r.exact = false;
    r.primary = {CapKind::lower_bound, std::log2(p.delta + 1.0) / p.delta, "aligned-multiple rate"};
    r.upper = constraint_capacity(p.b(), p.delta);
    return r;
}

ConstraintGraph build_constraint_graph(int b, int delta) {
    if (!(0 < b && b < delta))
        throw param_error("build_constraint_graph: requires 0 < b < delta");
    const int d = delta - b;

    ConstraintGraph out;
    std::vector<std::string> names;
    int forbidden = -1;
    // Nodes 0^alpha 1^(d-alpha) 0^gamma 1^(b-gamma); 1^d 0^b is (alpha=0, gamma=b).
    for (int alpha = 0; alpha <= d; ++alpha)
        for (int gamma = 0; gamma <= b; ++gamma) {
            std::string s(static_cast<size_t>(alpha), '0');
            s.append(static_cast<size_t>(d - alpha), '1');
            s.append(static_cast<size_t>(gamma), '0');
            s.append(static_cast<size_t>(b - gamma), '1');
            if (alpha == 0 && gamma == b) forbidden = static_cast<int>(names.size());
            names.push_back(std::move(s));
        }

    const int m = static_cast<int>(names.size());
    out.graph.node_names = names;
    out.adjacency = IntMatrix(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == forbidden && j == forbidden) continue;
            out.graph.edges.push_back({i, j, j});  // label: index of the emitted block
            out.adjacency.at(i, j) = 1;
        }
    std::sort(out.graph.edges.begin(), out.graph.edges.end());
    out.forbidden_node = forbidden;
    return out;
}

CapacityResult qary_capacity(const ChannelParams& p, int q) {
    if (q < 2) throw param_error("qary_capacity: require q >= 2");
    if (q == 2) return capacity_closed_form(p);  // identity reduction
    const int r = q - 1;
    CapacityResult base = capacity_closed_form(ChannelParams(r * p.ell, r * p.delta));
    const double scale = static_cast<double>(r) / std::log2(static_cast<double>(q));
    CapacityResult out = base;
    out.primary.value *= scale;
    out.primary.provenance += " (alphabet reduction)";
    if (!out.exact) {
        out.upper->value *= scale;
        out.upper->provenance += " (alphabet reduction)";
    }
    return out;
}

CapacityResult capacity_in_bits(const CapacityResult& qary_units, int q) {
    const double s = std::log2(static_cast<double>(q));
    CapacityResult out = qary_units;
    out.primary.value *= s;
    if (!out.exact) out.upper->value *= s;
    return out;
}

std::vector<TableRow> capacity_table(int delta, int ell_min, int ell_max) {
    if (delta < 1 || ell_min < 1 || ell_max < ell_min)
        throw param_error("capacity_table: bad ranges");
    std::vector<TableRow> rows;
    for (int ell = ell_min; ell <= ell_max; ++ell) {
        ChannelParams p(ell, delta);
        std::string regime;
        if (delta == 1)
            regime = "identity";
        else if (ell <= delta)
            regime = "disjoint";
        else if (ell % delta == 0)
            regime = "aligned";
        else if (ell < 2 * delta)
            regime = "interval-exact";
        else
            regime = "bounded";
        rows.push_back({ell, delta, regime, capacity_closed_form(p)});
    }
    return rows;
}

}  // namespace readchan
