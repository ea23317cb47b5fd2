#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "readchan/channel.hpp"
#include "readchan/enumerate.hpp"
#include "readchan/spectral.hpp"
#include "readchan/stategraph.hpp"
#include "readchan/transforms.hpp"
#include "readchan/twodim.hpp"
#include "readchan/verify.hpp"

namespace {

using namespace readchan;

std::string fmt6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string kind_name(CapKind k) {
    switch (k) {
        case CapKind::exact: return "exact";
        case CapKind::lower_bound: return "lower_bound";
        default: return "upper_bound";
    }
}

void print_capacity(const std::string& head, const CapacityResult& r, const std::string& format,
                    const char* units) {
    if (format == "json") {
        std::string s = "{\"channel\":\"" + head + "\",\"units\":\"" + units + "\",";
        if (r.exact)
            s += "\"kind\":\"exact\",\"value\":" + fmt6(r.primary.value) + ",\"provenance\":\"" +
                 r.primary.provenance + "\"";
        else
            s += "\"kind\":\"bounds\",\"lower\":" + fmt6(r.primary.value) +
                 ",\"upper\":" + fmt6(r.upper->value) + ",\"provenance\":\"" +
                 r.primary.provenance + " / " + r.upper->provenance + "\"";
        s += "}";
        std::cout << s << "\n";
        return;
    }
    if (r.exact)
        std::cout << head << " = " << fmt6(r.primary.value) << " " << units << " (exact; "
                  << r.primary.provenance << ")\n";
    else
        std::cout << head << " in [" << fmt6(r.primary.value) << ", " << fmt6(r.upper->value)
                  << "] " << units << " (bounds; " << r.primary.provenance << " / "
                  << r.upper->provenance << ")\n";
}

int run(int argc, char** argv) {
    CLI::App app{"capacity calculator and exhaustive verifier for the sliding-window weight channel"};
    app.require_subcommand(1);

    std::string format = "text";
    unsigned long long budget = 1ull << 24;
    int threads = 0;
    app.add_option("--format", format, "output format: text, json, csv, dot")
        ->check(CLI::IsMember({"text", "json", "csv", "dot"}));
    app.add_option("--budget", budget, "enumeration budget (max evaluated inputs)");
    app.add_option("--threads", threads, "worker thread cap (0 = runtime default)");

    int ell = 0, delta = 0, q = 2;
    int ell1 = 0, ell2 = 0, delta1 = 0, delta2 = 0;
    std::vector<int> n_list;
    int n1 = 0, n2 = 0;
    int ell_min = 0, ell_max = 0;
    std::string stage = "G", emit = "dot", suite = "all";
    int max_ell = 12, max_n = 18;

    auto* cap = app.add_subcommand("capacity", "closed-form capacity or bound pair");
    cap->add_option("--ell", ell)->required();
    cap->add_option("--delta", delta)->required();
    cap->add_option("--q", q);

    auto* cap2 = app.add_subcommand("capacity2d", "two-dimensional capacity via the 1-D reductions");
    cap2->add_option("--ell1", ell1)->required();
    cap2->add_option("--ell2", ell2)->required();
    cap2->add_option("--delta1", delta1)->required();
    cap2->add_option("--delta2", delta2)->required();
    cap2->add_option("--q", q);

    auto* bnd = app.add_subcommand("bound", "lower and upper capacity bounds");
    bnd->add_option("--ell", ell)->required();
    bnd->add_option("--delta", delta)->required();

    auto* enu = app.add_subcommand("enumerate", "exhaustive distinct-read-vector counts");
    enu->add_option("--n", n_list, "word length (repeatable)")->required();
    enu->add_option("--ell", ell)->required();
    enu->add_option("--delta", delta)->required();
    enu->add_option("--q", q);

    auto* enu2 = app.add_subcommand("enumerate2d", "exhaustive distinct-read-matrix count");
    enu2->add_option("--n1", n1)->required();
    enu2->add_option("--n2", n2)->required();
    enu2->add_option("--ell1", ell1)->required();
    enu2->add_option("--ell2", ell2)->required();
    enu2->add_option("--delta1", delta1)->required();
    enu2->add_option("--delta2", delta2)->required();
    enu2->add_option("--q", q);

    auto* tab = app.add_subcommand("table", "capacity per ell at fixed delta");
    tab->add_option("--delta", delta)->required();
    tab->add_option("--ell-min", ell_min)->required();
    tab->add_option("--ell-max", ell_max)->required();

    auto* gr = app.add_subcommand("graph", "state-diagram export");
    gr->add_option("--ell", ell)->required();
    gr->add_option("--delta", delta)->required();
    gr->add_option("--stage", stage, "G, H, Hstar, or constraint")
        ->check(CLI::IsMember({"G", "H", "Hstar", "constraint"}));
    gr->add_option("--emit", emit, "dot or json")->check(CLI::IsMember({"dot", "json"}));

    auto* ver = app.add_subcommand("verify", "run the property-check suites");
    ver->add_option("--suite", suite)->check(CLI::IsMember({"all", "graphs", "transforms", "twodim", "spectral"}));
    ver->add_option("--max-ell", max_ell);
    ver->add_option("--max-n", max_n);

    for (CLI::App* sc : app.get_subcommands([](CLI::App*) { return true; }))
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    EnumOptions eopts;
    eopts.budget = budget;
    eopts.threads = threads;

    if (cap->parsed()) {
        const ChannelParams p(ell, delta);
        const std::string head = "capacity(" + std::to_string(ell) + "," + std::to_string(delta) + ")";
        if (q == 2) {
            print_capacity(head, capacity_closed_form(p), format, "bits/symbol");
        } else {
            CapacityResult qu = qary_capacity(p, q);
            print_capacity(head + " base " + std::to_string(q), qu, format, "q-ary units");
            print_capacity(head + " base " + std::to_string(q), capacity_in_bits(qu, q), format,
                           "bits/symbol");
        }
        return 0;
    }
    if (cap2->parsed()) {
        Params2D p{{ell1, delta1}, {ell2, delta2}, q};
        const std::string head = "capacity((" + std::to_string(ell1) + "," + std::to_string(ell2) +
                                 "),(" + std::to_string(delta1) + "," + std::to_string(delta2) + "))";
        CapacityResult r = capacity_2d(p);
        print_capacity(head, r, format, q == 2 ? "bits/symbol" : "q-ary units");
        return 0;
    }
    if (bnd->parsed()) {
        const ChannelParams p(ell, delta);
        CapacityResult r = capacity_closed_form(p);
        if (r.exact) {
            std::cout << "exact " << fmt6(r.primary.value) << " (" << r.primary.provenance << ")\n";
        } else {
            std::cout << "lower " << fmt6(r.primary.value) << " (" << r.primary.provenance << ")\n"
                      << "upper " << fmt6(r.upper->value) << " (" << r.upper->provenance << ")\n";
        }
        return 0;
    }
    if (enu->parsed()) {
        std::vector<CountResult> rs = rate_sequence(ChannelParams(ell, delta), q, n_list, eopts);
        std::cout << (format == "json" ? to_json(rs) + "\n" : to_csv(rs));
        return 0;
    }
    if (enu2->parsed()) {
        std::vector<CountResult> rs = {
            count_read_matrices(n1, n2, {ell1, delta1}, {ell2, delta2}, q, eopts)};
        std::cout << (format == "json" ? to_json(rs) + "\n" : to_csv(rs));
        return 0;
    }
    if (tab->parsed()) {
        auto rows = capacity_table(delta, ell_min, ell_max);
        if (format == "json") {
            std::string s = "[";
            for (size_t i = 0; i < rows.size(); ++i) {
                const auto& r = rows[i];
                if (i) s.push_back(',');
                s += "{\"ell\":" + std::to_string(r.ell) + ",\"delta\":" + std::to_string(r.delta) +
                     ",\"regime\":\"" + r.regime + "\",";
                if (r.cap.exact)
                    s += "\"value\":" + fmt6(r.cap.primary.value);
                else
                    s += "\"lower\":" + fmt6(r.cap.primary.value) +
                         ",\"upper\":" + fmt6(r.cap.upper->value);
                s += ",\"provenance\":\"" + r.cap.primary.provenance + "\"}";
            }
            std::cout << s << "]\n";
        } else if (format == "csv") {
            std::cout << "ell,delta,regime,value_or_lower,upper,provenance\n";
            for (const auto& r : rows)
                std::cout << r.ell << "," << r.delta << "," << r.regime << ","
                          << fmt6(r.cap.primary.value) << ","
                          << (r.cap.exact ? "" : fmt6(r.cap.upper->value)) << ","
                          << r.cap.primary.provenance << "\n";
        } else {
            for (const auto& r : rows) {
                std::cout << "ell=" << r.ell << " delta=" << r.delta << " " << r.regime << ": ";
                if (r.cap.exact)
                    std::cout << fmt6(r.cap.primary.value) << "\n";
                else
                    std::cout << "[" << fmt6(r.cap.primary.value) << ", "
                              << fmt6(r.cap.upper->value) << "]\n";
            }
        }
        return 0;
    }
    if (gr->parsed()) {
        const ChannelParams p(ell, delta);
        LabeledGraph g;
        if (stage == "G")
            g = build_G(p);
        else if (stage == "H")
            g = build_H(p).to_labeled();
        else if (stage == "Hstar")
            g = prune_H(build_H(p)).to_labeled();
        else
            g = build_constraint_graph(p.b() == 0 ? -1 : p.b(), p.delta).graph;
        std::cout << (emit == "json" ? graph_to_json(g) + "\n" : export_dot(g));
        return 0;
    }
    if (ver->parsed()) {
        VerifyOptions vopts;
        vopts.max_ell = max_ell;
        vopts.max_n = max_n;
        vopts.threads = threads;
        auto results = run_verify_suite(suite, vopts);
        int passed = 0;
        for (const auto& r : results) {
            std::cout << (r.pass ? "PASS " : "FAIL ") << r.name
                      << (r.detail.empty() ? "" : "  [" + r.detail + "]") << "\n";
            passed += r.pass;
        }
        std::cout << passed << "/" << results.size() << " checks passed\n";
        return passed == static_cast<int>(results.size()) ? 0 : 3;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const readchan::param_error& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return 1;
    } catch (const readchan::resource_error& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 2;
    } catch (const readchan::numeric_error& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
