#ifndef READCHAN_VERIFY_HPP
#define READCHAN_VERIFY_HPP

#include <string>
#include <vector>

namespace readchan {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    int max_ell = 12;  // ceiling for structural sweeps
    int max_n = 18;    // ceiling for exhaustive enumerations
    int threads = 0;
};

// Suites: "graphs", "spectral", "transforms", "twodim", or "all".
std::vector<CheckResult> run_verify_suite(const std::string& suite, const VerifyOptions& opts = {});

}  // namespace readchan

#endif
