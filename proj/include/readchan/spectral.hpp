#ifndef READCHAN_SPECTRAL_HPP
#define READCHAN_SPECTRAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "readchan/core.hpp"
#include "readchan/stategraph.hpp"

namespace readchan {

// Exact integer coefficients, ascending degree. Characteristic polynomials
// are monic.
struct Polynomial {
    std::vector<long long> coef;

    int degree() const { return static_cast<int>(coef.size()) - 1; }
    bool operator==(const Polynomial&) const = default;
};

std::string to_string(const Polynomial& p);

// det(xI - A) with exact integer arithmetic (Faddeev-LeVerrier, 128-bit
// intermediates; throws numeric_error if those would overflow).
Polynomial char_poly(const IntMatrix& A);

// Largest real eigenvalue of a non-negative integer matrix: power iteration
// on each strongly connected component, shifted by +I so periodic components
// converge, with Collatz-Wielandt brackets as the stopping rule. Returns 0
// for nilpotent matrices.
double perron_eigenvalue(const IntMatrix& A, double tol = 1e-12,
                         long long max_iterations = 1000000);

enum class CapKind { exact, lower_bound, upper_bound };

struct CapacityValue {
    CapKind kind = CapKind::exact;
    double value = 0.0;  // bits/symbol unless stated otherwise by the caller
    std::string provenance;
};

// Either one exact value or a {lower, upper} pair; pairs are never collapsed
// to a single number.
struct CapacityResult {
    bool exact = true;
    CapacityValue primary;                // exact value, or the lower bound
    std::optional<CapacityValue> upper;   // present iff !exact

    double lower_value() const { return primary.value; }
    double upper_value() const { return exact ? primary.value : upper->value; }
};

// Dispatch over the parameter regimes:
//   delta = 1            -> exact 1
//   ell <= delta         -> exact log2(ell+1)/delta
//   delta | ell          -> exact log2(delta+1)/delta
//   delta < ell < 2delta -> exact log2((ell+1+sqrt((ell+1)^2-4(ell-delta)(ell-delta+1)))/2)/delta
//   otherwise            -> {lower log2(delta+1)/delta, upper constraint_capacity(ell mod delta, delta)}
CapacityResult capacity_closed_form(const ChannelParams& p);

// Capacity of the block-pattern constraint (an upper bound for the channel
// when ell > 2delta, delta does not divide ell): with d = delta-b and
// m = (b+1)(d+1), the value is log2((m-1+sqrt((m-1)^2+4(m-1)))/2)/delta.
CapacityValue constraint_capacity(int b, int delta);

// State diagram behind constraint_capacity: the m = (b+1)(d+1) canonical
// delta-blocks, complete digraph minus the single self-loop at 1^d 0^b.
// Edge labels carry the target node index.
struct ConstraintGraph {
    LabeledGraph graph;
    IntMatrix adjacency;
    int forbidden_node = 0;  // index of 1^d 0^b
};

ConstraintGraph build_constraint_graph(int b, int delta);

// q-ary capacity via the alphabet reduction, reported in q-ary units
// (log base q); multiply by log2(q) for bits/symbol. Bound kinds propagate.
CapacityResult qary_capacity(const ChannelParams& p, int q);
CapacityResult capacity_in_bits(const CapacityResult& qary_units, int q);

struct TableRow {
    int ell;
    int delta;
    std::string regime;
    CapacityResult cap;
};

std::vector<TableRow> capacity_table(int delta, int ell_min, int ell_max);

}  // namespace readchan

#endif
