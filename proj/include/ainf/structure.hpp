#pragma once

#include "ainf/algebra.hpp"
#include "ainf/cohomology.hpp"
#include "ainf/multiop.hpp"

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>

namespace ainf {

enum class Mode { cohomological, homological };

// Indexed family { m_n : 1 <= n <= max_arity } of multilinear operations on
// one graded space, all of degree +1 (cohomological) or -1 (homological).
struct AInfStructure {
    BasisPtr space;
    Mode mode = Mode::cohomological;
    std::map<int, MultiOp> ops;
    std::set<std::string> ledger; // verified properties, free-form tags

    int max_arity() const { return ops.empty() ? 0 : ops.rbegin()->first; }
    const MultiOp& op(int arity) const;
    int op_degree() const { return mode == Mode::cohomological ? 1 : -1; }
};

// The n-th operation measuring the failure of `delta` to be a derivation,
// evaluated on elements (multilinear, inhomogeneous inputs decomposed):
//   n=1: D(a1)
//   n=2: D(a1 a2) - D(a1)a2 - koszul(|D|,|a1|) a1 D(a2)
//   n>=3: D(a1..an) - D(a1..a_{n-1})an - koszul(|D|,|a1|) a1 D(a2..an)
//         + koszul(|D|,|a1|) a1 D(a2..a_{n-1}) an
// Signs come exclusively from koszul_sign applied to `delta` passing leading
// arguments, so the same formulas serve operators of any degree (the square
// of a degree +1 operator in particular).
Element derivation_defect_value(const GradedAlgebra& alg, const LinearOperator& delta,
                                std::span<const Element> args);

// Tabulated form of the above on all basis tuples of the given arity.
MultiOp derivation_defect_op(const GradedAlgebra& alg, const LinearOperator& delta, int n);

// The family {m_n} for n = 1..n_max as one structure.
AInfStructure derivation_defect_structure(const GradedAlgebra& alg, const LinearOperator& delta,
                                          int n_max);

// Sum over n = i+k+j of m_{i+1+j}(id^i (x) m_k (x) id^j) at arity n; the
// structure is A-infinity at arity n iff this is the zero operation.
MultiOp stasheff_defect(const AInfStructure& s, int n);

// stasheff_defect of {m_{delta,k}} minus the defect operation of delta^2;
// identically zero certifies the construction at arity n for any degree +1
// delta, square-zero or not.
MultiOp stasheff_defect_vs_delta_square(const GradedAlgebra& alg, const LinearOperator& delta,
                                        int n);

struct OrderResult {
    std::optional<int> order; // least n <= cap with m_{n+1} == 0; nullopt = exceeds cap
    int cap = 0;
    std::string witness; // nonzero entry of m_{cap+1} when exceeded, else note
};

// Least n <= cap with m_{n+1} identically zero; also cross-checks that every
// higher operation up to arity cap+1 vanishes. Requires delta^2 = 0.
OrderResult associative_order(const GradedAlgebra& alg, const LinearOperator& delta, int cap);

// The two product-compatibility identities available at associative order
// <= 2 (m3 must vanish; throws std::domain_error otherwise):
//   gamma2(id, m2) = m2(gamma2, id)  and  gamma2(m2, id) = m2(id, gamma2),
// checked on every basis triple.
ValidationReport product_compatibility_check(const GradedAlgebra& alg,
                                             const LinearOperator& delta);

struct InducedOps {
    CohomologyBasis classes;
    // arity -> (class-index tuple -> class coordinates of m_n on representatives)
    std::map<int, std::map<std::vector<int>, std::vector<Scalar>>> tables;
    ValidationReport report; // nonzero induced entries are failures
};

// Evaluates m_n on cohomology-class representatives and projects back to
// class coordinates; all tables must vanish. Requires delta^2 = 0.
InducedOps induced_on_cohomology(const GradedAlgebra& alg, const LinearOperator& delta,
                                 int n_max);

// Structure induced by a degree +1 left action (L(ab) = L(a)b on all basis
// pairs, checked; left multiplication by a degree +1 element is the canonical
// instance). Asserts m3 = 0, so m2 is a strict degree +1 associative product.
AInfStructure left_action_structure(const GradedAlgebra& alg, const LinearOperator& action,
                                    int n_max);

} // namespace ainf
