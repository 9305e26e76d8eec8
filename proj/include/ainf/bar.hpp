#pragma once

#include "ainf/structure.hpp"

#include <functional>
#include <map>
#include <span>
#include <vector>

namespace ainf {

// Nonempty sequence of basis indices of the underlying space; degree is the
// sum of letter degrees (reduced tensor algebra, no empty word).
using Word = std::vector<int>;

int word_degree(const GradedBasis& space, const Word& w);

// Finite combination of words, truncated at a fixed maximal length.
struct TensorElement {
    std::map<Word, Scalar> coeffs;
    int max_length = 0;

    bool is_zero() const { return coeffs.empty(); }
    void add(const Word& w, const Scalar& c);
    TensorElement& add_scaled(const TensorElement& other, const Scalar& c);
    bool operator==(const TensorElement& other) const { return coeffs == other.coeffs; }
};

// {m_n} on a space already carrying the shifted grading, validated A-infinity
// up to its maximal arity.
struct BarInput {
    BasisPtr space;
    AInfStructure ops;
};

// Validates the Stasheff identities up to ops.max_arity(); throws
// std::domain_error with a witness if they fail.
BarInput make_bar_input(BasisPtr space, AInfStructure ops);

// Shifts degrees down by one and equips the result with
// m2(x, y) = koszul(1,|x|) * x y (shifted degrees), m1 = shifted delta when
// present. The arity 2 and 3 Stasheff identities are asserted; a failure
// signals a delta that is not a derivation.
BarInput shift_strict(const GradedAlgebra& alg, int n_max = 6);

// Linear extension of sum_(i,j) id^j (x) m_i (x) id^(n-i-j) with the Koszul
// prefix sign. Never increases word length.
TensorElement bar_coderivation(const BarInput& inp, const TensorElement& t);

// The induced operations on tuples of tensor words: arity 1 is the bar
// coderivation; arity 2 contracts one contiguous block straddling the word
// boundary; arity >= 3 contracts a block that touches the first and last
// word and swallows every middle word. Throws std::invalid_argument when the
// total letter count exceeds max_length.
TensorElement tensor_op(const BarInput& inp, std::span<const Word> factors, int max_length);

// The words of length <= max_length over inp.space, with concatenation
// product (zero past the truncation) and the bar coderivation as delta.
struct TensorAlgebra {
    GradedAlgebra algebra;
    std::vector<Word> words;
    std::map<Word, int> index;
};
TensorAlgebra truncated_tensor_algebra(const BarInput& inp, int max_length);

// Compares tensor_op against the derivation-defect construction over the
// truncated tensor algebra on every tuple of words with total length
// <= max_length, for arities <= k_max. Mismatches are report entries.
ValidationReport tensor_ops_match_derived(const BarInput& inp, int max_length, int k_max);

// All ways to split a word into two nonempty halves (the reduced coproduct).
std::vector<std::pair<Word, Word>> word_splittings(const Word& w);

// Visit every tuple of k word indices with total length <= max_length.
void for_each_bounded_word_tuple(const TensorAlgebra& T, int k, int max_length,
                                 const std::function<void(const std::vector<int>&)>& fn);

} // namespace ainf
