#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ainf/bar.hpp"

#include <functional>
#include "ainf/parse.hpp"

using namespace ainf;

namespace {

GradedAlgebra triangular_no_delta() {
    return load_algebra_file(std::string(AINF_DATA_DIR) + "/tri2.alg").without_delta();
}

// letters x (degree 0) and y (degree 1); m3(x,x,x) = y, everything else zero
BarInput nonstrict_fixture() {
    auto basis = GradedBasis::make({{"x", 0}, {"y", 1}});
    AInfStructure s;
    s.space = basis;
    s.mode = Mode::cohomological;
    for (int n = 1; n <= 6; ++n) s.ops.emplace(n, MultiOp(basis, n, 1));
    MultiOp m3(basis, 3, 1);
    m3.set_value({0, 0, 0}, Element::basis_vector(basis, 1));
    s.ops.at(3) = m3;
    return make_bar_input(basis, std::move(s));
}

TensorElement single(const Word& w, int L) {
    TensorElement t{{}, L};
    t.add(w, 1);
    return t;
}

} // namespace

TEST_CASE("strict shift satisfies the identities and keeps products") {
    GradedAlgebra alg = triangular_no_delta();
    BarInput inp = shift_strict(alg);
    CHECK(inp.space->degree(0) == -1); // e11 shifted down
    CHECK(inp.space->degree(2) == 0);  // e12 shifted down
    // one-dimensional algebra: m2(1,1) = +-1, identities hold
    auto kbasis = GradedBasis::make({{"one", 0}});
    GradedAlgebra k(kbasis);
    k.set_product(0, 0, Element::basis_vector(kbasis, 0));
    k.set_unit(Element::basis_vector(kbasis, 0));
    BarInput ki = shift_strict(k);
    std::vector<int> pair{0, 0};
    Element v = ki.ops.op(2).value(pair);
    CHECK_FALSE(v.is_zero());
    // zero product: everything vanishes
    GradedAlgebra z(kbasis);
    BarInput zi = shift_strict(z);
    CHECK(zi.ops.op(2).is_zero());
}

TEST_CASE("a non-derivation delta is rejected by the strict shift") {
    GradedAlgebra alg = load_algebra_file(std::string(AINF_DATA_DIR) + "/tri2.alg");
    CHECK_THROWS_AS(shift_strict(alg), std::domain_error);
    // a genuine dg algebra passes with its delta installed as m1
    GradedAlgebra deriv = load_algebra_file(std::string(AINF_DATA_DIR) + "/deriv.alg");
    BarInput inp = shift_strict(deriv);
    CHECK_FALSE(inp.ops.op(1).is_zero());
}

TEST_CASE("coderivation on a single letter is m1") {
    GradedAlgebra deriv = load_algebra_file(std::string(AINF_DATA_DIR) + "/deriv.alg");
    BarInput inp = shift_strict(deriv);
    TensorElement t = bar_coderivation(inp, single({0}, 4));
    TensorElement expect{{}, 4};
    expect.add({1}, 1);
    CHECK(t == expect);
}

TEST_CASE("coderivation on a two letter word expands the double sum") {
    GradedAlgebra alg = triangular_no_delta();
    BarInput inp = shift_strict(alg);
    const MultiOp& m2 = inp.ops.op(2);
    for (int v = 0; v < 3; ++v)
        for (int w = 0; w < 3; ++w) {
            TensorElement got = bar_coderivation(inp, single({v, w}, 4));
            TensorElement expect{{}, 4};
            std::vector<int> key{v, w};
            for (const auto& [letter, c] : m2.value(key).coeffs()) expect.add({letter}, c);
            CHECK(got == expect);
        }
}

TEST_CASE("coderivation squares to zero exactly when the input is A-infinity") {
    for (const BarInput& inp : {shift_strict(triangular_no_delta()), nonstrict_fixture()}) {
        TensorAlgebra T = truncated_tensor_algebra(inp, 4);
        CHECK(compose(*T.algebra.delta(), *T.algebra.delta()).is_zero());
    }

    // broken input: the nonstrict fixture with an added m2(x,x) = x
    auto basis = GradedBasis::make({{"x", 0}, {"y", 1}});
    AInfStructure s;
    s.space = basis;
    s.mode = Mode::cohomological;
    for (int n = 1; n <= 4; ++n) s.ops.emplace(n, MultiOp(basis, n, 1));
    MultiOp m3(basis, 3, 1);
    m3.set_value({0, 0, 0}, Element::basis_vector(basis, 1));
    s.ops.at(3) = m3;
    MultiOp m2(basis, 2, 1);
    m2.set_value({0, 0}, Element::basis_vector(basis, 0));
    s.ops.at(2) = m2;
    BarInput broken{basis, s};
    TensorAlgebra T = truncated_tensor_algebra(broken, 4);
    CHECK_FALSE(compose(*T.algebra.delta(), *T.algebra.delta()).is_zero());
    CHECK_THROWS_AS(make_bar_input(basis, s), std::domain_error);
}

TEST_CASE("tensor operations match the derived construction") {
    CHECK(tensor_ops_match_derived(shift_strict(triangular_no_delta()), 4, 4).ok());
    CHECK(tensor_ops_match_derived(nonstrict_fixture(), 4, 4).ok());
}

TEST_CASE("single letters compose through m2") {
    GradedAlgebra alg = triangular_no_delta();
    BarInput inp = shift_strict(alg);
    const MultiOp& m2 = inp.ops.op(2);
    std::vector<Word> factors{{0}, {1}};
    TensorElement t = tensor_op(inp, factors, 4);
    TensorElement expect{{}, 4};
    std::vector<int> key{0, 1};
    for (const auto& [letter, c] : m2.value(key).coeffs()) expect.add({letter}, c);
    CHECK(t == expect);
}

TEST_CASE("strict inputs collapse above arity two") {
    GradedAlgebra alg = triangular_no_delta();
    BarInput inp = shift_strict(alg);
    TensorAlgebra T = truncated_tensor_algebra(inp, 4);
    for (int k : {3, 4})
        for_each_bounded_word_tuple(T, k, 4, [&](const std::vector<int>& idx) {
            std::vector<Word> factors;
            for (int i : idx) factors.push_back(T.words[static_cast<size_t>(i)]);
            CHECK(tensor_op(inp, factors, 4).is_zero());
        });

    // the nonstrict fixture does not collapse: t3 on ((x),(x),(x)) hits m3
    BarInput ns = nonstrict_fixture();
    std::vector<Word> xs{{0}, {0}, {0}};
    TensorElement t3 = tensor_op(ns, xs, 4);
    TensorElement expect{{}, 4};
    expect.add({1}, 1);
    CHECK(t3 == expect);
}

TEST_CASE("truncation overflow is rejected") {
    BarInput inp = nonstrict_fixture();
    std::vector<Word> big{{0, 0, 0}, {0, 0}};
    CHECK_THROWS_AS(tensor_op(inp, big, 4), std::invalid_argument);
}

TEST_CASE("word splitting coproduct is coassociative up to length 4") {
    BarInput inp = nonstrict_fixture();
    TensorAlgebra T = truncated_tensor_algebra(inp, 4);
    for (const Word& w : T.words) {
        std::map<std::vector<Word>, int> left, right;
        for (const auto& [u, rest] : word_splittings(w))
            for (const auto& [v, z] : word_splittings(rest)) ++left[{u, v, z}];
        for (const auto& [front, z] : word_splittings(w))
            for (const auto& [u, v] : word_splittings(front)) ++right[{u, v, z}];
        CHECK(left == right);
    }
}

TEST_CASE("concatenation adds degrees") {
    BarInput inp = nonstrict_fixture();
    TensorAlgebra T = truncated_tensor_algebra(inp, 4);
    for (const Word& a : T.words)
        for (const Word& b : T.words) {
            if (static_cast<int>(a.size() + b.size()) > 4) continue;
            Word ab = a;
            ab.insert(ab.end(), b.begin(), b.end());
            CHECK(word_degree(*inp.space, ab) ==
                  word_degree(*inp.space, a) + word_degree(*inp.space, b));
        }
}

TEST_CASE("the derived triangular structure feeds the bar construction") {
    GradedAlgebra alg = load_algebra_file(std::string(AINF_DATA_DIR) + "/tri2.alg");
    AInfStructure s = derivation_defect_structure(alg, *alg.delta(), 6);
    BarInput inp = make_bar_input(alg.basis(), std::move(s));
    CHECK(tensor_ops_match_derived(inp, 4, 3).ok());
    TensorAlgebra T = truncated_tensor_algebra(inp, 4);
    CHECK(compose(*T.algebra.delta(), *T.algebra.delta()).is_zero());
}

namespace {

// multilinear extension over word slots of the tensor operations
TensorElement tensor_op_on_elements(const BarInput& inp,
                                    const std::vector<TensorElement>& slots, int L) {
    TensorElement acc{{}, L};
    std::vector<std::pair<Word, Scalar>> flat;
    std::function<void(size_t, std::vector<Word>&, Scalar)> rec =
        [&](size_t k, std::vector<Word>& words, Scalar c) {
            if (k == slots.size()) {
                acc.add_scaled(tensor_op(inp, words, L), c);
                return;
            }
            for (const auto& [w, coeff] : slots[k].coeffs) {
                words.push_back(w);
                rec(k + 1, words, c * coeff);
                words.pop_back();
            }
        };
    std::vector<Word> words;
    rec(0, words, 1);
    return acc;
}

} // namespace

TEST_CASE("tensor operations satisfy the Stasheff identities on word tuples") {
    for (const BarInput& inp : {shift_strict(triangular_no_delta()), nonstrict_fixture()}) {
        TensorAlgebra T = truncated_tensor_algebra(inp, 4);
        for (int n = 2; n <= 3; ++n) {
            for_each_bounded_word_tuple(T, n, 4, [&](const std::vector<int>& idx) {
                std::vector<Word> words;
                for (int i : idx) words.push_back(T.words[static_cast<size_t>(i)]);
                TensorElement acc{{}, 4};
                for (int k = 1; k <= n; ++k)
                    for (int i = 0; i + k <= n; ++i) {
                        std::vector<int> passed;
                        for (int p = 0; p < i; ++p)
                            passed.push_back(word_degree(*inp.space, words[static_cast<size_t>(p)]));
                        Scalar sign = koszul_sign(1, passed);
                        std::vector<Word> block(words.begin() + i, words.begin() + i + k);
                        TensorElement inner = tensor_op(inp, block, 4);
                        for (auto& [w, c] : inner.coeffs) c *= sign;
                        std::vector<TensorElement> outer;
                        for (int p = 0; p < i; ++p) {
                            TensorElement t{{}, 4};
                            t.add(words[static_cast<size_t>(p)], 1);
                            outer.push_back(t);
                        }
                        outer.push_back(inner);
                        for (size_t p = static_cast<size_t>(i + k); p < words.size(); ++p) {
                            TensorElement t{{}, 4};
                            t.add(words[p], 1);
                            outer.push_back(t);
                        }
                        acc.add_scaled(tensor_op_on_elements(inp, outer, 4), 1);
                    }
                CHECK(acc.is_zero());
            });
        }
    }
}
