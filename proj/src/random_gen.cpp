#include "ainf/random_gen.hpp"

#include "ainf/parse.hpp"

namespace ainf {

namespace {

const int coeff_nums[] = {1, -1, 2, 1};
const int coeff_dens[] = {1, 1, 1, 2};

Scalar random_coeff(std::mt19937_64& rng) {
    size_t k = pick(rng, 4);
    return Scalar(coeff_nums[k], coeff_dens[k]);
}

bool graded_associative(const GradedAlgebra& alg) {
    const BasisPtr& basis = alg.basis();
    int n = basis->size();
    for (const auto& [ij, v] : alg.products()) {
        auto d = v.homogeneous_degree();
        if (!v.is_zero() &&
            (!d || *d != basis->degree(ij.first) + basis->degree(ij.second)))
            return false;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Element l = alg.multiply(alg.product(i, j), Element::basis_vector(basis, k));
                Element r = alg.multiply(Element::basis_vector(basis, i), alg.product(j, k));
                if (!(l == r)) return false;
            }
    return true;
}

GradedAlgebra sparse_random(std::mt19937_64& rng, int dim) {
    static const std::vector<std::vector<std::vector<int>>> degree_sets = {
        {{0, 1}, {0, 0}, {1, 1}, {0, 2}},
        {{0, 1, 1}, {0, 0, 1}, {0, 1, 2}, {0, 0, 0}},
    };
    const auto& sets = degree_sets[dim == 2 ? 0 : 1];
    for (int attempt = 0; attempt < 400; ++attempt) {
        const auto& degs = sets[pick(rng, sets.size())];
        std::vector<GradedBasis::Entry> entries;
        for (int i = 0; i < dim; ++i)
            entries.push_back({"b" + std::to_string(i), degs[static_cast<size_t>(i)]});
        BasisPtr basis = GradedBasis::make(std::move(entries));
        GradedAlgebra alg(basis);
        int nonzero = 0;
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                if (!chance(rng, 40)) continue;
                std::vector<int> targets;
                for (int k = 0; k < dim; ++k)
                    if (basis->degree(k) ==
                        basis->degree(i) + basis->degree(j))
                        targets.push_back(k);
                if (targets.empty()) continue;
                Element v = Element::basis_vector(basis, targets[pick(rng, targets.size())]);
                v.scale(random_coeff(rng));
                alg.set_product(i, j, std::move(v));
                ++nonzero;
            }
        if (nonzero >= 1 && graded_associative(alg)) {
            alg.name = "random" + std::to_string(dim);
            return alg;
        }
    }
    // zero multiplication is graded associative
    std::vector<GradedBasis::Entry> entries;
    for (int i = 0; i < dim; ++i)
        entries.push_back({"b" + std::to_string(i), i == dim - 1 ? 1 : 0});
    GradedAlgebra alg(GradedBasis::make(std::move(entries)));
    alg.name = "zero" + std::to_string(dim);
    return alg;
}

// curated dimension-4 families with randomized twists
GradedAlgebra curated4(std::mt19937_64& rng) {
    switch (pick(rng, 3)) {
        case 0: {
            // truncated polynomial algebra on a degree 1 generator; the even
            // powers commute past nothing here, associativity is immediate
            std::vector<GradedBasis::Entry> entries{{"one", 0}, {"t", 1}, {"t2", 2}, {"t3", 3}};
            BasisPtr basis = GradedBasis::make(std::move(entries));
            GradedAlgebra alg(basis);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    if (i + j < 4)
                        alg.set_product(i, j, Element::basis_vector(basis, i + j));
            alg.set_unit(Element::basis_vector(basis, 0));
            alg.name = "poly4";
            return alg;
        }
        case 1: {
            // triangular 2x2 matrices + a one-dimensional summand
            std::vector<GradedBasis::Entry> entries{
                {"e11", 0}, {"e22", 0}, {"e12", 1}, {"p", 0}};
            BasisPtr basis = GradedBasis::make(std::move(entries));
            GradedAlgebra alg(basis);
            alg.set_product(0, 0, Element::basis_vector(basis, 0));
            alg.set_product(1, 1, Element::basis_vector(basis, 1));
            alg.set_product(0, 2, Element::basis_vector(basis, 2));
            alg.set_product(2, 1, Element::basis_vector(basis, 2));
            alg.set_product(3, 3, Element::basis_vector(basis, 3));
            alg.name = "tri_plus_point";
            return alg;
        }
        default: {
            // product of two 2-dimensional square-zero extensions
            std::vector<GradedBasis::Entry> entries{{"p", 0}, {"x", 1}, {"q", 0}, {"y", 1}};
            BasisPtr basis = GradedBasis::make(std::move(entries));
            GradedAlgebra alg(basis);
            alg.set_product(0, 0, Element::basis_vector(basis, 0));
            alg.set_product(0, 1, Element::basis_vector(basis, 1));
            alg.set_product(1, 0, Element::basis_vector(basis, 1));
            alg.set_product(2, 2, Element::basis_vector(basis, 2));
            alg.set_product(2, 3, Element::basis_vector(basis, 3));
            alg.set_product(3, 2, Element::basis_vector(basis, 3));
            alg.name = "dual_times_dual";
            return alg;
        }
    }
}

} // namespace

GradedAlgebra random_algebra(std::mt19937_64& rng, int dim) {
    if (dim <= 1 || dim > 4) throw std::invalid_argument("supported dimensions: 2..4");
    if (dim <= 3) return sparse_random(rng, dim);
    return curated4(rng);
}

LinearOperator random_operator(std::mt19937_64& rng, const GradedAlgebra& alg, bool square_zero) {
    const BasisPtr& basis = alg.basis();
    int dim = basis->size();
    for (int attempt = 0; attempt < 600; ++attempt) {
        LinearOperator delta(basis, 1);
        for (int i = 0; i < dim; ++i) {
            if (!chance(rng, 60)) continue;
            std::vector<int> targets;
            for (int k = 0; k < dim; ++k)
                if (basis->degree(k) == basis->degree(i) + 1) targets.push_back(k);
            if (targets.empty()) continue;
            Element v = Element::basis_vector(basis, targets[pick(rng, targets.size())]);
            v.scale(random_coeff(rng));
            delta.set_image(i, std::move(v));
        }
        if (delta.is_zero()) continue;
        if (!square_zero || compose(delta, delta).is_zero()) return delta;
    }
    return zero_operator(basis, 1);
}

} // namespace ainf
