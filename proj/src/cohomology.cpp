#include "ainf/cohomology.hpp"

#include <stdexcept>

namespace ainf {

namespace {

SparseVec element_to_vec(const Element& e) {
    SparseVec out;
    for (const auto& [i, c] : e.coeffs()) out[i] = c;
    return out;
}

Element vec_to_element(const BasisPtr& basis, const SparseVec& v) {
    Element out(basis);
    for (const auto& [i, c] : v) out.set_coeff(i, c);
    return out;
}

} // namespace

CohomologyBasis::CohomologyBasis(BasisPtr space, std::vector<CohomologyClass> classes,
                                 std::vector<Subquotient> per_degree, std::vector<int> degrees,
                                 std::vector<std::vector<int>> class_ids)
    : space_(std::move(space)),
      classes_(std::move(classes)),
      per_degree_(std::move(per_degree)),
      degrees_(std::move(degrees)),
      class_ids_(std::move(class_ids)) {}

std::vector<Scalar> CohomologyBasis::project(const Element& x) const {
    std::vector<Scalar> out(classes_.size(), Scalar(0));
    if (x.is_zero()) return out;
    if (!same_basis(x.basis(), space_))
        throw std::invalid_argument("basis mismatch in cohomology projection");
    for (const auto& [deg, comp] : x.homogeneous_components()) {
        auto it = std::find(degrees_.begin(), degrees_.end(), deg);
        if (it == degrees_.end())
            throw std::domain_error("component in a degree carrying no cocycles: " +
                                    comp.to_string());
        size_t slot = static_cast<size_t>(it - degrees_.begin());
        std::vector<Scalar> local = per_degree_[slot].project(element_to_vec(comp));
        for (size_t k = 0; k < local.size(); ++k)
            out[static_cast<size_t>(class_ids_[slot][k])] += local[k];
    }
    return out;
}

std::vector<std::pair<int, int>> CohomologyBasis::dimensions_by_degree() const {
    std::vector<std::pair<int, int>> out;
    for (size_t s = 0; s < degrees_.size(); ++s)
        out.emplace_back(degrees_[s], static_cast<int>(class_ids_[s].size()));
    return out;
}

CohomologyBasis delta_cohomology(const GradedAlgebra& alg) {
    if (!alg.delta()) throw std::domain_error("algebra has no delta");
    const LinearOperator& delta = *alg.delta();
    if (!compose(delta, delta).is_zero())
        throw std::domain_error("delta does not square to zero");

    const BasisPtr& basis = alg.basis();
    std::vector<CohomologyClass> classes;
    std::vector<Subquotient> per_degree;
    std::vector<int> degrees;
    std::vector<std::vector<int>> class_ids;

    for (int d : basis->degrees_present()) {
        std::vector<int> local; // basis indices of degree d, ascending
        for (int i = 0; i < basis->size(); ++i)
            if (basis->degree(i) == d) local.push_back(i);

        // kernel of delta restricted to degree d
        std::vector<SparseVec> columns;
        columns.reserve(local.size());
        for (int i : local) columns.push_back(element_to_vec(delta.image_of(i)));
        std::vector<SparseVec> combos = kernel_combinations(columns);
        std::vector<SparseVec> cocycles;
        cocycles.reserve(combos.size());
        for (const auto& combo : combos) {
            SparseVec v;
            for (const auto& [j, c] : combo) v[local[static_cast<size_t>(j)]] = c;
            cocycles.push_back(std::move(v));
        }

        // boundaries: images of the degree d-1 part
        std::vector<SparseVec> boundaries;
        for (int i = 0; i < basis->size(); ++i)
            if (basis->degree(i) == d - 1) {
                SparseVec v = element_to_vec(delta.image_of(i));
                if (!v.empty()) boundaries.push_back(std::move(v));
            }

        Subquotient sq(boundaries, cocycles);
        std::vector<int> ids;
        for (const auto& rep : sq.representatives()) {
            ids.push_back(static_cast<int>(classes.size()));
            classes.push_back({d, vec_to_element(basis, rep)});
        }
        per_degree.push_back(std::move(sq));
        degrees.push_back(d);
        class_ids.push_back(std::move(ids));
    }

    return CohomologyBasis(basis, std::move(classes), std::move(per_degree), std::move(degrees),
                           std::move(class_ids));
}

} // namespace ainf
