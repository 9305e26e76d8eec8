#pragma once

#include "ainf/algebra.hpp"
#include "ainf/linalg.hpp"

#include <vector>

namespace ainf {

struct CohomologyClass {
    int degree = 0;
    Element representative; // lies in ker(delta), homogeneous
};

// Basis of ker(delta)/im(delta) with a projector defined on ker(delta).
class CohomologyBasis {
public:
    CohomologyBasis(BasisPtr space, std::vector<CohomologyClass> classes,
                    std::vector<Subquotient> per_degree, std::vector<int> degrees,
                    std::vector<std::vector<int>> class_ids);

    int size() const { return static_cast<int>(classes_.size()); }
    const std::vector<CohomologyClass>& classes() const { return classes_; }

    // Coordinates over all classes; x must lie in ker(delta).
    std::vector<Scalar> project(const Element& x) const;

    // Classes per degree, for rank accounting.
    std::vector<std::pair<int, int>> dimensions_by_degree() const;

private:
    BasisPtr space_;
    std::vector<CohomologyClass> classes_;
    std::vector<Subquotient> per_degree_;
    std::vector<int> degrees_;
    std::vector<std::vector<int>> class_ids_; // per degree slot -> global class id
};

// Exact Gaussian elimination per degree. Requires delta present with
// delta^2 = 0; throws std::domain_error otherwise.
CohomologyBasis delta_cohomology(const GradedAlgebra& alg);

} // namespace ainf
