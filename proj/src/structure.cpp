#include "ainf/structure.hpp"

#include <sstream>
#include <stdexcept>

namespace ainf {

namespace {

std::string tuple_string(const BasisPtr& basis, std::span<const int> idx) {
    std::ostringstream os;
    os << "(";
    for (size_t k = 0; k < idx.size(); ++k) {
        if (k) os << ",";
        os << basis->name(idx[k]);
    }
    os << ")";
    return os.str();
}

std::vector<Element> basis_tuple(const BasisPtr& basis, std::span<const int> idx) {
    std::vector<Element> out;
    out.reserve(idx.size());
    for (int i : idx) out.push_back(Element::basis_vector(basis, i));
    return out;
}

// iterate over all index tuples of the given arity
template <typename F>
void for_each_tuple(int dim, int arity, F&& fn) {
    if (dim <= 0 && arity > 0) return;
    std::vector<int> idx(static_cast<size_t>(arity), 0);
    while (true) {
        fn(idx);
        int k = arity - 1;
        while (k >= 0) {
            if (++idx[static_cast<size_t>(k)] < dim) break;
            idx[static_cast<size_t>(k)] = 0;
            --k;
        }
        if (k < 0) break;
    }
}

} // namespace

const MultiOp& AInfStructure::op(int arity) const {
    auto it = ops.find(arity);
    if (it == ops.end())
        throw std::invalid_argument("missing arity " + std::to_string(arity));
    return it->second;
}

Element derivation_defect_value(const GradedAlgebra& alg, const LinearOperator& delta,
                                std::span<const Element> args) {
    size_t n = args.size();
    if (n == 0) throw std::invalid_argument("defect operation needs arguments");
    if (n == 1) return delta.apply(args[0]);

    Element out(alg.basis());
    for (const auto& [d0, head] : args[0].homogeneous_components()) {
        int passed[1] = {d0};
        Scalar s = koszul_sign(delta.degree(), passed);
        if (n == 2) {
            out += delta.apply(alg.multiply(head, args[1]));
            out.add_scaled(alg.multiply(delta.apply(head), args[1]), -1);
            out.add_scaled(alg.multiply(head, delta.apply(args[1])), -s);
        } else {
            Element mid = args[1];
            for (size_t k = 2; k + 1 < n; ++k) mid = alg.multiply(mid, args[k]);
            const Element& last = args[n - 1];
            Element front = alg.multiply(head, mid);           // a1..a_{n-1} sans last
            Element full = alg.multiply(front, last);          // a1..an
            Element midtail = alg.multiply(mid, last);         // a2..an
            out += delta.apply(full);
            out.add_scaled(alg.multiply(delta.apply(front), last), -1);
            out.add_scaled(alg.multiply(head, delta.apply(midtail)), -s);
            out.add_scaled(alg.multiply(alg.multiply(head, delta.apply(mid)), last), s);
        }
    }
    return out;
}

MultiOp derivation_defect_op(const GradedAlgebra& alg, const LinearOperator& delta, int n) {
    if (!same_basis(alg.basis(), delta.basis()))
        throw std::invalid_argument("operator and algebra bases differ");
    if (!delta.degrees_consistent())
        throw std::invalid_argument("operator images violate its declared degree");
    MultiOp op(alg.basis(), n, delta.degree());
    for_each_tuple(alg.basis()->size(), n, [&](const std::vector<int>& idx) {
        Element v = derivation_defect_value(alg, delta, basis_tuple(alg.basis(), idx));
        if (!v.is_zero()) op.set_value(idx, std::move(v));
    });
    return op;
}

AInfStructure derivation_defect_structure(const GradedAlgebra& alg, const LinearOperator& delta,
                                          int n_max) {
    if (delta.degree() != 1 && delta.degree() != -1)
        throw std::invalid_argument("structure operations must have degree +1 or -1");
    AInfStructure s;
    s.space = alg.basis();
    s.mode = delta.degree() == 1 ? Mode::cohomological : Mode::homological;
    for (int n = 1; n <= n_max; ++n) s.ops.emplace(n, derivation_defect_op(alg, delta, n));
    return s;
}

MultiOp stasheff_defect(const AInfStructure& s, int n) {
    for (int k = 1; k <= n; ++k) s.op(k); // throws on missing arity
    MultiOp out(s.space, n, 2 * s.op_degree());
    for_each_tuple(s.space->size(), n, [&](const std::vector<int>& idx) {
        Element acc(s.space);
        std::vector<Element> args = basis_tuple(s.space, idx);
        for (int k = 1; k <= n; ++k) {
            const MultiOp& inner = s.op(k);
            for (int i = 0; i + k <= n; ++i) {
                int outer = n - k + 1;
                std::vector<Element> slotted = apply_tensor_slot(outer, i, inner, args);
                acc += s.op(outer).apply(slotted);
            }
        }
        if (!acc.is_zero()) out.set_value(idx, std::move(acc));
    });
    return out;
}

MultiOp stasheff_defect_vs_delta_square(const GradedAlgebra& alg, const LinearOperator& delta,
                                        int n) {
    if (delta.degree() != 1)
        throw std::invalid_argument("theorem requires a degree +1 operator");
    AInfStructure s = derivation_defect_structure(alg, delta, n);
    MultiOp defect = stasheff_defect(s, n);
    defect.add_scaled(derivation_defect_op(alg, compose(delta, delta), n), -1);
    return defect;
}

OrderResult associative_order(const GradedAlgebra& alg, const LinearOperator& delta, int cap) {
    if (delta.degree() != 1) throw std::domain_error("associative order needs degree +1");
    if (!compose(delta, delta).is_zero())
        throw std::domain_error("associative order needs delta^2 = 0");
    std::vector<MultiOp> ops;
    ops.reserve(static_cast<size_t>(cap) + 1);
    for (int k = 1; k <= cap + 1; ++k) ops.push_back(derivation_defect_op(alg, delta, k));

    OrderResult result;
    result.cap = cap;
    for (int n = 0; n <= cap; ++n) {
        if (ops[static_cast<size_t>(n)].is_zero()) { // m_{n+1}
            result.order = n;
            // Lemma cross-check: everything above must vanish as well.
            for (int i = n + 1; i <= cap; ++i)
                if (!ops[static_cast<size_t>(i)].is_zero())
                    throw std::logic_error("vanishing is not monotone in the arity");
            result.witness = "m" + std::to_string(n + 1) + "=0";
            return result;
        }
    }
    auto entry = ops[static_cast<size_t>(cap)].first_nonzero();
    std::ostringstream os;
    os << "m" << (cap + 1) << tuple_string(alg.basis(), entry->indices) << "="
       << entry->value.to_string();
    result.witness = os.str();
    return result;
}

ValidationReport product_compatibility_check(const GradedAlgebra& alg,
                                             const LinearOperator& delta) {
    MultiOp m2 = derivation_defect_op(alg, delta, 2);
    MultiOp m3 = derivation_defect_op(alg, delta, 3);
    if (!m3.is_zero()) {
        auto e = m3.first_nonzero();
        throw std::domain_error("associative order exceeds 2: m3" +
                                tuple_string(alg.basis(), e->indices) + " = " +
                                e->value.to_string());
    }
    ValidationReport report;
    const BasisPtr& basis = alg.basis();
    for_each_tuple(basis->size(), 3, [&](const std::vector<int>& idx) {
        Element a = Element::basis_vector(basis, idx[0]);
        Element b = Element::basis_vector(basis, idx[1]);
        Element c = Element::basis_vector(basis, idx[2]);
        int pa[1] = {basis->degree(idx[0])};
        Scalar sign = koszul_sign(m2.degree(), pa);

        std::vector<Element> bc{b, c};
        Element lhs1 = alg.multiply(a, m2.apply(bc));
        lhs1.scale(sign);
        std::vector<Element> gab_c{alg.multiply(a, b), c};
        Element rhs1 = m2.apply(gab_c);
        if (!(lhs1 == rhs1))
            report.add("gamma2(id,m2)=m2(gamma2,id)",
                       tuple_string(basis, idx) + ": " + lhs1.to_string() + " vs " +
                           rhs1.to_string());

        std::vector<Element> ab{a, b};
        Element lhs2 = alg.multiply(m2.apply(ab), c);
        std::vector<Element> a_gbc{a, alg.multiply(b, c)};
        Element rhs2 = m2.apply(a_gbc);
        if (!(lhs2 == rhs2))
            report.add("gamma2(m2,id)=m2(id,gamma2)",
                       tuple_string(basis, idx) + ": " + lhs2.to_string() + " vs " +
                           rhs2.to_string());
    });
    return report;
}

InducedOps induced_on_cohomology(const GradedAlgebra& alg, const LinearOperator& delta,
                                 int n_max) {
    if (!compose(delta, delta).is_zero())
        throw std::domain_error("induced structure needs delta^2 = 0");
    GradedAlgebra with_delta = alg;
    with_delta.set_delta(delta);
    InducedOps out{delta_cohomology(with_delta), {}, {}};

    int classes = out.classes.size();
    for (int n = 1; n <= n_max; ++n) {
        auto& table = out.tables[n];
        for_each_tuple(classes, n, [&](const std::vector<int>& idx) {
            std::vector<Element> reps;
            reps.reserve(idx.size());
            for (int c : idx) reps.push_back(out.classes.classes()[static_cast<size_t>(c)].representative);
            Element v = derivation_defect_value(alg, delta, reps);
            if (v.is_zero()) return;
            std::ostringstream os;
            os << "m" << n << " on classes (";
            for (size_t k = 0; k < idx.size(); ++k) os << (k ? "," : "") << idx[k];
            os << ")";
            try {
                std::vector<Scalar> coords = out.classes.project(v);
                bool nonzero = false;
                for (const auto& c : coords)
                    if (c != 0) nonzero = true;
                if (nonzero) {
                    table[idx] = coords;
                    out.report.add("induced_nonzero", os.str() + " = " + v.to_string());
                }
            } catch (const std::domain_error&) {
                out.report.add("induced_outside_kernel", os.str() + " = " + v.to_string());
            }
        });
    }
    return out;
}

AInfStructure left_action_structure(const GradedAlgebra& alg, const LinearOperator& action,
                                    int n_max) {
    if (action.degree() != 1)
        throw std::invalid_argument("left action must have degree +1");
    const BasisPtr& basis = alg.basis();
    for (int i = 0; i < basis->size(); ++i)
        for (int j = 0; j < basis->size(); ++j) {
            Element a = Element::basis_vector(basis, i);
            Element b = Element::basis_vector(basis, j);
            Element lhs = action.apply(alg.multiply(a, b));
            Element rhs = alg.multiply(action.apply(a), b);
            if (!(lhs == rhs))
                throw std::invalid_argument("not a left action: L(" + basis->name(i) + "*" +
                                            basis->name(j) + ") = " + lhs.to_string() +
                                            " but L(a)b = " + rhs.to_string());
        }
    AInfStructure s = derivation_defect_structure(alg, action, n_max);
    if (n_max >= 3 && !s.op(3).is_zero())
        throw std::logic_error("left action produced a nonzero m3");
    s.ledger.insert("left_action_m3_vanishes");
    return s;
}

} // namespace ainf
