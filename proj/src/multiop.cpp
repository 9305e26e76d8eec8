#include "ainf/multiop.hpp"

#include <stdexcept>

namespace ainf {

int koszul_sign(long long op_degree, std::span<const int> passed_degrees) {
    long long total = 0;
    for (int d : passed_degrees) total += d;
    return (op_degree * total) % 2 != 0 ? -1 : 1;
}

namespace {
const Element& zero_of(const BasisPtr& basis) {
    static thread_local std::map<const GradedBasis*, Element> cache;
    auto [it, fresh] = cache.try_emplace(basis.get(), Element(basis));
    return it->second;
}
} // namespace

void MultiOp::set_value(std::vector<int> indices, Element value) {
    if (static_cast<int>(indices.size()) != arity_)
        throw std::invalid_argument("tuple length does not match arity");
    if (value.is_zero())
        table_.erase(indices);
    else
        table_[std::move(indices)] = std::move(value);
}

const Element& MultiOp::value(std::span<const int> indices) const {
    // transparent lookup without copying would need heterogenous keys; the
    // tuple lengths here are tiny
    std::vector<int> key(indices.begin(), indices.end());
    auto it = table_.find(key);
    return it == table_.end() ? zero_of(basis_) : it->second;
}

Element MultiOp::apply(std::span<const Element> args) const {
    if (static_cast<int>(args.size()) != arity_)
        throw std::invalid_argument("argument count does not match arity");
    for (const auto& a : args)
        if (!a.is_zero() && !same_basis(basis_, a.basis()))
            throw std::invalid_argument("basis mismatch in operation application");
    Element out(basis_);
    std::vector<int> idx(static_cast<size_t>(arity_));
    std::vector<std::map<int, Scalar>::const_iterator> its;
    // iterate over the product of supports
    std::vector<const std::map<int, Scalar>*> supports;
    supports.reserve(args.size());
    for (const auto& a : args) {
        if (a.is_zero()) return out;
        supports.push_back(&a.coeffs());
    }
    its.reserve(args.size());
    for (const auto* s : supports) its.push_back(s->begin());
    while (true) {
        Scalar c = 1;
        for (size_t k = 0; k < its.size(); ++k) {
            idx[k] = its[k]->first;
            c *= its[k]->second;
        }
        auto it = table_.find(idx);
        if (it != table_.end()) out.add_scaled(it->second, c);
        size_t k = its.size();
        while (k > 0) {
            --k;
            ++its[k];
            if (its[k] != supports[k]->end()) break;
            its[k] = supports[k]->begin();
            if (k == 0) return out;
        }
    }
}

MultiOp& MultiOp::add_scaled(const MultiOp& other, const Scalar& c) {
    if (other.arity_ != arity_ || !same_basis(basis_, other.basis_))
        throw std::invalid_argument("incompatible operations");
    for (const auto& [idx, v] : other.table_) {
        auto it = table_.find(idx);
        if (it == table_.end()) {
            Element e(basis_);
            e.add_scaled(v, c);
            if (!e.is_zero()) table_.emplace(idx, std::move(e));
        } else {
            it->second.add_scaled(v, c);
            if (it->second.is_zero()) table_.erase(it);
        }
    }
    return *this;
}

std::optional<MultiOp::Entry> MultiOp::first_nonzero() const {
    for (const auto& [idx, v] : table_)
        if (!v.is_zero()) return Entry{idx, v};
    return std::nullopt;
}

bool MultiOp::operator==(const MultiOp& other) const {
    return arity_ == other.arity_ && degree_ == other.degree_ &&
           same_basis(basis_, other.basis_) && table_ == other.table_;
}

std::vector<Element> apply_tensor_slot(int outer_arity, int slot, const MultiOp& inner,
                                       std::span<const Element> args) {
    if (slot < 0 || slot >= outer_arity)
        throw std::invalid_argument("slot out of range");
    if (static_cast<int>(args.size()) != outer_arity - 1 + inner.arity())
        throw std::invalid_argument("argument count mismatch");
    std::vector<int> passed;
    passed.reserve(static_cast<size_t>(slot));
    for (int k = 0; k < slot; ++k) {
        if (args[static_cast<size_t>(k)].is_zero()) {
            passed.push_back(0);
            continue;
        }
        auto d = args[static_cast<size_t>(k)].homogeneous_degree();
        if (!d) throw std::invalid_argument("inhomogeneous argument in tensor slot");
        passed.push_back(*d);
    }
    int sign = koszul_sign(inner.degree(), passed);
    std::vector<Element> out;
    out.reserve(static_cast<size_t>(outer_arity));
    for (int k = 0; k < slot; ++k) out.push_back(args[static_cast<size_t>(k)]);
    Element mid = inner.apply(args.subspan(static_cast<size_t>(slot),
                                           static_cast<size_t>(inner.arity())));
    mid.scale(sign);
    out.push_back(std::move(mid));
    for (size_t k = static_cast<size_t>(slot) + static_cast<size_t>(inner.arity());
         k < args.size(); ++k)
        out.push_back(args[k]);
    return out;
}

} // namespace ainf
