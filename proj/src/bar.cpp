#include "ainf/bar.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace ainf {

int word_degree(const GradedBasis& space, const Word& w) {
    int d = 0;
    for (int i : w) d += space.degree(i);
    return d;
}

void TensorElement::add(const Word& w, const Scalar& c) {
    if (c == 0) return;
    auto it = coeffs.find(w);
    if (it == coeffs.end()) {
        coeffs.emplace(w, c);
    } else {
        it->second += c;
        if (it->second == 0) coeffs.erase(it);
    }
}

TensorElement& TensorElement::add_scaled(const TensorElement& other, const Scalar& c) {
    for (const auto& [w, v] : other.coeffs) add(w, c * v);
    return *this;
}

namespace {

std::string word_string(const BasisPtr& space, const Word& w) {
    std::ostringstream os;
    for (size_t k = 0; k < w.size(); ++k) {
        if (k) os << "|";
        os << space->name(w[k]);
    }
    return os.str();
}

// the coderivation on a single word
TensorElement coderivation_word(const BarInput& inp, const Word& w, int max_length) {
    TensorElement out{{}, max_length};
    int n = static_cast<int>(w.size());
    for (int arity = 1; arity <= n; ++arity) {
        auto op_it = inp.ops.ops.find(arity);
        if (op_it == inp.ops.ops.end()) continue; // absent arity acts as zero
        const MultiOp& m = op_it->second;
        for (int skip = 0; skip + arity <= n; ++skip) {
            std::vector<int> passed;
            passed.reserve(static_cast<size_t>(skip));
            for (int k = 0; k < skip; ++k) passed.push_back(inp.space->degree(w[static_cast<size_t>(k)]));
            Scalar sign = koszul_sign(1, passed);
            std::span<const int> block(w.data() + skip, static_cast<size_t>(arity));
            const Element& img = m.value(block);
            for (const auto& [letter, c] : img.coeffs()) {
                Word nw;
                nw.reserve(w.size() - static_cast<size_t>(arity) + 1);
                nw.insert(nw.end(), w.begin(), w.begin() + skip);
                nw.push_back(letter);
                nw.insert(nw.end(), w.begin() + skip + arity, w.end());
                out.add(nw, sign * c);
            }
        }
    }
    return out;
}

MultiOp zero_op(const BasisPtr& space, int arity) { return MultiOp(space, arity, 1); }

} // namespace

BarInput make_bar_input(BasisPtr space, AInfStructure ops) {
    for (int n = 2; n <= ops.max_arity(); ++n) {
        MultiOp defect = stasheff_defect(ops, n);
        if (!defect.is_zero()) {
            auto e = defect.first_nonzero();
            throw std::domain_error("input is not A-infinity at arity " + std::to_string(n) +
                                    ": defect on " + word_string(space, e->indices) + " = " +
                                    e->value.to_string());
        }
    }
    return BarInput{std::move(space), std::move(ops)};
}

BarInput shift_strict(const GradedAlgebra& alg, int n_max) {
    std::vector<GradedBasis::Entry> entries;
    for (const auto& e : alg.basis()->entries()) entries.push_back({e.name, e.degree - 1});
    BasisPtr shifted = GradedBasis::make(std::move(entries));

    auto reindex = [&](const Element& v) {
        Element out(shifted);
        for (const auto& [i, c] : v.coeffs()) out.set_coeff(i, c);
        return out;
    };

    AInfStructure s;
    s.space = shifted;
    s.mode = Mode::cohomological;
    for (int n = 1; n <= n_max; ++n) s.ops.emplace(n, zero_op(shifted, n));

    MultiOp m2(shifted, 2, 1);
    for (int i = 0; i < shifted->size(); ++i) {
        int passed[1] = {shifted->degree(i)};
        Scalar sign = koszul_sign(1, passed);
        for (int j = 0; j < shifted->size(); ++j) {
            const Element& p = alg.product(i, j);
            if (p.is_zero()) continue;
            Element v = reindex(p);
            v.scale(sign);
            m2.set_value({i, j}, std::move(v));
        }
    }
    s.ops.at(2) = std::move(m2);

    if (alg.delta() && !alg.delta()->is_zero()) {
        MultiOp m1(shifted, 1, 1);
        for (const auto& [i, img] : alg.delta()->images())
            if (!img.is_zero()) m1.set_value({i}, reindex(img));
        s.ops.at(1) = std::move(m1);
    }

    for (int n = 2; n <= std::min(3, n_max); ++n) {
        MultiOp defect = stasheff_defect(s, n);
        if (!defect.is_zero()) {
            auto e = defect.first_nonzero();
            throw std::domain_error(
                "strict shift failed the arity " + std::to_string(n) + " identity on " +
                word_string(shifted, e->indices) + " = " + e->value.to_string() +
                " (delta is not a derivation)");
        }
    }
    return BarInput{shifted, std::move(s)};
}

TensorElement bar_coderivation(const BarInput& inp, const TensorElement& t) {
    TensorElement out{{}, t.max_length};
    for (const auto& [w, c] : t.coeffs) {
        if (t.max_length > 0 && static_cast<int>(w.size()) > t.max_length)
            throw std::invalid_argument("word exceeds the truncation bound");
        out.add_scaled(coderivation_word(inp, w, t.max_length), c);
    }
    return out;
}

TensorElement tensor_op(const BarInput& inp, std::span<const Word> factors, int max_length) {
    if (factors.empty()) throw std::invalid_argument("tensor_op needs factors");
    size_t total = 0;
    for (const auto& f : factors) {
        if (f.empty()) throw std::invalid_argument("empty tensor word");
        total += f.size();
    }
    if (static_cast<int>(total) > max_length)
        throw std::invalid_argument("total letter count exceeds the truncation bound");

    if (factors.size() == 1) {
        TensorElement t{{}, max_length};
        t.add(factors[0], 1);
        return bar_coderivation(inp, t);
    }

    const Word& first = factors.front();
    const Word& last = factors.back();
    TensorElement out{{}, max_length};
    for (size_t i = 0; i < first.size(); ++i) {     // letters kept from the first word
        std::vector<int> passed;
        for (size_t k = 0; k < i; ++k) passed.push_back(inp.space->degree(first[k]));
        Scalar sign = koszul_sign(1, passed);
        for (size_t j = 0; j < last.size(); ++j) {  // letters kept from the last word
            Word block(first.begin() + static_cast<long>(i), first.end());
            for (size_t mid = 1; mid + 1 < factors.size(); ++mid)
                block.insert(block.end(), factors[mid].begin(), factors[mid].end());
            block.insert(block.end(), last.begin(), last.end() - static_cast<long>(j));
            auto op_it = inp.ops.ops.find(static_cast<int>(block.size()));
            if (op_it == inp.ops.ops.end()) continue;
            const Element& img = op_it->second.value(block);
            if (img.is_zero()) continue;
            for (const auto& [letter, c] : img.coeffs()) {
                Word nw(first.begin(), first.begin() + static_cast<long>(i));
                nw.push_back(letter);
                nw.insert(nw.end(), last.end() - static_cast<long>(j), last.end());
                out.add(nw, sign * c);
            }
        }
    }
    return out;
}

TensorAlgebra truncated_tensor_algebra(const BarInput& inp, int max_length) {
    TensorAlgebra T;
    int dim = inp.space->size();
    std::vector<Word> current;
    for (int len = 1; len <= max_length; ++len) {
        std::vector<Word> next;
        if (len == 1) {
            for (int i = 0; i < dim; ++i) next.push_back({i});
        } else {
            for (const auto& w : current)
                for (int i = 0; i < dim; ++i) {
                    Word nw = w;
                    nw.push_back(i);
                    next.push_back(std::move(nw));
                }
        }
        for (auto& w : next) {
            T.index.emplace(w, static_cast<int>(T.words.size()));
            T.words.push_back(w);
        }
        current = std::move(next);
    }

    std::vector<GradedBasis::Entry> entries;
    entries.reserve(T.words.size());
    for (const auto& w : T.words)
        entries.push_back({word_string(inp.space, w), word_degree(*inp.space, w)});
    BasisPtr basis = GradedBasis::make(std::move(entries));
    T.algebra = GradedAlgebra(basis);

    for (size_t a = 0; a < T.words.size(); ++a)
        for (size_t b = 0; b < T.words.size(); ++b) {
            if (static_cast<int>(T.words[a].size() + T.words[b].size()) > max_length) continue;
            Word cat = T.words[a];
            cat.insert(cat.end(), T.words[b].begin(), T.words[b].end());
            T.algebra.set_product(static_cast<int>(a), static_cast<int>(b),
                                  Element::basis_vector(basis, T.index.at(cat)));
        }

    LinearOperator delta(basis, 1);
    for (size_t a = 0; a < T.words.size(); ++a) {
        TensorElement img = coderivation_word(inp, T.words[a], max_length);
        Element e(basis);
        for (const auto& [w, c] : img.coeffs) e.set_coeff(T.index.at(w), c);
        if (!e.is_zero()) delta.set_image(static_cast<int>(a), std::move(e));
    }
    T.algebra.set_delta(std::move(delta));
    return T;
}

void for_each_bounded_word_tuple(const TensorAlgebra& T, int k, int max_length,
                                 const std::function<void(const std::vector<int>&)>& fn) {
    // enumerate by length composition so the sweep never touches
    // out-of-range tuples
    std::vector<std::vector<int>> by_len(static_cast<size_t>(max_length) + 1);
    for (size_t i = 0; i < T.words.size(); ++i)
        if (static_cast<int>(T.words[i].size()) <= max_length)
            by_len[T.words[i].size()].push_back(static_cast<int>(i));
    std::vector<int> idx;
    std::function<void(int, int)> rec = [&](int slot, int budget) {
        if (slot == k) {
            fn(idx);
            return;
        }
        int remaining = k - slot - 1; // later factors need at least one letter each
        for (int len = 1; len + remaining <= budget; ++len)
            for (int i : by_len[static_cast<size_t>(len)]) {
                idx.push_back(i);
                rec(slot + 1, budget - len);
                idx.pop_back();
            }
    };
    rec(0, max_length);
}

ValidationReport tensor_ops_match_derived(const BarInput& inp, int max_length, int k_max) {
    ValidationReport report;
    TensorAlgebra T = truncated_tensor_algebra(inp, max_length);
    const LinearOperator& delta = *T.algebra.delta();

    for (int k = 1; k <= k_max; ++k) {
        for_each_bounded_word_tuple(T, k, max_length, [&](const std::vector<int>& idx) {
            std::vector<Word> factors;
            factors.reserve(idx.size());
            for (int i : idx) factors.push_back(T.words[static_cast<size_t>(i)]);
            TensorElement lhs = tensor_op(inp, factors, max_length);

            std::vector<Element> args;
            args.reserve(idx.size());
            for (int i : idx) args.push_back(Element::basis_vector(T.algebra.basis(), i));
            Element rhs = derivation_defect_value(T.algebra, delta, args);

            Element lhs_e(T.algebra.basis());
            for (const auto& [w, c] : lhs.coeffs) lhs_e.set_coeff(T.index.at(w), c);
            if (!(lhs_e == rhs)) {
                std::ostringstream os;
                os << "k=" << k << " (";
                for (size_t p = 0; p < factors.size(); ++p)
                    os << (p ? " , " : "") << word_string(inp.space, factors[p]);
                os << "): " << lhs_e.to_string() << " vs " << rhs.to_string();
                report.add("tensor_op_mismatch", os.str());
            }
        });
    }
    return report;
}

std::vector<std::pair<Word, Word>> word_splittings(const Word& w) {
    std::vector<std::pair<Word, Word>> out;
    for (size_t cut = 1; cut < w.size(); ++cut)
        out.emplace_back(Word(w.begin(), w.begin() + static_cast<long>(cut)),
                         Word(w.begin() + static_cast<long>(cut), w.end()));
    return out;
}

} // namespace ainf
