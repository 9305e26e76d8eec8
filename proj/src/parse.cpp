#include "ainf/parse.hpp"

#include <fstream>
#include <sstream>

namespace ainf {

namespace {

std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream is{std::string(s)};
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

std::string strip_comment(const std::string& line) {
    size_t pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

} // namespace

Element parse_element(const BasisPtr& basis, std::string_view text, int line) {
    Element out(basis);
    std::string term;
    int sign = 1;
    bool any = false;
    auto flush = [&] {
        if (term.empty()) return;
        any = true;
        Scalar coeff = sign;
        std::string name = term;
        size_t star = term.find('*');
        if (star != std::string::npos) {
            try {
                coeff = sign * parse_scalar(term.substr(0, star));
            } catch (const std::invalid_argument& e) {
                throw ParseError(line, e.what());
            }
            name = term.substr(star + 1);
        }
        if (name == "0" && star == std::string::npos) {
            term.clear();
            return;
        }
        auto idx = basis->index_of(name);
        if (!idx) throw ParseError(line, "unknown basis name '" + name + "'");
        Element piece = Element::basis_vector(basis, *idx);
        piece.scale(coeff);
        out += piece;
        term.clear();
    };
    for (char ch : text) {
        if (ch == ' ' || ch == '\t') continue;
        if (ch == '+' || ch == '-') {
            if (term.empty() && !any) {
                // sign in front of the first term
                if (ch == '-') sign = -sign;
                continue;
            }
            if (term.empty())
                throw ParseError(line, "dangling sign in element");
            flush();
            sign = (ch == '-') ? -1 : 1;
            continue;
        }
        term += ch;
    }
    flush();
    if (!any) throw ParseError(line, "empty element");
    return out;
}

GradedAlgebra parse_algebra(std::string_view text) {
    std::istringstream is{std::string(text)};
    std::string raw;
    int lineno = 0;

    std::string name;
    BasisPtr basis;
    GradedAlgebra alg;
    struct Pending {
        int line;
        std::string kind;
        std::string payload;
    };
    std::vector<Pending> pending;
    bool started = false, ended = false;

    while (std::getline(is, raw)) {
        ++lineno;
        std::string line = strip_comment(raw);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        if (ended) throw ParseError(lineno, "content after 'end'");
        const std::string& kw = toks[0];

        if (kw == "algebra") {
            if (started) throw ParseError(lineno, "duplicate 'algebra' line");
            if (toks.size() != 2) throw ParseError(lineno, "expected: algebra <name>");
            name = toks[1];
            started = true;
        } else if (kw == "basis") {
            if (!started) throw ParseError(lineno, "'basis' before 'algebra'");
            if (basis) throw ParseError(lineno, "duplicate 'basis' line");
            std::vector<GradedBasis::Entry> entries;
            for (size_t k = 1; k < toks.size(); ++k) {
                size_t colon = toks[k].rfind(':');
                if (colon == std::string::npos || colon == 0 || colon + 1 == toks[k].size())
                    throw ParseError(lineno, "expected name:degree, got '" + toks[k] + "'");
                std::string deg = toks[k].substr(colon + 1);
                try {
                    size_t used = 0;
                    int d = std::stoi(deg, &used);
                    if (used != deg.size()) throw std::invalid_argument(deg);
                    entries.push_back({toks[k].substr(0, colon), d});
                } catch (const std::exception&) {
                    throw ParseError(lineno, "bad degree '" + deg + "'");
                }
            }
            if (entries.empty()) throw ParseError(lineno, "empty basis");
            try {
                basis = GradedBasis::make(std::move(entries));
            } catch (const std::invalid_argument& e) {
                throw ParseError(lineno, e.what());
            }
            alg = GradedAlgebra(basis);
            alg.name = name;
        } else if (kw == "unit" || kw == "product" || kw == "delta" || kw == "pairing") {
            if (!basis) throw ParseError(lineno, "'" + kw + "' before 'basis'");
            std::string payload = line.substr(line.find(kw) + kw.size());
            pending.push_back({lineno, kw, payload});
        } else if (kw == "end") {
            if (!started) throw ParseError(lineno, "'end' before 'algebra'");
            ended = true;
        } else {
            throw ParseError(lineno, "unknown keyword '" + kw + "'");
        }
    }
    if (!started) throw ParseError(lineno, "missing 'algebra' header");
    if (!basis) throw ParseError(lineno, "missing 'basis' line");
    if (!ended) throw ParseError(lineno, "missing 'end'");

    LinearOperator delta(basis, 1);
    bool has_delta = false;

    for (const auto& p : pending) {
        auto fail = [&](const std::string& msg) { return ParseError(p.line, msg); };
        if (p.kind == "unit") {
            alg.set_unit(parse_element(basis, p.payload, p.line));
        } else if (p.kind == "product") {
            size_t eq = p.payload.find('=');
            if (eq == std::string::npos) throw fail("expected: product a*b = element");
            std::string lhs = p.payload.substr(0, eq);
            auto star = lhs.find('*');
            if (star == std::string::npos) throw fail("expected a*b on the left");
            auto ltoks = split_ws(lhs.substr(0, star));
            auto rtoks = split_ws(lhs.substr(star + 1));
            if (ltoks.size() != 1 || rtoks.size() != 1) throw fail("expected a*b on the left");
            auto li = basis->index_of(ltoks[0]);
            auto ri = basis->index_of(rtoks[0]);
            if (!li || !ri) throw fail("unknown basis name in product");
            alg.set_product(*li, *ri, parse_element(basis, p.payload.substr(eq + 1), p.line));
        } else if (p.kind == "delta") {
            size_t arrow = p.payload.find("->");
            if (arrow == std::string::npos) throw fail("expected: delta a -> element");
            auto ltoks = split_ws(p.payload.substr(0, arrow));
            if (ltoks.size() != 1) throw fail("expected one basis name before ->");
            auto li = basis->index_of(ltoks[0]);
            if (!li) throw fail("unknown basis name '" + ltoks[0] + "'");
            delta.set_image(*li, parse_element(basis, p.payload.substr(arrow + 2), p.line));
            has_delta = true;
        } else { // pairing
            size_t eq = p.payload.find('=');
            if (eq == std::string::npos) throw fail("expected: pairing a.b = scalar");
            auto lhs = split_ws(p.payload.substr(0, eq));
            if (lhs.size() != 1) throw fail("expected a.b on the left");
            size_t dot = lhs[0].find('.');
            if (dot == std::string::npos) throw fail("expected a.b on the left");
            auto li = basis->index_of(lhs[0].substr(0, dot));
            auto ri = basis->index_of(lhs[0].substr(dot + 1));
            if (!li || !ri) throw fail("unknown basis name in pairing");
            auto rhs = split_ws(p.payload.substr(eq + 1));
            if (rhs.size() != 1) throw fail("expected one scalar");
            Scalar v;
            try {
                v = parse_scalar(rhs[0]);
            } catch (const std::invalid_argument& e) {
                throw fail(e.what());
            }
            // symmetry auto-completed; conflicting asymmetric entries rejected
            if (alg.has_pairing()) {
                Scalar existing = alg.pairing(*ri, *li);
                if (existing != 0 && existing != v)
                    throw fail("conflicting pairing for the symmetric pair");
            }
            alg.set_pairing(*li, *ri, v);
            alg.set_pairing(*ri, *li, v);
        }
    }
    if (has_delta) alg.set_delta(std::move(delta));
    return alg;
}

GradedAlgebra load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_algebra(buf.str());
}

std::string serialize_algebra(const GradedAlgebra& alg) {
    std::ostringstream os;
    const BasisPtr& basis = alg.basis();
    os << "algebra " << (alg.name.empty() ? "unnamed" : alg.name) << "\n";
    os << "basis";
    for (const auto& e : basis->entries()) os << " " << e.name << ":" << e.degree;
    os << "\n";
    if (alg.unit()) os << "unit " << alg.unit()->to_string() << "\n";
    for (const auto& [ij, v] : alg.products())
        if (!v.is_zero())
            os << "product " << basis->name(ij.first) << "*" << basis->name(ij.second) << " = "
               << v.to_string() << "\n";
    if (alg.delta())
        for (const auto& [i, img] : alg.delta()->images())
            if (!img.is_zero())
                os << "delta " << basis->name(i) << " -> " << img.to_string() << "\n";
    if (alg.has_pairing())
        for (const auto& [ij, v] : alg.pairing_table())
            if (ij.first <= ij.second && v != 0)
                os << "pairing " << basis->name(ij.first) << "." << basis->name(ij.second)
                   << " = " << format_scalar(v) << "\n";
    os << "end\n";
    return os.str();
}

bool algebras_equal(const GradedAlgebra& a, const GradedAlgebra& b) {
    if (!same_basis(a.basis(), b.basis())) return false;
    int n = a.basis()->size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!(a.product(i, j) == b.product(i, j))) return false;
            if (a.pairing(i, j) != b.pairing(i, j)) return false;
        }
    if (a.unit().has_value() != b.unit().has_value()) return false;
    if (a.unit() && !(*a.unit() == *b.unit())) return false;
    bool da = a.delta() && !a.delta()->is_zero();
    bool db = b.delta() && !b.delta()->is_zero();
    if (da != db) return false;
    if (da)
        for (int i = 0; i < n; ++i)
            if (!(a.delta()->image_of(i) == b.delta()->image_of(i))) return false;
    if (a.has_pairing() != b.has_pairing()) return false;
    return true;
}

} // namespace ainf
