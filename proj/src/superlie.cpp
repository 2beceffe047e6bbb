#include "treespace/superlie.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace treespace {

BracketMonomial BracketMonomial::leaf(int label) {
    if (label < 1) throw std::invalid_argument("leaf: generator labels start at 1");
    BracketMonomial m;
    m.nodes_.push_back({label, -1, -1});
    m.root_ = 0;
    m.degree_ = 1;
    return m;
}

BracketMonomial BracketMonomial::bracket(const BracketMonomial& a, const BracketMonomial& b) {
    BracketMonomial m;
    m.nodes_ = a.nodes_;
    const int offset = static_cast<int>(a.nodes_.size());
    for (const Node& nd : b.nodes_)
        m.nodes_.push_back({nd.label, nd.left < 0 ? -1 : nd.left + offset,
                            nd.right < 0 ? -1 : nd.right + offset});
    m.nodes_.push_back({-1, a.root_, b.root_ + offset});
    m.root_ = static_cast<int>(m.nodes_.size()) - 1;
    m.degree_ = a.degree_ + b.degree_;
    return m;
}

std::vector<int> BracketMonomial::leaf_labels() const {
    std::vector<int> out;
    auto walk = [&](auto&& self, int v) -> void {
        if (nodes_[v].left < 0) {
            out.push_back(nodes_[v].label);
            return;
        }
        self(self, nodes_[v].left);
        self(self, nodes_[v].right);
    };
    walk(walk, root_);
    return out;
}

bool BracketMonomial::is_multilinear() const {
    std::vector<int> l = leaf_labels();
    std::sort(l.begin(), l.end());
    for (int i = 0; i < static_cast<int>(l.size()); ++i)
        if (l[i] != i + 1) return false;
    return true;
}

BracketMonomial BracketMonomial::substitute(const Perm& gen_perm) const {
    BracketMonomial m = *this;
    for (Node& nd : m.nodes_)
        if (nd.left < 0) {
            if (nd.label > gen_perm.size())
                throw std::invalid_argument("substitute: label out of range");
            nd.label = gen_perm(nd.label - 1) + 1;
        }
    return m;
}

namespace {
std::string label_text(int label) {
    if (label <= 26) return std::string(1, static_cast<char>('a' + label - 1));
    return "x" + std::to_string(label);
}
}  // namespace

std::string BracketMonomial::text() const {
    auto walk = [&](auto&& self, int v) -> std::string {
        if (nodes_[v].left < 0) return label_text(nodes_[v].label);
        return "[" + self(self, nodes_[v].left) + "," + self(self, nodes_[v].right) + "]";
    };
    return walk(walk, root_);
}

std::string BracketMonomial::shape() const {
    auto walk = [&](auto&& self, int v) -> std::string {
        if (nodes_[v].left < 0) return "*";
        return "[" + self(self, nodes_[v].left) + "," + self(self, nodes_[v].right) + "]";
    };
    return walk(walk, root_);
}

SuperLieElement SuperLieElement::basis(int n, Flavor flavor, const std::vector<int>& word) {
    SuperLieElement e(n, flavor);
    e.add(word, Int(1));
    return e;
}

void SuperLieElement::add(const std::vector<int>& word, const Int& c) {
    if (c.is_zero()) return;
    auto it = coeffs_.find(word);
    if (it == coeffs_.end()) {
        coeffs_.emplace(word, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

SuperLieElement& SuperLieElement::operator+=(const SuperLieElement& o) {
    if (n_ != o.n_ || flavor_ != o.flavor_)
        throw std::invalid_argument("SuperLieElement: mixing modules");
    for (const auto& [w, c] : o.coeffs_) add(w, c);
    return *this;
}

SuperLieElement& SuperLieElement::operator-=(const SuperLieElement& o) {
    if (n_ != o.n_ || flavor_ != o.flavor_)
        throw std::invalid_argument("SuperLieElement: mixing modules");
    for (const auto& [w, c] : o.coeffs_) add(w, -c);
    return *this;
}

SuperLieElement operator*(const Int& c, const SuperLieElement& e) {
    SuperLieElement out(e.n(), e.flavor());
    if (c.is_zero()) return out;
    for (const auto& [w, v] : e.coeffs()) out.add(w, c * v);
    return out;
}

std::pair<int, std::vector<int>> SuperLieElement::single_basis_term() const {
    if (coeffs_.size() != 1) return {0, {}};
    const auto& [w, c] = *coeffs_.begin();
    if (c == Int(1)) return {1, w};
    if (c == Int(-1)) return {-1, w};
    return {0, {}};
}

std::string SuperLieElement::text() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : coeffs_) {
        Int a = c;
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        if (a != Int(1)) os << a << "*";
        os << lambda_bracket(w, n_).text();
        first = false;
    }
    return os.str();
}

BracketMonomial lambda_bracket(const std::vector<int>& word, int n) {
    BracketMonomial acc = BracketMonomial::leaf(n);
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        acc = BracketMonomial::bracket(BracketMonomial::leaf(*it), acc);
    return acc;
}

namespace {

bool subtree_contains(const BracketMonomial& m, int v, int label) {
    if (m.node_is_leaf(v)) return m.node_label(v) == label;
    return subtree_contains(m, m.node_left(v), label) ||
           subtree_contains(m, m.node_right(v), label);
}

int subtree_degree(const BracketMonomial& m, int v) {
    if (m.node_is_leaf(v)) return 1;
    return subtree_degree(m, m.node_left(v)) + subtree_degree(m, m.node_right(v));
}

BracketMonomial subtree_copy(const BracketMonomial& m, int v) {
    if (m.node_is_leaf(v)) return BracketMonomial::leaf(m.node_label(v));
    return BracketMonomial::bracket(subtree_copy(m, m.node_left(v)),
                                    subtree_copy(m, m.node_right(v)));
}

/// Rewrites a monomial containing the anchor generator into prefix words,
/// accumulating coeff * lambda_word into `out`.
void normalize_rec(const BracketMonomial& m, Flavor flavor, int anchor, const Int& coeff,
                   std::map<std::vector<int>, Int>& out) {
    auto add_word = [&](const std::vector<int>& w, const Int& c) {
        auto it = out.find(w);
        if (it == out.end()) {
            if (!c.is_zero()) out.emplace(w, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) out.erase(it);
        }
    };

    int root = m.root();
    if (m.node_is_leaf(root)) {
        if (m.node_label(root) != anchor)
            throw std::logic_error("normalize: stray generator at the anchor position");
        add_word({}, coeff);
        return;
    }

    int l = m.node_left(root);
    int r = m.node_right(root);
    if (!subtree_contains(m, r, anchor)) {
        // Swap so the anchor sits on the right.
        const int dl = subtree_degree(m, l);
        const int dr = subtree_degree(m, r);
        Int sign(-1);
        if (flavor == Flavor::Super && (dl * dr) % 2 == 1) sign = Int(1);
        normalize_rec(BracketMonomial::bracket(subtree_copy(m, r), subtree_copy(m, l)), flavor,
                      anchor, coeff * sign, out);
        return;
    }
    if (m.node_is_leaf(l)) {
        // [x_i, v]: normalize v, then prefix i to every word.
        std::map<std::vector<int>, Int> inner;
        normalize_rec(subtree_copy(m, r), flavor, anchor, coeff, inner);
        const int i = m.node_label(l);
        for (auto& [w, c] : inner) {
            std::vector<int> w2;
            w2.reserve(w.size() + 1);
            w2.push_back(i);
            w2.insert(w2.end(), w.begin(), w.end());
            add_word(w2, c);
        }
        return;
    }
    // [[l1,l2], v] = [l1,[l2,v]] - (-1)^{|l1||l2|} [l2,[l1,v]]  (the exponent
    // is read as 0 in the ordinary flavor). The left argument strictly
    // shrinks, so the rewriting terminates.
    int l1 = m.node_left(l);
    int l2 = m.node_right(l);
    BracketMonomial a = BracketMonomial::bracket(
        subtree_copy(m, l1), BracketMonomial::bracket(subtree_copy(m, l2), subtree_copy(m, r)));
    BracketMonomial b = BracketMonomial::bracket(
        subtree_copy(m, l2), BracketMonomial::bracket(subtree_copy(m, l1), subtree_copy(m, r)));
    Int s(-1);
    if (flavor == Flavor::Super && (subtree_degree(m, l1) * subtree_degree(m, l2)) % 2 == 1)
        s = Int(1);
    normalize_rec(a, flavor, anchor, coeff, out);
    normalize_rec(b, flavor, anchor, coeff * s, out);
}

}  // namespace

SuperLieElement normalize(const BracketMonomial& m, Flavor flavor) {
    if (!m.is_multilinear())
        throw std::invalid_argument("normalize: input is not multilinear on {1..n}");
    const int n = m.degree();
    SuperLieElement e(n, flavor);
    std::map<std::vector<int>, Int> words;
    normalize_rec(m, flavor, n, Int(1), words);
    for (const auto& [w, c] : words) e.add(w, c);
    return e;
}

SuperLieElement normalize(const std::vector<std::pair<Int, BracketMonomial>>& terms, int n,
                          Flavor flavor) {
    SuperLieElement e(n, flavor);
    for (const auto& [c, m] : terms) {
        if (m.degree() != n) throw std::invalid_argument("normalize: degree mismatch");
        e += c * normalize(m, flavor);
    }
    return e;
}

namespace {

AssocExpansion assoc_rec(const BracketMonomial& m, int v, Flavor flavor) {
    if (m.node_is_leaf(v)) return {{{m.node_label(v)}, Int(1)}};
    AssocExpansion a = assoc_rec(m, m.node_left(v), flavor);
    AssocExpansion b = assoc_rec(m, m.node_right(v), flavor);
    const int dl = subtree_degree(m, m.node_left(v));
    const int dr = subtree_degree(m, m.node_right(v));
    // [a,b] = ab - (-1)^{|a||b|} ba, the ordinary commutator when the flavor
    // is ordinary.
    Int back(-1);
    if (flavor == Flavor::Super && (dl * dr) % 2 == 1) back = Int(1);
    AssocExpansion out;
    auto add = [&](std::vector<int> w, const Int& c) {
        auto it = out.find(w);
        if (it == out.end()) {
            if (!c.is_zero()) out.emplace(std::move(w), c);
        } else {
            it->second += c;
            if (it->second.is_zero()) out.erase(it);
        }
    };
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            std::vector<int> fwd = wa;
            fwd.insert(fwd.end(), wb.begin(), wb.end());
            add(std::move(fwd), ca * cb);
            std::vector<int> rev = wb;
            rev.insert(rev.end(), wa.begin(), wa.end());
            add(std::move(rev), back * ca * cb);
        }
    return out;
}

}  // namespace

AssocExpansion assoc_expand(const BracketMonomial& m, Flavor flavor) {
    if (!m.is_multilinear())
        throw std::invalid_argument("assoc_expand: input is not multilinear on {1..n}");
    return assoc_rec(m, m.root(), flavor);
}

AssocExpansion assoc_expand(const SuperLieElement& e) {
    AssocExpansion out;
    for (const auto& [w, c] : e.coeffs()) {
        AssocExpansion mono = assoc_expand(lambda_bracket(w, e.n()), e.flavor());
        for (const auto& [word, v] : mono) {
            auto it = out.find(word);
            if (it == out.end()) {
                Int total = c * v;
                if (!total.is_zero()) out.emplace(word, total);
            } else {
                it->second += c * v;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

SuperLieElement theta(const BracketMonomial& ordinary_monomial) {
    std::vector<int> order = ordinary_monomial.leaf_labels();
    std::vector<int> images(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) images[i] = order[i] - 1;
    const int eps = Perm(images).sign();
    return Int(eps) * normalize(ordinary_monomial, Flavor::Super);
}

SuperLieElement theta(const SuperLieElement& ordinary_element) {
    if (ordinary_element.flavor() != Flavor::Ordinary)
        throw std::invalid_argument("theta: input must be an ordinary Lie element");
    SuperLieElement out(ordinary_element.n(), Flavor::Super);
    for (const auto& [w, c] : ordinary_element.coeffs())
        out += c * theta(lambda_bracket(w, ordinary_element.n()));
    return out;
}

SuperLieElement permute_generators(const SuperLieElement& e, const Perm& sigma, bool sign_twist) {
    if (sigma.size() != e.n())
        throw std::invalid_argument("permute_generators: permutation size mismatch");
    SuperLieElement out(e.n(), e.flavor());
    for (const auto& [w, c] : e.coeffs()) {
        BracketMonomial m = lambda_bracket(w, e.n()).substitute(sigma);
        out += c * normalize(m, e.flavor());
    }
    if (sign_twist && sigma.sign() < 0) out = Int(-1) * out;
    return out;
}

ParsedBrackets parse_bracket_text(const std::string& text) {
    struct Raw {
        bool leaf;
        std::string ident;
        int left = -1, right = -1;
    };
    std::vector<Raw> raw;
    std::vector<std::pair<Int, int>> terms;  // coeff, raw root

    std::size_t pos = 0;
    auto fail = [&](const char* msg) {
        throw std::invalid_argument(std::string("parse_bracket_text: ") + msg);
    };
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto parse_factor = [&](auto&& self) -> int {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        if (text[pos] == '[') {
            ++pos;
            int l = self(self);
            skip_ws();
            if (pos >= text.size() || text[pos] != ',') fail("expected ','");
            ++pos;
            int r = self(self);
            skip_ws();
            if (pos >= text.size() || text[pos] != ']') fail("expected ']'");
            ++pos;
            raw.push_back({false, "", l, r});
            return static_cast<int>(raw.size()) - 1;
        }
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (start == pos) fail("expected an identifier");
        raw.push_back({true, text.substr(start, pos - start)});
        return static_cast<int>(raw.size()) - 1;
    };

    while (true) {
        skip_ws();
        if (pos >= text.size()) break;
        Int coeff(1);
        if (text[pos] == '+' || text[pos] == '-') {
            if (text[pos] == '-') coeff = Int(-1);
            ++pos;
            skip_ws();
        } else if (!terms.empty()) {
            fail("expected '+' or '-' between terms");
        }
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            coeff *= Int(text.substr(start, pos - start));
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip_ws();
            }
        }
        terms.push_back({coeff, parse_factor(parse_factor)});
    }
    if (terms.empty()) fail("empty input");

    // Map the identifier alphabet, sorted, onto 1..n.
    std::vector<std::string> alphabet;
    for (const Raw& r : raw)
        if (r.leaf) alphabet.push_back(r.ident);
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
    auto label_of = [&](const std::string& s) {
        return static_cast<int>(std::lower_bound(alphabet.begin(), alphabet.end(), s) -
                                alphabet.begin()) +
               1;
    };

    ParsedBrackets out;
    out.alphabet = alphabet;
    auto build = [&](auto&& self, int v) -> BracketMonomial {
        if (raw[v].leaf) return BracketMonomial::leaf(label_of(raw[v].ident));
        return BracketMonomial::bracket(self(self, raw[v].left), self(self, raw[v].right));
    };
    for (auto& [c, root] : terms) out.terms.push_back({c, build(build, root)});
    return out;
}

}  // namespace treespace
