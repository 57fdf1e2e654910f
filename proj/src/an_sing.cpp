#include "orlov/an_sing.hpp"

#include <algorithm>

namespace orlov {

AnSing::AnSing(int n) : n_(n) {
    if (n < 2) throw InvalidArgument("an_sing needs n >= 2");
}

void AnSing::check(int i) const {
    if (i < 1 || i >= n_) throw InvalidArgument("module index out of range: " + std::to_string(i));
}

std::vector<AnSing::Alpha> AnSing::hom_basis(int i, int j) const {
    check(i);
    check(j);
    std::vector<Alpha> out;
    for (int l = std::max(0, j - i); l < std::min(j, n_ - i); ++l) out.push_back({i, j, l});
    return out;
}

bool AnSing::legal(const Alpha& a) const {
    return a.i >= 1 && a.i < n_ && a.j >= 1 && a.j < n_ && a.l >= std::max(0, a.j - a.i) &&
           a.l < std::min(a.j, n_ - a.i);
}

std::optional<AnSing::Alpha> AnSing::compose(const Alpha& g, const Alpha& f) const {
    if (f.j != g.i) throw InvalidArgument("mismatched endpoints");
    Alpha h{f.i, g.j, f.l + g.l};
    if (!legal(h)) return std::nullopt;
    return h;
}

std::vector<int> AnSing::cone_modules(const Alpha& f) const {
    if (!legal(f)) throw InvalidArgument("illegal alpha");
    std::vector<int> out;
    const int a = std::max(0, f.i - f.j + f.l);
    if (a > 0) out.push_back(n_ - a);  // V_a[1]
    if (f.l > 0) out.push_back(f.l);
    return out;
}

// Only the lowest power out of each generator needs testing: f after
// alpha^{l'}_{s,i} is nonzero iff l + l' < min(j, n - s), and the lower
// legality bound holds automatically.
bool AnSing::ghost(const Morphism& m, const GeneratorSet& g) const {
    const Alpha f = alpha_of(m);
    for (int c : g) {
        for (int s : {c + 1, n_ - c - 1}) {
            const int lp = std::max(0, f.i - s);
            if (lp < std::min(f.i, n_ - s) && f.l + lp < std::min(f.j, n_ - s)) return false;
        }
    }
    return true;
}

bool AnSing::is_ghost(const Alpha& f, const GeneratorSet& g) const {
    for (int c : g) {
        for (int s : {c + 1, n_ - c - 1}) {
            for (const auto& h : hom_basis(s, f.i))
                if (compose(f, h)) return false;
        }
    }
    return true;
}

int AnSing::module_of(Indec x) const {
    x = normalize(x);
    return x.shift == 0 ? x.cls + 1 : n_ - x.cls - 1;
}

Indec AnSing::indec_of_module(int i) const {
    check(i);
    if (i <= m()) return normalize({i - 1, 0});
    return {n_ - i - 1, 1};
}

Morphism AnSing::lift(const Alpha& a) const {
    return {indec_of_module(a.i), indec_of_module(a.j), a.l};
}

AnSing::Alpha AnSing::alpha_of(const Morphism& f) const {
    return {module_of(f.src), module_of(f.dst), f.tag};
}

std::string AnSing::name() const { return "an_sing(n=" + std::to_string(n_) + ")"; }

std::string AnSing::class_name(int c) const { return "V" + std::to_string(c + 1); }

Indec AnSing::normalize(Indec x) const {
    if (x.cls < 0 || x.cls >= m()) throw InvalidArgument("unknown class");
    int s = ((x.shift % 2) + 2) % 2;
    if (2 * (x.cls + 1) == n_) s = 0;
    return {x.cls, s};
}

Morphism AnSing::identity(Indec x) const {
    x = normalize(x);
    return {x, x, 0};
}

std::vector<Morphism> AnSing::morphisms_from(Indec x) const {
    const int i = module_of(x);
    std::vector<Morphism> out;
    for (int j = 1; j < n_; ++j)
        for (const auto& a : hom_basis(i, j)) out.push_back(lift(a));
    return out;
}

std::vector<Morphism> AnSing::morphisms_to(Indec y) const {
    const int j = module_of(y);
    std::vector<Morphism> out;
    for (int i = 1; i < n_; ++i)
        for (const auto& a : hom_basis(i, j)) out.push_back(lift(a));
    return out;
}

std::optional<Morphism> AnSing::compose(const Morphism& g, const Morphism& f) const {
    if (normalize(f.dst) != normalize(g.src)) throw InvalidArgument("mismatched endpoints");
    auto h = compose(alpha_of(g), alpha_of(f));
    if (!h) return std::nullopt;
    return lift(*h);
}

Object AnSing::cone(const Morphism& f) const {
    std::vector<Indec> xs;
    for (int i : cone_modules(alpha_of(f))) xs.push_back(indec_of_module(i));
    return make_object(std::move(xs));
}

std::set<int> an_sing_closed_form_spectrum(int n) {
    if (n < 2) throw InvalidArgument("n >= 2");
    const int m = n / 2;
    std::set<int> out;
    for (int s = 1; s <= m; ++s) out.insert((m + s - 1) / s - 1);
    return out;
}

int an_sing_closed_form_tritime(int n, const GeneratorSet& g) {
    const int m = n / 2;
    if (int(g.size()) == m) return 0;
    const int top = *std::max_element(g.begin(), g.end()) + 1;
    return std::max((m + top - 1) / top - 1, 1);
}

}  // namespace orlov
