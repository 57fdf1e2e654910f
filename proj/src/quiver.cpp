#include "orlov/quiver.hpp"

#include "orlov/fp.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <tuple>

namespace orlov {

Quiver::Quiver(int n, int sum_arity) : n_(n), arity_(sum_arity) {
    if (n < 1) throw InvalidArgument("quiver needs n >= 1");
    if (sum_arity < 0) throw InvalidArgument("sum arity must be >= 0");
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) ivs_.push_back({i, j});
}

int Quiver::class_of(Interval v) const {
    auto it = std::lower_bound(ivs_.begin(), ivs_.end(), v);
    if (it == ivs_.end() || *it != v)
        throw InvalidArgument("not an interval: M(" + std::to_string(v.i) + "," +
                              std::to_string(v.j) + ")");
    return int(it - ivs_.begin());
}

int Quiver::hom_dim(Interval x, Interval y, int degree) const {
    const auto [i, j] = x;
    const auto [s, t] = y;
    if (degree == 0) return (s <= i && i <= t && t <= j) ? 1 : 0;
    if (degree == 1) return (i + 1 <= s && s <= j + 1 && j + 1 <= t) ? 1 : 0;
    return 0;
}

std::optional<Morphism> Quiver::compose(const Morphism& g, const Morphism& f) const {
    if (normalize(f.dst) != normalize(g.src)) throw InvalidArgument("mismatched endpoints");
    const int d = f.tag + g.tag;
    if (d >= 2) return std::nullopt;
    if (!hom_dim(interval(f.src.cls), interval(g.dst.cls), d)) return std::nullopt;
    return Morphism{f.src, g.dst, d};
}

int Quiver::structure_constant(const Morphism& g, const Morphism& f) const {
    return compose(g, f) ? 1 : 0;
}

std::vector<Quiver::Interval> Quiver::extension_middle(Interval x, Interval y) const {
    if (!hom_dim(x, y, 1)) throw InvalidArgument("Ext^1 vanishes");
    std::vector<Interval> out{{x.i, y.j}};
    if (y.i <= x.j) out.push_back({y.i, x.j});
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Indec> Quiver::serre(Indec x) const {
    const auto v = interval(x.cls);
    if (v.j == n_) return std::nullopt;
    return Indec{class_of({v.i + 1, v.j + 1}), x.shift + 1};
}

std::string Quiver::name() const { return "quiver(n=" + std::to_string(n_) + ")"; }

std::string Quiver::class_name(int c) const {
    const auto v = interval(c);
    return "M(" + std::to_string(v.i) + "," + std::to_string(v.j) + ")";
}

Indec Quiver::normalize(Indec x) const {
    if (x.cls < 0 || x.cls >= class_count()) throw InvalidArgument("unknown class");
    return x;
}

Morphism Quiver::identity(Indec x) const { return {x, x, 0}; }

std::vector<Morphism> Quiver::morphisms_from(Indec x) const {
    const auto v = interval(x.cls);
    std::vector<Morphism> out;
    for (int d = 0; d <= 1; ++d)
        for (int c = 0; c < class_count(); ++c)
            if (hom_dim(v, ivs_[size_t(c)], d)) out.push_back({x, {c, x.shift + d}, d});
    return out;
}

std::vector<Morphism> Quiver::morphisms_to(Indec y) const {
    const auto w = interval(y.cls);
    std::vector<Morphism> out;
    for (int d = 0; d <= 1; ++d)
        for (int c = 0; c < class_count(); ++c)
            if (hom_dim(ivs_[size_t(c)], w, d)) out.push_back({{c, y.shift - d}, y, d});
    return out;
}

Object Quiver::cone(const Morphism& f) const {
    const auto x = interval(f.src.cls);
    const auto y = interval(f.dst.cls);
    std::vector<Indec> out;
    if (f.tag == 0) {
        if (!hom_dim(x, y, 0)) throw InvalidArgument("zero morphism");
        // image is M(i,t)
        if (y.j < x.j) out.push_back({class_of({y.j + 1, x.j}), f.src.shift + 1});
        if (y.i < x.i) out.push_back({class_of({y.i, x.i - 1}), f.src.shift});
    } else {
        // X -> Y[1] has cone E[1]
        for (auto v : extension_middle(x, y)) out.push_back({class_of(v), f.src.shift + 1});
    }
    return make_object(std::move(out));
}

namespace {

// Representations over a large prime field, enough for ranks of 0/1 data.
using F = Zp<32003>;
using FM = Mat<F>;

struct Rep {
    std::vector<int> dim;  // per vertex 1..n, stored 0-based
    std::vector<FM> arrow; // arrow[v]: vertex v -> v+1
};

FM transport(const Rep& x, int a, int b) {
    FM t = FM::Identity(x.dim[size_t(a)], x.dim[size_t(a)]);
    for (int v = a; v < b; ++v) t = FM(x.arrow[size_t(v)] * t);
    return t;
}

// Interval multiplicities from the rank function r(a, b) of a representation.
template <typename RankFn>
std::vector<Quiver::Interval> intervals_from_ranks(int n, RankFn rk) {
    auto r = [&](int a, int b) { return (a < 0 || b >= n) ? 0 : rk(a, b); };
    std::vector<Quiver::Interval> out;
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            const int mult = r(a, b) - r(a - 1, b) - r(a, b + 1) + r(a - 1, b + 1);
            if (mult < 0) throw ConsistencyError("negative interval multiplicity");
            for (int k = 0; k < mult; ++k) out.push_back({a + 1, b + 1});
        }
    return out;
}

}  // namespace

namespace {

// A direct sum of interval modules with coordinates per vertex.
struct SumRep {
    std::vector<Quiver::Interval> parts;
    std::vector<std::vector<int>> coord;  // coord[part][v], -1 outside the support
    std::vector<int> dim;
};

SumRep sum_rep(int n, const std::vector<Quiver::Interval>& parts) {
    SumRep s;
    s.parts = parts;
    s.dim.assign(size_t(n), 0);
    for (const auto& p : parts) {
        std::vector<int> c(size_t(n), -1);
        for (int v = p.i - 1; v < p.j; ++v) c[size_t(v)] = s.dim[size_t(v)]++;
        s.coord.push_back(std::move(c));
    }
    return s;
}

Rep to_rep(int n, const SumRep& s) {
    Rep r;
    r.dim = s.dim;
    for (int v = 0; v + 1 < n; ++v) {
        FM a = FM::Zero(s.dim[size_t(v + 1)], s.dim[size_t(v)]);
        for (const auto& c : s.coord)
            if (c[size_t(v)] >= 0 && c[size_t(v + 1)] >= 0) a(c[size_t(v + 1)], c[size_t(v)]) = F(1);
        r.arrow.push_back(a);
    }
    return r;
}

}  // namespace

// Writing src = (+)_k V_k[k] and dst = (+)_k U_k[k], the cone has in shift k
// the extension of ker(V_{k-1} -> U_{k-1}) by coker(V_k -> U_k) pulled back
// from the degree-1 components V_{k-1} -> U_k[1]. It is computed as a
// subquotient of the extension E_k of V_{k-1} by U_k.
Object Quiver::cone_between(const std::vector<Indec>& src, const std::vector<Indec>& dst,
                            const std::vector<Entry>& entries) const {
    if (src.empty() && dst.empty()) return {};
    int lo = kInf, hi = -kInf;
    for (const auto& x : src) lo = std::min(lo, x.shift + 1), hi = std::max(hi, x.shift + 1);
    for (const auto& x : dst) lo = std::min(lo, x.shift), hi = std::max(hi, x.shift);
    for (const auto& e : entries) {
        const Indec a = src.at(size_t(e.src)), b = dst.at(size_t(e.dst));
        const int d = b.shift - a.shift;
        if (d < 0 || d > 1 || !hom_dim(interval(a.cls), interval(b.cls), d))
            throw InvalidArgument("entry is not a basis map");
    }

    std::vector<Indec> out;
    for (int k = lo; k <= hi; ++k) {
        // parts of U_k, V_{k-1}; U_{k-1}, V_k appear only through f
        std::vector<int> uk, vk1, uk1, vk;
        for (size_t a = 0; a < dst.size(); ++a) {
            if (dst[a].shift == k) uk.push_back(int(a));
            if (dst[a].shift == k - 1) uk1.push_back(int(a));
        }
        for (size_t a = 0; a < src.size(); ++a) {
            if (src[a].shift == k - 1) vk1.push_back(int(a));
            if (src[a].shift == k) vk.push_back(int(a));
        }
        auto parts = [&](const std::vector<int>& idx, const std::vector<Indec>& xs) {
            std::vector<Interval> p;
            for (int a : idx) p.push_back(interval(xs[size_t(a)].cls));
            return p;
        };
        auto pos = [](const std::vector<int>& idx, int a) {
            return int(std::find(idx.begin(), idx.end(), a) - idx.begin());
        };
        std::vector<Interval> ep = parts(uk, dst);
        for (const auto& v : parts(vk1, src)) ep.push_back(v);
        const SumRep es = sum_rep(n_, ep);
        Rep e = to_rep(n_, es);
        const size_t nu = uk.size();
        const SumRep vk1s = sum_rep(n_, parts(vk1, src)), uk1s = sum_rep(n_, parts(uk1, dst));
        const SumRep vks = sum_rep(n_, parts(vk, src));

        std::vector<FM> f_prev, f_here;  // V_{k-1} -> U_{k-1}, V_k -> U_k
        for (int v = 0; v < n_; ++v) {
            f_prev.push_back(FM::Zero(uk1s.dim[size_t(v)], vk1s.dim[size_t(v)]));
            f_here.push_back(FM::Zero(es.dim[size_t(v)], vks.dim[size_t(v)]));
        }
        for (const auto& en : entries) {
            const Indec a = src[size_t(en.src)], b = dst[size_t(en.dst)];
            if (a.shift == k - 1 && b.shift == k - 1) {
                const size_t p = size_t(pos(vk1, en.src)), q = size_t(pos(uk1, en.dst));
                for (int v = 0; v < n_; ++v)
                    if (vk1s.coord[p][size_t(v)] >= 0 && uk1s.coord[q][size_t(v)] >= 0)
                        f_prev[size_t(v)](uk1s.coord[q][size_t(v)], vk1s.coord[p][size_t(v)]) += F(en.coef);
            } else if (a.shift == k && b.shift == k) {
                const size_t p = size_t(pos(vk, en.src)), q = size_t(pos(uk, en.dst));
                for (int v = 0; v < n_; ++v)
                    if (vks.coord[p][size_t(v)] >= 0 && es.coord[q][size_t(v)] >= 0)
                        f_here[size_t(v)](es.coord[q][size_t(v)], vks.coord[p][size_t(v)]) += F(en.coef);
            } else if (a.shift == k - 1 && b.shift == k) {
                // the class sits on the arrow leaving the top of the source
                const size_t p = nu + size_t(pos(vk1, en.src)), q = size_t(pos(uk, en.dst));
                const int top = interval(a.cls).j - 1;
                e.arrow[size_t(top)](es.coord[q][size_t(top + 1)], es.coord[p][size_t(top)]) += F(en.coef);
            }
        }

        // S_v = U_k + ker f_prev inside E_v
        std::vector<FM> sub;
        for (int v = 0; v < n_; ++v) {
            const FM ker = nullspace(f_prev[size_t(v)]);
            int udim = 0;
            for (size_t q = 0; q < nu; ++q) udim += es.coord[q][size_t(v)] >= 0;
            FM b = FM::Zero(es.dim[size_t(v)], udim + ker.cols());
            for (int c = 0; c < udim; ++c) b(c, c) = F(1);
            // V_{k-1} coordinates follow the U_k ones in E
            for (Eigen::Index c = 0; c < ker.cols(); ++c)
                for (Eigen::Index r = 0; r < ker.rows(); ++r) b(udim + r, udim + c) = ker(r, c);
            sub.push_back(b);
        }
        const auto found = intervals_from_ranks(n_, [&](int a, int b) {
            const FM& q = f_here[size_t(b)];
            const FM img = transport(e, a, b) * sub[size_t(a)];
            FM both(img.rows(), img.cols() + q.cols());
            both << img, q;
            return rank(both) - rank(q);
        });
        for (const auto& v : found) out.push_back({class_of(v), k});
    }
    return make_object(std::move(out));
}

std::vector<int> Quiver::sum_cone_classes(const std::vector<int>& left,
                                          const std::vector<int>& right) const {
    const auto key = std::make_pair(left, right);
    {
        std::shared_lock lock(cache_->mu);
        auto it = cache_->classes.find(key);
        if (it != cache_->classes.end()) return it->second;
    }
    std::vector<char> hit(size_t(class_count()), 0);
    // both directions: left -> right and right -> left
    for (int dir = 0; dir < 2; ++dir) {
        const auto& a = dir == 0 ? left : right;
        const auto& b = dir == 0 ? right : left;
        // a[0] sits at shift 0; every other summand ranges over nearby shifts
        const int others = int(a.size() + b.size()) - 1;
        std::vector<int> sh(size_t(others), -2);
        for (;;) {
            std::vector<Indec> src, dst;
            for (size_t i = 0; i < a.size(); ++i) src.push_back({a[i], i == 0 ? 0 : sh[i - 1]});
            for (size_t i = 0; i < b.size(); ++i) dst.push_back({b[i], sh[a.size() - 1 + i]});
            std::vector<Entry> edges;
            for (size_t p = 0; p < src.size(); ++p)
                for (size_t q = 0; q < dst.size(); ++q) {
                    const int d = dst[q].shift - src[p].shift;
                    if ((d == 0 || d == 1) && hom_dim(interval(src[p].cls), interval(dst[q].cls), d))
                        edges.push_back({int(p), int(q), 1});
                }
            const unsigned full = (1u << edges.size()) - 1;
            for (unsigned mask = 1; mask <= full && !edges.empty(); ++mask) {
                std::vector<Entry> en;
                std::vector<char> ps(src.size(), 0), qs(dst.size(), 0);
                for (size_t k = 0; k < edges.size(); ++k)
                    if (mask >> k & 1) {
                        en.push_back(edges[k]);
                        ps[size_t(edges[k].src)] = qs[size_t(edges[k].dst)] = 1;
                    }
                // smaller sums are covered by smaller key pairs
                if (std::count(ps.begin(), ps.end(), 0) || std::count(qs.begin(), qs.end(), 0)) continue;
                // a cycle leaves one scalar that automorphisms cannot absorb
                const bool cyc = en.size() >= src.size() + dst.size();
                for (int lam : cyc ? std::vector<int>{1, -1, 2} : std::vector<int>{1}) {
                    en.back().coef = lam;
                    for (const auto& x : cone_between(src, dst, en).summands) hit[size_t(x.cls)] = 1;
                }
            }
            size_t i = 0;
            while (i < sh.size() && sh[i] == 2) sh[i++] = -2;
            if (i == sh.size()) break;
            ++sh[i];
        }
    }
    std::vector<int> out;
    for (int c = 0; c < class_count(); ++c)
        if (hit[size_t(c)]) out.push_back(c);
    std::unique_lock lock(cache_->mu);
    cache_->classes.emplace(key, out);
    return out;
}

RadicalChain loewy_length_end_algebra_chain(int n) {
    const Quiver q(n);
    using Key = std::tuple<int, int, int>;
    RadicalChain best;
    best.loewy_length = 1;
    for (int c = 0; c < q.class_count(); ++c) {
        std::map<Key, std::pair<int, std::optional<Morphism>>> memo;
        std::set<Key> stack;
        auto rec = [&](auto&& self, const Morphism& comp) -> int {
            Key k{comp.dst.cls, comp.dst.shift, comp.tag};
            if (auto it = memo.find(k); it != memo.end()) return it->second.first;
            if (!stack.insert(k).second) throw ConsistencyError("radical chain cycles");
            int len = 0;
            std::optional<Morphism> arg;
            for (const auto& f : q.morphisms_from(comp.dst)) {
                if (f == q.identity(comp.dst)) continue;
                auto h = q.compose(f, comp);
                if (!h) continue;
                int l = 1 + self(self, *h);
                if (l > len) {
                    len = l;
                    arg = f;
                }
            }
            stack.erase(k);
            memo[k] = {len, arg};
            return len;
        };
        Morphism comp = q.identity({c, 0});
        const int len = rec(rec, comp);
        if (len + 1 > best.loewy_length) {
            best.loewy_length = len + 1;
            best.witness.clear();
            for (;;) {
                const auto& [l, arg] = memo.at({comp.dst.cls, comp.dst.shift, comp.tag});
                if (!arg) break;
                best.witness.push_back(*arg);
                comp = *q.compose(*arg, comp);
            }
        }
    }
    return best;
}

int loewy_length_end_algebra(int n) { return loewy_length_end_algebra_chain(n).loewy_length; }

}  // namespace orlov
