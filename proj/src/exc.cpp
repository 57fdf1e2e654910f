#include "orlov/exc.hpp"

#include "orlov/fp.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace orlov {

bool Presentation::associative() const { return arity_max() <= 2; }

int Presentation::arity_max() const {
    int a = 0;
    for (const auto& p : products) a = std::max(a, int(p.inputs.size()));
    return a;
}

std::vector<std::string> Presentation::validate() const {
    const int nv = int(vertices.size());
    const int na = int(arrows.size());
    if (!supported_prime(field)) throw InvalidArgument("unsupported field " + std::to_string(field));
    for (const auto& a : arrows) {
        if (a.source < 0 || a.source >= nv || a.target < 0 || a.target >= nv)
            throw InvalidArgument("arrow " + a.name + " has an unknown endpoint");
        if (a.source == a.target)
            throw InvalidArgument("arrow " + a.name + " is an endomorphism of an exceptional object");
    }
    std::set<std::vector<int>> seen;
    for (const auto& p : products) {
        const int t = int(p.inputs.size());
        if (t < 2) throw InvalidArgument("products need arity >= 2");
        for (int i : p.inputs)
            if (i < 0 || i >= na) throw InvalidArgument("product input out of range");
        for (int k = 0; k + 1 < t; ++k)
            if (arrows[size_t(p.inputs[size_t(k)])].target !=
                arrows[size_t(p.inputs[size_t(k + 1)])].source)
                throw InvalidArgument("product inputs do not compose");
        if (!seen.insert(p.inputs).second) throw InvalidArgument("duplicate product entry");
        int deg = 2 - t;
        for (int i : p.inputs) deg += arrows[size_t(i)].degree;
        const int s = arrows[size_t(p.inputs.front())].source;
        const int e = arrows[size_t(p.inputs.back())].target;
        for (const auto& [c, o] : p.output) {
            if (o < 0 || o >= na) throw InvalidArgument("product output out of range");
            if (arrows[size_t(o)].source != s || arrows[size_t(o)].target != e)
                throw InvalidArgument("product output has wrong endpoints");
            if (arrows[size_t(o)].degree != deg)
                throw InvalidArgument("product output has degree " +
                                      std::to_string(arrows[size_t(o)].degree) + ", expected " +
                                      std::to_string(deg));
        }
    }

    // With m_1 = 0 the first higher relation is associativity of m_2.
    std::vector<std::string> warn;
    std::map<std::pair<int, int>, std::map<int, long long>> m2;
    for (const auto& p : products)
        if (p.inputs.size() == 2)
            for (const auto& [c, o] : p.output) m2[{p.inputs[0], p.inputs[1]}][o] += c;
    auto mul = [&](const std::map<int, long long>& x, int b, bool right) {
        std::map<int, long long> out;
        for (const auto& [a, c] : x) {
            auto it = m2.find(right ? std::make_pair(a, b) : std::make_pair(b, a));
            if (it == m2.end()) continue;
            for (const auto& [o, d] : it->second) out[o] = ((out[o] + c * d) % field + field) % field;
        }
        std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
        return out;
    };
    for (int a = 0; a < na; ++a)
        for (int b = 0; b < na; ++b)
            for (int c = 0; c < na; ++c) {
                if (arrows[size_t(a)].target != arrows[size_t(b)].source ||
                    arrows[size_t(b)].target != arrows[size_t(c)].source)
                    continue;
                auto ab = mul({{a, 1}}, b, true);
                auto left = mul(ab, c, true);
                auto bc = mul({{b, 1}}, c, true);
                auto right = mul(bc, a, false);
                if (left != right)
                    warn.push_back("m_2 is not associative on (" + arrows[size_t(a)].name + "," +
                                   arrows[size_t(b)].name + "," + arrows[size_t(c)].name + ")");
            }
    return warn;
}

Presentation Presentation::from_json(const nlohmann::json& j) {
    Presentation p;
    if (j.contains("field")) p.field = j.at("field").get<int>();
    std::map<std::string, int> vid, aid;
    for (const auto& v : j.at("vertices")) {
        const auto s = v.is_string() ? v.get<std::string>() : v.dump();
        if (!vid.emplace(s, int(p.vertices.size())).second)
            throw InvalidArgument("duplicate vertex " + s);
        p.vertices.push_back(s);
    }
    auto vertex = [&](const nlohmann::json& v) {
        const auto s = v.is_string() ? v.get<std::string>() : v.dump();
        auto it = vid.find(s);
        if (it == vid.end()) throw InvalidArgument("unknown vertex " + s);
        return it->second;
    };
    for (const auto& a : j.at("arrows")) {
        Arrow r{a.at("name").get<std::string>(), vertex(a.at("source")), vertex(a.at("target")),
                a.value("degree", 0)};
        if (!aid.emplace(r.name, int(p.arrows.size())).second)
            throw InvalidArgument("duplicate arrow " + r.name);
        p.arrows.push_back(r);
    }
    auto arrow = [&](const std::string& s) {
        auto it = aid.find(s);
        if (it == aid.end()) throw InvalidArgument("unknown arrow " + s);
        return it->second;
    };
    auto inputs = [&](const nlohmann::json& xs) {
        std::vector<int> in;
        for (const auto& x : xs) in.push_back(arrow(x.get<std::string>()));
        return in;
    };
    if (j.contains("products"))
        for (const auto& e : j.at("products")) {
            Product pr{inputs(e.at("inputs")), {}};
            for (const auto& [name, c] : e.at("output").items())
                pr.output.emplace_back(c.get<long long>(), arrow(name));
            p.products.push_back(std::move(pr));
        }
    // relations are products that vanish; they only need to be well formed
    if (j.contains("relations"))
        for (const auto& r : j.at("relations")) {
            auto in = inputs(r);
            for (const auto& pr : p.products)
                if (pr.inputs == in && !pr.output.empty())
                    throw InvalidArgument("relation contradicts a product entry");
        }
    return p;
}

nlohmann::json Presentation::to_json() const {
    nlohmann::json j;
    j["field"] = field;
    j["vertices"] = vertices;
    j["arrows"] = nlohmann::json::array();
    for (const auto& a : arrows)
        j["arrows"].push_back({{"name", a.name},
                               {"source", vertices[size_t(a.source)]},
                               {"target", vertices[size_t(a.target)]},
                               {"degree", a.degree}});
    j["products"] = nlohmann::json::array();
    for (const auto& p : products) {
        nlohmann::json in = nlohmann::json::array(), out = nlohmann::json::object();
        for (int i : p.inputs) in.push_back(arrows[size_t(i)].name);
        for (const auto& [c, o] : p.output) out[arrows[size_t(o)].name] = c;
        j["products"].push_back({{"inputs", in}, {"output", out}});
    }
    return j;
}

namespace {

template <int P>
struct Filtration {
    using S = Zp<P>;
    using M = Mat<S>;

    const Presentation& p;
    int d;

    explicit Filtration(const Presentation& pr) : p(pr), d(int(pr.arrows.size())) {}

    // row basis
    static M reduce(M rows) {
        if (rows.rows() == 0) return rows;
        const auto piv = rref(rows);
        return rows.topRows(Eigen::Index(piv.size()));
    }

    static M stack(const M& a, const M& b) {
        M out(a.rows() + b.rows(), std::max(a.cols(), b.cols()));
        if (a.rows()) out.topRows(a.rows()) = a;
        if (b.rows()) out.bottomRows(b.rows()) = b;
        return out;
    }

    // span of m_t(W_1, ..., W_t) over the entries of arity t
    M image(const std::vector<const Presentation::Product*>& es, const std::vector<const M*>& w) const {
        const Eigen::Index ne = Eigen::Index(es.size());
        M s = M::Ones(1, ne);
        for (size_t j = 0; j < w.size() && s.rows(); ++j) {
            const M& wj = *w[j];
            M next(s.rows() * wj.rows(), ne);
            Eigen::Index r = 0;
            for (Eigen::Index a = 0; a < s.rows(); ++a)
                for (Eigen::Index b = 0; b < wj.rows(); ++b, ++r)
                    for (Eigen::Index e = 0; e < ne; ++e)
                        next(r, e) = s(a, e) * wj(b, es[size_t(e)]->inputs[j]);
            s = reduce(next);
        }
        M out = M::Zero(s.rows(), d);
        for (Eigen::Index a = 0; a < s.rows(); ++a)
            for (Eigen::Index e = 0; e < ne; ++e) {
                if (s(a, e) == S(0)) continue;
                for (const auto& [c, o] : es[size_t(e)]->output) out(a, o) += s(a, e) * S(c);
            }
        return reduce(out);
    }

    std::vector<int> ll_infinity(int cap) const {
        std::map<int, std::vector<const Presentation::Product*>> by_arity;
        for (const auto& pr : p.products) by_arity[int(pr.inputs.size())].push_back(&pr);

        std::vector<M> ik{M(), reduce(M::Identity(d, d))};  // ik[k] = I^k
        std::vector<int> dims{int(ik[1].rows())};
        if (dims.back() == 0) return dims;
        for (int k = 2; k <= cap; ++k) {
            M span(0, d);
            for (const auto& [t, es] : by_arity) {
                // weights s_j in [1, k-1] with sum s_j - t >= k - 2; the
                // filtration is decreasing so the minimal sum suffices
                const int total = k + t - 2;
                std::vector<int> s(size_t(t), 1);
                auto rec = [&](auto&& self, int j, int left) -> void {
                    if (j == t - 1) {
                        if (left < 1 || left > k - 1) return;
                        s[size_t(j)] = left;
                        std::vector<const M*> w;
                        for (int x : s) {
                            if (ik[size_t(x)].rows() == 0) return;
                            w.push_back(&ik[size_t(x)]);
                        }
                        span = reduce(stack(span, image(es, w)));
                        return;
                    }
                    for (int v = 1; v <= k - 1 && v <= left - (t - 1 - j); ++v) {
                        if (ik[size_t(v)].rows() == 0) break;
                        s[size_t(j)] = v;
                        self(self, j + 1, left - v);
                    }
                };
                rec(rec, 0, total);
            }
            ik.push_back(span);
            dims.push_back(int(span.rows()));
            if (span.rows() == 0) return dims;
        }
        throw NonNilpotent("I^k is still nonzero at k = " + std::to_string(cap));
    }

    int loewy(int cap) const {
        std::map<std::pair<int, int>, const Presentation::Product*> m2;
        for (const auto& pr : p.products) m2[{pr.inputs[0], pr.inputs[1]}] = &pr;
        auto prod = [&](const M& x, const M& y) {
            // all products x_a * y_b of row vectors
            M out(0, d);
            for (Eigen::Index a = 0; a < x.rows(); ++a)
                for (Eigen::Index b = 0; b < y.rows(); ++b) {
                    M v = M::Zero(1, d);
                    for (const auto& [key, pr] : m2) {
                        const S c = x(a, key.first) * y(b, key.second);
                        if (c == S(0)) continue;
                        for (const auto& [k, o] : pr->output) v(0, o) += c * S(k);
                    }
                    out = stack(out, v);
                }
            return reduce(out);
        };
        const M one = reduce(M::Identity(d, d));
        if (one.rows() == 0) return 1;
        M cur = one;
        for (int m = 2; m <= cap; ++m) {
            cur = reduce(stack(prod(cur, one), prod(one, cur)));
            if (cur.rows() == 0) return m;
        }
        throw NonNilpotent("radical power still nonzero at " + std::to_string(cap));
    }
};

int cap_for(const Presentation& p) { return 4 * (int(p.arrows.size()) + 2); }

}  // namespace

std::vector<int> ll_infinity_filtration(const Presentation& p) {
    p.validate();
    return with_prime(p.field, [&](auto P) {
        return Filtration<decltype(P)::value>(p).ll_infinity(cap_for(p));
    });
}

int loewy_length_infinity(const Presentation& p) {
    const auto dims = ll_infinity_filtration(p);
    // dims[k-1] = dim I^k, the last entry is the first zero
    return dims.back() == 0 ? int(dims.size()) : kInf;
}

int loewy_length(const Presentation& p) {
    p.validate();
    if (!p.associative()) throw InvalidArgument("loewy_length needs an associative presentation");
    return with_prime(p.field, [&](auto P) {
        return Filtration<decltype(P)::value>(p).loewy(cap_for(p));
    });
}

DualBounds dual_gen_time_bounds(const Presentation& coh, const Presentation* minimal) {
    DualBounds b;
    b.lower = loewy_length(coh) - 1;
    if (!minimal || minimal->associative()) {
        b.formal = true;
        b.upper = minimal ? loewy_length(*minimal) - 1 : b.lower;
        if (minimal && b.upper != b.lower)
            throw InvalidArgument("formal minimal model disagrees with the cohomology algebra");
        return b;
    }
    auto shape = [](const Presentation& p) {
        std::multiset<std::tuple<int, int, int>> s;
        for (const auto& a : p.arrows) s.insert({a.source, a.target, a.degree});
        return std::make_pair(p.vertices.size(), s);
    };
    if (shape(coh) != shape(*minimal))
        throw InvalidArgument("minimal model and cohomology have different graded dimensions");
    b.upper = loewy_length_infinity(*minimal) - 1;
    if (b.lower > b.upper) throw ConsistencyError("Loewy lower bound exceeds the upper bound");
    return b;
}

Presentation path_algebra_an(int n) {
    if (n < 1) throw InvalidArgument("n >= 1");
    Presentation p;
    for (int v = 1; v <= n; ++v) p.vertices.push_back(std::to_string(v));
    std::map<std::pair<int, int>, int> id;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            id[{a, b}] = int(p.arrows.size());
            p.arrows.push_back({"p" + std::to_string(a) + "_" + std::to_string(b), a - 1, b - 1, 0});
        }
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c)
                p.products.push_back({{id[{a, b}], id[{b, c}]}, {{1, id[{a, c}]}}});
    return p;
}

Presentation koszul_dual_truncated_an(int n) {
    if (n < 2) throw InvalidArgument("n >= 2");
    Presentation p;
    for (int v = 0; v <= n; ++v) p.vertices.push_back(std::to_string(v));
    for (int i = 1; i <= n; ++i) p.arrows.push_back({"b" + std::to_string(i), i - 1, i, 1});
    p.arrows.push_back({"z", 0, n, 2});
    std::vector<int> all;
    for (int i = 0; i < n; ++i) all.push_back(i);
    p.products.push_back({all, {{1, n}}});
    return p;
}

Presentation koszul_dual_truncated_an_cohomology(int n) {
    auto p = koszul_dual_truncated_an(n);
    if (n > 2) p.products.clear();
    return p;
}

Presentation orthogonal_collection(int k) {
    Presentation p;
    for (int v = 0; v < k; ++v) p.vertices.push_back(std::to_string(v));
    return p;
}

Presentation monomial_algebra(int nv, const std::vector<std::pair<int, int>>& edges,
                              const std::vector<std::vector<int>>& zero_paths, int max_len) {
    Presentation p;
    for (int v = 0; v < nv; ++v) p.vertices.push_back(std::to_string(v));
    auto killed = [&](const std::vector<int>& path) {
        for (const auto& z : zero_paths)
            if (z.size() <= path.size())
                for (size_t s = 0; s + z.size() <= path.size(); ++s)
                    if (std::equal(z.begin(), z.end(), path.begin() + long(s))) return true;
        return false;
    };
    std::map<std::vector<int>, int> id;
    std::vector<std::vector<int>> frontier;
    for (int e = 0; e < int(edges.size()); ++e) frontier.push_back({e});
    for (int len = 1; len <= max_len && !frontier.empty(); ++len) {
        std::vector<std::vector<int>> next;
        for (const auto& path : frontier) {
            if (killed(path)) continue;
            std::string name = "e";
            for (int e : path) name += std::to_string(e) + ".";
            name.pop_back();
            id[path] = int(p.arrows.size());
            p.arrows.push_back({name, edges[size_t(path.front())].first,
                                edges[size_t(path.back())].second, 0});
            for (int e = 0; e < int(edges.size()); ++e)
                if (edges[size_t(e)].first == edges[size_t(path.back())].second) {
                    auto q = path;
                    q.push_back(e);
                    next.push_back(q);
                }
        }
        frontier = std::move(next);
    }
    if (!frontier.empty()) throw InvalidArgument("monomial algebra exceeds max_len");
    for (const auto& [a, ia] : id)
        for (const auto& [b, ib] : id) {
            if (edges[size_t(a.back())].second != edges[size_t(b.front())].first) continue;
            auto ab = a;
            ab.insert(ab.end(), b.begin(), b.end());
            auto it = id.find(ab);
            Presentation::Product pr{{ia, ib}, {}};
            if (it != id.end()) pr.output.push_back({1, it->second});
            if (!pr.output.empty()) p.products.push_back(pr);
        }
    return p;
}

bool hom_nonzero_any_degree(const CategoryModel& m, Indec x, Indec y) {
    for (const auto& f : m.morphisms_from(m.normalize(x)))
        if (f.dst.cls == y.cls) return true;
    return false;
}

bool is_exceptional(const CategoryModel& m, const std::vector<Indec>& c) {
    for (size_t a = 0; a < c.size(); ++a) {
        const Indec x = m.normalize(c[a]);
        for (const auto& f : m.morphisms_from(x))
            if (f.dst.cls == x.cls && f != m.identity(x)) return false;
        for (size_t b = a + 1; b < c.size(); ++b)
            if (hom_nonzero_any_degree(m, c[b], c[a]) || c[b].cls == c[a].cls) return false;
    }
    return true;
}

Indec left_twist(const CategoryModel& m, Indec e, Indec x) {
    std::vector<Morphism> ev;
    for (const auto& f : m.morphisms_to(m.normalize(x)))
        if (f.src.cls == e.cls) ev.push_back(f);
    if (ev.empty()) return m.normalize(x);
    if (ev.size() > 1) throw InvalidArgument("evaluation map has more than one component");
    const Object c = m.cone(ev.front());
    if (c.summands.size() != 1)
        throw ConsistencyError("left twist of " + m.class_name(x.cls) + " is not indecomposable");
    return c.summands.front();
}

Walk mutation_walk(const CategoryModel& m, const std::vector<Indec>& collection, int max_steps) {
    if (collection.empty()) throw InvalidArgument("empty collection");
    if (!is_exceptional(m, collection)) throw InvalidArgument("collection is not exceptional");
    const int n = int(collection.size());
    Walk w;
    w.component_max = 0;  // each component is D^b(k), generated in zero steps

    WalkStep cur;
    cur.label = "G";
    cur.components = collection;
    for (int i = 0; i < n; ++i) cur.origin.push_back(i);
    std::string applied;
    auto measure = [&](WalkStep& s) {
        GeneratorSet g;
        for (const auto& x : s.components) g.push_back(x.cls);
        s.tritime = tritime(m, g, max_steps);
    };
    measure(cur);
    w.steps.push_back(cur);

    for (int i = n - 1; i >= 1; --i) {
        // L_i in 1-based terms acts on position i-1
        const int p = i - 1;
        WalkStep next;
        for (int j = 0; j < p; ++j) {
            next.components.push_back(cur.components[size_t(j)]);
            next.origin.push_back(cur.origin[size_t(j)]);
        }
        for (int j = p + 1; j < n; ++j) {
            next.components.push_back(left_twist(m, cur.components[size_t(p)], cur.components[size_t(j)]));
            next.origin.push_back(cur.origin[size_t(j)]);
        }
        next.components.push_back(cur.components[size_t(p)]);
        next.origin.push_back(cur.origin[size_t(p)]);
        applied = "L" + std::to_string(i) + (applied.empty() ? "" : " ") + applied;
        next.label = applied;
        if (!is_exceptional(m, next.components))
            throw ConsistencyError("mutation left the exceptional collections");
        measure(next);
        w.steps.push_back(next);
        cur = std::move(next);
    }

    std::set<int> ts;
    for (size_t k = 0; k < w.steps.size(); ++k) {
        const int t = w.steps[k].tritime;
        if (t == kInf) throw ConsistencyError("mutated generator does not generate");
        ts.insert(t);
        if (k && t > w.steps[k - 1].tritime + w.component_max + 1)
            throw ConsistencyError("generation time jumped by more than M+1 at " + w.steps[k].label);
    }
    w.times.assign(ts.begin(), ts.end());
    w.gaps = gaps(w.times);
    for (const auto& g : w.gaps)
        if (g.length > w.component_max) throw ConsistencyError("walk times have a gap longer than M");
    return w;
}

}  // namespace orlov
