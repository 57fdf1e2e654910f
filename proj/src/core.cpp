#include "orlov/core.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>
#include <tuple>

namespace orlov {

std::vector<Morphism> CategoryModel::morphisms_between(Indec x, Indec y) const {
    x = normalize(x);
    y = normalize(y);
    std::vector<Morphism> out;
    for (const auto& f : morphisms_from(x))
        if (f.dst == y) out.push_back(f);
    return out;
}

Object CategoryModel::make_object(std::vector<Indec> xs) const {
    for (auto& x : xs) x = normalize(x);
    std::sort(xs.begin(), xs.end());
    return Object{std::move(xs)};
}

int LevelTable::max_finite() const {
    int best = 0;
    for (int l : level)
        if (l != kInf) best = std::max(best, l);
    return best;
}

bool LevelTable::all_reached() const {
    return std::none_of(level.begin(), level.end(), [](int l) { return l == kInf; });
}

void validate_generator(const CategoryModel& m, GeneratorSet& g) {
    if (g.empty()) throw InvalidArgument("generator must be nonempty");
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    for (int c : g)
        if (c < 0 || c >= m.class_count())
            throw InvalidArgument("unknown generator class " + std::to_string(c));
}

static bool contains(const GeneratorSet& g, int c) {
    return std::binary_search(g.begin(), g.end(), c);
}

bool CategoryModel::ghost(const Morphism& f, const GeneratorSet& g) const { return is_ghost(*this, g, f); }

bool is_ghost(const CategoryModel& m, const GeneratorSet& g, const Morphism& f) {
    for (const auto& h : m.morphisms_to(f.src)) {
        if (!contains(g, h.src.cls)) continue;
        if (m.compose(f, h)) return false;
    }
    return true;
}

int default_max_steps(const CategoryModel& m) { return 4 * m.class_count(); }

namespace {

// Subsets of xs with 1..k elements.
std::vector<std::vector<int>> small_subsets(const std::vector<int>& xs, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, size_t from) -> void {
        if (!cur.empty()) out.push_back(cur);
        if (int(cur.size()) == k) return;
        for (size_t i = from; i < xs.size(); ++i) {
            cur.push_back(xs[i]);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

void sum_step(const CategoryModel& m, const GeneratorSet& g, LevelTable& t, std::vector<int>& next,
              int r, bool keep_trace, int k) {
    std::vector<int> below;
    for (int c = 0; c < m.class_count(); ++c)
        if (t.level[size_t(c)] <= r) below.push_back(c);
    const auto lefts = small_subsets(g, k);
    for (const auto& right : small_subsets(below, k)) {
        int top = 0, from = right.front();
        for (int c : right)
            if (t.level[size_t(c)] > top) top = t.level[size_t(c)], from = c;
        if (top != r) continue;  // seen in an earlier round
        for (const auto& left : lefts) {
            for (int made : m.sum_cone_classes(left, right)) {
                if (next[size_t(made)] > r + 1) next[size_t(made)] = r + 1;
                if (keep_trace) t.trace.push_back({from, -1, made, r + 1});
            }
        }
    }
}

}  // namespace

LevelTable saturate_levels(const CategoryModel& m, GeneratorSet g, int max_steps, bool keep_trace,
                           int arity) {
    validate_generator(m, g);
    if (max_steps < 0) max_steps = default_max_steps(m);
    if (arity < 0) arity = m.default_sum_arity();
    if (arity > m.sum_cone_arity()) throw InvalidArgument("sum arity above the model's limit");
    LevelTable t;
    t.level.assign(size_t(m.class_count()), kInf);
    for (int c : g) t.level[size_t(c)] = 0;

    auto lower = [&](std::vector<int>& next, const Object& o, int from, int via, int r) {
        for (const auto& s : o.summands) {
            if (next[size_t(s.cls)] > r) next[size_t(s.cls)] = r;
            if (keep_trace) t.trace.push_back({from, via, s.cls, r});
        }
    };

    for (int r = 0; r < max_steps; ++r) {
        auto next = t.level;
        for (int c = 0; c < m.class_count(); ++c) {
            if (t.level[size_t(c)] != r) continue;
            const Indec x = m.normalize({c, 0});
            for (const auto& f : m.morphisms_from(x))
                if (t.level[size_t(f.dst.cls)] == 0) lower(next, m.cone(f), c, f.dst.cls, r + 1);
            for (const auto& f : m.morphisms_to(x))
                if (t.level[size_t(f.src.cls)] == 0) lower(next, m.cone(f), c, f.src.cls, r + 1);
        }
        if (arity > 0) sum_step(m, g, t, next, r, keep_trace, arity);
        t.rounds = r + 1;
        if (next == t.level) {
            t.stabilized = true;
            t.rounds = r;
            break;
        }
        t.level = std::move(next);
    }
    return t;
}

namespace {

class ChainSearch {
public:
    ChainSearch(const CategoryModel& m, const GeneratorSet& g) : m_(m), g_(g) {}

    // memo entries depend on the start through the composite
    void restart() {
        memo_.clear();
        on_stack_.clear();
    }

    int longest(const Morphism& comp) {
        auto key = std::make_tuple(comp.dst.cls, comp.dst.shift, comp.tag);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second.first;
        if (!on_stack_.insert(key).second)
            throw NonTerminatingChain("ghost chain revisits " + m_.class_name(comp.dst.cls) +
                                      " with a nonzero composite");
        int best = 0;
        std::optional<Morphism> arg;
        for (const auto& f : ghosts_from(comp.dst)) {
            auto next = m_.compose(f, comp);
            if (!next) continue;
            int l = 1 + longest(*next);
            if (l > best) {
                best = l;
                arg = f;
            }
        }
        on_stack_.erase(key);
        memo_[key] = {best, arg};
        return best;
    }

    GhostChain walk(Morphism comp) {
        GhostChain c;
        c.length = longest(comp);
        for (;;) {
            auto key = std::make_tuple(comp.dst.cls, comp.dst.shift, comp.tag);
            const auto& [len, arg] = memo_.at(key);
            if (!arg) break;
            c.maps.push_back(*arg);
            comp = *m_.compose(*arg, comp);
        }
        return c;
    }

private:
    const std::vector<Morphism>& ghosts_from(Indec x) {
        auto it = ghost_out_.find(x);
        if (it != ghost_out_.end()) return it->second;
        std::vector<Morphism> out;
        for (const auto& f : m_.morphisms_from(x))
            if (m_.ghost(f, g_)) out.push_back(f);
        return ghost_out_.emplace(x, std::move(out)).first->second;
    }

    using Key = std::tuple<int, int, int>;
    const CategoryModel& m_;
    const GeneratorSet& g_;
    std::map<Key, std::pair<int, std::optional<Morphism>>> memo_;
    std::set<Key> on_stack_;
    std::map<Indec, std::vector<Morphism>> ghost_out_;
};

}  // namespace

GhostChain ghost_chain(const CategoryModel& m, GeneratorSet g, Indec start) {
    validate_generator(m, g);
    if (start.cls < 0 || start.cls >= m.class_count()) throw InvalidArgument("unknown start class");
    start = m.normalize(start);
    ChainSearch s(m, g);
    return s.walk(m.identity(start));
}

int ghost_chain_longest(const CategoryModel& m, GeneratorSet g, Indec start) {
    return ghost_chain(m, std::move(g), start).length;
}

TritimeResult tritime_detail(const CategoryModel& m, GeneratorSet g, int max_steps) {
    validate_generator(m, g);
    if (!m.exact_for_levels())
        throw InvalidArgument(m.name() + " does not declare exact levels");
    TritimeResult r;
    r.ghost.assign(size_t(m.class_count()), kInf);
    bool diverged = false;
    ChainSearch s(m, g);
    for (int c = 0; c < m.class_count(); ++c) {
        try {
            s.restart();
            r.ghost[size_t(c)] = s.longest(m.identity(m.normalize({c, 0})));
        } catch (const NonTerminatingChain&) {
            diverged = true;
        }
    }
    auto mismatch = [&]() -> int {
        for (int c = 0; c < m.class_count(); ++c) {
            const int up = r.saturation.level[size_t(c)];
            if (up != kInf && r.ghost[size_t(c)] != up) return c;
        }
        return -1;
    };
    r.arity = m.default_sum_arity();
    r.saturation = saturate_levels(m, g, max_steps, false, r.arity);
    int bad = mismatch();
    while (bad >= 0 && r.arity < m.sum_cone_arity()) {
        r.saturation = saturate_levels(m, g, max_steps, false, ++r.arity);
        bad = mismatch();
    }
    if (bad >= 0) {
        const int lo = r.ghost[size_t(bad)];
        throw ConsistencyError("sandwich mismatch at " + m.class_name(bad) + ": ghost " +
                               (lo == kInf ? std::string("inf") : std::to_string(lo)) +
                               ", saturation " + std::to_string(r.saturation.level[size_t(bad)]));
    }
    if (diverged || !r.saturation.all_reached()) {
        r.value = kInf;
    } else {
        r.value = r.saturation.max_finite();
    }
    return r;
}

int tritime(const CategoryModel& m, GeneratorSet g, int max_steps) {
    return tritime_detail(m, std::move(g), max_steps).value;
}

std::vector<Gap> gaps(const std::vector<int>& times) {
    std::vector<int> t = times;
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    std::vector<Gap> out;
    for (size_t i = 1; i < t.size(); ++i)
        if (t[i] - t[i - 1] > 1) out.push_back({t[i - 1], t[i] - t[i - 1] - 1});
    return out;
}

std::vector<GeneratorSet> all_class_subsets(const CategoryModel& m) {
    const int k = m.class_count();
    if (k > 20) throw InvalidArgument("too many classes to enumerate subsets");
    std::vector<GeneratorSet> out;
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        GeneratorSet g;
        for (int c = 0; c < k; ++c)
            if (mask & (1u << c)) g.push_back(c);
        out.push_back(std::move(g));
    }
    return out;
}

SpectrumReport orlov_spectrum(const CategoryModel& m, const std::vector<GeneratorSet>& candidates,
                              int jobs, int max_steps) {
    if (candidates.empty()) throw InvalidArgument("empty candidate family");
    std::vector<int> val(candidates.size(), kInf);
    std::atomic<size_t> next{0};
    std::exception_ptr err;
    std::atomic<bool> failed{false};
    auto work = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= candidates.size() || failed) return;
            try {
                val[i] = tritime(m, candidates[i], max_steps);
            } catch (...) {
                if (!failed.exchange(true)) err = std::current_exception();
                return;
            }
        }
    };
    jobs = std::max(1, jobs);
    if (jobs == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    if (err) std::rethrow_exception(err);

    SpectrumReport rep;
    rep.generator_count = int(candidates.size());
    std::set<int> ts;
    for (size_t i = 0; i < candidates.size(); ++i) {
        GeneratorSet g = candidates[i];
        std::sort(g.begin(), g.end());
        g.erase(std::unique(g.begin(), g.end()), g.end());
        rep.per_generator.emplace_back(std::move(g), val[i]);
        if (val[i] != kInf) ts.insert(val[i]);
    }
    rep.times.assign(ts.begin(), ts.end());
    rep.gaps = gaps(rep.times);
    if (!rep.times.empty()) {
        rep.rdim = rep.times.front();
        rep.udim = rep.times.back();
    }
    return rep;
}

SpectrumReport orlov_spectrum(const CategoryModel& m, int jobs, int max_steps) {
    return orlov_spectrum(m, all_class_subsets(m), jobs, max_steps);
}

}  // namespace orlov
