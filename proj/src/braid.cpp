#include "orlov/braid.hpp"

#include "orlov/core.hpp"

#include <algorithm>
#include <numeric>

namespace orlov {

SphericalConfig::SphericalConfig(int m) : m_(m) {
    if (m < 1) throw InvalidArgument("need at least one spherical object");
    orth_.assign(size_t(m + 1), std::vector<char>(size_t(m + 1), 0));
    rebuild();
}

SphericalConfig SphericalConfig::a_m(int m) {
    SphericalConfig c(m);
    for (int a = 1; a <= m; ++a)
        for (int b = a + 2; b <= m; ++b) c.set_orthogonal(a, b);
    return c;
}

void SphericalConfig::set_orthogonal(int a, int b, bool v) {
    if (a < 1 || a > m_ || b < 1 || b > m_) throw InvalidArgument("letter out of range");
    if (a == b && v) throw InvalidArgument("orthogonality is irreflexive");
    orth_[size_t(a)][size_t(b)] = orth_[size_t(b)][size_t(a)] = v;
    rebuild();
}

bool SphericalConfig::orthogonal(int a, int b) const {
    return orth_.at(size_t(a)).at(size_t(b)) != 0;
}

void SphericalConfig::rebuild() {
    dep_.assign(size_t(m_ + 1), {});
    for (int a = 1; a <= m_; ++a)
        for (int b = 1; b <= m_; ++b)
            if (!orth_[size_t(a)][size_t(b)]) dep_[size_t(a)].push_back(b);
}

TwistWord matsumoto_identity_word(int g) {
    if (g < 1) throw InvalidArgument("genus must be >= 1");
    TwistWord w;
    w.reserve(size_t(2 * g * (4 * g + 2)));
    for (int k = 0; k < 4 * g + 2; ++k)
        for (int a = 1; a <= 2 * g; ++a) w.push_back(a);
    return w;
}

static void check_word(const TwistWord& w, const SphericalConfig& c) {
    for (int a : w)
        if (a < 1 || a > c.m()) throw InvalidArgument("letter " + std::to_string(a) + " out of range");
}

int partition_intervals(const TwistWord& w, const SphericalConfig& c) {
    check_word(w, c);
    int blocks = 0;
    std::vector<int> cur;
    for (int a : w) {
        bool ok = !cur.empty();
        for (int b : cur)
            if (!c.orthogonal(a, b)) {
                ok = false;
                break;
            }
        if (ok) {
            cur.push_back(a);
        } else {
            ++blocks;
            cur.assign(1, a);
        }
    }
    return blocks;
}

std::vector<int> foata_levels(const TwistWord& w, const SphericalConfig& c) {
    check_word(w, c);
    std::vector<int> last(size_t(c.m() + 1), 0), lv;
    lv.reserve(w.size());
    for (int a : w) {
        int l = 0;
        for (int b : c.dependent(a)) l = std::max(l, last[size_t(b)]);
        last[size_t(a)] = l + 1;
        lv.push_back(l + 1);
    }
    return lv;
}

TwistWord foata_normal_form(const TwistWord& w, const SphericalConfig& c) {
    const auto lv = foata_levels(w, c);
    std::vector<size_t> idx(w.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        return std::make_pair(lv[a], w[a]) < std::make_pair(lv[b], w[b]);
    });
    TwistWord out;
    out.reserve(w.size());
    for (size_t i : idx) out.push_back(w[i]);
    return out;
}

namespace {

// Cyclic shifts combined with commutations are retimings of the periodic
// dependence graph: occurrence i is taken from period x_i <= 0.
class Retimer {
public:
    Retimer(const TwistWord& w, const SphericalConfig& c) : w_(w), c_(c), n_(int(w.size())) {}

    std::vector<int> window(const std::vector<int>& x) const {
        std::vector<int> order(static_cast<size_t>(n_));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return x[size_t(a)] < x[size_t(b)]; });
        return order;
    }

    TwistWord word(const std::vector<int>& order) const {
        TwistWord out;
        out.reserve(order.size());
        for (int i : order) out.push_back(w_[size_t(i)]);
        return out;
    }

    // Every consecutive dependent pair of the cyclic word, as (i, j, wraps).
    bool legal(const std::vector<int>& x) const {
        std::vector<int> first(size_t(c_.m() + 1), -1), next(size_t(c_.m() + 1), -1);
        for (int i = 0; i < n_; ++i)
            if (first[size_t(w_[size_t(i)])] < 0) first[size_t(w_[size_t(i)])] = i;
        // scan backwards so next[b] is the next occurrence of b after i
        for (int i = n_ - 1; i >= 0; --i) {
            for (int b : c_.dependent(w_[size_t(i)])) {
                int j = next[size_t(b)];
                if (j >= 0) {
                    if (x[size_t(j)] > x[size_t(i)]) return false;
                } else {
                    j = first[size_t(b)];
                    if (j >= 0 && x[size_t(j)] > x[size_t(i)] + 1) return false;
                }
            }
            next[size_t(w_[size_t(i)])] = i;
        }
        return true;
    }

    // Leiserson-Saxe style relaxation.
    bool feasible(int cap, std::vector<int>& x) const {
        x.assign(size_t(n_), 0);
        for (int it = 0; it <= n_; ++it) {
            const auto order = window(x);
            const auto lv = foata_levels(word(order), c_);
            bool ok = true;
            for (int p = 0; p < n_; ++p)
                if (lv[size_t(p)] > cap) {
                    ok = false;
                    --x[size_t(order[size_t(p)])];
                }
            if (ok) return legal(x);
        }
        return false;
    }

private:
    const TwistWord& w_;
    const SphericalConfig& c_;
    int n_;
};

int chain_lower_bound(const TwistWord& w, const SphericalConfig& c) {
    std::vector<int> cnt(size_t(c.m() + 1), 0);
    for (int a : w) ++cnt[size_t(a)];
    int lb = 0;
    for (int a = 1; a <= c.m(); ++a)
        for (int b : c.dependent(a)) lb = std::max(lb, cnt[size_t(a)] + (a == b ? 0 : cnt[size_t(b)]));
    return lb;
}

RewriteResult rotate_and_commute(const TwistWord& w, const SphericalConfig& c, bool rotations) {
    RewriteResult r;
    r.word = foata_normal_form(w, c);
    r.blocks = partition_intervals(r.word, c);
    r.evaluations = 1;
    if (!rotations || w.empty()) {
        r.lower_bound = r.blocks;  // commutation alone: Foata height is optimal
        return r;
    }
    r.lower_bound = chain_lower_bound(w, c);
    Retimer rt(w, c);
    std::vector<int> x, best;
    int lo = r.lower_bound, hi = r.blocks;
    // try the lower bound first; it is usually attained
    if (lo < hi && rt.feasible(lo, x)) {
        hi = lo;
        best = x;
    }
    while (lo < hi) {
        const int mid = lo + (hi - lo) / 2;
        ++r.evaluations;
        if (rt.feasible(mid, x)) {
            hi = mid;
            best = x;
        } else {
            lo = mid + 1;
        }
    }
    if (!best.empty()) {
        TwistWord cand = foata_normal_form(rt.word(rt.window(best)), c);
        const int b = partition_intervals(cand, c);
        if (b < r.blocks) {
            r.word = std::move(cand);
            r.blocks = b;
        }
    }
    return r;
}

}  // namespace

RewriteResult commutation_rewrite_detail(const TwistWord& w, const SphericalConfig& c,
                                         const RewriteOptions& opt) {
    if (opt.budget < 0) throw InvalidArgument("budget must be >= 0");
    check_word(w, c);
    RewriteResult best = rotate_and_commute(w, c, opt.rotations);
    if (!opt.braid_moves) return best;

    long evals = best.evaluations;
    bool improved = true;
    while (improved && evals < opt.budget && best.blocks > best.lower_bound) {
        improved = false;
        const TwistWord base = best.word;
        for (size_t p = 0; p + 2 < base.size() && evals < opt.budget; ++p) {
            const int a = base[p], b = base[p + 1];
            if (base[p + 2] != a || a == b || c.orthogonal(a, b)) continue;
            TwistWord cand = base;
            cand[p] = cand[p + 2] = b;
            cand[p + 1] = a;
            auto r = rotate_and_commute(cand, c, opt.rotations);
            evals += r.evaluations;
            if (r.blocks < best.blocks) {
                best = std::move(r);
                improved = true;
                break;
            }
        }
    }
    best.evaluations = evals;
    return best;
}

TwistWord commutation_rewrite(const TwistWord& w, const SphericalConfig& c, const RewriteOptions& opt) {
    return commutation_rewrite_detail(w, c, opt).word;
}

int generation_bound(const TwistWord& w, const SphericalConfig& c, const RewriteOptions& opt) {
    if (w.empty()) throw InvalidArgument("empty word gives no bound");
    return partition_intervals(commutation_rewrite(w, c, opt), c) - 1;
}

GenusBound genus_bound(int g) {
    GenusBound b;
    b.lower = 4 * g;
    b.upper = generation_bound(matsumoto_identity_word(g), SphericalConfig::a_m(2 * g));
    if (b.upper != 8 * g + 3)
        throw ConsistencyError("recomputed upper bound " + std::to_string(b.upper) + " differs from 8g+3");
    return b;
}

}  // namespace orlov
