// One PASS/FAIL line per acceptance criterion; exit status is the number of failures.

#include "oracle/agreement.hpp"
#include "orlov/an_sing.hpp"
#include "orlov/bounds.hpp"
#include "orlov/braid.hpp"
#include "orlov/exc.hpp"
#include "orlov/quiver.hpp"
#include "orlov/report.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace orlov;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;
    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

Outcome spectrum_regression() {
    Outcome o;
    const auto t0 = Clock::now();
    for (int n = 2; n <= 24; ++n) {
        const auto s = orlov_spectrum(AnSing(n), 1);
        const auto cf = an_sing_closed_form_spectrum(n);
        if (std::set<int>(s.times.begin(), s.times.end()) != cf) o.fail("n=" + std::to_string(n));
    }
    const double dt = seconds_since(t0);
    if (dt >= 60) o.fail("took " + std::to_string(dt) + " s");
    if (o.pass) o.detail = "n=2..24 in " + std::to_string(dt) + " s single-threaded";
    return o;
}

Outcome gap_existence() {
    Outcome o;
    const auto s8 = orlov_spectrum(AnSing(8));
    const auto s12 = orlov_spectrum(AnSing(12));
    if (s8.times != std::vector<int>{0, 1, 3} || s8.gaps != std::vector<Gap>{{1, 1}}) o.fail("n=8");
    if (s12.times != std::vector<int>{0, 1, 2, 5} || s12.gaps != std::vector<Gap>{{2, 2}}) o.fail("n=12");
    if (o.pass) o.detail = "n=8 {0,1,3} gap (1,1); n=12 {0,1,2,5} gap (2,2)";
    return o;
}

Outcome sandwich() {
    Outcome o;
    long checked = 0;
    for (int n = 2; n <= 16; ++n) {
        const AnSing a(n);
        for (const auto& g : all_class_subsets(a)) {
            const auto sat = saturate_levels(a, g);
            int ghost_max = 0;
            for (int c = 0; c < a.class_count(); ++c)
                ghost_max = std::max(ghost_max, ghost_chain_longest(a, g, {c, 0}));
            if (!sat.all_reached() || ghost_max != sat.max_finite())
                o.fail("n=" + std::to_string(n) + " generator of size " + std::to_string(g.size()));
            ++checked;
        }
    }
    long quiver_checked = 0;
    for (int n = 1; n <= 4; ++n) {
        const Quiver q(n);
        for (const auto& g : all_class_subsets(q)) {
            const auto r = tritime_detail(q, g);
            if (r.ghost != r.saturation.level) o.fail("quiver n=" + std::to_string(n));
            ++quiver_checked;
        }
    }
    if (o.pass)
        o.detail = std::to_string(checked) + " an_sing generators n=2..16, " + std::to_string(quiver_checked) +
                   " quiver generators n=1..4";
    return o;
}

Outcome oracle_agreement() {
    Outcome o;
    std::vector<std::string> bad;
    auto add = [&](std::vector<std::string> v) { bad.insert(bad.end(), v.begin(), v.end()); };
    for (int n = 2; n <= 6; ++n) {
        add(oracle::an_sing_mismatches<2>(n));
        add(oracle::an_sing_mismatches<3>(n));
        add(oracle::an_sing_mismatches<5>(n));
    }
    for (int n = 1; n <= 5; ++n) {
        add(oracle::quiver_mismatches<2>(n));
        add(oracle::quiver_mismatches<3>(n));
        add(oracle::quiver_mismatches<5>(n));
    }
    if (!bad.empty()) o.fail(std::to_string(bad.size()) + " mismatches, first: " + bad.front());
    else o.detail = "an_sing n<=6, quiver n<=5, p in {2,3,5}";
    return o;
}

Outcome quiver_spectrum() {
    Outcome o;
    const auto t0 = Clock::now();
    for (int n = 2; n <= 4; ++n) {
        const auto s = orlov_spectrum(Quiver(n), 1);
        std::vector<int> want;
        for (int t = 0; t < n; ++t) want.push_back(t);
        if (s.times != want) o.fail("spectrum n=" + std::to_string(n));
    }
    const double dt = seconds_since(t0);
    for (int n = 2; n <= 5; ++n) {
        const Quiver q(n);
        GeneratorSet p, s;
        for (int i = 1; i <= n; ++i) {
            p.push_back(q.projective(i));
            s.push_back(q.simple(i));
        }
        std::sort(p.begin(), p.end());
        std::sort(s.begin(), s.end());
        if (tritime(q, p) != 1) o.fail("projectives n=" + std::to_string(n));
        if (tritime(q, s) != n - 1) o.fail("simples n=" + std::to_string(n));
    }
    if (dt >= 600) o.fail("spectrum took " + std::to_string(dt) + " s");
    if (o.pass) o.detail = "spectra n=2..4 in " + std::to_string(dt) + " s; P and S for n=2..5";
    return o;
}

Outcome loewy() {
    Outcome o;
    for (int n = 1; n <= 10; ++n)
        if (loewy_length_end_algebra(n) != n) o.fail("end algebra n=" + std::to_string(n));
    for (int n = 2; n <= 8; ++n) {
        const auto p = koszul_dual_truncated_an(n);
        if (loewy_length_infinity(p) != 3) o.fail("LL_inf n=" + std::to_string(n));
        const auto coh = koszul_dual_truncated_an_cohomology(n);
        if (dual_gen_time_bounds(coh, &p).upper != 2) o.fail("dual upper n=" + std::to_string(n));
    }
    if (o.pass) o.detail = "LL(End)=n for n<=10; LL_inf=3 and upper bound 2 for n=2..8";
    return o;
}

Outcome mutation_gaps() {
    Outcome o;
    std::ostringstream d;
    for (int n = 2; n <= 4; ++n) {
        const Quiver q(n);
        std::vector<Indec> c;
        for (int i = n; i >= 1; --i) c.push_back({q.projective(i), 0});
        Walk w;
        try {
            w = mutation_walk(q, c);
        } catch (const std::exception& e) {
            o.fail("n=" + std::to_string(n) + ": " + e.what());
            continue;
        }
        for (size_t k = 1; k < w.steps.size(); ++k)
            if (w.steps[k].tritime - w.steps[k - 1].tritime > w.component_max + 1) o.fail("increment");
        for (const auto& g : w.gaps)
            if (g.length > w.component_max) o.fail("gap");
        d << "n=" << n << " times";
        for (const auto& s : w.steps) d << " " << s.tritime;
        d << "; ";
    }
    if (o.pass) o.detail = d.str() + "M=0";
    return o;
}

Outcome braid_bounds() {
    Outcome o;
    const auto t0 = Clock::now();
    for (int g = 1; g <= 50; ++g) {
        const auto w = matsumoto_identity_word(g);
        if (w.size() != size_t(2 * g * (4 * g + 2))) o.fail("length g=" + std::to_string(g));
        if (generation_bound(w, SphericalConfig::a_m(2 * g)) != 8 * g + 3) o.fail("bound g=" + std::to_string(g));
    }
    std::mt19937 rng(8);
    int words = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const int m = 1 + int(rng() % 6);
        SphericalConfig c(m);
        for (int a = 1; a <= m; ++a)
            for (int b = a + 1; b <= m; ++b)
                if (rng() % 2) c.set_orthogonal(a, b);
        TwistWord w;
        const int len = int(rng() % 11);
        for (int k = 0; k < len; ++k) w.push_back(1 + int(rng() % unsigned(m)));
        int best = len;
        for (unsigned mask = 0; len > 0 && mask < (1u << (len - 1)); ++mask) {
            int blocks = 0, lo = 0;
            bool ok = true;
            for (int p = 1; p <= len && ok; ++p)
                if (p == len || (mask >> (p - 1) & 1u)) {
                    for (int a = lo; a < p && ok; ++a)
                        for (int b = a + 1; b < p && ok; ++b) ok = c.orthogonal(w[size_t(a)], w[size_t(b)]);
                    ++blocks;
                    lo = p;
                }
            if (ok) best = std::min(best, blocks);
        }
        if (partition_intervals(w, c) != best) o.fail("greedy not optimal");
        ++words;
    }
    const double dt = seconds_since(t0);
    if (dt >= 5) o.fail("took " + std::to_string(dt) + " s");
    if (o.pass) o.detail = "8g+3 for g=1..50, " + std::to_string(words) + " random words, " + std::to_string(dt) + " s";
    return o;
}

Outcome bound_calculators() {
    Outcome o;
    if (graded_gen_bound(4, 5) != 159) o.fail("quintic");
    if (graded_gen_bound(2, 3) != 23) o.fail("cubic curve");
    if (fukaya_surface_bound(2) != 29) o.fail("genus 2 surface");
    for (long long n = 1; n <= 20; ++n)
        if (graded_gen_bound(n, n + 1) != 2 * n * n * (n + 1) - 1) o.fail("n=" + std::to_string(n));
    if (o.pass) o.detail = "159, 23, 29 and the n<=20 identity";
    return o;
}

Outcome scope() {
    Outcome o;
    for (int g = 1; g <= 10; ++g)
        if (genus_bound(g).lower != 4 * g) o.fail("lower constant");
    std::ostringstream out, err;
    run_cli({"braid-bound", "--genus", "3", "--no-timing"}, out, err);
    const auto j = nlohmann::ordered_json::parse(out.str());
    const auto label = j["bounds"].value("lower_provenance", std::string());
    if (j["bounds"]["lower"] != 12 || label.find("recorded constant") == std::string::npos)
        o.fail("4g is not labeled as a recorded constant");
    if (o.pass) o.detail = "4g surfaced only as a labeled constant; geometric spectra not computed";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"A_{n-1} spectrum regression", spectrum_regression},
        {"gap existence", gap_existence},
        {"sandwich exactness", sandwich},
        {"oracle agreement", oracle_agreement},
        {"quiver spectrum", quiver_spectrum},
        {"Loewy lengths", loewy},
        {"mutation-walk gap bound", mutation_gaps},
        {"braid bounds", braid_bounds},
        {"bound calculators", bound_calculators},
        {"out-of-scope results", scope},
    };
    int failures = 0;
    for (size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        if (!o.pass) ++failures;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << k + 1 << ": " << criteria[k].first << " ("
                  << o.detail << ")" << std::endl;
    }
    return failures;
}
