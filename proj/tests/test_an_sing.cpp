#include <doctest.h>

#include "oracle/agreement.hpp"
#include "orlov/an_sing.hpp"

#include <set>

using namespace orlov;

TEST_CASE("hom basis sizes and bounds") {
    const AnSing a(8);
    CHECK(a.hom_basis(1, 1).size() == 1);
    CHECK(a.hom_basis(4, 4).size() == 4);
    CHECK(a.hom_basis(2, 5).size() == 2);
    for (const auto& f : a.hom_basis(3, 6)) CHECK(a.legal(f));
    CHECK_FALSE(a.legal({1, 1, 1}));
    CHECK_THROWS_AS(a.hom_basis(0, 1), InvalidArgument);
    CHECK_THROWS_AS(AnSing(1), InvalidArgument);
}

TEST_CASE("cone examples") {
    const AnSing a(8);
    auto c = a.cone_modules({4, 4, 1});
    std::sort(c.begin(), c.end());
    CHECK(c == std::vector<int>{1, 7});
    CHECK(a.cone_modules({3, 3, 0}).empty());
    // V_7 is V_1[1]
    CHECK(a.indec_of_module(7) == Indec{0, 1});
}

TEST_CASE("small tables") {
    const AnSing a5(5);
    CHECK(a5.hom_basis(2, 2) == std::vector<AnSing::Alpha>{{2, 2, 0}, {2, 2, 1}});
    CHECK(a5.hom_basis(1, 4) == std::vector<AnSing::Alpha>{{1, 4, 3}});
    CHECK(AnSing(2).hom_basis(1, 1).size() == 1);
    using A = AnSing::Alpha;
    CHECK_FALSE(a5.compose(A{2, 2, 1}, A{2, 2, 1}));
    CHECK(a5.compose(A{1, 2, 1}, A{1, 1, 0}) == A{1, 2, 1});
    CHECK(AnSing(6).compose(A{3, 3, 1}, A{3, 3, 1}) == A{3, 3, 2});
    CHECK_THROWS_AS(a5.compose(A{2, 2, 0}, A{1, 1, 0}), InvalidArgument);
    auto c = a5.cone_modules({2, 2, 1});
    std::sort(c.begin(), c.end());
    CHECK(c == std::vector<int>{1, 4});
    CHECK(a5.cone_modules({2, 2, 0}).empty());
}

TEST_CASE("ghost examples") {
    CHECK(AnSing(8).is_ghost({4, 4, 1}, {0}));
    CHECK_FALSE(AnSing(5).is_ghost({2, 2, 1}, {1}));
}

TEST_CASE("ghost shortcut matches the definition") {
    for (int n = 2; n <= 9; ++n) {
        const AnSing a(n);
        for (const auto& g : all_class_subsets(a))
            for (int i = 1; i < n; ++i)
                for (int j = 1; j < n; ++j)
                    for (const auto& f : a.hom_basis(i, j)) {
                        const auto m = a.lift(f);
                        CHECK(a.ghost(m, g) == is_ghost(a, g, m));
                        CHECK(a.ghost(m, g) == a.is_ghost(f, g));
                    }
    }
}

TEST_CASE("composition is associative") {
    for (int n = 2; n <= 8; ++n) {
        const AnSing a(n);
        for (int i = 1; i < n; ++i)
            for (int j = 1; j < n; ++j)
                for (int k = 1; k < n; ++k)
                    for (int l = 1; l < n; ++l)
                        for (const auto& f : a.hom_basis(i, j))
                            for (const auto& g : a.hom_basis(j, k))
                                for (const auto& h : a.hom_basis(k, l)) {
                                    auto gf = a.compose(g, f);
                                    auto hg = a.compose(h, g);
                                    std::optional<AnSing::Alpha> left, right;
                                    if (gf) left = a.compose(h, *gf);
                                    if (hg) right = a.compose(*hg, f);
                                    CHECK(left == right);
                                }
    }
}

TEST_CASE("shift coherence") {
    for (int n = 2; n <= 12; ++n) {
        const AnSing a(n);
        for (int i = 1; i < n; ++i) {
            const Indec x = a.indec_of_module(i);
            CHECK(a.module_of(x) == i);
            CHECK(a.normalize(a.normalize(x)) == a.normalize(x));
            CHECK(a.module_of(a.shift(x, 1)) == n - i);
            CHECK(a.shift(x, 2) == x);
        }
        for (int c = 0; c < a.class_count(); ++c)
            for (int s = -3; s <= 3; ++s) CHECK(a.normalize({c, s}) == a.normalize({c, s + 2}));
        for (int i = 1; i < n; ++i)
            for (int j = 1; j < n; ++j)
                CHECK(a.hom_basis(i, j).size() == a.hom_basis(n - j, n - i).size());
    }
}

TEST_CASE("tables agree with the module oracle") {
    for (int n = 2; n <= 6; ++n) {
        for (const auto& m : oracle::an_sing_mismatches<2>(n)) FAIL_CHECK(m);
        for (const auto& m : oracle::an_sing_mismatches<3>(n)) FAIL_CHECK(m);
        for (const auto& m : oracle::an_sing_mismatches<5>(n)) FAIL_CHECK(m);
    }
}

TEST_CASE("saturation examples") {
    const AnSing a5(5);
    auto t = saturate_levels(a5, {0});
    CHECK(t.level == std::vector<int>{0, 1});
    CHECK(t.stabilized);

    const AnSing a12(12);
    CHECK(saturate_levels(a12, {0}).level[5] == 5);
    CHECK(ghost_chain_longest(a12, {0}, {5, 0}) == 5);
    CHECK(tritime(AnSing(8), {0}) == 3);
    CHECK(tritime(AnSing(8), {0, 1, 2, 3}) == 0);
}

TEST_CASE("spectrum and per-generator closed forms") {
    for (int n = 2; n <= 24; ++n) {
        const AnSing a(n);
        const auto s = orlov_spectrum(a);
        const auto cf = an_sing_closed_form_spectrum(n);
        CHECK_MESSAGE(std::set<int>(s.times.begin(), s.times.end()) == cf, "n=" << n);
        for (const auto& [g, t] : s.per_generator)
            CHECK_MESSAGE(t == an_sing_closed_form_tritime(n, g), "n=" << n);
    }
}

TEST_CASE("gap examples") {
    auto s8 = orlov_spectrum(AnSing(8));
    CHECK(s8.times == std::vector<int>{0, 1, 3});
    CHECK(s8.gaps == std::vector<Gap>{{1, 1}});
    auto s12 = orlov_spectrum(AnSing(12));
    CHECK(s12.times == std::vector<int>{0, 1, 2, 5});
    CHECK(s12.gaps == std::vector<Gap>{{2, 2}});
}
