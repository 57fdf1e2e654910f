#pragma once

#include "orlov/core.hpp"

#include <set>
#include <vector>

namespace orlov {

// Stable category of k[u]/(u^n). The module V_i = k[u]/(u^i), 1 <= i < n, and
// V_i[1] = V_{n-i}. Classes are shift orbits {V_c, V_{n-c}} with c <= n/2;
// class id is c-1, shift 0 is V_c and shift 1 is V_{n-c}.
class AnSing final : public CategoryModel {
public:
    struct Alpha {
        int i, j, l;  // V_i -> V_j, 1 -> u^l
        bool operator==(const Alpha&) const = default;
    };

    explicit AnSing(int n);

    int n() const { return n_; }
    int m() const { return n_ / 2; }

    std::vector<Alpha> hom_basis(int i, int j) const;
    bool legal(const Alpha& a) const;
    std::optional<Alpha> compose(const Alpha& g, const Alpha& f) const;
    // Module indices of the cone, V_0 dropped.
    std::vector<int> cone_modules(const Alpha& f) const;
    bool is_ghost(const Alpha& f, const GeneratorSet& g) const;

    int module_of(Indec x) const;
    Indec indec_of_module(int i) const;
    Morphism lift(const Alpha& a) const;
    Alpha alpha_of(const Morphism& f) const;

    std::string name() const override;
    int class_count() const override { return m(); }
    std::string class_name(int c) const override;
    Indec normalize(Indec x) const override;
    Morphism identity(Indec x) const override;
    std::vector<Morphism> morphisms_from(Indec x) const override;
    std::vector<Morphism> morphisms_to(Indec y) const override;
    std::optional<Morphism> compose(const Morphism& g, const Morphism& f) const override;
    Object cone(const Morphism& f) const override;
    bool ghost(const Morphism& f, const GeneratorSet& g) const override;
    bool exact_for_levels() const override { return true; }

private:
    void check(int i) const;
    int n_;
};

std::set<int> an_sing_closed_form_spectrum(int n);
// tritime of a generator set of classes, read off the largest index.
int an_sing_closed_form_tritime(int n, const GeneratorSet& g);

}  // namespace orlov
