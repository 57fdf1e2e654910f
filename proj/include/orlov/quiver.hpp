#pragma once

#include "orlov/core.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <optional>
#include <vector>

namespace orlov {

// D^b(mod kQ) for 1 -> 2 -> ... -> n. Indecomposables are interval modules
// M(i,j) supported on i..j, shifted by any integer. P_i = M(i,n), S_i = M(i,i).
// Morphism tag is the degree (0 or 1); a degree-1 map X -> Y[1] is an element
// of Ext^1(X, Y).
class Quiver final : public CategoryModel {
public:
    struct Interval {
        int i, j;
        auto operator<=>(const Interval&) const = default;
    };

    // sum_arity bounds the summands on each side of the maps whose cones the
    // level saturation uses beyond single basis maps.
    explicit Quiver(int n, int sum_arity = 3);

    int n() const { return n_; }
    int class_of(Interval v) const;
    Interval interval(int cls) const { return ivs_.at(size_t(cls)); }
    int projective(int i) const { return class_of({i, n_}); }
    int simple(int i) const { return class_of({i, i}); }

    // Dimension of Hom(X, Y[degree]).
    int hom_dim(Interval x, Interval y, int degree) const;
    // Structure constant of g after f in the canonical bases: 0 or 1.
    int structure_constant(const Morphism& g, const Morphism& f) const;
    // Middle term E of the nonsplit 0 -> y -> E -> x -> 0.
    std::vector<Interval> extension_middle(Interval x, Interval y) const;
    std::optional<Indec> serre(Indec x) const;

    std::string name() const override;
    int class_count() const override { return int(ivs_.size()); }
    std::string class_name(int c) const override;
    Indec normalize(Indec x) const override;
    Morphism identity(Indec x) const override;
    std::vector<Morphism> morphisms_from(Indec x) const override;
    std::vector<Morphism> morphisms_to(Indec y) const override;
    std::optional<Morphism> compose(const Morphism& g, const Morphism& f) const override;
    Object cone(const Morphism& f) const override;
    int sum_cone_arity() const override { return arity_; }
    int default_sum_arity() const override { return std::min(arity_, 2); }
    std::vector<int> sum_cone_classes(const std::vector<int>& left,
                                      const std::vector<int>& right) const override;

    struct Entry {
        int src, dst;  // indices into the source and target lists
        int coef;
    };
    // Cone of the map from the sum of `src` to the sum of `dst` whose nonzero
    // components are multiples of canonical basis maps.
    Object cone_between(const std::vector<Indec>& src, const std::vector<Indec>& dst,
                        const std::vector<Entry>& entries) const;
    bool exact_for_levels() const override { return true; }

private:
    struct Cache {
        std::shared_mutex mu;
        std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<int>> classes;
    };

    int n_;
    int arity_;
    std::vector<Interval> ivs_;
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

struct RadicalChain {
    int loewy_length = 0;
    std::vector<Morphism> witness;
};

// Longest nonzero composite of non-invertible basis maps between shifted
// indecomposables, plus one.
RadicalChain loewy_length_end_algebra_chain(int n);
int loewy_length_end_algebra(int n);

}  // namespace orlov
