#pragma once

#include <compare>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace orlov {

inline constexpr int kInf = std::numeric_limits<int>::max();

struct InvalidArgument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
// Ghost chain revisits a state with nonzero composite.
struct NonTerminatingChain : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Two computations that must agree did not.
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

struct Indec {
    int cls = 0;
    int shift = 0;
    auto operator<=>(const Indec&) const = default;
};

// One-dimensional Hom component; `tag` is model-local (power of u, degree, ...).
struct Morphism {
    Indec src, dst;
    int tag = 0;
    auto operator<=>(const Morphism&) const = default;
};

// Multiset of shifted indecomposables, kept sorted.
struct Object {
    std::vector<Indec> summands;
    bool is_zero() const { return summands.empty(); }
    bool operator==(const Object&) const = default;
};

// Sorted, duplicate-free list of class ids.
using GeneratorSet = std::vector<int>;

class CategoryModel {
public:
    virtual ~CategoryModel() = default;

    virtual std::string name() const = 0;
    virtual int class_count() const = 0;
    virtual std::string class_name(int c) const = 0;

    virtual Indec normalize(Indec x) const = 0;
    Indec shift(Indec x, int k) const { return normalize({x.cls, x.shift + k}); }

    virtual Morphism identity(Indec x) const = 0;
    // Every nonzero basis morphism out of / into x, identity included.
    virtual std::vector<Morphism> morphisms_from(Indec x) const = 0;
    virtual std::vector<Morphism> morphisms_to(Indec y) const = 0;
    std::vector<Morphism> morphisms_between(Indec x, Indec y) const;
    // g after f; nullopt for the zero map.
    virtual std::optional<Morphism> compose(const Morphism& g, const Morphism& f) const = 0;
    virtual Object cone(const Morphism& f) const = 0;
    // f induces zero on Hom(G', -) for every shifted generator indecomposable G'.
    virtual bool ghost(const Morphism& f, const GeneratorSet& g) const;

    // Largest side for cones of maps between sums; 0 when single basis maps
    // already reach every level. Saturation starts at the default arity and
    // tritime escalates while the ghost bound is not met.
    virtual int sum_cone_arity() const { return 0; }
    virtual int default_sum_arity() const { return sum_cone_arity(); }
    // Classes occurring in cones of maps, either way, between a sum over the
    // shift-closures of `left` and a sum over those of `right`.
    virtual std::vector<int> sum_cone_classes(const std::vector<int>& /*left*/,
                                              const std::vector<int>& /*right*/) const {
        return {};
    }

    // Cones of single basis maps reach the true levels and basis ghost chains
    // realize them.
    virtual bool exact_for_levels() const { return false; }

    Object make_object(std::vector<Indec> xs) const;
};

struct TraceStep {
    int from_cls;   // at level t
    int via_cls;    // at level 0; -1 for a sum of generators
    int made_cls;   // summand of the cone
    int round;      // t + 1
};

struct LevelTable {
    std::vector<int> level;  // kInf when unreached
    int rounds = 0;
    bool stabilized = false;
    std::vector<TraceStep> trace;
    int max_finite() const;
    bool all_reached() const;
};

void validate_generator(const CategoryModel& m, GeneratorSet& g);
bool is_ghost(const CategoryModel& m, const GeneratorSet& g, const Morphism& f);

int default_max_steps(const CategoryModel& m);

// arity -1 means the model's default.
LevelTable saturate_levels(const CategoryModel& m, GeneratorSet g, int max_steps = -1,
                           bool keep_trace = false, int arity = -1);

// One maximal ghost chain, as the list of basis maps applied.
struct GhostChain {
    int length = 0;
    std::vector<Morphism> maps;
};

GhostChain ghost_chain(const CategoryModel& m, GeneratorSet g, Indec start);
int ghost_chain_longest(const CategoryModel& m, GeneratorSet g, Indec start);

struct TritimeResult {
    int value = kInf;
    int arity = 0;           // sum arity the saturation needed
    std::vector<int> ghost;  // per class; kInf when the chain search diverged
    LevelTable saturation;
};

TritimeResult tritime_detail(const CategoryModel& m, GeneratorSet g, int max_steps = -1);
int tritime(const CategoryModel& m, GeneratorSet g, int max_steps = -1);

struct Gap {
    int a;
    int length;
    bool operator==(const Gap&) const = default;
};

std::vector<Gap> gaps(const std::vector<int>& times);

struct SpectrumReport {
    std::vector<int> times;
    std::vector<Gap> gaps;
    int rdim = kInf;
    int udim = kInf;
    int generator_count = 0;
    std::vector<std::pair<GeneratorSet, int>> per_generator;
};

std::vector<GeneratorSet> all_class_subsets(const CategoryModel& m);

SpectrumReport orlov_spectrum(const CategoryModel& m, const std::vector<GeneratorSet>& candidates,
                              int jobs = 1, int max_steps = -1);
SpectrumReport orlov_spectrum(const CategoryModel& m, int jobs = 1, int max_steps = -1);

}  // namespace orlov
