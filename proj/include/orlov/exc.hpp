#pragma once

#include "orlov/core.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace orlov {

struct NonNilpotent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Minimal A-infinity algebra of an exceptional collection, restricted to the
// ideal I spanned by `arrows`. A product entry reads m_t(inputs) = output with
// inputs listed in traversal order (source of the first is the source of the
// composite). Products not listed are zero.
struct Presentation {
    struct Arrow {
        std::string name;
        int source = 0, target = 0;
        int degree = 0;
    };
    struct Product {
        std::vector<int> inputs;
        std::vector<std::pair<long long, int>> output;  // (coefficient, arrow)
    };

    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;
    std::vector<Product> products;
    int field = 32003;

    bool associative() const;
    int arity_max() const;
    // Hard errors throw InvalidArgument; soft findings are returned.
    std::vector<std::string> validate() const;

    static Presentation from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

int loewy_length(const Presentation& p);
int loewy_length_infinity(const Presentation& p);
// dim I^k for k = 1.. until zero
std::vector<int> ll_infinity_filtration(const Presentation& p);

struct DualBounds {
    int lower = 0;
    int upper = 0;
    bool formal = false;
};

// Bounds on the generation time of the dual collection, from the graded
// cohomology algebra of the collection and optionally a minimal model of it.
DualBounds dual_gen_time_bounds(const Presentation& cohomology, const Presentation* minimal = nullptr);

// Presets.
Presentation path_algebra_an(int n);
Presentation koszul_dual_truncated_an(int n);            // minimal model with m_n
Presentation koszul_dual_truncated_an_cohomology(int n);  // its m_2 part
Presentation orthogonal_collection(int k);
// Monomial algebra: arrows are all nonzero paths of the quiver modulo
// the listed zero relations (paths given as edge lists).
Presentation monomial_algebra(int vertices, const std::vector<std::pair<int, int>>& edges,
                              const std::vector<std::vector<int>>& zero_paths, int max_len);

bool is_exceptional(const CategoryModel& m, const std::vector<Indec>& collection);
// Some morphism X -> Y[k], any k.
bool hom_nonzero_any_degree(const CategoryModel& m, Indec x, Indec y);

struct WalkStep {
    std::string label;
    std::vector<Indec> components;
    std::vector<int> origin;  // index into the input collection
    int tritime = kInf;
};

struct Walk {
    std::vector<WalkStep> steps;
    int component_max = 0;  // M
    std::vector<int> times;
    std::vector<Gap> gaps;
};

// Left twist L_E(X): cone of the evaluation E[k] -> X.
Indec left_twist(const CategoryModel& m, Indec e, Indec x);

Walk mutation_walk(const CategoryModel& m, const std::vector<Indec>& collection, int max_steps = -1);

}  // namespace orlov
