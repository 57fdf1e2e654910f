#pragma once

#include <utility>
#include <vector>

namespace orlov {

// m spherical objects; orthogonal(a, b) means their twists commute.
class SphericalConfig {
public:
    explicit SphericalConfig(int m);
    static SphericalConfig a_m(int m);  // orthogonal iff |i - j| >= 2

    int m() const { return m_; }
    void set_orthogonal(int a, int b, bool v = true);
    bool orthogonal(int a, int b) const;
    // letters that do not commute with a, a itself included
    const std::vector<int>& dependent(int a) const { return dep_.at(size_t(a)); }

private:
    void rebuild();
    int m_;
    std::vector<std::vector<char>> orth_;
    std::vector<std::vector<int>> dep_;
};

using TwistWord = std::vector<int>;

TwistWord matsumoto_identity_word(int g);

// Minimum number of consecutive blocks with pairwise orthogonal letters.
int partition_intervals(const TwistWord& w, const SphericalConfig& c);

// Block index (1-based) of every letter in the Foata normal form.
std::vector<int> foata_levels(const TwistWord& w, const SphericalConfig& c);
TwistWord foata_normal_form(const TwistWord& w, const SphericalConfig& c);

struct RewriteOptions {
    long budget = 1'000'000;      // evaluations for the optional braid-move search
    bool rotations = true;        // the word is a relation, so cyclic shifts are allowed
    bool braid_moves = false;     // aba <-> bab for non-orthogonal neighbours
};

struct RewriteResult {
    TwistWord word;
    int blocks = 0;
    int lower_bound = 0;  // no rewrite can beat this
    long evaluations = 0;
};

RewriteResult commutation_rewrite_detail(const TwistWord& w, const SphericalConfig& c,
                                         const RewriteOptions& opt = {});
TwistWord commutation_rewrite(const TwistWord& w, const SphericalConfig& c,
                              const RewriteOptions& opt = {});

// Upper bound on the generation time from a relation word L_{a_1}...L_{a_r} = Id.
int generation_bound(const TwistWord& w, const SphericalConfig& c, const RewriteOptions& opt = {});

struct GenusBound {
    int lower = 0;  // 4g, recorded constant
    int upper = 0;  // recomputed from the Matsumoto word
};
GenusBound genus_bound(int g);

}  // namespace orlov
