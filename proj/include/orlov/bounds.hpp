#pragma once

#include <map>
#include <string>

namespace orlov {

struct Bound {
    std::string kind;
    long long value = 0;
    std::string provenance;  // which inequality it comes from
    bool non_tight = false;  // strict for some known cases
    std::map<std::string, long long> params;
};

long long hypersurface_spec_bound(long long dim, long long ll);
long long macaulay_ll(long long n, long long d);
long long graded_gen_bound(long long n, long long d);
long long calabi_yau_gen_bound(long long n);  // d = n + 1
long long fukaya_surface_bound(long long g);

// kind: hypersurface (dim, ll), macaulay (n, d), graded (n, d), quintic or
// calabi-yau (n, d = n+1), fukaya-surface (g), genus (g).
Bound compute_bound(const std::string& kind, const std::map<std::string, long long>& params);

}  // namespace orlov
