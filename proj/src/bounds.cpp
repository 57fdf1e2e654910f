#include "orlov/bounds.hpp"

#include "orlov/braid.hpp"
#include "orlov/core.hpp"

namespace orlov {

long long hypersurface_spec_bound(long long dim, long long ll) {
    if (dim < 0 || ll < 1) throw InvalidArgument("need dim >= 0 and ll >= 1");
    return 2 * (dim + 2) * ll - 1;
}

long long macaulay_ll(long long n, long long d) {
    if (n < 1 || d < 2) throw InvalidArgument("need n >= 1 and d >= 2");
    return d * (n + 1) - 2 * n - 1;
}

long long graded_gen_bound(long long n, long long d) {
    return 2 * (n + 1) * macaulay_ll(n, d) - 1;
}

long long calabi_yau_gen_bound(long long n) {
    if (n < 1) throw InvalidArgument("need n >= 1");
    const long long v = graded_gen_bound(n, n + 1);
    if (v != 2 * n * n * (n + 1) - 1) throw ConsistencyError("Calabi-Yau bound disagrees");
    return v;
}

long long fukaya_surface_bound(long long g) {
    if (g < 2) throw InvalidArgument("need g >= 2");
    return 12 * g + 5;
}

static long long need(const std::map<std::string, long long>& p, const std::string& k) {
    auto it = p.find(k);
    if (it == p.end()) throw InvalidArgument("missing parameter " + k);
    return it->second;
}

Bound compute_bound(const std::string& kind, const std::map<std::string, long long>& p) {
    Bound b;
    b.kind = kind;
    if (kind == "hypersurface") {
        b.params = {{"dim", need(p, "dim")}, {"ll", need(p, "ll")}};
        b.value = hypersurface_spec_bound(b.params["dim"], b.params["ll"]);
        b.provenance = "isolated hypersurface bound 2(dim+2)LL-1";
        b.non_tight = true;
    } else if (kind == "macaulay") {
        b.params = {{"n", need(p, "n")}, {"d", need(p, "d")}};
        b.value = macaulay_ll(b.params["n"], b.params["d"]);
        b.provenance = "Macaulay nilpotence of the Jacobian ring";
    } else if (kind == "graded") {
        b.params = {{"n", need(p, "n")}, {"d", need(p, "d")}};
        b.value = graded_gen_bound(b.params["n"], b.params["d"]);
        b.provenance = "graded singularity bound 2(n+1)(d(n+1)-2n-1)-1";
        b.non_tight = true;
    } else if (kind == "quintic" || kind == "calabi-yau") {
        const long long n = need(p, "n");
        if (p.count("d") && p.at("d") != n + 1) throw InvalidArgument("Calabi-Yau case needs d = n+1");
        b.params = {{"n", n}, {"d", n + 1}};
        b.value = calabi_yau_gen_bound(n);
        b.provenance = "Calabi-Yau hypersurface bound 2n^2(n+1)-1";
        b.non_tight = true;
    } else if (kind == "fukaya-surface") {
        b.params = {{"g", need(p, "g")}};
        b.value = fukaya_surface_bound(b.params["g"]);
        b.provenance = "genus g surface via the hypersurface bound, 12g+5";
        b.non_tight = true;
    } else if (kind == "genus") {
        const long long g = need(p, "g");
        if (g < 1 || g > 1000) throw InvalidArgument("genus out of range");
        b.params = {{"g", g}};
        b.value = genus_bound(int(g)).upper;
        b.provenance = "Matsumoto relation partitioned into orthogonal blocks, 8g+3";
        b.non_tight = true;
    } else {
        throw InvalidArgument("unknown bound kind " + kind);
    }
    return b;
}

}  // namespace orlov
