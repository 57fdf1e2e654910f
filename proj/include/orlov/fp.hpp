#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace orlov {

// Element of the prime field F_P.
template <int P>
struct Zp {
    static_assert(P >= 2 && P < 46341, "P*P must fit in int");
    int v = 0;

    constexpr Zp() = default;
    constexpr Zp(long long x) : v(int(((x % P) + P) % P)) {}

    static constexpr int modulus() { return P; }

    friend constexpr Zp operator+(Zp a, Zp b) { return Zp(a.v + b.v); }
    friend constexpr Zp operator-(Zp a, Zp b) { return Zp(a.v - b.v); }
    friend constexpr Zp operator*(Zp a, Zp b) { return Zp((long long)a.v * b.v); }
    constexpr Zp operator-() const { return Zp(-v); }
    Zp& operator+=(Zp o) { return *this = *this + o; }
    Zp& operator-=(Zp o) { return *this = *this - o; }
    Zp& operator*=(Zp o) { return *this = *this * o; }

    constexpr Zp inv() const {
        if (v == 0) throw std::domain_error("inverse of zero");
        // Fermat
        long long r = 1, b = v;
        for (int e = P - 2; e > 0; e >>= 1) {
            if (e & 1) r = r * b % P;
            b = b * b % P;
        }
        return Zp(r);
    }
    friend Zp operator/(Zp a, Zp b) { return a * b.inv(); }
    Zp& operator/=(Zp o) { return *this = *this / o; }

    friend constexpr bool operator==(Zp a, Zp b) { return a.v == b.v; }
    friend constexpr bool operator!=(Zp a, Zp b) { return a.v != b.v; }

    friend std::ostream& operator<<(std::ostream& os, Zp a) { return os << a.v; }
};

template <typename T>
struct is_zp : std::false_type {};
template <int P>
struct is_zp<Zp<P>> : std::true_type {};

}  // namespace orlov

namespace Eigen {
template <int P>
struct NumTraits<orlov::Zp<P>> : GenericNumTraits<orlov::Zp<P>> {
    using Real = orlov::Zp<P>;
    using NonInteger = orlov::Zp<P>;
    using Nested = orlov::Zp<P>;
    using Literal = orlov::Zp<P>;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 0,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 2,
        MulCost = 4
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace orlov {

template <typename S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <typename S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

// In-place reduced row echelon form; returns pivot columns.
template <typename Derived>
std::vector<int> rref(Eigen::MatrixBase<Derived>& a) {
    using S = typename Derived::Scalar;
    std::vector<int> piv;
    const Eigen::Index rows = a.rows(), cols = a.cols();
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index p = r;
        while (p < rows && a(p, c) == S(0)) ++p;
        if (p == rows) continue;
        if (p != r) a.row(p).swap(a.row(r));
        const S s = a(r, c).inv();
        a.row(r) *= s;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == r || a(i, c) == S(0)) continue;
            const S f = a(i, c);
            a.row(i) -= f * a.row(r);
        }
        piv.push_back(int(c));
        ++r;
    }
    return piv;
}

template <typename Derived>
int rank(const Eigen::MatrixBase<Derived>& m) {
    Mat<typename Derived::Scalar> a = m;
    return int(rref(a).size());
}

// Columns form a basis of {x : m x = 0}.
template <typename Derived>
Mat<typename Derived::Scalar> nullspace(const Eigen::MatrixBase<Derived>& m) {
    using S = typename Derived::Scalar;
    Mat<S> a = m;
    const auto piv = rref(a);
    const Eigen::Index n = a.cols();
    std::vector<char> is_piv(size_t(n), 0);
    for (int c : piv) is_piv[size_t(c)] = 1;
    Mat<S> out = Mat<S>::Zero(n, n - Eigen::Index(piv.size()));
    Eigen::Index k = 0;
    for (Eigen::Index f = 0; f < n; ++f) {
        if (is_piv[size_t(f)]) continue;
        out(f, k) = S(1);
        for (size_t r = 0; r < piv.size(); ++r) out(piv[r], k) = -a(Eigen::Index(r), f);
        ++k;
    }
    return out;
}

// Column basis of the column span of m.
template <typename Derived>
Mat<typename Derived::Scalar> colspace(const Eigen::MatrixBase<Derived>& m) {
    using S = typename Derived::Scalar;
    Mat<S> t = m.transpose();
    const auto piv = rref(t);
    return t.topRows(Eigen::Index(piv.size())).transpose();
}

// Solve m x = b; false when inconsistent.
template <typename D1, typename D2>
bool solve(const Eigen::MatrixBase<D1>& m, const Eigen::MatrixBase<D2>& b,
           Vec<typename D1::Scalar>& x) {
    using S = typename D1::Scalar;
    Mat<S> aug(m.rows(), m.cols() + 1);
    aug << m, b;
    const auto piv = rref(aug);
    if (!piv.empty() && piv.back() == int(m.cols())) return false;
    x = Vec<S>::Zero(m.cols());
    for (size_t r = 0; r < piv.size(); ++r) x(piv[r]) = aug(Eigen::Index(r), m.cols());
    return true;
}

// Primes with compiled arithmetic.
inline constexpr int kPrimes[] = {2, 3, 5, 7, 11, 13, 32003};

inline bool supported_prime(int p) {
    for (int q : kPrimes)
        if (q == p) return true;
    return false;
}

// Calls f(std::integral_constant<int, P>{}) for the matching compiled prime.
template <typename F>
decltype(auto) with_prime(int p, F&& f) {
    switch (p) {
        case 2: return f(std::integral_constant<int, 2>{});
        case 3: return f(std::integral_constant<int, 3>{});
        case 5: return f(std::integral_constant<int, 5>{});
        case 7: return f(std::integral_constant<int, 7>{});
        case 11: return f(std::integral_constant<int, 11>{});
        case 13: return f(std::integral_constant<int, 13>{});
        case 32003: return f(std::integral_constant<int, 32003>{});
    }
    throw std::invalid_argument("unsupported field characteristic " + std::to_string(p));
}

}  // namespace orlov
