#include "kces/bounds.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace kces {

Scenario::Scenario(long d_, long n_, long k_) : d(d_), n(n_), k(k_) {
    if (d < 2)
        throw std::invalid_argument("scenario requires local dimension d >= 2");
    if (n < 3)
        throw std::invalid_argument("scenario requires party count n >= 3");
    if (k < 2 || k > n)
        throw std::invalid_argument("scenario requires depth threshold 2 <= k <= n");
}

Int pow_int(long base, long exp) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(exp));
    return r;
}

Int max_kces_dim(const Scenario& s) {
    const long t = s.t();
    return pow_int(s.d, s.n) -
           (t * pow_int(s.d, s.k - 1) + pow_int(s.d, s.n - (s.k - 1) * t) - t);
}

Composition optimal_partition_shape(const Scenario& s) {
    const long t = s.t();
    Composition c;
    c.parts.assign(static_cast<std::size_t>(t), s.k - 1);
    const long remainder = s.n - t * (s.k - 1);
    if (remainder != 0)
        c.parts.push_back(remainder);
    return c;
}

Int max_ces_dim_hetero(const std::vector<long>& dims) {
    if (dims.size() < 2)
        throw std::invalid_argument("need at least two parties");
    Int prod = 1, sum = 1;
    for (long d : dims) {
        if (d < 2)
            throw std::invalid_argument("local dimensions must be >= 2");
        prod *= d;
        sum += d - 1;
    }
    return prod - sum;
}

Int min_unextendible_size(const std::vector<long>& dims) {
    Int sum = 1;
    for (long d : dims) {
        if (d < 2)
            throw std::invalid_argument("local dimensions must be >= 2");
        sum += d - 1;
    }
    return sum;
}

Int min_upb_trivial(const Scenario& s) {
    if (s.d == 2 && s.k == s.n)
        return pow_int(s.d, s.n);

    const long t = s.t();
    const bool divides = s.n % (s.k - 1) == 0;
    const bool odd_t = t % 2 == 1;
    const Int base =
        t * (pow_int(s.d, s.k - 1) - 1) + pow_int(s.d, s.n - (s.k - 1) * t);

    if (s.d % 2 == 1)
        return base;
    if ((divides && odd_t) || (!divides && !odd_t))
        return base;
    return base + 1;
}

Int pigeonhole_bound(const Scenario& s) {
    const Int local = pow_int(s.d, s.k - 1);
    const Int per_site = (local - 2) / (s.k - 1) + 1;  // floor division, local >= 2
    return local + (s.n - s.k + 1) * per_site;
}

CombinedBound combined_lower_bound(const Scenario& s) {
    const Int trivial = min_upb_trivial(s);
    const Int pigeon = pigeonhole_bound(s);
    return {std::max(trivial, pigeon), pigeon > trivial};
}

Int f_w(long m, long n, long w) {
    if (m < 1 || w < 1 || w > n - 1)
        throw std::invalid_argument("f_w requires m >= 1 and 1 <= w <= n-1");
    const long q = (m - 1) / n;
    return Int(n - w) * q + std::max<long>(m - w - n * q, 1);
}

Int s_value(long m, long n, long w) {
    if (m < 1)
        throw std::invalid_argument("s_value requires m >= 1");
    const long q = (m - 1) / n;
    return Int(w) * q + std::min<long>(w, m - 1 - n * q);
}

Int guaranteed_box_total(long p, long q, long r, long s) {
    if (s < 0 || s > q)
        throw std::invalid_argument("guaranteed_box_total requires 0 <= s <= q");
    if (r < 0 || r >= q)
        throw std::invalid_argument("guaranteed_box_total requires 0 <= r < q");
    return Int(p) * s + std::min(r, s);
}

namespace {

void enumerate_bounded_partitions(long remaining, long max_part,
                                  std::vector<long>& current,
                                  const std::function<void(const std::vector<long>&)>& visit) {
    if (remaining == 0) {
        visit(current);
        return;
    }
    for (long part = std::min(remaining, max_part); part >= 1; --part) {
        current.push_back(part);
        enumerate_bounded_partitions(remaining - part, part, current, visit);
        current.pop_back();
    }
}

}  // namespace

PartitionOptimum brute_force_partition_optimum(const Scenario& s) {
    if (s.n > 12)
        throw std::invalid_argument("brute_force_partition_optimum limited to n <= 12");

    PartitionOptimum best{Int(0), {}};
    std::vector<long> current;
    enumerate_bounded_partitions(s.n, s.k - 1, current, [&](const std::vector<long>& parts) {
        Int value = 1;
        for (long p : parts)
            value += pow_int(s.d, p) - 1;
        if (value > best.value) {
            best.value = value;
            best.argmax.parts = parts;
        }
    });
    return best;
}

bool majorizes(const Composition& x, const Composition& y) {
    std::vector<long> a = x.parts, b = y.parts;
    std::sort(a.rbegin(), a.rend());
    std::sort(b.rbegin(), b.rend());
    const std::size_t len = std::max(a.size(), b.size());
    a.resize(len, 0);
    b.resize(len, 0);
    long sum_a = 0, sum_b = 0;
    for (std::size_t i = 0; i < len; ++i) {
        sum_a += a[i];
        sum_b += b[i];
        if (sum_a > sum_b)
            return false;
    }
    return sum_a == sum_b;
}

}  // namespace kces
