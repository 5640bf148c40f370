#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace widom {

/// Library-wide error type. The `what()` string starts with a stable
/// machine-readable tag, e.g. "order-exceeds-smoothness: ...".
class Error : public std::runtime_error {
public:
    Error(const std::string& tag, const std::string& msg)
        : std::runtime_error(tag + ": " + msg), tag_(tag) {}
    const std::string& tag() const { return tag_; }

private:
    std::string tag_;
};

/// A value together with an a-posteriori error estimate (always >= 0).
struct ValueWithError {
    double value = 0.0;
    double error = 0.0;
};

/// Neumaier compensated accumulator. Summation order is fixed by the
/// caller, so results are bitwise reproducible.
class KahanSum {
public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// Deterministic xorshift-based generator. We avoid std distributions so
/// that sampled suites produce identical streams on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0x9e3779b97f4a7c15ull) : state_(seed ? seed : 1) {}

    std::uint64_t next_u64() {
        // splitmix64 step
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

/// Evaluates fn(i) for i in [0, n) on up to `threads` workers and combines
/// the results in index order, so the reduction is deterministic for any
/// thread count.
template <typename T>
std::vector<T> parallel_map(std::size_t n, int threads, const std::function<T(std::size_t)>& fn) {
    std::vector<T> out(n);
    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::size_t nw = std::min<std::size_t>(threads, n);
    std::vector<std::thread> pool;
    pool.reserve(nw);
    for (std::size_t w = 0; w < nw; ++w) {
        pool.emplace_back([&, w]() {
            for (std::size_t i = w; i < n; i += nw) out[i] = fn(i);
        });
    }
    for (auto& t : pool) t.join();
    return out;
}

inline double sqr(double x) { return x * x; }

/// |x|^g with fast paths for the exponents that dominate our workloads.
inline double abs_pow(double x, double g) {
    double a = std::abs(x);
    if (g == 1.0) return a;
    if (g == 0.5) return std::sqrt(a);
    if (g == 2.0) return a * a;
    return std::pow(a, g);
}

}  // namespace widom
