#include "ibmap/citest.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

namespace ibmap {

Assertion Assertion::canonical() const {
    Assertion out = *this;
    if (out.x > out.y) std::swap(out.x, out.y);
    std::sort(out.z.begin(), out.z.end());
    return out;
}

double log_dirichlet_multinomial(std::span<const std::uint64_t> counts, double alpha) {
    if (counts.empty()) throw std::invalid_argument("log_dirichlet_multinomial: no cells");
    if (!(alpha > 0.0)) throw std::invalid_argument("log_dirichlet_multinomial: alpha must be > 0");
    const double cells = static_cast<double>(counts.size());
    const double lg_alpha = std::lgamma(alpha);
    double total = 0.0;
    double sum = 0.0;
    for (auto c : counts) {
        if (c == 0) continue;  // lgamma(alpha + 0) - lgamma(alpha) == 0
        total += static_cast<double>(c);
        sum += std::lgamma(alpha + static_cast<double>(c)) - lg_alpha;
    }
    return std::lgamma(cells * alpha) - std::lgamma(cells * alpha + total) + sum;
}

CiEvidence ci_evidence(const Dataset& d, Variable x, Variable y, std::span<const Variable> z,
                       double alpha) {
    // The evidence is symmetric in x and y; fixing the order makes the
    // floating-point summation order, and hence the result, symmetric too.
    if (x > y) std::swap(x, y);
    const auto tables = slice_tables(d, x, y, z);
    const std::size_t xa = tables.x_arity;
    const std::size_t ya = tables.y_arity;

    CiEvidence e;
    std::vector<std::uint64_t> x_marginal(xa);
    std::vector<std::uint64_t> y_marginal(ya);
    for (std::size_t s = 0; s < tables.num_slices; ++s) {
        const auto joint = tables.slice(s);
        std::fill(x_marginal.begin(), x_marginal.end(), 0);
        std::fill(y_marginal.begin(), y_marginal.end(), 0);
        for (std::size_t a = 0; a < xa; ++a) {
            for (std::size_t b = 0; b < ya; ++b) {
                x_marginal[a] += joint[a * ya + b];
                y_marginal[b] += joint[a * ya + b];
            }
        }
        e.log_dep += log_dirichlet_multinomial(joint, alpha);
        e.log_ind += log_dirichlet_multinomial(x_marginal, alpha) +
                     log_dirichlet_multinomial(y_marginal, alpha);
    }
    return e;
}

namespace {

/// log(1 + exp(t)) without overflow.
double softplus(double t) { return t > 0.0 ? t + std::log1p(std::exp(-t)) : std::log1p(std::exp(t)); }

}  // namespace

TestOutcome posterior_from_evidence(const CiEvidence& e) {
    const double gap = e.log_dep - e.log_ind;
    return {-softplus(gap), -softplus(-gap)};
}

TestOutcome bayesian_ci_test(const Dataset& d, Variable x, Variable y, std::span<const Variable> z,
                             double alpha) {
    return posterior_from_evidence(ci_evidence(d, x, y, z, alpha));
}

TestKey TestKey::of(Variable x, Variable y, std::vector<Variable> z) {
    if (x > y) std::swap(x, y);
    std::sort(z.begin(), z.end());
    return {x, y, std::move(z)};
}

std::size_t TestKeyHash::operator()(const TestKey& k) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ (std::uint64_t{k.x} << 32 | k.y);
    auto mix = [&h](std::uint64_t v) {
        h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h *= 0xff51afd7ed558ccdULL;
    };
    mix(k.z.size());
    for (auto v : k.z) mix(v);
    return static_cast<std::size_t>(h ^ (h >> 33));
}

TestCache::TestCache(double alpha) : alpha_(alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("TestCache: alpha must be > 0");
}

TestOutcome TestCache::get_or_compute(const Dataset& d, const TestKey& key) {
    {
        std::shared_lock lock(mutex_);
        if (const auto it = entries_.find(key); it != entries_.end()) {
            ++hits_;
            return it->second;
        }
    }
    const auto outcome = bayesian_ci_test(d, key.x, key.y, key.z, alpha_);
    std::unique_lock lock(mutex_);
    const auto [it, inserted] = entries_.try_emplace(key, outcome);
    if (inserted) {
        ++computed_;
    } else {
        ++hits_;
    }
    return it->second;
}

std::optional<TestOutcome> TestCache::peek(const TestKey& key) const {
    std::shared_lock lock(mutex_);
    if (const auto it = entries_.find(key); it != entries_.end()) return it->second;
    return std::nullopt;
}

std::size_t TestCache::size() const {
    std::shared_lock lock(mutex_);
    return entries_.size();
}

double cached_test(TestCache& cache, const Dataset& d, const Assertion& a) {
    check_triplet(d, a.x, a.y, a.z);
    return cache.get_or_compute(d, TestKey::of(a.x, a.y, a.z)).log_p(a.kind);
}

}  // namespace ibmap
