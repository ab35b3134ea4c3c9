#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <shared_mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "ibmap/dataset.hpp"

namespace ibmap {

enum class AssertionKind { independence, dependence };

/// A conditional (in)dependence statement about x and y given z.
struct Assertion {
    Variable x = 0;
    Variable y = 0;
    std::vector<Variable> z;
    AssertionKind kind = AssertionKind::independence;

    /// Orders x < y and sorts z.
    Assertion canonical() const;

    bool operator==(const Assertion&) const = default;
};

/// Posterior log-probabilities of the two hypotheses for one triplet.
struct TestOutcome {
    double log_p_ind = 0.0;
    double log_p_dep = 0.0;

    double log_p(AssertionKind kind) const {
        return kind == AssertionKind::independence ? log_p_ind : log_p_dep;
    }
    bool independent() const { return log_p_ind > log_p_dep; }
};

/// log of the Dirichlet-multinomial marginal likelihood of `counts` under a
/// symmetric Dirichlet(alpha) prior over counts.size() categories.
double log_dirichlet_multinomial(std::span<const std::uint64_t> counts, double alpha);

/// Log-evidence of the dependence and independence models summed over the
/// observed conditioning slices.
struct CiEvidence {
    double log_dep = 0.0;
    double log_ind = 0.0;
};

CiEvidence ci_evidence(const Dataset& d, Variable x, Variable y, std::span<const Variable> z,
                       double alpha = 1.0);

/// Converts evidences to posteriors under equal hypothesis priors.
TestOutcome posterior_from_evidence(const CiEvidence& e);

/// Bayesian test of conditional independence on discrete data. Symmetric in
/// x and y bit-for-bit.
TestOutcome bayesian_ci_test(const Dataset& d, Variable x, Variable y,
                             std::span<const Variable> z, double alpha = 1.0);

/// Canonical cache key: x < y, z ascending.
struct TestKey {
    Variable x = 0;
    Variable y = 0;
    std::vector<Variable> z;

    static TestKey of(Variable x, Variable y, std::vector<Variable> z);
    bool operator==(const TestKey&) const = default;
};

struct TestKeyHash {
    std::size_t operator()(const TestKey& k) const noexcept;
};

/// Memoizes TestOutcomes by canonical triplet. Safe for concurrent use; a
/// racing duplicate computation produces the same bits and only the first
/// insert is kept and counted.
class TestCache {
public:
    explicit TestCache(double alpha = 1.0);

    TestCache(const TestCache&) = delete;
    TestCache& operator=(const TestCache&) = delete;

    double alpha() const noexcept { return alpha_; }

    /// Computes on first access, then serves from memory.
    TestOutcome get_or_compute(const Dataset& d, const TestKey& key);

    /// Lookup without computing and without touching the counters.
    std::optional<TestOutcome> peek(const TestKey& key) const;

    std::uint64_t tests_computed() const noexcept { return computed_.load(); }
    std::uint64_t cache_hits() const noexcept { return hits_.load(); }
    std::size_t size() const;

private:
    double alpha_;
    mutable std::shared_mutex mutex_;
    std::unordered_map<TestKey, TestOutcome, TestKeyHash> entries_;
    std::atomic<std::uint64_t> computed_{0};
    std::atomic<std::uint64_t> hits_{0};
};

/// log P(a | D): log_p_ind for independence assertions, log_p_dep otherwise.
double cached_test(TestCache& cache, const Dataset& d, const Assertion& a);

}  // namespace ibmap
