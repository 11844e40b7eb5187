#pragma once

#include "qlie/structure.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qlie {

/// Enveloping mode rewrites a descending pair into swap + pseudobracket +
/// bracket terms; symmetric mode keeps only the swap (the abelianized
/// structure).
enum class RewriteMode { Enveloping, Symmetric };

enum class Strategy { Leftmost, Rightmost };

inline const char* to_string(RewriteMode m) {
    return m == RewriteMode::Enveloping ? "enveloping" : "symmetric";
}

struct RewriteSystem {
    TLieStructure structure;
    RewriteMode mode = RewriteMode::Enveloping;
    long long max_steps = 10000;
};

struct TraceStep {
    Word word;
    int position = 0;  // 1-based redex position inside the word
    FreeElt replacement;
};

class NoRedex : public std::runtime_error {
public:
    explicit NoRedex(const Word& w) : std::runtime_error("no redex in nondecreasing word " + w.str()) {}
};

class GuardExceeded : public std::runtime_error {
public:
    GuardExceeded(long long steps, std::vector<TraceStep> trace)
        : std::runtime_error("termination guard tripped after " + std::to_string(steps) + " steps"),
          trace_(std::move(trace)) {}
    const std::vector<TraceStep>& trace() const { return trace_; }

private:
    std::vector<TraceStep> trace_;
};

/// Index of the strategy-chosen strictly descending adjacent pair (1-based),
/// or 0 when the word is nondecreasing.
int find_redex(const Word& w, Strategy strategy);

/// Rewrites the strategy-chosen descending adjacent pair of w through the
/// defining relation; throws NoRedex when w is nondecreasing.
FreeElt rewrite_step(const RewriteSystem& rs, const Word& w, Strategy strategy = Strategy::Leftmost);

/// Reduces every word of x until all are nondecreasing. Deterministic: words
/// are processed in term order, redexes chosen by the strategy.
FreeElt normal_form(const RewriteSystem& rs, const FreeElt& x, Strategy strategy = Strategy::Leftmost,
                    std::vector<TraceStep>* trace = nullptr);

struct OverlapOutcome {
    Word word;
    FreeElt first_path;
    FreeElt second_path;
    bool agree = false;
};

struct ConfluenceReport {
    int n = 0;
    RewriteMode mode = RewriteMode::Enveloping;
    std::vector<OverlapOutcome> outcomes;
    long long overlap_count = 0;
    bool pass = false;
};

/// Pass token consumed by the graded checks.
struct ConfluenceCertificate {
    int n = 0;
    RewriteMode mode = RewriteMode::Enveloping;
    bool pass = false;
};

inline ConfluenceCertificate certificate(const ConfluenceReport& r) { return {r.n, r.mode, r.pass}; }

/// Two-way reduction of every strictly descending triple x > y > z (first
/// step at either redex) and strategy-split reduction of the repeated-pair
/// overlaps x y y and x x y for x > y.
ConfluenceReport overlap_confluence(const RewriteSystem& rs);

struct RankReport {
    int max_len = 0;
    long long word_count = 0;
    long long monomial_count = 0;
    long long rank = 0;
    bool independent = false;
};

/// Reduces every word of length <= max_len, assembles the coefficient matrix
/// against nondecreasing monomials, and computes its exact rank over the
/// fraction field.
RankReport pbw_independence(const RewriteSystem& rs, int max_len);

/// All nondecreasing words of length <= max_len over the structure's
/// generators, in term order.
std::vector<Word> sorted_monomials(const TLieStructure& s, int max_len);

}  // namespace qlie
