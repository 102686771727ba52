#pragma once

#include <map>
#include <memory>

#include "amen/corpus.hpp"
#include "amen/io.hpp"

namespace amen {

struct GeneratedAlgebra {
    Algebra algebra;
    std::string recipe;
};

/// Deterministic instance generator: expression trees of constructions over
/// corpus leaves. Every output is a valid algebra of dimension <= max_dim.
std::vector<GeneratedAlgebra> generate(std::uint64_t seed, std::size_t count,
                                       std::size_t max_dim);

struct CheckOutcome {
    std::string id;
    std::size_t instances_tried = 0;
    std::size_t passes = 0;
    std::size_t vacuous = 0;       // hypothesis never fired
    std::size_t inconclusive = 0;  // blocked on a conditional verdict
    std::vector<Json> counterexamples;
    std::string finite_dim_note;

    /// "counterexample" | "pass" | "inconclusive" | "untested"
    std::string status() const;
};

struct RunConfig {
    std::uint64_t seed = 1;
    std::size_t trials = 50;
    std::size_t max_dim = 8;
    /// Self-test hook: flips every definite conclusion, so a healthy corpus
    /// must produce counterexamples.
    bool negate_conclusions = false;
};

/// A classified algebra: its character set and full report, cached by value.
struct Classified {
    Algebra alg;
    CharacterSet chars;
    AmenabilityReport rep;
    bool char_overflow = false;
};
using ClassifiedPtr = std::shared_ptr<const Classified>;

class Auditor {
public:
    explicit Auditor(RunConfig cfg);

    static const std::vector<std::string>& check_ids();
    static std::string finite_dim_note(const std::string& id);

    CheckOutcome run_check(const std::string& id);

    struct Summary {
        RunConfig config;
        std::vector<CheckOutcome> outcomes;
        bool counterexample_found = false;
    };
    Summary run_all();

    /// Reloads the serialized witness and re-runs the single check on it.
    /// True iff the violation reproduces (hypothesis holds, conclusion fails).
    bool reverify(const Json& witness);

    ClassifiedPtr classify_cached(const Algebra& a);
    const std::vector<GeneratedAlgebra>& pool() const { return pool_; }
    const RunConfig& config() const { return cfg_; }

    /// Deterministic per-family instance lists, shared across checks.
    const std::vector<Json>& family(const std::string& name);

private:
    RunConfig cfg_;
    std::vector<GeneratedAlgebra> pool_;
    std::map<std::string, ClassifiedPtr> cache_;
    std::map<std::string, std::vector<Json>> families_;
};

Json summary_to_json(const Auditor::Summary& s);
std::string summary_to_text(const Auditor::Summary& s);

}  // namespace amen
