#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "amen/harness.hpp"

using namespace amen;

TEST_CASE("generator is deterministic and respects the dimension cap") {
    auto a = generate(42, 30, 6);
    auto b = generate(42, 30, 6);
    REQUIRE(a.size() == 30);
    REQUIRE(b.size() == 30);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].recipe == b[i].recipe);
        CHECK(a[i].algebra.table() == b[i].algebra.table());
        CHECK(a[i].algebra.dim() <= 6);
        CHECK(a[i].algebra.dim() >= 1);
    }
    auto c = generate(43, 30, 6);
    bool any_diff = false;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i].recipe != a[i].recipe) any_diff = true;
    CHECK(any_diff);
}

TEST_CASE("every generated instance is a valid algebra") {
    for (const auto& g : generate(7, 40, 7)) {
        ValidationReport r = validate(g.algebra);
        CHECK_MESSAGE(r.valid, g.recipe, ": ", r.message);
    }
}

TEST_CASE("check registry covers all ids and rejects unknown ones") {
    const auto& ids = Auditor::check_ids();
    CHECK(ids.size() == 20);
    for (const char* must :
         {"T2.1.i", "T2.1.ii", "T2.1.iii", "T2.1.iv", "C2.2", "T2.4", "T3.1", "C3.2", "T3.3",
          "T3.4", "T3.5", "T3.6", "C3.8/3.9", "T4.1", "C4.2", "T4.3", "T5.op", "T5.bidual",
          "DECOMP", "BRIDGE"}) {
        CHECK(std::find(ids.begin(), ids.end(), must) != ids.end());
        CHECK(!Auditor::finite_dim_note(must).empty());
    }
    RunConfig cfg;
    Auditor h(cfg);
    CHECK_THROWS_AS(h.run_check("T9.99"), std::invalid_argument);
}

TEST_CASE("structural identities pass on a small seeded run") {
    RunConfig cfg;
    cfg.seed = 3;
    cfg.trials = 15;
    cfg.max_dim = 6;
    Auditor h(cfg);
    for (const char* id : {"DECOMP", "T5.op", "T5.bidual"}) {
        CheckOutcome o = h.run_check(id);
        INFO(id);
        CHECK(o.counterexamples.empty());
        CHECK(o.passes > 0);
        CHECK(o.status() == "pass");
    }
}

TEST_CASE("outcome tallies account for every instance") {
    RunConfig cfg;
    cfg.seed = 5;
    cfg.trials = 10;
    cfg.max_dim = 6;
    Auditor h(cfg);
    for (const auto& id : Auditor::check_ids()) {
        CheckOutcome o = h.run_check(id);
        INFO(id);
        CHECK(o.instances_tried > 0);
        CHECK(o.passes + o.vacuous + o.inconclusive + o.counterexamples.size() ==
              o.instances_tried);
    }
}

TEST_CASE("runs with the same seed produce identical summaries") {
    RunConfig cfg;
    cfg.seed = 11;
    cfg.trials = 8;
    cfg.max_dim = 5;
    Auditor h1(cfg), h2(cfg);
    Json s1 = summary_to_json(h1.run_all());
    Json s2 = summary_to_json(h2.run_all());
    CHECK(s1.dump() == s2.dump());
}

TEST_CASE("negated conclusions trip the alarm") {
    // sanity check of the harness itself: if it cannot find counterexamples
    // to deliberately falsified statements, the tally logic is broken
    RunConfig cfg;
    cfg.seed = 2;
    cfg.trials = 10;
    cfg.max_dim = 5;
    cfg.negate_conclusions = true;
    Auditor h(cfg);
    CheckOutcome o = h.run_check("DECOMP");
    CHECK(!o.counterexamples.empty());
}

TEST_CASE("witnesses re-verify, and only against matching configs") {
    RunConfig cfg;
    cfg.seed = 2;
    cfg.trials = 10;
    cfg.max_dim = 5;
    cfg.negate_conclusions = true;
    Auditor h(cfg);
    CheckOutcome o = h.run_check("T5.op");
    REQUIRE(!o.counterexamples.empty());
    Json w = o.counterexamples.front();
    CHECK(w.contains("check"));
    CHECK(w.contains("instance"));
    CHECK(w.contains("observed"));
    CHECK(h.reverify(w));

    // the same witness under honest evaluation does not reproduce
    RunConfig honest = cfg;
    honest.negate_conclusions = false;
    Auditor h2(honest);
    CHECK(!h2.reverify(w));
}

TEST_CASE("classification cache returns the same object for equal tables") {
    RunConfig cfg;
    Auditor h(cfg);
    Algebra a = pointwise_algebra(2);
    Algebra b = pointwise_algebra(2);
    b.set_label("other name");
    CHECK(h.classify_cached(a).get() == h.classify_cached(b).get());
}

TEST_CASE("instance families are deterministic and within caps") {
    RunConfig cfg;
    cfg.seed = 9;
    cfg.trials = 12;
    cfg.max_dim = 6;
    Auditor h1(cfg), h2(cfg);
    for (const char* fam : {"pairs_theta", "tensor_pairs", "morphisms", "ideals"}) {
        const auto& f1 = h1.family(fam);
        const auto& f2 = h2.family(fam);
        INFO(fam);
        CHECK(!f1.empty());
        REQUIRE(f1.size() == f2.size());
        for (std::size_t i = 0; i < f1.size(); ++i) CHECK(f1[i].dump() == f2[i].dump());
    }
    for (const auto& inst : h1.family("pairs_theta")) {
        Algebra a1 = algebra_from_json(inst.at("a1"));
        Algebra a2 = algebra_from_json(inst.at("a2"));
        CHECK(a1.dim() + a2.dim() <= cfg.max_dim);
    }
    for (const auto& inst : h1.family("tensor_pairs")) {
        Algebra a1 = algebra_from_json(inst.at("a1"));
        Algebra a2 = algebra_from_json(inst.at("a2"));
        CHECK(a1.dim() * a2.dim() <= 16);
    }
}

TEST_CASE("summary text lists every check once") {
    RunConfig cfg;
    cfg.seed = 4;
    cfg.trials = 5;
    cfg.max_dim = 4;
    Auditor h(cfg);
    auto s = h.run_all();
    std::string text = summary_to_text(s);
    for (const auto& id : Auditor::check_ids())
        CHECK(text.find(id) != std::string::npos);
    Json j = summary_to_json(s);
    CHECK(j.at("checks").size() == Auditor::check_ids().size());
}
