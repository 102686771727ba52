#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "amen/harness.hpp"

namespace {

using namespace amen;

int fail(int code, const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return code;
}

Algebra load_or_throw(const std::string& path) { return load_algebra(path); }

CharacterSet declared_only_set(const Algebra& a) {
    CharacterSet cs;
    if (a.declared_characters()) {
        for (const auto& v : a.declared_characters()->values)
            cs.characters.push_back(Character{a.dim(), v});
        cs.complete = a.declared_characters()->complete;
        sort_characters(cs.characters);
    }
    return cs;
}

int cmd_validate(const std::string& path) {
    Algebra a;
    try {
        a = load_or_throw(path);
    } catch (const std::exception& e) {
        return fail(2, std::string("cannot parse ") + path + ": " + e.what());
    }
    ValidationReport r = validate(a);
    if (!r.valid) {
        std::string loc;
        if (r.assoc_violation) {
            const auto& q = *r.assoc_violation;
            loc = " at (i,j,k,l)=(" + std::to_string(q[0]) + "," + std::to_string(q[1]) + "," +
                  std::to_string(q[2]) + "," + std::to_string(q[3]) + ")";
        }
        return fail(2, r.message + loc);
    }
    if (a.declared_characters()) {
        const auto& dc = *a.declared_characters();
        for (std::size_t i = 0; i < dc.values.size(); ++i) {
            if (dc.values[i].size() != a.dim())
                return fail(2, "declared character " + std::to_string(i) + " has wrong length");
            if (!is_character(a, dc.values[i]) || is_zero_vector(dc.values[i]))
                return fail(2, "declared character " + std::to_string(i) + " is not a character");
        }
    }
    std::cout << "valid: " << a.label() << " (dim " << a.dim() << ")\n";
    return 0;
}

int cmd_analyze(const std::string& path, const std::string& chars_mode) {
    Algebra a;
    try {
        a = load_or_throw(path);
    } catch (const std::exception& e) {
        return fail(2, std::string("cannot parse ") + path + ": " + e.what());
    }
    ValidationReport r = validate(a);
    if (!r.valid) return fail(2, r.message);
    CharacterSet cs;
    try {
        if (chars_mode == "declared-only") {
            cs = declared_only_set(a);
        } else {
            cs = merge_declared(a, find_rational_characters(a));
        }
    } catch (const CharacterOverflowError& e) {
        return fail(3, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(2, e.what());
    }
    AmenabilityReport rep = classify(a, cs);
    std::ifstream in(path, std::ios::binary);
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::cout << report_to_json(rep, a.label(), digest(bytes)).dump(2) << "\n";
    return 0;
}

int cmd_characters(const std::string& path) {
    Algebra a;
    try {
        a = load_or_throw(path);
    } catch (const std::exception& e) {
        return fail(2, std::string("cannot parse ") + path + ": " + e.what());
    }
    CharacterSet cs;
    try {
        cs = merge_declared(a, find_rational_characters(a));
    } catch (const CharacterOverflowError& e) {
        return fail(3, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(2, e.what());
    }
    Json j = character_set_to_json(cs);
    j["label"] = a.label();
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_construct(const std::string& kind, const std::vector<std::string>& inputs,
                  const std::string& theta_flag, const std::vector<std::string>& seeds,
                  const std::string& out_path) {
    std::vector<Algebra> ins;
    try {
        for (const auto& p : inputs) ins.push_back(load_or_throw(p));
    } catch (const std::exception& e) {
        return fail(2, e.what());
    }
    auto need = [&](std::size_t n) { return ins.size() == n; };
    Algebra result;
    try {
        if (kind == "lau") {
            if (!need(2)) return fail(2, "lau takes two input files");
            QVector theta(ins[1].dim(), Rational(0));
            std::string tdesc = "0";
            if (theta_flag != "zero") {
                std::size_t idx = std::stoul(theta_flag);
                CharacterSet cs = merge_declared(ins[1], find_rational_characters(ins[1]));
                if (idx >= cs.characters.size())
                    return fail(2, "theta index " + theta_flag + " out of range (found " +
                                       std::to_string(cs.characters.size()) + " characters)");
                theta = cs.characters[idx].values;
                tdesc = "chi" + theta_flag;
            }
            result = lau_product(ins[0], ins[1], theta);
            result.set_label("lau(" + ins[0].label() + "," + ins[1].label() + ";theta=" + tdesc +
                             ")");
        } else if (kind == "sum") {
            if (!need(2)) return fail(2, "sum takes two input files");
            result = direct_sum(ins[0], ins[1]);
            result.set_label("sum(" + ins[0].label() + "," + ins[1].label() + ")");
        } else if (kind == "tensor") {
            if (!need(2)) return fail(2, "tensor takes two input files");
            result = tensor(ins[0], ins[1]);
            result.set_label("tensor(" + ins[0].label() + "," + ins[1].label() + ")");
        } else if (kind == "unitize") {
            if (!need(1)) return fail(2, "unitize takes one input file");
            result = unitize(ins[0]);
            result.set_label("unitize(" + ins[0].label() + ")");
        } else if (kind == "op") {
            if (!need(1)) return fail(2, "op takes one input file");
            result = opposite(ins[0]);
            result.set_label("op(" + ins[0].label() + ")");
        } else if (kind == "quotient") {
            if (!need(1)) return fail(2, "quotient takes one input file");
            if (seeds.empty()) return fail(2, "quotient needs at least one --seed vector");
            std::vector<QVector> seedvecs;
            for (const auto& s : seeds) {
                QVector v;
                std::stringstream ss(s);
                std::string tok;
                while (std::getline(ss, tok, ',')) v.push_back(parse_rational(tok));
                if (v.size() != ins[0].dim())
                    return fail(2, "seed vector '" + s + "' has length " +
                                       std::to_string(v.size()) + ", expected " +
                                       std::to_string(ins[0].dim()));
                seedvecs.push_back(std::move(v));
            }
            IdealSubspace ideal = ideal_generated_by(ins[0], seedvecs);
            std::cerr << "ideal closure has dimension " << ideal.space.dim() << "\n";
            result = quotient(ins[0], ideal).quotient;
            result.set_label("quotient(" + ins[0].label() + ";ideal-dim=" +
                             std::to_string(ideal.space.dim()) + ")");
        } else {
            return fail(2, "unknown construction kind: " + kind);
        }
    } catch (const std::exception& e) {
        return fail(2, e.what());
    }
    std::string text = write_algebra_file(result);
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) return fail(2, "cannot open " + out_path + " for writing");
        out << text;
    }
    return 0;
}

int cmd_check(const std::string& theorem, std::uint64_t seed, std::size_t trials,
              std::size_t max_dim, const std::string& witness_dir, bool as_json,
              bool negate, const std::string& reverify_path) {
    RunConfig cfg;
    cfg.seed = seed;
    cfg.trials = trials;
    cfg.max_dim = max_dim;
    cfg.negate_conclusions = negate;
    try {
        Auditor auditor(cfg);
        if (!reverify_path.empty()) {
            std::ifstream in(reverify_path);
            if (!in) return fail(2, "cannot read witness " + reverify_path);
            Json w = Json::parse(in);
            bool repro = auditor.reverify(w);
            std::cout << (repro ? "witness reproduces\n" : "witness does not reproduce\n");
            return repro ? 1 : 0;
        }
        Auditor::Summary summary;
        summary.config = cfg;
        if (theorem == "all") {
            summary = auditor.run_all();
        } else {
            CheckOutcome o = auditor.run_check(theorem);
            summary.counterexample_found = !o.counterexamples.empty();
            summary.outcomes.push_back(std::move(o));
        }
        std::size_t written = 0;
        for (const auto& o : summary.outcomes) {
            for (std::size_t k = 0; k < o.counterexamples.size(); ++k) {
                std::filesystem::create_directories(witness_dir);
                std::string id = o.id;
                for (auto& ch : id)
                    if (ch == '/' || ch == '.') ch = '_';
                std::string wpath =
                    witness_dir + "/" + id + "-" + std::to_string(k) + ".json";
                std::ofstream out(wpath, std::ios::binary);
                out << o.counterexamples[k].dump(2) << "\n";
                ++written;
            }
        }
        if (as_json) {
            std::cout << summary_to_json(summary).dump(2) << "\n";
        } else {
            std::cout << summary_to_text(summary);
            if (written) std::cout << written << " witness file(s) written to " << witness_dir << "\n";
        }
        return summary.counterexample_found ? 1 : 0;
    } catch (const std::invalid_argument& e) {
        return fail(2, e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classifier for weak-amenability variants of finite-dimensional "
                 "rational algebras"};
    app.require_subcommand(1);

    std::string path, chars_mode = "auto", out_path, theta_flag = "zero";
    std::string kind;
    std::vector<std::string> inputs, seeds;
    std::string theorem = "all", witness_dir = "witnesses", reverify_path;
    std::uint64_t seed = 1;
    std::size_t trials = 50, max_dim = 8;
    bool as_json = false, negate = false;

    auto* v = app.add_subcommand("validate", "check an algebra file against the axioms");
    v->add_option("path", path)->required();

    auto* an = app.add_subcommand("analyze", "full classification report to stdout");
    an->add_option("path", path)->required();
    an->add_option("--chars", chars_mode)->check(CLI::IsMember({"auto", "declared-only"}));

    auto* ch = app.add_subcommand("characters", "list rational characters");
    ch->add_option("path", path)->required();

    auto* co = app.add_subcommand("construct", "build a derived algebra file");
    co->add_option("kind", kind)->required()
        ->check(CLI::IsMember({"lau", "sum", "unitize", "tensor", "op", "quotient"}));
    co->add_option("inputs", inputs)->required();
    co->add_option("--theta", theta_flag,
                   "character index into the second factor's list, or 'zero'");
    co->add_option("--seed", seeds, "ideal seed vector, comma-separated rationals (repeatable)");
    co->add_option("-o,--output", out_path);

    auto* ck = app.add_subcommand("check", "audit theorem statements on seeded instances");
    ck->add_option("--theorem", theorem, "registry id or 'all'");
    ck->add_option("--seed", seed);
    ck->add_option("--trials", trials);
    ck->add_option("--max-dim", max_dim);
    ck->add_option("--witness-dir", witness_dir);
    ck->add_option("--reverify", reverify_path, "reload a witness file and re-run its check");
    ck->add_flag("--json", as_json, "machine-readable summary");
    ck->add_flag("--negate-conclusions", negate, "self-test: flip every definite conclusion");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (v->parsed()) return cmd_validate(path);
    if (an->parsed()) return cmd_analyze(path, chars_mode);
    if (ch->parsed()) return cmd_characters(path);
    if (co->parsed()) return cmd_construct(kind, inputs, theta_flag, seeds, out_path);
    if (ck->parsed())
        return cmd_check(theorem, seed, trials, max_dim, witness_dir, as_json, negate,
                         reverify_path);
    return 2;
}
