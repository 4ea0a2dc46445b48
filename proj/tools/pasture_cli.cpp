/*
 *   Copyright 2026 The pastures authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "pastures/errors.hpp"
#include "pastures/expr.hpp"
#include "pastures/hexagons.hpp"
#include "pastures/json_io.hpp"
#include "pastures/lifts.hpp"
#include "pastures/matroid.hpp"
#include "pastures/morphism.hpp"
#include "pastures/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace pastures;

namespace {

enum Exit { kOk = 0, kFalse = 1, kUnknown = 2, kUsage = 3 };

struct Globals {
    bool json = false;
    std::uint64_t max_candidates = 100000000;
    unsigned threads = 1;
};

void emit(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

std::string triple_str(const Pasture& p, const Triple& t) {
    return "{" + p.format(t[0]) + ", " + p.format(t[1]) + ", " + p.format(t[2]) + "}";
}

void print_pasture(const Pasture& p) {
    std::cout << (p.label().empty() ? "(unnamed)" : p.label()) << "\n";
    std::cout << "units: " << p.units().describe() << "\n";
    std::cout << "-1 = " << p.format(p.epsilon()) << "\n";
    std::cout << "null orbits: " << p.null_orbits().size() << "\n";
    for (const auto& t : p.null_orbits()) std::cout << "  " << triple_str(p, t) << "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidMatroid("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

LiftResult run_lift(const std::string& kind, PasturePtr p) {
    if (kind == "binary") return binary_lift(std::move(p));
    if (kind == "ternary") return ternary_lift(std::move(p));
    if (kind == "wlum") return wlum_lift(std::move(p));
    return grs_lift(std::move(p));
}

std::string images_str(const PastureMorphism& f) {
    std::string s = "[";
    for (std::size_t i = 0; i < f.images().size(); ++i)
        s += (i ? ", " : "") + f.target()->format(f.images()[i]);
    return s + "]";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pastures: hexagons, lifts and matroid representations"};
    app.require_subcommand(1);
    Globals g;
    app.add_flag("--json", g.json, "Machine-readable output");
    app.add_option("--max-candidates", g.max_candidates, "Search-space guard");
    app.add_option("--threads", g.threads, "Worker threads for enumeration")->check(CLI::Range(1u, 256u));
    app.fallthrough();

    std::string expr, expr2, kind = "ternary", matroid_path, suite;
    bool list = false;
    std::int64_t max_q = 64;
    const std::vector<std::string> kinds = {"binary", "ternary", "wlum", "grs"};

    auto* c_pasture = app.add_subcommand("pasture", "Describe a pasture");
    c_pasture->add_option("expr", expr)->required();

    auto* c_hex = app.add_subcommand("hexagons", "List hexagons");
    c_hex->add_option("expr", expr)->required();

    auto* c_lift = app.add_subcommand("lift", "Compute a lift");
    c_lift->add_option("--kind", kind)->check(CLI::IsMember(kinds));
    c_lift->add_option("expr", expr)->required();

    auto* c_hom = app.add_subcommand("hom", "Count morphisms");
    c_hom->add_option("source", expr)->required();
    c_hom->add_option("target", expr2)->required();
    c_hom->add_flag("--list", list);

    auto* c_iso = app.add_subcommand("iso", "Decide isomorphism");
    c_iso->add_option("left", expr)->required();
    c_iso->add_option("right", expr2)->required();

    auto* c_reps = app.add_subcommand("reps", "Rescaling classes of representations");
    c_reps->add_option("--matroid", matroid_path)->required();
    c_reps->add_option("--pasture", expr)->required();
    c_reps->add_flag("--list", list);

    auto* c_check = app.add_subcommand("lift-check", "Compare classes over a lift and its base");
    c_check->add_option("--matroid", matroid_path)->required();
    c_check->add_option("--pasture", expr)->required();
    c_check->add_option("--kind", kind)->check(CLI::IsMember(kinds));

    auto* c_verify = app.add_subcommand("verify", "Run a verification suite");
    std::vector<std::string> suite_names = verify_suites();
    suite_names.push_back("all");
    c_verify->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names));
    c_verify->add_option("--max-q", max_q);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    HomOptions hom;
    hom.max_candidates = g.max_candidates;
    RepOptions rep;
    rep.max_candidates = g.max_candidates;
    rep.threads = g.threads;

    try {
        if (*c_pasture) {
            auto p = evaluate_pasture(expr);
            if (g.json)
                emit(pasture_json(*p));
            else
                print_pasture(*p);
            return kOk;
        }
        if (*c_hex) {
            auto p = evaluate_pasture(expr);
            auto hs = hexagons(*p);
            if (g.json) {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& h : hs) arr.push_back(hexagon_json(h));
                emit(arr);
            } else {
                std::cout << hs.size() << " hexagons\n";
                for (const auto& h : hs) {
                    auto six = ordered_hexagon(*p, h.canonical_pair);
                    std::cout << "  " << kind_name(h.kind) << " (mu = " << h.mu << "): ";
                    for (std::size_t i = 0; i < six.size(); ++i) std::cout << (i ? " " : "") << p->format(six[i]);
                    std::cout << "\n";
                }
            }
            return kOk;
        }
        if (*c_lift) {
            LiftResult r = run_lift(kind, evaluate_pasture(expr));
            if (g.json) {
                emit(lift_json(r));
            } else {
                std::cout << lift_kind_name(r.kind) << " lift\n";
                if (r.descriptor) std::cout << "factors: " << r.descriptor->str() << "\n";
                print_pasture(*r.lift);
                std::cout << "lambda: " << images_str(r.lambda) << "\n";
            }
            return kOk;
        }
        if (*c_hom) {
            auto homs = hom_set(evaluate_pasture(expr), evaluate_pasture(expr2), hom);
            if (g.json) {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& f : homs) arr.push_back(morphism_json(f));
                nlohmann::json j{{"count", homs.size()}};
                if (list) j["morphisms"] = arr;
                emit(j);
            } else {
                std::cout << homs.size() << "\n";
                if (list)
                    for (const auto& f : homs) std::cout << "  " << images_str(f) << "\n";
            }
            return kOk;
        }
        if (*c_iso) {
            IsoResult r = iso_check(evaluate_pasture(expr), evaluate_pasture(expr2), hom);
            const char* word = r.status == IsoStatus::Iso ? "iso" : r.status == IsoStatus::NotIso ? "not-iso" : "unknown";
            if (g.json) {
                nlohmann::json j{{"status", word}, {"reason", r.reason}};
                if (r.witness) j["witness"] = morphism_json(*r.witness);
                emit(j);
            } else {
                std::cout << word << (r.reason.empty() ? "" : ": " + r.reason) << "\n";
                if (r.witness) std::cout << "witness: " << images_str(*r.witness) << "\n";
            }
            return r.status == IsoStatus::Iso ? kOk : r.status == IsoStatus::NotIso ? kFalse : kUnknown;
        }
        if (*c_reps) {
            Matroid m = matroid_from_json(read_file(matroid_path));
            auto p = evaluate_pasture(expr);
            auto classes = representation_classes(m, *p, rep);
            if (g.json) {
                nlohmann::json j{{"count", classes.size()}};
                if (list) {
                    j["classes"] = nlohmann::json::array();
                    for (const auto& c : classes) j["classes"].push_back(representation_json(m, c));
                }
                emit(j);
            } else {
                std::cout << classes.size() << "\n";
                if (list)
                    for (const auto& c : classes) {
                        std::cout << " ";
                        for (std::size_t i = 0; i < c.values.size(); ++i) {
                            std::cout << " {";
                            for (std::size_t k = 0; k < m.bases()[i].size(); ++k)
                                std::cout << (k ? "," : "") << m.bases()[i][k];
                            std::cout << "}:" << p->format(c.values[i]);
                        }
                        std::cout << "\n";
                    }
            }
            return kOk;
        }
        if (*c_check) {
            Matroid m = matroid_from_json(read_file(matroid_path));
            LiftResult lift = run_lift(kind, evaluate_pasture(expr));
            BijectionReport r = lift_bijection_check(m, lift, rep);
            if (g.json)
                emit({{"ok", r.ok},
                      {"lift_classes", r.lift_classes},
                      {"source_classes", r.source_classes},
                      {"detail", r.detail}});
            else
                std::cout << (r.ok ? "bijective" : "not bijective") << ": " << r.lift_classes << " classes over "
                          << lift.lift->label() << ", " << r.source_classes << " over " << expr
                          << (r.detail.empty() ? "" : " (" + r.detail + ")") << "\n";
            return r.ok ? kOk : kFalse;
        }
        if (*c_verify) {
            VerifyOptions opt;
            opt.max_q = max_q;
            opt.hom = hom;
            opt.rep = rep;
            VerifyReport r = verify(suite, opt);
            if (g.json) {
                emit(r.to_json());
            } else {
                for (const auto& i : r.items)
                    std::cout << (i.pass ? "[PASS] " : "[FAIL] ") << i.name
                              << (i.detail.empty() ? "" : ": " + i.detail) << "\n";
                std::cout << (r.passed() ? "all passed" : "failures present") << "\n";
            }
            return r.passed() ? kOk : kFalse;
        }
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const NotPrimePower& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const InvalidMatroid& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const ExchangeAxiomViolation& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kUnknown;
    }
    return kUsage;
}
