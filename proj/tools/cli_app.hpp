#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "omsv/omsv.hpp"
#include "omsv/oracle.hpp"

namespace omsv::cli {

/// Exit codes: 0 success, 1 false predicate verdict, 2 input error.
enum ExitCode { kOk = 0, kPredicateFalse = 1, kInputError = 2 };

namespace detail {

/// Loads an input argument: "-" reads the stream, a leading '{' is inline
/// JSON, anything else is a file path. Raw text is appended to the digest
/// material so identical inputs give identical digests.
class InputLoader {
public:
    explicit InputLoader(std::istream& in) : in_(in) {}

    [[nodiscard]] std::string raw(const std::string& spec) {
        std::string text;
        if (spec == "-") {
            std::ostringstream buffer;
            buffer << in_.rdbuf();
            text = buffer.str();
        } else if (!spec.empty() && (spec.front() == '{' || spec.front() == '[')) {
            text = spec;
        } else {
            std::ifstream file(spec);
            if (!file) throw std::invalid_argument("cannot open input file '" + spec + "'");
            std::ostringstream buffer;
            buffer << file.rdbuf();
            text = buffer.str();
        }
        material_ += text;
        material_ += '\0';
        return text;
    }

    [[nodiscard]] std::string inline_text(const std::string& text) {
        material_ += text;
        material_ += '\0';
        return text;
    }

    [[nodiscard]] Json json(const std::string& spec) {
        const std::string text = raw(spec);
        try {
            return Json::parse(text);
        } catch (const std::exception& e) {
            throw std::invalid_argument(std::string("malformed JSON input: ") + e.what());
        }
    }

    [[nodiscard]] ExactMatrix matrix(const std::string& spec) { return matrix_from_json(json(spec)); }
    [[nodiscard]] Chirotope chirotope(const std::string& spec) { return chirotope_from_json(json(spec)); }
    [[nodiscard]] GrassmannNecklace necklace(const std::string& spec) { return necklace_from_json(json(spec)); }

    [[nodiscard]] std::vector<Rational> vector(const std::string& text) {
        (void)inline_text(text);
        std::vector<Rational> out;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t next = text.find(',', pos);
            if (next == std::string::npos) next = text.size();
            out.push_back(parse_rational(text.substr(pos, next - pos)));
            pos = next + 1;
            if (next == text.size()) break;
        }
        return out;
    }

    [[nodiscard]] std::string digest() const { return content_digest(material_); }

private:
    std::istream& in_;
    std::string material_;
};

/// Either a chirotope directly or one derived from a matrix; several
/// commands accept both.
struct ChirotopeInput {
    std::string matrix_spec;
    std::string chirotope_spec;

    void attach(CLI::App* cmd) {
        auto* m = cmd->add_option("--matrix", matrix_spec, "matrix JSON (file, inline JSON, or - for stdin)");
        auto* c = cmd->add_option("--chirotope", chirotope_spec, "chirotope JSON (file, inline JSON, or - for stdin)");
        m->excludes(c);
    }

    [[nodiscard]] bool from_matrix() const { return !matrix_spec.empty(); }

    [[nodiscard]] Chirotope load(InputLoader& loader, std::optional<Subspace>* subspace_out = nullptr) const {
        if (from_matrix()) {
            const Subspace v = row_reduce(loader.matrix(matrix_spec));
            if (subspace_out) *subspace_out = v;
            return chirotope_of(v);
        }
        if (chirotope_spec.empty()) throw std::invalid_argument("need --matrix or --chirotope input");
        // Abstract chirotopes are accepted; the sanity gate is that their
        // derived cocircuits satisfy the cocircuit axioms.
        Chirotope c = loader.chirotope(chirotope_spec);
        const AxiomCheck check = check_cocircuit_axioms(cocircuits_of(c).cocircuits);
        if (!check.ok)
            throw std::invalid_argument("chirotope input rejected: derived cocircuits violate axiom " +
                                        check.axiom);
        return c;
    }
};

[[nodiscard]] inline std::vector<SignVector> parse_sign_vectors(const std::string& text) {
    std::vector<SignVector> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        out.push_back(SignVector::parse(text.substr(pos, next - pos)));
        pos = next + 1;
        if (next == text.size()) break;
    }
    return out;
}

[[nodiscard]] inline Json subsets_to_json(const std::vector<Subset>& sets) {
    Json out = Json::array();
    for (const Subset& s : sets) out.push_back(subset_to_json(s));
    return out;
}

}  // namespace detail

/// Parses argv, runs one subcommand, writes the result envelope to `out`
/// and errors to `err`. Deterministic: identical inputs produce
/// byte-identical output.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                   std::istream& in = std::cin) {
    CLI::App app{"Exact sign-variation computations on the Grassmannian and oriented matroids"};
    app.require_subcommand(1);

    detail::InputLoader loader(in);
    std::string command_name;
    Json result;
    int exit_code = kOk;
    std::optional<bool> oracle_agreement;

    // ---- signvar ----
    auto* signvar = app.add_subcommand("signvar", "var / varbar / alt of a sign vector");
    signvar->require_subcommand(1);
    std::string signvar_vector;
    for (const char* mode : {"var", "varbar", "alt"}) {
        auto* sub = signvar->add_subcommand(mode);
        sub->add_option("--vector", signvar_vector, "sign vector, e.g. \"+-0-\"")->required();
        sub->callback([&, mode]() {
            command_name = std::string("signvar ") + mode;
            const SignVector x = SignVector::parse(loader.inline_text(signvar_vector));
            if (std::string(mode) == "var") result = Json{{"var", var(x)}};
            else if (std::string(mode) == "varbar") result = Json{{"varbar", varbar(x)}};
            else result = Json{{"alt", alt(x).str()}};
        });
    }

    // ---- plucker ----
    auto* plucker = app.add_subcommand("plucker", "Plucker coordinates of the row space");
    std::string plucker_matrix;
    plucker->add_option("--matrix", plucker_matrix, "matrix JSON")->required();
    plucker->callback([&]() {
        command_name = "plucker";
        const Subspace v = row_reduce(loader.matrix(plucker_matrix));
        Json j = plucker_to_json(maximal_minors(v));
        j["pivots"] = subset_to_json(v.pivots());
        result = std::move(j);
    });

    // ---- chirotope ----
    auto* chirotope_cmd = app.add_subcommand("chirotope", "chirotope of the row space");
    std::string chirotope_matrix;
    chirotope_cmd->add_option("--matrix", chirotope_matrix, "matrix JSON")->required();
    chirotope_cmd->callback([&]() {
        command_name = "chirotope";
        result = chirotope_to_json(chirotope_of(row_reduce(loader.matrix(chirotope_matrix))));
    });

    // ---- om ----
    auto* om = app.add_subcommand("om", "oriented-matroid operations");
    om->require_subcommand(1);
    detail::ChirotopeInput om_input;
    std::string om_vectors;
    std::string om_subset;
    bool om_oracle = false;

    auto* om_cocircuits = om->add_subcommand("cocircuits", "cocircuits via the pivoting property");
    om_input.attach(om_cocircuits);
    om_cocircuits->callback([&]() {
        command_name = "om cocircuits";
        const Chirotope c = om_input.load(loader);
        Json list = Json::array();
        const CocircuitSet cs = cocircuits_of(c);
        for (const SignVector& x : cs.cocircuits) list.push_back(x.str());
        result = Json{{"n", c.n()}, {"k", c.k()}, {"cocircuits", std::move(list)}};
    });

    auto* om_covectors = om->add_subcommand("covectors", "covector closure of the cocircuits");
    om_input.attach(om_covectors);
    om_covectors->add_flag("--oracle", om_oracle, "cross-check against the feasibility oracle");
    om_covectors->callback([&]() {
        command_name = "om covectors";
        std::optional<Subspace> v;
        const Chirotope c = om_input.load(loader, &v);
        const auto covectors = covectors_of(cocircuits_of(c));
        Json list = Json::array();
        for (const SignVector& x : covectors) list.push_back(x.str());
        result = Json{{"n", c.n()}, {"k", c.k()}, {"count", covectors.size()}, {"covectors", std::move(list)}};
        if (om_oracle) {
            if (!v) throw std::invalid_argument("--oracle needs --matrix input");
            oracle_agreement = (oracle::covectors_of_subspace(*v) == covectors);
        }
    });

    auto* om_check = om->add_subcommand("check-axioms", "check the cocircuit axioms C0-C3");
    om_check->add_option("--vectors", om_vectors, "comma-separated sign vectors, e.g. \"0+-,0-+\"")->required();
    om_check->callback([&]() {
        command_name = "om check-axioms";
        const auto family = detail::parse_sign_vectors(loader.inline_text(om_vectors));
        const AxiomCheck check = check_cocircuit_axioms(family);
        result = Json{{"ok", check.ok}};
        if (!check.ok) {
            result["axiom"] = check.axiom;
            Json witnesses = Json::array();
            for (const SignVector& w : check.witnesses) witnesses.push_back(w.str());
            result["witnesses"] = std::move(witnesses);
            if (check.element) result["element"] = *check.element;
            exit_code = kPredicateFalse;
        }
    });

    auto* om_restrict = om->add_subcommand("restrict", "restriction to a ground subset");
    om_input.attach(om_restrict);
    om_restrict->add_option("--subset", om_subset, "ground subset, e.g. \"2,3\"")->required();
    om_restrict->callback([&]() {
        command_name = "om restrict";
        const Chirotope c = om_input.load(loader);
        result = chirotope_to_json(restrict(c, parse_subset(loader.inline_text(om_subset))));
    });

    auto* om_dual = om->add_subcommand("dual", "dual chirotope");
    om_input.attach(om_dual);
    om_dual->callback([&]() {
        command_name = "om dual";
        result = chirotope_to_json(dual(om_input.load(loader)));
    });

    // ---- check ----
    auto* check_cmd = app.add_subcommand("check", "total nonnegativity / positivity");
    check_cmd->require_subcommand(1);
    std::string check_matrix;
    bool check_oracle = false;
    for (const char* mode : {"tnn", "tp"}) {
        auto* sub = check_cmd->add_subcommand(mode);
        sub->add_option("--matrix", check_matrix, "matrix JSON")->required();
        sub->add_flag("--oracle", check_oracle, "cross-check via Gantmakher-Krein and the oracle");
        sub->callback([&, mode]() {
            command_name = std::string("check ") + mode;
            const Subspace v = row_reduce(loader.matrix(check_matrix));
            const bool tnn_mode = std::string(mode) == "tnn";
            const bool verdict = tnn_mode ? is_tnn(v) : is_tp(v);
            result = Json{{mode, verdict}};
            if (check_oracle) {
                const int bound = v.dim() - 1;
                const bool oracle_verdict = tnn_mode ? (oracle::max_var_brute(v) <= bound)
                                                     : (oracle::max_varbar_brute(v) <= bound);
                oracle_agreement = (verdict == oracle_verdict);
            }
            if (!verdict) exit_code = kPredicateFalse;
        });
    }

    // ---- criterion ----
    auto* criterion = app.add_subcommand("criterion", "chirotope sign-variation criterion");
    detail::ChirotopeInput criterion_input;
    criterion_input.attach(criterion);
    std::string criterion_mode;
    int criterion_m = 0;
    bool criterion_oracle = false;
    criterion->add_option("--mode", criterion_mode, "var or varbar")
        ->required()
        ->check(CLI::IsMember({"var", "varbar"}));
    criterion->add_option("--m", criterion_m, "variation bound m (>= k-1)")->required();
    criterion->add_flag("--oracle", criterion_oracle, "cross-check against the brute-force statistics");
    criterion->callback([&]() {
        command_name = "criterion";
        std::optional<Subspace> v;
        const Chirotope c = criterion_input.load(loader, &v);
        const bool var_mode = criterion_mode == "var";
        const CriterionReport report =
            var_mode ? var_bound_necessary(c, criterion_m) : varbar_bound_iff(c, criterion_m);
        result = criterion_report_to_json(report);
        result["mode"] = criterion_mode;
        if (criterion_oracle) {
            if (!v) throw std::invalid_argument("--oracle needs --matrix input");
            if (var_mode) {
                // Necessary criterion: never false when the bound truly holds;
                // exact on uniform chirotopes.
                const bool bound_holds = oracle::max_var_brute(*v) <= criterion_m;
                oracle_agreement = is_uniform(c) ? (report.holds == bound_holds) : (report.holds || !bound_holds);
            } else {
                oracle_agreement = (report.holds == (oracle::max_varbar_brute(*v) <= criterion_m));
            }
        }
        if (!report.holds) exit_code = kPredicateFalse;
    });

    // ---- maxvar ----
    auto* maxvar = app.add_subcommand("maxvar", "exact maximum sign variation over the covectors");
    detail::ChirotopeInput maxvar_input;
    maxvar_input.attach(maxvar);
    bool maxvar_oracle = false;
    maxvar->add_flag("--oracle", maxvar_oracle, "cross-check against the brute-force maximum");
    maxvar->callback([&]() {
        command_name = "maxvar";
        std::optional<Subspace> v;
        const Chirotope c = maxvar_input.load(loader, &v);
        const int value = max_var(c);
        result = Json{{"max_var", value}};
        if (maxvar_oracle) {
            if (!v) throw std::invalid_argument("--oracle needs --matrix input");
            oracle_agreement = (value == oracle::max_var_brute(*v));
        }
    });

    // ---- perturb ----
    auto* perturb_cmd = app.add_subcommand("perturb", "apply i->eps j perturbation steps");
    detail::ChirotopeInput perturb_input;
    perturb_input.attach(perturb_cmd);
    std::string perturb_steps;
    perturb_cmd->add_option("--steps", perturb_steps, "comma-separated steps, e.g. \"1->-4,2->+3\"")->required();
    perturb_cmd->callback([&]() {
        command_name = "perturb";
        const auto steps = parse_steps(loader.inline_text(perturb_steps));
        if (perturb_input.from_matrix()) {
            Subspace v = row_reduce(loader.matrix(perturb_input.matrix_spec));
            Json alphas = Json::array();
            for (const PerturbationStep& s : steps) {
                auto [w, alpha] = realize_step(v, s);
                v = std::move(w);
                alphas.push_back(rational_str(alpha));
            }
            result = Json{{"alphas", std::move(alphas)},
                          {"subspace", subspace_to_json(v)},
                          {"chirotope", chirotope_to_json(chirotope_of(v))}};
        } else {
            Chirotope c = loader.chirotope(perturb_input.chirotope_spec);
            for (const PerturbationStep& s : steps) c = perturb(c, s);
            result = chirotope_to_json(c);
        }
    });

    // ---- schedule ----
    auto* schedule_cmd = app.add_subcommand("schedule", "uniformizing perturbation schedules");
    std::string schedule_kind;
    int schedule_n = 0;
    int schedule_k = 0;
    std::optional<int> schedule_m;
    int schedule_offset = 0;
    schedule_cmd->add_option("--kind", schedule_kind, "cyclic-forward | cyclic-backward | sweep-k | sweep-nk")
        ->required();
    schedule_cmd->add_option("--n", schedule_n, "ground-set size")->required();
    schedule_cmd->add_option("--k", schedule_k, "rank")->required();
    schedule_cmd->add_option("--m", schedule_m, "variation bound (parity used by the cyclic kinds)");
    schedule_cmd->add_option("--offset", schedule_offset, "start offset within the cyclic sequence");
    schedule_cmd->callback([&]() {
        command_name = "schedule";
        (void)loader.inline_text(schedule_kind + "|" + std::to_string(schedule_n) + "|" +
                                 std::to_string(schedule_k));
        const Schedule sched =
            make_schedule(parse_schedule_kind(schedule_kind), schedule_n, schedule_k, schedule_m, schedule_offset);
        Json steps = Json::array();
        for (const PerturbationStep& s : sched.steps) steps.push_back(step_str(s));
        result = Json{{"kind", schedule_kind}, {"n", schedule_n}, {"k", schedule_k},
                      {"length", sched.steps.size()}, {"steps", std::move(steps)}};
    });

    // ---- uniformize ----
    auto* uniformize_cmd = app.add_subcommand("uniformize", "fold a schedule of perturbations");
    detail::ChirotopeInput uniformize_input;
    uniformize_input.attach(uniformize_cmd);
    std::string uniformize_kind = "sweep-k";
    std::optional<int> uniformize_m;
    uniformize_cmd->add_option("--kind", uniformize_kind, "schedule kind (default sweep-k)");
    uniformize_cmd->add_option("--m", uniformize_m, "variation bound (parity used by the cyclic kinds)");
    uniformize_cmd->callback([&]() {
        command_name = "uniformize";
        const Chirotope c = uniformize_input.load(loader);
        const Chirotope u =
            uniformize(c, make_schedule(parse_schedule_kind(uniformize_kind), c.n(), c.k(), uniformize_m));
        result = chirotope_to_json(u);
        result["uniform"] = is_uniform(u);
    });

    // ---- densify ----
    auto* densify_cmd = app.add_subcommand("densify", "perturb into a generic subspace, preserving max var");
    std::string densify_matrix;
    densify_cmd->add_option("--matrix", densify_matrix, "matrix JSON")->required();
    densify_cmd->callback([&]() {
        command_name = "densify";
        const Subspace v = row_reduce(loader.matrix(densify_matrix));
        const Subspace w = densify(v);
        result = Json{{"subspace", subspace_to_json(w)},
                      {"generic", is_uniform(chirotope_of(w))},
                      {"max_var", max_var(w)}};
    });

    // ---- amplituhedron ----
    auto* amplituhedron_cmd = app.add_subcommand("amplituhedron", "well-definedness of the amplituhedron map");
    std::string amplituhedron_z;
    int amplituhedron_k = 0;
    bool amplituhedron_tp = false;
    bool amplituhedron_witness = false;
    bool amplituhedron_oracle = false;
    amplituhedron_cmd->add_option("--z", amplituhedron_z, "Z matrix JSON")->required();
    amplituhedron_cmd->add_option("--k", amplituhedron_k, "dimension k of the source subspaces")->required();
    amplituhedron_cmd->add_flag("--tp", amplituhedron_tp, "test the map on the totally positive part");
    amplituhedron_cmd->add_flag("--witness", amplituhedron_witness, "include the witness on failure");
    amplituhedron_cmd->add_flag("--oracle", amplituhedron_oracle, "cross-check via kernel covector enumeration");
    amplituhedron_cmd->callback([&]() {
        command_name = "amplituhedron";
        const ExactMatrix z = loader.matrix(amplituhedron_z);
        const AmplituhedronVerdict verdict =
            amplituhedron_tp ? well_defined_tp(z, amplituhedron_k) : well_defined_tnn(z, amplituhedron_k);
        result = amplituhedron_verdict_to_json(verdict, amplituhedron_tp, amplituhedron_witness);
        if (amplituhedron_oracle) {
            bool oracle_verdict;
            if (amplituhedron_tp) {
                oracle_verdict = true;
                for (const SignVector& x : oracle::covectors_of_subspace(kernel(z))) {
                    if (x.is_zero()) continue;
                    if (varbar(x) < amplituhedron_k) { oracle_verdict = false; break; }
                }
            } else {
                oracle_verdict = oracle::amplituhedron_brute(z, amplituhedron_k);
            }
            oracle_agreement = (verdict.well_defined == oracle_verdict);
        }
        if (!verdict.well_defined) exit_code = kPredicateFalse;
    });

    // ---- extend ----
    auto* extend = app.add_subcommand("extend", "extend a vector to a TNN / TP subspace");
    extend->require_subcommand(1);
    std::string extend_vector;
    int extend_k = 0;
    for (const char* mode : {"nonneg", "pos"}) {
        auto* sub = extend->add_subcommand(mode);
        sub->add_option("--vector", extend_vector, "rational vector, e.g. \"1,-3,-5,0\"")->required();
        sub->add_option("--k", extend_k, "target dimension")->required();
        sub->callback([&, mode]() {
            command_name = std::string("extend ") + mode;
            const auto v = loader.vector(extend_vector);
            const Subspace ext = (std::string(mode) == "nonneg") ? extend_nonneg(v, extend_k)
                                                                 : extend_pos(v, extend_k);
            result = Json{{"subspace", subspace_to_json(ext)}};
        });
    }

    // ---- positroid ----
    auto* positroid = app.add_subcommand("positroid", "positroid data of a TNN subspace");
    positroid->require_subcommand(1);
    std::string positroid_matrix;
    std::string positroid_necklace;
    std::string positroid_subset;
    bool positroid_from_sign_data = false;
    bool positroid_oracle = false;

    auto* positroid_matroid = positroid->add_subcommand("matroid", "bases of the matroid");
    positroid_matroid->add_option("--matrix", positroid_matrix, "matrix JSON")->required();
    positroid_matroid->add_flag("--oracle", positroid_oracle, "cross-check with raw minors of the input");
    positroid_matroid->callback([&]() {
        command_name = "positroid matroid";
        const ExactMatrix m = loader.matrix(positroid_matrix);
        const auto bases_list = matroid_of(row_reduce(m));
        result = Json{{"bases", detail::subsets_to_json(bases_list)}};
        if (positroid_oracle) oracle_agreement = (oracle::matroid_brute(m) == bases_list);
    });

    auto* positroid_schubert = positroid->add_subcommand("schubert", "Schubert cell (lex min of the matroid)");
    positroid_schubert->add_option("--matrix", positroid_matrix, "matrix JSON")->required();
    positroid_schubert->add_flag("--from-signs", positroid_from_sign_data, "use the sign-vector path (TNN only)");
    positroid_schubert->callback([&]() {
        command_name = "positroid schubert";
        const Subspace v = row_reduce(loader.matrix(positroid_matrix));
        Subset cell;
        if (positroid_from_sign_data) {
            cell = schubert_from_signs(v);
        } else {
            const auto m = matroid_of(v);
            cell = *std::min_element(m.begin(), m.end());
        }
        result = Json{{"schubert", subset_to_json(cell)}};
    });

    auto* positroid_necklace_cmd = positroid->add_subcommand("necklace", "Grassmann necklace");
    positroid_necklace_cmd->add_option("--matrix", positroid_matrix, "matrix JSON")->required();
    positroid_necklace_cmd->add_flag("--from-signs", positroid_from_sign_data,
                                     "use the sign-vector path (TNN only)");
    positroid_necklace_cmd->callback([&]() {
        command_name = "positroid necklace";
        const Subspace v = row_reduce(loader.matrix(positroid_matrix));
        const GrassmannNecklace neck = positroid_from_sign_data ? necklace_from_signs(v) : necklace_of(v);
        result = necklace_to_json(neck);
    });

    auto* positroid_from_neck = positroid->add_subcommand("from-necklace", "positroid bases via Oh's theorem");
    positroid_from_neck->add_option("--necklace", positroid_necklace, "necklace JSON")->required();
    positroid_from_neck->callback([&]() {
        command_name = "positroid from-necklace";
        const Positroid p = positroid_from_necklace(loader.necklace(positroid_necklace));
        result = Json{{"n", p.n}, {"k", p.k}, {"bases", detail::subsets_to_json(p.bases)}};
    });

    auto* positroid_basis_test = positroid->add_subcommand("basis-test", "basis membership");
    positroid_basis_test->add_option("--matrix", positroid_matrix, "matrix JSON")->required();
    positroid_basis_test->add_option("--subset", positroid_subset, "candidate basis, e.g. \"1,3,5\"")->required();
    positroid_basis_test->add_flag("--from-signs", positroid_from_sign_data,
                                   "use the 2k-sign-pattern path (TNN only)");
    positroid_basis_test->callback([&]() {
        command_name = "positroid basis-test";
        const Subspace v = row_reduce(loader.matrix(positroid_matrix));
        const Subset j = parse_subset(loader.inline_text(positroid_subset));
        const bool verdict = positroid_from_sign_data ? basis_test_signs(v, j)
                                                      : (maximal_minors(v).at(j) != 0);
        result = Json{{"basis", verdict}};
        if (!verdict) exit_code = kPredicateFalse;
    });

    // ---- oracle ----
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force reference computations");
    oracle_cmd->require_subcommand(1);
    std::string oracle_matrix;
    int oracle_k = 0;
    int oracle_budget_n = 8;

    auto* oracle_covectors = oracle_cmd->add_subcommand("covectors", "covectors by exact feasibility");
    oracle_covectors->add_option("--matrix", oracle_matrix, "matrix JSON")->required();
    oracle_covectors->add_option("--budget", oracle_budget_n, "maximum ambient dimension (default 8)");
    oracle_covectors->callback([&]() {
        command_name = "oracle covectors";
        oracle::OracleBudget budget;
        budget.max_n = oracle_budget_n;
        const auto covectors = oracle::covectors_of_subspace(row_reduce(loader.matrix(oracle_matrix)), budget);
        Json list = Json::array();
        for (const SignVector& x : covectors) list.push_back(x.str());
        result = Json{{"count", covectors.size()}, {"covectors", std::move(list)}};
    });

    auto* oracle_maxvar = oracle_cmd->add_subcommand("maxvar", "max var / varbar over the covectors");
    oracle_maxvar->add_option("--matrix", oracle_matrix, "matrix JSON")->required();
    oracle_maxvar->add_option("--budget", oracle_budget_n, "maximum ambient dimension (default 8)");
    oracle_maxvar->callback([&]() {
        command_name = "oracle maxvar";
        oracle::OracleBudget budget;
        budget.max_n = oracle_budget_n;
        const Subspace v = row_reduce(loader.matrix(oracle_matrix));
        result = Json{{"max_var", oracle::max_var_brute(v, budget)},
                      {"max_varbar", oracle::max_varbar_brute(v, budget)}};
    });

    auto* oracle_matroid = oracle_cmd->add_subcommand("matroid", "matroid by raw minors of the input matrix");
    oracle_matroid->add_option("--matrix", oracle_matrix, "matrix JSON")->required();
    oracle_matroid->callback([&]() {
        command_name = "oracle matroid";
        result = Json{{"bases", detail::subsets_to_json(oracle::matroid_brute(loader.matrix(oracle_matrix)))}};
    });

    auto* oracle_amplituhedron = oracle_cmd->add_subcommand("amplituhedron", "verdict by kernel covector scan");
    oracle_amplituhedron->add_option("--matrix", oracle_matrix, "Z matrix JSON")->required();
    oracle_amplituhedron->add_option("--k", oracle_k, "dimension k")->required();
    oracle_amplituhedron->add_option("--budget", oracle_budget_n, "maximum ambient dimension (default 8)");
    oracle_amplituhedron->callback([&]() {
        command_name = "oracle amplituhedron";
        oracle::OracleBudget budget;
        budget.max_n = oracle_budget_n;
        const bool verdict = oracle::amplituhedron_brute(loader.matrix(oracle_matrix), oracle_k, budget);
        result = Json{{"well_defined", verdict}};
        if (!verdict) exit_code = kPredicateFalse;
    });

    // ---- parse and emit ----
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("omsv");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            std::stringstream help;
            const int code = app.exit(e, help, help);
            out << help.str();
            return code;
        }
        err << Json{{"error", e.what()}}.dump(2) << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        err << Json{{"error", e.what()}}.dump(2) << "\n";
        return kInputError;
    }

    Json envelope{{"command", command_name}, {"input_digest", loader.digest()}, {"result", std::move(result)}};
    if (oracle_agreement) envelope["oracle_agreement"] = *oracle_agreement;
    out << envelope.dump(2) << "\n";
    return exit_code;
}

}  // namespace omsv::cli
