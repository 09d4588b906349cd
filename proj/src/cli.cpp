/*
   Copyright 2026 The hilbcurve Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "hilbcurve/cli.hpp"

#include "hilbcurve/chart_mu.hpp"
#include "hilbcurve/chart_un.hpp"
#include "hilbcurve/components.hpp"
#include "hilbcurve/dimcheck.hpp"
#include "hilbcurve/json_io.hpp"
#include "hilbcurve/poly_expr.hpp"
#include "hilbcurve/strata.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>

namespace hilbcurve::cli {

namespace {

class InputError : public Error {
  public:
    using Error::Error;
};

std::vector<unsigned> parse_uint_list(const std::string& text, const char* what) {
    std::vector<unsigned> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw InputError(std::string("malformed ") + what + " '" + text + "'");
        out.push_back(static_cast<unsigned>(std::stoul(item)));
    }
    if (out.empty()) throw InputError(std::string("empty ") + what);
    return out;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

Partition partition_arg(const std::vector<unsigned>& parts, const char* what) {
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i] == 0 || (i > 0 && parts[i] > parts[i - 1]))
            throw InputError(std::string("malformed partition for ") + what +
                             ": parts must be positive and weakly decreasing");
    return Partition(parts);
}

UniPoly x_poly(const std::string& text, const char* flag) {
    try {
        return to_unipoly(*parse_poly(text));
    } catch (const Error& e) {
        throw InputError(std::string(flag) + ": " + e.what());
    }
}

ChartIdealN ideal_arg(const std::string& a_text, const std::string& b_text) {
    UniPoly a = x_poly(a_text, "--a");
    UniPoly b = b_text.empty() ? UniPoly() : x_poly(b_text, "--b");
    if (!a.is_monic() || *a.degree() == 0) throw InputError("--a must be monic of degree >= 1, got " + a.to_string());
    return {a, b};
}

Json header(const std::string& command) {
    Json j;
    j["schema"] = kSchema;
    j["command"] = command;
    return j;
}

unsigned require(const std::optional<unsigned>& v, const char* flag) {
    if (!v) throw InputError(std::string(flag) + " is required");
    return *v;
}

unsigned require_positive(const std::optional<unsigned>& v, const char* flag) {
    unsigned value = require(v, flag);
    if (value == 0) throw InputError(std::string(flag) + " must be positive");
    return value;
}

struct Outcome {
    explicit Outcome(Json d) : doc(std::move(d)) {}

    Json doc;
    bool verified = true;
    std::string warning;
};

Outcome cmd_components(const CommandConfig& c) {
    const unsigned n = require(c.n, "--n");
    if (c.beta && !c.branches.empty()) throw InputError("use either --beta or --branches, not both");
    std::vector<unsigned> betas = c.branches;
    if (betas.empty()) betas.push_back(require_positive(c.beta, "--beta"));
    for (unsigned b : betas)
        if (b == 0) throw InputError("branch multiplicities must be positive");
    const CurveSpec spec = CurveSpec::from_multiplicities(betas);

    Outcome o{header("components")};
    o.doc["n"] = n;
    Json branches = Json::array();
    for (const auto& b : spec.branches()) branches.push_back({{"label", b.label}, {"beta", b.beta}});
    o.doc["branches"] = branches;
    const auto comps = components_curve(n, spec);
    Json list = Json::array();
    for (const auto& comp : comps) list.push_back(component_to_json(comp));
    o.doc["components"] = list;
    o.doc["count"] = comps.size();
    o.doc["dim"] = n;
    const Integer gf = count_components(n, spec);
    o.doc["generating_function_count"] = gf.get_str();
    o.verified = gf == Integer(static_cast<unsigned long>(comps.size()));
    return o;
}

Outcome cmd_membership(const CommandConfig& c) {
    const ChartIdealN ideal = ideal_arg(c.a_text, c.b_text);
    const unsigned beta = require_positive(c.beta, "--beta");
    Outcome o{header("membership")};
    o.doc["ideal"] = ideal_to_json(ideal);
    o.doc["text"] = ideal_to_text(ideal);
    o.doc["beta"] = beta;
    const bool contains = contains_power_y(ideal, beta);
    const bool oracle = oracle_nilpotency(ideal, beta);
    o.doc["contains"] = contains;
    o.doc["oracle_agrees"] = contains == oracle;
    if (!c.f_text.empty()) {
        MultiPoly f = [&] {
            try {
                return to_multipoly(*parse_poly(c.f_text));
            } catch (const Error& e) {
                throw InputError(std::string("--f: ") + e.what());
            }
        }();
        o.doc["f"] = f.to_string();
        o.doc["contains_f"] = contains_poly(ideal, f);
    }
    o.verified = contains == oracle;
    return o;
}

Outcome cmd_stratum(const CommandConfig& c) {
    const unsigned beta = require_positive(c.beta, "--beta");
    if (c.mults.empty()) throw InputError("--mults is required");
    if (c.points.size() != c.mults.size()) throw InputError("--points must list one point per multiplicity");
    StratumPoint pt;
    pt.beta = beta;
    for (unsigned m : c.mults)
        if (m == 0) throw InputError("multiplicities must be positive");
    pt.mults = c.mults;
    for (const auto& p : c.points) {
        try {
            pt.points.push_back(parse_rational(p));
        } catch (const Error& e) {
            throw InputError(std::string("--points: ") + e.what());
        }
    }
    const StratumLabel label = pt.label();
    if (classify_case(label) == StratumCase::General)
        pt.alpha = c.alpha_text.empty() ? UniPoly::constant(1) : x_poly(c.alpha_text, "--alpha");
    else if (!c.alpha_text.empty())
        throw InputError("--alpha is not allowed in the special case (b = 0)");

    ChartIdealN ideal = [&] {
        try {
            return build_stratum_ideal(pt);
        } catch (const Error& e) {
            throw InputError(e.what());
        }
    }();
    Outcome o{header("stratum")};
    o.doc["label"] = label_to_json(label);
    o.doc["ideal"] = ideal_to_json(ideal);
    o.doc["text"] = ideal_to_text(ideal);
    const bool member = contains_power_y(ideal, beta);
    const Partition profile = hilbert_chow_profile(ideal);
    o.doc["contains_power_y"] = member;
    o.doc["profile"] = partition_to_json(profile);
    o.verified = member && profile == label.mults;
    return o;
}

Outcome cmd_profile(const CommandConfig& c) {
    const ChartIdealN ideal = ideal_arg(c.a_text, "");
    Outcome o{header("profile")};
    o.doc["n"] = ideal.n();
    o.doc["a"] = coeffs_to_json(ideal.a());
    Json factors = Json::array();
    for (const auto& f : squarefree_decomposition(ideal.a()))
        factors.push_back({{"factor", coeffs_to_json(f.factor)}, {"text", f.factor.to_string()}, {"multiplicity", f.multiplicity}});
    o.doc["squarefree"] = factors;
    o.doc["profile"] = partition_to_json(hilbert_chow_profile(ideal));
    return o;
}

Outcome cmd_chart(const CommandConfig& c) {
    if (c.mu.empty()) throw InputError("--mu is required");
    const Partition mu = partition_arg(c.mu, "--mu");
    const ChartPresentation pres = build_presentation(mu);
    Outcome o{header("chart")};
    o.doc["mu"] = partition_to_json(mu);
    o.doc["n"] = mu.size();
    auto monomials = [](const std::vector<Monomial>& ms) {
        Json out = Json::array();
        for (const auto& m : ms) out.push_back(to_string(m));
        return out;
    };
    o.doc["basis"] = monomials(pres.basis);
    o.doc["border"] = monomials(pres.border);
    o.doc["corners"] = monomials(pres.corners);
    o.doc["variables"] = pres.variables->names();
    o.doc["variable_count"] = pres.variables->size();
    Json shared = Json::object();
    for (const auto& [name, expr] : pres.shared) shared[name] = expr.to_string();
    o.doc["shared"] = shared;
    o.doc["free_variables"] = pres.free_variables();
    Json rels = Json::array();
    for (const auto& r : commutator_relations(pres)) rels.push_back(multipoly_to_json(r));
    o.doc["relations"] = rels;
    if (c.zbeta) {
        const unsigned beta = *c.zbeta;
        if (beta == 0) throw InputError("--zbeta must be positive");
        const auto eqs = zbeta_equations(pres, beta);
        Json z;
        z["beta"] = beta;
        Json list = Json::array();
        for (const auto& e : eqs) list.push_back(multipoly_to_json(e));
        z["equations"] = list;
        z["inconsistent"] = zbeta_inconsistent(eqs);
        o.doc["zbeta"] = z;
        if (!rows_at_most(mu, beta)) {
            o.warning = "warning: " + to_string(mu) + " has more than " + std::to_string(beta) +
                        " rows, so Z_" + std::to_string(beta) + " does not meet this chart";
            o.doc["warning"] = o.warning;
        }
    }
    return o;
}

Outcome cmd_verify_dims(const CommandConfig& c) {
    const unsigned n = require_positive(c.n, "--n");
    const unsigned beta = require_positive(c.beta, "--beta");
    if (c.trials == 0) throw InputError("--trials must be positive");
    const DimReport report = verify_dims(n, beta, c.trials, c.seed);
    Outcome o{header("verify-dims")};
    o.doc["report"] = report_to_json(report);
    o.verified = report.pass();
    return o;
}

} // namespace

std::uint64_t seed_from_environment() {
    const char* env = std::getenv("HILB_SEED");
    if (env == nullptr || *env == '\0') return kDefaultSeed;
    std::string s(env);
    if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 19) return kDefaultSeed;
    return std::stoull(s);
}

ParsedCommand parse_command_line(const std::vector<std::string>& args, std::uint64_t default_seed) {
    CommandConfig config;
    config.seed = default_seed;
    CLI::App app{"Irreducible components of Hilbert schemes of points on non-reduced plane curves", "hilbcurve"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "human"}));

    std::string branches;
    std::string mults;
    std::string points;
    std::string mu;

    auto* components = app.add_subcommand("components", "Enumerate irreducible components");
    components->add_option("--n", config.n, "Number of points")->required();
    components->add_option("--beta", config.beta, "Multiplicity of the single branch y^beta = 0");
    components->add_option("--branches", branches, "Comma-separated branch multiplicities");

    auto* membership = app.add_subcommand("membership", "Test y^beta (and optionally f) in (a(x), y - b(x))");
    membership->add_option("--a", config.a_text, "Monic polynomial a(x)")->required();
    membership->add_option("--b", config.b_text, "Polynomial b(x)")->required();
    membership->add_option("--beta", config.beta, "Power of y")->required();
    membership->add_option("--f", config.f_text, "Polynomial f(x, y) to test");

    auto* stratum = app.add_subcommand("stratum", "Build an ideal of the stratum C_{m_1..m_s}");
    stratum->add_option("--mults", mults, "Comma-separated multiplicities")->required();
    stratum->add_option("--beta", config.beta, "Curve multiplicity")->required();
    stratum->add_option("--points", points, "Comma-separated distinct rational roots")->required();
    stratum->add_option("--alpha", config.alpha_text, "Cofactor alpha(x), default 1");

    auto* profile = app.add_subcommand("profile", "Hilbert-Chow multiplicity profile of a(x)");
    profile->add_option("--a", config.a_text, "Monic polynomial a(x)")->required();

    auto* chart = app.add_subcommand("chart", "Relation system of the chart U_mu");
    chart->add_option("--mu", mu, "Comma-separated partition")->required();
    chart->add_option("--zbeta", config.zbeta, "Also emit the Z_beta equations");

    auto* verify = app.add_subcommand("verify-dims", "Check stratum dimensions at sampled points");
    verify->add_option("--n", config.n, "Number of points")->required();
    verify->add_option("--beta", config.beta, "Curve multiplicity")->required();
    verify->add_option("--trials", config.trials, "Samples per stratum");
    verify->add_option("--seed", config.seed, "Seed (default: HILB_SEED or " + std::to_string(kDefaultSeed) + ")");

    ParsedCommand result;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        config.subcommand = app.get_subcommands().front()->get_name();
        config.format = format == "human" ? OutputFormat::Human : OutputFormat::Json;
        if (!branches.empty()) config.branches = parse_uint_list(branches, "branch list");
        if (!mults.empty()) config.mults = parse_uint_list(mults, "multiplicity list");
        if (!points.empty()) config.points = split_list(points);
        if (!mu.empty()) config.mu = parse_uint_list(mu, "partition");
    } catch (const CLI::CallForHelp&) {
        result.early_exit = {exit_code::ok, app.help(), ""};
        return result;
    } catch (const CLI::ParseError& e) {
        std::string msg = e.what();
        result.early_exit = {exit_code::input_error, "", "error: " + msg + "\n"};
        return result;
    } catch (const InputError& e) {
        result.early_exit = {exit_code::input_error, "", std::string("error: ") + e.what() + "\n"};
        return result;
    }
    result.config = std::move(config);
    return result;
}

CommandResult run(const CommandConfig& config) {
    static const std::map<std::string, std::function<Outcome(const CommandConfig&)>> commands{
        {"components", cmd_components}, {"membership", cmd_membership}, {"stratum", cmd_stratum},
        {"profile", cmd_profile},       {"chart", cmd_chart},           {"verify-dims", cmd_verify_dims},
    };
    auto it = commands.find(config.subcommand);
    if (it == commands.end()) return {exit_code::input_error, "", "error: unknown subcommand '" + config.subcommand + "'\n"};
    try {
        Outcome o = it->second(config);
        CommandResult r;
        r.out = config.format == OutputFormat::Json ? o.doc.dump(2) + "\n" : render_human(o.doc);
        if (!o.warning.empty()) r.err = o.warning + "\n";
        r.exit_code = o.verified ? exit_code::ok : exit_code::verification_failed;
        if (!o.verified) r.err += "verification failed\n";
        return r;
    } catch (const Error& e) {
        return {exit_code::input_error, "", std::string("error: ") + e.what() + "\n"};
    }
}

CommandResult run(const std::vector<std::string>& args, std::uint64_t default_seed) {
    ParsedCommand parsed = parse_command_line(args, default_seed);
    if (!parsed.config) return parsed.early_exit;
    return run(*parsed.config);
}

} // namespace hilbcurve::cli
