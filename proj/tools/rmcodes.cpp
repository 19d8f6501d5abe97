// rmcodes: construct, transform and verify rank-metric codes over finite
// field towers. All I/O is JSON on stdin/stdout/files.
//
// Exit codes: 0 success, 1 a --self-dual/--mrd assertion failed,
// 2 input or usage error, 3 parameters refused by a nonexistence result.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "rmc/constructions.hpp"
#include "rmc/json_io.hpp"
#include "rmc/verify.hpp"

namespace {

using namespace rmc;
using gf::Level;
using io::json;

json read_json_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return json::parse(ss.str());
    }
    std::ifstream in(path);
    if (!in) fail(Errc::InvalidArgument, "cannot open '" + path + "'");
    json j;
    in >> j;
    return j;
}

void write_output(const json& j, const std::string& out_path) {
    std::string text = io::dump(j);
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) fail(Errc::InvalidArgument, "cannot open '" + out_path + "'");
        out << text;
    }
}

std::vector<gf::u32> parse_int_list(const std::string& text) {
    json j = json::parse(text);
    if (!j.is_array()) fail(Errc::InvalidArgument, "expected a JSON array");
    std::vector<gf::u32> out;
    for (const auto& c : j) out.push_back(c.get<gf::u32>());
    return out;
}

struct CodeInput {
    std::optional<codes::GabidulinCode> gab;
    std::optional<codes::DelsarteCode> del;
};

CodeInput load_code(const std::string& path) {
    json j = read_json_input(path);
    CodeInput in;
    if (j.contains("generators"))
        in.gab = io::code_from_json(j);
    else if (j.contains("basis"))
        in.del = io::delsarte_from_json(j);
    else
        fail(Errc::InvalidArgument, "input is neither a Gabidulin nor a matrix code");
    return in;
}

codes::LBasis resolve_basis(const gf::FieldTower& t, const std::string& spec,
                            const std::string& lambda_text) {
    if (spec.empty() || spec == "power") return codes::power_basis(t);
    if (spec == "orthonormal") return construct::orthonormal_basis_twisted_trace(t).alpha;
    if (spec == "dual") {
        gf::FieldElement lambda = lambda_text.empty()
                                      ? t.one(Level::Top)
                                      : io::element_from_json(t, Level::Top, json::parse(lambda_text));
        return construct::dual_basis(t, codes::power_basis(t), lambda);
    }
    // otherwise a file with {"alpha":[...]}; field block optional but checked
    json j = read_json_input(spec);
    if (j.is_object() && j.contains("field")) {
        gf::FieldTower ft = io::field_from_json(j.at("field"));
        if (!(ft == t)) fail(Errc::InvalidArgument, "basis file field does not match code field");
    }
    return io::basis_from_json(t, j);
}

int run(int argc, char** argv) {
    CLI::App app{"rank-metric codes over finite field towers"};
    app.require_subcommand(1);

    // field
    auto* cmd_field = app.add_subcommand("field", "build a field tower description");
    gf::u64 fp = 0;
    gf::u32 fe = 1, fm = 1;
    std::string base_poly_text, top_poly_text, out_path;
    cmd_field->add_option("--p", fp, "characteristic (prime)")->required();
    cmd_field->add_option("--e", fe, "degree of F_q over F_p");
    cmd_field->add_option("--m", fm, "degree of L over F_q");
    cmd_field->add_option("--base-poly", base_poly_text, "JSON coefficient list, constant first");
    cmd_field->add_option("--top-poly", top_poly_text, "JSON coefficient list over F_q");
    cmd_field->add_option("-o,--output", out_path, "output file (default stdout)");

    // construct
    auto* cmd_construct = app.add_subcommand("construct", "build a code");
    gf::u64 cq = 0, budget = codes::kDefaultBudget;
    gf::u32 cn = 0;
    std::string c0_path;
    std::size_t gk = 1;
    auto* sub_sd = cmd_construct->add_subcommand("self-dual-mrd", "self-dual MRD code, m = n");
    sub_sd->add_option("--q", cq, "base field size (prime power)")->required();
    sub_sd->add_option("--n", cn, "block length")->required();
    auto* sub_lag = cmd_construct->add_subcommand("lagrangian-mrd", "Lagrangian MRD code, q even");
    sub_lag->add_option("--q", cq, "base field size (power of two)")->required();
    sub_lag->add_option("--n", cn, "block length")->required();
    auto* sub_gab = cmd_construct->add_subcommand("gabidulin", "sigma-power code from c0");
    sub_gab->add_option("--c0", c0_path, "vector JSON file ({\"field\":...,\"vector\":[...]})")
        ->required();
    sub_gab->add_option("--k", gk, "dimension")->required();
    cmd_construct->require_subcommand(1);
    for (auto* s : {sub_sd, sub_lag, sub_gab}) {
        s->add_option("--budget", budget, "enumeration budget");
        s->add_option("-o,--output", out_path, "output file (default stdout)");
    }

    // basis
    auto* cmd_basis = app.add_subcommand("basis", "compute distinguished bases of L over F_q");
    std::string field_path, alpha_path, lambda_text;
    auto* sub_on = cmd_basis->add_subcommand("orthonormal", "orthonormal basis of a twisted trace form");
    sub_on->add_option("--field", field_path, "field JSON file")->required();
    sub_on->add_option("-o,--output", out_path, "output file");
    auto* sub_dual = cmd_basis->add_subcommand("dual", "dual basis for Tr(lambda x y)");
    sub_dual->add_option("--field", field_path, "field JSON file")->required();
    sub_dual->add_option("--alpha", alpha_path, "basis JSON file (default power basis)");
    sub_dual->add_option("--lambda", lambda_text, "element JSON (default 1)");
    sub_dual->add_option("-o,--output", out_path, "output file");
    cmd_basis->require_subcommand(1);

    // dual
    auto* cmd_dual = app.add_subcommand("dual", "dual code under a bilinear form");
    std::string code_path, form_text = "identity";
    cmd_dual->add_option("--code", code_path, "code JSON file (default stdin)");
    cmd_dual->add_option("--form", form_text, "identity | hyperbolic | form JSON file");
    cmd_dual->add_option("-o,--output", out_path, "output file");

    // expand
    auto* cmd_expand = app.add_subcommand("expand", "expand a Gabidulin code to a matrix code");
    std::string basis_spec;
    cmd_expand->add_option("--code", code_path, "code JSON file (default stdin)");
    cmd_expand->add_option("--basis", basis_spec,
                           "power | orthonormal | dual | basis JSON file (default power)");
    cmd_expand->add_option("--lambda", lambda_text, "element JSON for --basis dual");
    cmd_expand->add_option("-o,--output", out_path, "output file");

    // check
    auto* cmd_check = app.add_subcommand("check", "report code properties");
    bool assert_mrd = false, assert_self_dual = false, expect_delsarte = false;
    cmd_check->add_option("--code", code_path, "code JSON file (default stdin)");
    cmd_check->add_option("--form", form_text, "form for the --self-dual assertion");
    cmd_check->add_flag("--mrd", assert_mrd, "exit nonzero unless the code is MRD");
    cmd_check->add_flag("--self-dual", assert_self_dual,
                        "exit nonzero unless self-dual for --form");
    cmd_check->add_flag("--delsarte", expect_delsarte, "require the input to be a matrix code");
    cmd_check->add_option("--budget", budget, "enumeration budget");
    cmd_check->add_option("-o,--output", out_path, "output file");

    // verify-paper
    auto* cmd_verify = app.add_subcommand("verify-paper", "run a verification suite");
    std::string suite_name, report_path;
    verify::SuiteOptions opts;
    cmd_verify->add_option("--suite", suite_name, "suite name")->required();
    cmd_verify->add_option("--q-max", opts.q_max, "largest base field in grids");
    cmd_verify->add_option("--n-max", opts.n_max, "largest block length in grids");
    cmd_verify->add_option("--budget", opts.budget, "enumeration budget");
    cmd_verify->add_option("--trials", opts.trials, "randomized trial count");
    cmd_verify->add_option("--report", report_path, "write the report JSON here");

    app.parse(argc, argv);

    if (*cmd_field) {
        std::optional<std::vector<gf::u32>> bp;
        std::optional<std::vector<std::vector<gf::u32>>> tp;
        if (!base_poly_text.empty()) bp = parse_int_list(base_poly_text);
        if (!top_poly_text.empty()) {
            json j = json::parse(top_poly_text);
            std::vector<std::vector<gf::u32>> coeffs;
            for (const auto& c : j) {
                if (c.is_array()) {
                    std::vector<gf::u32> blk;
                    for (const auto& x : c) blk.push_back(x.get<gf::u32>());
                    coeffs.push_back(std::move(blk));
                } else {
                    coeffs.push_back({c.get<gf::u32>()});
                }
            }
            tp = std::move(coeffs);
        }
        gf::FieldTower t = gf::FieldTower::build(fp, fe, fm, std::move(bp), std::move(tp));
        write_output(io::field_to_json(t), out_path);
        return 0;
    }

    if (*cmd_construct) {
        codes::GabidulinCode C = [&]() {
            if (*sub_sd) return construct::self_dual_mrd_code(cq, cn, budget);
            if (*sub_lag) return construct::lagrangian_mrd_code(cq, cn, budget);
            json j = read_json_input(c0_path);
            gf::FieldTower t = io::field_from_json(j.at("field"));
            auto c0 = io::vector_from_json(t, j);
            return construct::gabidulin_code(t, c0, gk);
        }();
        write_output(io::code_to_json(C), out_path);
        return 0;
    }

    if (*cmd_basis) {
        gf::FieldTower t = io::field_from_json(read_json_input(field_path));
        if (*sub_on) {
            auto onb = construct::orthonormal_basis_twisted_trace(t);
            json j = io::basis_to_json(t, onb.alpha);
            j["lambda"] = io::element_to_json(t, onb.lambda);
            write_output(j, out_path);
        } else {
            codes::LBasis alpha = alpha_path.empty()
                                      ? codes::power_basis(t)
                                      : io::basis_from_json(t, read_json_input(alpha_path));
            gf::FieldElement lambda =
                lambda_text.empty() ? t.one(Level::Top)
                                    : io::element_from_json(t, Level::Top, json::parse(lambda_text));
            write_output(io::basis_to_json(t, construct::dual_basis(t, alpha, lambda)), out_path);
        }
        return 0;
    }

    if (*cmd_dual) {
        CodeInput in = load_code(code_path);
        const gf::FieldTower& t = in.gab ? in.gab->tower() : in.del->tower();
        std::size_t n = in.gab ? in.gab->n() : in.del->n();
        codes::BilinearFormSpec form =
            form_text == "identity" || form_text == "hyperbolic"
                ? io::form_from_json(t, n, json(form_text))
                : io::form_from_json(t, n, read_json_input(form_text));
        if (in.gab)
            write_output(io::code_to_json(codes::dual_code(*in.gab, form)), out_path);
        else
            write_output(io::delsarte_to_json(codes::delsarte_dual(*in.del, form)), out_path);
        return 0;
    }

    if (*cmd_expand) {
        CodeInput in = load_code(code_path);
        if (!in.gab) fail(Errc::InvalidArgument, "expand takes a Gabidulin code");
        const gf::FieldTower& t = in.gab->tower();
        codes::LBasis alpha = resolve_basis(t, basis_spec, lambda_text);
        write_output(io::delsarte_to_json(codes::to_delsarte(*in.gab, alpha)), out_path);
        return 0;
    }

    if (*cmd_check) {
        CodeInput in = load_code(code_path);
        if (expect_delsarte && !in.del) fail(Errc::InvalidArgument, "--delsarte expects a matrix code");
        json j;
        bool self_dual = false, lagrangian = false, mrd = false;
        if (in.gab) {
            const auto& C = *in.gab;
            const auto& t = C.tower();
            self_dual = codes::is_self_dual(C, codes::BilinearFormSpec::identity(t, C.n()));
            if (C.n() % 2 == 0)
                lagrangian = codes::is_self_dual(C, codes::BilinearFormSpec::hyperbolic(t, C.n()));
            std::size_t d1 = codes::rank_distance(C, budget);
            mrd = d1 == C.n() - C.dim() + 1;
            j["selfDual"] = self_dual;
            j["lagrangian"] = C.n() % 2 == 0 ? json(lagrangian) : json(nullptr);
            j["rankDistance"] = d1;
            j["mrd"] = mrd;
            j["singletonRHS"] = C.n() - C.dim() + 1;
        } else {
            const auto& D = *in.del;
            const auto& t = D.tower();
            self_dual = codes::delsarte_is_self_dual(D, codes::BilinearFormSpec::identity(t, D.n()));
            if (D.n() % 2 == 0)
                lagrangian =
                    codes::delsarte_is_self_dual(D, codes::BilinearFormSpec::hyperbolic(t, D.n()));
            std::size_t d1 = codes::delsarte_rank_distance(D, budget);
            mrd = D.m() * d1 == D.m() * (D.n() + 1) - D.dim();
            j["selfDual"] = self_dual;
            j["lagrangian"] = D.n() % 2 == 0 ? json(lagrangian) : json(nullptr);
            j["rankDistance"] = d1;
            j["mrd"] = mrd;
            std::size_t num = D.m() * (D.n() + 1) - D.dim();
            if (num % D.m() == 0)
                j["singletonRHS"] = num / D.m();
            else
                j["singletonRHS"] = static_cast<double>(num) / static_cast<double>(D.m());
        }
        write_output(j, out_path);
        bool wanted_self_dual = form_text == "hyperbolic" ? lagrangian : self_dual;
        if (assert_mrd && !mrd) return 1;
        if (assert_self_dual && !wanted_self_dual) return 1;
        return 0;
    }

    if (*cmd_verify) {
        verify::TheoremReport rep = verify::run_suite(suite_name, opts);
        std::cout << "suite " << rep.theorem << ": " << (rep.pass() ? "PASS" : "FAIL")
                  << " (instances=" << rep.instances_checked
                  << ", counterexamples=" << rep.counterexamples.size() << ")\n";
        for (const auto& c : rep.counterexamples) std::cout << "  counterexample: " << c << "\n";
        if (!report_path.empty()) write_output(io::report_to_json(rep), report_path);
        return rep.pass() ? 0 : 1;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError& e) {
        CLI::App app;
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const rmc::Error& e) {
        std::cerr << e.what() << "\n";
        return e.code() == rmc::Errc::PreconditionViolated ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
