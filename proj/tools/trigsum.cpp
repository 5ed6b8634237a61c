// Command-line front end: verify catalog identities exactly or numerically,
// sweep parameter families, compute kernel residues and contour integrals,
// expand Gaussian period polynomials, and evaluate ad-hoc DSL expressions.
// One JSON record per line on stdout (CSV optional for sweeps); diagnostics
// on stderr. Exit codes: 0 all checks verified, 1 at least one failure,
// 2 usage / parse / hypothesis error.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "trigsum/catalog.hpp"
#include "trigsum/cyclotomy.hpp"
#include "trigsum/error.hpp"
#include "trigsum/eval_numeric.hpp"
#include "trigsum/kernels.hpp"

using json = nlohmann::ordered_json;
using namespace trigsum;

namespace {

int exit_code_for(Errc code) {
    switch (code) {
        case Errc::UnknownIdentity:
        case Errc::MissingParam:
        case Errc::HypothesisViolated:
        case Errc::ParseError:
        case Errc::InvalidArgument:
        case Errc::NotPrime:
        case Errc::WrongResidueClass:
        case Errc::CapExceeded:
        case Errc::UnboundVariable:
        case Errc::NonRationalAngle:
        case Errc::NonIntegerBound:
        case Errc::NonAlgebraicValue:
        case Errc::IndexCollision:
            return 2;
        default:
            return 1;
    }
}

unsigned default_digits() {
    if (const char* env = std::getenv("TRIGSUM_DIGITS")) {
        long v = std::atol(env);
        if (v >= 10 && v <= 1000) return static_cast<unsigned>(v);
    }
    return 40;
}

json param_json(const ParamMap& params) {
    json out = json::object();
    for (const auto& [name, value] : params) {
        if (fits_long(value))
            out[name] = to_long(value);
        else
            out[name] = value.str();
    }
    return out;
}

long elapsed_ms_since(const std::chrono::steady_clock::time_point& start) {
    auto now = std::chrono::steady_clock::now();
    return std::chrono::duration_cast<std::chrono::milliseconds>(now - start).count();
}

json record_json(const VerificationResult& r, long elapsed_ms) {
    json rec;
    rec["id"] = r.id;
    rec["params"] = param_json(r.params);
    rec["mode"] = to_string(r.mode);
    rec["status"] = to_string(r.status);
    rec["lhs"] = r.lhs_decimal;
    rec["rhs"] = r.rhs_decimal;
    rec["abs_diff"] = r.abs_diff.empty() ? json(nullptr) : json(r.abs_diff);
    rec["elapsed_ms"] = elapsed_ms;
    if (r.lhs_exact) rec["lhs_exact"] = *r.lhs_exact;
    if (r.rhs_exact) rec["rhs_exact"] = *r.rhs_exact;
    if (!r.message.empty()) rec["message"] = r.message;
    return rec;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    out += "\"";
    return out;
}

std::string record_csv(const json& rec) {
    std::string params;
    for (auto it = rec["params"].begin(); it != rec["params"].end(); ++it) {
        if (!params.empty()) params += ";";
        params += it.key() + "=" +
                  (it.value().is_string() ? it.value().get<std::string>() : it.value().dump());
    }
    auto field = [&](const char* key) -> std::string {
        if (!rec.contains(key) || rec[key].is_null()) return "";
        if (rec[key].is_string()) return rec[key].get<std::string>();
        return rec[key].dump();
    };
    return csv_escape(field("id")) + "," + csv_escape(params) + "," + field("mode") + "," +
           field("status") + "," + csv_escape(field("lhs")) + "," + csv_escape(field("rhs")) +
           "," + field("abs_diff") + "," + field("elapsed_ms");
}

struct Emitter {
    std::ostream* out = &std::cout;
    std::ofstream file;
    bool csv = false;
    bool header_written = false;

    void open(const std::string& path, bool as_csv) {
        csv = as_csv;
        if (!path.empty()) {
            file.open(path);
            if (!file) throw Error(Errc::InvalidArgument, "cannot open output file " + path);
            out = &file;
        }
    }

    void emit(const json& rec) {
        if (csv) {
            if (!header_written) {
                *out << "id,params,mode,status,lhs,rhs,abs_diff,elapsed_ms\n";
                header_written = true;
            }
            *out << record_csv(rec) << "\n";
        } else {
            *out << rec.dump() << "\n";
        }
    }
};

int status_to_exit(VerifyStatus s) {
    switch (s) {
        case VerifyStatus::Verified: return 0;
        case VerifyStatus::HypothesisViolated: return 2;
        default: return 1;
    }
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
    std::string id;
    std::vector<std::string> params;
    std::string mode;
    unsigned digits = 0;
    std::optional<long> n, j, k;
    std::string a, b, c;
};

void add_param_flags(CLI::App* cmd, VerifyArgs& args) {
    cmd->add_option("--n", args.n, "integer parameter n");
    cmd->add_option("--j", args.j, "integer parameter j");
    cmd->add_option("--k", args.k, "integer parameter k");
    cmd->add_option("--a", args.a, "rational parameter a");
    cmd->add_option("--b", args.b, "rational parameter b");
    cmd->add_option("--c", args.c, "rational parameter c");
    cmd->add_option("--param", args.params, "extra parameter as name=rational")
        ->type_name("NAME=VALUE");
}

ParamMap collect_params(const VerifyArgs& args) {
    ParamMap map;
    if (args.n) map.emplace("n", BigRational(*args.n));
    if (args.j) map.emplace("j", BigRational(*args.j));
    if (args.k) map.emplace("k", BigRational(*args.k));
    if (!args.a.empty()) map.emplace("a", parse_rational(args.a));
    if (!args.b.empty()) map.emplace("b", parse_rational(args.b));
    if (!args.c.empty()) map.emplace("c", parse_rational(args.c));
    for (const auto& entry : args.params) {
        auto eq = entry.find('=');
        if (eq == std::string::npos || eq == 0)
            throw Error(Errc::InvalidArgument, "--param expects name=rational, got " + entry);
        map.insert_or_assign(entry.substr(0, eq), parse_rational(entry.substr(eq + 1)));
    }
    return map;
}

VerifyMode pick_mode(const std::string& requested, const std::string& id, const ParamMap& params) {
    if (requested == "exact") return VerifyMode::Exact;
    if (requested == "numeric") return VerifyMode::Numeric;
    // Default: exact where the parameters permit.
    if (id == "T32") {
        for (const char* name : {"a", "b", "c"}) {
            auto it = params.find(name);
            if (it != params.end() && !is_integer(it->second)) return VerifyMode::Numeric;
        }
    }
    return VerifyMode::Exact;
}

int run_verify(const VerifyArgs& args) {
    ParamMap params = collect_params(args);
    VerifyMode mode = pick_mode(args.mode, args.id, params);
    unsigned digits = args.digits ? args.digits : default_digits();

    auto start = std::chrono::steady_clock::now();
    VerificationResult result = verify_instance(args.id, params, mode, digits);
    json rec = record_json(result, elapsed_ms_since(start));
    Emitter emitter;
    emitter.emit(rec);
    return status_to_exit(result.status);
}

// --- sweep -----------------------------------------------------------------

struct SweepArgs {
    std::string id;
    std::string range;
    bool all_j = false;
    std::optional<long> j;
    std::string mode;
    unsigned digits = 0;
    std::string out_path;
    std::string format = "jsonl";
};

std::pair<long, long> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos)
        throw Error(Errc::InvalidArgument, "range must look like LO..HI, got " + text);
    try {
        long lo = std::stol(text.substr(0, dots));
        long hi = std::stol(text.substr(dots + 2));
        if (lo > hi) throw Error(Errc::InvalidArgument, "empty range " + text);
        return {lo, hi};
    } catch (const std::invalid_argument&) {
        throw Error(Errc::InvalidArgument, "range must look like LO..HI, got " + text);
    }
}

int run_sweep(const SweepArgs& args) {
    find_identity(args.id); // UnknownIdentity early
    auto [lo, hi] = parse_range(args.range);
    unsigned digits = args.digits ? args.digits : default_digits();
    VerifyMode mode = (args.mode == "numeric") ? VerifyMode::Numeric : VerifyMode::Exact;

    Emitter emitter;
    emitter.open(args.out_path, args.format == "csv");

    int exit_code = 0;
    for (long n = lo; n <= hi; ++n) {
        std::vector<long> js;
        if (args.j) {
            ParamMap p{{"n", BigRational(n)}, {"j", BigRational(*args.j)}};
            if (validate_params(args.id, p)) js.push_back(*args.j);
        } else {
            js = admissible_j(args.id, n);
        }
        EvalCache cache; // angles repeat heavily across j at fixed n
        for (long j : js) {
            ParamMap p{{"n", BigRational(n)}, {"j", BigRational(j)}};
            auto start = std::chrono::steady_clock::now();
            VerificationResult result = verify_instance(args.id, p, mode, digits, &cache);
            emitter.emit(record_json(result, elapsed_ms_since(start)));
            exit_code = std::max(exit_code, status_to_exit(result.status));
        }
    }
    return exit_code;
}

// --- residue / contour -----------------------------------------------------

KernelSpec kernel_from_args(const std::string& name, long n) {
    auto id = kernel_from_name(name);
    if (!id)
        throw Error(Errc::InvalidArgument, "kernel must be hh2, hh7 or hh12, got " + name);
    return make_kernel(*id, n);
}

int run_residue(const std::string& kernel, long n, const std::string& pole_text,
                const std::string& radius_text, long points, unsigned digits) {
    KernelSpec spec = kernel_from_args(kernel, n);
    BigRational pole = parse_rational(pole_text);
    BigRational radius = parse_rational(radius_text);

    auto start = std::chrono::steady_clock::now();
    PrecisionGuard guard(digits + 15);
    ResidueResult res = residue_2pii(spec, pole, to_bigfloat(radius), points, digits);

    json rec;
    rec["id"] = "residue";
    rec["params"] = {{"kernel", kernel_name(spec.id)},
                     {"n", n},
                     {"pole", pole.str()},
                     {"radius", radius.str()}};
    rec["mode"] = "numeric";
    rec["status"] = "Computed";
    rec["lhs"] = to_decimal_string(res.value, digits);
    rec["rhs"] = nullptr;
    rec["abs_diff"] = nullptr;
    rec["elapsed_ms"] = elapsed_ms_since(start);
    rec["pole_order"] = res.assumed_order;
    rec["points"] = res.points_used;
    rec["convergence"] = res.convergence.str(6);
    Emitter().emit(rec);
    return 0;
}

int run_contour(const std::string& kernel, long n, const std::string& height_text,
                unsigned digits) {
    KernelSpec spec = kernel_from_args(kernel, n);
    BigRational height = parse_rational(height_text);

    auto start = std::chrono::steady_clock::now();
    PrecisionGuard guard(digits + 15);
    BigComplex value = rectangle_contour_integral(spec, to_bigfloat(height), digits);

    json rec;
    rec["id"] = "contour";
    rec["params"] = {{"kernel", kernel_name(spec.id)}, {"n", n}, {"height", height.str()}};
    rec["mode"] = "numeric";
    rec["status"] = "Computed";
    rec["lhs"] = to_decimal_string(value, digits);
    rec["rhs"] = nullptr;
    rec["abs_diff"] = to_decimal_string(abs(value), 6);
    rec["elapsed_ms"] = elapsed_ms_since(start);
    Emitter().emit(rec);
    return 0;
}

// --- cyclotomy ---------------------------------------------------------------

int run_cyclotomy(long p, bool emit_poly) {
    auto start = std::chrono::steady_clock::now();
    auto qr = quadratic_residues(p);
    PeriodPolyPair pair = period_polynomials(p);

    json rec;
    rec["id"] = "cyclotomy";
    rec["params"] = {{"p", p}};
    rec["mode"] = "exact";
    rec["status"] = "Verified"; // the constructing invariants are asserted
    rec["lhs"] = "Y(1)=" + poly::eval(pair.Y, BigInt(1)).str() +
                 ", Z(1)=" + poly::eval(pair.Z, BigInt(1)).str();
    rec["rhs"] = nullptr;
    rec["abs_diff"] = nullptr;
    rec["elapsed_ms"] = elapsed_ms_since(start);
    rec["quadratic_residues"] = qr;
    if (emit_poly) {
        std::vector<std::string> y, z;
        for (const auto& c : pair.Y) y.push_back(c.str());
        for (const auto& c : pair.Z) z.push_back(c.str());
        rec["Y"] = y;
        rec["Z"] = z;
    }
    if (p == 13) {
        UnitCertificate cert = verify_unit_identity();
        rec["unit"] = {{"A", cert.A.str()},
                       {"B", cert.B.str()},
                       {"P", to_decimal_string(cyclo_to_complex(cert.P, 30), 30)},
                       {"note", cert.note}};
    }
    Emitter().emit(rec);
    return 0;
}

// --- limits ------------------------------------------------------------------

int run_limits(const std::string& which, long k, unsigned digits) {
    auto start = std::chrono::steady_clock::now();
    BigFloat deviation = conjecture_deviation(k, which, digits);
    json rec;
    rec["id"] = which;
    rec["params"] = {{"k", k}};
    rec["mode"] = "numeric";
    rec["status"] = "Computed";
    rec["lhs"] = deviation.str(std::min(digits, 30u));
    rec["rhs"] = nullptr;
    rec["abs_diff"] = nullptr;
    rec["elapsed_ms"] = elapsed_ms_since(start);
    rec["limit"] = (which == "C31A") ? "-1/2" : "1/2";
    Emitter().emit(rec);
    return 0;
}

// --- eval --------------------------------------------------------------------

int run_eval(const std::string& expr_text, const std::vector<std::string>& param_list,
             const std::string& mode, unsigned digits) {
    ExprPtr expr = parse(expr_text);
    VerifyArgs fake;
    fake.params = param_list;
    ParamMap params = collect_params(fake);

    auto start = std::chrono::steady_clock::now();
    json rec;
    rec["id"] = "eval";
    rec["params"] = param_json(params);
    rec["mode"] = mode;
    rec["status"] = "Computed";

    if (mode == "numeric") {
        std::map<std::string, BigFloat> bindings;
        PrecisionGuard guard(digits + 15);
        for (const auto& [k, v] : params) bindings.emplace(k, to_bigfloat(v));
        BigComplex value = eval_numeric(expr, bindings, digits);
        rec["lhs"] = to_decimal_string(value, digits);
    } else {
        CycloElem value = eval_exact(expr, params);
        rec["lhs"] = to_decimal_string(cyclo_to_complex(value, std::min(digits, 30u)),
                                       std::min(digits, 30u));
        try {
            rec["lhs_exact"] = value.to_rational().str();
        } catch (const Error&) {
            rec["order"] = value.order();
        }
    }
    rec["rhs"] = nullptr;
    rec["abs_diff"] = nullptr;
    rec["elapsed_ms"] = elapsed_ms_since(start);

    // Keep the canonical key order in the emitted record.
    json ordered;
    for (const char* key : {"id", "params", "mode", "status", "lhs", "rhs", "abs_diff",
                            "elapsed_ms", "lhs_exact", "order"})
        if (rec.contains(key)) ordered[key] = rec[key];
    Emitter().emit(ordered);
    return 0;
}

// --- list --------------------------------------------------------------------

int run_list() {
    Emitter emitter;
    for (const auto& rec : list_identities()) {
        json j;
        j["id"] = rec.id;
        j["anchor"] = rec.anchor;
        json params = json::array();
        for (const auto& p : rec.params)
            params.push_back({{"name", p.name},
                              {"kind", p.kind == ParamKind::Integer ? "integer" : "rational"},
                              {"domain", p.domain}});
        j["params"] = params;
        j["hypothesis"] = rec.hypothesis_text;
        j["lhs"] = rec.lhs_text;
        j["rhs"] = rec.rhs_text;
        emitter.emit(j);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and numeric verification of finite trigonometric sum identities"};
    app.require_subcommand(1);

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "verify one catalog identity instance");
    verify_cmd->add_option("--id", verify_args.id, "identity id (see `list`)")->required();
    add_param_flags(verify_cmd, verify_args);
    verify_cmd->add_option("--mode", verify_args.mode, "exact|numeric")
        ->check(CLI::IsMember({"exact", "numeric"}));
    verify_cmd->add_option("--digits", verify_args.digits, "working precision (numeric mode)");

    SweepArgs sweep_args;
    auto* sweep_cmd = app.add_subcommand("sweep", "verify a family over a range of n");
    sweep_cmd->add_option("--id", sweep_args.id, "identity id (T21..T24)")->required();
    sweep_cmd->add_option("--n", sweep_args.range, "inclusive range LO..HI")->required();
    sweep_cmd->add_flag("--all-j", sweep_args.all_j, "all admissible j below 2n (default)");
    sweep_cmd->add_option("--j", sweep_args.j, "fix j instead of enumerating");
    sweep_cmd->add_option("--mode", sweep_args.mode, "exact|numeric")
        ->check(CLI::IsMember({"exact", "numeric"}));
    sweep_cmd->add_option("--digits", sweep_args.digits, "working precision (numeric mode)");
    sweep_cmd->add_option("--out", sweep_args.out_path, "write records to a file");
    sweep_cmd->add_option("--format", sweep_args.format, "jsonl|csv")
        ->check(CLI::IsMember({"jsonl", "csv"}));

    std::string res_kernel, res_pole, res_radius = "1/4";
    long res_n = 0, res_points = 16;
    unsigned res_digits = 0;
    auto* residue_cmd = app.add_subcommand("residue", "2*pi*i times a kernel residue");
    residue_cmd->add_option("--kernel", res_kernel, "hh2|hh7|hh12")->required();
    residue_cmd->add_option("--n", res_n, "kernel modulus n")->required();
    residue_cmd->add_option("--pole", res_pole, "pole location (rational)")->required();
    residue_cmd->add_option("--radius", res_radius, "circle radius (rational, <= 1/4)");
    residue_cmd->add_option("--points", res_points, "starting quadrature points (power of 2)");
    residue_cmd->add_option("--digits", res_digits, "working precision");

    std::string con_kernel, con_height;
    long con_n = 0;
    unsigned con_digits = 0;
    auto* contour_cmd = app.add_subcommand("contour", "rectangle contour integral of a kernel");
    contour_cmd->add_option("--kernel", con_kernel, "hh2|hh7|hh12")->required();
    contour_cmd->add_option("--n", con_n, "kernel modulus n")->required();
    contour_cmd->add_option("--height", con_height, "half-height N of the rectangle")->required();
    contour_cmd->add_option("--digits", con_digits, "working precision");

    long cyc_p = 0;
    bool cyc_emit = false;
    auto* cyc_cmd = app.add_subcommand("cyclotomy", "Gaussian period polynomials Y, Z");
    cyc_cmd->add_option("--p", cyc_p, "prime = 1 mod 4")->required();
    cyc_cmd->add_flag("--emit-poly", cyc_emit, "emit Y and Z coefficient vectors");

    std::string lim_which;
    long lim_k = 0;
    unsigned lim_digits = 0;
    auto* lim_cmd = app.add_subcommand("limits", "distance of the partial sums from the limit");
    lim_cmd->add_option("--which", lim_which, "C31A|C31B")
        ->required()
        ->check(CLI::IsMember({"C31A", "C31B"}));
    lim_cmd->add_option("--k", lim_k, "index k >= 1")->required();
    lim_cmd->add_option("--digits", lim_digits, "working precision");

    std::string eval_expr, eval_mode = "exact";
    std::vector<std::string> eval_params;
    unsigned eval_digits = 0;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a DSL expression");
    eval_cmd->add_option("--expr", eval_expr, "expression text")->required();
    eval_cmd->add_option("--param", eval_params, "binding as name=rational")
        ->type_name("NAME=VALUE");
    eval_cmd->add_option("--mode", eval_mode, "exact|numeric")
        ->check(CLI::IsMember({"exact", "numeric"}));
    eval_cmd->add_option("--digits", eval_digits, "working precision");

    auto* list_cmd = app.add_subcommand("list", "print the identity catalog with anchors");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify_cmd->parsed()) return run_verify(verify_args);
        if (sweep_cmd->parsed()) return run_sweep(sweep_args);
        if (residue_cmd->parsed())
            return run_residue(res_kernel, res_n, res_pole, res_radius, res_points,
                               res_digits ? res_digits : default_digits());
        if (contour_cmd->parsed())
            return run_contour(con_kernel, con_n, con_height,
                               con_digits ? con_digits : default_digits());
        if (cyc_cmd->parsed()) return run_cyclotomy(cyc_p, cyc_emit);
        if (lim_cmd->parsed())
            return run_limits(lim_which, lim_k, lim_digits ? lim_digits : default_digits());
        if (eval_cmd->parsed())
            return run_eval(eval_expr, eval_params, eval_mode,
                            eval_digits ? eval_digits : default_digits());
        if (list_cmd->parsed()) return run_list();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
