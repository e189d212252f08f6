// splitq: exact splitting-subspace counts, invariant-subspace generating
// functions, and Touchard crossing polynomials, with JSON output.
//
// Exit codes: 0 ok, 1 mismatch, 2 usage error, 3 budget exceeded.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "splitq/chords.hpp"
#include "splitq/invariants.hpp"
#include "splitq/json_io.hpp"
#include "splitq/oracle.hpp"
#include "splitq/qcomb.hpp"
#include "splitq/splitting.hpp"
#include "splitq/typesys.hpp"

namespace {

using namespace splitq;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

long long budget_from_env() {
    if (const char* env = std::getenv("SPLITQ_BUDGET")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kDefaultSubspaceBudget;
}

class Timer {
public:
    double seconds() const {
        return std::chrono::duration<double>(
                   std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ =
        std::chrono::steady_clock::now();
};

void emit(json report, const std::string& command, const Timer& timer,
          const std::string& status) {
    json out;
    out["command"] = command;
    out["status"] = status;
    for (auto& [k, v] : report.items()) out[k] = v;
    std::cout << out.dump(2) << "\n";
    // Timing goes to stderr so stdout stays byte-identical across runs.
    std::cerr << command << ": " << timer.seconds() << "s\n";
}

int cmd_types(int size) {
    Timer timer;
    auto types = types_of_size(size);
    json list = json::array();
    for (const auto& tau : types) list.push_back(format_type(tau));
    emit({{"inputs", {{"size", size}}}, {"count", types.size()}, {"types", list}},
         "types", timer, "ok");
    return kExitOk;
}

json sigma_row(const SimilarityClassType& tau, const std::string& method,
               const std::optional<Int>& eval_at, bool& all_match) {
    json row;
    row["type"] = format_type(tau);
    std::optional<UniPoly> main_poly, rec_poly;
    if (method == "main" || method == "both") main_poly = sigma_main(tau);
    if (method == "recurrence" || method == "both")
        rec_poly = sigma_via_recurrence(tau);
    const UniPoly& result = main_poly ? *main_poly : *rec_poly;
    row["sigma"] = unipoly_to_json(result);
    if (eval_at) row["value"] = int_to_json(result.eval(*eval_at));
    if (main_poly && rec_poly) {
        bool match = *main_poly == *rec_poly;
        row["match"] = match;
        if (!match) {
            row["sigma_recurrence"] = unipoly_to_json(*rec_poly);
            all_match = false;
        }
    }
    return row;
}

int cmd_sigma(const std::string& type_str, int all_of_size,
              const std::optional<Int>& eval_at, const std::string& method,
              bool csv) {
    Timer timer;
    json inputs{{"method", method}};
    if (eval_at) inputs["eval"] = int_to_json(*eval_at);
    bool all_match = true;
    json rows = json::array();
    if (!type_str.empty()) {
        inputs["type"] = type_str;
        rows.push_back(sigma_row(parse_type(type_str), method, eval_at, all_match));
    } else {
        inputs["all_of_size"] = all_of_size;
        for (const auto& tau : types_of_size(all_of_size))
            rows.push_back(sigma_row(tau, method, eval_at, all_match));
    }
    if (csv) {
        std::cout << "type,sigma" << (eval_at ? ",value" : "")
                  << (method == "both" ? ",match" : "") << "\n";
        for (const auto& row : rows) {
            std::cout << '"' << row.at("type").get<std::string>() << '"' << ","
                      << '"' << row.at("sigma").at("coeffs").dump() << '"';
            if (eval_at) std::cout << "," << row.at("value").dump();
            if (method == "both")
                std::cout << "," << (row.at("match").get<bool>() ? "true" : "false");
            std::cout << "\n";
        }
    } else {
        emit({{"inputs", inputs}, {"results", rows}}, "sigma", timer,
             all_match ? "ok" : "mismatch");
    }
    return all_match ? kExitOk : kExitMismatch;
}

int cmd_touchard(int m, const std::string& method) {
    Timer timer;
    json result;
    bool ok = true;
    std::optional<UniPoly> enum_p, refine_p, rhs_p;
    if (method == "enum" || method == "all") enum_p = touchard_enum(m);
    if (method == "refine" || method == "all") refine_p = touchard_refine(m);
    if (method == "rhs" || method == "all") rhs_p = touchard_riordan_rhs(m);
    if (enum_p) result["touchard_enum"] = unipoly_to_json(*enum_p);
    if (refine_p) result["touchard_refine"] = unipoly_to_json(*refine_p);
    if (rhs_p) result["touchard_riordan_rhs"] = unipoly_to_json(*rhs_p);
    if (method == "all") {
        UniPoly scaled = UniPoly({-1, 1}).pow(m) * *enum_p;
        ok = (*enum_p == *refine_p) && (scaled == *rhs_p);
        result["three_way_agreement"] = ok;
    }
    emit({{"inputs", {{"m", m}, {"method", method}}}, {"result", result}},
         "touchard", timer, ok ? "ok" : "mismatch");
    return ok ? kExitOk : kExitMismatch;
}

int cmd_invariants(const std::string& type_str) {
    Timer timer;
    auto prof = x_polys(parse_type(type_str));
    json xs = json::array();
    for (const auto& x : prof.X) xs.push_back(unipoly_to_json(x));
    emit({{"inputs", {{"type", type_str}}},
          {"n", prof.n},
          {"f_tau", bivar_to_json(prof.f)},
          {"X", xs}},
         "invariants", timer, "ok");
    return kExitOk;
}

int cmd_verify(int m, int q, long long budget) {
    Timer timer;
    int p = q, e = 1;
    for (int base = 2; base * base <= q; ++base)
        if (q % base == 0) {
            p = base;
            e = 0;
            int v = q;
            while (v > 1) {
                if (v % base != 0)
                    throw ParseError("q must be a prime power");
                v /= base;
                ++e;
            }
            break;
        }
    FqField field = make_field(p, e);
    int n = 2 * m;
    json rows = json::array();
    bool all_ok = true;
    for (const auto& tau : types_of_size(n)) {
        json row{{"type", format_type(tau)}};
        FqMatrix T(field, 0, 0);
        try {
            T = matrix_from_type(tau, field, budget);
        } catch (const NotRealizable&) {
            row["realizable"] = false;
            rows.push_back(row);
            continue;
        }
        row["realizable"] = true;
        UniPoly sigma = sigma_main(tau);
        Int expected = sigma.eval(q);
        long long counted = count_splitting(T, m, 2, budget);
        bool ok = (expected == counted);
        row["sigma_formula"] = int_to_json(expected);
        row["sigma_oracle"] = counted;
        auto prof = x_polys(tau);
        json xs = json::array();
        for (int j = 0; j <= n; ++j) {
            Int xf = prof.X[static_cast<size_t>(j)].eval(q);
            long long xo = count_invariant(T, j, budget);
            if (xf != xo) ok = false;
            xs.push_back(json{{"j", j}, {"formula", int_to_json(xf)}, {"oracle", xo}});
        }
        row["invariant_counts"] = xs;
        row["pass"] = ok;
        if (!ok) all_ok = false;
        rows.push_back(row);
    }
    emit({{"inputs", {{"m", m}, {"q", q}, {"budget", budget}}}, {"results", rows}},
         "verify", timer, all_ok ? "ok" : "mismatch");
    return all_ok ? kExitOk : kExitMismatch;
}

FqMatrix load_matrix(const std::string& matrix_file, const std::string& type_str,
                     int p, int e, long long budget) {
    if (!matrix_file.empty()) {
        std::ifstream in(matrix_file);
        if (!in) throw ParseError("cannot open matrix file: " + matrix_file);
        json j = json::parse(in);
        return matrix_from_json(j);
    }
    FqField field = make_field(p, e);
    return matrix_from_type(parse_type(type_str), field, budget);
}

int cmd_oracle(const std::string& op, const std::string& matrix_file,
               const std::string& type_str, int p, int e, int k, int d,
               long long budget) {
    Timer timer;
    FqMatrix T = load_matrix(matrix_file, type_str, p, e, budget);
    json inputs{{"op", op}};
    if (!matrix_file.empty()) inputs["matrix"] = matrix_file;
    else inputs["type"] = type_str, inputs["p"] = p, inputs["e"] = e;
    json result;
    if (op == "classify") {
        result["type"] = format_type(classify_matrix(T, budget));
    } else if (op == "count-splitting") {
        int n = T.rows();
        if (n % d != 0) throw DimensionMismatch("matrix size not divisible by d");
        result["m"] = n / d;
        result["d"] = d;
        result["count"] = count_splitting(T, n / d, d, budget);
    } else if (op == "count-invariant") {
        result["k"] = k;
        result["count"] = count_invariant(T, k, budget);
    }
    result["matrix"] = matrix_to_json(T);
    emit({{"inputs", inputs}, {"result", result}}, "oracle " + op, timer, "ok");
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact enumeration of splitting subspaces over finite fields"};
    app.require_subcommand(1);
    long long budget = budget_from_env();

    auto* types_cmd = app.add_subcommand("types", "list similarity class types");
    int types_size = 0;
    types_cmd->add_option("--size", types_size, "type size n")
        ->required()->check(CLI::Range(1, 12));

    auto* sigma_cmd = app.add_subcommand("sigma", "splitting-subspace counts");
    std::string sigma_type, sigma_eval, sigma_method = "main";
    int sigma_all = 0;
    auto* topt = sigma_cmd->add_option("--type", sigma_type, "type string, e.g. \"1:4\"");
    auto* aopt = sigma_cmd->add_option("--all-of-size", sigma_all, "all types of even size 2m")
        ->check(CLI::Range(2, 12));
    topt->excludes(aopt);
    sigma_cmd->add_option("--eval", sigma_eval, "evaluate at integer q");
    sigma_cmd->add_option("--method", sigma_method, "main|recurrence|both")
        ->check(CLI::IsMember({"main", "recurrence", "both"}));
    bool sigma_csv = false;
    sigma_cmd->add_flag("--csv", sigma_csv, "CSV table instead of JSON");

    auto* touch_cmd = app.add_subcommand("touchard", "crossing polynomials T_m(q)");
    int touch_m = 0;
    std::string touch_method = "refine";
    touch_cmd->add_option("--m", touch_m, "number of arcs")->required()
        ->check(CLI::Range(0, 12));
    touch_cmd->add_option("--method", touch_method, "enum|refine|rhs|all")
        ->check(CLI::IsMember({"enum", "refine", "rhs", "all"}));

    auto* inv_cmd = app.add_subcommand("invariants",
                                       "invariant-subspace generating function");
    std::string inv_type;
    inv_cmd->add_option("--type", inv_type, "type string")->required();

    auto* verify_cmd = app.add_subcommand("verify",
                                          "formula vs oracle for all types of size 2m");
    int verify_m = 0, verify_q = 0;
    long long verify_budget = budget;
    verify_cmd->add_option("--m", verify_m)->required()->check(CLI::Range(1, 4));
    verify_cmd->add_option("--q", verify_q, "prime power <= 64")->required()
        ->check(CLI::Range(2, 64));
    verify_cmd->add_option("--budget", verify_budget, "subspace sweep budget");

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force counts");
    oracle_cmd->require_subcommand(1);
    std::string oracle_matrix, oracle_type;
    int oracle_p = 2, oracle_e = 1, oracle_k = 0, oracle_d = 2;
    std::string op_names[] = {"count-splitting", "count-invariant", "classify"};
    for (const auto& name : op_names) {
        auto* sub = oracle_cmd->add_subcommand(name);
        sub->add_option("--matrix", oracle_matrix, "matrix JSON file");
        sub->add_option("--type", oracle_type, "type string (with --p/--e)");
        sub->add_option("--p", oracle_p, "field characteristic");
        sub->add_option("--e", oracle_e, "field extension degree");
        if (name == "count-invariant")
            sub->add_option("--k", oracle_k, "subspace dimension")->required();
        if (name == "count-splitting")
            sub->add_option("--d", oracle_d, "splitting degree")->check(CLI::Range(1, 8));
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (types_cmd->parsed()) return cmd_types(types_size);
        if (sigma_cmd->parsed()) {
            if (sigma_type.empty() && sigma_all == 0) {
                std::cerr << "sigma: need --type or --all-of-size\n";
                return kExitUsage;
            }
            std::optional<Int> eval_at;
            if (!sigma_eval.empty()) eval_at = Int(sigma_eval);
            return cmd_sigma(sigma_type, sigma_all, eval_at, sigma_method, sigma_csv);
        }
        if (touch_cmd->parsed()) return cmd_touchard(touch_m, touch_method);
        if (inv_cmd->parsed()) return cmd_invariants(inv_type);
        if (verify_cmd->parsed()) return cmd_verify(verify_m, verify_q, verify_budget);
        for (auto* sub : oracle_cmd->get_subcommands()) {
            if (oracle_matrix.empty() && oracle_type.empty()) {
                std::cerr << "oracle: need --matrix or --type\n";
                return kExitUsage;
            }
            return cmd_oracle(sub->get_name(), oracle_matrix, oracle_type, oracle_p,
                              oracle_e, oracle_k, oracle_d, budget);
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const OddSize& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const RangeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    }
    return kExitUsage;
}
