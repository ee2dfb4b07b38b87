#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "tambara/json_io.hpp"

namespace {

using tambara::json;

std::vector<tambara::BurnsideElement> read_elements(std::istream& in) {
    json j = json::parse(in);
    std::vector<tambara::BurnsideElement> xs;
    if (j.is_array()) {
        for (const auto& e : j) xs.push_back(tambara::element_from_json(e));
    } else {
        xs.push_back(tambara::element_from_json(j));
    }
    return xs;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::pair<tambara::Int, tambara::Int> parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return {tambara::Int(s), tambara::Int(1)};
    return {tambara::Int(s.substr(0, slash)), tambara::Int(s.substr(slash + 1))};
}

int run_eval(const std::string& op, long from, long to, bool direct) {
    auto xs = read_elements(std::cin);
    if (xs.empty()) throw std::invalid_argument("eval: no input element");
    if (from != 0 && xs[0].level().M != from) {
        throw std::invalid_argument("eval: --from does not match the element's level");
    }
    if (op == "mul") {
        if (xs.size() != 2) throw std::invalid_argument("eval --op mul: expected two elements");
        emit(tambara::element_to_json(xs[0] * xs[1]));
    } else if (op == "card") {
        emit(tambara::int_to_json(card(xs[0])));
    } else if (op == "res") {
        emit(tambara::element_to_json(restrict_to(xs[0], to)));
    } else if (op == "tr") {
        emit(tambara::element_to_json(transfer_to(xs[0], to)));
    } else if (op == "norm") {
        emit(tambara::element_to_json(norm_to(
            xs[0], to, direct ? tambara::NormRoute::direct : tambara::NormRoute::prime_chain)));
    } else {
        throw std::invalid_argument("eval: unknown --op '" + op + "'");
    }
    return 0;
}

tambara::CatalogParams gather_params(long N, long p, long depth, long tau, long pi, int case_) {
    tambara::CatalogParams params;
    params.N = N;
    params.p = p;
    params.depth = depth;
    params.tau = tau;
    params.pi = pi;
    params.twopower_case = case_;
    return params;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Burnside/GW Tambara functor calculator for cyclic extensions"};
    app.require_subcommand(1);

    std::string op, theorem, gens_path, rational;
    long q = 3, N = 1, p = 2, depth = 1, tau = -1, pi = -1, from = 0, to = 0;
    int twopower_case = 1;
    bool direct = false;

    auto* eval = app.add_subcommand("eval", "apply a structure map to JSON element(s) from stdin");
    eval->add_option("--op", op, "one of mul|res|tr|norm|card")->required();
    eval->add_option("--from", from, "source level (validated against the element)");
    eval->add_option("--to", to, "target level for res/tr/norm");
    eval->add_flag("--direct", direct, "norm: single composite-index recursion instead of prime chain");

    auto* dress = app.add_subcommand("dress", "apply the Dress map to a JSON element from stdin");
    dress->add_option("--q", q, "odd prime power")->required();
    dress->add_option("--N", N, "group order")->required();

    auto* kernel = app.add_subcommand("kernel", "print the Dress kernel ideal for F_{q^N}/F_q");
    kernel->add_option("--q", q, "odd prime power")->required();
    kernel->add_option("--N", N, "group order")->required();

    auto* saturate_cmd = app.add_subcommand("saturate", "saturate generators into a Tambara ideal");
    saturate_cmd->add_option("--N", N, "modulus")->required();
    saturate_cmd->add_option("--gens", gens_path, "JSON file with an array of elements")->required();

    auto* catalog = app.add_subcommand("catalog", "print a theorem's generator set");
    catalog->add_option("--theorem", theorem, "theorem id")->required();
    catalog->add_option("--N", N, "group order");
    catalog->add_option("--p", p, "prime for zp-truncated");
    catalog->add_option("--depth", depth, "truncation depth / bound");
    catalog->add_option("--tau", tau, "tau value");
    catalog->add_option("--pi", pi, "pi value");
    catalog->add_option("--case", twopower_case, "2-power case for general-cn");

    auto* verify = app.add_subcommand("verify", "verify a trace-ideal theorem, exit 0 iff it holds");
    verify->add_option("--theorem", theorem, "theorem id")->required();
    verify->add_option("--q", q, "odd prime power");
    verify->add_option("--N", N, "group order");
    verify->add_option("--p", p, "prime for zp-truncated");
    verify->add_option("--depth", depth, "truncation depth / bound");
    verify->add_option("--r", rational, "rational a/b for rational-quadratic");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (eval->parsed()) return run_eval(op, from, to, direct);
        if (dress->parsed()) {
            auto xs = read_elements(std::cin);
            if (xs.empty()) throw std::invalid_argument("dress: no input element");
            emit(gw_to_json(dress_map(xs[0], tambara::ExtensionSpec::finite(q, N))));
            return 0;
        }
        if (kernel->parsed()) {
            emit(ideal_to_json(trace_ideal(tambara::ExtensionSpec::finite(q, N))));
            return 0;
        }
        if (saturate_cmd->parsed()) {
            std::ifstream in(gens_path);
            if (!in) throw std::invalid_argument("saturate: cannot open " + gens_path);
            tambara::GeneratorSet gens = tambara::generators_from_json(json::parse(in));
            emit(ideal_to_json(tambara::saturate(N, gens)));
            return 0;
        }
        if (catalog->parsed()) {
            emit(generators_to_json(tambara::generator_catalog(
                theorem, gather_params(N, p, depth, tau, pi, twopower_case))));
            return 0;
        }
        if (verify->parsed()) {
            tambara::VerifyReport rep;
            if (theorem == "rational-quadratic") {
                auto [num, den] = parse_rational(rational);
                rep = tambara::verify_rational_quadratic(num, den);
            } else {
                rep = tambara::verify_theorem(theorem, q,
                                              gather_params(N, p, depth, tau, pi, twopower_case));
            }
            emit(report_to_json(rep));
            return rep.pass ? 0 : 1;
        }
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
