// qrr: command-line front end for the q-series identity verification engine.
//
// Subcommands:
//   list                       print registry ids and anchors
//   verify --id ID [--order N] [--x R]
//   verify-all [--order N] [--jobs J]
//   expand EXPR [--order N] [--x R] [--format json|table]
//
// Exit codes: 0 all passed, 1 any verification failed, 2 usage error
// (including unknown identity ids and expression syntax errors).
// QRR_DEFAULT_ORDER overrides per-identity default orders; an explicit
// --order flag wins over the environment.

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "qrr/corpus.hpp"
#include "qrr/dsl.hpp"
#include "qrr/report.hpp"

namespace {

std::optional<int> env_default_order() {
    const char* v = std::getenv("QRR_DEFAULT_ORDER");
    if (v == nullptr || *v == '\0') return std::nullopt;
    try {
        return std::stoi(v);
    } catch (...) {
        return std::nullopt;
    }
}

int resolve_order(const std::optional<int>& flag, int registry_default) {
    if (flag) return *flag;
    if (auto e = env_default_order()) return *e;
    return registry_default;
}

std::optional<qrr::Rational> parse_rational(const std::string& s) {
    try {
        qrr::Rational r(s);
        r.canonicalize();
        return r;
    } catch (...) {
        return std::nullopt;
    }
}

int cmd_list() {
    for (const auto& rec : qrr::registry())
        std::printf("%-16s %s\n", rec.id.c_str(), rec.anchor.c_str());
    return 0;
}

int cmd_verify(const std::string& id, const std::optional<int>& order_flag,
               const std::string& x_str) {
    const qrr::IdentityRecord* rec;
    try {
        rec = &qrr::find_identity(id);
    } catch (const qrr::UnknownIdentity& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::optional<qrr::Rational> x;
    if (!x_str.empty()) {
        x = parse_rational(x_str);
        if (!x) {
            std::cerr << "error: invalid rational for --x: " << x_str << "\n";
            return 2;
        }
    }
    const int order = resolve_order(order_flag, rec->default_order);
    const auto rep = qrr::verify(id, order, x);
    std::cout << qrr::to_json(rep).dump() << "\n";
    return rep.status == "pass" ? 0 : 1;
}

int cmd_verify_all(const std::optional<int>& order_flag, unsigned jobs) {
    const auto& regs = qrr::registry();
    std::vector<qrr::VerificationReport> reports(regs.size());
    std::atomic<size_t> next{0};
    if (jobs == 0) jobs = 1;
    auto worker = [&] {
        while (true) {
            const size_t i = next.fetch_add(1);
            if (i >= regs.size()) break;
            reports[i] = qrr::verify(regs[i].id,
                                     resolve_order(order_flag, regs[i].default_order));
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t + 1 < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    bool all_pass = true;
    for (const auto& rep : reports) {
        std::cout << qrr::to_json(rep).dump() << "\n";
        if (rep.status != "pass") all_pass = false;
    }
    return all_pass ? 0 : 1;
}

int cmd_expand(const std::string& expr, const std::optional<int>& order_flag,
               const std::string& x_str, const std::string& format) {
    std::optional<qrr::Rational> x;
    if (!x_str.empty()) {
        x = parse_rational(x_str);
        if (!x) {
            std::cerr << "error: invalid rational for --x: " << x_str << "\n";
            return 2;
        }
    }
    const int order = resolve_order(order_flag, 32);
    try {
        const auto ast = qrr::dsl::parse(expr);
        const qrr::FormalSeries s = qrr::dsl::eval(ast, order, x);
        if (format == "json") {
            nlohmann::json j;
            j["expr"] = qrr::dsl::print(ast);
            j["order"] = order;
            nlohmann::json coeffs = nlohmann::json::array();
            for (int e = 0; e <= s.order(); ++e) coeffs.push_back(qrr::rational_str(s[e]));
            j["coefficients"] = coeffs;
            std::cout << j.dump() << "\n";
        } else {
            for (int e = 0; e <= s.order(); ++e)
                if (s[e] != 0)
                    std::printf("q^%-5d %s\n", e, qrr::rational_str(s[e]).c_str());
        }
        return 0;
    } catch (const qrr::SyntaxError& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qrr: exact q-series identity verification"};
    app.require_subcommand(1);

    auto* list = app.add_subcommand("list", "print registry ids and anchors");

    std::string id, x_str, expr, format = "table";
    std::optional<int> order_flag;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

    auto* verify = app.add_subcommand("verify", "verify one identity");
    verify->add_option("--id", id, "identity id")->required();
    verify->add_option("--order", order_flag, "truncation order");
    verify->add_option("--x", x_str, "rational x value (x-parametric identities only)");

    auto* verify_all = app.add_subcommand("verify-all", "verify the whole registry");
    verify_all->add_option("--order", order_flag, "truncation order");
    verify_all->add_option("--jobs", jobs, "number of parallel workers");

    auto* expand = app.add_subcommand("expand", "evaluate a DSL expression");
    expand->add_option("expr", expr, "expression")->required();
    expand->add_option("--order", order_flag, "truncation order");
    expand->add_option("--x", x_str, "rational x value");
    expand->add_option("--format", format, "output format: table|json")
        ->check(CLI::IsMember({"table", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (list->parsed()) return cmd_list();
    if (verify->parsed()) return cmd_verify(id, order_flag, x_str);
    if (verify_all->parsed()) return cmd_verify_all(order_flag, jobs);
    if (expand->parsed()) return cmd_expand(expr, order_flag, x_str, format);
    return 2;
}
