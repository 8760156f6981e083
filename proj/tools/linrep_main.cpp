#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "linrep/cli.hpp"
#include "linrep/errors.hpp"

namespace {

// exit codes: 0 ok, 1 verification failed, 2 bad input, 3 rejected
// explicit x, 4 search budget exhausted, 70 internal invariant broken

int emit(const linrep::cli::CommandOutput& out, bool json) {
    if (out.csv) {
        // batch without --out: the CSV owns stdout, summary goes to stderr
        std::cout << *out.csv;
        std::cerr << out.human;
        return out.exit_code;
    }
    if (json) {
        std::cout << out.envelope.dump(2) << "\n";
    } else {
        std::cout << out.human;
    }
    return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"linear representations of functions on finite sets: "
                 "j(f(i)) = a * j(i) (mod m) with j injective"};
    app.require_subcommand(1);

    std::string fn_text;
    bool json = false;

    auto* repr = app.add_subcommand("repr", "construct and verify a linear representation");
    std::string repr_mode = "bound";
    std::string repr_x;
    repr->add_option("fn", fn_text, "image table, e.g. \"0,1,1\"")->required();
    auto* mode_opt = repr->add_option("--mode", repr_mode, "evaluation point selection")
                         ->check(CLI::IsMember({"bound", "tight"}));
    auto* x_opt = repr->add_option("--x", repr_x, "explicit evaluation point (positive integer)");
    mode_opt->excludes(x_opt);
    x_opt->excludes(mode_opt);
    repr->add_flag("--json", json, "emit the JSON envelope instead of text");

    auto* verify = app.add_subcommand("verify", "check a supplied (m, a, j) triple");
    std::string m_text, a_text, j_text;
    verify->add_option("fn", fn_text)->required();
    verify->add_option("--m", m_text, "modulus")->required();
    verify->add_option("--a", a_text, "multiplier")->required();
    verify->add_option("--j", j_text, "comma-separated embedding values")->required();
    verify->add_flag("--json", json);

    auto* charpoly = app.add_subcommand("charpoly",
                                        "characteristic polynomial and adjugate of xI - A");
    charpoly->add_option("fn", fn_text)->required();
    charpoly->add_flag("--json", json);

    auto* minimal = app.add_subcommand("minimal", "exhaustive search for the smallest modulus");
    std::string max_m_text = "64";
    minimal->add_option("fn", fn_text)->required();
    minimal->add_option("--max-m", max_m_text, "largest modulus to try (default 64)");
    minimal->add_flag("--json", json);

    auto* batch = app.add_subcommand("batch", "sweep all functions on n elements to CSV");
    std::size_t batch_n = 0;
    std::string batch_mode = "bound";
    bool with_minimal = false;
    std::string out_path;
    batch->add_option("--n", batch_n, "domain size")->required();
    batch->add_option("--mode", batch_mode)->check(CLI::IsMember({"bound", "tight"}));
    batch->add_flag("--with-minimal", with_minimal, "append a minimal_m column");
    auto* out_opt = batch->add_option("--out", out_path, "CSV path (default: stdout)");
    batch->add_flag("--json", json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        using namespace linrep::cli;
        if (repr->parsed()) {
            ReprOptions opt;
            if (!repr_x.empty()) {
                opt.explicit_x = parse_bigint(repr_x);
            } else {
                opt.mode = repr_mode == "tight" ? linrep::XChoice::Tight
                                                : linrep::XChoice::BoundDerived;
            }
            return emit(cmd_repr(fn_text, opt), json);
        }
        if (verify->parsed()) {
            return emit(cmd_verify(fn_text, m_text, a_text, j_text), json);
        }
        if (charpoly->parsed()) {
            return emit(cmd_charpoly(fn_text), json);
        }
        if (minimal->parsed()) {
            MinimalOptions opt;
            opt.max_m = parse_bigint(max_m_text);
            return emit(cmd_minimal(fn_text, opt), json);
        }
        if (batch->parsed()) {
            BatchOptions opt;
            opt.n = batch_n;
            opt.mode = batch_mode == "tight" ? linrep::XChoice::Tight
                                             : linrep::XChoice::BoundDerived;
            opt.with_minimal = with_minimal;
            if (*out_opt) opt.out_path = out_path;
            if (json && !opt.out_path) {
                throw linrep::input_error("batch --json needs --out so the CSV and the envelope "
                                          "do not share stdout");
            }
            return emit(cmd_batch(opt), json);
        }
    } catch (const linrep::chain_violation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const linrep::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const linrep::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
    return 2;
}
